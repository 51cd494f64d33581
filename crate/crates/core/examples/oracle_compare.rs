// Cross-checks the structural computation against exhaustive enumeration
// on random polynomials over small prime fields.

use std::error::Error;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ideal_aut::autgroup::compute_aut;
use ideal_aut::oracle::enumerate_auts;
use ideal_aut::poly::Poly;
use ideal_aut::ring::Ring;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut nontrivial = 0;
    for p in [3u64, 5, 7, 11] {
        let ring = Ring::prime_field(p)?;
        for _ in 0..50 {
            let n = rng.gen_range(2..=6);
            let mut coeffs: Vec<i64> = (0..n).map(|_| rng.gen_range(0..p as i64)).collect();
            coeffs.push(1);
            let f = Poly::from_ints(ring, &coeffs);

            let mine = compute_aut(&f)?.enumerate().expect("finite field");
            let brute = enumerate_auts(&f)?;
            assert_eq!(mine, brute.elements, "disagreement on {f} over {ring}");
            if brute.order > 1 {
                nontrivial += 1;
            }
        }
    }
    println!("200 random polynomials agree with brute force ({nontrivial} with nontrivial groups)");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
