// In characteristic p the automorphism group need not be cyclic.
// Over F_3, `t^3 - t` vanishes on the whole field, so every affine map
// preserves it and the group is the full affine group, isomorphic to S_3.

use std::error::Error;

use ideal_aut::autgroup::compute_aut;
use ideal_aut::cli::parse_poly;
use ideal_aut::factor_fp::root_permutation;
use ideal_aut::oracle::enumerate_auts;
use ideal_aut::ring::Ring;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let f = parse_poly("t^3 - t", Ring::prime_field(3)?)?;
    let group = compute_aut(&f)?;
    let finite = group.as_finite().ok_or("expected a finite group")?;
    println!("Aut(({f})) over F3 has order {}", finite.order());
    println!("cyclic: {}", finite.is_cyclic());

    for (a, k) in finite.element_orders() {
        let sigma = root_permutation(&f, a)?;
        let images: Vec<String> = sigma
            .entries()
            .iter()
            .map(|e| format!("{}->{}", e.root, e.image))
            .collect();
        println!("  {a}  order {k}  roots {}", images.join(" "));
    }

    let oracle = enumerate_auts(&f)?;
    assert_eq!(oracle.elements, finite.elements());
    assert!(!oracle.cyclic);
    println!("brute force agrees");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
