// Factoring over prime fields and watching automorphisms permute roots and
// irreducible factors.

use std::error::Error;

use ideal_aut::autgroup::compute_aut;
use ideal_aut::cli::parse_poly;
use ideal_aut::factor_fp::{factor, root_permutation, DEFAULT_SEED};
use ideal_aut::ring::Ring;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let f7 = Ring::prime_field(7)?;
    let f = parse_poly("(t^2 + 1)*(t^2 + 4)*(t - 3)^2", f7)?;
    let fac = factor(&f, DEFAULT_SEED)?;
    println!("{f} over F7");
    for (p, e) in fac.factors() {
        println!("  ({p})^{e}");
    }
    assert_eq!(fac.expand(f7), f);

    // three irreducible quadratics (this is t^6 + 1); scaling by alpha with
    // alpha^2 = 2 cycles them
    let g = parse_poly("(t^2 + 1)*(t^2 + 2)*(t^2 + 4)", f7)?;
    let group = compute_aut(&g)?;
    for a in group.enumerate().unwrap_or_default() {
        let sigma = root_permutation(&g, &a)?;
        let moves: Vec<String> = sigma
            .factor_images()
            .iter()
            .map(|m| format!("({}) -> ({})", m.factor, m.image))
            .collect();
        println!("  {a}: {}", moves.join(", "));
    }

    // a split polynomial: the permutation of roots is a homomorphism
    let h = parse_poly("t^3 - 1", f7)?;
    let elems = compute_aut(&h)?.enumerate().unwrap_or_default();
    for a in &elems {
        for b in &elems {
            let lhs = root_permutation(&h, &a.compose(b))?;
            let rhs = root_permutation(&h, a)?.then(&root_permutation(&h, b)?);
            assert_eq!(lhs.entries(), rhs.entries());
        }
    }
    let roots: Vec<String> = factor(&h, DEFAULT_SEED)?
        .roots()
        .iter()
        .map(|(r, _)| r.to_string())
        .collect();
    println!("roots of {h}: {}", roots.join(", "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
