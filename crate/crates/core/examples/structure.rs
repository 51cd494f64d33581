// How the group behaves under the natural operations on f: splitting into
// multiplicity layers, taking powers, and translating.

use std::error::Error;

use ideal_aut::autgroup::{compute_aut, layer_intersection, power_reduce, shift_conjugate};
use ideal_aut::cli::parse_poly;
use ideal_aut::poly::squarefree_decomposition;
use ideal_aut::ring::Ring;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let q = Ring::Rationals;

    let f = parse_poly("(t^2 - 1)^2 * t^3", q)?;
    let sqf = squarefree_decomposition(&f)?;
    for (layer, m) in sqf.layers() {
        println!("layer of multiplicity {m}: {layer}");
    }
    let whole = compute_aut(&f)?;
    assert!(whole.same_elements(&layer_intersection(&f)?));
    println!("Aut of {f} has order {}", whole.order().unwrap_or(0));

    let g = parse_poly("t^3 - 2*t + 5", q)?;
    let g3 = g.pow(3);
    let (root, k) = power_reduce(&g3)?;
    assert_eq!((&root, k), (&g, 3));
    assert!(compute_aut(&g3)?.same_elements(&compute_aut(&g)?));
    println!("{g3} = ({root})^{k}, same group as its root");

    let h = parse_poly("t^2 - 1", q)?;
    let s = q.int(5);
    let moved = h.shift(&q.int(-5)); // roots move from +-1 to 4 and 6
    let predicted = shift_conjugate(&compute_aut(&h)?, &s);
    assert!(predicted.same_elements(&compute_aut(&moved)?));
    let elems: Vec<String> = predicted
        .enumerate()
        .unwrap_or_default()
        .iter()
        .map(|a| a.to_string())
        .collect();
    println!("after shifting by 5: {}", elems.join(" "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
