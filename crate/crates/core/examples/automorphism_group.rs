// Automorphism groups of principal ideals over Z, Q and F_p.
//
// Run with `cargo run --example automorphism_group`.

use std::error::Error;

use ideal_aut::autgroup::{compute_aut, verify_aut, AutGroup};
use ideal_aut::cli::parse_poly;
use ideal_aut::ring::Ring;

fn describe(group: &AutGroup) -> String {
    match group {
        AutGroup::UnitsOfR { fixed_point } => {
            format!("every dilation t -> alpha*t + (1 - alpha)*{fixed_point}")
        }
        AutGroup::Finite(g) => {
            let elems: Vec<String> = g.elements().iter().map(|a| a.to_string()).collect();
            let shape = if g.is_cyclic() { "cyclic" } else { "not cyclic" };
            format!("order {} ({shape}): {}", g.order(), elems.join(" "))
        }
    }
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let f7 = Ring::prime_field(7)?;
    let cases = [
        (Ring::Integers, "t^2 - 1"),
        (Ring::Rationals, "t^3 - 3*t + 2"),
        (Ring::Rationals, "(t - 3)^4"),
        (Ring::Rationals, "t^4 + t^2 + t"),
        (f7, "t^3 - 2"),
        (f7, "t^6 + 3"),
    ];
    for (ring, text) in cases {
        let f = parse_poly(text, ring)?;
        let group = compute_aut(&f)?;
        println!("{ring}  {f}\n    {}", describe(&group));

        // each listed element really preserves the ideal
        if let Some(elements) = group.enumerate() {
            for a in &elements {
                assert!(verify_aut(&f, a)?);
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
