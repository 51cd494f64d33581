// Deciding whether two principal ideals are related by an affine change of
// variable, with explicit witnesses.

use std::error::Error;

use ideal_aut::autgroup::{iso_test, iso_witnesses, WitnessSet};
use ideal_aut::cli::parse_poly;
use ideal_aut::ring::Ring;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let pairs = [
        (Ring::Rationals, "t^2 - 1", "t^2 - 2*t"),
        // a non-torsion scaling: alpha = 2 works over Q but not over Z
        (Ring::Rationals, "t^2 - 4", "t^2 - 1"),
        (Ring::Integers, "t^2 - 4", "t^2 - 1"),
        (Ring::Rationals, "t^3 - 8", "t^3 + 1"),
        (Ring::prime_field(7)?, "t^3 - 1", "t^3 - 6"),
        (Ring::prime_field(7)?, "t^3 - 1", "t^3 - 2"),
        (Ring::Rationals, "(t - 3)^4", "t^4"),
    ];
    for (ring, f, g) in pairs {
        let (f, g) = (parse_poly(f, ring)?, parse_poly(g, ring)?);
        print!("{ring}: ({f}) vs ({g}): ");
        let Some(w) = iso_test(&f, &g)? else {
            println!("not isomorphic");
            continue;
        };
        println!("witness {} with lambda = {}", w.map, w.lambda);
        // f(alpha t + beta) = lambda g
        assert_eq!(w.map.apply(&f)?, g.scale(&w.lambda));

        match iso_witnesses(&f, &g)?.expect("already found one") {
            WitnessSet::Finite(all) => println!("    witnesses in total: {}", all.len()),
            WitnessSet::Family { target_fixed_point, .. } => {
                println!("    infinitely many, one per dilation about {target_fixed_point}")
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
