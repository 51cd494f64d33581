// Reading polynomials from text, canonical printing, and the JSON records
// produced by the command-line front end.

use std::error::Error;

use ideal_aut::cli::{parse_poly, run, run_to_record, Command, Request};
use ideal_aut::ring::Ring;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (ring, text) in [
        (Ring::Rationals, "(t-1)^2*(t+2)"),
        (Ring::Rationals, "-1/2*t^2 + 3/4"),
        (Ring::Integers, "(2*t + 4)/2"),
        (Ring::prime_field(7)?, "t^2 - 1"),
    ] {
        let f = parse_poly(text, ring)?;
        // canonical text parses back to the same polynomial
        assert_eq!(parse_poly(&f.to_string(), ring)?, f);
        println!("{ring}: {text:<16} => {f}");
    }

    for bad in ["t^2 +", "2t", "t/(t+1)"] {
        let err = parse_poly(bad, Ring::Rationals).unwrap_err();
        println!("{bad:<10} {err}");
    }
    println!("{}", parse_poly("t/2", Ring::Integers).unwrap_err());

    let record = run(&Request::new(Command::Aut, Ring::Integers, &["t^2 - 1"]))?;
    println!("{}", record.to_json());
    let (failed, code) = run_to_record(&Request::new(Command::Aut, Ring::Integers, &["2*t^2"]));
    println!("exit {code}: {}", failed.to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
