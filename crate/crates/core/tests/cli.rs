//! The command-line front end, both through the library and as a process.

use std::io::Write;
use std::process::{Command as Process, Stdio};

use ideal_aut::cli::{run, Command, GroupRecord, OutputRecord, PairRecord, Request};
use ideal_aut::ring::Ring;

const BIN: &str = env!("CARGO_BIN_EXE_ideal-aut");

fn invoke(args: &[&str]) -> (String, String, i32) {
    let out = Process::new(BIN).args(args).output().expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

fn json(args: &[&str]) -> (OutputRecord, i32) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let (stdout, _, code) = invoke(&all);
    (serde_json::from_str(stdout.trim()).expect("one JSON record"), code)
}

#[test]
fn integer_reflection() {
    let (rec, code) = json(&["--ring", "Z", "aut", "t^2-1"]);
    assert_eq!(code, 0);
    assert_eq!(
        rec.group,
        Some(GroupRecord::Finite {
            order: 2,
            cyclic: true,
            generator: Some(PairRecord::new("-1", "0")),
            elements: vec![PairRecord::new("1", "0"), PairRecord::new("-1", "0")],
        })
    );
}

#[test]
fn single_root_over_q() {
    let (rec, _) = json(&["--ring", "Q", "aut", "(t-3)^4"]);
    assert_eq!(rec.group, Some(GroupRecord::UnitsOfR { fixed_point: "3".into() }));
    let (stdout, _, _) = invoke(&["--ring", "Q", "--format", "json", "aut", "(t-3)^4"]);
    assert!(stdout.contains(r#""group":{"kind":"units_of_R","fixed_point":"3"}"#));
    assert!(!stdout.contains("elements"));
}

#[test]
fn full_affine_group_over_f3() {
    let (rec, code) = json(&["--ring", "F3", "aut", "t^3-t"]);
    assert_eq!(code, 0);
    let Some(GroupRecord::Finite { order, cyclic, .. }) = rec.group else {
        panic!("finite group expected");
    };
    assert_eq!((order, cyclic), (6, false));
    assert_eq!(rec.permutations.unwrap().len(), 6);
}

#[test]
fn iso_and_all_witnesses() {
    let (rec, _) = json(&["--ring", "Q", "iso", "t^2-1", "t^2-2*t"]);
    let w = rec.witness.unwrap();
    assert_eq!((w.alpha.as_str(), w.beta.as_str(), w.lambda.as_str()), ("1", "-1", "1"));

    let (rec, _) = json(&["--ring", "Q", "--all-witnesses", "iso", "t^2-1", "t^2-2*t"]);
    assert_eq!(rec.witnesses.unwrap().len(), 2);

    let (rec, code) = json(&["--ring", "Z", "iso", "t^2-4", "t^2-1"]);
    assert_eq!((rec.isomorphic, code), (Some(false), 0));
}

#[test]
fn factors_verify_and_oracle() {
    let (rec, _) = json(&["--ring", "F7", "factors", "(t-3)^2*(t^2+1)"]);
    let factors = rec.factors.unwrap();
    assert_eq!(factors.len(), 2);
    assert_eq!(rec.roots.unwrap()[0].factor, "3");

    let (rec, _) = json(&["--ring", "F7", "verify", "t^2-1", "6,0"]);
    assert_eq!(rec.verified, Some(true));

    let (rec, _) = json(&["--ring", "F5", "oracle-compare", "(t-2)^4"]);
    assert!(rec.oracle.unwrap().agree);
}

#[test]
fn text_output() {
    let (stdout, _, code) = invoke(&["--ring", "Q", "aut", "t^2-1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("f = t^2 - 1"));
    assert!(stdout.contains("order 2, cyclic, generated by (-1, 0)"));
}

#[test]
fn exit_codes() {
    let (_, stderr, code) = invoke(&["--ring", "Q", "aut", "t^2 +"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("SyntaxError"));
    assert_eq!(invoke(&["--ring", "Z", "aut", "t/2"]).2, 2);
    assert_eq!(invoke(&["--ring", "F4", "aut", "t"]).2, 2);
    assert_eq!(invoke(&["--ring", "Z", "aut", "2*t^2"]).2, 3);
    assert_eq!(invoke(&["--ring", "Q", "aut", "5"]).2, 3);
    assert_eq!(invoke(&["--ring", "F103", "oracle-compare", "t"]).2, 3);
    assert_eq!(invoke(&["--ring", "Q", "factors", "t"]).2, 3);
    assert_eq!(invoke(&["--ring", "Z", "verify", "t^2-1", "2,0"]).2, 3);
    let (rec, code) = json(&["--ring", "Q", "aut", "t^2 +"]);
    assert_eq!(code, 2);
    let e = rec.error.unwrap();
    assert_eq!((e.code.as_str(), e.exit_code), ("SyntaxError", 2));
}

#[test]
fn stdin_and_batch() {
    let mut child = Process::new(BIN)
        .args(["--ring", "Q", "--format", "json", "aut", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"t^2 - 1\n").unwrap();
    let out = child.wait_with_output().unwrap();
    let rec: OutputRecord = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rec.input, vec!["t^2 - 1"]);

    let dir = std::env::temp_dir().join(format!("ideal-aut-batch-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("requests.jsonl");
    std::fs::write(
        &file,
        concat!(
            r#"{"command":"aut","ring":"F3","inputs":["t^3-t"]}"#, "\n",
            r#"{"command":"iso","ring":"Q","inputs":["t^2-1"]}"#, "\n",
            r#"{"command":"factors","ring":"F5","inputs":["t^4-1"]}"#, "\n",
        ),
    )
    .unwrap();
    let (stdout, _, code) = invoke(&["batch", file.to_str().unwrap()]);
    assert_eq!(code, 2);
    let records: Vec<OutputRecord> =
        stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 3);
    assert_eq!(records[0].command, "aut");
    assert_eq!(records[1].error.as_ref().unwrap().code, "ArityError");
    assert_eq!(records[2].factors.as_ref().unwrap().len(), 4);

    let (stdout2, _, _) = invoke(&["--batch", file.to_str().unwrap()]);
    assert_eq!(stdout, stdout2);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn records_round_trip_through_json() {
    for (cmd, ring, inputs) in [
        (Command::Aut, Ring::prime_field(7).unwrap(), vec!["t^3-2"]),
        (Command::Iso, Ring::Rationals, vec!["(t-3)^4", "t^4"]),
        (Command::OracleCompare, Ring::prime_field(3).unwrap(), vec!["t^3-t"]),
    ] {
        let mut req = Request::new(cmd, ring, &inputs);
        req.options.all_witnesses = true;
        let rec = run(&req).unwrap();
        let back: OutputRecord = serde_json::from_str(&rec.to_json()).unwrap();
        assert_eq!(back, rec);
    }
}
