//! Request dispatch and output records shared by the `ideal-aut` binary and
//! batch mode.

mod parse;
mod record;

use std::io::{BufRead, Write};
use std::str::FromStr;

use serde::Deserialize;

pub use parse::parse_poly;
pub use record::{
    ErrorRecord, FactorRecord, GroupRecord, OracleRecord, OutputRecord, PairRecord,
    PermutationRecord, RootMapRecord, WitnessFamilyRecord, WitnessRecord, SCHEMA,
};

use crate::autgroup::{compute_aut, iso_test, iso_witnesses, verify_aut, AffineAut, AutGroup};
use crate::error::{Error, Result};
use crate::factor_fp::{self, factor, root_permutation};
use crate::oracle::{enumerate_auts_with, OracleBounds};
use crate::poly::Poly;
use crate::ring::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Aut,
    Iso,
    Factors,
    Verify,
    OracleCompare,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Aut => "aut",
            Command::Iso => "iso",
            Command::Factors => "factors",
            Command::Verify => "verify",
            Command::OracleCompare => "oracle-compare",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Command::Aut | Command::Factors | Command::OracleCompare => 1,
            Command::Iso | Command::Verify => 2,
        }
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Command> {
        Ok(match s {
            "aut" => Command::Aut,
            "iso" => Command::Iso,
            "factors" => Command::Factors,
            "verify" => Command::Verify,
            "oracle-compare" => Command::OracleCompare,
            other => {
                return Err(Error::Syntax {
                    position: 0,
                    message: format!("unknown command '{other}'"),
                })
            }
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub format: OutputFormat,
    pub seed: u64,
    pub all_witnesses: bool,
    pub bounds: OracleBounds,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            format: OutputFormat::Text,
            seed: factor_fp::DEFAULT_SEED,
            all_witnesses: false,
            bounds: OracleBounds::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Request {
    pub command: Command,
    pub ring: Ring,
    pub inputs: Vec<String>,
    pub options: Options,
}

impl Request {
    pub fn new(command: Command, ring: Ring, inputs: &[&str]) -> Request {
        Request {
            command,
            ring,
            inputs: inputs.iter().map(|s| s.to_string()).collect(),
            options: Options::default(),
        }
    }
}

/// One line of a batch file.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BatchLine {
    command: String,
    ring: String,
    inputs: Vec<String>,
    #[serde(default)]
    seed: Option<u64>,
    #[serde(default)]
    all_witnesses: bool,
    #[serde(default)]
    max_p: Option<u32>,
    #[serde(default)]
    max_deg: Option<usize>,
}

impl BatchLine {
    fn into_request(self, defaults: &Options) -> Result<Request> {
        let mut options = defaults.clone();
        options.format = OutputFormat::Json;
        if let Some(seed) = self.seed {
            options.seed = seed;
        }
        options.all_witnesses |= self.all_witnesses;
        if let Some(p) = self.max_p {
            options.bounds.max_p = p;
        }
        if let Some(d) = self.max_deg {
            options.bounds.max_deg = d;
        }
        Ok(Request {
            command: self.command.parse()?,
            ring: self.ring.parse()?,
            inputs: self.inputs,
            options,
        })
    }
}

/// Executes a request.
pub fn run(request: &Request) -> Result<OutputRecord> {
    let command = request.command;
    if request.inputs.len() != command.arity() {
        return Err(Error::Arity {
            command: command.name().into(),
            expected: command.arity(),
            got: request.inputs.len(),
        });
    }
    let ring = request.ring;
    let f = parse_poly(&request.inputs[0], ring)?;
    let mut record = OutputRecord::new(command.name(), ring);
    record.input.push(f.to_string());

    match command {
        Command::Aut => {
            let group = compute_aut(&f)?;
            if ring.is_finite() {
                if let Some(fin) = group.as_finite() {
                    let perms = fin
                        .elements()
                        .iter()
                        .map(|a| Ok(PermutationRecord::new(a, &root_permutation(&f, a)?)))
                        .collect::<Result<Vec<_>>>()?;
                    record.permutations = Some(perms);
                }
            }
            record.group = Some(GroupRecord::from(&group));
        }
        Command::Iso => {
            let g = parse_poly(&request.inputs[1], ring)?;
            record.input.push(g.to_string());
            let witness = iso_test(&f, &g)?;
            record.isomorphic = Some(witness.is_some());
            record.witness = witness.as_ref().map(WitnessRecord::from);
            if request.options.all_witnesses && witness.is_some() {
                match iso_witnesses(&f, &g)?.expect("isomorphic") {
                    crate::autgroup::WitnessSet::Finite(ws) => {
                        record.witnesses = Some(ws.iter().map(WitnessRecord::from).collect());
                    }
                    crate::autgroup::WitnessSet::Family {
                        first,
                        target_fixed_point,
                    } => {
                        record.witness_family = Some(WitnessFamilyRecord {
                            first: WitnessRecord::from(&first),
                            target_fixed_point: target_fixed_point.to_string(),
                        });
                    }
                }
            }
        }
        Command::Factors => {
            let fac = factor(&f, request.options.seed)?;
            record.factors = Some(
                fac.factors()
                    .iter()
                    .map(|(p, e)| FactorRecord {
                        factor: p.to_string(),
                        multiplicity: *e,
                    })
                    .collect(),
            );
            record.roots = Some(
                fac.roots()
                    .iter()
                    .map(|(r, e)| FactorRecord {
                        factor: r.to_string(),
                        multiplicity: *e,
                    })
                    .collect(),
            );
        }
        Command::Verify => {
            let a = parse_pair(&request.inputs[1], ring)?;
            record.input.push(format!("{},{}", a.alpha(), a.beta()));
            let ok = verify_aut(&f, &a)?;
            record.verified = Some(ok);
            if ok && ring.is_finite() {
                record.permutations = Some(vec![PermutationRecord::new(&a, &root_permutation(&f, &a)?)]);
            }
        }
        Command::OracleCompare => {
            let report = enumerate_auts_with(&f, request.options.bounds)?;
            let group = compute_aut(&f)?;
            record.oracle = Some(OracleRecord::compare(&group, &report));
            record.group = Some(GroupRecord::from(&group));
        }
    }
    Ok(record)
}

/// Reads an automorphism written as `alpha,beta` or `(alpha, beta)`.
pub fn parse_pair(text: &str, ring: Ring) -> Result<AffineAut> {
    let inner = text
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')');
    let Some((a, b)) = inner.split_once(',') else {
        return Err(Error::Syntax {
            position: 0,
            message: format!("expected 'alpha,beta', got '{text}'"),
        });
    };
    AffineAut::new(ring.parse_elem(a)?, ring.parse_elem(b)?)
}

/// Runs a request and renders either its result or its error as a record,
/// together with the exit status.
pub fn run_to_record(request: &Request) -> (OutputRecord, i32) {
    match run(request) {
        Ok(record) => (record, 0),
        Err(e) => {
            let mut record = OutputRecord::new(request.command.name(), request.ring);
            record.input = request.inputs.clone();
            record.error = Some(ErrorRecord::from(&e));
            (record, e.exit_code())
        }
    }
}

/// Processes one JSON request per input line and writes one JSON record per
/// line, in input order. Returns the largest exit status seen.
pub fn run_batch(input: impl BufRead, mut output: impl Write, defaults: &Options) -> Result<i32> {
    let mut worst = 0;
    for line in input.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let (record, code) = match serde_json::from_str::<BatchLine>(&line)
            .map_err(|e| Error::Syntax {
                position: e.column().saturating_sub(1),
                message: format!("invalid batch request: {e}"),
            })
            .and_then(|b| b.into_request(defaults))
        {
            Ok(request) => run_to_record(&request),
            Err(e) => {
                let mut record = OutputRecord::new("batch", Ring::Rationals);
                record.ring = String::new();
                record.error = Some(ErrorRecord::from(&e));
                (record, e.exit_code())
            }
        };
        worst = worst.max(code);
        serde_json::to_writer(&mut output, &record).map_err(|e| Error::Io(e.to_string()))?;
        writeln!(output)?;
    }
    Ok(worst)
}

/// Canonical text of a parsed polynomial.
pub fn canonical(text: &str, ring: Ring) -> Result<String> {
    parse_poly(text, ring).map(|p: Poly| p.to_string())
}

impl From<&AutGroup> for GroupRecord {
    fn from(group: &AutGroup) -> Self {
        match group {
            AutGroup::UnitsOfR { fixed_point } => GroupRecord::UnitsOfR {
                fixed_point: fixed_point.to_string(),
            },
            AutGroup::Finite(g) => GroupRecord::Finite {
                order: g.order(),
                cyclic: g.is_cyclic(),
                generator: g.generator().map(PairRecord::from),
                elements: g.elements().iter().map(PairRecord::from).collect(),
            },
        }
    }
}
