//! Serializable output records and their text rendering.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::autgroup::{AffineAut, AutGroup, IsoWitness};
use crate::error::Error;
use crate::factor_fp::RootPermutation;
use crate::oracle::OracleReport;
use crate::ring::Ring;

pub const SCHEMA: &str = "ideal-aut/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub alpha: String,
    pub beta: String,
}

impl PairRecord {
    pub fn new(alpha: &str, beta: &str) -> PairRecord {
        PairRecord {
            alpha: alpha.into(),
            beta: beta.into(),
        }
    }
}

impl From<&AffineAut> for PairRecord {
    fn from(a: &AffineAut) -> Self {
        PairRecord {
            alpha: a.alpha().to_string(),
            beta: a.beta().to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupRecord {
    Finite {
        order: usize,
        cyclic: bool,
        generator: Option<PairRecord>,
        elements: Vec<PairRecord>,
    },
    /// All of `R^*` acting as dilations about `fixed_point`.
    #[serde(rename = "units_of_R")]
    UnitsOfR { fixed_point: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub alpha: String,
    pub beta: String,
    pub lambda: String,
}

impl From<&IsoWitness> for WitnessRecord {
    fn from(w: &IsoWitness) -> Self {
        WitnessRecord {
            alpha: w.map.alpha().to_string(),
            beta: w.map.beta().to_string(),
            lambda: w.lambda.to_string(),
        }
    }
}

/// Infinite witness set: `first` composed with every dilation about
/// `target_fixed_point`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFamilyRecord {
    pub first: WitnessRecord,
    pub target_fixed_point: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRecord {
    pub factor: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootMapRecord {
    pub from: String,
    pub to: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutationRecord {
    pub element: PairRecord,
    pub roots: Vec<RootMapRecord>,
    pub factors: Vec<RootMapRecord>,
}

impl PermutationRecord {
    pub fn new(a: &AffineAut, perm: &RootPermutation) -> PermutationRecord {
        PermutationRecord {
            element: PairRecord::from(a),
            roots: perm
                .entries()
                .iter()
                .map(|e| RootMapRecord {
                    from: e.root.to_string(),
                    to: e.image.to_string(),
                    multiplicity: e.multiplicity,
                })
                .collect(),
            factors: perm
                .factor_images()
                .iter()
                .map(|e| RootMapRecord {
                    from: e.factor.to_string(),
                    to: e.image.to_string(),
                    multiplicity: e.multiplicity,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRecord {
    pub agree: bool,
    pub order: usize,
    pub cyclic: bool,
    pub elements: Vec<PairRecord>,
    pub element_orders: Vec<usize>,
    pub truncation_checked: bool,
}

impl OracleRecord {
    pub fn compare(group: &AutGroup, report: &OracleReport) -> OracleRecord {
        let agree = match group.enumerate() {
            Some(mut mine) => {
                mine.sort();
                let mut theirs = report.elements.clone();
                theirs.sort();
                mine == theirs && group.is_cyclic() == report.cyclic
            }
            None => false,
        };
        OracleRecord {
            agree,
            order: report.order,
            cyclic: report.cyclic,
            elements: report.elements.iter().map(PairRecord::from).collect(),
            element_orders: report.element_orders.iter().map(|(_, k)| *k).collect(),
            truncation_checked: report.truncation_checked,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub code: String,
    pub exit_code: i32,
    pub message: String,
}

impl From<&Error> for ErrorRecord {
    fn from(e: &Error) -> Self {
        ErrorRecord {
            code: e.code().into(),
            exit_code: e.exit_code(),
            message: e.to_string(),
        }
    }
}

/// One result, as printed by the binary and written per line in batch mode.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema: String,
    pub command: String,
    pub ring: String,
    /// Inputs in canonical form (verbatim when parsing failed).
    pub input: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub isomorphic: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_family: Option<WitnessFamilyRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<FactorRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<FactorRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub permutations: Option<Vec<PermutationRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorRecord>,
}

impl OutputRecord {
    pub fn new(command: &str, ring: Ring) -> OutputRecord {
        OutputRecord {
            schema: SCHEMA.into(),
            command: command.into(),
            ring: ring.to_string(),
            input: Vec::new(),
            group: None,
            isomorphic: None,
            witness: None,
            witnesses: None,
            witness_family: None,
            factors: None,
            roots: None,
            permutations: None,
            verified: None,
            oracle: None,
            error: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

fn pair(p: &PairRecord) -> String {
    format!("({}, {})", p.alpha, p.beta)
}

fn witness(w: &WitnessRecord) -> String {
    format!("({}, {}) with lambda = {}", w.alpha, w.beta, w.lambda)
}

impl fmt::Display for GroupRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupRecord::UnitsOfR { fixed_point } => {
                write!(f, "all units alpha, acting as (alpha, (1 - alpha)*{fixed_point})")
            }
            GroupRecord::Finite {
                order,
                cyclic,
                generator,
                elements,
            } => {
                write!(f, "order {order}, ")?;
                match generator {
                    Some(g) if *cyclic => write!(f, "cyclic, generated by {}", pair(g))?,
                    _ => write!(f, "not cyclic")?,
                }
                let list: Vec<String> = elements.iter().map(pair).collect();
                write!(f, "\nelements: {}", list.join(", "))
            }
        }
    }
}

impl fmt::Display for OutputRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(e) = &self.error {
            return write!(f, "error [{}]: {}", e.code, e.message);
        }
        writeln!(f, "ring: {}", self.ring)?;
        for (i, input) in self.input.iter().enumerate() {
            let label = ["f", "g"].get(i).copied().unwrap_or("input");
            writeln!(f, "{label} = {input}")?;
        }
        if let Some(g) = &self.group {
            writeln!(f, "Aut: {g}")?;
        }
        if let Some(iso) = self.isomorphic {
            writeln!(f, "isomorphic: {}", if iso { "yes" } else { "no" })?;
        }
        if let Some(w) = &self.witness {
            writeln!(f, "witness: {}", witness(w))?;
        }
        if let Some(ws) = &self.witnesses {
            writeln!(f, "all witnesses ({}):", ws.len())?;
            for w in ws {
                writeln!(f, "  {}", witness(w))?;
            }
        }
        if let Some(fam) = &self.witness_family {
            writeln!(
                f,
                "all witnesses: {} followed by any dilation about {}",
                witness(&fam.first),
                fam.target_fixed_point
            )?;
        }
        if let Some(fs) = &self.factors {
            for r in fs {
                writeln!(f, "factor: ({})^{}", r.factor, r.multiplicity)?;
            }
        }
        if let Some(rs) = &self.roots {
            for r in rs {
                writeln!(f, "root: {} (multiplicity {})", r.factor, r.multiplicity)?;
            }
        }
        if let Some(v) = self.verified {
            writeln!(f, "automorphism: {}", if v { "yes" } else { "no" })?;
        }
        if let Some(perms) = &self.permutations {
            for p in perms {
                let roots: Vec<String> = p.roots.iter().map(|r| format!("{} -> {}", r.from, r.to)).collect();
                writeln!(f, "{} permutes roots: {}", pair(&p.element), roots.join(", "))?;
            }
        }
        if let Some(o) = &self.oracle {
            writeln!(
                f,
                "oracle: order {}, {}; {}",
                o.order,
                if o.cyclic { "cyclic" } else { "not cyclic" },
                if o.agree { "agrees" } else { "DISAGREES" }
            )?;
        }
        Ok(())
    }
}
