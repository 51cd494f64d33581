//! Brute-force ground truth over prime fields.
//!
//! [`enumerate_auts`] tries every pair `(alpha, beta)` against the defining
//! identity `f(alpha * t + beta) = alpha^n * f`, using its own residue
//! arithmetic and a binomial expansion rather than the polynomial module's
//! Horner substitution. Element orders come from repeated composition.

use crate::autgroup::AffineAut;
use crate::error::{Error, Result};
use crate::poly::{monic_nonconstant, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBounds {
    pub max_p: u32,
    pub max_deg: usize,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            max_p: 101,
            max_deg: 32,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub elements: Vec<AffineAut>,
    pub order: usize,
    pub cyclic: bool,
    pub element_orders: Vec<(AffineAut, usize)>,
    /// Every element also passed [`truncated_ideal_check`] up to degree `2n`.
    pub truncation_checked: bool,
}

pub fn enumerate_auts(f: &Poly) -> Result<OracleReport> {
    enumerate_auts_with(f, OracleBounds::default())
}

pub fn enumerate_auts_with(f: &Poly, bounds: OracleBounds) -> Result<OracleReport> {
    let ring = f.ring();
    let p = ring.modulus().ok_or(Error::WrongRing(ring))?;
    if p > bounds.max_p {
        return Err(Error::BoundExceeded(format!("p = {p} > max_p = {}", bounds.max_p)));
    }
    let g = monic_nonconstant(f)?;
    let n = g.degree().expect("nonconstant");
    if n > bounds.max_deg {
        return Err(Error::BoundExceeded(format!("degree {n} > max_deg = {}", bounds.max_deg)));
    }
    let p = u64::from(p);
    let coeffs: Vec<u64> = g.coeffs().iter().map(|c| u64::from(c.residue().unwrap())).collect();
    let binom = pascal(n, p);

    let mut pairs = Vec::new();
    for alpha in 1..p {
        let scale = pow_mod(alpha, n as u64, p);
        let target: Vec<u64> = coeffs.iter().map(|c| c * scale % p).collect();
        for beta in 0..p {
            if substitute(&coeffs, alpha, beta, p, &binom) == target {
                pairs.push((alpha, beta));
            }
        }
    }

    let order = pairs.len();
    let orders: Vec<usize> = pairs.iter().map(|&a| element_order(a, p, order)).collect();
    let cyclic = orders.contains(&order);
    let elements: Vec<AffineAut> = pairs
        .iter()
        .map(|&(a, b)| {
            AffineAut::new(ring.int(a as i64), ring.int(b as i64)).expect("alpha is nonzero")
        })
        .collect();
    let mut truncation_checked = true;
    for a in &elements {
        truncation_checked &= truncated_ideal_check(&g, a, 2 * n)?;
    }
    Ok(OracleReport {
        element_orders: elements.iter().cloned().zip(orders).collect(),
        elements,
        order,
        cyclic,
        truncation_checked,
    })
}

/// Checks that `(alpha, beta)` and its inverse send each generator `t^i f`
/// of `I_f` with `i <= max_degree - deg f` back into `I_f`.
pub fn truncated_ideal_check(f: &Poly, a: &AffineAut, max_degree: usize) -> Result<bool> {
    let g = monic_nonconstant(f)?;
    let n = g.degree().expect("nonconstant");
    if max_degree < n {
        return Err(Error::BoundExceeded(format!(
            "truncation degree {max_degree} is below deg f = {n}"
        )));
    }
    for map in [a.clone(), a.inverse()] {
        let image_f = map.apply(&g)?;
        let image_t = Poly::linear(map.alpha(), map.beta());
        let mut image = image_f;
        for i in 0..=max_degree - n {
            if i > 0 {
                image = &image * &image_t;
            }
            if !g.divides(&image) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn pascal(n: usize, p: u64) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut row = vec![1u64; j + 1];
        for k in 1..j {
            row[k] = (rows[j - 1][k - 1] + rows[j - 1][k]) % p;
        }
        rows.push(row);
    }
    rows
}

/// Coefficients of `sum_j c_j (alpha t + beta)^j` by the binomial theorem.
fn substitute(coeffs: &[u64], alpha: u64, beta: u64, p: u64, binom: &[Vec<u64>]) -> Vec<u64> {
    let n = coeffs.len();
    let alpha_pows: Vec<u64> = powers(alpha, n, p);
    let beta_pows: Vec<u64> = powers(beta, n, p);
    let mut out = vec![0u64; n];
    for (j, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        for k in 0..=j {
            let term = binom[j][k] * alpha_pows[k] % p * beta_pows[j - k] % p;
            out[k] = (out[k] + c * term) % p;
        }
    }
    out
}

fn powers(x: u64, n: usize, p: u64) -> Vec<u64> {
    std::iter::successors(Some(1 % p), |acc| Some(acc * x % p))
        .take(n)
        .collect()
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn element_order(a: (u64, u64), p: u64, bound: usize) -> usize {
    let mut power = a;
    for k in 1..=bound {
        if power == (1, 0) {
            return k;
        }
        // x -> alpha_1 (alpha_2 x + beta_2) + beta_1
        power = (power.0 * a.0 % p, (power.1 + power.0 * a.1) % p);
    }
    panic!("({}, {}) did not return to the identity within {bound} steps", a.0, a.1)
}
