//! Dense univariate polynomials over a [`Ring`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{Ring, RingElem};

/// A polynomial `c_0 + c_1 t + ... + c_n t^n` stored by ascending exponent.
///
/// The coefficient list never ends in zero, so the zero polynomial is the
/// empty list and has no degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: Ring,
    coeffs: Vec<RingElem>,
}

impl Poly {
    pub fn new(ring: Ring, coeffs: Vec<RingElem>) -> Result<Poly> {
        if let Some(bad) = coeffs.iter().find(|c| c.ring() != ring) {
            return Err(Error::MixedRings {
                left: ring,
                right: bad.ring(),
            });
        }
        Ok(Poly::from_vec(ring, coeffs))
    }

    pub(crate) fn from_vec(ring: Ring, mut coeffs: Vec<RingElem>) -> Poly {
        while coeffs.last().is_some_and(RingElem::is_zero) {
            coeffs.pop();
        }
        Poly { ring, coeffs }
    }

    /// Builds a polynomial from small integer coefficients, ascending.
    pub fn from_ints(ring: Ring, coeffs: &[i64]) -> Poly {
        Poly::from_vec(ring, coeffs.iter().map(|&c| ring.int(c)).collect())
    }

    pub fn zero(ring: Ring) -> Poly {
        Poly {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ring: Ring) -> Poly {
        Poly::constant(ring.one())
    }

    pub fn constant(c: RingElem) -> Poly {
        Poly::from_vec(c.ring(), vec![c])
    }

    /// The indeterminate `t`.
    pub fn t(ring: Ring) -> Poly {
        Poly::from_vec(ring, vec![ring.zero(), ring.one()])
    }

    /// `alpha * t + beta`.
    pub fn linear(alpha: &RingElem, beta: &RingElem) -> Poly {
        Poly::from_vec(alpha.ring(), vec![beta.clone(), alpha.clone()])
    }

    /// `t - a`.
    pub fn root_factor(a: &RingElem) -> Poly {
        Poly::linear(&a.ring().one(), &-a)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn coeffs(&self) -> &[RingElem] {
        &self.coeffs
    }

    /// Coefficient of `t^j`, zero beyond the degree.
    pub fn coeff(&self, j: usize) -> RingElem {
        self.coeffs.get(j).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&RingElem> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for the zero polynomial and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Leading coefficient is a unit of the ring.
    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(RingElem::is_unit)
    }

    /// Divides by the leading unit so the leading coefficient becomes 1.
    pub fn monic(&self) -> Result<Poly> {
        let lc = self
            .leading_coeff()
            .ok_or_else(|| Error::NotMonic("0".into()))?;
        let inv = lc.inverse().ok_or_else(|| Error::NotMonic(lc.to_string()))?;
        Ok(self.scale(&inv))
    }

    pub fn scale(&self, c: &RingElem) -> Poly {
        Poly::from_vec(self.ring, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, mut exp: u32) -> Poly {
        let mut result = Poly::one(self.ring);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = &result * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * &self.ring.int(j as i64))
            .collect();
        Poly::from_vec(self.ring, coeffs)
    }

    pub fn eval(&self, x: &RingElem) -> RingElem {
        self.coeffs
            .iter()
            .rev()
            .fold(self.ring.zero(), |acc, c| &(&acc * x) + c)
    }

    /// Multiplicity of `a` as a root.
    pub fn root_multiplicity(&self, a: &RingElem) -> usize {
        if self.is_zero() {
            return 0;
        }
        let divisor = Poly::root_factor(a);
        let mut rest = self.clone();
        let mut m = 0;
        while let Ok((q, r)) = rest.div_rem(&divisor) {
            if !r.is_zero() {
                break;
            }
            rest = q;
            m += 1;
        }
        m
    }

    /// Euclidean division by a polynomial whose leading coefficient is a unit.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check_same(divisor)?;
        let lc = divisor.leading_coeff().ok_or(Error::DivisionByZero)?;
        let inv = lc.inverse().ok_or_else(|| Error::NotAUnit(lc.to_string()))?;
        let d = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Poly::zero(self.ring), self.clone()));
        }
        let mut quot = vec![self.ring.zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * dc);
            }
            quot[k] = c;
        }
        rem.truncate(d);
        Ok((Poly::from_vec(self.ring, quot), Poly::from_vec(self.ring, rem)))
    }

    /// The quotient `self / divisor` when the division is exact.
    ///
    /// Over the integers the divisor need not have unit leading coefficient;
    /// the division is then carried out over the rationals.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        if self.ring != divisor.ring || divisor.is_zero() {
            return None;
        }
        if divisor.is_monic() {
            let (q, r) = self.div_rem(divisor).ok()?;
            return r.is_zero().then_some(q);
        }
        debug_assert_eq!(self.ring, Ring::Integers);
        let (q, r) = self.to_rationals().div_rem(&divisor.to_rationals()).ok()?;
        if !r.is_zero() {
            return None;
        }
        q.to_integers().ok()
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.exact_div(self).is_some()
    }

    /// `f(alpha * t + beta)` for a unit `alpha`, by Horner's rule over the
    /// polynomial ring.
    pub fn affine_substitute(&self, alpha: &RingElem, beta: &RingElem) -> Result<Poly> {
        for x in [alpha, beta] {
            if x.ring() != self.ring {
                return Err(Error::MixedRings {
                    left: self.ring,
                    right: x.ring(),
                });
            }
        }
        if !alpha.is_unit() {
            return Err(Error::NotAUnit(alpha.to_string()));
        }
        let inner = Poly::linear(alpha, beta);
        let mut acc = Poly::zero(self.ring);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &inner) + &Poly::constant(c.clone());
        }
        Ok(acc)
    }

    /// `f(t + s)`.
    pub fn shift(&self, s: &RingElem) -> Poly {
        self.affine_substitute(&self.ring.one(), s)
            .expect("1 is a unit and s shares the ring")
    }

    pub(crate) fn to_rationals(&self) -> Poly {
        match self.ring {
            Ring::Integers => Poly {
                ring: Ring::Rationals,
                coeffs: self.coeffs.iter().map(RingElem::to_rationals).collect(),
            },
            _ => self.clone(),
        }
    }

    /// Reads a rational polynomial back into the integers; every coefficient
    /// must be integral.
    pub(crate) fn to_integers(&self) -> Result<Poly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| Ring::Integers.from_rational(&c.to_rational().expect("rational coefficient")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_vec(Ring::Integers, coeffs))
    }

    /// Scales a rational polynomial to a primitive integer polynomial with
    /// positive leading coefficient.
    fn primitive_integer_part(&self) -> Poly {
        let rationals: Vec<_> = self
            .coeffs
            .iter()
            .map(|c| c.to_rational().expect("rational coefficient"))
            .collect();
        let den = rationals
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let nums: Vec<BigInt> = rationals
            .iter()
            .map(|q| q.numer() * (&den / q.denom()))
            .collect();
        let mut content = nums.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        if nums.last().is_some_and(Signed::is_negative) {
            content = -content;
        }
        Poly::from_vec(
            Ring::Integers,
            nums.into_iter()
                .map(|n| Ring::Integers.from_bigint(n / &content))
                .collect(),
        )
    }

    fn check_same(&self, other: &Poly) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::MixedRings {
                left: self.ring,
                right: other.ring,
            })
        }
    }

    fn zip_with(&self, other: &Poly, op: impl Fn(&RingElem, &RingElem) -> RingElem) -> Poly {
        let zero = self.ring.zero();
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|j| {
                op(
                    self.coeffs.get(j).unwrap_or(&zero),
                    other.coeffs.get(j).unwrap_or(&zero),
                )
            })
            .collect();
        Poly::from_vec(self.ring, coeffs)
    }
}

/// Requires a nonconstant polynomial with unit leading coefficient and
/// returns its monic normalization.
pub(crate) fn monic_nonconstant(f: &Poly) -> Result<Poly> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    f.monic()
}

fn assert_same_ring(a: &Poly, b: &Poly) {
    if let Err(e) = a.check_same(b) {
        panic!("{e}");
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        assert_same_ring(self, rhs);
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        assert_same_ring(self, rhs);
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        assert_same_ring(self, rhs);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.ring);
        }
        let mut out = vec![self.ring.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::from_vec(self.ring, out)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::from_vec(self.ring, self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;

            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// Canonical text form, highest degree first: `t^3 - 3*t + 2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let magnitude = if negative { -c } else { c.clone() };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let power = match j {
                0 => None,
                1 => Some("t".to_string()),
                _ => Some(format!("t^{j}")),
            };
            match power {
                None => write!(f, "{magnitude}")?,
                Some(p) if magnitude.is_one() => f.write_str(&p)?,
                Some(p) => write!(f, "{magnitude}*{p}")?,
            }
        }
        Ok(())
    }
}

/// Greatest common divisor: monic over fields; over the integers the
/// primitive gcd with positive leading coefficient.
pub fn gcd(f: &Poly, g: &Poly) -> Result<Poly> {
    f.check_same(g)?;
    if f.is_zero() && g.is_zero() {
        return Err(Error::BothZero);
    }
    if f.ring() == Ring::Integers {
        let d = gcd(&f.to_rationals(), &g.to_rationals())?;
        return Ok(d.primitive_integer_part());
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b)?;
        a = b;
        b = r;
    }
    a.monic()
}

/// The multiplicity layers `f = prod_m f_m^m` of a monic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    layers: Vec<(Poly, usize)>,
}

impl SquarefreeDecomposition {
    /// Pairs `(f_m, m)` with `m` ascending; only nonconstant layers appear.
    pub fn layers(&self) -> &[(Poly, usize)] {
        &self.layers
    }

    pub fn multiplicities(&self) -> impl Iterator<Item = usize> + '_ {
        self.layers.iter().map(|(_, m)| *m)
    }

    /// Product of the layers, each raised to its multiplicity.
    pub fn expand(&self, ring: Ring) -> Poly {
        self.layers
            .iter()
            .fold(Poly::one(ring), |acc, (f, m)| &acc * &f.pow(*m as u32))
    }

    /// Product of the layers: the radical of the input.
    pub fn squarefree_part(&self, ring: Ring) -> Poly {
        self.layers
            .iter()
            .fold(Poly::one(ring), |acc, (f, _)| &acc * f)
    }
}

/// Splits a monic nonconstant polynomial into its multiplicity layers.
pub fn squarefree_decomposition(f: &Poly) -> Result<SquarefreeDecomposition> {
    let f = monic_nonconstant(f)?;
    let mut layers = match f.ring() {
        Ring::Integers => yun(&f.to_rationals())?
            .into_iter()
            .map(|(g, m)| Ok((g.to_integers()?, m)))
            .collect::<Result<Vec<_>>>()?,
        Ring::Rationals => yun(&f)?,
        Ring::PrimeField(p) => squarefree_char_p(&f, p as usize)?,
    };
    layers.sort_by_key(|(_, m)| *m);
    Ok(SquarefreeDecomposition { layers })
}

/// Yun's algorithm for a monic polynomial in characteristic zero.
fn yun(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let df = f.derivative();
    let b = gcd(f, &df)?;
    let mut c = f.exact_div(&b).expect("gcd divides f");
    let mut d = &df.exact_div(&b).expect("gcd divides f'") - &c.derivative();
    let mut layers = Vec::new();
    let mut i = 1;
    while !c.is_one() {
        let a = gcd(&c, &d)?;
        if !a.is_constant() {
            layers.push((a.clone(), i));
        }
        c = c.exact_div(&a).expect("a divides c");
        d = &d.exact_div(&a).expect("a divides d") - &c.derivative();
        i += 1;
    }
    Ok(layers)
}

/// Squarefree decomposition over F_p: the derivative-driven loop removes
/// every factor whose multiplicity is prime to `p`; what is left is a
/// polynomial in `t^p`, whose p-th root is taken exponent-wise (coefficients
/// are fixed by Frobenius) and decomposed recursively.
fn squarefree_char_p(f: &Poly, p: usize) -> Result<Vec<(Poly, usize)>> {
    let mut layers = Vec::new();
    let df = f.derivative();
    let mut c = if df.is_zero() { f.clone() } else { gcd(f, &df)? };
    let mut w = f.exact_div(&c).expect("gcd divides f");
    let mut i = 1;
    while !w.is_one() {
        let y = gcd(&w, &c)?;
        let z = w.exact_div(&y).expect("y divides w");
        if !z.is_constant() {
            layers.push((z, i));
        }
        c = c.exact_div(&y).expect("y divides c");
        w = y;
        i += 1;
    }
    if !c.is_one() {
        let root = pth_root(&c, p);
        for (g, m) in squarefree_char_p(&root, p)? {
            layers.push((g, m * p));
        }
    }
    Ok(layers)
}

fn pth_root(f: &Poly, p: usize) -> Poly {
    debug_assert!(f.coeffs.iter().enumerate().all(|(j, c)| j % p == 0 || c.is_zero()));
    Poly::from_vec(f.ring, f.coeffs.iter().step_by(p).cloned().collect())
}

/// The element `z` with `n * z = -c_{n-1}` for the monic normalization of
/// `f`, i.e. the average of the roots counted with multiplicity, when it
/// exists in the ring and is unique.
pub fn center(f: &Poly) -> Result<Option<RingElem>> {
    let g = monic_nonconstant(f)?;
    let n = g.degree().expect("nonconstant");
    let ring = g.ring();
    let root_sum = -&g.coeff(n - 1);
    let n_elem = ring.int(n as i64);
    if n_elem.is_zero() {
        return Ok(None);
    }
    Ok(root_sum.try_div_exact(&n_elem).ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    const Q: Ring = Ring::Rationals;
    const Z: Ring = Ring::Integers;

    fn fp(p: u64) -> Ring {
        Ring::prime_field(p).unwrap()
    }

    fn q(n: i64, d: i64) -> RingElem {
        Q.from_rational(&BigRational::new(n.into(), d.into())).unwrap()
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let f = Poly::from_ints(Q, &[1, 2, 0, 0]);
        assert_eq!(f.degree(), Some(1));
        assert_eq!(Poly::from_ints(Q, &[0, 0]).degree(), None);
        assert!(Poly::new(Q, vec![Z.one()]).is_err());
    }

    #[test]
    fn identity_substitution() {
        let f = Poly::from_ints(Q, &[5, -1, 0, 3]);
        assert_eq!(f.affine_substitute(&Q.one(), &Q.zero()).unwrap(), f);
    }

    #[test]
    fn even_polynomial_reflection() {
        let f = Poly::from_ints(Q, &[-1, 0, 1]);
        assert_eq!(f.affine_substitute(&Q.int(-1), &Q.zero()).unwrap(), f);
    }

    #[test]
    fn translation_expands() {
        // (t - 1)^2 - 1 = t^2 - 2t
        let f = Poly::from_ints(Q, &[-1, 0, 1]);
        assert_eq!(
            f.affine_substitute(&Q.one(), &Q.int(-1)).unwrap(),
            Poly::from_ints(Q, &[0, -2, 1])
        );
    }

    #[test]
    fn substitution_needs_unit() {
        let f = Poly::from_ints(Z, &[0, 1, 1]);
        assert!(matches!(
            f.affine_substitute(&Z.int(2), &Z.zero()),
            Err(Error::NotAUnit(_))
        ));
    }

    #[test]
    fn division_and_divisibility() {
        let f = Poly::from_ints(Q, &[-1, 0, 0, 1]);
        let d = Poly::from_ints(Q, &[-1, 1]);
        let (quot, rem) = f.div_rem(&d).unwrap();
        assert_eq!(quot, Poly::from_ints(Q, &[1, 1, 1]));
        assert!(rem.is_zero());
        assert!(d.divides(&f));
        assert!(!Poly::from_ints(Q, &[1, 1]).divides(&Poly::from_ints(Q, &[1, 0, 1])));
        // non-monic divisor over Z
        let g = Poly::from_ints(Z, &[2, 4]);
        assert_eq!(
            Poly::from_ints(Z, &[2, 6, 4]).exact_div(&g),
            Some(Poly::from_ints(Z, &[1, 1]))
        );
        assert_eq!(Poly::from_ints(Z, &[1, 3, 2]).exact_div(&g), None);
    }

    #[test]
    fn gcd_examples() {
        let f = Poly::from_ints(Q, &[-1, 0, 1]);
        let g = Poly::from_ints(Q, &[1, -2, 1]);
        assert_eq!(gcd(&f, &g).unwrap(), Poly::from_ints(Q, &[-1, 1]));
        let h = Poly::from_ints(Q, &[1, 0, 1]);
        assert_eq!(gcd(&h, &f).unwrap(), Poly::one(Q));
        let two_f = f.scale(&Q.int(2));
        assert_eq!(gcd(&two_f, &Poly::zero(Q)).unwrap(), f);
        assert_eq!(gcd(&Poly::zero(Q), &Poly::zero(Q)), Err(Error::BothZero));
    }

    #[test]
    fn integer_gcd_is_primitive() {
        // gcd(2t^2 - 2, 4t - 4) = t - 1 over Z (primitive)
        let f = Poly::from_ints(Z, &[-2, 0, 2]);
        let g = Poly::from_ints(Z, &[-4, 4]);
        assert_eq!(gcd(&f, &g).unwrap(), Poly::from_ints(Z, &[-1, 1]));
        // gcd(2t + 1, 4t^2 - 1) = 2t + 1
        let f = Poly::from_ints(Z, &[1, 2]);
        let g = Poly::from_ints(Z, &[-1, 0, 4]);
        assert_eq!(gcd(&f, &g).unwrap(), Poly::from_ints(Z, &[1, 2]));
    }

    #[test]
    fn squarefree_cubic() {
        // t^3 - 3t + 2 = (t - 1)^2 (t + 2)
        let f = Poly::from_ints(Q, &[2, -3, 0, 1]);
        let sqf = squarefree_decomposition(&f).unwrap();
        assert_eq!(
            sqf.layers(),
            &[
                (Poly::from_ints(Q, &[2, 1]), 1),
                (Poly::from_ints(Q, &[-1, 1]), 2)
            ]
        );
        assert_eq!(sqf.expand(Q), f);
    }

    #[test]
    fn squarefree_single_layer() {
        let f = Poly::from_ints(Z, &[1, 1, 0, 1]);
        let sqf = squarefree_decomposition(&f).unwrap();
        assert_eq!(sqf.layers(), &[(f, 1)]);
    }

    #[test]
    fn squarefree_frobenius() {
        for p in [2u64, 3, 5, 7] {
            let r = fp(p);
            for c in 0..p as i64 {
                // t^p - c = (t - c)^p
                let mut coeffs = vec![0; p as usize + 1];
                coeffs[0] = -c;
                coeffs[p as usize] = 1;
                let f = Poly::from_ints(r, &coeffs);
                let sqf = squarefree_decomposition(&f).unwrap();
                assert_eq!(sqf.layers(), &[(Poly::from_ints(r, &[-c, 1]), p as usize)]);
            }
        }
    }

    #[test]
    fn squarefree_mixed_char_p() {
        // over F3: t^2 (t - 1)^3 (t + 1)^4 (t^2 + 1)^6
        let r = fp(3);
        let t0 = Poly::from_ints(r, &[0, 1]);
        let t1 = Poly::from_ints(r, &[-1, 1]);
        let t2 = Poly::from_ints(r, &[1, 1]);
        let irr = Poly::from_ints(r, &[1, 0, 1]);
        let f = &(&t0.pow(2) * &t1.pow(3)) * &(&t2.pow(4) * &irr.pow(6));
        let sqf = squarefree_decomposition(&f).unwrap();
        assert_eq!(
            sqf.layers(),
            &[(t0, 2), (t1, 3), (t2, 4), (irr, 6)]
        );
    }

    #[test]
    fn squarefree_rejects_bad_input() {
        assert_eq!(
            squarefree_decomposition(&Poly::from_ints(Q, &[3])),
            Err(Error::ConstantPolynomial)
        );
        assert!(matches!(
            squarefree_decomposition(&Poly::from_ints(Z, &[1, 2])),
            Err(Error::NotMonic(_))
        ));
    }

    #[test]
    fn center_examples() {
        let f = Poly::from_ints(Q, &[0, 2, -3, 1]);
        assert_eq!(center(&f).unwrap(), Some(Q.one()));
        let g = Poly::from_ints(Z, &[0, -1, 1]);
        assert_eq!(center(&g).unwrap(), None);
        assert_eq!(center(&g.to_rationals()).unwrap(), Some(q(1, 2)));
        for ring in [Z, Q, fp(7)] {
            let a = ring.int(3);
            let h = Poly::root_factor(&a).pow(4);
            assert_eq!(center(&h).unwrap(), Some(a));
        }
        // p | n: no unique center
        let h = Poly::from_ints(fp(3), &[0, -1, 0, 1]);
        assert_eq!(center(&h).unwrap(), None);
    }

    #[test]
    fn root_multiplicity_counts() {
        let f = &Poly::from_ints(Q, &[-1, 1]).pow(3) * &Poly::from_ints(Q, &[0, 1]);
        assert_eq!(f.root_multiplicity(&Q.one()), 3);
        assert_eq!(f.root_multiplicity(&Q.zero()), 1);
        assert_eq!(f.root_multiplicity(&Q.int(5)), 0);
    }

    #[test]
    fn canonical_text() {
        assert_eq!(Poly::from_ints(Q, &[2, -3, 0, 1]).to_string(), "t^3 - 3*t + 2");
        assert_eq!(Poly::from_ints(Q, &[0, -1]).to_string(), "-t");
        assert_eq!(Poly::from_ints(fp(7), &[-1, 0, 1]).to_string(), "t^2 + 6");
        assert_eq!(Poly::zero(Z).to_string(), "0");
        let f = Poly::new(Q, vec![q(-1, 2), Q.zero(), q(3, 4)]).unwrap();
        assert_eq!(f.to_string(), "3/4*t^2 - 1/2");
    }
}
