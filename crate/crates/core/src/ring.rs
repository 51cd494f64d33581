//! Exact coefficient rings: the integers, the rationals and prime fields.
//!
//! Every [`RingElem`] carries the [`Ring`] it belongs to. The checked
//! `try_*` methods report mixing elements of different rings as an error;
//! the operator impls (`+`, `-`, `*`) panic instead and are meant for code
//! that already knows its operands agree, such as polynomial internals.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const MAX_MODULUS: u64 = 1 << 31;

/// A supported coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Integers,
    Rationals,
    /// The field with `p` elements; construct through [`Ring::prime_field`].
    PrimeField(u32),
}

impl Ring {
    pub fn prime_field(p: u64) -> Result<Ring> {
        if !(2..MAX_MODULUS).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Ring::PrimeField(p as u32))
    }

    /// 0 for the integers and rationals, `p` for a prime field.
    pub fn characteristic(self) -> u32 {
        match self {
            Ring::PrimeField(p) => p,
            _ => 0,
        }
    }

    pub fn modulus(self) -> Option<u32> {
        match self {
            Ring::PrimeField(p) => Some(p),
            _ => None,
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Ring::Integers)
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Ring::PrimeField(_))
    }

    pub fn zero(self) -> RingElem {
        self.int(0)
    }

    pub fn one(self) -> RingElem {
        self.int(1)
    }

    /// The image of an ordinary integer in this ring.
    pub fn int(self, n: i64) -> RingElem {
        self.from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(self, n: BigInt) -> RingElem {
        let value = match self {
            Ring::Integers => Value::Int(n),
            Ring::Rationals => Value::Rat(BigRational::from_integer(n)),
            Ring::PrimeField(p) => Value::Fp(reduce_bigint(&n, p)),
        };
        RingElem { ring: self, value }
    }

    /// Maps a rational number into the ring, if it lies there. For a prime
    /// field this means the denominator is invertible modulo `p`.
    pub fn from_rational(self, q: &BigRational) -> Result<RingElem> {
        let not_in_ring = || Error::CoefficientNotInRing(format_rational(q), self);
        match self {
            Ring::Rationals => Ok(RingElem {
                ring: self,
                value: Value::Rat(q.clone()),
            }),
            Ring::Integers => {
                if q.is_integer() {
                    Ok(self.from_bigint(q.to_integer()))
                } else {
                    Err(not_in_ring())
                }
            }
            Ring::PrimeField(p) => {
                let den = reduce_bigint(q.denom(), p);
                if den == 0 {
                    return Err(not_in_ring());
                }
                let num = reduce_bigint(q.numer(), p);
                let inv = fp_pow(den, u64::from(p) - 2, p);
                Ok(RingElem {
                    ring: self,
                    value: Value::Fp(fp_mul(num, inv, p)),
                })
            }
        }
    }

    /// Parses an element in text form: optional sign, decimal digits and an
    /// optional `/denominator`.
    pub fn parse_elem(self, text: &str) -> Result<RingElem> {
        let s = text.trim();
        let syntax = |message: &str| Error::Syntax {
            position: 0,
            message: format!("{message} in element '{s}'"),
        };
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let digits = num.strip_prefix(['+', '-']).unwrap_or(num);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(syntax("expected an integer"));
        }
        let n: BigInt = num.trim_start_matches('+').parse().map_err(|_| syntax("bad integer"))?;
        let d: BigInt = match den {
            None => BigInt::one(),
            Some(d) => {
                if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(syntax("expected a natural denominator"));
                }
                d.parse().map_err(|_| syntax("bad denominator"))?
            }
        };
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.from_rational(&BigRational::new(n, d))
    }

    /// All units of a finite ring, in canonical order.
    pub fn units(self) -> Option<impl Iterator<Item = RingElem>> {
        let p = self.modulus()?;
        Some((1..p).map(move |r| RingElem {
            ring: self,
            value: Value::Fp(r),
        }))
    }

    /// All elements of a finite ring, in canonical order.
    pub fn elements(self) -> Option<impl Iterator<Item = RingElem>> {
        let p = self.modulus()?;
        Some((0..p).map(move |r| RingElem {
            ring: self,
            value: Value::Fp(r),
        }))
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => f.write_str("Z"),
            Ring::Rationals => f.write_str("Q"),
            Ring::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ring> {
        match s.trim() {
            "Z" => Ok(Ring::Integers),
            "Q" => Ok(Ring::Rationals),
            other => {
                let digits = other
                    .strip_prefix('F')
                    .ok_or_else(|| Error::UnknownRing(other.to_string()))?;
                let p: u64 = digits
                    .parse()
                    .map_err(|_| Error::UnknownRing(other.to_string()))?;
                Ring::prime_field(p)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Value {
    Int(BigInt),
    Rat(BigRational),
    Fp(u32),
}

/// An exact element of a [`Ring`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElem {
    ring: Ring,
    value: Value,
}

/// Binary operations exposed through [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    /// Negates the first operand; the second is only checked for ring agreement.
    Neg,
    DivExact,
}

pub fn arith(op: ArithOp, x: &RingElem, y: &RingElem) -> Result<RingElem> {
    match op {
        ArithOp::Add => x.try_add(y),
        ArithOp::Mul => x.try_mul(y),
        ArithOp::Neg => {
            x.check_same(y)?;
            Ok(-x)
        }
        ArithOp::DivExact => x.try_div_exact(y),
    }
}

impl RingElem {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Int(n) => n.is_zero(),
            Value::Rat(q) => q.is_zero(),
            Value::Fp(r) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Int(n) => n.is_one(),
            Value::Rat(q) => q.is_one(),
            Value::Fp(r) => *r == 1,
        }
    }

    pub fn is_unit(&self) -> bool {
        match &self.value {
            Value::Int(n) => n.abs().is_one(),
            Value::Rat(q) => !q.is_zero(),
            Value::Fp(r) => *r != 0,
        }
    }

    /// True for negative integers and rationals; prime-field residues are never negative.
    pub fn is_negative(&self) -> bool {
        match &self.value {
            Value::Int(n) => n.is_negative(),
            Value::Rat(q) => q.is_negative(),
            Value::Fp(_) => false,
        }
    }

    /// The residue in `[0, p)` for prime-field elements.
    pub fn residue(&self) -> Option<u32> {
        match self.value {
            Value::Fp(r) => Some(r),
            _ => None,
        }
    }

    /// The value as a rational number; `None` for prime-field elements.
    pub fn to_rational(&self) -> Option<BigRational> {
        match &self.value {
            Value::Int(n) => Some(BigRational::from_integer(n.clone())),
            Value::Rat(q) => Some(q.clone()),
            Value::Fp(_) => None,
        }
    }

    /// Reinterprets an integer as a rational; other elements are returned unchanged.
    pub(crate) fn to_rationals(&self) -> RingElem {
        match &self.value {
            Value::Int(n) => Ring::Rationals.from_bigint(n.clone()),
            _ => self.clone(),
        }
    }

    fn check_same(&self, other: &RingElem) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::MixedRings {
                left: self.ring,
                right: other.ring,
            })
        }
    }

    pub fn try_add(&self, other: &RingElem) -> Result<RingElem> {
        self.check_same(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a + b),
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            (Value::Fp(a), Value::Fp(b)) => {
                let p = u64::from(self.ring.characteristic());
                Value::Fp(((u64::from(*a) + u64::from(*b)) % p) as u32)
            }
            _ => unreachable!("ring tag and value disagree"),
        };
        Ok(RingElem {
            ring: self.ring,
            value,
        })
    }

    pub fn try_sub(&self, other: &RingElem) -> Result<RingElem> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &RingElem) -> Result<RingElem> {
        self.check_same(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a * b),
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            (Value::Fp(a), Value::Fp(b)) => Value::Fp(fp_mul(*a, *b, self.ring.characteristic())),
            _ => unreachable!("ring tag and value disagree"),
        };
        Ok(RingElem {
            ring: self.ring,
            value,
        })
    }

    /// Exact quotient `self / divisor`. Over the integers the divisor must
    /// divide `self`; over fields it must be nonzero.
    pub fn try_div_exact(&self, divisor: &RingElem) -> Result<RingElem> {
        self.check_same(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match (&self.value, &divisor.value) {
            (Value::Int(a), Value::Int(b)) => {
                let (q, r) = a.div_rem(b);
                if r.is_zero() {
                    Ok(Ring::Integers.from_bigint(q))
                } else {
                    Err(Error::InexactDivision {
                        ring: self.ring,
                        dividend: self.to_string(),
                        divisor: divisor.to_string(),
                    })
                }
            }
            _ => {
                let inv = divisor.inverse().expect("nonzero field element");
                self.try_mul(&inv)
            }
        }
    }

    pub fn inverse(&self) -> Option<RingElem> {
        if !self.is_unit() {
            return None;
        }
        let value = match &self.value {
            Value::Int(n) => Value::Int(n.clone()),
            Value::Rat(q) => Value::Rat(q.recip()),
            Value::Fp(r) => {
                let p = self.ring.characteristic();
                Value::Fp(fp_pow(*r, u64::from(p) - 2, p))
            }
        };
        Some(RingElem {
            ring: self.ring,
            value,
        })
    }

    pub fn pow(&self, exp: u64) -> RingElem {
        match &self.value {
            Value::Fp(r) => RingElem {
                ring: self.ring,
                value: Value::Fp(fp_pow(*r, exp, self.ring.characteristic())),
            },
            _ => {
                let mut result = self.ring.one();
                let mut base = self.clone();
                let mut e = exp;
                while e > 0 {
                    if e & 1 == 1 {
                        result = &result * &base;
                    }
                    e >>= 1;
                    if e > 0 {
                        base = &base * &base;
                    }
                }
                result
            }
        }
    }

    /// Integer power allowing negative exponents for units.
    pub fn pow_signed(&self, exp: i64) -> Option<RingElem> {
        if exp >= 0 {
            Some(self.pow(exp as u64))
        } else {
            self.inverse().map(|inv| inv.pow(exp.unsigned_abs()))
        }
    }

    /// Sort key realising the canonical element order: integers and
    /// rationals by absolute numerator, then denominator, positive before
    /// negative (so `0, 1, -1, 1/2, -1/2, 2, ...`); residues ascending.
    fn canonical_key(&self) -> (BigInt, BigInt, bool) {
        match &self.value {
            Value::Int(n) => (n.abs(), BigInt::one(), n.is_negative()),
            Value::Rat(q) => (q.numer().abs(), q.denom().clone(), q.is_negative()),
            Value::Fp(r) => (BigInt::from(*r), BigInt::one(), false),
        }
    }
}

impl PartialOrd for RingElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RingElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ring
            .cmp(&other.ring)
            .then_with(|| self.canonical_key().cmp(&other.canonical_key()))
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Int(n) => write!(f, "{n}"),
            Value::Rat(q) => f.write_str(&format_rational(q)),
            Value::Fp(r) => write!(f, "{r}"),
        }
    }
}

fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl Neg for &RingElem {
    type Output = RingElem;

    fn neg(self) -> RingElem {
        let value = match &self.value {
            Value::Int(n) => Value::Int(-n),
            Value::Rat(q) => Value::Rat(-q),
            Value::Fp(r) => {
                let p = self.ring.characteristic();
                Value::Fp(if *r == 0 { 0 } else { p - r })
            }
        };
        RingElem {
            ring: self.ring,
            value,
        }
    }
}

impl Neg for RingElem {
    type Output = RingElem;

    fn neg(self) -> RingElem {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&RingElem> for &RingElem {
            type Output = RingElem;

            /// # Panics
            /// If the operands belong to different rings.
            fn $method(self, rhs: &RingElem) -> RingElem {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait<RingElem> for RingElem {
            type Output = RingElem;

            fn $method(self, rhs: RingElem) -> RingElem {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

/// The group of `g`-th roots of unity in `ring`, in canonical order.
pub fn unit_torsion(ring: Ring, g: u64) -> Vec<RingElem> {
    assert!(g >= 1, "torsion exponent must be positive");
    match ring {
        Ring::Integers | Ring::Rationals => {
            if g.is_multiple_of(2) {
                vec![ring.one(), ring.int(-1)]
            } else {
                vec![ring.one()]
            }
        }
        Ring::PrimeField(p) => {
            let d = g.gcd(&(u64::from(p) - 1));
            let zeta = element_of_order(p, d);
            let mut roots: Vec<u32> = std::iter::successors(Some(1u32), |&x| {
                let next = fp_mul(x, zeta, p);
                (next != 1).then_some(next)
            })
            .collect();
            roots.sort_unstable();
            debug_assert_eq!(roots.len() as u64, d);
            roots
                .into_iter()
                .map(|r| RingElem {
                    ring,
                    value: Value::Fp(r),
                })
                .collect()
        }
    }
}

/// An element of exact multiplicative order `d` in F_p, where `d | p - 1`.
///
/// Candidates `c = 2, 3, ...` are raised to `(p - 1) / d`; the result has
/// order dividing `d`, and it is accepted once no maximal proper divisor of
/// `d` already kills it. Only `d` is factored, never `p - 1`.
fn element_of_order(p: u32, d: u64) -> u32 {
    if d == 1 {
        return 1;
    }
    let cofactor = (u64::from(p) - 1) / d;
    let primes = prime_divisors(d);
    for c in 2..p {
        let z = fp_pow(c, cofactor, p);
        if primes.iter().all(|q| fp_pow(z, d / q, p) != 1) {
            return z;
        }
    }
    unreachable!("F_{p} is cyclic, so an element of order {d} exists")
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn reduce_bigint(n: &BigInt, p: u32) -> u32 {
    let r = n.mod_floor(&BigInt::from(p));
    debug_assert!(r.sign() != Sign::Minus);
    r.to_u32().expect("residue below modulus")
}

fn fp_mul(a: u32, b: u32, p: u32) -> u32 {
    ((u64::from(a) * u64::from(b)) % u64::from(p)) as u32
}

fn fp_pow(base: u32, mut exp: u64, p: u32) -> u32 {
    let mut result = 1 % p;
    let mut b = base % p;
    while exp > 0 {
        if exp & 1 == 1 {
            result = fp_mul(result, b, p);
        }
        b = fp_mul(b, b, p);
        exp >>= 1;
    }
    result
}
