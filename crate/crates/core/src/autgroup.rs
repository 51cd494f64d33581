//! Automorphisms of `I_f = f * R[t]` as a non-unital algebra, and
//! isomorphisms `I_f -> I_g`.
//!
//! Every such map is the restriction of a unique substitution
//! `t -> alpha * t + beta` of `R[t]` with `alpha` a unit, so maps are
//! represented by the pair `(alpha, beta)` throughout. A pair restricts to
//! an automorphism of `I_f` exactly when `f(alpha * t + beta) =
//! alpha^deg(f) * f`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::factor_fp;
use crate::poly::{center, monic_nonconstant, squarefree_decomposition, Poly};
use crate::ring::{unit_torsion, Ring, RingElem};

/// The substitution `t -> alpha * t + beta`, `alpha` a unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineAut {
    alpha: RingElem,
    beta: RingElem,
}

impl AffineAut {
    pub fn new(alpha: RingElem, beta: RingElem) -> Result<AffineAut> {
        if alpha.ring() != beta.ring() {
            return Err(Error::MixedRings {
                left: alpha.ring(),
                right: beta.ring(),
            });
        }
        if !alpha.is_unit() {
            return Err(Error::NotAUnit(alpha.to_string()));
        }
        Ok(AffineAut { alpha, beta })
    }

    pub fn identity(ring: Ring) -> AffineAut {
        AffineAut {
            alpha: ring.one(),
            beta: ring.zero(),
        }
    }

    /// The map fixing `a`: `t -> alpha * t + (1 - alpha) * a`.
    pub fn fixing(alpha: RingElem, a: &RingElem) -> Result<AffineAut> {
        let beta = &(&alpha.ring().one() - &alpha) * a;
        AffineAut::new(alpha, beta)
    }

    pub fn alpha(&self) -> &RingElem {
        &self.alpha
    }

    pub fn beta(&self) -> &RingElem {
        &self.beta
    }

    pub fn ring(&self) -> Ring {
        self.alpha.ring()
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.is_one() && self.beta.is_zero()
    }

    /// `(alpha_1 * alpha_2, beta_1 + alpha_1 * beta_2)`: the affine map
    /// `x -> self(other(x))`. Substituting `self` and then `other` into a
    /// polynomial equals substituting `self.compose(other)`.
    pub fn compose(&self, other: &AffineAut) -> AffineAut {
        AffineAut {
            alpha: &self.alpha * &other.alpha,
            beta: &self.beta + &(&self.alpha * &other.beta),
        }
    }

    pub fn inverse(&self) -> AffineAut {
        let inv = self.alpha.inverse().expect("alpha is a unit");
        let beta = -&(&inv * &self.beta);
        AffineAut { alpha: inv, beta }
    }

    /// `f(alpha * t + beta)`.
    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        f.affine_substitute(&self.alpha, &self.beta)
    }

    /// `(z - beta) / alpha`: where a root `z` of `f` goes, as a root of
    /// `f(alpha * t + beta)`.
    pub fn root_image(&self, z: &RingElem) -> RingElem {
        let inv = self.alpha.inverse().expect("alpha is a unit");
        &(z - &self.beta) * &inv
    }

    /// Order under [`AffineAut::compose`], found by iterating; `None` if the
    /// identity is not reached within `bound` steps.
    pub fn order(&self, bound: usize) -> Option<usize> {
        let mut power = self.clone();
        for k in 1..=bound {
            if power.is_identity() {
                return Some(k);
            }
            power = power.compose(self);
        }
        None
    }
}

impl fmt::Display for AffineAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

/// An explicit finite automorphism group with its cyclic structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    elements: Vec<AffineAut>,
    orders: Vec<usize>,
    cyclic: bool,
    generator: Option<AffineAut>,
}

impl FiniteGroup {
    /// Sorts and deduplicates `elements`, then computes element orders by
    /// repeated composition.
    ///
    /// # Panics
    /// If the list is empty or some element does not return to the identity
    /// within `|elements|` steps, which means the list is not a group.
    pub fn from_elements(mut elements: Vec<AffineAut>) -> FiniteGroup {
        elements.sort();
        elements.dedup();
        assert!(!elements.is_empty(), "a group contains the identity");
        let n = elements.len();
        let orders: Vec<usize> = elements
            .iter()
            .map(|a| a.order(n).unwrap_or_else(|| panic!("{a} has order > {n}")))
            .collect();
        let generator = elements
            .iter()
            .zip(&orders)
            .find(|(_, &k)| k == n)
            .map(|(a, _)| a.clone());
        FiniteGroup {
            cyclic: generator.is_some(),
            elements,
            orders,
            generator,
        }
    }

    /// Elements in canonical `(alpha, beta)` order; the identity comes first.
    pub fn elements(&self) -> &[AffineAut] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    /// The canonically smallest element of maximal order, if that order is
    /// the group order.
    pub fn generator(&self) -> Option<&AffineAut> {
        self.generator.as_ref()
    }

    pub fn element_orders(&self) -> impl Iterator<Item = (&AffineAut, usize)> {
        self.elements.iter().zip(self.orders.iter().copied())
    }

    pub fn contains(&self, a: &AffineAut) -> bool {
        self.elements.binary_search(a).is_ok()
    }
}

/// The full automorphism group of `I_f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutGroup {
    Finite(FiniteGroup),
    /// `{ (alpha, (1 - alpha) * a) : alpha a unit }`, isomorphic to the unit
    /// group; arises exactly for `f = (t - a)^n`.
    UnitsOfR { fixed_point: RingElem },
}

impl AutGroup {
    pub fn ring(&self) -> Ring {
        match self {
            AutGroup::Finite(g) => g.elements[0].ring(),
            AutGroup::UnitsOfR { fixed_point } => fixed_point.ring(),
        }
    }

    pub fn contains(&self, a: &AffineAut) -> bool {
        match self {
            AutGroup::Finite(g) => g.contains(a),
            AutGroup::UnitsOfR { fixed_point } => {
                a.ring() == fixed_point.ring()
                    && *a.beta() == &(&a.ring().one() - a.alpha()) * fixed_point
            }
        }
    }

    /// Group order; `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        match self {
            AutGroup::Finite(g) => Some(g.order() as u64),
            AutGroup::UnitsOfR { fixed_point } => match fixed_point.ring() {
                Ring::Integers => Some(2),
                Ring::Rationals => None,
                Ring::PrimeField(p) => Some(u64::from(p) - 1),
            },
        }
    }

    /// The unit groups of Z and F_p are cyclic, that of Q is not.
    pub fn is_cyclic(&self) -> bool {
        match self {
            AutGroup::Finite(g) => g.is_cyclic(),
            AutGroup::UnitsOfR { fixed_point } => fixed_point.ring() != Ring::Rationals,
        }
    }

    /// All elements in canonical order, if the group is finite.
    pub fn enumerate(&self) -> Option<Vec<AffineAut>> {
        match self {
            AutGroup::Finite(g) => Some(g.elements.clone()),
            AutGroup::UnitsOfR { fixed_point } => {
                let ring = fixed_point.ring();
                let units: Vec<RingElem> = match ring {
                    Ring::Integers => vec![ring.one(), ring.int(-1)],
                    Ring::Rationals => return None,
                    Ring::PrimeField(_) => ring.units()?.collect(),
                };
                let mut out: Vec<AffineAut> = units
                    .into_iter()
                    .map(|u| AffineAut::fixing(u, fixed_point).expect("unit"))
                    .collect();
                out.sort();
                Some(out)
            }
        }
    }

    /// Element-set equality, expanding symbolic groups over finite unit groups.
    pub fn same_elements(&self, other: &AutGroup) -> bool {
        match (self, other) {
            (AutGroup::UnitsOfR { fixed_point: a }, AutGroup::UnitsOfR { fixed_point: b }) => a == b,
            _ => match (self.enumerate(), other.enumerate()) {
                (Some(x), Some(y)) => x == y,
                _ => false,
            },
        }
    }

    pub fn as_finite(&self) -> Option<&FiniteGroup> {
        match self {
            AutGroup::Finite(g) => Some(g),
            AutGroup::UnitsOfR { .. } => None,
        }
    }
}

/// A proof that `I_f` and `I_g` are isomorphic: `f(alpha * t + beta) =
/// lambda * g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub map: AffineAut,
    pub lambda: RingElem,
}

/// Every isomorphism `I_f -> I_g`, given as witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessSet {
    Finite(Vec<IsoWitness>),
    /// `first` composed with each `(alpha, (1 - alpha) * a)`, where `a` is
    /// the single root of `g`; infinite over the rationals.
    Family {
        first: IsoWitness,
        target_fixed_point: RingElem,
    },
}

/// Whether `t -> alpha * t + beta` restricts to an automorphism of `I_f`.
pub fn verify_aut(f: &Poly, a: &AffineAut) -> Result<bool> {
    monic_nonconstant(f)?;
    let n = f.degree().expect("nonconstant") as u64;
    let image = a.apply(f)?;
    Ok(image == f.scale(&a.alpha.pow(n)))
}

/// `Some(a)` when `f = u * (t - a)^n` with `a` in the ring.
pub fn single_root_form(f: &Poly) -> Result<Option<RingElem>> {
    let sqf = squarefree_decomposition(f)?;
    Ok(match sqf.layers() {
        [(layer, _)] if layer.degree() == Some(1) => Some(-&layer.coeff(0)),
        _ => None,
    })
}

/// The gcd of `n - j` over the nonzero coefficients `c_j`, `j < n`, of `f`
/// recentred at its center. `None` when the center is missing or `f` has a
/// single root.
pub fn gap_exponent(f: &Poly) -> Result<Option<u64>> {
    let g = monic_nonconstant(f)?;
    let Some(z0) = center(&g)? else {
        return Ok(None);
    };
    Ok(centered_gap(&g.shift(&z0)))
}

fn centered_gap(h: &Poly) -> Option<u64> {
    let n = h.degree()?;
    let gap = (0..n)
        .filter(|&j| !h.coeff(j).is_zero())
        .fold(0u64, |acc, j| acc.gcd(&((n - j) as u64)));
    (gap > 0).then_some(gap)
}

/// The automorphism group of `I_f`.
///
/// * `f = (t - a)^n`: the symbolic group of maps fixing `a`.
/// * `n` invertible in the ring and a center `z0` available: every
///   automorphism fixes `z0`, and after recentring the condition on `alpha`
///   is `alpha^(n - j) = 1` for each nonzero coefficient `c_j`, so the group
///   is the maps fixing `z0` with `alpha` a root of unity of the gap
///   exponent.
/// * Over the integers with no integral center: `alpha = +-1`, `beta` is
///   solved from the `t^(n-1)` coefficient and the pair is checked.
/// * Over F_p with `p | n`: exhaustive search.
pub fn compute_aut(f: &Poly) -> Result<AutGroup> {
    let g = monic_nonconstant(f)?;
    if let Some(a) = single_root_form(&g)? {
        return Ok(AutGroup::UnitsOfR { fixed_point: a });
    }
    let ring = g.ring();
    let n = g.degree().expect("nonconstant");
    let n_elem = ring.int(n as i64);

    let candidates: Vec<AffineAut> = if n_elem.is_zero() {
        exhaustive_pairs(ring)
            .filter(|a| verify_aut(&g, a).unwrap_or(false))
            .collect()
    } else if let Some(z0) = center(&g)? {
        let gap = centered_gap(&g.shift(&z0)).ok_or_else(|| {
            Error::TheoryViolation(format!("{g} has several roots but its recentred form is t^{n}"))
        })?;
        unit_torsion(ring, gap)
            .into_iter()
            .map(|alpha| AffineAut::fixing(alpha, &z0))
            .collect::<Result<_>>()?
    } else {
        let root_sum = -&g.coeff(n - 1);
        let mut found = Vec::new();
        for alpha in unit_torsion(ring, 2) {
            let rhs = &(&ring.one() - &alpha) * &root_sum;
            if let Ok(beta) = rhs.try_div_exact(&n_elem) {
                found.push(AffineAut::new(alpha, beta)?);
            }
        }
        found
    };

    let mut elements = Vec::with_capacity(candidates.len());
    for a in candidates {
        if verify_aut(&g, &a)? {
            elements.push(a);
        } else if !n_elem.is_zero() && center(&g)?.is_some() {
            return Err(Error::TheoryViolation(format!(
                "predicted automorphism {a} of {g} fails the defining identity"
            )));
        }
    }
    Ok(AutGroup::Finite(FiniteGroup::from_elements(elements)))
}

fn exhaustive_pairs(ring: Ring) -> impl Iterator<Item = AffineAut> {
    let units: Vec<RingElem> = ring.units().expect("finite ring").collect();
    units.into_iter().flat_map(move |alpha| {
        ring.elements()
            .expect("finite ring")
            .map(move |beta| AffineAut {
                alpha: alpha.clone(),
                beta,
            })
    })
}

/// Conjugates the group of `I_f` to the group of `I_{f(t - z0)}`.
pub fn shift_conjugate(grp: &AutGroup, z0: &RingElem) -> AutGroup {
    match grp {
        AutGroup::UnitsOfR { fixed_point } => AutGroup::UnitsOfR {
            fixed_point: fixed_point + z0,
        },
        AutGroup::Finite(g) => {
            let moved = g
                .elements
                .iter()
                .map(|a| AffineAut {
                    alpha: a.alpha.clone(),
                    beta: &(&(&a.ring().one() - &a.alpha) * z0) + &a.beta,
                })
                .collect();
            AutGroup::Finite(FiniteGroup::from_elements(moved))
        }
    }
}

/// The group of `I_f` assembled from the groups of its multiplicity layers:
/// a substitution is an automorphism of `I_f` exactly when it is one of
/// every `I_{f_m}`.
pub fn layer_intersection(f: &Poly) -> Result<AutGroup> {
    let sqf = squarefree_decomposition(f)?;
    let groups = sqf
        .layers()
        .iter()
        .map(|(layer, _)| compute_aut(layer))
        .collect::<Result<Vec<_>>>()?;
    Ok(intersect(&groups))
}

fn intersect(groups: &[AutGroup]) -> AutGroup {
    if let Some(base) = groups.iter().find_map(AutGroup::as_finite) {
        let kept = base
            .elements
            .iter()
            .filter(|a| groups.iter().all(|g| g.contains(a)))
            .cloned()
            .collect();
        return AutGroup::Finite(FiniteGroup::from_elements(kept));
    }
    let fixed: BTreeSet<&RingElem> = groups
        .iter()
        .map(|g| match g {
            AutGroup::UnitsOfR { fixed_point } => fixed_point,
            AutGroup::Finite(_) => unreachable!(),
        })
        .collect();
    match fixed.len() {
        1 => groups[0].clone(),
        // (1 - alpha) a = (1 - alpha) a' with a != a' forces alpha = 1 in a domain
        _ => AutGroup::Finite(FiniteGroup::from_elements(vec![AffineAut::identity(
            groups[0].ring(),
        )])),
    }
}

/// The largest `k` with `f = h^k`, and the monic `h`.
pub fn power_reduce(f: &Poly) -> Result<(Poly, usize)> {
    let sqf = squarefree_decomposition(f)?;
    let k = sqf.multiplicities().fold(0, |acc, m| acc.gcd(&m));
    let ring = f.ring();
    let h = sqf
        .layers()
        .iter()
        .fold(Poly::one(ring), |acc, (layer, m)| &acc * &layer.pow((m / k) as u32));
    Ok((h, k))
}

/// The first isomorphism `I_f -> I_g` in canonical `(alpha, beta)` order,
/// or `None` when the ideals are not isomorphic.
pub fn iso_test(f: &Poly, g: &Poly) -> Result<Option<IsoWitness>> {
    let (fm, gm) = iso_inputs(f, g)?;
    if fm.degree() != gm.degree() {
        return Ok(None);
    }
    let maps = iso_maps(&fm, &gm)?;
    Ok(maps.into_iter().next().map(|a| witness(f, g, a)))
}

/// All isomorphisms `I_f -> I_g`: the first witness composed with every
/// automorphism of `I_g`.
pub fn iso_witnesses(f: &Poly, g: &Poly) -> Result<Option<WitnessSet>> {
    let Some(first) = iso_test(f, g)? else {
        return Ok(None);
    };
    let group = compute_aut(g)?;
    Ok(Some(match group.enumerate() {
        Some(elements) => {
            let mut maps: Vec<AffineAut> =
                elements.iter().map(|b| first.map.compose(b)).collect();
            maps.sort();
            WitnessSet::Finite(maps.into_iter().map(|a| witness(f, g, a)).collect())
        }
        None => match group {
            AutGroup::UnitsOfR { fixed_point } => WitnessSet::Family {
                first,
                target_fixed_point: fixed_point,
            },
            AutGroup::Finite(_) => unreachable!("finite groups enumerate"),
        },
    }))
}

fn iso_inputs(f: &Poly, g: &Poly) -> Result<(Poly, Poly)> {
    if f.ring() != g.ring() {
        return Err(Error::MixedRings {
            left: f.ring(),
            right: g.ring(),
        });
    }
    Ok((monic_nonconstant(f)?, monic_nonconstant(g)?))
}

/// `lambda = lc(f) * alpha^n / lc(g)`, which is `alpha^n` for inputs with
/// leading coefficient 1.
fn witness(f: &Poly, g: &Poly, map: AffineAut) -> IsoWitness {
    let n = f.degree().expect("nonconstant") as u64;
    let lc_f = f.leading_coeff().expect("nonzero");
    let lc_g = g.leading_coeff().expect("nonzero");
    let lambda = (lc_f * &map.alpha.pow(n))
        .try_div_exact(lc_g)
        .expect("leading coefficients are units");
    IsoWitness { map, lambda }
}

/// All maps with `f(alpha * t + beta) = alpha^n * g` for monic `f`, `g` of
/// equal degree, sorted; in the single-root case only `alpha = 1` is listed.
fn iso_maps(f: &Poly, g: &Poly) -> Result<Vec<AffineAut>> {
    let ring = f.ring();
    let n = f.degree().expect("nonconstant");
    let holds = |a: &AffineAut| -> Result<bool> { Ok(a.apply(f)? == g.scale(&a.alpha.pow(n as u64))) };

    if ring.int(n as i64).is_zero() {
        let mut out = Vec::new();
        for a in exhaustive_pairs(ring) {
            if holds(&a)? {
                out.push(a);
            }
        }
        return Ok(out);
    }

    // Recentre both sides (over Q when R = Z) and match coefficients.
    let (fq, gq) = (f.to_rationals(), g.to_rationals());
    let zf = center(&fq)?.expect("n is invertible");
    let zg = center(&gq)?.expect("n is invertible");
    let (hf, hg) = (fq.shift(&zf), gq.shift(&zg));

    let mut out = Vec::new();
    for alpha in recentred_alphas(&hf, &hg, n)? {
        let beta = &zf - &(&alpha * &zg);
        let (Some(alpha), Some(beta)) = (to_ring(ring, &alpha), to_ring(ring, &beta)) else {
            continue;
        };
        if !alpha.is_unit() {
            continue;
        }
        let a = AffineAut::new(alpha, beta)?;
        if holds(&a)? {
            out.push(a);
        } else {
            return Err(Error::TheoryViolation(format!(
                "recentred match {a} fails f(alpha t + beta) = alpha^n g"
            )));
        }
    }
    out.sort();
    Ok(out)
}

/// The rational `k`-th roots of `c`.
fn rational_roots(c: &RingElem, k: u32) -> Vec<RingElem> {
    let q = c.to_rational().expect("rational");
    if q.is_zero() {
        return vec![c.clone()];
    }
    let exact_root = |n: &BigInt| {
        let r = n.nth_root(k);
        (Pow::pow(&r, k) == *n).then_some(r)
    };
    let (Some(num), Some(den)) = (exact_root(&q.numer().abs()), exact_root(q.denom())) else {
        return Vec::new();
    };
    let root = BigRational::new(num, den);
    let ring = c.ring();
    let elem = |x: BigRational| ring.from_rational(&x).expect("rational");
    match (k.is_multiple_of(2), q.is_negative()) {
        (true, true) => Vec::new(),
        (true, false) => vec![elem(root.clone()), elem(-root)],
        (false, neg) => vec![elem(if neg { -root } else { root })],
    }
}

fn to_ring(ring: Ring, x: &RingElem) -> Option<RingElem> {
    match x.to_rational() {
        Some(q) if ring != x.ring() => ring.from_rational(&q).ok(),
        _ => Some(x.clone()),
    }
}

/// Units `alpha` with `hf(alpha * t) = alpha^n * hg(t)`, i.e.
/// `hf_j = alpha^(n - j) * hg_j` for every `j`.
fn recentred_alphas(hf: &Poly, hg: &Poly, n: usize) -> Result<Vec<RingElem>> {
    let ring = hf.ring();
    let support: Vec<usize> = (0..n).filter(|&j| !hf.coeff(j).is_zero()).collect();
    if (0..n).any(|j| hf.coeff(j).is_zero() != hg.coeff(j).is_zero()) {
        return Ok(Vec::new());
    }
    if support.is_empty() {
        return Ok(vec![ring.one()]);
    }
    let ratios: Vec<(u64, RingElem)> = support
        .iter()
        .map(|&j| {
            let r = hf.coeff(j).try_div_exact(&hg.coeff(j)).expect("field division");
            ((n - j) as u64, r)
        })
        .collect();
    let satisfies = |alpha: &RingElem| ratios.iter().all(|(e, r)| alpha.pow(*e) == *r);

    // Combine the relations into alpha^gap = target with Bezout exponents.
    let (gap, target) = ratios.iter().skip(1).fold(
        (ratios[0].0 as i64, ratios[0].1.clone()),
        |(g, c), (e, r)| {
            let ext = g.extended_gcd(&(*e as i64));
            let c = &c.pow_signed(ext.x).expect("unit") * &r.pow_signed(ext.y).expect("unit");
            (ext.gcd, c)
        },
    );
    let candidates: Vec<RingElem> = match ring {
        Ring::Integers => unreachable!("recentring happens over Q"),
        Ring::Rationals => rational_roots(&target, gap as u32),
        Ring::PrimeField(_) => {
            let mut x_gap = vec![ring.zero(); gap as usize + 1];
            x_gap[0] = -&target;
            x_gap[gap as usize] = ring.one();
            factor_fp::roots(&Poly::from_vec(ring, x_gap))?
                .into_iter()
                .map(|(r, _)| r)
                .collect()
        }
    };
    let mut out: Vec<RingElem> = candidates.into_iter().filter(|a| satisfies(a)).collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Ring = Ring::Rationals;
    const Z: Ring = Ring::Integers;

    fn fp(p: u64) -> Ring {
        Ring::prime_field(p).unwrap()
    }

    fn aut(ring: Ring, alpha: i64, beta: i64) -> AffineAut {
        AffineAut::new(ring.int(alpha), ring.int(beta)).unwrap()
    }

    fn finite(ring: Ring, pairs: &[(i64, i64)]) -> AutGroup {
        AutGroup::Finite(FiniteGroup::from_elements(
            pairs.iter().map(|&(a, b)| aut(ring, a, b)).collect(),
        ))
    }

    #[test]
    fn verify_examples() {
        let f = Poly::from_ints(Q, &[-1, 0, 1]);
        assert!(verify_aut(&f, &AffineAut::identity(Q)).unwrap());
        assert!(verify_aut(&f, &aut(Q, -1, 0)).unwrap());
        assert!(!verify_aut(&f, &aut(Q, 1, 1)).unwrap());
        assert!(matches!(
            verify_aut(&Poly::from_ints(Z, &[0, 0, 2]), &AffineAut::identity(Z)),
            Err(Error::NotMonic(_))
        ));
        assert!(matches!(AffineAut::new(Z.int(2), Z.zero()), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn composition_and_inverse() {
        let a = aut(Q, -1, 2);
        let b = aut(Q, 3, 5);
        assert_eq!(a.compose(&b), aut(Q, -3, -3));
        assert!(b.compose(&b.inverse()).is_identity());
        assert!(b.inverse().compose(&b).is_identity());
        let f = Poly::from_ints(Q, &[1, 4, 0, 2]);
        let twice = b.apply(&a.apply(&f).unwrap()).unwrap();
        assert_eq!(twice, a.compose(&b).apply(&f).unwrap());
    }

    #[test]
    fn single_roots() {
        let f = Poly::from_ints(Q, &[-3, 1]).pow(4);
        assert_eq!(single_root_form(&f).unwrap(), Some(Q.int(3)));
        assert_eq!(single_root_form(&Poly::from_ints(Q, &[-1, 0, 1])).unwrap(), None);
        let f5 = fp(5);
        let mut c = vec![0; 6];
        c[0] = -2;
        c[5] = 1;
        assert_eq!(single_root_form(&Poly::from_ints(f5, &c)).unwrap(), Some(f5.int(2)));
    }

    #[test]
    fn roots_zero_one_two() {
        let f = Poly::from_ints(Q, &[0, 2, -3, 1]);
        let g = compute_aut(&f).unwrap();
        assert!(g.same_elements(&finite(Q, &[(1, 0), (-1, 2)])));
        assert_eq!(g.order(), Some(2));
        assert!(g.is_cyclic());
        assert_eq!(g.as_finite().unwrap().generator(), Some(&aut(Q, -1, 2)));
    }

    #[test]
    fn full_affine_group_f3() {
        let r = fp(3);
        let f = Poly::from_ints(r, &[0, -1, 0, 1]);
        let g = compute_aut(&f).unwrap();
        assert_eq!(g.order(), Some(6));
        assert!(!g.is_cyclic());
        assert_eq!(g.as_finite().unwrap().generator(), None);
    }

    #[test]
    fn strict_divisor_is_trivial() {
        let f = Poly::from_ints(Q, &[0, 1, 1, 0, 1]);
        let g = compute_aut(&f).unwrap();
        assert!(g.same_elements(&finite(Q, &[(1, 0)])));
        assert_eq!(gap_exponent(&f).unwrap(), Some(1));
    }

    #[test]
    fn single_root_group_is_symbolic() {
        let f = Poly::from_ints(Q, &[-3, 1]).pow(4);
        let g = compute_aut(&f).unwrap();
        assert_eq!(g, AutGroup::UnitsOfR { fixed_point: Q.int(3) });
        assert_eq!(g.order(), None);
        assert!(g.contains(&aut(Q, 5, -12)));
        let z = compute_aut(&Poly::from_ints(Z, &[-3, 1]).pow(2)).unwrap();
        assert_eq!(z.enumerate().unwrap(), vec![aut(Z, 1, 0), aut(Z, -1, 6)]);
    }

    #[test]
    fn integers_without_center() {
        // t^2 - t: roots 0, 1; center 1/2 not in Z, but t -> 1 - t still works
        let f = Poly::from_ints(Z, &[0, -1, 1]);
        let g = compute_aut(&f).unwrap();
        assert!(g.same_elements(&finite(Z, &[(1, 0), (-1, 1)])));
        // t^3 - t^2 + ... roots 0, 1, 3: no symmetry
        let f = &Poly::from_ints(Z, &[0, 1]) * &(&Poly::from_ints(Z, &[-1, 1]) * &Poly::from_ints(Z, &[-3, 1]));
        assert!(compute_aut(&f).unwrap().same_elements(&finite(Z, &[(1, 0)])));
    }

    #[test]
    fn leading_unit_is_normalized() {
        let f = Poly::from_ints(Z, &[1, 0, -1]);
        let g = compute_aut(&f).unwrap();
        assert!(g.same_elements(&finite(Z, &[(1, 0), (-1, 0)])));
        assert_eq!(compute_aut(&Poly::from_ints(Q, &[2])), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn iso_examples() {
        let f = Poly::from_ints(Q, &[-1, 0, 1]);
        let w = iso_test(&f, &f).unwrap().unwrap();
        assert_eq!(w.map, AffineAut::identity(Q));
        assert!(w.lambda.is_one());
        let g = Poly::from_ints(Q, &[0, -2, 1]);
        let w = iso_test(&f, &g).unwrap().unwrap();
        assert_eq!(w.map, aut(Q, 1, -1));
        assert!(w.lambda.is_one());
        assert_eq!(iso_test(&f, &Poly::from_ints(Q, &[-1, 0, 0, 1])).unwrap(), None);
        assert_eq!(iso_test(&f, &Poly::from_ints(Q, &[1, 0, 1])).unwrap(), None);
        assert!(matches!(
            iso_test(&f, &Poly::from_ints(fp(5), &[1, 1])),
            Err(Error::MixedRings { .. })
        ));
    }

    #[test]
    fn iso_with_non_torsion_alpha() {
        // (2t)^2 - 4 = 4 (t^2 - 1)
        let f = Poly::from_ints(Q, &[-4, 0, 1]);
        let g = Poly::from_ints(Q, &[-1, 0, 1]);
        let w = iso_test(&f, &g).unwrap().unwrap();
        assert_eq!(w.map, aut(Q, 2, 0));
        assert_eq!(w.lambda, Q.int(4));
        // over Z only +-1 are units, so no isomorphism
        let fz = Poly::from_ints(Z, &[-4, 0, 1]);
        let gz = Poly::from_ints(Z, &[-1, 0, 1]);
        assert_eq!(iso_test(&fz, &gz).unwrap(), None);
        // t^3 - 8 and t^3 + 1: alpha^3 = -8 has the single rational root -2
        let f = Poly::from_ints(Q, &[-8, 0, 0, 1]);
        let g = Poly::from_ints(Q, &[1, 0, 0, 1]);
        assert_eq!(iso_test(&f, &g).unwrap().unwrap().map, aut(Q, -2, 0));
    }

    #[test]
    fn iso_with_scaling() {
        // g(t) = 2^-3 f(2t + 1) over F7
        let r = fp(7);
        let f = Poly::from_ints(r, &[3, 1, 5, 1]);
        let a = aut(r, 2, 1);
        let g = a.apply(&f).unwrap().scale(&r.int(2).pow(3).inverse().unwrap());
        let w = iso_test(&f, &g).unwrap().unwrap();
        assert_eq!(w.map.apply(&f).unwrap(), g.scale(&w.lambda));
        assert_eq!(w.lambda, w.map.alpha().pow(3));
    }

    #[test]
    fn single_root_isomorphism() {
        let f = Poly::from_ints(Q, &[-2, 1]).pow(3);
        let g = Poly::from_ints(Q, &[5, 1]).pow(3);
        let w = iso_test(&f, &g).unwrap().unwrap();
        assert_eq!(w.map, aut(Q, 1, 7));
        match iso_witnesses(&f, &g).unwrap().unwrap() {
            WitnessSet::Family { target_fixed_point, .. } => assert_eq!(target_fixed_point, Q.int(-5)),
            other => panic!("expected a family, got {other:?}"),
        }
    }

    #[test]
    fn all_witnesses_finite() {
        let f = Poly::from_ints(Q, &[-1, 0, 1]);
        let g = Poly::from_ints(Q, &[0, -2, 1]);
        let WitnessSet::Finite(ws) = iso_witnesses(&f, &g).unwrap().unwrap() else {
            panic!("finite group expected");
        };
        let maps: Vec<_> = ws.iter().map(|w| w.map.clone()).collect();
        assert_eq!(maps, vec![aut(Q, 1, -1), aut(Q, -1, 1)]);
        for w in &ws {
            assert_eq!(w.map.apply(&f).unwrap(), g.scale(&w.lambda));
        }
    }

    #[test]
    fn shift_examples() {
        let id = finite(Q, &[(1, 0)]);
        assert_eq!(shift_conjugate(&id, &Q.int(7)), id);
        let refl = finite(Q, &[(1, 0), (-1, 0)]);
        assert_eq!(shift_conjugate(&refl, &Q.one()), finite(Q, &[(1, 0), (-1, 2)]));
        let u = AutGroup::UnitsOfR { fixed_point: Q.zero() };
        assert_eq!(
            shift_conjugate(&u, &Q.int(3)),
            AutGroup::UnitsOfR { fixed_point: Q.int(3) }
        );
    }

    #[test]
    fn layer_examples() {
        let f = Poly::from_ints(Q, &[0, 1]) * Poly::from_ints(Q, &[-1, 1]).pow(2);
        assert_eq!(layer_intersection(&f).unwrap(), finite(Q, &[(1, 0)]));
        let f = Poly::from_ints(Q, &[-1, 0, 1]) * Poly::from_ints(Q, &[-4, 0, 1]).pow(2);
        let expected = finite(Q, &[(1, 0), (-1, 0)]);
        assert_eq!(layer_intersection(&f).unwrap(), expected);
        assert!(compute_aut(&f).unwrap().same_elements(&expected));
        let sq = Poly::from_ints(Q, &[0, 2, -3, 1]);
        assert_eq!(layer_intersection(&sq).unwrap(), compute_aut(&sq).unwrap());
    }

    #[test]
    fn power_reduce_examples() {
        let h = Poly::from_ints(Q, &[-1, 0, 1]);
        assert_eq!(power_reduce(&h.pow(3)).unwrap(), (h.clone(), 3));
        assert_eq!(power_reduce(&h).unwrap(), (h, 1));
        let t = Poly::from_ints(Q, &[0, 1]);
        let t1 = Poly::from_ints(Q, &[-1, 1]);
        let f = &t.pow(2) * &t1.pow(4);
        assert_eq!(power_reduce(&f).unwrap(), (&t * &t1.pow(2), 2));
    }

    #[test]
    fn group_closure() {
        let r = fp(7);
        // roots 1, 2, 4 and 0: t (t^3 - 1) has the cube roots of unity as symmetries
        let f = Poly::from_ints(r, &[0, -1, 0, 0, 1]);
        let g = compute_aut(&f).unwrap();
        let fin = g.as_finite().unwrap();
        assert_eq!(fin.order(), 3);
        for a in fin.elements() {
            assert!(fin.contains(&a.inverse()));
            for b in fin.elements() {
                assert!(fin.contains(&a.compose(b)));
            }
        }
    }
}
