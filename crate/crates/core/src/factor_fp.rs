//! Factorization over prime fields and the action of automorphisms on roots.

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::autgroup::{verify_aut, AffineAut};
use crate::error::{Error, Result};
use crate::poly::{gcd, monic_nonconstant, squarefree_decomposition, Poly};
use crate::ring::{Ring, RingElem};

/// Seed used when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 0x1d3a_57f0_9c2e_4b61;

/// Irreducible factors with multiplicities, ordered by degree and then by
/// the residues of the negated coefficients (so linear factors appear in
/// root order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpFactorization {
    factors: Vec<(Poly, usize)>,
}

impl FpFactorization {
    pub fn factors(&self) -> &[(Poly, usize)] {
        &self.factors
    }

    pub fn expand(&self, ring: Ring) -> Poly {
        self.factors
            .iter()
            .fold(Poly::one(ring), |acc, (p, e)| &acc * &p.pow(*e as u32))
    }

    /// Roots in the prime field with their multiplicities.
    pub fn roots(&self) -> Vec<(RingElem, usize)> {
        self.factors
            .iter()
            .filter(|(p, _)| p.degree() == Some(1))
            .map(|(p, e)| (-&p.coeff(0), *e))
            .collect()
    }

    /// True when every factor is linear.
    pub fn splits(&self) -> bool {
        self.factors.iter().all(|(p, _)| p.degree() == Some(1))
    }
}

fn prime_field_of(f: &Poly) -> Result<u32> {
    f.ring().modulus().ok_or(Error::WrongRing(f.ring()))
}

fn sort_key(f: &Poly) -> (usize, Vec<u32>) {
    let key = f
        .coeffs()
        .iter()
        .map(|c| (-c).residue().expect("prime field"))
        .collect();
    (f.degree().unwrap_or(0), key)
}

/// Complete factorization into monic irreducibles. The random choices of
/// the equal-degree splitting are drawn from a generator seeded with `seed`;
/// the result itself does not depend on it.
pub fn factor(f: &Poly, seed: u64) -> Result<FpFactorization> {
    let p = prime_field_of(f)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (layer, m) in squarefree_decomposition(f)?.layers() {
        for (block, d) in distinct_degree(layer, p) {
            for irreducible in equal_degree(&block, d, p, &mut rng) {
                factors.push((irreducible, *m));
            }
        }
    }
    factors.sort_by_key(|(g, _)| sort_key(g));
    Ok(FpFactorization { factors })
}

/// Roots of `f` in its prime field, with multiplicities, in ascending order.
pub fn roots(f: &Poly) -> Result<Vec<(RingElem, usize)>> {
    let p = prime_field_of(f)?;
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut out = Vec::new();
    for (layer, m) in squarefree_decomposition(f)?.layers() {
        let t = Poly::t(f.ring());
        let frobenius = pow_mod(&t, &BigUint::from(p), layer);
        let linear_part = gcd(layer, &(&frobenius - &t))?;
        if linear_part.is_constant() {
            continue;
        }
        for g in equal_degree(&linear_part, 1, p, &mut rng) {
            out.push((-&g.coeff(0), *m));
        }
    }
    out.sort();
    Ok(out)
}

fn pow_mod(base: &Poly, exp: &BigUint, modulus: &Poly) -> Poly {
    let reduce = |x: &Poly| x.div_rem(modulus).expect("monic modulus").1;
    let mut result = reduce(&Poly::one(base.ring()));
    let b = reduce(base);
    for i in (0..exp.bits()).rev() {
        result = reduce(&(&result * &result));
        if exp.bit(i) {
            result = reduce(&(&result * &b));
        }
    }
    result
}

/// Splits a monic squarefree polynomial into products of irreducibles of
/// equal degree, tagged with that degree.
fn distinct_degree(f: &Poly, p: u32) -> Vec<(Poly, usize)> {
    let ring = f.ring();
    let t = Poly::t(ring);
    let p_big = BigUint::from(p);
    let mut rest = f.clone();
    let mut h = t.clone();
    let mut out = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = pow_mod(&h, &p_big, &rest);
        let g = gcd(&rest, &(&h - &t)).expect("rest is nonzero");
        if !g.is_constant() {
            rest = rest.exact_div(&g).expect("gcd divides");
            h = h.div_rem(&rest).expect("monic").1;
            out.push((g, d));
        }
        d += 1;
    }
    if !rest.is_constant() {
        let deg = rest.degree().expect("nonzero");
        out.push((rest, deg));
    }
    out
}

/// Cantor-Zassenhaus splitting of a product of distinct irreducibles of
/// degree `d`.
fn equal_degree(f: &Poly, d: usize, p: u32, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let n = f.degree().expect("nonconstant");
    if n == d {
        return vec![f.clone()];
    }
    let ring = f.ring();
    let target = n / d;
    let exponent = (BigUint::from(p).pow(d as u32) - BigUint::one()) / 2u32;
    let mut pending = vec![f.clone()];
    let mut done = Vec::new();
    while !pending.is_empty() {
        let coeffs = (0..n).map(|_| ring.int(rng.gen_range(0..i64::from(p)))).collect();
        let a = Poly::from_vec(ring, coeffs);
        if a.is_constant() {
            continue;
        }
        let splitter = if p == 2 {
            trace_map(&a, d, f)
        } else {
            &pow_mod(&a, &exponent, f) - &Poly::one(ring)
        };
        let mut next = Vec::new();
        for u in pending {
            let h = gcd(&u, &splitter.div_rem(&u).expect("monic").1).expect("u nonzero");
            let parts = if h.is_constant() || h.degree() == u.degree() {
                vec![u]
            } else {
                let other = u.exact_div(&h).expect("h divides u");
                vec![h, other]
            };
            for part in parts {
                if part.degree() == Some(d) {
                    done.push(part);
                } else {
                    next.push(part);
                }
            }
        }
        pending = next;
    }
    debug_assert_eq!(done.len(), target);
    done
}

/// `a + a^2 + a^4 + ... + a^(2^(d-1))` modulo `f`, the splitting element in
/// characteristic 2.
fn trace_map(a: &Poly, d: usize, f: &Poly) -> Poly {
    let reduce = |x: &Poly| x.div_rem(f).expect("monic").1;
    let mut term = reduce(a);
    let mut sum = term.clone();
    for _ in 1..d {
        term = reduce(&(&term * &term));
        sum = &sum + &term;
    }
    sum
}

/// One root `z` of `f` together with where an automorphism sends it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootImage {
    pub root: RingElem,
    pub multiplicity: usize,
    pub image: RingElem,
}

/// A non-linear irreducible factor and the factor its roots are sent to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorImage {
    pub factor: Poly,
    pub multiplicity: usize,
    pub image: Poly,
}

/// The permutation of the roots of `f` induced by an automorphism of `I_f`:
/// `z -> (z - beta) / alpha`. Roots outside the prime field are tracked only
/// through their irreducible factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootPermutation {
    entries: Vec<RootImage>,
    factor_images: Vec<FactorImage>,
}

impl RootPermutation {
    /// Root entries in ascending root order.
    pub fn entries(&self) -> &[RootImage] {
        &self.entries
    }

    pub fn factor_images(&self) -> &[FactorImage] {
        &self.factor_images
    }

    pub fn image_of(&self, root: &RingElem) -> Option<&RingElem> {
        self.entries
            .iter()
            .find(|e| e.root == *root)
            .map(|e| &e.image)
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().all(|e| e.root == e.image)
            && self.factor_images.iter().all(|e| e.factor == e.image)
    }

    /// The permutation that applies `self` first and then `other`, so that
    /// `root_permutation(f, a.compose(b)) == root_permutation(f, a).then(&root_permutation(f, b))`.
    ///
    /// # Panics
    /// If the two permutations act on different root sets.
    pub fn then(&self, other: &RootPermutation) -> RootPermutation {
        let entries = self
            .entries
            .iter()
            .map(|e| RootImage {
                image: other
                    .image_of(&e.image)
                    .expect("permutations of the same roots")
                    .clone(),
                ..e.clone()
            })
            .collect();
        let factor_images = self
            .factor_images
            .iter()
            .map(|e| FactorImage {
                image: other
                    .factor_images
                    .iter()
                    .find(|o| o.factor == e.image)
                    .expect("permutations of the same factors")
                    .image
                    .clone(),
                ..e.clone()
            })
            .collect();
        RootPermutation {
            entries,
            factor_images,
        }
    }
}

/// The root permutation of an automorphism `a` of `I_f` over a prime field.
pub fn root_permutation(f: &Poly, a: &AffineAut) -> Result<RootPermutation> {
    prime_field_of(f)?;
    monic_nonconstant(f)?;
    if !verify_aut(f, a)? {
        return Err(Error::NotAnAutomorphism {
            alpha: a.alpha().to_string(),
            beta: a.beta().to_string(),
        });
    }
    let fac = factor(f, DEFAULT_SEED)?;
    let roots = fac.roots();
    let mut entries = Vec::with_capacity(roots.len());
    for (root, multiplicity) in &roots {
        let image = a.root_image(root);
        match roots.iter().find(|(r, _)| *r == image) {
            Some((_, m)) if m == multiplicity => entries.push(RootImage {
                root: root.clone(),
                multiplicity: *multiplicity,
                image,
            }),
            _ => {
                return Err(Error::TheoryViolation(format!(
                    "{a} sends root {root} of multiplicity {multiplicity} to {image}, \
                     which is not a root of the same multiplicity"
                )))
            }
        }
    }
    let mut factor_images = Vec::new();
    for (factor, multiplicity) in fac.factors().iter().filter(|(g, _)| g.degree() > Some(1)) {
        let image = a.apply(factor)?.monic()?;
        if !fac.factors().contains(&(image.clone(), *multiplicity)) {
            return Err(Error::TheoryViolation(format!(
                "{a} maps factor {factor} to {image}, which is not a factor of the same multiplicity"
            )));
        }
        factor_images.push(FactorImage {
            factor: factor.clone(),
            multiplicity: *multiplicity,
            image,
        });
    }
    Ok(RootPermutation {
        entries,
        factor_images,
    })
}
