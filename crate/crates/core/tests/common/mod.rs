//! Random polynomial generators shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use ideal_aut::autgroup::AffineAut;
use ideal_aut::poly::Poly;
use ideal_aut::ring::{Ring, RingElem};

pub const PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

pub fn fp(p: u64) -> Ring {
    Ring::prime_field(p).unwrap()
}

/// A small random element; over Q occasionally a fraction.
pub fn small_elem(rng: &mut ChaCha8Rng, ring: Ring) -> RingElem {
    match ring {
        Ring::PrimeField(p) => ring.int(rng.gen_range(0..p as i64)),
        Ring::Rationals if rng.gen_bool(0.2) => {
            let num = rng.gen_range(-4..=4);
            let den = rng.gen_range(2..=3);
            ring.parse_elem(&format!("{num}/{den}")).unwrap()
        }
        _ => ring.int(rng.gen_range(-4..=4)),
    }
}

pub fn random_unit(rng: &mut ChaCha8Rng, ring: Ring) -> RingElem {
    loop {
        let u = match ring {
            Ring::Integers => ring.int(*[1, -1].choose(rng).unwrap()),
            _ => small_elem(rng, ring),
        };
        if u.is_unit() {
            return u;
        }
    }
}

/// Monic polynomial of degree `n` with small random lower coefficients;
/// about a third of the coefficients are forced to zero so that gap
/// structure shows up.
pub fn random_monic(rng: &mut ChaCha8Rng, ring: Ring, n: usize) -> Poly {
    let mut coeffs: Vec<RingElem> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.35) {
                ring.zero()
            } else {
                small_elem(rng, ring)
            }
        })
        .collect();
    coeffs.push(ring.one());
    Poly::new(ring, coeffs).unwrap()
}

/// `h(t^g)` translated by a random amount: these have nontrivial groups
/// whenever the torsion allows it.
pub fn structured(rng: &mut ChaCha8Rng, ring: Ring, max_deg: usize) -> Poly {
    let g = rng.gen_range(2..=max_deg.min(4));
    let m = rng.gen_range(1..=(max_deg / g).max(1));
    let h = random_monic(rng, ring, m);
    let mut f = Poly::zero(ring);
    let tg = Poly::t(ring).pow(g as u32);
    for c in h.coeffs().iter().rev() {
        f = &(&f * &tg) + &Poly::constant(c.clone());
    }
    // occasionally multiply by a power of t to put the center among the roots
    if f.degree().unwrap() < max_deg && rng.gen_bool(0.3) {
        f = &f * &Poly::t(ring);
    }
    f.shift(&small_elem(rng, ring))
}

/// Product of random monic factors of degree 1 or 2 raised to random
/// powers, total degree at most `max_deg`.
pub fn layered(rng: &mut ChaCha8Rng, ring: Ring, max_deg: usize) -> Poly {
    let mut f = Poly::one(ring);
    let mut deg = 0;
    while deg < 2 || (deg < max_deg && rng.gen_bool(0.6)) {
        let d = rng.gen_range(1..=2usize);
        let e = rng.gen_range(1..=3usize);
        if deg + d * e > max_deg {
            if deg >= 1 {
                break;
            }
            continue;
        }
        f = &f * &random_monic(rng, ring, d).pow(e as u32);
        deg += d * e;
    }
    f
}

/// Over F_p: the roots form a union of orbits of a random affine map, with
/// one multiplicity per orbit, so the map is an automorphism.
pub fn orbit_poly(rng: &mut ChaCha8Rng, p: u64, max_deg: usize) -> Poly {
    let ring = fp(p);
    let a = AffineAut::new(random_unit(rng, ring), small_elem(rng, ring)).unwrap();
    let mut f = Poly::one(ring);
    let mut used: Vec<RingElem> = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let start = small_elem(rng, ring);
        if used.contains(&start) {
            continue;
        }
        let mut orbit = vec![start.clone()];
        let mut z = a.root_image(&start);
        while z != start {
            orbit.push(z.clone());
            z = a.root_image(&z);
        }
        let m = rng.gen_range(1..=2usize);
        if f.degree().unwrap() + orbit.len() * m > max_deg {
            continue;
        }
        for r in &orbit {
            f = &f * &Poly::root_factor(r).pow(m as u32);
        }
        used.extend(orbit);
    }
    if f.degree().unwrap() == 0 {
        f = Poly::root_factor(&small_elem(rng, ring));
        f = &f * &Poly::root_factor(&small_elem(rng, ring));
    }
    f
}

pub fn random_ring(rng: &mut ChaCha8Rng) -> Ring {
    match rng.gen_range(0..4) {
        0 => Ring::Integers,
        1 => Ring::Rationals,
        _ => fp(*PRIMES.choose(rng).unwrap()),
    }
}

/// A random test polynomial of one of the shapes above.
pub fn any_poly(rng: &mut ChaCha8Rng, ring: Ring, max_deg: usize) -> Poly {
    match rng.gen_range(0..3) {
        0 => {
            let n = rng.gen_range(1..=max_deg);
            random_monic(rng, ring, n)
        }
        1 => structured(rng, ring, max_deg),
        _ => layered(rng, ring, max_deg),
    }
}
