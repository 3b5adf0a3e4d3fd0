//! Random test instances. Every generator is driven by a caller-supplied RNG
//! so corpora are reproducible from a seed.

use malachite::num::basic::traits::Zero;
use rand::Rng;

use crate::exact::{Rational, Vector};
use crate::instance::{is_general_position, CcpInstance};
use crate::lp::ray_embrace;

const MAX_TRIES: usize = 100_000;

pub fn random_point<R: Rng>(rng: &mut R, d: usize, range: i64) -> Vector {
    (0..d).map(|_| Rational::from(rng.gen_range(-range..=range))).collect()
}

pub fn random_nonzero_point<R: Rng>(rng: &mut R, d: usize, range: i64) -> Vector {
    loop {
        let p = random_point(rng, d, range);
        if p.iter().any(|x| *x != Rational::ZERO) {
            return p;
        }
    }
}

/// A point with coordinates `a/q`, `|a| ≤ range`, `q ∈ 1..=den`.
pub fn random_rational_point<R: Rng>(rng: &mut R, d: usize, range: i64, den: i64) -> Vector {
    (0..d).map(|_| Rational::from_signeds(rng.gen_range(-range..=range), rng.gen_range(1..=den))).collect()
}

/// `size` integer points whose cone contains `b`, by rejection.
pub fn random_embracing_color<R: Rng>(rng: &mut R, b: &[Rational], size: usize, range: i64) -> Vec<Vector> {
    let d = b.len();
    for _ in 0..MAX_TRIES {
        let c: Vec<Vector> = (0..size).map(|_| random_point(rng, d, range)).collect();
        if ray_embrace(&c, b).expect("dimensions agree").is_some() {
            return c;
        }
    }
    panic!("no embracing color found for d = {d}, range = {range}");
}

/// `d` colors of `size` integer points each, every color embracing `b`.
pub fn random_instance<R: Rng>(rng: &mut R, d: usize, size: usize, range: i64) -> CcpInstance {
    let b = random_nonzero_point(rng, d, range);
    let colors = (0..d).map(|_| random_embracing_color(rng, &b, size, range)).collect();
    CcpInstance::new(d, colors, b).expect("well-formed")
}

/// A random instance that already satisfies the general-position properties.
pub fn random_general_position_instance<R: Rng>(rng: &mut R, d: usize, range: i64) -> CcpInstance {
    for _ in 0..MAX_TRIES {
        let inst = random_instance(rng, d, d, range);
        if is_general_position(&inst).expect("checkable") {
            return inst;
        }
    }
    panic!("no general-position instance found for d = {d}, range = {range}");
}

/// An instance with rational coordinates and `size` points per color.
pub fn random_rational_instance<R: Rng>(rng: &mut R, d: usize, size: usize, range: i64, den: i64) -> CcpInstance {
    let b = loop {
        let b = random_rational_point(rng, d, range, den);
        if b.iter().any(|x| *x != Rational::ZERO) {
            break b;
        }
    };
    let colors = (0..d)
        .map(|_| {
            for _ in 0..MAX_TRIES {
                let c: Vec<Vector> = (0..size).map(|_| random_rational_point(rng, d, range, den)).collect();
                if ray_embrace(&c, &b).expect("dimensions agree").is_some() {
                    return c;
                }
            }
            panic!("no embracing rational color found");
        })
        .collect();
    CcpInstance::new(d, colors, b).expect("well-formed")
}

pub fn random_point_set<R: Rng>(rng: &mut R, n: usize, d: usize, range: i64) -> Vec<Vector> {
    (0..n).map(|_| random_point(rng, d, range)).collect()
}
