//! Windows of triangulation sequences with a known answer.

use annulus_core::dynamics::{limit_triangulation, Classification};
use annulus_core::triangulation::{canonical_orbit_form, dehn_twist};
use annulus_core::{SequenceWindow, Sign, Surface, Triangulation};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{random_ordinary, random_triangulation, ANNULI};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Stabilizing,
    Increasing,
    Decreasing,
}

pub struct Generated {
    pub window: SequenceWindow,
    pub blueprint_index: usize,
    pub d: Vec<i64>,
    pub classification: Classification,
    pub limit: Triangulation,
}

/// Closed-form exponents: `len` terms, monotone, with the requested tail.
fn exponents(rng: &mut StdRng, shape: Shape, len: usize) -> Vec<i64> {
    let start = rng.gen_range(-3..=3);
    let mut d = vec![start];
    for i in 1..len {
        let last = *d.last().unwrap();
        let step = match shape {
            // may climb early, then constant over the last two terms
            Shape::Stabilizing if i + 1 < len => rng.gen_range(0..=1),
            Shape::Stabilizing => 0,
            Shape::Increasing => rng.gen_range(1..=2),
            Shape::Decreasing => -rng.gen_range(1..=2),
        };
        d.push(last + step);
    }
    d
}

pub fn generate(seed: u64, shape: Shape) -> Generated {
    let mut rng = StdRng::seed_from_u64(seed);
    let (p, q) = ANNULI[rng.gen_range(0..ANNULI.len())];
    let s = Surface::new(p, q).unwrap();
    let base = random_ordinary(&s, rng.gen(), rng.gen_range(0..10));
    let orbit = canonical_orbit_form(&base).0;

    let mut terms = Vec::new();
    let noise = rng.gen_range(0..=3);
    while terms.len() < noise {
        // C(1,1) has a single ordinary orbit, so strict noise is needed there
        let t = random_triangulation(&s, rng.gen(), rng.gen_range(1..10));
        if canonical_orbit_form(&t).0 != orbit {
            terms.push(t);
        }
    }
    let len = rng.gen_range(3..=7);
    let raw = exponents(&mut rng, shape, len);
    terms.extend(raw.iter().map(|&e| dehn_twist(&base, e)));

    let blueprint = dehn_twist(&base, raw[0]);
    let d: Vec<i64> = raw.iter().map(|e| e - raw[0]).collect();
    let (classification, limit) = match shape {
        Shape::Stabilizing => {
            let k = *d.last().unwrap();
            (Classification::Stabilizes(k), dehn_twist(&blueprint, k))
        }
        Shape::Increasing => (
            Classification::IncreasingWindow,
            limit_triangulation(&base, Sign::Plus).unwrap(),
        ),
        Shape::Decreasing => (
            Classification::DecreasingWindow,
            limit_triangulation(&base, Sign::Minus).unwrap(),
        ),
    };
    Generated {
        window: SequenceWindow::new(terms).unwrap(),
        blueprint_index: noise,
        d,
        classification,
        limit,
    }
}

/// A window mixing a few orbits with random twist exponents.
pub fn scrambled(seed: u64) -> SequenceWindow {
    let mut rng = StdRng::seed_from_u64(seed);
    let (p, q) = ANNULI[rng.gen_range(0..ANNULI.len())];
    let s = Surface::new(p, q).unwrap();
    let orbits: Vec<Triangulation> = (0..rng.gen_range(1..=3))
        .map(|_| random_ordinary(&s, rng.gen(), rng.gen_range(0..8)))
        .collect();
    let terms = (0..rng.gen_range(1..=10))
        .map(|_| {
            let t = &orbits[rng.gen_range(0..orbits.len())];
            dehn_twist(t, rng.gen_range(-4..=4))
        })
        .collect();
    SequenceWindow::new(terms).unwrap()
}
