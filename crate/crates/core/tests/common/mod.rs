#![allow(dead_code)]

pub mod lift_oracle;
pub mod quiver_oracle;
pub mod windows;

use annulus_core::triangulation::{all_flips, validate};
use annulus_core::{Arc, BoundaryId, Surface, Triangulation};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Bridging fan from lower point 0 over every upper point, closed off by
/// peripheral arcs at lower point 0.
pub fn fan_seed(s: &Surface) -> Triangulation {
    let mut arcs: Vec<Arc> = (0..s.q())
        .map(|upper| Arc::Bridging {
            lower: 0,
            upper,
            winding: 0,
        })
        .collect();
    arcs.push(Arc::Bridging {
        lower: 0,
        upper: 0,
        winding: 1,
    });
    arcs.extend((2..=s.p()).map(|span| Arc::Peripheral {
        boundary: BoundaryId::Lower,
        base: 0,
        span,
    }));
    validate(s, arcs).unwrap()
}

/// Ordinary triangulation reached from the fan by `steps` random flips that
/// stay ordinary.
pub fn random_ordinary(s: &Surface, seed: u64, steps: usize) -> Triangulation {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut t = fan_seed(s);
    for _ in 0..steps {
        let flips: Vec<_> = all_flips(&t)
            .unwrap()
            .into_iter()
            .filter(|(_, _, next)| next.is_ordinary())
            .collect();
        let k = rng.gen_range(0..flips.len());
        t = flips.into_iter().nth(k).unwrap().2;
    }
    t
}

/// Prüfer arcs at every marked point.
pub fn all_pruefer(s: &Surface) -> Triangulation {
    let arcs = s.boundaries().flat_map(|boundary| {
        (0..s.point_count(boundary)).map(move |point| Arc::Pruefer { boundary, point })
    });
    validate(s, arcs).unwrap()
}

/// Any triangulation reached by `steps` random flips from the fan (even
/// seeds, annuli only) or from [`all_pruefer`].
pub fn random_triangulation(s: &Surface, seed: u64, steps: usize) -> Triangulation {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut t = if seed.is_multiple_of(2) && !s.is_tube() {
        fan_seed(s)
    } else {
        all_pruefer(s)
    };
    for _ in 0..steps {
        let mut flips = all_flips(&t).unwrap();
        let k = rng.gen_range(0..flips.len());
        t = flips.swap_remove(k).2;
    }
    t
}

pub const ANNULI: [(usize, usize); 6] = [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (3, 2)];
