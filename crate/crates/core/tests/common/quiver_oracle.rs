//! Quiver from the universal cover: place every lift of every arc in a wide
//! window, add the boundary segments, and read the triangles off as
//! 3-cycles. All marked points sit on the two boundary lines, so every
//! 3-cycle bounds a face.

use std::collections::{BTreeMap, BTreeSet};

use annulus_core::{Arc, BoundaryId, Triangulation};

/// A marked point of the cover: `(x scaled by p*q, 0 for lower / 1 for upper)`.
type V = (i64, u8);

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Edge {
    Boundary,
    Arc(usize),
}

/// Twice the signed area of the triangle `a b c` (positive when
/// counterclockwise).
fn orient(a: V, b: V, c: V) -> i64 {
    let (ax, ay) = (a.0, a.1 as i64);
    let (bx, by) = (b.0, b.1 as i64);
    let (cx, cy) = (c.0, c.1 as i64);
    (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
}

pub fn cover_quiver(t: &Triangulation) -> Vec<Vec<i64>> {
    let s = t.surface();
    let (p, q) = (s.p() as i64, s.q() as i64);
    let period = p * q;
    let reach = t
        .arcs()
        .iter()
        .filter_map(|a| a.winding())
        .map(|w| w.abs())
        .max()
        .unwrap_or(0)
        + 3;

    let mut edges: BTreeMap<(V, V), Edge> = BTreeMap::new();
    let mut put = |u: V, v: V, e: Edge| {
        let key = if u < v { (u, v) } else { (v, u) };
        assert!(edges.insert(key, e).is_none() || e == Edge::Boundary);
    };
    for n in -reach - 1..=reach + 1 {
        for i in 0..p {
            put(
                (n * period + i * q, 0),
                (n * period + (i + 1) * q, 0),
                Edge::Boundary,
            );
        }
        for j in 0..q {
            put(
                (n * period + j * p, 1),
                (n * period + (j + 1) * p, 1),
                Edge::Boundary,
            );
        }
    }
    for (idx, arc) in t.arcs().iter().enumerate() {
        for n in -reach..=reach {
            let shift = n * period;
            match *arc {
                Arc::Peripheral {
                    boundary,
                    base,
                    span,
                } => {
                    let (step, side) = match boundary {
                        BoundaryId::Lower => (q, 0),
                        BoundaryId::Upper => (p, 1),
                    };
                    let a = shift + base as i64 * step;
                    put((a, side), (a + span as i64 * step, side), Edge::Arc(idx));
                }
                Arc::Bridging {
                    lower,
                    upper,
                    winding,
                } => {
                    let l = shift + lower as i64 * q;
                    let u = shift + upper as i64 * p + winding * period;
                    put((l, 0), (u, 1), Edge::Arc(idx));
                }
                _ => panic!("cover quiver needs an ordinary triangulation"),
            }
        }
    }

    let mut adjacent: BTreeMap<V, BTreeSet<V>> = BTreeMap::new();
    for &(u, v) in edges.keys() {
        adjacent.entry(u).or_default().insert(v);
        adjacent.entry(v).or_default().insert(u);
    }
    let edge = |u: V, v: V| edges[&if u < v { (u, v) } else { (v, u) }];

    let n = t.len();
    let mut b = vec![vec![0i64; n]; n];
    let mut seen = BTreeSet::new();
    for &(u, v) in edges.keys() {
        for &w in adjacent[&u].intersection(&adjacent[&v]) {
            let mut tri = [u, v, w];
            tri.sort();
            // one representative per translation orbit
            if !(0..period).contains(&tri[0].0) || !seen.insert(tri) {
                continue;
            }
            let [a, mut bb, mut c] = tri;
            let area = orient(a, bb, c);
            // Three points on one line: a peripheral arc over two boundary
            // segments. Counterclockwise runs left to right along the lower
            // line and right to left along the upper one.
            let clockwise = if area == 0 { a.1 == 1 } else { area < 0 };
            if clockwise {
                std::mem::swap(&mut bb, &mut c);
            }
            let sides = [edge(a, bb), edge(bb, c), edge(c, a)];
            for k in 0..3 {
                if let (Edge::Arc(x), Edge::Arc(y)) = (sides[k], sides[(k + 1) % 3]) {
                    b[x][y] += 1;
                    b[y][x] -= 1;
                }
            }
        }
    }
    b
}
