//! Brute-force crossing test: draw each arc as an explicit polyline in the
//! strip R x [0,1] and intersect segments of all relevant translates.
//!
//! Shapes: peripheral arcs are flat trapezoids hugging their boundary (taller
//! for longer spans), bridging arcs are bent chords, spirals climb towards
//! the core line y = 1/2 and are truncated after a few turns.

use annulus_core::{Arc, BoundaryId, Surface};
use num_rational::Ratio;

type Q = Ratio<i128>;

fn q(n: i128, d: i128) -> Q {
    Q::new(n, d)
}

fn int(n: i128) -> Q {
    Q::from_integer(n)
}

#[derive(Clone, Copy, Debug)]
struct Pt {
    x: Q,
    y: Q,
}

fn pt(x: Q, y: Q) -> Pt {
    Pt { x, y }
}

fn eps() -> Q {
    q(1, 100)
}

fn coord(s: &Surface, b: BoundaryId, i: usize) -> Q {
    let n = match b {
        BoundaryId::Lower => s.p(),
        BoundaryId::Upper => s.q(),
    };
    q(i as i128, n as i128)
}

fn on_side(b: BoundaryId, y: Q) -> Q {
    match b {
        BoundaryId::Lower => y,
        BoundaryId::Upper => int(1) - y,
    }
}

/// Heights of the spiral profile at offsets 0, eps/2, 1, 2, ..., turns.
fn spiral_profile(turns: i128) -> Vec<(Q, Q)> {
    let mut out = vec![(int(0), int(0)), (eps() / int(2), q(1, 5))];
    for k in 1..=turns {
        out.push((int(k), q(1, 2) - q(1, k + 3)));
    }
    out
}

/// The polyline of the lift of `a` at translate zero.
fn polyline(s: &Surface, a: &Arc, turns: i128) -> Vec<Pt> {
    match *a {
        Arc::Peripheral {
            boundary,
            base,
            span,
        } => {
            let r = match boundary {
                BoundaryId::Lower => s.p(),
                BoundaryId::Upper => s.q(),
            } as i128;
            let big = r + 1;
            let h = q(span as i128 * big + base as i128 + 1, 10 * (r * big + big));
            let a0 = coord(s, boundary, base);
            let b0 = coord(s, boundary, base + span);
            vec![
                pt(a0, on_side(boundary, int(0))),
                pt(a0 + eps(), on_side(boundary, h)),
                pt(b0 - eps(), on_side(boundary, h)),
                pt(b0, on_side(boundary, int(0))),
            ]
        }
        Arc::Bridging {
            lower,
            upper,
            winding,
        } => {
            let xl = coord(s, BoundaryId::Lower, lower);
            let xu = coord(s, BoundaryId::Upper, upper) + int(winding as i128);
            let c = eps() / int(10);
            let d = xu - xl;
            vec![
                pt(xl, int(0)),
                pt(xl + c * d, q(1, 5)),
                pt(xu - c * d, q(4, 5)),
                pt(xu, int(1)),
            ]
        }
        Arc::Pruefer { boundary, point } | Arc::Adic { boundary, point } => {
            let x0 = coord(s, boundary, point);
            // Prüfer arcs run towards +x from the lower boundary and towards
            // -x from the upper one; adic arcs do the opposite.
            let forward = a.is_pruefer() == (boundary == BoundaryId::Lower);
            let sign = if forward { int(1) } else { int(-1) };
            spiral_profile(turns)
                .into_iter()
                .map(|(dx, y)| pt(x0 + sign * dx, on_side(boundary, y)))
                .collect()
        }
    }
}

fn cross(o: Pt, a: Pt, b: Pt) -> Q {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

fn interior(y: Q) -> bool {
    y > int(0) && y < int(1)
}

/// Whether segments `p1p2` and `q1q2` share a point strictly inside the strip.
fn segments_meet_inside(p1: Pt, p2: Pt, q1: Pt, q2: Pt) -> bool {
    let r = pt(p2.x - p1.x, p2.y - p1.y);
    let s = pt(q2.x - q1.x, q2.y - q1.y);
    let denom = r.x * s.y - r.y * s.x;
    let w = pt(q1.x - p1.x, q1.y - p1.y);
    if denom != int(0) {
        let t = (w.x * s.y - w.y * s.x) / denom;
        let u = (w.x * r.y - w.y * r.x) / denom;
        let unit = |v: Q| v >= int(0) && v <= int(1);
        return unit(t) && unit(u) && interior(p1.y + t * r.y);
    }
    if cross(p1, p2, q1) != int(0) {
        return false;
    }
    // Collinear: look at the overlap along the segment direction.
    let dot = |v: Pt| v.x * r.x + v.y * r.y;
    let len = dot(r);
    let t0 = dot(w) / len;
    let t1 = dot(pt(q2.x - p1.x, q2.y - p1.y)) / len;
    let (lo, hi) = if t0 < t1 { (t0, t1) } else { (t1, t0) };
    let lo = lo.max(int(0));
    let hi = hi.min(int(1));
    if lo > hi {
        return false;
    }
    let (ya, yb) = (p1.y + lo * r.y, p1.y + hi * r.y);
    let (ymin, ymax) = if ya < yb { (ya, yb) } else { (yb, ya) };
    if lo == hi {
        interior(ya)
    } else {
        ymin < int(1) && ymax > int(0)
    }
}

fn x_range(poly: &[Pt]) -> (Q, Q) {
    let lo = poly.iter().map(|p| p.x).min().unwrap();
    let hi = poly.iter().map(|p| p.x).max().unwrap();
    (lo, hi)
}

/// Whether some lifts of `a` and `b` meet in the open strip.
pub fn polylines_cross(s: &Surface, a: &Arc, b: &Arc) -> bool {
    let max_w = [a, b]
        .iter()
        .filter_map(|arc| arc.winding())
        .map(|w| w.unsigned_abs() as i128)
        .max()
        .unwrap_or(0);
    let turns = max_w + 3;
    let pa = polyline(s, a, turns);
    let pb = polyline(s, b, turns);
    let (alo, ahi) = x_range(&pa);
    let (blo, bhi) = x_range(&pb);
    let kmin = (alo - bhi).floor().to_integer() - 1;
    let kmax = (ahi - blo).ceil().to_integer() + 1;
    for k in kmin..=kmax {
        if a == b && k == 0 {
            continue;
        }
        let shifted: Vec<Pt> = pb.iter().map(|p| pt(p.x + int(k), p.y)).collect();
        for u in pa.windows(2) {
            for v in shifted.windows(2) {
                if segments_meet_inside(u[0], u[1], v[0], v[1]) {
                    return true;
                }
            }
        }
    }
    false
}

/// Every arc of `s` with bridging windings in `[-bound, bound]`, listed
/// without help from the library's enumerators.
pub fn arc_universe(s: &Surface, bound: i64) -> Vec<Arc> {
    let mut out = Vec::new();
    for b in [BoundaryId::Lower, BoundaryId::Upper] {
        let r = match b {
            BoundaryId::Lower => s.p(),
            BoundaryId::Upper => s.q(),
        };
        for point in 0..r {
            out.push(Arc::Pruefer { boundary: b, point });
            out.push(Arc::Adic { boundary: b, point });
            for span in 2..=r {
                out.push(Arc::Peripheral {
                    boundary: b,
                    base: point,
                    span,
                });
            }
        }
    }
    for lower in 0..s.p() {
        for upper in 0..s.q() {
            for winding in -bound..=bound {
                out.push(Arc::Bridging {
                    lower,
                    upper,
                    winding,
                });
            }
        }
    }
    out
}
