//! Surfaces, asymptotic arcs and the crossing oracle.
//!
//! The annulus `C(p,q)` is modelled through its universal cover, the strip
//! `R x [0,1]`. The lower line carries the `p` marked points of the lower
//! boundary at `x = i/p + n`, the upper line carries the `q` points of the
//! upper boundary at `x = j/q + n`. One trip around the annulus is a
//! horizontal translation by `1`, and the positive Dehn twist shifts the upper
//! line by `+1` relative to the lower one.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A marked annulus `C(p,q)`; the tube is `q = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Surface {
    p: usize,
    q: usize,
}

impl Surface {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidSurface { p, q });
        }
        Ok(Surface { p, q })
    }

    pub fn tube(p: usize) -> Result<Self> {
        Surface::new(p, 0)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn is_tube(&self) -> bool {
        self.q == 0
    }

    /// Number of arcs in every asymptotic triangulation.
    pub fn rank(&self) -> usize {
        self.p + self.q
    }

    pub fn point_count(&self, boundary: BoundaryId) -> usize {
        match boundary {
            BoundaryId::Lower => self.p,
            BoundaryId::Upper => self.q,
        }
    }

    /// Boundaries carrying at least one marked point.
    pub fn boundaries(&self) -> impl Iterator<Item = BoundaryId> {
        let q = self.q;
        [BoundaryId::Lower, BoundaryId::Upper]
            .into_iter()
            .filter(move |b| *b == BoundaryId::Lower || q > 0)
    }

    pub fn check_boundary(&self, boundary: BoundaryId) -> Result<()> {
        if self.point_count(boundary) == 0 {
            return Err(Error::InvalidBoundary(boundary));
        }
        Ok(())
    }

    pub fn check_arc(&self, arc: &Arc) -> Result<()> {
        let invalid = |reason| Error::InvalidArc {
            arc: *arc,
            p: self.p,
            q: self.q,
            reason,
        };
        match *arc {
            Arc::Peripheral {
                boundary,
                base,
                span,
            } => {
                let r = self.point_count(boundary);
                if r == 0 {
                    return Err(invalid("boundary has no marked points"));
                }
                if base >= r {
                    return Err(invalid("base index out of range"));
                }
                if span < 2 || span > r {
                    return Err(invalid("span must lie in 2..=r"));
                }
            }
            Arc::Bridging { lower, upper, .. } => {
                if self.q == 0 {
                    return Err(invalid("tube has no bridging arcs"));
                }
                if lower >= self.p || upper >= self.q {
                    return Err(invalid("endpoint index out of range"));
                }
            }
            Arc::Pruefer { boundary, point } | Arc::Adic { boundary, point } => {
                if point >= self.point_count(boundary) {
                    return Err(invalid("point index out of range"));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({},{})", self.p, self.q)
    }
}

/// The two boundary circles. `Lower` carries `p` points, `Upper` carries `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BoundaryId {
    Lower,
    Upper,
}

impl BoundaryId {
    pub fn other(self) -> Self {
        match self {
            BoundaryId::Lower => BoundaryId::Upper,
            BoundaryId::Upper => BoundaryId::Lower,
        }
    }
}

impl fmt::Display for BoundaryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundaryId::Lower => "L",
            BoundaryId::Upper => "U",
        })
    }
}

impl FromStr for BoundaryId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "L" => Ok(BoundaryId::Lower),
            "U" => Ok(BoundaryId::Upper),
            other => Err(format!("unknown boundary `{other}` (expected L or U)")),
        }
    }
}

/// Direction of a limit or of a spiral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            other => Err(format!("unknown sign `{other}` (expected + or -)")),
        }
    }
}

/// Isotopy class of an asymptotic arc.
///
/// The representation is canonical: two values are equal exactly when they
/// denote the same isotopy class. The derived ordering (variant, boundary,
/// indices, winding) is the canonical order used by triangulations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Arc {
    /// Both ends on one boundary, running from `base` to `base + span` along
    /// the boundary orientation.
    Peripheral {
        boundary: BoundaryId,
        base: usize,
        span: usize,
    },
    /// Joins lower point `lower` to upper point `upper`, wrapping `winding`
    /// times around the core.
    Bridging {
        lower: usize,
        upper: usize,
        winding: i64,
    },
    Pruefer {
        boundary: BoundaryId,
        point: usize,
    },
    Adic {
        boundary: BoundaryId,
        point: usize,
    },
}

impl Arc {
    pub fn is_peripheral(&self) -> bool {
        matches!(self, Arc::Peripheral { .. })
    }

    pub fn is_bridging(&self) -> bool {
        matches!(self, Arc::Bridging { .. })
    }

    /// Prüfer or adic.
    pub fn is_strict(&self) -> bool {
        matches!(self, Arc::Pruefer { .. } | Arc::Adic { .. })
    }

    pub fn is_pruefer(&self) -> bool {
        matches!(self, Arc::Pruefer { .. })
    }

    pub fn is_adic(&self) -> bool {
        matches!(self, Arc::Adic { .. })
    }

    /// The boundary an arc is based at; `None` for bridging arcs.
    pub fn based_at(&self) -> Option<BoundaryId> {
        match *self {
            Arc::Peripheral { boundary, .. }
            | Arc::Pruefer { boundary, .. }
            | Arc::Adic { boundary, .. } => Some(boundary),
            Arc::Bridging { .. } => None,
        }
    }

    pub fn winding(&self) -> Option<i64> {
        match *self {
            Arc::Bridging { winding, .. } => Some(winding),
            _ => None,
        }
    }

    /// `+1` for Prüfer, `-1` for adic, measured along the arc's own boundary.
    pub fn spiral_direction(&self) -> Option<i8> {
        match self {
            Arc::Pruefer { .. } => Some(1),
            Arc::Adic { .. } => Some(-1),
            _ => None,
        }
    }

    /// Moves the arc to the other boundary, keeping its indices. Used to
    /// embed a tube's partial triangulation as the upper part of an annulus.
    pub(crate) fn with_boundary(self, target: BoundaryId) -> Arc {
        match self {
            Arc::Peripheral { base, span, .. } => Arc::Peripheral {
                boundary: target,
                base,
                span,
            },
            Arc::Pruefer { point, .. } => Arc::Pruefer {
                boundary: target,
                point,
            },
            Arc::Adic { point, .. } => Arc::Adic {
                boundary: target,
                point,
            },
            b @ Arc::Bridging { .. } => b,
        }
    }

    /// Universal-cover coordinates of the lift anchored at translate zero.
    pub fn lift(&self, s: &Surface) -> Lift {
        let coord = |boundary: BoundaryId, i: usize| -> Rational64 {
            Rational64::new(i as i64, s.point_count(boundary) as i64)
        };
        match *self {
            Arc::Peripheral {
                boundary,
                base,
                span,
            } => Lift::Interval {
                boundary,
                start: coord(boundary, base),
                end: coord(boundary, base + span),
            },
            Arc::Bridging {
                lower,
                upper,
                winding,
            } => Lift::Chord {
                lower: coord(BoundaryId::Lower, lower),
                upper: coord(BoundaryId::Upper, upper) + Rational64::from_integer(winding),
            },
            Arc::Pruefer { boundary, point } => Lift::Spiral {
                boundary,
                base: coord(boundary, point),
                direction: 1,
            },
            Arc::Adic { boundary, point } => Lift::Spiral {
                boundary,
                base: coord(boundary, point),
                direction: -1,
            },
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Arc::Peripheral {
                boundary,
                base,
                span,
            } => write!(f, "P {boundary} {base} {span}"),
            Arc::Bridging {
                lower,
                upper,
                winding,
            } => write!(f, "B {lower} {upper} {winding}"),
            Arc::Pruefer { boundary, point } => write!(f, "Pr {boundary} {point}"),
            Arc::Adic { boundary, point } => write!(f, "Ad {boundary} {point}"),
        }
    }
}

impl FromStr for Arc {
    type Err = String;

    /// Parses `P <L|U> <base> <span>`, `B <lower> <upper> <winding>`,
    /// `Pr <L|U> <point>` or `Ad <L|U> <point>`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        let index = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| format!("expected a non-negative index, got `{t}`"))
        };
        match tokens.as_slice() {
            ["P", b, base, span] => Ok(Arc::Peripheral {
                boundary: b.parse()?,
                base: index(base)?,
                span: index(span)?,
            }),
            ["B", lower, upper, winding] => Ok(Arc::Bridging {
                lower: index(lower)?,
                upper: index(upper)?,
                winding: winding
                    .parse()
                    .map_err(|_| format!("expected an integer winding, got `{winding}`"))?,
            }),
            ["Pr", b, point] => Ok(Arc::Pruefer {
                boundary: b.parse()?,
                point: index(point)?,
            }),
            ["Ad", b, point] => Ok(Arc::Adic {
                boundary: b.parse()?,
                point: index(point)?,
            }),
            _ => Err(format!("cannot parse arc `{}`", s.trim())),
        }
    }
}

/// Universal-cover coordinates of an arc. Every integer translate of a lift
/// is another lift of the same arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lift {
    /// Peripheral arc spanning `[start, end]` on its boundary line.
    Interval {
        boundary: BoundaryId,
        start: Rational64,
        end: Rational64,
    },
    /// Bridging chord from `(lower, 0)` to `(upper, 1)`.
    Chord {
        lower: Rational64,
        upper: Rational64,
    },
    /// Spiral leaving `base` on its boundary line.
    Spiral {
        boundary: BoundaryId,
        base: Rational64,
        direction: i8,
    },
}

fn integer_strictly_between(a: Rational64, b: Rational64) -> bool {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    Rational64::from_integer(lo.floor().to_integer() + 1) < hi
}

/// Whether some integer translate of `x` lies strictly inside `(start, end)`.
/// Intervals have length at most one.
fn strictly_inside_mod_one(x: Rational64, start: Rational64, end: Rational64) -> bool {
    let offset = x - start;
    let frac = offset - offset.floor();
    frac > Rational64::from_integer(0) && start + frac < end
}

fn intervals_interleave(a: (Rational64, Rational64), c: (Rational64, Rational64)) -> bool {
    let lo = (a.0 - c.1).floor().to_integer() - 1;
    let hi = (a.1 - c.0).ceil().to_integer() + 1;
    (lo..=hi).any(|k| {
        let k = Rational64::from_integer(k);
        let (c0, c1) = (c.0 + k, c.1 + k);
        (a.0 < c0 && c0 < a.1 && a.1 < c1) || (c0 < a.0 && a.0 < c1 && c1 < a.1)
    })
}

/// Crossing predicate without validity checks; both arcs must be valid on `s`.
pub(crate) fn crosses_unchecked(s: &Surface, a: &Arc, b: &Arc) -> bool {
    use Lift::*;
    match (a.lift(s), b.lift(s)) {
        (
            Chord {
                lower: l1,
                upper: u1,
            },
            Chord {
                lower: l2,
                upper: u2,
            },
        ) => integer_strictly_between(l1 - l2, u1 - u2),
        (
            Chord { lower, upper },
            Interval {
                boundary,
                start,
                end,
            },
        )
        | (
            Interval {
                boundary,
                start,
                end,
            },
            Chord { lower, upper },
        ) => {
            let x = match boundary {
                BoundaryId::Lower => lower,
                BoundaryId::Upper => upper,
            };
            strictly_inside_mod_one(x, start, end)
        }
        (
            Interval {
                boundary: b1,
                start: s1,
                end: e1,
            },
            Interval {
                boundary: b2,
                start: s2,
                end: e2,
            },
        ) => b1 == b2 && intervals_interleave((s1, e1), (s2, e2)),
        (Spiral { .. }, Chord { .. }) | (Chord { .. }, Spiral { .. }) => true,
        (
            Spiral {
                boundary: sb, base, ..
            },
            Interval {
                boundary,
                start,
                end,
            },
        )
        | (
            Interval {
                boundary,
                start,
                end,
            },
            Spiral {
                boundary: sb, base, ..
            },
        ) => sb == boundary && strictly_inside_mod_one(base, start, end),
        (
            Spiral {
                boundary: b1,
                direction: d1,
                ..
            },
            Spiral {
                boundary: b2,
                direction: d2,
                ..
            },
        ) => b1 == b2 && d1 != d2,
    }
}

/// Whether the isotopy classes `a` and `b` cannot be realized disjointly
/// (away from common marked endpoints).
pub fn crosses(s: &Surface, a: &Arc, b: &Arc) -> Result<bool> {
    s.check_arc(a)?;
    s.check_arc(b)?;
    Ok(crosses_unchecked(s, a, b))
}

/// Distinct and non-crossing.
pub fn compatible(s: &Surface, a: &Arc, b: &Arc) -> Result<bool> {
    Ok(a != b && !crosses(s, a, b)?)
}

/// All Prüfer and adic arcs, `2(p+q)` of them.
pub fn enumerate_strict_arcs(s: &Surface) -> Vec<Arc> {
    let mut out = Vec::with_capacity(2 * s.rank());
    for boundary in s.boundaries() {
        for point in 0..s.point_count(boundary) {
            out.push(Arc::Pruefer { boundary, point });
            out.push(Arc::Adic { boundary, point });
        }
    }
    out.sort();
    out
}

/// All peripheral arcs on `boundary`: `r(r-1)` of them, none when `r <= 1`.
pub fn enumerate_peripheral_arcs(s: &Surface, boundary: BoundaryId) -> Result<Vec<Arc>> {
    s.check_boundary(boundary)?;
    let r = s.point_count(boundary);
    let mut out = Vec::new();
    for base in 0..r {
        for span in 2..=r {
            out.push(Arc::Peripheral {
                boundary,
                base,
                span,
            });
        }
    }
    Ok(out)
}

/// Peripheral arcs on every boundary that carries points.
pub fn all_peripheral_arcs(s: &Surface) -> Vec<Arc> {
    s.boundaries()
        .flat_map(|b| enumerate_peripheral_arcs(s, b).unwrap_or_default())
        .collect()
}

/// Bridging arcs with winding in `[winding_lo, winding_hi]`.
pub fn enumerate_bridging_arcs(s: &Surface, winding_lo: i64, winding_hi: i64) -> Result<Vec<Arc>> {
    if s.is_tube() {
        return Err(Error::TubeHasNoBridging);
    }
    if winding_lo > winding_hi {
        return Err(Error::EmptyWindingWindow {
            lo: winding_lo,
            hi: winding_hi,
        });
    }
    let mut out = Vec::new();
    for lower in 0..s.p {
        for upper in 0..s.q {
            for winding in winding_lo..=winding_hi {
                out.push(Arc::Bridging {
                    lower,
                    upper,
                    winding,
                });
            }
        }
    }
    Ok(out)
}

/// `D^k`: shifts bridging windings by `k`, fixes everything else.
pub fn dehn_twist_arc(a: &Arc, k: i64) -> Arc {
    match *a {
        Arc::Bridging {
            lower,
            upper,
            winding,
        } => Arc::Bridging {
            lower,
            upper,
            winding: winding + k,
        },
        other => other,
    }
}

/// `D^{+inf}` or `D^{-inf}` applied to one arc.
pub fn limit_arc(a: &Arc, sign: Sign) -> Vec<Arc> {
    match *a {
        Arc::Bridging { lower, upper, .. } => {
            let ends = [(BoundaryId::Lower, lower), (BoundaryId::Upper, upper)];
            ends.into_iter()
                .map(|(boundary, point)| match sign {
                    Sign::Plus => Arc::Pruefer { boundary, point },
                    Sign::Minus => Arc::Adic { boundary, point },
                })
                .collect()
        }
        other => vec![other],
    }
}
