//! Dehn-twist dynamics on finite windows of triangulation sequences.
//!
//! A sequence converges when, from some blueprint index `N` on, every term is
//! `D^d(k)` applied to term `N` with `d` monotone. Only finite windows are
//! observable, so verdicts about unbounded growth of `d` are window verdicts.

use std::collections::BTreeMap;
use std::fmt;

use crate::arc_model::{limit_arc, Arc, BoundaryId, Sign, Surface};
use crate::error::{Error, Result};
use crate::triangulation::{canonical_orbit_form, dehn_twist, validate, Triangulation};

/// Shortest suffix (clipped to the window length) accepted as evidence of
/// convergence. Two terms can always be joined by a monotone map, so a
/// shorter tail would make every window look convergent.
pub const MIN_OBSERVED_TERMS: usize = 3;

/// A non-empty finite run of triangulations on one surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceWindow {
    terms: Vec<Triangulation>,
}

impl SequenceWindow {
    pub fn new(terms: Vec<Triangulation>) -> Result<Self> {
        let first = terms.first().ok_or(Error::EmptyWindow)?.surface();
        if let Some(t) = terms.iter().find(|t| t.surface() != first) {
            let other = t.surface();
            return Err(Error::MixedSurfaces(
                first.p(),
                first.q(),
                other.p(),
                other.q(),
            ));
        }
        Ok(SequenceWindow { terms })
    }

    pub fn terms(&self) -> &[Triangulation] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn surface(&self) -> Surface {
        self.terms[0].surface()
    }

    /// The terms at `indices`, in that order.
    pub fn select(&self, indices: &[usize]) -> Result<SequenceWindow> {
        let terms = indices
            .iter()
            .map(|&i| {
                self.terms.get(i).cloned().ok_or(Error::IndexOutOfRange {
                    index: i,
                    n: self.terms.len(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SequenceWindow::new(terms)
    }

    /// Triangulation blocks separated by `---` lines.
    pub fn parse(text: &str) -> Result<Self> {
        let mut blocks: Vec<Vec<(usize, &str)>> = vec![Vec::new()];
        for (i, line) in text.lines().enumerate() {
            if line.trim() == "---" {
                blocks.push(Vec::new());
            } else {
                blocks.last_mut().unwrap().push((i + 1, line));
            }
        }
        let terms = blocks
            .into_iter()
            .filter(|b| b.iter().any(|(_, l)| !l.trim().is_empty()))
            .map(Triangulation::parse_numbered)
            .collect::<Result<Vec<_>>>()?;
        SequenceWindow::new(terms)
    }

    pub fn to_text(&self) -> String {
        self.terms
            .iter()
            .map(Triangulation::to_text)
            .collect::<Vec<_>>()
            .join("---\n")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// `d` is constant at the end of the window, with this value.
    Stabilizes(i64),
    IncreasingWindow,
    DecreasingWindow,
    NotConvergentInWindow,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Stabilizes(k) => write!(f, "stabilizes {k}"),
            Classification::IncreasingWindow => f.write_str("increasing-window"),
            Classification::DecreasingWindow => f.write_str("decreasing-window"),
            Classification::NotConvergentInWindow => f.write_str("not-convergent-in-window"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceReport {
    /// `None` exactly when the window shows no convergence.
    pub blueprint_index: Option<usize>,
    /// `d(k)` with `T[N+k] = D^d(k) T[N]`, for every observed `k`.
    pub d_samples: Vec<i64>,
    pub classification: Classification,
    pub limit: Option<Triangulation>,
}

impl fmt::Display for ConvergenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.blueprint_index {
            Some(n) => writeln!(f, "blueprint_index: {n}")?,
            None => writeln!(f, "blueprint_index: none")?,
        }
        f.write_str("d_samples:")?;
        for d in &self.d_samples {
            write!(f, " {d}")?;
        }
        writeln!(f)?;
        writeln!(f, "classification: {}", self.classification)?;
        match &self.limit {
            Some(t) => write!(f, "limit:\n{t}"),
            None => writeln!(f, "limit: none"),
        }
    }
}

fn is_monotone(d: &[i64]) -> bool {
    d.windows(2).all(|w| w[0] <= w[1]) || d.windows(2).all(|w| w[0] >= w[1])
}

/// Orbit representative and exponent `e` with `T = D^e(representative)`.
fn orbit_coordinates(w: &SequenceWindow) -> Vec<(Triangulation, i64)> {
    w.terms
        .iter()
        .map(|t| {
            let (rep, shift) = canonical_orbit_form(t);
            (rep, -shift)
        })
        .collect()
}

pub fn detect_convergence(w: &SequenceWindow) -> Result<ConvergenceReport> {
    let coords = orbit_coordinates(w);
    let min_tail = MIN_OBSERVED_TERMS.min(w.len());
    for n in 0..=(w.len() - min_tail) {
        let (rep, base) = &coords[n];
        if !coords[n..].iter().all(|(r, _)| r == rep) {
            continue;
        }
        let d: Vec<i64> = coords[n..].iter().map(|(_, e)| e - base).collect();
        if !is_monotone(&d) {
            continue;
        }
        let blueprint = &w.terms[n];
        let (classification, limit) = match d.as_slice() {
            [.., a, b] if a < b => (
                Classification::IncreasingWindow,
                limit_triangulation(blueprint, Sign::Plus)?,
            ),
            [.., a, b] if a > b => (
                Classification::DecreasingWindow,
                limit_triangulation(blueprint, Sign::Minus)?,
            ),
            _ => {
                let k = *d.last().unwrap();
                (Classification::Stabilizes(k), dehn_twist(blueprint, k))
            }
        };
        return Ok(ConvergenceReport {
            blueprint_index: Some(n),
            d_samples: d,
            classification,
            limit: Some(limit),
        });
    }
    Ok(ConvergenceReport {
        blueprint_index: None,
        d_samples: Vec::new(),
        classification: Classification::NotConvergentInWindow,
        limit: None,
    })
}

/// Lexicographically smallest longest subsequence of `values` that is
/// strictly increasing (`dir = 1`) or strictly decreasing (`dir = -1`).
fn longest_strict_run(values: &[i64], dir: i64) -> Vec<usize> {
    let n = values.len();
    let follows = |i: usize, j: usize| (values[j] - values[i]) * dir > 0;
    // best[i]: length of the longest run starting at i
    let mut best = vec![1usize; n];
    for i in (0..n).rev() {
        for j in i + 1..n {
            if follows(i, j) {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    let Some(&length) = best.iter().max() else {
        return Vec::new();
    };
    let mut out = Vec::with_capacity(length);
    let mut current = (0..n).find(|&i| best[i] == length).unwrap();
    out.push(current);
    while out.len() < length {
        let need = length - out.len();
        current = (current + 1..n)
            .find(|&j| follows(current, j) && best[j] == need)
            .unwrap();
        out.push(current);
    }
    out
}

/// Indices of a subsequence on which [`detect_convergence`] succeeds.
///
/// Terms are grouped by orbit; inside the largest orbit a repeated twist
/// exponent is preferred (a stabilizing subsequence), otherwise the longest
/// strictly monotone run of exponents is taken. Ties go to the
/// lexicographically smallest index list.
pub fn extract_converging_subsequence(w: &SequenceWindow) -> Vec<usize> {
    let coords = orbit_coordinates(w);
    let mut groups: BTreeMap<&Triangulation, Vec<usize>> = BTreeMap::new();
    for (i, (rep, _)) in coords.iter().enumerate() {
        groups.entry(rep).or_default().push(i);
    }
    let group = groups
        .into_values()
        .max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)))
        .expect("window is non-empty");

    let mut by_exponent: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for &i in &group {
        by_exponent.entry(coords[i].1).or_default().push(i);
    }
    let repeated = by_exponent
        .into_values()
        .filter(|idx| idx.len() > 1)
        .max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)));
    if let Some(indices) = repeated {
        return indices;
    }

    let exponents: Vec<i64> = group.iter().map(|&i| coords[i].1).collect();
    let up = longest_strict_run(&exponents, 1);
    let down = longest_strict_run(&exponents, -1);
    let chosen = if down.len() > up.len() || (down.len() == up.len() && down < up) {
        down
    } else {
        up
    };
    chosen.into_iter().map(|k| group[k]).collect()
}

/// `D^{+inf} T` or `D^{-inf} T`; strictly asymptotic inputs are their own
/// limit.
pub fn limit_triangulation(t: &Triangulation, sign: Sign) -> Result<Triangulation> {
    if t.is_strictly_asymptotic() {
        return Ok(t.clone());
    }
    let arcs: std::collections::BTreeSet<Arc> =
        t.arcs().iter().flat_map(|a| limit_arc(a, sign)).collect();
    validate(&t.surface(), arcs).map_err(|e| Error::InvalidLimit(Box::new(e)))
}

/// An asymptotic triangulation that no converging sequence reaches: Prüfer
/// arcs at every lower point together with adic arcs at every upper point.
pub fn non_surjectivity_witness(s: &Surface) -> Result<Triangulation> {
    s.check_boundary(BoundaryId::Upper)?;
    let lower = (0..s.p()).map(|point| Arc::Pruefer {
        boundary: BoundaryId::Lower,
        point,
    });
    let upper = (0..s.q()).map(|point| Arc::Adic {
        boundary: BoundaryId::Upper,
        point,
    });
    validate(s, lower.chain(upper))
}

/// Contains Prüfer and adic arcs at once, which no limit does.
pub fn mixes_spiral_signs(t: &Triangulation) -> bool {
    t.contains_pruefer() && t.contains_adic()
}
