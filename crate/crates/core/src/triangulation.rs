//! Asymptotic triangulations: validation, decomposition, flips and twists.

use std::collections::BTreeSet;
use std::fmt;

use crate::arc_model::{
    all_peripheral_arcs, crosses_unchecked, dehn_twist_arc, enumerate_bridging_arcs,
    enumerate_strict_arcs, Arc, BoundaryId, Surface,
};
use crate::error::{Error, Result};

/// A maximal set of pairwise compatible asymptotic arcs, stored in canonical
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    surface: Surface,
    arcs: Vec<Arc>,
}

impl Triangulation {
    /// Builds without any checks. `arcs` must already be sorted and valid.
    pub(crate) fn from_sorted_unchecked(surface: Surface, arcs: Vec<Arc>) -> Self {
        debug_assert!(arcs.windows(2).all(|w| w[0] < w[1]));
        Triangulation { surface, arcs }
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn contains(&self, arc: &Arc) -> bool {
        self.arcs.binary_search(arc).is_ok()
    }

    /// Position of `arc` in the canonical order.
    pub fn index_of(&self, arc: &Arc) -> Option<usize> {
        self.arcs.binary_search(arc).ok()
    }

    /// Contains no Prüfer or adic arc.
    pub fn is_ordinary(&self) -> bool {
        !self.arcs.iter().any(Arc::is_strict)
    }

    pub fn is_strictly_asymptotic(&self) -> bool {
        !self.is_ordinary()
    }

    pub fn bridging_arcs(&self) -> impl Iterator<Item = &Arc> {
        self.arcs.iter().filter(|a| a.is_bridging())
    }

    /// Smallest and largest bridging winding, if any bridging arc is present.
    pub fn winding_range(&self) -> Option<(i64, i64)> {
        let mut windings = self.arcs.iter().filter_map(Arc::winding);
        let first = windings.next()?;
        Some(windings.fold((first, first), |(lo, hi), w| (lo.min(w), hi.max(w))))
    }

    pub fn contains_pruefer(&self) -> bool {
        self.arcs.iter().any(Arc::is_pruefer)
    }

    pub fn contains_adic(&self) -> bool {
        self.arcs.iter().any(Arc::is_adic)
    }

    /// Parses the line-oriented file format: `surface <p> <q>` followed by one
    /// arc per line. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_numbered(text.lines().enumerate().map(|(i, l)| (i + 1, l)))
    }

    pub(crate) fn parse_numbered<'a>(
        lines: impl IntoIterator<Item = (usize, &'a str)>,
    ) -> Result<Self> {
        let mut surface = None;
        let mut arcs = Vec::new();
        let mut last_line = 0;
        for (number, raw) in lines {
            last_line = number;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match surface {
                None => surface = Some(parse_surface_line(number, line)?),
                Some(_) => arcs.push(
                    line.parse::<Arc>()
                        .map_err(|message| Error::parse(number, message))?,
                ),
            }
        }
        let surface = surface
            .ok_or_else(|| Error::parse(last_line.max(1), "missing `surface <p> <q>` line"))?;
        validate(&surface, arcs)
    }

    /// Renders in the file format, terminated by a newline.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

fn parse_surface_line(number: usize, line: &str) -> Result<Surface> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    match tokens.as_slice() {
        ["surface", p, q] => {
            let p = p
                .parse()
                .map_err(|_| Error::parse(number, format!("bad p `{p}`")))?;
            let q = q
                .parse()
                .map_err(|_| Error::parse(number, format!("bad q `{q}`")))?;
            Surface::new(p, q)
        }
        _ => Err(Error::parse(
            number,
            format!("expected `surface <p> <q>`, got `{line}`"),
        )),
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "surface {} {}", self.surface.p(), self.surface.q())?;
        for arc in &self.arcs {
            writeln!(f, "{arc}")?;
        }
        Ok(())
    }
}

/// Checks pairwise compatibility and full cardinality, returning the canonical
/// triangulation.
pub fn validate(s: &Surface, arcs: impl IntoIterator<Item = Arc>) -> Result<Triangulation> {
    let mut seen = BTreeSet::new();
    for arc in arcs {
        s.check_arc(&arc)?;
        if !seen.insert(arc) {
            return Err(Error::DuplicateArc(arc));
        }
    }
    let arcs: Vec<Arc> = seen.into_iter().collect();
    for (i, a) in arcs.iter().enumerate() {
        for b in &arcs[i + 1..] {
            if crosses_unchecked(s, a, b) {
                return Err(Error::CrossingPair(*a, *b));
            }
        }
    }
    if arcs.len() != s.rank() {
        return Err(Error::WrongCardinality {
            got: arcs.len(),
            want: s.rank(),
        });
    }
    Ok(Triangulation::from_sorted_unchecked(*s, arcs))
}

/// A strictly asymptotic triangulation split by the boundary each arc is
/// based at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryDecomposition {
    pub lower_part: Vec<Arc>,
    pub upper_part: Vec<Arc>,
}

pub fn decompose(t: &Triangulation) -> Result<BoundaryDecomposition> {
    if t.is_ordinary() {
        return Err(Error::OrdinaryTriangulation);
    }
    let (lower_part, upper_part) = t
        .arcs
        .iter()
        .partition(|a| a.based_at() == Some(BoundaryId::Lower));
    Ok(BoundaryDecomposition {
        lower_part,
        upper_part,
    })
}

/// Every arc that may replace a flipped arc: all peripheral and strict arcs
/// plus bridging arcs with winding in `[lo, hi]`.
fn flip_candidates(s: &Surface, lo: i64, hi: i64) -> Vec<Arc> {
    let mut out = all_peripheral_arcs(s);
    out.extend(enumerate_strict_arcs(s));
    if let Ok(bridging) = enumerate_bridging_arcs(s, lo, hi) {
        out.extend(bridging);
    }
    out
}

/// The unique arc replacing `theta` in `t`.
pub fn flip_partner(t: &Triangulation, theta: &Arc) -> Result<Arc> {
    if !t.contains(theta) {
        return Err(Error::ArcNotInTriangulation(*theta));
    }
    let s = t.surface;
    let rest: Vec<&Arc> = t.arcs.iter().filter(|a| *a != theta).collect();
    let survivors = |lo: i64, hi: i64| -> Vec<Arc> {
        flip_candidates(&s, lo, hi)
            .into_iter()
            .filter(|c| c != theta && rest.iter().all(|r| *r != c && !crosses_unchecked(&s, r, c)))
            .collect()
    };

    let (lo, hi) = t
        .winding_range()
        .map(|(lo, hi)| (lo - 1, hi + 1))
        .unwrap_or((-1, 1));
    let mut found = survivors(lo, hi);
    if found.is_empty() {
        let extra = (hi - lo + 2) / 2;
        found = survivors(lo - extra, hi + extra);
        if found.is_empty() {
            return Err(Error::NoFlipPartner(*theta));
        }
    }
    if found.len() > 1 {
        return Err(Error::FlipPartnerNotUnique {
            arc: *theta,
            count: found.len(),
        });
    }
    Ok(found[0])
}

/// Mutation of `t` at `theta`.
pub fn mutate(t: &Triangulation, theta: &Arc) -> Result<Triangulation> {
    let partner = flip_partner(t, theta)?;
    Ok(replace_arc(t, theta, partner))
}

pub(crate) fn replace_arc(t: &Triangulation, old: &Arc, new: Arc) -> Triangulation {
    let mut arcs: Vec<Arc> = t.arcs.iter().copied().filter(|a| a != old).collect();
    let at = arcs.binary_search(&new).unwrap_or_else(|i| i);
    arcs.insert(at, new);
    Triangulation::from_sorted_unchecked(t.surface, arcs)
}

/// All flips of `t`, one per arc, in canonical arc order.
pub fn all_flips(t: &Triangulation) -> Result<Vec<(Arc, Arc, Triangulation)>> {
    t.arcs
        .iter()
        .map(|theta| {
            let partner = flip_partner(t, theta)?;
            Ok((*theta, partner, replace_arc(t, theta, partner)))
        })
        .collect()
}

pub fn dehn_twist(t: &Triangulation, k: i64) -> Triangulation {
    let mut arcs: Vec<Arc> = t.arcs.iter().map(|a| dehn_twist_arc(a, k)).collect();
    // twisting preserves the order of bridging arcs, but keep it canonical anyway
    arcs.sort();
    Triangulation::from_sorted_unchecked(t.surface, arcs)
}

/// Representative of the mapping-class-group orbit of `t`, normalized so the
/// smallest bridging winding is zero, together with the applied exponent.
pub fn canonical_orbit_form(t: &Triangulation) -> (Triangulation, i64) {
    match t.winding_range() {
        Some((lo, _)) => (dehn_twist(t, -lo), -lo),
        None => (t.clone(), 0),
    }
}
