//! Quivers of ordinary triangulations as skew-symmetric B-matrices.
//!
//! The quiver is read off by cutting the annulus along one bridging arc. In
//! the universal cover the region between two consecutive lifts of the cut
//! is a convex `(p+q+2)`-gon: the lower line from the cut's lower endpoint to
//! its translate, then the upper line walked back. Every other arc has exactly
//! one lift inside that region and becomes a diagonal.

use std::collections::HashMap;
use std::fmt;

use crate::arc_model::{Arc, BoundaryId};
use crate::error::{Error, Result};
use crate::triangulation::Triangulation;

/// Skew-symmetric integer matrix indexed by canonical arc order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl BMatrix {
    pub fn zero(n: usize) -> Self {
        BMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        let mut m = BMatrix::zero(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::parse(
                    i + 2,
                    format!("row has {} entries, want {n}", row.len()),
                ));
            }
            for (j, &v) in row.iter().enumerate() {
                m.entries[i * n + j] = v;
            }
        }
        for i in 0..n {
            for j in i..n {
                if m.get(i, j) != -m.get(j, i) {
                    return Err(Error::NotSkewSymmetric(i, j));
                }
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    fn add(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.n + j] += v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[i64]>::to_vec)
            .collect()
    }

    pub fn is_skew_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == -self.get(j, i)))
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.entries.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    /// Matrix with rows and columns relabelled: entry `(i, j)` moves to
    /// `(perm[i], perm[j])`.
    pub fn permuted(&self, perm: &[usize]) -> BMatrix {
        let mut out = BMatrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.entries[perm[i] * self.n + perm[j]] = self.get(i, j);
            }
        }
        out
    }

    /// Whether the underlying undirected graph (nonzero entries) is connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for (j, mark) in seen.iter_mut().enumerate() {
                if !*mark && self.get(i, j) != 0 {
                    *mark = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Parses `n` followed by `n` rows of `n` integers.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, first) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing matrix size"))?;
        let n: usize = first
            .parse()
            .map_err(|_| Error::parse(line, format!("bad matrix size `{first}`")))?;
        let mut rows = Vec::with_capacity(n);
        for (line, row) in lines.by_ref().take(n) {
            let row = row
                .split_whitespace()
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|_| Error::parse(line, format!("bad entry `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::parse(
                line,
                format!("expected {n} rows, got {}", rows.len()),
            ));
        }
        BMatrix::from_rows(&rows)
    }
}

impl fmt::Display for BMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for row in self.rows() {
            let row: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Boundary,
    Arc(usize),
}

/// The quiver of an ordinary triangulation of `C(p,q)`, `q >= 1`, cut along
/// its canonically smallest bridging arc.
pub fn quiver_of(t: &Triangulation) -> Result<BMatrix> {
    let cut = t
        .bridging_arcs()
        .next()
        .copied()
        .ok_or(Error::QuiverUndefined("triangulation has no bridging arc"))?;
    quiver_with_cut(t, &cut)
}

/// Same as [`quiver_of`] with an explicit bridging arc to cut along.
pub fn quiver_with_cut(t: &Triangulation, cut: &Arc) -> Result<BMatrix> {
    let s = t.surface();
    if s.is_tube() {
        return Err(Error::QuiverUndefined("tubes carry no quiver"));
    }
    if !t.is_ordinary() {
        return Err(Error::QuiverUndefined(
            "triangulation is strictly asymptotic",
        ));
    }
    let cut_index = t.index_of(cut).ok_or(Error::ArcNotInTriangulation(*cut))?;
    let Arc::Bridging {
        lower: cut_lower,
        upper: cut_upper,
        winding: cut_winding,
    } = *cut
    else {
        return Err(Error::QuiverUndefined("cut arc must be bridging"));
    };

    let (p, q) = (s.p() as i64, s.q() as i64);
    // Coordinates scaled by p*q so every marked point sits on an integer.
    let period = p * q;
    let lower_x = |i: usize| i as i64 * q;
    let upper_x = |j: usize, w: i64| j as i64 * p + w * period;
    let x0 = lower_x(cut_lower);
    let y0 = upper_x(cut_upper, cut_winding);

    // Vertex ids: lower corners 0..=p left to right, then upper corners
    // right to left, giving counterclockwise order.
    let lower_id = |x: i64| ((x - x0) / q) as usize;
    let upper_id = |x: i64| (p + 1 + (y0 + period - x) / p) as usize;
    let vertex_count = (p + q + 2) as usize;

    let mut sides: HashMap<(usize, usize), Side> = HashMap::new();
    let mut put = |a: usize, b: usize, side: Side| {
        sides.insert((a.min(b), a.max(b)), side);
    };
    for k in 0..p as usize {
        put(k, k + 1, Side::Boundary);
    }
    for k in 0..q as usize {
        let a = p as usize + 1 + k;
        put(a, a + 1, Side::Boundary);
    }
    put(0, vertex_count - 1, Side::Arc(cut_index));
    put(p as usize, p as usize + 1, Side::Arc(cut_index));

    let translates = |anchor: i64, x: i64| {
        let n = (anchor - x).div_euclid(period);
        n - 1..=n + 2
    };
    for (index, arc) in t.arcs().iter().enumerate() {
        if index == cut_index {
            continue;
        }
        let diagonal = match *arc {
            Arc::Bridging {
                lower,
                upper,
                winding,
            } => translates(x0, lower_x(lower)).find_map(|n| {
                let a = lower_x(lower) + n * period;
                let b = upper_x(upper, winding) + n * period;
                (x0 <= a && a <= x0 + period && y0 <= b && b <= y0 + period)
                    .then(|| (lower_id(a), upper_id(b)))
            }),
            Arc::Peripheral {
                boundary: BoundaryId::Lower,
                base,
                span,
            } => translates(x0, lower_x(base)).find_map(|n| {
                let a = lower_x(base) + n * period;
                let b = a + span as i64 * q;
                (x0 <= a && b <= x0 + period).then(|| (lower_id(a), lower_id(b)))
            }),
            Arc::Peripheral {
                boundary: BoundaryId::Upper,
                base,
                span,
            } => translates(y0, upper_x(base, 0)).find_map(|n| {
                let a = upper_x(base, 0) + n * period;
                let b = a + span as i64 * p;
                (y0 <= a && b <= y0 + period).then(|| (upper_id(a), upper_id(b)))
            }),
            Arc::Pruefer { .. } | Arc::Adic { .. } => unreachable!("ordinary triangulation"),
        };
        let (a, b) = diagonal.expect("arc compatible with the cut has a lift in the cut polygon");
        put(a, b, Side::Arc(index));
    }

    let side = |a: usize, b: usize| sides.get(&(a.min(b), a.max(b))).copied();
    let mut m = BMatrix::zero(t.len());
    for i in 0..vertex_count {
        for j in i + 1..vertex_count {
            let Some(ij) = side(i, j) else { continue };
            for k in j + 1..vertex_count {
                let (Some(jk), Some(ki)) = (side(j, k), side(k, i)) else {
                    continue;
                };
                // (ij, jk, ki) is the counterclockwise cycle of sides
                for (from, to) in [(ij, jk), (jk, ki), (ki, ij)] {
                    if let (Side::Arc(a), Side::Arc(b)) = (from, to) {
                        m.add(a, b, 1);
                        m.add(b, a, -1);
                    }
                }
            }
        }
    }
    Ok(m)
}

/// Matrix mutation at vertex `k`.
pub fn mutate_matrix(b: &BMatrix, k: usize) -> Result<BMatrix> {
    if k >= b.n {
        return Err(Error::IndexOutOfRange { index: k, n: b.n });
    }
    let mut out = BMatrix::zero(b.n);
    for i in 0..b.n {
        for j in 0..b.n {
            let v = if i == k || j == k {
                -b.get(i, j)
            } else {
                let (bik, bkj) = (b.get(i, k), b.get(k, j));
                b.get(i, j) + (bik.abs() * bkj + bik * bkj.abs()) / 2
            };
            out.entries[i * b.n + j] = v;
        }
    }
    Ok(out)
}

/// Whether some relabelling of vertices carries `a` onto `b`.
pub fn isomorphic(a: &BMatrix, b: &BMatrix) -> bool {
    find_isomorphism(a, b).is_some()
}

/// A permutation `perm` with `a.permuted(&perm) == b`, found by backtracking.
pub fn find_isomorphism(a: &BMatrix, b: &BMatrix) -> Option<Vec<usize>> {
    if a.n != b.n {
        return None;
    }
    let signature = |m: &BMatrix, i: usize| {
        let mut row: Vec<i64> = (0..m.n).map(|j| m.get(i, j)).collect();
        row.sort_unstable();
        row
    };
    let sig_a: Vec<_> = (0..a.n).map(|i| signature(a, i)).collect();
    let sig_b: Vec<_> = (0..b.n).map(|i| signature(b, i)).collect();
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }

    fn extend(
        a: &BMatrix,
        b: &BMatrix,
        sig_a: &[Vec<i64>],
        sig_b: &[Vec<i64>],
        perm: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let i = perm.len();
        if i == a.n {
            return true;
        }
        for target in 0..b.n {
            if used[target] || sig_a[i] != sig_b[target] {
                continue;
            }
            let consistent = (0..i).all(|prev| {
                a.get(i, prev) == b.get(target, perm[prev])
                    && a.get(prev, i) == b.get(perm[prev], target)
            }) && a.get(i, i) == b.get(target, target);
            if !consistent {
                continue;
            }
            perm.push(target);
            used[target] = true;
            if extend(a, b, sig_a, sig_b, perm, used) {
                return true;
            }
            perm.pop();
            used[target] = false;
        }
        false
    }

    let mut perm = Vec::with_capacity(a.n);
    let mut used = vec![false; b.n];
    extend(a, b, &sig_a, &sig_b, &mut perm, &mut used).then_some(perm)
}
