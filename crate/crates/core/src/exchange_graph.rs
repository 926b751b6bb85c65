//! Exchange graphs of asymptotic triangulations.
//!
//! Tube graphs and boundary graphs are finite and built in full; the graph of
//! ordinary triangulations of an annulus is infinite and only explored up to a
//! flip-distance radius. All graphs are stored with vertices sorted in
//! canonical order so output does not depend on exploration order.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arc_model::{
    all_peripheral_arcs, crosses_unchecked, enumerate_bridging_arcs, enumerate_strict_arcs, Arc,
    BoundaryId, Surface,
};
use crate::error::{Error, Result};
use crate::triangulation::{all_flips, validate, Triangulation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GraphMode {
    TubeFull,
    BoundaryFull,
    /// Ball of the given radius around the vertex with index `seed`.
    OrdinaryBfs {
        radius: usize,
        seed: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeGraph {
    surface: Surface,
    vertices: Vec<Triangulation>,
    edges: Vec<(usize, usize)>,
    mode: GraphMode,
}

impl ExchangeGraph {
    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn vertices(&self) -> &[Triangulation] {
        &self.vertices
    }

    /// Unordered edges as `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn mode(&self) -> GraphMode {
        self.mode
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, t: &Triangulation) -> Option<usize> {
        self.vertices.binary_search(t).ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = vec![false; adj.len()];
        let mut components = 0;
        for start in 0..adj.len() {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    /// Sorts vertices canonically and remaps edges; `seed` is remapped too.
    fn canonical(
        surface: Surface,
        vertices: Vec<Triangulation>,
        edges: impl IntoIterator<Item = (usize, usize)>,
        mode: GraphMode,
    ) -> Self {
        let mut order: Vec<usize> = (0..vertices.len()).collect();
        order.sort_by(|&a, &b| vertices[a].cmp(&vertices[b]));
        let mut new_index = vec![0; vertices.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let edges: BTreeSet<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| {
                let (a, b) = (new_index[a], new_index[b]);
                (a.min(b), a.max(b))
            })
            .collect();
        let mode = match mode {
            GraphMode::OrdinaryBfs { radius, seed } => GraphMode::OrdinaryBfs {
                radius,
                seed: new_index[seed],
            },
            other => other,
        };
        let mut slots: Vec<Option<Triangulation>> = vertices.into_iter().map(Some).collect();
        let vertices = order
            .iter()
            .map(|&old| slots[old].take().unwrap())
            .collect();
        ExchangeGraph {
            surface,
            vertices,
            edges: edges.into_iter().collect(),
            mode,
        }
    }
}

type Explored = (Vec<Triangulation>, Vec<(usize, usize)>);

/// Breadth-first exploration under flips. With a radius, only vertices within
/// that flip distance are kept, together with every edge among them.
fn explore(seed: Triangulation, radius: Option<usize>) -> Result<Explored> {
    let mut index: HashMap<Triangulation, usize> = HashMap::new();
    let mut vertices = vec![seed.clone()];
    index.insert(seed, 0);
    let mut edges = Vec::new();
    let mut frontier = vec![0usize];
    let mut depth = 0;

    while !frontier.is_empty() {
        let may_grow = radius.is_none_or(|r| depth < r);
        // flips of a whole layer are independent; merge sequentially for determinism
        let layer: Vec<Vec<Triangulation>> = frontier
            .par_iter()
            .map(|&v| {
                all_flips(&vertices[v]).map(|flips| flips.into_iter().map(|(_, _, t)| t).collect())
            })
            .collect::<Result<_>>()?;
        let mut next = Vec::new();
        for (&v, neighbours) in frontier.iter().zip(layer) {
            for t in neighbours {
                let w = match index.get(&t) {
                    Some(&w) => w,
                    None if may_grow => {
                        let w = vertices.len();
                        index.insert(t.clone(), w);
                        vertices.push(t);
                        next.push(w);
                        w
                    }
                    None => continue,
                };
                edges.push((v.min(w), v.max(w)));
            }
        }
        frontier = next;
        depth += 1;
    }
    Ok((vertices, edges))
}

fn all_pruefer(s: &Surface, boundary: BoundaryId) -> Vec<Arc> {
    (0..s.point_count(boundary))
        .map(|point| Arc::Pruefer { boundary, point })
        .collect()
}

/// The full asymptotic exchange graph of the tube `C(p,0)`.
pub fn build_tube_graph(p: usize) -> Result<ExchangeGraph> {
    let s = Surface::tube(p)?;
    let seed = validate(&s, all_pruefer(&s, BoundaryId::Lower))?;
    let (vertices, edges) = explore(seed, None)?;
    Ok(ExchangeGraph::canonical(
        s,
        vertices,
        edges,
        GraphMode::TubeFull,
    ))
}

/// The boundary of the exchange graph of `C(p,q)`: all strictly asymptotic
/// triangulations, built as the product of the two tube graphs.
pub fn build_boundary_graph(s: &Surface) -> Result<ExchangeGraph> {
    if s.is_tube() {
        let mut g = build_tube_graph(s.p())?;
        g.mode = GraphMode::BoundaryFull;
        return Ok(g);
    }
    let lower = build_tube_graph(s.p())?;
    let upper = build_tube_graph(s.q())?;
    let (nl, nu) = (lower.vertex_count(), upper.vertex_count());
    let mut vertices = Vec::with_capacity(nl * nu);
    for a in lower.vertices() {
        for b in upper.vertices() {
            let mut arcs: Vec<Arc> = a.arcs().to_vec();
            arcs.extend(
                b.arcs()
                    .iter()
                    .map(|arc| arc.with_boundary(BoundaryId::Upper)),
            );
            arcs.sort();
            vertices.push(Triangulation::from_sorted_unchecked(*s, arcs));
        }
    }
    let id = |i: usize, j: usize| i * nu + j;
    let mut edges = Vec::new();
    for &(a, b) in lower.edges() {
        edges.extend((0..nu).map(|j| (id(a, j), id(b, j))));
    }
    for &(a, b) in upper.edges() {
        edges.extend((0..nl).map(|i| (id(i, a), id(i, b))));
    }
    Ok(ExchangeGraph::canonical(
        *s,
        vertices,
        edges,
        GraphMode::BoundaryFull,
    ))
}

/// All triangulations within flip distance `radius` of an ordinary seed.
pub fn bfs_ordinary(seed: &Triangulation, radius: usize) -> Result<ExchangeGraph> {
    if !seed.is_ordinary() {
        return Err(Error::SeedNotOrdinary);
    }
    let surface = seed.surface();
    let (vertices, edges) = explore(seed.clone(), Some(radius))?;
    Ok(ExchangeGraph::canonical(
        surface,
        vertices,
        edges,
        GraphMode::OrdinaryBfs { radius, seed: 0 },
    ))
}

/// Every full-cardinality pairwise-compatible subset of the arc universe
/// (peripheral and strict arcs plus bridging arcs with `|winding| <= bound`),
/// found by backtracking over the compatibility graph.
pub fn enumerate_bruteforce(s: &Surface, winding_bound: usize) -> Vec<Triangulation> {
    let mut universe = all_peripheral_arcs(s);
    universe.extend(enumerate_strict_arcs(s));
    let bound = winding_bound as i64;
    if let Ok(bridging) = enumerate_bridging_arcs(s, -bound, bound) {
        universe.extend(bridging);
    }
    universe.sort();

    let n = universe.len();
    let words = n.div_ceil(64);
    // later[i]: arcs with index > i that are compatible with arc i
    let later: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut bits = vec![0u64; words];
            for j in i + 1..n {
                if !crosses_unchecked(s, &universe[i], &universe[j]) {
                    bits[j / 64] |= 1 << (j % 64);
                }
            }
            bits
        })
        .collect();

    struct Search<'a> {
        universe: &'a [Arc],
        later: &'a [Vec<u64>],
        target: usize,
        surface: Surface,
        chosen: Vec<usize>,
        out: Vec<Triangulation>,
    }

    impl Search<'_> {
        fn run(&mut self, candidates: &[u64]) {
            if self.chosen.len() == self.target {
                let arcs = self.chosen.iter().map(|&i| self.universe[i]).collect();
                self.out
                    .push(Triangulation::from_sorted_unchecked(self.surface, arcs));
                return;
            }
            let available: usize = candidates.iter().map(|w| w.count_ones() as usize).sum();
            if self.chosen.len() + available < self.target {
                return;
            }
            for (w, &word) in candidates.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let i = w * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let next: Vec<u64> = candidates
                        .iter()
                        .zip(&self.later[i])
                        .map(|(c, l)| c & l)
                        .collect();
                    self.chosen.push(i);
                    self.run(&next);
                    self.chosen.pop();
                }
            }
        }
    }

    let mut all = vec![0u64; words];
    for i in 0..n {
        all[i / 64] |= 1 << (i % 64);
    }
    let mut search = Search {
        universe: &universe,
        later: &later,
        target: s.rank(),
        surface: *s,
        chosen: Vec::new(),
        out: Vec::new(),
    };
    search.run(&all);
    let mut out = search.out;
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub degree_histogram: BTreeMap<usize, usize>,
    pub connected: bool,
    pub component_count: usize,
    /// Vertices containing at least one Prüfer arc; tube graphs only.
    pub pruefer_containing_count: Option<usize>,
}

pub fn graph_stats(g: &ExchangeGraph) -> GraphStats {
    let mut degree_histogram = BTreeMap::new();
    for d in g.degrees() {
        *degree_histogram.entry(d).or_insert(0) += 1;
    }
    let component_count = g.component_count();
    let pruefer_containing_count = (g.mode == GraphMode::TubeFull)
        .then(|| g.vertices.iter().filter(|t| t.contains_pruefer()).count());
    GraphStats {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        degree_histogram,
        connected: component_count <= 1,
        component_count,
        pruefer_containing_count,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    AdjacencyJson,
}

pub fn export(g: &ExchangeGraph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => to_dot(g),
        ExportFormat::AdjacencyJson => to_adjacency_json(g),
    }
}

/// Node label: the canonical arc list.
pub fn vertex_label(t: &Triangulation) -> String {
    t.arcs()
        .iter()
        .map(Arc::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn to_dot(g: &ExchangeGraph) -> String {
    let labels: Vec<String> = g.vertices.iter().map(vertex_label).collect();
    let mut out = String::from("graph {\n");
    for label in &labels {
        let _ = writeln!(out, "  \"{label}\";");
    }
    for &(a, b) in &g.edges {
        let _ = writeln!(out, "  \"{}\" -- \"{}\";", labels[a], labels[b]);
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct AdjacencyDocument {
    surface: [usize; 2],
    mode: GraphMode,
    vertices: Vec<String>,
    edges: Vec<[usize; 2]>,
}

pub fn to_adjacency_json(g: &ExchangeGraph) -> String {
    let doc = AdjacencyDocument {
        surface: [g.surface.p(), g.surface.q()],
        mode: g.mode,
        vertices: g.vertices.iter().map(Triangulation::to_text).collect(),
        edges: g.edges.iter().map(|&(a, b)| [a, b]).collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("adjacency document serializes");
    text.push('\n');
    text
}

/// Reads the adjacency-json format back, re-validating every vertex.
pub fn from_adjacency_json(text: &str) -> Result<ExchangeGraph> {
    let doc: AdjacencyDocument =
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
    let surface = Surface::new(doc.surface[0], doc.surface[1])?;
    let vertices = doc
        .vertices
        .iter()
        .map(|v| Triangulation::parse(v))
        .collect::<Result<Vec<_>>>()?;
    if let Some(t) = vertices.iter().find(|t| t.surface() != surface) {
        let other = t.surface();
        return Err(Error::MixedSurfaces(
            surface.p(),
            surface.q(),
            other.p(),
            other.q(),
        ));
    }
    let n = vertices.len();
    let mut edges = Vec::with_capacity(doc.edges.len());
    for [a, b] in doc.edges {
        if a >= n || b >= n {
            return Err(Error::IndexOutOfRange { index: a.max(b), n });
        }
        edges.push((a.min(b), a.max(b)));
    }
    if let GraphMode::OrdinaryBfs { seed, .. } = doc.mode {
        if seed >= n {
            return Err(Error::IndexOutOfRange { index: seed, n });
        }
    }
    Ok(ExchangeGraph::canonical(surface, vertices, edges, doc.mode))
}
