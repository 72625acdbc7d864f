//! Finite geometric graphs for upper bounds: e-graphs (hexagonal-lattice
//! balls with a squared-distance window), w-graphs (vertices on concentric
//! circles inside an annulus), poly-chromatic vertex attachment, and exact
//! maximum-clique search for pre-coloring.

use crate::geometry::Point;
use crate::lattice::{loeschian_upto, representative_with_norm, LatticeVector};
use serde::{Deserialize, Serialize};
use std::time::{Duration, Instant};
use thiserror::Error;

/// Cartesian distance comparisons use a closed interval with this
/// absolute tolerance; several record graphs sit exactly on the boundary.
pub const DIST_EPS: f64 = 1e-9;

/// Vertex count cap for e-graph construction (3m^2+3m+1 <= this).
const MAX_EGRAPH_VERTICES: usize = 2_000_000;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("{0} = {1} is not a Loeschian number")]
    NotLoeschian(&'static str, i64),
    #[error("invalid e-graph window: require 1 <= a <= b, got a={a} b={b}")]
    BadWindow { a: i64, b: i64 },
    #[error("m must be >= 1, got {0}")]
    BadRadius(i64),
    #[error("e-graph with m={0} exceeds the vertex budget")]
    TooLarge(i64),
    #[error("invalid w-graph spec: {0}")]
    BadWGraph(String),
    #[error("circle radius {0} outside [1, {1}]")]
    RadiusOutOfRange(f64, f64),
    #[error("bi-chromatic distance s={0} outside the forbidden window")]
    BiOutOfWindow(f64),
    #[error("poly-chromatic position has an empty forbidden neighborhood")]
    EmptyNeighborhood,
}

/// E-graph parameters: hexagonal ball of lattice radius `m`, edges at
/// squared lattice distance in `[a, b]` (both Loeschian).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EGraphSpec {
    pub m: i64,
    pub a: i64,
    pub b: i64,
}

impl EGraphSpec {
    pub fn validate(&self) -> Result<(), GraphError> {
        if self.m < 1 {
            return Err(GraphError::BadRadius(self.m));
        }
        if !(1 <= self.a && self.a <= self.b) {
            return Err(GraphError::BadWindow {
                a: self.a,
                b: self.b,
            });
        }
        let table = loeschian_upto(self.b);
        if !table.contains(self.a) {
            return Err(GraphError::NotLoeschian("a", self.a));
        }
        if !table.contains(self.b) {
            return Err(GraphError::NotLoeschian("b", self.b));
        }
        let n = 3 * self.m * self.m + 3 * self.m + 1;
        if n as usize > MAX_EGRAPH_VERTICES {
            return Err(GraphError::TooLarge(self.m));
        }
        Ok(())
    }

    /// Forbidden-interval ratio d = sqrt(b/a).
    pub fn d(&self) -> f64 {
        (self.b as f64 / self.a as f64).sqrt()
    }
}

/// W-graph parameters: `c` circles with `p` evenly spaced vertices each,
/// inside the annulus of radii 1 and `d`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WGraphSpec {
    pub p: usize,
    pub c: usize,
    pub d: f64,
    pub radii: Vec<f64>,
    pub offsets: Vec<f64>,
}

impl WGraphSpec {
    /// Default radii: `c` evenly spaced values from 1 to d inclusive
    /// (a single circle sits at radius 1); all offsets zero.
    pub fn new(p: usize, c: usize, d: f64) -> Result<Self, GraphError> {
        let radii = if c == 1 {
            vec![1.0]
        } else {
            (0..c)
                .map(|i| 1.0 + (d - 1.0) * i as f64 / (c - 1) as f64)
                .collect()
        };
        let spec = Self {
            p,
            c,
            d,
            radii,
            offsets: vec![0.0; c],
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_radii(mut self, radii: Vec<f64>) -> Result<Self, GraphError> {
        self.radii = radii;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        if self.p < 3 || self.c < 1 || self.d < 1.0 {
            return Err(GraphError::BadWGraph(format!(
                "require p >= 3, c >= 1, d >= 1; got p={} c={} d={}",
                self.p, self.c, self.d
            )));
        }
        if self.radii.len() != self.c || self.offsets.len() != self.c {
            return Err(GraphError::BadWGraph(
                "radii/offsets length must equal circle count".into(),
            ));
        }
        for &r in &self.radii {
            if !(1.0 - DIST_EPS..=self.d + DIST_EPS).contains(&r) {
                return Err(GraphError::RadiusOutOfRange(r, self.d));
            }
        }
        Ok(())
    }
}

/// Vertex position: exact lattice coordinates or Cartesian floats.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexPos {
    Lattice(LatticeVector),
    Cartesian(Point),
}

/// Distance window defining the edge rule.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Window {
    /// Exact integer test on squared lattice distance.
    Lattice { a: i64, b: i64 },
    /// Closed-interval Cartesian test with `DIST_EPS` tolerance.
    Cartesian { lo: f64, hi: f64 },
}

/// Finite geometric coloring instance: vertices with multiplicities,
/// a distance-window edge rule, and an optional pre-colored clique.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColoringInstance {
    pub kind: String,
    pub positions: Vec<VertexPos>,
    pub multiplicity: Vec<u32>,
    pub edges: Vec<(usize, usize)>,
    pub window: Window,
    pub precolored: Vec<usize>,
}

impl ColoringInstance {
    pub fn vertex_count(&self) -> usize {
        self.positions.len()
    }

    pub fn expanded_count(&self) -> usize {
        self.multiplicity.iter().map(|&t| t as usize).sum()
    }

    fn in_window(&self, i: usize, j: usize) -> bool {
        positions_in_window(self.positions[i], self.positions[j], self.window)
    }

    /// Rebuild the edge list from positions and window. Used after
    /// adding vertices.
    fn recompute_edges(&mut self) {
        let n = self.positions.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.in_window(i, j) {
                    edges.push((i, j));
                }
            }
        }
        edges.sort_unstable();
        self.edges = edges;
    }

    /// Copy-level expansion: vertex with multiplicity t becomes t
    /// coincident, pairwise adjacent copies sharing its neighborhood.
    pub fn expand(&self) -> ExpandedGraph {
        let n = self.vertex_count();
        let mut copy_of_vertex: Vec<Vec<usize>> = Vec::with_capacity(n);
        let mut owner = Vec::new();
        for (v, &t) in self.multiplicity.iter().enumerate() {
            let mut copies = Vec::with_capacity(t as usize);
            for _ in 0..t {
                copies.push(owner.len());
                owner.push(v);
            }
            copy_of_vertex.push(copies);
        }
        let total = owner.len();
        let mut adj = vec![Vec::new(); total];
        let push = |a: usize, b: usize, adj: &mut Vec<Vec<usize>>| {
            adj[a].push(b);
            adj[b].push(a);
        };
        for &(u, v) in &self.edges {
            for &cu in &copy_of_vertex[u] {
                for &cv in &copy_of_vertex[v] {
                    push(cu, cv, &mut adj);
                }
            }
        }
        // internal clique among copies of one vertex
        for copies in &copy_of_vertex {
            for (i, &a) in copies.iter().enumerate() {
                for &b in copies.iter().skip(i + 1) {
                    push(a, b, &mut adj);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        // pre-colored copies in order: successive colors per vertex
        let mut precolored = Vec::new();
        for &v in &self.precolored {
            for &c in &copy_of_vertex[v] {
                precolored.push(c);
            }
        }
        ExpandedGraph {
            adjacency: adj,
            owner,
            precolored,
        }
    }
}

fn positions_in_window(p: VertexPos, q: VertexPos, window: Window) -> bool {
    match (p, q, window) {
        (VertexPos::Lattice(p), VertexPos::Lattice(q), Window::Lattice { a, b }) => {
            let n = p.sub(q).norm();
            a <= n && n <= b
        }
        (p, q, Window::Cartesian { lo, hi }) => {
            let d = cart(p).dist(cart(q));
            d >= lo - DIST_EPS && d <= hi + DIST_EPS
        }
        // mixing lattice positions with a Cartesian window falls back to floats
        (p, q, Window::Lattice { a, b }) => {
            let d2 = cart(p).dist(cart(q)).powi(2);
            d2 >= a as f64 - DIST_EPS && d2 <= b as f64 + DIST_EPS
        }
    }
}

fn cart(p: VertexPos) -> Point {
    match p {
        VertexPos::Lattice(w) => {
            let (x, y) = w.to_cartesian(1.0);
            Point::new(x, y)
        }
        VertexPos::Cartesian(p) => p,
    }
}

/// Copy-level view of a [`ColoringInstance`].
#[derive(Debug, Clone)]
pub struct ExpandedGraph {
    pub adjacency: Vec<Vec<usize>>,
    /// Original vertex index of each copy.
    pub owner: Vec<usize>,
    /// Copies with fixed colors 0, 1, 2, ... in list order.
    pub precolored: Vec<usize>,
}

impl ExpandedGraph {
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (i, nbrs) in self.adjacency.iter().enumerate() {
            for &j in nbrs {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].binary_search(&j).is_ok()
    }
}

/// Builds the e-graph: all lattice points within hexagonal radius `m`
/// (3m^2+3m+1 of them), edges at squared distance in `[a, b]`.
pub fn build_egraph(spec: &EGraphSpec) -> Result<ColoringInstance, GraphError> {
    spec.validate()?;
    let m = spec.m;
    let mut verts = Vec::new();
    for u in -m..=m {
        for v in -m..=m {
            let w = LatticeVector { u, v };
            if w.hex_radius() <= m {
                verts.push(w);
            }
        }
    }
    // deterministic order: by ring, then angle
    verts.sort_by(|p, q| {
        let (rp, rq) = (p.hex_radius(), q.hex_radius());
        rp.cmp(&rq).then_with(|| {
            let (px, py) = p.to_cartesian(1.0);
            let (qx, qy) = q.to_cartesian(1.0);
            py.atan2(px)
                .partial_cmp(&qy.atan2(qx))
                .unwrap()
                .then(p.cmp(q))
        })
    });
    debug_assert_eq!(verts.len() as i64, 3 * m * m + 3 * m + 1);
    let mut g = ColoringInstance {
        kind: "egraph".into(),
        positions: verts.into_iter().map(VertexPos::Lattice).collect(),
        multiplicity: vec![1; (3 * m * m + 3 * m + 1) as usize],
        edges: Vec::new(),
        window: Window::Lattice {
            a: spec.a,
            b: spec.b,
        },
        precolored: Vec::new(),
    };
    g.recompute_edges();
    Ok(g)
}

/// Builds the w-graph: `p*c` vertices on concentric circles, Cartesian
/// edges at distance in `[1, d]` closed with tolerance.
pub fn build_wgraph(spec: &WGraphSpec) -> Result<ColoringInstance, GraphError> {
    spec.validate()?;
    let mut positions = Vec::with_capacity(spec.p * spec.c);
    for ci in 0..spec.c {
        let r = spec.radii[ci];
        let off = spec.offsets[ci];
        for j in 0..spec.p {
            let t = off + std::f64::consts::TAU * j as f64 / spec.p as f64;
            positions.push(VertexPos::Cartesian(Point::new(r * t.cos(), r * t.sin())));
        }
    }
    let mut g = ColoringInstance {
        kind: "wgraph".into(),
        multiplicity: vec![1; positions.len()],
        positions,
        edges: Vec::new(),
        window: Window::Cartesian {
            lo: 1.0,
            hi: spec.d,
        },
        precolored: Vec::new(),
    };
    g.recompute_edges();
    Ok(g)
}

/// Placement of the bi-chromatic vertex relative to the tri-chromatic
/// center: exact squared lattice distance for e-graphs, Cartesian
/// distance for w-graphs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum BiPlacement {
    LatticeS2(i64),
    CartesianS(f64),
}

/// Attaches a multiplicity-3 vertex at the graph center and optionally a
/// multiplicity-2 vertex at distance `s` from it ("above" the center).
/// Poly-copies are appended to the pre-colored list.
pub fn attach_polychromatic(
    g: &ColoringInstance,
    tri_at_center: bool,
    bi: Option<BiPlacement>,
) -> Result<ColoringInstance, GraphError> {
    let mut out = g.clone();
    if tri_at_center {
        let center = match out.window {
            Window::Lattice { .. } => VertexPos::Lattice(LatticeVector { u: 0, v: 0 }),
            Window::Cartesian { .. } => VertexPos::Cartesian(Point::new(0.0, 0.0)),
        };
        add_poly_vertex(&mut out, center, 3)?;
    }
    if let Some(bi) = bi {
        let pos = match (bi, out.window) {
            (BiPlacement::LatticeS2(s2), Window::Lattice { a, b }) => {
                if s2 < a || s2 > b {
                    return Err(GraphError::BiOutOfWindow((s2 as f64).sqrt()));
                }
                let w = representative_with_norm(s2).ok_or(GraphError::NotLoeschian("s^2", s2))?;
                VertexPos::Lattice(w)
            }
            (BiPlacement::CartesianS(s), Window::Cartesian { lo, hi }) => {
                if s < lo - DIST_EPS || s > hi + DIST_EPS {
                    return Err(GraphError::BiOutOfWindow(s));
                }
                VertexPos::Cartesian(Point::new(0.0, s))
            }
            (BiPlacement::LatticeS2(s2), Window::Cartesian { lo, hi }) => {
                let s = (s2 as f64).sqrt();
                if s < lo - DIST_EPS || s > hi + DIST_EPS {
                    return Err(GraphError::BiOutOfWindow(s));
                }
                VertexPos::Cartesian(Point::new(0.0, s))
            }
            (BiPlacement::CartesianS(s), Window::Lattice { .. }) => {
                return Err(GraphError::BiOutOfWindow(s));
            }
        };
        add_poly_vertex(&mut out, pos, 2)?;
    }
    Ok(out)
}

fn add_poly_vertex(
    g: &mut ColoringInstance,
    pos: VertexPos,
    multiplicity: u32,
) -> Result<(), GraphError> {
    let idx = g.positions.len();
    let has_neighbor = g
        .positions
        .iter()
        .any(|&p| positions_in_window(pos, p, g.window));
    if !has_neighbor {
        return Err(GraphError::EmptyNeighborhood);
    }
    g.positions.push(pos);
    g.multiplicity.push(multiplicity);
    for j in 0..idx {
        if positions_in_window(pos, g.positions[j], g.window) {
            g.edges.push((j, idx));
        }
    }
    g.edges.sort_unstable();
    g.precolored.push(idx);
    Ok(())
}

/// Extends the pre-colored set with a maximum clique when the clique and
/// the existing poly-copies jointly form a clique; otherwise leaves only
/// the poly-copies pre-colored.
pub fn precolor_clique(g: &mut ColoringInstance, clique: &[usize]) {
    let expanded = g.expand();
    let mut candidate: Vec<usize> = g.precolored.clone();
    for &v in clique {
        if !candidate.contains(&v) {
            candidate.push(v);
        }
    }
    // joint-clique check at the copy level
    let mut copies = Vec::new();
    for (c, &owner) in expanded.owner.iter().enumerate() {
        if candidate.contains(&owner) {
            copies.push(c);
        }
    }
    let joint = copies.iter().enumerate().all(|(i, &a)| {
        copies
            .iter()
            .skip(i + 1)
            .all(|&b| expanded.is_adjacent(a, b))
    });
    if joint {
        g.precolored = candidate;
    }
}

/// Result of the branch-and-bound maximum clique search.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MaxCliqueResult {
    /// Original vertex indices (deduplicated, in discovery order).
    pub vertices: Vec<usize>,
    /// Clique order at the copy level.
    pub size: usize,
    /// False when the time budget expired first; the clique is then only
    /// a lower bound.
    pub exact: bool,
}

/// Exact maximum clique via branch and bound with a greedy-coloring
/// bound, on the expanded graph.
pub fn max_clique(g: &ColoringInstance, budget: Duration) -> MaxCliqueResult {
    let expanded = g.expand();
    let n = expanded.n();
    if n == 0 {
        return MaxCliqueResult {
            vertices: Vec::new(),
            size: 0,
            exact: true,
        };
    }
    let words = n.div_ceil(64);
    let mut adj = vec![0u64; n * words];
    for (i, nbrs) in expanded.adjacency.iter().enumerate() {
        for &j in nbrs {
            adj[i * words + j / 64] |= 1 << (j % 64);
        }
    }
    // order by descending degree; greedy-coloring bound works best this way
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(expanded.adjacency[v].len()));

    struct Search<'a> {
        adj: &'a [u64],
        words: usize,
        best: Vec<usize>,
        current: Vec<usize>,
        deadline: Instant,
        timed_out: bool,
    }

    impl Search<'_> {
        fn row(&self, v: usize) -> &[u64] {
            &self.adj[v * self.words..(v + 1) * self.words]
        }

        fn expand(&mut self, cand: &[usize]) {
            if self.timed_out {
                return;
            }
            if cand.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
                return;
            }
            if Instant::now() > self.deadline {
                self.timed_out = true;
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
                return;
            }
            // greedy coloring of candidates: color class index bounds the
            // clique extension size
            let mut color = vec![0usize; cand.len()];
            let mut class_masks: Vec<Vec<u64>> = Vec::new();
            for (ci, &v) in cand.iter().enumerate() {
                let row = self.row(v);
                let mut assigned = None;
                for (k, mask) in class_masks.iter_mut().enumerate() {
                    let conflict = (0..self.words).any(|w| mask[w] & row[w] != 0);
                    if !conflict {
                        assigned = Some(k);
                        break;
                    }
                }
                let k = match assigned {
                    Some(k) => k,
                    None => {
                        class_masks.push(vec![0u64; self.words]);
                        class_masks.len() - 1
                    }
                };
                class_masks[k][v / 64] |= 1 << (v % 64);
                color[ci] = k + 1;
            }
            // branch in descending color order
            let mut idx: Vec<usize> = (0..cand.len()).collect();
            idx.sort_by_key(|&i| color[i]);
            let mut remaining: Vec<usize> = idx.iter().map(|&i| cand[i]).collect();
            let colors: Vec<usize> = idx.iter().map(|&i| color[i]).collect();
            while let Some(v) = remaining.pop() {
                let c = colors[remaining.len()];
                if self.current.len() + c <= self.best.len() {
                    return;
                }
                self.current.push(v);
                let row = self.row(v);
                let next: Vec<usize> = remaining
                    .iter()
                    .copied()
                    .filter(|&u| row[u / 64] & (1 << (u % 64)) != 0)
                    .collect();
                self.expand(&next);
                self.current.pop();
                if self.timed_out {
                    return;
                }
            }
        }
    }

    let mut search = Search {
        adj: &adj,
        words,
        best: Vec::new(),
        current: Vec::new(),
        deadline: Instant::now() + budget,
        timed_out: false,
    };
    search.expand(&order);

    let best = search.best;
    // sanity: result must be pairwise adjacent
    debug_assert!(best
        .iter()
        .enumerate()
        .all(|(i, &a)| best.iter().skip(i + 1).all(|&b| expanded.is_adjacent(a, b))));
    let mut vertices = Vec::new();
    for &c in &best {
        let v = expanded.owner[c];
        if !vertices.contains(&v) {
            vertices.push(v);
        }
    }
    MaxCliqueResult {
        size: best.len(),
        vertices,
        exact: !search.timed_out,
    }
}

/// Bi-chromatic sweep for e-graphs: one instance per Loeschian `s^2` in
/// `[a, b]`, with the tri-chromatic center always attached.
pub fn sweep_bichromatic(spec: &EGraphSpec) -> Result<Vec<(i64, ColoringInstance)>, GraphError> {
    spec.validate()?;
    let base = build_egraph(spec)?;
    let table = loeschian_upto(spec.b);
    let mut out = Vec::new();
    for &s2 in table.members() {
        if s2 < spec.a {
            continue;
        }
        let inst = attach_polychromatic(&base, true, Some(BiPlacement::LatticeS2(s2)))?;
        out.push((s2, inst));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::loeschian_count_in;

    #[test]
    fn wheel_graph() {
        let g = build_egraph(&EGraphSpec { m: 1, a: 1, b: 1 }).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edges.len(), 12);
    }

    #[test]
    fn egraph_vertex_count() {
        for m in 1..=6 {
            let g = build_egraph(&EGraphSpec { m, a: 1, b: 1 }).unwrap();
            assert_eq!(g.vertex_count() as i64, 3 * m * m + 3 * m + 1);
        }
    }

    #[test]
    fn m1_window_1_3() {
        // all 21 pairs have norms in {1, 3, 4}; 18 of them are <= 3
        let g = build_egraph(&EGraphSpec { m: 1, a: 1, b: 3 }).unwrap();
        assert_eq!(g.edges.len(), 18);
    }

    #[test]
    fn non_loeschian_window_rejected() {
        assert!(build_egraph(&EGraphSpec { m: 1, a: 2, b: 4 }).is_err());
        assert!(build_egraph(&EGraphSpec { m: 1, a: 1, b: 2 }).is_err());
    }

    #[test]
    fn egraph_edges_match_float_route() {
        // the exact integer edge test agrees with the Cartesian distance
        let spec = EGraphSpec { m: 3, a: 3, b: 13 };
        let g = build_egraph(&spec).unwrap();
        let n = g.vertex_count();
        let mut float_edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let d2 = cart(g.positions[i]).dist(cart(g.positions[j])).powi(2);
                if d2 > spec.a as f64 - 1e-6 && d2 < spec.b as f64 + 1e-6 {
                    float_edges.push((i, j));
                }
            }
        }
        assert_eq!(g.edges, float_edges);
    }

    #[test]
    fn wgraph_circulant_18() {
        let spec = WGraphSpec::new(18, 1, 1.2856).unwrap();
        let g = build_wgraph(&spec).unwrap();
        assert_eq!(g.vertex_count(), 18);
        // chords at steps 3 and 4 only: 18 * 2 = 36 edges
        assert_eq!(g.edges.len(), 36);
    }

    #[test]
    fn wgraph_square() {
        let spec = WGraphSpec::new(4, 1, 1.5).unwrap();
        let g = build_wgraph(&spec).unwrap();
        // only the side chords sqrt(2); the diagonal 2 exceeds 1.5
        assert_eq!(g.edges.len(), 4);
    }

    #[test]
    fn wgraph_triangle() {
        let spec = WGraphSpec::new(3, 1, 2.0).unwrap();
        let g = build_wgraph(&spec).unwrap();
        assert_eq!(g.edges.len(), 3);
    }

    #[test]
    fn wgraph_rotational_symmetry() {
        let spec = WGraphSpec::new(12, 2, 1.7).unwrap();
        let g = build_wgraph(&spec).unwrap();
        let p = spec.p;
        let rot = |v: usize| {
            let circle = v / p;
            circle * p + (v % p + 1) % p
        };
        let edges: std::collections::HashSet<(usize, usize)> = g.edges.iter().copied().collect();
        for &(i, j) in &g.edges {
            let (a, b) = (rot(i), rot(j));
            let e = (a.min(b), a.max(b));
            assert!(edges.contains(&e), "rotation must map edges to edges");
        }
    }

    #[test]
    fn tri_attachment() {
        let g = build_egraph(&EGraphSpec { m: 1, a: 1, b: 1 }).unwrap();
        let g2 = attach_polychromatic(&g, true, None).unwrap();
        assert_eq!(g2.vertex_count(), 8);
        assert_eq!(g2.multiplicity[7], 3);
        // tri adjacent to the 6 unit-norm ring vertices, not to the center
        let deg: usize = g2.edges.iter().filter(|e| e.0 == 7 || e.1 == 7).count();
        assert_eq!(deg, 6);
        // expansion adds 3 mutual edges among the copies
        let ex = g2.expand();
        assert_eq!(ex.n(), 10);
        let base_ex = g.expand();
        assert_eq!(ex.edge_count(), base_ex.edge_count() + 3 * 6 + 3);
    }

    #[test]
    fn bi_placement_window() {
        let g = build_egraph(&EGraphSpec {
            m: 6,
            a: 31,
            b: 111,
        })
        .unwrap();
        assert!(attach_polychromatic(&g, true, Some(BiPlacement::LatticeS2(37))).is_ok());
        assert!(attach_polychromatic(&g, true, Some(BiPlacement::LatticeS2(25))).is_err());
        assert!(attach_polychromatic(&g, true, Some(BiPlacement::LatticeS2(112))).is_err());
    }

    #[test]
    fn sweep_candidates() {
        let spec = EGraphSpec { m: 4, a: 13, b: 21 };
        let sw = sweep_bichromatic(&spec).unwrap();
        assert_eq!(sw.len(), loeschian_count_in(13, 21));
        let spec = EGraphSpec { m: 1, a: 1, b: 1 };
        let sw = sweep_bichromatic(&spec).unwrap();
        assert_eq!(sw.len(), 1);
        assert_eq!(sw[0].0, 1);
    }

    #[test]
    fn sweep_49_169_contains_64() {
        let spec = EGraphSpec {
            m: 8,
            a: 49,
            b: 169,
        };
        let sw = sweep_bichromatic(&spec).unwrap();
        assert!(sw.iter().any(|(s2, _)| *s2 == 64));
    }

    #[test]
    fn triangle_clique() {
        let spec = WGraphSpec::new(3, 1, 2.0).unwrap();
        let g = build_wgraph(&spec).unwrap();
        let r = max_clique(&g, Duration::from_secs(5));
        assert_eq!(r.size, 3);
        assert!(r.exact);
    }

    #[test]
    fn egraph_13_21_clique() {
        let g = build_egraph(&EGraphSpec { m: 5, a: 13, b: 21 }).unwrap();
        let r = max_clique(&g, Duration::from_secs(60));
        assert!(r.exact);
        assert_eq!(r.size, 3);
    }

    #[test]
    fn clique_stable_with_poly() {
        // tri + bi copies always form a clique with each other when s is
        // in the window
        let g = build_egraph(&EGraphSpec { m: 4, a: 13, b: 21 }).unwrap();
        let g = attach_polychromatic(&g, true, Some(BiPlacement::LatticeS2(16))).unwrap();
        let ex = g.expand();
        let tri = &[ex.n() - 5, ex.n() - 4, ex.n() - 3];
        let bi = &[ex.n() - 2, ex.n() - 1];
        for &a in tri {
            for &b in bi {
                assert!(ex.is_adjacent(a, b));
            }
        }
    }

    #[test]
    fn precolor_joint_clique() {
        let g = build_egraph(&EGraphSpec { m: 5, a: 13, b: 21 }).unwrap();
        let mut g = attach_polychromatic(&g, true, Some(BiPlacement::LatticeS2(13))).unwrap();
        let clique = max_clique(&g, Duration::from_secs(60));
        precolor_clique(&mut g, &clique.vertices);
        // whatever was chosen must be a clique at copy level
        let ex = g.expand();
        let copies: Vec<usize> = (0..ex.n())
            .filter(|&c| g.precolored.contains(&ex.owner[c]))
            .collect();
        for (i, &a) in copies.iter().enumerate() {
            for &b in copies.iter().skip(i + 1) {
                assert!(ex.is_adjacent(a, b));
            }
        }
    }
}
