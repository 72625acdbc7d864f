//! Lower-bound machinery: sublattice colorings of hexagon tilings of the
//! plane, verification of explicit tilings, and radial colorings of an
//! annulus.
//!
//! A k-coloring of a plane tiling whose tiles have diameter at most 1 and
//! whose same-colored tiles stay at least d apart shows that the interval
//! [1, d) of forbidden distances is (k+1)-colorable, giving a lower bound
//! d_lb for chi = k+1.

use crate::geometry::{min_distance, EdgeKind, GeometryError, Point, Polygon};
use crate::lattice::{representative_with_norm, LatticeVector};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};
use thiserror::Error;

pub const TILE_EPS: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum TilingError {
    #[error("{0} is not a Loeschian number, no hexagonal index-{0} sublattice exists")]
    NotLoeschian(i64),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("tiles cover area {found} but the region has area {expected}")]
    Coverage { expected: f64, found: f64 },
    #[error("bad tiling spec: {0}")]
    BadSpec(String),
}

/// One tile of the hexagon tiling together with the translation lattice
/// and the index-k color sublattice (in translation-lattice coordinates).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SublatticeColoring {
    pub k: i64,
    pub tile: Polygon,
    pub tile_lattice: [Point; 2],
    pub color_sublattice: [(i64, i64); 2],
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Region {
    /// The whole plane, tiled by translates of the listed tiles along the
    /// period basis.
    Periodic { basis: [Point; 2] },
    /// Closed annulus with inner radius 1.
    Annulus { outer: f64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Tile {
    pub polygon: Polygon,
    pub color: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TilingSpec {
    pub region: Region,
    pub k: usize,
    pub tiles: Vec<Tile>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum TileViolation {
    WidthExceeded { tile: usize, width: f64 },
    SameColorContact { a: usize, b: usize },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TilingReport {
    pub max_width: f64,
    pub min_same_color_gap: f64,
    pub violations: Vec<TileViolation>,
}

/// Membership and record flags for a color count k, following the
/// four-way split of sublattice colorings: hexagonal sublattice available
/// or not, crossed with whether d(k) strictly exceeds every d(j), j < k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KClass {
    pub loeschian: bool,
    pub record: bool,
    /// Both the regular and the irregular variant set the record.
    pub dual: bool,
}

impl KClass {
    pub fn label(self) -> &'static str {
        match (self.loeschian, self.record) {
            (true, true) => "L+",
            (true, false) => "L-",
            (false, true) => "NL+",
            (false, false) => "NL-",
        }
    }
}

fn hex_tile(center: Point, side: f64) -> Polygon {
    let vertices = (0..6)
        .map(|j| {
            let t = PI / 6.0 + PI / 3.0 * j as f64;
            Point::new(center.x + side * t.cos(), center.y + side * t.sin())
        })
        .collect();
    Polygon::from_vertices(vertices).expect("regular hexagon is valid")
}

/// Spacing of hexagon centers when the tiles are regular hexagons of
/// side 1/2 (diameter 1).
pub const HEX_STEP: f64 = 0.866_025_403_784_438_6;

fn cart(w: LatticeVector, step: f64) -> Point {
    let (x, y) = w.to_cartesian(step);
    Point::new(x, y)
}

/// Minimum distance between same-colored tiles when regular hexagons of
/// diameter 1 are colored by the cosets of the hexagonal index-k
/// sublattice. Exact up to geometry primitives; only defined for
/// Loeschian k.
pub fn regular_sublattice_distance(k: i64) -> Result<f64, TilingError> {
    let w = representative_with_norm(k).ok_or(TilingError::NotLoeschian(k))?;
    if k == 0 {
        return Err(TilingError::NotLoeschian(k));
    }
    let tile = hex_tile(Point::new(0.0, 0.0), 0.5);
    let mut best = f64::INFINITY;
    // sublattice vectors of norm up to 4k; enough for the nearest pair
    for i in -2i64..=2 {
        for j in -2i64..=2 {
            if i == 0 && j == 0 {
                continue;
            }
            let g = scale_vec(w, i).add(scale_vec(w.rot60(), j));
            if g.norm() > 4 * k {
                continue;
            }
            let shifted = tile.translate(cart(g, HEX_STEP));
            best = best.min(min_distance(&tile, &shifted)?);
        }
    }
    Ok(best)
}

fn scale_vec(w: LatticeVector, c: i64) -> LatticeVector {
    LatticeVector::new(w.u * c, w.v * c).expect("scaled vector in range")
}

/// Tiling spec with one fundamental domain of the color sublattice:
/// k regular hexagon tiles, one coset representative per color.
pub fn regular_sublattice_spec(k: i64) -> Result<TilingSpec, TilingError> {
    let w = representative_with_norm(k).ok_or(TilingError::NotLoeschian(k))?;
    let s1 = w;
    let s2 = w.rot60();
    // coset representatives: reduce small lattice points modulo the
    // sublattice and keep the first hit of each coset
    let det = k as f64;
    let mut reps: Vec<LatticeVector> = Vec::new();
    let span = (k as f64).sqrt() as i64 + 2;
    'outer: for u in -span..=span {
        for v in -span..=span {
            let p = LatticeVector::new(u, v).unwrap();
            if reps.iter().any(|r| same_coset(p.sub(*r), s1, s2, det)) {
                continue;
            }
            reps.push(p);
            if reps.len() == k as usize {
                break 'outer;
            }
        }
    }
    if reps.len() != k as usize {
        return Err(TilingError::BadSpec(format!(
            "found {} cosets for k={k}",
            reps.len()
        )));
    }
    let tiles = reps
        .iter()
        .enumerate()
        .map(|(color, r)| Tile {
            polygon: hex_tile(cart(*r, HEX_STEP), 0.5),
            color,
        })
        .collect();
    Ok(TilingSpec {
        region: Region::Periodic {
            basis: [cart(s1, HEX_STEP), cart(s2, HEX_STEP)],
        },
        k: k as usize,
        tiles,
    })
}

fn same_coset(diff: LatticeVector, s1: LatticeVector, s2: LatticeVector, det: f64) -> bool {
    // coordinates of diff in the (s1, s2) basis must both be integers
    let a = (diff.u * s2.v - diff.v * s2.u) as f64 / det;
    let b = (diff.v * s1.u - diff.u * s1.v) as f64 / det;
    (a - a.round()).abs() < 1e-9 && (b - b.round()).abs() < 1e-9
}

/// Verifies width, coverage, and same-color gaps of an explicit tiling.
/// The gap search for periodic regions scans translates within the given
/// shell of periods (2 suffices for gaps below three tile widths).
pub fn verify_tiling_with_shell(
    spec: &TilingSpec,
    shell: i64,
) -> Result<TilingReport, TilingError> {
    let mut violations = Vec::new();
    let mut max_width: f64 = 0.0;
    let mut covered = 0.0;
    for (i, t) in spec.tiles.iter().enumerate() {
        let w = t.polygon.diameter()?;
        if w > 1.0 + TILE_EPS {
            violations.push(TileViolation::WidthExceeded { tile: i, width: w });
        }
        max_width = max_width.max(w);
        covered += t.polygon.area();
        if t.color >= spec.k {
            return Err(TilingError::BadSpec(format!(
                "tile {i} has color {} but k={}",
                t.color, spec.k
            )));
        }
    }
    let expected = match &spec.region {
        Region::Periodic { basis } => (basis[0].x * basis[1].y - basis[0].y * basis[1].x).abs(),
        Region::Annulus { outer } => PI * (outer * outer - 1.0),
    };
    if (covered - expected).abs() > 1e-6 * expected.max(1.0) {
        return Err(TilingError::Coverage {
            expected,
            found: covered,
        });
    }

    let mut gap = f64::INFINITY;
    let record_pair = |a: usize, b: usize, d: f64, violations: &mut Vec<TileViolation>| {
        if d < TILE_EPS && !violations.contains(&TileViolation::SameColorContact { a, b }) {
            violations.push(TileViolation::SameColorContact { a, b });
        }
    };
    match &spec.region {
        Region::Periodic { basis } => {
            let (b1, b2) = reduce_basis(basis[0], basis[1]);
            for i in 0..spec.tiles.len() {
                for j in i..spec.tiles.len() {
                    if spec.tiles[i].color != spec.tiles[j].color {
                        continue;
                    }
                    for a in -shell..=shell {
                        for b in -shell..=shell {
                            if i == j && a == 0 && b == 0 {
                                continue;
                            }
                            let shift = b1.scale(a as f64).add(b2.scale(b as f64));
                            let moved = spec.tiles[j].polygon.translate(shift);
                            let d = match min_distance(&spec.tiles[i].polygon, &moved) {
                                Ok(d) => d,
                                Err(GeometryError::Overlap) => 0.0,
                                Err(e) => return Err(e.into()),
                            };
                            record_pair(i, j, d, &mut violations);
                            gap = gap.min(d);
                        }
                    }
                }
            }
        }
        Region::Annulus { .. } => {
            for i in 0..spec.tiles.len() {
                for j in i + 1..spec.tiles.len() {
                    if spec.tiles[i].color != spec.tiles[j].color {
                        continue;
                    }
                    let d = match min_distance(&spec.tiles[i].polygon, &spec.tiles[j].polygon) {
                        Ok(d) => d,
                        Err(GeometryError::Overlap) => 0.0,
                        Err(e) => return Err(e.into()),
                    };
                    record_pair(i, j, d, &mut violations);
                    gap = gap.min(d);
                }
            }
        }
    }
    Ok(TilingReport {
        max_width,
        min_same_color_gap: gap,
        violations,
    })
}

pub fn verify_tiling(spec: &TilingSpec) -> Result<TilingReport, TilingError> {
    verify_tiling_with_shell(spec, 2)
}

fn reduce_basis(mut a: Point, mut b: Point) -> (Point, Point) {
    // Lagrange reduction
    for _ in 0..64 {
        if b.norm() < a.norm() {
            std::mem::swap(&mut a, &mut b);
        }
        let mu = ((a.x * b.x + a.y * b.y) / (a.norm() * a.norm())).round();
        if mu == 0.0 {
            break;
        }
        b = b.sub(a.scale(mu));
    }
    (a, b)
}

/// Classifies a color count given the best known distances d(1..=k) and,
/// for Loeschian k, the regular-hexagon value. `dual` marks the case
/// where both tiling variants beat every previous value.
pub fn classify_k(k: usize, best: &[f64], regular: Option<f64>) -> KClass {
    assert!(best.len() >= k && k >= 1, "need distances for 1..=k");
    let prev_max = best[..k - 1].iter().cloned().fold(0.0f64, f64::max);
    let record = k == 1 || best[k - 1] > prev_max + 1e-9;
    let loeschian = regular.is_some();
    let dual = match regular {
        Some(r) if loeschian && record => r > prev_max + 1e-9 && best[k - 1] > r + 1e-6,
        _ => false,
    };
    KClass {
        loeschian,
        record,
        dual,
    }
}

// ---- irregular hexagon optimization ----

/// Best found same-color distance for tilings by translates of one
/// centrally symmetric hexagon, colored by an index-k sublattice of its
/// translation lattice. Stochastic; deterministic for a fixed seed.
/// For Loeschian k the regular value is a floor on the result.
pub fn general_sublattice_distance(
    k: i64,
    restarts: usize,
    seed: u64,
) -> (f64, SublatticeColoring) {
    assert!(k >= 1);
    let sublats = hnf_sublattices(k);
    let starts_per = restarts.div_ceil(sublats.len()).max(1);
    let jobs: Vec<(usize, (i64, i64, i64))> = sublats
        .iter()
        .flat_map(|&s| (0..starts_per).map(move |i| (i, s)))
        .take(restarts.max(sublats.len()))
        .collect();
    let best = jobs
        .par_iter()
        .map(|&(i, (p, q, r))| {
            let mut rng = ChaCha8Rng::seed_from_u64(
                seed ^ (p as u64) << 40 ^ (q as u64) << 24 ^ (r as u64) << 8 ^ i as u64,
            );
            let (mut x, mut fx) = nelder_mead(
                random_shape(&mut rng),
                |y| shape_objective(y, p, q, r),
                800,
                &mut rng,
            );
            // short polish pass
            let polished = nelder_mead(x, |y| shape_objective(y, p, q, r), 400, &mut rng);
            if polished.1 > fx {
                (x, fx) = polished;
            }
            (fx, x, (p, q, r))
        })
        .reduce(
            || (f64::NEG_INFINITY, [0.0; 6], (1, 0, k)),
            |a, b| if a.0 >= b.0 { a } else { b },
        );

    let (value, params, (p, q, r)) = best;
    let mut result_d = value;
    let mut coloring = build_coloring(k, &params, p, q, r);
    if let Ok(reg) = regular_sublattice_distance(k) {
        if reg > result_d {
            result_d = reg;
            let w = representative_with_norm(k).unwrap();
            coloring = SublatticeColoring {
                k,
                tile: hex_tile(Point::new(0.0, 0.0), 0.5),
                tile_lattice: [
                    cart(LatticeVector::new(1, 0).unwrap(), HEX_STEP),
                    cart(LatticeVector::new(0, 1).unwrap(), HEX_STEP),
                ],
                color_sublattice: [(w.u, w.v), (w.rot60().u, w.rot60().v)],
            };
        }
    }
    (result_d, coloring)
}

/// Index-k sublattices in Hermite normal form: (p, 0) and (q, r) with
/// p*r = k and 0 <= q < p.
pub fn hnf_sublattices(k: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for p in 1..=k {
        if k % p != 0 {
            continue;
        }
        let r = k / p;
        for q in 0..p {
            out.push((p, q, r));
        }
    }
    out
}

fn random_shape(rng: &mut ChaCha8Rng) -> [f64; 6] {
    // three edge vectors with angles spread over a half-turn
    let mut x = [0.0; 6];
    for i in 0..3 {
        let t = PI * (i as f64 + rng.gen::<f64>()) / 3.0;
        let len = 0.3 + 0.5 * rng.gen::<f64>();
        x[2 * i] = len * t.cos();
        x[2 * i + 1] = len * t.sin();
    }
    x
}

/// Hexagon vertices from three edge vectors, or None if degenerate.
fn hexagon_from_edges(x: &[f64; 6]) -> Option<[Point; 6]> {
    let mut e: Vec<Point> = (0..3).map(|i| Point::new(x[2 * i], x[2 * i + 1])).collect();
    for v in e.iter_mut() {
        if v.y < 0.0 || (v.y == 0.0 && v.x < 0.0) {
            *v = v.scale(-1.0);
        }
        if v.norm() < 1e-6 {
            return None;
        }
    }
    e.sort_by(|a, b| a.angle().partial_cmp(&b.angle()).unwrap());
    let half = e[0].add(e[1]).add(e[2]).scale(0.5);
    let mut v = [Point::new(0.0, 0.0); 6];
    v[0] = half.scale(-1.0);
    v[1] = v[0].add(e[0]);
    v[2] = v[1].add(e[1]);
    v[3] = v[2].add(e[2]);
    v[4] = v[3].sub(e[0]);
    v[5] = v[4].sub(e[1]);
    // convexity: consecutive edges must turn left
    let full = [e[0], e[1], e[2], e[0].scale(-1.0)];
    for w in full.windows(2) {
        if w[0].x * w[1].y - w[0].y * w[1].x <= 1e-9 {
            return None;
        }
    }
    Some(v)
}

fn point_in_convex(v: &[Point; 6], p: Point) -> bool {
    for i in 0..6 {
        let a = v[i];
        let b = v[(i + 1) % 6];
        if (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x) < 0.0 {
            return false;
        }
    }
    true
}

fn point_to_convex(v: &[Point; 6], p: Point) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..6 {
        best = best.min(crate::geometry::point_segment_distance(
            p,
            v[i],
            v[(i + 1) % 6],
        ));
    }
    best
}

/// Scale-invariant objective: nearest same-color tile distance divided by
/// tile diameter. Negative on degenerate or overlapping configurations.
fn shape_objective(x: &[f64; 6], p: i64, q: i64, r: i64) -> f64 {
    let Some(v) = hexagon_from_edges(x) else {
        return -1.0;
    };
    let mut diam: f64 = 0.0;
    for i in 0..6 {
        for j in i + 1..6 {
            diam = diam.max(v[i].dist(v[j]));
        }
    }
    // edge vectors after sorting are the vertex differences
    let t1 = v[2].sub(v[0]);
    let t2 = v[3].sub(v[1]);
    let s1 = t1.scale(p as f64);
    let s2 = t1.scale(q as f64).add(t2.scale(r as f64));
    let (s1, s2) = reduce_basis(s1, s2);
    let double: [Point; 6] = std::array::from_fn(|i| v[i].scale(2.0));
    let mut gap = f64::INFINITY;
    for a in -2i64..=2 {
        for b in -2i64..=2 {
            if a == 0 && b == 0 {
                continue;
            }
            let g = s1.scale(a as f64).add(s2.scale(b as f64));
            if point_in_convex(&double, g) {
                return -0.5;
            }
            gap = gap.min(point_to_convex(&double, g));
        }
    }
    gap / diam
}

fn build_coloring(k: i64, x: &[f64; 6], p: i64, q: i64, r: i64) -> SublatticeColoring {
    let v = hexagon_from_edges(x).expect("winning shape is nondegenerate");
    let mut diam: f64 = 0.0;
    for i in 0..6 {
        for j in i + 1..6 {
            diam = diam.max(v[i].dist(v[j]));
        }
    }
    let scaled: Vec<Point> = v.iter().map(|p| p.scale(1.0 / diam)).collect();
    let t1 = scaled[2].sub(scaled[0]);
    let t2 = scaled[3].sub(scaled[1]);
    SublatticeColoring {
        k,
        tile: Polygon::from_vertices(scaled).expect("hexagon is valid"),
        tile_lattice: [t1, t2],
        color_sublattice: [(p, 0), (q, r)],
    }
}

/// One fundamental domain of the color sublattice as an explicit tiling.
pub fn sublattice_tiling_spec(c: &SublatticeColoring) -> TilingSpec {
    let [(p, _), (q, r)] = c.color_sublattice;
    let [t1, t2] = c.tile_lattice;
    let s1 = t1.scale(p as f64);
    let s2 = t1.scale(q as f64).add(t2.scale(r as f64));
    let mut tiles = Vec::new();
    let mut color = 0;
    for i in 0..p {
        for j in 0..r {
            let shift = t1.scale(i as f64).add(t2.scale(j as f64));
            tiles.push(Tile {
                polygon: c.tile.translate(shift),
                color,
            });
            color += 1;
        }
    }
    TilingSpec {
        region: Region::Periodic { basis: [s1, s2] },
        k: c.k as usize,
        tiles,
    }
}

// ---- Nelder-Mead (maximization) ----

fn nelder_mead<F: Fn(&[f64; 6]) -> f64>(
    start: [f64; 6],
    f: F,
    iters: usize,
    rng: &mut ChaCha8Rng,
) -> ([f64; 6], f64) {
    const N: usize = 6;
    let mut simplex: Vec<([f64; 6], f64)> = Vec::with_capacity(N + 1);
    simplex.push((start, f(&start)));
    for i in 0..N {
        let mut x = start;
        x[i] += 0.08 + 0.04 * rng.gen::<f64>();
        simplex.push((x, f(&x)));
    }
    let centroid = |s: &[([f64; 6], f64)]| -> [f64; 6] {
        let mut c = [0.0; 6];
        for (x, _) in &s[..N] {
            for i in 0..N {
                c[i] += x[i] / N as f64;
            }
        }
        c
    };
    for _ in 0..iters {
        simplex.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());
        let c = centroid(&simplex);
        let worst = simplex[N].0;
        let mut refl = [0.0; 6];
        for i in 0..N {
            refl[i] = c[i] + (c[i] - worst[i]);
        }
        let fr = f(&refl);
        if fr > simplex[0].1 {
            let mut exp = [0.0; 6];
            for i in 0..N {
                exp[i] = c[i] + 2.0 * (c[i] - worst[i]);
            }
            let fe = f(&exp);
            simplex[N] = if fe > fr { (exp, fe) } else { (refl, fr) };
        } else if fr > simplex[N - 1].1 {
            simplex[N] = (refl, fr);
        } else {
            let mut con = [0.0; 6];
            for i in 0..N {
                con[i] = c[i] + 0.5 * (worst[i] - c[i]);
            }
            let fc = f(&con);
            if fc > simplex[N].1 {
                simplex[N] = (con, fc);
            } else {
                let best = simplex[0].0;
                for s in simplex.iter_mut().skip(1) {
                    for (si, bi) in s.0.iter_mut().zip(best.iter()) {
                        *si = bi + 0.5 * (*si - bi);
                    }
                    s.1 = f(&s.0);
                }
            }
        }
    }
    simplex.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());
    (simplex[0].0, simplex[0].1)
}

// ---- radial annulus colorings ----

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RadialColoring {
    pub k: usize,
    pub n: usize,
    pub angles: Vec<f64>,
    pub colors: Vec<usize>,
    pub d: f64,
}

/// Feasible outer radius for the given sector angles and cyclic color
/// pattern: the largest d with every sector diameter at most 1 and every
/// same-color gap at least d.
fn radial_d(angles: &[f64], colors: &[usize]) -> f64 {
    let n = angles.len();
    let mut d = f64::INFINITY;
    for &t in angles {
        // outer chord 2d sin(t/2) <= 1 and corner diagonal
        // sqrt(1 + d^2 - 2 d cos t) <= 1
        d = d.min(0.5 / (t / 2.0).sin());
        d = d.min(2.0 * t.cos());
    }
    // same-color gap: chord at the inner circle across the angular
    // separation between nearest edges
    for i in 0..n {
        let mut sep = 0.0;
        for step in 1..n {
            let j = (i + step) % n;
            if colors[j] == colors[i] {
                break;
            }
            sep += angles[j];
        }
        if sep == 0.0 {
            return 0.0; // adjacent same-color sectors touch
        }
        d = d.min(2.0 * (sep.min(PI) / 2.0).sin());
    }
    d
}

/// Best radial k-coloring over sector counts n <= n_max (multiples of k,
/// cyclic pattern), with local optimization of the sector angles.
pub fn radial_optimum(k: usize, n_max: usize) -> (f64, RadialColoring) {
    assert!(k >= 2 && n_max >= k);
    let mut best: Option<RadialColoring> = None;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_7ad1a1);
    for m in 1..=(n_max / k) {
        let n = m * k;
        let colors: Vec<usize> = (0..n).map(|i| i % k).collect();
        let mut angles = vec![TAU / n as f64; n];
        let mut d = radial_d(&angles, &colors);
        // local angle search, preserving the total
        let mut step = 0.2 * TAU / n as f64;
        for round in 0..400 {
            let i = rng.gen_range(0..n);
            let j = rng.gen_range(0..n);
            if i == j {
                continue;
            }
            let delta = step * rng.gen::<f64>();
            if angles[i] <= delta + 1e-9 {
                continue;
            }
            angles[i] -= delta;
            angles[j] += delta;
            let nd = radial_d(&angles, &colors);
            if nd > d {
                d = nd;
            } else {
                angles[i] += delta;
                angles[j] -= delta;
            }
            if round % 100 == 99 {
                step *= 0.5;
            }
        }
        if best.as_ref().is_none_or(|b| d > b.d) {
            best = Some(RadialColoring {
                k,
                n,
                angles,
                colors,
                d,
            });
        }
    }
    let best = best.expect("at least one sector count tried");
    (best.d, best)
}

/// Explicit annulus tiling of a radial coloring (requires d > 1).
pub fn radial_tiling_spec(rc: &RadialColoring) -> Result<TilingSpec, TilingError> {
    if rc.d <= 1.0 {
        return Err(TilingError::BadSpec(format!(
            "outer radius {} does not exceed the inner radius",
            rc.d
        )));
    }
    let mut tiles = Vec::new();
    let mut a0 = 0.0;
    for (i, &t) in rc.angles.iter().enumerate() {
        let a1 = a0 + t;
        let d = rc.d;
        let vertices = vec![
            Point::new(a0.cos(), a0.sin()),
            Point::new(d * a0.cos(), d * a0.sin()),
            Point::new(d * a1.cos(), d * a1.sin()),
            Point::new(a1.cos(), a1.sin()),
        ];
        let edges = vec![
            EdgeKind::Straight,
            EdgeKind::Arc {
                radius: d,
                ccw: true,
            },
            EdgeKind::Straight,
            EdgeKind::Arc {
                radius: 1.0,
                ccw: false,
            },
        ];
        tiles.push(Tile {
            polygon: Polygon::new(vertices, edges)?,
            color: rc.colors[i],
        });
        a0 = a1;
    }
    Ok(TilingSpec {
        region: Region::Annulus { outer: rc.d },
        k: rc.k,
        tiles,
    })
}
