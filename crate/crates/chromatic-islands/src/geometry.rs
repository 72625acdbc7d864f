//! Planar primitives shared by tilings and packing: polygon diameter,
//! polygon-polygon minimum distance, and support for tile edges that are
//! arcs of circles centered at the origin (annulus tilings).
//!
//! All geometry is 64-bit floating point. Primitive distances are exact
//! up to roundoff; the documented tolerance for consumers is 1e-9.

use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};
use thiserror::Error;

pub const GEOM_EPS: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("polygon must have at least 3 edges, got {0}")]
    TooFewEdges(usize),
    #[error("polygon has non-finite coordinates")]
    NonFinite,
    #[error("arc radius must be positive, got {0}")]
    BadArcRadius(f64),
    #[error("arc endpoint at radius {found} does not lie on circle of radius {radius}")]
    ArcEndpointOffCircle { radius: f64, found: f64 },
    #[error("degenerate polygon (area {0:.3e})")]
    Degenerate(f64),
    #[error("polygons have overlapping interiors")]
    Overlap,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dist(self, other: Point) -> f64 {
        ((self.x - other.x).powi(2) + (self.y - other.y).powi(2)).sqrt()
    }

    pub fn norm(self) -> f64 {
        (self.x * self.x + self.y * self.y).sqrt()
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: Point) -> Point {
        Point::new(self.x + other.x, self.y + other.y)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(self, other: Point) -> Point {
        Point::new(self.x - other.x, self.y - other.y)
    }

    pub fn scale(self, t: f64) -> Point {
        Point::new(self.x * t, self.y * t)
    }
}

/// Edge kind of a polygon side joining vertex `i` to vertex `i+1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum EdgeKind {
    Straight,
    /// Arc of the circle of the given radius centered at the origin,
    /// traversed counterclockwise (`ccw = true`) or clockwise.
    Arc {
        radius: f64,
        ccw: bool,
    },
}

/// An origin-centered arc: start angle plus nonnegative ccw sweep.
#[derive(Debug, Clone, Copy)]
pub struct Arc {
    pub radius: f64,
    pub start: f64,
    pub sweep: f64,
}

impl Arc {
    pub fn endpoint_a(&self) -> Point {
        Point::new(
            self.radius * self.start.cos(),
            self.radius * self.start.sin(),
        )
    }

    pub fn endpoint_b(&self) -> Point {
        let t = self.start + self.sweep;
        Point::new(self.radius * t.cos(), self.radius * t.sin())
    }

    /// Whether the (normalized) angle lies within the sweep.
    pub fn contains_angle(&self, theta: f64) -> bool {
        let mut rel = (theta - self.start) % TAU;
        if rel < 0.0 {
            rel += TAU;
        }
        rel <= self.sweep + 1e-12
    }

    pub fn point_at(&self, theta: f64) -> Point {
        Point::new(self.radius * theta.cos(), self.radius * theta.sin())
    }
}

/// One boundary primitive of a polygon.
#[derive(Debug, Clone, Copy)]
pub enum Primitive {
    Segment(Point, Point),
    Arc(Arc),
}

/// A simple polygon whose sides are straight segments or origin-centered
/// arcs, with counterclockwise vertex order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Polygon {
    pub vertices: Vec<Point>,
    pub edges: Vec<EdgeKind>,
}

impl Polygon {
    /// Straight-sided polygon from counterclockwise vertices.
    pub fn from_vertices(vertices: Vec<Point>) -> Result<Self, GeometryError> {
        let n = vertices.len();
        Self::new(vertices, vec![EdgeKind::Straight; n])
    }

    pub fn new(vertices: Vec<Point>, edges: Vec<EdgeKind>) -> Result<Self, GeometryError> {
        if vertices.len() < 3 {
            return Err(GeometryError::TooFewEdges(vertices.len()));
        }
        assert_eq!(vertices.len(), edges.len(), "one edge kind per side");
        for v in &vertices {
            if !v.x.is_finite() || !v.y.is_finite() {
                return Err(GeometryError::NonFinite);
            }
        }
        for (i, e) in edges.iter().enumerate() {
            if let EdgeKind::Arc { radius, .. } = e {
                if *radius <= 0.0 {
                    return Err(GeometryError::BadArcRadius(*radius));
                }
                let a = vertices[i];
                let b = vertices[(i + 1) % vertices.len()];
                for p in [a, b] {
                    if (p.norm() - radius).abs() > 1e-6 {
                        return Err(GeometryError::ArcEndpointOffCircle {
                            radius: *radius,
                            found: p.norm(),
                        });
                    }
                }
            }
        }
        Ok(Self { vertices, edges })
    }

    /// Boundary primitives in order.
    pub fn primitives(&self) -> Vec<Primitive> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let a = self.vertices[i];
                let b = self.vertices[(i + 1) % n];
                match self.edges[i] {
                    EdgeKind::Straight => Primitive::Segment(a, b),
                    EdgeKind::Arc { radius, ccw } => {
                        let (start_pt, end_pt) = if ccw { (a, b) } else { (b, a) };
                        let start = start_pt.angle();
                        let mut sweep = (end_pt.angle() - start) % TAU;
                        if sweep < 0.0 {
                            sweep += TAU;
                        }
                        Primitive::Arc(Arc {
                            radius,
                            start,
                            sweep,
                        })
                    }
                }
            })
            .collect()
    }

    /// Signed area: shoelace over the vertex chain plus circular-segment
    /// corrections for arc edges.
    pub fn area(&self) -> f64 {
        let n = self.vertices.len();
        let mut a = 0.0;
        for i in 0..n {
            let p = self.vertices[i];
            let q = self.vertices[(i + 1) % n];
            a += p.x * q.y - q.x * p.y;
        }
        a /= 2.0;
        for (i, e) in self.edges.iter().enumerate() {
            if let EdgeKind::Arc { radius, ccw } = e {
                let p = self.vertices[i];
                let q = self.vertices[(i + 1) % n];
                let mut sweep = (q.angle() - p.angle()) % TAU;
                if sweep < 0.0 {
                    sweep += TAU;
                }
                if !*ccw {
                    sweep = TAU - sweep;
                }
                let seg = radius * radius / 2.0 * (sweep - sweep.sin());
                a += if *ccw { seg } else { -seg };
            }
        }
        a
    }

    /// Maximum distance between any two points of the closed region.
    pub fn diameter(&self) -> Result<f64, GeometryError> {
        let area = self.area().abs();
        let prims = self.primitives();
        let mut best = 0.0f64;
        for (i, p1) in prims.iter().enumerate() {
            for p2 in prims.iter().skip(i) {
                best = best.max(primitive_max_distance(p1, p2));
            }
        }
        if area < 1e-12 * best.max(1.0).powi(2) {
            return Err(GeometryError::Degenerate(area));
        }
        Ok(best)
    }

    /// Approximate point-in-polygon test (arcs polygonized); boundary
    /// points are classified arbitrarily.
    pub fn contains(&self, p: Point) -> bool {
        let poly = self.polygonized(64);
        let n = poly.len();
        let mut inside = false;
        for i in 0..n {
            let a = poly[i];
            let b = poly[(i + 1) % n];
            if (a.y > p.y) != (b.y > p.y) {
                let t = (p.y - a.y) / (b.y - a.y);
                if p.x < a.x + t * (b.x - a.x) {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// Vertex chain with arcs replaced by `per_arc`-segment chains,
    /// following the vertex order of the polygon.
    pub fn polygonized(&self, per_arc: usize) -> Vec<Point> {
        let mut chain = Vec::new();
        let n = self.vertices.len();
        for i in 0..n {
            let a = self.vertices[i];
            chain.push(a);
            if let EdgeKind::Arc { radius, ccw } = self.edges[i] {
                let b = self.vertices[(i + 1) % n];
                let start = a.angle();
                let mut sweep = (b.angle() - start) % TAU;
                if sweep < 0.0 {
                    sweep += TAU;
                }
                if !ccw {
                    sweep -= TAU;
                }
                for j in 1..per_arc {
                    let t = start + sweep * j as f64 / per_arc as f64;
                    chain.push(Point::new(radius * t.cos(), radius * t.sin()));
                }
            }
        }
        chain
    }

    /// Dense boundary sample, used by verification oracles.
    pub fn sample_boundary(&self, per_edge: usize) -> Vec<Point> {
        let mut out = Vec::new();
        for prim in self.primitives() {
            match prim {
                Primitive::Segment(a, b) => {
                    for j in 0..per_edge {
                        let t = j as f64 / per_edge as f64;
                        out.push(a.add(b.sub(a).scale(t)));
                    }
                }
                Primitive::Arc(arc) => {
                    for j in 0..per_edge {
                        let t = arc.start + arc.sweep * j as f64 / per_edge as f64;
                        out.push(arc.point_at(t));
                    }
                }
            }
        }
        out
    }

    pub fn translate(&self, by: Point) -> Polygon {
        assert!(
            !self.edges.iter().any(|e| matches!(e, EdgeKind::Arc { .. })),
            "arc edges are origin-centered and cannot be translated"
        );
        Polygon {
            vertices: self.vertices.iter().map(|v| v.add(by)).collect(),
            edges: self.edges.clone(),
        }
    }

    pub fn scale(&self, t: f64) -> Polygon {
        Polygon {
            vertices: self.vertices.iter().map(|v| v.scale(t)).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| match e {
                    EdgeKind::Straight => EdgeKind::Straight,
                    EdgeKind::Arc { radius, ccw } => EdgeKind::Arc {
                        radius: radius * t,
                        ccw: *ccw,
                    },
                })
                .collect(),
        }
    }

    /// Distance from a point to the closed region (0 if inside).
    pub fn distance_to_point(&self, p: Point) -> f64 {
        if self.contains(p) {
            return 0.0;
        }
        let mut best = f64::INFINITY;
        for prim in self.primitives() {
            let d = match prim {
                Primitive::Segment(a, b) => point_segment_distance(p, a, b),
                Primitive::Arc(arc) => point_arc_distance(p, &arc),
            };
            best = best.min(d);
        }
        best
    }
}

/// Minimum distance between two closed polygonal regions with disjoint
/// interiors; touching regions have distance 0.
pub fn min_distance(p1: &Polygon, p2: &Polygon) -> Result<f64, GeometryError> {
    let prims1 = p1.primitives();
    let prims2 = p2.primitives();
    let mut best = f64::INFINITY;
    for a in &prims1 {
        for b in &prims2 {
            best = best.min(primitive_min_distance(a, b));
            if best == 0.0 {
                break;
            }
        }
    }
    if best > GEOM_EPS {
        // boundaries are separated; containment would mean interiors overlap
        if p1.contains(p2.vertices[0]) || p2.contains(p1.vertices[0]) {
            return Err(GeometryError::Overlap);
        }
    }
    Ok(best)
}

pub fn primitive_min_distance(a: &Primitive, b: &Primitive) -> f64 {
    match (a, b) {
        (Primitive::Segment(a1, a2), Primitive::Segment(b1, b2)) => {
            segment_segment_distance(*a1, *a2, *b1, *b2)
        }
        (Primitive::Segment(a1, a2), Primitive::Arc(arc))
        | (Primitive::Arc(arc), Primitive::Segment(a1, a2)) => segment_arc_distance(*a1, *a2, arc),
        (Primitive::Arc(a), Primitive::Arc(b)) => arc_arc_distance(a, b),
    }
}

fn primitive_max_distance(a: &Primitive, b: &Primitive) -> f64 {
    match (a, b) {
        (Primitive::Segment(a1, a2), Primitive::Segment(b1, b2)) => {
            [a1.dist(*b1), a1.dist(*b2), a2.dist(*b1), a2.dist(*b2)]
                .into_iter()
                .fold(0.0, f64::max)
        }
        (Primitive::Segment(a1, a2), Primitive::Arc(arc))
        | (Primitive::Arc(arc), Primitive::Segment(a1, a2)) => {
            point_arc_max_distance(*a1, arc).max(point_arc_max_distance(*a2, arc))
        }
        (Primitive::Arc(a), Primitive::Arc(b)) => arc_arc_max_distance(a, b),
    }
}

pub fn point_segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let ab = b.sub(a);
    let len2 = ab.x * ab.x + ab.y * ab.y;
    if len2 == 0.0 {
        return p.dist(a);
    }
    let t = ((p.x - a.x) * ab.x + (p.y - a.y) * ab.y) / len2;
    let t = t.clamp(0.0, 1.0);
    p.dist(a.add(ab.scale(t)))
}

pub fn segment_segment_distance(a1: Point, a2: Point, b1: Point, b2: Point) -> f64 {
    if segments_intersect(a1, a2, b1, b2) {
        return 0.0;
    }
    point_segment_distance(a1, b1, b2)
        .min(point_segment_distance(a2, b1, b2))
        .min(point_segment_distance(b1, a1, a2))
        .min(point_segment_distance(b2, a1, a2))
}

fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

fn segments_intersect(a1: Point, a2: Point, b1: Point, b2: Point) -> bool {
    let d1 = orient(b1, b2, a1);
    let d2 = orient(b1, b2, a2);
    let d3 = orient(a1, a2, b1);
    let d4 = orient(a1, a2, b2);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    false
}

/// Distance from a point to an origin-centered arc.
pub fn point_arc_distance(p: Point, arc: &Arc) -> f64 {
    let theta = p.angle();
    let mut best = p.dist(arc.endpoint_a()).min(p.dist(arc.endpoint_b()));
    if arc.contains_angle(theta) {
        best = best.min((p.norm() - arc.radius).abs());
    }
    best
}

/// Maximum distance from a point to an origin-centered arc.
pub fn point_arc_max_distance(p: Point, arc: &Arc) -> f64 {
    let mut best = p.dist(arc.endpoint_a()).max(p.dist(arc.endpoint_b()));
    let opposite = p.angle() + PI;
    if arc.contains_angle(opposite) {
        best = best.max(p.norm() + arc.radius);
    }
    best
}

/// Minimum distance between a segment and an origin-centered arc.
pub fn segment_arc_distance(a: Point, b: Point, arc: &Arc) -> f64 {
    // circle crossings inside the angular span give distance 0
    for t in segment_circle_intersections(a, b, arc.radius) {
        let p = a.add(b.sub(a).scale(t));
        if arc.contains_angle(p.angle()) {
            return 0.0;
        }
    }
    let mut best = point_arc_distance(a, arc).min(point_arc_distance(b, arc));
    best = best.min(point_segment_distance(arc.endpoint_a(), a, b));
    best = best.min(point_segment_distance(arc.endpoint_b(), a, b));
    // perpendicular foot from the origin: radial extremum along the segment
    let ab = b.sub(a);
    let len2 = ab.x * ab.x + ab.y * ab.y;
    if len2 > 0.0 {
        let t = -(a.x * ab.x + a.y * ab.y) / len2;
        if (0.0..=1.0).contains(&t) {
            let foot = a.add(ab.scale(t));
            if arc.contains_angle(foot.angle()) {
                best = best.min((foot.norm() - arc.radius).abs());
            }
        }
    }
    best
}

fn segment_circle_intersections(a: Point, b: Point, r: f64) -> Vec<f64> {
    let d = b.sub(a);
    let qa = d.x * d.x + d.y * d.y;
    let qb = 2.0 * (a.x * d.x + a.y * d.y);
    let qc = a.x * a.x + a.y * a.y - r * r;
    let disc = qb * qb - 4.0 * qa * qc;
    if disc < 0.0 || qa == 0.0 {
        return Vec::new();
    }
    let s = disc.sqrt();
    [(-qb - s) / (2.0 * qa), (-qb + s) / (2.0 * qa)]
        .into_iter()
        .filter(|t| (0.0..=1.0).contains(t))
        .collect()
}

/// Minimum distance between two origin-centered arcs.
pub fn arc_arc_distance(a: &Arc, b: &Arc) -> f64 {
    let mut best = point_arc_distance(a.endpoint_a(), b)
        .min(point_arc_distance(a.endpoint_b(), b))
        .min(point_arc_distance(b.endpoint_a(), a))
        .min(point_arc_distance(b.endpoint_b(), a));
    if spans_overlap(a, b) {
        best = best.min((a.radius - b.radius).abs());
    }
    best
}

/// Maximum distance between two origin-centered arcs.
pub fn arc_arc_max_distance(a: &Arc, b: &Arc) -> f64 {
    let mut best = point_arc_max_distance(a.endpoint_a(), b)
        .max(point_arc_max_distance(a.endpoint_b(), b))
        .max(point_arc_max_distance(b.endpoint_a(), a))
        .max(point_arc_max_distance(b.endpoint_b(), a));
    // antipodal alignment achievable with both angles interior
    let shifted = Arc {
        radius: b.radius,
        start: b.start + PI,
        sweep: b.sweep,
    };
    if spans_overlap(a, &shifted) {
        best = best.max(a.radius + b.radius);
    }
    best
}

fn spans_overlap(a: &Arc, b: &Arc) -> bool {
    // sample-free interval intersection on the circle
    if a.contains_angle(b.start) || a.contains_angle(b.start + b.sweep) {
        return true;
    }
    b.contains_angle(a.start) || b.contains_angle(a.start + a.sweep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> Polygon {
        Polygon::from_vertices(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap()
    }

    fn regular_hexagon(side: f64, center: Point) -> Polygon {
        // flat sides facing +x: vertices at 30 + 60j degrees
        let verts = (0..6)
            .map(|j| {
                let t = PI / 6.0 + PI / 3.0 * j as f64;
                Point::new(center.x + side * t.cos(), center.y + side * t.sin())
            })
            .collect();
        Polygon::from_vertices(verts).unwrap()
    }

    #[test]
    fn square_diameter() {
        let d = unit_square().diameter().unwrap();
        assert!((d - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn hexagon_diameter() {
        let d = regular_hexagon(0.5, Point::new(0.0, 0.0))
            .diameter()
            .unwrap();
        assert!((d - 1.0).abs() < 1e-12);
    }

    #[test]
    fn annular_sector_diameter() {
        // oracle: max of outer chord and corner diagonal
        let d = 1.2856f64;
        let theta = TAU / 9.0;
        let p = Polygon::new(
            vec![
                Point::new(1.0, 0.0),
                Point::new(d, 0.0),
                Point::new(d * theta.cos(), d * theta.sin()),
                Point::new(theta.cos(), theta.sin()),
            ],
            vec![
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
            ],
        )
        .unwrap();
        let outer_chord = 2.0 * d * (theta / 2.0).sin();
        let diagonal = (1.0 + d * d - 2.0 * d * theta.cos()).sqrt();
        let expect = outer_chord.max(diagonal);
        assert!((p.diameter().unwrap() - expect).abs() < 1e-9);
    }

    #[test]
    fn degenerate_polygon_rejected() {
        let p = Polygon::from_vertices(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(2.0, 0.0),
        ])
        .unwrap();
        assert!(matches!(p.diameter(), Err(GeometryError::Degenerate(_))));
    }

    #[test]
    fn touching_squares() {
        let a = unit_square();
        let b = a.translate(Point::new(1.0, 0.0));
        assert_eq!(min_distance(&a, &b).unwrap(), 0.0);
    }

    #[test]
    fn hexagons_lattice_gap() {
        // same-shape hexagons offset by lattice vector (2,1) scaled sqrt(3)/2
        let s = 3f64.sqrt() / 2.0;
        let offset = Point::new(s * (2.0 + 0.5), s * 3f64.sqrt() / 2.0);
        let a = regular_hexagon(0.5, Point::new(0.0, 0.0));
        let b = regular_hexagon(0.5, offset);
        let d = min_distance(&a, &b).unwrap();
        assert!((d - 7f64.sqrt() / 2.0).abs() < 1e-9, "got {d}");
    }

    #[test]
    fn hexagons_axis_gap() {
        // three center spacings apart along a lattice axis -> sqrt(3)
        let s = 3f64.sqrt() / 2.0;
        let a = regular_hexagon(0.5, Point::new(0.0, 0.0));
        let b = regular_hexagon(0.5, Point::new(3.0 * s, 0.0));
        let d = min_distance(&a, &b).unwrap();
        assert!((d - 3f64.sqrt()).abs() < 1e-9, "got {d}");
    }

    #[test]
    fn overlap_detected() {
        let a = unit_square();
        let b = Polygon::from_vertices(vec![
            Point::new(0.25, 0.25),
            Point::new(0.75, 0.25),
            Point::new(0.75, 0.75),
            Point::new(0.25, 0.75),
        ])
        .unwrap();
        assert!(matches!(min_distance(&a, &b), Err(GeometryError::Overlap)));
    }

    #[test]
    fn segment_vs_arc() {
        let arc = Arc {
            radius: 1.0,
            start: -0.3,
            sweep: 0.6,
        };
        let d = segment_arc_distance(Point::new(2.0, 0.0), Point::new(3.0, 0.0), &arc);
        assert!((d - 1.0).abs() < 1e-12);
    }

    #[test]
    fn arc_vs_arc_radial() {
        let a = Arc {
            radius: 1.0,
            start: 0.0,
            sweep: 1.0,
        };
        let b = Arc {
            radius: 2.0,
            start: 0.5,
            sweep: 1.0,
        };
        assert!((arc_arc_distance(&a, &b) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn arc_vs_arc_endpoint_chord() {
        let deg = PI / 180.0;
        let a = Arc {
            radius: 1.0,
            start: 0.0,
            sweep: 10.0 * deg,
        };
        let b = Arc {
            radius: 1.0,
            start: 50.0 * deg,
            sweep: 10.0 * deg,
        };
        let expect = 2.0 * (20.0 * deg).sin();
        assert!((arc_arc_distance(&a, &b) - expect).abs() < 1e-12);
    }

    #[test]
    fn min_distance_symmetric_and_sampled() {
        // Monte-Carlo style oracle: dense boundary sampling brackets the
        // exact distance from above within 1e-3.
        let a = regular_hexagon(0.7, Point::new(0.0, 0.0));
        let b = unit_square().translate(Point::new(1.5, 0.3));
        let d1 = min_distance(&a, &b).unwrap();
        let d2 = min_distance(&b, &a).unwrap();
        assert!((d1 - d2).abs() < 1e-12);
        let sa = a.sample_boundary(3000);
        let sb = b.sample_boundary(3000);
        let mut sampled = f64::INFINITY;
        for p in &sa {
            for q in &sb {
                sampled = sampled.min(p.dist(*q));
            }
        }
        assert!(sampled >= d1 - 1e-12);
        assert!(sampled - d1 < 1e-3);
    }

    #[test]
    fn diameter_rigid_motion_invariant() {
        let a = regular_hexagon(0.5, Point::new(0.0, 0.0));
        let th = 0.73f64;
        let rot: Vec<Point> = a
            .vertices
            .iter()
            .map(|p| {
                Point::new(
                    p.x * th.cos() - p.y * th.sin() + 2.0,
                    p.x * th.sin() + p.y * th.cos() - 1.0,
                )
            })
            .collect();
        let b = Polygon::from_vertices(rot).unwrap();
        assert!((a.diameter().unwrap() - b.diameter().unwrap()).abs() < 1e-9);
    }

    #[test]
    fn annulus_sector_area() {
        let d = 2.0f64;
        let theta = PI / 3.0;
        let p = Polygon::new(
            vec![
                Point::new(1.0, 0.0),
                Point::new(d, 0.0),
                Point::new(d * theta.cos(), d * theta.sin()),
                Point::new(theta.cos(), theta.sin()),
            ],
            vec![
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
            ],
        )
        .unwrap();
        let expect = theta / 2.0 * (d * d - 1.0);
        assert!((p.area() - expect).abs() < 1e-9);
    }
}
