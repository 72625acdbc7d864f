//! Exact integer arithmetic on the hexagonal (Eisenstein) lattice.
//!
//! Lattice points are written in the basis `e1 = (1, 0)`,
//! `e2 = (1/2, sqrt(3)/2)`. The squared Euclidean length of `u*e1 + v*e2`
//! is `u^2 + u*v + v^2`; the set of values this form attains on integers
//! is the set of Loeschian numbers, which governs which squared distances
//! are realizable on the lattice.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Coordinates large enough for every instance in this crate; the cap
/// keeps every norm and difference-of-norms computation inside `i64`.
pub const MAX_COORD: i64 = 1 << 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("lattice coordinate {0} exceeds the supported range +/-{MAX_COORD}")]
    CoordinateOutOfRange(i64),
}

/// A point of the hexagonal lattice in Eisenstein coordinates `(u, v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeVector {
    pub u: i64,
    pub v: i64,
}

impl LatticeVector {
    pub fn new(u: i64, v: i64) -> Result<Self, LatticeError> {
        for c in [u, v] {
            if c.abs() > MAX_COORD {
                return Err(LatticeError::CoordinateOutOfRange(c));
            }
        }
        Ok(Self { u, v })
    }

    /// Squared Euclidean length in lattice steps: `u^2 + uv + v^2`.
    pub fn norm(self) -> i64 {
        self.u * self.u + self.u * self.v + self.v * self.v
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(self, other: Self) -> Self {
        Self {
            u: self.u - other.u,
            v: self.v - other.v,
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: Self) -> Self {
        Self {
            u: self.u + other.u,
            v: self.v + other.v,
        }
    }

    /// Rotation by 60 degrees counterclockwise.
    pub fn rot60(self) -> Self {
        Self {
            u: -self.v,
            v: self.u + self.v,
        }
    }

    /// Hexagonal ball radius: number of lattice steps from the origin.
    pub fn hex_radius(self) -> i64 {
        self.u.abs().max(self.v.abs()).max((self.u + self.v).abs())
    }

    /// Cartesian image for a lattice with the given step length.
    pub fn to_cartesian(self, step: f64) -> (f64, f64) {
        let x = step * (self.u as f64 + self.v as f64 / 2.0);
        let y = step * self.v as f64 * 3f64.sqrt() / 2.0;
        (x, y)
    }
}

/// Squared length of the lattice vector `(u, v)`.
pub fn loeschian_norm(w: LatticeVector) -> i64 {
    w.norm()
}

/// Membership table of Loeschian numbers up to `limit`, inclusive.
#[derive(Debug, Clone)]
pub struct LoeschianTable {
    limit: i64,
    is_member: Vec<bool>,
    members: Vec<i64>,
}

impl LoeschianTable {
    pub fn limit(&self) -> i64 {
        self.limit
    }

    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && n <= self.limit && self.is_member[n as usize]
    }

    /// Sorted members, starting 0, 1, 3, 4, 7, 9, ...
    pub fn members(&self) -> &[i64] {
        &self.members
    }

    pub fn count(&self) -> usize {
        self.members.len()
    }
}

/// Enumerates all Loeschian numbers `u^2 + uv + v^2 <= limit` with
/// `u, v >= 0`. Bounding both coordinates by `ceil(sqrt(limit))` is
/// sufficient since the form dominates both squares.
pub fn loeschian_upto(limit: i64) -> LoeschianTable {
    assert!(limit >= 0, "limit must be nonnegative");
    let mut is_member = vec![false; limit as usize + 1];
    let root = (limit as f64).sqrt().ceil() as i64 + 1;
    for u in 0..=root {
        if u * u > limit {
            break;
        }
        for v in 0..=root {
            let n = u * u + u * v + v * v;
            if n > limit {
                break;
            }
            is_member[n as usize] = true;
        }
    }
    let members = is_member
        .iter()
        .enumerate()
        .filter_map(|(n, &m)| m.then_some(n as i64))
        .collect();
    LoeschianTable {
        limit,
        is_member,
        members,
    }
}

/// Number of Loeschian numbers in `[a, b]`, inclusive on both ends.
pub fn loeschian_count_in(a: i64, b: i64) -> usize {
    assert!(0 <= a && a <= b, "require 0 <= a <= b");
    let table = loeschian_upto(b);
    table.members().iter().filter(|&&n| n >= a).count()
}

/// One representative vector with the given Loeschian norm, if any.
pub fn representative_with_norm(n: i64) -> Option<LatticeVector> {
    if n < 0 {
        return None;
    }
    let root = (n as f64).sqrt().ceil() as i64 + 1;
    for u in 0..=root {
        if u * u > n {
            break;
        }
        for v in u..=root {
            let m = u * u + u * v + v * v;
            if m == n {
                return Some(LatticeVector { u, v });
            }
            if m > n {
                break;
            }
        }
    }
    None
}
