//! Bundled reference datasets: per-chi bound summaries, sublattice
//! distances for every index up to 200, annulus and circle-graph records,
//! clique packing widths, and the e-graph record table.
//!
//! The files are embedded at compile time and parsed lazily; every loader
//! panics on a malformed bundle (the bundle ships with the crate, so a
//! parse failure is a build defect, not a runtime condition).

use serde::Deserialize;
use std::sync::OnceLock;

/// One per-chi row of the bound summary: lower/upper distance bounds, the
/// island interval they induce, the clique-packing upper bound, and the
/// r->0 extrapolation (`pred`, `slope`).
#[derive(Debug, Clone, Deserialize)]
pub struct ChiBoundsRow {
    pub chi: u32,
    pub status: String,
    pub lower: f64,
    pub min: f64,
    pub max: f64,
    pub upper: Option<f64>,
    pub clique: f64,
    pub pred: f64,
    pub slope: f64,
}

/// Best sublattice-coloring distance per index `k` (k = 1..=200).
#[derive(Debug, Clone, Copy)]
pub struct SublatticeDistanceRow {
    pub k: u32,
    pub d: f64,
}

/// Annulus colorings and circle-graph records per color count `k`.
/// Optional fields are blank in the bundle where no record is known.
#[derive(Debug, Clone)]
pub struct AnnulusRow {
    pub k: u32,
    /// Best distance with equal sectors and cyclic colors.
    pub radial: f64,
    /// Best distance with optimized sector angles and free colors.
    pub arbitrary: f64,
    /// True when the `arbitrary` value was not verified exhaustively.
    pub arbitrary_unchecked: bool,
    /// Previously published circle-graph record (d, p, c), if any.
    pub prev: Option<(f64, u32, u32)>,
    /// Circle-graph record from this line of work: (d, p, c, q).
    pub record: Option<(f64, u32, u32, u32)>,
    pub time_s: Option<f64>,
    /// r->0 extrapolation of the record family, if fitted.
    pub pred: Option<f64>,
    pub slope: Option<f64>,
}

/// Best known width of a q-point set with pairwise distances >= 1.
#[derive(Debug, Clone, Copy)]
pub struct CliquePackingRow {
    pub q: u32,
    pub d: f64,
}

/// One e-graph record: a K-chromatic witness at sublattice parameters
/// (a, b) with multiplier m, its distance ratio d, the count `l` of
/// representable norms below b, clique size q, and solve time.
#[derive(Debug, Clone, Copy)]
pub struct EGraphRecordRow {
    pub k: u32,
    pub a: u64,
    pub b: u64,
    pub d: f64,
    pub l: u32,
    pub m: u32,
    pub q: u32,
    pub time_s: f64,
    /// True for runs the original hardware needed days for.
    pub hard: bool,
}

fn split_csv(raw: &str) -> impl Iterator<Item = Vec<&str>> {
    raw.lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split(',').map(str::trim).collect())
}

fn opt_f64(s: &str) -> Option<f64> {
    if s.is_empty() {
        None
    } else {
        Some(s.parse().expect("bundled data: bad real"))
    }
}

fn opt_u32(s: &str) -> Option<u32> {
    if s.is_empty() {
        None
    } else {
        Some(s.parse().expect("bundled data: bad integer"))
    }
}

/// Per-chi bound summary rows (chi = 7..=16).
pub fn chi_bounds() -> &'static [ChiBoundsRow] {
    static CELL: OnceLock<Vec<ChiBoundsRow>> = OnceLock::new();
    CELL.get_or_init(|| {
        include_str!("../data/table1.jsonl")
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| serde_json::from_str(l).expect("bundled data: bad bounds row"))
            .collect()
    })
}

/// Sublattice distance d(k) for k = 1..=200.
pub fn sublattice_distances() -> &'static [SublatticeDistanceRow] {
    static CELL: OnceLock<Vec<SublatticeDistanceRow>> = OnceLock::new();
    CELL.get_or_init(|| {
        split_csv(include_str!("../data/table2.csv"))
            .map(|f| SublatticeDistanceRow {
                k: f[0].parse().expect("bundled data: bad k"),
                d: f[1].parse().expect("bundled data: bad d"),
            })
            .collect()
    })
}

/// Annulus and circle-graph rows (k = 3..=12).
pub fn annulus_records() -> &'static [AnnulusRow] {
    static CELL: OnceLock<Vec<AnnulusRow>> = OnceLock::new();
    CELL.get_or_init(|| {
        split_csv(include_str!("../data/table4.csv"))
            .map(|f| AnnulusRow {
                k: f[0].parse().expect("bundled data: bad k"),
                radial: f[1].parse().expect("bundled data: bad radial"),
                arbitrary: f[2].parse().expect("bundled data: bad arbitrary"),
                arbitrary_unchecked: f[3] == "1",
                prev: opt_f64(f[4]).map(|d| (d, f[5].parse().unwrap(), f[6].parse().unwrap())),
                record: opt_f64(f[7]).map(|d| {
                    (
                        d,
                        f[8].parse().unwrap(),
                        f[9].parse().unwrap(),
                        f[10].parse().unwrap(),
                    )
                }),
                time_s: opt_f64(f[11]),
                pred: opt_f64(f[12]),
                slope: opt_f64(f[13]),
            })
            .collect()
    })
}

/// Clique packing widths for q = 1..=40.
pub fn clique_packings() -> &'static [CliquePackingRow] {
    static CELL: OnceLock<Vec<CliquePackingRow>> = OnceLock::new();
    CELL.get_or_init(|| {
        split_csv(include_str!("../data/table5.csv"))
            .map(|f| CliquePackingRow {
                q: f[0].parse().expect("bundled data: bad q"),
                d: f[1].parse().expect("bundled data: bad d"),
            })
            .collect()
    })
}

/// E-graph record rows grouped by color count k (k = 6..=15).
pub fn egraph_records() -> &'static [EGraphRecordRow] {
    static CELL: OnceLock<Vec<EGraphRecordRow>> = OnceLock::new();
    CELL.get_or_init(|| {
        split_csv(include_str!("../data/table6.csv"))
            .map(|f| EGraphRecordRow {
                k: f[0].parse().expect("bundled data: bad k"),
                a: f[1].parse().expect("bundled data: bad a"),
                b: f[2].parse().expect("bundled data: bad b"),
                d: f[3].parse().expect("bundled data: bad d"),
                l: f[4].parse().expect("bundled data: bad l"),
                m: f[5].parse().expect("bundled data: bad m"),
                q: opt_u32(f[6]).unwrap_or(0),
                time_s: f[7].parse().expect("bundled data: bad time"),
                hard: f[8] == "1",
            })
            .collect()
    })
}
