//! End-to-end acceptance checks against the bundled reference data. Each
//! test covers one numbered criterion and prints a single pass line (run
//! with --nocapture to see them); a failed assertion is the fail line.

use chromatic_islands::bounds::{self, BoundsLedger, IslandStatus};
use chromatic_islands::colorsat::{exact_color, solve_external, SolveStatus, INTERNAL_CAP};
use chromatic_islands::data;
use chromatic_islands::graphs::{
    attach_polychromatic, build_egraph, build_wgraph, max_clique, precolor_clique, BiPlacement,
    EGraphSpec, WGraphSpec,
};
use chromatic_islands::lattice::{loeschian_count_in, loeschian_upto};
use chromatic_islands::packing;
use chromatic_islands::tilings::{
    general_sublattice_distance, radial_optimum, regular_sublattice_distance,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{FRAC_PI_2, PI};
use std::time::Duration;

fn solver_cmd() -> Vec<String> {
    vec![
        env!("CARGO_BIN_EXE_chi").to_string(),
        "sat-solve".to_string(),
    ]
}

#[test]
fn criterion_01_loeschian_partition() {
    // frozen oracle: all n = u^2 + uv + v^2 <= 200, generated independently
    let expected: Vec<i64> = vec![
        0, 1, 3, 4, 7, 9, 12, 13, 16, 19, 21, 25, 27, 28, 31, 36, 37, 39, 43, 48, 49, 52, 57, 61,
        63, 64, 67, 73, 75, 76, 79, 81, 84, 91, 93, 97, 100, 103, 108, 109, 111, 112, 117, 121,
        124, 127, 129, 133, 139, 144, 147, 148, 151, 156, 157, 163, 169, 171, 172, 175, 181, 183,
        189, 192, 193, 196, 199,
    ];
    let table = loeschian_upto(200);
    assert_eq!(table.members(), expected.as_slice());
    for k in 1..=200 {
        assert_eq!(table.contains(k), expected.contains(&k), "k={k}");
    }
    println!("criterion 1 (Loeschian partition up to 200): pass");
}

#[test]
fn criterion_02_loeschian_interval_counts() {
    assert_eq!(loeschian_count_in(13, 21), 4);
    assert_eq!(loeschian_count_in(27, 76), 18);
    assert_eq!(loeschian_count_in(91, 624), 148);
    // and every bundled record row agrees with its l column
    for row in data::egraph_records() {
        assert_eq!(
            loeschian_count_in(row.a as i64, row.b as i64),
            row.l as usize,
            "window ({}, {})",
            row.a,
            row.b
        );
    }
    println!("criterion 2 (Loeschian interval counts): pass");
}

#[test]
fn criterion_03_regular_sublattice_distances() {
    let table = data::sublattice_distances();
    for k in [1i64, 3, 4, 7, 9, 12, 13, 16, 25, 48, 49] {
        let d = regular_sublattice_distance(k).unwrap();
        let want = table[(k - 1) as usize].d;
        assert!((d - want).abs() < 1e-4, "k={k}: got {d:.6}, want {want:.6}");
    }
    println!("criterion 3 (hexagonal sublattice distances): pass");
}

#[test]
fn criterion_04_general_sublattice_distances() {
    let table = data::sublattice_distances();
    for k in [5i64, 6, 8, 10] {
        let want = table[(k - 1) as usize].d;
        let best = (0..3)
            .map(|seed| general_sublattice_distance(k, 64, seed).0)
            .fold(f64::MIN, f64::max);
        assert!(
            (best - want).abs() < 2e-2,
            "k={k}: got {best:.6}, want {want:.6}"
        );
    }
    println!("criterion 4 (general sublattice distances, stochastic): pass");
}

#[test]
fn criterion_05_radial_annulus() {
    for k in [3usize, 4, 6, 9] {
        let want = data::annulus_records()
            .iter()
            .find(|r| r.k == k as u32)
            .unwrap()
            .radial;
        let (d, _) = radial_optimum(k, 4 * k);
        assert!((d - want).abs() < 1e-6, "k={k}: got {d:.7}, want {want:.7}");
    }
    println!("criterion 5 (radial annulus colorings): pass");
}

#[test]
fn criterion_06_clique_packings() {
    let table = data::clique_packings();
    for q in 2usize..=12 {
        let want = table[q - 1].d;
        let result = packing::pack(q, 256, 1);
        let got = result.width / result.min_dist;
        assert!(
            (got - want).abs() < 1e-3,
            "q={q}: got {got:.6}, want {want:.6}"
        );
    }
    println!("criterion 6 (clique packing widths, q = 2..12): pass");
}

#[test]
fn criterion_07_internal_colorer_annulus_witness() {
    // 18 points on the unit circle rotated so one sits at (0, 1), where
    // the bi-chromatic pair is placed; minimal human-checkable witness
    let mut spec = WGraphSpec::new(18, 1, 1.2856).unwrap();
    spec.radii = vec![1.0];
    spec.offsets = vec![FRAC_PI_2];
    let base = build_wgraph(&spec).unwrap();
    let g = attach_polychromatic(&base, true, Some(BiPlacement::CartesianS(1.0))).unwrap();
    let budget = Duration::from_secs(60);
    let unsat = exact_color(&g, 6, budget, INTERNAL_CAP).unwrap();
    assert_eq!(unsat.status, SolveStatus::Unsat);
    let sat = exact_color(&g, 7, budget, INTERNAL_CAP).unwrap();
    assert_eq!(sat.status, SolveStatus::Sat);
    println!("criterion 7 (18-vertex annulus witness, internal): pass");
}

#[test]
fn criterion_08_sat_pipeline_end_to_end() {
    let base = build_egraph(&EGraphSpec { m: 5, a: 13, b: 21 }).unwrap();
    let mut g = attach_polychromatic(&base, true, Some(BiPlacement::LatticeS2(21))).unwrap();
    let clique = max_clique(&g, Duration::from_secs(5));
    precolor_clique(&mut g, &clique.vertices);
    let timeout = Duration::from_secs(300);
    let unsat = solve_external(&g, 6, &solver_cmd(), timeout).unwrap();
    assert_eq!(unsat.status, SolveStatus::Unsat);
    let sat = solve_external(&g, 7, &solver_cmd(), timeout).unwrap();
    assert_eq!(sat.status, SolveStatus::Sat);
    // solve_external re-verifies the decoded model; presence is enough
    assert!(sat.model.is_some());
    println!("criterion 8 (SAT pipeline via external solver): pass");
}

#[test]
fn criterion_09_clique_finder() {
    let budget = Duration::from_secs(300);
    let g = build_egraph(&EGraphSpec { m: 5, a: 13, b: 21 }).unwrap();
    assert_eq!(max_clique(&g, budget).vertices.len(), 3);
    let g = build_egraph(&EGraphSpec {
        m: 15,
        a: 25,
        b: 97,
    })
    .unwrap();
    assert_eq!(max_clique(&g, budget).vertices.len(), 6);
    println!("criterion 9 (clique finder): pass");
}

#[test]
fn criterion_10_ledger_round_trip() {
    let mut ledger = BoundsLedger::new();
    ledger.import_published();
    let reloaded = BoundsLedger::from_jsonl(&ledger.to_jsonl()).unwrap();
    let islands = bounds::compute_islands(&reloaded.records());
    for row in data::chi_bounds() {
        let island = islands.iter().find(|i| i.chi == row.chi).unwrap();
        assert!(
            (island.d_min.unwrap() - row.min).abs() < 1e-9,
            "chi={}",
            row.chi
        );
        assert!(
            (island.d_max.unwrap() - row.max).abs() < 1e-9,
            "chi={}",
            row.chi
        );
    }
    let status = |chi: u32| islands.iter().find(|i| i.chi == chi).unwrap().status;
    for chi in [7, 8, 9, 12, 13] {
        assert_eq!(status(chi), IslandStatus::Island, "chi={chi}");
    }
    for chi in [10, 11] {
        assert_eq!(status(chi), IslandStatus::Empty, "chi={chi}");
    }
    println!("criterion 10 (ledger round trip and island statuses): pass");
}

#[test]
fn criterion_11_extrapolation() {
    // the published prediction for where the 8-color regime starts is the
    // r -> 0 limit of the 7-color record family (d_min(8) = d_ub(7))
    let points: Vec<(f64, f64)> = data::egraph_records()
        .iter()
        .filter(|r| r.k == 7)
        .map(|r| ((1.0 / r.a as f64).sqrt(), (r.b as f64 / r.a as f64).sqrt()))
        .collect();
    let fit = bounds::extrapolate(&points).unwrap();
    let (pred, slope) = {
        let row = data::chi_bounds().iter().find(|r| r.chi == 8).unwrap();
        (row.pred, row.slope)
    };
    assert!(
        (fit.intercept - pred).abs() < 0.05,
        "intercept {:.4} vs {pred}",
        fit.intercept
    );
    assert!(
        (fit.slope - slope).abs() < 0.4,
        "slope {:.3} vs {slope}",
        fit.slope
    );
    println!("criterion 11 (linear extrapolation of record family): pass");
}

#[test]
fn criterion_12_asymptotics() {
    for d in [1.0, 1.7, 3.0, 10.0] {
        let (lb, ub) = bounds::asymptotic_chi_bounds(d);
        assert_eq!(lb, (4.0 / 3.0) * d * d);
        assert_eq!(ub, (PI / 3f64.sqrt()) * d * d);
        assert!(((ub / lb).sqrt() - 7.0 / 6.0).abs() / (7.0 / 6.0) < 0.01);
    }
    println!("criterion 12 (asymptotic area bounds): pass");
}

#[test]
fn criterion_13_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let loeschian = loeschian_upto(16);
    let solver = solver_cmd();
    let timeout = Duration::from_secs(30);
    let mut checked = 0;
    while checked < 200 {
        let g = if rng.gen_bool(0.5) {
            let members = loeschian.members();
            let a = members[rng.gen_range(0..members.len())];
            let b = members[rng.gen_range(0..members.len())];
            let (a, b) = (a.min(b), a.max(b));
            let base = match build_egraph(&EGraphSpec {
                m: rng.gen_range(1..=2),
                a,
                b,
            }) {
                Ok(g) => g,
                Err(_) => continue,
            };
            let tri = rng.gen_bool(0.5);
            let bi = rng.gen_bool(0.3).then_some(BiPlacement::LatticeS2(b));
            match attach_polychromatic(&base, tri, bi) {
                Ok(g) => g,
                Err(_) => continue,
            }
        } else {
            let p = rng.gen_range(5..=12);
            let c = rng.gen_range(1..=2);
            let d = 1.0 + rng.gen::<f64>();
            let base = match WGraphSpec::new(p, c, d).and_then(|s| build_wgraph(&s)) {
                Ok(g) => g,
                Err(_) => continue,
            };
            let tri = rng.gen_bool(0.5);
            match attach_polychromatic(&base, tri, None) {
                Ok(g) => g,
                Err(_) => continue,
            }
        };
        if g.expanded_count() > 40 {
            continue;
        }
        let k = rng.gen_range(2..=6);
        // skip color counts below what the pre-colored copies require
        let (internal, external) = match (
            exact_color(&g, k, timeout, INTERNAL_CAP),
            solve_external(&g, k, &solver, timeout),
        ) {
            (Ok(i), Ok(e)) => (i, e),
            _ => continue,
        };
        assert_eq!(
            internal.status,
            external.status,
            "disagreement on {} vertices at k={k}",
            g.expanded_count()
        );
        assert_ne!(internal.status, SolveStatus::Unknown);
        checked += 1;
    }
    println!("criterion 13 (internal vs external oracle, 200 instances): pass");
}
