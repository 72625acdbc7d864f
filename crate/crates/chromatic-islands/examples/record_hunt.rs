//! The record-search walk: at fixed window floor a, shrink the ceiling b
//! through Loeschian values until the graph becomes colorable, then grow
//! a and repeat. Probes are cached, so rerunning resumes for free.

use chromatic_islands::colorsat::{exact_color, INTERNAL_CAP};
use chromatic_islands::graphs::{attach_polychromatic, build_egraph, EGraphSpec};
use chromatic_islands::hunt::{frontier_text, hunt, HuntPlan};
use chromatic_islands::store::ResultStore;
use std::time::Duration;

fn main() {
    let dir = tempfile::tempdir().unwrap();
    let mut store = ResultStore::open(dir.path().join("probes.jsonl")).unwrap();

    // tiny instances so the walk finishes instantly: 4 colors, m = 3
    let plan = HuntPlan {
        colors: 4,
        m: 3,
        seed_a: 3,
        seed_b: 12,
        max_probes: 6,
        tri: true,
        bi: false,
    };

    let solve = |probe: &chromatic_islands::hunt::ProbeSpec| {
        let base = build_egraph(&EGraphSpec {
            m: probe.m,
            a: probe.a,
            b: probe.b,
        })
        .unwrap();
        let g = attach_polychromatic(&base, probe.tri, None).unwrap();
        let outcome = exact_color(&g, probe.colors, Duration::from_secs(30), INTERNAL_CAP).unwrap();
        (outcome, 1)
    };

    let report = hunt(&plan, &mut store, solve).unwrap();
    println!(
        "{} probes, {} solver runs, frontier:",
        report.probes, report.solver_runs
    );
    print!("{}", frontier_text(&report.frontier));

    // second run over the same store: every probe is a cache hit
    let rerun = hunt(&plan, &mut store, solve).unwrap();
    println!(
        "rerun: {} probes, {} solver runs (all cached)",
        rerun.probes, rerun.solver_runs
    );
}
