//! Record search over e-graph windows: with a fixed, b is walked down
//! through Loeschian values until the instance becomes K-colorable, then
//! a (and with it b) is grown and the walk repeats. Every UNSAT probe
//! improves the upper-bound record d = sqrt(b/a) for chi = K.
//!
//! Solving is injected as a closure so the driver can be exercised with
//! a scripted solver; the CLI wires in the real SAT pipeline. Probe
//! outcomes go through the result store, so an interrupted hunt resumes
//! without repeating a single solve.

use crate::colorsat::{SolveOutcome, SolveStatus};
use crate::lattice::{loeschian_count_in, loeschian_upto};
use crate::store::ResultStore;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::io;

/// One probe: an e-graph window with the standard attachments.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeSpec {
    pub family: String,
    pub m: i64,
    pub a: i64,
    pub b: i64,
    pub colors: usize,
    pub tri: bool,
    pub bi: bool,
}

/// Search parameters. The budget counts solver invocations, cached or
/// not, so a resumed hunt walks the same prefix.
#[derive(Debug, Clone)]
pub struct HuntPlan {
    pub colors: usize,
    pub m: i64,
    pub seed_a: i64,
    pub seed_b: i64,
    pub max_probes: usize,
    pub tri: bool,
    pub bi: bool,
}

/// One record row: window, its distance ratio, the count of norms
/// representable in the window, attachment multiplier, clique size, and
/// solve time.
#[derive(Debug, Clone, Serialize)]
pub struct FrontierRow {
    pub k: usize,
    pub a: i64,
    pub b: i64,
    pub d: f64,
    pub l: usize,
    pub m: i64,
    pub q: usize,
    pub time_s: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct HuntReport {
    pub frontier: Vec<FrontierRow>,
    pub probes: usize,
    pub solver_runs: usize,
    /// True when the budget ran out mid-walk.
    pub exhausted: bool,
}

/// Largest Loeschian value strictly below `b` that still leaves d > 1,
/// i.e. stays strictly above `a`. The next shrink step of the walk.
pub fn next_shrink_b(a: i64, b: i64) -> Option<i64> {
    loeschian_upto(b - 1)
        .members()
        .iter()
        .rev()
        .find(|&&n| n > a)
        .copied()
}

/// Smallest Loeschian value strictly above `n`.
pub fn next_loeschian_above(n: i64) -> i64 {
    let mut limit = n + 1;
    loop {
        if let Some(&v) = loeschian_upto(limit).members().iter().find(|&&v| v > n) {
            return v;
        }
        limit *= 2;
    }
}

/// Runs the fix-a/shrink-b then grow-a cycle. `solve` maps a probe to an
/// outcome (with clique size q); results are cached in `store` keyed by
/// the probe spec.
pub fn hunt<F>(plan: &HuntPlan, store: &mut ResultStore, mut solve: F) -> io::Result<HuntReport>
where
    F: FnMut(&ProbeSpec) -> (SolveOutcome, usize),
{
    let mut a = plan.seed_a;
    let mut b = plan.seed_b;
    let mut frontier: Vec<FrontierRow> = Vec::new();
    let mut probes = 0;
    let mut solver_runs = 0;
    let mut exhausted = false;
    loop {
        if probes >= plan.max_probes {
            exhausted = true;
            break;
        }
        probes += 1;
        let spec = ProbeSpec {
            family: "egraph".into(),
            m: plan.m,
            a,
            b,
            colors: plan.colors,
            tri: plan.tri,
            bi: plan.bi,
        };
        let ((outcome, q), ran) = store.run_cached(&spec, false, || solve(&spec))?;
        if ran {
            solver_runs += 1;
        }
        match outcome.status {
            SolveStatus::Unsat => {
                frontier.push(FrontierRow {
                    k: plan.colors,
                    a,
                    b,
                    d: (b as f64 / a as f64).sqrt(),
                    l: loeschian_count_in(a, b),
                    m: plan.m,
                    q,
                    time_s: outcome.wall_time,
                });
                // shrink b; if the window closes, this a is finished
                match next_shrink_b(a, b) {
                    Some(smaller) => b = smaller,
                    None => break,
                }
            }
            SolveStatus::Sat => {
                // the last UNSAT at this a stands; grow a and restart the
                // walk just above the ratio that went SAT
                let ratio = b as f64 / a as f64;
                let new_a = next_loeschian_above(a);
                let floor = (new_a as f64 * ratio).ceil() as i64;
                a = new_a;
                b = next_loeschian_above(floor.max(new_a));
            }
            SolveStatus::Unknown => {
                // timeout: treat like SAT minus the record, i.e. skip to
                // the next a rather than looping on a hopeless probe
                let new_a = next_loeschian_above(a);
                let ratio = b as f64 / a as f64;
                let floor = (new_a as f64 * ratio).ceil() as i64;
                a = new_a;
                b = next_loeschian_above(floor.max(new_a));
            }
        }
    }
    Ok(HuntReport {
        frontier,
        probes,
        solver_runs,
        exhausted,
    })
}

/// Frontier in the record-table column layout, aligned.
pub fn frontier_text(rows: &[FrontierRow]) -> String {
    let mut out = String::from("  k     a     b        d    l   m  q     time, s\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{:>3} {:>5} {:>5} {:>8.5} {:>4} {:>3} {:>2} {:>11.1}",
            r.k, r.a, r.b, r.d, r.l, r.m, r.q, r.time_s
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn outcome(status: SolveStatus) -> (SolveOutcome, usize) {
        (
            SolveOutcome {
                status,
                model: None,
                wall_time: 0.5,
            },
            3,
        )
    }

    #[test]
    fn shrink_step_from_seed() {
        // from (13, 21): next Loeschian below 21 staying above 13 is 19
        assert_eq!(next_shrink_b(13, 21), Some(19));
        assert_eq!(next_shrink_b(13, 19), Some(16));
        // nothing Loeschian strictly between 3 and 4
        assert_eq!(next_shrink_b(3, 4), None);
    }

    #[test]
    fn walk_shrinks_until_sat_then_grows_a() {
        let dir = tempfile::tempdir().unwrap();
        let mut store = ResultStore::open(dir.path().join("s.jsonl")).unwrap();
        let plan = HuntPlan {
            colors: 6,
            m: 5,
            seed_a: 13,
            seed_b: 21,
            max_probes: 4,
            tri: true,
            bi: false,
        };
        let mut seen = Vec::new();
        let report = hunt(&plan, &mut store, |spec| {
            seen.push((spec.a, spec.b));
            // UNSAT at b = 21 and 19, SAT at 16
            outcome(if spec.b > 16 {
                SolveStatus::Unsat
            } else {
                SolveStatus::Sat
            })
        })
        .unwrap();
        assert_eq!(&seen[..3], &[(13, 21), (13, 19), (13, 16)]);
        // probes 1, 2, and 4 are UNSAT records; probe 3 goes SAT
        assert_eq!(report.frontier.len(), 3);
        assert_eq!(report.frontier[1].b, 19);
        assert_eq!(report.frontier[2].a, 16);
        assert!((report.frontier[0].d - (21f64 / 13.0).sqrt()).abs() < 1e-12);
        assert_eq!(report.frontier[0].l, loeschian_count_in(13, 21));
        // after SAT the walk moved to the next Loeschian a > 13
        assert_eq!(seen[3].0, 16);
        assert!(seen[3].1 > seen[3].0);
    }

    #[test]
    fn resume_repeats_no_solves() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.jsonl");
        let plan = HuntPlan {
            colors: 6,
            m: 5,
            seed_a: 13,
            seed_b: 21,
            max_probes: 3,
            tri: true,
            bi: false,
        };
        let script = |spec: &ProbeSpec| {
            outcome(if spec.b > 16 {
                SolveStatus::Unsat
            } else {
                SolveStatus::Sat
            })
        };
        let mut store = ResultStore::open(&path).unwrap();
        let first = hunt(&plan, &mut store, script).unwrap();
        assert_eq!(first.solver_runs, 3);
        drop(store);
        let mut store = ResultStore::open(&path).unwrap();
        let second = hunt(&plan, &mut store, script).unwrap();
        assert_eq!(second.solver_runs, 0);
        assert_eq!(second.frontier.len(), first.frontier.len());
    }

    #[test]
    fn frontier_rendering() {
        let rows = vec![FrontierRow {
            k: 6,
            a: 13,
            b: 21,
            d: (21f64 / 13.0).sqrt(),
            l: 4,
            m: 5,
            q: 3,
            time_s: 0.1,
        }];
        let text = frontier_text(&rows);
        assert!(text.contains("13"));
        assert!(text.contains("1.27098"));
    }
}
