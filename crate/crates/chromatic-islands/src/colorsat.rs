//! k-colorability decisions: direct CNF encoding for external SAT
//! solvers, an internal exact colorer for desk-scale instances, and
//! coloring verification.
//!
//! The encoding is the direct one: variable (copy i, color j) gets index
//! `i*K + j + 1`; each copy carries an at-least-one clause, each edge K
//! binary conflict clauses, each pre-colored copy a unit clause.
//! At-most-one clauses are omitted: the relaxation preserves both SAT and
//! UNSAT answers for proper coloring.

use crate::graphs::{ColoringInstance, ExpandedGraph};
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("color count {k} below pre-colored clique size {clique}")]
    TooFewColors { k: usize, clique: usize },
    #[error("instance with {0} expanded vertices exceeds the internal colorer cap {1}")]
    TooLargeForInternal(usize, usize),
    #[error("failed to run solver command {0:?}: {1}")]
    Spawn(String, std::io::Error),
    #[error("malformed solver output (no status line); captured: {0:?}")]
    MalformedOutput(String),
    #[error("solver reported SAT but the decoded model is improper: {0:?}")]
    BadModel(Vec<Violation>),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed DIMACS input: {0}")]
    BadDimacs(String),
}

/// A propositional formula in CNF with the vertex/color variable map.
#[derive(Debug, Clone)]
pub struct CnfInstance {
    pub variable_count: usize,
    pub clauses: Vec<Vec<i32>>,
    pub colors: usize,
    pub expanded_vertices: usize,
    /// Optional comment recorded in the DIMACS header.
    pub comment: Option<String>,
}

impl CnfInstance {
    /// Variable index of (copy, color), 1-based.
    pub fn var(&self, copy: usize, color: usize) -> i32 {
        (copy * self.colors + color + 1) as i32
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        if let Some(c) = &self.comment {
            out.push_str(&format!("c {c}\n"));
        }
        out.push_str(&format!(
            "p cnf {} {}\n",
            self.variable_count,
            self.clauses.len()
        ));
        for clause in &self.clauses {
            for lit in clause {
                out.push_str(&format!("{lit} "));
            }
            out.push_str("0\n");
        }
        out
    }

    pub fn from_dimacs(text: &str) -> Result<Self, SolveError> {
        let mut variable_count = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("p cnf") {
                let mut it = rest.split_whitespace();
                let v = it
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| SolveError::BadDimacs(line.into()))?;
                variable_count = Some(v);
                continue;
            }
            for tok in line.split_whitespace() {
                let lit: i32 = tok
                    .parse()
                    .map_err(|_| SolveError::BadDimacs(line.into()))?;
                if lit == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else {
                    current.push(lit);
                }
            }
        }
        let variable_count =
            variable_count.ok_or_else(|| SolveError::BadDimacs("missing p cnf header".into()))?;
        Ok(Self {
            variable_count,
            clauses,
            colors: 0,
            expanded_vertices: 0,
            comment: None,
        })
    }

    /// Decodes a satisfying assignment (positive literal set) into one
    /// color per expanded vertex.
    pub fn decode_model(&self, true_lits: &[i32]) -> Option<Vec<usize>> {
        let mut truth = vec![false; self.variable_count + 1];
        for &lit in true_lits {
            if lit > 0 && (lit as usize) <= self.variable_count {
                truth[lit as usize] = true;
            }
        }
        let mut colors = Vec::with_capacity(self.expanded_vertices);
        for i in 0..self.expanded_vertices {
            let c = (0..self.colors).find(|&c| truth[self.var(i, c) as usize])?;
            colors.push(c);
        }
        Some(colors)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolveStatus {
    Sat,
    Unsat,
    Unknown,
}

/// Outcome of a colorability decision.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    /// Color per expanded vertex, present iff SAT; always verified.
    pub model: Option<Vec<usize>>,
    pub wall_time: f64,
}

/// Encodes the K-coloring decision for the expanded graph.
pub fn encode(g: &ColoringInstance, k: usize) -> Result<CnfInstance, SolveError> {
    let expanded = g.expand();
    encode_expanded(&expanded, k)
}

pub fn encode_expanded(expanded: &ExpandedGraph, k: usize) -> Result<CnfInstance, SolveError> {
    let clique = expanded.precolored.len();
    if k < clique {
        return Err(SolveError::TooFewColors { k, clique });
    }
    let n = expanded.n();
    let mut cnf = CnfInstance {
        variable_count: n * k,
        clauses: Vec::with_capacity(n + k * expanded.edge_count() + clique),
        colors: k,
        expanded_vertices: n,
        comment: None,
    };
    for i in 0..n {
        cnf.clauses.push((0..k).map(|c| cnf.var(i, c)).collect());
    }
    let mut edges = expanded.edges();
    edges.sort_unstable();
    for (i, j) in edges {
        for c in 0..k {
            cnf.clauses.push(vec![-cnf.var(i, c), -cnf.var(j, c)]);
        }
    }
    for (color, &copy) in expanded.precolored.iter().enumerate() {
        cnf.clauses.push(vec![cnf.var(copy, color)]);
    }
    Ok(cnf)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    MonochromaticEdge {
        i: usize,
        j: usize,
        color: usize,
    },
    PrecoloringMismatch {
        copy: usize,
        expected: usize,
        found: usize,
    },
}

/// Lists every monochromatic edge and pre-coloring mismatch.
pub fn verify_coloring(g: &ColoringInstance, colors: &[usize]) -> Vec<Violation> {
    let expanded = g.expand();
    verify_coloring_expanded(&expanded, colors)
}

pub fn verify_coloring_expanded(expanded: &ExpandedGraph, colors: &[usize]) -> Vec<Violation> {
    assert_eq!(
        colors.len(),
        expanded.n(),
        "assignment must cover all expanded vertices"
    );
    let mut violations = Vec::new();
    for (i, j) in expanded.edges() {
        if colors[i] == colors[j] {
            violations.push(Violation::MonochromaticEdge {
                i,
                j,
                color: colors[i],
            });
        }
    }
    for (expected, &copy) in expanded.precolored.iter().enumerate() {
        if colors[copy] != expected {
            violations.push(Violation::PrecoloringMismatch {
                copy,
                expected,
                found: colors[copy],
            });
        }
    }
    violations
}

/// Default expanded-vertex cap for the internal exact colorer.
pub const INTERNAL_CAP: usize = 80;

/// Exact K-colorability by DSATUR-ordered branch and bound. Returns
/// UNKNOWN if the time budget expires before the search completes.
pub fn exact_color(
    g: &ColoringInstance,
    k: usize,
    budget: Duration,
    cap: usize,
) -> Result<SolveOutcome, SolveError> {
    let expanded = g.expand();
    exact_color_expanded(&expanded, k, budget, cap)
}

pub fn exact_color_expanded(
    expanded: &ExpandedGraph,
    k: usize,
    budget: Duration,
    cap: usize,
) -> Result<SolveOutcome, SolveError> {
    let n = expanded.n();
    if n > cap {
        return Err(SolveError::TooLargeForInternal(n, cap));
    }
    if k < expanded.precolored.len() {
        return Err(SolveError::TooFewColors {
            k,
            clique: expanded.precolored.len(),
        });
    }
    let start = Instant::now();
    let deadline = start + budget;

    const UNCOLORED: usize = usize::MAX;
    let mut colors = vec![UNCOLORED; n];
    // forbidden[v][c] counts neighbors of v colored c
    let mut forbidden = vec![vec![0u32; k]; n];
    let assign = |v: usize, c: usize, colors: &mut Vec<usize>, forbidden: &mut Vec<Vec<u32>>| {
        colors[v] = c;
        for &u in &expanded.adjacency[v] {
            forbidden[u][c] += 1;
        }
    };
    let unassign = |v: usize, colors: &mut Vec<usize>, forbidden: &mut Vec<Vec<u32>>| {
        let c = colors[v];
        colors[v] = UNCOLORED;
        for &u in &expanded.adjacency[v] {
            forbidden[u][c] -= 1;
        }
    };

    for (c, &copy) in expanded.precolored.iter().enumerate() {
        if forbidden[copy][c] > 0 || colors[copy] != UNCOLORED {
            // pre-colored set is not a proper clique assignment
            return Ok(SolveOutcome {
                status: SolveStatus::Unsat,
                model: None,
                wall_time: start.elapsed().as_secs_f64(),
            });
        }
        assign(copy, c, &mut colors, &mut forbidden);
    }

    // max color index in use so far, for symmetry breaking on fresh colors
    let used = expanded.precolored.len();

    fn dsatur_pick(
        colors: &[usize],
        forbidden: &[Vec<u32>],
        adjacency: &[Vec<usize>],
    ) -> Option<usize> {
        let mut best: Option<(usize, usize, usize)> = None; // (sat, deg, v)
        for (v, &c) in colors.iter().enumerate() {
            if c != usize::MAX {
                continue;
            }
            let sat = forbidden[v].iter().filter(|&&x| x > 0).count();
            let deg = adjacency[v].len();
            let key = (sat, deg, v);
            match best {
                Some((bs, bd, bv)) if (bs, bd) >= (sat, deg) => {
                    best = Some((bs, bd, bv));
                }
                _ => best = Some(key),
            }
        }
        best.map(|(_, _, v)| v)
    }

    struct Ctx<'a> {
        expanded: &'a ExpandedGraph,
        k: usize,
        deadline: Instant,
        timed_out: bool,
    }

    fn search(
        ctx: &mut Ctx,
        colors: &mut Vec<usize>,
        forbidden: &mut Vec<Vec<u32>>,
        used: usize,
    ) -> bool {
        if Instant::now() > ctx.deadline {
            ctx.timed_out = true;
            return false;
        }
        let Some(v) = dsatur_pick(colors, forbidden, &ctx.expanded.adjacency) else {
            return true;
        };
        // trying one fresh color is enough; higher fresh colors are symmetric
        let limit = ctx.k.min(used + 1);
        for c in 0..limit {
            if forbidden[v][c] > 0 {
                continue;
            }
            colors[v] = c;
            for &u in &ctx.expanded.adjacency[v] {
                forbidden[u][c] += 1;
            }
            let next_used = used.max(c + 1);
            if search(ctx, colors, forbidden, next_used) {
                return true;
            }
            colors[v] = usize::MAX;
            for &u in &ctx.expanded.adjacency[v] {
                forbidden[u][c] -= 1;
            }
            if ctx.timed_out {
                return false;
            }
        }
        false
    }

    let mut ctx = Ctx {
        expanded,
        k,
        deadline,
        timed_out: false,
    };
    let sat = search(&mut ctx, &mut colors, &mut forbidden, used);
    let wall_time = start.elapsed().as_secs_f64();
    if ctx.timed_out {
        return Ok(SolveOutcome {
            status: SolveStatus::Unknown,
            model: None,
            wall_time,
        });
    }
    if sat {
        let violations = verify_coloring_expanded(expanded, &colors);
        if !violations.is_empty() {
            return Err(SolveError::BadModel(violations));
        }
        let _ = unassign; // kept for symmetry with assign
        Ok(SolveOutcome {
            status: SolveStatus::Sat,
            model: Some(colors),
            wall_time,
        })
    } else {
        Ok(SolveOutcome {
            status: SolveStatus::Unsat,
            model: None,
            wall_time,
        })
    }
}

/// Solves the CNF with the bundled CDCL backend (in process).
pub fn solve_cnf(cnf: &CnfInstance) -> SolveOutcome {
    use splr::SolveIF;
    let start = Instant::now();
    let config = splr::Config::default();
    match splr::Solver::try_from((config, cnf.clauses.as_slice())) {
        Ok(mut solver) => match solver.solve() {
            Ok(splr::Certificate::SAT(model)) => SolveOutcome {
                status: SolveStatus::Sat,
                model: cnf.decode_model(&model),
                wall_time: start.elapsed().as_secs_f64(),
            },
            Ok(splr::Certificate::UNSAT) => SolveOutcome {
                status: SolveStatus::Unsat,
                model: None,
                wall_time: start.elapsed().as_secs_f64(),
            },
            Err(_) => SolveOutcome {
                status: SolveStatus::Unknown,
                model: None,
                wall_time: start.elapsed().as_secs_f64(),
            },
        },
        // splr settles trivial formulas during loading
        Err(Ok(splr::Certificate::UNSAT)) => SolveOutcome {
            status: SolveStatus::Unsat,
            model: None,
            wall_time: start.elapsed().as_secs_f64(),
        },
        Err(Ok(splr::Certificate::SAT(model))) => SolveOutcome {
            status: SolveStatus::Sat,
            model: cnf.decode_model(&model),
            wall_time: start.elapsed().as_secs_f64(),
        },
        Err(Err(_)) => SolveOutcome {
            status: SolveStatus::Unknown,
            model: None,
            wall_time: start.elapsed().as_secs_f64(),
        },
    }
}

/// Drives an external DIMACS solver process.
///
/// Contract: CNF file path appended as the last argument; status on an
/// `s ` line, model on `v ` lines; exit codes 10/20 accepted as SAT/UNSAT
/// when no status line is printed. Timeout yields UNKNOWN.
pub fn run_external(
    cnf: &CnfInstance,
    solver_command: &[String],
    timeout: Duration,
) -> Result<SolveOutcome, SolveError> {
    assert!(
        !solver_command.is_empty(),
        "solver command must be nonempty"
    );
    let start = Instant::now();
    let mut file = tempfile::Builder::new()
        .prefix("coloring-")
        .suffix(".cnf")
        .tempfile()?;
    file.write_all(cnf.to_dimacs().as_bytes())?;
    file.flush()?;

    let mut cmd = Command::new(&solver_command[0]);
    cmd.args(&solver_command[1..])
        .arg(file.path())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .stdin(Stdio::null());
    let mut child = cmd
        .spawn()
        .map_err(|e| SolveError::Spawn(solver_command.join(" "), e))?;

    let deadline = start + timeout;
    let status = loop {
        match child.try_wait()? {
            Some(status) => break status,
            None => {
                if Instant::now() > deadline {
                    let _ = child.kill();
                    let _ = child.wait();
                    return Ok(SolveOutcome {
                        status: SolveStatus::Unknown,
                        model: None,
                        wall_time: start.elapsed().as_secs_f64(),
                    });
                }
                std::thread::sleep(Duration::from_millis(5));
            }
        }
    };
    let mut output = String::new();
    if let Some(mut stdout) = child.stdout.take() {
        use std::io::Read;
        stdout.read_to_string(&mut output)?;
    }
    let wall_time = start.elapsed().as_secs_f64();

    let mut parsed_status = None;
    let mut lits = Vec::new();
    for line in output.lines() {
        if let Some(rest) = line.strip_prefix("s ") {
            match rest.trim() {
                "SATISFIABLE" => parsed_status = Some(SolveStatus::Sat),
                "UNSATISFIABLE" => parsed_status = Some(SolveStatus::Unsat),
                "UNKNOWN" | "INDETERMINATE" => parsed_status = Some(SolveStatus::Unknown),
                other => {
                    return Err(SolveError::MalformedOutput(format!("s {other}")));
                }
            }
        } else if let Some(rest) = line.strip_prefix("v ") {
            for tok in rest.split_whitespace() {
                if let Ok(lit) = tok.parse::<i32>() {
                    if lit != 0 {
                        lits.push(lit);
                    }
                }
            }
        }
    }
    let parsed_status = match parsed_status {
        Some(s) => s,
        None => match status.code() {
            Some(10) => SolveStatus::Sat,
            Some(20) => SolveStatus::Unsat,
            _ => return Err(SolveError::MalformedOutput(truncate(&output, 2000))),
        },
    };
    let model = if parsed_status == SolveStatus::Sat {
        let decoded = cnf
            .decode_model(&lits)
            .ok_or_else(|| SolveError::MalformedOutput("incomplete v-line model".into()))?;
        Some(decoded)
    } else {
        None
    };
    Ok(SolveOutcome {
        status: parsed_status,
        model,
        wall_time,
    })
}

/// Encodes, runs the external solver, and verifies any SAT model against
/// the instance before reporting it.
pub fn solve_external(
    g: &ColoringInstance,
    k: usize,
    solver_command: &[String],
    timeout: Duration,
) -> Result<SolveOutcome, SolveError> {
    let expanded = g.expand();
    let cnf = encode_expanded(&expanded, k)?;
    let outcome = run_external(&cnf, solver_command, timeout)?;
    if let Some(model) = &outcome.model {
        let violations = verify_coloring_expanded(&expanded, model);
        if !violations.is_empty() {
            return Err(SolveError::BadModel(violations));
        }
    }
    Ok(outcome)
}

fn truncate(s: &str, n: usize) -> String {
    if s.len() <= n {
        s.to_string()
    } else {
        format!("{}...", &s[..n])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;
    use crate::graphs::{
        attach_polychromatic, build_egraph, build_wgraph, ColoringInstance, EGraphSpec, VertexPos,
        WGraphSpec, Window,
    };

    fn triangle() -> ColoringInstance {
        build_wgraph(&WGraphSpec::new(3, 1, 2.0).unwrap()).unwrap()
    }

    fn cycle(n: usize) -> ColoringInstance {
        // unit-spaced points on a circle sized so only adjacent pairs
        // fall in the window
        let r = 0.5 / (std::f64::consts::PI / n as f64).sin();
        let positions = (0..n)
            .map(|j| {
                let t = std::f64::consts::TAU * j as f64 / n as f64;
                VertexPos::Cartesian(Point::new(r * t.cos(), r * t.sin()))
            })
            .collect();
        ColoringInstance {
            kind: "custom".into(),
            positions,
            multiplicity: vec![1; n],
            edges: (0..n)
                .map(|i| (i.min((i + 1) % n), i.max((i + 1) % n)))
                .collect(),
            window: Window::Cartesian { lo: 1.0, hi: 1.0 },
            precolored: Vec::new(),
        }
    }

    #[test]
    fn encode_triangle() {
        let g = triangle();
        let cnf = encode(&g, 3).unwrap();
        assert_eq!(cnf.variable_count, 9);
        // 3 at-least-one + 9 conflict clauses
        assert_eq!(cnf.clauses.len(), 3 + 9);
        let out = solve_cnf(&cnf);
        assert_eq!(out.status, SolveStatus::Sat);
        assert!(verify_coloring(&g, &out.model.unwrap()).is_empty());
    }

    #[test]
    fn triangle_two_colors_unsat() {
        let g = triangle();
        let cnf = encode(&g, 2).unwrap();
        assert_eq!(solve_cnf(&cnf).status, SolveStatus::Unsat);
    }

    #[test]
    fn clause_count_formula() {
        let g = build_egraph(&EGraphSpec { m: 2, a: 1, b: 3 }).unwrap();
        let expanded = g.expand();
        for k in 1..=5 {
            let cnf = encode_expanded(&expanded, k).unwrap();
            assert_eq!(
                cnf.clauses.len(),
                expanded.n() + k * expanded.edge_count() + expanded.precolored.len()
            );
        }
    }

    #[test]
    fn too_few_colors_rejected() {
        let g = build_egraph(&EGraphSpec { m: 4, a: 13, b: 21 }).unwrap();
        let g = attach_polychromatic(&g, true, None).unwrap();
        // 3 pre-colored copies
        assert!(matches!(
            encode(&g, 2),
            Err(SolveError::TooFewColors { .. })
        ));
    }

    #[test]
    fn odd_cycle() {
        let g = cycle(5);
        let out = exact_color(&g, 2, Duration::from_secs(5), INTERNAL_CAP).unwrap();
        assert_eq!(out.status, SolveStatus::Unsat);
        let out = exact_color(&g, 3, Duration::from_secs(5), INTERNAL_CAP).unwrap();
        assert_eq!(out.status, SolveStatus::Sat);
    }

    #[test]
    fn hex_wheel_chromatic_three() {
        // hub plus even 6-cycle
        let g = build_egraph(&EGraphSpec { m: 1, a: 1, b: 1 }).unwrap();
        let out = exact_color(&g, 2, Duration::from_secs(5), INTERNAL_CAP).unwrap();
        assert_eq!(out.status, SolveStatus::Unsat);
        let out = exact_color(&g, 3, Duration::from_secs(5), INTERNAL_CAP).unwrap();
        assert_eq!(out.status, SolveStatus::Sat);
        assert!(verify_coloring(&g, &out.model.unwrap()).is_empty());
    }

    #[test]
    fn constant_coloring_reported() {
        let g = triangle();
        let violations = verify_coloring(&g, &[0, 0, 0]);
        assert_eq!(violations.len(), 3);
    }

    #[test]
    fn internal_cap_refused() {
        let g = build_egraph(&EGraphSpec { m: 5, a: 1, b: 3 }).unwrap();
        assert!(matches!(
            exact_color(&g, 7, Duration::from_secs(1), 80),
            Err(SolveError::TooLargeForInternal(91, 80))
        ));
    }

    #[test]
    fn monotone_in_k() {
        let g = cycle(7);
        let mut prev_sat = false;
        for k in 1..=4 {
            let out = exact_color(&g, k, Duration::from_secs(5), INTERNAL_CAP).unwrap();
            let sat = out.status == SolveStatus::Sat;
            assert!(!prev_sat || sat, "SAT at k implies SAT at k+1");
            prev_sat = sat;
        }
    }

    #[test]
    fn splr_agrees_with_internal() {
        for (g, k) in [
            (cycle(5), 2),
            (cycle(5), 3),
            (triangle(), 2),
            (triangle(), 3),
            (build_egraph(&EGraphSpec { m: 1, a: 1, b: 1 }).unwrap(), 3),
            (build_egraph(&EGraphSpec { m: 1, a: 1, b: 1 }).unwrap(), 4),
        ] {
            let internal = exact_color(&g, k, Duration::from_secs(5), INTERNAL_CAP).unwrap();
            let cnf = encode(&g, k).unwrap();
            let external = solve_cnf(&cnf);
            assert_eq!(internal.status, external.status);
        }
    }

    #[test]
    fn dimacs_round_trip() {
        let g = triangle();
        let cnf = encode(&g, 3).unwrap();
        let text = cnf.to_dimacs();
        assert!(text.starts_with("p cnf 9 12\n"));
        let parsed = CnfInstance::from_dimacs(&text).unwrap();
        assert_eq!(parsed.variable_count, 9);
        assert_eq!(parsed.clauses, cnf.clauses);
    }

    #[test]
    fn precoloring_soundness_small() {
        // removing pre-coloring units never flips UNSAT -> SAT on a
        // vertex-transitive instance whose pre-colored set is a clique
        let g = build_egraph(&EGraphSpec { m: 1, a: 1, b: 1 }).unwrap();
        let mut with_clique = g.clone();
        with_clique.precolored = vec![0, 1, 2];
        // ensure those three really are a clique
        let ex = with_clique.expand();
        assert!(ex.is_adjacent(0, 1) && ex.is_adjacent(0, 2) && ex.is_adjacent(1, 2));
        for k in 3..=4 {
            let a = exact_color(&with_clique, k, Duration::from_secs(5), INTERNAL_CAP)
                .unwrap()
                .status;
            let b = exact_color(&g, k, Duration::from_secs(5), INTERNAL_CAP)
                .unwrap()
                .status;
            assert_eq!(a, b);
        }
    }
}
