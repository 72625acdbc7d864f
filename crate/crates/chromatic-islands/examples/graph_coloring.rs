//! Building finite distance graphs and deciding their colorability: a
//! lattice graph (e-graph) with polychromatic attachments, encoded to CNF
//! and solved exactly.

use chromatic_islands::colorsat::{encode, exact_color, solve_cnf, INTERNAL_CAP};
use chromatic_islands::graphs::{
    attach_polychromatic, build_egraph, max_clique, precolor_clique, BiPlacement, EGraphSpec,
};
use std::time::Duration;

fn main() {
    // lattice disk of radius m=5 (step 1/sqrt(13)); edges where the
    // squared distance falls in the Loeschian window [13, 21]
    let spec = EGraphSpec { m: 5, a: 13, b: 21 };
    let base = build_egraph(&spec).unwrap();
    println!(
        "e-graph (m=5, window [13, 21]): {} vertices, {} edges, d = {:.5}",
        base.vertex_count(),
        base.edges.len(),
        spec.d()
    );

    // a tri-chromatic center and a bi-chromatic companion pin 5 colors
    let mut g = attach_polychromatic(&base, true, Some(BiPlacement::LatticeS2(21))).unwrap();
    let clique = max_clique(&g, Duration::from_secs(2));
    precolor_clique(&mut g, &clique.vertices);
    println!(
        "attached tri+bi, pre-colored {} vertices ({} expanded copies)",
        g.precolored.len(),
        g.expanded_count()
    );

    let cnf = encode(&g, 6).unwrap();
    println!(
        "CNF at 6 colors: {} variables, {} clauses",
        cnf.variable_count,
        cnf.clauses.len()
    );

    for k in [6, 7] {
        let outcome = solve_cnf(&encode(&g, k).unwrap());
        println!(
            "{k} colors: {:?} in {:.2}s",
            outcome.status, outcome.wall_time
        );
    }

    // small instances can skip SAT entirely
    let wheel = build_egraph(&EGraphSpec { m: 1, a: 1, b: 1 }).unwrap();
    let outcome = exact_color(&wheel, 3, Duration::from_secs(10), INTERNAL_CAP).unwrap();
    println!("\n7-vertex wheel at 3 colors: {:?}", outcome.status);
}
