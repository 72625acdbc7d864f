//! Plane colorings from sublattices of the hexagonal tiling: the maximal
//! same-color gap d(k) achievable with k colors, for hexagonal (regular)
//! and general (stochastically optimized) sublattices.

use chromatic_islands::tilings::{
    classify_k, general_sublattice_distance, regular_sublattice_distance, regular_sublattice_spec,
    verify_tiling,
};

fn main() {
    println!("hexagonal sublattice colorings (k must be Loeschian):");
    let mut best = vec![0.0f64];
    for k in 1..=16 {
        let regular = regular_sublattice_distance(k).ok();
        match regular {
            Some(d) => println!("  k={k:>2}: d = {d:.5}"),
            None => println!("  k={k:>2}: no hexagonal sublattice of this index"),
        }
        best.push(regular.unwrap_or(0.0));
    }

    // k = 8 has no hexagonal sublattice; search general ones
    let k = 8;
    let (d, _) = general_sublattice_distance(k, 32, 1);
    println!("\ngeneral sublattice search for k={k}: d = {d:.5}");
    best[k as usize] = best[k as usize].max(d);

    let class = classify_k(k as usize, &best[..=k as usize], None);
    println!("class of k={k}: {}", class.label());

    // every coloring is checkable as an explicit tiling
    let spec = regular_sublattice_spec(7).unwrap();
    let report = verify_tiling(&spec).unwrap();
    println!(
        "\nk=7 tiling verified: width {:.5}, same-color gap {:.5}, {} violations",
        report.max_width,
        report.min_same_color_gap,
        report.violations.len()
    );
}
