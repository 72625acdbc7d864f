//! The bound ledger: ingest published per-chi bounds, derive the islands
//! of certainty (d-intervals where chi is known exactly), extrapolate a
//! record family to r -> 0, and render both as SVG.

use chromatic_islands::bounds::{
    compute_islands, extrapolate, fit_svg, islands_svg, summary_text, BoundsLedger,
};
use chromatic_islands::data;

fn main() {
    let mut ledger = BoundsLedger::new();
    let added = ledger.import_published();
    println!("imported {added} published bound entries\n");

    let records = ledger.records();
    print!("{}", summary_text(&records));

    let islands = compute_islands(&records);
    let confirmed: Vec<u32> = islands
        .iter()
        .filter(|i| matches!(i.status, chromatic_islands::IslandStatus::Island))
        .map(|i| i.chi)
        .collect();
    println!("\nconfirmed islands at chi = {confirmed:?}");

    // where does the 8-color regime start? extrapolate the 7-color
    // record family to infinite lattice resolution
    let points: Vec<(f64, f64)> = data::egraph_records()
        .iter()
        .filter(|r| r.k == 7)
        .map(|r| ((1.0 / r.a as f64).sqrt(), (r.b as f64 / r.a as f64).sqrt()))
        .collect();
    let fit = extrapolate(&points).unwrap();
    println!(
        "7-color records extrapolate to d = {:.4} (slope {:.3}, rms residual {:.4})",
        fit.intercept, fit.slope, fit.residual
    );

    let out = std::env::temp_dir();
    std::fs::write(out.join("islands.svg"), islands_svg(&records)).unwrap();
    std::fs::write(out.join("fit.svg"), fit_svg(&fit)).unwrap();
    println!("wrote islands.svg and fit.svg to {}", out.display());
}
