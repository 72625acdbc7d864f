//! Width-minimal planar point sets with pairwise distances >= 1. A set of
//! q such points inside width d forbids a (q+3)-coloring of the plane for
//! forbidden interval [1, d] (the three extra colors come from a
//! tri-chromatic vertex argument), so small widths give upper bounds.

use chromatic_islands::packing::{clique_chi_bound, pack, verify_packing};

fn main() {
    for q in 2..=8 {
        let result = pack(q, 64, 1);
        let (min, width) = verify_packing(&result.points);
        println!(
            "q={q}: width {:.5} (min pairwise distance {:.5}) -> chi >= {} beyond d = {:.5}",
            width,
            min,
            clique_chi_bound(q),
            width / min
        );
    }

    let result = pack(8, 64, 1);
    println!("\nq=8 optimal layout (regular 7-gon plus center):");
    for p in &result.points {
        println!("  ({:>8.5}, {:>8.5})", p.x, p.y);
    }
}
