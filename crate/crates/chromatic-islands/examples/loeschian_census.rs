//! Loeschian numbers (norms on the hexagonal lattice) up to a limit,
//! and counts of representable values inside distance windows.

use chromatic_islands::lattice::{loeschian_count_in, loeschian_upto, representative_with_norm};

fn main() {
    let table = loeschian_upto(100);
    println!("Loeschian numbers up to 100 ({} of them):", table.count());
    println!("{:?}\n", table.members());

    for (a, b) in [(13, 21), (27, 76), (91, 624)] {
        println!(
            "window [{a}, {b}] contains {} Loeschian values",
            loeschian_count_in(a, b)
        );
    }

    println!();
    for n in [7, 91, 200] {
        match representative_with_norm(n) {
            Some(w) => println!("norm {n} = |{w:?}|^2"),
            None => println!("norm {n} is not representable"),
        }
    }
}
