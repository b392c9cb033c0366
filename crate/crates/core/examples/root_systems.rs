//! Positive roots, highest roots and foldings for every type up to rank 8.
//!
//!     cargo run --example root_systems

use subregular::roots::{build_for, fold_type};
use subregular::CartanType;

fn main() {
    println!("{:<4} {:>6}  highest root", "type", "|Phi+|");
    for t in CartanType::all_up_to(8) {
        let rs = build_for(t);
        println!("{:<4} {:>6}  {}", t.to_string(), rs.positive_roots.len(), rs.highest_root);
    }

    println!();
    for t in ["B3", "C3", "F4", "G2"] {
        let label = t[..1].parse().unwrap();
        let rank = t[1..].parse().unwrap();
        let t = CartanType::new(label, rank).unwrap();
        let f = fold_type(t).unwrap();
        let orbits: Vec<String> = f
            .orbit_partition
            .iter()
            .zip(&f.orbit_to_root)
            .map(|(orbit, root)| format!("a{root} <- {orbit:?}"))
            .collect();
        println!(
            "{t} = {} / group of order {}: {}",
            f.hat_system.cartan_type,
            f.group_order,
            orbits.join(", ")
        );
    }
}
