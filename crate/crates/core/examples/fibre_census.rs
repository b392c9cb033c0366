//! Centralizer orbits on the subregular Springer fibre, for every type.
//!
//!     cargo run --example fibre_census

use subregular::census::{b_orbit_count, fibre_orbit_census, LineVerdict};
use subregular::CartanType;

fn main() {
    for t in CartanType::all_up_to(8) {
        let census = fibre_orbit_census(t);
        let finite = census
            .lines
            .iter()
            .filter(|l| l.verdict == LineVerdict::Finite)
            .count();
        let per_root: Vec<String> = (1..=t.rank)
            .map(|a| b_orbit_count(t, a).unwrap().to_string())
            .collect();
        println!(
            "{:<3} lines {:>2} (finite {:>2})  total {:<8}  per root [{}]",
            t.to_string(),
            census.lines.len(),
            finite,
            census.total.to_string(),
            per_root.join(" ")
        );
    }
}
