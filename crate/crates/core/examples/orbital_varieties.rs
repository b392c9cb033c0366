//! Which subregular orbital varieties carry finitely many Borel orbits, and
//! why the others do not.
//!
//!     cargo run --example orbital_varieties

use subregular::classify::{orbital_variety_finite, witness_holds, Witness};
use subregular::CartanType;

fn main() {
    for t in CartanType::all_up_to(8) {
        let mut finite = Vec::new();
        let mut reasons = Vec::new();
        for alpha in 1..=t.rank {
            let v = orbital_variety_finite(t, alpha).unwrap();
            assert!(witness_holds(t, alpha, &v).unwrap());
            if v.finite {
                finite.push(alpha);
            } else {
                let why = match v.witness {
                    Witness::Ideal(g) => format!("ideal {g:?}"),
                    Witness::Literature(tag) => format!("{tag:?}"),
                };
                if !reasons.contains(&why) {
                    reasons.push(why);
                }
            }
        }
        println!("{:<3} finite at {:<16} {}", t.to_string(), format!("{finite:?}"), reasons.join("; "));
    }
}
