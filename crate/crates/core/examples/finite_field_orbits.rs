//! Borel orbits over small prime fields, compared with the counts read off the
//! Dynkin curve.
//!
//!     cargo run --release --example finite_field_orbits

use subregular::census::b_orbit_count;
use subregular::fforacle::{enumerate_b_orbits, Subspace};
use subregular::matrixlie::{build_algebra, Family};

fn main() {
    for (family, n) in [(Family::Sl, 3), (Family::Sl, 4), (Family::SoOdd, 2), (Family::Sp, 2)] {
        let alg = build_algebra(family, n).unwrap();
        let filter = family.subregular_partition(n);
        for q in [3, 5] {
            let c = enumerate_b_orbits(&alg, q, Subspace::Nilradical, Some(&filter)).unwrap();
            println!("{family}{n} q={q}: {} orbits in u, sizes {:?}", c.orbit_count, c.orbit_sizes);
            for alpha in 1..=alg.rank() {
                let c = enumerate_b_orbits(&alg, q, Subspace::MinimalNilradical { alpha }, Some(&filter)).unwrap();
                let curve = b_orbit_count(alg.cartan_type(), alpha).unwrap();
                println!("    u_a{alpha}: {} over F_{q}, {} from the curve", c.orbit_count, curve);
            }
        }
    }
}
