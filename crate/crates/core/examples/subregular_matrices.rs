//! Explicit subregular representatives in the classical matrix models and
//! the checks they pass.
//!
//!     cargo run --example subregular_matrices -- sp 3

use subregular::matrixlie::{
    all_nilpotent_heuristic, build_algebra, centralizer_dim, covered_alphas, dense_orbit_check, jordan_partition,
    subregular_rep, toral_centralizer_dim, Family,
};

fn main() {
    let mut args = std::env::args().skip(1);
    let family: Family = args.next().as_deref().unwrap_or("so-odd").parse().expect("family");
    let n: usize = args.next().as_deref().unwrap_or("3").parse().expect("n");

    let alg = build_algebra(family, n).expect("algebra");
    println!("{family}{n}: dim {}, rank {}", alg.dim(), alg.rank());
    for alpha in covered_alphas(family, n) {
        let rep = subregular_rep(&alg, alpha).unwrap();
        let support: Vec<String> = rep.support.iter().map(|r| r.to_string()).collect();
        let dense = dense_orbit_check(&alg, alpha, &rep.matrix).unwrap();
        let nil = all_nilpotent_heuristic(&alg, &rep.matrix);
        println!("\nalpha {alpha}: support {}", support.join(", "));
        print!("{:?}", rep.matrix);
        println!(
            "partition {:?}, centralizer {}, tangent {}/{}, toral centralizer {}, unipotent centralizer {}",
            jordan_partition(&rep.matrix).unwrap(),
            centralizer_dim(&alg, &rep.matrix),
            dense.tangent_dim,
            dense.u_alpha_dim,
            toral_centralizer_dim(&alg, &rep.matrix).unwrap(),
            nil.all_nilpotent
        );
    }
}
