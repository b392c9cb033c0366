//! The Borel-stable ideals whose abelianization outgrows `B/N`, together with
//! the stats of any ideal given on the command line.
//!
//!     cargo run --example ideals_table -- A 5 1,3,5

use subregular::ideals::{ideal_stats, witness_table};
use subregular::roots::build_root_system;

fn main() {
    println!("type  generators  dim B/N  dim n/[n,n]  infinite");
    for row in witness_table() {
        println!(
            "{:<5} {:<11} {:<8} {:<12} {}",
            row.cartan_type.to_string(),
            format!("{:?}", row.generators),
            row.dim_b_mod_n,
            row.dim_abelianization,
            row.infinite
        );
    }

    let args: Vec<String> = std::env::args().skip(1).collect();
    if let [label, rank, gens] = args.as_slice() {
        let rs = build_root_system(label.parse().unwrap(), rank.parse().unwrap()).unwrap();
        let gens: Vec<usize> = gens.split(',').map(|g| g.parse().unwrap()).collect();
        println!("\n{} <{gens:?}>: {:?}", rs.cartan_type, ideal_stats(&rs, &gens).unwrap());
    }
}
