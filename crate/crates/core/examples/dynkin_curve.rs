//! Lines and intersection points of a Dynkin curve, plus its DOT rendering.
//!
//!     cargo run --example dynkin_curve -- G 2

use subregular::curve::{build_curve, symmetry_action, upsilon_partition};
use subregular::{CartanType, TypeLabel};

fn main() {
    let mut args = std::env::args().skip(1);
    let label: TypeLabel = args.next().as_deref().unwrap_or("G").parse().expect("type label");
    let rank: usize = args.next().as_deref().unwrap_or("2").parse().expect("rank");
    let t = CartanType::new(label, rank).expect("valid type");

    let curve = build_curve(t);
    curve.check_invariants().expect("curve invariants");
    println!("{t}: {} lines, {} points", curve.lines.len(), curve.points.len());
    for l in &curve.lines {
        let cells = upsilon_partition(&curve, l.id).unwrap();
        println!("  line {} of type a{} (#{}): {} cells", l.id, l.root_type, l.index, cells.len());
    }
    let action = symmetry_action(&curve);
    println!("symmetry group of order {}", action.group_order);
    println!();
    print!("{}", curve.to_dot());
}
