mod common;

use common::{all_types, Euclidean};
use subregular::roots::{build_root_system, cartan_pairing};
use subregular::TypeLabel;

fn library(label: char, rank: usize) -> subregular::RootSystem {
    let label: TypeLabel = label.to_string().parse().unwrap();
    build_root_system(label, rank).unwrap()
}

#[test]
fn positive_roots_match_euclidean_realization() {
    for (label, rank) in all_types() {
        let e = Euclidean::new(label, rank);
        let rs = library(label, rank);
        let mut ours: Vec<Vec<i64>> = rs.positive_roots.iter().map(|r| r.0.clone()).collect();
        ours.sort();
        assert_eq!(ours, e.positive_roots(), "{label}{rank}");
        assert_eq!(e.roots.len(), 2 * ours.len(), "{label}{rank}");
    }
}

#[test]
fn highest_roots_match() {
    for (label, rank) in all_types() {
        let e = Euclidean::new(label, rank);
        assert_eq!(library(label, rank).highest_root.0, e.highest_root(), "{label}{rank}");
    }
}

#[test]
fn cartan_integers_match() {
    for (label, rank) in all_types() {
        let e = Euclidean::new(label, rank);
        let rs = library(label, rank);
        for i in 1..=rank {
            for j in 1..=rank {
                assert_eq!(cartan_pairing(&rs, i, j).unwrap(), e.pairing(i, j), "{label}{rank} <a{i},a{j}>");
            }
        }
    }
}

#[test]
fn root_counts() {
    let counts = [(('E', 6), 36), (('E', 7), 63), (('E', 8), 120), (('F', 4), 24), (('G', 2), 6)];
    for ((label, rank), n) in counts {
        assert_eq!(Euclidean::new(label, rank).positive_roots().len(), n);
    }
}
