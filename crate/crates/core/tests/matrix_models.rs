use num_traits::{One, Signed, Zero};

use subregular::fforacle::{ble_point_set, orbit_of};
use subregular::matrixlie::{
    all_nilpotent_heuristic, build_algebra, centralizer_dim, covered_alphas, subregular_rep, toral_centralizer_dim,
    toral_kernel_dim, Family,
};

fn representatives(max_n: usize) -> Vec<(Family, usize, usize)> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for n in family.min_n()..=max_n {
            for alpha in covered_alphas(family, n) {
                out.push((family, n, alpha));
            }
        }
    }
    out
}

#[test]
fn representatives_are_signed_sums_of_root_vectors() {
    for (family, n, alpha) in representatives(6) {
        let alg = build_algebra(family, n).unwrap();
        let rep = subregular_rep(&alg, alpha).unwrap();
        let coords = alg.nilradical_coordinates(&rep.matrix).unwrap();
        for c in &coords {
            assert!(c.is_zero() || c.abs().is_one(), "{family}{n} a{alpha}: coefficient {c}");
        }
        assert!(!rep.support.contains(&alg.root_system.simple_root(alpha)));
        assert_eq!(
            alg.dim() - centralizer_dim(&alg, &rep.matrix),
            alg.dim() - alg.rank() - 2,
            "{family}{n} a{alpha}"
        );
    }
}

#[test]
fn toral_centralizer_two_ways() {
    for (family, n, alpha) in representatives(6) {
        let alg = build_algebra(family, n).unwrap();
        let rep = subregular_rep(&alg, alpha).unwrap();
        assert_eq!(
            toral_centralizer_dim(&alg, &rep.matrix).unwrap(),
            toral_kernel_dim(&alg, &rep.matrix),
            "{family}{n} a{alpha}"
        );
    }
}

#[test]
fn torus_survives_only_in_types_a_and_b() {
    for (family, n, alpha) in representatives(4) {
        let alg = build_algebra(family, n).unwrap();
        let rep = subregular_rep(&alg, alpha).unwrap();
        let report = all_nilpotent_heuristic(&alg, &rep.matrix);
        // sp_4 has type C2 = B2
        let distinguished = family == Family::SoEven || (family == Family::Sp && n >= 3);
        assert_eq!(report.all_nilpotent, distinguished, "{family}{n} a{alpha}");
        assert_eq!(report.kernel_dim, alg.rank() + 2);
    }
}

#[test]
fn ble_predicate_point_counts() {
    for q in [3u32, 5] {
        for n in 3..=5 {
            if q == 5 && n == 5 {
                continue;
            }
            let alg = build_algebra(Family::Sl, n).unwrap();
            let count = ble_point_set(&alg, q).unwrap().len();
            let expected = (q as usize - 1).pow(n as u32 - 2) * (q as usize).pow(((n - 1) * (n - 2) / 2) as u32);
            assert_eq!(count, expected, "n={n} q={q}");
        }
    }
}

#[test]
fn ble_predicate_is_the_orbit() {
    for (n, q) in [(3, 3), (3, 5), (4, 3), (4, 5)] {
        let alg = build_algebra(Family::Sl, n).unwrap();
        let rep = subregular_rep(&alg, 1).unwrap();
        assert_eq!(orbit_of(&alg, q, &rep.matrix).unwrap(), ble_point_set(&alg, q).unwrap(), "n={n} q={q}");
    }
}
