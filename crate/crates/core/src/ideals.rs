//! Borel-stable ideals of the nilradical generated by simple root spaces.
//!
//! An ideal is described by its set of roots, which is an upper set of the
//! positive roots. The derived ideal is spanned by the root spaces of sums
//! `γ + δ` with `γ, δ` in the ideal; in good characteristic the structure
//! constants involved are nonzero, so this is purely combinatorial.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::roots::{build_for, CartanType, Root, RootSystem, TypeLabel};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BIdeal {
    /// 1-based simple roots generating the ideal.
    pub generators: Vec<usize>,
    /// Roots of the ideal, in the root system's positive-root order.
    pub roots: Vec<Root>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealStats {
    pub dim_n: usize,
    pub dim_derived: usize,
    pub dim_abelianization: usize,
    pub dim_b_mod_n: usize,
}

fn check_generators(rs: &RootSystem, gens: &[usize]) -> Result<Vec<usize>> {
    if gens.is_empty() {
        return Err(Error::Usage("an ideal needs at least one generator".into()));
    }
    for &g in gens {
        rs.cartan_type.check_root(g)?;
    }
    let set: BTreeSet<usize> = gens.iter().copied().collect();
    Ok(set.into_iter().collect())
}

/// Closure of the generating simple roots under adding simple roots.
pub fn ideal_closure(rs: &RootSystem, gens: &[usize]) -> Result<BIdeal> {
    let generators = check_generators(rs, gens)?;
    let roots = close_upward(rs, generators.iter().map(|&g| rs.simple_root(g)), |_| {
        (1..=rs.rank()).map(|i| rs.simple_root(i)).collect()
    });
    Ok(BIdeal { generators, roots })
}

/// The same closure, but adding arbitrary positive roots at each step.
pub fn ideal_closure_by_positive_roots(rs: &RootSystem, gens: &[usize]) -> Result<BIdeal> {
    let generators = check_generators(rs, gens)?;
    let roots = close_upward(rs, generators.iter().map(|&g| rs.simple_root(g)), |rs| {
        rs.positive_roots.clone()
    });
    Ok(BIdeal { generators, roots })
}

fn close_upward(
    rs: &RootSystem,
    seeds: impl Iterator<Item = Root>,
    steps: impl Fn(&RootSystem) -> Vec<Root>,
) -> Vec<Root> {
    let steps = steps(rs);
    let mut members: BTreeSet<usize> = BTreeSet::new();
    let mut stack: Vec<Root> = Vec::new();
    for s in seeds {
        let k = rs.index_of_positive(&s).expect("seed is a root");
        if members.insert(k) {
            stack.push(s);
        }
    }
    while let Some(g) = stack.pop() {
        for step in &steps {
            let up = g.add(step);
            if let Some(k) = rs.index_of_positive(&up) {
                if members.insert(k) {
                    stack.push(up);
                }
            }
        }
    }
    members
        .into_iter()
        .map(|k| rs.positive_roots[k].clone())
        .collect()
}

pub fn ideal_stats(rs: &RootSystem, gens: &[usize]) -> Result<IdealStats> {
    let ideal = ideal_closure(rs, gens)?;
    Ok(stats_of(rs, &ideal))
}

pub fn stats_of(rs: &RootSystem, ideal: &BIdeal) -> IdealStats {
    let mut derived: BTreeSet<&Root> = BTreeSet::new();
    let sums: Vec<Root> = ideal
        .roots
        .iter()
        .flat_map(|g| ideal.roots.iter().map(move |d| g.add(d)))
        .collect();
    for s in &sums {
        if rs.index_of_positive(s).is_some() {
            derived.insert(s);
        }
    }
    let dim_n = ideal.roots.len();
    let dim_derived = derived.len();
    IdealStats {
        dim_n,
        dim_derived,
        dim_abelianization: dim_n - dim_derived,
        dim_b_mod_n: rs.dim_borel() - dim_n,
    }
}

/// `dim B/N < dim n/[n,n]`, which forces infinitely many `B`-orbits on `n`.
pub fn infinite_witness_check(rs: &RootSystem, gens: &[usize]) -> Result<bool> {
    let s = ideal_stats(rs, gens)?;
    Ok(s.dim_b_mod_n < s.dim_abelianization)
}

/// Whether the ideal lies in the nilradical of the minimal parabolic of
/// `alpha`, i.e. `alpha` is not among its generators.
pub fn contained_in_nilradical(ideal: &BIdeal, alpha: usize) -> bool {
    !ideal.generators.contains(&alpha)
}

/// One row of the table of ideals used to rule out finiteness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub cartan_type: CartanType,
    pub generators: Vec<usize>,
    pub dim_b_mod_n: usize,
    pub dim_abelianization: usize,
    pub infinite: bool,
}

/// Generator sets of the five witness ideals.
pub fn witness_generators(t: CartanType) -> Option<&'static [usize]> {
    match (t.label, t.rank) {
        (TypeLabel::A, 5) => Some(&[1, 3, 5]),
        (TypeLabel::B, 3) => Some(&[2]),
        (TypeLabel::C, 3) => Some(&[1, 3]),
        (TypeLabel::D, 4) => Some(&[2]),
        (TypeLabel::G, 2) => Some(&[2]),
        _ => None,
    }
}

pub fn witness_table() -> Vec<TableRow> {
    [
        (TypeLabel::A, 5),
        (TypeLabel::B, 3),
        (TypeLabel::C, 3),
        (TypeLabel::D, 4),
        (TypeLabel::G, 2),
    ]
    .into_iter()
    .map(|(l, r)| {
        let t = CartanType::new(l, r).expect("table types are valid");
        let gens = witness_generators(t).expect("row has generators");
        let rs = build_for(t);
        let s = ideal_stats(&rs, gens).expect("generators are simple roots");
        TableRow {
            cartan_type: t,
            generators: gens.to_vec(),
            dim_b_mod_n: s.dim_b_mod_n,
            dim_abelianization: s.dim_abelianization,
            infinite: s.dim_b_mod_n < s.dim_abelianization,
        }
    })
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::build_root_system;

    #[test]
    fn closures() {
        let a5 = build_root_system(TypeLabel::A, 5).unwrap();
        let n = ideal_closure(&a5, &[1, 3, 5]).unwrap();
        assert_eq!(n.roots.len(), 13);
        assert!(!n.roots.contains(&a5.simple_root(2)));
        assert!(!n.roots.contains(&a5.simple_root(4)));

        let g2 = build_root_system(TypeLabel::G, 2).unwrap();
        let n = ideal_closure(&g2, &[2]).unwrap();
        let expected: Vec<Root> = [[0, 1], [1, 1], [2, 1], [3, 1], [3, 2]]
            .iter()
            .map(|v| Root(v.to_vec()))
            .collect();
        assert_eq!(n.roots, expected);

        let e6 = build_root_system(TypeLabel::E, 6).unwrap();
        let all: Vec<usize> = (1..=6).collect();
        assert_eq!(ideal_closure(&e6, &all).unwrap().roots, e6.positive_roots);

        assert!(matches!(ideal_closure(&e6, &[]), Err(Error::Usage(_))));
        assert!(ideal_closure(&e6, &[7]).is_err());
    }

    #[test]
    fn table_rows() {
        let a5 = build_root_system(TypeLabel::A, 5).unwrap();
        let s = ideal_stats(&a5, &[1, 3, 5]).unwrap();
        assert_eq!((s.dim_b_mod_n, s.dim_abelianization), (7, 8));
        let c3 = build_root_system(TypeLabel::C, 3).unwrap();
        let s = ideal_stats(&c3, &[1, 3]).unwrap();
        assert_eq!((s.dim_b_mod_n, s.dim_abelianization), (4, 5));
        let g2 = build_root_system(TypeLabel::G, 2).unwrap();
        let s = ideal_stats(&g2, &[2]).unwrap();
        assert_eq!((s.dim_b_mod_n, s.dim_abelianization), (3, 4));
    }

    #[test]
    fn witness_checks() {
        let b3 = build_root_system(TypeLabel::B, 3).unwrap();
        assert!(infinite_witness_check(&b3, &[2]).unwrap());
        let d4 = build_root_system(TypeLabel::D, 4).unwrap();
        assert!(infinite_witness_check(&d4, &[2]).unwrap());
        let a3 = build_root_system(TypeLabel::A, 3).unwrap();
        let s = ideal_stats(&a3, &[1]).unwrap();
        assert_eq!(s.dim_n, 3);
        assert_eq!(s.dim_b_mod_n, 6);
        assert!(!infinite_witness_check(&a3, &[1]).unwrap());
    }

    #[test]
    fn containment() {
        let a5 = build_root_system(TypeLabel::A, 5).unwrap();
        let n = ideal_closure(&a5, &[1, 3, 5]).unwrap();
        assert!(contained_in_nilradical(&n, 2));
        assert!(!contained_in_nilradical(&n, 1));
        let g2 = build_root_system(TypeLabel::G, 2).unwrap();
        let n = ideal_closure(&g2, &[2]).unwrap();
        assert!(contained_in_nilradical(&n, 1));
    }
}
