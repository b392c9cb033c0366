//! Finiteness classifications as total decision functions.

use serde::{Deserialize, Serialize};

use crate::ideals;
use crate::roots::{build_for, folded_coefficient, CartanType, TypeLabel};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibreVerdict {
    pub finite: bool,
    /// Coefficient of the simple root (or of its hat representative) in the
    /// (hat) highest root.
    pub reason: i64,
}

/// Where an orbital-variety verdict comes from when no ideal witness applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LiteratureTag {
    /// `B` has finitely many orbits on the whole nilradical.
    KashinFullNilradical,
    /// The minimal parabolic already has infinitely many orbits on its
    /// nilradical.
    MinimalParabolic,
    /// `B` has infinitely many orbits on the subregular part of the
    /// nilradical.
    SubregularIntersection,
    /// The nilradical avoids the dense one-parameter family of orbits, which
    /// lives in the witness ideal.
    AvoidsOneParameterFamily,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Witness {
    /// Generators of a `B`-stable ideal inside the nilradical with
    /// `dim B/N < dim n/[n,n]`.
    Ideal(Vec<usize>),
    Literature(LiteratureTag),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitalVerdict {
    pub finite: bool,
    pub witness: Witness,
}

pub fn fibre_finite(t: CartanType, alpha: usize) -> Result<FibreVerdict> {
    let reason = folded_coefficient(t, alpha)?;
    Ok(FibreVerdict {
        finite: reason == 1,
        reason,
    })
}

/// Finiteness of `B`-orbits on the intersection of the subregular orbit with
/// the nilradical of the minimal parabolic of `alpha`. The criterion is the
/// same as for the fibre side.
pub fn richardson_finite(t: CartanType, alpha: usize) -> Result<bool> {
    Ok(fibre_finite(t, alpha)?.finite)
}

/// Finitely many `B`-orbits on the whole nilradical.
pub fn borel_full_nilradical_finite(t: CartanType) -> bool {
    match t.label {
        TypeLabel::A => t.rank <= 4,
        TypeLabel::B | TypeLabel::C => t.rank == 2,
        _ => false,
    }
}

/// Finitely many `P_α`-orbits on the nilradical of a minimal parabolic
/// (independent of `α`).
pub fn parabolic_nilradical_finite(t: CartanType) -> bool {
    match t.label {
        TypeLabel::A => t.rank <= 5,
        TypeLabel::B | TypeLabel::C => t.rank <= 3,
        TypeLabel::D => t.rank == 4,
        TypeLabel::G => true,
        TypeLabel::E | TypeLabel::F => false,
    }
}

// The finite entries beyond the full-nilradical cases.
fn finite_beyond_full(t: CartanType, alpha: usize) -> bool {
    match (t.label, t.rank) {
        (TypeLabel::A, 5) => matches!(alpha, 1 | 3 | 5),
        (TypeLabel::B, 3) => alpha == 2,
        (TypeLabel::C, 3) => matches!(alpha, 1 | 3),
        (TypeLabel::G, 2) => alpha == 2,
        _ => false,
    }
}

/// Finitely many `B`-orbits on the subregular orbital variety attached to
/// `alpha` (the nilradical of the minimal parabolic of `alpha`).
pub fn orbital_variety_finite(t: CartanType, alpha: usize) -> Result<OrbitalVerdict> {
    t.check_root(alpha)?;
    if borel_full_nilradical_finite(t) {
        return Ok(OrbitalVerdict {
            finite: true,
            witness: Witness::Literature(LiteratureTag::KashinFullNilradical),
        });
    }
    if finite_beyond_full(t, alpha) {
        return Ok(OrbitalVerdict {
            finite: true,
            witness: Witness::Literature(LiteratureTag::AvoidsOneParameterFamily),
        });
    }
    let witness = if !parabolic_nilradical_finite(t) {
        Witness::Literature(LiteratureTag::MinimalParabolic)
    } else if let Some(gens) = ideals::witness_generators(t).filter(|g| !g.contains(&alpha)) {
        Witness::Ideal(gens.to_vec())
    } else {
        debug_assert!(!richardson_finite(t, alpha)?);
        Witness::Literature(LiteratureTag::SubregularIntersection)
    };
    Ok(OrbitalVerdict {
        finite: false,
        witness,
    })
}

/// Re-checks an infinite verdict's ideal witness against the ideal
/// combinatorics; literature-tagged and finite verdicts pass trivially.
pub fn witness_holds(t: CartanType, alpha: usize, verdict: &OrbitalVerdict) -> Result<bool> {
    match &verdict.witness {
        Witness::Ideal(gens) => {
            let rs = build_for(t);
            let ideal = ideals::ideal_closure(&rs, gens)?;
            Ok(ideals::contained_in_nilradical(&ideal, alpha)
                && ideals::infinite_witness_check(&rs, gens)?)
        }
        Witness::Literature(_) => Ok(true),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(l: TypeLabel, r: usize) -> CartanType {
        CartanType::new(l, r).unwrap()
    }

    #[test]
    fn fibre_examples() {
        assert!(fibre_finite(t(TypeLabel::A, 6), 3).unwrap().finite);
        let v = fibre_finite(t(TypeLabel::D, 5), 2).unwrap();
        assert_eq!(v, FibreVerdict { finite: false, reason: 2 });
        assert!(fibre_finite(t(TypeLabel::C, 3), 1).unwrap().finite);
    }

    #[test]
    fn richardson_examples() {
        assert!(richardson_finite(t(TypeLabel::B, 3), 3).unwrap());
        for a in 1..=8 {
            assert!(!richardson_finite(t(TypeLabel::E, 8), a).unwrap());
        }
        assert!(!richardson_finite(t(TypeLabel::F, 4), 4).unwrap());
    }

    #[test]
    fn orbital_examples() {
        assert!(orbital_variety_finite(t(TypeLabel::A, 5), 3).unwrap().finite);
        let v = orbital_variety_finite(t(TypeLabel::B, 3), 1).unwrap();
        assert_eq!(v.witness, Witness::Ideal(vec![2]));
        assert!(!v.finite);
        assert!(orbital_variety_finite(t(TypeLabel::G, 2), 2).unwrap().finite);
        let v = orbital_variety_finite(t(TypeLabel::D, 4), 2).unwrap();
        assert_eq!(
            v.witness,
            Witness::Literature(LiteratureTag::SubregularIntersection)
        );
        let v = orbital_variety_finite(t(TypeLabel::E, 6), 1).unwrap();
        assert_eq!(v.witness, Witness::Literature(LiteratureTag::MinimalParabolic));
        assert!(orbital_variety_finite(t(TypeLabel::C, 2), 1).unwrap().finite);
        assert!(orbital_variety_finite(t(TypeLabel::A, 5), 7).is_err());
    }

    #[test]
    fn nilradical_lists() {
        assert!(borel_full_nilradical_finite(t(TypeLabel::A, 4)));
        assert!(borel_full_nilradical_finite(t(TypeLabel::B, 2)));
        assert!(!borel_full_nilradical_finite(t(TypeLabel::A, 5)));
        assert!(parabolic_nilradical_finite(t(TypeLabel::D, 4)));
        assert!(!parabolic_nilradical_finite(t(TypeLabel::D, 5)));
        assert!(parabolic_nilradical_finite(t(TypeLabel::C, 3)));
    }
}
