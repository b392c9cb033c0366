//! Orbit censuses of the centralizer on a Dynkin curve.
//!
//! On a line where the connected centralizer has finitely many orbits, each
//! cell of the line's partition is one orbit; elsewhere the action is trivial.
//! Full-centralizer orbits are then unions of cells under the symmetry action.

use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use super::{build_curve, symmetry_action, upsilon_partition, Cell};
use crate::classify::fibre_finite;
use crate::roots::CartanType;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LineVerdict {
    Finite,
    TrivialAction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitCount {
    Finite(usize),
    Infinite,
}

impl OrbitCount {
    pub fn finite(self) -> Option<usize> {
        match self {
            OrbitCount::Finite(n) => Some(n),
            OrbitCount::Infinite => None,
        }
    }
}

impl fmt::Display for OrbitCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitCount::Finite(n) => write!(f, "{n}"),
            OrbitCount::Infinite => f.write_str("infinite"),
        }
    }
}

// A count is a JSON number, or the string "infinite".
impl Serialize for OrbitCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            OrbitCount::Finite(n) => s.serialize_u64(*n as u64),
            OrbitCount::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl<'de> Deserialize<'de> for OrbitCount {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct CountVisitor;
        impl Visitor<'_> for CountVisitor {
            type Value = OrbitCount;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a nonnegative integer or \"infinite\"")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<OrbitCount, E> {
                Ok(OrbitCount::Finite(v as usize))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<OrbitCount, E> {
                if v == "infinite" {
                    Ok(OrbitCount::Infinite)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }
        }
        d.deserialize_any(CountVisitor)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineCensus {
    pub line: usize,
    pub root_type: usize,
    pub index: usize,
    pub verdict: LineVerdict,
    /// Coefficient behind the verdict.
    pub reason: i64,
    /// Connected-centralizer orbits on the line; empty for trivial action.
    pub cells: Vec<Cell>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitCensus {
    pub cartan_type: CartanType,
    pub lines: Vec<LineCensus>,
    /// Full-centralizer orbits of the cells lying on finite lines.
    pub orbits: Vec<Vec<Cell>>,
    pub total: OrbitCount,
}

pub fn fibre_orbit_census(cartan_type: CartanType) -> OrbitCensus {
    let curve = build_curve(cartan_type);
    let action = symmetry_action(&curve);
    let mut lines = Vec::with_capacity(curve.lines.len());
    let mut finite_cells = Vec::new();
    for l in &curve.lines {
        let v = fibre_finite(cartan_type, l.root_type).expect("curve lines carry valid roots");
        let (verdict, cells) = if v.finite {
            let cells = upsilon_partition(&curve, l.id).expect("line is on the curve");
            finite_cells.extend(cells.iter().copied());
            (LineVerdict::Finite, cells)
        } else {
            (LineVerdict::TrivialAction, Vec::new())
        };
        lines.push(LineCensus {
            line: l.id,
            root_type: l.root_type,
            index: l.index,
            verdict,
            reason: v.reason,
            cells,
        });
    }
    let orbits = action.group(finite_cells);
    let total = if lines.iter().all(|l| l.verdict == LineVerdict::Finite) {
        OrbitCount::Finite(orbits.len())
    } else {
        OrbitCount::Infinite
    };
    OrbitCensus {
        cartan_type,
        lines,
        orbits,
        total,
    }
}

/// Number of full-centralizer orbits meeting the lines of type `alpha`;
/// equivalently the number of `B`-orbits on the subregular part of `u_α`.
pub fn b_orbit_count(cartan_type: CartanType, alpha: usize) -> Result<OrbitCount> {
    cartan_type.check_root(alpha)?;
    if !fibre_finite(cartan_type, alpha)?.finite {
        return Ok(OrbitCount::Infinite);
    }
    let curve = build_curve(cartan_type);
    let action = symmetry_action(&curve);
    let mut cells = Vec::new();
    for l in curve.lines_of_type(alpha) {
        cells.extend(upsilon_partition(&curve, l.id)?);
    }
    Ok(OrbitCount::Finite(action.group(cells).len()))
}
