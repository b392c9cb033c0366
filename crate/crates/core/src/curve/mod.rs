//! Dynkin curves as typed incidence structures.
//!
//! A line of type `α` meets exactly `−⟨β, α⟩` lines of type `β ≠ α`, each in a
//! single point, and lines of the same type are disjoint. For simply laced
//! types the curve is the dual graph of the Dynkin diagram; otherwise it is
//! the curve of the associated simply laced system with each line retyped by
//! the orbit of its hat type.
//!
//! Lines are identified by their hat node (0-based `id`), intersection points
//! by the index of the corresponding hat diagram edge. Both identities are
//! therefore shared between a folded curve and its hat curve.

pub mod census;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::roots::{build_for, fold_type, CartanType, FoldingData, RootSystem};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Line {
    pub id: usize,
    /// 1-based simple root.
    pub root_type: usize,
    /// 1-based index among lines of the same type.
    pub index: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub id: usize,
    /// The two line ids meeting here, smaller first.
    pub lines: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynkinCurve {
    pub cartan_type: CartanType,
    pub lines: Vec<Line>,
    pub points: Vec<Point>,
}

/// A piece of the partition of a line: an intersection point or the open
/// complement of all of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "carrier", rename_all = "kebab-case")]
pub enum Cell {
    IntersectionPoint(usize),
    OpenPart(usize),
}

impl DynkinCurve {
    pub fn line(&self, id: usize) -> Result<&Line> {
        self.lines
            .get(id)
            .ok_or_else(|| Error::Usage(format!("no line {id} on the curve of {}", self.cartan_type)))
    }

    pub fn points_on(&self, line: usize) -> impl Iterator<Item = &Point> + '_ {
        self.points.iter().filter(move |p| p.lines.contains(&line))
    }

    pub fn lines_of_type(&self, alpha: usize) -> impl Iterator<Item = &Line> + '_ {
        self.lines.iter().filter(move |l| l.root_type == alpha)
    }

    /// Checks every structural invariant of a Dynkin curve against the root
    /// system of its type.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let rs = build_for(self.cartan_type);
        let expected_lines: u32 = rs.length_class.iter().sum();
        if self.lines.len() != expected_lines as usize {
            return Err(format!(
                "{} lines, expected {}",
                self.lines.len(),
                expected_lines
            ));
        }
        for a in 1..=rs.rank() {
            let n = self.lines_of_type(a).count();
            if n != rs.length_class[a - 1] as usize {
                return Err(format!("{n} lines of type {a}"));
            }
            for l in self.lines_of_type(a) {
                if l.index == 0 || l.index > n {
                    return Err(format!("line index {} out of range", l.index));
                }
            }
        }
        let mut pairs = BTreeSet::new();
        for p in &self.points {
            let [a, b] = p.lines;
            if self.lines[a].root_type == self.lines[b].root_type {
                return Err(format!("point {} joins two lines of the same type", p.id));
            }
            if !pairs.insert((a.min(b), a.max(b))) {
                return Err(format!("lines {a} and {b} meet twice"));
            }
        }
        for l in &self.lines {
            for b in 1..=rs.rank() {
                if b == l.root_type {
                    continue;
                }
                let met = self
                    .points_on(l.id)
                    .filter(|p| {
                        let other = if p.lines[0] == l.id { p.lines[1] } else { p.lines[0] };
                        self.lines[other].root_type == b
                    })
                    .count() as i64;
                let expected = incidence_degree(&rs, l.root_type, b);
                if met != expected {
                    return Err(format!(
                        "line {} of type {} meets {met} lines of type {b}, expected {expected}",
                        l.id, l.root_type
                    ));
                }
            }
        }
        if !self.is_connected() {
            return Err("curve is not connected".into());
        }
        Ok(())
    }

    pub fn is_connected(&self) -> bool {
        if self.lines.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.lines.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(l) = queue.pop_front() {
            for p in self.points_on(l) {
                for &m in &p.lines {
                    if !seen[m] {
                        seen[m] = true;
                        queue.push_back(m);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Graphviz rendering: lines are nodes labelled `type:index`, points are
    /// edges.
    pub fn to_dot(&self) -> String {
        let name = |l: &Line| format!("\"{}:{}\"", l.root_type, l.index);
        let mut out = String::new();
        writeln!(out, "graph dynkin_curve_{} {{", self.cartan_type).unwrap();
        for l in &self.lines {
            writeln!(out, "  {};", name(l)).unwrap();
        }
        for p in &self.points {
            let [a, b] = p.lines;
            writeln!(
                out,
                "  {} -- {} [label=\"p{}\"];",
                name(&self.lines[a]),
                name(&self.lines[b]),
                p.id
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// How many lines of type `beta` a line of type `alpha` meets: `−⟨β, α⟩`.
pub fn incidence_degree(rs: &RootSystem, alpha: usize, beta: usize) -> i64 {
    -rs.cartan[beta - 1][alpha - 1]
}

pub fn build_curve(cartan_type: CartanType) -> DynkinCurve {
    let folding = if cartan_type.is_simply_laced() {
        None
    } else {
        Some(fold_type(cartan_type).expect("non-simply-laced types fold"))
    };
    build_curve_with(cartan_type, folding.as_ref())
}

// hat node -> (simple root, index among its lines)
type NodeLabel<'a> = dyn Fn(usize) -> (usize, usize) + 'a;

fn build_curve_with(cartan_type: CartanType, folding: Option<&FoldingData>) -> DynkinCurve {
    let (hat_type, root_of): (CartanType, Box<NodeLabel>) = match folding {
        None => (cartan_type, Box::new(|node| (node, 1))),
        Some(f) => (
            f.hat_system.cartan_type,
            Box::new(move |node| {
                let alpha = f.root_of_hat_node(node);
                let orbit = f.orbit_of_root(alpha);
                let index = orbit.iter().position(|&h| h == node).expect("node in orbit") + 1;
                (alpha, index)
            }),
        ),
    };
    let lines = (1..=hat_type.rank)
        .map(|node| {
            let (root_type, index) = root_of(node);
            Line {
                id: node - 1,
                root_type,
                index,
            }
        })
        .collect();
    let points = hat_type
        .diagram_edges()
        .into_iter()
        .enumerate()
        .map(|(id, (a, b))| Point {
            id,
            lines: [a - 1, b - 1],
        })
        .collect();
    DynkinCurve {
        cartan_type,
        lines,
        points,
    }
}

/// The curve of the associated simply laced system with its own labels.
pub fn hat_curve(cartan_type: CartanType) -> Result<DynkinCurve> {
    let f = fold_type(cartan_type)?;
    Ok(build_curve_with(f.hat_system.cartan_type, None))
}

/// The partition of a line into its intersection points and the open
/// complement.
pub fn upsilon_partition(curve: &DynkinCurve, line: usize) -> Result<Vec<Cell>> {
    curve.line(line)?;
    let mut cells: Vec<Cell> = curve
        .points_on(line)
        .map(|p| Cell::IntersectionPoint(p.id))
        .collect();
    cells.push(Cell::OpenPart(line));
    Ok(cells)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvePermutation {
    pub lines: Vec<usize>,
    pub points: Vec<usize>,
}

/// The component group acting on the curve through generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryAction {
    pub generators: Vec<CurvePermutation>,
    pub group_order: usize,
}

impl SymmetryAction {
    pub fn apply(&self, g: usize, cell: Cell) -> Cell {
        let perm = &self.generators[g];
        match cell {
            Cell::IntersectionPoint(p) => Cell::IntersectionPoint(perm.points[p]),
            Cell::OpenPart(l) => Cell::OpenPart(perm.lines[l]),
        }
    }

    pub fn orbit_of(&self, cell: Cell) -> BTreeSet<Cell> {
        let mut orbit = BTreeSet::from([cell]);
        let mut stack = vec![cell];
        while let Some(c) = stack.pop() {
            for g in 0..self.generators.len() {
                let d = self.apply(g, c);
                if orbit.insert(d) {
                    stack.push(d);
                }
            }
        }
        orbit
    }

    /// Groups cells into orbits; each orbit sorted, orbits ordered by their
    /// smallest cell. Cells outside `cells` reached by the action are kept.
    pub fn group(&self, cells: impl IntoIterator<Item = Cell>) -> Vec<Vec<Cell>> {
        let mut by_min: BTreeMap<Cell, Vec<Cell>> = BTreeMap::new();
        for c in cells {
            let orbit = self.orbit_of(c);
            let min = *orbit.iter().next().expect("orbit contains its cell");
            by_min.entry(min).or_insert_with(|| orbit.into_iter().collect());
        }
        by_min.into_values().collect()
    }
}

pub fn symmetry_action(curve: &DynkinCurve) -> SymmetryAction {
    if curve.cartan_type.is_simply_laced() {
        return SymmetryAction {
            generators: Vec::new(),
            group_order: 1,
        };
    }
    let folding = fold_type(curve.cartan_type).expect("non-simply-laced types fold");
    let point_of: BTreeMap<(usize, usize), usize> = curve
        .points
        .iter()
        .map(|p| ((p.lines[0].min(p.lines[1]), p.lines[0].max(p.lines[1])), p.id))
        .collect();
    let generators = folding
        .generators
        .iter()
        .map(|g| {
            let points = curve
                .points
                .iter()
                .map(|p| {
                    let (a, b) = (g[p.lines[0]], g[p.lines[1]]);
                    point_of[&(a.min(b), a.max(b))]
                })
                .collect();
            CurvePermutation {
                lines: g.clone(),
                points,
            }
        })
        .collect();
    SymmetryAction {
        generators,
        group_order: folding.group_order,
    }
}

/// Whether the subregular orbit meets `u_α ∩ u_β`: exactly when
/// `⟨α, β⟩ ≠ 0`.
pub fn intersection_nonempty(rs: &RootSystem, alpha: usize, beta: usize) -> Result<bool> {
    rs.cartan_type.check_root(alpha)?;
    rs.cartan_type.check_root(beta)?;
    if alpha == beta {
        return Err(Error::Usage("intersection needs two distinct simple roots".into()));
    }
    Ok(rs.cartan[alpha - 1][beta - 1] != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::TypeLabel;

    fn t(l: TypeLabel, r: usize) -> CartanType {
        CartanType::new(l, r).unwrap()
    }

    #[test]
    fn g2_curve() {
        let c = build_curve(t(TypeLabel::G, 2));
        assert_eq!(c.lines.len(), 4);
        let alpha: Vec<_> = c.lines_of_type(1).collect();
        assert_eq!(alpha.len(), 1);
        assert_eq!(c.points_on(alpha[0].id).count(), 3);
        for l in c.lines_of_type(2) {
            let pts: Vec<_> = c.points_on(l.id).collect();
            assert_eq!(pts.len(), 1);
            assert!(pts[0].lines.contains(&alpha[0].id));
        }
        c.check_invariants().unwrap();
    }

    #[test]
    fn type_a_and_b2_curves() {
        let c = build_curve(t(TypeLabel::A, 4));
        assert_eq!((c.lines.len(), c.points.len()), (4, 3));
        let c = build_curve(t(TypeLabel::B, 2));
        let types: Vec<usize> = c.lines.iter().map(|l| l.root_type).collect();
        assert_eq!(types, vec![1, 2, 1]);
        assert_eq!(c.points.len(), 2);
        c.check_invariants().unwrap();
    }

    #[test]
    fn symmetry_examples() {
        let c = build_curve(t(TypeLabel::B, 2));
        let s = symmetry_action(&c);
        assert_eq!(s.generators.len(), 1);
        assert_eq!(s.generators[0].lines, vec![2, 1, 0]);
        assert_eq!(s.generators[0].points, vec![1, 0]);

        let c = build_curve(t(TypeLabel::A, 5));
        let s = symmetry_action(&c);
        assert!(s.generators.is_empty());
        assert_eq!(s.group_order, 1);

        let c = build_curve(t(TypeLabel::G, 2));
        let s = symmetry_action(&c);
        assert_eq!(s.group_order, 6);
        let beta_line = c.lines_of_type(2).next().unwrap().id;
        let orbit = s.orbit_of(Cell::OpenPart(beta_line));
        let expected: BTreeSet<Cell> = c.lines_of_type(2).map(|l| Cell::OpenPart(l.id)).collect();
        assert_eq!(orbit, expected);
    }

    #[test]
    fn upsilon_examples() {
        let c = build_curve(t(TypeLabel::A, 3));
        assert_eq!(upsilon_partition(&c, 1).unwrap().len(), 3);
        assert_eq!(upsilon_partition(&c, 0).unwrap().len(), 2);
        assert!(upsilon_partition(&c, 3).is_err());
        let c = build_curve(t(TypeLabel::G, 2));
        for l in c.lines_of_type(2) {
            assert_eq!(upsilon_partition(&c, l.id).unwrap().len(), 2);
        }
    }

    #[test]
    fn intersections() {
        let a3 = build_for(t(TypeLabel::A, 3));
        assert!(intersection_nonempty(&a3, 1, 2).unwrap());
        assert!(!intersection_nonempty(&a3, 1, 3).unwrap());
        assert!(matches!(intersection_nonempty(&a3, 2, 2), Err(Error::Usage(_))));
        let g2 = build_for(t(TypeLabel::G, 2));
        assert!(intersection_nonempty(&g2, 1, 2).unwrap());
    }

    #[test]
    fn dot_output() {
        let dot = build_curve(t(TypeLabel::B, 2)).to_dot();
        assert_eq!(
            dot,
            "graph dynkin_curve_B2 {\n  \"1:1\";\n  \"2:1\";\n  \"1:2\";\n  \"1:1\" -- \"2:1\" [label=\"p0\"];\n  \"2:1\" -- \"1:2\" [label=\"p1\"];\n}\n"
        );
    }
}
