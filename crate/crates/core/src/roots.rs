//! Irreducible root systems over a Bourbaki-labelled base.
//!
//! Roots are integer coefficient vectors over the simple roots. All pairings
//! are read off the Cartan matrix, so no Euclidean realization is needed.
//!
//! The pairing convention is `⟨αᵢ, αⱼ⟩ = 2(αᵢ, αⱼ)/(αⱼ, αⱼ)`, stored as
//! `cartan[i][j]`. For `G₂` this gives `⟨α₂, α₁⟩ = −3`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLabel {
    pub const ALL: [TypeLabel; 7] = [
        TypeLabel::A,
        TypeLabel::B,
        TypeLabel::C,
        TypeLabel::D,
        TypeLabel::E,
        TypeLabel::F,
        TypeLabel::G,
    ];

    pub fn as_char(self) -> char {
        match self {
            TypeLabel::A => 'A',
            TypeLabel::B => 'B',
            TypeLabel::C => 'C',
            TypeLabel::D => 'D',
            TypeLabel::E => 'E',
            TypeLabel::F => 'F',
            TypeLabel::G => 'G',
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(TypeLabel::A),
            "B" | "b" => Ok(TypeLabel::B),
            "C" | "c" => Ok(TypeLabel::C),
            "D" | "d" => Ok(TypeLabel::D),
            "E" | "e" => Ok(TypeLabel::E),
            "F" | "f" => Ok(TypeLabel::F),
            "G" | "g" => Ok(TypeLabel::G),
            other => Err(Error::UnknownLabel(other.to_string())),
        }
    }
}

/// A validated irreducible Cartan type such as `B₃` or `E₈`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub label: TypeLabel,
    pub rank: usize,
}

impl CartanType {
    pub fn new(label: TypeLabel, rank: usize) -> Result<Self> {
        let ok = match label {
            TypeLabel::A => rank >= 1,
            TypeLabel::B | TypeLabel::C => rank >= 2,
            TypeLabel::D => rank >= 4,
            TypeLabel::E => (6..=8).contains(&rank),
            TypeLabel::F => rank == 4,
            TypeLabel::G => rank == 2,
        };
        if ok {
            Ok(CartanType { label, rank })
        } else {
            Err(Error::InvalidType {
                label: label.as_char(),
                rank,
            })
        }
    }

    // Only used for the hat system of C₂, which is D₃ ≅ A₃ drawn as a D-diagram.
    fn new_unchecked(label: TypeLabel, rank: usize) -> Self {
        CartanType { label, rank }
    }

    /// Every valid type with `rank <= max_rank`, in a fixed order.
    pub fn all_up_to(max_rank: usize) -> Vec<CartanType> {
        let mut out = Vec::new();
        for label in TypeLabel::ALL {
            for rank in 1..=max_rank {
                if let Ok(t) = CartanType::new(label, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.label, TypeLabel::A | TypeLabel::D | TypeLabel::E)
    }

    /// `C₂` and `B₂` are the same group up to isogeny; this returns `B₂` for
    /// `C₂` and `self` otherwise.
    pub fn up_to_isogeny(self) -> CartanType {
        if self.label == TypeLabel::C && self.rank == 2 {
            CartanType::new_unchecked(TypeLabel::B, 2)
        } else {
            self
        }
    }

    pub fn check_root(self, alpha: usize) -> Result<()> {
        if alpha == 0 || alpha > self.rank {
            Err(Error::RootIndex {
                index: alpha,
                rank: self.rank,
            })
        } else {
            Ok(())
        }
    }

    /// Squared length of each simple root relative to a short root.
    pub fn length_classes(self) -> Vec<u32> {
        let r = self.rank;
        (1..=r)
            .map(|i| match self.label {
                TypeLabel::A | TypeLabel::D | TypeLabel::E => 1,
                TypeLabel::B => {
                    if i < r {
                        2
                    } else {
                        1
                    }
                }
                TypeLabel::C => {
                    if i < r {
                        1
                    } else {
                        2
                    }
                }
                TypeLabel::F => {
                    if i <= 2 {
                        2
                    } else {
                        1
                    }
                }
                TypeLabel::G => {
                    if i == 1 {
                        1
                    } else {
                        3
                    }
                }
            })
            .collect()
    }

    /// Edges of the Dynkin diagram as 1-based node pairs `(i, j)` with `i < j`.
    pub fn diagram_edges(self) -> Vec<(usize, usize)> {
        let r = self.rank;
        match self.label {
            TypeLabel::A | TypeLabel::B | TypeLabel::C | TypeLabel::F | TypeLabel::G => {
                (1..r).map(|i| (i, i + 1)).collect()
            }
            TypeLabel::D => {
                let mut edges: Vec<_> = (1..r - 1).map(|i| (i, i + 1)).collect();
                edges.push((r - 2, r));
                edges.sort_unstable();
                edges
            }
            TypeLabel::E => {
                let mut edges = vec![(1, 3), (2, 4)];
                edges.extend((3..r).map(|i| (i, i + 1)));
                edges.sort_unstable();
                edges
            }
        }
    }

    fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let lc = self.length_classes();
        let mut a = vec![vec![0i64; r]; r];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j) in self.diagram_edges() {
            let (i, j) = (i - 1, j - 1);
            let (long, short) = if lc[i] >= lc[j] { (i, j) } else { (j, i) };
            a[long][short] = -i64::from(lc[long] / lc[short]);
            a[short][long] = -1;
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.label, self.rank)
    }
}

/// A root as its coefficient vector over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn simple(rank: usize, alpha: usize) -> Root {
        let mut v = vec![0; rank];
        v[alpha - 1] = 1;
        Root(v)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `Σ cᵢ αᵢ` with `α` printed as `a`, e.g. `a1+2a2`.
    pub fn label(&self) -> String {
        let mut s = String::new();
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            if c.abs() != 1 {
                s.push_str(&c.abs().to_string());
            }
            s.push_str(&format!("a{}", i + 1));
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    /// `cartan[i][j] = ⟨αᵢ₊₁, αⱼ₊₁⟩`.
    pub cartan: Vec<Vec<i64>>,
    /// Sorted by height, then lexicographically.
    pub positive_roots: Vec<Root>,
    pub highest_root: Root,
    pub length_class: Vec<u32>,
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn simple_root(&self, alpha: usize) -> Root {
        Root::simple(self.rank(), alpha)
    }

    pub fn contains(&self, root: &Root) -> bool {
        self.index_of_positive(root).is_some() || self.index_of_positive(&root.neg()).is_some()
    }

    pub fn index_of_positive(&self, root: &Root) -> Option<usize> {
        self.positive_roots.iter().position(|r| r == root)
    }

    /// The symmetric form in units where a short root has squared length 2.
    pub fn inner_product(&self, x: &Root, y: &Root) -> i64 {
        let r = self.rank();
        let mut total = 0;
        for i in 0..r {
            if x.0[i] == 0 {
                continue;
            }
            for j in 0..r {
                // (αᵢ, αⱼ) = ⟨αᵢ, αⱼ⟩ (αⱼ, αⱼ)/2 = cartan[i][j] * length_class[j]
                total += x.0[i] * y.0[j] * self.cartan[i][j] * i64::from(self.length_class[j]);
            }
        }
        total
    }

    /// `⟨x, αᵢ⟩` for an arbitrary root `x`, extended linearly in `x`.
    pub fn pairing_with_simple(&self, x: &Root, alpha: usize) -> i64 {
        x.0.iter()
            .enumerate()
            .map(|(j, c)| c * self.cartan[j][alpha - 1])
            .sum()
    }

    pub fn dim_borel(&self) -> usize {
        self.positive_roots.len() + self.rank()
    }
}

pub fn build_root_system(label: TypeLabel, rank: usize) -> Result<RootSystem> {
    Ok(build_for(CartanType::new(label, rank)?))
}

pub fn build_for(cartan_type: CartanType) -> RootSystem {
    let cartan = cartan_type.cartan_matrix();
    let length_class = cartan_type.length_classes();
    let positive_roots = generate_positive_roots(&cartan);
    let highest_root = positive_roots
        .iter()
        .max_by_key(|r| r.height())
        .cloned()
        .expect("a root system has at least one root");
    RootSystem {
        cartan_type,
        cartan,
        positive_roots,
        highest_root,
        length_class,
    }
}

/// Generates the positive roots from the simple roots with the root-string
/// rule: for `γ ≠ αᵢ` with `αᵢ`-string `γ − pαᵢ, …, γ + qαᵢ`, we have
/// `p − q = ⟨γ, αᵢ⟩`, so `γ + αᵢ` is a root iff `p > ⟨γ, αᵢ⟩`.
pub fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let r = cartan.len();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (1..=r).map(|i| Root::simple(r, i).0).collect();
    known.extend(layer.iter().cloned());
    let mut all = layer.clone();

    while !layer.is_empty() {
        let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
        for gamma in &layer {
            for i in 0..r {
                let is_simple_i = gamma.iter().enumerate().all(|(k, &c)| c == i64::from(k == i));
                if is_simple_i {
                    continue;
                }
                let mut p = 0;
                let mut down = gamma.clone();
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !known.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let pairing: i64 = (0..r).map(|j| gamma[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = gamma.clone();
                    up[i] += 1;
                    if !known.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        layer = next.into_iter().collect();
        known.extend(layer.iter().cloned());
        all.extend(layer.iter().cloned());
    }

    let mut roots: Vec<Root> = all.into_iter().map(Root).collect();
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    roots
}

pub fn cartan_pairing(rs: &RootSystem, i: usize, j: usize) -> Result<i64> {
    rs.cartan_type.check_root(i)?;
    rs.cartan_type.check_root(j)?;
    Ok(rs.cartan[i - 1][j - 1])
}

pub fn coefficient(rs: &RootSystem, root: &Root, i: usize) -> Result<i64> {
    rs.cartan_type.check_root(i)?;
    if root.0.len() != rs.rank() || !rs.contains(root) {
        return Err(Error::Domain(format!("{root} is not a root of {}", rs.cartan_type)));
    }
    Ok(root.0[i - 1])
}

/// The associated simply laced system of a non-simply-laced type together
/// with the symmetry group acting on its diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldingData {
    pub base_type: CartanType,
    pub hat_system: RootSystem,
    /// Generators of the symmetry group as 0-based permutations of hat nodes.
    pub generators: Vec<Vec<usize>>,
    /// Orbits of hat nodes (1-based, each sorted), ordered by smallest member.
    pub orbit_partition: Vec<Vec<usize>>,
    /// `orbit_to_root[k]` is the 1-based base simple root for orbit `k`.
    pub orbit_to_root: Vec<usize>,
    pub group_order: usize,
}

impl FoldingData {
    /// The hat nodes (1-based) whose orbit maps to `alpha`.
    pub fn orbit_of_root(&self, alpha: usize) -> &[usize] {
        let k = self
            .orbit_to_root
            .iter()
            .position(|&a| a == alpha)
            .expect("orbit_to_root is a bijection");
        &self.orbit_partition[k]
    }

    /// The base simple root (1-based) carried by a hat node (1-based).
    pub fn root_of_hat_node(&self, node: usize) -> usize {
        let k = self
            .orbit_partition
            .iter()
            .position(|o| o.contains(&node))
            .expect("orbits cover the hat diagram");
        self.orbit_to_root[k]
    }
}

fn hat_type(base: CartanType) -> Option<CartanType> {
    let r = base.rank;
    match base.label {
        TypeLabel::B => Some(CartanType::new_unchecked(TypeLabel::A, 2 * r - 1)),
        TypeLabel::C => Some(CartanType::new_unchecked(TypeLabel::D, r + 1)),
        TypeLabel::F => Some(CartanType::new_unchecked(TypeLabel::E, 6)),
        TypeLabel::G => Some(CartanType::new_unchecked(TypeLabel::D, 4)),
        _ => None,
    }
}

// The diagram symmetries generating Γ, as 0-based node permutations of the hat
// diagram.
fn hat_generators(base: CartanType) -> Vec<Vec<usize>> {
    let r = base.rank;
    match base.label {
        TypeLabel::B => {
            let m = 2 * r - 1;
            vec![(0..m).map(|i| m - 1 - i).collect()]
        }
        TypeLabel::C => {
            let m = r + 1;
            let mut p: Vec<usize> = (0..m).collect();
            p.swap(m - 2, m - 1);
            vec![p]
        }
        TypeLabel::F => vec![vec![5, 1, 4, 3, 2, 0]],
        TypeLabel::G => vec![vec![2, 1, 3, 0], vec![0, 1, 3, 2]],
        _ => Vec::new(),
    }
}

pub fn fold(label: TypeLabel, rank: usize) -> Result<FoldingData> {
    let base = CartanType::new(label, rank)?;
    fold_type(base)
}

pub fn fold_type(base: CartanType) -> Result<FoldingData> {
    let hat = hat_type(base).ok_or_else(|| Error::NoFolding(base.to_string()))?;
    let hat_system = build_for(hat);
    let generators = hat_generators(base);
    let m = hat.rank;
    let hat_edges: BTreeSet<(usize, usize)> =
        hat.diagram_edges().into_iter().map(|(a, b)| (a - 1, b - 1)).collect();

    for g in &generators {
        for &(a, b) in &hat_edges {
            let (x, y) = (g[a].min(g[b]), g[a].max(g[b]));
            assert!(hat_edges.contains(&(x, y)), "generator is not a diagram automorphism");
        }
    }

    let group_order = permutation_group_order(&generators, m);

    // orbits by closure
    let mut orbit_id = vec![usize::MAX; m];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..m {
        if orbit_id[start] != usize::MAX {
            continue;
        }
        let k = orbits.len();
        let mut members = vec![start];
        orbit_id[start] = k;
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for g in &generators {
                let y = g[x];
                if orbit_id[y] == usize::MAX {
                    orbit_id[y] = k;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        orbits.push(members);
    }

    let lc = base.length_classes();
    let base_edges: BTreeSet<(usize, usize)> =
        base.diagram_edges().into_iter().map(|(a, b)| (a - 1, b - 1)).collect();
    let quotient_edges: BTreeSet<(usize, usize)> = hat_edges
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (orbit_id[a], orbit_id[b]);
            (x.min(y), x.max(y))
        })
        .collect();

    let matchings = quotient_isomorphisms(&orbits, &quotient_edges, &base_edges, &lc);
    if matchings.len() != 1 {
        return Err(Error::Domain(format!(
            "folding of {base} is not canonical ({} matchings)",
            matchings.len()
        )));
    }
    let orbit_to_root = matchings[0].iter().map(|&a| a + 1).collect();

    Ok(FoldingData {
        base_type: base,
        hat_system,
        generators,
        orbit_partition: orbits
            .into_iter()
            .map(|o| o.into_iter().map(|x| x + 1).collect())
            .collect(),
        orbit_to_root,
        group_order,
    })
}

// All bijections orbit -> base node with orbit size equal to the length class
// and quotient edges mapping exactly onto base edges.
fn quotient_isomorphisms(
    orbits: &[Vec<usize>],
    quotient_edges: &BTreeSet<(usize, usize)>,
    base_edges: &BTreeSet<(usize, usize)>,
    length_class: &[u32],
) -> Vec<Vec<usize>> {
    #[allow(clippy::too_many_arguments)]
    fn extend(
        k: usize,
        assign: &mut Vec<usize>,
        used: &mut [bool],
        orbits: &[Vec<usize>],
        quotient_edges: &BTreeSet<(usize, usize)>,
        base_edges: &BTreeSet<(usize, usize)>,
        length_class: &[u32],
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == orbits.len() {
            let mapped: BTreeSet<(usize, usize)> = quotient_edges
                .iter()
                .map(|&(a, b)| (assign[a].min(assign[b]), assign[a].max(assign[b])))
                .collect();
            if mapped == *base_edges && quotient_edges.len() == base_edges.len() {
                out.push(assign.clone());
            }
            return;
        }
        for node in 0..length_class.len() {
            if used[node] || length_class[node] as usize != orbits[k].len() {
                continue;
            }
            used[node] = true;
            assign.push(node);
            extend(k + 1, assign, used, orbits, quotient_edges, base_edges, length_class, out);
            assign.pop();
            used[node] = false;
        }
    }

    let mut out = Vec::new();
    if orbits.len() != length_class.len() {
        return out;
    }
    let mut used = vec![false; length_class.len()];
    extend(
        0,
        &mut Vec::new(),
        &mut used,
        orbits,
        quotient_edges,
        base_edges,
        length_class,
        &mut out,
    );
    out
}

fn permutation_group_order(generators: &[Vec<usize>], m: usize) -> usize {
    let identity: Vec<usize> = (0..m).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    seen.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(p) = frontier.pop() {
        for g in generators {
            let q: Vec<usize> = p.iter().map(|&x| g[x]).collect();
            if seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    seen.len()
}

/// The coefficient of the hat highest root at any hat node in the orbit of
/// `αᵢ`; for simply laced types this is the coefficient of `αᵢ` in the
/// highest root.
pub fn folded_coefficient(cartan_type: CartanType, alpha: usize) -> Result<i64> {
    cartan_type.check_root(alpha)?;
    if cartan_type.is_simply_laced() {
        let rs = build_for(cartan_type);
        return Ok(rs.highest_root.0[alpha - 1]);
    }
    let folding = fold_type(cartan_type)?;
    let rho_hat = &folding.hat_system.highest_root;
    let orbit = folding.orbit_of_root(alpha);
    let value = rho_hat.0[orbit[0] - 1];
    debug_assert!(orbit.iter().all(|&h| rho_hat.0[h - 1] == value));
    Ok(value)
}
