//! Exact matrix models of `sl_n`, `so_{2n+1}`, `sp_{2n}` and `so_{2n}`.
//!
//! The natural module has ordered basis `v_1, …, v_n, v_0, v_{-n}, …, v_{-1}`
//! (`v_0` only for `so_{2n+1}`, and only `v_1, …, v_n` for `sl_n`), with
//! `(v_i, v_{-j}) = δ_ij` and `(v_0, v_0) = 1`. For `sp_{2n}` the form is
//! alternating, so `(v_{-j}, v_i) = −δ_ij`. The Borel subalgebra is the upper
//! triangular part and the torus the diagonal part.
//!
//! Matrix positions are 0-based; the signed label `i` of `v_i` maps to
//! position `i − 1` for `i > 0`, to the middle for `i = 0`, and to `N + i`
//! for `i < 0`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::linalg::{jordan_partition as jordan_of, solve_in_span, span_dim, Field, IntMatrix, Matrix, Q};
use crate::roots::{build_for, CartanType, Root, RootSystem, TypeLabel};
use crate::{Error, Result};

/// Seed of the random combinations tried by [`all_nilpotent_heuristic`].
pub const HEURISTIC_SEED: u64 = 0x5eed_2008;
/// Number of random combinations tried by [`all_nilpotent_heuristic`].
pub const HEURISTIC_SAMPLES: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Sl,
    SoOdd,
    Sp,
    SoEven,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Sl, Family::SoOdd, Family::Sp, Family::SoEven];

    pub fn min_n(self) -> usize {
        match self {
            Family::SoEven => 4,
            _ => 2,
        }
    }

    pub fn matrix_size(self, n: usize) -> usize {
        match self {
            Family::Sl => n,
            Family::SoOdd => 2 * n + 1,
            Family::Sp | Family::SoEven => 2 * n,
        }
    }

    pub fn cartan_type(self, n: usize) -> Result<CartanType> {
        match self {
            Family::Sl => CartanType::new(TypeLabel::A, n.saturating_sub(1)),
            Family::SoOdd => CartanType::new(TypeLabel::B, n),
            Family::Sp => CartanType::new(TypeLabel::C, n),
            Family::SoEven => CartanType::new(TypeLabel::D, n),
        }
    }

    /// Jordan partition of the subregular class.
    pub fn subregular_partition(self, n: usize) -> Vec<usize> {
        let mut p = match self {
            Family::Sl => vec![n - 1, 1],
            Family::SoOdd => vec![2 * n - 1, 1, 1],
            Family::Sp => vec![2 * n - 2, 2],
            Family::SoEven => vec![2 * n - 3, 3],
        };
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Sl => "sl",
            Family::SoOdd => "so-odd",
            Family::Sp => "sp",
            Family::SoEven => "so-even",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sl" | "SL" => Ok(Family::Sl),
            "so-odd" | "SO-odd" => Ok(Family::SoOdd),
            "sp" | "SP" => Ok(Family::Sp),
            "so-even" | "SO-even" => Ok(Family::SoEven),
            other => Err(Error::Usage(format!("unknown family '{other}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootVector {
    pub root: Root,
    pub matrix: IntMatrix,
}

#[derive(Clone, Debug)]
pub struct ClassicalAlgebra {
    pub family: Family,
    pub n: usize,
    pub size: usize,
    pub gram: Option<IntMatrix>,
    pub root_system: RootSystem,
    pub toral: Vec<IntMatrix>,
    /// In the order of `root_system.positive_roots`.
    pub positive: Vec<RootVector>,
    /// `negative[k]` has root `−positive[k].root`.
    pub negative: Vec<RootVector>,
}

pub fn build_algebra(family: Family, n: usize) -> Result<ClassicalAlgebra> {
    if n < family.min_n() {
        return Err(Error::Usage(format!(
            "{family} needs n >= {}, got {n}",
            family.min_n()
        )));
    }
    let root_system = build_for(family.cartan_type(n)?);
    let size = family.matrix_size(n);
    let gram = gram_matrix(family, n);

    let mut alg = ClassicalAlgebra {
        family,
        n,
        size,
        gram,
        root_system,
        toral: Vec::new(),
        positive: Vec::new(),
        negative: Vec::new(),
    };
    alg.toral = alg.toral_basis();

    let mut by_root: BTreeMap<Vec<i64>, IntMatrix> = BTreeMap::new();
    for a in 0..size {
        for b in 0..size {
            if a == b {
                continue;
            }
            let y = IntMatrix::unit(size, a, b);
            let x = match family {
                Family::Sl => y,
                _ => y.add_int(&alg.star(&y)),
            };
            let Some((_, _, lead)) = x.first_nonzero() else {
                continue;
            };
            let weight: Vec<i64> = alg
                .weight(a)
                .iter()
                .zip(alg.weight(b))
                .map(|(p, q)| p - q)
                .collect();
            let coeffs = alg.coefficients_of_weight(&weight);
            by_root.entry(coeffs).or_insert_with(|| {
                debug_assert!(x.as_slice().iter().all(|v| v % lead == 0));
                x.map(|v| v / lead)
            });
        }
    }

    let mut positive = Vec::new();
    let mut negative = Vec::new();
    for root in &alg.root_system.positive_roots {
        let pos = by_root.remove(&root.0).ok_or_else(|| {
            Error::Domain(format!("matrix model of {family}{n} lacks root {root}"))
        })?;
        let neg = by_root.remove(&root.neg().0).ok_or_else(|| {
            Error::Domain(format!("matrix model of {family}{n} lacks root -{root}"))
        })?;
        positive.push(RootVector {
            root: root.clone(),
            matrix: pos,
        });
        negative.push(RootVector {
            root: root.neg(),
            matrix: neg,
        });
    }
    if !by_root.is_empty() {
        return Err(Error::Domain(format!(
            "matrix model of {family}{n} has weights outside the root system"
        )));
    }
    alg.positive = positive;
    alg.negative = negative;
    Ok(alg)
}

fn gram_matrix(family: Family, n: usize) -> Option<IntMatrix> {
    let size = family.matrix_size(n);
    let mut j = IntMatrix::zeros_int(size, size);
    match family {
        Family::Sl => return None,
        Family::SoOdd | Family::SoEven => {
            for p in 0..size {
                j.set(p, size - 1 - p, 1);
            }
        }
        Family::Sp => {
            for p in 0..size {
                j.set(p, size - 1 - p, if p < n { 1 } else { -1 });
            }
        }
    }
    Some(j)
}

impl ClassicalAlgebra {
    pub fn cartan_type(&self) -> CartanType {
        self.root_system.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.root_system.rank()
    }

    pub fn dim(&self) -> usize {
        self.toral.len() + 2 * self.positive.len()
    }

    /// Position of the basis vector `v_label`.
    pub fn pos(&self, label: i64) -> usize {
        let n = self.n as i64;
        match self.family {
            Family::Sl => {
                assert!(label >= 1 && label <= n, "bad label {label}");
                (label - 1) as usize
            }
            _ => {
                if label > 0 {
                    assert!(label <= n);
                    (label - 1) as usize
                } else if label == 0 {
                    assert_eq!(self.family, Family::SoOdd);
                    self.n
                } else {
                    assert!(-label <= n);
                    (self.size as i64 + label) as usize
                }
            }
        }
    }

    pub fn mirror(&self, p: usize) -> usize {
        self.size - 1 - p
    }

    /// Weight of `v` at position `p` in the `ε` coordinates.
    fn weight(&self, p: usize) -> Vec<i64> {
        let mut w = vec![0; self.n];
        match self.family {
            Family::Sl => w[p] = 1,
            _ => {
                if p < self.n {
                    w[p] = 1;
                } else if p >= self.size - self.n {
                    w[self.size - 1 - p] = -1;
                }
            }
        }
        w
    }

    // Coefficients over the Bourbaki simple roots of an ε-weight.
    fn coefficients_of_weight(&self, w: &[i64]) -> Vec<i64> {
        let n = self.n;
        let prefix = |k: usize| -> i64 { w[..k].iter().sum() };
        match self.family {
            Family::Sl => (1..n).map(prefix).collect(),
            Family::SoOdd => (1..=n).map(prefix).collect(),
            Family::Sp => {
                let mut c: Vec<i64> = (1..n).map(prefix).collect();
                let total = prefix(n);
                debug_assert_eq!(total % 2, 0);
                c.push(total / 2);
                c
            }
            Family::SoEven => {
                let mut c: Vec<i64> = (1..=n - 2).map(prefix).collect();
                let s = prefix(n - 1);
                let last = w[n - 1];
                debug_assert_eq!((s + last) % 2, 0);
                c.push((s - last) / 2);
                c.push((s + last) / 2);
                c
            }
        }
    }

    // X* = −J⁻¹ Xᵀ J; the algebra is the fixed space of X ↦ X*.
    fn star(&self, x: &IntMatrix) -> IntMatrix {
        let j = self.gram.as_ref().expect("form families have a Gram matrix");
        let jt = j.mul_int(&x.transpose()).mul_int(j);
        // J⁻¹ = J for the symmetric forms and −J for the alternating one
        match self.family {
            Family::Sp => jt,
            _ => jt.scale_int(-1),
        }
    }

    fn toral_basis(&self) -> Vec<IntMatrix> {
        let size = self.size;
        match self.family {
            Family::Sl => (0..size - 1)
                .map(|i| {
                    IntMatrix::unit(size, i, i).add_int(&IntMatrix::unit(size, i + 1, i + 1).scale_int(-1))
                })
                .collect(),
            _ => (0..self.n)
                .map(|i| {
                    let m = self.mirror(i);
                    IntMatrix::unit(size, i, i).add_int(&IntMatrix::unit(size, m, m).scale_int(-1))
                })
                .collect(),
        }
    }

    /// `trace X = 0` for `sl`, `XᵀJ + JX = 0` otherwise.
    pub fn contains(&self, x: &IntMatrix) -> bool {
        match &self.gram {
            None => (0..self.size).map(|i| *x.get(i, i)).sum::<i64>() == 0,
            Some(j) => x.transpose().mul_int(j).add_int(&j.mul_int(x)).is_zero_int(),
        }
    }

    pub fn root_vector(&self, root: &Root) -> Option<&IntMatrix> {
        self.positive
            .iter()
            .chain(&self.negative)
            .find(|rv| &rv.root == root)
            .map(|rv| &rv.matrix)
    }

    pub fn basis(&self) -> Vec<&IntMatrix> {
        self.toral
            .iter()
            .chain(self.positive.iter().map(|rv| &rv.matrix))
            .chain(self.negative.iter().map(|rv| &rv.matrix))
            .collect()
    }

    pub fn borel_basis(&self) -> Vec<&IntMatrix> {
        self.toral
            .iter()
            .chain(self.positive.iter().map(|rv| &rv.matrix))
            .collect()
    }

    pub fn nilradical_basis(&self) -> Vec<&RootVector> {
        self.positive.iter().collect()
    }

    /// Root vectors spanning `u_α`: every positive root except `α`.
    pub fn minimal_nilradical_basis(&self, alpha: usize) -> Vec<&RootVector> {
        let a = self.root_system.simple_root(alpha);
        self.positive.iter().filter(|rv| rv.root != a).collect()
    }

    /// Root vectors spanning `u_α ∩ u_β`.
    pub fn intersection_basis(&self, alpha: usize, beta: usize) -> Vec<&RootVector> {
        let a = self.root_system.simple_root(alpha);
        let b = self.root_system.simple_root(beta);
        self.positive
            .iter()
            .filter(|rv| rv.root != a && rv.root != b)
            .collect()
    }

    /// Coordinates of `x` in the root-vector basis of the nilradical.
    pub fn nilradical_coordinates(&self, x: &IntMatrix) -> Option<Vec<Q>> {
        let basis: Vec<Matrix<Q>> = self.positive.iter().map(|rv| rv.matrix.to_field()).collect();
        solve_in_span(&basis, &x.to_field())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubregularRep {
    pub family: Family,
    pub n: usize,
    pub target_alpha: usize,
    pub matrix: IntMatrix,
    /// Roots with nonzero coefficient, in positive-root order.
    pub support: Vec<Root>,
}

/// Simple roots with a tabulated subregular representative of the dense
/// `B`-orbit in `u_α`.
pub fn covered_alphas(family: Family, n: usize) -> Vec<usize> {
    match family {
        Family::Sl => (1..n).collect(),
        Family::SoOdd => (1..=n).collect(),
        Family::Sp => vec![1, n],
        Family::SoEven => vec![1, n - 1, n],
    }
}

/// The explicit representative of the dense `B`-orbit in `u_α`, built from
/// matrix units.
pub fn subregular_rep(alg: &ClassicalAlgebra, alpha: usize) -> Result<SubregularRep> {
    let (family, n, size) = (alg.family, alg.n, alg.size);
    alg.cartan_type().check_root(alpha)?;
    if !covered_alphas(family, n).contains(&alpha) {
        return Err(Error::Domain(format!(
            "no subregular representative available for {family}{n} at alpha_{alpha}"
        )));
    }

    let unit = |p: usize, q: usize| IntMatrix::unit(size, p, q);
    // e_{p,q} − e_{mirror q, mirror p}, in positions
    let anti = |p: usize, q: usize| unit(p, q).add_int(&unit(alg.mirror(q), alg.mirror(p)).scale_int(-1));
    let sum = |terms: Vec<IntMatrix>| {
        terms
            .into_iter()
            .fold(IntMatrix::zeros_int(size, size), |acc, t| acc.add_int(&t))
    };
    let p = |label: i64| alg.pos(label);
    let chain = |from: usize, to: usize, skip: Option<usize>| -> Vec<IntMatrix> {
        (from..=to)
            .filter(|&j| Some(j) != skip)
            .map(|j| match family {
                Family::Sl => unit(j - 1, j),
                _ => anti(j - 1, j),
            })
            .collect()
    };

    let matrix = match family {
        Family::Sl => {
            if alpha == 1 {
                sum(chain(2, n - 1, None))
            } else if alpha == n - 1 {
                sum(chain(1, n - 2, None))
            } else {
                let mut t = chain(1, n - 1, Some(alpha));
                t.push(unit(alpha - 1, alpha + 1));
                sum(t)
            }
        }
        Family::SoOdd => {
            let short = anti(p(n as i64), p(0));
            if alpha == 1 {
                let mut t = chain(2, n - 1, None);
                t.push(short);
                sum(t)
            } else if alpha < n {
                let mut t = chain(1, n - 1, Some(alpha));
                t.push(short);
                // the basis vector two steps after v_α in the ordered basis;
                // for α = n − 1 this is v_0
                let i = p(alpha as i64);
                t.push(anti(i, i + 2));
                sum(t)
            } else {
                let mut t = chain(1, n - 1, None);
                t.push(anti(p(n as i64 - 1), p(-(n as i64))));
                sum(t)
            }
        }
        Family::Sp => {
            let n_i = n as i64;
            if alpha == 1 {
                let mut t = chain(2, n - 1, None);
                t.push(unit(p(n_i), p(-n_i)));
                t.push(unit(p(1), p(-1)));
                sum(t)
            } else {
                let mut t = chain(1, n - 1, None);
                t.push(unit(p(n_i - 1), p(-(n_i - 1))));
                sum(t)
            }
        }
        Family::SoEven => {
            let n_i = n as i64;
            let last_pair = anti(p(n_i - 1), p(-n_i));
            if alpha == 1 {
                let mut t = chain(2, n - 1, None);
                t.push(last_pair);
                t.push(anti(p(1), p(-n_i)));
                sum(t)
            } else {
                let mut t = chain(1, n - 2, None);
                t.push(last_pair);
                t.push(anti(p(n_i - 2), p(-(n_i - 1))));
                let e = sum(t);
                if alpha == n - 1 {
                    e
                } else {
                    // the diagram symmetry α_{n−1} ↔ α_n is conjugation by the
                    // swap v_n ↔ v_{−n}
                    let swap = swap_matrix(size, p(n_i), p(-n_i));
                    swap.mul_int(&e).mul_int(&swap)
                }
            }
        }
    };

    let coords = alg
        .nilradical_coordinates(&matrix)
        .ok_or_else(|| Error::Domain("representative is not in the nilradical".into()))?;
    let support = alg
        .positive
        .iter()
        .zip(&coords)
        .filter(|(_, c)| !Field::is_zero(*c))
        .map(|(rv, _)| rv.root.clone())
        .collect();
    Ok(SubregularRep {
        family,
        n,
        target_alpha: alpha,
        matrix,
        support,
    })
}

fn swap_matrix(size: usize, a: usize, b: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros_int(size, size);
    for i in 0..size {
        let j = if i == a {
            b
        } else if i == b {
            a
        } else {
            i
        };
        m.set(i, j, 1);
    }
    m
}

pub fn jordan_partition(e: &IntMatrix) -> Result<Vec<usize>> {
    jordan_of(&e.to_field::<Q>())
}

pub fn is_subregular(alg: &ClassicalAlgebra, e: &IntMatrix) -> bool {
    jordan_partition(e).is_ok_and(|p| p == alg.family.subregular_partition(alg.n))
}

fn brackets_with(e: &Matrix<Q>, family: &[&IntMatrix]) -> Vec<Matrix<Q>> {
    family
        .iter()
        .map(|x| x.to_field::<Q>().bracket(e))
        .collect()
}

/// `dim ker(ad e)` on the whole algebra.
pub fn centralizer_dim(alg: &ClassicalAlgebra, e: &IntMatrix) -> usize {
    let eq = e.to_field::<Q>();
    alg.dim() - span_dim(&brackets_with(&eq, &alg.basis()))
}

/// `dim [b, e]`, the dimension of the tangent space to `B·e`.
pub fn tangent_dim(alg: &ClassicalAlgebra, e: &IntMatrix) -> usize {
    let eq = e.to_field::<Q>();
    span_dim(&brackets_with(&eq, &alg.borel_basis()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenseOrbitReport {
    pub tangent_dim: usize,
    pub u_alpha_dim: usize,
    pub dense: bool,
}

pub fn in_minimal_nilradical(alg: &ClassicalAlgebra, alpha: usize, x: &IntMatrix) -> bool {
    let basis: Vec<Matrix<Q>> = alg
        .minimal_nilradical_basis(alpha)
        .iter()
        .map(|rv| rv.matrix.to_field())
        .collect();
    solve_in_span(&basis, &x.to_field()).is_some()
}

pub fn dense_orbit_check(alg: &ClassicalAlgebra, alpha: usize, e: &IntMatrix) -> Result<DenseOrbitReport> {
    alg.cartan_type().check_root(alpha)?;
    if !in_minimal_nilradical(alg, alpha, e) {
        return Err(Error::NotInSubspace(format!("u_alpha{alpha}")));
    }
    let u_alpha_dim = alg.positive.len() - 1;
    let tangent_dim = tangent_dim(alg, e);
    Ok(DenseOrbitReport {
        tangent_dim,
        u_alpha_dim,
        dense: tangent_dim == u_alpha_dim,
    })
}

/// `rank − rank(support roots)` for a sum of root vectors; this is the
/// dimension of the toral elements commuting with `e`.
pub fn toral_centralizer_dim(alg: &ClassicalAlgebra, e: &IntMatrix) -> Result<usize> {
    let roots: Vec<&RootVector> = alg.positive.iter().chain(&alg.negative).collect();
    let basis: Vec<Matrix<Q>> = roots.iter().map(|rv| rv.matrix.to_field()).collect();
    let coords = solve_in_span(&basis, &e.to_field())
        .ok_or_else(|| Error::Domain("element is not a sum of root vectors".into()))?;
    let r = alg.rank();
    let support: Vec<Matrix<Q>> = roots
        .iter()
        .zip(&coords)
        .filter(|(_, c)| !Field::is_zero(*c))
        .map(|(rv, _)| IntMatrix::from_vec(1, r, rv.root.0.clone()).to_field())
        .collect();
    Ok(r - span_dim(&support))
}

/// `dim {h ∈ t : [h, e] = 0}` computed directly from the toral basis.
pub fn toral_kernel_dim(alg: &ClassicalAlgebra, e: &IntMatrix) -> usize {
    let eq = e.to_field::<Q>();
    let toral: Vec<&IntMatrix> = alg.toral.iter().collect();
    alg.toral.len() - span_dim(&brackets_with(&eq, &toral))
}

#[derive(Clone, Debug, PartialEq)]
pub struct NilpotencyReport {
    pub kernel_dim: usize,
    pub samples: usize,
    pub all_nilpotent: bool,
    /// A centralizing element that is not nilpotent, when one was found.
    pub witness: Option<Matrix<Q>>,
}

// Basis of {Σ cₖ Xₖ : [Σ cₖ Xₖ, e] = 0} for the given family Xₖ.
fn kernel_elements(e: &Matrix<Q>, family: &[&IntMatrix]) -> Vec<Matrix<Q>> {
    if family.is_empty() {
        return Vec::new();
    }
    let images = brackets_with(e, family);
    let width = images[0].as_slice().len();
    let mut data = Vec::with_capacity(width * family.len());
    for entry in 0..width {
        for img in &images {
            data.push(img.as_slice()[entry].clone());
        }
    }
    let system = Matrix::from_vec(width, family.len(), data);
    let size = e.rows();
    system
        .nullspace()
        .into_iter()
        .map(|c| {
            family
                .iter()
                .zip(c)
                .fold(Matrix::<Q>::zeros(size, size), |acc, (x, ck)| {
                    acc.add(&x.to_field::<Q>().scale(&ck))
                })
        })
        .collect()
}

/// Evidence for a unipotent connected centralizer: checks that toral
/// centralizing elements, a kernel basis of `ad e` and
/// [`HEURISTIC_SAMPLES`] seeded random integer combinations of it are all
/// nilpotent. `false` is a proof (the witness is non-nilpotent); `true` is
/// only evidence.
pub fn all_nilpotent_heuristic(alg: &ClassicalAlgebra, e: &IntMatrix) -> NilpotencyReport {
    let eq = e.to_field::<Q>();
    let toral: Vec<&IntMatrix> = alg.toral.iter().collect();
    let kernel = kernel_elements(&eq, &alg.basis());
    let mut report = NilpotencyReport {
        kernel_dim: kernel.len(),
        samples: HEURISTIC_SAMPLES,
        all_nilpotent: true,
        witness: None,
    };

    let fail = |m: Matrix<Q>, report: &mut NilpotencyReport| {
        report.all_nilpotent = false;
        report.witness = Some(m);
    };

    // nonzero diagonal matrices are never nilpotent
    if let Some(h) = kernel_elements(&eq, &toral).into_iter().next() {
        fail(h, &mut report);
        return report;
    }
    if let Some(x) = kernel.iter().find(|x| !x.is_nilpotent()) {
        fail(x.clone(), &mut report);
        return report;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(HEURISTIC_SEED);
    for _ in 0..HEURISTIC_SAMPLES {
        let size = alg.size;
        let combo = kernel.iter().fold(Matrix::<Q>::zeros(size, size), |acc, x| {
            let c: i64 = rng.gen_range(-3..=3);
            acc.add(&x.scale(&Q::from_i64(c)))
        });
        if !combo.is_nilpotent() {
            fail(combo, &mut report);
            return report;
        }
    }
    report
}

/// Membership in the dense `B`-orbit of `u_{α_1}` for `sl_n`: the
/// superdiagonal entries `(i, i+1)` for `i = 2, …, n−1` are nonzero, all other
/// entries of `u_{α_1}` are free.
pub fn ble_membership<F: Field>(alg: &ClassicalAlgebra, x: &Matrix<F>) -> Result<bool> {
    if alg.family != Family::Sl {
        return Err(Error::Usage("ble_membership is defined for sl_n only".into()));
    }
    let n = alg.n;
    if x.rows() != n || x.cols() != n {
        return Err(Error::Usage(format!("expected a {n}x{n} matrix")));
    }
    for i in 0..n {
        for j in 0..=i {
            if !x.get(i, j).is_zero() {
                return Err(Error::NotInSubspace("u_alpha1".into()));
            }
        }
    }
    if n >= 2 && !x.get(0, 1).is_zero() {
        return Err(Error::NotInSubspace("u_alpha1".into()));
    }
    // 1-based i = 2..n-1 is 0-based row i-1
    Ok((2..n).all(|i| !x.get(i - 1, i).is_zero()))
}

/// All elements `Σ cᵧ Xᵧ` over the given root vectors with coefficients drawn
/// from `coeffs`.
pub fn enumerate_combinations(
    alg: &ClassicalAlgebra,
    basis: &[&RootVector],
    coeffs: &[i64],
) -> Vec<IntMatrix> {
    let size = alg.size;
    let mut out = vec![IntMatrix::zeros_int(size, size)];
    for rv in basis {
        let mut next = Vec::with_capacity(out.len() * coeffs.len());
        for m in &out {
            for &c in coeffs {
                next.push(if c == 0 {
                    m.clone()
                } else {
                    m.add_int(&rv.matrix.scale_int(c))
                });
            }
        }
        out = next;
    }
    out
}
