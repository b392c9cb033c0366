//! Brute-force `B(F_q)`-orbits on nilradical subspaces over small prime fields.
//!
//! A point of a subspace spanned by root vectors `X_1, …, X_d` is its
//! coordinate vector, read off at the leading entry of each `X_k` (distinct
//! root vectors have disjoint supports). The group acts by conjugation and is
//! generated by the root elements `I + tX + t²X²/2`, `t ∈ F_q^×`, together with
//! diagonal matrices. The diagonal part acts through the adjoint torus: for
//! `sl_n` all of the diagonal of `GL_n`, for `sp` and `so_{2n}` the maximal
//! torus extended by the similitude scaling `v_{-i}`.

use std::collections::{HashMap, HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::linalg::{jordan_partition, Field, Fp, IntMatrix, Matrix};
use crate::matrixlie::{ble_membership, ClassicalAlgebra, Family, RootVector};
use crate::roots::cartan_pairing;
use crate::{Error, Result};

/// Largest number of points enumerated in one run.
pub const POINT_LIMIT: u64 = 1_000_000;
pub const PRIMES: [u32; 6] = [2, 3, 5, 7, 11, 13];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Subspace {
    Nilradical,
    MinimalNilradical { alpha: usize },
    Intersection { alpha: usize, beta: usize },
}

impl Subspace {
    pub fn basis<'a>(&self, alg: &'a ClassicalAlgebra) -> Result<Vec<&'a RootVector>> {
        let t = alg.cartan_type();
        match *self {
            Subspace::Nilradical => Ok(alg.nilradical_basis()),
            Subspace::MinimalNilradical { alpha } => {
                t.check_root(alpha)?;
                Ok(alg.minimal_nilradical_basis(alpha))
            }
            Subspace::Intersection { alpha, beta } => {
                t.check_root(alpha)?;
                t.check_root(beta)?;
                Ok(alg.intersection_basis(alpha, beta))
            }
        }
    }
}

impl std::fmt::Display for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Subspace::Nilradical => f.write_str("u"),
            Subspace::MinimalNilradical { alpha } => write!(f, "u_a{alpha}"),
            Subspace::Intersection { alpha, beta } => write!(f, "u_a{alpha} & u_a{beta}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitCensusFF {
    pub family: Family,
    pub n: usize,
    pub q: u32,
    pub subspace: Subspace,
    /// Jordan partition the points are restricted to, if any.
    pub filter: Option<Vec<usize>>,
    pub point_count: usize,
    pub orbit_count: usize,
    /// Ascending.
    pub orbit_sizes: Vec<usize>,
    /// Order of the acting group.
    pub group_order: u64,
}

pub fn check_prime(family: Family, q: u32) -> Result<()> {
    if !PRIMES.contains(&q) || (q == 2 && family != Family::Sl) {
        return Err(Error::BadPrime(q));
    }
    Ok(())
}

macro_rules! with_prime {
    ($q:expr, $f:ident :: <P> ( $($arg:expr),* )) => {
        match $q {
            2 => $f::<2>($($arg),*),
            3 => $f::<3>($($arg),*),
            5 => $f::<5>($($arg),*),
            7 => $f::<7>($($arg),*),
            11 => $f::<11>($($arg),*),
            13 => $f::<13>($($arg),*),
            other => Err(Error::BadPrime(other)),
        }
    };
}

/// Orbits of `B(F_q)` on the points of `subspace`, optionally restricted to a
/// Jordan class.
pub fn enumerate_b_orbits(
    alg: &ClassicalAlgebra,
    q: u32,
    subspace: Subspace,
    filter: Option<&[usize]>,
) -> Result<OrbitCensusFF> {
    enumerate_with_order(alg, q, subspace, filter, None)
}

/// As [`enumerate_b_orbits`], with the generators applied in an order
/// shuffled by `seed`.
pub fn enumerate_with_order(
    alg: &ClassicalAlgebra,
    q: u32,
    subspace: Subspace,
    filter: Option<&[usize]>,
    seed: Option<u64>,
) -> Result<OrbitCensusFF> {
    check_prime(alg.family, q)?;
    with_prime!(q, census_impl::<P>(alg, subspace, filter, seed))
}

/// Subregular orbits on `u_α ∩ u_β`. Unless `force` is set, non-adjacent
/// `α, β` are rejected since the intersection then misses the subregular
/// class.
pub fn enumerate_cell_orbits(
    alg: &ClassicalAlgebra,
    q: u32,
    alpha: usize,
    beta: usize,
    force: bool,
) -> Result<OrbitCensusFF> {
    if alpha == beta {
        return Err(Error::Usage("alpha and beta must differ".into()));
    }
    let pairing = cartan_pairing(&alg.root_system, alpha, beta)?;
    if pairing == 0 && !force {
        return Err(Error::Domain(format!(
            "alpha{alpha} and alpha{beta} are orthogonal; no subregular element lies in the intersection"
        )));
    }
    let filter = alg.family.subregular_partition(alg.n);
    enumerate_b_orbits(alg, q, Subspace::Intersection { alpha, beta }, Some(&filter))
}

/// The orbit of `e` (reduced mod `q`), as coordinate vectors over the
/// root-vector basis of `u`, sorted.
pub fn orbit_of(alg: &ClassicalAlgebra, q: u32, e: &IntMatrix) -> Result<Vec<Vec<u32>>> {
    check_prime(alg.family, q)?;
    with_prime!(q, orbit_impl::<P>(alg, e))
}

/// Points of `u_{α_1}` satisfying [`ble_membership`] over `F_q`, as coordinate
/// vectors over the root-vector basis of `u`, sorted.
pub fn ble_point_set(alg: &ClassicalAlgebra, q: u32) -> Result<Vec<Vec<u32>>> {
    check_prime(alg.family, q)?;
    with_prime!(q, ble_impl::<P>(alg))
}

struct Coordinates<const P: u32> {
    mats: Vec<Matrix<Fp<P>>>,
    pivots: Vec<(usize, usize)>,
    size: usize,
}

impl<const P: u32> Coordinates<P> {
    fn new(basis: &[&RootVector], size: usize) -> Self {
        let mats = basis.iter().map(|rv| rv.matrix.to_field()).collect();
        let pivots = basis
            .iter()
            .map(|rv| {
                let (r, c, v) = rv.matrix.first_nonzero().expect("root vectors are nonzero");
                debug_assert_eq!(v, 1);
                (r, c)
            })
            .collect();
        Coordinates { mats, pivots, size }
    }

    fn dim(&self) -> usize {
        self.mats.len()
    }

    fn point_count(&self) -> Result<u64> {
        let mut total: u64 = 1;
        for _ in 0..self.dim() {
            total = total.saturating_mul(u64::from(P));
        }
        if total > POINT_LIMIT {
            return Err(Error::TooManyPoints {
                points: total,
                limit: POINT_LIMIT,
            });
        }
        Ok(total)
    }

    fn matrix(&self, index: u64) -> Matrix<Fp<P>> {
        let mut x = Matrix::zeros(self.size, self.size);
        let mut rest = index;
        for m in &self.mats {
            let c = rest % u64::from(P);
            rest /= u64::from(P);
            if c != 0 {
                x = x.add(&m.scale(&Fp::new(c as i64)));
            }
        }
        x
    }

    fn coords(&self, x: &Matrix<Fp<P>>) -> Vec<u32> {
        self.pivots.iter().map(|&(r, c)| x.get(r, c).value()).collect()
    }

    fn index(&self, x: &Matrix<Fp<P>>) -> u64 {
        self.coords(x)
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * u64::from(P) + u64::from(c))
    }

    fn contains(&self, x: &Matrix<Fp<P>>) -> bool {
        let back = self.coords(x).iter().zip(&self.mats).fold(
            Matrix::zeros(self.size, self.size),
            |acc, (&c, m)| acc.add(&m.scale(&Fp::new(i64::from(c)))),
        );
        &back == x
    }
}

struct Generator<const P: u32> {
    g: Matrix<Fp<P>>,
    g_inv: Matrix<Fp<P>>,
}

impl<const P: u32> Generator<P> {
    fn act(&self, x: &Matrix<Fp<P>>) -> Matrix<Fp<P>> {
        self.g.mul(x).mul(&self.g_inv)
    }
}

fn primitive_root<const P: u32>() -> Fp<P> {
    (1..P as i64)
        .map(Fp::<P>::new)
        .find(|c| (1..P - 1).all(|k| c.pow(k) != Fp::one()))
        .expect("prime fields have primitive roots")
}

fn diagonal<const P: u32>(entries: &[Fp<P>]) -> Generator<P> {
    let n = entries.len();
    let mut g = Matrix::zeros(n, n);
    let mut g_inv = Matrix::zeros(n, n);
    for (i, d) in entries.iter().enumerate() {
        g.set(i, i, *d);
        g_inv.set(i, i, d.inv().expect("torus entries are units"));
    }
    Generator { g, g_inv }
}

fn generators<const P: u32>(alg: &ClassicalAlgebra) -> Result<(Vec<Generator<P>>, u64)> {
    let size = alg.size;
    let id = Matrix::<Fp<P>>::identity(size);
    let half = Fp::<P>::new(2).inv();
    let mut gens = Vec::new();
    for rv in &alg.positive {
        let x = rv.matrix.to_field::<Fp<P>>();
        let x2 = x.mul(&x);
        if !x2.mul(&x).is_zero() {
            return Err(Error::Domain(format!("root vector {} has X^3 != 0", rv.root)));
        }
        let x2_half = if x2.is_zero() {
            x2
        } else {
            let half = half.ok_or(Error::BadPrime(P))?;
            x2.scale(&half)
        };
        for t in 1..P as i64 {
            let (t, t2) = (Fp::<P>::new(t), Fp::<P>::new(t * t));
            let g = id.add(&x.scale(&t)).add(&x2_half.scale(&t2));
            let g_inv = id.sub(&x.scale(&t)).add(&x2_half.scale(&t2));
            gens.push(Generator { g, g_inv });
        }
    }

    let c = primitive_root::<P>();
    let one = Fp::<P>::one();
    let n = alg.n;
    let mut torus_rank = n;
    for i in 0..n {
        let mut d = vec![one; size];
        d[i] = c;
        if alg.family != Family::Sl {
            d[alg.mirror(i)] = c.inv().expect("c is a unit");
        }
        gens.push(diagonal(&d));
    }
    if matches!(alg.family, Family::Sp | Family::SoEven) {
        let d: Vec<Fp<P>> = (0..size).map(|p| if p < n { one } else { c }).collect();
        gens.push(diagonal(&d));
        torus_rank += 1;
    }

    let q = u64::from(P);
    let mut order = 1u64;
    for _ in 0..torus_rank {
        order = order.saturating_mul(q - 1);
    }
    for _ in 0..alg.positive.len() {
        order = order.saturating_mul(q);
    }
    Ok((gens, order))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // the smaller index wins, so roots do not depend on merge order
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

fn census_impl<const P: u32>(
    alg: &ClassicalAlgebra,
    subspace: Subspace,
    filter: Option<&[usize]>,
    seed: Option<u64>,
) -> Result<OrbitCensusFF> {
    let basis = subspace.basis(alg)?;
    let coords = Coordinates::<P>::new(&basis, alg.size);
    let total = coords.point_count()?;
    let (mut gens, group_order) = generators::<P>(alg)?;
    if let Some(seed) = seed {
        gens.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }

    let mut points: Vec<Matrix<Fp<P>>> = Vec::new();
    let mut slot: HashMap<u64, usize> = HashMap::new();
    for index in 0..total {
        let x = coords.matrix(index);
        let keep = match filter {
            None => true,
            Some(f) => jordan_partition(&x)? == f,
        };
        if keep {
            slot.insert(index, points.len());
            points.push(x);
        }
    }

    let mut uf = UnionFind::new(points.len());
    for (k, x) in points.iter().enumerate() {
        for g in &gens {
            let y = g.act(x);
            debug_assert!(coords.contains(&y));
            let j = *slot.get(&coords.index(&y)).ok_or_else(|| {
                Error::Domain("the group action left the filtered point set".into())
            })?;
            uf.union(k, j);
        }
    }

    let mut sizes: HashMap<usize, usize> = HashMap::new();
    for k in 0..points.len() {
        *sizes.entry(uf.find(k)).or_default() += 1;
    }
    let mut orbit_sizes: Vec<usize> = sizes.into_values().collect();
    orbit_sizes.sort_unstable();

    Ok(OrbitCensusFF {
        family: alg.family,
        n: alg.n,
        q: P,
        subspace,
        filter: filter.map(<[usize]>::to_vec),
        point_count: points.len(),
        orbit_count: orbit_sizes.len(),
        orbit_sizes,
        group_order,
    })
}

fn orbit_impl<const P: u32>(alg: &ClassicalAlgebra, e: &IntMatrix) -> Result<Vec<Vec<u32>>> {
    let basis = alg.nilradical_basis();
    let coords = Coordinates::<P>::new(&basis, alg.size);
    let limit = coords.point_count()?;
    let start = e.to_field::<Fp<P>>();
    if e.rows() != alg.size || e.cols() != alg.size || !coords.contains(&start) {
        return Err(Error::NotInSubspace("u".into()));
    }
    let (gens, _) = generators::<P>(alg)?;
    let mut seen: HashSet<u64> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(coords.index(&start));
    queue.push_back(start);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = g.act(&x);
            if seen.insert(coords.index(&y)) {
                debug_assert!((seen.len() as u64) <= limit);
                queue.push_back(y);
            }
        }
        out.push(coords.coords(&x));
    }
    out.sort();
    Ok(out)
}

fn ble_impl<const P: u32>(alg: &ClassicalAlgebra) -> Result<Vec<Vec<u32>>> {
    let full = Coordinates::<P>::new(&alg.nilradical_basis(), alg.size);
    let sub = Coordinates::<P>::new(&alg.minimal_nilradical_basis(1), alg.size);
    let total = sub.point_count()?;
    let mut out = Vec::new();
    for index in 0..total {
        let x = sub.matrix(index);
        if ble_membership(alg, &x)? {
            out.push(full.coords(&x));
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrixlie::{build_algebra, subregular_rep};

    fn sub_census(family: Family, n: usize, q: u32) -> OrbitCensusFF {
        let alg = build_algebra(family, n).unwrap();
        let f = family.subregular_partition(n);
        enumerate_b_orbits(&alg, q, Subspace::Nilradical, Some(&f)).unwrap()
    }

    #[test]
    fn subregular_counts() {
        assert_eq!(sub_census(Family::Sl, 3, 3).orbit_count, 3);
        assert_eq!(sub_census(Family::Sl, 3, 5).orbit_count, 3);
        assert_eq!(sub_census(Family::Sl, 4, 3).orbit_count, 5);
    }

    #[test]
    fn rank_two_orthogonal_split() {
        // the open orbit of u_a2 breaks into two rational orbits, separated
        // by the square class of a torus semi-invariant
        for q in [3, 5] {
            let c = sub_census(Family::SoOdd, 2, q);
            assert_eq!(c.orbit_count, 4);
            let alg = build_algebra(Family::SoOdd, 2).unwrap();
            let f = Family::SoOdd.subregular_partition(2);
            let a2 = enumerate_b_orbits(&alg, q, Subspace::MinimalNilradical { alpha: 2 }, Some(&f)).unwrap();
            let (q, q1) = (q as usize, q as usize - 1);
            let half = q * q1 * q1 / 2;
            let mut expected = vec![q * q1, half, half];
            expected.sort_unstable();
            assert_eq!(a2.orbit_sizes, expected);
        }
        assert_eq!(sub_census(Family::Sp, 2, 3).orbit_count, 4);
    }

    #[test]
    fn split_follows_square_class() {
        // X_a1 + c X_{a1+2a2}: the torus rescales c/a by a square
        let alg = build_algebra(Family::SoOdd, 2).unwrap();
        let root = |c: &[i64]| &alg.positive.iter().find(|rv| rv.root.0 == c).unwrap().matrix;
        let (a1, top) = (root(&[1, 0]), root(&[1, 2]));
        for (q, nonresidue) in [(5u32, 2i64), (7, 3)] {
            let square = orbit_of(&alg, q, &a1.add_int(&top.scale_int(4))).unwrap();
            let other = orbit_of(&alg, q, &a1.add_int(&top.scale_int(nonresidue))).unwrap();
            assert_eq!(square.len(), other.len());
            assert!(square.iter().all(|p| !other.contains(p)));
            let one = orbit_of(&alg, q, &a1.add_int(top)).unwrap();
            assert_eq!(one, square);
        }
    }

    #[test]
    fn census_invariants() {
        let c = sub_census(Family::Sl, 3, 3);
        assert_eq!(c.orbit_sizes.iter().sum::<usize>(), c.point_count);
        assert!(c.orbit_sizes.iter().all(|s| c.group_order.is_multiple_of(*s as u64)));
        assert!(c.orbit_sizes.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn cell_orbits() {
        let sl3 = build_algebra(Family::Sl, 3).unwrap();
        assert_eq!(enumerate_cell_orbits(&sl3, 3, 1, 2, false).unwrap().orbit_count, 1);
        let sl4 = build_algebra(Family::Sl, 4).unwrap();
        assert!(enumerate_cell_orbits(&sl4, 3, 1, 3, false).is_err());
        assert_eq!(enumerate_cell_orbits(&sl4, 3, 1, 3, true).unwrap().orbit_count, 0);
        assert_eq!(enumerate_cell_orbits(&sl4, 3, 2, 3, false).unwrap().orbit_count, 1);
    }

    #[test]
    fn orbits_of_points() {
        let sl3 = build_algebra(Family::Sl, 3).unwrap();
        let rep = subregular_rep(&sl3, 1).unwrap();
        let orbit = orbit_of(&sl3, 3, &rep.matrix).unwrap();
        assert_eq!(orbit.len(), 6);
        assert_eq!(orbit, ble_point_set(&sl3, 3).unwrap());

        let zero = IntMatrix::zeros_int(3, 3);
        assert_eq!(orbit_of(&sl3, 5, &zero).unwrap(), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn guards() {
        let so5 = build_algebra(Family::SoOdd, 2).unwrap();
        assert_eq!(
            enumerate_b_orbits(&so5, 2, Subspace::Nilradical, None),
            Err(Error::BadPrime(2))
        );
        let sl3 = build_algebra(Family::Sl, 3).unwrap();
        assert_eq!(
            enumerate_b_orbits(&sl3, 4, Subspace::Nilradical, None),
            Err(Error::BadPrime(4))
        );
        assert!(enumerate_b_orbits(&sl3, 2, Subspace::Nilradical, None).is_ok());
        let sl6 = build_algebra(Family::Sl, 6).unwrap();
        assert!(matches!(
            enumerate_b_orbits(&sl6, 3, Subspace::Nilradical, None),
            Err(Error::TooManyPoints { .. })
        ));
    }

    #[test]
    fn generator_order_is_irrelevant() {
        let alg = build_algebra(Family::Sl, 3).unwrap();
        let a = enumerate_b_orbits(&alg, 5, Subspace::Nilradical, None).unwrap();
        let b = enumerate_with_order(&alg, 5, Subspace::Nilradical, None, Some(7)).unwrap();
        assert_eq!(a, b);
    }
}
