//! Dense matrices over exact fields: the rationals and small prime fields.
//!
//! Everything the matrix models verify (ranks, Jordan block sizes, kernel
//! dimensions) is invariant under field extension, so exact rational
//! arithmetic stands in for an algebraically closed field of characteristic
//! zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Q = BigRational;

pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
}

impl Field for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

/// An element of the prime field `F_P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(i64::from(P)) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn pow(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(self.0 * rhs.0 % P)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u32> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl<T> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }
}

/// Integer matrices are used for the basis of the matrix models; they are
/// mapped into a field before any elimination.
pub type IntMatrix = Matrix<i64>;

impl IntMatrix {
    pub fn zeros_int(rows: usize, cols: usize) -> Self {
        Matrix::from_vec(rows, cols, vec![0; rows * cols])
    }

    pub fn unit(n: usize, r: usize, c: usize) -> Self {
        let mut m = IntMatrix::zeros_int(n, n);
        m.set(r, c, 1);
        m
    }

    pub fn to_field<F: Field>(&self) -> Matrix<F> {
        self.map(|&v| F::from_i64(v))
    }

    pub fn add_int(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.map(|v| v * k)
    }

    pub fn mul_int(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros_int(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = *self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn is_zero_int(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, i64)> {
        self.data
            .iter()
            .position(|&v| v != 0)
            .map(|k| (k / self.cols, k % self.cols, self.data[k]))
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_vec(rows, cols, vec![F::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    pub fn scale(&self, k: &F) -> Self {
        self.map(|v| v.clone() * k.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    /// `[self, other] = self·other − other·self`.
    pub fn bracket(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, k: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> F {
        assert!(self.is_square());
        (0..self.rows).fold(F::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn rank(&self) -> usize {
        row_reduce(self.clone()).pivots.len()
    }

    /// A basis of `{x : self · x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let reduced = row_reduce(self.clone());
        let m = &reduced.matrix;
        let free: Vec<usize> = (0..self.cols)
            .filter(|c| !reduced.pivots.contains(c))
            .collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (row, &pc) in reduced.pivots.iter().enumerate() {
                    v[pc] = -m.get(row, f).clone();
                }
                v
            })
            .collect()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.rows).is_zero()
    }
}

struct Reduced<F> {
    matrix: Matrix<F>,
    pivots: Vec<usize>,
}

// Reduced row echelon form; rows with a zero pivot-column entry are skipped so
// sparse inputs stay cheap.
fn row_reduce<F: Field>(mut m: Matrix<F>) -> Reduced<F> {
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                m.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = m.get(r, c).inv().expect("pivot is nonzero");
        for j in c..cols {
            let idx = r * cols + j;
            if !m.data[idx].is_zero() {
                m.data[idx] = m.data[idx].clone() * inv.clone();
            }
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = m.get(i, c).clone();
            if factor.is_zero() {
                continue;
            }
            for j in c..cols {
                let pivot_entry = &m.data[r * cols + j];
                if pivot_entry.is_zero() {
                    continue;
                }
                let delta = factor.clone() * pivot_entry.clone();
                let idx = i * cols + j;
                m.data[idx] = m.data[idx].clone() - delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Reduced { matrix: m, pivots }
}

/// Dimension of the span of a family of equally shaped matrices.
pub fn span_dim<F: Field>(family: &[Matrix<F>]) -> usize {
    if family.is_empty() {
        return 0;
    }
    let width = family[0].data.len();
    let data: Vec<F> = family.iter().flat_map(|m| m.data.iter().cloned()).collect();
    Matrix::from_vec(family.len(), width, data).rank()
}

/// Solves `Σ cₖ basis[k] = target`, returning `None` when `target` is not in
/// the span. The solution is unique when the basis is linearly independent.
pub fn solve_in_span<F: Field>(basis: &[Matrix<F>], target: &Matrix<F>) -> Option<Vec<F>> {
    let d = basis.len();
    let width = target.data.len();
    // columns: basis vectors, then the target
    let mut data = Vec::with_capacity(width * (d + 1));
    for e in 0..width {
        for b in basis {
            data.push(b.data[e].clone());
        }
        data.push(target.data[e].clone());
    }
    let reduced = row_reduce(Matrix::from_vec(width, d + 1, data));
    if reduced.pivots.contains(&d) {
        return None;
    }
    let mut coeffs = vec![F::zero(); d];
    for (row, &pc) in reduced.pivots.iter().enumerate() {
        coeffs[pc] = reduced.matrix.get(row, d).clone();
    }
    Some(coeffs)
}

/// Jordan block sizes of a nilpotent matrix, largest first, from the ranks
/// of successive powers.
pub fn jordan_partition<F: Field>(e: &Matrix<F>) -> Result<Vec<usize>> {
    if !e.is_square() {
        return Err(Error::Usage("jordan_partition needs a square matrix".into()));
    }
    let n = e.rows;
    let mut ranks = vec![n];
    let mut power = Matrix::<F>::identity(n);
    for _ in 0..n {
        power = power.mul(e);
        let r = power.rank();
        ranks.push(r);
        if r == 0 {
            break;
        }
    }
    if *ranks.last().unwrap() != 0 {
        return Err(Error::NotNilpotent);
    }
    ranks.push(0);
    // blocks of size >= k: ranks[k-1] - ranks[k]
    let mut parts = Vec::new();
    for k in 1..ranks.len() - 1 {
        let at_least_k = ranks[k - 1] - ranks[k];
        let at_least_k1 = ranks[k] - ranks[k + 1];
        for _ in 0..at_least_k - at_least_k1 {
            parts.push(k);
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(parts)
}

pub fn q_from_int(v: i64) -> Q {
    Q::from_i64(v)
}

/// Rational to integer when exact.
pub fn q_to_int(v: &Q) -> Option<i64> {
    if v.is_integer() {
        i64::try_from(v.to_integer()).ok()
    } else {
        None
    }
}

pub fn q_abs(v: &Q) -> Q {
    v.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qm(rows: usize, cols: usize, v: &[i64]) -> Matrix<Q> {
        IntMatrix::from_vec(rows, cols, v.to_vec()).to_field()
    }

    #[test]
    fn rank_and_nullspace() {
        let m = qm(3, 3, &[1, 2, 3, 2, 4, 6, 1, 0, 1]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        let x = Matrix::from_vec(3, 1, ns[0].clone());
        assert!(m.mul(&x).is_zero());
        assert_eq!(Matrix::<Q>::zeros(4, 5).rank(), 0);
    }

    #[test]
    fn jordan_of_shift() {
        // single block plus a 1x1
        let mut m = IntMatrix::zeros_int(4, 4);
        m.set(0, 1, 1);
        m.set(1, 2, 1);
        assert_eq!(jordan_partition(&m.to_field::<Q>()).unwrap(), vec![3, 1]);
        assert_eq!(
            jordan_partition(&Matrix::<Q>::zeros(3, 3)).unwrap(),
            vec![1, 1, 1]
        );
        let id = Matrix::<Q>::identity(2);
        assert_eq!(jordan_partition(&id), Err(Error::NotNilpotent));
    }

    #[test]
    fn prime_field() {
        type F5 = Fp<5>;
        assert_eq!(F5::new(-1).value(), 4);
        assert_eq!(F5::new(3).inv().unwrap() * F5::new(3), F5::one());
        let m = IntMatrix::from_vec(2, 2, vec![1, 2, 2, 4]).to_field::<F5>();
        assert_eq!(m.rank(), 1);
        let m = IntMatrix::from_vec(2, 2, vec![1, 2, 3, 1]).to_field::<F5>();
        // det = 1 - 6 = -5 = 0 mod 5
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn solve() {
        let b = vec![qm(1, 2, &[1, 0]), qm(1, 2, &[1, 1])];
        let c = solve_in_span(&b, &qm(1, 2, &[3, 2])).unwrap();
        assert_eq!(c, vec![q_from_int(1), q_from_int(2)]);
        assert!(solve_in_span(&b[..1], &qm(1, 2, &[0, 1])).is_none());
    }
}
