//! Dense exact linear algebra over an abstract field.
//!
//! Fields are passed as context objects so that elements of, say, a
//! cyclotomic field need not carry their modulus around.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

pub trait Field {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` exactly when `a` is zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

/// The rational numbers with arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix");
            data.extend(row);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

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

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(parts: &[Matrix<T>]) -> Self {
        let cols = parts.first().map_or(0, |m| m.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for m in parts {
            assert_eq!(m.cols, cols, "column mismatch in vstack");
            data.extend(m.data.iter().cloned());
            rows += m.rows;
        }
        Matrix { rows, cols, data }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn zeros<F: Field<Elem = T>>(f: &F, rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, f.zero())
    }

    pub fn identity<F: Field<Elem = T>>(f: &F, n: usize) -> Self {
        let mut m = Matrix::zeros(f, n, n);
        for i in 0..n {
            m.set(i, i, f.one());
        }
        m
    }

    pub fn is_zero<F: Field<Elem = T>>(&self, f: &F) -> bool {
        self.data.iter().all(|x| f.is_zero(x))
    }

    pub fn mul<F: Field<Elem = T>>(&self, f: &F, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(f, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn add<F: Field<Elem = T>>(&self, f: &F, rhs: &Matrix<T>) -> Matrix<T> {
        self.zip_with(rhs, |a, b| f.add(a, b))
    }

    pub fn sub<F: Field<Elem = T>>(&self, f: &F, rhs: &Matrix<T>) -> Matrix<T> {
        self.zip_with(rhs, |a, b| f.sub(a, b))
    }

    pub fn scale<F: Field<Elem = T>>(&self, f: &F, s: &T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| f.mul(s, x)).collect(),
        }
    }

    /// `self + s * Id`.
    pub fn add_scalar<F: Field<Elem = T>>(&self, f: &F, s: &T) -> Matrix<T> {
        assert_eq!(self.rows, self.cols, "shift of a non-square matrix");
        let mut out = self.clone();
        for i in 0..self.rows {
            let idx = i * self.cols + i;
            out.data[idx] = f.add(&out.data[idx], s);
        }
        out
    }

    /// Commutator `self * rhs - rhs * self`.
    pub fn commutator<F: Field<Elem = T>>(&self, f: &F, rhs: &Matrix<T>) -> Matrix<T> {
        self.mul(f, rhs).sub(f, &rhs.mul(f, self))
    }

    pub fn apply<F: Field<Elem = T>>(&self, f: &F, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                self.row(r).iter().zip(v).fold(f.zero(), |acc, (a, b)| {
                    if f.is_zero(a) || f.is_zero(b) {
                        acc
                    } else {
                        f.add(&acc, &f.mul(a, b))
                    }
                })
            })
            .collect()
    }

    fn zip_with(&self, rhs: &Matrix<T>, op: impl Fn(&T, &T) -> T) -> Matrix<T> {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| op(a, b))
                .collect(),
        }
    }
}

/// Reduced row echelon form together with the pivot columns.
pub fn rref<F: Field>(f: &F, m: &Matrix<F::Elem>) -> (Matrix<F::Elem>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !f.is_zero(a.get(r, col))) else {
            continue;
        };
        swap_rows(&mut a, row, p);
        let inv = f.inv(a.get(row, col)).expect("pivot is nonzero");
        for c in col..a.cols {
            let v = f.mul(&inv, a.get(row, c));
            a.set(row, c, v);
        }
        for r in 0..a.rows {
            if r == row || f.is_zero(a.get(r, col)) {
                continue;
            }
            let factor = a.get(r, col).clone();
            for c in col..a.cols {
                let pivot_entry = a.get(row, c);
                if f.is_zero(pivot_entry) {
                    continue;
                }
                let v = f.sub(a.get(r, c), &f.mul(&factor, pivot_entry));
                a.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

fn swap_rows<T: Clone>(m: &mut Matrix<T>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for c in 0..m.cols {
        m.data.swap(a * m.cols + c, b * m.cols + c);
    }
}

pub fn rank<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    rref(f, m).1.len()
}

pub fn nullity<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    m.cols() - rank(f, m)
}

/// Basis of the right kernel `{x : m x = 0}`. Each vector has a 1 at its free
/// column and zeros at the other free columns, so the basis is in reduced
/// echelon form when read from the last column backwards.
pub fn kernel<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let (r, pivots) = rref(f, m);
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); m.cols()];
            v[fc] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(row, fc));
            }
            v
        })
        .collect()
}

pub fn inverse<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    let n = m.rows();
    assert_eq!(n, m.cols(), "inverse of a non-square matrix");
    let mut aug = Matrix::zeros(f, n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            aug.set(r, c, m.get(r, c).clone());
        }
        aug.set(r, n + r, f.one());
    }
    let (red, pivots) = rref(f, &aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let mut out = Matrix::zeros(f, n, n);
    for r in 0..n {
        for c in 0..n {
            out.set(r, c, red.get(r, n + c).clone());
        }
    }
    Some(out)
}

/// Smallest `k >= 1` with `ker(m^k) = ker(m^(k+1))`, together with `m^k`.
/// The kernel of `m^k` is then the generalized 0-eigenspace of `m`.
pub fn stable_power<F: Field>(f: &F, m: &Matrix<F::Elem>) -> (usize, Matrix<F::Elem>) {
    let mut power = m.clone();
    let mut k = 1;
    let mut current = rank(f, &power);
    loop {
        if current == 0 {
            return (k, power);
        }
        let next = power.mul(f, m);
        let next_rank = rank(f, &next);
        if next_rank == current {
            return (k, power);
        }
        power = next;
        current = next_rank;
        k += 1;
    }
}

/// An incrementally built row space kept in reduced echelon form.
#[derive(Clone, Debug)]
pub struct RowSpace<T> {
    dim: usize,
    rows: Vec<(usize, Vec<T>)>,
}

impl<T: Clone + PartialEq + fmt::Debug> RowSpace<T> {
    pub fn new(dim: usize) -> Self {
        RowSpace {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the space.
    pub fn reduce<F: Field<Elem = T>>(&self, f: &F, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if f.is_zero(&v[*pivot]) {
                continue;
            }
            let factor = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !f.is_zero(r) {
                    *x = f.sub(x, &f.mul(&factor, r));
                }
            }
        }
        v
    }

    /// Adds `v` if it is independent of the current rows; reports whether it was.
    pub fn insert<F: Field<Elem = T>>(&mut self, f: &F, v: &[T]) -> bool {
        let mut v = self.reduce(f, v);
        let Some(pivot) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[pivot]).expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = f.mul(&inv, x);
        }
        for (_, row) in self.rows.iter_mut() {
            if f.is_zero(&row[pivot]) {
                continue;
            }
            let factor = row[pivot].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !f.is_zero(r) {
                    *x = f.sub(x, &f.mul(&factor, r));
                }
            }
        }
        self.rows.push((pivot, v));
        true
    }

    pub fn contains<F: Field<Elem = T>>(&self, f: &F, v: &[T]) -> bool {
        self.reduce(f, v).iter().all(|x| f.is_zero(x))
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` with integer `p, q`, `q != 0`.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (
            n.trim().parse::<BigInt>().ok()?,
            d.trim().parse::<BigInt>().ok()?,
        ),
        None => (text.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

pub fn is_nonnegative(r: &BigRational) -> bool {
    !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        Rationals.from_i64(n)
    }

    fn mat(rows: &[&[i64]]) -> Matrix<BigRational> {
        let cols = rows[0].len();
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect(),
            cols,
        )
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = mat(&[&[1, 1]]);
        let k = kernel(&Rationals, &m);
        assert_eq!(k, vec![vec![q(-1), q(1)]]);
        assert!(m.apply(&Rationals, &k[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn rank_and_inverse() {
        let m = mat(&[&[2, 1], &[1, 1]]);
        assert_eq!(rank(&Rationals, &m), 2);
        let inv = inverse(&Rationals, &m).unwrap();
        assert_eq!(m.mul(&Rationals, &inv), Matrix::identity(&Rationals, 2));
        assert!(inverse(&Rationals, &mat(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn stable_power_of_nilpotent() {
        let m = mat(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let (k, p) = stable_power(&Rationals, &m);
        assert_eq!(k, 3);
        assert!(p.is_zero(&Rationals));
        let (k, _) = stable_power(&Rationals, &mat(&[&[1, 0], &[0, 0]]));
        assert_eq!(k, 1);
    }

    #[test]
    fn row_space_insertion() {
        let mut rs = RowSpace::new(3);
        assert!(rs.insert(&Rationals, &[q(1), q(2), q(0)]));
        assert!(rs.insert(&Rationals, &[q(0), q(1), q(1)]));
        assert!(!rs.insert(&Rationals, &[q(1), q(3), q(1)]));
        assert!(rs.contains(&Rationals, &[q(2), q(5), q(1)]));
        assert_eq!(rs.rank(), 2);
    }

    #[test]
    fn rational_strings() {
        assert_eq!(
            format_rational(&BigRational::new(BigInt::from(-1), BigInt::from(2))),
            "-1/2"
        );
        assert_eq!(format_rational(&q(3)), "3");
        assert_eq!(
            parse_rational(" 4/6 "),
            Some(BigRational::new(BigInt::from(2), BigInt::from(3)))
        );
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("0.5"), None);
    }
}
