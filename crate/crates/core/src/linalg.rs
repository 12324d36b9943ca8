//! Scalars and small dense matrices.
//!
//! Everything here is generic over [`Scalar`] so the same code runs on exact
//! rationals (structure constants, bracket transport) and on `f64`.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational from a finite float (every finite f64 is a dyadic rational).
pub fn from_f64(x: f64) -> Result<Rational> {
    Rational::from_float(x).ok_or_else(|| Error::InvalidParameter(format!("non-finite value {x}")))
}

/// Parses "3", "-1/2", "0.25" or "1.5e-3" exactly.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::InvalidParameter(format!("cannot parse `{text}` as a number (use 3, -1/2 or 0.25)"));
    if t.contains('/') {
        let r: Rational = t.parse().map_err(|_| bad())?;
        return Ok(r);
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() || !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let n: num_bigint::BigInt = format!("{whole}{frac}").parse().map_err(|_| bad())?;
    let ten = num_bigint::BigInt::from(10);
    let shift = exp - frac.len() as i32;
    let scale = Rational::from_integer(num_traits::pow(ten, shift.unsigned_abs() as usize));
    let mut r = Rational::from_integer(n);
    r = if shift >= 0 { r * scale } else { r / scale };
    Ok(if neg { -r } else { r })
}

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(r: &Rational) -> Self;
    /// Magnitude used for pivoting and tolerance checks.
    fn magnitude(&self) -> f64;
    /// True when arithmetic is exact, so zero tests need no tolerance.
    const EXACT: bool;
}

impl Scalar for f64 {
    fn from_rational(r: &Rational) -> Self {
        to_f64(r)
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    const EXACT: bool = false;
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn magnitude(&self) -> f64 {
        to_f64(&self.abs())
    }
    const EXACT: bool = true;
}

/// Levi-Civita symbol in the plane, eps(0,1) = +1.
pub fn eps(i: usize, j: usize) -> i64 {
    match (i, j) {
        (0, 1) => 1,
        (1, 0) => -1,
        _ => 0,
    }
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch { expected: c, found: rows.iter().map(Vec::len).find(|&l| l != c).unwrap_or(0) });
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn sub_matrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a.clone() * other[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + prod;
                }
            }
        }
        Ok(out)
    }

    pub fn matvec(&self, v: &[T]) -> Result<Vec<T>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.rows * self.cols, found: other.rows * other.cols });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(Scalar::magnitude).fold(0.0, f64::max)
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (i..self.cols).all(|j| (self[(i, j)].clone() + self[(j, i)].clone()).is_zero())
            })
    }

    /// Zero test used during elimination: exact for rationals, relative for floats.
    fn negligible(x: &T, scale: f64) -> bool {
        if T::EXACT {
            x.is_zero()
        } else {
            x.magnitude() <= 1e-13 * scale.max(f64::MIN_POSITIVE)
        }
    }

    /// Row echelon reduction with partial pivoting; returns the rank.
    fn eliminate(a: &mut Self, mut companion: Option<&mut Self>) -> usize {
        let scale = a.max_abs();
        let (n, m) = (a.rows, a.cols);
        let mut rank = 0;
        for col in 0..m {
            if rank == n {
                break;
            }
            let pivot = (rank..n)
                .filter(|&r| !Self::negligible(&a[(r, col)], scale))
                .max_by(|&x, &y| a[(x, col)].magnitude().total_cmp(&a[(y, col)].magnitude()));
            let Some(p) = pivot else { continue };
            a.swap_rows(p, rank);
            if let Some(c) = companion.as_deref_mut() {
                c.swap_rows(p, rank);
            }
            let inv = T::one() / a[(rank, col)].clone();
            for j in 0..m {
                a[(rank, j)] = a[(rank, j)].clone() * inv.clone();
            }
            if let Some(c) = companion.as_deref_mut() {
                for j in 0..c.cols {
                    c[(rank, j)] = c[(rank, j)].clone() * inv.clone();
                }
            }
            for r in 0..n {
                if r == rank || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for j in 0..m {
                    a[(r, j)] = a[(r, j)].clone() - factor.clone() * a[(rank, j)].clone();
                }
                if let Some(c) = companion.as_deref_mut() {
                    for j in 0..c.cols {
                        c[(r, j)] = c[(r, j)].clone() - factor.clone() * c[(rank, j)].clone();
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        Self::eliminate(&mut a, None)
    }

    /// Gauss-Jordan inverse. Singular input reports its rank.
    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let mut a = self.clone();
        let mut inv = Self::identity(self.rows);
        let rank = Self::eliminate(&mut a, Some(&mut inv));
        if rank < self.rows {
            return Err(Error::Singular { rank, dim: self.rows });
        }
        Ok(inv)
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl Matrix<Rational> {
    pub fn to_f64(&self) -> Matrix<f64> {
        self.map(to_f64)
    }
}

/// Largest entrywise deviation relative to the largest entry of `reference`.
pub fn relative_deviation(a: &Matrix<f64>, reference: &Matrix<f64>) -> f64 {
    let scale = reference.max_abs().max(f64::MIN_POSITIVE);
    match a.sub(reference) {
        Ok(d) => d.max_abs() / scale,
        Err(_) => f64::INFINITY,
    }
}
