//! Exact rational scalars, dense matrices and fraction-free elimination.

use std::fmt;
use std::ops::Index;

use malachite::num::arithmetic::traits::{DivExact, Lcm, Sign};
use malachite::num::basic::traits::{One, Zero};
use malachite::num::logic::traits::SignificantBits;
pub use malachite::{Integer, Natural, Rational};

use crate::error::{Error, Result};

pub type Vector = Vec<Rational>;

/// Parses `num` or `num/den` in base 10 with an optional leading `-` on the numerator.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
        return Err(format!("malformed numerator in {s:?}"));
    }
    let n: Integer = num.parse().map_err(|_| format!("malformed numerator in {s:?}"))?;
    let d = match den {
        None => Natural::ONE,
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|c| c.is_ascii_digit()) {
                return Err(format!("malformed denominator in {s:?}"));
            }
            let d: Natural = d.parse().map_err(|_| format!("malformed denominator in {s:?}"))?;
            if d == 0u32 {
                return Err(format!("zero denominator in {s:?}"));
            }
            d
        }
    };
    Ok(Rational::from_integers(n, Integer::from(d)))
}

/// Canonical `num/den` rendering, `den` omitted when it is 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn rat(n: i64) -> Rational {
    Rational::from(n)
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::from_signeds(n, d)
}

pub fn vec_of(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| Rational::from(x)).collect()
}

pub fn is_integer(r: &Rational) -> bool {
    *r.denominator_ref() == 1u32
}

pub fn is_negative(r: &Rational) -> bool {
    r.sign() == std::cmp::Ordering::Less
}

pub fn is_positive(r: &Rational) -> bool {
    r.sign() == std::cmp::Ordering::Greater
}

/// Total bit length of numerator and denominator.
pub fn bit_size(r: &Rational) -> u64 {
    r.numerator_ref().significant_bits() + r.denominator_ref().significant_bits()
}

pub fn max_bit_size<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> u64 {
    xs.into_iter().map(bit_size).max().unwrap_or(0)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    let mut s = Rational::ZERO;
    for (x, y) in a.iter().zip(b) {
        if *x != 0u32 && *y != 0u32 {
            s += x * y;
        }
    }
    s
}

pub fn norm1(v: &[Rational]) -> Rational {
    v.iter().map(|x| if is_negative(x) { -x } else { x.clone() }).sum()
}

pub fn norm_inf(v: &[Rational]) -> Rational {
    v.iter()
        .map(|x| if is_negative(x) { -x } else { x.clone() })
        .max()
        .unwrap_or(Rational::ZERO)
}

pub fn squared_norm(v: &[Rational]) -> Rational {
    v.iter().map(|x| x * x).sum()
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(v: &[Rational], s: &Rational) -> Vector {
    v.iter().map(|x| x * s).collect()
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> Natural {
    xs.into_iter()
        .fold(Natural::ONE, |acc, x| acc.lcm(x.denominator_ref()))
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::dim("rows of unequal length"));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Builds a `dim × cols.len()` matrix whose columns are the given vectors.
    pub fn from_columns(dim: usize, cols: &[Vec<Rational>]) -> Result<Self> {
        if cols.iter().any(|c| c.len() != dim) {
            return Err(Error::dim(format!("column length differs from {dim}")));
        }
        let mut m = Matrix::zeros(dim, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.data[i * cols.len() + j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| vec_of(r)).collect()).expect("ragged literal")
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

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                m.data[i * idx.len() + k] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::dim(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let col = other.column(j);
                m.data[i * other.cols + j] = dot(self.row(i), &col);
            }
        }
        Ok(m)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::dim(format!("vector of length {} against {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(format_rational).collect()).collect();
        write!(f, "Matrix{rows:?}")
    }
}

/// Scales every row by the lcm of its denominators; returns integer rows and the product of scales.
fn integer_rows(m: &Matrix) -> (Vec<Vec<Integer>>, Integer) {
    let mut scale = Integer::ONE;
    let rows = (0..m.rows)
        .map(|i| {
            let l = Integer::from(denominator_lcm(m.row(i)));
            let row = m
                .row(i)
                .iter()
                .map(|x| {
                    let (n, d) = x.numerator_and_denominator_ref();
                    let sign = if is_negative(x) { -Integer::ONE } else { Integer::ONE };
                    sign * Integer::from(n) * (&l).div_exact(Integer::from(d))
                })
                .collect();
            scale *= l;
            row
        })
        .collect();
    (rows, scale)
}

/// Fraction-free elimination on integer rows. Returns the rank and, for square
/// input, the determinant up to the sign of the row swaps performed.
fn bareiss(mut a: Vec<Vec<Integer>>, cols: usize) -> (usize, Integer, bool) {
    let rows = a.len();
    let mut prev = Integer::ONE;
    let mut r = 0;
    let mut swapped = false;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0u32) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            swapped = !swapped;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[i][j] * &a[r][c] - &a[i][c] * &a[r][j];
                a[i][j] = v.div_exact(&prev);
            }
            a[i][c] = Integer::ZERO;
        }
        prev = a[r][c].clone();
        r += 1;
    }
    (r, prev, swapped)
}

/// Exact determinant by fraction-free Bareiss elimination.
pub fn determinant(m: &Matrix) -> Result<Rational> {
    if !m.is_square() {
        return Err(Error::dim(format!("determinant of a {}x{} matrix", m.rows, m.cols)));
    }
    if m.rows == 0 {
        return Ok(Rational::ONE);
    }
    let (rows, scale) = integer_rows(m);
    let (rank, last, swapped) = bareiss(rows, m.cols);
    if rank < m.rows {
        return Ok(Rational::ZERO);
    }
    let det = if swapped { -last } else { last };
    Ok(Rational::from_integers(det, scale))
}

/// Exact rank by fraction-free elimination.
pub fn rank(m: &Matrix) -> usize {
    let (rows, _) = integer_rows(m);
    bareiss(rows, m.cols).0
}

/// Solves `M x = rhs` for square nonsingular `M`.
pub fn solve_square(m: &Matrix, rhs: &[Rational]) -> Result<Vector> {
    if !m.is_square() {
        return Err(Error::dim(format!("solve with a {}x{} matrix", m.rows, m.cols)));
    }
    if rhs.len() != m.rows {
        return Err(Error::dim("right-hand side length differs from matrix size"));
    }
    let n = m.rows;
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| a[i][c] != 0u32).ok_or(Error::Singular)?;
        a.swap(p, c);
        let inv = Rational::ONE / &a[c][c];
        for x in a[c][c..].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && a[i][c] != 0u32 {
                let f = a[i][c].clone();
                for j in c..=n {
                    let t = &f * &a[c][j];
                    a[i][j] -= t;
                }
            }
        }
    }
    Ok(a.into_iter().map(|row| row[n].clone()).collect())
}

/// True iff `b` lies in the linear span of `points`.
pub fn in_linear_span(points: &[Vector], b: &[Rational]) -> Result<bool> {
    let dim = b.len();
    let p = Matrix::from_columns(dim, points)?;
    let mut with_b = points.to_vec();
    with_b.push(b.to_vec());
    let pb = Matrix::from_columns(dim, &with_b)?;
    Ok(rank(&p) == rank(&pb))
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub fn rref(m: &Matrix) -> (Vec<Vector>, Vec<usize>) {
    let mut a = m.to_rows();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0u32) else {
            continue;
        };
        a.swap(p, r);
        let inv = Rational::ONE / &a[r][c];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..a.len() {
            if i != r && a[i][c] != 0u32 {
                let f = a[i][c].clone();
                for j in c..m.cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// A basis of the null space `{x : M x = 0}`.
pub fn nullspace(m: &Matrix) -> Vec<Vector> {
    let (rows, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::ZERO; m.cols];
            v[f] = Rational::ONE;
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
}

/// Some solution of `M x = rhs` (free variables set to zero), or `None` if inconsistent.
pub fn solve_any(m: &Matrix, rhs: &[Rational]) -> Result<Option<Vector>> {
    if rhs.len() != m.rows {
        return Err(Error::dim("right-hand side length differs from row count"));
    }
    let aug = Matrix::from_rows(
        (0..m.rows)
            .map(|i| {
                let mut row = m.row(i).to_vec();
                row.push(rhs[i].clone());
                row
            })
            .collect(),
    )?;
    let (rows, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = vec![Rational::ZERO; m.cols];
    for (row, &p) in rows.iter().zip(&pivots) {
        x[p] = row[m.cols].clone();
    }
    Ok(Some(x))
}
