//! Dense matrices over scalars or over algebra elements.
//!
//! Spin-`j` matrices are indexed by `i = 0..2j`, standing for the weight
//! `m = j - i`.

use crate::error::{Error, Result};
use crate::ncrewrite::{GenKind, NCPoly, Presentation, Word};
use crate::qscalar::Ring;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn try_from_fn<E>(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Result<T, E>,
    ) -> Result<Self, E> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j)?);
            }
        }
        Ok(Self { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.data.iter().enumerate().map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(&mut f).collect() }
    }

    pub fn try_map<U: Clone, E>(&self, mut f: impl FnMut(&T) -> Result<U, E>) -> Result<Matrix<U>, E> {
        let data = self.data.iter().map(&mut f).collect::<Result<Vec<_>, E>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect()).collect()
    }
}

impl<S: Ring> Matrix<S> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| S::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn diag(d: Vec<S>) -> Self {
        let n = d.len();
        Self::from_fn(n, n, |i, j| if i == j { d[i].clone() } else { S::zero() })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix shapes");
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = S::zero();
            for k in 0..self.cols {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                let y = other.get(k, j);
                if !y.is_zero() {
                    acc = acc.add(&x.mul(y));
                }
            }
            acc
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).add(other.get(i, j)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).sub(other.get(i, j)))
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|x| x.mul(c))
    }

    /// Kronecker product; index `(i1, i2)` maps to `i1·n2 + i2`.
    pub fn kron(&self, other: &Self) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            let (i1, i2) = (i / other.rows, i % other.rows);
            let (j1, j2) = (j / other.cols, j % other.cols);
            self.get(i1, j1).mul(other.get(i2, j2))
        })
    }

    pub fn magnitude(&self) -> f64 {
        self.data.iter().map(Ring::magnitude).fold(0.0, f64::max)
    }

    /// Whether every entry is negligible relative to `scale`.
    pub fn negligible(&self, scale: f64) -> bool {
        self.data.iter().all(|x| x.negligible(scale))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Inverse by fraction-free Gauss–Jordan elimination (Bareiss updates),
    /// pivoting on the first nonzero entry of each column.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.rows;
        if n != self.cols {
            return Err(Error::domain("inverse of a non-square matrix"));
        }
        let mut m = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                S::one()
            } else {
                S::zero()
            }
        });
        let mut prev = S::one();
        let scale = self.magnitude().max(1.0);
        for k in 0..n {
            let pivot_row =
                (k..n).find(|&i| !m.get(i, k).negligible(scale)).ok_or_else(|| Error::domain("singular matrix"))?;
            if pivot_row != k {
                for j in 0..2 * n {
                    let a = m.get(k, j).clone();
                    let b = m.get(pivot_row, j).clone();
                    m.set(k, j, b);
                    m.set(pivot_row, j, a);
                }
            }
            let pivot = m.get(k, k).clone();
            let prev_inv = prev.inv().ok_or_else(|| Error::Internal("zero Bareiss divisor".into()))?;
            for i in 0..n {
                if i == k {
                    continue;
                }
                let f = m.get(i, k).clone();
                for j in 0..2 * n {
                    let v = pivot.mul(m.get(i, j)).sub(&f.mul(m.get(k, j))).mul(&prev_inv);
                    m.set(i, j, v);
                }
            }
            prev = pivot;
        }
        // Every diagonal entry now equals the determinant.
        let det_inv = prev.inv().ok_or_else(|| Error::domain("singular matrix"))?;
        Ok(Self::from_fn(n, n, |i, j| m.get(i, n + j).mul(&det_inv)))
    }
}

/// Matrices with algebra entries; products normal-order each entry.
pub type PolyMatrix<S> = Matrix<NCPoly<S>>;

pub fn poly_identity<S: Ring>(n: usize) -> PolyMatrix<S> {
    Matrix::from_fn(n, n, |i, j| if i == j { NCPoly::one() } else { NCPoly::zero() })
}

pub fn poly_zero<S: Ring>(rows: usize, cols: usize) -> PolyMatrix<S> {
    Matrix::from_fn(rows, cols, |_, _| NCPoly::zero())
}

pub fn poly_mul<S: Ring>(pres: &Presentation<S>, x: &PolyMatrix<S>, y: &PolyMatrix<S>) -> Result<PolyMatrix<S>> {
    assert_eq!(x.cols(), y.rows(), "matrix shapes");
    Matrix::try_from_fn(x.rows(), y.cols(), |i, j| {
        let mut acc = NCPoly::zero();
        for k in 0..x.cols() {
            let a = x.get(i, k);
            let b = y.get(k, j);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            acc = &acc + &a.concat(b);
        }
        pres.normal_order(&acc)
    })
}

pub fn poly_add<S: Ring>(x: &PolyMatrix<S>, y: &PolyMatrix<S>) -> PolyMatrix<S> {
    Matrix::from_fn(x.rows(), x.cols(), |i, j| x.get(i, j) + y.get(i, j))
}

pub fn poly_sub<S: Ring>(x: &PolyMatrix<S>, y: &PolyMatrix<S>) -> PolyMatrix<S> {
    Matrix::from_fn(x.rows(), x.cols(), |i, j| x.get(i, j) - y.get(i, j))
}

/// Multiplies a scalar matrix into a polynomial matrix from the left.
pub fn scalar_poly_mul<S: Ring>(x: &Matrix<S>, y: &PolyMatrix<S>) -> PolyMatrix<S> {
    Matrix::from_fn(x.rows(), y.cols(), |i, j| {
        let mut acc = NCPoly::zero();
        for k in 0..x.cols() {
            if !x.get(i, k).is_zero() {
                acc = &acc + &y.get(k, j).scale(x.get(i, k));
            }
        }
        acc
    })
}

/// Multiplies a scalar matrix into a polynomial matrix from the right.
pub fn poly_scalar_mul<S: Ring>(x: &PolyMatrix<S>, y: &Matrix<S>) -> PolyMatrix<S> {
    Matrix::from_fn(x.rows(), y.cols(), |i, j| {
        let mut acc = NCPoly::zero();
        for k in 0..x.cols() {
            if !y.get(k, j).is_zero() {
                acc = &acc + &x.get(i, k).scale(y.get(k, j));
            }
        }
        acc
    })
}

/// Splits off a power of the leading scaling generator shared by every term:
/// `m = g^e · m'`. Returns `(e, m')` with `e = 0` when the powers differ.
pub fn factor_scaling<S: Ring, T: Ring>(m: &PolyMatrix<S>, pres: &Presentation<T>) -> (i32, PolyMatrix<S>) {
    let Some(g) = (0..pres.leg_size()).find(|&g| pres.kind(g) == GenKind::Scaling) else {
        return (0, m.clone());
    };
    let mut powers = m.entries().flat_map(|(_, _, e)| e.terms().map(|(w, _)| w.exponent_of(g)));
    let Some(e) = powers.next() else {
        return (0, m.clone());
    };
    if e == 0 || powers.any(|x| x != e) {
        return (0, m.clone());
    }
    let stripped =
        m.map(|x| x.map_words(|w| Word::from_runs(w.runs().iter().map(|&(h, k)| (h, if h == g { k - e } else { k })))));
    (e, stripped)
}
