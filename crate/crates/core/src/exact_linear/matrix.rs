//! Dense square-friendly matrices, characteristic and minimal polynomials.

use std::ops::Mul;

use crate::error::{Error, Result};
use crate::scalar::{from_count, Field, Ring};

use super::polynomial::Polynomial;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = T::one();
        }
        m
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
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cell = &mut out.entries[i * rhs.cols + j];
                    *cell = cell.clone() + a.clone() * rhs.get(k, j).clone();
                }
            }
        }
        Ok(out)
    }

    /// Matrix with the rows and columns in `keep`, in that order.
    pub fn submatrix(&self, keep: &[usize]) -> Self {
        let n = keep.len();
        let mut out = Self::zeros(n, n);
        for (i, &r) in keep.iter().enumerate() {
            for (j, &c) in keep.iter().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

impl<T: Ring> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    /// Panics on mismatched shapes; use [`Matrix::matmul`] to get an error instead.
    fn mul(self, rhs: Self) -> Matrix<T> {
        self.matmul(rhs).expect("matrix shapes must agree")
    }
}

/// Monic `det(xI - m)` by the Faddeev–LeVerrier recursion:
/// `N_k = m·N_{k-1} + c_{n-k+1}·I`, `c_{n-k} = -tr(m·N_k)/k`.
pub fn char_poly<T: Field>(m: &Matrix<T>) -> Result<Polynomial<T>> {
    m.require_square()?;
    let n = m.rows;
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    let mut aux = Matrix::zeros(n, n);
    for k in 1..=n {
        let mut next = m * &aux;
        let c = coeffs[n - k + 1].clone();
        for i in 0..n {
            let cell = &mut next.entries[i * n + i];
            *cell = cell.clone() + c.clone();
        }
        let t = (m * &next).trace();
        coeffs[n - k] = -t / from_count::<T>(k);
        aux = next;
    }
    Ok(Polynomial::new(coeffs))
}

/// Monic minimal polynomial: the lcm over basis vectors `e_i` of the least
/// polynomial `p` with `p(m)·e_i = 0`, found from the Krylov sequence
/// `e_i, m·e_i, m²·e_i, …`.
pub fn min_poly<T: Field>(m: &Matrix<T>) -> Result<Polynomial<T>> {
    m.require_square()?;
    let n = m.rows;
    let mut acc = Polynomial::one();
    for i in 0..n {
        let mut e = vec![T::zero(); n];
        e[i] = T::one();
        let local = annihilator(m, e)?;
        acc = acc.lcm(&local);
        // Stop once the degree hits n: nothing larger can divide char_poly.
        if acc.degree() == Some(n) {
            break;
        }
    }
    Ok(acc)
}

/// Least monic `p` with `p(m)·v = 0`.
pub fn annihilator<T: Field>(m: &Matrix<T>, v: Vec<T>) -> Result<Polynomial<T>> {
    m.require_square()?;
    if v.len() != m.rows {
        return Err(Error::Dimension(format!(
            "vector of length {} for a {}x{} matrix",
            v.len(),
            m.rows,
            m.cols
        )));
    }
    // Echelon rows: (pivot column, reduced vector, polynomial that produced it).
    let mut basis: Vec<(usize, Vec<T>, Polynomial<T>)> = Vec::new();
    let mut current = v;
    for k in 0..=m.rows {
        let mut reduced = current.clone();
        let mut poly = Polynomial::monomial(k);
        for (pivot, row, p) in &basis {
            if reduced[*pivot].is_zero() {
                continue;
            }
            let factor = reduced[*pivot].clone() / row[*pivot].clone();
            for (x, y) in reduced.iter_mut().zip(row) {
                *x = x.clone() - factor.clone() * y.clone();
            }
            poly = poly - p.scale(&factor);
        }
        match reduced.iter().position(|x| !x.is_zero()) {
            None => return Ok(poly),
            Some(pivot) => basis.push((pivot, reduced, poly)),
        }
        current = m.mul_vec(&current)?;
    }
    unreachable!("more than n linearly independent vectors in dimension n")
}
