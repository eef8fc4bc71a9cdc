use alloc::vec::Vec;
use core::fmt;

use super::ncpoly::NcPoly;
use crate::scalars::{Coefficient, ExpScalar};

/// Minimal ring interface needed by dense matrices.
pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
}

macro_rules! ring_via_ops {
    ($t:ty) => {
        impl Ring for $t {
            fn zero() -> Self {
                <$t>::zero()
            }
            fn is_zero(&self) -> bool {
                <$t>::is_zero(self)
            }
            fn add_ref(&self, o: &Self) -> Self {
                self + o
            }
            fn sub_ref(&self, o: &Self) -> Self {
                self - o
            }
            fn mul_ref(&self, o: &Self) -> Self {
                self * o
            }
        }
    };
}
ring_via_ops!(Coefficient);
ring_via_ops!(ExpScalar);
ring_via_ops!(NcPoly);

/// Dense row-major matrix with 0-based indexing.
#[derive(Clone, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Ring> Matrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| E::zero())
    }

    pub fn identity(n: usize, one: E) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { one.clone() } else { E::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: E) {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        self.data[r * self.cols + c] = x;
    }

    /// Adds `x` to the entry at `(r, c)`.
    pub fn accumulate(&mut self, r: usize, c: usize, x: &E) {
        let i = r * self.cols + c;
        self.data[i] = self.data[i].add_ref(x);
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &E)> {
        self.data
            .iter()
            .enumerate()
            .map(move |(i, x)| (i / self.cols, i % self.cols, x))
    }

    pub fn map<F: Ring>(&self, f: impl Fn(&E) -> F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c).add_ref(o.get(r, c)))
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c).sub_ref(o.get(r, c)))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = o.get(k, c);
                    if !b.is_zero() {
                        out.accumulate(r, c, &a.mul_ref(b));
                    }
                }
            }
        }
        out
    }

    /// Kronecker product; entry `(i·p + k, j·q + l)` is `a_ij b_kl`.
    pub fn kron(&self, o: &Self) -> Self {
        Self::from_fn(self.rows * o.rows, self.cols * o.cols, |r, c| {
            let (i, k) = (r / o.rows, r % o.rows);
            let (j, l) = (c / o.cols, c % o.cols);
            let a = self.get(i, j);
            if a.is_zero() {
                E::zero()
            } else {
                a.mul_ref(o.get(k, l))
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// First nonzero entry, scanning row by row.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.entries().find(|(_, _, x)| !x.is_zero()).map(|(r, c, _)| (r, c))
    }
}

/// Permutation matrix `V_σ` with `(V_σ)_{i, σ_i} = 1` for a 1-based `σ`.
pub fn permutation_matrix<E: Ring>(sigma: &[usize], one: E) -> Matrix<E> {
    let n = sigma.len();
    Matrix::from_fn(n, n, |r, c| if sigma[r] == c + 1 { one.clone() } else { E::zero() })
}

impl<E: Ring + fmt::Debug> fmt::Debug for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<&E> = (0..self.cols).map(|c| self.get(r, c)).collect();
            writeln!(f, "{:?}", row)?;
        }
        Ok(())
    }
}
