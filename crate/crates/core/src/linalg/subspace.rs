use num_traits::{One, Zero};

use super::{axpy, is_zero, Matrix, Scalar};
use crate::error::{Error, Result};

/// Reduced row echelon form and the strictly increasing list of pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for k in 0..cols {
                let tmp = a[(p, k)].clone();
                a[(p, k)] = a[(r, k)].clone();
                a[(r, k)] = tmp;
            }
        }
        let inv = a[(r, c)].recip();
        for x in a.row_mut(r).iter_mut().skip(c) {
            *x *= &inv;
        }
        let pivot_row: Vec<Scalar> = a.row(r).to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = -a[(i, c)].clone();
            if !factor.is_zero() {
                axpy(a.row_mut(i), &factor, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// `{v : m v = 0}` in canonical form.
pub fn kernel(m: &Matrix) -> Subspace {
    let (reduced, pivots) = rref(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vec<Scalar>> = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Scalar::zero(); n];
            v[f] = Scalar::one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -reduced[(k, f)].clone();
            }
            v
        })
        .collect();
    Subspace::from_independent(n, vectors)
}

/// Linear span of `vectors` in canonical form.
pub fn span(vectors: &[Vec<Scalar>], ambient_dim: usize) -> Result<Subspace> {
    for (index, v) in vectors.iter().enumerate() {
        if v.len() != ambient_dim {
            return Err(Error::VectorLength {
                index,
                expected: ambient_dim,
                found: v.len(),
            });
        }
    }
    Ok(Subspace::from_independent(ambient_dim, vectors.to_vec()))
}

/// A linear subspace of `Q^n`, stored by its RREF basis so equality is literal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    fn from_independent(ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        let m = Matrix::from_rows(ambient_dim, &vectors).expect("vector lengths checked");
        let (reduced, pivots) = rref(&m);
        let basis = reduced.select(&(0..pivots.len()).collect::<Vec<_>>(), &(0..ambient_dim).collect::<Vec<_>>());
        Self {
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|k| self.basis.row(k).to_vec()).collect()
    }

    /// `v` minus its component along the basis, read off at the pivots.
    /// The result vanishes at every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut out = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            let c = -out[p].clone();
            if !c.is_zero() {
                axpy(&mut out, &c, self.basis.row(k));
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero(&self.reduce(v))
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` lies outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Vector with the given coordinates in the canonical basis.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        let mut out = vec![Scalar::zero(); self.ambient_dim];
        for (k, c) in coords.iter().enumerate() {
            axpy(&mut out, c, self.basis.row(k));
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && (0..self.dim()).all(|k| other.contains(self.basis.row(k)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut vectors = self.basis_vectors();
        vectors.extend(other.basis_vectors());
        Self::from_independent(self.ambient_dim, vectors)
    }

    /// Image under a linear map whose column count matches the ambient dimension.
    pub fn image(&self, map: &Matrix) -> Subspace {
        assert_eq!(map.cols(), self.ambient_dim);
        let vectors: Vec<_> = self.basis_vectors().iter().map(|v| map.apply(v)).collect();
        Self::from_independent(map.rows(), vectors)
    }
}

/// `Q^n / killed`, with coordinates on the non-pivot columns of the killed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSpace {
    ambient_dim: usize,
    killed: Subspace,
    coset_basis: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(ambient_dim: usize, killed: Subspace) -> Result<Self> {
        if killed.ambient_dim != ambient_dim {
            return Err(Error::DimensionMismatch {
                context: "quotient",
                expected: ambient_dim,
                found: killed.ambient_dim,
            });
        }
        let mut is_pivot = vec![false; ambient_dim];
        for &p in killed.pivots() {
            is_pivot[p] = true;
        }
        let coset_basis = (0..ambient_dim).filter(|&i| !is_pivot[i]).collect();
        Ok(Self {
            ambient_dim,
            killed,
            coset_basis,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.coset_basis.len()
    }

    pub fn killed(&self) -> &Subspace {
        &self.killed
    }

    /// Ambient indices whose unit vectors represent the quotient basis.
    pub fn coset_basis(&self) -> &[usize] {
        &self.coset_basis
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let reduced = self.killed.reduce(v);
        self.coset_basis.iter().map(|&i| reduced[i].clone()).collect()
    }

    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        let mut out = vec![Scalar::zero(); self.ambient_dim];
        for (c, &i) in coords.iter().zip(&self.coset_basis) {
            out[i] = c.clone();
        }
        out
    }

    /// Matrix of `project`, `dim x ambient_dim`.
    pub fn projection_matrix(&self) -> Matrix {
        let columns: Vec<_> = (0..self.ambient_dim)
            .map(|i| self.project(&super::unit(self.ambient_dim, i)))
            .collect();
        Matrix::from_columns(self.dim(), &columns).expect("projected lengths agree")
    }
}
