//! Structure-constant tensors for bilinear and trilinear brackets.

use num_traits::Zero;

use crate::linalg::{axpy, is_zero, Matrix, Scalar};

/// `[e_i, e_j] = sum_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BilinearMap {
    dim: usize,
    coeffs: Vec<Scalar>,
}

impl BilinearMap {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            coeffs: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vec<Scalar>) -> Self {
        let mut out = Self::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                out.set(i, j, &f(i, j));
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim;
        let start = (i * n + j) * n;
        &self.coeffs[start..start + n]
    }

    pub fn set(&mut self, i: usize, j: usize, v: &[Scalar]) {
        let n = self.dim;
        assert_eq!(v.len(), n, "structure vector has wrong length");
        let start = (i * n + j) * n;
        self.coeffs[start..start + n].clone_from_slice(v);
    }

    /// Set `[e_i, e_j] = v` and `[e_j, e_i] = -v`.
    pub fn set_skew(&mut self, i: usize, j: usize, v: &[Scalar]) {
        self.set(i, j, v);
        let negated: Vec<Scalar> = v.iter().map(|x| -x).collect();
        self.set(j, i, &negated);
    }

    pub fn apply(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let e = self.entry(i, j);
                if !is_zero(e) {
                    axpy(&mut out, &(ui * vj), e);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        is_zero(&self.coeffs)
    }

    /// `m ∘ [ , ]`
    pub fn compose_left(&self, m: &Matrix) -> Self {
        Self::from_fn(self.dim, |i, j| m.apply(self.entry(i, j)))
    }

    /// Structure constants in the basis `e'_i = p e_i`, given `p` and its inverse.
    pub fn change_basis(&self, p: &Matrix, p_inv: &Matrix) -> Self {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|i| p.column(i)).collect();
        Self::from_fn(self.dim, |i, j| p_inv.apply(&self.apply(&cols[i], &cols[j])))
    }

    /// First pair violating `c[i][i] = 0` or `c[i][j] = -c[j][i]`.
    pub fn skew_defect(&self) -> Option<(Vec<usize>, Vec<Scalar>)> {
        for i in 0..self.dim {
            for j in i..self.dim {
                let defect: Vec<Scalar> = if i == j {
                    self.entry(i, i).to_vec()
                } else {
                    crate::linalg::add(self.entry(i, j), self.entry(j, i))
                };
                if !is_zero(&defect) {
                    return Some((vec![i, j], defect));
                }
            }
        }
        None
    }

    /// Nonzero entries with `i < j`, in lexicographic order.
    pub fn upper_entries(&self) -> impl Iterator<Item = (usize, usize, &[Scalar])> + '_ {
        let n = self.dim;
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, self.entry(i, j)))
            .filter(|(_, _, v)| !is_zero(v))
    }

    /// Every nonzero entry, in lexicographic order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &[Scalar])> + '_ {
        let n = self.dim;
        (0..n)
            .flat_map(move |i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, self.entry(i, j)))
            .filter(|(_, _, v)| !is_zero(v))
    }

    /// Matrix of `ad(e_i)`: column `j` is `[e_i, e_j]`.
    pub fn ad(&self, i: usize) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.entry(i, j).to_vec()).collect();
        Matrix::from_columns(self.dim, &cols).expect("square")
    }
}

/// `[e_i, e_j, e_k] = sum_l d[i][j][k][l] e_l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TrilinearMap {
    dim: usize,
    coeffs: Vec<Scalar>,
}

impl TrilinearMap {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            coeffs: vec![Scalar::zero(); dim * dim * dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Vec<Scalar>) -> Self {
        let mut out = Self::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    out.set(i, j, k, &f(i, j, k));
                }
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize, k: usize) -> &[Scalar] {
        let n = self.dim;
        let start = ((i * n + j) * n + k) * n;
        &self.coeffs[start..start + n]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: &[Scalar]) {
        let n = self.dim;
        assert_eq!(v.len(), n, "structure vector has wrong length");
        let start = ((i * n + j) * n + k) * n;
        self.coeffs[start..start + n].clone_from_slice(v);
    }

    pub fn apply(&self, u: &[Scalar], v: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let uv = ui * vj;
                for (k, wk) in w.iter().enumerate() {
                    if wk.is_zero() {
                        continue;
                    }
                    let e = self.entry(i, j, k);
                    if !is_zero(e) {
                        axpy(&mut out, &(&uv * wk), e);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        is_zero(&self.coeffs)
    }

    pub fn compose_left(&self, m: &Matrix) -> Self {
        Self::from_fn(self.dim, |i, j, k| m.apply(self.entry(i, j, k)))
    }

    /// First triple violating `d[i][i][k] = 0` or `d[i][j][k] = -d[j][i][k]`.
    pub fn left_skew_defect(&self) -> Option<(Vec<usize>, Vec<Scalar>)> {
        let n = self.dim;
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let defect: Vec<Scalar> = if i == j {
                        self.entry(i, i, k).to_vec()
                    } else {
                        crate::linalg::add(self.entry(i, j, k), self.entry(j, i, k))
                    };
                    if !is_zero(&defect) {
                        return Some((vec![i, j, k], defect));
                    }
                }
            }
        }
        None
    }

    /// Nonzero entries with `i < j`, in lexicographic order.
    pub fn upper_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &[Scalar])> + '_ {
        let n = self.dim;
        (0..n)
            .flat_map(move |i| (i + 1..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
            .map(|(i, j, k)| (i, j, k, self.entry(i, j, k)))
            .filter(|(_, _, _, v)| !is_zero(v))
    }

    /// Every nonzero entry, in lexicographic order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &[Scalar])> + '_ {
        let n = self.dim;
        (0..n)
            .flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
            .map(|(i, j, k)| (i, j, k, self.entry(i, j, k)))
            .filter(|(_, _, _, v)| !is_zero(v))
    }
}
