//! The exterior square `T ∧ T` as a module over the twisted derivations,
//! the map `λ: a∧b -> D_ab`, and the submodule `A(T)`.

use num_traits::{One, Zero};
use rand::Rng;

use crate::derivation::{compute_hdr, d_ab, flatten};
use crate::error::{Error, Result};
use crate::linalg::{axpy, int, span, Matrix, Scalar, Subspace};
use crate::structures::RegularHomLts;

/// Basis `e_i ∧ e_j` with `i < j`, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeBasis {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl WedgeBasis {
    pub fn new(n: usize) -> Self {
        let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Self { n, pairs }
    }

    pub fn base_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair(&self, slot: usize) -> (usize, usize) {
        self.pairs[slot]
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Slot and sign of `e_i ∧ e_j`, or `None` when `i == j`.
    pub fn slot(&self, i: usize, j: usize) -> Option<(usize, Scalar)> {
        let (lo, hi, sign) = match i.cmp(&j) {
            std::cmp::Ordering::Less => (i, j, Scalar::one()),
            std::cmp::Ordering::Greater => (j, i, -Scalar::one()),
            std::cmp::Ordering::Equal => return None,
        };
        // Pairs starting at lo are preceded by sum_{k<lo} (n-1-k) slots.
        let offset = lo * (2 * self.n - lo - 1) / 2;
        Some((offset + hi - lo - 1, sign))
    }

    pub fn wedge(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.pairs
            .iter()
            .map(|&(i, j)| &a[i] * &b[j] - &a[j] * &b[i])
            .collect()
    }
}

/// Lexicographic pairs `(i, j)`, `i < j`.
pub fn wedge_index(n: usize) -> Vec<(usize, usize)> {
    WedgeBasis::new(n).pairs
}

/// `D·w` for a single wedge vector.
pub fn hdr_wedge_action(d: &Matrix, w: &[Scalar], t: &RegularHomLts) -> Vec<Scalar> {
    wedge_action(d, t, &WedgeBasis::new(t.dim())).apply(w)
}

/// `D·(a∧b) = D'a ∧ b + a ∧ D'b` with `D' = α⁻¹ D`, as a matrix on `T ∧ T`.
pub fn wedge_action(x: &Matrix, t: &RegularHomLts, basis: &WedgeBasis) -> Matrix {
    let n = t.dim();
    let xt = t.alpha_inv() * x;
    let w = basis.dim();
    let mut out = Matrix::zeros(w, w);
    for (col, &(i, j)) in basis.pairs().iter().enumerate() {
        let mut image = vec![Scalar::zero(); w];
        for k in 0..n {
            // xt[k][i] e_k ∧ e_j + xt[k][j] e_i ∧ e_k
            if let Some((slot, sign)) = basis.slot(k, j) {
                image[slot] += &sign * &xt[(k, i)];
            }
            if let Some((slot, sign)) = basis.slot(i, k) {
                image[slot] += &sign * &xt[(k, j)];
            }
        }
        out.set_column(col, &image);
    }
    out
}

/// `λ(a∧b) = D_ab`, with values flattened to length `n*n`.
pub fn lambda_matrix(t: &RegularHomLts, basis: &WedgeBasis) -> Matrix {
    let n = t.dim();
    let columns: Vec<Vec<Scalar>> = basis
        .pairs()
        .iter()
        .map(|&(i, j)| flatten(&crate::derivation::d_basis(t, i, j)))
        .collect();
    if columns.is_empty() {
        return Matrix::zeros(n * n, 0);
    }
    Matrix::from_columns(n * n, &columns).expect("uniform lengths")
}

/// `Q(x) = λ(x)·x`.
pub fn quadratic(t: &RegularHomLts, basis: &WedgeBasis, x: &[Scalar]) -> Vec<Scalar> {
    let d = Matrix::from_flat_square(&lambda_matrix(t, basis).apply(x));
    wedge_action(&d, t, basis).apply(x)
}

/// `A(T) = span{ λ(x)·x }`, computed from the polarized values
/// `λ(w_p)·w_q + λ(w_q)·w_p` on basis pairs. Fails if the result is not
/// stable under `HDR(T)` and `α ∧ α`, or if `λ` does not vanish on it.
pub fn compute_a_submodule(t: &RegularHomLts) -> Result<Subspace> {
    let basis = WedgeBasis::new(t.dim());
    let w = basis.dim();
    let lambda = lambda_matrix(t, &basis);
    let actions: Vec<Matrix> = (0..w)
        .map(|p| wedge_action(&Matrix::from_flat_square(&lambda.column(p)), t, &basis))
        .collect();
    let mut vectors = Vec::new();
    for p in 0..w {
        for q in p..w {
            let mut v = actions[p].column(q);
            axpy(&mut v, &Scalar::one(), &actions[q].column(p));
            vectors.push(v);
        }
    }
    let a = span(&vectors, w)?;
    if a.basis_vectors().iter().any(|v| !crate::linalg::is_zero(&lambda.apply(v))) {
        return Err(Error::IllDefined("lambda on A(T)"));
    }
    for x in compute_hdr(t).elements() {
        if !a.image(&wedge_action(&x, t, &basis)).is_subspace_of(&a) {
            return Err(Error::IllDefined("HDR(T)-action on A(T)"));
        }
    }
    if !a.image(&wedge_twist(t, &basis)).is_subspace_of(&a) {
        return Err(Error::IllDefined("alpha on A(T)"));
    }
    Ok(a)
}

/// `γ = α ∧ α`.
pub fn wedge_twist(t: &RegularHomLts, basis: &WedgeBasis) -> Matrix {
    wedge_power(t.alpha(), basis)
}

/// `f ∧ f` for a map `T -> S`, from the basis of `T ∧ T` to that of `S ∧ S`.
pub fn wedge_map(f: &Matrix, source: &WedgeBasis, target: &WedgeBasis) -> Matrix {
    let columns: Vec<Vec<Scalar>> = source
        .pairs()
        .iter()
        .map(|&(i, j)| target.wedge(&f.column(i), &f.column(j)))
        .collect();
    if columns.is_empty() {
        return Matrix::zeros(target.dim(), 0);
    }
    Matrix::from_columns(target.dim(), &columns).expect("uniform lengths")
}

fn wedge_power(f: &Matrix, basis: &WedgeBasis) -> Matrix {
    wedge_map(f, basis, basis)
}

/// Sampled check of `A(T)` against its definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleCheck {
    /// A sample `Q(x)` that fell outside the subspace.
    pub outside: Option<Vec<Scalar>>,
    /// Dimension of the span of all samples.
    pub sampled_dim: usize,
}

impl SampleCheck {
    /// Every sample lies in `A(T)` and together they span it.
    pub fn agrees_with(&self, a: &Subspace) -> bool {
        self.outside.is_none() && self.sampled_dim == a.dim()
    }
}

/// Evaluate `Q(x)` on random integer vectors `x`.
pub fn sample_a_submodule<R: Rng + ?Sized>(
    t: &RegularHomLts,
    a: &Subspace,
    rng: &mut R,
    samples: usize,
) -> Result<SampleCheck> {
    let basis = WedgeBasis::new(t.dim());
    let mut values = Vec::with_capacity(samples);
    let mut outside = None;
    for _ in 0..samples {
        let x: Vec<Scalar> = (0..basis.dim()).map(|_| int(rng.gen_range(-5..=5))).collect();
        let q = quadratic(t, &basis, &x);
        if outside.is_none() && !a.contains(&q) {
            outside = Some(q.clone());
        }
        values.push(q);
    }
    Ok(SampleCheck {
        outside,
        sampled_dim: span(&values, basis.dim())?.dim(),
    })
}

/// `λ` composed with the action, used to check `λ(D·w) = [D, λ(w)]`.
pub fn equivariance_defect(t: &RegularHomLts, x: &Matrix) -> Option<(usize, Vec<Scalar>)> {
    let basis = WedgeBasis::new(t.dim());
    let lambda = lambda_matrix(t, &basis);
    let action = wedge_action(x, t, &basis);
    (0..basis.dim()).find_map(|p| {
        let (i, j) = basis.pair(p);
        let n = t.dim();
        let d = d_ab(t, &crate::linalg::unit(n, i), &crate::linalg::unit(n, j));
        let lhs = lambda.apply(&action.column(p));
        let rhs = flatten(&crate::derivation::hdr_bracket(x, &d, t).expect("square"));
        let defect = crate::linalg::sub(&lhs, &rhs);
        (!crate::linalg::is_zero(&defect)).then_some((p, defect))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::linalg::unit;
    use rand::SeedableRng;

    #[test]
    fn slots_are_lexicographic() {
        let b = WedgeBasis::new(4);
        assert_eq!(b.dim(), 6);
        for (p, &(i, j)) in b.pairs().iter().enumerate() {
            assert_eq!(b.slot(i, j), Some((p, int(1))));
            assert_eq!(b.slot(j, i), Some((p, int(-1))));
        }
        assert_eq!(b.slot(2, 2), None);
    }

    #[test]
    fn small_indices() {
        assert_eq!(wedge_index(2), vec![(0, 1)]);
        assert_eq!(wedge_index(3), vec![(0, 1), (0, 2), (1, 2)]);
        assert!(wedge_index(1).is_empty());
    }

    #[test]
    fn wedge_is_alternating() {
        let b = WedgeBasis::new(3);
        let x = vec![int(1), int(2), int(3)];
        let y = vec![int(0), int(1), int(-1)];
        assert!(crate::linalg::is_zero(&b.wedge(&x, &x)));
        assert_eq!(b.wedge(&x, &y), crate::linalg::neg(&b.wedge(&y, &x)));
        assert_eq!(b.wedge(&unit(3, 2), &unit(3, 0)), vec![int(0), int(-1), int(0)]);
    }

    #[test]
    fn action_matches_definition() {
        let t = corpus::sl2_lts(&corpus::sl2_diagonal_twist());
        let b = WedgeBasis::new(3);
        let x = crate::derivation::d_basis(&t, 0, 2);
        let act = wedge_action(&x, &t, &b);
        let xt = t.alpha_inv() * &x;
        let (u, v) = (vec![int(1), int(-2), int(3)], vec![int(4), int(0), int(1)]);
        let expected = crate::linalg::add(&b.wedge(&xt.apply(&u), &v), &b.wedge(&u, &xt.apply(&v)));
        assert_eq!(act.apply(&b.wedge(&u, &v)), expected);
    }

    #[test]
    fn lambda_is_equivariant() {
        for entry in corpus::regular_lts_corpus() {
            for x in compute_hdr(&entry.lts).elements() {
                assert_eq!(equivariance_defect(&entry.lts, &x), None, "{}", entry.name);
            }
        }
    }

    #[test]
    fn a_submodule_of_small_examples() {
        assert_eq!(compute_a_submodule(&corpus::sl2_lts(&Matrix::identity(3))).unwrap().dim(), 0);
        assert_eq!(compute_a_submodule(&corpus::zero_lts(4)).unwrap().dim(), 0);
    }

    #[test]
    fn samples_span_a_submodule() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for entry in corpus::regular_lts_corpus() {
            let a = compute_a_submodule(&entry.lts).unwrap();
            let check = sample_a_submodule(&entry.lts, &a, &mut rng, 40).unwrap();
            assert!(check.agrees_with(&a), "{}", entry.name);
        }
    }
}
