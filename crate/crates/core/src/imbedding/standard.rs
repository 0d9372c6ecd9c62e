//! The standard imbedding `GHE(T) = IHD(T) + T`.

use crate::derivation::{compute_ihd, d_basis, flatten, hdr_bracket, InnerDerivationSpace};
use crate::error::{Error, Result};
use crate::linalg::{kernel, neg, sub, zeros, Matrix, Scalar};
use crate::report::{ImbeddingViolation, Witness};
use crate::structures::{tuples, RegularHomLts};
use crate::tensor::BilinearMap;

use super::lie::{GradedLieWithAut, LieWithAut};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardImbedding {
    pub source: RegularHomLts,
    pub ihd: InnerDerivationSpace,
    /// Even part is the `IHD(T)` basis, odd part is `T`.
    pub target: GradedLieWithAut,
    /// Inclusion of `T` as the odd component.
    pub iota: Matrix,
    pub ihd_dim: usize,
}

impl StandardImbedding {
    pub fn dim(&self) -> usize {
        self.target.dim()
    }

    /// `IHD(T)` coordinates of a derivation, placed in the even block.
    pub fn even_coordinates(&self, x: &Matrix) -> Option<Vec<Scalar>> {
        let coords = self.ihd.coordinates(x)?;
        let mut v = zeros(self.dim());
        v[..self.ihd_dim].clone_from_slice(&coords);
        Some(v)
    }
}

fn place(total: usize, offset: usize, v: &[Scalar]) -> Vec<Scalar> {
    let mut out = zeros(total);
    out[offset..offset + v.len()].clone_from_slice(v);
    out
}

/// `D_{αa, αb}` is assembled from `D_{ab}` on generators; the map is
/// well-defined only if every linear relation among the `D_{e_i e_j}`
/// survives.
fn alpha_hat_on_ihd(t: &RegularHomLts, ihd: &InnerDerivationSpace) -> Result<Matrix> {
    let n = t.dim();
    let m = ihd.dim();
    let alpha = t.alpha();
    let gens: Vec<Vec<Scalar>> = ihd.generators.iter().map(|(_, d)| flatten(d)).collect();
    let images: Vec<Vec<Scalar>> = ihd
        .generators
        .iter()
        .map(|&((i, j), _)| {
            flatten(&crate::derivation::d_ab(t, &alpha.column(i), &alpha.column(j)))
        })
        .collect();
    if gens.is_empty() {
        return Ok(Matrix::zeros(m, m));
    }
    let g = Matrix::from_columns(n * n, &gens)?;
    let h = Matrix::from_columns(n * n, &images)?;
    for relation in kernel(&g).basis_vectors() {
        if !crate::linalg::is_zero(&h.apply(&relation)) {
            return Err(Error::IllDefined("alpha-hat"));
        }
    }
    let columns = ihd
        .basis
        .basis_vectors()
        .iter()
        .map(|x| {
            let c = g.solve(x).expect("basis vector lies in the span of the generators");
            ihd.basis
                .coordinates(&h.apply(&c))
                .ok_or(Error::IllDefined("alpha-hat"))
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_columns(m, &columns)
}

/// `[X+a, Y+b] = [X,Y] + D_ab + X'(b) - Y'(a)` with `X' = α⁻¹ X`, and
/// `α̂ = (D_ab -> D_{αa,αb}) + α`.
pub fn build_ghe(t: &RegularHomLts) -> Result<StandardImbedding> {
    let n = t.dim();
    let ihd = compute_ihd(t)?;
    let m = ihd.dim();
    let total = m + n;
    let elements = ihd.elements();
    let inv = t.alpha_inv();
    let ihd_coords = |x: &Matrix| ihd.coordinates(x).ok_or(Error::IllDefined("GHE bracket"));

    let mut bracket = BilinearMap::zero(total);
    for p in 0..m {
        for q in 0..m {
            let c = ihd_coords(&hdr_bracket(&elements[p], &elements[q], t)?)?;
            bracket.set(p, q, &place(total, 0, &c));
        }
        let xt = inv * &elements[p];
        for b in 0..n {
            let v = place(total, m, &xt.column(b));
            bracket.set(m + b, p, &neg(&v));
            bracket.set(p, m + b, &v);
        }
    }
    for a in 0..n {
        for b in 0..n {
            let c = ihd_coords(&d_basis(t, a, b))?;
            bracket.set(m + a, m + b, &place(total, 0, &c));
        }
    }

    let aut = alpha_hat_on_ihd(t, &ihd)?.direct_sum(t.alpha());
    let lie = LieWithAut::new(bracket, aut)?;
    let target = GradedLieWithAut::new(lie, (0..m).collect(), (m..total).collect())?;
    let iota = Matrix::from_fn(total, n, |r, c| if r == m + c { crate::linalg::int(1) } else { crate::linalg::int(0) });

    let report = target.report();
    if !report.passed() {
        return Err(Error::AxiomFailure(report));
    }
    if imbedding_defect(&iota, t, &target.lie)?.is_some() {
        return Err(Error::IllDefined("general imbedding"));
    }
    Ok(StandardImbedding {
        source: t.clone(),
        ihd,
        target,
        iota,
        ihd_dim: m,
    })
}

/// The bracket as it reads with `- Y'(b)` in the last term, evaluated on
/// basis pairs. Not skew symmetric; kept as a reproducible counterexample.
pub fn ghe_literal_bracket(g: &StandardImbedding) -> BilinearMap {
    let m = g.ihd_dim;
    let total = g.dim();
    let mut b = g.target.lie.bracket.clone();
    // On a basis pair (odd a, even Y) the `- Y'(b)` term is Y'(0) = 0 and
    // X = 0, b = 0, so the whole mixed bracket vanishes.
    for a in m..total {
        for q in 0..m {
            b.set(a, q, &zeros(total));
        }
    }
    b
}

/// The same formula evaluated directly on `x = X + a`, `y = Y + b`,
/// with both given in `GHE(T)` coordinates.
pub fn ghe_literal_formula(g: &StandardImbedding, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let m = g.ihd_dim;
    let total = g.dim();
    let t = &g.source;
    let split = |v: &[Scalar]| -> (Matrix, Vec<Scalar>) {
        let d = g.ihd.basis.combine(&v[..m]);
        (Matrix::from_flat_square(&d), v[m..].to_vec())
    };
    let (xd, xa) = split(x);
    let (yd, yb) = split(y);
    let even = hdr_bracket(&xd, &yd, t).expect("square");
    let dab = crate::derivation::d_ab(t, &xa, &yb);
    let mut out = g
        .even_coordinates(&(&even + &dab))
        .expect("IHD is closed");
    let odd = sub(&(t.alpha_inv() * &xd).apply(&yb), &(t.alpha_inv() * &yd).apply(&yb));
    for (k, v) in odd.into_iter().enumerate() {
        out[m + k] += v;
    }
    debug_assert_eq!(out.len(), total);
    out
}

/// First violation of `eps[a,b,c] = aut_L [[eps a, eps b], eps c]` or
/// `eps α = aut_L eps`.
pub fn imbedding_defect(
    eps: &Matrix,
    t: &RegularHomLts,
    l: &LieWithAut,
) -> Result<Option<ImbeddingViolation>> {
    let n = t.dim();
    if eps.cols() != n || eps.rows() != l.dim() {
        return Err(Error::DimensionMismatch {
            context: "imbedding",
            expected: n,
            found: eps.cols(),
        });
    }
    let images: Vec<Vec<Scalar>> = (0..n).map(|i| eps.column(i)).collect();
    for triple in tuples(n, 3) {
        let (a, b, c) = (triple[0], triple[1], triple[2]);
        let lhs = eps.apply(t.bracket().entry(a, b, c));
        let inner = l.bracket.apply(&images[a], &images[b]);
        let rhs = l.aut.apply(&l.bracket.apply(&inner, &images[c]));
        let d = sub(&lhs, &rhs);
        if !crate::linalg::is_zero(&d) {
            return Ok(Some(ImbeddingViolation::Bracket(Witness::new(triple, d))));
        }
    }
    let twist = super::lie::intertwining_defect(eps, t.alpha(), &l.aut);
    Ok(twist.map(ImbeddingViolation::Twist))
}

pub fn verify_imbedding(eps: &Matrix, t: &RegularHomLts, l: &LieWithAut) -> Result<bool> {
    Ok(imbedding_defect(eps, t, l)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::linalg::unit;
    use crate::structures::{axiom, lie_report};

    #[test]
    fn zero_bracket_ghe_is_abelian() {
        let t = corpus::zero_lts(3);
        let g = build_ghe(&t).unwrap();
        assert_eq!(g.dim(), 3);
        assert!(g.target.lie.bracket.is_zero());
        assert_eq!(g.target.lie.aut, *t.alpha());
    }

    #[test]
    fn sl2_ghe_has_dimension_six() {
        let t = corpus::sl2_lts(&Matrix::identity(3));
        let g = build_ghe(&t).unwrap();
        assert_eq!((g.ihd_dim, g.dim()), (3, 6));
        assert!(g.target.report().passed());
        assert!(verify_imbedding(&g.iota, &t, &g.target.lie).unwrap());
    }

    #[test]
    fn even_part_of_sl2_ghe_is_sl2() {
        // ad: sl2 -> IHD is an isomorphism onto the even part.
        let t = corpus::sl2_lts(&Matrix::identity(3));
        let g = build_ghe(&t).unwrap();
        let sl2 = corpus::sl2();
        let ad_coords: Vec<Vec<Scalar>> = (0..3).map(|i| g.ihd.coordinates(&sl2.ad(i)).unwrap()).collect();
        let phi = Matrix::from_columns(3, &ad_coords).unwrap();
        let even = BilinearMap::from_fn(3, |p, q| g.target.lie.bracket.entry(p, q)[..3].to_vec());
        assert!(crate::structures::lie_hom_defect(&phi, &sl2, &even).is_none());
        assert!(phi.invert().is_ok());
    }

    #[test]
    fn twisted_sl2_ghe_passes_everything() {
        for sigma in [corpus::sl2_diagonal_twist(), corpus::sl2_involution()] {
            let t = corpus::sl2_lts(&sigma);
            let g = build_ghe(&t).unwrap();
            assert!(g.target.report().passed());
            assert!(verify_imbedding(&g.iota, &t, &g.target.lie).unwrap());
        }
    }

    #[test]
    fn zero_map_is_an_imbedding() {
        let t = corpus::sl2_lts(&Matrix::identity(3));
        let g = build_ghe(&t).unwrap();
        assert!(verify_imbedding(&Matrix::zeros(6, 3), &t, &g.target.lie).unwrap());
        assert!(verify_imbedding(&Matrix::zeros(5, 3), &t, &g.target.lie).is_err());
    }

    #[test]
    fn non_commuting_automorphism_breaks_imbedding() {
        // Compose iota with the automorphism -1 on the odd part of GHE(sl2):
        // the bracket equation survives but the twist square fails for a
        // target whose automorphism does not match.
        let t = corpus::sl2_lts(&corpus::sl2_diagonal_twist());
        let g = build_ghe(&t).unwrap();
        let mut l = g.target.lie.clone();
        l.aut = Matrix::identity(6);
        match imbedding_defect(&g.iota, &t, &l).unwrap() {
            Some(ImbeddingViolation::Bracket(w)) | Some(ImbeddingViolation::Twist(w)) => {
                assert!(!crate::linalg::is_zero(&w.defect))
            }
            None => panic!("expected a violation"),
        }
    }

    #[test]
    fn literal_bracket_is_not_skew() {
        let t = corpus::sl2_lts(&Matrix::identity(3));
        let g = build_ghe(&t).unwrap();
        let literal = ghe_literal_bracket(&g);
        let report = lie_report(&literal);
        assert!(!report.get(axiom::SKEW).unwrap().passed());
        assert!(lie_report(&g.target.lie.bracket).passed());
        // On x = X + a the literal formula gives 0, the bilinear extension does not.
        let mut found = false;
        for p in 0..3 {
            for a in 3..6 {
                let x = crate::linalg::add(&unit(6, p), &unit(6, a));
                assert!(crate::linalg::is_zero(&ghe_literal_formula(&g, &x, &x)));
                found |= !crate::linalg::is_zero(&literal.apply(&x, &x));
            }
        }
        assert!(found);
    }
}
