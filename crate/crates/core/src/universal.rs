//! Factoring an imbedding `ε: T -> L` through `U(T)`, and the functor
//! `T -> U(T)` on morphisms.

use crate::error::{Error, Result};
use crate::imbedding::{
    build_universal, generated_subalgebra, imbedding_defect, intertwining_defect, GradedLieWithAut, LieWithAut,
    UniversalAlgebra,
};
use crate::linalg::{is_zero, sub, unit, Matrix, Scalar};
use crate::report::{AxiomReport, Witness};
use crate::structures::{is_lts_homomorphism, lie_hom_defect, tuples, RegularHomLts};

pub const PHI_EXTENDS_EPS: &str = "phi restricts to eps";
pub const PHI_HOMOMORPHISM: &str = "phi homomorphism";
pub const PHI_INTERTWINES: &str = "phi intertwines automorphisms";
pub const UNTWISTING: &str = "untwisting identity";
pub const EPS_INVERSE: &str = "eps intertwines inverses";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalFactorization {
    pub target: LieWithAut,
    pub eps: Matrix,
    /// `T ∧ T -> L`, `a∧b -> [εa, εb]`.
    pub zeta: Matrix,
    /// `U(T) -> L`.
    pub phi: Matrix,
    pub report: AxiomReport,
}

impl UniversalFactorization {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

fn column_defect(lhs: &Matrix, rhs: &Matrix) -> Option<Witness> {
    (0..lhs.cols()).find_map(|c| {
        let d = sub(&lhs.column(c), &rhs.column(c));
        (!is_zero(&d)).then(|| Witness::new(vec![c], d))
    })
}

/// `ε(α⁻¹[a,b,c]) = [[εa, εb], εc]` on basis triples.
pub fn untwisting_defect(eps: &Matrix, t: &RegularHomLts, l: &LieWithAut) -> Option<Witness> {
    let n = t.dim();
    let images: Vec<Vec<Scalar>> = eps.columns().collect();
    tuples(n, 3).into_iter().find_map(|s| {
        let lhs = eps.apply(&t.alpha_inv().apply(t.bracket().entry(s[0], s[1], s[2])));
        let rhs = l.bracket.apply(&l.bracket.apply(&images[s[0]], &images[s[1]]), &images[s[2]]);
        let d = sub(&lhs, &rhs);
        (!is_zero(&d)).then(|| Witness::new(s, d))
    })
}

/// `ε ∘ α⁻¹ = α_L⁻¹ ∘ ε`.
pub fn inverse_twist_defect(eps: &Matrix, t: &RegularHomLts, l: &LieWithAut) -> Result<Option<Witness>> {
    let inv = l.aut.invert()?;
    Ok(intertwining_defect(eps, t.alpha_inv(), &inv))
}

/// `φ(X + a) = <ε,ε>(X) + ε(a)`, where `<ε,ε>` is induced by `ζ` on the
/// quotient `<T,T>`.
pub fn construct_phi(u: &UniversalAlgebra, eps: &Matrix, l: &LieWithAut) -> Result<UniversalFactorization> {
    let t = &u.source;
    if let Some(violation) = imbedding_defect(eps, t, l)? {
        return Err(Error::NotImbedding(violation));
    }
    let images: Vec<Vec<Scalar>> = eps.columns().collect();
    let zeta_columns: Vec<Vec<Scalar>> = u
        .wedge
        .pairs()
        .iter()
        .map(|&(i, j)| l.bracket.apply(&images[i], &images[j]))
        .collect();
    let zeta = if zeta_columns.is_empty() {
        Matrix::zeros(l.dim(), 0)
    } else {
        Matrix::from_columns(l.dim(), &zeta_columns)?
    };
    if u.a_submodule.basis_vectors().iter().any(|v| !is_zero(&zeta.apply(v))) {
        return Err(Error::ZetaNonzero);
    }
    let columns: Vec<Vec<Scalar>> = u
        .wedge_quot
        .coset_basis()
        .iter()
        .map(|&slot| zeta.column(slot))
        .chain(images.iter().cloned())
        .collect();
    let phi = Matrix::from_columns(l.dim(), &columns)?;

    let mut report = AxiomReport::new();
    report.push(PHI_EXTENDS_EPS, column_defect(&(&phi * &u.iota_t), eps));
    report.push(PHI_HOMOMORPHISM, lie_hom_defect(&phi, &u.target.lie.bracket, &l.bracket));
    report.push(PHI_INTERTWINES, intertwining_defect(&phi, &u.target.lie.aut, &l.aut));
    report.push(UNTWISTING, untwisting_defect(eps, t, l));
    report.push(EPS_INVERSE, inverse_twist_defect(eps, t, l)?);
    Ok(UniversalFactorization {
        target: l.clone(),
        eps: eps.clone(),
        zeta,
        phi,
        report,
    })
}

/// Whether two maps `U(T) -> L` that agree on `T` must coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UniquenessCertificate {
    pub agree_on_odd: bool,
    /// The subalgebra generated by `T` is all of `U(T)`.
    pub odd_generates: bool,
    /// Agreement on every vector of that generated subalgebra basis.
    pub agree_on_generated: bool,
    pub phi1_morphism: bool,
    pub phi2_morphism: bool,
    pub equal: bool,
}

impl UniquenessCertificate {
    /// Two morphisms agreeing on a generating set are equal.
    pub fn holds(&self) -> bool {
        let premise = self.agree_on_odd && self.odd_generates && self.phi1_morphism && self.phi2_morphism;
        !premise || (self.agree_on_generated && self.equal)
    }
}

pub fn check_uniqueness(u: &UniversalAlgebra, l: &LieWithAut, phi1: &Matrix, phi2: &Matrix) -> Result<UniquenessCertificate> {
    for phi in [phi1, phi2] {
        if phi.rows() != l.dim() || phi.cols() != u.dim() {
            return Err(Error::DimensionMismatch {
                context: "phi",
                expected: u.dim(),
                found: phi.cols(),
            });
        }
    }
    let morphism = |phi: &Matrix| {
        lie_hom_defect(phi, &u.target.lie.bracket, &l.bracket).is_none() && phi * &u.target.lie.aut == &l.aut * phi
    };
    let diff = phi1 - phi2;
    let odd = u.target.odd_vectors();
    let generated = generated_subalgebra(&u.target.lie.bracket, &odd)?;
    Ok(UniquenessCertificate {
        agree_on_odd: odd.iter().all(|v| is_zero(&diff.apply(v))),
        odd_generates: generated.dim() == u.dim(),
        agree_on_generated: generated.basis_vectors().iter().all(|v| is_zero(&diff.apply(v))),
        phi1_morphism: morphism(phi1),
        phi2_morphism: morphism(phi2),
        equal: diff.is_zero(),
    })
}

/// `U(θ)` for a homomorphism `θ: T -> S`, given both universal algebras.
pub fn functor_a_between(theta: &Matrix, ut: &UniversalAlgebra, us: &UniversalAlgebra) -> Result<Matrix> {
    if !is_lts_homomorphism(theta, ut.source.as_lts(), us.source.as_lts())? {
        return Err(Error::NotHomomorphism("theta"));
    }
    let eps = &us.iota_t * theta;
    Ok(construct_phi(ut, &eps, &us.target.lie)?.phi)
}

/// `U(θ): U(T) -> U(S)`, the factorization of `ι_S ∘ θ`.
pub fn functor_a_on_morphism(theta: &Matrix, t: &RegularHomLts, s: &RegularHomLts) -> Result<Matrix> {
    functor_a_between(theta, &build_universal(t)?, &build_universal(s)?)
}

/// The smallest subalgebra containing the odd part is everything.
pub fn generated_by_odd(g: &GradedLieWithAut) -> bool {
    generated_subalgebra(&g.lie.bracket, &g.odd_vectors())
        .map(|s| s.dim() == g.dim())
        .unwrap_or(false)
}

/// Lie axioms, grading, graded automorphism, and generation by the odd
/// part. Central closure is not tested.
pub fn is_candidate_image(g: &GradedLieWithAut) -> bool {
    g.report().passed() && generated_by_odd(g)
}

/// For an odd-generated `g`, a graded automorphism is fixed by its values
/// on the odd part: returns false only if `first` and `second` are graded
/// automorphisms agreeing on the odd part yet differ.
pub fn determined_by_odd_action(g: &GradedLieWithAut, first: &Matrix, second: &Matrix) -> bool {
    let graded_aut = |aut: &Matrix| {
        let mut h = g.clone();
        h.lie.aut = aut.clone();
        h.report().passed()
    };
    let diff = first - second;
    let agree = g.odd_vectors().iter().all(|v| is_zero(&diff.apply(v)));
    if !(generated_by_odd(g) && agree && graded_aut(first) && graded_aut(second)) {
        return true;
    }
    diff.is_zero()
}

/// The standard basis vector of `T` inside `U(T)`.
pub fn odd_unit(u: &UniversalAlgebra, i: usize) -> Vec<Scalar> {
    unit(u.dim(), u.even_dim() + i)
}
