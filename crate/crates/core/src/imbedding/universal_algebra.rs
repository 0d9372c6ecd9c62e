//! The universal imbedding `U(T) = <T,T> + T` with `<T,T> = (T ∧ T) / A(T)`.

use crate::derivation::InnerDerivationSpace;
use crate::error::{Error, Result};
use crate::linalg::{int, is_zero, neg, unit, zeros, Matrix, QuotientSpace, Scalar, Subspace};
use crate::report::{AxiomReport, Witness};
use crate::structures::{lie_hom_defect, RegularHomLts};
use crate::tensor::BilinearMap;

use super::lie::{generated_subalgebra, intertwining_defect, GradedLieWithAut, LieWithAut};
use super::standard::{build_ghe, imbedding_defect, StandardImbedding};
use super::wedge::{compute_a_submodule, lambda_matrix, wedge_action, wedge_twist, WedgeBasis};

pub const NU_SURJECTIVE: &str = "nu surjective";
pub const NU_HOMOMORPHISM: &str = "nu homomorphism";
pub const NU_INTERTWINES: &str = "nu intertwines automorphisms";
pub const KERNEL_CENTRAL: &str = "ker nu central";
pub const NU_EXTENDS_IOTA: &str = "nu restricts to iota";
pub const ODD_GENERATES: &str = "generated by odd part";
pub const TWIST_INVERSE: &str = "alpha_U inverse";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalAlgebra {
    pub source: RegularHomLts,
    pub wedge: WedgeBasis,
    pub a_submodule: Subspace,
    pub wedge_quot: QuotientSpace,
    /// Even part is `<T,T>` in quotient coordinates, odd part is `T`.
    pub target: GradedLieWithAut,
    pub iota_t: Matrix,
    /// `U(T) -> GHE(T)`.
    pub nu: Matrix,
    /// `T ∧ T -> End(T)`, values flattened.
    pub lambda: Matrix,
    /// `<T,T> -> End(T)`, values flattened.
    pub mu: Matrix,
    pub ghe: StandardImbedding,
}

impl UniversalAlgebra {
    pub fn dim(&self) -> usize {
        self.target.dim()
    }

    pub fn even_dim(&self) -> usize {
        self.wedge_quot.dim()
    }

    pub fn ihd(&self) -> &InnerDerivationSpace {
        &self.ghe.ihd
    }

    /// `<a, b>` in `U(T)` coordinates.
    pub fn pair(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut v = self.wedge_quot.project(&self.wedge.wedge(a, b));
        v.resize(self.dim(), int(0));
        v
    }
}

fn place(total: usize, offset: usize, v: &[Scalar]) -> Vec<Scalar> {
    let mut out = zeros(total);
    out[offset..offset + v.len()].clone_from_slice(v);
    out
}

/// Even block: the map induced on `<T,T>` by a wedge-level map that
/// preserves `A(T)`.
fn induced_on_quotient(quot: &QuotientSpace, wedge_level: &Matrix) -> Matrix {
    let k = quot.dim();
    let columns: Vec<Vec<Scalar>> = quot
        .coset_basis()
        .iter()
        .map(|&slot| quot.project(&wedge_level.column(slot)))
        .collect();
    if columns.is_empty() {
        return Matrix::zeros(k, 0);
    }
    Matrix::from_columns(k, &columns).expect("uniform lengths")
}

fn twist_on_u(wedge: &WedgeBasis, quot: &QuotientSpace, alpha: &Matrix) -> Matrix {
    let gamma = super::wedge::wedge_map(alpha, wedge, wedge);
    induced_on_quotient(quot, &gamma).direct_sum(alpha)
}

/// Assemble `U(T)`, `λ`, `μ` and `ν`, then check every invariant.
pub fn build_universal(t: &RegularHomLts) -> Result<UniversalAlgebra> {
    let n = t.dim();
    let ghe = build_ghe(t)?;
    let wedge = WedgeBasis::new(n);
    let a = compute_a_submodule(t)?;
    let quot = QuotientSpace::new(wedge.dim(), a.clone())?;
    let k = quot.dim();
    let total = k + n;
    let lambda = lambda_matrix(t, &wedge);
    let slots = quot.coset_basis().to_vec();
    let derivations: Vec<Matrix> = slots
        .iter()
        .map(|&s| Matrix::from_flat_square(&lambda.column(s)))
        .collect();

    let mut bracket = BilinearMap::zero(total);
    for (p, d) in derivations.iter().enumerate() {
        let action = wedge_action(d, t, &wedge);
        for (r, &s) in slots.iter().enumerate() {
            bracket.set(p, r, &place(total, 0, &quot.project(&action.column(s))));
        }
        let dt = t.alpha_inv() * d;
        for b in 0..n {
            let v = place(total, k, &dt.column(b));
            bracket.set(k + b, p, &neg(&v));
            bracket.set(p, k + b, &v);
        }
    }
    for i in 0..n {
        for j in 0..n {
            let w = wedge.wedge(&unit(n, i), &unit(n, j));
            bracket.set(k + i, k + j, &place(total, 0, &quot.project(&w)));
        }
    }
    if bracket.skew_defect().is_some() {
        return Err(Error::IllDefined("bracket on <T,T>"));
    }

    if !a.image(&wedge_twist(t, &wedge)).is_subspace_of(&a) {
        return Err(Error::IllDefined("alpha_U"));
    }
    let aut = twist_on_u(&wedge, &quot, t.alpha());
    let lie = LieWithAut::new(bracket, aut)?;
    let target = GradedLieWithAut::new(lie, (0..k).collect(), (k..total).collect())?;
    let iota_t = Matrix::from_fn(total, n, |r, c| int(i64::from(r == k + c)));

    let mu = if k == 0 {
        Matrix::zeros(n * n, 0)
    } else {
        Matrix::from_columns(n * n, &slots.iter().map(|&s| lambda.column(s)).collect::<Vec<_>>())?
    };
    let m = ghe.ihd_dim;
    let nu_even: Vec<Vec<Scalar>> = derivations
        .iter()
        .map(|d| ghe.even_coordinates(d).ok_or(Error::IllDefined("mu")))
        .collect::<Result<_>>()?;
    let nu = Matrix::from_fn(m + n, total, |r, c| {
        if c < k {
            nu_even[c][r].clone()
        } else {
            int(i64::from(r == m + c - k))
        }
    });

    let u = UniversalAlgebra {
        source: t.clone(),
        wedge,
        a_submodule: a,
        wedge_quot: quot,
        target,
        iota_t,
        nu,
        lambda,
        mu,
        ghe,
    };
    let mut report = u.target.report();
    report.extend(universal_report(&u));
    if !report.passed() {
        return Err(Error::AxiomFailure(report));
    }
    if imbedding_defect(&u.iota_t, t, &u.target.lie)?.is_some() {
        return Err(Error::IllDefined("universal imbedding"));
    }
    Ok(u)
}

/// Odd generation, the inverse of `α_U`, and the central extension checks.
pub fn universal_report(u: &UniversalAlgebra) -> AxiomReport {
    let mut report = AxiomReport::new();
    let generated = generated_subalgebra(&u.target.lie.bracket, &u.target.odd_vectors())
        .map(|s| s.dim())
        .unwrap_or(0);
    report.push(
        ODD_GENERATES,
        (generated != u.dim()).then(|| Witness::new(vec![generated, u.dim()], vec![])),
    );
    let inverse = twist_on_u(&u.wedge, &u.wedge_quot, u.source.alpha_inv());
    let product = &inverse * &u.target.lie.aut;
    let twist_witness = (0..u.dim()).find_map(|c| {
        let d = crate::linalg::sub(&product.column(c), &unit(u.dim(), c));
        (!is_zero(&d)).then(|| Witness::new(vec![c], d))
    });
    report.push(TWIST_INVERSE, twist_witness);
    report.extend(central_extension_report(u));
    report
}

/// `ν` is onto `GHE(T)`, a homomorphism, intertwines `α_U` with `α̂`,
/// restricts to `ι` on `T`, and has central kernel.
pub fn central_extension_report(u: &UniversalAlgebra) -> AxiomReport {
    let ghe = &u.ghe.target.lie;
    let mut report = AxiomReport::new();
    let image = crate::linalg::span(&u.nu.columns().collect::<Vec<_>>(), ghe.dim())
        .unwrap_or_else(|_| Subspace::zero(ghe.dim()));
    let missing = (0..ghe.dim()).find(|&i| !image.contains(&unit(ghe.dim(), i)));
    report.push(
        NU_SURJECTIVE,
        missing.map(|i| Witness::new(vec![i], unit(ghe.dim(), i))),
    );
    report.push(
        NU_HOMOMORPHISM,
        lie_hom_defect(&u.nu, &u.target.lie.bracket, &ghe.bracket),
    );
    report.push(
        NU_INTERTWINES,
        intertwining_defect(&u.nu, &u.target.lie.aut, &ghe.aut),
    );
    let restricted = &u.nu * &u.iota_t;
    let iota_witness = (0..restricted.cols()).find_map(|c| {
        let d = crate::linalg::sub(&restricted.column(c), &u.ghe.iota.column(c));
        (!is_zero(&d)).then(|| Witness::new(vec![c], d))
    });
    report.push(NU_EXTENDS_IOTA, iota_witness);
    let center = u.target.lie.center();
    let kernel_witness = crate::linalg::kernel(&u.nu)
        .basis_vectors()
        .into_iter()
        .enumerate()
        .find(|(_, v)| !center.contains(v))
        .map(|(i, v)| Witness::new(vec![i], v));
    report.push(KERNEL_CENTRAL, kernel_witness);
    report
}

pub fn check_central_extension(u: &UniversalAlgebra) -> bool {
    central_extension_report(u).passed()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn zero_bracket_dimensions() {
        for n in 1..=4 {
            let u = build_universal(&corpus::zero_lts(n)).unwrap();
            let k = n * (n - 1) / 2;
            assert_eq!((u.even_dim(), u.dim()), (k, k + n));
            assert_eq!(crate::linalg::kernel(&u.nu).dim(), k);
            assert!(check_central_extension(&u));
        }
    }

    #[test]
    fn dim_one_is_abelian_line() {
        let u = build_universal(&corpus::zero_lts(1)).unwrap();
        assert_eq!(u.dim(), 1);
        assert!(u.target.lie.bracket.is_zero());
    }

    #[test]
    fn sl2_universal_equals_standard() {
        let t = corpus::sl2_lts(&Matrix::identity(3));
        let u = build_universal(&t).unwrap();
        assert_eq!(u.a_submodule.dim(), 0);
        assert_eq!(u.dim(), 6);
        assert!(u.nu.invert().is_ok());
    }

    #[test]
    fn sl2_plus_line_has_nontrivial_quotient() {
        let entry = corpus::regular_lts_corpus().into_iter().find(|e| e.name == "sl2+line").unwrap();
        let u = build_universal(&entry.lts).unwrap();
        assert_eq!((u.a_submodule.dim(), u.dim()), (3, 7));
        assert_eq!(crate::linalg::kernel(&u.nu).dim(), 0);
    }

    #[test]
    fn whole_corpus_builds() {
        for entry in corpus::regular_lts_corpus() {
            let u = build_universal(&entry.lts).unwrap();
            assert!(u.target.report().passed(), "{}", entry.name);
            assert!(universal_report(&u).passed(), "{}", entry.name);
        }
    }

    #[test]
    fn perturbed_bracket_breaks_central_extension() {
        let t = corpus::sl2_lts(&Matrix::identity(3));
        let mut u = build_universal(&t).unwrap();
        let mut v = u.target.lie.bracket.entry(3, 5).to_vec();
        v[0] += int(1);
        u.target.lie.bracket.set_skew(3, 5, &v);
        assert!(!check_central_extension(&u));
    }
}
