//! Hom-Lie algebras and Hom-Lie triple systems: types, axiom checks,
//! homomorphisms and the induced constructions between them.
//!
//! All identities are multilinear, so every check runs over basis tuples
//! and is exact. Failing checks carry the first basis tuple (in
//! lexicographic order) where the defect is nonzero.

use crate::error::{Error, Result};
use crate::linalg::{is_zero, sub, Matrix, Scalar};
use crate::report::{AxiomReport, Witness};
use crate::tensor::{BilinearMap, TrilinearMap};

/// Axiom names used in reports.
pub mod axiom {
    pub const SKEW: &str = "skew symmetry";
    pub const TWISTED_JACOBI: &str = "twisted jacobi";
    pub const JACOBI: &str = "jacobi";
    pub const LEFT_SKEW: &str = "left skew symmetry";
    pub const TERNARY_CYCLIC: &str = "ternary cyclic";
    pub const HOM_NAMBU: &str = "hom-nambu";
    pub const UNTWISTED_NAMBU: &str = "untwisted nambu";
    pub const UNTWISTED_NAMBU_VARIANT: &str = "untwisted nambu (last slot variant)";
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomLieAlgebra {
    bracket: BilinearMap,
    alpha: Matrix,
}

impl HomLieAlgebra {
    /// Rejects brackets that are not skew symmetric.
    pub fn new(bracket: BilinearMap, alpha: Matrix) -> Result<Self> {
        check_square(&alpha, bracket.dim(), "twisting map")?;
        if let Some((indices, _)) = bracket.skew_defect() {
            return Err(Error::SkewViolation { indices });
        }
        Ok(Self { bracket, alpha })
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn bracket(&self) -> &BilinearMap {
        &self.bracket
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomLts {
    bracket: TrilinearMap,
    alpha1: Matrix,
    alpha2: Matrix,
}

impl HomLts {
    /// Rejects brackets that are not left skew symmetric.
    pub fn new(bracket: TrilinearMap, alpha1: Matrix, alpha2: Matrix) -> Result<Self> {
        check_square(&alpha1, bracket.dim(), "first twisting map")?;
        check_square(&alpha2, bracket.dim(), "second twisting map")?;
        if let Some((indices, _)) = bracket.left_skew_defect() {
            return Err(Error::SkewViolation { indices });
        }
        Ok(Self {
            bracket,
            alpha1,
            alpha2,
        })
    }

    pub fn with_twist(bracket: TrilinearMap, alpha: Matrix) -> Result<Self> {
        Self::new(bracket, alpha.clone(), alpha)
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn bracket(&self) -> &TrilinearMap {
        &self.bracket
    }

    pub fn alpha1(&self) -> &Matrix {
        &self.alpha1
    }

    pub fn alpha2(&self) -> &Matrix {
        &self.alpha2
    }
}

/// A Hom-LTS whose single twisting map is an automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularHomLts {
    lts: HomLts,
    alpha_inv: Matrix,
}

impl RegularHomLts {
    pub fn new(bracket: TrilinearMap, alpha: Matrix) -> Result<Self> {
        Self::from_lts(HomLts::with_twist(bracket, alpha)?)
    }

    /// Checks the axioms, `alpha1 = alpha2`, invertibility and that the twist
    /// is a homomorphism.
    pub fn from_lts(lts: HomLts) -> Result<Self> {
        if lts.alpha1 != lts.alpha2 {
            return Err(Error::NotRegular("twisting maps differ"));
        }
        let report = check_hom_lts(&lts);
        if !report.passed() {
            return Err(Error::AxiomFailure(report));
        }
        let alpha_inv = lts
            .alpha1
            .invert()
            .map_err(|_| Error::NotRegular("twisting map is singular"))?;
        if lts_hom_defect(&lts.alpha1, &lts.bracket, &lts.bracket).is_some() {
            return Err(Error::NotRegular("twisting map is not a homomorphism"));
        }
        Ok(Self { lts, alpha_inv })
    }

    pub fn dim(&self) -> usize {
        self.lts.dim()
    }

    pub fn bracket(&self) -> &TrilinearMap {
        &self.lts.bracket
    }

    pub fn alpha(&self) -> &Matrix {
        &self.lts.alpha1
    }

    pub fn alpha_inv(&self) -> &Matrix {
        &self.alpha_inv
    }

    pub fn as_lts(&self) -> &HomLts {
        &self.lts
    }

    pub fn triple(&self, a: &[Scalar], b: &[Scalar], c: &[Scalar]) -> Vec<Scalar> {
        self.lts.bracket.apply(a, b, c)
    }
}

fn check_square(m: &Matrix, n: usize, context: &'static str) -> Result<()> {
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch {
            context,
            expected: n,
            found: if m.rows() != n { m.rows() } else { m.cols() },
        });
    }
    Ok(())
}

fn first_defect<I>(tuples: I, mut defect: impl FnMut(&[usize]) -> Vec<Scalar>) -> Option<Witness>
where
    I: IntoIterator<Item = Vec<usize>>,
{
    tuples.into_iter().find_map(|t| {
        let d = defect(&t);
        (!is_zero(&d)).then(|| Witness::new(t, d))
    })
}

/// All index tuples of length `k` over `0..n`, lexicographically.
pub(crate) fn tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.checked_pow(k as u32).unwrap_or(0);
    let total = if k == 0 { 1 } else { total };
    (0..total).map(move |mut x| {
        let mut t = vec![0; k];
        for slot in t.iter_mut().rev() {
            *slot = x % n.max(1);
            x /= n.max(1);
        }
        t
    })
}

/// Skew symmetry and twisted Jacobi for an arbitrary (possibly non-skew) tensor.
pub fn hom_lie_report(bracket: &BilinearMap, alpha: &Matrix) -> AxiomReport {
    let n = bracket.dim();
    let mut report = AxiomReport::new();
    report.push(
        axiom::SKEW,
        bracket.skew_defect().map(|(t, d)| Witness::new(t, d)),
    );
    let ac: Vec<Vec<Scalar>> = (0..n).map(|i| alpha.column(i)).collect();
    let jacobi = first_defect(tuples(n, 3), |t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        let mut s = bracket.apply(&ac[a], bracket.entry(b, c));
        crate::linalg::axpy(&mut s, &crate::linalg::int(1), &bracket.apply(&ac[b], bracket.entry(c, a)));
        crate::linalg::axpy(&mut s, &crate::linalg::int(1), &bracket.apply(&ac[c], bracket.entry(a, b)));
        s
    });
    report.push(axiom::TWISTED_JACOBI, jacobi);
    report
}

/// Skew symmetry and the untwisted Jacobi identity.
pub fn lie_report(bracket: &BilinearMap) -> AxiomReport {
    let mut report = hom_lie_report(bracket, &Matrix::identity(bracket.dim()));
    report.verdicts[1].axiom = axiom::JACOBI;
    report
}

pub fn check_hom_lie(l: &HomLieAlgebra) -> AxiomReport {
    hom_lie_report(&l.bracket, &l.alpha)
}

/// Left skew symmetry, the ternary cyclic identity and the ternary Hom-Nambu
/// identity for an arbitrary tensor and twisting pair.
pub fn hom_lts_report(bracket: &TrilinearMap, alpha1: &Matrix, alpha2: &Matrix) -> AxiomReport {
    let n = bracket.dim();
    let mut report = AxiomReport::new();
    report.push(
        axiom::LEFT_SKEW,
        bracket.left_skew_defect().map(|(t, d)| Witness::new(t, d)),
    );
    let cyclic = first_defect(tuples(n, 3), |t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        crate::linalg::add(
            &crate::linalg::add(bracket.entry(a, b, c), bracket.entry(b, c, a)),
            bracket.entry(c, a, b),
        )
    });
    report.push(axiom::TERNARY_CYCLIC, cyclic);

    let a1: Vec<Vec<Scalar>> = (0..n).map(|i| alpha1.column(i)).collect();
    let a2: Vec<Vec<Scalar>> = (0..n).map(|i| alpha2.column(i)).collect();
    let nambu = first_defect(tuples(n, 5), |t| {
        let (a, b, c, d, e) = (t[0], t[1], t[2], t[3], t[4]);
        let lhs = bracket.apply(&a1[a], &a2[b], bracket.entry(c, d, e));
        let r1 = bracket.apply(bracket.entry(a, b, c), &a1[d], &a2[e]);
        let r2 = bracket.apply(&a1[c], bracket.entry(a, b, d), &a2[e]);
        let r3 = bracket.apply(&a1[c], &a2[d], bracket.entry(a, b, e));
        sub(&sub(&sub(&lhs, &r1), &r2), &r3)
    });
    report.push(axiom::HOM_NAMBU, nambu);
    report
}

pub fn check_hom_lts(t: &HomLts) -> AxiomReport {
    hom_lts_report(&t.bracket, &t.alpha1, &t.alpha2)
}

/// First basis pair where `f[a,b] != [fa,fb]`.
pub fn lie_hom_defect(f: &Matrix, source: &BilinearMap, target: &BilinearMap) -> Option<Witness> {
    let fc: Vec<Vec<Scalar>> = (0..source.dim()).map(|i| f.column(i)).collect();
    first_defect(tuples(source.dim(), 2), |t| {
        sub(&f.apply(source.entry(t[0], t[1])), &target.apply(&fc[t[0]], &fc[t[1]]))
    })
}

/// First basis triple where `f[a,b,c] != [fa,fb,fc]`.
pub fn lts_hom_defect(f: &Matrix, source: &TrilinearMap, target: &TrilinearMap) -> Option<Witness> {
    let fc: Vec<Vec<Scalar>> = (0..source.dim()).map(|i| f.column(i)).collect();
    first_defect(tuples(source.dim(), 3), |t| {
        sub(
            &f.apply(source.entry(t[0], t[1], t[2])),
            &target.apply(&fc[t[0]], &fc[t[1]], &fc[t[2]]),
        )
    })
}

fn check_map_shape(f: &Matrix, from: usize, to: usize) -> Result<()> {
    if f.cols() != from {
        return Err(Error::DimensionMismatch {
            context: "map domain",
            expected: from,
            found: f.cols(),
        });
    }
    if f.rows() != to {
        return Err(Error::DimensionMismatch {
            context: "map codomain",
            expected: to,
            found: f.rows(),
        });
    }
    Ok(())
}

/// `f` preserves the triple bracket and intertwines both twisting maps.
pub fn is_lts_homomorphism(f: &Matrix, t: &HomLts, s: &HomLts) -> Result<bool> {
    check_map_shape(f, t.dim(), s.dim())?;
    Ok(lts_hom_defect(f, &t.bracket, &s.bracket).is_none()
        && f * &t.alpha1 == &s.alpha1 * f
        && f * &t.alpha2 == &s.alpha2 * f)
}

/// `f` preserves the bracket and intertwines the twisting maps.
pub fn is_lie_homomorphism(f: &Matrix, l1: &HomLieAlgebra, l2: &HomLieAlgebra) -> Result<bool> {
    check_map_shape(f, l1.dim(), l2.dim())?;
    Ok(lie_hom_defect(f, &l1.bracket, &l2.bracket).is_none() && f * &l1.alpha == &l2.alpha * f)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TwistClass {
    Plain,
    Multiplicative,
    Regular,
}

pub trait Twisted {
    fn twist_class(&self) -> TwistClass;
}

fn classify(is_hom: bool, alpha: &Matrix) -> TwistClass {
    match (is_hom, alpha.invert().is_ok()) {
        (false, _) => TwistClass::Plain,
        (true, false) => TwistClass::Multiplicative,
        (true, true) => TwistClass::Regular,
    }
}

impl Twisted for HomLieAlgebra {
    fn twist_class(&self) -> TwistClass {
        classify(lie_hom_defect(&self.alpha, &self.bracket, &self.bracket).is_none(), &self.alpha)
    }
}

impl Twisted for HomLts {
    fn twist_class(&self) -> TwistClass {
        if self.alpha1 != self.alpha2 {
            return TwistClass::Plain;
        }
        classify(lts_hom_defect(&self.alpha1, &self.bracket, &self.bracket).is_none(), &self.alpha1)
    }
}

fn require_lie_endomorphism(lie: &BilinearMap, sigma: &Matrix) -> Result<()> {
    check_square(sigma, lie.dim(), "sigma")?;
    if !lie_report(lie).passed() {
        return Err(Error::AxiomFailure(lie_report(lie)));
    }
    if lie_hom_defect(sigma, lie, lie).is_some() {
        return Err(Error::NotHomomorphism("sigma"));
    }
    Ok(())
}

/// `(L, sigma ∘ [ , ], sigma)` for a Lie bracket and a Lie endomorphism `sigma`.
pub fn induce_hom_lie(lie: &BilinearMap, sigma: &Matrix) -> Result<HomLieAlgebra> {
    require_lie_endomorphism(lie, sigma)?;
    HomLieAlgebra::new(lie.compose_left(sigma), sigma.clone())
}

/// The Lie algebra `(L, alpha^-1 ∘ [ , ])` of a regular Hom-Lie algebra.
pub fn induce_lie_from_regular(l: &HomLieAlgebra) -> Result<HomLieAlgebra> {
    if l.twist_class() != TwistClass::Regular {
        return Err(Error::NotRegular("twisting map is not an automorphism"));
    }
    let inv = l.alpha.invert()?;
    HomLieAlgebra::new(l.bracket.compose_left(&inv), Matrix::identity(l.dim()))
}

/// `(L, sigma ∘ [[ , ], ], sigma)` for a Lie bracket and a Lie endomorphism `sigma`.
pub fn induce_hom_lts_from_lie(lie: &BilinearMap, sigma: &Matrix) -> Result<HomLts> {
    require_lie_endomorphism(lie, sigma)?;
    let n = lie.dim();
    let triple = TrilinearMap::from_fn(n, |i, j, k| sigma.apply(&lie.apply(lie.entry(i, j), &crate::linalg::unit(n, k))));
    HomLts::with_twist(triple, sigma.clone())
}

/// `X a Y - Y a X`, the commutator of the homotope with product `x ∘ a ∘ y`.
pub fn isotope_commutator(x: &Matrix, y: &Matrix, a: &Matrix) -> Result<Matrix> {
    let n = a.rows();
    for m in [x, y, a] {
        check_square(m, n, "isotope operand")?;
    }
    Ok(&(&(x * a) * y) - &(&(y * a) * x))
}

fn untwisted_nambu(t: &RegularHomLts, variant: bool) -> Option<Witness> {
    let n = t.dim();
    let b = t.bracket();
    let inv = t.alpha_inv();
    let tw = |i: usize, j: usize, k: usize| inv.apply(b.entry(i, j, k));
    first_defect(tuples(n, 5), |s| {
        let (a, bb, c, d, e) = (s[0], s[1], s[2], s[3], s[4]);
        let ua = crate::linalg::unit(n, a);
        let ub = crate::linalg::unit(n, bb);
        let uc = crate::linalg::unit(n, c);
        let ud = crate::linalg::unit(n, d);
        let ue = crate::linalg::unit(n, e);
        let lhs = sub(&b.apply(&ua, &ub, &tw(c, d, e)), &b.apply(&uc, &ud, &tw(a, bb, e)));
        let last = if variant { &ud } else { &ue };
        let r1 = b.apply(&uc, &tw(a, bb, d), last);
        let r2 = b.apply(&tw(a, bb, c), &ud, &ue);
        sub(&sub(&lhs, &r1), &r2)
    })
}

/// `[a,b,[c,d,e]'] - [c,d,[a,b,e]'] = [c,[a,b,d]',e] + [[a,b,c]',d,e]`
/// with `x' = alpha^-1(x)`, on all basis 5-tuples.
pub fn check_truths_identity(t: &RegularHomLts) -> AxiomReport {
    let mut report = AxiomReport::new();
    report.push(axiom::UNTWISTED_NAMBU, untwisted_nambu(t, false));
    report
}

/// The same identity with `d` in the last slot of the third bracket.
/// It does not hold in general.
pub fn check_truths_identity_variant(t: &RegularHomLts) -> AxiomReport {
    let mut report = AxiomReport::new();
    report.push(axiom::UNTWISTED_NAMBU_VARIANT, untwisted_nambu(t, true));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::linalg::{frac, int};

    #[test]
    fn tuples_enumerate_lexicographically() {
        let all: Vec<_> = tuples(2, 2).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(tuples(3, 5).count(), 243);
        assert_eq!(tuples(0, 3).count(), 0);
    }

    #[test]
    fn abelian_passes_for_any_twist() {
        let alpha = Matrix::from_i64(&[&[0, 1], &[3, 5]]);
        let l = HomLieAlgebra::new(BilinearMap::zero(2), alpha).unwrap();
        assert!(check_hom_lie(&l).passed());
    }

    #[test]
    fn sl2_is_lie() {
        let l = HomLieAlgebra::new(corpus::sl2(), Matrix::identity(3)).unwrap();
        assert!(check_hom_lie(&l).passed());
    }

    #[test]
    fn plain_sl2_with_diagonal_twist_fails() {
        // The twist must enter the bracket as well; alpha alone breaks Jacobi.
        let l = HomLieAlgebra::new(corpus::sl2(), corpus::sl2_diagonal_twist()).unwrap();
        let report = check_hom_lie(&l);
        let w = report.get(axiom::TWISTED_JACOBI).unwrap().witness.clone().unwrap();
        assert_eq!(w.indices, vec![0, 1, 2]);
        // [4e,-2f] + [h,-h] + [f/4,-2e] = -8h + h/2
        assert_eq!(w.defect, vec![int(0), frac(-15, 2), int(0)]);
    }

    #[test]
    fn induced_sl2_constants() {
        let l = induce_hom_lie(&corpus::sl2(), &corpus::sl2_diagonal_twist()).unwrap();
        let (e, h, f) = (0, 1, 2);
        assert_eq!(l.bracket().entry(h, e), &[int(8), int(0), int(0)]);
        assert_eq!(l.bracket().entry(h, f), &[int(0), int(0), frac(-1, 2)]);
        assert_eq!(l.bracket().entry(e, f), &[int(0), int(1), int(0)]);
        assert!(check_hom_lie(&l).passed());
        assert_eq!(l.twist_class(), TwistClass::Regular);
    }

    #[test]
    fn induce_with_identity_is_unchanged() {
        let l = induce_hom_lie(&corpus::sl2(), &Matrix::identity(3)).unwrap();
        assert_eq!(l.bracket(), &corpus::sl2());
        let back = induce_lie_from_regular(&l).unwrap();
        assert_eq!(back, l);
    }

    #[test]
    fn twisted_sl2_recovers_standard_constants() {
        let twisted = induce_hom_lie(&corpus::sl2(), &corpus::sl2_diagonal_twist()).unwrap();
        let back = induce_lie_from_regular(&twisted).unwrap();
        assert_eq!(back.bracket(), &corpus::sl2());
        assert!(back.alpha().is_identity());
    }

    #[test]
    fn induce_rejects_non_homomorphism() {
        let bad = Matrix::diagonal(&[int(2), int(1), int(1)]);
        assert_eq!(
            induce_hom_lie(&corpus::sl2(), &bad),
            Err(Error::NotHomomorphism("sigma"))
        );
        assert!(induce_hom_lts_from_lie(&corpus::sl2(), &bad).is_err());
    }

    #[test]
    fn lie_from_non_regular_is_rejected() {
        let l = HomLieAlgebra::new(BilinearMap::zero(2), Matrix::zeros(2, 2)).unwrap();
        assert_eq!(l.twist_class(), TwistClass::Multiplicative);
        assert!(matches!(induce_lie_from_regular(&l), Err(Error::NotRegular(_))));
    }

    #[test]
    fn classification() {
        let id = HomLieAlgebra::new(corpus::sl2(), Matrix::identity(3)).unwrap();
        assert_eq!(id.twist_class(), TwistClass::Regular);
        let plain = HomLieAlgebra::new(corpus::sl2(), Matrix::diagonal(&[int(2), int(1), int(1)])).unwrap();
        assert_eq!(plain.twist_class(), TwistClass::Plain);
        let lts = HomLts::new(TrilinearMap::zero(2), Matrix::identity(2), Matrix::zeros(2, 2)).unwrap();
        assert_eq!(lts.twist_class(), TwistClass::Plain);
    }

    #[test]
    fn sl2_triple_system() {
        let t = induce_hom_lts_from_lie(&corpus::sl2(), &Matrix::identity(3)).unwrap();
        let (e, h, f) = (0, 1, 2);
        // [[e,f],e] = [h,e] = 2e
        assert_eq!(t.bracket().entry(e, f, e), &[int(2), int(0), int(0)]);
        // [[e,f],f] = [h,f] = -2f
        assert_eq!(t.bracket().entry(e, f, f), &[int(0), int(0), int(-2)]);
        // [[h,e],f] = 2[e,f] = 2h
        assert_eq!(t.bracket().entry(h, e, f), &[int(0), int(2), int(0)]);
        assert!(check_hom_lts(&t).passed());
        assert_eq!(t.twist_class(), TwistClass::Regular);
    }

    #[test]
    fn abelian_triple_system_is_zero() {
        let t = induce_hom_lts_from_lie(&BilinearMap::zero(3), &Matrix::identity(3)).unwrap();
        assert!(t.bracket().is_zero());
    }

    #[test]
    fn perturbed_triple_system_fails_with_witness() {
        let t = induce_hom_lts_from_lie(&corpus::sl2(), &Matrix::identity(3)).unwrap();
        let mut b = t.bracket().clone();
        let mut v = b.entry(0, 2, 0).to_vec();
        v[0] += int(1);
        b.set(0, 2, 0, &v);
        let report = hom_lts_report(&b, t.alpha1(), t.alpha2());
        assert!(!report.passed());
        let w = report.first_failure().unwrap().witness.as_ref().unwrap();
        assert!(!is_zero(&w.defect));
        assert!(HomLts::with_twist(b, Matrix::identity(3)).is_err());
    }

    #[test]
    fn homomorphism_examples() {
        let sl2 = HomLieAlgebra::new(corpus::sl2(), Matrix::identity(3)).unwrap();
        assert!(is_lie_homomorphism(&Matrix::identity(3), &sl2, &sl2).unwrap());
        assert!(is_lie_homomorphism(&corpus::sl2_diagonal_twist(), &sl2, &sl2).unwrap());
        assert!(is_lie_homomorphism(&corpus::sl2_involution(), &sl2, &sl2).unwrap());
        assert!(!is_lie_homomorphism(&Matrix::diagonal(&[int(2), int(1), int(1)]), &sl2, &sl2).unwrap());
        assert!(is_lie_homomorphism(&Matrix::identity(2), &sl2, &sl2).is_err());

        let t = induce_hom_lts_from_lie(&corpus::sl2(), &corpus::sl2_diagonal_twist()).unwrap();
        assert!(is_lts_homomorphism(&Matrix::identity(3), &t, &t).unwrap());
        assert!(is_lts_homomorphism(&Matrix::zeros(3, 3), &t, &t).unwrap());
        assert!(is_lts_homomorphism(t.alpha1(), &t, &t).unwrap());
    }

    #[test]
    fn isotope_commutator_examples() {
        let x = Matrix::from_i64(&[&[1, 2], &[0, 1]]);
        let y = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let id = Matrix::identity(2);
        assert_eq!(isotope_commutator(&x, &y, &id).unwrap(), &(&x * &y) - &(&y * &x));
        assert!(isotope_commutator(&x, &x, &y).unwrap().is_zero());
        assert!(isotope_commutator(&x, &Matrix::identity(3), &id).is_err());
    }

    #[test]
    fn regular_construction_rejects_bad_twists() {
        let t = TrilinearMap::zero(2);
        assert!(matches!(
            RegularHomLts::new(t.clone(), Matrix::zeros(2, 2)),
            Err(Error::NotRegular(_))
        ));
        let lts = HomLts::new(t, Matrix::identity(2), Matrix::diagonal(&[int(2), int(2)])).unwrap();
        assert!(matches!(RegularHomLts::from_lts(lts), Err(Error::NotRegular(_))));
    }

    #[test]
    fn untwisted_nambu_identity_holds() {
        for t in corpus::regular_lts_corpus() {
            assert!(check_truths_identity(&t.lts).passed(), "{}", t.name);
        }
    }

    #[test]
    fn identity_variant_fails_on_sl2() {
        let t = corpus::sl2_lts(&Matrix::identity(3));
        assert!(!check_truths_identity_variant(&t).passed());
    }
}
