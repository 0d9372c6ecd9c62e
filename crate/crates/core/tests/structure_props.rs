mod common;

use homlts_core::corpus::{self, lts_from_lie, random_lie_with_automorphism};
use homlts_core::derivation::{compute_hdr, compute_ihd, d_ab, hdr_bracket};
use homlts_core::linalg::{int, scale};
use homlts_core::structures::{
    check_hom_lie, check_hom_lts, check_truths_identity, check_truths_identity_variant, induce_hom_lie,
    induce_hom_lts_from_lie, is_lie_homomorphism, is_lts_homomorphism,
};
use homlts_core::{Matrix, Scalar, TwistClass, Twisted};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn small_vector(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec((-3i64..=3).prop_map(int), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn induced_hom_lie_matches_oracle(seed in any::<u64>()) {
        let (lie, sigma) = random_lie_with_automorphism(&mut StdRng::seed_from_u64(seed));
        let twisted = induce_hom_lie(&lie, &sigma).unwrap();
        prop_assert!(check_hom_lie(&twisted).passed());
        prop_assert!(common::twisted_jacobi_ok(twisted.bracket(), &sigma));
        prop_assert_eq!(twisted.twist_class(), TwistClass::Regular);
    }

    #[test]
    fn powers_of_the_twist_are_morphisms_both_ways(seed in any::<u64>(), power in 0u32..3) {
        let (lie, sigma) = random_lie_with_automorphism(&mut StdRng::seed_from_u64(seed));
        let f = (0..power).fold(Matrix::identity(lie.dim()), |acc, _| &acc * &sigma);
        let hom_lie = induce_hom_lie(&lie, &sigma).unwrap();
        prop_assert!(is_lie_homomorphism(&f, &hom_lie, &hom_lie).unwrap());
        let lts = induce_hom_lts_from_lie(&lie, &sigma).unwrap();
        prop_assert!(is_lts_homomorphism(&f, &lts, &lts).unwrap());
    }

    #[test]
    fn untwisted_identity_holds(seed in any::<u64>()) {
        let (lie, sigma) = random_lie_with_automorphism(&mut StdRng::seed_from_u64(seed));
        let t = lts_from_lie(&lie, &sigma);
        prop_assert!(check_truths_identity(&t).passed());
        prop_assert!(check_hom_lts(t.as_lts()).passed());
    }

    #[test]
    fn d_ab_is_alternating(a in small_vector(3), b in small_vector(3)) {
        let t = corpus::sl2_lts(&corpus::sl2_diagonal_twist());
        let ab = d_ab(&t, &a, &b);
        let ba = d_ab(&t, &b, &a);
        prop_assert_eq!(&ab, &(-&ba));
        prop_assert!(d_ab(&t, &a, &a).is_zero());
        let scaled = d_ab(&t, &scale(&int(2), &a), &b);
        prop_assert_eq!(scaled, ab.scale(&int(2)));
    }
}

#[test]
fn lts_morphism_need_not_be_lie_morphism() {
    // -id preserves [[a,b],c] but reverses [a,b].
    let sl2 = corpus::sl2();
    let minus = Matrix::identity(3).scale(&int(-1));
    let hom_lie = induce_hom_lie(&sl2, &Matrix::identity(3)).unwrap();
    let lts = induce_hom_lts_from_lie(&sl2, &Matrix::identity(3)).unwrap();
    assert!(is_lts_homomorphism(&minus, &lts, &lts).unwrap());
    assert!(!is_lie_homomorphism(&minus, &hom_lie, &hom_lie).unwrap());
}

#[test]
fn plain_sl2_with_diagonal_twist_is_not_hom_lie() {
    let twist = corpus::sl2_diagonal_twist();
    let report = homlts_core::structures::hom_lie_report(&corpus::sl2(), &twist);
    assert!(!report.passed());
    assert!(!common::twisted_jacobi_ok(&corpus::sl2(), &twist));
    assert!(check_hom_lie(&induce_hom_lie(&corpus::sl2(), &twist).unwrap()).passed());
}

#[test]
fn untwisted_identity_variant_fails_on_sl2() {
    for entry in corpus::regular_lts_corpus() {
        assert!(check_truths_identity(&entry.lts).passed(), "{}", entry.name);
    }
    let t = corpus::sl2_lts(&Matrix::identity(3));
    assert!(!check_truths_identity_variant(&t).passed());
}

#[test]
fn derivation_spaces_on_corpus() {
    for entry in corpus::regular_lts_corpus() {
        let t = &entry.lts;
        let hdr = compute_hdr(t);
        let ihd = compute_ihd(t).unwrap();
        assert!(ihd.basis.is_subspace_of(&hdr.basis), "{}", entry.name);
        let elements = hdr.elements();
        for x in &elements {
            for y in &elements {
                assert!(hdr.contains(&hdr_bracket(x, y, t).unwrap()), "{}", entry.name);
            }
        }
        // Jacobi for the isotope bracket on a few basis triples
        for x in elements.iter().take(3) {
            for y in elements.iter().take(3) {
                for z in elements.iter().take(3) {
                    let b = |p: &Matrix, q: &Matrix| hdr_bracket(p, q, t).unwrap();
                    let sum = &(&b(x, &b(y, z)) + &b(y, &b(z, x))) + &b(z, &b(x, y));
                    assert!(sum.is_zero());
                }
            }
        }
    }
    assert_eq!(compute_hdr(&corpus::zero_lts(2)).dim(), 4);
    assert_eq!(compute_hdr(&corpus::zero_lts(1)).dim(), 1);
    let sl2 = corpus::sl2_lts(&Matrix::identity(3));
    let hdr = compute_hdr(&sl2);
    for ad in common::sl2_adjoint() {
        assert!(hdr.contains(&ad));
    }
}
