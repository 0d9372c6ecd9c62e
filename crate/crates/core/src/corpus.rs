//! Standard example algebras and seeded random generators.
//!
//! sl2 uses the ordered basis `(e, h, f)` with `[h,e] = 2e`, `[h,f] = -2f`,
//! `[e,f] = h`.

use rand::Rng;

use crate::linalg::{frac, int, Matrix, Scalar};
use crate::structures::{induce_hom_lts_from_lie, lie_hom_defect, lie_report, RegularHomLts};
use crate::tensor::BilinearMap;

pub fn sl2() -> BilinearMap {
    let mut b = BilinearMap::zero(3);
    b.set_skew(1, 0, &[int(2), int(0), int(0)]);
    b.set_skew(1, 2, &[int(0), int(0), int(-2)]);
    b.set_skew(0, 2, &[int(0), int(1), int(0)]);
    b
}

/// Conjugation by `diag(2, 1/2)`: `e -> 4e, h -> h, f -> f/4`.
pub fn sl2_diagonal_twist() -> Matrix {
    sl2_torus(&int(2))
}

/// `e -> t^2 e, h -> h, f -> t^-2 f`.
pub fn sl2_torus(t: &Scalar) -> Matrix {
    let t2 = t * t;
    Matrix::diagonal(&[t2.clone(), int(1), t2.recip()])
}

/// `e <-> f`, `h -> -h`.
pub fn sl2_involution() -> Matrix {
    Matrix::from_i64(&[&[0, 0, 1], &[0, -1, 0], &[1, 0, 0]])
}

/// Two-dimensional non-abelian: `[x, y] = y`.
pub fn r2() -> BilinearMap {
    let mut b = BilinearMap::zero(2);
    b.set_skew(0, 1, &[int(0), int(1)]);
    b
}

/// `x -> x + y`, `y -> y`, an automorphism of `r2`.
pub fn r2_shear() -> Matrix {
    Matrix::from_i64(&[&[1, 0], &[1, 1]])
}

/// Heisenberg algebra: `[x, y] = z`.
pub fn heisenberg() -> BilinearMap {
    let mut b = BilinearMap::zero(3);
    b.set_skew(0, 1, &[int(0), int(0), int(1)]);
    b
}

/// `[x, y] = y`, `[x, z] = lambda z`.
pub fn r3(lambda: i64) -> BilinearMap {
    let mut b = BilinearMap::zero(3);
    b.set_skew(0, 1, &[int(0), int(1), int(0)]);
    b.set_skew(0, 2, &[int(0), int(0), int(lambda)]);
    b
}

pub fn so3() -> BilinearMap {
    let mut b = BilinearMap::zero(3);
    b.set_skew(0, 1, &[int(0), int(0), int(1)]);
    b.set_skew(1, 2, &[int(1), int(0), int(0)]);
    b.set_skew(2, 0, &[int(0), int(1), int(0)]);
    b
}

/// Direct sum of two Lie brackets.
pub fn direct_sum(a: &BilinearMap, b: &BilinearMap) -> BilinearMap {
    let (n, m) = (a.dim(), b.dim());
    BilinearMap::from_fn(n + m, |i, j| {
        let mut v = vec![int(0); n + m];
        if i < n && j < n {
            v[..n].clone_from_slice(a.entry(i, j));
        } else if i >= n && j >= n {
            v[n..].clone_from_slice(b.entry(i - n, j - n));
        }
        v
    })
}

/// The Hom-LTS induced from sl2 by `sigma`.
pub fn sl2_lts(sigma: &Matrix) -> RegularHomLts {
    lts_from_lie(&sl2(), sigma)
}

/// Zero triple bracket of the given dimension with identity twist.
pub fn zero_lts(n: usize) -> RegularHomLts {
    lts_from_lie(&BilinearMap::zero(n), &Matrix::identity(n))
}

pub fn lts_from_lie(lie: &BilinearMap, sigma: &Matrix) -> RegularHomLts {
    let lts = induce_hom_lts_from_lie(lie, sigma).expect("corpus twist is a Lie homomorphism");
    RegularHomLts::from_lts(lts).expect("corpus twist is an automorphism")
}

/// A regular Hom-LTS together with the Lie algebra and automorphism it was induced from.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub lie: BilinearMap,
    pub sigma: Matrix,
    pub lts: RegularHomLts,
}

impl CorpusEntry {
    fn new(name: &'static str, lie: BilinearMap, sigma: Matrix) -> Self {
        let lts = lts_from_lie(&lie, &sigma);
        Self {
            name,
            lie,
            sigma,
            lts,
        }
    }
}

/// Regular Hom-LTS used throughout the test suites.
pub fn regular_lts_corpus() -> Vec<CorpusEntry> {
    let sl2_plus_line = direct_sum(&sl2(), &BilinearMap::zero(1));
    let sl2_plus_line_twist = sl2_diagonal_twist().direct_sum(&Matrix::diagonal(&[int(2)]));
    vec![
        CorpusEntry::new("zero-1", BilinearMap::zero(1), Matrix::identity(1)),
        CorpusEntry::new("zero-2", BilinearMap::zero(2), Matrix::identity(2)),
        CorpusEntry::new("zero-3", BilinearMap::zero(3), Matrix::identity(3)),
        CorpusEntry::new("zero-4", BilinearMap::zero(4), Matrix::identity(4)),
        CorpusEntry::new(
            "zero-3-twisted",
            BilinearMap::zero(3),
            Matrix::from_i64(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 2]]),
        ),
        CorpusEntry::new("sl2", sl2(), Matrix::identity(3)),
        CorpusEntry::new("sl2-diagonal", sl2(), sl2_diagonal_twist()),
        CorpusEntry::new("sl2-involution", sl2(), sl2_involution()),
        CorpusEntry::new("sl2+line", sl2_plus_line, sl2_plus_line_twist),
        CorpusEntry::new("r2-shear", r2(), r2_shear()),
    ]
}

fn small_nonzero<R: Rng + ?Sized>(rng: &mut R) -> i64 {
    *[-2i64, -1, 1, 2, 3].get(rng.gen_range(0..5)).unwrap()
}

/// Random integer matrix with determinant `±1`, built from elementary operations.
pub fn random_unimodular<R: Rng + ?Sized>(rng: &mut R, n: usize, steps: usize) -> Matrix {
    let mut m = Matrix::identity(n);
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            m[(0, 0)] = int(-1);
        }
        return m;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let k = int(*[-1i64, 1, 2].get(rng.gen_range(0..3)).unwrap());
        let mut e = Matrix::identity(n);
        e[(i, j)] = k;
        m = &m * &e;
    }
    m
}

fn random_invertible_diagonal<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix {
    let d: Vec<Scalar> = (0..n).map(|_| int(small_nonzero(rng))).collect();
    Matrix::diagonal(&d)
}

/// A random Lie algebra of dimension at most four with a random automorphism,
/// written in a randomly changed integral basis.
pub fn random_lie_with_automorphism<R: Rng + ?Sized>(rng: &mut R) -> (BilinearMap, Matrix) {
    let (lie, sigma) = match rng.gen_range(0..7) {
        0 => {
            let n = rng.gen_range(1..=4);
            let steps = rng.gen_range(0..4);
            let sigma = &random_unimodular(rng, n, steps) * &random_invertible_diagonal(rng, n);
            (BilinearMap::zero(n), sigma)
        }
        1 => {
            let t = [int(1), int(2), int(-1), frac(1, 2), int(3)][rng.gen_range(0..5)].clone();
            let mut sigma = sl2_torus(&t);
            if rng.gen_bool(0.5) {
                sigma = &sigma * &sl2_involution();
            }
            (sl2(), sigma)
        }
        2 => {
            let steps = rng.gen_range(0..3);
            let a = random_unimodular(rng, 2, steps);
            let a = &a * &random_invertible_diagonal(rng, 2);
            let det = &a[(0, 0)] * &a[(1, 1)] - &a[(0, 1)] * &a[(1, 0)];
            let (p, q) = (int(rng.gen_range(-2..=2)), int(rng.gen_range(-2..=2)));
            let sigma = Matrix::from_fn(3, 3, |r, c| match (r, c) {
                (r, c) if r < 2 && c < 2 => a[(r, c)].clone(),
                (2, 0) => p.clone(),
                (2, 1) => q.clone(),
                (2, 2) => det.clone(),
                _ => int(0),
            });
            (heisenberg(), sigma)
        }
        3 => {
            let m = rng.gen_range(0..=2);
            let s = int(rng.gen_range(-2..=2));
            let t = int(small_nonzero(rng));
            let shear = Matrix::from_fn(2, 2, |r, c| match (r, c) {
                (0, 0) => int(1),
                (1, 0) => s.clone(),
                (1, 1) => t.clone(),
                _ => int(0),
            });
            let rest = random_unimodular(rng, m, 2);
            (direct_sum(&r2(), &BilinearMap::zero(m)), shear.direct_sum(&rest))
        }
        4 => {
            let lambda = [-1i64, 2][rng.gen_range(0..2)];
            let (a, b) = (int(rng.gen_range(-2..=2)), int(rng.gen_range(-2..=2)));
            let (t, u) = (int(small_nonzero(rng)), int(small_nonzero(rng)));
            let sigma = Matrix::from_fn(3, 3, |r, c| match (r, c) {
                (0, 0) => int(1),
                (1, 0) => a.clone(),
                (2, 0) => b.clone(),
                (1, 1) => t.clone(),
                (2, 2) => u.clone(),
                _ => int(0),
            });
            (r3(lambda), sigma)
        }
        5 => {
            let t = [int(1), int(2), frac(1, 2)][rng.gen_range(0..3)].clone();
            let sigma = sl2_torus(&t).direct_sum(&Matrix::diagonal(&[int(small_nonzero(rng))]));
            (direct_sum(&sl2(), &BilinearMap::zero(1)), sigma)
        }
        _ => {
            let cyclic = Matrix::from_i64(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
            let flip = Matrix::from_i64(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]]);
            let mut sigma = Matrix::identity(3);
            for _ in 0..rng.gen_range(0..4) {
                sigma = if rng.gen_bool(0.5) { &sigma * &cyclic } else { &sigma * &flip };
            }
            (so3(), sigma)
        }
    };
    let n = lie.dim();
    let steps = rng.gen_range(0..3);
    let p = random_unimodular(rng, n, steps);
    let p_inv = p.invert().expect("unimodular");
    let lie = lie.change_basis(&p, &p_inv);
    let sigma = &(&p_inv * &sigma) * &p;
    debug_assert!(lie_report(&lie).passed());
    debug_assert!(lie_hom_defect(&sigma, &lie, &lie).is_none());
    (lie, sigma)
}

/// Composable homomorphisms `first: source -> middle`, `second: middle -> last`.
#[derive(Debug, Clone)]
pub struct ComposablePair {
    pub source: RegularHomLts,
    pub middle: RegularHomLts,
    pub last: RegularHomLts,
    pub first: Matrix,
    pub second: Matrix,
}

fn random_integer_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| int(rng.gen_range(-2..=2)))
}

fn random_sl2_automorphism<R: Rng + ?Sized>(rng: &mut R, allow_involution: bool) -> Matrix {
    let t = [int(1), int(2), int(-1), frac(1, 3)][rng.gen_range(0..4)].clone();
    let torus = sl2_torus(&t);
    if allow_involution && rng.gen_bool(0.5) {
        &torus * &sl2_involution()
    } else {
        torus
    }
}

/// Random composable pairs of Hom-LTS homomorphisms between corpus-style systems.
pub fn random_composable_pair<R: Rng + ?Sized>(rng: &mut R) -> ComposablePair {
    match rng.gen_range(0..3) {
        0 => {
            // Zero brackets with a common scalar twist: every linear map is a homomorphism.
            let c = int(small_nonzero(rng));
            let dims: Vec<usize> = (0..3).map(|_| rng.gen_range(1..=3)).collect();
            let make = |n: usize| lts_from_lie(&BilinearMap::zero(n), &Matrix::identity(n).scale(&c));
            ComposablePair {
                source: make(dims[0]),
                middle: make(dims[1]),
                last: make(dims[2]),
                first: random_integer_matrix(rng, dims[1], dims[0]),
                second: random_integer_matrix(rng, dims[2], dims[1]),
            }
        }
        1 => {
            let t = sl2_lts(&Matrix::identity(3));
            ComposablePair {
                source: t.clone(),
                middle: t.clone(),
                last: t,
                first: random_sl2_automorphism(rng, true),
                second: random_sl2_automorphism(rng, true),
            }
        }
        _ => {
            let t = sl2_lts(&sl2_diagonal_twist());
            ComposablePair {
                source: t.clone(),
                middle: t.clone(),
                last: t,
                first: random_sl2_automorphism(rng, false),
                second: random_sl2_automorphism(rng, false),
            }
        }
    }
}
