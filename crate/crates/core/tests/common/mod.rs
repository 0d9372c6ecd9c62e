//! Brute-force reference checks, written directly against structure
//! constants and independent of the library's evaluation routines.

#![allow(dead_code)]

use homlts_core::linalg::{frac, int};
use homlts_core::{BilinearMap, Matrix, Scalar, TrilinearMap};
use num_traits::Zero;

type Vector = Vec<Scalar>;

fn bracket(b: &BilinearMap, u: &[Scalar], v: &[Scalar]) -> Vector {
    let n = b.dim();
    let mut out = vec![Scalar::zero(); n];
    for i in 0..n {
        for j in 0..n {
            let c = &u[i] * &v[j];
            if c.is_zero() {
                continue;
            }
            for k in 0..n {
                out[k] += &c * &b.entry(i, j)[k];
            }
        }
    }
    out
}

fn triple(t: &TrilinearMap, u: &[Scalar], v: &[Scalar], w: &[Scalar]) -> Vector {
    let n = t.dim();
    let mut out = vec![Scalar::zero(); n];
    for i in 0..n {
        for j in 0..n {
            let c = &u[i] * &v[j];
            if c.is_zero() {
                continue;
            }
            for k in 0..n {
                let c = &c * &w[k];
                if c.is_zero() {
                    continue;
                }
                for l in 0..n {
                    out[l] += &c * &t.entry(i, j, k)[l];
                }
            }
        }
    }
    out
}

fn mat_vec(m: &Matrix, v: &[Scalar]) -> Vector {
    (0..m.rows())
        .map(|r| (0..m.cols()).fold(Scalar::zero(), |acc, c| acc + &m[(r, c)] * &v[c]))
        .collect()
}

fn basis(n: usize, i: usize) -> Vector {
    (0..n).map(|k| if k == i { int(1) } else { int(0) }).collect()
}

fn plus(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

fn minus(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

fn zero(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn skew_ok(b: &BilinearMap) -> bool {
    let n = b.dim();
    (0..n).all(|i| (0..n).all(|j| zero(&plus(b.entry(i, j), b.entry(j, i)))))
}

/// `[αx,[y,z]] + [αy,[z,x]] + [αz,[x,y]] = 0` on all basis triples.
pub fn twisted_jacobi_ok(b: &BilinearMap, alpha: &Matrix) -> bool {
    let n = b.dim();
    let e: Vec<Vector> = (0..n).map(|i| basis(n, i)).collect();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let term = |p: usize, q: usize, r: usize| bracket(b, &mat_vec(alpha, &e[p]), &bracket(b, &e[q], &e[r]));
                let sum = plus(&plus(&term(x, y, z), &term(y, z, x)), &term(z, x, y));
                if !zero(&sum) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn lie_ok(b: &BilinearMap) -> bool {
    skew_ok(b) && twisted_jacobi_ok(b, &Matrix::identity(b.dim()))
}

/// Left skew symmetry, ternary cyclic, and the twisted Nambu identity.
pub fn hom_lts_ok(t: &TrilinearMap, a1: &Matrix, a2: &Matrix) -> bool {
    let n = t.dim();
    let e: Vec<Vector> = (0..n).map(|i| basis(n, i)).collect();
    let tri = |u: &[Scalar], v: &[Scalar], w: &[Scalar]| triple(t, u, v, w);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if !zero(&plus(t.entry(a, b, c), t.entry(b, a, c))) {
                    return false;
                }
                let cyc = plus(&plus(t.entry(a, b, c), t.entry(b, c, a)), t.entry(c, a, b));
                if !zero(&cyc) {
                    return false;
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let (x, y) = (mat_vec(a1, &e[a]), mat_vec(a2, &e[b]));
            for c in 0..n {
                for d in 0..n {
                    for f in 0..n {
                        let lhs = tri(&x, &y, t.entry(c, d, f));
                        let r1 = tri(t.entry(a, b, c), &mat_vec(a1, &e[d]), &mat_vec(a2, &e[f]));
                        let r2 = tri(&mat_vec(a1, &e[c]), t.entry(a, b, d), &mat_vec(a2, &e[f]));
                        let r3 = tri(&mat_vec(a1, &e[c]), &mat_vec(a2, &e[d]), t.entry(a, b, f));
                        if !zero(&minus(&minus(&minus(&lhs, &r1), &r2), &r3)) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// `f[x,y] = [fx,fy]` on basis pairs.
pub fn lie_hom_ok(f: &Matrix, source: &BilinearMap, target: &BilinearMap) -> bool {
    let n = source.dim();
    let cols: Vec<Vector> = (0..n).map(|i| mat_vec(f, &basis(n, i))).collect();
    (0..n).all(|i| (0..n).all(|j| mat_vec(f, source.entry(i, j)) == bracket(target, &cols[i], &cols[j])))
}

/// `ε[a,b,c] = α_L[[εa,εb],εc]` and `ε α = α_L ε`.
pub fn imbedding_ok(eps: &Matrix, t: &TrilinearMap, alpha: &Matrix, l: &BilinearMap, aut: &Matrix) -> bool {
    let n = t.dim();
    let cols: Vec<Vector> = (0..n).map(|i| mat_vec(eps, &basis(n, i))).collect();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let rhs = mat_vec(aut, &bracket(l, &bracket(l, &cols[a], &cols[b]), &cols[c]));
                if mat_vec(eps, t.entry(a, b, c)) != rhs {
                    return false;
                }
            }
        }
    }
    (0..n).all(|i| mat_vec(eps, &mat_vec(alpha, &basis(n, i))) == mat_vec(aut, &cols[i]))
}

/// Every `x` with `[x, e_j] = 0` for all `j`, tested on the given vectors.
pub fn central(b: &BilinearMap, x: &[Scalar]) -> bool {
    let n = b.dim();
    (0..n).all(|j| zero(&bracket(b, x, &basis(n, j))))
}

/// `ad(e), ad(h), ad(f)` on the basis `(e, h, f)` of sl2, written out by hand.
pub fn sl2_adjoint() -> [Matrix; 3] {
    [
        Matrix::from_i64(&[&[0, -2, 0], &[0, 0, 1], &[0, 0, 0]]),
        Matrix::from_i64(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]),
        Matrix::from_i64(&[&[0, 0, 0], &[-1, 0, 0], &[0, 2, 0]]),
    ]
}

/// sl2 on `(e, h, f)`, entered independently of the library corpus.
pub fn sl2_bracket() -> BilinearMap {
    let mut b = BilinearMap::zero(3);
    b.set_skew(1, 0, &[int(2), int(0), int(0)]);
    b.set_skew(1, 2, &[int(0), int(0), int(-2)]);
    b.set_skew(0, 2, &[int(0), int(1), int(0)]);
    b
}

pub fn diag(entries: &[(i64, i64)]) -> Matrix {
    Matrix::diagonal(&entries.iter().map(|&(p, q)| frac(p, q)).collect::<Vec<_>>())
}
