//! Twisted derivations `HDR(T)`, inner derivations `IHD(T)` and the isotope
//! bracket `[X, Y] = X a^-1 Y - Y a^-1 X` they carry.
//!
//! Endomorphisms are flattened row-major into vectors of length `n*n`.

use crate::error::{Error, Result};
use crate::linalg::{is_zero, kernel, span, sub, unit, Matrix, Scalar, Subspace};
use crate::report::{AxiomReport, Witness};
use crate::structures::{isotope_commutator, tuples, RegularHomLts};

pub const IDEAL_IDENTITY_HDR: &str = "ideal identity (HDR)";
pub const IDEAL_IDENTITY_IHD: &str = "ideal identity (IHD)";

pub fn flatten(m: &Matrix) -> Vec<Scalar> {
    m.entries().to_vec()
}

pub fn unflatten(v: &[Scalar]) -> Matrix {
    Matrix::from_flat_square(v)
}

/// `c -> [a, b, c]`
pub fn d_ab(t: &RegularHomLts, a: &[Scalar], b: &[Scalar]) -> Matrix {
    let n = t.dim();
    let columns: Vec<Vec<Scalar>> = (0..n).map(|c| t.triple(a, b, &unit(n, c))).collect();
    Matrix::from_columns(n, &columns).expect("square")
}

/// `D_{e_i e_j}`
pub fn d_basis(t: &RegularHomLts, i: usize, j: usize) -> Matrix {
    let n = t.dim();
    d_ab(t, &unit(n, i), &unit(n, j))
}

/// Defect of the twisted derivation identity
/// `X a^-1 [c,d,e] = [X'c,d,e] + [c,X'd,e] + [c,d,X'e]`, `X' = a^-1 X`,
/// concatenated over all basis triples.
pub fn hdr_defect(t: &RegularHomLts, x: &Matrix) -> Vec<Scalar> {
    let n = t.dim();
    let b = t.bracket();
    let xt = t.alpha_inv() * x;
    let x_inv = x * t.alpha_inv();
    let xt_cols: Vec<Vec<Scalar>> = (0..n).map(|i| xt.column(i)).collect();
    let mut out = Vec::with_capacity(n.pow(4));
    for triple in tuples(n, 3) {
        let (c, d, e) = (triple[0], triple[1], triple[2]);
        let (uc, ud, ue) = (unit(n, c), unit(n, d), unit(n, e));
        let lhs = x_inv.apply(b.entry(c, d, e));
        let r1 = b.apply(&xt_cols[c], &ud, &ue);
        let r2 = b.apply(&uc, &xt_cols[d], &ue);
        let r3 = b.apply(&uc, &ud, &xt_cols[e]);
        out.extend(sub(&sub(&sub(&lhs, &r1), &r2), &r3));
    }
    out
}

pub fn is_twisted_derivation(t: &RegularHomLts, x: &Matrix) -> bool {
    is_zero(&hdr_defect(t, x))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedDerivationSpace {
    pub basis: Subspace,
}

impl TwistedDerivationSpace {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn contains(&self, x: &Matrix) -> bool {
        self.basis.contains(&flatten(x))
    }

    pub fn elements(&self) -> Vec<Matrix> {
        self.basis.basis_vectors().iter().map(|v| unflatten(v)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerDerivationSpace {
    pub basis: Subspace,
    /// `((i, j), D_{e_i e_j})` for `i < j`.
    pub generators: Vec<((usize, usize), Matrix)>,
}

impl InnerDerivationSpace {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn contains(&self, x: &Matrix) -> bool {
        self.basis.contains(&flatten(x))
    }

    pub fn elements(&self) -> Vec<Matrix> {
        self.basis.basis_vectors().iter().map(|v| unflatten(v)).collect()
    }

    /// Coordinates in the canonical basis, if `x` is inner.
    pub fn coordinates(&self, x: &Matrix) -> Option<Vec<Scalar>> {
        self.basis.coordinates(&flatten(x))
    }
}

/// Solve the twisted derivation identity as one homogeneous system in the
/// `n*n` entries of `X`.
pub fn compute_hdr(t: &RegularHomLts) -> TwistedDerivationSpace {
    let n = t.dim();
    let columns: Vec<Vec<Scalar>> = (0..n * n)
        .map(|idx| {
            let mut e = Matrix::zeros(n, n);
            e[(idx / n, idx % n)] = crate::linalg::int(1);
            hdr_defect(t, &e)
        })
        .collect();
    let system = Matrix::from_columns(n.pow(4), &columns).expect("uniform lengths");
    TwistedDerivationSpace {
        basis: kernel(&system),
    }
}

/// Span of `D_{e_i e_j}`, `i < j`. Fails if some generator is not a twisted derivation.
pub fn compute_ihd(t: &RegularHomLts) -> Result<InnerDerivationSpace> {
    let n = t.dim();
    let mut generators = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let d = d_basis(t, i, j);
            if !is_twisted_derivation(t, &d) {
                return Err(Error::IllDefined("inner derivation outside HDR(T)"));
            }
            generators.push(((i, j), d));
        }
    }
    let vectors: Vec<Vec<Scalar>> = generators.iter().map(|(_, d)| flatten(d)).collect();
    Ok(InnerDerivationSpace {
        basis: span(&vectors, n * n)?,
        generators,
    })
}

/// `X a^-1 Y - Y a^-1 X`
pub fn hdr_bracket(x: &Matrix, y: &Matrix, t: &RegularHomLts) -> Result<Matrix> {
    isotope_commutator(x, y, t.alpha_inv())
}

fn ideal_defect(t: &RegularHomLts, elements: &[Matrix]) -> Option<Witness> {
    let n = t.dim();
    for (xi, x) in elements.iter().enumerate() {
        let xt = t.alpha_inv() * x;
        for a in 0..n {
            for b in 0..n {
                let (ua, ub) = (unit(n, a), unit(n, b));
                let lhs = hdr_bracket(x, &d_basis(t, a, b), t).expect("square");
                let rhs = &d_ab(t, &ua, &xt.apply(&ub)) + &d_ab(t, &xt.apply(&ua), &ub);
                let defect = flatten(&(&lhs - &rhs));
                if !is_zero(&defect) {
                    return Some(Witness::new(vec![xi, a, b], defect));
                }
            }
        }
    }
    None
}

/// `[X, D_ab] = D_{a, X'b} + D_{X'a, b}` checked separately for `X` in the
/// `HDR(T)` basis and in the `IHD(T)` basis. Witness indices are
/// `(basis element, a, b)`.
pub fn check_ideal_identity(t: &RegularHomLts) -> Result<AxiomReport> {
    let hdr = compute_hdr(t);
    let ihd = compute_ihd(t)?;
    let mut report = AxiomReport::new();
    report.push(IDEAL_IDENTITY_HDR, ideal_defect(t, &hdr.elements()));
    report.push(IDEAL_IDENTITY_IHD, ideal_defect(t, &ihd.elements()));
    Ok(report)
}
