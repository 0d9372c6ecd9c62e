use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{kernel, span, sub, unit, Matrix, Scalar, Subspace};
use crate::report::{AxiomReport, Witness};
use crate::structures::{lie_hom_defect, lie_report};
use crate::tensor::BilinearMap;

pub const AUTOMORPHISM: &str = "automorphism";
pub const GRADING: &str = "grading";
pub const GRADED_AUTOMORPHISM: &str = "graded automorphism";

/// A Lie algebra paired with an automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieWithAut {
    pub bracket: BilinearMap,
    pub aut: Matrix,
}

impl LieWithAut {
    pub fn new(bracket: BilinearMap, aut: Matrix) -> Result<Self> {
        let n = bracket.dim();
        if aut.rows() != n || aut.cols() != n {
            return Err(Error::DimensionMismatch {
                context: "automorphism",
                expected: n,
                found: aut.rows(),
            });
        }
        if let Some((indices, _)) = bracket.skew_defect() {
            return Err(Error::SkewViolation { indices });
        }
        Ok(Self { bracket, aut })
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    /// Skew symmetry, Jacobi, and that `aut` is an invertible homomorphism.
    pub fn report(&self) -> AxiomReport {
        let mut report = lie_report(&self.bracket);
        report.push(AUTOMORPHISM, automorphism_defect(&self.aut, &self.bracket));
        report
    }

    pub fn center(&self) -> Subspace {
        center(&self.bracket)
    }
}

/// A nonzero kernel vector if `f` is singular, else the first bracket defect.
pub fn automorphism_defect(f: &Matrix, bracket: &BilinearMap) -> Option<Witness> {
    let k = kernel(f);
    if k.dim() > 0 {
        return Some(Witness::new(vec![], k.basis_vectors().remove(0)));
    }
    lie_hom_defect(f, bracket, bracket)
}

/// `L = L_0 + L_1` on a partition of the basis, with a graded automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedLieWithAut {
    pub lie: LieWithAut,
    pub even: Vec<usize>,
    pub odd: Vec<usize>,
}

impl GradedLieWithAut {
    pub fn new(lie: LieWithAut, even: Vec<usize>, odd: Vec<usize>) -> Result<Self> {
        let n = lie.dim();
        let mut seen = vec![false; n];
        for &i in even.iter().chain(&odd) {
            if i >= n || seen[i] {
                return Err(Error::IllDefined("grading partition"));
            }
            seen[i] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::IllDefined("grading partition"));
        }
        Ok(Self { lie, even, odd })
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    fn parity(&self) -> Vec<u8> {
        let mut p = vec![0u8; self.dim()];
        for &i in &self.odd {
            p[i] = 1;
        }
        p
    }

    /// `[L_i, L_j] ⊂ L_{i+j}` and `aut(L_i) ⊂ L_i`.
    pub fn grading_report(&self) -> AxiomReport {
        let n = self.dim();
        let parity = self.parity();
        let off_component = |v: &[Scalar], expected: u8| -> Vec<Scalar> {
            v.iter()
                .enumerate()
                .map(|(k, x)| if parity[k] == expected { Scalar::zero() } else { x.clone() })
                .collect()
        };
        let mut report = AxiomReport::new();
        let mut bracket_witness = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let d = off_component(self.lie.bracket.entry(i, j), parity[i] ^ parity[j]);
                if !crate::linalg::is_zero(&d) {
                    bracket_witness = Some(Witness::new(vec![i, j], d));
                    break 'outer;
                }
            }
        }
        report.push(GRADING, bracket_witness);
        let aut_witness = (0..n).find_map(|i| {
            let d = off_component(&self.lie.aut.column(i), parity[i]);
            (!crate::linalg::is_zero(&d)).then(|| Witness::new(vec![i], d))
        });
        report.push(GRADED_AUTOMORPHISM, aut_witness);
        report
    }

    /// Lie axioms, automorphism, and grading.
    pub fn report(&self) -> AxiomReport {
        let mut report = self.lie.report();
        report.extend(self.grading_report());
        report
    }

    pub fn odd_vectors(&self) -> Vec<Vec<Scalar>> {
        self.odd.iter().map(|&i| unit(self.dim(), i)).collect()
    }
}

pub fn check_grading(g: &GradedLieWithAut) -> bool {
    g.grading_report().passed()
}

/// Kernel of the stacked adjoint matrices.
pub fn center(bracket: &BilinearMap) -> Subspace {
    let n = bracket.dim();
    let mut stacked = Matrix::zeros(0, n);
    for i in 0..n {
        stacked = stacked.vstack(&bracket.ad(i)).expect("same width");
    }
    kernel(&stacked)
}

/// Smallest subalgebra containing `generators`, by span closure.
pub fn generated_subalgebra(bracket: &BilinearMap, generators: &[Vec<Scalar>]) -> Result<Subspace> {
    let n = bracket.dim();
    let mut current = span(generators, n)?;
    // The dimension strictly grows until it stabilizes, so n rounds suffice.
    for _ in 0..=n {
        let basis = current.basis_vectors();
        let mut vectors = basis.clone();
        for (i, x) in basis.iter().enumerate() {
            for y in &basis[i + 1..] {
                vectors.push(bracket.apply(x, y));
            }
        }
        let next = span(&vectors, n)?;
        if next.dim() == current.dim() {
            return Ok(current);
        }
        current = next;
    }
    Ok(current)
}

/// Lie homomorphism with `f ∘ aut_1 = aut_2 ∘ f`.
pub fn is_tl_morphism(f: &Matrix, source: &LieWithAut, target: &LieWithAut) -> bool {
    f.cols() == source.dim()
        && f.rows() == target.dim()
        && lie_hom_defect(f, &source.bracket, &target.bracket).is_none()
        && f * &source.aut == &target.aut * f
}

/// First basis column where `f ∘ a = b ∘ f` fails.
pub fn intertwining_defect(f: &Matrix, a: &Matrix, b: &Matrix) -> Option<Witness> {
    let lhs = f * a;
    let rhs = b * f;
    (0..lhs.cols()).find_map(|c| {
        let d = sub(&lhs.column(c), &rhs.column(c));
        (!crate::linalg::is_zero(&d)).then(|| Witness::new(vec![c], d))
    })
}
