use std::path::Path;

use anyhow::{bail, Context, Result};
use homlts_core::imbedding::lie::automorphism_defect;
use homlts_core::imbedding::universal_algebra::universal_report;
use homlts_core::imbedding::{build_ghe, build_universal, imbedding_defect, GradedLieWithAut, LieWithAut};
use homlts_core::structures::{
    check_truths_identity, check_truths_identity_variant, hom_lie_report, hom_lts_report,
    induce_hom_lie, induce_hom_lts_from_lie, induce_lie_from_regular, lie_report,
};
use homlts_core::derivation::check_ideal_identity;
use homlts_core::universal::{check_uniqueness, construct_phi};
use homlts_core::{BilinearMap, Error, HomLieAlgebra, HomLts, Matrix, RegularHomLts, Twisted};

use crate::args::{Direction, Imbedding};
use crate::file::{read_json, Algebra, AlgebraFile, Grading, MatrixFile};
use crate::report::Report;

/// Shape and parsing problems are input errors; everything else is a
/// mathematical failure and goes into the report.
fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::DimensionMismatch { .. } | Error::VectorLength { .. } | Error::NotSquare { .. } | Error::ParseScalar(_)
    )
}

fn record(report: &mut Report, name: &str, err: Error) -> Result<()> {
    match err {
        e if is_input_error(&e) => return Err(e.into()),
        Error::AxiomFailure(axioms) => report.axioms(&axioms),
        Error::NotImbedding(v) => report.check(name, Some(v.witness())),
        Error::SkewViolation { indices } => report.check_bool(name, false, Some(format!("not skew at {indices:?}"))),
        e => report.check_bool(name, false, Some(e.to_string())),
    }
    Ok(())
}

fn read_algebra(path: &Path) -> Result<(AlgebraFile, Algebra)> {
    let file: AlgebraFile = read_json(path)?;
    let algebra = file.decode().with_context(|| format!("in {}", path.display()))?;
    Ok((file, algebra))
}

fn read_matrix(path: &Path) -> Result<Matrix> {
    let file: MatrixFile = read_json(path)?;
    file.decode().with_context(|| format!("in {}", path.display()))
}

fn class_name(c: homlts_core::TwistClass) -> &'static str {
    match c {
        homlts_core::TwistClass::Plain => "plain",
        homlts_core::TwistClass::Multiplicative => "multiplicative",
        homlts_core::TwistClass::Regular => "regular",
    }
}

fn set_object<T: serde::Serialize>(report: &mut Report, value: &T) {
    report.object = Some(serde_json::to_value(value).expect("serializable"));
}

pub fn verify(input: &Path) -> Result<Report> {
    let mut report = Report::new(format!("verify --input {}", input.display()));
    let (_, algebra) = read_algebra(input)?;
    report.fact("dim", algebra.dim());
    match &algebra {
        Algebra::Lie { bracket, aut, grading } => {
            report.fact("kind", "lie");
            report.axioms(&lie_report(bracket));
            if let Some(aut) = aut {
                report.check("automorphism", automorphism_defect(aut, bracket).as_ref());
                if let Some(g) = grading {
                    let lie = LieWithAut::new(bracket.clone(), aut.clone());
                    match lie.and_then(|l| GradedLieWithAut::new(l, g.even.clone(), g.odd.clone())) {
                        Ok(graded) => report.axioms(&graded.grading_report()),
                        Err(e) => record(&mut report, "grading", e)?,
                    }
                }
            } else if grading.is_some() {
                bail!("field grading requires alpha");
            }
        }
        Algebra::HomLie { bracket, alpha } => {
            report.fact("kind", "hom_lie");
            report.axioms(&hom_lie_report(bracket, alpha));
            let class = HomLieAlgebra::new(bracket.clone(), alpha.clone())
                .map(|l| l.twist_class())
                .unwrap_or(homlts_core::TwistClass::Plain);
            report.fact("class", class_name(class));
        }
        Algebra::HomLts {
            bracket,
            alpha1,
            alpha2,
        } => {
            report.fact("kind", "hom_lts");
            let axioms = hom_lts_report(bracket, alpha1, alpha2);
            report.axioms(&axioms);
            let lts = HomLts::new(bracket.clone(), alpha1.clone(), alpha2.clone());
            let class = match (&lts, axioms.passed()) {
                (Ok(lts), true) => lts.twist_class(),
                _ => homlts_core::TwistClass::Plain,
            };
            report.fact("class", class_name(class));
            report.fact("regular", if class == homlts_core::TwistClass::Regular { "yes" } else { "no" });
            if let (Ok(lts), homlts_core::TwistClass::Regular) = (lts, class) {
                let regular = RegularHomLts::from_lts(lts)?;
                report.axioms(&check_truths_identity(&regular));
                report.axioms(&check_ideal_identity(&regular)?);
                report.note(&check_truths_identity_variant(&regular));
            }
        }
    }
    Ok(report)
}

pub fn induce(input: &Path, which: Direction, sigma: Option<&Path>) -> Result<Report> {
    let mut command = format!("induce --input {} --which {}", input.display(), direction_name(which));
    if let Some(s) = sigma {
        command.push_str(&format!(" --sigma {}", s.display()));
    }
    let mut report = Report::new(command);
    let (file, algebra) = read_algebra(input)?;
    let sigma = sigma.map(read_matrix).transpose()?;
    let lie_input = |algebra: &Algebra| -> Result<BilinearMap> {
        match algebra {
            Algebra::Lie { bracket, .. } => Ok(bracket.clone()),
            _ => bail!("direction {} needs an input of kind lie", direction_name(which)),
        }
    };
    let need_sigma = || sigma.clone().context("--sigma is required for this direction");
    let induced = match which {
        Direction::LieToHomlie => {
            let bracket = lie_input(&algebra)?;
            induce_hom_lie(&bracket, &need_sigma()?).map(|l| {
                report.axioms(&hom_lie_report(l.bracket(), l.alpha()));
                report.fact("class", class_name(l.twist_class()));
                Algebra::HomLie {
                    bracket: l.bracket().clone(),
                    alpha: l.alpha().clone(),
                }
            })
        }
        Direction::HomlieToLie => {
            let Algebra::HomLie { bracket, alpha } = &algebra else {
                bail!("direction homlie-to-lie needs an input of kind hom_lie");
            };
            HomLieAlgebra::new(bracket.clone(), alpha.clone())
                .and_then(|l| induce_lie_from_regular(&l))
                .map(|l| {
                    report.axioms(&lie_report(l.bracket()));
                    Algebra::Lie {
                        bracket: l.bracket().clone(),
                        aut: None,
                        grading: None,
                    }
                })
        }
        Direction::LieToHomlts => {
            let bracket = lie_input(&algebra)?;
            induce_hom_lts_from_lie(&bracket, &need_sigma()?).map(|t| {
                report.axioms(&hom_lts_report(t.bracket(), t.alpha1(), t.alpha2()));
                report.fact("class", class_name(t.twist_class()));
                Algebra::HomLts {
                    bracket: t.bracket().clone(),
                    alpha1: t.alpha1().clone(),
                    alpha2: t.alpha2().clone(),
                }
            })
        }
    };
    match induced {
        Ok(algebra) => {
            report.fact("dim", algebra.dim());
            set_object(&mut report, &AlgebraFile::encode(&algebra, file.basis));
        }
        Err(e) => record(&mut report, "induce", e)?,
    }
    Ok(report)
}

fn direction_name(d: Direction) -> &'static str {
    match d {
        Direction::LieToHomlie => "lie-to-homlie",
        Direction::HomlieToLie => "homlie-to-lie",
        Direction::LieToHomlts => "lie-to-homlts",
    }
}

/// The regular Hom-LTS in a file, or the failed checks that rule it out.
fn read_regular(path: &Path, report: &mut Report) -> Result<Option<RegularHomLts>> {
    let (_, algebra) = read_algebra(path)?;
    let Algebra::HomLts {
        bracket,
        alpha1,
        alpha2,
    } = algebra
    else {
        bail!("{} must be of kind hom_lts", path.display());
    };
    match HomLts::new(bracket, alpha1, alpha2).and_then(RegularHomLts::from_lts) {
        Ok(t) => Ok(Some(t)),
        Err(e) => {
            record(report, "regular", e)?;
            Ok(None)
        }
    }
}

fn graded_object(g: &GradedLieWithAut) -> AlgebraFile {
    let algebra = Algebra::Lie {
        bracket: g.lie.bracket.clone(),
        aut: Some(g.lie.aut.clone()),
        grading: Some(Grading {
            even: g.even.clone(),
            odd: g.odd.clone(),
        }),
    };
    AlgebraFile::encode(&algebra, None)
}

pub fn embed(input: &Path, which: Imbedding) -> Result<Report> {
    let name = match which {
        Imbedding::Standard => "standard",
        Imbedding::Universal => "universal",
    };
    let mut report = Report::new(format!("embed --input {} --which {name}", input.display()));
    let Some(t) = read_regular(input, &mut report)? else {
        return Ok(report);
    };
    report.fact("source dim", t.dim());
    match which {
        Imbedding::Standard => match build_ghe(&t) {
            Ok(g) => {
                report.axioms(&g.target.report());
                let defect = imbedding_defect(&g.iota, &t, &g.target.lie)?;
                report.check("imbedding equations", defect.as_ref().map(|v| v.witness()));
                report.fact("dim", g.dim());
                report.fact("even dim", g.ihd_dim);
                set_object(&mut report, &graded_object(&g.target));
            }
            Err(e) => record(&mut report, "standard imbedding", e)?,
        },
        Imbedding::Universal => match build_universal(&t) {
            Ok(u) => {
                report.axioms(&u.target.report());
                report.axioms(&universal_report(&u));
                let defect = imbedding_defect(&u.iota_t, &t, &u.target.lie)?;
                report.check("imbedding equations", defect.as_ref().map(|v| v.witness()));
                report.fact("dim", u.dim());
                report.fact("even dim", u.even_dim());
                report.fact("wedge dim", u.wedge.dim());
                report.fact("A dim", u.a_submodule.dim());
                report.fact("ker nu dim", homlts_core::linalg::kernel(&u.nu).dim());
                set_object(&mut report, &graded_object(&u.target));
            }
            Err(e) => record(&mut report, "universal imbedding", e)?,
        },
    }
    Ok(report)
}

pub fn factor(input: &Path, target: &Path, epsilon: &Path) -> Result<Report> {
    let mut report = Report::new(format!(
        "factor --input {} --target {} --epsilon {}",
        input.display(),
        target.display(),
        epsilon.display()
    ));
    let regular = read_regular(input, &mut report)?;
    let (_, host) = read_algebra(target)?;
    let Algebra::Lie { bracket, aut, .. } = host else {
        bail!("{} must be of kind lie", target.display());
    };
    let aut = aut.with_context(|| format!("{} needs alpha, the automorphism", target.display()))?;
    let eps = read_matrix(epsilon)?;
    let Some(t) = regular else {
        return Ok(report);
    };
    let host_report = lie_report(&bracket);
    if !host_report.passed() {
        report.axioms(&host_report);
        return Ok(report);
    }
    report.check("target automorphism", automorphism_defect(&aut, &bracket).as_ref());
    let l = LieWithAut::new(bracket, aut)?;
    if eps.rows() != l.dim() || eps.cols() != t.dim() {
        bail!(
            "epsilon is {}x{}, expected {}x{}",
            eps.rows(),
            eps.cols(),
            l.dim(),
            t.dim()
        );
    }
    let u = match build_universal(&t) {
        Ok(u) => u,
        Err(e) => {
            record(&mut report, "universal imbedding", e)?;
            return Ok(report);
        }
    };
    match construct_phi(&u, &eps, &l) {
        Ok(f) => {
            report.axioms(&f.report);
            let cert = check_uniqueness(&u, &l, &f.phi, &f.phi)?;
            report.check_bool(
                "uniqueness",
                cert.holds() && cert.odd_generates,
                Some(format!("generated by odd part: {}", cert.odd_generates)),
            );
            report.fact("universal dim", u.dim());
            report.fact("phi rank", f.phi.rank());
            set_object(&mut report, &MatrixFile::encode(&f.phi));
        }
        Err(e) => record(&mut report, "imbedding", e)?,
    }
    Ok(report)
}
