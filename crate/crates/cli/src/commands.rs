use matchrb::algebra::{check_algebra, check_bimodule};
use matchrb::cochain::{check_mc, MixedCochain};
use matchrb::complex::{hochschild_adjoint_complex, hochschild_complex, mrba_subcomplex, mrrba_complex, op_complex, Complex};
use matchrb::deformation::{
    check_mda_deformation, check_mrrba_deformation, cocycle_to_deformation, extract_infinitesimal, extract_mda_infinitesimal,
    MdaDeformation, MrrbaDeformation,
};
use matchrb::dendriform::{check_mda, check_mda_morphism, extend_to_labelled_dendriform, functor_g, induce_dendriform, semidirect_embedding};
use matchrb::exact_sequence::long_exact_sequence;
use matchrb::homotopy::{
    check_a_infinity, check_homotopy_mda, check_homotopy_mrrba, homotopy_functor_g, induce_homotopy_dendriform, AInfinityAlgebra,
};
use matchrb::io::{
    AlgebraDoc, BimoduleDoc, DeformationDoc, DendriformDoc, Document, FamilyDoc, HomotopyMdaDoc, HomotopyMrrbaDoc, MapDoc,
};
use matchrb::operad::{check_multiplication, check_operad_axioms, mda_complex};
use matchrb::operators::{
    check_matching_aybe, check_morphism_pair, check_mrrba, check_skew_symmetric, family_from_central_elements, family_from_rb_pair,
    operators_from_rmatrix, operators_on_dual,
};
use matchrb::{random, CertificateReport, OperatorFamily};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::workspace::{write_atomic, Object, Workspace};

/// Command-wide settings from the global flags.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub max_degree: usize,
    pub arity_bound: usize,
    pub order: usize,
    pub seed: u64,
}

/// What a command prints: JSON for stdout and whether it passed.
pub struct Outcome {
    pub json: Value,
    pub passed: bool,
    pub summary: String,
}

impl Outcome {
    fn report(rep: CertificateReport) -> Result<Self, CliError> {
        Ok(Outcome { passed: rep.passed(), summary: rep.summary(), json: serde_json::to_value(&rep)? })
    }
}

pub const CHECKERS: &[&str] = &[
    "algebra",
    "bimodule",
    "mrrba",
    "mc",
    "aybe",
    "skew",
    "mda",
    "morphism",
    "deformation",
    "homotopy-mda",
    "homotopy-mrrba",
    "a-infinity",
    "operad-axioms",
    "multiplication",
];

fn arg<'a>(args: &'a [String], i: usize, what: &str) -> Result<&'a str, CliError> {
    args.get(i).map(String::as_str).ok_or_else(|| CliError::Usage(format!("missing argument: {what}")))
}

pub fn check(ws: &Workspace, target: &str, kind: &str, args: &[String], s: Settings) -> Result<Outcome, CliError> {
    ws.get(target)?;
    let rep = match kind {
        "algebra" => check_algebra(&*ws.algebra(target)?),
        "bimodule" => check_bimodule(&*ws.bimodule(target)?),
        "mrrba" => check_mrrba(&ws.family(target)?),
        "mc" => check_mc(&ws.family(target)?),
        "aybe" => check_matching_aybe(&ws.rmatrix(target)?),
        "skew" => check_skew_symmetric(&ws.rmatrix(target)?),
        "mda" => check_mda(&ws.dendriform(target)?),
        "morphism" => match ws.get(target)? {
            Object::Dendriform(src) => {
                let dst = ws.dendriform(arg(args, 0, "target dendriform")?)?;
                check_mda_morphism(&ws.map(arg(args, 1, "linear map")?)?, src, &dst)?
            }
            _ => {
                let src = ws.family(target)?;
                let dst = ws.family(arg(args, 0, "target family")?)?;
                let phi = ws.map(arg(args, 1, "algebra map")?)?;
                let psi = ws.map(arg(args, 2, "module map")?)?;
                check_morphism_pair(&phi, &psi, &src, &dst)?
            }
        },
        "deformation" => match ws.get(target)? {
            Object::Deformation(d) => check_mrrba_deformation(d),
            Object::MdaDeformation(d) => check_mda_deformation(d),
            _ => return Err(CliError::WrongKind { name: target.into(), expected: "deformation", found: ws.get(target)?.kind() }),
        },
        "homotopy-mda" => check_homotopy_mda(&ws.homotopy_mda(target)?, s.arity_bound)?,
        "homotopy-mrrba" => check_homotopy_mrrba(&ws.homotopy_mrrba(target)?, s.arity_bound)?,
        "a-infinity" => match ws.get(target)? {
            Object::HomotopyMrrba(h) => check_a_infinity(&h.module.algebra, s.arity_bound),
            _ => check_a_infinity(&AInfinityAlgebra::from_algebra(&*ws.algebra(target)?), s.arity_bound),
        },
        "operad-axioms" => {
            let d = ws.dendriform(target)?;
            check_operad_axioms(d.dim(), &d.labels, s.arity_bound, &mut random::rng(s.seed))?
        }
        "multiplication" => match ws.get(target)? {
            Object::Operad(e) => check_multiplication(e)?,
            other => return Err(CliError::WrongKind { name: target.into(), expected: "operad-element", found: other.kind() }),
        },
        other => return Err(CliError::UnknownChecker(other.to_string())),
    };
    Outcome::report(rep)
}

/// Documents for a family together with its bimodule and algebra.
fn family_docs(name: &str, f: &OperatorFamily) -> Vec<(String, Document)> {
    let (a, m) = (format!("{name}-algebra"), format!("{name}-module"));
    vec![
        (a.clone(), Document::Algebra(AlgebraDoc::of(f.algebra()))),
        (m.clone(), Document::Bimodule(BimoduleDoc::of(&f.module, &a))),
        (name.to_string(), Document::OperatorFamily(FamilyDoc::of(f, &m))),
    ]
}

pub const CONSTRUCTIONS: &[&str] = &[
    "induce-dendriform",
    "functor-g",
    "semidirect-embedding",
    "operators-from-rmatrix",
    "operators-on-dual",
    "extend-to-labelled-dendriform",
    "homotopy-functor-g",
    "induce-homotopy-dendriform",
    "cocycle-to-deformation",
    "family-from-rb-pair",
    "family-from-central-elements",
];

/// Runs a construction, certifies its output and persists it only when the
/// certificate passes.
pub fn build(ws: &Workspace, construction: &str, args: &[String], name: Option<&str>, s: Settings) -> Result<Outcome, CliError> {
    let source = arg(args, 0, "input name")?;
    let name = name.map_or_else(|| format!("{source}-{construction}"), str::to_string);
    let mut notes: Vec<String> = Vec::new();
    let (docs, certificate) = match construction {
        "induce-dendriform" => {
            let d = induce_dendriform(&ws.family(source)?)?;
            (vec![(name.clone(), Document::Dendriform(DendriformDoc::of(&d)))], check_mda(&d))
        }
        "functor-g" => {
            let d = ws.dendriform(source)?;
            let g = functor_g(&d)?;
            let mut rep = check_mrrba(&g);
            let back = induce_dendriform(&g)?;
            let equal = back.labels == d.labels
                && (0..d.q()).all(|x| back.prec_tensor(x) == d.prec_tensor(x) && back.succ_tensor(x) == d.succ_tensor(x));
            if !equal {
                rep.fail("roundtrip", vec![source.to_string()]);
            }
            notes.push(format!("roundtrip through induce-dendriform: {}", if equal { "equal" } else { "differs" }));
            (family_docs(&name, &g), rep)
        }
        "semidirect-embedding" => {
            let (_, family, iota, rep) = semidirect_embedding(&ws.dendriform(source)?)?;
            let mut docs = family_docs(&name, &family);
            docs.push((format!("{name}-inclusion"), Document::LinearMap(MapDoc::of(&iota))));
            (docs, rep)
        }
        "operators-from-rmatrix" => {
            let r = ws.rmatrix(source)?;
            let f = operators_from_rmatrix(&r, ws.bimodule(arg(args, 1, "bimodule")?)?)?;
            let rep = check_mrrba(&f);
            (family_docs(&name, &f), rep)
        }
        "operators-on-dual" => {
            let (f, rep) = operators_on_dual(&ws.rmatrix(source)?)?;
            (family_docs(&name, &f), rep)
        }
        "extend-to-labelled-dendriform" => {
            let d = extend_to_labelled_dendriform(&ws.dendriform(source)?)?;
            (vec![(name.clone(), Document::Dendriform(DendriformDoc::of(&d)))], check_mda(&d))
        }
        "homotopy-functor-g" => {
            let h = ws.homotopy_mda(source)?;
            let g = homotopy_functor_g(&h)?;
            let mut rep = check_homotopy_mrrba(&g, s.arity_bound)?;
            let equal = induce_homotopy_dendriform(&g)? == h;
            if !equal {
                rep.fail("roundtrip", vec![source.to_string()]);
            }
            notes.push(format!("roundtrip through induce-homotopy-dendriform: {}", if equal { "equal" } else { "differs" }));
            (vec![(name.clone(), Document::HomotopyMrrba(HomotopyMrrbaDoc::of(&g)?))], rep)
        }
        "induce-homotopy-dendriform" => {
            let h = induce_homotopy_dendriform(&ws.homotopy_mrrba(source)?)?;
            let rep = check_homotopy_mda(&h, s.arity_bound)?;
            (vec![(name.clone(), Document::HomotopyMda(HomotopyMdaDoc::of(&h)?))], rep)
        }
        "cocycle-to-deformation" => {
            let f = ws.family(source)?;
            let k: usize = arg(args, 1, "kernel index")?.parse().map_err(|_| CliError::Usage("kernel index must be a number".into()))?;
            let c = mrrba_complex(&f)?;
            let kernel = c.differential(2)?.kernel_basis();
            let z = kernel.get(k).ok_or_else(|| CliError::Usage(format!("kernel index {k} out of range 0..{}", kernel.len())))?;
            let z = MixedCochain::from_vector(&f, 2, &z.to_dense(c.dim(2)))?;
            let d = cocycle_to_deformation(&f, &z)?;
            // the base must be persisted under a name the document can refer to
            let base = format!("{name}-base");
            let mut docs = family_docs(&base, &f);
            docs.push((name.clone(), Document::Deformation(DeformationDoc::of(&d, &base))));
            (docs, check_mrrba_deformation(&d))
        }
        "family-from-rb-pair" => {
            let f = family_from_rb_pair(ws.bimodule(source)?, ws.map(arg(args, 1, "operator")?)?)?;
            let rep = check_mrrba(&f);
            (family_docs(&name, &f), rep)
        }
        "family-from-central-elements" => {
            let (labels, elems) = ws.elements(arg(args, 2, "elements")?)?;
            let f = family_from_central_elements(ws.bimodule(source)?, ws.map(arg(args, 1, "operator")?)?, labels, elems)?;
            let rep = check_mrrba(&f);
            (family_docs(&name, &f), rep)
        }
        other => return Err(CliError::UnknownConstruction(other.to_string())),
    };
    if !certificate.passed() {
        return Err(CliError::ConstructionFailed(Box::new(certificate)));
    }
    let mut written = Vec::new();
    for (n, doc) in &docs {
        write_atomic(ws.dir(), n, doc)?;
        written.push(n.clone());
    }
    let summary = format!("{construction}: persisted {}", written.join(", "));
    let json = json!({
        "construction": construction,
        "name": name,
        "persisted": written,
        "notes": notes,
        "certificate": certificate,
    });
    Ok(Outcome { json, passed: true, summary })
}

fn complex_for(ws: &Workspace, target: &str, complex: &str, degree: usize) -> Result<Complex, CliError> {
    Ok(match complex {
        "mrrba" => mrrba_complex(&ws.family(target)?)?,
        "op" => op_complex(&ws.family(target)?)?,
        "mda" => match ws.get(target)? {
            Object::Family(f) => mda_complex(&induce_dendriform(f)?)?,
            _ => mda_complex(&ws.dendriform(target)?)?,
        },
        "hochschild" => hochschild_complex(ws.bimodule(target)?),
        "hochschild-adjoint" => hochschild_adjoint_complex(&ws.algebra(target)?),
        "mrba" => {
            let sub = mrba_subcomplex(&ws.family(target)?, degree + 1)?;
            if !sub.certificate.passed() {
                return Err(CliError::ConstructionFailed(Box::new(sub.certificate)));
            }
            sub.complex
        }
        other => return Err(CliError::UnknownComplex(other.to_string())),
    })
}

pub const COMPLEXES: &[&str] = &["mrrba", "op", "mda", "hochschild", "hochschild-adjoint", "mrba", "les"];

pub fn cohomology(ws: &Workspace, target: &str, complex: &str, degree: usize, s: Settings) -> Result<Outcome, CliError> {
    if degree > s.max_degree {
        return Err(matchrb::Error::DegreeOutOfRange { degree, range: format!("0..={}", s.max_degree) }.into());
    }
    if complex == "les" {
        let rep = long_exact_sequence(&ws.family(target)?, degree)?;
        let passed = rep.passed();
        let summary = format!("les up to degree {degree}: {}", if passed { "exact" } else { "NOT exact" });
        return Ok(Outcome { json: serde_json::to_value(&rep)?, passed, summary });
    }
    let c = complex_for(ws, target, complex, degree)?.with_max_degree(s.max_degree);
    let rep = c.cohomology(degree)?;
    let summary = format!("H^{degree}_{} = {} (δ² = 0: {})", rep.complex, rep.dim_cohomology, rep.delta_squared_zero);
    Ok(Outcome { passed: rep.delta_squared_zero, summary, json: serde_json::to_value(&rep)? })
}

fn truncate(d: &MrrbaDeformation, order: usize) -> Result<MrrbaDeformation, CliError> {
    let n = order.min(d.order()) + 1;
    Ok(MrrbaDeformation::new(
        d.base.clone(),
        d.mu[..n].to_vec(),
        d.left[..n].to_vec(),
        d.right[..n].to_vec(),
        d.operators[..n].to_vec(),
    )?)
}

fn truncate_mda(d: &MdaDeformation, order: usize) -> Result<MdaDeformation, CliError> {
    let n = order.min(d.order()) + 1;
    Ok(MdaDeformation::new(d.base.clone(), d.prec[..n].to_vec(), d.succ[..n].to_vec())?)
}

/// Certifies a deformation up to `--order` and reports its infinitesimal,
/// with whether that is a coboundary. A family is deformed trivially.
pub fn deform(ws: &Workspace, target: &str, s: Settings) -> Result<Outcome, CliError> {
    let (certificate, infinitesimal, trivial) = match ws.get(target)? {
        Object::Deformation(d) => {
            let d = truncate(d, s.order)?;
            let rep = check_mrrba_deformation(&d);
            let (z, _) = extract_infinitesimal(&d)?;
            let v = z.to_vector();
            let trivial = mrrba_complex(&d.base)?.differential(1)?.solve(&v, false).is_some();
            (rep, v, trivial)
        }
        Object::MdaDeformation(d) => {
            let d = truncate_mda(d, s.order)?;
            let rep = check_mda_deformation(&d);
            let (pi, _) = extract_mda_infinitesimal(&d)?;
            let v = pi.to_vector();
            let trivial = mda_complex(&d.base)?.differential(1)?.solve(&v, false).is_some();
            (rep, v, trivial)
        }
        Object::Family(f) => {
            let d = MrrbaDeformation::constant(f, s.order);
            let rep = check_mrrba_deformation(&d);
            let (z, _) = extract_infinitesimal(&d)?;
            (rep, z.to_vector(), true)
        }
        other => return Err(CliError::WrongKind { name: target.into(), expected: "deformation", found: other.kind() }),
    };
    let passed = certificate.passed();
    let summary = format!("{} (infinitesimal is {}a coboundary)", certificate.summary(), if trivial { "" } else { "not " });
    let json = json!({
        "target": target,
        "order": s.order,
        "certificate": certificate,
        "infinitesimal": infinitesimal,
        "infinitesimal_is_coboundary": trivial,
    });
    Ok(Outcome { json, passed, summary })
}

/// Runs every checker that applies to the target's kind.
pub fn report(ws: &Workspace, target: &str, s: Settings) -> Result<Outcome, CliError> {
    let obj = ws.get(target)?;
    let kinds: &[&str] = match obj {
        Object::Algebra(_) => &["algebra", "a-infinity"],
        Object::Bimodule(_) => &["algebra", "bimodule"],
        Object::Family(_) => &["algebra", "bimodule", "mrrba", "mc", "homotopy-mrrba"],
        Object::RMatrix(_) => &["algebra", "aybe", "skew"],
        Object::Dendriform(_) => &["mda", "homotopy-mda"],
        Object::Deformation(_) | Object::MdaDeformation(_) => &["deformation"],
        Object::HomotopyMda(_) => &["homotopy-mda"],
        Object::HomotopyMrrba(_) => &["a-infinity", "homotopy-mrrba"],
        Object::Operad(e) if e.arity() == 2 => &["multiplication"],
        Object::Map(_) | Object::Elements(..) | Object::Operad(_) => &[],
    };
    let mut checks = Vec::new();
    let mut passed = true;
    for kind in kinds {
        // a failing prerequisite is reported in place of the dependent check
        let (ok, value) = match check(ws, target, kind, &[], s) {
            Ok(o) => (o.passed, o.json),
            Err(e) if e.report().is_some() => (false, json!({ "error": e.to_string(), "report": e.report() })),
            Err(e) => return Err(e),
        };
        passed &= ok;
        checks.push(json!({ "checker": kind, "passed": ok, "report": value }));
    }
    let summary = format!("{target} ({}): {}", obj.kind(), if passed { "all checks pass" } else { "some checks FAIL" });
    Ok(Outcome { json: json!({ "target": target, "kind": obj.kind(), "checks": checks }), passed, summary })
}
