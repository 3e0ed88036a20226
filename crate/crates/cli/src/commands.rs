use std::collections::BTreeMap;

use lsa_forge::algebra::{
    abelian, associative, check_all, commutative, is_derivation, jacobi_antisym, left_symmetric, lie_admissible,
    lie_admissible_bianchi,
};
use lsa_forge::catalog::random::{random_mat, random_params, rng};
use lsa_forge::catalog::{
    assoc_chain, build_quadratic_symplectic, canonical, circ_of, classify_compatible_dim2, family_certificate,
    normalize_assoc_symp, normalize_dim2_slsa, CanonicalId, CompatVerdict, Dim2Verdict, Family,
};
use lsa_forge::doubling::{build_hyper, is_compatible};
use lsa_forge::forms::{is_flat, is_invariant_form, is_invariant_iso, is_two_cocycle, symplectic_lsa, Bilinear};
use lsa_forge::io::{Params, Structure};
use lsa_forge::lts::verify_lts;
use lsa_forge::operators::{build_theorem_symp, build_theorem_theta, lts_o, lts_yb};
use lsa_forge::phase::{
    cocycle_check, is_lie_extendible, k0, metric0, omega0, phase_product, verify_hyper, verify_para_kahler,
};
use lsa_forge::smatrix::{classify_r, cybe_double, flat_double, twisted_structures, verify_xi_iso, Tensor2};
use lsa_forge::{Algebra, Certificate, Error, Mat, Report, Scalar};

use crate::input::Inputs;
use crate::output::{round_trip, Outcome};
use crate::{Build, Catalog, CheckArgs, Classify, Failure, Lts, LtsSource, Normalize};

/// A failed precondition or model constraint is a mathematical verdict, not
/// an input error: the job stops with a failing report.
macro_rules! gated {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(Error::Precondition { identity, witness }) => {
                return Ok(Outcome::rejected(Report::new("precondition", &identity, witness.or(Some(vec![])))))
            }
            Err(Error::Constraints(c)) => {
                return Ok(Outcome::rejected(Report::fail("model_constraints", "type-two constraints", c.join("; "))))
            }
            Err(e) => return Err(e.into()),
        }
    };
}

fn form(s: &Structure, name: &str) -> Result<Bilinear, Failure> {
    Ok(s.form(name)?.clone())
}

fn endo(s: &Structure, name: &str) -> Result<Mat, Failure> {
    Ok(s.endo(name)?.clone())
}

fn second_product(inputs: &Inputs, s: &Structure, circ: &Option<std::path::PathBuf>) -> Result<Algebra, Failure> {
    let alg = match circ {
        Some(p) => inputs.structure(p)?.alg,
        None => circ_of(s)?,
    };
    same_dim(&s.alg, &alg)?;
    Ok(alg)
}

fn same_dim(a: &Algebra, b: &Algebra) -> Result<(), Failure> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: b.dim() }.into());
    }
    Ok(())
}

fn renamed(mut r: Report, name: &str) -> Report {
    r.name = name.to_string();
    r
}

fn fmt_params(p: &BTreeMap<String, Scalar>) -> String {
    p.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(", ")
}

fn fmt_mat(m: &Mat) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", rows.join("; "))
}

pub fn check(inputs: &Inputs, a: &CheckArgs) -> Result<Outcome, Failure> {
    let s = inputs.structure(&a.file)?;
    let alg = &s.alg;
    let mut reports = Vec::new();
    for p in &a.pred {
        match p.as_str() {
            "all" => reports.extend(check_all(alg)),
            "left_symmetric" => reports.push(left_symmetric(alg)),
            "associative" => reports.push(associative(alg)),
            "commutative" => reports.push(commutative(alg)),
            "abelian" => reports.push(abelian(alg)),
            "jacobi" => reports.push(jacobi_antisym(alg)),
            "lie_admissible" => reports.push(lie_admissible(alg)),
            "bianchi" => reports.push(lie_admissible_bianchi(alg)),
            "invariant_form" => reports.push(is_invariant_form(&form(&s, &a.form)?, alg)),
            "two_cocycle" => reports.push(is_two_cocycle(&form(&s, &a.form)?, alg)),
            "symplectic_lsa" => reports.extend(symplectic_lsa(alg, &form(&s, &a.form)?)),
            "flat" => reports.push(is_flat(&form(&s, &a.form)?, alg)?),
            "invariant_iso" => reports.push(is_invariant_iso(&form(&s, &a.form)?, alg)?),
            "assoc_chain" => reports.extend(assoc_chain(alg, &form(&s, &a.form)?).checks),
            "compatible" => reports.push(is_compatible(alg, &second_product(inputs, &s, &a.circ)?)?),
            "extendible" | "cocycle" => {
                let path = a.dual.as_ref().ok_or_else(|| Failure::Usage(format!("--pred {p} needs --dual")))?;
                let dual = inputs.structure(path)?.alg;
                same_dim(alg, &dual)?;
                reports.push(if p == "extendible" { is_lie_extendible(alg, &dual) } else { cocycle_check(alg, &dual) });
            }
            other => return Err(Failure::Usage(format!("--pred: unknown predicate `{other}`"))),
        }
    }
    let mut o = Outcome::default();
    o.cert(Certificate::new("check", reports));
    Ok(o)
}

pub fn build(inputs: &Inputs, b: &Build, seed: u64) -> Result<Outcome, Failure> {
    match b {
        Build::Phase { u, dual } => {
            let u = inputs.structure(u)?.alg;
            let n = u.dim();
            let dual = if dual == "zero" { Algebra::zero(n) } else { inputs.structure(std::path::Path::new(dual))?.alg };
            same_dim(&u, &dual)?;
            let ext = phase_product(&u, &dual)?;
            let mut o = Outcome::default();
            let inputs_cert = Certificate::new(
                "inputs",
                vec![
                    renamed(left_symmetric(&u), "u_left_symmetric"),
                    renamed(left_symmetric(&dual), "dual_left_symmetric"),
                    is_lie_extendible(&u, &dual),
                    cocycle_check(&u, &dual),
                ],
            );
            let ok = inputs_cert.passed;
            o.cert(inputs_cert);
            if ok {
                let s = Structure::new(ext)
                    .with_form("metric", metric0(n))
                    .with_form("omega", omega0(n))
                    .with_endo("K", k0(n));
                let back = round_trip(&s)?;
                o.cert(verify_para_kahler(&back.alg.commutator(), back.form("metric")?, back.endo("K")?)?);
                o.structure = Some(s);
            }
            Ok(o)
        }
        Build::Twist { u, tensor } => {
            let file = inputs.structure(u)?;
            let u = &file.alg;
            let mut o = Outcome::default();
            let r = match file.tensors.get(tensor) {
                Some(r) => r.clone(),
                None => {
                    let mut g = rng(seed);
                    let found = (0..200).map(|_| Tensor2::new(random_mat(&mut g, u.dim(), u.dim()))).find(|r| {
                        classify_r(u, r).map(|c| c.quasi_s).unwrap_or(false)
                    });
                    match found {
                        Some(r) => {
                            o.fact("r", format!("{} (searched)", fmt_mat(r.matrix())));
                            r
                        }
                        None => {
                            o.cert(Certificate::new(
                                "search",
                                vec![Report::fail("quasi_s_search", "quasi S-matrix", "none among 200 draws")],
                            ));
                            return Ok(o);
                        }
                    }
                }
            };
            let c = classify_r(u, &r)?;
            o.fact("s_matrix", c.s_matrix);
            o.cert(Certificate::new(
                "r",
                vec![renamed(c.skew_l_invariant.clone(), "skew_part_l_invariant"), c.q_invariant.clone()],
            ));
            if !c.quasi_s {
                return Ok(o);
            }
            let t = gated!(twisted_structures(u, &r));
            let s = Structure::new(t.bracket_twisted.clone())
                .with_form("metric", t.metric.clone())
                .with_endo("K", t.k.clone())
                .with_endo("xi", t.xi.clone());
            let back = round_trip(&s)?;
            o.cert(verify_para_kahler(&back.alg, back.form("metric")?, back.endo("K")?)?);
            o.cert(Certificate::new("twist", vec![verify_xi_iso(&t)]));
            o.cert(verify_lts(&t.lts));
            o.structure = Some(s);
            Ok(o)
        }
        Build::Hyper { file, circ, form: f } => {
            let s = inputs.structure(file)?;
            let circ = second_product(inputs, &s, circ)?;
            let h = gated!(build_hyper(&s.alg, &circ, &form(&s, f)?));
            let out = Structure::new(h.lie.clone())
                .with_form("metric", h.metric.clone())
                .with_endo("K", h.k.clone())
                .with_endo("J", h.j.clone());
            let back = round_trip(&out)?;
            let mut o = Outcome::default();
            o.cert(verify_hyper(&back.alg, back.form("metric")?, back.endo("K")?, back.endo("J")?)?);
            o.structure = Some(out);
            Ok(o)
        }
        Build::Tsymp { file, form: f, endo: e } => {
            let s = inputs.structure(file)?;
            let d = gated!(build_theorem_symp(&s.alg, &form(&s, f)?, &endo(&s, e)?));
            let out = Structure::new(d.bracket.clone())
                .with_form("metric", d.metric.clone())
                .with_endo("K", d.k.clone());
            let back = round_trip(&out)?;
            let mut o = Outcome::default();
            o.cert(Certificate::new("notes", vec![d.literal_ad.clone()]));
            o.cert(d.cert.clone());
            o.cert(verify_para_kahler(&back.alg, back.form("metric")?, back.endo("K")?)?);
            // The literal reading is informational.
            o.certs[0].passed = true;
            o.structure = Some(out);
            Ok(o)
        }
        Build::Ttheta { file, form: f, endo: e } => {
            let s = inputs.structure(file)?;
            let d = gated!(build_theorem_theta(&s.alg, &form(&s, f)?, &endo(&s, e)?));
            let out = Structure::new(d.bracket.clone())
                .with_form("metric", d.metric.clone())
                .with_endo("K", d.k.clone())
                .with_endo("J", d.j.clone());
            let back = round_trip(&out)?;
            let (metric, k, j) = (back.form("metric")?, back.endo("K")?, back.endo("J")?);
            let mut o = Outcome::default();
            o.fact("hyper", d.hyper);
            o.cert(d.cert.clone());
            o.cert(if d.hyper { verify_hyper(&back.alg, metric, k, j)? } else { verify_para_kahler(&back.alg, metric, k)? });
            o.structure = Some(out);
            Ok(o)
        }
        Build::Quadratic { file, order } => {
            let s = inputs.structure(file)?;
            let q = gated!(build_quadratic_symplectic(&s.alg, *order));
            let out = Structure::new(q.u.clone())
                .with_form("B", q.b.clone())
                .with_form("omega", q.omega.clone())
                .with_form("metric", q.metric.clone())
                .with_endo("D", q.d.clone());
            let back = round_trip(&out)?;
            let mut o = Outcome::default();
            o.fact("dim", q.u.dim());
            o.cert(q.cert.clone());
            let lie = &back.alg;
            o.cert(Certificate::new(
                "reverified",
                vec![
                    jacobi_antisym(lie),
                    renamed(is_invariant_form(back.form("B")?, lie), "b_invariant"),
                    is_derivation(lie, back.endo("D")?),
                    is_two_cocycle(back.form("omega")?, lie),
                    is_flat(back.form("metric")?, lie)?,
                ],
            ));
            o.structure = Some(out);
            Ok(o)
        }
        Build::Flatdouble { file, form: f } => {
            let s = inputs.structure(file)?;
            let (_, d) = gated!(flat_double(&s.alg, &form(&s, f)?));
            let out = Structure::new(d.bracket.clone())
                .with_form("metric", d.metric.clone())
                .with_endo("K", d.k.clone());
            let back = round_trip(&out)?;
            let mut o = Outcome::default();
            o.cert(verify_para_kahler(&back.alg, back.form("metric")?, back.endo("K")?)?);
            o.structure = Some(out);
            Ok(o)
        }
        Build::Cybe { file, tensor, form: f } => {
            let s = inputs.structure(file)?;
            let b = s.tensor(tensor)?.clone();
            let r = form(&s, f)?.gram().clone();
            let d = gated!(cybe_double(&s.alg, &b, &r));
            let out = Structure::new(d.bracket.clone()).with_form("metric", d.metric.clone()).with_endo("K", d.k.clone());
            let back = round_trip(&out)?;
            let mut o = Outcome::default();
            o.cert(verify_para_kahler(&back.alg, back.form("metric")?, back.endo("K")?)?);
            o.structure = Some(out);
            Ok(o)
        }
    }
}

/// The canonical structure of `id` with the basis change stored as `P`,
/// after checking that `P` really carries the input onto it.
fn normal_form(id: &CanonicalId, alg: &Algebra, target: Structure) -> Result<(Structure, Report), Failure> {
    let out = target.with_endo("P", id.change_of_basis.clone());
    let back = round_trip(&out)?;
    let ok = alg.transport(back.endo("P")?)?.constants() == back.alg.constants();
    Ok((out, Report::from_bool("change_of_basis", "P^-1 (P u . P v) = canonical product", ok)))
}

pub fn normalize(inputs: &Inputs, n: &Normalize) -> Result<Outcome, Failure> {
    let mut o = Outcome::default();
    match n {
        Normalize::Dim2 { file, form: f } => {
            let s = inputs.structure(file)?;
            let omega = form(&s, f)?;
            match gated!(normalize_dim2_slsa(&s.alg, &omega)) {
                Dim2Verdict::Trivial => o.fact("verdict", "trivial product"),
                Dim2Verdict::Canonical { id, fingerprint } => {
                    o.fact("family", id.family);
                    o.fact("params", fmt_params(&id.params));
                    o.fact("P", fmt_mat(&id.change_of_basis));
                    o.fact(
                        "fingerprint",
                        format!(
                            "dim U.U = {}, dim D(U.U) = {}, dim S(U.U) = {}, commutative = {}",
                            fingerprint.dim_uu, fingerprint.dim_duu, fingerprint.dim_suu, fingerprint.commutative
                        ),
                    );
                    let target = canonical(id.family, &id.params)?.structure;
                    let (out, r) = normal_form(&id, &s.alg, target)?;
                    let w = omega.transport(&id.change_of_basis)? == *out.form("omega")?;
                    o.cert(Certificate::new(
                        "normal_form",
                        vec![r, Report::from_bool("form", "P^t w P = e1* ^ e2*", w)],
                    ));
                    o.structure = Some(out);
                }
            }
        }
        Normalize::Assoc { file, form: f } => {
            let s = inputs.structure(file)?;
            let omega = form(&s, f)?;
            let norm = gated!(normalize_assoc_symp(&s.alg, &omega));
            o.fact("family", norm.id.family);
            o.fact("dims", fmt_params(&norm.id.params));
            o.cert(norm.chain.clone());
            let (alg, w) = norm.model.build()?;
            let target = Structure::new(alg).with_form("omega", w);
            let (out, r) = normal_form(&norm.id, &s.alg, target)?;
            let wr = omega.transport(&norm.id.change_of_basis)? == *out.form("omega")?;
            o.cert(Certificate::new("normal_form", vec![r, Report::from_bool("form", "P^t w P = model form", wr)]));
            o.structure = Some(out);
        }
    }
    Ok(o)
}

pub fn classify(inputs: &Inputs, c: &Classify) -> Result<Outcome, Failure> {
    let Classify::Compat2 { file, circ, form: f } = c;
    let s = inputs.structure(file)?;
    let circ = second_product(inputs, &s, circ)?;
    let omega = form(&s, f)?;
    let mut o = Outcome::default();
    match gated!(classify_compatible_dim2(&s.alg, &circ, &omega)) {
        CompatVerdict::TriviallyCompatible => o.fact("verdict", "trivially compatible"),
        CompatVerdict::Incompatible(r) => {
            o.fact("verdict", "incompatible");
            o.cert(Certificate::new("compatibility", vec![r]));
        }
        CompatVerdict::Family { id, swapped } => {
            o.fact("verdict", "compatible");
            o.fact("family", id.family);
            o.fact("params", fmt_params(&id.params));
            o.fact("swapped", swapped);
            let target = canonical(id.family, &id.params)?;
            let (star, other) = if swapped { (&circ, &s.alg) } else { (&s.alg, &circ) };
            let (out, r) = normal_form(&id, star, target.structure.clone())?;
            let canon_circ = target.circ.as_ref().expect("pair family");
            let r2 = Report::from_bool(
                "change_of_basis_circ",
                "P^-1 (P u o P v) = canonical second product",
                other.transport(&id.change_of_basis)?.constants() == canon_circ.constants(),
            );
            o.cert(Certificate::new("normal_form", vec![r, r2]));
            o.structure = Some(out);
        }
    }
    Ok(o)
}

pub fn catalog(c: &Catalog, params: &Params, seed: u64) -> Result<Outcome, Failure> {
    let mut o = Outcome::default();
    match c {
        Catalog::List => {
            for f in Family::ALL {
                let file: lsa_forge::io::AlgebraFile = serde_json::from_str(f.source()).expect("shipped family file");
                o.fact(f.name(), format!("dim {}, params {}", file.dim, f.params().join(", ")));
            }
        }
        Catalog::Emit { family } => {
            let f = Family::from_name(family)?;
            let params = if params.is_empty() { random_params(&mut rng(seed), f) } else { params.clone() };
            o.fact("params", fmt_params(&params));
            let inst = canonical(f, &params)?;
            o.cert(family_certificate(f, &inst)?);
            let back = round_trip(&inst.structure)?;
            o.cert(Certificate::new(
                "reverified",
                vec![Report::from_bool("round_trip", "parse(print(s)) = s", back == inst.structure)],
            ));
            o.structure = Some(inst.structure);
        }
    }
    Ok(o)
}

pub fn lts(inputs: &Inputs, l: &Lts) -> Result<Outcome, Failure> {
    let Lts::Verify { file, from, endo: e, tensor } = l;
    let s = inputs.structure(file)?;
    let triple = match from {
        LtsSource::Yb => lts_yb(&endo(&s, e)?, &s.alg)?,
        LtsSource::O => lts_o(&endo(&s, e)?, &s.alg)?,
        LtsSource::Twist => {
            let r = s.tensor(tensor)?;
            let c = classify_r(&s.alg, r)?;
            if !c.quasi_s {
                let mut o = Outcome::default();
                o.cert(Certificate::new("r", vec![c.skew_l_invariant, c.q_invariant]));
                return Ok(o);
            }
            gated!(twisted_structures(&s.alg, r)).lts
        }
    };
    let mut o = Outcome::default();
    o.fact("zero", triple.is_zero());
    o.cert(verify_lts(&triple));
    Ok(o)
}
