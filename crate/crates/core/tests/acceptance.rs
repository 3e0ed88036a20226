//! Acceptance suite: one PASS/FAIL line per criterion, all checks exact.
//!
//! The process exits nonzero when a criterion fails for a reason other than
//! the one documented red sub-check (4 iv), so `cargo test` stays a gate.

use lsa_forge::algebra::{left_symmetric, lie_admissible, lie_admissible_bianchi, associative, jacobi_antisym, Algebra};
use lsa_forge::catalog::random::{random_invertible, random_mat, random_type_one, random_type_two, random_type_two_shape, rng, scramble, Rng64};
use lsa_forge::catalog::{build_quadratic_symplectic, canonical, normalize_assoc_symp, omega12, params, Family};
use lsa_forge::doubling::{build_hyper, compat_curvature, is_compatible, pencil, tu_product};
use lsa_forge::exact::mat::unit;
use lsa_forge::exact::{frac, int, Mat, Scalar};
use lsa_forge::forms::{is_invariant_form, levi_civita, Bilinear};
use lsa_forge::lts::verify_lts;
use lsa_forge::operators::{build_theorem_symp, build_theorem_theta, delta_op, lts_o, lts_yb, o_op, oeq_check, theorem_symp_structures, yb};
use lsa_forge::phase::{cocycle_check, is_lie_extendible, phase_product, verify_para_kahler};
use lsa_forge::smatrix::{
    bai_bracket, classify_r, delta_r, dual_product_from_r, flat_double, invariant_double, twisted_structures,
    verify_xi_iso, Tensor2,
};
use lsa_forge::Result;

struct Verdict {
    pass: bool,
    detail: String,
    /// Lines printed under the verdict.
    notes: Vec<String>,
    /// Only documented red checks failed.
    known_red: bool,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Verdict { pass, detail: detail.into(), notes: Vec::new(), known_red: false }
    }
}

fn named(family: Family, kv: &[(&str, i64)]) -> Algebra {
    let ps: Vec<(&str, Scalar)> = kv.iter().map(|(k, v)| (*k, int(*v))).collect();
    canonical(family, &params(&ps)).expect("catalog instance").alg
}

/// Every left-symmetric product in the catalog, with a label, up to `max_dim`.
fn catalog_lsas(max_dim: usize) -> Vec<(String, Algebra)> {
    let mut out = vec![
        ("dim2_abelian(a=1)".to_string(), named(Family::Dim2Abelian, &[("a", 1)])),
        ("dim2_abelian(a=-2)".to_string(), named(Family::Dim2Abelian, &[("a", -2)])),
        ("dim2_nonabelian(a=1)".to_string(), named(Family::Dim2Nonabelian, &[("a", 1)])),
        ("dim2_nonabelian(a=2)".to_string(), named(Family::Dim2Nonabelian, &[("a", 2)])),
    ];
    for (f, kv) in [
        (Family::CompatFamily1, vec![("a", int(1)), ("b", int(1))]),
        (Family::CompatFamily2, vec![("a", int(1)), ("b", int(1)), ("c", int(2))]),
    ] {
        let c = canonical(f, &params(&kv)).expect("pair");
        out.push((format!("{f}.star"), c.alg));
        out.push((format!("{f}.circ"), c.circ.expect("pair")));
    }
    out.push(("assoc_type_one(m=1,n=2)".into(), named(Family::AssocTypeOne, &[("m", 1), ("n", 2)])));
    out.push(("assoc_type_two(p=1)".into(), named(Family::AssocTypeTwo, &[("p", 1)])));
    out.retain(|(_, a)| a.dim() <= max_dim);
    out
}

fn aff() -> Algebra {
    Algebra::from_entries(2, &[(0, 1, 1, int(1)), (1, 0, 1, int(-1))])
}

fn ac1() -> Result<Verdict> {
    let w = omega12();
    let mut checked = 0;
    for a in [int(1), int(-1), int(2), frac(1, 2)] {
        for f in [Family::Dim2Abelian, Family::Dim2Nonabelian] {
            let c = canonical(f, &params(&[("a", a.clone())]))?;
            if c.omega != w || !left_symmetric(&c.alg).passed || !is_invariant_form(&w, &c.alg).passed {
                return Ok(Verdict::new(false, format!("{f} at a = {a}")));
            }
            if f == Family::Dim2Nonabelian {
                let br = c.alg.commutator();
                let two_a = &a * int(2);
                if br.prod(0, 1) != [two_a.clone(), int(0)] || br.prod(1, 0) != [-two_a, int(0)] {
                    return Ok(Verdict::new(false, format!("[e1,e2] != 2a e1 at a = {a}")));
                }
            }
            checked += 1;
        }
    }
    Ok(Verdict::new(true, format!("{checked} instances")))
}

fn ac2(r: &mut Rng64) -> Result<Verdict> {
    let lsas = catalog_lsas(4);
    for (name, u) in &lsas {
        for t in 0..25 {
            let rr = Tensor2::new(random_mat(r, u.dim(), u.dim()));
            if bai_bracket(u, &rr) != delta_r(u, &rr) {
                return Ok(Verdict::new(false, format!("{name}, draw {t}")));
            }
        }
    }
    Ok(Verdict::new(true, format!("{} LSAs x 25 tensors", lsas.len())))
}

/// Flat metrics: the identity on an abelian plane, flat metrics on the
/// affine plane found by a seeded search, and the quadratic-builder metric.
fn flat_metrics(r: &mut Rng64) -> Result<Vec<(String, Algebra, Bilinear)>> {
    let mut out = vec![("abelian(2), identity".to_string(), Algebra::zero(2), Bilinear::symmetric(Mat::identity(2))?)];
    let g = aff();
    let mut found = 0;
    while found < 2 {
        let m = random_mat(r, 2, 2);
        let Ok(met) = Bilinear::symmetric(m.add(&m.transpose())) else { continue };
        if !met.is_nondegenerate() || !left_symmetric(&levi_civita(&met, &g)?).passed {
            continue;
        }
        out.push((format!("aff(2), metric {:?}", met.gram()), g.clone(), met));
        found += 1;
    }
    let q = build_quadratic_symplectic(&aff(), 2)?;
    out.push(("quadratic(aff, n=2)".into(), q.u, q.metric));
    Ok(out)
}

fn ac3(r: &mut Rng64) -> Result<Verdict> {
    let metrics = flat_metrics(r)?;
    for (name, lie, met) in &metrics {
        let (lc, fd) = flat_double(lie, met)?;
        let t = twisted_structures(&lc, &fd.r)?;
        let iso = verify_xi_iso(&t);
        if !iso.passed {
            return Ok(Verdict::new(false, format!("{name}: {iso}")));
        }
    }
    Ok(Verdict::new(true, format!("{} flat-metric instances", metrics.len())))
}

fn ac4(r: &mut Rng64) -> Result<Verdict> {
    let mut notes = Vec::new();
    let mut ok = [true; 4];

    // (i) the |> double of every catalog LSA
    let lsas = catalog_lsas(6);
    for (name, u) in &lsas {
        let fd = invariant_double(u, &Tensor2::new(Mat::zeros(u.dim(), u.dim())))?;
        let cert = verify_para_kahler(&fd.bracket, &fd.metric, &fd.k)?;
        if !cert.passed {
            ok[0] = false;
            notes.push(format!("(i) {name}: {cert}"));
        }
    }
    notes.push(format!("(i) {} |> doubles", lsas.len()));

    // (ii) twisted structures of every quasi S-matrix found
    let (mut tried, mut quasi) = (0, 0);
    for (name, u) in catalog_lsas(4) {
        for _ in 0..40 {
            let rr = Tensor2::new(random_mat(r, u.dim(), u.dim()));
            tried += 1;
            if !classify_r(&u, &rr)?.quasi_s {
                continue;
            }
            quasi += 1;
            let t = twisted_structures(&u, &rr)?;
            let cert = verify_para_kahler(&t.bracket_twisted, &t.metric, &t.k)?;
            if !cert.passed {
                ok[1] = false;
                notes.push(format!("(ii) {name}: {cert}"));
            }
        }
    }
    if quasi == 0 {
        ok[1] = false;
    }
    notes.push(format!("(ii) {quasi} quasi S-matrices among {tried} draws"));

    // (iii) flat double of the quadratic builder
    let q = build_quadratic_symplectic(&aff(), 2)?;
    let (_, fd) = flat_double(&q.u, &q.metric)?;
    let cert = verify_para_kahler(&fd.bracket, &fd.metric, &fd.k)?;
    ok[2] = cert.passed && fd.bracket.dim() == 16 && q.cert.passed;
    notes.push(format!("(iii) quadratic builder double, dim {}: {}", fd.bracket.dim(), if ok[2] { "pass" } else { "fail" }));

    // (iv) build_theorem_symp with A = lambda Id on the affine plane
    for lam in [int(1), frac(1, 2)] {
        let a = Mat::identity(2).scale(&lam);
        match build_theorem_symp(&aff(), &omega12(), &a) {
            Ok(d) if d.cert.passed => notes.push(format!("(iv) lambda = {lam}: pass")),
            other => {
                ok[3] = false;
                if let Err(e) = other {
                    notes.push(format!("(iv) lambda = {lam}: rejected ({e})"));
                }
                let d = theorem_symp_structures(&aff(), &omega12(), &a)?;
                let failing: Vec<String> = d.cert.failures().map(|c| c.name.clone()).collect();
                let pk = verify_para_kahler(&d.bracket, &d.metric, &d.k)?;
                let pk_fail: Vec<String> = pk.failures().map(|c| c.name.clone()).collect();
                notes.push(format!(
                    "(iv) lambda = {lam}: built anyway, failing checks {failing:?}, para-Kaehler failures {pk_fail:?}"
                ));
            }
        }
    }
    let pass = ok.iter().all(|&b| b);
    let mut v = Verdict::new(pass, format!("(i) {} (ii) {} (iii) {} (iv) {}", ok[0], ok[1], ok[2], ok[3]));
    v.known_red = !pass && ok[..3].iter().all(|&b| b);
    if v.known_red {
        notes.push("(iv) lambda Id is not a valid input on the 2-dim symplectic Lie algebra; see README".into());
    }
    v.notes = notes;
    Ok(v)
}

fn e2e2(f: Family, kv: &[(&str, i64)]) -> Result<(Algebra, Algebra, Mat)> {
    let ps: Vec<(&str, Scalar)> = kv.iter().map(|(k, v)| (*k, int(*v))).collect();
    let c = canonical(f, &params(&ps))?;
    let circ = c.circ.expect("pair");
    let k = compat_curvature(&c.alg, &circ, &unit(2, 1), &unit(2, 1))?;
    Ok((c.alg, circ, k))
}

fn ac5() -> Result<Verdict> {
    let w = omega12();
    let nab = named(Family::Dim2Nonabelian, &[("a", 1)]);
    let h = build_hyper(&nab, &nab, &w)?;
    if !h.cert.passed || h.lie.dim() != 4 {
        return Ok(Verdict::new(false, format!("self double: {}", h.cert)));
    }
    // K(e2, e2) = -2 (0, ab; 0, 0) and +2 (0, ab + bc; 0, 0)
    let cases = [
        (Family::CompatFamily1, vec![("a", 1), ("b", 1)], Mat::from_i64(&[&[0, -2], &[0, 0]])),
        (Family::CompatFamily2, vec![("a", 1), ("b", 1), ("c", 2)], Mat::from_i64(&[&[0, 6], &[0, 0]])),
    ];
    for (f, kv, expected) in cases {
        let (star, circ, k) = e2e2(f, &kv)?;
        if k != expected {
            return Ok(Verdict::new(false, format!("{f}: K(e2,e2) = {k:?}")));
        }
        let h = build_hyper(&star, &circ, &w)?;
        if !h.cert.passed {
            return Ok(Verdict::new(false, format!("{f}: {}", h.cert)));
        }
    }
    Ok(Verdict::new(true, "self double (dim 4) and both compatible families"))
}

fn ac6() -> Result<Verdict> {
    let c = canonical(Family::CompatFamily1, &params(&[("a", int(1)), ("b", int(1))]))?;
    let circ = c.circ.expect("pair");
    let pairs = [(int(1), int(1)), (int(2), int(-1)), (frac(1, 2), int(3)), (int(-3), frac(2, 3)), (frac(-5, 7), frac(1, 4))];
    for (a, b) in &pairs {
        let p = pencil(&c.alg, &circ, a, b)?;
        if !p.passed || !left_symmetric(&c.alg.combine(a, &circ, b)).passed {
            return Ok(Verdict::new(false, p.to_string()));
        }
    }
    Ok(Verdict::new(true, format!("{} pairs", pairs.len())))
}

fn ac7(r: &mut Rng64) -> Result<Verdict> {
    let lsas = catalog_lsas(6);
    for (name, u) in &lsas {
        let n = u.dim();
        for _ in 0..20 {
            let a = random_mat(r, n, n);
            let rep = oeq_check(&a, u);
            if !rep.passed {
                return Ok(Verdict::new(false, format!("{name}: {rep}")));
            }
        }
        let id = Mat::identity(n);
        let br = u.commutator();
        if yb(&id, &br).constants() != br.constants() || !delta_op(&id, u).is_zero() || !o_op(&id, u).is_zero() {
            return Ok(Verdict::new(false, format!("{name}: identity operator")));
        }
    }
    Ok(Verdict::new(true, format!("{} algebras x 20 operators", lsas.len())))
}

fn ac8(r: &mut Rng64) -> Result<Verdict> {
    let mut notes = Vec::new();
    // The triple system of a quasi S-matrix with Delta(r) != 0.
    let mut twist_triple = None;
    'search: for (name, u) in catalog_lsas(4) {
        for _ in 0..60 {
            let rr = Tensor2::new(random_mat(r, u.dim(), u.dim()));
            let cl = classify_r(&u, &rr)?;
            if cl.quasi_s && !cl.delta_zero.passed {
                twist_triple = Some((name, twisted_structures(&u, &rr)?.lts));
                break 'search;
            }
        }
    }
    let Some((name, lts)) = twist_triple else {
        return Ok(Verdict::new(false, "no quasi S-matrix with Delta(r) != 0 found"));
    };
    let c = verify_lts(&lts);
    if !c.passed || lts.is_zero() {
        return Ok(Verdict::new(false, format!("twisted triple on {name}: {c}")));
    }
    notes.push(format!("quasi S-matrix on {name}"));

    for lam in [int(1), frac(1, 2), int(2)] {
        let l = lts_yb(&Mat::identity(2).scale(&lam), &aff())?;
        let c = verify_lts(&l);
        if !c.passed {
            return Ok(Verdict::new(false, format!("YB at lambda = {lam}: {c}")));
        }
    }

    let mut certified = None;
    'theta: for (name, u) in catalog_lsas(2) {
        for _ in 0..200 {
            let a = random_mat(r, 2, 2);
            if let Ok(t) = build_theorem_theta(&u, &omega12(), &a) {
                if t.cert.passed && !o_op(&a, &u).is_zero() {
                    certified = Some((name, u, a));
                    break 'theta;
                }
            }
        }
    }
    let Some((name, u, a)) = certified else {
        return Ok(Verdict::new(false, "no certified operator instance with O(A) != 0"));
    };
    let c = verify_lts(&lts_o(&a, &u)?);
    if !c.passed {
        return Ok(Verdict::new(false, format!("O(A) triple on {name}: {c}")));
    }
    notes.push(format!("O(A) triple on {name}, A = {a:?}"));
    let mut v = Verdict::new(true, "twisted triple, YB(lambda Id), O(A)");
    v.notes = notes;
    Ok(v)
}

fn ac9(r: &mut Rng64) -> Result<Verdict> {
    let mut notes = Vec::new();
    let mut count = [0usize; 3];
    let one_dims = [(1, 0), (1, 2), (2, 0), (2, 2), (3, 0)];
    for k in 0..50 {
        let (v, i) = one_dims[k % one_dims.len()];
        let t = random_type_one(r, v, i)?;
        let (a, w) = t.build()?;
        let (sa, sw, _) = scramble(r, &a, &w)?;
        let nf = normalize_assoc_symp(&sa, &sw)?;
        if nf.id.family != Family::AssocTypeOne
            || nf.id.param("dim_v") != &int(v as i64)
            || nf.id.param("dim_i") != &int(i as i64)
            || !nf.chain.passed
        {
            return Ok(Verdict::new(false, format!("type one ({v}, {i}) -> {:?}", nf.id.params)));
        }
        count[0] += 1;
    }
    let two_dims = [(1, 1, 2, 0), (1, 1, 2, 0), (1, 2, 2, 0), (1, 1, 2, 2)];
    for k in 0..50 {
        let (v0, v1, i0, i1) = two_dims[k % two_dims.len()];
        let t = random_type_two(r, v0, v1, i0, i1)?;
        let (a, w) = t.build()?;
        let (sa, sw, _) = scramble(r, &a, &w)?;
        let nf = normalize_assoc_symp(&sa, &sw)?;
        let dims = ["dim_v0", "dim_v1", "dim_i0", "dim_i1"].map(|d| nf.id.params.get(d).cloned());
        let expected = [v0, v1, i0, i1].map(|d| Some(int(d as i64)));
        if nf.id.family != Family::AssocTypeTwo || dims != expected || !nf.chain.passed {
            return Ok(Verdict::new(false, format!("type two {:?} -> {:?}", (v0, v1, i0, i1), nf.id.params)));
        }
        count[1] += 1;
    }
    // Dimension 4: type-one shapes and solutions of the type-two equations
    // in dimension 4 all come out as type one.
    let mut k = 0;
    while count[2] < 30 {
        k += 1;
        let candidate = match k % 4 {
            0 => Some(random_type_one(r, 2, 0)?.build()?),
            1 => Some(random_type_one(r, 1, 2)?.build()?),
            2 => random_type_two_shape(r, 1, 0, 2, 0)?.map(|t| t.build()).transpose()?,
            _ => random_type_two_shape(r, 1, 1, 0, 0)?.map(|t| t.build()).transpose()?,
        };
        let Some((a, w)) = candidate else { continue };
        if a.is_zero() || !associative(&a).passed {
            continue;
        }
        let p = random_invertible(r, 4);
        let nf = normalize_assoc_symp(&a.transport(&p)?, &w.transport(&p)?)?;
        let shape_ok = nf.id.family == Family::AssocTypeOne
            && matches!(
                (nf.id.param("dim_v").to_string().as_str(), nf.id.param("dim_i").to_string().as_str()),
                ("2", "0") | ("1", "2")
            );
        if !shape_ok || !nf.chain.passed {
            return Ok(Verdict::new(false, format!("dim 4 -> {} {:?}", nf.id.family, nf.id.params)));
        }
        count[2] += 1;
    }
    notes.push("U^4 = 0, J^2 = 0, J co-isotropic ideal checked on every instance".into());
    let mut v = Verdict::new(true, format!("{} type one, {} type two, {} dim-4", count[0], count[1], count[2]));
    v.notes = notes;
    Ok(v)
}

/// Random products with small integer constants.
fn random_algebra(r: &mut Rng64, n: usize) -> Algebra {
    let m = random_mat(r, n * n, n);
    Algebra::from_fn(n, |i, j| m.row(i * n + j).to_vec())
}

fn ac10(r: &mut Rng64) -> Result<Verdict> {
    let mut algs: Vec<Algebra> = catalog_lsas(6).into_iter().map(|(_, a)| a).collect();
    for n in [2, 3, 3, 4] {
        for _ in 0..10 {
            algs.push(random_algebra(r, n));
        }
    }
    algs.push(aff().combine(&int(1), &named(Family::Dim2Abelian, &[("a", 1)]), &int(1)));
    for (k, a) in algs.iter().enumerate() {
        if lie_admissible_bianchi(a).passed != jacobi_antisym(&a.commutator()).passed {
            return Ok(Verdict::new(false, format!("Bianchi vs Jacobi on algebra {k}")));
        }
    }
    // Extendibility is compared on pairs of left-symmetric products only:
    // catalog products paired with each other, and random duals from `r`
    // that happen to be left symmetric.
    let (mut ext_agree, mut ext_yes) = (0, 0);
    let cat = catalog_lsas(4);
    let mut pairs_uv: Vec<(String, Algebra, Algebra)> = Vec::new();
    for (nu, u) in &cat {
        pairs_uv.push((format!("{nu} + 0"), u.clone(), Algebra::zero(u.dim())));
        for (nv, v) in cat.iter().filter(|(_, v)| v.dim() == u.dim()) {
            for s in [int(1), int(-1), int(2)] {
                pairs_uv.push((format!("{nu} + {s} {nv}"), u.clone(), v.scale(&s)));
            }
        }
        for _ in 0..30 {
            let dual = dual_product_from_r(u, &Tensor2::new(random_mat(r, u.dim(), u.dim())));
            if left_symmetric(&dual).passed {
                pairs_uv.push((format!("{nu} + dual of r"), u.clone(), dual));
            }
        }
    }
    for (name, u, dual) in &pairs_uv {
        let e = is_lie_extendible(u, dual).passed;
        let c = cocycle_check(u, dual).passed;
        let l = lie_admissible(&phase_product(u, dual)?).passed;
        if e != c || e != l {
            return Ok(Verdict::new(false, format!("{name}: extendible {e}, cocycle {c}, admissible {l}")));
        }
        ext_agree += 1;
        ext_yes += e as usize;
    }
    let lsas: Vec<Algebra> = catalog_lsas(2).into_iter().map(|(_, a)| a).collect();
    let mut pairs = 0;
    for x in &lsas {
        for y in &lsas {
            for s in [int(1), int(-2)] {
                let y = y.scale(&s);
                let c = is_compatible(x, &y)?.passed;
                let t = lie_admissible(&tu_product(x, &y)?).passed;
                if c != t {
                    return Ok(Verdict::new(false, format!("compatible {c} vs tu admissible {t}")));
                }
                pairs += 1;
            }
        }
    }
    Ok(Verdict::new(
        true,
        format!("{} algebras, {ext_agree} product pairs ({ext_yes} extendible), {pairs} pairs", algs.len()),
    ))
}

fn main() {
    let mut r = rng(0);
    type Check = Box<dyn FnMut(&mut Rng64) -> Result<Verdict>>;
    let checks: Vec<(&str, &str, Check)> = vec![
        ("AC1", "catalog conformance", Box::new(|_| ac1())),
        ("AC2", "Delta / [[r,r]] equivalence", Box::new(ac2)),
        ("AC3", "xi isomorphism", Box::new(ac3)),
        ("AC4", "para-Kaehler certificates", Box::new(ac4)),
        ("AC5", "hyper-para-Kaehler certificates", Box::new(|_| ac5())),
        ("AC6", "compatibility pencil", Box::new(|_| ac6())),
        ("AC7", "operator identities", Box::new(ac7)),
        ("AC8", "Lie triple systems", Box::new(ac8)),
        ("AC9", "associative structure chain", Box::new(ac9)),
        ("AC10", "cross-verifier consistency", Box::new(ac10)),
    ];
    let mut unexpected = 0;
    for (id, title, mut f) in checks {
        let v = f(&mut r).unwrap_or_else(|e| Verdict::new(false, format!("error: {e}")));
        println!("{} {id} {title}: {}", if v.pass { "PASS" } else { "FAIL" }, v.detail);
        for n in &v.notes {
            println!("    {n}");
        }
        if !v.pass && !v.known_red {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
