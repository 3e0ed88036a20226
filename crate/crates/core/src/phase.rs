//! The phase space `Phi(U) = U + U*` of a left-symmetric algebra, its
//! extended product, and certificates for para-Kähler and
//! hyper-para-Kähler structures on Lie algebras.
//!
//! Basis order on `Phi(U)` is `(e_1, .., e_n, e_1*, .., e_n*)`. The dual
//! product on `U*` is itself stored as an `Algebra` on the dual basis.

use num::Zero;

use crate::algebra::{nijenhuis_vanishes, require_lie, Algebra};
use crate::error::{Error, Result};
use crate::exact::mat::{unit, vsub, vzero, Mat};
use crate::exact::{int, Scalar, Subspace};
use crate::forms::{is_two_cocycle, levi_civita, Bilinear, FormKind};
use crate::report::{Certificate, Report};

/// `(X+a).(Y+b) = X.Y - L_a^t Y - L_X^t b + a.b`.
pub fn phase_product(u: &Algebra, dual: &Algebra) -> Result<Algebra> {
    let n = u.dim();
    if dual.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: dual.dim() });
    }
    let a = Algebra::from_fn(2 * n, |p, q| {
        let mut v = vzero(2 * n);
        match (p < n, q < n) {
            (true, true) => v[..n].clone_from_slice(u.prod(p, q)),
            (true, false) => {
                for k in 0..n {
                    v[n + k] = -u.c(p, k, q - n).clone();
                }
            }
            (false, true) => {
                for k in 0..n {
                    v[k] = -dual.c(p - n, k, q).clone();
                }
            }
            (false, false) => v[n..].clone_from_slice(dual.prod(p - n, q - n)),
        }
        v
    });
    a.with_labels(crate::algebra::doubled_labels(u.labels()))
}

/// Extended product with zero dual product:
/// `(X+a) |> (Y+b) = X.Y - L_X^t b`.
pub fn triangle_product(u: &Algebra) -> Algebra {
    phase_product(u, &Algebra::zero(u.dim())).expect("matching dimensions")
}

/// `rho(X, a) = [L_X, L_a^t] + L_{L_a^t X} + (L_{L_X^t a})^t` on `U`.
pub fn rho(u: &Algebra, dual: &Algebra, x: &[Scalar], a: &[Scalar]) -> Mat {
    let lx = u.left(x);
    let la_t = dual.left(a).transpose();
    let t1 = lx.commutator(&la_t);
    let t2 = u.left(&la_t.apply(x));
    let t3 = dual.left(&lx.transpose().apply(a)).transpose();
    t1.add(&t2).add(&t3)
}

/// `rho*(a, X) = [L_a, L_X^t] + L_{L_X^t a} + (L_{L_a^t X})^t` on `U*`.
pub fn rho_star(u: &Algebra, dual: &Algebra, a: &[Scalar], x: &[Scalar]) -> Mat {
    let la = dual.left(a);
    let lx_t = u.left(x).transpose();
    let t1 = la.commutator(&lx_t);
    let t2 = dual.left(&lx_t.apply(a));
    let t3 = u.left(&la.transpose().apply(x)).transpose();
    t1.add(&t2).add(&t3)
}

const EXTENDIBLE: &str = "rho(X,a)Y = rho(Y,a)X and rho*(a,X)b = rho*(b,X)a";

/// The pair is Lie-extendible. Witness `[side, x, y, a]` with side 0 for
/// the `rho` half and 1 for the `rho*` half.
pub fn is_lie_extendible(u: &Algebra, dual: &Algebra) -> Report {
    let n = u.dim();
    for a in 0..n {
        let ea = unit(n, a);
        let rs: Vec<Mat> = (0..n).map(|x| rho(u, dual, &unit(n, x), &ea)).collect();
        for x in 0..n {
            for y in x + 1..n {
                if rs[x].col(y) != rs[y].col(x) {
                    return Report::new("lie_extendible", EXTENDIBLE, Some(vec![0, x, y, a]));
                }
            }
        }
    }
    for x in 0..n {
        let ex = unit(n, x);
        let rs: Vec<Mat> = (0..n).map(|a| rho_star(u, dual, &unit(n, a), &ex)).collect();
        for a in 0..n {
            for b in a + 1..n {
                if rs[a].col(b) != rs[b].col(a) {
                    return Report::new("lie_extendible", EXTENDIBLE, Some(vec![1, a, b, x]));
                }
            }
        }
    }
    Report::pass("lie_extendible", EXTENDIBLE)
}

/// `rho` vanishes identically; equivalent to the extended product being
/// left symmetric.
pub fn rho_vanishes(u: &Algebra, dual: &Algebra) -> Report {
    const ID: &str = "rho(X,a) = 0";
    let n = u.dim();
    for x in 0..n {
        for a in 0..n {
            if !rho(u, dual, &unit(n, x), &unit(n, a)).is_zero() {
                return Report::new("rho_zero", ID, Some(vec![x, a]));
            }
        }
    }
    Report::pass("rho_zero", ID)
}

/// Order-2 tensor on covectors stored as `t[p][q] = T(e_p*, e_q*)`, acted
/// on by `(A (x) B) T (a, b) = T(A^t a, b) + T(a, B^t b)`.
fn act2(t: &Mat, a: &Mat, b: &Mat) -> Mat {
    a.mul(t).add(&t.mul(&b.transpose()))
}

/// `xi(X)(a, b) = <a.b, X>`.
fn xi(dual: &Algebra, x: &[Scalar]) -> Mat {
    let n = dual.dim();
    Mat::from_fn(n, n, |p, q| crate::exact::mat::dot(dual.prod(p, q), x))
}

/// Cocycle defect `Psi(X) xi(Y) - Psi(Y) xi(X) - xi([X,Y])` with
/// `Psi = L (x) ad` on `U (x) U`.
pub fn xi_defect(u: &Algebra, dual: &Algebra, x: &[Scalar], y: &[Scalar]) -> Mat {
    let (lx, ly) = (u.left(x), u.left(y));
    let (adx, ady) = (u.ad(x), u.ad(y));
    let br = vsub(&u.mul(x, y), &u.mul(y, x));
    act2(&xi(dual, y), &lx, &adx)
        .sub(&act2(&xi(dual, x), &ly, &ady))
        .sub(&xi(dual, &br))
}

/// Cocycle conditions for `xi : U -> U (x) U` and `mu : U* -> U* (x) U*`,
/// the duals of the two products. Equivalent to Lie-extendibility.
pub fn cocycle_check(u: &Algebra, dual: &Algebra) -> Report {
    const ID: &str = "Psi(X)xi(Y) - Psi(Y)xi(X) = xi([X,Y]) and the dual condition for mu";
    let n = u.dim();
    for x in 0..n {
        for y in x + 1..n {
            if !xi_defect(u, dual, &unit(n, x), &unit(n, y)).is_zero() {
                return Report::new("cocycle", ID, Some(vec![0, x, y]));
            }
        }
    }
    // mu is xi with the roles of U and U* exchanged.
    for a in 0..n {
        for b in a + 1..n {
            if !xi_defect(dual, u, &unit(n, a), &unit(n, b)).is_zero() {
                return Report::new("cocycle", ID, Some(vec![1, a, b]));
            }
        }
    }
    Report::pass("cocycle", ID)
}

/// `<u+a, v+b>_0 = a(v) + b(u)`
pub fn metric0(n: usize) -> Bilinear {
    let mut g = Mat::zeros(2 * n, 2 * n);
    g.set_block(0, n, &Mat::identity(n));
    g.set_block(n, 0, &Mat::identity(n));
    Bilinear::symmetric(g).expect("symmetric")
}

/// `Omega_0(u+a, v+b) = b(u) - a(v)`
pub fn omega0(n: usize) -> Bilinear {
    let mut g = Mat::zeros(2 * n, 2 * n);
    g.set_block(0, n, &Mat::identity(n));
    g.set_block(n, 0, &Mat::identity(n).neg());
    Bilinear::skew(g).expect("skew")
}

/// `K_0(u+a) = u - a`
pub fn k0(n: usize) -> Mat {
    let mut k = Mat::identity(2 * n);
    k.set_block(n, n, &Mat::identity(n).neg());
    k
}

/// Block-diagonal `diag(a, b)`.
pub fn block_diag(a: &Mat, b: &Mat) -> Mat {
    let mut m = Mat::zeros(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    m
}

fn eigenspace(k: &Mat, lambda: i64) -> Subspace {
    let m = k.sub(&Mat::identity(k.rows()).scale(&int(lambda)));
    Subspace::span(k.rows(), &m.kernel())
}

fn isotropic(form: &Mat, s: &Subspace) -> bool {
    s.basis().iter().all(|a| s.basis().iter().all(|b| crate::exact::mat::dot(a, &form.apply(b)).is_zero()))
}

fn subalgebra(alg: &Algebra, s: &Subspace) -> bool {
    s.basis().iter().all(|a| s.basis().iter().all(|b| s.contains(&alg.mul(a, b))))
}

/// `u . S` lies in `S` for every `u`.
fn left_ideal_like(alg: &Algebra, s: &Subspace) -> bool {
    let n = alg.dim();
    (0..n).all(|i| s.basis().iter().all(|b| s.contains(&alg.mul_basis_left(i, b))))
}

/// `E o L_u = L_u o E` for every left multiplication of `lc`.
fn parallel(lc: &Algebra, e: &Mat, name: &str, id: &str) -> Report {
    for i in 0..lc.dim() {
        let l = lc.left_basis(i);
        if l.mul(e) != e.mul(&l) {
            return Report::new(name, id, Some(vec![i]));
        }
    }
    Report::pass(name, id)
}

fn require_shape(m: &Mat, n: usize) -> Result<()> {
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, got: m.rows() });
    }
    Ok(())
}

/// Para-Kähler certificate for `(lie, metric, K)`: the four defining
/// conditions followed by their consequences.
pub fn verify_para_kahler(lie: &Algebra, metric: &Bilinear, k: &Mat) -> Result<Certificate> {
    let n = lie.dim();
    require_lie(lie)?;
    require_shape(k, n)?;
    if metric.kind() != FormKind::Symmetric || metric.dim() != n {
        return Err(Error::FormKind("metric must be symmetric of matching dimension".into()));
    }
    metric.require_nondegenerate("metric")?;
    let lc = levi_civita(metric, lie)?;
    let g = metric.gram();
    let kt = k.transpose();
    let plus = eigenspace(k, 1);
    let minus = eigenspace(k, -1);
    let mut checks = vec![
        Report::from_bool("K_squared", "K^2 = Id", k.mul(k).is_identity()),
        Report::from_bool(
            "K_balanced",
            "dim ker(K - Id) = dim ker(K + Id)",
            plus.dim() == minus.dim() && plus.dim() + minus.dim() == n,
        ),
        Report::from_bool("K_skew", "<Ku,v> + <u,Kv> = 0", kt.mul(g).add(&g.mul(k)).is_zero()),
        parallel(&lc, k, "K_parallel", "L_u o K = K o L_u for the Levi-Civita product"),
    ];
    let mut nk = nijenhuis_vanishes(lie, k);
    nk.name = "K_integrable".into();
    checks.push(nk);
    let omega_g = kt.mul(g);
    match Bilinear::skew(omega_g.clone()) {
        Ok(omega) => {
            checks.push(Report::from_bool(
                "Omega_nondegenerate",
                "Omega(u,v) = <Ku,v> is nondegenerate",
                omega.is_nondegenerate(),
            ));
            let mut c = is_two_cocycle(&omega, lie);
            c.name = "Omega_cocycle".into();
            checks.push(c);
        }
        Err(_) => checks.push(Report::fail("Omega_skew", "Omega(u,v) = <Ku,v> is skew", "not skew")),
    }
    for (sign, s) in [("+", &plus), ("-", &minus)] {
        checks.push(Report::from_bool(
            &format!("g{sign}_isotropic"),
            "eigenspaces of K are isotropic",
            isotropic(g, s),
        ));
        checks.push(Report::from_bool(
            &format!("g{sign}_lagrangian"),
            "eigenspaces of K are Lagrangian for Omega",
            isotropic(&omega_g, s) && 2 * s.dim() == n,
        ));
        checks.push(Report::from_bool(
            &format!("g{sign}_subalgebra"),
            "eigenspaces of K are subalgebras",
            subalgebra(lie, s),
        ));
        checks.push(Report::from_bool(
            &format!("g{sign}_parallel"),
            "u.g^{+-1} lies in g^{+-1} for the Levi-Civita product",
            left_ideal_like(&lc, s),
        ));
    }
    Ok(Certificate::new("para_kahler", checks))
}

/// Complex product structure `(K, J)`: `K^2 = Id`, `J^2 = -Id`,
/// `JK = -KJ`, both integrable, balanced eigenspaces of `K`.
pub fn verify_complex_product(lie: &Algebra, k: &Mat, j: &Mat) -> Result<Certificate> {
    let n = lie.dim();
    require_lie(lie)?;
    require_shape(k, n)?;
    require_shape(j, n)?;
    let plus = eigenspace(k, 1);
    let minus = eigenspace(k, -1);
    let mut nk = nijenhuis_vanishes(lie, k);
    nk.name = "K_integrable".into();
    let mut nj = nijenhuis_vanishes(lie, j);
    nj.name = "J_integrable".into();
    let checks = vec![
        Report::from_bool("K_squared", "K^2 = Id", k.mul(k).is_identity()),
        Report::from_bool("J_squared", "J^2 = -Id", j.mul(j).neg().is_identity()),
        Report::from_bool("JK_anticommute", "JK = -KJ", j.mul(k).add(&k.mul(j)).is_zero()),
        Report::from_bool(
            "K_balanced",
            "dim ker(K - Id) = dim ker(K + Id)",
            plus.dim() == minus.dim() && plus.dim() + minus.dim() == n,
        ),
        nk,
        nj,
    ];
    Ok(Certificate::new("complex_product", checks))
}

/// Hyper-para-Kähler certificate: para-Kähler for `(metric, K)`, complex
/// product `(K, J)`, and `J` skew and parallel.
pub fn verify_hyper(lie: &Algebra, metric: &Bilinear, k: &Mat, j: &Mat) -> Result<Certificate> {
    let pk = verify_para_kahler(lie, metric, k)?;
    let cp = verify_complex_product(lie, k, j)?;
    let g = metric.gram();
    let lc = levi_civita(metric, lie)?;
    let extra = Certificate::new(
        "J",
        vec![
            Report::from_bool("J_skew", "<Ju,v> + <u,Jv> = 0", j.transpose().mul(g).add(&g.mul(j)).is_zero()),
            parallel(&lc, j, "J_parallel", "L_u o J = J o L_u for the Levi-Civita product"),
        ],
    );
    let mut c = Certificate::merge("hyper_para_kahler", &[&pk, &cp, &extra]);
    c.checks.dedup_by(|a, b| a.name == b.name);
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{left_symmetric, lie_admissible};
    use crate::exact::int;

    /// e2.e2 = e1 on Q^2.
    fn abelian_slsa() -> Algebra {
        Algebra::from_entries(2, &[(1, 1, 0, int(1))])
    }

    #[test]
    fn triangle_is_left_symmetric() {
        let u = abelian_slsa();
        let t = triangle_product(&u);
        assert!(left_symmetric(&t).passed);
        assert!(rho_vanishes(&u, &Algebra::zero(2)).passed);
        assert!(is_lie_extendible(&u, &Algebra::zero(2)).passed);
        assert!(cocycle_check(&u, &Algebra::zero(2)).passed);
    }

    #[test]
    fn block_forms() {
        let g = metric0(1);
        let u = vec![int(1), int(2)];
        let v = vec![int(3), int(5)];
        // a(v) + b(u) = 2*3 + 5*1
        assert_eq!(g.eval(&u, &v), int(11));
        // b(u) - a(v) = 5 - 6
        assert_eq!(omega0(1).eval(&u, &v), int(-1));
        assert_eq!(k0(1).apply(&u), vec![int(1), int(-2)]);
    }

    #[test]
    fn triangle_double_is_para_kahler() {
        let u = abelian_slsa();
        let lie = triangle_product(&u).commutator();
        let cert = verify_para_kahler(&lie, &metric0(2), &k0(2)).unwrap();
        assert!(cert.passed, "{cert}");
        assert!(lie_admissible(&triangle_product(&u)).passed);
    }
}
