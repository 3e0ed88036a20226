//! Symplectic quadratic algebras `T + T*` over a truncated tensor product
//! `T = L (x) <e_1, ..., e_n>`.

use num::Zero;

use crate::algebra::{doubled_labels, is_derivation, jacobi_antisym, Algebra};
use crate::error::{Error, Result};
use crate::exact::Mat;
use crate::forms::{is_flat, is_invariant_form, is_two_cocycle, Bilinear};
use crate::operators::truncated_tensor;
use crate::phase::block_diag;
use crate::report::{Certificate, Report};

#[derive(Clone, Debug)]
pub struct QuadraticSymplectic {
    /// `T (+) T*` with the coadjoint action; the first half of the basis is
    /// `T` in the order of the truncated tensor product.
    pub u: Algebra,
    /// `B(t + f, s + h) = f(s) + h(t)`.
    pub b: Bilinear,
    /// `D(t + f) = delta(t) - f o delta`.
    pub d: Mat,
    /// `w(x, y) = B(Dx, y)`.
    pub omega: Bilinear,
    /// `<x, y> = B(Dx, Dy)`.
    pub metric: Bilinear,
    pub cert: Certificate,
}

/// `g (+) g*` with `[x, f] = ad*_x f` and `[f, h] = 0`.
fn coadjoint_extension(g: &Algebra) -> Algebra {
    let m = g.dim();
    let mut entries = Vec::new();
    for p in 0..m {
        for r in 0..m {
            for (q, c) in g.prod(p, r).iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                entries.push((p, r, q, c.clone()));
                // (ad*_{t_p} t*_q)(t_r) = -t*_q([t_p, t_r])
                entries.push((p, m + q, m + r, -c.clone()));
                entries.push((m + q, p, m + r, c.clone()));
            }
        }
    }
    Algebra::from_entries(2 * m, &entries).with_labels(doubled_labels(g.labels())).expect("label count")
}

pub fn build_quadratic_symplectic(l: &Algebra, n: usize) -> Result<QuadraticSymplectic> {
    let jac = jacobi_antisym(l);
    if !jac.passed {
        return Err(Error::precondition(&jac));
    }
    if n == 0 {
        return Err(Error::Input("truncation order must be at least 1".into()));
    }
    let (t, delta) = truncated_tensor(l, n);
    let m = t.dim();
    let u = coadjoint_extension(&t);
    let mut pairing = Mat::zeros(2 * m, 2 * m);
    pairing.set_block(0, m, &Mat::identity(m));
    pairing.set_block(m, 0, &Mat::identity(m));
    let b = Bilinear::symmetric(pairing)?;
    let d = block_diag(&delta, &delta.transpose().neg());
    let omega = Bilinear::skew(d.transpose().mul(b.gram()))?;
    let metric = Bilinear::symmetric(d.transpose().mul(b.gram()).mul(&d))?;

    let mut checks = vec![jacobi_antisym(&u)];
    let mut inv = is_invariant_form(&b, &u);
    inv.name = "b_invariant".into();
    checks.push(inv);
    checks.push(Report::from_bool("b_nondegenerate", "det B != 0", b.is_nondegenerate()));
    checks.push(is_derivation(&u, &d));
    checks.push(Report::from_bool("d_invertible", "det D != 0", d.is_invertible()));
    checks.push(Report::from_bool("omega_nondegenerate", "det w != 0", omega.is_nondegenerate()));
    checks.push(is_two_cocycle(&omega, &u));
    checks.push(is_flat(&metric, &u)?);
    let cert = Certificate::new("quadratic_symplectic", checks);
    Ok(QuadraticSymplectic { u, b, d, omega, metric, cert })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn nonabelian_order_two() {
        let l = Algebra::from_entries(2, &[(0, 1, 1, int(1)), (1, 0, 1, int(-1))]);
        let q = build_quadratic_symplectic(&l, 2).unwrap();
        assert_eq!(q.u.dim(), 8);
        assert!(q.cert.passed, "{}", q.cert);
        // D is multiplication by i on L (x) e_i.
        for a in 0..2 {
            for i in 1..=2 {
                let k = a * 2 + (i - 1);
                assert_eq!(q.d[(k, k)], int(i as i64));
            }
        }
    }

    #[test]
    fn abelian_order_one() {
        let q = build_quadratic_symplectic(&Algebra::zero(3), 1).unwrap();
        assert!(q.u.is_zero());
        assert!(q.cert.passed);
    }
}
