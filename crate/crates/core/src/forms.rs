//! Bilinear forms on algebras: symplectic and metric structures, the
//! product induced by a symplectic 2-cocycle and the Levi-Civita product.

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{left_symmetric, require_lie, Algebra};
use crate::error::{Error, Result};
use crate::exact::mat::{dot, unit, Mat, Vector};
use crate::exact::{frac, Scalar};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Skew,
    Symmetric,
    None,
}

/// Gram matrix `G[i][j] = B(e_i, e_j)` with a declared symmetry type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bilinear {
    g: Mat,
    kind: FormKind,
}

impl Bilinear {
    pub fn new(g: Mat, kind: FormKind) -> Result<Self> {
        if !g.is_square() {
            return Err(Error::DimensionMismatch { expected: g.rows(), got: g.cols() });
        }
        let t = g.transpose();
        let ok = match kind {
            FormKind::Skew => t == g.neg(),
            FormKind::Symmetric => t == g,
            FormKind::None => true,
        };
        if !ok {
            return Err(Error::FormKind(format!("matrix is not {kind:?}").to_lowercase()));
        }
        Ok(Bilinear { g, kind })
    }

    pub fn skew(g: Mat) -> Result<Self> {
        Self::new(g, FormKind::Skew)
    }

    pub fn symmetric(g: Mat) -> Result<Self> {
        Self::new(g, FormKind::Symmetric)
    }

    pub fn gram(&self) -> &Mat {
        &self.g
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.g.rows()
    }

    pub fn eval(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        dot(u, &self.g.apply(v))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.g.is_invertible()
    }

    pub fn require_nondegenerate(&self, what: &'static str) -> Result<()> {
        if self.is_nondegenerate() {
            Ok(())
        } else {
            Err(Error::Degenerate(what))
        }
    }

    /// Matrix of `X -> B(X, .)` into the dual space.
    pub fn flat(&self) -> Mat {
        self.g.transpose()
    }

    /// Inverse of `flat`.
    pub fn sharp(&self) -> Result<Mat> {
        self.flat().inverse().ok_or(Error::Degenerate("bilinear form"))
    }

    /// Adjoint `A*` with `B(AX, Y) = B(X, A*Y)`.
    pub fn adjoint(&self, a: &Mat) -> Result<Mat> {
        let gi = self.g.inverse().ok_or(Error::Degenerate("bilinear form"))?;
        Ok(gi.mul(&a.transpose()).mul(&self.g))
    }

    /// The same form in the basis given by the columns of `p`: `p^T G p`.
    pub fn transport(&self, p: &Mat) -> Result<Bilinear> {
        if p.rows() != self.dim() || !p.is_square() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: p.rows() });
        }
        Bilinear::new(p.transpose().mul(&self.g).mul(p), self.kind)
    }

    /// `(A^s, A^a)` with `A^s` self-adjoint and `A^a` anti-self-adjoint.
    pub fn split(&self, a: &Mat) -> Result<(Mat, Mat)> {
        let adj = self.adjoint(a)?;
        let h = frac(1, 2);
        Ok((a.add(&adj).scale(&h), a.sub(&adj).scale(&h)))
    }
}

const COCYCLE: &str = "w([u,v],x) + w([v,x],u) + w([x,u],v) = 0";
const INVARIANT: &str = "B(u.v,w) + B(v,u.w) = 0";

/// 2-cocycle condition for the bracket `lie`.
pub fn is_two_cocycle(omega: &Bilinear, lie: &Algebra) -> Report {
    let n = lie.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let s = omega.eval(lie.prod(i, j), &unit(n, k))
                    + omega.eval(lie.prod(j, k), &unit(n, i))
                    + omega.eval(lie.prod(k, i), &unit(n, j));
                if !s.is_zero() {
                    return Report::new("two_cocycle", COCYCLE, Some(vec![i, j, k]));
                }
            }
        }
    }
    Report::pass("two_cocycle", COCYCLE)
}

/// `B(u.v, w) + B(v, u.w) = 0`: invariance of a form under left
/// multiplications. With `alg` a Lie bracket this is ad-invariance; with a
/// form read as `Theta(u)(v) = B(u, v)` it is `Theta o L_u = L*_u o Theta`.
pub fn is_invariant_form(form: &Bilinear, alg: &Algebra) -> Report {
    let n = alg.dim();
    let cols: Vec<Vector> = (0..n).map(|j| form.gram().col(j)).collect();
    let rows: Vec<Vector> = (0..n).map(|j| form.gram().row(j).to_vec()).collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // B(e_i e_j, e_k) + B(e_j, e_i e_k)
                let s = dot(alg.prod(i, j), &cols[k]) + dot(&rows[j], alg.prod(i, k));
                if !s.is_zero() {
                    return Report::new("invariant_form", INVARIANT, Some(vec![i, j, k]));
                }
            }
        }
    }
    Report::pass("invariant_form", INVARIANT)
}

/// `Theta o L_u = L*_u o Theta` for a nondegenerate `Theta(u) = B(u, .)`.
pub fn is_invariant_iso(theta: &Bilinear, alg: &Algebra) -> Result<Report> {
    theta.require_nondegenerate("invariant isomorphism")?;
    let mut r = is_invariant_form(theta, alg);
    r.name = "invariant_iso".into();
    Ok(r)
}

/// Solves `B(x, e_l) = rhs_l` for `x`.
fn solve_left(form: &Bilinear, rhs: &[Scalar]) -> Result<Vector> {
    form.flat().solve(rhs).ok_or(Error::Degenerate("bilinear form"))
}

/// The product with `w(a(u,v), x) = -w(v, [u,x])` for a symplectic
/// 2-cocycle `w`; it is left symmetric with commutator `[,]`.
pub fn a_product(omega: &Bilinear, lie: &Algebra) -> Result<Algebra> {
    if omega.kind() != FormKind::Skew {
        return Err(Error::FormKind("symplectic form must be skew".into()));
    }
    omega.require_nondegenerate("symplectic form")?;
    let n = lie.dim();
    let mut err = None;
    let a = Algebra::from_fn(n, |i, j| {
        let rhs: Vector = (0..n).map(|l| -omega.eval(&unit(n, j), lie.prod(i, l))).collect();
        solve_left(omega, &rhs).unwrap_or_else(|e| {
            err = Some(e);
            vec![Scalar::zero(); n]
        })
    });
    match err {
        Some(e) => Err(e),
        None => Ok(a.with_labels(lie.labels().to_vec())?),
    }
}

/// Koszul formula `2<u.v,w> = <[u,v],w> + <[w,u],v> + <[w,v],u>`.
pub fn levi_civita(metric: &Bilinear, lie: &Algebra) -> Result<Algebra> {
    if metric.kind() != FormKind::Symmetric {
        return Err(Error::FormKind("metric must be symmetric".into()));
    }
    metric.require_nondegenerate("metric")?;
    require_lie(lie)?;
    let n = lie.dim();
    let h = frac(1, 2);
    let mut err = None;
    let a = Algebra::from_fn(n, |i, j| {
        let rhs: Vector = (0..n)
            .map(|l| {
                let s = metric.eval(lie.prod(i, j), &unit(n, l))
                    + metric.eval(lie.prod(l, i), &unit(n, j))
                    + metric.eval(lie.prod(l, j), &unit(n, i));
                &h * s
            })
            .collect();
        solve_left(metric, &rhs).unwrap_or_else(|e| {
            err = Some(e);
            vec![Scalar::zero(); n]
        })
    });
    match err {
        Some(e) => Err(e),
        None => Ok(a.with_labels(lie.labels().to_vec())?),
    }
}

/// Flatness: the Levi-Civita product is left symmetric.
pub fn is_flat(metric: &Bilinear, lie: &Algebra) -> Result<Report> {
    let mut r = left_symmetric(&levi_civita(metric, lie)?);
    r.name = "flat".into();
    Ok(r)
}

/// `(alg, omega)` is a symplectic left-symmetric algebra.
pub fn symplectic_lsa(alg: &Algebra, omega: &Bilinear) -> Vec<Report> {
    let nd = Report::from_bool("nondegenerate", "det w != 0", omega.is_nondegenerate());
    let sk = Report::from_bool("skew", "w(u,v) = -w(v,u)", omega.kind() == FormKind::Skew);
    vec![left_symmetric(alg), is_invariant_form(omega, alg), nd, sk]
}

/// Ambient forms used by several constructions.
pub fn standard_symplectic(n: usize) -> Mat {
    let mut g = Mat::zeros(2 * n, 2 * n);
    for i in 0..n {
        g[(i, n + i)] = Scalar::from_integer((-1).into());
        g[(n + i, i)] = Scalar::from_integer(1.into());
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{jacobi_antisym, Algebra};
    use crate::exact::int;

    fn aff() -> Algebra {
        Algebra::from_entries(2, &[(0, 1, 0, int(1)), (1, 0, 0, int(-1))])
    }

    fn w2() -> Bilinear {
        Bilinear::skew(Mat::from_i64(&[&[0, 1], &[-1, 0]])).unwrap()
    }

    #[test]
    fn kind_is_enforced() {
        assert!(Bilinear::symmetric(Mat::from_i64(&[&[0, 1], &[-1, 0]])).is_err());
        assert!(Bilinear::new(Mat::from_i64(&[&[0, 1], &[2, 0]]), FormKind::None).is_ok());
    }

    #[test]
    fn a_product_oracle() {
        // [e1,e2] = e1 and w = e1* ^ e2*: w(a(u,v),x) = -w(v,[u,x]).
        let g = aff();
        let w = w2();
        assert!(is_two_cocycle(&w, &g).passed);
        let a = a_product(&w, &g).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    let lhs = w.eval(a.prod(i, j), &unit(2, l));
                    let rhs = -w.eval(&unit(2, j), g.prod(i, l));
                    assert_eq!(lhs, rhs);
                }
            }
        }
        assert!(left_symmetric(&a).passed);
        assert_eq!(a.commutator(), g);
    }

    #[test]
    fn levi_civita_is_torsion_free_and_metric() {
        let g = aff();
        let m = Bilinear::symmetric(Mat::from_i64(&[&[1, 0], &[0, 1]])).unwrap();
        let lc = levi_civita(&m, &g).unwrap();
        assert_eq!(lc.commutator(), g);
        assert!(is_invariant_form(&m, &lc).passed);
        // Left-invariant metrics on the affine group are hyperbolic, not flat.
        assert!(!is_flat(&m, &g).unwrap().passed);
        assert!(jacobi_antisym(&g).passed);
    }

    #[test]
    fn split_parts() {
        let w = w2();
        let a = Mat::from_i64(&[&[1, 2], &[3, 4]]);
        let (s, k) = w.split(&a).unwrap();
        assert_eq!(s.add(&k), a);
        for i in 0..2 {
            for j in 0..2 {
                let (u, v) = (unit(2, i), unit(2, j));
                assert_eq!(w.eval(&s.apply(&u), &v), w.eval(&u, &s.apply(&v)));
                assert_eq!(w.eval(&k.apply(&u), &v), -w.eval(&u, &k.apply(&v)));
            }
        }
    }
}
