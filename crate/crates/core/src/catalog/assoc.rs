//! Associative symplectic algebras: the two models and the decomposition
//! that puts any instance into one of them.
//!
//! Both models live on `V + I + V*` with `w(a, u) = -w(u, a) = a(u)` for
//! `u` in `V`, `a` in `V*`, `I` orthogonal to `V + V*`, and the basis
//! ordered as `V, I, V*` with the dual basis of `V*`.

use std::collections::BTreeMap;

use num::Zero;

use super::{CanonicalId, Family};
use crate::algebra::{associative, commutative, product_subspaces, Algebra};
use crate::error::{Error, Result};
use crate::exact::mat::{dot, vaxpy, vzero, Vector};
use crate::exact::{int, lagrangian_complement_in, symp_orthogonal, Mat, Scalar, Subspace};
use crate::forms::{is_invariant_form, Bilinear, FormKind};
use crate::report::{Certificate, Report};

fn sym(m: &Mat) -> bool {
    m.is_square() && m.transpose() == *m
}

fn check_maps(what: &str, maps: &[Mat], n: usize) -> Result<()> {
    for (k, m) in maps.iter().enumerate() {
        if m.rows() != n || !sym(m) {
            return Err(Error::Input(format!("{what}[{k}] must be a symmetric {n}x{n} matrix")));
        }
    }
    Ok(())
}

fn check_symplectic(what: &str, s: &Mat) -> Result<()> {
    if !s.is_square() || s.transpose() != s.neg() || !(s.rows() == 0 || s.is_invertible()) {
        return Err(Error::Input(format!("{what} must be a nondegenerate skew matrix")));
    }
    Ok(())
}

/// `V + I + V*` pairing with the block `s` on `I`.
fn model_form(v: usize, s: &Mat) -> Result<Bilinear> {
    let i = s.rows();
    let n = 2 * v + i;
    let mut g = Mat::zeros(n, n);
    for k in 0..v {
        g[(k, v + i + k)] = int(-1);
        g[(v + i + k, k)] = int(1);
    }
    g.set_block(v, v, s);
    Bilinear::new(g, FormKind::Skew)
}

fn labels(groups: &[(&str, usize)], v: usize) -> Vec<String> {
    let mut out: Vec<String> = groups
        .iter()
        .flat_map(|(p, k)| (1..=*k).map(move |j| format!("{p}{j}")))
        .collect();
    let duals: Vec<String> = out[..v].iter().map(|l| format!("{l}*")).collect();
    out.extend(duals);
    out
}

/// Model with `U^3 = 0`: `<c, a.b> = m(a)(b, c)` and `<b, i.a> = n(i)(a, b)`
/// for `a, b, c` in `V*` and `i` in `I`; all other products vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeOne {
    pub v: usize,
    /// Symplectic form on `I`.
    pub s: Mat,
    /// `m[a][(b, c)] = m(e_a*)(e_b*, e_c*)`, one per dual basis vector.
    pub m: Vec<Mat>,
    /// `n[k][(a, b)] = n(i_k)(e_a*, e_b*)`, one per basis vector of `I`.
    pub n: Vec<Mat>,
}

impl TypeOne {
    pub fn dim(&self) -> usize {
        2 * self.v + self.s.rows()
    }

    pub fn build(&self) -> Result<(Algebra, Bilinear)> {
        let (v, i) = (self.v, self.s.rows());
        check_symplectic("s", &self.s)?;
        if self.m.len() != v || self.n.len() != i {
            return Err(Error::Input("type one: one m per dual vector and one n per I vector".into()));
        }
        check_maps("m", &self.m, v)?;
        check_maps("n", &self.n, v)?;
        let ds = v + i;
        let n = self.dim();
        let alg = Algebra::from_fn(n, |p, q| {
            let mut out = vzero(n);
            if p >= ds && q >= ds {
                out[..v].clone_from_slice(self.m[p - ds].row(q - ds));
            } else if (v..ds).contains(&p) && q >= ds {
                out[..v].clone_from_slice(self.n[p - v].row(q - ds));
            }
            out
        })
        .with_labels(labels(&[("v", v), ("i", i)], v))?;
        Ok((alg, model_form(v, &self.s)?))
    }
}

/// Model with `U^3 != 0` on `V0 + V1 + I0 + I1 + V*`, where the first `v0`
/// dual vectors span the annihilator of `V1` and the last `v1` span the
/// annihilator of `V0`. Nonzero products, with `b1, c1, m1` ranging over
/// the annihilator of `V1` and `b0` over that of `V0`:
///
/// - `<c1, v.b1> = a(v)(b1, c1)` for `v` in `V1`
/// - `<c1, i.b1> = b(i)(b1, c1)` for `i` in `I0`
/// - `<c1, x.i> = s0(i, F(x, c1))` for `x` in `V*`, `i` in `I0`
/// - `<y, j.x> = c(j)(x, y)` for `j` in `I1`
/// - `x.y = E(x, y) + F(x, y)` with `<z, E(x, y)> = d(x)(y, z)` and
///   `F(x, b0) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeTwo {
    pub v0: usize,
    pub v1: usize,
    pub s0: Mat,
    pub s1: Mat,
    /// One `v0 x v0` symmetric matrix per basis vector of `V1`.
    pub a: Vec<Mat>,
    /// One `v0 x v0` symmetric matrix per basis vector of `I0`.
    pub b: Vec<Mat>,
    /// One `v x v` symmetric matrix per basis vector of `I1`.
    pub c: Vec<Mat>,
    /// One `v x v` symmetric matrix per dual basis vector.
    pub d: Vec<Mat>,
    /// `f[x][q]` is `F(e_x*, e_q*)` in `I0`, for `q < v0`.
    pub f: Vec<Vec<Vector>>,
}

impl TypeTwo {
    pub fn v(&self) -> usize {
        self.v0 + self.v1
    }

    pub fn i0(&self) -> usize {
        self.s0.rows()
    }

    pub fn i1(&self) -> usize {
        self.s1.rows()
    }

    pub fn dim(&self) -> usize {
        2 * self.v() + self.i0() + self.i1()
    }

    fn validate(&self) -> Result<()> {
        let (v, v0) = (self.v(), self.v0);
        check_symplectic("s0", &self.s0)?;
        check_symplectic("s1", &self.s1)?;
        if self.a.len() != self.v1 || self.b.len() != self.i0() || self.c.len() != self.i1() || self.d.len() != v {
            return Err(Error::Input("type two: map counts do not match the dimensions".into()));
        }
        check_maps("a", &self.a, v0)?;
        check_maps("b", &self.b, v0)?;
        check_maps("c", &self.c, v)?;
        check_maps("d", &self.d, v)?;
        if self.f.len() != v || self.f.iter().any(|r| r.len() != v0 || r.iter().any(|x| x.len() != self.i0())) {
            return Err(Error::Input("type two: F must have shape v x v0 with values in I0".into()));
        }
        Ok(())
    }

    /// `s0(x, y)`.
    fn s0(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        dot(x, &self.s0.apply(y))
    }

    /// `V1` coordinates of `E(e_x*, e_y*)`.
    fn e1(&self, x: usize, y: usize) -> Vector {
        (0..self.v1).map(|k| self.d[x][(y, self.v0 + k)].clone()).collect()
    }

    /// `a(w)(g, m)` for `w` in `V1` coordinates.
    fn a_at(&self, w: &[Scalar], g: usize, m: usize) -> Scalar {
        w.iter().zip(&self.a).map(|(x, a)| x * &a[(g, m)]).sum()
    }

    fn b_at(&self, y: &[Scalar], g: usize, m: usize) -> Scalar {
        y.iter().zip(&self.b).map(|(x, b)| x * &b[(g, m)]).sum()
    }

    pub fn build(&self) -> Result<(Algebra, Bilinear)> {
        self.validate()?;
        let (v0, v) = (self.v0, self.v());
        let (i0, i1) = (self.i0(), self.i1());
        let ds = v + i0 + i1;
        let n = self.dim();
        let alg = Algebra::from_fn(n, |p, q| {
            let mut out = vzero(n);
            let dual = |x: usize| x >= ds;
            if (v0..v).contains(&p) && dual(q) && q - ds < v0 {
                out[..v0].clone_from_slice(self.a[p - v0].row(q - ds));
            } else if (v..v + i0).contains(&p) && dual(q) && q - ds < v0 {
                out[..v0].clone_from_slice(self.b[p - v].row(q - ds));
            } else if dual(p) && (v..v + i0).contains(&q) {
                let i = Mat::identity(i0).col(q - v);
                for c1 in 0..v0 {
                    out[c1] = self.s0(&i, &self.f[p - ds][c1]);
                }
            } else if (v + i0..ds).contains(&p) && dual(q) {
                out[..v].clone_from_slice(self.c[p - v - i0].row(q - ds));
            } else if dual(p) && dual(q) {
                out[..v].clone_from_slice(self.d[p - ds].row(q - ds));
                if q - ds < v0 {
                    out[v..v + i0].clone_from_slice(&self.f[p - ds][q - ds]);
                }
            }
            out
        })
        .with_labels(labels(&[("u", v0), ("v", self.v1), ("i", i0), ("j", i1)], v))?;
        let mut s = Mat::zeros(i0 + i1, i0 + i1);
        s.set_block(0, 0, &self.s0);
        s.set_block(i0, i0, &self.s1);
        Ok((alg, model_form(v, &s)?))
    }
}

/// The model constraints that make a type-two product associative; each
/// violated instance is listed with its covector indices.
///
/// - (A) `a(E1(x, b1))(c1, m1) + b(F(x, b1))(c1, m1) = s0(F(b1, c1), F(x, m1))`
/// - (B) `a(E1(x, b0))(c1, m1) = s0(F(b0, c1), F(x, m1))`
/// - (C) `a(C1(j, x))(c1, m1) = 0`, where `C1(j, x)` is the `V1` part of `j.x`
///
/// (C) covers the triples `(j, x, y)` with `j` in `I1`.
pub fn type_two_constraints(t: &TypeTwo) -> Result<Vec<String>> {
    t.validate()?;
    let (v0, v1, v) = (t.v0, t.v1, t.v());
    let mut out = Vec::new();
    for x in 0..v {
        for b in 0..v {
            let e1 = t.e1(x, b);
            for c1 in 0..v0 {
                for m1 in 0..v0 {
                    let mut lhs = t.a_at(&e1, c1, m1);
                    let rhs = if b < v0 {
                        lhs += t.b_at(&t.f[x][b], c1, m1);
                        t.s0(&t.f[b][c1], &t.f[x][m1])
                    } else {
                        t.s0(&t.f[b][c1], &t.f[x][m1])
                    };
                    if lhs != rhs {
                        let tag = if b < v0 { "A" } else { "B" };
                        out.push(format!("({tag}) at x={x}, b={b}, c1={c1}, m1={m1}: {lhs} != {rhs}"));
                    }
                }
            }
        }
    }
    for (j, c) in t.c.iter().enumerate() {
        for x in 0..v {
            let w: Vector = (0..v1).map(|k| c[(x, v0 + k)].clone()).collect();
            for c1 in 0..v0 {
                for m1 in 0..v0 {
                    let val = t.a_at(&w, c1, m1);
                    if !val.is_zero() {
                        out.push(format!("(C) at j={j}, x={x}, c1={c1}, m1={m1}: {val} != 0"));
                    }
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AssocModel {
    One(TypeOne),
    Two(TypeTwo),
}

impl AssocModel {
    pub fn build(&self) -> Result<(Algebra, Bilinear)> {
        match self {
            AssocModel::One(m) => m.build(),
            AssocModel::Two(m) => m.build(),
        }
    }
}

/// Result of the decomposition: the model, the basis change onto it and
/// the structural checks made along the way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocNormal {
    pub id: CanonicalId,
    pub model: AssocModel,
    pub chain: Certificate,
}

fn products_vanish(alg: &Algebra, a: &Subspace, b: &Subspace) -> bool {
    a.basis().iter().all(|x| b.basis().iter().all(|y| alg.mul(x, y).iter().all(Zero::is_zero)))
}

/// `U^4 = 0`; `J = U^2 + (U^2)^perp` is a co-isotropic two-sided ideal with
/// `J^2 = 0`; and `U.U` is isotropic when the product is commutative.
pub fn assoc_chain(alg: &Algebra, omega: &Bilinear) -> Certificate {
    let n = alg.dim();
    let ps = product_subspaces(alg);
    let g = omega.gram();
    let u2 = &ps.powers[1];
    let perp = symp_orthogonal(g, u2);
    let j = u2.sum(&perp);
    let full = Subspace::full(n);
    let ideal = products_vanish(alg, &full, &Subspace::zero(n))
        || full.basis().iter().all(|e| {
            j.basis().iter().all(|x| j.contains(&alg.mul(e, x)) && j.contains(&alg.mul(x, e)))
        });
    let comm = commutative(alg).passed;
    Certificate::new(
        "assoc_chain",
        vec![
            Report::from_bool("fourth_power_zero", "U^4 = 0", ps.powers[3].dim() == 0),
            Report::from_bool("j_ideal", "U.J + J.U in J", ideal),
            Report::from_bool("j_square_zero", "J.J = 0", products_vanish(alg, &j, &j)),
            Report::from_bool("j_coisotropic", "J^perp in J", j.contains_subspace(&symp_orthogonal(g, &j))),
            Report::from_bool(
                "square_isotropic",
                "U.U in (U.U)^perp for commutative products",
                !comm || perp.contains_subspace(u2),
            ),
        ],
    )
}

/// Basis `w'` of `W` with `w(w'_j, v_i) = delta_ij`.
fn dual_basis(g: &Mat, v: &[Vector], w: &Subspace) -> Result<Vec<Vector>> {
    let k = v.len();
    let form = |x: &[Scalar], y: &[Scalar]| dot(x, &g.apply(y));
    let nmat = Mat::from_fn(k, k, |i, c| form(&w.basis()[c], &v[i]));
    let x = nmat.inverse().ok_or(Error::Internal("W does not pair with V".into()))?;
    Ok((0..k)
        .map(|j| {
            let mut out = vzero(g.rows());
            for (c, wc) in w.basis().iter().enumerate() {
                vaxpy(&mut out, &x[(c, j)], wc);
            }
            out
        })
        .collect())
}

fn coeffs(t: &Algebra, p: usize, q: usize, range: std::ops::Range<usize>) -> Vector {
    t.prod(p, q)[range].to_vec()
}

fn dims(kv: &[(&str, usize)]) -> BTreeMap<String, Scalar> {
    kv.iter().map(|(k, v)| (k.to_string(), Scalar::from_integer((*v as i64).into()))).collect()
}

/// Puts an associative symplectic algebra into the type-one model when
/// `U^3 = 0` and the type-two model otherwise.
pub fn normalize_assoc_symp(alg: &Algebra, omega: &Bilinear) -> Result<AssocNormal> {
    let n = alg.dim();
    if omega.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: omega.dim() });
    }
    if omega.kind() != FormKind::Skew {
        return Err(Error::FormKind("symplectic form must be skew".into()));
    }
    omega.require_nondegenerate("symplectic form")?;
    for r in [associative(alg), is_invariant_form(omega, alg)] {
        if !r.passed {
            return Err(Error::precondition(&r));
        }
    }
    let chain = assoc_chain(alg, omega);
    if let Some(bad) = chain.failures().next() {
        return Err(Error::Internal(format!("{} fails on an associative symplectic algebra", bad.identity)));
    }
    let g = omega.gram();
    let ps = product_subspaces(alg);
    let u2 = ps.powers[1].clone();
    let u3 = ps.powers[2].clone();
    let perp = symp_orthogonal(g, &u2);
    let (family, id_params, groups) = if u3.dim() == 0 {
        let i = u2.complement_in(&perp)?;
        (
            Family::AssocTypeOne,
            dims(&[("dim_v", u2.dim()), ("dim_i", i.dim())]),
            vec![u2.clone(), i],
        )
    } else {
        let v = u2.intersection(&perp);
        let v1 = u3.complement_in(&v)?;
        let i0 = v.complement_in(&u2)?;
        let i1 = v.complement_in(&perp)?;
        (
            Family::AssocTypeTwo,
            dims(&[("dim_v0", u3.dim()), ("dim_v1", v1.dim()), ("dim_i0", i0.dim()), ("dim_i1", i1.dim())]),
            vec![u3.clone(), v1, i0, i1],
        )
    };
    // V is the span of the V-type groups, I of the rest.
    let nv = if family == Family::AssocTypeOne { 1 } else { 2 };
    let vbasis: Vec<Vector> = groups[..nv].iter().flat_map(|s| s.basis().to_vec()).collect();
    let ibasis: Vec<Vector> = groups[nv..].iter().flat_map(|s| s.basis().to_vec()).collect();
    let vspace = Subspace::span(n, &vbasis);
    let iperp = symp_orthogonal(g, &Subspace::span(n, &ibasis));
    let w = lagrangian_complement_in(g, &iperp, &vspace)?;
    let wdual = dual_basis(g, &vbasis, &w)?;
    let cols: Vec<Vector> = vbasis.iter().chain(&ibasis).chain(&wdual).cloned().collect();
    let p = Mat::from_cols(n, &cols);
    let t = alg.transport(&p)?;
    let tw = omega.transport(&p)?;
    let dv = vbasis.len();
    let di = ibasis.len();
    let ds = dv + di;
    let model = if family == Family::AssocTypeOne {
        let s = tw.gram().block(dv, dv, di, di);
        let m = (0..dv).map(|a| Mat::from_rows((0..dv).map(|b| coeffs(&t, ds + a, ds + b, 0..dv)).collect())).collect();
        let nn = (0..di).map(|k| Mat::from_rows((0..dv).map(|a| coeffs(&t, dv + k, ds + a, 0..dv)).collect())).collect();
        AssocModel::One(TypeOne { v: dv, s, m, n: nn })
    } else {
        let (v0, v1) = (groups[0].dim(), groups[1].dim());
        let (i0, i1) = (groups[2].dim(), groups[3].dim());
        // Rows indexed by the dual vector in the right slot.
        let block = |left: usize, range: std::ops::Range<usize>, rows: usize| {
            Mat::from_rows((0..rows).map(|r| coeffs(&t, left, ds + r, range.clone())).collect())
        };
        let a = (0..v1).map(|k| block(v0 + k, 0..v0, v0)).collect();
        let b = (0..i0).map(|k| block(dv + k, 0..v0, v0)).collect();
        let c = (0..i1).map(|k| block(dv + i0 + k, 0..dv, dv)).collect();
        let d = (0..dv).map(|x| block(ds + x, 0..dv, dv)).collect();
        let f = (0..dv).map(|x| (0..v0).map(|q| coeffs(&t, ds + x, ds + q, dv..dv + i0)).collect()).collect();
        AssocModel::Two(TypeTwo {
            v0,
            v1,
            s0: tw.gram().block(dv, dv, i0, i0),
            s1: tw.gram().block(dv + i0, dv + i0, i1, i1),
            a,
            b,
            c,
            d,
            f,
        })
    };
    let (ma, mw) = model.build()?;
    if ma.constants() != t.constants() || mw.gram() != tw.gram() {
        return Err(Error::Internal(format!("transported algebra is not a {family} model")));
    }
    if let AssocModel::Two(m) = &model {
        let bad = type_two_constraints(m)?;
        if !bad.is_empty() {
            return Err(Error::Constraints(bad));
        }
    }
    Ok(AssocNormal { id: CanonicalId { family, params: id_params, change_of_basis: p }, model, chain })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{canonical, params};
    use crate::exact::frac;

    #[test]
    fn shipped_type_two_normalizes() {
        for p in [int(1), frac(-2, 3)] {
            let c = canonical(Family::AssocTypeTwo, &params(&[("p", p)])).unwrap();
            let nf = normalize_assoc_symp(&c.alg, &c.omega).unwrap();
            assert_eq!(nf.id.family, Family::AssocTypeTwo);
            assert!(nf.chain.passed);
            assert_eq!(nf.id.param("dim_v0"), &int(1));
            assert_eq!(nf.id.param("dim_i0"), &int(2));
        }
    }

    #[test]
    fn type_one_in_dimension_four() {
        let c = canonical(Family::AssocTypeOne, &params(&[("m", int(1)), ("n", int(2))])).unwrap();
        let nf = normalize_assoc_symp(&c.alg, &c.omega).unwrap();
        assert_eq!(nf.id.family, Family::AssocTypeOne);
        assert_eq!(nf.id.param("dim_v"), &int(1));
        assert_eq!(nf.id.param("dim_i"), &int(2));
    }

    #[test]
    fn i1_reaching_v1_breaks_associativity() {
        let t = TypeTwo {
            v0: 1,
            v1: 1,
            s0: Mat::zeros(0, 0),
            s1: Mat::from_i64(&[&[0, 1], &[-1, 0]]),
            a: vec![Mat::from_i64(&[&[1]])],
            b: vec![],
            c: vec![Mat::from_i64(&[&[0, 1], &[1, 0]]), Mat::zeros(2, 2)],
            d: vec![Mat::zeros(2, 2), Mat::zeros(2, 2)],
            f: vec![vec![vec![]], vec![vec![]]],
        };
        let (alg, w) = t.build().unwrap();
        assert!(is_invariant_form(&w, &alg).passed);
        assert!(!associative(&alg).passed);
        let bad = type_two_constraints(&t).unwrap();
        assert!(bad.iter().all(|s| s.starts_with("(C)")) && !bad.is_empty());
    }

    #[test]
    fn non_associative_input_is_rejected() {
        let c = canonical(Family::Dim2Nonabelian, &params(&[("a", int(1))])).unwrap();
        assert!(matches!(normalize_assoc_symp(&c.alg, &c.omega), Err(Error::Precondition { .. })));
    }
}
