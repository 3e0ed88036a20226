//! Dual products induced by a 2-tensor `r` on `U*`, the defect `Delta(r)`,
//! quasi S-matrices and the twisted brackets on the phase space.
//!
//! A tensor `r` is stored as `R[i][j] = r(e_i*, e_j*)`, so
//! `r_#(a) = sum_ij a_i R[i][j] e_j` and the matrix of `r_#` is `R^t`.

use num::Zero;

use crate::algebra::{require_lie, require_lsa, Algebra};
use crate::error::{Error, Result};
use crate::exact::mat::{unit, vsub, vzero, Mat, Vector};
use crate::exact::{frac, int, Scalar};
use crate::forms::Bilinear;
use crate::lts::LieTriple;
use crate::phase::{k0, metric0, phase_product, triangle_product};
use crate::report::Report;
use crate::tensor::{invariance_check, Rep, Reps, Tensor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor2 {
    r: Mat,
}

impl Tensor2 {
    pub fn new(r: Mat) -> Self {
        assert!(r.is_square(), "square coefficient matrix");
        Tensor2 { r }
    }

    pub fn matrix(&self) -> &Mat {
        &self.r
    }

    pub fn dim(&self) -> usize {
        self.r.rows()
    }

    pub fn sharp(&self) -> Mat {
        self.r.transpose()
    }

    pub fn eval(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        crate::exact::mat::dot(a, &self.r.apply(b))
    }

    pub fn sym(&self) -> Tensor2 {
        Tensor2 { r: self.r.add(&self.r.transpose()).scale(&frac(1, 2)) }
    }

    pub fn skew(&self) -> Tensor2 {
        Tensor2 { r: self.r.sub(&self.r.transpose()).scale(&frac(1, 2)) }
    }

    pub fn is_symmetric(&self) -> bool {
        self.r == self.r.transpose()
    }

    pub fn is_skew(&self) -> bool {
        self.r == self.r.transpose().neg()
    }
}

/// `<a.b, X> = r(L_X^t a, b) + r(a, ad_X^t b)`.
pub fn dual_product_from_r(u: &Algebra, r: &Tensor2) -> Algebra {
    let n = u.dim();
    let rm = r.matrix();
    let mut d = Algebra::zero(n);
    let mut entries = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for k in 0..n {
                let mut s = Scalar::zero();
                for j in 0..n {
                    s += u.c(k, j, a) * &rm[(j, b)];
                    s += &rm[(a, j)] * (u.c(k, j, b) - u.c(j, k, b));
                }
                if !s.is_zero() {
                    entries.push((a, b, k, s));
                }
            }
        }
    }
    if !entries.is_empty() {
        d = Algebra::from_entries(n, &entries);
    }
    d
}

/// `Delta(r)(a, b) = r_#([a,b]) - [r_# a, r_# b]` as the tensor
/// `D[a][b][k] = <e_k*, Delta(e_a*, e_b*)>`.
pub fn delta_r(u: &Algebra, r: &Tensor2) -> Tensor {
    let n = u.dim();
    let dual = dual_product_from_r(u, r);
    let sharp = r.sharp();
    let images: Vec<Vector> = (0..n).map(|a| sharp.col(a)).collect();
    Tensor::from_bilinear_map(n, |a, b| {
        let br = vsub(dual.prod(a, b), dual.prod(b, a));
        let lhs = sharp.apply(&br);
        let rhs = vsub(&u.mul(&images[a], &images[b]), &u.mul(&images[b], &images[a]));
        vsub(&lhs, &rhs)
    })
}

/// `Delta(r)(a, b)` read off a tensor from `delta_r`.
pub fn delta_value(d: &Tensor, a: usize, b: usize) -> Vector {
    (0..d.n()).map(|k| d.get(&[a, b, k]).clone()).collect()
}

/// `[[r,r]] = r13.r12 - r23.r21 + [r23,r12] - [r13,r21] - [r13,r23]` with
/// `r = sum R[i][j] e_i (x) e_j`, as coefficients `B[x][y][z]`.
pub fn bai_bracket(u: &Algebra, r: &Tensor2) -> Tensor {
    let n = u.dim();
    let rm = r.matrix();
    let lie = u.commutator();
    let terms: Vec<(usize, usize, &Scalar)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, &rm[(i, j)]))
        .filter(|(_, _, c)| !c.is_zero())
        .collect();
    let mut out = vec![Scalar::zero(); n * n * n];
    let idx = |x: usize, y: usize, z: usize| (x * n + y) * n + z;
    // a_p = e_{p.0}, b_p = e_{p.1}, weight p.2
    for &(ai, bi, ci) in &terms {
        for &(aj, bj, cj) in &terms {
            let w = ci * cj;
            // r13.r12 = a_i.a_j (x) b_j (x) b_i
            for (x, v) in u.prod(ai, aj).iter().enumerate() {
                if !v.is_zero() {
                    out[idx(x, bj, bi)] += &w * v;
                }
            }
            // - r23.r21 = - b_j (x) a_i.a_j (x) b_i
            for (y, v) in u.prod(ai, aj).iter().enumerate() {
                if !v.is_zero() {
                    out[idx(bj, y, bi)] -= &w * v;
                }
            }
            // + [r23,r12] = a_j (x) [a_i,b_j] (x) b_i
            for (y, v) in lie.prod(ai, bj).iter().enumerate() {
                if !v.is_zero() {
                    out[idx(aj, y, bi)] += &w * v;
                }
            }
            // - [r13,r21] = - [a_i,b_j] (x) a_j (x) b_i
            for (x, v) in lie.prod(ai, bj).iter().enumerate() {
                if !v.is_zero() {
                    out[idx(x, aj, bi)] -= &w * v;
                }
            }
            // - [r13,r23] = - a_i (x) a_j (x) [b_i,b_j]
            for (z, v) in lie.prod(bi, bj).iter().enumerate() {
                if !v.is_zero() {
                    out[idx(ai, aj, z)] -= &w * v;
                }
            }
        }
    }
    Tensor::from_fn(n, 3, |ix| out[idx(ix[0], ix[1], ix[2])].clone())
}

/// `L(a)(X, a, b) = a(L_X^t a, b) + a(a, L_X^t b)` as a tensor in
/// `U* (x) U (x) U`.
pub fn l_of(u: &Algebra, t: &Tensor2) -> Tensor {
    let n = u.dim();
    let m = t.matrix();
    let slices: Vec<Mat> = (0..n)
        .map(|x| {
            let l = u.left_basis(x);
            l.mul(m).add(&m.mul(&l.transpose()))
        })
        .collect();
    Tensor::from_fn(n, 3, |ix| slices[ix[0]][(ix[1], ix[2])].clone())
}

pub fn l_invariant(u: &Algebra, t: &Tensor2) -> Report {
    invariance_check(
        "L_invariant",
        "a(L_X^t a, b) + a(a, L_X^t b) = 0",
        &Tensor::from_matrix(t.matrix()),
        &[Rep::L, Rep::L],
        &Reps::of_lsa(u),
    )
}

/// `Q = L (x) L (x) ad` on `Delta(r)`; in terms of the covector arguments
/// `Q(X)Delta(a,b) = [X, Delta(a,b)] - Delta(L*_X a, b) - Delta(a, L*_X b)`.
pub fn q_invariance(u: &Algebra, delta: &Tensor) -> Report {
    invariance_check(
        "Q_invariant",
        "[X, D(a,b)] - D(L*_X a, b) - D(a, L*_X b) = 0",
        delta,
        &[Rep::L, Rep::L, Rep::Ad],
        &Reps::of_lsa(u),
    )
}

/// `P = L* (x) L (x) L` on `L(a)`.
pub fn p_invariance(u: &Algebra, la: &Tensor) -> Report {
    invariance_check("P_invariant", "P(X) L(a) = 0", la, &[Rep::LDual, Rep::L, Rep::L], &Reps::of_lsa(u))
}

#[derive(Clone, Debug)]
pub struct RClass {
    pub delta_zero: Report,
    pub q_invariant: Report,
    pub p_invariant: Report,
    pub skew_l_invariant: Report,
    pub l_invariant: Report,
    pub extendible: bool,
    pub quasi_s: bool,
    pub s_matrix: bool,
}

pub fn classify_r(u: &Algebra, r: &Tensor2) -> Result<RClass> {
    require_lsa(u)?;
    if r.dim() != u.dim() {
        return Err(Error::DimensionMismatch { expected: u.dim(), got: r.dim() });
    }
    let delta = delta_r(u, r);
    let skew = r.skew();
    let q = q_invariance(u, &delta);
    let p = p_invariance(u, &l_of(u, &skew));
    let sl = l_invariant(u, &skew);
    let dz = Report::new("delta_zero", "Delta(r) = 0", delta.first_nonzero());
    let extendible = q.passed && p.passed;
    let quasi_s = sl.passed && q.passed;
    let s_matrix = r.is_symmetric() && dz.passed;
    Ok(RClass {
        delta_zero: dz,
        q_invariant: q,
        p_invariant: p,
        skew_l_invariant: sl,
        l_invariant: l_invariant(u, r),
        extendible,
        quasi_s,
        s_matrix,
    })
}

/// Structures attached to a quasi S-matrix on `Phi(U)`.
#[derive(Clone, Debug)]
pub struct Twisted {
    /// `[,]^{|>,r} = [,]^|> + Delta(r)(a, b)`
    pub bracket_twisted: Algebra,
    /// Commutator of the extended product with the dual product from `r`.
    pub bracket_r: Algebra,
    /// `xi(X + a) = X - r_#(a) + a`
    pub xi: Mat,
    /// `<,>_r = <,>_0 - 2 s(a, b)`
    pub metric: Bilinear,
    /// `K_r(X + a) = K_0(X + a) - 2 r_#(a)`
    pub k: Mat,
    /// `L(a, b, c) = L*_{Delta(r)(a,b)} c` on `U*`.
    pub lts: LieTriple,
}

fn xi_matrix(r: &Tensor2) -> Mat {
    let n = r.dim();
    let mut xi = Mat::identity(2 * n);
    xi.set_block(0, n, &r.sharp().neg());
    xi
}

/// `[,]^{|>,r}`: the triangle bracket plus `Delta(r)` on `U* x U*`. No
/// condition on `r` is checked.
pub fn twist_bracket(u: &Algebra, r: &Tensor2) -> Result<Algebra> {
    let n = u.dim();
    let delta = delta_r(u, r);
    let tri = triangle_product(u).commutator();
    Algebra::from_fn(2 * n, |p, q| {
        let mut v = tri.prod(p, q).to_vec();
        if p >= n && q >= n {
            for (k, x) in delta_value(&delta, p - n, q - n).into_iter().enumerate() {
                v[k] += x;
            }
        }
        v
    })
    .with_labels(tri.labels().to_vec())
}

/// `<,>_r = <,>_0 - 2 s(a, b)` with `s` the symmetric part of `r`.
pub fn twist_metric(r: &Tensor2) -> Bilinear {
    let n = r.dim();
    let mut g = metric0(n).gram().clone();
    g.set_block(n, n, &r.sym().matrix().scale(&int(-2)));
    Bilinear::symmetric(g).expect("symmetric")
}

/// `K_r(X + a) = K_0(X + a) - 2 r_#(a)`
pub fn twist_k(r: &Tensor2) -> Mat {
    let mut k = k0(r.dim());
    k.set_block(0, r.dim(), &r.sharp().scale(&int(-2)));
    k
}

pub fn twisted_structures(u: &Algebra, r: &Tensor2) -> Result<Twisted> {
    let class = classify_r(u, r)?;
    if !class.skew_l_invariant.passed {
        return Err(Error::precondition(&class.skew_l_invariant));
    }
    if !class.q_invariant.passed {
        return Err(Error::precondition(&class.q_invariant));
    }
    let n = u.dim();
    let delta = delta_r(u, r);
    let bracket_twisted = twist_bracket(u, r)?;
    let bracket_r = phase_product(u, &dual_product_from_r(u, r))?.commutator();
    let lts = LieTriple::from_fn(n, |a, b, c| {
        // L*_D c = -L_D^t c
        let d = delta_value(&delta, a, b);
        u.left(&d).transpose().apply(&unit(n, c)).into_iter().map(|x| -x).collect()
    })?;
    Ok(Twisted {
        bracket_twisted,
        bracket_r,
        xi: xi_matrix(r),
        metric: twist_metric(r),
        k: twist_k(r),
        lts,
    })
}

/// `f` is a Lie algebra isomorphism from `from` onto `to`.
pub fn verify_iso(from: &Algebra, to: &Algebra, f: &Mat) -> Report {
    const ID: &str = "f[u,v] = [fu,fv] with f invertible";
    if !f.is_invertible() {
        return Report::fail("isomorphism", ID, "not invertible");
    }
    let n = from.dim();
    let cols: Vec<Vector> = (0..n).map(|j| f.col(j)).collect();
    for i in 0..n {
        for j in i + 1..n {
            if f.apply(from.prod(i, j)) != to.mul(&cols[i], &cols[j]) {
                return Report::new("isomorphism", ID, Some(vec![i, j]));
            }
        }
    }
    Report::pass("isomorphism", ID)
}

pub fn verify_xi_iso(t: &Twisted) -> Report {
    verify_iso(&t.bracket_twisted, &t.bracket_r, &t.xi)
}

/// `[b,b](a, c) = b_#([a,c]_b) - [b_# a, b_# c]` with
/// `[a,c]_b = ad*_{b_# a} c - ad*_{b_# c} a`.
fn dual_bracket_skew(g: &Algebra, b: &Tensor2) -> Algebra {
    let n = g.dim();
    let sharp = b.sharp();
    let ads: Vec<Mat> = (0..n).map(|a| g.left(&sharp.col(a))).collect();
    Algebra::from_fn(n, |a, c| {
        let x = ads[a].transpose().apply(&unit(n, c));
        let y = ads[c].transpose().apply(&unit(n, a));
        vsub(&y, &x)
    })
}

pub fn cybe_bracket(g: &Algebra, b: &Tensor2) -> Tensor {
    let n = g.dim();
    let sharp = b.sharp();
    let d = dual_bracket_skew(g, b);
    Tensor::from_bilinear_map(n, |a, c| {
        let lhs = sharp.apply(d.prod(a, c));
        vsub(&lhs, &g.mul(&sharp.col(a), &sharp.col(c)))
    })
}

pub fn is_cybe(g: &Algebra, b: &Tensor2) -> Report {
    Report::new("cybe", "[b,b] = 0", cybe_bracket(g, b).first_nonzero())
}

/// Double of a Lie algebra with a skew `r` whose `[r,r]` is ad-invariant.
#[derive(Clone, Debug)]
pub struct Diatta {
    pub dual_bracket: Algebra,
    /// `[X,Y] + [a,b]* - ad_X^t b - ad_a^t Y + ad_Y^t a + ad_b^t X`
    pub bracket_r: Algebra,
    /// `[X,Y] + ad*_X b - ad*_Y a + [r,r](a,b)`
    pub bracket_twisted: Algebra,
    pub xi: Mat,
}

pub fn diatta_double(g: &Algebra, r: &Tensor2) -> Result<Diatta> {
    require_lie(g)?;
    if !r.is_skew() {
        return Err(Error::Input("r must be skew".into()));
    }
    let n = g.dim();
    let rr = cybe_bracket(g, r);
    let inv = invariance_check("rr_ad_invariant", "[r,r] is ad-invariant", &rr, &[Rep::Ad; 3], &Reps::of_lie(g));
    if !inv.passed {
        return Err(Error::precondition(&inv));
    }
    let d = dual_bracket_skew(g, r);
    let ad: Vec<Mat> = g.lefts();
    let add: Vec<Mat> = d.lefts();
    let labels = crate::phase::triangle_product(g).labels().to_vec();
    let bracket_r = Algebra::from_fn(2 * n, |p, q| {
        let mut v = vzero(2 * n);
        match (p < n, q < n) {
            (true, true) => v[..n].clone_from_slice(g.prod(p, q)),
            (false, false) => v[n..].clone_from_slice(d.prod(p - n, q - n)),
            (true, false) => {
                // -ad_X^t b + ad_b^t X
                let dual = ad[p].transpose().apply(&unit(n, q - n));
                let vec = add[q - n].transpose().apply(&unit(n, p));
                v[..n].clone_from_slice(&vec);
                for (k, x) in dual.into_iter().enumerate() {
                    v[n + k] = -x;
                }
            }
            (false, true) => {
                // -ad_a^t Y + ad_Y^t a
                let vec = add[p - n].transpose().apply(&unit(n, q));
                let dual = ad[q].transpose().apply(&unit(n, p - n));
                for (k, x) in vec.into_iter().enumerate() {
                    v[k] = -x;
                }
                v[n..].clone_from_slice(&dual);
            }
        }
        v
    })
    .with_labels(labels.clone())?;
    let bracket_twisted = Algebra::from_fn(2 * n, |p, q| {
        let mut v = vzero(2 * n);
        match (p < n, q < n) {
            (true, true) => v[..n].clone_from_slice(g.prod(p, q)),
            (false, false) => v[..n].clone_from_slice(&delta_value(&rr, p - n, q - n)),
            (true, false) => {
                let dual = ad[p].transpose().apply(&unit(n, q - n));
                for (k, x) in dual.into_iter().enumerate() {
                    v[n + k] = -x;
                }
            }
            (false, true) => {
                let dual = ad[q].transpose().apply(&unit(n, p - n));
                v[n..].clone_from_slice(&dual);
            }
        }
        v
    })
    .with_labels(labels)?;
    Ok(Diatta { dual_bracket: d, bracket_r, bracket_twisted, xi: xi_matrix(r) })
}

pub fn killing_form(g: &Algebra) -> Mat {
    let ad = g.lefts();
    let n = g.dim();
    Mat::from_fn(n, n, |i, j| ad[i].mul(&ad[j]).trace())
}

/// Flat para-Kähler double from a CYBE solution `b` and an `r` on `g`
/// (stored `r[i][j] = r(e_i, e_j)`) invariant under `ad_{b_# a}`.
#[derive(Clone, Debug)]
pub struct CybeDouble {
    pub bracket: Algebra,
    pub metric: Bilinear,
    pub k: Mat,
    /// `(X+a) |>_b (Y+b) = ad*_{b_# a} b + [b_# a, Y]`
    pub triangle: Algebra,
}

pub fn cybe_double(g: &Algebra, b: &Tensor2, r: &Mat) -> Result<CybeDouble> {
    require_lie(g)?;
    let n = g.dim();
    if !b.is_skew() {
        return Err(Error::Input("b must be skew".into()));
    }
    let cy = is_cybe(g, b);
    if !cy.passed {
        return Err(Error::precondition(&cy));
    }
    let sharp = b.sharp();
    let adb: Vec<Mat> = (0..n).map(|a| g.left(&sharp.col(a))).collect();
    for (a, m) in adb.iter().enumerate() {
        // r(ad X, Y) + r(X, ad Y) = 0 for ad = ad_{b_# e_a}
        if !m.transpose().mul(r).add(&r.mul(m)).is_zero() {
            return Err(Error::Precondition {
                identity: "r(ad_{b_# a} X, Y) + r(X, ad_{b_# a} Y) = 0".into(),
                witness: Some(vec![a]),
            });
        }
    }
    let labels = crate::phase::triangle_product(g).labels().to_vec();
    let dual_part = |a: usize, c: usize| adb[a].transpose().apply(&unit(n, c)).into_iter().map(|x| -x).collect::<Vector>();
    let triangle = Algebra::from_fn(2 * n, |p, q| {
        let mut v = vzero(2 * n);
        if p >= n {
            if q >= n {
                v[n..].clone_from_slice(&dual_part(p - n, q - n));
            } else {
                v[..n].clone_from_slice(&adb[p - n].col(q));
            }
        }
        v
    })
    .with_labels(labels)?;
    let bracket = triangle.commutator();
    let s = r.add(&r.transpose()).scale(&frac(1, 2));
    let mut gm = metric0(n).gram().clone();
    gm.set_block(0, 0, &s.scale(&int(-2)));
    let metric = Bilinear::symmetric(gm)?;
    let mut k = k0(n).neg();
    k.set_block(n, 0, &r.transpose().scale(&int(-2)));
    Ok(CybeDouble { bracket, metric, k, triangle })
}

/// Pulls `(Phi(U), [,]^|>, <,>_r, K_r)` for an `L`-invariant `r`.
#[derive(Clone, Debug)]
pub struct FlatDouble {
    pub bracket: Algebra,
    pub triangle: Algebra,
    pub metric: Bilinear,
    pub k: Mat,
    pub r: Tensor2,
}

pub fn invariant_double(u: &Algebra, r: &Tensor2) -> Result<FlatDouble> {
    require_lsa(u)?;
    let li = l_invariant(u, r);
    if !li.passed {
        return Err(Error::precondition(&li));
    }
    let triangle = triangle_product(u);
    Ok(FlatDouble {
        bracket: triangle.commutator(),
        triangle,
        metric: twist_metric(r),
        k: twist_k(r),
        r: r.clone(),
    })
}

/// Flat metric `<,>` on a Lie algebra: `r(a, b) = <flat^-1 a, flat^-1 b>`
/// on the Levi-Civita product.
pub fn flat_double(lie: &Algebra, metric: &Bilinear) -> Result<(Algebra, FlatDouble)> {
    let lc = crate::forms::levi_civita(metric, lie)?;
    let fl = crate::forms::is_flat(metric, lie)?;
    if !fl.passed {
        return Err(Error::precondition(&fl));
    }
    let r = Tensor2::new(metric.gram().inverse().ok_or(Error::Degenerate("metric"))?);
    Ok((lc.clone(), invariant_double(&lc, &r)?))
}
