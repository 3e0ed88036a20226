//! Finite-dimensional algebras given by structure constants, and the basic
//! identity checks on them.

use num::Zero;

use crate::error::{Error, Result};
use crate::exact::mat::{is_zero_vec, unit, vadd, vaxpy, vsub, vzero, Mat, Vector};
use crate::exact::{Scalar, Subspace};
use crate::report::Report;

/// Structure constants `c[i][j][k]` with `e_i . e_j = sum_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    labels: Vec<String>,
    c: Vec<Scalar>,
}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

/// Labels for `U + U*`: `l` then `l*`, or `(l)*` when some `l*` is already
/// taken, as happens when `U` is itself a double.
pub fn doubled_labels(labels: &[String]) -> Vec<String> {
    let clash = labels.iter().any(|l| labels.contains(&format!("{l}*")));
    let mut out = labels.to_vec();
    out.extend(labels.iter().map(|l| if clash { format!("({l})*") } else { format!("{l}*") }));
    out
}

impl Algebra {
    pub fn zero(n: usize) -> Self {
        Algebra { labels: default_labels(n), c: vec![Scalar::zero(); n * n * n] }
    }

    /// `f(i, j)` is the coordinate vector of `e_i . e_j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut c = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                assert_eq!(v.len(), n, "product vector length");
                c.extend(v);
            }
        }
        Algebra { labels: default_labels(n), c }
    }

    /// Sparse constructor from `(i, j, k, c_ijk)` entries.
    pub fn from_entries(n: usize, entries: &[(usize, usize, usize, Scalar)]) -> Self {
        let mut a = Self::zero(n);
        for (i, j, k, v) in entries {
            a.c[(i * n + j) * n + k] += v;
        }
        a
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: labels.len() });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.c[(i * n + j) * n + k]
    }

    /// Coordinates of `e_i . e_j`.
    pub fn prod(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim();
        &self.c[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = vzero(n);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if !vj.is_zero() {
                    vaxpy(&mut out, &(ui * vj), self.prod(i, j));
                }
            }
        }
        out
    }

    /// `e_i . v`
    pub fn mul_basis_left(&self, i: usize, v: &[Scalar]) -> Vector {
        let mut out = vzero(self.dim());
        for (j, vj) in v.iter().enumerate() {
            vaxpy(&mut out, vj, self.prod(i, j));
        }
        out
    }

    /// Left multiplication `L_u`; column `j` is `u . e_j`.
    pub fn left(&self, u: &[Scalar]) -> Mat {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(u, &unit(n, j))).collect();
        Mat::from_cols(n, &cols)
    }

    pub fn left_basis(&self, i: usize) -> Mat {
        let n = self.dim();
        Mat::from_fn(n, n, |k, j| self.c(i, j, k).clone())
    }

    pub fn right(&self, u: &[Scalar]) -> Mat {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(&unit(n, j), u)).collect();
        Mat::from_cols(n, &cols)
    }

    pub fn right_basis(&self, i: usize) -> Mat {
        let n = self.dim();
        Mat::from_fn(n, n, |k, j| self.c(j, i, k).clone())
    }

    pub fn lefts(&self) -> Vec<Mat> {
        (0..self.dim()).map(|i| self.left_basis(i)).collect()
    }

    /// `[u, v] = u.v - v.u`
    pub fn commutator(&self) -> Algebra {
        let n = self.dim();
        Algebra {
            labels: self.labels.clone(),
            c: (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .flat_map(|(i, j)| vsub(self.prod(i, j), self.prod(j, i)))
                .collect(),
        }
    }

    pub fn add(&self, o: &Algebra) -> Algebra {
        assert_eq!(self.dim(), o.dim());
        Algebra { labels: self.labels.clone(), c: self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Algebra {
        Algebra { labels: self.labels.clone(), c: self.c.iter().map(|a| s * a).collect() }
    }

    /// `a . self + b . other`
    pub fn combine(&self, a: &Scalar, o: &Algebra, b: &Scalar) -> Algebra {
        self.scale(a).add(&o.scale(b))
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.c)
    }

    pub fn constants(&self) -> &[Scalar] {
        &self.c
    }

    /// The same product written in the basis given by the columns of `p`.
    pub fn transport(&self, p: &Mat) -> Result<Algebra> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, got: p.rows() });
        }
        let pinv = p.inverse().ok_or(Error::Degenerate("change of basis"))?;
        let cols: Vec<Vector> = (0..n).map(|j| p.col(j)).collect();
        let mut out = Algebra::from_fn(n, |i, j| pinv.apply(&self.mul(&cols[i], &cols[j])));
        out.labels = self.labels.clone();
        Ok(out)
    }

    /// Curvature `K(u, v) = [L_u, L_v] - L_{[u,v]}`.
    pub fn curvature(&self, u: &[Scalar], v: &[Scalar]) -> Mat {
        let br = vsub(&self.mul(u, v), &self.mul(v, u));
        self.left(u).commutator(&self.left(v)).sub(&self.left(&br))
    }

    /// `ad_X` of the commutator bracket.
    pub fn ad(&self, u: &[Scalar]) -> Mat {
        self.left(u).sub(&self.right(u))
    }
}

const LEFT_SYMMETRIC: &str = "ass(u,v,w) = ass(v,u,w)";
const ASSOCIATIVE: &str = "(uv)w = u(vw)";
const COMMUTATIVE: &str = "uv = vu";
const ZERO_PRODUCT: &str = "uv = 0";
const JACOBI: &str = "[u,v] = -[v,u] and [u,[v,w]] + [v,[w,u]] + [w,[u,v]] = 0";
const LIE_ADMISSIBLE: &str = "Jacobi identity for uv - vu";

/// First column index where two equally shaped matrices differ.
fn first_diff(a: &Mat, b: &Mat) -> Option<usize> {
    (0..a.cols()).find(|&j| (0..a.rows()).any(|i| a[(i, j)] != b[(i, j)]))
}

/// `ass(u,v,w) = ass(v,u,w)`, checked as `[L_i, L_j] = L_{[e_i,e_j]}`.
pub fn left_symmetric(a: &Algebra) -> Report {
    let ls = a.lefts();
    let n = a.dim();
    for i in 0..n {
        for j in i + 1..n {
            let br = vsub(a.prod(i, j), a.prod(j, i));
            let lhs = ls[i].commutator(&ls[j]);
            if let Some(k) = first_diff(&lhs, &a.left(&br)) {
                return Report::new("left_symmetric", LEFT_SYMMETRIC, Some(vec![i, j, k]));
            }
        }
    }
    Report::pass("left_symmetric", LEFT_SYMMETRIC)
}

pub fn associative(a: &Algebra) -> Report {
    let ls = a.lefts();
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            if let Some(k) = first_diff(&a.left(a.prod(i, j)), &ls[i].mul(&ls[j])) {
                return Report::new("associative", ASSOCIATIVE, Some(vec![i, j, k]));
            }
        }
    }
    Report::pass("associative", ASSOCIATIVE)
}

pub fn commutative(a: &Algebra) -> Report {
    let n = a.dim();
    for i in 0..n {
        for j in i + 1..n {
            if a.prod(i, j) != a.prod(j, i) {
                return Report::new("commutative", COMMUTATIVE, Some(vec![i, j]));
            }
        }
    }
    Report::pass("commutative", COMMUTATIVE)
}

/// Every product vanishes.
pub fn abelian(a: &Algebra) -> Report {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            if !is_zero_vec(a.prod(i, j)) {
                return Report::new("abelian", ZERO_PRODUCT, Some(vec![i, j]));
            }
        }
    }
    Report::pass("abelian", ZERO_PRODUCT)
}

/// Antisymmetry plus Jacobi, checked as `ad_{[e_i,e_j]} = [ad_i, ad_j]`.
pub fn jacobi_antisym(a: &Algebra) -> Report {
    let n = a.dim();
    for i in 0..n {
        for j in i..n {
            let s: Vector = a.prod(i, j).iter().zip(a.prod(j, i)).map(|(x, y)| x + y).collect();
            if !is_zero_vec(&s) {
                return Report::new("jacobi_antisym", JACOBI, Some(vec![i, j]));
            }
        }
    }
    let ls = a.lefts();
    for i in 0..n {
        for j in i + 1..n {
            if let Some(k) = first_diff(&a.left(a.prod(i, j)), &ls[i].commutator(&ls[j])) {
                return Report::new("jacobi_antisym", JACOBI, Some(vec![i, j, k]));
            }
        }
    }
    Report::pass("jacobi_antisym", JACOBI)
}

/// Jacobi for the commutator, cross-checked against the Bianchi route. A
/// disagreement between the two is reported as a failure.
pub fn lie_admissible(a: &Algebra) -> Report {
    let mut r = jacobi_antisym(&a.commutator());
    r.name = "lie_admissible".into();
    r.identity = LIE_ADMISSIBLE.into();
    if r.passed != lie_admissible_bianchi(a).passed {
        return Report::fail("lie_admissible", LIE_ADMISSIBLE, "Bianchi and Jacobi verdicts disagree");
    }
    r
}

/// Lie-admissibility through the first Bianchi identity of the curvature:
/// the cyclic sum of `K(u,v)w` is minus the Jacobiator of the commutator.
pub fn lie_admissible_bianchi(a: &Algebra) -> Report {
    const ID: &str = "K(u,v)w + K(v,w)u + K(w,u)v = 0";
    let n = a.dim();
    let k: Vec<Mat> = (0..n * n).map(|p| a.curvature(&unit(n, p / n), &unit(n, p % n))).collect();
    for i in 0..n {
        for j in i + 1..n {
            for l in j + 1..n {
                let s = vadd(&vadd(&k[i * n + j].col(l), &k[j * n + l].col(i)), &k[l * n + i].col(j));
                if !is_zero_vec(&s) {
                    return Report::new("bianchi", ID, Some(vec![i, j, l]));
                }
            }
        }
    }
    Report::pass("bianchi", ID)
}

pub fn check_all(a: &Algebra) -> Vec<Report> {
    vec![
        left_symmetric(a),
        associative(a),
        commutative(a),
        lie_admissible(a),
        jacobi_antisym(a),
        abelian(a),
    ]
}

/// Errors unless `a` is a Lie algebra.
pub fn require_lie(a: &Algebra) -> Result<()> {
    let r = jacobi_antisym(a);
    if r.passed {
        Ok(())
    } else {
        Err(Error::precondition(&r))
    }
}

pub fn require_lsa(a: &Algebra) -> Result<()> {
    let r = left_symmetric(a);
    if r.passed {
        Ok(())
    } else {
        Err(Error::precondition(&r))
    }
}

/// `E` is a derivation: `E(uv) = E(u)v + uE(v)`.
pub fn is_derivation(a: &Algebra, e: &Mat) -> Report {
    const ID: &str = "E(uv) = E(u)v + uE(v)";
    let n = a.dim();
    let cols: Vec<Vector> = (0..n).map(|j| e.col(j)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = e.apply(a.prod(i, j));
            let rhs = vadd(&a.mul(&cols[i], &unit(n, j)), &a.mul_basis_left(i, &cols[j]));
            if lhs != rhs {
                return Report::new("derivation", ID, Some(vec![i, j]));
            }
        }
    }
    Report::pass("derivation", ID)
}

/// Spans of products: `U.U`, its commutator part `D(U.U)`, its symmetric
/// part `S(U.U)`, and `powers[k-1] = U^k` for `k <= 4`, where `U^k` is
/// spanned by products `U^i . U^j` with `i + j = k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductSubspaces {
    pub uu: Subspace,
    pub duu: Subspace,
    pub suu: Subspace,
    pub powers: Vec<Subspace>,
}

pub fn product_subspaces(a: &Algebra) -> ProductSubspaces {
    let n = a.dim();
    let mut prods = Vec::new();
    let mut diffs = Vec::new();
    let mut sums = Vec::new();
    for i in 0..n {
        for j in 0..n {
            prods.push(a.prod(i, j).to_vec());
            diffs.push(vsub(a.prod(i, j), a.prod(j, i)));
            sums.push(vadd(a.prod(i, j), a.prod(j, i)));
        }
    }
    let mut powers = vec![Subspace::full(n)];
    for k in 2..=4 {
        let mut gens = Vec::new();
        for i in 1..k {
            for u in powers[i - 1].basis() {
                for v in powers[k - i - 1].basis() {
                    gens.push(a.mul(u, v));
                }
            }
        }
        powers.push(Subspace::span(n, &gens));
    }
    ProductSubspaces {
        uu: Subspace::span(n, &prods),
        duu: Subspace::span(n, &diffs),
        suu: Subspace::span(n, &sums),
        powers,
    }
}

/// Nijenhuis torsion `N_A(u,v) = [Au,Av] - A[Au,v] - A[u,Av] + A^2[u,v]`
/// for the bracket `b`, as the table of values on basis pairs.
pub fn nijenhuis(b: &Algebra, a: &Mat) -> Vec<Vector> {
    let n = b.dim();
    let cols: Vec<Vector> = (0..n).map(|j| a.col(j)).collect();
    let a2 = a.mul(a);
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let ei = unit(n, i);
            let ej = unit(n, j);
            let mut v = b.mul(&cols[i], &cols[j]);
            v = vsub(&v, &a.apply(&b.mul(&cols[i], &ej)));
            v = vsub(&v, &a.apply(&b.mul(&ei, &cols[j])));
            out.push(vadd(&v, &a2.apply(b.prod(i, j))));
        }
    }
    out
}

pub fn nijenhuis_vanishes(b: &Algebra, a: &Mat) -> Report {
    const ID: &str = "N_A(u,v) = [Au,Av] - A[Au,v] - A[u,Av] + A^2[u,v] = 0";
    let n = b.dim();
    let w = nijenhuis(b, a).iter().position(|v| !is_zero_vec(v)).map(|p| vec![p / n, p % n]);
    Report::new("nijenhuis", ID, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    /// 2-dim non-abelian Lie algebra [e1, e2] = e2.
    fn aff() -> Algebra {
        Algebra::from_entries(2, &[(0, 1, 1, int(1)), (1, 0, 1, int(-1))])
    }

    #[test]
    fn lie_checks() {
        let g = aff();
        assert!(jacobi_antisym(&g).passed);
        assert!(!commutative(&g).passed);
        assert!(!abelian(&g).passed);
        assert!(abelian(&Algebra::zero(3)).passed);
    }

    #[test]
    fn non_lsa_witness() {
        // e1.e1 = e2, e2.e1 = e1: not left symmetric.
        let a = Algebra::from_entries(2, &[(0, 0, 1, int(1)), (1, 0, 0, int(1))]);
        let r = left_symmetric(&a);
        assert!(!r.passed);
        assert_eq!(r.witness.as_ref().unwrap().len(), 3);
    }

    #[test]
    fn transport_identity_is_noop() {
        let g = aff();
        assert_eq!(g.transport(&Mat::identity(2)).unwrap(), g);
        let p = Mat::from_i64(&[&[1, 1], &[0, 1]]);
        let h = g.transport(&p).unwrap();
        assert!(jacobi_antisym(&h).passed);
        assert_eq!(h.transport(&p.inverse().unwrap()).unwrap(), g);
    }

    #[test]
    fn subspaces_of_nonabelian_family() {
        // e1.e2 = -e2.e1 = e1, e2.e2 = e2
        let a = Algebra::from_entries(2, &[(0, 1, 0, int(1)), (1, 0, 0, int(-1)), (1, 1, 1, int(1))]);
        let ps = product_subspaces(&a);
        assert_eq!(ps.uu, Subspace::full(2));
        assert_eq!(ps.duu, Subspace::span(2, &[unit(2, 0)]));
        assert_eq!(ps.suu, Subspace::span(2, &[unit(2, 1)]));
        assert_eq!(ps.uu, ps.duu.sum(&ps.suu));
        let z = product_subspaces(&Algebra::zero(3));
        assert!(z.powers[1..].iter().all(|s| s.dim() == 0));
    }

    #[test]
    fn identity_has_no_torsion() {
        let g = aff();
        assert!(nijenhuis_vanishes(&g, &Mat::identity(2)).passed);
        assert!(is_derivation(&g, &Mat::from_i64(&[&[0, 0], &[0, 1]])).passed);
    }
}
