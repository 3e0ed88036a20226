//! Multi-indexed tensors and the representation-invariance engine.
//!
//! A tensor of order `m` lives in `F_1 (x) ... (x) F_m` where each factor is
//! `U` or `U*`. The tag of a slot names the representation on that factor:
//! `Ad` and `L` act on a `U` factor, `AdDual` and `LDual` act on a `U*`
//! factor by `-rho(X)^t`. A multilinear map `U x U -> U` is thus a tensor in
//! `U* (x) U* (x) U` with input slots first.

use num::Zero;

use crate::algebra::Algebra;
use crate::exact::mat::{Mat, Vector};
use crate::exact::Scalar;
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rep {
    Ad,
    L,
    LDual,
    AdDual,
}

/// Left multiplications and adjoint maps of the basis, for `Rep` lookup.
#[derive(Clone, Debug)]
pub struct Reps {
    l: Vec<Mat>,
    ad: Vec<Mat>,
}

impl Reps {
    /// `L` from the product, `ad` from its commutator.
    pub fn of_lsa(a: &Algebra) -> Self {
        let l = a.lefts();
        let ad = (0..a.dim()).map(|i| l[i].sub(&a.right_basis(i))).collect();
        Reps { l, ad }
    }

    /// For a Lie algebra stored as its bracket, `L = ad`.
    pub fn of_lie(g: &Algebra) -> Self {
        let l = g.lefts();
        Reps { ad: l.clone(), l }
    }

    /// `L` from `lsa`, `ad` from the bracket `lie`.
    pub fn of_pair(lsa: &Algebra, lie: &Algebra) -> Self {
        Reps { l: lsa.lefts(), ad: lie.lefts() }
    }

    pub fn dim(&self) -> usize {
        self.l.len()
    }

    fn mat(&self, rep: Rep, x: usize) -> &Mat {
        match rep {
            Rep::Ad | Rep::AdDual => &self.ad[x],
            Rep::L | Rep::LDual => &self.l[x],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    n: usize,
    order: usize,
    data: Vec<Scalar>,
}

impl Tensor {
    pub fn zeros(n: usize, order: usize) -> Self {
        Tensor { n, order, data: vec![Scalar::zero(); n.pow(order as u32)] }
    }

    pub fn from_fn(n: usize, order: usize, mut f: impl FnMut(&[usize]) -> Scalar) -> Self {
        let mut t = Self::zeros(n, order);
        let mut idx = vec![0; order];
        for flat in 0..t.data.len() {
            t.unflatten(flat, &mut idx);
            t.data[flat] = f(&idx);
        }
        t
    }

    /// Bilinear map given on basis pairs, as a tensor in `U* (x) U* (x) U`
    /// (or its dual-typed analogues): `T[i][j][k] = <e_k*, f(e_i, e_j)>`.
    pub fn from_bilinear_map(n: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut t = Self::zeros(n, 3);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                for (k, x) in v.into_iter().enumerate() {
                    t.data[(i * n + j) * n + k] = x;
                }
            }
        }
        t
    }

    /// Endomorphism as a tensor in `U* (x) U`: `T[j][i] = A[i][j]`.
    pub fn from_endo(a: &Mat) -> Self {
        Self::from_fn(a.rows(), 2, |ix| a[(ix[1], ix[0])].clone())
    }

    /// Coefficient matrix of an order-2 tensor.
    pub fn from_matrix(m: &Mat) -> Self {
        Self::from_fn(m.rows(), 2, |ix| m[(ix[0], ix[1])].clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.data[self.flatten(idx)]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn flatten(&self, idx: &[usize]) -> usize {
        idx.iter().fold(0, |acc, &i| acc * self.n + i)
    }

    fn unflatten(&self, mut flat: usize, idx: &mut [usize]) {
        for s in (0..self.order).rev() {
            idx[s] = flat % self.n;
            flat /= self.n;
        }
    }

    /// First multi-index with a nonzero entry.
    pub fn first_nonzero(&self) -> Option<Vec<usize>> {
        let flat = self.data.iter().position(|x| !x.is_zero())?;
        let mut idx = vec![0; self.order];
        self.unflatten(flat, &mut idx);
        Some(idx)
    }

    /// Action of the basis element `e_x` through the given slot representations.
    pub fn act(&self, reps: &Reps, tags: &[Rep], x: usize) -> Tensor {
        assert_eq!(tags.len(), self.order, "one tag per slot");
        assert_eq!(reps.dim(), self.n, "representation dimension");
        let mut out = Tensor::zeros(self.n, self.order);
        let mut idx = vec![0; self.order];
        for flat in 0..self.data.len() {
            let v = &self.data[flat];
            if v.is_zero() {
                continue;
            }
            self.unflatten(flat, &mut idx);
            for (s, &tag) in tags.iter().enumerate() {
                let m = reps.mat(tag, x);
                let old = idx[s];
                for new in 0..self.n {
                    // U factor: coefficient moves by rho(X)[new][old];
                    // U* factor: by -rho(X)[old][new].
                    let coef = match tag {
                        Rep::Ad | Rep::L => m[(new, old)].clone(),
                        Rep::AdDual | Rep::LDual => -m[(old, new)].clone(),
                    };
                    if coef.is_zero() {
                        continue;
                    }
                    idx[s] = new;
                    let f = out.flatten(&idx);
                    out.data[f] += coef * v;
                }
                idx[s] = old;
            }
        }
        out
    }
}

/// Checks `X . T = 0` for every basis element `X`. The witness is
/// `[x, i_1, ..., i_m]`.
pub fn invariance_check(name: &str, identity: &str, t: &Tensor, tags: &[Rep], reps: &Reps) -> Report {
    for x in 0..t.n() {
        if let Some(idx) = t.act(reps, tags, x).first_nonzero() {
            let mut w = vec![x];
            w.extend(idx);
            return Report::new(name, identity, Some(w));
        }
    }
    Report::pass(name, identity)
}
