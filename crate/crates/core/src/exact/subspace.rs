//! Subspaces of Q^n in canonical (reduced echelon) form.

use num::Zero;

use super::mat::{dot, is_zero_vec, vaxpy, Mat, Vector};
use super::scalar::{frac, Scalar};
use crate::error::{Error, Result};

/// Basis vectors are the nonzero rows of a reduced row echelon form, so two
/// subspaces are equal iff their bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        assert!(vectors.iter().all(|v| v.len() == ambient), "vector length");
        let (r, pivots) = Mat::from_rows(vectors.to_vec()).rref();
        Subspace { ambient, basis: (0..pivots.len()).map(|i| r.row(i).to_vec()).collect() }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Mat::identity(ambient).row_vecs() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        // Reduce against the echelon basis.
        let mut r = v.to_vec();
        for b in &self.basis {
            let p = b.iter().position(|x| !x.is_zero()).expect("nonzero basis row");
            let c = -r[p].clone();
            vaxpy(&mut r, &c, b);
        }
        is_zero_vec(&r)
    }

    pub fn contains_subspace(&self, o: &Subspace) -> bool {
        o.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        let mut all = self.basis.clone();
        all.extend(o.basis.iter().cloned());
        Subspace::span(self.ambient, &all)
    }

    /// Annihilator for the standard pairing of Q^n with itself.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient);
        }
        Subspace::span(self.ambient, &Mat::from_rows(self.basis.clone()).kernel())
    }

    pub fn intersection(&self, o: &Subspace) -> Subspace {
        self.annihilator().sum(&o.annihilator()).annihilator()
    }

    /// Greedy complement of `self` inside `outer`, scanning `outer`'s
    /// canonical basis smallest pivot first.
    pub fn complement_in(&self, outer: &Subspace) -> Result<Subspace> {
        if !outer.contains_subspace(self) {
            return Err(Error::NotContained);
        }
        let mut cur = self.clone();
        let mut picked = Vec::new();
        for b in &outer.basis {
            if !cur.contains(b) {
                picked.push(b.clone());
                cur = cur.sum(&Subspace::span(self.ambient, std::slice::from_ref(b)));
            }
        }
        Ok(Subspace::span(self.ambient, &picked))
    }

    /// Columns of this basis as a matrix.
    pub fn to_cols(&self) -> Mat {
        Mat::from_cols(self.ambient, &self.basis)
    }
}

fn form(g: &Mat, u: &[Scalar], v: &[Scalar]) -> Scalar {
    dot(u, &g.apply(v))
}

/// `{u : omega(s, u) = 0 for all s in S}` for the Gram matrix `g`.
pub fn symp_orthogonal(g: &Mat, s: &Subspace) -> Subspace {
    if s.dim() == 0 {
        return Subspace::full(s.ambient());
    }
    let rows: Vec<Vector> = s.basis().iter().map(|b| g.transpose().apply(b)).collect();
    Subspace::span(s.ambient(), &Mat::from_rows(rows).kernel())
}

pub fn lagrangian_complement(g: &Mat, l: &Subspace) -> Result<Subspace> {
    lagrangian_complement_in(g, &Subspace::full(l.ambient()), l)
}

/// Lagrangian complement of `l` inside `ambient`, where `omega` restricts to
/// a symplectic form on `ambient`. Takes the greedy complement `C` and
/// corrects it to `c_i + 1/2 sum_j omega(c_i, c_j) l_j` with `l_j` the
/// `omega`-dual basis of `l`.
pub fn lagrangian_complement_in(g: &Mat, ambient: &Subspace, l: &Subspace) -> Result<Subspace> {
    if !ambient.contains_subspace(l) {
        return Err(Error::NotContained);
    }
    if 2 * l.dim() != ambient.dim() {
        return Err(Error::NoLagrangianComplement("dimension is not half the ambient dimension"));
    }
    for a in l.basis() {
        for b in l.basis() {
            if !form(g, a, b).is_zero() {
                return Err(Error::NoLagrangianComplement("subspace is not isotropic"));
            }
        }
    }
    let c = l.complement_in(ambient)?;
    let k = l.dim();
    let m = Mat::from_fn(k, k, |i, j| form(g, &c.basis()[i], &l.basis()[j]));
    let x = m.inverse().ok_or(Error::Degenerate("symplectic form on the ambient subspace"))?;
    let n = l.ambient();
    let dual: Vec<Vector> = (0..k)
        .map(|j| {
            let mut v = vec![Scalar::zero(); n];
            for (t, lt) in l.basis().iter().enumerate() {
                vaxpy(&mut v, &x[(t, j)], lt);
            }
            v
        })
        .collect();
    let half = frac(1, 2);
    let w: Vec<Vector> = (0..k)
        .map(|i| {
            let mut v = c.basis()[i].clone();
            for (j, lj) in dual.iter().enumerate() {
                let coef = &half * form(g, &c.basis()[i], &c.basis()[j]);
                vaxpy(&mut v, &coef, lj);
            }
            v
        })
        .collect();
    Ok(Subspace::span(n, &w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::mat::unit;
    use crate::exact::scalar::int;

    fn std_omega(n: usize) -> Mat {
        let mut g = Mat::zeros(2 * n, 2 * n);
        for i in 0..n {
            g[(2 * i, 2 * i + 1)] = int(1);
            g[(2 * i + 1, 2 * i)] = int(-1);
        }
        g
    }

    #[test]
    fn complement_of_axis() {
        let a = Subspace::span(2, &[unit(2, 0)]);
        let c = a.complement_in(&Subspace::full(2)).unwrap();
        assert_eq!(c, Subspace::span(2, &[unit(2, 1)]));
        assert!(Subspace::full(2).complement_in(&a).is_err());
    }

    #[test]
    fn lagrangian_in_q4() {
        let g = std_omega(2);
        let l = Subspace::span(4, &[unit(4, 0), unit(4, 2)]);
        let w = lagrangian_complement(&g, &l).unwrap();
        assert_eq!(w, Subspace::span(4, &[unit(4, 1), unit(4, 3)]));
    }

    #[test]
    fn lagrangian_line_pairs_to_one() {
        let g = std_omega(1);
        let l = Subspace::span(2, &[vec![int(1), int(1)]]);
        let w = lagrangian_complement(&g, &l).unwrap();
        assert_eq!(w.dim(), 1);
        assert_eq!(form(&g, &w.basis()[0], &l.basis()[0]), int(1));
    }

    #[test]
    fn intersection_and_orthogonal() {
        let a = Subspace::span(3, &[unit(3, 0), unit(3, 1)]);
        let b = Subspace::span(3, &[unit(3, 1), unit(3, 2)]);
        assert_eq!(a.intersection(&b), Subspace::span(3, &[unit(3, 1)]));
        let g = std_omega(1);
        let l = Subspace::span(2, &[unit(2, 0)]);
        assert_eq!(symp_orthogonal(&g, &l), l);
    }
}
