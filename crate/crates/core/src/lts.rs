//! Lie triple systems.

use crate::error::{Error, Result};
use crate::exact::mat::{is_zero_vec, unit, vadd, vaxpy, vsub, vzero, Vector};
use crate::exact::Scalar;
use crate::report::{Certificate, Report};

/// Trilinear map `L(x, y, z)` given on basis triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieTriple {
    n: usize,
    t: Vec<Vector>,
}

impl LieTriple {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize) -> Vector) -> Result<Self> {
        let mut t = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = f(i, j, k);
                    if v.len() != n {
                        return Err(Error::DimensionMismatch { expected: n, got: v.len() });
                    }
                    t.push(v);
                }
            }
        }
        Ok(LieTriple { n, t })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn basis(&self, i: usize, j: usize, k: usize) -> &[Scalar] {
        &self.t[(i * self.n + j) * self.n + k]
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        let n = self.n;
        let mut out = vzero(n);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !num::Zero::is_zero(*v)) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !num::Zero::is_zero(*v)) {
                let xy = xi * yj;
                for (k, zk) in z.iter().enumerate().filter(|(_, v)| !num::Zero::is_zero(*v)) {
                    vaxpy(&mut out, &(&xy * zk), self.basis(i, j, k));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.t.iter().all(|v| is_zero_vec(v))
    }
}

/// Alternating in the first two slots, cyclic identity, and the
/// derivation law for `L(u, v, .)`.
pub fn verify_lts(l: &LieTriple) -> Certificate {
    let n = l.dim();
    let alt = (|| {
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    if !is_zero_vec(&vadd(l.basis(i, j, k), l.basis(j, i, k))) {
                        return Some(vec![i, j, k]);
                    }
                }
            }
        }
        None
    })();
    let cyc = (|| {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let s = vadd(&vadd(l.basis(i, j, k), l.basis(j, k, i)), l.basis(k, i, j));
                    if !is_zero_vec(&s) {
                        return Some(vec![i, j, k]);
                    }
                }
            }
        }
        None
    })();
    let der = (|| {
        for u in 0..n {
            for v in 0..n {
                let d = |w: &[Scalar]| l.eval(&unit(n, u), &unit(n, v), w);
                for x in 0..n {
                    let dx = d(&unit(n, x));
                    for y in 0..n {
                        let dy = d(&unit(n, y));
                        for z in 0..n {
                            let (ex, ey, ez) = (unit(n, x), unit(n, y), unit(n, z));
                            let lhs = d(l.basis(x, y, z));
                            let r1 = l.eval(&dx, &ey, &ez);
                            let r2 = l.eval(&ex, &dy, &ez);
                            let r3 = l.eval(&ex, &ey, &d(&ez));
                            if !is_zero_vec(&vsub(&lhs, &vadd(&vadd(&r1, &r2), &r3))) {
                                return Some(vec![u, v, x, y, z]);
                            }
                        }
                    }
                }
            }
        }
        None
    })();
    Certificate::new(
        "lie_triple_system",
        vec![
            Report::new("alternating", "L(x,x,z) = 0", alt),
            Report::new("cyclic", "L(x,y,z) + L(y,z,x) + L(z,x,y) = 0", cyc),
            Report::new(
                "derivation",
                "L(u,v,L(x,y,z)) = L(L(u,v,x),y,z) + L(x,L(u,v,y),z) + L(x,y,L(u,v,z))",
                der,
            ),
        ],
    )
}
