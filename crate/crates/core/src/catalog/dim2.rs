//! Normal forms of 2-dimensional symplectic left-symmetric algebras and of
//! compatible pairs of them.

use num::Zero;

use super::{canonical, omega12, params, partner, CanonicalId, Family};
use crate::algebra::{commutative, product_subspaces, Algebra};
use crate::doubling::is_compatible;
use crate::error::{Error, Result};
use crate::exact::mat::{vadd, vscale, Vector};
use crate::exact::scalar::is_rational_cube;
use crate::exact::{Mat, Scalar};
use crate::forms::{symplectic_lsa, Bilinear};
use crate::report::Report;

/// Basis-independent data of a symplectic left-symmetric algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub dim_uu: usize,
    pub dim_duu: usize,
    pub dim_suu: usize,
    pub commutative: bool,
}

pub fn dim2_fingerprint(alg: &Algebra) -> Fingerprint {
    let ps = product_subspaces(alg);
    Fingerprint {
        dim_uu: ps.uu.dim(),
        dim_duu: ps.duu.dim(),
        dim_suu: ps.suu.dim(),
        commutative: commutative(alg).passed,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dim2Verdict {
    Trivial,
    Canonical { id: CanonicalId, fingerprint: Fingerprint },
}

/// Whether the family members at `a` and `b` are isomorphic as symplectic
/// algebras. Rescaling `e1 -> s e1, e2 -> e2 / s` sends `a` to `a / s^3` in
/// the commutative family and to `a / s` in the other one.
pub fn dim2_same_class(family: Family, a: &Scalar, b: &Scalar) -> bool {
    match family {
        Family::Dim2Abelian => !b.is_zero() && is_rational_cube(&(a / b)),
        Family::Dim2Nonabelian => !a.is_zero() && !b.is_zero(),
        _ => false,
    }
}

fn require_symplectic_lsa(alg: &Algebra, omega: &Bilinear, what: &str) -> Result<()> {
    if alg.dim() != 2 || omega.dim() != 2 {
        return Err(Error::Input(format!("{what}: dimension must be 2")));
    }
    for r in symplectic_lsa(alg, omega) {
        if !r.passed {
            return Err(Error::precondition(&r));
        }
    }
    Ok(())
}

fn basis(e1: &[Scalar], e2: &[Scalar]) -> Mat {
    Mat::from_cols(2, &[e1.to_vec(), e2.to_vec()])
}

fn check_form(omega: &Bilinear, p: &Mat) -> Result<()> {
    if omega.transport(p)? != omega12() {
        return Err(Error::Internal("normalized basis is not symplectic".into()));
    }
    Ok(())
}

fn mismatch(family: Family) -> Error {
    Error::Internal(format!("transported product does not match {family}"))
}

/// Finds a basis with `w = e1* ^ e2*` in which `alg` has the canonical form
/// of one of the two 2-dimensional families.
pub fn normalize_dim2_slsa(alg: &Algebra, omega: &Bilinear) -> Result<Dim2Verdict> {
    require_symplectic_lsa(alg, omega, "normalize")?;
    if alg.is_zero() {
        return Ok(Dim2Verdict::Trivial);
    }
    let g = omega.gram();
    let ps = product_subspaces(alg);
    let fingerprint = dim2_fingerprint(alg);
    let (family, p) = if fingerprint.commutative {
        // U.U is a Lagrangian line and e2 is any partner of its generator.
        if ps.uu.dim() != 1 {
            return Err(Error::Internal("commutative product with dim U.U != 1".into()));
        }
        let e1 = ps.uu.basis()[0].clone();
        let e2 = partner(g, &e1).ok_or(Error::Degenerate("symplectic form"))?;
        (Family::Dim2Abelian, basis(&e1, &e2))
    } else {
        // U = D(U.U) + S(U.U), both lines.
        if ps.duu.dim() != 1 || ps.suu.dim() != 1 {
            return Err(Error::Internal("non-commutative product without split U.U".into()));
        }
        let e1 = ps.duu.basis()[0].clone();
        let s = &ps.suu.basis()[0];
        let w = omega.eval(&e1, s);
        if w.is_zero() {
            return Err(Error::Internal("D(U.U) and S(U.U) are w-orthogonal".into()));
        }
        (Family::Dim2Nonabelian, basis(&e1, &vscale(&(Scalar::from_integer(1.into()) / w), s)))
    };
    check_form(omega, &p)?;
    let t = alg.transport(&p)?;
    let a = match family {
        Family::Dim2Abelian => t.prod(1, 1)[0].clone(),
        _ => t.prod(0, 1)[0].clone(),
    };
    let c = canonical(family, &params(&[("a", a.clone())])).map_err(|_| mismatch(family))?;
    if c.alg.constants() != t.constants() {
        return Err(mismatch(family));
    }
    let id = CanonicalId { family, params: params(&[("a", a)]), change_of_basis: p };
    Ok(Dim2Verdict::Canonical { id, fingerprint })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompatVerdict {
    /// One product is a scalar multiple of the other.
    TriviallyCompatible,
    Incompatible(Report),
    /// `swapped` means the canonical first product is the input `circ`.
    Family { id: CanonicalId, swapped: bool },
}

fn proportional(x: &Algebra, y: &Algebra) -> bool {
    if x.is_zero() || y.is_zero() {
        return true;
    }
    let k = x.constants().iter().position(|c| !c.is_zero()).expect("nonzero");
    let lambda = &y.constants()[k] / &x.constants()[k];
    x.scale(&lambda).constants() == y.constants()
}

/// `[e2 * e2]_{e1} + [e2 o e2]_{e1}` in the basis `(e1, e2 + t e1)`.
fn e1_defect(star: &Algebra, circ: &Algebra, e1: &[Scalar], e2: &[Scalar], t: &Scalar) -> Result<Scalar> {
    let p = basis(e1, &vadd(e2, &vscale(t, e1)));
    Ok(&star.transport(&p)?.prod(1, 1)[0] + &circ.transport(&p)?.prod(1, 1)[0])
}

/// Decides whether two symplectic left-symmetric structures on a plane are
/// trivially, non-trivially or not compatible, and in the non-trivial case
/// finds the basis realising one of the two canonical families.
pub fn classify_compatible_dim2(bullet: &Algebra, circ: &Algebra, omega: &Bilinear) -> Result<CompatVerdict> {
    require_symplectic_lsa(bullet, omega, "bullet")?;
    require_symplectic_lsa(circ, omega, "circ")?;
    if proportional(bullet, circ) {
        return Ok(CompatVerdict::TriviallyCompatible);
    }
    let rep = is_compatible(bullet, circ)?;
    if !rep.passed {
        return Ok(CompatVerdict::Incompatible(rep));
    }
    let (cb, cc) = (commutative(bullet).passed, commutative(circ).passed);
    let (family, star, other, swapped) = match (cb, cc) {
        (true, true) => {
            return Err(Error::Internal("two commutative non-proportional structures are compatible".into()))
        }
        (false, true) => (Family::CompatFamily1, bullet, circ, false),
        (true, false) => (Family::CompatFamily1, circ, bullet, true),
        (false, false) => (Family::CompatFamily2, bullet, circ, false),
    };
    // e1 spans U o U in the first family and D(U * U) in the second.
    let line = if family == Family::CompatFamily1 { product_subspaces(other).uu } else { product_subspaces(star).duu };
    if line.dim() != 1 {
        return Err(Error::Internal(format!("{family}: distinguished line has dim {}", line.dim())));
    }
    let e1: Vector = line.basis()[0].clone();
    let e2 = partner(omega.gram(), &e1).ok_or(Error::Degenerate("symplectic form"))?;
    let zero = Scalar::zero();
    let one = Scalar::from_integer(1.into());
    let f0 = e1_defect(star, other, &e1, &e2, &zero)?;
    let slope = e1_defect(star, other, &e1, &e2, &one)? - &f0;
    let t = if slope.is_zero() { zero } else { -f0 / slope };
    let p = basis(&e1, &vadd(&e2, &vscale(&t, &e1)));
    check_form(omega, &p)?;
    let (ts, tc) = (star.transport(&p)?, other.transport(&p)?);
    let ps = match family {
        Family::CompatFamily1 => params(&[("a", ts.prod(0, 1)[0].clone()), ("b", tc.prod(1, 1)[0].clone())]),
        _ => params(&[
            ("a", ts.prod(0, 1)[0].clone()),
            ("b", ts.prod(1, 1)[0].clone()),
            ("c", tc.prod(0, 1)[0].clone()),
        ]),
    };
    let c = canonical(family, &ps).map_err(|_| mismatch(family))?;
    let canon_circ = c.circ.as_ref().expect("pair family");
    if c.alg.constants() != ts.constants() || canon_circ.constants() != tc.constants() {
        return Err(mismatch(family));
    }
    Ok(CompatVerdict::Family { id: CanonicalId { family, params: ps, change_of_basis: p }, swapped })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};

    #[test]
    fn nonabelian_parameter_rescales() {
        let c = canonical(Family::Dim2Nonabelian, &params(&[("a", int(3))])).unwrap();
        let p = Mat::from_rows(vec![vec![int(3), int(0)], vec![int(0), frac(1, 3)]]);
        let t = c.alg.transport(&p).unwrap();
        let one = canonical(Family::Dim2Nonabelian, &params(&[("a", int(1))])).unwrap();
        assert_eq!(t.constants(), one.alg.constants());
        assert_eq!(c.omega.transport(&p).unwrap(), c.omega);
    }

    #[test]
    fn canonical_inputs_are_fixed_points() {
        for (f, a) in [(Family::Dim2Abelian, frac(-1, 2)), (Family::Dim2Nonabelian, int(3))] {
            let c = canonical(f, &params(&[("a", a.clone())])).unwrap();
            match normalize_dim2_slsa(&c.alg, &c.omega).unwrap() {
                Dim2Verdict::Canonical { id, .. } => {
                    assert_eq!(id.family, f);
                    assert!(dim2_same_class(f, id.param("a"), &a));
                }
                Dim2Verdict::Trivial => panic!("not trivial"),
            }
        }
        let z = normalize_dim2_slsa(&Algebra::zero(2), &omega12()).unwrap();
        assert_eq!(z, Dim2Verdict::Trivial);
    }

    #[test]
    fn proportional_pair_is_trivial() {
        let c = canonical(Family::Dim2Nonabelian, &params(&[("a", int(1))])).unwrap();
        let v = classify_compatible_dim2(&c.alg, &c.alg.scale(&int(2)), &c.omega).unwrap();
        assert_eq!(v, CompatVerdict::TriviallyCompatible);
    }

    #[test]
    fn abelian_pair_is_incompatible() {
        let x = canonical(Family::Dim2Abelian, &params(&[("a", int(1))])).unwrap();
        // e1.e1 = e2 is commutative and symplectic for the same form.
        let y = Algebra::from_entries(2, &[(0, 0, 1, int(1))]);
        let v = classify_compatible_dim2(&x.alg, &y, &x.omega).unwrap();
        assert!(matches!(v, CompatVerdict::Incompatible(_)), "{v:?}");
    }
}
