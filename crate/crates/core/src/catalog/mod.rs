//! Canonical families and their normal-form algorithms: the 2-dimensional
//! symplectic left-symmetric algebras and compatible pairs, associative
//! symplectic models, and the quadratic symplectic builder.

mod assoc;
mod dim2;
mod quadratic;
pub mod random;

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;

pub use assoc::{
    assoc_chain, normalize_assoc_symp, type_two_constraints, AssocModel, AssocNormal, TypeOne, TypeTwo,
};
pub use dim2::{
    classify_compatible_dim2, dim2_fingerprint, dim2_same_class, normalize_dim2_slsa, CompatVerdict, Dim2Verdict,
    Fingerprint,
};
pub use quadratic::{build_quadratic_symplectic, QuadraticSymplectic};

use crate::algebra::{associative, left_symmetric, product_subspaces, Algebra};
use crate::error::{Error, Result};
use crate::exact::mat::{unit, Vector};
use crate::exact::{Mat, Scalar};
use crate::forms::{is_invariant_form, Bilinear};
use crate::io::{self, Params, Structure};
use crate::report::{Certificate, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Dim2Abelian,
    Dim2Nonabelian,
    CompatFamily1,
    CompatFamily2,
    AssocTypeOne,
    AssocTypeTwo,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Dim2Abelian,
        Family::Dim2Nonabelian,
        Family::CompatFamily1,
        Family::CompatFamily2,
        Family::AssocTypeOne,
        Family::AssocTypeTwo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Dim2Abelian => "dim2_abelian",
            Family::Dim2Nonabelian => "dim2_nonabelian",
            Family::CompatFamily1 => "compat_family1",
            Family::CompatFamily2 => "compat_family2",
            Family::AssocTypeOne => "assoc_type_one",
            Family::AssocTypeTwo => "assoc_type_two",
        }
    }

    pub fn from_name(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown family `{s}`")))
    }

    /// The shipped data file for the family.
    pub fn source(self) -> &'static str {
        match self {
            Family::Dim2Abelian => include_str!("../../catalog/dim2_abelian.json"),
            Family::Dim2Nonabelian => include_str!("../../catalog/dim2_nonabelian.json"),
            Family::CompatFamily1 => include_str!("../../catalog/compat_family1.json"),
            Family::CompatFamily2 => include_str!("../../catalog/compat_family2.json"),
            Family::AssocTypeOne => include_str!("../../catalog/assoc_type_one.json"),
            Family::AssocTypeTwo => include_str!("../../catalog/assoc_type_two.json"),
        }
    }

    /// Parameters that must be bound.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            Family::Dim2Abelian | Family::Dim2Nonabelian => &["a"],
            Family::CompatFamily1 => &["a", "b"],
            Family::CompatFamily2 => &["a", "b", "c"],
            Family::AssocTypeOne => &["m", "n"],
            Family::AssocTypeTwo => &["p"],
        }
    }

    /// Whether the family's parameters must be nonzero.
    pub fn nonzero_params(self) -> bool {
        self != Family::AssocTypeOne
    }

    pub fn is_pair(self) -> bool {
        matches!(self, Family::CompatFamily1 | Family::CompatFamily2)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A recognised normal form. `alg.transport(&change_of_basis)` is exactly
/// the canonical algebra of `family` at `params`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalId {
    pub family: Family,
    pub params: BTreeMap<String, Scalar>,
    pub change_of_basis: Mat,
}

impl CanonicalId {
    pub fn param(&self, name: &str) -> &Scalar {
        &self.params[name]
    }
}

/// A catalog instance: the algebra, its symplectic form and, for compatible
/// pairs, the second product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub alg: Algebra,
    pub omega: Bilinear,
    pub circ: Option<Algebra>,
    pub structure: Structure,
}

/// The product whose left multiplications are the given matrices.
pub fn product_from_lefts(lefts: &[Mat]) -> Algebra {
    let n = lefts.len();
    Algebra::from_fn(n, |i, j| lefts[i].col(j))
}

/// The second product of a pair file, stored as left multiplications
/// `L_circ_<label>`.
pub fn circ_of(s: &Structure) -> Result<Algebra> {
    let n = s.alg.dim();
    let lefts = (0..n)
        .map(|i| s.endo(&format!("L_circ_{}", s.alg.labels()[i])).cloned())
        .collect::<Result<Vec<Mat>>>()?;
    product_from_lefts(&lefts).with_labels(s.alg.labels().to_vec())
}

fn require(c: &Certificate) -> Result<()> {
    match c.failures().next() {
        Some(r) => Err(Error::precondition(r)),
        None => Ok(()),
    }
}

fn u_power_is_zero(alg: &Algebra, k: usize) -> bool {
    product_subspaces(alg).powers[k - 1].dim() == 0
}

/// Defining predicates of a catalog instance.
pub fn family_certificate(family: Family, c: &Canonical) -> Result<Certificate> {
    let mut checks = Vec::new();
    match family {
        Family::AssocTypeOne | Family::AssocTypeTwo => {
            checks.push(associative(&c.alg));
            checks.push(is_invariant_form(&c.omega, &c.alg));
            if family == Family::AssocTypeOne {
                checks.push(Report::from_bool("cube_zero", "U^3 = 0", u_power_is_zero(&c.alg, 3)));
            } else {
                checks.push(Report::from_bool("fourth_power_zero", "U^4 = 0", u_power_is_zero(&c.alg, 4)));
                checks.push(Report::from_bool("cube_nonzero", "U^3 != 0", !u_power_is_zero(&c.alg, 3)));
            }
        }
        _ => {
            checks.push(left_symmetric(&c.alg));
            checks.push(is_invariant_form(&c.omega, &c.alg));
            if let Some(circ) = &c.circ {
                let mut l = left_symmetric(circ);
                l.name = "circ_left_symmetric".into();
                let mut i = is_invariant_form(&c.omega, circ);
                i.name = "circ_invariant_form".into();
                checks.push(l);
                checks.push(i);
                checks.push(crate::doubling::is_compatible(&c.alg, circ)?);
            }
        }
    }
    Ok(Certificate::new(family.name(), checks))
}

/// Instantiates the family's data file at `params` and checks it.
pub fn canonical(family: Family, params: &Params) -> Result<Canonical> {
    for p in family.params() {
        match params.get(*p) {
            None => return Err(Error::Input(format!("{family}: missing parameter `{p}`"))),
            Some(v) if v.is_zero() && family.nonzero_params() => {
                return Err(Error::Input(format!("{family}: parameter `{p}` must be nonzero")))
            }
            Some(_) => {}
        }
    }
    if let Some(extra) = params.keys().find(|k| !family.params().contains(&k.as_str())) {
        return Err(Error::Input(format!("{family}: unknown parameter `{extra}`")));
    }
    let structure = io::parse_structure(family.source(), params)?;
    let omega = structure.form("omega")?.clone();
    let circ = if family.is_pair() { Some(circ_of(&structure)?) } else { None };
    let c = Canonical { alg: structure.alg.clone(), omega, circ, structure };
    require(&family_certificate(family, &c)?)?;
    Ok(c)
}

/// Shorthand for building parameter maps in code.
pub fn params(kv: &[(&str, Scalar)]) -> Params {
    kv.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// `e1* ^ e2*` on a 2-dimensional space.
pub fn omega12() -> Bilinear {
    Bilinear::skew(Mat::from_i64(&[&[0, 1], &[-1, 0]])).expect("skew")
}

/// First index `j` with `w(u, e_j) != 0`, and `e_j / w(u, e_j)`.
pub(crate) fn partner(g: &Mat, u: &[Scalar]) -> Option<Vector> {
    let n = u.len();
    (0..n).find_map(|j| {
        let w: Scalar = (0..n).map(|i| &u[i] * &g[(i, j)]).sum();
        (!w.is_zero()).then(|| unit(n, j).into_iter().map(|x| x / &w).collect())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};

    #[test]
    fn dim2_families_conform() {
        for a in [int(1), int(-1), int(2), frac(1, 2)] {
            let ab = canonical(Family::Dim2Abelian, &params(&[("a", a.clone())])).unwrap();
            assert_eq!(ab.alg.prod(1, 1), &[a.clone(), int(0)]);
            let nab = canonical(Family::Dim2Nonabelian, &params(&[("a", a.clone())])).unwrap();
            let br = nab.alg.commutator();
            assert_eq!(br.prod(0, 1), &[&a * int(2), int(0)]);
        }
    }

    #[test]
    fn parameters_are_validated() {
        assert!(canonical(Family::Dim2Abelian, &params(&[("a", int(0))])).is_err());
        assert!(canonical(Family::Dim2Abelian, &Params::new()).is_err());
        assert!(canonical(Family::Dim2Abelian, &params(&[("a", int(1)), ("z", int(1))])).is_err());
    }

    #[test]
    fn compat_families_carry_both_products() {
        let f1 = canonical(Family::CompatFamily1, &params(&[("a", int(1)), ("b", int(1))])).unwrap();
        let circ = f1.circ.unwrap();
        assert_eq!(circ.prod(1, 1), &[int(1), int(0)]);
        let f2 = canonical(Family::CompatFamily2, &params(&[("a", int(1)), ("b", int(1)), ("c", int(2))])).unwrap();
        assert_eq!(f2.circ.unwrap().prod(1, 0), &[int(-2), int(0)]);
    }
}
