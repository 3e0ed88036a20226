//! Generators shared by the property suites. Proptest supplies a seed; the
//! exact objects are drawn from the library's seeded generators so that a
//! failing case can be replayed from the seed alone.

#![allow(dead_code)]

use lsa_forge::catalog::random::{random_canonical, random_mat, random_type_one, small, Rng64};
use lsa_forge::catalog::Family;
use lsa_forge::exact::int;
use lsa_forge::phase::triangle_product;
use lsa_forge::Algebra;
use rand::Rng;

/// Structure constants in `{-1, 0, 1}` with roughly half of them zero.
pub fn random_algebra(rng: &mut Rng64, n: usize) -> Algebra {
    Algebra::from_fn(n, |_, _| {
        (0..n).map(|_| if rng.gen_bool(0.5) { int(0) } else { int(rng.gen_range(-1..=1)) }).collect()
    })
}

/// A mix of generic products and products known to be left symmetric or
/// associative, in dimension at most 4.
pub fn mixed_algebra(rng: &mut Rng64) -> Algebra {
    match rng.gen_range(0..6) {
        0 => {
            let n = rng.gen_range(1..=3);
            random_algebra(rng, n)
        }
        1 => random_canonical(rng, Family::Dim2Abelian).unwrap().alg,
        2 => random_canonical(rng, Family::Dim2Nonabelian).unwrap().alg,
        3 => triangle_product(&random_canonical(rng, Family::Dim2Nonabelian).unwrap().alg),
        4 => random_type_one(rng, 1, 2).unwrap().build().unwrap().0,
        _ => {
            // A small perturbation of a left-symmetric product.
            let a = random_canonical(rng, Family::Dim2Abelian).unwrap().alg;
            let mut c = a.constants().to_vec();
            let k = rng.gen_range(0..c.len());
            c[k] += small(rng);
            Algebra::from_fn(2, |i, j| c[(i * 2 + j) * 2..(i * 2 + j) * 2 + 2].to_vec())
        }
    }
}

pub fn random_square(rng: &mut Rng64, n: usize) -> lsa_forge::Mat {
    random_mat(rng, n, n)
}
