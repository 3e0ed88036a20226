mod common;

use common::random_square;
use lsa_forge::algebra::left_symmetric;
use lsa_forge::catalog::random::{random_canonical, random_invertible, rng, Rng64};
use lsa_forge::catalog::Family;
use lsa_forge::exact::int;
use lsa_forge::exact::mat::unit;
use lsa_forge::forms::levi_civita;
use lsa_forge::operators::{delta_op, o_op};
use lsa_forge::phase::{is_lie_extendible, k0, metric0, phase_product, rho, rho_star, verify_para_kahler};
use lsa_forge::smatrix::{dual_product_from_r, Tensor2};
use lsa_forge::Algebra;
use proptest::prelude::*;
use rand::Rng;

fn dim2_lsa(rng: &mut Rng64) -> Algebra {
    let f = if rng.gen_bool(0.5) { Family::Dim2Abelian } else { Family::Dim2Nonabelian };
    random_canonical(rng, f).unwrap().alg
}

/// A left-symmetric product on the plane and one on its dual: another
/// catalog product, zero, or the dual product of a random `r` when that
/// happens to be left symmetric.
fn lsa_pair(rng: &mut Rng64) -> (Algebra, Algebra) {
    let u = dim2_lsa(rng);
    let dual = match rng.gen_range(0..3) {
        0 => dim2_lsa(rng),
        1 => Algebra::zero(2),
        _ => (0..20)
            .map(|_| dual_product_from_r(&u, &Tensor2::new(random_square(rng, 2))))
            .find(|d| left_symmetric(d).passed)
            .unwrap_or_else(|| Algebra::zero(2)),
    };
    (u, dual)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rho_star_is_the_transpose_of_rho(seed in any::<u64>()) {
        let mut r = rng(seed);
        let u = dim2_lsa(&mut r);
        let dual = dual_product_from_r(&u, &Tensor2::new(random_square(&mut r, 2)));
        for x in 0..2 {
            for a in 0..2 {
                let (ex, ea) = (unit(2, x), unit(2, a));
                prop_assert_eq!(rho_star(&u, &dual, &ea, &ex), rho(&u, &dual, &ex, &ea).transpose());
            }
        }
    }

    #[test]
    fn extendible_pairs_give_para_kaehler_phase_spaces(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (u, dual) = lsa_pair(&mut r);
        prop_assume!(is_lie_extendible(&u, &dual).passed);
        let ext = phase_product(&u, &dual).unwrap();
        let lie = ext.commutator();
        // The Levi-Civita product of <,>_0 is the extended product itself.
        let lc = levi_civita(&metric0(2), &lie).unwrap();
        prop_assert_eq!(lc.constants(), ext.constants());
        // u.a = -L_u^t a
        for i in 0..2 {
            for a in 0..2 {
                let got = &ext.prod(i, 2 + a)[2..];
                let want: Vec<_> = u.left_basis(i).transpose().col(a).into_iter().map(|x| -x).collect();
                prop_assert_eq!(got, want.as_slice());
            }
        }
        prop_assert!(verify_para_kahler(&lie, &metric0(2), &k0(2)).unwrap().passed);
    }

    #[test]
    fn o_operator_is_delta_of_the_inverse(seed in any::<u64>(), lambda in 1i64..=3) {
        let mut r = rng(seed);
        let alg = dim2_lsa(&mut r);
        let a = if r.gen_bool(0.3) { lsa_forge::Mat::identity(2).scale(&int(lambda)) } else { random_invertible(&mut r, 2) };
        let inv = a.inverse().unwrap();
        let o = o_op(&a, &alg);
        let d = delta_op(&inv, &alg);
        // O(A)(X,Y) = -A delta(A^-1)(AX, AY)
        for i in 0..2 {
            for j in 0..2 {
                let want: Vec<_> = a.apply(&d.mul(&a.col(i), &a.col(j))).into_iter().map(|x| -x).collect();
                prop_assert_eq!(o.prod(i, j), want.as_slice());
            }
        }
        prop_assert_eq!(o.is_zero(), d.is_zero());
    }
}
