//! Seeded random instances for property tests, benches and the CLI.
//! Entries are small rationals so exact arithmetic stays cheap.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use num::Zero;

use super::{canonical, params, Canonical, Family, TypeOne, TypeTwo};
use crate::algebra::{associative, product_subspaces, Algebra};
use crate::error::{Error, Result};
use crate::exact::mat::{dot, unit, vaxpy, vsub, vzero, Vector};
use crate::exact::{frac, int, Mat, Scalar};
use crate::forms::{standard_symplectic, Bilinear};
use crate::io::Params;

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p / q` with `|p| <= 3`, `1 <= q <= 3`.
pub fn small(rng: &mut impl Rng) -> Scalar {
    frac(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

pub fn nonzero(rng: &mut impl Rng) -> Scalar {
    loop {
        let x = small(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Entries in `{-2, ..., 2}`.
pub fn random_mat(rng: &mut impl Rng, rows: usize, cols: usize) -> Mat {
    Mat::from_fn(rows, cols, |_, _| int(rng.gen_range(-2..=2)))
}

pub fn random_sym(rng: &mut impl Rng, n: usize) -> Mat {
    let m = random_mat(rng, n, n);
    m.add(&m.transpose())
}

pub fn random_invertible(rng: &mut impl Rng, n: usize) -> Mat {
    loop {
        let m = random_mat(rng, n, n);
        if m.is_invertible() {
            return m;
        }
    }
}

/// A random nondegenerate skew `n x n` matrix, `n` even.
pub fn random_skew(rng: &mut impl Rng, n: usize) -> Mat {
    let p = random_invertible(rng, n);
    p.transpose().mul(&standard_symplectic(n / 2)).mul(&p)
}

/// A product of `steps` symplectic transvections `x -> x + c w(v, x) v`
/// for the form with Gram matrix `g`.
pub fn random_symplectic(rng: &mut impl Rng, g: &Mat, steps: usize) -> Mat {
    let n = g.rows();
    let mut p = Mat::identity(n);
    for _ in 0..steps {
        let v: Vector = (0..n).map(|_| int(rng.gen_range(-1..=1))).collect();
        let c = nonzero(rng);
        let wv = g.transpose().apply(&v);
        let t = Mat::from_fn(n, n, |i, j| {
            let d = if i == j { int(1) } else { int(0) };
            d + &c * &v[i] * &wv[j]
        });
        p = p.mul(&t);
    }
    p
}

/// The structure seen in the basis given by the columns of a random
/// invertible matrix, returned with that matrix.
pub fn scramble(rng: &mut impl Rng, alg: &Algebra, omega: &Bilinear) -> Result<(Algebra, Bilinear, Mat)> {
    let p = random_invertible(rng, alg.dim());
    Ok((alg.transport(&p)?, omega.transport(&p)?, p))
}

/// Random parameters for `family`: nonzero ones for the two-dimensional
/// families, `p` for the type-two data file.
pub fn random_params(rng: &mut impl Rng, family: Family) -> Params {
    let kv: Vec<(&str, Scalar)> = match family {
        Family::AssocTypeOne => family.params().iter().map(|k| (*k, small(rng))).collect(),
        _ => family.params().iter().map(|k| (*k, nonzero(rng))).collect(),
    };
    params(&kv)
}

pub fn random_canonical(rng: &mut impl Rng, family: Family) -> Result<Canonical> {
    canonical(family, &random_params(rng, family))
}

/// Symmetric matrices read off consecutive upper-triangle entries.
fn syms(vals: &mut impl Iterator<Item = Scalar>, count: usize, n: usize) -> Vec<Mat> {
    (0..count)
        .map(|_| {
            let mut m = Mat::zeros(n, n);
            for i in 0..n {
                for j in i..n {
                    let x = vals.next().expect("enough unknowns");
                    m[(i, j)] = x.clone();
                    m[(j, i)] = x;
                }
            }
            m
        })
        .collect()
}

fn tri(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Associator entries followed by `w(u.v, x) + w(v, u.x)` entries.
fn residual(alg: &Algebra, omega: &Bilinear) -> Vector {
    let n = alg.dim();
    let g = omega.gram();
    let mut out = Vec::with_capacity(2 * n * n * n);
    for i in 0..n {
        for j in 0..n {
            let ij = alg.prod(i, j).to_vec();
            for k in 0..n {
                let left = alg.mul(&ij, &unit(n, k));
                let right = alg.mul_basis_left(i, alg.prod(j, k));
                out.extend(vsub(&left, &right));
                out.push(dot(&ij, &g.col(k)) + dot(g.row(j), alg.prod(i, k)));
            }
        }
    }
    out
}

/// All `x` with `residual(build(x)) = 0` for an affine `residual o build`:
/// a particular solution plus a random kernel combination.
fn solve_affine(
    rng: &mut impl Rng,
    unknowns: usize,
    eval: impl Fn(&[Scalar]) -> Result<Vector>,
) -> Result<Option<Vector>> {
    let base = eval(&vzero(unknowns))?;
    let cols: Vec<Vector> = (0..unknowns)
        .map(|u| {
            let mut x = vzero(unknowns);
            x[u] = int(1);
            Ok(vsub(&eval(&x)?, &base))
        })
        .collect::<Result<_>>()?;
    let rows: Vec<usize> = (0..base.len()).filter(|&r| !base[r].is_zero() || cols.iter().any(|c| !c[r].is_zero())).collect();
    let m = Mat::from_fn(rows.len(), unknowns, |i, j| cols[j][rows[i]].clone());
    let rhs: Vector = rows.iter().map(|&r| -base[r].clone()).collect();
    let Some(mut x) = (if rows.is_empty() { Some(vzero(unknowns)) } else { m.solve(&rhs) }) else {
        return Ok(None);
    };
    let ker = if rows.is_empty() {
        (0..unknowns).map(|u| unit(unknowns, u)).collect()
    } else {
        m.kernel()
    };
    for k in &ker {
        vaxpy(&mut x, &small(rng), k);
    }
    Ok(Some(x))
}

/// A random type-one model with the given `dim V` and `dim I`; `m` and `n`
/// are solved from the invariance equations.
pub fn random_type_one(rng: &mut impl Rng, v: usize, i: usize) -> Result<TypeOne> {
    if v == 0 {
        return Err(Error::Input("type one needs dim V > 0".into()));
    }
    let s = random_skew(rng, i);
    let make = |x: &[Scalar]| {
        let mut it = x.iter().cloned();
        let m = syms(&mut it, v, v);
        let n = syms(&mut it, i, v);
        TypeOne { v, s: s.clone(), m, n }
    };
    let unknowns = (v + i) * tri(v);
    loop {
        let x = solve_affine(rng, unknowns, |x| {
            let (a, w) = make(x).build()?;
            Ok(residual(&a, &w))
        })?
        .expect("the zero model is a solution");
        let t = make(&x);
        if !t.m.iter().chain(&t.n).all(Mat::is_zero) {
            return Ok(t);
        }
    }
}

/// A solution of the type-two product equations with the given block
/// dimensions: `a`, `F`, `s0`, `s1` and `c` are drawn at random (with `c`
/// kept off `V1`), then `d` and `b` are solved exactly from associativity and
/// invariance, which are affine in them. `U^3` may vanish.
pub fn random_type_two_shape(
    rng: &mut impl Rng,
    v0: usize,
    v1: usize,
    i0: usize,
    i1: usize,
) -> Result<Option<TypeTwo>> {
    let v = v0 + v1;
    let s0 = random_skew(rng, i0);
    let s1 = random_skew(rng, i1);
    let a: Vec<Mat> = (0..v1).map(|_| random_sym(rng, v0)).collect();
    let c: Vec<Mat> = (0..i1)
        .map(|_| {
            let mut m = Mat::zeros(v, v);
            m.set_block(0, 0, &random_sym(rng, v0));
            m
        })
        .collect();
    let f: Vec<Vec<Vector>> =
        (0..v).map(|_| (0..v0).map(|_| (0..i0).map(|_| int(rng.gen_range(-2..=2))).collect()).collect()).collect();
    let make = |x: &[Scalar]| {
        let mut it = x.iter().cloned();
        let d = syms(&mut it, v, v);
        let b = syms(&mut it, i0, v0);
        TypeTwo { v0, v1, s0: s0.clone(), s1: s1.clone(), a: a.clone(), b, c: c.clone(), d, f: f.clone() }
    };
    let unknowns = v * tri(v) + i0 * tri(v0);
    let x = solve_affine(rng, unknowns, |x| {
        let (alg, w) = make(x).build()?;
        Ok(residual(&alg, &w))
    })?;
    Ok(x.map(|x| make(&x)))
}

/// A random type-two model with `U^3 != 0` whose structural subspaces have
/// exactly the model dimensions. Gives up after 200 draws; in dimension 4,
/// for instance, there is no such model.
pub fn random_type_two(rng: &mut impl Rng, v0: usize, v1: usize, i0: usize, i1: usize) -> Result<TypeTwo> {
    for _ in 0..200 {
        let Some(t) = random_type_two_shape(rng, v0, v1, i0, i1)? else {
            continue;
        };
        let (alg, _) = t.build()?;
        if !associative(&alg).passed {
            continue;
        }
        let ps = product_subspaces(&alg);
        if ps.powers[2].dim() == v0 && ps.powers[1].dim() == v0 + v1 + i0 && ps.powers[3].dim() == 0 {
            return Ok(t);
        }
    }
    Err(Error::Input(format!("no type-two model found for dims ({v0}, {v1}, {i0}, {i1})")))
}
