//! Seeded random (algebra, ideal) pairs built only from validated
//! constructions, so every output satisfies Jacobi by construction.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::catalog::{aff1_standard, catalog, sl2_standard};
use super::cocycle::cocycle_space;
use super::ideal::candidate_ideals;
use super::{central_extension, direct_sum, semidirect, Cocycle2, Ideal, LieAlgebra, QuotientMap, Representation};
use crate::error::Result;
use crate::linalg::rat::{axpy, int, unit, zeros};
use crate::linalg::{Matrix, Rat, Subspace};
use crate::sampling::{small_int, stream};

/// Largest dimension produced by [`random_pair`].
pub const MAX_DIM: usize = 8;

/// A generated pair together with a short description of how it was built.
#[derive(Clone, Debug)]
pub struct RandomPair {
    pub algebra: LieAlgebra,
    pub ideal: Ideal,
    pub recipe: String,
}

/// The `k`-th random pair for `seed`.
pub fn random_pair(seed: u64, k: u64) -> Result<RandomPair> {
    let mut rng = stream(seed, "random-pair", k, 0);
    loop {
        let (alg, mut ideals, recipe) = match rng.gen_range(0..5) {
            0 => from_catalog(&mut rng)?,
            1 => from_semidirect(&mut rng)?,
            2 => from_direct_sum(&mut rng)?,
            3 => from_extension(&mut rng)?,
            _ => from_quotient(&mut rng)?,
        };
        if alg.dim() == 0 || alg.dim() > MAX_DIM {
            continue;
        }
        for i in candidate_ideals(&alg) {
            if !ideals.contains(&i) {
                ideals.push(i);
            }
        }
        let ideal = ideals.choose(&mut rng).expect("nonzero algebras have a candidate ideal").clone();
        let (algebra, ideal) = scramble(&mut rng, &alg, &ideal)?;
        return Ok(RandomPair { algebra, ideal, recipe });
    }
}

/// The `k`-th random semidirect instance `(k, rho)` for `seed`.
pub fn random_semidirect(seed: u64, k: u64) -> Result<(LieAlgebra, Representation)> {
    let mut rng = stream(seed, "random-semidirect", k, 0);
    random_rep(&mut rng)
}

fn from_catalog(rng: &mut ChaCha8Rng) -> Result<(LieAlgebra, Vec<Ideal>, String)> {
    let names = ["heisenberg3", "sl2", "gl2", "aff1", "e2", "so3", "se3", "oscillator", "sl2-q2", "filiform4", "heisenberg3+ab1"];
    let name = names.choose(rng).expect("nonempty");
    let e = catalog(name)?;
    let ideals = e.ideals.into_iter().map(|(_, i)| i).collect();
    Ok((e.algebra, ideals, format!("catalog {name}")))
}

fn from_semidirect(rng: &mut ChaCha8Rng) -> Result<(LieAlgebra, Vec<Ideal>, String)> {
    let (k, rep) = random_rep(rng)?;
    let (g, v) = semidirect(&k, &rep)?;
    Ok((g, vec![v], format!("semidirect dim {} + {}", k.dim(), rep.space_dim())))
}

fn from_direct_sum(rng: &mut ChaCha8Rng) -> Result<(LieAlgebra, Vec<Ideal>, String)> {
    let small = ["abelian:1", "abelian:2", "heisenberg3", "sl2", "aff1", "e2", "so3"];
    let a = catalog(small.choose(rng).expect("nonempty"))?;
    let b = catalog(small.choose(rng).expect("nonempty"))?;
    let g = direct_sum(&a.algebra, &b.algebra);
    let (m, n) = (a.algebra.dim(), b.algebra.dim());
    let mut ideals = Vec::new();
    for (_, i) in &a.ideals {
        let left: Vec<Vec<Rat>> = i.space().basis_vectors().map(|v| pad(v, 0, n)).collect();
        let mut with_b = left.clone();
        with_b.extend((0..n).map(|j| unit(m + n, m + j)));
        ideals.push(Ideal::from_vectors(&g, &left)?);
        ideals.push(Ideal::from_vectors(&g, &with_b)?);
    }
    Ok((g, ideals, format!("{} + {}", a.name, b.name)))
}

fn from_extension(rng: &mut ChaCha8Rng) -> Result<(LieAlgebra, Vec<Ideal>, String)> {
    let base = if rng.gen_bool(0.5) {
        let names = ["abelian:2", "abelian:3", "abelian:4", "heisenberg3", "aff1", "e2", "filiform4", "sl2"];
        catalog(names.choose(rng).expect("nonempty"))?.algebra
    } else {
        let (k, rep) = random_rep(rng)?;
        semidirect(&k, &rep)?.0
    };
    if base.dim() + 1 > MAX_DIM {
        return from_catalog(rng);
    }
    let basis = cocycle_space(&base);
    let n = base.dim();
    let mut form = Matrix::zeros(n, n);
    for m in &basis {
        let c = small_int(rng, 2);
        for i in 0..n {
            for j in 0..n {
                form[(i, j)] += &c * &m[(i, j)];
            }
        }
    }
    let g = central_extension(&base, &Cocycle2::new(&base, form)?)?;
    let z = Ideal::from_vectors(&g, &[unit(n + 1, n)])?;
    Ok((g, vec![z], format!("central extension of dim {n}")))
}

fn from_quotient(rng: &mut ChaCha8Rng) -> Result<(LieAlgebra, Vec<Ideal>, String)> {
    let (g, _, recipe) = if rng.gen_bool(0.5) { from_semidirect(rng)? } else { from_extension(rng)? };
    let lcs: Vec<Subspace> = g.lower_central_series().into_iter().skip(1).filter(|s| !s.is_zero()).collect();
    let Some(s) = lcs.choose(rng) else { return Ok((g, Vec::new(), recipe)) };
    if s.dim() == g.dim() {
        return Ok((g, Vec::new(), recipe));
    }
    let q = QuotientMap::new(&g, &Ideal::new(&g, s.clone())?)?;
    Ok((q.quotient().clone(), Vec::new(), format!("({recipe}) mod lower central term")))
}

/// A random validated representation of a small catalog algebra.
fn random_rep(rng: &mut ChaCha8Rng) -> Result<(LieAlgebra, Representation)> {
    let rep = match rng.gen_range(0..7) {
        0 => {
            let k = LieAlgebra::abelian(1);
            let d = rng.gen_range(1..=3);
            let a = Matrix::from_fn(d, d, |_, _| small_int(rng, 2));
            Representation::new(&k, vec![a])?
        }
        1 => {
            // two commuting operators: A and a polynomial in A
            let k = LieAlgebra::abelian(2);
            let d = rng.gen_range(2..=3);
            let a = Matrix::from_fn(d, d, |_, _| small_int(rng, 1));
            let a2 = a.mul(&a)?;
            let (c1, c2) = (small_int(rng, 2), small_int(rng, 1));
            let b = Matrix::from_fn(d, d, |i, j| &c1 * &a[(i, j)] + &c2 * &a2[(i, j)]);
            Representation::new(&k, vec![a, b])?
        }
        2 => {
            let k = catalog("aff1")?.algebra;
            let std = aff1_standard(&k);
            if rng.gen_bool(0.5) { std.direct_sum(&Representation::trivial(&k, 1))? } else { std.dual() }
        }
        3 => {
            let k = catalog("sl2")?.algebra;
            match rng.gen_range(0..3) {
                0 => sl2_standard(&k),
                1 => sl2_standard(&k).dual().direct_sum(&Representation::trivial(&k, 1))?,
                _ => Representation::adjoint(&k),
            }
        }
        4 => {
            let k = catalog("heisenberg3")?.algebra;
            // x = E12, y = E23, z = E13
            let e = |i: usize, j: usize| Matrix::from_fn(3, 3, |a, b| int(i64::from((a, b) == (i, j))));
            let std = Representation::new(&k, vec![e(0, 1), e(1, 2), e(0, 2)])?;
            if rng.gen_bool(0.5) { std } else { std.dual() }
        }
        5 => {
            let k = catalog("so3")?.algebra;
            Representation::adjoint(&k)
        }
        _ => {
            let k = catalog(["aff1", "e2", "heisenberg3"].choose(rng).expect("nonempty"))?.algebra;
            let ad = Representation::adjoint(&k);
            if rng.gen_bool(0.5) { ad } else { ad.dual() }
        }
    };
    let p = unimodular(rng, rep.space_dim());
    let rep = rep.conjugate(&p)?;
    Ok((rep.domain().clone(), rep))
}

/// Product of a few elementary integer row operations.
fn unimodular(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut m = Matrix::identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..n {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let c = Rat::from_integer([-1i64, 1, 2][rng.gen_range(0..3)].into());
        let row_j = m.row(j).to_vec();
        let mut row_i = m.row(i).to_vec();
        axpy(&mut row_i, &c, &row_j);
        for (col, v) in row_i.into_iter().enumerate() {
            m[(i, col)] = v;
        }
    }
    m
}

/// Applies a random unimodular change of basis to the algebra and ideal.
fn scramble(rng: &mut ChaCha8Rng, g: &LieAlgebra, n: &Ideal) -> Result<(LieAlgebra, Ideal)> {
    let p = unimodular(rng, g.dim());
    let inv = p.inverse().expect("unimodular");
    let h = g.change_basis(&p)?;
    let basis = n.space().basis_vectors().map(|v| inv.apply_left(v)).collect::<Result<Vec<_>>>()?;
    let ideal = Ideal::from_vectors(&h, &basis)?;
    Ok((h, ideal))
}

fn pad(v: &[Rat], before: usize, after: usize) -> Vec<Rat> {
    let mut out = zeros(before);
    out.extend(v.iter().cloned());
    out.extend(zeros(after));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_are_valid_and_reproducible() {
        for k in 0..20 {
            let a = random_pair(0, k).unwrap();
            let b = random_pair(0, k).unwrap();
            assert_eq!(a.algebra, b.algebra);
            assert_eq!(a.ideal, b.ideal);
            assert!(a.algebra.dim() <= MAX_DIM);
            assert!(!a.ideal.space().is_zero());
            // the ideal property is rechecked from scratch
            Ideal::new(&a.algebra, a.ideal.space().clone()).unwrap();
        }
    }

    #[test]
    fn semidirect_instances_validate() {
        for k in 0..10 {
            let (alg, rep) = random_semidirect(0, k).unwrap();
            Representation::new(&alg, rep.action().to_vec()).unwrap();
        }
    }
}
