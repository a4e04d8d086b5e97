//! Test-side oracle. It shares nothing with the library beyond reading
//! structure constants: integer arithmetic, fraction-free elimination and
//! exhaustive grids instead of rational RREF and seeded sampling.

#![allow(dead_code)]

use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use lieslice::algebra::LieAlgebra;
use lieslice::linalg::{Rat, Subspace};

/// Structure constants scaled to integers: `c[i][j][k]`.
pub type Table = Vec<Vec<Vec<i128>>>;

fn common_denominator<'a>(values: impl Iterator<Item = &'a Rat>) -> i128 {
    values.fold(1i128, |acc, r| acc.lcm(&r.denom().to_i128().expect("small denominators")))
}

fn scaled(values: &[Rat], d: i128) -> Vec<i128> {
    values.iter().map(|r| (r * Rat::from_integer(d.into())).to_integer().to_i128().expect("small entries")).collect()
}

/// The bracket table times a common denominator; ranks are unaffected.
pub fn table(alg: &LieAlgebra) -> Table {
    let n = alg.dim();
    let d = common_denominator((0..n).flat_map(|i| (0..n).flat_map(move |j| alg.basis_bracket(i, j).iter())));
    (0..n).map(|i| (0..n).map(|j| scaled(alg.basis_bracket(i, j), d)).collect()).collect()
}

/// Basis of a subspace scaled row by row to integers.
pub fn integer_basis(s: &Subspace) -> Vec<Vec<i128>> {
    s.basis_vectors().map(|v| scaled(v, common_denominator(v.iter()))).collect()
}

/// Rank by Bareiss elimination over i128.
pub fn rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let (mut r, mut prev) = (0usize, 1i128);
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

fn dot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn kirillov(t: &Table, sigma: &[i128]) -> Vec<Vec<i128>> {
    t.iter().map(|row| row.iter().map(|v| dot(v, sigma)).collect()).collect()
}

/// Every integer vector of length `len` with entries in `-r..=r`.
pub fn grid(len: usize, r: i128) -> impl Iterator<Item = Vec<i128>> {
    let side = (2 * r + 1) as usize;
    (0..side.pow(len as u32)).map(move |mut code| {
        (0..len)
            .map(|_| {
                let v = (code % side) as i128 - r;
                code /= side;
                v
            })
            .collect()
    })
}

/// Index by exhaustive maximization of the Kirillov rank over the grid.
pub fn grid_index(alg: &LieAlgebra, r: i128) -> usize {
    let t = table(alg);
    let n = alg.dim();
    n - grid(n, r).map(|s| rank(kirillov(&t, &s))).max().unwrap_or(0)
}

/// `dim n` minus the largest `g`-orbit on `n*`, with covectors on `n`
/// obtained by restricting grid covectors on `g`.
pub fn grid_coindex(alg: &LieAlgebra, n: &Subspace, r: i128) -> usize {
    let t = table(alg);
    let ys = integer_basis(n);
    let g = alg.dim();
    let best = grid(g, r)
        .map(|s| {
            // row b: xi -> sigma([e_i, y_b])
            let m: Vec<Vec<i128>> =
                ys.iter().map(|y| (0..g).map(|i| (0..g).map(|j| y[j] * dot(&t[i][j], &s)).sum()).collect()).collect();
            rank(m)
        })
        .max()
        .unwrap_or(0);
    n.dim() - best
}

pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(p.into(), q.into())
}

pub fn rats(v: &[i128]) -> Vec<Rat> {
    v.iter().map(|&x| Rat::from_integer((x as i64).into())).collect()
}

pub fn one() -> Rat {
    Rat::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_rank() {
        assert_eq!(rank(vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(vec![vec![0, 1], vec![1, 0]]), 2);
        assert_eq!(rank(vec![vec![0, 0, 0]]), 0);
    }
}
