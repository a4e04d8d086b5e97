//! Scalar 2-cocycles on a Lie algebra.

use num_traits::Zero;

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::rat::{dot, zeros};
use crate::linalg::{kernel, Matrix, Rat};

/// A skew form `gamma` with `gamma([x,y],z) + gamma([y,z],x) + gamma([z,x],y) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle2 {
    form: Matrix,
}

impl Cocycle2 {
    pub fn new(alg: &LieAlgebra, form: Matrix) -> Result<Self> {
        let n = alg.dim();
        if form.rows() != n || form.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, got: form.rows() });
        }
        if !form.is_skew() {
            return Err(Error::NotACocycle("form is not skew-symmetric".into()));
        }
        if let Some((i, j, k)) = cocycle_defect(alg, &form) {
            return Err(Error::NotACocycle(format!("cyclic sum nonzero on (e{i}, e{j}, e{k})")));
        }
        Ok(Cocycle2 { form })
    }

    pub fn zero(alg: &LieAlgebra) -> Self {
        Cocycle2 { form: Matrix::zeros(alg.dim(), alg.dim()) }
    }

    /// The coboundary `(x, y) -> lambda([x, y])`.
    pub fn coboundary(alg: &LieAlgebra, lambda: &[Rat]) -> Result<Self> {
        if lambda.len() != alg.dim() {
            return Err(Error::DimensionMismatch { expected: alg.dim(), got: lambda.len() });
        }
        let n = alg.dim();
        let form = Matrix::from_fn(n, n, |i, j| dot(lambda, alg.basis_bracket(i, j)));
        Self::new(alg, form)
    }

    pub fn form(&self) -> &Matrix {
        &self.form
    }

    pub fn dim(&self) -> usize {
        self.form.rows()
    }

    pub fn eval(&self, x: &[Rat], y: &[Rat]) -> Rat {
        dot(x, &self.form.apply(y).expect("dimension checked at construction"))
    }

    pub fn is_zero(&self) -> bool {
        self.form.is_zero()
    }
}

/// First basis triple on which the cyclic sum fails, if any.
fn cocycle_defect(alg: &LieAlgebra, form: &Matrix) -> Option<(usize, usize, usize)> {
    let n = alg.dim();
    // gamma([e_i, e_j], e_k) = sum_l c_ij^l form[l][k]
    let g = |i: usize, j: usize, k: usize| -> Rat {
        alg.basis_bracket(i, j)
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Rat::zero(), |acc, (l, c)| acc + c * &form[(l, k)])
    };
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if !(g(i, j, k) + g(j, k, i) + g(k, i, j)).is_zero() {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// A basis of the space of 2-cocycles, each given as a skew matrix.
pub fn cocycle_space(alg: &LieAlgebra) -> Vec<Matrix> {
    let n = alg.dim();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
        .collect();
    // unknown: form[a][b] for a < b; form[b][a] = -form[a][b]
    let slot = |l: usize, k: usize| -> Option<(usize, Rat)> {
        if l == k {
            return None;
        }
        let (a, b, s) = if l < k { (l, k, 1) } else { (k, l, -1) };
        let idx = pairs.iter().position(|&p| p == (a, b)).expect("pair enumerated");
        Some((idx, Rat::from_integer(s.into())))
    };
    let mut rows = Vec::with_capacity(triples.len());
    for &(i, j, k) in &triples {
        let mut row = zeros(pairs.len());
        for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
            for (l, c) in alg.basis_bracket(x, y).iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if let Some((idx, s)) = slot(l, z) {
                    row[idx] += c * s;
                }
            }
        }
        rows.push(row);
    }
    let system = Matrix::from_rows(pairs.len(), rows).expect("uniform rows");
    kernel(&system)
        .basis_vectors()
        .map(|v| {
            let mut m = Matrix::zeros(n, n);
            for (idx, &(a, b)) in pairs.iter().enumerate() {
                m[(a, b)] = v[idx].clone();
                m[(b, a)] = -v[idx].clone();
            }
            m
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::catalog;

    #[test]
    fn symplectic_form_on_abelian_plane() {
        let q = LieAlgebra::abelian(2);
        let c = Cocycle2::new(&q, Matrix::from_ints(&[&[0, 1], &[-1, 0]])).unwrap();
        assert!(!c.is_zero());
        assert!(Cocycle2::new(&q, Matrix::from_ints(&[&[0, 1], &[1, 0]])).is_err());
    }

    #[test]
    fn cocycle_space_dimensions() {
        // every skew form on an abelian algebra is a cocycle
        assert_eq!(cocycle_space(&LieAlgebra::abelian(3)).len(), 3);
        // H^2(sl2) = 0, so Z^2 = B^2 has dimension dim sl2 = 3
        let sl2 = catalog("sl2").unwrap().algebra;
        let z = cocycle_space(&sl2);
        assert_eq!(z.len(), 3);
        for m in z {
            Cocycle2::new(&sl2, m).unwrap();
        }
    }

    #[test]
    fn cyclic_identity_is_enforced() {
        // on h3 the only cyclic sum is gamma(e2, e2) = 0, so every skew form is a cocycle
        let h = catalog("heisenberg3").unwrap().algebra;
        assert_eq!(cocycle_space(&h).len(), 3);
        // gl2 = (h, e, f, c): the triple (h, e, c) gives 2 gamma(e, c)
        let gl2 = catalog("gl2").unwrap().algebra;
        let mut m = Matrix::zeros(4, 4);
        m[(1, 3)] = Rat::from_integer(1.into());
        m[(3, 1)] = Rat::from_integer((-1).into());
        assert!(matches!(Cocycle2::new(&gl2, m), Err(Error::NotACocycle(_))));
    }
}
