use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Rat, Subspace};

/// A subspace verified to satisfy `[g, n] ⊆ n` for a given algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    space: Subspace,
}

impl Ideal {
    pub fn new(alg: &LieAlgebra, space: Subspace) -> Result<Self> {
        if space.ambient_dim() != alg.dim() {
            return Err(Error::AmbientMismatch(alg.dim(), space.ambient_dim()));
        }
        for i in 0..alg.dim() {
            let e = crate::linalg::rat::unit(alg.dim(), i);
            for (j, y) in space.basis_vectors().enumerate() {
                if !space.contains(&alg.bracket(&e, y)?)? {
                    return Err(Error::NotAnIdeal { i, j });
                }
            }
        }
        Ok(Ideal { space })
    }

    pub fn from_vectors<V: AsRef<[Rat]>>(alg: &LieAlgebra, vectors: &[V]) -> Result<Self> {
        Self::new(alg, Subspace::span(alg.dim(), vectors)?)
    }

    pub fn whole(alg: &LieAlgebra) -> Self {
        Ideal { space: Subspace::full(alg.dim()) }
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The ideal as a Lie algebra in its canonical basis.
    pub fn as_algebra(&self, parent: &LieAlgebra) -> Result<LieAlgebra> {
        parent.subalgebra(&self.space)
    }

    /// Any covector on the parent extending `nu` (given in the ideal's
    /// canonical basis). Pivot coordinates carry the values, everything else
    /// is zero.
    pub fn lift(&self, nu: &[Rat]) -> Result<Vec<Rat>> {
        if nu.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: nu.len() });
        }
        let mut sigma = crate::linalg::rat::zeros(self.space.ambient_dim());
        for (&p, v) in self.space.pivots().iter().zip(nu) {
            sigma[p] = v.clone();
        }
        Ok(sigma)
    }
}

/// Nonzero ideals worth testing against: the whole algebra, the center, and
/// the members of the derived and lower central series, deduplicated.
pub fn candidate_ideals(alg: &LieAlgebra) -> Vec<Ideal> {
    let mut out: Vec<Subspace> = Vec::new();
    let mut push = |s: Subspace| {
        if !s.is_zero() && !out.contains(&s) {
            out.push(s);
        }
    };
    for s in alg.derived_series() {
        push(s);
    }
    for s in alg.lower_central_series() {
        push(s);
    }
    push(alg.center());
    out.into_iter()
        .map(|space| Ideal::new(alg, space).expect("series members and the center are ideals"))
        .collect()
}
