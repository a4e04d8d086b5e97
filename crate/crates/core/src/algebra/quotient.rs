//! Quotients by ideals together with their projection and section.

use super::{Ideal, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::rat::{dot, is_zero_vec, unit};
use crate::linalg::{Matrix, Rat, Subspace};

/// `pi: g -> g/n` with an explicit right inverse.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    parent: LieAlgebra,
    ideal: Ideal,
    quotient: LieAlgebra,
    /// `q x dim`, acting on column vectors of parent coordinates.
    projection: Matrix,
    /// `dim x q`; column `a` is the chosen lift of the `a`-th quotient basis vector.
    section: Matrix,
}

impl QuotientMap {
    /// Quotient using the pivot complement of the ideal as section.
    pub fn new(parent: &LieAlgebra, ideal: &Ideal) -> Result<Self> {
        let complement = ideal.space().complement_in(&Subspace::full(parent.dim()))?;
        let rows: Vec<Vec<Rat>> = complement.basis_vectors().map(<[Rat]>::to_vec).collect();
        Self::with_section(parent, ideal, &rows)
    }

    /// Quotient whose basis is the image of the given complement vectors.
    pub fn with_section(parent: &LieAlgebra, ideal: &Ideal, complement: &[Vec<Rat>]) -> Result<Self> {
        let n = parent.dim();
        let q = n - ideal.dim();
        if complement.len() != q {
            return Err(Error::DimensionMismatch { expected: q, got: complement.len() });
        }
        let mut rows: Vec<Vec<Rat>> = complement.to_vec();
        rows.extend(ideal.space().basis_vectors().map(<[Rat]>::to_vec));
        let frame = Matrix::from_rows(n, rows)?;
        let inv = frame
            .inverse()
            .ok_or_else(|| Error::Invalid("section vectors do not complement the ideal".into()))?;
        let projection = Matrix::from_fn(q, n, |a, i| inv[(i, a)].clone());
        let section = Matrix::from_fn(n, q, |i, a| complement[a][i].clone());

        let mut entries = Vec::new();
        for a in 0..q {
            for b in a + 1..q {
                let v = parent.bracket(&section.column(a), &section.column(b))?;
                let pv = projection.apply(&v)?;
                if !is_zero_vec(&pv) {
                    entries.push((a, b, pv));
                }
            }
        }
        let quotient = LieAlgebra::new(q, &entries)?;
        let map = QuotientMap { parent: parent.clone(), ideal: ideal.clone(), quotient, projection, section };
        map.check_homomorphism()?;
        Ok(map)
    }

    /// `pi([e_i, e_j]) = [pi e_i, pi e_j]` on all basis pairs.
    fn check_homomorphism(&self) -> Result<()> {
        let n = self.parent.dim();
        let images: Vec<Vec<Rat>> = (0..n).map(|i| self.projection.column(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.projection.apply(self.parent.basis_bracket(i, j))?;
                let rhs = self.quotient.bracket(&images[i], &images[j])?;
                if lhs != rhs {
                    return Err(Error::NotAnIdeal { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn parent(&self) -> &LieAlgebra {
        &self.parent
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn quotient(&self) -> &LieAlgebra {
        &self.quotient
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn project(&self, x: &[Rat]) -> Result<Vec<Rat>> {
        self.projection.apply(x)
    }

    pub fn lift(&self, x: &[Rat]) -> Result<Vec<Rat>> {
        self.section.apply(x)
    }

    /// `pi^* beta' = beta' ∘ pi`, a covector on the parent vanishing on the ideal.
    pub fn pullback_covector(&self, beta_bar: &[Rat]) -> Result<Vec<Rat>> {
        self.projection.apply_left(beta_bar)
    }

    /// Checks `<pi^* beta', [xi, eta]> = <beta', [pi xi, pi eta]>` on all
    /// basis pairs of the parent and that the pullback annihilates the ideal.
    pub fn pullback_identity_holds(&self, beta_bar: &[Rat]) -> Result<bool> {
        let beta = self.pullback_covector(beta_bar)?;
        if !self.ideal.space().annihilated_by(&beta)? {
            return Ok(false);
        }
        let n = self.parent.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = dot(&beta, self.parent.basis_bracket(i, j));
                let pi_i = self.project(&unit(n, i))?;
                let pi_j = self.project(&unit(n, j))?;
                let rhs = dot(beta_bar, &self.quotient.bracket(&pi_i, &pi_j)?);
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::catalog;
    use crate::linalg::rat::{from_ints, int, zeros};

    #[test]
    fn heisenberg_mod_center_is_abelian() {
        let e = catalog("heisenberg3").unwrap();
        let q = QuotientMap::new(&e.algebra, e.ideal("center").unwrap()).unwrap();
        assert_eq!(q.quotient().dim(), 2);
        assert!(q.quotient().is_abelian());
        let proj_sec = q.projection().mul(q.section()).unwrap();
        assert_eq!(proj_sec, Matrix::identity(2));
    }

    #[test]
    fn algebra_mod_itself_is_zero() {
        let e = catalog("sl2").unwrap();
        let q = QuotientMap::new(&e.algebra, &Ideal::whole(&e.algebra)).unwrap();
        assert_eq!(q.quotient().dim(), 0);
    }

    #[test]
    fn gl2_mod_sl2_is_one_dimensional() {
        let e = catalog("gl2").unwrap();
        let q = QuotientMap::new(&e.algebra, e.ideal("sl2").unwrap()).unwrap();
        assert_eq!(q.quotient().dim(), 1);
        assert!(q.quotient().is_abelian());
    }

    #[test]
    fn pullback_examples() {
        let e = catalog("heisenberg3").unwrap();
        let q = QuotientMap::new(&e.algebra, e.ideal("center").unwrap()).unwrap();
        assert_eq!(q.pullback_covector(&zeros(2)).unwrap(), zeros(3));
        assert_eq!(q.pullback_covector(&from_ints(&[1, 0])).unwrap(), from_ints(&[1, 0, 0]));
        assert!(q.pullback_identity_holds(&from_ints(&[1, 0])).unwrap());

        let g = catalog("gl2").unwrap();
        let q = QuotientMap::new(&g.algebra, g.ideal("sl2").unwrap()).unwrap();
        let beta = q.pullback_covector(&[int(1)]).unwrap();
        // basis (h, e, f, c) with c = identity: the functional is trace/2 up to scale
        assert!(g.ideal("sl2").unwrap().space().annihilated_by(&beta).unwrap());
        assert!(q.pullback_identity_holds(&[int(1)]).unwrap());
    }
}
