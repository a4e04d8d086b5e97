//! Subspaces of `Q^n` in canonical reduced row-echelon form.
//!
//! The same type serves for subspaces of an algebra and of its dual; the
//! annihilator maps between the two using the standard pairing of coordinates.

use num_traits::Zero;

use super::matrix::Matrix;
use super::rat::{axpy, dot, is_zero_vec, Rat};
use crate::error::{Error, Result};

/// A subspace stored by its unique reduced row-echelon basis, so that set
/// equality is entry-wise equality of the stored data.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// The span of the rows of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let r = m.rref();
        let rows = r.reduced.row_vecs().into_iter().take(r.rank).collect();
        Subspace {
            ambient: m.cols(),
            basis: Matrix::from_rows(m.cols(), rows).expect("rref rows have full width"),
            pivots: r.pivots,
        }
    }

    pub fn span<V: AsRef<[Rat]>>(ambient: usize, vectors: &[V]) -> Result<Self> {
        let rows = vectors.iter().map(|v| v.as_ref().to_vec()).collect();
        Ok(Self::row_space(&Matrix::from_rows(ambient, rows)?))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Rat]> + '_ {
        (0..self.dim()).map(move |i| self.basis.row(i))
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_vec(&self, v: &[Rat]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: v.len() });
        }
        Ok(())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the subspace. Pivot columns of a reduced basis carry the coordinates.
    pub fn coordinates(&self, v: &[Rat]) -> Result<Option<Vec<Rat>>> {
        self.check_vec(v)?;
        let coords: Vec<Rat> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        Ok((self.combine(&coords) == v).then_some(coords))
    }

    /// The vector with the given coordinates in the canonical basis.
    pub fn combine(&self, coords: &[Rat]) -> Vec<Rat> {
        debug_assert_eq!(coords.len(), self.dim());
        let mut out = vec![Rat::zero(); self.ambient];
        for (c, row) in coords.iter().zip(self.basis_vectors()) {
            axpy(&mut out, c, row);
        }
        out
    }

    pub fn contains(&self, v: &[Rat]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for v in self.basis_vectors() {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)?))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// `{f : f(v) = 0 for all v in self}` in dual coordinates.
    pub fn annihilator(&self) -> Subspace {
        kernel(&self.basis)
    }

    /// A complement of `self` inside `outer`, extended greedily from the rows
    /// of `outer`'s canonical basis.
    pub fn complement_in(&self, outer: &Subspace) -> Result<Subspace> {
        self.check_ambient(outer)?;
        if !self.is_subspace_of(outer)? {
            return Err(Error::NotContained);
        }
        let mut acc = self.clone();
        let mut chosen: Vec<Vec<Rat>> = Vec::new();
        for v in outer.basis_vectors() {
            if acc.dim() == outer.dim() {
                break;
            }
            if !acc.contains(v)? {
                chosen.push(v.to_vec());
                acc = acc.sum(&Subspace::span(self.ambient, &[v])?)?;
            }
        }
        Subspace::span(self.ambient, &chosen)
    }

    /// Image of the subspace under a linear map given as a matrix acting on
    /// column vectors.
    pub fn image(&self, map: &Matrix) -> Result<Subspace> {
        let rows = self.basis_vectors().map(|v| map.apply(v)).collect::<Result<Vec<_>>>()?;
        Ok(Self::row_space(&Matrix::from_rows(map.rows(), rows)?))
    }

    /// Evaluates a functional on every basis vector.
    pub fn restrict_functional(&self, f: &[Rat]) -> Result<Vec<Rat>> {
        self.check_vec(f)?;
        Ok(self.basis_vectors().map(|v| dot(f, v)).collect())
    }

    /// `{x in self : conditions x = 0}`; each row of `conditions` is a
    /// functional on the ambient space.
    pub fn kernel_within(&self, conditions: &Matrix) -> Result<Subspace> {
        if conditions.cols() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: conditions.cols() });
        }
        let in_coords = conditions.mul(&self.basis.transpose())?;
        let coords = kernel(&in_coords);
        let rows: Vec<Vec<Rat>> = coords.basis_vectors().map(|c| self.combine(c)).collect();
        Subspace::span(self.ambient, &rows)
    }

    /// Whether `f` vanishes on the whole subspace.
    pub fn annihilated_by(&self, f: &[Rat]) -> Result<bool> {
        Ok(is_zero_vec(&self.restrict_functional(f)?))
    }
}

/// `{x : m x = 0}` as a subspace of `Q^{m.cols}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let r = m.rref();
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
    let rows: Vec<Vec<Rat>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); n];
            v[f] = num_traits::One::one();
            for (row, &p) in r.pivots.iter().enumerate() {
                v[p] = -r.reduced[(row, f)].clone();
            }
            v
        })
        .collect();
    Subspace::row_space(&Matrix::from_rows(n, rows).expect("kernel rows have full width"))
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "span{:?} in Q^{}", self.basis, self.ambient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat::{frac, from_ints, int, unit};

    fn span(n: usize, vs: &[&[i64]]) -> Subspace {
        let vecs: Vec<Vec<Rat>> = vs.iter().map(|v| from_ints(v)).collect();
        Subspace::span(n, &vecs).unwrap()
    }

    #[test]
    fn kernel_within_restricts() {
        let s = span(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let f = Matrix::from_ints(&[&[1, 1, 5]]);
        assert_eq!(s.kernel_within(&f).unwrap(), span(3, &[&[1, -1, 0]]));
        assert_eq!(s.kernel_within(&Matrix::zeros(0, 3)).unwrap(), s);
        assert!(Subspace::zero(3).kernel_within(&f).unwrap().is_zero());
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel(&Matrix::identity(2)).is_zero());
        assert!(kernel(&Matrix::zeros(2, 3)).is_full());
        let k = kernel(&Matrix::from_ints(&[&[1, 2]]));
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis().row(0), &[int(1), frac(-1, 2)]);
        assert_eq!(k, span(2, &[&[-2, 1]]));
    }

    #[test]
    fn annihilator_examples() {
        assert!(Subspace::full(3).annihilator().is_zero());
        assert!(Subspace::zero(3).annihilator().is_full());
        let a = span(3, &[&[0, 0, 1]]).annihilator();
        assert_eq!(a, span(3, &[&[1, 0, 0], &[0, 1, 0]]));
    }

    #[test]
    fn lattice_examples() {
        let e0 = span(2, &[&[1, 0]]);
        let e1 = span(2, &[&[0, 1]]);
        assert!(e0.sum(&e1).unwrap().is_full());
        assert!(e0.intersect(&e1).unwrap().is_zero());
        let s = span(3, &[&[1, 2, 3], &[0, 1, 1]]);
        assert_eq!(s.intersect(&s).unwrap(), s);
    }

    #[test]
    fn complement_by_pivot_extension() {
        let inner = span(3, &[&[1, 0, 0]]);
        let c = inner.complement_in(&Subspace::full(3)).unwrap();
        assert_eq!(c, span(3, &[&[0, 1, 0], &[0, 0, 1]]));
    }

    #[test]
    fn errors() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(matches!(a.sum(&b), Err(Error::AmbientMismatch(2, 3))));
        assert!(matches!(a.intersect(&b), Err(Error::AmbientMismatch(2, 3))));
        let line = span(2, &[&[1, 1]]);
        let other = span(2, &[&[1, 0]]);
        assert!(matches!(line.complement_in(&other), Err(Error::NotContained)));
    }

    #[test]
    fn coordinates_round_trip() {
        let s = span(3, &[&[1, 2, 3], &[0, 1, 1]]);
        let v = from_ints(&[2, 7, 9]);
        let c = s.coordinates(&v).unwrap().unwrap();
        assert_eq!(s.combine(&c), v);
        assert!(s.coordinates(&unit(3, 2)).unwrap().is_none());
    }
}
