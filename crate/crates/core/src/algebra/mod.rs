//! Finite-dimensional Lie algebras given by exact structure constants.

pub mod catalog;
pub mod cocycle;
pub mod construct;
pub mod ideal;
pub mod quotient;
pub mod random;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::rat::{axpy, is_zero_vec, zeros};
use crate::linalg::{Matrix, Rat, Subspace};

pub use catalog::{catalog, catalog_names, CatalogEntry};
pub use cocycle::Cocycle2;
pub use construct::{central_extension, direct_sum, semidirect, Representation};
pub use ideal::Ideal;
pub use quotient::QuotientMap;

/// A Lie algebra over Q with basis `e_0 .. e_{dim-1}` and
/// `[e_i, e_j] = sum_k c[i][j][k] e_k`.
///
/// Construction verifies antisymmetry and the Jacobi identity exactly, so
/// every value of this type is a genuine Lie algebra. Labels are cosmetic and
/// ignored by equality.
#[derive(Clone)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    /// `table[i * dim + j]` holds the coordinates of `[e_i, e_j]`.
    table: Vec<Vec<Rat>>,
}

/// One entry of a bracket table: `[e_left, e_right] = result`.
pub type BracketEntry = (usize, usize, Vec<Rat>);

impl LieAlgebra {
    /// Builds an algebra from a sparse bracket table. Omitted brackets are
    /// zero; the table is completed by antisymmetry.
    pub fn new(dim: usize, brackets: &[BracketEntry]) -> Result<Self> {
        let mut table: Vec<Option<Vec<Rat>>> = vec![None; dim * dim];
        for (i, j, v) in brackets {
            let (i, j) = (*i, *j);
            for index in [i, j] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            if v.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: v.len() });
            }
            if i == j {
                if !is_zero_vec(v) {
                    return Err(Error::NonzeroSelfBracket { i });
                }
                continue;
            }
            let neg: Vec<Rat> = v.iter().map(|x| -x).collect();
            for (slot, value) in [(i * dim + j, v.clone()), (j * dim + i, neg)] {
                match &table[slot] {
                    Some(existing) if *existing != value => {
                        return Err(Error::AntisymmetryConflict { i: i.min(j), j: i.max(j) })
                    }
                    _ => table[slot] = Some(value),
                }
            }
        }
        let table = table.into_iter().map(|v| v.unwrap_or_else(|| zeros(dim))).collect();
        let alg = LieAlgebra { dim, labels: default_labels(dim), table };
        alg.check_jacobi()?;
        Ok(alg)
    }

    /// Builds an algebra from structure constants `(i, j, k, c)` meaning
    /// `[e_i, e_j]` has `c` as its `e_k` coefficient.
    pub fn from_constants(dim: usize, constants: &[(usize, usize, usize, Rat)]) -> Result<Self> {
        let mut entries: Vec<BracketEntry> = Vec::new();
        for (i, j, k, c) in constants {
            if *k >= dim {
                return Err(Error::IndexOutOfRange { index: *k, dim });
            }
            match entries.iter_mut().find(|(a, b, _)| (*a, *b) == (*i, *j)) {
                Some((_, _, v)) => v[*k] += c,
                None => {
                    let mut v = zeros(dim);
                    v[*k] = c.clone();
                    entries.push((*i, *j, v));
                }
            }
        }
        Self::new(dim, &entries)
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra { dim, labels: default_labels(dim), table: vec![zeros(dim); dim * dim] }
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() == self.dim {
            self.labels = labels;
        }
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Rat] {
        &self.table[i * self.dim + j]
    }

    /// Nonzero brackets `[e_i, e_j]` with `i < j`.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, &[Rat])> + '_ {
        (0..self.dim).flat_map(move |i| {
            (i + 1..self.dim).filter_map(move |j| {
                let v = self.basis_bracket(i, j);
                (!is_zero_vec(v)).then_some((i, j, v))
            })
        })
    }

    fn check_len(&self, v: &[Rat]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Result<Vec<Rat>> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = zeros(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                axpy(&mut out, &(xi * yj), self.basis_bracket(i, j));
            }
        }
        out
    }

    /// Matrix of `ad_x` acting on column vectors: column `j` is `[x, e_j]`.
    pub fn ad(&self, x: &[Rat]) -> Result<Matrix> {
        self.check_len(x)?;
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, c) in self.basis_bracket(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        m[(k, j)] += xi * c;
                    }
                }
            }
        }
        Ok(m)
    }

    fn check_jacobi(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut r = self.bracket_unchecked(self.basis_bracket(i, j), &unit_vec(n, k));
                    let a = self.bracket_unchecked(self.basis_bracket(j, k), &unit_vec(n, i));
                    let b = self.bracket_unchecked(self.basis_bracket(k, i), &unit_vec(n, j));
                    for ((x, y), z) in r.iter_mut().zip(a).zip(b) {
                        *x += y + z;
                    }
                    if !is_zero_vec(&r) {
                        return Err(Error::JacobiViolation { i, j, k, residual: r });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| is_zero_vec(v))
    }

    /// `[a, b]` for subspaces of the algebra.
    pub fn bracket_spaces(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        let mut vs = Vec::new();
        for x in a.basis_vectors() {
            for y in b.basis_vectors() {
                vs.push(self.bracket(x, y)?);
            }
        }
        Subspace::span(self.dim, &vs)
    }

    pub fn derived_algebra(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.bracket_spaces(&full, &full).expect("same ambient")
    }

    /// `{x : [x, s] = 0}`.
    pub fn centralizer(&self, s: &Subspace) -> Result<Subspace> {
        if s.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch(self.dim, s.ambient_dim()));
        }
        // Rows indexed by (basis vector y of s, output coordinate): x -> [x, y].
        let mut rows = Vec::new();
        for y in s.basis_vectors() {
            let ad_y = self.ad(y)?;
            // [x, y] = -ad_y x
            rows.extend(ad_y.row_vecs());
        }
        Ok(crate::linalg::kernel(&Matrix::from_rows(self.dim, rows)?))
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&Subspace::full(self.dim)).expect("same ambient")
    }

    /// `g, [g,g], [[g,g],[g,g]], ...` until it stabilizes.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_spaces(last, last).expect("same ambient");
            if &next == last {
                return series;
            }
            series.push(next);
        }
    }

    /// `g, [g,g], [g,[g,g]], ...` until it stabilizes.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim);
        let mut series = vec![full.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_spaces(&full, last).expect("same ambient");
            if &next == last {
                return series;
            }
            series.push(next);
        }
    }

    /// The subalgebra `s` as an algebra in its own canonical basis.
    pub fn subalgebra(&self, s: &Subspace) -> Result<LieAlgebra> {
        if s.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch(self.dim, s.ambient_dim()));
        }
        let basis: Vec<&[Rat]> = s.basis_vectors().collect();
        let mut entries = Vec::new();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let v = self.bracket_unchecked(basis[i], basis[j]);
                let coords = s.coordinates(&v)?.ok_or(Error::NotASubalgebra { i, j })?;
                if !is_zero_vec(&coords) {
                    entries.push((i, j, coords));
                }
            }
        }
        LieAlgebra::new(basis.len(), &entries)
    }

    /// Same algebra with basis vectors permuted and rescaled: new `e'_a =
    /// change[a]` in old coordinates. `change` must be invertible.
    pub fn change_basis(&self, change: &Matrix) -> Result<LieAlgebra> {
        let inv = change.inverse().ok_or_else(|| Error::Invalid("singular change of basis".into()))?;
        let mut entries = Vec::new();
        for a in 0..self.dim {
            for b in a + 1..self.dim {
                let v = self.bracket(change.row(a), change.row(b))?;
                let coords = inv.apply_left(&v)?;
                if !is_zero_vec(&coords) {
                    entries.push((a, b, coords));
                }
            }
        }
        LieAlgebra::new(self.dim, &entries)
    }
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.table == other.table
    }
}

impl Eq for LieAlgebra {}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LieAlgebra(dim {}", self.dim)?;
        for (i, j, v) in self.nonzero_brackets() {
            let terms: Vec<String> = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("{c}*{}", self.labels[k]))
                .collect();
            write!(f, "; [{}, {}] = {}", self.labels[i], self.labels[j], terms.join(" + "))?;
        }
        write!(f, ")")
    }
}

fn default_labels(dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("e{i}")).collect()
}

fn unit_vec(n: usize, i: usize) -> Vec<Rat> {
    crate::linalg::rat::unit(n, i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat::{from_ints, int, unit};

    fn h3() -> LieAlgebra {
        LieAlgebra::new(3, &[(0, 1, from_ints(&[0, 0, 1]))]).unwrap()
    }

    #[test]
    fn heisenberg_is_accepted() {
        let h = h3();
        assert_eq!(h.bracket(&unit(3, 0), &unit(3, 1)).unwrap(), unit(3, 2));
        assert_eq!(h.bracket(&unit(3, 1), &unit(3, 0)).unwrap(), from_ints(&[0, 0, -1]));
    }

    #[test]
    fn two_dimensional_nonabelian_is_accepted() {
        let a = LieAlgebra::new(2, &[(0, 1, from_ints(&[1, 0]))]).unwrap();
        assert!(!a.is_abelian());
    }

    #[test]
    fn so3_is_accepted() {
        LieAlgebra::new(3, &[
            (0, 1, from_ints(&[0, 0, 1])),
            (1, 2, from_ints(&[1, 0, 0])),
            (2, 0, from_ints(&[0, 1, 0])),
        ])
        .unwrap();
    }

    #[test]
    fn jacobi_violation_reports_triple() {
        let err = LieAlgebra::new(3, &[
            (0, 1, from_ints(&[0, 0, 1])),
            (0, 2, from_ints(&[0, 1, 0])),
            (1, 2, from_ints(&[0, 1, 0])),
        ])
        .unwrap_err();
        match err {
            Error::JacobiViolation { i: 0, j: 1, k: 2, residual } => assert!(!is_zero_vec(&residual)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn antisymmetry_conflict() {
        let err = LieAlgebra::new(3, &[(0, 1, from_ints(&[0, 0, 1])), (1, 0, from_ints(&[0, 0, 1]))])
            .unwrap_err();
        assert!(matches!(err, Error::AntisymmetryConflict { i: 0, j: 1 }));
        // consistent duplicates are fine
        LieAlgebra::new(3, &[(0, 1, from_ints(&[0, 0, 1])), (1, 0, from_ints(&[0, 0, -1]))]).unwrap();
    }

    #[test]
    fn bad_indices() {
        assert!(matches!(
            LieAlgebra::new(2, &[(0, 2, from_ints(&[0, 0]))]),
            Err(Error::IndexOutOfRange { index: 2, dim: 2 })
        ));
        assert!(matches!(
            LieAlgebra::new(2, &[(1, 1, from_ints(&[1, 0]))]),
            Err(Error::NonzeroSelfBracket { i: 1 })
        ));
    }

    #[test]
    fn self_bracket_vanishes() {
        let h = h3();
        let x = from_ints(&[3, -1, 7]);
        assert!(is_zero_vec(&h.bracket(&x, &x).unwrap()));
        assert!(matches!(h.bracket(&x, &[int(1)]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn series_and_center() {
        let h = h3();
        let z = Subspace::span(3, &[unit(3, 2)]).unwrap();
        assert_eq!(h.center(), z);
        assert_eq!(h.derived_algebra(), z);
        assert_eq!(h.lower_central_series().len(), 3);
        assert_eq!(h.derived_series().last().unwrap().dim(), 0);
    }

    #[test]
    fn subalgebra_materializes() {
        let h = h3();
        let s = Subspace::span(3, &[unit(3, 0), unit(3, 2)]).unwrap();
        assert!(h.subalgebra(&s).unwrap().is_abelian());
        let bad = Subspace::span(3, &[unit(3, 0), unit(3, 1)]).unwrap();
        assert!(matches!(h.subalgebra(&bad), Err(Error::NotASubalgebra { .. })));
    }
}
