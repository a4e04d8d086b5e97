//! Coadjoint action, Kirillov forms and isotropy algebras.
//!
//! Covectors are coordinate rows in the dual basis. The pairing convention is
//! `<ad*_xi sigma, eta> = sigma([xi, eta])`, so `ad*_xi` is the transpose of
//! `ad_xi` and the Kirillov form of `sigma` is `B[i][j] = sigma([e_i, e_j])`.

mod index;

pub(crate) use index::maximize;

pub use index::{
    index, is_regular, rep_orbit_coindex, GenericityCertificate, IndexReport, RepIndexReport,
};

use crate::algebra::{Ideal, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::rat::dot;
use crate::linalg::{kernel, Matrix, Rat, Subspace};

/// Coordinates of a linear functional in the dual basis.
pub type Covector = Vec<Rat>;

fn check(alg: &LieAlgebra, v: &[Rat]) -> Result<()> {
    if v.len() != alg.dim() {
        return Err(Error::DimensionMismatch { expected: alg.dim(), got: v.len() });
    }
    Ok(())
}

/// The operator `ad*_xi` on `g*`, acting on column covectors.
pub fn ad_star(alg: &LieAlgebra, xi: &[Rat]) -> Result<Matrix> {
    Ok(alg.ad(xi)?.transpose())
}

pub fn kirillov_form(alg: &LieAlgebra, sigma: &[Rat]) -> Result<Matrix> {
    check(alg, sigma)?;
    let n = alg.dim();
    Ok(Matrix::from_fn(n, n, |i, j| dot(sigma, alg.basis_bracket(i, j))))
}

/// Dimension of the coadjoint orbit through `sigma`.
pub fn orbit_dim(alg: &LieAlgebra, sigma: &[Rat]) -> Result<usize> {
    Ok(kirillov_form(alg, sigma)?.rank())
}

/// `g_sigma = {xi : sigma([xi, g]) = 0}`.
pub fn isotropy(alg: &LieAlgebra, sigma: &[Rat]) -> Result<Subspace> {
    Ok(kernel(&kirillov_form(alg, sigma)?))
}

/// `g_nu = {xi : nu([xi, n]) = 0}` for `nu` given in the ideal's canonical basis.
pub fn rep_isotropy(alg: &LieAlgebra, n: &Ideal, nu: &[Rat]) -> Result<Subspace> {
    let sigma0 = n.lift(nu)?;
    // row b: xi -> nu([xi, y_b])
    let rows = n
        .space()
        .basis_vectors()
        .map(|y| {
            let ad_y = alg.ad(y)?;
            // [xi, y] = -ad_y xi
            Ok(ad_y.apply_left(&sigma0)?.into_iter().map(|c| -c).collect())
        })
        .collect::<Result<Vec<Vec<Rat>>>>()?;
    Ok(kernel(&Matrix::from_rows(alg.dim(), rows)?))
}

/// `n_sigma = n ∩ g_sigma`.
pub fn ideal_isotropy(alg: &LieAlgebra, n: &Ideal, sigma: &[Rat]) -> Result<Subspace> {
    n.space().intersect(&isotropy(alg, sigma)?)
}

/// `{y in n : nu([y, g]) = 0}`, using only the restriction `nu`.
pub fn ideal_isotropy_from_nu(alg: &LieAlgebra, n: &Ideal, nu: &[Rat]) -> Result<Subspace> {
    let sigma0 = n.lift(nu)?;
    // row j: y -> sigma0([y, e_j]); [y, e_j] lies in n, where sigma0 agrees with nu
    let b0 = kirillov_form(alg, &sigma0)?;
    n.space().kernel_within(&b0.transpose())
}

/// `{xi : B_sigma(xi, y) = 0 for all y in n}`.
pub fn orthogonal_to_ideal(alg: &LieAlgebra, n: &Ideal, sigma: &[Rat]) -> Result<Subspace> {
    let b = kirillov_form(alg, sigma)?;
    let rows = n.space().basis_vectors().map(|y| b.apply(y)).collect::<Result<Vec<_>>>()?;
    Ok(kernel(&Matrix::from_rows(alg.dim(), rows)?))
}

/// Span of `ad*_y sigma` over `y` in `s`.
pub fn ad_star_orbit_span(alg: &LieAlgebra, s: &Subspace, sigma: &[Rat]) -> Result<Subspace> {
    let rows = s
        .basis_vectors()
        .map(|y| ad_star(alg, y)?.apply(sigma))
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(alg.dim(), &rows)
}
