//! The reduced algebra `b_nu = g_nu / n_nu^nat`, the invariant `delta^nat`,
//! the cocycle `gamma_tau` on `g_nu / n_nu`, and the index formula verifiers.

mod verify;

pub use verify::{
    find_witness, mu_self_membership, panasyuk_from, regular_correspondence, verify_index_formula, verify_panasyuk,
    verify_rais, verify_regular_correspondence, FormulaCheck, PanasyukReport, RaisReport, ReductionReport, Witness,
};

use num_traits::Zero;

use crate::algebra::{central_extension, Cocycle2, Ideal, LieAlgebra, QuotientMap};
use crate::coadjoint::{index, isotropy, rep_isotropy, GenericityCertificate};
use crate::error::{Error, Result};
use crate::linalg::rat::{dot, scale};
use crate::linalg::{Matrix, Rat, Subspace};
use crate::sampling::draws;

/// `ker nu ∩ n_nu`, checked to absorb `[g_nu, n_nu]`.
pub fn natural_kernel(alg: &LieAlgebra, n: &Ideal, nu: &[Rat]) -> Result<Subspace> {
    let g_nu = rep_isotropy(alg, n, nu)?;
    let n_nu = n.space().intersect(&g_nu)?;
    let sigma0 = n.lift(nu)?;
    let n_nat = n_nu.kernel_within(&Matrix::from_rows(alg.dim(), vec![sigma0])?)?;
    for x in g_nu.basis_vectors() {
        for y in n_nu.basis_vectors() {
            if !n_nat.contains(&alg.bracket(x, y)?)? {
                return Err(Error::IdealityViolation);
            }
        }
    }
    Ok(n_nat)
}

/// `g_nu` materialized in its canonical basis together with the quotient by
/// `n_nu^nat`. Subspaces of `g_nu` are kept in both ambient and `g_nu`
/// coordinates.
#[derive(Clone, Debug)]
pub struct ReducedAlgebra {
    pub nu: Vec<Rat>,
    pub g_nu: Subspace,
    pub n_nu: Subspace,
    pub n_natural: Subspace,
    pub g_nu_algebra: LieAlgebra,
    /// `n_nu` in `g_nu` coordinates.
    pub n_nu_local: Subspace,
    /// `n_nu^nat` in `g_nu` coordinates.
    pub n_natural_local: Subspace,
    /// `g_nu -> b_nu`.
    pub quotient: QuotientMap,
}

impl ReducedAlgebra {
    /// `nu` does not vanish on `n_nu`.
    pub fn nu_nonzero(&self) -> bool {
        self.n_nu.dim() > self.n_natural.dim()
    }

    pub fn b_nu(&self) -> &LieAlgebra {
        self.quotient.quotient()
    }

    /// `sigma|g_nu` in `g_nu` coordinates.
    pub fn tau_of(&self, sigma: &[Rat]) -> Result<Vec<Rat>> {
        self.g_nu.restrict_functional(sigma)
    }

    /// `tau` as a covector on `b_nu`; `tau` must vanish on `n_nu^nat`.
    pub fn descend(&self, tau: &[Rat]) -> Result<Vec<Rat>> {
        if !self.n_natural_local.annihilated_by(tau)? {
            return Err(Error::NotAnExtension);
        }
        self.quotient.section().apply_left(tau)
    }
}

fn local(g_nu: &Subspace, s: &Subspace) -> Result<Subspace> {
    let rows = s
        .basis_vectors()
        .map(|v| g_nu.coordinates(v)?.ok_or(Error::NotContained))
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(g_nu.dim(), &rows)
}

pub fn reduced_algebra(alg: &LieAlgebra, n: &Ideal, nu: &[Rat]) -> Result<ReducedAlgebra> {
    let g_nu = rep_isotropy(alg, n, nu)?;
    let n_nu = n.space().intersect(&g_nu)?;
    let n_natural = natural_kernel(alg, n, nu)?;
    let g_nu_algebra = alg.subalgebra(&g_nu)?;
    let n_nu_local = local(&g_nu, &n_nu)?;
    let n_natural_local = local(&g_nu, &n_natural)?;
    let quotient = QuotientMap::new(&g_nu_algebra, &Ideal::new(&g_nu_algebra, n_natural_local.clone())?)?;
    let r = ReducedAlgebra {
        nu: nu.to_vec(),
        g_nu,
        n_nu,
        n_natural,
        g_nu_algebra,
        n_nu_local,
        n_natural_local,
        quotient,
    };
    if r.nu_nonzero() {
        // the image of n_nu is a central line
        let image = r.n_nu_local.image(r.quotient.projection())?;
        if image.dim() != 1 || !r.b_nu().centralizer(&image)?.is_full() {
            return Err(Error::AssertionFailed("image of n_nu in b_nu is not a central line".into()));
        }
    }
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaReport {
    pub delta: u8,
    /// Witness is a regular covector, nonvanishing on its isotropy when `delta = 1`.
    pub certificate: GenericityCertificate,
}

/// 1 when regular covectors of `n` generically do not vanish on their own
/// isotropy algebra, else 0.
pub fn delta_natural(n: &LieAlgebra, seed: u64, samples: usize, bound: u64) -> Result<DeltaReport> {
    let idx = index(n, seed, samples, bound)?;
    let rank = idx.certificate.achieved_rank;
    let mut first_regular = None;
    let mut tried = 0;
    let candidates = std::iter::once(idx.certificate.witness.clone()).chain(draws(seed, "delta", samples, bound, n.dim()));
    for mu in candidates {
        tried += 1;
        let iso = isotropy(n, &mu)?;
        if n.dim() - iso.dim() != rank {
            continue;
        }
        let cert = |w: Vec<Rat>| GenericityCertificate {
            witness: w,
            achieved_rank: rank,
            samples_tried: tried,
            seed,
            coefficient_bound: bound,
            saturated: idx.certificate.saturated,
        };
        if !iso.annihilated_by(&mu)? {
            return Ok(DeltaReport { delta: 1, certificate: cert(mu) });
        }
        if first_regular.is_none() {
            first_regular = Some(mu);
        }
    }
    let witness = first_regular.unwrap_or(idx.certificate.witness);
    Ok(DeltaReport {
        delta: 0,
        certificate: GenericityCertificate {
            witness,
            achieved_rank: rank,
            samples_tried: tried,
            seed,
            coefficient_bound: bound,
            saturated: idx.certificate.saturated,
        },
    })
}

/// The cocycle `(xi, eta) -> tau([xi, eta])` on `g_nu / n_nu`.
#[derive(Clone, Debug)]
pub struct CocycleData {
    /// `g_nu -> g_nu / n_nu`, in `g_nu` coordinates.
    pub quotient: QuotientMap,
    pub gamma: Cocycle2,
}

/// `tau` is in `g_nu` coordinates and must agree with `nu` on `n_nu`.
pub fn cocycle_gamma(red: &ReducedAlgebra, n: &Ideal, tau: &[Rat]) -> Result<CocycleData> {
    let section: Vec<Vec<Rat>> = red
        .n_nu_local
        .complement_in(&Subspace::full(red.g_nu.dim()))?
        .basis_vectors()
        .map(<[Rat]>::to_vec)
        .collect();
    cocycle_gamma_with_section(red, n, tau, &section)
}

/// As [`cocycle_gamma`], with the quotient basis given by explicit
/// complement vectors of `n_nu` in `g_nu` coordinates.
pub fn cocycle_gamma_with_section(
    red: &ReducedAlgebra,
    n: &Ideal,
    tau: &[Rat],
    section: &[Vec<Rat>],
) -> Result<CocycleData> {
    let gl = &red.g_nu_algebra;
    if tau.len() != gl.dim() {
        return Err(Error::DimensionMismatch { expected: gl.dim(), got: tau.len() });
    }
    let sigma0 = n.lift(&red.nu)?;
    for (x, xl) in red.n_nu.basis_vectors().zip(local_vectors(red, &red.n_nu)?) {
        if dot(tau, &xl) != dot(&sigma0, x) {
            return Err(Error::NotAnExtension);
        }
    }
    for xl in red.n_nu_local.basis_vectors() {
        for j in 0..gl.dim() {
            let e = crate::linalg::rat::unit(gl.dim(), j);
            if !dot(tau, &gl.bracket(xl, &e)?).is_zero() {
                return Err(Error::FactorizationFailure);
            }
        }
    }
    let quotient = QuotientMap::with_section(gl, &Ideal::new(gl, red.n_nu_local.clone())?, section)?;
    let q = quotient.quotient().dim();
    let lifts: Vec<Vec<Rat>> = (0..q).map(|a| quotient.section().column(a)).collect();
    let mut form = Matrix::zeros(q, q);
    for a in 0..q {
        for b in 0..q {
            form[(a, b)] = dot(tau, &gl.bracket(&lifts[a], &lifts[b])?);
        }
    }
    let gamma = Cocycle2::new(quotient.quotient(), form)?;
    Ok(CocycleData { quotient, gamma })
}

fn local_vectors(red: &ReducedAlgebra, s: &Subspace) -> Result<Vec<Vec<Rat>>> {
    s.basis_vectors()
        .map(|v| red.g_nu.coordinates(v)?.ok_or(Error::NotContained))
        .collect()
}

/// Whether `c1 - c2 = lambda ∘ [.,.]` for some functional `lambda`, with
/// `lambda` as witness.
pub fn cocycle_class_equal(alg: &LieAlgebra, c1: &Cocycle2, c2: &Cocycle2) -> Result<(bool, Option<Vec<Rat>>)> {
    let n = alg.dim();
    if c1.dim() != n || c2.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: c1.dim().max(c2.dim()) });
    }
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            rows.push(alg.basis_bracket(i, j).to_vec());
            rhs.push(&c1.form()[(i, j)] - &c2.form()[(i, j)]);
        }
    }
    if rows.is_empty() {
        return Ok((true, Some(vec![Rat::zero(); n])));
    }
    let lambda = Matrix::from_rows(n, rows)?.solve(&rhs)?;
    Ok((lambda.is_some(), lambda))
}

/// Rebuilds `b_nu` as the central extension of `g_nu / n_nu` by `gamma_tau`,
/// using a complement `s` of `n_nu^nat` in `ker tau` and `z` in `n_nu` with
/// `tau(z) = 1`, and compares structure constants in the basis `(s, z)`.
pub fn split_extension_matches(red: &ReducedAlgebra, n: &Ideal, tau: &[Rat]) -> Result<bool> {
    if !red.nu_nonzero() {
        return Err(Error::Invalid("nu vanishes on n_nu; b_nu is not a central extension".into()));
    }
    let dim = red.g_nu.dim();
    let ker_tau = Subspace::full(dim).kernel_within(&Matrix::from_rows(dim, vec![tau.to_vec()])?)?;
    let s: Vec<Vec<Rat>> = red.n_natural_local.complement_in(&ker_tau)?.basis_vectors().map(<[Rat]>::to_vec).collect();
    let z = red
        .n_nu_local
        .basis_vectors()
        .find(|x| !dot(tau, x).is_zero())
        .map(|x| scale(&(Rat::from_integer(1.into()) / dot(tau, x)), x))
        .ok_or(Error::NotAnExtension)?;
    let mut b_basis = s.clone();
    b_basis.push(z);
    let b_nu = QuotientMap::with_section(
        &red.g_nu_algebra,
        &Ideal::new(&red.g_nu_algebra, red.n_natural_local.clone())?,
        &b_basis,
    )?;
    let data = cocycle_gamma_with_section(red, n, tau, &s)?;
    let rebuilt = central_extension(data.quotient.quotient(), &data.gamma)?;
    Ok(&rebuilt == b_nu.quotient())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;
    use crate::linalg::rat::{from_ints, is_zero_vec, unit};

    #[test]
    fn natural_kernel_examples() {
        let h = catalog("heisenberg3").unwrap();
        assert!(natural_kernel(&h.algebra, h.ideal("center").unwrap(), &from_ints(&[1])).unwrap().is_zero());
        let k = natural_kernel(&h.algebra, h.ideal("span12").unwrap(), &from_ints(&[0, 1])).unwrap();
        assert_eq!(k, Subspace::span(3, &[unit(3, 1)]).unwrap());
        let se3 = catalog("se3").unwrap();
        let t = se3.ideal("translations").unwrap();
        assert_eq!(natural_kernel(&se3.algebra, t, &from_ints(&[0, 0, 0])).unwrap(), *t.space());
    }

    #[test]
    fn reduced_algebra_examples() {
        let h = catalog("heisenberg3").unwrap();
        let r = reduced_algebra(&h.algebra, h.ideal("center").unwrap(), &from_ints(&[1])).unwrap();
        assert_eq!(r.b_nu(), &h.algebra);
        let r = reduced_algebra(&h.algebra, h.ideal("span12").unwrap(), &from_ints(&[0, 1])).unwrap();
        assert_eq!(r.b_nu(), &LieAlgebra::abelian(1));
        let gl2 = catalog("gl2").unwrap();
        let r = reduced_algebra(&gl2.algebra, gl2.ideal("sl2").unwrap(), &from_ints(&[1, 0, 0])).unwrap();
        assert_eq!(r.b_nu(), &LieAlgebra::abelian(2));
    }

    #[test]
    fn delta_examples() {
        let d = |name: &str| delta_natural(&catalog(name).unwrap().algebra, 0, 16, 7).unwrap().delta;
        assert_eq!(d("sl2"), 1);
        assert_eq!(d("aff1"), 0);
        assert_eq!(d("abelian:3"), 1);
    }

    #[test]
    fn heisenberg_cocycle_rebuilds_heisenberg() {
        let h = catalog("heisenberg3").unwrap();
        let center = h.ideal("center").unwrap();
        let r = reduced_algebra(&h.algebra, center, &from_ints(&[1])).unwrap();
        let tau = r.tau_of(&from_ints(&[0, 0, 1])).unwrap();
        let c = cocycle_gamma(&r, center, &tau).unwrap();
        assert_eq!(c.gamma.form(), &Matrix::from_ints(&[&[0, 1], &[-1, 0]]));
        assert_eq!(central_extension(c.quotient.quotient(), &c.gamma).unwrap(), h.algebra);
        assert!(split_extension_matches(&r, center, &tau).unwrap());
        // tau off by a functional vanishing on n_nu gives the same class
        let tau2 = r.tau_of(&from_ints(&[3, -2, 1])).unwrap();
        let c2 = cocycle_gamma(&r, center, &tau2).unwrap();
        assert!(cocycle_class_equal(c.quotient.quotient(), &c.gamma, &c2.gamma).unwrap().0);
        assert!(split_extension_matches(&r, center, &tau2).unwrap());
    }

    #[test]
    fn cocycle_edge_cases() {
        let h = catalog("heisenberg3").unwrap();
        let n = h.ideal("span12").unwrap();
        let r = reduced_algebra(&h.algebra, n, &from_ints(&[0, 1])).unwrap();
        let c = cocycle_gamma(&r, n, &r.tau_of(&from_ints(&[0, 0, 1])).unwrap()).unwrap();
        assert_eq!(c.gamma.dim(), 0);
        // tau disagreeing with nu on n_nu
        let err = cocycle_gamma(&r, n, &r.tau_of(&from_ints(&[0, 0, 2])).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotAnExtension));

        let plane = LieAlgebra::abelian(2);
        let omega = Cocycle2::new(&plane, Matrix::from_ints(&[&[0, 1], &[-1, 0]])).unwrap();
        let (eq, _) = cocycle_class_equal(&plane, &omega, &Cocycle2::zero(&plane)).unwrap();
        assert!(!eq);
        let (eq, lambda) = cocycle_class_equal(&plane, &omega, &omega).unwrap();
        assert!(eq && is_zero_vec(&lambda.unwrap()));
    }
}
