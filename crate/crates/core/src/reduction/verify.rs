//! Index formula verifiers with certified witness search.

use super::{cocycle_gamma, delta_natural, reduced_algebra, CocycleData, DeltaReport, ReducedAlgebra};
use crate::algebra::{semidirect, Ideal, LieAlgebra, Representation};
use crate::coadjoint::{
    ad_star_orbit_span, index, is_regular, isotropy, maximize, rep_isotropy, rep_orbit_coindex, Covector,
    GenericityCertificate, IndexReport, RepIndexReport,
};
use crate::error::{Error, Result};
use crate::linalg::{kernel, Matrix, Rat, Subspace};
use crate::sampling::{stream, vector};
use crate::slice::regular_extension_with;

/// Covector draws tried before giving up on a witness.
pub const WITNESS_TRIES: u64 = 64;

/// A covector `nu` on the ideal meeting the theorem's hypotheses, with a
/// `g`-regular extension `sigma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub nu: Covector,
    pub sigma: Covector,
    /// Draws examined, this one included.
    pub attempts: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormulaCheck {
    pub ind_g: usize,
    pub ind_g_n: usize,
    pub ind_b_nu: usize,
    pub delta: u8,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct ReductionReport {
    pub witness: Witness,
    pub reduced: ReducedAlgebra,
    pub delta: DeltaReport,
    /// `gamma_tau` for `tau = sigma|g_nu`.
    pub cocycle: CocycleData,
    pub ind_g: IndexReport,
    pub coindex: RepIndexReport,
    pub ind_n: IndexReport,
    pub ind_b: IndexReport,
    pub formula: FormulaCheck,
    /// Regularity of `sigma` in `g` matches regularity of `tau` in `b_nu`.
    pub regular_correspondence: bool,
}

impl ReductionReport {
    pub fn nu_nonzero(&self) -> bool {
        self.reduced.nu_nonzero()
    }
}

/// Searches for `nu` with maximal `n`-orbit rank, maximal `g`-orbit rank,
/// `nu|n_nu != 0` when `delta = 1`, and a `g`-regular extension.
#[allow(clippy::too_many_arguments)]
pub fn find_witness(
    alg: &LieAlgebra,
    n: &Ideal,
    n_alg: &LieAlgebra,
    ind_g: &IndexReport,
    coindex: &RepIndexReport,
    ind_n: &IndexReport,
    delta: u8,
    seed: u64,
    bound: u64,
) -> Result<Witness> {
    let mut last = "no draw reached the maximal n-orbit rank";
    for t in 0..WITNESS_TRIES {
        let nu = vector(&mut stream(seed, "index-witness", t, bound), n.dim(), bound);
        let iso = isotropy(n_alg, &nu)?;
        if n.dim() - iso.dim() != ind_n.certificate.achieved_rank {
            continue;
        }
        if alg.dim() - rep_isotropy(alg, n, &nu)?.dim() != coindex.certificate.achieved_rank {
            last = "no draw reached the maximal g-orbit rank on n*";
            continue;
        }
        if delta == 1 && iso.annihilated_by(&nu)? {
            last = "no regular draw was nonzero on its isotropy";
            continue;
        }
        match regular_extension_with(alg, n, &nu, ind_g, seed ^ t, bound)? {
            Some(sigma) => return Ok(Witness { nu, sigma, attempts: t as usize + 1 }),
            None => last = "no draw had a g-regular extension",
        }
    }
    Err(Error::WitnessNotFound { tried: WITNESS_TRIES as usize, reason: last.into() })
}

/// `ind g = ind(g, n) + ind b_nu - delta` at a certified witness.
pub fn verify_index_formula(alg: &LieAlgebra, n: &Ideal, seed: u64, samples: usize, bound: u64) -> Result<ReductionReport> {
    let n_alg = n.as_algebra(alg)?;
    let ind_g = index(alg, seed, samples, bound)?;
    let coindex = rep_orbit_coindex(alg, n, seed, samples, bound)?;
    let ind_n = index(&n_alg, seed, samples, bound)?;
    let delta = delta_natural(&n_alg, seed, samples, bound)?;
    let witness = find_witness(alg, n, &n_alg, &ind_g, &coindex, &ind_n, delta.delta, seed, bound)?;
    let reduced = reduced_algebra(alg, n, &witness.nu)?;
    let ind_b = index(reduced.b_nu(), seed, samples, bound)?;
    let tau = reduced.tau_of(&witness.sigma)?;
    let cocycle = cocycle_gamma(&reduced, n, &tau)?;
    let regular_correspondence = regular_correspondence(alg, &reduced, &witness.sigma, &ind_g, &ind_b)?;
    let formula = FormulaCheck {
        ind_g: ind_g.algebra_index,
        ind_g_n: coindex.coindex,
        ind_b_nu: ind_b.algebra_index,
        delta: delta.delta,
        holds: ind_g.algebra_index + usize::from(delta.delta) == coindex.coindex + ind_b.algebra_index,
    };
    Ok(ReductionReport { witness, reduced, delta, cocycle, ind_g, coindex, ind_n, ind_b, formula, regular_correspondence })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PanasyukReport {
    pub ind_g: usize,
    pub ind_g_n: usize,
    /// Index of the affine Poisson structure `eta_tau` on `g_nu / n_nu`,
    /// obtained from `ind b_nu` by subtracting one when `nu|n_nu != 0`.
    pub ind_eta: usize,
    pub nu_nonzero: bool,
    pub holds: bool,
}

/// `ind g = ind(g, n) + ind eta_tau`, read off the same witness.
pub fn panasyuk_from(r: &ReductionReport) -> PanasyukReport {
    let nu_nonzero = r.nu_nonzero();
    let ind_eta = r.formula.ind_b_nu - usize::from(nu_nonzero);
    PanasyukReport {
        ind_g: r.formula.ind_g,
        ind_g_n: r.formula.ind_g_n,
        ind_eta,
        nu_nonzero,
        holds: r.formula.ind_g == r.formula.ind_g_n + ind_eta,
    }
}

pub fn verify_panasyuk(alg: &LieAlgebra, n: &Ideal, seed: u64, samples: usize, bound: u64) -> Result<PanasyukReport> {
    Ok(panasyuk_from(&verify_index_formula(alg, n, seed, samples, bound)?))
}

/// Whether `sigma` is `g`-regular exactly when `tau = sigma|g_nu`, as a
/// covector on `b_nu`, is `b_nu`-regular. `sigma` must restrict to
/// `red.nu` on the ideal.
pub fn regular_correspondence(
    alg: &LieAlgebra,
    red: &ReducedAlgebra,
    sigma: &[Rat],
    idx_g: &IndexReport,
    idx_b: &IndexReport,
) -> Result<bool> {
    let tau = red.tau_of(sigma)?;
    let tau_b = red.descend(&tau)?;
    Ok(is_regular(alg, sigma, idx_g)? == is_regular(red.b_nu(), &tau_b, idx_b)?)
}

pub fn verify_regular_correspondence(
    alg: &LieAlgebra,
    n: &Ideal,
    sigma: &[Rat],
    seed: u64,
    samples: usize,
    bound: u64,
) -> Result<bool> {
    let nu = n.space().restrict_functional(sigma)?;
    let red = reduced_algebra(alg, n, &nu)?;
    let idx_g = index(alg, seed, samples, bound)?;
    let idx_b = index(red.b_nu(), seed, samples, bound)?;
    regular_correspondence(alg, &red, sigma, &idx_g, &idx_b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaisReport {
    pub ind_g: usize,
    /// Coindex of the `k`-action on `V*`.
    pub ind_k_v: usize,
    pub ind_k_nu: usize,
    pub k_nu: Subspace,
    pub nu: Covector,
    pub sigma: Covector,
    /// Maximal `k`-orbit rank on `V*`.
    pub orbit: GenericityCertificate,
    pub holds: bool,
}

/// `k_nu = {zeta in k : nu ∘ rho(zeta) = 0}`.
pub fn k_isotropy(rep: &Representation, nu: &[Rat]) -> Result<Subspace> {
    let cols = rep.action().iter().map(|r| r.apply_left(nu)).collect::<Result<Vec<_>>>()?;
    let m = Matrix::from_fn(rep.space_dim(), cols.len(), |j, a| cols[a][j].clone());
    Ok(kernel(&m))
}

/// `ind (k ⋉ V) = ind(k, V) + ind k_nu` for `V` abelian.
pub fn verify_rais(k: &LieAlgebra, rep: &Representation, seed: u64, samples: usize, bound: u64) -> Result<RaisReport> {
    let (g, v) = semidirect(k, rep)?;
    let (m, d) = (k.dim(), rep.space_dim());
    let ind_g = index(&g, seed, samples, bound)?;
    let orbit =
        maximize(d, d.min(m), seed, "rais-orbit", samples, bound, |nu| Ok(m - k_isotropy(rep, nu)?.dim()))?;
    let candidates = std::iter::once(orbit.witness.clone())
        .chain((0..WITNESS_TRIES).map(|t| vector(&mut stream(seed, "rais-witness", t, bound), d, bound)));
    for (t, nu) in candidates.enumerate() {
        let k_nu = k_isotropy(rep, &nu)?;
        if m - k_nu.dim() != orbit.achieved_rank {
            continue;
        }
        let Some(sigma) = regular_extension_with(&g, &v, &nu, &ind_g, seed ^ t as u64, bound)? else {
            continue;
        };
        let ind_k_nu = index(&k.subalgebra(&k_nu)?, seed, samples, bound)?.algebra_index;
        let ind_k_v = d - orbit.achieved_rank;
        return Ok(RaisReport {
            ind_g: ind_g.algebra_index,
            ind_k_v,
            ind_k_nu,
            k_nu,
            nu,
            sigma,
            orbit,
            holds: ind_g.algebra_index == ind_k_v + ind_k_nu,
        });
    }
    Err(Error::WitnessNotFound {
        tried: WITNESS_TRIES as usize + 1,
        reason: "no k-regular covector on V had a regular extension".into(),
    })
}

/// `(mu vanishes on n_mu, mu lies in ad*_n mu)`.
pub fn mu_self_membership(n_alg: &LieAlgebra, mu: &[Rat]) -> Result<(bool, bool)> {
    let lhs = isotropy(n_alg, mu)?.annihilated_by(mu)?;
    let rhs = ad_star_orbit_span(n_alg, &Subspace::full(n_alg.dim()), mu)?.contains(mu)?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;
    use crate::linalg::rat::{from_ints, zeros};

    fn formula(name: &str, ideal: &str) -> FormulaCheck {
        let e = catalog(name).unwrap();
        verify_index_formula(&e.algebra, e.ideal(ideal).unwrap(), 0, 16, 7).unwrap().formula
    }

    #[test]
    fn index_formula_examples() {
        let f = formula("heisenberg3", "center");
        assert_eq!((f.ind_g, f.ind_g_n, f.ind_b_nu, f.delta, f.holds), (1, 1, 1, 1, true));
        let f = formula("heisenberg3", "span12");
        assert_eq!((f.ind_g, f.ind_g_n, f.ind_b_nu, f.delta, f.holds), (1, 1, 1, 1, true));
        let f = formula("se3", "translations");
        assert_eq!((f.ind_g, f.ind_g_n, f.ind_b_nu, f.delta, f.holds), (2, 1, 2, 1, true));
        for (name, ideal) in [("e2", "translations"), ("gl2", "sl2"), ("sl2", "sl2")] {
            assert!(formula(name, ideal).holds, "{name}/{ideal}");
        }
    }

    #[test]
    fn report_is_consistent() {
        let e = catalog("se3").unwrap();
        let r = verify_index_formula(&e.algebra, e.ideal("translations").unwrap(), 0, 16, 7).unwrap();
        assert!(r.regular_correspondence);
        assert!(r.reduced.nu_nonzero());
        assert_eq!(r.reduced.b_nu().dim(), 2);
        assert!(r.reduced.b_nu().is_abelian());
    }

    #[test]
    fn panasyuk_examples() {
        for (name, ideal) in [("heisenberg3", "center"), ("heisenberg3", "span12")] {
            let e = catalog(name).unwrap();
            let p = verify_panasyuk(&e.algebra, e.ideal(ideal).unwrap(), 0, 16, 7).unwrap();
            assert_eq!((p.ind_eta, p.holds), (0, true), "{name}/{ideal}");
        }
    }

    #[test]
    fn regular_correspondence_examples() {
        let e = catalog("heisenberg3").unwrap();
        let c = e.ideal("center").unwrap();
        assert!(verify_regular_correspondence(&e.algebra, c, &from_ints(&[0, 0, 1]), 0, 16, 7).unwrap());
        assert!(verify_regular_correspondence(&e.algebra, c, &from_ints(&[1, 0, 1]), 0, 16, 7).unwrap());
        let g = catalog("gl2").unwrap();
        let sl2 = g.ideal("sl2").unwrap();
        assert!(verify_regular_correspondence(&g.algebra, sl2, &from_ints(&[2, 1, -3, 5]), 0, 16, 7).unwrap());
    }

    #[test]
    fn rais_examples() {
        for (name, expect) in [("se3", (2, 1, 1)), ("e2", (1, 1, 0))] {
            let (k, rep) = catalog(name).unwrap().semidirect.unwrap();
            let r = verify_rais(&k, &rep, 0, 16, 7).unwrap();
            assert_eq!((r.ind_g, r.ind_k_v, r.ind_k_nu), expect, "{name}");
            assert!(r.holds);
        }
    }

    #[test]
    fn rais_zero_representation() {
        let k = catalog("sl2").unwrap().algebra;
        let r = verify_rais(&k, &Representation::trivial(&k, 2), 0, 16, 7).unwrap();
        assert_eq!((r.ind_g, r.ind_k_v, r.ind_k_nu, r.holds), (3, 2, 1, true));
        assert!(r.k_nu.is_full());
    }

    #[test]
    fn mu_self_membership_examples() {
        let ab = LieAlgebra::abelian(2);
        assert_eq!(mu_self_membership(&ab, &from_ints(&[1, 2])).unwrap(), (false, false));
        assert_eq!(mu_self_membership(&ab, &zeros(2)).unwrap(), (true, true));
        let aff = catalog("aff1").unwrap().algebra;
        assert_eq!(mu_self_membership(&aff, &from_ints(&[0, 1])).unwrap(), (true, true));
        let sl2 = catalog("sl2").unwrap().algebra;
        assert_eq!(mu_self_membership(&sl2, &from_ints(&[1, 0, 0])).unwrap(), (false, false));
    }
}
