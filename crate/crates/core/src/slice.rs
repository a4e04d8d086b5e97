//! The isotropic affine slice `sigma + (n + g_nu)^⊥` through a covector and
//! the dimension identities relating its isotropy algebras.

use std::collections::BTreeMap;

use rand::Rng;

use crate::algebra::{Ideal, LieAlgebra};
use crate::coadjoint::{
    ad_star_orbit_span, ideal_isotropy_from_nu, index, is_regular, isotropy, kirillov_form, rep_isotropy,
    rep_orbit_coindex, Covector, IndexReport,
};
use crate::error::{ComplementClause, Error, Result};
use crate::linalg::rat::{add, dot};
use crate::linalg::{Matrix, Rat, Subspace};
use crate::reduction::reduced_algebra;
use crate::sampling::{self, draws, stream};

/// `sigma` restricted to `s`, in the canonical basis of `s`.
pub fn restrict(sigma: &[Rat], s: &Subspace) -> Result<Covector> {
    if sigma.len() != s.ambient_dim() {
        return Err(Error::AmbientMismatch(s.ambient_dim(), sigma.len()));
    }
    s.restrict_functional(sigma)
}

/// The five equivalent conditions for the slice to be a single point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConditions {
    pub direction_zero: bool,
    pub dimension_zero: bool,
    pub g_nu_plus_n_full: bool,
    pub g_sigma_eq_g_nu_tau: bool,
    pub n_nu_in_g_sigma: bool,
}

impl PointConditions {
    pub fn flags(&self) -> [bool; 5] {
        [
            self.direction_zero,
            self.dimension_zero,
            self.g_nu_plus_n_full,
            self.g_sigma_eq_g_nu_tau,
            self.n_nu_in_g_sigma,
        ]
    }

    pub fn agree(&self) -> bool {
        let f = self.flags();
        f.iter().all(|&x| x == f[0])
    }
}

#[derive(Clone, Debug)]
pub struct OrbitSliceReport {
    pub sigma: Covector,
    /// `sigma|n` in the ideal's canonical basis.
    pub nu: Covector,
    /// `sigma|g_nu` in the canonical basis of `g_nu`.
    pub tau: Covector,
    pub g_sigma: Subspace,
    pub g_nu: Subspace,
    pub n_nu: Subspace,
    pub n_sigma: Subspace,
    pub n_natural: Subspace,
    /// `(n + g_nu)^⊥`, in dual coordinates.
    pub direction: Subspace,
    /// `{xi in g_nu : sigma([xi, g_nu]) = 0}`, computed directly.
    pub g_nu_tau: Subspace,
    pub dims: BTreeMap<&'static str, usize>,
    pub verdicts: BTreeMap<&'static str, bool>,
    pub point_conditions: PointConditions,
}

impl OrbitSliceReport {
    pub fn all_pass(&self) -> bool {
        self.verdicts.values().all(|&v| v) && self.point_conditions.agree()
    }

    /// `alpha` lies on the slice through `sigma`.
    pub fn contains(&self, alpha: &[Rat]) -> Result<bool> {
        let diff: Vec<Rat> = alpha.iter().zip(&self.sigma).map(|(a, s)| a - s).collect();
        self.direction.contains(&diff)
    }
}

/// `{x in s : f(x) = 0}`.
fn functional_kernel(s: &Subspace, f: &[Rat]) -> Result<Subspace> {
    s.kernel_within(&Matrix::from_rows(f.len(), vec![f.to_vec()])?)
}

/// Whether `sigma([a, b]) = 0` for all `a`, `b` in `s`.
fn bracket_vanishes(alg: &LieAlgebra, s: &Subspace, sigma: &[Rat]) -> Result<bool> {
    let basis: Vec<&[Rat]> = s.basis_vectors().collect();
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            if dot(sigma, &alg.bracket(a, b)?) != Rat::default() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn analyze_slice(alg: &LieAlgebra, n: &Ideal, sigma: &[Rat]) -> Result<OrbitSliceReport> {
    let g = alg.dim();
    let nu = restrict(sigma, n.space())?;
    let g_sigma = isotropy(alg, sigma)?;
    let g_nu = rep_isotropy(alg, n, &nu)?;
    let n_nu = n.space().intersect(&g_nu)?;
    let n_sigma = n.space().intersect(&g_sigma)?;
    let n_natural = functional_kernel(&n_nu, sigma)?;
    let direction = n.space().sum(&g_nu)?.annihilator();
    let tau = restrict(sigma, &g_nu)?;
    // xi in g_nu with sigma([xi, u_b]) = 0 for every basis vector u_b of g_nu
    let b = kirillov_form(alg, sigma)?;
    let conditions = g_nu.basis_vectors().map(|u| b.apply(u)).collect::<Result<Vec<_>>>()?;
    let g_nu_tau = g_nu.kernel_within(&Matrix::from_rows(g, conditions)?)?;

    let d = |s: &Subspace| s.dim() as i64;
    let (dg, dn) = (g as i64, n.dim() as i64);
    let slice_dim = (dg - d(&g_nu)) - (dn - d(&n_nu));

    let mut verdicts = BTreeMap::new();
    verdicts.insert("n_sigma_dim", d(&n_sigma) == dn - (dg - d(&g_nu)));
    verdicts.insert("direction_is_orbit_span", ad_star_orbit_span(alg, &n_nu, sigma)? == direction);
    verdicts.insert("slice_dim", d(&direction) == slice_dim);
    verdicts.insert("g_nu_tau_split", g_nu_tau == n_nu.sum(&g_sigma)?);
    verdicts.insert("isotropy_dim_gap", d(&g_nu_tau) - d(&g_sigma) == d(&n_nu) - d(&n_sigma));
    verdicts.insert(
        "g_sigma_dim",
        d(&g_sigma) == (dn - (dg - d(&g_nu))) + (d(&g_nu_tau) - d(&n_natural)) - (d(&n_nu) - d(&n_natural)),
    );
    verdicts.insert("n_nu_isotropic", bracket_vanishes(alg, &n_nu, sigma)?);
    verdicts.insert("n_sigma_from_nu", ideal_isotropy_from_nu(alg, n, &nu)? == n_sigma);

    let point_conditions = PointConditions {
        direction_zero: direction.is_zero(),
        dimension_zero: slice_dim == 0,
        g_nu_plus_n_full: g_nu.sum(n.space())?.is_full(),
        g_sigma_eq_g_nu_tau: g_sigma == g_nu_tau,
        n_nu_in_g_sigma: n_nu.is_subspace_of(&g_sigma)?,
    };

    let mut dims = BTreeMap::new();
    dims.insert("g", g);
    dims.insert("n", n.dim());
    dims.insert("g_sigma", g_sigma.dim());
    dims.insert("g_nu", g_nu.dim());
    dims.insert("n_nu", n_nu.dim());
    dims.insert("n_sigma", n_sigma.dim());
    dims.insert("n_natural", n_natural.dim());
    dims.insert("g_nu_tau", g_nu_tau.dim());
    dims.insert("slice", direction.dim());

    Ok(OrbitSliceReport {
        sigma: sigma.to_vec(),
        nu,
        tau,
        g_sigma,
        g_nu,
        n_nu,
        n_sigma,
        n_natural,
        direction,
        g_nu_tau,
        dims,
        verdicts,
        point_conditions,
    })
}

/// `ind n - ind(g, n)`, cross-checked against the slice dimension at a
/// covector that is generic for both `n` and the action of `g` on `n*`.
pub fn complexity(alg: &LieAlgebra, n: &Ideal, seed: u64, samples: usize, bound: u64) -> Result<usize> {
    let n_alg = n.as_algebra(alg)?;
    let ind_n = index(&n_alg, seed, samples, bound)?;
    let co = rep_orbit_coindex(alg, n, seed, samples, bound)?;
    let n_rank = n.dim() - ind_n.algebra_index;
    let g_rank = n.dim() - co.coindex;
    let from_indices = ind_n.algebra_index as i64 - co.coindex as i64;

    let candidates = std::iter::once(co.certificate.witness.clone())
        .chain(std::iter::once(ind_n.certificate.witness.clone()))
        .chain(draws(seed, "complexity", samples, bound, n.dim()));
    for nu in candidates {
        if kirillov_form(&n_alg, &nu)?.rank() != n_rank || alg.dim() - rep_isotropy(alg, n, &nu)?.dim() != g_rank {
            continue;
        }
        let report = analyze_slice(alg, n, &n.lift(&nu)?)?;
        let from_slice = report.direction.dim();
        if from_indices != from_slice as i64 {
            return Err(Error::GenericityDisagreement { from_indices, from_slice });
        }
        return Ok(from_slice);
    }
    Err(Error::WitnessNotFound {
        tried: samples * bound as usize,
        reason: "no sample is generic for both n and the action of g on n*".into(),
    })
}

/// An abelian subalgebra `a ⊆ g_nu` with `g = a ⊕ n`, when the hypotheses
/// guaranteeing one hold. `nu` is in the ideal's canonical basis.
pub fn abelian_complement(
    alg: &LieAlgebra,
    n: &Ideal,
    nu: &[Rat],
    seed: u64,
    samples: usize,
    bound: u64,
) -> Result<Option<Subspace>> {
    let not_met = |c| Err(Error::HypothesisNotMet(c));
    if complexity(alg, n, seed, samples, bound)? != 0 {
        return not_met(ComplementClause::NonzeroComplexity);
    }
    let n_alg = n.as_algebra(alg)?;
    let ind_n = index(&n_alg, seed, samples, bound)?;
    if !is_regular(&n_alg, nu, &ind_n)? {
        return not_met(ComplementClause::NotIdealRegular);
    }
    if regular_extension(alg, n, nu, seed, bound)?.is_none() {
        return not_met(ComplementClause::NoRegularExtension);
    }
    let reduced = reduced_algebra(alg, n, nu)?;
    if !reduced.quotient.quotient().is_abelian() {
        return not_met(ComplementClause::ReducedNotAbelian);
    }

    let g_nu = &reduced.g_nu;
    let n_nu = &reduced.n_nu;
    let base: Vec<Vec<Rat>> = n_nu.complement_in(g_nu)?.basis_vectors().map(<[Rat]>::to_vec).collect();
    let shifts: Vec<Vec<Rat>> = n_nu.basis_vectors().map(<[Rat]>::to_vec).collect();
    for attempt in 0..=8u64 {
        let mut rng = stream(seed, "abelian-complement", attempt, bound);
        let rows: Vec<Vec<Rat>> = base
            .iter()
            .map(|v| {
                if attempt == 0 {
                    return v.clone();
                }
                shifts.iter().fold(v.clone(), |acc, s| {
                    let c = sampling::small_int(&mut rng, 2);
                    add(&acc, &s.iter().map(|x| x * &c).collect::<Vec<_>>())
                })
            })
            .collect();
        let a = Subspace::span(alg.dim(), &rows)?;
        if is_abelian_complement(alg, n, &a)? {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// `[a, a] = 0`, `a ∩ n = 0` and `a + n = g`.
pub fn is_abelian_complement(alg: &LieAlgebra, n: &Ideal, a: &Subspace) -> Result<bool> {
    Ok(alg.bracket_spaces(a, a)?.is_zero()
        && a.intersect(n.space())?.is_zero()
        && a.sum(n.space())?.is_full())
}

/// An extension `sigma = lift(nu) + lambda` with `lambda` in `n^⊥` that is
/// regular for `g`, searched over 16 seeded draws.
pub fn regular_extension(alg: &LieAlgebra, n: &Ideal, nu: &[Rat], seed: u64, bound: u64) -> Result<Option<Covector>> {
    let idx = index(alg, seed, 16, bound)?;
    regular_extension_with(alg, n, nu, &idx, seed, bound)
}

/// As [`regular_extension`] with a precomputed index report for `g`.
pub fn regular_extension_with(
    alg: &LieAlgebra,
    n: &Ideal,
    nu: &[Rat],
    idx: &IndexReport,
    seed: u64,
    bound: u64,
) -> Result<Option<Covector>> {
    let base = n.lift(nu)?;
    let perp = n.space().annihilator();
    for k in 0..EXTENSION_TRIES {
        let sigma = if k == 0 { base.clone() } else { extend(&base, &perp, &mut stream(seed, "extension", k, bound), bound) };
        if is_regular(alg, &sigma, idx)? {
            return Ok(Some(sigma));
        }
    }
    Ok(None)
}

/// Extension draws tried per covector of the ideal.
pub const EXTENSION_TRIES: u64 = 16;

/// `base` plus a random element of `perp`.
pub fn extend<R: Rng>(base: &[Rat], perp: &Subspace, rng: &mut R, bound: u64) -> Covector {
    let coeffs = sampling::vector(rng, perp.dim(), bound);
    add(base, &perp.combine(&coeffs))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsotropyCoincidence {
    NotApplicable,
    Holds,
}

/// When the slice is a point and the reduced algebra is abelian, the
/// isotropy algebras of `sigma` and `nu` coincide, in `g` and in `n`.
pub fn check_isotropy_coincidence(alg: &LieAlgebra, n: &Ideal, sigma: &[Rat]) -> Result<IsotropyCoincidence> {
    let r = analyze_slice(alg, n, sigma)?;
    if !r.direction.is_zero() {
        return Ok(IsotropyCoincidence::NotApplicable);
    }
    let reduced = reduced_algebra(alg, n, &r.nu)?;
    if !reduced.quotient.quotient().is_abelian() {
        return Ok(IsotropyCoincidence::NotApplicable);
    }
    if r.g_sigma != r.g_nu {
        return Err(Error::AssertionFailed(format!("g_sigma = {:?} differs from g_nu = {:?}", r.g_sigma, r.g_nu)));
    }
    if r.n_sigma != r.n_nu {
        return Err(Error::AssertionFailed(format!("n_sigma = {:?} differs from n_nu = {:?}", r.n_sigma, r.n_nu)));
    }
    if alg.dim() - r.g_sigma.dim() != n.dim() - r.n_sigma.dim() {
        return Err(Error::AssertionFailed("orbit dimensions of sigma and nu differ".into()));
    }
    Ok(IsotropyCoincidence::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{catalog, semidirect, Representation};
    use crate::linalg::rat::{from_ints, zeros};

    #[test]
    fn restrict_examples() {
        let h = catalog("heisenberg3").unwrap();
        let c = h.ideal("center").unwrap().space();
        assert_eq!(restrict(&zeros(3), c).unwrap(), zeros(1));
        assert_eq!(restrict(&from_ints(&[0, 0, 1]), c).unwrap(), from_ints(&[1]));
        let se3 = catalog("se3").unwrap();
        let t = se3.ideal("translations").unwrap().space();
        assert_eq!(restrict(&from_ints(&[4, -2, 9, 0, 0, 1]), t).unwrap(), from_ints(&[0, 0, 1]));
        assert!(restrict(&zeros(2), t).is_err());
    }

    #[test]
    fn heisenberg_center_slice() {
        let h = catalog("heisenberg3").unwrap();
        let r = analyze_slice(&h.algebra, h.ideal("center").unwrap(), &from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(r.dims["g_nu"], 3);
        assert_eq!(r.dims["n_nu"], 1);
        assert_eq!(r.dims["n_natural"], 0);
        assert_eq!(r.dims["slice"], 0);
        assert!(r.all_pass(), "{:?}", r.verdicts);
        assert_eq!(r.point_conditions.flags(), [true; 5]);

        let r = analyze_slice(&h.algebra, h.ideal("span12").unwrap(), &from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(r.dims["slice"], 1);
        assert_eq!(r.point_conditions.flags(), [false; 5]);
        assert!(r.all_pass());
    }

    #[test]
    fn se3_slice() {
        let e = catalog("se3").unwrap();
        let r = analyze_slice(&e.algebra, e.ideal("translations").unwrap(), &from_ints(&[3, -1, 2, 0, 0, 1])).unwrap();
        assert_eq!(r.dims["g_nu"], 4);
        assert_eq!(r.dims["n_nu"], 3);
        assert_eq!(r.dims["n_sigma"], 1);
        assert_eq!(r.dims["slice"], 2);
        assert!(r.all_pass(), "{:?}", r.verdicts);
        assert!(r.contains(&from_ints(&[3, -1, 7, 0, 0, 1])).unwrap() || !r.direction.is_zero());
    }

    #[test]
    fn abelian_slices_are_points() {
        let g = LieAlgebra::abelian(3);
        let n = Ideal::from_vectors(&g, &[from_ints(&[1, 1, 0])]).unwrap();
        let r = analyze_slice(&g, &n, &from_ints(&[1, 2, 3])).unwrap();
        assert!(r.g_sigma.is_full() && r.g_nu.is_full());
        assert_eq!(r.dims["slice"], 0);
        assert!(r.all_pass());
        assert_eq!(r.point_conditions.flags(), [true; 5]);
    }

    #[test]
    fn complexity_examples() {
        let cases = [("heisenberg3", "center", 0), ("se3", "translations", 2), ("e2", "translations", 1)];
        for (name, ideal, co) in cases {
            let e = catalog(name).unwrap();
            assert_eq!(complexity(&e.algebra, e.ideal(ideal).unwrap(), 0, 16, 7).unwrap(), co, "{name}");
        }
    }

    #[test]
    fn abelian_complement_examples() {
        let aff = catalog("aff1").unwrap();
        let whole = aff.ideal("whole").unwrap();
        let nu = index(&aff.algebra, 0, 16, 7).unwrap().certificate.witness;
        let a = abelian_complement(&aff.algebra, whole, &nu, 0, 16, 7).unwrap().unwrap();
        assert!(a.is_zero());

        let h = catalog("heisenberg3").unwrap();
        let err = abelian_complement(&h.algebra, h.ideal("center").unwrap(), &from_ints(&[1]), 0, 16, 7).unwrap_err();
        assert!(matches!(err, Error::HypothesisNotMet(ComplementClause::ReducedNotAbelian)));

        // gl2 over sl2: the complement is a line through the center modulo sl2
        let gl2 = catalog("gl2").unwrap();
        let sl2 = gl2.ideal("sl2").unwrap();
        let a = abelian_complement(&gl2.algebra, sl2, &from_ints(&[1, 0, 0]), 0, 16, 7).unwrap().unwrap();
        assert_eq!(a.dim(), 1);
        assert!(is_abelian_complement(&gl2.algebra, sl2, &a).unwrap());

        // abelian k acting trivially: k itself is recovered up to V-shifts
        let k = LieAlgebra::abelian(2);
        let (g, v) = semidirect(&k, &Representation::trivial(&k, 2)).unwrap();
        let a = abelian_complement(&g, &v, &from_ints(&[1, 3]), 0, 16, 7).unwrap().unwrap();
        assert!(is_abelian_complement(&g, &v, &a).unwrap());
    }

    #[test]
    fn isotropy_coincidence_examples() {
        let gl2 = catalog("gl2").unwrap();
        let sigma = from_ints(&[1, 2, 3, 5]);
        assert_eq!(check_isotropy_coincidence(&gl2.algebra, gl2.ideal("sl2").unwrap(), &sigma).unwrap(), IsotropyCoincidence::Holds);
        let h = catalog("heisenberg3").unwrap();
        assert_eq!(
            check_isotropy_coincidence(&h.algebra, h.ideal("center").unwrap(), &from_ints(&[0, 0, 1])).unwrap(),
            IsotropyCoincidence::NotApplicable
        );
        let ab = LieAlgebra::abelian(2);
        assert_eq!(check_isotropy_coincidence(&ab, &Ideal::whole(&ab), &from_ints(&[1, 1])).unwrap(), IsotropyCoincidence::Holds);
    }
}
