//! Generic ranks by seeded sampling.

use super::{kirillov_form, rep_isotropy, Covector};
use crate::algebra::{Ideal, LieAlgebra};
use crate::error::Result;
use crate::linalg::Rat;
use crate::sampling::draws;

/// Records how a maximal rank was observed so the claim can be replayed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericityCertificate {
    pub witness: Covector,
    pub achieved_rank: usize,
    /// Draws evaluated before stopping.
    pub samples_tried: usize,
    pub seed: u64,
    pub coefficient_bound: u64,
    /// Whether `achieved_rank` reached the a priori upper bound, which makes
    /// it exact rather than a sampled lower bound.
    pub saturated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReport {
    pub algebra_index: usize,
    pub certificate: GenericityCertificate,
}

/// Both readings of the index of the action of `g` on `n*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepIndexReport {
    /// `dim n` minus the maximal orbit dimension.
    pub coindex: usize,
    /// `dim g_nu` at the maximizing witness.
    pub stab_dim: usize,
    pub certificate: GenericityCertificate,
}

/// Maximizes `rank` over the sample set, stopping early at `upper`.
pub(crate) fn maximize(
    len: usize,
    upper: usize,
    seed: u64,
    purpose: &str,
    samples: usize,
    bound: u64,
    mut rank: impl FnMut(&[Rat]) -> Result<usize>,
) -> Result<GenericityCertificate> {
    let mut best = GenericityCertificate {
        witness: vec![Rat::default(); len],
        achieved_rank: rank(&vec![Rat::default(); len])?,
        samples_tried: 0,
        seed,
        coefficient_bound: bound,
        saturated: false,
    };
    if best.achieved_rank < upper {
        for v in draws(seed, purpose, samples.max(1), bound, len) {
            best.samples_tried += 1;
            let r = rank(&v)?;
            if r > best.achieved_rank {
                best.achieved_rank = r;
                best.witness = v;
                if r >= upper {
                    break;
                }
            }
        }
    }
    best.saturated = best.achieved_rank >= upper;
    Ok(best)
}

/// `ind g = dim g - max rank B_sigma`.
pub fn index(alg: &LieAlgebra, seed: u64, samples: usize, bound: u64) -> Result<IndexReport> {
    let n = alg.dim();
    // the center lies in every kernel, and the rank of a skew form is even
    let upper = (n - alg.center().dim()) & !1;
    let certificate = maximize(n, upper, seed, "kirillov", samples, bound, |s| Ok(kirillov_form(alg, s)?.rank()))?;
    Ok(IndexReport { algebra_index: n - certificate.achieved_rank, certificate })
}

/// Generic orbit data for the action of `g` on `n*`; witnesses are in the
/// ideal's canonical coordinates.
pub fn rep_orbit_coindex(alg: &LieAlgebra, n: &Ideal, seed: u64, samples: usize, bound: u64) -> Result<RepIndexReport> {
    let g = alg.dim();
    let centralizer = alg.centralizer(n.space())?;
    let upper = n.dim().min(g - centralizer.dim());
    let certificate =
        maximize(n.dim(), upper, seed, "rep-orbit", samples, bound, |nu| Ok(g - rep_isotropy(alg, n, nu)?.dim()))?;
    Ok(RepIndexReport {
        coindex: n.dim() - certificate.achieved_rank,
        stab_dim: g - certificate.achieved_rank,
        certificate,
    })
}

/// `dim g_sigma` equals the index.
pub fn is_regular(alg: &LieAlgebra, sigma: &[Rat], idx: &IndexReport) -> Result<bool> {
    Ok(alg.dim() - kirillov_form(alg, sigma)?.rank() == idx.algebra_index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;
    use crate::linalg::rat::from_ints;

    fn ind(name: &str) -> usize {
        index(&catalog(name).unwrap().algebra, 0, 16, 7).unwrap().algebra_index
    }

    #[test]
    fn index_table() {
        assert_eq!(ind("abelian:4"), 4);
        assert_eq!(ind("heisenberg3"), 1);
        assert_eq!(ind("aff1"), 0);
        assert_eq!(ind("sl2"), 1);
        assert_eq!(ind("gl2"), 2);
        assert_eq!(ind("e2"), 1);
        assert_eq!(ind("se3"), 2);
    }

    #[test]
    fn certificate_replays() {
        let g = catalog("se3").unwrap().algebra;
        let r = index(&g, 3, 16, 7).unwrap();
        assert_eq!(kirillov_form(&g, &r.certificate.witness).unwrap().rank(), r.certificate.achieved_rank);
        assert!(r.certificate.achieved_rank.is_multiple_of(2));
    }

    #[test]
    fn coindex_examples() {
        let cases = [("heisenberg3", "center", 1, 3), ("se3", "translations", 1, 4), ("e2", "translations", 1, 2)];
        for (name, ideal, co, stab) in cases {
            let e = catalog(name).unwrap();
            let r = rep_orbit_coindex(&e.algebra, e.ideal(ideal).unwrap(), 0, 16, 7).unwrap();
            assert_eq!((r.coindex, r.stab_dim), (co, stab), "{name}/{ideal}");
        }
    }

    #[test]
    fn regularity() {
        let h = catalog("heisenberg3").unwrap().algebra;
        let idx = index(&h, 0, 16, 7).unwrap();
        assert!(is_regular(&h, &from_ints(&[0, 0, 1]), &idx).unwrap());
        assert!(!is_regular(&h, &from_ints(&[1, 0, 0]), &idx).unwrap());
        let ab = LieAlgebra::abelian(3);
        let idx = index(&ab, 0, 16, 7).unwrap();
        assert!(is_regular(&ab, &from_ints(&[1, 2, 3]), &idx).unwrap());
    }
}
