//! `selftest`: invariant sweep over the catalog and generated algebras.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::{Outcome, Sampling};
use crate::algebra::random::{random_pair, random_semidirect};
use crate::algebra::{catalog, catalog_names, Ideal, LieAlgebra, QuotientMap};
use crate::coadjoint::{index, kirillov_form};
use crate::error::{Error, Result};
use crate::io::report::ReportEnvelope;
use crate::linalg::rat::zeros;
use crate::reduction::{
    mu_self_membership, panasyuk_from, verify_index_formula, verify_rais, ReductionReport,
};
use crate::sampling::draws;
use crate::slice::analyze_slice;

const RANDOM_PAIRS: u64 = 12;
const RANDOM_SEMIDIRECT: u64 = 6;
const COVECTORS: usize = 4;
/// Bound used for a second attempt after a failed witness search.
pub const RETRY_BOUND: u64 = 13;

struct Sweep {
    verdicts: BTreeMap<String, bool>,
    errors: BTreeMap<String, String>,
    s: Sampling,
}

impl Sweep {
    fn record(&mut self, key: String, r: Result<bool>) {
        match r {
            Ok(ok) => {
                self.verdicts.insert(key, ok);
            }
            Err(e) => {
                self.errors.insert(key.clone(), e.to_string());
                self.verdicts.insert(key, false);
            }
        }
    }

    fn formula(&self, alg: &LieAlgebra, n: &Ideal) -> Result<ReductionReport> {
        let s = &self.s;
        match verify_index_formula(alg, n, s.seed, s.samples, s.bound) {
            Err(Error::WitnessNotFound { .. }) => verify_index_formula(alg, n, s.seed, s.samples, RETRY_BOUND),
            r => r,
        }
    }

    fn pair(&mut self, tag: &str, alg: &LieAlgebra, n: &Ideal) {
        match self.formula(alg, n) {
            Ok(r) => {
                self.verdicts.insert(format!("index-formula:{tag}"), r.formula.holds);
                self.verdicts.insert(format!("panasyuk-agrees:{tag}"), panasyuk_from(&r).holds == r.formula.holds);
                self.verdicts.insert(format!("regular-correspondence:{tag}"), r.regular_correspondence);
            }
            Err(e) => self.record(format!("index-formula:{tag}"), Err(e)),
        }
        let s = self.s.clone();
        let slices = (|| {
            let mut ok = analyze_slice(alg, n, &zeros(alg.dim()))?.all_pass();
            for sigma in draws(s.seed, "selftest-slice", COVECTORS, 2, alg.dim()) {
                ok &= analyze_slice(alg, n, &sigma)?.all_pass();
            }
            Ok(ok)
        })();
        self.record(format!("slice:{tag}"), slices);
        let pullback = (|| {
            let q = QuotientMap::new(alg, n)?;
            let mut ok = true;
            for beta in draws(s.seed, "selftest-pullback", COVECTORS, 2, q.quotient().dim()) {
                ok &= q.pullback_identity_holds(&beta)?;
            }
            Ok(ok)
        })();
        self.record(format!("pullback:{tag}"), pullback);
    }

    fn algebra(&mut self, tag: &str, alg: &LieAlgebra) {
        let s = self.s.clone();
        let idx = (|| {
            let r = index(alg, s.seed, s.samples, s.bound)?;
            Ok(kirillov_form(alg, &r.certificate.witness)?.rank() == r.certificate.achieved_rank)
        })();
        self.record(format!("index-witness:{tag}"), idx);
        let mu = (|| {
            let mut ok = true;
            for m in std::iter::once(zeros(alg.dim())).chain(draws(s.seed, "selftest-mu", COVECTORS, 2, alg.dim())) {
                let (lhs, rhs) = mu_self_membership(alg, &m)?;
                ok &= lhs == rhs;
            }
            Ok(ok)
        })();
        self.record(format!("mu-membership:{tag}"), mu);
    }

    fn rais(&mut self, tag: &str, k: &LieAlgebra, rep: &crate::algebra::Representation) {
        let s = &self.s;
        let r = match verify_rais(k, rep, s.seed, s.samples, s.bound) {
            Err(Error::WitnessNotFound { .. }) => verify_rais(k, rep, s.seed, s.samples, RETRY_BOUND),
            r => r,
        };
        self.record(format!("rais:{tag}"), r.map(|r| r.holds));
    }
}

pub(super) fn run(s: &Sampling) -> Result<Outcome> {
    let mut sweep = Sweep { verdicts: BTreeMap::new(), errors: BTreeMap::new(), s: s.clone() };
    for name in catalog_names() {
        let e = catalog(name)?;
        sweep.algebra(name, &e.algebra);
        for (ideal, n) in &e.ideals {
            sweep.pair(&format!("{name}/{ideal}"), &e.algebra, n);
        }
        if let Some((k, rep)) = &e.semidirect {
            sweep.rais(name, k, rep);
        }
    }
    let mut recipes = Vec::new();
    for k in 0..RANDOM_PAIRS {
        let p = random_pair(s.seed, k)?;
        let tag = format!("random-{k}");
        sweep.pair(&tag, &p.algebra, &p.ideal);
        recipes.push(json!({ "tag": tag, "recipe": p.recipe, "dim": p.algebra.dim(), "ideal_dim": p.ideal.dim() }));
    }
    for k in 0..RANDOM_SEMIDIRECT {
        let (kk, rep) = random_semidirect(s.seed, k)?;
        sweep.rais(&format!("random-semidirect-{k}"), &kk, &rep);
    }

    let failed: Vec<&String> = sweep.verdicts.iter().filter(|(_, v)| !**v).map(|(k, _)| k).collect();
    let mut text = vec![format!("selftest seed {}: {} checks, {} failed", s.seed, sweep.verdicts.len(), failed.len())];
    for k in &failed {
        match sweep.errors.get(*k) {
            Some(e) => text.push(format!("FAIL {k}: {e}")),
            None => text.push(format!("FAIL {k}")),
        }
    }
    let payload = json!({
        "checks": sweep.verdicts.len(),
        "failed": failed,
        "errors": sweep.errors,
        "random_pairs": Value::from(recipes),
    });
    let mut params = s.parameters();
    params["random_pairs"] = json!(RANDOM_PAIRS);
    params["random_semidirect"] = json!(RANDOM_SEMIDIRECT);
    params["retry_bound"] = json!(RETRY_BOUND);
    let envelope = ReportEnvelope::new(b"selftest", s.seed, params, payload, sweep.verdicts);
    Ok(Outcome { text, envelope })
}
