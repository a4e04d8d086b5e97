//! Deterministic JSON report envelopes.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::format::AlgebraFile;
use crate::algebra::LieAlgebra;
use crate::coadjoint::{GenericityCertificate, IndexReport, RepIndexReport};
use crate::linalg::rat::format_rat;
use crate::linalg::{Matrix, Rat, Subspace};
use crate::reduction::{DeltaReport, PanasyukReport, RaisReport, ReductionReport};
use crate::slice::OrbitSliceReport;

pub const TOOL_VERSION: &str = concat!("lieslice ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportEnvelope {
    pub tool_version: String,
    pub input_digest: String,
    pub seed: u64,
    pub parameters: Value,
    pub payload: Value,
    pub verdicts: BTreeMap<String, bool>,
}

impl ReportEnvelope {
    pub fn new(input: &[u8], seed: u64, parameters: Value, payload: Value, verdicts: BTreeMap<String, bool>) -> Self {
        ReportEnvelope {
            tool_version: TOOL_VERSION.to_string(),
            input_digest: digest(input),
            seed,
            parameters,
            payload,
            verdicts,
        }
    }

    /// Object keys are sorted, so equal envelopes print identically.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelopes serialize")
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.values().all(|&v| v)
    }
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

pub fn rats(v: &[Rat]) -> Value {
    Value::from(v.iter().map(format_rat).collect::<Vec<_>>())
}

pub fn subspace(s: &Subspace) -> Value {
    Value::from(s.basis_vectors().map(rats).collect::<Vec<_>>())
}

pub fn matrix(m: &Matrix) -> Value {
    Value::from(m.row_vecs().iter().map(|r| rats(r)).collect::<Vec<_>>())
}

pub fn algebra(name: &str, alg: &LieAlgebra) -> Value {
    serde_json::to_value(AlgebraFile::from_algebra(name, alg, None, None)).expect("algebra files serialize")
}

pub fn certificate(c: &GenericityCertificate) -> Value {
    json!({
        "witness": rats(&c.witness),
        "achieved_rank": c.achieved_rank,
        "samples_tried": c.samples_tried,
        "seed": c.seed,
        "coefficient_bound": c.coefficient_bound,
        "saturated": c.saturated,
    })
}

pub fn index_report(r: &IndexReport) -> Value {
    json!({ "index": r.algebra_index, "certificate": certificate(&r.certificate) })
}

pub fn rep_index_report(r: &RepIndexReport) -> Value {
    json!({ "coindex": r.coindex, "stab_dim": r.stab_dim, "certificate": certificate(&r.certificate) })
}

pub fn delta_report(r: &DeltaReport) -> Value {
    json!({ "delta": r.delta, "certificate": certificate(&r.certificate) })
}

pub fn slice_report(r: &OrbitSliceReport) -> Value {
    let p = &r.point_conditions;
    json!({
        "sigma": rats(&r.sigma),
        "nu": rats(&r.nu),
        "tau": rats(&r.tau),
        "g_sigma": subspace(&r.g_sigma),
        "g_nu": subspace(&r.g_nu),
        "n_nu": subspace(&r.n_nu),
        "n_sigma": subspace(&r.n_sigma),
        "n_natural": subspace(&r.n_natural),
        "g_nu_tau": subspace(&r.g_nu_tau),
        "slice_direction": subspace(&r.direction),
        "dims": r.dims,
        "verdicts": r.verdicts,
        "point_conditions": {
            "direction_zero": p.direction_zero,
            "dimension_zero": p.dimension_zero,
            "g_nu_plus_n_full": p.g_nu_plus_n_full,
            "g_sigma_eq_g_nu_tau": p.g_sigma_eq_g_nu_tau,
            "n_nu_in_g_sigma": p.n_nu_in_g_sigma,
            "agree": p.agree(),
        },
    })
}

pub fn reduction_report(r: &ReductionReport) -> Value {
    let red = &r.reduced;
    json!({
        "witness": {
            "nu": rats(&r.witness.nu),
            "sigma": rats(&r.witness.sigma),
            "attempts": r.witness.attempts,
        },
        "g_nu": subspace(&red.g_nu),
        "n_nu": subspace(&red.n_nu),
        "n_natural": subspace(&red.n_natural),
        "nu_nonzero_on_n_nu": red.nu_nonzero(),
        "b_nu": algebra("b_nu", red.b_nu()),
        "b_nu_section": matrix(red.quotient.section()),
        "cocycle": {
            "quotient": algebra("g_nu/n_nu", r.cocycle.quotient.quotient()),
            "form": matrix(r.cocycle.gamma.form()),
        },
        "ind_g": index_report(&r.ind_g),
        "ind_g_n": rep_index_report(&r.coindex),
        "ind_n": index_report(&r.ind_n),
        "ind_b_nu": index_report(&r.ind_b),
        "delta_natural": delta_report(&r.delta),
        "formula": {
            "ind_g": r.formula.ind_g,
            "ind_g_n": r.formula.ind_g_n,
            "ind_b_nu": r.formula.ind_b_nu,
            "delta": r.formula.delta,
            "holds": r.formula.holds,
        },
        "regular_correspondence": r.regular_correspondence,
    })
}

pub fn panasyuk_report(p: &PanasyukReport) -> Value {
    json!({
        "ind_g": p.ind_g,
        "ind_g_n": p.ind_g_n,
        "ind_eta": p.ind_eta,
        "nu_nonzero_on_n_nu": p.nu_nonzero,
        "holds": p.holds,
    })
}

pub fn rais_report(r: &RaisReport) -> Value {
    json!({
        "ind_g": r.ind_g,
        "ind_k_v": r.ind_k_v,
        "ind_k_nu": r.ind_k_nu,
        "k_nu": subspace(&r.k_nu),
        "nu": rats(&r.nu),
        "sigma": rats(&r.sigma),
        "orbit": certificate(&r.orbit),
        "holds": r.holds,
    })
}
