//! Command-line front end. Exit codes: 0 every verdict passed, 1 some
//! verification failed, 2 invalid input, 3 no witness found.

mod selftest;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{catalog, catalog_names, semidirect, Ideal, LieAlgebra, Representation};
use crate::coadjoint::{index, kirillov_form};
use crate::error::{Error, Result};
use crate::io::report::{self, ReportEnvelope};
use crate::io::{is_semidirect, AlgebraFile, SemidirectFile};
use crate::linalg::rat::parse_rat;
use crate::linalg::Rat;
use crate::reduction::{
    cocycle_gamma, panasyuk_from, reduced_algebra, split_extension_matches, verify_index_formula, verify_rais,
};
use crate::slice::analyze_slice;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NO_WITNESS: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "lieslice", version, about = "Exact coadjoint-orbit slices and index formulas")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Sampling {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Draws per coefficient bound.
    #[arg(long, default_value_t = 16)]
    samples: usize,
    /// Largest numerator and denominator in sampled coefficients.
    #[arg(long, default_value_t = 7)]
    bound: u64,
    /// Emit the JSON report envelope instead of text.
    #[arg(long)]
    json: bool,
}

impl Sampling {
    fn parameters(&self) -> Value {
        json!({ "samples": self.samples, "bound": self.bound })
    }
}

#[derive(Args, Debug, Clone)]
struct Target {
    /// Algebra file (JSON), semidirect file, or catalog name.
    input: String,
    /// Named catalog ideal; defaults to the designated one.
    #[arg(long)]
    ideal: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate an algebra file.
    Check { input: String },
    /// Index of the algebra with a genericity certificate.
    Index {
        input: String,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Isotropy algebras and slice identities at a covector.
    Analyze {
        #[command(flatten)]
        target: Target,
        /// Covector as comma-separated rationals, e.g. `0,0,1/2`.
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<String>,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Reduced algebra and cocycle, at `--sigma` or at a certified witness.
    Reduce {
        #[command(flatten)]
        target: Target,
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<String>,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Check index formulas.
    Verify {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Formula::All)]
        formula: Formula,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// List catalog names, or print one entry as an algebra file.
    Catalog {
        name: Option<String>,
        /// Print the `k` and representation blocks instead.
        #[arg(long)]
        semidirect: bool,
    },
    /// Invariant sweep over the catalog and generated algebras.
    Selftest {
        #[command(flatten)]
        sampling: Sampling,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Formula {
    Theorem13,
    Panasyuk,
    Rais,
    All,
}

/// A resolved input: file contents or a catalog entry.
struct Input {
    bytes: Vec<u8>,
    name: String,
    algebra: LieAlgebra,
    /// The first ideal is the default.
    ideals: Vec<(String, Ideal)>,
    sigma: Option<Vec<Rat>>,
    semidirect: Option<(LieAlgebra, Representation)>,
}

impl Input {
    fn resolve(arg: &str) -> Result<Self> {
        if Path::new(arg).is_file() {
            let text = std::fs::read_to_string(arg).map_err(|e| Error::Invalid(format!("{arg}: {e}")))?;
            return Self::from_text(&text);
        }
        let entry = catalog(arg).map_err(|_| Error::Invalid(format!("{arg:?} is neither a file nor a catalog name")))?;
        Ok(Input {
            bytes: AlgebraFile::from_catalog(&entry).to_json().into_bytes(),
            name: entry.name,
            algebra: entry.algebra,
            ideals: entry.ideals,
            sigma: entry.sigma,
            semidirect: entry.semidirect,
        })
    }

    fn from_text(text: &str) -> Result<Self> {
        let bytes = text.as_bytes().to_vec();
        if is_semidirect(text) {
            let file = SemidirectFile::from_json(text)?;
            let (k, rep) = file.load()?;
            let (algebra, v) = semidirect(&k, &rep)?;
            return Ok(Input {
                bytes,
                name: file.k.name.clone(),
                algebra,
                ideals: vec![("v".into(), v)],
                sigma: None,
                semidirect: Some((k, rep)),
            });
        }
        let loaded = AlgebraFile::from_json(text)?.load()?;
        Ok(Input {
            bytes,
            name: loaded.name,
            algebra: loaded.algebra,
            ideals: loaded.ideal.map(|i| vec![("ideal".into(), i)]).unwrap_or_default(),
            sigma: loaded.sigma,
            semidirect: None,
        })
    }

    fn ideal(&self, name: Option<&str>) -> Result<(&str, &Ideal)> {
        let found = match name {
            Some(n) => self.ideals.iter().find(|(m, _)| m == n),
            None => self.ideals.first(),
        };
        found.map(|(n, i)| (n.as_str(), i)).ok_or_else(|| match name {
            Some(n) => Error::Invalid(format!("{} has no ideal named {n:?}", self.name)),
            None => Error::Invalid(format!("{} has no ideal; add an \"ideal\" block", self.name)),
        })
    }

    fn sigma(&self, flag: Option<&str>) -> Result<Vec<Rat>> {
        let sigma = match flag {
            Some(s) => parse_covector(s)?,
            None => self.sigma.clone().ok_or_else(|| Error::Invalid("no covector; pass --sigma".into()))?,
        };
        if sigma.len() != self.algebra.dim() {
            return Err(Error::Invalid(format!("sigma has {} entries, algebra has dimension {}", sigma.len(), self.algebra.dim())));
        }
        Ok(sigma)
    }
}

fn parse_covector(s: &str) -> Result<Vec<Rat>> {
    s.split(',').map(|p| parse_rat(p.trim())).collect()
}

/// Process exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::WitnessNotFound { .. } => EXIT_NO_WITNESS,
        Error::AssertionFailed(_)
        | Error::GenericityDisagreement { .. }
        | Error::IdealityViolation
        | Error::FactorizationFailure
        | Error::HypothesisNotMet(_) => EXIT_FAILED,
        _ => EXIT_INVALID,
    }
}

/// What a command produced: text lines, the JSON envelope, and the verdicts.
struct Outcome {
    text: Vec<String>,
    envelope: ReportEnvelope,
}

impl Outcome {
    fn code(&self) -> i32 {
        if self.envelope.all_pass() {
            EXIT_OK
        } else {
            EXIT_FAILED
        }
    }
}

fn verdict_line(name: &str, ok: bool, detail: String) -> String {
    format!("{name} {}: {detail}", if ok { "holds" } else { "FAILS" })
}

fn fmt_rats(v: &[Rat]) -> String {
    v.iter().map(crate::linalg::rat::format_rat).collect::<Vec<_>>().join(",")
}

/// Runs the tool on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let json = match &cli.command {
        Command::Index { sampling, .. }
        | Command::Analyze { sampling, .. }
        | Command::Reduce { sampling, .. }
        | Command::Verify { sampling, .. }
        | Command::Selftest { sampling } => sampling.json,
        _ => false,
    };
    let result = match cli.command {
        Command::Check { input } => return cmd_check(&input, out, err),
        Command::Catalog { name, semidirect } => return cmd_catalog(name.as_deref(), semidirect, out, err),
        Command::Index { input, sampling } => cmd_index(&input, &sampling),
        Command::Analyze { target, sigma, sampling } => cmd_analyze(&target, sigma.as_deref(), &sampling),
        Command::Reduce { target, sigma, sampling } => cmd_reduce(&target, sigma.as_deref(), &sampling),
        Command::Verify { target, formula, sampling } => cmd_verify(&target, formula, &sampling),
        Command::Selftest { sampling } => selftest::run(&sampling),
    };
    match result {
        Ok(outcome) => {
            if json {
                let _ = writeln!(out, "{}", outcome.envelope.to_json());
            } else {
                for line in &outcome.text {
                    let _ = writeln!(out, "{line}");
                }
            }
            outcome.code()
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn cmd_check(input: &str, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match Input::resolve(input) {
        Ok(i) => {
            let brackets = i.algebra.nonzero_brackets().count();
            let _ = writeln!(out, "valid: {} (dim {}, {} nonzero brackets)", i.name, i.algebra.dim(), brackets);
            for (name, ideal) in &i.ideals {
                let _ = writeln!(out, "ideal {name}: dim {}", ideal.dim());
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "invalid: {e}");
            exit_code(&e)
        }
    }
}

fn cmd_catalog(name: Option<&str>, semidirect: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let Some(name) = name else {
        for n in catalog_names() {
            let _ = writeln!(out, "{n}");
        }
        return EXIT_OK;
    };
    let entry = match catalog(name) {
        Ok(e) => e,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INVALID;
        }
    };
    let text = if semidirect {
        match &entry.semidirect {
            Some((k, rep)) => SemidirectFile::from_parts(&format!("{name}:k"), k, rep).to_json(),
            None => {
                let _ = writeln!(err, "error: {name} is not stored as a semidirect product");
                return EXIT_INVALID;
            }
        }
    } else {
        AlgebraFile::from_catalog(&entry).to_json()
    };
    let _ = writeln!(out, "{text}");
    EXIT_OK
}

fn cmd_index(input: &str, s: &Sampling) -> Result<Outcome> {
    let input = Input::resolve(input)?;
    let r = index(&input.algebra, s.seed, s.samples, s.bound)?;
    let replays = kirillov_form(&input.algebra, &r.certificate.witness)?.rank() == r.certificate.achieved_rank;
    let c = &r.certificate;
    let text = vec![
        format!("ind {} = {}", input.name, r.algebra_index),
        format!(
            "witness [{}], orbit rank {}, {} draws, {}",
            fmt_rats(&c.witness),
            c.achieved_rank,
            c.samples_tried,
            if c.saturated { "saturated (exact)" } else { "sampled lower bound on rank" }
        ),
    ];
    let verdicts = BTreeMap::from([("witness_replays".to_string(), replays)]);
    let envelope = ReportEnvelope::new(&input.bytes, s.seed, s.parameters(), report::index_report(&r), verdicts);
    Ok(Outcome { text, envelope })
}

fn cmd_analyze(t: &Target, sigma: Option<&str>, s: &Sampling) -> Result<Outcome> {
    let input = Input::resolve(&t.input)?;
    let (ideal_name, n) = input.ideal(t.ideal.as_deref())?;
    let sigma = input.sigma(sigma)?;
    let r = analyze_slice(&input.algebra, n, &sigma)?;
    let mut text = vec![format!("{} / {ideal_name} at sigma = [{}]", input.name, fmt_rats(&sigma))];
    text.push(format!("slice dim = {}", r.direction.dim()));
    for (k, v) in &r.dims {
        text.push(format!("dim {k} = {v}"));
    }
    for (k, v) in &r.verdicts {
        text.push(format!("{k}: {}", if *v { "pass" } else { "FAIL" }));
    }
    let flags = r.point_conditions.flags();
    text.push(format!(
        "point conditions: {}",
        match (r.point_conditions.agree(), flags[0]) {
            (true, true) => "all-equivalent-true",
            (true, false) => "all-equivalent-false",
            (false, _) => "DISAGREE",
        }
    ));
    let mut verdicts: BTreeMap<String, bool> = r.verdicts.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    verdicts.insert("point_conditions_agree".into(), r.point_conditions.agree());
    let params = json!({ "ideal": ideal_name, "sigma": report::rats(&sigma) });
    let envelope = ReportEnvelope::new(&input.bytes, s.seed, params, report::slice_report(&r), verdicts);
    Ok(Outcome { text, envelope })
}

fn cmd_reduce(t: &Target, sigma: Option<&str>, s: &Sampling) -> Result<Outcome> {
    let input = Input::resolve(&t.input)?;
    let (ideal_name, n) = input.ideal(t.ideal.as_deref())?;
    let alg = &input.algebra;
    let (sigma, from_witness) = match sigma {
        Some(_) => (input.sigma(sigma)?, false),
        None => (verify_index_formula(alg, n, s.seed, s.samples, s.bound)?.witness.sigma, true),
    };
    let nu = n.space().restrict_functional(&sigma)?;
    let red = reduced_algebra(alg, n, &nu)?;
    let tau = red.tau_of(&sigma)?;
    let cocycle = cocycle_gamma(&red, n, &tau)?;
    let b = red.b_nu();
    let mut text = vec![
        format!(
            "{} / {ideal_name} at sigma = [{}]{}",
            input.name,
            fmt_rats(&sigma),
            if from_witness { " (certified witness)" } else { "" }
        ),
        format!("dim g_nu = {}, dim n_nu = {}, dim n_nu^nat = {}", red.g_nu.dim(), red.n_nu.dim(), red.n_natural.dim()),
        format!("b_nu: dim {}", b.dim()),
    ];
    for (i, j, v) in b.nonzero_brackets() {
        text.push(format!("  [b{i}, b{j}] = [{}]", fmt_rats(v)));
    }
    let q = cocycle.quotient.quotient().dim();
    text.push(format!("gamma_tau on g_nu/n_nu (dim {q}):"));
    for row in cocycle.gamma.form().row_vecs() {
        text.push(format!("  [{}]", fmt_rats(&row)));
    }
    let mut verdicts = BTreeMap::new();
    if red.nu_nonzero() {
        let ok = split_extension_matches(&red, n, &tau)?;
        text.push(format!("central extension by gamma_tau rebuilds b_nu: {}", if ok { "pass" } else { "FAIL" }));
        verdicts.insert("cocycle_round_trip".to_string(), ok);
    }
    let payload = json!({
        "sigma": report::rats(&sigma),
        "g_nu": report::subspace(&red.g_nu),
        "n_nu": report::subspace(&red.n_nu),
        "n_natural": report::subspace(&red.n_natural),
        "b_nu": report::algebra("b_nu", b),
        "cocycle": report::matrix(cocycle.gamma.form()),
        "nu_nonzero_on_n_nu": red.nu_nonzero(),
    });
    let mut params = s.parameters();
    params["ideal"] = json!(ideal_name);
    let envelope = ReportEnvelope::new(&input.bytes, s.seed, params, payload, verdicts);
    Ok(Outcome { text, envelope })
}

fn cmd_verify(t: &Target, formula: Formula, s: &Sampling) -> Result<Outcome> {
    let input = Input::resolve(&t.input)?;
    let mut text = Vec::new();
    let mut verdicts = BTreeMap::new();
    let mut payload = serde_json::Map::new();
    if formula != Formula::Rais {
        let (_, n) = input.ideal(t.ideal.as_deref())?;
        let r = verify_index_formula(&input.algebra, n, s.seed, s.samples, s.bound)?;
        let f = r.formula;
        if matches!(formula, Formula::Theorem13 | Formula::All) {
            text.push(verdict_line(
                "theorem13",
                f.holds,
                format!("ind g = {}, ind(g,n) = {}, ind b_nu = {}, delta = {}", f.ind_g, f.ind_g_n, f.ind_b_nu, f.delta),
            ));
            verdicts.insert("theorem13".to_string(), f.holds);
        }
        if matches!(formula, Formula::Panasyuk | Formula::All) {
            let p = panasyuk_from(&r);
            text.push(verdict_line(
                "panasyuk",
                p.holds,
                format!("ind g = {}, ind(g,n) = {}, ind eta_tau = {}", p.ind_g, p.ind_g_n, p.ind_eta),
            ));
            verdicts.insert("panasyuk".to_string(), p.holds);
            payload.insert("panasyuk".into(), report::panasyuk_report(&p));
        }
        if formula == Formula::All {
            text.push(verdict_line(
                "regular-correspondence",
                r.regular_correspondence,
                format!("at sigma = [{}]", fmt_rats(&r.witness.sigma)),
            ));
            verdicts.insert("regular_correspondence".to_string(), r.regular_correspondence);
        }
        payload.insert("reduction".into(), report::reduction_report(&r));
    }
    let rais_input = match (&input.semidirect, formula) {
        (Some(sd), Formula::Rais | Formula::All) => Some(sd),
        (None, Formula::Rais) => {
            return Err(Error::Invalid("rais needs a semidirect input ({\"k\": ..., \"rep\": ...})".into()))
        }
        _ => None,
    };
    if let Some((k, rep)) = rais_input {
        let r = verify_rais(k, rep, s.seed, s.samples, s.bound)?;
        text.push(verdict_line(
            "rais",
            r.holds,
            format!("ind g = {}, ind(k,V) = {}, ind k_nu = {}", r.ind_g, r.ind_k_v, r.ind_k_nu),
        ));
        verdicts.insert("rais".to_string(), r.holds);
        payload.insert("rais".into(), report::rais_report(&r));
    }
    let mut params = s.parameters();
    params["formula"] = json!(format!("{formula:?}").to_lowercase());
    if let Some(i) = &t.ideal {
        params["ideal"] = json!(i);
    }
    let envelope = ReportEnvelope::new(&input.bytes, s.seed, params, Value::Object(payload), verdicts);
    Ok(Outcome { text, envelope })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["lieslice"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn verify_all_on_heisenberg() {
        let (code, out, _) = call(&["verify", "heisenberg3", "--formula", "all"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().filter(|l| l.contains(" holds:")).count(), 3, "{out}");
    }

    #[test]
    fn index_and_analyze() {
        let (code, out, _) = call(&["index", "se3"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("ind se3 = 2"));
        let (code, out, _) = call(&["analyze", "heisenberg3", "--sigma", "0,0,1"]);
        assert_eq!(code, 0);
        assert!(out.contains("slice dim = 0") && out.contains("all-equivalent-true"), "{out}");
    }

    #[test]
    fn bad_inputs_exit_2() {
        assert_eq!(call(&["index", "no-such-thing"]).0, EXIT_INVALID);
        assert_eq!(call(&["analyze", "heisenberg3", "--sigma", "1,2"]).0, EXIT_INVALID);
        assert_eq!(call(&["verify", "heisenberg3", "--formula", "rais"]).0, EXIT_INVALID);
        assert_eq!(call(&["frobnicate"]).0, EXIT_INVALID);
    }

    #[test]
    fn rais_from_catalog() {
        let (code, out, _) = call(&["verify", "se3", "--formula", "rais"]);
        assert_eq!(code, 0);
        assert!(out.contains("rais holds: ind g = 2, ind(k,V) = 1, ind k_nu = 1"), "{out}");
    }
}
