//! Parameter sweeps over the identity checkers.
//!
//! A sweep takes one value set per parameter, forms the product in the
//! identity's parameter order (first parameter slowest), estimates the
//! total work up front, and evaluates every tuple. Reports come back in
//! tuple order even though evaluation runs in parallel.

use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::identity;
use crate::qengine;
use crate::rational::{int, parse_rational, Rational};
use crate::report::{IdentityId, VerificationReport};
use crate::word::{binomial_count, EnumerationCap};

/// Default bound on estimated elementary evaluations per sweep.
pub const DEFAULT_WORK_CAP: u128 = 10_000_000;

/// Environment variable overriding [`DEFAULT_WORK_CAP`].
pub const CAP_ENV_VAR: &str = "ROTHE_LAB_CAP";

/// Values of one sweep parameter: an inclusive integer range (`2..5`, or a
/// single integer) or a single rational (`1/2`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamSpec {
    Range(i64, i64),
    Value(Rational),
}

impl ParamSpec {
    pub fn single(v: i64) -> Self {
        ParamSpec::Range(v, v)
    }

    fn values(&self) -> Vec<Rational> {
        match self {
            ParamSpec::Range(lo, hi) => (*lo..=*hi).map(int).collect(),
            ParamSpec::Value(r) => vec![r.clone()],
        }
    }
}

impl FromStr for ParamSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((lo, hi)) = s.split_once("..") {
            let parse = |t: &str| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad range bound {t:?} in {s:?}")))
            };
            let (lo, hi) = (parse(lo)?, parse(hi)?);
            if lo > hi {
                return Err(Error::Parse(format!("empty range {s:?}")));
            }
            return Ok(ParamSpec::Range(lo, hi));
        }
        if let Ok(v) = s.parse::<i64>() {
            return Ok(ParamSpec::single(v));
        }
        parse_rational(s).map(ParamSpec::Value)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Rational,
    Natural,
}

struct ParamDef {
    name: &'static str,
    kind: Kind,
    required: bool,
}

const fn req(name: &'static str, kind: Kind) -> ParamDef {
    ParamDef {
        name,
        kind,
        required: true,
    }
}

const fn opt(name: &'static str, kind: Kind) -> ParamDef {
    ParamDef {
        name,
        kind,
        required: false,
    }
}

use Kind::{Natural as N, Rational as R};

/// Parameters of each identity, in sweep order. Optional parameters default
/// per tuple: `eps` to `0..=n`, `j` to `1..=m`.
fn param_defs(id: IdentityId) -> &'static [ParamDef] {
    const ROTHE: &[ParamDef] = &[req("x", R), req("y", R), req("z", R), req("n", N)];
    const GOULD: &[ParamDef] = &[
        req("x", R),
        req("y", R),
        req("z", R),
        req("n", N),
        opt("eps", R),
    ];
    const PQMN: &[ParamDef] = &[req("p", N), req("q", N), req("m", N), req("n", N)];
    const KMPINK: &[ParamDef] = &[
        req("p", N),
        req("q", N),
        req("m", N),
        req("n", N),
        opt("j", N),
    ];
    const PKM: &[ParamDef] = &[req("p", N), req("k", N), req("m", N)];
    const QCHU: &[ParamDef] = &[req("x", N), req("y", N), req("m", N), req("n", N)];
    const QCHU_M1: &[ParamDef] = &[req("x", N), req("y", N), req("n", N)];
    match id {
        IdentityId::Rothe1 | IdentityId::Rothe2 => ROTHE,
        IdentityId::Gould => GOULD,
        IdentityId::Pqkm | IdentityId::Kmx | IdentityId::Qword => PQMN,
        IdentityId::Kmpink => KMPINK,
        IdentityId::Cardinality | IdentityId::Invw => PKM,
        IdentityId::Qchu => QCHU,
        IdentityId::QchuM1 => QCHU_M1,
    }
}

/// Names accepted by [`SweepConfig`] for an identity.
pub fn parameter_names(id: IdentityId) -> Vec<&'static str> {
    param_defs(id).iter().map(|d| d.name).collect()
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub identity: IdentityId,
    pub params: Vec<(String, ParamSpec)>,
    pub fail_fast: bool,
    pub work_cap: u128,
    pub enumeration_cap: EnumerationCap,
}

impl SweepConfig {
    pub fn new(identity: IdentityId) -> Self {
        SweepConfig {
            identity,
            params: Vec::new(),
            fail_fast: false,
            work_cap: DEFAULT_WORK_CAP,
            enumeration_cap: EnumerationCap::default(),
        }
    }

    pub fn param(mut self, name: &str, spec: ParamSpec) -> Self {
        self.params.retain(|(n, _)| n != name);
        self.params.push((name.to_string(), spec));
        self
    }

    pub fn range(self, name: &str, lo: i64, hi: i64) -> Self {
        self.param(name, ParamSpec::Range(lo, hi))
    }

    fn spec(&self, name: &str) -> Option<&ParamSpec> {
        self.params.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }
}

/// The cap from [`CAP_ENV_VAR`] if set, else [`DEFAULT_WORK_CAP`].
pub fn work_cap_from_env() -> Result<u128> {
    match std::env::var(CAP_ENV_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{CAP_ENV_VAR}={v:?} is not an integer"))),
        Err(_) => Ok(DEFAULT_WORK_CAP),
    }
}

/// One point of a sweep: parameter name → value, in definition order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tuple(Vec<(&'static str, Rational)>);

impl Tuple {
    fn get(&self, name: &str) -> &Rational {
        &self
            .0
            .iter()
            .find(|(n, _)| *n == name)
            .unwrap_or_else(|| panic!("parameter {name} missing from tuple"))
            .1
    }

    fn nat(&self, name: &str) -> u64 {
        self.get(name)
            .to_integer()
            .to_u64()
            .expect("natural parameters are validated before evaluation")
    }

    fn int(&self, name: &str) -> i64 {
        self.get(name).to_integer().to_i64().expect("validated")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOutcome {
    pub reports: Vec<VerificationReport>,
    /// Tuples outside the identity's domain (for example `p < mn` for kmx).
    pub skipped: usize,
}

impl SweepOutcome {
    pub fn checked(&self) -> usize {
        self.reports.len()
    }

    pub fn failed(&self) -> usize {
        self.reports.iter().filter(|r| !r.passed()).count()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn summary(&self) -> String {
        let mut s = format!("{} checked, {} failed", self.checked(), self.failed());
        if self.skipped > 0 {
            s.push_str(&format!(", {} skipped", self.skipped));
        }
        s
    }
}

/// Expands the configuration into tuples, validating names and kinds.
pub fn expand(config: &SweepConfig) -> Result<Vec<Tuple>> {
    let defs = param_defs(config.identity);
    for (name, _) in &config.params {
        if !defs.iter().any(|d| d.name == name) {
            return Err(Error::ParameterError(format!(
                "{} takes parameters {:?}, not {name:?}",
                config.identity,
                parameter_names(config.identity)
            )));
        }
    }

    let mut tuples: Vec<Vec<(&'static str, Rational)>> = vec![Vec::new()];
    for def in defs {
        let explicit = config.spec(def.name);
        if explicit.is_none() && def.required {
            return Err(Error::ParameterError(format!(
                "{} requires parameter {:?}",
                config.identity, def.name
            )));
        }
        let mut next = Vec::new();
        for t in tuples {
            let values = match explicit {
                Some(spec) => spec.values(),
                None => default_values(def.name, &Tuple(t.clone())),
            };
            for v in values {
                validate(def, &v)?;
                let mut t2 = t.clone();
                t2.push((def.name, v));
                next.push(t2);
            }
        }
        tuples = next;
    }
    Ok(tuples.into_iter().map(Tuple).collect())
}

fn default_values(name: &str, partial: &Tuple) -> Vec<Rational> {
    match name {
        "eps" => (0..=partial.int("n")).map(int).collect(),
        "j" => (1..=partial.int("m")).map(int).collect(),
        _ => Vec::new(),
    }
}

fn validate(def: &ParamDef, v: &Rational) -> Result<()> {
    if def.kind == Kind::Natural && (!v.is_integer() || *v < Rational::zero()) {
        return Err(Error::ParameterError(format!(
            "{} must be a nonnegative integer, got {v}",
            def.name
        )));
    }
    if def.name == "n" && *v < Rational::zero() {
        return Err(Error::ParameterError(format!(
            "n must be nonnegative, got {v}"
        )));
    }
    Ok(())
}

fn in_domain(id: IdentityId, t: &Tuple) -> bool {
    match id {
        IdentityId::Kmx | IdentityId::Qword => {
            t.nat("p") >= t.nat("m") * t.nat("n") && t.nat("q") >= 1
        }
        IdentityId::Kmpink => (1..=t.nat("m")).contains(&t.nat("j")),
        IdentityId::Invw => t.nat("p") >= t.nat("k") * t.nat("m"),
        IdentityId::Qchu => t.nat("x") >= t.nat("m") * t.nat("n") && t.nat("y") >= 1,
        IdentityId::QchuM1 => t.nat("x") >= t.nat("n") && t.nat("y") >= 1,
        _ => true,
    }
}

fn word_length(weight: u64, b_count: u64, m: u64) -> Option<u64> {
    weight.checked_sub((m + 1) * b_count).map(|a| a + b_count)
}

fn enumeration_cost(weight: u64, b_count: u64, m: u64, cap: EnumerationCap) -> Result<u128> {
    match word_length(weight, b_count, m) {
        None => Ok(1),
        Some(len) => {
            cap.check(len)?;
            Ok(binomial_count(len as i64, b_count as i64) * (len as u128 + 1))
        }
    }
}

/// Rough count of elementary operations for one tuple. Also enforces the
/// enumeration length cap so that a breach is reported before any work.
fn tuple_cost(id: IdentityId, t: &Tuple, cap: EnumerationCap) -> Result<u128> {
    let sq = |n: u64| (n as u128 + 1) * (n as u128 + 1);
    Ok(match id {
        IdentityId::Rothe1 | IdentityId::Rothe2 | IdentityId::Gould => sq(t.nat("n")) * 2,
        IdentityId::Pqkm | IdentityId::Kmx | IdentityId::Kmpink => {
            sq(t.nat("n")) * (t.nat("m") as u128 + 2)
        }
        IdentityId::Cardinality | IdentityId::Invw => {
            enumeration_cost(t.nat("p"), t.nat("k"), t.nat("m"), cap)?
        }
        IdentityId::Qchu | IdentityId::QchuM1 => {
            let m = if id == IdentityId::Qchu {
                t.nat("m")
            } else {
                1
            };
            let top = t.nat("x") + t.nat("y") + m * t.nat("n") + 1;
            sq(t.nat("n")) * (m as u128 + 1) * sq(top)
        }
        IdentityId::Qword => {
            let (p, q, m, n) = (t.nat("p"), t.nat("q"), t.nat("m"), t.nat("n"));
            let top = p + q + m * n + 1;
            enumeration_cost(p + q + m * n, n, m, cap)? + sq(n) * (m as u128 + 1) * sq(top)
        }
    })
}

/// Total estimated work of a sweep.
pub fn estimate(config: &SweepConfig) -> Result<u128> {
    let tuples = expand(config)?;
    estimate_tuples(config, &tuples)
}

fn estimate_tuples(config: &SweepConfig, tuples: &[Tuple]) -> Result<u128> {
    tuples
        .iter()
        .filter(|t| in_domain(config.identity, t))
        .try_fold(0u128, |acc, t| {
            Ok(acc.saturating_add(tuple_cost(config.identity, t, config.enumeration_cap)?))
        })
}

fn evaluate(id: IdentityId, t: &Tuple, cap: EnumerationCap) -> Result<VerificationReport> {
    match id {
        IdentityId::Rothe1 => {
            identity::check_rothe1(t.get("x"), t.get("y"), t.get("z"), t.int("n"))
        }
        IdentityId::Rothe2 => {
            identity::check_rothe2(t.get("x"), t.get("y"), t.get("z"), t.int("n"))
        }
        IdentityId::Gould => {
            identity::check_gould(t.get("x"), t.get("y"), t.get("z"), t.get("eps"), t.int("n"))
        }
        IdentityId::Pqkm => Ok(identity::check_pqkm(
            t.nat("p"),
            t.nat("q"),
            t.nat("m"),
            t.nat("n"),
        )),
        IdentityId::Kmx => identity::check_kmx(t.nat("p"), t.nat("q"), t.nat("m"), t.nat("n")),
        IdentityId::Kmpink => {
            identity::check_kmpink(t.nat("p"), t.nat("q"), t.nat("m"), t.nat("n"), t.nat("j"))
        }
        IdentityId::Cardinality => {
            identity::check_cardinality(t.nat("p"), t.nat("k"), t.nat("m"), cap)
        }
        IdentityId::Invw => qengine::check_invw(t.nat("p"), t.nat("k"), t.nat("m"), cap),
        IdentityId::Qchu => qengine::check_qchu(t.nat("x"), t.nat("y"), t.nat("m"), t.nat("n")),
        IdentityId::QchuM1 => qengine::check_qchu_m1(t.nat("x"), t.nat("y"), t.nat("n")),
        IdentityId::Qword => {
            qengine::qweighted_bijection_check(t.nat("p"), t.nat("q"), t.nat("m"), t.nat("n"), cap)
        }
    }
}

/// Runs a sweep. Errors (bad configuration, cap breach) are raised before
/// any tuple is evaluated.
pub fn run(config: &SweepConfig) -> Result<SweepOutcome> {
    let tuples = expand(config)?;
    let estimate = estimate_tuples(config, &tuples)?;
    if estimate > config.work_cap {
        return Err(Error::WorkCapExceeded {
            estimate,
            cap: config.work_cap,
        });
    }
    let (live, skipped): (Vec<Tuple>, Vec<Tuple>) = tuples
        .into_iter()
        .partition(|t| in_domain(config.identity, t));

    let (id, cap) = (config.identity, config.enumeration_cap);
    let reports = if config.fail_fast {
        let mut out = Vec::new();
        for t in &live {
            let r = evaluate(id, t, cap)?;
            let stop = !r.passed();
            out.push(r);
            if stop {
                break;
            }
        }
        out
    } else {
        live.par_iter()
            .map(|t| evaluate(id, t, cap))
            .collect::<Result<Vec<_>>>()?
    };
    Ok(SweepOutcome {
        reports,
        skipped: skipped.len(),
    })
}
