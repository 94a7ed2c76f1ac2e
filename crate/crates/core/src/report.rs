use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::laurent::LaurentPolynomial;
use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    Rothe1,
    Rothe2,
    Gould,
    Pqkm,
    Kmx,
    Kmpink,
    Cardinality,
    Invw,
    Qchu,
    QchuM1,
    Qword,
}

impl IdentityId {
    pub const ALL: [IdentityId; 11] = [
        IdentityId::Rothe1,
        IdentityId::Rothe2,
        IdentityId::Gould,
        IdentityId::Pqkm,
        IdentityId::Kmx,
        IdentityId::Kmpink,
        IdentityId::Cardinality,
        IdentityId::Invw,
        IdentityId::Qchu,
        IdentityId::QchuM1,
        IdentityId::Qword,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Rothe1 => "rothe1",
            IdentityId::Rothe2 => "rothe2",
            IdentityId::Gould => "gould",
            IdentityId::Pqkm => "pqkm",
            IdentityId::Kmx => "kmx",
            IdentityId::Kmpink => "kmpink",
            IdentityId::Cardinality => "cardinality",
            IdentityId::Invw => "invw",
            IdentityId::Qchu => "qchu",
            IdentityId::QchuM1 => "qchu-m1",
            IdentityId::Qword => "qword",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamValue {
    Int(i64),
    Rational(Rational),
}

impl ParamValue {
    fn to_json(&self) -> Value {
        match self {
            ParamValue::Int(n) => json!(n),
            ParamValue::Rational(r) => json!(format_rational(r)),
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(n) => write!(f, "{n}"),
            ParamValue::Rational(r) => write!(f, "{}", format_rational(r)),
        }
    }
}

/// One side of a checked identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReportValue {
    Rational(Rational),
    Laurent(LaurentPolynomial),
}

impl ReportValue {
    fn to_json(&self) -> Value {
        match self {
            ReportValue::Rational(r) => json!(format_rational(r)),
            ReportValue::Laurent(p) => p.to_json(),
        }
    }
}

impl fmt::Display for ReportValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReportValue::Rational(r) => write!(f, "{}", format_rational(r)),
            ReportValue::Laurent(p) => write!(f, "{p}"),
        }
    }
}

impl From<Rational> for ReportValue {
    fn from(r: Rational) -> Self {
        ReportValue::Rational(r)
    }
}

impl From<LaurentPolynomial> for ReportValue {
    fn from(p: LaurentPolynomial) -> Self {
        ReportValue::Laurent(p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

pub type Params = Vec<(String, ParamValue)>;

/// Outcome of one identity check. `status` is `Pass` exactly when
/// `lhs == rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub params: Params,
    pub lhs: ReportValue,
    pub rhs: ReportValue,
    pub status: Status,
    pub counterexample: Option<Params>,
}

impl VerificationReport {
    /// Builds a report comparing `lhs` and `rhs`; on mismatch the parameters
    /// themselves are the counterexample.
    pub fn compare(
        identity: IdentityId,
        params: Params,
        lhs: impl Into<ReportValue>,
        rhs: impl Into<ReportValue>,
    ) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let status = if lhs == rhs {
            Status::Pass
        } else {
            Status::Fail
        };
        let counterexample = (status == Status::Fail).then(|| params.clone());
        VerificationReport {
            identity,
            params,
            lhs,
            rhs,
            status,
            counterexample,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn param(&self, name: &str) -> Option<&ParamValue> {
        self.params.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("identity".into(), json!(self.identity.as_str()));
        obj.insert("params".into(), params_json(&self.params));
        obj.insert("lhs".into(), self.lhs.to_json());
        obj.insert("rhs".into(), self.rhs.to_json());
        obj.insert("status".into(), json!(self.status.as_str()));
        if let Some(ce) = &self.counterexample {
            obj.insert("counterexample".into(), params_json(ce));
        }
        Value::Object(obj)
    }
}

pub(crate) fn params_json(params: &Params) -> Value {
    Value::Object(
        params
            .iter()
            .map(|(k, v)| (k.clone(), v.to_json()))
            .collect(),
    )
}

pub(crate) fn format_params(params: &Params) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} [{}] lhs={} rhs={}",
            self.status.as_str().to_uppercase(),
            self.identity,
            format_params(&self.params),
            self.lhs,
            self.rhs
        )?;
        if let Some(ce) = &self.counterexample {
            write!(f, " counterexample: {}", format_params(ce))?;
        }
        Ok(())
    }
}
