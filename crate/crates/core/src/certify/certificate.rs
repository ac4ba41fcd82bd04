use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::graphs::FamilySpec;

pub const SCHEMA_VERSION: u32 = 1;

/// A number stored in a certificate. Floats and ratios serialize as strings
/// ("0.1", "inf", "2/1") so they round-trip exactly through JSON.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Value {
    Int(i64),
    Float(f64),
    Ratio(u64, u64),
    Bool(bool),
}

impl Value {
    pub fn as_f64(self) -> f64 {
        match self {
            Value::Int(v) => v as f64,
            Value::Float(v) => v,
            Value::Ratio(p, q) => p as f64 / q as f64,
            Value::Bool(b) => f64::from(u8::from(b)),
        }
    }

    fn cmp_with(self, other: Value) -> Option<std::cmp::Ordering> {
        match (self, other) {
            (Value::Int(a), Value::Int(b)) => Some(a.cmp(&b)),
            (Value::Bool(a), Value::Bool(b)) => Some(a.cmp(&b)),
            (Value::Ratio(p, q), Value::Ratio(r, s)) => {
                Some((p as u128 * s as u128).cmp(&(r as u128 * q as u128)))
            }
            (Value::Ratio(p, q), Value::Int(b)) if b >= 0 => Some((p as u128).cmp(&(b as u128 * q as u128))),
            (Value::Int(a), Value::Ratio(p, q)) if a >= 0 => Some((a as u128 * q as u128).cmp(&(p as u128))),
            (a, b) => a.as_f64().partial_cmp(&b.as_f64()),
        }
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::Int(v as i64)
    }
}

impl From<u32> for Value {
    fn from(v: u32) -> Self {
        Value::Int(v as i64)
    }
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Float(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Float(v) => write!(f, "{v}"),
            Value::Ratio(p, q) => write!(f, "{p}/{q}"),
            Value::Bool(b) => write!(f, "{b}"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match *self {
            Value::Int(v) => s.serialize_i64(v),
            Value::Bool(b) => s.serialize_bool(b),
            Value::Float(_) | Value::Ratio(..) => s.collect_str(self),
        }
    }
}

fn parse_value_str(v: &str) -> Option<Value> {
    if let Some((p, q)) = v.split_once('/') {
        let (p, q) = (p.parse().ok()?, q.parse().ok()?);
        return (q != 0).then_some(Value::Ratio(p, q));
    }
    v.parse().ok().map(Value::Float)
}

impl<'de> Deserialize<'de> for Value {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Value;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer, a boolean, or a decimal/ratio string")
            }

            fn visit_bool<E: de::Error>(self, v: bool) -> Result<Value, E> {
                Ok(Value::Bool(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Value, E> {
                Ok(Value::Int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Value, E> {
                i64::try_from(v).map(Value::Int).map_err(E::custom)
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Value, E> {
                Ok(Value::Float(v))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Value, E> {
                parse_value_str(v).ok_or_else(|| E::custom(format!("bad numeric string {v:?}")))
            }
        }
        d.deserialize_any(V)
    }
}

/// How a number was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    ComputedExact,
    ComputedFloat,
    PaperBound,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Evidence {
    pub name: String,
    pub value: Value,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Recorded,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Recorded => "recorded",
        })
    }
}

/// A comparison between named evidence entries. `tol` is absolute slack.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Check {
    Record,
    Eq { left: String, right: String },
    Le { left: String, right: String, tol: Value },
    Lt { left: String, right: String },
    Ge { left: String, right: String, tol: Value },
    Gt { left: String, right: String },
    OneOf { value: String, options: Vec<i64> },
}

impl Check {
    pub fn eq(left: &str, right: &str) -> Self {
        Check::Eq { left: left.into(), right: right.into() }
    }

    pub fn le(left: &str, right: &str, tol: f64) -> Self {
        Check::Le { left: left.into(), right: right.into(), tol: Value::Float(tol) }
    }

    pub fn lt(left: &str, right: &str) -> Self {
        Check::Lt { left: left.into(), right: right.into() }
    }

    pub fn ge(left: &str, right: &str, tol: f64) -> Self {
        Check::Ge { left: left.into(), right: right.into(), tol: Value::Float(tol) }
    }

    pub fn gt(left: &str, right: &str) -> Self {
        Check::Gt { left: left.into(), right: right.into() }
    }

    pub fn one_of(value: &str, options: &[i64]) -> Self {
        Check::OneOf { value: value.into(), options: options.to_vec() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub claim_id: String,
    pub statement: String,
    pub status: Status,
    pub evidence: Vec<Evidence>,
    pub check: Check,
}

impl Claim {
    pub fn new(claim_id: impl Into<String>, statement: impl Into<String>) -> Self {
        Claim {
            claim_id: claim_id.into(),
            statement: statement.into(),
            status: Status::Recorded,
            evidence: Vec::new(),
            check: Check::Record,
        }
    }

    pub fn exact(self, name: &str, value: impl Into<Value>) -> Self {
        self.with(name, value.into(), Provenance::ComputedExact)
    }

    pub fn float(self, name: &str, value: f64) -> Self {
        self.with(name, Value::Float(value), Provenance::ComputedFloat)
    }

    pub fn paper(self, name: &str, value: impl Into<Value>) -> Self {
        self.with(name, value.into(), Provenance::PaperBound)
    }

    pub fn with(mut self, name: &str, value: Value, provenance: Provenance) -> Self {
        self.evidence.push(Evidence { name: name.into(), value, provenance });
        self
    }

    /// Sets the check and evaluates it.
    pub fn check(mut self, check: Check) -> Self {
        self.check = check;
        self.status = self.evaluate();
        self
    }

    pub fn get(&self, name: &str) -> Option<Value> {
        self.evidence.iter().find(|e| e.name == name).map(|e| e.value)
    }

    /// Status implied by the stored check and evidence.
    pub fn evaluate(&self) -> Status {
        use std::cmp::Ordering::*;
        let pair = |l: &str, r: &str| Some((self.get(l)?, self.get(r)?));
        let ok = match &self.check {
            Check::Record => return Status::Recorded,
            Check::Eq { left, right } => pair(left, right).map(|(a, b)| a.cmp_with(b) == Some(Equal)),
            Check::Lt { left, right } => pair(left, right).map(|(a, b)| a.cmp_with(b) == Some(Less)),
            Check::Gt { left, right } => pair(left, right).map(|(a, b)| a.cmp_with(b) == Some(Greater)),
            Check::Le { left, right, tol } => pair(left, right).map(|(a, b)| {
                matches!(a.cmp_with(b), Some(Less | Equal)) || a.as_f64() <= b.as_f64() + tol.as_f64()
            }),
            Check::Ge { left, right, tol } => pair(left, right).map(|(a, b)| {
                matches!(a.cmp_with(b), Some(Greater | Equal)) || a.as_f64() >= b.as_f64() - tol.as_f64()
            }),
            Check::OneOf { value, options } => self
                .get(value)
                .map(|v| options.iter().any(|&o| v.cmp_with(Value::Int(o)) == Some(Equal))),
        };
        if ok == Some(true) {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// R(3, t) > n, witnessed by a triangle-free graph with α <= alpha_bound < t.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RamseyRecord {
    pub s: u32,
    pub t: u64,
    pub n: u64,
    pub alpha_bound: Value,
    /// "exact-independence" or "ratio-bound".
    pub method: String,
    /// A maximum independent set, present when α is exact.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub suite: String,
    pub subject: String,
    pub family: Option<FamilySpec>,
    #[serde(default)]
    pub parameters: BTreeMap<String, Value>,
    /// Parameters that were filled in by default rather than given.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub defaults: Vec<String>,
    pub status: Status,
    pub claims: Vec<Claim>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ramsey: Option<RamseyRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Certificate {
    pub fn new(suite: &str, subject: impl Into<String>, family: Option<FamilySpec>) -> Self {
        Certificate {
            schema_version: SCHEMA_VERSION,
            suite: suite.into(),
            subject: subject.into(),
            family,
            parameters: BTreeMap::new(),
            defaults: Vec::new(),
            status: Status::Recorded,
            claims: Vec::new(),
            ramsey: None,
            error: None,
        }
    }

    /// A certificate for a graph that could not be processed.
    pub fn failed(suite: &str, subject: impl Into<String>, family: Option<FamilySpec>, error: String) -> Self {
        let mut c = Certificate::new(suite, subject, family);
        c.error = Some(error);
        c.status = Status::Fail;
        c
    }

    pub fn param(mut self, name: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(name.into(), value.into());
        self
    }

    pub fn push(&mut self, claim: Claim) {
        self.claims.push(claim);
    }

    pub fn extend(&mut self, claims: impl IntoIterator<Item = Claim>) {
        self.claims.extend(claims);
    }

    fn aggregate(&self) -> Status {
        if self.error.is_some() || self.claims.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else if self.claims.iter().any(|c| c.status == Status::Pass) {
            Status::Pass
        } else {
            Status::Recorded
        }
    }

    /// Fixes the overall status from the claims.
    pub fn finish(mut self) -> Self {
        self.status = self.aggregate();
        self
    }

    pub fn claim(&self, claim_id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.claim_id == claim_id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| c.status == Status::Fail)
    }

    /// Re-evaluates every check from the stored evidence. Returns the list
    /// of inconsistencies; empty means the certificate is self-consistent.
    pub fn recheck(&self) -> Vec<String> {
        let mut problems = Vec::new();
        if self.schema_version != SCHEMA_VERSION {
            problems.push(format!("schema_version {} != {SCHEMA_VERSION}", self.schema_version));
        }
        for c in &self.claims {
            let s = c.evaluate();
            if s != c.status {
                problems.push(format!("{}: stored {} but evidence gives {s}", c.claim_id, c.status));
            }
        }
        if self.aggregate() != self.status {
            problems.push(format!("overall status {} but claims give {}", self.status, self.aggregate()));
        }
        if let Some(r) = &self.ramsey {
            let bound = r.alpha_bound.as_f64();
            if r.s != 3 || r.t != bound.floor() as u64 + 1 || bound >= r.n as f64 {
                problems.push(format!("inconsistent ramsey record {r:?}"));
            }
            match self.claim("triangle-free") {
                Some(c) if c.status == Status::Pass => {}
                _ => problems.push("ramsey record without a passing triangle-free claim".into()),
            }
            if let Some(w) = &r.witness {
                if w.len() as f64 != bound {
                    problems.push("witness size differs from alpha_bound".into());
                }
            }
        }
        problems
    }
}
