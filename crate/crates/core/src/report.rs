//! Pass/fail records shared by every checker.

use serde_json::{json, Map, Value};

use crate::exactla::{unit_vector, Matrix};
use crate::json::{matrix_to_json, vector_to_json};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
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

/// One evaluated equation. On failure it carries a witness and, for matrix
/// equalities, both sides.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub objects: Vec<String>,
    pub witness: Option<Value>,
    pub detail: Option<String>,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
}

impl Check {
    pub fn pass(name: impl Into<String>, objects: &[String]) -> Self {
        Check {
            name: name.into(),
            status: Status::Pass,
            objects: objects.to_vec(),
            witness: None,
            detail: None,
            lhs: None,
            rhs: None,
        }
    }

    pub fn fail(name: impl Into<String>, objects: &[String], detail: impl Into<String>) -> Self {
        Check { status: Status::Fail, detail: Some(detail.into()), ..Check::pass(name, objects) }
    }

    pub fn with_witness(mut self, w: Value) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn from_bool(name: impl Into<String>, objects: &[String], ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Check::pass(name, objects)
        } else {
            Check::fail(name, objects, detail)
        }
    }

    /// Compares two composites. The witness is the first basis vector of the
    /// common domain on which they differ.
    pub fn equality(name: impl Into<String>, objects: &[String], lhs: &Matrix, rhs: &Matrix) -> Self {
        let name = name.into();
        if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
            return Check::fail(
                name,
                objects,
                format!("shapes differ: {}x{} vs {}x{}", lhs.rows(), lhs.cols(), rhs.rows(), rhs.cols()),
            );
        }
        match lhs.first_mismatch_column(rhs) {
            None => Check::pass(name, objects),
            Some(j) => Check {
                lhs: Some(matrix_to_json(lhs)),
                rhs: Some(matrix_to_json(rhs)),
                ..Check::fail(name, objects, format!("composites differ on basis vector {j}"))
                    .with_witness(vector_to_json(&unit_vector(lhs.field(), lhs.cols(), j)))
            },
        }
    }

    /// Like `equality`, but a construction error (typically an induced map
    /// that is not well defined) is recorded as a failure.
    pub fn from_result(name: impl Into<String>, objects: &[String], sides: Result<(Matrix, Matrix)>) -> Self {
        match sides {
            Ok((l, r)) => Check::equality(name, objects, &l, &r),
            Err(e) => Check::fail(name, objects, e.to_string()),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self, key: &str) -> Value {
        let mut m = Map::new();
        m.insert(key.to_string(), json!(self.name));
        m.insert("status".into(), json!(self.status.as_str()));
        if !self.objects.is_empty() {
            m.insert("objects".into(), json!(self.objects));
        }
        if let Some(d) = &self.detail {
            m.insert("detail".into(), json!(d));
        }
        if let Some(w) = &self.witness {
            m.insert("witness".into(), w.clone());
        }
        if let Some(l) = &self.lhs {
            m.insert("lhs".into(), l.clone());
        }
        if let Some(r) = &self.rhs {
            m.insert("rhs".into(), r.clone());
        }
        Value::Object(m)
    }
}

/// An ordered list of checks.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    /// Names of the failing checks, each listed once in first-seen order.
    pub fn failed_names(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for c in self.failures() {
            if !out.contains(&c.name) {
                out.push(c.name.clone());
            }
        }
        out
    }

    pub fn get(&self, name: &str) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.name == name).collect()
    }

    /// Whether every check with this name passed (and at least one exists).
    pub fn all_passed(&self, name: &str) -> bool {
        let cs = self.get(name);
        !cs.is_empty() && cs.iter().all(|c| c.passed())
    }

    pub fn to_json(&self, key: &str) -> Value {
        Value::Array(self.checks.iter().map(|c| c.to_json(key)).collect())
    }

    /// One line per check, for terminal output.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{:4}  {}", c.status.as_str(), c.name));
            if !c.objects.is_empty() {
                out.push_str(&format!(" [{}]", c.objects.join(", ")));
            }
            if let (Status::Fail, Some(d)) = (c.status, &c.detail) {
                out.push_str(&format!(": {d}"));
            }
            out.push('\n');
        }
        out
    }
}
