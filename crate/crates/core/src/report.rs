//! Check results and verification reports.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::generators::FamilySpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
  Pass,
  Fail,
  Skipped,
}

/// Parameters identifying a single check; absent ones are omitted from JSON.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
  /// Color subset (1-based), for rank-selection and Lefschetz checks.
  #[serde(rename = "T", default, skip_serializing_if = "Option::is_none")]
  pub t: Option<Vec<usize>>,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub i: Option<usize>,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub k: Option<usize>,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub seed: Option<u64>,
}

/// Outcome of one check on one instance. A failure always carries a witness.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
  pub check: String,
  pub instance: String,
  #[serde(flatten)]
  pub params: Params,
  pub status: Status,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub witness: Option<Value>,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub data: Option<Value>,
}

impl CheckResult {
  pub fn new(check: &str, instance: &str, params: Params) -> Self {
    CheckResult { check: check.into(), instance: instance.into(), params, status: Status::Pass, witness: None, data: None }
  }

  /// Pass, or fail with `witness`.
  pub fn verdict(mut self, ok: bool, witness: impl FnOnce() -> Value) -> Self {
    if ok {
      self.status = Status::Pass;
    } else {
      self.status = Status::Fail;
      self.witness = Some(witness());
    }
    self
  }

  pub fn skipped(mut self, reason: Value) -> Self {
    self.status = Status::Skipped;
    self.witness = Some(reason);
    self
  }

  pub fn with_data(mut self, data: Value) -> Self {
    self.data = Some(data);
    self
  }

  pub fn passed(&self) -> bool { self.status == Status::Pass }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
  pub pass: usize,
  pub fail: usize,
  pub skipped: usize,
}

impl Summary {
  pub fn of(checks: &[CheckResult]) -> Self {
    let mut s = Summary::default();
    for c in checks {
      match c.status {
        Status::Pass => s.pass += 1,
        Status::Fail => s.fail += 1,
        Status::Skipped => s.skipped += 1,
      }
    }
    s
  }

  pub fn add(&mut self, other: Summary) {
    self.pass += other.pass;
    self.fail += other.fail;
    self.skipped += other.skipped;
  }
}

/// Run metadata; the only part of a report that varies between identical runs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
  pub timestamp: String,
  pub tool_version: String,
}

impl Header {
  pub fn now() -> Self {
    let secs = std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    Header { timestamp: format!("{secs}"), tool_version: env!("CARGO_PKG_VERSION").to_string() }
  }
}

/// Everything needed to re-run a check in isolation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub spec: Option<FamilySpec>,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub input: Option<String>,
  pub seeds: Vec<u64>,
  pub field_p: u64,
  pub checks: Vec<String>,
  pub tool_version: String,
}

/// Results for one instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceReport {
  pub instance: String,
  pub provenance: Provenance,
  pub checks: Vec<CheckResult>,
  pub summary: Summary,
}

impl InstanceReport {
  pub fn new(instance: &str, provenance: Provenance, checks: Vec<CheckResult>) -> Self {
    let summary = Summary::of(&checks);
    InstanceReport { instance: instance.into(), provenance, checks, summary }
  }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
  pub header: Header,
  pub instances: Vec<InstanceReport>,
  pub summary: Summary,
}

impl VerificationReport {
  pub fn new(instances: Vec<InstanceReport>) -> Self {
    let mut summary = Summary::default();
    for r in &instances {
      summary.add(r.summary);
    }
    VerificationReport { header: Header::now(), instances, summary }
  }

  pub fn to_json(&self) -> String { serde_json::to_string_pretty(self).expect("report serializes") + "\n" }

  /// JSON without the header, for comparing runs.
  pub fn body_json(&self) -> String {
    let mut v = serde_json::to_value(self).expect("report serializes");
    v.as_object_mut().expect("object").remove("header");
    serde_json::to_string_pretty(&v).expect("value serializes")
  }

  /// One row per check: instance, check, T, i, k, seed, status, witness, data.
  pub fn to_csv(&self) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["instance", "check", "T", "i", "k", "seed", "status", "witness", "data"]).expect("in-memory write");
    let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
    for inst in &self.instances {
      for c in &inst.checks {
        let t = c.params.t.as_ref().map(|t| format!("{t:?}")).unwrap_or_default();
        let status = serde_json::to_value(c.status).expect("status serializes");
        w.write_record([
          c.instance.clone(),
          c.check.clone(),
          t,
          opt(c.params.i),
          opt(c.params.k),
          c.params.seed.map(|s| s.to_string()).unwrap_or_default(),
          status.as_str().unwrap_or_default().to_string(),
          c.witness.as_ref().map(|v| v.to_string()).unwrap_or_default(),
          c.data.as_ref().map(|v| v.to_string()).unwrap_or_default(),
        ])
        .expect("in-memory write");
      }
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
  }

  pub fn to_text(&self) -> String {
    let mut out = String::new();
    for inst in &self.instances {
      let s = inst.summary;
      out += &format!("{}: pass {} fail {} skipped {}\n", inst.instance, s.pass, s.fail, s.skipped);
      for c in inst.checks.iter().filter(|c| c.status != Status::Pass) {
        let w = c.witness.as_ref().map(|v| v.to_string()).unwrap_or_default();
        out += &format!("  {:?} {} {:?} {}\n", c.status, c.check, c.params, w);
      }
    }
    let s = self.summary;
    out += &format!("total: pass {} fail {} skipped {}\n", s.pass, s.fail, s.skipped);
    out
  }
}
