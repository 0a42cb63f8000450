//! Runs selected checks over instances and assembles reports.

use std::fmt;
use std::str::FromStr;

use log::{info, warn};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::colored::ColoredComplex;
use crate::error::{Error, Result};
use crate::face::{ColorSet, Face};
use crate::generators::{build, FamilySpec};
use crate::homology::{Certificate, LinkHomology};
use crate::inequalities as ineq;
use crate::linalg::FieldSpec;
use crate::report::{CheckResult, InstanceReport, Params, Provenance, VerificationReport};
use crate::sr::{
  colored_lsop, colored_squarefree_vertices, lefschetz_injective, multigraded_series_check, multiplication_injective,
  quotient_hilbert_with, random_forms, verify_lsop, Engine, LinearForm,
};
use crate::util::mix_seed;

/// Redraws allowed after a generic draw fails to be a system of parameters.
pub const MAX_REDRAWS: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
  Gorenstein,
  Cm,
  Bglb,
  RankSelected,
  Lemma33,
  LinkSum,
  FlagSymmetry,
  Equality,
  Hilbert,
  Multigraded,
  Lefschetz,
}

impl CheckKind {
  pub const ALL: [CheckKind; 11] = [
    CheckKind::Gorenstein,
    CheckKind::Cm,
    CheckKind::Bglb,
    CheckKind::RankSelected,
    CheckKind::Lemma33,
    CheckKind::LinkSum,
    CheckKind::FlagSymmetry,
    CheckKind::Equality,
    CheckKind::Hilbert,
    CheckKind::Multigraded,
    CheckKind::Lefschetz,
  ];

  pub fn as_str(self) -> &'static str {
    match self {
      CheckKind::Gorenstein => "gorenstein",
      CheckKind::Cm => "cm",
      CheckKind::Bglb => "bglb",
      CheckKind::RankSelected => "rank_selected",
      CheckKind::Lemma33 => "lemma33",
      CheckKind::LinkSum => "link_sum",
      CheckKind::FlagSymmetry => "flag_symmetry",
      CheckKind::Equality => "equality",
      CheckKind::Hilbert => "hilbert",
      CheckKind::Multigraded => "multigraded",
      CheckKind::Lefschetz => "lefschetz",
    }
  }

  /// Only claimed for Gorenstein* complexes; skipped otherwise.
  fn needs_gorenstein(self) -> bool {
    matches!(
      self,
      CheckKind::Bglb | CheckKind::RankSelected | CheckKind::FlagSymmetry | CheckKind::Equality | CheckKind::Lefschetz
    )
  }

  /// Parses `all` or a comma-separated list; the result is sorted and deduplicated.
  pub fn parse_list(s: &str) -> Result<Vec<CheckKind>> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
      if part == "all" {
        out.extend(CheckKind::ALL);
      } else {
        out.push(part.parse()?);
      }
    }
    if out.is_empty() {
      return Err(Error::InvalidParameter("no checks selected".into()));
    }
    out.sort();
    out.dedup();
    Ok(out)
  }
}

impl FromStr for CheckKind {
  type Err = Error;

  fn from_str(s: &str) -> Result<Self> {
    CheckKind::ALL
      .into_iter()
      .find(|k| k.as_str() == s)
      .ok_or_else(|| Error::InvalidParameter(format!("unknown check {s:?}")))
  }
}

impl fmt::Display for CheckKind {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result { f.write_str(self.as_str()) }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatteryConfig {
  pub checks: Vec<CheckKind>,
  /// Seeds for generic draws; each seed gives independent results.
  pub seeds: Vec<u64>,
  pub field: FieldSpec,
  /// Total-degree bound for the multigraded check; `d + 1` when absent.
  pub truncation: Option<usize>,
  pub engine: Engine,
}

impl Default for BatteryConfig {
  fn default() -> Self {
    BatteryConfig {
      checks: CheckKind::ALL.to_vec(),
      seeds: vec![1, 2, 3],
      field: FieldSpec::default_prime(),
      truncation: None,
      engine: Engine::Auto,
    }
  }
}

impl BatteryConfig {
  pub fn with_checks(checks: &[CheckKind]) -> Self { BatteryConfig { checks: checks.to_vec(), ..Self::default() } }

  fn provenance(&self, spec: Option<FamilySpec>, input: Option<String>) -> Provenance {
    Provenance {
      spec,
      input,
      seeds: self.seeds.clone(),
      field_p: self.field.modulus().unwrap_or(0),
      checks: self.checks.iter().map(|c| c.as_str().to_string()).collect(),
      tool_version: env!("CARGO_PKG_VERSION").to_string(),
    }
  }
}

/// Instances × checks used by the acceptance run.
pub fn default_suite() -> Vec<FamilySpec> {
  let mut out: Vec<FamilySpec> = (2..=7).map(FamilySpec::cross).collect();
  for d in [4, 5, 6] {
    for m in [2, 3] {
      out.push(FamilySpec::stacked_cross(d, m, 0));
    }
  }
  let sds: Vec<FamilySpec> = (2..=4).map(|d| FamilySpec::barycentric(FamilySpec::simplex(d))).collect();
  out.extend(sds.iter().cloned());
  out.extend(sds.into_iter().map(FamilySpec::suspension));
  out
}

pub fn suite_by_name(name: &str) -> Result<Vec<FamilySpec>> {
  match name {
    "default" => Ok(default_suite()),
    other => Err(Error::InvalidParameter(format!("unknown suite {other:?}"))),
  }
}

/// A generic system of parameters together with a generic `ω`.
#[derive(Clone, Debug)]
pub struct GenericDraw {
  pub forms: Vec<LinearForm>,
  pub omega: LinearForm,
  /// Seed of the accepted draw.
  pub draw_seed: u64,
  /// Number of rejected draws before it.
  pub redraws: usize,
}

/// Draws `#palette` generic forms plus `ω` from `seed`, redrawing up to
/// [`MAX_REDRAWS`] times while the forms fail to be a system of parameters.
pub fn generic_draw(complex: &ColoredComplex, field: FieldSpec, seed: u64, salt: u64) -> Result<GenericDraw> {
  let t = complex.palette();
  let all = ColorSet::full(t);
  for attempt in 0..=MAX_REDRAWS {
    let draw_seed = mix_seed(seed, salt.wrapping_add(attempt as u64));
    let forms = random_forms(complex, all, t, field, draw_seed)?;
    if verify_lsop(complex.complex(), &forms, field) {
      let omega = if t == 0 {
        LinearForm { coefficients: vec![0; complex.complex().vertex_count()], color_support: all }
      } else {
        random_forms(complex, all, 1, field, mix_seed(draw_seed, 0x0e6a))?.remove(0)
      };
      return Ok(GenericDraw { forms, omega, draw_seed, redraws: attempt });
    }
    warn!("generic draw with seed {draw_seed} (base seed {seed}) is not a system of parameters; redrawing");
  }
  Err(Error::GenericityFailure(MAX_REDRAWS + 1))
}

struct Instance<'a> {
  name: &'a str,
  complex: &'a ColoredComplex,
  cfg: &'a BatteryConfig,
  gorenstein: Option<Certificate>,
  cohen_macaulay: Option<Certificate>,
}

impl Instance<'_> {
  fn result(&self, check: &str, params: Params) -> CheckResult { CheckResult::new(check, self.name, params) }

  fn gate(&self, kind: CheckKind) -> Option<serde_json::Value> {
    if !self.complex.is_balanced() {
      return Some(json!({"reason": "not balanced", "palette": self.complex.palette(), "dim": self.complex.complex().dim()}));
    }
    match (&self.gorenstein, &self.cohen_macaulay) {
      (Some(cert), _) if kind.needs_gorenstein() && !cert.holds => {
        Some(json!({"reason": "not Gorenstein*", "certificate": cert}))
      }
      (_, Some(cert)) if kind == CheckKind::Hilbert && !cert.holds => {
        Some(json!({"reason": "not Cohen-Macaulay", "certificate": cert}))
      }
      _ => None,
    }
  }

  fn run(&self, kind: CheckKind) -> Vec<CheckResult> {
    let homology = matches!(kind, CheckKind::Gorenstein | CheckKind::Cm);
    if !homology {
      if let Some(reason) = self.gate(kind) {
        return vec![self.result(kind.as_str(), Params::default()).skipped(reason)];
      }
    }
    let (c, name) = (self.complex, self.name);
    match kind {
      CheckKind::Gorenstein => vec![self.homology_check("gorenstein_star", |lh| lh.gorenstein_star())],
      CheckKind::Cm => vec![self.homology_check("cohen_macaulay", |lh| lh.cohen_macaulay())],
      CheckKind::Bglb => vec![ineq::verify_bglb(c, name)],
      CheckKind::RankSelected => ineq::verify_rank_selected(c, name),
      CheckKind::Lemma33 => ineq::verify_lemma33_all(c, name),
      CheckKind::LinkSum => match ineq::verify_link_sum_all(c, name) {
        Ok(results) => results,
        Err(e) => vec![self.result("link_sum", Params::default()).skipped(json!({"reason": e.to_string()}))],
      },
      CheckKind::FlagSymmetry => vec![ineq::flag_symmetry(c, name)],
      CheckKind::Equality => vec![ineq::verify_equality(c, name)],
      CheckKind::Hilbert => self.hilbert(),
      CheckKind::Multigraded => vec![self.multigraded()],
      CheckKind::Lefschetz => self.lefschetz(),
    }
  }

  /// Certificate over `ℚ`, with the outcome over the configured prime attached.
  fn homology_check(&self, check: &str, f: impl Fn(&LinkHomology) -> Certificate) -> CheckResult {
    let cx = self.complex.complex();
    let q = match (check, &self.gorenstein, &self.cohen_macaulay) {
      ("gorenstein_star", Some(cert), _) | ("cohen_macaulay", _, Some(cert)) => cert.clone(),
      _ => f(&LinkHomology::new(cx, FieldSpec::Rational)),
    };
    let fp = f(&LinkHomology::new(cx, self.cfg.field));
    let data = json!({"faces_checked": q.faces_checked, "holds_over_p": fp.holds, "field_p": self.cfg.field.modulus()});
    self.result(check, Params::default()).verdict(q.holds, || json!(q.witness)).with_data(data)
  }

  fn expected_hilbert(&self) -> Vec<i64> {
    let mut h = self.complex.h_vector().0;
    h.push(0);
    h
  }

  fn hilbert(&self) -> Vec<CheckResult> {
    let cx = self.complex.complex();
    let d = self.complex.palette();
    let want = self.expected_hilbert();
    let field = self.cfg.field;
    let mut out = Vec::new();
    let forms = colored_lsop(self.complex, ColorSet::full(d));
    let sqf = colored_squarefree_vertices(self.complex, &forms);
    // exact over the rationals, independent of the prime used for generic draws
    let got = quotient_hilbert_with(cx, &forms, d + 1, FieldSpec::Rational, sqf, self.cfg.engine);
    let data = json!({"lsop": "colored", "field": "rational", "hilbert": got, "h": want});
    out.push(self.result("hilbert", Params::default()).verdict(got == want, || data.clone()).with_data(data));
    let generic: Vec<CheckResult> = self
      .cfg
      .seeds
      .par_iter()
      .map(|&seed| {
        let params = Params { seed: Some(seed), ..Params::default() };
        match generic_draw(self.complex, field, seed, 0x4111) {
          Ok(draw) => {
            let got = quotient_hilbert_with(cx, &draw.forms, d + 1, field, Face::EMPTY, self.cfg.engine);
            let data = json!({"lsop": "generic", "hilbert": got, "h": want, "draw_seed": draw.draw_seed, "redraws": draw.redraws});
            self.result("hilbert", params).verdict(got == want, || data.clone()).with_data(data)
          }
          Err(e) => self.result("hilbert", params).verdict(false, || json!({"error": e.to_string()})),
        }
      })
      .collect();
    out.extend(generic);
    out
  }

  fn multigraded(&self) -> CheckResult {
    let trunc = self.cfg.truncation.unwrap_or(self.complex.palette() + 1);
    let report = multigraded_series_check(self.complex, trunc);
    let data = json!({"truncation": trunc, "degrees_checked": report.degrees_checked});
    self
      .result("multigraded", Params { k: Some(trunc), ..Params::default() })
      .verdict(report.holds, || json!(report.first_mismatch))
      .with_data(data)
  }

  /// For every `T`, seed and `i ≤ #T/2`: `×ω^{#T−2i}` from degree `i` is
  /// injective; and for `i ≤ (#T+1)/2`, `×ω` from degree `i−1` is injective.
  fn lefschetz(&self) -> Vec<CheckResult> {
    let d = self.complex.palette();
    let units: Vec<(ColorSet, u64)> =
      ColorSet::all_subsets(d).flat_map(|t| self.cfg.seeds.iter().map(move |&s| (t, s))).collect();
    units.par_iter().flat_map_iter(|&(t, seed)| self.lefschetz_unit(t, seed)).collect()
  }

  fn lefschetz_unit(&self, t: ColorSet, seed: u64) -> Vec<CheckResult> {
    let field = self.cfg.field;
    let sub = self.complex.rank_select(t);
    let n = t.len();
    let params = |i: usize| Params { t: Some(t.colors()), i: Some(i), seed: Some(seed), ..Params::default() };
    let draw = match generic_draw(&sub, field, seed, 0x1ef5 ^ u64::from(t.0) << 16) {
      Ok(draw) => draw,
      Err(e) => return vec![self.result("lefschetz", params(0)).verdict(false, || json!({"error": e.to_string()}))],
    };
    let mut out = Vec::new();
    for i in 0..=n / 2 {
      let res = self.result("lefschetz", params(i));
      out.push(match lefschetz_injective(&sub, &draw.forms, &draw.omega, i, field, self.cfg.engine) {
        Ok(cert) => {
          let data = json!({"ranks": cert.ranks, "injective": cert.injective, "field_p": cert.field_p,
            "from_degree": cert.from_degree, "to_degree": cert.to_degree, "draw_seed": draw.draw_seed});
          res.verdict(cert.injective, || data.clone()).with_data(data)
        }
        Err(e) => res.verdict(false, || json!({"error": e.to_string()})),
      });
    }
    for i in 1..=n.div_ceil(2) {
      let cert = multiplication_injective(
        sub.complex(),
        &draw.forms,
        &draw.omega,
        i - 1,
        1,
        field,
        Face::EMPTY,
        self.cfg.engine,
      );
      let data = json!({"ranks": cert.ranks, "injective": cert.injective, "field_p": cert.field_p,
        "from_degree": cert.from_degree, "to_degree": cert.to_degree, "draw_seed": draw.draw_seed});
      out.push(self.result("lefschetz_consecutive", params(i)).verdict(cert.injective, || data.clone()).with_data(data));
    }
    out
  }
}

/// Runs `cfg.checks` on one instance. Checks run in parallel; results keep
/// the order of `cfg.checks`.
pub fn run_instance(name: &str, complex: &ColoredComplex, provenance: Provenance, cfg: &BatteryConfig) -> InstanceReport {
  let wants = |f: &dyn Fn(CheckKind) -> bool| cfg.checks.iter().any(|&k| f(k));
  let homology = LinkHomology::new(complex.complex(), FieldSpec::Rational);
  let gorenstein = wants(&|k| k.needs_gorenstein() || k == CheckKind::Gorenstein).then(|| homology.gorenstein_star());
  let cohen_macaulay = wants(&|k| k == CheckKind::Hilbert || k == CheckKind::Cm).then(|| homology.cohen_macaulay());
  let inst = Instance { name, complex, cfg, gorenstein, cohen_macaulay };
  let checks: Vec<CheckResult> = cfg.checks.par_iter().map(|&k| inst.run(k)).flatten().collect();
  let report = InstanceReport::new(name, provenance, checks);
  info!("{name}: {:?}", report.summary);
  report
}

/// Builds every spec and runs the battery on it.
pub fn run_specs(specs: &[FamilySpec], cfg: &BatteryConfig) -> Result<VerificationReport> {
  let built: Vec<ColoredComplex> = specs.iter().map(build).collect::<Result<_>>()?;
  let instances = specs
    .par_iter()
    .zip(built.par_iter())
    .map(|(spec, c)| run_instance(&spec.name(), c, cfg.provenance(Some(spec.clone()), None), cfg))
    .collect();
  Ok(VerificationReport::new(instances))
}

/// Runs the battery on already-loaded complexes named by their input paths.
pub fn run_inputs(inputs: &[(String, ColoredComplex)], cfg: &BatteryConfig) -> VerificationReport {
  let instances = inputs
    .par_iter()
    .map(|(path, c)| run_instance(path, c, cfg.provenance(None, Some(path.clone())), cfg))
    .collect();
  VerificationReport::new(instances)
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::generators::cross_polytope;
  use crate::report::Status;

  #[test]
  fn parse_check_lists() {
    assert_eq!(CheckKind::parse_list("all").unwrap().len(), 11);
    assert_eq!(CheckKind::parse_list("lemma33,bglb,bglb").unwrap(), vec![CheckKind::Bglb, CheckKind::Lemma33]);
    assert!(CheckKind::parse_list("bogus").is_err());
    assert!(CheckKind::parse_list("").is_err());
  }

  #[test]
  fn suite_shape() {
    let suite = default_suite();
    assert_eq!(suite.len(), 6 + 6 + 3 + 3);
    assert_eq!(suite[12].name(), "sd(simplex-2)");
    assert_eq!(suite[17].name(), "susp(sd(simplex-4))");
  }

  #[test]
  fn octahedron_full_battery() {
    let oct = cross_polytope(3).unwrap();
    let cfg = BatteryConfig::default();
    let report = run_instance("oct", &oct, cfg.provenance(None, None), &cfg);
    assert_eq!(report.summary.fail, 0, "{:#?}", report.checks.iter().filter(|c| !c.passed()).collect::<Vec<_>>());
    assert_eq!(report.summary.skipped, 0);
    let lef = report.checks.iter().filter(|c| c.check == "lefschetz").count();
    // subsets by size 0..=3: 1·1 + 3·1 + 3·2 + 1·2 pairs (T, i), times 3 seeds
    assert_eq!(lef, 12 * 3);
  }

  #[test]
  fn non_sphere_is_gated() {
    let two = crate::complex::SimplicialComplex::from_facets(&[vec![1, 2, 3], vec![1, 2, 4]], 4).unwrap();
    let two = ColoredComplex::new(two, crate::colored::Coloring(vec![1, 2, 3, 3]), 3).unwrap();
    let cfg = BatteryConfig::with_checks(&[CheckKind::Bglb]);
    let report = run_instance("disk", &two, cfg.provenance(None, None), &cfg);
    assert_eq!(report.checks.len(), 1);
    assert_eq!(report.checks[0].status, Status::Skipped);
    assert_eq!(report.checks[0].witness.as_ref().unwrap()["reason"], "not Gorenstein*");
  }
}
