//! Balanced g-numbers and exact checks of the inequalities and identities
//! they satisfy on balanced spheres.

use serde::Serialize;
use serde_json::json;

use crate::colored::ColoredComplex;
use crate::complex::HVector;
use crate::error::{Error, Result};
use crate::face::{ColorSet, Face};
use crate::report::{CheckResult, Params};
use crate::util::binomial;

/// `ḡ_i = i·h_i − (d−i+1)·h_{i−1}` with `h` zero outside `0..=d` and `ḡ_0 = 0`.
pub fn g_at(h: &HVector, d: usize, i: usize) -> i64 {
  if i == 0 {
    return 0;
  }
  let i = i as i64;
  i * h.get(i) - (d as i64 - i + 1) * h.get(i - 1)
}

/// The ratio form `h_{i−1}/C(d,i−1) ≤ h_i/C(d,i)`, cross-multiplied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioForm {
  pub i: usize,
  /// `h_{i−1}·C(d,i)`
  pub lhs: i64,
  /// `h_i·C(d,i−1)`
  pub rhs: i64,
  pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalancedGVector {
  pub d: usize,
  /// `ḡ_0, ..., ḡ_d`.
  pub entries: Vec<i64>,
  /// Ratio form for `i = 1..=d`.
  pub ratio: Vec<RatioForm>,
}

impl BalancedGVector {
  pub fn get(&self, i: usize) -> i64 { self.entries.get(i).copied().unwrap_or(0) }

  /// `{1 ≤ i ≤ ⌊d/2⌋ : ḡ_i = 0}`.
  pub fn zero_set(&self) -> Vec<usize> { (1..=self.d / 2).filter(|&i| self.get(i) == 0).collect() }
}

pub fn balanced_g(h: &HVector, d: usize) -> Result<BalancedGVector> {
  if h.0.len() != d + 1 {
    return Err(Error::LengthMismatch { got: h.0.len(), expected: d + 1 });
  }
  Ok(balanced_g_unchecked(h, d))
}

fn balanced_g_unchecked(h: &HVector, d: usize) -> BalancedGVector {
  let entries = (0..=d).map(|i| g_at(h, d, i)).collect();
  let ratio = (1..=d)
    .map(|i| {
      let lhs = h.get(i as i64 - 1) * binomial(d as i64, i as i64);
      let rhs = h.get(i as i64) * binomial(d as i64, i as i64 - 1);
      RatioForm { i, lhs, rhs, holds: lhs <= rhs }
    })
    .collect();
  BalancedGVector { d, entries, ratio }
}

/// `ḡ_i ≥ 0` for `1 ≤ i ≤ ⌊d/2⌋`, on the h-vector of `complex` over its palette.
pub fn verify_bglb(complex: &ColoredComplex, instance: &str) -> CheckResult {
  verify_bglb_h(&complex.h_vector(), complex.palette(), instance)
}

/// Same check on a bare h-vector. Entries beyond the given ones count as zero,
/// so truncated or corrupted vectors are evaluated rather than rejected. The
/// witness lists every failing `i`.
pub fn verify_bglb_h(h: &HVector, d: usize, instance: &str) -> CheckResult {
  let g = balanced_g_unchecked(h, d);
  let failures: Vec<_> = (1..=d / 2).filter(|&i| g.get(i) < 0).map(|i| json!({"i": i, "g": g.get(i)})).collect();
  let data = json!({"h": h.0, "d": d, "g": g.entries});
  CheckResult::new("bglb", instance, Params::default())
    .verdict(failures.is_empty(), || json!({"first_i": failures[0]["i"], "failures": failures}))
    .with_data(data)
}

/// `h(Δ_T)` over palette `#T` for every `T ⊆ [d]`, indexed by the bitmask of `T`.
pub fn rank_selected_h(complex: &ColoredComplex) -> Vec<HVector> {
  ColorSet::all_subsets(complex.palette()).map(|t| complex.rank_select(t).h_vector()).collect()
}

fn t_param(t: ColorSet) -> Params { Params { t: Some(t.colors()), ..Params::default() } }

/// For each `T ⊆ [d]`: `h_i(Δ_T) ≤ h_{#T−i}(Δ_T)` for `i ≤ #T/2`, and
/// `h_0 ≤ h_1 ≤ … ≤ h_{⌊(#T+1)/2⌋}`.
pub fn verify_rank_selected(complex: &ColoredComplex, instance: &str) -> Vec<CheckResult> {
  let hs = rank_selected_h(complex);
  ColorSet::all_subsets(complex.palette()).map(|t| rank_selected_check(t, &hs[t.0 as usize], instance)).collect()
}

fn rank_selected_check(t: ColorSet, h: &HVector, instance: &str) -> CheckResult {
  let n = t.len() as i64;
  let mut bad = Vec::new();
  for i in 0..=n / 2 {
    if h.get(i) > h.get(n - i) {
      bad.push(json!({"part": "symmetry", "i": i, "h_i": h.get(i), "h_t_minus_i": h.get(n - i)}));
    }
  }
  for i in 1..=(n + 1) / 2 {
    if h.get(i - 1) > h.get(i) {
      bad.push(json!({"part": "unimodal", "i": i, "h_i_minus_1": h.get(i - 1), "h_i": h.get(i)}));
    }
  }
  CheckResult::new("rank_selected", instance, t_param(t))
    .verdict(bad.is_empty(), || json!(bad))
    .with_data(json!({"h": h.0}))
}

/// `C(d−i, k−i)·h_i(Δ) = Σ_{#T=k} h_i(Δ_T)`.
pub fn verify_lemma33(complex: &ColoredComplex, i: usize, k: usize, instance: &str) -> Result<CheckResult> {
  let d = complex.palette();
  if !(i <= k && k <= d) {
    return Err(Error::InvalidParameter(format!("need i <= k <= d, got i={i} k={k} d={d}")));
  }
  let rhs: i64 = ColorSet::all_subsets(d)
    .filter(|t| t.len() == k)
    .map(|t| complex.rank_select(t).h_vector().get(i as i64))
    .sum();
  Ok(lemma33_check(&complex.h_vector(), d, i, k, rhs, instance))
}

/// [`verify_lemma33`] for every `i ≤ k ≤ d`, sharing the rank selections.
pub fn verify_lemma33_all(complex: &ColoredComplex, instance: &str) -> Vec<CheckResult> {
  let d = complex.palette();
  let hs = rank_selected_h(complex);
  let h = complex.h_vector();
  let mut out = Vec::new();
  for k in 0..=d {
    for i in 0..=k {
      let rhs: i64 = ColorSet::all_subsets(d).filter(|t| t.len() == k).map(|t| hs[t.0 as usize].get(i as i64)).sum();
      out.push(lemma33_check(&h, d, i, k, rhs, instance));
    }
  }
  out
}

fn lemma33_check(h: &HVector, d: usize, i: usize, k: usize, rhs: i64, instance: &str) -> CheckResult {
  let lhs = binomial((d - i) as i64, (k - i) as i64) * h.get(i as i64);
  CheckResult::new("lemma33", instance, Params { i: Some(i), k: Some(k), ..Params::default() })
    .verdict(lhs == rhs, || json!({"lhs": lhs, "rhs": rhs}))
    .with_data(json!({"lhs": lhs, "rhs": rhs}))
}

/// h-vectors of all vertex links, each over its own palette of size `d − 1`.
pub fn vertex_link_h(complex: &ColoredComplex) -> Vec<HVector> {
  (0..complex.complex().vertex_count())
    .map(|v| complex.link(Face::singleton(v)).expect("vertex is a face").h_vector())
    .collect()
}

/// `Σ_v ḡ_i(lk v) = i·ḡ_{i+1} + (d−i)·ḡ_i` together with
/// `Σ_v h_i(lk v) = (i+1)·h_{i+1} + (d−i)·h_i`.
pub fn verify_link_sum(complex: &ColoredComplex, i: usize, instance: &str) -> Result<CheckResult> {
  require_pure_balanced(complex)?;
  if i > complex.palette() {
    return Err(Error::DegreeOutOfRange(i as i64));
  }
  Ok(link_sum_check(complex, &vertex_link_h(complex), i, instance))
}

/// [`verify_link_sum`] for every `0 ≤ i ≤ d`, computing the links once.
pub fn verify_link_sum_all(complex: &ColoredComplex, instance: &str) -> Result<Vec<CheckResult>> {
  require_pure_balanced(complex)?;
  let links = vertex_link_h(complex);
  Ok((0..=complex.palette()).map(|i| link_sum_check(complex, &links, i, instance)).collect())
}

fn require_pure_balanced(complex: &ColoredComplex) -> Result<()> {
  if !complex.complex().is_pure() {
    return Err(Error::NotPure);
  }
  complex.require_balanced()
}

fn link_sum_check(complex: &ColoredComplex, links: &[HVector], i: usize, instance: &str) -> CheckResult {
  let d = complex.palette();
  let h = complex.h_vector();
  let ii = i as i64;
  let g_lhs: i64 = links.iter().map(|lk| g_at(lk, d - 1, i)).sum();
  let g_rhs = ii * g_at(&h, d, i + 1) + (d as i64 - ii) * g_at(&h, d, i);
  let h_lhs: i64 = links.iter().map(|lk| lk.get(ii)).sum();
  let h_rhs = (ii + 1) * h.get(ii + 1) + (d as i64 - ii) * h.get(ii);
  let data = json!({"g_sum": [g_lhs, g_rhs], "h_sum": [h_lhs, h_rhs]});
  CheckResult::new("link_sum", instance, Params { i: Some(i), ..Params::default() })
    .verdict(g_lhs == g_rhs && h_lhs == h_rhs, || data.clone())
    .with_data(data.clone())
}

/// `h_S = h_{[d]∖S}` for every `S ⊆ [d]`.
pub fn flag_symmetry(complex: &ColoredComplex, instance: &str) -> CheckResult {
  let d = complex.palette();
  let (_, h) = complex.flag_vectors();
  let bad = ColorSet::all_subsets(d).find(|&s| h.get(s) != h.get(s.complement_in(d)));
  CheckResult::new("flag_symmetry", instance, Params::default()).verdict(bad.is_none(), || {
    let s = bad.expect("witness");
    json!({"S": s.colors(), "h_S": h.get(s), "h_complement": h.get(s.complement_in(d))})
  })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualityReport {
  pub g: Vec<i64>,
  /// `i ≤ ⌊d/2⌋` with `ḡ_i = 0`.
  pub zero_set: Vec<usize>,
  /// `(i, ḡ_i = 0, h_i(Δ_T) = h_{i−1}(Δ_T) for all #T = 2i−1)`.
  pub rank_selection_equalities: Vec<(usize, bool, bool)>,
  pub violations: Vec<serde_json::Value>,
}

impl EqualityReport {
  pub fn holds(&self) -> bool { self.violations.is_empty() }
}

/// Consequences of `ḡ_i = 0`:
/// - for `1 ≤ i ≤ ⌊(d+1)/2⌋`, `ḡ_i = 0` iff `h_i(Δ_T) = h_{i−1}(Δ_T)` for all `#T = 2i−1`;
/// - for `2 ≤ i ≤ ⌊d/2⌋`, `ḡ_{i−1} = 0` implies `ḡ_i = 0`;
/// - for `i` in the zero set, `ḡ_i(lk v) = 0` for every vertex `v`.
pub fn equality_analysis(complex: &ColoredComplex) -> EqualityReport {
  let d = complex.palette();
  let h = complex.h_vector();
  let g = balanced_g_unchecked(&h, d);
  let zero_set = g.zero_set();
  let mut violations = Vec::new();

  let hs = rank_selected_h(complex);
  let mut rank_selection_equalities = Vec::new();
  for i in 1..=d.div_ceil(2) {
    let zero = g.get(i) == 0;
    let offender = ColorSet::all_subsets(d)
      .filter(|t| t.len() == 2 * i - 1)
      .find(|t| hs[t.0 as usize].get(i as i64) != hs[t.0 as usize].get(i as i64 - 1));
    rank_selection_equalities.push((i, zero, offender.is_none()));
    if zero != offender.is_none() {
      violations.push(json!({"part": "rank_selection", "i": i, "g": g.get(i), "T": offender.map(|t| t.colors())}));
    }
  }

  for i in 2..=d / 2 {
    if g.get(i - 1) == 0 && g.get(i) != 0 {
      violations.push(json!({"part": "propagation", "i": i, "g": g.get(i)}));
    }
  }

  if !zero_set.is_empty() {
    let links = vertex_link_h(complex);
    for &i in &zero_set {
      if let Some(v) = links.iter().position(|lk| g_at(lk, d - 1, i) != 0) {
        let label = complex.complex().labels()[v];
        violations.push(json!({"part": "links", "i": i, "vertex": label, "g_link": g_at(&links[v], d - 1, i)}));
      }
    }
  }

  EqualityReport { g: g.entries, zero_set, rank_selection_equalities, violations }
}

pub fn verify_equality(complex: &ColoredComplex, instance: &str) -> CheckResult {
  let report = equality_analysis(complex);
  let data = json!({"g": report.g, "zero_set": report.zero_set});
  CheckResult::new("equality", instance, Params::default())
    .verdict(report.holds(), || json!(report.violations))
    .with_data(data)
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::generators::{barycentric_subdivision, cross_polytope, simplex_boundary, stacked_cross_polytope};
  use crate::report::Status;

  fn sd3() -> ColoredComplex { barycentric_subdivision(simplex_boundary(3).unwrap().complex()).unwrap() }

  #[test]
  fn g_vectors() {
    let g = balanced_g(&HVector(vec![1, 4, 6, 4, 1]), 4).unwrap();
    assert_eq!(&g.entries[..3], &[0, 0, 0]);
    assert!(g.ratio.iter().take(2).all(|r| r.holds && r.lhs == r.rhs));
    assert_eq!(balanced_g(&HVector(vec![1, 11, 11, 1]), 3).unwrap().get(1), 8);
    let g = balanced_g(&HVector(vec![1, 8, 12, 8, 1]), 4).unwrap();
    assert_eq!((g.get(1), g.get(2)), (4, 0));
    assert!(matches!(balanced_g(&HVector(vec![1, 2, 1, 1]), 4), Err(Error::LengthMismatch { got: 4, expected: 5 })));
  }

  #[test]
  fn ratio_form_matches_sign() {
    for h in [vec![1, 2, 1, 1, 0], vec![1, 8, 12, 8, 1], vec![1, 3, 9, 3, 1], vec![1, 0, 5, 0, 1]] {
      let g = balanced_g(&HVector(h), 4).unwrap();
      for r in &g.ratio {
        assert_eq!(r.holds, g.get(r.i) >= 0);
      }
    }
  }

  #[test]
  fn bglb_pass_and_fail() {
    assert!(verify_bglb(&cross_polytope(3).unwrap(), "oct").passed());
    let bad = verify_bglb_h(&HVector(vec![1, 2, 1, 1]), 4, "corrupted");
    assert_eq!(bad.status, Status::Fail);
    let failing: Vec<i64> =
      bad.witness.unwrap()["failures"].as_array().unwrap().iter().map(|w| w["i"].as_i64().unwrap()).collect();
    assert!(failing.contains(&2));
  }

  #[test]
  fn rank_selected_examples() {
    let oct = cross_polytope(3).unwrap();
    let results = verify_rank_selected(&oct, "oct");
    assert_eq!(results.len(), 8);
    assert!(results.iter().all(|r| r.passed()));
    let t12 = results.iter().find(|r| r.params.t.as_deref() == Some(&[1, 2][..])).unwrap();
    assert_eq!(t12.data.as_ref().unwrap()["h"], json!([1, 2, 1]));
    let c5 = verify_rank_selected(&cross_polytope(5).unwrap(), "c5");
    assert_eq!(c5.len(), 32);
    assert!(c5.iter().all(|r| r.passed()));
  }

  #[test]
  fn lemma33_examples() {
    let oct = cross_polytope(3).unwrap();
    let r = verify_lemma33(&oct, 1, 2, "oct").unwrap();
    assert!(r.passed());
    assert_eq!(r.data.unwrap()["lhs"], 6);
    assert!(verify_lemma33(&oct, 2, 1, "oct").is_err());
    let all = verify_lemma33_all(&sd3(), "sd3");
    assert_eq!(all.len(), 10);
    assert!(all.iter().all(|r| r.passed()));
  }

  #[test]
  fn link_sum_examples() {
    let oct = cross_polytope(3).unwrap();
    let r = verify_link_sum(&oct, 1, "oct").unwrap();
    assert!(r.passed());
    assert_eq!(r.data.as_ref().unwrap()["g_sum"], json!([0, 0]));
    assert_eq!(r.data.as_ref().unwrap()["h_sum"], json!([12, 12]));
    for c in [oct, sd3(), stacked_cross_polytope(4, 2, 0).unwrap()] {
      assert!(verify_link_sum_all(&c, "x").unwrap().iter().all(|r| r.passed()));
    }
    let tri = crate::complex::SimplicialComplex::from_facets(&[vec![1, 2, 3], vec![3, 4]], 4).unwrap();
    let tri = ColoredComplex::new(tri, crate::colored::Coloring(vec![1, 2, 3, 1]), 3).unwrap();
    assert!(matches!(verify_link_sum(&tri, 1, "t"), Err(Error::NotPure)));
  }

  #[test]
  fn flag_symmetry_examples() {
    assert!(flag_symmetry(&cross_polytope(3).unwrap(), "oct").passed());
    assert!(flag_symmetry(&cross_polytope(5).unwrap(), "c5").passed());
  }

  #[test]
  fn equality_examples() {
    let c4 = equality_analysis(&cross_polytope(4).unwrap());
    assert_eq!(c4.zero_set, vec![1, 2]);
    assert!(c4.holds(), "{:?}", c4.violations);
    let st = equality_analysis(&stacked_cross_polytope(4, 2, 0).unwrap());
    assert_eq!(st.zero_set, vec![2]);
    assert!(st.rank_selection_equalities.contains(&(2, true, true)));
    assert!(st.holds(), "{:?}", st.violations);
    let sd = equality_analysis(&sd3());
    assert!(sd.zero_set.is_empty());
    assert!(sd.holds());
  }
}
