//! Truncated `ℤ^d`-graded Hilbert series of `K[Δ]` for a balanced `Δ`,
//! compared against `Σ_S h_S t^S / Π (1 - t_i)`.

use std::collections::HashMap;

use serde::Serialize;

use crate::colored::ColoredComplex;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultigradedReport {
  pub truncation: usize,
  pub degrees_checked: usize,
  pub holds: bool,
  pub first_mismatch: Option<Mismatch>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
  pub degree: Vec<usize>,
  pub ring_dim: u64,
  pub series_coefficient: i64,
}

/// Counts monomials of `K[Δ]` by multidegree for all `a` with `Σ a_i ≤ truncation`.
pub fn multigraded_dims(complex: &ColoredComplex, truncation: usize) -> HashMap<Vec<usize>, u64> {
  let d = complex.palette();
  let mut dims: HashMap<Vec<usize>, u64> = HashMap::new();
  for face in complex.complex().faces() {
    let verts = face.to_vec();
    let mut exps = vec![0usize; verts.len()];
    enumerate(complex, &verts, &mut exps, 0, truncation, d, &mut dims);
  }
  dims
}

fn enumerate(
  complex: &ColoredComplex,
  verts: &[usize],
  exps: &mut [usize],
  at: usize,
  left: usize,
  d: usize,
  dims: &mut HashMap<Vec<usize>, u64>,
) {
  if at == verts.len() {
    let mut a = vec![0usize; d];
    for (v, &e) in verts.iter().zip(exps.iter()) {
      a[complex.color_index(*v)] += e;
    }
    *dims.entry(a).or_insert(0) += 1;
    return;
  }
  for e in 1..=left {
    exps[at] = e;
    enumerate(complex, verts, exps, at + 1, left - e, d, dims);
  }
}

fn compositions(d: usize, max_total: usize) -> Vec<Vec<usize>> {
  let mut out = Vec::new();
  let mut cur = vec![0usize; d];
  fn rec(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if i == cur.len() {
      out.push(cur.clone());
      return;
    }
    for a in 0..=left {
      cur[i] = a;
      rec(i + 1, left - a, cur, out);
    }
    cur[i] = 0;
  }
  rec(0, max_total, &mut cur, &mut out);
  out
}

/// Compares `dim K[Δ]_a` with the series coefficient `Σ_{S ⊆ supp a} h_S`
/// for every `a ∈ ℕ^d` with `Σ a_i ≤ truncation`.
pub fn multigraded_series_check(complex: &ColoredComplex, truncation: usize) -> MultigradedReport {
  let d = complex.palette();
  let dims = multigraded_dims(complex, truncation);
  let (_, h) = complex.flag_vectors();
  let mut first_mismatch = None;
  let degrees = compositions(d, truncation);
  for a in &degrees {
    let supp = crate::face::ColorSet(a.iter().enumerate().filter(|e| *e.1 > 0).fold(0u32, |acc, (i, _)| acc | 1 << i));
    let series: i64 = supp.subsets().map(|s| h.get(s)).sum();
    let ring = dims.get(a).copied().unwrap_or(0);
    if ring as i64 != series {
      first_mismatch = Some(Mismatch { degree: a.clone(), ring_dim: ring, series_coefficient: series });
      break;
    }
  }
  MultigradedReport { truncation, degrees_checked: degrees.len(), holds: first_mismatch.is_none(), first_mismatch }
}
