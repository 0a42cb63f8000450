// Balanced g-numbers, the link-sum identity and the equality analysis.

use bglb::complex::HVector;
use bglb::generators::{barycentric_subdivision, simplex_boundary, stacked_cross_polytope};
use bglb::inequalities::{balanced_g, equality_analysis, verify_bglb_h, verify_lemma33_all, verify_link_sum_all};
use bglb::report::Status;

pub fn run_example() -> bglb::Result<()> {
  let stacked = stacked_cross_polytope(5, 3, 0)?;
  let g = balanced_g(&stacked.h_vector(), 5)?;
  println!("stacked 5x3: h = {:?}, g = {:?}", stacked.h_vector().0, g.entries);
  for r in &g.ratio {
    println!("  i={}: {} ≤ {} ({})", r.i, r.lhs, r.rhs, r.holds);
  }
  assert_eq!(g.zero_set(), vec![2]);

  let eq = equality_analysis(&stacked);
  println!("zero set {:?}, rank-selection equalities {:?}", eq.zero_set, eq.rank_selection_equalities);
  assert!(eq.holds());

  let sd = barycentric_subdivision(simplex_boundary(3)?.complex())?;
  let sums = verify_link_sum_all(&sd, "sd(simplex-3)")?;
  let averaging = verify_lemma33_all(&sd, "sd(simplex-3)");
  assert!(sums.iter().chain(&averaging).all(|r| r.passed()));
  println!("sd(simplex-3): {} link-sum and {} averaging identities hold", sums.len(), averaging.len());

  // an h-vector no balanced sphere has
  let bad = verify_bglb_h(&HVector(vec![1, 2, 1, 1]), 4, "corrupted");
  println!("corrupted h: {:?} {}", bad.status, bad.witness.as_ref().map(|w| w.to_string()).unwrap_or_default());
  assert_eq!(bad.status, Status::Fail);
  Ok(())
}

#[allow(dead_code)]
fn main() -> bglb::Result<()> { run_example() }
