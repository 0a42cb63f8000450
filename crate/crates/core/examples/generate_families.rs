// Builds each generator family and prints f-, h- and balanced g-vectors.

use bglb::generators::{self, Family, FamilySpec};
use bglb::inequalities::balanced_g;

pub fn run_example() -> bglb::Result<()> {
  let specs = [
    FamilySpec::cross(3),
    FamilySpec::simplex(3),
    FamilySpec::stacked_cross(4, 2, 0),
    FamilySpec::barycentric(FamilySpec::simplex(3)),
    FamilySpec::suspension(FamilySpec::cross(2)),
  ];
  for spec in &specs {
    let c = generators::build(spec)?;
    let h = c.complex().h_vector();
    // the boundary of a simplex is the one family that is not balanced
    assert_eq!(c.is_balanced(), !matches!(spec.family, Family::Simplex));
    let g = if c.is_balanced() { balanced_g(&h, c.palette())?.entries } else { Vec::new() };
    println!(
      "{:<16} n={:<3} f={:?} h={:?} g={:?}",
      spec.name(),
      c.complex().vertex_count(),
      c.complex().f_vector().0,
      h.0,
      g
    );
  }

  // h_i = m·C(d,i) in the interior for stacked cross-polytopes
  let stacked = generators::stacked_cross_polytope(4, 2, 0)?;
  assert_eq!(stacked.h_vector().0, vec![1, 8, 12, 8, 1]);
  assert_eq!(generators::cross_polytope(3)?.h_vector().0, vec![1, 3, 3, 1]);
  Ok(())
}

#[allow(dead_code)]
fn main() -> bglb::Result<()> { run_example() }
