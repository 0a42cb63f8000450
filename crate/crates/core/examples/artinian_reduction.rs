// Hilbert functions of Artinian reductions A/ΘA with colored, generic and
// mixed systems of parameters, computed by both engines.

use bglb::face::{ColorSet, Face};
use bglb::generators::cross_polytope;
use bglb::linalg::FieldSpec;
use bglb::sr::{colored_lsop, colored_squarefree_vertices, mixed_lsop, quotient_hilbert_with, verify_lsop, Engine};

pub fn run_example() -> bglb::Result<()> {
  let c = cross_polytope(4)?;
  let d = c.palette();
  let mut h = c.h_vector().0;
  h.push(0);

  // θ_i = Σ_{color(v)=i} x_v: exact over ℚ, with x_v² dropped from the basis
  let theta = colored_lsop(&c, ColorSet::full(d));
  let sqf = colored_squarefree_vertices(&c, &theta);
  assert!(verify_lsop(c.complex(), &theta, FieldSpec::Rational));
  let colored = quotient_hilbert_with(c.complex(), &theta, d + 1, FieldSpec::Rational, sqf, Engine::Macaulay);
  println!("colored over Q:        {colored:?}");
  assert_eq!(colored, h);

  let p = FieldSpec::default_prime();
  for t in [ColorSet::EMPTY, ColorSet::from_colors([1, 3])] {
    let spec = mixed_lsop(&c, t, p, 7)?;
    let sqf = colored_squarefree_vertices(&c, &spec.forms);
    let by_macaulay = quotient_hilbert_with(c.complex(), &spec.forms, d + 1, p, sqf, Engine::Macaulay);
    let by_faces = quotient_hilbert_with(c.complex(), &spec.forms, d + 1, p, Face::EMPTY, Engine::FaceReduction);
    println!("{:?} colored on {t}: {by_macaulay:?}", spec.mode);
    assert_eq!(by_macaulay, by_faces);
    assert_eq!(by_macaulay, h);
  }
  Ok(())
}

#[allow(dead_code)]
fn main() -> bglb::Result<()> { run_example() }
