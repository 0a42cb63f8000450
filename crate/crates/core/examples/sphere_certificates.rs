// Gorenstein* and Cohen–Macaulay certificates from link homology.

use bglb::generators::cross_polytope;
use bglb::homology::{is_cohen_macaulay, is_gorenstein_star, reduced_betti};
use bglb::linalg::FieldSpec;
use bglb::SimplicialComplex;

pub fn run_example() -> bglb::Result<()> {
  let oct = cross_polytope(3)?;
  let cert = is_gorenstein_star(oct.complex(), FieldSpec::Rational);
  println!("octahedron: Gorenstein* = {} ({} links checked)", cert.holds, cert.faces_checked);
  assert!(cert.holds);

  // two triangles sharing a vertex fail at the shared vertex
  let bowtie = SimplicialComplex::from_facets(&[vec![1, 2, 3], vec![3, 4, 5]], 5)?;
  let cm = is_cohen_macaulay(&bowtie, FieldSpec::Rational);
  let w = cm.witness.as_ref().expect("a failing certificate names a face");
  println!("bowtie: CM = {}, witness face {:?} with link Betti {:?}", cm.holds, w.face, w.link_betti);
  assert!(!cm.holds);
  assert_eq!(w.face, vec![3]);

  // every vertex link of the torus is a circle, but b̃_1 ≠ 0
  let torus = torus_7();
  let b = reduced_betti(&torus, FieldSpec::default_prime());
  println!("7-vertex torus: reduced Betti {:?}", b.reduced);
  assert_eq!(b.reduced, vec![0, 0, 2, 1]);
  assert!(!is_gorenstein_star(&torus, FieldSpec::Rational).holds);
  Ok(())
}

fn torus_7() -> SimplicialComplex {
  let mut facets = Vec::new();
  for i in 0..7 {
    facets.push(vec![i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1]);
    facets.push(vec![i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1]);
  }
  SimplicialComplex::from_facets(&facets, 7).expect("valid facets")
}

#[allow(dead_code)]
fn main() -> bglb::Result<()> { run_example() }
