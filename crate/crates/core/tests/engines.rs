mod support;

use bglb::face::Face;
use bglb::linalg::{FieldSpec, DEFAULT_PRIME};
use bglb::face::ColorSet;
use bglb::sr::{
  lsop_by_hilbert, multiplication_injective, quotient_hilbert_with, restricts_to_full_rank, verify_lsop, Engine, LinearForm,
};
use rand::Rng;

#[test]
fn face_reduction_matches_macaulay_on_random_complexes() {
  let field = FieldSpec::default_prime();
  let mut compared = 0;
  for seed in 0..150u64 {
    let mut rng = support::rng(seed);
    let c = support::random_complex(&mut rng, 7, 2 + (seed % 5) as usize, 4);
    let forms = support::generic_forms(&mut rng, c.vertex_count(), c.rank(), DEFAULT_PRIME);
    let omega = support::generic_forms(&mut rng, c.vertex_count(), 1, DEFAULT_PRIME).remove(0);
    if !restricts_to_full_rank(&c, &forms, DEFAULT_PRIME) {
      continue;
    }
    compared += 1;
    let up_to = c.rank() + 1;
    let mac = quotient_hilbert_with(&c, &forms, up_to, field, Face::EMPTY, Engine::Macaulay);
    let fr = quotient_hilbert_with(&c, &forms, up_to, field, Face::EMPTY, Engine::FaceReduction);
    assert_eq!(mac, fr, "seed {seed}: {:?}", c.facet_lists());
    assert!(verify_lsop(&c, &forms, field));
    for from in 0..c.rank() {
      for power in 1..=c.rank() - from {
        let a = multiplication_injective(&c, &forms, &omega, from, power, field, Face::EMPTY, Engine::Macaulay);
        let b = multiplication_injective(&c, &forms, &omega, from, power, field, Face::EMPTY, Engine::FaceReduction);
        assert_eq!(a.injective, b.injective, "seed {seed} from {from} power {power}");
        assert_eq!(a.image_dim(), b.image_dim(), "seed {seed} from {from} power {power}");
        assert_eq!(a.source_dim(), b.source_dim());
      }
    }
  }
  assert!(compared > 100, "only {compared} instances compared");
}

#[test]
fn facet_criterion_matches_hilbert_function() {
  let (mut yes, mut no) = (0, 0);
  for seed in 0..200u64 {
    let mut rng = support::rng(1000 + seed);
    let c = support::random_complex(&mut rng, 6, 2 + (seed % 4) as usize, 3);
    // sparse small coefficients make degenerate systems common
    let forms: Vec<LinearForm> = (0..c.rank() + (seed % 2) as usize)
      .map(|_| LinearForm {
        coefficients: (0..c.vertex_count()).map(|_| if rng.gen_bool(0.4) { 0 } else { rng.gen_range(-2..=2) }).collect(),
        color_support: ColorSet::EMPTY,
      })
      .collect();
    for field in [FieldSpec::Rational, FieldSpec::prime(3).unwrap(), FieldSpec::default_prime()] {
      let fast = verify_lsop(&c, &forms, field);
      assert_eq!(fast, lsop_by_hilbert(&c, &forms, field), "seed {seed} {field:?} {:?}", c.facet_lists());
      if fast { yes += 1 } else { no += 1 }
    }
  }
  assert!(yes > 50 && no > 50, "{yes} / {no}");
}
