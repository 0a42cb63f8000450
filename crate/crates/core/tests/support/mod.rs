//! Brute-force oracles and random inputs shared by the integration tests.
#![allow(dead_code)]

pub mod corpus;
pub mod oracle;

use bglb::complex::SimplicialComplex;
use bglb::face::ColorSet;
use bglb::sr::LinearForm;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng { ChaCha8Rng::seed_from_u64(seed) }

/// Random complex on at most `n` vertices: `facets` random nonempty subsets of
/// size at most `max_size`, uncovered vertices dropped.
pub fn random_complex(rng: &mut ChaCha8Rng, n: usize, facets: usize, max_size: usize) -> SimplicialComplex {
  let lists: Vec<Vec<usize>> = (0..facets)
    .map(|_| {
      let size = rng.gen_range(1..=max_size.min(n));
      let mut f: Vec<usize> = rand::seq::index::sample(rng, n, size).into_iter().map(|v| v + 1).collect();
      f.sort_unstable();
      f
    })
    .collect();
  SimplicialComplex::from_facets_shrinking(&lists, n).unwrap()
}

/// `count` forms with uniform coefficients in `F_p` on every vertex.
pub fn generic_forms(rng: &mut ChaCha8Rng, n: usize, count: usize, p: u64) -> Vec<LinearForm> {
  (0..count)
    .map(|_| LinearForm {
      coefficients: (0..n).map(|_| rng.gen_range(1..p) as i64).collect(),
      color_support: ColorSet::EMPTY,
    })
    .collect()
}
