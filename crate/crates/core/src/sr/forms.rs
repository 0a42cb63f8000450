use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::colored::ColoredComplex;
use crate::error::{Error, Result};
use crate::face::{ColorSet, Face};
use crate::linalg::FieldSpec;
use crate::util::mix_seed;

/// Degree-one form `Σ c_v x_v`. Over `F_p` coefficients are residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearForm {
  pub coefficients: Vec<i64>,
  /// Colors whose vertices may carry nonzero coefficients.
  pub color_support: ColorSet,
}

impl LinearForm {
  pub fn coefficient(&self, v: usize) -> i64 { self.coefficients[v] }

  /// Vertices with nonzero coefficient.
  pub fn support(&self) -> Face { Face::from_indices((0..self.coefficients.len()).filter(|&v| self.coefficients[v] != 0)) }

  /// Checks that nonzero coefficients sit on vertices of the declared colors.
  pub fn check_support(&self, complex: &ColoredComplex) -> Result<()> {
    if self.coefficients.len() != complex.complex().vertex_count() {
      return Err(Error::LengthMismatch { got: self.coefficients.len(), expected: complex.complex().vertex_count() });
    }
    let allowed = complex.vertices_with_colors(self.color_support);
    if self.support().is_subset(allowed) { Ok(()) } else { Err(Error::FormSupport) }
  }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LsopMode {
  Colored,
  Generic,
  Mixed,
}

/// Candidate linear system of parameters with its provenance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LsopSpec {
  pub forms: Vec<LinearForm>,
  pub mode: LsopMode,
  pub rng_seed: Option<u64>,
}

/// `θ_i = Σ_{κ(v)=i} x_v` for each color `i` in `colors`, in increasing order.
pub fn colored_lsop(complex: &ColoredComplex, colors: ColorSet) -> Vec<LinearForm> {
  let n = complex.complex().vertex_count();
  colors
    .indices()
    .map(|c| LinearForm {
      coefficients: (0..n).map(|v| i64::from(complex.color_index(v) == c)).collect(),
      color_support: ColorSet(1 << c),
    })
    .collect()
}

/// Vertices `v` for which some form is (a nonzero multiple of) the colored sum
/// `θ_{κ(v)}`; for these `x_v² ∈ ΘA`.
pub fn colored_squarefree_vertices(complex: &ColoredComplex, forms: &[LinearForm]) -> Face {
  let mut out = Face::EMPTY;
  for c in 0..complex.palette() {
    let class = complex.vertices_with_colors(ColorSet(1 << c));
    if class.is_empty() {
      continue;
    }
    let is_colored_sum = |f: &LinearForm| {
      let first = f.coefficients[class.first().expect("nonempty")];
      first != 0 && f.support() == class && class.iter().all(|v| f.coefficients[v] == first)
    };
    if forms.iter().any(is_colored_sum) {
      out = out.union(class);
    }
  }
  out
}

/// `count` forms with independent uniform nonzero coefficients on the
/// vertices colored by `allowed`, zero elsewhere. Over `ℚ` coefficients are
/// drawn from `±[1, 2^15]`.
pub fn random_forms(
  complex: &ColoredComplex,
  allowed: ColorSet,
  count: usize,
  field: FieldSpec,
  seed: u64,
) -> Result<Vec<LinearForm>> {
  if count == 0 {
    return Ok(Vec::new());
  }
  let verts = complex.vertices_with_colors(allowed);
  if verts.is_empty() {
    return Err(Error::NoAllowedVertices(count));
  }
  let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, 0x5eed_f0e5));
  let n = complex.complex().vertex_count();
  Ok(
    (0..count)
      .map(|_| {
        let coefficients = (0..n)
          .map(|v| {
            if !verts.contains(v) {
              return 0;
            }
            match field {
              FieldSpec::Prime { p } => rng.gen_range(1..p) as i64,
              FieldSpec::Rational => {
                let x = rng.gen_range(1..=1i64 << 15);
                if rng.gen_bool(0.5) { x } else { -x }
              }
            }
          })
          .collect();
        LinearForm { coefficients, color_support: allowed }
      })
      .collect(),
  )
}

/// Colored sums for the colors in `colored` followed by generic forms
/// supported on the remaining colors, one per remaining color.
pub fn mixed_lsop(complex: &ColoredComplex, colored: ColorSet, field: FieldSpec, seed: u64) -> Result<LsopSpec> {
  let rest = colored.complement_in(complex.palette());
  let mut forms = colored_lsop(complex, colored);
  forms.extend(random_forms(complex, rest, rest.len(), field, seed)?);
  let mode = if rest.is_empty() {
    LsopMode::Colored
  } else if colored.is_empty() {
    LsopMode::Generic
  } else {
    LsopMode::Mixed
  };
  Ok(LsopSpec { forms, mode, rng_seed: (!rest.is_empty()).then_some(seed) })
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::generators::cross_polytope;

  #[test]
  fn colored_forms_of_the_square() {
    let sq = cross_polytope(2).unwrap();
    // vertices 1,2 have color 1 and 3,4 color 2 in the generator's numbering
    let forms = colored_lsop(&sq, ColorSet::full(2));
    assert_eq!(forms[0].coefficients, vec![1, 1, 0, 0]);
    assert_eq!(forms[1].coefficients, vec![0, 0, 1, 1]);
    assert!(colored_lsop(&sq, ColorSet::EMPTY).is_empty());
    assert_eq!(colored_squarefree_vertices(&sq, &forms[..1]), Face::from_indices([0, 1]));
  }

  #[test]
  fn random_forms_are_reproducible_and_supported() {
    let oct = cross_polytope(3).unwrap();
    let field = FieldSpec::default_prime();
    let allowed = ColorSet::from_colors([1, 2]);
    let a = random_forms(&oct, allowed, 2, field, 9).unwrap();
    assert_eq!(a, random_forms(&oct, allowed, 2, field, 9).unwrap());
    assert_ne!(a, random_forms(&oct, allowed, 2, field, 10).unwrap());
    for f in &a {
      f.check_support(&oct).unwrap();
      assert_eq!(f.support(), Face::from_indices(0..4));
    }
    assert!(random_forms(&oct, allowed, 0, field, 1).unwrap().is_empty());
    let empty = ColorSet::EMPTY;
    assert!(matches!(random_forms(&oct, empty, 1, field, 1), Err(Error::NoAllowedVertices(1))));
  }
}
