//! Injectivity of multiplication maps `×ω^s : (A/ΘA)_i → (A/ΘA)_{i+s}`,
//! decided by the rank identity
//! `rank[ω^s B_i | I_{i+s}] - rank I_{i+s} = dim A_i - rank I_i`.

use serde::Serialize;

use super::macaulay::{ideal_piece_restricted, omega_power_images};
use super::reduction::FaceReduction;
use super::{face_reduction, monomial_basis_restricted, Engine, LinearForm};
use crate::colored::ColoredComplex;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{ColorSet, Face};
use crate::linalg::{rational_rank, FieldSpec, Fp, ModEchelon};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LefschetzCertificate {
  pub from_degree: usize,
  pub to_degree: usize,
  /// `[r1, r2, r3, r4]` as in the rank identity above.
  pub ranks: [usize; 4],
  pub injective: bool,
  pub field_p: Option<u64>,
  pub engine: Engine,
}

impl LefschetzCertificate {
  fn from_ranks(from: usize, to: usize, ranks: [usize; 4], field: FieldSpec, engine: Engine) -> Self {
    let [r1, r2, r3, r4] = ranks;
    LefschetzCertificate {
      from_degree: from,
      to_degree: to,
      ranks,
      injective: r1 - r2 == r3 - r4,
      field_p: field.modulus(),
      engine,
    }
  }

  /// `dim (A/ΘA)_from`.
  pub fn source_dim(&self) -> usize { self.ranks[2] - self.ranks[3] }

  /// Rank of the multiplication map.
  pub fn image_dim(&self) -> usize { self.ranks[0] - self.ranks[1] }
}

/// `×ω^{t-2i} : (A_T/Θ_T A_T)_i → (A_T/Θ_T A_T)_{t-i}` for a colored complex
/// with palette `t` and `t` forms.
pub fn lefschetz_injective(
  complex: &ColoredComplex,
  forms: &[LinearForm],
  omega: &LinearForm,
  i: usize,
  field: FieldSpec,
  engine: Engine,
) -> Result<LefschetzCertificate> {
  let t = complex.palette();
  if 2 * i > t {
    return Err(Error::DegreeOutOfRange(i as i64));
  }
  if forms.len() != t {
    return Err(Error::LengthMismatch { got: forms.len(), expected: t });
  }
  let palette = ColorSet::full(t);
  for f in forms.iter().chain(std::iter::once(omega)) {
    if !f.color_support.is_subset(palette) {
      return Err(Error::FormSupport);
    }
    f.check_support(complex)?;
  }
  let sqf = super::colored_squarefree_vertices(complex, forms);
  Ok(multiplication_injective(complex.complex(), forms, omega, i, t - 2 * i, field, sqf, engine))
}

/// Certificate for `×ω^power` out of degree `from`.
#[allow(clippy::too_many_arguments)]
pub fn multiplication_injective(
  complex: &SimplicialComplex,
  forms: &[LinearForm],
  omega: &LinearForm,
  from: usize,
  power: usize,
  field: FieldSpec,
  squarefree: Face,
  engine: Engine,
) -> LefschetzCertificate {
  if let Some(fr) = face_reduction(complex, forms, field, engine) {
    return by_face_reduction(&fr, omega, from, power, field);
  }
  by_macaulay(complex, forms, omega, from, power, field, squarefree)
}

fn by_macaulay(
  complex: &SimplicialComplex,
  forms: &[LinearForm],
  omega: &LinearForm,
  from: usize,
  power: usize,
  field: FieldSpec,
  squarefree: Face,
) -> LefschetzCertificate {
  let to = from + power;
  let source = monomial_basis_restricted(complex, from, squarefree);
  let (_, images) = omega_power_images(complex, omega, &source, power, field, squarefree);
  let i_to = ideal_piece_restricted(complex, forms, to, field, squarefree);
  let i_from = ideal_piece_restricted(complex, forms, from, field, squarefree);
  let r3 = source.len();
  let r4 = i_from.rank(field);
  let (r1, r2) = match field {
    FieldSpec::Prime { p } => {
      let fp = Fp::new(p);
      let mut ech = ModEchelon::new(p, i_to.nrows);
      for col in &i_to.cols {
        if ech.is_full() {
          break;
        }
        ech.insert(col.iter().map(|&(r, v)| (r, fp.from_i64(v))));
      }
      let r2 = ech.rank();
      for col in &images {
        if ech.is_full() {
          break;
        }
        ech.insert(col.iter().map(|&(r, v)| (r, fp.from_i64(v))));
      }
      (ech.rank(), r2)
    }
    FieldSpec::Rational => {
      let r2 = rational_rank(i_to.nrows, i_to.cols.iter().map(|c| c.as_slice()));
      let r1 = rational_rank(i_to.nrows, i_to.cols.iter().chain(images.iter()).map(|c| c.as_slice()));
      (r1, r2)
    }
  };
  LefschetzCertificate::from_ranks(from, to, [r1, r2, r3, r4], field, Engine::Macaulay)
}

fn by_face_reduction(
  fr: &FaceReduction<'_>,
  omega: &LinearForm,
  from: usize,
  power: usize,
  field: FieldSpec,
) -> LefschetzCertificate {
  let to = from + power;
  let omega = fr.reduce_form(omega);
  let r3 = fr.coordinates(from).len();
  let r4 = fr.relations(from).rank();
  let mut ech = fr.relations(to);
  let r2 = ech.rank();
  for idx in 0..r3 {
    if ech.is_full() {
      break;
    }
    let mut v = vec![(idx, 1u64)];
    for step in 0..power {
      v = fr.times_omega(&omega, &v, from + step);
    }
    ech.insert(v);
  }
  LefschetzCertificate::from_ranks(from, to, [ech.rank(), r2, r3, r4], field, Engine::FaceReduction)
}
