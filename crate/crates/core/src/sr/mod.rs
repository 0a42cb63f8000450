//! Graded pieces of Stanley–Reisner rings `A = K[Δ]`, linear systems of
//! parameters and Artinian Hilbert functions.
//!
//! Two engines compute `dim (A/ΘA)_k`:
//!
//! * [`Engine::Macaulay`] ranks the matrix of all products `θ_j · m` in the
//!   monomial basis of `A_k`. When some forms are the colored sums `θ_i`, the
//!   basis is taken squarefree in those colors, since `x_v² ∈ ΘA` for such `v`.
//! * [`Engine::FaceReduction`] works in the span of squarefree face monomials:
//!   `(A/ΘA)_k` is the quotient of `K^{faces of size k}` by the products
//!   `φ · x_G` where `#G = k-1` and `φ ∈ span Θ` vanishes on `G`. It needs
//!   `Θ` restricted to every facet to have full rank, and works over `F_p` only.
//!
//! [`Engine::Auto`] uses face reduction over `F_p` when it applies and the
//! Macaulay engine otherwise.

mod forms;
pub mod lefschetz;
pub mod macaulay;
pub mod multigraded;
pub mod reduction;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::face::Face;
use crate::linalg::{rational_rank, FieldSpec};

pub use forms::{colored_lsop, colored_squarefree_vertices, mixed_lsop, random_forms, LinearForm, LsopMode, LsopSpec};
pub use lefschetz::{lefschetz_injective, multiplication_injective, LefschetzCertificate};
pub use macaulay::{ideal_piece, omega_power_images};
pub use multigraded::{multigraded_series_check, MultigradedReport};
pub use reduction::{restricts_to_full_rank, FaceReduction};

/// A monomial of `K[x_1..x_n]` as the sorted multiset of its (0-based) variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Monomial(pub Vec<u8>);

impl Monomial {
  pub fn one() -> Self { Monomial(Vec::new()) }

  pub fn degree(&self) -> usize { self.0.len() }

  pub fn support(&self) -> Face { Face::from_indices(self.0.iter().map(|&v| v as usize)) }

  /// Exponent of vertex `v`.
  pub fn exponent(&self, v: usize) -> usize { self.0.iter().filter(|&&u| u as usize == v).count() }

  /// `x_v · self`.
  pub fn times(&self, v: usize) -> Monomial {
    let mut out = Vec::with_capacity(self.0.len() + 1);
    let pos = self.0.partition_point(|&u| (u as usize) <= v);
    out.extend_from_slice(&self.0[..pos]);
    out.push(v as u8);
    out.extend_from_slice(&self.0[pos..]);
    Monomial(out)
  }

  /// Exponent vector of length `n`.
  pub fn exponents(&self, n: usize) -> Vec<usize> {
    let mut e = vec![0; n];
    for &v in &self.0 {
      e[v as usize] += 1;
    }
    e
  }
}

/// Basis of `A_k` (possibly restricted to monomials squarefree in some
/// vertices), ordered graded-lexicographically with `x_1 > x_2 > ...`.
#[derive(Clone, Debug)]
pub struct GradedBasis {
  pub degree: usize,
  pub monomials: Vec<Monomial>,
  pub index: HashMap<Monomial, usize>,
}

impl GradedBasis {
  pub fn len(&self) -> usize { self.monomials.len() }

  pub fn is_empty(&self) -> bool { self.monomials.is_empty() }

  pub fn position(&self, m: &Monomial) -> Option<usize> { self.index.get(m).copied() }
}

/// All degree-`k` monomials whose support is a face.
pub fn monomial_basis(complex: &SimplicialComplex, k: usize) -> GradedBasis {
  monomial_basis_restricted(complex, k, Face::EMPTY)
}

/// Degree-`k` monomials with face support in which every vertex of
/// `squarefree` has exponent at most one.
pub fn monomial_basis_restricted(complex: &SimplicialComplex, k: usize, squarefree: Face) -> GradedBasis {
  let mut monomials = Vec::new();
  for face in complex.faces() {
    let s = face.len();
    if s > k || (s == 0 && k > 0) {
      continue;
    }
    let verts: Vec<usize> = face.to_vec();
    let mut exps = vec![1usize; s];
    distribute(&verts, squarefree, &mut exps, 0, k - s, &mut monomials);
  }
  monomials.sort();
  let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
  GradedBasis { degree: k, monomials, index }
}

fn distribute(verts: &[usize], sqf: Face, exps: &mut [usize], at: usize, left: usize, out: &mut Vec<Monomial>) {
  if at == verts.len() {
    if left == 0 {
      let mut m = Vec::new();
      for (v, &e) in verts.iter().zip(exps.iter()) {
        m.extend(std::iter::repeat_n(*v as u8, e));
      }
      out.push(Monomial(m));
    }
    return;
  }
  let cap = if sqf.contains(verts[at]) { 0 } else { left };
  for extra in 0..=cap {
    exps[at] = 1 + extra;
    distribute(verts, sqf, exps, at + 1, left - extra, out);
  }
  exps[at] = 1;
}

/// Choice of Hilbert-function engine. `Auto` uses face reduction over `F_p`
/// whenever the forms restrict to full rank on every facet, and the Macaulay
/// engine otherwise.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Engine {
  #[default]
  Auto,
  Macaulay,
  FaceReduction,
}

/// `dim (A/ΘA)_k` for `k = 0..=up_to`.
pub fn quotient_hilbert(complex: &SimplicialComplex, forms: &[LinearForm], up_to: usize, field: FieldSpec) -> Vec<i64> {
  quotient_hilbert_with(complex, forms, up_to, field, Face::EMPTY, Engine::Auto)
}

/// [`quotient_hilbert`] with an explicit engine and squarefree vertex set
/// (vertices `v` with `x_v² ∈ ΘA`, see [`colored_squarefree_vertices`]).
///
/// The face-reduction engine only applies over `F_p` when `Θ` restricts to
/// full rank on every facet; otherwise the Macaulay engine is used.
pub fn quotient_hilbert_with(
  complex: &SimplicialComplex,
  forms: &[LinearForm],
  up_to: usize,
  field: FieldSpec,
  squarefree: Face,
  engine: Engine,
) -> Vec<i64> {
  if let Some(fr) = face_reduction(complex, forms, field, engine) {
    return (0..=up_to).map(|k| fr.quotient_dim(k) as i64).collect();
  }
  macaulay::quotient_hilbert(complex, forms, up_to, field, squarefree)
}

pub(crate) fn face_reduction<'a>(
  complex: &'a SimplicialComplex,
  forms: &[LinearForm],
  field: FieldSpec,
  engine: Engine,
) -> Option<FaceReduction<'a>> {
  match (engine, field) {
    (Engine::Macaulay, _) | (_, FieldSpec::Rational) => None,
    (_, FieldSpec::Prime { p }) => FaceReduction::new(complex, forms, p),
  }
}

/// True iff `dim A/ΘA < ∞`, decided by the facet criterion: the forms
/// restricted to every facet `F` have rank `#F`.
pub fn verify_lsop(complex: &SimplicialComplex, forms: &[LinearForm], field: FieldSpec) -> bool {
  if forms.len() < complex.rank() {
    return false;
  }
  match field {
    FieldSpec::Prime { p } => restricts_to_full_rank(complex, forms, p),
    FieldSpec::Rational => complex.facets().iter().all(|facet| {
      let cols: Vec<Vec<(usize, i64)>> =
        facet.iter().map(|v| forms.iter().enumerate().map(|(j, f)| (j, f.coefficients[v])).collect()).collect();
      rational_rank(forms.len(), cols.iter().map(|c| c.as_slice())) == facet.len()
    }),
  }
}

/// [`verify_lsop`] decided instead by computing the Hilbert function up to
/// degree `dim Δ + 2` and looking for a zero.
pub fn lsop_by_hilbert(complex: &SimplicialComplex, forms: &[LinearForm], field: FieldSpec) -> bool {
  if forms.len() < complex.rank() {
    return false;
  }
  let up_to = (complex.dim() + 2) as usize;
  macaulay::quotient_hilbert(complex, forms, up_to, field, Face::EMPTY).contains(&0)
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::generators::cross_polytope;

  fn square() -> SimplicialComplex {
    SimplicialComplex::from_facets(&[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]], 4).unwrap()
  }

  #[test]
  fn basis_sizes() {
    let oct = cross_polytope(3).unwrap();
    assert_eq!(monomial_basis(oct.complex(), 2).len(), 18);
    assert_eq!(monomial_basis(oct.complex(), 0).monomials, vec![Monomial::one()]);
    // x_v^3 for 4 vertices, x_u^2 x_v and x_u x_v^2 for 4 edges
    assert_eq!(monomial_basis(&square(), 3).len(), 12);
    // squarefree everywhere leaves exactly the face monomials
    assert_eq!(monomial_basis_restricted(oct.complex(), 2, Face::from_indices(0..6)).len(), 12);
  }

  #[test]
  fn basis_order_is_graded_lex() {
    let b = monomial_basis(&square(), 2);
    // x1^2 > x1x2 > x1x4 > x2^2 > ...
    assert_eq!(b.monomials[0], Monomial(vec![0, 0]));
    assert_eq!(b.monomials[1], Monomial(vec![0, 1]));
    assert_eq!(b.monomials[2], Monomial(vec![0, 3]));
    assert_eq!(b.monomials[3], Monomial(vec![1, 1]));
  }

  #[test]
  fn monomial_helpers() {
    let m = Monomial(vec![0, 2]).times(1).times(2);
    assert_eq!(m, Monomial(vec![0, 1, 2, 2]));
    assert_eq!(m.exponent(2), 2);
    assert_eq!(m.exponents(4), vec![1, 1, 2, 0]);
    assert_eq!(m.support(), Face::from_indices([0, 1, 2]));
  }
}
