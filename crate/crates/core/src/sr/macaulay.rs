//! Ideal pieces `(ΘA)_k` written out in the monomial basis of `A_k`.

use std::collections::BTreeMap;

use super::{monomial_basis_restricted, GradedBasis, LinearForm, Monomial};
use crate::complex::SimplicialComplex;
use crate::face::Face;
use crate::linalg::{FieldSpec, SparseMatrix};

/// Element of `A_k` as monomial → coefficient, reduced mod `p` over `F_p`.
pub(crate) type Element = BTreeMap<Monomial, i128>;

fn reduce(x: i128, field: FieldSpec) -> i128 {
  match field {
    FieldSpec::Prime { p } => x.rem_euclid(p as i128),
    FieldSpec::Rational => x,
  }
}

/// `form · elem`, dropping products outside `target` (non-faces, or squares
/// of squarefree vertices).
pub(crate) fn multiply(elem: &Element, form: &LinearForm, target: &GradedBasis, field: FieldSpec) -> Element {
  let mut out = Element::new();
  for (m, &c) in elem {
    for (v, &w) in form.coefficients.iter().enumerate() {
      if w == 0 {
        continue;
      }
      let prod = m.times(v);
      if target.index.contains_key(&prod) {
        let slot = out.entry(prod).or_insert(0);
        *slot = reduce(*slot + c * w as i128, field);
      }
    }
  }
  out.retain(|_, c| *c != 0);
  out
}

fn to_column(elem: &Element, basis: &GradedBasis) -> Vec<(usize, i64)> {
  elem
    .iter()
    .map(|(m, &c)| (basis.index[m], i64::try_from(c).expect("coefficient fits in i64")))
    .collect()
}

fn columns(prev: &GradedBasis, cur: &GradedBasis, forms: &[LinearForm], field: FieldSpec) -> SparseMatrix {
  let mut mat = SparseMatrix::new(cur.len());
  for form in forms {
    for m in &prev.monomials {
      let elem: Element = [(m.clone(), 1)].into_iter().collect();
      mat.push_col(to_column(&multiply(&elem, form, cur, field), cur));
    }
  }
  mat
}

/// Matrix with rows indexed by the monomial basis of `A_k` and one column
/// `θ_j · m` per form `θ_j` and monomial `m` of `A_{k-1}`. Empty for `k = 0`.
pub fn ideal_piece(complex: &SimplicialComplex, forms: &[LinearForm], k: usize, field: FieldSpec) -> SparseMatrix {
  ideal_piece_restricted(complex, forms, k, field, Face::EMPTY)
}

pub(crate) fn ideal_piece_restricted(
  complex: &SimplicialComplex,
  forms: &[LinearForm],
  k: usize,
  field: FieldSpec,
  squarefree: Face,
) -> SparseMatrix {
  let cur = monomial_basis_restricted(complex, k, squarefree);
  if k == 0 {
    return SparseMatrix::new(cur.len());
  }
  let prev = monomial_basis_restricted(complex, k - 1, squarefree);
  columns(&prev, &cur, forms, field)
}

/// `dim A_k - rank (ΘA)_k` for `k = 0..=up_to`, stopping at the first zero.
pub(crate) fn quotient_hilbert(
  complex: &SimplicialComplex,
  forms: &[LinearForm],
  up_to: usize,
  field: FieldSpec,
  squarefree: Face,
) -> Vec<i64> {
  let mut out = Vec::with_capacity(up_to + 1);
  let mut prev: Option<GradedBasis> = None;
  for k in 0..=up_to {
    if out.last() == Some(&0) {
      out.push(0);
      continue;
    }
    let cur = monomial_basis_restricted(complex, k, squarefree);
    let rank = match &prev {
      None => 0,
      Some(prev) => columns(prev, &cur, forms, field).rank(field),
    };
    out.push((cur.len() - rank) as i64);
    prev = Some(cur);
  }
  out
}

/// Columns `ω^power · m` for `m` in `from`, expanded in `to` (degree
/// `from.degree + power`), by repeated multiplication inside `A`.
pub fn omega_power_images(
  complex: &SimplicialComplex,
  omega: &LinearForm,
  from: &GradedBasis,
  power: usize,
  field: FieldSpec,
  squarefree: Face,
) -> (GradedBasis, Vec<Vec<(usize, i64)>>) {
  let steps: Vec<GradedBasis> =
    (1..=power).map(|s| monomial_basis_restricted(complex, from.degree + s, squarefree)).collect();
  let images = from
    .monomials
    .iter()
    .map(|m| {
      let mut elem: Element = [(m.clone(), 1)].into_iter().collect();
      for target in &steps {
        elem = multiply(&elem, omega, target, field);
      }
      elem
    })
    .collect::<Vec<_>>();
  let to = steps.into_iter().last().unwrap_or_else(|| from.clone());
  let cols = images.iter().map(|e| to_column(e, &to)).collect();
  (to, cols)
}
