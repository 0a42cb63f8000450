//! Reduced simplicial homology over a field, Reisner's Cohen–Macaulay test
//! and Gorenstein* certificates.

use std::collections::HashMap;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::linalg::{rational_rank, FieldSpec, Fp, ModEchelon, SparseMatrix};

/// Reduced Betti numbers `b̃_{-1}, ..., b̃_{dim}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
  pub reduced: Vec<i64>,
}

impl BettiTable {
  /// `b̃_k`, zero outside the stored range.
  pub fn get(&self, k: isize) -> i64 {
    if k < -1 {
      return 0;
    }
    self.reduced.get((k + 1) as usize).copied().unwrap_or(0)
  }

  /// Top index stored, i.e. the dimension of the complex.
  pub fn dim(&self) -> isize { self.reduced.len() as isize - 2 }

  /// Homology of a `k`-sphere: a single one in degree `k`.
  pub fn is_sphere_of_dim(&self, k: isize) -> bool {
    (-1..=self.dim().max(k)).all(|j| self.get(j) == i64::from(j == k))
  }

  /// Vanishing below the top dimension.
  pub fn is_acyclic_below_top(&self) -> bool { (-1..self.dim()).all(|j| self.get(j) == 0) }
}

/// Matrix of `∂_k` from `k`-faces (columns) to `(k-1)`-faces (rows), both in
/// sorted face order; `∂_0` is the augmentation onto `∅`.
pub fn boundary_matrix(complex: &SimplicialComplex, k: isize) -> Result<SparseMatrix> {
  if k < 0 || k > complex.dim() + 1 {
    return Err(Error::DegreeOutOfRange(k as i64));
  }
  let rows = complex.faces_of_size(k as usize);
  let cols = complex.faces_of_size(k as usize + 1);
  let mut m = SparseMatrix::new(rows.len());
  for f in cols {
    let col = f
      .iter()
      .enumerate()
      .map(|(pos, v)| {
        let r = rows.binary_search(&f.without(v)).expect("boundary face is a face");
        (r, if pos % 2 == 0 { 1 } else { -1 })
      })
      .collect();
    m.push_col(col);
  }
  Ok(m)
}

fn boundary_rank(complex: &SimplicialComplex, k: isize, field: FieldSpec) -> usize {
  let m = boundary_matrix(complex, k).expect("k in range");
  match field {
    FieldSpec::Rational => rational_rank(m.nrows, m.cols.iter().map(|c| c.as_slice())),
    FieldSpec::Prime { p } => {
      let fp = Fp::new(p);
      let mut ech = ModEchelon::new(p, m.nrows);
      for col in &m.cols {
        if ech.is_full() {
          break;
        }
        ech.insert(col.iter().map(|&(r, v)| (r, fp.from_i64(v))));
      }
      ech.rank()
    }
  }
}

/// `b̃_k = dim ker ∂_k − rank ∂_{k+1}` for `k = -1..=dim`.
pub fn reduced_betti(complex: &SimplicialComplex, field: FieldSpec) -> BettiTable {
  let dim = complex.dim();
  // rank ∂_k for k = 0..=dim; ∂_{-1} and ∂_{dim+1} vanish
  let ranks: Vec<usize> = (0..=dim).map(|k| boundary_rank(complex, k, field)).collect();
  let rank_at = |k: isize| if k < 0 || k > dim { 0 } else { ranks[k as usize] };
  let reduced = (-1..=dim)
    .map(|k| {
      let fk = complex.faces_of_size((k + 1) as usize).len();
      (fk - rank_at(k) - rank_at(k + 1)) as i64
    })
    .collect();
  BettiTable { reduced }
}

/// Outcome of a link-homology test. On failure `witness` is the first failing
/// face (in original labels) together with its link's Betti numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
  pub holds: bool,
  pub field: FieldSpec,
  pub faces_checked: usize,
  pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
  pub face: Vec<usize>,
  pub link_betti: Vec<i64>,
}

/// Per-complex memo of link homology, shared between certificates.
pub struct LinkHomology<'a> {
  complex: &'a SimplicialComplex,
  field: FieldSpec,
  memo: Mutex<HashMap<Face, BettiTable>>,
}

impl<'a> LinkHomology<'a> {
  pub fn new(complex: &'a SimplicialComplex, field: FieldSpec) -> Self {
    LinkHomology { complex, field, memo: Mutex::new(HashMap::new()) }
  }

  pub fn link_betti(&self, face: Face) -> BettiTable {
    if let Some(b) = self.memo.lock().expect("memo lock").get(&face) {
      return b.clone();
    }
    let lk = self.complex.link(face).expect("face of the complex");
    let b = reduced_betti(&lk, self.field);
    self.memo.lock().expect("memo lock").entry(face).or_insert(b).clone()
  }

  fn certify(&self, ok: impl Fn(Face, &BettiTable) -> bool + Sync) -> Certificate {
    let faces = self.complex.faces();
    let failure = faces.par_iter().find_first(|&&f| !ok(f, &self.link_betti(f)));
    Certificate {
      holds: failure.is_none(),
      field: self.field,
      faces_checked: faces.len(),
      witness: failure.map(|&f| Witness { face: self.complex.face_labels(f), link_betti: self.link_betti(f).reduced }),
    }
  }

  /// Every link `lk(F)` has the homology of a `(d-1-#F)`-sphere.
  pub fn gorenstein_star(&self) -> Certificate {
    let d = self.complex.rank() as isize;
    self.certify(|f, b| b.is_sphere_of_dim(d - 1 - f.len() as isize))
  }

  /// Reisner: `b̃_i(lk F) = 0` for `i < dim lk F`.
  pub fn cohen_macaulay(&self) -> Certificate { self.certify(|_, b| b.is_acyclic_below_top()) }
}

pub fn is_gorenstein_star(complex: &SimplicialComplex, field: FieldSpec) -> Certificate {
  LinkHomology::new(complex, field).gorenstein_star()
}

pub fn is_cohen_macaulay(complex: &SimplicialComplex, field: FieldSpec) -> Certificate {
  LinkHomology::new(complex, field).cohen_macaulay()
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::generators::cross_polytope;

  fn complex(facets: &[&[usize]], n: usize) -> SimplicialComplex {
    SimplicialComplex::from_facets(&facets.iter().map(|f| f.to_vec()).collect::<Vec<_>>(), n).unwrap()
  }

  #[test]
  fn boundary_examples() {
    let sq = complex(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]], 4);
    let d1 = boundary_matrix(&sq, 1).unwrap();
    assert_eq!((d1.nrows, d1.ncols), (4, 4));
    assert_eq!(d1.rank(FieldSpec::Rational), 3);
    let oct = cross_polytope(3).unwrap();
    let d2 = boundary_matrix(oct.complex(), 2).unwrap();
    assert_eq!((d2.nrows, d2.ncols), (12, 8));
    assert_eq!(d2.rank(FieldSpec::Rational), 7);
    let d1 = boundary_matrix(oct.complex(), 1).unwrap();
    assert!(d1.mul(&d2).is_zero());
    assert!(boundary_matrix(&sq, 3).is_err());
    assert_eq!(boundary_matrix(&sq, 2).unwrap().ncols, 0);
  }

  #[test]
  fn betti_examples() {
    let oct = cross_polytope(3).unwrap();
    assert_eq!(reduced_betti(oct.complex(), FieldSpec::Rational).reduced, vec![0, 0, 0, 1]);
    let sq = complex(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]], 4);
    assert_eq!(reduced_betti(&sq, FieldSpec::default_prime()).reduced, vec![0, 0, 1]);
    let tri = complex(&[&[1, 2, 3]], 3);
    assert_eq!(reduced_betti(&tri, FieldSpec::Rational).reduced, vec![0, 0, 0, 0]);
    assert_eq!(reduced_betti(&SimplicialComplex::void_face(), FieldSpec::Rational).reduced, vec![1]);
  }

  #[test]
  fn certificates() {
    let oct = cross_polytope(3).unwrap();
    assert!(is_gorenstein_star(oct.complex(), FieldSpec::Rational).holds);
    let tri = complex(&[&[1, 2, 3]], 3);
    let cert = is_gorenstein_star(&tri, FieldSpec::Rational);
    assert!(!cert.holds);
    assert_eq!(cert.witness.unwrap().face, Vec::<usize>::new());
    assert!(is_cohen_macaulay(&tri, FieldSpec::Rational).holds);
    let two_edges = complex(&[&[1, 2], &[3, 4]], 4);
    let cm = is_cohen_macaulay(&two_edges, FieldSpec::Rational);
    assert!(!cm.holds);
    assert_eq!(cm.witness.unwrap().link_betti, vec![0, 1, 0]);
  }
}
