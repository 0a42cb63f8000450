//! Artinian reductions in the span of squarefree face monomials.
//!
//! If `Θ` restricts to full rank on every face, each monomial reduces modulo
//! `ΘA` to a combination of squarefree face monomials, and `(ΘA)_k` reduces to
//! the span of the products `φ · x_G` with `#G = k-1`, `φ ∈ span Θ`, `φ|_G = 0`.
//! Multiplication by `ω` is `x_G ↦ ψ_G · x_G` where `ψ_G ∈ ω + span Θ`
//! vanishes on `G`.

use rayon::prelude::*;

use super::LinearForm;
use crate::complex::SimplicialComplex;
use crate::face::Face;
use crate::linalg::{Fp, ModEchelon};

/// Row-reduces `rows` (each of width `width`) in place, returning the pivot columns.
fn rref(rows: &mut [Vec<u64>], width: usize, fp: Fp) -> Vec<usize> {
  let mut pivots = Vec::new();
  let mut r = 0;
  for c in 0..width {
    let Some(found) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
    rows.swap(r, found);
    let inv = fp.inv(rows[r][c]);
    for x in rows[r].iter_mut() {
      *x = fp.mul(*x, inv);
    }
    for i in 0..rows.len() {
      if i != r && rows[i][c] != 0 {
        let f = rows[i][c];
        for j in 0..rows[i].len() {
          let t = fp.mul(f, rows[r][j]);
          rows[i][j] = fp.sub(rows[i][j], t);
        }
      }
    }
    pivots.push(c);
    r += 1;
    if r == rows.len() {
      break;
    }
  }
  pivots
}

/// True iff for every facet `F` the forms restricted to `F` have rank `#F`.
pub fn restricts_to_full_rank(complex: &SimplicialComplex, forms: &[LinearForm], p: u64) -> bool {
  let fp = Fp::new(p);
  let coeffs: Vec<Vec<u64>> =
    forms.iter().map(|f| f.coefficients.iter().map(|&c| fp.from_i64(c)).collect()).collect();
  complex.facets().par_iter().all(|facet| {
    let mut rows: Vec<Vec<u64>> = facet.iter().map(|v| coeffs.iter().map(|f| f[v]).collect()).collect();
    rref(&mut rows, coeffs.len(), fp).len() == facet.len()
  })
}

/// Face-reduction engine over `F_p` for a fixed system of forms.
pub struct FaceReduction<'a> {
  complex: &'a SimplicialComplex,
  fp: Fp,
  /// `forms[j][v]`, reduced mod `p`
  forms: Vec<Vec<u64>>,
}

impl<'a> FaceReduction<'a> {
  /// `None` unless there are at least `dim Δ + 1` forms restricting to full
  /// rank on every facet.
  pub fn new(complex: &'a SimplicialComplex, forms: &[LinearForm], p: u64) -> Option<Self> {
    if forms.len() < complex.rank() || !restricts_to_full_rank(complex, forms, p) {
      return None;
    }
    let fp = Fp::new(p);
    let forms = forms.iter().map(|f| f.coefficients.iter().map(|&c| fp.from_i64(c)).collect()).collect();
    Some(FaceReduction { complex, fp, forms })
  }

  pub fn p(&self) -> u64 { self.fp.p }

  fn restriction(&self, g: Face) -> Vec<Vec<u64>> {
    g.iter().map(|v| self.forms.iter().map(|f| f[v]).collect()).collect()
  }

  fn combine(&self, lambda: &[u64]) -> Vec<u64> {
    let n = self.complex.vertex_count();
    let mut out = vec![0u64; n];
    for (f, &l) in self.forms.iter().zip(lambda) {
      if l == 0 {
        continue;
      }
      for v in 0..n {
        out[v] = self.fp.add(out[v], self.fp.mul(l, f[v]));
      }
    }
    out
  }

  /// Basis of the forms in `span Θ` vanishing on `g`.
  pub fn vanishing_forms(&self, g: Face) -> Vec<Vec<u64>> {
    let m = self.forms.len();
    let mut rows = self.restriction(g);
    let pivots = rref(&mut rows, m, self.fp);
    (0..m)
      .filter(|c| !pivots.contains(c))
      .map(|free| {
        let mut lambda = vec![0u64; m];
        lambda[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
          lambda[pc] = self.fp.neg(rows[r][free]);
        }
        self.combine(&lambda)
      })
      .collect()
  }

  /// `ψ ∈ omega + span Θ` with `ψ|_g = 0`.
  pub fn shifted_form(&self, omega: &[u64], g: Face) -> Vec<u64> {
    let m = self.forms.len();
    let mut rows: Vec<Vec<u64>> =
      g.iter().zip(self.restriction(g)).map(|(v, mut row)| {
        row.push(omega[v]);
        row
      }).collect();
    let pivots = rref(&mut rows, m, self.fp);
    let mut lambda = vec![0u64; m];
    for (r, &pc) in pivots.iter().enumerate() {
      lambda[pc] = rows[r][m];
    }
    let theta = self.combine(&lambda);
    omega.iter().zip(theta).map(|(&w, t)| self.fp.sub(w, t)).collect()
  }

  /// Faces of size `k`, the coordinates of degree `k`.
  pub fn coordinates(&self, k: usize) -> &[Face] { self.complex.faces_of_size(k) }

  fn index(&self, k: usize, f: Face) -> usize {
    self.coordinates(k).binary_search(&f).expect("face of the complex")
  }

  /// `φ · x_g` as a vector over the faces of size `#g + 1`.
  fn product(&self, phi: &[u64], g: Face) -> Vec<(usize, u64)> {
    let k = g.len() + 1;
    self
      .complex
      .link_vertices(g)
      .iter()
      .filter(|&u| phi[u] != 0)
      .map(|u| (self.index(k, g.with(u)), phi[u]))
      .collect()
  }

  /// Echelon form of the relations spanning the image of `(ΘA)_k`.
  pub fn relations(&self, k: usize) -> ModEchelon {
    let target = self.coordinates(k).len();
    let mut ech = ModEchelon::new(self.fp.p, target);
    if k == 0 || target == 0 {
      return ech;
    }
    let gens: Vec<Vec<(usize, u64)>> = self
      .coordinates(k - 1)
      .par_iter()
      .flat_map_iter(|&g| self.vanishing_forms(g).into_iter().map(move |phi| self.product(&phi, g)))
      .collect();
    for v in gens {
      if ech.is_full() {
        break;
      }
      ech.insert(v);
    }
    ech
  }

  /// `dim (A/ΘA)_k`.
  pub fn quotient_dim(&self, k: usize) -> usize {
    if k == 0 {
      return 1;
    }
    let ech = self.relations(k);
    ech.ncols() - ech.rank()
  }

  /// Image of `x_g` (`#g = k`) under multiplication by `omega`.
  pub fn times_omega(&self, omega: &[u64], vec: &[(usize, u64)], k: usize) -> Vec<(usize, u64)> {
    let target = self.coordinates(k + 1).len();
    let mut acc = vec![0u64; target];
    for &(i, c) in vec {
      let g = self.coordinates(k)[i];
      let psi = self.shifted_form(omega, g);
      for (j, x) in self.product(&psi, g) {
        acc[j] = self.fp.add(acc[j], self.fp.mul(c, x));
      }
    }
    acc.into_iter().enumerate().filter(|e| e.1 != 0).collect()
  }

  pub fn reduce_form(&self, form: &LinearForm) -> Vec<u64> {
    form.coefficients.iter().map(|&c| self.fp.from_i64(c)).collect()
  }
}
