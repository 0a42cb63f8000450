//! Colorings, balanced complexes, rank selection and flag vectors.

use serde::Serialize;

use crate::complex::{HVector, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{ColorSet, Face};

/// Vertex coloring `κ: [n] → [d]`; entry `v` is the 1-based color of internal vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring(pub Vec<usize>);

/// Outcome of [`validate_coloring`]. Violations are reported, never raised.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringReport {
  pub proper: bool,
  pub colors_used: usize,
  pub balanced: bool,
  /// First monochromatic edge found, in original vertex labels.
  pub violation: Option<[usize; 2]>,
}

/// Checks properness by scanning edges and reports whether `(Δ, κ)` is balanced.
pub fn validate_coloring(complex: &SimplicialComplex, coloring: &Coloring) -> ColoringReport {
  let mut violation = None;
  if coloring.0.len() == complex.vertex_count() {
    'scan: for e in complex.faces_of_size(2) {
      let vs = e.to_vec();
      if coloring.0[vs[0]] == coloring.0[vs[1]] {
        violation = Some([complex.labels()[vs[0]], complex.labels()[vs[1]]]);
        break 'scan;
      }
    }
  } else {
    violation = Some([0, 0]);
  }
  let mut used: Vec<usize> = coloring.0.clone();
  used.sort_unstable();
  used.dedup();
  let proper = violation.is_none();
  let rank = complex.rank();
  ColoringReport { proper, colors_used: used.len(), balanced: proper && used.len() == rank, violation }
}

/// Properness checked through injectivity of `κ` on every facet.
pub fn injective_on_facets(complex: &SimplicialComplex, coloring: &Coloring) -> bool {
  complex.facets().iter().all(|f| {
    let mut seen = 0u64;
    f.iter().all(|v| {
      let bit = 1u64 << coloring.0[v];
      let fresh = seen & bit == 0;
      seen |= bit;
      fresh
    })
  })
}

/// A simplicial complex together with a proper coloring into the palette `[d]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredComplex {
  complex: SimplicialComplex,
  coloring: Coloring,
  palette: usize,
  palette_labels: Vec<usize>,
}

impl ColoredComplex {
  /// Fails on wrong length, colors outside `1..=palette`, or a monochromatic edge.
  pub fn new(complex: SimplicialComplex, coloring: Coloring, palette: usize) -> Result<Self> {
    if coloring.0.len() != complex.vertex_count() {
      return Err(Error::ColoringLength { got: coloring.0.len(), expected: complex.vertex_count() });
    }
    if palette >= 32 {
      return Err(Error::InvalidParameter(format!("palette size {palette} exceeds 31")));
    }
    if let Some(&c) = coloring.0.iter().find(|&&c| c == 0 || c > palette) {
      return Err(Error::ColorOutOfRange { color: c, palette });
    }
    let report = validate_coloring(&complex, &coloring);
    if let Some(edge) = report.violation {
      return Err(Error::ImproperColoring(edge));
    }
    Ok(ColoredComplex { complex, coloring, palette, palette_labels: (1..=palette).collect() })
  }

  /// Colors with the smallest palette that still contains every used color.
  pub fn with_max_palette(complex: SimplicialComplex, coloring: Coloring) -> Result<Self> {
    let palette = coloring.0.iter().copied().max().unwrap_or(0);
    Self::new(complex, coloring, palette)
  }

  pub fn complex(&self) -> &SimplicialComplex { &self.complex }

  pub fn coloring(&self) -> &Coloring { &self.coloring }

  /// Palette size `d`.
  pub fn palette(&self) -> usize { self.palette }

  /// Original color name of each palette slot (after rank selection or links).
  pub fn palette_labels(&self) -> &[usize] { &self.palette_labels }

  /// Balanced: the palette has exactly `dim + 1` colors.
  pub fn is_balanced(&self) -> bool { self.palette == self.complex.rank() }

  pub fn require_balanced(&self) -> Result<()> {
    if self.is_balanced() {
      Ok(())
    } else {
      Err(Error::NotBalanced(format!("palette {} but dim {}", self.palette, self.complex.dim())))
    }
  }

  /// 0-based color index of internal vertex `v`.
  pub fn color_index(&self, v: usize) -> usize { self.coloring.0[v] - 1 }

  /// `κ(F)`.
  pub fn colors_of(&self, face: Face) -> ColorSet {
    ColorSet(face.iter().fold(0u32, |acc, v| acc | 1 << self.color_index(v)))
  }

  /// Vertices whose color lies in `colors`.
  pub fn vertices_with_colors(&self, colors: ColorSet) -> Face {
    Face::from_indices((0..self.complex.vertex_count()).filter(|&v| colors.contains_index(self.color_index(v))))
  }

  /// `h` indexed up to the palette size rather than the dimension.
  pub fn h_vector(&self) -> HVector {
    let mut f = self.complex.f_vector().0;
    f.resize(self.palette + 1, 0);
    let f: Vec<i64> = f.into_iter().map(|x| x as i64).collect();
    HVector(crate::complex::h_from_f(&f, self.palette))
  }

  /// `Δ_T = {F ∈ Δ : κ(F) ⊆ T}` with the palette renumbered to `1..=#T`.
  pub fn rank_select(&self, colors: ColorSet) -> ColoredComplex {
    let keep = self.vertices_with_colors(colors);
    let sub = self.complex.induced(keep);
    self.recolor_onto(sub, colors)
  }

  /// Link of `face` with palette `[d] ∖ κ(F)`, renumbered order-preservingly.
  pub fn link(&self, face: Face) -> Result<ColoredComplex> {
    let lk = self.complex.link(face)?;
    let rest = self.colors_of(face).complement_in(self.palette);
    Ok(self.recolor_onto(lk, rest))
  }

  /// Builds the colored complex on `sub` (whose labels refer to this complex's
  /// labels) with palette `colors` renumbered to `1..=#colors`.
  fn recolor_onto(&self, sub: SimplicialComplex, colors: ColorSet) -> ColoredComplex {
    let mut slot = [0usize; 32];
    for (k, c) in colors.indices().enumerate() {
      slot[c] = k + 1;
    }
    let by_label: std::collections::HashMap<usize, usize> =
      self.complex.labels().iter().enumerate().map(|(v, &l)| (l, v)).collect();
    let coloring = sub.labels().iter().map(|l| slot[self.color_index(by_label[l])]).collect();
    let palette_labels = colors.indices().map(|c| self.palette_labels[c]).collect();
    ColoredComplex { complex: sub, coloring: Coloring(coloring), palette: colors.len(), palette_labels }
  }

  /// Flag f- and h-vectors over the palette.
  pub fn flag_vectors(&self) -> (FlagVector, FlagVector) {
    let d = self.palette;
    let mut f = vec![0i64; 1 << d];
    for face in self.complex.faces() {
      f[self.colors_of(*face).0 as usize] += 1;
    }
    let h = flag_h_from_f(&f, d);
    (FlagVector { kind: FlagKind::F, d, values: f }, FlagVector { kind: FlagKind::H, d, values: h })
  }
}

/// `h_S = Σ_{T ⊆ S} (-1)^{#S - #T} f_T`.
pub fn flag_h_from_f(f: &[i64], d: usize) -> Vec<i64> {
  ColorSet::all_subsets(d)
    .map(|s| {
      s.subsets()
        .map(|t| {
          let sign = if (s.len() - t.len()) % 2 == 0 { 1 } else { -1 };
          sign * f[t.0 as usize]
        })
        .sum()
    })
    .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FlagKind {
  F,
  H,
}

/// Values indexed by color subsets `S ⊆ [d]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagVector {
  pub kind: FlagKind,
  pub d: usize,
  pub values: Vec<i64>,
}

impl FlagVector {
  pub fn get(&self, s: ColorSet) -> i64 { self.values[s.0 as usize] }

  /// `Σ_{#S = i} value_S`.
  pub fn sum_by_size(&self, i: usize) -> i64 {
    ColorSet::all_subsets(self.d).filter(|s| s.len() == i).map(|s| self.get(s)).sum()
  }

  pub fn entries(&self) -> impl Iterator<Item = (ColorSet, i64)> + '_ {
    ColorSet::all_subsets(self.d).map(|s| (s, self.get(s)))
  }
}

#[cfg(test)]
mod tests {
  use super::*;

  fn colored_square() -> ColoredComplex {
    let c = SimplicialComplex::from_facets(&[vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 1]], 4).unwrap();
    ColoredComplex::new(c, Coloring(vec![1, 2, 1, 2]), 2).unwrap()
  }

  fn octahedron() -> ColoredComplex {
    let mut facets = Vec::new();
    for a in [1, 2] {
      for b in [3, 4] {
        for c in [5, 6] {
          facets.push(vec![a, b, c]);
        }
      }
    }
    let c = SimplicialComplex::from_facets(&facets, 6).unwrap();
    ColoredComplex::new(c, Coloring(vec![1, 1, 2, 2, 3, 3]), 3).unwrap()
  }

  #[test]
  fn square_flag_vectors() {
    let (f, h) = colored_square().flag_vectors();
    let s = |c: &[usize]| ColorSet::from_colors(c.iter().copied());
    assert_eq!([f.get(s(&[])), f.get(s(&[1])), f.get(s(&[2])), f.get(s(&[1, 2]))], [1, 2, 2, 4]);
    assert_eq!([h.get(s(&[])), h.get(s(&[1])), h.get(s(&[2])), h.get(s(&[1, 2]))], [1, 1, 1, 1]);
  }

  #[test]
  fn octahedron_flag_h_is_all_ones() {
    let (_, h) = octahedron().flag_vectors();
    assert!(h.values.iter().all(|&x| x == 1));
    assert_eq!(h.values.len(), 8);
  }

  #[test]
  fn rank_selection_examples() {
    let oct = octahedron();
    let t12 = oct.rank_select(ColorSet::from_colors([1, 2]));
    assert_eq!(t12.complex().f_vector().0, vec![1, 4, 4]);
    assert_eq!(t12.h_vector().0, vec![1, 2, 1]);
    assert_eq!(t12.palette(), 2);
    let t1 = oct.rank_select(ColorSet::from_colors([1]));
    assert_eq!(t1.complex().facets().len(), 2);
    assert_eq!(t1.h_vector().0, vec![1, 1]);
    let t3 = oct.rank_select(ColorSet::from_colors([3]));
    assert_eq!(t3.palette_labels(), &[3]);
    assert_eq!(t3.complex().labels(), &[5, 6]);
    assert_eq!(oct.rank_select(ColorSet::full(3)), oct);
    let empty = oct.rank_select(ColorSet::EMPTY);
    assert_eq!(empty.complex().dim(), -1);
    assert_eq!(empty.h_vector().0, vec![1]);
  }

  #[test]
  fn coloring_validation() {
    let oct = octahedron();
    let rep = validate_coloring(oct.complex(), oct.coloring());
    assert!(rep.proper && rep.balanced);
    assert_eq!(rep.colors_used, 3);

    let tri = SimplicialComplex::from_facets(&[vec![1, 2, 3]], 3).unwrap();
    let rep = validate_coloring(&tri, &Coloring(vec![1, 1, 2]));
    assert!(!rep.proper);
    assert_eq!(rep.violation, Some([1, 2]));
    assert!(!injective_on_facets(&tri, &Coloring(vec![1, 1, 2])));
    assert!(matches!(ColoredComplex::new(tri, Coloring(vec![1, 1, 2]), 2), Err(Error::ImproperColoring(_))));

    let sq = colored_square();
    assert!(validate_coloring(sq.complex(), sq.coloring()).balanced);
  }

  #[test]
  fn colored_link_relabels_palette() {
    let oct = octahedron();
    let lk = oct.link(Face::singleton(2)).unwrap();
    assert_eq!(lk.palette(), 2);
    assert_eq!(lk.palette_labels(), &[1, 3]);
    assert!(lk.is_balanced());
    assert_eq!(lk.coloring().0, vec![1, 1, 2, 2]);
  }
}
