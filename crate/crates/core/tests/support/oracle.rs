//! Naive reimplementations by subset enumeration over `2^[n]`.

use std::collections::BTreeSet;

use bglb::colored::ColoredComplex;
use bglb::complex::SimplicialComplex;

pub type Set = BTreeSet<usize>;

/// All faces as sets of 1-based labels, by testing every subset of the vertex set.
pub fn faces(c: &SimplicialComplex) -> BTreeSet<Set> {
  let n = c.vertex_count();
  let mut facets: Vec<Set> = c.facet_lists().into_iter().map(|f| f.into_iter().collect()).collect();
  // the void complex {∅} has no nonempty facets
  facets.push(Set::new());
  let mut out = BTreeSet::new();
  for mask in 0u64..(1u64 << n) {
    let s: Set = (0..n).filter(|v| mask >> v & 1 == 1).map(|v| v + 1).collect();
    if facets.iter().any(|f| s.is_subset(f)) {
      out.insert(s);
    }
  }
  out
}

pub fn f_vector(c: &SimplicialComplex) -> Vec<i64> {
  let fs = faces(c);
  let d = fs.iter().map(|f| f.len()).max().unwrap_or(0);
  let mut out = vec![0i64; d + 1];
  for f in fs {
    out[f.len()] += 1;
  }
  out
}

fn choose(n: i64, k: i64) -> i64 {
  if k < 0 || n < 0 || k > n {
    return 0;
  }
  (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

/// `h_i = Σ_{j ≤ i} (-1)^{i-j} C(d-j, i-j) f_{j-1}`.
pub fn h_from_f(f: &[i64]) -> Vec<i64> {
  let d = f.len() as i64 - 1;
  (0..=d)
    .map(|i| (0..=i).map(|j| (if (i - j) % 2 == 0 { 1 } else { -1 }) * choose(d - j, i - j) * f[j as usize]).sum())
    .collect()
}

/// Link as a set of label sets.
pub fn link(c: &SimplicialComplex, face: &Set) -> BTreeSet<Set> {
  let fs = faces(c);
  fs.iter()
    .filter(|g| g.is_disjoint(face) && fs.contains(&g.union(face).copied().collect()))
    .cloned()
    .collect()
}

pub fn star(c: &SimplicialComplex, face: &Set) -> BTreeSet<Set> {
  let fs = faces(c);
  fs.iter().filter(|g| fs.contains(&g.union(face).copied().collect())).cloned().collect()
}

/// Faces of `c` (label sets) relabelled through `c.labels()` so that they can
/// be compared with faces of the parent complex.
pub fn faces_in_parent_labels(c: &SimplicialComplex) -> BTreeSet<Set> {
  let labels = c.labels();
  faces(c).into_iter().map(|f| f.into_iter().map(|v| labels[v - 1]).collect()).collect()
}

/// Colors (1-based) of a label set under the coloring of `c`.
pub fn colors(c: &ColoredComplex, face: &Set) -> Set {
  face.iter().map(|&v| c.coloring().0[v - 1]).collect()
}

/// Flag f-vector indexed by color bitmask.
pub fn flag_f(c: &ColoredComplex) -> Vec<i64> {
  let d = c.palette();
  let mut out = vec![0i64; 1 << d];
  for f in faces(c.complex()) {
    let mask: usize = colors(c, &f).iter().map(|k| 1usize << (k - 1)).sum();
    out[mask] += 1;
  }
  out
}

/// `h_S = Σ_{T ⊆ S} (-1)^{#S-#T} f_T`, with subsets enumerated explicitly.
pub fn flag_h(c: &ColoredComplex) -> Vec<i64> {
  let f = flag_f(c);
  let d = c.palette();
  (0..1usize << d)
    .map(|s| {
      (0..1usize << d)
        .filter(|t| t & !s == 0)
        .map(|t| if (s.count_ones() - t.count_ones()) % 2 == 0 { f[t] } else { -f[t] })
        .sum()
    })
    .collect()
}

/// Faces of the rank selection, as label sets.
pub fn rank_selected(c: &ColoredComplex, t: &Set) -> BTreeSet<Set> {
  faces(c.complex()).into_iter().filter(|f| colors(c, f).is_subset(t)).collect()
}

/// Rank over `ℚ` by dense elimination on rationals.
pub fn dense_rank(m: &[Vec<i64>]) -> usize {
  use num_bigint::BigInt;
  use num_rational::BigRational;
  use num_traits::Zero;
  let mut a: Vec<Vec<BigRational>> =
    m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect();
  let rows = a.len();
  let cols = a.first().map_or(0, |r| r.len());
  let mut rank = 0;
  for col in 0..cols {
    let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else { continue };
    a.swap(rank, p);
    for r in 0..rows {
      if r != rank && !a[r][col].is_zero() {
        let f = &a[r][col] / &a[rank][col];
        for k in col..cols {
          let t = &f * &a[rank][k];
          a[r][k] -= t;
        }
      }
    }
    rank += 1;
  }
  rank
}

/// Reduced Betti numbers `b̃_{-1}..b̃_{dim}` from dense boundary matrices.
pub fn reduced_betti(c: &SimplicialComplex) -> Vec<i64> {
  let fs: Vec<Vec<Set>> = {
    let all = faces(c);
    let d = all.iter().map(|f| f.len()).max().unwrap_or(0);
    (0..=d).map(|s| all.iter().filter(|f| f.len() == s).cloned().collect()).collect()
  };
  let rank_of = |k: usize| -> usize {
    // ∂ from faces of size k to faces of size k-1
    if k == 0 || k >= fs.len() {
      return 0;
    }
    let m: Vec<Vec<i64>> = fs[k - 1]
      .iter()
      .map(|row| {
        fs[k]
          .iter()
          .map(|col| {
            if !row.is_subset(col) {
              return 0;
            }
            let missing = col.difference(row).next().unwrap();
            let pos = col.iter().position(|v| v == missing).unwrap();
            if pos % 2 == 0 { 1 } else { -1 }
          })
          .collect()
      })
      .collect();
    dense_rank(&m)
  };
  (0..fs.len()).map(|s| fs[s].len() as i64 - rank_of(s) as i64 - rank_of(s + 1) as i64).collect()
}
