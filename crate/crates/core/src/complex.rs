//! Facet-listed simplicial complexes, face enumeration, links, stars and
//! f-/h-vectors.
//!
//! Vertices are stored as 0-based bit positions of a [`Face`]. Every complex
//! remembers the original 1-based label of each vertex so that links, stars
//! and rank selections (which compact the vertex set) can still be reported
//! in the caller's numbering.

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};
use crate::util::binomial;

#[derive(Clone, Debug)]
pub struct SimplicialComplex {
  n: usize,
  facets: Vec<Face>,
  labels: Vec<usize>,
  faces: OnceLock<Vec<Face>>,
}

impl PartialEq for SimplicialComplex {
  fn eq(&self, other: &Self) -> bool {
    self.n == other.n && self.facets == other.facets && self.labels == other.labels
  }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
  /// Builds a complex on vertices `1..=n` from 1-based facet lists.
  ///
  /// Non-maximal and duplicate facets are pruned. Every vertex in `1..=n`
  /// must be covered by some facet; see [`Self::from_facets_shrinking`] for
  /// the relabeling variant.
  pub fn from_facets(facets: &[Vec<usize>], n: usize) -> Result<Self> {
    let parsed = parse_facets(facets, n)?;
    let covered = parsed.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
    if let Some(v) = (0..n).find(|&v| !covered.contains(v)) {
      return Err(Error::UncoveredVertex(v + 1));
    }
    Ok(Self::from_faces_unchecked(n, parsed, (1..=n).collect()))
  }

  /// Like [`Self::from_facets`], but uncovered vertices are dropped and the
  /// remaining ones renumbered; original labels are kept.
  pub fn from_facets_shrinking(facets: &[Vec<usize>], n: usize) -> Result<Self> {
    let parsed = parse_facets(facets, n)?;
    let labels: Vec<usize> = (1..=n).collect();
    Ok(compact(&parsed, &labels))
  }

  /// The complex `{∅}` with no vertices.
  pub fn void_face() -> Self { Self::from_faces_unchecked(0, vec![Face::EMPTY], Vec::new()) }

  /// Internal constructor: prunes non-maximal faces. `labels.len()` must be `n`.
  pub(crate) fn from_faces_unchecked(n: usize, faces: Vec<Face>, labels: Vec<usize>) -> Self {
    debug_assert_eq!(labels.len(), n);
    let mut sorted = faces;
    sorted.sort_by_key(|f| std::cmp::Reverse(f.len()));
    sorted.dedup();
    let mut facets: Vec<Face> = Vec::with_capacity(sorted.len());
    for f in sorted {
      if !facets.iter().any(|g| f.is_subset(*g)) {
        facets.push(f);
      }
    }
    if facets.is_empty() {
      facets.push(Face::EMPTY);
    }
    facets.sort();
    SimplicialComplex { n, facets, labels, faces: OnceLock::new() }
  }

  pub fn vertex_count(&self) -> usize { self.n }

  /// Dimension, `-1` for `{∅}`.
  pub fn dim(&self) -> isize { self.facets.iter().map(|f| f.len()).max().unwrap_or(0) as isize - 1 }

  /// `dim + 1`, the size of the largest face.
  pub fn rank(&self) -> usize { (self.dim() + 1) as usize }

  pub fn facets(&self) -> &[Face] { &self.facets }

  /// Original 1-based vertex labels, indexed by internal vertex.
  pub fn labels(&self) -> &[usize] { &self.labels }

  /// Facets as sorted lists of 1-based internal indices (`1..=n`).
  pub fn facet_lists(&self) -> Vec<Vec<usize>> {
    self.facets.iter().filter(|f| !f.is_empty()).map(|f| f.iter().map(|v| v + 1).collect()).collect()
  }

  /// Translates a face to the original vertex labels.
  pub fn face_labels(&self, face: Face) -> Vec<usize> { face.iter().map(|v| self.labels[v]).collect() }

  /// Translates 1-based internal indices to a face.
  pub fn face_from_indices(&self, vertices: &[usize]) -> Result<Face> {
    for &v in vertices {
      if v == 0 || v > self.n {
        return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
      }
    }
    Ok(Face::from_indices(vertices.iter().map(|v| v - 1)))
  }

  pub fn is_face(&self, face: Face) -> bool { self.facets.iter().any(|g| face.is_subset(*g)) }

  pub fn is_pure(&self) -> bool {
    let k = self.facets[0].len();
    self.facets.iter().all(|f| f.len() == k)
  }

  /// All faces including `∅`, sorted by size and then lexicographically.
  pub fn faces(&self) -> &[Face] {
    self.faces.get_or_init(|| {
      let mut seen: HashSet<Face> = HashSet::new();
      for f in &self.facets {
        for s in f.subsets() {
          seen.insert(s);
        }
      }
      let mut all: Vec<Face> = seen.into_iter().collect();
      all.sort();
      all
    })
  }

  /// Faces with exactly `size` vertices, sorted lexicographically.
  pub fn faces_of_size(&self, size: usize) -> &[Face] {
    let all = self.faces();
    let lo = all.partition_point(|f| f.len() < size);
    let hi = all.partition_point(|f| f.len() <= size);
    &all[lo..hi]
  }

  /// Vertices `v` such that `face ∪ {v}` is a face and `v ∉ face`.
  pub fn link_vertices(&self, face: Face) -> Face {
    self
      .facets
      .iter()
      .filter(|g| face.is_subset(**g))
      .fold(Face::EMPTY, |acc, g| acc.union(*g))
      .minus(face)
  }

  /// f-vector `(f_{-1}, f_0, ..., f_{d-1})`, stored by face cardinality.
  pub fn f_vector(&self) -> FVector {
    let mut counts = vec![0u64; self.rank() + 1];
    for f in self.faces() {
      counts[f.len()] += 1;
    }
    FVector(counts)
  }

  pub fn h_vector(&self) -> HVector { self.f_vector().to_h() }

  /// `lk(F) = {G ∈ Δ : F ∪ G ∈ Δ, F ∩ G = ∅}` on its own (compacted) vertex set.
  pub fn link(&self, face: Face) -> Result<SimplicialComplex> {
    if face.is_empty() {
      return Ok(self.clone());
    }
    let pieces = self.containing_facets(face)?;
    let pieces: Vec<Face> = pieces.into_iter().map(|g| g.minus(face)).collect();
    Ok(compact(&pieces, &self.labels))
  }

  /// `st(F) = {G ∈ Δ : F ∪ G ∈ Δ}` on its own (compacted) vertex set.
  pub fn star(&self, face: Face) -> Result<SimplicialComplex> {
    if face.is_empty() {
      return Ok(self.clone());
    }
    let pieces = self.containing_facets(face)?;
    Ok(compact(&pieces, &self.labels))
  }

  fn containing_facets(&self, face: Face) -> Result<Vec<Face>> {
    let pieces: Vec<Face> = self.facets.iter().copied().filter(|g| face.is_subset(*g)).collect();
    if pieces.is_empty() {
      return Err(Error::NotAFace(self.face_labels_checked(face)));
    }
    Ok(pieces)
  }

  fn face_labels_checked(&self, face: Face) -> Vec<usize> {
    face.iter().map(|v| self.labels.get(v).copied().unwrap_or(v + 1)).collect()
  }

  /// Subcomplex consisting of faces inside `keep`, on the compacted vertex set.
  pub(crate) fn induced(&self, keep: Face) -> SimplicialComplex {
    let pieces: Vec<Face> = self.facets.iter().map(|g| g.intersection(keep)).collect();
    compact(&pieces, &self.labels)
  }
}

fn parse_facets(facets: &[Vec<usize>], n: usize) -> Result<Vec<Face>> {
  if facets.is_empty() {
    return Err(Error::EmptyFacetList);
  }
  if n > MAX_VERTICES {
    return Err(Error::TooManyVertices { got: n, max: MAX_VERTICES });
  }
  facets
    .iter()
    .map(|f| {
      for &v in f {
        if v == 0 || v > n {
          return Err(Error::VertexOutOfRange { vertex: v, n });
        }
      }
      Ok(Face::from_indices(f.iter().map(|v| v - 1)))
    })
    .collect()
}

/// Renumbers the vertices used by `faces` to `0..m`, carrying labels along.
pub(crate) fn compact(faces: &[Face], labels: &[usize]) -> SimplicialComplex {
  let used = faces.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
  let old: Vec<usize> = used.iter().collect();
  let mut map = [usize::MAX; MAX_VERTICES];
  for (new, &o) in old.iter().enumerate() {
    map[o] = new;
  }
  let renamed = faces.iter().map(|f| Face::from_indices(f.iter().map(|v| map[v]))).collect();
  let new_labels = old.iter().map(|&o| labels[o]).collect();
  SimplicialComplex::from_faces_unchecked(old.len(), renamed, new_labels)
}

/// Face counts by cardinality: entry `i` is `f_{i-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector(pub Vec<u64>);

/// `(h_0, ..., h_d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector(pub Vec<i64>);

impl FVector {
  /// `d = dim + 1`.
  pub fn d(&self) -> usize { self.0.len() - 1 }

  pub fn to_h(&self) -> HVector {
    let f: Vec<i64> = self.0.iter().map(|&x| x as i64).collect();
    HVector(h_from_f(&f, self.d()))
  }
}

impl HVector {
  pub fn d(&self) -> usize { self.0.len() - 1 }

  /// `h_i`, zero outside `0..=d`.
  pub fn get(&self, i: i64) -> i64 {
    if i < 0 {
      0
    } else {
      self.0.get(i as usize).copied().unwrap_or(0)
    }
  }

  pub fn to_f(&self) -> Vec<i64> { f_from_h(&self.0, self.d()) }
}

/// `h_i = Σ_{j ≤ i} (-1)^{i-j} C(d-j, i-j) f_{j-1}`, where `f[j] = f_{j-1}`.
///
/// Entries of `f` beyond index `d` are ignored; missing ones count as zero.
pub fn h_from_f(f: &[i64], d: usize) -> Vec<i64> {
  (0..=d)
    .map(|i| {
      (0..=i)
        .map(|j| {
          let sign = if (i - j) % 2 == 0 { 1 } else { -1 };
          sign * binomial((d - j) as i64, (i - j) as i64) * f.get(j).copied().unwrap_or(0)
        })
        .sum()
    })
    .collect()
}

/// Inverse of [`h_from_f`]: `f_{k-1} = Σ_{i ≤ k} C(d-i, k-i) h_i`.
pub fn f_from_h(h: &[i64], d: usize) -> Vec<i64> {
  (0..=d)
    .map(|k| (0..=k).map(|i| binomial((d - i) as i64, (k - i) as i64) * h.get(i).copied().unwrap_or(0)).sum())
    .collect()
}
