//! Bitset faces over at most 128 vertices and bitset color subsets.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 128;

/// A set of vertices, stored as a bitset over 0-based vertex indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(pub u128);

impl Face {
  pub const EMPTY: Face = Face(0);

  pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Face {
    let mut bits = 0u128;
    for i in indices {
      debug_assert!(i < MAX_VERTICES);
      bits |= 1u128 << i;
    }
    Face(bits)
  }

  pub fn singleton(v: usize) -> Face { Face(1u128 << v) }

  pub fn len(self) -> usize { self.0.count_ones() as usize }

  pub fn is_empty(self) -> bool { self.0 == 0 }

  pub fn contains(self, v: usize) -> bool { v < MAX_VERTICES && self.0 >> v & 1 == 1 }

  pub fn is_subset(self, other: Face) -> bool { self.0 & !other.0 == 0 }

  pub fn union(self, other: Face) -> Face { Face(self.0 | other.0) }

  pub fn intersection(self, other: Face) -> Face { Face(self.0 & other.0) }

  pub fn minus(self, other: Face) -> Face { Face(self.0 & !other.0) }

  pub fn with(self, v: usize) -> Face { Face(self.0 | 1u128 << v) }

  pub fn without(self, v: usize) -> Face { Face(self.0 & !(1u128 << v)) }

  pub fn is_disjoint(self, other: Face) -> bool { self.0 & other.0 == 0 }

  /// Smallest vertex, if any.
  pub fn first(self) -> Option<usize> {
    (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
  }

  /// Vertices in increasing order.
  pub fn iter(self) -> FaceIter { FaceIter(self.0) }

  pub fn to_vec(self) -> Vec<usize> { self.iter().collect() }

  /// All subsets of this face, the empty face included.
  pub fn subsets(self) -> impl Iterator<Item = Face> {
    let full = self.0;
    let mut sub = 0u128;
    let mut done = false;
    std::iter::from_fn(move || {
      if done {
        return None;
      }
      let out = Face(sub);
      // standard submask enumeration in increasing order
      sub = (sub.wrapping_sub(full)) & full;
      if sub == 0 {
        done = true;
      }
      Some(out)
    })
  }
}

/// Faces order by size first, then lexicographically on their sorted vertex lists.
impl Ord for Face {
  fn cmp(&self, other: &Self) -> std::cmp::Ordering {
    self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
  }
}

impl PartialOrd for Face {
  fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> { Some(self.cmp(other)) }
}

impl fmt::Debug for Face {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result { f.debug_set().entries(self.iter()).finish() }
}

pub struct FaceIter(u128);

impl Iterator for FaceIter {
  type Item = usize;

  fn next(&mut self) -> Option<usize> {
    if self.0 == 0 {
      return None;
    }
    let v = self.0.trailing_zeros() as usize;
    self.0 &= self.0 - 1;
    Some(v)
  }

  fn size_hint(&self) -> (usize, Option<usize>) {
    let n = self.0.count_ones() as usize;
    (n, Some(n))
  }
}

impl ExactSizeIterator for FaceIter {}

/// A subset of the palette `[d]`. Bit `i` stands for color `i + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct ColorSet(pub u32);

impl ColorSet {
  pub const EMPTY: ColorSet = ColorSet(0);

  /// The full palette `{1, ..., d}`.
  pub fn full(d: usize) -> ColorSet {
    assert!(d < 32, "palette too large");
    ColorSet((1u32 << d) - 1)
  }

  /// Builds a set from 1-based color names.
  pub fn from_colors<I: IntoIterator<Item = usize>>(colors: I) -> ColorSet {
    let mut bits = 0;
    for c in colors {
      assert!((1..=32).contains(&c), "colors are 1-based");
      bits |= 1 << (c - 1);
    }
    ColorSet(bits)
  }

  pub fn len(self) -> usize { self.0.count_ones() as usize }

  pub fn is_empty(self) -> bool { self.0 == 0 }

  /// Membership of the 0-based color index `c`.
  pub fn contains_index(self, c: usize) -> bool { c < 32 && self.0 >> c & 1 == 1 }

  pub fn is_subset(self, other: ColorSet) -> bool { self.0 & !other.0 == 0 }

  pub fn complement_in(self, d: usize) -> ColorSet { ColorSet(ColorSet::full(d).0 & !self.0) }

  /// 0-based color indices in increasing order.
  pub fn indices(self) -> impl Iterator<Item = usize> {
    let bits = self.0;
    (0..32).filter(move |i| bits >> i & 1 == 1)
  }

  /// 1-based color names in increasing order.
  pub fn colors(self) -> Vec<usize> { self.indices().map(|i| i + 1).collect() }

  /// All subsets of `[d]` in increasing bitmask order.
  pub fn all_subsets(d: usize) -> impl Iterator<Item = ColorSet> { (0..1u32 << d).map(ColorSet) }

  /// All subsets of this set.
  pub fn subsets(self) -> impl Iterator<Item = ColorSet> {
    let full = self.0;
    let mut sub = 0u32;
    let mut done = false;
    std::iter::from_fn(move || {
      if done {
        return None;
      }
      let out = ColorSet(sub);
      sub = sub.wrapping_sub(full) & full;
      if sub == 0 {
        done = true;
      }
      Some(out)
    })
  }
}

impl fmt::Debug for ColorSet {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result { write!(f, "{self}") }
}

impl fmt::Display for ColorSet {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{{")?;
    for (k, c) in self.colors().into_iter().enumerate() {
      if k > 0 {
        write!(f, ",")?;
      }
      write!(f, "{c}")?;
    }
    write!(f, "}}")
  }
}

impl From<ColorSet> for Vec<usize> {
  fn from(s: ColorSet) -> Vec<usize> { s.colors() }
}

impl TryFrom<Vec<usize>> for ColorSet {
  type Error = String;

  fn try_from(v: Vec<usize>) -> Result<ColorSet, String> {
    if v.iter().any(|&c| !(1..=31).contains(&c)) {
      return Err(format!("color set {v:?} has colors outside 1..=31"));
    }
    Ok(ColorSet::from_colors(v))
  }
}
