//! Exact rank computations: incremental sparse echelon forms over `F_p` and
//! over `ℚ` (fraction-free on integers, with a big-integer fallback).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default prime, `2^31 - 1`.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// Coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldSpec {
  Rational,
  Prime { p: u64 },
}

impl FieldSpec {
  /// `F_p`; `p` must be a prime below `2^32`.
  pub fn prime(p: u64) -> Result<Self> {
    if !is_prime(p) || p >= 1 << 32 {
      return Err(Error::NotPrime(p));
    }
    Ok(FieldSpec::Prime { p })
  }

  pub fn default_prime() -> Self { FieldSpec::Prime { p: DEFAULT_PRIME } }

  pub fn modulus(self) -> Option<u64> {
    match self {
      FieldSpec::Rational => None,
      FieldSpec::Prime { p } => Some(p),
    }
  }
}

impl std::fmt::Display for FieldSpec {
  fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
    match self {
      FieldSpec::Rational => write!(f, "Q"),
      FieldSpec::Prime { p } => write!(f, "F_{p}"),
    }
  }
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
  if n < 2 {
    return false;
  }
  for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
    if n.is_multiple_of(q) {
      return n == q;
    }
  }
  let (mut d, mut s) = (n - 1, 0);
  while d % 2 == 0 {
    d /= 2;
    s += 1;
  }
  let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
  let pow = |mut b: u64, mut e: u64| {
    let mut r = 1u64;
    while e > 0 {
      if e & 1 == 1 {
        r = mul(r, b);
      }
      b = mul(b, b);
      e >>= 1;
    }
    r
  };
  'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
    let mut x = pow(a, d);
    if x == 1 || x == n - 1 {
      continue;
    }
    for _ in 1..s {
      x = mul(x, x);
      if x == n - 1 {
        continue 'witness;
      }
    }
    return false;
  }
  true
}

/// Arithmetic in `F_p` for `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
  pub p: u64,
}

impl Fp {
  pub fn new(p: u64) -> Self { Fp { p } }

  #[inline]
  pub fn add(self, a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= self.p { s - self.p } else { s }
  }

  #[inline]
  pub fn sub(self, a: u64, b: u64) -> u64 { if a >= b { a - b } else { a + self.p - b } }

  #[inline]
  pub fn neg(self, a: u64) -> u64 { if a == 0 { 0 } else { self.p - a } }

  #[inline]
  pub fn mul(self, a: u64, b: u64) -> u64 { a * b % self.p }

  pub fn pow(self, mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
      if e & 1 == 1 {
        r = self.mul(r, b);
      }
      b = self.mul(b, b);
      e >>= 1;
    }
    r
  }

  pub fn inv(self, a: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(self.p));
    self.pow(a, self.p - 2)
  }

  pub fn from_i64(self, a: i64) -> u64 { a.rem_euclid(self.p as i64) as u64 }
}

/// Sparse matrix with integer entries, stored by columns. Over `F_p` the
/// entries are read modulo `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
  pub nrows: usize,
  pub ncols: usize,
  pub cols: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
  pub fn new(nrows: usize) -> Self { SparseMatrix { nrows, ncols: 0, cols: Vec::new() } }

  pub fn push_col(&mut self, mut col: Vec<(usize, i64)>) {
    col.sort_unstable_by_key(|e| e.0);
    col.retain(|e| e.1 != 0);
    self.cols.push(col);
    self.ncols += 1;
  }

  pub fn to_dense(&self) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; self.ncols]; self.nrows];
    for (c, col) in self.cols.iter().enumerate() {
      for &(r, v) in col {
        m[r][c] = v;
      }
    }
    m
  }

  /// Product `self · other` with exact integer entries.
  pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
    assert_eq!(self.ncols, other.nrows);
    let mut out = SparseMatrix::new(self.nrows);
    for col in &other.cols {
      let mut acc = vec![0i64; self.nrows];
      for &(k, v) in col {
        for &(r, w) in &self.cols[k] {
          acc[r] += v * w;
        }
      }
      out.push_col(acc.into_iter().enumerate().filter(|e| e.1 != 0).collect());
    }
    out
  }

  pub fn is_zero(&self) -> bool { self.cols.iter().all(|c| c.is_empty()) }

  pub fn rank(&self, field: FieldSpec) -> usize {
    match field {
      FieldSpec::Prime { p } => {
        let fp = Fp::new(p);
        let mut ech = ModEchelon::new(p, self.nrows);
        for col in &self.cols {
          if ech.rank() == self.nrows {
            break;
          }
          ech.insert(col.iter().map(|&(r, v)| (r, fp.from_i64(v))));
        }
        ech.rank()
      }
      FieldSpec::Rational => rational_rank(self.nrows, self.cols.iter().map(|c| c.as_slice())),
    }
  }
}

/// Incremental row echelon form over `F_p`. Stored rows are sparse, with
/// their pivot (leading column) normalized to one.
#[derive(Clone, Debug)]
pub struct ModEchelon {
  fp: Fp,
  ncols: usize,
  rows: Vec<Vec<(u32, u64)>>,
  pivot_row: Vec<u32>,
  acc: Vec<u64>,
}

const NO_PIVOT: u32 = u32::MAX;

impl ModEchelon {
  pub fn new(p: u64, ncols: usize) -> Self {
    ModEchelon { fp: Fp::new(p), ncols, rows: Vec::new(), pivot_row: vec![NO_PIVOT; ncols], acc: vec![0; ncols] }
  }

  pub fn rank(&self) -> usize { self.rows.len() }

  pub fn ncols(&self) -> usize { self.ncols }

  pub fn is_full(&self) -> bool { self.rows.len() == self.ncols }

  /// Loads `entries` into the accumulator and reduces until the first
  /// non-pivot nonzero column. Returns `(lo, hi, c)`; `c > hi` means zero.
  fn reduce<I: IntoIterator<Item = (usize, u64)>>(&mut self, entries: I) -> Option<(usize, usize, usize)> {
    let fp = self.fp;
    let mut lo = usize::MAX;
    let mut hi = 0;
    for (c, v) in entries {
      if v == 0 {
        continue;
      }
      self.acc[c] = fp.add(self.acc[c], v);
      lo = lo.min(c);
      hi = hi.max(c);
    }
    if lo == usize::MAX {
      return None;
    }
    let mut c = lo;
    while c <= hi {
      let a = self.acc[c];
      if a != 0 {
        let pr = self.pivot_row[c];
        if pr == NO_PIVOT {
          break;
        }
        for &(col, val) in &self.rows[pr as usize] {
          let col = col as usize;
          self.acc[col] = fp.sub(self.acc[col], fp.mul(a, val));
          hi = hi.max(col);
        }
      }
      c += 1;
    }
    Some((lo, hi, c))
  }

  /// Adds a vector given as `(column, value)` pairs with values already
  /// reduced mod `p`; duplicate columns are summed. Returns whether the rank grew.
  pub fn insert<I: IntoIterator<Item = (usize, u64)>>(&mut self, entries: I) -> bool {
    let Some((lo, hi, c)) = self.reduce(entries) else { return false };
    if c > hi {
      self.acc[lo..=hi].fill(0);
      return false;
    }
    let inv = self.fp.inv(self.acc[c]);
    let mut row = Vec::new();
    for col in c..=hi {
      let x = self.acc[col];
      if x != 0 {
        row.push((col as u32, self.fp.mul(x, inv)));
      }
    }
    self.acc[lo..=hi].fill(0);
    self.pivot_row[c] = self.rows.len() as u32;
    self.rows.push(row);
    true
  }

  /// Pivot columns in insertion order.
  pub fn pivots(&self) -> Vec<usize> { self.rows.iter().map(|r| r[0].0 as usize).collect() }

  /// True if `entries` lies in the current row space.
  pub fn contains<I: IntoIterator<Item = (usize, u64)>>(&mut self, entries: I) -> bool {
    let Some((lo, hi, c)) = self.reduce(entries) else { return true };
    self.acc[lo..=hi].fill(0);
    c > hi
  }
}

/// Rank over `F_p` of the vectors given as sparse `(column, value)` lists.
pub fn mod_rank<'a, I>(p: u64, ncols: usize, vectors: I) -> usize
where
  I: IntoIterator<Item = &'a [(usize, u64)]>,
{
  let mut ech = ModEchelon::new(p, ncols);
  for v in vectors {
    if ech.is_full() {
      break;
    }
    ech.insert(v.iter().copied());
  }
  ech.rank()
}

trait Exact: Clone + PartialEq + std::fmt::Debug {
  fn from_i64(v: i64) -> Self;
  fn is_zero(&self) -> bool;
  fn is_unit(&self) -> bool;
  fn mul(&self, o: &Self) -> Option<Self>;
  fn sub(&self, o: &Self) -> Option<Self>;
  fn gcd(&self, o: &Self) -> Self;
  fn div_exact(&self, o: &Self) -> Self;
  fn neg(&self) -> Self;
  fn is_negative(&self) -> bool;
}

impl Exact for i128 {
  fn from_i64(v: i64) -> Self { v as i128 }
  fn is_zero(&self) -> bool { *self == 0 }
  fn is_unit(&self) -> bool { *self == 1 || *self == -1 }
  fn mul(&self, o: &Self) -> Option<Self> { self.checked_mul(*o) }
  fn sub(&self, o: &Self) -> Option<Self> { self.checked_sub(*o) }
  fn gcd(&self, o: &Self) -> Self { Integer::gcd(self, o) }
  fn div_exact(&self, o: &Self) -> Self { self / o }
  fn neg(&self) -> Self { -self }
  fn is_negative(&self) -> bool { *self < 0 }
}

impl Exact for BigInt {
  fn from_i64(v: i64) -> Self { BigInt::from(v) }
  fn is_zero(&self) -> bool { Zero::is_zero(self) }
  fn is_unit(&self) -> bool { self.abs().is_one() }
  fn mul(&self, o: &Self) -> Option<Self> { Some(self * o) }
  fn sub(&self, o: &Self) -> Option<Self> { Some(self - o) }
  fn gcd(&self, o: &Self) -> Self { Integer::gcd(self, o) }
  fn div_exact(&self, o: &Self) -> Self { self / o }
  fn neg(&self) -> Self { -self.clone() }
  fn is_negative(&self) -> bool { Signed::is_negative(self) }
}

/// Fraction-free incremental elimination; `None` on `i128` overflow.
fn exact_rank<T: Exact>(ncols: usize, vectors: &[&[(usize, i64)]]) -> Option<usize> {
  // pivot column -> row with leading entry at that column, content-free
  let mut rows: Vec<Option<Vec<(usize, T)>>> = vec![None; ncols];
  let mut rank = 0;
  for v in vectors {
    if rank == ncols {
      break;
    }
    let mut cur: Vec<(usize, T)> =
      v.iter().filter(|e| e.1 != 0).map(|&(c, x)| (c, T::from_i64(x))).collect();
    cur.sort_by_key(|e| e.0);
    merge_duplicates(&mut cur)?;
    loop {
      let Some((lead, b)) = cur.first().cloned() else { break };
      let Some(row) = &rows[lead] else {
        normalize(&mut cur);
        rows[lead] = Some(cur);
        rank += 1;
        break;
      };
      let a = row[0].1.clone();
      // cur <- a*cur - b*row, scaled down when a is a unit
      let (ka, kb) = if a.is_unit() {
        (T::from_i64(1), if a.is_negative() { b.neg() } else { b })
      } else {
        let g = a.gcd(&b);
        (a.div_exact(&g), b.div_exact(&g))
      };
      cur = combine(&cur, &ka, row, &kb)?;
      normalize(&mut cur);
    }
  }
  Some(rank)
}

fn merge_duplicates<T: Exact>(v: &mut Vec<(usize, T)>) -> Option<()> {
  let mut out: Vec<(usize, T)> = Vec::with_capacity(v.len());
  for (c, x) in v.drain(..) {
    match out.last_mut() {
      Some(last) if last.0 == c => {
        last.1 = last.1.sub(&x.neg())?;
      }
      _ => out.push((c, x)),
    }
  }
  out.retain(|e| !e.1.is_zero());
  *v = out;
  Some(())
}

fn combine<T: Exact>(x: &[(usize, T)], kx: &T, y: &[(usize, T)], ky: &T) -> Option<Vec<(usize, T)>> {
  let mut out = Vec::with_capacity(x.len() + y.len());
  let (mut i, mut j) = (0, 0);
  while i < x.len() || j < y.len() {
    let cx = x.get(i).map_or(usize::MAX, |e| e.0);
    let cy = y.get(j).map_or(usize::MAX, |e| e.0);
    let (c, val) = if cx < cy {
      i += 1;
      (cx, x[i - 1].1.mul(kx)?)
    } else if cy < cx {
      j += 1;
      (cy, T::from_i64(0).sub(&y[j - 1].1.mul(ky)?)?)
    } else {
      i += 1;
      j += 1;
      (cx, x[i - 1].1.mul(kx)?.sub(&y[j - 1].1.mul(ky)?)?)
    };
    if !val.is_zero() {
      out.push((c, val));
    }
  }
  Some(out)
}

fn normalize<T: Exact>(v: &mut [(usize, T)]) {
  let Some(first) = v.first() else { return };
  let mut g = first.1.clone();
  for (_, x) in v.iter().skip(1) {
    if g.is_unit() {
      break;
    }
    g = g.gcd(x);
  }
  if !g.is_unit() && !g.is_zero() {
    for e in v.iter_mut() {
      e.1 = e.1.div_exact(&g);
    }
  }
}

/// Rank over `ℚ` of integer vectors of length `ncols`.
pub fn rational_rank<'a, I>(ncols: usize, vectors: I) -> usize
where
  I: IntoIterator<Item = &'a [(usize, i64)]>,
{
  let vectors: Vec<&[(usize, i64)]> = vectors.into_iter().collect();
  exact_rank::<i128>(ncols, &vectors).unwrap_or_else(|| {
    log::debug!("i128 overflow in exact elimination, retrying with big integers");
    exact_rank::<BigInt>(ncols, &vectors).expect("big integers do not overflow")
  })
}

/// Plain Gaussian elimination over exact rationals, a slow reference.
#[cfg(test)]
pub fn dense_rational_rank(m: &[Vec<i64>]) -> usize {
  use num_rational::BigRational;
  let mut a: Vec<Vec<BigRational>> =
    m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect();
  let rows = a.len();
  let cols = a.first().map_or(0, |r| r.len());
  let mut rank = 0;
  for c in 0..cols {
    let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
    a.swap(rank, p);
    for r in 0..rows {
      if r != rank && !a[r][c].is_zero() {
        let f = &a[r][c] / &a[rank][c];
        for k in c..cols {
          let t = &f * &a[rank][k];
          a[r][k] -= t;
        }
      }
    }
    rank += 1;
  }
  rank
}

#[cfg(test)]
mod tests {
  use super::*;

  #[test]
  fn primality() {
    assert!(is_prime(DEFAULT_PRIME));
    assert!(is_prime(2));
    assert!(!is_prime(1));
    assert!(!is_prime(561));
    assert!(!is_prime(DEFAULT_PRIME * 3));
    assert!(FieldSpec::prime(10).is_err());
  }

  #[test]
  fn small_ranks_agree() {
    let mut m = SparseMatrix::new(3);
    m.push_col(vec![(0, 1), (1, 2)]);
    m.push_col(vec![(0, 2), (1, 4)]);
    m.push_col(vec![(2, 5)]);
    assert_eq!(m.rank(FieldSpec::Rational), 2);
    assert_eq!(m.rank(FieldSpec::default_prime()), 2);
    // rank drops modulo 3
    let mut n = SparseMatrix::new(2);
    n.push_col(vec![(0, 1), (1, 1)]);
    n.push_col(vec![(0, 1), (1, 4)]);
    assert_eq!(n.rank(FieldSpec::Rational), 2);
    assert_eq!(n.rank(FieldSpec::prime(3).unwrap()), 1);
  }

  #[test]
  fn overflow_falls_back_to_big_integers() {
    // rows with huge entries force i128 overflow in products
    let big = i64::MAX / 3;
    let vecs: Vec<Vec<(usize, i64)>> = vec![
      vec![(0, big), (1, big - 1), (2, 7)],
      vec![(0, big - 2), (1, big), (2, 11)],
      vec![(0, 2 * big - 2), (1, 2 * big - 1), (2, 18)],
    ];
    let refs: Vec<&[(usize, i64)]> = vecs.iter().map(|v| v.as_slice()).collect();
    let dense: Vec<Vec<i64>> =
      vecs.iter().map(|v| (0..3).map(|c| v.iter().find(|e| e.0 == c).map_or(0, |e| e.1)).collect()).collect();
    assert_eq!(rational_rank(3, refs.clone()), dense_rational_rank(&dense));
    assert_eq!(exact_rank::<BigInt>(3, &refs), Some(dense_rational_rank(&dense)));
  }

  #[test]
  fn echelon_membership() {
    let mut e = ModEchelon::new(7, 3);
    assert!(e.insert([(0, 1), (1, 1)]));
    assert!(e.contains([(0, 3), (1, 3)]));
    assert!(!e.contains([(2, 1)]));
    assert!(!e.insert([(0, 2), (1, 2)]));
    assert!(e.insert([(1, 1), (2, 1)]));
    assert_eq!(e.pivots(), vec![0, 1]);
  }
}
