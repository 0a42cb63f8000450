//! Random corpus for the brute-force comparisons.

use std::collections::BTreeSet;

use bglb::colored::{ColoredComplex, Coloring};
use bglb::complex::SimplicialComplex;
use bglb::face::{ColorSet, Face};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::oracle::{self, Set};

/// Random properly colored complex: `palette` color classes of `per_color`
/// vertices, facets choose one vertex per color and drop each color with
/// probability `drop`. Labels are `1..=n` after removing uncovered vertices.
pub fn random_colored(rng: &mut ChaCha8Rng, palette: usize, per_color: usize, facets: usize, drop: f64) -> ColoredComplex {
  let n = palette * per_color;
  let color_of = |v: usize| (v - 1) / per_color + 1;
  let mut lists: Vec<Vec<usize>> = Vec::with_capacity(facets);
  for _ in 0..facets {
    let mut f = Vec::new();
    for c in 0..palette {
      if !rng.gen_bool(drop) {
        f.push(c * per_color + rng.gen_range(1..=per_color));
      }
    }
    if f.is_empty() {
      f.push(rng.gen_range(1..=n));
    }
    lists.push(f);
  }
  let shrunk = SimplicialComplex::from_facets_shrinking(&lists, n).unwrap();
  let colors: Vec<usize> = shrunk.labels().iter().map(|&l| color_of(l)).collect();
  let plain = SimplicialComplex::from_facets(&shrunk.facet_lists(), shrunk.vertex_count()).unwrap();
  ColoredComplex::new(plain, Coloring(colors), palette).unwrap()
}

/// Uncolored random complex with labels `1..=n`.
pub fn random_plain(rng: &mut ChaCha8Rng, n: usize, facets: usize, max_size: usize) -> SimplicialComplex {
  let c = super::random_complex(rng, n, facets, max_size);
  SimplicialComplex::from_facets(&c.facet_lists(), c.vertex_count()).unwrap()
}

fn to_face(s: &Set) -> Face { Face::from_indices(s.iter().map(|v| v - 1)) }

/// Faces of a subcomplex expressed in the parent's 1-based labels.
fn parent_faces(sub: &SimplicialComplex) -> BTreeSet<Set> { oracle::faces_in_parent_labels(sub) }

#[derive(Debug, Default)]
pub struct Agreement {
  pub complexes: usize,
  pub comparisons: usize,
  pub mismatches: Vec<String>,
}

impl Agreement {
  fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
    self.comparisons += 1;
    if !ok {
      self.mismatches.push(what());
    }
  }
}

/// Compares f/h-vectors, links, stars, flag vectors, rank selections and
/// their h-vectors with the naive implementations on `count` random
/// complexes with at most 12 vertices.
pub fn oracle_agreement(count: u64) -> Agreement {
  let mut out = Agreement::default();
  for seed in 0..count {
    let mut rng = super::rng(0xa11ce + seed);
    let pure = seed % 3 == 0;
    let palette = rng.gen_range(1..=if pure { 4 } else { 5 });
    let per = rng.gen_range(1..=(12 / palette).min(if pure { 3 } else { 4 }));
    let facets = rng.gen_range(1..=10);
    let colored = random_colored(&mut rng, palette, per, facets, if pure { 0.0 } else { 0.25 });
    let (n, facets) = (rng.gen_range(1..=12), rng.gen_range(1..=8));
    let plain = random_plain(&mut rng, n, facets, 5);
    out.complexes += 2;
    compare_plain(&mut out, &plain, seed);
    compare_plain(&mut out, colored.complex(), seed);
    compare_colored(&mut out, &colored, seed);
  }
  out
}

fn compare_plain(out: &mut Agreement, c: &SimplicialComplex, seed: u64) {
  let f: Vec<i64> = c.f_vector().0.iter().map(|&x| x as i64).collect();
  let of = oracle::f_vector(c);
  out.check(f == of, || format!("seed {seed}: f {f:?} vs {of:?}"));
  let h = c.h_vector().0;
  let oh = oracle::h_from_f(&of);
  out.check(h == oh, || format!("seed {seed}: h {h:?} vs {oh:?}"));
  for face in oracle::faces(c) {
    let lk = parent_faces(&c.link(to_face(&face)).unwrap());
    let olk = oracle::link(c, &face);
    out.check(lk == olk, || format!("seed {seed}: link of {face:?}"));
    let st = parent_faces(&c.star(to_face(&face)).unwrap());
    out.check(st == oracle::star(c, &face), || format!("seed {seed}: star of {face:?}"));
  }
}

fn compare_colored(out: &mut Agreement, c: &ColoredComplex, seed: u64) {
  let (ff, fh) = c.flag_vectors();
  let of = oracle::flag_f(c);
  let oh = oracle::flag_h(c);
  let d = c.palette();
  for s in ColorSet::all_subsets(d) {
    out.check(ff.get(s) == of[s.0 as usize], || format!("seed {seed}: flag f at {s}"));
    out.check(fh.get(s) == oh[s.0 as usize], || format!("seed {seed}: flag h at {s}"));
    let t: Set = s.colors().into_iter().collect();
    let sel = c.rank_select(s);
    let want = oracle::rank_selected(c, &t);
    out.check(parent_faces(sel.complex()) == want, || format!("seed {seed}: rank selection {s}"));
    let mut fsel = vec![0i64; t.len() + 1];
    for face in &want {
      fsel[face.len()] += 1;
    }
    let h_sel = sel.h_vector().0;
    out.check(h_sel == oracle::h_from_f(&fsel), || format!("seed {seed}: h of rank selection {s}"));
  }
  for face in oracle::faces(c.complex()) {
    let lk = c.link(to_face(&face)).unwrap();
    let olk = oracle::link(c.complex(), &face);
    out.check(parent_faces(lk.complex()) == olk, || format!("seed {seed}: colored link of {face:?}"));
    let rest: Set = (1..=d).filter(|k| !oracle::colors(c, &face).contains(k)).collect();
    let ok = lk.complex().labels().iter().zip(&lk.coloring().0).all(|(&l, &k)| {
      let parent_color = c.coloring().0[l - 1];
      rest.iter().position(|&r| r == parent_color) == Some(k - 1)
    });
    out.check(ok && lk.palette() == rest.len(), || format!("seed {seed}: link palette of {face:?}"));
  }
}
