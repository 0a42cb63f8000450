//! Color-preserving isomorphism by backtracking. Meant for small complexes.

use std::collections::HashSet;

use crate::colored::ColoredComplex;
use crate::face::Face;

/// True if some vertex bijection maps facets onto facets and preserves colors.
pub fn isomorphic(a: &ColoredComplex, b: &ColoredComplex) -> bool {
  find_isomorphism(a, b).is_some()
}

/// A color-preserving facet bijection `a → b`, as a vertex map.
pub fn find_isomorphism(a: &ColoredComplex, b: &ColoredComplex) -> Option<Vec<usize>> {
  let (ca, cb) = (a.complex(), b.complex());
  let n = ca.vertex_count();
  if n != cb.vertex_count() || ca.facets().len() != cb.facets().len() || ca.f_vector() != cb.f_vector() {
    return None;
  }
  let invariant = |c: &ColoredComplex, v: usize| {
    let deg = c.complex().facets().iter().filter(|f| f.contains(v)).count();
    (c.coloring().0[v], deg)
  };
  let inv_a: Vec<_> = (0..n).map(|v| invariant(a, v)).collect();
  let inv_b: Vec<_> = (0..n).map(|v| invariant(b, v)).collect();
  let mut sa = inv_a.clone();
  let mut sb = inv_b.clone();
  sa.sort_unstable();
  sb.sort_unstable();
  if sa != sb {
    return None;
  }
  let edges = |c: &ColoredComplex| -> Vec<Face> {
    let mut adj = vec![Face::EMPTY; n];
    for e in c.complex().faces_of_size(2) {
      let vs = e.to_vec();
      adj[vs[0]] = adj[vs[0]].with(vs[1]);
      adj[vs[1]] = adj[vs[1]].with(vs[0]);
    }
    adj
  };
  let (adj_a, adj_b) = (edges(a), edges(b));
  let target: HashSet<Face> = cb.facets().iter().copied().collect();
  let mut map = vec![usize::MAX; n];
  let mut used = Face::EMPTY;

  fn rec(
    v: usize,
    map: &mut Vec<usize>,
    used: &mut Face,
    ctx: &(&[(usize, usize)], &[(usize, usize)], &[Face], &[Face], &[Face], &HashSet<Face>),
  ) -> bool {
    let (inv_a, inv_b, adj_a, adj_b, facets_a, target) = *ctx;
    let n = map.len();
    if v == n {
      return facets_a.iter().all(|f| target.contains(&Face::from_indices(f.iter().map(|u| map[u]))));
    }
    for w in 0..n {
      if used.contains(w) || inv_a[v] != inv_b[w] {
        continue;
      }
      let consistent = (0..v).all(|u| adj_a[v].contains(u) == adj_b[w].contains(map[u]));
      if !consistent {
        continue;
      }
      map[v] = w;
      *used = used.with(w);
      if rec(v + 1, map, used, ctx) {
        return true;
      }
      *used = used.without(w);
      map[v] = usize::MAX;
    }
    false
  }

  let ctx = (&inv_a[..], &inv_b[..], &adj_a[..], &adj_b[..], ca.facets(), &target);
  rec(0, &mut map, &mut used, &ctx).then_some(map)
}
