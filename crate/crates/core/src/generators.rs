//! Balanced sphere families: cross-polytope boundaries, their connected sums,
//! barycentric subdivisions and suspensions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::colored::{ColoredComplex, Coloring};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};
use crate::io::ComplexFile;

/// Largest supported cross-polytope dimension.
pub const MAX_CROSS_DIM: usize = 10;

/// Boundary of the `d`-dimensional cross-polytope.
///
/// Vertex `2i+1` and `2i+2` (1-based) form the `i`-th antipodal pair and both
/// get color `i+1`.
pub fn cross_polytope(d: usize) -> Result<ColoredComplex> {
  if d == 0 || d > MAX_CROSS_DIM {
    return Err(Error::InvalidParameter(format!("cross-polytope dimension {d} outside 1..={MAX_CROSS_DIM}")));
  }
  let facets: Vec<Face> =
    (0..1u32 << d).map(|choice| Face::from_indices((0..d).map(|i| 2 * i + (choice >> i & 1) as usize))).collect();
  let complex = SimplicialComplex::from_faces_unchecked(2 * d, facets, (1..=2 * d).collect());
  let coloring = Coloring((0..2 * d).map(|v| v / 2 + 1).collect());
  ColoredComplex::new(complex, coloring, d)
}

/// Boundary of the `d`-simplex: `d+1` vertices, each with its own color.
/// Not balanced; used as a base for barycentric subdivision.
pub fn simplex_boundary(d: usize) -> Result<ColoredComplex> {
  if d == 0 || d + 1 > MAX_VERTICES {
    return Err(Error::InvalidParameter(format!("simplex dimension {d} out of range")));
  }
  let all = Face::from_indices(0..=d);
  let facets: Vec<Face> = (0..=d).map(|v| all.without(v)).collect();
  let complex = SimplicialComplex::from_faces_unchecked(d + 1, facets, (1..=d + 1).collect());
  ColoredComplex::new(complex, Coloring((1..=d + 1).collect()), d + 1)
}

/// Connected sum of `m` copies of the `d`-cross-polytope boundary, glued
/// along facets with color-preserving identification.
///
/// With `seed == 0` the lexicographically smallest facet of the current
/// sphere is used at every step; any other seed picks facets at random.
pub fn stacked_cross_polytope(d: usize, m: usize, seed: u64) -> Result<ColoredComplex> {
  if d < 2 || m == 0 {
    return Err(Error::InvalidParameter(format!("stacked cross-polytope needs d >= 2 and m >= 1 (got d={d}, m={m})")));
  }
  let n = 2 * d + (m - 1) * d;
  if n > MAX_VERTICES {
    return Err(Error::TooManyVertices { got: n, max: MAX_VERTICES });
  }
  let base = cross_polytope(d)?;
  let mut colors: Vec<usize> = base.coloring().0.clone();
  let mut facets: Vec<Face> = base.complex().facets().to_vec();
  let mut rng = ChaCha8Rng::seed_from_u64(seed);
  for _ in 1..m {
    facets.sort();
    let pick = if seed == 0 { 0 } else { rng.gen_range(0..facets.len()) };
    let glued = facets.remove(pick);
    // vertex of the glued facet carrying each color
    let mut by_color = vec![usize::MAX; d];
    for v in glued.iter() {
      by_color[colors[v] - 1] = v;
    }
    let fresh: Vec<usize> = (0..d).map(|i| colors.len() + i).collect();
    for i in 0..d {
      colors.push(i + 1);
    }
    // all transversals of the new copy except the glued facet itself
    for choice in 1..1u32 << d {
      facets.push(Face::from_indices((0..d).map(|i| if choice >> i & 1 == 1 { fresh[i] } else { by_color[i] })));
    }
  }
  let n = colors.len();
  let complex = SimplicialComplex::from_faces_unchecked(n, facets, (1..=n).collect());
  ColoredComplex::new(complex, Coloring(colors), d)
}

/// Barycentric subdivision, colored by face cardinality.
///
/// New vertices are the nonempty faces in (size, lex) order, labelled `1..`.
pub fn barycentric_subdivision(complex: &SimplicialComplex) -> Result<ColoredComplex> {
  if complex.dim() < 0 {
    return Err(Error::InvalidParameter("cannot subdivide the empty complex".into()));
  }
  let faces: Vec<Face> = complex.faces().iter().copied().filter(|f| !f.is_empty()).collect();
  if faces.len() > MAX_VERTICES {
    return Err(Error::TooManyVertices { got: faces.len(), max: MAX_VERTICES });
  }
  let index: std::collections::HashMap<Face, usize> = faces.iter().enumerate().map(|(i, f)| (*f, i)).collect();
  let mut chains = Vec::new();
  for facet in complex.facets() {
    let verts = facet.to_vec();
    for_each_permutation(&verts, &mut |perm| {
      let mut acc = Face::EMPTY;
      let mut chain = Face::EMPTY;
      for &v in perm {
        acc = acc.with(v);
        chain = chain.with(index[&acc]);
      }
      chains.push(chain);
    });
  }
  let n = faces.len();
  let sd = SimplicialComplex::from_faces_unchecked(n, chains, (1..=n).collect());
  let coloring = Coloring(faces.iter().map(|f| f.len()).collect());
  ColoredComplex::new(sd, coloring, complex.rank())
}

fn for_each_permutation(items: &[usize], visit: &mut dyn FnMut(&[usize])) {
  fn rec(buf: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == buf.len() {
      visit(buf);
      return;
    }
    for i in k..buf.len() {
      buf.swap(k, i);
      rec(buf, k + 1, visit);
      buf.swap(k, i);
    }
  }
  let mut buf = items.to_vec();
  rec(&mut buf, 0, visit);
}

/// Suspension: two new vertices with a fresh color `d+1`, each coned over the
/// whole complex.
pub fn suspension(complex: &ColoredComplex) -> Result<ColoredComplex> {
  let n = complex.complex().vertex_count();
  if n + 2 > MAX_VERTICES {
    return Err(Error::TooManyVertices { got: n + 2, max: MAX_VERTICES });
  }
  let (a, b) = (n, n + 1);
  let facets: Vec<Face> = complex.complex().facets().iter().flat_map(|f| [f.with(a), f.with(b)]).collect();
  let mut labels: Vec<usize> = complex.complex().labels().to_vec();
  let top = labels.iter().copied().max().unwrap_or(0);
  labels.extend([top + 1, top + 2]);
  let d = complex.palette();
  let mut colors = complex.coloring().0.clone();
  colors.extend([d + 1, d + 1]);
  let s = SimplicialComplex::from_faces_unchecked(n + 2, facets, labels);
  ColoredComplex::new(s, Coloring(colors), d + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
  Cross,
  StackedCross,
  Barycentric,
  Suspension,
  /// Boundary of a simplex (a base for barycentric subdivision).
  Simplex,
  File,
}

/// Serializable recipe for a test instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
  pub family: Family,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub dim: Option<usize>,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub count: Option<usize>,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub seed: Option<u64>,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub base: Option<Box<FamilySpec>>,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub path: Option<String>,
}

impl FamilySpec {
  pub fn new(family: Family) -> Self { FamilySpec { family, dim: None, count: None, seed: None, base: None, path: None } }

  pub fn cross(d: usize) -> Self { FamilySpec { dim: Some(d), ..Self::new(Family::Cross) } }

  pub fn simplex(d: usize) -> Self { FamilySpec { dim: Some(d), ..Self::new(Family::Simplex) } }

  pub fn stacked_cross(d: usize, m: usize, seed: u64) -> Self {
    FamilySpec { dim: Some(d), count: Some(m), seed: Some(seed), ..Self::new(Family::StackedCross) }
  }

  pub fn barycentric(base: FamilySpec) -> Self { FamilySpec { base: Some(Box::new(base)), ..Self::new(Family::Barycentric) } }

  pub fn suspension(base: FamilySpec) -> Self { FamilySpec { base: Some(Box::new(base)), ..Self::new(Family::Suspension) } }

  pub fn file(path: &str) -> Self { FamilySpec { path: Some(path.to_string()), ..Self::new(Family::File) } }

  /// Short human-readable name such as `sd(simplex-3)` or `stacked-4x2`.
  pub fn name(&self) -> String {
    let base = || self.base.as_ref().map(|b| b.name()).unwrap_or_else(|| "?".into());
    match self.family {
      Family::Cross => format!("cross-{}", self.dim.unwrap_or(0)),
      Family::Simplex => format!("simplex-{}", self.dim.unwrap_or(0)),
      Family::StackedCross => {
        let seed = self.seed.unwrap_or(0);
        let tail = if seed == 0 { String::new() } else { format!("-s{seed}") };
        format!("stacked-{}x{}{}", self.dim.unwrap_or(0), self.count.unwrap_or(1), tail)
      }
      Family::Barycentric => format!("sd({})", base()),
      Family::Suspension => format!("susp({})", base()),
      Family::File => self.path.clone().unwrap_or_default(),
    }
  }

  fn require_dim(&self) -> Result<usize> {
    match self.dim {
      Some(d) if d >= 1 => Ok(d),
      _ => Err(Error::InvalidParameter(format!("family {:?} needs dim >= 1", self.family))),
    }
  }

  fn require_base(&self) -> Result<&FamilySpec> {
    self.base.as_deref().ok_or_else(|| Error::InvalidParameter(format!("family {:?} needs a base", self.family)))
  }
}

/// Dispatches to the constructors above. Deterministic given the seed.
pub fn build(spec: &FamilySpec) -> Result<ColoredComplex> {
  match spec.family {
    Family::Cross => cross_polytope(spec.require_dim()?),
    Family::Simplex => simplex_boundary(spec.require_dim()?),
    Family::StackedCross => {
      let count = spec.count.unwrap_or(1);
      if count == 0 {
        return Err(Error::InvalidParameter("count must be >= 1".into()));
      }
      stacked_cross_polytope(spec.require_dim()?, count, spec.seed.unwrap_or(0))
    }
    Family::Barycentric => barycentric_subdivision(build(spec.require_base()?)?.complex()),
    Family::Suspension => suspension(&build(spec.require_base()?)?),
    Family::File => {
      let path = spec.path.as_deref().ok_or_else(|| Error::InvalidParameter("file family needs a path".into()))?;
      let file = ComplexFile::read(std::path::Path::new(path))?;
      file
        .colored()?
        .ok_or_else(|| Error::InvalidParameter(format!("{path} carries no coloring")))
    }
  }
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::iso::isomorphic;

  #[test]
  fn cross_small_cases() {
    let sq = cross_polytope(2).unwrap();
    assert_eq!(sq.complex().f_vector().0, vec![1, 4, 4]);
    let oct = cross_polytope(3).unwrap();
    assert_eq!(oct.complex().h_vector().0, vec![1, 3, 3, 1]);
    assert_eq!(cross_polytope(4).unwrap().complex().h_vector().0, vec![1, 4, 6, 4, 1]);
    assert!(cross_polytope(0).is_err());
    assert!(cross_polytope(11).is_err());
  }

  #[test]
  fn stacked_h_vectors() {
    assert_eq!(stacked_cross_polytope(4, 2, 0).unwrap().complex().h_vector().0, vec![1, 8, 12, 8, 1]);
    assert_eq!(stacked_cross_polytope(4, 3, 0).unwrap().complex().h_vector().0, vec![1, 12, 18, 12, 1]);
    assert_eq!(stacked_cross_polytope(3, 1, 0).unwrap(), cross_polytope(3).unwrap());
    assert!(stacked_cross_polytope(1, 2, 0).is_err());
    assert!(stacked_cross_polytope(3, 0, 0).is_err());
  }

  #[test]
  fn stacked_seeded_is_deterministic() {
    let a = stacked_cross_polytope(4, 3, 7).unwrap();
    let b = stacked_cross_polytope(4, 3, 7).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.complex().h_vector().0, vec![1, 12, 18, 12, 1]);
  }

  #[test]
  fn subdivisions() {
    let sd = barycentric_subdivision(simplex_boundary(3).unwrap().complex()).unwrap();
    assert_eq!(sd.complex().f_vector().0, vec![1, 14, 36, 24]);
    assert_eq!(sd.complex().h_vector().0, vec![1, 11, 11, 1]);
    assert!(sd.is_balanced());

    let edge = SimplicialComplex::from_facets(&[vec![1, 2]], 2).unwrap();
    let path = barycentric_subdivision(&edge).unwrap();
    assert_eq!(path.complex().vertex_count(), 3);
    assert_eq!(path.complex().facets().len(), 2);
    assert_eq!(path.palette(), 2);

    let hex = barycentric_subdivision(simplex_boundary(2).unwrap().complex()).unwrap();
    assert_eq!(hex.complex().h_vector().0, vec![1, 4, 1]);
  }

  #[test]
  fn suspensions() {
    let sq = cross_polytope(2).unwrap();
    let s = suspension(&sq).unwrap();
    assert!(isomorphic(&s, &cross_polytope(3).unwrap()));

    let pts = ColoredComplex::new(
      SimplicialComplex::from_facets(&[vec![1], vec![2]], 2).unwrap(),
      Coloring(vec![1, 1]),
      1,
    )
    .unwrap();
    assert!(isomorphic(&suspension(&pts).unwrap(), &sq));
  }

  #[test]
  fn build_dispatch() {
    assert_eq!(build(&FamilySpec::cross(3)).unwrap(), cross_polytope(3).unwrap());
    let sd = build(&FamilySpec::barycentric(FamilySpec::cross(2))).unwrap();
    assert_eq!(sd.complex().h_vector().0, vec![1, 6, 1]);
    assert_eq!(sd.complex().vertex_count(), 8);
    let s = build(&FamilySpec::suspension(FamilySpec::cross(3))).unwrap();
    assert!(isomorphic(&s, &cross_polytope(4).unwrap()));
    assert!(build(&FamilySpec::new(Family::Cross)).is_err());
    assert!(build(&FamilySpec::new(Family::Barycentric)).is_err());
  }

  #[test]
  fn spec_json_shape() {
    let spec = FamilySpec::barycentric(FamilySpec::cross(2));
    let text = serde_json::to_string(&spec).unwrap();
    assert_eq!(text, r#"{"family":"barycentric","base":{"family":"cross","dim":2}}"#);
    let back: FamilySpec = serde_json::from_str(r#"{"family":"stacked_cross","dim":4,"count":2,"seed":7}"#).unwrap();
    assert_eq!(back, FamilySpec::stacked_cross(4, 2, 7));
  }
}
