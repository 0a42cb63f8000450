use thiserror::Error;

/// Errors raised by constructors and operations of this crate.
#[derive(Debug, Error)]
pub enum Error {
  #[error("vertex {vertex} is outside 1..={n}")]
  VertexOutOfRange { vertex: usize, n: usize },
  #[error("facet list is empty")]
  EmptyFacetList,
  #[error("vertex {0} is not covered by any facet")]
  UncoveredVertex(usize),
  #[error("complexes with more than {max} vertices are not supported (got {got})")]
  TooManyVertices { got: usize, max: usize },
  #[error("{0:?} is not a face of the complex")]
  NotAFace(Vec<usize>),
  #[error("coloring has length {got}, expected {expected}")]
  ColoringLength { got: usize, expected: usize },
  #[error("color {color} is outside 1..={palette}")]
  ColorOutOfRange { color: usize, palette: usize },
  #[error("coloring is improper: edge {0:?} is monochromatic")]
  ImproperColoring([usize; 2]),
  #[error("complex is not balanced: {0}")]
  NotBalanced(String),
  #[error("complex is not pure")]
  NotPure,
  #[error("invalid parameter: {0}")]
  InvalidParameter(String),
  #[error("degree {0} is out of range")]
  DegreeOutOfRange(i64),
  #[error("linear form is supported on colors outside the palette")]
  FormSupport,
  #[error("h-vector has length {got}, expected {expected}")]
  LengthMismatch { got: usize, expected: usize },
  #[error("no allowed vertices for {0} random forms")]
  NoAllowedVertices(usize),
  #[error("generic draw failed to give a linear system of parameters after {0} attempts")]
  GenericityFailure(usize),
  #[error("{0} is not prime")]
  NotPrime(u64),
  #[error(transparent)]
  Io(#[from] std::io::Error),
  #[error(transparent)]
  Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
