//! JSON interchange format for (colored) complexes:
//! `{"n": 6, "facets": [[1,3,5], ...], "coloring": [1,1,2,2,3,3], "name": "..."}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::colored::{ColoredComplex, Coloring};
use crate::complex::SimplicialComplex;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
  pub n: usize,
  pub facets: Vec<Vec<usize>>,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub coloring: Option<Vec<usize>>,
  #[serde(default)]
  pub name: String,
}

impl ComplexFile {
  pub fn from_colored(name: &str, complex: &ColoredComplex) -> Self {
    ComplexFile {
      n: complex.complex().vertex_count(),
      facets: complex.complex().facet_lists(),
      coloring: Some(complex.coloring().0.clone()),
      name: name.to_string(),
    }
  }

  pub fn from_complex(name: &str, complex: &SimplicialComplex) -> Self {
    ComplexFile { n: complex.vertex_count(), facets: complex.facet_lists(), coloring: None, name: name.to_string() }
  }

  pub fn complex(&self) -> Result<SimplicialComplex> {
    let mut facets = self.facets.clone();
    for f in &mut facets {
      f.sort_unstable();
      f.dedup();
    }
    SimplicialComplex::from_facets(&facets, self.n)
  }

  /// The colored complex; the palette is the largest color used.
  /// Returns `Ok(None)` when the file carries no coloring.
  pub fn colored(&self) -> Result<Option<ColoredComplex>> {
    let complex = self.complex()?;
    match &self.coloring {
      None => Ok(None),
      Some(c) => ColoredComplex::with_max_palette(complex, Coloring(c.clone())).map(Some),
    }
  }

  pub fn read(path: &Path) -> Result<Self> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
  }

  pub fn to_json(&self) -> String { serde_json::to_string_pretty(self).expect("plain data serializes") }

  pub fn write(&self, path: &Path) -> Result<()> {
    std::fs::write(path, self.to_json() + "\n")?;
    Ok(())
  }
}
