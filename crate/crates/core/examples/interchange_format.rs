// Round-trips a colored complex through the JSON interchange format.

use bglb::generators::{cross_polytope, suspension};
use bglb::io::ComplexFile;
use bglb::iso::isomorphic;

pub fn run_example() -> bglb::Result<()> {
  let c = suspension(&cross_polytope(2)?)?;
  let file = ComplexFile::from_colored("susp(square)", &c);
  println!("{}", file.to_json());

  let dir = std::env::temp_dir().join(format!("bglb-example-{}", std::process::id()));
  std::fs::create_dir_all(&dir)?;
  let path = dir.join("susp.json");
  file.write(&path)?;
  let back = ComplexFile::read(&path)?;
  std::fs::remove_dir_all(&dir)?;

  let restored = back.colored()?.expect("file carries a coloring");
  assert_eq!(back, file);
  assert!(isomorphic(&c, &restored));

  // a file without a coloring still loads as a plain complex
  let plain: ComplexFile = serde_json::from_str(r#"{"n": 3, "facets": [[1, 2], [2, 3], [1, 3]]}"#)?;
  assert!(plain.colored()?.is_none());
  assert_eq!(plain.complex()?.f_vector().0, vec![1, 3, 3]);
  Ok(())
}

#[allow(dead_code)]
fn main() -> bglb::Result<()> { run_example() }
