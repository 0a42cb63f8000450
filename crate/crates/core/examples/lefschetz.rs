// Injectivity of ×ω^{t−2i} on rank selections, certified by four ranks.

use bglb::battery::generic_draw;
use bglb::generators::cross_polytope;
use bglb::linalg::FieldSpec;
use bglb::sr::{lefschetz_injective, Engine};
use bglb::ColorSet;

pub fn run_example() -> bglb::Result<()> {
  let c = cross_polytope(4)?;
  let p = FieldSpec::default_prime();
  for t in [ColorSet::from_colors([1, 2, 3]), ColorSet::full(4)] {
    let sel = c.rank_select(t);
    let draw = generic_draw(&sel, p, 1, t.0 as u64)?;
    for i in 0..=sel.palette() / 2 {
      let cert = lefschetz_injective(&sel, &draw.forms, &draw.omega, i, p, Engine::Auto)?;
      let [r1, r2, r3, r4] = cert.ranks;
      println!(
        "T={t} i={i}: degree {} → {}, ranks [{r1}, {r2}, {r3}, {r4}], injective {}",
        cert.from_degree, cert.to_degree, cert.injective
      );
      assert!(cert.injective);
      assert_eq!(cert.source_dim(), cert.image_dim());

      let macaulay = lefschetz_injective(&sel, &draw.forms, &draw.omega, i, p, Engine::Macaulay)?;
      assert_eq!(macaulay.injective, cert.injective);
    }
  }
  Ok(())
}

#[allow(dead_code)]
fn main() -> bglb::Result<()> { run_example() }
