// Flag f- and h-vectors of a balanced complex, and rank selection.

use bglb::generators::{barycentric_subdivision, simplex_boundary};
use bglb::inequalities::rank_selected_h;
use bglb::ColorSet;

pub fn run_example() -> bglb::Result<()> {
  // sd(∂Δ^3): the flag complex of proper faces of a tetrahedron
  let base = simplex_boundary(3)?;
  let sd = barycentric_subdivision(base.complex())?;
  let d = sd.palette();
  let (flag_f, flag_h) = sd.flag_vectors();

  for (s, f) in flag_f.entries() {
    println!("f_{s} = {f:<4} h_{s} = {}", flag_h.get(s));
  }

  // flag h sums to the ordinary h-vector and is symmetric under S ↦ [d]∖S
  let h = sd.h_vector();
  for i in 0..=d {
    assert_eq!(flag_h.sum_by_size(i), h.get(i as i64));
  }
  for (s, v) in flag_h.entries() {
    assert_eq!(v, flag_h.get(s.complement_in(d)));
  }

  let by_t = rank_selected_h(&sd);
  let t = ColorSet::from_colors([1, 3]);
  let sel = sd.rank_select(t);
  println!("Δ_{t}: {} vertices, h = {:?}", sel.complex().vertex_count(), by_t[t.0 as usize].0);
  assert_eq!(by_t[t.0 as usize], sel.h_vector());
  Ok(())
}

#[allow(dead_code)]
fn main() -> bglb::Result<()> { run_example() }
