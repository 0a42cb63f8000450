// Runs the verification battery on a few instances and prints a summary.

use bglb::battery::{run_specs, BatteryConfig, CheckKind};
use bglb::generators::FamilySpec;

pub fn run_example() -> bglb::Result<()> {
  let specs = [FamilySpec::cross(3), FamilySpec::stacked_cross(4, 2, 0), FamilySpec::barycentric(FamilySpec::simplex(2))];
  let cfg = BatteryConfig { seeds: vec![1, 2], ..BatteryConfig::default() };
  let report = run_specs(&specs, &cfg)?;
  print!("{}", report.to_text());
  assert_eq!(report.summary.fail, 0);
  assert!(report.summary.pass > 0);

  let only = BatteryConfig::with_checks(&[CheckKind::Bglb, CheckKind::FlagSymmetry]);
  let small = run_specs(&specs[..1], &only)?;
  let names: Vec<&str> = small.instances[0].checks.iter().map(|c| c.check.as_str()).collect();
  println!("selected checks on cross-3: {names:?}");
  assert!(names.contains(&"bglb"));
  Ok(())
}

#[allow(dead_code)]
fn main() -> bglb::Result<()> { run_example() }
