//! Command-line front end: `generate`, `compute` and `verify`.
//!
//! Exit codes: 0 on success (for `verify`, no failed check), 1 when some check
//! failed, 2 on invalid arguments, unreadable input or I/O errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::battery::{self, BatteryConfig, CheckKind};
use crate::colored::ColoredComplex;
use crate::error::{Error, Result};
use crate::face::ColorSet;
use crate::generators::{build, Family, FamilySpec};
use crate::homology::reduced_betti;
use crate::inequalities::balanced_g;
use crate::io::ComplexFile;
use crate::linalg::{FieldSpec, DEFAULT_PRIME};
use crate::sr::{colored_squarefree_vertices, mixed_lsop, quotient_hilbert_with, Engine};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "bglb", version, about = "Balanced simplicial spheres: generators, invariants and verification")]
pub struct Cli {
  #[command(subcommand)]
  pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
  /// Write a generated complex as JSON and print its f-, h- and g-vectors.
  Generate(GenerateArgs),
  /// Print invariants of a complex read from a file.
  Compute(ComputeArgs),
  /// Run checks and write a verification report.
  Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum FamilyArg {
  Cross,
  StackedCross,
  Barycentric,
  Suspension,
  Simplex,
  File,
}

impl From<FamilyArg> for Family {
  fn from(f: FamilyArg) -> Family {
    match f {
      FamilyArg::Cross => Family::Cross,
      FamilyArg::StackedCross => Family::StackedCross,
      FamilyArg::Barycentric => Family::Barycentric,
      FamilyArg::Suspension => Family::Suspension,
      FamilyArg::Simplex => Family::Simplex,
      FamilyArg::File => Family::File,
    }
  }
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
  #[arg(long, value_enum)]
  pub family: Option<FamilyArg>,
  #[arg(long)]
  pub dim: Option<usize>,
  /// Number of cross-polytopes glued by `stacked_cross`.
  #[arg(long)]
  pub count: Option<usize>,
  /// Facet-choice seed for `stacked_cross` (0 = lexicographically first facets).
  #[arg(long)]
  pub seed: Option<u64>,
  /// Base family as JSON, e.g. '{"family":"cross","dim":2}'.
  #[arg(long)]
  pub base: Option<String>,
}

impl FamilyArgs {
  fn spec(&self, input: Option<&PathBuf>) -> Result<Option<FamilySpec>> {
    let Some(family) = self.family else { return Ok(None) };
    let base = match &self.base {
      Some(b) => Some(Box::new(serde_json::from_str::<FamilySpec>(b)?)),
      None => None,
    };
    let path = input.map(|p| p.display().to_string());
    Ok(Some(FamilySpec { family: family.into(), dim: self.dim, count: self.count, seed: self.seed, base, path }))
  }
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
  #[command(flatten)]
  pub family: FamilyArgs,
  /// Input file for `--family file`.
  #[arg(long = "in")]
  pub input: Option<PathBuf>,
  /// Output file; without it the JSON goes to stdout and the summary to stderr.
  #[arg(long)]
  pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum What {
  F,
  H,
  FlagF,
  FlagH,
  G,
  Betti,
  Hilbert,
  All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LsopArg {
  Colored,
  Generic,
  Mixed,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
  #[arg(long = "in")]
  pub input: PathBuf,
  #[arg(long, value_enum, default_value = "all")]
  pub what: What,
  /// Linear system for `--what hilbert`.
  #[arg(long, value_enum, default_value = "colored")]
  pub lsop: LsopArg,
  /// Colors given colored forms under `--lsop mixed`, e.g. `1,3`.
  #[arg(long, value_delimiter = ',')]
  pub colors: Vec<usize>,
  /// Prime field; rationals when omitted (Betti numbers) or the default prime (Hilbert functions).
  #[arg(long)]
  pub p: Option<u64>,
  #[arg(long, default_value_t = 1)]
  pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
  Json,
  Csv,
  Text,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
  /// Complex files (repeatable).
  #[arg(long = "in")]
  pub inputs: Vec<PathBuf>,
  /// Named instance suite.
  #[arg(long)]
  pub family_suite: Option<String>,
  #[command(flatten)]
  pub family: FamilyArgs,
  /// Comma-separated checks or `all`.
  #[arg(long, default_value = "all")]
  pub checks: String,
  /// Seeds for generic draws; `--seed` is the stacked-cross facet seed.
  #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
  pub seeds: Vec<u64>,
  #[arg(long, default_value_t = DEFAULT_PRIME)]
  pub p: u64,
  /// Total-degree bound for the multigraded check (default `d + 1`).
  #[arg(long)]
  pub truncation: Option<usize>,
  #[arg(long, value_enum, default_value = "json")]
  pub format: Format,
  #[arg(long)]
  pub out: Option<PathBuf>,
  /// Engine for Artinian reductions.
  #[arg(long, value_enum, default_value = "auto")]
  pub engine: EngineArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum EngineArg {
  Auto,
  Macaulay,
  FaceReduction,
}

impl From<EngineArg> for Engine {
  fn from(e: EngineArg) -> Engine {
    match e {
      EngineArg::Auto => Engine::Auto,
      EngineArg::Macaulay => Engine::Macaulay,
      EngineArg::FaceReduction => Engine::FaceReduction,
    }
  }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
  I: IntoIterator<Item = T>,
  T: Into<OsString> + Clone,
{
  let cli = match Cli::try_parse_from(args) {
    Ok(cli) => cli,
    Err(e) => {
      let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
      let _ = e.print();
      return code;
    }
  };
  let outcome = match cli.command {
    Command::Generate(a) => cmd_generate(&a).map(|_| EXIT_OK),
    Command::Compute(a) => cmd_compute(&a).map(|_| EXIT_OK),
    Command::Verify(a) => cmd_verify(&a),
  };
  outcome.unwrap_or_else(|e| {
    eprintln!("error: {e}");
    EXIT_ERROR
  })
}

fn write_output(out: Option<&PathBuf>, text: &str) -> Result<()> {
  match out {
    Some(path) => std::fs::write(path, text)?,
    None => std::io::stdout().write_all(text.as_bytes())?,
  }
  Ok(())
}

fn join<T: ToString>(xs: &[T]) -> String { xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ") }

fn summary(c: &ColoredComplex) -> String {
  let h = c.complex().h_vector();
  let mut s = format!("f = {}\nh = {}\n", join(&c.complex().f_vector().0), join(&h.0));
  if c.is_balanced() {
    if let Ok(g) = balanced_g(&h, c.palette()) {
      s += &format!("g = {}\n", join(&g.entries[1..]));
    }
  }
  s
}

pub fn cmd_generate(a: &GenerateArgs) -> Result<()> {
  let spec = a
    .family
    .spec(a.input.as_ref())?
    .ok_or_else(|| Error::InvalidParameter("--family is required".into()))?;
  let complex = build(&spec)?;
  let json = ComplexFile::from_colored(&spec.name(), &complex).to_json() + "\n";
  let text = format!("{}\n{}", spec.name(), summary(&complex));
  match &a.out {
    Some(path) => {
      std::fs::write(path, json)?;
      print!("{text}");
    }
    None => {
      print!("{json}");
      eprint!("{text}");
    }
  }
  Ok(())
}

fn require_colored(file: &ComplexFile) -> Result<ColoredComplex> {
  file.colored()?.ok_or_else(|| Error::InvalidParameter("this invariant needs a coloring".into()))
}

pub fn cmd_compute(a: &ComputeArgs) -> Result<()> {
  let file = ComplexFile::read(&a.input)?;
  let complex = file.complex()?;
  let betti_field = match a.p {
    Some(p) => FieldSpec::prime(p)?,
    None => FieldSpec::Rational,
  };
  let mut out = String::new();
  let what = a.what;
  let want = |w: What| what == w || what == What::All;
  if want(What::F) {
    out += &format!("f = {}\n", join(&complex.f_vector().0));
  }
  if want(What::H) {
    out += &format!("h = {}\n", join(&complex.h_vector().0));
  }
  if want(What::Betti) {
    out += &format!("betti = {}\n", join(&reduced_betti(&complex, betti_field).reduced));
  }
  let colored_needed = [What::FlagF, What::FlagH, What::G, What::Hilbert].iter().any(|&w| want(w));
  if colored_needed {
    let c = match (what, file.coloring.is_some()) {
      (What::All, false) => None,
      _ => Some(require_colored(&file)?),
    };
    if let Some(c) = c {
      let (ff, fh) = c.flag_vectors();
      let label = |name: &str| if what == What::All { format!("{name}:\n") } else { String::new() };
      if want(What::FlagF) {
        out += &label("flag_f");
        out += &ff.entries().map(|(s, v)| format!("{s} → {v}\n")).collect::<String>();
      }
      if want(What::FlagH) {
        out += &label("flag_h");
        out += &fh.entries().map(|(s, v)| format!("{s} → {v}\n")).collect::<String>();
      }
      if what == What::G {
        c.require_balanced()?;
      }
      if want(What::G) && c.is_balanced() {
        out += &format!("g = {}\n", join(&balanced_g(&c.h_vector(), c.palette())?.entries[1..]));
      }
      if want(What::Hilbert) {
        let prefix = if what == What::All { "hilbert = " } else { "" };
        out += &format!("{prefix}{}\n", join(&hilbert(&c, a)?));
      }
    }
  }
  print!("{out}");
  Ok(())
}

fn hilbert(c: &ColoredComplex, a: &ComputeArgs) -> Result<Vec<i64>> {
  let field = FieldSpec::prime(a.p.unwrap_or(DEFAULT_PRIME))?;
  let d = c.palette();
  let colored = match a.lsop {
    LsopArg::Colored => ColorSet::full(d),
    LsopArg::Generic => ColorSet(0),
    LsopArg::Mixed => ColorSet::try_from(a.colors.clone()).map_err(Error::InvalidParameter)?,
  };
  if !colored.is_subset(ColorSet::full(d)) {
    return Err(Error::FormSupport);
  }
  let spec = mixed_lsop(c, colored, field, a.seed)?;
  let sqf = colored_squarefree_vertices(c, &spec.forms);
  Ok(quotient_hilbert_with(c.complex(), &spec.forms, d + 1, field, sqf, Engine::Auto))
}

/// Returns the exit code: 0 if no check failed, 1 otherwise.
pub fn cmd_verify(a: &VerifyArgs) -> Result<i32> {
  let cfg = BatteryConfig {
    checks: CheckKind::parse_list(&a.checks)?,
    seeds: a.seeds.clone(),
    field: FieldSpec::prime(a.p)?,
    truncation: a.truncation,
    engine: a.engine.into(),
  };
  let mut specs = match &a.family_suite {
    Some(name) => battery::suite_by_name(name)?,
    None => Vec::new(),
  };
  specs.extend(a.family.spec(None)?);
  let mut report = battery::run_specs(&specs, &cfg)?;
  if !a.inputs.is_empty() {
    let inputs = a
      .inputs
      .iter()
      .map(|p| {
        let file = ComplexFile::read(p)?;
        Ok((p.display().to_string(), require_colored(&file)?))
      })
      .collect::<Result<Vec<_>>>()?;
    let extra = battery::run_inputs(&inputs, &cfg);
    report.instances.extend(extra.instances);
    report.summary.add(extra.summary);
  }
  if report.instances.is_empty() {
    return Err(Error::InvalidParameter("nothing to verify: give --in, --family or --family-suite".into()));
  }
  let text = match a.format {
    Format::Json => report.to_json(),
    Format::Csv => report.to_csv(),
    Format::Text => report.to_text(),
  };
  write_output(a.out.as_ref(), &text)?;
  Ok(if report.summary.fail == 0 { EXIT_OK } else { EXIT_FAILED })
}
