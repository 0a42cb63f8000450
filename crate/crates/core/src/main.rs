use std::process::ExitCode;

fn main() -> ExitCode {
  env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
  if let Some(n) = std::env::var("BGLB_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
    if n > 0 {
      rayon::ThreadPoolBuilder::new().num_threads(n).build_global().expect("thread pool is configured once");
    }
  }
  ExitCode::from(bglb::cli::run(std::env::args_os()) as u8)
}
