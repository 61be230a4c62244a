use std::fs;
use std::path::PathBuf;

use clap::Args;

use celine_core::harness::{run_all, run_suite, IdentityReport, Scale};

use crate::Failure;

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite id, or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// small, default or large.
    #[arg(long, default_value = "default")]
    pub scale: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Where to write the JSON report (an array with one entry per suite).
    #[arg(long)]
    pub report: Option<PathBuf>,
}

pub fn run(args: &VerifyArgs) -> Result<(), Failure> {
    let scale: Scale = args.scale.parse()?;
    let reports: Vec<IdentityReport> =
        if args.suite == "all" { run_all(scale, args.seed) } else { vec![run_suite(&args.suite, scale, args.seed)?] };
    for r in &reports {
        let status = if r.pass { "PASS" } else { "FAIL" };
        println!(
            "{status} {:<26} cases={:<6} failures={:<4} time={:.2}s",
            r.suite,
            r.cases_run,
            r.failures.len(),
            r.wall_time_s
        );
    }
    if let Some(path) = &args.report {
        let json = serde_json::to_string_pretty(&reports).expect("reports serialize");
        fs::write(path, json + "\n").map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?;
    }
    if reports.iter().all(|r| r.pass) {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}
