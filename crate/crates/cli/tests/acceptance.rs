//! Acceptance gate: runs the ten criteria at full size and prints one line
//! per criterion. Exits nonzero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use superyang::suite::{run_criterion, Level, SuiteConfig, CRITERIA};
use superyang::symgroup::fusion_bound_from_env;

fn full_suite_json() -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_superyang"))
        .args(["suite", "--level", "full", "--json"])
        .env_remove("SUPERYANG_FUSION_BOUND")
        .output()
        .map_err(|e| format!("cannot run the binary: {e}"))?;
    if !out.status.success() {
        return Err(format!("suite exited with {}", out.status));
    }
    Ok(out.stdout)
}

fn determinism() -> Result<String, String> {
    let a = full_suite_json()?;
    let b = full_suite_json()?;
    if a != b {
        let at = a.iter().zip(&b).position(|(x, y)| x != y).unwrap_or(a.len().min(b.len()));
        return Err(format!("outputs differ at byte {at}"));
    }
    let lines = a.iter().filter(|&&c| c == b'\n').count();
    Ok(format!("{} bytes, {lines} lines, identical", a.len()))
}

fn main() -> ExitCode {
    let cfg = SuiteConfig { level: Level::Full, fusion_bound: fusion_bound_from_env().unwrap_or(4) };
    let mut all = true;
    for (k, title) in CRITERIA.iter().enumerate() {
        let k = k as u8 + 1;
        let start = Instant::now();
        let checks = run_criterion(k, &cfg);
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        let ok = !checks.is_empty() && failed.is_empty();
        all &= ok;
        println!(
            "{} criterion {k:>2}: {title} ({} checks, {:.1?})",
            if ok { "PASS" } else { "FAIL" },
            checks.len(),
            start.elapsed()
        );
        for c in failed {
            println!("       failed: {} {}", c.name, c.detail);
        }
    }
    let start = Instant::now();
    match determinism() {
        Ok(msg) => println!("PASS criterion 10: determinism of suite --level full ({msg}, {:.1?})", start.elapsed()),
        Err(msg) => {
            all = false;
            println!("FAIL criterion 10: determinism of suite --level full: {msg}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
