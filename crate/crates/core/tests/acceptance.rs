use std::process::ExitCode;
use std::time::Instant;

use quiverchar::verify::criterion;

const TITLES: [&str; 9] = [
    "Hall-Littlewood suite",
    "character triple identity",
    "ground states",
    "stabilization",
    "Gelfand-Tsetlin and Yangian suite",
    "fermionic Fock suite",
    "KZ flatness",
    "Calogero-Sutherland spectrum",
    "spanning by Slater products",
];

fn main() -> ExitCode {
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (i, title) in TITLES.iter().enumerate() {
        let id = i + 1;
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let checks = criterion(id).expect("known criterion");
        let secs = start.elapsed().as_secs_f64();
        let bad: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        let verdict = if bad.is_empty() { "PASS" } else { "FAIL" };
        println!("{} {}: {} ({} checks, {:.1}s)", verdict, id, title, checks.len(), secs);
        let verbose = std::env::var_os("ACCEPTANCE_VERBOSE").is_some();
        for c in checks.iter().filter(|c| verbose || !c.passed) {
            println!("    {}", c);
        }
        failed += usize::from(!bad.is_empty());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
