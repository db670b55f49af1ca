//! The nine acceptance criteria, one line each.

use std::process::ExitCode;
use std::time::Instant;

use dolbeault::driver::{self, Check, Command, RunConfig, Status};
use serde_json::Value;

fn find<'a>(checks: &'a [Check], name: &str) -> &'a Check {
    checks.iter().find(|c| c.name == name).unwrap_or_else(|| panic!("suite has no check {name}"))
}

/// Extra literal expectations on top of each check's own status.
fn literal(name: &str, cert: &Value) -> bool {
    match name {
        "kostant" => cert[0]["betti"] == serde_json::json!([1, 2, 2, 1]),
        "hodge" => cert[0]["z"] == "1/2 H1 H1 + H1" && cert[1]["certificate"]["degree"] == 4,
        "translation" => cert.as_array().is_some_and(|runs| runs.iter().filter(|r| r["status"] == "pass").count() >= 5),
        "primary-split" => cert.as_array().is_some_and(|pairs| pairs.len() >= 10),
        _ => true,
    }
}

fn main() -> ExitCode {
    let criteria = [
        (1, "d-squared"),
        (2, "kostant"),
        (3, "casselman-osborne"),
        (4, "hodge"),
        (5, "rho-u-shift"),
        (6, "primary-split"),
        (7, "translation"),
        (8, "zuckerman"),
    ];
    let cfg = RunConfig::new(Command::Suite);
    let t0 = Instant::now();
    let first = driver::run(&cfg).expect("suite runs");
    let t1 = t0.elapsed();
    let mut all = true;
    for (n, name) in criteria {
        let c = find(&first.checks, name);
        let ok = c.status == Status::Pass && literal(name, &c.certificate);
        all &= ok;
        println!("criterion {n} {name:<18} {}  {}", if ok { "PASS" } else { "FAIL" }, c.summary);
    }
    let second = driver::run(&cfg).expect("suite runs");
    let same = first.to_json() == second.to_json();
    all &= same;
    println!(
        "criterion 9 {:<18} {}  {} bytes, first run {:.1?}",
        "determinism",
        if same { "PASS" } else { "FAIL" },
        first.to_json().len(),
        t1
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
