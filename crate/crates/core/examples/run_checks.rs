//! Runs every registered verification check and prints one timed line per
//! check; handy while developing (the CLI `verify` prints the JSON report
//! without timings).
use std::time::Instant;
use twistral::report::{run_check, CheckOptions, CHECK_NAMES};

fn main() {
    let opts = CheckOptions::default();
    let mut all_ok = true;
    for name in CHECK_NAMES {
        let t0 = Instant::now();
        let res = run_check(name, &opts);
        let status = format!("{:?}", res.status);
        println!("{:28} {:7} {:>8.2?}  {}", res.name, status, t0.elapsed(), res.details.chars().take(120).collect::<String>());
        all_ok &= !matches!(res.status, twistral::report::Status::Fail);
    }
    println!("overall: {all_ok}");
}
