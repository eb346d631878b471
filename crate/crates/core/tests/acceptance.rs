//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use zxcanon::selftest::{self, Report};

const SEED: u64 = 20_241_016;

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Report) -> Report {
    let start = Instant::now();
    let mut r = f();
    let took = start.elapsed();
    r.detail.push_str(&format!(" [{:.2}s]", took.as_secs_f64()));
    if let Some(limit) = limit {
        if took > limit {
            r.passed = false;
            r.detail
                .push_str(&format!(" exceeds the {:.0}s limit", limit.as_secs_f64()));
        }
    }
    r
}

fn main() -> ExitCode {
    let criteria: Vec<(u8, Box<dyn FnOnce() -> Report>)> = vec![
        (
            1,
            Box::new(|| timed(Some(Duration::from_secs(60)), || selftest::bijection(3))),
        ),
        (
            2,
            Box::new(|| timed(Some(Duration::from_secs(1)), || selftest::counting_identity(20))),
        ),
        (3, Box::new(|| timed(None, || selftest::round_trip(1000, 6, SEED)))),
        (4, Box::new(|| timed(None, || selftest::semantics(200, 6, SEED + 1)))),
        (
            5,
            Box::new(|| timed(None, || selftest::rewrite_soundness(4, 1000, 6, SEED + 2))),
        ),
        (6, Box::new(|| timed(None, selftest::named_codes))),
        (7, Box::new(|| timed(None, selftest::stripped_codes))),
        (
            8,
            Box::new(|| {
                timed(None, || {
                    selftest::scaling(&[64, 128, 256], Duration::from_secs(10), 3.6, SEED + 3)
                })
            }),
        ),
    ];
    let mut failed = 0;
    for (id, run) in criteria {
        let r = run();
        if !r.passed {
            failed += 1;
        }
        println!("criterion {id} {r}");
    }
    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
