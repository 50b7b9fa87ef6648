//! The acceptance suite: every criterion runs exactly once with its runtime
//! bound and prints one pass/fail line. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cdr_core::fock::FockSpace;
use cdr_core::verify::{
    base_contractions, basis_block, central_charge_block, chart_block, closure_block, criterion_block,
    descent_block, dimension_block, leading_block, quadratic_block, symbol_block, Block, BracketCache,
    RunConfig, SAMPLED_PAIRS,
};
use cdr_core::Result;

type Runner = Box<dyn Fn(&FockSpace) -> Result<Block>>;

struct Criterion {
    number: u8,
    name: &'static str,
    limit: Duration,
    run: Runner,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn criteria() -> Vec<Criterion> {
    let config = RunConfig::default();
    let seed = config.seed;
    vec![
        Criterion {
            number: 1,
            name: "base operator products of the 4N generators",
            limit: secs(1),
            run: Box::new(|sp| Ok(base_contractions(sp))),
        },
        Criterion {
            number: 2,
            name: "descent relations G∘0E = C, Q∘0D = B",
            limit: secs(1),
            run: Box::new(descent_block),
        },
        Criterion {
            number: 3,
            name: "L' = L - ½∂J has central charge 6",
            limit: secs(5),
            run: Box::new(central_charge_block),
        },
        Criterion {
            number: 4,
            name: "section products close on section words, weight ≤ 3",
            limit: secs(300),
            run: Box::new(|sp| closure_block(sp, &mut BracketCache::in_memory(), 3)),
        },
        Criterion {
            number: 5,
            name: "symbols of the eight sections",
            limit: secs(1),
            run: Box::new(symbol_block),
        },
        Criterion {
            number: 6,
            name: "quadratic relations and their derivatives, k ≤ 3",
            limit: secs(10),
            run: Box::new(|_| quadratic_block(3)),
        },
        Criterion {
            number: 7,
            name: "invariant dimensions = standard words, w ≤ 4",
            limit: secs(300),
            run: Box::new(|_| Ok(dimension_block(4))),
        },
        Criterion {
            number: 8,
            name: "leading monomials injective and multiplicative, w ≤ 3",
            limit: secs(30),
            run: Box::new(move |_| leading_block(3, seed, SAMPLED_PAIRS)),
        },
        Criterion {
            number: 9,
            name: "invariance criterion and nested operators, w ≤ 3",
            limit: secs(120),
            run: Box::new(|_| Ok(criterion_block(3))),
        },
        Criterion {
            number: 10,
            name: "chart transformation law mod t^4 and generator parity",
            limit: secs(120),
            run: Box::new(|_| chart_block(4)),
        },
        Criterion {
            number: 11,
            name: "lifted standard words independent with matching symbols, w ≤ 2",
            limit: secs(120),
            run: Box::new(|sp| basis_block(sp, 2)),
        },
    ]
}

fn main() -> ExitCode {
    let mut failed = 0;
    for c in criteria() {
        // a fresh space so memoised products do not leak between criteria
        let space = FockSpace::new(2);
        let start = Instant::now();
        let outcome = (c.run)(&space);
        let elapsed = start.elapsed();
        let (ok, detail) = match &outcome {
            Ok(block) => (
                block.passed() && elapsed <= c.limit,
                format!("{} checks", block.checks.len()),
            ),
            Err(e) => (false, format!("error: {e}")),
        };
        let status = if ok { "pass" } else { "fail" };
        println!(
            "criterion {:>2}: {status}  {:>9.3}s / {}s  {}  ({detail})",
            c.number,
            elapsed.as_secs_f64(),
            c.limit.as_secs(),
            c.name
        );
        if let Ok(block) = &outcome {
            for check in block.failures() {
                println!("    {check}");
            }
        }
        if !ok {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria fail");
        ExitCode::FAILURE
    }
}
