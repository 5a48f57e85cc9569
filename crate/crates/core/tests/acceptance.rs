//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact equality of rational functions, so there is no
//! numeric tolerance. Each criterion also carries a wall-clock budget.

use std::time::{Duration, Instant};

use ftlb_core::suites::{run_suite, CheckLine, Suite, SuiteOptions};

/// Comparisons are exact; this is the admitted absolute error.
const TOLERANCE: u32 = 0;
const SEED: u64 = 20_240_601;

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    suite: Suite,
    d: Option<u32>,
    samples: Option<usize>,
    /// Selects the suite lines that belong to this criterion.
    select: fn(&CheckLine) -> bool,
}

fn all(_: &CheckLine) -> bool {
    true
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            title: "traces of h_12 and h_B match their closed forms",
            budget: secs(1),
            suite: Suite::Identities,
            d: None,
            samples: None,
            select: |l| l.label.starts_with("trace of h_"),
        },
        Criterion {
            id: 2,
            title: "absorption identities for h_12, h_B, r_12, r_B at d = 1, 2, 3",
            budget: secs(10),
            suite: Suite::Identities,
            d: None,
            samples: None,
            select: |l| l.label.contains(" = "),
        },
        Criterion {
            id: 3,
            title: "traces of b_1 g_1 b_1 h_12 and b_1 g_1 b_1 g_2 g_1 b_1 h_12",
            budget: secs(5),
            suite: Suite::Identities,
            d: None,
            samples: None,
            select: |l| l.label.starts_with("trace of b_1"),
        },
        Criterion {
            id: 4,
            title: "four classical parameter pairs annihilate the ideal on H_3, generic does not",
            budget: secs(120),
            suite: Suite::ClassicalQuotient,
            d: None,
            samples: None,
            select: all,
        },
        Criterion {
            id: 5,
            title: "traces of r_B and r_12 match their closed forms, d = 1, 2, 3",
            budget: secs(60),
            suite: Suite::ClosedForms,
            d: None,
            samples: None,
            select: |l| l.label.contains("trace of"),
        },
        Criterion {
            id: 6,
            title: "A_i, B_i and the assembled A, B match direct traces, d = 1, 2, 3",
            budget: secs(300),
            suite: Suite::ClosedForms,
            d: None,
            samples: None,
            select: |l| !l.label.contains("trace of"),
        },
        Criterion {
            id: 7,
            title: "admitted frequency values at d = 2, 3 are exactly the four listed sets",
            budget: secs(120),
            suite: Suite::FrequencyRoots,
            d: None,
            samples: None,
            select: all,
        },
        Criterion {
            id: 8,
            title: "every profile and branch at d = 2, 3 passes both the functional and the ideal route",
            budget: secs(900),
            suite: Suite::FramedQuotient,
            d: None,
            samples: None,
            select: all,
        },
        Criterion {
            id: 9,
            title: "skein relations for P, V, X_S, rho_S on 50 sites per kind and crossing type",
            budget: secs(300),
            suite: Suite::Skein,
            d: None,
            samples: Some(50),
            select: all,
        },
        Criterion {
            id: 10,
            title: "conjugation and stabilization invariance of P, V, X_S, rho_S on 50 words per kind",
            budget: secs(300),
            suite: Suite::Markov,
            d: None,
            samples: Some(50),
            select: all,
        },
        Criterion {
            id: 11,
            title: "d = 1 degenerations of X_S, rho_S, idempotents and quadratic relations",
            budget: secs(60),
            suite: Suite::Degenerations,
            d: None,
            samples: Some(50),
            select: all,
        },
        Criterion {
            id: 12,
            title: "engine against oracle trace on 500 words; algebra certification for n, d <= 3",
            budget: secs(600),
            suite: Suite::Oracle,
            d: None,
            samples: Some(500),
            select: all,
        },
    ]
}

#[test]
fn acceptance() {
    assert_eq!(TOLERANCE, 0);
    let mut failed = Vec::new();
    for c in criteria() {
        let opts = SuiteOptions { d: c.d, seed: SEED, samples: c.samples };
        let start = Instant::now();
        let report = run_suite(c.suite, &opts);
        let elapsed = start.elapsed();
        let (checks, bad) = match &report {
            Ok(r) => {
                let lines: Vec<&CheckLine> = r.lines.iter().filter(|l| l.gated && (c.select)(l)).collect();
                let bad: Vec<String> = lines.iter().filter(|l| !l.passed).map(|l| l.to_string()).collect();
                (lines.len(), bad)
            }
            Err(e) => (0, vec![e.to_string()]),
        };
        let in_time = elapsed <= c.budget;
        let ok = checks > 0 && bad.is_empty() && in_time;
        println!(
            "{} criterion {:>2}: {} [{} checks, {:.2?} of {:?}]",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            checks,
            elapsed,
            c.budget
        );
        for b in &bad {
            println!("    {}", b);
        }
        if !ok {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {:?}", failed);
}
