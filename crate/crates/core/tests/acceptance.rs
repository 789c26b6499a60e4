//! Acceptance criteria. Runs as a plain binary (`harness = false`) and prints
//! one PASS/FAIL line per criterion; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use lincolor_core::classes::{is_p6_free, is_strongly_chordal};
use lincolor_core::linear_chromatic_number;
use lincolor_core::patterns::gen_cycle;
use lincolor_core::report::{analyze, AnalyzeOptions};
use lincolor_core::verify::{
    check_strongly_chordal_linear, p6_free_strongly_chordal_samples, run_suite, Suite, SuiteReport,
    VerifyConfig,
};

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

struct Outcome {
    pass: bool,
    summary: String,
    details: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, summary: impl Into<String>) -> Self {
        Outcome { pass, summary: summary.into(), details: vec![] }
    }
}

fn suite(s: Suite, max_n: usize, samples: Option<usize>) -> SuiteReport {
    let cfg = VerifyConfig { max_n: Some(max_n), seed: 0, samples };
    run_suite(s, &cfg).expect("sizes are within enumeration limits")
}

fn from_reports(reports: &[SuiteReport], extra: &str) -> Outcome {
    let pass = reports.iter().all(SuiteReport::ok);
    let summary = reports
        .iter()
        .map(|r| format!("{} {}/{} {}", r.suite.name(), r.passed, r.checked, r.unit))
        .collect::<Vec<_>>()
        .join(", ");
    let mut o = Outcome::new(pass, format!("{summary}{extra}"));
    for r in reports {
        if let Some(c) = &r.counterexample {
            o.details.push(format!("counterexample: {c}"));
        }
    }
    o
}

fn cycles() -> Outcome {
    let start = Instant::now();
    let wrong: Vec<(usize, usize)> = (5..=12)
        .map(|n| (n, linear_chromatic_number(&gen_cycle(n))))
        .filter(|&(n, l)| l != n)
        .collect();
    let t = start.elapsed();
    let ok = wrong.is_empty() && t < Duration::from_secs(1);
    Outcome::new(ok, format!("λ(C_n) = n for n = 5..=12 in {t:?} (limit 1 s); mismatches {wrong:?}"))
}

fn c4_and_2k2() -> Outcome {
    let c4 = linear_chromatic_number(&gen_cycle(4));
    let two_k2 = gen_cycle(4).complement();
    let r = analyze(&two_k2, "2K2", AnalyzeOptions::default()).expect("tiny graph");
    let x = &r.numbers;
    let ok = c4 == 4 && x.chi == 2 && x.lambda_complement == 4 && x.chi != x.lambda_complement;
    let mut o = Outcome::new(ok, format!("λ(C4) = {c4}; 2K2 report: χ = {} vs λ(Ḡ) = {}", x.chi, x.lambda_complement));
    o.details.push(serde_json::to_string(&x).expect("serializable"));
    o
}

fn exhaustive_n7() -> Outcome {
    let start = Instant::now();
    let reports = [suite(Suite::ComplementBound, 7, None), suite(Suite::PathCoverOptimal, 7, None)];
    let t = start.elapsed();
    let mut o = from_reports(&reports, &format!(" in {t:?} (limit 300 s)"));
    o.pass &= t < Duration::from_secs(300);
    o
}

fn p6_free_strongly_chordal() -> Outcome {
    let graphs = p6_free_strongly_chordal_samples(12, 200, 0);
    let in_class = graphs
        .iter()
        .all(|g| g.n() <= 12 && is_p6_free(g) && is_strongly_chordal(g));
    let failures: Vec<String> = graphs
        .iter()
        .filter_map(|g| check_strongly_chordal_linear(g).err())
        .collect();
    let mut o = Outcome::new(
        in_class && failures.is_empty() && graphs.len() == 200,
        format!(
            "{} P6-free strongly chordal graphs (n <= 12): {} pass ordering, |I| = α, κ linear with α colors, λ = α",
            graphs.len(),
            graphs.len() - failures.len()
        ),
    );
    o.details.extend(failures.into_iter().take(3));
    o
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("cycles", Box::new(cycles)),
        ("c4-2k2", Box::new(c4_and_2k2)),
        ("exhaustive-n7", Box::new(exhaustive_n7)),
        ("verifier-agreement", Box::new(|| from_reports(&[suite(Suite::CliqueSetEquivalence, 5, Some(1000))], " with 1000 random colorings each"))),
        ("actual-edge-route", Box::new(|| from_reports(&[suite(Suite::ActualEdgeRoute, 6, None)], ""))),
        ("threshold-colinear", Box::new(|| from_reports(&[suite(Suite::ThresholdColinear, 9, Some(200))], ""))),
        ("necessary-conditions", Box::new(|| {
            from_reports(
                &[
                    suite(Suite::ColinearCoChordal, 6, None),
                    suite(Suite::ColinearForbidden, 6, None),
                    suite(Suite::LinearChordal, 6, None),
                ],
                "",
            )
        })),
        ("strongly-chordal-linear", Box::new(p6_free_strongly_chordal)),
        ("suns-linear", Box::new(|| {
            let r = suite(Suite::SunsLinear, 5, None);
            let mut o = from_reports(std::slice::from_ref(&r), "");
            o.details.extend(r.details);
            o
        })),
        ("minimal-non-linear", Box::new(|| {
            let r = suite(Suite::MinimalNonLinear, 7, None);
            let mut o = from_reports(std::slice::from_ref(&r), "");
            o.details.extend(r.details);
            o
        })),
        ("split-not-colinear", Box::new(|| {
            let r = suite(Suite::SplitNotColinear, 8, None);
            let mut o = from_reports(std::slice::from_ref(&r), "");
            o.details.extend(r.details);
            o
        })),
    ];

    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        println!("{} {:>2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.summary);
        for d in &o.details {
            println!("         {d}");
        }
        failed += usize::from(!o.pass);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
