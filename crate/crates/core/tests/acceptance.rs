//! The acceptance criteria, one line each; exits nonzero if any fails.

use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use qexpmap::golden::golden_text;
use qexpmap::ncrewrite::confluence_check;
use qexpmap::qalg_u::u_presentation;
use qexpmap::qgroup_a::apq_presentation;
use qexpmap::report::Report;
use qexpmap::verify::{run_suite, summary_line, Suite, VerifyOptions};
use qexpmap::Result;

type Criterion = (&'static str, Box<dyn Fn() -> Result<Outcome>>);

struct Outcome {
    pass: bool,
    detail: String,
    notes: Vec<String>,
}

fn opts() -> VerifyOptions {
    VerifyOptions { max_j2: 3, ..Default::default() }
}

fn from_reports(reports: Vec<Report>) -> Outcome {
    let total: usize = reports.iter().map(|r| r.residuals.len()).sum();
    let failed: Vec<String> = reports.iter().filter(|r| !r.pass).map(summary_line).collect();
    let mut notes: Vec<String> = Vec::new();
    for n in reports.iter().flat_map(|r| &r.notes) {
        if !notes.contains(n) {
            notes.push(n.clone());
        }
    }
    Outcome {
        pass: failed.is_empty() && total > 0,
        detail: if failed.is_empty() {
            format!("{} checks, {total} identities", reports.len())
        } else {
            failed.join("; ")
        },
        notes,
    }
}

fn suites(list: &[Suite]) -> Result<Outcome> {
    let mut all = Vec::new();
    for &s in list {
        all.extend(run_suite(s, &opts())?);
    }
    Ok(from_reports(all))
}

fn only(suite: Suite, check: &str) -> Result<Outcome> {
    let reports = run_suite(suite, &opts())?;
    Ok(from_reports(reports.into_iter().filter(|r| r.check == check).collect()))
}

fn confluence() -> Result<Outcome> {
    let (a, u) = (apq_presentation(), u_presentation());
    let mut parts = Vec::new();
    let mut pass = true;
    for (name, pres, len) in [("A", &a, 3), ("U", &u, 3), ("A", &a, 4)] {
        let start = Instant::now();
        let r = confluence_check(pres, len)?;
        let took = start.elapsed();
        let ok = r.pass() && (len < 4 || took < Duration::from_secs(60));
        pass &= ok;
        parts.push(format!("{name} len {len}: {} words, {:.1}s", r.words_checked, took.as_secs_f64()));
    }
    Ok(Outcome { pass, detail: parts.join(", "), notes: Vec::new() })
}

fn golden() -> Result<Outcome> {
    let first = golden_text()?;
    let second = golden_text()?;
    let committed = Path::new(env!("CARGO_MANIFEST_DIR")).join("../cli/tests/golden/printed.json");
    let recorded = std::fs::read_to_string(&committed).unwrap_or_default();
    let pass = first == second && first == recorded;
    let detail = if pass {
        format!("{} bytes, identical across runs and to the recorded file", first.len())
    } else if first != second {
        "output differs between runs".into()
    } else {
        format!("differs from {}", committed.display())
    };
    Ok(Outcome { pass, detail, notes: Vec::new() })
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("defining relations, qdet, coproduct and counit", Box::new(|| suites(&[Suite::Relations, Suite::Qdet]))),
        ("exponential-coordinate relations", Box::new(|| suites(&[Suite::LieCoords]))),
        ("confluence", Box::new(confluence)),
        ("T(1/2;1/2) and T(1;1/2) as printed", Box::new(|| only(Suite::Printed, "printed-t"))),
        ("closed form = factorized form", Box::new(|| suites(&[Suite::ClosedVsFactorized]))),
        ("comodule property", Box::new(|| suites(&[Suite::Comodule]))),
        ("representation relations and similarity", Box::new(|| suites(&[Suite::RepRelations]))),
        ("pi+ and pi- are homomorphisms", Box::new(|| suites(&[Suite::PiHomomorphism]))),
        ("L matrices as printed", Box::new(|| only(Suite::Printed, "printed-l"))),
        ("RLL relations", Box::new(|| suites(&[Suite::Rll]))),
        ("coproduct of L", Box::new(|| suites(&[Suite::DeltaL]))),
        ("R from the series, quasitriangularity", Box::new(|| suites(&[Suite::Quasitriangular]))),
        ("pi(T) against inverse R", Box::new(|| suites(&[Suite::PiTVsR]))),
        ("T' against R", Box::new(|| suites(&[Suite::TprimeR]))),
        ("numeric specialization", Box::new(|| suites(&[Suite::Specialize]))),
        ("golden file stability", Box::new(golden)),
    ];
    let start = Instant::now();
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome =
            run().unwrap_or_else(|e| Outcome { pass: false, detail: format!("error: {e}"), notes: Vec::new() });
        if !outcome.pass {
            failures += 1;
        }
        println!(
            "criterion {:>2}: {} {name} ({}; {:.2}s)",
            i + 1,
            if outcome.pass { "pass" } else { "FAIL" },
            outcome.detail,
            t.elapsed().as_secs_f64()
        );
        for n in outcome.notes {
            println!("               note: {n}");
        }
    }
    println!(
        "{} of {} criteria passed in {:.1}s",
        criteria.len() - failures,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
