//! Acceptance criteria, one line of output each. Runs without the libtest
//! harness so the lines are always visible; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use natord::lattice_lab::{standard_sublattice, NamedOrder, UniverseKind, UniverseTable};
use natord::relation_orders::mitsch_le;
use natord::suites::{run_suite, SuiteConfig};
use natord::{CheckReport, Partition, Relation};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 2024;

/// Outcome of one step within a criterion.
struct Step {
    label: String,
    ok: bool,
    detail: String,
    report: Option<CheckReport>,
}

impl Step {
    fn new(label: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Step {
            label: label.into(),
            ok,
            detail: detail.into(),
            report: None,
        }
    }
}

fn suite(
    name: &str,
    kind: UniverseKind,
    n: usize,
    sample: Option<usize>,
    limit: Option<Duration>,
) -> Step {
    let mut cfg = SuiteConfig::new(kind, n);
    if let Some(k) = sample {
        cfg = cfg.sampled(k, SEED);
    }
    let short = match kind {
        UniverseKind::Relations => "B",
        UniverseKind::Partitions => "P",
    };
    let label = format!("{name} {short}_{n}");
    let start = Instant::now();
    let result = run_suite(name, &cfg);
    let elapsed = start.elapsed();
    match result {
        Ok(report) => {
            let timely = limit.is_none_or(|l| elapsed < l);
            let mut detail = format!(
                "{} examined in {:.3}s",
                report.examined,
                elapsed.as_secs_f64()
            );
            if let Some(l) = limit {
                detail.push_str(&format!(" (limit {:.0}s)", l.as_secs_f64()));
            }
            if !report.passed {
                detail.push_str(&format!("; first failure: {}", first_failure(&report)));
            }
            Step {
                label,
                ok: report.passed && timely,
                detail,
                report: Some(report),
            }
        }
        Err(e) => Step::new(label, false, format!("error: {e}")),
    }
}

fn first_failure(report: &CheckReport) -> String {
    report.failures.first().cloned().unwrap_or_default()
}

/// Requires `claim` (or, when `None`, some claim) to have examined at least
/// `min` cases.
fn at_least(mut step: Step, claim: Option<&str>, min: u64) -> Step {
    let examined = step.report.as_ref().and_then(|r| match claim {
        Some(c) => r.claim(c).map(|c| c.examined),
        None => r.claims.iter().map(|c| c.examined).max(),
    });
    let what = claim.unwrap_or("largest claim");
    match examined {
        Some(e) if e >= min => step.detail.push_str(&format!("; {what}: {e} cases")),
        Some(e) => {
            step.ok = false;
            step.detail
                .push_str(&format!("; {what}: {e} < {min} cases"));
        }
        None => {
            step.ok = false;
            step.detail.push_str(&format!("; no count for {what}"));
        }
    }
    step
}

fn criterion_1() -> Vec<Step> {
    use UniverseKind::Relations;
    vec![
        at_least(
            suite(
                "thm-equational-criterion",
                Relations,
                2,
                None,
                Some(Duration::from_secs(1)),
            ),
            Some("criterion-equals-definition"),
            256,
        ),
        at_least(
            suite(
                "thm-equational-criterion",
                Relations,
                3,
                Some(10_000),
                Some(Duration::from_secs(30)),
            ),
            Some("criterion-equals-definition"),
            10_000,
        ),
    ]
}

fn criterion_2() -> Vec<Step> {
    use UniverseKind::*;
    let start = Instant::now();
    let mut steps = vec![
        at_least(
            suite("mitsch-partial-order", Relations, 2, None, None),
            Some("transitive"),
            4096,
        ),
        at_least(
            suite("mitsch-partial-order", Partitions, 2, None, None),
            Some("transitive"),
            15 * 15 * 15,
        ),
        at_least(
            suite("mitsch-partial-order", Partitions, 3, None, None),
            Some("antisymmetric"),
            203 * 203,
        ),
    ];
    let total = start.elapsed();
    steps.push(Step::new(
        "total time",
        total < Duration::from_secs(300),
        format!("{:.3}s (limit 300s)", total.as_secs_f64()),
    ));
    steps
}

fn criterion_3() -> Vec<Step> {
    use UniverseKind::Relations;
    vec![at_least(
        suite(
            "residuation",
            Relations,
            2,
            None,
            Some(Duration::from_secs(5)),
        ),
        Some("theorem-k"),
        16 * 16 * 16,
    )]
}

fn criterion_4() -> Vec<Step> {
    use UniverseKind::Relations;
    ["subsemigroup-ix", "prop-fa", "prop-meet-witness"]
        .iter()
        .map(|s| suite(s, Relations, 2, None, None))
        .collect()
}

fn criterion_5() -> Vec<Step> {
    use UniverseKind::*;
    vec![
        suite("prop-incl-then-le", Relations, 2, None, None),
        suite("prop-rincl-then-le", Relations, 2, None, None),
        suite("join-closure", Relations, 2, None, None),
        suite("join-closure", Partitions, 2, None, None),
        suite("atoms", Relations, 2, None, None),
    ]
}

fn criterion_6() -> Vec<Step> {
    use UniverseKind::Partitions;
    let start = Instant::now();
    let mut steps = Vec::new();
    for n in [2, 3] {
        for s in [
            "partition-laws",
            "lemma-compat",
            "lemma-dk",
            "cor-idempotents",
        ] {
            steps.push(suite(s, Partitions, n, None, None));
        }
    }
    for s in ["prop-pda", "prop-pka"] {
        steps.push(suite(s, Partitions, 2, None, None));
        steps.push(at_least(
            suite(s, Partitions, 3, Some(1000), None),
            None,
            1000,
        ));
    }
    let total = start.elapsed();
    steps.push(Step::new(
        "total time",
        total < Duration::from_secs(120),
        format!("{:.3}s (limit 120s)", total.as_secs_f64()),
    ));
    steps
}

fn criterion_7() -> Vec<Step> {
    vec![suite(
        "canonical-subsemigroups",
        UniverseKind::Partitions,
        2,
        None,
        None,
    )]
}

fn lattice_shape<E: natord::lattice_lab::Element>(label: &str) -> Step {
    let check = || -> natord::Result<Vec<String>> {
        let table = UniverseTable::<E>::new(2)?;
        let first = standard_sublattice(&table)?;
        let second = standard_sublattice(&UniverseTable::<E>::new(2)?)?;
        let mut problems = Vec::new();
        if !first.is_closed()? {
            problems.push("not closed".to_string());
        }
        for order in NamedOrder::ALL {
            match first.node(order.name()) {
                None => problems.push(format!("missing {}", order.name())),
                Some(node) if node.is_order != order.is_order() => {
                    problems.push(format!("{} order flag {}", order.name(), node.is_order))
                }
                Some(_) => {}
            }
        }
        if first.to_dot() != second.to_dot() {
            problems.push("DOT differs between runs".to_string());
        }
        Ok(problems)
    };
    match check() {
        Ok(problems) if problems.is_empty() => Step::new(
            label,
            true,
            "closed, eight named nodes, flags correct, DOT stable",
        ),
        Ok(problems) => Step::new(label, false, problems.join("; ")),
        Err(e) => Step::new(label, false, format!("error: {e}")),
    }
}

fn criterion_8() -> Vec<Step> {
    use UniverseKind::*;
    vec![
        suite("lattice", Relations, 2, None, None),
        suite("lattice", Partitions, 2, None, None),
        lattice_shape::<Relation>("sublattice B_2"),
        lattice_shape::<Partition>("sublattice P_2"),
    ]
}

fn criterion_9() -> Vec<Step> {
    const N: usize = 64;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut perm: Vec<usize> = (0..N).collect();
    for i in (1..N).rev() {
        perm.swap(i, rng.random_range(0..=i));
    }
    let b = Relation::from_fn(N, |i, j| perm[i] == j);
    // A restriction of a permutation lies below it.
    let a = Relation::from_fn(N, |i, j| i % 2 == 0 && perm[i] == j);
    let dense_a = Relation::from_fn(N, |_, _| rng.random_range(0..4) == 0);
    let dense_b = Relation::from_fn(N, |_, _| rng.random_range(0..2) == 0);
    let limit = Duration::from_millis(10);
    let mut steps = Vec::new();
    for (label, x, y, expected) in [
        ("restricted permutation", &a, &b, Some(true)),
        ("permutation above restriction", &b, &a, Some(false)),
        ("random dense pair", &dense_a, &dense_b, None),
    ] {
        let start = Instant::now();
        let verdict = mitsch_le(x, y);
        let elapsed = start.elapsed();
        let ok = match (&verdict, expected) {
            (Ok(v), Some(e)) => *v == e,
            (Ok(_), None) => true,
            (Err(_), _) => false,
        } && elapsed < limit;
        steps.push(Step::new(
            format!("B_64 {label}"),
            ok,
            format!(
                "{verdict:?} in {:.3}ms (limit 10ms)",
                elapsed.as_secs_f64() * 1e3
            ),
        ));
    }
    steps
}

/// A criterion title and the steps that decide it.
type Criterion = (&'static str, fn() -> Vec<Step>);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "equational criterion matches the definition on B_2 and sampled B_3",
            criterion_1,
        ),
        (
            "Mitsch's relation is a partial order on B_2, P_2 and P_3",
            criterion_2,
        ),
        ("residuation laws hold on all of B_2", criterion_3),
        (
            "partial injections, F(alpha) and meet witnesses on B_2",
            criterion_4,
        ),
        ("composites, joins and atoms at n = 2", criterion_5),
        (
            "partition laws and the d/k criteria on P_2 and P_3",
            criterion_6,
        ),
        ("canonical subsemigroups of P_2", criterion_7),
        ("generated sublattice on B_2 and P_2", criterion_8),
        ("Mitsch test on B_64 is fast", criterion_9),
    ];
    let mut all_ok = true;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let steps = run();
        let ok = steps.iter().all(|s| s.ok);
        all_ok &= ok;
        println!(
            "criterion {}: {} - {title}",
            i + 1,
            if ok { "PASS" } else { "FAIL" }
        );
        for s in &steps {
            println!(
                "    [{}] {}: {}",
                if s.ok { "ok" } else { "FAIL" },
                s.label,
                s.detail
            );
        }
    }
    println!("acceptance: {}", if all_ok { "PASS" } else { "FAIL" });
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
