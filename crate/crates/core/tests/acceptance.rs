//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Every comparison is exact; the only tolerances are the
//! wall-clock budgets below.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use dompoly::algorithms::{
    coefficient_by_binomial, count_dominating_conformal, domination_number_by_vanishing,
    domination_number_search, dp_bipartite_spanning, dp_brute_force, dp_essential_sets,
    dp_inclusion_exclusion, dp_product_of_components, dp_recursive, dp_type_sum, AlgoConfig,
    Algorithm,
};
use dompoly::formats::{
    all_labeled_graphs, generate_family, random_corpus, to_graph6, Family, FamilySpec,
};
use dompoly::identities::{run_all, IdentityId, Status, VerifyConfig};
use dompoly::{Graph, Polynomial};
use num_bigint::BigInt;

use common::{binomial, oracle_coeffs, oracle_poly};

const EXHAUSTIVE_MAX_N: usize = 5;
const EXHAUSTIVE_BUDGET: Duration = Duration::from_secs(60);
const RANDOM_COUNT: usize = 200;
const RANDOM_SEED: u64 = 0x5eed_2024;
const RANDOM_BUDGET: Duration = Duration::from_secs(120);
const SPANNING_MAX_M: usize = 20;
const EDGE_SUM_MAX_M: usize = 14;
const COMPLETE_MAX_N: usize = 8;
const PERF_N: u64 = 22;
const PERF_SEED: u64 = 22;
const PERF_BUDGET: Duration = Duration::from_secs(60);
const BIT_IDENTITY_MAX_N: u64 = 16;

type Criterion<'a> = Box<dyn FnOnce() -> Outcome + 'a>;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn from_failures(failures: &[String], summary: String) -> Self {
        let mut detail = summary;
        if let Some(first) = failures.first() {
            detail.push_str(&format!("; {} failure(s), first: {first}", failures.len()));
        }
        Outcome {
            pass: failures.is_empty(),
            detail,
        }
    }
}

fn exhaustive_corpus() -> Vec<Graph> {
    (0..=EXHAUSTIVE_MAX_N)
        .flat_map(all_labeled_graphs)
        .collect()
}

fn p(c: &[i64]) -> Polynomial {
    Polynomial::from_coeffs(c.iter().copied())
}

/// Every route against the independent oracle on one graph.
fn oracle_mismatches(g: &Graph, cfg: &AlgoConfig, out: &mut Vec<String>) {
    let want = oracle_poly(g);
    let g6 = to_graph6(g);
    let mut check = |name: &str, got: Polynomial| {
        if got != want {
            out.push(format!("{name} on {g6}: {got} != {want}"));
        }
    };
    check("brute", dp_brute_force(g, cfg).unwrap());
    check("inclexcl", dp_inclusion_exclusion(g, cfg).unwrap());
    check("typesum", dp_type_sum(g, cfg).unwrap());
    check("recursive", dp_recursive(g, cfg).unwrap());
    if g.n() >= 1 {
        check("essential", dp_essential_sets(g, cfg).unwrap());
    }
    if g.m() <= SPANNING_MAX_M {
        check("bipartite-spanning", dp_bipartite_spanning(g, cfg).unwrap());
    }
    for algo in Algorithm::ALL {
        if algo == Algorithm::BipartiteSpanning && g.m() > SPANNING_MAX_M {
            continue;
        }
        check(
            &format!("product[{algo}]"),
            dp_product_of_components(g, algo, cfg).unwrap(),
        );
    }
}

fn criterion_oracle(corpus: &[Graph], budget: Duration, label: &str) -> Outcome {
    let cfg = AlgoConfig::default();
    let start = Instant::now();
    let mut failures = Vec::new();
    for g in corpus {
        oracle_mismatches(g, &cfg, &mut failures);
    }
    let elapsed = start.elapsed();
    if elapsed >= budget {
        failures.push(format!("took {elapsed:?}, budget {budget:?}"));
    }
    Outcome::from_failures(
        &failures,
        format!("{} {label} graphs in {elapsed:.2?}", corpus.len()),
    )
}

fn criterion_conformal(exhaustive: &[Graph], random: &[Graph]) -> Outcome {
    let cfg = AlgoConfig::default();
    let mut failures = Vec::new();
    for g in exhaustive.iter().chain(random) {
        let want: i64 = oracle_coeffs(g).iter().sum();
        let got = count_dominating_conformal(g, &cfg).unwrap();
        if got != BigInt::from(want) {
            failures.push(format!("{}: {got} != {want}", to_graph6(g)));
        }
    }
    let spot = |family, n, want: i64| {
        let g = generate_family(&FamilySpec::new(family, vec![n])).unwrap();
        (
            count_dominating_conformal(&g, &cfg).unwrap(),
            BigInt::from(want),
            format!("{family} {n}"),
        )
    };
    for (got, want, name) in [
        spot(Family::Path, 4, 9),
        spot(Family::Cycle, 4, 11),
        spot(Family::Edgeless, 1, 1),
    ] {
        if got != want {
            failures.push(format!("{name}: {got} != {want}"));
        }
    }
    Outcome::from_failures(
        &failures,
        format!(
            "{} graphs plus d(P4)=9, d(C4)=11, d(K1)=1",
            exhaustive.len() + random.len()
        ),
    )
}

const SUITE: [IdentityId; 6] = [
    IdentityId::EdgeAlternatingSum,
    IdentityId::LocalOddCycle,
    IdentityId::VertexAlternatingSum,
    IdentityId::MinusOneBipartiteFormula,
    IdentityId::Reciprocity,
    IdentityId::HalfSum,
];

const PARITY: [IdentityId; 3] = [
    IdentityId::DominatingCountOdd,
    IdentityId::MinusOneOdd,
    IdentityId::VertexDeletionEven,
];

fn criterion_identities(report: &dompoly::identities::VerificationReport) -> Outcome {
    let mut failures = Vec::new();
    let mut tallies: BTreeMap<&str, [usize; 3]> = BTreeMap::new();
    let mut odd_order_half_sum = [0usize; 2];
    for e in report
        .entries
        .iter()
        .filter(|e| SUITE.contains(&e.identity))
    {
        tallies.entry(e.identity.name()).or_default()[e.status as usize] += 1;
        if e.status == Status::Fail {
            failures.push(format!("{} on {}", e.identity, e.graph));
            if e.identity == IdentityId::HalfSum {
                let n = dompoly::formats::from_graph6(&e.graph).unwrap().n();
                odd_order_half_sum[n % 2] += 1;
            }
        }
    }
    let summary = tallies
        .iter()
        .map(|(id, [p, f, s])| format!("{id} {p}/{f}/{s}"))
        .collect::<Vec<_>>()
        .join(", ");
    let mut outcome = Outcome::from_failures(&failures, format!("pass/fail/skip: {summary}"));
    if odd_order_half_sum.iter().sum::<usize>() > 0 {
        outcome.detail.push_str(&format!(
            "; half-sum failures by order parity: even {}, odd {}",
            odd_order_half_sum[0], odd_order_half_sum[1]
        ));
    }
    outcome
}

fn criterion_parity(
    report: &dompoly::identities::VerificationReport,
    corpus: &[&Graph],
) -> Outcome {
    let mut failures: Vec<String> = report
        .entries
        .iter()
        .filter(|e| PARITY.contains(&e.identity) && e.status != Status::Pass)
        .map(|e| format!("{} on {}: {:?}", e.identity, e.graph, e.status))
        .collect();
    // Independent recount from the matrix oracle.
    let mut vertex_checks = 0usize;
    for g in corpus {
        let c = oracle_coeffs(g);
        let d: i64 = c.iter().sum();
        let at_minus_one: i64 = c
            .iter()
            .enumerate()
            .map(|(k, &x)| if k % 2 == 0 { x } else { -x })
            .sum();
        if d % 2 == 0 || at_minus_one % 2 == 0 {
            failures.push(format!(
                "oracle parity on {}: d={d}, D(-1)={at_minus_one}",
                to_graph6(g)
            ));
        }
        for v in 0..g.n() {
            let keep: Vec<_> = g
                .edges()
                .iter()
                .filter(|&&(a, b)| a != v && b != v)
                .map(|&(a, b)| {
                    let r = |x: usize| if x > v { x - 1 } else { x };
                    (r(a), r(b))
                })
                .collect();
            let dv: i64 = oracle_coeffs(&Graph::new(g.n() - 1, keep).unwrap())
                .iter()
                .sum();
            vertex_checks += 1;
            if (d - dv) % 2 != 0 {
                failures.push(format!("oracle d(G)-d(G-{v}) on {}", to_graph6(g)));
            }
        }
    }
    Outcome::from_failures(
        &failures,
        format!("{} graphs, {vertex_checks} vertex deletions", corpus.len()),
    )
}

fn criterion_binomial(corpus: &[&Graph]) -> Outcome {
    let cfg = AlgoConfig::default();
    let mut failures = Vec::new();
    for g in corpus {
        let c = oracle_coeffs(g);
        for k in 0..=g.n() + 1 {
            let want = c.get(k).copied().unwrap_or(0);
            let got = coefficient_by_binomial(g, k, &cfg).unwrap();
            if got != BigInt::from(want) {
                failures.push(format!("d_{k} on {}: {got} != {want}", to_graph6(g)));
            }
        }
        let gamma = c.iter().position(|&x| x != 0).unwrap();
        let vanishing = domination_number_by_vanishing(g, &cfg).unwrap();
        let search = domination_number_search(g, &cfg).unwrap();
        if vanishing != gamma || search != gamma {
            failures.push(format!(
                "gamma on {}: vanishing {vanishing}, search {search}, oracle {gamma}",
                to_graph6(g)
            ));
        }
    }
    Outcome::from_failures(&failures, format!("{} graphs", corpus.len()))
}

fn criterion_golden() -> Outcome {
    let cfg = AlgoConfig::default();
    let mut failures = Vec::new();
    let fam = |f, n| generate_family(&FamilySpec::new(f, vec![n])).unwrap();
    let mut golden = vec![
        ("P3".to_string(), fam(Family::Path, 3), p(&[0, 1, 3, 1])),
        ("P4".to_string(), fam(Family::Path, 4), p(&[0, 0, 4, 4, 1])),
        ("C4".to_string(), fam(Family::Cycle, 4), p(&[0, 0, 6, 4, 1])),
    ];
    for n in 1..=COMPLETE_MAX_N {
        // (1+x)^n - 1 written out from binomial coefficients.
        let mut c: Vec<i64> = (0..=n).map(|k| binomial(n, k)).collect();
        c[0] -= 1;
        golden.push((format!("K{n}"), fam(Family::Complete, n as u64), p(&c)));
    }
    for (name, g, want) in &golden {
        if &oracle_poly(g) != want {
            failures.push(format!("oracle {name}: {} != {want}", oracle_poly(g)));
        }
        for algo in Algorithm::ALL {
            if algo == Algorithm::BipartiteSpanning && g.m() > SPANNING_MAX_M {
                continue;
            }
            let got = dp_product_of_components(g, algo, &cfg).unwrap();
            if &got != want {
                failures.push(format!("{algo} {name}: {got} != {want}"));
            }
        }
    }
    Outcome::from_failures(
        &failures,
        format!("P3, P4, C4, K1..K{COMPLETE_MAX_N} over all algorithms"),
    )
}

fn criterion_performance() -> Outcome {
    let mut failures = Vec::new();
    let g = generate_family(&FamilySpec::random(PERF_N, 1, 2, PERF_SEED)).unwrap();
    let start = Instant::now();
    let par = dp_inclusion_exclusion(&g, &AlgoConfig::default()).unwrap();
    let elapsed = start.elapsed();
    if elapsed >= PERF_BUDGET {
        failures.push(format!(
            "n={PERF_N} took {elapsed:?}, budget {PERF_BUDGET:?}"
        ));
    }
    if par.coeff(g.n()) != BigInt::from(1) {
        failures.push("leading coefficient is not 1".into());
    }
    let seq_cfg = AlgoConfig::sequential();
    let par_cfg = AlgoConfig::default();
    let mut instances = 0;
    for n in 10..=BIT_IDENTITY_MAX_N {
        for (num, den) in [(1, 5), (1, 2), (4, 5)] {
            let h = generate_family(&FamilySpec::random(n, num, den, 1000 + n)).unwrap();
            instances += 1;
            for algo in Algorithm::ALL {
                if algo == Algorithm::BipartiteSpanning && h.m() > SPANNING_MAX_M {
                    continue;
                }
                let a = dp_product_of_components(&h, algo, &par_cfg).unwrap();
                let b = dp_product_of_components(&h, algo, &seq_cfg).unwrap();
                if a != b {
                    failures.push(format!(
                        "{algo} parallel != sequential on {}",
                        to_graph6(&h)
                    ));
                }
            }
        }
    }
    Outcome::from_failures(
        &failures,
        format!(
            "inclexcl n={PERF_N} m={} in {elapsed:.2?}; {instances} instances n<=16 bit-identical",
            g.m()
        ),
    )
}

fn main() -> ExitCode {
    let exhaustive = exhaustive_corpus();
    let random = random_corpus(RANDOM_COUNT, RANDOM_SEED);
    let both: Vec<&Graph> = exhaustive.iter().chain(&random).collect();

    let verify_cfg = VerifyConfig {
        algo: AlgoConfig::default(),
        edge_sum_cap: EDGE_SUM_MAX_M,
    };
    let corpus: Vec<Graph> = both.iter().map(|&g| g.clone()).collect();
    let report = run_all(&corpus, &verify_cfg);

    let results: Vec<(&str, Criterion)> = vec![
        (
            "oracle equivalence, exhaustive n<=5",
            Box::new(|| criterion_oracle(&exhaustive, EXHAUSTIVE_BUDGET, "labeled")),
        ),
        (
            "oracle equivalence, random",
            Box::new(|| criterion_oracle(&random, RANDOM_BUDGET, "random")),
        ),
        (
            "conformal counting",
            Box::new(|| criterion_conformal(&exhaustive, &random)),
        ),
        ("identity suite", Box::new(|| criterion_identities(&report))),
        (
            "parity suite",
            Box::new(|| criterion_parity(&report, &both)),
        ),
        (
            "binomial coefficients and gamma",
            Box::new(|| criterion_binomial(&both)),
        ),
        ("golden values", Box::new(criterion_golden)),
        (
            "performance and parallel bit-identity",
            Box::new(criterion_performance),
        ),
    ];

    let mut all_pass = true;
    for (i, (name, run)) in results.into_iter().enumerate() {
        let outcome = run();
        all_pass &= outcome.pass;
        let mark = if outcome.pass { "PASS" } else { "FAIL" };
        println!("{mark} criterion {}: {name} ({})", i + 1, outcome.detail);
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
