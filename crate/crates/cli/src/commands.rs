use std::fmt::Write as _;
use std::io::Read;
use std::time::Instant;

use dompoly::algorithms::{
    count_dominating_conformal, domination_number_by_vanishing, domination_number_search,
    dp_product_of_components, dp_recursive_traced,
};
use dompoly::formats::{
    from_graph6, generate_family, parse_edge_list, to_graph6, ComputeRecord, Family, FamilySpec,
};
use dompoly::identities::{run_all, VerifyConfig};
use dompoly::{AlgoConfig, AlgoError, Algorithm, FormatError, Graph, Polynomial};
use num_bigint::BigInt;
use serde::Serialize;

use crate::args::Command;
use crate::args::{parse_algorithms, CommonArgs, ComputeArgs, Format, GenArgs, Source, VerifyArgs};
use crate::Failure;

/// Cross-checked pair used when `compute` gets no `--algo`.
const DEFAULT_COMPUTE: [Algorithm; 2] = [Algorithm::InclExcl, Algorithm::TypeSum];

pub fn dispatch(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Compute(a) => compute(&a),
        Command::Verify(a) => verify(&a),
        Command::Gamma(c) => gamma(&c),
        Command::Conformal(c) => conformal(&c),
        Command::Bench(a) => bench(&a),
        Command::Gen(a) => gen(&a),
    }
}

fn algo_config(c: &CommonArgs) -> AlgoConfig {
    AlgoConfig {
        vertex_enum_cap: c.vertex_cap,
        edge_enum_cap: c.edge_cap,
        parallel: c.parallel,
    }
}

fn spec_failure(e: FormatError) -> Failure {
    match e {
        FormatError::BadSpec(_) | FormatError::Graph(_) => Failure::Usage(e.to_string()),
        other => Failure::Parse(other.to_string()),
    }
}

fn family_spec(words: &[String], seed: Option<u64>) -> Result<FamilySpec, Failure> {
    let (name, rest) = words
        .split_first()
        .ok_or_else(|| Failure::Usage("--family needs a name".into()))?;
    let family: Family = name.parse().map_err(spec_failure)?;
    let params = rest
        .iter()
        .map(|p| {
            p.parse::<u64>().map_err(|_| {
                Failure::Usage(format!(
                    "family parameter {p:?} is not a nonnegative integer"
                ))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FamilySpec {
        family,
        params,
        seed,
    })
}

fn load_graphs(source: &Source, seed: Option<u64>) -> Result<Vec<Graph>, Failure> {
    if let Some(s) = &source.g6 {
        return Ok(vec![
            from_graph6(s.trim()).map_err(|e| Failure::Parse(e.to_string()))?
        ]);
    }
    if let Some(path) = &source.edges {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))?;
        return Ok(vec![
            parse_edge_list(&text).map_err(|e| Failure::Parse(e.to_string()))?
        ]);
    }
    if let Some(words) = &source.family {
        return Ok(vec![
            generate_family(&family_spec(words, seed)?).map_err(spec_failure)?
        ]);
    }
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| Failure::Parse(format!("cannot read stdin: {e}")))?;
    let graphs = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            from_graph6(l.trim()).map_err(|e| Failure::Parse(format!("stdin line {}: {e}", i + 1)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if graphs.is_empty() {
        return Err(Failure::Usage(
            "no input graph: give --g6, --edges, --family or graph6 on stdin".into(),
        ));
    }
    Ok(graphs)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1e3)
}

fn json_line<T: Serialize>(out: &mut String, value: &T) {
    out.push_str(&serde_json::to_string(value).expect("output types serialize"));
    out.push('\n');
}

fn record(g: &Graph, algo: Algorithm, d: &Polynomial, millis: Option<f64>) -> ComputeRecord {
    ComputeRecord {
        graph: to_graph6(g),
        n: g.n(),
        m: g.m(),
        algorithm: algo.name().to_owned(),
        coefficients: d.to_decimal_strings(),
        d: d.evaluate_int(&BigInt::from(1)).to_string(),
        gamma: d.lowest_degree().unwrap_or(0),
        millis,
    }
}

fn compute(a: &ComputeArgs) -> Result<(), Failure> {
    let c = &a.common;
    let algos = parse_algorithms(&a.algo, &DEFAULT_COMPUTE).map_err(Failure::Usage)?;
    let cfg = algo_config(c);
    let graphs = load_graphs(&c.source, c.seed)?;
    let format = c.format(Format::Json);
    let mut out = String::new();
    let mut disagreements = Vec::new();
    for g in &graphs {
        let mut results: Vec<(Algorithm, Polynomial)> = Vec::new();
        for &algo in &algos {
            let (d, ms) = timed(|| dp_product_of_components(g, algo, &cfg));
            let d = d?;
            let rec = record(g, algo, &d, (!c.no_timing).then_some(ms));
            match format {
                Format::Json => json_line(&mut out, &rec),
                Format::Table => {
                    let time = rec
                        .millis
                        .map(|t| format!("  {t:.3} ms"))
                        .unwrap_or_default();
                    let _ = writeln!(
                        out,
                        "{}  n={} m={}  {:<18}  d={} gamma={}{time}  {d}",
                        rec.graph, rec.n, rec.m, rec.algorithm, rec.d, rec.gamma
                    );
                }
            }
            results.push((algo, d));
        }
        if let Some((first, reference)) = results.first() {
            for (algo, d) in &results[1..] {
                if d != reference {
                    disagreements.push(format!(
                        "{} on {}: {reference} vs {}: {d}",
                        first,
                        to_graph6(g),
                        algo
                    ));
                }
            }
        }
    }
    print!("{out}");
    if disagreements.is_empty() {
        Ok(())
    } else {
        Err(Failure::Disagreement(disagreements.join("; ")))
    }
}

fn verify(a: &VerifyArgs) -> Result<(), Failure> {
    let c = &a.common;
    let cfg = VerifyConfig {
        algo: algo_config(c),
        edge_sum_cap: a.edge_sum_cap,
    };
    let graphs = load_graphs(&c.source, c.seed)?;
    let report = run_all(&graphs, &cfg);
    match c.format(Format::Table) {
        Format::Json => {
            let mut out = String::new();
            json_line(&mut out, &report);
            print!("{out}");
        }
        Format::Table => print!("{}", report.render_table(graphs.len() == 1)),
    }
    let failed = report.failures().count();
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::VerifyFailed(failed))
    }
}

#[derive(Serialize)]
struct GammaRecord {
    graph: String,
    n: usize,
    by_vanishing: usize,
    by_search: usize,
}

fn gamma(c: &CommonArgs) -> Result<(), Failure> {
    let cfg = algo_config(c);
    let graphs = load_graphs(&c.source, c.seed)?;
    let format = c.format(Format::Table);
    let mut out = String::new();
    let mut disagreements = Vec::new();
    for g in &graphs {
        let rec = GammaRecord {
            graph: to_graph6(g),
            n: g.n(),
            by_vanishing: domination_number_by_vanishing(g, &cfg)?,
            by_search: domination_number_search(g, &cfg)?,
        };
        match format {
            Format::Json => json_line(&mut out, &rec),
            Format::Table => {
                let _ = writeln!(
                    out,
                    "{}  gamma by vanishing sum: {}  by search: {}",
                    rec.graph, rec.by_vanishing, rec.by_search
                );
            }
        }
        if rec.by_vanishing != rec.by_search {
            disagreements.push(format!(
                "gamma on {}: {} vs {}",
                rec.graph, rec.by_vanishing, rec.by_search
            ));
        }
    }
    print!("{out}");
    if disagreements.is_empty() {
        Ok(())
    } else {
        Err(Failure::Disagreement(disagreements.join("; ")))
    }
}

#[derive(Serialize)]
struct ConformalMember {
    vertices: Vec<usize>,
    components: usize,
}

#[derive(Serialize)]
struct ConformalRecord {
    graph: String,
    sets: Vec<ConformalMember>,
    count: usize,
    total: String,
}

fn conformal(c: &CommonArgs) -> Result<(), Failure> {
    let cfg = algo_config(c);
    let graphs = load_graphs(&c.source, c.seed)?;
    let format = c.format(Format::Table);
    let mut out = String::new();
    for g in &graphs {
        let total = count_dominating_conformal(g, &cfg)?;
        let sets: Vec<ConformalMember> = g
            .conformal_sets()
            .map(|(w, k)| ConformalMember {
                vertices: w.iter().collect(),
                components: k,
            })
            .collect();
        let rec = ConformalRecord {
            graph: to_graph6(g),
            count: sets.len(),
            sets,
            total: total.to_string(),
        };
        match format {
            Format::Json => json_line(&mut out, &rec),
            Format::Table => {
                let _ = writeln!(out, "{}", rec.graph);
                for s in &rec.sets {
                    let names: Vec<String> = s.vertices.iter().map(ToString::to_string).collect();
                    let _ = writeln!(out, "  {{{}}}  k={}", names.join(","), s.components);
                }
                let _ = writeln!(
                    out,
                    "  {} conformal subsets, sum of 2^k = {}",
                    rec.count, rec.total
                );
            }
        }
    }
    print!("{out}");
    Ok(())
}

#[derive(Serialize)]
struct BenchRow {
    graph: String,
    algorithm: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    millis: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    terms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<String>,
}

/// Subsets or connected-set terms visited, summed over components.
fn run_with_terms(
    g: &Graph,
    algo: Algorithm,
    cfg: &AlgoConfig,
) -> Result<(Polynomial, u64), AlgoError> {
    let mut acc = Polynomial::one();
    let mut terms = 0u64;
    for comp in g.components() {
        let (h, _) = g.induced_subgraph(comp);
        let d = match algo {
            Algorithm::Recursive => {
                let (d, stats) = dp_recursive_traced(&h, cfg)?;
                terms = terms.saturating_add(stats.terms);
                d
            }
            Algorithm::BipartiteSpanning => {
                let d = algo.run(&h, cfg)?;
                terms = terms.saturating_add(1u64 << h.m());
                d
            }
            _ => {
                let d = algo.run(&h, cfg)?;
                terms = terms.saturating_add(1u64 << h.n());
                d
            }
        };
        acc = &acc * &d;
    }
    Ok((acc, terms))
}

fn bench(a: &ComputeArgs) -> Result<(), Failure> {
    let c = &a.common;
    let algos = parse_algorithms(&a.algo, &Algorithm::ALL).map_err(Failure::Usage)?;
    let cfg = algo_config(c);
    let graphs = load_graphs(&c.source, c.seed)?;
    let format = c.format(Format::Table);
    let mut out = String::new();
    if format == Format::Table {
        let _ = writeln!(
            out,
            "{:<12} {:<20} {:>12} {:>12}",
            "graph", "algorithm", "millis", "terms"
        );
    }
    let mut disagreements = Vec::new();
    for g in &graphs {
        let mut reference: Option<(Algorithm, Polynomial)> = None;
        for &algo in &algos {
            let (result, ms) = timed(|| run_with_terms(g, algo, &cfg));
            let row = match result {
                Ok((d, terms)) => {
                    match &reference {
                        Some((first, r)) if *r != d => {
                            disagreements.push(format!("{first} vs {algo} on {}", to_graph6(g)))
                        }
                        Some(_) => {}
                        None => reference = Some((algo, d)),
                    }
                    BenchRow {
                        graph: to_graph6(g),
                        algorithm: algo.name(),
                        millis: (!c.no_timing).then_some(ms),
                        terms: Some(terms),
                        skipped: None,
                    }
                }
                Err(e) => BenchRow {
                    graph: to_graph6(g),
                    algorithm: algo.name(),
                    millis: None,
                    terms: None,
                    skipped: Some(e.to_string()),
                },
            };
            match format {
                Format::Json => json_line(&mut out, &row),
                Format::Table => {
                    let millis = row
                        .millis
                        .map(|t| format!("{t:.3}"))
                        .unwrap_or_else(|| "-".into());
                    let terms = row
                        .terms
                        .map(|t| t.to_string())
                        .unwrap_or_else(|| "-".into());
                    let _ = write!(
                        out,
                        "{:<12} {:<20} {millis:>12} {terms:>12}",
                        row.graph, row.algorithm
                    );
                    if let Some(reason) = &row.skipped {
                        let _ = write!(out, "  skipped: {reason}");
                    }
                    out.push('\n');
                }
            }
        }
    }
    print!("{out}");
    if disagreements.is_empty() {
        Ok(())
    } else {
        Err(Failure::Disagreement(disagreements.join("; ")))
    }
}

fn gen(a: &GenArgs) -> Result<(), Failure> {
    let c = &a.common;
    let graphs = match &c.source.family {
        Some(words) if a.count > 1 => {
            let spec = family_spec(words, c.seed)?;
            if spec.family != Family::Random {
                return Err(Failure::Usage(
                    "--count only applies to the random family".into(),
                ));
            }
            let base = spec
                .seed
                .ok_or_else(|| Failure::Usage("random family requires --seed".into()))?;
            (0..a.count)
                .map(|i| {
                    generate_family(&FamilySpec {
                        seed: Some(base.wrapping_add(i)),
                        ..spec.clone()
                    })
                    .map_err(spec_failure)
                })
                .collect::<Result<Vec<_>, _>>()?
        }
        _ => load_graphs(&c.source, c.seed)?,
    };
    let mut out = String::new();
    for g in &graphs {
        out.push_str(&to_graph6(g));
        out.push('\n');
    }
    print!("{out}");
    Ok(())
}
