//! Verification of the identities and parity facts that tie the expansions
//! together, on concrete graphs.
//!
//! Every checker computes an "expected" and an "actual" side by different
//! routes (closed form against enumeration, or the defining sum against a
//! transformed sum) and records a pass, a failure with both sides as a
//! witness, or a skip naming the enumeration cap that was hit.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algorithms::spanning::bipartite_edge_components;
use crate::algorithms::{dp_brute_force, AlgoConfig};
use crate::error::{AlgoError, CapKind};
use crate::formats::to_graph6;
use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::poly::Polynomial;

/// Limits for the verification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub algo: AlgoConfig,
    /// Largest `m` for the edge alternating sum, which runs the brute-force
    /// oracle once per edge subset.
    pub edge_sum_cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            algo: AlgoConfig::default(),
            edge_sum_cap: 14,
        }
    }
}

impl VerifyConfig {
    /// Inner computations run on one thread; parallelism is per graph.
    fn inner(&self) -> AlgoConfig {
        AlgoConfig {
            parallel: false,
            ..self.algo
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityId {
    /// Alternating sum over spanning subgraphs: closed form when bipartite,
    /// zero otherwise.
    EdgeAlternatingSum,
    /// Alternating sum over edge deletions inside an odd-cyclic set vanishes.
    LocalOddCycle,
    /// Alternating sum over induced subgraphs equals the product over the type.
    VertexAlternatingSum,
    /// `d(G)` is odd.
    DominatingCountOdd,
    /// `D(G, -1)` is odd.
    MinusOneOdd,
    /// `d(G) - d(G - v)` is even for every vertex `v`.
    VertexDeletionEven,
    /// `D(G, -1)` as a signed sum of `2^{c(F)}` over bipartite spanning subgraphs.
    MinusOneBipartiteFormula,
    /// `D(G, x)` from the reversed polynomials of all induced subgraphs.
    Reciprocity,
    /// Signed sum of `d(G[W]) / 2^{|W|}` over proper subsets vanishes.
    HalfSum,
}

impl IdentityId {
    pub const ALL: [IdentityId; 9] = [
        IdentityId::EdgeAlternatingSum,
        IdentityId::LocalOddCycle,
        IdentityId::VertexAlternatingSum,
        IdentityId::DominatingCountOdd,
        IdentityId::MinusOneOdd,
        IdentityId::VertexDeletionEven,
        IdentityId::MinusOneBipartiteFormula,
        IdentityId::Reciprocity,
        IdentityId::HalfSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::EdgeAlternatingSum => "edge-alternating-sum",
            IdentityId::LocalOddCycle => "local-odd-cycle",
            IdentityId::VertexAlternatingSum => "vertex-alternating-sum",
            IdentityId::DominatingCountOdd => "dominating-count-odd",
            IdentityId::MinusOneOdd => "minus-one-odd",
            IdentityId::VertexDeletionEven => "vertex-deletion-even",
            IdentityId::MinusOneBipartiteFormula => "minus-one-bipartite-formula",
            IdentityId::Reciprocity => "reciprocity",
            IdentityId::HalfSum => "half-sum",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// A value on one side of an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Quantity {
    /// Coefficients as decimal strings, low degree first.
    Polynomial(Polynomial),
    /// Decimal string.
    Integer(String),
}

impl From<Polynomial> for Quantity {
    fn from(p: Polynomial) -> Self {
        Quantity::Polynomial(p)
    }
}

impl From<BigInt> for Quantity {
    fn from(i: BigInt) -> Self {
        Quantity::Integer(i.to_string())
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Polynomial(p) => write!(f, "{p}"),
            Quantity::Integer(i) => f.write_str(i),
        }
    }
}

/// Both sides of a failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub expected: Quantity,
    pub actual: Quantity,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// One identity checked on one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub identity: IdentityId,
    /// The graph in graph6.
    pub graph: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Why the check was skipped, naming the cap.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

impl Entry {
    fn compare(
        identity: IdentityId,
        g: &Graph,
        expected: impl Into<Quantity>,
        actual: impl Into<Quantity>,
    ) -> Self {
        let (expected, actual) = (expected.into(), actual.into());
        if expected == actual {
            Entry::pass(identity, g)
        } else {
            Entry::fail(
                identity,
                g,
                Witness {
                    expected,
                    actual,
                    detail: None,
                },
            )
        }
    }

    fn pass(identity: IdentityId, g: &Graph) -> Self {
        Entry {
            identity,
            graph: to_graph6(g),
            status: Status::Pass,
            witness: None,
            skipped: None,
        }
    }

    fn fail(identity: IdentityId, g: &Graph, witness: Witness) -> Self {
        Entry {
            identity,
            graph: to_graph6(g),
            status: Status::Fail,
            witness: Some(witness),
            skipped: None,
        }
    }

    fn skip(identity: IdentityId, g: &Graph, reason: String) -> Self {
        Entry {
            identity,
            graph: to_graph6(g),
            status: Status::Skipped,
            witness: None,
            skipped: Some(reason),
        }
    }

    fn from_cap(identity: IdentityId, g: &Graph, err: AlgoError) -> Self {
        Entry::skip(identity, g, err.to_string())
    }

    fn with_detail(mut self, detail: String) -> Self {
        if let Some(w) = &mut self.witness {
            w.detail = Some(detail);
        }
        self
    }
}

/// Results of a verification run, in corpus order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub entries: Vec<Entry>,
}

impl VerificationReport {
    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    /// True when nothing failed. Skips do not count as failures.
    pub fn is_success(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    /// `(pass, fail, skipped)` per identity, for identities that appear.
    pub fn summary(&self) -> Vec<(IdentityId, [usize; 3])> {
        IdentityId::ALL
            .into_iter()
            .filter_map(|id| {
                let mut c = [0; 3];
                for e in self.entries.iter().filter(|e| e.identity == id) {
                    c[e.status as usize] += 1;
                }
                (c.iter().sum::<usize>() > 0).then_some((id, c))
            })
            .collect()
    }

    /// Human-readable table. `verbose` lists every entry; otherwise only
    /// failures are listed under the per-identity summary.
    pub fn render_table(&self, verbose: bool) -> String {
        let mut out = format!(
            "{:<30} {:>7} {:>7} {:>7}\n",
            "identity", "pass", "fail", "skipped"
        );
        for (id, [p, f, s]) in self.summary() {
            out.push_str(&format!("{:<30} {p:>7} {f:>7} {s:>7}\n", id.name()));
        }
        let listed: Vec<&Entry> = if verbose {
            self.entries.iter().collect()
        } else {
            self.failures().collect()
        };
        if !listed.is_empty() {
            out.push('\n');
        }
        for e in listed {
            let status = match e.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            out.push_str(&format!("{status} {:<28} {}", e.identity.name(), e.graph));
            if let Some(w) = &e.witness {
                out.push_str(&format!("  expected {}  actual {}", w.expected, w.actual));
                if let Some(d) = &w.detail {
                    out.push_str(&format!("  ({d})"));
                }
            }
            if let Some(reason) = &e.skipped {
                out.push_str(&format!("  ({reason})"));
            }
            out.push('\n');
        }
        out
    }
}

fn signed(mask: u64) -> BigInt {
    if mask.count_ones().is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn dominating_count(g: &Graph, cfg: &AlgoConfig) -> Result<BigInt, AlgoError> {
    Ok(dp_brute_force(g, cfg)?.evaluate_int(&BigInt::one()))
}

/// `x^l prod_i [(-1)^{|Y_i|} x^{|Z_i|} + (-1)^{|Z_i|} x^{|Y_i|}]` from the
/// two-colouring; `flip` swaps the colour classes of every component.
fn bipartite_closed_form(g: &Graph, flip: bool) -> Option<Polynomial> {
    let bip = g.bipartition()?;
    let s = |k: usize| if k.is_multiple_of(2) { 1 } else { -1 };
    let mut acc = Polynomial::monomial(1, bip.isolated_count);
    for c in &bip.components {
        let (y, z) = if flip {
            (c.z.len(), c.y.len())
        } else {
            (c.y.len(), c.z.len())
        };
        acc = &acc * &(&Polynomial::monomial(s(y), z) + &Polynomial::monomial(s(z), y));
    }
    Some(acc)
}

/// `sum_{F subset E} (-1)^{|F|} D((V, F), x)` against the bipartite closed
/// form, or against zero when `G` has an odd cycle.
pub fn check_edge_alternating_sum(g: &Graph, cfg: &VerifyConfig) -> Entry {
    let id = IdentityId::EdgeAlternatingSum;
    let inner = cfg.inner();
    if let Err(e) = AlgoError::check_cap(CapKind::EdgeSum, cfg.edge_sum_cap, g.m())
        .and_then(|()| inner.check_vertices(g.n()))
    {
        return Entry::from_cap(id, g, e);
    }
    let mut sum = Polynomial::zero();
    for mask in 0..1u64 << g.m() {
        let d = dp_brute_force(&g.spanning_subgraph(&EdgeSet::from_mask(mask)), &inner)
            .expect("vertex cap checked");
        sum.add_scaled(&d, &signed(mask));
    }
    match bipartite_closed_form(g, false) {
        None => Entry::compare(id, g, Polynomial::zero(), sum),
        Some(closed) => {
            let flipped = bipartite_closed_form(g, true).expect("bipartite");
            if flipped != closed {
                return Entry::fail(
                    id,
                    g,
                    Witness {
                        expected: closed.into(),
                        actual: flipped.into(),
                        detail: Some("closed form changed under a colour swap".into()),
                    },
                );
            }
            if sum.is_zero() {
                return Entry::fail(
                    id,
                    g,
                    Witness {
                        expected: closed.into(),
                        actual: sum.into(),
                        detail: Some("sum vanished on a bipartite graph".into()),
                    },
                );
            }
            Entry::compare(id, g, closed, sum)
        }
    }
}

/// `sum_{F subset A} (-1)^{|F|} D(G - F, x) = 0` for an edge set `A` whose
/// spanning subgraph has an odd cycle.
pub fn check_local_odd_cycle(
    g: &Graph,
    a: &EdgeSet,
    cfg: &VerifyConfig,
) -> Result<Entry, AlgoError> {
    let id = IdentityId::LocalOddCycle;
    if g.spanning_subgraph(a).is_bipartite() {
        return Err(AlgoError::NotOddCyclic);
    }
    let inner = cfg.inner();
    let chosen: Vec<usize> = a.iter().filter(|&e| e < g.m()).collect();
    if let Err(e) = inner
        .check_edges(chosen.len())
        .and_then(|()| inner.check_vertices(g.n()))
    {
        return Ok(Entry::from_cap(id, g, e));
    }
    let mut sum = Polynomial::zero();
    for mask in 0..1u64 << chosen.len() {
        let removed: EdgeSet = chosen
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let kept: EdgeSet = (0..g.m()).filter(|&e| !removed.contains(e)).collect();
        let d = dp_brute_force(&g.spanning_subgraph(&kept), &inner).expect("vertex cap checked");
        sum.add_scaled(&d, &signed(mask));
    }
    let detail = format!(
        "A = {:?}",
        chosen.iter().map(|&e| g.edges()[e]).collect::<Vec<_>>()
    );
    Ok(Entry::compare(id, g, Polynomial::zero(), sum).with_detail(detail))
}

/// `sum_{W subset V} (-1)^{|W|} D(G[W], x) = prod_{i in type(G)} (1 + (-x)^i)`.
pub fn check_vertex_alternating_sum(g: &Graph, cfg: &VerifyConfig) -> Entry {
    let id = IdentityId::VertexAlternatingSum;
    let inner = cfg.inner();
    if let Err(e) = inner.check_vertices(g.n()) {
        return Entry::from_cap(id, g, e);
    }
    let expected: Polynomial = g
        .type_partition()
        .parts()
        .iter()
        .map(|&i| (&Polynomial::one() + &Polynomial::monomial(1, i)).substitute_neg())
        .product();
    let mut actual = Polynomial::zero();
    for mask in 0..1u64 << g.n() {
        let (h, _) = g.induced_subgraph(VertexSet(mask));
        actual.add_scaled(
            &dp_brute_force(&h, &inner).expect("smaller than G"),
            &signed(mask),
        );
    }
    Entry::compare(id, g, expected, actual)
}

/// Three parity facts: `d(G)` odd, `D(G, -1)` odd, and `d(G) - d(G - v)`
/// even for every `v`.
pub fn check_parity_suite(g: &Graph, cfg: &VerifyConfig) -> Vec<Entry> {
    use IdentityId::{DominatingCountOdd, MinusOneOdd, VertexDeletionEven};
    let inner = cfg.inner();
    let d_poly = match dp_brute_force(g, &inner) {
        Ok(p) => p,
        Err(e) => {
            return [DominatingCountOdd, MinusOneOdd, VertexDeletionEven]
                .map(|id| Entry::from_cap(id, g, e.clone()))
                .to_vec()
        }
    };
    let odd = |v: &BigRational| v.is_integer() && (v.to_integer() % 2u32) != BigInt::zero();
    let parity_entry = |id, value: BigRational, want_odd: bool, detail: String| {
        if odd(&value) == want_odd {
            Entry::pass(id, g)
        } else {
            Entry::fail(
                id,
                g,
                Witness {
                    expected: Quantity::Integer(if want_odd { "odd" } else { "even" }.into()),
                    actual: Quantity::Integer(value.to_string()),
                    detail: Some(detail),
                },
            )
        }
    };
    let d = d_poly.evaluate(&BigRational::one());
    let at_minus_one = d_poly.evaluate(&-BigRational::one());
    let mut out = vec![
        parity_entry(DominatingCountOdd, d.clone(), true, "d(G)".into()),
        parity_entry(MinusOneOdd, at_minus_one, true, "D(G,-1)".into()),
    ];
    let mut deletion = Entry::pass(VertexDeletionEven, g);
    for v in 0..g.n() {
        let dv = dominating_count(&g.delete_vertices(VertexSet::singleton(v)), &inner)
            .expect("smaller than G");
        let diff = &d - BigRational::from_integer(dv);
        let e = parity_entry(
            VertexDeletionEven,
            diff,
            false,
            format!("d(G) - d(G - {v})"),
        );
        if e.status == Status::Fail {
            deletion = e;
            break;
        }
    }
    out.push(deletion);
    out
}

/// `D(G, -1) = (-1)^{|V|} sum_{F bipartite} (-1)^{|F|} 2^{c(F)}`, with
/// `c(F)` the number of components of `(V, F)` that have an edge.
pub fn check_minus_one_bipartite_formula(g: &Graph, cfg: &VerifyConfig) -> Entry {
    let id = IdentityId::MinusOneBipartiteFormula;
    let inner = cfg.inner();
    if let Err(e) = inner
        .check_edges(g.m())
        .and_then(|()| inner.check_vertices(g.n()))
    {
        return Entry::from_cap(id, g, e);
    }
    let expected = dp_brute_force(g, &inner)
        .expect("caps checked")
        .evaluate_int(&-BigInt::one());
    let mut sum = BigInt::zero();
    for mask in 0..1u64 << g.m() {
        if let Some(c) = bipartite_edge_components(g.n(), g.edges(), mask) {
            sum += signed(mask) << c;
        }
    }
    if g.n() % 2 == 1 {
        sum = -sum;
    }
    Entry::compare(id, g, expected, sum)
}

/// `D(G, x) = sum_W (-1)^{|W|} (1+x)^{n-|W|} x^{|W|} D(G[W], 1/x)`, the
/// reciprocity relation multiplied through so that everything stays a
/// polynomial.
pub fn check_reciprocity(g: &Graph, cfg: &VerifyConfig) -> Entry {
    let id = IdentityId::Reciprocity;
    let inner = cfg.inner();
    let expected = match dp_brute_force(g, &inner) {
        Ok(p) => p,
        Err(e) => return Entry::from_cap(id, g, e),
    };
    let n = g.n();
    let mut actual = Polynomial::zero();
    for mask in 0..1u64 << n {
        let w = VertexSet(mask);
        let (h, _) = g.induced_subgraph(w);
        let reversed = dp_brute_force(&h, &inner)
            .expect("smaller than G")
            .reverse_to_degree(w.len())
            .expect("deg D(G[W]) = |W|");
        let term = &Polynomial::binomial_power(n - w.len()) * &reversed;
        actual.add_scaled(&term, &signed(mask));
    }
    Entry::compare(id, g, expected, actual)
}

/// `sum_{W proper subset of V} (-1)^{|W|} d(G[W]) 2^{n-|W|} = 0`, the
/// half-sum relation scaled by `2^n`. Graphs with fewer than two vertices
/// are skipped.
pub fn check_half_sum(g: &Graph, cfg: &VerifyConfig) -> Entry {
    let id = IdentityId::HalfSum;
    let inner = cfg.inner();
    if let Err(e) = inner.check_vertices(g.n()) {
        return Entry::from_cap(id, g, e);
    }
    let n = g.n();
    if n < 2 {
        return Entry::skip(id, g, format!("n = {n}: only stated for n >= 2"));
    }
    let full = g.vertices().bits();
    let mut actual = BigInt::zero();
    for mask in (0..1u64 << n).filter(|&m| m != full) {
        let (h, _) = g.induced_subgraph(VertexSet(mask));
        let d = dominating_count(&h, &inner).expect("smaller than G");
        actual += (signed(mask) * d) << (n - mask.count_ones() as usize);
    }
    Entry::compare(id, g, BigInt::zero(), actual)
}

/// Every checker on one graph. The local odd-cycle check runs on the
/// edges of one odd cycle and only for non-bipartite graphs.
pub fn check_graph(g: &Graph, cfg: &VerifyConfig) -> Vec<Entry> {
    let mut out = vec![check_edge_alternating_sum(g, cfg)];
    if let Some(cycle) = g.odd_cycle() {
        let a: EdgeSet = (0..cycle.len())
            .map(|i| {
                g.edge_index(cycle[i], cycle[(i + 1) % cycle.len()])
                    .expect("consecutive cycle vertices are adjacent")
            })
            .collect();
        out.push(check_local_odd_cycle(g, &a, cfg).expect("cycle is odd"));
    }
    out.push(check_vertex_alternating_sum(g, cfg));
    out.extend(check_parity_suite(g, cfg));
    out.push(check_minus_one_bipartite_formula(g, cfg));
    out.push(check_reciprocity(g, cfg));
    out.push(check_half_sum(g, cfg));
    out
}

/// Runs every applicable checker on every graph. Graphs are processed in
/// parallel when `cfg.algo.parallel` is set; entries stay in corpus order.
pub fn run_all(corpus: &[Graph], cfg: &VerifyConfig) -> VerificationReport {
    let per_graph: Vec<Vec<Entry>> = if cfg.algo.parallel {
        corpus.par_iter().map(|g| check_graph(g, cfg)).collect()
    } else {
        corpus.iter().map(|g| check_graph(g, cfg)).collect()
    };
    VerificationReport {
        entries: per_graph.into_iter().flatten().collect(),
    }
}
