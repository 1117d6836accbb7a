//! Graph ingestion and emission: graph6, plain edge lists, deterministic
//! families, seeded random graphs and the JSON result record.

use std::fmt;
use std::str::FromStr;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};

use crate::error::FormatError;
use crate::graph::{Graph, MAX_VERTICES};

fn malformed(msg: impl Into<String>) -> FormatError {
    FormatError::MalformedGraph6(msg.into())
}

/// Encodes `g` in graph6: size prefix, then the upper triangle of the
/// adjacency matrix column by column, six bits per printable byte.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|b| b as u8 + 63));
    }
    let mut byte = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            byte = byte << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(byte + 63);
                byte = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((byte << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 string. Surrounding whitespace is ignored.
pub fn from_graph6(text: &str) -> Result<Graph, FormatError> {
    let bytes = text.trim().as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(malformed(format!("byte {b} outside 63..=126")));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, body) = match bytes {
        [] => return Err(malformed("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(malformed("truncated size prefix"));
            }
            let n = rest[..6].iter().fold(0, |acc, &b| acc << 6 | six(b));
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(malformed("truncated size prefix"));
            }
            let n = rest[..3].iter().fold(0, |acc, &b| acc << 6 | six(b));
            (n, &rest[3..])
        }
        [b, rest @ ..] => (six(*b), rest),
    };
    if n > MAX_VERTICES {
        return Err(malformed(format!(
            "{n} vertices, at most {MAX_VERTICES} supported"
        )));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "expected {expected} adjacency bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let bit = six(body[k / 6]) >> (5 - k % 6) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, edges)?)
}

/// Parses `n <count>` followed by `u v` lines. Blank lines and lines starting
/// with `#` are skipped; repeated edges and both orientations are merged.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut n = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let parse_num = |s: &str| {
            s.parse::<usize>().map_err(|_| FormatError::Parse {
                line,
                message: format!("expected a vertex index, found {s:?}"),
            })
        };
        let Some(count) = n else {
            match fields.as_slice() {
                ["n", c] => {
                    let c = parse_num(c)?;
                    if c > MAX_VERTICES {
                        return Err(FormatError::Parse {
                            line,
                            message: format!("{c} vertices, at most {MAX_VERTICES} supported"),
                        });
                    }
                    n = Some(c);
                    continue;
                }
                _ => {
                    return Err(FormatError::Parse {
                        line,
                        message: "expected header `n <count>`".into(),
                    })
                }
            }
        };
        let [u, v] = fields.as_slice() else {
            return Err(FormatError::Parse {
                line,
                message: "expected two vertex indices".into(),
            });
        };
        let (u, v) = (parse_num(u)?, parse_num(v)?);
        if let Some(bad) = [u, v].into_iter().find(|&x| x >= count) {
            return Err(FormatError::VertexOutOfRange {
                line,
                vertex: bad,
                n: count,
            });
        }
        if u == v {
            return Err(FormatError::SelfLoop { line, vertex: u });
        }
        edges.push((u, v));
    }
    let n = n.ok_or(FormatError::Parse {
        line: text.lines().count().max(1),
        message: "missing header `n <count>`".into(),
    })?;
    Ok(Graph::new(n, edges)?)
}

/// Inverse of [`parse_edge_list`]: header line, then one canonical edge per line.
pub fn render_edge_list(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Edgeless,
    Random,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Star,
        Family::Edgeless,
        Family::Random,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Star => "star",
            Family::Edgeless => "edgeless",
            Family::Random => "random",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::CompleteBipartite => 2,
            Family::Random => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, FormatError> {
        let s = s.replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| FormatError::BadSpec(format!("unknown family {s:?}")))
    }
}

/// A named graph family with its integer parameters.
///
/// `random` takes `[n, numerator, denominator]` and needs a seed; every
/// other family takes `[n]`, except `complete_bipartite` which takes `[a, b]`.
/// `star n` has `n` vertices: one centre and `n - 1` leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<u64>,
    pub seed: Option<u64>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<u64>) -> Self {
        FamilySpec {
            family,
            params,
            seed: None,
        }
    }

    pub fn random(n: u64, numerator: u64, denominator: u64, seed: u64) -> Self {
        FamilySpec {
            family: Family::Random,
            params: vec![n, numerator, denominator],
            seed: Some(seed),
        }
    }
}

/// Deterministic construction of a family member.
pub fn generate_family(spec: &FamilySpec) -> Result<Graph, FormatError> {
    let f = spec.family;
    if spec.params.len() != f.arity() {
        return Err(FormatError::BadSpec(format!(
            "{f} takes {} parameter(s), got {}",
            f.arity(),
            spec.params.len()
        )));
    }
    let to_n = |x: u64| -> Result<usize, FormatError> {
        usize::try_from(x)
            .ok()
            .filter(|&n| n <= MAX_VERTICES)
            .ok_or_else(|| {
                FormatError::BadSpec(format!("{x} vertices, at most {MAX_VERTICES} supported"))
            })
    };
    let n = to_n(spec.params[0])?;
    let g = match f {
        Family::Path => Graph::new(n, (1..n).map(|i| (i - 1, i)))?,
        Family::Cycle => {
            if n < 3 {
                return Err(FormatError::BadSpec(
                    "cycle needs at least 3 vertices".into(),
                ));
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))?
        }
        Family::Complete => Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))?,
        Family::CompleteBipartite => {
            let b = to_n(spec.params[1])?;
            Graph::new(n + b, (0..n).flat_map(|i| (n..n + b).map(move |j| (i, j))))?
        }
        Family::Star => Graph::new(n, (1..n).map(|i| (0, i)))?,
        Family::Edgeless => Graph::edgeless(n)?,
        Family::Random => {
            let (num, den) = (spec.params[1], spec.params[2]);
            if den == 0 || num > den {
                return Err(FormatError::BadSpec(format!(
                    "probability {num}/{den} is not in [0, 1]"
                )));
            }
            let seed = spec
                .seed
                .ok_or_else(|| FormatError::BadSpec("random family requires a seed".into()))?;
            random_graph(n, num, den, seed)?
        }
    };
    Ok(g)
}

/// Each pair `(i, j)`, `i < j`, visited in lexicographic order, is kept iff
/// the next SplitMix64 output `r` satisfies `floor(r * den / 2^64) < num`.
fn random_graph(n: usize, num: u64, den: u64, seed: u64) -> Result<Graph, FormatError> {
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let r = rng.next_u64();
            if (u128::from(r) * u128::from(den)) >> 64 < u128::from(num) {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::new(n, edges)?)
}

/// Every labelled graph on `n` vertices, ordered by edge mask over the
/// canonical pair order. There are `2^(n(n-1)/2)` of them.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(
        n <= 11,
        "2^(n(n-1)/2) labelled graphs do not fit in a u64 mask for n > 11"
    );
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0..1u64 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).expect("pairs are valid")
    })
}

/// Seeded random corpus: graph `i` has `6 + i % 4` vertices and edge
/// probability `1/5`, `1/2` or `4/5` by `(i / 4) % 3`, drawn with seed
/// `seed + i`.
pub fn random_corpus(count: usize, seed: u64) -> Vec<Graph> {
    const PROBS: [(u64, u64); 3] = [(1, 5), (1, 2), (4, 5)];
    (0..count)
        .map(|i| {
            let n = 6 + (i % 4) as u64;
            let (num, den) = PROBS[(i / 4) % 3];
            generate_family(&FamilySpec::random(
                n,
                num,
                den,
                seed.wrapping_add(i as u64),
            ))
            .expect("corpus specs are valid")
        })
        .collect()
}

/// One `compute` result, as written by the command-line tool.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComputeRecord {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub algorithm: String,
    /// Decimal strings, low degree first.
    pub coefficients: Vec<String>,
    /// Number of dominating sets, in decimal.
    pub d: String,
    pub gamma: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub millis: Option<f64>,
}
