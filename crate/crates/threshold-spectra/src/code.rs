//! The integer-string encoding of a threshold construction and its
//! materialization as an explicit hypergraph.
//!
//! A construction string `0^{m_1} k_1 0^{m_2} k_2 ... 0^{m_d} k_d` records
//! `m_i` isolated vertices added before the i-th domination and the size
//! `k_i` of the i-th dominating set. The first token is always 0 because
//! the construction starts with an isolated vertex.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// A parsed construction string: `m[i]` isolated vertices before the
/// (i+1)-th domination of size `k[i]`. With no dominations (`k` empty)
/// the code is a run of `m[0]` isolated vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThresholdCode {
    m: Vec<usize>,
    k: Vec<usize>,
}

impl ThresholdCode {
    pub fn new(m: Vec<usize>, k: Vec<usize>) -> Result<Self> {
        if k.is_empty() {
            if m.len() != 1 || m[0] == 0 {
                return Err(Error::InvalidCode(
                    "a domination-free code is a single positive run of zeros".into(),
                ));
            }
        } else {
            if m.len() != k.len() {
                return Err(Error::InvalidCode(format!(
                    "{} isolated-vertex runs for {} dominations",
                    m.len(),
                    k.len()
                )));
            }
            if m[0] == 0 {
                return Err(Error::InvalidCode("m_1 must be at least 1".into()));
            }
            if k.iter().any(|&ki| ki == 0) {
                return Err(Error::InvalidCode("every domination size must be positive".into()));
            }
        }
        Ok(ThresholdCode { m, k })
    }

    /// Number of dominations.
    pub fn dominations(&self) -> usize {
        self.k.len()
    }

    pub fn isolated_runs(&self) -> &[usize] {
        &self.m
    }

    pub fn domination_sizes(&self) -> &[usize] {
        &self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.m.iter().sum::<usize>() + self.k.iter().sum::<usize>()
    }

    /// The shared domination size if all dominations use the same k.
    /// A domination-free code reports no k.
    pub fn uniform_k(&self) -> Option<usize> {
        let first = *self.k.first()?;
        self.k.iter().all(|&ki| ki == first).then_some(first)
    }

    /// Parses a construction string. Tokens are whitespace- or
    /// comma-separated non-negative integers; `0^m` abbreviates a run of
    /// `m` zeros (braces allowed, as in `0^{3}`).
    pub fn parse(text: &str) -> Result<Self> {
        let mut stream: Vec<usize> = Vec::new();
        for token in text.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            if let Some((base, count)) = token.split_once('^') {
                let count = count.trim_start_matches('{').trim_end_matches('}');
                if base != "0" {
                    return Err(Error::MalformedRunLength(token.to_string()));
                }
                let count: usize = count
                    .parse()
                    .map_err(|_| Error::MalformedRunLength(token.to_string()))?;
                if count == 0 {
                    return Err(Error::MalformedRunLength(token.to_string()));
                }
                stream.extend(std::iter::repeat(0).take(count));
            } else {
                let value: i64 = token
                    .parse()
                    .map_err(|_| Error::MalformedToken(token.to_string()))?;
                if value < 0 {
                    return Err(Error::NegativeToken);
                }
                stream.push(value as usize);
            }
        }
        if stream.is_empty() {
            return Err(Error::EmptyInput);
        }
        if stream[0] != 0 {
            return Err(Error::FirstTokenNonzero);
        }
        let mut m = Vec::new();
        let mut k = Vec::new();
        let mut zeros = 0usize;
        for &s in &stream {
            if s == 0 {
                zeros += 1;
            } else {
                m.push(zeros);
                k.push(s);
                zeros = 0;
            }
        }
        if zeros > 0 {
            if k.is_empty() {
                // pure run of isolated vertices
                return ThresholdCode::new(vec![zeros], vec![]);
            }
            return Err(Error::TrailingIsolated);
        }
        ThresholdCode::new(m, k)
    }

    /// Inverse of [`parse`]: expanded form lists every token, run-length
    /// form compresses zero runs as `0^m`.
    pub fn serialize(&self, runlength: bool) -> String {
        let mut parts: Vec<String> = Vec::new();
        let push_zeros = |parts: &mut Vec<String>, count: usize| {
            if count == 0 {
                return;
            }
            if runlength && count > 1 {
                parts.push(format!("0^{count}"));
            } else {
                parts.extend(std::iter::repeat("0".to_string()).take(count));
            }
        };
        if self.k.is_empty() {
            push_zeros(&mut parts, self.m[0]);
        } else {
            for (mi, ki) in self.m.iter().zip(&self.k) {
                push_zeros(&mut parts, *mi);
                parts.push(ki.to_string());
            }
        }
        parts.join(" ")
    }

    /// Replays the construction: for each step add `m_i` isolated
    /// vertices, then a dominating set `S_i` of `k_i` fresh vertices and
    /// one edge `S_i ∪ {v}` per previously present vertex `v`. Vertex ids
    /// follow creation order.
    pub fn build(&self) -> Hypergraph {
        let n = self.vertex_count();
        let mut edges = Vec::new();
        let mut present = if self.k.is_empty() { self.m[0] } else { 0 };
        for (mi, ki) in self.m.iter().zip(&self.k) {
            present += mi;
            let dominators: Vec<usize> = (present..present + ki).collect();
            for v in 0..present {
                let mut edge = Vec::with_capacity(ki + 1);
                edge.push(v);
                edge.extend(&dominators);
                edges.push(edge);
            }
            present += ki;
        }
        Hypergraph::new(n, edges).expect("construction always yields valid edges")
    }

    /// Degree of every vertex added in the i-th domination (1-based) of a
    /// uniform-k code: sum of m_1..m_i, plus k per earlier domination,
    /// plus one per later domination.
    pub fn k_threshold_degree(&self, i: usize) -> Result<usize> {
        let k = self.uniform_k().ok_or(Error::NonUniformK)?;
        let d = self.dominations();
        assert!(i >= 1 && i <= d, "domination index out of range");
        let m_prefix: usize = self.m[..i].iter().sum();
        Ok(m_prefix + k * (i - 1) + (d - i))
    }
}

impl std::fmt::Display for ThresholdCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.serialize(false))
    }
}

/// Knobs for [`random_code`].
#[derive(Debug, Clone, Copy)]
pub struct RandomCodeParams {
    pub max_d: usize,
    pub max_k: usize,
    pub max_m: usize,
    /// Force all dominations to use the same k.
    pub uniform_k: bool,
    /// Force every isolated-vertex run to be non-empty.
    pub all_m_positive: bool,
}

impl Default for RandomCodeParams {
    fn default() -> Self {
        RandomCodeParams {
            max_d: 4,
            max_k: 4,
            max_m: 4,
            uniform_k: false,
            all_m_positive: false,
        }
    }
}

/// Deterministic random construction code. The generator is ChaCha8
/// seeded directly with `seed`, so instances are reproducible across
/// platforms and runs.
pub fn random_code(seed: u64, params: &RandomCodeParams) -> ThresholdCode {
    assert!(params.max_d >= 1 && params.max_k >= 1 && params.max_m >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = rng.gen_range(1..=params.max_d);
    let shared_k = rng.gen_range(1..=params.max_k);
    let mut m = Vec::with_capacity(d);
    let mut k = Vec::with_capacity(d);
    for i in 0..d {
        let lo = if i == 0 || params.all_m_positive { 1 } else { 0 };
        m.push(rng.gen_range(lo..=params.max_m));
        k.push(if params.uniform_k {
            shared_k
        } else {
            rng.gen_range(1..=params.max_k)
        });
    }
    ThresholdCode::new(m, k).expect("generated code is valid by construction")
}
