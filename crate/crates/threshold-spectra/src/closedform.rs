//! Closed-form Laplacian spectra: the k-domination update rule, the
//! construction-string formula, the uniform-k corollary, and the
//! complement / union / co-expression calculus built on top of them.

use num::{BigInt, One, Zero};

use crate::code::ThresholdCode;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::rational::{binomial, rat_usize, Rational};
use crate::spectrum::Spectrum;

/// Spectrum after applying a k-domination to a hypergraph with spectrum
/// `spec` on `n` vertices: one zero, every old nonzero-slot eigenvalue
/// shifted up by 1, `(n+k)/k` once, and `((k+1)/k)*n` with multiplicity
/// `k-1`.
pub fn dominate_spectrum(spec: &Spectrum, k: usize) -> Result<Spectrum> {
    if k == 0 {
        return Err(Error::NonPositiveK);
    }
    let n = spec.total();
    if n == 0 {
        return Err(Error::EmptySpectrum);
    }
    if spec.multiplicity(&Rational::zero()) == 0 {
        return Err(Error::MissingZeroEigenvalue);
    }
    let mut pairs: Vec<(Rational, usize)> = Vec::new();
    // one zero is consumed as lambda_1; the rest shift by 1
    let one = Rational::one();
    for (v, m) in spec.entries() {
        let m = if v.is_zero() { m - 1 } else { *m };
        pairs.push((v + &one, m));
    }
    pairs.push((Rational::zero(), 1));
    pairs.push((rat_usize(n + k) / rat_usize(k), 1));
    pairs.push((rat_usize((k + 1) * n) / rat_usize(k), k - 1));
    Ok(Spectrum::from_pairs(pairs))
}

/// Adds `count` isolated vertices: `count` extra zeros.
pub fn add_isolated(spec: &Spectrum, count: usize) -> Spectrum {
    let mut pairs = spec.entries().to_vec();
    pairs.push((Rational::zero(), count));
    Spectrum::from_pairs(pairs)
}

/// Complete spectrum of a construction code, evaluated directly from
/// the string data. With `d` dominations and prefix sums
/// `M_i = m_1+..+m_i`, `K_i = k_1+..+k_i`:
///
/// * 0 once;
/// * `d-i+1` with multiplicity `m_i` for i = 2..d;
/// * `d` with multiplicity `m_1 - 1`;
/// * `(M_i + K_i)/k_i + d - i` once per i;
/// * `(k_i+1)/k_i * (M_i + K_{i-1}) + d - i` with multiplicity `k_i - 1` per i.
///
/// Terms with zero multiplicity contribute nothing. A domination-free
/// code yields an all-zero spectrum.
pub fn threshold_spectrum(code: &ThresholdCode) -> Spectrum {
    let d = code.dominations();
    if d == 0 {
        return add_isolated(&Spectrum::empty(), code.vertex_count());
    }
    let m = code.isolated_runs();
    let k = code.domination_sizes();
    let mut pairs: Vec<(Rational, usize)> = vec![(Rational::zero(), 1)];
    for i in 2..=d {
        pairs.push((rat_usize(d - i + 1), m[i - 1]));
    }
    pairs.push((rat_usize(d), m[0] - 1));
    let mut m_prefix = 0usize;
    let mut k_prefix = 0usize;
    for i in 1..=d {
        m_prefix += m[i - 1];
        let ki = k[i - 1];
        pairs.push((
            rat_usize(m_prefix + k_prefix + ki) / rat_usize(ki) + rat_usize(d - i),
            1,
        ));
        pairs.push((
            rat_usize((ki + 1) * (m_prefix + k_prefix)) / rat_usize(ki) + rat_usize(d - i),
            ki - 1,
        ));
        k_prefix += ki;
    }
    Spectrum::from_pairs(pairs)
}

/// Same spectrum obtained by replaying the construction one step at a
/// time with [`add_isolated`] and [`dominate_spectrum`].
pub fn incremental_spectrum(code: &ThresholdCode) -> Result<Spectrum> {
    let mut spec = Spectrum::empty();
    if code.dominations() == 0 {
        return Ok(add_isolated(&spec, code.vertex_count()));
    }
    for (mi, ki) in code.isolated_runs().iter().zip(code.domination_sizes()) {
        spec = add_isolated(&spec, *mi);
        spec = dominate_spectrum(&spec, *ki)?;
    }
    Ok(spec)
}

/// Uniform-k specialization of [`threshold_spectrum`]:
///
/// * 0 once;
/// * `d-i+1` with multiplicity `m_i` for i = 2..d;
/// * `d` with multiplicity `m_1 - 1`;
/// * `M_i/k + d` once per i;
/// * `(k+1)/k * M_i + k(i-1) + d - 1` with multiplicity `k-1` per i.
pub fn k_threshold_spectrum(code: &ThresholdCode) -> Result<Spectrum> {
    let d = code.dominations();
    if d == 0 {
        return Ok(add_isolated(&Spectrum::empty(), code.vertex_count()));
    }
    let k = code.uniform_k().ok_or(Error::NonUniformK)?;
    let m = code.isolated_runs();
    let mut pairs: Vec<(Rational, usize)> = vec![(Rational::zero(), 1)];
    for i in 2..=d {
        pairs.push((rat_usize(d - i + 1), m[i - 1]));
    }
    pairs.push((rat_usize(d), m[0] - 1));
    let mut m_prefix = 0usize;
    for i in 1..=d {
        m_prefix += m[i - 1];
        pairs.push((rat_usize(m_prefix) / rat_usize(k) + rat_usize(d), 1));
        pairs.push((
            rat_usize((k + 1) * m_prefix) / rat_usize(k) + rat_usize(k * (i - 1) + d - 1),
            k - 1,
        ));
    }
    Ok(Spectrum::from_pairs(pairs))
}

/// The complement pivot `phi_m(n) = n/(n-1) * C(n-1, m-1)`.
pub fn phi(m: usize, n: usize) -> Result<Rational> {
    if m < 2 {
        return Err(Error::UniformityTooSmall(m));
    }
    if m > n {
        return Err(Error::UniformityExceedsOrder { m, n });
    }
    Ok(Rational::new(BigInt::from(n), BigInt::from(n - 1)) * Rational::from_integer(binomial(n - 1, m - 1)))
}

/// Spectrum of the complement within the m-uniform universe: one zero is
/// consumed as lambda_1, every other eigenvalue maps to `phi_m(n) - λ`.
pub fn complement_spectrum(spec: &Spectrum, m: usize) -> Result<Spectrum> {
    let n = spec.total();
    if m > n {
        return Err(Error::UniformityExceedsOrder { m, n });
    }
    if spec.multiplicity(&Rational::zero()) == 0 {
        return Err(Error::MissingZeroEigenvalue);
    }
    let pivot = phi(m, n)?;
    if spec.max().is_some_and(|max| *max > pivot) {
        return Err(Error::SpectrumExceedsPhi);
    }
    let mut pairs: Vec<(Rational, usize)> = Vec::new();
    for (v, mult) in spec.entries() {
        let mult = if v.is_zero() { mult - 1 } else { *mult };
        pairs.push((&pivot - v, mult));
    }
    pairs.push((Rational::zero(), 1));
    Ok(Spectrum::from_pairs(pairs))
}

/// Spectrum of a vertex-disjoint union: the multiset union.
pub fn union_spectrum(s1: &Spectrum, s2: &Spectrum) -> Spectrum {
    s1.union(s2)
}

/// A hypergraph expression in the closure of uniform-k constructions
/// under complement and vertex-disjoint union. All leaves share one
/// domination size k; complements are taken within the (k+1)-uniform
/// universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoExpr {
    Leaf { code: ThresholdCode, k: usize },
    Complement(Box<CoExpr>),
    Union(Box<CoExpr>, Box<CoExpr>),
}

impl CoExpr {
    /// Leaf with k inferred from the code; domination-free codes need
    /// [`CoExpr::leaf_with_k`] since no k can be read off.
    pub fn leaf(code: ThresholdCode) -> Result<CoExpr> {
        match code.uniform_k() {
            Some(k) => Ok(CoExpr::Leaf { code, k }),
            None if code.dominations() == 0 => Err(Error::IndeterminateK),
            None => Err(Error::NonUniformK),
        }
    }

    /// Leaf with an explicit k; the code must not use any other size.
    pub fn leaf_with_k(code: ThresholdCode, k: usize) -> Result<CoExpr> {
        if k == 0 {
            return Err(Error::NonPositiveK);
        }
        match code.uniform_k() {
            Some(ck) if ck != k => Err(Error::MixedK),
            Some(_) => Ok(CoExpr::Leaf { code, k }),
            None if code.dominations() == 0 => Ok(CoExpr::Leaf { code, k }),
            None => Err(Error::NonUniformK),
        }
    }

    pub fn complement(self) -> CoExpr {
        CoExpr::Complement(Box::new(self))
    }

    pub fn union(self, other: CoExpr) -> CoExpr {
        CoExpr::Union(Box::new(self), Box::new(other))
    }

    /// The shared domination size of every leaf.
    pub fn shared_k(&self) -> Result<usize> {
        match self {
            CoExpr::Leaf { k, .. } => Ok(*k),
            CoExpr::Complement(child) => child.shared_k(),
            CoExpr::Union(a, b) => {
                let (ka, kb) = (a.shared_k()?, b.shared_k()?);
                if ka != kb {
                    return Err(Error::MixedK);
                }
                Ok(ka)
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            CoExpr::Leaf { code, .. } => code.vertex_count(),
            CoExpr::Complement(child) => child.vertex_count(),
            CoExpr::Union(a, b) => a.vertex_count() + b.vertex_count(),
        }
    }

    /// Exact spectrum by recursive evaluation: leaves via the uniform-k
    /// closed form, complements via the pivot map with m = k+1, unions
    /// as multiset unions.
    pub fn spectrum(&self) -> Result<Spectrum> {
        let k = self.shared_k()?;
        self.spectrum_with_k(k)
    }

    fn spectrum_with_k(&self, k: usize) -> Result<Spectrum> {
        match self {
            CoExpr::Leaf { code, .. } => k_threshold_spectrum(code),
            CoExpr::Complement(child) => {
                let inner = child.spectrum_with_k(k)?;
                complement_spectrum(&inner, k + 1)
            }
            CoExpr::Union(a, b) => {
                Ok(union_spectrum(&a.spectrum_with_k(k)?, &b.spectrum_with_k(k)?))
            }
        }
    }

    /// Materializes the expression as an explicit hypergraph; used by
    /// the numeric cross-checks and the CLI verifier.
    pub fn build(&self) -> Result<Hypergraph> {
        let k = self.shared_k()?;
        self.build_with_k(k)
    }

    fn build_with_k(&self, k: usize) -> Result<Hypergraph> {
        match self {
            CoExpr::Leaf { code, .. } => Ok(code.build()),
            CoExpr::Complement(child) => child.build_with_k(k)?.complement(k + 1),
            CoExpr::Union(a, b) => Ok(a.build_with_k(k)?.disjoint_union(&b.build_with_k(k)?)),
        }
    }

    /// Parses the expression grammar `T(<code tokens>)`, `C(<expr>)`,
    /// `U(<expr>,<expr>)`; whitespace-insensitive. A leaf's k is read
    /// from its code; edgeless leaves borrow the k shared by the other
    /// leaves, so a tree of only edgeless leaves is rejected.
    pub fn parse(text: &str) -> Result<CoExpr> {
        let chars: Vec<char> = text.chars().collect();
        let mut pos = 0usize;
        skip_ws(&chars, &mut pos);
        let raw = parse_expr(&chars, &mut pos)?;
        skip_ws(&chars, &mut pos);
        if pos != chars.len() {
            return Err(Error::ExprSyntax(format!(
                "trailing input at position {pos}"
            )));
        }
        // resolve the shared k and re-check every leaf against it
        let mut inferred: Option<usize> = None;
        collect_k(&raw, &mut inferred)?;
        let k = inferred.ok_or(Error::IndeterminateK)?;
        resolve_k(raw, k)
    }
}

impl std::fmt::Display for CoExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoExpr::Leaf { code, .. } => write!(f, "T({code})"),
            CoExpr::Complement(child) => write!(f, "C({child})"),
            CoExpr::Union(a, b) => write!(f, "U({a}, {b})"),
        }
    }
}

// Parse tree before the shared k is known: edgeless leaves have no k yet.
enum RawExpr {
    Leaf(ThresholdCode),
    Complement(Box<RawExpr>),
    Union(Box<RawExpr>, Box<RawExpr>),
}

fn parse_expr(chars: &[char], pos: &mut usize) -> Result<RawExpr> {
    skip_ws(chars, pos);
    let head = chars
        .get(*pos)
        .ok_or_else(|| Error::ExprSyntax("unexpected end of input".into()))?;
    let expr = match head {
        'T' | 't' => {
            *pos += 1;
            expect(chars, pos, '(')?;
            let start = *pos;
            while *pos < chars.len() && chars[*pos] != ')' {
                *pos += 1;
            }
            if *pos == chars.len() {
                return Err(Error::ExprSyntax("unterminated leaf".into()));
            }
            let body: String = chars[start..*pos].iter().collect();
            *pos += 1;
            RawExpr::Leaf(ThresholdCode::parse(&body)?)
        }
        'C' | 'c' => {
            *pos += 1;
            expect(chars, pos, '(')?;
            let inner = parse_expr(chars, pos)?;
            expect(chars, pos, ')')?;
            RawExpr::Complement(Box::new(inner))
        }
        'U' | 'u' => {
            *pos += 1;
            expect(chars, pos, '(')?;
            let left = parse_expr(chars, pos)?;
            expect(chars, pos, ',')?;
            let right = parse_expr(chars, pos)?;
            expect(chars, pos, ')')?;
            RawExpr::Union(Box::new(left), Box::new(right))
        }
        other => {
            return Err(Error::ExprSyntax(format!("unexpected `{other}`")));
        }
    };
    Ok(expr)
}

fn skip_ws(chars: &[char], pos: &mut usize) {
    while chars.get(*pos).is_some_and(|c| c.is_whitespace()) {
        *pos += 1;
    }
}

fn expect(chars: &[char], pos: &mut usize, wanted: char) -> Result<()> {
    skip_ws(chars, pos);
    if chars.get(*pos) != Some(&wanted) {
        return Err(Error::ExprSyntax(format!("expected `{wanted}`")));
    }
    *pos += 1;
    Ok(())
}

fn collect_k(expr: &RawExpr, inferred: &mut Option<usize>) -> Result<()> {
    match expr {
        RawExpr::Leaf(code) => {
            if let Some(k) = code.uniform_k() {
                match inferred {
                    Some(existing) if *existing != k => return Err(Error::MixedK),
                    Some(_) => {}
                    None => *inferred = Some(k),
                }
            } else if code.dominations() > 0 {
                return Err(Error::NonUniformK);
            }
            Ok(())
        }
        RawExpr::Complement(child) => collect_k(child, inferred),
        RawExpr::Union(a, b) => {
            collect_k(a, inferred)?;
            collect_k(b, inferred)
        }
    }
}

fn resolve_k(expr: RawExpr, k: usize) -> Result<CoExpr> {
    Ok(match expr {
        RawExpr::Leaf(code) => CoExpr::leaf_with_k(code, k)?,
        RawExpr::Complement(child) => resolve_k(*child, k)?.complement(),
        RawExpr::Union(a, b) => resolve_k(*a, k)?.union(resolve_k(*b, k)?),
    })
}
