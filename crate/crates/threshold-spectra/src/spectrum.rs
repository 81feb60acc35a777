//! Sorted multisets of exact eigenvalues.

use num::Zero;

use crate::rational::{to_f64, Rational};

/// A multiset of rational eigenvalues, stored as strictly ascending
/// `(value, multiplicity)` pairs. Two spectra are equal iff they are
/// equal as multisets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    entries: Vec<(Rational, usize)>,
}

impl Spectrum {
    pub fn empty() -> Self {
        Spectrum { entries: Vec::new() }
    }

    /// Builds a spectrum from an unordered list of values.
    pub fn from_multiset(values: Vec<Rational>) -> Self {
        Self::from_pairs(values.into_iter().map(|v| (v, 1)).collect())
    }

    /// Builds a spectrum from `(value, multiplicity)` pairs; pairs with
    /// zero multiplicity are dropped, equal values merged.
    pub fn from_pairs(mut pairs: Vec<(Rational, usize)>) -> Self {
        pairs.retain(|(_, m)| *m > 0);
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        let mut entries: Vec<(Rational, usize)> = Vec::with_capacity(pairs.len());
        for (v, m) in pairs {
            match entries.last_mut() {
                Some((last, lm)) if *last == v => *lm += m,
                _ => entries.push((v, m)),
            }
        }
        Spectrum { entries }
    }

    /// Distinct values with multiplicities, ascending.
    pub fn entries(&self) -> &[(Rational, usize)] {
        &self.entries
    }

    /// Total multiplicity.
    pub fn total(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Multiplicity of a given value (0 if absent).
    pub fn multiplicity(&self, value: &Rational) -> usize {
        self.entries
            .iter()
            .find(|(v, _)| v == value)
            .map_or(0, |(_, m)| *m)
    }

    pub fn min(&self) -> Option<&Rational> {
        self.entries.first().map(|(v, _)| v)
    }

    pub fn max(&self) -> Option<&Rational> {
        self.entries.last().map(|(v, _)| v)
    }

    /// Exact sum of all values with multiplicity; equals the Laplacian
    /// trace for a hypergraph spectrum.
    pub fn value_sum(&self) -> Rational {
        let mut acc = Rational::zero();
        for (v, m) in &self.entries {
            acc += v * crate::rational::rat_usize(*m);
        }
        acc
    }

    /// Every value repeated by its multiplicity, ascending.
    pub fn expand(&self) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.total());
        for (v, m) in &self.entries {
            for _ in 0..*m {
                out.push(v.clone());
            }
        }
        out
    }

    /// Float view for the oracle boundary, ascending.
    pub fn expand_f64(&self) -> Vec<f64> {
        self.expand().iter().map(to_f64).collect()
    }

    /// Multiset union of two spectra.
    pub fn union(&self, other: &Spectrum) -> Spectrum {
        let mut pairs = self.entries.clone();
        pairs.extend(other.entries.iter().cloned());
        Spectrum::from_pairs(pairs)
    }
}

impl std::fmt::Display for Spectrum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        write!(f, "{{")?;
        for (v, m) in &self.entries {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            if *m == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{m}")?;
            }
        }
        write!(f, "}}")
    }
}
