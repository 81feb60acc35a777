//! Hypergraphs as explicit edge multisets, plus the set-level operations
//! (complement within the m-uniform universe, vertex-disjoint union).

use std::collections::HashSet;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A finite hypergraph on vertices `0..n`. Every hyperedge is a strictly
/// ascending id list of size at least 2; edges are distinct as sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

/// Result of an edge-size scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Uniformity {
    /// Every edge has exactly this size.
    Uniform(usize),
    /// No edges; vacuously uniform for every size.
    Edgeless,
    /// Mixed edge sizes.
    NonUniform,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        for e in &edges {
            if e.len() < 2 {
                return Err(Error::InvalidEdge(format!("edge {e:?} has fewer than 2 vertices")));
            }
            if !e.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidEdge(format!("edge {e:?} is not strictly ascending")));
            }
            if *e.last().unwrap() >= n {
                return Err(Error::InvalidEdge(format!("edge {e:?} has a vertex id >= {n}")));
            }
            if !seen.insert(e.clone()) {
                return Err(Error::DuplicateEdge);
            }
        }
        Ok(Hypergraph { n, edges })
    }

    pub fn edgeless(n: usize) -> Self {
        Hypergraph { n, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Per-vertex degrees d(v), indexed by vertex id.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Degree sequence, sorted non-increasing.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = self.degrees();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        deg
    }

    pub fn uniformity(&self) -> Uniformity {
        let mut sizes = self.edges.iter().map(Vec::len);
        match sizes.next() {
            None => Uniformity::Edgeless,
            Some(first) => {
                if sizes.all(|s| s == first) {
                    Uniformity::Uniform(first)
                } else {
                    Uniformity::NonUniform
                }
            }
        }
    }

    /// Complement within the set of all `m`-subsets of the vertex set.
    /// `m` must be given explicitly because an edgeless hypergraph is
    /// vacuously uniform for every size.
    pub fn complement(&self, m: usize) -> Result<Hypergraph> {
        if m < 2 {
            return Err(Error::UniformityTooSmall(m));
        }
        if m > self.n {
            return Err(Error::UniformityExceedsOrder { m, n: self.n });
        }
        match self.uniformity() {
            Uniformity::Uniform(s) if s != m => return Err(Error::NotUniform),
            Uniformity::NonUniform => return Err(Error::NotUniform),
            _ => {}
        }
        let present: HashSet<&Vec<usize>> = self.edges.iter().collect();
        let edges = (0..self.n)
            .combinations(m)
            .filter(|c| !present.contains(c))
            .collect();
        Ok(Hypergraph { n: self.n, edges })
    }

    /// Vertex-disjoint union; ids of `other` are shifted past `self`.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Hypergraph {
        let mut edges = self.edges.clone();
        edges.extend(
            other
                .edges
                .iter()
                .map(|e| e.iter().map(|v| v + self.n).collect()),
        );
        Hypergraph { n: self.n + other.n, edges }
    }

    /// Number of connected components (isolated vertices count as
    /// components). Used by tests to pin the zero-eigenvalue multiplicity.
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for e in &self.edges {
            let r = find(&mut parent, e[0]);
            for &v in &e[1..] {
                let rv = find(&mut parent, v);
                parent[rv] = r;
            }
        }
        (0..self.n).filter(|&v| find(&mut parent, v) == v).count()
    }
}
