//! Simplicial complexes, graphs and vertex bijections.
//!
//! A complex is stored by its facets only; a set is a face iff it is contained
//! in some facet.

mod ideals;
mod iso;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use ideals::{
    edge_ideal, facet_ideal, reconstruct_facet_complex, reconstruct_graph, reconstruct_sr_complex,
    stanley_reisner_ideal,
};
pub use iso::{brute_force_graph_iso, brute_force_iso, is_graph_isomorphism, is_isomorphism, MAX_BRUTE_FORCE};

/// Vertex limit for the subset-enumerating operations (minimal non-faces,
/// maximal generator-free sets).
pub const MAX_ENUMERATION_VERTICES: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("a complex needs at least one vertex")]
    NoVertices,
    #[error("duplicate vertex name {0:?}")]
    DuplicateVertex(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("vertex index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("empty facet")]
    EmptyFacet,
    #[error("facet {0:?} repeats a vertex")]
    RepeatedVertex(Vec<String>),
    #[error("facet {0:?} is contained in facet {1:?}")]
    NotAntichain(Vec<String>, Vec<String>),
    #[error("vertex {0:?} lies in no facet")]
    UncoveredVertex(String),
    #[error("self-loop at vertex {0:?}")]
    SelfLoop(String),
    #[error("duplicate edge {0:?}-{1:?}")]
    DuplicateEdge(String, String),
    #[error("ideal has {ideal} variables but {names} names were given")]
    NameCountMismatch { ideal: usize, names: usize },
    #[error("generator {0} has degree one, which no Stanley-Reisner ideal contains")]
    DegreeOneGenerator(String),
    #[error("generator {0} is not quadratic, so the ideal is not an edge ideal")]
    NotQuadratic(String),
    #[error("{n} vertices exceeds the limit of {limit} for this operation")]
    TooLarge { n: usize, limit: usize },
    #[error("vertex counts differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("not a permutation")]
    NotAPermutation,
}

/// A permutation `forward[i] = j` sending source vertex `i` to target vertex `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bijection {
    forward: Vec<usize>,
}

impl Bijection {
    pub fn new(forward: Vec<usize>) -> Result<Self, ComplexError> {
        let n = forward.len();
        let mut seen = vec![false; n];
        for &j in &forward {
            if j >= n || std::mem::replace(&mut seen[j], true) {
                return Err(ComplexError::NotAPermutation);
            }
        }
        Ok(Bijection { forward })
    }

    pub fn identity(n: usize) -> Self {
        Bijection { forward: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.forward[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.forward
    }

    pub fn inverse(&self) -> Bijection {
        let mut inv = vec![0; self.forward.len()];
        for (i, &j) in self.forward.iter().enumerate() {
            inv[j] = i;
        }
        Bijection { forward: inv }
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &Bijection) -> Bijection {
        assert_eq!(self.len(), other.len());
        Bijection { forward: self.forward.iter().map(|&j| other.forward[j]).collect() }
    }

    /// Image of a vertex set, sorted.
    pub fn map_set(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&i| self.forward[i]).collect();
        out.sort_unstable();
        out
    }
}

fn check_names(vertices: &[String]) -> Result<(), ComplexError> {
    let mut seen = HashSet::new();
    for v in vertices {
        if !seen.insert(v.as_str()) {
            return Err(ComplexError::DuplicateVertex(v.clone()));
        }
    }
    Ok(())
}

fn index_of(vertices: &[String], name: &str) -> Result<usize, ComplexError> {
    vertices.iter().position(|v| v == name).ok_or_else(|| ComplexError::UnknownVertex(name.to_string()))
}

pub(crate) fn mask_of(set: &[usize]) -> u64 {
    set.iter().fold(0u64, |m, &i| m | (1 << i))
}

/// A simplicial complex given by its vertex names and facet list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Validates the facets: non-empty, in range, an antichain, covering every vertex.
    pub fn new(vertices: Vec<String>, facets: Vec<Vec<usize>>) -> Result<Self, ComplexError> {
        if vertices.is_empty() {
            return Err(ComplexError::NoVertices);
        }
        check_names(&vertices)?;
        let n = vertices.len();
        let mut canon: Vec<Vec<usize>> = Vec::with_capacity(facets.len());
        for mut f in facets {
            if f.is_empty() {
                return Err(ComplexError::EmptyFacet);
            }
            if let Some(&bad) = f.iter().find(|&&i| i >= n) {
                return Err(ComplexError::IndexOutOfRange(bad));
            }
            f.sort_unstable();
            let len = f.len();
            f.dedup();
            if f.len() != len {
                return Err(ComplexError::RepeatedVertex(f.iter().map(|&i| vertices[i].clone()).collect()));
            }
            canon.push(f);
        }
        canon.sort();
        let names = |f: &[usize]| f.iter().map(|&i| vertices[i].clone()).collect::<Vec<_>>();
        for (a, f) in canon.iter().enumerate() {
            for (b, g) in canon.iter().enumerate() {
                if a != b && is_subset(f, g) {
                    return Err(ComplexError::NotAntichain(names(f), names(g)));
                }
            }
        }
        let mut covered = vec![false; n];
        for &i in canon.iter().flatten() {
            covered[i] = true;
        }
        if let Some(i) = covered.iter().position(|c| !c) {
            return Err(ComplexError::UncoveredVertex(vertices[i].clone()));
        }
        Ok(SimplicialComplex { vertices, facets: canon })
    }

    /// Facets given by vertex names.
    pub fn from_named(vertices: Vec<String>, facets: &[Vec<String>]) -> Result<Self, ComplexError> {
        let idx = facets
            .iter()
            .map(|f| f.iter().map(|v| index_of(&vertices, v)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vertices, idx)
    }

    /// The complex generated by arbitrary faces: keeps only the maximal ones
    /// and adds a singleton facet for every vertex not otherwise covered.
    pub fn from_faces(vertices: Vec<String>, faces: Vec<Vec<usize>>) -> Result<Self, ComplexError> {
        let n = vertices.len();
        let mut faces: Vec<Vec<usize>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .filter(|f| !f.is_empty())
            .collect();
        for v in 0..n {
            if !faces.iter().any(|f| f.contains(&v)) {
                faces.push(vec![v]);
            }
        }
        faces.sort();
        faces.dedup();
        let maximal: Vec<Vec<usize>> =
            faces.iter().filter(|f| !faces.iter().any(|g| g.len() > f.len() && is_subset(f, g))).cloned().collect();
        Self::new(vertices, maximal)
    }

    /// The complex on no vertices; only produced by [`Self::strip_zero_dim_facets`].
    fn void() -> Self {
        SimplicialComplex { vertices: Vec::new(), facets: Vec::new() }
    }

    /// Full simplex on the given vertices.
    pub fn simplex(vertices: Vec<String>) -> Result<Self, ComplexError> {
        let all = (0..vertices.len()).collect();
        Self::new(vertices, vec![all])
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    /// Facets as sorted index lists, in lexicographic order.
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn named_facets(&self) -> Vec<Vec<String>> {
        self.facets.iter().map(|f| f.iter().map(|&i| self.vertices[i].clone()).collect()).collect()
    }

    pub fn is_face(&self, set: &[usize]) -> bool {
        let mut s = set.to_vec();
        s.sort_unstable();
        self.facets.iter().any(|f| is_subset(&s, f))
    }

    pub fn dimension(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.len() - 1).max()
    }

    /// Image under `psi`, carried onto the vertex names `target_names`.
    pub fn relabel(&self, psi: &Bijection, target_names: Vec<String>) -> Result<Self, ComplexError> {
        if psi.len() != self.n() {
            return Err(ComplexError::SizeMismatch(psi.len(), self.n()));
        }
        if target_names.len() != self.n() {
            return Err(ComplexError::SizeMismatch(target_names.len(), self.n()));
        }
        Self::new(target_names, self.facets.iter().map(|f| psi.map_set(f)).collect())
    }

    /// Removes the zero-dimensional facets and their vertices.
    pub fn strip_zero_dim_facets(&self) -> ZeroDimSplit {
        let removed: Vec<usize> = self.facets.iter().filter(|f| f.len() == 1).map(|f| f[0]).collect();
        let kept: Vec<usize> = (0..self.n()).filter(|i| !removed.contains(i)).collect();
        let reduced = if kept.is_empty() {
            SimplicialComplex::void()
        } else {
            let mut new_index = vec![usize::MAX; self.n()];
            for (k, &i) in kept.iter().enumerate() {
                new_index[i] = k;
            }
            SimplicialComplex {
                vertices: kept.iter().map(|&i| self.vertices[i].clone()).collect(),
                facets: {
                    let mut fs: Vec<Vec<usize>> = self
                        .facets
                        .iter()
                        .filter(|f| f.len() > 1)
                        .map(|f| f.iter().map(|&i| new_index[i]).collect())
                        .collect();
                    fs.sort();
                    fs
                },
            }
        };
        ZeroDimSplit { reduced, removed, kept }
    }
}

/// Result of stripping zero-dimensional facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroDimSplit {
    /// The complex without its singleton facets (possibly on zero vertices).
    pub reduced: SimplicialComplex,
    /// Original indices of the removed vertices, ascending.
    pub removed: Vec<usize>,
    /// Original indices of the surviving vertices, ascending; `kept[k]` is
    /// vertex `k` of `reduced`.
    pub kept: Vec<usize>,
}

impl ZeroDimSplit {
    pub fn count(&self) -> usize {
        self.removed.len()
    }
}

pub(crate) fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

/// A finite simple undirected graph. Isolated vertices are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: Vec<String>, edges: Vec<(usize, usize)>) -> Result<Self, ComplexError> {
        if vertices.is_empty() {
            return Err(ComplexError::NoVertices);
        }
        check_names(&vertices)?;
        let n = vertices.len();
        let mut canon = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(ComplexError::IndexOutOfRange(a.max(b)));
            }
            if a == b {
                return Err(ComplexError::SelfLoop(vertices[a].clone()));
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(ComplexError::DuplicateEdge(vertices[w[0].0].clone(), vertices[w[0].1].clone()));
        }
        Ok(Graph { vertices, edges: canon })
    }

    pub fn from_named(vertices: Vec<String>, edges: &[[String; 2]]) -> Result<Self, ComplexError> {
        let idx = edges
            .iter()
            .map(|[a, b]| Ok((index_of(&vertices, a)?, index_of(&vertices, b)?)))
            .collect::<Result<Vec<_>, ComplexError>>()?;
        Self::new(vertices, idx)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn named_edges(&self) -> Vec<[String; 2]> {
        self.edges.iter().map(|&(a, b)| [self.vertices[a].clone(), self.vertices[b].clone()]).collect()
    }

    pub fn edge_sets(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|&(a, b)| vec![a, b]).collect()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| !self.edges.iter().any(|&(a, b)| a == v || b == v)).collect()
    }

    /// The one-dimensional complex whose facets are the edges. Fails when the
    /// graph has isolated vertices.
    pub fn edge_complex(&self) -> Result<SimplicialComplex, ComplexError> {
        SimplicialComplex::new(self.vertices.clone(), self.edge_sets())
    }

    pub fn relabel(&self, psi: &Bijection, target_names: Vec<String>) -> Result<Self, ComplexError> {
        if psi.len() != self.n() || target_names.len() != self.n() {
            return Err(ComplexError::SizeMismatch(psi.len(), self.n()));
        }
        Self::new(target_names, self.edges.iter().map(|&(a, b)| (psi.apply(a), psi.apply(b))).collect())
    }
}

/// JSON complex file: `{"vertices": [...], "facets": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

impl From<&SimplicialComplex> for ComplexFile {
    fn from(c: &SimplicialComplex) -> Self {
        ComplexFile { vertices: c.vertices.clone(), facets: c.named_facets() }
    }
}

impl TryFrom<&ComplexFile> for SimplicialComplex {
    type Error = ComplexError;
    fn try_from(f: &ComplexFile) -> Result<Self, ComplexError> {
        SimplicialComplex::from_named(f.vertices.clone(), &f.facets)
    }
}

/// JSON graph file: `{"vertices": [...], "edges": [["a", "b"], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl From<&Graph> for GraphFile {
    fn from(g: &Graph) -> Self {
        GraphFile { vertices: g.vertices.clone(), edges: g.named_edges() }
    }
}

impl TryFrom<&GraphFile> for Graph {
    type Error = ComplexError;
    fn try_from(f: &GraphFile) -> Result<Self, ComplexError> {
        Graph::from_named(f.vertices.clone(), &f.edges)
    }
}
