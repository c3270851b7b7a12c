//! The three ring constructions and the combinatorial object behind each.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::MonomialIdeal;
use crate::complex::{
    brute_force_graph_iso, brute_force_iso, edge_ideal, facet_ideal, is_graph_isomorphism, is_isomorphism,
    reconstruct_facet_complex, reconstruct_graph, reconstruct_sr_complex, stanley_reisner_ideal, Bijection,
    ComplexError, Graph, SimplicialComplex,
};

/// Which quotient ring is attached to a complex or graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingKind {
    #[serde(rename = "sr", alias = "stanley-reisner")]
    StanleyReisner,
    #[serde(rename = "facet")]
    Facet,
    #[serde(rename = "edge")]
    Edge,
}

impl RingKind {
    pub const ALL: [RingKind; 3] = [RingKind::StanleyReisner, RingKind::Facet, RingKind::Edge];

    pub fn name(self) -> &'static str {
        match self {
            RingKind::StanleyReisner => "sr",
            RingKind::Facet => "facet",
            RingKind::Edge => "edge",
        }
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown ring kind {0:?} (expected sr, facet or edge)")]
pub struct UnknownKind(pub String);

impl FromStr for RingKind {
    type Err = UnknownKind;
    fn from_str(s: &str) -> Result<Self, UnknownKind> {
        match s {
            "sr" | "stanley-reisner" => Ok(RingKind::StanleyReisner),
            "facet" => Ok(RingKind::Facet),
            "edge" => Ok(RingKind::Edge),
            _ => Err(UnknownKind(s.to_string())),
        }
    }
}

/// A simplicial complex (Stanley-Reisner and facet kinds) or a graph (edge kind).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Complex(SimplicialComplex),
    Graph(Graph),
}

impl Structure {
    /// Inverse of [`Structure::ideal`].
    pub fn reconstruct(kind: RingKind, ideal: &MonomialIdeal, names: Vec<String>) -> Result<Structure, ComplexError> {
        Ok(match kind {
            RingKind::StanleyReisner => Structure::Complex(reconstruct_sr_complex(ideal, names)?),
            RingKind::Facet => Structure::Complex(reconstruct_facet_complex(ideal, names)?),
            RingKind::Edge => Structure::Graph(reconstruct_graph(ideal, names)?),
        })
    }

    /// The ideal of the given kind. A graph under the facet or Stanley-Reisner
    /// kind is read as its one-dimensional complex; a complex under the edge
    /// kind must be one-dimensional and pure.
    pub fn ideal(&self, kind: RingKind) -> Result<MonomialIdeal, ComplexError> {
        match (kind, self) {
            (RingKind::StanleyReisner, Structure::Complex(c)) => stanley_reisner_ideal(c),
            (RingKind::Facet, Structure::Complex(c)) => Ok(facet_ideal(c)),
            (RingKind::Edge, Structure::Graph(g)) => Ok(edge_ideal(g)),
            (RingKind::Edge, Structure::Complex(c)) => Ok(edge_ideal(&complex_as_graph(c)?)),
            (RingKind::StanleyReisner, Structure::Graph(g)) => stanley_reisner_ideal(&g.edge_complex()?),
            (RingKind::Facet, Structure::Graph(g)) => Ok(facet_ideal(&g.edge_complex()?)),
        }
    }

    pub fn vertices(&self) -> &[String] {
        match self {
            Structure::Complex(c) => c.vertices(),
            Structure::Graph(g) => g.vertices(),
        }
    }

    pub fn n(&self) -> usize {
        self.vertices().len()
    }

    pub fn relabel(&self, psi: &Bijection, names: Vec<String>) -> Result<Structure, ComplexError> {
        Ok(match self {
            Structure::Complex(c) => Structure::Complex(c.relabel(psi, names)?),
            Structure::Graph(g) => Structure::Graph(g.relabel(psi, names)?),
        })
    }

    /// Whether `psi` is an isomorphism `self -> other` (facets, or edges, map onto each other).
    pub fn is_isomorphism(&self, other: &Structure, psi: &Bijection) -> Result<bool, ComplexError> {
        match (self, other) {
            (Structure::Complex(a), Structure::Complex(b)) => is_isomorphism(a, b, psi),
            (Structure::Graph(a), Structure::Graph(b)) => is_graph_isomorphism(a, b, psi),
            _ => Ok(false),
        }
    }

    /// Exhaustive search for an isomorphism.
    pub fn brute_force_iso(&self, other: &Structure) -> Result<Option<Bijection>, ComplexError> {
        match (self, other) {
            (Structure::Complex(a), Structure::Complex(b)) => brute_force_iso(a, b),
            (Structure::Graph(a), Structure::Graph(b)) => brute_force_graph_iso(a, b),
            _ => Ok(None),
        }
    }

    /// The sets carried by an isomorphism: facets or edges.
    pub fn sets(&self) -> Vec<Vec<usize>> {
        match self {
            Structure::Complex(c) => c.facets().to_vec(),
            Structure::Graph(g) => g.edge_sets(),
        }
    }
}

fn complex_as_graph(c: &SimplicialComplex) -> Result<Graph, ComplexError> {
    if let Some(f) = c.facets().iter().find(|f| f.len() != 2) {
        let names: Vec<String> = f.iter().map(|&i| c.vertices()[i].clone()).collect();
        return Err(ComplexError::NotQuadratic(names.join("*")));
    }
    Graph::new(c.vertices().to_vec(), c.facets().iter().map(|f| (f[0], f[1])).collect())
}
