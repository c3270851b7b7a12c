//! Stanley-Reisner, facet and edge rings of simplicial complexes and graphs.
//!
//! Given a K-algebra isomorphism between two such quotient rings, together
//! with its inverse, [`extract::extract_isomorphism`] recovers an explicit
//! vertex bijection between the underlying complexes (or graphs). It reads off
//! the linear parts of the variable images, forms the matrix whose `(i, j)`
//! entry is `a_ji * b_ij`, and takes a nonzero transversal of it.

pub mod algebra;
pub mod complex;
pub mod extract;
pub mod files;
pub mod generate;
pub mod matching;
pub mod report;
pub mod ring_map;
pub mod structure;

pub use algebra::{Field, Monomial, MonomialIdeal, Polynomial, Scalar};
pub use complex::{Bijection, Graph, SimplicialComplex};
pub use extract::{extract_isomorphism, ExtractionFailure, ExtractionResult, TransversalMatrix};
pub use generate::{generate_bundle, GenParams, InstanceBundle};
pub use report::{Report, Stage, Violation};
pub use ring_map::{AlgebraMap, IsoPair, Presentation};
pub use structure::{RingKind, Structure};
