//! Neighborhood-prime labelings: construction, verification and exhaustive
//! search.
//!
//! A labeling of a graph on `n` vertices is a bijection onto `1..=n`; it is
//! neighborhood-prime when the labels around every vertex of degree at
//! least 2 have gcd 1.

pub mod certificate;
pub mod construct;
pub mod corpus;
pub mod graph;
pub mod labeling;
pub mod numtheory;
pub mod randomgraphs;
pub mod search;

pub use certificate::{Certificate, Reason, Verdict};
pub use graph::{parse_graph6, write_graph6, Graph, GraphError};
pub use labeling::{is_neighborhood_prime, is_prime_labeling, Labeling, Verification};
pub use search::SearchBudget;
