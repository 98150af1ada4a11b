//! Constructive labelings. Every labeler re-verifies its output before
//! returning a certificate.

mod cycle;
mod degree;
mod dispatch;
mod families;
mod hamiltonian;
mod trees;

use thiserror::Error;

pub use cycle::{alternating_halves, validate_cycle, Chord, CycleError, HamiltonCycle};
pub use degree::{label_large_degree, large_degree_threshold};
pub use dispatch::{certify_sufficient, edge_count_bound, neighborhood_odd_cycles};
pub use families::{label_gp, label_grid, label_grid3};
pub use hamiltonian::{
    label_circumference, label_cycle_standard, label_ham_chord_4k, label_ham_odd_chord,
    label_hamiltonian,
};
pub use trees::{
    extend_with_pendants, label_lobster_surplus, label_reduced_lobster, label_union_of_stars,
    lobster_surplus_sides, StarUnionLabeling,
};

use crate::certificate::{Certificate, CertificateError};
use crate::graph::{Graph, GraphError};
use crate::labeling::{LabelingError, LiftError};

/// A generated family member together with its certificate.
#[derive(Debug, Clone)]
pub struct Labeled {
    pub graph: Graph,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("order {n}: {hint}")]
    Residue { n: usize, hint: &'static str },
    #[error("{n} is below the minimum of {min}")]
    TooSmall { n: usize, min: usize },
    #[error(transparent)]
    Cycle(#[from] CycleError),
    #[error("{0}")]
    BadCycle(&'static str),
    #[error("chord {chord:?}: {reason}")]
    BadChord {
        chord: (usize, usize),
        reason: &'static str,
    },
    #[error("no suitable chord")]
    NoChord,
    #[error("vertex {0} has no neighbor on the cycle")]
    Isolated(usize),
    #[error("maximum degree {max_degree} is below the required {needed}")]
    DegreeBound { max_degree: usize, needed: usize },
    #[error("host vertex {vertex} has degree {degree}; pendants need degree above 2")]
    HostDegree { vertex: usize, degree: usize },
    #[error("at most one star may have more than 15 leaves, got {0:?}")]
    TooManyLargeStars(Vec<usize>),
    #[error("lobster: {0}")]
    Lobster(String),
    #[error("surplus inequality fails: {lhs} < {rhs}")]
    SurplusInequality { lhs: i64, rhs: i64 },
    #[error("certificate does not carry a neighborhood-prime labeling")]
    NotNpl,
    #[error("construction incomplete: {0}")]
    ConstructionIncomplete(String),
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Certificate(#[from] CertificateError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error(transparent)]
    Lift(#[from] LiftError),
}
