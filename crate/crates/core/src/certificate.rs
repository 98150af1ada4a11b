//! Proof objects for (non-)neighborhood-primality.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::labeling::{is_neighborhood_prime, Labeling, LabelingError, VertexFailure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Npl,
    NotNpl,
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Npl => "npl",
            Verdict::NotNpl => "not-npl",
            Verdict::Unknown => "unknown",
        }
    }
}

/// Why a verdict holds. Cycles are vertex sequences in the order the
/// labeling was applied (position 1 first).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Reason {
    /// Alternating-halves labeling along a Hamilton cycle of order `n != 2 mod 4`.
    HamiltonianEq1 {
        cycle: Vec<usize>,
    },
    /// Hamilton cycle plus a chord closing a cycle of length `4k`.
    Chord4k {
        cycle: Vec<usize>,
        chord: (usize, usize),
        k: usize,
    },
    /// Hamilton cycle plus a chord closing an odd cycle of length `k`.
    OddChord {
        cycle: Vec<usize>,
        chord: (usize, usize),
        k: usize,
    },
    /// Cycle through all vertices but `missing`, which takes the label `n`.
    CircumferenceNMinus1 {
        cycle: Vec<usize>,
        missing: usize,
    },
    /// Closed-form labeling of a named family.
    ExplicitFormula {
        family: String,
    },
    /// Label 1 on a vertex of large degree, large primes near the rest.
    LargeDegree {
        center: usize,
    },
    /// A prime labeling of a neighborhood graph given by these edges.
    NeighborhoodLift {
        chosen_edges: Vec<(usize, usize)>,
    },
    /// Minimum degree at least `n/2` forces the Hamilton cycle used here.
    DiracBound {
        cycle: Vec<usize>,
        chord: Option<(usize, usize)>,
    },
    /// Hamiltonian with more edges than the 2 (mod 4) chord bound allows.
    EdgeCountBound {
        cycle: Vec<usize>,
        chord: (usize, usize),
    },
    /// Existing labeling extended by new pendant vertices.
    PendantExtension {
        base: Box<Reason>,
        added: usize,
    },
    SearchFound {
        nodes: u64,
    },
    SearchExhausted {
        nodes: u64,
    },
    /// No placement of the even labels avoids an all-even neighborhood.
    EvenSetObstruction {
        even_labels: usize,
        nodes: u64,
    },
    /// 2-regular graph whose neighborhood graph has at least two odd cycles.
    OddCycleUnion {
        odd_cycles: Vec<usize>,
    },
    /// A search ran out of budget before deciding.
    BudgetExhausted {
        nodes: u64,
    },
    /// No route applied.
    Inconclusive,
}

impl Reason {
    pub fn tag(&self) -> &'static str {
        match self {
            Reason::HamiltonianEq1 { .. } => "HamiltonianEq1",
            Reason::Chord4k { .. } => "Chord4k",
            Reason::OddChord { .. } => "OddChord",
            Reason::CircumferenceNMinus1 { .. } => "CircumferenceNMinus1",
            Reason::ExplicitFormula { .. } => "ExplicitFormula",
            Reason::LargeDegree { .. } => "LargeDegree",
            Reason::NeighborhoodLift { .. } => "NeighborhoodLift",
            Reason::DiracBound { .. } => "DiracBound",
            Reason::EdgeCountBound { .. } => "EdgeCountBound",
            Reason::PendantExtension { .. } => "PendantExtension",
            Reason::SearchFound { .. } => "SearchFound",
            Reason::SearchExhausted { .. } => "SearchExhausted",
            Reason::EvenSetObstruction { .. } => "EvenSetObstruction",
            Reason::OddCycleUnion { .. } => "OddCycleUnion",
            Reason::BudgetExhausted { .. } => "BudgetExhausted",
            Reason::Inconclusive => "Inconclusive",
        }
    }
}

/// A verdict with its justification. An `Npl` certificate can only be built
/// through [`Certificate::npl`], which re-verifies the witness labeling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    verdict: Verdict,
    reason: Reason,
    labeling: Option<Labeling>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateError {
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error("labeling is not neighborhood-prime: vertex {} has neighborhood gcd {}", .0.vertex, .0.gcd)]
    NotNeighborhoodPrime(VertexFailure),
}

impl Certificate {
    pub fn npl(g: &Graph, labeling: Labeling, reason: Reason) -> Result<Self, CertificateError> {
        if let Some(fail) = is_neighborhood_prime(g, &labeling)?.failure() {
            return Err(CertificateError::NotNeighborhoodPrime(fail));
        }
        Ok(Certificate {
            verdict: Verdict::Npl,
            reason,
            labeling: Some(labeling),
        })
    }

    pub fn not_npl(reason: Reason) -> Self {
        Certificate {
            verdict: Verdict::NotNpl,
            reason,
            labeling: None,
        }
    }

    pub fn unknown(reason: Reason) -> Self {
        Certificate {
            verdict: Verdict::Unknown,
            reason,
            labeling: None,
        }
    }

    pub fn verdict(&self) -> Verdict {
        self.verdict
    }

    pub fn reason(&self) -> &Reason {
        &self.reason
    }

    pub fn labeling(&self) -> Option<&Labeling> {
        self.labeling.as_ref()
    }

    pub fn is_npl(&self) -> bool {
        self.verdict == Verdict::Npl
    }

    pub fn is_not_npl(&self) -> bool {
        self.verdict == Verdict::NotNpl
    }

    pub fn is_conclusive(&self) -> bool {
        self.verdict != Verdict::Unknown
    }

    pub(crate) fn with_reason(mut self, reason: Reason) -> Self {
        self.reason = reason;
        self
    }
}
