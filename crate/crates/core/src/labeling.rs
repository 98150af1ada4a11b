//! Labelings, their verification, neighborhood graphs and the even-set
//! obstruction.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::{Certificate, CertificateError, Reason};
use crate::graph::{Graph, GraphError};
use crate::numtheory::gcd;
use crate::search::{search_npl, search_prime_labeling, SearchBudget, SearchOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("labels must be a permutation of 1..={n}: {detail}")]
    NotBijective { n: usize, detail: String },
    #[error("labeling has {labels} entries but the graph has {order} vertices")]
    SizeMismatch { order: usize, labels: usize },
    #[error("cannot parse labeling: {0}")]
    Parse(String),
}

/// A bijection from vertex indices onto `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Labeling {
    labels: Vec<usize>,
}

impl Labeling {
    /// `labels[v]` is the label of vertex `v`.
    pub fn new(labels: Vec<usize>) -> Result<Self, LabelingError> {
        let n = labels.len();
        let mut seen = vec![false; n + 1];
        for (v, &l) in labels.iter().enumerate() {
            if l == 0 || l > n {
                return Err(LabelingError::NotBijective {
                    n,
                    detail: format!("vertex {v} has label {l}"),
                });
            }
            if std::mem::replace(&mut seen[l], true) {
                return Err(LabelingError::NotBijective {
                    n,
                    detail: format!("label {l} used twice"),
                });
            }
        }
        Ok(Labeling { labels })
    }

    /// Labels `1, 2, ...` assigned to the vertices in the given order.
    pub fn from_vertex_order(order: &[usize]) -> Result<Self, LabelingError> {
        let mut labels = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            if v >= order.len() {
                return Err(LabelingError::NotBijective {
                    n: order.len(),
                    detail: format!("vertex {v} out of range"),
                });
            }
            labels[v] = i + 1;
        }
        Labeling::new(labels)
    }

    pub fn identity(n: usize) -> Self {
        Labeling {
            labels: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.labels
    }

    /// `inverse()[l - 1]` is the vertex carrying label `l`.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.labels.len()];
        for (v, &l) in self.labels.iter().enumerate() {
            inv[l - 1] = v;
        }
        inv
    }

    pub(crate) fn check_order(&self, g: &Graph) -> Result<(), LabelingError> {
        if self.len() != g.order() {
            return Err(LabelingError::SizeMismatch {
                order: g.order(),
                labels: self.len(),
            });
        }
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for Labeling {
    type Error = LabelingError;

    fn try_from(labels: Vec<usize>) -> Result<Self, Self::Error> {
        Labeling::new(labels)
    }
}

impl From<Labeling> for Vec<usize> {
    fn from(f: Labeling) -> Self {
        f.labels
    }
}

/// Comma-separated labels in vertex order.
impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Labeling {
    type Err = LabelingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let labels = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| LabelingError::Parse(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Labeling::new(labels)
    }
}

/// Outcome of a verification: either the property holds or the first
/// (smallest-index) witness of failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verification<W> {
    Pass,
    Fail(W),
}

impl<W: Copy> Verification<W> {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verification::Pass)
    }

    pub fn failure(&self) -> Option<W> {
        match *self {
            Verification::Pass => None,
            Verification::Fail(w) => Some(w),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VertexFailure {
    pub vertex: usize,
    pub gcd: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeFailure {
    pub edge: (usize, usize),
    pub gcd: usize,
}

/// gcd of the labels on `N(v)`, stopping early at 1.
pub fn neighborhood_gcd(g: &Graph, f: &Labeling, v: usize) -> usize {
    let mut acc = 0;
    for &w in g.neighbors(v) {
        acc = gcd(acc as u64, f.label(w) as u64) as usize;
        if acc == 1 {
            break;
        }
    }
    acc
}

/// Checks that every vertex of degree at least 2 sees labels with gcd 1.
pub fn is_neighborhood_prime(
    g: &Graph,
    f: &Labeling,
) -> Result<Verification<VertexFailure>, LabelingError> {
    f.check_order(g)?;
    for v in 0..g.order() {
        if g.degree(v) < 2 {
            continue;
        }
        let d = neighborhood_gcd(g, f, v);
        if d != 1 {
            return Ok(Verification::Fail(VertexFailure { vertex: v, gcd: d }));
        }
    }
    Ok(Verification::Pass)
}

/// Checks that the endpoints of every edge carry coprime labels.
pub fn is_prime_labeling(
    g: &Graph,
    f: &Labeling,
) -> Result<Verification<EdgeFailure>, LabelingError> {
    f.check_order(g)?;
    for (u, w) in g.edges() {
        let d = gcd(f.label(u) as u64, f.label(w) as u64) as usize;
        if d != 1 {
            return Ok(Verification::Fail(EdgeFailure {
                edge: (u, w),
                gcd: d,
            }));
        }
    }
    Ok(Verification::Pass)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NeighborhoodGraphError {
    #[error("vertex {vertex}: chosen pair {pair:?} is not inside its neighborhood")]
    PairOutsideNeighborhood { vertex: usize, pair: (usize, usize) },
    #[error("vertex {vertex} has degree {degree} and needs exactly {needed} chosen pair")]
    MissingChoice {
        vertex: usize,
        degree: usize,
        needed: &'static str,
    },
    #[error("expected {expected} choices, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One member of the neighborhood-graph family of a base graph: every
/// vertex of degree at least 2 contributes one pair from its neighborhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodGraph {
    chosen: Vec<Option<(usize, usize)>>,
    graph: Graph,
}

impl NeighborhoodGraph {
    /// `chosen[v]` must be `Some` exactly for the vertices of degree >= 2.
    pub fn from_choices(
        base: &Graph,
        chosen: Vec<Option<(usize, usize)>>,
    ) -> Result<Self, NeighborhoodGraphError> {
        if chosen.len() != base.order() {
            return Err(NeighborhoodGraphError::WrongLength {
                expected: base.order(),
                got: chosen.len(),
            });
        }
        for (v, c) in chosen.iter().enumerate() {
            match (*c, base.degree(v) >= 2) {
                (Some((a, b)), true) => {
                    if a == b
                        || a >= base.order()
                        || b >= base.order()
                        || !base.has_edge(v, a)
                        || !base.has_edge(v, b)
                    {
                        return Err(NeighborhoodGraphError::PairOutsideNeighborhood {
                            vertex: v,
                            pair: (a, b),
                        });
                    }
                }
                (None, false) => {}
                (_, needs) => {
                    return Err(NeighborhoodGraphError::MissingChoice {
                        vertex: v,
                        degree: base.degree(v),
                        needed: if needs { "one" } else { "no" },
                    })
                }
            }
        }
        let graph = Graph::from_edges(base.order(), chosen.iter().flatten().copied())?;
        Ok(NeighborhoodGraph { chosen, graph })
    }

    pub fn chosen(&self) -> &[Option<(usize, usize)>] {
        &self.chosen
    }

    /// The derived graph on the base vertex set; repeated pairs collapse.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Whether every choice lies in the corresponding neighborhood of `base`.
    pub fn belongs_to(&self, base: &Graph) -> bool {
        NeighborhoodGraph::from_choices(base, self.chosen.clone()).is_ok()
    }
}

/// Lazily enumerates every neighborhood graph of `g`, varying the choice at
/// the highest-index vertex fastest. Pairs within a neighborhood are taken
/// in lexicographic order.
pub fn neighborhood_graphs(g: &Graph) -> NeighborhoodGraphs<'_> {
    let pairs: Vec<Vec<(usize, usize)>> = (0..g.order())
        .map(|v| {
            let nb = g.neighbors(v);
            let mut p = Vec::new();
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    p.push((nb[i], nb[j]));
                }
            }
            p
        })
        .collect();
    NeighborhoodGraphs {
        base: g,
        counters: vec![0; g.order()],
        pairs,
        done: false,
    }
}

/// Number of neighborhood graphs of `g` (product of `C(deg, 2)` over
/// vertices of degree >= 2), saturating.
pub fn neighborhood_graph_count(g: &Graph) -> u128 {
    g.degrees().filter(|&d| d >= 2).fold(1u128, |acc, d| {
        acc.saturating_mul((d * (d - 1) / 2) as u128)
    })
}

pub struct NeighborhoodGraphs<'a> {
    base: &'a Graph,
    counters: Vec<usize>,
    pairs: Vec<Vec<(usize, usize)>>,
    done: bool,
}

impl Iterator for NeighborhoodGraphs<'_> {
    type Item = NeighborhoodGraph;

    fn next(&mut self) -> Option<NeighborhoodGraph> {
        if self.done {
            return None;
        }
        let chosen = self
            .counters
            .iter()
            .zip(&self.pairs)
            .map(|(&c, p)| p.get(c).copied())
            .collect();
        // advance the mixed-radix counter
        self.done = true;
        for v in (0..self.counters.len()).rev() {
            if self.pairs[v].len() > 1 {
                self.counters[v] += 1;
                if self.counters[v] < self.pairs[v].len() {
                    self.done = false;
                    break;
                }
                self.counters[v] = 0;
            }
        }
        Some(
            NeighborhoodGraph::from_choices(self.base, chosen)
                .expect("enumerated choices lie in their neighborhoods"),
        )
    }
}

/// The single neighborhood graph of a graph with maximum degree at most 2.
pub fn unique_neighborhood_graph(g: &Graph) -> Option<NeighborhoodGraph> {
    if g.max_degree() > 2 {
        return None;
    }
    neighborhood_graphs(g).next()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("not a neighborhood graph of the base graph: {0}")]
    NotNeighborhoodGraph(String),
    #[error("labeling is not prime on the neighborhood graph: edge {:?} has gcd {}", .0.edge, .0.gcd)]
    NotPrime(EdgeFailure),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error(transparent)]
    Certificate(#[from] CertificateError),
}

/// A prime labeling of a neighborhood graph of `g` is a neighborhood-prime
/// labeling of `g`.
pub fn lift_prime_to_npl(
    g: &Graph,
    h: &NeighborhoodGraph,
    f: &Labeling,
) -> Result<Certificate, LiftError> {
    if let Err(e) = NeighborhoodGraph::from_choices(g, h.chosen.clone()) {
        return Err(LiftError::NotNeighborhoodGraph(e.to_string()));
    }
    if let Some(fail) = is_prime_labeling(h.graph(), f)?.failure() {
        return Err(LiftError::NotPrime(fail));
    }
    let chosen_edges = h.graph().edges().collect();
    Ok(Certificate::npl(
        g,
        f.clone(),
        Reason::NeighborhoodLift { chosen_edges },
    )?)
}

/// Both sides of the 2-regular equivalence, each decided by its own search.
#[derive(Debug, Clone)]
pub struct TwoRegularEquivalence {
    pub neighborhood_graph: NeighborhoodGraph,
    /// Whether `g` has a neighborhood-prime labeling.
    pub graph_npl: bool,
    /// Whether the neighborhood graph has a prime labeling.
    pub neighborhood_graph_prime: bool,
    pub npl_witness: Option<Labeling>,
    pub prime_witness: Option<Labeling>,
}

impl TwoRegularEquivalence {
    pub fn agrees(&self) -> bool {
        self.graph_npl == self.neighborhood_graph_prime
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwoRegularError {
    #[error("graph is not 2-regular")]
    NotTwoRegular,
    #[error("search budget exhausted before deciding the {0} side")]
    Inconclusive(&'static str),
}

/// Decides neighborhood-primality of a 2-regular `g` and primality of its
/// unique neighborhood graph independently.
pub fn npl_iff_prime_2regular(
    g: &Graph,
    budget: &SearchBudget,
) -> Result<TwoRegularEquivalence, TwoRegularError> {
    if !g.is_regular(2) {
        return Err(TwoRegularError::NotTwoRegular);
    }
    let h = unique_neighborhood_graph(g).expect("2-regular graphs have maximum degree 2");
    let npl = search_npl(g, budget);
    if !npl.is_conclusive() {
        return Err(TwoRegularError::Inconclusive("neighborhood-prime"));
    }
    let prime = search_prime_labeling(h.graph(), budget);
    let prime_witness = match prime.outcome {
        SearchOutcome::Found(f) => Some(f),
        SearchOutcome::Exhausted => None,
        SearchOutcome::BudgetExhausted => return Err(TwoRegularError::Inconclusive("prime")),
    };
    Ok(TwoRegularEquivalence {
        graph_npl: npl.is_npl(),
        neighborhood_graph_prime: prime_witness.is_some(),
        npl_witness: npl.labeling().cloned(),
        prime_witness,
        neighborhood_graph: h,
    })
}

/// Default largest order accepted by [`even_set_obstruction`].
pub const DEFAULT_OBSTRUCTION_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("order {order} exceeds the even-set search cap {cap}")]
pub struct ObstructionTooLarge {
    pub order: usize,
    pub cap: usize,
}

/// Looks for a set `S` of `floor(n/2)` vertices (the ones that would carry
/// even labels) containing no complete neighborhood of a vertex of degree
/// >= 2. If no such set exists every labeling has an all-even neighborhood,
/// > which proves the graph is not neighborhood-prime. Absence of an
/// > obstruction proves nothing.
pub fn even_set_obstruction(
    g: &Graph,
    cap: usize,
) -> Result<Option<Certificate>, ObstructionTooLarge> {
    let n = g.order();
    if n > cap {
        return Err(ObstructionTooLarge { order: n, cap });
    }
    let mut state = EvenSetSearch {
        g,
        target: n / 2,
        inside: vec![0; n],
        chosen: 0,
        nodes: 0,
    };
    if state.extend(0) {
        Ok(None)
    } else {
        Ok(Some(Certificate::not_npl(Reason::EvenSetObstruction {
            even_labels: n / 2,
            nodes: state.nodes,
        })))
    }
}

struct EvenSetSearch<'a> {
    g: &'a Graph,
    target: usize,
    /// Number of neighbors of each vertex currently in S.
    inside: Vec<usize>,
    chosen: usize,
    nodes: u64,
}

impl EvenSetSearch<'_> {
    /// True if S can be completed using vertices `>= v`.
    fn extend(&mut self, v: usize) -> bool {
        self.nodes += 1;
        if self.chosen == self.target {
            return true;
        }
        let n = self.g.order();
        if n - v < self.target - self.chosen {
            return false;
        }
        // include v unless that fills some neighborhood
        let fills = self.g.neighbors(v).iter().any(|&w| {
            let d = self.g.degree(w);
            d >= 2 && self.inside[w] + 1 == d
        });
        if !fills {
            for &w in self.g.neighbors(v) {
                self.inside[w] += 1;
            }
            self.chosen += 1;
            let ok = self.extend(v + 1);
            self.chosen -= 1;
            for &w in self.g.neighbors(v) {
                self.inside[w] -= 1;
            }
            if ok {
                return true;
            }
        }
        self.extend(v + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    fn lab(v: &[usize]) -> Labeling {
        Labeling::new(v.to_vec()).unwrap()
    }

    #[test]
    fn labeling_validation() {
        assert!(Labeling::new(vec![2, 1, 3]).is_ok());
        assert!(Labeling::new(vec![2, 2, 3]).is_err());
        assert!(Labeling::new(vec![0, 1]).is_err());
        assert!(Labeling::new(vec![1, 3]).is_err());
        let f: Labeling = "3, 1,2".parse().unwrap();
        assert_eq!(f.as_slice(), &[3, 1, 2]);
        assert_eq!(f.to_string(), "3,1,2");
        assert_eq!(f.inverse(), vec![1, 2, 0]);
        assert!("1,x".parse::<Labeling>().is_err());
        assert_eq!(
            Labeling::from_vertex_order(&[2, 0, 1]).unwrap().as_slice(),
            &[2, 3, 1]
        );
    }

    #[test]
    fn npl_examples() {
        let c5 = generators::cycle(5).unwrap();
        assert!(is_neighborhood_prime(&c5, &lab(&[3, 1, 4, 2, 5]))
            .unwrap()
            .is_pass());
        let c6 = generators::cycle(6).unwrap();
        assert_eq!(
            is_neighborhood_prime(&c6, &lab(&[4, 1, 5, 2, 6, 3])).unwrap(),
            Verification::Fail(VertexFailure { vertex: 5, gcd: 2 })
        );
        let k2 = generators::complete(2).unwrap();
        assert!(is_neighborhood_prime(&k2, &lab(&[1, 2])).unwrap().is_pass());
        assert!(matches!(
            is_neighborhood_prime(&k2, &lab(&[1, 2, 3])),
            Err(LabelingError::SizeMismatch { .. })
        ));
    }

    #[test]
    fn prime_examples() {
        let c3 = generators::cycle(3).unwrap();
        assert!(is_prime_labeling(&c3, &lab(&[1, 2, 3])).unwrap().is_pass());
        let s = generators::star(3).unwrap();
        assert_eq!(
            is_prime_labeling(&s, &lab(&[2, 1, 4, 3])).unwrap(),
            Verification::Fail(EdgeFailure {
                edge: (0, 2),
                gcd: 2
            })
        );
        let k2 = generators::complete(2).unwrap();
        assert!(is_prime_labeling(&k2, &lab(&[1, 2])).unwrap().is_pass());
    }

    #[test]
    fn neighborhood_graph_examples() {
        let p4 = generators::path(4).unwrap();
        let all: Vec<_> = neighborhood_graphs(&p4).collect();
        assert_eq!(all.len(), 1);
        assert_eq!(
            all[0].graph().edges().collect::<Vec<_>>(),
            vec![(0, 2), (1, 3)]
        );

        let c6 = generators::cycle(6).unwrap();
        let h = unique_neighborhood_graph(&c6).unwrap();
        let two_triangles =
            generators::union(&[generators::cycle(3).unwrap(), generators::cycle(3).unwrap()])
                .unwrap();
        assert_eq!(
            h.graph().induced_subgraph(&[0, 2, 4, 1, 3, 5]).unwrap(),
            two_triangles
        );

        let s3 = generators::star(3).unwrap();
        let hs: Vec<_> = neighborhood_graphs(&s3).collect();
        assert_eq!(hs.len(), 3);
        assert_eq!(neighborhood_graph_count(&s3), 3);
        let mut edge_sets: Vec<_> = hs
            .iter()
            .map(|h| h.graph().edges().collect::<Vec<_>>())
            .collect();
        edge_sets.dedup();
        assert_eq!(edge_sets.len(), 3);

        let k4 = generators::complete(4).unwrap();
        assert_eq!(
            neighborhood_graphs(&k4).count() as u128,
            neighborhood_graph_count(&k4)
        );
        assert_eq!(neighborhood_graph_count(&k4), 81);
        assert_eq!(neighborhood_graphs(&Graph::empty(3).unwrap()).count(), 1);
    }

    #[test]
    fn choices_are_validated() {
        let p3 = generators::path(3).unwrap();
        assert!(NeighborhoodGraph::from_choices(&p3, vec![None, Some((0, 2)), None]).is_ok());
        assert!(NeighborhoodGraph::from_choices(&p3, vec![None, None, None]).is_err());
        assert!(
            NeighborhoodGraph::from_choices(&p3, vec![Some((1, 2)), Some((0, 2)), None]).is_err()
        );
        assert!(NeighborhoodGraph::from_choices(&p3, vec![None, Some((0, 1)), None]).is_err());
    }

    #[test]
    fn lift_examples() {
        // C5: its neighborhood graph is the pentagram 0-2-4-1-3-0
        let c5 = generators::cycle(5).unwrap();
        let h = unique_neighborhood_graph(&c5).unwrap();
        let f = Labeling::from_vertex_order(&[0, 2, 4, 1, 3]).unwrap();
        assert!(is_prime_labeling(h.graph(), &f).unwrap().is_pass());
        let cert = lift_prime_to_npl(&c5, &h, &f).unwrap();
        assert!(cert.is_npl());

        let c8 = generators::cycle(8).unwrap();
        let h = unique_neighborhood_graph(&c8).unwrap();
        let found = search_prime_labeling(h.graph(), &SearchBudget::unlimited());
        let SearchOutcome::Found(f) = found.outcome else {
            panic!("C4 u C4 is prime")
        };
        assert!(lift_prime_to_npl(&c8, &h, &f).unwrap().is_npl());

        let bad = Labeling::identity(8);
        assert!(matches!(
            lift_prime_to_npl(&c8, &h, &bad),
            Err(LiftError::NotPrime(_))
        ));
        let c6 = generators::cycle(6).unwrap();
        assert!(matches!(
            lift_prime_to_npl(&c6, &h, &f),
            Err(LiftError::NotNeighborhoodGraph(_))
        ));
    }

    #[test]
    fn two_regular_examples() {
        let b = SearchBudget::unlimited();
        let r = npl_iff_prime_2regular(&generators::cycle(5).unwrap(), &b).unwrap();
        assert!(r.graph_npl && r.neighborhood_graph_prime);
        let r = npl_iff_prime_2regular(&generators::cycle(6).unwrap(), &b).unwrap();
        assert!(!r.graph_npl && !r.neighborhood_graph_prime);
        let c3 = generators::cycle(3).unwrap();
        let r = npl_iff_prime_2regular(&generators::union(&[c3.clone(), c3]).unwrap(), &b).unwrap();
        assert!(!r.graph_npl && !r.neighborhood_graph_prime);
        assert_eq!(
            npl_iff_prime_2regular(&generators::path(4).unwrap(), &b).unwrap_err(),
            TwoRegularError::NotTwoRegular
        );
    }

    #[test]
    fn obstruction_examples() {
        let c6 = generators::cycle(6).unwrap();
        assert!(even_set_obstruction(&c6, 20).unwrap().unwrap().is_not_npl());
        let k4 = generators::complete(4).unwrap();
        assert!(even_set_obstruction(&k4, 20).unwrap().is_none());
        let c10 = generators::cycle(10).unwrap();
        assert!(even_set_obstruction(&c10, 20).unwrap().is_some());
        let c21 = generators::cycle(21).unwrap();
        assert_eq!(
            even_set_obstruction(&c21, DEFAULT_OBSTRUCTION_CAP).unwrap_err(),
            ObstructionTooLarge { order: 21, cap: 20 }
        );
    }

    #[test]
    fn obstruction_on_cycles_tracks_residue() {
        for n in 3..=18 {
            let fired = even_set_obstruction(&generators::cycle(n).unwrap(), 20)
                .unwrap()
                .is_some();
            assert_eq!(fired, n % 4 == 2, "C{n}");
        }
    }
}
