use serde::Serialize;

use super::budget::{Meter, SearchBudget, SearchOutcome, SearchResult};
use crate::construct::{Chord, HamiltonCycle};
use crate::graph::Graph;

/// Backtracking Hamilton cycle search.
///
/// The walk starts at the first vertex of minimum degree and extends the
/// path towards neighbors with the fewest unvisited neighbors first. A
/// branch is cut when some unvisited vertex can no longer have two cycle
/// neighbors, or when two neighbors of the tail both need the tail as
/// their predecessor.
pub fn find_hamilton_cycle(g: &Graph, budget: &SearchBudget) -> SearchResult<HamiltonCycle> {
    let mut meter = budget.meter();
    let outcome = match hamilton_with(g, &mut meter) {
        Some(Some(c)) => SearchOutcome::Found(HamiltonCycle::new_unchecked(c)),
        Some(None) => SearchOutcome::Exhausted,
        None => SearchOutcome::BudgetExhausted,
    };
    SearchResult {
        outcome,
        nodes: meter.nodes,
    }
}

/// A cycle through every vertex except `missing`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NearCycle {
    pub cycle: Vec<usize>,
    pub missing: usize,
}

/// Tries to find a cycle of length `n - 1` by running the Hamilton search
/// on `g - u` for each `u` in index order.
pub fn find_cycle_missing_one(g: &Graph, budget: &SearchBudget) -> SearchResult<NearCycle> {
    let mut meter = budget.meter();
    let n = g.order();
    let mut outcome = SearchOutcome::Exhausted;
    if n >= 4 {
        for u in 0..n {
            let keep: Vec<usize> = (0..n).filter(|&v| v != u).collect();
            let sub = g.induced_subgraph(&keep).expect("subset of a valid graph");
            match hamilton_with(&sub, &mut meter) {
                Some(Some(c)) => {
                    let cycle = c.into_iter().map(|i| keep[i]).collect();
                    outcome = SearchOutcome::Found(NearCycle { cycle, missing: u });
                    break;
                }
                Some(None) => {}
                None => {
                    outcome = SearchOutcome::BudgetExhausted;
                    break;
                }
            }
        }
    }
    SearchResult {
        outcome,
        nodes: meter.nodes,
    }
}

/// First chord, in edge order, closing a cycle whose length is a multiple of 4.
pub fn find_chord_4k(g: &Graph, c: &HamiltonCycle) -> Option<Chord> {
    chords(g, c).find(|ch| {
        let (x, y) = ch.arc_cycle_lengths();
        x % 4 == 0 || y % 4 == 0
    })
}

/// First chord, in edge order, closing a cycle of odd length.
pub fn find_odd_chord(g: &Graph, c: &HamiltonCycle) -> Option<Chord> {
    chords(g, c).find(|ch| {
        let (x, y) = ch.arc_cycle_lengths();
        x % 2 == 1 || y % 2 == 1
    })
}

fn chords<'a>(g: &'a Graph, c: &'a HamiltonCycle) -> impl Iterator<Item = Chord> + 'a {
    g.edges().filter_map(move |(u, v)| Chord::new(g, c, u, v))
}

/// `Some(Some(cycle))` when found, `Some(None)` when none exists, `None`
/// when the meter ran out.
fn hamilton_with(g: &Graph, meter: &mut Meter<'_>) -> Option<Option<Vec<usize>>> {
    let n = g.order();
    if n < 3 || g.min_degree() < 2 || !g.is_connected() {
        return Some(None);
    }
    if let Some(side) = g.bipartition() {
        let left = side.iter().filter(|&&s| s).count();
        if 2 * left != n {
            return Some(None);
        }
    }
    let start = (0..n).min_by_key(|&v| (g.degree(v), v)).unwrap();
    let mut state = Walk {
        g,
        start,
        visited: vec![false; n],
        free: g.degrees().collect(),
        path: Vec::with_capacity(n),
    };
    state.visit(start);
    match state.extend(meter) {
        Step::Done => Some(Some(state.path)),
        Step::Dead => Some(None),
        Step::Stopped => None,
    }
}

enum Step {
    Done,
    Dead,
    Stopped,
}

struct Walk<'a> {
    g: &'a Graph,
    start: usize,
    visited: Vec<bool>,
    /// Unvisited neighbors of each vertex.
    free: Vec<usize>,
    path: Vec<usize>,
}

impl Walk<'_> {
    fn visit(&mut self, v: usize) {
        self.visited[v] = true;
        self.path.push(v);
        for &w in self.g.neighbors(v) {
            self.free[w] -= 1;
        }
    }

    fn unvisit(&mut self, v: usize) {
        self.visited[v] = false;
        self.path.pop();
        for &w in self.g.neighbors(v) {
            self.free[w] += 1;
        }
    }

    /// Options an unvisited vertex has besides the current tail.
    fn slack(&self, x: usize) -> usize {
        self.free[x] + usize::from(self.g.has_edge(x, self.start))
    }

    fn feasible(&self, tail: usize) -> bool {
        let n = self.g.order();
        if self.path.len() < n && self.free[self.start] == 0 && !self.g.has_edge(tail, self.start) {
            return false;
        }
        (0..n)
            .filter(|&x| !self.visited[x])
            .all(|x| self.slack(x) + usize::from(self.g.has_edge(x, tail)) >= 2)
    }

    fn extend(&mut self, meter: &mut Meter<'_>) -> Step {
        let tail = *self.path.last().unwrap();
        if self.path.len() == self.g.order() {
            return if self.g.has_edge(tail, self.start) {
                Step::Done
            } else {
                Step::Dead
            };
        }
        if !meter.tick() {
            return Step::Stopped;
        }
        let mut next: Vec<usize> = self
            .g
            .neighbors(tail)
            .iter()
            .copied()
            .filter(|&w| !self.visited[w])
            .collect();
        let forced: Vec<usize> = next
            .iter()
            .copied()
            .filter(|&w| self.slack(w) <= 1)
            .collect();
        match forced.len() {
            0 => next.sort_by_key(|&w| (self.free[w], w)),
            1 => next = forced,
            _ => return Step::Dead,
        }
        for w in next {
            self.visit(w);
            if self.feasible(w) {
                match self.extend(meter) {
                    Step::Dead => {}
                    done_or_stopped => return done_or_stopped,
                }
            }
            self.unvisit(w);
        }
        Step::Dead
    }
}
