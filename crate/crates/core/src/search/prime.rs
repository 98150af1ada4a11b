use super::budget::{Meter, SearchBudget, SearchOutcome, SearchResult};
use crate::graph::Graph;
use crate::labeling::Labeling;
use crate::numtheory::gcd;

/// Backtracking search for a prime labeling.
///
/// Even labels go first, so they are forced onto an independent set early;
/// then the odd labels from 3 upwards, and 1 last since it fits anywhere.
/// Isolated vertices are interchangeable, so only the lowest-index free one
/// is tried.
pub fn search_prime_labeling(g: &Graph, budget: &SearchBudget) -> SearchResult<Labeling> {
    let n = g.order();
    let labels: Vec<usize> = (2..=n)
        .step_by(2)
        .chain((3..=n).step_by(2))
        .chain(std::iter::once(1))
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut s = PrimeDfs {
        g,
        labels,
        order,
        label: vec![0; n],
    };
    let mut meter = budget.meter();
    let outcome = if s.place(0, &mut meter) {
        SearchOutcome::Found(Labeling::new(s.label).expect("complete assignment"))
    } else if meter.stopped() {
        SearchOutcome::BudgetExhausted
    } else {
        SearchOutcome::Exhausted
    };
    SearchResult {
        outcome,
        nodes: meter.nodes,
    }
}

struct PrimeDfs<'a> {
    g: &'a Graph,
    labels: Vec<usize>,
    order: Vec<usize>,
    label: Vec<usize>,
}

impl PrimeDfs<'_> {
    fn place(&mut self, depth: usize, meter: &mut Meter<'_>) -> bool {
        if depth == self.labels.len() {
            return true;
        }
        if !meter.tick() {
            return false;
        }
        let l = self.labels[depth];
        let mut isolated_tried = false;
        for i in 0..self.order.len() {
            let x = self.order[i];
            if self.label[x] != 0 {
                continue;
            }
            if self.g.degree(x) == 0 {
                if isolated_tried {
                    continue;
                }
                isolated_tried = true;
            }
            let fits = self
                .g
                .neighbors(x)
                .iter()
                .all(|&w| self.label[w] == 0 || gcd(self.label[w] as u64, l as u64) == 1);
            if !fits {
                continue;
            }
            self.label[x] = l;
            if self.place(depth + 1, meter) {
                return true;
            }
            self.label[x] = 0;
            if meter.stopped() {
                return false;
            }
        }
        false
    }
}
