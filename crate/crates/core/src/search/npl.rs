use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::budget::{Meter, SearchBudget, SearchOutcome, SearchResult};
use crate::certificate::{Certificate, Reason};
use crate::graph::Graph;
use crate::labeling::{is_neighborhood_prime, Labeling};
use crate::numtheory::gcd;

/// Knobs for [`search_npl_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NplSearchOptions {
    /// Only label a vertex after every lower-index twin (same neighborhood
    /// apart from each other) is labeled. Swapping twins is an automorphism,
    /// so this keeps one representative per class of equivalent labelings.
    pub twin_symmetry: bool,
    /// Run a seeded min-conflicts local search before the exact search on
    /// graphs with at least this many vertices. Anything it finds is
    /// verified; a negative answer always comes from the exact search.
    pub local_search_from: Option<usize>,
}

impl Default for NplSearchOptions {
    fn default() -> Self {
        NplSearchOptions {
            twin_symmetry: false,
            local_search_from: Some(12),
        }
    }
}

/// Decides neighborhood-primality by backtracking with default options.
pub fn search_npl(g: &Graph, budget: &SearchBudget) -> Certificate {
    search_npl_with(g, budget, &NplSearchOptions::default())
}

/// Labels `1, 2, ..., n` are placed in order, each on some unlabeled vertex
/// (tried by descending degree, then index). A branch dies as soon as a
/// vertex of degree at least 2 has its whole neighborhood labeled with gcd
/// above 1, or once no odd labels remain while some such neighborhood is
/// still open and everything in it so far is even.
pub fn search_npl_with(
    g: &Graph,
    budget: &SearchBudget,
    options: &NplSearchOptions,
) -> Certificate {
    let mut nodes = 0;
    if options.local_search_from.is_some_and(|m| g.order() >= m) {
        let iterations = 400 * g.order() as u64;
        if let Some(f) = local_search(g, iterations) {
            return Certificate::npl(g, f, Reason::SearchFound { nodes: iterations })
                .expect("local search returns verified labelings");
        }
        nodes = iterations;
    }
    let result = npl_dfs(g, budget, options.twin_symmetry);
    let nodes = nodes + result.nodes;
    match result.outcome {
        SearchOutcome::Found(f) => Certificate::npl(g, f, Reason::SearchFound { nodes })
            .expect("exact search only returns complete valid labelings"),
        SearchOutcome::Exhausted => Certificate::not_npl(Reason::SearchExhausted { nodes }),
        SearchOutcome::BudgetExhausted => Certificate::unknown(Reason::BudgetExhausted { nodes }),
    }
}

/// The exact search alone, returning the raw outcome.
pub fn npl_dfs(g: &Graph, budget: &SearchBudget, twin_symmetry: bool) -> SearchResult<Labeling> {
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut dfs = Dfs {
        g,
        order,
        label: vec![0; n],
        acc: vec![0; n],
        rem: g.degrees().collect(),
        constrained: g.degrees().map(|d| d >= 2).collect(),
        last_odd: if n % 2 == 1 { n } else { n - 1 },
        twin_prev: if twin_symmetry {
            twin_predecessors(g)
        } else {
            vec![None; n]
        },
        saved: Vec::with_capacity(2 * g.edge_count()),
    };
    let mut meter = budget.meter();
    let outcome = match dfs.place(1, &mut meter) {
        true => SearchOutcome::Found(Labeling::new(dfs.label).expect("complete assignment")),
        false if meter.stopped() => SearchOutcome::BudgetExhausted,
        false => SearchOutcome::Exhausted,
    };
    SearchResult {
        outcome,
        nodes: meter.nodes,
    }
}

struct Dfs<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    /// 0 while unlabeled.
    label: Vec<usize>,
    /// gcd of the labels placed so far in each neighborhood (0 if none).
    acc: Vec<usize>,
    /// Unlabeled neighbors of each vertex.
    rem: Vec<usize>,
    constrained: Vec<bool>,
    last_odd: usize,
    twin_prev: Vec<Option<usize>>,
    saved: Vec<usize>,
}

impl Dfs<'_> {
    fn place(&mut self, l: usize, meter: &mut Meter<'_>) -> bool {
        let n = self.g.order();
        if l > n {
            return true;
        }
        if !meter.tick() {
            return false;
        }
        for i in 0..n {
            let x = self.order[i];
            if self.label[x] != 0 || self.twin_prev[x].is_some_and(|p| self.label[p] == 0) {
                continue;
            }
            if self.assign(x, l) && self.place(l + 1, meter) {
                return true;
            }
            self.unassign(x);
            if meter.stopped() {
                return false;
            }
        }
        false
    }

    /// Places `l` on `x`; false if that closes a bad neighborhood.
    fn assign(&mut self, x: usize, l: usize) -> bool {
        self.label[x] = l;
        let mut ok = true;
        for &w in self.g.neighbors(x) {
            self.saved.push(self.acc[w]);
            self.acc[w] = gcd(self.acc[w] as u64, l as u64) as usize;
            self.rem[w] -= 1;
            if self.constrained[w] && self.rem[w] == 0 && self.acc[w] != 1 {
                ok = false;
            }
        }
        if ok && l >= self.last_odd {
            ok = (0..self.g.order())
                .all(|w| !self.constrained[w] || self.rem[w] == 0 || self.acc[w] % 2 == 1);
        }
        ok
    }

    fn unassign(&mut self, x: usize) {
        self.label[x] = 0;
        for &w in self.g.neighbors(x).iter().rev() {
            self.acc[w] = self.saved.pop().unwrap();
            self.rem[w] += 1;
        }
    }
}

/// For each vertex, the nearest lower-index vertex with the same
/// neighborhood once the two are removed from each other's lists.
pub(crate) fn twin_predecessors(g: &Graph) -> Vec<Option<usize>> {
    let n = g.order();
    let strip = |v: usize, other: usize| -> Vec<usize> {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(|&w| w != other)
            .collect()
    };
    (0..n)
        .map(|v| {
            (0..v)
                .rev()
                .find(|&u| g.degree(u) == g.degree(v) && strip(u, v) == strip(v, u))
        })
        .collect()
}

/// Seeded min-conflicts search over label swaps. Returns only labelings
/// that pass [`is_neighborhood_prime`].
pub fn local_search(g: &Graph, iterations: u64) -> Option<Labeling> {
    let n = g.order();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e70_6c61_6273 ^ n as u64);
    let mut label: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        label.swap(i, j);
    }
    let bad_at = |label: &[usize], w: usize| -> bool {
        g.degree(w) >= 2 && {
            let mut acc = 0u64;
            for &x in g.neighbors(w) {
                acc = gcd(acc, label[x] as u64);
                if acc == 1 {
                    break;
                }
            }
            acc != 1
        }
    };
    let mut bad: Vec<bool> = (0..n).map(|w| bad_at(&label, w)).collect();
    let mut cost = bad.iter().filter(|&&b| b).count();
    let mut touched = Vec::new();
    for _ in 0..iterations {
        if cost == 0 {
            break;
        }
        let conflicts: Vec<usize> = (0..n).filter(|&w| bad[w]).collect();
        let w = *conflicts.choose(&mut rng).unwrap();
        let x = *g.neighbors(w).choose(&mut rng).unwrap();
        let y = rng.random_range(0..n);
        if x == y {
            continue;
        }
        label.swap(x, y);
        touched.clear();
        touched.extend(g.neighbors(x).iter().chain(g.neighbors(y)).copied());
        touched.sort_unstable();
        touched.dedup();
        let before = touched.iter().filter(|&&t| bad[t]).count();
        let after_bad: Vec<bool> = touched.iter().map(|&t| bad_at(&label, t)).collect();
        let after = after_bad.iter().filter(|&&b| b).count();
        if after <= before || rng.random_bool(0.05) {
            for (&t, &b) in touched.iter().zip(&after_bad) {
                bad[t] = b;
            }
            cost = cost + after - before;
        } else {
            label.swap(x, y);
        }
    }
    if cost != 0 {
        return None;
    }
    let f = Labeling::new(label).ok()?;
    is_neighborhood_prime(g, &f).ok()?.is_pass().then_some(f)
}
