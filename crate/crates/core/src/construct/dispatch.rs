use super::degree::{label_large_degree, large_degree_threshold};
use super::hamiltonian::{
    label_circumference, label_ham_chord_4k, label_ham_odd_chord, label_hamiltonian, labeling_from,
};
use super::HamiltonCycle;
use crate::certificate::{Certificate, Reason};
use crate::graph::Graph;
use crate::labeling::{even_set_obstruction, DEFAULT_OBSTRUCTION_CAP};
use crate::search::{
    find_chord_4k, find_cycle_missing_one, find_hamilton_cycle, find_odd_chord, search_npl,
    SearchBudget, SearchOutcome,
};

/// Edge count above which a Hamiltonian graph of order `n = 2 mod 4` must
/// have a chord closing a cycle of length divisible by 4:
/// `n * floor((n - 6) / 8) + n`.
pub fn edge_count_bound(n: usize) -> usize {
    n * (n.saturating_sub(6) / 8) + n
}

/// Odd cycle lengths in the unique neighborhood graph of a 2-regular graph:
/// `C_m` contributes `C_m` when `m` is odd and two copies of `C_{m/2}`
/// otherwise.
pub fn neighborhood_odd_cycles(g: &Graph) -> Option<Vec<usize>> {
    if !g.is_regular(2) {
        return None;
    }
    let mut odd = Vec::new();
    for comp in g.components() {
        let m = comp.len();
        if m % 2 == 1 {
            odd.push(m);
        } else if (m / 2) % 2 == 1 {
            odd.extend([m / 2, m / 2]);
        }
    }
    Some(odd)
}

/// Tries the cheap sufficient conditions in order, then the Hamiltonian
/// chord routes, the circumference route, the even-set obstruction, and finally
/// exact search. Returns the first conclusive certificate, or one with
/// verdict unknown if the budget ran out.
pub fn certify_sufficient(g: &Graph, budget: &SearchBudget) -> Certificate {
    let n = g.order();
    if g.max_degree() <= 1 {
        return Certificate::npl(
            g,
            labeling_from(n, (0..n).map(|v| (v, v + 1))),
            Reason::ExplicitFormula {
                family: "max-degree-1".into(),
            },
        )
        .expect("no vertex has degree 2");
    }

    // unions of several cycles, and single cycles too long for the obstruction
    let reduce = !g.is_connected() || n > DEFAULT_OBSTRUCTION_CAP;
    if let Some(odd) = neighborhood_odd_cycles(g).filter(|_| reduce) {
        if odd.len() >= 2 {
            return Certificate::not_npl(Reason::OddCycleUnion { odd_cycles: odd });
        }
    }

    if n >= 6 && g.max_degree() >= large_degree_threshold(n) {
        if let Ok(c) = label_large_degree(g) {
            return c;
        }
    }

    let ham = find_hamilton_cycle(g, budget);
    if let SearchOutcome::Found(c) = &ham.outcome {
        if let Some(cert) = hamiltonian_routes(g, c) {
            return cert;
        }
    }

    if n % 4 != 3 && !ham.is_budget_exhausted() {
        if let SearchOutcome::Found(near) = find_cycle_missing_one(g, budget).outcome {
            if let Ok(c) = label_circumference(g, &near.cycle, near.missing) {
                return c;
            }
        }
    }

    if n <= DEFAULT_OBSTRUCTION_CAP {
        if let Ok(Some(c)) = even_set_obstruction(g, DEFAULT_OBSTRUCTION_CAP) {
            return c;
        }
    }

    search_npl(g, budget)
}

fn hamiltonian_routes(g: &Graph, c: &HamiltonCycle) -> Option<Certificate> {
    let n = g.order();
    let dirac = n >= 3 && 2 * g.min_degree() >= n;
    if n % 4 != 2 {
        let cert = label_hamiltonian(g, c).ok()?;
        return Some(if dirac {
            cert.with_reason(Reason::DiracBound {
                cycle: c.vertices().to_vec(),
                chord: None,
            })
        } else {
            cert
        });
    }
    if let Some(ch) = find_chord_4k(g, c) {
        let cert = label_ham_chord_4k(g, c, &ch).ok()?;
        let cycle = match cert.reason() {
            Reason::Chord4k { cycle, .. } => cycle.clone(),
            _ => c.vertices().to_vec(),
        };
        let chord = Some(ch.endpoints());
        return Some(if dirac {
            cert.with_reason(Reason::DiracBound { cycle, chord })
        } else if g.edge_count() > edge_count_bound(n) {
            cert.with_reason(Reason::EdgeCountBound {
                cycle,
                chord: ch.endpoints(),
            })
        } else {
            cert
        });
    }
    let ch = find_odd_chord(g, c)?;
    label_ham_odd_chord(g, c, &ch).ok()
}
