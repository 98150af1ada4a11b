use super::hamiltonian::labeling_from;
use super::ConstructError;
use crate::certificate::{Certificate, Reason};
use crate::graph::Graph;
use crate::numtheory::{prime_pi, sieve_primes};

/// Smallest maximum degree for which [`label_large_degree`] applies:
/// `n - pi(n) + pi(floor(n/2)) - 1`.
pub fn large_degree_threshold(n: usize) -> usize {
    (n + prime_pi(n as u64 / 2)).saturating_sub(prime_pi(n as u64) + 1)
}

/// Labeling for graphs with a vertex of very large degree.
///
/// The first vertex `v` of maximum degree gets 1. Each non-neighbor of `v`
/// that has no labeled neighbor yet gets one neighbor labeled with the next
/// prime in `(n/2, n]`; such a prime is coprime to every other label. Then 2
/// (and 3) go on neighbors of `v` unless at least two of those primes
/// already landed in `N(v)`, and the remaining labels fill the remaining
/// vertices in ascending order.
pub fn label_large_degree(g: &Graph) -> Result<Certificate, ConstructError> {
    let n = g.order();
    if n < 6 {
        return Err(ConstructError::TooSmall { n, min: 6 });
    }
    let needed = large_degree_threshold(n);
    if g.max_degree() < needed {
        return Err(ConstructError::DegreeBound {
            max_degree: g.max_degree(),
            needed,
        });
    }
    let center = (0..n).find(|&v| g.degree(v) == g.max_degree()).unwrap();
    let mut label = vec![0usize; n];
    let mut used = vec![false; n + 1];
    let mut put = |label: &mut Vec<usize>, v: usize, l: usize| {
        label[v] = l;
        used[l] = true;
    };
    put(&mut label, center, 1);

    let mut primes = sieve_primes(n as u64)
        .into_iter()
        .map(|p| p as usize)
        .filter(|&p| 2 * p > n);
    let mut big = vec![false; n];
    for u in (0..n).filter(|&u| u != center && !g.has_edge(u, center)) {
        if g.neighbors(u).iter().any(|&w| big[w]) {
            continue;
        }
        let Some(&w) = g.neighbors(u).iter().find(|&&w| label[w] == 0) else {
            continue;
        };
        let p = primes.next().ok_or(ConstructError::ConstructionIncomplete(
            "ran out of primes above n/2".into(),
        ))?;
        put(&mut label, w, p);
        big[w] = true;
    }

    let primes_near_center = g.neighbors(center).iter().filter(|&&w| big[w]).count();
    let small: &[usize] = match primes_near_center {
        0 => &[2, 3],
        1 => &[2],
        _ => &[],
    };
    for &l in small {
        let w = g
            .neighbors(center)
            .iter()
            .copied()
            .find(|&w| label[w] == 0)
            .ok_or(ConstructError::ConstructionIncomplete(
                "center has too few free neighbors".into(),
            ))?;
        put(&mut label, w, l);
    }

    let mut rest = (1..=n).filter(|&l| !used[l]);
    let assigned: Vec<(usize, usize)> = (0..n)
        .map(|v| {
            (
                v,
                if label[v] == 0 {
                    rest.next().unwrap()
                } else {
                    label[v]
                },
            )
        })
        .collect();
    Ok(Certificate::npl(
        g,
        labeling_from(n, assigned),
        Reason::LargeDegree { center },
    )?)
}
