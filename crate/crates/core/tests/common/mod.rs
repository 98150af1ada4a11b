//! Brute-force references shared by the integration tests. Nothing here
//! calls into the search or construction code under test.
#![allow(dead_code)]

use nplab::Graph;

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Calls `visit` with every permutation of `0..n` until it returns true.
pub fn any_permutation(n: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    // Heap's algorithm, iterative.
    let mut p: Vec<usize> = (0..n).collect();
    if visit(&p) {
        return true;
    }
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            if visit(&p) {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

/// `labels[v]` is in `1..=n`; true when every vertex of degree at least 2
/// sees neighbor labels with gcd 1.
pub fn npl_holds(g: &Graph, labels: &[usize]) -> bool {
    (0..g.order()).all(|v| {
        let ns = g.neighbors(v);
        ns.len() < 2 || ns.iter().fold(0, |acc, &u| gcd(acc, labels[u])) == 1
    })
}

pub fn prime_holds(g: &Graph, labels: &[usize]) -> bool {
    g.edges().all(|(u, v)| gcd(labels[u], labels[v]) == 1)
}

/// Exhaustive check over all `n!` labelings.
pub fn naive_is_npl(g: &Graph) -> bool {
    let n = g.order();
    any_permutation(n, |p| {
        let labels: Vec<usize> = p.iter().map(|&x| x + 1).collect();
        npl_holds(g, &labels)
    })
}

pub fn naive_is_prime(g: &Graph) -> bool {
    let n = g.order();
    any_permutation(n, |p| {
        let labels: Vec<usize> = p.iter().map(|&x| x + 1).collect();
        prime_holds(g, &labels)
    })
}

/// Tries every ordering of the vertices other than 0.
pub fn naive_is_hamiltonian(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 {
        return false;
    }
    any_permutation(n - 1, |p| {
        let walk: Vec<usize> = std::iter::once(0).chain(p.iter().map(|&x| x + 1)).collect();
        (0..n).all(|i| g.has_edge(walk[i], walk[(i + 1) % n]))
    })
}

/// True when `cycle` visits every vertex once along edges of `g`.
pub fn is_hamilton_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = g.order();
    let mut seen = vec![false; n];
    cycle.len() == n
        && cycle
            .iter()
            .all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
        && (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}

/// First `s >= 1` such that no member of `s..s+len` is coprime to all the
/// others, scanning up to `limit`.
pub fn first_pillai_failure(len: usize, limit: usize) -> Option<usize> {
    (1..=limit).find(|&s| {
        let run: Vec<usize> = (s..s + len).collect();
        !run.iter()
            .any(|&x| run.iter().all(|&y| y == x || gcd(x, y) == 1))
    })
}

/// Sorted component sizes when `g` is 2-regular.
pub fn cycle_type(g: &Graph) -> Option<Vec<usize>> {
    if g.order() == 0 || !g.degrees().all(|d| d == 2) {
        return None;
    }
    let mut sizes: Vec<usize> = g.components().iter().map(Vec::len).collect();
    sizes.sort_unstable();
    Some(sizes)
}

/// Partitions of `n` into parts of size at least 3, parts ascending.
pub fn cycle_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, min: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(acc.clone());
            return;
        }
        for part in min..=rest {
            acc.push(part);
            go(rest - part, part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 3, &mut Vec::new(), &mut out);
    out
}

/// The union-of-cycles condition: some cycle of length 2 mod 4, or at
/// least two odd cycles.
pub fn union_predicted_not_npl(parts: &[usize]) -> bool {
    parts.iter().any(|&p| p % 4 == 2) || parts.iter().filter(|&&p| p % 2 == 1).count() >= 2
}
