use super::cycle::{alternating_halves, validate_cycle, Chord, HamiltonCycle};
use super::ConstructError;
use crate::certificate::{Certificate, Reason};
use crate::graph::Graph;
use crate::labeling::Labeling;

/// Builds a labeling from `(vertex, label)` pairs covering every vertex.
pub(crate) fn labeling_from(
    order: usize,
    assigned: impl IntoIterator<Item = (usize, usize)>,
) -> Labeling {
    let mut labels = vec![0; order];
    for (v, l) in assigned {
        labels[v] = l;
    }
    Labeling::new(labels).expect("constructions assign each label once")
}

/// Alternating-halves labels on `C_n` with vertex `i` at position `i + 1`.
pub fn label_cycle_standard(n: usize) -> Result<Labeling, ConstructError> {
    if n < 3 {
        return Err(ConstructError::TooSmall { n, min: 3 });
    }
    Ok(Labeling::new(alternating_halves(n)).expect("alternating halves form a permutation"))
}

fn halves_along(order: usize, cycle: &[usize]) -> Labeling {
    labeling_from(
        order,
        cycle.iter().copied().zip(alternating_halves(cycle.len())),
    )
}

fn checked(g: &Graph, c: &HamiltonCycle) -> Result<(), ConstructError> {
    HamiltonCycle::new(g, c.vertices().to_vec())?;
    Ok(())
}

/// Alternating halves along a Hamilton cycle, for `n` not congruent to 2 mod 4.
pub fn label_hamiltonian(g: &Graph, c: &HamiltonCycle) -> Result<Certificate, ConstructError> {
    checked(g, c)?;
    let n = g.order();
    if n % 4 == 2 {
        return Err(ConstructError::Residue {
            n,
            hint: "orders 2 mod 4 need a chord; use the chord labelers",
        });
    }
    let f = halves_along(n, c.vertices());
    Ok(Certificate::npl(
        g,
        f,
        Reason::HamiltonianEq1 {
            cycle: c.vertices().to_vec(),
        },
    )?)
}

fn chord_checked(
    g: &Graph,
    c: &HamiltonCycle,
    ch: &Chord,
) -> Result<(usize, usize), ConstructError> {
    checked(g, c)?;
    let (a, b) = ch.endpoints();
    if Chord::new(g, c, a, b).as_ref() != Some(ch) {
        return Err(ConstructError::BadChord {
            chord: (a, b),
            reason: "not a chord of this cycle",
        });
    }
    if g.order() % 4 != 2 {
        return Err(ConstructError::Residue {
            n: g.order(),
            hint: "chord labelings are for orders 2 mod 4; use label_hamiltonian",
        });
    }
    Ok((a, b))
}

/// Hamilton cycle plus a chord closing a cycle of length `4k`.
///
/// The cycle is read forward from the smallest rotation that puts one chord
/// endpoint at position `n` and the other at position `4k - 1`; the alternating-halves labeling is
/// then applied, and the odd label at position `4k - 1` repairs the
/// neighborhood of `v_n`.
pub fn label_ham_chord_4k(
    g: &Graph,
    c: &HamiltonCycle,
    ch: &Chord,
) -> Result<Certificate, ConstructError> {
    let (a, b) = chord_checked(g, c, ch)?;
    let n = g.order();
    let pos = c.positions();
    let best = [(a, b), (b, a)]
        .into_iter()
        .filter_map(|(end, other)| {
            let at = (pos[other] + n - pos[end]) % n;
            (at % 4 == 3).then_some(((pos[end] + 1) % n, (at + 1) / 4))
        })
        .min();
    let Some((start, k)) = best else {
        return Err(ConstructError::BadChord {
            chord: (a, b),
            reason: "chord does not close a cycle of length divisible by 4",
        });
    };
    let cycle = c.rotated(start);
    let f = halves_along(n, &cycle);
    Ok(Certificate::npl(
        g,
        f,
        Reason::Chord4k {
            cycle,
            chord: (a, b),
            k,
        },
    )?)
}

/// Hamilton cycle plus a chord `v_1 v_k` closing an odd cycle.
///
/// Labels `1..=n/2` go to the odd positions in order; `n/2+1..=n` go to
/// `v_{k+1}, v_{k+3}, ..., v_n` and then `v_2, v_4, ..., v_{k-1}`.
pub fn label_ham_odd_chord(
    g: &Graph,
    c: &HamiltonCycle,
    ch: &Chord,
) -> Result<Certificate, ConstructError> {
    let (a, b) = chord_checked(g, c, ch)?;
    let n = g.order();
    let pos = c.positions();
    if !(pos[a] + n - pos[b]).is_multiple_of(2) {
        return Err(ConstructError::BadChord {
            chord: (a, b),
            reason: "chord closes even cycles",
        });
    }
    let start = pos[a].min(pos[b]);
    let k = pos[a].max(pos[b]) - start + 1;
    let cycle = c.rotated(start);
    // positions are 1-based below
    let odd = (1..=n).step_by(2);
    let even = (k + 1..=n).step_by(2).chain((2..k).step_by(2));
    let f = labeling_from(
        n,
        odd.chain(even)
            .enumerate()
            .map(|(i, p)| (cycle[p - 1], i + 1)),
    );
    Ok(Certificate::npl(
        g,
        f,
        Reason::OddChord {
            cycle,
            chord: (a, b),
            k,
        },
    )?)
}

/// A cycle through every vertex but `u`, for `n` not congruent to 3 mod 4.
/// The cycle is rotated so a neighbor of `u` takes label 1 under the alternating-halves labeling,
/// and `u` takes `n`.
pub fn label_circumference(
    g: &Graph,
    cycle: &[usize],
    u: usize,
) -> Result<Certificate, ConstructError> {
    let n = g.order();
    validate_cycle(g, cycle)?;
    if cycle.len() + 1 != n || cycle.contains(&u) || u >= n {
        return Err(ConstructError::BadCycle(
            "cycle must cover every vertex except the missing one",
        ));
    }
    if n % 4 == 3 {
        return Err(ConstructError::Residue {
            n,
            hint: "the circumference labeling needs n not congruent to 3 mod 4",
        });
    }
    let m = cycle.len();
    let Some(start) = (0..m).find(|&s| g.has_edge(u, cycle[(s + 1) % m])) else {
        return Err(ConstructError::Isolated(u));
    };
    let cycle: Vec<usize> = (0..m).map(|i| cycle[(start + i) % m]).collect();
    let f = labeling_from(
        n,
        cycle
            .iter()
            .copied()
            .zip(alternating_halves(m))
            .chain(std::iter::once((u, n))),
    );
    Ok(Certificate::npl(
        g,
        f,
        Reason::CircumferenceNMinus1 { cycle, missing: u },
    )?)
}
