use super::cycle::{alternating_halves, HamiltonCycle};
use super::hamiltonian::{
    label_circumference, label_ham_chord_4k, label_ham_odd_chord, label_hamiltonian, labeling_from,
};
use super::{ConstructError, Labeled};
use crate::certificate::{Certificate, Reason};
use crate::graph::generators::{generalized_petersen, grid, grid_index};
use crate::graph::Graph;
use crate::search::{
    find_chord_4k, find_hamilton_cycle, find_odd_chord, search_npl, SearchBudget, SearchOutcome,
};

/// Neighborhood-prime labeling of `GP(n, k)`.
///
/// * `n = 0 mod 4`, `n >= 8`, `k = n/2`: closed form (these graphs have no
///   Hamilton cycle);
/// * `n = 5 mod 6` with `k = 2` or `k = (n-1)/2`: also non-Hamiltonian,
///   handled by exact search;
/// * `n` even otherwise: Hamilton cycle and alternating halves, since `2n = 0 mod 4`;
/// * `n` odd otherwise: Hamilton cycle and an odd chord, which exists
///   because the graph contains the odd outer cycle.
pub fn label_gp(n: usize, k: usize, budget: &SearchBudget) -> Result<Labeled, ConstructError> {
    let graph = generalized_petersen(n, k)?;
    let certificate = if n.is_multiple_of(4) && n >= 8 && 2 * k == n {
        gp_formula(&graph, n)?
    } else if n % 6 == 5 && (k == 2 || 2 * k + 1 == n) {
        by_search(&graph, budget)?
    } else {
        let found = find_hamilton_cycle(&graph, budget);
        match found.outcome {
            SearchOutcome::Found(c) if n.is_multiple_of(2) => label_hamiltonian(&graph, &c)?,
            SearchOutcome::Found(c) => match find_odd_chord(&graph, &c) {
                Some(ch) => label_ham_odd_chord(&graph, &c, &ch)?,
                None => by_search(&graph, budget)?,
            },
            SearchOutcome::Exhausted => by_search(&graph, budget)?,
            SearchOutcome::BudgetExhausted => {
                return Err(ConstructError::BudgetExhausted { nodes: found.nodes })
            }
        }
    };
    Ok(Labeled { graph, certificate })
}

fn gp_formula(g: &Graph, n: usize) -> Result<Certificate, ConstructError> {
    let modulus = 2 * n;
    let rep = |r: usize| match r % modulus {
        0 => modulus,
        x => x,
    };
    let mut pairs = Vec::with_capacity(modulus);
    for t in 0..n / 2 {
        pairs.push((2 * t, rep(1 + 4 * t)));
        pairs.push((1 + 2 * t, rep(n + 3 + 4 * t)));
        pairs.push((n + 2 * t, rep(n + 2 + 4 * t)));
        pairs.push((n + 1 + 2 * t, rep(4 + 4 * t)));
    }
    Ok(Certificate::npl(
        g,
        labeling_from(modulus, pairs),
        Reason::ExplicitFormula {
            family: "generalized-petersen".into(),
        },
    )?)
}

/// Exact search that must succeed; anything else is reported as an error.
pub(crate) fn by_search(g: &Graph, budget: &SearchBudget) -> Result<Certificate, ConstructError> {
    let cert = search_npl(g, budget);
    match cert.verdict() {
        crate::certificate::Verdict::Npl => Ok(cert),
        crate::certificate::Verdict::NotNpl => Err(ConstructError::ConstructionIncomplete(
            "exact search found no neighborhood-prime labeling".into(),
        )),
        crate::certificate::Verdict::Unknown => Err(ConstructError::BudgetExhausted {
            nodes: match cert.reason() {
                Reason::BudgetExhausted { nodes } => *nodes,
                _ => 0,
            },
        }),
    }
}

/// Hamilton cycle of the `rows x cols` grid for even `rows >= 2` and
/// `cols >= 2`, as `(row, col)` pairs: along row 0, snake through columns
/// `1..cols` of the remaining rows, and back up column 0.
pub(crate) fn boustrophedon(rows: usize, cols: usize) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (0..cols).map(|c| (0, c)).collect();
    for r in 1..rows {
        if r % 2 == 1 {
            out.extend((1..cols).rev().map(|c| (r, c)));
        } else {
            out.extend((1..cols).map(|c| (r, c)));
        }
    }
    out.extend((1..rows).rev().map(|r| (r, 0)));
    out
}

/// Cycle through every vertex of the odd `m x n` grid except `(0, 0)`,
/// starting at `(0, 2)`: the rest of the top row, a column sweep from the
/// right edge back to column 2, then a zigzag up columns 0 and 1.
pub(crate) fn serpentine(m: usize, n: usize) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (2..n).map(|c| (0, c)).collect();
    for (i, c) in (2..n).rev().enumerate() {
        if i % 2 == 0 {
            out.extend((1..m).map(|r| (r, c)));
        } else {
            out.extend((1..m).rev().map(|r| (r, c)));
        }
    }
    out.push((m - 1, 1));
    out.push((m - 1, 0));
    for r in (1..m - 1).rev() {
        if (m - 1 - r) % 2 == 1 {
            out.push((r, 0));
            out.push((r, 1));
        } else {
            out.push((r, 1));
            out.push((r, 0));
        }
    }
    out.push((0, 1));
    out
}

/// Neighborhood-prime labeling of `P_m x P_n` (row-major indices).
pub fn label_grid(m: usize, n: usize) -> Result<Labeled, ConstructError> {
    let graph = grid(&[m, n])?;
    let size = m * n;
    let idx = |(r, c): (usize, usize)| r * n + c;
    let certificate = if m == 1 || n == 1 {
        let f = labeling_from(size, (0..size).zip(alternating_halves(size)));
        Certificate::npl(
            &graph,
            f,
            Reason::ExplicitFormula {
                family: "path".into(),
            },
        )?
    } else if m.is_multiple_of(2) || n.is_multiple_of(2) {
        // put an even side along the rows of the boustrophedon
        let cycle: Vec<usize> = if m.is_multiple_of(2) {
            boustrophedon(m, n).into_iter().map(idx).collect()
        } else {
            boustrophedon(n, m)
                .into_iter()
                .map(|(r, c)| idx((c, r)))
                .collect()
        };
        let c = HamiltonCycle::new(&graph, cycle)?;
        if size.is_multiple_of(4) {
            label_hamiltonian(&graph, &c)?
        } else {
            let ch = find_chord_4k(&graph, &c).ok_or(ConstructError::NoChord)?;
            label_ham_chord_4k(&graph, &c, &ch)?
        }
    } else {
        let cycle: Vec<usize> = serpentine(m, n).into_iter().map(idx).collect();
        if size % 4 == 1 {
            label_circumference(&graph, &cycle, 0)?
        } else {
            let f = labeling_from(
                size,
                cycle
                    .iter()
                    .copied()
                    .zip(alternating_halves(size - 1))
                    .chain(std::iter::once((0, size))),
            );
            Certificate::npl(
                &graph,
                f,
                Reason::CircumferenceNMinus1 { cycle, missing: 0 },
            )?
        }
    };
    Ok(Labeled { graph, certificate })
}

/// Neighborhood-prime labeling of `P_l x P_m x P_n` when `lmn = 0 mod 4`.
///
/// With `a` an even dimension and a snake path through the other two, the
/// grid contains `P_a x P_(bc)`, whose boustrophedon cycle is Hamiltonian.
pub fn label_grid3(
    l: usize,
    m: usize,
    n: usize,
    budget: &SearchBudget,
) -> Result<Labeled, ConstructError> {
    let dims = [l, m, n];
    if let Some(&d) = dims.iter().find(|&&d| d < 2) {
        return Err(ConstructError::TooSmall { n: d, min: 2 });
    }
    let graph = grid(&dims)?;
    let size = l * m * n;
    if !size.is_multiple_of(4) {
        return Err(ConstructError::Residue {
            n: size,
            hint: "three-dimensional grids are handled when the order is 0 mod 4",
        });
    }
    let a = dims
        .iter()
        .position(|d| d % 2 == 0)
        .expect("an even dimension exists");
    let (b, c) = match a {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let snake = |j: usize| {
        let row = j / dims[c];
        let col = if row.is_multiple_of(2) {
            j % dims[c]
        } else {
            dims[c] - 1 - j % dims[c]
        };
        (row, col)
    };
    let cycle: Vec<usize> = boustrophedon(dims[a], dims[b] * dims[c])
        .into_iter()
        .map(|(r, j)| {
            let (x, y) = snake(j);
            let mut coords = [0; 3];
            coords[a] = r;
            coords[b] = x;
            coords[c] = y;
            grid_index(&dims, &coords)
        })
        .collect();
    let cycle = match HamiltonCycle::new(&graph, cycle) {
        Ok(cy) => cy,
        Err(_) => {
            let found = find_hamilton_cycle(&graph, budget);
            let nodes = found.nodes;
            found
                .into_found()
                .ok_or(ConstructError::BudgetExhausted { nodes })?
        }
    };
    let certificate = label_hamiltonian(&graph, &cycle)?;
    Ok(Labeled { graph, certificate })
}
