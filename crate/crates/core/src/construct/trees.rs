use super::families::by_search;
use super::hamiltonian::labeling_from;
use super::{ConstructError, Labeled};
use crate::certificate::{Certificate, Reason};
use crate::graph::generators::{lobster, star, union};
use crate::graph::{Graph, LobsterSpec};
use crate::labeling::{is_prime_labeling, lift_prime_to_npl, Labeling, NeighborhoodGraph};
use crate::numtheory::{coprime_bijection, pillai_select, Interval};
use crate::search::SearchBudget;

/// Largest star that can be labeled from an interval by Pillai's property.
const PILLAI_LEAVES: usize = 15;

/// A prime labeling of a union of stars laid out as by
/// [`generators::union`](crate::graph::generators::union) of
/// [`generators::star`](crate::graph::generators::star)s.
#[derive(Debug, Clone)]
pub struct StarUnionLabeling {
    pub graph: Graph,
    pub labeling: Labeling,
    /// Vertex index of each star's centre.
    pub centers: Vec<usize>,
}

/// Label lists per star, centre first.
fn star_labels(sizes: &[usize]) -> Result<Vec<Vec<usize>>, ConstructError> {
    let big: Vec<usize> = sizes
        .iter()
        .copied()
        .filter(|&s| s > PILLAI_LEAVES)
        .collect();
    if big.len() > 1 {
        return Err(ConstructError::TooManyLargeStars(big));
    }
    let mut out = vec![Vec::new(); sizes.len()];
    let mut next = 1;
    if let Some(i) = sizes.iter().position(|&s| s > PILLAI_LEAVES) {
        out[i] = (1..=sizes[i] + 1).collect();
        next = sizes[i] + 2;
    }
    for (i, &s) in sizes.iter().enumerate() {
        if s > PILLAI_LEAVES {
            continue;
        }
        let iv = Interval::new(next as u64, s as u64 + 1)
            .map_err(|e| ConstructError::ConstructionIncomplete(e.to_string()))?;
        let centre = pillai_select(&iv)
            .expect("intervals of length at most 16 have a Pillai element")
            as usize;
        out[i].push(centre);
        out[i].extend((next..next + s + 1).filter(|&l| l != centre));
        next += s + 1;
    }
    Ok(out)
}

/// Prime labeling of `S_{i_1} u ... u S_{i_k}` when at most one star has
/// more than 15 leaves: that star gets centre 1 and leaves `2, 3, ...`;
/// every other star, in order, takes the next block of consecutive labels
/// with a Pillai element at the centre.
pub fn label_union_of_stars(sizes: &[usize]) -> Result<StarUnionLabeling, ConstructError> {
    if sizes.is_empty() {
        return Err(ConstructError::TooSmall { n: 0, min: 1 });
    }
    let per_star = star_labels(sizes)?;
    let stars: Vec<Graph> = sizes.iter().map(|&s| star(s)).collect::<Result<_, _>>()?;
    let graph = union(&stars)?;
    let mut centers = Vec::with_capacity(sizes.len());
    let mut labels = Vec::with_capacity(graph.order());
    for ls in per_star {
        centers.push(labels.len());
        labels.extend(ls);
    }
    let labeling = Labeling::new(labels)?;
    if let Some(e) = is_prime_labeling(&graph, &labeling)?.failure() {
        return Err(ConstructError::ConstructionIncomplete(format!(
            "star union labeling fails at edge {:?}",
            e.edge
        )));
    }
    Ok(StarUnionLabeling {
        graph,
        labeling,
        centers,
    })
}

/// Interior spine degrees of a reduced lobster whose spine ends are leaves.
fn reduced_interior(spec: &LobsterSpec) -> Result<Vec<usize>, ConstructError> {
    let n = spec.spine_len();
    if !spec.is_reduced() {
        return Err(ConstructError::Lobster("not a reduced lobster".into()));
    }
    if n < 3 || !spec.spine()[0].is_empty() || !spec.spine()[n - 1].is_empty() {
        return Err(ConstructError::Lobster(
            "the spine needs at least one interior vertex and leaf ends".into(),
        ));
    }
    let degrees = spec.spine_degrees()[1..n - 1].to_vec();
    if let Some(&d) = degrees.iter().find(|&&d| d < 3) {
        return Err(ConstructError::Lobster(format!(
            "interior spine degree {d} is below 3"
        )));
    }
    if degrees.iter().filter(|&&d| d > 16).count() > 1 {
        return Err(ConstructError::Lobster(
            "more than one interior spine degree exceeds 16".into(),
        ));
    }
    Ok(degrees)
}

/// Reduced lobster via a neighborhood graph that is a union of stars.
///
/// Spine `s_0 .. s_{n-1}` with leaf ends; interior vertex `s_i` has middles
/// `u_{i,j}` with leaves `w_{i,j}`. Each middle chooses the pair
/// `{s_i, w_{i,j}}` and each interior spine vertex chooses `{u_{i,1},
/// s_{i+1}}`. The result is a star at every interior spine vertex, a single
/// edge at `s_{n-1}`, and isolated vertices; the stars are prime-labeled
/// and the isolated vertices take the leftover labels in ascending order.
pub fn label_reduced_lobster(spec: &LobsterSpec) -> Result<Labeled, ConstructError> {
    reduced_interior(spec)?;
    let graph = lobster(spec)?;
    let layout = spec.layout();
    let n = layout.spine.len();
    let s = &layout.spine;

    let mut chosen = vec![None; graph.order()];
    for i in 1..n - 1 {
        for (m, leaves) in &layout.middles[i] {
            chosen[*m] = Some((s[i], leaves[0]));
        }
        chosen[s[i]] = Some((layout.middles[i][0].0, s[i + 1]));
    }
    let h = NeighborhoodGraph::from_choices(&graph, chosen)
        .map_err(|e| ConstructError::ConstructionIncomplete(e.to_string()))?;

    // star centres in spine order: s_1 .. s_{n-1}, leaves by index
    let stars: Vec<(usize, Vec<usize>)> = (1..n)
        .map(|i| (s[i], h.graph().neighbors(s[i]).to_vec()))
        .collect();
    let sizes: Vec<usize> = stars.iter().map(|(_, l)| l.len()).collect();
    let per_star = star_labels(&sizes)?;
    let mut label = vec![0; graph.order()];
    for ((centre, leaves), ls) in stars.iter().zip(&per_star) {
        label[*centre] = ls[0];
        for (&v, &l) in leaves.iter().zip(&ls[1..]) {
            label[v] = l;
        }
    }
    let first = sizes.iter().map(|s| s + 1).sum::<usize>() + 1;
    for (next, l) in (first..).zip(label.iter_mut().filter(|l| **l == 0)) {
        *l = next;
    }
    let f = Labeling::new(label)?;
    let certificate = lift_prime_to_npl(&graph, &h, &f)?;
    Ok(Labeled { graph, certificate })
}

/// `(lhs, rhs)` of the surplus inequality
/// `sum (d_i - 2) + 2 >= sum (d' - d_i')`, the left sum running over the
/// spine and the middle vertices.
pub fn lobster_surplus_sides(spec: &LobsterSpec) -> (i64, i64) {
    let spine = spec.spine_degrees();
    let middles = spec.middle_degrees();
    let lhs = spine
        .iter()
        .chain(&middles)
        .map(|&d| d as i64 - 2)
        .sum::<i64>()
        + 2;
    let counts = spec.middle_counts();
    let dmax = spec.max_middle_count();
    let rhs = counts.iter().map(|&c| (dmax - c) as i64).sum();
    (lhs, rhs)
}

/// The spine extended at either end, if needed, so both ends are leaves.
/// Returns the spine as vertex indices of the generated lobster.
fn leaf_ended_spine(g: &Graph, spec: &LobsterSpec) -> Vec<usize> {
    let layout = spec.layout();
    let mut spine = layout.spine.clone();
    let extend = |end: usize| -> Vec<usize> {
        if let Some(&p) = layout.pendants[end].first() {
            vec![p]
        } else if let Some((m, leaves)) = layout.middles[end].first() {
            vec![*m, leaves[0]]
        } else {
            vec![]
        }
    };
    let last = spine.len() - 1;
    let tail = extend(last);
    let head = if last == 0 && !tail.is_empty() {
        // a single spine vertex: use a different attachment for the head
        let mut others = g.neighbors(0).iter().copied().filter(|&w| w != tail[0]);
        match others.next() {
            Some(w) if g.degree(w) == 1 => vec![w],
            Some(w) => vec![w, *g.neighbors(w).iter().find(|&&x| x != 0).unwrap()],
            None => vec![],
        }
    } else {
        extend(0)
    };
    let mut out: Vec<usize> = head.into_iter().rev().collect();
    out.append(&mut spine);
    out.extend(tail);
    out
}

/// Lobster labeling from the surplus inequality.
///
/// The spine (extended to leaf ends) is labeled `1..=n` along the path by
/// alternating halves. For each round `r < d'`, a coprime bijection `g_r` from `[n]`
/// onto `n + 1 + rn ..= n + (r + 1)n` is computed; the `r`-th middle vertex
/// of a spine vertex labeled `l` gives one of its leaves `g_r(l)`, and
/// unused values join the leftovers. Leftover labels then fill the rest in
/// ascending order. The result is checked; if the check fails the labeling
/// comes from exact search under `budget`.
pub fn label_lobster_surplus(
    spec: &LobsterSpec,
    budget: &SearchBudget,
) -> Result<Labeled, ConstructError> {
    let graph = lobster(spec)?;
    let spine = leaf_ended_spine(&graph, spec);
    let on_spine = {
        let mut v = vec![false; graph.order()];
        spine.iter().for_each(|&s| v[s] = true);
        v
    };
    let n = spine.len();
    // middles of each spine vertex: non-spine neighbors of degree >= 2
    let middles: Vec<Vec<usize>> = spine
        .iter()
        .map(|&s| {
            graph
                .neighbors(s)
                .iter()
                .copied()
                .filter(|&w| !on_spine[w] && graph.degree(w) >= 2)
                .collect()
        })
        .collect();
    let d_prime = middles.iter().map(Vec::len).max().unwrap_or(0);
    let lhs = spine
        .iter()
        .map(|&s| graph.degree(s) as i64 - 2)
        .chain(
            middles
                .iter()
                .flatten()
                .map(|&m| graph.degree(m) as i64 - 2),
        )
        .sum::<i64>()
        + 2;
    let rhs: i64 = middles.iter().map(|m| (d_prime - m.len()) as i64).sum();
    if lhs < rhs {
        return Err(ConstructError::SurplusInequality { lhs, rhs });
    }

    let total = graph.order();
    let mut label = vec![0usize; total];
    let path_labels = crate::construct::alternating_halves(n);
    for (&s, &l) in spine.iter().zip(&path_labels) {
        label[s] = l;
    }
    let mut used = vec![false; total + 1];
    (1..=n.min(total)).for_each(|l| used[l] = true);
    for r in 0..d_prime {
        let iv = Interval::new((n + 1 + r * n) as u64, n as u64)
            .map_err(|e| ConstructError::ConstructionIncomplete(e.to_string()))?;
        let g_r = coprime_bijection(n as u64, &iv)
            .map_err(|e| ConstructError::ConstructionIncomplete(e.to_string()))?;
        for (i, ms) in middles.iter().enumerate() {
            let Some(&m) = ms.get(r) else { continue };
            let value = g_r[path_labels[i] - 1] as usize;
            let leaf = graph
                .neighbors(m)
                .iter()
                .copied()
                .find(|&w| !on_spine[w] && label[w] == 0)
                .expect("middle vertices carry a leaf");
            if value > total {
                return Err(ConstructError::ConstructionIncomplete(format!(
                    "round {r} needs label {value} beyond the order {total}"
                )));
            }
            label[leaf] = value;
            used[value] = true;
        }
    }
    let mut rest = (1..=total).filter(|&l| !used[l]);
    for l in label.iter_mut().filter(|l| **l == 0) {
        *l = rest.next().expect("labels match vertices");
    }
    let f = Labeling::new(label)?;
    let certificate = match Certificate::npl(
        &graph,
        f,
        Reason::ExplicitFormula {
            family: "lobster-surplus".into(),
        },
    ) {
        Ok(c) => c,
        Err(_) => by_search(&graph, budget)?,
    };
    Ok(Labeled { graph, certificate })
}

/// Adds `count` pendant vertices to each `host`, numbered after the
/// existing vertices in attachment order, and gives them the labels
/// `n + 1, n + 2, ...`.
pub fn extend_with_pendants(
    g: &Graph,
    cert: &Certificate,
    attachments: &[(usize, usize)],
) -> Result<(Graph, Certificate), ConstructError> {
    let f = cert.labeling().ok_or(ConstructError::NotNpl)?;
    Certificate::npl(g, f.clone(), cert.reason().clone())?;
    for &(host, _) in attachments {
        if host >= g.order() {
            return Err(ConstructError::Graph(
                crate::graph::GraphError::VertexOutOfRange {
                    vertex: host,
                    order: g.order(),
                },
            ));
        }
        if g.degree(host) <= 2 {
            return Err(ConstructError::HostDegree {
                vertex: host,
                degree: g.degree(host),
            });
        }
    }
    let n = g.order();
    let added: usize = attachments.iter().map(|&(_, c)| c).sum();
    if added == 0 {
        return Ok((g.clone(), cert.clone()));
    }
    let hosts = attachments
        .iter()
        .flat_map(|&(h, c)| std::iter::repeat_n(h, c));
    let edges: Vec<(usize, usize)> = g
        .edges()
        .chain(hosts.enumerate().map(|(i, h)| (h, n + i)))
        .collect();
    let extended = Graph::from_edges(n + added, edges)?;
    let labels = f.as_slice().iter().copied().chain(n + 1..=n + added);
    let f = labeling_from(n + added, labels.enumerate());
    let reason = Reason::PendantExtension {
        base: Box::new(cert.reason().clone()),
        added,
    };
    Ok((extended.clone(), Certificate::npl(&extended, f, reason)?))
}
