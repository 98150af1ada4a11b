//! Constructors for the graph families used throughout the crate.
//!
//! Index layouts are part of the contract, since labelings are given per
//! vertex index:
//!
//! * cycle / path: `0, 1, ..., n-1` in traversal order;
//! * star: centre `0`, leaves `1..=leaves`;
//! * wheel: hub `0`, rim `1..=rim` in cyclic order;
//! * generalized Petersen `GP(n, k)`: outer `u_i = i`, inner `v_i = n + i`;
//! * grid: row-major, the last coordinate varies fastest;
//! * union: parts placed on consecutive index ranges in the given order;
//! * lobster: see [`LobsterSpec::layout`].

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

fn invalid(family: &'static str, reason: impl Into<String>) -> GraphError {
    GraphError::InvalidParameter {
        family,
        reason: reason.into(),
    }
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid("cycle", format!("need n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(invalid("path", "need n >= 1"));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn star(leaves: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

pub fn wheel(rim: usize) -> Result<Graph, GraphError> {
    if rim < 3 {
        return Err(invalid(
            "wheel",
            format!("need a rim of at least 3, got {rim}"),
        ));
    }
    let spokes = (1..=rim).map(|i| (0, i));
    let ring = (0..rim).map(|i| (1 + i, 1 + (i + 1) % rim));
    Graph::from_edges(rim + 1, spokes.chain(ring))
}

/// Disjoint union, relabelling each part onto the next free index range.
pub fn union(parts: &[Graph]) -> Result<Graph, GraphError> {
    if parts.is_empty() {
        return Err(invalid("union", "no parts"));
    }
    let mut offset = 0;
    let mut edges = Vec::new();
    for g in parts {
        edges.extend(g.edges().map(|(u, v)| (u + offset, v + offset)));
        offset += g.order();
    }
    Graph::from_edges(offset, edges)
}

/// `GP(n, k)` for `n >= 3` and `1 <= k < n/2`, or `k = n/2` when `n` is
/// even (then each inner vertex has a single inner neighbour).
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid(
            "generalized Petersen",
            format!("need n >= 3, got {n}"),
        ));
    }
    if k == 0 || 2 * k > n {
        return Err(invalid(
            "generalized Petersen",
            format!("k = {k} outside 1..=n/2 for n = {n}"),
        ));
    }
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    Graph::from_edges(2 * n, edges)
}

/// Cartesian product of paths with the given side lengths.
pub fn grid(dims: &[usize]) -> Result<Graph, GraphError> {
    if dims.is_empty() {
        return Err(invalid("grid", "no dimensions"));
    }
    if dims.contains(&0) {
        return Err(invalid("grid", "dimensions must be at least 1"));
    }
    let order: usize = dims.iter().product();
    let mut strides = vec![1; dims.len()];
    for d in (0..dims.len() - 1).rev() {
        strides[d] = strides[d + 1] * dims[d + 1];
    }
    let mut edges = Vec::new();
    for v in 0..order {
        for (d, &stride) in strides.iter().enumerate() {
            if (v / stride) % dims[d] + 1 < dims[d] {
                edges.push((v, v + stride));
            }
        }
    }
    Graph::from_edges(order, edges)
}

/// Row-major index of a grid coordinate.
pub fn grid_index(dims: &[usize], coords: &[usize]) -> usize {
    dims.iter().zip(coords).fold(0, |acc, (&d, &c)| acc * d + c)
}

/// Something hanging off a spine vertex of a lobster.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Attachment {
    /// A leaf adjacent to the spine vertex.
    Pendant,
    /// A vertex at distance one from the spine carrying `leaves >= 1` leaves.
    Middle { leaves: usize },
}

/// A lobster described by its spine and the attachments of each spine
/// vertex, in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LobsterSpec {
    spine: Vec<Vec<Attachment>>,
}

/// Vertex indices assigned to a [`LobsterSpec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LobsterLayout {
    /// Spine vertices in path order.
    pub spine: Vec<usize>,
    /// Per spine vertex: its pendant leaves.
    pub pendants: Vec<Vec<usize>>,
    /// Per spine vertex: `(middle, leaves of that middle)` in spec order.
    pub middles: Vec<Vec<(usize, Vec<usize>)>>,
    pub order: usize,
}

impl LobsterSpec {
    pub fn new(spine: Vec<Vec<Attachment>>) -> Result<Self, GraphError> {
        if spine.is_empty() {
            return Err(invalid("lobster", "empty spine"));
        }
        if spine
            .iter()
            .flatten()
            .any(|a| matches!(a, Attachment::Middle { leaves: 0 }))
        {
            return Err(invalid(
                "lobster",
                "a middle vertex without leaves is a pendant",
            ));
        }
        Ok(LobsterSpec { spine })
    }

    /// Reduced lobster with the given interior spine degrees: each interior
    /// spine vertex of degree `d` carries `d - 2` middle vertices with one
    /// leaf each, and the two spine ends are leaves.
    pub fn reduced(interior_degrees: &[usize]) -> Result<Self, GraphError> {
        if let Some(&d) = interior_degrees.iter().find(|&&d| d < 2) {
            return Err(invalid(
                "lobster",
                format!("interior spine degree {d} is below 2"),
            ));
        }
        let mut spine = vec![Vec::new()];
        for &d in interior_degrees {
            spine.push(vec![Attachment::Middle { leaves: 1 }; d - 2]);
        }
        spine.push(Vec::new());
        LobsterSpec::new(spine)
    }

    /// Caterpillar with the given number of pendants on each spine vertex.
    pub fn caterpillar(pendants: &[usize]) -> Result<Self, GraphError> {
        LobsterSpec::new(
            pendants
                .iter()
                .map(|&p| vec![Attachment::Pendant; p])
                .collect(),
        )
    }

    pub fn spine(&self) -> &[Vec<Attachment>] {
        &self.spine
    }

    pub fn spine_len(&self) -> usize {
        self.spine.len()
    }

    /// Degrees of the spine vertices in the generated tree.
    pub fn spine_degrees(&self) -> Vec<usize> {
        let n = self.spine.len();
        (0..n)
            .map(|i| self.spine[i].len() + usize::from(i > 0) + usize::from(i + 1 < n))
            .collect()
    }

    /// Number of middle (non-pendant) neighbours of each spine vertex.
    pub fn middle_counts(&self) -> Vec<usize> {
        self.spine
            .iter()
            .map(|a| {
                a.iter()
                    .filter(|x| matches!(x, Attachment::Middle { .. }))
                    .count()
            })
            .collect()
    }

    /// Largest entry of [`middle_counts`](Self::middle_counts).
    pub fn max_middle_count(&self) -> usize {
        self.middle_counts().into_iter().max().unwrap_or(0)
    }

    /// Degrees of the middle vertices, spine order then attachment order.
    pub fn middle_degrees(&self) -> Vec<usize> {
        self.spine
            .iter()
            .flatten()
            .filter_map(|a| match a {
                Attachment::Middle { leaves } => Some(leaves + 1),
                Attachment::Pendant => None,
            })
            .collect()
    }

    /// No pendants on the spine and every middle vertex has degree 2.
    pub fn is_reduced(&self) -> bool {
        self.spine
            .iter()
            .flatten()
            .all(|a| *a == Attachment::Middle { leaves: 1 })
    }

    pub fn is_caterpillar(&self) -> bool {
        self.spine
            .iter()
            .flatten()
            .all(|a| *a == Attachment::Pendant)
    }

    pub fn vertex_count(&self) -> usize {
        self.layout().order
    }

    /// Spine vertices take `0..spine_len`; then, for each spine vertex in
    /// order and each of its attachments in order, a pendant takes the next
    /// index and a middle vertex takes the next index followed by its leaves.
    pub fn layout(&self) -> LobsterLayout {
        let n = self.spine.len();
        let mut next = n;
        let mut pendants = vec![Vec::new(); n];
        let mut middles = vec![Vec::new(); n];
        for (i, attachments) in self.spine.iter().enumerate() {
            for a in attachments {
                match *a {
                    Attachment::Pendant => {
                        pendants[i].push(next);
                        next += 1;
                    }
                    Attachment::Middle { leaves } => {
                        let m = next;
                        let ls = (m + 1..m + 1 + leaves).collect();
                        middles[i].push((m, ls));
                        next += 1 + leaves;
                    }
                }
            }
        }
        LobsterLayout {
            spine: (0..n).collect(),
            pendants,
            middles,
            order: next,
        }
    }
}

pub fn lobster(spec: &LobsterSpec) -> Result<Graph, GraphError> {
    let layout = spec.layout();
    let mut edges: Vec<(usize, usize)> = layout.spine.windows(2).map(|w| (w[0], w[1])).collect();
    for (i, &s) in layout.spine.iter().enumerate() {
        edges.extend(layout.pendants[i].iter().map(|&p| (s, p)));
        for (m, leaves) in &layout.middles[i] {
            edges.push((s, *m));
            edges.extend(leaves.iter().map(|&l| (*m, l)));
        }
    }
    Graph::from_edges(layout.order, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_families() {
        let c6 = cycle(6).unwrap();
        assert_eq!((c6.order(), c6.edge_count()), (6, 6));
        assert!(c6.is_regular(2));
        let u = union(&[cycle(3).unwrap(), cycle(3).unwrap()]).unwrap();
        assert_eq!((u.order(), u.edge_count(), u.components().len()), (6, 6, 2));
        let s = star(15).unwrap();
        assert_eq!((s.order(), s.degree(0)), (16, 15));
        assert_eq!(star(0).unwrap().order(), 1);
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert_eq!(path(1).unwrap().edge_count(), 0);
        let w = wheel(5).unwrap();
        assert_eq!((w.order(), w.edge_count(), w.degree(0)), (6, 10, 5));
    }

    #[test]
    fn petersen_family() {
        let g = generalized_petersen(12, 3).unwrap();
        assert_eq!((g.order(), g.edge_count()), (24, 36));
        assert!(g.is_regular(3));
        let g = generalized_petersen(8, 4).unwrap();
        assert_eq!((g.order(), g.edge_count()), (16, 20));
        assert!((0..8).all(|i| g.degree(i) == 3 && g.degree(8 + i) == 2));
        let p = generalized_petersen(5, 2).unwrap();
        assert_eq!((p.order(), p.edge_count()), (10, 15));
        assert!(generalized_petersen(7, 4).is_err());
        assert!(generalized_petersen(7, 0).is_err());
        assert!(generalized_petersen(2, 1).is_err());
    }

    #[test]
    fn gp_is_cubic_below_half() {
        for n in 3..=50usize {
            for k in 1..n.div_ceil(2) {
                if 2 * k < n {
                    assert!(
                        generalized_petersen(n, k).unwrap().is_regular(3),
                        "GP({n},{k})"
                    );
                }
            }
        }
    }

    #[test]
    fn grids() {
        let g = grid(&[3, 6]).unwrap();
        // brute-force edge enumeration over coordinate pairs
        let mut expected = 0;
        for a in 0..18usize {
            for b in a + 1..18 {
                let (ra, ca, rb, cb) = (a / 6, a % 6, b / 6, b % 6);
                if ra.abs_diff(rb) + ca.abs_diff(cb) == 1 {
                    expected += 1;
                }
            }
        }
        assert_eq!((g.order(), g.edge_count()), (18, expected));
        assert_eq!(expected, 27);
        assert_eq!(
            grid(&[2, 2]).unwrap(),
            cycle(4).unwrap().induced_subgraph(&[0, 1, 3, 2]).unwrap()
        );
        assert_eq!(grid(&[4, 5]).unwrap().order(), 20);
        assert_eq!(grid(&[2, 2, 2]).unwrap().edge_count(), 12);
        assert_eq!(grid_index(&[3, 6], &[2, 1]), 13);
        assert!(grid(&[]).is_err());
    }

    #[test]
    fn grid_degree_profile() {
        for m in 2..8 {
            for n in 2..8 {
                let g = grid(&[m, n]).unwrap();
                assert!(g.degrees().all(|d| (1..=4).contains(&d)));
                assert_eq!(g.degrees().filter(|&d| d == 2).count(), 4, "{m}x{n}");
            }
        }
    }

    #[test]
    fn lobsters() {
        let p4 = lobster(&LobsterSpec::new(vec![vec![]; 4]).unwrap()).unwrap();
        assert_eq!(p4, path(4).unwrap());

        let spec = LobsterSpec::reduced(&[17, 9, 6, 5]).unwrap();
        let g = lobster(&spec).unwrap();
        assert_eq!(g.order(), 64);
        assert_eq!(g.edge_count(), 63);
        assert!(g.is_connected());
        assert_eq!(spec.spine_degrees(), vec![1, 17, 9, 6, 5, 1]);
        assert_eq!(spec.middle_counts(), vec![0, 15, 7, 4, 3, 0]);
        assert!(spec.is_reduced());
        let layout = spec.layout();
        for (i, &s) in layout.spine.iter().enumerate() {
            assert_eq!(g.degree(s), spec.spine_degrees()[i]);
        }

        let cat = LobsterSpec::caterpillar(&[1, 3, 0, 2]).unwrap();
        let g = lobster(&cat).unwrap();
        assert_eq!(g.order(), 10);
        assert!(cat.is_caterpillar());
        // every non-spine vertex is adjacent to the spine
        assert!((4..10).all(|v| g.neighbors(v).iter().any(|&w| w < 4)));

        assert!(LobsterSpec::new(vec![]).is_err());
        assert!(LobsterSpec::new(vec![vec![Attachment::Middle { leaves: 0 }]]).is_err());
    }
}
