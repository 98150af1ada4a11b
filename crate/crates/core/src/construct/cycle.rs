use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("a cycle needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("vertex {0} is out of range")]
    OutOfRange(usize),
    #[error("vertex {0} appears twice")]
    Repeated(usize),
    #[error("consecutive vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("cycle has {len} vertices but the graph has {order}")]
    NotSpanning { len: usize, order: usize },
}

/// Checks that `vertices` is a simple cycle of `g`, wrap-around included.
pub fn validate_cycle(g: &Graph, vertices: &[usize]) -> Result<(), CycleError> {
    if vertices.len() < 3 {
        return Err(CycleError::TooShort(vertices.len()));
    }
    let mut seen = vec![false; g.order()];
    for &v in vertices {
        if v >= g.order() {
            return Err(CycleError::OutOfRange(v));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(CycleError::Repeated(v));
        }
    }
    for (i, &v) in vertices.iter().enumerate() {
        let w = vertices[(i + 1) % vertices.len()];
        if !g.has_edge(v, w) {
            return Err(CycleError::NotAdjacent(v, w));
        }
    }
    Ok(())
}

/// A spanning cycle `(v_1, ..., v_n)`, stored as vertex indices in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HamiltonCycle {
    vertices: Vec<usize>,
}

impl HamiltonCycle {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self, CycleError> {
        if vertices.len() != g.order() {
            return Err(CycleError::NotSpanning {
                len: vertices.len(),
                order: g.order(),
            });
        }
        validate_cycle(g, &vertices)?;
        Ok(HamiltonCycle { vertices })
    }

    pub(crate) fn new_unchecked(vertices: Vec<usize>) -> Self {
        HamiltonCycle { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// `positions()[v]` is the 0-based position of `v` on the cycle.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.vertices.len()];
        for (i, &v) in self.vertices.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// The cycle read forward starting at 0-based position `start`.
    pub fn rotated(&self, start: usize) -> Vec<usize> {
        let n = self.vertices.len();
        (0..n).map(|i| self.vertices[(start + i) % n]).collect()
    }
}

/// An edge of the host graph joining two non-consecutive cycle vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Chord {
    a: usize,
    b: usize,
    /// Number of cycle edges walking forward from `a` to `b`.
    forward: usize,
    len: usize,
}

impl Chord {
    pub fn new(g: &Graph, c: &HamiltonCycle, a: usize, b: usize) -> Option<Self> {
        if a >= g.order() || b >= g.order() || !g.has_edge(a, b) || c.len() != g.order() {
            return None;
        }
        let pos = c.positions();
        let n = c.len();
        let forward = (pos[b] + n - pos[a]) % n;
        if forward <= 1 || forward >= n - 1 {
            return None;
        }
        Some(Chord {
            a,
            b,
            forward,
            len: n,
        })
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    /// Lengths of the two cycles formed by the chord and either arc.
    pub fn arc_cycle_lengths(&self) -> (usize, usize) {
        (self.forward + 1, self.len - self.forward + 1)
    }
}

/// Labels along a cycle of length `m`: position `i` (1-based) gets
/// `floor(m/2) + (i+1)/2` when `i` is odd and `i/2` when it is even.
pub fn alternating_halves(m: usize) -> Vec<usize> {
    (1..=m)
        .map(|i| {
            if i % 2 == 1 {
                m / 2 + i.div_ceil(2)
            } else {
                i / 2
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn alternating_halves_examples() {
        assert_eq!(alternating_halves(5), vec![3, 1, 4, 2, 5]);
        assert_eq!(alternating_halves(8), vec![5, 1, 6, 2, 7, 3, 8, 4]);
        assert_eq!(alternating_halves(6), vec![4, 1, 5, 2, 6, 3]);
    }

    #[test]
    fn cycle_validation() {
        let k4 = generators::complete(4).unwrap();
        assert!(HamiltonCycle::new(&k4, vec![0, 1, 2, 3]).is_ok());
        assert!(HamiltonCycle::new(&k4, vec![0, 1, 2]).is_err());
        let c5 = generators::cycle(5).unwrap();
        assert_eq!(
            HamiltonCycle::new(&c5, vec![0, 2, 1, 3, 4]).unwrap_err(),
            CycleError::NotAdjacent(0, 2)
        );
        assert_eq!(
            HamiltonCycle::new(&c5, vec![0, 1, 1, 3, 4]).unwrap_err(),
            CycleError::Repeated(1)
        );
    }

    #[test]
    fn chord_arcs() {
        let g = generators::cycle(6).unwrap().with_edge(2, 5).unwrap();
        let c = HamiltonCycle::new(&g, (0..6).collect()).unwrap();
        let ch = Chord::new(&g, &c, 2, 5).unwrap();
        assert_eq!(ch.arc_cycle_lengths(), (4, 4));
        assert!(Chord::new(&g, &c, 0, 1).is_none());
        assert!(Chord::new(&g, &c, 0, 3).is_none());
    }
}
