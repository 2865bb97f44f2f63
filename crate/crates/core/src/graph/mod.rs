//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bit row per vertex, so neighbourhoods,
//! degrees and induced subgraphs are a handful of mask operations.

mod distance;
mod family;
pub mod graph6;
mod iso;

pub use distance::{apsp, is_distance_preserving, DistanceMatrix, DistancePreservation, NotPreservedReason};
pub use family::{join, make_family, make_family_with, FamilySpec, Validation};
pub use iso::{are_isomorphic, contains_induced};

use crate::{Error, Result};
use std::fmt;

/// Largest order representable with one `u64` adjacency row per vertex.
pub const MAX_ORDER: usize = 64;

/// Labeled simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::contract("graphs need at least one vertex"));
        }
        if n > MAX_ORDER {
            return Err(Error::Capacity {
                requested: n,
                capacity: MAX_ORDER,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.checked_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency bit rows; rows must be symmetric with an
    /// empty diagonal and no bits at or above `rows.len()`.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        Graph::empty(n)?;
        let high = if n == 64 { 0 } else { !0u64 << n };
        for (i, &r) in rows.iter().enumerate() {
            if r & high != 0 {
                return Err(Error::contract(format!("row {i} has bits beyond order {n}")));
            }
            if r >> i & 1 == 1 {
                return Err(Error::contract(format!("loop at vertex {i}")));
            }
            for j in bits(r) {
                if rows[j] >> i & 1 == 0 {
                    return Err(Error::contract(format!("edge {i}-{j} is not symmetric")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub(crate) fn checked_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::Index {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::contract(format!("loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    /// Adds an edge between two in-range, distinct vertices.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.n && v < self.n && u != v);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bit mask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| (0..v).filter(move |&u| self.has_edge(u, v)).map(move |u| (u, v)))
    }

    /// Sorted (nondecreasing) degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn full_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn is_connected(&self) -> bool {
        let full = self.full_mask();
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full
    }

    pub fn complement(&self) -> Graph {
        let full = self.full_mask();
        let adj = (0..self.n).map(|v| !self.adj[v] & full & !(1 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// Order-preserving induced subgraph `G[S]`; vertex `subset[i]` becomes `i`
    /// after sorting and deduplicating `subset`.
    pub fn induced(&self, subset: &[usize]) -> Result<Graph> {
        let mut s: Vec<usize> = subset.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.is_empty() {
            return Err(Error::contract("induced subgraph needs a nonempty vertex set"));
        }
        if let Some(&v) = s.iter().find(|&&v| v >= self.n) {
            return Err(Error::Index {
                vertex: v,
                order: self.n,
            });
        }
        Ok(self.induced_unchecked(&s))
    }

    /// Induced subgraph on the given vertices in the given order (no checks).
    pub(crate) fn induced_unchecked(&self, s: &[usize]) -> Graph {
        let mut g = Graph {
            n: s.len(),
            adj: vec![0; s.len()],
        };
        for (i, &u) in s.iter().enumerate() {
            for (j, &v) in s.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::contract("permutation length differs from graph order"));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::contract("relabeling is not a permutation"));
            }
            seen |= 1 << p;
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.n)?;
        let edges: Vec<String> = self.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        write!(f, "{})", edges.join(" "))
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bit positions of `mask` in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_construction() {
        assert!(matches!(Graph::empty(65), Err(Error::Capacity { .. })));
        assert!(Graph::empty(0).is_err());
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::Index { vertex: 3, .. })
        ));
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn induced_relabels_in_order() {
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let p4 = p5.induced(&[3, 0, 2, 1]).unwrap();
        assert_eq!(p4, Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap());
        assert!(matches!(p5.induced(&[0, 7]), Err(Error::Index { vertex: 7, .. })));
        assert!(p5.induced(&[]).is_err());
    }

    #[test]
    fn connectivity_and_complement() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert!(g.complement().is_connected());
        assert_eq!(g.complement().edge_count(), 4);
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn edges_follow_column_order() {
        let k3 = Graph::from_edges(3, &[(1, 2), (0, 2), (0, 1)]).unwrap();
        assert_eq!(k3.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
    }
}
