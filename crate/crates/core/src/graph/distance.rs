use super::{bits, Graph};
use crate::{Error, Result};
use serde::Serialize;
use std::fmt;

/// Symmetric matrix of pairwise shortest-path distances.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// Validates and wraps explicit rows: square, symmetric, zero diagonal,
    /// positive off-diagonal, triangle inequality.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::contract("distance matrix needs at least one row"));
        }
        if let Some(i) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::contract(format!(
                "row {i} has length {}, expected {n}",
                rows[i].len()
            )));
        }
        for i in 0..n {
            if rows[i][i] != 0 {
                return Err(Error::contract(format!("nonzero diagonal at {i}")));
            }
            for j in 0..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::contract(format!("asymmetric entry ({i},{j})")));
                }
                if i != j && rows[i][j] == 0 {
                    return Err(Error::contract(format!("zero off-diagonal entry ({i},{j})")));
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if rows[i][j] > rows[i][k] + rows[k][j] {
                        return Err(Error::contract(format!(
                            "triangle inequality fails at ({i},{j}) via {k}"
                        )));
                    }
                }
            }
        }
        Ok(DistanceMatrix {
            n,
            d: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    /// `Σ_{i<j} d_ij²`, the negated `λ^{n-2}` coefficient of the characteristic polynomial.
    pub fn sum_of_squares(&self) -> u64 {
        let mut s = 0u64;
        for i in 0..self.n {
            for j in i + 1..self.n {
                s += u64::from(self.get(i, j)).pow(2);
            }
        }
        s
    }

    /// Principal submatrix on `indices`, in the given order.
    pub fn principal(&self, indices: &[usize]) -> Result<DistanceMatrix> {
        if let Some(&v) = indices.iter().find(|&&v| v >= self.n) {
            return Err(Error::Index {
                vertex: v,
                order: self.n,
            });
        }
        let rows: Vec<Vec<u32>> = indices
            .iter()
            .map(|&i| indices.iter().map(|&j| self.get(i, j)).collect())
            .collect();
        DistanceMatrix::from_rows(&rows)
    }

    /// Row-major `f64` copy.
    pub fn to_f64(&self) -> Vec<f64> {
        self.d.iter().map(|&x| f64::from(x)).collect()
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl Serialize for DistanceMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

/// Breadth-first distances from `source`; `None` marks unreachable vertices.
pub(crate) fn bfs_levels(g: &Graph, source: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.order()];
    dist[source] = Some(0);
    let mut seen = 1u64 << source;
    let mut frontier = seen;
    let mut level = 0;
    while frontier != 0 {
        level += 1;
        let mut next = 0u64;
        for v in bits(frontier) {
            next |= g.neighbors(v);
        }
        frontier = next & !seen;
        seen |= frontier;
        for v in bits(frontier) {
            dist[v] = Some(level);
        }
    }
    dist
}

/// All-pairs shortest paths by repeated breadth-first search.
pub fn apsp(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.order();
    let mut d = vec![0u32; n * n];
    for s in 0..n {
        for (t, level) in bfs_levels(g, s).into_iter().enumerate() {
            d[s * n + t] = level.ok_or(Error::Disconnected)?;
        }
    }
    Ok(DistanceMatrix { n, d })
}

/// Outcome of comparing induced distances with ambient distances.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistancePreservation {
    pub preserving: bool,
    pub reason: Option<NotPreservedReason>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "code", rename_all = "kebab-case")]
pub enum NotPreservedReason {
    /// The induced subgraph is disconnected, so some distances are infinite.
    InducedDisconnected,
    /// The first pair (in subset order) whose distances differ.
    DistanceMismatch {
        u: usize,
        v: usize,
        induced: u32,
        ambient: u32,
    },
}

/// True iff `D(G[S])` equals the principal submatrix of `D(G)` on `S`.
pub fn is_distance_preserving(g: &Graph, subset: &[usize]) -> Result<DistancePreservation> {
    let ambient = apsp(g)?;
    let h = g.induced(subset)?;
    let mut s: Vec<usize> = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    let inner = match apsp(&h) {
        Ok(d) => d,
        Err(Error::Disconnected) => {
            return Ok(DistancePreservation {
                preserving: false,
                reason: Some(NotPreservedReason::InducedDisconnected),
            })
        }
        Err(e) => return Err(e),
    };
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            let (a, b) = (inner.get(i, j), ambient.get(s[i], s[j]));
            if a != b {
                return Ok(DistancePreservation {
                    preserving: false,
                    reason: Some(NotPreservedReason::DistanceMismatch {
                        u: s[i],
                        v: s[j],
                        induced: a,
                        ambient: b,
                    }),
                });
            }
        }
    }
    Ok(DistancePreservation {
        preserving: true,
        reason: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, FamilySpec};

    fn floyd(g: &Graph) -> Vec<Vec<u32>> {
        let n = g.order();
        let inf = u32::MAX / 4;
        let mut d = vec![vec![inf; n]; n];
        for i in 0..n {
            d[i][i] = 0;
            for j in 0..n {
                if g.has_edge(i, j) {
                    d[i][j] = 1;
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
                }
            }
        }
        d
    }

    #[test]
    fn path_distances() {
        let p4 = make_family(&FamilySpec::Path { n: 4 }).unwrap();
        let d = apsp(&p4).unwrap();
        assert_eq!(
            d.rows(),
            vec![vec![0, 1, 2, 3], vec![1, 0, 1, 2], vec![2, 1, 0, 1], vec![3, 2, 1, 0]]
        );
    }

    #[test]
    fn kh_distances_match_floyd() {
        let g = make_family(&FamilySpec::Kh { n: 4, h: 3 }).unwrap();
        let expected = vec![vec![0, 1, 1, 2], vec![1, 0, 1, 2], vec![1, 1, 0, 1], vec![2, 2, 1, 0]];
        assert_eq!(floyd(&g), expected);
        assert_eq!(apsp(&g).unwrap().rows(), expected);
    }

    #[test]
    fn family_diameters() {
        for (spec, diam) in [
            (FamilySpec::Kh { n: 7, h: 4 }, 2),
            (FamilySpec::KstGlued { s: 3, t: 5 }, 2),
            (FamilySpec::Friendship { k: 4 }, 2),
            (FamilySpec::KstBridge { s: 2, t: 5 }, 3),
        ] {
            let d = apsp(&make_family(&spec).unwrap()).unwrap();
            assert_eq!(d.diameter(), diam, "{spec}");
            assert_eq!(d.rows(), floyd(&make_family(&spec).unwrap()));
        }
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(apsp(&g), Err(Error::Disconnected));
    }

    #[test]
    fn distance_preservation() {
        let p5 = make_family(&FamilySpec::Path { n: 5 }).unwrap();
        assert!(is_distance_preserving(&p5, &[0, 1, 2, 3]).unwrap().preserving);
        let c5 = make_family(&FamilySpec::Cycle { n: 5 }).unwrap();
        let r = is_distance_preserving(&c5, &[0, 1, 2, 3]).unwrap();
        assert!(!r.preserving);
        assert_eq!(
            r.reason,
            Some(NotPreservedReason::DistanceMismatch {
                u: 0,
                v: 3,
                induced: 3,
                ambient: 2
            })
        );
        assert!(is_distance_preserving(&c5, &[0, 1, 2, 3, 4]).unwrap().preserving);
        let r = is_distance_preserving(&p5, &[0, 4]).unwrap();
        assert_eq!(r.reason, Some(NotPreservedReason::InducedDisconnected));
    }

    #[test]
    fn explicit_rows_are_validated() {
        assert!(DistanceMatrix::from_rows(&[vec![0, 1], vec![2, 0]]).is_err());
        assert!(DistanceMatrix::from_rows(&[vec![0, 0], vec![0, 0]]).is_err());
        assert!(DistanceMatrix::from_rows(&[vec![0, 1, 5], vec![1, 0, 1], vec![5, 1, 0]]).is_err());
        let d = DistanceMatrix::from_rows(&[vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]).unwrap();
        assert_eq!(d.sum_of_squares(), 6);
        assert_eq!(d.principal(&[2, 0]).unwrap().rows(), vec![vec![0, 2], vec![2, 0]]);
    }
}
