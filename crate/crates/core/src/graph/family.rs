use super::{Graph, MAX_ORDER};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A named graph family together with its parameters.
///
/// Canonical labeling used by [`make_family`]:
///
/// * `Kh { n, h }`: clique on `0..h`, hub `h-1`, pendants `h..n`.
/// * `KstBridge { s, t }`: `K_s` on `0..s`, `K_t` on `s..s+t`, bridge `(s-1, s)`.
/// * `KstGlued { s, t }`: `K_s` on `0..s`, `K_t` on `s-1..s+t-1`; cut vertex `s-1`.
/// * `Friendship { k }`: hub `0`, triangles `{0, 2i+1, 2i+2}`.
/// * `CliqueCone { parts }`: apex `0`, then consecutive cliques of the given sizes.
/// * `CompleteMultipartite { parts }`: consecutive independent blocks.
/// * `Path`, `Cycle`: `0-1-…-(n-1)` (closed for the cycle); `Star`: center `0`.
/// * `Join { left, right }`: vertices of `left` first, then `right` shifted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FamilySpec {
    /// `n - h` pendant edges attached to one vertex of `K_h`.
    Kh {
        n: usize,
        h: usize,
    },
    /// `K_s` and `K_t` joined by one edge; `n = s + t`.
    KstBridge {
        s: usize,
        t: usize,
    },
    /// `K_s` and `K_t` sharing one vertex; `n = s + t - 1`.
    KstGlued {
        s: usize,
        t: usize,
    },
    /// `k` triangles sharing a common vertex; `n = 2k + 1`.
    Friendship {
        k: usize,
    },
    Complete {
        n: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Star {
        n: usize,
    },
    CompleteMultipartite {
        parts: Vec<usize>,
    },
    /// `K_1` joined to the disjoint union of cliques `K_{n_1}, …, K_{n_k}`.
    CliqueCone {
        parts: Vec<usize>,
    },
    Join {
        left: Box<FamilySpec>,
        right: Box<FamilySpec>,
    },
}

/// How strictly family parameters are checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Validation {
    /// The parameter ranges under which the family results are stated
    /// (`h >= 3, n >= h+1`; `s, t >= 2`; `k >= 2`).
    #[default]
    Strict,
    /// Permits degenerate members (e.g. `h = 2`, `s = 1`) for exploration.
    Relaxed,
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Kh { .. } => "kh",
            FamilySpec::KstBridge { .. } => "kst-bridge",
            FamilySpec::KstGlued { .. } => "kst-glued",
            FamilySpec::Friendship { .. } => "friendship",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Star { .. } => "star",
            FamilySpec::CompleteMultipartite { .. } => "multipartite",
            FamilySpec::CliqueCone { .. } => "cone",
            FamilySpec::Join { .. } => "join",
        }
    }

    /// Number of vertices of the family member.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Kh { n, .. }
            | FamilySpec::Complete { n }
            | FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Star { n } => *n,
            FamilySpec::KstBridge { s, t } => s + t,
            FamilySpec::KstGlued { s, t } => (s + t).saturating_sub(1),
            FamilySpec::Friendship { k } => 2 * k + 1,
            FamilySpec::CompleteMultipartite { parts } => parts.iter().sum(),
            FamilySpec::CliqueCone { parts } => 1 + parts.iter().sum::<usize>(),
            FamilySpec::Join { left: a, right: b } => a.order() + b.order(),
        }
    }

    pub fn validate(&self, mode: Validation) -> Result<()> {
        let strict = mode == Validation::Strict;
        let fail = |c: &str| Err(Error::validation(self.name(), c));
        match self {
            FamilySpec::Kh { n, h } => {
                if strict {
                    if *h < 3 {
                        return fail("h >= 3 required");
                    }
                    if *n < h + 1 {
                        return fail("n >= h + 1 required");
                    }
                } else if *h < 1 || n < h {
                    return fail("1 <= h <= n required");
                }
            }
            FamilySpec::KstBridge { s, t } | FamilySpec::KstGlued { s, t } => {
                let min = if strict { 2 } else { 1 };
                if *s < min {
                    return fail(&format!("s >= {min} required"));
                }
                if *t < min {
                    return fail(&format!("t >= {min} required"));
                }
            }
            FamilySpec::Friendship { k } => {
                let min = if strict { 2 } else { 1 };
                if *k < min {
                    return fail(&format!("k >= {min} required"));
                }
            }
            FamilySpec::Complete { n } | FamilySpec::Path { n } => {
                if *n < 1 {
                    return fail("n >= 1 required");
                }
            }
            FamilySpec::Cycle { n } => {
                if *n < 3 {
                    return fail("n >= 3 required");
                }
            }
            FamilySpec::Star { n } => {
                if *n < 2 {
                    return fail("n >= 2 required");
                }
            }
            FamilySpec::CompleteMultipartite { parts } => {
                if parts.is_empty() || parts.contains(&0) {
                    return fail("parts must be nonempty and positive");
                }
                if parts.len() < 2 && parts[0] > 1 {
                    return fail("a single part of size > 1 is disconnected");
                }
            }
            FamilySpec::CliqueCone { parts } => {
                if parts.is_empty() || parts.contains(&0) {
                    return fail("parts must be nonempty and positive");
                }
            }
            FamilySpec::Join { left: a, right: b } => {
                a.validate(mode)?;
                b.validate(mode)?;
            }
        }
        let n = self.order();
        if n > MAX_ORDER {
            return Err(Error::Capacity {
                requested: n,
                capacity: MAX_ORDER,
            });
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |p: &[usize]| p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            FamilySpec::Kh { n, h } => write!(f, "Kh(n={n},h={h})"),
            FamilySpec::KstBridge { s, t } => write!(f, "KstBridge(s={s},t={t})"),
            FamilySpec::KstGlued { s, t } => write!(f, "KstGlued(s={s},t={t})"),
            FamilySpec::Friendship { k } => write!(f, "Friendship(k={k})"),
            FamilySpec::Complete { n } => write!(f, "K{n}"),
            FamilySpec::Path { n } => write!(f, "P{n}"),
            FamilySpec::Cycle { n } => write!(f, "C{n}"),
            FamilySpec::Star { n } => write!(f, "S{n}"),
            FamilySpec::CompleteMultipartite { parts } => write!(f, "K({})", list(parts)),
            FamilySpec::CliqueCone { parts } => write!(f, "Cone({})", list(parts)),
            FamilySpec::Join { left: a, right: b } => write!(f, "({a})v({b})"),
        }
    }
}

/// Builds a family member after strict validation.
pub fn make_family(spec: &FamilySpec) -> Result<Graph> {
    make_family_with(spec, Validation::Strict)
}

pub fn make_family_with(spec: &FamilySpec, mode: Validation) -> Result<Graph> {
    spec.validate(mode)?;
    let mut g = Graph::empty(spec.order())?;
    match spec {
        FamilySpec::Kh { n, h } => {
            clique(&mut g, 0..*h);
            for p in *h..*n {
                g.add_edge(h - 1, p);
            }
        }
        FamilySpec::KstBridge { s, t } => {
            clique(&mut g, 0..*s);
            clique(&mut g, *s..s + t);
            g.add_edge(s - 1, *s);
        }
        FamilySpec::KstGlued { s, t } => {
            clique(&mut g, 0..*s);
            clique(&mut g, s - 1..s + t - 1);
        }
        FamilySpec::Friendship { k } => {
            for i in 0..*k {
                let (a, b) = (2 * i + 1, 2 * i + 2);
                g.add_edge(0, a);
                g.add_edge(0, b);
                g.add_edge(a, b);
            }
        }
        FamilySpec::Complete { n } => clique(&mut g, 0..*n),
        FamilySpec::Path { n } => {
            for v in 1..*n {
                g.add_edge(v - 1, v);
            }
        }
        FamilySpec::Cycle { n } => {
            for v in 1..*n {
                g.add_edge(v - 1, v);
            }
            g.add_edge(n - 1, 0);
        }
        FamilySpec::Star { n } => {
            for v in 1..*n {
                g.add_edge(0, v);
            }
        }
        FamilySpec::CompleteMultipartite { parts } => {
            let blocks = blocks(parts, 0);
            for (i, a) in blocks.iter().enumerate() {
                for b in &blocks[i + 1..] {
                    for u in a.clone() {
                        for v in b.clone() {
                            g.add_edge(u, v);
                        }
                    }
                }
            }
        }
        FamilySpec::CliqueCone { parts } => {
            for block in blocks(parts, 1) {
                clique(&mut g, block);
            }
            for v in 1..g.order() {
                g.add_edge(0, v);
            }
        }
        FamilySpec::Join { left: a, right: b } => {
            return join(&make_family_with(a, mode)?, &make_family_with(b, mode)?);
        }
    }
    Ok(g)
}

fn clique(g: &mut Graph, range: std::ops::Range<usize>) {
    for u in range.clone() {
        for v in u + 1..range.end {
            g.add_edge(u, v);
        }
    }
}

fn blocks(parts: &[usize], start: usize) -> Vec<std::ops::Range<usize>> {
    let mut at = start;
    parts
        .iter()
        .map(|&p| {
            let r = at..at + p;
            at += p;
            r
        })
        .collect()
}

/// Complete product `g1 ∇ g2`: disjoint union plus every cross edge.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let (n1, n2) = (g1.order(), g2.order());
    if n1 + n2 > MAX_ORDER {
        return Err(Error::Capacity {
            requested: n1 + n2,
            capacity: MAX_ORDER,
        });
    }
    let mut g = Graph::empty(n1 + n2)?;
    for (u, v) in g1.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in g2.edges() {
        g.add_edge(n1 + u, n1 + v);
    }
    for u in 0..n1 {
        for v in 0..n2 {
            g.add_edge(u, n1 + v);
        }
    }
    Ok(g)
}
