//! Exhaustive cospectral-mate search and the exact-polynomial census.

use super::enumerate::Enumeration;
use crate::graph::{apsp, are_isomorphic, graph6, make_family, FamilySpec, Graph, Validation};
use crate::{dist_charpoly, Error, IntPolynomial, Result};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashMap;

const STREAM_CHUNK: usize = 4096;

/// Where candidates come from.
#[derive(Debug, Clone, Copy)]
pub enum Source<'a> {
    /// Every labeled connected graph of this order.
    BuiltIn { n: usize },
    /// An ingested stream; `label` names it in reports.
    Stream { label: &'a str, graphs: &'a [Graph] },
}

impl Source<'_> {
    fn fold<A, I, F, M>(&self, parallel: bool, init: I, fold: F, merge: M) -> Result<A>
    where
        A: Send,
        I: Fn() -> A + Sync,
        F: Fn(A, Graph) -> A + Sync,
        M: Fn(A, A) -> A,
    {
        match *self {
            Source::BuiltIn { n } => Ok(Enumeration::new(n)?.fold(parallel, init, fold, merge)),
            Source::Stream { graphs, .. } => {
                let run = |chunk: &[Graph]| chunk.iter().cloned().fold(init(), &fold);
                let parts: Vec<A> = if parallel {
                    graphs.par_chunks(STREAM_CHUNK).map(run).collect()
                } else {
                    graphs.chunks(STREAM_CHUNK).map(run).collect()
                };
                Ok(parts.into_iter().reduce(merge).unwrap_or_else(init))
            }
        }
    }

    /// The common order of the candidates; `None` for an empty stream.
    fn order(&self) -> Result<Option<usize>> {
        match *self {
            Source::BuiltIn { n } => Ok(Some(n)),
            Source::Stream { graphs, .. } => {
                let Some(first) = graphs.first() else { return Ok(None) };
                let n = first.order();
                if let Some(g) = graphs.iter().find(|g| g.order() != n) {
                    return Err(Error::contract(format!(
                        "mixed orders in stream: {n} and {}",
                        g.order()
                    )));
                }
                Ok(Some(n))
            }
        }
    }

    fn describe(&self, scanned: usize) -> SearchSpace {
        match *self {
            Source::BuiltIn { n } => SearchSpace::BuiltIn {
                order: n,
                candidates: scanned,
            },
            Source::Stream { label, .. } => SearchSpace::Graph6 {
                source: label.to_string(),
                candidates: scanned,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SearchSpace {
    BuiltIn { order: usize, candidates: usize },
    Graph6 { source: String, candidates: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// No mate, and the target's own class was seen.
    DsAtThisScale,
    /// At least one non-isomorphic mate.
    Refuted,
    /// No mate, but the search space never produced the target itself.
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct DsReport {
    pub target: FamilySpec,
    pub search_space: SearchSpace,
    pub polynomial: IntPolynomial,
    /// Candidates with exactly the target polynomial, isomorphic copies included.
    pub polynomial_matches: usize,
    /// Labeled copies of the target among the candidates.
    pub isomorphic_matches: usize,
    /// One graph6 string per isomorphism class of non-isomorphic mates.
    pub mates_found: Vec<String>,
    /// For friendship targets: every polynomial match has diameter 2 and `3k` edges.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub friendship_constraint: Option<bool>,
    pub verdict: Verdict,
}

struct Target {
    spec: FamilySpec,
    graph: Graph,
    poly: IntPolynomial,
    sum_sq: u64,
}

#[derive(Clone, Default)]
struct TargetAcc {
    poly_matches: usize,
    iso_matches: usize,
    mates: Vec<Graph>,
    friendship_ok: bool,
}

fn merge_acc(mut a: (usize, Vec<TargetAcc>), b: (usize, Vec<TargetAcc>)) -> (usize, Vec<TargetAcc>) {
    a.0 += b.0;
    for (x, y) in a.1.iter_mut().zip(b.1) {
        x.poly_matches += y.poly_matches;
        x.iso_matches += y.iso_matches;
        x.mates.extend(y.mates);
        x.friendship_ok &= y.friendship_ok;
    }
    a
}

/// Groups graphs into isomorphism classes and returns the least graph6
/// string of each class, sorted.
fn class_representatives(graphs: Vec<Graph>) -> Vec<String> {
    let mut tagged: Vec<(String, Graph)> = graphs.into_iter().map(|g| (graph6::encode(&g), g)).collect();
    tagged.sort_by(|a, b| a.0.cmp(&b.0));
    let mut reps: Vec<(String, Graph)> = Vec::new();
    for (s, g) in tagged {
        if !reps.iter().any(|(_, r)| are_isomorphic(r, &g)) {
            reps.push((s, g));
        }
    }
    reps.into_iter().map(|(s, _)| s).collect()
}

/// Mate search for several targets of one order in a single pass. Candidates
/// are screened by `Σ d_ij²` (minus the `λ^{n-2}` coefficient) before the
/// full polynomial comparison.
pub fn ds_check_batch(targets: &[FamilySpec], source: Source<'_>, parallel: bool) -> Result<Vec<DsReport>> {
    let order = source.order()?;
    let mut ts = Vec::with_capacity(targets.len());
    for spec in targets {
        spec.validate(Validation::Strict)?;
        let graph = make_family(spec)?;
        if let Some(n) = order {
            if graph.order() != n {
                return Err(Error::contract(format!(
                    "target {spec} has order {} but the search space has order {n}",
                    graph.order()
                )));
            }
        }
        let d = apsp(&graph)?;
        ts.push(Target {
            spec: spec.clone(),
            poly: dist_charpoly(&d),
            sum_sq: d.sum_of_squares(),
            graph,
        });
    }
    let init = || {
        (
            0usize,
            vec![
                TargetAcc {
                    friendship_ok: true,
                    ..Default::default()
                };
                ts.len()
            ],
        )
    };
    let (scanned, accs) = source.fold(
        parallel,
        init,
        |(count, mut acc), g| {
            let Ok(d) = apsp(&g) else { return (count, acc) };
            let s = d.sum_of_squares();
            if !ts.iter().any(|t| t.sum_sq == s) {
                return (count + 1, acc);
            }
            let p = dist_charpoly(&d);
            for (t, a) in ts.iter().zip(acc.iter_mut()) {
                if t.sum_sq != s || t.poly != p {
                    continue;
                }
                a.poly_matches += 1;
                if let FamilySpec::Friendship { k } = t.spec {
                    a.friendship_ok &= d.diameter() == 2 && g.edge_count() == 3 * k;
                }
                if are_isomorphic(&t.graph, &g) {
                    a.iso_matches += 1;
                } else {
                    a.mates.push(g.clone());
                }
            }
            (count + 1, acc)
        },
        merge_acc,
    )?;
    Ok(ts
        .into_iter()
        .zip(accs)
        .map(|(t, a)| {
            let mates_found = class_representatives(a.mates);
            let verdict = if !mates_found.is_empty() {
                Verdict::Refuted
            } else if a.iso_matches > 0 {
                Verdict::DsAtThisScale
            } else {
                Verdict::Inconclusive
            };
            DsReport {
                friendship_constraint: matches!(t.spec, FamilySpec::Friendship { .. }).then_some(a.friendship_ok),
                target: t.spec,
                search_space: source.describe(scanned),
                polynomial: t.poly,
                polynomial_matches: a.poly_matches,
                isomorphic_matches: a.iso_matches,
                mates_found,
                verdict,
            }
        })
        .collect())
}

pub fn ds_check(target: &FamilySpec, source: Source<'_>) -> Result<DsReport> {
    Ok(ds_check_batch(std::slice::from_ref(target), source, true)?.remove(0))
}

/// Every strict member of the four families with order `n`.
pub fn family_members(n: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for h in 3..n {
        out.push(FamilySpec::Kh { n, h });
    }
    for s in 2..=n.saturating_sub(2) {
        out.push(FamilySpec::KstBridge { s, t: n - s });
    }
    for s in 2..n {
        out.push(FamilySpec::KstGlued { s, t: n + 1 - s });
    }
    if n >= 5 && n % 2 == 1 {
        out.push(FamilySpec::Friendship { k: (n - 1) / 2 });
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct CospectralClass {
    pub polynomial: IntPolynomial,
    /// Least graph6 string of each isomorphism class, sorted.
    pub members: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Census {
    pub order: Option<usize>,
    pub graphs_scanned: usize,
    pub polynomial_classes: usize,
    pub isomorphism_classes: usize,
    pub cospectral_classes: Vec<CospectralClass>,
}

impl Census {
    /// All ordered pairs of distinct members within a cospectral class.
    pub fn ordered_pairs(&self) -> Vec<(Graph, Graph)> {
        let mut out = Vec::new();
        for c in &self.cospectral_classes {
            let gs: Vec<Graph> = c
                .members
                .iter()
                .map(|s| graph6::decode(s).expect("census members are valid graph6"))
                .collect();
            for (i, a) in gs.iter().enumerate() {
                for (j, b) in gs.iter().enumerate() {
                    if i != j {
                        out.push((a.clone(), b.clone()));
                    }
                }
            }
        }
        out
    }
}

type Buckets = HashMap<IntPolynomial, Vec<(String, Graph)>>;

fn insert_rep(map: &mut Buckets, p: IntPolynomial, s: String, g: Graph) {
    let reps = map.entry(p).or_default();
    match reps.iter_mut().find(|(_, r)| are_isomorphic(r, &g)) {
        Some(slot) => {
            if s < slot.0 {
                *slot = (s, g);
            }
        }
        None => reps.push((s, g)),
    }
}

/// Groups candidates by exact polynomial, then by isomorphism, keeping the
/// least graph6 string per class so the result does not depend on input order.
pub fn cospectral_census(source: Source<'_>, parallel: bool) -> Result<Census> {
    let order = source.order()?;
    let (scanned, buckets) = source.fold(
        parallel,
        || (0usize, Buckets::new()),
        |(count, mut map), g| {
            if let Ok(d) = apsp(&g) {
                let s = graph6::encode(&g);
                insert_rep(&mut map, dist_charpoly(&d), s, g);
            }
            (count + 1, map)
        },
        |(ca, mut a), (cb, b)| {
            for (p, reps) in b {
                for (s, g) in reps {
                    insert_rep(&mut a, p.clone(), s, g);
                }
            }
            (ca + cb, a)
        },
    )?;
    let isomorphism_classes = buckets.values().map(Vec::len).sum();
    let polynomial_classes = buckets.len();
    let mut cospectral_classes: Vec<CospectralClass> = buckets
        .into_iter()
        .filter(|(_, reps)| reps.len() >= 2)
        .map(|(polynomial, reps)| {
            let mut members: Vec<String> = reps.into_iter().map(|(s, _)| s).collect();
            members.sort();
            CospectralClass { polynomial, members }
        })
        .collect();
    cospectral_classes.sort_by(|a, b| a.members.cmp(&b.members));
    Ok(Census {
        order,
        graphs_scanned: scanned,
        polynomial_classes,
        isomorphism_classes,
        cospectral_classes,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgePair {
    pub first: String,
    pub second: String,
    pub first_diameter: u32,
    pub second_diameter: u32,
    pub first_edges: usize,
    pub second_edges: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeCountReport {
    pub checked: usize,
    pub equal_cases: usize,
    pub strict_cases: usize,
    pub skipped: Vec<String>,
    pub violations: Vec<EdgePair>,
    pub pass: bool,
}

/// For a diameter-2 graph `G` and a cospectral `G'`: equal edge counts when
/// `G'` has diameter 2, strictly more edges in `G'` when its diameter is larger.
pub fn edge_count_lemma_check(pairs: &[(Graph, Graph)]) -> Result<EdgeCountReport> {
    let mut rep = EdgeCountReport {
        checked: 0,
        equal_cases: 0,
        strict_cases: 0,
        skipped: Vec::new(),
        violations: Vec::new(),
        pass: true,
    };
    for (g, h) in pairs {
        let (dg, dh) = (apsp(g)?, apsp(h)?);
        let (s1, s2) = (graph6::encode(g), graph6::encode(h));
        if dg.diameter() != 2 {
            rep.skipped
                .push(format!("{s1} / {s2}: first member has diameter {}", dg.diameter()));
            continue;
        }
        if g.order() != h.order() || dist_charpoly(&dg) != dist_charpoly(&dh) {
            rep.skipped.push(format!("{s1} / {s2}: not cospectral"));
            continue;
        }
        rep.checked += 1;
        let (e1, e2) = (g.edge_count(), h.edge_count());
        let holds = if dh.diameter() == 2 {
            rep.equal_cases += 1;
            e1 == e2
        } else {
            rep.strict_cases += 1;
            e1 < e2
        };
        if !holds {
            rep.violations.push(EdgePair {
                first: s1,
                second: s2,
                first_diameter: dg.diameter(),
                second_diameter: dh.diameter(),
                first_edges: e1,
                second_edges: e2,
                holds,
            });
        }
    }
    rep.pass = rep.violations.is_empty();
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn members_by_order() {
        assert_eq!(family_members(3), vec![FamilySpec::KstGlued { s: 2, t: 2 }]);
        let m5 = family_members(5);
        assert!(m5.contains(&FamilySpec::Kh { n: 5, h: 4 }));
        assert!(m5.contains(&FamilySpec::KstBridge { s: 3, t: 2 }));
        assert!(m5.contains(&FamilySpec::KstGlued { s: 4, t: 2 }));
        assert!(m5.contains(&FamilySpec::Friendship { k: 2 }));
        for s in m5 {
            assert_eq!(s.order(), 5);
            assert!(s.validate(Validation::Strict).is_ok());
        }
    }

    #[test]
    fn small_ds_checks() {
        for n in 3..=5 {
            let reports = ds_check_batch(&family_members(n), Source::BuiltIn { n }, false).unwrap();
            for r in reports {
                assert_eq!(r.verdict, Verdict::DsAtThisScale, "{}", r.target);
                assert!(r.isomorphic_matches > 0);
            }
        }
        let r = ds_check(&FamilySpec::Complete { n: 5 }, Source::BuiltIn { n: 5 }).unwrap();
        assert_eq!((r.verdict, r.isomorphic_matches), (Verdict::DsAtThisScale, 1));
    }

    #[test]
    fn order_mismatch() {
        assert!(ds_check(&FamilySpec::Kh { n: 5, h: 3 }, Source::BuiltIn { n: 4 }).is_err());
    }

    #[test]
    fn stream_without_target_is_inconclusive() {
        let gs = vec![make_family(&FamilySpec::Path { n: 5 }).unwrap()];
        let r = ds_check(
            &FamilySpec::Friendship { k: 2 },
            Source::Stream {
                label: "p5",
                graphs: &gs,
            },
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
        assert_eq!(r.friendship_constraint, Some(true));
    }

    #[test]
    fn census_basics() {
        let p4 = make_family(&FamilySpec::Path { n: 4 }).unwrap();
        let q4 = p4.relabel(&[2, 0, 3, 1]).unwrap();
        let c = cospectral_census(
            Source::Stream {
                label: "x",
                graphs: &[p4.clone(), q4],
            },
            false,
        )
        .unwrap();
        assert_eq!((c.isomorphism_classes, c.cospectral_classes.len()), (1, 0));
        let c = cospectral_census(
            Source::Stream {
                label: "x",
                graphs: std::slice::from_ref(&p4),
            },
            false,
        )
        .unwrap();
        assert!(c.cospectral_classes.is_empty());
        let k3 = make_family(&FamilySpec::Complete { n: 3 }).unwrap();
        assert!(cospectral_census(
            Source::Stream {
                label: "x",
                graphs: &[p4, k3]
            },
            false
        )
        .is_err());
    }

    #[test]
    fn unlabeled_counts_and_order_independence() {
        let c = cospectral_census(Source::BuiltIn { n: 5 }, true).unwrap();
        assert_eq!(c.isomorphism_classes, 21);
        let mut graphs: Vec<Graph> = Enumeration::new(5).unwrap().iter().collect();
        graphs.reverse();
        let r = cospectral_census(
            Source::Stream {
                label: "rev",
                graphs: &graphs,
            },
            false,
        )
        .unwrap();
        assert_eq!(
            serde_json::to_string(&c.cospectral_classes).unwrap(),
            serde_json::to_string(&r.cospectral_classes).unwrap()
        );
    }

    #[test]
    fn edge_lemma_on_identical_pair() {
        let g = make_family(&FamilySpec::Kh { n: 5, h: 3 }).unwrap();
        let h = g.relabel(&[4, 3, 2, 1, 0]).unwrap();
        let p5 = make_family(&FamilySpec::Path { n: 5 }).unwrap();
        let rep = edge_count_lemma_check(&[(g.clone(), h), (p5.clone(), g)]).unwrap();
        assert_eq!((rep.checked, rep.equal_cases, rep.skipped.len()), (1, 1, 1));
        assert!(rep.pass);
    }
}
