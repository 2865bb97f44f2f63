#![allow(dead_code)]

use dspec_core::spectral::ExactRoots;
use dspec_core::{dist_charpoly, eigenvalues, DistanceMatrix, Graph, Rational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random spanning tree on a shuffled vertex order plus independent extra
/// edges with probability `p`.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((order[i], order[j]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let set: BTreeSet<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
    Graph::from_edges(n, &set.into_iter().collect::<Vec<_>>()).unwrap()
}

/// Any simple graph, not necessarily connected.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Largest gap between Jacobi eigenvalues and the exact real roots of the
/// characteristic polynomial, matched in descending order.
pub fn jacobi_vs_exact(d: &DistanceMatrix) -> f64 {
    let s = eigenvalues(d, 1e-12).unwrap();
    let roots = ExactRoots::new(&dist_charpoly(d)).unwrap().real_roots_f64(60);
    assert_eq!(roots.len(), s.len(), "all roots of a symmetric matrix are real");
    s.values
        .iter()
        .zip(&roots)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

/// Outcome of one randomized or exhaustive suite.
#[derive(Debug, Default)]
pub struct Suite {
    pub cases: usize,
    pub failures: Vec<String>,
    pub max_deviation: f64,
}

impl Suite {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Cauchy interlacing on `count` random connected graphs (`n <= 10`) paired
/// with a random distance-preserving proper subset.
pub fn interlacing_suite(count: usize, seed: u64) -> Suite {
    use dspec_core::apsp;
    use dspec_core::graph::is_distance_preserving;
    use dspec_core::spectral::interlacing_check;
    let mut r = rng(seed);
    let mut out = Suite::default();
    while out.cases < count {
        let n = r.gen_range(3..=10);
        let p = r.gen_range(0.1..0.7);
        let g = random_connected(&mut r, n, p);
        let m = r.gen_range(1..n);
        let mut subset: Vec<usize> = (0..n).collect();
        subset.shuffle(&mut r);
        subset.truncate(m);
        subset.sort_unstable();
        if !is_distance_preserving(&g, &subset).unwrap().preserving {
            continue;
        }
        out.cases += 1;
        let parent = apsp(&g).unwrap();
        let child = apsp(&g.induced(&subset).unwrap()).unwrap();
        if child != parent.principal(&subset).unwrap() {
            out.failures.push(format!(
                "{}: {subset:?} not a principal submatrix",
                dspec_core::graph::graph6::encode(&g)
            ));
            continue;
        }
        let (ps, cs) = (
            eigenvalues(&parent, 1e-12).unwrap(),
            eigenvalues(&child, 1e-12).unwrap(),
        );
        if !interlacing_check(&ps, &cs, 1e-9).unwrap() {
            out.failures
                .push(format!("{}: {subset:?}", dspec_core::graph::graph6::encode(&g)));
        }
    }
    out
}

/// Polynomial invariance under a random relabeling.
pub fn relabel_suite(count: usize, seed: u64) -> Suite {
    let mut r = rng(seed);
    let mut out = Suite::default();
    for _ in 0..count {
        let n = r.gen_range(1..=10);
        let p = r.gen_range(0.1..0.8);
        let g = random_connected(&mut r, n, p);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut r);
        let h = g.relabel(&perm).unwrap();
        out.cases += 1;
        let (a, b) = (
            dist_charpoly(&dspec_core::apsp(&g).unwrap()),
            dist_charpoly(&dspec_core::apsp(&h).unwrap()),
        );
        if a != b {
            out.failures
                .push(format!("{} under {perm:?}", dspec_core::graph::graph6::encode(&g)));
        }
    }
    out
}

/// `decode(encode(g)) == g` on random graphs, connected or not, up to order 64.
pub fn graph6_suite(count: usize, seed: u64) -> Suite {
    use dspec_core::graph::graph6;
    let mut r = rng(seed);
    let mut out = Suite::default();
    for i in 0..count {
        let n = if i % 10 == 0 {
            r.gen_range(21..=64)
        } else {
            r.gen_range(1..=20)
        };
        let p = r.gen_range(0.0..1.0);
        let g = random_graph(&mut r, n, p);
        out.cases += 1;
        let s = graph6::encode(&g);
        if !s.bytes().all(|b| (63..=126).contains(&b)) || graph6::decode(&s).ok().as_ref() != Some(&g) {
            out.failures.push(s);
        }
    }
    out
}

/// Every distance matrix the agreement suite covers: all fixtures and every
/// family member with `n <= 12` (cones up to order 10).
pub fn agreement_matrices() -> Vec<(String, DistanceMatrix)> {
    use dspec_core::ds::{fixture, graph_fixtures};
    use dspec_core::graph::make_family;
    use dspec_core::sweep::{sweep_members, SweepKind, SweepLimits};
    use dspec_core::FamilySpec;
    let mut out = Vec::new();
    for f in graph_fixtures() {
        out.push((f.name.to_string(), dspec_core::apsp(&f.graph).unwrap()));
    }
    let mut names: Vec<String> = ["D1", "D2", "D3"].iter().map(|s| s.to_string()).collect();
    for a in 2..=3 {
        for b in 2..=3 {
            for c in 2..=3 {
                names.push(format!("param_abc({a},{b},{c})"));
            }
        }
    }
    for a in 1..=2 {
        for b in 1..=2 {
            names.push(format!("param_ab({a},{b})"));
        }
    }
    for name in names {
        out.push((name.clone(), fixture(&name).unwrap().distance_matrix().unwrap()));
    }
    let mut specs: Vec<FamilySpec> = SweepKind::ALL
        .into_iter()
        .flat_map(|k| {
            sweep_members(
                k,
                SweepLimits {
                    k_max: 5,
                    ..SweepLimits::standard(k)
                },
            )
        })
        .collect();
    for n in 1..=12 {
        specs.push(FamilySpec::Complete { n });
        specs.push(FamilySpec::Path { n });
        if n >= 3 {
            specs.push(FamilySpec::Cycle { n });
        }
        if n >= 2 {
            specs.push(FamilySpec::Star { n });
        }
    }
    for spec in specs {
        out.push((
            spec.to_string(),
            dspec_core::apsp(&make_family(&spec).unwrap()).unwrap(),
        ));
    }
    out
}

/// Jacobi eigenvalues against exact real roots, `<= 1e-8`.
pub fn agreement_suite() -> Suite {
    let mut out = Suite::default();
    for (name, d) in agreement_matrices() {
        out.cases += 1;
        let dev = jacobi_vs_exact(&d);
        out.max_deviation = out.max_deviation.max(dev);
        if dev > 1e-8 {
            out.failures.push(format!("{name}: deviation {dev:e}"));
        }
    }
    out
}

/// `|P(λ)| <= 1e-6 · max|coeff|` with `P` evaluated exactly at each Jacobi
/// eigenvalue; `max_deviation` is the worst ratio to the bound.
pub fn residual_suite() -> Suite {
    use num_traits::ToPrimitive;
    let mut out = Suite::default();
    for (name, d) in agreement_matrices() {
        let p = dist_charpoly(&d);
        let bound = 1e-6 * p.max_abs_coeff().to_f64().unwrap();
        for &x in &eigenvalues(&d, 1e-12).unwrap().values {
            out.cases += 1;
            let r = p
                .eval_rational(&Rational::from_float(x).unwrap())
                .to_f64()
                .unwrap()
                .abs();
            out.max_deviation = out.max_deviation.max(r / bound);
            if r > bound {
                out.failures.push(format!("{name}: |P({x})| = {r:e}"));
            }
        }
    }
    out
}
