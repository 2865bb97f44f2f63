use super::distance::bfs_levels;
use super::{bits, Graph};
use std::collections::HashMap;

/// Searches for an injective map `φ: V(h) → V(g)` with `u ~ v ⇔ φ(u) ~ φ(v)`.
///
/// Pattern vertices are placed in order `0, 1, …` and host candidates are
/// tried in increasing order, so the returned witness `[φ(0), φ(1), …]` is the
/// lexicographically smallest one.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.order() > g.order() {
        return None;
    }
    let mut phi = Vec::with_capacity(h.order());
    if extend_induced(g, h, &mut phi, 0) {
        Some(phi)
    } else {
        None
    }
}

fn extend_induced(g: &Graph, h: &Graph, phi: &mut Vec<usize>, used: u64) -> bool {
    let i = phi.len();
    if i == h.order() {
        return true;
    }
    let need = h.degree(i);
    for c in bits(g.full_mask() & !used) {
        if g.degree(c) < need {
            continue;
        }
        let consistent = phi
            .iter()
            .enumerate()
            .all(|(j, &pj)| h.has_edge(i, j) == g.has_edge(c, pj));
        if !consistent {
            continue;
        }
        phi.push(c);
        if extend_induced(g, h, phi, used | 1 << c) {
            return true;
        }
        phi.pop();
    }
    false
}

/// Exact isomorphism test.
///
/// Order, size, degree sequence and the multiset of sorted distance rows are
/// compared first; surviving pairs are colour-refined jointly and then matched
/// by backtracking within colour classes.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() || a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    let (pa, pb) = (profiles(a), profiles(b));
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return false;
    }
    let Some((ca, cb)) = refine(a, b, pa, pb) else {
        return false;
    };
    let order = placement_order(a, &ca);
    let mut phi = vec![usize::MAX; n];
    match_from(a, b, &ca, &cb, &order, 0, &mut phi, 0)
}

/// Per-vertex `(degree, sorted distance row)`; unreachable vertices sort last.
fn profiles(g: &Graph) -> Vec<(usize, Vec<u32>)> {
    (0..g.order())
        .map(|v| {
            let mut row: Vec<u32> = bfs_levels(g, v).into_iter().map(|d| d.unwrap_or(u32::MAX)).collect();
            row.sort_unstable();
            (g.degree(v), row)
        })
        .collect()
}

/// Joint colour refinement; `None` when the colour histograms diverge.
fn refine<K: Ord + std::hash::Hash + Clone>(
    a: &Graph,
    b: &Graph,
    init_a: Vec<K>,
    init_b: Vec<K>,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut ca = relabel_colors(init_a.iter().chain(init_b.iter()).cloned().collect());
    let mut cb = ca.split_off(a.order());
    let mut classes = count_classes(&ca);
    loop {
        if histogram(&ca) != histogram(&cb) {
            return None;
        }
        let sig = |g: &Graph, c: &[usize], v: usize| {
            let mut nb: Vec<usize> = bits(g.neighbors(v)).map(|u| c[u]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sigs: Vec<(usize, Vec<usize>)> = (0..a.order())
            .map(|v| sig(a, &ca, v))
            .chain((0..b.order()).map(|v| sig(b, &cb, v)))
            .collect();
        let mut next_a = relabel_colors(sigs);
        let next_b = next_a.split_off(a.order());
        let next_classes = count_classes(&next_a);
        ca = next_a;
        cb = next_b;
        if next_classes == classes {
            if histogram(&ca) != histogram(&cb) {
                return None;
            }
            return Some((ca, cb));
        }
        classes = next_classes;
    }
}

fn relabel_colors<K: Ord + Clone + std::hash::Hash>(keys: Vec<K>) -> Vec<usize> {
    let mut distinct = keys.clone();
    distinct.sort();
    distinct.dedup();
    let index: HashMap<K, usize> = distinct.into_iter().enumerate().map(|(i, k)| (k, i)).collect();
    keys.iter().map(|k| index[k]).collect()
}

fn count_classes(c: &[usize]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn histogram(c: &[usize]) -> Vec<usize> {
    let mut v = c.to_vec();
    v.sort_unstable();
    v
}

/// Smallest colour classes first; ties prefer vertices adjacent to those
/// already placed so that adjacency constraints bite early.
fn placement_order(a: &Graph, colors: &[usize]) -> Vec<usize> {
    let n = a.order();
    let mut size = HashMap::new();
    for &c in colors {
        *size.entry(c).or_insert(0usize) += 1;
    }
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .min_by_key(|&v| {
                (
                    size[&colors[v]],
                    std::cmp::Reverse((a.neighbors(v) & placed).count_ones()),
                    v,
                )
            })
            .expect("an unplaced vertex remains");
        placed |= 1 << v;
        order.push(v);
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn match_from(
    a: &Graph,
    b: &Graph,
    ca: &[usize],
    cb: &[usize],
    order: &[usize],
    depth: usize,
    phi: &mut [usize],
    used: u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for c in bits(b.full_mask() & !used) {
        if cb[c] != ca[v] {
            continue;
        }
        let ok = order[..depth]
            .iter()
            .all(|&u| a.has_edge(v, u) == b.has_edge(c, phi[u]));
        if !ok {
            continue;
        }
        phi[v] = c;
        if match_from(a, b, ca, cb, order, depth + 1, phi, used | 1 << c) {
            return true;
        }
    }
    phi[v] = usize::MAX;
    false
}
