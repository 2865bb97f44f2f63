use super::{Endpoint, ExactRoots};
use crate::graph::{apsp, bits, Graph};
use crate::{dist_charpoly, IntPolynomial, Result};
use serde::Serialize;

/// Part sizes (descending) if `g` is complete multipartite, i.e. if
/// non-adjacency is an equivalence relation.
pub fn complete_multipartite_parts(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    let full = g.full_mask();
    let class = |v: usize| (!g.neighbors(v) & full) | 1u64 << v;
    let mut seen = 0u64;
    let mut parts = Vec::new();
    for v in 0..n {
        if seen >> v & 1 == 1 {
            continue;
        }
        let c = class(v);
        if bits(c).any(|u| class(u) != c) {
            return None;
        }
        seen |= c;
        parts.push(c.count_ones() as usize);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Some(parts)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultipartiteVerdict {
    pub order: usize,
    /// Part sizes when complete multipartite (any number of parts).
    pub parts: Option<Vec<usize>>,
    /// Complete `k`-partite with `2 <= k <= n-1`.
    pub structural: bool,
    pub structural_k: Option<usize>,
    /// Exact multiplicity of `-2` as a root.
    pub multiplicity_minus_two: usize,
    /// No eigenvalue lies below `-2`.
    pub least_is_minus_two: bool,
    /// `λ_n = -2` with multiplicity `m`, where `1 <= m <= n-2`, so `k = n - m`.
    pub spectral: bool,
    pub spectral_k: Option<usize>,
    pub agree: bool,
}

/// `(least eigenvalue is -2, multiplicity of -2)` from the exact polynomial.
pub fn spectral_minus_two(p: &IntPolynomial) -> Result<(bool, usize)> {
    let m = p.root_multiplicity(-2);
    let below = ExactRoots::new(p)?.count_open(&Endpoint::NegInf, &Endpoint::int(-2)).1;
    Ok((m > 0 && below == 0, m))
}

/// Verdict from a precomputed polynomial; lets exhaustive scans reuse the
/// spectral half across graphs with equal polynomials.
pub fn verdict_from(g: &Graph, least_is_minus_two: bool, m: usize) -> MultipartiteVerdict {
    let n = g.order();
    let parts = complete_multipartite_parts(g);
    let k = parts.as_ref().map(Vec::len);
    let structural = k.is_some_and(|k| 2 <= k && k < n);
    let spectral = least_is_minus_two && m >= 1 && m + 2 <= n;
    let structural_k = k.filter(|_| structural);
    let spectral_k = spectral.then(|| n - m);
    MultipartiteVerdict {
        order: n,
        parts,
        structural,
        structural_k,
        multiplicity_minus_two: m,
        least_is_minus_two,
        spectral,
        spectral_k,
        agree: structural == spectral && structural_k == spectral_k,
    }
}

/// Decides complete multipartiteness structurally and spectrally, independently.
pub fn multipartite_characterization_check(g: &Graph) -> Result<MultipartiteVerdict> {
    let p = dist_charpoly(&apsp(g)?);
    let (least, m) = spectral_minus_two(&p)?;
    Ok(verdict_from(g, least, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, FamilySpec};

    fn check(f: FamilySpec) -> MultipartiteVerdict {
        multipartite_characterization_check(&make_family(&f).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let v = check(FamilySpec::Cycle { n: 4 });
        assert_eq!(
            (v.structural_k, v.spectral_k, v.multiplicity_minus_two),
            (Some(2), Some(2), 2)
        );
        assert!(v.agree);

        let v = check(FamilySpec::Star { n: 5 });
        assert_eq!(v.parts, Some(vec![4, 1]));
        assert_eq!((v.structural_k, v.multiplicity_minus_two), (Some(2), 3));
        assert!(v.agree);

        let v = check(FamilySpec::Path { n: 4 });
        assert!(!v.structural && !v.spectral && v.agree);
    }

    #[test]
    fn complete_graph_is_outside_the_range() {
        let v = check(FamilySpec::Complete { n: 4 });
        assert_eq!(v.parts, Some(vec![1, 1, 1, 1]));
        assert!(!v.structural && !v.spectral && v.agree);
    }

    #[test]
    fn multipartite_family() {
        let v = check(FamilySpec::CompleteMultipartite { parts: vec![3, 2, 1] });
        assert_eq!(v.structural_k, Some(3));
        assert_eq!(v.spectral_k, Some(3));
    }
}
