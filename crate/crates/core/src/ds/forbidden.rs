//! Forbidden induced subgraphs for graphs cospectral with a pendant-clique
//! graph, and the spectral bound each one breaks.

use super::fixtures::fixture_graph;
use crate::graph::{apsp, contains_induced, graph6, Graph};
use crate::spectral::{eigenvalues, ExactRoots, DEFAULT_TOL};
use crate::{dist_charpoly, Error, Rational, Result};
use num_bigint::BigInt;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// Which forbidden list to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Context {
    /// Diameter-2 graphs whose distance matrix is always principal in `G`.
    Principal,
    /// Graphs whose distances inside `G` may shrink; the bound is taken on
    /// their own distance matrix.
    DistanceSensitive,
    /// Both lists.
    All,
}

impl FromStr for Context {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "principal" => Ok(Context::Principal),
            "distance-sensitive" => Ok(Context::DistanceSensitive),
            "all" => Ok(Context::All),
            _ => Err(Error::contract(format!(
                "unknown forbidden context {s:?}; expected principal, distance-sensitive or all"
            ))),
        }
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Context::Principal => "principal",
            Context::DistanceSensitive => "distance-sensitive",
            Context::All => "all",
        })
    }
}

/// The three disqualifying bounds, on a graph of order `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Bound {
    /// `λ_2 >= -1/2`
    SecondAtLeastMinusHalf,
    /// `λ_3 > -1`
    ThirdAboveMinusOne,
    /// `λ_{m-1} < -2`
    PenultimateBelowMinusTwo,
}

const PRINCIPAL: [(&str, Bound); 9] = [
    ("C4", Bound::SecondAtLeastMinusHalf),
    ("C5", Bound::SecondAtLeastMinusHalf),
    ("H1", Bound::SecondAtLeastMinusHalf),
    ("H4", Bound::ThirdAboveMinusOne),
    ("H9", Bound::SecondAtLeastMinusHalf),
    ("H10", Bound::SecondAtLeastMinusHalf),
    ("H11", Bound::SecondAtLeastMinusHalf),
    ("H12", Bound::SecondAtLeastMinusHalf),
    ("H13", Bound::PenultimateBelowMinusTwo),
];

const DISTANCE_SENSITIVE: [(&str, Bound); 7] = [
    ("P5", Bound::ThirdAboveMinusOne),
    ("H2", Bound::SecondAtLeastMinusHalf),
    ("H3", Bound::ThirdAboveMinusOne),
    ("H5", Bound::PenultimateBelowMinusTwo),
    ("H6", Bound::SecondAtLeastMinusHalf),
    ("H7", Bound::SecondAtLeastMinusHalf),
    ("H8", Bound::SecondAtLeastMinusHalf),
];

/// Fixture names and their expected bound for a context.
pub fn forbidden_list(context: Context) -> Vec<(&'static str, Bound)> {
    match context {
        Context::Principal => PRINCIPAL.to_vec(),
        Context::DistanceSensitive => DISTANCE_SENSITIVE.to_vec(),
        Context::All => PRINCIPAL.iter().chain(&DISTANCE_SENSITIVE).copied().collect(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundCheck {
    pub fixture: &'static str,
    pub order: usize,
    pub expected: Bound,
    /// Every bound the fixture violates, decided exactly.
    pub violated: Vec<Bound>,
    #[serde(serialize_with = "crate::json::fixed6")]
    pub lambda_2: f64,
    #[serde(serialize_with = "crate::json::fixed6")]
    pub lambda_3: f64,
    #[serde(serialize_with = "crate::json::fixed6")]
    pub lambda_penultimate: f64,
    pub pass: bool,
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Recomputes which disqualifying bounds `h` violates.
pub fn violated_bounds(h: &Graph) -> Result<Vec<Bound>> {
    let m = h.order();
    let roots = ExactRoots::new(&dist_charpoly(&apsp(h)?))?;
    let mut out = Vec::new();
    if m >= 2 && roots.count_at_least(&q(-1, 2)) >= 2 {
        out.push(Bound::SecondAtLeastMinusHalf);
    }
    if m >= 3 && roots.count_above(&q(-1, 1)) >= 3 {
        out.push(Bound::ThirdAboveMinusOne);
    }
    if m >= 2 && roots.count_at_least(&q(-2, 1)) < m - 1 {
        out.push(Bound::PenultimateBelowMinusTwo);
    }
    Ok(out)
}

pub fn bound_checks(context: Context) -> Result<Vec<BoundCheck>> {
    forbidden_list(context)
        .into_iter()
        .map(|(name, expected)| {
            let h = fixture_graph(name)?;
            let m = h.order();
            let s = eigenvalues(&apsp(&h)?, DEFAULT_TOL)?;
            let violated = violated_bounds(&h)?;
            Ok(BoundCheck {
                fixture: name,
                order: m,
                expected,
                pass: violated.contains(&expected),
                violated,
                lambda_2: s.lambda(2),
                lambda_3: s.lambda(3),
                lambda_penultimate: s.lambda(m - 1),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct Occurrence {
    pub fixture: &'static str,
    /// Vertex of `g` hosting each fixture vertex.
    pub embedding: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ForbiddenReport {
    pub context: Context,
    pub graph: String,
    pub found: Vec<Occurrence>,
    pub bounds: Vec<BoundCheck>,
    /// No listed graph occurs as an induced subgraph.
    pub free: bool,
    /// Every listed graph violates its expected bound.
    pub bounds_pass: bool,
}

pub fn forbidden_check(g: &Graph, context: Context) -> Result<ForbiddenReport> {
    let mut found = Vec::new();
    for (name, _) in forbidden_list(context) {
        if let Some(embedding) = contains_induced(g, &fixture_graph(name)?) {
            found.push(Occurrence {
                fixture: name,
                embedding,
            });
        }
    }
    let bounds = bound_checks(context)?;
    Ok(ForbiddenReport {
        context,
        graph: graph6::encode(g),
        free: found.is_empty(),
        bounds_pass: bounds.iter().all(|b| b.pass),
        found,
        bounds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, FamilySpec};

    #[test]
    fn pendant_clique_is_free_of_the_principal_list() {
        let g = make_family(&FamilySpec::Kh { n: 6, h: 4 }).unwrap();
        let r = forbidden_check(&g, Context::Principal).unwrap();
        assert!(r.free, "{:?}", r.found);
        assert!(r.bounds_pass);
    }

    #[test]
    fn individual_bounds() {
        let h9 = bound_checks(Context::Principal)
            .unwrap()
            .into_iter()
            .find(|b| b.fixture == "H9")
            .unwrap();
        assert!((h9.lambda_2 + 0.4495).abs() < 5e-4);
        assert!(h9.violated.contains(&Bound::SecondAtLeastMinusHalf));
        let h13 = bound_checks(Context::Principal)
            .unwrap()
            .into_iter()
            .find(|b| b.fixture == "H13")
            .unwrap();
        assert!((h13.lambda_penultimate + 2.2223).abs() < 5e-4);
        assert_eq!(h13.expected, Bound::PenultimateBelowMinusTwo);
        assert!(h13.pass);
    }

    #[test]
    fn every_listed_graph_breaks_its_bound() {
        assert!(bound_checks(Context::All).unwrap().iter().all(|b| b.pass));
    }

    #[test]
    fn found_when_present() {
        let g = make_family(&FamilySpec::Cycle { n: 5 }).unwrap();
        let r = forbidden_check(&g, Context::Principal).unwrap();
        assert_eq!(r.found[0].fixture, "C5");
        assert!("nope".parse::<Context>().is_err());
    }
}
