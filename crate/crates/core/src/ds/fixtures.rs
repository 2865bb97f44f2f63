//! Named small graphs and distance matrices with their published spectra.
//!
//! Graph vertices follow the drawing order of each picture; the edge lists
//! are pinned by the spectrum check in [`fixture_table_check`].

use crate::graph::{apsp, DistanceMatrix, Graph};
use crate::spectral::{eigenvalues, Spectrum, DEFAULT_TOL};
use crate::{Error, Result};
use serde::Serialize;

pub const TABLE_TOL: f64 = 5e-4;
pub const PROOF_TOL: f64 = 1e-3;

struct Entry {
    name: &'static str,
    n: usize,
    edges: &'static [(usize, usize)],
    printed: &'static [f64],
}

const ENTRIES: &[Entry] = &[
    Entry {
        name: "P4",
        n: 4,
        edges: &[(0, 1), (1, 2), (2, 3)],
        printed: &[5.1623, -0.5858, -1.1623, -3.4142],
    },
    Entry {
        name: "P5",
        n: 5,
        edges: &[(0, 1), (1, 2), (2, 3), (3, 4)],
        printed: &[8.2882, -0.5578, -0.7639, -1.7304, -5.2361],
    },
    Entry {
        name: "C4",
        n: 4,
        edges: &[(0, 2), (0, 1), (1, 3), (2, 3)],
        printed: &[4.0, 0.0, -2.0, -2.0],
    },
    Entry {
        name: "C5",
        n: 5,
        edges: &[(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)],
        printed: &[6.0, -0.3820, -0.3820, -2.6180, -2.6180],
    },
    Entry {
        name: "H1",
        n: 5,
        edges: &[(0, 2), (0, 3), (0, 1), (0, 4), (1, 2), (2, 3), (3, 4)],
        printed: &[5.2926, -0.3820, -0.7217, -1.5709, -2.6180],
    },
    Entry {
        name: "H2",
        n: 5,
        edges: &[(0, 2), (0, 1), (0, 3), (1, 2), (2, 3), (3, 4)],
        printed: &[6.2162, -0.4521, -1.0, -1.1971, -3.5669],
    },
    Entry {
        name: "H3",
        n: 5,
        edges: &[(4, 1), (4, 2), (0, 1), (1, 2), (2, 3)],
        printed: &[6.6375, -0.5858, -0.8365, -1.8010, -3.4142],
    },
    Entry {
        name: "H4",
        n: 5,
        edges: &[(0, 1), (0, 3), (1, 2), (1, 4), (1, 3), (3, 4)],
        printed: &[5.7596, -0.5580, -0.7667, -2.0, -2.4348],
    },
    Entry {
        name: "H5",
        n: 6,
        edges: &[(0, 1), (0, 5), (1, 2), (1, 4), (1, 5), (2, 3)],
        printed: &[9.3154, -0.5023, -1.0, -1.0865, -2.3224, -4.4042],
    },
    Entry {
        name: "H6",
        n: 6,
        edges: &[(0, 1), (1, 2), (1, 5), (1, 4), (2, 3)],
        printed: &[9.6702, -0.4727, -1.0566, -2.0, -2.0, -4.1409],
    },
    Entry {
        name: "H7",
        n: 6,
        edges: &[(0, 1), (1, 2), (1, 4), (2, 3), (2, 5)],
        printed: &[10.0, -0.4348, -1.0, -2.0, -2.0, -4.5616],
    },
    Entry {
        name: "H8",
        n: 6,
        edges: &[(0, 1), (0, 4), (1, 2), (1, 4), (2, 3), (2, 5)],
        printed: &[9.6088, -0.4931, -1.0, -1.0924, -2.0, -5.0233],
    },
    Entry {
        name: "H9",
        n: 5,
        edges: &[(2, 1), (2, 3), (2, 4), (3, 0), (3, 4), (3, 1), (4, 0), (4, 1), (0, 1)],
        printed: &[4.4495, -0.4495, -1.0, -1.0, -2.0],
    },
    Entry {
        name: "H10",
        n: 5,
        edges: &[(0, 1), (0, 3), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4)],
        printed: &[5.3723, -0.3723, -1.0, -2.0, -2.0],
    },
    Entry {
        name: "H11",
        n: 6,
        edges: &[
            (0, 1),
            (0, 3),
            (0, 5),
            (0, 4),
            (0, 2),
            (1, 4),
            (1, 5),
            (1, 3),
            (1, 2),
            (3, 4),
            (3, 5),
            (4, 5),
        ],
        printed: &[6.1425, -0.4913, -1.0, -1.0, -1.0, -2.6512],
    },
    Entry {
        name: "H12",
        n: 6,
        edges: &[
            (0, 1),
            (0, 3),
            (0, 5),
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (3, 4),
            (3, 5),
        ],
        printed: &[6.4641, -0.4641, -1.0, -1.0, -1.0, -3.0],
    },
    Entry {
        name: "H13",
        n: 6,
        edges: &[(0, 1), (0, 4), (1, 3), (1, 2), (1, 5), (1, 4), (3, 5)],
        printed: &[7.8526, -0.6303, -1.0, -1.0, -2.2223, -3.0],
    },
    Entry {
        name: "B1",
        n: 5,
        edges: &[(0, 1), (1, 2), (1, 4), (2, 3)],
        printed: &[7.4593, -0.5120, -1.0846, -2.0, -3.8627],
    },
    Entry {
        name: "B2",
        n: 4,
        edges: &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)],
        printed: &[3.5616, -0.5616, -1.0, -2.0],
    },
    Entry {
        name: "B3",
        n: 5,
        edges: &[(3, 0), (3, 4), (3, 1), (4, 0), (4, 1), (4, 2), (0, 1), (1, 2)],
        printed: &[4.9018, -0.5122, -1.0, -1.0, -2.3896],
    },
    Entry {
        name: "T1",
        n: 5,
        edges: &[(0, 1), (1, 2), (1, 3), (3, 4)],
        printed: &[],
    },
    Entry {
        name: "T2",
        n: 5,
        edges: &[(0, 1), (0, 3), (1, 2), (1, 3), (3, 4)],
        printed: &[],
    },
    Entry {
        name: "T3",
        n: 5,
        edges: &[(0, 1), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)],
        printed: &[],
    },
    Entry {
        name: "T4",
        n: 5,
        edges: &[(0, 1), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        printed: &[],
    },
    Entry {
        name: "T5",
        n: 7,
        edges: &[(0, 1), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (3, 4)],
        printed: &[],
    },
];

/// Names of the graphs with a printed spectrum row.
pub const TABLE_GRAPHS: [&str; 20] = [
    "P4", "P5", "C4", "C5", "H1", "H2", "H3", "H4", "H5", "H6", "H7", "H8", "H9", "H10", "H11", "H12", "H13", "B1",
    "B2", "B3",
];

#[derive(Debug, Clone)]
pub struct GraphFixture {
    pub name: &'static str,
    pub graph: Graph,
    /// Printed spectrum, descending; empty when none is given.
    pub printed: &'static [f64],
}

fn build(e: &Entry) -> GraphFixture {
    GraphFixture {
        name: e.name,
        graph: Graph::from_edges(e.n, e.edges).expect("fixture edge lists are valid"),
        printed: e.printed,
    }
}

pub fn graph_fixtures() -> Vec<GraphFixture> {
    ENTRIES.iter().map(build).collect()
}

pub fn graph_fixture(name: &str) -> Option<GraphFixture> {
    ENTRIES.iter().find(|e| e.name.eq_ignore_ascii_case(name)).map(build)
}

/// Graph fixture by name; unknown names are a contract violation.
pub fn fixture_graph(name: &str) -> Result<Graph> {
    graph_fixture(name)
        .map(|f| f.graph)
        .ok_or_else(|| Error::contract(format!("unknown fixture {name}")))
}

fn matrix(rows: [[u32; 5]; 5]) -> DistanceMatrix {
    DistanceMatrix::from_rows(&rows.map(|r| r.to_vec())).expect("fixture matrices are metrics")
}

pub fn d1() -> DistanceMatrix {
    matrix([
        [0, 1, 2, 2, 2],
        [1, 0, 1, 1, 2],
        [2, 1, 0, 2, 2],
        [2, 1, 2, 0, 1],
        [2, 2, 2, 1, 0],
    ])
}

pub fn d2() -> DistanceMatrix {
    matrix([
        [0, 1, 2, 1, 2],
        [1, 0, 1, 1, 2],
        [2, 1, 0, 2, 2],
        [1, 1, 2, 0, 1],
        [2, 2, 2, 1, 0],
    ])
}

pub fn d3() -> DistanceMatrix {
    matrix([
        [0, 1, 2, 1, 2],
        [1, 0, 1, 1, 2],
        [2, 1, 0, 1, 2],
        [1, 1, 1, 0, 1],
        [2, 2, 2, 1, 0],
    ])
}

/// Distances on a five-vertex path `v1..v5` with the three long distances
/// `d(v1,v4) = a`, `d(v1,v5) = b`, `d(v2,v5) = c` left open; each in `{2, 3}`.
pub fn param_abc(a: u32, b: u32, c: u32) -> Result<DistanceMatrix> {
    if [a, b, c].iter().any(|x| !(2..=3).contains(x)) {
        return Err(Error::contract(format!(
            "(a,b,c) = ({a},{b},{c}) must lie in {{2,3}}^3"
        )));
    }
    DistanceMatrix::from_rows(&[
        vec![0, 1, 2, a, b],
        vec![1, 0, 1, 2, c],
        vec![2, 1, 0, 1, 2],
        vec![a, 2, 1, 0, 1],
        vec![b, c, 2, 1, 0],
    ])
}

/// Distances on a diameter path `x y z` plus a vertex `v` at distance 2
/// from `y`, with `d(x,v) = a` and `d(z,v) = b`; each in `{1, 2}`.
pub fn param_ab(a: u32, b: u32) -> Result<DistanceMatrix> {
    if [a, b].iter().any(|x| !(1..=2).contains(x)) {
        return Err(Error::contract(format!("(a,b) = ({a},{b}) must lie in {{1,2}}^2")));
    }
    DistanceMatrix::from_rows(&[vec![0, 1, 2, a], vec![1, 0, 1, 2], vec![2, 1, 0, b], vec![a, 2, b, 0]])
}

/// Any named fixture: a graph, `D1`–`D3`, `param_abc(a,b,c)` or `param_ab(a,b)`.
#[derive(Debug, Clone)]
pub enum Fixture {
    Graph(GraphFixture),
    Matrix { name: String, matrix: DistanceMatrix },
}

impl Fixture {
    pub fn name(&self) -> String {
        match self {
            Fixture::Graph(g) => g.name.to_string(),
            Fixture::Matrix { name, .. } => name.clone(),
        }
    }

    pub fn distance_matrix(&self) -> Result<DistanceMatrix> {
        match self {
            Fixture::Graph(g) => apsp(&g.graph),
            Fixture::Matrix { matrix, .. } => Ok(matrix.clone()),
        }
    }
}

fn parse_args(s: &str, prefix: &str) -> Option<Vec<u32>> {
    let inner = s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
    inner.split(',').map(|x| x.trim().parse().ok()).collect()
}

pub fn fixture(name: &str) -> Result<Fixture> {
    let unknown = || Error::contract(format!("unknown fixture {name}"));
    let m = |name: &str, matrix| {
        Ok(Fixture::Matrix {
            name: name.into(),
            matrix,
        })
    };
    match name {
        "D1" => return m("D1", d1()),
        "D2" => return m("D2", d2()),
        "D3" => return m("D3", d3()),
        _ => {}
    }
    if let Some(v) = parse_args(name, "param_abc") {
        let [a, b, c] = v[..] else { return Err(unknown()) };
        return m(&format!("param_abc({a},{b},{c})"), param_abc(a, b, c)?);
    }
    if let Some(v) = parse_args(name, "param_ab") {
        let [a, b] = v[..] else { return Err(unknown()) };
        return m(&format!("param_ab({a},{b})"), param_ab(a, b)?);
    }
    graph_fixture(name).map(Fixture::Graph).ok_or_else(unknown)
}

#[derive(Debug, Clone, Serialize)]
pub struct FixtureRowCheck {
    pub name: &'static str,
    #[serde(serialize_with = "crate::json::fixed6_vec")]
    pub printed: Vec<f64>,
    pub spectrum: Spectrum,
    #[serde(serialize_with = "crate::json::fixed6")]
    pub max_deviation: f64,
    /// 1-based positions whose deviation exceeds the tolerance.
    pub mismatched: Vec<usize>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FixtureTableReport {
    #[serde(serialize_with = "crate::json::sci")]
    pub tolerance: f64,
    pub rows: Vec<FixtureRowCheck>,
    pub failures: Vec<&'static str>,
    pub pass: bool,
}

/// Recomputes every printed spectrum row and compares entrywise.
pub fn fixture_table_check(tol: f64) -> Result<FixtureTableReport> {
    let mut rows = Vec::new();
    for name in TABLE_GRAPHS {
        let f = graph_fixture(name).expect("table graphs are catalogued");
        let spectrum = eigenvalues(&apsp(&f.graph)?, DEFAULT_TOL)?;
        if spectrum.len() != f.printed.len() {
            return Err(Error::contract(format!(
                "{name}: order {} but {} printed values",
                spectrum.len(),
                f.printed.len()
            )));
        }
        let dev: Vec<f64> = spectrum
            .values
            .iter()
            .zip(f.printed)
            .map(|(x, y)| (x - y).abs())
            .collect();
        let mismatched: Vec<usize> = (0..dev.len()).filter(|&i| dev[i] > tol).map(|i| i + 1).collect();
        rows.push(FixtureRowCheck {
            name: f.name,
            printed: f.printed.to_vec(),
            max_deviation: dev.iter().copied().fold(0.0, f64::max),
            pass: mismatched.is_empty(),
            mismatched,
            spectrum,
        });
    }
    let failures: Vec<&'static str> = rows.iter().filter(|r| !r.pass).map(|r| r.name).collect();
    Ok(FixtureTableReport {
        tolerance: tol,
        pass: failures.is_empty(),
        failures,
        rows,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ProofValueCheck {
    pub name: String,
    /// 1-based eigenvalue position.
    pub index: usize,
    /// Printed value(s); more than one when the source prints conflicting values.
    #[serde(serialize_with = "crate::json::fixed6_vec")]
    pub printed: Vec<f64>,
    #[serde(serialize_with = "crate::json::fixed6")]
    pub computed: f64,
    #[serde(serialize_with = "crate::json::fixed6")]
    pub deviation: f64,
    #[serde(serialize_with = "crate::json::fixed6_opt")]
    pub matched: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProofTableReport {
    #[serde(serialize_with = "crate::json::sci")]
    pub tolerance: f64,
    pub checks: Vec<ProofValueCheck>,
    pub failures: Vec<String>,
    pub pass: bool,
}

fn value_check(name: String, d: &DistanceMatrix, index: usize, printed: &[f64], tol: f64) -> Result<ProofValueCheck> {
    let computed = eigenvalues(d, DEFAULT_TOL)?.lambda(index);
    let (deviation, best) = printed
        .iter()
        .map(|&p| ((computed - p).abs(), p))
        .fold((f64::INFINITY, f64::NAN), |acc, x| if x.0 < acc.0 { x } else { acc });
    let pass = deviation <= tol;
    let note = (printed.len() > 1).then(|| {
        let typos: Vec<String> = printed
            .iter()
            .filter(|&&p| (computed - p).abs() > tol)
            .map(|p| format!("{p:.4}"))
            .collect();
        if pass {
            format!(
                "computed {computed:.6} matches {best:.4}; printed {} is a typo",
                typos.join(", ")
            )
        } else {
            format!("computed {computed:.6} matches none of the printed variants")
        }
    });
    Ok(ProofValueCheck {
        name,
        index,
        printed: printed.to_vec(),
        computed,
        deviation,
        matched: pass.then_some(best),
        note,
        pass,
    })
}

/// `(a, b, c)` cases in printed column order with their printed `λ_2`.
pub const ABC_TABLE: [((u32, u32, u32), f64); 8] = [
    ((3, 3, 3), -0.4348),
    ((3, 2, 2), -0.3260),
    ((3, 2, 3), 0.0),
    ((3, 3, 2), -0.3713),
    ((2, 3, 3), -0.3713),
    ((2, 3, 2), -0.1646),
    ((2, 2, 2), -0.2909),
    ((2, 2, 3), -0.3260),
];

/// `(a, b)` cases with their printed `λ_2`.
pub const AB_TABLE: [((u32, u32), f64); 4] = [((1, 1), 0.0), ((1, 2), -0.3820), ((2, 1), -0.3820), ((2, 2), -0.6519)];

/// Recomputes the individual eigenvalues quoted for the parametric matrices,
/// `D1`–`D3`, `T4` and `T5`.
pub fn proof_table_check(tol: f64) -> Result<ProofTableReport> {
    let mut checks = Vec::new();
    for ((a, b, c), v) in ABC_TABLE {
        checks.push(value_check(
            format!("param_abc({a},{b},{c})"),
            &param_abc(a, b, c)?,
            2,
            &[v],
            tol,
        )?);
    }
    for ((a, b), v) in AB_TABLE {
        checks.push(value_check(
            format!("param_ab({a},{b})"),
            &param_ab(a, b)?,
            2,
            &[v],
            tol,
        )?);
    }
    checks.push(value_check("D1".into(), &d1(), 2, &[-0.2248], tol)?);
    checks.push(value_check("D2".into(), &d2(), 2, &[-0.3820], tol)?);
    checks.push(value_check("D3".into(), &d3(), 3, &[-0.7667], tol)?);
    checks.push(value_check(
        "T4".into(),
        &apsp(&fixture_graph("T4")?)?,
        3,
        &[-0.7767, -0.7667],
        tol,
    )?);
    checks.push(value_check(
        "T5".into(),
        &apsp(&fixture_graph("T5")?)?,
        7,
        &[-3.0984],
        tol,
    )?);
    let failures: Vec<String> = checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect();
    Ok(ProofTableReport {
        tolerance: tol,
        pass: failures.is_empty(),
        failures,
        checks,
    })
}
