//! Desk-scale verification: fixtures, exhaustive enumeration, mate search,
//! census, forbidden subgraphs and the multipartite brute force.

mod enumerate;
pub mod fixtures;
mod forbidden;
mod search;

pub use enumerate::{enumerate_connected, ingest_graph6, Enumeration, Ingested, Strictness, MAX_ENUM_ORDER};
pub use fixtures::{
    fixture, fixture_graph, fixture_table_check, graph_fixture, graph_fixtures, proof_table_check, Fixture,
    FixtureTableReport, GraphFixture, ProofTableReport, PROOF_TOL, TABLE_TOL,
};
pub use forbidden::{
    bound_checks, forbidden_check, forbidden_list, violated_bounds, Bound, BoundCheck, Context, ForbiddenReport,
    Occurrence,
};
pub use search::{
    cospectral_census, ds_check, ds_check_batch, edge_count_lemma_check, family_members, Census, CospectralClass,
    DsReport, EdgeCountReport, EdgePair, SearchSpace, Source, Verdict,
};

use crate::graph::graph6;
use crate::spectral::{complete_multipartite_parts, spectral_minus_two, verdict_from, MultipartiteVerdict};
use crate::{dist_charpoly, IntPolynomial, Result};
use serde::Serialize;
use std::collections::HashMap;

#[derive(Debug, Clone, Serialize)]
pub struct MultipartiteSweep {
    pub order: usize,
    pub graphs: usize,
    pub structural: usize,
    pub spectral: usize,
    /// Least graph6 string of each (polynomial, part count) class where the
    /// two verdicts differ.
    pub disagreements: Vec<String>,
    pub pass: bool,
}

/// Graphs with equal polynomial and equal number of multipartite parts get
/// the same pair of verdicts, so the scan only tallies those classes.
type Tally = HashMap<(IntPolynomial, Option<usize>), (usize, String)>;

/// Structural versus spectral multipartite verdict on every connected graph
/// of order `n`. The spectral half is decided once per distinct polynomial.
pub fn multipartite_sweep(n: usize, parallel: bool) -> Result<MultipartiteSweep> {
    let e = Enumeration::new(n)?;
    let tally = e.fold(
        parallel,
        Tally::new,
        |mut t, g| {
            let d = crate::apsp(&g).expect("enumerated graphs are connected");
            let key = (dist_charpoly(&d), complete_multipartite_parts(&g).map(|p| p.len()));
            let s = graph6::encode(&g);
            let slot = t.entry(key).or_insert_with(|| (0, s.clone()));
            slot.0 += 1;
            if s < slot.1 {
                slot.1 = s;
            }
            t
        },
        |mut a, b| {
            for (k, (c, s)) in b {
                let slot = a.entry(k).or_insert_with(|| (0, s.clone()));
                slot.0 += c;
                if s < slot.1 {
                    slot.1 = s;
                }
            }
            a
        },
    );
    let mut spectral_of: HashMap<&IntPolynomial, (bool, usize)> = HashMap::new();
    let (mut graphs, mut structural, mut spectral, mut disagreements) = (0, 0, 0, Vec::new());
    for ((p, _), (count, rep)) in &tally {
        let (least, m) = match spectral_of.get(p) {
            Some(&v) => v,
            None => *spectral_of.entry(p).or_insert(spectral_minus_two(p)?),
        };
        let v: MultipartiteVerdict = verdict_from(&graph6::decode(rep)?, least, m);
        graphs += count;
        structural += if v.structural { count } else { &0 };
        spectral += if v.spectral { count } else { &0 };
        if !v.agree {
            disagreements.push(rep.clone());
        }
    }
    disagreements.sort();
    Ok(MultipartiteSweep {
        order: n,
        graphs,
        structural,
        spectral,
        pass: disagreements.is_empty(),
        disagreements,
    })
}
