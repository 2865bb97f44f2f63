//! Labeled graph enumeration by edge mask and graph6 stream ingestion.

use crate::graph::{graph6, Graph};
use crate::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;
use std::io::BufRead;

/// Largest order the built-in enumerator accepts (`2^21` edge masks).
pub const MAX_ENUM_ORDER: usize = 7;

const CHUNKS: u64 = 256;

/// All labeled connected graphs of one order, indexed by edge mask. Bit `k`
/// of the mask is the `k`-th vertex pair in graph6 order
/// (`01, 02, 12, 03, 13, 23, …`).
#[derive(Debug, Clone, Copy)]
pub struct Enumeration {
    n: usize,
    pairs: [(u8, u8); 21],
}

impl Enumeration {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::contract("order must be at least 1"));
        }
        if n > MAX_ENUM_ORDER {
            return Err(Error::Capacity {
                requested: n,
                capacity: MAX_ENUM_ORDER,
            });
        }
        let mut pairs = [(0u8, 0u8); 21];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                pairs[k] = (i as u8, j as u8);
                k += 1;
            }
        }
        Ok(Enumeration { n, pairs })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mask_count(&self) -> u64 {
        1u64 << (self.n * (self.n - 1) / 2)
    }

    fn rows(&self, mask: u64) -> [u64; MAX_ENUM_ORDER] {
        let mut rows = [0u64; MAX_ENUM_ORDER];
        let mut m = mask;
        while m != 0 {
            let k = m.trailing_zeros() as usize;
            m &= m - 1;
            let (i, j) = self.pairs[k];
            rows[i as usize] |= 1 << j;
            rows[j as usize] |= 1 << i;
        }
        rows
    }

    /// The connected graph with this edge mask, if it is connected.
    pub fn graph(&self, mask: u64) -> Option<Graph> {
        let rows = self.rows(mask);
        let full = (1u64 << self.n) - 1;
        let (mut seen, mut frontier) = (1u64, 1u64);
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        (seen == full).then(|| Graph::from_rows(rows[..self.n].to_vec()).expect("mask rows are a simple graph"))
    }

    /// Connected graphs in increasing mask order.
    pub fn iter(&self) -> impl Iterator<Item = Graph> + '_ {
        (0..self.mask_count()).filter_map(move |m| self.graph(m))
    }

    /// Folds every connected graph. The mask range is cut into fixed chunks;
    /// each chunk folds in mask order and partial results merge in chunk
    /// order, so the result is the same with or without `parallel`.
    pub fn fold<A, I, F, M>(&self, parallel: bool, init: I, fold: F, merge: M) -> A
    where
        A: Send,
        I: Fn() -> A + Sync,
        F: Fn(A, Graph) -> A + Sync,
        M: Fn(A, A) -> A,
    {
        let total = self.mask_count();
        let chunks = CHUNKS.min(total);
        let bounds = |c: u64| (c * total / chunks, (c + 1) * total / chunks);
        let run = |c: u64| {
            let (lo, hi) = bounds(c);
            (lo..hi).filter_map(|m| self.graph(m)).fold(init(), &fold)
        };
        let parts: Vec<A> = if parallel {
            (0..chunks).into_par_iter().map(run).collect()
        } else {
            (0..chunks).map(run).collect()
        };
        parts.into_iter().reduce(merge).unwrap_or_else(init)
    }
}

/// Iterator-free convenience: all connected graphs of order `n`.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    Ok(Enumeration::new(n)?.iter().collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strictness {
    /// The first malformed line is an error.
    #[default]
    Strict,
    /// Malformed lines are skipped and counted.
    Lenient,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Ingested {
    #[serde(skip)]
    pub graphs: Vec<Graph>,
    pub lines: usize,
    pub accepted: usize,
    pub disconnected: usize,
    pub malformed: usize,
    pub warnings: Vec<String>,
}

impl Ingested {
    pub fn warning_count(&self) -> usize {
        self.disconnected + self.malformed
    }
}

/// Reads newline-delimited graph6. Blank lines are ignored; disconnected
/// graphs are dropped with a warning.
pub fn ingest_graph6<R: BufRead>(reader: R, mode: Strictness) -> Result<Ingested> {
    let mut out = Ingested::default();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        out.lines = line_no;
        let text = line.trim();
        if text.is_empty() || text == ">>graph6<<" {
            continue;
        }
        match graph6::decode(text) {
            Ok(g) if g.is_connected() => {
                out.graphs.push(g);
                out.accepted += 1;
            }
            Ok(_) => {
                out.disconnected += 1;
                out.warnings.push(format!("line {line_no}: disconnected graph skipped"));
            }
            Err(e) => match mode {
                Strictness::Strict => {
                    return Err(Error::Line {
                        line: line_no,
                        source: Box::new(e),
                    })
                }
                Strictness::Lenient => {
                    out.malformed += 1;
                    out.warnings.push(format!("line {line_no}: {e}"));
                }
            },
        }
    }
    Ok(out)
}
