//! Distance spectra: floating-point Jacobi eigenvalues for reporting and
//! exact Sturm root counting for every strict inequality.

mod claims;
mod jacobi;
mod multipartite;
mod roots;

pub use claims::{
    check_claim, claimed_brackets, family_claims, Claim, ClaimOutcome, ClaimReport, PenultimateObservation,
};
pub use jacobi::MAX_SWEEPS;
pub use multipartite::{
    complete_multipartite_parts, multipartite_characterization_check, spectral_minus_two, verdict_from,
    MultipartiteVerdict,
};
pub use roots::{root_brackets, BracketEntry, Endpoint, ExactRoots, RootBracketReport};

use crate::graph::DistanceMatrix;
use crate::{Error, Result};
use serde::Serialize;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-8;

/// Eigenvalues in nonincreasing order with the solver tolerance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    #[serde(serialize_with = "crate::json::fixed6_vec")]
    pub values: Vec<f64>,
    #[serde(serialize_with = "crate::json::sci")]
    pub tol: f64,
}

impl Spectrum {
    /// Sorts `values` descending.
    pub fn new(mut values: Vec<f64>, tol: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values, tol }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `λ_i`, 1-based.
    pub fn lambda(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    pub fn trace(&self) -> f64 {
        self.values.iter().sum()
    }
}

/// Spectrum of a distance matrix.
pub fn eigenvalues(d: &DistanceMatrix, tol: f64) -> Result<Spectrum> {
    if !(tol > 0.0) {
        return Err(Error::contract(format!("tolerance must be positive, got {tol}")));
    }
    let n = d.order();
    let a = d.to_f64();
    Ok(Spectrum::new(jacobi::cyclic_jacobi(a, n, tol)?, tol))
}

/// Spectrum of an arbitrary real matrix given by rows; it must be exactly symmetric.
pub fn symmetric_eigenvalues(rows: &[Vec<f64>], tol: f64) -> Result<Spectrum> {
    let n = rows.len();
    if !(tol > 0.0) {
        return Err(Error::contract(format!("tolerance must be positive, got {tol}")));
    }
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::contract("matrix is not square"));
    }
    for i in 0..n {
        for j in 0..i {
            if rows[i][j] != rows[j][i] {
                return Err(Error::contract(format!("matrix is not symmetric at ({j}, {i})")));
            }
        }
    }
    let a = rows.iter().flatten().copied().collect();
    Ok(Spectrum::new(jacobi::cyclic_jacobi(a, n, tol)?, tol))
}

/// Cauchy interlacing `λ_{n-m+i} - tol <= μ_i <= λ_i + tol` for `i = 1..m`.
pub fn interlacing_check(parent: &Spectrum, child: &Spectrum, tol: f64) -> Result<bool> {
    let (n, m) = (parent.len(), child.len());
    if m > n {
        return Err(Error::contract(format!("child order {m} exceeds parent order {n}")));
    }
    Ok((1..=m).all(|i| {
        let mu = child.lambda(i);
        parent.lambda(n - m + i) - tol <= mu && mu <= parent.lambda(i) + tol
    }))
}

/// Entries within `cluster_tol` of `value`.
pub fn multiplicity(s: &Spectrum, value: f64, cluster_tol: f64) -> usize {
    s.values.iter().filter(|&&x| (x - value).abs() <= cluster_tol).count()
}
