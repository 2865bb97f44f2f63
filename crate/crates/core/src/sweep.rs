//! Parameter sweeps over the families with closed forms: polynomial identity,
//! sign conditions, root brackets, eigenvalue claims and distinctness.

use crate::charpoly::{closed_form, reduced_factor, sign_conditions, SignReport};
use crate::graph::{are_isomorphic, make_family, FamilySpec};
use crate::spectral::{claimed_brackets, family_claims, root_brackets, ClaimReport, RootBracketReport};
use crate::{apsp, dist_charpoly, Error, IntPolynomial, Result};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepKind {
    Kh,
    KstBridge,
    KstGlued,
    Friendship,
    Cone,
}

impl SweepKind {
    pub const ALL: [SweepKind; 5] = [
        SweepKind::Kh,
        SweepKind::KstBridge,
        SweepKind::KstGlued,
        SweepKind::Friendship,
        SweepKind::Cone,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SweepKind::Kh => "kh",
            SweepKind::KstBridge => "kst-bridge",
            SweepKind::KstGlued => "kst-glued",
            SweepKind::Friendship => "friendship",
            SweepKind::Cone => "cone",
        }
    }
}

impl FromStr for SweepKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SweepKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("no sweep for kind {s:?}")))
    }
}

impl fmt::Display for SweepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Upper limits of a sweep. `n_max` bounds the order, `k_max` the number of
/// friendship triangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepLimits {
    pub n_max: usize,
    pub k_max: usize,
}

impl SweepLimits {
    /// The default ranges for one family: orders up to 12 (10 for cones),
    /// friendship up to 6 triangles.
    pub fn standard(kind: SweepKind) -> Self {
        SweepLimits {
            n_max: if kind == SweepKind::Cone { 10 } else { 12 },
            k_max: 6,
        }
    }
}

fn compositions(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for mut rest in compositions(total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every strict member of a family within the limits, in a fixed order.
pub fn sweep_members(kind: SweepKind, limits: SweepLimits) -> Vec<FamilySpec> {
    let n_max = limits.n_max;
    let mut out = Vec::new();
    match kind {
        SweepKind::Kh => {
            for n in 4..=n_max {
                for h in 3..n {
                    out.push(FamilySpec::Kh { n, h });
                }
            }
        }
        SweepKind::KstBridge => {
            for s in 2..=n_max {
                for t in 2..=n_max.saturating_sub(s) {
                    out.push(FamilySpec::KstBridge { s, t });
                }
            }
        }
        SweepKind::KstGlued => {
            for s in 2..=n_max {
                for t in 2..=(n_max + 1).saturating_sub(s) {
                    out.push(FamilySpec::KstGlued { s, t });
                }
            }
        }
        SweepKind::Friendship => {
            for k in 2..=limits.k_max {
                out.push(FamilySpec::Friendship { k });
            }
        }
        SweepKind::Cone => {
            for m in 1..n_max {
                for parts in compositions(m) {
                    out.push(FamilySpec::CliqueCone { parts });
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct ClosedFormSweep {
    pub all_equal: bool,
    pub cases: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub mismatches: Vec<FamilySpec>,
}

/// Closed form against the polynomial of the constructed distance matrix.
pub fn closed_form_sweep(kind: SweepKind, limits: SweepLimits) -> Result<ClosedFormSweep> {
    let members = sweep_members(kind, limits);
    let mut mismatches = Vec::new();
    for spec in &members {
        let computed = dist_charpoly(&apsp(&make_family(spec)?)?);
        if closed_form(spec)? != computed {
            mismatches.push(spec.clone());
        }
    }
    Ok(ClosedFormSweep {
        all_equal: mismatches.is_empty(),
        cases: members.len(),
        mismatches,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SignSweepCase {
    pub sign: SignReport,
    pub brackets: RootBracketReport,
}

/// Sign checkpoints and root brackets for the reduced factor of each member.
/// Only failing cases are kept in `failures`.
#[derive(Debug, Clone, Serialize)]
pub struct SignSweep {
    pub kind: SweepKind,
    pub cases: usize,
    pub checkpoints: usize,
    pub intervals: usize,
    pub failures: Vec<SignSweepCase>,
    pub pass: bool,
}

pub fn sign_case(spec: &FamilySpec) -> Result<SignSweepCase> {
    let intervals = claimed_brackets(spec).ok_or_else(|| Error::Unsupported(format!("no root brackets for {spec}")))?;
    Ok(SignSweepCase {
        sign: sign_conditions(spec)?,
        brackets: root_brackets(&reduced_factor(spec)?, &intervals)?,
    })
}

pub fn sign_sweep(kind: SweepKind, limits: SweepLimits) -> Result<SignSweep> {
    let members = sweep_members(kind, limits);
    let (mut checkpoints, mut intervals, mut failures) = (0, 0, Vec::new());
    for spec in &members {
        let case = sign_case(spec)?;
        checkpoints += case.sign.checkpoints.len();
        intervals += case.brackets.intervals.len();
        if !(case.sign.pass && case.brackets.pass) {
            failures.push(case);
        }
    }
    Ok(SignSweep {
        kind,
        cases: members.len(),
        checkpoints,
        intervals,
        pass: failures.is_empty(),
        failures,
    })
}

/// Eigenvalue-location claims over a sweep; failing reports are kept whole.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimSweep {
    pub kind: SweepKind,
    pub cases: usize,
    pub claims: usize,
    pub failures: Vec<ClaimReport>,
    /// Pendant-clique members where the `λ_{n-1}` rule mispredicts.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub penultimate_rule_exceptions: Vec<FamilySpec>,
    pub pass: bool,
}

pub fn claim_sweep(kind: SweepKind, limits: SweepLimits) -> Result<ClaimSweep> {
    let members = sweep_members(kind, limits);
    let (mut claims, mut failures, mut exceptions) = (0, Vec::new(), Vec::new());
    for spec in &members {
        let r = family_claims(spec)?;
        claims += r.outcomes.len();
        if r.penultimate.as_ref().is_some_and(|p| !p.rule_holds) {
            exceptions.push(spec.clone());
        }
        if !r.pass {
            failures.push(r);
        }
    }
    Ok(ClaimSweep {
        kind,
        cases: members.len(),
        claims,
        pass: failures.is_empty(),
        failures,
        penultimate_rule_exceptions: exceptions,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SpecPair {
    pub first: FamilySpec,
    pub second: FamilySpec,
}

#[derive(Debug, Clone, Serialize)]
pub struct DistinctnessReport {
    pub members: usize,
    pub polynomial_classes: usize,
    /// Non-isomorphic members sharing a polynomial.
    pub collisions: Vec<SpecPair>,
    /// Members sharing a polynomial because they are the same graph.
    pub isomorphic_coincidences: Vec<SpecPair>,
    /// `KstGlued(2, t)` is isomorphic to `Kh(t+1, t)` for every `t >= 3` swept.
    pub glued_two_is_pendant_clique: bool,
    pub pass: bool,
}

/// Pairwise polynomial distinctness across the pendant-clique and clique-pair
/// families with order at most `n_max`.
pub fn distinctness_check(n_max: usize) -> Result<DistinctnessReport> {
    let limits = SweepLimits { n_max, k_max: 0 };
    let members: Vec<FamilySpec> = [SweepKind::Kh, SweepKind::KstBridge, SweepKind::KstGlued]
        .into_iter()
        .flat_map(|k| sweep_members(k, limits))
        .collect();
    let mut graphs = Vec::with_capacity(members.len());
    let mut classes: HashMap<IntPolynomial, Vec<usize>> = HashMap::new();
    for (i, spec) in members.iter().enumerate() {
        let g = make_family(spec)?;
        classes.entry(dist_charpoly(&apsp(&g)?)).or_default().push(i);
        graphs.push(g);
    }
    let (mut collisions, mut coincidences) = (Vec::new(), Vec::new());
    let mut groups: Vec<&Vec<usize>> = classes.values().collect();
    groups.sort();
    for idx in groups {
        for (a, &i) in idx.iter().enumerate() {
            for &j in &idx[a + 1..] {
                let pair = SpecPair {
                    first: members[i].clone(),
                    second: members[j].clone(),
                };
                if are_isomorphic(&graphs[i], &graphs[j]) {
                    coincidences.push(pair);
                } else {
                    collisions.push(pair);
                }
            }
        }
    }
    let mut glued_ok = true;
    for t in 3..n_max {
        let glued = make_family(&FamilySpec::KstGlued { s: 2, t })?;
        let kh = make_family(&FamilySpec::Kh { n: t + 1, h: t })?;
        glued_ok &= are_isomorphic(&glued, &kh);
    }
    Ok(DistinctnessReport {
        members: members.len(),
        polynomial_classes: classes.len(),
        pass: collisions.is_empty() && glued_ok,
        collisions,
        isomorphic_coincidences: coincidences,
        glued_two_is_pendant_clique: glued_ok,
    })
}
