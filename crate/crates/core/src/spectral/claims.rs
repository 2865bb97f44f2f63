use super::{eigenvalues, Endpoint, ExactRoots, DEFAULT_TOL};
use crate::graph::{apsp, make_family, FamilySpec, Validation};
use crate::{dist_charpoly, Error, IntPolynomial, Rational, Result};
use num_bigint::BigInt;
use serde::Serialize;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A statement about the `index`-th largest eigenvalue (1-based).
#[derive(Debug, Clone, PartialEq)]
pub enum Claim {
    Between { index: usize, lo: Rational, hi: Rational },
    Equals { index: usize, value: Rational },
    Above { index: usize, value: Rational },
    Below { index: usize, value: Rational },
    OneOf { index: usize, values: Vec<Rational> },
}

impl Claim {
    pub fn index(&self) -> usize {
        match self {
            Claim::Between { index, .. }
            | Claim::Equals { index, .. }
            | Claim::Above { index, .. }
            | Claim::Below { index, .. }
            | Claim::OneOf { index, .. } => *index,
        }
    }

    fn describe(&self, slot: &str) -> String {
        match self {
            Claim::Between { lo, hi, .. } => format!("lambda_{slot} in ({lo}, {hi})"),
            Claim::Equals { value, .. } => format!("lambda_{slot} = {value}"),
            Claim::Above { value, .. } => format!("lambda_{slot} > {value}"),
            Claim::Below { value, .. } => format!("lambda_{slot} < {value}"),
            Claim::OneOf { values, .. } => {
                let v: Vec<String> = values.iter().map(|x| x.to_string()).collect();
                format!("lambda_{slot} in {{{}}}", v.join(", "))
            }
        }
    }
}

/// Decides a claim from exact root counts with multiplicity:
/// `λ_i > c` iff at least `i` roots exceed `c`, `λ_i < c` iff at most `i-1`
/// roots are `>= c`, and `λ_i = c` iff both `#{> c} <= i-1` and `#{>= c} >= i`.
pub fn check_claim(roots: &ExactRoots, claim: &Claim) -> bool {
    let i = claim.index();
    if i == 0 || i > roots.real_count() {
        return false;
    }
    let above = |c: &Rational| roots.count_above(c) >= i;
    let below = |c: &Rational| roots.count_at_least(c) < i;
    let equals = |c: &Rational| roots.count_above(c) < i && roots.count_at_least(c) >= i;
    match claim {
        Claim::Between { lo, hi, .. } => above(lo) && below(hi),
        Claim::Equals { value, .. } => equals(value),
        Claim::Above { value, .. } => above(value),
        Claim::Below { value, .. } => below(value),
        Claim::OneOf { values, .. } => values.iter().any(equals),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimOutcome {
    pub claim: String,
    pub index: usize,
    /// Jacobi value of the eigenvalue in question, for display.
    #[serde(serialize_with = "crate::json::fixed6")]
    pub approx: f64,
    pub pass: bool,
}

/// Which value the `(n-1)`-th eigenvalue of a pendant-clique graph takes,
/// against the rule "`-2` iff `n >= h + 2`".
#[derive(Debug, Clone, Serialize)]
pub struct PenultimateObservation {
    pub observed: Option<i64>,
    pub rule_prediction: i64,
    pub rule_holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub spec: FamilySpec,
    pub order: usize,
    pub polynomial: IntPolynomial,
    pub outcomes: Vec<ClaimOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub penultimate: Option<PenultimateObservation>,
    pub pass: bool,
}

fn slot(index: usize, n: usize) -> String {
    match n - index {
        0 => "n".into(),
        1 if index > 3 => "{n-1}".into(),
        _ => index.to_string(),
    }
}

fn claims_for(spec: &FamilySpec, n: usize) -> Result<Vec<Claim>> {
    use Claim::*;
    let c = |v: i64| q(v, 1);
    Ok(match spec {
        FamilySpec::Kh { .. } => vec![
            Above { index: 1, value: c(0) },
            Between {
                index: 2,
                lo: c(-1),
                hi: q(-1, 2),
            },
            Equals { index: 3, value: c(-1) },
            OneOf {
                index: n - 1,
                values: vec![c(-1), c(-2)],
            },
            Below { index: n, value: c(-2) },
        ],
        FamilySpec::KstBridge { .. } => vec![
            Above { index: 1, value: c(0) },
            Between {
                index: 2,
                lo: c(-1),
                hi: q(-1, 2),
            },
            Equals { index: 3, value: c(-1) },
            Between {
                index: n - 1,
                lo: c(-2),
                hi: c(-1),
            },
            Below { index: n, value: c(-2) },
        ],
        FamilySpec::KstGlued { .. } => vec![
            Above { index: 1, value: c(0) },
            Between {
                index: 2,
                lo: c(-1),
                hi: q(-2, 3),
            },
            Equals { index: 3, value: c(-1) },
            Equals {
                index: n - 1,
                value: c(-1),
            },
            Below { index: n, value: c(-2) },
        ],
        FamilySpec::Friendship { .. } => vec![
            Between {
                index: 2,
                lo: c(-1),
                hi: q(-1, 2),
            },
            Equals { index: 3, value: c(-1) },
            Equals { index: n, value: c(-3) },
        ],
        _ => return Err(Error::Unsupported(format!("no eigenvalue claims for {spec}"))),
    })
}

/// Checks the eigenvalue-location statements for a family member exactly,
/// from the characteristic polynomial of its computed distance matrix.
pub fn family_claims(spec: &FamilySpec) -> Result<ClaimReport> {
    spec.validate(Validation::Strict)?;
    let g = make_family(spec)?;
    let n = g.order();
    let claims = claims_for(spec, n)?;
    let d = apsp(&g)?;
    let p = dist_charpoly(&d);
    let roots = ExactRoots::new(&p)?;
    let spectrum = eigenvalues(&d, DEFAULT_TOL)?;
    let outcomes: Vec<ClaimOutcome> = claims
        .iter()
        .map(|cl| ClaimOutcome {
            claim: cl.describe(&slot(cl.index(), n)),
            index: cl.index(),
            approx: spectrum.lambda(cl.index()),
            pass: check_claim(&roots, cl),
        })
        .collect();
    let penultimate = match *spec {
        FamilySpec::Kh { n, h } => {
            let observed = [-1, -2].into_iter().find(|&v| {
                check_claim(
                    &roots,
                    &Claim::Equals {
                        index: n - 1,
                        value: q(v, 1),
                    },
                )
            });
            let rule_prediction = if n >= h + 2 { -2 } else { -1 };
            Some(PenultimateObservation {
                observed,
                rule_prediction,
                rule_holds: observed == Some(rule_prediction),
            })
        }
        _ => None,
    };
    let pass = outcomes.iter().all(|o| o.pass);
    Ok(ClaimReport {
        spec: spec.clone(),
        order: n,
        polynomial: p,
        outcomes,
        penultimate,
        pass,
    })
}

/// Intervals claimed to hold exactly one root of each reduced factor.
pub fn claimed_brackets(spec: &FamilySpec) -> Option<Vec<(Endpoint, Endpoint, usize)>> {
    use Endpoint::*;
    Some(match spec {
        FamilySpec::Kh { .. } => vec![
            (NegInf, Endpoint::int(-2), 1),
            (Endpoint::int(-1), Endpoint::ratio(-1, 2), 1),
            (Endpoint::int(0), PosInf, 1),
        ],
        FamilySpec::KstBridge { .. } => vec![
            (NegInf, Endpoint::int(-2), 1),
            (Endpoint::int(-2), Endpoint::int(-1), 1),
            (Endpoint::int(-1), Endpoint::ratio(-1, 2), 1),
            (Endpoint::int(0), PosInf, 1),
        ],
        FamilySpec::KstGlued { .. } => vec![
            (NegInf, Endpoint::int(-1), 1),
            (Endpoint::int(-1), Endpoint::ratio(-2, 3), 1),
            (Endpoint::int(0), PosInf, 1),
        ],
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roots_of(c: &[i64]) -> ExactRoots {
        ExactRoots::new(&IntPolynomial::from_i64(c)).unwrap()
    }

    #[test]
    fn claims_on_explicit_roots() {
        // roots 2, -1, -1, -3
        let p = &(&IntPolynomial::x_plus(1).pow(2) * &IntPolynomial::x_plus(-2)) * &IntPolynomial::x_plus(3);
        let r = ExactRoots::new(&p).unwrap();
        assert!(check_claim(
            &r,
            &Claim::Above {
                index: 1,
                value: q(0, 1)
            }
        ));
        assert!(check_claim(
            &r,
            &Claim::Equals {
                index: 2,
                value: q(-1, 1)
            }
        ));
        assert!(check_claim(
            &r,
            &Claim::Equals {
                index: 3,
                value: q(-1, 1)
            }
        ));
        assert!(!check_claim(
            &r,
            &Claim::Equals {
                index: 4,
                value: q(-1, 1)
            }
        ));
        assert!(check_claim(
            &r,
            &Claim::Below {
                index: 4,
                value: q(-2, 1)
            }
        ));
        assert!(!check_claim(
            &r,
            &Claim::Below {
                index: 3,
                value: q(-1, 1)
            }
        ));
        assert!(check_claim(
            &r,
            &Claim::Between {
                index: 2,
                lo: q(-2, 1),
                hi: q(0, 1)
            }
        ));
        assert!(!check_claim(
            &r,
            &Claim::Between {
                index: 2,
                lo: q(-1, 1),
                hi: q(0, 1)
            }
        ));
        assert!(!check_claim(
            &r,
            &Claim::Above {
                index: 5,
                value: q(-9, 1)
            }
        ));
    }

    #[test]
    fn strictness_at_the_endpoint() {
        // x + 1/2 scaled: 2x + 1 is not monic, use x(2x+1) -> roots 0, -1/2
        let r = roots_of(&[0, 1, 2]);
        assert!(!check_claim(
            &r,
            &Claim::Between {
                index: 2,
                lo: q(-1, 1),
                hi: q(-1, 2)
            }
        ));
        assert!(check_claim(
            &r,
            &Claim::Equals {
                index: 2,
                value: q(-1, 2)
            }
        ));
    }

    #[test]
    fn pendant_triangle_claims() {
        let rep = family_claims(&FamilySpec::Kh { n: 4, h: 3 }).unwrap();
        assert!(rep.pass, "{rep:?}");
        let obs = rep.penultimate.unwrap();
        assert_eq!(obs.observed, Some(-1));
        assert!(obs.rule_holds);
        let rep = family_claims(&FamilySpec::Kh { n: 6, h: 3 }).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.penultimate.unwrap().observed, Some(-2));
    }

    #[test]
    fn smallest_bridge_and_glued_members_miss_the_minus_one_eigenvalue() {
        // bridge(2,2) is P4 and glued(2,2) is P3: no eigenvalue equals -1
        let rep = family_claims(&FamilySpec::KstBridge { s: 2, t: 2 }).unwrap();
        assert!(!rep.outcomes.iter().find(|o| o.index == 3).unwrap().pass);
        let rep = family_claims(&FamilySpec::KstGlued { s: 2, t: 2 }).unwrap();
        assert!(!rep.pass);
        assert!(family_claims(&FamilySpec::KstBridge { s: 2, t: 3 }).unwrap().pass);
        assert!(family_claims(&FamilySpec::KstGlued { s: 2, t: 3 }).unwrap().pass);
    }

    #[test]
    fn friendship_claims() {
        for k in 2..=6 {
            assert!(family_claims(&FamilySpec::Friendship { k }).unwrap().pass);
        }
    }
}
