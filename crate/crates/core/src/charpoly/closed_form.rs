use super::IntPolynomial;
use crate::graph::{FamilySpec, Validation};
use crate::{Error, Rational, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

fn x_plus_pow(c: i64, e: usize) -> IntPolynomial {
    IntPolynomial::x_plus(c).pow(e as u32)
}

fn big(x: usize) -> i64 {
    x as i64
}

/// The non-trivial factor of the family polynomial: the cubic for `Kh` and
/// `KstGlued`, the quartic for `KstBridge`, the quadratic for `Friendship`.
pub fn reduced_factor(spec: &FamilySpec) -> Result<IntPolynomial> {
    spec.validate(Validation::Strict)?;
    Ok(match *spec {
        FamilySpec::Kh { n, h } => {
            let (n, h) = (big(n), big(h));
            IntPolynomial::from_i64(&[
                -n * h + h * h - 2 * h + 2,
                5 - 2 * h - 2 * n * h + 2 * h * h - n,
                h + 4 - 2 * n,
                1,
            ])
        }
        FamilySpec::KstBridge { s, t } => {
            let (s, t) = (big(s), big(t));
            IntPolynomial::from_i64(&[
                -5 * s * t + 2 * s + 2 * t,
                6 * s + 6 * t - 14 * s * t,
                2 * t + 2 * s - 8 * s * t + 4,
                -s - t + 4,
                1,
            ])
        }
        FamilySpec::KstGlued { s, t } => {
            let (s, t) = (big(s), big(t));
            IntPolynomial::from_i64(&[s + t - 2 * s * t, 2 + s + t - 3 * s * t, -s - t + 4, 1])
        }
        FamilySpec::Friendship { k } => {
            let k = big(k);
            IntPolynomial::from_i64(&[-2 * k, -(4 * k - 3), 1])
        }
        _ => return Err(Error::Unsupported(spec.to_string())),
    })
}

/// Fully expanded closed-form distance characteristic polynomial.
pub fn closed_form(spec: &FamilySpec) -> Result<IntPolynomial> {
    if let FamilySpec::CliqueCone { parts } = spec {
        spec.validate(Validation::Strict)?;
        return Ok(cone_polynomial(parts));
    }
    let f = reduced_factor(spec)?;
    Ok(match *spec {
        FamilySpec::Kh { n, h } => &(&x_plus_pow(1, h - 2) * &x_plus_pow(2, n - h - 1)) * &f,
        FamilySpec::KstBridge { s, t } => &x_plus_pow(1, s + t - 4) * &f,
        FamilySpec::KstGlued { s, t } => &x_plus_pow(1, s + t - 4) * &f,
        FamilySpec::Friendship { k } => &(&x_plus_pow(1, k) * &x_plus_pow(3, k - 1)) * &f,
        _ => unreachable!("reduced_factor rejects other families"),
    })
}

/// Cone over disjoint cliques `K_1 ∇ (K_{n_1} ∪ … ∪ K_{n_k})`:
///
/// `(x+1)^{n-k-1} (x - Σ n_i(2x+1)/(x+n_i+1)) Π (x+n_i+1)`
///
/// with the rational part cleared symbolically, i.e. each summand multiplied
/// by the product of the other denominators.
pub fn cone_polynomial(parts: &[usize]) -> IntPolynomial {
    let k = parts.len();
    let n = 1 + parts.iter().sum::<usize>();
    let denoms: Vec<IntPolynomial> = parts.iter().map(|&p| IntPolynomial::x_plus(big(p) + 1)).collect();
    let all = denoms.iter().fold(IntPolynomial::one(), |acc, d| &acc * d);
    let mut bracket = &IntPolynomial::from_i64(&[0, 1]) * &all;
    for (i, &ni) in parts.iter().enumerate() {
        let others = denoms
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(IntPolynomial::one(), |acc, (_, d)| &acc * d);
        let term = &IntPolynomial::from_i64(&[big(ni), 2 * big(ni)]) * &others;
        bracket = &bracket - &term;
    }
    &x_plus_pow(1, n - k - 1) * &bracket
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sign {
    #[serde(rename = "-")]
    Negative,
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "+")]
    Positive,
}

impl Sign {
    pub fn of(q: &Rational) -> Sign {
        if q.is_zero() {
            Sign::Zero
        } else if q.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// One evaluation of the reduced factor at a checkpoint.
#[derive(Debug, Clone, Serialize)]
pub struct SignCheckpoint {
    #[serde(serialize_with = "crate::json::display")]
    pub point: Rational,
    #[serde(serialize_with = "crate::json::display")]
    pub value: Rational,
    /// The same value from the simplified parametric expression.
    #[serde(serialize_with = "crate::json::display")]
    pub expression_value: Rational,
    pub expression: &'static str,
    pub expected: Sign,
    pub observed: Sign,
    /// Strict upper bound used to establish the sign, when one is stated.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "display_opt")]
    pub upper_bound: Option<Rational>,
    pub pass: bool,
}

fn display_opt<S: serde::Serializer>(x: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(q) => s.collect_str(q),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SignReport {
    pub spec: FamilySpec,
    pub factor: IntPolynomial,
    pub checkpoints: Vec<SignCheckpoint>,
    pub pass: bool,
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Evaluates the reduced factor exactly at the checkpoints used to locate its
/// roots, comparing value, simplified expression and expected sign.
pub fn sign_conditions(spec: &FamilySpec) -> Result<SignReport> {
    use Sign::*;
    let f = reduced_factor(spec)?;
    // (point, expected sign, expression text, expression value, optional strict upper bound)
    type Row = (Rational, Sign, &'static str, Rational, Option<Rational>);
    let rows: Vec<Row> = match *spec {
        FamilySpec::Kh { n, h } => {
            let (n, h) = (big(n), big(h));
            vec![
                (
                    q(0, 1),
                    Negative,
                    "-nh+h^2-2h+2",
                    q(-n * h + h * h - 2 * h + 2, 1),
                    None,
                ),
                (q(-1, 2), Negative, "3/8-3h/4", q(3, 8) - q(3 * h, 4), None),
                (q(-1, 1), Positive, "(n-h)(h-1)", q((n - h) * (h - 1), 1), None),
                (q(-2, 1), Positive, "(n-h)(3h-6)", q((n - h) * (3 * h - 6), 1), None),
            ]
        }
        FamilySpec::KstBridge { s, t } => {
            let (s, t) = (big(s), big(t));
            vec![
                (
                    q(0, 1),
                    Negative,
                    "-5st+2s+2t",
                    q(-5 * s * t + 2 * s + 2 * t, 1),
                    Some(q(2 - 3 * s * t, 1)),
                ),
                (
                    q(-1, 2),
                    Negative,
                    "9/16-3s/8-3t/8",
                    q(9, 16) - q(3 * s, 8) - q(3 * t, 8),
                    None,
                ),
                (q(-1, 1), Positive, "1-s-t+st", q(1 - s - t + s * t, 1), None),
                (
                    q(-2, 1),
                    Negative,
                    "6s+6t-9st",
                    q(6 * s + 6 * t - 9 * s * t, 1),
                    Some(q(6 - 3 * s * t, 1)),
                ),
            ]
        }
        FamilySpec::KstGlued { s, t } => {
            let (s, t) = (big(s), big(t));
            vec![
                (
                    q(0, 1),
                    Negative,
                    "s+t-2st",
                    q(s + t - 2 * s * t, 1),
                    Some(q(1 - s * t, 1)),
                ),
                (q(-2, 3), Negative, "4/27-s/9-t/9", q(4, 27) - q(s, 9) - q(t, 9), None),
                (q(-1, 1), Positive, "1-s-t+st", q(1 - s - t + s * t, 1), None),
            ]
        }
        _ => {
            return Err(Error::validation(
                spec.name(),
                "sign conditions exist only for kh, kst-bridge, kst-glued",
            ))
        }
    };
    let checkpoints: Vec<SignCheckpoint> = rows
        .into_iter()
        .map(|(point, expected, expression, expression_value, upper_bound)| {
            let value = f.eval_rational(&point);
            let observed = Sign::of(&value);
            let bound_ok = upper_bound.as_ref().is_none_or(|b| &value < b);
            let pass = observed == expected && value == expression_value && bound_ok;
            SignCheckpoint {
                point,
                value,
                expression_value,
                expression,
                expected,
                observed,
                upper_bound,
                pass,
            }
        })
        .collect();
    let pass = checkpoints.iter().all(|c| c.pass);
    Ok(SignReport {
        spec: spec.clone(),
        factor: f,
        checkpoints,
        pass,
    })
}
