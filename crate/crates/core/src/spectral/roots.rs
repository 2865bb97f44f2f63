//! Exact real-root counting: Yun square-free decomposition followed by
//! Sturm sequences over the rationals.

use crate::{Error, IntPolynomial, Rational, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use std::fmt;

/// Dense rational polynomial, constant first, normalized.
#[derive(Clone, Debug, PartialEq)]
struct RatPoly(Vec<Rational>);

impl RatPoly {
    fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        RatPoly(c)
    }

    fn from_int(p: &IntPolynomial) -> Self {
        Self::new(p.coeffs().iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    fn derivative(&self) -> Self {
        Self::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    fn monic(&self) -> Self {
        match self.0.last() {
            Some(lead) => Self::new(self.0.iter().map(|c| c / lead).collect()),
            None => self.clone(),
        }
    }

    fn sub(&self, o: &Self) -> Self {
        let len = self.0.len().max(o.0.len());
        let z = Rational::zero();
        Self::new(
            (0..len)
                .map(|i| self.0.get(i).unwrap_or(&z) - o.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut r = self.0.clone();
        let dd = d.degree();
        let lead = d.0.last().unwrap();
        if r.len() <= dd {
            return (RatPoly(Vec::new()), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = &r[k + dd] / lead;
            if !coef.is_zero() {
                for (j, dj) in d.0.iter().enumerate() {
                    r[k + j] -= &coef * dj;
                }
            }
            q[k] = coef;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Strict bound: every root satisfies `|x| < 1 + max |a_i / a_n|`.
    fn cauchy_bound(&self) -> Rational {
        let lead = self.0.last().expect("nonzero polynomial").abs();
        let m = self.0[..self.0.len() - 1]
            .iter()
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_else(Rational::zero);
        m + Rational::one()
    }
}

fn sign(q: &Rational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// Sturm chain of a square-free polynomial.
#[derive(Clone, Debug)]
struct Sturm {
    base: RatPoly,
    chain: Vec<RatPoly>,
}

impl Sturm {
    fn new(p: RatPoly) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        while !chain.last().unwrap().is_zero() {
            let k = chain.len();
            let r = chain[k - 2].div_rem(&chain[k - 1]).1;
            chain.push(RatPoly::new(r.0.into_iter().map(|c| -c).collect()));
        }
        chain.pop();
        Sturm { base: p, chain }
    }

    fn variations(&self, x: &Rational) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for p in &self.chain {
            let s = sign(&p.eval(x));
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }

    /// Distinct roots in `(a, b]`.
    fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        if a >= b {
            return 0;
        }
        self.variations(a) - self.variations(b)
    }
}

/// Interval endpoint: an exact rational or an infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Endpoint {
    pub fn int(v: i64) -> Self {
        Endpoint::Finite(Rational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Endpoint::Finite(Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    fn rank(&self) -> u8 {
        match self {
            Endpoint::NegInf => 0,
            Endpoint::Finite(_) => 1,
            Endpoint::PosInf => 2,
        }
    }

    fn lt(&self, o: &Endpoint) -> bool {
        match (self, o) {
            (Endpoint::Finite(a), Endpoint::Finite(b)) => a < b,
            _ => self.rank() < o.rank(),
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::NegInf => write!(f, "-inf"),
            Endpoint::PosInf => write!(f, "+inf"),
            Endpoint::Finite(q) => write!(f, "{q}"),
        }
    }
}

impl Serialize for Endpoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Real roots of an integer polynomial, counted exactly with multiplicity.
#[derive(Clone, Debug)]
pub struct ExactRoots {
    degree: usize,
    /// `(multiplicity, Sturm chain of the square-free factor)`.
    factors: Vec<(usize, Sturm)>,
    bound: Rational,
}

impl ExactRoots {
    pub fn new(p: &IntPolynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::contract("root counting needs a nonzero polynomial"));
        }
        let f = RatPoly::from_int(p);
        let bound = f.cauchy_bound();
        let mut factors = Vec::new();
        if f.degree() > 0 {
            // Yun
            let fp = f.derivative();
            let a0 = f.gcd(&fp);
            let mut b = f.div_rem(&a0).0;
            let c = fp.div_rem(&a0).0;
            let mut d = c.sub(&b.derivative());
            let mut i = 1;
            while b.degree() > 0 {
                let a = b.gcd(&d);
                let nb = b.div_rem(&a).0;
                let nc = d.div_rem(&a).0;
                d = nc.sub(&nb.derivative());
                if a.degree() > 0 {
                    factors.push((i, Sturm::new(a)));
                }
                b = nb;
                i += 1;
            }
        }
        Ok(ExactRoots {
            degree: f.degree(),
            factors,
            bound,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn resolve(&self, e: &Endpoint) -> Rational {
        match e {
            Endpoint::NegInf => -self.bound.clone(),
            Endpoint::PosInf => self.bound.clone(),
            Endpoint::Finite(q) => q.clone(),
        }
    }

    /// Multiplicity of `c` as a root.
    pub fn multiplicity_at(&self, c: &Rational) -> usize {
        self.factors
            .iter()
            .filter(|(_, s)| s.base.eval(c).is_zero())
            .map(|(m, _)| m)
            .sum()
    }

    /// `(distinct, with multiplicity)` root counts in the open interval `(lo, hi)`.
    pub fn count_open(&self, lo: &Endpoint, hi: &Endpoint) -> (usize, usize) {
        let (a, b) = (self.resolve(lo), self.resolve(hi));
        let mut distinct = 0;
        let mut total = 0;
        for (m, s) in &self.factors {
            let mut k = s.count_half_open(&a, &b);
            if matches!(hi, Endpoint::Finite(_)) && k > 0 && s.base.eval(&b).is_zero() {
                k -= 1;
            }
            distinct += k;
            total += k * m;
        }
        (distinct, total)
    }

    /// Roots strictly greater than `c`, with multiplicity.
    pub fn count_above(&self, c: &Rational) -> usize {
        self.count_open(&Endpoint::Finite(c.clone()), &Endpoint::PosInf).1
    }

    /// Roots `>= c`, with multiplicity.
    pub fn count_at_least(&self, c: &Rational) -> usize {
        self.count_above(c) + self.multiplicity_at(c)
    }

    /// Number of real roots with multiplicity.
    pub fn real_count(&self) -> usize {
        self.count_open(&Endpoint::NegInf, &Endpoint::PosInf).1
    }

    /// Real roots with multiplicity, descending, refined by exact bisection
    /// until the isolating interval is narrower than `2^-bits` and then rounded.
    pub fn real_roots_f64(&self, bits: u32) -> Vec<f64> {
        let width = Rational::new(BigInt::one(), BigInt::one() << bits);
        let mut out = Vec::new();
        for (m, s) in &self.factors {
            let mut stack = vec![(-self.bound.clone(), self.bound.clone())];
            while let Some((a, b)) = stack.pop() {
                let k = s.count_half_open(&a, &b);
                if k == 0 {
                    continue;
                }
                if k > 1 {
                    let mid = (&a + &b) / Rational::from_integer(BigInt::from(2));
                    stack.push((a, mid.clone()));
                    stack.push((mid, b));
                    continue;
                }
                // one simple root in (a, b]: bisect on the sign of the base
                // polynomial, which changes exactly once there
                let (mut a, mut b) = (a, b);
                let sb = sign(&s.base.eval(&b));
                while sb != 0 && &b - &a > width {
                    let mid = (&a + &b) / Rational::from_integer(BigInt::from(2));
                    let sm = sign(&s.base.eval(&mid));
                    if sm == 0 {
                        b = mid;
                        break;
                    }
                    if sm == sb {
                        b = mid;
                    } else {
                        a = mid;
                    }
                }
                let v = b.to_f64().unwrap_or(f64::NAN);
                out.extend(std::iter::repeat_n(v, *m));
            }
        }
        out.sort_by(|x, y| y.total_cmp(x));
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BracketEntry {
    pub lo: Endpoint,
    pub hi: Endpoint,
    pub expected: usize,
    pub distinct: usize,
    pub with_multiplicity: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct RootBracketReport {
    pub polynomial: IntPolynomial,
    pub intervals: Vec<BracketEntry>,
    pub pass: bool,
}

/// Counts the roots of `p` in each open interval; an entry passes when its
/// count with multiplicity equals the expected count.
pub fn root_brackets(p: &IntPolynomial, intervals: &[(Endpoint, Endpoint, usize)]) -> Result<RootBracketReport> {
    let roots = ExactRoots::new(p)?;
    let mut entries = Vec::with_capacity(intervals.len());
    for (lo, hi, expected) in intervals {
        if !lo.lt(hi) {
            return Err(Error::contract(format!("empty interval ({lo}, {hi})")));
        }
        let (distinct, with_multiplicity) = roots.count_open(lo, hi);
        entries.push(BracketEntry {
            lo: lo.clone(),
            hi: hi.clone(),
            expected: *expected,
            distinct,
            with_multiplicity,
            pass: with_multiplicity == *expected,
        });
    }
    let pass = entries.iter().all(|e| e.pass);
    Ok(RootBracketReport {
        polynomial: p.clone(),
        intervals: entries,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> Rational {
        Rational::from_integer(BigInt::from(v))
    }

    #[test]
    fn triple_root_counts() {
        let p = IntPolynomial::x_plus(1).pow(3);
        let rep = root_brackets(&p, &[(Endpoint::int(-2), Endpoint::int(0), 3)]).unwrap();
        assert_eq!(rep.intervals[0].distinct, 1);
        assert_eq!(rep.intervals[0].with_multiplicity, 3);
        assert!(rep.pass);
    }

    #[test]
    fn open_endpoints_exclude_roots() {
        // (x+1)^2 (x-2) (x+3)
        let p = &(&IntPolynomial::x_plus(1).pow(2) * &IntPolynomial::x_plus(-2)) * &IntPolynomial::x_plus(3);
        let e = ExactRoots::new(&p).unwrap();
        assert_eq!(e.count_open(&Endpoint::int(-1), &Endpoint::int(2)), (0, 0));
        assert_eq!(e.count_open(&Endpoint::int(-3), &Endpoint::int(3)), (2, 3));
        assert_eq!(e.count_open(&Endpoint::NegInf, &Endpoint::PosInf), (3, 4));
        assert_eq!(e.multiplicity_at(&r(-1)), 2);
        assert_eq!(e.count_above(&r(-1)), 1);
        assert_eq!(e.count_at_least(&r(-1)), 3);
        assert_eq!(e.real_roots_f64(60), vec![2.0, -1.0, -1.0, -3.0]);
    }

    #[test]
    fn complex_roots_are_not_counted() {
        let p = IntPolynomial::from_i64(&[1, 0, 1]);
        assert_eq!(ExactRoots::new(&p).unwrap().real_count(), 0);
    }

    #[test]
    fn irrational_refinement() {
        // x^2 - 2
        let roots = ExactRoots::new(&IntPolynomial::from_i64(&[-2, 0, 1]))
            .unwrap()
            .real_roots_f64(60);
        assert!((roots[0] - 2f64.sqrt()).abs() < 1e-15);
        assert!((roots[1] + 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn empty_interval_is_rejected() {
        let p = IntPolynomial::x_plus(1);
        assert!(root_brackets(&p, &[(Endpoint::int(0), Endpoint::int(0), 0)]).is_err());
        assert!(root_brackets(&p, &[(Endpoint::PosInf, Endpoint::int(0), 0)]).is_err());
        assert!(ExactRoots::new(&IntPolynomial::zero()).is_err());
    }

    #[test]
    fn endpoint_json() {
        assert_eq!(serde_json::to_string(&Endpoint::ratio(-1, 2)).unwrap(), "\"-1/2\"");
        assert_eq!(serde_json::to_string(&Endpoint::NegInf).unwrap(), "\"-inf\"");
    }
}
