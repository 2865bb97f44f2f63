use crate::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial over ℤ, constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x + c`.
    pub fn x_plus(c: i64) -> Self {
        Self::from_i64(&[c, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
    }

    /// Synthetic division by `(x - root)`: returns quotient and remainder `p(root)`.
    pub fn div_rem_linear(&self, root: &BigInt) -> (IntPolynomial, BigInt) {
        if self.coeffs.is_empty() {
            return (Self::zero(), BigInt::zero());
        }
        let mut q = vec![BigInt::zero(); self.coeffs.len() - 1];
        let mut carry = BigInt::zero();
        for i in (0..self.coeffs.len()).rev() {
            carry = &carry * root + &self.coeffs[i];
            if i > 0 {
                q[i - 1] = carry.clone();
            }
        }
        (Self::new(q), carry)
    }

    /// Multiplicity of the integer `root`, by repeated exact division.
    pub fn root_multiplicity(&self, root: i64) -> usize {
        if self.is_zero() {
            return 0;
        }
        let r = BigInt::from(root);
        let mut p = self.clone();
        let mut m = 0;
        loop {
            let (q, rem) = p.div_rem_linear(&r);
            if !rem.is_zero() || p.degree() == Some(0) {
                return m;
            }
            m += 1;
            p = q;
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Largest absolute coefficient.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// `f64` evaluation, for residual diagnostics only.
    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{a}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// `{"degree": d, "coeffs": ["c0", "c1", …]}`; the zero polynomial has degree `null`.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("IntPolynomial", 2)?;
        st.serialize_field("degree", &self.degree())?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl<'a> Add<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn normalizes_and_displays() {
        let p = IntPolynomial::from_i64(&[-3, -8, -6, 0, 1, 0, 0]);
        assert_eq!(p.degree(), Some(4));
        assert_eq!(p.to_string(), "x^4 - 6x^2 - 8x - 3");
        assert_eq!(IntPolynomial::from_i64(&[0, 0]).degree(), None);
        assert_eq!(IntPolynomial::x_plus(1).pow(3), IntPolynomial::from_i64(&[1, 3, 3, 1]));
    }

    #[test]
    fn json_shape() {
        let p = IntPolynomial::from_i64(&[-4, -6, 0, 1]);
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"degree":3,"coeffs":["-4","-6","0","1"]}"#
        );
    }

    #[test]
    fn rational_evaluation() {
        let p = IntPolynomial::from_i64(&[5, 1, 0, 1]);
        assert_eq!(p.eval_rational(&q(0, 1)), q(5, 1));
        assert_eq!(p.eval_rational(&q(-1, 2)), q(35, 8));
    }

    #[test]
    fn multiplicity_by_division() {
        let p = &IntPolynomial::x_plus(1).pow(3) * &IntPolynomial::x_plus(-3);
        assert_eq!(p.root_multiplicity(-1), 3);
        assert_eq!(p.root_multiplicity(3), 1);
        assert_eq!(p.root_multiplicity(2), 0);
        let (quot, rem) = p.div_rem_linear(&BigInt::from(3));
        assert!(rem.is_zero());
        assert_eq!(quot, IntPolynomial::x_plus(1).pow(3));
    }

    proptest! {
        #[test]
        fn evaluation_is_a_ring_homomorphism(
            a in proptest::collection::vec(-20i64..20, 0..6),
            b in proptest::collection::vec(-20i64..20, 0..6),
            x in -7i64..7,
        ) {
            let (pa, pb) = (IntPolynomial::from_i64(&a), IntPolynomial::from_i64(&b));
            let x = BigInt::from(x);
            prop_assert_eq!((&pa * &pb).eval_int(&x), pa.eval_int(&x) * pb.eval_int(&x));
            prop_assert_eq!((&pa + &pb).eval_int(&x), pa.eval_int(&x) + pb.eval_int(&x));
            prop_assert_eq!((&pa - &pb).eval_int(&x), pa.eval_int(&x) - pb.eval_int(&x));
        }
    }
}
