//! Exact distance characteristic polynomials `det(xI - D)`.
//!
//! [`dist_charpoly`] runs Faddeev–LeVerrier over the integers: every
//! division by the step index is exact for an integer matrix. Checked `i64`
//! and then `i128` passes handle desk-scale matrices; on overflow the same
//! recurrence is rerun over big integers. [`charpoly_by_interpolation`] is an independent
//! route (Bareiss determinants at integer points plus exact interpolation)
//! used for cross-validation.

mod closed_form;
mod oracle;
mod poly;

pub use closed_form::{
    closed_form, cone_polynomial, reduced_factor, sign_conditions, Sign, SignCheckpoint, SignReport,
};
pub use oracle::{bareiss_det, charpoly_by_interpolation};
pub use poly::IntPolynomial;

use crate::graph::DistanceMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

trait CheckedRing: Clone {
    fn zero() -> Self;
    fn from_u32(x: u32) -> Self;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    /// Exact division; `None` on overflow. Panics if the division is inexact.
    fn div_exact(&self, k: u32) -> Option<Self>;
    fn into_big(self) -> BigInt;
}

impl CheckedRing for i64 {
    fn zero() -> Self {
        0
    }
    fn from_u32(x: u32) -> Self {
        i64::from(x)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_exact(&self, k: u32) -> Option<Self> {
        let k = i64::from(k);
        assert_eq!(self % k, 0, "Faddeev-LeVerrier trace not divisible by step index");
        Some(self / k)
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl CheckedRing for i128 {
    fn zero() -> Self {
        0
    }
    fn from_u32(x: u32) -> Self {
        i128::from(x)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_exact(&self, k: u32) -> Option<Self> {
        let k = i128::from(k);
        assert_eq!(self % k, 0, "Faddeev-LeVerrier trace not divisible by step index");
        Some(self / k)
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl CheckedRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_u32(x: u32) -> Self {
        BigInt::from(x)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_exact(&self, k: u32) -> Option<Self> {
        let (q, r) = self.div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "Faddeev-LeVerrier trace not divisible by step index");
        Some(q)
    }
    fn into_big(self) -> BigInt {
        self
    }
}

/// Coefficients constant-first; `None` if the ring overflowed.
fn faddeev_leverrier<T: CheckedRing>(d: &DistanceMatrix) -> Option<Vec<T>> {
    let n = d.order();
    let a: Vec<T> = (0..n * n).map(|k| T::from_u32(d.get(k / n, k % n))).collect();
    let mut c = vec![T::zero(); n + 1];
    c[n] = T::from_u32(1);
    // M_1 = I
    let mut m: Vec<T> = (0..n * n).map(|k| T::from_u32(u32::from(k / n == k % n))).collect();
    let mut am = vec![T::zero(); n * n];
    for k in 1..=n {
        let mut tr = T::zero();
        if k < n {
            for i in 0..n {
                for j in 0..n {
                    let mut acc = T::zero();
                    for l in 0..n {
                        if d.get(i, l) != 0 {
                            acc = acc.add(&a[i * n + l].mul(&m[l * n + j])?)?;
                        }
                    }
                    am[i * n + j] = acc;
                }
                tr = tr.add(&am[i * n + i])?;
            }
        } else {
            // the last step only needs tr(A M_n)
            for i in 0..n {
                for l in 0..n {
                    if d.get(i, l) != 0 {
                        tr = tr.add(&a[i * n + l].mul(&m[l * n + i])?)?;
                    }
                }
            }
        }
        let ck = tr.neg()?.div_exact(k as u32)?;
        if k < n {
            for i in 0..n {
                for j in 0..n {
                    m[i * n + j] = if i == j {
                        am[i * n + j].add(&ck)?
                    } else {
                        am[i * n + j].clone()
                    };
                }
            }
        }
        c[n - k] = ck;
    }
    Some(c)
}

/// Exact monic characteristic polynomial of a distance matrix.
pub fn dist_charpoly(d: &DistanceMatrix) -> IntPolynomial {
    if let Some(c) = faddeev_leverrier::<i64>(d) {
        return to_poly(c);
    }
    match faddeev_leverrier::<i128>(d) {
        Some(c) => to_poly(c),
        None => faddeev_bigint(d),
    }
}

fn to_poly<T: CheckedRing>(c: Vec<T>) -> IntPolynomial {
    IntPolynomial::new(c.into_iter().map(CheckedRing::into_big).collect())
}

/// The big-integer route, exposed so the fast path can be checked against it.
pub fn faddeev_bigint(d: &DistanceMatrix) -> IntPolynomial {
    let c = faddeev_leverrier::<BigInt>(d).expect("big integers do not overflow");
    IntPolynomial::new(c)
}

/// Fixed-width coefficients for hot loops; `None` if `i128` overflowed.
pub fn dist_charpoly_i128(d: &DistanceMatrix) -> Option<Vec<i128>> {
    faddeev_leverrier::<i128>(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{apsp, make_family, FamilySpec};

    fn poly_of(spec: FamilySpec) -> IntPolynomial {
        dist_charpoly(&apsp(&make_family(&spec).unwrap()).unwrap())
    }

    #[test]
    fn complete_four() {
        assert_eq!(
            poly_of(FamilySpec::Complete { n: 4 }),
            IntPolynomial::from_i64(&[-3, -8, -6, 0, 1])
        );
    }

    #[test]
    fn pendant_triangle() {
        // cofactor expansion of xI - D by hand: x^4 - 12x^2 - 18x - 7 = (x+1)(x^3 - x^2 - 11x - 7)
        let p = poly_of(FamilySpec::Kh { n: 4, h: 3 });
        assert_eq!(p, IntPolynomial::from_i64(&[-7, -18, -12, 0, 1]));
        assert_eq!(
            p,
            &IntPolynomial::x_plus(1) * &IntPolynomial::from_i64(&[-7, -11, -1, 1])
        );
    }

    #[test]
    fn path_three() {
        assert_eq!(
            poly_of(FamilySpec::Path { n: 3 }),
            IntPolynomial::from_i64(&[-4, -6, 0, 1])
        );
    }

    #[test]
    fn single_vertex() {
        assert_eq!(poly_of(FamilySpec::Complete { n: 1 }), IntPolynomial::from_i64(&[0, 1]));
    }

    #[test]
    fn fast_path_agrees_with_bigint() {
        for n in 2..=20 {
            let d = apsp(&make_family(&FamilySpec::Path { n }).unwrap()).unwrap();
            assert_eq!(dist_charpoly(&d), faddeev_bigint(&d), "P{n}");
        }
    }

    #[test]
    fn long_path_fits_fast_path() {
        let d = apsp(&make_family(&FamilySpec::Path { n: 64 }).unwrap()).unwrap();
        let fast = dist_charpoly_i128(&d).expect("P64 fits in i128");
        let p = faddeev_bigint(&d);
        assert_eq!(IntPolynomial::new(fast.into_iter().map(BigInt::from).collect()), p);
        assert_eq!(p.degree(), Some(64));
        assert!(p.coeff(63).is_zero());
        assert_eq!(p.coeff(62), -BigInt::from(d.sum_of_squares()));
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        // scaled path metric: entries near 10^6 push coefficients past i128
        let n = 24;
        let rows: Vec<Vec<u32>> = (0..n)
            .map(|i: i64| {
                (0..n)
                    .map(|j: i64| ((i - j).unsigned_abs() as u32) * 1_000_000)
                    .collect()
            })
            .collect();
        let d = DistanceMatrix::from_rows(&rows).unwrap();
        assert!(dist_charpoly_i128(&d).is_none());
        let p = dist_charpoly(&d);
        assert_eq!(p, charpoly_by_interpolation(&d));
        assert_eq!(p.coeff(n as usize - 2), -BigInt::from(d.sum_of_squares()));
    }
}
