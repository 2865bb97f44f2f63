use super::IntPolynomial;
use crate::graph::DistanceMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Fraction-free Gaussian elimination (Bareiss) determinant.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss step must divide exactly");
                m[i][j] = q;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Characteristic polynomial from `det(xI - D)` at `x = 0..=n`, interpolated
/// through Newton forward differences.
pub fn charpoly_by_interpolation(d: &DistanceMatrix) -> IntPolynomial {
    let n = d.order();
    let values: Vec<BigInt> = (0..=n)
        .map(|x| {
            let m = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let xi = if i == j { BigInt::from(x) } else { BigInt::zero() };
                            xi - BigInt::from(d.get(i, j))
                        })
                        .collect()
                })
                .collect();
            bareiss_det(m)
        })
        .collect();

    // forward differences Δ^k y_0
    let mut diffs = Vec::with_capacity(n + 1);
    let mut row = values;
    while !row.is_empty() {
        diffs.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }

    // p(x) = Σ Δ^k y_0 · C(x, k); scale by n! so every term is integral
    let n_fact: BigInt = (1..=n).map(BigInt::from).product();
    let mut acc = IntPolynomial::zero();
    let mut falling = IntPolynomial::one();
    let mut k_fact = BigInt::one();
    for (k, dk) in diffs.iter().enumerate() {
        if k > 0 {
            falling = &falling * &IntPolynomial::x_plus(-(k as i64 - 1));
            k_fact *= BigInt::from(k);
        }
        let weight = dk * (&n_fact / &k_fact);
        acc = &acc + &falling.scale(&weight);
    }
    let coeffs = acc
        .coeffs()
        .iter()
        .map(|c| {
            let (q, r) = c.div_rem(&n_fact);
            assert!(r.is_zero(), "interpolated characteristic polynomial is integral");
            q
        })
        .collect();
    IntPolynomial::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_determinants() {
        let m = |rows: &[&[i64]]| {
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect()
        };
        assert_eq!(bareiss_det(m(&[&[2, 0], &[0, 3]])), BigInt::from(6));
        assert_eq!(bareiss_det(m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(bareiss_det(m(&[&[1, 2], &[2, 4]])), BigInt::from(0));
        assert_eq!(bareiss_det(m(&[&[0, 1, 2], &[1, 0, 1], &[2, 1, 0]])), BigInt::from(4));
    }

    #[test]
    fn path_three_by_interpolation() {
        let d = DistanceMatrix::from_rows(&[vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]).unwrap();
        assert_eq!(charpoly_by_interpolation(&d), IntPolynomial::from_i64(&[-4, -6, 0, 1]));
    }
}
