use crate::{Error, Result};

pub const MAX_SWEEPS: usize = 100;

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Cyclic Jacobi on a dense symmetric row-major matrix. Returns the diagonal
/// once the off-diagonal Frobenius norm drops below `tol`.
pub fn cyclic_jacobi(mut a: Vec<f64>, n: usize, tol: f64) -> Result<Vec<f64>> {
    let mut sweeps = 0;
    loop {
        let off = off_norm(&a, n);
        if off < tol {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    Ok((0..n).map(|i| a[i * n + i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let mut v = cyclic_jacobi(vec![2.0, 1.0, 1.0, 2.0], 2, 1e-14).unwrap();
        v.sort_by(|a, b| b.total_cmp(a));
        assert!((v[0] - 3.0).abs() < 1e-14 && (v[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn already_diagonal() {
        let v = cyclic_jacobi(vec![1.0, 0.0, 0.0, -4.0], 2, 1e-12).unwrap();
        assert_eq!(v, vec![1.0, -4.0]);
    }

    #[test]
    fn impossible_tolerance_reports_no_convergence() {
        let r = cyclic_jacobi(vec![0.0, 1.0, 1.0, 0.0], 2, 0.0);
        assert!(matches!(r, Err(Error::NoConvergence { .. })));
    }
}
