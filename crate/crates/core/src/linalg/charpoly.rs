//! Characteristic polynomial evaluation `P_M(λ) = det(λI − M)` by Gaussian
//! elimination with partial pivoting.

use std::cmp::Ordering;

use super::SymMatrix;

/// Above this order residual checks switch to [`SignedLog`] arithmetic.
pub const LOG_DETERMINANT_ORDER: usize = 80;

/// A real number stored as `sign · exp(ln_abs)`; zero has `sign == 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLog {
    pub sign: i8,
    pub ln_abs: f64,
}

impl SignedLog {
    pub const ZERO: SignedLog = SignedLog {
        sign: 0,
        ln_abs: f64::NEG_INFINITY,
    };
    pub const ONE: SignedLog = SignedLog {
        sign: 1,
        ln_abs: 0.0,
    };

    pub fn from_f64(x: f64) -> SignedLog {
        match x.partial_cmp(&0.0) {
            Some(Ordering::Greater) => SignedLog {
                sign: 1,
                ln_abs: x.ln(),
            },
            Some(Ordering::Less) => SignedLog {
                sign: -1,
                ln_abs: (-x).ln(),
            },
            _ => SignedLog::ZERO,
        }
    }

    pub fn is_zero(self) -> bool {
        self.sign == 0
    }

    pub fn times(self, other: SignedLog) -> SignedLog {
        if self.is_zero() || other.is_zero() {
            return SignedLog::ZERO;
        }
        SignedLog {
            sign: self.sign * other.sign,
            ln_abs: self.ln_abs + other.ln_abs,
        }
    }

    /// `self^k`; `x^0 = 1` including `x = 0`.
    pub fn powi(self, k: u64) -> SignedLog {
        if k == 0 {
            return SignedLog::ONE;
        }
        if self.is_zero() {
            return SignedLog::ZERO;
        }
        SignedLog {
            sign: if k.is_multiple_of(2) { 1 } else { self.sign },
            ln_abs: self.ln_abs * k as f64,
        }
    }

    /// May overflow to ±∞.
    pub fn to_f64(self) -> f64 {
        f64::from(self.sign) * self.ln_abs.exp()
    }

    /// `|self − reference| / max(1, |reference|)`, computed without leaving
    /// log space when the reference is large.
    pub fn relative_deviation(self, reference: SignedLog) -> f64 {
        if reference.is_zero() || reference.ln_abs <= 0.0 {
            return (self.to_f64() - reference.to_f64()).abs();
        }
        if self.is_zero() {
            return 1.0;
        }
        let ratio = (self.ln_abs - reference.ln_abs).exp();
        if self.sign == reference.sign {
            (ratio - 1.0).abs()
        } else {
            ratio + 1.0
        }
    }
}

/// `ln|det(M)|` with sign, from an LU factorisation of a dense row-major
/// `n × n` matrix held in `a` (overwritten).
fn lu_determinant_log(a: &mut [f64], n: usize) -> SignedLog {
    let mut sign = 1i8;
    let mut ln_abs = 0.0;
    for k in 0..n {
        let pivot_row = (k..n)
            .max_by(|&i, &j| a[i * n + k].abs().total_cmp(&a[j * n + k].abs()))
            .expect("non-empty range");
        let pivot = a[pivot_row * n + k];
        if pivot == 0.0 {
            return SignedLog::ZERO;
        }
        if pivot_row != k {
            for j in 0..n {
                a.swap(k * n + j, pivot_row * n + j);
            }
            sign = -sign;
        }
        if pivot < 0.0 {
            sign = -sign;
        }
        ln_abs += pivot.abs().ln();
        for i in k + 1..n {
            let f = a[i * n + k] / pivot;
            if f == 0.0 {
                continue;
            }
            for j in k + 1..n {
                a[i * n + j] -= f * a[k * n + j];
            }
        }
    }
    SignedLog { sign, ln_abs }
}

/// Signed log-determinant of `m`.
pub fn determinant_log(m: &SymMatrix) -> SignedLog {
    let mut a = m.as_slice().to_vec();
    lu_determinant_log(&mut a, m.order())
}

/// `det(λI − M)` in log-magnitude form.
pub fn char_poly_eval_log(m: &SymMatrix, lambda: f64) -> SignedLog {
    let n = m.order();
    let mut a: Vec<f64> = m.as_slice().iter().map(|x| -x).collect();
    for i in 0..n {
        a[i * n + i] += lambda;
    }
    lu_determinant_log(&mut a, n)
}

/// `det(λI − M)`. Overflows to ±∞ for large orders; use
/// [`char_poly_eval_log`] there.
pub fn char_poly_eval(m: &SymMatrix, lambda: f64) -> f64 {
    let n = m.order();
    let mut a: Vec<f64> = m.as_slice().iter().map(|x| -x).collect();
    for i in 0..n {
        a[i * n + i] += lambda;
    }
    let mut det = 1.0;
    for k in 0..n {
        let pivot_row = (k..n)
            .max_by(|&i, &j| a[i * n + k].abs().total_cmp(&a[j * n + k].abs()))
            .expect("non-empty range");
        let pivot = a[pivot_row * n + k];
        if pivot == 0.0 {
            return 0.0;
        }
        if pivot_row != k {
            for j in 0..n {
                a.swap(k * n + j, pivot_row * n + j);
            }
            det = -det;
        }
        det *= pivot;
        for i in k + 1..n {
            let f = a[i * n + k] / pivot;
            for j in k + 1..n {
                a[i * n + j] -= f * a[k * n + j];
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use crate::linalg::{a_alpha, adjacency};

    #[test]
    fn k2_values() {
        let a = adjacency(&Family::Complete(2).build().unwrap());
        assert_eq!(char_poly_eval(&a, 1.0), 0.0);
        assert_eq!(char_poly_eval(&a, 0.0), -1.0);
        // λ² − 1
        assert_eq!(char_poly_eval(&a, 3.0), 8.0);
    }

    #[test]
    fn diagonal_case() {
        let d = a_alpha(&Family::Cycle(4).build().unwrap(), 1.0).unwrap();
        assert_eq!(char_poly_eval(&d, 3.0), 1.0);
        assert_eq!(char_poly_eval(&d, 1.0), 1.0);
        assert_eq!(char_poly_eval(&d, 0.0), 16.0);
    }

    #[test]
    fn log_form_agrees() {
        let a = adjacency(&Family::Petersen.build().unwrap());
        for &x in &[-3.5, -1.0, 0.5, 2.0, 7.0] {
            let direct = char_poly_eval(&a, x);
            let log = char_poly_eval_log(&a, x);
            assert!(
                (log.to_f64() - direct).abs() <= 1e-9 * direct.abs().max(1.0),
                "{x}: {direct} vs {}",
                log.to_f64()
            );
        }
        // Petersen: (λ − 3)(λ − 1)^5 (λ + 2)^4
        let want = |x: f64| (x - 3.0) * (x - 1.0).powi(5) * (x + 2.0).powi(4);
        assert!((char_poly_eval(&a, 4.0) - want(4.0)).abs() < 1e-6);
    }

    #[test]
    fn large_order_stays_finite_in_log_space() {
        let a = a_alpha(&Family::Complete(300).build().unwrap(), 0.2).unwrap();
        assert!(char_poly_eval(&a, 900.0).is_infinite());
        let v = char_poly_eval_log(&a, 900.0);
        // (λ − (n − 1))·(λ − (αn − 1))^(n−1)
        let want = (900.0f64 - 299.0).ln() + 299.0 * (900.0f64 - 59.0).ln();
        assert_eq!(v.sign, 1);
        assert!((v.ln_abs - want).abs() < 1e-9 * want);
    }

    #[test]
    fn signed_log_arithmetic() {
        let x = SignedLog::from_f64(-2.0);
        assert_eq!(x.powi(3).to_f64().round(), -8.0);
        assert_eq!(x.powi(0), SignedLog::ONE);
        assert_eq!(SignedLog::ZERO.powi(0), SignedLog::ONE);
        assert!(SignedLog::ZERO.powi(2).is_zero());
        assert!((x.times(SignedLog::from_f64(-0.5)).to_f64() - 1.0).abs() < 1e-15);
        let big = SignedLog {
            sign: 1,
            ln_abs: 1000.0,
        };
        let bigger = SignedLog {
            sign: 1,
            ln_abs: 1000.0 + 1e-10,
        };
        assert!(bigger.relative_deviation(big) < 2e-10);
        assert!((SignedLog { sign: -1, ..big }.relative_deviation(big) - 2.0).abs() < 1e-12);
    }
}
