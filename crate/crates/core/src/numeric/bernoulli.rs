//! Bernoulli numbers from the exact inverse of `(e^x - 1)/x`, memoized.

use std::sync::{Mutex, OnceLock};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numeric::scalar::{factorial_q, int};
use crate::numeric::series::TruncSeries;
use crate::Rational;

fn cache() -> &'static Mutex<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

fn extend_to(table: &mut Vec<Rational>, n: usize) {
    let len = (n + 1).max(2 * table.len()).max(32);
    // (e^x - 1)/x = Σ x^k / (k+1)!
    let mut fact = Rational::from_integer(1.into());
    let denom = TruncSeries::from_fn(0, len as i64, |k| {
        fact = &fact / int(k + 1);
        fact.clone()
    });
    let inv = denom.inverse().expect("constant term is 1");
    *table = (0..len as i64)
        .map(|k| inv.coeff(k).unwrap() * factorial_q(k as u64))
        .collect();
}

/// `B_n` with the convention `x/(e^x - 1) = Σ B_n x^n / n!` (so `B_1 = -1/2`).
pub fn bernoulli(n: usize) -> Rational {
    let mut table = cache().lock().unwrap_or_else(|e| e.into_inner());
    if table.len() <= n {
        extend_to(&mut table, n);
    }
    table[n].clone()
}

/// `b_k = B_k / (k·k!)` for even `k > 0`, the Taylor coefficients of
/// `log(sinh(x/2)/(x/2))`.
pub fn modified_bernoulli(k: usize) -> Result<Rational> {
    if k == 0 || k % 2 == 1 {
        return Err(Error::arg(format!(
            "modified Bernoulli number needs even k > 0, got {k}"
        )));
    }
    Ok(bernoulli(k) / (int(k as i64) * factorial_q(k as u64)))
}

/// `ζ(-m) = (-1)^m B_{m+1}/(m+1)` for `m >= 0`.
pub fn zeta_nonpositive(m: usize) -> Rational {
    let b = bernoulli(m + 1) / int(m as i64 + 1);
    if m % 2 == 1 && !b.is_zero() {
        -b
    } else {
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::scalar::rat;

    /// Oracle: the recurrence Σ_{k<n+1} C(n+1,k) B_k = 0, independent of series code.
    fn bernoulli_by_recurrence(nmax: usize) -> Vec<Rational> {
        let mut b = vec![int(1)];
        for n in 1..=nmax {
            let mut acc = int(0);
            let mut binom = Rational::from_integer(1.into());
            for (k, bk) in b.iter().enumerate() {
                acc += &binom * bk;
                binom = binom * int((n + 1 - k) as i64) / int(k as i64 + 1);
            }
            b.push(-acc / int(n as i64 + 1));
        }
        b
    }

    #[test]
    fn matches_recurrence_oracle() {
        let oracle = bernoulli_by_recurrence(60);
        for (n, bn) in oracle.iter().enumerate() {
            assert_eq!(&bernoulli(n), bn, "B_{n}");
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn odd_bernoulli_vanish() {
        for n in (3..101).step_by(2) {
            assert!(bernoulli(n).is_zero(), "B_{n}");
        }
    }

    #[test]
    fn modified_values() {
        assert_eq!(modified_bernoulli(2).unwrap(), rat(1, 24));
        assert_eq!(modified_bernoulli(4).unwrap(), rat(-1, 2880));
        assert_eq!(modified_bernoulli(6).unwrap(), rat(1, 181440));
        assert!(modified_bernoulli(3).is_err());
        assert!(modified_bernoulli(0).is_err());
    }

    #[test]
    fn zeta_at_nonpositive_integers() {
        assert_eq!(zeta_nonpositive(0), rat(-1, 2));
        assert_eq!(zeta_nonpositive(1), rat(-1, 12));
        assert_eq!(zeta_nonpositive(2), int(0));
        assert_eq!(zeta_nonpositive(3), rat(1, 120));
    }
}
