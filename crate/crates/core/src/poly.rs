//! Dense univariate polynomials with `i64` coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

/// `c_0 + c_1 x + … + c_d x^d`, stored densely from degree 0 with no
/// trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c x^k`.
    pub fn monomial(k: usize, c: i64) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `(1 + x)^e`.
    pub fn one_plus_x_pow(e: usize) -> Self {
        let base = IntPolynomial::new(vec![1, 1]);
        (0..e).fold(Self::one(), |acc, _| &acc * &base)
    }

    /// Build from `(exponent, count)` pairs, adding repeated exponents.
    pub fn from_counts<I: IntoIterator<Item = usize>>(exponents: I) -> Self {
        let mut coeffs = Vec::new();
        for k in exponents {
            if coeffs.len() <= k {
                coeffs.resize(k + 1, 0);
            }
            coeffs[k] += 1;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// `x^n p(1/x)`. Requires `n ≥ deg p`.
    pub fn reversed(&self, n: usize) -> Self {
        assert!(self.degree().is_none_or(|d| d <= n), "reversal degree {n} below polynomial degree");
        let mut coeffs = vec![0; n + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[n - k] = c;
        }
        Self::new(coeffs)
    }

    /// Synthetic division by `1 + x`: returns `(q, r)` with
    /// `self = (1 + x) q + r` and `r = self(-1)`.
    pub fn div_rem_one_plus_x(&self) -> (IntPolynomial, i64) {
        let d = match self.degree() {
            None => return (Self::zero(), 0),
            Some(0) => return (Self::zero(), self.coeffs[0]),
            Some(d) => d,
        };
        // Divide from the top: q_{k-1} = c_k - q_k, with q_d = 0.
        let mut q = vec![0i64; d];
        let mut carry = 0i64;
        for k in (1..=d).rev() {
            carry = self.coeffs[k] - carry;
            q[k - 1] = carry;
        }
        let r = self.coeffs[0] - carry;
        (Self::new(q), r)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{a}x")?,
                (_, 1) => write!(f, "x^{k}")?,
                _ => write!(f, "{a}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Coefficient array from degree 0; the zero polynomial is `[]`.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::new(c.to_vec())
    }

    #[test]
    fn trims_and_displays() {
        assert_eq!(p(&[1, 0, 0]).coeffs(), &[1]);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0, 1, -2, 1]).to_string(), "x - 2x^2 + x^3");
        assert_eq!(p(&[-3]).to_string(), "-3");
    }

    #[test]
    fn division_by_one_plus_x() {
        let (q, r) = p(&[1, 1, 1, 1]).div_rem_one_plus_x();
        assert_eq!((q, r), (p(&[1, 0, 1]), 0));
        let (_, r) = p(&[0, 1, -1, 1]).div_rem_one_plus_x();
        assert_eq!(r, -3);
        let (q, r) = IntPolynomial::monomial(3, 1).div_rem_one_plus_x();
        assert_eq!(r, -1);
        assert_eq!(&(&q * &p(&[1, 1])) + &p(&[r]), IntPolynomial::monomial(3, 1));
    }

    #[test]
    fn binomial_powers() {
        assert_eq!(IntPolynomial::one_plus_x_pow(3).coeffs(), &[1, 3, 3, 1]);
        assert_eq!(IntPolynomial::one_plus_x_pow(0), IntPolynomial::one());
        assert_eq!(p(&[0, 1, 2]).reversed(3), p(&[0, 2, 1]));
    }

    proptest! {
        #[test]
        fn division_identity(c in proptest::collection::vec(-50i64..50, 0..10)) {
            let f = p(&c);
            let (q, r) = f.div_rem_one_plus_x();
            prop_assert_eq!(&(&q * &p(&[1, 1])) + &p(&[r]), f.clone());
            prop_assert_eq!(r, f.eval(-1));
        }

        #[test]
        fn product_evaluates_pointwise(
            a in proptest::collection::vec(-9i64..9, 0..6),
            b in proptest::collection::vec(-9i64..9, 0..6),
            x in -3i64..3,
        ) {
            let (a, b) = (p(&a), p(&b));
            prop_assert_eq!((&a * &b).eval(x), a.eval(x) * b.eval(x));
        }
    }
}
