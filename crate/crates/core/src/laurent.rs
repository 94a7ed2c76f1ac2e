//! Sparse Laurent polynomials in `q` with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::json;

/// Exponent → coefficient, with no zero coefficients stored. The canonical
/// form makes derived equality term-by-term equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    /// `coeff · q^exp`.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(exp, 1)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Dense coefficients `c_0 + c_1 q + …`.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(e, &c)| (e as i64, c)))
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when no negative exponent occurs.
    pub fn is_polynomial(&self) -> bool {
        self.min_exponent().is_none_or(|e| e >= 0)
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        LaurentPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k + e, c.clone()))
                .collect(),
        }
    }

    /// Value at `q = 1`, the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Whether the coefficients read the same from both ends.
    pub fn is_palindromic(&self) -> bool {
        match (self.min_exponent(), self.max_exponent()) {
            (Some(lo), Some(hi)) => self
                .terms
                .iter()
                .all(|(&e, c)| self.coeff(lo + hi - e) == *c),
            _ => true,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|(e, c)| json!([e, c.to_string()]))
            .collect();
        json!({ "terms": terms })
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Compact ascending form, e.g. `q^-1+1-2q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if c.is_negative() {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if e == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(mut self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        self += &rhs;
        self
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPolynomial {
    fn sum<I: Iterator<Item = LaurentPolynomial>>(iter: I) -> Self {
        iter.fold(LaurentPolynomial::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().copied())
    }

    #[test]
    fn ring_examples() {
        let one_plus_q = lp(&[(0, 1), (1, 1)]);
        assert_eq!(one_plus_q.shift(-1), lp(&[(-1, 1), (0, 1)]));
        assert_eq!(
            &one_plus_q * &lp(&[(0, 1), (1, -1)]),
            lp(&[(0, 1), (2, -1)])
        );
        assert_eq!(&one_plus_q + &LaurentPolynomial::zero(), one_plus_q);
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let p = &lp(&[(3, 2), (-1, 1)]) - &lp(&[(3, 2)]);
        assert_eq!(p, LaurentPolynomial::q_pow(-1));
        assert_eq!(p.terms().count(), 1);
        assert!(lp(&[(2, 0)]).is_zero());
    }

    #[test]
    fn display_and_json() {
        assert_eq!(
            LaurentPolynomial::from_coeffs(&[1, 1, 1]).to_string(),
            "1+q+q^2"
        );
        assert_eq!(lp(&[(0, 1), (2, -1)]).to_string(), "1-q^2");
        assert_eq!(lp(&[(-1, 1), (0, 1), (3, -2)]).to_string(), "q^-1+1-2q^3");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
        assert_eq!(
            lp(&[(2, 1), (-1, 3)]).to_json(),
            json!({"terms": [[-1, "3"], [2, "1"]]})
        );
    }

    #[test]
    fn predicates() {
        assert!(LaurentPolynomial::from_coeffs(&[1, 1, 2, 1, 1]).is_palindromic());
        assert!(!LaurentPolynomial::from_coeffs(&[1, 2]).is_palindromic());
        assert!(!lp(&[(-1, 1)]).is_polynomial());
        assert!(LaurentPolynomial::zero().is_polynomial());
        assert_eq!(
            LaurentPolynomial::from_coeffs(&[1, 1, 2, 1, 1]).eval_at_one(),
            6.into()
        );
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPolynomial> {
        prop::collection::vec((-6i64..6, -5i64..5), 0..6).prop_map(LaurentPolynomial::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn shift_is_monomial_product(a in arb_poly(), e in -5i64..5) {
            prop_assert_eq!(a.shift(e), &a * &LaurentPolynomial::q_pow(e));
            prop_assert_eq!(a.shift(e).eval_at_one(), a.eval_at_one());
        }
    }
}
