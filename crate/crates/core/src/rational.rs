//! Exact rationals, generalized binomials and Rothe coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"3"`, `"-7"` or `"1/2"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let r: Rational = s
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))?;
    Ok(r)
}

/// `"num/den"` in lowest terms, or just `"num"` when integral.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// `t(t−1)⋯(t−k+1)/k!` for `k ≥ 0`, zero for `k < 0`.
pub fn gen_binomial(t: &Rational, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let mut num = Rational::one();
    let mut fact = BigInt::one();
    for i in 0..k {
        num *= t - int(i);
        fact *= BigInt::from(i + 1);
    }
    num / Rational::from_integer(fact)
}

/// The division-free Rothe coefficient
/// `B_k(x, z) = (x/k!)·∏_{i=1}^{k−1}(x − kz − i)`, which equals
/// `x/(x − kz)·C(x − kz, k)` whenever `x ≠ kz`.
pub fn rothe_coeff(x: &Rational, z: &Rational, k: i64) -> Rational {
    match k {
        k if k < 0 => Rational::zero(),
        0 => Rational::one(),
        _ => {
            let base = x - z * int(k);
            let mut acc = x.clone();
            let mut fact = BigInt::one();
            for i in 1..k {
                acc *= &base - int(i);
                fact *= BigInt::from(i + 1);
            }
            acc / Rational::from_integer(fact)
        }
    }
}
