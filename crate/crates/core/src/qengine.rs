//! Gaussian binomials and the q-weighted identities.
//!
//! Inversions are counted as pairs `b … a`. With that convention the
//! inversion generating function of `Γ_{p,k}` is `[p − km, k]`, and the
//! factorization bijection turns it into the double-sum extension of the
//! q-Chu-Vandermonde formula checked by [`check_qchu`].

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::report::{IdentityId, ParamValue, Params, VerificationReport};
use crate::word::{self, EnumerationCap, Grading};

fn int_param(name: &str, v: i64) -> (String, ParamValue) {
    (name.to_string(), ParamValue::Int(v))
}

/// The Gaussian binomial `[a, k]` via `[a,k] = [a−1,k−1] + q^k·[a−1,k]`.
///
/// Zero for `k < 0` or `k > a`. Negative `a` is rejected since no checked
/// identity needs it.
pub fn gaussian_binomial(a: i64, k: i64) -> Result<LaurentPolynomial> {
    if k < 0 {
        return Ok(LaurentPolynomial::zero());
    }
    if a < 0 {
        return Err(Error::UnsupportedArgument(format!(
            "Gaussian binomial with negative upper argument {a}"
        )));
    }
    if k > a {
        return Ok(LaurentPolynomial::zero());
    }
    let k = k.min(a - k) as usize;
    // row[i] = [r, i] for the current r
    let mut row = vec![LaurentPolynomial::zero(); k + 1];
    row[0] = LaurentPolynomial::one();
    for r in 1..=a as usize {
        for i in (1..=k.min(r)).rev() {
            let shifted = row[i].shift(i as i64);
            row[i] = &row[i - 1] + &shifted;
        }
    }
    Ok(row.swap_remove(k))
}

/// `Σ_{w ∈ Γ_{p,k}} q^{inv(w)}` by enumeration.
pub fn inv_generating_function(
    p: u64,
    k: u64,
    g: Grading,
    cap: EnumerationCap,
) -> Result<LaurentPolynomial> {
    Ok(word::enumerate_gamma_with_cap(p, k, g, cap)?
        .iter()
        .map(|w| LaurentPolynomial::q_pow(w.inversions() as i64))
        .sum())
}

/// The inversion generating function of `Γ_{p,k}` equals `[p − km, k]`.
pub fn check_invw(p: u64, k: u64, m: u64, cap: EnumerationCap) -> Result<VerificationReport> {
    if p < k * m {
        return Err(Error::ParameterError(format!(
            "need p ≥ km, got p={p}, km={}",
            k * m
        )));
    }
    let lhs = inv_generating_function(p, k, Grading::new(m), cap)?;
    let rhs = gaussian_binomial((p - k * m) as i64, k as i64)?;
    let params = vec![
        int_param("p", p as i64),
        int_param("k", k as i64),
        int_param("m", m as i64),
    ];
    Ok(VerificationReport::compare(
        IdentityId::Invw,
        params,
        lhs,
        rhs,
    ))
}

fn require_qchu_domain(x: u64, y: u64, m: u64, n: u64) -> Result<()> {
    if x < m * n {
        return Err(Error::ParameterError(format!(
            "need x ≥ mn, got x={x}, mn={}",
            m * n
        )));
    }
    if y < 1 {
        return Err(Error::ParameterError("need y ≥ 1".into()));
    }
    Ok(())
}

fn gb(a: i64, k: i64) -> Result<LaurentPolynomial> {
    gaussian_binomial(a, k)
}

/// The `k`-th summand of the double-sum q-Chu-Vandermonde extension,
/// `q^{k(km+k+y−n)}·([x−km,k][y+km,n−k] + Σ_j [x−km+j−1,k−1][y+km−j,n−k]q^{−kj})`.
pub fn qchu_terms(x: u64, y: u64, m: u64, n: u64) -> Result<Vec<LaurentPolynomial>> {
    require_qchu_domain(x, y, m, n)?;
    let (x, y, m, n) = (x as i64, y as i64, m as i64, n as i64);
    (0..=n)
        .map(|k| {
            let mut inner = &gb(x - k * m, k)? * &gb(y + k * m, n - k)?;
            for j in 1..=m {
                let left = gb(x - k * m + j - 1, k - 1)?;
                if left.is_zero() {
                    continue;
                }
                inner += &(&left * &gb(y + k * m - j, n - k)?).shift(-k * j);
            }
            Ok(inner.shift(k * (k * m + k + y - n)))
        })
        .collect()
}

fn qchu_params(x: u64, y: u64, m: u64, n: u64) -> Params {
    vec![
        int_param("x", x as i64),
        int_param("y", y as i64),
        int_param("m", m as i64),
        int_param("n", n as i64),
    ]
}

/// The double-sum extension equals `[x+y, n]`. Requires `x ≥ mn`, `y ≥ 1`.
pub fn check_qchu(x: u64, y: u64, m: u64, n: u64) -> Result<VerificationReport> {
    let lhs: LaurentPolynomial = qchu_terms(x, y, m, n)?.into_iter().sum();
    let rhs = gaussian_binomial((x + y) as i64, n as i64)?;
    Ok(VerificationReport::compare(
        IdentityId::Qchu,
        qchu_params(x, y, m, n),
        lhs,
        rhs,
    ))
}

/// Summands of the `m = 1` specialization,
/// `q^{k(2k+y−n)}·([x−k,k][y+k,n−k] + [x−k,k−1][y+k−1,n−k]q^{−k})`.
pub fn qchu_m1_terms(x: u64, y: u64, n: u64) -> Result<Vec<LaurentPolynomial>> {
    require_qchu_domain(x, y, 1, n)?;
    let (x, y, n) = (x as i64, y as i64, n as i64);
    (0..=n)
        .map(|k| {
            let first = &gb(x - k, k)? * &gb(y + k, n - k)?;
            let left = gb(x - k, k - 1)?;
            let second = if left.is_zero() {
                LaurentPolynomial::zero()
            } else {
                (&left * &gb(y + k - 1, n - k)?).shift(-k)
            };
            Ok((first + second).shift(k * (2 * k + y - n)))
        })
        .collect()
}

pub fn check_qchu_m1(x: u64, y: u64, n: u64) -> Result<VerificationReport> {
    let lhs: LaurentPolynomial = qchu_m1_terms(x, y, n)?.into_iter().sum();
    let rhs = gaussian_binomial((x + y) as i64, n as i64)?;
    let params = vec![
        int_param("x", x as i64),
        int_param("y", y as i64),
        int_param("n", n as i64),
    ];
    Ok(VerificationReport::compare(
        IdentityId::QchuM1,
        params,
        lhs,
        rhs,
    ))
}

/// The classical `Σ_k q^{k(k+y−n)}·[x,k]·[y,n−k]`, equal to `[x+y, n]`.
pub fn q_chu_vandermonde_sum(x: u64, y: u64, n: u64) -> Result<LaurentPolynomial> {
    let (x, y, n) = (x as i64, y as i64, n as i64);
    let terms = (0..=n)
        .map(|k| Ok((&gb(x, k)? * &gb(y, n - k)?).shift(k * (k + y - n))))
        .collect::<Result<Vec<_>>>()?;
    Ok(terms.into_iter().sum())
}

/// `Σ_{w ∈ Γ_{p+q+mn,n}} q^{inv(w)}` by enumeration, compared first with
/// `[p+q, n]` and then with the structured double sum of [`check_qchu`].
pub fn qweighted_bijection_check(
    p: u64,
    q: u64,
    m: u64,
    n: u64,
    cap: EnumerationCap,
) -> Result<VerificationReport> {
    require_qchu_domain(p, q, m, n)?;
    let enumerated = inv_generating_function(p + q + m * n, n, Grading::new(m), cap)?;
    let params = vec![
        int_param("p", p as i64),
        int_param("q", q as i64),
        int_param("m", m as i64),
        int_param("n", n as i64),
    ];
    let gauss = gaussian_binomial((p + q) as i64, n as i64)?;
    let against_gauss =
        VerificationReport::compare(IdentityId::Qword, params.clone(), enumerated.clone(), gauss);
    if !against_gauss.passed() {
        return Ok(against_gauss);
    }
    let structured: LaurentPolynomial = qchu_terms(p, q, m, n)?.into_iter().sum();
    Ok(VerificationReport::compare(
        IdentityId::Qword,
        params,
        enumerated,
        structured,
    ))
}
