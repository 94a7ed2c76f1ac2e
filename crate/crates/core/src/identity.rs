//! Exact checks of the binomial convolution identities.
//!
//! Rothe's identities are evaluated only through the division-free
//! coefficient [`rothe_coeff`], so every rational point is legal, including
//! the points `x = kz` where the textbook form divides by zero. Every sum
//! runs `k = 0..=n` with `C(t, k) = 0` for `k < 0`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{gen_binomial, int, rothe_coeff, Rational};
use crate::report::{IdentityId, ParamValue, Params, ReportValue, Status, VerificationReport};
use crate::word::{self, binomial_count, EnumerationCap, Grading};

fn rat(name: &str, v: &Rational) -> (String, ParamValue) {
    (name.to_string(), ParamValue::Rational(v.clone()))
}

fn int_param(name: &str, v: i64) -> (String, ParamValue) {
    (name.to_string(), ParamValue::Int(v))
}

fn check_n(n: i64) -> Result<()> {
    if n < 0 {
        Err(Error::ParameterError(format!(
            "n must be nonnegative, got {n}"
        )))
    } else {
        Ok(())
    }
}

fn c(t: i64, k: i64) -> Rational {
    gen_binomial(&int(t), k)
}

pub fn rothe1_sides(x: &Rational, y: &Rational, z: &Rational, n: i64) -> (Rational, Rational) {
    let lhs = (0..=n)
        .map(|k| rothe_coeff(x, z, k) * rothe_coeff(y, z, n - k))
        .fold(Rational::zero(), |a, b| a + b);
    (lhs, rothe_coeff(&(x + y), z, n))
}

pub fn rothe2_sides(x: &Rational, y: &Rational, z: &Rational, n: i64) -> (Rational, Rational) {
    let lhs = (0..=n)
        .map(|k| rothe_coeff(x, z, k) * gen_binomial(&(y + z * int(k)), n - k))
        .fold(Rational::zero(), |a, b| a + b);
    (lhs, gen_binomial(&(x + y), n))
}

fn gould_sum(x: &Rational, y: &Rational, z: &Rational, n: i64) -> Rational {
    (0..=n)
        .map(|k| {
            let kz = z * int(k);
            gen_binomial(&(x - &kz), k) * gen_binomial(&(y + &kz), n - k)
        })
        .fold(Rational::zero(), |a, b| a + b)
}

pub fn gould_sides(
    x: &Rational,
    y: &Rational,
    z: &Rational,
    eps: &Rational,
    n: i64,
) -> (Rational, Rational) {
    (
        gould_sum(x, y, z, n),
        gould_sum(&(x + eps), &(y - eps), z, n),
    )
}

/// `Σ_k B_k(x,z)·B_{n−k}(y,z) = B_n(x+y, z)`, the division-free form of
/// Rothe's first identity.
pub fn check_rothe1(
    x: &Rational,
    y: &Rational,
    z: &Rational,
    n: i64,
) -> Result<VerificationReport> {
    check_n(n)?;
    let (lhs, rhs) = rothe1_sides(x, y, z, n);
    let params = vec![rat("x", x), rat("y", y), rat("z", z), int_param("n", n)];
    Ok(VerificationReport::compare(
        IdentityId::Rothe1,
        params,
        lhs,
        rhs,
    ))
}

/// `Σ_k B_k(x,z)·C(y+kz, n−k) = C(x+y, n)`.
pub fn check_rothe2(
    x: &Rational,
    y: &Rational,
    z: &Rational,
    n: i64,
) -> Result<VerificationReport> {
    check_n(n)?;
    let (lhs, rhs) = rothe2_sides(x, y, z, n);
    let params = vec![rat("x", x), rat("y", y), rat("z", z), int_param("n", n)];
    Ok(VerificationReport::compare(
        IdentityId::Rothe2,
        params,
        lhs,
        rhs,
    ))
}

/// Invariance of `Σ_k C(x−kz, k)·C(y+kz, n−k)` under `(x, y) → (x+ε, y−ε)`.
pub fn check_gould(
    x: &Rational,
    y: &Rational,
    z: &Rational,
    eps: &Rational,
    n: i64,
) -> Result<VerificationReport> {
    check_n(n)?;
    let (lhs, rhs) = gould_sides(x, y, z, eps, n);
    let params = vec![
        rat("x", x),
        rat("y", y),
        rat("z", z),
        rat("eps", eps),
        int_param("n", n),
    ];
    Ok(VerificationReport::compare(
        IdentityId::Gould,
        params,
        lhs,
        rhs,
    ))
}

fn pqkm_params(p: u64, q: u64, m: u64, n: u64) -> Params {
    vec![
        int_param("p", p as i64),
        int_param("q", q as i64),
        int_param("m", m as i64),
        int_param("n", n as i64),
    ]
}

pub fn pqkm_sides(p: i64, q: i64, m: i64, n: i64) -> (Rational, Rational) {
    let side = |p: i64, q: i64| {
        (0..=n)
            .map(|k| c(p - k * m, k) * c(q + k * m, n - k))
            .fold(Rational::zero(), |a, b| a + b)
    };
    (side(p, q), side(p + 1, q - 1))
}

/// `Σ_k C(p−km, k)·C(q+km, n−k) = Σ_k C(p+1−km, k)·C(q−1+km, n−k)`, which is
/// Gould's identity at integer points with `ε = 1`.
pub fn check_pqkm(p: u64, q: u64, m: u64, n: u64) -> VerificationReport {
    let (lhs, rhs) = pqkm_sides(p as i64, q as i64, m as i64, n as i64);
    VerificationReport::compare(IdentityId::Pqkm, pqkm_params(p, q, m, n), lhs, rhs)
}

fn require_factorization_domain(p: u64, q: u64, m: u64, n: u64) -> Result<()> {
    if p < m * n {
        return Err(Error::ParameterError(format!(
            "need p ≥ mn, got p={p}, mn={}",
            m * n
        )));
    }
    if q < 1 {
        return Err(Error::ParameterError("need q ≥ 1".into()));
    }
    Ok(())
}

/// Left side of the factorization count:
/// `Σ_k [C(p−km,k)·C(q+km,n−k) + Σ_{j=1}^m C(p−km+j−1,k−1)·C(q+km−j,n−k)]`.
pub fn kmx_lhs(p: i64, q: i64, m: i64, n: i64) -> Rational {
    let mut total = Rational::zero();
    for k in 0..=n {
        total += c(p - k * m, k) * c(q + k * m, n - k);
        for j in 1..=m {
            total += c(p - k * m + j - 1, k - 1) * c(q + k * m - j, n - k);
        }
    }
    total
}

/// The factorization count equals `C(p+q, n)`. Requires `p ≥ mn`, `q ≥ 1`.
pub fn check_kmx(p: u64, q: u64, m: u64, n: u64) -> Result<VerificationReport> {
    require_factorization_domain(p, q, m, n)?;
    let lhs = kmx_lhs(p as i64, q as i64, m as i64, n as i64);
    let rhs = c((p + q) as i64, n as i64);
    Ok(VerificationReport::compare(
        IdentityId::Kmx,
        pqkm_params(p, q, m, n),
        lhs,
        rhs,
    ))
}

pub fn kmpink_sides(p: i64, q: i64, m: i64, n: i64, j: i64) -> (Rational, Rational) {
    let lhs = (0..=n)
        .map(|k| c(p - k * m + j - 1, k - 1) * c(q + k * m - j, n - k))
        .fold(Rational::zero(), |a, b| a + b);
    let rhs = (0..=n)
        .map(|k| c(p - k * m - 1, k - 1) * c(q + k * m, n - k))
        .fold(Rational::zero(), |a, b| a + b);
    (lhs, rhs)
}

/// The `j`-shift: `Σ_k C(p−km+j−1,k−1)·C(q+km−j,n−k)` does not depend on
/// `j ∈ [1, m]`, and equals its value at the shifted base point.
pub fn check_kmpink(p: u64, q: u64, m: u64, n: u64, j: u64) -> Result<VerificationReport> {
    if j < 1 || j > m {
        return Err(Error::ParameterError(format!(
            "need 1 ≤ j ≤ m, got j={j}, m={m}"
        )));
    }
    let (lhs, rhs) = kmpink_sides(p as i64, q as i64, m as i64, n as i64, j as i64);
    let mut params = pqkm_params(p, q, m, n);
    params.push(int_param("j", j as i64));
    Ok(VerificationReport::compare(
        IdentityId::Kmpink,
        params,
        lhs,
        rhs,
    ))
}

/// `Σ_k [C(p−km,k) + m·C(p−km−1,k−1)]·C(q+km,n−k)`, the sum obtained by
/// collapsing the inner `j`-sum of the factorization count.
pub fn collapsed_rothe_sum(p: i64, q: i64, m: i64, n: i64) -> Rational {
    (0..=n)
        .map(|k| (c(p - k * m, k) + int(m) * c(p - k * m - 1, k - 1)) * c(q + k * m, n - k))
        .fold(Rational::zero(), |a, b| a + b)
}

/// `|Γ_{p,k}|` by enumeration against `C(p − km, k)`.
pub fn check_cardinality(
    p: u64,
    k: u64,
    m: u64,
    cap: EnumerationCap,
) -> Result<VerificationReport> {
    let count = word::enumerate_gamma_with_cap(p, k, Grading::new(m), cap)?.len();
    let predicted = binomial_count(p as i64 - (k * m) as i64, k as i64);
    let params = vec![
        int_param("p", p as i64),
        int_param("k", k as i64),
        int_param("m", m as i64),
    ];
    Ok(VerificationReport::compare(
        IdentityId::Cardinality,
        params,
        int(count as i64),
        Rational::from_integer(predicted.into()),
    ))
}

/// Start of the evaluation grid in each variable; the grid in each variable
/// is `start, start+1, …, start+n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridOffsets {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
    pub eps: Rational,
}

impl Default for GridOffsets {
    fn default() -> Self {
        GridOffsets {
            x: int(0),
            y: int(0),
            z: int(0),
            eps: int(0),
        }
    }
}

/// Number of grid points `grid_prove` evaluates.
pub fn grid_size(identity: IdentityId, n: i64) -> Result<u128> {
    let vars = match identity {
        IdentityId::Rothe1 | IdentityId::Rothe2 => 3,
        IdentityId::Gould => 4,
        other => {
            return Err(Error::ParameterError(format!(
                "grid certification supports rothe1, rothe2 and gould, not {other}"
            )))
        }
    };
    check_n(n)?;
    Ok((n as u128 + 1).pow(vars))
}

/// Certifies a polynomial identity by exact evaluation on a product grid.
///
/// Both sides of each supported identity are polynomials of degree at most
/// `n` in every variable, so agreement on `n + 1` points per variable forces
/// the difference to vanish identically. Stops at the first mismatch.
///
/// The report's parameters are `n`, the number of points evaluated and the
/// grid starts; `lhs`/`rhs` are the values at the failing point, or at the
/// last point on success.
pub fn grid_prove(
    identity: IdentityId,
    n: i64,
    offsets: &GridOffsets,
) -> Result<VerificationReport> {
    let size = grid_size(identity, n)?;
    let axis = |start: &Rational| -> Vec<Rational> { (0..=n).map(|i| start + int(i)).collect() };
    let (xs, ys, zs) = (axis(&offsets.x), axis(&offsets.y), axis(&offsets.z));
    let es = if identity == IdentityId::Gould {
        axis(&offsets.eps)
    } else {
        vec![int(0)]
    };

    let mut evaluated: u128 = 0;
    let mut last = (Rational::zero(), Rational::zero());
    for (x, y, z, e) in cartesian(&xs, &ys, &zs, &es) {
        evaluated += 1;
        let (lhs, rhs) = match identity {
            IdentityId::Rothe1 => rothe1_sides(x, y, z, n),
            IdentityId::Rothe2 => rothe2_sides(x, y, z, n),
            _ => gould_sides(x, y, z, e, n),
        };
        if lhs != rhs {
            let mut point = vec![rat("x", x), rat("y", y), rat("z", z)];
            if identity == IdentityId::Gould {
                point.push(rat("eps", e));
            }
            point.push(int_param("n", n));
            return Ok(VerificationReport {
                identity,
                params: grid_params(identity, n, evaluated, offsets),
                lhs: ReportValue::Rational(lhs),
                rhs: ReportValue::Rational(rhs),
                status: Status::Fail,
                counterexample: Some(point),
            });
        }
        last = (lhs, rhs);
    }
    debug_assert_eq!(evaluated, size);
    Ok(VerificationReport {
        identity,
        params: grid_params(identity, n, evaluated, offsets),
        lhs: ReportValue::Rational(last.0),
        rhs: ReportValue::Rational(last.1),
        status: Status::Pass,
        counterexample: None,
    })
}

fn grid_params(identity: IdentityId, n: i64, points: u128, offsets: &GridOffsets) -> Params {
    let mut params = vec![
        int_param("n", n),
        int_param("points", points as i64),
        rat("x0", &offsets.x),
        rat("y0", &offsets.y),
        rat("z0", &offsets.z),
    ];
    if identity == IdentityId::Gould {
        params.push(rat("eps0", &offsets.eps));
    }
    params
}

/// Row-major product of four axes.
fn cartesian<'a, T>(
    a: &'a [T],
    b: &'a [T],
    c: &'a [T],
    d: &'a [T],
) -> impl Iterator<Item = (&'a T, &'a T, &'a T, &'a T)> + 'a {
    a.iter().flat_map(move |x| {
        b.iter().flat_map(move |y| {
            c.iter()
                .flat_map(move |z| d.iter().map(move |e| (x, y, z, e)))
        })
    })
}
