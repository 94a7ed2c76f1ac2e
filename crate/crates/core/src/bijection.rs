//! Constructive bijections on graded words.
//!
//! Three maps live here:
//!
//! - [`equal_weight_prefixes`]: given two words of weight at least `mn + 1`
//!   (with `n` the total number of `b`s), find nonempty prefixes of equal
//!   weight. Prefix weights strictly increase, so a two-pointer merge finds
//!   the minimal common weight in linear time.
//! - [`theorem1_forward`] / [`theorem1_inverse`]: the prefix-shifting
//!   bijection `Γ^{(p)}_{N,n} ↔ Γ^{(p+1)}_{N,n}` with `N = p + q + mn`.
//! - [`decompose`] / [`compose`]: the factorization of `Γ_{N,n}` into the
//!   words with a prefix of weight `p` and the tuples `(j, k, u′, v)`.

use std::fmt;

use serde_json::json;

use crate::error::{Error, Result};
use crate::word::{self, EnumerationCap, Grading, Letter, Word};

/// Nonempty prefixes of two words sharing a common weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrefixMatch {
    pub u_prefix_len: usize,
    pub v_prefix_len: usize,
    pub common_weight: u64,
}

/// Image of a word of `Γ_{p+q+mn,n}` under the factorization bijection.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Decomposition {
    /// The word already has a prefix of weight exactly `p`.
    BranchA { w: Word },
    /// The shortest prefix of weight at least `p` is `u′·b`, of weight `p + j`,
    /// containing `k` letters `b`; `v` is the remainder.
    BranchB {
        j: u64,
        k: u64,
        u_prime: Word,
        v: Word,
    },
}

impl Decomposition {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Decomposition::BranchA { w } => json!({"branch": "A", "w": w.to_string()}),
            Decomposition::BranchB { j, k, u_prime, v } => json!({
                "branch": "B",
                "j": j,
                "k": k,
                "u_prime": u_prime.to_string(),
                "v": v.to_string(),
            }),
        }
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decomposition::BranchA { w } => write!(f, "BranchA w={}", w.to_human()),
            Decomposition::BranchB { j, k, u_prime, v } => write!(
                f,
                "BranchB j={j} k={k} u'={} v={}",
                u_prime.to_human(),
                v.to_human()
            ),
        }
    }
}

fn minimal_common_prefix(u: &Word, v: &Word, g: Grading) -> Option<PrefixMatch> {
    let (uw, vw) = (u.prefix_weights(g), v.prefix_weights(g));
    let (mut i, mut j) = (0, 0);
    while i < uw.len() && j < vw.len() {
        match uw[i].cmp(&vw[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                return Some(PrefixMatch {
                    u_prefix_len: i + 1,
                    v_prefix_len: j + 1,
                    common_weight: uw[i],
                })
            }
        }
    }
    None
}

/// Nonempty prefixes of `u` and `v` of equal weight, with the smallest such
/// weight. Requires `||u||, ||v|| ≥ mn + 1` where `n` counts the `b`s of `u·v`.
pub fn equal_weight_prefixes(u: &Word, v: &Word, g: Grading) -> Result<PrefixMatch> {
    let n = (u.b_count() + v.b_count()) as u64;
    let bound = g.m * n + 1;
    if u.weight(g) < bound || v.weight(g) < bound {
        return Err(Error::NoMatch(format!(
            "weights {} and {} must both be at least mn+1 = {bound}",
            u.weight(g),
            v.weight(g)
        )));
    }
    minimal_common_prefix(u, v, g)
        .ok_or_else(|| Error::NoMatch(format!("{u} and {v} share no prefix weight")))
}

fn check_theorem1_params(w: &Word, p: u64, q: u64, g: Grading) -> Result<u64> {
    let n = w.b_count() as u64;
    if p < g.m * n {
        return Err(Error::NotInDomain(format!("p = {p} < mn = {}", g.m * n)));
    }
    if q < 1 {
        return Err(Error::NotInDomain("q must be at least 1".into()));
    }
    let total = p + q + g.m * n;
    if w.weight(g) != total {
        return Err(Error::NotInDomain(format!(
            "{w} has weight {}, expected p+q+mn = {total}",
            w.weight(g)
        )));
    }
    Ok(n)
}

fn matcher_failure(e: Error) -> Error {
    match e {
        Error::NoMatch(msg) => {
            Error::InvariantViolation(format!("equal-weight prefix matcher failed: {msg}"))
        }
        other => other,
    }
}

/// Maps `w ∈ Γ^{(p)}_{p+q+mn,n}` to `Γ^{(p+1)}_{p+q+mn,n}`.
///
/// Writing `w = u·v` with `||u|| = p`, picks the suffix `x` of `u` and the
/// nonempty prefix `y` of `v` with `||x|| = ||y|| − 1` and `||y||` minimal,
/// and returns `u′·rev(y)·rev(x)·v′`.
pub fn theorem1_forward(w: &Word, p: u64, q: u64, g: Grading) -> Result<Word> {
    check_theorem1_params(w, p, q, g)?;
    let cut = w
        .prefix_len_with_weight(p, g)
        .ok_or_else(|| Error::NotInDomain(format!("{w} has no prefix of weight {p}")))?;
    let (u, v) = w.split_at(cut);

    // prefixes of rev(u·a) are a·rev(x) for the suffixes x of u
    let mut ua = u.clone();
    ua.push(Letter::A);
    let m = equal_weight_prefixes(&v, &ua.reverse(), g).map_err(matcher_failure)?;

    let (u_rest, x) = u.split_at(u.len() - (m.v_prefix_len - 1));
    let (y, v_rest) = v.split_at(m.u_prefix_len);
    Ok(u_rest
        .concat(&y.reverse())
        .concat(&x.reverse())
        .concat(&v_rest))
}

/// Inverse of [`theorem1_forward`].
///
/// Writing `w = U·V` with `||U|| = p + 1`, picks the nonempty suffix `s` of
/// `U` and the prefix `t` of `V` with `||s|| = ||t|| + 1` and `||s||` minimal,
/// and returns `U′·rev(t)·rev(s)·V′`.
pub fn theorem1_inverse(w: &Word, p: u64, q: u64, g: Grading) -> Result<Word> {
    check_theorem1_params(w, p, q, g)?;
    let cut = w
        .prefix_len_with_weight(p + 1, g)
        .ok_or_else(|| Error::NotInDomain(format!("{w} has no prefix of weight {}", p + 1)))?;
    let (big_u, big_v) = w.split_at(cut);

    let mut av = Word::new(vec![Letter::A]);
    av = av.concat(&big_v);
    let m = equal_weight_prefixes(&big_u.reverse(), &av, g).map_err(matcher_failure)?;

    let (u_rest, s) = big_u.split_at(big_u.len() - m.u_prefix_len);
    let (t, v_rest) = big_v.split_at(m.v_prefix_len - 1);
    Ok(u_rest
        .concat(&t.reverse())
        .concat(&s.reverse())
        .concat(&v_rest))
}

/// Splits `w = u·v` with `u` the shortest prefix of weight at least `p`.
pub fn factorize_at_least(w: &Word, p: u64, g: Grading) -> Result<(Word, Word)> {
    if w.weight(g) < p {
        return Err(Error::NotInDomain(format!(
            "{w} has weight {} < {p}",
            w.weight(g)
        )));
    }
    let mut acc = 0u64;
    let mut cut = 0usize;
    for &l in w.letters() {
        if acc >= p {
            break;
        }
        acc += g.letter_weight(l);
        cut += 1;
    }
    Ok(w.split_at(cut))
}

/// Sends `w ∈ Γ_{p+q+mn,n}` to its branch of the factorization bijection.
pub fn decompose(w: &Word, p: u64, q: u64, g: Grading) -> Result<Decomposition> {
    check_theorem1_params(w, p, q, g)?;
    let (u, v) = factorize_at_least(w, p, g)?;
    let j = u.weight(g) - p;
    if j == 0 {
        return Ok(Decomposition::BranchA { w: w.clone() });
    }
    if j > g.m || u.last() != Some(Letter::B) {
        return Err(Error::InvariantViolation(format!(
            "overshoot {j} of prefix {u} is not explained by a trailing b"
        )));
    }
    let k = u.b_count() as u64;
    let (u_prime, _) = u.split_at(u.len() - 1);
    Ok(Decomposition::BranchB { j, k, u_prime, v })
}

/// Inverse of [`decompose`]. Checks the branch membership invariants.
pub fn compose(d: &Decomposition, p: u64, q: u64, g: Grading) -> Result<Word> {
    match d {
        Decomposition::BranchA { w } => {
            let n = w.b_count() as u64;
            let total = p + q + g.m * n;
            if w.weight(g) != total || !w.has_prefix_of_weight(p, g) {
                return Err(Error::InvariantViolation(format!(
                    "{w} is not in Γ^({p})_{{{total},{n}}}"
                )));
            }
            Ok(w.clone())
        }
        Decomposition::BranchB { j, k, u_prime, v } => {
            let (j, k) = (*j, *k);
            if j < 1 || j > g.m || k < 1 {
                return Err(Error::InvariantViolation(format!(
                    "need 1 ≤ j ≤ m and k ≥ 1, got j = {j}, k = {k}, m = {}",
                    g.m
                )));
            }
            let n = k + v.b_count() as u64;
            let u_target = (p + j) as i64 - (g.m + 1) as i64;
            let v_target = (q + g.m * n) as i64 - j as i64;
            if u_prime.b_count() as u64 != k - 1 || u_prime.weight(g) as i64 != u_target {
                return Err(Error::InvariantViolation(format!(
                    "u' = {u_prime} is not in Γ_{{{u_target},{}}}",
                    k - 1
                )));
            }
            if v.weight(g) as i64 != v_target {
                return Err(Error::InvariantViolation(format!(
                    "v = {v} is not in Γ_{{{v_target},{}}}",
                    n - k
                )));
            }
            let mut u = u_prime.clone();
            u.push(Letter::B);
            Ok(u.concat(v))
        }
    }
}

/// The domain `Γ^{(p)}_{p+q+mn,n}` of [`theorem1_forward`].
pub fn theorem1_domain(
    p: u64,
    q: u64,
    n: u64,
    g: Grading,
    cap: EnumerationCap,
) -> Result<Vec<Word>> {
    word::enumerate_gamma_prefix_with_cap(p + q + g.m * n, n, p, g, cap)
}

/// The codomain `Γ^{(p+1)}_{p+q+mn,n}` of [`theorem1_forward`].
pub fn theorem1_codomain(
    p: u64,
    q: u64,
    n: u64,
    g: Grading,
    cap: EnumerationCap,
) -> Result<Vec<Word>> {
    word::enumerate_gamma_prefix_with_cap(p + q + g.m * n, n, p + 1, g, cap)
}

/// Every `BranchB` tuple with `u′ ∈ Γ_{p+j−m−1,k−1}`, `v ∈ Γ_{q+mn−j,n−k}`,
/// ordered by `j`, then `k`, then `u′`, then `v`.
pub fn enumerate_branch_b(
    p: u64,
    q: u64,
    n: u64,
    g: Grading,
    cap: EnumerationCap,
) -> Result<Vec<Decomposition>> {
    let mut out = Vec::new();
    for j in 1..=g.m {
        for k in 1..=n {
            let Some(u_weight) = (p + j).checked_sub(g.m + 1) else {
                continue;
            };
            let Some(v_weight) = (q + g.m * n).checked_sub(j) else {
                continue;
            };
            let us = word::enumerate_gamma_with_cap(u_weight, k - 1, g, cap)?;
            let vs = word::enumerate_gamma_with_cap(v_weight, n - k, g, cap)?;
            for u_prime in &us {
                for v in &vs {
                    out.push(Decomposition::BranchB {
                        j,
                        k,
                        u_prime: u_prime.clone(),
                        v: v.clone(),
                    });
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn matcher_examples() {
        let m = equal_weight_prefixes(&w("ab"), &w("ba"), Grading::new(1)).unwrap();
        assert_eq!(
            m,
            PrefixMatch {
                u_prefix_len: 2,
                v_prefix_len: 2,
                common_weight: 3
            }
        );
        let m = equal_weight_prefixes(&w("a"), &w("ab"), Grading::new(0)).unwrap();
        assert_eq!((m.u_prefix_len, m.v_prefix_len, m.common_weight), (1, 1, 1));
        assert!(matches!(
            equal_weight_prefixes(&w("b"), &w("ba"), Grading::new(1)),
            Err(Error::NoMatch(_))
        ));
    }

    #[test]
    fn forward_examples() {
        let g = Grading::new(1);
        assert_eq!(theorem1_forward(&w("ab"), 1, 1, g).unwrap(), w("ba"));
        assert_eq!(theorem1_forward(&w("bba"), 2, 1, g).unwrap(), w("abb"));
        assert_eq!(theorem1_forward(&w("bab"), 2, 1, g).unwrap(), w("bab"));
    }

    #[test]
    fn inverse_examples() {
        let g = Grading::new(1);
        assert_eq!(theorem1_inverse(&w("ba"), 1, 1, g).unwrap(), w("ab"));
        assert_eq!(theorem1_inverse(&w("abb"), 2, 1, g).unwrap(), w("bba"));
        assert_eq!(theorem1_inverse(&w("bab"), 2, 1, g).unwrap(), w("bab"));
    }

    #[test]
    fn theorem1_rejects_outside_domain() {
        let g = Grading::new(1);
        // "ba" has no prefix of weight 1
        assert!(matches!(
            theorem1_forward(&w("ba"), 1, 1, g),
            Err(Error::NotInDomain(_))
        ));
        // wrong total weight
        assert!(matches!(
            theorem1_forward(&w("aab"), 1, 1, g),
            Err(Error::NotInDomain(_))
        ));
        // q = 0
        assert!(matches!(
            theorem1_forward(&w("a"), 1, 0, g),
            Err(Error::NotInDomain(_))
        ));
        // p < mn
        assert!(matches!(
            theorem1_forward(&w("bba"), 1, 2, g),
            Err(Error::NotInDomain(_))
        ));
        assert!(matches!(
            theorem1_inverse(&w("ab"), 1, 1, g),
            Err(Error::NotInDomain(_))
        ));
    }

    #[test]
    fn factorize_examples() {
        let g = Grading::new(1);
        assert_eq!(
            factorize_at_least(&w("ba"), 1, g).unwrap(),
            (w("b"), w("a"))
        );
        assert_eq!(
            factorize_at_least(&w("ab"), 1, g).unwrap(),
            (w("a"), w("b"))
        );
        assert_eq!(
            factorize_at_least(&w("bab"), 0, g).unwrap(),
            (Word::empty(), w("bab"))
        );
        assert!(factorize_at_least(&w("a"), 2, g).is_err());
    }

    #[test]
    fn decompose_examples() {
        let g = Grading::new(1);
        assert_eq!(
            decompose(&w("ab"), 1, 1, g).unwrap(),
            Decomposition::BranchA { w: w("ab") }
        );
        assert_eq!(
            decompose(&w("ba"), 1, 1, g).unwrap(),
            Decomposition::BranchB {
                j: 1,
                k: 1,
                u_prime: Word::empty(),
                v: w("a")
            }
        );
        // "b" already has weight exactly p = 2
        assert_eq!(
            decompose(&w("bba"), 2, 1, g).unwrap(),
            Decomposition::BranchA { w: w("bba") }
        );
    }

    #[test]
    fn compose_examples() {
        let g = Grading::new(1);
        let d = Decomposition::BranchB {
            j: 1,
            k: 1,
            u_prime: Word::empty(),
            v: w("a"),
        };
        assert_eq!(compose(&d, 1, 1, g).unwrap(), w("ba"));
        assert_eq!(
            compose(&Decomposition::BranchA { w: w("ab") }, 1, 1, g).unwrap(),
            w("ab")
        );
        let d = Decomposition::BranchB {
            j: 2,
            k: 1,
            u_prime: Word::empty(),
            v: w("aa"),
        };
        assert_eq!(compose(&d, 1, 2, Grading::new(2)).unwrap(), w("baa"));
    }

    #[test]
    fn compose_rejects_bad_tuples() {
        let g = Grading::new(1);
        let bad_j = Decomposition::BranchB {
            j: 2,
            k: 1,
            u_prime: Word::empty(),
            v: w("a"),
        };
        assert!(matches!(
            compose(&bad_j, 1, 1, g),
            Err(Error::InvariantViolation(_))
        ));
        let bad_v = Decomposition::BranchB {
            j: 1,
            k: 1,
            u_prime: Word::empty(),
            v: w("aa"),
        };
        assert!(matches!(
            compose(&bad_v, 1, 1, g),
            Err(Error::InvariantViolation(_))
        ));
        let bad_a = Decomposition::BranchA { w: w("ba") };
        assert!(matches!(
            compose(&bad_a, 1, 1, g),
            Err(Error::InvariantViolation(_))
        ));
    }

    #[test]
    fn display() {
        let d = Decomposition::BranchB {
            j: 1,
            k: 1,
            u_prime: Word::empty(),
            v: w("a"),
        };
        assert_eq!(d.to_string(), "BranchB j=1 k=1 u'=ε v=a");
    }
}
