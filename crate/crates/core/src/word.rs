//! The graded two-letter word model.
//!
//! Words are finite sequences over `{a, b}`. A [`Grading`] with excess `m`
//! assigns `||a|| = 1` and `||b|| = m + 1`, so a word with `k` letters `b`
//! has weight `len + m·k`. The class `Γ_{p,k}` is the set of words of
//! weight `p` with exactly `k` letters `b`; it has `C(p − km, k)` elements.

use std::fmt;
use std::str::FromStr;

use serde_json::json;

use crate::error::{Error, Result};

/// Longest word [`enumerate_gamma`] will produce unless told otherwise.
pub const DEFAULT_MAX_LENGTH: usize = 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }
}

/// Letter weights `||a|| = 1`, `||b|| = m + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Grading {
    pub m: u64,
}

impl Grading {
    pub fn new(m: u64) -> Self {
        Grading { m }
    }

    pub fn letter_weight(&self, letter: Letter) -> u64 {
        match letter {
            Letter::A => 1,
            Letter::B => self.m + 1,
        }
    }
}

/// Upper bound on the length of enumerated words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationCap {
    pub max_length: usize,
}

impl Default for EnumerationCap {
    fn default() -> Self {
        EnumerationCap {
            max_length: DEFAULT_MAX_LENGTH,
        }
    }
}

impl EnumerationCap {
    pub fn check(&self, length: u64) -> Result<()> {
        if length > self.max_length as u64 {
            Err(Error::CapExceeded {
                length: length as i64,
                cap: self.max_length,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn weight(&self, g: Grading) -> u64 {
        self.letters.iter().map(|&l| g.letter_weight(l)).sum()
    }

    /// Number of `b`s, counted directly so that `m = 0` needs no special case.
    pub fn b_count(&self) -> usize {
        self.letters.iter().filter(|&&l| l == Letter::B).count()
    }

    pub fn a_count(&self) -> usize {
        self.len() - self.b_count()
    }

    /// Weights of the nonempty prefixes, shortest first. Strictly increasing.
    pub fn prefix_weights(&self, g: Grading) -> Vec<u64> {
        self.letters
            .iter()
            .scan(0u64, |acc, &l| {
                *acc += g.letter_weight(l);
                Some(*acc)
            })
            .collect()
    }

    /// Length of the prefix of weight exactly `r`, if there is one.
    pub fn prefix_len_with_weight(&self, r: u64, g: Grading) -> Option<usize> {
        let mut acc = 0u64;
        for (i, &l) in self.letters.iter().enumerate() {
            if acc == r {
                return Some(i);
            }
            if acc > r {
                return None;
            }
            acc += g.letter_weight(l);
        }
        (acc == r).then_some(self.len())
    }

    /// Whether some prefix (the empty one included) has weight `r`.
    pub fn has_prefix_of_weight(&self, r: u64, g: Grading) -> bool {
        self.prefix_len_with_weight(r, g).is_some()
    }

    /// Pairs `i < j` with `w_i = b` and `w_j = a`.
    pub fn inversions(&self) -> u64 {
        let mut seen_b = 0u64;
        let mut inv = 0u64;
        for &l in &self.letters {
            match l {
                Letter::B => seen_b += 1,
                Letter::A => inv += seen_b,
            }
        }
        inv
    }

    pub fn reverse(&self) -> Word {
        Word::new(self.letters.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word::new(letters)
    }

    pub fn split_at(&self, mid: usize) -> (Word, Word) {
        let (l, r) = self.letters.split_at(mid);
        (Word::new(l.to_vec()), Word::new(r.to_vec()))
    }

    pub fn push(&mut self, letter: Letter) {
        self.letters.push(letter);
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// Like `Display`, but renders the empty word as `ε`.
    pub fn to_human(&self) -> String {
        if self.is_empty() {
            "ε".to_string()
        } else {
            self.to_string()
        }
    }

    pub fn to_json(&self, g: Grading) -> serde_json::Value {
        json!({
            "word": self.to_string(),
            "weight": self.weight(g),
            "b_count": self.b_count(),
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        if s == "ε" {
            return Ok(Word::empty());
        }
        s.chars()
            .map(|c| match c {
                'a' => Ok(Letter::A),
                'b' => Ok(Letter::B),
                other => Err(Error::Parse(format!(
                    "unexpected character {other:?} in word {s:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word::new(letters.to_vec())
    }
}

/// Number of `a`s in every word of `Γ_{p,k}`, or `None` if the class is empty.
pub fn gamma_a_count(p: u64, k: u64, g: Grading) -> Option<u64> {
    (g.m + 1).checked_mul(k).and_then(|bw| p.checked_sub(bw))
}

/// Word length in `Γ_{p,k}`, or `None` if the class is empty.
pub fn gamma_length(p: u64, k: u64, g: Grading) -> Option<u64> {
    gamma_a_count(p, k, g).map(|a| a + k)
}

/// `Γ_{p,k}` in lexicographic order (`a < b`), using the default length cap.
pub fn enumerate_gamma(p: u64, k: u64, g: Grading) -> Result<Vec<Word>> {
    enumerate_gamma_with_cap(p, k, g, EnumerationCap::default())
}

pub fn enumerate_gamma_with_cap(
    p: u64,
    k: u64,
    g: Grading,
    cap: EnumerationCap,
) -> Result<Vec<Word>> {
    let Some(a_count) = gamma_a_count(p, k, g) else {
        return Ok(Vec::new());
    };
    cap.check(a_count + k)?;
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity((a_count + k) as usize);
    fill(a_count, k, &mut buf, &mut out);
    Ok(out)
}

fn fill(a_left: u64, b_left: u64, buf: &mut Vec<Letter>, out: &mut Vec<Word>) {
    if a_left == 0 && b_left == 0 {
        out.push(Word::from(buf.as_slice()));
        return;
    }
    if a_left > 0 {
        buf.push(Letter::A);
        fill(a_left - 1, b_left, buf, out);
        buf.pop();
    }
    if b_left > 0 {
        buf.push(Letter::B);
        fill(a_left, b_left - 1, buf, out);
        buf.pop();
    }
}

/// `Γ^{(r)}_{p,k}`: the words of `Γ_{p,k}` having a prefix of weight `r`.
pub fn enumerate_gamma_prefix(p: u64, k: u64, r: u64, g: Grading) -> Result<Vec<Word>> {
    enumerate_gamma_prefix_with_cap(p, k, r, g, EnumerationCap::default())
}

pub fn enumerate_gamma_prefix_with_cap(
    p: u64,
    k: u64,
    r: u64,
    g: Grading,
    cap: EnumerationCap,
) -> Result<Vec<Word>> {
    Ok(enumerate_gamma_with_cap(p, k, g, cap)?
        .into_iter()
        .filter(|w| w.has_prefix_of_weight(r, g))
        .collect())
}

/// `C(n, k)` as a count: zero whenever `k < 0`, `n < 0` or `n < k`.
pub fn binomial_count(n: i64, k: i64) -> u128 {
    if k < 0 || n < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn strings(words: &[Word]) -> Vec<String> {
        words.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn weights() {
        assert_eq!(Word::empty().weight(Grading::new(1)), 0);
        assert_eq!(w("ab").weight(Grading::new(1)), 3);
        assert_eq!(w("bab").weight(Grading::new(2)), 7);
    }

    #[test]
    fn prefix_weights_examples() {
        assert_eq!(w("ab").prefix_weights(Grading::new(1)), vec![1, 3]);
        assert_eq!(w("bba").prefix_weights(Grading::new(1)), vec![2, 4, 5]);
        assert!(Word::empty().prefix_weights(Grading::new(0)).is_empty());
    }

    #[test]
    fn enumerate_examples() {
        let g2 = Grading::new(2);
        assert_eq!(
            strings(&enumerate_gamma(5, 1, g2).unwrap()),
            ["aab", "aba", "baa"]
        );
        assert_eq!(
            strings(&enumerate_gamma(3, 1, Grading::new(1)).unwrap()),
            ["ab", "ba"]
        );
        assert_eq!(
            enumerate_gamma(0, 0, Grading::new(3)).unwrap(),
            vec![Word::empty()]
        );
        assert!(enumerate_gamma(3, 2, Grading::new(1)).unwrap().is_empty());
    }

    #[test]
    fn enumerate_m0_counts_b_directly() {
        let words = enumerate_gamma(4, 2, Grading::new(0)).unwrap();
        assert_eq!(words.len(), 6);
        assert!(words.iter().all(|w| w.b_count() == 2 && w.len() == 4));
    }

    #[test]
    fn cap_is_enforced() {
        let cap = EnumerationCap { max_length: 4 };
        assert_eq!(
            enumerate_gamma_with_cap(5, 0, Grading::new(0), cap),
            Err(Error::CapExceeded { length: 5, cap: 4 })
        );
        assert!(enumerate_gamma(27, 0, Grading::new(1)).is_err());
        // an empty class never trips the cap
        assert!(enumerate_gamma_with_cap(5, 3, Grading::new(1), cap)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn prefix_membership() {
        let g = Grading::new(1);
        assert!(w("ab").has_prefix_of_weight(1, g));
        assert!(!w("ba").has_prefix_of_weight(1, g));
        assert!(w("ba").has_prefix_of_weight(0, g));
        assert!(Word::empty().has_prefix_of_weight(0, g));
        assert!(w("ba").has_prefix_of_weight(3, g));
        assert!(!w("ba").has_prefix_of_weight(4, g));
    }

    #[test]
    fn prefix_classes() {
        let g = Grading::new(1);
        assert_eq!(
            strings(&enumerate_gamma_prefix(3, 1, 1, g).unwrap()),
            ["ab"]
        );
        assert_eq!(
            strings(&enumerate_gamma_prefix(3, 1, 2, g).unwrap()),
            ["ba"]
        );
        assert_eq!(
            strings(&enumerate_gamma(5, 2, g).unwrap()),
            ["abb", "bab", "bba"]
        );
        assert_eq!(
            strings(&enumerate_gamma_prefix(5, 2, 2, g).unwrap()),
            ["bab", "bba"]
        );
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(w("ab").inversions(), 0);
        assert_eq!(w("ba").inversions(), 1);
        assert_eq!(w("bba").inversions(), 2);
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(w("ab").reverse(), w("ba"));
        assert_eq!(Word::empty().reverse(), Word::empty());
        assert_eq!(w("bba").reverse(), w("abb"));
    }

    #[test]
    fn text_encoding() {
        assert_eq!(Word::empty().to_string(), "");
        assert_eq!(Word::empty().to_human(), "ε");
        assert_eq!(w("ε"), Word::empty());
        assert!("abc".parse::<Word>().is_err());
        assert_eq!(
            w("abb").to_json(Grading::new(1)),
            json!({"word": "abb", "weight": 5, "b_count": 2})
        );
    }

    #[test]
    fn binomial_count_convention() {
        assert_eq!(binomial_count(5, 2), 10);
        assert_eq!(binomial_count(2, 3), 0);
        assert_eq!(binomial_count(-1, 0), 0);
        assert_eq!(binomial_count(4, -1), 0);
        assert_eq!(binomial_count(0, 0), 1);
        assert_eq!(binomial_count(30, 15), 155117520);
    }
}
