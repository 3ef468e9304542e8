//! Exact continued-fraction evaluation and Schubert classification.
//!
//! A word `C(a1, ..., an)` evaluates to the extended rational
//! `a1 + 1/(a2 + 1/( ... + 1/an))`, computed in exact integer pairs with an
//! explicit infinity state. The reduced value `N/D` normalizes to the
//! Schubert pair `(p, q)` with `p = |N|` and `q = sign(N) * D (mod p)`.
//! Two words name the same unoriented two-bridge class iff their pairs share
//! `p` and `q' = q^(±1) (mod p)`; negating `q` gives the mirror class.

use crate::word::ConwayWord;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Normalized fraction class of a two-bridge diagram.
///
/// `(1, 0)` is the unknot (this is also where the infinity state of the
/// evaluation lands), `(0, 1)` the two-component unlink. For `p >= 2`,
/// `q` is reduced to `0 < q < p` with `gcd(p, q) = 1`; `p` odd means the
/// word closes to a knot, `p` even to a two-component link.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SchubertPair {
    pub p: u64,
    pub q: u64,
}

/// Outcome of comparing two words. `Mirror` means equivalent to the mirror
/// image only; amphichiral coincidences report `Same`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EquivalenceVerdict {
    Same,
    Mirror,
    Distinct,
}

impl SchubertPair {
    pub const UNKNOT: SchubertPair = SchubertPair { p: 1, q: 0 };
    pub const UNLINK: SchubertPair = SchubertPair { p: 0, q: 1 };

    pub fn is_unknot(&self) -> bool {
        self.p == 1
    }

    /// One component iff the determinant is odd.
    pub fn is_knot(&self) -> bool {
        self.p % 2 == 1
    }

    /// The fraction orbit `{q, q^(-1) mod p}` that classifies the word up to
    /// equivalence. Degenerate classes return their single residue twice.
    pub fn orbit(&self) -> (u64, u64) {
        if self.p < 2 {
            return (self.q, self.q);
        }
        let inv = mod_inverse(self.q, self.p).expect("q coprime to p by construction");
        if self.q <= inv {
            (self.q, inv)
        } else {
            (inv, self.q)
        }
    }

    /// Orbit of the mirror class.
    pub fn mirror_orbit(&self) -> (u64, u64) {
        self.mirror().orbit()
    }

    /// The pair of the mirror image.
    pub fn mirror(&self) -> SchubertPair {
        if self.p < 2 {
            return *self;
        }
        SchubertPair { p: self.p, q: self.p - self.q }
    }

    /// Canonical key of the chirality-aware class: `(p, min of orbit)`.
    /// Mirror classes get distinct keys unless amphichiral.
    pub fn class_key(&self) -> (u64, u64) {
        (self.p, self.orbit().0)
    }

    pub fn verdict_with(&self, other: &SchubertPair) -> EquivalenceVerdict {
        if self.p != other.p {
            return EquivalenceVerdict::Distinct;
        }
        if self.p < 2 {
            return EquivalenceVerdict::Same;
        }
        let (a, b) = self.orbit();
        let q = other.q;
        if q == a || q == b {
            return EquivalenceVerdict::Same;
        }
        let (ma, mb) = self.mirror_orbit();
        if q == ma || q == mb {
            return EquivalenceVerdict::Mirror;
        }
        EquivalenceVerdict::Distinct
    }
}

impl fmt::Display for SchubertPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// Classification of two words: `Same` iff equal `p` and `q' = q^(±1) (mod
/// p)`, `Mirror` iff equal `p` and `q' = -q^(±1) (mod p)` only, otherwise
/// `Distinct`. A knot compared to a two-component link is `Distinct`.
pub fn equivalent(w1: &ConwayWord, w2: &ConwayWord) -> Result<EquivalenceVerdict> {
    let f1 = evaluate_fraction(w1)?;
    let f2 = evaluate_fraction(w2)?;
    Ok(f1.verdict_with(&f2))
}

/// Evaluate a word to its normalized Schubert pair. Every finite word
/// evaluates; the only failure mode is 128-bit overflow of the exact
/// continued-fraction arithmetic.
pub fn evaluate_fraction(word: &ConwayWord) -> Result<SchubertPair> {
    let (num, den) = fold_extended(word.entries())?;
    Ok(normalize_fraction(num, den))
}

impl ConwayWord {
    /// Shorthand for [`evaluate_fraction`].
    pub fn fraction(&self) -> Result<SchubertPair> {
        evaluate_fraction(self)
    }
}

/// Right-to-left fold of `a1 + 1/(a2 + 1/(...))` over exact integer pairs.
/// The empty word is the infinity state `(1, 0)`, whose plat closure is the
/// unknot. Returned pair is reduced with non-negative denominator.
fn fold_extended(entries: &[i64]) -> Result<(i128, i128)> {
    let mut num: i128 = 1;
    let mut den: i128 = 0;
    for &a in entries.iter().rev() {
        // a + 1/(num/den) = (a*num + den) / num
        let next_num = (a as i128)
            .checked_mul(num)
            .and_then(|t| t.checked_add(den))
            .ok_or(Error::Overflow)?;
        den = num;
        num = next_num;
        let g = gcd_i128(num, den);
        if g > 1 {
            num /= g;
            den /= g;
        }
    }
    if den < 0 {
        num = -num;
        den = -den;
    }
    Ok((num, den))
}

fn normalize_fraction(num: i128, den: i128) -> SchubertPair {
    if den == 0 {
        return SchubertPair::UNKNOT;
    }
    if num == 0 {
        return SchubertPair::UNLINK;
    }
    let p128 = num.unsigned_abs();
    debug_assert!(p128 <= u64::MAX as u128, "reduced numerator fits after overflow checks");
    let p = p128 as u64;
    if p == 1 {
        return SchubertPair::UNKNOT;
    }
    let signed_q = if num > 0 { den } else { -den };
    let q = signed_q.rem_euclid(p as i128) as u64;
    SchubertPair { p, q }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Inverse of `q` modulo `m` (extended Euclid); `None` if not coprime.
pub(crate) fn mod_inverse(q: u64, m: u64) -> Option<u64> {
    if m == 0 {
        return None;
    }
    let (mut old_r, mut r) = (q as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use EquivalenceVerdict::*;

    fn frac(entries: &[i64]) -> SchubertPair {
        evaluate_fraction(&ConwayWord::from(entries)).unwrap()
    }

    fn verdict(a: &[i64], b: &[i64]) -> EquivalenceVerdict {
        equivalent(&ConwayWord::from(a), &ConwayWord::from(b)).unwrap()
    }

    #[test]
    fn base_values() {
        assert_eq!(frac(&[3]), SchubertPair { p: 3, q: 1 });
        assert_eq!(frac(&[2, 2]), SchubertPair { p: 5, q: 2 });
        assert_eq!(frac(&[]), SchubertPair::UNKNOT);
        assert_eq!(frac(&[0]), SchubertPair::UNLINK);
        assert_eq!(frac(&[5, 0]), SchubertPair::UNKNOT);
        assert_eq!(frac(&[-4, 0]), SchubertPair::UNKNOT);
        assert_eq!(frac(&[1]), SchubertPair::UNKNOT);
    }

    #[test]
    fn table_words_have_expected_determinants() {
        for (entries, p) in [
            (vec![4i64, 2], 9),
            (vec![6, 2], 13),
            (vec![4, 4], 17),
            (vec![8, 2], 17),
            (vec![6, 4], 25),
            (vec![5, 1, 2], 17),
            (vec![7, 1, 2], 23),
            (vec![5, 3, 2], 37),
            (vec![3, 2, 2, 1, 2], 65),
            (vec![3, 1, 1, 1, 2, 2], 69),
            (vec![2, 1, 1, 1, 2], 21),
            (vec![4, 1, 1, 1, 3], 51),
        ] {
            assert_eq!(frac(&entries).p, p, "word {entries:?}");
        }
    }

    #[test]
    fn reduction_identities_are_exact() {
        // C(x, 1) = C(x+1), including through negative x
        for x in -6..=6 {
            assert_eq!(frac(&[x, 1]), frac(&[x + 1]));
        }
        // C(.., x, 0, y, ..) = C(.., x+y, ..)
        assert_eq!(frac(&[5, 0, 3, 4]), frac(&[8, 4]));
        assert_eq!(frac(&[2, 3, 0, -1, 4]), frac(&[2, 2, 4]));
        // C(a, -1, c) = C(a-1, 1-c)
        for a in -5..=5 {
            for c in -5..=5 {
                assert_eq!(frac(&[a, -1, c]), frac(&[a - 1, 1 - c]), "a={a} c={c}");
            }
        }
    }

    #[test]
    fn normalization_preserves_class() {
        for entries in [
            vec![2i64, 0, 3, 4],
            vec![0, 7, 3, 4],
            vec![3, 4, 9, 0],
            vec![2, 2, 1],
            vec![4, 1, 3, -1],
        ] {
            let w = ConwayWord::new(entries.clone());
            assert_eq!(
                frac(&entries),
                evaluate_fraction(&w.normalize()).unwrap(),
                "word {entries:?}"
            );
        }
    }

    #[test]
    fn verdicts() {
        assert_eq!(verdict(&[2, 1], &[3]), Same);
        assert_eq!(verdict(&[3], &[-3]), Mirror);
        assert_eq!(verdict(&[3], &[2, 2]), Distinct);
        // 8_2 written both ways round
        assert_eq!(verdict(&[5, 1, 2], &[2, 1, 5]), Same);
        // figure-eight is amphichiral: (5,2) vs (5,3), 3 = 2^(-1) mod 5
        assert_eq!(verdict(&[2, 2], &[-2, -2]), Same);
        // knot vs link
        assert_eq!(verdict(&[3], &[4]), Distinct);
    }

    #[test]
    fn mirror_lands_in_negated_class() {
        for entries in [vec![3i64], vec![2, 2], vec![5, 1, 2], vec![2, -1, 3, 4]] {
            let w = ConwayWord::new(entries);
            let f = evaluate_fraction(&w).unwrap();
            let m = evaluate_fraction(&w.mirror()).unwrap();
            assert_eq!(f.p, m.p);
            assert_eq!(f.mirror_orbit(), m.orbit());
        }
    }

    #[test]
    fn plat_reversal_is_always_same() {
        for entries in [
            vec![5i64, 1, 2],
            vec![4, 2],
            vec![2, 1],
            vec![6, 2],
            vec![2, -1, 3, 4],
            vec![1, 2, 3, 1],
        ] {
            let w = ConwayWord::new(entries.clone());
            assert_eq!(
                equivalent(&w, &w.plat_reversal()).unwrap(),
                Same,
                "word {entries:?}"
            );
        }
    }

    #[test]
    fn bare_reversal_same_at_odd_length() {
        for entries in [vec![5i64, 1, 2], vec![3], vec![2, -1, 3], vec![1, 2, 3, 4, 5]] {
            let w = ConwayWord::new(entries.clone());
            assert_eq!(equivalent(&w, &w.reverse()).unwrap(), Same, "word {entries:?}");
        }
    }

    #[test]
    fn overflow_is_reported() {
        let w = ConwayWord::new(vec![i64::MAX, i64::MAX, i64::MAX, i64::MAX]);
        assert_eq!(evaluate_fraction(&w), Err(Error::Overflow));
    }

    #[test]
    fn mod_inverse_basics() {
        assert_eq!(mod_inverse(2, 5), Some(3));
        assert_eq!(mod_inverse(3, 17), Some(6));
        assert_eq!(mod_inverse(2, 4), None);
    }

    use crate::Error;
}
