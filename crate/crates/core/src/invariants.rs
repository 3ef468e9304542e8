//! The second Conway polynomial coefficient, computed two independent ways.
//!
//! `a2_skein` runs the crossing-exchange recursion `a2(k+) - a2(k-) =
//! lk(k0)` on the second twist region of the traced diagram until it reaches
//! torus base cases. `a2_closed` evaluates the closed formulas available for
//! the all-even, even-then-odd and (even, odd, odd) shapes. The two agree on
//! the closed-form domains, which the test suites check exhaustively.

use crate::diagram::PlatDiagram;
use crate::word::{absorb_unit_second, ConwayWord};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// One crossing-exchange step of the recursion, as recorded for inspection:
/// the word it was applied to, the twist region used, the linking number of
/// the smoothed diagram, and the resulting change `a2(word) - a2(next)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeinStep {
    pub word: ConwayWord,
    pub band: usize,
    pub leading_entry: i64,
    pub lk: i64,
    pub delta: i64,
}

/// `a2` of a knot word via the skein recursion. Two-component links are
/// rejected.
pub fn a2_skein(word: &ConwayWord) -> Result<i64> {
    Ok(a2_skein_steps(word)?.0)
}

/// Like [`a2_skein`] but also returns the per-step linking-number record.
pub fn a2_skein_steps(word: &ConwayWord) -> Result<(i64, Vec<SkeinStep>)> {
    let f = word.fraction()?;
    if !f.is_knot() {
        return Err(Error::NotAKnot { p: f.p });
    }
    let mut steps = Vec::new();
    let mut total = 0i64;
    let mut cur = word.normalize();
    loop {
        let entries = cur.entries();
        match entries.len() {
            0 => break,
            1 => {
                let m = entries[0];
                debug_assert!(m % 2 != 0, "intermediate words stay knots");
                total += a2_torus2(m)?;
                break;
            }
            _ => {}
        }
        let second = entries[1];
        debug_assert!(second != 0, "normal forms have no second-entry zero");
        if second.abs() >= 2 {
            let plat = PlatDiagram::new(&cur);
            let trace = plat.knot_trace()?;
            let site = *plat
                .band_crossings(2)
                .last()
                .expect("second band is non-empty");
            let sign = plat.crossing_sign(&trace, site);
            let lk = plat.smoothed_lk(&trace, site)?;
            let delta = sign * lk;
            let mut next = entries.to_vec();
            next[1] -= 2 * second.signum();
            steps.push(SkeinStep {
                word: cur.clone(),
                band: 2,
                leading_entry: entries[0],
                lk,
                delta,
            });
            total += delta;
            cur = ConwayWord::new(next).normalize();
        } else {
            // |second| == 1: shorten by the exact unit rewrite, no a2 change
            let next = absorb_unit_second(entries).expect("unit second entry");
            cur = ConwayWord::new(next).normalize();
        }
    }
    Ok((total, steps))
}

/// `a2` of the torus knot `T(2, m)` for odd `m`: `(m^2 - 1) / 8`. The value
/// is mirror-invariant, so the sign of `m` is immaterial.
pub fn a2_torus2(m: i64) -> Result<i64> {
    if m % 2 == 0 {
        return Err(Error::ShapeMismatch(format!(
            "T(2, {m}) is a two-component link, not a knot"
        )));
    }
    let m = m as i128;
    let v = (m * m - 1) / 8;
    debug_assert_eq!((m * m - 1) % 8, 0);
    i64::try_from(v).map_err(|_| Error::Overflow)
}

/// Closed-form `a2` for the shapes the formulas cover, `None` otherwise:
///
/// * all entries positive even, n even:
///   `-1/4 * sum_j (alpha_1 + alpha_3 + ... + alpha_{2j-1}) * alpha_{2j}`
/// * positive even entries with an odd positive last entry:
///   the same double sum with positive sign plus `1/8 * S^2` (n even) or
///   `1/8 * (S^2 - 1)` (n odd), `S` the sum of odd-position entries
/// * `C(even, odd, odd)`, all positive:
///   `-1/4 * a1 * (a2 + a3) + 1/8 * (a3^2 - 1)`
pub fn a2_closed(word: &ConwayWord) -> Option<i64> {
    let w = word.entries();
    let n = w.len();
    if n == 0 || w.iter().any(|&a| a <= 0) {
        return None;
    }
    let all_even_prefix = w[..n - 1].iter().all(|&a| a % 2 == 0);
    let last_even = w[n - 1] % 2 == 0;

    if all_even_prefix && last_even && n % 2 == 0 {
        return checked_to_i64(-quarter_double_sum(w)?);
    }
    if all_even_prefix && !last_even {
        let s: i128 = w.iter().step_by(2).map(|&a| a as i128).sum();
        let value = if n % 2 == 0 {
            quarter_double_sum(w)? + s * s / 8
        } else {
            let head = quarter_double_sum(&w[..n - 1])?;
            head + (s * s - 1) / 8
        };
        return checked_to_i64(value);
    }
    if n == 3 && w[0] % 2 == 0 && w[1] % 2 == 1 && w[2] % 2 == 1 {
        let (a1, a2, a3) = (w[0] as i128, w[1] as i128, w[2] as i128);
        return checked_to_i64(-(a1 * (a2 + a3)) / 4 + (a3 * a3 - 1) / 8);
    }
    None
}

/// `1/4 * sum_{j} (partial sum of odd-position entries) * alpha_{2j}` over
/// an even-length slice. Exact on its domains: the running products are
/// divisible by 4 because the paired entries are even.
fn quarter_double_sum(w: &[i64]) -> Option<i128> {
    debug_assert_eq!(w.len() % 2, 0);
    let mut odd_partial = 0i128;
    let mut total = 0i128;
    for pair in w.chunks_exact(2) {
        odd_partial += pair[0] as i128;
        total = total.checked_add(odd_partial.checked_mul(pair[1] as i128)?)?;
    }
    debug_assert_eq!(total % 4, 0);
    Some(total / 4)
}

fn checked_to_i64(v: i128) -> Option<i64> {
    i64::try_from(v).ok()
}
