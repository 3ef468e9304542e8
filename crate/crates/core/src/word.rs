//! Conway words: the twist-count sequences naming two-bridge diagrams.
//!
//! A word `C(a1, ..., an)` lists the signed half-twist counts of the n twist
//! regions of a 4-plat diagram. Sign convention: a positive entry in an odd
//! position is a right-handed twist region, a positive entry in an even
//! position a left-handed one. The empty word is the trivial diagram.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A finite sequence of signed twist counts. Zero entries are allowed and
/// meaningful: they change the region layout of the diagram.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ConwayWord {
    entries: Vec<i64>,
}

impl ConwayWord {
    pub fn new(entries: impl Into<Vec<i64>>) -> Self {
        ConwayWord { entries: entries.into() }
    }

    pub fn empty() -> Self {
        ConwayWord { entries: Vec::new() }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry negation; the mirror image of the diagram.
    pub fn mirror(&self) -> ConwayWord {
        ConwayWord::new(self.entries.iter().map(|a| -a).collect::<Vec<_>>())
    }

    /// Entry order reversed.
    pub fn reverse(&self) -> ConwayWord {
        let mut entries = self.entries.clone();
        entries.reverse();
        ConwayWord::new(entries)
    }

    /// The end-for-end symmetry of the 4-plat in this sign convention:
    /// reversal for odd-length words, reversal plus mirror for even-length
    /// ones. `equivalent(w, w.plat_reversal())` is `Same` for every word,
    /// which is not true of bare [`ConwayWord::reverse`] at even length.
    pub fn plat_reversal(&self) -> ConwayWord {
        let rev = self.reverse();
        if self.len() % 2 == 0 && !self.is_empty() {
            rev.mirror()
        } else {
            rev
        }
    }

    /// Parse `C(a1,a2,...)` or a bare comma list `a1,a2,...`. Whitespace is
    /// ignored everywhere; `C()` and the empty string denote the empty word.
    pub fn parse(text: &str) -> Result<ConwayWord> {
        Parser::new(text).run()
    }

    /// Applies the class-preserving rewrites (zero removal and trailing
    /// unit absorption) until none applies. The result names the same
    /// two-bridge class and contains no zero entry unless it is the single
    /// word `C(0)`.
    pub fn normalize(&self) -> ConwayWord {
        let mut cur = self.entries.clone();
        loop {
            if let Some(next) = rewrite_once(&cur) {
                cur = next;
            } else {
                return ConwayWord::new(cur);
            }
        }
    }
}

/// One pass of the rewrite system. Returns `None` at a normal form.
///
/// Rules, each an exact equality of fraction classes:
///   leading pair:   C(0, y, rest)    = C(rest)
///   interior zero:  C(.., x, 0, y, ..) = C(.., x + y, ..)
///   trailing pair:  C(.., x, 0)     = C(..)
///   trailing unit:  C(.., x, ±1)    = C(.., x ± 1)
fn rewrite_once(w: &[i64]) -> Option<Vec<i64>> {
    let n = w.len();
    if n >= 2 && w[0] == 0 {
        return Some(w[2..].to_vec());
    }
    for i in 1..n.saturating_sub(1) {
        if w[i] == 0 {
            let mut out = Vec::with_capacity(n - 2);
            out.extend_from_slice(&w[..i - 1]);
            out.push(w[i - 1] + w[i + 1]);
            out.extend_from_slice(&w[i + 2..]);
            return Some(out);
        }
    }
    if n >= 2 && w[n - 1] == 0 {
        return Some(w[..n - 2].to_vec());
    }
    if n >= 2 && (w[n - 1] == 1 || w[n - 1] == -1) {
        let mut out = w[..n - 1].to_vec();
        out[n - 2] += w[n - 1];
        return Some(out);
    }
    None
}

/// Rewrite of a unit second entry, used by the skein recursion to shorten
/// words it cannot twist down further:
/// `C(a, 1, c, rest)  = C(a+1, -c-1, -rest)` and
/// `C(a, -1, c, rest) = C(a-1, 1-c, -rest)`. Exact on fraction classes.
pub(crate) fn absorb_unit_second(w: &[i64]) -> Option<Vec<i64>> {
    if w.len() < 3 || (w[1] != 1 && w[1] != -1) {
        return None;
    }
    let s = w[1];
    let mut out = Vec::with_capacity(w.len() - 1);
    out.push(w[0] + s);
    out.push(-s - w[2]);
    out.extend(w[3..].iter().map(|a| -a));
    Some(out)
}

impl fmt::Display for ConwayWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C(")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for ConwayWord {
    fn from(entries: Vec<i64>) -> Self {
        ConwayWord::new(entries)
    }
}

impl From<&[i64]> for ConwayWord {
    fn from(entries: &[i64]) -> Self {
        ConwayWord::new(entries.to_vec())
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { bytes: text.as_bytes(), pos: 0 }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn run(mut self) -> Result<ConwayWord> {
        self.skip_ws();
        let bracketed = matches!(self.peek(), Some(b'C') | Some(b'c'));
        if bracketed {
            self.pos += 1;
            self.skip_ws();
            if self.peek() != Some(b'(') {
                return Err(self.error("expected '(' after 'C'"));
            }
            self.pos += 1;
        }
        let mut entries = Vec::new();
        self.skip_ws();
        let at_end = |p: &Parser| match p.peek() {
            None => !bracketed,
            Some(b')') => bracketed,
            _ => false,
        };
        if !at_end(&self) {
            loop {
                entries.push(self.integer()?);
                self.skip_ws();
                match self.peek() {
                    Some(b',') => {
                        self.pos += 1;
                        self.skip_ws();
                    }
                    _ if at_end(&self) => break,
                    Some(c) => {
                        return Err(self.error(format!("unexpected character '{}'", c as char)))
                    }
                    None => return Err(self.error("unexpected end of input")),
                }
            }
        }
        if bracketed {
            if self.peek() != Some(b')') {
                return Err(self.error("expected ')'"));
            }
            self.pos += 1;
        }
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return Err(self.error("trailing characters after word"));
        }
        Ok(ConwayWord::new(entries))
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        self.skip_ws();
        let digits_start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            self.pos = start;
            return Err(self.error("expected integer"));
        }
        let text = std::str::from_utf8(&self.bytes[digits_start..self.pos]).unwrap();
        let value: i64 = text.parse().map_err(|_| {
            let mut e = Parser { bytes: self.bytes, pos: start };
            e.error("integer out of range")
        })?;
        Ok(if negative { -value } else { value })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_bracketed_and_bare() {
        assert_eq!(ConwayWord::parse("C(3, -1, 2)").unwrap().entries(), &[3, -1, 2]);
        assert_eq!(ConwayWord::parse(" 3,-1,2 ").unwrap().entries(), &[3, -1, 2]);
        assert_eq!(ConwayWord::parse("C()").unwrap(), ConwayWord::empty());
        assert_eq!(ConwayWord::parse("").unwrap(), ConwayWord::empty());
        assert_eq!(ConwayWord::parse("C( - 2 , 0 )").unwrap().entries(), &[-2, 0]);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = ConwayWord::parse("C(3,,2)").unwrap_err();
        match err {
            Error::Parse { position, .. } => assert_eq!(position, 4),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(ConwayWord::parse("C(3").is_err());
        assert!(ConwayWord::parse("3,2)").is_err());
        assert!(ConwayWord::parse("C(x)").is_err());
    }

    #[test]
    fn display_round_trips() {
        for text in ["C(3,-1,2)", "C()", "C(5,1,2)"] {
            let w = ConwayWord::parse(text).unwrap();
            assert_eq!(w.to_string(), text);
            assert_eq!(ConwayWord::parse(&w.to_string()).unwrap(), w);
        }
    }

    #[test]
    fn mirror_negates_and_reverse_reverses() {
        let w = ConwayWord::new(vec![2, -1, 3]);
        assert_eq!(w.mirror().entries(), &[-2, 1, -3]);
        assert_eq!(w.reverse().entries(), &[3, -1, 2]);
        assert_eq!(w.mirror().mirror(), w);
    }

    #[test]
    fn normalization_rules() {
        // interior zero merge
        assert_eq!(ConwayWord::new(vec![2, 0, 3, 4]).normalize().entries(), &[5, 4]);
        // leading pair removal
        assert_eq!(ConwayWord::new(vec![0, 7, 3, 4]).normalize().entries(), &[3, 4]);
        // trailing pair removal
        assert_eq!(ConwayWord::new(vec![3, 4, 9, 0]).normalize().entries(), &[3, 4]);
        // trailing unit absorption, cascading
        assert_eq!(ConwayWord::new(vec![2, 2, 1]).normalize().entries(), &[2, 3]);
        assert_eq!(ConwayWord::new(vec![2, -1, 1]).normalize().entries(), &[2]);
        // C(0) alone is a normal form (the two-component unlink)
        assert_eq!(ConwayWord::new(vec![0]).normalize().entries(), &[0]);
    }

    #[test]
    fn unit_second_rewrite() {
        assert_eq!(absorb_unit_second(&[4, 1, 3, 2]), Some(vec![5, -4, -2]));
        assert_eq!(absorb_unit_second(&[4, -1, 3, 2]), Some(vec![3, -2, -2]));
        assert_eq!(absorb_unit_second(&[4, 2, 3]), None);
    }
}
