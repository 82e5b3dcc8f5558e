//! Sign words over `{+, -}`.

use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_char(c: char) -> Result<Sign> {
        match c {
            '+' => Ok(Sign::Plus),
            // ASCII hyphen and the typographic minus sign.
            '-' | '\u{2212}' => Ok(Sign::Minus),
            other => Err(Error::InvalidSign(other)),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    /// `Plus` when `b` holds.
    pub fn from_bool(b: bool) -> Sign {
        if b {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Sign> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Sign::from_char(c),
            _ => Err(Error::Parse(format!("expected a single sign, got {s:?}"))),
        }
    }
}

/// A word over `{+, -}`.
///
/// Used both as the constraint pattern of a class of cyclic orders (length
/// `n - 2` for orders on `[n]`) and as the descent pattern of a permutation
/// (length `n - 1` for permutations of `[n]`).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignWord(Vec<Sign>);

impl SignWord {
    pub fn new(signs: Vec<Sign>) -> SignWord {
        SignWord(signs)
    }

    pub fn empty() -> SignWord {
        SignWord(Vec::new())
    }

    /// The word `+^len`.
    pub fn all_plus(len: usize) -> SignWord {
        SignWord(vec![Sign::Plus; len])
    }

    /// The word `+-+-...` of the given length (the up/down descent pattern).
    pub fn alternating(len: usize) -> SignWord {
        SignWord((0..len).map(|t| Sign::from_bool(t % 2 == 0)).collect())
    }

    /// Every word of the given length, in lexicographic order with `+ < -`.
    pub fn all_of_len(len: usize) -> impl Iterator<Item = SignWord> {
        (0u64..1 << len).map(move |mask| {
            SignWord(
                (0..len)
                    .map(|t| Sign::from_bool(mask >> (len - 1 - t) & 1 == 0))
                    .collect(),
            )
        })
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    /// 0-based access.
    pub fn get(&self, idx: usize) -> Option<Sign> {
        self.0.get(idx).copied()
    }

    pub fn push(&mut self, s: Sign) {
        self.0.push(s);
    }

    pub fn with(&self, s: Sign) -> SignWord {
        let mut out = self.clone();
        out.push(s);
        out
    }

    pub fn prefix(&self, len: usize) -> SignWord {
        SignWord(self.0[..len].to_vec())
    }

    /// Flips the signs at even (1-based) positions.
    pub fn involution(&self) -> SignWord {
        SignWord(
            self.0
                .iter()
                .enumerate()
                .map(|(t, &s)| if t % 2 == 1 { -s } else { s })
                .collect(),
        )
    }
}

impl fmt::Display for SignWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for SignWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<SignWord> {
        s.chars()
            .map(Sign::from_char)
            .collect::<Result<Vec<_>>>()
            .map(SignWord)
    }
}

impl FromIterator<Sign> for SignWord {
    fn from_iter<I: IntoIterator<Item = Sign>>(iter: I) -> Self {
        SignWord(iter.into_iter().collect())
    }
}

impl Serialize for SignWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The sign-word involution: keeps odd positions, negates even ones.
pub fn involution_i(w: &SignWord) -> SignWord {
    w.involution()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SignWord {
        s.parse().unwrap()
    }

    #[test]
    fn involution_examples() {
        assert_eq!(involution_i(&w("++--")), w("+--+"));
        assert_eq!(involution_i(&w("")), w(""));
        assert_eq!(
            involution_i(&SignWord::all_plus(7)),
            SignWord::alternating(7)
        );
    }

    #[test]
    fn involution_is_involutive() {
        for len in 0..=12 {
            for word in SignWord::all_of_len(len) {
                assert_eq!(word.involution().involution(), word);
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("+-−").to_string(), "+--");
        assert!("+x".parse::<SignWord>().is_err());
        assert_eq!(SignWord::all_of_len(3).count(), 8);
        assert_eq!(SignWord::all_of_len(2).next().unwrap(), w("++"));
    }
}
