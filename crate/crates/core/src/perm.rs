//! Permutations in one-line notation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::order::{parse_labels, write_comma_separated};
use crate::sign::{Sign, SignWord};

/// A permutation of `{1, ..., n}`, stored as `σ(1), ..., σ(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n {
                return Err(Error::OutOfRange { element: x, n });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::Duplicate(x));
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn new_unchecked(images: Vec<usize>) -> Permutation {
        Permutation { images }
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `σ(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// Ascent (`+`) or descent (`-`) at each adjacent pair.
    pub fn descent_pattern(&self) -> SignWord {
        self.images
            .windows(2)
            .map(|p| Sign::from_bool(p[1] > p[0]))
            .collect()
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        LexPermutations::new((1..=n).collect()).map(|images| Permutation { images })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_comma_separated(f, &self.images)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Permutation> {
        Permutation::new(parse_labels(s)?)
    }
}

/// See [`Permutation::descent_pattern`].
pub fn descent_pattern(sigma: &Permutation) -> SignWord {
    sigma.descent_pattern()
}

/// Lexicographic successor generation over a sorted starting vector.
pub(crate) struct LexPermutations {
    next: Option<Vec<usize>>,
}

impl LexPermutations {
    pub(crate) fn new(start: Vec<usize>) -> LexPermutations {
        LexPermutations { next: Some(start) }
    }
}

impl Iterator for LexPermutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(current)
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn descent_patterns() {
        assert_eq!(p("15324").descent_pattern().to_string(), "+--+");
        assert_eq!(
            Permutation::identity(6).descent_pattern(),
            SignWord::all_plus(5)
        );
        assert_eq!(p("4312").descent_pattern().to_string(), "--+");
    }

    #[test]
    fn validation() {
        assert_eq!(Permutation::new(vec![1, 1]), Err(Error::Duplicate(1)));
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert_eq!(p("10,2,3,4,5,6,7,8,9,1").at(1), 10);
        assert_eq!(p("4,3,1,2").to_string(), "4,3,1,2");
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Permutation::all(5).count(), 120);
        assert_eq!(Permutation::all(1).count(), 1);
        let all: Vec<_> = Permutation::all(3).map(|s| s.to_string()).collect();
        assert_eq!(all, ["1,2,3", "1,3,2", "2,1,3", "2,3,1", "3,1,2", "3,2,1"]);
    }
}
