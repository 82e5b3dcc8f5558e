//! Total cyclic orders on `[n]`, stored as successor cycles.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sign::{Sign, SignWord};

/// A total cyclic order on `{1, ..., n}` with `n >= 3`.
///
/// The order is kept as the cycle of successors read from element 1, so two
/// circular readings that differ by a rotation build the same value. A
/// position table (the inverse of the cycle) answers membership queries in
/// constant time.
#[derive(Clone)]
pub struct CyclicOrder {
    cycle: Vec<usize>,
    pos: Vec<usize>,
}

impl CyclicOrder {
    /// Builds the order whose circular reading is `seq`.
    pub fn from_sequence(seq: &[usize]) -> Result<CyclicOrder> {
        let n = seq.len();
        if n < 3 {
            return Err(Error::GroundSetTooSmall { got: n, min: 3 });
        }
        let mut pos = vec![usize::MAX; n + 1];
        for (t, &x) in seq.iter().enumerate() {
            if x == 0 || x > n {
                return Err(Error::OutOfRange { element: x, n });
            }
            if pos[x] != usize::MAX {
                return Err(Error::Duplicate(x));
            }
            pos[x] = t;
        }
        let start = pos[1];
        let cycle: Vec<usize> = (0..n).map(|t| seq[(start + t) % n]).collect();
        Ok(CyclicOrder::from_canonical(cycle))
    }

    /// `cycle` must start at 1 and be a permutation of `1..=n`.
    pub(crate) fn from_canonical(cycle: Vec<usize>) -> CyclicOrder {
        debug_assert_eq!(cycle[0], 1);
        let mut pos = vec![0; cycle.len() + 1];
        for (t, &x) in cycle.iter().enumerate() {
            pos[x] = t;
        }
        CyclicOrder { cycle, pos }
    }

    pub fn n(&self) -> usize {
        self.cycle.len()
    }

    /// The circular reading starting at element 1.
    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    /// The element following `x` in the positive direction.
    pub fn succ(&self, x: usize) -> usize {
        self.cycle[(self.pos[x] + 1) % self.n()]
    }

    fn check(&self, xs: &[usize]) -> Result<()> {
        let n = self.n();
        for (t, &x) in xs.iter().enumerate() {
            if x == 0 || x > n {
                return Err(Error::OutOfRange { element: x, n });
            }
            if xs[..t].contains(&x) {
                return Err(Error::NotDistinct);
            }
        }
        Ok(())
    }

    /// Steps needed to walk from `x` to `y`.
    fn gap(&self, x: usize, y: usize) -> usize {
        let n = self.n();
        (self.pos[y] + n - self.pos[x]) % n
    }

    /// Unchecked membership; arguments must be distinct and in range.
    pub(crate) fn contains(&self, x: usize, y: usize, z: usize) -> bool {
        self.gap(x, y) < self.gap(x, z)
    }

    /// Whether `(x, y, z)` belongs to the order: walking from `x`, `y` is met
    /// strictly before `z`.
    pub fn in_order(&self, x: usize, y: usize, z: usize) -> Result<bool> {
        self.check(&[x, y, z])?;
        Ok(self.contains(x, y, z))
    }

    pub(crate) fn content_unchecked(&self, i: usize, j: usize) -> usize {
        self.gap(i, j) - 1
    }

    /// Number of elements strictly inside the arc from `i` to `j`.
    pub fn content(&self, i: usize, j: usize) -> Result<usize> {
        self.check(&[i, j])?;
        Ok(self.content_unchecked(i, j))
    }

    pub(crate) fn multi_content_unchecked(&self, ys: &[usize]) -> Vec<usize> {
        let p = ys.len();
        (0..p)
            .map(|t| self.content_unchecked(ys[t], ys[(t + 1) % p]))
            .collect()
    }

    /// Contents of the arcs between consecutive reference points, closing
    /// back to the first one.
    pub fn multi_content(&self, ys: &[usize]) -> Result<Vec<usize>> {
        if ys.len() < 2 {
            return Err(Error::Parse(
                "multi-content needs at least two elements".into(),
            ));
        }
        self.check(ys)?;
        Ok(self.multi_content_unchecked(ys))
    }

    pub(crate) fn is_chain_unchecked(&self, ys: &[usize]) -> bool {
        ys.windows(2)
            .skip(1)
            .all(|pair| self.gap(ys[0], pair[0]) < self.gap(ys[0], pair[1]))
    }

    /// Whether `ys` appears in this order when walking around from `ys[0]`.
    pub fn is_chain(&self, ys: &[usize]) -> Result<bool> {
        if ys.len() < 3 {
            return Err(Error::Parse("a chain needs at least three elements".into()));
        }
        self.check(ys)?;
        Ok(self.is_chain_unchecked(ys))
    }

    /// Removes the largest element, keeping every other triple as it was.
    pub fn delete_max(&self) -> Result<CyclicOrder> {
        let n = self.n();
        if n < 4 {
            return Err(Error::GroundSetTooSmall { got: n, min: 4 });
        }
        let cycle = self.cycle.iter().copied().filter(|&x| x != n).collect();
        Ok(CyclicOrder::from_canonical(cycle))
    }

    /// The orientation of each consecutive triple `(i, i+1, i+2)`.
    pub fn cyclic_descent_pattern(&self) -> SignWord {
        (1..=self.n() - 2)
            .map(|i| Sign::from_bool(self.contains(i, i + 1, i + 2)))
            .collect()
    }

    /// Exhaustive check of cyclicity, asymmetry, transitivity and totality of
    /// the induced ternary relation. Costs `O(n^4)`.
    pub fn validate_cyclic_axioms(&self) -> bool {
        let n = self.n();
        let z = |x, y, w| self.contains(x, y, w);
        for x in 1..=n {
            for y in 1..=n {
                for w in 1..=n {
                    if x == y || y == w || x == w {
                        continue;
                    }
                    let xyw = z(x, y, w);
                    if xyw && !z(y, w, x) {
                        return false;
                    }
                    if xyw == z(w, y, x) {
                        // asymmetry and totality together
                        return false;
                    }
                    if !xyw {
                        continue;
                    }
                    for u in 1..=n {
                        if u == x || u == y || u == w {
                            continue;
                        }
                        if z(x, w, u) && !z(x, y, u) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

impl PartialEq for CyclicOrder {
    fn eq(&self, other: &Self) -> bool {
        self.cycle == other.cycle
    }
}

impl Eq for CyclicOrder {}

impl Hash for CyclicOrder {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.cycle.hash(state);
    }
}

impl fmt::Debug for CyclicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicOrder[{self}]")
    }
}

impl fmt::Display for CyclicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_comma_separated(f, &self.cycle)
    }
}

pub(crate) fn write_comma_separated(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    for (t, x) in xs.iter().enumerate() {
        if t > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Parses `"1,3,4,2"`; a string of single digits such as `"1342"` is also
/// accepted when every label is below 10.
pub(crate) fn parse_labels(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    if s.contains(',') || s.contains(' ') {
        s.split([',', ' '])
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("unexpected character {c:?}")))
            })
            .collect()
    }
}

impl FromStr for CyclicOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<CyclicOrder> {
        CyclicOrder::from_sequence(&parse_labels(s)?)
    }
}

/// See [`CyclicOrder::from_sequence`].
pub fn cyclic_order_from_sequence(seq: &[usize]) -> Result<CyclicOrder> {
    CyclicOrder::from_sequence(seq)
}
