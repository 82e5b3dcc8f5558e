//! The bijection between total cyclic orders on `[n+1]` and permutations of
//! `[n]` that carries cyclic descent patterns to linear ones.
//!
//! The map is built by growing both sides one element at a time. When the
//! element `m+1` is added to the circle, the content `β = c(m, m+1)` of the
//! arc from `m` to the new element decides the last value of the permutation
//! of `[m]`: `α = m - β` for even `m`, `α = 1 + β` for odd `m`. The earlier
//! values are re-standardized around it by [`unsplit_d`].

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::oracle;
use crate::order::CyclicOrder;
use crate::perm::Permutation;
use crate::sign::SignWord;

/// A permutation of `[n]` split into its standardized prefix and its last
/// value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPair {
    pub reduced: Permutation,
    pub last: usize,
}

/// Drops the last entry and closes the gap it leaves in the values.
pub fn shrink_d(sigma: &Permutation) -> Result<Permutation> {
    let n = sigma.n();
    if n < 2 {
        return Err(Error::GroundSetTooSmall { got: n, min: 2 });
    }
    let last = sigma.at(n);
    let images = sigma.images()[..n - 1]
        .iter()
        .map(|&x| if x < last { x } else { x - 1 })
        .collect();
    Ok(Permutation::new_unchecked(images))
}

pub fn split_d(sigma: &Permutation) -> Result<SplitPair> {
    Ok(SplitPair {
        reduced: shrink_d(sigma)?,
        last: sigma.at(sigma.n()),
    })
}

/// Inverse of [`split_d`]: shifts the values `>= last` up by one and appends
/// `last`.
pub fn unsplit_d(pair: &SplitPair) -> Result<Permutation> {
    let n = pair.reduced.n() + 1;
    if pair.last == 0 || pair.last > n {
        return Err(Error::OutOfRange {
            element: pair.last,
            n,
        });
    }
    Ok(unsplit(&pair.reduced, pair.last))
}

fn unsplit(reduced: &Permutation, last: usize) -> Permutation {
    let mut images: Vec<usize> = reduced
        .images()
        .iter()
        .map(|&x| if x < last { x } else { x + 1 })
        .collect();
    images.push(last);
    Permutation::new_unchecked(images)
}

fn alpha_from_beta(m: usize, beta: usize) -> usize {
    if m.is_multiple_of(2) {
        m - beta
    } else {
        1 + beta
    }
}

fn beta_from_alpha(m: usize, alpha: usize) -> usize {
    if m.is_multiple_of(2) {
        m - alpha
    } else {
        alpha - 1
    }
}

/// Maps an order on `[n+1]` to a permutation of `[n]`.
pub fn forward_f(z: &CyclicOrder) -> Permutation {
    let top = z.n();
    // Peel the largest element off repeatedly, recording β at each size.
    let mut betas = Vec::with_capacity(top - 2);
    let mut cycle = z.cycle().to_vec();
    for size in (3..=top).rev() {
        let pos_m = cycle.iter().position(|&x| x == size - 1).expect("present");
        let pos_new = cycle.iter().position(|&x| x == size).expect("present");
        let beta = (pos_new + size - pos_m) % size - 1;
        betas.push(beta);
        cycle.remove(pos_new);
    }
    let mut sigma = Permutation::identity(1);
    for (m, beta) in (2..top).zip(betas.into_iter().rev()) {
        sigma = unsplit(&sigma, alpha_from_beta(m, beta));
    }
    sigma
}

/// Maps a permutation of `[n]`, `n >= 2`, to the order on `[n+1]` sent to it
/// by [`forward_f`].
pub fn inverse_f(sigma: &Permutation) -> Result<CyclicOrder> {
    let n = sigma.n();
    if n < 2 {
        // the image would be the two-element cycle, which is not an order
        return Err(Error::GroundSetTooSmall { got: n, min: 2 });
    }
    let mut lasts = Vec::with_capacity(n);
    let mut current = sigma.clone();
    while current.n() >= 2 {
        lasts.push(current.at(current.n()));
        current = shrink_d(&current)?;
    }
    // Grow the cycle from (1, 2), inserting m+1 so that c(m, m+1) = β.
    let mut cycle = vec![1, 2];
    for (m, alpha) in (2..=n).zip(lasts.into_iter().rev()) {
        let beta = beta_from_alpha(m, alpha);
        let pos_m = cycle.iter().position(|&x| x == m).expect("present");
        let at = (pos_m + beta) % cycle.len() + 1;
        cycle.insert(at, m + 1);
    }
    CyclicOrder::from_sequence(&cycle)
}

/// Checks that every order with cyclic descent pattern `w` is sent to a
/// permutation with descent pattern `i(w)`.
pub fn descent_transport_check(w: &SignWord) -> Result<bool> {
    let target = w.involution();
    for z in oracle::orders_in_class(w)? {
        if forward_f(&z).descent_pattern() != target {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Counts orders on `[n+1]` with every consecutive triple positively oriented
/// and `i = 1 + c(n, n+1)` (odd `n`) or `i = 1 + c(n+1, n)` (even `n`).
/// These are the Entringer numbers `e_{n,i}`.
///
/// For `n = 1` the ground set `[2]` carries a single cyclic arrangement with
/// `c(1, 2) = 0`, so the count is 1 at `i = 1`.
pub fn entringer_by_content(n: usize, i: usize) -> Result<BigUint> {
    if n == 0 || i == 0 || i > n {
        return Err(Error::OutOfRange { element: i, n });
    }
    if n == 1 {
        return Ok(BigUint::from(1u32));
    }
    let w = SignWord::all_plus(n - 1);
    let count = oracle::orders_in_class(&w)?
        .filter(|z| {
            let c = if n % 2 == 1 {
                z.content_unchecked(n, n + 1)
            } else {
                z.content_unchecked(n + 1, n)
            };
            1 + c == i
        })
        .count();
    Ok(BigUint::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn z(s: &str) -> CyclicOrder {
        s.parse().unwrap()
    }

    #[test]
    fn shrink_examples() {
        assert_eq!(shrink_d(&p("14253")).unwrap(), p("1324"));
        assert_eq!(
            shrink_d(&Permutation::identity(5)).unwrap(),
            Permutation::identity(4)
        );
        assert_eq!(shrink_d(&p("4312")).unwrap(), p("321"));
        assert!(shrink_d(&p("1")).is_err());
    }

    #[test]
    fn split_examples() {
        let pair = split_d(&p("4312")).unwrap();
        assert_eq!(
            pair,
            SplitPair {
                reduced: p("321"),
                last: 2
            }
        );
        assert_eq!(unsplit_d(&pair).unwrap(), p("4312"));
        assert!(unsplit_d(&SplitPair {
            reduced: p("21"),
            last: 4
        })
        .is_err());
        for sigma in Permutation::all(5) {
            assert_eq!(unsplit_d(&split_d(&sigma).unwrap()).unwrap(), sigma);
        }
    }

    #[test]
    fn forward_examples() {
        assert_eq!(forward_f(&z("1,5,3,4,2")), p("4312"));
        assert_eq!(forward_f(&z("1,2,3")), p("12"));
        assert_eq!(forward_f(&z("3,2,1")), p("21"));
        // β = c(3,4) = 0 with n = 3 odd puts 1 last
        assert_eq!(forward_f(&z("1,2,3,4")).at(3), 1);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inverse_f(&p("4312")).unwrap(), z("1,5,3,4,2"));
        assert_eq!(inverse_f(&p("12")).unwrap(), z("1,2,3"));
        assert!(inverse_f(&p("1")).is_err());
        for sigma in Permutation::all(6) {
            assert_eq!(forward_f(&inverse_f(&sigma).unwrap()), sigma);
        }
    }

    #[test]
    fn shrink_commutes_with_deletion() {
        for n in 4..=8 {
            for order in oracle::enumerate_cyclic_orders(n).unwrap() {
                let lhs = shrink_d(&forward_f(&order)).unwrap();
                assert_eq!(lhs, forward_f(&order.delete_max().unwrap()));
            }
        }
    }

    #[test]
    fn transport() {
        assert!(descent_transport_check(&"-+".parse().unwrap()).unwrap());
        for w in SignWord::all_of_len(6) {
            assert!(descent_transport_check(&w).unwrap(), "{w}");
        }
    }

    #[test]
    fn entringer_row_five() {
        let row: Vec<BigUint> = (1..=5)
            .map(|i| entringer_by_content(5, i).unwrap())
            .collect();
        let want: Vec<BigUint> = [5u32, 5, 4, 2, 0].into_iter().map(BigUint::from).collect();
        assert_eq!(row, want);
        assert_eq!(entringer_by_content(1, 1).unwrap(), BigUint::from(1u32));
        assert!(entringer_by_content(3, 4).is_err());
    }
}
