//! Class sizes through the polynomial-time recurrences.

use num_bigint::BigUint;

use crate::classical::viennot_counts;
use crate::engine::{
    evolve_p, evolve_q, evolve_r, r_sign_class_sum, PEvolution, QEvolution, REvolution,
};
use crate::error::{Error, Result};
use crate::oracle;
use crate::phi::PhiKernel;
use crate::sign::{Sign, SignWord};

/// `#𝒫_w` for `|w| >= 1`.
pub fn count_p(w: &SignWord) -> Result<BigUint> {
    Ok(evolve_p(w)?.sum())
}

/// `#𝒬_w^η` for `|w| >= 1`.
pub fn count_q(w: &SignWord, eta: Sign) -> Result<BigUint> {
    let (plus, minus) = evolve_q(w)?;
    Ok(match eta {
        Sign::Plus => plus.sum(),
        Sign::Minus => minus.sum(),
    })
}

/// `#ℛ_w^{(α)}` for `|w| >= 2`.
pub fn count_r_alpha(w: &SignWord, alpha: usize) -> Result<BigUint> {
    if !(1..=6).contains(&alpha) {
        return Err(Error::InvalidAlpha(alpha));
    }
    Ok(evolve_r(w)?[alpha - 1].sum())
}

/// `#ℛ_w^{η₁,η₂}`.
///
/// The tetrahedral recurrence starts at `|w| = 2`. For a single letter the
/// count is read off the two orders on `[3]` directly, with the same
/// definition (orientation of `(n-1, n, 1)` and of `(n, 1, 2)`).
pub fn count_r(w: &SignWord, eta1: Sign, eta2: Sign) -> Result<BigUint> {
    match w.len() {
        0 => Err(Error::WordTooShort { got: 0, min: 1 }),
        1 => oracle::count_r_signs_brute(w, eta1, eta2),
        _ => {
            let polys = evolve_r(w)?;
            let sums = std::array::from_fn(|a| polys[a].sum());
            Ok(r_sign_class_sum(&sums, eta1, eta2))
        }
    }
}

/// `#𝒮_w` for a descent pattern `w`.
pub fn count_descent(w: &SignWord) -> BigUint {
    viennot_counts(w)
}

/// One row of the `+^n` sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlusRow {
    pub n: usize,
    pub p: BigUint,
    pub q_plus: BigUint,
    pub r_plus_plus: BigUint,
    /// `#ℛ^{(α)}_{+^n}`; `None` for `n = 1`.
    pub r_alpha: Option<[BigUint; 6]>,
}

/// `#𝒫_{+^n}`, `#𝒬^+_{+^n}` and `#ℛ^{+,+}_{+^n}` for `n = 1..=max_n`, in one
/// pass of each evolution.
pub fn plus_rows(max_n: usize) -> Vec<PlusRow> {
    let kernel = PhiKernel::Prefix;
    let mut rows = Vec::with_capacity(max_n);
    if max_n == 0 {
        return rows;
    }
    let mut p = PEvolution::new(Sign::Plus, kernel);
    let mut q = QEvolution::new(Sign::Plus, kernel);
    let mut r: Option<REvolution> = None;
    for n in 1..=max_n {
        if n > 1 {
            p.push(Sign::Plus);
            q.push(Sign::Plus);
            match r.as_mut() {
                Some(r) => r.push(Sign::Plus),
                None => r = Some(REvolution::new(Sign::Plus, Sign::Plus, kernel)),
            }
        }
        let r_alpha = r.as_ref().map(REvolution::sums);
        let r_plus_plus = match &r_alpha {
            Some(sums) => r_sign_class_sum(sums, Sign::Plus, Sign::Plus),
            None => oracle::count_r_signs_brute(&SignWord::all_plus(1), Sign::Plus, Sign::Plus)
                .expect("three-element oracle"),
        };
        rows.push(PlusRow {
            n,
            p: p.count(),
            q_plus: q.plus().sum(),
            r_plus_plus,
            r_alpha,
        });
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SignWord {
        s.parse().unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_p(&w("++++")).unwrap(), BigUint::from(16u32));
        assert_eq!(count_p(&w("-+")).unwrap(), BigUint::from(1u32));
        assert_eq!(
            count_r(&w("++"), Sign::Plus, Sign::Plus).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            count_r(&w("+"), Sign::Plus, Sign::Plus).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            count_q(&w("++++"), Sign::Plus).unwrap(),
            BigUint::from(11u32)
        );
        assert_eq!(count_r_alpha(&w("++"), 5).unwrap(), BigUint::from(1u32));
        assert!(count_r_alpha(&w("++"), 0).is_err());
        assert!(count_r(&w(""), Sign::Plus, Sign::Plus).is_err());
    }

    #[test]
    fn all_plus_sequences() {
        let rows = plus_rows(10);
        let p: Vec<u64> = rows.iter().map(|r| u64::try_from(&r.p).unwrap()).collect();
        let q: Vec<u64> = rows
            .iter()
            .map(|r| u64::try_from(&r.q_plus).unwrap())
            .collect();
        let rpp: Vec<u64> = rows
            .iter()
            .map(|r| u64::try_from(&r.r_plus_plus).unwrap())
            .collect();
        assert_eq!(p, [1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792]);
        assert_eq!(q, [1, 1, 3, 11, 38, 169, 899, 5047, 31914, 226205]);
        assert_eq!(rpp, [1, 1, 2, 9, 31, 128, 708, 4015, 24865, 177444]);
    }

    #[test]
    fn single_letter_signs_match_oracle_classes() {
        for word in ["+", "-"] {
            let word = w(word);
            let total: BigUint = [Sign::Plus, Sign::Minus]
                .iter()
                .flat_map(|&a| [Sign::Plus, Sign::Minus].map(move |b| (a, b)))
                .map(|(a, b)| count_r(&word, a, b).unwrap())
                .sum();
            assert_eq!(total, count_p(&word).unwrap());
        }
    }
}
