//! Brute-force enumeration of every total cyclic order on `[n]`.
//!
//! This is the ground truth the recurrences and the bijection are checked
//! against. Every routine walks all `(n-1)!` orders, so the ground-set size is
//! guarded: `3 <= n <= 10` by default, raised through the
//! `CYCLENUM_MAX_ORACLE_N` environment variable up to a hard cap of 12.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::order::CyclicOrder;
use crate::perm::{LexPermutations, Permutation};
use crate::poly::{rank, HomoPoly};
use crate::sign::{Sign, SignWord};

pub const DEFAULT_MAX_N: usize = 10;
pub const HARD_MAX_N: usize = 12;
pub const MAX_N_ENV: &str = "CYCLENUM_MAX_ORACLE_N";

/// The active oracle bound.
pub fn max_n() -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(DEFAULT_MAX_N, |v| v.clamp(3, HARD_MAX_N))
}

fn guard(n: usize, max: usize) -> Result<()> {
    if n < 3 || n > max.min(HARD_MAX_N) {
        return Err(Error::OracleRange {
            n,
            max: max.min(HARD_MAX_N),
        });
    }
    Ok(())
}

/// Every total cyclic order on `[n]`, each exactly once.
///
/// Element 1 is pinned at the start of the cycle and the other labels run
/// through all permutations, so no deduplication is needed.
pub fn enumerate_cyclic_orders(n: usize) -> Result<CyclicOrders> {
    enumerate_cyclic_orders_up_to(n, max_n())
}

/// [`enumerate_cyclic_orders`] with an explicit bound in place of the
/// environment one (still capped at 12).
pub fn enumerate_cyclic_orders_up_to(n: usize, max: usize) -> Result<CyclicOrders> {
    guard(n, max)?;
    Ok(CyclicOrders {
        inner: LexPermutations::new((2..=n).collect()),
    })
}

pub struct CyclicOrders {
    inner: LexPermutations,
}

impl Iterator for CyclicOrders {
    type Item = CyclicOrder;

    fn next(&mut self) -> Option<CyclicOrder> {
        let rest = self.inner.next()?;
        let mut cycle = Vec::with_capacity(rest.len() + 1);
        cycle.push(1);
        cycle.extend(rest);
        Some(CyclicOrder::from_canonical(cycle))
    }
}

/// Which of the six chains on `{1, 2, n-1, n}` an order on `[n]` (`n >= 4`)
/// contains, as `α` in `1..=6`.
pub fn chain_class(z: &CyclicOrder) -> usize {
    let n = z.n();
    debug_assert!(n >= 4);
    CHAINS
        .iter()
        .position(|tmpl| z.is_chain_unchecked(&tmpl.resolve(n)))
        .map(|t| t + 1)
        .expect("the four points lie in exactly one circular arrangement")
}

#[derive(Clone, Copy)]
enum Pt {
    One,
    Two,
    Penult,
    Last,
}

impl Pt {
    fn at(self, n: usize) -> usize {
        match self {
            Pt::One => 1,
            Pt::Two => 2,
            Pt::Penult => n - 1,
            Pt::Last => n,
        }
    }
}

struct Tmpl([Pt; 4]);

impl Tmpl {
    fn resolve(&self, n: usize) -> [usize; 4] {
        self.0.map(|p| p.at(n))
    }
}

use Pt::{Last as N, One as P1, Penult as N1, Two as P2};

const CHAINS: [Tmpl; 6] = [
    Tmpl([P1, P2, N1, N]),
    Tmpl([P1, N1, P2, N]),
    Tmpl([P1, N1, N, P2]),
    Tmpl([P1, P2, N, N1]),
    Tmpl([P1, N, P2, N1]),
    Tmpl([P1, N, N1, P2]),
];

/// Reference points for `g^{(α)}` and where each arc content lands among
/// `(i, j, k, ℓ)`.
const G_REFERENCE: [(Tmpl, [usize; 4]); 6] = [
    (Tmpl([N1, N, P1, P2]), [0, 1, 2, 3]),
    (Tmpl([N1, P2, N, P1]), [0, 3, 1, 2]),
    (Tmpl([N, P2, P1, N1]), [0, 1, 2, 3]),
    (Tmpl([N, N1, P1, P2]), [0, 1, 2, 3]),
    (Tmpl([N, P2, N1, P1]), [0, 3, 1, 2]),
    (Tmpl([N1, P2, P1, N]), [0, 1, 2, 3]),
];

/// Orientation of `(n-1, n, 1)`.
pub fn eta_q(z: &CyclicOrder) -> Sign {
    let n = z.n();
    Sign::from_bool(z.contains(n - 1, n, 1))
}

/// Orientation of `(n, 1, 2)`.
pub fn eta_r(z: &CyclicOrder) -> Sign {
    let n = z.n();
    Sign::from_bool(z.contains(n, 1, 2))
}

/// Exponents of `X_1^i X_2^j X_3^k` for `Z ∈ 𝒬^η`.
fn f_exponents(z: &CyclicOrder, eta: Sign) -> Vec<usize> {
    let n = z.n();
    match eta {
        Sign::Plus => z.multi_content_unchecked(&[n - 1, n, 1]),
        Sign::Minus => z.multi_content_unchecked(&[n, n - 1, 1]),
    }
}

/// Exponents of `X_1^i X_2^j X_3^k X_4^ℓ` for `Z ∈ ℛ^{(α)}`.
fn g_exponents(z: &CyclicOrder, alpha: usize) -> Vec<usize> {
    let (tmpl, slots) = &G_REFERENCE[alpha - 1];
    let arcs = z.multi_content_unchecked(&tmpl.resolve(z.n()));
    let mut exps = vec![0; 4];
    for (arc, &slot) in arcs.iter().zip(slots) {
        exps[slot] = *arc;
    }
    exps
}

/// Exponents of `X_1^i X_2^j` for the two-variable refinement of `𝒫_w`.
fn e_exponents(z: &CyclicOrder) -> Vec<usize> {
    let n = z.n();
    let arcs = z.multi_content_unchecked(&[n - 1, n]);
    if n.is_multiple_of(2) {
        arcs
    } else {
        vec![arcs[1], arcs[0]]
    }
}

/// Per-word class sizes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassEntry {
    pub p: BigUint,
    pub q_plus: BigUint,
    pub q_minus: BigUint,
    /// `#ℛ^{(α)}` at index `α - 1`; all zero when `n = 3`.
    pub r: [BigUint; 6],
}

impl ClassEntry {
    pub fn q(&self, eta: Sign) -> &BigUint {
        match eta {
            Sign::Plus => &self.q_plus,
            Sign::Minus => &self.q_minus,
        }
    }
}

/// Class sizes for every word of length `n - 2`, from one pass over all
/// orders on `[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCounts {
    pub n: usize,
    pub words: BTreeMap<SignWord, ClassEntry>,
}

impl ClassCounts {
    pub fn get(&self, w: &SignWord) -> Option<&ClassEntry> {
        self.words.get(w)
    }

    pub fn total(&self) -> BigUint {
        self.words.values().map(|e| &e.p).sum()
    }
}

/// Classifies every order on `[n]` by pattern, by `η`, and by chain class.
pub fn classify_all(n: usize) -> Result<ClassCounts> {
    classify_all_up_to(n, max_n())
}

/// [`classify_all`] with an explicit bound in place of the environment one.
pub fn classify_all_up_to(n: usize, max: usize) -> Result<ClassCounts> {
    let mut words: BTreeMap<SignWord, ClassEntry> = SignWord::all_of_len(n.saturating_sub(2))
        .map(|w| (w, ClassEntry::default()))
        .collect();
    for z in enumerate_cyclic_orders_up_to(n, max)? {
        let entry = words
            .get_mut(&z.cyclic_descent_pattern())
            .expect("all words seeded");
        entry.p += 1u32;
        match eta_q(&z) {
            Sign::Plus => entry.q_plus += 1u32,
            Sign::Minus => entry.q_minus += 1u32,
        }
        if n >= 4 {
            entry.r[chain_class(&z) - 1] += 1u32;
        }
    }
    Ok(ClassCounts { n, words })
}

/// All refined arrays for one word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinedCounts {
    /// Two-variable refinement of `𝒫_w`.
    pub e: HomoPoly,
    /// `f^+` and `f^-`.
    pub f: [HomoPoly; 2],
    /// `g^{(α)}` at index `α - 1`; `None` when `|w| < 2`.
    pub g: Option<[HomoPoly; 6]>,
}

fn bump(p: &mut HomoPoly, exps: &[usize]) {
    let d = p.degree();
    p.coeffs_mut()[rank(exps, d)] += BigUint::one();
}

/// Every refined array for every word of length `n - 2`, in one pass.
pub fn refine_all(n: usize) -> Result<BTreeMap<SignWord, RefinedCounts>> {
    let len = n.saturating_sub(2);
    let blank = || RefinedCounts {
        e: HomoPoly::zero(2, len),
        f: [
            HomoPoly::zero(3, len.saturating_sub(1)),
            HomoPoly::zero(3, len.saturating_sub(1)),
        ],
        g: (len >= 2).then(|| std::array::from_fn(|_| HomoPoly::zero(4, len - 2))),
    };
    let mut out: BTreeMap<SignWord, RefinedCounts> =
        SignWord::all_of_len(len).map(|w| (w, blank())).collect();
    for z in enumerate_cyclic_orders(n)? {
        let entry = out
            .get_mut(&z.cyclic_descent_pattern())
            .expect("all words seeded");
        refine_into(&z, entry);
    }
    Ok(out)
}

fn refine_into(z: &CyclicOrder, entry: &mut RefinedCounts) {
    bump(&mut entry.e, &e_exponents(z));
    let eta = eta_q(z);
    let slot = usize::from(!eta.is_plus());
    bump(&mut entry.f[slot], &f_exponents(z, eta));
    if let Some(g) = entry.g.as_mut() {
        let alpha = chain_class(z);
        bump(&mut g[alpha - 1], &g_exponents(z, alpha));
    }
}

/// Orders in `𝒫_w` (brute force).
pub fn orders_in_class(w: &SignWord) -> Result<impl Iterator<Item = CyclicOrder> + '_> {
    Ok(enumerate_cyclic_orders(w.len() + 2)?.filter(move |z| &z.cyclic_descent_pattern() == w))
}

/// `f^η_{w,i,j,k}` by brute force, as a polynomial in three variables.
pub fn refined_f_brute(w: &SignWord, eta: Sign) -> Result<HomoPoly> {
    if w.is_empty() {
        return Err(Error::WordTooShort { got: 0, min: 1 });
    }
    let mut out = HomoPoly::zero(3, w.len() - 1);
    for z in orders_in_class(w)?.filter(|z| eta_q(z) == eta) {
        bump(&mut out, &f_exponents(&z, eta));
    }
    Ok(out)
}

/// `g^{(α)}_{w,i,j,k,ℓ}` by brute force, as a polynomial in four variables.
pub fn refined_g_brute(w: &SignWord, alpha: usize) -> Result<HomoPoly> {
    if !(1..=6).contains(&alpha) {
        return Err(Error::InvalidAlpha(alpha));
    }
    if w.len() < 2 {
        return Err(Error::WordTooShort {
            got: w.len(),
            min: 2,
        });
    }
    let mut out = HomoPoly::zero(4, w.len() - 2);
    for z in orders_in_class(w)?.filter(|z| chain_class(z) == alpha) {
        bump(&mut out, &g_exponents(&z, alpha));
    }
    Ok(out)
}

/// The two-variable refinement of `𝒫_w` by brute force.
pub fn refined_e_brute(w: &SignWord) -> Result<HomoPoly> {
    if w.is_empty() {
        return Err(Error::WordTooShort { got: 0, min: 1 });
    }
    let mut out = HomoPoly::zero(2, w.len());
    for z in orders_in_class(w)? {
        bump(&mut out, &e_exponents(&z));
    }
    Ok(out)
}

/// `#ℛ_w^{η₁,η₂}` by brute force. Defined for every `|w| >= 1`: with
/// `|w| = 1` the two triples are read directly off the three-element order.
pub fn count_r_signs_brute(w: &SignWord, eta1: Sign, eta2: Sign) -> Result<BigUint> {
    if w.is_empty() {
        return Err(Error::WordTooShort { got: 0, min: 1 });
    }
    Ok(BigUint::from(
        orders_in_class(w)?
            .filter(|z| eta_q(z) == eta1 && eta_r(z) == eta2)
            .count(),
    ))
}

/// `#𝒮_w` by enumerating all permutations of `[|w| + 1]`.
pub fn count_descent_class_brute(w: &SignWord) -> Result<BigUint> {
    let n = w.len() + 1;
    if n > max_n() {
        return Err(Error::OracleRange { n, max: max_n() });
    }
    Ok(BigUint::from(
        Permutation::all(n)
            .filter(|s| &s.descent_pattern() == w)
            .count(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SignWord {
        s.parse().unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_cyclic_orders(3).unwrap().count(), 2);
        assert_eq!(enumerate_cyclic_orders(4).unwrap().count(), 6);
        let all: Vec<_> = enumerate_cyclic_orders(5).unwrap().collect();
        assert_eq!(all.len(), 24);
        assert!(all.iter().all(CyclicOrder::validate_cyclic_axioms));
        let distinct: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), 24);
    }

    #[test]
    fn guard_rejects() {
        assert!(enumerate_cyclic_orders(2).is_err());
        assert_eq!(
            enumerate_cyclic_orders_up_to(11, 10).err(),
            Some(Error::OracleRange { n: 11, max: 10 })
        );
        assert!(enumerate_cyclic_orders_up_to(13, 99).is_err());
    }

    #[test]
    fn axioms_hold_for_every_order() {
        for n in 3..=7 {
            for z in enumerate_cyclic_orders(n).unwrap() {
                assert!(z.validate_cyclic_axioms(), "{z}");
            }
        }
    }

    #[test]
    fn classify_n4() {
        let counts = classify_all(4).unwrap();
        let pp = counts.get(&w("++")).unwrap();
        assert_eq!(pp.p, big(2));
        assert_eq!(pp.r, [big(1), big(0), big(0), big(0), big(1), big(0)]);
        assert_eq!(counts.get(&w("-+")).unwrap().p, big(1));
        assert_eq!(classify_all(5).unwrap().total(), big(24));
    }

    #[test]
    fn class_partitions() {
        for n in 4..=8 {
            let counts = classify_all(n).unwrap();
            for e in counts.words.values() {
                assert_eq!(&e.q_plus + &e.q_minus, e.p);
                assert_eq!(&e.r[0] + &e.r[1] + &e.r[2], e.q_plus);
                assert_eq!(&e.r[3] + &e.r[4] + &e.r[5], e.q_minus);
            }
            let fact: u64 = (1..n as u64).product();
            assert_eq!(counts.total(), big(fact));
        }
    }

    #[test]
    fn refined_examples() {
        let f = refined_f_brute(&w("++"), Sign::Plus).unwrap();
        assert_eq!(f.coeff(&[0, 0, 1]), big(1));
        assert_eq!(f.sum(), big(1));
        assert_eq!(
            refined_f_brute(&w("+"), Sign::Plus)
                .unwrap()
                .coeff(&[0, 0, 0]),
            big(1)
        );
        assert_eq!(
            refined_f_brute(&w("++++"), Sign::Plus).unwrap().sum(),
            big(11)
        );

        assert_eq!(
            refined_g_brute(&w("++"), 1).unwrap().coeff(&[0, 0, 0, 0]),
            big(1)
        );
        assert!(refined_g_brute(&w("++"), 3).unwrap().is_zero());
        let total: BigUint = (1..=6)
            .map(|a| refined_g_brute(&w("++++"), a).unwrap().sum())
            .sum();
        assert_eq!(total, big(16));
        assert_eq!(refined_g_brute(&w("++"), 7), Err(Error::InvalidAlpha(7)));
    }

    #[test]
    fn refined_sums_match_classes() {
        for n in 4..=8 {
            let counts = classify_all(n).unwrap();
            for (word, refined) in refine_all(n).unwrap() {
                let e = counts.get(&word).unwrap();
                assert_eq!(refined.f[0].sum(), e.q_plus);
                assert_eq!(refined.f[1].sum(), e.q_minus);
                assert_eq!(refined.e.sum(), e.p);
                for (a, g) in refined.g.unwrap().iter().enumerate() {
                    assert_eq!(g.sum(), e.r[a]);
                }
                assert_eq!(refined_f_brute(&word, Sign::Minus).unwrap(), refined.f[1]);
            }
        }
    }

    #[test]
    fn descent_classes() {
        assert_eq!(count_descent_class_brute(&w("+-")).unwrap(), big(2));
        assert_eq!(
            count_descent_class_brute(&SignWord::all_plus(6)).unwrap(),
            big(1)
        );
        let euler = [1u64, 1, 1, 2, 5, 16, 61, 272, 1385, 7936];
        for (len, &e) in euler.iter().enumerate().skip(1) {
            assert_eq!(
                count_descent_class_brute(&SignWord::alternating(len - 1)).unwrap(),
                big(e)
            );
        }
    }

    #[test]
    fn cyclic_to_linear_counts() {
        for n in 3..=9 {
            let counts = classify_all(n).unwrap();
            for (word, e) in &counts.words {
                assert_eq!(
                    e.p,
                    count_descent_class_brute(&word.involution()).unwrap(),
                    "{word}"
                );
            }
        }
    }

    #[test]
    fn r_signs_single_letter() {
        assert_eq!(
            count_r_signs_brute(&w("+"), Sign::Plus, Sign::Plus).unwrap(),
            big(1)
        );
        assert_eq!(
            count_r_signs_brute(&w("+"), Sign::Plus, Sign::Minus).unwrap(),
            big(0)
        );
        assert_eq!(
            count_r_signs_brute(&w("-"), Sign::Minus, Sign::Minus).unwrap(),
            big(1)
        );
    }
}
