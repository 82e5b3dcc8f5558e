//! Evolution of the refined arrays along a sign word.
//!
//! * [`PEvolution`]: two variables, the linear boustrophedon in `Φ` form.
//! * [`QEvolution`]: the pair of triangles refining `𝒬_w^+` and `𝒬_w^-` by the
//!   contents of the arcs between `n-1`, `n` and `1`.
//! * [`REvolution`]: six tetrahedra refining the classes `ℛ_w^{(α)}` by the
//!   contents of the arcs between `1`, `2`, `n-1` and `n`.
//!
//! Each evolution is a small state machine: build it from the shortest word
//! it supports, then [`push`](QEvolution::push) letters one at a time. The
//! `evolve_*` functions run one to the end of a word.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::phi::{accumulate, Phi, PhiKernel};
use crate::poly::HomoPoly;
use crate::sign::{Sign, SignWord};

fn require_len(w: &SignWord, min: usize) -> Result<()> {
    if w.len() < min {
        return Err(Error::WordTooShort { got: w.len(), min });
    }
    Ok(())
}

/// Refined enumeration of `𝒫_w` in two variables, homogeneous of degree `|w|`.
///
/// The coefficient of `X_1^i X_2^j` counts the orders `Z ∈ 𝒫_w` on `[n]`,
/// `n = |w| + 2`, with `(c_Z(n-1, n), c_Z(n, n-1)) = (i, j)` when `n` is even
/// and `(j, i)` when `n` is odd.
#[derive(Debug, Clone)]
pub struct PEvolution {
    word: SignWord,
    poly: HomoPoly,
    kernel: PhiKernel,
}

impl PEvolution {
    pub fn new(first: Sign, kernel: PhiKernel) -> PEvolution {
        // n = 3: the single order (1,2,3) has arcs (0, 1), read swapped;
        // (1,3,2) has arcs (1, 0).
        let exps = match first {
            Sign::Plus => vec![1, 0],
            Sign::Minus => vec![0, 1],
        };
        let poly = HomoPoly::from_terms(2, 1, [(exps, 1u32)]).expect("base shape");
        PEvolution {
            word: SignWord::new(vec![first]),
            poly,
            kernel,
        }
    }

    pub fn push(&mut self, s: Sign) {
        // parity of the ground set of the current word
        let n_even = (self.word.len() + 2).is_multiple_of(2);
        let op = if s.is_plus() == n_even {
            Phi::fixed(1, 1, 2)
        } else {
            Phi::fixed(2, 2, 1)
        };
        self.poly = self.kernel.apply(op, &self.poly);
        self.word.push(s);
    }

    pub fn word(&self) -> &SignWord {
        &self.word
    }

    pub fn poly(&self) -> &HomoPoly {
        &self.poly
    }

    /// `#𝒫_w`.
    pub fn count(&self) -> BigUint {
        self.poly.sum()
    }
}

/// Runs [`PEvolution`] along `w` (`|w| >= 1`).
pub fn evolve_p(w: &SignWord) -> Result<HomoPoly> {
    evolve_p_with(w, PhiKernel::default())
}

pub fn evolve_p_with(w: &SignWord, kernel: PhiKernel) -> Result<HomoPoly> {
    require_len(w, 1)?;
    let mut evo = PEvolution::new(w.signs()[0], kernel);
    for &s in &w.signs()[1..] {
        evo.push(s);
    }
    Ok(evo.poly)
}

/// The triangles `T_w^+` and `T_w^-` as generating polynomials in three
/// variables.
///
/// The coefficient of `X_1^i X_2^j X_3^k` in the `+` polynomial counts
/// `Z ∈ 𝒬_w^+` whose multi-content at `(n-1, n, 1)` is `(i, j, k)`; in the
/// `-` polynomial the reference points are `(n, n-1, 1)`.
#[derive(Debug, Clone)]
pub struct QEvolution {
    word: SignWord,
    plus: HomoPoly,
    minus: HomoPoly,
    kernel: PhiKernel,
}

impl QEvolution {
    pub fn new(first: Sign, kernel: PhiKernel) -> QEvolution {
        let (p, m) = match first {
            Sign::Plus => (1, 0),
            Sign::Minus => (0, 1),
        };
        QEvolution {
            word: SignWord::new(vec![first]),
            plus: HomoPoly::constant(3, p),
            minus: HomoPoly::constant(3, m),
            kernel,
        }
    }

    pub fn push(&mut self, s: Sign) {
        let d = self.plus.degree() + 1;
        let mut plus = HomoPoly::zero(3, d);
        let mut minus = HomoPoly::zero(3, d);
        let k = self.kernel;
        match s {
            Sign::Plus => {
                accumulate(k, &mut plus, Phi::fixed(2, 2, 1), &self.minus);
                accumulate(k, &mut plus, Phi::fixed(3, 1, 2), &self.plus);
                accumulate(k, &mut minus, Phi::fixed(1, 1, 3), &self.plus);
            }
            Sign::Minus => {
                accumulate(k, &mut plus, Phi::fixed(1, 1, 2), &self.minus);
                accumulate(k, &mut minus, Phi::fixed(3, 3, 1), &self.plus);
                accumulate(k, &mut minus, Phi::fixed(2, 1, 3), &self.minus);
            }
        }
        self.plus = plus;
        self.minus = minus;
        self.word.push(s);
    }

    pub fn word(&self) -> &SignWord {
        &self.word
    }

    pub fn plus(&self) -> &HomoPoly {
        &self.plus
    }

    pub fn minus(&self) -> &HomoPoly {
        &self.minus
    }

    pub fn get(&self, eta: Sign) -> &HomoPoly {
        match eta {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        }
    }
}

/// Runs [`QEvolution`] along `w` (`|w| >= 1`), returning `(Q_w^+, Q_w^-)`.
pub fn evolve_q(w: &SignWord) -> Result<(HomoPoly, HomoPoly)> {
    evolve_q_with(w, PhiKernel::default())
}

pub fn evolve_q_with(w: &SignWord, kernel: PhiKernel) -> Result<(HomoPoly, HomoPoly)> {
    require_len(w, 1)?;
    let mut evo = QEvolution::new(w.signs()[0], kernel);
    for &s in &w.signs()[1..] {
        evo.push(s);
    }
    Ok((evo.plus, evo.minus))
}

type Rule = &'static [(Phi, usize)];

/// Sources feeding each `R^{(α)}` after appending `+`, as `(Φ, source α - 1)`.
const PLUS_RULES: [Rule; 6] = [
    &[
        (Phi::fixed(4, 1, 2), 0),
        (Phi::fixed(3, 1, 2), 1),
        (Phi::fixed(2, 2, 1), 3),
    ],
    &[(Phi::fixed(3, 4, 2), 2), (Phi::fixed(2, 2, 4), 4)],
    &[
        (Phi::fixed(3, 4, 1), 2),
        (Phi::fixed(2, 4, 1), 4),
        (Phi::fixed(1, 1, 4), 5),
    ],
    &[(Phi::fixed(1, 1, 4), 0)],
    &[(Phi::fixed(4, 1, 3), 0), (Phi::fixed(1, 1, 3), 1)],
    &[(Phi::fixed(4, 4, 3), 2)],
];

const MINUS_RULES: [Rule; 6] = [
    &[(Phi::fixed(1, 1, 2), 3)],
    &[(Phi::fixed(1, 4, 2), 5), (Phi::fixed(4, 4, 2), 4)],
    &[(Phi::fixed(4, 4, 1), 5)],
    &[
        (Phi::fixed(2, 1, 4), 3),
        (Phi::fixed(3, 1, 4), 1),
        (Phi::fixed(4, 4, 1), 0),
    ],
    &[(Phi::fixed(2, 1, 3), 3), (Phi::fixed(3, 3, 1), 1)],
    &[
        (Phi::fixed(1, 4, 3), 5),
        (Phi::fixed(2, 4, 3), 4),
        (Phi::fixed(3, 3, 4), 2),
    ],
];

/// The six tetrahedra `R_w^{(1)}, ..., R_w^{(6)}` in four variables.
#[derive(Debug, Clone)]
pub struct REvolution {
    word: SignWord,
    polys: [HomoPoly; 6],
    kernel: PhiKernel,
}

impl REvolution {
    /// Starts from a two-letter word.
    pub fn new(first: Sign, second: Sign, kernel: PhiKernel) -> REvolution {
        use Sign::{Minus as M, Plus as P};
        // the single class holding each of the four orders on [4]
        let alive: &[usize] = match (first, second) {
            (P, P) => &[0, 4],
            (M, M) => &[1, 5],
            (M, P) => &[2],
            (P, M) => &[3],
        };
        let polys = std::array::from_fn(|a| HomoPoly::constant(4, u32::from(alive.contains(&a))));
        REvolution {
            word: SignWord::new(vec![first, second]),
            polys,
            kernel,
        }
    }

    pub fn push(&mut self, s: Sign) {
        let rules = match s {
            Sign::Plus => &PLUS_RULES,
            Sign::Minus => &MINUS_RULES,
        };
        let d = self.polys[0].degree() + 1;
        let polys = std::array::from_fn(|alpha| {
            let mut acc = HomoPoly::zero(4, d);
            for &(op, src) in rules[alpha] {
                accumulate(self.kernel, &mut acc, op, &self.polys[src]);
            }
            acc
        });
        self.polys = polys;
        self.word.push(s);
    }

    pub fn word(&self) -> &SignWord {
        &self.word
    }

    pub fn polys(&self) -> &[HomoPoly; 6] {
        &self.polys
    }

    /// `R^{(α)}` for `α` in `1..=6`.
    pub fn get(&self, alpha: usize) -> Result<&HomoPoly> {
        if !(1..=6).contains(&alpha) {
            return Err(Error::InvalidAlpha(alpha));
        }
        Ok(&self.polys[alpha - 1])
    }

    /// `#ℛ_w^{(α)}` for `α = 1..=6`.
    pub fn sums(&self) -> [BigUint; 6] {
        std::array::from_fn(|a| self.polys[a].sum())
    }
}

/// Runs [`REvolution`] along `w` (`|w| >= 2`).
pub fn evolve_r(w: &SignWord) -> Result<[HomoPoly; 6]> {
    evolve_r_with(w, PhiKernel::default())
}

pub fn evolve_r_with(w: &SignWord, kernel: PhiKernel) -> Result<[HomoPoly; 6]> {
    require_len(w, 2)?;
    let s = w.signs();
    let mut evo = REvolution::new(s[0], s[1], kernel);
    for &x in &s[2..] {
        evo.push(x);
    }
    Ok(evo.polys)
}

/// Groups the six class sums by the orientations of `(n-1, n, 1)` and
/// `(n, 1, 2)`.
pub fn r_sign_class_sum(sums: &[BigUint; 6], eta1: Sign, eta2: Sign) -> BigUint {
    use Sign::{Minus as M, Plus as P};
    match (eta1, eta2) {
        (P, P) => &sums[0] + &sums[1],
        (P, M) => sums[2].clone(),
        (M, P) => sums[3].clone(),
        (M, M) => &sums[4] + &sums[5],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SignWord {
        s.parse().unwrap()
    }

    /// Rows of a triangle from the top vertex down; each row left to right.
    fn rows(p: &HomoPoly) -> Vec<Vec<u64>> {
        let d = p.degree();
        (0..=d)
            .rev()
            .map(|i| {
                (0..=d - i)
                    .map(|k| {
                        let c = p.coeff(&[i, d - i - k, k]);
                        u64::try_from(&c).unwrap()
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn triangle_steps() {
        let (plus, minus) = evolve_q(&w("++")).unwrap();
        assert_eq!(rows(&plus), vec![vec![0], vec![0, 1]]);
        assert_eq!(rows(&minus), vec![vec![1], vec![0, 0]]);
        let (plus, _) = evolve_q(&w("+++")).unwrap();
        assert_eq!(rows(&plus), vec![vec![0], vec![1, 0], vec![1, 0, 1]]);
        let (plus, _) = evolve_q(&w("++++")).unwrap();
        assert_eq!(plus.sum(), BigUint::from(11u32));
    }

    #[test]
    fn euler_numbers() {
        let want = [1u64, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792];
        let mut evo = PEvolution::new(Sign::Plus, PhiKernel::Prefix);
        for (t, &e) in want.iter().enumerate() {
            if t > 0 {
                evo.push(Sign::Plus);
            }
            assert_eq!(evo.count(), BigUint::from(e));
        }
    }

    #[test]
    fn base_shapes() {
        assert_eq!(
            evolve_p(&w("+")).unwrap(),
            HomoPoly::from_terms(2, 1, [(vec![1, 0], 1u32)]).unwrap()
        );
        let r = evolve_r(&w("++")).unwrap();
        let sums: Vec<u32> = r.iter().map(|p| u32::try_from(&p.sum()).unwrap()).collect();
        assert_eq!(sums, [1, 0, 0, 0, 1, 0]);
        assert_eq!(
            evolve_r(&w("+")).unwrap_err(),
            Error::WordTooShort { got: 1, min: 2 }
        );
        assert!(evolve_q(&w("")).is_err());
        assert!(evolve_p(&w("")).is_err());
    }

    #[test]
    fn kernels_agree_on_engines() {
        for word in ["+-+--+", "--++-", "++++++"] {
            let word = w(word);
            let fast = evolve_r_with(&word, PhiKernel::Prefix).unwrap();
            assert_eq!(evolve_r_with(&word, PhiKernel::Naive).unwrap(), fast);
            assert_eq!(evolve_r_with(&word, PhiKernel::Scatter).unwrap(), fast);
            assert_eq!(
                evolve_q_with(&word, PhiKernel::Naive).unwrap(),
                evolve_q(&word).unwrap()
            );
        }
    }
}
