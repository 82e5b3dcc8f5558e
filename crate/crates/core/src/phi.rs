//! The degree-raising operators `Φ_{a,b,c}`.
//!
//! On a monomial, `Φ_{a,b,c}` removes the factors in `X_b` and `X_c`, multiplies
//! by `X_a^{i_b + 1}` and by the complete homogeneous sum
//! `Σ_{k=0}^{i_c} X_b^{i_c - k} X_c^k`, then extends linearly. Three
//! independent evaluations are provided:
//!
//! * [`phi`] scatters each monomial through that definition,
//! * [`phi_index_form`] gathers each output coefficient by summing the source
//!   coefficients over the index set `I_{a,b,c}`,
//! * [`phi_prefix`] gathers with running sums along the summation lines, one
//!   big-integer addition per cell. The evolution engines use this one.
//!
//! Operator indices are 1-based, as in `Φ_{3,1,2}`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{exponents, rank, HomoPoly};

/// A validated operator `Φ_{a,b,c}` over a fixed number of variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Phi {
    a: usize,
    b: usize,
    c: usize,
}

impl Phi {
    /// `a`, `b`, `c` are 1-based; `b != c`.
    pub fn new(a: usize, b: usize, c: usize, vars: usize) -> Result<Phi> {
        let in_range = |x: usize| (1..=vars).contains(&x);
        if b == c || !in_range(a) || !in_range(b) || !in_range(c) {
            return Err(Error::InvalidOperator { a, b, c, vars });
        }
        Ok(Phi {
            a: a - 1,
            b: b - 1,
            c: c - 1,
        })
    }

    /// Panicking constructor for the fixed operators of the recurrences.
    pub(crate) const fn fixed(a: usize, b: usize, c: usize) -> Phi {
        assert!(b != c && a >= 1 && b >= 1 && c >= 1);
        Phi {
            a: a - 1,
            b: b - 1,
            c: c - 1,
        }
    }

    /// The 1-based indices `(a, b, c)`.
    pub fn indices(&self) -> (usize, usize, usize) {
        (self.a + 1, self.b + 1, self.c + 1)
    }

    /// Index set `I_{a,b,c}(i)`: the source exponents feeding output `i`.
    pub fn index_set(&self, out: &[usize]) -> Vec<Vec<usize>> {
        let (a, b, c) = (self.a, self.b, self.c);
        let mut set = Vec::new();
        if out[a] == 0 {
            return set;
        }
        for t in 0..out[a] {
            let mut src = out.to_vec();
            if a == b {
                src[a] = t;
                src[c] = out[c] + out[a] - 1 - t;
            } else if a == c {
                // sum runs over the b-exponent; the a-exponent absorbs the rest
                src[b] = t;
                src[a] = out[a] + out[b] - 1 - t;
            } else {
                src[a] = t;
                src[b] = out[a] - 1 - t;
                src[c] = out[b] + out[c];
            }
            set.push(src);
        }
        set
    }
}

/// `Φ_{a,b,c}(p)` evaluated monomial by monomial from the operator
/// definition.
pub fn phi(a: usize, b: usize, c: usize, p: &HomoPoly) -> Result<HomoPoly> {
    let op = Phi::new(a, b, c, p.vars())?;
    Ok(apply_scatter(op, p))
}

pub(crate) fn apply_scatter(op: Phi, p: &HomoPoly) -> HomoPoly {
    let (a, b, c) = (op.a, op.b, op.c);
    let out_degree = p.degree() + 1;
    let mut out = HomoPoly::zero(p.vars(), out_degree);
    for (src, coeff) in p.terms() {
        if coeff.is_zero() {
            continue;
        }
        let mut base = src.clone();
        base[b] = 0;
        base[c] = 0;
        base[a] += src[b] + 1;
        for k in 0..=src[c] {
            let mut e = base.clone();
            e[b] += src[c] - k;
            e[c] += k;
            out.coeffs_mut()[rank(&e, out_degree)] += coeff;
        }
    }
    out
}

/// `Φ_{a,b,c}(p)` evaluated coefficient by coefficient: each output
/// coefficient is the sum of the source coefficients over `I_{a,b,c}`.
pub fn phi_index_form(a: usize, b: usize, c: usize, p: &HomoPoly) -> Result<HomoPoly> {
    let op = Phi::new(a, b, c, p.vars())?;
    Ok(apply_index_form(op, p))
}

pub(crate) fn apply_index_form(op: Phi, p: &HomoPoly) -> HomoPoly {
    let out_degree = p.degree() + 1;
    let coeffs = exponents(p.vars(), out_degree)
        .map(|e| op.index_set(&e).iter().map(|src| p.coeff_ref(src)).sum())
        .collect();
    HomoPoly::from_dense(p.vars(), out_degree, coeffs).expect("layout size")
}

/// `Φ_{a,b,c}(p)` evaluated with running sums; `O(cells)` additions.
pub fn phi_prefix(a: usize, b: usize, c: usize, p: &HomoPoly) -> Result<HomoPoly> {
    let op = Phi::new(a, b, c, p.vars())?;
    Ok(apply_prefix(op, p))
}

/// Exponent tuples of the given shape, sorted by the entry at `coord`.
fn by_coordinate(vars: usize, degree: usize, coord: usize) -> Vec<Vec<usize>> {
    let mut all: Vec<Vec<usize>> = exponents(vars, degree).collect();
    all.sort_by_key(|e| e[coord]);
    all
}

pub(crate) fn apply_prefix(op: Phi, p: &HomoPoly) -> HomoPoly {
    let (a, b, c) = (op.a, op.b, op.c);
    let vars = p.vars();
    let d = p.degree();
    let out_degree = d + 1;
    let mut out = HomoPoly::zero(vars, out_degree);
    if a == b || a == c {
        // Along a line of fixed a+c (resp. a+b), the output at a-exponent t is
        // the output at t-1 one step along the line plus one source term.
        let other = if a == b { c } else { b };
        for e in by_coordinate(vars, out_degree, a) {
            if e[a] == 0 {
                continue;
            }
            let mut src = e.clone();
            if a == b {
                src[a] -= 1;
            } else {
                src[a] = e[b];
                src[b] = e[a] - 1;
            }
            let mut val = p.coeff_ref(&src).clone();
            if e[a] >= 2 {
                let mut prev = e.clone();
                prev[a] -= 1;
                prev[other] += 1;
                val += &out.coeffs()[rank(&prev, out_degree)];
            }
            let r = rank(&e, out_degree);
            out.coeffs_mut()[r] = val;
        }
    } else {
        // Running sums over the source along a+b = const, c fixed; the output
        // reads the full line total.
        let mut run = HomoPoly::zero(vars, d);
        for e in by_coordinate(vars, d, a) {
            let mut val = p.coeff_ref(&e).clone();
            if e[a] >= 1 {
                let mut prev = e.clone();
                prev[a] -= 1;
                prev[b] += 1;
                val += &run.coeffs()[rank(&prev, d)];
            }
            let r = rank(&e, d);
            run.coeffs_mut()[r] = val;
        }
        for e in exponents(vars, out_degree) {
            if e[a] == 0 {
                continue;
            }
            let mut end = e.clone();
            end[a] = e[a] - 1;
            end[b] = 0;
            end[c] = e[b] + e[c];
            let r = rank(&e, out_degree);
            out.coeffs_mut()[r] = run.coeffs()[rank(&end, d)].clone();
        }
    }
    out
}

/// Which evaluation the evolution engines use for `Φ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PhiKernel {
    /// Running sums ([`phi_prefix`]).
    #[default]
    Prefix,
    /// Per-cell summation over the index sets ([`phi_index_form`]).
    Naive,
    /// Monomial expansion ([`phi`]).
    Scatter,
}

impl PhiKernel {
    pub(crate) fn apply(self, op: Phi, p: &HomoPoly) -> HomoPoly {
        match self {
            PhiKernel::Prefix => apply_prefix(op, p),
            PhiKernel::Naive => apply_index_form(op, p),
            PhiKernel::Scatter => apply_scatter(op, p),
        }
    }
}

/// Applies `op` to `p` and accumulates into `acc`.
pub(crate) fn accumulate(kernel: PhiKernel, acc: &mut HomoPoly, op: Phi, p: &HomoPoly) {
    if p.is_zero() {
        return;
    }
    acc.add_in_place(&kernel.apply(op, p));
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn mono(vars: usize, exps: &[usize]) -> HomoPoly {
        HomoPoly::from_terms(vars, exps.iter().sum(), [(exps.to_vec(), 1u32)]).unwrap()
    }

    fn all_ops(vars: usize) -> Vec<(usize, usize, usize)> {
        let mut ops = Vec::new();
        for a in 1..=vars {
            for b in 1..=vars {
                for c in 1..=vars {
                    if b != c {
                        ops.push((a, b, c));
                    }
                }
            }
        }
        ops
    }

    #[test]
    fn constant_goes_to_x_a() {
        let one = HomoPoly::constant(2, 1);
        assert_eq!(phi(1, 1, 2, &one).unwrap(), mono(2, &[1, 0]));
        assert_eq!(
            phi(3, 1, 2, &HomoPoly::constant(3, 1)).unwrap(),
            mono(3, &[0, 0, 1])
        );
    }

    #[test]
    fn small_expansion() {
        // Φ_{2,2,1}(X1) = X2 (X2 + X1)
        let got = phi(2, 2, 1, &mono(2, &[1, 0])).unwrap();
        let want = HomoPoly::from_terms(2, 2, [(vec![0, 2], 1u32), (vec![1, 1], 1)]).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn invalid_indices() {
        let one = HomoPoly::constant(3, 1);
        assert!(phi(1, 2, 2, &one).is_err());
        assert!(phi(4, 1, 2, &one).is_err());
        assert!(phi_index_form(0, 1, 2, &one).is_err());
        assert!(phi_prefix(1, 3, 3, &one).is_err());
    }

    #[test]
    fn monomial_sum_is_ic_plus_one() {
        for (a, b, c) in all_ops(3) {
            for e in exponents(3, 4) {
                let s = phi(a, b, c, &mono(3, &e)).unwrap().sum();
                assert_eq!(s, BigUint::from(e[c - 1] + 1));
            }
        }
    }

    #[test]
    fn three_kernels_agree_on_all_monomials() {
        for vars in 2..=4 {
            for (a, b, c) in all_ops(vars) {
                for d in 0..=5 {
                    for e in exponents(vars, d) {
                        let p = mono(vars, &e);
                        let reference = phi(a, b, c, &p).unwrap();
                        assert_eq!(reference.degree(), d + 1);
                        assert_eq!(
                            phi_index_form(a, b, c, &p).unwrap(),
                            reference,
                            "I form {a}{b}{c} {e:?}"
                        );
                        assert_eq!(
                            phi_prefix(a, b, c, &p).unwrap(),
                            reference,
                            "prefix {a}{b}{c} {e:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn zero_maps_to_zero() {
        let z = HomoPoly::zero(4, 3);
        assert!(phi_index_form(1, 1, 3, &z).unwrap().is_zero());
        assert_eq!(phi_index_form(1, 1, 3, &z).unwrap().degree(), 4);
    }

    fn arb_poly(vars: usize, max_degree: usize) -> impl Strategy<Value = HomoPoly> {
        (0..=max_degree).prop_flat_map(move |d| {
            let cells = crate::poly::cell_count(vars, d);
            proptest::collection::vec((0..cells, 0u64..1_000_000), 0..6).prop_map(move |entries| {
                let mut coeffs = vec![BigUint::zero(); cells];
                for (r, v) in entries {
                    coeffs[r] += BigUint::from(v);
                }
                HomoPoly::from_dense(vars, d, coeffs).unwrap()
            })
        })
    }

    fn arb_op(vars: usize) -> impl Strategy<Value = (usize, usize, usize)> {
        (1..=vars, 1..=vars, 1..=vars).prop_filter("b != c", |(_, b, c)| b != c)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn linear_and_degree_raising(p in arb_poly(4, 8), q in arb_poly(4, 8), (a, b, c) in arb_op(4)) {
            let q = if q.degree() == p.degree() { q } else { HomoPoly::zero(4, p.degree()) };
            let lhs = phi(a, b, c, &(&p + &q)).unwrap();
            let rhs = &phi(a, b, c, &p).unwrap() + &phi(a, b, c, &q).unwrap();
            prop_assert_eq!(lhs.degree(), p.degree() + 1);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn prefix_matches_operator(p in arb_poly(4, 8), (a, b, c) in arb_op(4)) {
            prop_assert_eq!(phi_prefix(a, b, c, &p).unwrap(), phi(a, b, c, &p).unwrap());
        }
    }
}
