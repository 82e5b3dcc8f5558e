//! Dense homogeneous polynomials with big-integer coefficients.
//!
//! The monomials of degree `d` in `m` variables are stored in lexicographic
//! order of their exponent tuples, first exponent slowest. For `m = 3` this is
//! the `(i, j)` lex layout of a triangle with `k = d - i - j` implied; for
//! `m = 4` the `(i, j, k)` lex layout of a tetrahedron.

use std::fmt;
use std::ops::{Add, AddAssign};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Number of exponent tuples of `vars` entries summing to `degree`.
pub fn cell_count(vars: usize, degree: usize) -> usize {
    if vars == 0 {
        return usize::from(degree == 0);
    }
    binomial(degree + vars - 1, vars - 1)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, t| acc * (n - t) / (t + 1))
}

/// Position of `exps` in the lex layout. `exps` must sum to `degree`.
pub fn rank(exps: &[usize], degree: usize) -> usize {
    let m = exps.len();
    let mut r = 0;
    let mut rem = degree;
    for (p, &e) in exps.iter().enumerate().take(m.saturating_sub(1)) {
        // tuples sharing the prefix but with a smaller entry here
        let k = m - p;
        r += cell_count(k, rem) - cell_count(k, rem - e);
        rem -= e;
    }
    r
}

/// Exponent tuples of the given shape in layout order.
pub fn exponents(vars: usize, degree: usize) -> Exponents {
    Exponents {
        vars,
        degree,
        current: None,
        done: vars == 0 && degree > 0,
    }
}

pub struct Exponents {
    vars: usize,
    degree: usize,
    current: Option<Vec<usize>>,
    done: bool,
}

impl Iterator for Exponents {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let m = self.vars;
        let next = match self.current.take() {
            None => {
                let mut v = vec![0; m];
                if m > 0 {
                    v[m - 1] = self.degree;
                }
                v
            }
            Some(mut v) => {
                // Bump the rightmost free entry whose prefix still has room,
                // zeroing everything after it.
                let mut prefix: usize = v[..m - 1].iter().sum();
                let mut bumped = false;
                for p in (0..m - 1).rev() {
                    if prefix < self.degree {
                        v[p] += 1;
                        for x in &mut v[p + 1..m - 1] {
                            *x = 0;
                        }
                        let head: usize = v[..=p].iter().sum();
                        v[m - 1] = self.degree - head;
                        bumped = true;
                        break;
                    }
                    prefix -= v[p];
                }
                if !bumped {
                    self.done = true;
                    return None;
                }
                v
            }
        };
        if m <= 1 {
            self.done = true;
        }
        self.current = Some(next.clone());
        Some(next)
    }
}

/// A homogeneous polynomial in `vars` variables with nonnegative integer
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomoPoly {
    vars: usize,
    degree: usize,
    coeffs: Vec<BigUint>,
}

impl HomoPoly {
    pub fn zero(vars: usize, degree: usize) -> HomoPoly {
        HomoPoly {
            vars,
            degree,
            coeffs: vec![BigUint::zero(); cell_count(vars, degree)],
        }
    }

    /// The constant `c` (degree 0).
    pub fn constant(vars: usize, c: u32) -> HomoPoly {
        let mut p = HomoPoly::zero(vars, 0);
        p.coeffs[0] = BigUint::from(c);
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` terms; repeated
    /// exponents accumulate.
    pub fn from_terms<I, C>(vars: usize, degree: usize, terms: I) -> Result<HomoPoly>
    where
        I: IntoIterator<Item = (Vec<usize>, C)>,
        C: Into<BigUint>,
    {
        let mut p = HomoPoly::zero(vars, degree);
        for (exps, c) in terms {
            p.check_exps(&exps)?;
            let r = rank(&exps, degree);
            p.coeffs[r] += c.into();
        }
        Ok(p)
    }

    /// Wraps a coefficient vector already in layout order.
    pub fn from_dense(vars: usize, degree: usize, coeffs: Vec<BigUint>) -> Result<HomoPoly> {
        let want = cell_count(vars, degree);
        if coeffs.len() != want {
            return Err(Error::ShapeMismatch(format!(
                "expected {want} coefficients for {vars} variables at degree {degree}, got {}",
                coeffs.len()
            )));
        }
        Ok(HomoPoly {
            vars,
            degree,
            coeffs,
        })
    }

    fn check_exps(&self, exps: &[usize]) -> Result<()> {
        if exps.len() != self.vars || exps.iter().sum::<usize>() != self.degree {
            return Err(Error::ShapeMismatch(format!(
                "exponents {exps:?} do not describe a degree-{} monomial in {} variables",
                self.degree, self.vars
            )));
        }
        Ok(())
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients in layout order.
    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut [BigUint] {
        &mut self.coeffs
    }

    /// Coefficient of the monomial with the given exponents; zero when the
    /// exponents do not fit the shape.
    pub fn coeff(&self, exps: &[usize]) -> BigUint {
        if self.check_exps(exps).is_err() {
            return BigUint::zero();
        }
        self.coeffs[rank(exps, self.degree)].clone()
    }

    pub(crate) fn coeff_ref(&self, exps: &[usize]) -> &BigUint {
        &self.coeffs[rank(exps, self.degree)]
    }

    pub fn set_coeff(&mut self, exps: &[usize], c: BigUint) -> Result<()> {
        self.check_exps(exps)?;
        let r = rank(exps, self.degree);
        self.coeffs[r] = c;
        Ok(())
    }

    /// Value at `X_1 = ... = X_m = 1`.
    pub fn sum(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `(exponents, coefficient)` pairs in layout order, zeros included.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &BigUint)> {
        exponents(self.vars, self.degree).zip(self.coeffs.iter())
    }

    fn same_shape(&self, other: &HomoPoly) -> Result<()> {
        if self.vars != other.vars || self.degree != other.degree {
            return Err(Error::ShapeMismatch(format!(
                "({}, {}) vs ({}, {})",
                self.vars, self.degree, other.vars, other.degree
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &HomoPoly) -> Result<HomoPoly> {
        self.same_shape(other)?;
        let mut out = self.clone();
        out.add_in_place(other);
        Ok(out)
    }

    pub(crate) fn add_in_place(&mut self, other: &HomoPoly) {
        debug_assert!(self.same_shape(other).is_ok());
        for (x, y) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *x += y;
        }
    }
}

impl Add for &HomoPoly {
    type Output = HomoPoly;

    /// Panics when the shapes differ; see [`HomoPoly::try_add`].
    fn add(self, rhs: &HomoPoly) -> HomoPoly {
        self.try_add(rhs)
            .expect("adding polynomials of different shapes")
    }
}

impl AddAssign<&HomoPoly> for HomoPoly {
    fn add_assign(&mut self, rhs: &HomoPoly) {
        self.same_shape(rhs)
            .expect("adding polynomials of different shapes");
        self.add_in_place(rhs);
    }
}

impl fmt::Debug for HomoPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomoPoly({} vars, degree {}: ", self.vars, self.degree)?;
        let mut first = true;
        for (exps, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (l, e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*X{}", l + 1)?,
                    _ => write!(f, "*X{}^{e}", l + 1)?,
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_is_lex_and_ranked() {
        for vars in 1..=4 {
            for degree in 0..=7 {
                let all: Vec<_> = exponents(vars, degree).collect();
                assert_eq!(all.len(), cell_count(vars, degree), "m={vars} d={degree}");
                for (r, e) in all.iter().enumerate() {
                    assert_eq!(e.iter().sum::<usize>(), degree);
                    assert_eq!(rank(e, degree), r);
                }
                assert!(all.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn triangle_layout() {
        let all: Vec<_> = exponents(3, 1).collect();
        assert_eq!(all, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        assert_eq!(cell_count(4, 48), 20825);
    }

    #[test]
    fn terms_and_sum() {
        let p = HomoPoly::from_terms(2, 2, [(vec![2, 0], 3u32), (vec![1, 1], 4), (vec![2, 0], 1)])
            .unwrap();
        assert_eq!(p.coeff(&[2, 0]), BigUint::from(4u32));
        assert_eq!(p.sum(), BigUint::from(8u32));
        assert!(HomoPoly::from_terms(2, 2, [(vec![1, 0], 1u32)]).is_err());
        assert_eq!(
            format!("{p:?}"),
            "HomoPoly(2 vars, degree 2: 4*X1*X2 + 4*X1^2)"
        );
        let q = &p + &p;
        assert_eq!(q.sum(), BigUint::from(16u32));
        assert!(p.try_add(&HomoPoly::zero(3, 2)).is_err());
    }
}
