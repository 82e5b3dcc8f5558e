//! One-dimensional boustrophedons and Seidel triangle sequences.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::phi::{apply_prefix, Phi};
use crate::poly::{exponents, HomoPoly};
use crate::sign::{Sign, SignWord};

/// One row of a boustrophedon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoustroLine {
    pub values: Vec<BigUint>,
}

impl BoustroLine {
    pub fn sum(&self) -> BigUint {
        self.values.iter().sum()
    }
}

/// Advances the "ends with value j" distribution of a descent class by one
/// letter: an ascent sums the entries to the left of `j`, a descent the
/// entries at or to the right.
fn step(row: &[BigUint], s: Sign) -> Vec<BigUint> {
    let k = row.len();
    let mut out = vec![BigUint::zero(); k + 1];
    match s {
        Sign::Plus => {
            let mut acc = BigUint::zero();
            for j in 0..=k {
                out[j] = acc.clone();
                if j < k {
                    acc += &row[j];
                }
            }
        }
        Sign::Minus => {
            let mut acc = BigUint::zero();
            for j in (0..=k).rev() {
                if j < k {
                    acc += &row[j];
                }
                out[j] = acc.clone();
            }
        }
    }
    out
}

/// Rows of the boustrophedon driven by `w`; row `t` (1-based) has `t`
/// entries, entry `j` counting permutations of `[t]` with descent pattern
/// `w[..t-1]` and last value `j`.
pub fn viennot_rows(w: &SignWord) -> Vec<BoustroLine> {
    let mut rows = vec![BoustroLine {
        values: vec![BigUint::from(1u32)],
    }];
    for &s in w.signs() {
        let next = step(&rows.last().expect("nonempty").values, s);
        rows.push(BoustroLine { values: next });
    }
    rows
}

/// `#𝒮_w`, the number of permutations of `[|w| + 1]` with descent pattern `w`.
pub fn viennot_counts(w: &SignWord) -> BigUint {
    viennot_rows(w).pop().expect("nonempty").sum()
}

/// The Seidel-Entringer-Arnold triangle: row `t` is `(e_{t,1}, ..., e_{t,t})`.
pub fn entringer_triangle(n: usize) -> Vec<BoustroLine> {
    if n == 0 {
        return Vec::new();
    }
    viennot_rows(&SignWord::alternating(n - 1))
}

/// Euler numbers `E_1, ..., E_n` as row sums of [`entringer_triangle`].
pub fn euler_numbers(n: usize) -> Vec<BigUint> {
    entringer_triangle(n).iter().map(BoustroLine::sum).collect()
}

/// The triangle `T_n(H)`: constant along rows of constant `j`, bottom line
/// equal to line `n` of `H`.
pub fn seidel_source_triangle(line: &[BigUint]) -> HomoPoly {
    let n = line.len();
    let d = n - 1;
    let coeffs = exponents(3, d)
        .map(|e| line[n - 1 - e[1]].clone())
        .collect();
    HomoPoly::from_dense(3, d, coeffs).expect("layout size")
}

/// `A_n` of the Seidel triangle sequence built from `h`: `A_1 = T_1(H)` and
/// `A_n = Φ_{1,1,3}(A_{n-1}) + T_n(H)`.
pub fn seidel_sequence(h: &[Vec<BigUint>], n: usize) -> Result<HomoPoly> {
    if n == 0 {
        return Err(Error::RaggedArray("sequence index starts at 1".into()));
    }
    if h.len() < n {
        return Err(Error::RaggedArray(format!(
            "need {n} lines, got {}",
            h.len()
        )));
    }
    for (t, line) in h[..n].iter().enumerate() {
        if line.len() != t + 1 {
            return Err(Error::RaggedArray(format!(
                "line {} has {} entries, expected {}",
                t + 1,
                line.len(),
                t + 1
            )));
        }
    }
    let mut acc = seidel_source_triangle(&h[0]);
    for line in &h[1..n] {
        acc = apply_prefix(Phi::fixed(1, 1, 3), &acc);
        acc.add_in_place(&seidel_source_triangle(line));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nums(xs: &[u64]) -> Vec<BigUint> {
        xs.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn entringer_first_rows() {
        let rows: Vec<_> = entringer_triangle(5)
            .into_iter()
            .map(|r| r.values)
            .collect();
        assert_eq!(
            rows,
            vec![
                nums(&[1]),
                nums(&[0, 1]),
                nums(&[1, 1, 0]),
                nums(&[0, 1, 2, 2]),
                nums(&[5, 5, 4, 2, 0])
            ]
        );
    }

    #[test]
    fn descent_class_counts() {
        assert_eq!(viennot_counts(&SignWord::all_plus(9)), BigUint::from(1u32));
        assert_eq!(viennot_counts(&"+-".parse().unwrap()), BigUint::from(2u32));
        assert_eq!(viennot_counts(&SignWord::empty()), BigUint::from(1u32));
    }

    #[test]
    fn euler_row_sums_match_phi_route() {
        let euler = euler_numbers(12);
        for n in 2..=12 {
            let p = crate::engine::evolve_p(&SignWord::all_plus(n - 1)).unwrap();
            assert_eq!(p.sum(), euler[n - 1]);
        }
    }

    #[test]
    fn seidel_source_layout() {
        // T_3(H): top h3 / h2 h3 / h1 h2 h3
        let t = seidel_source_triangle(&nums(&[7, 8, 9]));
        let d = 2;
        let rows: Vec<Vec<BigUint>> = (0..=d)
            .rev()
            .map(|i| (0..=d - i).map(|k| t.coeff(&[i, d - i - k, k])).collect())
            .collect();
        assert_eq!(rows, vec![nums(&[9]), nums(&[8, 9]), nums(&[7, 8, 9])]);
    }

    #[test]
    fn seidel_sequences() {
        let h = vec![nums(&[1]), nums(&[0, 0])];
        let a2 = seidel_sequence(&h, 2).unwrap();
        assert_eq!(
            a2,
            HomoPoly::from_terms(3, 1, [(vec![1, 0, 0], 1u32)]).unwrap()
        );
        let zeros: Vec<Vec<BigUint>> = (1..=6).map(|t| nums(&vec![0; t])).collect();
        assert!(seidel_sequence(&zeros, 6).unwrap().is_zero());
        let ragged = vec![nums(&[1]), nums(&[1])];
        assert!(matches!(
            seidel_sequence(&ragged, 2),
            Err(Error::RaggedArray(_))
        ));
        assert!(seidel_sequence(&h, 3).is_err());
    }
}
