//! Densities of the six chain classes inside `𝒫_{+^n}`.

use std::f64::consts::PI;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::count::plus_rows;

/// Exact densities for one word length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityRow {
    /// Length of the word `+^n`.
    pub n: usize,
    /// `#ℛ^{(α)}_{+^n} / #𝒫_{+^n}` at index `α - 1`.
    pub p: [BigRational; 6],
    /// `#𝒬^+_{+^n} / #𝒫_{+^n}`.
    pub q_plus: BigRational,
    /// `#ℛ^{+,+}_{+^n} / #𝒫_{+^n}`.
    pub r_plus_plus: BigRational,
    /// `p` rendered with `digits` fractional digits.
    pub decimals: [String; 6],
    pub digits: usize,
}

fn ratio(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

/// Renders a nonnegative rational with `digits` fractional digits, rounding
/// to nearest with ties away from zero.
pub fn to_decimal(r: &BigRational, digits: usize) -> String {
    let neg = r.is_negative();
    let r = r.abs();
    let scale = num_traits::pow(BigInt::from(10u32), digits);
    let (q, rem) = (r.numer() * &scale).div_rem(r.denom());
    let q = if rem * 2u32 >= *r.denom() {
        q + 1u32
    } else {
        q
    };
    let (int, frac) = q.div_rem(&scale);
    let sign = if neg && !(int.is_zero() && frac.is_zero()) {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac:0>digits$}")
    }
}

/// Density rows for `n = 2..=n_max`, from one pass of the evolutions.
pub fn densities(n_max: usize, digits: usize) -> Vec<DensityRow> {
    plus_rows(n_max)
        .into_iter()
        .filter_map(|row| {
            let sums = row.r_alpha?;
            let p: [BigRational; 6] = std::array::from_fn(|a| ratio(&sums[a], &row.p));
            let decimals = std::array::from_fn(|a| to_decimal(&p[a], digits));
            Some(DensityRow {
                n: row.n,
                q_plus: ratio(&row.q_plus, &row.p),
                r_plus_plus: ratio(&row.r_plus_plus, &row.p),
                p,
                decimals,
                digits,
            })
        })
        .collect()
}

/// Conjectured limits of the six densities, index `α - 1`.
pub fn limits() -> [f64; 6] {
    let inv = 1.0 / PI;
    [
        inv,
        0.5 - inv,
        2.0 * inv - 0.5,
        2.0 * inv - 0.5,
        0.5 - inv,
        1.0 - 3.0 * inv,
    ]
}

/// Conjectured limit of the `𝒬^+` density.
pub const Q_PLUS_LIMIT: f64 = 2.0 / PI;
/// Conjectured limit of the `ℛ^{+,+}` density.
pub const R_PLUS_PLUS_LIMIT: f64 = 0.5;

#[derive(Debug, Clone, Serialize)]
pub struct Deviation {
    pub label: String,
    pub limit_expr: &'static str,
    pub value: String,
    pub limit: f64,
    pub deviation: f64,
}

/// Finite-`n` densities against their conjectured limits.
#[derive(Debug, Clone, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub entries: Vec<Deviation>,
}

impl ConjectureReport {
    pub fn max_deviation(&self) -> f64 {
        self.entries.iter().map(|e| e.deviation).fold(0.0, f64::max)
    }

    pub fn entry(&self, label: &str) -> Option<&Deviation> {
        self.entries.iter().find(|e| e.label == label)
    }
}

const LIMIT_EXPRS: [&str; 6] = [
    "1/pi", "1/2-1/pi", "2/pi-1/2", "2/pi-1/2", "1/2-1/pi", "1-3/pi",
];

fn deviation(
    label: String,
    limit_expr: &'static str,
    value: &BigRational,
    limit: f64,
) -> Deviation {
    let v = value.to_f64().expect("densities lie in [0, 1]");
    Deviation {
        label,
        limit_expr,
        value: to_decimal(value, 15),
        limit,
        deviation: (v - limit).abs(),
    }
}

/// Compares the densities at `n` (`n >= 2`) with the conjectured limits.
pub fn conjecture_report(n: usize) -> Option<ConjectureReport> {
    let row = densities(n, 15).pop().filter(|r| r.n == n)?;
    Some(report_for(&row))
}

pub fn report_for(row: &DensityRow) -> ConjectureReport {
    let lim = limits();
    let mut entries: Vec<Deviation> = (0..6)
        .map(|a| deviation(format!("p{}", a + 1), LIMIT_EXPRS[a], &row.p[a], lim[a]))
        .collect();
    entries.push(deviation(
        "q_plus".into(),
        "2/pi",
        &row.q_plus,
        Q_PLUS_LIMIT,
    ));
    entries.push(deviation(
        "r_plus_plus".into(),
        "1/2",
        &row.r_plus_plus,
        R_PLUS_PLUS_LIMIT,
    ));
    ConjectureReport { n: row.n, entries }
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}", self.n)?;
        writeln!(
            f,
            "{:<12} {:>20} {:>10} {:>16} {:>10}",
            "density", "value", "limit", "limit value", "deviation"
        )?;
        for e in &self.entries {
            writeln!(
                f,
                "{:<12} {:>20} {:>10} {:>16.12} {:>10.3e}",
                e.label, e.value, e.limit_expr, e.limit, e.deviation
            )?;
        }
        Ok(())
    }
}

/// Sum of the six densities; exactly one for every row.
pub fn row_total(row: &DensityRow) -> BigRational {
    row.p.iter().fold(BigRational::zero(), |acc, x| acc + x)
}

pub fn is_partition(row: &DensityRow) -> bool {
    row_total(row) == BigRational::one()
}
