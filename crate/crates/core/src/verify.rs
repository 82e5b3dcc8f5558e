//! Cross-checks of the recurrences and the bijection against the oracle.

use std::collections::HashSet;
use std::fmt;

use crate::bijection::{descent_transport_check, entringer_by_content, forward_f, inverse_f};
use crate::classical::{entringer_triangle, viennot_counts};
use crate::engine::{evolve_p, evolve_q, evolve_r};
use crate::error::{Error, Result};
use crate::oracle::{self, classify_all, refine_all};
use crate::perm::Permutation;
use crate::phi::{apply_index_form, apply_prefix, apply_scatter, Phi};
use crate::poly::{exponents, HomoPoly};
use crate::sign::SignWord;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn record(&mut self, name: impl Into<String>, failures: Vec<String>, ok_detail: String) {
        let passed = failures.is_empty();
        let detail = if passed {
            ok_detail
        } else {
            let mut d = failures
                .iter()
                .take(5)
                .cloned()
                .collect::<Vec<_>>()
                .join("; ");
            if failures.len() > 5 {
                d.push_str(&format!(" (+{} more)", failures.len() - 5));
            }
            d
        };
        self.checks.push(CheckResult {
            name: name.into(),
            passed,
            detail,
        });
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "[{}] {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            )?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Recurrence engines against brute-force refined counts for every word of
/// length `1..=max_word_len`.
pub fn check_engines(report: &mut VerifyReport, max_word_len: usize) -> Result<()> {
    let mut failures = Vec::new();
    let mut words = 0usize;
    for len in 1..=max_word_len {
        let n = len + 2;
        let counts = classify_all(n)?;
        for (w, refined) in refine_all(n)? {
            words += 1;
            let class = counts.get(&w).expect("all words present");
            let (plus, minus) = evolve_q(&w)?;
            if plus != refined.f[0] || minus != refined.f[1] {
                failures.push(format!("triangles differ for {w}"));
            }
            if plus.sum() != class.q_plus || minus.sum() != class.q_minus {
                failures.push(format!("𝒬 sums differ for {w}"));
            }
            let p = evolve_p(&w)?;
            if p != refined.e || p.sum() != class.p {
                failures.push(format!("two-variable refinement differs for {w}"));
            }
            if let Some(g) = &refined.g {
                let r = evolve_r(&w)?;
                for alpha in 0..6 {
                    if r[alpha] != g[alpha] || r[alpha].sum() != class.r[alpha] {
                        failures.push(format!("tetrahedron {} differs for {w}", alpha + 1));
                    }
                }
            }
            if viennot_counts(&w.involution()) != class.p {
                failures.push(format!("descent class count differs for {w}"));
            }
        }
    }
    report.record(
        format!("engines vs oracle, |w| <= {max_word_len}"),
        failures,
        format!("{words} words, every coefficient equal"),
    );
    Ok(())
}

/// The bijection on orders of `[n+1]` for `n = 2..=max_n`.
pub fn check_bijection(report: &mut VerifyReport, max_n: usize) -> Result<()> {
    let mut failures = Vec::new();
    let mut total = 0usize;
    for n in 2..=max_n {
        let mut seen = HashSet::new();
        for z in oracle::enumerate_cyclic_orders(n + 1)? {
            total += 1;
            let sigma = forward_f(&z);
            if sigma.n() != n {
                failures.push(format!("{z} maps to a permutation of size {}", sigma.n()));
            }
            if sigma.descent_pattern() != z.cyclic_descent_pattern().involution() {
                failures.push(format!("pattern not transported for {z}"));
            }
            if inverse_f(&sigma)? != z {
                failures.push(format!("inverse fails on {z}"));
            }
            seen.insert(sigma);
        }
        let fact: usize = (1..=n).product();
        if seen.len() != fact {
            failures.push(format!(
                "image of size {} for n = {n}, expected {fact}",
                seen.len()
            ));
        }
        for sigma in Permutation::all(n) {
            if forward_f(&inverse_f(&sigma)?) != sigma {
                failures.push(format!("forward(inverse({sigma})) differs"));
            }
        }
        for w in SignWord::all_of_len(n - 1) {
            if !descent_transport_check(&w)? {
                failures.push(format!("transport fails for {w}"));
            }
        }
    }
    report.record(
        format!("bijection, n <= {max_n}"),
        failures,
        format!("{total} orders, bijective with patterns transported"),
    );
    Ok(())
}

/// Entringer numbers by content against the boustrophedon, `n <= max_n`.
pub fn check_entringer(report: &mut VerifyReport, max_n: usize) -> Result<()> {
    let mut failures = Vec::new();
    for (t, row) in entringer_triangle(max_n).iter().enumerate() {
        let n = t + 1;
        for (j, want) in row.values.iter().enumerate() {
            let got = entringer_by_content(n, j + 1)?;
            if &got != want {
                failures.push(format!("e({n},{}) = {got}, boustrophedon {want}", j + 1));
            }
        }
    }
    report.record(
        format!("entringer by content, n <= {max_n}"),
        failures,
        "all rows equal".into(),
    );
    Ok(())
}

/// The three `Φ` evaluations on every monomial with `m <= 4`, `d <= max_degree`.
pub fn check_phi(report: &mut VerifyReport, max_degree: usize) -> Result<()> {
    let mut failures = Vec::new();
    let mut cases = 0usize;
    for vars in 2..=4 {
        for a in 1..=vars {
            for b in 1..=vars {
                for c in (1..=vars).filter(|&c| c != b) {
                    let op = Phi::new(a, b, c, vars).expect("valid indices");
                    for d in 0..=max_degree {
                        for e in exponents(vars, d) {
                            cases += 1;
                            let mono = HomoPoly::from_terms(vars, d, [(e.clone(), 1u32)])?;
                            let reference = apply_scatter(op, &mono);
                            if reference.degree() != d + 1
                                || apply_index_form(op, &mono) != reference
                                || apply_prefix(op, &mono) != reference
                            {
                                failures.push(format!("Φ_{{{a},{b},{c}}} on {e:?}"));
                            }
                        }
                    }
                }
            }
        }
    }
    report.record(
        format!("Φ kernels, m <= 4, d <= {max_degree}"),
        failures,
        format!("{cases} monomials"),
    );
    Ok(())
}

/// Runs every check at the given word length. Orders on up to
/// `max_word_len + 2` elements are enumerated.
pub fn verify_all(max_word_len: usize) -> Result<VerifyReport> {
    let top = max_word_len + 2;
    if top > oracle::max_n() {
        return Err(Error::OracleRange {
            n: top,
            max: oracle::max_n(),
        });
    }
    let mut report = VerifyReport::default();
    check_engines(&mut report, max_word_len)?;
    check_bijection(&mut report, max_word_len + 1)?;
    check_entringer(&mut report, max_word_len + 1)?;
    check_phi(&mut report, 5)?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let report = verify_all(4).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.to_string().ends_with("PASS"));
    }
}
