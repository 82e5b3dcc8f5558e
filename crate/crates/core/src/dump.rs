//! Machine-readable and pretty-printed forms of the refined arrays.
//!
//! JSON dump:
//!
//! ```json
//! {"word":"+++","eta":"+","degree":2,"layout":"dense-(i,j)-lex","coefficients":["1","0","1","0","1","0"]}
//! ```
//!
//! Triangles carry `eta`, tetrahedra carry `alpha`. Coefficients are decimal
//! strings in the lex layout of [`crate::poly`].

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::HomoPoly;
use crate::sign::{Sign, SignWord};

pub const TRIANGLE_LAYOUT: &str = "dense-(i,j)-lex";
pub const TETRA_LAYOUT: &str = "dense-(i,j,k)-lex";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrayDump {
    pub word: SignWord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    pub degree: usize,
    pub layout: String,
    pub coefficients: Vec<String>,
}

impl ArrayDump {
    pub fn triangle(word: &SignWord, eta: Sign, poly: &HomoPoly) -> ArrayDump {
        ArrayDump {
            word: word.clone(),
            eta: Some(eta.to_string()),
            alpha: None,
            degree: poly.degree(),
            layout: TRIANGLE_LAYOUT.into(),
            coefficients: poly.coeffs().iter().map(BigUint::to_string).collect(),
        }
    }

    pub fn tetrahedron(word: &SignWord, alpha: usize, poly: &HomoPoly) -> ArrayDump {
        ArrayDump {
            word: word.clone(),
            eta: None,
            alpha: Some(alpha),
            degree: poly.degree(),
            layout: TETRA_LAYOUT.into(),
            coefficients: poly.coeffs().iter().map(BigUint::to_string).collect(),
        }
    }

    /// Rebuilds the polynomial.
    pub fn to_poly(&self) -> Result<HomoPoly> {
        let vars = match self.layout.as_str() {
            TRIANGLE_LAYOUT => 3,
            TETRA_LAYOUT => 4,
            other => return Err(Error::Parse(format!("unknown layout {other:?}"))),
        };
        let coeffs = self
            .coefficients
            .iter()
            .map(|c| {
                c.parse::<BigUint>()
                    .map_err(|e| Error::Parse(format!("{c:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        HomoPoly::from_dense(vars, self.degree, coeffs)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }

    pub fn from_json(s: &str) -> Result<ArrayDump> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Rows of a triangle from the top vertex down. The bottom, right and left
/// sides are `i = 0`, `j = 0` and `k = 0`.
pub fn triangle_rows(p: &HomoPoly) -> Vec<Vec<BigUint>> {
    assert_eq!(p.vars(), 3, "triangles have three variables");
    let d = p.degree();
    (0..=d)
        .rev()
        .map(|i| (0..=d - i).map(|k| p.coeff(&[i, d - i - k, k])).collect())
        .collect()
}

/// Centered text rendering of a triangle.
pub fn pretty_triangle(p: &HomoPoly) -> String {
    let rows = triangle_rows(p);
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(BigUint::to_string).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let depth = rows.len();
    let mut out = String::new();
    for (t, row) in cells.iter().enumerate() {
        let indent = (depth - 1 - t) * (width + 1) / 2 + (depth - 1 - t) * (width + 1) % 2;
        out.push_str(&" ".repeat(indent));
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

/// A tetrahedron as one triangle per value of `ℓ` (the `X_4` exponent).
pub fn pretty_tetrahedron(p: &HomoPoly) -> String {
    assert_eq!(p.vars(), 4, "tetrahedra have four variables");
    let d = p.degree();
    let mut out = String::new();
    for l in 0..=d {
        let slice_degree = d - l;
        let terms = crate::poly::exponents(3, slice_degree).map(|e| {
            let c = p.coeff(&[e[0], e[1], e[2], l]);
            (e, c)
        });
        let slice = HomoPoly::from_terms(3, slice_degree, terms).expect("slice shape");
        let _ = writeln!(out, "l = {l}");
        out.push_str(&pretty_triangle(&slice));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{evolve_q, evolve_r};

    #[test]
    fn json_round_trip_is_byte_identical() {
        let w: SignWord = "+++".parse().unwrap();
        let (plus, _) = evolve_q(&w).unwrap();
        let dump = ArrayDump::triangle(&w, Sign::Plus, &plus);
        let json = dump.to_json();
        assert_eq!(
            json,
            r#"{"word":"+++","eta":"+","degree":2,"layout":"dense-(i,j)-lex","coefficients":["1","0","1","0","1","0"]}"#
        );
        let back = ArrayDump::from_json(&json).unwrap();
        assert_eq!(back.to_json(), json);
        assert_eq!(back.to_poly().unwrap(), plus);

        let w: SignWord = "+-++".parse().unwrap();
        let r = evolve_r(&w).unwrap();
        let json = ArrayDump::tetrahedron(&w, 2, &r[1]).to_json();
        assert_eq!(ArrayDump::from_json(&json).unwrap().to_json(), json);
        assert!(json.contains(r#""alpha":2"#) && !json.contains("eta"));
    }

    #[test]
    fn bad_dumps() {
        assert!(ArrayDump::from_json("{}").is_err());
        let mut dump = ArrayDump::triangle(
            &SignWord::all_plus(1),
            Sign::Plus,
            &HomoPoly::constant(3, 1),
        );
        dump.layout = "sparse".into();
        assert!(dump.to_poly().is_err());
    }

    #[test]
    fn pretty_triangle_rendering() {
        let (plus, _) = evolve_q(&SignWord::all_plus(4)).unwrap();
        assert_eq!(pretty_triangle(&plus), "   0\n  1 1\n 1 2 1\n1 2 1 1\n");
        let r = evolve_r(&SignWord::all_plus(3)).unwrap();
        assert!(pretty_tetrahedron(&r[0]).starts_with("l = 0\n"));
    }
}
