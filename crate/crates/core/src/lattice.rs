//! Lattice-path counting for periodic step sets.
//!
//! `t_{n,k}` counts paths from `(0,0)` to `(n,k)` that stay in `0 <= k <= n`.
//! The rule applied at `(n,k)` is chosen by `k mod m`; each rule is a list of
//! source offsets `(dn, dk)`, meaning `t_{n,k} += t_{n-dn, k-dk}`. A level
//! step of length two is the offset `(2, 0)`.
//!
//! Boundary: `t_{0,k} = [k = 0]` and `t_{n,k} = 0` outside `0 <= k <= n`.
//!
//! ```json
//! { "m": 3,
//!   "rules": [[[1,1],[1,-1]], [[1,1],[1,0],[1,-1]], [[1,1],[2,0],[1,-1]]],
//!   "boundary": "standard" }
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::doc::{self, DocError, LetBinding};
use crate::group::{self, CoeffMatrix, GroupError};
use crate::seq::IntSequence;
use crate::series::{Rat, Series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    #[default]
    Standard,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSpec {
    pub m: usize,
    /// `rules[r]` applies to target columns with `k mod m == r`.
    pub rules: Vec<Vec<(usize, i64)>>,
    #[serde(default)]
    pub boundary: Boundary,
}

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("step-rule modulus must be at least 1")]
    ZeroModulus,
    #[error("expected {m} rule lists, one per residue, got {got}")]
    RuleCount { m: usize, got: usize },
    #[error("rule for residue {residue} has offset dn = 0; every step must advance n")]
    NonProgressingStep { residue: usize },
    #[error("invalid lattice spec: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Doc(#[from] DocError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

impl LatticeSpec {
    pub fn new(m: usize, rules: Vec<Vec<(usize, i64)>>) -> Result<Self, LatticeError> {
        let spec = LatticeSpec { m, rules, boundary: Boundary::Standard };
        spec.validate()?;
        Ok(spec)
    }

    /// The same offsets for every column.
    pub fn uniform(steps: Vec<(usize, i64)>) -> Self {
        LatticeSpec { m: 1, rules: vec![steps], boundary: Boundary::Standard }
    }

    pub fn from_json(text: &str) -> Result<Self, LatticeError> {
        let spec: LatticeSpec = serde_json::from_str(text)?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    fn validate(&self) -> Result<(), LatticeError> {
        if self.m == 0 {
            return Err(LatticeError::ZeroModulus);
        }
        if self.rules.len() != self.m {
            return Err(LatticeError::RuleCount { m: self.m, got: self.rules.len() });
        }
        for (residue, rule) in self.rules.iter().enumerate() {
            if rule.iter().any(|&(dn, _)| dn == 0) {
                return Err(LatticeError::NonProgressingStep { residue });
            }
        }
        Ok(())
    }

    fn counts(&self, rows: usize) -> Vec<Vec<BigInt>> {
        let mut t: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
        for n in 0..rows {
            let row = (0..=n)
                .map(|k| {
                    if n == 0 {
                        return BigInt::one();
                    }
                    let mut acc = BigInt::zero();
                    for &(dn, dk) in &self.rules[k % self.m] {
                        let Some(src_n) = n.checked_sub(dn) else { continue };
                        let src_k = k as i64 - dk;
                        if src_k >= 0 && src_k as usize <= src_n {
                            acc += &t[src_n][src_k as usize];
                        }
                    }
                    acc
                })
                .collect();
            t.push(row);
        }
        t
    }

    /// `t_{n,k}` for `0 <= k <= n < rows`, filled row by row.
    pub fn count_table(&self, rows: usize) -> CoeffMatrix {
        CoeffMatrix::from_rows(
            self.counts(rows)
                .into_iter()
                .map(|row| row.into_iter().map(Rat::from_integer).collect())
                .collect(),
        )
    }

    /// Number of paths of length `n` ending anywhere: the row sums.
    pub fn left_factors(&self, len: usize) -> IntSequence {
        IntSequence::new(self.count_table(len).row_sums())
    }
}

/// Outcome of comparing counted paths against generating functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GfReport {
    Match { checked: usize },
    Mismatch { n: usize, k: Option<usize>, counted: Rat, predicted: Rat },
}

impl GfReport {
    pub fn is_match(&self) -> bool {
        matches!(self, GfReport::Match { .. })
    }
}

/// Compares `t_{n,k}` with `[x^n] g f_1^{..} ... f_m^{..}` (the column
/// pattern of an m-Riordan matrix with `m = f.len()`) for `n < rows` and
/// `k < columns`. The `f_i` only need to be divisible by `x`.
pub fn verify_columns(
    spec: &LatticeSpec,
    g: &Series,
    f: &[Series],
    rows: usize,
    columns: usize,
) -> Result<GfReport, LatticeError> {
    let predicted = group::pattern_matrix(g, f, rows)?;
    let counted = spec.count_table(rows);
    let mut checked = 0;
    for n in 0..rows {
        for k in 0..columns.min(n + 1) {
            let (c, p) = (counted.get(n, k), predicted.get(n, k));
            if c != p {
                return Ok(GfReport::Mismatch { n, k: Some(k), counted: c, predicted: p });
            }
            checked += 1;
        }
    }
    Ok(GfReport::Match { checked })
}

/// Compares the left-factor counts with the coefficients of `gf`.
pub fn verify_left_factors(spec: &LatticeSpec, gf: &Series, len: usize) -> Result<GfReport, LatticeError> {
    if len > gf.order() + 1 {
        return Err(GroupError::OrderTooSmall { order: gf.order(), needed: len - 1 }.into());
    }
    let counted = spec.left_factors(len);
    for (n, (c, p)) in counted.terms().iter().zip(gf.coeffs()).enumerate() {
        if c != p {
            return Ok(GfReport::Mismatch { n, k: None, counted: c.clone(), predicted: p.clone() });
        }
    }
    Ok(GfReport::Match { checked: len })
}

/// Closed-form claims about a lattice array, as expressions:
///
/// ```json
/// { "let": [...], "g": "...", "f": ["...", "...", "..."], "left_factors": "..." }
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GfClaim {
    #[serde(default, rename = "let")]
    pub bindings: Vec<LetBinding>,
    pub g: String,
    pub f: Vec<String>,
    #[serde(default)]
    pub left_factors: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub columns: GfReport,
    pub left_factors: Option<GfReport>,
}

impl VerifyReport {
    pub fn is_match(&self) -> bool {
        self.columns.is_match() && self.left_factors.as_ref().is_none_or(GfReport::is_match)
    }
}

impl GfClaim {
    pub fn from_json(text: &str) -> Result<Self, LatticeError> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Evaluates the claim's expressions and checks them against the counts:
/// columns `0..columns` over rows `0..rows`, and the left-factor generating
/// function (when given) over the same rows.
pub fn verify_against_gf(
    spec: &LatticeSpec,
    claim: &GfClaim,
    rows: usize,
    columns: usize,
) -> Result<VerifyReport, LatticeError> {
    let order = rows.saturating_sub(1);
    let mut exprs: Vec<&str> = vec![claim.g.as_str()];
    exprs.extend(claim.f.iter().map(String::as_str));
    let series = doc::evaluate_series_set(&claim.bindings, &exprs, order)?;
    let columns_report = verify_columns(spec, &series[0], &series[1..], rows, columns)?;
    let left = match &claim.left_factors {
        None => None,
        Some(text) => {
            let gf = doc::evaluate_series_set(&claim.bindings, &[text.as_str()], order)?.remove(0);
            Some(verify_left_factors(spec, &gf, rows)?)
        }
    };
    Ok(VerifyReport { columns: columns_report, left_factors: left })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{catalan_series, eval_str};
    use crate::series::rat;

    pub(crate) const THREE_FOLD: &str = include_str!("../fixtures/lattice_threefold.json");
    pub(crate) const A111373: &str = include_str!("../fixtures/lattice_a111373.json");

    #[test]
    fn three_fold_entries() {
        let t = LatticeSpec::from_json(THREE_FOLD).unwrap().count_table(10);
        assert_eq!(t.get(4, 0), rat(3));
        assert_eq!(t.get(5, 1), rat(13));
        assert_eq!(t.get(7, 3), rat(33));
        assert_eq!(t.get(9, 4), rat(149));
    }

    #[test]
    fn three_fold_left_factors() {
        let lf = LatticeSpec::from_json(THREE_FOLD).unwrap().left_factors(11);
        assert_eq!(lf.to_i64().unwrap(), [1, 1, 3, 6, 15, 34, 83, 195, 474, 1133, 2756]);
    }

    #[test]
    fn a111373_entries_and_row_sums() {
        let spec = LatticeSpec::from_json(A111373).unwrap();
        let t = spec.count_table(10);
        assert_eq!(t.get(6, 0), rat(3));
        assert_eq!(t.get(8, 2), rat(12));
        assert_eq!(t.get(9, 0), rat(12));
        assert_eq!(t.get(9, 3), rat(18));
        assert_eq!(
            spec.left_factors(17).to_i64().unwrap(),
            [1, 1, 1, 2, 3, 4, 8, 13, 19, 38, 64, 98, 196, 337, 531, 1062, 1851]
        );
    }

    #[test]
    fn dyck_column_zero_is_aerated_catalan() {
        let dyck = LatticeSpec::uniform(vec![(1, 1), (1, -1)]);
        let col0 = dyck.count_table(21).column(0);
        let aerated = catalan_series(10).aerate(2, 0).truncate(20);
        assert_eq!(col0, aerated.coeffs());
    }

    #[test]
    fn empty_rules_count_only_the_empty_path() {
        let spec = LatticeSpec::uniform(Vec::new());
        assert_eq!(spec.left_factors(5).to_i64().unwrap(), [1, 0, 0, 0, 0]);
    }

    #[test]
    fn diagonal_steps_give_identity_columns() {
        let spec = LatticeSpec::uniform(vec![(1, 1)]);
        let report = verify_columns(&spec, &Series::one(8), &vec![Series::x(8); 3], 9, 9).unwrap();
        assert_eq!(report, GfReport::Match { checked: 45 });
    }

    #[test]
    fn mismatch_is_reported() {
        let spec = LatticeSpec::uniform(vec![(1, 1), (1, -1)]);
        let wrong = eval_str("1/(1-x^2)", 6).unwrap();
        let report = verify_columns(&spec, &wrong, &[Series::x(6)], 7, 1).unwrap();
        assert_eq!(report, GfReport::Mismatch { n: 4, k: Some(0), counted: rat(2), predicted: rat(1) });
    }

    #[test]
    fn invalid_specs() {
        assert!(matches!(
            LatticeSpec::new(2, vec![vec![(1, 1)]]),
            Err(LatticeError::RuleCount { m: 2, got: 1 })
        ));
        assert!(matches!(
            LatticeSpec::new(1, vec![vec![(0, 1)]]),
            Err(LatticeError::NonProgressingStep { residue: 0 })
        ));
        assert!(matches!(LatticeSpec::from_json(r#"{"m": 0, "rules": []}"#), Err(LatticeError::ZeroModulus)));
        assert!(matches!(
            LatticeSpec::from_json(r#"{"m": 1, "rules": [[]], "boundary": "periodic"}"#),
            Err(LatticeError::Json(_))
        ));
    }
}

#[cfg(test)]
mod claim_tests {
    use super::*;

    #[test]
    fn three_fold_closed_forms() {
        let spec = LatticeSpec::from_json(include_str!("../fixtures/lattice_threefold.json")).unwrap();
        let claim = GfClaim::from_json(include_str!("../fixtures/lattice_threefold_claim.json")).unwrap();
        let report = verify_against_gf(&spec, &claim, 21, 6).unwrap();
        println!("{report:?}");
        assert!(report.is_match(), "{report:?}");
    }
}
