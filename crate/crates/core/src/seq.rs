//! Sequences derived from an element: row and diagonal sums, the bivariate
//! table, Hankel transforms and interleaving.
//!
//! The generating-function routes generalise the `m = 3` displays to any
//! `m`: with `P_j = f_1 ... f_j` (`P_0 = 1`) and `w = f_1 ... f_m`,
//!
//! * bivariate: `g sum_{j<m} y^j P_j / (1 - y^m w)`,
//! * row sums: `y = 1`,
//! * diagonal sums: `y = x`.
//!
//! Each is checked against the matrix route in the tests.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::group::{CoeffMatrix, GroupError, MRiordanElement};
use crate::series::{rat, Rat, Series};

/// A finite sequence of exact values (integers in practice).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntSequence {
    terms: Vec<Rat>,
}

impl IntSequence {
    pub fn new(terms: Vec<Rat>) -> Self {
        IntSequence { terms }
    }

    pub fn from_ints(terms: &[i64]) -> Self {
        Self::new(terms.iter().map(|&t| rat(t)).collect())
    }

    pub fn terms(&self) -> &[Rat] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn take(&self, n: usize) -> IntSequence {
        IntSequence::new(self.terms.iter().take(n).cloned().collect())
    }

    /// The terms as machine integers, when they all are.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.terms
            .iter()
            .map(|t| if t.is_integer() { t.to_integer().to_i64() } else { None })
            .collect()
    }

    /// One term per line.
    pub fn to_plain(&self) -> String {
        self.terms.iter().map(|t| format!("{t}\n")).collect()
    }

    /// Comma separated on a single line.
    pub fn to_csv(&self) -> String {
        let parts: Vec<String> = self.terms.iter().map(Rat::to_string).collect();
        format!("{}\n", parts.join(","))
    }
}

impl fmt::Display for IntSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(Rat::to_string).collect();
        f.write_str(&parts.join(", "))
    }
}

/// Accepts terms separated by commas and/or whitespace; terms may be
/// fractions such as `-3/4`.
impl FromStr for IntSequence {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<Rat>().map_err(|e| format!("bad term '{t}': {e}")))
            .collect::<Result<Vec<_>, _>>()
            .map(IntSequence::new)
    }
}

fn check_terms(e: &MRiordanElement, len: usize) -> Result<(), GroupError> {
    if len > e.order() + 1 {
        return Err(GroupError::OrderTooSmall { order: e.order(), needed: len - 1 });
    }
    Ok(())
}

/// `P_0 = 1, P_1 = f_1, ..., P_{m-1} = f_1 ... f_{m-1}`.
fn partial_products(e: &MRiordanElement) -> Vec<Series> {
    let mut out = vec![Series::one(e.order())];
    for fi in &e.f()[..e.m() - 1] {
        let next = out.last().expect("nonempty") * fi;
        out.push(next);
    }
    out
}

/// Row sums from `g (P_0 + ... + P_{m-1}) / (1 - w)`.
pub fn row_sums(e: &MRiordanElement, len: usize) -> Result<IntSequence, GroupError> {
    check_terms(e, len)?;
    let n = e.order();
    let numer = partial_products(e).iter().fold(Series::zero(n), |acc, p| &acc + p);
    let denom = &Series::one(n) - &e.step_series();
    let gf = (e.g() * &numer).div(&denom)?;
    Ok(IntSequence::new(gf.into_coeffs()).take(len))
}

/// Diagonal sums `sum_k a_{n-k,k}` from `g sum_j x^j P_j / (1 - x^m w)`.
pub fn diagonal_sums(e: &MRiordanElement, len: usize) -> Result<IntSequence, GroupError> {
    check_terms(e, len)?;
    let n = e.order();
    let numer = partial_products(e)
        .iter()
        .enumerate()
        .fold(Series::zero(n), |acc, (j, p)| &acc + &p.shift_up(j));
    let denom = &Series::one(n) - &e.step_series().shift_up(e.m());
    let gf = (e.g() * &numer).div(&denom)?;
    Ok(IntSequence::new(gf.into_coeffs()).take(len))
}

pub fn row_sums_from_matrix(e: &MRiordanElement, len: usize) -> Result<IntSequence, GroupError> {
    Ok(IntSequence::new(e.to_matrix(len)?.row_sums()))
}

pub fn diagonal_sums_from_matrix(e: &MRiordanElement, len: usize) -> Result<IntSequence, GroupError> {
    Ok(IntSequence::new(e.to_matrix(len)?.diagonal_sums()))
}

/// Row `n` is the polynomial in `y` multiplying `x^n` in the bivariate
/// generating function; entry `k` of the row is `a_{n,k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateTable {
    rows: Vec<Vec<Rat>>,
}

impl BivariateTable {
    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Coefficient of `x^n y^k`.
    pub fn get(&self, n: usize, k: usize) -> Rat {
        self.rows[n].get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn to_matrix(&self) -> CoeffMatrix {
        CoeffMatrix::from_rows(
            self.rows.iter().enumerate().map(|(n, _)| (0..=n).map(|k| self.get(n, k)).collect()).collect(),
        )
    }
}

type Poly = Vec<Rat>;

fn poly_mul_acc(acc: &mut Poly, a: &Poly, b: &Poly, max_degree: usize) {
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j > max_degree {
                break;
            }
            if !bj.is_zero() {
                if acc.len() <= i + j {
                    acc.resize(i + j + 1, Rat::zero());
                }
                acc[i + j] += ai * bj;
            }
        }
    }
}

/// Expands `g sum_j y^j P_j / (1 - y^m w)` as a series in `x` whose
/// coefficients are polynomials in `y`, rows `0..=rows_max`.
pub fn bivariate_table(e: &MRiordanElement, rows_max: usize) -> Result<BivariateTable, GroupError> {
    check_terms(e, rows_max + 1)?;
    let m = e.m();
    let g = e.g();
    let numer_parts: Vec<Series> = partial_products(e).iter().map(|p| g * p).collect();
    let w = e.step_series();

    let numer: Vec<Poly> = (0..=rows_max)
        .map(|n| numer_parts.iter().map(|s| s.coeff(n).clone()).collect())
        .collect();
    // 1 - y^m w(x): constant 1 at x^0 because w has valuation m.
    let denom: Vec<Poly> = (0..=rows_max)
        .map(|n| {
            let mut p = vec![Rat::zero(); m + 1];
            if n == 0 {
                p[0] = Rat::one();
            }
            p[m] = -w.coeff(n).clone();
            p
        })
        .collect();

    let mut recip: Vec<Poly> = Vec::with_capacity(rows_max + 1);
    recip.push(vec![Rat::one()]);
    for n in 1..=rows_max {
        let mut acc = Poly::new();
        for k in 1..=n {
            poly_mul_acc(&mut acc, &denom[k], &recip[n - k], n);
        }
        recip.push(acc.into_iter().map(|c| -c).collect());
    }

    let rows = (0..=rows_max)
        .map(|n| {
            let mut acc = Poly::new();
            for k in 0..=n {
                poly_mul_acc(&mut acc, &numer[k], &recip[n - k], n);
            }
            acc.resize(n + 1, Rat::zero());
            acc
        })
        .collect();
    Ok(BivariateTable { rows })
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Every division is exact, so integer input stays integral throughout.
pub fn determinant(mut a: Vec<Vec<Rat>>) -> Rat {
    let n = a.len();
    if n == 0 {
        return Rat::one();
    }
    let mut negate = false;
    let mut prev = Rat::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Rat::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Term `n` is `det [s_{i+j}]_{0<=i,j<=n}`; a sequence of length `L` gives
/// `ceil(L/2)` terms.
pub fn hankel_transform(s: &IntSequence) -> IntSequence {
    let t = s.terms();
    let count = t.len().div_ceil(2);
    IntSequence::new(
        (0..count)
            .map(|n| determinant((0..=n).map(|i| t[i..=i + n].to_vec()).collect()))
            .collect(),
    )
}

/// Slot `j` collects the terms at indices `j, j+m, j+2m, ...`.
pub fn interleave_split(s: &IntSequence, m: usize) -> Vec<IntSequence> {
    assert!(m >= 1, "interleave modulus must be positive");
    (0..m)
        .map(|j| IntSequence::new(s.terms().iter().skip(j).step_by(m).cloned().collect()))
        .collect()
}

/// Inverse of [`interleave_split`]: reads the slots round-robin, stopping at
/// the first exhausted slot.
pub fn interleave(parts: &[IntSequence]) -> IntSequence {
    let mut out = Vec::new();
    if parts.is_empty() {
        return IntSequence::default();
    }
    for i in 0.. {
        match parts[i % parts.len()].terms().get(i / parts.len()) {
            Some(t) => out.push(t.clone()),
            None => break,
        }
    }
    IntSequence::new(out)
}

/// True when every term is `+1` or `-1`.
pub fn is_unit_sequence(s: &IntSequence) -> bool {
    s.terms().iter().all(|t| t.abs().is_one())
}
