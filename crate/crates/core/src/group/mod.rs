//! The m-Riordan group.
//!
//! An element is a tuple `(g, f_1, ..., f_m)` with `g` in `R[[x^m]]` and each
//! `f_i` in `x R[[x^m]]`. Its matrix has column generating functions
//! `g, g f_1, g f_1 f_2, ...`, cycling through the `f_i`.
//!
//! The group law involves `h = (f_1 ... f_m)^(1/m)`, but every series that
//! gets composed with `h` lies in `R[[x^m]]` or `x R[[x^m]]`, so only
//! `w = h^m` is ever needed. Products, inverses and the fundamental theorem
//! are computed on the compressed variable `t = x^m`:
//!
//! * `G(h) = G^(w)` where `G(x) = G^(x^m)`,
//! * `(f_i / h) F_i(h) = f_i F^_i(w)` where `F_i(x) = x F^_i(x^m)`,
//! * the inverse uses `w-bar = revert(w^)`, the compressed form of `h-bar^m`.
//!
//! [`direct`] keeps the textbook formulation with an explicit `h` as an
//! independent reference.
//!
//! Subgroup `B_i` is taken to be `{f_i = x g}` for every `i`. The usual
//! listing repeats the `B_1` condition for `B_3`; the uniform reading is the
//! one used here.

mod matrix;

pub mod direct;

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

pub use matrix::CoeffMatrix;

use crate::series::{BlockProfile, Series, SeriesError};

/// Names a slot of an element in error messages.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    G,
    /// 1-based index into `f`.
    F(usize),
    /// The series an element acts on.
    Argument,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::G => f.write_str("g"),
            Component::F(i) => write!(f, "f_{i}"),
            Component::Argument => f.write_str("argument"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("block modulus must be at least 1")]
    ZeroModulus,
    #[error("expected {m} series f_1..f_{m}, got {got}")]
    WrongArity { m: usize, got: usize },
    #[error("{component} has a nonzero coefficient at index {index}, outside its block profile")]
    BlockProfileViolation { component: Component, index: usize },
    #[error("{component} has a zero leading coefficient")]
    NonUnitLeadingCoefficient { component: Component },
    #[error("{component} has order {found}, expected {expected}")]
    MixedOrder { component: Component, expected: usize, found: usize },
    #[error("cannot combine elements with m = {left} and m = {right}")]
    MixedModulus { left: usize, right: usize },
    #[error("order {order} is too small: {needed} needed")]
    OrderTooSmall { order: usize, needed: usize },
    #[error("{component} must have zero constant term")]
    NonzeroConstantTerm { component: Component },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Subgroup and property labels reported by
/// [`MRiordanElement::classify_subgroups`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subgroup {
    /// `g = 1`.
    A,
    /// `f_i = x g` (1-based `i`).
    B(usize),
    /// All `f_i` equal: the element is an ordinary Riordan array.
    Classical,
    /// `g_0 = 1` and every `(f_i)_1 = 1`.
    Proper,
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subgroup::A => f.write_str("A"),
            Subgroup::B(i) => write!(f, "B_{i}"),
            Subgroup::Classical => f.write_str("Classical"),
            Subgroup::Proper => f.write_str("Proper"),
        }
    }
}

/// A validated element `(g, f_1, ..., f_m)`; all components share one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MRiordanElement {
    m: usize,
    g: Series,
    f: Vec<Series>,
}

/// Block-compressed form: `g(x) = g^(x^m)`, `f_i(x) = x f^_i(x^m)`.
struct Compressed {
    g: Series,
    f: Vec<Series>,
}

impl MRiordanElement {
    pub fn new(m: usize, g: Series, f: Vec<Series>) -> Result<Self, GroupError> {
        if m == 0 {
            return Err(GroupError::ZeroModulus);
        }
        if f.len() != m {
            return Err(GroupError::WrongArity { m, got: f.len() });
        }
        let order = g.order();
        if order == 0 {
            return Err(GroupError::OrderTooSmall { order, needed: 1 });
        }
        for (i, fi) in f.iter().enumerate() {
            if fi.order() != order {
                return Err(GroupError::MixedOrder {
                    component: Component::F(i + 1),
                    expected: order,
                    found: fi.order(),
                });
            }
        }
        if let Some(index) = BlockProfile::new(m, 0).first_violation(&g) {
            return Err(GroupError::BlockProfileViolation { component: Component::G, index });
        }
        for (i, fi) in f.iter().enumerate() {
            if let Some(index) = odd_block_violation(m, fi) {
                return Err(GroupError::BlockProfileViolation { component: Component::F(i + 1), index });
            }
        }
        if g.coeff(0).is_zero() {
            return Err(GroupError::NonUnitLeadingCoefficient { component: Component::G });
        }
        for (i, fi) in f.iter().enumerate() {
            if fi.coeff(1).is_zero() {
                return Err(GroupError::NonUnitLeadingCoefficient { component: Component::F(i + 1) });
            }
        }
        Ok(MRiordanElement { m, g, f })
    }

    /// The ordinary Riordan array `(g, f)`, i.e. `m = 1`.
    pub fn classical(g: Series, f: Series) -> Result<Self, GroupError> {
        Self::new(1, g, vec![f])
    }

    /// `(1, x, ..., x)`.
    pub fn identity(m: usize, order: usize) -> Result<Self, GroupError> {
        Self::new(m, Series::one(order), vec![Series::x(order); m])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn f(&self) -> &[Series] {
        &self.f
    }

    pub fn is_proper(&self) -> bool {
        self.g.coeff(0).is_one() && self.f.iter().all(|fi| fi.coeff(1).is_one())
    }

    pub fn is_identity(&self) -> bool {
        let n = self.order();
        self.g == Series::one(n) && self.f.iter().all(|fi| *fi == Series::x(n))
    }

    /// Every coefficient of every component is an integer.
    pub fn is_integral(&self) -> bool {
        self.g.is_integral() && self.f.iter().all(Series::is_integral)
    }

    fn compressed(&self) -> Compressed {
        Compressed {
            g: self.g.compress(self.m, 0).expect("validated block profile"),
            f: self
                .f
                .iter()
                .map(|fi| fi.shift_down(1).and_then(|q| q.compress(self.m, 0)).expect("validated block profile"))
                .collect(),
        }
    }

    fn from_compressed(m: usize, order: usize, c: Compressed) -> Result<Self, GroupError> {
        let g = c.g.aerate(m, 0).truncate(order);
        let f = c.f.iter().map(|fi| fi.aerate(m, 0).shift_up(1).truncate(order)).collect();
        Self::new(m, g, f)
    }

    /// `w^(t) = t f^_1(t) ... f^_m(t)`, the compressed form of `h^m`.
    fn compressed_step(c: &Compressed) -> Series {
        let product = c.f[1..].iter().fold(c.f[0].clone(), |acc, fi| &acc * fi);
        product.shift_up(1)
    }

    /// `w = f_1 f_2 ... f_m`, which is `h^m`.
    pub fn step_series(&self) -> Series {
        self.f[1..].iter().fold(self.f[0].clone(), |acc, fi| &acc * fi)
    }

    /// `h` itself, `x (f_1/x ... f_m/x)^(1/m)`, with rational coefficients.
    /// Needs `(f_1)_1 ... (f_m)_1 = 1`. Display only; no group operation
    /// goes through it.
    pub fn step_root(&self) -> Result<Series, GroupError> {
        let u = self.f.iter().try_fold(Series::one(self.order() - 1), |acc, fi| {
            Ok::<_, SeriesError>(&acc * &fi.shift_down(1)?)
        })?;
        Ok(u.nth_root_unit(self.m)?.shift_up(1))
    }

    /// The leading `rows x rows` block of the matrix.
    pub fn to_matrix(&self, rows: usize) -> Result<CoeffMatrix, GroupError> {
        if rows > self.order() + 1 {
            return Err(GroupError::OrderTooSmall { order: self.order(), needed: rows - 1 });
        }
        pattern_matrix(&self.g, &self.f, rows)
    }

    fn check_compatible(&self, other: &Self) -> Result<(), GroupError> {
        if self.m != other.m {
            return Err(GroupError::MixedModulus { left: self.m, right: other.m });
        }
        if self.order() != other.order() {
            return Err(GroupError::MixedOrder {
                component: Component::G,
                expected: self.order(),
                found: other.order(),
            });
        }
        Ok(())
    }

    /// `(g, f_i) . (G, F_i) = (g G(h), (f_i/h) F_i(h))`.
    pub fn product(&self, other: &Self) -> Result<Self, GroupError> {
        self.check_compatible(other)?;
        let a = self.compressed();
        let b = other.compressed();
        let w = Self::compressed_step(&a);
        let g = &a.g * &b.g.compose(&w)?;
        let f = a
            .f
            .iter()
            .zip(&b.f)
            .map(|(fa, fb)| Ok(fa * &fb.compose(&w)?))
            .collect::<Result<Vec<_>, SeriesError>>()?;
        Self::from_compressed(self.m, self.order(), Compressed { g, f })
    }

    /// `(1/g(h-bar), x h-bar / f_i(h-bar))`.
    pub fn inverse(&self) -> Result<Self, GroupError> {
        let c = self.compressed();
        let w_bar = Self::compressed_step(&c).revert()?;
        let g = c.g.compose(&w_bar)?.recip()?;
        let f = c
            .f
            .iter()
            .map(|fi| fi.compose(&w_bar)?.recip())
            .collect::<Result<Vec<_>, SeriesError>>()?;
        Self::from_compressed(self.m, self.order(), Compressed { g, f })
    }

    /// The fundamental theorem: the element acting on `series` (which must
    /// lie in `R[[x^m]]`) gives `g G(h)`, through the smaller of the two
    /// orders.
    pub fn apply_ftra(&self, series: &Series) -> Result<Series, GroupError> {
        if let Some(index) = BlockProfile::new(self.m, 0).first_violation(series) {
            return Err(GroupError::BlockProfileViolation { component: Component::Argument, index });
        }
        let c = self.compressed();
        let w = Self::compressed_step(&c);
        let big_g = series.compress(self.m, 0)?;
        let out = &c.g * &big_g.compose(&w)?;
        Ok(out.aerate(self.m, 0).truncate(self.order().min(series.order())))
    }

    /// Labels from `{A, B_i, Classical, Proper}`, tested through the order.
    pub fn classify_subgroups(&self) -> BTreeSet<Subgroup> {
        let n = self.order();
        let mut labels = BTreeSet::new();
        if self.g == Series::one(n) {
            labels.insert(Subgroup::A);
        }
        let xg = self.g.shift_up(1).truncate(n);
        for (i, fi) in self.f.iter().enumerate() {
            if *fi == xg {
                labels.insert(Subgroup::B(i + 1));
            }
        }
        if self.f.iter().all(|fi| *fi == self.f[0]) {
            labels.insert(Subgroup::Classical);
        }
        if self.is_proper() {
            labels.insert(Subgroup::Proper);
        }
        labels
    }

    /// Splits `(g, f_i)` as `(g, x, ..., x) . (1, f_1, ..., f_m)`.
    pub fn decompose_semidirect(&self) -> (Self, Self) {
        let n = self.order();
        let left = MRiordanElement { m: self.m, g: self.g.clone(), f: vec![Series::x(n); self.m] };
        let right = MRiordanElement { m: self.m, g: Series::one(n), f: self.f.clone() };
        (left, right)
    }
}

/// Index of the first coefficient keeping `f` out of `x R[[x^m]]`.
fn odd_block_violation(m: usize, f: &Series) -> Option<usize> {
    if !f.coeff(0).is_zero() {
        return Some(0);
    }
    let quotient = f.shift_down(1).expect("constant term is zero");
    BlockProfile::new(m, 0).first_violation(&quotient).map(|i| i + 1)
}

/// The matrix whose column `k` has generating function
/// `g f_1^{floor((k+m-1)/m)} ... f_m^{floor(k/m)}` with `m = f.len()`, built
/// column by column: column `k+1` is column `k` times `f_{(k mod m)+1}`.
///
/// The `f_i` need not be block-profiled, only divisible by `x`, and every
/// series must be known through `x^(rows-1)`.
pub fn pattern_matrix(g: &Series, f: &[Series], rows: usize) -> Result<CoeffMatrix, GroupError> {
    assert!(!f.is_empty(), "at least one column factor is required");
    if rows == 0 {
        return Ok(CoeffMatrix::from_rows(Vec::new()));
    }
    let top = rows - 1;
    let low = std::iter::once(g).chain(f).map(Series::order).min().unwrap_or(0);
    if low < top {
        return Err(GroupError::OrderTooSmall { order: low, needed: top });
    }
    for (i, fi) in f.iter().enumerate() {
        if !fi.coeff(0).is_zero() {
            return Err(GroupError::NonzeroConstantTerm { component: Component::F(i + 1) });
        }
    }
    let factors: Vec<Series> = f.iter().map(|fi| fi.truncate(top)).collect();
    let mut rows_out: Vec<Vec<_>> = (0..rows).map(|n| Vec::with_capacity(n + 1)).collect();
    let mut column = g.truncate(top);
    for k in 0..rows {
        for (n, row) in rows_out.iter_mut().enumerate().skip(k) {
            row.push(column.coeff(n).clone());
        }
        column = &column * &factors[k % factors.len()];
    }
    Ok(CoeffMatrix::from_rows(rows_out))
}
