//! Truncated formal power series with exact rational coefficients.
//!
//! A [`Series`] of order `N` stores exactly the coefficients of `x^0..=x^N`.
//! Every operation documents the order of its result; nothing is ever
//! zero-extended past what the inputs determine.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact coefficient type used throughout the crate.
pub type Rat = BigRational;

/// Shorthand for an integral rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("division by a series with zero constant term")]
    DivisionByNonUnit,
    #[error("composition requires an inner series with zero constant term")]
    CompositionRequiresValuation,
    #[error("series is not revertible (valuation {valuation:?}, expected 1)")]
    NotRevertible { valuation: Option<usize> },
    #[error("root extraction requires constant term 1")]
    RootRequiresUnitConstant,
    #[error("coefficient at index {index} violates block profile (m = {m}, residue = {residue})")]
    BlockProfileViolation { m: usize, residue: usize, index: usize },
    #[error("cannot divide by x^{power}: coefficient at index {index} is nonzero")]
    NotDivisibleByPower { power: usize, index: usize },
    #[error("series of order {order} does not determine the coefficient at index {needed}")]
    OrderTooSmall { order: usize, needed: usize },
}

/// Membership in `x^residue R[[x^m]]`: every nonzero coefficient index `n`
/// satisfies `n mod m == residue`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockProfile {
    pub m: usize,
    pub residue: usize,
}

impl BlockProfile {
    pub fn new(m: usize, residue: usize) -> Self {
        assert!(m >= 1, "block modulus must be positive");
        assert!(residue < m, "residue {residue} out of range for modulus {m}");
        BlockProfile { m, residue }
    }

    /// First coefficient index that breaks the profile, if any.
    pub fn first_violation(&self, s: &Series) -> Option<usize> {
        s.coeffs
            .iter()
            .enumerate()
            .find(|(n, c)| n % self.m != self.residue && !c.is_zero())
            .map(|(n, _)| n)
    }

    pub fn admits(&self, s: &Series) -> bool {
        self.first_violation(s).is_none()
    }

    pub fn check(&self, s: &Series) -> Result<(), SeriesError> {
        match self.first_violation(s) {
            None => Ok(()),
            Some(index) => Err(SeriesError::BlockProfileViolation {
                m: self.m,
                residue: self.residue,
                index,
            }),
        }
    }
}

/// A power series known exactly through `x^order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rat>,
}

impl Series {
    /// Builds a series whose order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty coefficient list: a series always knows `x^0`.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        Series { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// The polynomial with the given coefficients, viewed as a series of the
    /// given order. Terms above `order` are dropped; missing terms are exact
    /// zeros because a polynomial has no further terms.
    pub fn polynomial(coeffs: &[Rat], order: usize) -> Self {
        let mut out = vec![Rat::zero(); order + 1];
        for (slot, c) in out.iter_mut().zip(coeffs) {
            *slot = c.clone();
        }
        Series { coeffs: out }
    }

    pub fn polynomial_ints(coeffs: &[i64], order: usize) -> Self {
        let coeffs: Vec<Rat> = coeffs.iter().map(|&c| rat(c)).collect();
        Self::polynomial(&coeffs, order)
    }

    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![Rat::zero(); order + 1] }
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rat::one(), order)
    }

    /// `c * x^power`, truncated to `order`.
    pub fn monomial(c: Rat, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(Rat::one(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^n`. Panics when `n` exceeds the order.
    pub fn coeff(&self, n: usize) -> &Rat {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    /// Drops every coefficient above `order`. Never extends.
    pub fn truncate(&self, order: usize) -> Series {
        let keep = order.min(self.order()) + 1;
        Series { coeffs: self.coeffs[..keep].to_vec() }
    }

    /// Index of the first nonzero coefficient, `None` for a series that is
    /// zero through its order.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Rat) -> Series {
        Series { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplication by `x^k`; the order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Series {
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// Exact division by `x^k`; the order shrinks by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Series, SeriesError> {
        if k > self.order() {
            return Err(SeriesError::OrderTooSmall { order: self.order(), needed: k });
        }
        if let Some(index) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(SeriesError::NotDivisibleByPower { power: k, index });
        }
        Ok(Series { coeffs: self.coeffs[k..].to_vec() })
    }

    /// Reciprocal via the standard recurrence `r_n = -(1/b_0) sum_{k=1}^n b_k r_{n-k}`.
    pub fn recip(&self) -> Result<Series, SeriesError> {
        let b0 = &self.coeffs[0];
        if b0.is_zero() {
            return Err(SeriesError::DivisionByNonUnit);
        }
        let inv0 = b0.recip();
        let n = self.order();
        let mut r: Vec<Rat> = Vec::with_capacity(n + 1);
        r.push(inv0.clone());
        for i in 1..=n {
            let mut acc = Rat::zero();
            for k in 1..=i {
                let bk = &self.coeffs[k];
                if !bk.is_zero() && !r[i - k].is_zero() {
                    acc += bk * &r[i - k];
                }
            }
            r.push(-(acc * &inv0));
        }
        Ok(Series { coeffs: r })
    }

    /// `self / divisor`, truncated to the smaller order.
    pub fn div(&self, divisor: &Series) -> Result<Series, SeriesError> {
        let n = self.order().min(divisor.order());
        Ok(&self.truncate(n) * &divisor.truncate(n).recip()?)
    }

    /// Integer power; negative exponents go through the reciprocal.
    pub fn pow(&self, exp: i64) -> Result<Series, SeriesError> {
        let base = if exp < 0 { self.recip()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut result = Series::one(base.order());
        let mut square = base;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &square;
            }
            e >>= 1;
            if e > 0 {
                square = &square * &square;
            }
        }
        Ok(result)
    }

    /// `self(inner(x))` by Horner's rule, correct through the smaller order.
    ///
    /// The partial sum that ends up multiplied by `inner^i` only matters
    /// through order `n - i*v` (`v` the valuation of `inner`), so each Horner
    /// step works at that reduced order.
    pub fn compose(&self, inner: &Series) -> Result<Series, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::CompositionRequiresValuation);
        }
        let n = self.order().min(inner.order());
        let Some(v) = inner.coeffs[..=n].iter().position(|c| !c.is_zero()) else {
            return Ok(Series::constant(self.coeffs[0].clone(), n));
        };
        let top = n / v;
        let mut acc = Series::constant(self.coeffs[top].clone(), n - top * v);
        for i in (0..top).rev() {
            let order = n - i * v;
            acc = Series { coeffs: mul_coeffs(&acc.coeffs, &inner.coeffs, order) };
            acc.coeffs[0] += &self.coeffs[i];
        }
        Ok(acc)
    }

    /// Formal derivative; the order drops by one (a constant maps to zero).
    pub fn derivative(&self) -> Series {
        if self.order() == 0 {
            return Series::zero(0);
        }
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        }
    }

    /// Compositional inverse by Newton iteration, doubling the number of
    /// correct coefficients per step.
    pub fn revert(&self) -> Result<Series, SeriesError> {
        let valuation = self.valuation();
        if valuation != Some(1) {
            return Err(SeriesError::NotRevertible { valuation });
        }
        let n = self.order();
        let mut g = Series::monomial(self.coeffs[1].recip(), 1, 1);
        let mut prec = 1;
        while prec < n {
            let q = (2 * prec).min(n);
            let f = self.truncate(q);
            let g_q = g.zero_pad(q);
            let residual = &f.compose(&g_q)? - &Series::x(q);
            // The residual vanishes through x^prec, so the top coefficient of
            // the derivative never reaches the quotient.
            let slope = f.derivative().compose(&g_q.truncate(q - 1))?.zero_pad(q);
            g = &g_q - &residual.div(&slope)?;
            prec = q;
        }
        Ok(g)
    }

    /// The unique `v` with `v_0 = 1` and `v^m = self`, via the recurrence for
    /// `u^(1/m)`.
    pub fn nth_root_unit(&self, m: usize) -> Result<Series, SeriesError> {
        assert!(m >= 1, "root index must be positive");
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::RootRequiresUnitConstant);
        }
        let alpha = Rat::new(BigInt::one(), BigInt::from(m));
        let alpha1 = &alpha + Rat::one();
        let n = self.order();
        let mut p: Vec<Rat> = Vec::with_capacity(n + 1);
        p.push(Rat::one());
        for i in 1..=n {
            let mut acc = Rat::zero();
            for k in 1..=i {
                let uk = &self.coeffs[k];
                if uk.is_zero() {
                    continue;
                }
                let weight = &alpha1 * rat(k as i64) - rat(i as i64);
                acc += weight * uk * &p[i - k];
            }
            p.push(acc / rat(i as i64));
        }
        Ok(Series { coeffs: p })
    }

    pub fn sqrt_unit(&self) -> Result<Series, SeriesError> {
        self.nth_root_unit(2)
    }

    /// Spreads coefficient `n` to index `m*n + shift`.
    ///
    /// The indices strictly between consecutive images are zero by
    /// construction, so the result is known through `m*(order+1) + shift - 1`.
    pub fn aerate(&self, m: usize, shift: usize) -> Series {
        assert!(m >= 1, "aeration modulus must be positive");
        let order = m * (self.order() + 1) + shift - 1;
        let mut out = Series::zero(order);
        for (n, c) in self.coeffs.iter().enumerate() {
            out.coeffs[m * n + shift] = c.clone();
        }
        out
    }

    /// Inverse of [`Series::aerate`]: coefficient `n` of the result is the
    /// coefficient of `x^(m*n + residue)` here.
    pub fn compress(&self, m: usize, residue: usize) -> Result<Series, SeriesError> {
        BlockProfile::new(m, residue).check(self)?;
        if self.order() < residue {
            return Err(SeriesError::OrderTooSmall { order: self.order(), needed: residue });
        }
        let k = (self.order() - residue) / m;
        Ok(Series {
            coeffs: (0..=k).map(|n| self.coeffs[m * n + residue].clone()).collect(),
        })
    }

    /// Appends zeros up to `order`. Internal only: callers must know the
    /// padded coefficients cannot influence the quantity being computed.
    fn zero_pad(&self, order: usize) -> Series {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order.max(self.order()) + 1, Rat::zero());
        Series { coeffs }
    }
}

impl<'a> Add<&'a Series> for &'a Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series { coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect() }
    }
}

impl<'a> Sub<&'a Series> for &'a Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series { coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect() }
    }
}

impl<'a> Mul<&'a Series> for &'a Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series { coeffs: mul_coeffs(&self.coeffs, &rhs.coeffs, n) }
    }
}

/// Coefficients `0..=order` of the product, reading missing coefficients of
/// either factor as zero. Integral inputs are convolved over `BigInt`, which
/// skips the gcd normalisation of every intermediate rational.
fn mul_coeffs(a: &[Rat], b: &[Rat], order: usize) -> Vec<Rat> {
    let a = &a[..a.len().min(order + 1)];
    let b = &b[..b.len().min(order + 1)];
    if a.iter().chain(b).all(Rat::is_integer) {
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, x) in a.iter().enumerate() {
            let x = x.numer();
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().take(order + 1 - i).enumerate() {
                let y = y.numer();
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        return out.into_iter().map(Rat::from_integer).collect();
    }
    let mut out = vec![Rat::zero(); order + 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().take(order + 1 - i).enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Series> for Series {
            type Output = Series;

            fn $method(self, rhs: Series) -> Series {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Series {
    type Output = Series;

    fn neg(self) -> Series {
        -&self
    }
}

/// Prints the truncated polynomial in the expression grammar, so the text
/// evaluated at the same order reproduces the series exactly.
impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, magnitude.is_one()) {
                (0, _) => write!(f, "{magnitude}")?,
                (_, true) => write_power(f, k)?,
                (_, false) => {
                    write!(f, "{magnitude}*")?;
                    write_power(f, k)?;
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, k: usize) -> fmt::Result {
    if k == 1 {
        f.write_str("x")
    } else {
        write!(f, "x^{k}")
    }
}
