//! Reference engine that works in `x` directly with an explicit
//! `h = (f_1 ... f_m)^(1/m)`.
//!
//! Coefficients pass through rationals even for proper integer elements.
//! Requires `(f_1)_1 ... (f_m)_1 = 1` so that the root exists over the
//! rationals. Used to cross-check the compressed engine.

use super::{Component, GroupError, MRiordanElement};
use crate::series::{BlockProfile, Series};

fn check_compatible(a: &MRiordanElement, b: &MRiordanElement) -> Result<(), GroupError> {
    if a.m() != b.m() {
        return Err(GroupError::MixedModulus { left: a.m(), right: b.m() });
    }
    if a.order() != b.order() {
        return Err(GroupError::MixedOrder { component: Component::G, expected: a.order(), found: b.order() });
    }
    Ok(())
}

pub fn product(a: &MRiordanElement, b: &MRiordanElement) -> Result<MRiordanElement, GroupError> {
    check_compatible(a, b)?;
    let n = a.order();
    let h = a.step_root()?;
    let h_over_x = h.shift_down(1)?;
    let g = a.g() * &b.g().compose(&h)?;
    let mut f = Vec::with_capacity(a.m());
    for (fa, fb) in a.f().iter().zip(b.f()) {
        // (f_a / h) has a constant term and F_b(h) is divisible by x, so the
        // product is known one order beyond either factor.
        let ratio = fa.shift_down(1)?.div(&h_over_x)?;
        let outer = fb.compose(&h)?.shift_down(1)?;
        f.push((&ratio * &outer).shift_up(1).truncate(n));
    }
    MRiordanElement::new(a.m(), g, f)
}

pub fn inverse(e: &MRiordanElement) -> Result<MRiordanElement, GroupError> {
    let n = e.order();
    let h_bar = e.step_root()?.revert()?;
    let h_bar_over_x = h_bar.shift_down(1)?;
    let g = e.g().compose(&h_bar)?.recip()?;
    let mut f = Vec::with_capacity(e.m());
    for fi in e.f() {
        let denom = fi.compose(&h_bar)?.shift_down(1)?;
        f.push(h_bar_over_x.div(&denom)?.shift_up(1).truncate(n));
    }
    MRiordanElement::new(e.m(), g, f)
}

pub fn apply_ftra(e: &MRiordanElement, series: &Series) -> Result<Series, GroupError> {
    if let Some(index) = BlockProfile::new(e.m(), 0).first_violation(series) {
        return Err(GroupError::BlockProfileViolation { component: Component::Argument, index });
    }
    let h = e.step_root()?;
    Ok(e.g() * &series.compose(&h)?)
}
