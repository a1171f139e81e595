//! Random element generators and naive oracles shared by the integration
//! tests. Not every test binary uses every helper.
#![allow(dead_code)]

use mriordan::seq::IntSequence;
use mriordan::{rat, CoeffMatrix, MRiordanElement, Rat, Series};
use num_traits::Zero;
use rand::Rng;

/// A random polynomial with constant term 1 and small integer coefficients.
fn unit_poly<R: Rng>(rng: &mut R, degree: usize, order: usize) -> Series {
    let mut coeffs = vec![1i64];
    coeffs.extend((0..degree).map(|_| rng.gen_range(-2..=2)));
    Series::polynomial_ints(&coeffs, order)
}

/// A random power series with constant term 1: a ratio of two small unit
/// polynomials, so most coefficients are nonzero.
pub fn random_unit_series<R: Rng>(rng: &mut R, order: usize) -> Series {
    let (dn, dd) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
    let num = unit_poly(rng, dn, order);
    let den = unit_poly(rng, dd, order);
    num.div(&den).expect("unit denominator")
}

/// A random proper integer element of modulus `m` at the given order:
/// `g = G(x^m)` and `f_i = x F_i(x^m)` with unit `G`, `F_i`.
pub fn random_proper_element<R: Rng>(rng: &mut R, m: usize, order: usize) -> MRiordanElement {
    let k = order / m + 1;
    let g = random_unit_series(rng, k).aerate(m, 0).truncate(order);
    let f = (0..m)
        .map(|_| random_unit_series(rng, k).aerate(m, 1).truncate(order))
        .collect();
    MRiordanElement::new(m, g, f).expect("generated element is valid")
}

/// Like [`random_proper_element`] but with random nonzero rational leading
/// coefficients, so the element is not proper. The leading coefficients of
/// the `f_i` multiply to 1, which keeps the m-th root of their product
/// rational for the explicit-root engine.
pub fn random_rational_element<R: Rng>(rng: &mut R, m: usize, order: usize) -> MRiordanElement {
    let scale = |rng: &mut R| {
        let num = rng.gen_range(1..=4) * if rng.gen_bool(0.5) { 1 } else { -1 };
        Rat::new(num.into(), rng.gen_range(1i64..=3).into())
    };
    let e = random_proper_element(rng, m, order);
    let g = e.g().scale(&scale(rng));
    let mut leads: Vec<Rat> = (1..m).map(|_| scale(rng)).collect();
    leads.push(leads.iter().fold(rat(1), |acc, c| acc / c));
    let f = e.f().iter().zip(&leads).map(|(fi, c)| fi.scale(c)).collect();
    MRiordanElement::new(m, g, f).expect("scaled element is valid")
}

/// Column `k` of the matrix built term by term: `g * f_1 * f_2 * ...`
/// cycling through the `f_i`, with no compression or closed form.
pub fn naive_matrix(g: &Series, f: &[Series], rows: usize) -> CoeffMatrix {
    let m = f.len();
    let mut column = g.clone();
    let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(rows);
    for k in 0..rows {
        cols.push(column.coeffs()[..rows].to_vec());
        column = &column * &f[k % m];
    }
    CoeffMatrix::from_rows((0..rows).map(|n| (0..=n).map(|k| cols[k][n].clone()).collect()).collect())
}

/// Compositional inverse by Lagrange inversion:
/// `[x^n] f^<-1> = (1/n) [x^(n-1)] (x/f)^n`.
pub fn lagrange_revert(f: &Series) -> Series {
    let order = f.order();
    let x_over_f = f.shift_down(1).expect("valuation 1").recip().expect("unit");
    let mut coeffs = vec![Rat::zero(); order + 1];
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        let p = x_over_f.pow(n as i64).expect("unit power");
        *c = p.coeff(n - 1) / rat(n as i64);
    }
    Series::from_coeffs(coeffs)
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(a: &[Vec<Rat>]) -> Rat {
    match a.len() {
        0 => rat(1),
        1 => a[0][0].clone(),
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<Rat>> = a[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = &a[0][j] * cofactor_det(&minor);
                if j % 2 == 0 { term } else { -term }
            })
            .sum(),
    }
}

/// Hankel determinants straight from the definition.
pub fn naive_hankel(s: &IntSequence) -> Vec<Rat> {
    let t = s.terms();
    (0..t.len().div_ceil(2))
        .map(|n| {
            let h: Vec<Vec<Rat>> = (0..=n).map(|i| (0..=n).map(|j| t[i + j].clone()).collect()).collect();
            cofactor_det(&h)
        })
        .collect()
}
