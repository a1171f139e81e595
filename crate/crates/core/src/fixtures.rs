//! Built-in reproduction fixtures: the worked examples with their published
//! matrices and sequences, each as a named pass/fail check. The CLI's
//! `verify-paper` verb runs [`all`].

use std::fmt::Debug;

use crate::doc::{DocError, ElementDoc};
use crate::expr::eval_str;
use crate::group::{CoeffMatrix, MRiordanElement, Subgroup};
use crate::lattice::{self, GfClaim, LatticeSpec};
use crate::seq::{self, IntSequence};
use crate::series::{rat, Series};

pub const EXAMPLE1_JSON: &str = include_str!("../fixtures/example1.json");
pub const EXAMPLE1_INVERSE_JSON: &str = include_str!("../fixtures/example1_inverse.json");
pub const EXAMPLE2_JSON: &str = include_str!("../fixtures/example2.json");
pub const EXAMPLE2_INVERSE_JSON: &str = include_str!("../fixtures/example2_inverse.json");
pub const EXAMPLE3_JSON: &str = include_str!("../fixtures/example3.json");
pub const LATTICE_THREEFOLD_JSON: &str = include_str!("../fixtures/lattice_threefold.json");
pub const LATTICE_THREEFOLD_CLAIM_JSON: &str = include_str!("../fixtures/lattice_threefold_claim.json");
pub const LATTICE_A111373_JSON: &str = include_str!("../fixtures/lattice_a111373.json");

pub const EXAMPLE1_MATRIX: &[&[i64]] = &[
    &[1],
    &[0, 1],
    &[0, 0, 1],
    &[1, 0, 0, 1],
    &[0, 2, 0, 0, 1],
    &[0, 0, 3, 0, 0, 1],
    &[1, 0, 0, 2, 0, 0, 1],
    &[0, 3, 0, 0, 3, 0, 0, 1],
    &[0, 0, 5, 0, 0, 4, 0, 0, 1],
];

pub const EXAMPLE1_INVERSE_MATRIX: &[&[i64]] = &[
    &[1],
    &[0, 1],
    &[0, 0, 1],
    &[-1, 0, 0, 1],
    &[0, -2, 0, 0, 1],
    &[0, 0, -3, 0, 0, 1],
    &[1, 0, 0, -2, 0, 0, 1],
    &[0, 3, 0, 0, -3, 0, 0, 1],
    &[0, 0, 7, 0, 0, -4, 0, 0, 1],
];

pub const EXAMPLE2_MATRIX: &[&[i64]] = &[
    &[1],
    &[0, 1],
    &[0, 0, 1],
    &[1, 0, 0, 1],
    &[0, 2, 0, 0, 1],
    &[0, 0, 3, 0, 0, 1],
    &[0, 0, 0, 2, 0, 0, 1],
    &[0, 1, 0, 0, 3, 0, 0, 1],
    &[0, 0, 4, 0, 0, 4, 0, 0, 1],
];

pub const EXAMPLE2_INVERSE_MATRIX: &[&[i64]] = &[
    &[1],
    &[0, 1],
    &[0, 0, 1],
    &[-1, 0, 0, 1],
    &[0, -2, 0, 0, 1],
    &[0, 0, -3, 0, 0, 1],
    &[2, 0, 0, -2, 0, 0, 1],
    &[0, 5, 0, 0, -3, 0, 0, 1],
    &[0, 0, 8, 0, 0, -4, 0, 0, 1],
    &[-5, 0, 0, 5, 0, 0, -3, 0, 0, 1],
];

pub const EXAMPLE3_INVERSE_MATRIX: &[&[i64]] = &[
    &[1],
    &[0, 1],
    &[0, 0, 1],
    &[1, 0, 0, 1],
    &[0, 2, 0, 0, 1],
    &[0, 0, 3, 0, 0, 1],
    &[3, 0, 0, 4, 0, 0, 1],
    &[0, 5, 0, 0, 5, 0, 0, 1],
    &[0, 0, 12, 0, 0, 6, 0, 0, 1],
    &[12, 0, 0, 18, 0, 0, 7, 0, 0, 1],
];

/// Entries `(n, k, value)` where the displayed example 3 table is misprinted:
/// it shows 5 at (7, 1), but its own row sum 13 for row 7 forces 7, and both
/// the group inverse and the lattice count give 7.
pub const EXAMPLE3_INVERSE_MATRIX_CORRECTIONS: &[(usize, usize, i64)] = &[(7, 1, 7)];

/// The displayed example 3 table with [`EXAMPLE3_INVERSE_MATRIX_CORRECTIONS`]
/// applied.
pub fn example3_inverse_matrix_corrected() -> CoeffMatrix {
    let mut rows: Vec<Vec<i64>> = EXAMPLE3_INVERSE_MATRIX.iter().map(|r| r.to_vec()).collect();
    for &(n, k, v) in EXAMPLE3_INVERSE_MATRIX_CORRECTIONS {
        rows[n][k] = v;
    }
    let slices: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    CoeffMatrix::from_triangle_ints(&slices)
}

pub const LATTICE_THREEFOLD_MATRIX: &[&[i64]] = &[
    &[1],
    &[0, 1],
    &[1, 1, 1],
    &[1, 3, 1, 1],
    &[3, 5, 5, 1, 1],
    &[5, 13, 7, 6, 2, 1],
    &[13, 25, 24, 9, 9, 2, 1],
    &[25, 62, 41, 33, 20, 11, 2, 1],
    &[62, 128, 119, 61, 64, 24, 12, 3, 1],
    &[128, 309, 230, 183, 149, 87, 27, 16, 3, 1],
];

pub const EXAMPLE1_ROW_SUMS: &[i64] =
    &[1, 1, 1, 2, 3, 4, 4, 7, 10, 8, 15, 22, 16, 31, 46, 32, 63, 94, 64, 127, 190];
pub const EXAMPLE1_INVERSE_ROW_SUMS: &[i64] = &[1, 1, 1, 0, -1, -2, 0, 1, 4, 0, -1, -8];
pub const EXAMPLE2_ROW_SUMS: &[i64] =
    &[1, 1, 1, 2, 3, 4, 3, 5, 9, 5, 8, 17, 8, 13, 30, 13, 21, 51, 21, 34, 85];
pub const EXAMPLE2_INVERSE_ROW_SUMS: &[i64] = &[1, 1, 1, 0, -1, -2, 1, 3, 5, -2, -8, -14, 6, 24, 42];
pub const EXAMPLE3_INVERSE_ROW_SUMS: &[i64] =
    &[1, 1, 1, 2, 3, 4, 8, 13, 19, 38, 64, 98, 196, 337, 531, 1062, 1851];
pub const LATTICE_THREEFOLD_LEFT_FACTORS: &[i64] = &[1, 1, 3, 6, 15, 34, 83, 195, 474, 1133, 2756];

/// A named reproduction check.
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    check: fn() -> Result<(), String>,
}

impl Fixture {
    pub fn run(&self) -> Result<(), String> {
        (self.check)()
    }
}

/// Evaluates one of the bundled element documents at the given order.
pub fn load_element(json: &str, order: usize) -> Result<MRiordanElement, DocError> {
    ElementDoc::from_json(json)?.evaluate(Some(order))
}

/// The bundled lattice specs.
pub fn threefold_spec() -> LatticeSpec {
    LatticeSpec::from_json(LATTICE_THREEFOLD_JSON).expect("bundled lattice spec parses")
}

pub fn a111373_spec() -> LatticeSpec {
    LatticeSpec::from_json(LATTICE_A111373_JSON).expect("bundled lattice spec parses")
}

/// Every fixture, in a fixed order.
pub fn all() -> Vec<Fixture> {
    macro_rules! fixture {
        ($name:literal, $description:literal, $check:expr) => {
            Fixture { name: $name, description: $description, check: $check }
        };
    }
    vec![
        fixture!("catalan-series", "catalan(x) expands to 1, 1, 2, 5, 14, 42, 132", catalan_series),
        fixture!("identity-element", "(1, x, x, x) is the identity", identity_element),
        fixture!("example1-valid", "example 1 tuple is a valid proper element", example1_valid),
        fixture!("example1-step-series", "example 1 step series is x^3/(1-x^3)", example1_step_series),
        fixture!("example1-matrix", "example 1 matrix, 9 rows, entry for entry", example1_matrix),
        fixture!("example1-inverse", "example 1 inverse equals its closed form; product is the identity", example1_inverse),
        fixture!("example1-inverse-matrix", "example 1 inverse matrix, 9 rows", example1_inverse_matrix),
        fixture!("split-product", "(g, x, x, x)(1, f1, f2, f3) = (g, f1, f2, f3)", split_product),
        fixture!("example1-row-sums", "example 1 row sums and their 2^n, 2^(n+1)-1, 3*2^n-2 slots", example1_row_sums),
        fixture!("example1-inverse-row-sums", "example 1 inverse row sums interleave 0^n, (-1)^n, (-2)^n", example1_inverse_row_sums),
        fixture!("example1-ftra", "example 1 applied to (1-x^3)/(1+x^3) gives (1-2x^3)/(1-x^3)", example1_ftra),
        fixture!("example1-inverse-ftra", "example 1 inverse applied to (1-x^3)/(1+x^3)", example1_inverse_ftra),
        fixture!("example1-bivariate", "example 1 bivariate row 8 has y^2 -> 5, y^5 -> 4", example1_bivariate),
        fixture!("example2-matrix", "example 2 matrix, 9 rows, entry for entry", example2_matrix),
        fixture!("example2-row-sums", "example 2 row sums and their Fibonacci-type slots", example2_row_sums),
        fixture!("example2-ftra", "example 2 applied to (1+x^3)/(1-x^3)", example2_ftra),
        fixture!("example2-bivariate", "example 2 bivariate row 8 has y^2 -> 4", example2_bivariate),
        fixture!("example2-inverse", "example 2 inverse equals the Catalan closed form", example2_inverse),
        fixture!("example2-inverse-matrix", "example 2 inverse matrix, 10 rows", example2_inverse_matrix),
        fixture!("example2-inverse-row-sums", "example 2 inverse row sums", example2_inverse_row_sums),
        fixture!("example2-hankel", "Hankel transforms of the inverse row-sum slots: 1's, F(2n+1), 1's", example2_hankel),
        fixture!("catalan-hankel", "Hankel transform of the Catalan numbers is all 1's", catalan_hankel),
        fixture!("example3-classical", "(g, f, f, f) lies in every B_i and is classical", example3_classical),
        fixture!("example3-inverse-matrix", "example 3 inverse matrix, 10 rows (one misprint corrected via row sums)", example3_inverse_matrix),
        fixture!("example3-row-sums", "example 3 inverse row sums", example3_row_sums),
        fixture!("example3-lattice", "A111373 step rule counts the same matrix", example3_lattice),
        fixture!("lattice-matrix", "three-fold lattice counts, 10 rows", lattice_matrix),
        fixture!("lattice-left-factors", "three-fold lattice left factors", lattice_left_factors),
        fixture!("lattice-closed-forms", "closed-form g, f1, f2, f3 and left-factor GF through n = 20", lattice_closed_forms),
    ]
}

fn expect_eq<T: PartialEq + Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn fail(err: impl std::fmt::Display) -> String {
    err.to_string()
}

fn series(text: &str, order: usize) -> Result<Series, String> {
    eval_str(text, order).map_err(fail)
}

fn ints(s: &IntSequence) -> Result<Vec<i64>, String> {
    s.to_i64().ok_or_else(|| "sequence has non-integer or oversized terms".to_string())
}

fn check_matrix(e: &MRiordanElement, want: &[&[i64]]) -> Result<(), String> {
    let got = e.to_matrix(want.len()).map_err(fail)?;
    let want = CoeffMatrix::from_triangle_ints(want);
    for n in 0..want.size() {
        if got.row(n) != want.row(n) {
            return Err(format!("row {n} differs:\n{got}"));
        }
    }
    Ok(())
}

fn check_prefix(what: &str, got: &IntSequence, want: &[i64]) -> Result<(), String> {
    expect_eq(what, ints(&got.take(want.len()))?, want.to_vec())
}

fn catalan_series() -> Result<(), String> {
    expect_eq("catalan", series("catalan(x)", 6)?, Series::from_ints(&[1, 1, 2, 5, 14, 42, 132]))
}

fn identity_element() -> Result<(), String> {
    let e = MRiordanElement::new(3, Series::one(12), vec![Series::x(12); 3]).map_err(fail)?;
    expect_eq("is_identity", e.is_identity(), true)?;
    let ex1 = load_element(EXAMPLE1_JSON, 12).map_err(fail)?;
    expect_eq("e * id", ex1.product(&e).map_err(fail)?, ex1.clone())?;
    expect_eq("id * e", e.product(&ex1).map_err(fail)?, ex1)
}

fn example1_valid() -> Result<(), String> {
    let e = load_element(EXAMPLE1_JSON, 60).map_err(fail)?;
    expect_eq("proper", e.is_proper(), true)
}

fn example1_step_series() -> Result<(), String> {
    let e = load_element(EXAMPLE1_JSON, 30).map_err(fail)?;
    expect_eq("step series", e.step_series(), series("x^3/(1-x^3)", 30)?)
}

fn example1_matrix() -> Result<(), String> {
    check_matrix(&load_element(EXAMPLE1_JSON, 12).map_err(fail)?, EXAMPLE1_MATRIX)
}

fn example1_inverse() -> Result<(), String> {
    let e = load_element(EXAMPLE1_JSON, 30).map_err(fail)?;
    let closed = load_element(EXAMPLE1_INVERSE_JSON, 30).map_err(fail)?;
    let inv = e.inverse().map_err(fail)?;
    expect_eq("inverse", &inv, &closed)?;
    expect_eq("e * e^-1 is identity", e.product(&closed).map_err(fail)?.is_identity(), true)
}

fn example1_inverse_matrix() -> Result<(), String> {
    let inv = load_element(EXAMPLE1_JSON, 12).map_err(fail)?.inverse().map_err(fail)?;
    check_matrix(&inv, EXAMPLE1_INVERSE_MATRIX)
}

fn split_product() -> Result<(), String> {
    let e = load_element(EXAMPLE1_JSON, 24).map_err(fail)?;
    let left = MRiordanElement::new(3, e.g().clone(), vec![Series::x(24); 3]).map_err(fail)?;
    let right = MRiordanElement::new(3, Series::one(24), e.f().to_vec()).map_err(fail)?;
    expect_eq("(g,x,x,x)(1,f)", left.product(&right).map_err(fail)?, e)
}

/// Interleaves `m` closed-form slots into the first `len` terms.
fn slots(len: usize, m: usize, term: impl Fn(usize, i64) -> i64) -> Vec<i64> {
    (0..len).map(|i| term(i % m, (i / m) as i64)).collect()
}

fn example1_row_sums() -> Result<(), String> {
    let e = load_element(EXAMPLE1_JSON, 60).map_err(fail)?;
    let sums = seq::row_sums(&e, 21).map_err(fail)?;
    check_prefix("row sums", &sums, EXAMPLE1_ROW_SUMS)?;
    let parts = seq::interleave_split(&sums, 3);
    let pow2 = |n: i64| 1i64 << n;
    expect_eq("slot 0", ints(&parts[0])?, (0..7).map(pow2).collect())?;
    expect_eq("slot 1", ints(&parts[1])?, (0..7).map(|n| pow2(n + 1) - 1).collect())?;
    expect_eq("slot 2", ints(&parts[2])?, (0..7).map(|n| 3 * pow2(n) - 2).collect())
}

fn example1_inverse_row_sums() -> Result<(), String> {
    let inv = load_element(EXAMPLE1_INVERSE_JSON, 60).map_err(fail)?;
    let sums = seq::row_sums(&inv, 23).map_err(fail)?;
    check_prefix("printed terms", &sums, EXAMPLE1_INVERSE_ROW_SUMS)?;
    let want = slots(23, 3, |slot, n| match slot {
        0 => i64::from(n == 0),
        1 => (-1i64).pow(n as u32),
        _ => (-2i64).pow(n as u32),
    });
    expect_eq("23 terms", ints(&sums)?, want)
}

fn ftra_terms(e: &MRiordanElement, arg: &str, order: usize) -> Result<Series, String> {
    e.apply_ftra(&series(arg, order)?).map_err(fail)
}

fn example1_ftra() -> Result<(), String> {
    let e = load_element(EXAMPLE1_JSON, 20).map_err(fail)?;
    let got = ftra_terms(&e, "(1-x^3)/(1+x^3)", 20)?;
    expect_eq("series", &got, &series("(1-2*x^3)/(1-x^3)", 20)?)?;
    let want = slots(21, 3, |slot, n| match (slot, n) {
        (0, 0) => 1,
        (0, _) => -1,
        _ => 0,
    });
    expect_eq("coefficients", got.coeffs().to_vec(), want.into_iter().map(rat).collect())
}

fn example1_inverse_ftra() -> Result<(), String> {
    let inv = load_element(EXAMPLE1_INVERSE_JSON, 20).map_err(fail)?;
    let got = ftra_terms(&inv, "(1-x^3)/(1+x^3)", 20)?;
    expect_eq("series", &got, &series("1/((1+x^3)*(1+2*x^3))", 20)?)?;
    // 1/((1+t)(1+2t)) = sum (-1)^n (2^(n+1) - 1) t^n
    let want = slots(21, 3, |slot, n| if slot == 0 { (-1i64).pow(n as u32) * ((2i64 << n) - 1) } else { 0 });
    expect_eq("coefficients", got.coeffs().to_vec(), want.into_iter().map(rat).collect())
}

fn example1_bivariate() -> Result<(), String> {
    let e = load_element(EXAMPLE1_JSON, 12).map_err(fail)?;
    let table = seq::bivariate_table(&e, 8).map_err(fail)?;
    expect_eq("y^2", table.get(8, 2), rat(5))?;
    expect_eq("y^5", table.get(8, 5), rat(4))
}

fn example2_matrix() -> Result<(), String> {
    check_matrix(&load_element(EXAMPLE2_JSON, 12).map_err(fail)?, EXAMPLE2_MATRIX)
}

fn example2_row_sums() -> Result<(), String> {
    let e = load_element(EXAMPLE2_JSON, 60).map_err(fail)?;
    let sums = seq::row_sums(&e, 23).map_err(fail)?;
    check_prefix("printed terms", &sums, EXAMPLE2_ROW_SUMS)?;
    let fib = |n: i64| {
        let (mut a, mut b) = (0i64, 1i64);
        for _ in 0..n {
            (a, b) = (b, a + b);
        }
        a
    };
    let parts = seq::interleave_split(&sums, 3);
    expect_eq("slot 0", ints(&parts[0])?, (0..8).map(|n| fib(n + 2)).collect())?;
    let slot1: Vec<i64> = (0..8).map(|n| if n == 0 { 1 } else { fib(n + 3) }).collect();
    expect_eq("slot 1", ints(&parts[1])?, slot1)?;
    expect_eq("slot 2", ints(&parts[2])?, (0..7).map(|n| fib(n + 5) - 4).collect())
}

fn example2_ftra() -> Result<(), String> {
    let e = load_element(EXAMPLE2_JSON, 20).map_err(fail)?;
    expect_eq(
        "series",
        ftra_terms(&e, "(1+x^3)/(1-x^3)", 20)?,
        series("(1+x^3)*(1+x^3+x^6)/(1-x^3-x^6)", 20)?,
    )
}

fn example2_bivariate() -> Result<(), String> {
    let e = load_element(EXAMPLE2_JSON, 12).map_err(fail)?;
    expect_eq("y^2", seq::bivariate_table(&e, 8).map_err(fail)?.get(8, 2), rat(4))
}

fn example2_inverse() -> Result<(), String> {
    let e = load_element(EXAMPLE2_JSON, 30).map_err(fail)?;
    let closed = load_element(EXAMPLE2_INVERSE_JSON, 30).map_err(fail)?;
    expect_eq("inverse", e.inverse().map_err(fail)?, closed)
}

fn example2_inverse_matrix() -> Result<(), String> {
    let inv = load_element(EXAMPLE2_JSON, 12).map_err(fail)?.inverse().map_err(fail)?;
    check_matrix(&inv, EXAMPLE2_INVERSE_MATRIX)
}

fn example2_inverse_row_sums() -> Result<(), String> {
    let inv = load_element(EXAMPLE2_JSON, 60).map_err(fail)?.inverse().map_err(fail)?;
    let sums = seq::row_sums(&inv, 21).map_err(fail)?;
    check_prefix("printed terms", &sums, EXAMPLE2_INVERSE_ROW_SUMS)?;
    // signed Fine numbers, signed A000958, signed shifted Catalan numbers
    let fine = [1, 0, 1, 2, 6, 18, 57];
    let a958 = [1, 1, 3, 8, 24, 75, 243];
    let catalan = [1, 2, 5, 14, 42, 132, 429];
    let want = slots(21, 3, |slot, n| {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        sign * [fine, a958, catalan][slot][n as usize]
    });
    expect_eq("21 terms", ints(&sums)?, want)
}

fn example2_hankel() -> Result<(), String> {
    let inv = load_element(EXAMPLE2_JSON, 60).map_err(fail)?.inverse().map_err(fail)?;
    let sums = seq::row_sums(&inv, 27).map_err(fail)?;
    let parts = seq::interleave_split(&sums, 3);
    let hankel: Vec<Vec<i64>> = parts.iter().map(|p| ints(&seq::hankel_transform(p))).collect::<Result<_, _>>()?;
    expect_eq("slot 0", hankel[0].clone(), vec![1; 5])?;
    expect_eq("slot 1", hankel[1].clone(), vec![1, 2, 5, 13, 34])?;
    expect_eq("slot 2", hankel[2].clone(), vec![1; 5])
}

fn catalan_hankel() -> Result<(), String> {
    let h = seq::hankel_transform(&IntSequence::from_ints(&[1, 1, 2, 5, 14, 42, 132]));
    expect_eq("hankel", ints(&h)?, vec![1; 4])
}

fn example3_classical() -> Result<(), String> {
    use Subgroup::*;
    let e = load_element(EXAMPLE3_JSON, 12).map_err(fail)?;
    expect_eq("subgroups", e.classify_subgroups(), [B(1), B(2), B(3), Classical, Proper].into())
}

fn example3_inverse() -> Result<MRiordanElement, String> {
    load_element(EXAMPLE3_JSON, 60).map_err(fail)?.inverse().map_err(fail)
}

fn example3_inverse_matrix() -> Result<(), String> {
    let corrected = example3_inverse_matrix_corrected();
    let sums: Vec<_> = EXAMPLE3_INVERSE_ROW_SUMS[..corrected.size()].iter().map(|&v| rat(v)).collect();
    expect_eq("corrected table against printed row sums", corrected.row_sums(), sums)?;
    let got = example3_inverse()?.to_matrix(corrected.size()).map_err(fail)?;
    if got != corrected {
        return Err(format!("computed matrix differs:\n{got}"));
    }
    Ok(())
}

fn example3_row_sums() -> Result<(), String> {
    let sums = seq::row_sums(&example3_inverse()?, EXAMPLE3_INVERSE_ROW_SUMS.len()).map_err(fail)?;
    check_prefix("row sums", &sums, EXAMPLE3_INVERSE_ROW_SUMS)
}

fn example3_lattice() -> Result<(), String> {
    let spec = a111373_spec();
    expect_eq("counts", spec.count_table(10), example3_inverse_matrix_corrected())?;
    let factors = spec.left_factors(EXAMPLE3_INVERSE_ROW_SUMS.len());
    check_prefix("left factors", &factors, EXAMPLE3_INVERSE_ROW_SUMS)
}

fn lattice_matrix() -> Result<(), String> {
    expect_eq(
        "counts",
        threefold_spec().count_table(10),
        CoeffMatrix::from_triangle_ints(LATTICE_THREEFOLD_MATRIX),
    )
}

fn lattice_left_factors() -> Result<(), String> {
    let factors = threefold_spec().left_factors(LATTICE_THREEFOLD_LEFT_FACTORS.len());
    check_prefix("left factors", &factors, LATTICE_THREEFOLD_LEFT_FACTORS)
}

fn lattice_closed_forms() -> Result<(), String> {
    let claim = GfClaim::from_json(LATTICE_THREEFOLD_CLAIM_JSON).map_err(fail)?;
    let report = lattice::verify_against_gf(&threefold_spec(), &claim, 21, 6).map_err(fail)?;
    if report.is_match() {
        Ok(())
    } else {
        Err(format!("{report:?}"))
    }
}
