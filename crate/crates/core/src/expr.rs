//! A small generating-function expression language.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' int)?
//! atom   := int | 'x' | ident | ident '(' expr ')' | '(' expr ')'
//! ```
//!
//! Exponents are integers, optionally signed (`x^-1` is rejected at
//! evaluation because `x` is not a unit; `(1-x)^-2` is fine). The reserved
//! identifiers are `x`, `sqrt` and `catalan`; any other identifier names a
//! let-binding supplied at evaluation time.
//!
//! Division by a series with zero constant term is accepted when the
//! numerator vanishes to at least the same power of `x`; both sides are
//! divided by that power first, so `(1 - 1/g)/x` means what it says.

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::series::{Rat, Series, SeriesError};

pub type Bindings = HashMap<String, Series>;

pub const RESERVED: [&str; 3] = ["x", "sqrt", "catalan"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Sqrt,
    Catalan,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Sqrt => "sqrt",
            Func::Catalan => "catalan",
        }
    }
}

#[derive(Debug, Clone)]
pub enum ExprKind {
    Int(BigInt),
    X,
    Var(String),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Call(Func, Box<Expr>),
}

/// A parsed expression. Equality is structural and ignores source spans.
#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Range<usize>,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        use ExprKind::*;
        match (&self.kind, &other.kind) {
            (Int(a), Int(b)) => a == b,
            (X, X) => true,
            (Var(a), Var(b)) => a == b,
            (Neg(a), Neg(b)) => a == b,
            (Binary(o1, a1, b1), Binary(o2, a2, b2)) => o1 == o2 && a1 == a2 && b1 == b2,
            (Pow(a, e1), Pow(b, e2)) => e1 == e2 && a == b,
            (Call(f1, a), Call(f2, b)) => f1 == f2 && a == b,
            _ => false,
        }
    }
}

impl Eq for Expr {}

/// Span-less constructors, mostly for building expected trees in tests.
impl Expr {
    pub fn new(kind: ExprKind) -> Self {
        Expr { kind, span: 0..0 }
    }

    pub fn int(n: i64) -> Self {
        Self::new(ExprKind::Int(BigInt::from(n)))
    }

    pub fn x() -> Self {
        Self::new(ExprKind::X)
    }

    pub fn var(name: &str) -> Self {
        Self::new(ExprKind::Var(name.to_string()))
    }

    pub fn negate(a: Expr) -> Self {
        Self::new(ExprKind::Neg(Box::new(a)))
    }

    pub fn binary(op: BinOp, a: Expr, b: Expr) -> Self {
        Self::new(ExprKind::Binary(op, Box::new(a), Box::new(b)))
    }

    pub fn pow(a: Expr, e: i64) -> Self {
        Self::new(ExprKind::Pow(Box::new(a), e))
    }

    pub fn call(f: Func, a: Expr) -> Self {
        Self::new(ExprKind::Call(f, Box::new(a)))
    }

    /// Binding names referenced anywhere in the tree, in first-use order.
    pub fn free_names(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_names(&mut out);
        out
    }

    fn collect_names<'a>(&'a self, out: &mut Vec<&'a str>) {
        match &self.kind {
            ExprKind::Var(name) => {
                if !out.contains(&name.as_str()) {
                    out.push(name);
                }
            }
            ExprKind::Neg(a) | ExprKind::Pow(a, _) | ExprKind::Call(_, a) => a.collect_names(out),
            ExprKind::Binary(_, a, b) => {
                a.collect_names(out);
                b.collect_names(out);
            }
            ExprKind::Int(_) | ExprKind::X => {}
        }
    }
}

/// Canonical, fully parenthesised form; parsing it gives back an equal tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Int(n) => write!(f, "{n}"),
            ExprKind::X => f.write_str("x"),
            ExprKind::Var(name) => f.write_str(name),
            ExprKind::Neg(a) => write!(f, "(-{a})"),
            ExprKind::Binary(op, a, b) => write!(f, "({a} {} {b})", op.symbol()),
            ExprKind::Pow(a, e) if matches!(a.kind, ExprKind::Pow(..)) => write!(f, "({a})^{e}"),
            ExprKind::Pow(a, e) => write!(f, "{a}^{e}"),
            ExprKind::Call(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown identifier '{name}' at byte {offset}")]
    UnknownIdentifier { name: String, offset: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "integer {n}"),
            Tok::Ident(s) => write!(f, "identifier '{s}'"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, Range<usize>)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = text[start..i].parse::<BigInt>().expect("digit run");
                out.push((Tok::Int(n), start..i));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start..i));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax {
                    offset: start,
                    message: format!("unexpected character '{ch}'"),
                });
            }
        };
        i += 1;
        out.push((tok, start..i));
    }
    out.push((Tok::End, text.len()..text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, Range<usize>)>,
    pos: usize,
    known: Option<&'a [&'a str]>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Range<usize> {
        self.toks[self.pos].1.clone()
    }

    fn bump(&mut self) -> (Tok, Range<usize>) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        ParseError::Syntax {
            offset: self.span().start,
            message: format!("expected {wanted}, found {}", self.peek()),
        }
    }

    fn expect(&mut self, tok: Tok, wanted: &str) -> Result<Range<usize>, ParseError> {
        if *self.peek() == tok {
            Ok(self.bump().1)
        } else {
            Err(self.unexpected(wanted))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            let span = lhs.span.start..rhs.span.end;
            lhs = Expr { kind: ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)), span };
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.factor()?;
            let span = lhs.span.start..rhs.span.end;
            lhs = Expr { kind: ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)), span };
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            let start = self.bump().1.start;
            let inner = self.factor()?;
            let span = start..inner.span.end;
            return Ok(Expr { kind: ExprKind::Neg(Box::new(inner)), span });
        }
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (exp, end) = self.exponent()?;
        let span = base.span.start..end;
        Ok(Expr { kind: ExprKind::Pow(Box::new(base), exp), span })
    }

    fn exponent(&mut self) -> Result<(i64, usize), ParseError> {
        let parenthesised = *self.peek() == Tok::LParen;
        if parenthesised {
            self.bump();
        }
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        let (tok, span) = self.bump();
        let Tok::Int(n) = tok else {
            return Err(ParseError::Syntax {
                offset: span.start,
                message: format!("expected integer exponent, found {tok}"),
            });
        };
        let n = if negative { -n } else { n };
        let value = n.to_i64().ok_or_else(|| ParseError::Syntax {
            offset: span.start,
            message: "exponent out of range".to_string(),
        })?;
        let end = if parenthesised { self.expect(Tok::RParen, "')'")?.end } else { span.end };
        Ok((value, end))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (tok, span) = self.bump();
        match tok {
            Tok::Int(n) => Ok(Expr { kind: ExprKind::Int(n), span }),
            Tok::LParen => {
                let inner = self.expr()?;
                let end = self.expect(Tok::RParen, "')'")?.end;
                Ok(Expr { kind: inner.kind, span: span.start..end })
            }
            Tok::Ident(name) => self.ident(name, span),
            other => Err(ParseError::Syntax {
                offset: span.start,
                message: format!("expected an operand, found {other}"),
            }),
        }
    }

    fn ident(&mut self, name: String, span: Range<usize>) -> Result<Expr, ParseError> {
        let func = match name.as_str() {
            "x" => return Ok(Expr { kind: ExprKind::X, span }),
            "sqrt" => Some(Func::Sqrt),
            "catalan" => Some(Func::Catalan),
            _ => None,
        };
        if let Some(func) = func {
            self.expect(Tok::LParen, &format!("'(' after {name}"))?;
            let arg = self.expr()?;
            let end = self.expect(Tok::RParen, "')'")?.end;
            return Ok(Expr { kind: ExprKind::Call(func, Box::new(arg)), span: span.start..end });
        }
        if *self.peek() == Tok::LParen {
            return Err(ParseError::UnknownIdentifier { name, offset: span.start });
        }
        if let Some(known) = self.known {
            if !known.contains(&name.as_str()) {
                return Err(ParseError::UnknownIdentifier { name, offset: span.start });
            }
        }
        Ok(Expr { kind: ExprKind::Var(name), span })
    }
}

fn parse_inner(text: &str, known: Option<&[&str]>) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0, known };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(e)
}

/// Parses `text`, treating every non-reserved identifier as a binding name.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    parse_inner(text, None)
}

/// Like [`parse`], but identifiers outside `names` are rejected.
pub fn parse_with_names(text: &str, names: &[&str]) -> Result<Expr, ParseError> {
    parse_inner(text, Some(names))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalErrorKind {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("no binding named '{0}'")]
    Unbound(String),
    #[error("catalan() needs an argument with zero constant term")]
    CatalanArgument,
    #[error("could only determine the result through x^{reached}, {requested} requested")]
    InsufficientOrder { requested: usize, reached: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} (at bytes {}..{})", span.start, span.end)]
pub struct EvalError {
    pub kind: EvalErrorKind,
    pub span: Range<usize>,
}

impl EvalError {
    fn at(span: &Range<usize>, kind: impl Into<EvalErrorKind>) -> Self {
        EvalError { kind: kind.into(), span: span.clone() }
    }
}

/// The Catalan series `c(x)` through `x^order`, from
/// `C_{n+1} = sum_{i=0}^{n} C_i C_{n-i}`.
pub fn catalan_series(order: usize) -> Series {
    let mut c: Vec<BigInt> = Vec::with_capacity(order + 1);
    c.push(BigInt::one());
    for n in 0..order {
        let next = (0..=n).fold(BigInt::zero(), |acc, i| acc + &c[i] * &c[n - i]);
        c.push(next);
    }
    Series::from_coeffs(c.into_iter().map(Rat::from_integer).collect())
}

/// Evaluates with literals expanded to `working` order. The result may be
/// of lower order: division by a non-unit costs one order per power of `x`
/// removed, and bindings contribute only the order they carry.
pub fn evaluate_at(expr: &Expr, bindings: &Bindings, working: usize) -> Result<Series, EvalError> {
    let sp = &expr.span;
    match &expr.kind {
        ExprKind::Int(n) => Ok(Series::constant(Rat::from_integer(n.clone()), working)),
        ExprKind::X => Ok(Series::x(working)),
        ExprKind::Var(name) => bindings
            .get(name)
            .map(|s| s.truncate(working))
            .ok_or_else(|| EvalError::at(sp, EvalErrorKind::Unbound(name.clone()))),
        ExprKind::Neg(a) => Ok(-evaluate_at(a, bindings, working)?),
        ExprKind::Binary(op, a, b) => {
            let a = evaluate_at(a, bindings, working)?;
            let b = evaluate_at(b, bindings, working)?;
            match op {
                BinOp::Add => Ok(&a + &b),
                BinOp::Sub => Ok(&a - &b),
                BinOp::Mul => Ok(&a * &b),
                BinOp::Div => divide(&a, &b).map_err(|e| EvalError::at(sp, e)),
            }
        }
        ExprKind::Pow(a, e) => {
            let a = evaluate_at(a, bindings, working)?;
            a.pow(*e).map_err(|e| EvalError::at(sp, e))
        }
        ExprKind::Call(func, a) => {
            let a = evaluate_at(a, bindings, working)?;
            match func {
                Func::Sqrt => a.sqrt_unit().map_err(|e| EvalError::at(sp, e)),
                Func::Catalan => {
                    if !a.coeff(0).is_zero() {
                        return Err(EvalError::at(sp, EvalErrorKind::CatalanArgument));
                    }
                    catalan_series(a.order()).compose(&a).map_err(|e| EvalError::at(sp, e))
                }
            }
        }
    }
}

fn divide(a: &Series, b: &Series) -> Result<Series, SeriesError> {
    match b.valuation() {
        Some(0) => a.div(b),
        None => Err(SeriesError::DivisionByNonUnit),
        Some(v) => a.shift_down(v)?.div(&b.shift_down(v)?),
    }
}

/// Evaluates `expr` to a series of exactly `order`.
///
/// When non-unit divisions eat into the precision, literals are re-expanded
/// at a higher working order until the result reaches `order`; bindings of
/// insufficient order make that impossible and produce `InsufficientOrder`.
pub fn evaluate(expr: &Expr, bindings: &Bindings, order: usize) -> Result<Series, EvalError> {
    let mut working = order;
    let mut best = None;
    loop {
        let s = evaluate_at(expr, bindings, working)?;
        if s.order() >= order {
            return Ok(s.truncate(order));
        }
        if best.is_some_and(|b| s.order() <= b) {
            return Err(EvalError::at(
                &expr.span,
                EvalErrorKind::InsufficientOrder { requested: order, reached: s.order() },
            ));
        }
        best = Some(s.order());
        working += order - s.order();
    }
}

/// Parses and evaluates in one step, with no bindings.
pub fn eval_str(text: &str, order: usize) -> Result<Series, crate::doc::DocError> {
    let e = parse_with_names(text, &[]).map_err(|error| crate::doc::DocError::Parse {
        field: "expression".to_string(),
        error,
    })?;
    evaluate(&e, &Bindings::new(), order).map_err(|error| crate::doc::DocError::Eval {
        field: "expression".to_string(),
        error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn ints(s: &Series) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.to_integer().to_i64().unwrap()).collect()
    }

    fn eval(text: &str, order: usize) -> Series {
        evaluate(&parse(text).unwrap(), &Bindings::new(), order).unwrap()
    }

    #[test]
    fn grammar_examples() {
        use BinOp::*;
        assert_eq!(
            parse("1/(1-x^3)").unwrap(),
            Expr::binary(Div, Expr::int(1), Expr::binary(Sub, Expr::int(1), Expr::pow(Expr::x(), 3)))
        );
        assert_eq!(
            parse("x*(1+x^3)").unwrap(),
            Expr::binary(Mul, Expr::x(), Expr::binary(Add, Expr::int(1), Expr::pow(Expr::x(), 3)))
        );
        assert_eq!(
            parse("catalan(-x^3)").unwrap(),
            Expr::call(Func::Catalan, Expr::negate(Expr::pow(Expr::x(), 3)))
        );
    }

    #[test]
    fn precedence_and_associativity() {
        use BinOp::*;
        // pow binds tighter than unary minus
        assert_eq!(parse("-x^2").unwrap(), Expr::negate(Expr::pow(Expr::x(), 2)));
        assert_eq!(
            parse("1-x-x").unwrap(),
            Expr::binary(Sub, Expr::binary(Sub, Expr::int(1), Expr::x()), Expr::x())
        );
        assert_eq!(
            parse("1/2*x").unwrap(),
            Expr::binary(Mul, Expr::binary(Div, Expr::int(1), Expr::int(2)), Expr::x())
        );
        assert_eq!(parse("(1-x)^-2").unwrap().to_string(), "(1 - x)^-2");
        assert_eq!(parse("(1-x)^(-2)").unwrap(), parse("(1-x)^-2").unwrap());
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        assert!(matches!(parse("1 + "), Err(ParseError::Syntax { offset: 4, .. })));
        assert!(matches!(parse("2x"), Err(ParseError::Syntax { offset: 1, .. })));
        assert!(matches!(parse("x^y"), Err(ParseError::Syntax { offset: 2, .. })));
        assert!(matches!(parse("(1+x"), Err(ParseError::Syntax { offset: 4, .. })));
        assert!(matches!(parse("1 # 2"), Err(ParseError::Syntax { offset: 2, .. })));
        assert!(matches!(parse("sqrt"), Err(ParseError::Syntax { offset: 4, .. })));
    }

    #[test]
    fn unknown_identifiers() {
        assert_eq!(
            parse("1 + exp(x)"),
            Err(ParseError::UnknownIdentifier { name: "exp".into(), offset: 4 })
        );
        assert_eq!(
            parse_with_names("g*h", &["g"]),
            Err(ParseError::UnknownIdentifier { name: "h".into(), offset: 2 })
        );
        assert!(parse_with_names("g*x", &["g"]).is_ok());
    }

    #[test]
    fn catalan_numbers() {
        assert_eq!(ints(&eval("catalan(x)", 6)), vec![1, 1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn catalan_functional_equation() {
        let n = 20;
        let c = catalan_series(n);
        let rhs = &Series::one(n) + &(&Series::x(n) * &(&c * &c));
        assert_eq!(c, rhs);
    }

    #[test]
    fn catalan_matches_closed_form_through_sqrt() {
        let closed = eval("(1 - sqrt(1-4*x))/(2*x)", 15);
        assert_eq!(closed, catalan_series(15));
    }

    #[test]
    fn geometric_in_x_cubed() {
        assert_eq!(ints(&eval("1/(1-x^3)", 9)), vec![1, 0, 0, 1, 0, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn division_by_powers_of_x_recovers_order() {
        // (1 - 1/g)/x with g = 1/(1-x) is exactly 1
        let mut b = Bindings::new();
        b.insert("g".into(), eval("1/(1-x)", 12));
        let e = parse("(1 - 1/g)/x").unwrap();
        assert!(evaluate(&e, &b, 12).is_err(), "a binding at order 12 cannot give order 12");
        b.insert("g".into(), eval("1/(1-x)", 13));
        assert_eq!(evaluate(&e, &b, 12).unwrap(), Series::one(12));
        // literals alone are re-expanded as needed
        assert_eq!(eval("(x^2 + x^3)/x^2", 5), Series::polynomial_ints(&[1, 1], 5));
    }

    #[test]
    fn evaluation_errors() {
        let err = evaluate(&parse("1/(x - x)").unwrap(), &Bindings::new(), 4).unwrap_err();
        assert_eq!(err.kind, EvalErrorKind::Series(SeriesError::DivisionByNonUnit));
        let err = evaluate(&parse("1 + x^-1").unwrap(), &Bindings::new(), 4).unwrap_err();
        assert_eq!(err.kind, EvalErrorKind::Series(SeriesError::DivisionByNonUnit));
        assert_eq!(err.span, 4..8);
        let err = evaluate(&parse("catalan(1+x)").unwrap(), &Bindings::new(), 4).unwrap_err();
        assert_eq!(err.kind, EvalErrorKind::CatalanArgument);
        let err = evaluate(&parse("sqrt(4+x)").unwrap(), &Bindings::new(), 4).unwrap_err();
        assert_eq!(err.kind, EvalErrorKind::Series(SeriesError::RootRequiresUnitConstant));
        let err = evaluate(&parse("g").unwrap(), &Bindings::new(), 4).unwrap_err();
        assert_eq!(err.kind, EvalErrorKind::Unbound("g".into()));
    }

    #[test]
    fn rational_literals() {
        let s = eval("1/3*x^3 - 2", 4);
        assert_eq!(s.coeff(0), &rat(-2));
        assert_eq!(s.coeff(3), &Rat::new(BigInt::from(1), BigInt::from(3)));
    }

    #[test]
    fn series_display_reparses_to_itself() {
        let s = eval("(1 + sqrt(1 - 4*x))/(3 - x^2)", 10);
        assert_eq!(eval(&s.to_string(), 10), s);
    }
}
