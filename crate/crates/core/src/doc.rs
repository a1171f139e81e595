//! On-disk element descriptions.
//!
//! ```json
//! { "m": 3, "order": 30,
//!   "let": [{"name": "c", "expr": "catalan(-x^3)"}],
//!   "g": "c", "f": ["x*c", "x*(1-x^3*c)", "x/(1-x^3*c)"] }
//! ```
//!
//! Bindings are evaluated in order; each one sees the bindings before it.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::expr::{self, Bindings, EvalError, Expr, ParseError, RESERVED};
use crate::group::{GroupError, MRiordanElement};
use crate::series::Series;

/// Truncation order used when neither the document nor the caller sets one.
pub const DEFAULT_ORDER: usize = 60;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetBinding {
    pub name: String,
    pub expr: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementDoc {
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, rename = "let", skip_serializing_if = "Vec::is_empty")]
    pub bindings: Vec<LetBinding>,
    pub g: String,
    pub f: Vec<String>,
}

#[derive(Debug, Error)]
pub enum DocError {
    #[error("invalid element document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("in {field}: {error}")]
    Parse { field: String, error: ParseError },
    #[error("in {field}: {error}")]
    Eval { field: String, error: EvalError },
    #[error("binding name '{0}' is reserved or already defined")]
    BadBindingName(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

struct Parsed {
    bindings: Vec<(String, Expr)>,
    g: Expr,
    f: Vec<Expr>,
}

impl ElementDoc {
    pub fn from_json(text: &str) -> Result<Self, DocError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Writes each component as its truncated polynomial; evaluating the
    /// document at the same order reproduces the element exactly.
    pub fn from_element(e: &MRiordanElement) -> Self {
        ElementDoc {
            m: e.m(),
            order: Some(e.order()),
            bindings: Vec::new(),
            g: e.g().to_string(),
            f: e.f().iter().map(Series::to_string).collect(),
        }
    }

    fn parse(&self) -> Result<Parsed, DocError> {
        let mut names: Vec<&str> = Vec::new();
        let mut bindings = Vec::new();
        for b in &self.bindings {
            let field = format!("let {}", b.name);
            let e = expr::parse_with_names(&b.expr, &names).map_err(|error| DocError::Parse { field, error })?;
            let valid = b.name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && b.name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid || RESERVED.contains(&b.name.as_str()) || names.contains(&b.name.as_str()) {
                return Err(DocError::BadBindingName(b.name.clone()));
            }
            names.push(&b.name);
            bindings.push((b.name.clone(), e));
        }
        let g = expr::parse_with_names(&self.g, &names)
            .map_err(|error| DocError::Parse { field: "g".into(), error })?;
        let f = self
            .f
            .iter()
            .enumerate()
            .map(|(i, t)| {
                expr::parse_with_names(t, &names)
                    .map_err(|error| DocError::Parse { field: format!("f_{}", i + 1), error })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Parsed { bindings, g, f })
    }

    /// Evaluates every component to exactly `order` (the override, else the
    /// document's order, else [`DEFAULT_ORDER`]) and validates the element.
    pub fn evaluate(&self, order: Option<usize>) -> Result<MRiordanElement, DocError> {
        let order = order.or(self.order).unwrap_or(DEFAULT_ORDER);
        let parsed = self.parse()?;
        let (g, f) = evaluate_components(&parsed, order)?;
        Ok(MRiordanElement::new(self.m, g, f)?)
    }
}

/// Evaluates at increasing working orders until every component reaches
/// `order`; non-unit divisions inside bindings cost precision that only a
/// higher working order can restore.
fn evaluate_components(p: &Parsed, order: usize) -> Result<(Series, Vec<Series>), DocError> {
    let mut working = order;
    let mut best: Option<usize> = None;
    loop {
        let mut env = Bindings::new();
        for (name, e) in &p.bindings {
            let v = expr::evaluate_at(e, &env, working)
                .map_err(|error| DocError::Eval { field: format!("let {name}"), error })?;
            env.insert(name.clone(), v);
        }
        let g = expr::evaluate_at(&p.g, &env, working)
            .map_err(|error| DocError::Eval { field: "g".into(), error })?;
        let f = p
            .f
            .iter()
            .enumerate()
            .map(|(i, e)| {
                expr::evaluate_at(e, &env, working)
                    .map_err(|error| DocError::Eval { field: format!("f_{}", i + 1), error })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let reached = f.iter().map(Series::order).fold(g.order(), usize::min);
        if reached >= order {
            return Ok((g.truncate(order), f.iter().map(|s| s.truncate(order)).collect()));
        }
        if best.is_some_and(|b| reached <= b) {
            let error = EvalError {
                kind: expr::EvalErrorKind::InsufficientOrder { requested: order, reached },
                span: 0..0,
            };
            return Err(DocError::Eval { field: "element".into(), error });
        }
        best = Some(reached);
        working += order - reached;
    }
}

/// Evaluates standalone expressions with shared let-bindings, each to
/// exactly `order`. Used for series that are not group elements, such as
/// the column factors of a lattice-path array.
pub fn evaluate_series_set(
    bindings: &[LetBinding],
    exprs: &[&str],
    order: usize,
) -> Result<Vec<Series>, DocError> {
    let doc = ElementDoc {
        m: 1,
        order: Some(order),
        bindings: bindings.to_vec(),
        g: exprs.first().copied().unwrap_or("0").to_string(),
        f: exprs.iter().skip(1).map(|s| s.to_string()).collect(),
    };
    let parsed = doc.parse()?;
    let (g, mut f) = evaluate_components(&parsed, order)?;
    f.insert(0, g);
    f.truncate(exprs.len());
    Ok(f)
}
