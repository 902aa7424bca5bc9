//! Evaluation of parsed expressions against a ring.

use std::fmt;

use symfun::{BasisId, Coeff, Error as CoreError, ScalarProduct, SymElement, SymRing};

use crate::parse::{parse, BinOp, Expr, ExprKind, ParseError, Span};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Coeff),
    Element(SymElement),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    /// Bad input: syntax, unknown names, precondition violations.
    User,
    /// A broken engine invariant.
    Internal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalError {
    pub kind: ErrorKind,
    pub message: String,
    /// Source text of the failing subexpression, if any.
    pub snippet: Option<String>,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.snippet {
            Some(s) => write!(f, "{} (in `{s}`)", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for EvalError {}

impl From<ParseError> for EvalError {
    fn from(e: ParseError) -> Self {
        EvalError {
            kind: ErrorKind::User,
            message: e.to_string(),
            snippet: None,
        }
    }
}

/// Engine errors that can only come from a broken rule or a bug.
pub fn is_internal(e: &CoreError) -> bool {
    matches!(
        e,
        CoreError::Singular { .. }
            | CoreError::ZeroNorm(_)
            | CoreError::RuleBasisMismatch { .. }
            | CoreError::Inhomogeneous { .. }
    )
}

struct Evaluator<'a> {
    ring: &'a SymRing,
    src: &'a str,
}

type EvalResult<T> = Result<T, EvalError>;

impl Evaluator<'_> {
    fn fail(&self, span: Span, kind: ErrorKind, message: String) -> EvalError {
        EvalError {
            kind,
            message,
            snippet: Some(self.src[span.start..span.end].to_string()),
        }
    }

    fn user(&self, span: Span, message: impl Into<String>) -> EvalError {
        self.fail(span, ErrorKind::User, message.into())
    }

    fn core(&self, span: Span, e: CoreError) -> EvalError {
        let kind = if is_internal(&e) {
            ErrorKind::Internal
        } else {
            ErrorKind::User
        };
        self.fail(span, kind, e.to_string())
    }

    fn eval(&self, e: &Expr) -> EvalResult<Value> {
        let span = e.span;
        let ring = self.ring;
        let wrap = |r: Result<SymElement, CoreError>| r.map(Value::Element).map_err(|err| self.core(span, err));
        match &e.kind {
            ExprKind::Int(n) => Ok(Value::Scalar(Coeff::from_bigint(n.clone()))),
            ExprKind::Param('q') => Ok(Value::Scalar(Coeff::q())),
            ExprKind::Param(_) => Ok(Value::Scalar(Coeff::t())),
            ExprKind::Element { basis, parts } => wrap(ring.element(basis, parts.clone())),
            ExprKind::Neg(x) => Ok(match self.eval(x)? {
                Value::Scalar(c) => Value::Scalar(-c),
                Value::Element(f) => Value::Element(f.neg()),
            }),
            ExprKind::Pow(x, k) => match self.eval(x)? {
                Value::Scalar(c) => Ok(Value::Scalar(c.pow(*k))),
                Value::Element(f) => wrap(ring.pow(&f, *k)),
            },
            ExprKind::Binary(op, l, r) => {
                let (a, b) = (self.eval(l)?, self.eval(r)?);
                self.binary(span, op, a, b)
            }
            ExprKind::Call { name, args } => self.call(span, name, args),
        }
    }

    fn binary(&self, span: Span, op: &BinOp, a: Value, b: Value) -> EvalResult<Value> {
        use Value::{Element as E, Scalar as S};
        let ring = self.ring;
        let wrap = |r: Result<SymElement, CoreError>| r.map(E).map_err(|err| self.core(span, err));
        match (op, a, b) {
            (BinOp::Add, S(x), S(y)) => Ok(S(&x + &y)),
            (BinOp::Sub, S(x), S(y)) => Ok(S(&x - &y)),
            (BinOp::Mul, S(x), S(y)) => Ok(S(&x * &y)),
            (BinOp::Div, S(x), S(y)) => x.checked_div(&y).map(S).map_err(|err| self.core(span, err)),
            (BinOp::Mul, S(c), E(f)) | (BinOp::Mul, E(f), S(c)) => Ok(E(f.scale(&c))),
            (BinOp::Div, E(f), S(c)) => {
                let inv = c.inv().map_err(|err| self.core(span, err))?;
                Ok(E(f.scale(&inv)))
            }
            (BinOp::Div, _, E(_)) => Err(self.user(span, "cannot divide by a symmetric function")),
            (BinOp::Mul, E(f), E(g)) => wrap(ring.mul(&f, &g)),
            (BinOp::Add | BinOp::Sub, x, y) => {
                let basis = match (&x, &y) {
                    (E(f), _) => f.basis().clone(),
                    (_, E(g)) => g.basis().clone(),
                    _ => unreachable!("scalar pairs handled above"),
                };
                let (f, g) = (promote(x, &basis), promote(y, &basis));
                if *op == BinOp::Add {
                    wrap(ring.add(&f, &g))
                } else {
                    wrap(ring.sub(&f, &g))
                }
            }
        }
    }

    fn call(&self, span: Span, name: &str, args: &[Expr]) -> EvalResult<Value> {
        let ring = self.ring;
        let arity = |n: usize| {
            if args.len() == n {
                Ok(())
            } else {
                Err(self.user(span, format!("`{name}` takes {n} argument(s), got {}", args.len())))
            }
        };
        if let Some(target) = name.strip_prefix("to_") {
            arity(1)?;
            let target = ring.basis(target).map_err(|err| self.core(span, err))?;
            let f = promote(self.eval(&args[0])?, &target);
            return ring
                .convert(&f, &target)
                .map(Value::Element)
                .map_err(|err| self.core(span, err));
        }
        let sp = match name {
            "scalar" => Some(ScalarProduct::Hall),
            "scalar_t" => Some(ScalarProduct::HallT),
            "scalar_qt" => Some(ScalarProduct::HallQT),
            _ => None,
        };
        if let Some(sp) = sp {
            arity(2)?;
            let p = ring.power_sum_basis().map_err(|err| self.core(span, err))?.clone();
            let f = promote(self.eval(&args[0])?, &p);
            let g = promote(self.eval(&args[1])?, &p);
            return ring
                .scalar(&f, &g, sp)
                .map(Value::Scalar)
                .map_err(|err| self.core(span, err));
        }
        let op = ring
            .operator(name)
            .map_err(|_| self.user(span, format!("unknown function `{name}`")))?;
        arity(1)?;
        let f = promote(self.eval(&args[0])?, &op.basis);
        ring.apply_operator(name, &f)
            .map(Value::Element)
            .map_err(|err| self.core(span, err))
    }
}

/// A scalar `c` becomes `c * basis[]`.
pub fn promote(v: Value, basis: &BasisId) -> SymElement {
    match v {
        Value::Element(f) => f,
        Value::Scalar(c) => SymElement::term(basis.clone(), symfun::Partition::empty(), c),
    }
}

pub fn eval_expr(ring: &SymRing, src: &str, e: &Expr) -> EvalResult<Value> {
    Evaluator { ring, src }.eval(e)
}

/// Parse and evaluate `src`.
pub fn eval_str(ring: &SymRing, src: &str) -> EvalResult<Value> {
    let e = parse(src)?;
    eval_expr(ring, src, &e)
}

/// Parse and evaluate `src` as an element of `basis`, converting if needed.
pub fn eval_in(ring: &SymRing, src: &str, basis: &str) -> EvalResult<SymElement> {
    let to = ring.basis(basis).map_err(|e| EvalError {
        kind: ErrorKind::User,
        message: e.to_string(),
        snippet: None,
    })?;
    let f = promote(eval_str(ring, src)?, &to);
    ring.convert(&f, &to).map_err(|e| EvalError {
        kind: if is_internal(&e) { ErrorKind::Internal } else { ErrorKind::User },
        message: e.to_string(),
        snippet: Some(src.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(src: &str) -> String {
        match eval_str(symfun::shared_ring(), src).unwrap() {
            Value::Scalar(c) => c.to_string(),
            Value::Element(f) => f.to_string(),
        }
    }

    #[test]
    fn goldens() {
        assert_eq!(run("to_m(QP[2,1])"), "(t + 2)*m[1,1,1] + (t + 1)*m[2,1] + t*m[3]");
        assert_eq!(run("scalar(p[2,1], p[2,1])"), "2");
        assert_eq!(run("(1-t)*P[1]"), "(-t + 1)*P[1]");
    }

    #[test]
    fn scalars_mix_with_elements() {
        assert_eq!(run("s[1] + 1"), "s[] + s[1]");
        assert_eq!(run("t/(1-t)"), "-t/(t - 1)");
        assert_eq!(run("to_s(2)"), "2*s[]");
        assert_eq!(run("omega(h[2])"), run("to_p(e[2])"));
    }

    #[test]
    fn errors_quote_the_subexpression() {
        let err = eval_str(symfun::shared_ring(), "s[2] + 3*s[1,2]").unwrap_err();
        assert_eq!(err.kind, ErrorKind::User);
        assert!(err.message.contains("not a partition"));
        assert_eq!(err.snippet.as_deref(), Some("s[1,2]"));
        let err = eval_str(symfun::shared_ring(), "x[1] + s[1]").unwrap_err();
        assert!(err.message.contains("unknown basis"));
        let err = eval_str(symfun::shared_ring(), "s[1]/(1-1)").unwrap_err();
        assert_eq!(err.snippet.as_deref(), Some("s[1]/(1-1)"));
        assert!(eval_str(symfun::shared_ring(), "1/s[1]").is_err());
        assert!(eval_str(symfun::shared_ring(), "frob(s[1])").is_err());
        assert!(eval_str(symfun::shared_ring(), "to_m(s[1], s[2])").is_err());
    }

    #[test]
    fn broken_invariants_are_internal() {
        assert!(is_internal(&CoreError::ZeroNorm(symfun::Partition::empty())));
        assert!(is_internal(&CoreError::Singular { context: String::new() }));
        assert!(!is_internal(&CoreError::UnknownBasis("x".into())));
    }
}
