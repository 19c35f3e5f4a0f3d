use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::complex::SimplicialComplex;
use crate::dyadic::Dyadic;
use crate::function::ConstructibleFunction;
use crate::simplex::Simplex;

/// Operators of the invariant-generating closure, in canonical enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Op {
    One,
    Add,
    Sub,
    Mul,
    HalfLink,
    Pop,
}

impl Op {
    pub fn name(self) -> &'static str {
        match self {
            Op::One => "ONE",
            Op::Add => "ADD",
            Op::Sub => "SUB",
            Op::Mul => "MUL",
            Op::HalfLink => "HALFLINK",
            Op::Pop => "POP",
        }
    }
}

/// An expression built from `1_L` with `+ - ×`, the half-link and `P`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    One,
    Add(Arc<Expr>, Arc<Expr>),
    Sub(Arc<Expr>, Arc<Expr>),
    Mul(Arc<Expr>, Arc<Expr>),
    HalfLink(Arc<Expr>),
    Pop(Arc<Expr>),
}

impl Expr {
    pub fn one() -> Arc<Expr> {
        Arc::new(Expr::One)
    }

    pub fn add(a: &Arc<Expr>, b: &Arc<Expr>) -> Arc<Expr> {
        Arc::new(Expr::Add(Arc::clone(a), Arc::clone(b)))
    }

    pub fn sub(a: &Arc<Expr>, b: &Arc<Expr>) -> Arc<Expr> {
        Arc::new(Expr::Sub(Arc::clone(a), Arc::clone(b)))
    }

    pub fn mul(a: &Arc<Expr>, b: &Arc<Expr>) -> Arc<Expr> {
        Arc::new(Expr::Mul(Arc::clone(a), Arc::clone(b)))
    }

    pub fn half_link(a: &Arc<Expr>) -> Arc<Expr> {
        Arc::new(Expr::HalfLink(Arc::clone(a)))
    }

    pub fn pop(a: &Arc<Expr>) -> Arc<Expr> {
        Arc::new(Expr::Pop(Arc::clone(a)))
    }

    pub fn op(&self) -> Op {
        match self {
            Expr::One => Op::One,
            Expr::Add(..) => Op::Add,
            Expr::Sub(..) => Op::Sub,
            Expr::Mul(..) => Op::Mul,
            Expr::HalfLink(_) => Op::HalfLink,
            Expr::Pop(_) => Op::Pop,
        }
    }

    /// Height of the tree; `ONE` has depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Expr::One => 0,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => 1 + a.depth().max(b.depth()),
            Expr::HalfLink(a) | Expr::Pop(a) => 1 + a.depth(),
        }
    }

    /// Number of nodes, counting shared subtrees once per occurrence.
    pub fn size(&self) -> usize {
        match self {
            Expr::One => 1,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => 1 + a.size() + b.size(),
            Expr::HalfLink(a) | Expr::Pop(a) => 1 + a.size(),
        }
    }

    /// Evaluates on `complex` starting from its indicator. The half-link is
    /// applied without a parity check, so fractional values propagate exactly.
    pub fn evaluate(&self, complex: &Arc<SimplicialComplex>) -> ConstructibleFunction {
        let one = ConstructibleFunction::one(Arc::clone(complex));
        self.eval_from(&one)
    }

    fn eval_from(&self, one: &ConstructibleFunction) -> ConstructibleFunction {
        let bin = |a: &Expr, b: &Expr, f: fn(&Dyadic, &Dyadic) -> Dyadic| {
            let (x, y) = (a.eval_from(one), b.eval_from(one));
            x.zip_unchecked(&y, f)
        };
        match self {
            Expr::One => one.clone(),
            Expr::Add(a, b) => bin(a, b, |x, y| x + y),
            Expr::Sub(a, b) => bin(a, b, |x, y| x - y),
            Expr::Mul(a, b) => bin(a, b, |x, y| x * y),
            Expr::HalfLink(a) => a.eval_from(one).half_link_unchecked(),
            Expr::Pop(a) => a.eval_from(one).p_operator(),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::One => f.write_str("ONE"),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                write!(f, "({} {} {})", self.op().name(), a, b)
            }
            Expr::HalfLink(a) | Expr::Pop(a) => write!(f, "({} {})", self.op().name(), a),
        }
    }
}

/// Failure to parse an s-expression such as `(MUL (HALFLINK ONE) ONE)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseExprError(pub String);

impl fmt::Display for ParseExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid expression: {}", self.0)
    }
}

impl core::error::Error for ParseExprError {}

impl FromStr for Expr {
    type Err = ParseExprError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let spaced = s.replace('(', " ( ").replace(')', " ) ");
        let tokens: Vec<&str> = spaced.split_whitespace().collect();
        let mut pos = 0;
        let e = parse_tokens(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(ParseExprError("trailing tokens".to_string()));
        }
        Ok(Arc::try_unwrap(e).unwrap_or_else(|a| (*a).clone()))
    }
}

fn parse_tokens(tokens: &[&str], pos: &mut usize) -> Result<Arc<Expr>, ParseExprError> {
    let err = |m: &str| ParseExprError(m.to_string());
    let tok = *tokens.get(*pos).ok_or_else(|| err("unexpected end"))?;
    *pos += 1;
    match tok {
        "ONE" => Ok(Expr::one()),
        "(" => {
            let head = *tokens.get(*pos).ok_or_else(|| err("unexpected end"))?;
            *pos += 1;
            let arity = match head {
                "ADD" | "SUB" | "MUL" => 2,
                "HALFLINK" | "POP" => 1,
                other => return Err(ParseExprError(alloc::format!("unknown operator {other}"))),
            };
            let mut args: Vec<Arc<Expr>> = Vec::with_capacity(arity);
            for _ in 0..arity {
                args.push(parse_tokens(tokens, pos)?);
            }
            if tokens.get(*pos) != Some(&")") {
                return Err(err("expected )"));
            }
            *pos += 1;
            let mut it = args.into_iter();
            let mut next = || it.next().unwrap();
            Ok(Arc::new(match head {
                "ADD" => Expr::Add(next(), next()),
                "SUB" => Expr::Sub(next(), next()),
                "MUL" => Expr::Mul(next(), next()),
                "HALFLINK" => Expr::HalfLink(next()),
                _ => Expr::Pop(next()),
            }))
        }
        other => Err(ParseExprError(alloc::format!("unexpected token {other}"))),
    }
}

/// What an expression's value violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    NonIntegerValue,
    OddEulerIntegral,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::NonIntegerValue => "non-integer value",
            ViolationKind::OddEulerIntegral => "odd Euler integral",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Location {
    Simplex(Simplex),
    Integral,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Simplex(s) => write!(f, "{s}"),
            Location::Integral => f.write_str("integral"),
        }
    }
}

/// An expression whose value on a link is fractional somewhere or has odd integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpressionWitness {
    pub expr: Arc<Expr>,
    pub violation: ViolationKind,
    pub location: Location,
    pub value: Dyadic,
}

impl ExpressionWitness {
    /// The violation carried by `f`, if any: the first fractional value in
    /// canonical order, otherwise an odd Euler integral.
    pub fn detect(expr: &Arc<Expr>, f: &ConstructibleFunction) -> Option<Self> {
        if let Some(i) = f.first_non_integer() {
            return Some(ExpressionWitness {
                expr: Arc::clone(expr),
                violation: ViolationKind::NonIntegerValue,
                location: Location::Simplex(f.complex().simplex_at(i).clone()),
                value: f.value_at(i).clone(),
            });
        }
        let integral = f.euler_integral();
        integral.is_odd_integer().then(|| ExpressionWitness {
            expr: Arc::clone(expr),
            violation: ViolationKind::OddEulerIntegral,
            location: Location::Integral,
            value: integral,
        })
    }

    /// Re-evaluates the expression on `link` and checks the same violation appears.
    pub fn replays_on(&self, link: &Arc<SimplicialComplex>) -> bool {
        let f = self.expr.evaluate(link);
        Self::detect(&self.expr, &f).as_ref() == Some(self)
    }
}

impl fmt::Display for ExpressionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} has {} {} at {}", self.expr, self.violation, self.value, self.location)
    }
}
