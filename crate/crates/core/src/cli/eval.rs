//! Evaluation of parsed expressions into polynomials, 1-forms and Darboux data.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::ast::Expr;
use super::parser::{parse, parse_list};
use crate::algebra::{lcm, GaussRational, MultiPoly, RatFunc, Var};
use crate::error::{Error, Result};
use crate::foliation::AffineFoliation1Form;
use crate::integral::{DarbouxSpec, HolomorphicFactoredIntegral};

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Scalar(RatFunc),
    /// `Σ cᵥ dv`, sorted by variable, zero coefficients dropped.
    Form(Vec<(Var, RatFunc)>),
    Darboux(DarbouxSpec),
}

fn kind(v: &Value) -> &'static str {
    match v {
        Value::Scalar(_) => "function",
        Value::Form(_) => "1-form",
        Value::Darboux(_) => "Darboux product",
    }
}

fn mismatch(op: &str, a: &Value, b: &Value) -> Error {
    Error::InvalidInput(format!("cannot apply `{op}` to a {} and a {}", kind(a), kind(b)))
}

fn form_add(a: &[(Var, RatFunc)], b: &[(Var, RatFunc)], sign: i64) -> Vec<(Var, RatFunc)> {
    let mut out: Vec<(Var, RatFunc)> = a.to_vec();
    for (v, c) in b {
        let c = c.scale(&GaussRational::from_int(sign));
        match out.iter_mut().find(|(w, _)| w == v) {
            Some((_, d)) => *d = d.add(&c),
            None => out.push((*v, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out.sort_by_key(|(v, _)| *v);
    out
}

fn form_scale(a: &[(Var, RatFunc)], s: &RatFunc) -> Vec<(Var, RatFunc)> {
    let mut out: Vec<(Var, RatFunc)> = a.iter().map(|(v, c)| (*v, c.mul(s))).collect();
    out.retain(|(_, c)| !c.is_zero());
    out
}

fn as_darboux(v: Value) -> Result<DarbouxSpec> {
    match v {
        Value::Darboux(d) => Ok(d),
        Value::Scalar(r) => Ok(DarbouxSpec {
            factors: vec![(r, 1)],
            exp_part: None,
        }),
        Value::Form(_) => Err(Error::InvalidInput("a 1-form is not a Darboux product".into())),
    }
}

fn darboux_mul(a: DarbouxSpec, b: DarbouxSpec, sign: i64) -> DarbouxSpec {
    let mut factors = a.factors;
    factors.extend(b.factors.into_iter().map(|(r, l)| (r, sign * l)));
    let exp_part = match (a.exp_part, b.exp_part) {
        (None, None) => None,
        (Some(s), None) => Some(s),
        (None, Some(t)) => Some(t.scale(&GaussRational::from_int(sign))),
        (Some(s), Some(t)) => Some(s.add(&t.scale(&GaussRational::from_int(sign)))),
    };
    DarbouxSpec { factors, exp_part }
}

/// Evaluates an expression tree.
pub fn evaluate(e: &Expr) -> Result<Value> {
    Ok(match e {
        Expr::Num(n) => Value::Scalar(RatFunc::from_poly(MultiPoly::constant(GaussRational::real(
            BigRational::from_integer(BigInt::from(n.clone())),
        )))),
        Expr::I => Value::Scalar(RatFunc::from_poly(MultiPoly::constant(GaussRational::i()))),
        Expr::Var(v) => Value::Scalar(RatFunc::from_poly(MultiPoly::var(*v))),
        Expr::Diff(v) => Value::Form(vec![(*v, RatFunc::from_poly(MultiPoly::one()))]),
        Expr::Neg(a) => match evaluate(a)? {
            Value::Scalar(r) => Value::Scalar(r.neg()),
            Value::Form(f) => Value::Form(form_scale(&f, &RatFunc::from_poly(MultiPoly::int(-1)))),
            d @ Value::Darboux(_) => {
                return Err(Error::InvalidInput(format!("cannot negate a {}", kind(&d))))
            }
        },
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let sign = if matches!(e, Expr::Add(..)) { 1 } else { -1 };
            let op = if sign == 1 { "+" } else { "-" };
            match (evaluate(a)?, evaluate(b)?) {
                (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(if sign == 1 { x.add(&y) } else { x.sub(&y) }),
                (Value::Form(x), Value::Form(y)) => Value::Form(form_add(&x, &y, sign)),
                (Value::Scalar(x), Value::Form(y)) if x.is_zero() => Value::Form(form_add(&[], &y, sign)),
                (Value::Form(x), Value::Scalar(y)) if y.is_zero() => Value::Form(x),
                (x, y) => return Err(mismatch(op, &x, &y)),
            }
        }
        Expr::Mul(a, b) => match (evaluate(a)?, evaluate(b)?) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x.mul(&y)),
            (Value::Scalar(s), Value::Form(f)) | (Value::Form(f), Value::Scalar(s)) => Value::Form(form_scale(&f, &s)),
            (x @ Value::Form(_), y) | (x, y @ Value::Form(_)) => return Err(mismatch("*", &x, &y)),
            (x, y) => Value::Darboux(darboux_mul(as_darboux(x)?, as_darboux(y)?, 1)),
        },
        Expr::Div(a, b) => match (evaluate(a)?, evaluate(b)?) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x.div(&y)?),
            (Value::Form(f), Value::Scalar(s)) => Value::Form(form_scale(&f, &s.recip()?)),
            (x @ Value::Form(_), y) | (x, y @ Value::Form(_)) => return Err(mismatch("/", &x, &y)),
            (x, y) => Value::Darboux(darboux_mul(as_darboux(x)?, as_darboux(y)?, -1)),
        },
        Expr::Pow(a, k) => match evaluate(a)? {
            Value::Scalar(x) => Value::Scalar(x.pow(i64::from(*k))?),
            Value::Darboux(d) => Value::Darboux(DarbouxSpec {
                factors: d.factors.into_iter().map(|(r, l)| (r, l * i64::from(*k))).collect(),
                exp_part: d.exp_part.map(|s| s.scale(&GaussRational::from_int(i64::from(*k)))),
            }),
            f => return Err(Error::InvalidInput(format!("cannot raise a {} to a power", kind(&f)))),
        },
        Expr::Rat(p, q) => {
            let num = expect_scalar(evaluate(p)?)?;
            let den = expect_scalar(evaluate(q)?)?;
            Value::Darboux(DarbouxSpec {
                factors: vec![(num.div(&den)?, 1)],
                exp_part: None,
            })
        }
        Expr::Exp(s) => Value::Darboux(DarbouxSpec {
            factors: vec![],
            exp_part: Some(expect_scalar(evaluate(s)?)?),
        }),
    })
}

fn expect_scalar(v: Value) -> Result<RatFunc> {
    match v {
        Value::Scalar(r) => Ok(r),
        other => Err(Error::InvalidInput(format!("expected a function, found a {}", kind(&other)))),
    }
}

/// Parses a rational function.
pub fn parse_ratfunc(src: &str) -> Result<RatFunc> {
    expect_scalar(evaluate(&parse(src)?)?)
}

/// Parses a polynomial.
pub fn parse_poly(src: &str) -> Result<MultiPoly> {
    let r = parse_ratfunc(src)?;
    r.as_polynomial()
        .cloned()
        .ok_or_else(|| Error::InvalidInput(format!("`{src}` is not a polynomial")))
}

impl FromStr for MultiPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

impl FromStr for RatFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_ratfunc(s)
    }
}

/// Parses a Darboux product; a bare rational function is a single factor.
pub fn parse_darboux(src: &str) -> Result<DarbouxSpec> {
    as_darboux(evaluate(&parse(src)?)?)
}

const CHART_PAIRS: [(Var, Var, &str); 3] = [
    (Var::X, Var::Y, "Z3"),
    (Var::U, Var::W, "Z2"),
    (Var::S, Var::T, "Z1"),
];

/// Parses `A dx + B dy` (or the same shape in the chart pairs `u, w` and
/// `s, t`). Rational coefficients are cleared by a common denominator.
pub fn parse_one_form(src: &str) -> Result<AffineFoliation1Form> {
    let terms = match evaluate(&parse(src)?)? {
        Value::Form(f) => f,
        other => {
            return Err(Error::InvalidInput(format!(
                "expected a 1-form, found a {}",
                kind(&other)
            )))
        }
    };
    let mut used: Vec<Var> = terms.iter().map(|(v, _)| *v).collect();
    for (_, c) in &terms {
        used.extend(c.num().variables());
        used.extend(c.den().variables());
    }
    let (a_var, b_var, chart) = CHART_PAIRS
        .iter()
        .copied()
        .find(|(a, b, _)| used.iter().all(|v| v == a || v == b))
        .ok_or_else(|| {
            Error::InvalidInput("a 1-form must live in one of the pairs (x, y), (u, w), (s, t)".into())
        })?;
    let coeff = |v: Var| {
        terms
            .iter()
            .find(|(w, _)| *w == v)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(RatFunc::zero)
    };
    let (a, b) = (coeff(a_var), coeff(b_var));
    let den = lcm(a.den(), b.den());
    let clear = |r: &RatFunc| -> MultiPoly {
        let k = den.divide_exact(r.den()).expect("lcm is a multiple");
        r.num() * &k
    };
    AffineFoliation1Form::with_chart(clear(&a), clear(&b), (a_var, b_var), chart)
}

/// Parses a point such as `1, 1/2+i` or `(0, 0)` into exact coordinates.
pub fn parse_point(src: &str) -> Result<Vec<GaussRational>> {
    parse_list(src)?
        .iter()
        .map(|e| {
            let r = expect_scalar(evaluate(e)?)?;
            if !r.is_polynomial() || !r.num().is_constant() {
                return Err(Error::InvalidInput(format!("point coordinate `{e}` is not a number")));
            }
            Ok(r.num().constant_term())
        })
        .collect()
}

/// Parses `g1^l1, g2^l2, ...` into branches with multiplicities.
pub fn parse_factored_integral(src: &str) -> Result<HolomorphicFactoredIntegral> {
    let mut branches = Vec::new();
    for e in parse_list(src)? {
        let (base, l) = match e {
            Expr::Pow(base, l) => (*base, l),
            other => (other, 1),
        };
        let r = expect_scalar(evaluate(&base)?)?;
        let g = r
            .as_polynomial()
            .cloned()
            .ok_or_else(|| Error::InvalidInput(format!("branch `{base}` is not a polynomial")))?;
        branches.push((g, l));
    }
    HolomorphicFactoredIntegral::new(branches)
}
