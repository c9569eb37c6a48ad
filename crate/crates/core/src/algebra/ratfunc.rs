//! Reduced rational functions `num / den`.

use std::fmt;

use num_traits::Zero;

use super::gauss::GaussRational;
use super::gcd::gcd;
use super::monomial::Var;
use super::poly::MultiPoly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    /// Reduces by the gcd and scales the denominator to a monic leading term.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator(format!("({num})/0")));
        }
        if num.is_zero() {
            return Ok(RatFunc::from_poly(MultiPoly::zero()));
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.divide_exact(&g).expect("gcd divides"),
                den.divide_exact(&g).expect("gcd divides"),
            )
        };
        let lc = den.leading_coeff().inv().expect("nonzero");
        Ok(RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RatFunc {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn into_parts(self) -> (MultiPoly, MultiPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&MultiPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone()).expect("nonzero den");
        }
        RatFunc::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
        .expect("nonzero den")
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero den")
    }

    pub fn div(&self, o: &RatFunc) -> Result<RatFunc> {
        if o.is_zero() {
            return Err(Error::ZeroDenominator(format!("division of {self} by zero")));
        }
        RatFunc::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn scale(&self, c: &GaussRational) -> RatFunc {
        RatFunc::new(self.num.scale(c), self.den.clone()).expect("nonzero den")
    }

    pub fn recip(&self) -> Result<RatFunc> {
        RatFunc::from_poly(MultiPoly::one()).div(self)
    }

    pub fn pow(&self, e: i64) -> Result<RatFunc> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Ok(RatFunc {
            num: base.num.pow_u(k),
            den: base.den.pow_u(k),
        })
    }

    pub fn derivative(&self, v: Var) -> RatFunc {
        let n = &(&self.num.derivative(v) * &self.den) - &(&self.num * &self.den.derivative(v));
        RatFunc::new(n, self.den.pow_u(2)).expect("nonzero den")
    }

    /// Simultaneous substitution of rational functions for variables.
    pub fn substitute(&self, bindings: &[(Var, RatFunc)]) -> Result<RatFunc> {
        let n = substitute(&self.num, bindings)?;
        let d = substitute(&self.den, bindings)?;
        if d.is_zero() {
            return Err(Error::ZeroDenominator(format!(
                "substitution sends the denominator {} to zero",
                self.den
            )));
        }
        n.div(&d)
    }
}

/// Substitutes rational functions into a polynomial, collecting one denominator.
pub fn substitute(p: &MultiPoly, bindings: &[(Var, RatFunc)]) -> Result<RatFunc> {
    // Clear each binding's denominator to the highest power of its variable in p.
    let mut num_bindings = Vec::with_capacity(bindings.len());
    let mut den = MultiPoly::one();
    let mut weights = Vec::with_capacity(bindings.len());
    for (v, r) in bindings {
        let e = p.degree_in(*v).unwrap_or(0);
        den = &den * &r.den.pow_u(e);
        num_bindings.push((*v, r.num.clone()));
        weights.push((*v, e, r.den.clone()));
    }
    let mut out = MultiPoly::zero();
    for (m, c) in p.terms() {
        let term = MultiPoly::term(c.clone(), *m);
        let mut filled = term.compose(&num_bindings);
        for (v, e, d) in &weights {
            let k = *e - m.exp(*v);
            if k > 0 {
                filled = &filled * &d.pow_u(k);
            }
        }
        out = &out + &filled;
    }
    RatFunc::new(out, den)
}

impl From<MultiPoly> for RatFunc {
    fn from(p: MultiPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &MultiPoly| {
            if p.len() > 1 {
                format!("({p})")
            } else {
                format!("{p}")
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(MultiPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl std::ops::Add for RatFunc {
    type Output = RatFunc;
    fn add(self, o: RatFunc) -> RatFunc {
        RatFunc::add(&self, &o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::test_support::p;

    fn r(n: &str, d: &str) -> RatFunc {
        RatFunc::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn reduction_and_normalization() {
        let f = r("2*x^2 - 2*y^2", "4*x + 4*y");
        assert_eq!(f.num(), &p("1/2*x - 1/2*y"));
        assert!(f.den().is_one());
        assert!(RatFunc::new(p("x"), MultiPoly::zero()).is_err());
    }

    #[test]
    fn substitution_examples() {
        let t_x = RatFunc::from_poly(p("t*x"));
        let out = substitute(&p("x^2 + y^2"), &[(Var::Y, t_x)]).unwrap();
        assert_eq!(out, RatFunc::from_poly(p("x^2 + t^2*x^2")));

        let out = substitute(&p("y - x^2"), &[(Var::X, RatFunc::from_poly(p("s*y")))]).unwrap();
        assert_eq!(out, RatFunc::from_poly(p("y - s^2*y^2")));

        let out = substitute(&p("x"), &[(Var::X, r("1", "u"))]).unwrap();
        assert_eq!(out, r("1", "u"));
    }

    #[test]
    fn zero_denominator_after_substitution() {
        let f = r("1", "x");
        let err = f.substitute(&[(Var::X, RatFunc::from_poly(MultiPoly::zero()))]);
        assert!(matches!(err, Err(Error::ZeroDenominator(_))));
    }

    #[test]
    fn quotient_rule() {
        let f = r("y", "x");
        assert_eq!(f.derivative(Var::X), r("-y", "x^2"));
    }

    #[test]
    fn printing() {
        assert_eq!(r("y^3 - 3*x^2", "3*x^3").to_string(), "(1/3*y^3 - x^2)/x^3");
        assert_eq!(r("y", "x").to_string(), "y/x");
    }
}
