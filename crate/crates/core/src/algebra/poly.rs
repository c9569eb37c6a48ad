//! Sparse multivariate polynomials over ℚ(i).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gauss::GaussRational;
use super::monomial::{Monomial, Var, NVARS};
use crate::error::{Error, Result};

/// A polynomial in the global symbol table. No zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, GaussRational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(GaussRational::one())
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(GaussRational::from_int(n))
    }

    pub fn var(v: Var) -> Self {
        Self::term(GaussRational::one(), Monomial::var(v))
    }

    pub fn term(c: GaussRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, GaussRational)>>(it: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    /// Accumulates `c·m` in place.
    pub fn add_term(&mut self, m: Monomial, c: &GaussRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.constant_term().is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> GaussRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussRational::zero)
    }

    pub fn constant_term(&self) -> GaussRational {
        self.coeff(&Monomial::one())
    }

    /// Leading term in the printing (graded-lexicographic) order.
    pub fn leading(&self) -> Option<(&Monomial, &GaussRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> GaussRational {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(GaussRational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Lowest total degree of a term: the order of vanishing at the origin.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Variables that occur, in table order.
    pub fn variables(&self) -> Vec<Var> {
        let mut seen = [false; NVARS];
        for m in self.terms.keys() {
            for v in m.vars() {
                seen[v.index()] = true;
            }
        }
        Var::ALL.iter().copied().filter(|v| seen[v.index()]).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, deg: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == deg)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &GaussRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &GaussRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Result<MultiPoly> {
        if e < 0 {
            return Err(Error::NegativeExponent(e));
        }
        Ok(self.pow_u(e as u32))
    }

    pub fn pow_u(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, v: Var) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            let mut n = *m;
            n.0[v.index()] -= 1;
            out.add_term(n, &(c * &GaussRational::from_int(e as i64)));
        }
        out
    }

    /// Evaluates with every variable bound by `point` (unbound variables are an error).
    pub fn eval(&self, point: &[(Var, GaussRational)]) -> Result<GaussRational> {
        let p = self.eval_partial(point);
        if !p.is_constant() {
            return Err(Error::InvalidInput(format!(
                "evaluation leaves free variables in {p}"
            )));
        }
        Ok(p.constant_term())
    }

    /// Binds some variables to constants.
    pub fn eval_partial(&self, point: &[(Var, GaussRational)]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut n = *m;
            let mut coef = c.clone();
            for (v, val) in point {
                let e = n.0[v.index()];
                if e > 0 {
                    coef = &coef * &val.pow(e);
                    n.0[v.index()] = 0;
                }
            }
            out.add_term(n, &coef);
        }
        out
    }

    pub fn eval_at_origin(&self) -> GaussRational {
        self.constant_term()
    }

    /// Simultaneous polynomial substitution.
    pub fn compose(&self, bindings: &[(Var, MultiPoly)]) -> MultiPoly {
        let mut cache: Vec<Vec<MultiPoly>> = vec![Vec::new(); bindings.len()];
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut prod = MultiPoly::one();
            for (k, (v, q)) in bindings.iter().enumerate() {
                let e = rest.0[v.index()] as usize;
                if e == 0 {
                    continue;
                }
                rest.0[v.index()] = 0;
                let powers = &mut cache[k];
                if powers.is_empty() {
                    powers.push(MultiPoly::one());
                }
                while powers.len() <= e {
                    let next = &powers[powers.len() - 1] * q;
                    powers.push(next);
                }
                prod = &prod * &powers[e];
            }
            out = &out + &prod.mul_monomial(&rest, c);
        }
        out
    }

    /// Renames variables; the map must be injective on the variables present.
    pub fn rename(&self, map: &[(Var, Var)]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut n = Monomial::one();
            for v in Var::ALL {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                let target = map
                    .iter()
                    .find(|(from, _)| *from == v)
                    .map(|(_, to)| *to)
                    .unwrap_or(v);
                n.0[target.index()] += e;
            }
            out.add_term(n, c);
        }
        out
    }

    pub fn homogenize(&self, v: Var, deg: u32) -> Result<MultiPoly> {
        if self.contains_var(v) {
            return Err(Error::InvalidInput(format!(
                "{v} already occurs in {self}"
            )));
        }
        let actual = self.total_degree().unwrap_or(0);
        if deg < actual {
            return Err(Error::DegreeTooSmall {
                requested: deg,
                actual,
            });
        }
        Ok(MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(&Monomial::var_pow(v, deg - m.degree())), c.clone()))
                .collect(),
        })
    }

    pub fn dehomogenize(&self, v: Var) -> MultiPoly {
        self.eval_partial(&[(v, GaussRational::one())])
    }

    /// Coefficients as a polynomial in `v`: entry `k` multiplies `v^k`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MultiPoly> {
        let deg = self.degree_in(v).unwrap_or(0) as usize;
        let mut out = vec![MultiPoly::zero(); if self.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &self.terms {
            let mut n = *m;
            let e = n.0[v.index()] as usize;
            n.0[v.index()] = 0;
            out[e].add_term(n, c);
        }
        out
    }

    pub fn from_coefficients_in(v: Var, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                out.add_term(m.mul(&Monomial::var_pow(v, k as u32)), a);
            }
        }
        out
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn divide_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (dm, dc) = d.leading()?;
        let (dm, dc_inv) = (*dm, dc.inv()?);
        let mut rem = self.clone();
        let mut quo = MultiPoly::zero();
        while let Some((m, c)) = rem.leading() {
            let t = dm.quotient_of(m)?;
            let f = c * &dc_inv;
            rem = &rem - &d.mul_monomial(&t, &f);
            quo.add_term(t, &f);
        }
        Some(quo)
    }

    /// Divides by the grlex leading coefficient.
    pub fn monic(&self) -> MultiPoly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero")),
            None => MultiPoly::zero(),
        }
    }

    /// Positive rational `c` such that `self / c` has coprime Gaussian-integer
    /// coefficients.
    pub fn rational_content(&self) -> BigRational {
        use num_integer::Integer;
        let mut num = num_bigint::BigInt::zero();
        let mut den = num_bigint::BigInt::one();
        for c in self.terms.values() {
            let k = c.rational_content();
            num = num.gcd(k.numer());
            den = den.lcm(k.denom());
        }
        if num.is_zero() {
            return BigRational::one();
        }
        BigRational::new(num, den)
    }

    /// Scales by a positive rational so coefficients are coprime Gaussian integers.
    pub fn primitive_rational(&self) -> MultiPoly {
        let c = self.rational_content();
        self.scale(&GaussRational::real(c.recip()))
    }

    /// Keeps only terms with `exp(v) < bound` for each listed `(v, bound)`.
    pub fn truncate(&self, bounds: &[(Var, u32)]) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| bounds.iter().all(|(v, b)| m.exp(*v) < *b))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Lowest power of `v` dividing every term.
    pub fn valuation_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).min().unwrap_or(0)
    }

    /// Divides by `v^k`; every term must be divisible.
    pub fn shift_down(&self, v: Var, k: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut n = *m;
                    debug_assert!(n.0[v.index()] >= k);
                    n.0[v.index()] -= k;
                    (n, c.clone())
                })
                .collect(),
        }
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        let (mut big, small) = if self.len() >= o.len() {
            (self.clone(), o)
        } else {
            (o.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(*m, c);
        }
        big
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            for (n, d) in &o.terms {
                out.add_term(m.mul(n), &(c * d));
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, o: MultiPoly) -> MultiPoly {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, o: &MultiPoly) -> MultiPoly {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl From<GaussRational> for MultiPoly {
    fn from(c: GaussRational) -> Self {
        MultiPoly::constant(c)
    }
}

/// How a coefficient is printed in front of a monomial: sign and magnitude text.
fn coefficient_parts(c: &GaussRational) -> (bool, String) {
    if c.im.is_zero() {
        return (c.re.is_negative(), c.re.abs().to_string());
    }
    if c.re.is_zero() {
        let mag = GaussRational::new(BigRational::zero(), c.im.abs());
        return (c.im.is_negative(), mag.to_string());
    }
    (false, format!("({c})"))
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = coefficient_parts(c);
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
