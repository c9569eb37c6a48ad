//! Dense univariate polynomials over ℚ(i), used for elimination polynomials,
//! root extraction and power-series work.

use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::gauss::GaussRational;
use super::monomial::{Monomial, Var};
use super::poly::MultiPoly;
use crate::error::{Error, Result};

/// Coefficients in ascending degree; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<GaussRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<GaussRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::new(vec![GaussRational::one()])
    }

    /// `x - root`.
    pub fn linear(root: &GaussRational) -> Self {
        UniPoly::new(vec![-root, GaussRational::one()])
    }

    pub fn from_multi(p: &MultiPoly, v: Var) -> Result<Self> {
        let mut coeffs = vec![GaussRational::zero(); p.degree_in(v).unwrap_or(0) as usize + 1];
        for (m, c) in p.terms() {
            if m.vars().any(|u| u != v) {
                return Err(Error::InvalidInput(format!("{p} is not univariate in {v}")));
            }
            coeffs[m.exp(v) as usize] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn to_multi(&self, v: Var) -> MultiPoly {
        MultiPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::var_pow(v, k as u32), c.clone())),
        )
    }

    pub fn coeffs(&self) -> &[GaussRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussRational {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> GaussRational {
        self.coeffs.last().cloned().unwrap_or_else(GaussRational::zero)
    }

    pub fn eval(&self, x: &GaussRational) -> GaussRational {
        let mut acc = GaussRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_complex();
        }
        acc
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(|c| c.to_complex()).collect()
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|k| &self.coeff(k) - &o.coeff(k)).collect())
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![GaussRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &GaussRational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        self.scale(&self.leading().inv().expect("nonzero"))
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GaussRational::from_int(k as i64))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.leading().inv().expect("nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quo = vec![GaussRational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = &rem[k] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.coeffs.iter().enumerate() {
                let t = &c * b;
                rem[k - dd + j] -= &t;
            }
            quo[k - dd] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quo), UniPoly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Multiplicity of `root` as a zero.
    pub fn root_multiplicity(&self, root: &GaussRational) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = UniPoly::linear(root);
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = p.div_rem(&lin);
            if !r.is_zero() {
                return k;
            }
            p = q;
            k += 1;
        }
    }

    /// Order of vanishing at 0.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Drops the factor `x^k`.
    pub fn shift_down(&self, k: usize) -> UniPoly {
        UniPoly::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Coefficients of `1/self` as a power series, up to and including `x^n`.
    pub fn series_inverse(&self, n: usize) -> Result<Vec<GaussRational>> {
        let c0 = self
            .coeff(0)
            .inv()
            .ok_or_else(|| Error::InvalidInput("series inverse of a non-unit".into()))?;
        let mut inv = vec![GaussRational::zero(); n + 1];
        inv[0] = c0.clone();
        for k in 1..=n {
            let mut acc = GaussRational::zero();
            for j in 1..=k.min(self.coeffs.len().saturating_sub(1)) {
                acc += &(&self.coeffs[j] * &inv[k - j]);
            }
            inv[k] = -(&acc * &c0);
        }
        Ok(inv)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_multi(Var::X))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::test_support::p;

    fn u(s: &str) -> UniPoly {
        UniPoly::from_multi(&p(s), Var::X).unwrap()
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = u("(x - 1)^2*(x + 2)");
        let b = u("(x - 1)*(x - 3)");
        assert_eq!(a.gcd(&b), u("x - 1"));
        assert_eq!(a.squarefree_part(), u("(x - 1)*(x + 2)"));
        assert_eq!(a.root_multiplicity(&GaussRational::one()), 2);
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = u("x^5 + 3*x^2 - i*x + 7");
        let d = u("2*x^2 + x - 1");
        let (q, r) = a.div_rem(&d);
        assert_eq!(q.mul(&d).add(&r), a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn series_inverse_of_one_minus_x() {
        let inv = u("1 - x").series_inverse(4).unwrap();
        assert!(inv.iter().all(|c| c.is_one()));
        assert!(u("x").series_inverse(2).is_err());
    }
}
