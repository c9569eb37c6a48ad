//! Polynomials in variables and their formal conjugates.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gauss::GaussRational;
use super::monomial::{Monomial, Var, NVARS};
use super::poly::MultiPoly;

/// A monomial `z^hol · conj(z)^anti`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MixedMonomial {
    pub hol: Monomial,
    pub anti: Monomial,
}

impl MixedMonomial {
    fn degree(&self) -> u32 {
        self.hol.degree() + self.anti.degree()
    }

    fn swapped(&self) -> MixedMonomial {
        MixedMonomial {
            hol: self.anti,
            anti: self.hol,
        }
    }

    fn mul(&self, o: &MixedMonomial) -> MixedMonomial {
        MixedMonomial {
            hol: self.hol.mul(&o.hol),
            anti: self.anti.mul(&o.anti),
        }
    }
}

impl Ord for MixedMonomial {
    /// Graded lexicographic over the interleaved order `x, conj(x), y, conj(y), …`.
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| {
            (0..NVARS)
                .map(|i| {
                    self.hol.0[i]
                        .cmp(&o.hol.0[i])
                        .then(self.anti.0[i].cmp(&o.anti.0[i]))
                })
                .find(|c| *c != Ordering::Equal)
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for MixedMonomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for MixedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for v in Var::ALL {
            match self.hol.exp(v) {
                0 => {}
                1 => parts.push(v.to_string()),
                e => parts.push(format!("{v}^{e}")),
            }
            match self.anti.exp(v) {
                0 => {}
                1 => parts.push(format!("conj({v})")),
                e => parts.push(format!("conj({v})^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct MixedPoly {
    terms: BTreeMap<MixedMonomial, GaussRational>,
}

impl MixedPoly {
    pub fn zero() -> Self {
        MixedPoly::default()
    }

    pub fn from_holomorphic(p: &MultiPoly) -> Self {
        MixedPoly {
            terms: p
                .terms()
                .map(|(m, c)| {
                    (
                        MixedMonomial {
                            hol: *m,
                            anti: Monomial::one(),
                        },
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Formal conjugate of a holomorphic polynomial: conjugated coefficients
    /// over the conjugate variable block.
    pub fn conjugate_of(p: &MultiPoly) -> Self {
        MixedPoly::from_holomorphic(p).swap_conjugate()
    }

    fn add_term(&mut self, m: MixedMonomial, c: &GaussRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(GaussRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MixedMonomial, &GaussRational)> {
        self.terms.iter().rev()
    }

    pub fn add(&self, o: &MixedPoly) -> MixedPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, o: &MixedPoly) -> MixedPoly {
        self.add(&o.scale(&GaussRational::from_int(-1)))
    }

    pub fn mul(&self, o: &MixedPoly) -> MixedPoly {
        let mut out = MixedPoly::zero();
        for (m, c) in &self.terms {
            for (n, d) in &o.terms {
                out.add_term(m.mul(n), &(c * d));
            }
        }
        out
    }

    pub fn scale(&self, c: &GaussRational) -> MixedPoly {
        let mut out = MixedPoly::zero();
        for (m, a) in &self.terms {
            out.add_term(*m, &(a * c));
        }
        out
    }

    /// Swaps the variable blocks and conjugates every coefficient.
    pub fn swap_conjugate(&self) -> MixedPoly {
        MixedPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.swapped(), c.conj()))
                .collect(),
        }
    }

    /// Real-valued on the diagonal `conj(z) = z̄`: invariant under [`swap_conjugate`](Self::swap_conjugate).
    pub fn is_real(&self) -> bool {
        self.swap_conjugate() == *self
    }

    pub fn is_anti_real(&self) -> bool {
        self.swap_conjugate() == self.scale(&GaussRational::from_int(-1))
    }

    /// Treats `v` as a real parameter: `conj(v)` is replaced by `v`.
    pub fn identify_real(&self, v: Var) -> MixedPoly {
        let mut out = MixedPoly::zero();
        for (m, c) in &self.terms {
            let mut n = *m;
            n.hol.0[v.index()] += n.anti.0[v.index()];
            n.anti.0[v.index()] = 0;
            out.add_term(n, c);
        }
        out
    }

    /// Substitutes `v ↦ q` and, consistently, `conj(v) ↦ conj(q)`.
    pub fn substitute(&self, v: Var, q: &MultiPoly) -> MixedPoly {
        let hol_q = MixedPoly::from_holomorphic(q);
        let anti_q = MixedPoly::conjugate_of(q);
        let mut out = MixedPoly::zero();
        for (m, c) in &self.terms {
            let mut n = *m;
            let (eh, ea) = (n.hol.0[v.index()], n.anti.0[v.index()]);
            n.hol.0[v.index()] = 0;
            n.anti.0[v.index()] = 0;
            let mut t = MixedPoly::zero();
            t.add_term(n, c);
            for _ in 0..eh {
                t = t.mul(&hol_q);
            }
            for _ in 0..ea {
                t = t.mul(&anti_q);
            }
            out = out.add(&t);
        }
        out
    }

    pub fn leading_coeff(&self) -> GaussRational {
        self.terms
            .iter()
            .next_back()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(GaussRational::zero)
    }

    /// Scales by a nonzero real rational so the first nonzero component of the
    /// leading coefficient is 1. Preserves both reality and anti-reality.
    pub fn normalize_real_scale(&self) -> MixedPoly {
        let lc = self.leading_coeff();
        let s: BigRational = if !lc.re.is_zero() {
            lc.re.clone()
        } else if !lc.im.is_zero() {
            lc.im.clone()
        } else {
            return self.clone();
        };
        self.scale(&GaussRational::real(s.recip()))
    }
}

impl fmt::Display for MixedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let (neg, mag) = if c.im.is_zero() {
                (c.re.is_negative(), c.re.abs().to_string())
            } else if c.re.is_zero() {
                (
                    c.im.is_negative(),
                    GaussRational::new(BigRational::zero(), c.im.abs()).to_string(),
                )
            } else {
                (false, format!("({c})"))
            };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = m.hol.is_one() && m.anti.is_one();
            if unit {
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

impl fmt::Debug for MixedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl One for MixedPoly {
    fn one() -> Self {
        MixedPoly::from_holomorphic(&MultiPoly::one())
    }
}

impl std::ops::Mul for MixedPoly {
    type Output = MixedPoly;
    fn mul(self, o: MixedPoly) -> MixedPoly {
        MixedPoly::mul(&self, &o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::test_support::p;

    #[test]
    fn conjugation_is_involution() {
        let m = MixedPoly::from_holomorphic(&p("(1+i)*Z1*Z3 - 2*Z2"));
        assert_eq!(m.swap_conjugate().swap_conjugate(), m);
        assert!(!m.is_real());
    }

    #[test]
    fn hermitian_product_is_real() {
        let q = p("Z1 + i*Z2");
        let h = MixedPoly::from_holomorphic(&q).mul(&MixedPoly::conjugate_of(&q));
        assert!(h.is_real());
    }

    #[test]
    fn printing_interleaves_conjugates() {
        let a = MixedPoly::from_holomorphic(&p("Z1")).mul(&MixedPoly::conjugate_of(&p("Z3")));
        let b = MixedPoly::conjugate_of(&p("Z1")).mul(&MixedPoly::from_holomorphic(&p("Z3")));
        assert_eq!(a.sub(&b).to_string(), "Z1*conj(Z3) - conj(Z1)*Z3");
    }
}
