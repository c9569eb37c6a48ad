//! Standard bases of `(f, g) + m^K` in the plane, computed on truncated jets
//! with a degree-ascending term order.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::algebra::{GaussRational, Monomial, MultiPoly, Var};

type Exp = (u32, u32);

fn degree(e: Exp) -> u32 {
    e.0 + e.1
}

/// `Greater` means earlier: lower degree first, then higher power of `x`.
fn local_cmp(a: Exp, b: Exp) -> Ordering {
    degree(b).cmp(&degree(a)).then(a.0.cmp(&b.0))
}

fn divides(a: Exp, b: Exp) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

/// A polynomial of degree below the truncation bound, leading term first.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Jet {
    terms: Vec<(Exp, GaussRational)>,
}

impl Jet {
    pub fn from_poly(p: &MultiPoly, bound: u32) -> Jet {
        let mut terms: Vec<(Exp, GaussRational)> = p
            .terms()
            .map(|(m, c)| ((m.exp(Var::X), m.exp(Var::Y)), c.clone()))
            .filter(|(e, _)| degree(*e) < bound)
            .collect();
        terms.sort_by(|a, b| local_cmp(b.0, a.0));
        Jet { terms }
    }

    pub fn monomial(e: Exp) -> Jet {
        Jet {
            terms: vec![(e, GaussRational::one())],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &(Exp, GaussRational) {
        &self.terms[0]
    }

    pub fn coeff(&self, e: Exp) -> GaussRational {
        self.terms
            .iter()
            .find(|(f, _)| *f == e)
            .map_or_else(GaussRational::zero, |(_, c)| c.clone())
    }

    /// `self − c·x^s·other`, dropping terms of degree `bound` and above.
    fn sub_scaled(&self, c: &GaussRational, s: Exp, other: &Jet, bound: u32) -> Jet {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let shifted = other
            .terms
            .iter()
            .map(|(e, d)| ((e.0 + s.0, e.1 + s.1), d))
            .filter(|(e, _)| degree(*e) < bound);
        let mut mine = self.terms.iter().peekable();
        for (e, d) in shifted {
            while let Some((f, a)) = mine.peek() {
                if local_cmp(*f, e) == Ordering::Greater {
                    out.push((*f, a.clone()));
                    mine.next();
                } else {
                    break;
                }
            }
            let scaled = -(c * d);
            match mine.peek() {
                Some((f, a)) if *f == e => {
                    let sum = a + &scaled;
                    if !sum.is_zero() {
                        out.push((e, sum));
                    }
                    mine.next();
                }
                _ => out.push((e, scaled)),
            }
        }
        out.extend(mine.cloned());
        Jet { terms: out }
    }

    fn scale(&mut self, c: &GaussRational) {
        for (_, d) in self.terms.iter_mut() {
            *d = &*d * c;
        }
    }

    /// Product restricted to exponents strictly below `(a, b)`.
    pub fn mul_box(&self, other: &Jet, a: u32, b: u32) -> Jet {
        let mut acc = MultiPoly::zero();
        for (e, c) in &self.terms {
            for (f, d) in &other.terms {
                let (i, j) = (e.0 + f.0, e.1 + f.1);
                if i < a && j < b {
                    acc.add_term(Monomial::from_pairs(&[(Var::X, i), (Var::Y, j)]), &(c * d));
                }
            }
        }
        Jet::from_poly(&acc, a + b)
    }

    pub fn sub(&self, other: &Jet, bound: u32) -> Jet {
        self.sub_scaled(&GaussRational::one(), (0, 0), other, bound)
    }
}

/// An element of the ideal with `poly ≡ cof[0]·f + cof[1]·g  (mod m^K)`.
#[derive(Debug, Clone)]
pub struct Member {
    pub poly: Jet,
    pub cof: [Jet; 2],
}

/// Standard basis of `(f, g) + m^K` with cofactors modulo `m^K`.
#[derive(Debug, Clone)]
pub struct TruncatedBasis {
    pub bound: u32,
    pub members: Vec<Member>,
}

impl TruncatedBasis {
    pub fn compute(f: &MultiPoly, g: &MultiPoly, bound: u32) -> TruncatedBasis {
        let mut tb = TruncatedBasis { bound, members: vec![] };
        let mut pairs: Vec<(usize, usize)> = vec![];
        let seeds = [
            Member {
                poly: Jet::from_poly(f, bound),
                cof: [Jet::monomial((0, 0)), Jet::default()],
            },
            Member {
                poly: Jet::from_poly(g, bound),
                cof: [Jet::default(), Jet::monomial((0, 0))],
            },
        ];
        for s in seeds {
            let r = tb.reduce(s);
            tb.push(r, &mut pairs);
        }
        while let Some((i, j)) = pairs.pop() {
            let (ei, ej) = (tb.members[i].poly.lead().0, tb.members[j].poly.lead().0);
            let l = (ei.0.max(ej.0), ei.1.max(ej.1));
            if degree(l) >= bound {
                continue;
            }
            let (si, sj) = ((l.0 - ei.0, l.1 - ei.1), (l.0 - ej.0, l.1 - ej.1));
            let zero = Member {
                poly: Jet::default(),
                cof: [Jet::default(), Jet::default()],
            };
            let one = GaussRational::one();
            let s = tb.combine(&zero, &-&one, si, i);
            let s = tb.combine(&s, &one, sj, j);
            let r = tb.reduce(s);
            tb.push(r, &mut pairs);
        }
        tb
    }

    fn push(&mut self, mut m: Member, pairs: &mut Vec<(usize, usize)>) {
        if m.poly.is_zero() {
            return;
        }
        let inv = m.poly.lead().1.inv().expect("nonzero lead");
        m.poly.scale(&inv);
        for c in m.cof.iter_mut() {
            c.scale(&inv);
        }
        let k = self.members.len();
        pairs.extend((0..k).map(|i| (i, k)));
        self.members.push(m);
    }

    /// `m − c·x^s·members[k]`.
    fn combine(&self, m: &Member, c: &GaussRational, s: Exp, k: usize) -> Member {
        let b = &self.members[k];
        // Cofactors are kept below degree K − 1.
        let cb = self.bound.saturating_sub(1);
        Member {
            poly: m.poly.sub_scaled(c, s, &b.poly, self.bound),
            cof: [
                m.cof[0].sub_scaled(c, s, &b.cof[0], cb),
                m.cof[1].sub_scaled(c, s, &b.cof[1], cb),
            ],
        }
    }

    /// Full reduction; the remainder keeps its cofactors.
    pub fn reduce(&self, mut m: Member) -> Member {
        let mut rest: Vec<(Exp, GaussRational)> = vec![];
        while !m.poly.is_zero() {
            let (e, c) = m.poly.lead().clone();
            let hit = self
                .members
                .iter()
                .position(|b| divides(b.poly.lead().0, e));
            match hit {
                Some(k) => {
                    let (f, d) = self.members[k].poly.lead();
                    let shift = (e.0 - f.0, e.1 - f.1);
                    m = self.combine(&m, &(&c / d), shift, k);
                }
                None => {
                    rest.push((e, c));
                    m.poly.terms.remove(0);
                }
            }
        }
        m.poly = Jet { terms: rest };
        m
    }

    fn is_standard(&self, e: Exp) -> bool {
        !self.members.iter().any(|b| divides(b.poly.lead().0, e))
    }

    /// Least `s < K` with no standard monomial of degree `s`. Then
    /// `m^s ⊂ (f, g)` in the local ring.
    pub fn socle_bound(&self) -> Option<u32> {
        (0..self.bound).find(|&s| (0..=s).all(|i| !self.is_standard((i, s - i))))
    }

    pub fn standard_count(&self) -> usize {
        (0..self.bound)
            .flat_map(|s| (0..=s).map(move |i| (i, s - i)))
            .filter(|e| self.is_standard(*e))
            .count()
    }

    /// Cofactors of the monomial `x^i y^j` modulo `m^K`, if it lies in the ideal.
    pub fn express(&self, e: Exp) -> Option<[Jet; 2]> {
        let m = self.reduce(Member {
            poly: Jet::monomial(e),
            cof: [Jet::default(), Jet::default()],
        });
        // Zero remainder: e = −(cof[0]·f + cof[1]·g) mod m^K.
        if m.poly.is_zero() {
            let neg = -&GaussRational::one();
            let mut cof = m.cof;
            for c in cof.iter_mut() {
                c.scale(&neg);
            }
            Some(cof)
        } else {
            None
        }
    }
}
