//! Buchberger's algorithm with cofactor tracking.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::order::TermOrder;
use crate::algebra::{GaussRational, Monomial, MultiPoly, Var};

/// Polynomial as a term list sorted by decreasing monomial in a fixed order.
#[derive(Clone, Debug)]
struct Ordered {
    terms: Vec<(Monomial, GaussRational)>,
}

impl Ordered {
    fn from_poly(p: &MultiPoly, order: &TermOrder) -> Self {
        let mut terms: Vec<(Monomial, GaussRational)> =
            p.terms().map(|(m, c)| (*m, c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Ordered { terms }
    }

    fn to_poly(&self) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &(Monomial, GaussRational) {
        &self.terms[0]
    }

    /// `self − c·m·other`.
    fn sub_scaled(&self, c: &GaussRational, m: &Monomial, other: &Ordered, order: &TermOrder) -> Ordered {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let shifted = |k: usize| -> (Monomial, GaussRational) {
            let (n, d) = &other.terms[k];
            (n.mul(m), -(c * d))
        };
        while i < self.terms.len() || j < other.terms.len() {
            if j == other.terms.len() {
                out.push(self.terms[i].clone());
                i += 1;
                continue;
            }
            let (n, d) = shifted(j);
            if i == self.terms.len() {
                out.push((n, d));
                j += 1;
                continue;
            }
            match order.cmp(&self.terms[i].0, &n) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((n, d));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = &self.terms[i].1 + &d;
                    if !s.is_zero() {
                        out.push((n, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Ordered { terms: out }
    }

    fn scale(&mut self, c: &GaussRational) {
        for (_, d) in self.terms.iter_mut() {
            *d = &*d * c;
        }
    }
}

fn combo_sub(acc: &mut [MultiPoly], c: &GaussRational, m: &Monomial, other: &[MultiPoly]) {
    let neg = -c;
    for (a, o) in acc.iter_mut().zip(other) {
        if !o.is_zero() {
            *a = &*a + &o.mul_monomial(m, &neg);
        }
    }
}

/// A Gröbner basis together with the data needed to certify it.
#[derive(Debug, Clone)]
pub struct IdealBasis {
    pub order: TermOrder,
    /// Reduced, monic, sorted by decreasing leading monomial.
    pub generators: Vec<MultiPoly>,
    /// `generators[k] = Σⱼ cofactors[k][j]·originals[j]`.
    pub cofactors: Option<Vec<Vec<MultiPoly>>>,
    pub originals: Vec<MultiPoly>,
}

struct Element {
    poly: Ordered,
    combo: Vec<MultiPoly>,
}

struct Engine<'a> {
    order: &'a TermOrder,
    track: bool,
}

impl Engine<'_> {
    /// Full reduction against `basis`, skipping index `skip`.
    fn reduce(&self, mut p: Ordered, mut combo: Vec<MultiPoly>, basis: &[Element], skip: Option<usize>) -> (Ordered, Vec<MultiPoly>) {
        let mut rem: Vec<(Monomial, GaussRational)> = Vec::new();
        'outer: while !p.is_zero() {
            let (m, c) = p.lead().clone();
            for (k, g) in basis.iter().enumerate() {
                if Some(k) == skip || g.poly.is_zero() {
                    continue;
                }
                let (lm, lc) = g.poly.lead();
                if let Some(q) = lm.quotient_of(&m) {
                    let factor = &c / lc;
                    p = p.sub_scaled(&factor, &q, &g.poly, self.order);
                    if self.track {
                        combo_sub(&mut combo, &factor, &q, &g.combo);
                    }
                    continue 'outer;
                }
            }
            rem.push((m, c));
            p.terms.remove(0);
        }
        (Ordered { terms: rem }, combo)
    }

    fn make_monic(&self, e: &mut Element) {
        let inv = e.poly.lead().1.inv().expect("nonzero lead");
        if inv.is_one() {
            return;
        }
        e.poly.scale(&inv);
        if self.track {
            for c in e.combo.iter_mut() {
                *c = c.scale(&inv);
            }
        }
    }
}

fn unit_vector(n: usize, k: usize) -> Vec<MultiPoly> {
    (0..n)
        .map(|j| if j == k { MultiPoly::one() } else { MultiPoly::zero() })
        .collect()
}

/// Reduced Gröbner basis of the ideal generated by `gens` for the given
/// lexicographic order, with cofactors relative to `gens`.
pub fn groebner_lex(gens: &[MultiPoly], order: &TermOrder) -> IdealBasis {
    groebner(gens, order, true)
}

/// As [`groebner_lex`] but without cofactor bookkeeping.
pub fn groebner_lex_plain(gens: &[MultiPoly], order: &TermOrder) -> IdealBasis {
    groebner(gens, order, false)
}

fn groebner(gens: &[MultiPoly], order: &TermOrder, track: bool) -> IdealBasis {
    let n = gens.len();
    let engine = Engine { order, track };
    let mut basis: Vec<Element> = Vec::new();
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    let add = |basis: &mut Vec<Element>, pairs: &mut BTreeSet<(usize, usize)>, mut e: Element| {
        engine.make_monic(&mut e);
        let k = basis.len();
        for i in 0..k {
            if !basis[i].poly.is_zero() {
                pairs.insert((i, k));
            }
        }
        basis.push(e);
        k
    };

    for (k, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let combo = if track { unit_vector(n, k) } else { Vec::new() };
        let (p, combo) = engine.reduce(Ordered::from_poly(g, order), combo, &basis, None);
        if !p.is_zero() {
            add(&mut basis, &mut pairs, Element { poly: p, combo });
        }
    }

    let unit_found = |basis: &[Element]| {
        basis
            .iter()
            .any(|e| !e.poly.is_zero() && e.poly.lead().0.is_one())
    };

    while !unit_found(&basis) {
        // Normal selection: smallest lcm first, ties by index.
        let Some(&(i, j)) = pairs.iter().min_by(|a, b| {
            let la = basis[a.0].poly.lead().0.lcm(&basis[a.1].poly.lead().0);
            let lb = basis[b.0].poly.lead().0.lcm(&basis[b.1].poly.lead().0);
            order.cmp(&la, &lb).then(a.cmp(b))
        }) else {
            break;
        };
        pairs.remove(&(i, j));
        let (mi, mj) = (basis[i].poly.lead().0, basis[j].poly.lead().0);
        if mi.is_coprime(&mj) {
            continue;
        }
        let l = mi.lcm(&mj);
        // Chain criterion: an intermediate generator whose pairs are settled.
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && !basis[k].poly.is_zero()
                && basis[k].poly.lead().0.divides(&l)
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let qi = mi.quotient_of(&l).expect("lcm");
        let qj = mj.quotient_of(&l).expect("lcm");
        let zero = Ordered { terms: vec![] };
        let one = GaussRational::one();
        let s = zero
            .sub_scaled(&-&one, &qi, &basis[i].poly, order)
            .sub_scaled(&one, &qj, &basis[j].poly, order);
        let mut combo = if track { vec![MultiPoly::zero(); n] } else { Vec::new() };
        if track {
            combo_sub(&mut combo, &-&one, &qi, &basis[i].combo);
            combo_sub(&mut combo, &one, &qj, &basis[j].combo);
        }
        let (r, combo) = engine.reduce(s, combo, &basis, None);
        if !r.is_zero() {
            add(&mut basis, &mut pairs, Element { poly: r, combo });
        }
    }

    // Minimalize.
    let mut keep: Vec<usize> = Vec::new();
    if let Some(u) = basis
        .iter()
        .position(|e| !e.poly.is_zero() && e.poly.lead().0.is_one())
    {
        keep.push(u);
    } else {
        for k in 0..basis.len() {
            let mk = basis[k].poly.lead().0;
            let redundant = (0..basis.len()).any(|o| {
                let mo = basis[o].poly.lead().0;
                o != k && mo.divides(&mk) && (mo != mk || o < k)
            });
            if !redundant {
                keep.push(k);
            }
        }
    }
    let mut minimal: Vec<Element> = keep
        .into_iter()
        .map(|k| Element {
            poly: basis[k].poly.clone(),
            combo: std::mem::take(&mut basis[k].combo),
        })
        .collect();

    // Inter-reduce tails.
    for k in 0..minimal.len() {
        let e = Element {
            poly: minimal[k].poly.clone(),
            combo: minimal[k].combo.clone(),
        };
        let lead = Ordered {
            terms: vec![e.poly.lead().clone()],
        };
        let tail = Ordered {
            terms: e.poly.terms[1..].to_vec(),
        };
        let (r, combo) = engine.reduce(tail, e.combo, &minimal, Some(k));
        let mut terms = lead.terms;
        terms.extend(r.terms);
        minimal[k] = Element {
            poly: Ordered { terms },
            combo,
        };
    }
    minimal.sort_by(|a, b| order.cmp(&b.poly.lead().0, &a.poly.lead().0));

    IdealBasis {
        order: order.clone(),
        generators: minimal.iter().map(|e| e.poly.to_poly()).collect(),
        cofactors: track.then(|| {
            minimal
                .iter()
                .map(|e| e.combo.clone())
                .collect()
        }),
        originals: gens.to_vec(),
    }
}

impl IdealBasis {
    pub fn is_unit_ideal(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .map(|g| Ordered::from_poly(g, &self.order).lead().0)
            .collect()
    }

    fn elements(&self) -> Vec<Element> {
        self.generators
            .iter()
            .map(|g| Element {
                poly: Ordered::from_poly(g, &self.order),
                combo: Vec::new(),
            })
            .collect()
    }

    /// Checks `generators[k] = Σ cofactors[k][j]·originals[j]` exactly.
    pub fn verify_cofactors(&self) -> bool {
        let Some(cof) = &self.cofactors else {
            return true;
        };
        self.generators.iter().zip(cof).all(|(g, row)| {
            let sum = row
                .iter()
                .zip(&self.originals)
                .fold(MultiPoly::zero(), |acc, (c, o)| &acc + &(c * o));
            &sum == g
        })
    }

    /// Remainder of `p` modulo the basis together with quotients relative to
    /// the original generators: `p = Σ qⱼ·originalsⱼ + remainder`.
    pub fn divide(&self, p: &MultiPoly) -> (MultiPoly, Option<Vec<MultiPoly>>) {
        let Some(cof) = &self.cofactors else {
            return (normal_form(p, self), None);
        };
        let engine = Engine {
            order: &self.order,
            track: true,
        };
        let basis: Vec<Element> = self
            .generators
            .iter()
            .zip(cof)
            .map(|(g, row)| Element {
                poly: Ordered::from_poly(g, &self.order),
                // Sign flip: reduce() subtracts, the quotient accumulates.
                combo: row.iter().map(|c| -c).collect(),
            })
            .collect();
        let (r, q) = engine.reduce(
            Ordered::from_poly(p, &self.order),
            vec![MultiPoly::zero(); self.originals.len()],
            &basis,
            None,
        );
        (r.to_poly(), Some(q))
    }
}

/// Fully reduced remainder of `p` modulo a Gröbner basis.
pub fn normal_form(p: &MultiPoly, basis: &IdealBasis) -> MultiPoly {
    let engine = Engine {
        order: &basis.order,
        track: false,
    };
    let (r, _) = engine.reduce(Ordered::from_poly(p, &basis.order), Vec::new(), &basis.elements(), None);
    r.to_poly()
}

/// Exponent tuples of the monomials outside the leading-term ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardMonomialSet {
    pub vars: Vec<Var>,
    pub monomials: Vec<Monomial>,
}

impl StandardMonomialSet {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn is_divisor_closed(&self) -> bool {
        self.monomials.iter().all(|m| {
            m.vars().all(|v| {
                let mut d = *m;
                d.0[v.index()] -= 1;
                self.monomials.contains(&d)
            })
        })
    }
}

/// Standard monomials in the ring over `vars`, or `None` when infinitely many.
pub fn standard_monomials(basis: &IdealBasis, vars: &[Var]) -> Option<StandardMonomialSet> {
    let leads = basis.leading_monomials();
    if leads.iter().any(|m| m.vars().any(|v| !vars.contains(&v))) {
        // Leading terms outside the ring only arise from foreign generators.
        return None;
    }
    let mut bounds = Vec::with_capacity(vars.len());
    for v in vars {
        let pure = leads
            .iter()
            .filter(|m| m.degree() == m.exp(*v) && m.exp(*v) > 0)
            .map(|m| m.exp(*v))
            .min();
        if basis.is_unit_ideal() {
            bounds.push(0);
        } else {
            bounds.push(pure?);
        }
    }
    let mut monomials = Vec::new();
    if !basis.is_unit_ideal() {
        let mut exps = vec![0u32; vars.len()];
        'walk: loop {
            let m = Monomial::from_pairs(&vars.iter().copied().zip(exps.iter().copied()).collect::<Vec<_>>());
            if !leads.iter().any(|l| l.divides(&m)) {
                monomials.push(m);
            }
            for k in 0..vars.len() {
                exps[k] += 1;
                if exps[k] < bounds[k] {
                    continue 'walk;
                }
                exps[k] = 0;
            }
            break;
        }
    }
    monomials.sort();
    Some(StandardMonomialSet {
        vars: vars.to_vec(),
        monomials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::test_support::p;

    fn lex_xy() -> TermOrder {
        TermOrder::lex(&[Var::X, Var::Y])
    }

    #[test]
    fn coordinate_ideal() {
        let b = groebner_lex(&[p("x"), p("y")], &lex_xy());
        assert_eq!(b.generators, vec![p("x"), p("y")]);
        let b = groebner_lex(&[p("x^2"), p("y")], &lex_xy());
        assert_eq!(b.generators, vec![p("x^2"), p("y")]);
    }

    #[test]
    fn cusp_ideal_basis() {
        let b = groebner_lex(&[p("x*y^2"), p("y^3 - x^2")], &lex_xy());
        assert_eq!(b.generators, vec![p("x^2 - y^3"), p("x*y^2"), p("y^5")]);
        assert!(b.verify_cofactors());
        let cof = b.cofactors.as_ref().unwrap();
        // y⁵ = x·(xy²) + y²·(y³ − x²)
        assert_eq!(cof[2], vec![p("x"), p("y^2")]);
    }

    #[test]
    fn normal_forms() {
        let b = groebner_lex(&[p("x"), p("y")], &lex_xy());
        assert!(normal_form(&p("x^2"), &b).is_zero());
        let b = groebner_lex(&[p("x*y^2"), p("y^3 - x^2")], &lex_xy());
        assert!(normal_form(&p("y^8"), &b).is_zero());
        assert_eq!(normal_form(&p("x*y"), &b), p("x*y"));
        for g in &b.originals {
            assert!(normal_form(g, &b).is_zero());
        }
    }

    #[test]
    fn division_with_quotients() {
        let b = groebner_lex(&[p("x*y^2"), p("y^3 - x^2")], &lex_xy());
        let f = p("x^3*y + y^7 + x*y + 3");
        let (r, q) = b.divide(&f);
        let q = q.unwrap();
        let back = &(&(&q[0] * &b.originals[0]) + &(&q[1] * &b.originals[1])) + &r;
        assert_eq!(back, f);
        assert_eq!(r, normal_form(&f, &b));
    }

    #[test]
    fn unit_ideal() {
        let b = groebner_lex(&[p("x"), p("x - 1")], &lex_xy());
        assert!(b.is_unit_ideal());
        assert!(b.verify_cofactors());
    }

    #[test]
    fn standard_monomials_of_cusp() {
        let b = groebner_lex(&[p("x*y^2"), p("y^3 - x^2")], &lex_xy());
        let s = standard_monomials(&b, &[Var::X, Var::Y]).unwrap();
        assert_eq!(s.len(), 7);
        assert!(s.is_divisor_closed());
        let b = groebner_lex(&[p("x*y")], &lex_xy());
        assert!(standard_monomials(&b, &[Var::X, Var::Y]).is_none());
    }
}
