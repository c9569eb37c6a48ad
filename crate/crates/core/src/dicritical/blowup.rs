use std::fmt;

use num_traits::Zero;

use crate::algebra::{GaussRational, MultiPoly, Var};
use crate::error::{Error, Result};
use crate::foliation::AffineFoliation1Form;

/// Lowest-order homogeneous parts of `A` and `B` at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetDecomposition {
    /// Algebraic multiplicity: the smaller vanishing order of `A`, `B`.
    pub nu: u32,
    pub a_nu: MultiPoly,
    pub b_nu: MultiPoly,
}

fn singular_xy(form: &AffineFoliation1Form) -> Result<AffineFoliation1Form> {
    let w = form.to_xy();
    if !w.a().eval_at_origin().is_zero() || !w.b().eval_at_origin().is_zero() {
        return Err(Error::RegularPoint);
    }
    Ok(w)
}

pub fn jet_decomposition(form: &AffineFoliation1Form) -> Result<JetDecomposition> {
    let w = singular_xy(form)?;
    let nu = [w.a(), w.b()]
        .iter()
        .filter_map(|c| c.order())
        .min()
        .expect("a foliation form is nonzero");
    Ok(JetDecomposition {
        nu,
        a_nu: w.a().homogeneous_part(nu),
        b_nu: w.b().homogeneous_part(nu),
    })
}

/// Whether the exceptional divisor of the first blow-up fails to be
/// invariant: `x·A_ν + y·B_ν ≡ 0`.
pub fn first_blowup_dicritical(form: &AffineFoliation1Form) -> Result<bool> {
    let j = jet_decomposition(form)?;
    let radial = &(&MultiPoly::var(Var::X) * &j.a_nu) + &(&MultiPoly::var(Var::Y) * &j.b_nu);
    Ok(radial.is_zero())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlowUpKind {
    /// `y = t·x`, exceptional divisor `{x = 0}`, coordinates `(x, t)`.
    YEqualsTX,
    /// `x = s·y`, exceptional divisor `{y = 0}`, coordinates `(s, y)`.
    XEqualsSY,
}

impl BlowUpKind {
    pub fn label(self) -> &'static str {
        match self {
            BlowUpKind::YEqualsTX => "y=tx",
            BlowUpKind::XEqualsSY => "x=sy",
        }
    }

    pub fn vars(self) -> (Var, Var) {
        match self {
            BlowUpKind::YEqualsTX => (Var::X, Var::T),
            BlowUpKind::XEqualsSY => (Var::S, Var::Y),
        }
    }

    /// The exceptional coordinate.
    pub fn divisor(self) -> Var {
        match self {
            BlowUpKind::YEqualsTX => Var::X,
            BlowUpKind::XEqualsSY => Var::Y,
        }
    }

    /// `(x, y)` as polynomials in the chart coordinates.
    fn map(self) -> [(Var, MultiPoly); 2] {
        match self {
            BlowUpKind::YEqualsTX => [
                (Var::X, MultiPoly::var(Var::X)),
                (Var::Y, &MultiPoly::var(Var::T) * &MultiPoly::var(Var::X)),
            ],
            BlowUpKind::XEqualsSY => [
                (Var::X, &MultiPoly::var(Var::S) * &MultiPoly::var(Var::Y)),
                (Var::Y, MultiPoly::var(Var::Y)),
            ],
        }
    }
}

impl fmt::Display for BlowUpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// One chart of the blow-up of the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowUpChart {
    pub kind: BlowUpKind,
    pub transformed: AffineFoliation1Form,
    pub exceptional_divisor_invariant: bool,
    /// Power of the exceptional coordinate divided out of the pullback.
    pub divided_power: u32,
}

/// Coefficients of the pullback of `A dx + B dy` under the chart map.
fn pullback(form: &AffineFoliation1Form, kind: BlowUpKind) -> (MultiPoly, MultiPoly) {
    let map = kind.map();
    let (p, q) = kind.vars();
    let a = form.a().compose(&map);
    let b = form.b().compose(&map);
    let (x, y) = (&map[0].1, &map[1].1);
    let cp = &(&a * &x.derivative(p)) + &(&b * &y.derivative(p));
    let cq = &(&a * &x.derivative(q)) + &(&b * &y.derivative(q));
    (cp, cq)
}

fn chart(form: &AffineFoliation1Form, kind: BlowUpKind) -> Result<BlowUpChart> {
    let (cp, cq) = pullback(form, kind);
    let e = kind.divisor();
    let k = [&cp, &cq]
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.valuation_in(e))
        .min()
        .expect("pullback of a nonzero form");
    let (cp, cq) = (cp.shift_down(e, k), cq.shift_down(e, k));
    // E = {e = 0} is invariant when the coefficient of the other
    // differential vanishes along it.
    let along = if e == kind.vars().0 { &cq } else { &cp };
    let invariant = along.eval_partial(&[(e, GaussRational::zero())]).is_zero();
    let transformed = AffineFoliation1Form::with_chart(cp, cq, kind.vars(), kind.label())?;
    if !transformed.removed_factor().is_constant() {
        return Err(Error::Internal(format!(
            "blow-up left the common factor {}",
            transformed.removed_factor()
        )));
    }
    Ok(BlowUpChart {
        kind,
        transformed,
        exceptional_divisor_invariant: invariant,
        divided_power: k,
    })
}

/// Both charts of the blow-up of the origin, with the largest power of the
/// exceptional coordinate divided out.
pub fn blow_up(form: &AffineFoliation1Form) -> Result<(BlowUpChart, BlowUpChart)> {
    let w = singular_xy(form)?;
    Ok((chart(&w, BlowUpKind::YEqualsTX)?, chart(&w, BlowUpKind::XEqualsSY)?))
}

impl BlowUpChart {
    /// Whether the pullback of `original` equals `e^k` times the transformed
    /// form, recomputed through rational substitution.
    pub fn pullback_identity_holds(&self, original: &AffineFoliation1Form) -> bool {
        use crate::algebra::{substitute, RatFunc};
        let w = original.to_xy();
        let map = self.kind.map();
        let bind: Vec<(Var, RatFunc)> = map.iter().map(|(v, p)| (*v, RatFunc::from_poly(p.clone()))).collect();
        let (Ok(a), Ok(b)) = (substitute(w.a(), &bind), substitute(w.b(), &bind)) else {
            return false;
        };
        let (p, q) = self.kind.vars();
        let (x, y) = (&map[0].1, &map[1].1);
        let d = |f: &MultiPoly, v: Var| RatFunc::from_poly(f.derivative(v));
        let cp = a.mul(&d(x, p)).add(&b.mul(&d(y, p)));
        let cq = a.mul(&d(x, q)).add(&b.mul(&d(y, q)));
        let e = MultiPoly::var(self.kind.divisor()).pow_u(self.divided_power);
        let t = &self.transformed;
        cp.as_polynomial() == Some(&(&e * t.a())) && cq.as_polynomial() == Some(&(&e * t.b()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::test_support::p;

    fn form(a: &str, b: &str) -> AffineFoliation1Form {
        AffineFoliation1Form::new(p(a), p(b)).unwrap()
    }

    #[test]
    fn jets() {
        let j = jet_decomposition(&form("-y", "x")).unwrap();
        assert_eq!((j.nu, j.a_nu, j.b_nu), (1, p("-y"), p("x")));
        let j = jet_decomposition(&form("x^2 - y^3", "x*y^2")).unwrap();
        assert_eq!((j.nu, j.a_nu, j.b_nu), (2, p("x^2"), p("0")));
        assert_eq!(jet_decomposition(&form("x^2", "y^2")).unwrap().nu, 2);
        assert_eq!(jet_decomposition(&form("1", "x")), Err(Error::RegularPoint));
    }

    #[test]
    fn first_blowup_criterion() {
        assert!(first_blowup_dicritical(&form("-y", "x")).unwrap());
        assert!(!first_blowup_dicritical(&form("x^2 - y^3", "x*y^2")).unwrap());
        assert!(!first_blowup_dicritical(&form("-2*y", "x")).unwrap());
    }

    #[test]
    fn blow_up_examples() {
        let radial = form("-y", "x");
        let (c1, c2) = blow_up(&radial).unwrap();
        assert_eq!(c1.transformed.a(), &p("0"));
        assert_eq!(c1.transformed.b(), &p("1"));
        assert_eq!(c1.divided_power, 2);
        assert!(!c1.exceptional_divisor_invariant);
        assert!(!c2.exceptional_divisor_invariant);

        let w1 = form("x^2 - y^3", "x*y^2");
        let (c1, _) = blow_up(&w1).unwrap();
        assert_eq!(c1.transformed.a(), &p("1"));
        assert_eq!(c1.transformed.b(), &p("x^2*t^2"));
        assert!(c1.exceptional_divisor_invariant);

        let (c1, _) = blow_up(&form("-2*y", "x")).unwrap();
        assert_eq!(c1.transformed.a(), &p("-t"));
        assert_eq!(c1.transformed.b(), &p("x"));
        assert!(c1.exceptional_divisor_invariant);
    }

    #[test]
    fn pullback_identity() {
        for (a, b) in [("-y", "x"), ("x^2 - y^3", "x*y^2"), ("-2*y", "x"), ("x + y^2", "x*y - y^3")] {
            let w = form(a, b);
            let (c1, c2) = blow_up(&w).unwrap();
            assert!(c1.pullback_identity_holds(&w), "{w}");
            assert!(c2.pullback_identity_holds(&w), "{w}");
        }
    }
}
