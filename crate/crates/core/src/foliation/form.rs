use std::fmt;

use num_traits::Zero;

use crate::algebra::{gcd, GaussRational, MultiPoly, Var};
use crate::error::{Error, Result};

/// Affine chart of P²: the hyperplane `Zk ≠ 0` with its coordinate pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChartId {
    /// `Z1 = 1`, coordinates `(s, t) = (Z2/Z1, Z3/Z1)`.
    Z1,
    /// `Z2 = 1`, coordinates `(u, w) = (Z1/Z2, Z3/Z2)`.
    Z2,
    /// `Z3 = 1`, coordinates `(x, y) = (Z1/Z3, Z2/Z3)`.
    Z3,
}

impl ChartId {
    pub const ALL: [ChartId; 3] = [ChartId::Z3, ChartId::Z2, ChartId::Z1];

    pub fn vars(self) -> (Var, Var) {
        match self {
            ChartId::Z3 => (Var::X, Var::Y),
            ChartId::Z2 => (Var::U, Var::W),
            ChartId::Z1 => (Var::S, Var::T),
        }
    }

    /// Indices `(i, j, k)` with chart coordinates `Zi/Zk, Zj/Zk`.
    pub fn indices(self) -> (usize, usize, usize) {
        match self {
            ChartId::Z3 => (0, 1, 2),
            ChartId::Z2 => (0, 2, 1),
            ChartId::Z1 => (1, 2, 0),
        }
    }

    /// The homogeneous point `[Z1 : Z2 : Z3]` written in chart coordinates.
    pub fn embedding(self) -> [MultiPoly; 3] {
        let (p, q) = self.vars();
        let (i, j, k) = self.indices();
        let mut out = [MultiPoly::zero(), MultiPoly::zero(), MultiPoly::zero()];
        out[i] = MultiPoly::var(p);
        out[j] = MultiPoly::var(q);
        out[k] = MultiPoly::one();
        out
    }

    pub fn from_label(s: &str) -> Result<ChartId> {
        match s {
            "Z1" => Ok(ChartId::Z1),
            "Z2" => Ok(ChartId::Z2),
            "Z3" => Ok(ChartId::Z3),
            _ => Err(Error::InvalidInput(format!("unknown chart `{s}`"))),
        }
    }
}

impl fmt::Display for ChartId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// `ω = A dp + B dq` on an affine chart with coordinates `(p, q)`.
#[derive(Clone, PartialEq, Eq)]
pub struct AffineFoliation1Form {
    a: MultiPoly,
    b: MultiPoly,
    vars: (Var, Var),
    chart: String,
    removed: MultiPoly,
}

impl AffineFoliation1Form {
    /// `A dx + B dy` on the chart `Z3 = 1`.
    pub fn new(a: MultiPoly, b: MultiPoly) -> Result<Self> {
        Self::with_chart(a, b, (Var::X, Var::Y), "Z3")
    }

    /// Divides out `gcd(A, B)`; the removed factor stays available.
    pub fn with_chart(a: MultiPoly, b: MultiPoly, vars: (Var, Var), chart: &str) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::InvalidInput("the zero 1-form defines no foliation".into()));
        }
        if vars.0 == vars.1 {
            return Err(Error::InvalidInput("chart coordinates must differ".into()));
        }
        for v in a.variables().into_iter().chain(b.variables()) {
            if v != vars.0 && v != vars.1 {
                return Err(Error::InvalidInput(format!(
                    "variable {v} is not a coordinate of chart {chart}"
                )));
            }
        }
        let g = gcd(&a, &b);
        let (a, b) = if g.is_constant() {
            (a, b)
        } else {
            (
                a.divide_exact(&g).expect("gcd divides"),
                b.divide_exact(&g).expect("gcd divides"),
            )
        };
        Ok(AffineFoliation1Form {
            a,
            b,
            vars,
            chart: chart.to_string(),
            removed: if g.is_constant() { MultiPoly::one() } else { g },
        })
    }

    pub fn a(&self) -> &MultiPoly {
        &self.a
    }

    pub fn b(&self) -> &MultiPoly {
        &self.b
    }

    pub fn vars(&self) -> (Var, Var) {
        self.vars
    }

    pub fn chart(&self) -> &str {
        &self.chart
    }

    /// The common factor divided out at construction (1 if none).
    pub fn removed_factor(&self) -> &MultiPoly {
        &self.removed
    }

    /// The same form with its coordinates renamed to `(x, y)`.
    pub fn to_xy(&self) -> AffineFoliation1Form {
        let map = [(self.vars.0, Var::X), (self.vars.1, Var::Y)];
        AffineFoliation1Form {
            a: self.a.rename(&map),
            b: self.b.rename(&map),
            vars: (Var::X, Var::Y),
            chart: self.chart.clone(),
            removed: self.removed.rename(&map),
        }
    }

    /// Renames `(x, y)` coordinates to the given pair.
    pub fn from_xy(a: &MultiPoly, b: &MultiPoly, vars: (Var, Var), chart: &str) -> Result<Self> {
        let map = [(Var::X, vars.0), (Var::Y, vars.1)];
        Self::with_chart(a.rename(&map), b.rename(&map), vars, chart)
    }

    /// Whether both forms define the same foliation: `A₁B₂ − A₂B₁ = 0`.
    pub fn same_foliation(&self, o: &AffineFoliation1Form) -> bool {
        let (s, t) = (self.to_xy(), o.to_xy());
        (&(&s.a * &t.b) - &(&t.a * &s.b)).is_zero()
    }

    /// Pulls back by `p ↦ p + c₀, q ↦ q + c₁`, so the point `c` moves to the origin.
    pub fn translate(&self, c: &[GaussRational; 2]) -> AffineFoliation1Form {
        let (p, q) = self.vars;
        let shift = [
            (p, &MultiPoly::var(p) + &MultiPoly::constant(c[0].clone())),
            (q, &MultiPoly::var(q) + &MultiPoly::constant(c[1].clone())),
        ];
        AffineFoliation1Form {
            a: self.a.compose(&shift),
            b: self.b.compose(&shift),
            vars: self.vars,
            chart: self.chart.clone(),
            removed: self.removed.compose(&shift),
        }
    }

    /// Whether the point is a common zero of `A` and `B`.
    pub fn is_singular_at(&self, c: &[GaussRational; 2]) -> bool {
        let pt = [(self.vars.0, c[0].clone()), (self.vars.1, c[1].clone())];
        self.a.eval(&pt).map(|v| v.is_zero()).unwrap_or(false)
            && self.b.eval(&pt).map(|v| v.is_zero()).unwrap_or(false)
    }
}

pub fn translate(form: &AffineFoliation1Form, c: &[GaussRational; 2]) -> AffineFoliation1Form {
    form.translate(c)
}

fn write_coefficient(f: &mut fmt::Formatter<'_>, c: &MultiPoly, d: Var, first: bool) -> fmt::Result {
    let text = c.to_string();
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) if c.len() == 1 => (true, rest.to_string()),
        _ => (false, text),
    };
    match (first, neg) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    if body == "1" {
        write!(f, "d{d}")
    } else if c.len() > 1 {
        write!(f, "({body})*d{d}")
    } else {
        write!(f, "{body}*d{d}")
    }
}

impl fmt::Display for AffineFoliation1Form {
    /// Canonical text `A*dp + B*dq`, accepted back by the expression parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, v) in [(&self.a, self.vars.0), (&self.b, self.vars.1)] {
            if c.is_zero() {
                continue;
            }
            write_coefficient(f, c, v, first)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for AffineFoliation1Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {self}", self.chart)
    }
}

/// `v = F ∂p + G ∂q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorFieldRepr {
    pub f: MultiPoly,
    pub g: MultiPoly,
    pub vars: (Var, Var),
}

/// The vector field annihilating `ω`: `F = B`, `G = −A`.
pub fn dualize(form: &AffineFoliation1Form) -> VectorFieldRepr {
    VectorFieldRepr {
        f: form.b.clone(),
        g: -&form.a,
        vars: form.vars,
    }
}

impl VectorFieldRepr {
    /// Inverse of [`dualize`]: `ω = F dq − G dp`.
    pub fn to_form(&self, chart: &str) -> Result<AffineFoliation1Form> {
        AffineFoliation1Form::with_chart(-&self.g, self.f.clone(), self.vars, chart)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::test_support::p;
    use crate::cli::eval::parse_one_form;

    fn form(a: &str, b: &str) -> AffineFoliation1Form {
        AffineFoliation1Form::new(p(a), p(b)).unwrap()
    }

    #[test]
    fn duality_examples() {
        let v = dualize(&form("-y", "x"));
        assert_eq!((v.f.clone(), v.g.clone()), (p("x"), p("y")));
        let v = dualize(&form("x^2 - y^3", "x*y^2"));
        assert_eq!((v.f.clone(), v.g.clone()), (p("x*y^2"), p("y^3 - x^2")));
        let v = dualize(&form("0", "1"));
        assert_eq!((v.f.clone(), v.g.clone()), (p("1"), p("0")));
        assert_eq!(v.to_form("Z3").unwrap(), form("0", "1"));
    }

    #[test]
    fn common_factor_is_removed_and_reported() {
        let w = form("x*(y - 1)", "x*x");
        assert_eq!(w.a(), &p("y - 1"));
        assert_eq!(w.b(), &p("x"));
        assert_eq!(w.removed_factor(), &p("x"));
        assert!(AffineFoliation1Form::new(MultiPoly::zero(), MultiPoly::zero()).is_err());
        assert!(AffineFoliation1Form::new(p("z"), p("x")).is_err());
    }

    #[test]
    fn translation() {
        let radial = form("-y", "x");
        let c = [GaussRational::from_int(1), GaussRational::from_int(0)];
        let moved = radial.translate(&[-c[0].clone(), -c[1].clone()]);
        // The singularity of the shifted form sits at (1, 0).
        assert!(moved.is_singular_at(&c));
        assert_eq!(moved.b(), &p("x - 1"));
        let zero = [GaussRational::from_int(0), GaussRational::from_int(0)];
        assert_eq!(radial.translate(&zero), radial);
        let d = [GaussRational::from_int(2), GaussRational::i()];
        let twice = radial.translate(&c).translate(&d);
        assert_eq!(twice, radial.translate(&[&c[0] + &d[0], &c[1] + &d[1]]));
    }

    #[test]
    fn display_reparses() {
        for w in [form("x^2 - y^3", "x*y^2"), form("-y", "x"), form("0", "-1"), form("(1+i)*x", "-2*y")] {
            let back = parse_one_form(&w.to_string()).unwrap();
            assert_eq!(back, w, "{w}");
        }
        assert_eq!(form("-y", "x").to_string(), "-y*dx + x*dy");
    }
}
