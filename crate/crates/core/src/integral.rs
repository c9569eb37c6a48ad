//! First integrals: Darboux products, their logarithmic differentials, and
//! the 1-form attached to a factored holomorphic integral.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{gcd, lcm, GaussRational, MultiPoly, RatFunc, Var};
use crate::error::{Error, Result};
use crate::foliation::AffineFoliation1Form;

/// `H = Π Rᵢ^{ℓᵢ} · exp(S)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DarbouxSpec {
    pub factors: Vec<(RatFunc, i64)>,
    pub exp_part: Option<RatFunc>,
}

impl DarbouxSpec {
    pub fn rational(r: RatFunc) -> Self {
        DarbouxSpec {
            factors: vec![(r, 1)],
            exp_part: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.factors.is_empty() && self.exp_part.is_none() {
            return Err(Error::InvalidInput("empty Darboux product".into()));
        }
        if self.factors.iter().any(|(r, _)| r.is_zero()) {
            return Err(Error::InvalidInput("zero factor in a Darboux product".into()));
        }
        Ok(())
    }
}

impl fmt::Display for DarbouxSpec {
    /// Text accepted back by the expression parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (r, l) in &self.factors {
            let base = format!("rat({}, {})", r.num(), r.den());
            match *l {
                1 => parts.push(base),
                l if l > 1 => parts.push(format!("{base}^{l}")),
                l => parts.push(format!("1/{base}^{}", -l)),
            }
        }
        if let Some(s) = &self.exp_part {
            parts.push(format!("exp(({})/({}))", s.num(), s.den()));
        }
        let mut out = String::new();
        for (k, p) in parts.iter().enumerate() {
            if k == 0 {
                out.push_str(p);
            } else if let Some(rest) = p.strip_prefix("1/") {
                out.push('/');
                out.push_str(rest);
            } else {
                out.push('*');
                out.push_str(p);
            }
        }
        write!(f, "{out}")
    }
}

/// `θ = (θ_p dp + θ_q dq) / den`, equal to `dH/H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogDifferential {
    pub dp: MultiPoly,
    pub dq: MultiPoly,
    pub den: MultiPoly,
    pub vars: (Var, Var),
}

/// `dH/H = Σ ℓᵢ dRᵢ/Rᵢ + dS` in the coordinates `(x, y)`.
pub fn logarithmic_differential(spec: &DarbouxSpec) -> Result<LogDifferential> {
    logarithmic_differential_in(spec, (Var::X, Var::Y))
}

pub fn logarithmic_differential_in(spec: &DarbouxSpec, vars: (Var, Var)) -> Result<LogDifferential> {
    spec.validate()?;
    let (p, q) = vars;
    let mut cp = RatFunc::zero();
    let mut cq = RatFunc::zero();
    for (r, l) in &spec.factors {
        let weight = GaussRational::from_int(*l);
        for (part, sign) in [(r.num(), 1), (r.den(), -1)] {
            if part.is_constant() {
                continue;
            }
            let w = &weight * &GaussRational::from_int(sign);
            cp = cp.add(&RatFunc::new(part.derivative(p).scale(&w), part.clone())?);
            cq = cq.add(&RatFunc::new(part.derivative(q).scale(&w), part.clone())?);
        }
    }
    if let Some(s) = &spec.exp_part {
        cp = cp.add(&s.derivative(p));
        cq = cq.add(&s.derivative(q));
    }
    let den = lcm(cp.den(), cq.den());
    let clear = |r: &RatFunc| r.num() * &den.divide_exact(r.den()).expect("lcm is a multiple");
    Ok(LogDifferential {
        dp: clear(&cp),
        dq: clear(&cq),
        den,
        vars,
    })
}

/// Whether `H` is constant on the leaves of `ω`: `ω ∧ dH/H = 0`. A constant
/// `H` is not a first integral.
pub fn check_first_integral(form: &AffineFoliation1Form, spec: &DarbouxSpec) -> Result<bool> {
    let theta = logarithmic_differential_in(spec, form.vars())?;
    if theta.dp.is_zero() && theta.dq.is_zero() {
        return Ok(false);
    }
    Ok(wedge(form.a(), form.b(), &theta.dp, &theta.dq).is_zero())
}

/// Coefficient of `dp∧dq` in `(a dp + b dq) ∧ (c dp + d dq)`.
pub fn wedge(a: &MultiPoly, b: &MultiPoly, c: &MultiPoly, d: &MultiPoly) -> MultiPoly {
    &(a * d) - &(b * c)
}

/// `g = Π gᵢ^{ℓᵢ}` with pairwise coprime branches through the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HolomorphicFactoredIntegral {
    branches: Vec<(MultiPoly, u32)>,
}

impl HolomorphicFactoredIntegral {
    pub fn new(branches: Vec<(MultiPoly, u32)>) -> Result<Self> {
        if branches.is_empty() {
            return Err(Error::InvalidInput("a factored integral needs a branch".into()));
        }
        for (g, l) in &branches {
            if *l == 0 {
                return Err(Error::InvalidInput(format!("branch {g} has exponent 0")));
            }
            if g.is_constant() || !g.eval_at_origin().is_zero() {
                return Err(Error::InvalidInput(format!("branch {g} does not pass through the origin")));
            }
            if g.variables().iter().any(|v| *v != Var::X && *v != Var::Y) {
                return Err(Error::InvalidInput(format!("branch {g} is not a polynomial in x, y")));
            }
        }
        for i in 0..branches.len() {
            for j in 0..i {
                let h = gcd(&branches[i].0, &branches[j].0);
                if !h.is_constant() {
                    return Err(Error::CommonFactor {
                        factor: h.to_string(),
                    });
                }
            }
        }
        Ok(HolomorphicFactoredIntegral { branches })
    }

    pub fn branches(&self) -> &[(MultiPoly, u32)] {
        &self.branches
    }

    pub fn expand(&self) -> MultiPoly {
        self.branches
            .iter()
            .fold(MultiPoly::one(), |acc, (g, l)| &acc * &g.pow_u(*l))
    }

    pub fn to_darboux(&self) -> DarbouxSpec {
        DarbouxSpec {
            factors: self
                .branches
                .iter()
                .map(|(g, l)| (RatFunc::from_poly(g.clone()), i64::from(*l)))
                .collect(),
            exp_part: None,
        }
    }
}

/// `ω₀ = Σ ℓᵢ (Π_{j≠i} gⱼ) dgᵢ` divided by its polynomial gcd and positive
/// rational content.
pub fn one_form_from_factored(g: &HolomorphicFactoredIntegral) -> Result<AffineFoliation1Form> {
    Ok(one_form_with_cofactor(g)?.0)
}

/// As [`one_form_from_factored`], also returning the removed factor `c`
/// with `Σ ℓᵢ (Π_{j≠i} gⱼ) dgᵢ = c·ω₀`.
pub fn one_form_with_cofactor(g: &HolomorphicFactoredIntegral) -> Result<(AffineFoliation1Form, MultiPoly)> {
    let bs = g.branches();
    let mut a0 = MultiPoly::zero();
    let mut b0 = MultiPoly::zero();
    for (i, (gi, li)) in bs.iter().enumerate() {
        let others = bs
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .fold(MultiPoly::one(), |acc, (_, (gj, _))| &acc * gj);
        let w = others.scale(&GaussRational::from_int(i64::from(*li)));
        a0 = &a0 + &(&w * &gi.derivative(Var::X));
        b0 = &b0 + &(&w * &gi.derivative(Var::Y));
    }
    let h = gcd(&a0, &b0);
    let (a1, b1) = (
        a0.divide_exact(&h).expect("gcd divides"),
        b0.divide_exact(&h).expect("gcd divides"),
    );
    let marker = &a1 + &(&b1 * &MultiPoly::var(Var::Z));
    let content: BigRational = marker.rational_content();
    let inv = GaussRational::real(content.recip());
    let form = AffineFoliation1Form::new(a1.scale(&inv), b1.scale(&inv))?;
    Ok((form, h.scale(&GaussRational::real(content))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::test_support::p;
    use crate::cli::eval::parse_darboux;

    fn form(a: &str, b: &str) -> AffineFoliation1Form {
        AffineFoliation1Form::new(p(a), p(b)).unwrap()
    }

    fn spec(s: &str) -> DarbouxSpec {
        parse_darboux(s).unwrap()
    }

    fn factored(bs: &[(&str, u32)]) -> HolomorphicFactoredIntegral {
        HolomorphicFactoredIntegral::new(bs.iter().map(|(g, l)| (p(g), *l)).collect()).unwrap()
    }

    fn proportional(t: &LogDifferential, dp: &str, dq: &str, den: &str) -> bool {
        // θ and the expected differential agree as rational 1-forms.
        let lhs_p = &t.dp * &p(den);
        let rhs_p = &p(dp) * &t.den;
        let lhs_q = &t.dq * &p(den);
        let rhs_q = &p(dq) * &t.den;
        lhs_p == rhs_p && lhs_q == rhs_q
    }

    #[test]
    fn log_differentials() {
        let t = logarithmic_differential(&spec("y/x")).unwrap();
        assert!(proportional(&t, "-y", "x", "x*y"));
        let t = logarithmic_differential(&spec("exp(-y/x)")).unwrap();
        assert!(proportional(&t, "y", "-x", "x^2"));
        let t = logarithmic_differential(&spec("x")).unwrap();
        assert!(proportional(&t, "1", "0", "x"));
    }

    #[test]
    fn first_integral_checks() {
        let radial = form("-y", "x");
        assert!(check_first_integral(&radial, &spec("y/x")).unwrap());
        assert!(!check_first_integral(&radial, &spec("x")).unwrap());
        let w1 = form("x^2 - y^3", "x*y^2");
        assert!(check_first_integral(&w1, &spec("(y^3 - 3*x^2)/(3*x^3)")).unwrap());
        let w2 = crate::cli::eval::parse_one_form("x^2*dx + (x + y^2)*(x*dy - y*dx)").unwrap();
        assert!(check_first_integral(&w2, &spec("(2 + 1/x + 2*(y/x) + (y/x)^2)*exp(-y/x)")).unwrap());
        assert!(!check_first_integral(&radial, &spec("7")).unwrap());
    }

    #[test]
    fn verdict_invariance() {
        let w1 = form("x^2 - y^3", "x*y^2");
        let scaled = form("(x^2 - y^3)*(1 + x)", "x*y^2*(1 + x)");
        let h = spec("(y^3 - 3*x^2)/(3*x^3)");
        for s in [h.clone(), spec("((y^3 - 3*x^2)/(3*x^3))^2"), spec("1/rat(y^3 - 3*x^2, 3*x^3)")] {
            assert!(check_first_integral(&w1, &s).unwrap());
            assert!(check_first_integral(&scaled, &s).unwrap());
        }
    }

    #[test]
    fn factored_one_forms() {
        assert_eq!(one_form_from_factored(&factored(&[("x", 1), ("y", 1)])).unwrap(), form("y", "x"));
        assert_eq!(one_form_from_factored(&factored(&[("x", 1), ("y", 2)])).unwrap(), form("y", "2*x"));
        assert_eq!(
            one_form_from_factored(&factored(&[("y - x^2", 1), ("y + x^2", 1)])).unwrap(),
            form("-2*x^3", "y")
        );
        assert!(HolomorphicFactoredIntegral::new(vec![(p("x*y"), 1), (p("x"), 1)]).is_err());
        assert!(HolomorphicFactoredIntegral::new(vec![(p("x + 1"), 1)]).is_err());
    }

    #[test]
    fn factored_divisibility() {
        let g = factored(&[("x", 2), ("y - x^2", 3), ("x + 2*y", 1)]);
        let (w, c) = one_form_with_cofactor(&g).unwrap();
        let whole = g.expand();
        let power = g
            .branches()
            .iter()
            .fold(MultiPoly::one(), |acc, (gi, l)| &acc * &gi.pow_u(l - 1));
        let k = &power * &c;
        assert_eq!(whole.derivative(Var::X), &k * w.a());
        assert_eq!(whole.derivative(Var::Y), &k * w.b());
        assert!(check_first_integral(&w, &g.to_darboux()).unwrap());
    }

    #[test]
    fn darboux_display_reparses() {
        for s in ["y/x", "rat(y, x)*exp((y^2 - 2*x)/(2*x^2))", "rat(x, 1)^2/rat(y, 1)^3"] {
            let d = spec(s);
            assert_eq!(spec(&d.to_string()), d);
        }
    }
}
