use super::form::{AffineFoliation1Form, ChartId};
use crate::algebra::{gcd_all, substitute, GaussRational, Monomial, MultiPoly, RatFunc, Var};
use crate::error::{Error, Result};
use crate::local::{local_intersection_multiplicity, quotient_dimension_in, QuotientDimension};

const HOMOGENEOUS: [Var; 3] = [Var::Z1, Var::Z2, Var::Z3];

/// `Ω = L dZ1 + M dZ2 + N dZ3` with `Z1·L + Z2·M + Z3·N = 0`.
#[derive(Debug, Clone)]
pub struct ProjectiveFoliation {
    pub l: MultiPoly,
    pub m: MultiPoly,
    pub n: MultiPoly,
    pub degree: u32,
    charts: [AffineFoliation1Form; 3],
}

impl ProjectiveFoliation {
    /// Builds the foliation from its homogeneous coefficients, removing
    /// their common factor.
    pub fn from_homogeneous(l: MultiPoly, m: MultiPoly, n: MultiPoly) -> Result<Self> {
        let g = gcd_all([&l, &m, &n]);
        let div = |p: MultiPoly| if g.is_constant() { p } else { p.divide_exact(&g).expect("gcd divides") };
        let (l, m, n) = (div(l), div(m), div(n));
        let coeffs = [&l, &m, &n];
        if coeffs.iter().all(|p| p.is_zero()) {
            return Err(Error::InvalidInput("the zero form defines no foliation".into()));
        }
        let deg = coeffs.iter().filter_map(|p| p.total_degree()).max().unwrap_or(0);
        for p in coeffs {
            if !p.is_zero() && (!p.is_homogeneous() || p.total_degree() != Some(deg)) {
                return Err(Error::InvalidInput(format!(
                    "coefficient {p} is not homogeneous of degree {deg}"
                )));
            }
            if p.variables().iter().any(|v| !HOMOGENEOUS.contains(v)) {
                return Err(Error::InvalidInput(format!("{p} is not a form in Z1, Z2, Z3")));
            }
        }
        if deg == 0 {
            return Err(Error::InvalidInput("constant coefficients violate the Euler identity".into()));
        }
        let euler = &(&(&MultiPoly::var(Var::Z1) * &l) + &(&MultiPoly::var(Var::Z2) * &m)) + &(&MultiPoly::var(Var::Z3) * &n);
        if !euler.is_zero() {
            return Err(Error::InvalidInput("Euler contraction Z1*L + Z2*M + Z3*N is not zero".into()));
        }
        let coeff = [l.clone(), m.clone(), n.clone()];
        let chart_form = |c: ChartId| -> Result<AffineFoliation1Form> {
            let (i, j, _) = c.indices();
            let emb = c.embedding();
            let bind: Vec<(Var, MultiPoly)> = HOMOGENEOUS.iter().copied().zip(emb).collect();
            AffineFoliation1Form::with_chart(coeff[i].compose(&bind), coeff[j].compose(&bind), c.vars(), &c.to_string())
        };
        let charts = [chart_form(ChartId::Z1)?, chart_form(ChartId::Z2)?, chart_form(ChartId::Z3)?];
        Ok(ProjectiveFoliation {
            degree: deg - 1,
            l,
            m,
            n,
            charts,
        })
    }

    pub fn chart(&self, c: ChartId) -> &AffineFoliation1Form {
        match c {
            ChartId::Z1 => &self.charts[0],
            ChartId::Z2 => &self.charts[1],
            ChartId::Z3 => &self.charts[2],
        }
    }

    pub fn euler_contraction(&self) -> MultiPoly {
        &(&(&MultiPoly::var(Var::Z1) * &self.l) + &(&MultiPoly::var(Var::Z2) * &self.m))
            + &(&MultiPoly::var(Var::Z3) * &self.n)
    }

    /// `c₁(N_F)² = (d + 2)²`.
    pub fn baum_bott_target(&self) -> u64 {
        let d = u64::from(self.degree) + 2;
        d * d
    }
}

fn chart_of(label: &str) -> Result<ChartId> {
    ChartId::from_label(label)
}

/// Extends an affine form to `P²`. The form's chart label says which
/// hyperplane `Zk = 1` its coordinates live on.
pub fn projectivize(form: &AffineFoliation1Form) -> Result<ProjectiveFoliation> {
    let chart = chart_of(form.chart())?;
    let (i, j, k) = chart.indices();
    let (p, q) = form.vars();
    let deg = [form.a(), form.b()]
        .iter()
        .filter_map(|c| c.total_degree())
        .max()
        .unwrap_or(0);
    let hom = |c: &MultiPoly| -> MultiPoly {
        let renamed = c.rename(&[(p, HOMOGENEOUS[i]), (q, HOMOGENEOUS[j])]);
        renamed.homogenize(HOMOGENEOUS[k], deg).expect("degree bound holds")
    };
    let (ah, bh) = (hom(form.a()), hom(form.b()));
    let (zi, zj, zk) = (
        MultiPoly::var(HOMOGENEOUS[i]),
        MultiPoly::var(HOMOGENEOUS[j]),
        MultiPoly::var(HOMOGENEOUS[k]),
    );
    let mut coeff = [MultiPoly::zero(), MultiPoly::zero(), MultiPoly::zero()];
    coeff[i] = &zk * &ah;
    coeff[j] = &zk * &bh;
    coeff[k] = -(&(&zi * &ah) + &(&zj * &bh));
    let [l, m, n] = coeff;
    ProjectiveFoliation::from_homogeneous(l, m, n)
}

/// Rewrites the chart form of `from` in the coordinates of `to` by rational
/// substitution, then clears denominators.
pub fn chart_transition(pf: &ProjectiveFoliation, from: ChartId, to: ChartId) -> Result<AffineFoliation1Form> {
    let source = pf.chart(from);
    if from == to {
        return Ok(source.clone());
    }
    let (i, j, k) = from.indices();
    let emb = to.embedding();
    let ratio = |a: usize| RatFunc::new(emb[a].clone(), emb[k].clone());
    let (p, q) = from.vars();
    let (phi, psi) = (ratio(i)?, ratio(j)?);
    let bind = [(p, phi.clone()), (q, psi.clone())];
    let a = substitute(source.a(), &bind)?;
    let b = substitute(source.b(), &bind)?;
    let (u, w) = to.vars();
    // ω = A dφ + B dψ = (A φ_u + B ψ_u) du + (A φ_w + B ψ_w) dw
    let cu = a.mul(&phi.derivative(u)).add(&b.mul(&psi.derivative(u)));
    let cw = a.mul(&phi.derivative(w)).add(&b.mul(&psi.derivative(w)));
    let den = crate::algebra::lcm(cu.den(), cw.den());
    let clear = |r: &RatFunc| r.num() * &den.divide_exact(r.den()).expect("lcm is a multiple");
    AffineFoliation1Form::with_chart(clear(&cu), clear(&cw), (u, w), &to.to_string())
}

/// Number of singular points on `P²` counted with multiplicity. The line at
/// infinity of chart `Z3` is covered by chart `Z2` along `w = 0` and by the
/// origin of chart `Z1`.
pub fn bezout_count(pf: &ProjectiveFoliation) -> Result<usize> {
    let affine = chart_count(pf.chart(ChartId::Z3), None)?;
    let at_infinity = {
        let c2 = pf.chart(ChartId::Z2);
        let whole = chart_count(c2, None)?;
        chart_count(c2, Some(whole as u32))?
    };
    let corner = {
        let c1 = pf.chart(ChartId::Z1).to_xy();
        local_intersection_multiplicity(c1.a(), c1.b())?
    };
    let total = affine + at_infinity + corner;
    let d = pf.degree as usize;
    let expected = d * d + d + 1;
    if total != expected {
        return Err(Error::Internal(format!(
            "singularities counted {total} times, expected d^2 + d + 1 = {expected}"
        )));
    }
    Ok(total)
}

fn chart_count(form: &AffineFoliation1Form, second_power: Option<u32>) -> Result<usize> {
    let w = form.to_xy();
    let mut gens = vec![w.a().clone(), w.b().clone()];
    if let Some(k) = second_power {
        gens.push(MultiPoly::term(GaussRational::from_int(1), Monomial::var_pow(Var::Y, k.max(1))));
    }
    match quotient_dimension_in(&gens, &[Var::X, Var::Y]) {
        QuotientDimension::Finite(n) => Ok(n),
        QuotientDimension::Infinite => Err(Error::NonIsolated(format!(
            "chart {} has a curve of singular points",
            form.chart()
        ))),
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
    fn degrees() {
        assert_eq!(projectivize(&form("-y", "x")).unwrap().degree, 0);
        assert_eq!(projectivize(&form("x^2 - y^3", "x*y^2")).unwrap().degree, 2);
        for d in 1..=3u32 {
            let a = format!("x^{d}*y - 1");
            let b = format!("y^{d} - x^{}", d + 1);
            assert_eq!(projectivize(&form(&a, &b)).unwrap().degree, d);
        }
    }

    #[test]
    fn euler_identity_and_affine_restriction() {
        for (a, b) in [("-y", "x"), ("x^2 - y^3", "x*y^2"), ("x*y - 1", "y - x^2"), ("1", "0")] {
            let w = form(a, b);
            let pf = projectivize(&w).unwrap();
            assert!(pf.euler_contraction().is_zero());
            assert!(pf.chart(ChartId::Z3).same_foliation(&w));
        }
    }

    #[test]
    fn pencil_in_second_chart() {
        // dx with x = u/w, y = 1/w: (w du − u dw)/w².
        let pf = projectivize(&form("1", "0")).unwrap();
        let c = chart_transition(&pf, ChartId::Z3, ChartId::Z2).unwrap();
        let expected = AffineFoliation1Form::with_chart(p("w"), p("-u"), (Var::U, Var::W), "Z2").unwrap();
        assert!(c.same_foliation(&expected));
        assert!(pf.chart(ChartId::Z2).same_foliation(&expected));
    }

    #[test]
    fn transitions_agree_with_projective_charts() {
        let pf = projectivize(&form("x^2 - y^3", "x*y^2")).unwrap();
        for from in ChartId::ALL {
            for to in ChartId::ALL {
                let c = chart_transition(&pf, from, to).unwrap();
                assert!(c.same_foliation(pf.chart(to)), "{from} -> {to}");
            }
        }
    }

    #[test]
    fn bezout_counts() {
        assert_eq!(bezout_count(&projectivize(&form("-y", "x")).unwrap()).unwrap(), 1);
        assert_eq!(bezout_count(&projectivize(&form("1", "0")).unwrap()).unwrap(), 1);
        assert_eq!(bezout_count(&projectivize(&form("x*y - 1", "y - x^2")).unwrap()).unwrap(), 3);
        assert_eq!(bezout_count(&projectivize(&form("x^2 - y^3", "x*y^2")).unwrap()).unwrap(), 7);
    }
}
