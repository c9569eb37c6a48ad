use num_traits::Zero;

use super::value::{jacobian_polys, IndexKind, IndexValue, JacobianData};
use crate::algebra::{GaussRational, MultiPoly, Var};
use crate::error::{Error, Result};
use crate::foliation::AffineFoliation1Form;
use crate::integral::HolomorphicFactoredIntegral;
use crate::local::{grothendieck_residue, local_intersection_multiplicity, series_residue};

/// `(tr J)²/det J` at a nondegenerate singular point.
pub fn bb_nondegenerate(j: &JacobianData) -> Result<IndexValue> {
    let v = j.trace_ratio().ok_or(Error::Degenerate)?;
    Ok(IndexValue::exact(IndexKind::BaumBott, v))
}

/// The form in `(x, y)` with `point` moved to the origin, which must be
/// singular there.
fn centered(form: &AffineFoliation1Form, point: &[GaussRational; 2]) -> Result<AffineFoliation1Form> {
    if !form.is_singular_at(point) {
        return Err(Error::NotACommonZero);
    }
    Ok(form.to_xy().translate(point))
}

/// `Res_p{ (tr J)² dx∧dy / (F·G) }` with `(F, G) = (B, −A)`.
pub fn bb_residue(form: &AffineFoliation1Form, point: &[GaussRational; 2]) -> Result<IndexValue> {
    let w = centered(form, point)?;
    let (trace, _) = jacobian_polys(w.a(), w.b());
    let f = w.b().clone();
    let g = -w.a();
    let v = grothendieck_residue(&(&trace * &trace), &f, &g)?;
    Ok(IndexValue::exact(IndexKind::BaumBott, v))
}

/// `−Σ_{i<j} (ℓᵢ − ℓⱼ)²/(ℓᵢℓⱼ)·[gᵢ, gⱼ]₀`.
pub fn bb_from_factored_integral(g: &HolomorphicFactoredIntegral) -> Result<IndexValue> {
    let bs = g.branches();
    let mut total = GaussRational::zero();
    for i in 0..bs.len() {
        for j in i + 1..bs.len() {
            let (li, lj) = (i64::from(bs[i].1), i64::from(bs[j].1));
            if li == lj {
                continue;
            }
            let meet = local_intersection_multiplicity(&bs[i].0, &bs[j].0)? as i64;
            let w = GaussRational::from_ratio((li - lj) * (li - lj) * meet, li * lj);
            total -= &w;
        }
    }
    Ok(IndexValue::exact(IndexKind::BaumBott, total))
}

/// Camacho–Sad index at the origin along the coordinate axis `{axis = 0}`.
pub fn cs_smooth_branch(form: &AffineFoliation1Form, axis: Var) -> Result<IndexValue> {
    let (p, q) = form.vars();
    // Along {p = 0}: B = p·B̃ and CS = −Res B̃(0, q)/A(0, q). The other axis
    // swaps the roles of the coefficients.
    let (tangent, transverse) = if axis == p {
        (form.a(), form.b())
    } else if axis == q {
        (form.b(), form.a())
    } else {
        return Err(Error::InvalidInput(format!(
            "{axis} is not a coordinate of chart {}",
            form.chart()
        )));
    };
    let quotient = transverse
        .divide_exact(&MultiPoly::var(axis))
        .ok_or_else(|| Error::NotInvariant {
            chart: form.chart().to_string(),
        })?;
    let on = [(axis, GaussRational::zero())];
    let den = tangent.eval_partial(&on);
    if den.is_zero() {
        return Err(Error::NonIsolated(format!("every point of {{{axis} = 0}} is singular")));
    }
    let v = series_residue(&quotient.eval_partial(&on), &den)?;
    Ok(IndexValue::exact(IndexKind::CamachoSad, -v))
}

/// `−Σ_{j≠i} (ℓⱼ/ℓᵢ)·[gᵢ, gⱼ]₀` along the branch `gᵢ`.
pub fn cs_from_factored_integral(g: &HolomorphicFactoredIntegral, i: usize) -> Result<IndexValue> {
    let bs = g.branches();
    let (gi, li) = bs
        .get(i)
        .ok_or_else(|| Error::InvalidInput(format!("branch {i} out of range")))?;
    let mut total = GaussRational::zero();
    for (j, (gj, lj)) in bs.iter().enumerate() {
        if j == i {
            continue;
        }
        let meet = local_intersection_multiplicity(gi, gj)? as i64;
        total -= &GaussRational::from_ratio(i64::from(*lj) * meet, i64::from(*li));
    }
    Ok(IndexValue::exact(IndexKind::CamachoSad, total))
}

/// Local intersection multiplicity of `A` and `B` at a singular point.
pub fn milnor_number(form: &AffineFoliation1Form, point: &[GaussRational; 2]) -> Result<IndexValue> {
    let w = centered(form, point)?;
    let mu = local_intersection_multiplicity(w.a(), w.b())?;
    Ok(IndexValue::exact(IndexKind::Milnor, GaussRational::from_int(mu as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::test_support::p;
    use crate::integral::one_form_from_factored;

    fn q(n: i64, d: i64) -> GaussRational {
        GaussRational::from_ratio(n, d)
    }

    fn origin() -> [GaussRational; 2] {
        [q(0, 1), q(0, 1)]
    }

    fn form(a: &str, b: &str) -> AffineFoliation1Form {
        AffineFoliation1Form::new(p(a), p(b)).unwrap()
    }

    fn exact(v: Result<IndexValue>) -> GaussRational {
        v.unwrap().as_exact().unwrap().clone()
    }

    #[test]
    fn nondegenerate_formula() {
        let radial = JacobianData::new([[q(1, 1), q(0, 1)], [q(0, 1), q(1, 1)]]);
        assert_eq!(exact(bb_nondegenerate(&radial)), q(4, 1));
        let j = JacobianData::new([[q(-2, 1), q(1, 1)], [q(-1, 1), q(-1, 1)]]);
        assert_eq!(exact(bb_nondegenerate(&j)), q(3, 1));
        let j = JacobianData::new([[q(2, 1), q(0, 1)], [q(0, 1), q(-1, 1)]]);
        assert_eq!(exact(bb_nondegenerate(&j)), q(-1, 2));
        let nilpotent = JacobianData::new([[q(0, 1), q(1, 1)], [q(0, 1), q(0, 1)]]);
        assert_eq!(bb_nondegenerate(&nilpotent), Err(Error::Degenerate));
    }

    #[test]
    fn residue_route() {
        assert_eq!(exact(bb_residue(&form("-y", "x"), &origin())), q(4, 1));
        assert_eq!(exact(bb_residue(&form("y", "2*x"), &origin())), q(-1, 2));
        assert_eq!(exact(bb_residue(&form("-4*x^3", "2*y"), &origin())), q(0, 1));
        assert_eq!(exact(bb_residue(&form("x^2 - y^3", "x*y^2"), &origin())), q(16, 1));
        let j = form("x*y - 1", "y - x^2");
        assert_eq!(exact(bb_residue(&j, &[q(1, 1), q(1, 1)])), q(3, 1));
        assert_eq!(bb_residue(&j, &origin()), Err(Error::NotACommonZero));
    }

    #[test]
    fn residue_route_matches_eigenvalue_formula() {
        for (a, b) in [("x + 2*y + x^2", "3*x - y + y^3"), ("i*x + y^2", "y - x*y"), ("2*y + x^3", "-x + x*y")] {
            let w = form(a, b);
            let j = JacobianData::of_form(&w, &origin()).unwrap();
            assert_eq!(bb_residue(&w, &origin()).unwrap(), bb_nondegenerate(&j).unwrap(), "{w}");
        }
    }

    #[test]
    fn factored_integral_formula() {
        let g = |bs: &[(&str, u32)]| {
            HolomorphicFactoredIntegral::new(bs.iter().map(|(s, l)| (p(s), *l)).collect()).unwrap()
        };
        assert_eq!(exact(bb_from_factored_integral(&g(&[("x", 1), ("y", 1)]))), q(0, 1));
        assert_eq!(exact(bb_from_factored_integral(&g(&[("x", 1), ("y", 2)]))), q(-1, 2));
        assert_eq!(exact(bb_from_factored_integral(&g(&[("x", 2), ("y", 1)]))), q(-1, 2));
        let tangent = g(&[("y", 1), ("y - x^2", 3)]);
        let v = exact(bb_from_factored_integral(&tangent));
        assert_eq!(v, q(-8, 3));
        assert_eq!(exact(bb_residue(&one_form_from_factored(&tangent).unwrap(), &origin())), v);
    }

    #[test]
    fn camacho_sad_along_axes() {
        assert_eq!(exact(cs_smooth_branch(&form("y", "x"), Var::X)), q(-1, 1));
        let chart2 = |a: &str, b: &str| {
            AffineFoliation1Form::with_chart(p(a), p(b), (Var::U, Var::W), "Z2").unwrap()
        };
        assert_eq!(exact(cs_smooth_branch(&chart2("w", "-2*u"), Var::U)), q(2, 1));
        assert_eq!(exact(cs_smooth_branch(&chart2("-w", "3*u"), Var::U)), q(3, 1));
        assert_eq!(exact(cs_smooth_branch(&chart2("w", "-2*u"), Var::W)), q(1, 2));
        assert!(matches!(cs_smooth_branch(&form("y", "x + y"), Var::X), Err(Error::NotInvariant { .. })));
    }

    #[test]
    fn camacho_sad_from_factored_integral() {
        let g = HolomorphicFactoredIntegral::new(vec![(p("x"), 1), (p("y"), 2)]).unwrap();
        assert_eq!(exact(cs_from_factored_integral(&g, 0)), q(-2, 1));
        assert_eq!(exact(cs_from_factored_integral(&g, 1)), q(-1, 2));
        let w = one_form_from_factored(&g).unwrap();
        assert_eq!(exact(cs_smooth_branch(&w, Var::X)), q(-2, 1));
        assert_eq!(exact(cs_smooth_branch(&w, Var::Y)), q(-1, 2));
        let xy = HolomorphicFactoredIntegral::new(vec![(p("x"), 1), (p("y"), 1)]).unwrap();
        assert_eq!(exact(cs_from_factored_integral(&xy, 0)), q(-1, 1));
    }

    #[test]
    fn milnor_numbers() {
        assert_eq!(exact(milnor_number(&form("-y", "x"), &origin())), q(1, 1));
        assert_eq!(exact(milnor_number(&form("x^2 - y^3", "x*y^2"), &origin())), q(7, 1));
        let j = form("x*y - 1", "y - x^2");
        assert_eq!(exact(milnor_number(&j, &[q(1, 1), q(1, 1)])), q(1, 1));
    }
}
