//! Quotient dimensions, local intersection numbers and residues at the origin.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::groebner::{groebner_lex, groebner_lex_plain, standard_monomials};
use super::jets::{Jet, TruncatedBasis};
use super::order::TermOrder;
use crate::algebra::{gcd, resultant, GaussRational, Monomial, MultiPoly, UniPoly, Var};
use crate::error::{Error, Result};

pub const DEFAULT_SEED: u64 = 0x5eed;
const JET_LIMIT: u32 = 512;
const TRIALS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientDimension {
    Finite(usize),
    Infinite,
}

impl QuotientDimension {
    pub fn finite(self) -> Option<usize> {
        match self {
            QuotientDimension::Finite(n) => Some(n),
            QuotientDimension::Infinite => None,
        }
    }
}

fn ring_of(gens: &[MultiPoly]) -> Vec<Var> {
    let mut vars: Vec<Var> = gens.iter().flat_map(|g| g.variables()).collect();
    vars.sort();
    vars.dedup();
    vars
}

/// `dim k[vars]/(gens)` over the variables occurring in `gens`.
pub fn quotient_dimension(gens: &[MultiPoly]) -> QuotientDimension {
    quotient_dimension_in(gens, &ring_of(gens))
}

/// `dim k[vars]/(gens)` over an explicit ring.
pub fn quotient_dimension_in(gens: &[MultiPoly], vars: &[Var]) -> QuotientDimension {
    let nonzero: Vec<MultiPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return if vars.is_empty() {
            QuotientDimension::Finite(1)
        } else {
            QuotientDimension::Infinite
        };
    }
    let basis = groebner_lex_plain(&nonzero, &TermOrder::lex(vars));
    match standard_monomials(&basis, vars) {
        Some(s) => QuotientDimension::Finite(s.len()),
        None => QuotientDimension::Infinite,
    }
}

/// A generator of the elimination ideal in one variable, with cofactors
/// relative to the input generators.
#[derive(Debug, Clone)]
pub struct Elimination {
    pub generator: MultiPoly,
    pub cofactors: Vec<MultiPoly>,
}

/// Monic generator of `(gens) ∩ k[keep]`.
pub fn elimination_generator(gens: &[MultiPoly], keep: Var) -> Result<Elimination> {
    let mut vars = ring_of(gens);
    if !vars.contains(&keep) {
        vars.push(keep);
    }
    let mut precedence: Vec<Var> = vars.iter().copied().filter(|v| *v != keep).collect();
    precedence.push(keep);
    let order = TermOrder::lex(&precedence);
    let basis = groebner_lex(gens, &order);
    if standard_monomials(&basis, &vars).is_none() {
        return Err(Error::PositiveDimensional);
    }
    let cof = basis.cofactors.expect("tracked");
    // The reduced lex basis ends with the unique element free of the others.
    let k = basis
        .generators
        .iter()
        .position(|g| g.variables().iter().all(|v| *v == keep))
        .ok_or_else(|| Error::Internal("zero-dimensional basis without an eliminant".into()))?;
    Ok(Elimination {
        generator: basis.generators[k].clone(),
        cofactors: cof[k].clone(),
    })
}

/// Monic generator of `(gens) ∩ k[keep]`, without cofactors.
pub fn eliminant(gens: &[MultiPoly], keep: Var) -> Result<MultiPoly> {
    let mut vars = ring_of(gens);
    if !vars.contains(&keep) {
        vars.push(keep);
    }
    let mut precedence: Vec<Var> = vars.iter().copied().filter(|v| *v != keep).collect();
    precedence.push(keep);
    let basis = groebner_lex_plain(gens, &TermOrder::lex(&precedence));
    if standard_monomials(&basis, &vars).is_none() {
        return Err(Error::PositiveDimensional);
    }
    basis
        .generators
        .into_iter()
        .find(|g| g.variables().iter().all(|v| *v == keep))
        .ok_or_else(|| Error::Internal("zero-dimensional basis without an eliminant".into()))
}

fn vanishes_at_origin(p: &MultiPoly) -> bool {
    p.eval_at_origin().is_zero()
}

/// Removes `gcd(f, g)` when it is a unit at the origin, and reports it
/// otherwise.
fn strip_common_factor(f: &MultiPoly, g: &MultiPoly) -> Result<(MultiPoly, MultiPoly, MultiPoly)> {
    let h = gcd(f, g);
    if h.is_constant() {
        return Ok((f.clone(), g.clone(), MultiPoly::one()));
    }
    if vanishes_at_origin(&h) {
        return Err(Error::InfiniteMultiplicity {
            factor: h.to_string(),
        });
    }
    Ok((
        f.divide_exact(&h).expect("gcd divides"),
        g.divide_exact(&h).expect("gcd divides"),
        h,
    ))
}

/// `[f, g]₀`, the dimension of the local algebra `O₀/(f, g)`, computed with
/// the default seed.
pub fn local_intersection_multiplicity(f: &MultiPoly, g: &MultiPoly) -> Result<usize> {
    local_intersection_multiplicity_seeded(f, g, &mut ChaCha8Rng::seed_from_u64(DEFAULT_SEED))
}

/// Order at 0 of `Res_y(f, g)` after random invertible linear changes of
/// coordinates, minimized over several draws.
pub fn local_intersection_multiplicity_seeded<R: Rng>(f: &MultiPoly, g: &MultiPoly, rng: &mut R) -> Result<usize> {
    check_plane(&[f, g])?;
    if !vanishes_at_origin(f) || !vanishes_at_origin(g) {
        return Ok(0);
    }
    let (f, g, _) = strip_common_factor(f, g)?;
    let mut best: Option<usize> = None;
    let mut attempts = 0;
    let mut done = 0;
    while done < TRIALS {
        attempts += 1;
        if attempts > 64 {
            return Err(Error::Internal("no admissible linear change found".into()));
        }
        let a = GaussRational::from_int(rng.gen_range(-9..=9));
        let b = GaussRational::from_int(rng.gen_range(-9..=9));
        if a.is_zero() || (&a * &b).is_one() {
            continue;
        }
        let change = [
            (Var::X, &MultiPoly::var(Var::X) + &MultiPoly::var(Var::Y).scale(&a)),
            (Var::Y, &MultiPoly::var(Var::Y) + &MultiPoly::var(Var::X).scale(&b)),
        ];
        let (fc, gc) = (f.compose(&change), g.compose(&change));
        let lead_const = |p: &MultiPoly| p.coefficients_in(Var::Y).last().is_some_and(|c| c.is_constant());
        if !lead_const(&fc) || !lead_const(&gc) {
            continue;
        }
        let r = resultant(&fc, &gc, Var::Y)?;
        if r.is_zero() {
            return Err(Error::Internal("resultant of coprime polynomials vanished".into()));
        }
        let order = r.valuation_in(Var::X) as usize;
        best = Some(best.map_or(order, |b: usize| b.min(order)));
        done += 1;
    }
    Ok(best.expect("at least one trial"))
}

/// `[f, g]₀` as `dim k[x,y]/(f, g, x^a, y^b)`, where `x^a·u(x)` and `y^b·v(y)`
/// generate the elimination ideals.
pub fn local_intersection_multiplicity_by_localization(f: &MultiPoly, g: &MultiPoly) -> Result<usize> {
    check_plane(&[f, g])?;
    if !vanishes_at_origin(f) || !vanishes_at_origin(g) {
        return Ok(0);
    }
    let (f, g, _) = strip_common_factor(f, g)?;
    let gens = [f.clone(), g.clone()];
    let a = elimination_generator(&gens, Var::X)?.generator.valuation_in(Var::X);
    let b = elimination_generator(&gens, Var::Y)?.generator.valuation_in(Var::Y);
    let local = [
        f,
        g,
        MultiPoly::term(GaussRational::one(), Monomial::var_pow(Var::X, a)),
        MultiPoly::term(GaussRational::one(), Monomial::var_pow(Var::Y, b)),
    ];
    quotient_dimension_in(&local, &[Var::X, Var::Y])
        .finite()
        .ok_or_else(|| Error::Internal("localized ideal is not zero-dimensional".into()))
}

fn check_plane(ps: &[&MultiPoly]) -> Result<()> {
    for p in ps {
        if p.variables().iter().any(|v| *v != Var::X && *v != Var::Y) {
            return Err(Error::InvalidInput(format!(
                "{p} is not a polynomial in x, y"
            )));
        }
    }
    Ok(())
}

fn mul_truncated(p: &MultiPoly, q: &MultiPoly, a: u32, b: u32) -> MultiPoly {
    let bounds = [(Var::X, a), (Var::Y, b)];
    let mut out = MultiPoly::zero();
    for (m, c) in p.truncate(&bounds).terms() {
        for (n, d) in q.truncate(&bounds).terms() {
            let k = m.mul(n);
            if k.exp(Var::X) < a && k.exp(Var::Y) < b {
                out.add_term(k, &(c * d));
            }
        }
    }
    out
}

/// Truncated inverse of a unit power series in `x, y`.
fn inverse_truncated(h: &MultiPoly, a: u32, b: u32) -> MultiPoly {
    let c0 = h.eval_at_origin().inv().expect("unit at the origin");
    // 1/h = c0·Σ eᵏ with e = 1 − c0·h free of constant term.
    let e = &MultiPoly::one() - &h.scale(&c0);
    let mut acc = MultiPoly::one();
    let mut power = MultiPoly::one();
    for _ in 0..(a + b) {
        power = mul_truncated(&power, &e, a, b);
        if power.is_zero() {
            break;
        }
        acc = &acc + &power;
    }
    acc.scale(&c0)
}

/// `Res₀{ h dx∧dy / (F·G) }` from a standard basis of the local algebra.
///
/// `x^a = P₁F + Q₁G` and `y^b = P₂F + Q₂G` modulo `m^K`, with `m^s ⊂ (F, G)`
/// and `K ≥ s + a + b − 1`. The residue is the coefficient of `x^{a−1}y^{b−1}`
/// in `h·(P₁Q₂ − Q₁P₂)`.
pub fn grothendieck_residue(h: &MultiPoly, f: &MultiPoly, g: &MultiPoly) -> Result<GaussRational> {
    check_plane(&[h, f, g])?;
    if !vanishes_at_origin(f) || !vanishes_at_origin(g) {
        return Err(Error::NotACommonZero);
    }
    let common = gcd(f, g);
    if !common.is_constant() && vanishes_at_origin(&common) {
        return Err(Error::NonIsolated(format!("common factor {common} through the origin")));
    }
    let mut bound = 8;
    loop {
        if bound > JET_LIMIT {
            return Err(Error::Internal("local algebra exceeds the jet limit".into()));
        }
        let tb = TruncatedBasis::compute(f, g, bound);
        let Some(s) = tb.socle_bound() else {
            bound *= 2;
            continue;
        };
        let a = (1..=s).find(|&k| tb.express((k, 0)).is_some()).expect("x^s is a member");
        let b = (1..=s).find(|&k| tb.express((0, k)).is_some()).expect("y^s is a member");
        if bound < s + a + b - 1 {
            bound = s + a + b - 1;
            continue;
        }
        let [p1, q1] = tb.express((a, 0)).expect("member");
        let [p2, q2] = tb.express((0, b)).expect("member");
        let det = p1.mul_box(&q2, a, b).sub(&q1.mul_box(&p2, a, b), a + b);
        let total = Jet::from_poly(h, a + b).mul_box(&det, a, b);
        return Ok(total.coeff((a - 1, b - 1)));
    }
}

/// The same residue through global lex elimination generators.
pub fn grothendieck_residue_by_elimination(h: &MultiPoly, f: &MultiPoly, g: &MultiPoly) -> Result<GaussRational> {
    check_plane(&[h, f, g])?;
    if !vanishes_at_origin(f) || !vanishes_at_origin(g) {
        return Err(Error::NotACommonZero);
    }
    let common = gcd(f, g);
    if !common.is_constant() && vanishes_at_origin(&common) {
        return Err(Error::NonIsolated(format!("common factor {common} through the origin")));
    }
    let (f, g) = if common.is_constant() {
        (f.clone(), g.clone())
    } else {
        (
            f.divide_exact(&common).expect("gcd divides"),
            g.divide_exact(&common).expect("gcd divides"),
        )
    };
    let gens = [f, g];
    let ex = elimination_generator(&gens, Var::X)?;
    let ey = elimination_generator(&gens, Var::Y)?;
    let a = ex.generator.valuation_in(Var::X);
    let b = ey.generator.valuation_in(Var::Y);
    let u = UniPoly::from_multi(&ex.generator.shift_down(Var::X, a), Var::X)?;
    let v = UniPoly::from_multi(&ey.generator.shift_down(Var::Y, b), Var::Y)?;
    let u_inv = UniPoly::new(u.series_inverse(a as usize - 1)?).to_multi(Var::X);
    let v_inv = UniPoly::new(v.series_inverse(b as usize - 1)?).to_multi(Var::Y);

    let (p, q) = (&ex.cofactors[0], &ex.cofactors[1]);
    let (r, s) = (&ey.cofactors[0], &ey.cofactors[1]);
    let det = &mul_truncated(p, s, a, b) - &mul_truncated(q, r, a, b);
    let mut integrand = mul_truncated(h, &det, a, b);
    if !common.is_constant() {
        // (F, G) = common·(F', G'): the determinant picks up common⁻².
        let inv = inverse_truncated(&common, a, b);
        integrand = mul_truncated(&mul_truncated(&integrand, &inv, a, b), &inv, a, b);
    }
    let total = mul_truncated(&mul_truncated(&integrand, &u_inv, a, b), &v_inv, a, b);
    Ok(total.coeff(&Monomial::from_pairs(&[(Var::X, a - 1), (Var::Y, b - 1)])))
}

/// Coefficient of `w⁻¹` in the Laurent expansion at 0 of `num/den`, both
/// polynomials in one common variable.
pub fn series_residue(num: &MultiPoly, den: &MultiPoly) -> Result<GaussRational> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator("series residue with zero denominator".into()));
    }
    let mut vars: Vec<Var> = num.variables();
    vars.extend(den.variables());
    vars.sort();
    vars.dedup();
    let w = match vars.as_slice() {
        [] => return Ok(GaussRational::zero()),
        [w] => *w,
        _ => {
            return Err(Error::InvalidInput(format!(
                "series residue needs one variable, found {}",
                vars.len()
            )))
        }
    };
    let n = UniPoly::from_multi(num, w)?;
    let d = UniPoly::from_multi(den, w)?;
    let k = d.valuation();
    if k == 0 {
        return Ok(GaussRational::zero());
    }
    let inv = d.shift_down(k).series_inverse(k - 1)?;
    let mut acc = GaussRational::zero();
    for i in 0..k {
        acc += &(&n.coeff(i) * &inv[k - 1 - i]);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::test_support::p;

    fn q(n: i64, d: i64) -> GaussRational {
        GaussRational::from_ratio(n, d)
    }

    #[test]
    fn quotient_dimensions() {
        assert_eq!(quotient_dimension(&[p("x"), p("y")]), QuotientDimension::Finite(1));
        assert_eq!(quotient_dimension(&[p("x*y^2"), p("y^3 - x^2")]), QuotientDimension::Finite(7));
        assert_eq!(quotient_dimension(&[p("x^2"), p("y^3")]), QuotientDimension::Finite(6));
        assert_eq!(quotient_dimension(&[p("x*y"), p("x^2")]), QuotientDimension::Infinite);
    }

    #[test]
    fn intersection_numbers() {
        for (f, g, n) in [("x", "y", 1), ("x", "y^2", 2), ("y - x^2", "y + x^2", 2), ("x*y^2", "y^3 - x^2", 7)] {
            assert_eq!(local_intersection_multiplicity(&p(f), &p(g)).unwrap(), n, "{f}, {g}");
            assert_eq!(local_intersection_multiplicity(&p(g), &p(f)).unwrap(), n);
            assert_eq!(local_intersection_multiplicity_by_localization(&p(f), &p(g)).unwrap(), n);
        }
    }

    #[test]
    fn intersection_ignores_distant_points() {
        // Jouanolou-type ideal: the origin is one of several zeros.
        let (f, g) = (p("y - x^2 + x"), p("x*y - x"));
        let local = local_intersection_multiplicity(&f, &g).unwrap();
        assert_eq!(local, 1);
        assert_eq!(local_intersection_multiplicity_by_localization(&f, &g).unwrap(), 1);
    }

    #[test]
    fn common_component_through_origin() {
        let err = local_intersection_multiplicity(&p("x*y"), &p("x*(y - 1)")).unwrap_err();
        assert!(matches!(err, Error::InfiniteMultiplicity { .. }));
        // A common factor away from the origin is harmless.
        assert_eq!(local_intersection_multiplicity(&p("(x - 1)*x"), &p("(x - 1)*y")).unwrap(), 1);
    }

    #[test]
    fn elimination_examples() {
        let e = elimination_generator(&[p("y - x^2"), p("1 - x*y")], Var::X).unwrap();
        assert_eq!(e.generator, p("x^3 - 1"));
        let e = elimination_generator(&[p("x"), p("y")], Var::X).unwrap();
        assert_eq!(e.generator, p("x"));
        let gens = [p("x*y^2"), p("y^3 - x^2")];
        let e = elimination_generator(&gens, Var::Y).unwrap();
        assert_eq!(e.generator, p("y^5"));
        let back = &(&e.cofactors[0] * &gens[0]) + &(&e.cofactors[1] * &gens[1]);
        assert_eq!(back, e.generator);
        assert!(matches!(
            elimination_generator(&[p("x*y")], Var::X),
            Err(Error::PositiveDimensional)
        ));
    }

    #[test]
    fn residue_examples() {
        assert_eq!(grothendieck_residue(&p("4"), &p("x"), &p("y")).unwrap(), q(4, 1));
        assert_eq!(grothendieck_residue(&p("1"), &p("2*x"), &p("-y")).unwrap(), q(-1, 2));
        assert_eq!(grothendieck_residue(&p("x"), &p("x"), &p("y")).unwrap(), q(0, 1));
        assert!(matches!(
            grothendieck_residue(&p("1"), &p("x - 1"), &p("y")),
            Err(Error::NotACommonZero)
        ));
        assert!(matches!(
            grothendieck_residue(&p("1"), &p("x*y"), &p("x")),
            Err(Error::NonIsolated(_))
        ));
    }

    #[test]
    fn residue_of_monomial_ideal() {
        // Res{ h / (x², y³) } picks the coefficient of x·y².
        assert_eq!(
            grothendieck_residue(&p("5*x*y^2 + x^2 + 7"), &p("x^2"), &p("y^3")).unwrap(),
            q(5, 1)
        );
        // Jacobian of a nondegenerate map: Res{ J / (F, G) } = 1.
        let (f, g) = (p("x + y^2"), p("y - x^3"));
        let jac = &(&f.derivative(Var::X) * &g.derivative(Var::Y)) - &(&f.derivative(Var::Y) * &g.derivative(Var::X));
        assert_eq!(grothendieck_residue(&jac, &f, &g).unwrap(), q(1, 1));
    }

    #[test]
    fn residue_of_jacobian_counts_multiplicity() {
        // Res{ Jac/(F,G) } is the local intersection number.
        let (f, g) = (p("x*y^2"), p("y^3 - x^2"));
        let jac = &(&f.derivative(Var::X) * &g.derivative(Var::Y)) - &(&f.derivative(Var::Y) * &g.derivative(Var::X));
        assert_eq!(grothendieck_residue(&jac, &f, &g).unwrap(), q(7, 1));
        let (f, g) = (p("(x - 2)*(y - x^2)"), p("(x - 2)*(y + x^2)"));
        let jac = &(&f.derivative(Var::X) * &g.derivative(Var::Y)) - &(&f.derivative(Var::Y) * &g.derivative(Var::X));
        assert_eq!(grothendieck_residue(&jac, &f, &g).unwrap(), q(2, 1));
    }

    #[test]
    fn jet_residue_agrees_with_elimination() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let term = |rng: &mut ChaCha8Rng, lo: u32, hi: u32| {
            let d = rng.gen_range(lo..=hi);
            let i = rng.gen_range(0..=d);
            MultiPoly::term(
                GaussRational::from_int(rng.gen_range(-3..=3)),
                Monomial::from_pairs(&[(Var::X, i), (Var::Y, d - i)]),
            )
        };
        for _ in 0..40 {
            let m = rng.gen_range(1..=3);
            let n = rng.gen_range(1..=3);
            let f = &(&MultiPoly::term(GaussRational::one(), Monomial::var_pow(Var::X, m)) + &term(&mut rng, 1, 3))
                + &term(&mut rng, m + 1, m + 2);
            let g = &(&MultiPoly::term(GaussRational::from_int(2), Monomial::var_pow(Var::Y, n)) + &term(&mut rng, 1, 3))
                + &term(&mut rng, n + 1, n + 2);
            let h = &(&term(&mut rng, 0, 3) + &term(&mut rng, 0, 3)) + &term(&mut rng, 0, 4);
            let fast = grothendieck_residue(&h, &f, &g);
            let slow = grothendieck_residue_by_elimination(&h, &f, &g);
            match (fast, slow) {
                (Ok(a), Ok(b)) => assert_eq!(a, b, "h = {h}, f = {f}, g = {g}"),
                (Err(_), Err(_)) => {}
                (a, b) => panic!("{a:?} vs {b:?} for h = {h}, f = {f}, g = {g}"),
            }
        }
    }

    #[test]
    fn series_residues() {
        assert_eq!(series_residue(&p("1"), &p("y")).unwrap(), q(1, 1));
        assert_eq!(series_residue(&p("-2"), &p("w")).unwrap(), q(-2, 1));
        assert_eq!(series_residue(&p("1 + w"), &p("w^2")).unwrap(), q(1, 1));
        assert_eq!(series_residue(&p("1"), &p("w^2 + w^3")).unwrap(), q(-1, 1));
        assert!(series_residue(&p("1"), &MultiPoly::zero()).is_err());
    }
}
