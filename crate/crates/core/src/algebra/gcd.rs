//! Multivariate gcd by recursive primitive remainder sequences.


use super::gauss::GaussRational;
use super::monomial::{Monomial, Var};
use super::univariate::UniPoly;
use super::poly::MultiPoly;

/// Greatest common divisor, normalized to a monic grlex leading coefficient.
/// `gcd(0, 0) = 0`.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    if let Some(g) = gcd_fast_path(a, b) {
        return g;
    }
    let v = main_var(a, b);
    match (a.contains_var(v), b.contains_var(v)) {
        (true, true) => {
            let ca = content_in(a, v);
            let cb = content_in(b, v);
            let pa = a.divide_exact(&ca).expect("content divides");
            let pb = b.divide_exact(&cb).expect("content divides");
            let c = gcd(&ca, &cb);
            let g = primitive_prs(pa, pb, v);
            (&c * &g).monic()
        }
        (true, false) => gcd(&content_in(a, v), b),
        (false, true) => gcd(a, &content_in(b, v)),
        (false, false) => unreachable!("main variable occurs in one of the inputs"),
    }
}

/// Univariate inputs go through the Euclidean algorithm. Bivariate inputs
/// that become coprime after some specialization of the minor variable have
/// a gcd free of the main variable, which is then the gcd of the contents.
fn gcd_fast_path(a: &MultiPoly, b: &MultiPoly) -> Option<MultiPoly> {
    let mut vars = a.variables();
    vars.extend(b.variables());
    vars.sort();
    vars.dedup();
    match vars.as_slice() {
        [v] => {
            let (ua, ub) = (UniPoly::from_multi(a, *v).ok()?, UniPoly::from_multi(b, *v).ok()?);
            Some(ua.gcd(&ub).to_multi(*v))
        }
        [w, v] if a.contains_var(*v) && b.contains_var(*v) => {
            let lead = a.coefficients_in(*v).pop()?;
            for k in 1..=8i64 {
                let at = [(*w, GaussRational::from_int(k))];
                if lead.eval_partial(&at).is_zero() {
                    continue;
                }
                let ua = UniPoly::from_multi(&a.eval_partial(&at), *v).ok()?;
                let ub = UniPoly::from_multi(&b.eval_partial(&at), *v).ok()?;
                if ua.gcd(&ub).degree() == Some(0) {
                    return Some(gcd(&content_in(a, *v), &content_in(b, *v)));
                }
            }
            None
        }
        _ => None,
    }
}

pub fn gcd_all<'a, I: IntoIterator<Item = &'a MultiPoly>>(it: I) -> MultiPoly {
    let mut g = MultiPoly::zero();
    for p in it {
        g = gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    g
}

pub fn lcm(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() || b.is_zero() {
        return MultiPoly::zero();
    }
    let g = gcd(a, b);
    (a * &b.divide_exact(&g).expect("gcd divides")).monic()
}

fn main_var(a: &MultiPoly, b: &MultiPoly) -> Var {
    let mut vars = a.variables();
    vars.extend(b.variables());
    vars.into_iter().max().expect("non-constant input")
}

/// gcd of the coefficients of `p` viewed as a polynomial in `v`.
pub fn content_in(p: &MultiPoly, v: Var) -> MultiPoly {
    let coeffs = p.coefficients_in(v);
    gcd_all(coeffs.iter().filter(|c| !c.is_zero()))
}

pub fn primitive_part_in(p: &MultiPoly, v: Var) -> MultiPoly {
    if p.is_zero() {
        return MultiPoly::zero();
    }
    p.divide_exact(&content_in(p, v)).expect("content divides")
}

/// Pseudo-remainder of `a` by `b` in `v`.
pub fn pseudo_remainder(a: &MultiPoly, b: &MultiPoly, v: Var) -> MultiPoly {
    let db = b.degree_in(v).unwrap_or(0);
    let bc = b.coefficients_in(v);
    let lb = bc[db as usize].clone();
    let mut r = a.clone();
    while !r.is_zero() {
        let dr = r.degree_in(v).unwrap_or(0);
        if dr < db {
            break;
        }
        let lr = r.coefficients_in(v)[dr as usize].clone();
        let shift = Monomial::var_pow(v, dr - db);
        let t = &lr * &MultiPoly::term(num_traits::One::one(), shift);
        r = &(&lb * &r) - &(&t * b);
    }
    r
}

fn primitive_prs(a: MultiPoly, b: MultiPoly, v: Var) -> MultiPoly {
    let (mut a, mut b) = if a.degree_in(v) >= b.degree_in(v) {
        (a, b)
    } else {
        (b, a)
    };
    loop {
        let r = pseudo_remainder(&a, &b, v);
        if r.is_zero() {
            return primitive_part_in(&b, v).monic();
        }
        if r.degree_in(v) == Some(0) {
            return MultiPoly::one();
        }
        a = b;
        b = primitive_part_in(&r, v).monic();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::test_support::p;

    #[test]
    fn bivariate_gcd() {
        let g = p("x*y - 1");
        let a = &g * &p("x^2 + y");
        let b = &g * &p("y^3 - x");
        assert_eq!(gcd(&a, &b), g);
        assert!(gcd(&p("x^2 - y^3"), &p("x*y^2")).is_one());
    }

    #[test]
    fn trivariate_gcd_with_content() {
        let a = p("Z3*(Z1^2*Z3 - Z2^3)");
        let b = p("Z1*Z2^2*Z3");
        let c = p("-Z1^3*Z3");
        assert_eq!(gcd_all([&a, &b, &c]), p("Z3"));
    }

    #[test]
    fn gaussian_coefficients() {
        let a = p("(x + i*y)*(x - y)");
        let b = p("(x + i*y)*(x + 2)");
        assert_eq!(gcd(&a, &b), p("x + i*y"));
    }

    #[test]
    fn lcm_of_monomials() {
        assert_eq!(lcm(&p("x^2*y"), &p("x*y^3")), p("x^2*y^3"));
    }
}
