use num_complex::Complex64;
use num_traits::Zero;

use super::form::AffineFoliation1Form;
use super::numeric::{unipoly_roots, CLUSTER_DISTANCE};
use crate::algebra::roots::rational_roots;
use crate::algebra::{gcd, GaussRational, MultiPoly, UniPoly, Var};
use crate::error::{Error, Result};
use crate::local::{
    eliminant, local_intersection_multiplicity, quotient_dimension_in, squarefree_layers, QuotientAlgebra,
    QuotientDimension,
};

const PAIR_RESIDUAL: f64 = 1e-6;
const DEGENERACY: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct RationalPoint {
    pub point: [GaussRational; 2],
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NumericPoint {
    pub point: [Complex64; 2],
    pub multiplicity: usize,
    /// Largest relative residual of `A`, `B` at the point.
    pub residual: f64,
    /// `|det J|` clearly away from zero.
    pub nondegenerate: bool,
}

/// Common zeros of `A` and `B` on one affine chart, with multiplicities.
#[derive(Debug, Clone)]
pub struct SingularLocus {
    pub vars: (Var, Var),
    pub rational_points: Vec<RationalPoint>,
    pub numeric_points: Vec<NumericPoint>,
    /// Eliminants `(r_p, r_q)` generating `(A, B) ∩ k[p]` and `(A, B) ∩ k[q]`.
    pub elimination_polys: (MultiPoly, MultiPoly),
    pub total_multiplicity: usize,
}

impl SingularLocus {
    pub fn point_count(&self) -> usize {
        self.rational_points.len() + self.numeric_points.len()
    }
}

/// Evaluates at a complex point, returning the value and the scale
/// `Σ |c|·|x|^i·|y|^j`.
pub fn eval_complex(p: &MultiPoly, x: Complex64, y: Complex64) -> (Complex64, f64) {
    let mut val = Complex64::zero();
    let mut scale = 0.0;
    for (m, c) in p.terms() {
        let t = c.to_complex() * x.powu(m.exp(Var::X)) * y.powu(m.exp(Var::Y));
        scale += c.to_complex().norm() * x.norm().powi(m.exp(Var::X) as i32) * y.norm().powi(m.exp(Var::Y) as i32);
        val += t;
    }
    (val, scale)
}

fn relative(p: &MultiPoly, x: Complex64, y: Complex64) -> f64 {
    let (v, s) = eval_complex(p, x, y);
    if s == 0.0 {
        v.norm()
    } else {
        v.norm() / s
    }
}

struct Jacobian {
    ax: MultiPoly,
    ay: MultiPoly,
    bx: MultiPoly,
    by: MultiPoly,
}

impl Jacobian {
    fn new(a: &MultiPoly, b: &MultiPoly) -> Self {
        Jacobian {
            ax: a.derivative(Var::X),
            ay: a.derivative(Var::Y),
            bx: b.derivative(Var::X),
            by: b.derivative(Var::Y),
        }
    }

    fn at(&self, x: Complex64, y: Complex64) -> ([Complex64; 4], f64) {
        let e = |p: &MultiPoly| eval_complex(p, x, y);
        let (ax, s1) = e(&self.ax);
        let (ay, s2) = e(&self.ay);
        let (bx, s3) = e(&self.bx);
        let (by, s4) = e(&self.by);
        ([ax, ay, bx, by], (s1 + s2) * (s3 + s4))
    }
}

fn newton_polish(a: &MultiPoly, b: &MultiPoly, jac: &Jacobian, mut x: Complex64, mut y: Complex64) -> (Complex64, Complex64) {
    for _ in 0..8 {
        let (fa, _) = eval_complex(a, x, y);
        let (fb, _) = eval_complex(b, x, y);
        let ([ax, ay, bx, by], _) = jac.at(x, y);
        let det = ax * by - ay * bx;
        if det.norm() == 0.0 {
            break;
        }
        let dx = (fa * by - fb * ay) / det;
        let dy = (ax * fb - bx * fa) / det;
        if !(dx.re.is_finite() && dx.im.is_finite() && dy.re.is_finite() && dy.im.is_finite()) {
            break;
        }
        x -= dx;
        y -= dy;
        if dx.norm() + dy.norm() < 1e-15 * (1.0 + x.norm() + y.norm()) {
            break;
        }
    }
    (x, y)
}

fn univariate(p: &MultiPoly, v: Var) -> Result<UniPoly> {
    UniPoly::from_multi(p, v)
}

/// Singular points of `ω` on its chart: exact points in ℚ(i)², numeric
/// approximations for the rest, all with multiplicities.
pub fn singular_locus(form: &AffineFoliation1Form) -> Result<SingularLocus> {
    let w = form.to_xy();
    let (a, b) = (w.a().clone(), w.b().clone());
    let common = gcd(&a, &b);
    if !common.is_constant() {
        return Err(Error::CommonFactor {
            factor: common.to_string(),
        });
    }
    let ring = [Var::X, Var::Y];
    let total = match quotient_dimension_in(&[a.clone(), b.clone()], &ring) {
        QuotientDimension::Finite(n) => n,
        QuotientDimension::Infinite => {
            return Err(Error::NonIsolated("the common zero set is a curve".into()))
        }
    };
    if total == 0 {
        return Ok(SingularLocus {
            vars: form.vars(),
            rational_points: vec![],
            numeric_points: vec![],
            elimination_polys: (MultiPoly::one(), MultiPoly::one()),
            total_multiplicity: 0,
        });
    }
    let gens = [a.clone(), b.clone()];
    let rx = eliminant(&gens, Var::X)?;
    let ry = eliminant(&gens, Var::Y)?;

    let mut rational: Vec<RationalPoint> = Vec::new();
    let mut approx: Vec<(Complex64, Complex64)> = Vec::new();

    let split_x = rational_roots(&univariate(&rx, Var::X)?);
    for (alpha, _) in &split_x.roots {
        let ax = univariate(&a.eval_partial(&[(Var::X, alpha.clone())]), Var::Y)?;
        let bx = univariate(&b.eval_partial(&[(Var::X, alpha.clone())]), Var::Y)?;
        let g = ax.gcd(&bx);
        let split_y = rational_roots(&g);
        for (beta, _) in &split_y.roots {
            let point = [alpha.clone(), beta.clone()];
            let moved = w.translate(&point);
            let mult = local_intersection_multiplicity(moved.a(), moved.b())?;
            rational.push(RationalPoint {
                point,
                multiplicity: mult,
            });
        }
        if split_y.has_remainder() {
            for eta in unipoly_roots(&split_y.remainder)? {
                approx.push((alpha.to_complex(), eta));
            }
        }
    }
    if split_x.has_remainder() {
        let xis = unipoly_roots(&split_x.remainder)?;
        let etas = unipoly_roots(&univariate(&ry, Var::Y)?)?;
        for xi in &xis {
            for eta in &etas {
                if relative(&a, *xi, *eta) < PAIR_RESIDUAL && relative(&b, *xi, *eta) < PAIR_RESIDUAL {
                    approx.push((*xi, *eta));
                }
            }
        }
    }

    let jac = Jacobian::new(&a, &b);
    let mut numeric: Vec<NumericPoint> = Vec::new();
    for (x0, y0) in approx {
        let (x, y) = newton_polish(&a, &b, &jac, x0, y0);
        let (x, y) = if (x - x0).norm() + (y - y0).norm() > 1e-4 { (x0, y0) } else { (x, y) };
        if numeric
            .iter()
            .any(|p| (p.point[0] - x).norm() + (p.point[1] - y).norm() < CLUSTER_DISTANCE)
        {
            continue;
        }
        let ([ax, ay, bx, by], scale) = jac.at(x, y);
        let det = ax * by - ay * bx;
        let nondegenerate = det.norm() > DEGENERACY * scale.max(1e-300);
        numeric.push(NumericPoint {
            point: [x, y],
            multiplicity: usize::from(nondegenerate),
            residual: relative(&a, x, y).max(relative(&b, x, y)),
            nondegenerate,
        });
    }

    let known: usize = rational.iter().map(|p| p.multiplicity).sum::<usize>()
        + numeric.iter().filter(|p| p.nondegenerate).count();
    let degenerate: Vec<usize> = (0..numeric.len()).filter(|&k| !numeric[k].nondegenerate).collect();
    match degenerate.as_slice() {
        [] => {}
        [k] => numeric[*k].multiplicity = total.saturating_sub(known),
        _ => {
            let pts: Vec<[Complex64; 2]> = numeric.iter().map(|p| p.point).collect();
            let mults = multiplicities_by_trace(&a, &b, &pts, &rational)?;
            for k in degenerate {
                numeric[k].multiplicity = mults[k];
            }
        }
    }
    let found: usize = rational.iter().map(|p| p.multiplicity).sum::<usize>()
        + numeric.iter().map(|p| p.multiplicity).sum::<usize>();
    if found != total {
        return Err(Error::Internal(format!(
            "singular points account for multiplicity {found}, quotient has dimension {total}"
        )));
    }

    rational.sort_by(|p, q| {
        let key = |r: &RationalPoint| {
            (
                r.point[0].re.clone(),
                r.point[0].im.clone(),
                r.point[1].re.clone(),
                r.point[1].im.clone(),
            )
        };
        key(p).cmp(&key(q))
    });
    numeric.sort_by(|p, q| {
        if (p.point[0] - q.point[0]).norm() < CLUSTER_DISTANCE {
            p.point[1].re.total_cmp(&q.point[1].re).then(p.point[1].im.total_cmp(&q.point[1].im))
        } else {
            p.point[0].re.total_cmp(&q.point[0].re).then(p.point[0].im.total_cmp(&q.point[0].im))
        }
    });

    let (p, q) = form.vars();
    Ok(SingularLocus {
        vars: form.vars(),
        rational_points: rational,
        numeric_points: numeric,
        elimination_polys: (rx.rename(&[(Var::X, p)]), ry.rename(&[(Var::Y, q)])),
        total_multiplicity: total,
    })
}

/// Multiplicities of numeric points read off the characteristic polynomial
/// of multiplication by a separating linear form on `k[x,y]/(A, B)`, whose
/// roots are the values of the form at the points, repeated by multiplicity.
fn multiplicities_by_trace(
    a: &MultiPoly,
    b: &MultiPoly,
    points: &[[Complex64; 2]],
    rational: &[RationalPoint],
) -> Result<Vec<usize>> {
    let alg = QuotientAlgebra::new(&[a.clone(), b.clone()])?;
    let mut all: Vec<[Complex64; 2]> = points.to_vec();
    all.extend(rational.iter().map(|r| [r.point[0].to_complex(), r.point[1].to_complex()]));
    let c = (1..50)
        .map(|c| c as f64)
        .find(|c| {
            let vals: Vec<Complex64> = all.iter().map(|p| p[0] + p[1] * *c).collect();
            vals.iter().enumerate().all(|(i, u)| vals[..i].iter().all(|w| (u - w).norm() > 1e-4))
        })
        .ok_or_else(|| Error::Unsupported("no separating linear form".into()))?;
    let ell = &MultiPoly::var(Var::X) + &MultiPoly::var(Var::Y).scale(&GaussRational::from_int(c as i64));
    let chi = alg.multiplication_matrix(&ell)?.characteristic_polynomial();
    let layers = squarefree_layers(&chi);
    Ok(points
        .iter()
        .map(|p| {
            let t = p[0] + p[1] * c;
            layers
                .iter()
                .filter(|(f, _)| {
                    let scale: f64 = f
                        .coeffs()
                        .iter()
                        .enumerate()
                        .map(|(k, c)| c.to_complex().norm() * t.norm().powi(k as i32))
                        .sum();
                    f.eval_complex(t).norm() <= 1e-6 * scale
                })
                .map(|(_, k)| *k)
                .max()
                .unwrap_or(0)
        })
        .collect())
}
