//! Root extraction: exact roots in ℚ(i) and simultaneous numeric iteration.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gauss::GaussRational;
use super::univariate::UniPoly;
use crate::error::{Error, Result};

pub const MAX_ITERATIONS: usize = 2000;

/// Exact roots found in ℚ(i) with their multiplicities, and the monic cofactor
/// holding every remaining root.
#[derive(Debug, Clone)]
pub struct RootSplit {
    pub roots: Vec<(GaussRational, usize)>,
    pub remainder: UniPoly,
}

/// Splits off every root of `p` lying in ℚ(i).
///
/// Degrees one and two are solved in closed form; higher degrees are sieved
/// by rationalizing numeric approximations and confirming each candidate by
/// exact evaluation.
pub fn rational_roots(p: &UniPoly) -> RootSplit {
    let mut q = p.monic();
    let mut roots: Vec<(GaussRational, usize)> = Vec::new();
    let mut push = |q: &mut UniPoly, z: GaussRational| {
        let k = q.root_multiplicity(&z);
        if k == 0 {
            return false;
        }
        for _ in 0..k {
            *q = q.div_rem(&UniPoly::linear(&z)).0;
        }
        roots.push((z, k));
        true
    };
    loop {
        match q.degree() {
            None | Some(0) => break,
            Some(1) => {
                let z = -(&q.coeff(0) / &q.coeff(1));
                push(&mut q, z);
                break;
            }
            Some(2) => {
                let (a, b, c) = (q.coeff(2), q.coeff(1), q.coeff(0));
                let disc = &(&b * &b) - &(&GaussRational::from_int(4) * &(&a * &c));
                if let Some(s) = disc.sqrt() {
                    let two_a = &GaussRational::from_int(2) * &a;
                    let z1 = &(&-&b + &s) / &two_a;
                    let z2 = &(&-&b - &s) / &two_a;
                    push(&mut q, z1);
                    push(&mut q, z2);
                }
                break;
            }
            Some(_) => {
                let sqf = q.squarefree_part();
                let Ok(approx) = durand_kerner(&sqf.to_complex()) else {
                    break;
                };
                let mut found = false;
                for z in approx {
                    if let Some(cand) = rationalize(z) {
                        if sqf.eval(&cand).is_zero() {
                            found |= push(&mut q, cand);
                        }
                    }
                }
                if !found {
                    break;
                }
            }
        }
    }
    roots.sort_by(|a, b| {
        a.0.re
            .cmp(&b.0.re)
            .then_with(|| a.0.im.cmp(&b.0.im))
    });
    RootSplit {
        roots,
        remainder: q.monic(),
    }
}

fn rationalize(z: Complex64) -> Option<GaussRational> {
    Some(GaussRational::new(
        rationalize_real(z.re)?,
        rationalize_real(z.im)?,
    ))
}

/// Best rational approximation by continued fractions with bounded denominator.
pub fn rationalize_real(v: f64) -> Option<BigRational> {
    const MAX_DEN: i128 = 1_000_000;
    if !v.is_finite() {
        return None;
    }
    let tol = 1e-9 * v.abs().max(1.0);
    if v.abs() < tol {
        return Some(BigRational::zero());
    }
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut x = v;
    for _ in 0..64 {
        let a = x.floor();
        if a.abs() > 1e15 {
            return None;
        }
        let a = a as i128;
        let h2 = a * h1 + h0;
        let k2 = a * k1 + k0;
        if k2 > MAX_DEN {
            return None;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if ((h1 as f64) / (k1 as f64) - v).abs() <= tol {
            return Some(BigRational::new(BigInt::from(h1), BigInt::from(k1)));
        }
        let frac = x - a as f64;
        if frac.abs() < 1e-300 {
            return None;
        }
        x = 1.0 / frac;
    }
    None
}

/// All complex roots of the polynomial with the given ascending coefficients,
/// by Weierstrass (Durand–Kerner) iteration from fixed starting angles,
/// followed by Newton polishing.
pub fn durand_kerner(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while c.last().is_some_and(|z| z.norm() == 0.0) {
        c.pop();
    }
    let n = match c.len() {
        0 => return Err(Error::InvalidInput("roots of the zero polynomial".into())),
        l => l - 1,
    };
    if n == 0 {
        return Ok(vec![]);
    }
    let lead = c[n];
    let c: Vec<Complex64> = c.iter().map(|z| z / lead).collect();
    if n == 1 {
        return Ok(vec![-c[0]]);
    }
    let eval = |z: Complex64| c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, a| acc * z + a);
    // Fujiwara-style radius keeps the start circle around the roots.
    let radius = (0..n)
        .map(|k| c[k].norm().powf(1.0 / (n - k) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / n as f64 + 0.4))
        .collect();
    let mut delta = f64::INFINITY;
    for _ in 0..MAX_ITERATIONS {
        delta = 0.0;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                denom = Complex64::new(1e-12, 1e-12);
            }
            let step = eval(z[i]) / denom;
            z[i] -= step;
            delta = delta.max(step.norm() / z[i].norm().max(1.0));
        }
        if delta < 1e-14 {
            break;
        }
    }
    // Stagnation at rounding level still leaves the polishing step to finish.
    if delta > 1e-6 {
        return Err(Error::NonConvergence(MAX_ITERATIONS));
    }
    let deriv: Vec<Complex64> = (1..=n).map(|k| c[k] * k as f64).collect();
    let eval_d = |w: Complex64| {
        deriv
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, a| acc * w + a)
    };
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let d = eval_d(*zi);
            if d.norm() == 0.0 {
                break;
            }
            let step = eval(*zi) / d;
            if !step.re.is_finite() || !step.im.is_finite() {
                break;
            }
            *zi -= step;
        }
    }
    Ok(z)
}

/// `|p(z)|` relative to `Σ |cₖ|·|z|^k`, the scale of the evaluation itself.
pub fn relative_residual(p: &UniPoly, z: Complex64) -> f64 {
    let scale: f64 = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c.to_complex().norm() * z.norm().powi(k as i32))
        .sum();
    p.eval_complex(z).norm() / scale.max(f64::MIN_POSITIVE)
}

impl RootSplit {
    pub fn total_exact(&self) -> usize {
        self.roots.iter().map(|(_, k)| k).sum()
    }

    pub fn has_remainder(&self) -> bool {
        self.remainder.degree().unwrap_or(0) > 0
    }
}

pub fn is_one(p: &UniPoly) -> bool {
    p.degree() == Some(0) && p.coeff(0).is_one()
}
