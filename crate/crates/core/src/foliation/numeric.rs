use num_complex::Complex64;

use crate::algebra::roots::{durand_kerner, relative_residual};
use crate::algebra::{MultiPoly, UniPoly};
use crate::error::{Error, Result};

pub const ROOT_RESIDUAL: f64 = 1e-10;
pub const CLUSTER_DISTANCE: f64 = 1e-8;

/// All complex roots of a univariate polynomial, each listed once, sorted by
/// real then imaginary part.
pub fn numeric_roots(p: &MultiPoly) -> Result<Vec<Complex64>> {
    let vars = p.variables();
    if vars.len() > 1 {
        return Err(Error::InvalidInput(format!("{p} is not univariate")));
    }
    if p.is_zero() {
        return Err(Error::InvalidInput("roots of the zero polynomial".into()));
    }
    let Some(&v) = vars.first() else {
        return Ok(vec![]);
    };
    unipoly_roots(&UniPoly::from_multi(p, v)?)
}

pub fn unipoly_roots(p: &UniPoly) -> Result<Vec<Complex64>> {
    let sqf = p.squarefree_part();
    let mut roots = durand_kerner(&sqf.to_complex())?;
    for z in &roots {
        if relative_residual(&sqf, *z) >= ROOT_RESIDUAL {
            return Err(Error::NonConvergence(crate::algebra::roots::MAX_ITERATIONS));
        }
    }
    sort_complex(&mut roots);
    Ok(roots)
}

pub fn sort_complex(zs: &mut [Complex64]) {
    zs.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::test_support::p;

    #[test]
    fn cube_roots_of_unity() {
        let r = numeric_roots(&p("x^3 - 1")).unwrap();
        assert_eq!(r.len(), 3);
        for z in &r {
            assert!((z.powu(3) - 1.0).norm() < 1e-10);
        }
        assert!((r[2] - 1.0).norm() < 1e-10);
    }

    #[test]
    fn small_cases() {
        let r = numeric_roots(&p("x - 2")).unwrap();
        assert!((r[0] - 2.0).norm() < 1e-12);
        let r = numeric_roots(&p("x^2 + 1")).unwrap();
        assert!((r[0] + Complex64::i()).norm() < 1e-12);
        assert!((r[1] - Complex64::i()).norm() < 1e-12);
        let r = numeric_roots(&p("(y - 1)^3*(y + 2)")).unwrap();
        assert_eq!(r.len(), 2);
        assert!(numeric_roots(&p("x*y")).is_err());
    }
}
