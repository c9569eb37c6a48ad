//! Exact arithmetic: Gaussian rationals, sparse polynomials, rational
//! functions and formally conjugated polynomials.

pub mod gauss;
pub mod gcd;
pub mod mixed;
pub mod monomial;
pub mod poly;
pub mod ratfunc;
pub mod resultant;
pub mod roots;
pub mod univariate;

pub use gauss::GaussRational;
pub use gcd::{gcd, gcd_all, lcm};
pub use mixed::{MixedMonomial, MixedPoly};
pub use monomial::{Monomial, Var, NVARS};
pub use poly::MultiPoly;
pub use ratfunc::{substitute, RatFunc};
pub use resultant::resultant;
pub use univariate::UniPoly;

#[cfg(test)]
pub(crate) mod test_support {
    use super::MultiPoly;

    pub fn p(s: &str) -> MultiPoly {
        s.parse().unwrap_or_else(|e| panic!("bad polynomial {s:?}: {e}"))
    }
}
