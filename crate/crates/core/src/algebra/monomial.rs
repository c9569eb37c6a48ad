use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

pub const NVARS: usize = 10;

/// The fixed global symbol table. Declaration order is the printing precedence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
    T,
    S,
    U,
    W,
    Z1,
    Z2,
    Z3,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::X,
        Var::Y,
        Var::Z,
        Var::T,
        Var::S,
        Var::U,
        Var::W,
        Var::Z1,
        Var::Z2,
        Var::Z3,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Var {
        Var::ALL[i]
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::T => "t",
            Var::S => "s",
            Var::U => "u",
            Var::W => "w",
            Var::Z1 => "Z1",
            Var::Z2 => "Z2",
            Var::Z3 => "Z3",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = Error;
    fn from_str(s: &str) -> Result<Var, Error> {
        Var::ALL
            .iter()
            .copied()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown variable `{s}`")))
    }
}

/// Exponent vector over the global symbol table.
///
/// `Ord` is graded lexicographic with `x > y > z > … > Z3`; the greatest
/// monomial of a polynomial is printed first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        let mut m = [0; NVARS];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn from_pairs(pairs: &[(Var, u32)]) -> Self {
        let mut m = Monomial::one();
        for &(v, e) in pairs {
            m.0[v.index()] += e;
        }
        m
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            *a += b;
        }
        Monomial(m)
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, if divisible.
    pub fn quotient_of(&self, o: &Monomial) -> Option<Monomial> {
        if !self.divides(o) {
            return None;
        }
        let mut m = o.0;
        for (a, b) in m.iter_mut().zip(self.0.iter()) {
            *a -= b;
        }
        Some(Monomial(m))
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            *a = (*a).max(*b);
        }
        Monomial(m)
    }

    pub fn is_coprime(&self, o: &Monomial) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| Var::from_index(i))
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for v in self.vars() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            match self.exp(v) {
                1 => write!(f, "{v}")?,
                e => write!(f, "{v}^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_precedence() {
        let x = Monomial::var(Var::X);
        let y = Monomial::var(Var::Y);
        let y2 = Monomial::var_pow(Var::Y, 2);
        assert!(x > y);
        assert!(y2 > x);
        assert!(Monomial::from_pairs(&[(Var::X, 1), (Var::Y, 1)]) < Monomial::var_pow(Var::X, 2));
    }

    #[test]
    fn division_and_lcm() {
        let a = Monomial::from_pairs(&[(Var::X, 2), (Var::Y, 1)]);
        let b = Monomial::from_pairs(&[(Var::X, 1)]);
        assert!(b.divides(&a));
        assert_eq!(b.quotient_of(&a).unwrap().to_string(), "x*y");
        assert_eq!(a.lcm(&Monomial::var_pow(Var::Y, 3)).to_string(), "x^2*y^3");
        assert_eq!("Z2".parse::<Var>().unwrap(), Var::Z2);
        assert!("q".parse::<Var>().is_err());
    }
}
