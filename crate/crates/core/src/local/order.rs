use std::cmp::Ordering;

use crate::algebra::{Monomial, Var};

/// Lexicographic order with an explicit variable precedence. Variables not
/// listed rank below every listed one, in their natural order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermOrder {
    precedence: Vec<Var>,
}

impl TermOrder {
    pub fn lex(precedence: &[Var]) -> Self {
        let mut list: Vec<Var> = Vec::new();
        for v in precedence {
            if !list.contains(v) {
                list.push(*v);
            }
        }
        TermOrder { precedence: list }
    }

    pub fn precedence(&self) -> &[Var] {
        &self.precedence
    }

    fn sequence(&self) -> impl Iterator<Item = Var> + '_ {
        self.precedence
            .iter()
            .copied()
            .chain(Var::ALL.into_iter().filter(|v| !self.precedence.contains(v)))
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for v in self.sequence() {
            match a.exp(v).cmp(&b.exp(v)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl Default for TermOrder {
    fn default() -> Self {
        TermOrder::lex(&[Var::X, Var::Y])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_monomial(rng: &mut ChaCha8Rng) -> Monomial {
        Monomial::from_pairs(&[
            (Var::X, rng.gen_range(0..4)),
            (Var::Y, rng.gen_range(0..4)),
            (Var::Z, rng.gen_range(0..3)),
        ])
    }

    #[test]
    fn lex_precedence() {
        let o = TermOrder::lex(&[Var::Y, Var::X]);
        let xy = Monomial::from_pairs(&[(Var::X, 5)]);
        let y = Monomial::var(Var::Y);
        assert_eq!(o.cmp(&y, &xy), Ordering::Greater);
        assert_eq!(TermOrder::default().cmp(&y, &xy), Ordering::Less);
    }

    #[test]
    fn multiplicative_and_total() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let o = TermOrder::lex(&[Var::Z, Var::X, Var::Y]);
        for _ in 0..500 {
            let (u, v, w) = (
                random_monomial(&mut rng),
                random_monomial(&mut rng),
                random_monomial(&mut rng),
            );
            assert_eq!(o.cmp(&u, &v), o.cmp(&w.mul(&u), &w.mul(&v)));
            assert_eq!(o.cmp(&u, &v) == Ordering::Equal, u == v);
            assert_eq!(o.cmp(&u, &v), o.cmp(&v, &u).reverse());
        }
    }
}
