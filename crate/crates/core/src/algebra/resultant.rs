use super::monomial::Var;
use super::poly::MultiPoly;
use crate::error::{Error, Result};

/// Sylvester resultant of `p` and `q` with respect to `v`.
///
/// Rows of `p`'s coefficients come first, highest power leftmost, so
/// `Res_x(x, x - 1) = -1`.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<MultiPoly> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::InvalidInput("resultant of a zero polynomial".into()));
    }
    let m = p.degree_in(v).unwrap_or(0) as usize;
    let n = q.degree_in(v).unwrap_or(0) as usize;
    if m == 0 && n == 0 {
        return Err(Error::ConstantInVariable(v.to_string()));
    }
    let pc = p.coefficients_in(v);
    let qc = q.coefficients_in(v);
    let size = m + n;
    let mut mat = vec![vec![MultiPoly::zero(); size]; size];
    for row in 0..n {
        for k in 0..=m {
            mat[row][row + k] = pc[m - k].clone();
        }
    }
    for row in 0..m {
        for k in 0..=n {
            mat[n + row][row + k] = qc[n - k].clone();
        }
    }
    Ok(determinant(mat))
}

/// Fraction-free (Bareiss) determinant over the polynomial ring.
pub fn determinant(mut a: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let n = a.len();
    if n == 0 {
        return MultiPoly::one();
    }
    let mut sign = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return MultiPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.divide_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = MultiPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::test_support::p;

    #[test]
    fn sylvester_examples() {
        assert_eq!(resultant(&p("y - x^2"), &p("1 - x*y"), Var::Y).unwrap(), p("1 - x^3"));
        assert_eq!(resultant(&p("x"), &p("x - 1"), Var::X).unwrap(), p("-1"));
        assert_eq!(resultant(&p("y^2"), &p("y"), Var::Y).unwrap(), MultiPoly::zero());
    }

    #[test]
    fn constant_inputs_rejected() {
        assert!(matches!(
            resultant(&p("x"), &p("x + 1"), Var::Y),
            Err(Error::ConstantInVariable(_))
        ));
    }

    #[test]
    fn determinant_with_pivoting() {
        let m = vec![
            vec![p("0"), p("1")],
            vec![p("1"), p("0")],
        ];
        assert_eq!(determinant(m), p("-1"));
    }
}
