//! Finite-dimensional quotients `k[x, y]/I` as explicit linear algebra:
//! multiplication matrices, characteristic polynomials and the splitting
//! of the zero set into exact points and a block of the remaining ones.

use num_traits::{One, Zero};

use super::groebner::{groebner_lex_plain, normal_form, standard_monomials, IdealBasis, StandardMonomialSet};
use super::order::TermOrder;
use crate::algebra::roots::rational_roots;
use crate::algebra::{GaussRational, MultiPoly, UniPoly, Var};
use crate::error::{Error, Result};

/// Dense matrix over ℚ(i), row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![GaussRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, GaussRational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix shapes");
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(l, j);
                    if !b.is_zero() {
                        let t = a * b;
                        out.data[i * o.cols + j] += &t;
                    }
                }
            }
        }
        out
    }

    /// `self + c·o`.
    pub fn add_scaled(&self, o: &Matrix, c: &GaussRational) -> Matrix {
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&o.data) {
            if !b.is_zero() {
                *a += &(c * b);
            }
        }
        out
    }

    pub fn trace(&self) -> GaussRational {
        let mut t = GaussRational::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// `p(self)` by Horner's rule.
    pub fn eval_poly(&self, p: &UniPoly) -> Matrix {
        let n = self.rows;
        let mut acc = Matrix::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self).add_scaled(&Matrix::identity(n), c);
        }
        acc
    }

    /// Reduced row echelon form and the pivot columns.
    fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let t = &f * m.get(r, j);
                    if !t.is_zero() {
                        m.data[i * m.cols + j] -= &t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns spanning the kernel.
    pub fn nullspace(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out.set(f, k, GaussRational::one());
            for (row, &p) in pivots.iter().enumerate() {
                out.set(p, k, -r.get(row, f));
            }
        }
        out
    }

    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.rows;
        if n != self.cols {
            return None;
        }
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, GaussRational::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(out)
    }

    /// The matrix `X` with `self·basis = basis·X`, for a subspace spanned by
    /// the independent columns of `basis` and invariant under `self`.
    pub fn restrict(&self, basis: &Matrix) -> Result<Matrix> {
        let (n, m) = (basis.rows, basis.cols);
        let image = self.mul(basis);
        let mut aug = Matrix::zeros(n, 2 * m);
        for i in 0..n {
            for j in 0..m {
                aug.set(i, j, basis.get(i, j).clone());
                aug.set(i, m + j, image.get(i, j).clone());
            }
        }
        let (r, pivots) = aug.rref();
        if pivots.len() != m || pivots.iter().any(|&p| p >= m) {
            return Err(Error::Internal("subspace is not invariant".into()));
        }
        let mut out = Matrix::zeros(m, m);
        for i in 0..m {
            for j in 0..m {
                out.set(i, j, r.get(i, m + j).clone());
            }
        }
        Ok(out)
    }

    /// Faddeev–LeVerrier: `det(t·I − self)`.
    pub fn characteristic_polynomial(&self) -> UniPoly {
        let n = self.rows;
        let mut coeffs = vec![GaussRational::zero(); n + 1];
        coeffs[n] = GaussRational::one();
        let mut mk = Matrix::zeros(n, n);
        for k in 1..=n {
            // M_k = M·M_{k−1} + c_{n−k+1}·I
            mk = self.mul(&mk).add_scaled(&Matrix::identity(n), &coeffs[n - k + 1]);
            let trace = self.mul(&mk).trace();
            coeffs[n - k] = -(&trace / &GaussRational::from_int(k as i64));
        }
        UniPoly::new(coeffs)
    }
}

/// Yun's square-free decomposition `f = Π fₖ^k`.
pub fn squarefree_layers(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_rem(&a0).0;
    let mut c = df.div_rem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut k = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), k));
        }
        b = b.div_rem(&a).0;
        c = d.div_rem(&a).0;
        d = c.sub(&b.derivative());
        k += 1;
    }
    out
}

/// Zeros of an ideal, split into points with coordinates in ℚ(i) and the
/// invariant subspace carried by all other points.
#[derive(Debug, Clone)]
pub struct PointBlocks {
    /// Exact points with their local multiplicities.
    pub rational: Vec<([GaussRational; 2], usize)>,
    /// Columns spanning the part of the algebra supported on the other points.
    pub irrational: Matrix,
    /// Whether every point of the irrational part has multiplicity one.
    pub irrational_simple: bool,
}

/// `k[x, y]/I` for a zero-dimensional ideal, on its standard monomial basis.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    basis: IdealBasis,
    standard: StandardMonomialSet,
}

impl QuotientAlgebra {
    pub fn new(gens: &[MultiPoly]) -> Result<Self> {
        let vars = [Var::X, Var::Y];
        if gens.iter().flat_map(|g| g.variables()).any(|v| !vars.contains(&v)) {
            return Err(Error::InvalidInput("quotient algebras are built over x, y".into()));
        }
        let basis = groebner_lex_plain(gens, &TermOrder::lex(&vars));
        let standard = standard_monomials(&basis, &vars)
            .ok_or_else(|| Error::NonIsolated("the common zero set is a curve".into()))?;
        Ok(QuotientAlgebra { basis, standard })
    }

    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    /// Matrix of `q ↦ p·q`; column `j` holds the normal form of `p·mⱼ`.
    pub fn multiplication_matrix(&self, p: &MultiPoly) -> Result<Matrix> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (j, mono) in self.standard.monomials.iter().enumerate() {
            let image = normal_form(&p.mul_monomial(mono, &GaussRational::one()), &self.basis);
            for (t, c) in image.terms() {
                let i = self
                    .standard
                    .monomials
                    .iter()
                    .position(|s| s == t)
                    .ok_or_else(|| Error::Internal("normal form outside the standard monomials".into()))?;
                m.set(i, j, c.clone());
            }
        }
        Ok(m)
    }

    /// The generalized eigenspace of multiplication by `p` for eigenvalue 0:
    /// the part of the algebra supported where `p` vanishes.
    pub fn vanishing_subspace(&self, p: &MultiPoly) -> Result<Matrix> {
        let n = self.dim();
        let m = self.multiplication_matrix(p)?;
        let mut power = Matrix::identity(n);
        for _ in 0..n.max(1) {
            power = power.mul(&m);
        }
        Ok(power.nullspace())
    }

    /// Splits the points supported on `subspace` (the whole algebra when
    /// `None`) into exact ones and the rest, using a separating linear form.
    pub fn decompose(&self, subspace: Option<&Matrix>) -> Result<PointBlocks> {
        let n = self.dim();
        let space = subspace.cloned().unwrap_or_else(|| Matrix::identity(n));
        let m = space.cols();
        if m == 0 {
            return Ok(PointBlocks {
                rational: vec![],
                irrational: Matrix::zeros(n, 0),
                irrational_simple: true,
            });
        }
        let mx = self.multiplication_matrix(&MultiPoly::var(Var::X))?.restrict(&space)?;
        let my = self.multiplication_matrix(&MultiPoly::var(Var::Y))?.restrict(&space)?;

        // Among m(m−1)/2 + 1 candidates at least one form separates the points.
        let candidates = m * (m - 1) / 2 + 1;
        let mut best: Option<(usize, Matrix, UniPoly)> = None;
        for c in 0..candidates {
            let ell = mx.add_scaled(&my, &GaussRational::from_int(c as i64));
            let chi = ell.characteristic_polynomial();
            let distinct = chi.squarefree_part().degree().unwrap_or(0);
            if best.as_ref().is_none_or(|(d, _, _)| distinct > *d) {
                best = Some((distinct, ell, chi));
            }
            if distinct == m {
                break;
            }
        }
        let (_, ell, chi) = best.expect("at least one candidate");

        let split = rational_roots(&chi);
        let mut rational = Vec::new();
        for (r, k) in &split.roots {
            let shifted = ell.add_scaled(&Matrix::identity(m), &-r);
            let mut power = Matrix::identity(m);
            for _ in 0..*k {
                power = power.mul(&shifted);
            }
            let w = power.nullspace();
            let kk = GaussRational::from_int(*k as i64);
            let x = &mx.restrict(&w)?.trace() / &kk;
            let y = &my.restrict(&w)?.trace() / &kk;
            rational.push(([x, y], *k));
        }
        let rest = &split.remainder;
        let simple = rest.squarefree_part().degree() == rest.degree();
        let mut block = ell.eval_poly(rest);
        if !simple {
            let base = block.clone();
            for _ in 1..m {
                block = block.mul(&base);
            }
        }
        let kernel = block.nullspace();
        Ok(PointBlocks {
            rational,
            irrational: space.mul(&kernel),
            irrational_simple: simple,
        })
    }

    /// `Σ num(p)/den(p)` over the points of a block of simple points.
    pub fn trace_of_ratio(&self, block: &Matrix, num: &MultiPoly, den: &MultiPoly) -> Result<GaussRational> {
        if block.cols() == 0 {
            return Ok(GaussRational::zero());
        }
        let n = self.multiplication_matrix(num)?.restrict(block)?;
        let d = self.multiplication_matrix(den)?.restrict(block)?;
        let inv = d.inverse().ok_or(Error::Degenerate)?;
        Ok(n.mul(&inv).trace())
    }

    /// Characteristic polynomial of multiplication by `p` on a block.
    pub fn characteristic_polynomial_on(&self, block: &Matrix, p: &MultiPoly) -> Result<UniPoly> {
        Ok(self.multiplication_matrix(p)?.restrict(block)?.characteristic_polynomial())
    }
}
