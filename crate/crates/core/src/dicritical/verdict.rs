use std::fmt;

use num_complex::Complex64;
use num_traits::Zero;

use super::blowup::{blow_up, first_blowup_dicritical, jet_decomposition, BlowUpChart, BlowUpKind};
use crate::algebra::roots::rational_roots;
use crate::algebra::{GaussRational, MultiPoly, UniPoly, Var};
use crate::error::{Error, Result};
use crate::foliation::{singular_locus, AffineFoliation1Form};
use crate::indices::JacobianData;

pub const DEFAULT_DEPTH: usize = 12;
/// Numerator and denominator bound for the numeric eigenvalue-ratio test.
pub const RATIO_BOUND: i64 = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Dicritical,
    NonDicritical,
    Undecided,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Dicritical => "dicritical",
            Verdict::NonDicritical => "non_dicritical",
            Verdict::Undecided => "undecided",
        }
    }

    fn rank(self) -> u8 {
        match self {
            Verdict::Dicritical => 2,
            Verdict::Undecided => 1,
            Verdict::NonDicritical => 0,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// One blow-up performed during the search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowUpStep {
    pub depth: usize,
    /// Chain of chart centres leading to this blow-up, e.g. `y=tx@(0,1)`.
    pub path: String,
    pub chart: BlowUpKind,
    pub form: String,
    pub exceptional_divisor_invariant: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DicriticalVerdict {
    pub verdict: Verdict,
    /// Largest number of successive blow-ups along any explored chain.
    pub depth_used: usize,
    pub witness: Vec<BlowUpStep>,
    /// How the leaves of the search were settled.
    pub notes: Vec<String>,
}

/// Whether `tr²/det = r + 1/r + 2` for a positive rational `r`, i.e. the
/// eigenvalue ratio is a positive rational.
pub fn positive_rational_ratio(c: &GaussRational) -> bool {
    if !c.is_real() || c.re < GaussRational::from_int(4).re {
        return false;
    }
    let disc = c * &(c - &GaussRational::from_int(4));
    disc.sqrt().is_some_and(|s| s.is_real())
}

struct Search {
    limit: usize,
    witness: Vec<BlowUpStep>,
    notes: Vec<String>,
}

impl Search {
    fn record(&mut self, depth: usize, path: &str, c: &BlowUpChart) {
        self.witness.push(BlowUpStep {
            depth,
            path: path.to_string(),
            chart: c.kind,
            form: c.transformed.to_string(),
            exceptional_divisor_invariant: c.exceptional_divisor_invariant,
        });
    }

    /// `w` is in `(x, y)` and singular at the origin.
    fn explore(&mut self, w: &AffineFoliation1Form, depth: usize, path: &str) -> Result<(Verdict, usize)> {
        let origin = [GaussRational::zero(), GaussRational::zero()];
        if !w.is_singular_at(&origin) {
            return Ok((Verdict::NonDicritical, depth));
        }
        let j = JacobianData::of_form(w, &origin)?;
        if let Some(c) = j.trace_ratio() {
            if !positive_rational_ratio(&c) {
                self.notes
                    .push(format!("{path}: simple point, tr^2/det = {c} excludes a positive rational ratio"));
                return Ok((Verdict::NonDicritical, depth));
            }
        } else if !j.trace.is_zero() {
            self.notes.push(format!("{path}: saddle-node"));
            return Ok((Verdict::NonDicritical, depth));
        }
        if depth >= self.limit {
            self.notes.push(format!("{path}: depth limit {} reached", self.limit));
            return Ok((Verdict::Undecided, depth));
        }
        let (c1, c2) = blow_up(w)?;
        self.record(depth + 1, path, &c1);
        self.record(depth + 1, path, &c2);
        if !c1.exceptional_divisor_invariant {
            self.notes.push(format!("{path}: exceptional divisor not invariant"));
            return Ok((Verdict::Dicritical, depth + 1));
        }

        let mut best = (Verdict::NonDicritical, depth + 1);
        let merge = |best: &mut (Verdict, usize), r: (Verdict, usize)| {
            if r.0.rank() > best.0.rank() {
                best.0 = r.0;
            }
            best.1 = best.1.max(r.1);
        };

        // Singular points on E = {x = 0} in the chart y = t·x.
        let t1 = c1.transformed.to_xy();
        let along = t1.a().eval_partial(&[(Var::X, GaussRational::zero())]);
        let split = rational_roots(&UniPoly::from_multi(&along, Var::Y)?);
        for (t0, _) in &split.roots {
            let next = t1.translate(&[GaussRational::zero(), t0.clone()]);
            let r = self.explore(&next, depth + 1, &format!("{path}/y=tx@(0,{t0})"))?;
            merge(&mut best, r);
            if best.0 == Verdict::Dicritical {
                return Ok(best);
            }
        }
        if split.remainder.degree().unwrap_or(0) > 0 {
            self.notes.push(format!(
                "{path}/y=tx: singular points off Q(i) at the roots of {}",
                split.remainder.to_multi(Var::T)
            ));
            merge(&mut best, (Verdict::Undecided, depth + 1));
        }
        // The one point of E missed by the first chart.
        let t2 = c2.transformed.to_xy();
        let r = self.explore(&t2, depth + 1, &format!("{path}/x=sy@(0,0)"))?;
        merge(&mut best, r);
        Ok(best)
    }
}

/// Decides whether the germ at the origin has infinitely many separatrices
/// by blowing up until every chain ends at a regular point, a simple point
/// or a saddle-node, or the depth limit is hit.
pub fn is_dicritical(form: &AffineFoliation1Form, depth_limit: usize) -> Result<DicriticalVerdict> {
    let w = form.to_xy();
    let origin = [GaussRational::zero(), GaussRational::zero()];
    if !w.is_singular_at(&origin) {
        return Err(Error::RegularPoint);
    }
    let mut s = Search {
        limit: depth_limit,
        witness: Vec::new(),
        notes: Vec::new(),
    };
    let (verdict, depth_used) = s.explore(&w, 0, "0")?;
    Ok(DicriticalVerdict {
        verdict,
        depth_used,
        witness: s.witness,
        notes: s.notes,
    })
}

/// [`is_dicritical`] at an exact point of the chart.
pub fn is_dicritical_at(form: &AffineFoliation1Form, point: &[GaussRational; 2], depth_limit: usize) -> Result<DicriticalVerdict> {
    if !form.is_singular_at(point) {
        return Err(Error::NotACommonZero);
    }
    is_dicritical(&form.to_xy().translate(point), depth_limit)
}

/// Verdict at a numerically located singular point from the eigenvalue
/// ratio of the linear part alone.
pub fn is_dicritical_numeric(form: &AffineFoliation1Form, point: [Complex64; 2], tol: f64) -> DicriticalVerdict {
    let w = form.to_xy();
    let (t, d, scale) = crate::indices::value::numeric_jacobian(w.a(), w.b(), point[0], point[1]);
    let settle = |verdict, note: String| DicriticalVerdict {
        verdict,
        depth_used: 0,
        witness: vec![],
        notes: vec![note],
    };
    if d.norm() <= tol * scale.max(1.0) {
        return settle(Verdict::Undecided, "degenerate linear part at a numeric point".into());
    }
    let c = t * t / d;
    if c.im.abs() > tol * c.norm().max(1.0) || c.re < 4.0 - tol {
        return settle(
            Verdict::NonDicritical,
            format!("tr^2/det = {} is not r + 1/r + 2 for a positive real r", crate::indices::format_complex(c)),
        );
    }
    for p in 1..=RATIO_BOUND {
        for q in 1..=RATIO_BOUND {
            let target = ((p + q) * (p + q)) as f64 / (p * q) as f64;
            if (c.re - target).abs() <= tol * target {
                return settle(
                    Verdict::Undecided,
                    format!("eigenvalue ratio within {tol:e} of {p}/{q}"),
                );
            }
        }
    }
    settle(
        Verdict::NonDicritical,
        format!("positive real eigenvalue ratio with no p/q, p, q <= {RATIO_BOUND}, within {tol:e}"),
    )
}

/// A singular point of a chart and its verdict.
#[derive(Debug, Clone)]
pub struct PointVerdict {
    pub exact: Option<[GaussRational; 2]>,
    pub approx: [Complex64; 2],
    pub verdict: DicriticalVerdict,
}

/// Verdicts at every singular point of the chart: exact points by blow-ups,
/// numeric points by the eigenvalue ratio.
pub fn classify_singular_points(form: &AffineFoliation1Form, depth_limit: usize, tol: f64) -> Result<Vec<PointVerdict>> {
    let locus = singular_locus(form)?;
    let mut out = Vec::new();
    for rp in &locus.rational_points {
        out.push(PointVerdict {
            exact: Some(rp.point.clone()),
            approx: [rp.point[0].to_complex(), rp.point[1].to_complex()],
            verdict: is_dicritical_at(form, &rp.point, depth_limit)?,
        });
    }
    for np in &locus.numeric_points {
        out.push(PointVerdict {
            exact: None,
            approx: np.point,
            verdict: is_dicritical_numeric(form, np.point, tol),
        });
    }
    Ok(out)
}

/// Heuristic: after the dicritical first blow-up, exactly one leaf is
/// tangent to the exceptional divisor, with tangency of order one.
///
/// With `B_ν = x·K`, tangencies sit at the zeros of `K` on `P¹`; a single
/// simple zero needs `deg K = 1`, and the transformed foliation must be
/// regular there.
pub fn is_simple_dicritical(form: &AffineFoliation1Form) -> Result<bool> {
    if !first_blowup_dicritical(form)? {
        return Err(Error::InvalidInput(
            "the first blow-up is not dicritical, so simple dicriticality is undefined".into(),
        ));
    }
    let j = jet_decomposition(form)?;
    let k = j
        .b_nu
        .divide_exact(&MultiPoly::var(Var::X))
        .ok_or_else(|| Error::Internal("B_nu is not divisible by x".into()))?;
    if k.total_degree() != Some(1) {
        return Ok(false);
    }
    let (c1, c2) = blow_up(form)?;
    let kx = k.coeff(&crate::algebra::Monomial::var(Var::X));
    let ky = k.coeff(&crate::algebra::Monomial::var(Var::Y));
    let regular = |w: &AffineFoliation1Form, pt: [GaussRational; 2]| !w.is_singular_at(&pt);
    if ky.is_zero() {
        // K = c·x vanishes at [0 : 1], the origin of the chart x = s·y.
        Ok(regular(&c2.transformed.to_xy(), [GaussRational::zero(), GaussRational::zero()]))
    } else {
        let t0 = -(&kx / &ky);
        Ok(regular(&c1.transformed.to_xy(), [GaussRational::zero(), t0]))
    }
}
