use std::fmt;

use num_complex::Complex64;
use num_traits::Zero;

use crate::algebra::{GaussRational, MultiPoly, Var};
use crate::error::{Error, Result};
use crate::foliation::singular::eval_complex;
use crate::foliation::AffineFoliation1Form;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexKind {
    BaumBott,
    CamachoSad,
    Milnor,
}

impl IndexKind {
    pub fn label(self) -> &'static str {
        match self {
            IndexKind::BaumBott => "BB",
            IndexKind::CamachoSad => "CS",
            IndexKind::Milnor => "Milnor",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum IndexNumber {
    Exact(GaussRational),
    /// A floating-point value and a bound on the residual it was computed from.
    Numeric { value: Complex64, residual: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndexValue {
    pub kind: IndexKind,
    pub value: IndexNumber,
}

impl IndexValue {
    pub fn exact(kind: IndexKind, v: GaussRational) -> Self {
        IndexValue {
            kind,
            value: IndexNumber::Exact(v),
        }
    }

    pub fn numeric(kind: IndexKind, value: Complex64, residual: f64) -> Self {
        IndexValue {
            kind,
            value: IndexNumber::Numeric { value, residual },
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.value, IndexNumber::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&GaussRational> {
        match &self.value {
            IndexNumber::Exact(v) => Some(v),
            IndexNumber::Numeric { .. } => None,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match &self.value {
            IndexNumber::Exact(v) => v.to_complex(),
            IndexNumber::Numeric { value, .. } => *value,
        }
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            IndexNumber::Exact(v) => write!(f, "{v}"),
            IndexNumber::Numeric { value, residual } => {
                write!(f, "{} (numeric, residual {residual:.1e})", format_complex(*value))
            }
        }
    }
}

/// `a+b*i` rounded to twelve decimals, never `-0`.
pub fn format_complex(z: Complex64) -> String {
    let fixed = |v: f64| {
        let s = format!("{v:.12}");
        let s = s.trim_end_matches('0').trim_end_matches('.');
        match s {
            "-0" | "" => "0".to_string(),
            _ => s.to_string(),
        }
    };
    let (re, im) = (fixed(z.re), fixed(z.im));
    match (re.as_str(), im.as_str()) {
        (_, "0") => re,
        ("0", _) => format!("{im}*i"),
        _ if im.starts_with('-') => format!("{re}{im}*i"),
        _ => format!("{re}+{im}*i"),
    }
}

/// Jacobian of the dual vector field `(F, G) = (B, −A)` at a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobianData {
    /// `[[F_p, F_q], [G_p, G_q]]`.
    pub entries: [[GaussRational; 2]; 2],
    pub trace: GaussRational,
    pub determinant: GaussRational,
}

impl JacobianData {
    pub fn new(entries: [[GaussRational; 2]; 2]) -> Self {
        let trace = &entries[0][0] + &entries[1][1];
        let determinant = &(&entries[0][0] * &entries[1][1]) - &(&entries[0][1] * &entries[1][0]);
        JacobianData {
            entries,
            trace,
            determinant,
        }
    }

    pub fn of_form(form: &AffineFoliation1Form, point: &[GaussRational; 2]) -> Result<Self> {
        let (p, q) = form.vars();
        let at = [(p, point[0].clone()), (q, point[1].clone())];
        let f = form.b();
        let g = -form.a();
        let e = |h: &MultiPoly, v: Var| h.derivative(v).eval(&at);
        Ok(JacobianData::new([[e(f, p)?, e(f, q)?], [e(&g, p)?, e(&g, q)?]]))
    }

    /// `(tr J)²/det J`.
    pub fn trace_ratio(&self) -> Option<GaussRational> {
        if self.determinant.is_zero() {
            None
        } else {
            Some(&(&self.trace * &self.trace) / &self.determinant)
        }
    }
}

/// Polynomial trace and determinant of the Jacobian of `(B, −A)` in `(x, y)`.
pub(crate) fn jacobian_polys(a: &MultiPoly, b: &MultiPoly) -> (MultiPoly, MultiPoly) {
    let (ax, ay) = (a.derivative(Var::X), a.derivative(Var::Y));
    let (bx, by) = (b.derivative(Var::X), b.derivative(Var::Y));
    let trace = &bx - &ay;
    let det = &(&ax * &by) - &(&ay * &bx);
    (trace, det)
}

/// Trace, determinant and a magnitude scale of the Jacobian at a complex
/// point of an `(x, y)` form.
pub(crate) fn numeric_jacobian(a: &MultiPoly, b: &MultiPoly, x: Complex64, y: Complex64) -> (Complex64, Complex64, f64) {
    let (trace, det) = jacobian_polys(a, b);
    let (t, _) = eval_complex(&trace, x, y);
    let (d, scale) = eval_complex(&det, x, y);
    (t, d, scale)
}

/// `(tr J)²/det J` at a numeric nondegenerate point of an `(x, y)` form.
pub(crate) fn numeric_trace_ratio(
    a: &MultiPoly,
    b: &MultiPoly,
    point: [Complex64; 2],
    residual: f64,
) -> Result<IndexValue> {
    let (t, d, scale) = numeric_jacobian(a, b, point[0], point[1]);
    if d.norm() <= 1e-8 * scale.max(1e-300) {
        return Err(Error::Unsupported("degenerate irrational singularity".into()));
    }
    Ok(IndexValue::numeric(IndexKind::BaumBott, t * t / d, residual))
}
