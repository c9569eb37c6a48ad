//! Named example foliations with their known invariants, and real-analytic
//! Levi-flat defining polynomials built from rational functions.

use std::fmt;

use num_traits::Zero;

use crate::algebra::{gcd, GaussRational, MixedPoly, MultiPoly, RatFunc, Var};
use crate::dicritical::{classify_singular_points, is_dicritical_at, Verdict, DEFAULT_DEPTH};
use crate::error::{Error, Result};
use crate::foliation::{bezout_count, projectivize, singular_locus, AffineFoliation1Form, ChartId};
use crate::indices::{bb_residue, milnor_number, verify_baum_bott_global, verify_camacho_sad_auto};
use crate::integral::{check_first_integral, DarbouxSpec};

/// Known data at one singular point.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpectedPoint {
    pub chart: ChartId,
    pub point: [GaussRational; 2],
    pub milnor: u64,
    pub baum_bott: GaussRational,
    pub verdict: Option<Verdict>,
}

/// An invariant curve of `P²` and its Camacho–Sad sum.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpectedCurve {
    pub curve: MultiPoly,
    pub cs_sum: GaussRational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Expected {
    pub degree: u32,
    pub singular_count: usize,
    pub points: Vec<ExpectedPoint>,
    /// `points` lists every singular point.
    pub points_complete: bool,
    pub all_non_dicritical: bool,
    pub first_integral: Option<DarbouxSpec>,
    /// Every spec of [`stock_darboux_specs`] fails as a first integral.
    pub rejects_stock_integrals: bool,
    pub invariant_curves: Vec<ExpectedCurve>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub name: String,
    pub summary: &'static str,
    pub foliation: AffineFoliation1Form,
    pub expected: Expected,
}

fn poly(s: &str) -> MultiPoly {
    s.parse().expect("catalog literal")
}

fn rat(num: &str, den: &str) -> RatFunc {
    RatFunc::new(poly(num), poly(den)).expect("catalog literal")
}

fn q(n: i64, d: i64) -> GaussRational {
    GaussRational::from_ratio(n, d)
}

fn origin() -> [GaussRational; 2] {
    [GaussRational::zero(), GaussRational::zero()]
}

fn xy_form(a: &str, b: &str) -> AffineFoliation1Form {
    AffineFoliation1Form::new(poly(a), poly(b)).expect("catalog literal")
}

fn unique_point(foliation: AffineFoliation1Form, summary: &'static str, name: String) -> CatalogEntry {
    CatalogEntry {
        name,
        summary,
        foliation,
        expected: Expected {
            degree: 2,
            singular_count: 7,
            points: vec![ExpectedPoint {
                chart: ChartId::Z3,
                point: origin(),
                milnor: 7,
                baum_bott: q(16, 1),
                verdict: None,
            }],
            points_complete: true,
            all_non_dicritical: false,
            first_integral: None,
            rejects_stock_integrals: false,
            invariant_curves: vec![],
        },
    }
}

/// `(y^d − x^{d+1}) dy − (1 − x^d y) dx`.
pub fn jouanolou(d: u32) -> Result<CatalogEntry> {
    if d == 0 {
        return Err(Error::InvalidInput("the Jouanolou degree must be positive".into()));
    }
    let foliation = xy_form(&format!("x^{d}*y - 1"), &format!("y^{d} - x^{}", d + 1));
    let count = d * d + d + 1;
    let top = i64::from(d + 2);
    Ok(CatalogEntry {
        name: format!("jouanolou:{d}"),
        summary: "Jouanolou foliation: no invariant algebraic curve, every singularity a nondegenerate non-dicritical point",
        foliation,
        expected: Expected {
            degree: d,
            singular_count: count as usize,
            points: vec![ExpectedPoint {
                chart: ChartId::Z3,
                point: [q(1, 1), q(1, 1)],
                milnor: 1,
                baum_bott: q(top * top, i64::from(count)),
                verdict: Some(Verdict::NonDicritical),
            }],
            points_complete: false,
            all_non_dicritical: true,
            first_integral: None,
            rejects_stock_integrals: false,
            invariant_curves: vec![],
        },
    })
}

/// The four degree-two foliations of `P²` with a single singular point.
pub fn degree2_normal_form(k: u32) -> Result<CatalogEntry> {
    let name = format!("degree2:{k}");
    let e = match k {
        1 => {
            let mut e = unique_point(
                xy_form("x^2 - y^3", "x*y^2"),
                "x^2 dx + y^2 (x dy - y dx): rational first integral, dicritical origin",
                name,
            );
            e.expected.points[0].verdict = Some(Verdict::Dicritical);
            e.expected.first_integral = Some(DarbouxSpec::rational(rat("y^3 - 3*x^2", "3*x^3")));
            e
        }
        2 => {
            let mut e = unique_point(
                xy_form("x^2 - x*y - y^3", "x^2 + x*y^2"),
                "x^2 dx + (x + y^2)(x dy - y dx): transcendental first integral",
                name,
            );
            e.expected.first_integral = Some(DarbouxSpec {
                factors: vec![(rat("2*x^2 + x + 2*x*y + y^2", "x^2"), 1)],
                exp_part: Some(rat("-y", "x")),
            });
            e
        }
        3 => {
            let mut e = unique_point(
                xy_form("x*y - x^2*y - y^3", "x^3 + x*y^2"),
                "x y dx + (x^2 + y^2)(x dy - y dx): transcendental first integral",
                name,
            );
            e.expected.first_integral = Some(DarbouxSpec {
                factors: vec![(rat("y", "x"), 1)],
                exp_part: Some(rat("y^2 - 2*x", "2*x^2")),
            });
            e
        }
        4 => {
            let mut e = unique_point(
                xy_form("x^2 + x*y^2", "x + y^2 - x^2*y"),
                "x (x + y^2) dx + (x + y^2 - x^2 y) dy: no meromorphic first integral",
                name,
            );
            e.expected.rejects_stock_integrals = true;
            e
        }
        _ => return Err(Error::InvalidInput(format!("no degree-two normal form {k}; expected 1..4"))),
    };
    Ok(e)
}

/// Levels of `Z1/Z3`: the lines through `[0:1:0]`.
pub fn pencil_lines() -> CatalogEntry {
    CatalogEntry {
        name: "pencil".into(),
        summary: "lines through [0:1:0], the levels of Z1/Z3",
        foliation: xy_form("1", "0"),
        expected: Expected {
            degree: 0,
            singular_count: 1,
            points: vec![ExpectedPoint {
                chart: ChartId::Z2,
                point: origin(),
                milnor: 1,
                baum_bott: q(4, 1),
                verdict: Some(Verdict::Dicritical),
            }],
            points_complete: true,
            all_non_dicritical: false,
            first_integral: Some(DarbouxSpec::rational(rat("x", "1"))),
            rejects_stock_integrals: false,
            invariant_curves: vec![ExpectedCurve {
                curve: poly("Z1"),
                cs_sum: q(1, 1),
            }],
        },
    }
}

/// Levels of `Z1·Z2/Z3²`.
pub fn conic_pencil() -> CatalogEntry {
    let at = |chart, milnor, bb: GaussRational, v| ExpectedPoint {
        chart,
        point: origin(),
        milnor,
        baum_bott: bb,
        verdict: Some(v),
    };
    CatalogEntry {
        name: "conic-pencil".into(),
        summary: "levels of Z1*Z2/Z3^2, with the three coordinate lines invariant",
        foliation: xy_form("y", "x"),
        expected: Expected {
            degree: 1,
            singular_count: 3,
            points: vec![
                at(ChartId::Z3, 1, q(0, 1), Verdict::NonDicritical),
                at(ChartId::Z2, 1, q(9, 2), Verdict::Dicritical),
                at(ChartId::Z1, 1, q(9, 2), Verdict::Dicritical),
            ],
            points_complete: true,
            all_non_dicritical: false,
            first_integral: Some(DarbouxSpec::rational(rat("x*y", "1"))),
            rejects_stock_integrals: false,
            invariant_curves: ["Z1", "Z2", "Z3"]
                .iter()
                .map(|c| ExpectedCurve {
                    curve: poly(c),
                    cs_sum: q(1, 1),
                })
                .collect(),
        },
    }
}

pub const NAMES: &[&str] = &[
    "jouanolou:<d>",
    "degree2:1",
    "degree2:2",
    "degree2:3",
    "degree2:4",
    "pencil",
    "conic-pencil",
];

/// Resolves `jouanolou:3`, `degree2:1`, `pencil`, `conic-pencil`.
pub fn lookup(name: &str) -> Result<CatalogEntry> {
    let unknown = || Error::InvalidInput(format!("unknown catalog entry {name:?}; known: {}", NAMES.join(", ")));
    let index = |s: &str| s.parse::<u32>().map_err(|_| unknown());
    match name.split_once(':') {
        Some(("jouanolou", d)) => jouanolou(index(d)?),
        Some(("degree2", k)) => degree2_normal_form(index(k)?),
        None if name == "pencil" => Ok(pencil_lines()),
        None if name == "conic-pencil" => Ok(conic_pencil()),
        _ => Err(unknown()),
    }
}

/// Candidate integrals used as a falsification list.
pub fn stock_darboux_specs() -> Vec<DarbouxSpec> {
    let r = |n: &str, d: &str| DarbouxSpec::rational(rat(n, d));
    let mut out = vec![
        r("x", "1"),
        r("y", "1"),
        r("y", "x"),
        r("x*y", "1"),
        r("y^3 - 3*x^2", "3*x^3"),
        r("x + y^2", "x^2"),
        r("x^2 + y^2", "1"),
    ];
    out.push(DarbouxSpec {
        factors: vec![(rat("2*x^2 + x + 2*x*y + y^2", "x^2"), 1)],
        exp_part: Some(rat("-y", "x")),
    });
    out.push(DarbouxSpec {
        factors: vec![(rat("y", "x"), 1)],
        exp_part: Some(rat("y^2 - 2*x", "2*x^2")),
    });
    out.push(DarbouxSpec {
        factors: vec![(rat("x + y^2", "1"), 1)],
        exp_part: Some(rat("y", "x")),
    });
    out
}

/// One recomputed fact about a catalog entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

impl Check {
    fn new(name: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display) -> Check {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check {
            name: name.into(),
            ok: expected == actual,
            expected,
            actual,
        }
    }

    fn failed(name: impl Into<String>, expected: impl fmt::Display, e: &Error) -> Check {
        Check {
            name: name.into(),
            expected: expected.to_string(),
            actual: format!("error: {e}"),
            ok: false,
        }
    }
}

fn point_label(chart: ChartId, p: &[GaussRational; 2]) -> String {
    format!("{chart}({}, {})", p[0], p[1])
}

/// Recomputes every expected field of `entry` with the other modules.
pub fn verify_entry(entry: &CatalogEntry, tol: f64) -> Result<Vec<Check>> {
    let ex = &entry.expected;
    let pf = projectivize(&entry.foliation)?;
    let mut out = vec![
        Check::new("degree", ex.degree, pf.degree),
        Check::new("singular count", ex.singular_count, bezout_count(&pf)?),
    ];

    match verify_baum_bott_global(&pf) {
        Ok(r) => {
            out.push(Check::new("Baum-Bott exact sum", &r.target, &r.exact_sum));
            out.push(Check::new(
                format!("Baum-Bott numeric gap <= {tol:e}"),
                true,
                r.numeric_gap <= tol,
            ));
        }
        Err(e) => out.push(Check::failed("Baum-Bott sum", pf.baum_bott_target(), &e)),
    }

    let mut listed = 0u64;
    for p in &ex.points {
        let form = pf.chart(p.chart);
        let at = point_label(p.chart, &p.point);
        match milnor_number(form, &p.point) {
            Ok(v) => out.push(Check::new(format!("Milnor {at}"), p.milnor, v)),
            Err(e) => out.push(Check::failed(format!("Milnor {at}"), p.milnor, &e)),
        }
        listed += p.milnor;
        match bb_residue(form, &p.point) {
            Ok(v) => out.push(Check::new(format!("Baum-Bott {at}"), &p.baum_bott, v)),
            Err(e) => out.push(Check::failed(format!("Baum-Bott {at}"), &p.baum_bott, &e)),
        }
        if let Some(v) = p.verdict {
            match is_dicritical_at(form, &p.point, DEFAULT_DEPTH) {
                Ok(r) => out.push(Check::new(format!("dicritical {at}"), v, r.verdict)),
                Err(e) => out.push(Check::failed(format!("dicritical {at}"), v, &e)),
            }
        }
    }
    if ex.points_complete {
        out.push(Check::new("listed points exhaust the singular count", ex.singular_count, listed));
    }

    if ex.all_non_dicritical {
        let affine = singular_locus(&entry.foliation)?.total_multiplicity;
        out.push(Check::new("all singular points affine", ex.singular_count, affine));
        let verdicts = classify_singular_points(&entry.foliation, DEFAULT_DEPTH, tol)?;
        let bad = verdicts
            .iter()
            .filter(|v| v.verdict.verdict == Verdict::Dicritical)
            .count();
        out.push(Check::new("dicritical points", 0, bad));
    }

    if let Some(spec) = &ex.first_integral {
        let name = format!("first integral {spec}");
        match check_first_integral(&entry.foliation, spec) {
            Ok(b) => out.push(Check::new(name, true, b)),
            Err(e) => out.push(Check::failed(name, true, &e)),
        }
    }
    if ex.rejects_stock_integrals {
        for spec in stock_darboux_specs() {
            let name = format!("not a first integral: {spec}");
            match check_first_integral(&entry.foliation, &spec) {
                Ok(b) => out.push(Check::new(name, false, b)),
                Err(e) => out.push(Check::failed(name, false, &e)),
            }
        }
    }

    for c in &ex.invariant_curves {
        let name = format!("Camacho-Sad sum along {{{} = 0}}", c.curve);
        match verify_camacho_sad_auto(&pf, &c.curve) {
            Ok(r) => out.push(Check::new(name, &c.cs_sum, &r.sum)),
            Err(e) => out.push(Check::failed(name, &c.cs_sum, &e)),
        }
    }
    Ok(out)
}

/// `P·conj(Q) − conj(P)·Q`, scaled by a nonzero real so the leading
/// coefficient has first nonzero component 1. Dividing by `2i` gives a real
/// defining function of `{Im(P/Q) = 0}`.
pub fn levi_flat_from_rational(p: &MultiPoly, q: &MultiPoly) -> Result<MixedPoly> {
    if q.is_zero() {
        return Err(Error::ZeroDenominator(format!("{p} / 0")));
    }
    if !p.is_zero() {
        let g = gcd(p, q);
        if !g.is_constant() {
            return Err(Error::CommonFactor { factor: g.to_string() });
        }
    }
    let rho = MixedPoly::from_holomorphic(p)
        .mul(&MixedPoly::conjugate_of(q))
        .sub(&MixedPoly::conjugate_of(p).mul(&MixedPoly::from_holomorphic(q)));
    Ok(rho.normalize_real_scale())
}

/// Whether `rho/(2i)` is real, i.e. `conj(rho) = −rho`.
pub fn levi_flat_is_real(rho: &MixedPoly) -> bool {
    rho.is_anti_real()
}

/// Whether `rho` vanishes on `{v = c·w}` for a real parameter `c`, the leaves
/// of `v/w` when `rho` comes from `(v, w)`.
pub fn vanishes_on_real_levels(rho: &MixedPoly, v: Var, w: Var, parameter: Var) -> bool {
    let level = &MultiPoly::var(parameter) * &MultiPoly::var(w);
    rho.substitute(v, &level).identify_real(parameter).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_ok(e: &CatalogEntry) {
        let checks = verify_entry(e, 1e-6).unwrap();
        let bad: Vec<_> = checks.iter().filter(|c| !c.ok).collect();
        assert!(bad.is_empty(), "{}: {bad:#?}", e.name);
    }

    #[test]
    fn jouanolou_forms() {
        let j = jouanolou(1).unwrap();
        assert_eq!(j.foliation.a(), &poly("x*y - 1"));
        assert_eq!(j.foliation.b(), &poly("y - x^2"));
        assert_eq!(j.expected.singular_count, 3);
        assert_eq!(jouanolou(2).unwrap().expected.singular_count, 7);
        assert_eq!(j.expected.points[0].baum_bott, q(3, 1));
        assert!(jouanolou(0).is_err());
    }

    #[test]
    fn normal_forms_match_their_displays() {
        let w1 = degree2_normal_form(1).unwrap().foliation;
        let w2 = degree2_normal_form(2).unwrap().foliation;
        let w4 = degree2_normal_form(4).unwrap().foliation;
        let x = MultiPoly::var(Var::X);
        let y = MultiPoly::var(Var::Y);
        let y2 = &y * &y;
        assert_eq!(w1.a(), &(&(&x * &x) - &(&y2 * &y)));
        assert_eq!(w2.b(), &(&(&x + &y2) * &x));
        assert_eq!(w4.a(), &(&x * &(&x + &y2)));
        assert!(degree2_normal_form(5).is_err());
    }

    #[test]
    fn lookup_names() {
        assert_eq!(lookup("jouanolou:2").unwrap().name, "jouanolou:2");
        assert_eq!(lookup("degree2:3").unwrap().name, "degree2:3");
        assert_eq!(lookup("pencil").unwrap().expected.degree, 0);
        assert!(lookup("degree2:x").is_err());
        assert!(lookup("hopf").is_err());
    }

    #[test]
    fn entries_recompute() {
        all_ok(&jouanolou(1).unwrap());
        for k in 1..=4 {
            all_ok(&degree2_normal_form(k).unwrap());
        }
        all_ok(&pencil_lines());
        all_ok(&conic_pencil());
    }

    #[test]
    fn pencil_chart_at_infinity() {
        let pf = projectivize(&pencil_lines().foliation).unwrap();
        let w = pf.chart(ChartId::Z2);
        let expect = AffineFoliation1Form::with_chart(poly("w"), poly("-u"), (Var::U, Var::W), "Z2").unwrap();
        assert!(w.same_foliation(&expect), "{w}");
    }

    #[test]
    fn levi_flat_examples() {
        let rho = levi_flat_from_rational(&poly("Z1"), &poly("Z3")).unwrap();
        assert_eq!(rho.to_string(), "Z1*conj(Z3) - conj(Z1)*Z3");
        assert!(levi_flat_is_real(&rho));
        assert!(vanishes_on_real_levels(&rho, Var::Z1, Var::Z3, Var::S));
        let im = levi_flat_from_rational(&poly("x"), &poly("1")).unwrap();
        assert!(levi_flat_is_real(&im));
        assert_eq!(im.swap_conjugate(), im.scale(&q(-1, 1)));
        assert!(levi_flat_from_rational(&poly("x"), &poly("0")).is_err());
        assert!(levi_flat_from_rational(&poly("x^2"), &poly("x*y")).is_err());
    }

    #[test]
    fn levi_flat_of_a_quadratic_ratio() {
        let rho = levi_flat_from_rational(&poly("x^2 + i*y"), &poly("x - 2")).unwrap();
        assert!(levi_flat_is_real(&rho));
        assert!(!rho.is_zero());
    }
}
