#![allow(dead_code)]

use num_bigint::BigUint;
use rand::Rng;
use residua::algebra::{GaussRational, Monomial, MultiPoly, Var};
use residua::cli::ast::Expr;
use residua::integral::HolomorphicFactoredIntegral;

pub fn q(n: i64, d: i64) -> GaussRational {
    GaussRational::from_ratio(n, d)
}

pub fn xy_term(c: i64, i: u32, j: u32) -> MultiPoly {
    MultiPoly::term(GaussRational::from_int(c), Monomial::from_pairs(&[(Var::X, i), (Var::Y, j)]))
}

fn nonzero<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    loop {
        let c = rng.gen_range(-bound..=bound);
        if c != 0 {
            return c;
        }
    }
}

/// Random terms of total degree in `lo..=hi`.
pub fn random_terms<R: Rng>(rng: &mut R, lo: u32, hi: u32, count: usize) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for _ in 0..count {
        let d = rng.gen_range(lo..=hi);
        let i = rng.gen_range(0..=d);
        p = &p + &xy_term(rng.gen_range(-3..=3), i, d - i);
    }
    p
}

/// A smooth branch through the origin with a random tangent and curvature.
pub fn random_smooth_branch<R: Rng>(rng: &mut R) -> MultiPoly {
    let (a, b) = match rng.gen_range(0..3) {
        0 => (1, 0),
        1 => (0, 1),
        _ => (nonzero(rng, 3), nonzero(rng, 3)),
    };
    let linear = &xy_term(a, 1, 0) + &xy_term(b, 0, 1);
    let extra = rng.gen_range(0..=2);
    &linear + &random_terms(rng, 2, 3, extra)
}

/// Two or three pairwise coprime smooth branches with exponents in 1..=4.
pub fn random_factored_integral<R: Rng>(rng: &mut R) -> HolomorphicFactoredIntegral {
    loop {
        let k = rng.gen_range(2..=3);
        let branches: Vec<(MultiPoly, u32)> = (0..k)
            .map(|_| (random_smooth_branch(rng), rng.gen_range(1..=4)))
            .collect();
        if let Ok(g) = HolomorphicFactoredIntegral::new(branches) {
            return g;
        }
    }
}

/// `(f, g)` with leading forms `x^m` and `y^n` plus random higher terms, so
/// the origin is an isolated common zero.
pub fn random_isolated_pair<R: Rng>(rng: &mut R) -> (MultiPoly, MultiPoly) {
    let m = rng.gen_range(1..=3);
    let n = rng.gen_range(1..=3);
    let top = m.max(n);
    let f = &xy_term(1, m, 0) + &random_terms(rng, top + 1, top + 2, 2);
    let g = &xy_term(nonzero(rng, 2), 0, n) + &random_terms(rng, top + 1, top + 2, 2);
    (f, g)
}

const VARS: [Var; 6] = [Var::X, Var::Y, Var::U, Var::W, Var::Z1, Var::Z3];

/// Random expression tree covering every node kind.
pub fn random_expr<R: Rng>(rng: &mut R, depth: u32) -> Expr {
    let leaf = depth == 0 || rng.gen_bool(0.25);
    if leaf {
        return match rng.gen_range(0..4) {
            0 => Expr::Num(BigUint::from(rng.gen_range(0u32..1000))),
            1 => Expr::I,
            2 => Expr::Var(VARS[rng.gen_range(0..VARS.len())]),
            _ => Expr::Diff(VARS[rng.gen_range(0..VARS.len())]),
        };
    }
    let kind = rng.gen_range(0..9);
    let sub = |rng: &mut R| Box::new(random_expr(rng, depth - 1));
    match kind {
        0 => Expr::Add(sub(rng), sub(rng)),
        1 => Expr::Sub(sub(rng), sub(rng)),
        2 => Expr::Mul(sub(rng), sub(rng)),
        3 => Expr::Div(sub(rng), sub(rng)),
        4 => Expr::Neg(sub(rng)),
        5 => Expr::Pow(sub(rng), rng.gen_range(0..6)),
        6 => Expr::Rat(sub(rng), sub(rng)),
        7 => Expr::Exp(sub(rng)),
        _ => Expr::Var(VARS[rng.gen_range(0..VARS.len())]),
    }
}

pub struct GoldenCase {
    pub name: String,
    pub args: Vec<String>,
    pub exit: i32,
}

pub fn golden_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn golden_cases() -> Vec<GoldenCase> {
    let text = std::fs::read_to_string(golden_dir().join("cases.json")).expect("golden manifest");
    let v: serde_json::Value = serde_json::from_str(&text).expect("golden manifest parses");
    v.as_array()
        .expect("golden manifest is a list")
        .iter()
        .map(|c| GoldenCase {
            name: c["name"].as_str().unwrap().to_string(),
            args: c["args"].as_array().unwrap().iter().map(|a| a.as_str().unwrap().to_string()).collect(),
            exit: c["exit"].as_i64().unwrap() as i32,
        })
        .collect()
}

impl GoldenCase {
    pub fn path(&self) -> std::path::PathBuf {
        let ext = if self.args.iter().any(|a| a == "--csv") { "csv" } else { "json" };
        golden_dir().join(format!("{}.{ext}", self.name))
    }

    pub fn run_in_process(&self) -> residua::cli::Outcome {
        residua::cli::run(std::iter::once("residua".to_string()).chain(self.args.iter().cloned()))
    }
}

/// Writes the transcript when blessing, otherwise returns the stored one.
pub fn golden_expected(case: &GoldenCase, actual: &str) -> String {
    if std::env::var_os("RESIDUA_BLESS").is_some() {
        std::fs::write(case.path(), actual).expect("write golden");
        return actual.to_string();
    }
    std::fs::read_to_string(case.path()).unwrap_or_default()
}
