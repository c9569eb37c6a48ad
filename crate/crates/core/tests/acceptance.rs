//! One PASS/FAIL line per acceptance criterion.

mod common;

use std::time::{Duration, Instant};

use num_traits::{Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use residua::algebra::{GaussRational, MultiPoly};
use residua::catalog::{conic_pencil, degree2_normal_form, jouanolou, levi_flat_from_rational, pencil_lines};
use residua::cli::parser::parse;
use residua::dicritical::{classify_singular_points, is_dicritical, Verdict, DEFAULT_DEPTH};
use residua::foliation::{bezout_count, projectivize, singular_locus, ChartId};
use residua::indices::{bb_from_factored_integral, bb_residue, milnor_number, verify_baum_bott_global, verify_camacho_sad_auto};
use residua::integral::{check_first_integral, one_form_from_factored};
use residua::local::grothendieck_residue;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn timed(limit: Duration, what: &str, f: impl FnOnce() -> Result<(), String>) -> Result<Duration, String> {
    let t = Instant::now();
    f()?;
    let dt = t.elapsed();
    ensure(dt < limit, format!("{what} took {dt:?}, limit {limit:?}"))?;
    Ok(dt)
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn origin() -> [GaussRational; 2] {
    [GaussRational::zero(), GaussRational::zero()]
}

fn jouanolou_counts() -> Outcome {
    let mut times = vec![];
    for (d, want) in [(1, 3), (2, 7), (3, 13)] {
        let dt = timed(Duration::from_secs(1), &format!("d={d}"), || {
            let pf = projectivize(&jouanolou(d).map_err(err)?.foliation).map_err(err)?;
            let n = bezout_count(&pf).map_err(err)?;
            ensure(n == want, format!("d={d}: count {n}, expected {want}"))
        })?;
        times.push(format!("d={d} {want} in {dt:.2?}"));
    }
    Ok(times.join(", "))
}

fn baum_bott_sums() -> Outcome {
    let mut out = vec![];
    for d in 1..=3u32 {
        let mut line = String::new();
        timed(Duration::from_secs(10), &format!("d={d}"), || {
            let pf = projectivize(&jouanolou(d).map_err(err)?.foliation).map_err(err)?;
            let r = verify_baum_bott_global(&pf).map_err(err)?;
            let target = GaussRational::from_int(i64::from((d + 2) * (d + 2)));
            ensure(r.target == target, format!("d={d}: target {}", r.target))?;
            ensure(r.exact_gap.is_zero(), format!("d={d}: exact gap {}", r.exact_gap))?;
            ensure(r.numeric_gap <= 1e-6, format!("d={d}: numeric gap {:e}", r.numeric_gap))?;
            line = format!("d={d} sum {} gap 0 numeric gap {:.1e}", r.exact_sum, r.numeric_gap);
            Ok(())
        })?;
        out.push(line);
    }
    Ok(out.join("; "))
}

fn cusp_form_certificate() -> Outcome {
    let mut detail = String::new();
    timed(Duration::from_secs(5), "certificate", || {
        let e = degree2_normal_form(1).map_err(err)?;
        let w = &e.foliation;
        let pf = projectivize(w).map_err(err)?;
        ensure(pf.degree == 2, format!("degree {}", pf.degree))?;
        let total = bezout_count(&pf).map_err(err)?;
        let mu = milnor_number(w, &origin()).map_err(err)?;
        let seven = GaussRational::from_int(7);
        ensure(mu.as_exact() == Some(&seven), format!("Milnor {mu}"))?;
        ensure(total == 7, format!("count {total}: the origin is not the only point"))?;
        let loc = singular_locus(w).map_err(err)?;
        ensure(
            loc.rational_points.len() == 1 && loc.numeric_points.is_empty(),
            "affine locus is not a single point",
        )?;
        let bb = bb_residue(w, &origin()).map_err(err)?;
        ensure(bb.as_exact() == Some(&GaussRational::from_int(16)), format!("BB {bb}"))?;
        let v = is_dicritical(w, DEFAULT_DEPTH).map_err(err)?;
        ensure(v.verdict == Verdict::Dicritical, format!("verdict {}", v.verdict))?;
        let spec = e.expected.first_integral.clone().ok_or("no first integral")?;
        ensure(check_first_integral(w, &spec).map_err(err)?, "first integral check false")?;
        detail = format!(
            "degree 2, one point, Milnor 7, BB 16, dicritical at depth {}, first integral verified",
            v.depth_used
        );
        Ok(())
    })?;
    Ok(detail)
}

fn camacho_sad_sums() -> Outcome {
    let pf = projectivize(&conic_pencil().foliation).map_err(err)?;
    let mut out = vec![];
    for c in ["Z1", "Z3"] {
        let curve: MultiPoly = c.parse().map_err(err)?;
        let r = verify_camacho_sad_auto(&pf, &curve).map_err(err)?;
        let one = GaussRational::from_int(1);
        ensure(r.sum == one && r.target == one, format!("{{{c} = 0}}: sum {} target {}", r.sum, r.target))?;
        out.push(format!("{{{c} = 0}} sum {}", r.sum));
    }
    Ok(out.join(", "))
}

fn factored_integral_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xbb);
    let dt = timed(Duration::from_secs(60), "suite", || {
        for n in 0..100 {
            let g = random_factored_integral(&mut rng);
            let closed = bb_from_factored_integral(&g).map_err(err)?;
            let w = one_form_from_factored(&g).map_err(err)?;
            let residue = bb_residue(&w, &origin()).map_err(err)?;
            ensure(closed == residue, format!("case {n}: {closed} vs {residue} for {g:?}"))?;
            let v = closed.as_exact().ok_or("inexact")?;
            ensure(v.is_real() && !v.re.is_positive(), format!("case {n}: positive index {v}"))?;
        }
        Ok(())
    })?;
    Ok(format!("100 cases exact and nonpositive in {dt:.2?}"))
}

fn residue_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4e5);
    for n in 0..50 {
        let (f, g) = random_isolated_pair(&mut rng);
        let h1 = random_terms(&mut rng, 0, 4, 4);
        let h2 = random_terms(&mut rng, 0, 4, 4);
        let c = q(rand::Rng::gen_range(&mut rng, -5..=5), rand::Rng::gen_range(&mut rng, 1..=4));
        let lhs = grothendieck_residue(&(&h1 + &h2.scale(&c)), &f, &g).map_err(err)?;
        let r1 = grothendieck_residue(&h1, &f, &g).map_err(err)?;
        let r2 = grothendieck_residue(&h2, &f, &g).map_err(err)?;
        ensure(lhs == &r1 + &(&c * &r2), format!("linearity case {n}"))?;
    }
    for n in 0..50 {
        let (f, g) = random_isolated_pair(&mut rng);
        let a = random_terms(&mut rng, 0, 3, 3);
        let b = random_terms(&mut rng, 0, 3, 3);
        let h = &(&a * &f) + &(&b * &g);
        let r = grothendieck_residue(&h, &f, &g).map_err(err)?;
        ensure(r.is_zero(), format!("ideal case {n}: residue {r}"))?;
    }
    Ok("50 linearity and 50 ideal-vanishing cases exact".into())
}

fn levi_flat_and_pencil() -> Outcome {
    let rho = levi_flat_from_rational(&"Z1".parse().map_err(err)?, &"Z3".parse().map_err(err)?).map_err(err)?;
    let text = rho.to_string();
    ensure(text == "Z1*conj(Z3) - conj(Z1)*Z3", format!("rho = {text}"))?;
    let pf = projectivize(&pencil_lines().foliation).map_err(err)?;
    let n = bezout_count(&pf).map_err(err)?;
    ensure(pf.degree == 0 && n == 1, format!("degree {} count {n}", pf.degree))?;
    let r = verify_baum_bott_global(&pf).map_err(err)?;
    let four = GaussRational::from_int(4);
    ensure(r.points.len() == 1, format!("{} points", r.points.len()))?;
    let p = &r.points[0];
    ensure(
        p.chart == ChartId::Z2 && p.index.as_exact() == Some(&four) && r.target == four,
        format!("BB {} at {:?}", p.index, p.chart),
    )?;
    Ok(format!("rho = {text}; single point [0:1:0] with BB 4 = target"))
}

fn jouanolou_non_dicritical() -> Outcome {
    let e = jouanolou(1).map_err(err)?;
    let all = classify_singular_points(&e.foliation, DEFAULT_DEPTH, 1e-6).map_err(err)?;
    ensure(all.len() == 3, format!("{} points", all.len()))?;
    let mut parts = vec![];
    for pv in &all {
        ensure(pv.verdict.verdict != Verdict::Dicritical, "a dicritical verdict")?;
        match &pv.exact {
            Some(p) => {
                ensure(
                    pv.verdict.verdict == Verdict::NonDicritical,
                    format!("exact point {p:?} is {}", pv.verdict.verdict),
                )?;
                parts.push(format!("({}, {}) {} exactly", p[0], p[1], pv.verdict.verdict));
            }
            None => parts.push(format!("numeric point {}", pv.verdict.verdict)),
        }
    }
    Ok(parts.join(", "))
}

fn parser_and_golden_determinism() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9a55);
    for n in 0..500 {
        let e = random_expr(&mut rng, 5);
        let text = e.to_string();
        let back = parse(&text).map_err(|x| format!("case {n}: {text}: {x}"))?;
        ensure(back == e, format!("case {n}: {text} reparsed differently"))?;
        ensure(back.to_string() == text, format!("case {n}: print is not stable"))?;
    }
    let cases = golden_cases();
    for c in &cases {
        let first = c.run_in_process();
        let second = c.run_in_process();
        ensure(first.stdout == second.stdout, format!("{}: runs differ", c.name))?;
        ensure(first.code == c.exit, format!("{}: exit {} expected {}", c.name, first.code, c.exit))?;
        let want = golden_expected(c, &first.stdout);
        ensure(first.stdout == want, format!("{}: transcript differs from {}", c.name, c.path().display()))?;
    }
    Ok(format!("500 roundtrips; {} golden transcripts identical across two runs", cases.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("Jouanolou singular counts", jouanolou_counts),
        ("Baum-Bott theorem sums", baum_bott_sums),
        ("degree-two unique-point certificate", cusp_form_certificate),
        ("Camacho-Sad theorem sums", camacho_sad_sums),
        ("factored-integral Baum-Bott suite", factored_integral_suite),
        ("residue kernel properties", residue_properties),
        ("Levi-flat polynomial and line pencil", levi_flat_and_pencil),
        ("Jouanolou non-dicritical control", jouanolou_non_dicritical),
        ("parser and report determinism", parser_and_golden_determinism),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let dt = t.elapsed();
        match result {
            Ok(detail) => println!("criterion {}: PASS ({name}; {detail}; {dt:.2?})", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL ({name}; {why}; {dt:.2?})", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
