//! Blow-up search for dicritical singularities.

use residua::catalog::jouanolou;
use residua::cli::eval::parse_one_form;
use residua::dicritical::{classify_singular_points, is_dicritical, is_simple_dicritical, DEFAULT_DEPTH};
use residua::indices::format_complex;

fn main() -> residua::Result<()> {
    for src in [
        "x*dy - y*dx",
        "x*dy - 2*y*dx",
        "x*dy - (2*y + x^2)*dx",
        "x*dy + 2*y*dx",
        "y*dx + x^2*dy",
        "x^2*dx + y^2*(x*dy - y*dx)",
    ] {
        let form = parse_one_form(src)?;
        let v = is_dicritical(&form, DEFAULT_DEPTH)?;
        println!("{src:<28} {:<15} depth {}", v.verdict.to_string(), v.depth_used);
        for step in &v.witness {
            println!("    {} {} {}", step.path, step.chart, step.form);
        }
    }

    let simple = parse_one_form("-x*y*dx + (x^2 + y^3)*dy")?;
    println!("simple dicritical: {}", is_simple_dicritical(&simple)?);

    for p in classify_singular_points(&jouanolou(1)?.foliation, DEFAULT_DEPTH, 1e-9)? {
        println!(
            "jouanolou:1 point ({}, {}): {}",
            format_complex(p.approx[0]),
            format_complex(p.approx[1]),
            p.verdict.verdict
        );
    }
    Ok(())
}
