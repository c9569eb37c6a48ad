//! Camacho-Sad indices along invariant branches and their sum along lines.

use residua::algebra::{MultiPoly, Var};
use residua::catalog::conic_pencil;
use residua::cli::eval::{parse_factored_integral, parse_one_form};
use residua::foliation::projectivize;
use residua::indices::{cs_from_factored_integral, cs_smooth_branch, verify_camacho_sad_auto};

fn main() -> residua::Result<()> {
    let form = parse_one_form("-y*dx + 3*x*dy")?;
    println!("along x = 0: {}", cs_smooth_branch(&form, Var::X)?);
    println!("along y = 0: {}", cs_smooth_branch(&form, Var::Y)?);

    let g = parse_factored_integral("x^2, y - x^2, y^3")?;
    for i in 0..g.branches().len() {
        println!("branch {} of x^2*(y - x^2)*y^3: {}", g.branches()[i].0, cs_from_factored_integral(&g, i)?);
    }

    let pf = projectivize(&conic_pencil().foliation)?;
    for name in ["Z1", "Z2", "Z3"] {
        let line: MultiPoly = name.parse()?;
        let r = verify_camacho_sad_auto(&pf, &line)?;
        let parts: Vec<String> = r.points.iter().map(|c| format!("{} via {}", c.index, c.route)).collect();
        println!("{{{name} = 0}}: {} = {} against {}", parts.join(" + "), r.sum, r.target);
    }
    Ok(())
}
