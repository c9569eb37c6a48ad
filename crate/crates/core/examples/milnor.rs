//! Milnor numbers, intersection multiplicities and the local residue symbol.

use residua::algebra::{GaussRational, MultiPoly, Var};
use residua::cli::eval::{parse_one_form, parse_poly};
use residua::indices::milnor_number;
use residua::local::{grothendieck_residue, local_intersection_multiplicity};

fn jacobian(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    &(&f.derivative(Var::X) * &g.derivative(Var::Y)) - &(&f.derivative(Var::Y) * &g.derivative(Var::X))
}

fn main() -> residua::Result<()> {
    let origin = [GaussRational::from_int(0), GaussRational::from_int(0)];
    for src in ["x*dy - y*dx", "x^2*dx + y^2*(x*dy - y*dx)", "y*dx + x^2*dy"] {
        let form = parse_one_form(src)?;
        println!("Milnor number of {form}: {}", milnor_number(&form, &origin)?);
    }

    let (f, g) = (parse_poly("y^2 - x^3")?, parse_poly("y^3 - x^2 + x*y")?);
    let mu = local_intersection_multiplicity(&f, &g)?;
    let r = grothendieck_residue(&jacobian(&f, &g), &f, &g)?;
    println!("[{f}, {g}] at 0 = {mu}; residue of the Jacobian = {r}");

    let h = parse_poly("1 + x*y")?;
    println!("Res {{ ({h}) dx dy / ({f})({g}) }} = {}", grothendieck_residue(&h, &f, &g)?);
    Ok(())
}
