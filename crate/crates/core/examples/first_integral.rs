//! Darboux first integrals and one-forms built from factored integrals.

use residua::catalog::degree2_normal_form;
use residua::cli::eval::{parse_darboux, parse_factored_integral};
use residua::indices::bb_from_factored_integral;
use residua::integral::{check_first_integral, one_form_from_factored};

fn main() -> residua::Result<()> {
    for k in 1..=3 {
        let e = degree2_normal_form(k)?;
        if let Some(spec) = &e.expected.first_integral {
            println!("{}: {} is a first integral: {}", e.name, spec, check_first_integral(&e.foliation, spec)?);
        }
    }

    let e = degree2_normal_form(1)?;
    let wrong = parse_darboux("rat(y, x)")?;
    println!("{}: {wrong} is a first integral: {}", e.name, check_first_integral(&e.foliation, &wrong)?);

    let g = parse_factored_integral("y - x^2, (x + y)^3, y^2")?;
    let form = one_form_from_factored(&g)?;
    println!("d of {} is proportional to {form}", g.expand());
    println!("closed-form BB at the origin: {}", bb_from_factored_integral(&g)?);
    Ok(())
}
