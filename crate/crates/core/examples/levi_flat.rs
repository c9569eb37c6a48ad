//! Real defining polynomials of Levi-flat hypersurfaces from rational integrals.

use residua::catalog::{levi_flat_from_rational, levi_flat_is_real};
use residua::cli::eval::parse_poly;

fn main() -> residua::Result<()> {
    for (num, den) in [("Z1", "Z3"), ("Z1^2 + Z2*Z3", "Z3^2"), ("Z1*Z2", "Z3^2 - Z1*Z2")] {
        let (p, q) = (parse_poly(num)?, parse_poly(den)?);
        let rho = levi_flat_from_rational(&p, &q)?;
        println!("({num})/({den}): rho = {rho}");
        println!("  rho/(2i) real: {}", levi_flat_is_real(&rho));
    }
    match levi_flat_from_rational(&parse_poly("Z1*Z3")?, &parse_poly("Z3^2")?) {
        Ok(rho) => println!("unexpected {rho}"),
        Err(e) => println!("non-reduced quotient rejected: {e}"),
    }
    Ok(())
}
