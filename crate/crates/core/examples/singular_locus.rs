//! Degree, Bezout count and affine singular points of a Jouanolou foliation.

use residua::catalog::jouanolou;
use residua::foliation::{bezout_count, projectivize, singular_locus};
use residua::indices::format_complex;

fn main() -> residua::Result<()> {
    for d in 1..=3 {
        let entry = jouanolou(d)?;
        let pf = projectivize(&entry.foliation)?;
        println!("{}: {}", entry.name, entry.foliation);
        println!("  degree {} with {} singular points on P^2", pf.degree, bezout_count(&pf)?);

        let locus = singular_locus(&entry.foliation)?;
        for p in &locus.rational_points {
            println!("  exact   ({}, {})  multiplicity {}", p.point[0], p.point[1], p.multiplicity);
        }
        for p in &locus.numeric_points {
            println!(
                "  numeric ({}, {})  multiplicity {}  residual {:.1e}",
                format_complex(p.point[0]),
                format_complex(p.point[1]),
                p.multiplicity,
                p.residual
            );
        }
    }
    Ok(())
}
