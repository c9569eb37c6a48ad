//! Local Baum-Bott residues and their global sum over the projective plane.

use residua::algebra::GaussRational;
use residua::catalog::jouanolou;
use residua::cli::eval::parse_one_form;
use residua::foliation::projectivize;
use residua::indices::{bb_nondegenerate, bb_residue, verify_baum_bott_global, JacobianData, PointLocation};

fn main() -> residua::Result<()> {
    let origin = [GaussRational::from_int(0), GaussRational::from_int(0)];

    let cusp = parse_one_form("x^2*dx + y^2*(x*dy - y*dx)")?;
    println!("BB at the origin of {cusp}: {}", bb_residue(&cusp, &origin)?);

    let saddle = parse_one_form("-y*dx + 3*x*dy")?;
    println!("BB of {saddle}: residue {}, trace formula {}", bb_residue(&saddle, &origin)?, bb_nondegenerate(&JacobianData::of_form(&saddle, &origin)?)?);

    let pf = projectivize(&jouanolou(2)?.foliation)?;
    let report = verify_baum_bott_global(&pf)?;
    for p in &report.points {
        let at = match &p.location {
            PointLocation::Exact(q) => format!("({}, {})", q[0], q[1]),
            PointLocation::Numeric { point, .. } => format!("({:.4}, {:.4})", point[0], point[1]),
        };
        println!("  {} {at}: {}", p.chart, p.index);
    }
    println!(
        "sum {} against (d + 2)^2 = {}; numeric gap {:.1e}",
        report.exact_sum, report.target, report.numeric_gap
    );
    Ok(())
}
