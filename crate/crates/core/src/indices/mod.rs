//! Baum–Bott, Camacho–Sad and Milnor indices, locally and summed over `P²`.

pub mod global;
pub mod local;
pub mod value;

pub use global::{
    curve_is_invariant, homogeneous_point, verify_baum_bott_global, verify_camacho_sad, verify_camacho_sad_auto,
    BaumBottReport, CamachoSadReport, CsContribution, CsInput, CsRoute, PointContribution, PointLocation,
};
pub use local::{
    bb_from_factored_integral, bb_nondegenerate, bb_residue, cs_from_factored_integral, cs_smooth_branch,
    milnor_number,
};
pub use value::{format_complex, IndexKind, IndexNumber, IndexValue, JacobianData};
