//! Gröbner bases, quotient dimensions, intersection numbers and residues.

pub mod groebner;
pub mod jets;
pub mod order;
pub mod quotient;
pub mod residue;

pub use groebner::{groebner_lex, normal_form, standard_monomials, IdealBasis, StandardMonomialSet};
pub use order::TermOrder;
pub use quotient::{squarefree_layers, Matrix, PointBlocks, QuotientAlgebra};
pub use residue::{
    eliminant, elimination_generator, grothendieck_residue, grothendieck_residue_by_elimination, local_intersection_multiplicity,
    local_intersection_multiplicity_by_localization, local_intersection_multiplicity_seeded,
    quotient_dimension, quotient_dimension_in, series_residue, Elimination, QuotientDimension,
};
