//! Foliations by 1-forms on affine charts and on the projective plane.

pub mod form;
pub mod numeric;
pub mod projective;
pub mod singular;

pub use form::{dualize, translate, AffineFoliation1Form, ChartId, VectorFieldRepr};
pub use numeric::numeric_roots;
pub use projective::{bezout_count, chart_transition, projectivize, ProjectiveFoliation};
pub use singular::{singular_locus, NumericPoint, RationalPoint, SingularLocus};
