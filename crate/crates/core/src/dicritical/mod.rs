//! Dicriticality of singular points by iterated blow-ups.

pub mod blowup;
pub mod verdict;

pub use blowup::{blow_up, first_blowup_dicritical, jet_decomposition, BlowUpChart, BlowUpKind, JetDecomposition};
pub use verdict::{
    classify_singular_points, is_dicritical, is_dicritical_at, is_dicritical_numeric, is_simple_dicritical,
    positive_rational_ratio, BlowUpStep, DicriticalVerdict, PointVerdict, Verdict, DEFAULT_DEPTH, RATIO_BOUND,
};
