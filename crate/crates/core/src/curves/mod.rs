//! Curves attached to a conic and the identities between their point counts.

mod family;
mod poly;
mod reducibility;
mod relations;

pub use family::{
    cubic_by_v, cubic_by_x, g_axis_points_closed_form, pullback, split_multiplicity, tangent_parameter,
    transformed, Cubic, CurveContext, CurveFamily, FamilyCounts, QuadElem, TangentParameter,
};
pub use poly::{count_affine_points, lift, BivariatePoly, TermDump};
pub use reducibility::{
    recover_linear_factors, reducibility_case, reducibility_conditions, LinearFactors, QuadLine,
    ReducibilityCase, ReducibilityVerdict, Resultants,
};
pub use relations::{
    cubic_windows, hasse_applicable, hasse_window_check, in_cubic_windows, lemma_case, psi_fiber_violations,
    relation_row, standing_hypothesis, verify_count_relations, verify_lemma_delta, HasseCheck, LemmaCase,
    LemmaCheck, RelationCheck, RelationRow,
};
