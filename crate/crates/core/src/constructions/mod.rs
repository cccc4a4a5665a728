//! The named code families: lines, all conics, parabolas, and the net of
//! conics without degenerate members.

mod net;
mod systems;

pub use net::{
    build_net, construction1_code, construction1_survey, distance_lower_bound, find_lambda_point, in_lambda,
    intersection_window, lambda_count, lambda_count_formula, sample_lambda_points, summarize_net, CubicElem,
    CubicPoint, LambdaSearch, NetContext, NetMember, NetSample, NetSummary, NetSurvey,
};
pub use systems::{
    conic_basis, construction2_code, full_conic_code, line_basis, line_code, parabola_basis, CodeReport,
    DualDistance, EvaluatedCode,
};
