//! The affine plane over GF(q): the set `Δ`, lines, conics, and the
//! closed-form intersection counts checked against direct evaluation.

mod closed_form;
mod conic;
mod delta;
mod line;
mod point;

pub use closed_form::{
    classify_window, delta_window, delta_window_integers, parabola_count_closed_form,
    ExceptionalFamily, WindowClass,
};
pub use conic::{conic_classes, Conic, ProjectiveClasses};
pub use delta::DeltaSet;
pub use line::{line_delta_count_closed_form, Line, LineCase, LinePrediction};
pub use point::{cross, det3, pi_map, AffinePoint, ProjectivePoint};
