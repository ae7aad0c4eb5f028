//! Numerical checks of the Fourier-analytic relaxation of MAX-CUT(G_n).

pub mod coefficients;
pub mod level;
pub mod torus;

pub use coefficients::{lhs_form, quadrature_integral, rhs_form, step_function_table, symmetrize, CoefficientTable};
pub use level::{
    canonical_forms_exact, canonical_level_value, canonical_partial_sums, cosine, level_form_evaluate,
    level_form_matrices, level_gradient_check, level_max_ratio, ExactLevelForms, LevelEigen, LevelForms, LevelVector,
};
pub use torus::{
    bracket, convolution_sum, crossing_indicator, parity_product, truncated_series, truncated_series_c, TorusPoint,
};
