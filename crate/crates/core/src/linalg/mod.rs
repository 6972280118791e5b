//! Exact integer and rational linear algebra.

mod hnf;
mod matrix;
mod snf;
mod solve;

pub use hnf::{hermite_normal_form, is_hermite_form, HermiteForm};
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithForm};
pub use solve::{
    cofactor_normal, primitive, saturated_row_basis, sign_normalized, solve_integer, solve_rational,
};
