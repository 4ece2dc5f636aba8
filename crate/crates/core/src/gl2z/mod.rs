//! Exact arithmetic in GL(2,Z).

mod matrix;
mod normal_form;
mod psl;
mod word;

pub use matrix::Mat2;
pub use normal_form::{alpha_project, nf_to_matrix, normal_form, NormalForm};
pub use psl::{PslSyllable, PslWord};
pub use word::{
    decompose, decomposition_exponent_sums, decomposition_len, ExponentSums, GenWord, Letter,
};

/// Product of two matrices.
pub fn multiply(x: &Mat2, y: &Mat2) -> Mat2 {
    x.multiply(y)
}

pub fn inverse(x: &Mat2) -> Mat2 {
    x.inverse()
}

pub fn evaluate(w: &GenWord) -> Mat2 {
    w.evaluate()
}

pub fn exponent_sums(w: &GenWord) -> ExponentSums {
    w.exponent_sums()
}
