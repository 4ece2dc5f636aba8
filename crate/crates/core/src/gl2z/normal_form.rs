//! Canonical normal form of GL(2,Z) elements.
//!
//! Every element is uniquely `R^ε · (−I)^s · lift(w)` with `ε, s ∈ {0,1}` and
//! `w` a reduced word in Z₂ ∗ Z₃. Uniqueness comes from SL(2,Z) being the
//! amalgam Z₄ ∗_{Z₂} Z₆ over its center `{±I}` and PSL(2,Z) ≅ Z₂ ∗ Z₃.

use std::fmt;

use super::matrix::Mat2;
use super::psl::{PslSyllable, PslWord};
use super::word::{decompose, Letter};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    /// Exponent of `R` (set exactly when det = −1).
    pub r_flag: bool,
    /// Exponent of the central element `−I = A² = B³`.
    pub sign: bool,
    pub psl: PslWord,
}

impl NormalForm {
    /// Builds a normal form from raw syllables, rejecting non-reduced words.
    pub fn new(r_flag: bool, sign: bool, syllables: Vec<PslSyllable>) -> Result<Self> {
        Ok(NormalForm {
            r_flag,
            sign,
            psl: PslWord::from_reduced(syllables)?,
        })
    }

    pub fn to_matrix(&self) -> Mat2 {
        nf_to_matrix(self)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "r = {}, sign = {}, psl = {}",
            self.r_flag as u8, self.sign as u8, self.psl
        )
    }
}

fn letter_image(l: Letter) -> Option<PslSyllable> {
    match l {
        Letter::A | Letter::AInv => Some(PslSyllable::A),
        Letter::B => Some(PslSyllable::B),
        Letter::BInv => Some(PslSyllable::B2),
        Letter::R => None,
    }
}

pub fn normal_form(m: &Mat2) -> NormalForm {
    let r_flag = m.det() == -1;
    let special = if r_flag {
        Mat2::gen_r().multiply(m)
    } else {
        m.clone()
    };
    let psl = PslWord::reduce(
        decompose(&special)
            .letters()
            .iter()
            .filter_map(|&l| letter_image(l)),
    );
    let sign = psl.lift() != special;
    debug_assert!(!sign || psl.lift().negate() == special);
    NormalForm { r_flag, sign, psl }
}

pub fn nf_to_matrix(n: &NormalForm) -> Mat2 {
    let mut m = n.psl.lift();
    if n.sign {
        m = m.negate();
    }
    if n.r_flag {
        m = Mat2::gen_r().multiply(&m);
    }
    m
}

/// The projection onto Z₂ ∗ Z₃, with the R-coset recorded separately.
///
/// On SL(2,Z) the kernel is exactly `{I, −I}`.
pub fn alpha_project(m: &Mat2) -> (bool, PslWord) {
    let nf = normal_form(m);
    (nf.r_flag, nf.psl)
}

#[cfg(test)]
mod tests {
    use super::*;
    use PslSyllable::{A, B, B2};

    fn m(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        Mat2::from_i64(a, b, c, d).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(
            normal_form(&Mat2::identity()),
            NormalForm::new(false, false, vec![]).unwrap()
        );
        assert_eq!(
            normal_form(&Mat2::neg_identity()),
            NormalForm::new(false, true, vec![]).unwrap()
        );
        assert_eq!(
            normal_form(&Mat2::gen_r()),
            NormalForm::new(true, false, vec![]).unwrap()
        );
    }

    #[test]
    fn nf_to_matrix_examples() {
        let nf = |r, s, w: &[PslSyllable]| NormalForm::new(r, s, w.to_vec()).unwrap().to_matrix();
        assert!(nf(false, false, &[]).is_identity());
        assert_eq!(nf(false, true, &[]), Mat2::neg_identity());
        assert_eq!(nf(false, false, &[A]), Mat2::gen_a());
        assert_eq!(
            normal_form(&Mat2::gen_a()),
            NormalForm::new(false, false, vec![A]).unwrap()
        );
        assert!(NormalForm::new(false, false, vec![A, A]).is_err());
        assert!(NormalForm::new(false, false, vec![B, B2]).is_err());
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(
            alpha_project(&Mat2::identity()),
            (false, PslWord::identity())
        );
        assert_eq!(
            alpha_project(&Mat2::neg_identity()),
            (false, PslWord::identity())
        );
        let comm = m(2, -1, -1, 1);
        assert_eq!(
            alpha_project(&comm),
            (false, PslWord::from_reduced(vec![A, B, A, B2]).unwrap())
        );
        assert!(alpha_project(&Mat2::gen_r()).0);
    }

    #[test]
    fn round_trips_through_matrix() {
        for x in [
            m(3, 2, 7, 5),
            m(-3, -2, -7, -5),
            m(2, 1, 1, 0),
            m(1, 12, 0, 1),
            m(0, 1, -1, 0),
        ] {
            assert_eq!(normal_form(&x).to_matrix(), x);
        }
    }
}
