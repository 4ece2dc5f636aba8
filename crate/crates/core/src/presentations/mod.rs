//! Abelian invariants of finitely presented groups, and exact checks of the
//! GL(2,Z) presentation against the concrete generator matrices.

mod parse;
mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::gl2z::Mat2;

pub use parse::{PresWord, Presentation};
pub use snf::{smith_decomposition, smith_normal_form, IntMatrix, SmithDecomposition};

/// One row per relator, one column per generator; entries are exponent sums.
pub fn relator_matrix(p: &Presentation) -> IntMatrix {
    let n = p.generators().len();
    let rows: Vec<Vec<i64>> = p.relators().iter().map(|r| r.exponent_sums(n)).collect();
    IntMatrix::from_rows(&rows, n)
}

/// Invariant factors of an abelian group, `0` standing for a copy of Z.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    /// One entry per generator, trivial factors included.
    pub factors: Vec<BigInt>,
}

impl AbelianInvariants {
    /// Factors with the trivial `1`s removed.
    pub fn display_factors(&self) -> Vec<BigInt> {
        self.factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.display_factors().is_empty()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .display_factors()
            .iter()
            .map(|d| {
                if d.is_zero() {
                    "Z".into()
                } else {
                    format!("Z{d}")
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Abelianization of `p` with `extra` relators appended.
pub fn abelian_invariants(p: &Presentation, extra: &[PresWord]) -> AbelianInvariants {
    let m = relator_matrix(&p.with_relators(extra));
    let mut factors = smith_normal_form(&m);
    factors.resize(m.cols(), BigInt::zero());
    AbelianInvariants { factors }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub holds: bool,
    /// Counted by [`verify_matrix_presentation`].
    pub required: bool,
}

/// Every identity the presentation and the free-basis rewriting rely on, under
/// the given images of `A`, `B`, `R`.
///
/// The last entry is the commonly quoted form `[A,B⁻¹] = (B⁻¹RB)²`; it does not hold
/// (the left side is `(1 -1; -1 2)`, the right side `I`) and is reported for
/// information only. `[A,B⁻¹] = (ARB)²` is the identity actually used.
pub fn identity_checks(a: &Mat2, b: &Mat2, r: &Mat2) -> Vec<IdentityCheck> {
    let i = Mat2::identity();
    let neg = Mat2::neg_identity();
    let (a_inv, b_inv) = (a.inverse(), b.inverse());
    let sq = |m: &Mat2| m.multiply(m);
    let arb_inv = Mat2::product([a, r, &b_inv]);
    let arb = Mat2::product([a, r, b]);
    let brb = Mat2::product([&b_inv, r, b]);
    let req = |name, holds| IdentityCheck {
        name,
        holds,
        required: true,
    };
    vec![
        req("A^2 = -I", sq(a) == neg),
        req("B^3 = -I", b.pow(3) == neg),
        req("A^4 = I", a.pow(4) == i),
        req("R^2 = I", sq(r) == i),
        req("(RA)^2 = I", sq(&r.multiply(a)) == i),
        req("(RB)^2 = I", sq(&r.multiply(b)) == i),
        req("RA = A'R", r.multiply(a) == a_inv.multiply(r)),
        req("RB = B'R", r.multiply(b) == b_inv.multiply(r)),
        req("[A,B] = (A R B')^2", Mat2::commutator(a, b) == sq(&arb_inv)),
        req(
            "[A,B'] = (A R B)^2",
            Mat2::commutator(a, &b_inv) == sq(&arb),
        ),
        req("det(A R B') = -1", arb_inv.det() == -1),
        req("det(A R B) = -1", arb.det() == -1),
        req("det(B' R B) = -1", brb.det() == -1),
        IdentityCheck {
            name: "[A,B'] = (B' R B)^2",
            holds: Mat2::commutator(a, &b_inv) == sq(&brb),
            required: false,
        },
    ]
}

/// Whether every required identity holds for the given generator images.
pub fn verify_matrix_presentation_with(a: &Mat2, b: &Mat2, r: &Mat2) -> bool {
    identity_checks(a, b, r)
        .iter()
        .all(|c| c.holds || !c.required)
}

/// [`verify_matrix_presentation_with`] at the standard generators.
pub fn verify_matrix_presentation() -> bool {
    verify_matrix_presentation_with(&Mat2::gen_a(), &Mat2::gen_b(), &Mat2::gen_r())
}

/// `⟨A, B, R | … , A², B², R²⟩`, the presentation of G/G².
pub fn gl2z_mod_squares() -> Presentation {
    let p = Presentation::gl2z();
    let extra: Vec<PresWord> = (0..3).map(|g| PresWord::generator(g, 2)).collect();
    p.with_relators(&extra)
}
