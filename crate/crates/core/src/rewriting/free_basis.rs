//! Rewriting elements of SL(2,Z)′ over its free basis `p = [A,B]`, `q = [A,B⁻¹]`.
//!
//! The element is projected to Z₂ ∗ Z₃, where the commutator subgroup is the
//! kernel of the map onto Z₂ × Z₃. Reidemeister–Schreier rewriting over the
//! transversal `{1, b, b², a, ab, ab²}` yields the four Schreier generators
//!
//! ```text
//! (b,  a) ↦ b a b² a = p⁻¹      (ab,  a) ↦ a b a b² = p
//! (b², a) ↦ b² a b a = q⁻¹      (ab², a) ↦ a b² a b = q
//! ```
//!
//! and every other (coset, letter) pair gives the identity. The projection
//! restricted to commutator subgroups is an isomorphism, so substituting the
//! matrix commutators back reproduces the input exactly.

use std::fmt;

use crate::error::{Error, Result};
use crate::gl2z::{alpha_project, Mat2, PslSyllable};
use crate::invariants::in_derived_sl;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FreeBasisLetter {
    P,
    PInv,
    Q,
    QInv,
}

impl FreeBasisLetter {
    pub const ALL: [FreeBasisLetter; 4] = [
        FreeBasisLetter::P,
        FreeBasisLetter::PInv,
        FreeBasisLetter::Q,
        FreeBasisLetter::QInv,
    ];

    pub fn inverse(self) -> Self {
        match self {
            FreeBasisLetter::P => FreeBasisLetter::PInv,
            FreeBasisLetter::PInv => FreeBasisLetter::P,
            FreeBasisLetter::Q => FreeBasisLetter::QInv,
            FreeBasisLetter::QInv => FreeBasisLetter::Q,
        }
    }

    pub fn matrix(self) -> Mat2 {
        let (a, b) = (Mat2::gen_a(), Mat2::gen_b());
        match self {
            FreeBasisLetter::P => Mat2::commutator(&a, &b),
            FreeBasisLetter::PInv => Mat2::commutator(&b, &a),
            FreeBasisLetter::Q => Mat2::commutator(&a, &b.inverse()),
            FreeBasisLetter::QInv => Mat2::commutator(&b.inverse(), &a),
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            FreeBasisLetter::P => "p",
            FreeBasisLetter::PInv => "p'",
            FreeBasisLetter::Q => "q",
            FreeBasisLetter::QInv => "q'",
        }
    }
}

/// A freely reduced word in `p^{±1}, q^{±1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeBasisWord(Vec<FreeBasisLetter>);

impl FreeBasisWord {
    /// Freely reduces the given letters.
    pub fn reduce<I: IntoIterator<Item = FreeBasisLetter>>(letters: I) -> Self {
        let mut out: Vec<FreeBasisLetter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeBasisWord(out)
    }

    pub fn letters(&self) -> &[FreeBasisLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Substitutes `p ↦ [A,B]`, `q ↦ [A,B⁻¹]` and multiplies out.
    pub fn evaluate(&self) -> Mat2 {
        self.0
            .iter()
            .fold(Mat2::identity(), |acc, l| acc.multiply(&l.matrix()))
    }

    /// All freely reduced words of exactly `len` letters.
    pub fn enumerate_length(len: usize) -> Vec<FreeBasisWord> {
        let mut out = vec![FreeBasisWord::default()];
        for _ in 0..len {
            out = out
                .iter()
                .flat_map(|w| {
                    FreeBasisLetter::ALL.iter().filter_map(move |&l| {
                        if w.0.last() == Some(&l.inverse()) {
                            None
                        } else {
                            let mut v = w.0.clone();
                            v.push(l);
                            Some(FreeBasisWord(v))
                        }
                    })
                })
                .collect();
        }
        out
    }
}

impl fmt::Display for FreeBasisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<&str> = self.0.iter().map(|l| l.symbol()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Schreier generator for stepping by `a` out of coset `a^i b^j`.
fn schreier_generator(i: u8, j: u8) -> Option<FreeBasisLetter> {
    match (i, j) {
        (0, 1) => Some(FreeBasisLetter::PInv),
        (0, 2) => Some(FreeBasisLetter::QInv),
        (1, 1) => Some(FreeBasisLetter::P),
        (1, 2) => Some(FreeBasisLetter::Q),
        _ => None,
    }
}

pub fn rewrite_in_free_basis(m: &Mat2) -> Result<FreeBasisWord> {
    if m.det() != 1 || !in_derived_sl(m)? {
        return Err(Error::NotInDerivedSubgroup);
    }
    let (_, psl) = alpha_project(m);

    let (mut i, mut j) = (0u8, 0u8);
    let mut letters = Vec::new();
    for &s in psl.syllables() {
        let b_steps = match s {
            PslSyllable::A => {
                letters.extend(schreier_generator(i, j));
                i ^= 1;
                continue;
            }
            PslSyllable::B => 1,
            PslSyllable::B2 => 2,
        };
        // steps by b never produce a nontrivial generator
        j = (j + b_steps) % 3;
    }
    debug_assert_eq!((i, j), (0, 0));

    let word = FreeBasisWord::reduce(letters);
    debug_assert_eq!(&word.evaluate(), m);
    Ok(word)
}
