//! Reduced words in the free product Z₂ ∗ Z₃ ≅ PSL(2,Z).
//!
//! The Z₂ factor is generated by `a`, the Z₃ factor by `b`; a syllable is one
//! of `a`, `b`, `b²`. Reduced words alternate between the two factors, which
//! makes them a canonical form for group elements.

use std::fmt;

use super::matrix::Mat2;
use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PslSyllable {
    A,
    B,
    B2,
}

impl PslSyllable {
    pub const ALL: [PslSyllable; 3] = [PslSyllable::A, PslSyllable::B, PslSyllable::B2];

    /// `true` for the Z₂ factor.
    pub fn in_z2(self) -> bool {
        self == PslSyllable::A
    }

    pub fn same_factor(self, other: PslSyllable) -> bool {
        self.in_z2() == other.in_z2()
    }

    pub fn inverse(self) -> PslSyllable {
        match self {
            PslSyllable::A => PslSyllable::A,
            PslSyllable::B => PslSyllable::B2,
            PslSyllable::B2 => PslSyllable::B,
        }
    }

    /// Exponent of `b` (0 for `a`).
    fn b_power(self) -> u8 {
        match self {
            PslSyllable::A => 0,
            PslSyllable::B => 1,
            PslSyllable::B2 => 2,
        }
    }

    /// Product of two syllables from the same factor; `None` is the identity.
    fn merge(self, other: PslSyllable) -> Option<PslSyllable> {
        debug_assert!(self.same_factor(other));
        if self.in_z2() {
            return None;
        }
        match (self.b_power() + other.b_power()) % 3 {
            0 => None,
            1 => Some(PslSyllable::B),
            _ => Some(PslSyllable::B2),
        }
    }

    /// Lift convention: `a ↦ A`, `b ↦ B`, `b² ↦ B²`.
    pub fn lift(self) -> Mat2 {
        match self {
            PslSyllable::A => Mat2::gen_a(),
            PslSyllable::B => Mat2::gen_b(),
            PslSyllable::B2 => Mat2::gen_b().pow(2),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            PslSyllable::A => "a",
            PslSyllable::B => "b",
            PslSyllable::B2 => "b2",
        }
    }
}

/// A reduced word in Z₂ ∗ Z₃.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PslWord(Vec<PslSyllable>);

impl PslWord {
    pub fn identity() -> Self {
        PslWord(Vec::new())
    }

    /// Validates that no two adjacent syllables share a factor.
    pub fn from_reduced(syllables: Vec<PslSyllable>) -> Result<Self> {
        if let Some(i) = syllables.windows(2).position(|w| w[0].same_factor(w[1])) {
            return Err(Error::NotReduced(i));
        }
        Ok(PslWord(syllables))
    }

    /// Multiplies out an arbitrary syllable sequence into reduced form.
    pub fn reduce<I: IntoIterator<Item = PslSyllable>>(syllables: I) -> Self {
        let mut out = PslWord::identity();
        for s in syllables {
            out.push(s);
        }
        out
    }

    /// Right multiplication by a single syllable.
    pub fn push(&mut self, s: PslSyllable) {
        match self.0.last() {
            Some(&last) if last.same_factor(s) => {
                self.0.pop();
                if let Some(m) = last.merge(s) {
                    self.0.push(m);
                }
            }
            _ => self.0.push(s),
        }
    }

    pub fn syllables(&self) -> &[PslSyllable] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiply(&self, rhs: &PslWord) -> PslWord {
        let mut out = self.clone();
        for &s in &rhs.0 {
            out.push(s);
        }
        out
    }

    pub fn inverse(&self) -> PslWord {
        PslWord(self.0.iter().rev().map(|s| s.inverse()).collect())
    }

    /// `[x, y] = x y x⁻¹ y⁻¹`.
    pub fn commutator(x: &PslWord, y: &PslWord) -> PslWord {
        x.multiply(y).multiply(&x.inverse()).multiply(&y.inverse())
    }

    /// Image of the word under the lift convention, a det +1 matrix.
    pub fn lift(&self) -> Mat2 {
        let (a, b, b2) = (
            PslSyllable::A.lift(),
            PslSyllable::B.lift(),
            PslSyllable::B2.lift(),
        );
        self.0.iter().fold(Mat2::identity(), |acc, s| {
            acc.multiply(match s {
                PslSyllable::A => &a,
                PslSyllable::B => &b,
                PslSyllable::B2 => &b2,
            })
        })
    }

    /// Returns `(g, core)` with `self = g · core · g⁻¹` and `core` cyclically
    /// reduced: either of length ≤ 1 or with first and last syllables in
    /// different factors.
    pub fn cyclic_reduction(&self) -> (PslWord, PslWord) {
        let mut core: Vec<PslSyllable> = self.0.clone();
        let mut start = 0usize;
        let mut end = core.len();
        let mut conj: Vec<PslSyllable> = Vec::new();
        while end - start >= 2 && core[start].same_factor(core[end - 1]) {
            let first = core[start];
            let last = core[end - 1];
            // last · (first mid last) · last⁻¹ = (last first) mid
            conj.push(last.inverse());
            end -= 1;
            match last.merge(first) {
                None => start += 1,
                Some(m) => core[start] = m,
            }
        }
        // self = conj₁ conj₂ … · core · … conj₂⁻¹ conj₁⁻¹
        let g = PslWord::reduce(conj.iter().copied());
        (g, PslWord(core[start..end].to_vec()))
    }

    /// A `y` with `y · self · y⁻¹ = other`, if the two are conjugate.
    pub fn conjugator_to(&self, other: &PslWord) -> Option<PslWord> {
        let (g1, u) = self.cyclic_reduction();
        let (g2, v) = other.cyclic_reduction();
        if u.len() != v.len() {
            return None;
        }
        // u = g1⁻¹ self g1, v = g2⁻¹ other g2.
        if u.len() <= 1 {
            return (u == v).then(|| g2.multiply(&g1.inverse()));
        }
        let n = u.len();
        (0..n).find_map(|k| {
            let rotated = u.0[k..].iter().chain(&u.0[..k]);
            if rotated.eq(v.0.iter()) {
                // v = P⁻¹ u P with P = u[..k]
                let p = PslWord(u.0[..k].to_vec());
                Some(g2.multiply(&p.inverse()).multiply(&g1.inverse()))
            } else {
                None
            }
        })
    }

    /// All reduced words of exactly `len` syllables, in lexicographic order.
    pub fn enumerate_length(len: usize) -> Vec<PslWord> {
        let mut out = vec![PslWord::identity()];
        for _ in 0..len {
            let mut next = Vec::with_capacity(out.len() * 2);
            for w in &out {
                for s in PslSyllable::ALL {
                    if w.0.last().is_none_or(|l| !l.same_factor(s)) {
                        let mut v = w.0.clone();
                        v.push(s);
                        next.push(PslWord(v));
                    }
                }
            }
            out = next;
        }
        out
    }

    /// All reduced words of at most `max_len` syllables, shortest first.
    pub fn enumerate_ball(max_len: usize) -> Vec<PslWord> {
        (0..=max_len).flat_map(PslWord::enumerate_length).collect()
    }
}

impl fmt::Display for PslWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<&str> = self.0.iter().map(|s| s.symbol()).collect();
        f.write_str(&parts.join(" "))
    }
}
