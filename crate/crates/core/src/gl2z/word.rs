//! Words over the generators `A`, `B`, `R` and the continued-fraction
//! decomposition of a matrix into such a word.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::Mat2;
use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    AInv,
    B,
    BInv,
    R,
}

impl Letter {
    pub const ALL: [Letter; 5] = [Letter::A, Letter::AInv, Letter::B, Letter::BInv, Letter::R];

    pub fn inverse(self) -> Letter {
        match self {
            Letter::A => Letter::AInv,
            Letter::AInv => Letter::A,
            Letter::B => Letter::BInv,
            Letter::BInv => Letter::B,
            Letter::R => Letter::R,
        }
    }

    pub fn matrix(self) -> Mat2 {
        match self {
            Letter::A => Mat2::gen_a(),
            Letter::AInv => Mat2::gen_a().inverse(),
            Letter::B => Mat2::gen_b(),
            Letter::BInv => Mat2::gen_b().inverse(),
            Letter::R => Mat2::gen_r(),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Letter::A => "A",
            Letter::AInv => "A'",
            Letter::B => "B",
            Letter::BInv => "B'",
            Letter::R => "R",
        }
    }
}

/// Signed letter counts of a word.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct ExponentSums {
    pub a: i64,
    pub b: i64,
    pub r: i64,
}

/// A finite word in `A^{±1}`, `B^{±1}`, `R`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GenWord(pub Vec<Letter>);

impl GenWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        GenWord(letters)
    }

    pub fn empty() -> Self {
        GenWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Left-to-right product of the generator matrices.
    pub fn evaluate(&self) -> Mat2 {
        let (a, ai, b, bi, r) = (
            Mat2::gen_a(),
            Mat2::gen_a().inverse(),
            Mat2::gen_b(),
            Mat2::gen_b().inverse(),
            Mat2::gen_r(),
        );
        self.0.iter().fold(Mat2::identity(), |acc, l| {
            let g = match l {
                Letter::A => &a,
                Letter::AInv => &ai,
                Letter::B => &b,
                Letter::BInv => &bi,
                Letter::R => &r,
            };
            acc.multiply(g)
        })
    }

    pub fn inverse(&self) -> GenWord {
        GenWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &GenWord) -> GenWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        GenWord(v)
    }

    pub fn exponent_sums(&self) -> ExponentSums {
        let mut s = ExponentSums::default();
        for l in &self.0 {
            match l {
                Letter::A => s.a += 1,
                Letter::AInv => s.a -= 1,
                Letter::B => s.b += 1,
                Letter::BInv => s.b -= 1,
                Letter::R => s.r += 1,
            }
        }
        s
    }

    /// Cancels adjacent inverse pairs (`R R` included).
    pub fn free_reduce(&self) -> GenWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        GenWord(out)
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(l.symbol())?;
        }
        Ok(())
    }
}

/// Parses strings over `{A, A', B, B', R}`; whitespace is ignored.
impl FromStr for GenWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        let mut chars = s.chars().filter(|c| !c.is_whitespace()).peekable();
        while let Some(c) = chars.next() {
            let inverted = chars.peek() == Some(&'\'');
            if inverted {
                chars.next();
            }
            let letter = match (c, inverted) {
                ('A', false) => Letter::A,
                ('A', true) => Letter::AInv,
                ('B', false) => Letter::B,
                ('B', true) => Letter::BInv,
                ('R', _) => Letter::R,
                _ => {
                    return Err(Error::Parse(format!(
                        "unexpected symbol {c:?} in word {s:?}"
                    )))
                }
            };
            out.push(letter);
        }
        Ok(GenWord(out))
    }
}

/// One step of the bottom-row reduction: right multiplication by `T^k` or by `S = A`.
enum Step {
    Translate(BigInt),
    Rotate,
}

/// Writes `m` as a word in `A^{±1}, B^{±1}, R`.
///
/// For det −1 the word is `R` followed by the word of `R·m`. For det +1 the
/// bottom row is reduced by a nearest-remainder Euclidean algorithm using
/// `T = B⁻¹A⁻¹` and `S = A`; the recorded steps are inverted to give the word.
///
/// The word length grows with the size of the continued-fraction partial
/// quotients; use [`decomposition_exponent_sums`] when only counts are needed.
/// Panics if the word cannot be held in memory (see [`decomposition_len`]).
pub fn decompose(m: &Mat2) -> GenWord {
    let (reflected, steps) = reduction_steps(m);
    let mut letters = Vec::new();
    if reflected {
        letters.push(Letter::R);
    }
    // m·X₁⋯Xₙ = I  ⇒  m = Xₙ⁻¹⋯X₁⁻¹.
    for step in steps.iter().rev() {
        match step {
            Step::Rotate => letters.push(Letter::AInv),
            Step::Translate(k) => {
                // T^{-k}: T = B'A', T⁻¹ = AB.
                let count = k.abs().to_usize().expect("shift fits in memory");
                let unit: [Letter; 2] = if k.is_positive() {
                    [Letter::A, Letter::B]
                } else {
                    [Letter::BInv, Letter::AInv]
                };
                for _ in 0..count {
                    letters.extend_from_slice(&unit);
                }
            }
        }
    }
    GenWord(letters).free_reduce()
}

/// Number of letters [`decompose`] produces before free reduction; an upper
/// bound on the length of the returned word, computed without expanding it.
pub fn decomposition_len(m: &Mat2) -> BigInt {
    let (reflected, steps) = reduction_steps(m);
    let mut n = BigInt::from(reflected as u8);
    for step in &steps {
        match step {
            Step::Rotate => n += 1,
            Step::Translate(k) => n += k.abs() * 2,
        }
    }
    n
}

/// Exponent sums `(e_A, e_B, e_R)` of [`decompose`]`(m)`, computed without
/// expanding the word.
pub fn decomposition_exponent_sums(m: &Mat2) -> (BigInt, BigInt, BigInt) {
    let (reflected, steps) = reduction_steps(m);
    let mut ea = BigInt::zero();
    let mut eb = BigInt::zero();
    for step in &steps {
        match step {
            Step::Rotate => ea -= 1,
            // (AB)^k or (B'A')^{-k}: both letters move by k
            Step::Translate(k) => {
                ea += k;
                eb += k;
            }
        }
    }
    (ea, eb, BigInt::from(reflected as u8))
}

/// Steps `X₁, …, Xₙ` with `m'·X₁⋯Xₙ = I`, where `m' = R·m` if `det m = −1`
/// (flagged by the boolean) and `m' = m` otherwise.
fn reduction_steps(m: &Mat2) -> (bool, Vec<Step>) {
    let reflected = m.det() == -1;
    let m = if reflected {
        Mat2::gen_r().multiply(m)
    } else {
        m.clone()
    };

    let (mut a, mut b, mut c, mut d) = (m.a().clone(), m.b().clone(), m.c().clone(), m.d().clone());
    let mut steps: Vec<Step> = Vec::new();

    while !c.is_zero() {
        let k = nearest_shift(&c, &d);
        if !k.is_zero() {
            // (a b; c d)·(1 k; 0 1) = (a, ak+b; c, ck+d)
            b += &a * &k;
            d += &c * &k;
            steps.push(Step::Translate(k));
        }
        // (a b; c d)·(0 -1; 1 0) = (b, -a; d, -c)
        let (na, nb, nc, nd) = (b.clone(), -&a, d.clone(), -&c);
        a = na;
        b = nb;
        c = nc;
        d = nd;
        steps.push(Step::Rotate);
    }

    // Now (±1 b; 0 ±1).
    if a.is_one() {
        if !b.is_zero() {
            steps.push(Step::Translate(-b));
        }
    } else {
        // (-1 b; 0 -1)·T^b = -I, then S² = -I.
        if !b.is_zero() {
            steps.push(Step::Translate(b));
        }
        steps.push(Step::Rotate);
        steps.push(Step::Rotate);
    }
    (reflected, steps)
}

/// The `k` minimising `|d + k·c|`, preferring a non-negative remainder on ties.
fn nearest_shift(c: &BigInt, d: &BigInt) -> BigInt {
    let modulus = c.abs();
    let mut r = d.mod_floor(&modulus);
    if &r * 2 > modulus {
        r -= &modulus;
    }
    // d + k c = r
    (r - d) / c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        Mat2::from_i64(a, b, c, d).unwrap()
    }

    fn w(s: &str) -> GenWord {
        s.parse().unwrap()
    }

    #[test]
    fn evaluate_examples() {
        assert!(GenWord::empty().evaluate().is_identity());
        assert_eq!(w("B'A'").evaluate(), m(1, 1, 0, 1));
        let comm = Mat2::commutator(&Mat2::gen_a(), &Mat2::gen_b());
        assert_eq!(w("ARB'ARB'").evaluate(), comm);
    }

    #[test]
    fn exponent_sum_examples() {
        assert_eq!(GenWord::empty().exponent_sums(), ExponentSums::default());
        assert_eq!(
            w("B'A'").exponent_sums(),
            ExponentSums { a: -1, b: -1, r: 0 }
        );
        assert_eq!(
            w("ARB'ARB'").exponent_sums(),
            ExponentSums { a: 2, b: -2, r: 2 }
        );
    }

    #[test]
    fn word_text_round_trip() {
        let word = w("A A' B B' R");
        assert_eq!(word.to_string(), "AA'BB'R");
        assert_eq!(word.free_reduce(), w("R"));
        assert!("AXB".parse::<GenWord>().unwrap_err().is_parse());
    }

    #[test]
    fn decompose_examples() {
        assert!(decompose(&Mat2::identity()).is_empty());
        assert_eq!(decompose(&m(1, 1, 0, 1)), w("B'A'"));
        let five = decompose(&m(1, 5, 0, 1));
        assert_eq!(five.evaluate(), m(1, 5, 0, 1));
        let s = five.exponent_sums();
        assert_eq!((s.a, s.b), (-5, -5));
    }

    #[test]
    fn decompose_places_r_first() {
        let x = m(2, 1, 1, 0);
        let word = decompose(&x);
        assert_eq!(word.evaluate(), x);
        assert_eq!(word.letters()[0], Letter::R);
        assert_eq!(
            word.letters().iter().filter(|&&l| l == Letter::R).count(),
            1
        );
        assert!(!decompose(&m(3, 2, 7, 5)).letters().contains(&Letter::R));
    }

    #[test]
    fn decompose_negative_identity_and_large_entries() {
        assert_eq!(
            decompose(&Mat2::neg_identity()).evaluate(),
            Mat2::neg_identity()
        );
        let big = m(2, 1, 1, 1).pow(90).multiply(&m(1, 0, 3, 1).pow(-40));
        assert_eq!(decompose(&big).evaluate(), big);
    }

    #[test]
    fn length_bound_without_expansion() {
        for x in [
            m(1, 5, 0, 1),
            m(3, 2, 7, 5),
            m(0, 1, 1, 0),
            Mat2::neg_identity(),
        ] {
            assert!(BigInt::from(decompose(&x).len()) <= decomposition_len(&x));
        }
        assert_eq!(decomposition_len(&m(1, 7, 0, 1)), BigInt::from(14));
        let huge = Mat2::translation().pow(1 << 62).pow(4);
        assert_eq!(decomposition_len(&huge), BigInt::from(1u8) << 65);
    }

    #[test]
    fn exponent_sums_without_expansion() {
        for x in [
            m(1, 5, 0, 1),
            m(3, 2, 7, 5),
            m(2, 1, 1, 0),
            Mat2::neg_identity(),
        ] {
            let s = decompose(&x).exponent_sums();
            let (ea, eb, er) = decomposition_exponent_sums(&x);
            assert_eq!(
                (BigInt::from(s.a), BigInt::from(s.b), BigInt::from(s.r)),
                (ea, eb, er)
            );
        }
        let huge = Mat2::new(1.into(), BigInt::from(10).pow(40), 0.into(), 1.into()).unwrap();
        let (ea, eb, _) = decomposition_exponent_sums(&huge);
        assert_eq!(ea, -BigInt::from(10).pow(40));
        assert_eq!(eb, ea);
    }

    #[test]
    fn nearest_shift_tie_breaking() {
        let k = |c: i64, d: i64| nearest_shift(&c.into(), &d.into());
        // d + k c: 7 - 2·3 = 1
        assert_eq!(k(3, 7), BigInt::from(-2));
        // remainder ±2 mod 4 on a tie: prefer +2
        assert_eq!(k(4, 6), BigInt::from(-1));
        assert_eq!(k(-4, 6), BigInt::from(1));
        assert_eq!(k(5, 3), BigInt::from(-1));
    }
}
