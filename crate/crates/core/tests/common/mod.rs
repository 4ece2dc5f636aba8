//! Fixtures and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;
use torb_core::gl2z::PslWord;
use torb_core::rewriting::{FreeBasisLetter, FreeBasisWord};
use torb_core::{GenWord, Letter, Mat2};

pub const LETTERS: [Letter; 5] = [Letter::A, Letter::AInv, Letter::B, Letter::BInv, Letter::R];

pub fn word_strategy(max_len: usize) -> impl Strategy<Value = GenWord> {
    prop::collection::vec(prop::sample::select(LETTERS.to_vec()), 0..=max_len).prop_map(GenWord)
}

pub fn det_one_strategy(max_len: usize) -> impl Strategy<Value = Mat2> {
    word_strategy(max_len).prop_map(|w| det_one(&w))
}

/// `evaluate(w)`, premultiplied by `R` when that has det −1.
pub fn det_one(w: &GenWord) -> Mat2 {
    let m = w.evaluate();
    if m.det() == 1 {
        m
    } else {
        Mat2::gen_r().multiply(&m)
    }
}

pub fn random_word<R: Rng>(rng: &mut R, max_len: usize) -> GenWord {
    let len = rng.gen_range(0..=max_len);
    GenWord((0..len).map(|_| LETTERS[rng.gen_range(0..5)]).collect())
}

pub fn random_free_basis_word<R: Rng>(rng: &mut R, max_len: usize) -> FreeBasisWord {
    let len = rng.gen_range(0..=max_len);
    FreeBasisWord::reduce((0..len).map(|_| FreeBasisLetter::ALL[rng.gen_range(0..4)]))
}

/// Small-integer matrices for exhaustive enumeration; entries stay tiny at
/// the lengths used here.
pub type Small = [i64; 4];

pub const SMALL_ID: Small = [1, 0, 0, 1];

pub fn small_letter(l: Letter) -> Small {
    match l {
        Letter::A => [0, -1, 1, 0],
        Letter::AInv => [0, 1, -1, 0],
        Letter::B => [0, 1, -1, 1],
        Letter::BInv => [1, -1, 1, 0],
        Letter::R => [0, 1, 1, 0],
    }
}

pub fn small_mul(x: Small, y: Small) -> Small {
    [
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    ]
}

pub fn to_mat2(x: Small) -> Mat2 {
    Mat2::from_i64(x[0], x[1], x[2], x[3]).expect("unimodular")
}

/// Depth-first walk over every word of length ≤ `max_len`, carrying the
/// running product and the letter counts `(e_A, e_B, e_R)`.
pub fn walk_ball(max_len: usize, mut visit: impl FnMut(&[Letter], Small, [i64; 3])) {
    fn go(
        prefix: &mut Vec<Letter>,
        m: Small,
        e: [i64; 3],
        left: usize,
        visit: &mut impl FnMut(&[Letter], Small, [i64; 3]),
    ) {
        visit(prefix, m, e);
        if left == 0 {
            return;
        }
        for l in LETTERS {
            let mut e2 = e;
            match l {
                Letter::A => e2[0] += 1,
                Letter::AInv => e2[0] -= 1,
                Letter::B => e2[1] += 1,
                Letter::BInv => e2[1] -= 1,
                Letter::R => e2[2] += 1,
            }
            prefix.push(l);
            go(prefix, small_mul(m, small_letter(l)), e2, left - 1, visit);
            prefix.pop();
        }
    }
    go(&mut Vec::new(), SMALL_ID, [0; 3], max_len, &mut visit);
}

/// All `[x, y]` with `x, y` lifts of Z₂ ∗ Z₃ words of at most `radius` syllables.
pub fn commutators_in_ball(radius: usize) -> HashSet<Mat2> {
    let ball: Vec<Mat2> = PslWord::enumerate_ball(radius)
        .iter()
        .map(PslWord::lift)
        .collect();
    let mut out = HashSet::new();
    for x in &ball {
        for y in &ball {
            out.insert(Mat2::commutator(x, y));
        }
    }
    out
}

/// Every p,q-word of length ≤ `max_len`, freely reduced and deduplicated.
pub fn free_basis_ball(max_len: usize) -> Vec<FreeBasisWord> {
    (0..=max_len)
        .flat_map(FreeBasisWord::enumerate_length)
        .collect()
}

/// Determinantal-divisor computation of the invariant factors:
/// `dₖ = gcd(k×k minors) / gcd((k−1)×(k−1) minors)`.
pub fn invariant_factors_by_minors(rows: &[Vec<i64>], cols: usize) -> Vec<BigInt> {
    fn det(m: &[Vec<i128>]) -> i128 {
        match m.len() {
            0 => 1,
            1 => m[0][0],
            n => (0..n)
                .map(|j| {
                    let minor: Vec<Vec<i128>> = m[1..]
                        .iter()
                        .map(|r| {
                            r.iter()
                                .enumerate()
                                .filter(|&(c, _)| c != j)
                                .map(|(_, &x)| x)
                                .collect()
                        })
                        .collect();
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    sign * m[0][j] * det(&minor)
                })
                .sum(),
        }
    }
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }
    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    let r = rows.len();
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=r.min(cols) {
        let mut g = 0i128;
        for rs in subsets(r, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| rows[i][j] as i128).collect())
                    .collect();
                g = gcd(g, det(&sub));
            }
        }
        if g == 0 {
            out.resize(r.min(cols), BigInt::from(0));
            return out;
        }
        out.push(BigInt::from(g / prev));
        prev = g;
    }
    out
}
