//! Commutator and square decompositions of elements of SL(2,Z)′.

use super::free_basis::{rewrite_in_free_basis, FreeBasisLetter};
use crate::error::Result;
use crate::gl2z::Mat2;

/// `target = Π [xⱼ, yⱼ]` with every `xⱼ, yⱼ` of determinant +1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorWitness {
    pub pairs: Vec<(Mat2, Mat2)>,
}

impl CommutatorWitness {
    pub fn genus(&self) -> usize {
        self.pairs.len()
    }

    pub fn product(&self) -> Mat2 {
        self.pairs.iter().fold(Mat2::identity(), |acc, (x, y)| {
            acc.multiply(&Mat2::commutator(x, y))
        })
    }

    pub fn verifies(&self, target: &Mat2) -> bool {
        self.pairs.iter().all(|(x, y)| x.det() == 1 && y.det() == 1) && &self.product() == target
    }
}

/// `target = Π basesᵢ²` with every base of determinant −1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareWitness {
    pub bases: Vec<Mat2>,
}

impl SquareWitness {
    pub fn product(&self) -> Mat2 {
        self.bases
            .iter()
            .fold(Mat2::identity(), |acc, x| acc.multiply(x).multiply(x))
    }

    pub fn verifies(&self, target: &Mat2) -> bool {
        self.bases.iter().all(|x| x.det() == -1) && &self.product() == target
    }
}

fn commutator_pair(l: FreeBasisLetter) -> (Mat2, Mat2) {
    let (a, b) = (Mat2::gen_a(), Mat2::gen_b());
    match l {
        FreeBasisLetter::P => (a, b),
        FreeBasisLetter::PInv => (b, a),
        FreeBasisLetter::Q => (a, b.inverse()),
        FreeBasisLetter::QInv => (b.inverse(), a),
    }
}

/// `ARB⁻¹` squares to `[A,B]` and `ARB` squares to `[A,B⁻¹]`.
fn square_base(l: FreeBasisLetter) -> Mat2 {
    let (a, b, r) = (Mat2::gen_a(), Mat2::gen_b(), Mat2::gen_r());
    let p_base = a.multiply(&r).multiply(&b.inverse());
    let q_base = a.multiply(&r).multiply(&b);
    match l {
        FreeBasisLetter::P => p_base,
        FreeBasisLetter::PInv => p_base.inverse(),
        FreeBasisLetter::Q => q_base,
        FreeBasisLetter::QInv => q_base.inverse(),
    }
}

/// One commutator per letter of the free-basis word; an upper bound on genus.
pub fn commutator_witness(m: &Mat2) -> Result<CommutatorWitness> {
    let word = rewrite_in_free_basis(m)?;
    Ok(CommutatorWitness {
        pairs: word.letters().iter().map(|&l| commutator_pair(l)).collect(),
    })
}

/// One det −1 square per letter of the free-basis word.
pub fn square_witness(m: &Mat2) -> Result<SquareWitness> {
    let word = rewrite_in_free_basis(m)?;
    Ok(SquareWitness {
        bases: word.letters().iter().map(|&l| square_base(l)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn comm(x: &Mat2, y: &Mat2) -> Mat2 {
        Mat2::commutator(x, y)
    }

    #[test]
    fn commutator_witness_examples() {
        let (a, b) = (Mat2::gen_a(), Mat2::gen_b());
        assert!(commutator_witness(&Mat2::identity())
            .unwrap()
            .pairs
            .is_empty());
        assert_eq!(
            commutator_witness(&comm(&a, &b)).unwrap().pairs,
            vec![(a.clone(), b.clone())]
        );
        let target = comm(&a, &b).multiply(&comm(&a, &b.inverse()));
        let w = commutator_witness(&target).unwrap();
        assert_eq!(w.pairs, vec![(a.clone(), b.clone()), (a, b.inverse())]);
        assert!(w.verifies(&target));
    }

    #[test]
    fn square_witness_examples() {
        let (a, b, r) = (Mat2::gen_a(), Mat2::gen_b(), Mat2::gen_r());
        assert!(square_witness(&Mat2::identity()).unwrap().bases.is_empty());

        let p_base = a.multiply(&r).multiply(&b.inverse());
        let w = square_witness(&comm(&a, &b)).unwrap();
        assert_eq!(w.bases, vec![p_base.clone()]);
        assert_eq!(p_base.multiply(&p_base), comm(&a, &b));

        let q = comm(&a, &b.inverse());
        let w = square_witness(&q).unwrap();
        assert!(w.verifies(&q));
        assert_eq!(w.bases[0].det(), -1);
    }

    #[test]
    fn inverse_letters_are_literal_commutators_and_squares() {
        for l in FreeBasisLetter::ALL {
            let (x, y) = commutator_pair(l);
            assert_eq!(comm(&x, &y), l.matrix());
            let s = square_base(l);
            assert_eq!(s.det(), -1);
            assert_eq!(s.multiply(&s), l.matrix());
        }
    }

    #[test]
    fn witnesses_reject_outside_derived_subgroup() {
        assert_eq!(
            commutator_witness(&Mat2::translation()),
            Err(Error::NotInDerivedSubgroup)
        );
        assert_eq!(
            square_witness(&Mat2::neg_identity()),
            Err(Error::NotInDerivedSubgroup)
        );
    }
}
