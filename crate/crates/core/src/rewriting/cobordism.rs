//! Combinatorial descriptions of 4-dimensional torus bundles over surfaces
//! with boundary, built as explicit cobordisms.
//!
//! A bundle over a surface with boundary is a homomorphism from the (free)
//! surface group to GL(2,Z). It is recorded by the images of the handle
//! generators (or crosscaps) and of the boundary loops. These are subject to
//! the single relation
//!
//! ```text
//! orientable:      [α₁,β₁]⋯[α_g,β_g] · ∂₁⋯∂ₙ = I
//! non-orientable:  a₁²⋯a_k² · ∂₁⋯∂ₙ = I
//! ```

use super::witness::{commutator_witness, square_witness};
use crate::error::{Error, Result};
use crate::gl2z::Mat2;
use crate::invariants::{bounds_over_nonorientable, bounds_over_orientable, oriented_class};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HandleImages {
    /// Images of the handle generator pairs `(αᵢ, βᵢ)`.
    Handles(Vec<(Mat2, Mat2)>),
    /// Images of the crosscap generators `aᵢ`.
    Crosscaps(Vec<Mat2>),
}

impl HandleImages {
    pub fn len(&self) -> usize {
        match self {
            HandleImages::Handles(h) => h.len(),
            HandleImages::Crosscaps(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn product(&self) -> Mat2 {
        match self {
            HandleImages::Handles(h) => h.iter().fold(Mat2::identity(), |acc, (x, y)| {
                acc.multiply(&Mat2::commutator(x, y))
            }),
            HandleImages::Crosscaps(c) => c
                .iter()
                .fold(Mat2::identity(), |acc, x| acc.multiply(x).multiply(x)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceBundleDesc {
    pub base_orientable: bool,
    /// Genus of an orientable base, number of crosscaps otherwise.
    pub genus_or_crosscaps: usize,
    pub boundary_count: usize,
    pub boundary_monodromies: Vec<Mat2>,
    pub handle_images: HandleImages,
}

impl SurfaceBundleDesc {
    /// Left-hand side of the surface-group relation.
    pub fn relation(&self) -> Mat2 {
        self.handle_images
            .product()
            .multiply(&Mat2::product(&self.boundary_monodromies))
    }

    /// Whether the total space is orientable: every orientation-preserving loop
    /// of the base has det +1 monodromy, every reversing one det −1.
    pub fn total_space_orientable(&self) -> bool {
        let boundaries = self.boundary_monodromies.iter().all(|m| m.det() == 1);
        let handles = match &self.handle_images {
            HandleImages::Handles(h) => h.iter().all(|(x, y)| x.det() == 1 && y.det() == 1),
            HandleImages::Crosscaps(c) => c.iter().all(|x| x.det() == -1),
        };
        boundaries && handles
    }
}

/// `[R, T^{-k}]` has oriented class `2k`.
fn reflection_pair(class_half: i64) -> (Mat2, Mat2) {
    (Mat2::gen_r(), Mat2::translation().pow(-class_half))
}

/// Handles whose commutator product is `target ∈ G′`.
fn orientable_handles(target: &Mat2) -> Result<Vec<(Mat2, Mat2)>> {
    let class = oriented_class(target)?.value() as i64;
    if class == 0 {
        return Ok(commutator_witness(target)?.pairs);
    }
    // G′ ∩ SL(2,Z) has even classes; peel off one det −1 handle.
    let (x, y) = reflection_pair(class / 2);
    let rest = Mat2::commutator(&x, &y).inverse().multiply(target);
    let mut pairs = vec![(x, y)];
    pairs.extend(commutator_witness(&rest)?.pairs);
    Ok(pairs)
}

/// Crosscaps whose square product is `target ∈ G²`; never empty.
fn crosscaps(target: &Mat2) -> Result<Vec<Mat2>> {
    let class = oriented_class(target)?.value() as i64;
    let mut bases = Vec::new();
    let rest = if class == 0 {
        target.clone()
    } else {
        // Squares of det −1 matrices have class 0, so a det +1 crosscap is needed.
        let x = Mat2::translation().pow(class / 2);
        let rest = x.multiply(&x).inverse().multiply(target);
        bases.push(x);
        rest
    };
    bases.extend(square_witness(&rest)?.bases);
    if bases.is_empty() {
        bases.push(Mat2::gen_r());
    }
    Ok(bases)
}

/// A bundle over a surface whose boundary is `M_{φ₁} ⊔ … ⊔ M_{φₙ}`.
///
/// An empty list yields the trivial bundle over a disk, with boundary `M_I`.
pub fn build_cobordism(ms: &[Mat2], base_orientable: bool) -> Result<SurfaceBundleDesc> {
    let bounds = if base_orientable {
        bounds_over_orientable(ms)
    } else {
        bounds_over_nonorientable(ms)
    };
    if !bounds {
        return Err(Error::DoesNotBound);
    }
    let boundary_monodromies = if ms.is_empty() {
        vec![Mat2::identity()]
    } else {
        ms.to_vec()
    };
    let target = Mat2::product(&boundary_monodromies).inverse();
    let handle_images = if base_orientable {
        HandleImages::Handles(orientable_handles(&target)?)
    } else {
        HandleImages::Crosscaps(crosscaps(&target)?)
    };
    let desc = SurfaceBundleDesc {
        base_orientable,
        genus_or_crosscaps: handle_images.len(),
        boundary_count: boundary_monodromies.len(),
        boundary_monodromies,
        handle_images,
    };
    debug_assert!(verify_cobordism(&desc));
    Ok(desc)
}

/// Checks the surface-group relation and the shape of the description.
pub fn verify_cobordism(d: &SurfaceBundleDesc) -> bool {
    let shape_ok = match &d.handle_images {
        HandleImages::Handles(h) => d.base_orientable && h.len() == d.genus_or_crosscaps,
        HandleImages::Crosscaps(c) => {
            !d.base_orientable && !c.is_empty() && c.len() == d.genus_or_crosscaps
        }
    };
    shape_ok && d.boundary_count == d.boundary_monodromies.len() && d.relation().is_identity()
}
