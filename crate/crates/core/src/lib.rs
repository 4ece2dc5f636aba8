//! Toric cobordism invariants of 3-dimensional torus bundles over the circle.
//!
//! A torus bundle `M_φ` is determined by its monodromy `φ ∈ GL(2,Z)`. This
//! crate computes the oriented class in Z₁₂ and the unoriented class in
//! Z₂ ⊕ Z₂, decides cobordance and bounding, and builds explicit witnesses:
//! commutator and square decompositions, genus searches, and combinatorial
//! descriptions of the bounding 4-dimensional bundles.
//!
//! - [`gl2z`]: matrices, generator words, normal forms, projection to Z₂ ∗ Z₃.
//! - [`invariants`]: cobordism classes and bounding criteria.
//! - [`rewriting`]: free-basis rewriting, witnesses, genus search, cobordisms.
//! - [`presentations`]: abelian invariants of presentations via Smith normal form.

pub mod error;
pub mod gl2z;
pub mod invariants;
pub mod presentations;
pub mod rewriting;

pub use error::{Error, Result};
pub use gl2z::{GenWord, Letter, Mat2, NormalForm, PslSyllable, PslWord};
pub use invariants::{OrientedClass, TorusBundle, UnorientedClass};
