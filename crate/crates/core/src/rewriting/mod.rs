//! Constructive witnesses for membership in SL(2,Z)′ and for bounding.

mod cobordism;
mod free_basis;
mod genus;
mod witness;

pub use cobordism::{build_cobordism, verify_cobordism, HandleImages, SurfaceBundleDesc};
pub use free_basis::{rewrite_in_free_basis, FreeBasisLetter, FreeBasisWord};
pub use genus::{
    commutator_solution, genus_search, is_commutator, GenusOutcome, DEFAULT_GENUS_BUDGET,
};
pub use witness::{commutator_witness, square_witness, CommutatorWitness, SquareWitness};
