//! Oriented (Z₁₂) and unoriented (Z₂ ⊕ Z₂) toric cobordism classes of
//! 3-dimensional torus bundles, and the bounding criteria built on them.
//!
//! Both classes are read off the exponent sums of any word for the
//! monodromy. On SL(2,Z) the map `A ↦ 3, B ↦ 2` into Z₁₂ kills both relators
//! (`A²B⁻³ ↦ 0`, `A⁴ ↦ 0`) and is rescaled by 7 so that `T = (1 1; 0 1)`
//! has class 1. On GL(2,Z) the map `A ↦ (1,0), B ↦ 0, R ↦ (0,1)` is the
//! abelianization onto Z₂ ⊕ Z₂, so its kernel is `G′`, which equals `G²`.

use std::fmt;
use std::ops::{Add, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::gl2z::{decomposition_exponent_sums, Mat2};

/// An element of Z₁₂.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedClass(u8);

impl OrientedClass {
    pub const ZERO: OrientedClass = OrientedClass(0);

    pub fn new(value: i64) -> Self {
        OrientedClass(value.rem_euclid(12) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn times(self, k: i64) -> Self {
        OrientedClass::new(k.rem_euclid(12) * self.0 as i64)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl Add for OrientedClass {
    type Output = OrientedClass;
    fn add(self, rhs: Self) -> Self {
        OrientedClass((self.0 + rhs.0) % 12)
    }
}

impl Neg for OrientedClass {
    type Output = OrientedClass;
    fn neg(self) -> Self {
        OrientedClass((12 - self.0) % 12)
    }
}

impl fmt::Display for OrientedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod 12", self.0)
    }
}

/// An element `(u, v)` of Z₂ ⊕ Z₂: `u` is the parity of `A`, `v` of `R`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnorientedClass {
    pub u: u8,
    pub v: u8,
}

impl UnorientedClass {
    pub const ZERO: UnorientedClass = UnorientedClass { u: 0, v: 0 };

    pub fn new(u: u8, v: u8) -> Self {
        UnorientedClass { u: u % 2, v: v % 2 }
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }
}

impl Add for UnorientedClass {
    type Output = UnorientedClass;
    fn add(self, rhs: Self) -> Self {
        UnorientedClass::new(self.u ^ rhs.u, self.v ^ rhs.v)
    }
}

impl fmt::Display for UnorientedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}) in Z2+Z2", self.u, self.v)
    }
}

/// A torus bundle over the circle, `M_φ`, given by its monodromy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusBundle {
    monodromy: Mat2,
    oriented: bool,
}

impl TorusBundle {
    /// An oriented bundle; its total space is orientable only for det +1.
    pub fn oriented(monodromy: Mat2) -> Result<Self> {
        if monodromy.det() != 1 {
            return Err(Error::OrientedNeedsDetOne);
        }
        Ok(TorusBundle {
            monodromy,
            oriented: true,
        })
    }

    pub fn unoriented(monodromy: Mat2) -> Self {
        TorusBundle {
            monodromy,
            oriented: false,
        }
    }

    pub fn monodromy(&self) -> &Mat2 {
        &self.monodromy
    }

    pub fn is_oriented(&self) -> bool {
        self.oriented
    }
}

fn mod_small(x: &BigInt, m: u32) -> i64 {
    x.mod_floor(&BigInt::from(m))
        .to_i64()
        .expect("residue fits")
}

pub fn oriented_class(m: &Mat2) -> Result<OrientedClass> {
    if m.det() != 1 {
        return Err(Error::OrientedNeedsDetOne);
    }
    let (ea, eb, _) = decomposition_exponent_sums(m);
    let raw = 3 * mod_small(&ea, 12) + 2 * mod_small(&eb, 12);
    Ok(OrientedClass::new(7 * raw))
}

pub fn unoriented_class(m: &Mat2) -> UnorientedClass {
    let (ea, _, er) = decomposition_exponent_sums(m);
    UnorientedClass::new(mod_small(&ea, 2) as u8, mod_small(&er, 2) as u8)
}

/// Membership in SL(2,Z)′.
pub fn in_derived_sl(m: &Mat2) -> Result<bool> {
    Ok(oriented_class(m)?.is_zero())
}

/// Membership in G² (equivalently G′) for G = GL(2,Z).
pub fn in_g_squared(m: &Mat2) -> bool {
    unoriented_class(m).is_zero()
}

/// Membership in G′; extensionally identical to [`in_g_squared`].
pub fn in_g_derived(m: &Mat2) -> bool {
    unoriented_class(m).is_zero()
}

pub fn cobordant_oriented(x: &TorusBundle, y: &TorusBundle) -> Result<bool> {
    if !x.oriented || !y.oriented {
        return Err(Error::Domain(
            "oriented cobordism requires oriented bundles".into(),
        ));
    }
    Ok(oriented_class(&x.monodromy)? == oriented_class(&y.monodromy)?)
}

pub fn cobordant_unoriented(x: &TorusBundle, y: &TorusBundle) -> bool {
    unoriented_class(&x.monodromy) == unoriented_class(&y.monodromy)
}

/// Whether `M_{φ₁} ⊔ … ⊔ M_{φₙ}` bounds a torus bundle over an orientable surface.
pub fn bounds_over_orientable(ms: &[Mat2]) -> bool {
    in_g_derived(&Mat2::product(ms))
}

/// Whether `M_{φ₁} ⊔ … ⊔ M_{φₙ}` bounds a torus bundle over a non-orientable surface.
pub fn bounds_over_nonorientable(ms: &[Mat2]) -> bool {
    in_g_squared(&Mat2::product(ms))
}

/// Whether `[M_φ] = −[M_φ]` in the oriented group, i.e. `φ² ∈ SL(2,Z)′`.
pub fn amphichiral(m: &Mat2) -> Result<bool> {
    Ok(oriented_class(m)?.times(2).is_zero())
}
