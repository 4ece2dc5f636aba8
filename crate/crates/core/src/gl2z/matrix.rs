//! Exact 2×2 unimodular integer matrices.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element of GL(2,Z): a 2×2 integer matrix with determinant ±1.
///
/// Entries are stored row-major as `(a b; c d)` with arbitrary precision.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Mat2 {
    /// Builds a matrix, rejecting determinants other than ±1.
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        let det = &a * &d - &b * &c;
        if det.abs() != BigInt::one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(Mat2 { a, b, c, d })
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    /// Internal constructor for products of known-unimodular matrices.
    fn unchecked(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        debug_assert!((&a * &d - &b * &c).abs().is_one());
        Mat2 { a, b, c, d }
    }

    fn small(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::unchecked(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Self::small(1, 0, 0, 1)
    }

    pub fn neg_identity() -> Self {
        Self::small(-1, 0, 0, -1)
    }

    /// `A = (0 -1; 1 0)`, of order 4.
    pub fn gen_a() -> Self {
        Self::small(0, -1, 1, 0)
    }

    /// `B = (0 1; -1 1)`, of order 6.
    pub fn gen_b() -> Self {
        Self::small(0, 1, -1, 1)
    }

    /// `R = (0 1; 1 0)`, the reflection.
    pub fn gen_r() -> Self {
        Self::small(0, 1, 1, 0)
    }

    /// `T = (1 1; 0 1)`.
    pub fn translation() -> Self {
        Self::small(1, 1, 0, 1)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// The determinant, always `1` or `-1`.
    pub fn det(&self) -> i32 {
        if (&self.a * &self.d - &self.b * &self.c).is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    pub fn multiply(&self, rhs: &Mat2) -> Mat2 {
        Mat2::unchecked(
            &self.a * &rhs.a + &self.b * &rhs.c,
            &self.a * &rhs.b + &self.b * &rhs.d,
            &self.c * &rhs.a + &self.d * &rhs.c,
            &self.c * &rhs.b + &self.d * &rhs.d,
        )
    }

    /// Adjugate scaled by the determinant (which is its own inverse).
    pub fn inverse(&self) -> Mat2 {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        if self.det() == 1 {
            Mat2::unchecked(d.clone(), -b, -c, a.clone())
        } else {
            Mat2::unchecked(-d, b.clone(), c.clone(), -a)
        }
    }

    pub fn negate(&self) -> Mat2 {
        Mat2::unchecked(-&self.a, -&self.b, -&self.c, -&self.d)
    }

    /// Integer power; negative exponents use the inverse.
    pub fn pow(&self, exp: i64) -> Mat2 {
        let mut base = if exp < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = Mat2::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.multiply(&base);
            }
        }
        acc
    }

    /// `[x, y] = x y x⁻¹ y⁻¹`.
    pub fn commutator(x: &Mat2, y: &Mat2) -> Mat2 {
        x.multiply(y).multiply(&x.inverse()).multiply(&y.inverse())
    }

    /// Ordered product of a sequence; the empty product is `I`.
    pub fn product<'a, I: IntoIterator<Item = &'a Mat2>>(items: I) -> Mat2 {
        items
            .into_iter()
            .fold(Mat2::identity(), |acc, m| acc.multiply(m))
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        self.multiply(rhs)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        self.multiply(&rhs)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}; {} {}", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

/// Accepts `"a b; c d"` (any whitespace) or `"[[a,b],[c,d]]"`.
impl FromStr for Mat2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let entries: Vec<&str> = if text.starts_with('[') {
            let inner = compact
                .strip_prefix("[[")
                .and_then(|t| t.strip_suffix("]]"))
                .ok_or_else(|| Error::Parse(format!("malformed matrix {s:?}")))?;
            let rows: Vec<&str> = inner.split("],[").collect();
            if rows.len() != 2 {
                return Err(Error::Parse(format!("expected 2 rows in {s:?}")));
            }
            let mut out = Vec::with_capacity(4);
            for row in rows {
                let cells: Vec<&str> = row.split(',').collect();
                if cells.len() != 2 {
                    return Err(Error::Parse(format!("expected 2 columns in {s:?}")));
                }
                out.extend(cells);
            }
            out
        } else {
            let rows: Vec<&str> = text.split(';').collect();
            if rows.len() != 2 {
                return Err(Error::Parse(format!("expected \"a b; c d\", got {s:?}")));
            }
            let mut out = Vec::with_capacity(4);
            for row in rows {
                let cells: Vec<&str> = row.split_whitespace().collect();
                if cells.len() != 2 {
                    return Err(Error::Parse(format!("expected 2 columns in {s:?}")));
                }
                out.extend(cells);
            }
            out
        };
        let mut vals = entries.into_iter().map(|e| {
            e.parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad integer {e:?}")))
        });
        let (a, b, c, d) = (
            vals.next().unwrap()?,
            vals.next().unwrap()?,
            vals.next().unwrap()?,
            vals.next().unwrap()?,
        );
        Mat2::new(a, b, c, d)
    }
}
