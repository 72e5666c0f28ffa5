//! Points of the integer lattice ℤ^N and ordered words of difference directions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};

/// A point (or shift vector) of ℤ^N with arbitrary-precision coordinates.
///
/// The derived ordering is lexicographic on the coordinates, which is the
/// order every sparse container in this crate iterates in.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(#[serde(with = "crate::bigint_serde::vec")] Vec<BigInt>);

impl LatticePoint {
    pub fn new(coords: Vec<BigInt>) -> Self {
        Self(coords)
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![BigInt::zero(); dim])
    }

    /// The standard basis vector e_i, with `i` counted from 0.
    pub fn unit(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index {i} out of range for dimension {dim}");
        let mut coords = vec![BigInt::zero(); dim];
        coords[i] = BigInt::from(1);
        Self(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coord(&self, i: usize) -> &BigInt {
        &self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim(), other.dim())?;
        Ok(self + other)
    }

    /// Largest absolute coordinate.
    pub fn sup_norm(&self) -> BigInt {
        self.0.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Parses `(1,-2,3)` and checks the dimension.
    pub fn parse_with_dim(s: &str, dim: usize) -> Result<Self> {
        let p: Self = s.parse()?;
        check_dim(dim, p.dim())?;
        Ok(p)
    }
}

impl From<Vec<BigInt>> for LatticePoint {
    fn from(v: Vec<BigInt>) -> Self {
        Self(v)
    }
}

impl Add for &LatticePoint {
    type Output = LatticePoint;

    fn add(self, rhs: &LatticePoint) -> LatticePoint {
        assert_eq!(self.dim(), rhs.dim(), "lattice point dimension mismatch");
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticePoint {
    type Output = LatticePoint;

    fn sub(self, rhs: &LatticePoint) -> LatticePoint {
        assert_eq!(self.dim(), rhs.dim(), "lattice point dimension mismatch");
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticePoint {
    type Output = LatticePoint;

    fn neg(self) -> LatticePoint {
        LatticePoint(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&LatticePoint> for &BigInt {
    type Output = LatticePoint;

    fn mul(self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint(rhs.0.iter().map(|a| self * a).collect())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for LatticePoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| {
                Error::InvalidArgument(format!("expected a tuple like (1,0), got `{s}`"))
            })?;
        let coords = inner
            .split(',')
            .map(|c| {
                let c = c.trim();
                c.parse::<BigInt>()
                    .map_err(|_| Error::InvalidArgument(format!("`{c}` is not an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(Self(coords))
    }
}

/// An ordered word (a_1, ..., a_d) of directions, standing for the composite
/// difference operator Δ_{a_1}···Δ_{a_d}.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct DifferenceWord(Vec<LatticePoint>);

impl DifferenceWord {
    pub fn new(letters: Vec<LatticePoint>) -> Result<Self> {
        let first = letters.first().ok_or(Error::EmptyWord)?;
        let dim = first.dim();
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for l in &letters {
            check_dim(dim, l.dim())?;
        }
        Ok(Self(letters))
    }

    pub fn from_i64s(letters: &[&[i64]]) -> Result<Self> {
        Self::new(letters.iter().map(|l| LatticePoint::from_i64s(l)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0[0].dim()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for the usual `len`/`is_empty` pairing.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[LatticePoint] {
        &self.0
    }

    /// Parses `(1,0);(2,1)` and checks every letter against `dim`.
    pub fn parse_with_dim(s: &str, dim: usize) -> Result<Self> {
        let w: Self = s.parse()?;
        check_dim(dim, w.dim())?;
        Ok(w)
    }
}

impl<'de> Deserialize<'de> for DifferenceWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let letters = Vec::<LatticePoint>::deserialize(d)?;
        Self::new(letters).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for DifferenceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for DifferenceWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split(';')
            .filter(|part| !part.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<LatticePoint>>>()?;
        Self::new(letters)
    }
}
