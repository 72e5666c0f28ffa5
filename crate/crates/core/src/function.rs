//! Integer-valued functions on ℤ^N that operators can act on.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{check_dim, Error, Result};
use crate::lattice::LatticePoint;
use crate::polyfract::{MonomialPolynomial, Polyfract};

/// Values of a function on the cube `[lo, hi]^N`, stored row-major with the
/// last coordinate varying fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    dim: usize,
    lo: i64,
    hi: i64,
    values: Vec<BigInt>,
}

impl Table {
    pub fn from_fn<F>(dim: usize, lo: i64, hi: i64, mut f: F) -> Result<Self>
    where
        F: FnMut(&LatticePoint) -> Result<BigInt>,
    {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if lo > hi {
            return Err(Error::InvalidArgument(format!("empty window [{lo}, {hi}]")));
        }
        let side = (hi - lo + 1) as usize;
        let total = side
            .checked_pow(dim as u32)
            .ok_or_else(|| Error::InvalidArgument("tabulation window too large".into()))?;
        let mut values = Vec::with_capacity(total);
        let mut idx = vec![0usize; dim];
        for _ in 0..total {
            let x = LatticePoint::new(idx.iter().map(|&i| BigInt::from(lo + i as i64)).collect());
            values.push(f(&x)?);
            for k in (0..dim).rev() {
                idx[k] += 1;
                if idx[k] < side {
                    break;
                }
                idx[k] = 0;
            }
        }
        Ok(Self {
            dim,
            lo,
            hi,
            values,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    fn index(&self, x: &LatticePoint) -> Option<usize> {
        let side = (self.hi - self.lo + 1) as usize;
        let mut idx = 0usize;
        for c in x.coords() {
            let c = c.to_i64()?;
            if c < self.lo || c > self.hi {
                return None;
            }
            idx = idx * side + (c - self.lo) as usize;
        }
        Some(idx)
    }

    pub fn contains(&self, x: &LatticePoint) -> bool {
        x.dim() == self.dim && self.index(x).is_some()
    }

    pub fn get(&self, x: &LatticePoint) -> Result<&BigInt> {
        check_dim(self.dim, x.dim())?;
        self.index(x)
            .map(|i| &self.values[i])
            .ok_or_else(|| Error::WindowViolation {
                point: x.to_string(),
                lo: self.lo,
                hi: self.hi,
                dim: self.dim,
            })
    }
}

/// A function ℤ^N → ℤ. Polynomial-backed variants are defined everywhere;
/// a tabulated one only inside its window, and reading outside it is an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntegerFunction {
    Polyfract(Polyfract),
    Monomial(MonomialPolynomial),
    Tabulated(Table),
}

impl IntegerFunction {
    pub fn tabulate<F>(dim: usize, lo: i64, hi: i64, f: F) -> Result<Self>
    where
        F: FnMut(&LatticePoint) -> Result<BigInt>,
    {
        Table::from_fn(dim, lo, hi, f).map(Self::Tabulated)
    }

    pub fn dim(&self) -> usize {
        match self {
            Self::Polyfract(p) => p.dim(),
            Self::Monomial(h) => h.dim(),
            Self::Tabulated(t) => t.dim(),
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Self::Tabulated(_))
    }

    pub fn eval(&self, x: &LatticePoint) -> Result<BigInt> {
        match self {
            Self::Polyfract(p) => p.eval(x),
            Self::Monomial(h) => h.eval(x),
            Self::Tabulated(t) => t.get(x).cloned(),
        }
    }
}

impl From<Polyfract> for IntegerFunction {
    fn from(p: Polyfract) -> Self {
        Self::Polyfract(p)
    }
}

impl From<MonomialPolynomial> for IntegerFunction {
    fn from(h: MonomialPolynomial) -> Self {
        Self::Monomial(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_lookup_and_window() {
        let t = Table::from_fn(2, -1, 2, |x| Ok(x.coord(0) * 10 + x.coord(1))).unwrap();
        assert_eq!(
            t.get(&LatticePoint::from_i64s(&[2, -1])).unwrap(),
            &BigInt::from(19)
        );
        assert_eq!(
            t.get(&LatticePoint::from_i64s(&[-1, 0])).unwrap(),
            &BigInt::from(-10)
        );
        assert!(!t.contains(&LatticePoint::from_i64s(&[3, 0])));
        assert!(matches!(
            t.get(&LatticePoint::from_i64s(&[0, -2])),
            Err(Error::WindowViolation { .. })
        ));
        assert!(t.get(&LatticePoint::from_i64s(&[0])).is_err());
    }

    #[test]
    fn exactness_flag() {
        let t = IntegerFunction::tabulate(1, 0, 0, |_| Ok(BigInt::from(1))).unwrap();
        assert!(!t.is_exact());
        assert!(IntegerFunction::from(Polyfract::zero(1)).is_exact());
        assert!(Table::from_fn(1, 2, 1, |_| Ok(BigInt::from(0))).is_err());
    }
}
