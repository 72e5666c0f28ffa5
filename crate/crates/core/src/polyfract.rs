//! Integer-valued polynomials in the binomial basis.
//!
//! A [`Polyfract`] is a finite sum Σ b_n·C(x_1,n_1)···C(x_N,n_N) with integer
//! coefficients. The products of binomials are linearly independent over ℤ,
//! so the canonical sparse map n ↦ b_n is unique. In this basis a standard
//! difference Δ_{e_l} just lowers n_l by one, shifts follow from the
//! Vandermonde identity C(x+a, n) = Σ_j C(a, j)·C(x, n-j), and the
//! coefficients of any polynomial function are its forward differences at
//! the origin.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::function::IntegerFunction;
use crate::group_ring::GroupRingElement;
use crate::lattice::LatticePoint;

/// C(x, k) for any integer x; zero for negative k.
pub fn binom(x: &BigInt, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc = C(x, i) here, and C(x, i)·(x - i) is divisible by i + 1.
        acc = acc * (x - i) / (i + 1);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// A multi-index n ∈ ℕ^N.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentTuple(Vec<u32>);

impl ExponentTuple {
    pub fn new(exps: Vec<u32>) -> Self {
        Self(exps)
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![0; dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut e = vec![0; dim];
        e[i] = 1;
        Self(e)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    /// |n| = Σ n_i.
    pub fn norm(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// All tuples of dimension `dim` with norm at most `max_norm`, in
    /// lexicographic order.
    pub fn all_up_to(dim: usize, max_norm: u64) -> Vec<Self> {
        fn rec(dim: usize, budget: u64, cur: &mut Vec<u32>, out: &mut Vec<ExponentTuple>) {
            if cur.len() == dim {
                out.push(ExponentTuple(cur.clone()));
                return;
            }
            for e in 0..=budget {
                cur.push(e as u32);
                rec(dim, budget - e, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(dim, max_norm, &mut Vec::with_capacity(dim), &mut out);
        out
    }

    /// All tuples m with 0 ≤ m ≤ self componentwise.
    pub fn below(&self) -> Vec<Self> {
        let mut out = vec![Vec::with_capacity(self.dim())];
        for &n in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=n).map(move |e| {
                        let mut v = prefix.clone();
                        v.push(e);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(Self).collect()
    }
}

impl From<Vec<u32>> for ExponentTuple {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// A degree that is either a natural number or -∞ (for the zero function).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u64),
}

impl Degree {
    pub fn finite(self) -> Option<u64> {
        match self {
            Self::Finite(d) => Some(d),
            Self::NegInfinity => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NegInfinity => f.write_str("-inf"),
            Self::Finite(d) => write!(f, "{d}"),
        }
    }
}

impl Serialize for Degree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Self::NegInfinity => s.serialize_str("-inf"),
            Self::Finite(d) => s.serialize_u64(*d),
        }
    }
}

/// `{n, b}` record of the serialized polyfract.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyfractRecord {
    pub n: ExponentTuple,
    #[serde(with = "crate::bigint_serde")]
    pub b: BigInt,
}

/// `{n, c}` record of the serialized power-basis polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialRecord {
    pub n: ExponentTuple,
    #[serde(with = "crate::bigint_serde")]
    pub c: BigInt,
}

fn insert_term(map: &mut BTreeMap<ExponentTuple, BigInt>, n: ExponentTuple, c: BigInt) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(n) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Σ b_n ∏_l C(x_l, n_l) in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polyfract {
    dim: usize,
    coeffs: BTreeMap<ExponentTuple, BigInt>,
}

impl Polyfract {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: BigInt) -> Self {
        Self::from_terms(dim, [(ExponentTuple::zero(dim), c)]).expect("dimension matches")
    }

    /// The single term b·∏ C(x_l, n_l).
    pub fn binomial_monomial(n: &[u32], b: BigInt) -> Self {
        Self::from_terms(n.len(), [(ExponentTuple::new(n.to_vec()), b)]).expect("dimension matches")
    }

    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentTuple, BigInt)>,
    {
        let mut coeffs = BTreeMap::new();
        for (n, b) in terms {
            check_dim(dim, n.dim())?;
            insert_term(&mut coeffs, n, b);
        }
        Ok(Self { dim, coeffs })
    }

    pub fn from_records(dim: usize, records: Vec<PolyfractRecord>) -> Result<Self> {
        Self::from_terms(dim, records.into_iter().map(|r| (r.n, r.b)))
    }

    pub fn records(&self) -> Vec<PolyfractRecord> {
        self.coeffs
            .iter()
            .map(|(n, b)| PolyfractRecord {
                n: n.clone(),
                b: b.clone(),
            })
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentTuple, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, n: &ExponentTuple) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    /// max |n| over the support, -∞ for zero.
    pub fn count(&self) -> Degree {
        self.coeffs
            .keys()
            .map(ExponentTuple::norm)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.dim);
        }
        Self {
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .map(|(n, b)| (n.clone(), b * k))
                .collect(),
        }
    }

    pub fn eval(&self, x: &LatticePoint) -> Result<BigInt> {
        check_dim(self.dim, x.dim())?;
        let mut acc = BigInt::zero();
        for (n, b) in &self.coeffs {
            let mut term = b.clone();
            for (xl, &nl) in x.coords().iter().zip(n.exps()) {
                if term.is_zero() {
                    break;
                }
                term *= binom(xl, nl as i64);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Δ_{e_1}^{m_1}···Δ_{e_N}^{m_N} applied termwise: C(x_l, n_l) becomes
    /// C(x_l, n_l - m_l), and a negative lower index kills the term.
    pub fn delta_standard(&self, m: &ExponentTuple) -> Result<Self> {
        check_dim(self.dim, m.dim())?;
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(n, _)| m.le(n))
            .map(|(n, b)| {
                let lowered = n.exps().iter().zip(m.exps()).map(|(a, b)| a - b).collect();
                (ExponentTuple(lowered), b.clone())
            })
            .collect();
        Ok(Self {
            dim: self.dim,
            coeffs,
        })
    }

    /// The polyfract of x ↦ self(x + a).
    pub fn shift_by(&self, a: &LatticePoint) -> Result<Self> {
        check_dim(self.dim, a.dim())?;
        if a.is_zero() {
            return Ok(self.clone());
        }
        // Per coordinate, C(x+a, n) = Σ_j C(a, j) C(x, n-j); cache the
        // binomials C(a_l, j) once per axis.
        let max_exp: Vec<u32> = (0..self.dim)
            .map(|l| self.coeffs.keys().map(|n| n.exps()[l]).max().unwrap_or(0))
            .collect();
        let a_binoms: Vec<Vec<BigInt>> = a
            .coords()
            .iter()
            .zip(&max_exp)
            .map(|(al, &top)| (0..=top as i64).map(|j| binom(al, j)).collect())
            .collect();

        let mut out = BTreeMap::new();
        for (n, b) in &self.coeffs {
            let mut partial: Vec<(Vec<u32>, BigInt)> =
                vec![(Vec::with_capacity(self.dim), b.clone())];
            for (l, &nl) in n.exps().iter().enumerate() {
                let mut next = Vec::with_capacity(partial.len() * (nl as usize + 1));
                for (prefix, c) in &partial {
                    for j in 0..=nl {
                        let w = &a_binoms[l][j as usize];
                        if w.is_zero() {
                            continue;
                        }
                        let mut e = prefix.clone();
                        e.push(nl - j);
                        next.push((e, c * w));
                    }
                }
                partial = next;
            }
            for (e, c) in partial {
                insert_term(&mut out, ExponentTuple(e), c);
            }
        }
        Ok(Self {
            dim: self.dim,
            coeffs: out,
        })
    }

    /// Δ_a exactly: shift_by(a) - self.
    pub fn delta_direction(&self, a: &LatticePoint) -> Result<Self> {
        Ok(&self.shift_by(a)? - self)
    }

    /// The polyfract of x ↦ Σ_c T[c]·self(x + c).
    pub fn apply_operator(&self, op: &GroupRingElement) -> Result<Self> {
        check_dim(self.dim, op.dim())?;
        let mut acc = Self::zero(self.dim);
        for (c, k) in op.terms() {
            acc = &acc + &self.shift_by(c)?.scale(k);
        }
        Ok(acc)
    }

    /// Reconstructs the polyfract with b_n = (Δ^n f)(0) for every |n| ≤
    /// `degree_bound`, sampling f on the cube [0, degree_bound]^N.
    ///
    /// Exact whenever f is a polynomial function of degree at most the bound;
    /// otherwise the result only agrees with f near the origin.
    pub fn from_samples(f: &IntegerFunction, degree_bound: u32) -> Result<Self> {
        let dim = f.dim();
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let side = degree_bound as usize + 1;
        let total = side
            .checked_pow(dim as u32)
            .ok_or_else(|| Error::InvalidArgument("sampling grid too large".into()))?;

        let mut grid = Vec::with_capacity(total);
        let mut idx = vec![0u32; dim];
        for _ in 0..total {
            let x = LatticePoint::new(idx.iter().map(|&i| BigInt::from(i)).collect());
            grid.push(f.eval(&x)?);
            advance(&mut idx, degree_bound);
        }

        // Forward-difference transform along each axis: afterwards
        // grid[n] = (Δ^n f)(0).
        let mut stride = total;
        for _ in 0..dim {
            stride /= side;
            for base in 0..total {
                if (base / stride) % side != 0 {
                    continue;
                }
                for k in 1..side {
                    for i in (k..side).rev() {
                        let prev = grid[base + (i - 1) * stride].clone();
                        grid[base + i * stride] -= prev;
                    }
                }
            }
        }

        let mut coeffs = BTreeMap::new();
        let mut idx = vec![0u32; dim];
        for value in grid {
            let n = ExponentTuple(idx.clone());
            if n.norm() <= degree_bound as u64 {
                insert_term(&mut coeffs, n, value);
            }
            advance(&mut idx, degree_bound);
        }
        Ok(Self { dim, coeffs })
    }

    /// Converts from the power basis by sampling at total degree.
    pub fn from_monomial(h: &MonomialPolynomial) -> Result<Self> {
        match h.total_degree() {
            Degree::NegInfinity => Ok(Self::zero(h.dim())),
            Degree::Finite(d) => {
                let bound = u32::try_from(d)
                    .map_err(|_| Error::InvalidArgument(format!("degree {d} too large")))?;
                Self::from_samples(&IntegerFunction::Monomial(h.clone()), bound)
            }
        }
    }
}

fn advance(idx: &mut [u32], top: u32) {
    for k in (0..idx.len()).rev() {
        if idx[k] < top {
            idx[k] += 1;
            return;
        }
        idx[k] = 0;
    }
}

impl Add for &Polyfract {
    type Output = Polyfract;

    fn add(self, rhs: &Polyfract) -> Polyfract {
        assert_eq!(self.dim, rhs.dim, "polyfract dimension mismatch");
        let mut coeffs = self.coeffs.clone();
        for (n, b) in &rhs.coeffs {
            insert_term(&mut coeffs, n.clone(), b.clone());
        }
        Polyfract {
            dim: self.dim,
            coeffs,
        }
    }
}

impl Sub for &Polyfract {
    type Output = Polyfract;

    fn sub(self, rhs: &Polyfract) -> Polyfract {
        self + &-rhs
    }
}

impl Neg for &Polyfract {
    type Output = Polyfract;

    fn neg(self) -> Polyfract {
        Polyfract {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|(n, b)| (n.clone(), -b)).collect(),
        }
    }
}

impl fmt::Display for Polyfract {
    /// `b*C(x1,n1)*C(x2,n2)` terms; factors with n_l = 0 are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (n, b)) in self.coeffs.iter().enumerate() {
            if i == 0 {
                if b.is_negative() {
                    f.write_str("-")?;
                }
            } else if b.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            write!(f, "{}", b.abs())?;
            for (l, &e) in n.exps().iter().enumerate() {
                if e > 0 {
                    write!(f, "*C(x{},{e})", l + 1)?;
                }
            }
        }
        Ok(())
    }
}

impl Serialize for Polyfract {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.records().serialize(s)
    }
}

/// An ordinary polynomial Σ c_n x^n with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialPolynomial {
    dim: usize,
    coeffs: BTreeMap<ExponentTuple, BigInt>,
}

impl MonomialPolynomial {
    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentTuple, BigInt)>,
    {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut coeffs = BTreeMap::new();
        for (n, c) in terms {
            check_dim(dim, n.dim())?;
            insert_term(&mut coeffs, n, c);
        }
        Ok(Self { dim, coeffs })
    }

    pub fn from_records(dim: usize, records: Vec<MonomialRecord>) -> Result<Self> {
        Self::from_terms(dim, records.into_iter().map(|r| (r.n, r.c)))
    }

    pub fn records(&self) -> Vec<MonomialRecord> {
        self.coeffs
            .iter()
            .map(|(n, c)| MonomialRecord {
                n: n.clone(),
                c: c.clone(),
            })
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentTuple, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn total_degree(&self) -> Degree {
        self.coeffs
            .keys()
            .map(ExponentTuple::norm)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn eval(&self, x: &LatticePoint) -> Result<BigInt> {
        check_dim(self.dim, x.dim())?;
        let mut acc = BigInt::zero();
        for (n, c) in &self.coeffs {
            let mut term = c.clone();
            for (xl, &e) in x.coords().iter().zip(n.exps()) {
                term *= Pow::pow(xl, e);
            }
            acc += term;
        }
        Ok(acc)
    }
}

impl Serialize for MonomialPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.records().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pf(dim: usize, terms: &[(&[u32], i64)]) -> Polyfract {
        Polyfract::from_terms(
            dim,
            terms
                .iter()
                .map(|(n, b)| (ExponentTuple::new(n.to_vec()), BigInt::from(*b))),
        )
        .unwrap()
    }

    fn pt(c: &[i64]) -> LatticePoint {
        LatticePoint::from_i64s(c)
    }

    fn falling_factorial_binom(x: i64, k: i64) -> i64 {
        let mut num = 1i64;
        let mut den = 1i64;
        for i in 0..k {
            num *= x - i;
            den *= i + 1;
        }
        num / den
    }

    #[test]
    fn binom_edge_cases() {
        for x in -6..=6 {
            assert_eq!(binom(&x.into(), 0), BigInt::one());
            assert_eq!(binom(&x.into(), -1), BigInt::zero());
        }
        assert_eq!(binom(&0.into(), 3), BigInt::zero());
        assert_eq!(binom(&(-2).into(), 3), BigInt::from(-4));
        assert_eq!(binom(&(-2).into(), 3), -binom(&4.into(), 3));
        for k in 0..8 {
            assert_eq!(binom(&k.into(), k), BigInt::one(), "C(k,k) must be 1");
        }
    }

    #[test]
    fn binom_matches_falling_factorial() {
        for x in -9..=9 {
            for k in 0..=8 {
                assert_eq!(
                    binom(&x.into(), k),
                    BigInt::from(falling_factorial_binom(x, k)),
                    "C({x},{k})"
                );
            }
        }
        assert_eq!(
            binom(&100.into(), 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn eval_examples() {
        assert_eq!(
            Polyfract::zero(2).eval(&pt(&[3, -7])).unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            pf(1, &[(&[3], 1)]).eval(&pt(&[5])).unwrap(),
            BigInt::from(10)
        );
        assert_eq!(
            pf(2, &[(&[1, 1], 2)]).eval(&pt(&[3, 4])).unwrap(),
            BigInt::from(24)
        );
        assert!(pf(2, &[(&[1, 1], 2)]).eval(&pt(&[3])).is_err());
    }

    #[test]
    fn count_examples() {
        assert_eq!(pf(2, &[(&[3, 2], 5)]).count(), Degree::Finite(5));
        assert_eq!(pf(3, &[(&[0, 0, 0], -4)]).count(), Degree::Finite(0));
        assert_eq!(Polyfract::zero(2).count(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let p = pf(1, &[(&[2], 3), (&[2], -3), (&[1], 0)]);
        assert!(p.is_zero());
    }

    #[test]
    fn delta_standard_examples() {
        let p = pf(2, &[(&[3, 2], 7)]);
        assert_eq!(
            p.delta_standard(&ExponentTuple::new(vec![1, 1])).unwrap(),
            pf(2, &[(&[2, 1], 7)])
        );
        assert_eq!(p.delta_standard(&ExponentTuple::zero(2)).unwrap(), p);
        let x = pf(2, &[(&[1, 0], 1)]);
        assert!(x
            .delta_standard(&ExponentTuple::new(vec![2, 0]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn shift_examples() {
        let p = pf(1, &[(&[2], 1)]);
        assert_eq!(p.shift_by(&pt(&[0])).unwrap(), p);
        let shifted = p.shift_by(&pt(&[1])).unwrap();
        assert_eq!(shifted, pf(1, &[(&[2], 1), (&[1], 1)]));
        for x in -5..=5 {
            assert_eq!(
                shifted.eval(&pt(&[x])).unwrap(),
                p.eval(&pt(&[x + 1])).unwrap()
            );
        }
    }

    #[test]
    fn delta_direction_examples() {
        let p = pf(2, &[(&[1, 1], 1)]);
        assert!(p.delta_direction(&pt(&[0, 0])).unwrap().is_zero());
        assert_eq!(
            p.delta_direction(&pt(&[1, 1])).unwrap(),
            pf(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], 1)])
        );
    }

    #[test]
    fn from_samples_examples() {
        let square = IntegerFunction::tabulate(1, 0, 2, |x| Ok(x.coord(0) * x.coord(0))).unwrap();
        assert_eq!(
            Polyfract::from_samples(&square, 2).unwrap(),
            pf(1, &[(&[1], 1), (&[2], 2)])
        );
        let c = IntegerFunction::tabulate(3, 0, 4, |_| Ok(BigInt::from(-11))).unwrap();
        assert_eq!(
            Polyfract::from_samples(&c, 4).unwrap(),
            pf(3, &[(&[0, 0, 0], -11)])
        );
    }

    #[test]
    fn from_samples_needs_the_window() {
        let f = IntegerFunction::tabulate(2, 0, 2, |x| Ok(x.coord(0) + x.coord(1))).unwrap();
        assert!(matches!(
            Polyfract::from_samples(&f, 3),
            Err(Error::WindowViolation { .. })
        ));
    }

    #[test]
    fn from_monomial_examples() {
        let xy =
            MonomialPolynomial::from_terms(2, [(ExponentTuple::new(vec![1, 1]), BigInt::one())])
                .unwrap();
        assert_eq!(
            Polyfract::from_monomial(&xy).unwrap(),
            pf(2, &[(&[1, 1], 1)])
        );
        let sq = MonomialPolynomial::from_terms(1, [(ExponentTuple::new(vec![2]), BigInt::one())])
            .unwrap();
        assert_eq!(
            Polyfract::from_monomial(&sq).unwrap(),
            pf(1, &[(&[2], 2), (&[1], 1)])
        );
        let seven =
            MonomialPolynomial::from_terms(2, [(ExponentTuple::zero(2), BigInt::from(7))]).unwrap();
        assert_eq!(
            Polyfract::from_monomial(&seven).unwrap(),
            pf(2, &[(&[0, 0], 7)])
        );
        let zero = MonomialPolynomial::from_terms(2, []).unwrap();
        assert!(Polyfract::from_monomial(&zero).unwrap().is_zero());
    }

    #[test]
    fn apply_operator_matches_shifts() {
        let p = pf(2, &[(&[2, 1], 3), (&[0, 1], -1)]);
        let op = GroupRingElement::delta(&pt(&[1, -2]));
        assert_eq!(
            p.apply_operator(&op).unwrap(),
            p.delta_direction(&pt(&[1, -2])).unwrap()
        );
    }

    #[test]
    fn exponent_enumeration() {
        let all = ExponentTuple::all_up_to(2, 2);
        assert_eq!(all.len(), 6);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(ExponentTuple::new(vec![1, 2]).below().len(), 6);
    }

    #[test]
    fn display_and_json() {
        let p = pf(2, &[(&[0, 0], -1), (&[2, 1], 3)]);
        assert_eq!(p.to_string(), "-1 + 3*C(x1,2)*C(x2,1)");
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"[{"n":[0,0],"b":-1},{"n":[2,1],"b":3}]"#
        );
        assert_eq!(
            serde_json::to_string(&Degree::NegInfinity).unwrap(),
            r#""-inf""#
        );
        let h = MonomialPolynomial::from_terms(1, [(ExponentTuple::new(vec![2]), BigInt::from(5))])
            .unwrap();
        assert_eq!(serde_json::to_string(&h).unwrap(), r#"[{"n":[2],"c":5}]"#);
    }
}
