//! The group ring ℤ[ℤ^N]: finite integer combinations of shift operators.
//!
//! A shift `[s]` acts on functions by `([s]f)(x) = f(x + s)`, so the product
//! of two elements is the convolution of their coefficient maps and
//! `[a]·[b] = [a + b]`. The difference operator is `Δ_a = [a] - [0]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::function::IntegerFunction;
use crate::lattice::{DifferenceWord, LatticePoint};

/// An element Σ c_a [a] of the group ring, kept in canonical form: no zero
/// coefficients, terms ordered lexicographically by shift.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    dim: usize,
    terms: BTreeMap<LatticePoint, BigInt>,
}

/// One `{coords, coeff}` record of the serialized form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coords: LatticePoint,
    #[serde(with = "crate::bigint_serde")]
    pub coeff: BigInt,
}

impl GroupRingElement {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// The identity operator `[0]`.
    pub fn identity(dim: usize) -> Self {
        Self::shift(&LatticePoint::zero(dim))
    }

    pub fn shift(a: &LatticePoint) -> Self {
        Self::monomial(a.clone(), BigInt::one())
    }

    pub fn monomial(a: LatticePoint, coeff: BigInt) -> Self {
        let dim = a.dim();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(a, coeff);
        }
        Self { dim, terms }
    }

    /// `Δ_a = [a] - [0]`; zero when `a = 0`.
    pub fn delta(a: &LatticePoint) -> Self {
        &Self::shift(a) - &Self::identity(a.dim())
    }

    /// Builds an element from (shift, coefficient) pairs, merging repeated
    /// shifts and dropping zeros.
    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (LatticePoint, BigInt)>,
    {
        let mut out = Self::zero(dim);
        for (a, c) in terms {
            check_dim(dim, a.dim())?;
            out.add_term(a, c);
        }
        Ok(out)
    }

    pub fn from_records(dim: usize, records: Vec<TermRecord>) -> Result<Self> {
        Self::from_terms(dim, records.into_iter().map(|r| (r.coords, r.coeff)))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticePoint, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &LatticePoint) -> BigInt {
        self.terms.get(a).cloned().unwrap_or_default()
    }

    pub fn records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(a, c)| TermRecord {
                coords: a.clone(),
                coeff: c.clone(),
            })
            .collect()
    }

    pub(crate) fn add_term(&mut self, a: LatticePoint, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(a) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        Ok(self * other)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.dim);
        }
        Self {
            dim: self.dim,
            terms: self.terms.iter().map(|(a, c)| (a.clone(), c * k)).collect(),
        }
    }

    /// k-fold product by repeated squaring; `pow(0)` is the identity.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut acc = Self::identity(self.dim);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Δ_{a_1}···Δ_{a_d} as a single element.
    pub fn word_operator(w: &DifferenceWord) -> Self {
        w.letters()
            .iter()
            .fold(Self::identity(w.dim()), |acc, a| &acc * &Self::delta(a))
    }

    /// Σ_c T[c]·f(x + c).
    pub fn apply(&self, f: &IntegerFunction, x: &LatticePoint) -> Result<BigInt> {
        check_dim(self.dim, f.dim())?;
        check_dim(self.dim, x.dim())?;
        let mut acc = BigInt::zero();
        for (c, coeff) in &self.terms {
            acc += coeff * f.eval(&(x + c))?;
        }
        Ok(acc)
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;

    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        assert_eq!(self.dim, rhs.dim, "group ring dimension mismatch");
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_term(a.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;

    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        assert_eq!(self.dim, rhs.dim, "group ring dimension mismatch");
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_term(a.clone(), -c);
        }
        out
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;

    fn neg(self) -> GroupRingElement {
        GroupRingElement {
            dim: self.dim,
            terms: self.terms.iter().map(|(a, c)| (a.clone(), -c)).collect(),
        }
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;

    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        assert_eq!(self.dim, rhs.dim, "group ring dimension mismatch");
        let mut out = GroupRingElement::zero(self.dim);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl fmt::Display for GroupRingElement {
    /// Renders `c*[v]` terms in lexicographic order, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (a, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*[{a}]")?;
        }
        Ok(())
    }
}

impl Serialize for GroupRingElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.records().serialize(s)
    }
}

/// Multiplies out (x_{1,1} + … + x_{1,m_1})···(x_{n,1} + … + x_{n,m_n}) by
/// walking every index tuple (p_1, …, p_n) and summing ∏_i x_{i,p_i}.
///
/// Each x_{i,p} is a single term `c·[a]`; repeated shifts inside a factor are
/// allowed. Independent of [`Mul`], which convolves canonical maps instead.
pub fn product_by_enumeration(
    dim: usize,
    factors: &[Vec<(LatticePoint, BigInt)>],
) -> Result<GroupRingElement> {
    for factor in factors {
        for (a, _) in factor {
            check_dim(dim, a.dim())?;
        }
    }
    let mut out = GroupRingElement::zero(dim);
    if factors.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    let mut idx = vec![0usize; factors.len()];
    loop {
        let mut shift = LatticePoint::zero(dim);
        let mut coeff = BigInt::one();
        for (factor, &p) in factors.iter().zip(&idx) {
            let (a, c) = &factor[p];
            shift = &shift + a;
            coeff *= c;
        }
        out.add_term(shift, coeff);

        let mut k = factors.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < factors[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Dimension of the zero element cannot be recovered from an empty record
/// list, so deserialization goes through [`GroupRingElement::from_records`].
pub fn parse_records(json: &str, dim: usize) -> Result<GroupRingElement> {
    let records: Vec<TermRecord> =
        serde_json::from_str(json).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    GroupRingElement::from_records(dim, records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyfract::Polyfract;

    fn p(c: &[i64]) -> LatticePoint {
        LatticePoint::from_i64s(c)
    }

    fn shift(c: &[i64]) -> GroupRingElement {
        GroupRingElement::shift(&p(c))
    }

    fn delta(c: &[i64]) -> GroupRingElement {
        GroupRingElement::delta(&p(c))
    }

    #[test]
    fn identity_and_zero_delta() {
        assert_eq!(shift(&[0, 0]), GroupRingElement::identity(2));
        assert!(delta(&[0, 0]).is_zero());
        let d = delta(&[1, 1]);
        let expected =
            GroupRingElement::from_terms(2, [(p(&[1, 1]), 1.into()), (p(&[0, 0]), (-1).into())])
                .unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn shifts_compose_additively() {
        assert_eq!(&shift(&[1, 2]) * &shift(&[-3, 5]), shift(&[-2, 7]));
        assert_eq!(&shift(&[1, 0]) * &shift(&[1, 0]), shift(&[2, 0]));
        assert_eq!(shift(&[2, -1]).pow(3), shift(&[6, -3]));
    }

    #[test]
    fn negated_direction() {
        let s = p(&[2, -1]);
        let lhs = GroupRingElement::delta(&-&s);
        let rhs = -&(&GroupRingElement::shift(&-&s) * &GroupRingElement::delta(&s));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn hand_convolution() {
        // ([e1] + [0])([e1] - [0]) = [2e1] - [0]
        let a = &shift(&[1, 0]) + &shift(&[0, 0]);
        let b = &shift(&[1, 0]) - &shift(&[0, 0]);
        assert_eq!(&a * &b, &shift(&[2, 0]) - &shift(&[0, 0]));
    }

    #[test]
    fn additive_identities() {
        let t = &shift(&[1, 2]).scale(&3.into()) - &delta(&[0, 1]);
        assert_eq!(&t + &GroupRingElement::zero(2), t);
        assert!((&shift(&[4, 4]) + &shift(&[4, 4]).scale(&(-1).into())).is_zero());
        assert_eq!(&delta(&[3, 1]) + &shift(&[0, 0]), shift(&[3, 1]));
    }

    #[test]
    fn squared_delta_coefficients() {
        let expected = GroupRingElement::from_terms(
            2,
            [
                (p(&[2, 0]), 1.into()),
                (p(&[1, 0]), (-2).into()),
                (p(&[0, 0]), 1.into()),
            ],
        )
        .unwrap();
        assert_eq!(delta(&[1, 0]).pow(2), expected);
        let w = DifferenceWord::from_i64s(&[&[1, 0], &[1, 0]]).unwrap();
        assert_eq!(GroupRingElement::word_operator(&w), expected);
        assert_eq!(delta(&[5, 5]).pow(0), GroupRingElement::identity(2));
    }

    #[test]
    fn word_order_is_irrelevant() {
        let ab = DifferenceWord::from_i64s(&[&[1, -2], &[3, 1]]).unwrap();
        let ba = DifferenceWord::from_i64s(&[&[3, 1], &[1, -2]]).unwrap();
        assert_eq!(
            GroupRingElement::word_operator(&ab),
            GroupRingElement::word_operator(&ba)
        );
        let single = DifferenceWord::from_i64s(&[&[1, 0]]).unwrap();
        assert_eq!(GroupRingElement::word_operator(&single), delta(&[1, 0]));
    }

    #[test]
    fn apply_to_functions() {
        let cube = IntegerFunction::Polyfract(Polyfract::binomial_monomial(&[3], 1.into()));
        let w = DifferenceWord::from_i64s(&[&[1], &[1]]).unwrap();
        let op = GroupRingElement::word_operator(&w);
        // C(3,3) - 2 C(2,3) + C(1,3)
        assert_eq!(op.apply(&cube, &p(&[1])).unwrap(), BigInt::from(1));

        let f = IntegerFunction::tabulate(2, -3, 3, |x| {
            Ok(x.coord(0) * x.coord(0) * 7 - x.coord(1) * 2 + 1)
        })
        .unwrap();
        let x = p(&[-1, 2]);
        assert_eq!(
            GroupRingElement::identity(2).apply(&f, &x).unwrap(),
            f.eval(&x).unwrap()
        );
        assert_eq!(
            shift(&[1, 0]).apply(&f, &x).unwrap(),
            f.eval(&p(&[0, 2])).unwrap()
        );
        assert_eq!(
            delta(&[2, -1]).apply(&f, &x).unwrap(),
            f.eval(&p(&[1, 1])).unwrap() - f.eval(&x).unwrap()
        );
    }

    #[test]
    fn apply_outside_window_fails() {
        let f = IntegerFunction::tabulate(1, 0, 3, |x| Ok(x.coord(0).clone())).unwrap();
        let err = delta(&[2]).apply(&f, &p(&[2])).unwrap_err();
        assert!(matches!(err, Error::WindowViolation { .. }));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let err = shift(&[1]).checked_mul(&shift(&[1, 0])).unwrap_err();
        assert_eq!(
            err,
            Error::DimensionMismatch {
                expected: 1,
                found: 2
            }
        );
        assert!(shift(&[1]).checked_add(&shift(&[1, 0])).is_err());
    }

    #[test]
    fn enumeration_matches_folded_product() {
        let factors = vec![
            vec![(p(&[1, 0]), 2.into()), (p(&[0, 0]), (-1).into())],
            vec![
                (p(&[0, 1]), 1.into()),
                (p(&[0, 1]), 3.into()),
                (p(&[-1, 0]), 1.into()),
            ],
            vec![(p(&[1, 1]), (-2).into())],
        ];
        let folded = factors
            .iter()
            .fold(GroupRingElement::identity(2), |acc, f| {
                &acc * &GroupRingElement::from_terms(2, f.clone()).unwrap()
            });
        assert_eq!(product_by_enumeration(2, &factors).unwrap(), folded);
        assert_eq!(
            product_by_enumeration(2, &[]).unwrap(),
            GroupRingElement::identity(2)
        );
        assert!(product_by_enumeration(2, &[vec![], factors[0].clone()])
            .unwrap()
            .is_zero());
    }

    #[test]
    fn display_and_json_are_lexicographic() {
        let t = GroupRingElement::from_terms(
            2,
            [
                (p(&[1, 0]), 2.into()),
                (p(&[-1, 3]), (-1).into()),
                (p(&[0, 0]), 1.into()),
            ],
        )
        .unwrap();
        assert_eq!(t.to_string(), "-1*[(-1,3)] + 1*[(0,0)] + 2*[(1,0)]");
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"[{"coords":[-1,3],"coeff":-1},{"coords":[0,0],"coeff":1},{"coords":[1,0],"coeff":2}]"#
        );
        assert_eq!(parse_records(&json, 2).unwrap(), t);
        assert_eq!(GroupRingElement::zero(3).to_string(), "0");
    }
}
