//! Rewriting difference words in the standard difference basis.
//!
//! Each letter a = Σ r_m e_m telescopes as
//! `Δ_a = Σ_i [r_1 e_1 + … + r_{i-1} e_{i-1}]·Δ_{r_i e_i}` and
//! `Δ_{r e} = (Σ_{p=0}^{r-1} [p e])·Δ_e` for r ≥ 0. A negative r uses
//! `Δ_{-|r| e} = -[r e]·Δ_{|r| e}`, which folds into
//! `-(Σ_{p=r}^{-1} [p e])·Δ_e`. Multiplying the per-letter expansions and
//! collecting by basis index gives the sequence form; collecting by
//! multiplicity vector gives the grouped form.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::group_ring::GroupRingElement;
use crate::lattice::{DifferenceWord, LatticePoint};
use crate::polyfract::ExponentTuple;

/// Δ_{e_i}, with `i` counted from 0.
pub fn standard_delta(dim: usize, i: usize) -> GroupRingElement {
    GroupRingElement::delta(&LatticePoint::unit(dim, i))
}

/// Δ_{e_1}^{q_1}···Δ_{e_N}^{q_N}.
pub fn standard_power(q: &ExponentTuple) -> GroupRingElement {
    let dim = q.dim();
    q.exps()
        .iter()
        .enumerate()
        .fold(GroupRingElement::identity(dim), |acc, (m, &e)| {
            &acc * &standard_delta(dim, m).pow(e)
        })
}

/// The coefficients (α_1, …, α_N) with Δ_a = Σ_i α_i·Δ_{e_i}.
pub fn expand_single(a: &LatticePoint) -> Vec<GroupRingElement> {
    let dim = a.dim();
    let mut prefix = LatticePoint::zero(dim);
    let mut alphas = Vec::with_capacity(dim);
    for i in 0..dim {
        let r = a.coord(i);
        let e = LatticePoint::unit(dim, i);
        let (start, end, sign) = if r.is_negative() {
            (r.clone(), BigInt::zero(), -BigInt::one())
        } else {
            (BigInt::zero(), r.clone(), BigInt::one())
        };
        let mut alpha = GroupRingElement::zero(dim);
        let mut p = start;
        while p < end {
            alpha.add_term(&prefix + &(&p * &e), sign.clone());
            p += 1;
        }
        alphas.push(alpha);
        prefix = &prefix + &(r * &e);
    }
    alphas
}

/// Σ over basis-index tuples (k_1, …, k_d) of coeff·Δ_{e_{k_1}}···Δ_{e_{k_d}}.
///
/// Indices are stored 0-based; the serialized and displayed forms are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceExpansion {
    dim: usize,
    word_len: usize,
    terms: BTreeMap<Vec<usize>, GroupRingElement>,
}

impl SequenceExpansion {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn word_len(&self) -> usize {
        self.word_len
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &GroupRingElement)> {
        self.terms.iter()
    }

    pub fn get(&self, k: &[usize]) -> Option<&GroupRingElement> {
        self.terms.get(k)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sums the expansion back into a single group-ring element.
    pub fn recompose(&self) -> GroupRingElement {
        let mut acc = GroupRingElement::zero(self.dim);
        for (k, coeff) in &self.terms {
            let op = k
                .iter()
                .fold(coeff.clone(), |op, &m| &op * &standard_delta(self.dim, m));
            acc = &acc + &op;
        }
        acc
    }

    /// Collects tuples by the multiplicity of each basis index.
    pub fn grouped(&self) -> GroupedExpansion {
        let mut terms: BTreeMap<ExponentTuple, GroupRingElement> = BTreeMap::new();
        for (k, coeff) in &self.terms {
            let mut q = vec![0u32; self.dim];
            for &m in k {
                q[m] += 1;
            }
            let q = ExponentTuple::new(q);
            let entry = terms
                .entry(q)
                .or_insert_with(|| GroupRingElement::zero(self.dim));
            *entry = &*entry + coeff;
        }
        terms.retain(|_, c| !c.is_zero());
        GroupedExpansion {
            dim: self.dim,
            word_len: self.word_len,
            terms,
        }
    }
}

#[derive(Serialize)]
struct SequenceRecord<'a> {
    k: Vec<usize>,
    coeff: &'a GroupRingElement,
}

impl Serialize for SequenceExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.terms
            .iter()
            .map(|(k, coeff)| SequenceRecord {
                k: k.iter().map(|m| m + 1).collect(),
                coeff,
            })
            .collect::<Vec<_>>()
            .serialize(s)
    }
}

/// Σ_q coeff(q)·Δ_{e_1}^{q_1}···Δ_{e_N}^{q_N}; every surviving q has |q| = d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupedExpansion {
    dim: usize,
    word_len: usize,
    terms: BTreeMap<ExponentTuple, GroupRingElement>,
}

impl GroupedExpansion {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn word_len(&self) -> usize {
        self.word_len
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentTuple, &GroupRingElement)> {
        self.terms.iter()
    }

    pub fn get(&self, q: &ExponentTuple) -> Option<&GroupRingElement> {
        self.terms.get(q)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn recompose(&self) -> GroupRingElement {
        let mut acc = GroupRingElement::zero(self.dim);
        for (q, coeff) in &self.terms {
            acc = &acc + &(coeff * &standard_power(q));
        }
        acc
    }
}

#[derive(Serialize)]
struct GroupedRecord<'a> {
    q: &'a ExponentTuple,
    coeff: &'a GroupRingElement,
}

impl Serialize for GroupedExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.terms
            .iter()
            .map(|(q, coeff)| GroupedRecord { q, coeff })
            .collect::<Vec<_>>()
            .serialize(s)
    }
}

/// Expands every letter and multiplies out, one tuple per choice of basis
/// index per letter. Tuples with a zero coefficient are omitted.
pub fn expand_word_sequence(w: &DifferenceWord) -> SequenceExpansion {
    let dim = w.dim();
    let rows: Vec<Vec<(usize, GroupRingElement)>> = w
        .letters()
        .iter()
        .map(|a| {
            expand_single(a)
                .into_iter()
                .enumerate()
                .filter(|(_, alpha)| !alpha.is_zero())
                .collect()
        })
        .collect();

    let mut partial: Vec<(Vec<usize>, GroupRingElement)> =
        vec![(Vec::with_capacity(w.len()), GroupRingElement::identity(dim))];
    for row in &rows {
        let mut next = Vec::with_capacity(partial.len() * row.len());
        for (k, coeff) in &partial {
            for (m, alpha) in row {
                let mut k = k.clone();
                k.push(*m);
                next.push((k, coeff * alpha));
            }
        }
        partial = next;
    }

    let terms = partial.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    SequenceExpansion {
        dim,
        word_len: w.len(),
        terms,
    }
}

pub fn expand_word_grouped(w: &DifferenceWord) -> GroupedExpansion {
    expand_word_sequence(w).grouped()
}

fn cyclic_factor_from(r: &[BigInt], s: &LatticePoint, first: u32) -> Result<GroupRingElement> {
    if s.dim() == 0 {
        return Err(Error::ZeroDimension);
    }
    if r.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut t = GroupRingElement::identity(s.dim());
    for (index, ri) in r.iter().enumerate() {
        if !ri.is_positive() {
            return Err(Error::NonpositiveMultiplier {
                index,
                value: ri.to_string(),
            });
        }
        let mut factor = GroupRingElement::zero(s.dim());
        let mut p = BigInt::from(first);
        while &p < ri {
            factor.add_term(&p * s, BigInt::one());
            p += 1;
        }
        t = &t * &factor;
    }
    Ok(t)
}

/// T = ∏_i Σ_{p=0}^{r_i - 1} [p·s], so that Δ_{r_1 s}···Δ_{r_d s} = T·Δ_s^d.
pub fn cyclic_factor(r: &[BigInt], s: &LatticePoint) -> Result<GroupRingElement> {
    cyclic_factor_from(r, s, 0)
}

/// The same product with the inner sums started at p = 1. This drops the
/// `[0]` summand and does not factor the word; it exists so the failure can
/// be demonstrated.
pub fn cyclic_factor_from_one(r: &[BigInt], s: &LatticePoint) -> Result<GroupRingElement> {
    cyclic_factor_from(r, s, 1)
}

/// The word (r_1 s, …, r_d s).
pub fn cyclic_word(r: &[BigInt], s: &LatticePoint) -> Result<DifferenceWord> {
    DifferenceWord::new(r.iter().map(|ri| ri * s).collect())
}

/// Checks T·Δ_s^d against the word operator for the given multipliers.
pub fn check_cyclic(t: &GroupRingElement, r: &[BigInt], s: &LatticePoint) -> Result<bool> {
    check_dim(t.dim(), s.dim())?;
    let lhs = GroupRingElement::word_operator(&cyclic_word(r, s)?);
    let rhs = t * &GroupRingElement::delta(s).pow(r.len() as u32);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::IntegerFunction;
    use crate::polyfract::Polyfract;

    fn p(c: &[i64]) -> LatticePoint {
        LatticePoint::from_i64s(c)
    }

    fn shift(c: &[i64]) -> GroupRingElement {
        GroupRingElement::shift(&p(c))
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn reconstruct_single(a: &LatticePoint) -> GroupRingElement {
        expand_single(a)
            .iter()
            .enumerate()
            .fold(GroupRingElement::zero(a.dim()), |acc, (i, alpha)| {
                &acc + &(alpha * &standard_delta(a.dim(), i))
            })
    }

    #[test]
    fn single_diagonal_letter() {
        let alphas = expand_single(&p(&[1, 1]));
        assert_eq!(alphas, vec![shift(&[0, 0]), shift(&[1, 0])]);
    }

    #[test]
    fn single_letter_two_one() {
        let alphas = expand_single(&p(&[2, 1]));
        assert_eq!(alphas[0], &shift(&[0, 0]) + &shift(&[1, 0]));
        assert_eq!(alphas[1], shift(&[2, 0]));

        // Pointwise on a tabulated function.
        let f = IntegerFunction::tabulate(2, -4, 8, |x| {
            let (a, b) = (x.coord(0), x.coord(1));
            Ok(a * a * b - b * b * 3 + a * 5 + 2)
        })
        .unwrap();
        for x0 in -3..=3 {
            for x1 in -3..=3 {
                let x = p(&[x0, x1]);
                let lhs = GroupRingElement::delta(&p(&[2, 1])).apply(&f, &x).unwrap();
                let mut rhs = BigInt::zero();
                for (i, alpha) in alphas.iter().enumerate() {
                    rhs += (alpha * &standard_delta(2, i)).apply(&f, &x).unwrap();
                }
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn single_unit_rows() {
        for i in 0..3 {
            let alphas = expand_single(&LatticePoint::unit(3, i));
            for (j, alpha) in alphas.iter().enumerate() {
                if i == j {
                    assert_eq!(alpha, &GroupRingElement::identity(3));
                } else {
                    assert!(alpha.is_zero());
                }
            }
        }
    }

    #[test]
    fn single_negative_coordinates() {
        for a in [[-1, 0], [0, -3], [-2, 3], [3, -2], [-3, -3]] {
            let a = p(&a);
            assert_eq!(
                reconstruct_single(&a),
                GroupRingElement::delta(&a),
                "a = {a}"
            );
        }
        assert!(reconstruct_single(&p(&[0, 0])).is_zero());
    }

    #[test]
    fn sequence_examples() {
        let seq = expand_word_sequence(&DifferenceWord::from_i64s(&[&[1, 1]]).unwrap());
        assert_eq!(seq.len(), 2);
        assert_eq!(seq.get(&[0]), Some(&shift(&[0, 0])));
        assert_eq!(seq.get(&[1]), Some(&shift(&[1, 0])));

        let seq = expand_word_sequence(&DifferenceWord::from_i64s(&[&[1, 0], &[0, 1]]).unwrap());
        assert_eq!(seq.len(), 1);
        assert_eq!(seq.get(&[0, 1]), Some(&GroupRingElement::identity(2)));

        let a = p(&[-2, 3, 1]);
        let seq = expand_word_sequence(&DifferenceWord::new(vec![a.clone()]).unwrap());
        for (i, alpha) in expand_single(&a).iter().enumerate() {
            match seq.get(&[i]) {
                Some(c) => assert_eq!(c, alpha),
                None => assert!(alpha.is_zero()),
            }
        }
    }

    #[test]
    fn grouped_examples() {
        let g = expand_word_grouped(&DifferenceWord::from_i64s(&[&[1, 0], &[1, 0]]).unwrap());
        assert_eq!(g.len(), 1);
        assert_eq!(
            g.get(&ExponentTuple::new(vec![2, 0])),
            Some(&GroupRingElement::identity(2))
        );

        let g = expand_word_grouped(&DifferenceWord::from_i64s(&[&[1, 1]]).unwrap());
        assert_eq!(
            g.get(&ExponentTuple::new(vec![1, 0])),
            Some(&shift(&[0, 0]))
        );
        assert_eq!(
            g.get(&ExponentTuple::new(vec![0, 1])),
            Some(&shift(&[1, 0]))
        );
    }

    #[test]
    fn zero_letter_gives_zero_operator() {
        let w = DifferenceWord::from_i64s(&[&[2, -1], &[0, 0]]).unwrap();
        assert!(expand_word_sequence(&w).is_empty());
        assert!(expand_word_grouped(&w).is_empty());
        assert!(expand_word_grouped(&w).recompose().is_zero());
    }

    #[test]
    fn round_trips_on_mixed_words() {
        let w = DifferenceWord::from_i64s(&[&[2, -1, 0], &[-3, 1, 2], &[1, 1, -1]]).unwrap();
        let op = GroupRingElement::word_operator(&w);
        let seq = expand_word_sequence(&w);
        assert_eq!(seq.recompose(), op);
        let g = seq.grouped();
        assert_eq!(g.recompose(), op);
        assert!(g.terms().all(|(q, _)| q.norm() == 3));
    }

    #[test]
    fn cyclic_examples() {
        let s = p(&[3, -1]);
        assert_eq!(
            cyclic_factor(&big(&[1]), &s).unwrap(),
            GroupRingElement::identity(2)
        );

        let t = cyclic_factor(&big(&[2, 3]), &p(&[1])).unwrap();
        let expected = GroupRingElement::from_terms(
            1,
            [
                (p(&[0]), 1.into()),
                (p(&[1]), 2.into()),
                (p(&[2]), 2.into()),
                (p(&[3]), 1.into()),
            ],
        )
        .unwrap();
        assert_eq!(t, expected);
        assert!(check_cyclic(&t, &big(&[2, 3]), &p(&[1])).unwrap());

        let t = cyclic_factor(&big(&[2]), &p(&[1, 0])).unwrap();
        assert_eq!(t, &shift(&[0, 0]) + &shift(&[1, 0]));
        // x_1^2 = 2 C(x_1,2) + C(x_1,1)
        let sq = IntegerFunction::Polyfract(
            &Polyfract::binomial_monomial(&[2, 0], 2.into())
                + &Polyfract::binomial_monomial(&[1, 0], 1.into()),
        );
        let d2 = GroupRingElement::delta(&p(&[2, 0]));
        let factored = &t * &GroupRingElement::delta(&p(&[1, 0]));
        for x in -5..=5 {
            let x = p(&[x, 0]);
            assert_eq!(d2.apply(&sq, &x).unwrap(), factored.apply(&sq, &x).unwrap());
        }
    }

    #[test]
    fn cyclic_printed_bound_fails() {
        let s = p(&[1]);
        let t = cyclic_factor_from_one(&big(&[2]), &s).unwrap();
        assert!(!check_cyclic(&t, &big(&[2]), &s).unwrap());
    }

    #[test]
    fn cyclic_rejects_nonpositive() {
        let err = cyclic_factor(&big(&[2, 0]), &p(&[1])).unwrap_err();
        assert!(matches!(err, Error::NonpositiveMultiplier { index: 1, .. }));
        assert!(cyclic_factor(&big(&[-1]), &p(&[1])).is_err());
        assert!(cyclic_factor(&[], &p(&[1])).is_err());
    }

    #[test]
    fn json_layout() {
        let g = expand_word_grouped(&DifferenceWord::from_i64s(&[&[1, 1]]).unwrap());
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"[{"q":[0,1],"coeff":[{"coords":[1,0],"coeff":1}]},{"q":[1,0],"coeff":[{"coords":[0,0],"coeff":1}]}]"#
        );
        let seq = expand_word_sequence(&DifferenceWord::from_i64s(&[&[1, 0], &[0, 1]]).unwrap());
        assert_eq!(
            serde_json::to_string(&seq).unwrap(),
            r#"[{"k":[1,2],"coeff":[{"coords":[0,0],"coeff":1}]}]"#
        );
    }
}
