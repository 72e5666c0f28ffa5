//! Seeded verification suites for the operator identities.
//!
//! Every suite compares two independently computed exact integers (or
//! canonical group-ring elements) per instance and records each mismatch
//! with its inputs. Randomized suites draw from a ChaCha8 stream seeded by
//! the caller, so a given `(id, trials, seed)` always yields byte-identical
//! reports. A few suites ignore `trials` because they sweep a fixed finite
//! range exhaustively.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{check_dim, Error, Result};
use crate::expansion::{
    check_cyclic, cyclic_factor, cyclic_factor_from_one, expand_single, expand_word_grouped,
    expand_word_sequence, standard_delta, standard_power,
};
use crate::fdeg::{self, apply_word, fdeg_standard_by_search, leading_term_check, SearchConfig};
use crate::function::IntegerFunction;
use crate::group_ring::{product_by_enumeration, GroupRingElement};
use crate::lattice::{DifferenceWord, LatticePoint};
use crate::polyfract::{binom, Degree, ExponentTuple, Polyfract};

/// Σ_{i=0}^n (-1)^i C(n,i) f(x + (n-i)a), the expanded form of Δ_a^n f(x).
pub fn alt_sum_univariate(
    f: &IntegerFunction,
    a: &LatticePoint,
    n: u32,
    x: &LatticePoint,
) -> Result<BigInt> {
    check_dim(f.dim(), a.dim())?;
    check_dim(f.dim(), x.dim())?;
    let nb = BigInt::from(n);
    let mut acc = BigInt::zero();
    for i in 0..=n {
        let step = BigInt::from(n - i);
        let term = binom(&nb, i as i64) * f.eval(&(x + &(&step * a)))?;
        if i.is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// The mirrored form Σ_{i=0}^n (-1)^{n-i} C(n,i) f(x + ia).
pub fn alt_sum_univariate_mirrored(
    f: &IntegerFunction,
    a: &LatticePoint,
    n: u32,
    x: &LatticePoint,
) -> Result<BigInt> {
    check_dim(f.dim(), a.dim())?;
    check_dim(f.dim(), x.dim())?;
    let nb = BigInt::from(n);
    let mut acc = BigInt::zero();
    for i in 0..=n {
        let term = binom(&nb, i as i64) * f.eval(&(x + &(&BigInt::from(i) * a)))?;
        if (n - i).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// For h = ∏ C(x_l, m_l), returns
/// `(Σ_{0≤p≤n} (-1)^{|p|} W(p) h(x + Σ(n_i - p_i)e_i), ∏ C(x_l, m_l - n_l))`
/// with W(p) = ∏ C(n_i, p_i) when `corrected`, and W(p) = 1 otherwise.
pub fn alt_sum_multivariate(
    m: &ExponentTuple,
    n: &ExponentTuple,
    x: &LatticePoint,
    corrected: bool,
) -> Result<(BigInt, BigInt)> {
    check_dim(m.dim(), n.dim())?;
    check_dim(m.dim(), x.dim())?;
    let h = |y: &[BigInt]| -> BigInt {
        y.iter()
            .zip(m.exps())
            .map(|(yl, &ml)| binom(yl, ml as i64))
            .product()
    };
    let mut lhs = BigInt::zero();
    for (offset, weight) in alt_sum_stencil(n, corrected) {
        let y: Vec<BigInt> = x
            .coords()
            .iter()
            .zip(&offset)
            .map(|(xl, &o)| xl + o)
            .collect();
        lhs += h(&y) * weight;
    }
    let rhs = x
        .coords()
        .iter()
        .zip(m.exps().iter().zip(n.exps()))
        .map(|(xl, (&ml, &nl))| binom(xl, ml as i64 - nl as i64))
        .product();
    Ok((lhs, rhs))
}

/// (n - p, (-1)^{|p|}·W(p)) for every 0 ≤ p ≤ n.
fn alt_sum_stencil(n: &ExponentTuple, corrected: bool) -> Vec<(Vec<i64>, i64)> {
    n.below()
        .into_iter()
        .map(|p| {
            let offset = n
                .exps()
                .iter()
                .zip(p.exps())
                .map(|(&a, &b)| (a - b) as i64)
                .collect();
            let sign = if p.norm() % 2 == 0 { 1 } else { -1 };
            let weight = if corrected {
                n.exps()
                    .iter()
                    .zip(p.exps())
                    .map(|(&ni, &pi)| small_binom(ni as i64, pi as i64))
                    .product::<i64>()
            } else {
                1
            };
            (offset, sign * weight)
        })
        .collect()
}

fn small_binom(n: i64, k: i64) -> i64 {
    i64::try_from(binom(&BigInt::from(n), k)).expect("small binomial")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub inputs: Value,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub trials: u64,
    #[serde(rename = "instances")]
    pub instances_checked: u64,
    pub failures: Vec<Failure>,
    pub verdict: Verdict,
    pub notes: String,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

struct Ctx {
    rng: ChaCha8Rng,
    trials: u64,
    instances: u64,
    failures: Vec<Failure>,
}

impl Ctx {
    fn check<T: PartialEq + ToString>(&mut self, inputs: impl FnOnce() -> Value, lhs: T, rhs: T) {
        self.instances += 1;
        if lhs != rhs {
            self.failures.push(Failure {
                inputs: inputs(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
}

type SuiteFn = fn(&mut Ctx) -> Result<()>;

pub struct Suite {
    pub id: &'static str,
    pub description: &'static str,
    /// Notes copied into every report of this suite.
    pub notes: &'static str,
    run: SuiteFn,
}

static SUITES: &[Suite] = &[
    Suite {
        id: "ring_laws",
        description: "commutativity, associativity and distributivity of group-ring multiplication",
        notes: "",
        run: suite_ring_laws,
    },
    Suite {
        id: "action_homomorphism",
        description: "apply(T*U, f, x) = apply(T, U f, x) on polyfract-backed f",
        notes: "",
        run: suite_action,
    },
    Suite {
        id: "thm_3_1_a",
        description: "D_{-s} = -[-s] D_s",
        notes: "",
        run: suite_negation,
    },
    Suite {
        id: "thm_3_1_b",
        description: "D_{s1+s2} = [s1] D_{s2} + D_{s1}",
        notes: "",
        run: suite_sum_rule,
    },
    Suite {
        id: "thm_3_1_c",
        description: "[s]^k = [ks]",
        notes: "",
        run: suite_power_rule,
    },
    Suite {
        id: "thm_3_1_d",
        description: "D_a D_b = D_b D_a, [s1][s2] = [s2][s1], D_a [s] = [s] D_a",
        notes: "the first rule is checked as D_a D_b = D_b D_a",
        run: suite_commutation,
    },
    Suite {
        id: "thm_3_1_e",
        description: "[s](D_a + D_b) = [s]D_a + [s]D_b and D_a([s1] + [s2]) = D_a[s1] + D_a[s2]",
        notes: "",
        run: suite_distributive,
    },
    Suite {
        id: "thm_3_1_f",
        description: "[a + b] = [a][b]",
        notes: "",
        run: suite_additive,
    },
    Suite {
        id: "thm_3_2",
        description: "shifts and differences commute, as elements and as actions on polyfracts",
        notes: "",
        run: suite_commutation_action,
    },
    Suite {
        id: "lemma_3_3",
        description: "D_a = sum_i alpha_i D_{e_i}, as elements and pointwise on tabulated functions",
        notes: "negative coordinates are normalized with D_{-s} = -[-s] D_s",
        run: suite_single_expansion,
    },
    Suite {
        id: "thm_3_4",
        description: "product of sums = sum over index tuples of products (at most 4 factors of at most 4 terms)",
        notes: "",
        run: suite_multipolynomial,
    },
    Suite {
        id: "thm_4_1",
        description: "grouped expansion reproduces the word operator; keys are multiplicity vectors of norm d",
        notes: "",
        run: suite_grouped,
    },
    Suite {
        id: "thm_4_2",
        description: "sequence expansion over [N]^d reproduces the word operator",
        notes: "omega_{p,t} = p e_{k_t} + sum_{l<k_t} r_{t,l} e_l",
        run: suite_sequence,
    },
    Suite {
        id: "thm_5_1",
        description: "D_{r1 s}...D_{rd s} = T D_s^d with T = prod_i sum_{p=0}^{r_i-1} [p s], all r in [1,4]^d, d <= 4",
        notes: "inner sums start at p = 0; trials is ignored (exhaustive over r, one random s per r)",
        run: suite_cyclic,
    },
    Suite {
        id: "thm_5_1_printed",
        description: "the same factorization with inner sums started at p = 1 (expected to fail)",
        notes: "first instance is r = (2), s = 1, f(x) = x at x = 0",
        run: suite_cyclic_printed,
    },
    Suite {
        id: "lemma_6_1",
        description: "C(x,y) = 0 for 0 <= x < y; C(x,0) = 1; C(x,y) = 0 for y < 0; C(k,k) = 1",
        notes: "C(x,x) = 0 would contradict C(x,0) = 1 at x = 0; the diagonal is checked as C(k,k) = 1",
        run: suite_binomial_edges,
    },
    Suite {
        id: "lemma_6_2",
        description: "N = 1: D_s^d P = 0 implies every word (r_1 s, ..., r_d s) annihilates P",
        notes: "",
        run: suite_cyclic_annihilation,
    },
    Suite {
        id: "thm_6_4",
        description: "D^m prod C(x_l, n_l) = prod C(x_l, n_l - m_l) pointwise on [-6,6]^N, and unit steps in any order",
        notes: "",
        run: suite_standard_difference,
    },
    Suite {
        id: "thm_6_5",
        description: "from_samples(eval(P), count(P)) = P",
        notes: "coefficients are constructed as forward differences at the origin",
        run: suite_reconstruction,
    },
    Suite {
        id: "thm_6_7",
        description: "fdeg(P) equals fdeg of each maximal-norm term alone, ties included",
        notes: "",
        run: suite_leading_term,
    },
    Suite {
        id: "thm_6_8",
        description: "max{|n| : D^n P != 0} over n in N^N equals count(P)",
        notes: "n ranges over N^N with zeros allowed; nonzero constants have degree 0",
        run: suite_count_equals_fdeg,
    },
    Suite {
        id: "thm_6_9",
        description: "bounded arbitrary-direction degree (box 2): witness of length count, >= 500 longer words annihilate",
        notes: "refutation is exhaustive when at most 500 words exist, sampled otherwise",
        run: suite_general_degree,
    },
    Suite {
        id: "thm_7_1",
        description: "C(-n,k) = (-1)^k C(n+k-1,k) for 0 <= n,k <= 10",
        notes: "trials is ignored (exhaustive)",
        run: suite_upper_negation,
    },
    Suite {
        id: "thm_7_2",
        description: "D_a^n f(x) = sum_i (-1)^i C(n,i) f(x+(n-i)a) = sum_i (-1)^(n-i) C(n,i) f(x+ia), n <= 5",
        notes: "",
        run: suite_alt_sum,
    },
    Suite {
        id: "thm_7_3",
        description: "weighted multivariate alternating sum equals prod C(x_l, m_l - n_l) for N <= 3, 0 <= n <= m <= 4, x in [-4,4]^N",
        notes: "corrected form with weights prod C(n_i,p_i); also checked against D^n h; trials is ignored (exhaustive)",
        run: suite_multivariate_alt_sum,
    },
    Suite {
        id: "thm_7_3_uncorrected",
        description: "the unweighted alternating sum (expected to fail) over 3 <= m_i <= 4, 2 <= n_i < m_i, x in [-4,4]^N",
        notes: "counterexample: N=1, m=3, n=2, x=2 gives 3 != 2; trials is ignored (exhaustive)",
        run: suite_multivariate_alt_sum_unweighted,
    },
];

pub fn suites() -> &'static [Suite] {
    SUITES
}

pub fn verify_identity(identity_id: &str, trials: u64, seed: u64) -> Result<VerificationReport> {
    let suite = SUITES
        .iter()
        .find(|s| s.id == identity_id)
        .ok_or_else(|| Error::UnknownIdentity(identity_id.to_string()))?;
    let mut ctx = Ctx {
        rng: ChaCha8Rng::seed_from_u64(seed),
        trials,
        instances: 0,
        failures: Vec::new(),
    };
    (suite.run)(&mut ctx)?;
    let verdict = if ctx.failures.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(VerificationReport {
        id: suite.id.to_string(),
        trials,
        instances_checked: ctx.instances,
        failures: ctx.failures,
        verdict,
        notes: suite.notes.to_string(),
    })
}

/// Random inputs shared by the suites and the test harnesses.
pub mod sample {
    use super::*;

    pub fn dim<R: Rng>(rng: &mut R, max: usize) -> usize {
        rng.random_range(1..=max)
    }

    pub fn int<R: Rng>(rng: &mut R, bound: i64) -> BigInt {
        BigInt::from(rng.random_range(-bound..=bound))
    }

    pub fn nonzero_int<R: Rng>(rng: &mut R, bound: i64) -> BigInt {
        loop {
            let v = rng.random_range(-bound..=bound);
            if v != 0 {
                return BigInt::from(v);
            }
        }
    }

    pub fn point<R: Rng>(rng: &mut R, dim: usize, bound: i64) -> LatticePoint {
        LatticePoint::new((0..dim).map(|_| int(rng, bound)).collect())
    }

    pub fn nonzero_point<R: Rng>(rng: &mut R, dim: usize, bound: i64) -> LatticePoint {
        loop {
            let p = point(rng, dim, bound);
            if !p.is_zero() {
                return p;
            }
        }
    }

    pub fn terms<R: Rng>(
        rng: &mut R,
        dim: usize,
        max_terms: usize,
        coord_bound: i64,
        coeff_bound: i64,
    ) -> Vec<(LatticePoint, BigInt)> {
        let n = rng.random_range(1..=max_terms);
        (0..n)
            .map(|_| (point(rng, dim, coord_bound), nonzero_int(rng, coeff_bound)))
            .collect()
    }

    pub fn element<R: Rng>(
        rng: &mut R,
        dim: usize,
        max_terms: usize,
        coord_bound: i64,
        coeff_bound: i64,
    ) -> GroupRingElement {
        GroupRingElement::from_terms(dim, terms(rng, dim, max_terms, coord_bound, coeff_bound))
            .expect("dimension matches")
    }

    pub fn word<R: Rng>(
        rng: &mut R,
        dim: usize,
        max_len: usize,
        coord_bound: i64,
    ) -> DifferenceWord {
        let len = rng.random_range(1..=max_len);
        DifferenceWord::new((0..len).map(|_| point(rng, dim, coord_bound)).collect())
            .expect("nonempty")
    }

    pub fn exponent<R: Rng>(rng: &mut R, dim: usize, max_norm: u64) -> ExponentTuple {
        let mut budget = rng.random_range(0..=max_norm);
        let mut exps = vec![0u32; dim];
        // Spread the norm over random coordinates.
        while budget > 0 {
            exps[rng.random_range(0..dim)] += 1;
            budget -= 1;
        }
        ExponentTuple::new(exps)
    }

    /// A nonzero polyfract with at most `max_terms` terms of norm at most
    /// `max_count` and coefficients in [-coeff_bound, coeff_bound] \ {0}.
    pub fn polyfract<R: Rng>(
        rng: &mut R,
        dim: usize,
        max_count: u64,
        max_terms: usize,
        coeff_bound: i64,
    ) -> Polyfract {
        loop {
            let n = rng.random_range(1..=max_terms);
            let p = Polyfract::from_terms(
                dim,
                (0..n).map(|_| (exponent(rng, dim, max_count), nonzero_int(rng, coeff_bound))),
            )
            .expect("dimension matches");
            if !p.is_zero() {
                return p;
            }
        }
    }
}

fn pt(p: &LatticePoint) -> Value {
    serde_json::to_value(p).expect("serializes")
}

fn el(t: &GroupRingElement) -> Value {
    serde_json::to_value(t).expect("serializes")
}

fn pfv(p: &Polyfract) -> Value {
    serde_json::to_value(p).expect("serializes")
}

fn suite_ring_laws(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.trials {
        let dim = sample::dim(&mut ctx.rng, 3);
        let t = sample::element(&mut ctx.rng, dim, 6, 4, 9);
        let u = sample::element(&mut ctx.rng, dim, 6, 4, 9);
        let v = sample::element(&mut ctx.rng, dim, 6, 4, 9);
        let inputs = || json!({"T": el(&t), "U": el(&u), "V": el(&v)});
        ctx.check(inputs, &t * &u, &u * &t);
        ctx.check(inputs, &(&t * &u) * &v, &t * &(&u * &v));
        ctx.check(inputs, &t * &(&u + &v), &(&t * &u) + &(&t * &v));
    }
    Ok(())
}

fn suite_action(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.trials {
        let dim = sample::dim(&mut ctx.rng, 3);
        let t = sample::element(&mut ctx.rng, dim, 4, 3, 9);
        let u = sample::element(&mut ctx.rng, dim, 4, 3, 9);
        let p = sample::polyfract(&mut ctx.rng, dim, 4, 4, 9);
        let f = IntegerFunction::Polyfract(p.clone());
        let uf = IntegerFunction::Polyfract(p.apply_operator(&u)?);
        let tu = &t * &u;
        for _ in 0..5 {
            let x = sample::point(&mut ctx.rng, dim, 5);
            let lhs = tu.apply(&f, &x)?;
            let rhs = t.apply(&uf, &x)?;
            ctx.check(
                || json!({"T": el(&t), "U": el(&u), "f": pfv(&p), "x": pt(&x)}),
                lhs,
                rhs,
            );
        }
    }
    Ok(())
}

fn suite_negation(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.trials {
        let dim = sample::dim(&mut ctx.rng, 3);
        let s = sample::nonzero_point(&mut ctx.rng, dim, 4);
        let neg = -&s;
        let lhs = GroupRingElement::delta(&neg);
        let rhs = -&(&GroupRingElement::shift(&neg) * &GroupRingElement::delta(&s));
        ctx.check(|| json!({"s": pt(&s)}), lhs, rhs);
    }
    Ok(())
}

fn suite_sum_rule(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.trials {
        let dim = sample::dim(&mut ctx.rng, 3);
        let s1 = sample::point(&mut ctx.rng, dim, 4);
        let s2 = sample::point(&mut ctx.rng, dim, 4);
        let lhs = GroupRingElement::delta(&(&s1 + &s2));
        let rhs = &(&GroupRingElement::shift(&s1) * &GroupRingElement::delta(&s2))
            + &GroupRingElement::delta(&s1);
        ctx.check(|| json!({"s1": pt(&s1), "s2": pt(&s2)}), lhs, rhs);
    }
    Ok(())
}

fn suite_power_rule(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.trials {
        let dim = sample::dim(&mut ctx.rng, 3);
        let s = sample::point(&mut ctx.rng, dim, 4);
        let k: u32 = ctx.rng.random_range(0..=8);
        let lhs = GroupRingElement::shift(&s).pow(k);
        let rhs = GroupRingElement::shift(&(&BigInt::from(k) * &s));
        ctx.check(|| json!({"s": pt(&s), "k": k}), lhs, rhs);
    }
    Ok(())
}

fn suite_commutation(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.trials {
        let dim = sample::dim(&mut ctx.rng, 3);
        let a = sample::point(&mut ctx.rng, dim, 4);
        let b = sample::point(&mut ctx.rng, dim, 4);
        let s = sample::point(&mut ctx.rng, dim, 4);
        let (da, db) = (GroupRingElement::delta(&a), GroupRingElement::delta(&b));
        let (sa, sb, ss) = (
            GroupRingElement::shift(&a),
            GroupRingElement::shift(&b),
            GroupRingElement::shift(&s),
        );
        let inputs = || json!({"a": pt(&a), "b": pt(&b), "s": pt(&s)});
        ctx.check(inputs, &da * &db, &db * &da);
        ctx.check(inputs, &sa * &sb, &sb * &sa);
        ctx.check(inputs, &da * &ss, &ss * &da);
    }
    Ok(())
}

fn suite_distributive(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.trials {
        let dim = sample::dim(&mut ctx.rng, 3);
        let a = sample::point(&mut ctx.rng, dim, 4);
        let b = sample::point(&mut ctx.rng, dim, 4);
        let s1 = sample::point(&mut ctx.rng, dim, 4);
        let s2 = sample::point(&mut ctx.rng, dim, 4);
        let (da, db) = (GroupRingElement::delta(&a), GroupRingElement::delta(&b));
        let (t1, t2) = (GroupRingElement::shift(&s1), GroupRingElement::shift(&s2));
        let inputs = || json!({"a": pt(&a), "b": pt(&b), "s1": pt(&s1), "s2": pt(&s2)});
        ctx.check(inputs, &t1 * &(&da + &db), &(&t1 * &da) + &(&t1 * &db));
        ctx.check(inputs, &da * &(&t1 + &t2), &(&da * &t1) + &(&da * &t2));
    }
    Ok(())
}

fn suite_additive(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.trials {
        let dim = sample::dim(&mut ctx.rng, 3);
        let a = sample::point(&mut ctx.rng, dim, 6);
        let b = sample::point(&mut ctx.rng, dim, 6);
        let lhs = GroupRingElement::shift(&(&a + &b));
        let rhs = &GroupRingElement::shift(&a) * &GroupRingElement::shift(&b);
        ctx.check(|| json!({"a": pt(&a), "b": pt(&b)}), lhs, rhs);
    }
    Ok(())
}

fn suite_commutation_action(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.trials {
        let dim = sample::dim(&mut ctx.rng, 3);
        let a = sample::point(&mut ctx.rng, dim, 3);
        let b = sample::point(&mut ctx.rng, dim, 3);
        let p = sample::polyfract(&mut ctx.rng, dim, 4, 4, 9);
        let inputs = || json!({"a": pt(&a), "b": pt(&b), "P": pfv(&p)});
        let (da, db) = (GroupRingElement::delta(&a), GroupRingElement::delta(&b));
        let (sa, sb) = (GroupRingElement::shift(&a), GroupRingElement::shift(&b));
        ctx.check(inputs, &sa * &db, &db * &sa);
        ctx.check(inputs, &db * &da, &da * &db);
        ctx.check(inputs, &sa * &sb, &sb * &sa);
        let ab = p.delta_direction(&a)?.delta_direction(&b)?;
        let ba = p.delta_direction(&b)?.delta_direction(&a)?;
        ctx.check(inputs, ab, ba);
        let shifted_then_diff = p.shift_by(&a)?.delta_direction(&b)?;
        let diff_then_shifted = p.delta_direction(&b)?.shift_by(&a)?;
        ctx.check(inputs, shifted_then_diff, diff_then_shifted);
    }
    Ok(())
}

fn suite_single_expansion(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.trials {
        let dim = sample::dim(&mut ctx.rng, 3);
        let a = sample::point(&mut ctx.rng, dim, 3);
        let alphas = expand_single(&a);
        let rebuilt = alphas
            .iter()
            .enumerate()
            .fold(GroupRingElement::zero(dim), |acc, (i, alpha)| {
                &acc + &(alpha * &standard_delta(dim, i))
            });
        ctx.check(
            || json!({"a": pt(&a)}),
            GroupRingElement::delta(&a),
            rebuilt.clone(),
        );

        // Pointwise, on random data tabulated around the origin.
        let seed: u64 = ctx.rng.random();
        let mut local = ChaCha8Rng::seed_from_u64(seed);
        let f = IntegerFunction::tabulate(dim, -8, 8, |_| Ok(sample::int(&mut local, 50)))?;
        let x = sample::point(&mut ctx.rng, dim, 3);
        let lhs = GroupRingElement::delta(&a).apply(&f, &x)?;
        let mut rhs = BigInt::zero();
        for (i, alpha) in alphas.iter().enumerate() {
            rhs += (alpha * &standard_delta(dim, i)).apply(&f, &x)?;
        }
        ctx.check(
            || json!({"a": pt(&a), "x": pt(&x), "table_seed": seed}),
            lhs,
            rhs,
        );
    }
    Ok(())
}

fn suite_multipolynomial(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.trials {
        let dim = sample::dim(&mut ctx.rng, 3);
        let nfactors = ctx.rng.random_range(1..=4);
        let factors: Vec<Vec<(LatticePoint, BigInt)>> = (0..nfactors)
            .map(|_| sample::terms(&mut ctx.rng, dim, 4, 3, 9))
            .collect();
        let folded = factors
            .iter()
            .try_fold(GroupRingElement::identity(dim), |acc, f| {
                GroupRingElement::from_terms(dim, f.clone()).map(|s| &acc * &s)
            })?;
        let enumerated = product_by_enumeration(dim, &factors)?;
        ctx.check(
            || {
                let fs: Vec<Value> = factors
                    .iter()
                    .map(|f| {
                        f.iter()
                            .map(|(a, c)| json!({"coords": pt(a), "coeff": crate::bigint_serde::to_number(c)}))
                            .collect()
                    })
                    .collect();
                json!({ "factors": fs })
            },
            folded,
            enumerated,
        );
    }
    Ok(())
}

fn suite_grouped(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.trials {
        let dim = sample::dim(&mut ctx.rng, 3);
        let w = sample::word(&mut ctx.rng, dim, 3, 3);
        let inputs = || json!({"word": serde_json::to_value(&w).expect("serializes")});
        let op = GroupRingElement::word_operator(&w);
        let grouped = expand_word_grouped(&w);
        ctx.check(inputs, grouped.recompose(), op);

        // Re-aggregate the sequence form by hand.
        let mut by_q: BTreeMap<ExponentTuple, GroupRingElement> = BTreeMap::new();
        for (k, coeff) in expand_word_sequence(&w).terms() {
            let mut q = vec![0u32; dim];
            for &m in k {
                q[m] += 1;
            }
            let slot = by_q
                .entry(ExponentTuple::new(q))
                .or_insert_with(|| GroupRingElement::zero(dim));
            *slot = &*slot + coeff;
        }
        by_q.retain(|_, c| !c.is_zero());
        let direct: Vec<_> = grouped
            .terms()
            .map(|(q, c)| (q.clone(), c.clone()))
            .collect();
        let regrouped: Vec<_> = by_q.into_iter().collect();
        ctx.check(inputs, format!("{direct:?}"), format!("{regrouped:?}"));

        let bad_norm = grouped
            .terms()
            .filter(|(q, _)| q.norm() != w.len() as u64)
            .count();
        ctx.check(inputs, bad_norm, 0);
    }
    Ok(())
}

fn suite_sequence(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.trials {
        let dim = sample::dim(&mut ctx.rng, 3);
        let w = sample::word(&mut ctx.rng, dim, 3, 3);
        let op = GroupRingElement::word_operator(&w);
        let seq = expand_word_sequence(&w);
        ctx.check(
            || json!({"word": serde_json::to_value(&w).expect("serializes")}),
            seq.recompose(),
            op,
        );
    }
    Ok(())
}

fn multiplier_tuples(max_len: usize, max_r: i64) -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<BigInt>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .into_iter()
            .flat_map(|prefix| {
                (1..=max_r).map(move |r| {
                    let mut v = prefix.clone();
                    v.push(BigInt::from(r));
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn big_list(r: &[BigInt]) -> Value {
    Value::Array(
        r.iter()
            .map(|x| Value::Number(crate::bigint_serde::to_number(x)))
            .collect(),
    )
}

fn suite_cyclic(ctx: &mut Ctx) -> Result<()> {
    for r in multiplier_tuples(4, 4) {
        let dim = sample::dim(&mut ctx.rng, 3);
        let s = sample::point(&mut ctx.rng, dim, 3);
        let t = cyclic_factor(&r, &s)?;
        let ok = check_cyclic(&t, &r, &s)?;
        ctx.check(|| json!({"r": big_list(&r), "s": pt(&s)}), ok, true);
    }
    Ok(())
}

fn suite_cyclic_printed(ctx: &mut Ctx) -> Result<()> {
    // Pointwise on f(x) = x with r = (2), s = 1.
    let r = vec![BigInt::from(2)];
    let s = LatticePoint::from_i64s(&[1]);
    let f = IntegerFunction::Polyfract(Polyfract::binomial_monomial(&[1], BigInt::one()));
    let x = LatticePoint::from_i64s(&[0]);
    let word_op =
        GroupRingElement::word_operator(&DifferenceWord::new(vec![&BigInt::from(2) * &s])?);
    let factored = &cyclic_factor_from_one(&r, &s)? * &GroupRingElement::delta(&s);
    let lhs = word_op.apply(&f, &x)?;
    let rhs = factored.apply(&f, &x)?;
    ctx.check(
        || json!({"r": [2], "s": [1], "f": "x1", "x": [0]}),
        lhs,
        rhs,
    );

    for _ in 0..ctx.trials {
        let d = ctx.rng.random_range(1..=4);
        let r: Vec<BigInt> = (0..d)
            .map(|_| BigInt::from(ctx.rng.random_range(1..=4)))
            .collect();
        let dim = sample::dim(&mut ctx.rng, 3);
        let s = sample::nonzero_point(&mut ctx.rng, dim, 3);
        let t = cyclic_factor_from_one(&r, &s)?;
        let ok = check_cyclic(&t, &r, &s)?;
        ctx.check(|| json!({"r": big_list(&r), "s": pt(&s)}), ok, true);
    }
    Ok(())
}

fn suite_binomial_edges(ctx: &mut Ctx) -> Result<()> {
    for x in -10i64..=10 {
        let xb = BigInt::from(x);
        for y in -5i64..=12 {
            let v = binom(&xb, y);
            let inputs = || json!({"x": x, "y": y});
            if (0..y).contains(&x) {
                ctx.check(inputs, v.clone(), BigInt::zero());
            }
            if y == 0 {
                ctx.check(inputs, v.clone(), BigInt::one());
            }
            if y < 0 {
                ctx.check(inputs, v.clone(), BigInt::zero());
            }
            if x == y && x >= 0 {
                ctx.check(inputs, v, BigInt::one());
            }
        }
    }
    Ok(())
}

fn suite_cyclic_annihilation(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.trials {
        let s = LatticePoint::new(vec![sample::nonzero_int(&mut ctx.rng, 3)]);
        let p = sample::polyfract(&mut ctx.rng, 1, 3, 3, 9);
        let d = p.count().finite().expect("nonzero") as usize + 1;
        let r: Vec<BigInt> = (0..d)
            .map(|_| BigInt::from(ctx.rng.random_range(1..=4)))
            .collect();
        let inputs = || json!({"P": pfv(&p), "s": pt(&s), "r": big_list(&r)});

        let power = GroupRingElement::delta(&s).pow(d as u32);
        let killed = p.apply_operator(&power)?;
        ctx.check(inputs, killed.is_zero(), true);

        // T·(Δ_s^d P) = T·0, and the word applied directly.
        let t = cyclic_factor(&r, &s)?;
        let through_factor = killed.apply_operator(&t)?;
        ctx.check(inputs, through_factor.is_zero(), true);
        let word: Vec<LatticePoint> = r.iter().map(|ri| ri * &s).collect();
        ctx.check(inputs, apply_word(&p, &word)?.is_zero(), true);
    }
    Ok(())
}

fn suite_standard_difference(ctx: &mut Ctx) -> Result<()> {
    const R: i64 = 6;
    for _ in 0..ctx.trials {
        let dim = sample::dim(&mut ctx.rng, 3);
        let n = ExponentTuple::new((0..dim).map(|_| ctx.rng.random_range(0..=4)).collect());
        let m = ExponentTuple::new(
            n.exps()
                .iter()
                .map(|&e| ctx.rng.random_range(0..=e))
                .collect(),
        );
        let b = sample::nonzero_int(&mut ctx.rng, 9);
        let p = Polyfract::from_terms(dim, [(n.clone(), b)])?;
        let expected = p.delta_standard(&m)?;
        let inputs = || json!({"P": pfv(&p), "m": m.exps()});

        let op = standard_power(&m);
        let top = R + m.exps().iter().copied().max().unwrap_or(0) as i64;
        let table = IntegerFunction::tabulate(dim, -R, top, |x| p.eval(x))?;
        for_each_point(dim, -R, R, |x| {
            let lhs = op.apply(&table, x)?;
            let rhs = expected.eval(x)?;
            ctx.check(
                || json!({"P": pfv(&p), "m": m.exps(), "x": pt(x)}),
                lhs,
                rhs,
            );
            Ok(())
        })?;

        // Unit steps in a random order.
        let mut steps: Vec<usize> = m
            .exps()
            .iter()
            .enumerate()
            .flat_map(|(l, &e)| std::iter::repeat_n(l, e as usize))
            .collect();
        for i in (1..steps.len()).rev() {
            let j = ctx.rng.random_range(0..=i);
            steps.swap(i, j);
        }
        let mut stepped = p.clone();
        for l in steps {
            stepped = stepped.delta_standard(&ExponentTuple::unit(dim, l))?;
        }
        ctx.check(inputs, stepped, expected);
    }
    Ok(())
}

fn for_each_point<F>(dim: usize, lo: i64, hi: i64, mut f: F) -> Result<()>
where
    F: FnMut(&LatticePoint) -> Result<()>,
{
    let mut idx = vec![lo; dim];
    loop {
        f(&LatticePoint::from_i64s(&idx))?;
        let mut k = dim;
        loop {
            if k == 0 {
                return Ok(());
            }
            k -= 1;
            if idx[k] < hi {
                idx[k] += 1;
                break;
            }
            idx[k] = lo;
        }
    }
}

fn random_degree_polyfract(ctx: &mut Ctx) -> Polyfract {
    let dim = sample::dim(&mut ctx.rng, 3);
    sample::polyfract(&mut ctx.rng, dim, 5, 5, 9)
}

fn suite_reconstruction(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.trials {
        let p = random_degree_polyfract(ctx);
        let bound = p.count().finite().unwrap_or(0) as u32;
        let back = Polyfract::from_samples(&IntegerFunction::Polyfract(p.clone()), bound)?;
        ctx.check(|| json!({"P": pfv(&p)}), back, p.clone());
    }
    Ok(())
}

fn suite_leading_term(ctx: &mut Ctx) -> Result<()> {
    for i in 0..ctx.trials {
        let mut p = random_degree_polyfract(ctx);
        if i % 4 == 0 {
            // Force a tie at the top norm.
            let top = p.count().finite().unwrap_or(0);
            let dim = p.dim();
            let mut exps = vec![0u32; dim];
            exps[dim - 1] = top as u32;
            let extra = Polyfract::from_terms(dim, [(ExponentTuple::new(exps), BigInt::from(3))])?;
            let sum = &p + &extra;
            if !sum.is_zero() {
                p = sum;
            }
        }
        ctx.check(|| json!({"P": pfv(&p)}), leading_term_check(&p)?, true);
    }
    Ok(())
}

fn suite_count_equals_fdeg(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.trials {
        let p = random_degree_polyfract(ctx);
        ctx.check(
            || json!({"P": pfv(&p)}),
            fdeg_standard_by_search(&p),
            p.count(),
        );
    }
    Ok(())
}

/// Refutation budget and box for the bounded arbitrary-direction check.
pub const GENERAL_BOX: u32 = 2;
pub const GENERAL_BUDGET: u64 = 500;

fn suite_general_degree(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.trials {
        let p = random_degree_polyfract(ctx);
        let cfg = SearchConfig {
            direction_box: GENERAL_BOX,
            budget: GENERAL_BUDGET,
            seed: ctx.rng.random(),
        };
        let report = fdeg::fdeg_general_with(&p, &cfg)?;
        let inputs = || json!({"P": pfv(&p), "seed": cfg.seed});
        ctx.check(inputs, Degree::Finite(report.fdeg_general_lower), p.count());
        if let Some(w) = &report.witness {
            ctx.check(inputs, apply_word(&p, w.letters())?.is_zero(), false);
        }
        let counterexample = report
            .counterexample
            .as_ref()
            .map_or_else(|| "none".to_string(), ToString::to_string);
        ctx.check(inputs, counterexample, "none".to_string());
        let letters = fdeg::box_letters(p.dim(), GENERAL_BOX).len() as u64;
        let all = u32::try_from(report.annihilation_checked_to)
            .ok()
            .and_then(|e| letters.checked_pow(e))
            .unwrap_or(u64::MAX);
        ctx.check(
            inputs,
            report.words_checked >= GENERAL_BUDGET.min(all),
            true,
        );
    }
    Ok(())
}

fn suite_upper_negation(ctx: &mut Ctx) -> Result<()> {
    for n in 0i64..=10 {
        for k in 0i64..=10 {
            let lhs = binom(&BigInt::from(-n), k);
            let sign = if k % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            let rhs = sign * binom(&BigInt::from(n + k - 1), k);
            ctx.check(|| json!({"n": n, "k": k}), lhs, rhs);
        }
    }
    Ok(())
}

fn suite_alt_sum(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.trials {
        let dim = sample::dim(&mut ctx.rng, 3);
        let a = sample::point(&mut ctx.rng, dim, 3);
        let n: u32 = ctx.rng.random_range(0..=5);
        let radius = n as i64 * i64::try_from(a.sup_norm()).expect("small") + 4;
        let seed: u64 = ctx.rng.random();
        let mut local = ChaCha8Rng::seed_from_u64(seed);
        let f =
            IntegerFunction::tabulate(dim, -radius, radius, |_| Ok(sample::int(&mut local, 1000)))?;
        let x = sample::point(&mut ctx.rng, dim, 4);
        let expected = GroupRingElement::delta(&a).pow(n).apply(&f, &x)?;
        let inputs =
            || json!({"a": pt(&a), "n": n, "x": pt(&x), "table_seed": seed, "radius": radius});
        ctx.check(inputs, alt_sum_univariate(&f, &a, n, &x)?, expected.clone());
        ctx.check(
            inputs,
            alt_sum_univariate_mirrored(&f, &a, n, &x)?,
            expected,
        );
    }
    Ok(())
}

/// Every tuple in [0, max]^dim, lexicographically.
fn cube(dim: usize, max: u32) -> Vec<ExponentTuple> {
    ExponentTuple::new(vec![max; dim]).below()
}

/// Exhaustive check of the multivariate alternating sum. Values of h are
/// tabulated once per m; each instance is then a weighted stencil sum.
fn sweep_alt_sum(
    ctx: &mut Ctx,
    pairs: impl Fn(usize) -> Vec<(ExponentTuple, ExponentTuple)>,
    corrected: bool,
    link_to_difference: bool,
) -> Result<()> {
    const XR: i64 = 4;
    for dim in 1..=3usize {
        let mut by_m: BTreeMap<ExponentTuple, Vec<ExponentTuple>> = BTreeMap::new();
        for (m, n) in pairs(dim) {
            by_m.entry(m).or_default().push(n);
        }
        for (m, ns) in by_m {
            let h = Polyfract::from_terms(dim, [(m.clone(), BigInt::one())])?;
            let hi = XR
                + ns.iter()
                    .flat_map(|n| n.exps().iter().copied())
                    .max()
                    .unwrap_or(0) as i64;
            let table = IntegerFunction::tabulate(dim, -XR, hi, |y| h.eval(y))?;
            for n in ns {
                let stencil = alt_sum_stencil(&n, corrected);
                let dn = h.delta_standard(&n)?;
                for_each_point(dim, -XR, XR, |x| {
                    let mut lhs = BigInt::zero();
                    for (offset, w) in &stencil {
                        let y = LatticePoint::new(
                            x.coords()
                                .iter()
                                .zip(offset)
                                .map(|(xl, &o)| xl + o)
                                .collect(),
                        );
                        let hv = table.eval(&y)?;
                        if !hv.is_zero() {
                            lhs += hv * *w;
                        }
                    }
                    let rhs: BigInt = x
                        .coords()
                        .iter()
                        .zip(m.exps().iter().zip(n.exps()))
                        .map(|(xl, (&ml, &nl))| binom(xl, ml as i64 - nl as i64))
                        .product();
                    let inputs = || json!({"m": m.exps(), "n": n.exps(), "x": pt(x)});
                    if link_to_difference {
                        let via_difference = dn.eval(x)?;
                        ctx.check(inputs, via_difference, rhs.clone());
                    }
                    ctx.check(inputs, lhs, rhs);
                    Ok(())
                })?;
            }
        }
    }
    Ok(())
}

fn suite_multivariate_alt_sum(ctx: &mut Ctx) -> Result<()> {
    sweep_alt_sum(
        ctx,
        |dim| {
            cube(dim, 4)
                .into_iter()
                .flat_map(|m| m.below().into_iter().map(move |n| (m.clone(), n)))
                .collect()
        },
        true,
        true,
    )
}

fn suite_multivariate_alt_sum_unweighted(ctx: &mut Ctx) -> Result<()> {
    sweep_alt_sum(
        ctx,
        |dim| {
            let per_axis: Vec<(u32, u32)> = vec![(3, 2), (4, 2), (4, 3)];
            let mut out = vec![(Vec::new(), Vec::new())];
            for _ in 0..dim {
                out = out
                    .into_iter()
                    .flat_map(|(m, n): (Vec<u32>, Vec<u32>)| {
                        per_axis.iter().map(move |&(mi, ni)| {
                            let (mut m, mut n) = (m.clone(), n.clone());
                            m.push(mi);
                            n.push(ni);
                            (m, n)
                        })
                    })
                    .collect();
            }
            out.into_iter()
                .map(|(m, n)| (ExponentTuple::new(m), ExponentTuple::new(n)))
                .collect()
        },
        false,
        false,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[u32]) -> ExponentTuple {
        ExponentTuple::new(v.to_vec())
    }

    fn p(c: &[i64]) -> LatticePoint {
        LatticePoint::from_i64s(c)
    }

    #[test]
    fn univariate_examples() {
        let f = IntegerFunction::Polyfract(Polyfract::binomial_monomial(&[3], BigInt::one()));
        assert_eq!(
            alt_sum_univariate(&f, &p(&[1]), 0, &p(&[4])).unwrap(),
            f.eval(&p(&[4])).unwrap()
        );
        assert_eq!(
            alt_sum_univariate(&f, &p(&[1]), 2, &p(&[1])).unwrap(),
            BigInt::from(1)
        );
        let via_ring = GroupRingElement::delta(&p(&[1]))
            .pow(2)
            .apply(&f, &p(&[1]))
            .unwrap();
        assert_eq!(via_ring, BigInt::from(1));
        assert_eq!(
            alt_sum_univariate_mirrored(&f, &p(&[1]), 2, &p(&[1])).unwrap(),
            BigInt::from(1)
        );
    }

    #[test]
    fn univariate_window_error() {
        let f = IntegerFunction::tabulate(1, 0, 3, |x| Ok(x.coord(0).clone())).unwrap();
        assert!(matches!(
            alt_sum_univariate(&f, &p(&[2]), 2, &p(&[0])),
            Err(Error::WindowViolation { .. })
        ));
    }

    #[test]
    fn multivariate_examples() {
        let (l, r) = alt_sum_multivariate(&e(&[3]), &e(&[2]), &p(&[1]), true).unwrap();
        assert_eq!((l, r), (BigInt::from(1), BigInt::from(1)));
        let (l, r) = alt_sum_multivariate(&e(&[3]), &e(&[2]), &p(&[2]), false).unwrap();
        assert_eq!((l, r), (BigInt::from(3), BigInt::from(2)));
        let (l, r) = alt_sum_multivariate(&e(&[2, 3]), &e(&[0, 0]), &p(&[5, -2]), true).unwrap();
        assert_eq!(l, r);
        assert_eq!(l, binom(&5.into(), 2) * binom(&(-2).into(), 3));
    }

    #[test]
    fn unknown_identity() {
        assert_eq!(
            verify_identity("thm_9_9", 1, 1).unwrap_err(),
            Error::UnknownIdentity("thm_9_9".into())
        );
    }

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = suites().iter().map(|s| s.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), suites().len());
    }

    #[test]
    fn reports_are_deterministic() {
        let a = verify_identity("thm_4_2", 20, 7).unwrap();
        let b = verify_identity("thm_4_2", 20, 7).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert!(a.passed());
    }

    #[test]
    fn expected_failures() {
        let r = verify_identity("thm_5_1_printed", 5, 42).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.failures[0].lhs, "2");
        assert_eq!(r.failures[0].rhs, "1");
    }

    #[test]
    fn small_suites_pass() {
        for id in [
            "ring_laws",
            "thm_3_1_a",
            "thm_3_1_b",
            "thm_3_1_f",
            "thm_7_1",
            "lemma_6_1",
        ] {
            let r = verify_identity(id, 25, 42).unwrap();
            assert!(r.passed(), "{id}: {:?}", r.failures.first());
            assert!(r.instances_checked > 0);
        }
    }
}
