//! Functional degree of polyfracts.
//!
//! The functional degree of f is the largest d such that some d-fold
//! difference Δ_{a_1}···Δ_{a_d} f is not identically zero. For a polyfract it
//! equals `count`, the largest |n| in its support, and the maximum is
//! already reached by standard-basis words Δ^n. Three routes are provided:
//! the closed form ([`fdeg_standard`]), a direct search over Δ^n
//! ([`fdeg_standard_by_search`]) and a bounded search over arbitrary
//! directions ([`fdeg_general`]).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{DifferenceWord, LatticePoint};
use crate::polyfract::{Degree, ExponentTuple, Polyfract};

/// Seed used by [`fdeg_general`] for sampled refutations.
pub const DEFAULT_SEED: u64 = 0x5eed;

/// The functional degree via `count`.
pub fn fdeg_standard(p: &Polyfract) -> Degree {
    p.count()
}

/// max{|n| : Δ^n P ≠ 0} over all n ∈ ℕ^N with |n| ≤ count(P) + 1.
///
/// n ranges over ℕ^N including zero components; restricting to strictly
/// positive n would miss polyfracts that ignore some variable.
pub fn fdeg_standard_by_search(p: &Polyfract) -> Degree {
    let bound = match p.count() {
        Degree::NegInfinity => return Degree::NegInfinity,
        Degree::Finite(c) => c + 1,
    };
    ExponentTuple::all_up_to(p.dim(), bound)
        .into_iter()
        .filter(|n| {
            !p.delta_standard(n)
                .expect("tuple has the polyfract's dimension")
                .is_zero()
        })
        .map(|n| Degree::Finite(n.norm()))
        .max()
        .unwrap_or(Degree::NegInfinity)
}

/// Compares the degree of P with the degree of each of its maximal-norm terms
/// taken alone. Every tie is tried, not only one representative.
pub fn leading_term_check(p: &Polyfract) -> Result<bool> {
    let top = p.count().finite().ok_or(Error::ZeroFunction)?;
    let whole = fdeg_standard_by_search(p);
    Ok(p.terms().filter(|(n, _)| n.norm() == top).all(|(n, b)| {
        let single =
            Polyfract::from_terms(p.dim(), [(n.clone(), b.clone())]).expect("same dimension");
        fdeg_standard_by_search(&single) == whole
    }))
}

/// Applies the word letter by letter, stopping early once the result vanishes.
pub fn apply_word(p: &Polyfract, letters: &[LatticePoint]) -> Result<Polyfract> {
    let mut cur = p.clone();
    for a in letters {
        if cur.is_zero() {
            break;
        }
        cur = cur.delta_direction(a)?;
    }
    Ok(cur)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Letters range over [-direction_box, direction_box]^N minus the origin.
    pub direction_box: u32,
    /// Most words of length fdeg + 1 to check before switching to sampling.
    pub budget: u64,
    pub seed: u64,
}

impl SearchConfig {
    pub fn new(direction_box: u32, budget: u64) -> Self {
        Self {
            direction_box,
            budget,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    #[serde(rename = "fdeg")]
    pub fdeg_standard: Degree,
    #[serde(skip)]
    pub fdeg_general_lower: u64,
    #[serde(serialize_with = "serialize_witness")]
    pub witness: Option<DifferenceWord>,
    #[serde(rename = "refuted_length")]
    pub annihilation_checked_to: u64,
    pub exhaustive: bool,
    pub words_checked: u64,
    /// A word of length fdeg + 1 that did not annihilate; never expected.
    pub counterexample: Option<DifferenceWord>,
}

fn serialize_witness<S: serde::Serializer>(
    w: &Option<DifferenceWord>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match w {
        Some(w) => w.serialize(s),
        None => Vec::<LatticePoint>::new().serialize(s),
    }
}

impl DegreeReport {
    /// Witness found at full length and no longer word survived.
    pub fn is_consistent(&self) -> bool {
        self.counterexample.is_none()
            && Degree::Finite(self.fdeg_general_lower) == self.fdeg_standard
    }
}

/// Letters of the direction box, each coordinate running 0, 1, -1, 2, -2, …
/// and tuples ordered lexicographically by that sequence.
pub fn box_letters(dim: usize, direction_box: u32) -> Vec<LatticePoint> {
    let mut axis = vec![0i64];
    for k in 1..=direction_box as i64 {
        axis.push(k);
        axis.push(-k);
    }
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                axis.iter().map(move |&c| {
                    let mut v = prefix.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out.into_iter()
        .filter(|v| v.iter().any(|&c| c != 0))
        .map(|v| LatticePoint::from_i64s(&v))
        .collect()
}

/// fdeg over arbitrary directions with the default seed. `max_extra` is the
/// refutation budget for words one letter longer than the degree.
pub fn fdeg_general(p: &Polyfract, direction_box: u32, max_extra: u64) -> Result<DegreeReport> {
    fdeg_general_with(p, &SearchConfig::new(direction_box, max_extra))
}

/// Bounded search for the degree over arbitrary lattice directions.
///
/// Witness search order: first the powers Δ_a^d for each box letter a in
/// [`box_letters`] order, then the standard-basis word Δ^n of the
/// lexicographically first maximal-norm n in the support. Refutation then
/// checks words of length d + 1 over the box: all of them when there are at
/// most `budget`, otherwise `budget` words drawn uniformly from a
/// ChaCha8 stream seeded with `seed`.
pub fn fdeg_general_with(p: &Polyfract, cfg: &SearchConfig) -> Result<DegreeReport> {
    if cfg.direction_box == 0 {
        return Err(Error::InvalidArgument(
            "direction box must be at least 1".into(),
        ));
    }
    let degree = p.count();
    let d = degree.finite().ok_or(Error::ZeroFunction)?;
    let dim = p.dim();
    let letters = box_letters(dim, cfg.direction_box);

    let (witness, lower) = if d == 0 {
        (None, 0)
    } else {
        match find_witness(p, &letters, d)? {
            Some(w) => (Some(w), d),
            None => (None, 0),
        }
    };

    let refute_len = d + 1;
    let total = u32::try_from(refute_len)
        .ok()
        .and_then(|e| (letters.len() as u64).checked_pow(e));
    let exhaustive = matches!(total, Some(t) if t <= cfg.budget);

    let mut counterexample = None;
    let mut words_checked = 0u64;
    let mut check = |word: &[LatticePoint]| -> Result<()> {
        words_checked += 1;
        if counterexample.is_none() && !apply_word(p, word)?.is_zero() {
            counterexample = Some(DifferenceWord::new(word.to_vec())?);
        }
        Ok(())
    };

    let len = refute_len as usize;
    if exhaustive {
        let mut idx = vec![0usize; len];
        'outer: loop {
            let word: Vec<LatticePoint> = idx.iter().map(|&i| letters[i].clone()).collect();
            check(&word)?;
            let mut k = len;
            loop {
                if k == 0 {
                    break 'outer;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < letters.len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for _ in 0..cfg.budget {
            let word: Vec<LatticePoint> = (0..len)
                .map(|_| letters[rng.random_range(0..letters.len())].clone())
                .collect();
            check(&word)?;
        }
    }

    Ok(DegreeReport {
        fdeg_standard: degree,
        fdeg_general_lower: lower,
        witness,
        annihilation_checked_to: refute_len,
        exhaustive,
        words_checked,
        counterexample,
    })
}

fn find_witness(p: &Polyfract, letters: &[LatticePoint], d: u64) -> Result<Option<DifferenceWord>> {
    for a in letters {
        let word = vec![a.clone(); d as usize];
        if !apply_word(p, &word)?.is_zero() {
            return DifferenceWord::new(word).map(Some);
        }
    }
    let top = p
        .terms()
        .map(|(n, _)| n)
        .find(|n| n.norm() == d)
        .expect("count is attained");
    let word: Vec<LatticePoint> = top
        .exps()
        .iter()
        .enumerate()
        .flat_map(|(i, &e)| std::iter::repeat_n(LatticePoint::unit(p.dim(), i), e as usize))
        .collect();
    if apply_word(p, &word)?.is_zero() {
        Ok(None)
    } else {
        DifferenceWord::new(word).map(Some)
    }
}
