//! Shared generators for the integration suites: seeded randomness and an
//! exhaustive gap-subset enumerator independent of the tree walk.

#![allow(dead_code)]

use nsgp_core::*;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random semigroup of genus at most `genus_max`, by a random descent
/// through the generator-removal tree (stopping early at leaves).
pub fn random_semigroup<R: Rng>(rng: &mut R, genus_max: u64) -> NumericalSemigroup {
    let target = rng.gen_range(0..=genus_max);
    let mut s = NumericalSemigroup::naturals();
    for _ in 0..target {
        let frobenius = s.frobenius();
        let candidates: Vec<u64> = s
            .minimal_generators()
            .iter()
            .copied()
            .filter(|&g| g as i64 > frobenius)
            .collect();
        if candidates.is_empty() {
            break;
        }
        let g = candidates[rng.gen_range(0..candidates.len())];
        let mut gaps = s.gaps();
        gaps.push(g);
        s = NumericalSemigroup::from_gaps(&gaps).expect("removal keeps closure");
    }
    s
}

/// A random ideal of `s` generated by one or two members.
pub fn random_ideal<R: Rng>(rng: &mut R, s: &NumericalSemigroup) -> SemigroupIdeal {
    let members: Vec<u64> = s.members_below(s.conductor() + 6).collect();
    let count = rng.gen_range(1..=2usize);
    let gens: Vec<u64> = (0..count)
        .map(|_| members[rng.gen_range(0..members.len())])
        .collect();
    SemigroupIdeal::from_generators(s, &gens).expect("members generate an ideal")
}

/// The smallest odd member of `s` at or above `from`.
pub fn odd_member_from(s: &NumericalSemigroup, from: u64) -> u64 {
    let mut x = from.max(1);
    if x % 2 == 0 {
        x += 1;
    }
    while !s.contains(x as i64) {
        x += 2;
    }
    x
}

/// A random pattern with `1..=max_len` coefficients in `[-max_coeff, max_coeff] \ {0}`,
/// signed positive with probability `positive_bias`.
pub fn random_pattern<R: Rng>(
    rng: &mut R,
    max_len: usize,
    max_coeff: i64,
    positive_bias: f64,
) -> Pattern {
    let len = rng.gen_range(1..=max_len);
    let coeffs = (0..len)
        .map(|_| {
            let mag = rng.gen_range(1..=max_coeff);
            if rng.gen_bool(positive_bias) {
                mag
            } else {
                -mag
            }
        })
        .collect();
    Pattern::new(coeffs).expect("nonzero coefficients")
}

pub fn random_admissible_pattern<R: Rng>(rng: &mut R, max_len: usize, max_coeff: i64) -> Pattern {
    loop {
        let p = random_pattern(rng, max_len, max_coeff, 0.65);
        if p.is_admissible() {
            return p;
        }
    }
}

pub fn random_strongly_admissible_pattern<R: Rng>(
    rng: &mut R,
    max_len: usize,
    max_coeff: i64,
) -> Pattern {
    loop {
        let p = random_pattern(rng, max_len, max_coeff, 0.65);
        if p.is_strongly_admissible() && !p.is_zero() {
            return p;
        }
    }
}

/// A random admissible monic pattern (leading coefficient 1).
pub fn random_monic_pattern<R: Rng>(rng: &mut R, max_len: usize, max_coeff: i64) -> Pattern {
    loop {
        let len = rng.gen_range(1..=max_len);
        let mut coeffs = vec![1i64];
        for _ in 1..len {
            let mag = rng.gen_range(1..=max_coeff);
            coeffs.push(if rng.gen_bool(0.6) { mag } else { -mag });
        }
        let p = Pattern::new(coeffs).expect("nonzero coefficients");
        if p.is_admissible() {
            return p;
        }
    }
}

/// Every numerical semigroup of genus `genus`, by exhausting the
/// genus-subsets of {1, …, 2·genus − 1} (the Frobenius number of a genus-g
/// semigroup is at most 2g − 1) and keeping the additively closed ones.
pub fn semigroups_by_gap_subsets(genus: u64) -> Vec<NumericalSemigroup> {
    if genus == 0 {
        return vec![NumericalSemigroup::naturals()];
    }
    let pool: Vec<u64> = (1..=2 * genus - 1).collect();
    let mut out = Vec::new();
    let mut choice: Vec<usize> = (0..genus as usize).collect();
    loop {
        let gaps: Vec<u64> = choice.iter().map(|&i| pool[i]).collect();
        if let Ok(s) = NumericalSemigroup::from_gaps(&gaps) {
            out.push(s);
        }
        // next k-combination of indices
        let k = choice.len();
        let n = pool.len();
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if choice[i] != i + n - k {
                break;
            }
        }
        choice[i] += 1;
        for j in i + 1..k {
            choice[j] = choice[j - 1] + 1;
        }
    }
}
