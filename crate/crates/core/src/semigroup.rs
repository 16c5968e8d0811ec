//! Numerical semigroups with an exact membership table.
//!
//! A numerical semigroup is an additively closed subset of ℕ containing 0
//! whose complement (the set of *gaps*) is finite. Every value stores its
//! membership table below the conductor together with the conductor itself,
//! so membership queries are O(1) and the classical invariants
//! (multiplicity, Frobenius number, genus, minimal generators) are computed
//! once at construction time.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Errors produced when constructing a [`NumericalSemigroup`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("generator list must be nonempty")]
    EmptyGenerators,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("gcd of generators is {gcd}, not 1: the complement would be infinite")]
    GcdNotOne { gcd: u64 },
    #[error("0 cannot be a gap")]
    ZeroGap,
    #[error("complement is not closed under addition: {x} + {y} = {sum} is a gap")]
    NotASemigroup { x: u64, y: u64, sum: u64 },
}

/// A numerical semigroup, stored as its conductor plus the membership
/// table of the finitely many values below it.
///
/// ℕ itself has conductor 0 and an empty table. Equality is equality of
/// (conductor, table), which coincides with equality as subsets of ℕ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    conductor: u64,
    below: Vec<bool>,
    multiplicity: u64,
    genus: u64,
    min_generators: Vec<u64>,
}

/// The classical invariants of a numerical semigroup, bundled for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupInvariants {
    pub multiplicity: u64,
    pub conductor: u64,
    pub frobenius: i64,
    pub genus: u64,
    pub gaps: Vec<u64>,
    pub minimal_generators: Vec<u64>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl NumericalSemigroup {
    /// The semigroup ℕ of all natural numbers.
    pub fn naturals() -> Self {
        Self::from_table(Vec::new())
    }

    /// The smallest numerical semigroup containing the given generators.
    ///
    /// Fails unless the generators are positive and have gcd 1 (otherwise
    /// the complement in ℕ would be infinite).
    pub fn from_generators(gens: &[u64]) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(SemigroupError::ZeroGenerator);
        }
        let g = gens.iter().copied().reduce(gcd).unwrap();
        if g != 1 {
            return Err(SemigroupError::GcdNotOne { gcd: g });
        }
        let m = *gens.iter().min().unwrap() as usize;
        let mut bound = (*gens.iter().max().unwrap() as usize) * 4 + 16;
        loop {
            let mut table = vec![false; bound];
            table[0] = true;
            for x in 1..bound {
                table[x] = gens
                    .iter()
                    .any(|&gen| x >= gen as usize && table[x - gen as usize]);
            }
            // Once m consecutive values are members, everything above the
            // run is reachable by adding multiples of m.
            let run = (0..bound.saturating_sub(m)).find(|&r| table[r..r + m].iter().all(|&b| b));
            if let Some(start) = run {
                table.truncate(start + m);
                return Ok(Self::from_table(table));
            }
            bound *= 2;
        }
    }

    /// The semigroup whose gap set is exactly `gaps`, if one exists.
    ///
    /// Reports the first pair of members whose sum lands in the gap set
    /// when the complement is not additively closed.
    pub fn from_gaps(gaps: &[u64]) -> Result<Self, SemigroupError> {
        let gap_set: BTreeSet<u64> = gaps.iter().copied().collect();
        if gap_set.contains(&0) {
            return Err(SemigroupError::ZeroGap);
        }
        let Some(&max_gap) = gap_set.iter().next_back() else {
            return Ok(Self::naturals());
        };
        let bound = (max_gap + 1) as usize;
        let table: Vec<bool> = (0..bound).map(|x| !gap_set.contains(&(x as u64))).collect();
        for x in 1..bound {
            if !table[x] {
                continue;
            }
            for y in x..bound {
                let sum = x + y;
                if sum >= bound {
                    break;
                }
                if table[y] && !table[sum] {
                    return Err(SemigroupError::NotASemigroup {
                        x: x as u64,
                        y: y as u64,
                        sum: sum as u64,
                    });
                }
            }
        }
        Ok(Self::from_table(table))
    }

    /// Builds a semigroup from a membership table covering a prefix of ℕ;
    /// every value at or beyond `table.len()` is taken to be a member.
    /// The table is normalized so the stored length equals the conductor.
    pub(crate) fn from_table(mut table: Vec<bool>) -> Self {
        let conductor = match table.iter().rposition(|&b| !b) {
            Some(last_gap) => (last_gap + 1) as u64,
            None => 0,
        };
        table.truncate(conductor as usize);
        debug_assert!(table.is_empty() || table[0], "0 must be a member");
        let c = conductor as usize;
        #[cfg(debug_assertions)]
        for x in 1..c {
            if table[x] {
                for y in x..c {
                    if table[y] && x + y < c {
                        debug_assert!(table[x + y], "membership table is not additively closed");
                    }
                }
            }
        }
        let multiplicity = (1..c)
            .find(|&x| table[x])
            .map(|x| x as u64)
            .unwrap_or(conductor.max(1));
        let genus = table.iter().filter(|&&b| !b).count() as u64;
        let mut sg = NumericalSemigroup {
            conductor,
            below: table,
            multiplicity,
            genus,
            min_generators: Vec::new(),
        };
        sg.min_generators = sg.compute_minimal_generators();
        sg
    }

    fn compute_minimal_generators(&self) -> Vec<u64> {
        // Minimal generators lie below c + 2m: anything larger splits off m.
        let m = self.multiplicity;
        let hi = self.conductor + 2 * m;
        let mut gens = Vec::new();
        for x in m..hi {
            if !self.contains(x as i64) {
                continue;
            }
            let decomposable =
                (m..=x.saturating_sub(m)).any(|u| self.contains(u as i64) && self.contains((x - u) as i64));
            if !decomposable {
                gens.push(x);
            }
        }
        gens
    }

    /// Membership test; negative integers are never members.
    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let x = x as u64;
        x >= self.conductor || self.below[x as usize]
    }

    /// The least c with c + ℕ ⊆ S (0 for ℕ).
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// The least nonzero member.
    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// The largest integer outside the semigroup, −1 for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    /// The number of gaps.
    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn is_naturals(&self) -> bool {
        self.conductor == 0
    }

    /// The gaps in increasing order.
    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor)
            .filter(|&x| !self.below[x as usize])
            .collect()
    }

    /// The unique minimal system of generators, in increasing order.
    pub fn minimal_generators(&self) -> &[u64] {
        &self.min_generators
    }

    pub fn invariants(&self) -> SemigroupInvariants {
        SemigroupInvariants {
            multiplicity: self.multiplicity,
            conductor: self.conductor,
            frobenius: self.frobenius(),
            genus: self.genus,
            gaps: self.gaps(),
            minimal_generators: self.min_generators.clone(),
        }
    }

    /// Members strictly below `hi`, in increasing order.
    pub fn members_below(&self, hi: u64) -> impl Iterator<Item = u64> + '_ {
        (0..hi).filter(move |&x| self.contains(x as i64))
    }

    /// The quotient S/k = { x ∈ ℕ : kx ∈ S }.
    pub fn quotient(&self, k: u64) -> Self {
        assert!(k >= 1, "quotient divisor must be at least 1");
        let bound = self.conductor.div_ceil(k) as usize;
        let table = (0..bound)
            .map(|x| self.contains((x as u64 * k) as i64))
            .collect();
        Self::from_table(table)
    }

    /// Whether x + y − z ∈ S for all members x ≥ y ≥ z.
    ///
    /// Since x + y − z ≥ x, any failure has all three entries below the
    /// conductor, so scanning the finite member list is exhaustive.
    pub fn is_arf(&self) -> bool {
        let members: Vec<u64> = self.members_below(self.conductor).collect();
        for (i, &x) in members.iter().enumerate() {
            for (j, &y) in members[..=i].iter().enumerate() {
                for &z in &members[..=j] {
                    if !self.contains((x + y - z) as i64) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gen:")?;
        for (i, g) in self.min_generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup({self}, conductor={})", self.conductor)
    }
}
