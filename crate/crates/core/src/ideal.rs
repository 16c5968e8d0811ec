//! Semigroup ideals E ⊆ S with E + S ⊆ E, relative differences E − F,
//! and the numerical duplication S ⋈ᵈ E = 2·S ∪ (2·E + d).

use std::fmt;

use thiserror::Error;

use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("generator list must be nonempty")]
    EmptyGenerators,
    #[error("generator {gen} is not a member of the semigroup")]
    NotInSemigroup { gen: u64 },
    #[error("duplication requires an odd d, got {d}")]
    DNotOdd { d: u64 },
    #[error("duplication requires d to be a member of the base semigroup, got {d}")]
    DNotInS { d: u64 },
}

/// An ideal E of a numerical semigroup S: a nonempty E ⊆ S with E + S ⊆ E.
///
/// Like the semigroup itself, an ideal is cofinite in ℕ, so it is stored
/// as a membership table below its conductor c(E) = min{x : x + ℕ ⊆ E}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SemigroupIdeal {
    parent: NumericalSemigroup,
    conductor: u64,
    below: Vec<bool>,
    min: u64,
}

/// A relative difference E − F = { z ∈ ℤ : z + F ⊆ E } of two ideals of
/// the same semigroup. For F = E the set contains 0 and all of S and is
/// closed under addition; in general it may contain negative integers.
#[derive(Clone, PartialEq, Eq)]
pub struct DifferenceSet {
    min: i64,
    conductor: i64,
    below: Vec<bool>,
}

impl SemigroupIdeal {
    /// The smallest ideal of `parent` containing the given generators,
    /// i.e. the union of the translates g + S.
    pub fn from_generators(
        parent: &NumericalSemigroup,
        gens: &[u64],
    ) -> Result<Self, IdealError> {
        if gens.is_empty() {
            return Err(IdealError::EmptyGenerators);
        }
        if let Some(&bad) = gens.iter().find(|&&g| !parent.contains(g as i64)) {
            return Err(IdealError::NotInSemigroup { gen: bad });
        }
        let min = *gens.iter().min().unwrap();
        // min + c(S) + ℕ ⊆ min + S ⊆ E, so c(E) ≤ min + c(S).
        let bound = (min + parent.conductor()) as usize;
        let table: Vec<bool> = (0..bound as u64)
            .map(|x| gens.iter().any(|&g| x >= g && parent.contains((x - g) as i64)))
            .collect();
        let conductor = match table.iter().rposition(|&b| !b) {
            Some(last) => (last + 1) as u64,
            None => min,
        };
        let below = table[..conductor as usize].to_vec();
        debug_assert!(conductor >= min);
        Ok(SemigroupIdeal {
            parent: parent.clone(),
            conductor,
            below,
            min,
        })
    }

    /// The principal ideal s + S.
    pub fn principal(parent: &NumericalSemigroup, s: u64) -> Result<Self, IdealError> {
        Self::from_generators(parent, &[s])
    }

    pub fn parent(&self) -> &NumericalSemigroup {
        &self.parent
    }

    /// The least element min(E).
    pub fn min(&self) -> u64 {
        self.min
    }

    /// The least c with c + ℕ ⊆ E.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let x = x as u64;
        x >= self.conductor || self.below[x as usize]
    }

    /// Members strictly below `hi`, in increasing order.
    pub fn members_below(&self, hi: u64) -> impl Iterator<Item = u64> + '_ {
        (0..hi).filter(move |&x| self.contains(x as i64))
    }

    /// The relative difference self − other = { z : z + other ⊆ self }.
    ///
    /// Both ideals must belong to the same semigroup. Everything at or
    /// above c(self) − min(other) belongs to the difference, so a finite
    /// scan decides the rest.
    pub fn difference(&self, other: &SemigroupIdeal) -> DifferenceSet {
        assert_eq!(
            self.parent, other.parent,
            "relative difference requires ideals of the same semigroup"
        );
        let lo = self.min as i64 - other.min as i64;
        let hi = self.conductor as i64 - other.min as i64;
        let flags: Vec<bool> = (lo..hi)
            .map(|z| {
                // only f < c(self) − z can push z + f outside the tail
                other
                    .members_below((self.conductor as i64 - z).max(0) as u64)
                    .all(|f| self.contains(z + f as i64))
            })
            .collect();
        let min = match flags.iter().position(|&b| b) {
            Some(i) => lo + i as i64,
            None => hi,
        };
        let conductor = match flags.iter().rposition(|&b| !b) {
            Some(i) => lo + i as i64 + 1,
            None => min,
        };
        let below = flags[(min - lo) as usize..(conductor - lo) as usize].to_vec();
        DifferenceSet {
            min,
            conductor,
            below,
        }
    }

    /// The numerical duplication S ⋈ᵈ E = 2·S ∪ (2·E + d) for odd d ∈ S.
    ///
    /// Its conductor is 2·c(E) + d − 1.
    pub fn duplication(&self, d: u64) -> Result<NumericalSemigroup, IdealError> {
        if d % 2 == 0 {
            return Err(IdealError::DNotOdd { d });
        }
        if !self.parent.contains(d as i64) {
            return Err(IdealError::DNotInS { d });
        }
        let bound = 2 * self.conductor + d - 1;
        let table: Vec<bool> = (0..bound)
            .map(|x| {
                if x % 2 == 0 {
                    self.parent.contains((x / 2) as i64)
                } else {
                    x >= d && self.contains(((x - d) / 2) as i64)
                }
            })
            .collect();
        Ok(NumericalSemigroup::from_table(table))
    }
}

impl fmt::Debug for SemigroupIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SemigroupIdeal(min={}, conductor={}, parent={})",
            self.min, self.conductor, self.parent
        )
    }
}

impl DifferenceSet {
    /// The least element of the difference set.
    pub fn min(&self) -> i64 {
        self.min
    }

    /// Every integer at or above this value belongs to the set.
    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < self.min {
            return false;
        }
        if z >= self.conductor {
            return true;
        }
        self.below[(z - self.min) as usize]
    }
}

impl fmt::Debug for DifferenceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DifferenceSet(min={}, conductor={})", self.min, self.conductor)
    }
}
