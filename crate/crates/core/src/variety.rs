//! Frobenius-variety machinery for the family of semigroups admitting a
//! pattern: closures and the genus tree rooted at ℕ.
//!
//! The family of semigroups admitting an admissible pattern is closed
//! under intersection and under adjoining the Frobenius number, so every
//! member is reachable from ℕ by repeatedly removing a minimal generator
//! larger than the Frobenius number. That removal step is the tree edge
//! used here: each child has genus one larger than its parent and
//! restores the parent as child ∪ {F(child)}.

use std::collections::VecDeque;

use thiserror::Error;

use crate::admission::admits;
use crate::pattern::Pattern;
use crate::semigroup::NumericalSemigroup;

/// Ceiling on tree enumeration depth unless explicitly overridden.
pub const DEFAULT_GENUS_CAP: u64 = 25;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VarietyError {
    #[error("pattern is not admissible, its variety is empty")]
    NotAdmissible,
    #[error("pattern is not strongly admissible")]
    NotStronglyAdmissible,
    #[error("semigroup does not admit the pattern")]
    NotInVariety,
    #[error("requested genus {requested} exceeds the enumeration cap {cap}")]
    GenusCapExceeded { requested: u64, cap: u64 },
}

/// A node of the tree of semigroups admitting a fixed pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyNode {
    pub semigroup: NumericalSemigroup,
    pub genus: u64,
    /// Frobenius number of the parent node; `None` at the root ℕ.
    pub parent_frobenius: Option<i64>,
}

/// The smallest semigroup containing S that admits p.
///
/// Alternates between adjoining the missing pattern values and closing
/// under addition; each round fills at least one gap of the eventual
/// closure, so the iteration terminates.
pub fn p_closure(s: &NumericalSemigroup, p: &Pattern) -> Result<NumericalSemigroup, VarietyError> {
    if !p.is_admissible() {
        return Err(VarietyError::NotAdmissible);
    }
    let mut current = s.clone();
    loop {
        let missing = missing_images(&current, p);
        if missing.is_empty() {
            return Ok(current);
        }
        current = adjoin_and_close(&current, &missing);
    }
}

/// All values p(s₁,…,sₙ) outside `s`, over the oracle's bounded box.
/// Empty exactly when `s` admits `p`.
fn missing_images(s: &NumericalSemigroup, p: &Pattern) -> Vec<u64> {
    let mut missing = Vec::new();
    crate::admission::visit_box_violations(s, p, |_, value| {
        debug_assert!(value >= 0, "admissible patterns take nonnegative values");
        missing.push(value as u64);
        false
    });
    missing.sort_unstable();
    missing.dedup();
    missing
}

/// The monoid generated by S ∪ extra (all extra values below c(S)).
fn adjoin_and_close(s: &NumericalSemigroup, extra: &[u64]) -> NumericalSemigroup {
    let c = s.conductor() as usize;
    let mut reach: Vec<bool> = (0..c).map(|x| s.contains(x as i64)).collect();
    for &x in extra {
        debug_assert!((x as usize) < c);
        reach[x as usize] = true;
    }
    for x in 1..c {
        if !reach[x] {
            reach[x] = (1..=x / 2).any(|u| reach[u] && reach[x - u]);
        }
    }
    NumericalSemigroup::from_table(reach)
}

/// The children of S in the tree: the semigroups T ⊂ S in the variety
/// with genus(T) = genus(S) + 1 and T ∪ {F(T)} = S, i.e. S minus one
/// minimal generator beyond F(S), filtered by admission.
pub fn tree_children(
    s: &NumericalSemigroup,
    p: &Pattern,
) -> Result<Vec<NumericalSemigroup>, VarietyError> {
    if !p.is_strongly_admissible() {
        return Err(VarietyError::NotStronglyAdmissible);
    }
    if !admits(s, p).admits {
        return Err(VarietyError::NotInVariety);
    }
    let frobenius = s.frobenius();
    let mut children = Vec::new();
    for &g in s.minimal_generators() {
        if (g as i64) <= frobenius {
            continue;
        }
        let mut gaps = s.gaps();
        gaps.push(g);
        let child = NumericalSemigroup::from_gaps(&gaps)
            .expect("removing a minimal generator keeps the complement closed");
        if admits(&child, p).admits {
            children.push(child);
        }
    }
    Ok(children)
}

/// Breadth-first walk of the variety tree from ℕ down to `genus_max`,
/// invoking the visitor on every node in canonical order (per level,
/// children sorted by the removed generator).
pub fn walk_tree<F: FnMut(&VarietyNode)>(
    p: &Pattern,
    genus_max: u64,
    cap: u64,
    mut visit: F,
) -> Result<(), VarietyError> {
    if !p.is_strongly_admissible() {
        return Err(VarietyError::NotStronglyAdmissible);
    }
    if genus_max > cap {
        return Err(VarietyError::GenusCapExceeded {
            requested: genus_max,
            cap,
        });
    }
    let root = VarietyNode {
        semigroup: NumericalSemigroup::naturals(),
        genus: 0,
        parent_frobenius: None,
    };
    let mut queue = VecDeque::from([root]);
    while let Some(node) = queue.pop_front() {
        visit(&node);
        if node.genus == genus_max {
            continue;
        }
        let children = tree_children(&node.semigroup, p)?;
        let parent_frobenius = Some(node.semigroup.frobenius());
        for child in children {
            queue.push_back(VarietyNode {
                genus: node.genus + 1,
                parent_frobenius,
                semigroup: child,
            });
        }
    }
    Ok(())
}

/// Counts of variety members per genus, indexed 0..=genus_max.
pub fn enumerate_by_genus(p: &Pattern, genus_max: u64) -> Result<Vec<u64>, VarietyError> {
    enumerate_by_genus_capped(p, genus_max, DEFAULT_GENUS_CAP)
}

pub fn enumerate_by_genus_capped(
    p: &Pattern,
    genus_max: u64,
    cap: u64,
) -> Result<Vec<u64>, VarietyError> {
    let mut counts = vec![0u64; genus_max as usize + 1];
    walk_tree(p, genus_max, cap, |node| {
        counts[node.genus as usize] += 1;
    })?;
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admission::admits_oracle;

    fn sgp(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn pat(text: &str) -> Pattern {
        text.parse().unwrap()
    }

    #[test]
    fn closure_is_fixpoint_on_members() {
        let arf = Pattern::arf();
        for s in [NumericalSemigroup::naturals(), sgp(&[2, 3]), sgp(&[3, 4, 5])] {
            assert!(admits(&s, &arf).admits);
            assert_eq!(p_closure(&s, &arf).unwrap(), s);
        }
    }

    #[test]
    fn arf_closure_of_four_five() {
        // iterate x + y − z to the fixpoint {0, 4, →}
        let s = sgp(&[4, 5]);
        let closed = p_closure(&s, &Pattern::arf()).unwrap();
        assert_eq!(closed.gaps(), vec![1, 2, 3]);
        assert!(admits_oracle(&closed, &Pattern::arf()).admits);
    }

    #[test]
    fn closure_under_trivializing_pattern_is_naturals() {
        // only ℕ admits x₁ − x₂
        for s in [sgp(&[2, 3]), sgp(&[3, 5])] {
            let closed = p_closure(&s, &Pattern::subtraction(1)).unwrap();
            assert!(closed.is_naturals());
        }
    }

    #[test]
    fn closure_rejects_inadmissible() {
        assert_eq!(
            p_closure(&sgp(&[2, 3]), &pat("-x1+x2")),
            Err(VarietyError::NotAdmissible)
        );
    }

    #[test]
    fn closure_is_idempotent_and_extensive() {
        let p = pat("x1+x2-2x3");
        for s in [sgp(&[5, 7]), sgp(&[4, 9]), sgp(&[6, 10, 15])] {
            let once = p_closure(&s, &p).unwrap();
            assert!(admits_oracle(&once, &p).admits);
            // extensive: S ⊆ closure
            for x in s.members_below(s.conductor() + 5) {
                assert!(once.contains(x as i64));
            }
            assert_eq!(p_closure(&once, &p).unwrap(), once);
        }
    }

    #[test]
    fn children_of_naturals_under_arf() {
        let kids = tree_children(&NumericalSemigroup::naturals(), &Pattern::arf()).unwrap();
        assert_eq!(kids.len(), 1);
        assert_eq!(kids[0].gaps(), vec![1]);
    }

    #[test]
    fn children_restore_parent() {
        let s = sgp(&[2, 3]);
        for child in tree_children(&s, &Pattern::arf()).unwrap() {
            assert_eq!(child.genus(), s.genus() + 1);
            let f = child.frobenius() as u64;
            let mut gaps = child.gaps();
            gaps.retain(|&x| x != f);
            assert_eq!(NumericalSemigroup::from_gaps(&gaps).unwrap(), s);
        }
    }

    #[test]
    fn no_generator_beyond_frobenius_means_no_children() {
        // <3,5>: generators 3 and 5 both below F = 7
        let s = sgp(&[3, 5]);
        let kids = tree_children(&s, &Pattern::zero()).unwrap();
        assert!(kids.is_empty());
    }

    #[test]
    fn variety_errors() {
        assert_eq!(
            tree_children(&sgp(&[3, 5]), &Pattern::arf()),
            Err(VarietyError::NotInVariety)
        );
        assert_eq!(
            enumerate_by_genus(&Pattern::subtraction(1), 3),
            Err(VarietyError::NotStronglyAdmissible)
        );
        assert_eq!(
            enumerate_by_genus_capped(&Pattern::arf(), 30, 25),
            Err(VarietyError::GenusCapExceeded {
                requested: 30,
                cap: 25
            })
        );
    }

    #[test]
    fn genus_zero_count_is_one() {
        assert_eq!(enumerate_by_genus(&Pattern::arf(), 0).unwrap(), vec![1]);
    }

    #[test]
    fn tree_edges_increase_genus_by_one() {
        walk_tree(&Pattern::arf(), 5, DEFAULT_GENUS_CAP, |node| {
            assert!(admits(&node.semigroup, &Pattern::arf()).admits);
            assert_eq!(node.semigroup.genus(), node.genus);
            if node.genus == 0 {
                assert!(node.parent_frobenius.is_none());
            } else {
                assert!(node.parent_frobenius.is_some());
            }
        })
        .unwrap();
    }
}
