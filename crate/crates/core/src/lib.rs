//! Exact arithmetic for numerical semigroups and linear patterns.
//!
//! A numerical semigroup S is an additively closed subset of ℕ containing
//! 0 with finitely many gaps. A linear pattern p = a₁x₁ + ⋯ + aₙxₙ is
//! *admitted* by S when p(s₁,…,sₙ) ∈ S for every non-increasing tuple of
//! members; the classical example is the Arf pattern x₁ + x₂ − x₃. This
//! crate provides:
//!
//! * exact semigroup arithmetic: construction from generators or gap
//!   sets, quotients S/k, semigroup ideals, relative differences E − E,
//!   and the numerical duplication S ⋈ᵈ E = 2·S ∪ (2·E + d);
//! * pattern calculus: derivation p′, admissibility degree, and the
//!   head/center/tail standard decomposition;
//! * admission decisions through an exhaustive bounded oracle plus
//!   structural shortcuts, with verified counterexamples;
//! * the test for equivalence to the Arf pattern (degree 2 with some
//!   prefix sum equal to 2) and its witness constructions;
//! * Frobenius-variety exploration: pattern closures and genus-indexed
//!   enumeration of the tree of admitting semigroups;
//! * eventual-admission analysis of the duplication S ⋈ᵈ E for d ≫ 0,
//!   including per-d tables.
//!
//! ```
//! use nsgp_core::{admits, NumericalSemigroup, Pattern};
//!
//! let s = NumericalSemigroup::from_generators(&[3, 5]).unwrap();
//! assert_eq!(s.frobenius(), 7);
//! assert_eq!(s.gaps(), vec![1, 2, 4, 7]);
//!
//! // <3,5> is not Arf: 6 + 6 − 5 = 7 is a gap.
//! let verdict = admits(&s, &Pattern::arf());
//! assert!(!verdict.admits);
//! assert_eq!(verdict.counterexample.as_deref(), Some(&[6, 6, 5][..]));
//! ```

pub mod admission;
pub mod duplication;
pub mod ideal;
pub mod literal;
pub mod pattern;
pub mod semigroup;
pub mod variety;

pub use admission::{
    admits, admits_oracle, arf_witness_semigroup, eval_pattern, is_arf_equivalent,
    separating_semigroup, AdmissionDecision, EvalError, Method,
};
pub use duplication::{
    ad2_coefficient_conditions, admits_for_d, d_table, eventual_threshold, eventually_admits,
    necessary_conditions_ad2, nonmonic_eventual, p_prime_image_check, CoefficientConditions,
    DTable, DuplicationError, EventualCase, EventualDecision, ImageCheck, NecessaryConditions,
    NonmonicEventual,
};
pub use ideal::{DifferenceSet, IdealError, SemigroupIdeal};
pub use literal::{gaps_literal, parse_ideal, parse_semigroup, LiteralError};
pub use pattern::{
    AdmissibilityDegree, Classification, Pattern, PatternError, StandardDecomposition,
};
pub use semigroup::{NumericalSemigroup, SemigroupError, SemigroupInvariants};
pub use variety::{
    enumerate_by_genus, enumerate_by_genus_capped, p_closure, tree_children, walk_tree,
    VarietyError, VarietyNode, DEFAULT_GENUS_CAP,
};

#[cfg(test)]
mod tests {
    use super::*;

    // every value is immutable after construction and freely shareable
    #[test]
    fn values_are_send_and_sync() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<NumericalSemigroup>();
        assert_send_sync::<SemigroupIdeal>();
        assert_send_sync::<DifferenceSet>();
        assert_send_sync::<Pattern>();
        assert_send_sync::<StandardDecomposition>();
        assert_send_sync::<AdmissionDecision>();
        assert_send_sync::<EventualDecision>();
        assert_send_sync::<DTable>();
        assert_send_sync::<VarietyNode>();
    }

    #[test]
    fn shared_use_across_threads() {
        let s = NumericalSemigroup::from_generators(&[3, 5]).unwrap();
        let p = Pattern::arf();
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..4)
                .map(|_| scope.spawn(|| admits(&s, &p).admits))
                .collect();
            for handle in handles {
                assert!(!handle.join().unwrap());
            }
        });
    }
}
