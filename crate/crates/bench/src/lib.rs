//! Fixtures shared by the benchmarks.

use nsgp_core::{NumericalSemigroup, Pattern, SemigroupIdeal};

/// The two duplication instances used throughout the benchmark suite.
pub fn duplication_fixtures() -> Vec<(SemigroupIdeal, Pattern)> {
    let s1 = NumericalSemigroup::from_generators(&[3, 19, 20]).unwrap();
    let e1 = SemigroupIdeal::principal(&s1, 3).unwrap();
    let s2 = NumericalSemigroup::from_generators(&[5, 8, 19, 22]).unwrap();
    let e2 = SemigroupIdeal::principal(&s2, 5).unwrap();
    vec![
        (e1, "3x1-x2".parse().unwrap()),
        (e2, "4x1-x2-x3".parse().unwrap()),
    ]
}

pub fn medium_semigroup() -> NumericalSemigroup {
    NumericalSemigroup::from_generators(&[7, 9, 11, 13]).unwrap()
}
