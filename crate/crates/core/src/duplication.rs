//! Admission of patterns by the numerical duplication S ⋈ᵈ E, per fixed d
//! and eventually in d.
//!
//! For a monic pattern the eventual behaviour splits on the admissibility
//! degree: degree 1 forces the duplication to be ℕ, which no tail of
//! large d achieves; degree 2 reduces to parity conditions on the prefix
//! sums against E − E plus the tail pattern; degree ≥ 3 is equivalent to
//! p′(S) ⊆ E − E. Non-monic patterns of degree ≥ 3 are always eventually
//! admitted, while degree 2 only has necessary conditions.

use std::fmt;

use thiserror::Error;

use crate::admission::{admits, admits_oracle, AdmissionDecision};
use crate::ideal::{IdealError, SemigroupIdeal};
use crate::pattern::{AdmissibilityDegree, Pattern};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DuplicationError {
    #[error("pattern must have admissibility degree {expected}, found {found}")]
    WrongDegree {
        expected: u64,
        found: AdmissibilityDegree,
    },
    #[error("pattern must be monic")]
    NotMonic,
    #[error("pattern must have leading coefficient at least 2")]
    IsMonic,
    #[error("pattern is not admissible")]
    NotAdmissible,
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Which case of the eventual-admission analysis decided the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventualCase {
    /// Monic degree 1: only ℕ admits p, and only d = 1 with S = E = ℕ
    /// makes the duplication ℕ, never all large d.
    Ad1RequiresN,
    /// Monic degree 2: prefix-sum conditions against E − E plus the tail.
    Ad2Monic,
    /// Monic degree ≥ 3: p′(S) ⊆ E − E.
    Ad3Monic,
    /// Non-monic degree ≥ 3: always eventually admitted.
    Ad3Nonmonic,
    /// A necessary condition failed (including "S itself does not admit p").
    RefutedNecessary,
}

/// Verdict on "S ⋈ᵈ E admits p for all sufficiently large odd d ∈ S".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventualDecision {
    pub eventually_admits: bool,
    pub case: EventualCase,
    /// Human-readable description of the condition that failed.
    pub failing_condition: Option<String>,
    /// Conservative bound: admission is guaranteed for every odd d ∈ S at
    /// or above this value whenever `eventually_admits` holds.
    pub threshold_d: Option<u64>,
}

/// Result of the degree-2 prefix-sum conditions (the sufficient-and-
/// necessary set for monic patterns). `failing_index` is the 1-based
/// prefix-sum index that broke.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientConditions {
    pub holds: bool,
    pub failing_index: Option<usize>,
}

/// Result of checking p′(S) ⊆ E − E, with a witness tuple on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageCheck {
    pub holds: bool,
    pub witness: Option<Vec<u64>>,
}

/// Result of the necessary conditions for degree-2 patterns (monic or
/// not): ⌊bᵢ/2⌋ ∈ E − E for i ≤ t, and even bᵢ/2 ≥ c(E) − min(E) for
/// r ≤ i ≤ t, where r and t delimit the prefix sums equal to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecessaryConditions {
    pub passes: bool,
    pub violated: Option<String>,
}

/// Verdict of [`nonmonic_eventual`]: degree ≥ 3 is decided outright,
/// degree 2 only has necessary conditions (failing them refutes), and
/// degree 1 is outside the proved cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonmonicEventual {
    Decided(EventualDecision),
    NecessaryOnly(NecessaryConditions),
    Unresolved,
}

/// Whether S ⋈ᵈ E admits p, by the exhaustive oracle on the duplication.
pub fn admits_for_d(
    e: &SemigroupIdeal,
    p: &Pattern,
    d: u64,
) -> Result<AdmissionDecision, DuplicationError> {
    let dup = e.duplication(d)?;
    Ok(admits_oracle(&dup, p))
}

/// A d ↦ admits table; the inputs are echoed for rendering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DTable {
    pub semigroup: NumericalSemigroup,
    pub ideal: SemigroupIdeal,
    pub pattern: Pattern,
    pub rows: Vec<(u64, bool)>,
}

pub fn d_table(
    e: &SemigroupIdeal,
    p: &Pattern,
    d_values: &[u64],
) -> Result<DTable, DuplicationError> {
    let rows = d_values
        .iter()
        .map(|&d| Ok((d, admits_for_d(e, p, d)?.admits)))
        .collect::<Result<Vec<_>, DuplicationError>>()?;
    Ok(DTable {
        semigroup: e.parent().clone(),
        ideal: e.clone(),
        pattern: p.clone(),
        rows,
    })
}

impl DTable {
    /// Machine-readable rows, one `d=<n> admits=<bool>` per line.
    pub fn machine_lines(&self) -> String {
        let mut out = String::new();
        for &(d, admits) in &self.rows {
            out.push_str(&format!("d={d} admits={admits}\n"));
        }
        out
    }
}

impl fmt::Display for DTable {
    /// Aligned plain-text table with a check mark for admitted rows and a
    /// blank cell otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .map(|(d, _)| d.to_string().len())
            .max()
            .unwrap_or(1)
            .max(1);
        writeln!(f, "{:>width$} | admits p", "d")?;
        writeln!(f, "{}-+----------", "-".repeat(width))?;
        for &(d, admits) in &self.rows {
            let mark = if admits { " ✓" } else { "" };
            writeln!(f, "{d:>width$} |{mark}")?;
        }
        Ok(())
    }
}

fn require_degree_2(p: &Pattern) -> Result<(), DuplicationError> {
    let found = p.admissibility_degree();
    if found != AdmissibilityDegree::Finite(2) {
        return Err(DuplicationError::WrongDegree { expected: 2, found });
    }
    Ok(())
}

/// Indices with prefix sum 1; nonempty for every degree-2 pattern.
fn unit_prefix_indices(b: &[i64]) -> Vec<usize> {
    b.iter()
        .enumerate()
        .filter(|(_, &x)| x == 1)
        .map(|(i, _)| i + 1)
        .collect()
}

/// The degree-2 monic conditions: for every i up to the last unit prefix
/// sum, odd bᵢ needs (bᵢ−1)/2 ∈ E − E and even bᵢ needs
/// bᵢ/2 ≥ c(E) − min(E).
pub fn ad2_coefficient_conditions(
    e: &SemigroupIdeal,
    p: &Pattern,
) -> Result<CoefficientConditions, DuplicationError> {
    require_degree_2(p)?;
    if !p.is_monic() {
        return Err(DuplicationError::NotMonic);
    }
    let b = p.prefix_sums();
    let units = unit_prefix_indices(&b);
    let t = *units.last().expect("degree 2 patterns have a unit prefix sum");
    let diff = e.difference(e);
    let gap_size = e.conductor() as i64 - e.min() as i64;
    for i in 1..=t {
        let bi = b[i - 1];
        let ok = if bi % 2 == 1 {
            diff.contains((bi - 1) / 2)
        } else {
            bi / 2 >= gap_size
        };
        if !ok {
            return Ok(CoefficientConditions {
                holds: false,
                failing_index: Some(i),
            });
        }
    }
    Ok(CoefficientConditions {
        holds: true,
        failing_index: None,
    })
}

/// Decides p′(S) ⊆ E − E for monic p with ad(p) ≥ 3.
///
/// p′ is strongly admissible, so p′(s) ≥ s₁; only tuples whose entries
/// all lie below the conductor of E − E can produce a value outside it.
pub fn p_prime_image_check(
    e: &SemigroupIdeal,
    p: &Pattern,
) -> Result<ImageCheck, DuplicationError> {
    if !p.is_monic() {
        return Err(DuplicationError::NotMonic);
    }
    let found = p.admissibility_degree();
    if !found.at_least(3) {
        return Err(DuplicationError::WrongDegree { expected: 3, found });
    }
    let derived = p.derive();
    debug_assert!(derived.is_strongly_admissible());
    let diff = e.difference(e);
    let bound = diff.conductor().max(0) as u64;
    let members: Vec<u64> = e.parent().members_below(bound).collect();
    let n = derived.len();
    let mut tuple = vec![0u64; n];
    let witness = image_witness(&derived, &members, &diff, 0, &mut tuple);
    Ok(ImageCheck {
        holds: witness.is_none(),
        witness,
    })
}

fn image_witness(
    derived: &Pattern,
    members: &[u64],
    diff: &crate::ideal::DifferenceSet,
    level: usize,
    tuple: &mut Vec<u64>,
) -> Option<Vec<u64>> {
    if level == derived.len() {
        let value = crate::admission::eval_pattern(derived, tuple).expect("tuple is sorted");
        return (!diff.contains(value)).then(|| tuple.clone());
    }
    let hi = if level == 0 {
        u64::MAX
    } else {
        tuple[level - 1]
    };
    for &x in members.iter().rev() {
        if x > hi {
            continue;
        }
        tuple[level] = x;
        if let Some(w) = image_witness(derived, members, diff, level + 1, tuple) {
            return Some(w);
        }
    }
    None
}

/// Smallest odd member of S at or above all three d-bounds appearing in
/// the eventual-admission arguments: 2c(S) − 2min(E) + 1, 2c(E) − 4min(E)
/// and 2c(E) − 2min(E).
pub fn eventual_threshold(e: &SemigroupIdeal) -> u64 {
    let cs = e.parent().conductor() as i64;
    let ce = e.conductor() as i64;
    let me = e.min() as i64;
    let bound = (2 * cs - 2 * me + 1)
        .max(2 * ce - 4 * me)
        .max(2 * ce - 2 * me)
        .max(1);
    smallest_odd_member_from(e.parent(), bound as u64)
}

fn smallest_odd_member_from(s: &NumericalSemigroup, from: u64) -> u64 {
    let mut x = from.max(1);
    if x % 2 == 0 {
        x += 1;
    }
    while !s.contains(x as i64) {
        x += 2;
    }
    x
}

/// Eventual admission of a monic admissible pattern, by case split on the
/// admissibility degree.
pub fn eventually_admits(
    e: &SemigroupIdeal,
    p: &Pattern,
) -> Result<EventualDecision, DuplicationError> {
    if !p.is_monic() {
        return Err(DuplicationError::NotMonic);
    }
    if !p.is_admissible() {
        return Err(DuplicationError::NotAdmissible);
    }
    let s = e.parent();
    // S ⋈ᵈ E admits p only if S does (the duplication halves onto S).
    if !admits(s, p).admits {
        return Ok(EventualDecision {
            eventually_admits: false,
            case: EventualCase::RefutedNecessary,
            failing_condition: Some("the base semigroup does not admit the pattern".into()),
            threshold_d: None,
        });
    }
    match p.admissibility_degree() {
        AdmissibilityDegree::Finite(1) => Ok(EventualDecision {
            eventually_admits: false,
            case: EventualCase::Ad1RequiresN,
            failing_condition: Some(
                "a monic pattern of admissibility degree 1 is admitted only by ℕ, \
                 and the duplication is ℕ only for d = 1 with S = E = ℕ"
                    .into(),
            ),
            threshold_d: None,
        }),
        AdmissibilityDegree::Finite(2) => {
            let conditions = ad2_coefficient_conditions(e, p)?;
            if let Some(i) = conditions.failing_index {
                let b = p.prefix_sums()[i - 1];
                return Ok(EventualDecision {
                    eventually_admits: false,
                    case: EventualCase::Ad2Monic,
                    failing_condition: Some(if b % 2 == 1 {
                        format!("b_{i} = {b} is odd but ({b}-1)/2 is not in E-E")
                    } else {
                        format!("b_{i} = {b} is even but {b}/2 < c(E)-min(E)")
                    }),
                    threshold_d: None,
                });
            }
            let dec = p.standard_decomposition().expect("admissible");
            let mut tail_plus = vec![1i64];
            tail_plus.extend_from_slice(dec.tail().coefficients());
            let tail_pattern = Pattern::new(tail_plus).expect("nonzero coefficients");
            let tail_verdict = eventually_admits(e, &tail_pattern)?;
            if !tail_verdict.eventually_admits {
                return Ok(EventualDecision {
                    eventually_admits: false,
                    case: EventualCase::Ad2Monic,
                    failing_condition: tail_verdict
                        .failing_condition
                        .map(|msg| format!("tail pattern {tail_pattern}: {msg}")),
                    threshold_d: None,
                });
            }
            Ok(EventualDecision {
                eventually_admits: true,
                case: EventualCase::Ad2Monic,
                failing_condition: None,
                threshold_d: Some(eventual_threshold(e)),
            })
        }
        _ => {
            let check = p_prime_image_check(e, p)?;
            if check.holds {
                Ok(EventualDecision {
                    eventually_admits: true,
                    case: EventualCase::Ad3Monic,
                    failing_condition: None,
                    threshold_d: Some(eventual_threshold(e)),
                })
            } else {
                let witness = check.witness.unwrap();
                Ok(EventualDecision {
                    eventually_admits: false,
                    case: EventualCase::Ad3Monic,
                    failing_condition: Some(format!(
                        "p'{witness:?} escapes E-E, so p'(S) ⊄ E-E"
                    )),
                    threshold_d: None,
                })
            }
        }
    }
}

/// Eventual admission for non-monic admissible patterns (a₁ ≥ 2):
/// degree ≥ 3 always holds, degree 2 is refuted or left undecided by the
/// necessary conditions, degree 1 is unresolved.
pub fn nonmonic_eventual(
    e: &SemigroupIdeal,
    p: &Pattern,
) -> Result<NonmonicEventual, DuplicationError> {
    if !p.is_admissible() {
        return Err(DuplicationError::NotAdmissible);
    }
    if p.coefficients().first().copied().unwrap_or(0) < 2 {
        return Err(DuplicationError::IsMonic);
    }
    let s = e.parent();
    if !admits(s, p).admits {
        return Ok(NonmonicEventual::Decided(EventualDecision {
            eventually_admits: false,
            case: EventualCase::RefutedNecessary,
            failing_condition: Some("the base semigroup does not admit the pattern".into()),
            threshold_d: None,
        }));
    }
    let ad = p.admissibility_degree();
    if ad.at_least(3) {
        let ce = e.conductor() as i64;
        let me = e.min() as i64;
        let bound = (2 * ce - 4 * me).max(1);
        return Ok(NonmonicEventual::Decided(EventualDecision {
            eventually_admits: true,
            case: EventualCase::Ad3Nonmonic,
            failing_condition: None,
            threshold_d: Some(smallest_odd_member_from(s, bound as u64)),
        }));
    }
    if ad == AdmissibilityDegree::Finite(2) {
        let conditions = necessary_conditions_ad2(e, p)?;
        if conditions.passes {
            return Ok(NonmonicEventual::NecessaryOnly(conditions));
        }
        return Ok(NonmonicEventual::Decided(EventualDecision {
            eventually_admits: false,
            case: EventualCase::RefutedNecessary,
            failing_condition: conditions.violated,
            threshold_d: None,
        }));
    }
    Ok(NonmonicEventual::Unresolved)
}

/// The necessary conditions for eventual admission of a degree-2 pattern,
/// monic or not.
pub fn necessary_conditions_ad2(
    e: &SemigroupIdeal,
    p: &Pattern,
) -> Result<NecessaryConditions, DuplicationError> {
    require_degree_2(p)?;
    let b = p.prefix_sums();
    let units = unit_prefix_indices(&b);
    let r = *units.first().expect("degree 2 patterns have a unit prefix sum");
    let t = *units.last().unwrap();
    let diff = e.difference(e);
    let gap_size = e.conductor() as i64 - e.min() as i64;
    for i in 1..=t {
        let bi = b[i - 1];
        if !diff.contains(bi / 2) {
            return Ok(NecessaryConditions {
                passes: false,
                violated: Some(format!("floor(b_{i}/2) = {} is not in E-E", bi / 2)),
            });
        }
        if i >= r && bi % 2 == 0 && bi / 2 < gap_size {
            return Ok(NecessaryConditions {
                passes: false,
                violated: Some(format!(
                    "b_{i} = {bi} is even but b_{i}/2 = {} < c(E)-min(E) = {gap_size}",
                    bi / 2
                )),
            });
        }
    }
    Ok(NecessaryConditions {
        passes: true,
        violated: None,
    })
}
