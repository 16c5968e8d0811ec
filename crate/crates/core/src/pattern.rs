//! Linear patterns: homogeneous linear forms with nonzero integer
//! coefficients, evaluated on non-increasing tuples of semigroup members.
//!
//! The key invariants of a pattern p = a₁x₁ + ⋯ + aₙxₙ are its prefix
//! sums bᵢ = a₁ + ⋯ + aᵢ: p is admissible (admitted by some numerical
//! semigroup) exactly when all bᵢ ≥ 0, and strongly admissible when all
//! bᵢ ≥ 1. The derivation p′ strips one unit off the front; iterating it
//! measures how far p is from inadmissibility (the admissibility degree)
//! and yields the unique head/center/tail decomposition.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("coefficient of term {index} is zero")]
    ZeroCoefficient { index: usize },
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("variable indices must be consecutive starting at x1: expected x{expected}, found x{found}")]
    NonContiguousIndices { expected: usize, found: usize },
    #[error("pattern is not admissible")]
    NotAdmissible,
}

/// A linear pattern; the empty coefficient list is the zero pattern.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    coeffs: Vec<i64>,
}

/// The number of derivations after which a pattern stops being
/// admissible; ∞ when every iterated derivation stays admissible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AdmissibilityDegree {
    Finite(u64),
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub admissible: bool,
    pub strongly_admissible: bool,
}

/// The unique decomposition p = H_p + C_p + T_p of an admissible pattern:
/// a head of positive coefficients summing to ad(p) − 1, a center with
/// coefficient sum zero and nonnegative prefix sums, and a strongly
/// admissible tail.
///
/// `h` and `t` are the last head and last center variable indices in the
/// original 1-based numbering (0 when the block is empty). The head and
/// center share variable `h` exactly when the k-th derivation stops in
/// the middle of a coefficient; [`StandardDecomposition::reassemble`]
/// merges that boundary back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardDecomposition {
    head: Pattern,
    center: Pattern,
    tail: Pattern,
    h: usize,
    t: usize,
}

impl AdmissibilityDegree {
    pub fn is_infinite(&self) -> bool {
        matches!(self, AdmissibilityDegree::Infinite)
    }

    pub fn at_least(&self, k: u64) -> bool {
        match self {
            AdmissibilityDegree::Finite(d) => *d >= k,
            AdmissibilityDegree::Infinite => true,
        }
    }
}

impl PartialOrd for AdmissibilityDegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AdmissibilityDegree {
    fn cmp(&self, other: &Self) -> Ordering {
        use AdmissibilityDegree::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => Ordering::Less,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Infinite, Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for AdmissibilityDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdmissibilityDegree::Finite(d) => write!(f, "{d}"),
            AdmissibilityDegree::Infinite => write!(f, "∞"),
        }
    }
}

// the zero-pattern test is `is_zero`
#[allow(clippy::len_without_is_empty)]
impl Pattern {
    /// A pattern from its coefficient list; every entry must be nonzero.
    pub fn new(coeffs: Vec<i64>) -> Result<Self, PatternError> {
        if let Some(i) = coeffs.iter().position(|&a| a == 0) {
            return Err(PatternError::ZeroCoefficient { index: i + 1 });
        }
        Ok(Pattern { coeffs })
    }

    fn new_unchecked(coeffs: Vec<i64>) -> Self {
        debug_assert!(coeffs.iter().all(|&a| a != 0));
        Pattern { coeffs }
    }

    /// The zero pattern (empty coefficient list).
    pub fn zero() -> Self {
        Pattern { coeffs: Vec::new() }
    }

    /// The Arf pattern x₁ + x₂ − x₃.
    pub fn arf() -> Self {
        Pattern::new_unchecked(vec![1, 1, -1])
    }

    /// The subtraction pattern x₁ + ⋯ + x_k − x_{k+1}; its admissibility
    /// degree is exactly k. Degree 1 is the trivializing pattern and
    /// degree 2 is the Arf pattern.
    pub fn subtraction(k: u64) -> Self {
        assert!(k >= 1, "subtraction pattern needs degree at least 1");
        let mut coeffs = vec![1i64; k as usize];
        coeffs.push(-1);
        Pattern::new_unchecked(coeffs)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    /// Number of variables.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Whether the leading coefficient is 1.
    pub fn is_monic(&self) -> bool {
        self.coeffs.first() == Some(&1)
    }

    /// The prefix sums bᵢ = a₁ + ⋯ + aᵢ.
    pub fn prefix_sums(&self) -> Vec<i64> {
        self.coeffs
            .iter()
            .scan(0i64, |acc, &a| {
                *acc += a;
                Some(*acc)
            })
            .collect()
    }

    /// The derived pattern p′: decrement a₁ when a₁ ≠ 1, drop the leading
    /// variable when a₁ = 1. The zero pattern is a fixpoint.
    pub fn derive(&self) -> Pattern {
        match self.coeffs.first() {
            None => Pattern::zero(),
            Some(&1) => Pattern::new_unchecked(self.coeffs[1..].to_vec()),
            Some(&a) => {
                let mut coeffs = self.coeffs.clone();
                coeffs[0] = a - 1;
                Pattern::new_unchecked(coeffs)
            }
        }
    }

    /// All prefix sums nonnegative, i.e. some numerical semigroup admits p.
    pub fn is_admissible(&self) -> bool {
        self.prefix_sums().iter().all(|&b| b >= 0)
    }

    /// All prefix sums at least 1 (equivalently ad(p) ≥ 2). The zero
    /// pattern counts as strongly admissible via the ad = ∞ convention.
    pub fn is_strongly_admissible(&self) -> bool {
        self.prefix_sums().iter().all(|&b| b >= 1)
    }

    pub fn classify(&self) -> Classification {
        Classification {
            admissible: self.is_admissible(),
            strongly_admissible: self.is_strongly_admissible(),
        }
    }

    /// The least k with p⁽ᵏ⁾ inadmissible, or ∞ if derivation reaches the
    /// zero pattern while staying admissible.
    pub fn admissibility_degree(&self) -> AdmissibilityDegree {
        let mut cur = self.clone();
        let mut k = 0u64;
        loop {
            if !cur.is_admissible() {
                return AdmissibilityDegree::Finite(k);
            }
            if cur.is_zero() {
                return AdmissibilityDegree::Infinite;
            }
            cur = cur.derive();
            k += 1;
        }
    }

    /// The standard head/center/tail decomposition of an admissible pattern.
    pub fn standard_decomposition(&self) -> Result<StandardDecomposition, PatternError> {
        if !self.is_admissible() {
            return Err(PatternError::NotAdmissible);
        }
        let n = self.len();
        let ad = match self.admissibility_degree() {
            AdmissibilityDegree::Infinite => {
                return Ok(StandardDecomposition {
                    head: self.clone(),
                    center: Pattern::zero(),
                    tail: Pattern::zero(),
                    h: n,
                    t: n,
                });
            }
            AdmissibilityDegree::Finite(ad) => ad,
        };
        debug_assert!(ad >= 1);
        // ad(p) − 1 derivations strip units off the leading coefficients;
        // record which coefficients they consume.
        let mut remaining = (ad - 1) as i64;
        let mut head = Vec::new();
        let mut rest = self.coeffs.clone();
        while remaining > 0 {
            let a = rest[0];
            debug_assert!(a > 0, "intermediate derivations stay admissible");
            if remaining >= a {
                head.push(a);
                remaining -= a;
                rest.remove(0);
            } else {
                head.push(remaining);
                rest[0] = a - remaining;
                remaining = 0;
            }
        }
        let h = head.len();
        // first variable of p^(k) in the original numbering
        let center_start = n - rest.len() + 1;
        // t = largest original index where the prefix sums of p^(k) vanish
        let mut sum = 0i64;
        let mut last_zero = None;
        for (j, &a) in rest.iter().enumerate() {
            sum += a;
            debug_assert!(sum >= 0, "p^(k) is admissible");
            if sum == 0 {
                last_zero = Some(j);
            }
        }
        let j = last_zero.expect("a pattern of admissibility degree 1 has a zero prefix sum");
        let t = center_start + j;
        let center = Pattern::new_unchecked(rest[..=j].to_vec());
        let tail = Pattern::new_unchecked(rest[j + 1..].to_vec());
        Ok(StandardDecomposition {
            head: Pattern::new_unchecked(head),
            center,
            tail,
            h,
            t,
        })
    }
}

impl StandardDecomposition {
    pub fn head(&self) -> &Pattern {
        &self.head
    }

    pub fn center(&self) -> &Pattern {
        &self.center
    }

    pub fn tail(&self) -> &Pattern {
        &self.tail
    }

    /// Last head variable index (1-based), 0 when the head is empty.
    pub fn h(&self) -> usize {
        self.h
    }

    /// Last center variable index (1-based), equal to `h` when the center
    /// is empty.
    pub fn t(&self) -> usize {
        self.t
    }

    /// First center variable index, when the center is nonempty.
    pub fn center_start(&self) -> Option<usize> {
        (!self.center.is_zero()).then(|| self.t + 1 - self.center.len())
    }

    /// Reconstructs the original pattern, adding the head and center
    /// coefficients of the shared boundary variable when there is one.
    pub fn reassemble(&self) -> Pattern {
        let mut coeffs = self.head.coefficients().to_vec();
        if let Some(cs) = self.center_start() {
            let center = self.center.coefficients();
            if cs == self.h && self.h >= 1 {
                *coeffs.last_mut().unwrap() += center[0];
                coeffs.extend_from_slice(&center[1..]);
            } else {
                debug_assert_eq!(cs, self.h + 1);
                coeffs.extend_from_slice(center);
            }
        }
        coeffs.extend_from_slice(self.tail.coefficients());
        Pattern::new_unchecked(coeffs)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a < 0 {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let mag = a.unsigned_abs();
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "x{}", i + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({self})")
    }
}

impl FromStr for Pattern {
    type Err = PatternError;

    /// Grammar: `term (('+'|'-') term)*` with term `[coeff] 'x' index`,
    /// or the single token `0`. Indices must run 1, 2, 3, … in order.
    fn from_str(text: &str) -> Result<Self, PatternError> {
        let bytes = text.as_bytes();
        let mut pos = 0usize;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let read_number = |pos: &mut usize| -> Result<Option<i64>, PatternError> {
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            if *pos == start {
                return Ok(None);
            }
            text[start..*pos]
                .parse()
                .map(Some)
                .map_err(|_| PatternError::Parse {
                    position: start,
                    message: format!("number `{}` is too large", &text[start..*pos]),
                })
        };

        skip_ws(&mut pos);
        if pos < bytes.len() && bytes[pos] == b'0' {
            let after = pos + 1;
            let mut rest = after;
            skip_ws(&mut rest);
            if rest == bytes.len() {
                return Ok(Pattern::zero());
            }
        }

        let mut coeffs = Vec::new();
        let mut first = true;
        loop {
            skip_ws(&mut pos);
            if pos == bytes.len() {
                if first {
                    return Err(PatternError::Parse {
                        position: pos,
                        message: "empty pattern".into(),
                    });
                }
                break;
            }
            let sign = match bytes[pos] {
                b'+' => {
                    pos += 1;
                    1i64
                }
                b'-' => {
                    pos += 1;
                    -1i64
                }
                _ if first => 1i64,
                other => {
                    return Err(PatternError::Parse {
                        position: pos,
                        message: format!("expected '+' or '-', found '{}'", other as char),
                    });
                }
            };
            skip_ws(&mut pos);
            let coeff = read_number(&mut pos)?.unwrap_or(1);
            skip_ws(&mut pos);
            if pos == bytes.len() || bytes[pos] != b'x' {
                return Err(PatternError::Parse {
                    position: pos,
                    message: "expected 'x'".into(),
                });
            }
            pos += 1;
            let index = read_number(&mut pos)?.ok_or(PatternError::Parse {
                position: pos,
                message: "expected a variable index after 'x'".into(),
            })? as usize;
            let expected = coeffs.len() + 1;
            if index != expected {
                return Err(PatternError::NonContiguousIndices {
                    expected,
                    found: index,
                });
            }
            if coeff == 0 {
                return Err(PatternError::ZeroCoefficient { index });
            }
            coeffs.push(sign * coeff);
            first = false;
        }
        Ok(Pattern::new_unchecked(coeffs))
    }
}
