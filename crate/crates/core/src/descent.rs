//! Predecessors and descent to the root.
//!
//! A solution `(x, y, 2n + 1)` other than the root gives a primitive point
//! `(x, y, 3ⁿ)` on `7x² + 59y² = 3z²`. Of its four sign variants at least
//! one has an incidence `p/q` whose `δ = gcd(A(p, q), B(p, q))` is prime to
//! both 7 and 59. That `δ` is then `1` or `3⁵`, and `(q, |p|)` is the parent:
//!
//! | `δ`  | parent exponent | child is the parent's |
//! |------|-----------------|-----------------------|
//! | 1    | `n − 2`         | second successor      |
//! | 3⁵   | `n + 3`         | first successor       |
//!
//! Each step strictly lowers the exponent, so the walk ends at `(1, 2, 5)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::arith::pow3;
use crate::error::{Error, Result};
use crate::forms::{
    format_rational, incidence, parse_rational, reconstruct_from_incidence, Rational,
};
use crate::solution::{PPSolution, SolutionRecord};
use crate::successor::{recognize_successor, Recognition, SuccessorKind, GCD_AT_NORMALIZED};

/// Sign variants in the order tried: `(x, y)`, `(−x, y)`, `(x, −y)`, `(−x, −y)`.
pub const SIGN_VARIANTS: [(i8, i8); 4] = [(1, 1), (-1, 1), (1, -1), (-1, -1)];

/// Data for one sign variant of a descending solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariantData {
    /// 1-based position in [`SIGN_VARIANTS`].
    pub index: u8,
    pub theta: Rational,
    pub delta: BigInt,
}

impl VariantData {
    /// Neither 7 nor 59 divides `δ`.
    pub fn is_admissible(&self) -> bool {
        !self.delta.is_multiple_of(&BigInt::from(7))
            && !self.delta.is_multiple_of(&BigInt::from(59))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentStep {
    pub child: PPSolution,
    pub parent: PPSolution,
    pub kind: SuccessorKind,
    /// 1-based index of the chosen sign variant.
    pub variant: u8,
    pub theta: Rational,
    pub delta: BigInt,
}

/// Steps from a start solution down to `(1, 2, 5)`; empty for the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentPath {
    pub start: PPSolution,
    pub steps: Vec<DescentStep>,
}

impl DescentPath {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Successor kinds from the root down to the start.
    pub fn construction_path(&self) -> Vec<SuccessorKind> {
        self.steps.iter().rev().map(|s| s.kind).collect()
    }

    pub fn to_certificate(&self) -> Certificate {
        Certificate {
            start: SolutionRecord::from(&self.start),
            steps: self.steps.iter().map(StepRecord::from).collect(),
        }
    }
}

/// `z = 3ⁿ` for an odd exponent `m = 2n + 1`.
fn ellipse_height(s: &PPSolution) -> Result<(u32, BigInt)> {
    if s.m().is_multiple_of(2) {
        return Err(Error::Invariant(format!("{s} has an even exponent")));
    }
    let n = (s.m() - 1) / 2;
    Ok((n, pow3(n)))
}

/// Incidence and `δ` of all four sign variants of `s` on the ellipse.
pub fn sign_variants(s: &PPSolution) -> Result<Vec<VariantData>> {
    let (_, z) = ellipse_height(s)?;
    SIGN_VARIANTS
        .iter()
        .zip(1u8..)
        .map(|(&(sx, sy), index)| {
            let x = s.x() * BigInt::from(sx);
            let y = s.y() * BigInt::from(sy);
            let theta = incidence(&x, &y, &z)?;
            let r = reconstruct_from_incidence(&theta)?;
            if (&r.x, &r.y, &r.z) != (&x, &y, &z) {
                return Err(Error::Invariant(format!(
                    "incidence {} of ({x}, {y}, {z}) reconstructs ({}, {}, {})",
                    format_rational(&theta),
                    r.x,
                    r.y,
                    r.z
                )));
            }
            Ok(VariantData {
                index,
                theta,
                delta: r.delta,
            })
        })
        .collect()
}

/// The solution `s` is a successor of, with the evidence.
pub fn predecessor(s: &PPSolution) -> Result<DescentStep> {
    if s.is_root() {
        return Err(Error::RootHasNoPredecessor);
    }
    let (n, _) = ellipse_height(s)?;
    if n < 7 {
        return Err(Error::Invariant(format!(
            "{s} is below the first non-root exponent"
        )));
    }
    let variants = sign_variants(s)?;
    let chosen = variants
        .into_iter()
        .find(VariantData::is_admissible)
        .ok_or_else(|| Error::Invariant(format!("no admissible sign variant for {s}")))?;

    let delta = chosen.delta.clone();
    if delta.is_even() {
        return Err(Error::Invariant(format!(
            "even delta {delta} for {s} would give 7q² + 59p² = 2·3^k"
        )));
    }
    let (kind, parent_m) = if delta.is_one() {
        (SuccessorKind::Second, n - 2)
    } else if delta == BigInt::from(GCD_AT_NORMALIZED) {
        (SuccessorKind::First, n + 3)
    } else {
        return Err(Error::Invariant(format!(
            "delta {delta} for {s} is neither 1 nor 3⁵"
        )));
    };

    let q = chosen.theta.denom().clone();
    let p = chosen.theta.numer().abs();
    let parent = PPSolution::new(q, p, parent_m)?;
    if parent.m() >= s.m() {
        return Err(Error::Invariant(format!(
            "parent {parent} is not smaller than {s}"
        )));
    }
    let recognized = recognize_successor(s, &parent);
    if recognized != Recognition::from(kind) {
        return Err(Error::Invariant(format!(
            "{s} recognized as {recognized:?} of {parent}, expected {kind}"
        )));
    }
    Ok(DescentStep {
        child: s.clone(),
        parent,
        kind,
        variant: chosen.index,
        theta: chosen.theta,
        delta,
    })
}

/// Walk predecessors until `(1, 2, 5)`.
pub fn descend_to_root(s: &PPSolution) -> Result<DescentPath> {
    let mut steps: Vec<DescentStep> = Vec::new();
    let mut current = s.clone();
    while !current.is_root() {
        let step = predecessor(&current)?;
        current = step.parent.clone();
        steps.push(step);
    }
    Ok(DescentPath {
        start: s.clone(),
        steps,
    })
}

/// One step of a certificate. `x`, `y`, `m` describe the child; its parent
/// is the next step's child, or the root after the last step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub x: String,
    pub y: String,
    pub m: u32,
    pub kind: SuccessorKind,
    pub variant: u8,
    pub theta: String,
    pub delta: String,
}

impl From<&DescentStep> for StepRecord {
    fn from(step: &DescentStep) -> Self {
        StepRecord {
            x: step.child.x().to_string(),
            y: step.child.y().to_string(),
            m: step.child.m(),
            kind: step.kind,
            variant: step.variant,
            theta: format_rational(&step.theta),
            delta: step.delta.to_string(),
        }
    }
}

/// Serialized descent path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub start: SolutionRecord,
    pub steps: Vec<StepRecord>,
}

impl Certificate {
    /// Check the chain without running the descent: every link must pass
    /// [`recognize_successor`] with the recorded kind, exponents must fall,
    /// and the recorded incidence and `δ` must agree with the link.
    ///
    /// Returns the certified solution.
    pub fn verify(&self) -> Result<PPSolution> {
        let bad = |msg: String| Error::Certificate(msg);
        let start = PPSolution::try_from(&self.start)?;
        let mut nodes = Vec::with_capacity(self.steps.len() + 1);
        for (i, rec) in self.steps.iter().enumerate() {
            let child = PPSolution::try_from(&SolutionRecord {
                x: rec.x.clone(),
                y: rec.y.clone(),
                m: rec.m,
            })
            .map_err(|e| bad(format!("step {i}: {e}")))?;
            nodes.push(child);
        }
        match nodes.first() {
            Some(first) if *first != start => {
                return Err(bad(format!("first step is {first}, start is {start}")))
            }
            None if !start.is_root() => return Err(bad(format!("no steps for {start}"))),
            _ => {}
        }
        nodes.push(PPSolution::root());
        for (i, rec) in self.steps.iter().enumerate() {
            let (child, parent) = (&nodes[i], &nodes[i + 1]);
            if parent.m() >= child.m() {
                return Err(bad(format!("step {i}: exponent does not decrease")));
            }
            if recognize_successor(child, parent).kind() != Some(rec.kind) {
                return Err(bad(format!(
                    "step {i}: {child} is not the {} successor of {parent}",
                    rec.kind
                )));
            }
            let delta: BigInt = rec
                .delta
                .parse()
                .map_err(|_| bad(format!("step {i}: delta {:?}", rec.delta)))?;
            let expected = match rec.kind {
                SuccessorKind::First => BigInt::from(GCD_AT_NORMALIZED),
                SuccessorKind::Second => BigInt::one(),
            };
            if delta != expected {
                return Err(bad(format!(
                    "step {i}: delta {delta} does not match {}",
                    rec.kind
                )));
            }
            let theta = parse_rational(&rec.theta)?;
            if theta.denom() != parent.x() || theta.numer().abs() != *parent.y() {
                return Err(bad(format!(
                    "step {i}: incidence {} does not name {parent}",
                    rec.theta
                )));
            }
        }
        Ok(start)
    }
}
