//! First and second successors of a solution, and recognizing them.
//!
//! A parent `(x, y, ω)` is read with `q = x` on the coefficient-7 term and
//! `p = ±y` on the coefficient-59 term, the sign chosen so that
//! `pq ≡ −1 (mod 3)`. Then
//!
//! * first successor: `(|A(p, q)|/3⁵, |B(p, q)|/3⁵, 2ω − 5)`
//! * second successor: `(|A(−p, q)|, |B(−p, q)|, 2ω + 5)`
//!
//! The root `(1, 2, 5)` is its own first successor.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{eval_forms, exact_div};
use crate::solution::PPSolution;

/// `3⁵`, the exact `gcd(A, B)` at normalized parameters.
pub const GCD_AT_NORMALIZED: u32 = 243;

/// Which of the two successors a child is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SuccessorKind {
    First,
    Second,
}

impl SuccessorKind {
    /// `F` or `S`, as used in tree paths.
    pub fn letter(self) -> char {
        match self {
            SuccessorKind::First => 'F',
            SuccessorKind::Second => 'S',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'F' => Some(SuccessorKind::First),
            'S' => Some(SuccessorKind::Second),
            _ => None,
        }
    }
}

impl fmt::Display for SuccessorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SuccessorKind::First => "first",
            SuccessorKind::Second => "second",
        })
    }
}

impl FromStr for SuccessorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first" => Ok(SuccessorKind::First),
            "second" => Ok(SuccessorKind::Second),
            _ => Err(Error::InvalidInput(format!("unknown successor kind {s:?}"))),
        }
    }
}

/// Outcome of [`recognize_successor`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Recognition {
    First,
    Second,
    Neither,
}

impl Recognition {
    pub fn kind(self) -> Option<SuccessorKind> {
        match self {
            Recognition::First => Some(SuccessorKind::First),
            Recognition::Second => Some(SuccessorKind::Second),
            Recognition::Neither => None,
        }
    }
}

impl From<SuccessorKind> for Recognition {
    fn from(k: SuccessorKind) -> Self {
        match k {
            SuccessorKind::First => Recognition::First,
            SuccessorKind::Second => Recognition::Second,
        }
    }
}

/// Choose the sign of `p` so that `pq ≡ −1 (mod 3)`, with `q > 0`.
///
/// Returns `(p', q)`. `3 ∤ pq` must hold, which is automatic for the
/// coordinates of a primitive solution.
pub fn normalize_parameters(q: &BigInt, p: &BigInt) -> Result<(BigInt, BigInt)> {
    let three = BigInt::from(3);
    let q = q.abs();
    let p = p.abs();
    match (&p * &q).mod_floor(&three) {
        r if r == BigInt::from(2) => Ok((p, q)),
        r if r == BigInt::from(1) => Ok((-p, q)),
        _ => Err(Error::InvalidInput(format!("3 divides {p}·{q}"))),
    }
}

/// Normalized `(p, q)` of a solution read as `(q, p, ω)`.
pub fn parameters_of(s: &PPSolution) -> (BigInt, BigInt) {
    normalize_parameters(s.x(), s.y()).expect("coordinates of a pp-solution are prime to 3")
}

pub fn first_successor(s: &PPSolution) -> Result<PPSolution> {
    let (p, q) = parameters_of(s);
    let t = eval_forms(&p, &q)?;
    let g = t.a.gcd(&t.b);
    if g != BigInt::from(GCD_AT_NORMALIZED) {
        return Err(Error::Invariant(format!(
            "gcd(A, B) = {g} at normalized parameters of {s}"
        )));
    }
    let x = exact_div(&t.a.abs(), &g)?;
    let y = exact_div(&t.b.abs(), &g)?;
    PPSolution::new(x, y, 2 * s.m() - 5)
}

pub fn second_successor(s: &PPSolution) -> Result<PPSolution> {
    let (p, q) = parameters_of(s);
    let t = eval_forms(&-p, &q)?;
    let x = t.a.abs();
    if x.is_multiple_of(&BigInt::from(3)) {
        return Err(Error::Invariant(format!(
            "3 divides the second successor's x at {s}"
        )));
    }
    PPSolution::new(x, t.b.abs(), 2 * s.m() + 5)
}

pub fn successor(s: &PPSolution, kind: SuccessorKind) -> Result<PPSolution> {
    match kind {
        SuccessorKind::First => first_successor(s),
        SuccessorKind::Second => second_successor(s),
    }
}

/// Is `candidate` a successor of `parent`, and which one?
///
/// Both signs of `p` are tried, with `A` and `B` taken at the same sign;
/// the parameters are not normalized first.
pub fn recognize_successor(candidate: &PPSolution, parent: &PPSolution) -> Recognition {
    let q = parent.x();
    let scale = BigInt::from(GCD_AT_NORMALIZED);
    for p in [parent.y().clone(), -parent.y()] {
        let t = eval_forms(&p, q).expect("q is nonzero");
        let (a, b) = (t.a.abs(), t.b.abs());
        if *candidate.x() == a && *candidate.y() == b {
            return Recognition::Second;
        }
        if candidate.x() * &scale == a && candidate.y() * &scale == b {
            return Recognition::First;
        }
    }
    Recognition::Neither
}
