//! Exhaustive search for positive solutions of `ax² + by² = λ·k^m`.
//!
//! The scan runs over the coordinate with the larger coefficient, testing
//! whether the remainder is an exact multiple of the other coefficient and
//! a perfect square. It shares no code with the successor construction.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::isqrt;
use crate::error::{Error, Result};

/// Default iteration budget for a scan or a sweep.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Coefficients of `ax² + by² = λ·k^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationSpec {
    pub a: BigInt,
    pub b: BigInt,
    pub lambda: BigInt,
    pub k: BigInt,
}

impl EquationSpec {
    pub fn new(a: BigInt, b: BigInt, lambda: BigInt, k: BigInt) -> Result<Self> {
        if !a.is_positive() || !b.is_positive() || !lambda.is_positive() {
            return Err(Error::InvalidInput(
                "a, b and lambda must be positive".into(),
            ));
        }
        if k < BigInt::from(2) {
            return Err(Error::InvalidInput("k must be at least 2".into()));
        }
        Ok(EquationSpec { a, b, lambda, k })
    }

    pub fn from_small(a: u64, b: u64, lambda: u64, k: u64) -> Result<Self> {
        Self::new(a.into(), b.into(), lambda.into(), k.into())
    }

    /// `7x² + 59y² = 3^m`.
    pub fn is_default(&self) -> bool {
        *self == Self::default()
    }

    /// `λ·k^m`.
    pub fn target(&self, m: u32) -> BigInt {
        &self.lambda * num_traits::pow(self.k.clone(), m as usize)
    }
}

impl Default for EquationSpec {
    fn default() -> Self {
        EquationSpec {
            a: BigInt::from(7),
            b: BigInt::from(59),
            lambda: BigInt::one(),
            k: BigInt::from(3),
        }
    }
}

/// A positive solution `(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hit {
    pub x: BigInt,
    pub y: BigInt,
    pub primitive: bool,
}

impl Hit {
    fn new(x: BigInt, y: BigInt) -> Self {
        let primitive = x.gcd(&y).is_one();
        Hit { x, y, primitive }
    }
}

// Squares modulo 64 hit only 12 of the 64 residues.
const SQUARE_MOD_64: [bool; 64] = {
    let mut t = [false; 64];
    let mut i = 0;
    while i < 64 {
        t[(i * i) % 64] = true;
        i += 1;
    }
    t
};

/// Number of values the scan visits for `λ·k^m`.
pub fn scan_length(spec: &EquationSpec, m: u32) -> BigInt {
    let big = spec.a.clone().max(spec.b.clone());
    (spec.target(m) / big).sqrt()
}

/// All positive `(x, y)` with `ax² + by² = λ·k^m`.
///
/// Fails with [`Error::BudgetExceeded`] before scanning if the scan would
/// take more than `budget` iterations.
pub fn brute_force(spec: &EquationSpec, m: u32, budget: u64) -> Result<BTreeSet<Hit>> {
    let n = spec.target(m);
    let len = scan_length(spec, m);
    if len > BigInt::from(budget) {
        return Err(Error::BudgetExceeded {
            needed: len.to_string(),
            budget,
        });
    }
    // Scan the coordinate whose coefficient is larger.
    let scan_x = spec.a > spec.b;
    let (big, small) = if scan_x {
        (&spec.a, &spec.b)
    } else {
        (&spec.b, &spec.a)
    };

    let pairs = match (n.to_u128(), big.to_u128(), small.to_u128(), len.to_u128()) {
        (Some(n), Some(big), Some(small), Some(len)) => scan_u128(n, big, small, len),
        _ => scan_big(&n, big, small, &len),
    };

    let mut hits = BTreeSet::new();
    for (t, s) in pairs {
        let (x, y) = if scan_x { (t, s) } else { (s, t) };
        if &spec.a * &x * &x + &spec.b * &y * &y != n {
            return Err(Error::Invariant(format!(
                "oracle hit ({x}, {y}) fails substitution"
            )));
        }
        hits.insert(Hit::new(x, y));
    }
    Ok(hits)
}

/// Pairs `(t, s)` with `big·t² + small·s² = n`, `t, s > 0`.
fn scan_u128(n: u128, big: u128, small: u128, len: u128) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::new();
    for t in 1..=len {
        // big·t² ≤ n by choice of len
        let r = n - big * t * t;
        if r == 0 || !r.is_multiple_of(small) {
            continue;
        }
        let s2 = r / small;
        if !SQUARE_MOD_64[(s2 & 63) as usize] {
            continue;
        }
        let s = s2.sqrt();
        if s * s == s2 {
            out.push((BigInt::from(t), BigInt::from(s)));
        }
    }
    out
}

fn scan_big(n: &BigInt, big: &BigInt, small: &BigInt, len: &BigInt) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::new();
    let mut t = BigInt::one();
    while t <= *len {
        let r = n - big * &t * &t;
        if !r.is_zero() {
            let (s2, rem) = r.div_rem(small);
            if rem.is_zero() {
                let s = isqrt(&s2).expect("remainder is non-negative");
                if &s * &s == s2 {
                    out.push((t.clone(), s));
                }
            }
        }
        t += 1u32;
    }
    out
}

/// Results of [`oracle_sweep`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sweep {
    /// Hits for each scanned exponent, including empty ones.
    pub hits: BTreeMap<u32, BTreeSet<Hit>>,
    /// First exponent that was skipped because the budget ran out.
    pub truncated_at: Option<u32>,
    /// Exponents with a primitive hit. Filled in for the default equation only.
    pub suitable: Option<Vec<u32>>,
}

impl Sweep {
    pub fn is_truncated(&self) -> bool {
        self.truncated_at.is_some()
    }

    pub fn exponents_with_hits(&self) -> Vec<u32> {
        self.hits
            .iter()
            .filter(|(_, h)| !h.is_empty())
            .map(|(&m, _)| m)
            .collect()
    }
}

/// [`brute_force`] for `m = 1..=m_max`, sharing one iteration budget.
///
/// Stops at the first exponent that would overrun the budget and marks the
/// result truncated there.
pub fn oracle_sweep(spec: &EquationSpec, m_max: u32, budget: u64) -> Result<Sweep> {
    let mut hits = BTreeMap::new();
    let mut remaining = budget;
    let mut truncated_at = None;
    for m in 1..=m_max {
        match brute_force(spec, m, remaining) {
            Ok(h) => {
                let used = scan_length(spec, m).to_u64().unwrap_or(u64::MAX);
                remaining = remaining.saturating_sub(used);
                hits.insert(m, h);
            }
            Err(Error::BudgetExceeded { .. }) => {
                truncated_at = Some(m);
                break;
            }
            Err(e) => return Err(e),
        }
    }
    let suitable = spec.is_default().then(|| {
        hits.iter()
            .filter(|(_, h)| h.iter().any(|hit| hit.primitive))
            .map(|(&m, _)| m)
            .collect()
    });
    Ok(Sweep {
        hits,
        truncated_at,
        suitable,
    })
}
