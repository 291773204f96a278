//! Solutions of `7x² + 59y² = 3^m`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{pow3, valuation_3};
use crate::error::{Error, Result};
use crate::forms::exact_div;

/// `7x² + 59y²`.
pub fn form_value(x: &BigInt, y: &BigInt) -> BigInt {
    7 * x * x + 59 * y * y
}

/// A primitive positive solution `(x, y, m)`: `x, y > 0`, `gcd(x, y) = 1`
/// and `7x² + 59y² = 3^m`.
///
/// The constructor re-checks all of this, so holding a `PPSolution` is proof
/// that the triple is valid. Solutions compare by exponent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PPSolution {
    x: BigInt,
    y: BigInt,
    m: u32,
}

impl PPSolution {
    pub fn new(x: BigInt, y: BigInt, m: u32) -> Result<Self> {
        if !x.is_positive() || !y.is_positive() {
            return Err(Error::NotPpSolution(format!(
                "({x}, {y}, {m}) is not positive"
            )));
        }
        if !x.gcd(&y).is_one() {
            return Err(Error::NotPpSolution(format!(
                "({x}, {y}, {m}) is not primitive"
            )));
        }
        if form_value(&x, &y) != pow3(m) {
            return Err(Error::NotPpSolution(format!("7·{x}² + 59·{y}² ≠ 3^{m}")));
        }
        Ok(PPSolution { x, y, m })
    }

    /// `(1, 2, 5)`, the smallest solution and the root of the tree.
    pub fn root() -> Self {
        PPSolution {
            x: BigInt::one(),
            y: BigInt::from(2),
            m: 5,
        }
    }

    pub fn is_root(&self) -> bool {
        *self == Self::root()
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn into_parts(self) -> (BigInt, BigInt, u32) {
        (self.x, self.y, self.m)
    }
}

impl PartialOrd for PPSolution {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PPSolution {
    fn cmp(&self, other: &Self) -> Ordering {
        self.m
            .cmp(&other.m)
            .then_with(|| self.x.cmp(&other.x))
            .then_with(|| self.y.cmp(&other.y))
    }
}

impl fmt::Display for PPSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.m)
    }
}

/// Serialized form: `x` and `y` as decimal strings, `m` as an integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub x: String,
    pub y: String,
    pub m: u32,
}

impl From<&PPSolution> for SolutionRecord {
    fn from(s: &PPSolution) -> Self {
        SolutionRecord {
            x: s.x.to_string(),
            y: s.y.to_string(),
            m: s.m,
        }
    }
}

impl TryFrom<&SolutionRecord> for PPSolution {
    type Error = Error;

    fn try_from(r: &SolutionRecord) -> Result<Self> {
        let parse = |s: &str| {
            s.parse::<BigInt>()
                .map_err(|_| Error::InvalidInput(format!("not a decimal integer: {s:?}")))
        };
        PPSolution::new(parse(&r.x)?, parse(&r.y)?, r.m)
    }
}

/// How a triple relates to `7x² + 59y² = 3^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionClass {
    PpSolution,
    PrimitiveNonpositive,
    /// A solution whose `gcd(x, y)` is `scaled_by`, always a power of 3.
    Imprimitive {
        scaled_by: BigInt,
    },
    NotASolution,
}

impl SolutionClass {
    pub fn tag(&self) -> &'static str {
        match self {
            SolutionClass::PpSolution => "pp_solution",
            SolutionClass::PrimitiveNonpositive => "primitive_nonpositive",
            SolutionClass::Imprimitive { .. } => "imprimitive",
            SolutionClass::NotASolution => "not_a_solution",
        }
    }

    pub fn scaled_by(&self) -> BigInt {
        match self {
            SolutionClass::Imprimitive { scaled_by } => scaled_by.clone(),
            _ => BigInt::one(),
        }
    }
}

/// Classify `(x, y, m)`. `x` and `y` must be nonzero and `m` positive.
pub fn verify(x: &BigInt, y: &BigInt, m: u32) -> Result<SolutionClass> {
    if x.is_zero() || y.is_zero() || m == 0 {
        return Err(Error::InvalidInput(format!(
            "({x}, {y}, {m}) needs nonzero x, y and positive m"
        )));
    }
    if form_value(x, y) != pow3(m) {
        return Ok(SolutionClass::NotASolution);
    }
    let g = x.gcd(y);
    if !g.is_one() {
        // Any prime dividing both divides 3^m.
        let e = valuation_3(&g)?;
        if pow3(e) != g {
            return Err(Error::Invariant(format!(
                "gcd {g} of a solution is not a power of 3"
            )));
        }
        return Ok(SolutionClass::Imprimitive { scaled_by: g });
    }
    if x.is_positive() && y.is_positive() {
        Ok(SolutionClass::PpSolution)
    } else {
        Ok(SolutionClass::PrimitiveNonpositive)
    }
}

/// The pp-solution obtained from any solution by dropping signs and the
/// common power of 3.
pub fn primitive_core(x: &BigInt, y: &BigInt, m: u32) -> Result<PPSolution> {
    match verify(x, y, m)? {
        SolutionClass::NotASolution => Err(Error::InvalidInput(format!(
            "({x}, {y}, {m}) is not a solution"
        ))),
        class => {
            let g = class.scaled_by();
            let e = valuation_3(&g)?;
            PPSolution::new(
                exact_div(&x.abs(), &g)?,
                exact_div(&y.abs(), &g)?,
                m - 2 * e,
            )
        }
    }
}

/// Whether `m ≡ 5 (mod 10)`.
pub fn is_suitable(m: u32) -> Result<bool> {
    if m == 0 {
        return Err(Error::InvalidInput("exponent must be positive".into()));
    }
    Ok(m % 10 == 5)
}

/// `x` odd and `y` even.
pub fn parity_check(s: &PPSolution) -> bool {
    parity_holds(s.x(), s.y())
}

pub fn parity_holds(x: &BigInt, y: &BigInt) -> bool {
    x.is_odd() && y.is_even()
}

/// Whether `xy ≡ −1 (mod 3)`. Checked empirically on generated solutions.
pub fn product_is_minus_one_mod_3(s: &PPSolution) -> bool {
    (s.x() * s.y()).mod_floor(&BigInt::from(3)) == BigInt::from(2)
}
