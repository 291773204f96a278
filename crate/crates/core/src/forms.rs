//! The quadratic forms `A`, `B`, `C` and the incidence of a solution of
//! `7x² + 59y² = 3z²`.
//!
//! For any `(p, q)`
//!
//! ```text
//! A(p, q) = 59p² − 236pq − 7q²
//! B(p, q) = −118p² − 14pq + 14q²
//! C(p, q) = 9(59p² + 7q²)
//! ```
//!
//! satisfy `7A² + 59B² = 3C²`, so `(A/C, B/C)` is a rational point on the
//! ellipse `7X² + 59Y² = 3`. The incidence `(9y − 2z)/(9x − z)` inverts the
//! parametrization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Rational number kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// `2 · 3⁵ · 7 · 59`: every `gcd(A, B)` at coprime parameters divides it.
pub const DELTA_BOUND: u32 = 2 * 243 * 7 * 59;

/// Values of the three forms at one parameter pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormTriple {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl FormTriple {
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Self {
        FormTriple { a, b, c }
    }

    /// `7A² + 59B² = 3C²`.
    pub fn check_identity(&self) -> bool {
        7 * &self.a * &self.a + 59 * &self.b * &self.b == 3 * &self.c * &self.c
    }
}

/// Evaluate `A`, `B`, `C` at `(p, q)`. Only `(0, 0)` is rejected.
pub fn eval_forms(p: &BigInt, q: &BigInt) -> Result<FormTriple> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::DegenerateParameters);
    }
    let pp = p * p;
    let pq = p * q;
    let qq = q * q;
    let a = 59 * &pp - 236 * &pq - 7 * &qq;
    let b = -118 * &pp - 14 * &pq + 14 * &qq;
    let c = 9 * (59 * &pp + 7 * &qq);
    Ok(FormTriple { a, b, c })
}

pub fn check_identity(t: &FormTriple) -> bool {
    t.check_identity()
}

fn is_excluded_point(x: &BigInt, y: &BigInt, z: &BigInt) -> bool {
    let n = |v: i64| BigInt::from(v);
    *z == n(9) && ((*x == n(1) && (*y == n(2) || *y == n(-2))) || (*x == n(-1) && *y == n(2)))
}

/// Incidence `(9y − 2z)/(9x − z)` of a primitive solution of
/// `7x² + 59y² = 3z²` with `z > 0`.
///
/// The three points `(1, ±2, 9)` and `(−1, 2, 9)` have no incidence.
pub fn incidence(x: &BigInt, y: &BigInt, z: &BigInt) -> Result<Rational> {
    let show = || format!("({x}, {y}, {z})");
    if !z.is_positive() || x.is_zero() || y.is_zero() {
        return Err(Error::InvalidInput(format!(
            "{} needs nonzero x, y and positive z",
            show()
        )));
    }
    if 7 * x * x + 59 * y * y != 3 * z * z {
        return Err(Error::InvalidInput(format!(
            "{} does not satisfy 7x² + 59y² = 3z²",
            show()
        )));
    }
    if !x.gcd(y).is_one() {
        return Err(Error::InvalidInput(format!("{} is not primitive", show())));
    }
    if is_excluded_point(x, y, z) {
        return Err(Error::IncidenceUndefined(show()));
    }
    let num: BigInt = 9 * y - 2 * z;
    let den: BigInt = 9 * x - z;
    if num.is_zero() || den.is_zero() {
        return Err(Error::Invariant(format!(
            "vanishing incidence term for {}",
            show()
        )));
    }
    Ok(Rational::new(num, den))
}

/// A primitive solution of `7x² + 59y² = 3z²` recovered from its incidence,
/// with `delta = gcd(A, B)` at the incidence's numerator and denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reconstruction {
    pub x: BigInt,
    pub y: BigInt,
    pub z: BigInt,
    pub delta: BigInt,
}

/// Invert [`incidence`]: `(A/δ, B/δ, C/δ)` at `θ = p/q`.
///
/// The divisor structure of `δ` is checked on the way out: `δ` divides
/// `2·3⁵·7·59`, `7 | δ ⇔ 7 | p` and `59 | δ ⇔ 59 | q`.
pub fn reconstruct_from_incidence(theta: &Rational) -> Result<Reconstruction> {
    let p = theta.numer();
    let q = theta.denom();
    if p.is_zero() || !q.is_positive() || !p.gcd(q).is_one() {
        return Err(Error::InvalidIncidence);
    }
    let t = eval_forms(p, q)?;
    let delta = t.a.gcd(&t.b);
    check_delta_structure(p, q, &delta)?;
    let x = exact_div(&t.a, &delta)?;
    let y = exact_div(&t.b, &delta)?;
    let z = exact_div(&t.c, &delta)?;
    Ok(Reconstruction { x, y, z, delta })
}

/// Divisor structure of `δ = gcd(A(p, q), B(p, q))` for coprime `(p, q)`.
pub fn check_delta_structure(p: &BigInt, q: &BigInt, delta: &BigInt) -> Result<()> {
    let seven = BigInt::from(7);
    let fifty_nine = BigInt::from(59);
    let fail = |what: &str| {
        Err(Error::Invariant(format!(
            "delta {delta} at ({p}, {q}): {what}"
        )))
    };
    if !delta.is_positive() || !(BigInt::from(DELTA_BOUND) % delta).is_zero() {
        return fail("does not divide 2·3⁵·7·59");
    }
    if delta.is_multiple_of(&seven) != p.is_multiple_of(&seven) {
        return fail("7 | δ and 7 | p disagree");
    }
    if delta.is_multiple_of(&fifty_nine) != q.is_multiple_of(&fifty_nine) {
        return fail("59 | δ and 59 | q disagree");
    }
    Ok(())
}

/// Division that must leave no remainder.
pub(crate) fn exact_div(n: &BigInt, d: &BigInt) -> Result<BigInt> {
    let (quot, rem) = n.div_rem(d);
    if !rem.is_zero() {
        return Err(Error::Invariant(format!("{d} does not divide {n}")));
    }
    Ok(quot)
}

/// `"p/q"`, always with an explicit denominator.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidInput(format!("not a rational: {s:?}"));
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn triple(a: i64, b: i64, c: i64) -> FormTriple {
        FormTriple::new(big(a), big(b), big(c))
    }

    fn ratio(n: i64, d: i64) -> Rational {
        Rational::new(big(n), big(d))
    }

    #[test]
    fn eval_examples() {
        assert_eq!(
            eval_forms(&big(2), &big(1)).unwrap(),
            triple(-243, -486, 2187)
        );
        assert_eq!(
            eval_forms(&big(-2), &big(1)).unwrap(),
            triple(701, -430, 2187)
        );
        assert_eq!(
            eval_forms(&big(1), &big(1)).unwrap(),
            triple(-184, -118, 594)
        );
        assert_eq!(
            eval_forms(&big(0), &big(0)),
            Err(Error::DegenerateParameters)
        );
    }

    #[test]
    fn axis_parameters_allowed() {
        let t = eval_forms(&big(0), &big(3)).unwrap();
        assert!(t.check_identity());
        let t = eval_forms(&big(5), &big(0)).unwrap();
        assert!(t.check_identity());
    }

    #[test]
    fn identity_examples() {
        assert!(check_identity(&triple(-243, -486, 2187)));
        assert!(check_identity(&triple(701, -430, 2187)));
        assert!(!check_identity(&triple(1, 1, 1)));
    }

    #[test]
    fn incidence_examples() {
        assert_eq!(
            incidence(&big(701), &big(-430), &big(2187)).unwrap(),
            ratio(-2, 1)
        );
        assert_eq!(
            incidence(&big(701), &big(430), &big(2187)).unwrap(),
            ratio(-28, 229)
        );
        for (x, y) in [(1, 2), (1, -2), (-1, 2)] {
            assert!(matches!(
                incidence(&big(x), &big(y), &big(9)),
                Err(Error::IncidenceUndefined(_))
            ));
        }
        // (−1, −2, 9) is not excluded.
        assert_eq!(incidence(&big(-1), &big(-2), &big(9)).unwrap(), ratio(2, 1));
    }

    #[test]
    fn incidence_rejects_non_solutions() {
        assert!(incidence(&big(1), &big(1), &big(1)).is_err());
        assert!(incidence(&big(701), &big(430), &big(-2187)).is_err());
        // (3, 6, 27) solves the equation but is not primitive.
        assert!(incidence(&big(3), &big(6), &big(27)).is_err());
    }

    #[test]
    fn reconstruct_examples() {
        let r = reconstruct_from_incidence(&ratio(-2, 1)).unwrap();
        assert_eq!(
            (r.x, r.y, r.z, r.delta),
            (big(701), big(-430), big(2187), big(1))
        );
        let r = reconstruct_from_incidence(&ratio(2, 1)).unwrap();
        assert_eq!(
            (r.x, r.y, r.z, r.delta),
            (big(-1), big(-2), big(9), big(243))
        );
        let r = reconstruct_from_incidence(&ratio(7, 1)).unwrap();
        assert!(r.delta.is_multiple_of(&big(7)));
        assert_eq!(
            reconstruct_from_incidence(&ratio(0, 1)),
            Err(Error::InvalidIncidence)
        );
    }

    #[test]
    fn rational_text_round_trip() {
        assert_eq!(format_rational(&ratio(-2, 1)), "-2/1");
        assert_eq!(parse_rational("-28/229").unwrap(), ratio(-28, 229));
        assert_eq!(parse_rational("4/-2").unwrap(), ratio(-2, 1));
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn round_trip_over_scanned_ellipse_points() {
        // Every primitive solution with z < 1500, found by direct scan.
        let mut seen = 0;
        for z in 1i64..1500 {
            let rhs = 3 * z * z;
            let mut y = 1i64;
            while 59 * y * y < rhs {
                let r = rhs - 59 * y * y;
                if r % 7 == 0 {
                    let x2 = r / 7;
                    let x = (x2 as f64).sqrt().round() as i64;
                    if x * x == x2 && big(x).gcd(&big(y)).is_one() {
                        for (sx, sy) in [(x, y), (-x, y), (x, -y), (-x, -y)] {
                            let (bx, by, bz) = (big(sx), big(sy), big(z));
                            if is_excluded_point(&bx, &by, &bz) {
                                continue;
                            }
                            let theta = incidence(&bx, &by, &bz).unwrap();
                            let r = reconstruct_from_incidence(&theta).unwrap();
                            assert_eq!((r.x, r.y, r.z), (bx, by, bz));
                            seen += 1;
                        }
                    }
                }
                y += 1;
            }
        }
        assert!(seen > 20, "only {seen} points scanned");
    }

    fn nonzero() -> impl Strategy<Value = i64> {
        prop_oneof![-1_000_000i64..=-1, 1i64..=1_000_000]
    }

    proptest! {
        #[test]
        fn identity_and_nonvanishing(p in nonzero(), q in nonzero()) {
            let t = eval_forms(&big(p), &big(q)).unwrap();
            prop_assert!(t.check_identity());
            prop_assert!(!t.a.is_zero());
            prop_assert!(!t.b.is_zero());
            prop_assert!(t.c.is_positive());
            prop_assert_eq!(2 * &t.a + &t.b, big(-486) * big(p) * big(q));
        }

        #[test]
        fn delta_is_common_to_all_pairs(p in nonzero(), q in 1i64..1_000_000) {
            prop_assume!(big(p).gcd(&big(q)).is_one());
            let t = eval_forms(&big(p), &big(q)).unwrap();
            let delta = t.a.gcd(&t.b);
            prop_assert_eq!(&delta, &t.a.gcd(&t.c));
            prop_assert_eq!(&delta, &t.b.gcd(&t.c));
            prop_assert!(check_delta_structure(&big(p), &big(q), &delta).is_ok());
        }

        #[test]
        fn incidence_round_trip(p in nonzero(), q in 1i64..1_000_000) {
            prop_assume!(big(p).gcd(&big(q)).is_one());
            let r = reconstruct_from_incidence(&ratio(p, q)).unwrap();
            prop_assume!(!is_excluded_point(&r.x, &r.y, &r.z));
            let theta = incidence(&r.x, &r.y, &r.z).unwrap();
            prop_assert_eq!(&theta, &ratio(p, q));
            let back = reconstruct_from_incidence(&theta).unwrap();
            prop_assert_eq!((back.x, back.y, back.z), (r.x, r.y, r.z));
        }
    }
}
