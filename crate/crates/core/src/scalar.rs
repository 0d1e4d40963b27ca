//! Exact arithmetic in the field Q(sqrt 2).
//!
//! `Rat` is an arbitrary-precision rational kept in canonical form
//! (reduced, positive denominator); `ScalarQ` is `a + b*sqrt(2)` with
//! rational components. Equality is componentwise because canonical form
//! is enforced at construction. No floating point is used anywhere in
//! the arithmetic; comparisons are decided by exact sign analysis.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};

/// Exact rational number. Invariants: gcd(|num|, den) = 1, den > 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn new(num: i64, den: i64) -> Result<Self> {
        Self::from_bigs(BigInt::from(num), BigInt::from(den))
    }

    pub fn from_bigs(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(num, den)))
    }

    pub fn num(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn den(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Sign as -1, 0 or 1.
    pub fn sign(&self) -> i32 {
        if self.0.is_zero() {
            0
        } else if self.0.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    /// Lossy conversion used only for diagnostics and sanity tests,
    /// never by the exact kernel.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl Add for &Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        Rat(&self.0 + &rhs.0)
    }
}

impl Sub for &Rat {
    type Output = Rat;
    fn sub(self, rhs: &Rat) -> Rat {
        Rat(&self.0 - &rhs.0)
    }
}

impl Mul for &Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        Rat(&self.0 * &rhs.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.num())
        } else {
            write!(f, "{}/{}", self.num(), self.den())
        }
    }
}

/// JSON encoding of a big integer: a plain JSON integer when it fits in
/// i64, a decimal string beyond that (values the toolkit itself emits
/// always fit).
pub(crate) fn bigint_json(b: &BigInt) -> serde_json::Value {
    match b.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(b.to_string()),
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(2))?;
        seq.serialize_element(&bigint_json(self.num()))?;
        seq.serialize_element(&bigint_json(self.den()))?;
        seq.end()
    }
}

/// An element a + b*sqrt(2) of Q(sqrt 2). The representation is unique,
/// so equality and hashing are componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScalarQ {
    a: Rat,
    b: Rat,
}

impl ScalarQ {
    pub fn new(a: Rat, b: Rat) -> Self {
        ScalarQ { a, b }
    }

    pub fn zero() -> Self {
        ScalarQ::new(Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        ScalarQ::new(Rat::one(), Rat::zero())
    }

    pub fn from_int(n: i64) -> Self {
        ScalarQ::new(Rat::from_int(n), Rat::zero())
    }

    pub fn from_rat(a: Rat) -> Self {
        ScalarQ::new(a, Rat::zero())
    }

    pub fn sqrt2() -> Self {
        ScalarQ::new(Rat::zero(), Rat::one())
    }

    /// 2^(-1/2) = (1/2)*sqrt(2).
    pub fn inv_sqrt2() -> Self {
        ScalarQ::new(Rat::zero(), Rat::new(1, 2).unwrap())
    }

    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    pub fn sqrt2_part(&self) -> &Rat {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Exact sign of a + b*sqrt(2), decided by case analysis on the signs
    /// of a and b and a comparison of a^2 against 2*b^2.
    pub fn sign(&self) -> i32 {
        let sa = self.a.sign();
        let sb = self.b.sign();
        match (sa, sb) {
            (0, 0) => 0,
            _ if sa >= 0 && sb >= 0 => 1,
            _ if sa <= 0 && sb <= 0 => -1,
            _ => {
                // a and b have strictly opposite signs; a^2 = 2 b^2 would
                // force sqrt(2) rational, so the comparison is strict.
                let a2 = &self.a * &self.a;
                let b2 = &self.b * &self.b;
                let two_b2 = &Rat::from_int(2) * &b2;
                if sa > 0 {
                    if a2 > two_b2 {
                        1
                    } else {
                        -1
                    }
                } else if two_b2 > a2 {
                    1
                } else {
                    -1
                }
            }
        }
    }

    /// Multiplicative inverse via the conjugate: (a - b*sqrt2)/(a^2 - 2 b^2).
    pub fn inv(&self) -> Result<ScalarQ> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a2 = &self.a * &self.a;
        let b2 = &self.b * &self.b;
        let norm = &a2 - &(&Rat::from_int(2) * &b2);
        // norm = 0 with (a,b) != (0,0) would make sqrt(2) rational.
        let inv_norm = norm.recip()?;
        Ok(ScalarQ::new(&self.a * &inv_norm, &(-&self.b) * &inv_norm))
    }

    /// Lossy embedding into f64; diagnostics and cross-checks only.
    pub fn to_f64(&self) -> f64 {
        self.a.to_f64() + self.b.to_f64() * std::f64::consts::SQRT_2
    }
}

impl Add for &ScalarQ {
    type Output = ScalarQ;
    fn add(self, rhs: &ScalarQ) -> ScalarQ {
        ScalarQ::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &ScalarQ {
    type Output = ScalarQ;
    fn sub(self, rhs: &ScalarQ) -> ScalarQ {
        ScalarQ::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &ScalarQ {
    type Output = ScalarQ;
    fn mul(self, rhs: &ScalarQ) -> ScalarQ {
        // (a1 + b1 r)(a2 + b2 r) = a1 a2 + 2 b1 b2 + (a1 b2 + b1 a2) r
        let a = &(&self.a * &rhs.a) + &(&Rat::from_int(2) * &(&self.b * &rhs.b));
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        ScalarQ::new(a, b)
    }
}

impl Neg for &ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        ScalarQ::new(-&self.a, -&self.b)
    }
}

impl PartialOrd for ScalarQ {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ScalarQ {
    /// Total order consistent with the real embedding sqrt(2) = 1.41421...
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl fmt::Display for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let sqrt_term = |b: &Rat| -> String {
            if b.is_one() {
                "\u{221a}2".to_string()
            } else if b == &Rat::from_int(-1) {
                "-\u{221a}2".to_string()
            } else if b.is_integer() {
                format!("{b}\u{221a}2")
            } else if b.sign() < 0 {
                format!("-({})\u{221a}2", b.abs())
            } else {
                format!("({b})\u{221a}2")
            }
        };
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}", sqrt_term(&self.b))
        } else if self.b.sign() > 0 {
            write!(f, "{}+{}", self.a, sqrt_term(&self.b))
        } else {
            write!(f, "{}{}", self.a, sqrt_term(&self.b))
        }
    }
}

impl Serialize for ScalarQ {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("ScalarQ", 2)?;
        st.serialize_field("a", &self.a)?;
        st.serialize_field("b", &self.b)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(a_num: i64, a_den: i64, b_num: i64, b_den: i64) -> ScalarQ {
        ScalarQ::new(Rat::new(a_num, a_den).unwrap(), Rat::new(b_num, b_den).unwrap())
    }

    #[test]
    fn canonical_form_idempotent() {
        assert_eq!(Rat::new(2, 4).unwrap(), Rat::new(1, 2).unwrap());
        assert_eq!(Rat::new(-3, -6).unwrap(), Rat::new(1, 2).unwrap());
        assert_eq!(Rat::new(3, -6).unwrap(), Rat::new(-1, 2).unwrap());
        assert_eq!(Rat::new(0, 5).unwrap(), Rat::zero());
        assert!(Rat::new(1, 0).is_err());
        let r = Rat::new(10, 4).unwrap();
        assert_eq!(r.num(), &num_bigint::BigInt::from(5));
        assert_eq!(r.den(), &num_bigint::BigInt::from(2));
    }

    #[test]
    fn arithmetic_examples() {
        // (1 + sqrt2)(1 - sqrt2) = -1
        let x = s(1, 1, 1, 1);
        let y = s(1, 1, -1, 1);
        assert_eq!(&x * &y, ScalarQ::from_int(-1));
        // 1/2 + (1/2)sqrt2
        let h = s(1, 2, 0, 1);
        let hs = s(0, 1, 1, 2);
        assert_eq!(&h + &hs, s(1, 2, 1, 2));
        // (2^{-1/2})^2 = 1/2
        let c = ScalarQ::inv_sqrt2();
        assert_eq!(&c * &c, s(1, 2, 0, 1));
    }

    #[test]
    fn inverse_examples() {
        // 1/sqrt2 = sqrt2/2
        assert_eq!(ScalarQ::sqrt2().inv().unwrap(), ScalarQ::inv_sqrt2());
        assert_eq!(ScalarQ::from_int(2).inv().unwrap(), s(1, 2, 0, 1));
        // (1 + sqrt2)^{-1} = -1 + sqrt2, checked by multiplying out
        let x = s(1, 1, 1, 1);
        let xi = x.inv().unwrap();
        assert_eq!(xi, s(-1, 1, 1, 1));
        assert_eq!(&x * &xi, ScalarQ::one());
        assert!(ScalarQ::zero().inv().is_err());
    }

    #[test]
    fn cmp_examples() {
        assert_eq!(ScalarQ::one().cmp(&ScalarQ::sqrt2()), Ordering::Less);
        // 3/2 > sqrt2 because 9/4 > 2
        assert_eq!(s(3, 2, 0, 1).cmp(&ScalarQ::sqrt2()), Ordering::Greater);
        let x = s(7, 5, -2, 3);
        assert_eq!(x.cmp(&x), Ordering::Equal);
        // sign analysis with mixed signs
        assert_eq!(s(-3, 1, 2, 1).sign(), -1); // 2 sqrt2 < 3
        assert_eq!(s(-2, 1, 3, 2).sign(), 1); // (3/2) sqrt2 > 2
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-24i64..=24, 1i64..=12).prop_map(|(n, d)| Rat::new(n, d).unwrap())
    }

    fn arb_scalar() -> impl Strategy<Value = ScalarQ> {
        (arb_rat(), arb_rat()).prop_map(|(a, b)| ScalarQ::new(a, b))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_scalar(), y in arb_scalar(), z in arb_scalar()) {
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.inv().unwrap(), ScalarQ::one());
            }
        }

        #[test]
        fn cmp_agrees_with_float(x in arb_scalar(), y in arb_scalar()) {
            // sanity cross-check against the real embedding; the float
            // route is approximate, so only disagree when it is clearly
            // away from the rounding noise
            let (fx, fy) = (x.to_f64(), y.to_f64());
            if (fx - fy).abs() > 1e-9 {
                let exact = x.cmp(&y);
                let float = fx.partial_cmp(&fy).unwrap();
                prop_assert_eq!(exact, float);
            }
        }
    }
}
