//! The Hamilton quaternion algebra over Q(sqrt 2).
//!
//! Basis 1, i, j, k with i^2 = j^2 = k^2 = -1 and ij = k, jk = i, ki = j
//! (anticommuting). Carries conjugation, the norm form, inverses, the
//! Jordan product {u,v} = (uv + vu)/2 and the two candidate Jordan-ratio
//! conventions. Everything is exact; this module contains no floating
//! point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{Rat, ScalarQ};

/// Quaternion q0 + q1*i + q2*j + q3*k with ScalarQ coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quat {
    coords: [ScalarQ; 4],
}

/// Which reading of the Jordan ratio {u : v} to use.
///
/// `Star` is {u, v*}; `Plain` is {u, v}. The two differ by conjugating
/// the second argument and both are kept first-class: `Plain` reproduces
/// the worked ratio values (j-k)/2 and -(i+j)/2 on the quadruple
/// (1,i,j,k), while `Star` matches the conjugated definition. Downstream
/// operations take the convention as an argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RatioConvention {
    Plain,
    Star,
}

impl RatioConvention {
    pub const BOTH: [RatioConvention; 2] = [RatioConvention::Plain, RatioConvention::Star];

    pub fn as_str(self) -> &'static str {
        match self {
            RatioConvention::Plain => "plain",
            RatioConvention::Star => "star",
        }
    }
}

impl FromStr for RatioConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(RatioConvention::Plain),
            "star" => Ok(RatioConvention::Star),
            other => Err(Error::Unsupported(format!(
                "unknown ratio convention {other:?} (expected plain or star)"
            ))),
        }
    }
}

impl fmt::Display for RatioConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Quat {
    pub fn new(coords: [ScalarQ; 4]) -> Self {
        Quat { coords }
    }

    pub fn from_ints(q0: i64, q1: i64, q2: i64, q3: i64) -> Self {
        Quat::new([
            ScalarQ::from_int(q0),
            ScalarQ::from_int(q1),
            ScalarQ::from_int(q2),
            ScalarQ::from_int(q3),
        ])
    }

    pub fn zero() -> Self {
        Quat::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Quat::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Quat::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quat::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quat::from_ints(0, 0, 0, 1)
    }

    pub fn basis(idx: usize) -> Self {
        let mut c = [
            ScalarQ::zero(),
            ScalarQ::zero(),
            ScalarQ::zero(),
            ScalarQ::zero(),
        ];
        c[idx] = ScalarQ::one();
        Quat::new(c)
    }

    pub fn scalar(s: ScalarQ) -> Self {
        Quat::new([s, ScalarQ::zero(), ScalarQ::zero(), ScalarQ::zero()])
    }

    pub fn coords(&self) -> &[ScalarQ; 4] {
        &self.coords
    }

    pub fn coord(&self, idx: usize) -> &ScalarQ {
        &self.coords[idx]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(ScalarQ::is_zero)
    }

    pub fn scale(&self, s: &ScalarQ) -> Quat {
        Quat::new([
            s * &self.coords[0],
            s * &self.coords[1],
            s * &self.coords[2],
            s * &self.coords[3],
        ])
    }

    /// Hamilton product, extended bilinearly from the basis table.
    pub fn mul(&self, rhs: &Quat) -> Quat {
        let [a0, a1, a2, a3] = &self.coords;
        let [b0, b1, b2, b3] = &rhs.coords;
        let r0 = &(&(a0 * b0) - &(a1 * b1)) - &(&(a2 * b2) + &(a3 * b3));
        let r1 = &(&(a0 * b1) + &(a1 * b0)) + &(&(a2 * b3) - &(a3 * b2));
        let r2 = &(&(a0 * b2) - &(a1 * b3)) + &(&(a2 * b0) + &(a3 * b1));
        let r3 = &(&(a0 * b3) + &(a1 * b2)) - &(&(a2 * b1) - &(a3 * b0));
        Quat::new([r0, r1, r2, r3])
    }

    /// q* = q0 - q1 i - q2 j - q3 k.
    pub fn conj(&self) -> Quat {
        Quat::new([
            self.coords[0].clone(),
            -&self.coords[1],
            -&self.coords[2],
            -&self.coords[3],
        ])
    }

    /// |q|^2 = sum of squared coordinates; equals q q* = q* q.
    pub fn norm2(&self) -> ScalarQ {
        let mut acc = ScalarQ::zero();
        for c in &self.coords {
            acc = &acc + &(c * c);
        }
        acc
    }

    /// q^{-1} = |q|^{-2} q*.
    pub fn inv(&self) -> Result<Quat> {
        let n = self.norm2();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj().scale(&n.inv()?))
    }

    pub fn pow(&self, exp: i64) -> Result<Quat> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = Quat::one();
        for _ in 0..exp.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Lossy embedding used for diagnostics only.
    pub fn to_f64_coords(&self) -> [f64; 4] {
        [
            self.coords[0].to_f64(),
            self.coords[1].to_f64(),
            self.coords[2].to_f64(),
            self.coords[3].to_f64(),
        ]
    }
}

impl Add for &Quat {
    type Output = Quat;
    fn add(self, rhs: &Quat) -> Quat {
        Quat::new([
            &self.coords[0] + &rhs.coords[0],
            &self.coords[1] + &rhs.coords[1],
            &self.coords[2] + &rhs.coords[2],
            &self.coords[3] + &rhs.coords[3],
        ])
    }
}

impl Sub for &Quat {
    type Output = Quat;
    fn sub(self, rhs: &Quat) -> Quat {
        Quat::new([
            &self.coords[0] - &rhs.coords[0],
            &self.coords[1] - &rhs.coords[1],
            &self.coords[2] - &rhs.coords[2],
            &self.coords[3] - &rhs.coords[3],
        ])
    }
}

impl Neg for &Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        Quat::new([
            -&self.coords[0],
            -&self.coords[1],
            -&self.coords[2],
            -&self.coords[3],
        ])
    }
}

impl PartialOrd for Quat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Quat {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords.cmp(&other.coords)
    }
}

/// {u,v} = (uv + vu)/2, the commutative, nonassociative Jordan product.
pub fn jordan_product(u: &Quat, v: &Quat) -> Quat {
    let s = &u.mul(v) + &v.mul(u);
    s.scale(&ScalarQ::new(Rat::new(1, 2).unwrap(), Rat::zero()))
}

/// The Jordan ratio {u : v} under the chosen convention.
pub fn jordan_ratio(u: &Quat, v: &Quat, convention: RatioConvention) -> Quat {
    match convention {
        RatioConvention::Star => jordan_product(u, &v.conj()),
        RatioConvention::Plain => jordan_product(u, v),
    }
}

impl Serialize for Quat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(4))?;
        for c in &self.coords {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

const BASIS_NAMES: [&str; 4] = ["", "i", "j", "k"];

/// Renders a combination with integer coefficients, e.g. "1-i-j-k", "-2k".
fn int_combo(nums: &[BigInt; 4]) -> String {
    let mut out = String::new();
    for (idx, n) in nums.iter().enumerate() {
        if n.is_zero() {
            continue;
        }
        let mag = n.abs();
        let body = if idx == 0 {
            mag.to_string()
        } else if mag.is_one() {
            BASIS_NAMES[idx].to_string()
        } else {
            format!("{}{}", mag, BASIS_NAMES[idx])
        };
        if n.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl Quat {
    /// Deterministic display label: coefficients in the order q0,q1,q2,q3,
    /// with sqrt(2) denominators preferred over (1/2)sqrt(2) coefficients.
    /// Examples: "1", "-i", "(1+i)/\u{221a}2", "(1-i-j-k)/2".
    pub fn label(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        // pure scalar: just the ScalarQ rendering
        if self.coords[1].is_zero() && self.coords[2].is_zero() && self.coords[3].is_zero() {
            return self.coords[0].to_string();
        }
        if self.coords.iter().all(ScalarQ::is_rational) {
            let mut den = BigInt::one();
            for c in &self.coords {
                den = den.lcm(c.rational_part().den());
            }
            if den.is_one() {
                let nums: [BigInt; 4] =
                    std::array::from_fn(|i| self.coords[i].rational_part().num().clone());
                return int_combo(&nums);
            }
            if den == BigInt::from(2) {
                let nums: [BigInt; 4] = std::array::from_fn(|i| {
                    let r = self.coords[i].rational_part();
                    (r.num() * BigInt::from(2)) / r.den()
                });
                return format!("({})/2", int_combo(&nums));
            }
        } else if self.coords.iter().all(|c| c.rational_part().is_zero()) {
            // q = (c0 + c1 i + c2 j + c3 k)/sqrt2 with c_i = 2 b_i; use the
            // sqrt2-denominator form when the c_i are integers and not all
            // even (all even reads better as a sqrt2 coefficient)
            let doubled: Vec<Rat> = self
                .coords
                .iter()
                .map(|c| &Rat::from_int(2) * c.sqrt2_part())
                .collect();
            if doubled.iter().all(Rat::is_integer)
                && doubled.iter().any(|c| c.num().is_odd())
            {
                let nums: [BigInt; 4] = std::array::from_fn(|i| doubled[i].num().clone());
                return format!("({})/\u{221a}2", int_combo(&nums));
            }
        }
        // general fallback: signed sum of per-coordinate terms
        let mut out = String::new();
        for (idx, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.sign() < 0;
            let mag = if neg { -c } else { c.clone() };
            let body = if idx == 0 {
                mag.to_string()
            } else if mag.is_one() {
                BASIS_NAMES[idx].to_string()
            } else {
                let ms = mag.to_string();
                let simple = mag.is_rational()
                    && mag.rational_part().is_integer();
                if simple {
                    format!("{}{}", ms, BASIS_NAMES[idx])
                } else {
                    format!("({}){}", ms, BASIS_NAMES[idx])
                }
            };
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn half() -> ScalarQ {
        ScalarQ::new(Rat::new(1, 2).unwrap(), Rat::zero())
    }

    fn hurwitz(s0: i64, s1: i64, s2: i64, s3: i64) -> Quat {
        Quat::from_ints(s0, s1, s2, s3).scale(&half())
    }

    /// Independent multiplication oracle: expand u*v over all 16 basis
    /// pairs using an explicit (sign, index) table. This is a different
    /// code path from the closed-form component formulas in `Quat::mul`.
    fn mul_oracle(u: &Quat, v: &Quat) -> Quat {
        const TABLE: [[(i64, usize); 4]; 4] = [
            [(1, 0), (1, 1), (1, 2), (1, 3)],
            [(1, 1), (-1, 0), (1, 3), (-1, 2)],
            [(1, 2), (-1, 3), (-1, 0), (1, 1)],
            [(1, 3), (1, 2), (-1, 1), (-1, 0)],
        ];
        let mut acc = Quat::zero();
        for r in 0..4 {
            for c in 0..4 {
                let (sign, idx) = TABLE[r][c];
                let coeff = u.coord(r) * v.coord(c);
                let coeff = if sign < 0 { -&coeff } else { coeff };
                acc = &acc + &Quat::basis(idx).scale(&coeff);
            }
        }
        acc
    }

    #[test]
    fn basis_table() {
        assert_eq!(Quat::i().mul(&Quat::j()), Quat::k());
        assert_eq!(Quat::j().mul(&Quat::k()), Quat::i());
        assert_eq!(Quat::k().mul(&Quat::i()), Quat::j());
        assert_eq!(Quat::j().mul(&Quat::i()), -&Quat::k());
        assert_eq!(Quat::i().mul(&Quat::i()), -&Quat::one());
    }

    #[test]
    fn mul_examples() {
        // (1 - i)(j - k) = -2k, by the 16-term oracle and directly
        let u = &Quat::one() - &Quat::i();
        let v = &Quat::j() - &Quat::k();
        let expect = Quat::from_ints(0, 0, 0, -2);
        assert_eq!(u.mul(&v), expect);
        assert_eq!(mul_oracle(&u, &v), expect);
        assert_eq!(u.mul(&Quat::one()), u);
    }

    #[test]
    fn linear_examples() {
        assert_eq!(&Quat::one() - &Quat::i(), Quat::from_ints(1, -1, 0, 0));
        let u = hurwitz(1, 1, -1, 1);
        assert_eq!(&u + &Quat::zero(), u);
        // 2^{-1/2}(1 - i) has norm 1
        let phi = (&Quat::one() - &Quat::i()).scale(&ScalarQ::inv_sqrt2());
        assert_eq!(phi.norm2(), ScalarQ::one());
    }

    #[test]
    fn conj_examples() {
        let q = Quat::from_ints(1, 1, 1, 1);
        assert_eq!(q.conj(), Quat::from_ints(1, -1, -1, -1));
        assert_eq!(q.conj().conj(), q);
        // (i j)* = j* i* = -k
        let lhs = Quat::i().mul(&Quat::j()).conj();
        let rhs = Quat::j().conj().mul(&Quat::i().conj());
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, -&Quat::k());
    }

    #[test]
    fn norm_examples() {
        assert_eq!(hurwitz(1, 1, 1, 1).norm2(), ScalarQ::one());
        assert_eq!(
            Quat::one().scale(&ScalarQ::sqrt2()).norm2(),
            ScalarQ::from_int(2)
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Quat::i().inv().unwrap(), -&Quat::i());
        assert_eq!(Quat::one().inv().unwrap(), Quat::one());
        let w = hurwitz(1, 1, 1, 1);
        assert_eq!(w.inv().unwrap(), hurwitz(1, -1, -1, -1));
        assert!(Quat::zero().inv().is_err());
    }

    #[test]
    fn jordan_examples() {
        let one = Quat::one();
        assert_eq!(jordan_product(&one, &one), one);
        for u in [Quat::i(), Quat::j(), Quat::k()] {
            assert_eq!(jordan_product(&u, &u), -&one);
        }
        assert_eq!(jordan_product(&Quat::i(), &Quat::j()), Quat::zero());
        assert_eq!(jordan_product(&Quat::j(), &Quat::k()), Quat::zero());
        assert_eq!(jordan_product(&Quat::k(), &Quat::i()), Quat::zero());
    }

    #[test]
    fn ratio_examples() {
        let one = Quat::one();
        assert_eq!(
            jordan_ratio(&one, &Quat::j(), RatioConvention::Plain),
            Quat::j()
        );
        assert_eq!(
            jordan_ratio(&one, &Quat::j(), RatioConvention::Star),
            -&Quat::j()
        );
        assert_eq!(
            jordan_ratio(&Quat::i(), &Quat::i(), RatioConvention::Star),
            one
        );
    }

    #[test]
    fn jordan_nonassociative_witness() {
        // {i,{j,j}} = -i but {{i,j},j} = 0
        let lhs = jordan_product(&Quat::i(), &jordan_product(&Quat::j(), &Quat::j()));
        let rhs = jordan_product(&jordan_product(&Quat::i(), &Quat::j()), &Quat::j());
        assert_ne!(lhs, rhs);
        assert_eq!(lhs, -&Quat::i());
        assert_eq!(rhs, Quat::zero());
    }

    #[test]
    fn labels() {
        assert_eq!(Quat::one().label(), "1");
        assert_eq!((-&Quat::i()).label(), "-i");
        assert_eq!(hurwitz(1, -1, -1, -1).label(), "(1-i-j-k)/2");
        let phi = (&Quat::one() - &Quat::i()).scale(&ScalarQ::inv_sqrt2());
        assert_eq!(phi.label(), "(1-i)/\u{221a}2");
        let s2 = Quat::one().scale(&ScalarQ::sqrt2());
        assert_eq!(s2.label(), "\u{221a}2");
        assert_eq!(Quat::from_ints(0, 0, 1, -1).scale(&half()).label(), "(j-k)/2");
        assert_eq!(
            Quat::from_ints(0, -1, -1, 0).scale(&half()).label(),
            "(-i-j)/2"
        );
    }

    fn arb_small_scalar() -> impl Strategy<Value = ScalarQ> {
        ((-8i64..=8, 1i64..=4), (-8i64..=8, 1i64..=4)).prop_map(|((an, ad), (bn, bd))| {
            ScalarQ::new(Rat::new(an, ad).unwrap(), Rat::new(bn, bd).unwrap())
        })
    }

    fn arb_quat() -> impl Strategy<Value = Quat> {
        [
            arb_small_scalar(),
            arb_small_scalar(),
            arb_small_scalar(),
            arb_small_scalar(),
        ]
        .prop_map(Quat::new)
    }

    proptest! {
        #[test]
        fn mul_matches_oracle(u in arb_quat(), v in arb_quat()) {
            prop_assert_eq!(u.mul(&v), mul_oracle(&u, &v));
        }

        #[test]
        fn norm_is_multiplicative(u in arb_quat(), v in arb_quat()) {
            prop_assert_eq!(u.mul(&v).norm2(), &u.norm2() * &v.norm2());
        }

        #[test]
        fn conj_is_antihom(u in arb_quat(), v in arb_quat()) {
            prop_assert_eq!(u.mul(&v).conj(), v.conj().mul(&u.conj()));
        }

        #[test]
        fn ratio_bilinear(u in arb_quat(), u2 in arb_quat(), v in arb_quat()) {
            for conv in RatioConvention::BOTH {
                let lhs = jordan_ratio(&(&u + &u2), &v, conv);
                let rhs = &jordan_ratio(&u, &v, conv) + &jordan_ratio(&u2, &v, conv);
                prop_assert_eq!(lhs, rhs);
                let lhs2 = jordan_ratio(&v, &(&u + &u2), conv);
                let rhs2 = &jordan_ratio(&v, &u, conv) + &jordan_ratio(&v, &u2, conv);
                prop_assert_eq!(lhs2, rhs2);
            }
        }

        #[test]
        fn ratio_conj_transport(u in arb_quat(), v in arb_quat()) {
            for conv in RatioConvention::BOTH {
                prop_assert_eq!(
                    jordan_ratio(&u, &v, conv).conj(),
                    jordan_ratio(&u.conj(), &v.conj(), conv)
                );
            }
        }

        #[test]
        fn corrected_ratio_identity(u in arb_quat(), v in arb_quat()) {
            // {u, v*} = |v|^2 {u, v^{-1}} for v != 0 (the conjugate is
            // |v|^2 v^{-1}, not |v|^{-2} v^{-1})
            if !v.is_zero() {
                let lhs = jordan_product(&u, &v.conj());
                let rhs = jordan_product(&u, &v.inv().unwrap()).scale(&v.norm2());
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
