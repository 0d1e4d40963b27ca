//! The three-strand braid group: words over two generators a, b subject
//! to aba = bab, with exact word equality decided through the reduced
//! Burau representation
//!
//!   a -> [[-t, 1], [0, 1]],   b -> [[1, 0], [t, -t]]
//!
//! over integer Laurent polynomials. Faithfulness of the reduced Burau
//! representation on three strands is a classical fact; `braid_equal`
//! relies on it, and the finitely verifiable consequences (the braid
//! relation, centrality of the full twist, the evaluation at t = -1
//! onto determinant-one integer matrices) are checked directly.
//! Evaluating at t = -1 sends a and b^{-1} to the standard unipotent
//! generators [[1,1],[0,1]] and [[1,0],[1,1]].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::Perm;
use crate::scalar::bigint_json;

/// One letter of a braid word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    A,
    AInv,
    B,
    BInv,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        match self {
            Letter::A => Letter::AInv,
            Letter::AInv => Letter::A,
            Letter::B => Letter::BInv,
            Letter::BInv => Letter::B,
        }
    }

    fn to_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::AInv => 'A',
            Letter::B => 'b',
            Letter::BInv => 'B',
        }
    }
}

/// A freely reduced word over {a, a^-1, b, b^-1}.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BraidWord {
    letters: Vec<Letter>,
}

impl BraidWord {
    /// Builds a word, removing adjacent inverse pairs.
    pub fn new(letters: Vec<Letter>) -> Self {
        let mut reduced: Vec<Letter> = Vec::with_capacity(letters.len());
        for l in letters {
            if reduced.last() == Some(&l.inverse()) {
                reduced.pop();
            } else {
                reduced.push(l);
            }
        }
        BraidWord { letters: reduced }
    }

    pub fn empty() -> Self {
        BraidWord::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().copied());
        BraidWord::new(letters)
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord::new(self.letters.iter().rev().map(|l| l.inverse()).collect())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("(empty)");
        }
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

/// Parses a braid word in compact notation (aAbB) or caret notation
/// (a^-1 b a), with optional whitespace. Token positions are 1-based.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let chars: Vec<char> = text.chars().collect();
    let mut letters = Vec::new();
    let mut pos = 0usize;
    let mut token = 0usize;
    while pos < chars.len() {
        if chars[pos].is_whitespace() {
            pos += 1;
            continue;
        }
        token += 1;
        let base = match chars[pos] {
            'a' => Letter::A,
            'A' => Letter::AInv,
            'b' => Letter::B,
            'B' => Letter::BInv,
            _ => return Err(Error::BraidSyntax { token }),
        };
        pos += 1;
        if pos < chars.len() && chars[pos] == '^' {
            pos += 1;
            let negative = if pos < chars.len() && chars[pos] == '-' {
                pos += 1;
                true
            } else {
                false
            };
            if pos >= chars.len() || chars[pos] != '1' {
                return Err(Error::BraidSyntax { token });
            }
            pos += 1;
            letters.push(if negative { base.inverse() } else { base });
        } else {
            letters.push(base);
        }
    }
    Ok(BraidWord::new(letters))
}

/// ((aba)^2)^k; negative k gives the freely reduced inverse word.
pub fn full_twist(k: i64) -> BraidWord {
    use Letter::{A, B};
    let base = BraidWord::new(vec![A, B, A, A, B, A]);
    let base = if k < 0 { base.inverse() } else { base };
    let mut out = BraidWord::empty();
    for _ in 0..k.unsigned_abs() {
        out = out.concat(&base);
    }
    out
}

/// Integer Laurent polynomial: finitely supported exponent-to-coefficient
/// map storing no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(exp, BigInt::from(coeff));
        }
        LaurentPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = self.coeffs.clone();
        for (&e, c) in &other.coeffs {
            let entry = coeffs.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &other.coeffs {
                let entry = coeffs.entry(e1 + e2).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }

    /// Evaluation at t = 1 or t = -1 (the only points used); these are
    /// units, so negative exponents evaluate exactly.
    pub fn eval_at_unit(&self, t: i64) -> BigInt {
        assert!(t == 1 || t == -1, "evaluation point must be a unit");
        let mut acc = BigInt::zero();
        for (&e, c) in &self.coeffs {
            let negative = t == -1 && e.rem_euclid(2) == 1;
            if negative {
                acc -= c;
            } else {
                acc += c;
            }
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        let pairs: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(&e, c)| json!([e, bigint_json(c)]))
            .collect();
        Value::Array(pairs)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&e, c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let mag = c.magnitude();
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if !mag.is_one() || e == 0 {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

/// 2x2 matrix of Laurent polynomials, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMat {
    pub entries: [LaurentPoly; 4],
}

impl LaurentMat {
    pub fn identity() -> Self {
        LaurentMat {
            entries: [
                LaurentPoly::one(),
                LaurentPoly::zero(),
                LaurentPoly::zero(),
                LaurentPoly::one(),
            ],
        }
    }

    pub fn mul(&self, other: &LaurentMat) -> LaurentMat {
        let [a, b, c, d] = &self.entries;
        let [e, f, g, h] = &other.entries;
        LaurentMat {
            entries: [
                a.mul(e).add(&b.mul(g)),
                a.mul(f).add(&b.mul(h)),
                c.mul(e).add(&d.mul(g)),
                c.mul(f).add(&d.mul(h)),
            ],
        }
    }

    pub fn det(&self) -> LaurentPoly {
        let [a, b, c, d] = &self.entries;
        let neg_bc = b.mul(c).mul(&LaurentPoly::monomial(-1, 0));
        a.mul(d).add(&neg_bc)
    }

    pub fn eval_at_unit(&self, t: i64) -> IntMat {
        IntMat {
            entries: [
                self.entries[0].eval_at_unit(t),
                self.entries[1].eval_at_unit(t),
                self.entries[2].eval_at_unit(t),
                self.entries[3].eval_at_unit(t),
            ],
        }
    }

    pub fn to_json(&self) -> Value {
        json!([
            [self.entries[0].to_json(), self.entries[1].to_json()],
            [self.entries[2].to_json(), self.entries[3].to_json()],
        ])
    }
}

impl fmt::Display for LaurentMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.entries[0], self.entries[1], self.entries[2], self.entries[3]
        )
    }
}

/// 2x2 exact-integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMat {
    pub entries: [BigInt; 4],
}

impl IntMat {
    pub fn identity() -> Self {
        IntMat {
            entries: [
                BigInt::one(),
                BigInt::zero(),
                BigInt::zero(),
                BigInt::one(),
            ],
        }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        IntMat {
            entries: [a.into(), b.into(), c.into(), d.into()],
        }
    }

    pub fn neg(&self) -> IntMat {
        IntMat {
            entries: [
                -&self.entries[0],
                -&self.entries[1],
                -&self.entries[2],
                -&self.entries[3],
            ],
        }
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        let [a, b, c, d] = &self.entries;
        let [e, f, g, h] = &other.entries;
        IntMat {
            entries: [a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h],
        }
    }

    pub fn det(&self) -> BigInt {
        let [a, b, c, d] = &self.entries;
        a * d - b * c
    }

    /// Reduction mod p as a catalog-compatible matrix over F_p.
    pub fn mod_p(&self, p: u8) -> crate::group::Mat2Fp {
        let pp = BigInt::from(p);
        let red = |x: &BigInt| -> u8 {
            let m = ((x % &pp) + &pp) % &pp;
            let digits = m.to_u32_digits().1;
            digits.first().copied().unwrap_or(0) as u8
        };
        crate::group::Mat2Fp::new(
            p,
            [
                red(&self.entries[0]),
                red(&self.entries[1]),
                red(&self.entries[2]),
                red(&self.entries[3]),
            ],
        )
    }

    pub fn to_json(&self) -> Value {
        json!([
            [bigint_json(&self.entries[0]), bigint_json(&self.entries[1])],
            [bigint_json(&self.entries[2]), bigint_json(&self.entries[3])],
        ])
    }
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.entries[0], self.entries[1], self.entries[2], self.entries[3]
        )
    }
}

fn generator_image(l: Letter) -> LaurentMat {
    let p = LaurentPoly::monomial;
    let m = |e: [LaurentPoly; 4]| LaurentMat { entries: e };
    match l {
        // a -> [[-t, 1], [0, 1]]
        Letter::A => m([p(-1, 1), p(1, 0), p(0, 0), p(1, 0)]),
        // a^-1 -> [[-t^-1, t^-1], [0, 1]]
        Letter::AInv => m([p(-1, -1), p(1, -1), p(0, 0), p(1, 0)]),
        // b -> [[1, 0], [t, -t]]
        Letter::B => m([p(1, 0), p(0, 0), p(1, 1), p(-1, 1)]),
        // b^-1 -> [[1, 0], [1, -t^-1]]
        Letter::BInv => m([p(1, 0), p(0, 0), p(1, 0), p(-1, -1)]),
    }
}

/// The reduced Burau matrix of a word: the product of the generator
/// images.
pub fn burau(word: &BraidWord) -> LaurentMat {
    let mut acc = LaurentMat::identity();
    for &l in word.letters() {
        acc = acc.mul(&generator_image(l));
    }
    acc
}

/// Exact word equality in B_3, via equality of reduced Burau matrices.
pub fn braid_equal(w1: &BraidWord, w2: &BraidWord) -> bool {
    burau(w1) == burau(w2)
}

/// The image in Sl2(Z): the Burau matrix evaluated at t = -1.
pub fn sl2_image(word: &BraidWord) -> IntMat {
    burau(word).eval_at_unit(-1)
}

/// The underlying permutation of the three strands: a -> (1 2),
/// b -> (2 3), extended along the word.
pub fn braid_permutation(word: &BraidWord) -> Perm {
    let a = Perm::transposition(3, 0, 1);
    let b = Perm::transposition(3, 1, 2);
    let mut acc = Perm::identity(3);
    for &l in word.letters() {
        let gen = match l {
            Letter::A | Letter::AInv => &a,
            Letter::B | Letter::BInv => &b,
        };
        acc = crate::group::ConcreteElement::compose(&acc, gen);
    }
    acc
}
