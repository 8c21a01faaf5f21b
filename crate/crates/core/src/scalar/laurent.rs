use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::{parse_rational, poly, Rational};
use crate::error::{Error, Result};

/// A Laurent polynomial `sum c_k q^k` with exact rational coefficients.
///
/// Zero coefficients are never stored, so the zero scalar is the empty map and
/// derived equality is equality of values.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentScalar {
    terms: BTreeMap<i32, Rational>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The parameter `q` itself.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q^k`.
    pub fn q_pow(k: i32) -> Self {
        Self::monomial(Rational::one(), k)
    }

    /// `c * q^k`.
    pub fn monomial(c: Rational, k: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(super::integer(c))
    }

    /// `(-q)^k`, the sign convention of quantum determinants.
    pub fn neg_q_pow(k: i32) -> Self {
        let s = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::monomial(super::integer(s), k)
    }

    /// `q - q^{-1}`.
    pub fn q_minus_q_inv() -> Self {
        Self::q() - Self::q_pow(-1)
    }

    /// Builds a scalar from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    fn add_term(&mut self, k: i32, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &Rational)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, k: i32) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power of `q`.
    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    /// If this is a single term `c q^k`, returns `(c, k)`.
    pub fn as_monomial(&self) -> Option<(&Rational, i32)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(&k, c)| (c, k))
        } else {
            None
        }
    }

    /// Units of the Laurent ring are exactly the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.as_monomial().is_some()
    }

    /// Inverse of a unit, `None` otherwise.
    pub fn unit_inverse(&self) -> Option<Self> {
        let (c, k) = self.as_monomial()?;
        Some(Self::monomial(c.recip(), -k))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at `q = c`. `q` is invertible, so `c = 0` is rejected.
    pub fn specialize(&self, c: &Rational) -> Result<Rational> {
        if c.is_zero() {
            return Err(Error::ZeroSpecialization);
        }
        let mut acc = Rational::zero();
        for (&k, v) in &self.terms {
            acc += v * pow_rational(c, k);
        }
        Ok(acc)
    }

    // Coefficients of q^{-min_exp} * self, low degree first.
    fn to_dense(&self) -> (i32, Vec<Rational>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut v = vec![Rational::zero(); (hi - lo) as usize + 1];
        for (&k, c) in &self.terms {
            v[(k - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    fn from_dense(shift: i32, v: &[Rational]) -> Self {
        Self::from_terms(v.iter().enumerate().map(|(i, c)| (shift + i as i32, c.clone())))
    }

    /// Greatest common divisor up to units: a monic polynomial in `q` with
    /// nonzero constant term. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() && other.is_zero() {
            return Self::zero();
        }
        if self.is_unit() || other.is_unit() {
            return Self::one();
        }
        let (_, a) = self.to_dense();
        let (_, b) = other.to_dense();
        Self::from_dense(0, &poly::gcd(&a, &b))
    }

    /// `self / d` when the quotient is again a Laurent polynomial.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(inv) = d.unit_inverse() {
            return Some(self * &inv);
        }
        let (sa, a) = self.to_dense();
        let (sd, b) = d.to_dense();
        let (quot, rem) = poly::div_rem(&a, &b);
        if !rem.is_empty() {
            return None;
        }
        Some(Self::from_dense(sa - sd, &quot))
    }

    /// Scales by a unit so that the lowest exponent is 0 and the leading
    /// coefficient is 1. Returns the normalized scalar and the unit divided out.
    pub fn normalize_unit(&self) -> (Self, Self) {
        match (self.min_exp(), self.leading_coeff()) {
            (Some(lo), Some(lead)) => {
                let unit = Self::monomial(lead.clone(), lo);
                (self.shift(-lo).scale(&lead.recip()), unit)
            }
            _ => (Self::zero(), Self::one()),
        }
    }
}

fn pow_rational(c: &Rational, k: i32) -> Rational {
    let base = if k < 0 { c.recip() } else { c.clone() };
    num_traits::pow(base, k.unsigned_abs() as usize)
}

impl From<Rational> for LaurentScalar {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for LaurentScalar {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl AddAssign<&LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, rhs: &LaurentScalar) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, c.clone());
        }
    }
}

impl SubAssign<&LaurentScalar> for LaurentScalar {
    fn sub_assign(&mut self, rhs: &LaurentScalar) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, -c.clone());
        }
    }
}

impl Add for &LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar { terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentScalar {
            type Output = LaurentScalar;
            fn $f(self, rhs: LaurentScalar) -> LaurentScalar {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&LaurentScalar> for LaurentScalar {
            type Output = LaurentScalar;
            fn $f(self, rhs: &LaurentScalar) -> LaurentScalar {
                (&self).$f(rhs)
            }
        }
        impl $tr<LaurentScalar> for &LaurentScalar {
            type Output = LaurentScalar;
            fn $f(self, rhs: LaurentScalar) -> LaurentScalar {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -&self
    }
}

/// Canonical text form: `<rational>*q^<int>` terms, exponents descending,
/// e.g. `1*q^2 - 1*q^-2`. Zero prints as `0`.
impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (&k, c)) in self.terms.iter().rev().enumerate() {
            if n == 0 {
                write!(f, "{c}*q^{k}")?;
            } else if c.is_negative() {
                write!(f, " - {}*q^{k}", -c)?;
            } else {
                write!(f, " + {c}*q^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentScalar({self})")
    }
}

/// Parses the canonical text form. Whitespace is insignificant; term order
/// and repeated exponents are accepted.
impl FromStr for LaurentScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidScalar(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(Self::zero());
        }
        if compact.is_empty() {
            return Err(bad());
        }
        // split into signed terms; a '-' right after '^' belongs to an exponent
        let bytes = compact.as_bytes();
        let mut pieces = Vec::new();
        let mut start = 0;
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);
        let mut out = Self::zero();
        for piece in pieces {
            let (neg, body) = match piece.as_bytes().first() {
                Some(b'-') => (true, &piece[1..]),
                Some(b'+') => (false, &piece[1..]),
                _ => (false, piece),
            };
            let (coeff, exp) = match body.split_once("*q^") {
                Some((c, e)) => (parse_rational(c).ok_or_else(bad)?, e.parse::<i32>().map_err(|_| bad())?),
                None => (parse_rational(body).ok_or_else(bad)?, 0),
            };
            out.add_term(exp, if neg { -coeff } else { coeff });
        }
        Ok(out)
    }
}

impl serde::Serialize for LaurentScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for LaurentScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
