use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{LaurentScalar, Rational};
use crate::error::{Error, Result};

/// Element of the fraction field of [`LaurentScalar`].
///
/// Values are kept reduced (numerator and denominator coprime, denominator
/// normalized by a unit), but equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct RatScalar {
    num: LaurentScalar,
    den: LaurentScalar,
}

impl RatScalar {
    pub fn new(num: LaurentScalar, den: LaurentScalar) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self { num, den }.reduced())
    }

    pub fn zero() -> Self {
        LaurentScalar::zero().into()
    }

    pub fn one() -> Self {
        LaurentScalar::one().into()
    }

    pub fn numer(&self) -> &LaurentScalar {
        &self.num
    }

    pub fn denom(&self) -> &LaurentScalar {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduced(self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let g = self.num.gcd(&self.den);
        let (num, den) = if g.is_one() {
            (self.num, self.den)
        } else {
            (self.num.div_exact(&g).unwrap(), self.den.div_exact(&g).unwrap())
        };
        let (den, unit) = den.normalize_unit();
        let inv = unit.unit_inverse().unwrap();
        Self { num: &num * &inv, den }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    /// Evaluates at `q = c`; fails if `c = 0` or the denominator vanishes there.
    pub fn specialize(&self, c: &Rational) -> Result<Rational> {
        let d = self.den.specialize(c)?;
        if num_traits::Zero::is_zero(&d) {
            return Err(Error::DenominatorVanishes(c.to_string()));
        }
        Ok(self.num.specialize(c)? / d)
    }
}

impl From<LaurentScalar> for RatScalar {
    fn from(num: LaurentScalar) -> Self {
        Self { num, den: LaurentScalar::one() }
    }
}

impl PartialEq for RatScalar {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatScalar {}

impl Add for &RatScalar {
    type Output = RatScalar;
    fn add(self, rhs: &RatScalar) -> RatScalar {
        if self.den == rhs.den {
            return RatScalar { num: &self.num + &rhs.num, den: self.den.clone() }.reduced();
        }
        RatScalar {
            num: &self.num * &rhs.den + &rhs.num * &self.den,
            den: &self.den * &rhs.den,
        }
        .reduced()
    }
}

impl Sub for &RatScalar {
    type Output = RatScalar;
    fn sub(self, rhs: &RatScalar) -> RatScalar {
        self + &(-rhs)
    }
}

impl Mul for &RatScalar {
    type Output = RatScalar;
    fn mul(self, rhs: &RatScalar) -> RatScalar {
        RatScalar { num: &self.num * &rhs.num, den: &self.den * &rhs.den }.reduced()
    }
}

impl Neg for &RatScalar {
    type Output = RatScalar;
    fn neg(self) -> RatScalar {
        RatScalar { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RatScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatScalar({self})")
    }
}
