//! Arbitrary-precision exact rationals.
//!
//! [`Scalar`] is the only number type in the crate: every polynomial
//! coefficient, lattice weight, and report value is one of these. The wrapper
//! keeps the backing `BigRational` in lowest terms with a positive
//! denominator (the backing type guarantees this on construction) and fixes a
//! single textual form, `p/q` with the `/q` dropped when the denominator is
//! one. That form is what the CLI prints and what reports serialize, so
//! `Display` and `FromStr` here are round-trip inverses by construction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct Scalar(BigRational);

/// The four field operations, for callers that dispatch on an operation tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies one field operation; division by zero is the only failure.
pub fn field_ops(a: &Scalar, b: &Scalar, op: FieldOp) -> Result<Scalar> {
    match op {
        FieldOp::Add => Ok(a + b),
        FieldOp::Sub => Ok(a - b),
        FieldOp::Mul => Ok(a * b),
        FieldOp::Div => a.checked_div(b),
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `num/den` exactly; fails on a zero denominator.
    pub fn from_fraction(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        )))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(&self.0 / &rhs.0))
    }

    pub fn inv(&self) -> Result<Scalar> {
        Scalar::one().checked_div(self)
    }

    /// Nonnegative integer power; `x^0 = 1` including for `x = 0`.
    pub fn powu(&self, exp: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..exp {
            acc *= self;
        }
        acc
    }

    /// Integer power; negative exponents of zero fail.
    pub fn powi(&self, exp: i64) -> Result<Scalar> {
        if exp >= 0 {
            let e = u32::try_from(exp)
                .map_err(|_| Error::InvalidInput(format!("exponent {exp} out of range")))?;
            Ok(self.powu(e))
        } else {
            let e = u32::try_from(-exp)
                .map_err(|_| Error::InvalidInput(format!("exponent {exp} out of range")))?;
            self.powu(e).inv()
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Parses `p` or `p/q` with optional leading sign on `p`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("not a rational: `{s}`"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
        let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(BigRational::new(num, den)))
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64, d: i64) -> Scalar {
        Scalar::from_fraction(n, d).unwrap()
    }

    #[test]
    fn basic_field_ops() {
        assert_eq!(
            field_ops(&s(1, 2), &s(1, 3), FieldOp::Add).unwrap(),
            s(5, 6)
        );
        assert_eq!(
            field_ops(&s(1, 2), &s(1, 3), FieldOp::Sub).unwrap(),
            s(1, 6)
        );
        assert_eq!(
            field_ops(&s(2, 3), &s(3, 4), FieldOp::Mul).unwrap(),
            s(1, 2)
        );
        assert_eq!(
            field_ops(&s(2, 3), &s(4, 3), FieldOp::Div).unwrap(),
            s(1, 2)
        );
    }

    #[test]
    fn multiplication_by_zero_annihilates() {
        for x in [s(7, 3), s(-5, 11), Scalar::zero(), Scalar::one()] {
            assert!(field_ops(&x, &Scalar::zero(), FieldOp::Mul)
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            field_ops(&s(2, 3), &Scalar::zero(), FieldOp::Div),
            Err(Error::DivisionByZero)
        );
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_lowest_terms() {
        assert_eq!(s(2, 4).to_string(), "1/2");
        assert_eq!(s(-2, 4).to_string(), "-1/2");
        assert_eq!(s(2, -4).to_string(), "-1/2");
        assert_eq!(s(6, 3).to_string(), "2");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    #[test]
    fn parse_round_trip() {
        for text in ["0", "1", "-1", "5/6", "-22/7", "97"] {
            let v: Scalar = text.parse().unwrap();
            assert_eq!(v.to_string(), text);
        }
        assert_eq!("4/6".parse::<Scalar>().unwrap(), s(2, 3));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("a/2".parse::<Scalar>().is_err());
        assert!("".parse::<Scalar>().is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(s(2, 3).powu(3), s(8, 27));
        assert_eq!(s(2, 3).powu(0), Scalar::one());
        assert_eq!(Scalar::zero().powu(0), Scalar::one());
        assert_eq!(s(2, 1).powi(-2).unwrap(), s(1, 4));
        assert!(Scalar::zero().powi(-1).is_err());
    }
}
