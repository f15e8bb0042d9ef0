//! Base-field scalars: arbitrary-precision rationals or `f64`.
//!
//! Every algebra fixes one mode at construction; elements never mix modes.

use crate::error::{CdError, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarMode {
    Rational,
    F64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Q(BigRational),
    F(f64),
}

impl Scalar {
    pub fn zero(mode: ScalarMode) -> Self {
        match mode {
            ScalarMode::Rational => Scalar::Q(BigRational::zero()),
            ScalarMode::F64 => Scalar::F(0.0),
        }
    }

    pub fn one(mode: ScalarMode) -> Self {
        match mode {
            ScalarMode::Rational => Scalar::Q(BigRational::one()),
            ScalarMode::F64 => Scalar::F(1.0),
        }
    }

    pub fn from_i64(v: i64, mode: ScalarMode) -> Self {
        match mode {
            ScalarMode::Rational => Scalar::Q(BigRational::from(BigInt::from(v))),
            ScalarMode::F64 => Scalar::F(v as f64),
        }
    }

    pub fn from_ratio(p: i64, q: i64, mode: ScalarMode) -> Self {
        match mode {
            ScalarMode::Rational => Scalar::Q(BigRational::new(BigInt::from(p), BigInt::from(q))),
            ScalarMode::F64 => Scalar::F(p as f64 / q as f64),
        }
    }

    pub fn mode(&self) -> ScalarMode {
        match self {
            Scalar::Q(_) => ScalarMode::Rational,
            Scalar::F(_) => ScalarMode::F64,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::F(f) => *f == 0.0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Q(q) => q.to_f64().unwrap_or(f64::NAN),
            Scalar::F(f) => *f,
        }
    }

    pub fn abs_f64(&self) -> f64 {
        match self {
            Scalar::Q(q) => q.abs().to_f64().unwrap_or(f64::INFINITY),
            Scalar::F(f) => f.abs(),
        }
    }

    pub fn recip(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(CdError::IsotropicNorm);
        }
        Ok(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::F(f) => Scalar::F(1.0 / f),
        })
    }

    /// Parse an integer, a fraction `p/q`, or (float mode only) a decimal.
    pub fn parse(text: &str, mode: ScalarMode) -> Result<Scalar> {
        let text = text.trim();
        let err = |msg: &str| CdError::Parse {
            pos: 0,
            msg: format!("{msg}: {text:?}"),
        };
        match mode {
            ScalarMode::Rational => {
                if let Some((p, q)) = text.split_once('/') {
                    let p: BigInt = p.trim().parse().map_err(|_| err("bad numerator"))?;
                    let q: BigInt = q.trim().parse().map_err(|_| err("bad denominator"))?;
                    if q.is_zero() {
                        return Err(err("zero denominator"));
                    }
                    Ok(Scalar::Q(BigRational::new(p, q)))
                } else {
                    let n: BigInt = text.parse().map_err(|_| err("bad integer"))?;
                    Ok(Scalar::Q(BigRational::from(n)))
                }
            }
            ScalarMode::F64 => {
                if let Some((p, q)) = text.split_once('/') {
                    let p: f64 = p.trim().parse().map_err(|_| err("bad numerator"))?;
                    let q: f64 = q.trim().parse().map_err(|_| err("bad denominator"))?;
                    if q == 0.0 {
                        return Err(err("zero denominator"));
                    }
                    Ok(Scalar::F(p / q))
                } else {
                    let f: f64 = text.parse().map_err(|_| err("bad number"))?;
                    Ok(Scalar::F(f))
                }
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::F(x) => write!(f, "{x}"),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a $op b),
                    (Scalar::F(a), Scalar::F(b)) => Scalar::F(a $op b),
                    _ => panic!("mixed scalar modes"),
                }
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);
scalar_binop!(Div, div, /);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(q) => Scalar::Q(-q),
            Scalar::F(f) => Scalar::F(-f),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rational_forms() {
        let half = Scalar::parse("1/2", ScalarMode::Rational).unwrap();
        assert_eq!(half, Scalar::from_ratio(1, 2, ScalarMode::Rational));
        let neg = Scalar::parse("-3", ScalarMode::Rational).unwrap();
        assert_eq!(neg, Scalar::from_i64(-3, ScalarMode::Rational));
        assert!(Scalar::parse("1/0", ScalarMode::Rational).is_err());
        assert!(Scalar::parse("0.5", ScalarMode::Rational).is_err());
    }

    #[test]
    fn parse_float_forms() {
        assert_eq!(Scalar::parse("0.5", ScalarMode::F64).unwrap(), Scalar::F(0.5));
        assert_eq!(Scalar::parse("1/2", ScalarMode::F64).unwrap(), Scalar::F(0.5));
    }

    #[test]
    fn arithmetic_roundtrip() {
        let a = Scalar::from_ratio(2, 3, ScalarMode::Rational);
        let b = Scalar::from_ratio(3, 2, ScalarMode::Rational);
        assert_eq!(&a * &b, Scalar::one(ScalarMode::Rational));
        assert_eq!(a.recip().unwrap(), b);
    }
}
