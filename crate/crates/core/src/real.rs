//! High-precision binary floating point for the transcendental quantities
//! (logarithms of LP optima, Gibbs exponentials, log-based monotones).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::round::mode::HalfAway;
use dashu_float::FBig;
use dashu_int::IBig;
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::rational::Rational;

type Float = FBig<HalfAway, 2>;

/// Working precision in bits (roughly 77 significant decimal digits).
pub const PRECISION_BITS: usize = 256;

#[derive(Clone)]
pub struct Real(Float);

fn to_ibig(n: &BigInt) -> IBig {
    // Both crates speak radix-16 text with a leading '-'.
    IBig::from_str_radix(&n.to_str_radix(16), 16).expect("radix-16 integer")
}

fn to_bigint(n: &IBig) -> BigInt {
    BigInt::parse_bytes(n.in_radix(16).to_string().as_bytes(), 16).expect("radix-16 integer")
}

impl Real {
    fn wrap(x: Float) -> Self {
        Real(x.with_precision(PRECISION_BITS).value())
    }

    pub fn zero() -> Self {
        Real::from_rational(&Rational::zero())
    }

    pub fn one() -> Self {
        Real::from_rational(&Rational::one())
    }

    pub fn from_rational(r: &Rational) -> Self {
        let num = Real::wrap(Float::from(to_ibig(r.numer())));
        let den = Real::wrap(Float::from(to_ibig(r.denom())));
        Real(num.0 / den.0)
    }

    /// Exact for every finite input; `None` for NaN and infinities.
    pub fn from_f64(x: f64) -> Option<Self> {
        Rational::from_f64(x).map(|r| Real::from_rational(&r))
    }

    /// The exact dyadic value of this float.
    pub fn to_rational(&self) -> Rational {
        let (sig, exp) = self.0.repr().clone().into_parts();
        let sig = to_bigint(&sig);
        let two = BigInt::from(2u32);
        let value = if exp >= 0 {
            BigRational::from_integer(sig * two.pow(exp as u32))
        } else {
            BigRational::new(sig, two.pow(exp.unsigned_abs() as u32))
        };
        Rational::from(value)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    /// Natural logarithm; panics on non-positive input.
    pub fn ln(&self) -> Self {
        assert!(self.0 > Float::ZERO, "logarithm of a non-positive number");
        Real(self.0.ln())
    }

    pub fn exp(&self) -> Self {
        Real(self.0.exp())
    }

    /// `self^e` for `self > 0`; `0^e = 0` for `e > 0`.
    pub fn powf(&self, e: &Real) -> Self {
        if self.is_zero() {
            return Real::zero();
        }
        (e * &self.ln()).exp()
    }

    pub fn is_zero(&self) -> bool {
        self.0 == Float::ZERO
    }

    pub fn abs(&self) -> Self {
        if self.0 < Float::ZERO {
            -self
        } else {
            self.clone()
        }
    }

    /// Decimal rendering with `digits` fractional digits.
    pub fn to_decimal(&self, digits: u32) -> String {
        self.to_rational().to_decimal(digits)
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(15) as u32;
        f.write_str(&self.to_decimal(digits))
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({})", self.to_decimal(20))
    }
}

macro_rules! real_binop {
    ($trait:ident, $method:ident) => {
        impl<'a, 'b> $trait<&'b Real> for &'a Real {
            type Output = Real;
            fn $method(self, rhs: &'b Real) -> Real {
                Real((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                Real(self.0.$method(rhs.0))
            }
        }
    };
}

real_binop!(Add, add);
real_binop!(Sub, sub);
real_binop!(Mul, mul);
real_binop!(Div, div);

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0.clone())
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0)
    }
}

impl std::iter::Sum for Real {
    fn sum<I: Iterator<Item = Real>>(iter: I) -> Self {
        iter.fold(Real::zero(), |a, b| a + b)
    }
}
