//! Exact rational numbers.
//!
//! Every parameter and every derived constant is carried as a reduced
//! fraction so that property verdicts never depend on floating point.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::Error;

/// A reduced fraction with a positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(Ratio<i128>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    /// Builds `num/den` in lowest terms.
    ///
    /// Panics if `den == 0`.
    pub fn new(num: i128, den: i128) -> Self {
        Rational(Ratio::new(num, den))
    }

    pub fn integer(n: i128) -> Self {
        Rational(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn floor(&self) -> i128 {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> i128 {
        self.0.ceil().to_integer()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n as i128)
    }
}

impl From<usize> for Rational {
    fn from(n: usize) -> Self {
        Rational::integer(n as i128)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }

        impl $trait<i128> for Rational {
            type Output = Rational;
            fn $method(self, rhs: i128) -> Rational {
                Rational(self.0.$method(Ratio::from_integer(rhs)))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::ZERO, |acc, x| acc + x)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_int(s: &str, offset: usize) -> Result<i128, Error> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse {
            offset,
            message: format!("expected digits, found {s:?}"),
        });
    }
    s.parse::<i128>().map_err(|e| Error::Parse {
        offset,
        message: e.to_string(),
    })
}

/// Accepts `a/b`, integers and finite decimals (`1.5` is exactly 3/2).
impl FromStr for Rational {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        let s = text.trim();
        let (negative, body, start) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..], 1),
            Some(b'+') => (false, &s[1..], 1),
            _ => (false, s, 0),
        };
        let value = if let Some((num, den)) = body.split_once('/') {
            let n = parse_int(num.trim(), start)?;
            let d = parse_int(den.trim(), start + num.len() + 1)?;
            if d == 0 {
                return Err(Error::Parse {
                    offset: start + num.len() + 1,
                    message: "zero denominator".into(),
                });
            }
            Rational::new(n, d)
        } else if let Some((int, frac)) = body.split_once('.') {
            let i = if int.is_empty() { 0 } else { parse_int(int, start)? };
            if frac.is_empty() && int.is_empty() {
                return Err(Error::Parse {
                    offset: start,
                    message: "empty number".into(),
                });
            }
            let f = if frac.is_empty() { 0 } else { parse_int(frac, start + int.len() + 1)? };
            let scale = 10i128
                .checked_pow(frac.len() as u32)
                .ok_or_else(|| Error::Parse {
                    offset: start + int.len() + 1,
                    message: "too many decimal digits".into(),
                })?;
            Rational::new(i * scale + f, scale)
        } else {
            Rational::integer(parse_int(body, start)?)
        };
        Ok(if negative { -value } else { value })
    }
}

/// Serialized as `{"num": .., "den": .., "decimal": ..}`.
impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Rational", 3)?;
        st.serialize_field("num", &self.numer())?;
        st.serialize_field("den", &self.denom())?;
        st.serialize_field("decimal", &self.to_f64())?;
        st.end()
    }
}
