//! Exact rational numbers for weights, cycle lengths and scaffold weights.
//!
//! Filtration steps and draw detection depend on exact equality of weights,
//! so weights are never compared as floats. Decimal input is converted
//! exactly, and so are `f64` values (every finite double is a dyadic rational).

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(Ratio<i128>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    pub fn new(numer: i128, denom: i128) -> Self {
        Rational(Ratio::new(numer, denom))
    }

    pub fn from_integer(n: i128) -> Self {
        Rational(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        *self.0.numer() < 0
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact decimal expansion when it terminates within 30 significant
    /// digits, otherwise the shortest round-trip `f64` representation.
    pub fn to_decimal_string(&self) -> String {
        let (mut n, mut d) = (self.numer(), self.denom());
        let mut twos = 0u32;
        let mut fives = 0u32;
        while d % 2 == 0 {
            d /= 2;
            twos += 1;
        }
        while d % 5 == 0 {
            d /= 5;
            fives += 1;
        }
        let places = twos.max(fives);
        if d != 1 || places > 30 {
            return format!("{}", self.to_f64());
        }
        let scale = 10i128.checked_pow(places);
        let Some(scaled) = scale.and_then(|s| n.checked_mul(s / self.denom())) else {
            return format!("{}", self.to_f64());
        };
        n = scaled;
        let negative = n < 0;
        let digits = n.unsigned_abs().to_string();
        let places = places as usize;
        let (int_part, frac_part) = if digits.len() > places {
            let (i, f) = digits.split_at(digits.len() - places);
            (i.to_string(), f.to_string())
        } else {
            (
                "0".to_string(),
                format!("{}{}", "0".repeat(places - digits.len()), digits),
            )
        };
        let frac_part = frac_part.trim_end_matches('0');
        let sign = if negative { "-" } else { "" };
        if frac_part.is_empty() {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        }
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        let (a, b) = (&self.0, &other.0);
        let lcm = a
            .denom()
            .checked_mul(b.denom() / a.denom().gcd(b.denom()))?;
        let lhs = a.numer().checked_mul(lcm / a.denom())?;
        let rhs = b.numer().checked_mul(lcm / b.denom())?;
        Some(Rational(Ratio::new(lhs.checked_add(rhs)?, lcm)))
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.checked_add(&Rational(-other.0))
    }

    /// Exact conversion of a finite double. Fails for NaN, infinities and
    /// values whose dyadic denominator does not fit in 120 bits.
    pub fn from_f64(x: f64) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::Unrepresentable(x.to_string()));
        }
        if x == 0.0 {
            return Ok(Rational::ZERO);
        }
        let bits = x.to_bits();
        let negative = bits >> 63 == 1;
        let exponent = ((bits >> 52) & 0x7ff) as i32;
        let fraction = bits & ((1u64 << 52) - 1);
        let (mantissa, exp) = if exponent == 0 {
            (fraction, -1074)
        } else {
            (fraction | (1u64 << 52), exponent - 1075)
        };
        let tz = mantissa.trailing_zeros() as i32;
        let mantissa = (mantissa >> tz) as i128;
        let exp = exp + tz;
        let value = if exp >= 0 {
            if exp > 70 {
                return Err(Error::Unrepresentable(x.to_string()));
            }
            Ratio::from_integer(mantissa << exp)
        } else {
            if -exp > 120 {
                return Err(Error::Unrepresentable(x.to_string()));
            }
            Ratio::new_raw(mantissa, 1i128 << (-exp))
        };
        Ok(Rational(if negative { -value } else { value }))
    }

    /// Parses `[-]digits[.digits][e[+-]digits]` exactly.
    pub fn parse_decimal(s: &str) -> Result<Self> {
        let bad = || Error::Unrepresentable(s.to_string());
        let s = s.trim();
        let (mantissa, exponent) = match s.find(['e', 'E']) {
            Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
            None => (s, 0),
        };
        let (negative, mantissa) = match mantissa.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
        };
        let (int_part, frac_part) = match mantissa.split_once('.') {
            Some((i, f)) => (i, f),
            None => (mantissa, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part
            .bytes()
            .chain(frac_part.bytes())
            .all(|b| b.is_ascii_digit())
        {
            return Err(bad());
        }
        let mut numer: i128 = 0;
        for b in int_part.bytes().chain(frac_part.bytes()) {
            numer = numer
                .checked_mul(10)
                .and_then(|n| n.checked_add((b - b'0') as i128))
                .ok_or_else(bad)?;
        }
        let scale = exponent - frac_part.len() as i32;
        let pow10 = |k: u32| 10i128.checked_pow(k).ok_or_else(bad);
        let value = if scale >= 0 {
            Ratio::from_integer(numer.checked_mul(pow10(scale as u32)?).ok_or_else(bad)?)
        } else {
            Ratio::new(numer, pow10((-scale) as u32)?)
        };
        Ok(Rational(if negative { -value } else { value }))
    }
}

impl From<i128> for Rational {
    fn from(n: i128) -> Self {
        Rational::from_integer(n)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts decimals (see [`Rational::parse_decimal`]) and `n/d` fractions.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().split_once('/') {
            Some((n, d)) => {
                let bad = || Error::Unrepresentable(s.to_string());
                let n: i128 = n.trim().parse().map_err(|_| bad())?;
                let d: i128 = d.trim().parse().map_err(|_| bad())?;
                if d == 0 {
                    return Err(bad());
                }
                Ok(Rational::new(n, d))
            }
            None => Rational::parse_decimal(s),
        }
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Self) -> Self {
        Rational(self.0 + rhs.0)
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Self) {
        self.0 += rhs.0;
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Self) -> Self {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Self) -> Self {
        Rational(self.0 * rhs.0)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Self) -> Self {
        Rational(self.0 / rhs.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::ZERO, |a, b| a + b)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Integer view of a family of non-negative rationals on a common
/// denominator, so path and cycle lengths can be summed as plain integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TickScale {
    denom: i128,
}

impl TickScale {
    pub fn for_values<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Result<Self> {
        let mut denom: i128 = 1;
        for v in values {
            let d = v.denom();
            denom = denom
                .checked_mul(d / denom.gcd(&d))
                .ok_or(Error::Overflow)?;
        }
        Ok(TickScale { denom })
    }

    pub fn denom(&self) -> i128 {
        self.denom
    }

    pub fn ticks(&self, v: &Rational) -> Result<i128> {
        v.numer()
            .checked_mul(self.denom / v.denom())
            .ok_or(Error::Overflow)
    }

    pub fn to_rational(&self, ticks: i128) -> Rational {
        Rational::new(ticks, self.denom)
    }
}
