//! Exact rational coordinates.
//!
//! Coordinates are parsed from decimal literals (`"-6.35"`), integers, or
//! fractions (`"7/3"`) without ever passing through floating point.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coord(BigRational);

impl Coord {
    pub fn new(numer: i64, denom: i64) -> Coord {
        Coord(BigRational::new(numer.into(), denom.into()))
    }

    pub fn int(v: i64) -> Coord {
        Coord(BigRational::from_integer(v.into()))
    }

    pub fn zero() -> Coord {
        Coord(BigRational::zero())
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Integer value if the coordinate is integral and fits in an `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    /// Lossy conversion, for rendering only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn add(&self, other: &Coord) -> Coord {
        Coord(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &Coord) -> Coord {
        Coord(&self.0 - &other.0)
    }

    pub fn mul(&self, other: &Coord) -> Coord {
        Coord(&self.0 * &other.0)
    }

    pub fn neg(&self) -> Coord {
        Coord(-&self.0)
    }

    /// Terminating decimal expansion, if the denominator has only 2 and 5 as
    /// prime factors.
    fn decimal_string(&self) -> Option<String> {
        let mut denom = self.0.denom().clone();
        let two = BigInt::from(2);
        let five = BigInt::from(5);
        let (mut twos, mut fives) = (0u32, 0u32);
        while denom.is_even() {
            denom /= &two;
            twos += 1;
        }
        while (&denom % &five).is_zero() {
            denom /= &five;
            fives += 1;
        }
        if !denom.is_one() {
            return None;
        }
        let digits = twos.max(fives);
        let scaled = &self.0 * BigRational::from_integer(BigInt::from(10).pow(digits));
        debug_assert!(scaled.is_integer());
        let mag = scaled.numer().abs().to_string();
        let sign = if self.0.is_negative() { "-" } else { "" };
        if digits == 0 {
            return Some(format!("{sign}{mag}"));
        }
        let digits = digits as usize;
        let padded = format!("{mag:0>width$}", width = digits + 1);
        let (int_part, frac_part) = padded.split_at(padded.len() - digits);
        Some(format!("{sign}{int_part}.{frac_part}"))
    }
}

impl FromStr for Coord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Coord, Error> {
        let bad = || Error::InvalidCoord(s.to_string());
        let t = s.trim();
        if let Some((n, d)) = t.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            return Ok(Coord(BigRational::new(n, d)));
        }
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        let numer: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
        let denom = BigInt::from(10).pow(frac_part.len() as u32);
        let value = BigRational::new(numer, denom);
        Ok(Coord(if neg { -value } else { value }))
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.decimal_string() {
            Some(s) => f.write_str(&s),
            None => write!(f, "{}/{}", self.0.numer(), self.0.denom()),
        }
    }
}

impl fmt::Debug for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Coord {
    fn from(v: i64) -> Coord {
        Coord::int(v)
    }
}

/// Shorthand used throughout tests and fixtures. Panics on malformed input.
pub fn c(s: &str) -> Coord {
    s.parse().unwrap_or_else(|e| panic!("{e}"))
}
