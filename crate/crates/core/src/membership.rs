//! Exact decimal membership grades.
//!
//! A [`Membership`] is a fixed-point decimal in `[0, 1]` with 18 fractional
//! digits. Every value a human is likely to type (`0.15`, `0.55`, `0.333`)
//! is held exactly, so equality tests such as "is this pair 0.25-connected"
//! never depend on binary rounding. Connectivity only ever takes minima and
//! maxima of memberships, so no arithmetic is needed beyond comparison.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

const FRACTION_DIGITS: usize = 18;
const SCALE: u64 = 1_000_000_000_000_000_000;

/// A membership grade in `[0, 1]`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Membership(u64);

impl Membership {
    pub const ZERO: Membership = Membership(0);
    pub const ONE: Membership = Membership(SCALE);

    /// Builds `digits / 10^scale`, e.g. `from_decimal(55, 2)` is `0.55`.
    pub fn from_decimal(digits: u64, scale: u32) -> Result<Self> {
        let scale = scale as usize;
        if scale > FRACTION_DIGITS {
            let shift = scale - FRACTION_DIGITS;
            let div = 10u64
                .checked_pow(shift as u32)
                .ok_or_else(|| Error::MalformedMembership(format!("{digits}e-{scale}")))?;
            if !digits.is_multiple_of(div) {
                return Err(Error::MalformedMembership(format!("{digits}e-{scale}")));
            }
            return Self::from_decimal(digits / div, FRACTION_DIGITS as u32);
        }
        let mul = 10u64.pow((FRACTION_DIGITS - scale) as u32);
        match digits.checked_mul(mul) {
            Some(units) if units <= SCALE => Ok(Membership(units)),
            _ => Err(Error::MembershipOutOfRange(format!("{digits}e-{scale}"))),
        }
    }

    /// Raw fixed-point units (value × 10^18).
    pub fn units(self) -> u64 {
        self.0
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / SCALE as f64
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// `|self - other| <= tolerance`. A zero tolerance means exact equality.
    pub fn approx_eq(self, other: Membership, tolerance: f64) -> bool {
        if tolerance <= 0.0 {
            return self == other;
        }
        let diff = self.0.abs_diff(other.0) as f64 / SCALE as f64;
        diff <= tolerance
    }
}

impl FromStr for Membership {
    type Err = Error;

    /// Parses a plain decimal such as `1`, `0.4`, `.55` or `1.000`.
    /// Exponents, signs other than a leading `-`, and non-finite values are
    /// rejected; negative or greater-than-one values parse but are reported
    /// as out of range.
    fn from_str(s: &str) -> Result<Self> {
        let malformed = || Error::MalformedMembership(s.to_string());
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(malformed());
        }
        if !int_part.bytes().all(|b| b.is_ascii_digit())
            || !frac_part.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(malformed());
        }
        let int_trimmed = int_part.trim_start_matches('0');
        let frac_trimmed = frac_part.trim_end_matches('0');
        let is_zero = int_trimmed.is_empty() && frac_trimmed.is_empty();
        if negative && !is_zero {
            return Err(Error::MembershipOutOfRange(s.to_string()));
        }
        if frac_trimmed.len() > FRACTION_DIGITS {
            return Err(malformed());
        }
        let int_value = match int_trimmed {
            "" => 0,
            "1" => 1,
            _ => return Err(Error::MembershipOutOfRange(s.to_string())),
        };
        let mut frac_units: u64 = 0;
        for (i, b) in frac_trimmed.bytes().enumerate() {
            frac_units += u64::from(b - b'0') * 10u64.pow((FRACTION_DIGITS - 1 - i) as u32);
        }
        let units = int_value * SCALE + frac_units;
        if units > SCALE {
            return Err(Error::MembershipOutOfRange(s.to_string()));
        }
        Ok(Membership(units))
    }
}

impl TryFrom<f64> for Membership {
    type Error = Error;

    /// Converts through the shortest decimal that round-trips the float,
    /// so `0.1_f64` becomes exactly `0.1`.
    fn try_from(value: f64) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::MalformedMembership(value.to_string()));
        }
        value.to_string().parse()
    }
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let int = self.0 / SCALE;
        let frac = self.0 % SCALE;
        if frac == 0 {
            return write!(f, "{int}.0");
        }
        let digits = format!("{frac:018}");
        write!(f, "{int}.{}", digits.trim_end_matches('0'))
    }
}

impl fmt::Debug for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Membership {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
