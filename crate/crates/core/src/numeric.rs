// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Exact dyadic rationals.
//!
//! Every closeness value is a finite sum of terms `2^-d`, and every closed-form
//! closeness expression only divides by powers of two, so the value type of the
//! whole crate is `numerator / 2^exponent` with an arbitrary-precision numerator.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An exact rational number of the form `numerator / 2^exponent`.
///
/// Values are always kept normalized: either `exponent == 0` or the numerator
/// is odd. Zero is `0 / 2^0`. Normalization makes structural equality the same
/// as numeric equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DyadicValue {
    numerator: BigInt,
    exponent: u32,
}

/// Ring operations supported on [`DyadicValue`]. There is deliberately no
/// division.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DyadicOp {
    Add,
    Sub,
    Mul,
}

impl DyadicOp {
    pub fn apply(self, a: &DyadicValue, b: &DyadicValue) -> DyadicValue {
        match self {
            DyadicOp::Add => a + b,
            DyadicOp::Sub => a - b,
            DyadicOp::Mul => a * b,
        }
    }
}

impl DyadicValue {
    /// Builds the normalized representation of `numerator / 2^exponent`.
    pub fn new(numerator: impl Into<BigInt>, exponent: u32) -> Self {
        let mut numerator = numerator.into();
        if numerator.is_zero() {
            return Self::zero();
        }
        let twos = numerator.trailing_zeros().unwrap_or(0);
        let shift = twos.min(u64::from(exponent));
        if shift > 0 {
            numerator >>= shift;
        }
        DyadicValue {
            numerator,
            exponent: exponent - shift as u32,
        }
    }

    pub fn zero() -> Self {
        DyadicValue {
            numerator: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn integer(value: i64) -> Self {
        DyadicValue {
            numerator: BigInt::from(value),
            exponent: 0,
        }
    }

    /// `2^d`, or `2^-d` when `negated` is set.
    pub fn pow2(d: u32, negated: bool) -> Self {
        if negated {
            DyadicValue {
                numerator: BigInt::one(),
                exponent: d,
            }
        } else {
            DyadicValue {
                numerator: BigInt::one() << d,
                exponent: 0,
            }
        }
    }

    /// `2^e` for a signed exponent.
    pub fn pow2_signed(e: i64) -> Self {
        let magnitude = u32::try_from(e.unsigned_abs()).expect("power-of-two exponent out of range");
        Self::pow2(magnitude, e < 0)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.numerator.is_negative()
    }

    /// Divides by `2^k` (an exponent increment).
    pub fn shr(&self, k: u32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        DyadicValue {
            numerator: self.numerator.clone(),
            exponent: self.exponent + k,
        }
    }

    /// Multiplies by `2^k`.
    pub fn shl(&self, k: u32) -> Self {
        Self::new(self.numerator.clone() << k, self.exponent)
    }

    pub fn half(&self) -> Self {
        self.shr(1)
    }

    /// Numerator rescaled to the (larger or equal) exponent `target`.
    fn scaled_numerator(&self, target: u32) -> BigInt {
        debug_assert!(target >= self.exponent);
        &self.numerator << (target - self.exponent)
    }

    /// Approximate floating-point rendering, for human-readable output only.
    pub fn to_f64(&self) -> f64 {
        // Shift large numerators down first so huge exponents do not overflow to inf/inf.
        let bits = self.numerator.bits();
        if bits > 1000 || self.exponent > 1000 {
            let drop = bits.saturating_sub(64).min(u64::from(self.exponent));
            let n = (&self.numerator >> drop).to_f64().unwrap_or(f64::NAN);
            return n * 2f64.powi(drop as i32 - self.exponent as i32);
        }
        self.numerator.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-(self.exponent as i32))
    }

    /// Canonical text form `n/2^e`.
    pub fn canonical(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for DyadicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2^{}", self.numerator, self.exponent)
    }
}

impl fmt::Debug for DyadicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (~{})", self, self.to_f64())
    }
}

impl FromStr for DyadicValue {
    type Err = Error;

    /// Accepts the canonical `n/2^e` form and plain integers.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::Parse {
            line: 0,
            message: format!("invalid dyadic value {s:?}, expected n/2^e"),
        };
        let s = s.trim();
        let (num, exp) = match s.split_once('/') {
            Some((n, rest)) => {
                let e = rest.trim().strip_prefix("2^").ok_or_else(bad)?;
                (n.trim(), e.trim().parse::<u32>().map_err(|_| bad())?)
            }
            None => (s, 0),
        };
        let numerator = num.parse::<BigInt>().map_err(|_| bad())?;
        Ok(DyadicValue::new(numerator, exp))
    }
}

impl Serialize for DyadicValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DyadicValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for DyadicValue {
    fn from(value: i64) -> Self {
        DyadicValue::integer(value)
    }
}

impl From<BigInt> for DyadicValue {
    fn from(value: BigInt) -> Self {
        DyadicValue::new(value, 0)
    }
}

impl Ord for DyadicValue {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exponent.max(other.exponent);
        self.scaled_numerator(e).cmp(&other.scaled_numerator(e))
    }
}

impl PartialOrd for DyadicValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &DyadicValue {
    type Output = DyadicValue;

    fn add(self, rhs: &DyadicValue) -> DyadicValue {
        let e = self.exponent.max(rhs.exponent);
        DyadicValue::new(self.scaled_numerator(e) + rhs.scaled_numerator(e), e)
    }
}

impl Sub for &DyadicValue {
    type Output = DyadicValue;

    fn sub(self, rhs: &DyadicValue) -> DyadicValue {
        let e = self.exponent.max(rhs.exponent);
        DyadicValue::new(self.scaled_numerator(e) - rhs.scaled_numerator(e), e)
    }
}

impl Mul for &DyadicValue {
    type Output = DyadicValue;

    fn mul(self, rhs: &DyadicValue) -> DyadicValue {
        DyadicValue::new(&self.numerator * &rhs.numerator, self.exponent + rhs.exponent)
    }
}

impl Neg for &DyadicValue {
    type Output = DyadicValue;

    fn neg(self) -> DyadicValue {
        DyadicValue {
            numerator: -&self.numerator,
            exponent: self.exponent,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for DyadicValue {
            type Output = DyadicValue;
            fn $method(self, rhs: DyadicValue) -> DyadicValue {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&DyadicValue> for DyadicValue {
            type Output = DyadicValue;
            fn $method(self, rhs: &DyadicValue) -> DyadicValue {
                (&self).$method(rhs)
            }
        }
        impl $tr<DyadicValue> for &DyadicValue {
            type Output = DyadicValue;
            fn $method(self, rhs: DyadicValue) -> DyadicValue {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for DyadicValue {
    type Output = DyadicValue;

    fn neg(self) -> DyadicValue {
        -&self
    }
}

impl AddAssign<&DyadicValue> for DyadicValue {
    fn add_assign(&mut self, rhs: &DyadicValue) {
        *self = &*self + rhs;
    }
}

impl AddAssign for DyadicValue {
    fn add_assign(&mut self, rhs: DyadicValue) {
        *self = &*self + &rhs;
    }
}

impl Sum for DyadicValue {
    fn sum<I: Iterator<Item = DyadicValue>>(iter: I) -> Self {
        iter.fold(DyadicValue::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a DyadicValue> for DyadicValue {
    fn sum<I: Iterator<Item = &'a DyadicValue>>(iter: I) -> Self {
        iter.fold(DyadicValue::zero(), |acc, x| acc + x)
    }
}
