//! Exact coefficient fields.
//!
//! All homology computations are generic over [`Field`]. Two implementations
//! are provided: the prime field `Z_p` ([`PrimeField`]) and the exact
//! rationals ([`RationalField`]). Floating point is deliberately absent since
//! rank decisions have to be exact.

use std::fmt::Debug;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Default prime for `Z_p`.
pub const DEFAULT_PRIME: u64 = 1_000_000_007;

/// A field of coefficients. Elements are plain values; the field instance
/// carries whatever context the arithmetic needs (the modulus for `Z_p`).
pub trait Field: Clone + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; fails on zero.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    /// Image of an integer under the canonical ring map `Z -> F`.
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// Exact decimal rendering (`-1`, `3/2`, ...).
    fn render(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// `a / b`; fails when `b` is zero.
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

/// The prime field `Z_p` for a prime `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// `Z_p` with [`DEFAULT_PRIME`].
    pub const DEFAULT: PrimeField = PrimeField { p: DEFAULT_PRIME };

    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Field(format!("{p} is not a prime")));
        }
        if p > u32::MAX as u64 {
            return Err(Error::Field(format!("prime {p} exceeds 2^32")));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        Self::DEFAULT
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    #[inline]
    fn zero(&self) -> u64 {
        0
    }

    #[inline]
    fn one(&self) -> u64 {
        1 % self.p
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::Field("inversion of zero".into()));
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Ok(t0.rem_euclid(self.p as i64) as u64)
    }

    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    fn render(&self, a: &u64) -> String {
        // symmetric representative, so -1 prints as -1
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }
}

/// Exact rationals.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            return Err(Error::Field("inversion of zero".into()));
        }
        Ok(a.recip())
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn render(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else if a.is_negative() {
            format!("-{}/{}", a.numer().abs(), a.denom())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

/// Field selection as given on the command line: `zp:<prime>` or `rational`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldMode {
    Prime(u64),
    Rational,
}

impl Default for FieldMode {
    fn default() -> Self {
        FieldMode::Prime(DEFAULT_PRIME)
    }
}

impl FromStr for FieldMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("rational") {
            return Ok(FieldMode::Rational);
        }
        let Some(p) = s.strip_prefix("zp:") else {
            return Err(Error::Field(format!(
                "unknown field `{s}` (expected zp:<prime> or rational)"
            )));
        };
        let p: u64 = p
            .parse()
            .map_err(|_| Error::Field(format!("bad prime `{p}`")))?;
        PrimeField::new(p)?;
        Ok(FieldMode::Prime(p))
    }
}

impl std::fmt::Display for FieldMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldMode::Prime(p) => write!(f, "zp:{p}"),
            FieldMode::Rational => write!(f, "rational"),
        }
    }
}

/// Runs `$body` with `$field` bound to the concrete field selected by `$mode`.
#[macro_export]
macro_rules! with_field {
    ($mode:expr, $field:ident => $body:expr) => {
        match $mode {
            $crate::field::FieldMode::Prime(p) => {
                let $field = $crate::field::PrimeField::new(p)?;
                $body
            }
            $crate::field::FieldMode::Rational => {
                let $field = $crate::field::RationalField;
                $body
            }
        }
    };
}
