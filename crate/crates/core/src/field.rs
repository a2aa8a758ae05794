//! Exact scalar fields: the rationals and prime fields `F_p`.
//!
//! Every algorithm in the crate is generic over [`Field`]. The trait builds on
//! the `num-traits` arithmetic traits and adds the handful of things exact
//! linear algebra needs: inverses, literal parsing, the characteristic, and
//! (for finite fields) the list of elements.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Runtime description of a scalar field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `q`, `Q`, `fp:<p>` and `p:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("rationals") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t
            .strip_prefix("fp:")
            .or_else(|| t.strip_prefix("p:"))
            .ok_or_else(|| Error::BadLiteral {
                literal: s.to_string(),
                reason: "expected `q` or `fp:<prime>`".into(),
            })?;
        let p: u64 = digits.parse().map_err(|_| Error::BadLiteral {
            literal: s.to_string(),
            reason: "modulus is not an unsigned integer".into(),
        })?;
        if !is_prime(p) {
            return Err(Error::BadLiteral {
                literal: s.to_string(),
                reason: format!("{p} is not prime"),
            });
        }
        Ok(FieldSpec::Prime(p))
    }
}

/// Primes with a compiled-in [`Fp`] instantiation, see [`with_field!`](crate::with_field).
pub const SUPPORTED_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

pub const fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn spec() -> FieldSpec;

    fn from_i64(v: i64) -> Self;

    fn from_bigint(v: &BigInt) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// All field elements in canonical order (zero first), `None` for infinite fields.
    fn elements() -> Option<Vec<Self>>;

    /// Parses an exact literal: `a/b` or `a` for rationals, an integer for `F_p`.
    fn parse_literal(s: &str) -> Result<Self>;

    fn to_literal(&self) -> String;

    /// Reduces a rational to this field; `None` when the denominator vanishes.
    fn from_rational(q: &BigRational) -> Option<Self> {
        let den = Self::from_bigint(q.denom());
        let inv = den.inv()?;
        Some(Self::from_bigint(q.numer()) * inv)
    }

    fn characteristic() -> u64 {
        Self::spec().characteristic()
    }

    fn is_finite() -> bool {
        Self::spec().is_finite()
    }

    /// Number of elements of a finite field.
    fn order() -> Option<u64> {
        match Self::spec() {
            FieldSpec::Prime(p) => Some(p),
            FieldSpec::Rationals => None,
        }
    }
}

/// The rationals.
pub type Rational = BigRational;

impl Field for BigRational {
    fn spec() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn elements() -> Option<Vec<Self>> {
        None
    }

    fn parse_literal(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::BadLiteral {
            literal: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad("numerator is not an integer"))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| bad("denominator is not an integer"))?;
        if den.is_zero() {
            return Err(bad("zero denominator"));
        }
        Ok(BigRational::new(num, den))
    }

    fn to_literal(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }

    fn from_rational(q: &BigRational) -> Option<Self> {
        Some(q.clone())
    }
}

/// Residue class modulo the prime `P`, stored reduced in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const CHECKED: () = assert!(is_prime(P) && P < (1 << 32), "modulus must be a prime below 2^32");

    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::CHECKED;
        Fp(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::new(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 {
            self.0 - rhs.0
        } else {
            self.0 + P - rhs.0
        })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(self.0 * rhs.0 % P)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in F_p")
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Self::new(1)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn spec() -> FieldSpec {
        FieldSpec::Prime(P)
    }

    fn from_i64(v: i64) -> Self {
        Self::new(v.rem_euclid(P as i64) as u64)
    }

    fn from_bigint(v: &BigInt) -> Self {
        let r = v.mod_floor(&BigInt::from(P));
        Self::new(r.to_u64().expect("residue fits a word"))
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn elements() -> Option<Vec<Self>> {
        Some((0..P).map(Self::new).collect())
    }

    fn parse_literal(s: &str) -> Result<Self> {
        let t = s.trim();
        let v: BigInt = t.parse().map_err(|_| Error::BadLiteral {
            literal: s.to_string(),
            reason: "prime-field literals must be integers".into(),
        })?;
        Ok(Self::from_bigint(&v))
    }

    fn to_literal(&self) -> String {
        self.0.to_string()
    }
}

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
pub type F11 = Fp<11>;
pub type F13 = Fp<13>;

/// Lifts a residue to its least non-negative integer representative;
/// rationals are returned unchanged.
pub fn to_rational<T: Field>(x: &T) -> BigRational {
    Rational::parse_literal(&x.to_literal()).expect("literals round-trip")
}

/// Runs `$body` with the type alias `$t` bound to the concrete scalar type for
/// `$spec`. Evaluates to `Result<_, Error>`; unsupported primes yield
/// [`Error::UnsupportedField`].
#[macro_export]
macro_rules! with_field {
    ($spec:expr, $t:ident => $body:expr) => {{
        match $spec {
            $crate::FieldSpec::Rationals => {
                #[allow(dead_code)]
                type $t = $crate::Rational;
                Ok($body)
            }
            $crate::FieldSpec::Prime(2) => {
                #[allow(dead_code)]
                type $t = $crate::F2;
                Ok($body)
            }
            $crate::FieldSpec::Prime(3) => {
                #[allow(dead_code)]
                type $t = $crate::F3;
                Ok($body)
            }
            $crate::FieldSpec::Prime(5) => {
                #[allow(dead_code)]
                type $t = $crate::F5;
                Ok($body)
            }
            $crate::FieldSpec::Prime(7) => {
                #[allow(dead_code)]
                type $t = $crate::F7;
                Ok($body)
            }
            $crate::FieldSpec::Prime(11) => {
                #[allow(dead_code)]
                type $t = $crate::F11;
                Ok($body)
            }
            $crate::FieldSpec::Prime(13) => {
                #[allow(dead_code)]
                type $t = $crate::F13;
                Ok($body)
            }
            other => Err($crate::Error::UnsupportedField(other)),
        }
    }};
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_literals_are_canonical() {
        let q = Rational::parse_literal("4/-6").unwrap();
        assert_eq!(q.to_literal(), "-2/3");
        assert_eq!(Rational::parse_literal("7").unwrap().to_literal(), "7");
        assert!(Rational::parse_literal("1/0").is_err());
        assert!(Rational::parse_literal("0.5").is_err());
    }

    #[test]
    fn prime_field_inverse_and_negation() {
        for a in 1..7u64 {
            let x = F7::new(a);
            assert_eq!(x * x.inv().unwrap(), F7::one());
            assert_eq!(x + (-x), F7::zero());
        }
        assert_eq!(F5::parse_literal("-1").unwrap(), F5::new(4));
        assert!(F5::zero().inv().is_none());
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("fp:5".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(5));
        assert!("fp:6".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::Prime(3).to_string(), "fp:3");
    }

    #[test]
    fn rational_reduction_mod_p() {
        let q = Rational::parse_literal("1/2").unwrap();
        assert_eq!(F3::from_rational(&q), Some(F3::new(2)));
        assert_eq!(F2::from_rational(&q), None);
    }

    #[test]
    fn dispatch_macro_binds_types() {
        let r: Result<u64> = with_field!(FieldSpec::Prime(5), T => T::characteristic());
        assert_eq!(r.unwrap(), 5);
        let r: Result<u64> = with_field!(FieldSpec::Prime(17), T => T::characteristic());
        assert!(r.is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn fp_matches_integer_arithmetic(a in -1000i64..1000, b in -1000i64..1000) {
                let p = 11i64;
                let (x, y) = (F11::from_i64(a), F11::from_i64(b));
                prop_assert_eq!((x + y).value() as i64, (a + b).rem_euclid(p));
                prop_assert_eq!((x - y).value() as i64, (a - b).rem_euclid(p));
                prop_assert_eq!((x * y).value() as i64, (a * b).rem_euclid(p));
            }
        }
    }
}
