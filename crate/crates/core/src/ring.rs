//! Exact coefficient rings.
//!
//! Three ring families are supported: the integers `Z`, the rationals `Q`,
//! and residues `Z/n` for `n >= 2`. Integer and rational values use
//! arbitrary-precision arithmetic; residues are kept canonical in `[0, n)`.
//! Every [`Scalar`] carries its [`RingSpec`], and mixed-ring arithmetic is an
//! error rather than a coercion.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Descriptor for a coefficient ring: `Z`, `Q`, or `Z/n` with `n >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RingSpec {
    Integers,
    Rationals,
    ModN(u64),
}

impl RingSpec {
    /// Parses a ring descriptor: `"Z"`, `"Q"`, or `"Z/n"`.
    pub fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "Z" => Ok(RingSpec::Integers),
            "Q" => Ok(RingSpec::Rationals),
            other => {
                let modulus = other
                    .strip_prefix("Z/")
                    .and_then(|m| m.parse::<u64>().ok())
                    .ok_or_else(|| Error::RingParse(other.to_string()))?;
                if modulus < 2 {
                    return Err(Error::InvalidModulus(modulus));
                }
                Ok(RingSpec::ModN(modulus))
            }
        }
    }

    /// Whether the ring is a field: `Q` always, `Z/n` exactly when `n` is prime.
    pub fn is_field(self) -> bool {
        match self {
            RingSpec::Integers => false,
            RingSpec::Rationals => true,
            RingSpec::ModN(n) => is_prime(n),
        }
    }

    /// Whether `2a = 0` forces `a = 0`. Holds for `Z` and `Q`, and for `Z/n`
    /// exactly when `n` is odd.
    pub fn is_two_torsion_free(self) -> bool {
        match self {
            RingSpec::Integers | RingSpec::Rationals => true,
            RingSpec::ModN(n) => n % 2 == 1,
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::Rationals => write!(f, "Q"),
            RingSpec::ModN(n) => write!(f, "Z/{n}"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RingSpec::parse(s)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Value {
    Int(BigInt),
    Rat(BigRational),
    Mod(u64),
}

/// An exact ring element tagged with its ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scalar {
    ring: RingSpec,
    value: Value,
}

impl Scalar {
    pub fn zero(ring: RingSpec) -> Self {
        Scalar::from_i64(ring, 0)
    }

    pub fn one(ring: RingSpec) -> Self {
        Scalar::from_i64(ring, 1)
    }

    pub fn from_i64(ring: RingSpec, v: i64) -> Self {
        let value = match ring {
            RingSpec::Integers => Value::Int(BigInt::from(v)),
            RingSpec::Rationals => Value::Rat(BigRational::from(BigInt::from(v))),
            RingSpec::ModN(n) => Value::Mod(v.rem_euclid(n as i64) as u64),
        };
        Scalar { ring, value }
    }

    /// Parses the string form of a scalar: an integer for `Z` and `Z/n`
    /// (reduced into `[0, n)`), an integer or `numer/denom` fraction for `Q`.
    pub fn parse(ring: RingSpec, text: &str) -> Result<Self> {
        let err = || Error::ScalarParse {
            ring,
            text: text.to_string(),
        };
        let text = text.trim();
        let value = match ring {
            RingSpec::Integers => Value::Int(BigInt::from_str(text).map_err(|_| err())?),
            RingSpec::Rationals => Value::Rat(BigRational::from_str(text).map_err(|_| err())?),
            RingSpec::ModN(n) => {
                let raw = BigInt::from_str(text).map_err(|_| err())?;
                let reduced = raw.mod_floor(&BigInt::from(n));
                Value::Mod(reduced.to_u64().expect("residue fits in u64"))
            }
        };
        Ok(Scalar { ring, value })
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Int(v) => v.is_zero(),
            Value::Rat(v) => v.is_zero(),
            Value::Mod(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Int(v) => v.is_one(),
            Value::Rat(v) => v.is_one(),
            Value::Mod(v) => *v == 1,
        }
    }

    fn check_ring(&self, rhs: &Scalar) -> Result<()> {
        if self.ring == rhs.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.ring, rhs.ring))
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Result<Scalar> {
        self.check_ring(rhs)?;
        let value = match (&self.value, &rhs.value) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a + b),
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            (Value::Mod(a), Value::Mod(b)) => {
                let n = self.modulus();
                Value::Mod(((*a as u128 + *b as u128) % n as u128) as u64)
            }
            _ => unreachable!("ring tag matches value variant"),
        };
        Ok(Scalar {
            ring: self.ring,
            value,
        })
    }

    pub fn sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Scalar {
        let value = match &self.value {
            Value::Int(a) => Value::Int(-a),
            Value::Rat(a) => Value::Rat(-a),
            Value::Mod(a) => {
                let n = self.modulus();
                Value::Mod(if *a == 0 { 0 } else { n - a })
            }
        };
        Scalar {
            ring: self.ring,
            value,
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Result<Scalar> {
        self.check_ring(rhs)?;
        let value = match (&self.value, &rhs.value) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a * b),
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            (Value::Mod(a), Value::Mod(b)) => {
                let n = self.modulus();
                Value::Mod(((*a as u128 * *b as u128) % n as u128) as u64)
            }
            _ => unreachable!("ring tag matches value variant"),
        };
        Ok(Scalar {
            ring: self.ring,
            value,
        })
    }

    /// Multiplicative inverse where one exists: `±1` in `Z`, any nonzero
    /// rational, and residues coprime to the modulus.
    pub fn invert(&self) -> Result<Scalar> {
        let not_invertible = || Error::NotInvertible(format!("{self} in {}", self.ring));
        let value = match &self.value {
            Value::Int(a) => {
                if a.is_one() || (-a).is_one() {
                    Value::Int(a.clone())
                } else {
                    return Err(not_invertible());
                }
            }
            Value::Rat(a) => {
                if a.is_zero() {
                    return Err(not_invertible());
                }
                Value::Rat(a.recip())
            }
            Value::Mod(a) => Value::Mod(mod_inverse(*a, self.modulus()).ok_or_else(not_invertible)?),
        };
        Ok(Scalar {
            ring: self.ring,
            value,
        })
    }

    fn modulus(&self) -> u64 {
        match self.ring {
            RingSpec::ModN(n) => n,
            _ => unreachable!("modulus queried on non-residue ring"),
        }
    }
}

fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let egcd = BigInt::from(a).extended_gcd(&BigInt::from(n));
    if !egcd.gcd.is_one() {
        return None;
    }
    egcd.x.mod_floor(&BigInt::from(n)).to_u64()
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Int(v) => write!(f, "{v}"),
            Value::Rat(v) => {
                if v.denom().is_one() {
                    write!(f, "{}", v.numer())
                } else {
                    write!(f, "{}/{}", v.numer(), v.denom())
                }
            }
            Value::Mod(v) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ring_descriptors() {
        assert_eq!(RingSpec::parse("Z").unwrap(), RingSpec::Integers);
        assert_eq!(RingSpec::parse("Q").unwrap(), RingSpec::Rationals);
        assert_eq!(RingSpec::parse("Z/5").unwrap(), RingSpec::ModN(5));
        assert_eq!(RingSpec::parse(" Z/97 ").unwrap(), RingSpec::ModN(97));
        assert!(matches!(
            RingSpec::parse("Z/1"),
            Err(Error::InvalidModulus(1))
        ));
        assert!(matches!(
            RingSpec::parse("Z/0"),
            Err(Error::InvalidModulus(0))
        ));
        assert!(RingSpec::parse("GF(3)").is_err());
        assert!(RingSpec::parse("Z/x").is_err());
    }

    #[test]
    fn ring_descriptor_roundtrips_through_display() {
        for ring in [RingSpec::Integers, RingSpec::Rationals, RingSpec::ModN(7)] {
            assert_eq!(RingSpec::parse(&ring.to_string()).unwrap(), ring);
        }
    }

    #[test]
    fn field_detection() {
        assert!(RingSpec::Rationals.is_field());
        assert!(!RingSpec::Integers.is_field());
        assert!(RingSpec::ModN(2).is_field());
        assert!(RingSpec::ModN(7).is_field());
        assert!(!RingSpec::ModN(6).is_field());
        assert!(!RingSpec::ModN(49).is_field());
    }

    #[test]
    fn field_detection_matches_divisor_count_oracle() {
        for n in 2..=200u64 {
            let divisors = (1..=n).filter(|d| n % d == 0).count();
            assert_eq!(
                RingSpec::ModN(n).is_field(),
                divisors == 2,
                "modulus {n}"
            );
        }
    }

    #[test]
    fn two_torsion_free_matches_exhaustive_oracle() {
        assert!(RingSpec::Integers.is_two_torsion_free());
        assert!(RingSpec::Rationals.is_two_torsion_free());
        for n in 2..=100u64 {
            let no_torsion = (0..n).all(|a| (2 * a) % n != 0 || a == 0);
            assert_eq!(
                RingSpec::ModN(n).is_two_torsion_free(),
                no_torsion,
                "modulus {n}"
            );
        }
    }

    #[test]
    fn residues_are_canonical() {
        let s = Scalar::from_i64(RingSpec::ModN(5), -3);
        assert_eq!(s.to_string(), "2");
        let s = Scalar::parse(RingSpec::ModN(5), "-3").unwrap();
        assert_eq!(s.to_string(), "2");
        let s = Scalar::parse(RingSpec::ModN(5), "12").unwrap();
        assert_eq!(s.to_string(), "2");
    }

    #[test]
    fn rational_arithmetic_is_exact_and_reduced() {
        let q = RingSpec::Rationals;
        let a = Scalar::parse(q, "1/3").unwrap();
        let b = Scalar::parse(q, "1/6").unwrap();
        assert_eq!(a.add(&b).unwrap().to_string(), "1/2");
        assert_eq!(a.sub(&a).unwrap(), Scalar::zero(q));
        assert_eq!(
            Scalar::parse(q, "2/4").unwrap(),
            Scalar::parse(q, "1/2").unwrap()
        );
        assert_eq!(Scalar::parse(q, "-4/2").unwrap().to_string(), "-2");
    }

    #[test]
    fn scalar_parse_rejects_garbage() {
        assert!(Scalar::parse(RingSpec::Rationals, "1.5").is_err());
        assert!(Scalar::parse(RingSpec::Rationals, "1/0").is_err());
        assert!(Scalar::parse(RingSpec::Integers, "1/2").is_err());
        assert!(Scalar::parse(RingSpec::ModN(5), "1/2").is_err());
        assert!(Scalar::parse(RingSpec::ModN(5), "").is_err());
    }

    #[test]
    fn inverse_of_three_mod_seven_is_five() {
        let s = Scalar::from_i64(RingSpec::ModN(7), 3);
        let inv = s.invert().unwrap();
        assert_eq!(inv, Scalar::from_i64(RingSpec::ModN(7), 5));
        assert!(s.mul(&inv).unwrap().is_one());
    }

    #[test]
    fn inverses_where_defined() {
        assert!(Scalar::zero(RingSpec::ModN(7)).invert().is_err());
        assert!(Scalar::from_i64(RingSpec::ModN(6), 2).invert().is_err());
        assert!(Scalar::from_i64(RingSpec::ModN(6), 5).invert().is_ok());
        assert!(Scalar::from_i64(RingSpec::Integers, 2).invert().is_err());
        assert_eq!(
            Scalar::from_i64(RingSpec::Integers, -1).invert().unwrap(),
            Scalar::from_i64(RingSpec::Integers, -1)
        );
        let q = Scalar::parse(RingSpec::Rationals, "5/6").unwrap();
        assert_eq!(q.invert().unwrap().to_string(), "6/5");
        assert!(Scalar::zero(RingSpec::Rationals).invert().is_err());
    }

    #[test]
    fn mixed_ring_arithmetic_is_rejected() {
        let a = Scalar::one(RingSpec::Rationals);
        let b = Scalar::one(RingSpec::Integers);
        assert!(matches!(a.add(&b), Err(Error::RingMismatch(_, _))));
        assert!(matches!(a.mul(&b), Err(Error::RingMismatch(_, _))));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::from_i64(RingSpec::Integers, -3).to_string(), "-3");
        assert_eq!(
            Scalar::parse(RingSpec::Rationals, "5/6").unwrap().to_string(),
            "5/6"
        );
        assert_eq!(Scalar::from_i64(RingSpec::ModN(5), 4).to_string(), "4");
        assert_eq!(Scalar::from_i64(RingSpec::Rationals, 3).to_string(), "3");
    }
}
