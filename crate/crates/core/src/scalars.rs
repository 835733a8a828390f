//! Exact scalars: the rationals and prime fields GF(p).
//!
//! A [`Field`] is just a characteristic; a [`Scalar`] carries enough
//! information to recover its field, so mixing fields is detected at the
//! operation that would mix them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible prime characteristic (exclusive).
pub const MAX_CHARACTERISTIC: i64 = 1 << 31;

/// A field of characteristic 0 (the rationals) or a prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct Field {
    characteristic: u32,
}

impl TryFrom<i64> for Field {
    type Error = Error;
    fn try_from(c: i64) -> Result<Self> {
        Field::new(c)
    }
}

impl From<Field> for i64 {
    fn from(f: Field) -> i64 {
        f.characteristic as i64
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// `field_make`: 0 gives the rationals, a prime p gives GF(p).
    pub fn new(characteristic: i64) -> Result<Field> {
        if characteristic == 0 {
            return Ok(Field::rationals());
        }
        if !(0..MAX_CHARACTERISTIC).contains(&characteristic) {
            return Err(Error::BadCharacteristic(characteristic));
        }
        if !is_prime(characteristic as u64) {
            return Err(Error::NotPrime(characteristic));
        }
        Ok(Field {
            characteristic: characteristic as u32,
        })
    }

    pub const fn rationals() -> Field {
        Field { characteristic: 0 }
    }

    pub fn characteristic(self) -> u32 {
        self.characteristic
    }

    pub fn is_rational(self) -> bool {
        self.characteristic == 0
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            p => Scalar::Modular {
                residue: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rational(BigRational::from_integer(n.clone())),
            p => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::Modular {
                    residue: r.to_u32().expect("residue below modulus"),
                    modulus: p,
                }
            }
        }
    }

    /// `num/den` interpreted in this field.
    pub fn from_ratio(self, num: i64, den: i64) -> Result<Scalar> {
        self.from_i64(num).checked_div(&self.from_i64(den))
    }

    /// Every element of the field if finite, in residue order.
    pub fn elements(self) -> Option<impl Iterator<Item = Scalar>> {
        match self.characteristic {
            0 => None,
            p => Some((0..p).map(move |r| Scalar::Modular {
                residue: r,
                modulus: p,
            })),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "GF({p})"),
        }
    }
}

/// An element of a [`Field`], always in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { residue: u32, modulus: u32 },
}

/// The operations exposed through [`scalar_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

/// Dispatches one field operation; binary operations require `b`.
pub fn scalar_arith(op: ScalarOp, a: &Scalar, b: Option<&Scalar>) -> Result<Scalar> {
    let rhs = || b.ok_or_else(|| Error::InvalidParameter(format!("{op:?} needs two operands")));
    match op {
        ScalarOp::Add => a.checked_add(rhs()?),
        ScalarOp::Sub => a.checked_sub(rhs()?),
        ScalarOp::Mul => a.checked_mul(rhs()?),
        ScalarOp::Div => a.checked_div(rhs()?),
        ScalarOp::Neg => Ok(-a),
        ScalarOp::Inv => a.inv(),
    }
}

fn mod_pow(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::rationals(),
            Scalar::Modular { modulus, .. } => Field {
                characteristic: *modulus,
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { residue, .. } => *residue == 1,
        }
    }

    /// True for strictly negative rationals; residues are never negative.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_negative())
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        let (l, r) = (self.field(), other.field());
        if l == r {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: l.characteristic,
                right: r.characteristic,
            })
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.add_unchecked(&-other))
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    fn add_unchecked(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Modular {
                    residue: a,
                    modulus,
                },
                Scalar::Modular { residue: b, .. },
            ) => Scalar::Modular {
                residue: ((*a as u64 + *b as u64) % *modulus as u64) as u32,
                modulus: *modulus,
            },
            _ => panic!("scalar field mismatch"),
        }
    }

    fn mul_unchecked(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Modular {
                    residue: a,
                    modulus,
                },
                Scalar::Modular { residue: b, .. },
            ) => Scalar::Modular {
                residue: ((*a as u64 * *b as u64) % *modulus as u64) as u32,
                modulus: *modulus,
            },
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { residue, modulus } => Scalar::Modular {
                residue: mod_pow(*residue as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                modulus: *modulus,
            },
        })
    }

    /// `a^e` by square-and-multiply; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        Ok(match base {
            Scalar::Modular { residue, modulus } => Scalar::Modular {
                residue: mod_pow(residue as u64, e, modulus as u64) as u32,
                modulus,
            },
            Scalar::Rational(q) => {
                let mut acc = BigRational::one();
                let mut b = q;
                while e > 0 {
                    if e & 1 == 1 {
                        acc *= &b;
                    }
                    b = &b * &b;
                    e >>= 1;
                }
                Scalar::Rational(acc)
            }
        })
    }

    /// Smallest m ≥ 1 with `self^m = 1`, if the element has finite order.
    pub fn multiplicative_order(&self) -> Option<u64> {
        match self {
            _ if self.is_zero() => None,
            Scalar::Rational(q) => {
                if q.is_one() {
                    Some(1)
                } else if (-q).is_one() {
                    Some(2)
                } else {
                    None
                }
            }
            Scalar::Modular { residue, modulus } => {
                let (r, m) = (*residue as u64, *modulus as u64);
                let mut acc = r;
                let mut k = 1;
                while acc != 1 {
                    acc = acc * r % m;
                    k += 1;
                }
                Some(k)
            }
        }
    }

    /// Rebuilds the canonical representation; the identity on valid values.
    pub fn normalized(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => {
                Scalar::Rational(BigRational::new(q.numer().clone(), q.denom().clone()))
            }
            Scalar::Modular { residue, modulus } => Scalar::Modular {
                residue: residue % modulus,
                modulus: *modulus,
            },
        }
    }

    /// The integer value for rationals with denominator 1 and for residues.
    pub fn to_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Rational(q) if q.is_integer() => Some(q.to_integer()),
            Scalar::Rational(_) => None,
            Scalar::Modular { residue, .. } => Some(BigInt::from(*residue)),
        }
    }

    /// Wire form: `a/b` over Q, `r mod p` over GF(p).
    pub fn to_wire(&self) -> String {
        match self {
            Scalar::Rational(q) => format!("{}/{}", q.numer(), q.denom()),
            Scalar::Modular { residue, modulus } => format!("{residue} mod {modulus}"),
        }
    }

    /// Inverse of [`Scalar::to_wire`].
    pub fn from_wire(text: &str) -> Result<Scalar> {
        let bad = || Error::parse(0, format!("malformed scalar `{text}`"));
        let text = text.trim();
        if let Some((r, p)) = text.split_once(" mod ") {
            let r: i64 = r.trim().parse().map_err(|_| bad())?;
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            if p == 0 {
                return Err(bad());
            }
            return Ok(Field::new(p)?.from_i64(r));
        }
        let (n, d) = text.split_once('/').unwrap_or((text, "1"));
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::Rational(BigRational::new(n, d)))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Modular { residue, .. } => write!(f, "{residue}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_wire())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Scalar::from_wire(&s).map_err(serde::de::Error::custom)
    }
}

// Operator sugar for callers that already know the operands share a field.
// These panic on a field mismatch; use the `checked_*` methods otherwise.

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar field mismatch")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("scalar field mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Modular { residue, modulus } => Scalar::Modular {
                residue: (modulus - residue) % modulus,
                modulus: *modulus,
            },
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

    fn gf(p: i64) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn field_make_examples() {
        assert_eq!(gf(7).characteristic(), 7);
        assert!(Field::new(0).unwrap().is_rational());
        assert_eq!(Field::new(6), Err(Error::NotPrime(6)));
        assert_eq!(Field::new(6).unwrap_err().to_string(), "6 is not prime");
        assert!(matches!(Field::new(-3), Err(Error::BadCharacteristic(-3))));
        assert_eq!(Field::new(1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn arith_examples() {
        let f = gf(7);
        assert_eq!(
            scalar_arith(ScalarOp::Inv, &f.from_i64(3), None).unwrap(),
            f.from_i64(5)
        );
        let q = Field::rationals();
        let sum = scalar_arith(
            ScalarOp::Add,
            &q.from_ratio(1, 2).unwrap(),
            Some(&q.from_ratio(1, 3).unwrap()),
        )
        .unwrap();
        assert_eq!(sum, q.from_ratio(5, 6).unwrap());
        assert_eq!(sum.to_wire(), "5/6");
        assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
        assert!(matches!(
            f.one().checked_add(&q.one()),
            Err(Error::FieldMismatch { left: 7, right: 0 })
        ));
        assert!(scalar_arith(ScalarOp::Mul, &f.one(), None).is_err());
    }

    #[test]
    fn pow_examples() {
        let f = gf(7);
        assert_eq!(f.from_i64(3).pow(6).unwrap(), f.one());
        assert_eq!(f.from_i64(3).pow(-1).unwrap(), f.from_i64(5));
        let q = Field::rationals();
        assert_eq!(q.from_i64(2).pow(10).unwrap(), q.from_i64(1024));
        assert_eq!(q.zero().pow(-1), Err(Error::DivisionByZero));
        assert_eq!(q.zero().pow(0).unwrap(), q.one());
    }

    #[test]
    fn fermat_exhaustive() {
        for p in [2i64, 3, 5, 7, 11, 13] {
            let f = gf(p);
            for a in f.elements().unwrap().filter(|a| !a.is_zero()) {
                assert_eq!(a.pow(p - 1).unwrap(), f.one(), "p={p} a={a}");
            }
        }
    }

    #[test]
    fn orders() {
        let f = gf(7);
        assert_eq!(f.from_i64(3).multiplicative_order(), Some(6));
        assert_eq!(f.from_i64(2).multiplicative_order(), Some(3));
        assert_eq!(f.from_i64(-1).multiplicative_order(), Some(2));
        let q = Field::rationals();
        assert_eq!(q.from_i64(-1).multiplicative_order(), Some(2));
        assert_eq!(q.from_i64(2).multiplicative_order(), None);
    }

    #[test]
    fn wire_round_trip() {
        for s in [
            gf(7).from_i64(-1),
            Field::rationals().from_ratio(-3, 9).unwrap(),
        ] {
            assert_eq!(Scalar::from_wire(&s.to_wire()).unwrap(), s);
            let json = serde_json::to_string(&s).unwrap();
            assert_eq!(serde_json::from_str::<Scalar>(&json).unwrap(), s);
        }
        assert_eq!(gf(7).from_i64(-1).to_wire(), "6 mod 7");
        assert!(Scalar::from_wire("1/0").is_err());
        assert!(Scalar::from_wire("x mod 7").is_err());
    }
}
