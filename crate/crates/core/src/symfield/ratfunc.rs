use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalars::{Field, Scalar};

use super::gcd::gcd;
use super::poly::Polynomial;
use super::space::VariableSpace;

/// A reduced fraction of polynomials with monic denominator.
///
/// Because the form is canonical, derived equality decides equality of
/// field elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked rational-function arithmetic.
pub fn ratfunc_arith(
    op: RatOp,
    a: &RationalFunction,
    b: &RationalFunction,
) -> Result<RationalFunction> {
    a.num.compatible(&b.num)?;
    match op {
        RatOp::Add => Ok(a.add_rf(b)),
        RatOp::Sub => Ok(a.add_rf(&b.neg_rf())),
        RatOp::Mul => Ok(a.mul_rf(b)),
        RatOp::Div => Ok(a.mul_rf(&b.inv()?)),
    }
}

impl RationalFunction {
    /// Reduces `num / den` to canonical form.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        num.compatible(&den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero(num.space(), num.field()));
        }
        let g = gcd(&num, &den);
        if g.is_one() {
            return Ok(Self::from_coprime(num, den));
        }
        let n = num.div_exact(&g).expect("gcd divides numerator");
        let d = den.div_exact(&g).expect("gcd divides denominator");
        Ok(Self::from_coprime(n, d))
    }

    /// Caller guarantees the two are coprime and `den` nonzero.
    pub(crate) fn from_coprime(num: Polynomial, den: Polynomial) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero(num.space(), num.field());
        }
        let lc = den.leading_coeff();
        if lc.is_one() {
            return RationalFunction { num, den };
        }
        let inv = lc.inv().expect("nonzero leading coefficient");
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        let den = Polynomial::one(p.space(), p.field());
        RationalFunction { num: p, den }
    }

    pub fn zero(space: &VariableSpace, field: Field) -> Self {
        Self::from_poly(Polynomial::zero(space, field))
    }

    pub fn one(space: &VariableSpace, field: Field) -> Self {
        Self::from_poly(Polynomial::one(space, field))
    }

    pub fn constant(space: &VariableSpace, c: Scalar) -> Self {
        Self::from_poly(Polynomial::constant(space, c))
    }

    pub fn var(space: &VariableSpace, field: Field, i: usize) -> Self {
        Self::from_poly(Polynomial::var(space, field, i))
    }

    pub fn var_named(space: &VariableSpace, field: Field, name: &str) -> Result<Self> {
        Ok(Self::from_poly(Polynomial::var_named(space, field, name)?))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn into_parts(self) -> (Polynomial, Polynomial) {
        (self.num, self.den)
    }

    pub fn space(&self) -> &VariableSpace {
        self.num.space()
    }

    pub fn field(&self) -> Field {
        self.num.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn constant_value(&self) -> Option<Scalar> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        ratfunc_arith(RatOp::Add, self, other)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        ratfunc_arith(RatOp::Sub, self, other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        ratfunc_arith(RatOp::Mul, self, other)
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        ratfunc_arith(RatOp::Div, self, other)
    }

    fn add_rf(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let n = &self.num + &other.num;
            if self.den.is_one() {
                return Self::from_poly(n);
            }
            return Self::new(n, self.den.clone()).expect("nonzero denominator");
        }
        let g = gcd(&self.den, &other.den);
        if g.is_one() {
            let n = &(&self.num * &other.den) + &(&other.num * &self.den);
            return Self::from_coprime(n, &self.den * &other.den);
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = other.den.div_exact(&g).expect("gcd divides");
        let t = &(&self.num * &d1) + &(&other.num * &b1);
        if t.is_zero() {
            return Self::zero(self.space(), self.field());
        }
        let h = gcd(&t, &g);
        let den = &b1 * &other.den;
        if h.is_one() {
            Self::from_coprime(t, den)
        } else {
            Self::from_coprime(
                t.div_exact(&h).expect("gcd divides"),
                den.div_exact(&h).expect("gcd divides"),
            )
        }
    }

    fn neg_rf(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    fn mul_rf(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.space(), self.field());
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(&self.num * &other.num);
        }
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let cancel = |p: &Polynomial, g: &Polynomial| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_exact(g).expect("gcd divides")
            }
        };
        let n = &cancel(&self.num, &g1) * &cancel(&other.num, &g2);
        let d = &cancel(&self.den, &g2) * &cancel(&other.den, &g1);
        Self::from_coprime(n, d)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.space(), self.field());
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = u32::try_from(e.unsigned_abs())
            .map_err(|_| Error::InvalidParameter("exponent too large".into()))?;
        Ok(RationalFunction {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_add(rhs).expect("incompatible rational functions")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_sub(rhs).expect("incompatible rational functions")
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_mul(rhs).expect("incompatible rational functions")
    }
}

/// Panics on division by zero; use [`RationalFunction::try_div`] otherwise.
impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_div(rhs)
            .expect("division by zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        self.neg_rf()
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xs(p: i64, n: usize) -> (Vec<RationalFunction>, RationalFunction) {
        let s = VariableSpace::indexed("x", 0, n);
        let f = Field::new(p).unwrap();
        (
            (0..n).map(|i| RationalFunction::var(&s, f, i)).collect(),
            RationalFunction::one(&s, f),
        )
    }

    #[test]
    fn hajja_sum_n3() {
        let (x, one) = xs(0, 3);
        let w = &(&one + &x[1]) + &(&x[1] * &x[2]);
        let y1 = &one / &w;
        let y2 = &x[1] / &w;
        let y3 = &(&x[1] * &x[2]) / &w;
        assert!((&(&y1 + &y2) + &y3).is_one());
    }

    #[test]
    fn cancellation() {
        let (x, one) = xs(0, 1);
        let f = &(&(&x[0] * &x[0]) - &one) / &(&x[0] - &one);
        assert_eq!(f, &x[0] + &one);
        assert!(f.is_polynomial());
    }

    #[test]
    fn inverse_pairs() {
        let (x, one) = xs(5, 2);
        let a = &(&x[0] * &x[1]) + &one;
        let b = &x[0] - &(&x[1] * &x[1]);
        let q = &a / &b;
        assert!((&q * &(&b / &a)).is_one());
        assert!((&q - &q).is_zero());
        assert_eq!(&q * &b, a);
        assert_eq!(q.inv().unwrap().inv().unwrap(), q);
        let zero = RationalFunction::zero(q.space(), q.field());
        assert_eq!(q.try_div(&zero), Err(Error::DivisionByZero));
        assert_eq!(
            RationalFunction::new(a.numerator().clone(), zero.numerator().clone()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn denominator_is_monic() {
        let (x, _) = xs(0, 1);
        let two = RationalFunction::constant(x[0].space(), Field::rationals().from_i64(2));
        let f = &x[0] / &(&x[0] * &two);
        assert_eq!(
            f.constant_value(),
            Some(Field::rationals().from_ratio(1, 2).unwrap())
        );
        let g = &two / &(&x[0] * &two);
        assert!(g.denominator().leading_coeff().is_one());
    }
}
