use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalars::{Field, Scalar};

use super::monomial::Monomial;
use super::space::VariableSpace;

/// Sparse polynomial with nonzero coefficients, terms sorted by descending
/// graded-lex order. Structural equality is mathematical equality.
#[derive(Clone, Debug)]
pub struct Polynomial {
    space: VariableSpace,
    field: Field,
    terms: Vec<(Monomial, Scalar)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.space == other.space && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Checked polynomial arithmetic.
pub fn poly_arith(op: PolyOp, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.compatible(b)?;
    Ok(match op {
        PolyOp::Add => a.add_poly(b),
        PolyOp::Sub => a.add_poly(&b.neg_poly()),
        PolyOp::Mul => a.mul_poly(b),
    })
}

impl Polynomial {
    pub fn zero(space: &VariableSpace, field: Field) -> Self {
        Polynomial {
            space: space.clone(),
            field,
            terms: Vec::new(),
        }
    }

    pub fn constant(space: &VariableSpace, c: Scalar) -> Self {
        let field = c.field();
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(Monomial::one(space.len()), c)]
        };
        Polynomial {
            space: space.clone(),
            field,
            terms,
        }
    }

    pub fn one(space: &VariableSpace, field: Field) -> Self {
        Self::constant(space, field.one())
    }

    pub fn var(space: &VariableSpace, field: Field, i: usize) -> Self {
        Self::term(space, Monomial::var(space.len(), i, 1), field.one())
    }

    pub fn var_named(space: &VariableSpace, field: Field, name: &str) -> Result<Self> {
        Ok(Self::var(space, field, space.require(name)?))
    }

    pub fn term(space: &VariableSpace, m: Monomial, c: Scalar) -> Self {
        debug_assert_eq!(m.len(), space.len());
        let field = c.field();
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial {
            space: space.clone(),
            field,
            terms,
        }
    }

    /// Collects arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(
        space: &VariableSpace,
        field: Field,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.len(), space.len());
            match acc.get_mut(&m) {
                Some(v) => *v = &*v + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(space, field, acc)
    }

    fn from_map(space: &VariableSpace, field: Field, acc: HashMap<Monomial, Scalar>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial {
            space: space.clone(),
            field,
            terms,
        }
    }

    /// Terms already known to have distinct monomials and nonzero coefficients.
    pub(crate) fn from_distinct_terms(
        space: &VariableSpace,
        field: Field,
        mut terms: Vec<(Monomial, Scalar)>,
    ) -> Self {
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial {
            space: space.clone(),
            field,
            terms,
        }
    }

    pub fn space(&self) -> &VariableSpace {
        &self.space
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<Scalar> {
        match self.terms.as_slice() {
            [] => Some(self.field.zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> Scalar {
        self.terms
            .first()
            .map_or_else(|| self.field.zero(), |t| t.1.clone())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .iter()
            .map(|t| t.0.exponent(var))
            .max()
            .unwrap_or(0)
    }

    /// Which variables occur with a positive exponent.
    pub fn support(&self) -> Vec<bool> {
        let mut used = vec![false; self.space.len()];
        for (m, _) in &self.terms {
            for (u, &e) in used.iter_mut().zip(m.exponents()) {
                *u |= e > 0;
            }
        }
        used
    }

    /// Exponent-wise minimum over all terms (the largest monomial divisor).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::one(self.space.len()),
            Some((m0, _)) => it.fold(m0.clone(), |acc, (m, _)| acc.gcd(m)),
        }
    }

    pub(crate) fn compatible(&self, other: &Polynomial) -> Result<()> {
        self.space.check_same(&other.space)?;
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.characteristic(),
                right: other.field.characteristic(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        poly_arith(PolyOp::Add, self, other)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        poly_arith(PolyOp::Sub, self, other)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        poly_arith(PolyOp::Mul, self, other)
    }

    fn add_poly(&self, other: &Polynomial) -> Polynomial {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Polynomial {
            space: self.space.clone(),
            field: self.field,
            terms: out,
        }
    }

    fn neg_poly(&self) -> Polynomial {
        Polynomial {
            space: self.space.clone(),
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    fn mul_poly(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.space, self.field);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v = &*v + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(&self.space, self.field, acc)
    }

    /// Multiplication by a single term keeps the order intact.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.space, self.field);
        }
        Polynomial {
            space: self.space.clone(),
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        self.mul_term(&Monomial::one(self.space.len()), c)
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.space, self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_poly(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_poly(&base);
            }
        }
        acc
    }

    /// Scales so the leading coefficient is 1; returns the removed factor.
    pub fn monic(&self) -> (Polynomial, Scalar) {
        match self.terms.first() {
            None => (self.clone(), self.field.one()),
            Some((_, lc)) if lc.is_one() => (self.clone(), self.field.one()),
            Some((_, lc)) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                (self.scale(&inv), lc.clone())
            }
        }
    }

    /// Divides by a monomial that is known to divide every term.
    pub fn div_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            space: self.space.clone(),
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(mm, c)| (m.quotient_of(mm), c.clone()))
                .collect(),
        }
    }

    /// The quotient `self / d` if the division is exact, otherwise `None`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let (dm, dc) = d.terms.first()?;
        if self.is_zero() {
            return Some(self.clone());
        }
        if d.terms.len() == 1 {
            if !self.terms.iter().all(|(m, _)| dm.divides(m)) {
                return None;
            }
            let inv = dc.inv().ok()?;
            return Some(Polynomial {
                space: self.space.clone(),
                field: self.field,
                terms: self
                    .terms
                    .iter()
                    .map(|(m, c)| (dm.quotient_of(m), c * &inv))
                    .collect(),
            });
        }
        if self.total_degree() < d.total_degree() || self.terms.len() < d.terms.len().min(2) {
            return None;
        }
        for v in 0..self.space.len() {
            if self.degree_in(v) < d.degree_in(v) {
                return None;
            }
        }
        let inv = dc.inv().ok()?;
        let mut rem: BTreeMap<Monomial, Scalar> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.last_key_value() {
            if !dm.divides(m) {
                return None;
            }
            let qm = dm.quotient_of(m);
            let qc = c * &inv;
            for (tm, tc) in &d.terms {
                let key = tm.mul(&qm);
                let sub = &qc * tc;
                match rem.get_mut(&key) {
                    Some(v) => {
                        *v = &*v - &sub;
                        if v.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -sub);
                    }
                }
            }
            quot.push((qm, qc));
        }
        Some(Polynomial::from_distinct_terms(
            &self.space,
            self.field,
            quot,
        ))
    }

    /// Splits into coefficients of powers of `var`; entry `k` multiplies `var^k`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial> {
        let deg = self.degree_in(var) as usize;
        let mut parts: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let k = m.exponent(var) as usize;
            let mut mm = m.clone();
            mm.exponents_mut()[var] = 0;
            parts[k].push((mm, c.clone()));
        }
        parts
            .into_iter()
            .map(|t| Polynomial::from_distinct_terms(&self.space, self.field, t))
            .collect()
    }

    /// Inverse of [`Polynomial::coefficients_in`].
    pub fn from_coefficients_in(
        space: &VariableSpace,
        field: Field,
        var: usize,
        coeffs: &[Polynomial],
    ) -> Polynomial {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, s) in &c.terms {
                let mut mm = m.clone();
                mm.exponents_mut()[var] += k as u32;
                terms.push((mm, s.clone()));
            }
        }
        Polynomial::from_distinct_terms(space, field, terms)
    }

    /// Re-expresses the polynomial over another space via an index map.
    pub fn relabel(&self, target: &VariableSpace, index_map: &[usize]) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[index_map[i]] += x;
            }
            (Monomial::from_exponents(e), c.clone())
        });
        Polynomial::from_terms(target, self.field, terms)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("incompatible polynomials")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("incompatible polynomials")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("incompatible polynomials")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_poly()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(p: i64) -> (VariableSpace, Field) {
        (VariableSpace::indexed("x", 0, 3), Field::new(p).unwrap())
    }

    #[test]
    fn arith_examples() {
        let (s, f) = setup(0);
        let x0 = Polynomial::var(&s, f, 0);
        let x1 = Polynomial::var(&s, f, 1);
        let one = Polynomial::one(&s, f);
        assert_eq!(&(&x0 + &x1) + &(-&x1), x0);
        assert_eq!(&(&x0 + &one) * &(&x0 - &one), &x0.pow(2) - &one);

        let (s7, f7) = setup(7);
        let y = Polynomial::var(&s7, f7, 0);
        assert!(y.scale(&f7.from_i64(7)).is_zero());
    }

    #[test]
    fn mismatches_are_errors() {
        let (s, f) = setup(7);
        let other = VariableSpace::indexed("y", 0, 3);
        let a = Polynomial::var(&s, f, 0);
        let b = Polynomial::var(&other, f, 0);
        assert_eq!(a.try_add(&b), Err(Error::SpaceMismatch));
        let c = Polynomial::var(&s, Field::new(5).unwrap(), 0);
        assert!(matches!(a.try_mul(&c), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn exact_division() {
        let (s, f) = setup(0);
        let x = Polynomial::var(&s, f, 0);
        let y = Polynomial::var(&s, f, 1);
        let a = &(&x + &y) * &(&(&x * &y) - &Polynomial::one(&s, f));
        assert_eq!(
            a.div_exact(&(&x + &y)).unwrap(),
            &(&x * &y) - &Polynomial::one(&s, f)
        );
        assert!(a.div_exact(&(&x - &y)).is_none());
        assert!(x.div_exact(&y).is_none());
    }

    #[test]
    fn univariate_split_round_trip() {
        let (s, f) = setup(5);
        let x = Polynomial::var(&s, f, 0);
        let y = Polynomial::var(&s, f, 1);
        let p = &(&x.pow(3) * &y) + &(&y.pow(2) + &x);
        let parts = p.coefficients_in(0);
        assert_eq!(parts.len(), 4);
        assert_eq!(Polynomial::from_coefficients_in(&s, f, 0, &parts), p);
    }
}
