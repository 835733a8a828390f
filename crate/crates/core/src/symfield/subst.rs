//! Field endomorphisms given by images of the variables.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{det_exact, ExponentMatrix};
use crate::perms::Permutation;
use crate::scalars::{Field, Scalar};

use super::monomial::Monomial;
use super::poly::Polynomial;
use super::ratfunc::RationalFunction;
use super::space::VariableSpace;
use super::text::{format_polynomial, format_rational};

/// Shape of a map, detected from its images and used to pick a fast path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapKind {
    /// `x_i ↦ x_{π(i)}`.
    Permutation,
    /// `x_i ↦ c_i x_{π(i)}`.
    TwistedPermutation,
    /// `x_i ↦ c_i x^{M_i}` with `det M ≠ 0`.
    Monomial,
    /// Polynomial images of degree ≤ 1 with invertible linear part.
    Affine,
    General,
}

#[derive(Clone, Debug)]
enum Plan {
    Perm {
        targets: Vec<usize>,
        coeffs: Option<Vec<Scalar>>,
    },
    Monomial {
        exps: Vec<Vec<i64>>,
        coeffs: Vec<Scalar>,
        unimodular: bool,
    },
    Affine,
    General,
}

/// A substitution `x_i ↦ f_i`, extended to a field endomorphism.
#[derive(Clone)]
pub struct SubstitutionMap {
    space: VariableSpace,
    field: Field,
    images: Vec<RationalFunction>,
    kind: MapKind,
    plan: Plan,
}

impl PartialEq for SubstitutionMap {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.images == other.images
    }
}

impl Eq for SubstitutionMap {}

impl fmt::Debug for SubstitutionMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (i, img) in self.images.iter().enumerate() {
            m.entry(&self.space.name(i), &format_rational(img));
        }
        m.finish()
    }
}

/// Result of [`SubstitutionMap::is_fixed`]; `witness` is `f − m·f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedCheck {
    pub fixed: bool,
    pub witness: RationalFunction,
}

impl SubstitutionMap {
    /// Builds the map and classifies it.
    pub fn new(space: &VariableSpace, field: Field, images: Vec<RationalFunction>) -> Result<Self> {
        if images.len() != space.len() {
            return Err(Error::InvalidParameter(format!(
                "{} images for {} variables",
                images.len(),
                space.len()
            )));
        }
        for img in &images {
            space.check_same(img.space())?;
            if img.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.characteristic(),
                    right: img.field().characteristic(),
                });
            }
        }
        let (kind, plan) = classify(field, &images);
        Ok(SubstitutionMap {
            space: space.clone(),
            field,
            images,
            kind,
            plan,
        })
    }

    pub fn identity(space: &VariableSpace, field: Field) -> Self {
        let targets: Vec<usize> = (0..space.len()).collect();
        Self::permutation(space, field, &targets).expect("identity is a bijection")
    }

    /// `x_i ↦ x_{targets[i]}`.
    pub fn permutation(space: &VariableSpace, field: Field, targets: &[usize]) -> Result<Self> {
        let coeffs = vec![field.one(); targets.len()];
        Self::twisted(space, targets, &coeffs).and_then(|m| {
            if m.field == field {
                Ok(m)
            } else {
                Err(Error::FieldMismatch {
                    left: field.characteristic(),
                    right: m.field.characteristic(),
                })
            }
        })
    }

    /// `x_i ↦ coeffs[i] · x_{targets[i]}`.
    pub fn twisted(space: &VariableSpace, targets: &[usize], coeffs: &[Scalar]) -> Result<Self> {
        let n = space.len();
        if targets.len() != n || coeffs.len() != n {
            return Err(Error::InvalidParameter(format!(
                "expected {n} targets and coefficients"
            )));
        }
        let mut seen = vec![false; n];
        for &t in targets {
            if t >= n || std::mem::replace(&mut seen[t], true) {
                return Err(Error::InvalidParameter(format!(
                    "targets {targets:?} are not a permutation"
                )));
            }
        }
        let field = coeffs.first().map_or(Field::rationals(), Scalar::field);
        let images = targets
            .iter()
            .zip(coeffs)
            .map(|(&t, c)| {
                if c.is_zero() {
                    return Err(Error::InvalidParameter("zero twist coefficient".into()));
                }
                Ok(RationalFunction::var(space, field, t).scale(c))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(space, field, images)
    }

    /// The index action `x_{i-1} ↦ x_{π(i)-1}` of a permutation on points `1..=n`.
    pub fn from_permutation(
        space: &VariableSpace,
        field: Field,
        perm: &Permutation,
    ) -> Result<Self> {
        if perm.degree() != space.len() {
            return Err(Error::DegreeMismatch {
                left: perm.degree(),
                right: space.len(),
            });
        }
        Self::permutation(space, field, perm.images0())
    }

    pub fn space(&self) -> &VariableSpace {
        &self.space
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn images(&self) -> &[RationalFunction] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &RationalFunction {
        &self.images[i]
    }

    /// Index targets for permutation-type maps.
    pub fn targets(&self) -> Option<&[usize]> {
        match &self.plan {
            Plan::Perm { targets, .. } => Some(targets),
            _ => None,
        }
    }

    fn check(&self, f: &RationalFunction) -> Result<()> {
        self.space.check_same(f.space())?;
        if f.field() != self.field {
            return Err(Error::FieldMismatch {
                left: self.field.characteristic(),
                right: f.field().characteristic(),
            });
        }
        Ok(())
    }

    /// `subst_apply`: the image of `f`, in canonical form.
    pub fn apply(&self, f: &RationalFunction) -> Result<RationalFunction> {
        self.check(f)?;
        if f.is_zero() {
            return Ok(f.clone());
        }
        match &self.plan {
            Plan::Perm { targets, coeffs } => {
                let n = permute_poly(f.numerator(), targets, coeffs.as_deref());
                let d = permute_poly(f.denominator(), targets, coeffs.as_deref());
                Ok(RationalFunction::from_coprime(n, d))
            }
            Plan::Monomial {
                exps,
                coeffs,
                unimodular,
            } => {
                let (n, a) = monomial_image(f.numerator(), exps, coeffs);
                let (d, b) = monomial_image(f.denominator(), exps, coeffs);
                let shift_n: Vec<u32> = a
                    .iter()
                    .zip(&b)
                    .map(|(x, y)| (x - y).max(0) as u32)
                    .collect();
                let shift_d: Vec<u32> = a
                    .iter()
                    .zip(&b)
                    .map(|(x, y)| (y - x).max(0) as u32)
                    .collect();
                let one = self.field.one();
                let n = n.mul_term(&Monomial::from_exponents(shift_n), &one);
                let d = d.mul_term(&Monomial::from_exponents(shift_d), &one);
                if *unimodular {
                    Ok(RationalFunction::from_coprime(n, d))
                } else {
                    RationalFunction::new(n, d)
                }
            }
            Plan::Affine => {
                let mut cache = PowerCache::new(self, false);
                let n = cache.eval(f.numerator()).0;
                let d = cache.eval(f.denominator()).0;
                Ok(RationalFunction::from_coprime(n, d))
            }
            Plan::General => self.apply_generic(f),
        }
    }

    pub fn apply_poly(&self, p: &Polynomial) -> Result<RationalFunction> {
        self.apply(&RationalFunction::from_poly(p.clone()))
    }

    /// Substitution by full evaluation and one gcd, bypassing every fast path.
    #[doc(hidden)]
    pub fn apply_generic(&self, f: &RationalFunction) -> Result<RationalFunction> {
        self.check(f)?;
        if f.is_zero() {
            return Ok(f.clone());
        }
        let mut cache = PowerCache::new(self, true);
        let (nn, nb) = cache.eval(f.numerator());
        let (dn, db) = cache.eval(f.denominator());
        if dn.is_zero() {
            let vars: Vec<&str> = f
                .denominator()
                .support()
                .iter()
                .enumerate()
                .filter(|(_, &s)| s)
                .map(|(i, _)| self.space.name(i))
                .collect();
            return Err(Error::Pole(format!(
                "denominator {} maps to 0 under the images of {}",
                format_polynomial(f.denominator()),
                vars.join(", ")
            )));
        }
        RationalFunction::new(&nn * &db, &nb * &dn)
    }

    /// `subst_compose(a, b)`: the map `v ↦ a·(b·v)`, so that
    /// `compose(a, b)·f = a·(b·f)`.
    pub fn compose(&self, other: &SubstitutionMap) -> Result<SubstitutionMap> {
        self.space.check_same(&other.space)?;
        if let (
            Plan::Perm {
                targets: ta,
                coeffs: ca,
            },
            Plan::Perm {
                targets: tb,
                coeffs: cb,
            },
        ) = (&self.plan, &other.plan)
        {
            // b sends x_i to cb_i x_{tb_i}, then a sends that to cb_i ca_{tb_i} x_{ta[tb_i]}
            let targets: Vec<usize> = tb.iter().map(|&j| ta[j]).collect();
            let one = self.field.one();
            let coeffs: Vec<Scalar> = tb
                .iter()
                .enumerate()
                .map(|(i, &j)| {
                    let x = cb.as_ref().map_or(&one, |c| &c[i]);
                    let y = ca.as_ref().map_or(&one, |c| &c[j]);
                    x * y
                })
                .collect();
            return Self::twisted(&self.space, &targets, &coeffs);
        }
        let images = other
            .images
            .iter()
            .map(|g| self.apply(g))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&self.space, self.field, images)
    }

    /// The inverse map, for every kind except [`MapKind::General`].
    pub fn inverse(&self) -> Result<SubstitutionMap> {
        let n = self.space.len();
        match &self.plan {
            Plan::Perm { targets, coeffs } => {
                let one = self.field.one();
                let mut inv_t = vec![0; n];
                let mut inv_c = vec![one.clone(); n];
                for (i, &t) in targets.iter().enumerate() {
                    inv_t[t] = i;
                    inv_c[t] = coeffs
                        .as_ref()
                        .map_or(one.clone(), |c| c[i].inv().expect("nonzero twist"));
                }
                Self::twisted(&self.space, &inv_t, &inv_c)
            }
            Plan::Monomial { exps, coeffs, .. } => {
                let inv = invert_integer_matrix(exps).ok_or_else(|| {
                    Error::Precondition(
                        "monomial map has no inverse monomial map (non-unimodular)".into(),
                    )
                })?;
                let images = (0..n)
                    .map(|j| {
                        let mut c = self.field.one();
                        for (i, &e) in inv[j].iter().enumerate() {
                            c = &c * &coeffs[i].pow(-e)?;
                        }
                        laurent(&self.space, &c, &inv[j])
                    })
                    .collect::<Result<Vec<_>>>()?;
                Self::new(&self.space, self.field, images)
            }
            Plan::Affine => {
                let (a, b) = affine_parts(&self.images);
                let c = invert_scalar_matrix(a, self.field).expect("affine maps are invertible");
                let x: Vec<Polynomial> = (0..n)
                    .map(|i| Polynomial::var(&self.space, self.field, i))
                    .collect();
                let images = (0..n)
                    .map(|i| {
                        let mut acc = Polynomial::zero(&self.space, self.field);
                        for j in 0..n {
                            if !c[i][j].is_zero() {
                                let shifted =
                                    &x[j] - &Polynomial::constant(&self.space, b[j].clone());
                                acc = &acc + &shifted.scale(&c[i][j]);
                            }
                        }
                        RationalFunction::from_poly(acc)
                    })
                    .collect();
                Self::new(&self.space, self.field, images)
            }
            Plan::General => Err(Error::Precondition(
                "inverse of a general substitution is not computed".into(),
            )),
        }
    }

    /// `self^e`; negative powers need [`SubstitutionMap::inverse`].
    pub fn pow(&self, e: i64) -> Result<SubstitutionMap> {
        let mut base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::identity(&self.space, self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.compose(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, img)| *img == RationalFunction::var(&self.space, self.field, i))
    }

    pub fn is_fixed(&self, f: &RationalFunction) -> Result<FixedCheck> {
        let image = self.apply(f)?;
        let witness = f - &image;
        Ok(FixedCheck {
            fixed: witness.is_zero(),
            witness,
        })
    }

    /// The scalar `c` with `m·f = c·f`, if there is one.
    pub fn eigen_factor(&self, f: &RationalFunction) -> Result<Option<Scalar>> {
        if f.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let image = self.apply(f)?;
        Ok((&image / f).constant_value())
    }
}

fn laurent(space: &VariableSpace, c: &Scalar, exps: &[i64]) -> Result<RationalFunction> {
    let pos: Vec<u32> = exps.iter().map(|&e| e.max(0) as u32).collect();
    let neg: Vec<u32> = exps.iter().map(|&e| (-e).max(0) as u32).collect();
    RationalFunction::new(
        Polynomial::term(space, Monomial::from_exponents(pos), c.clone()),
        Polynomial::term(space, Monomial::from_exponents(neg), c.field().one()),
    )
}

fn as_laurent(f: &RationalFunction) -> Option<(Scalar, Vec<i64>)> {
    let (n, d) = (f.numerator(), f.denominator());
    if n.len() != 1 || d.len() != 1 {
        return None;
    }
    let (a, c) = &n.terms()[0];
    let b = &d.terms()[0].0;
    let e = a
        .exponents()
        .iter()
        .zip(b.exponents())
        .map(|(&x, &y)| i64::from(x) - i64::from(y))
        .collect();
    Some((c.clone(), e))
}

fn classify(field: Field, images: &[RationalFunction]) -> (MapKind, Plan) {
    let n = images.len();
    if let Some(mono) = images.iter().map(as_laurent).collect::<Option<Vec<_>>>() {
        let single = |e: &[i64]| {
            let mut nz = e.iter().enumerate().filter(|(_, &x)| x != 0);
            match (nz.next(), nz.next()) {
                (Some((j, 1)), None) => Some(j),
                _ => None,
            }
        };
        if let Some(targets) = mono
            .iter()
            .map(|(_, e)| single(e))
            .collect::<Option<Vec<_>>>()
        {
            let mut seen = vec![false; n];
            if targets
                .iter()
                .all(|&t| !std::mem::replace(&mut seen[t], true))
            {
                let coeffs: Vec<Scalar> = mono.iter().map(|(c, _)| c.clone()).collect();
                return if coeffs.iter().all(Scalar::is_one) {
                    (
                        MapKind::Permutation,
                        Plan::Perm {
                            targets,
                            coeffs: None,
                        },
                    )
                } else {
                    (
                        MapKind::TwistedPermutation,
                        Plan::Perm {
                            targets,
                            coeffs: Some(coeffs),
                        },
                    )
                };
            }
        }
        let exps: Vec<Vec<i64>> = mono.iter().map(|(_, e)| e.clone()).collect();
        let det = ExponentMatrix::new(exps.clone())
            .and_then(|m| det_exact(&m))
            .unwrap_or_else(|_| BigInt::zero());
        if !det.is_zero() {
            return (
                MapKind::Monomial,
                Plan::Monomial {
                    exps,
                    coeffs: mono.into_iter().map(|(c, _)| c).collect(),
                    unimodular: det.abs().is_one(),
                },
            );
        }
    }
    let affine = images
        .iter()
        .all(|f| f.is_polynomial() && f.numerator().total_degree() <= 1);
    if affine && invert_scalar_matrix(affine_parts(images).0, field).is_some() {
        return (MapKind::Affine, Plan::Affine);
    }
    (MapKind::General, Plan::General)
}

/// Linear coefficient matrix and constant vector of degree-≤1 images.
fn affine_parts(images: &[RationalFunction]) -> (Vec<Vec<Scalar>>, Vec<Scalar>) {
    let n = images.len();
    let field = images
        .first()
        .map_or(Field::rationals(), RationalFunction::field);
    let mut a = vec![vec![field.zero(); n]; n];
    let mut b = vec![field.zero(); n];
    for (i, f) in images.iter().enumerate() {
        for (m, c) in f.numerator().terms() {
            match m.exponents().iter().position(|&e| e > 0) {
                Some(j) => a[i][j] = c.clone(),
                None => b[i] = c.clone(),
            }
        }
    }
    (a, b)
}

pub(crate) fn invert_scalar_matrix(
    mut a: Vec<Vec<Scalar>>,
    field: Field,
) -> Option<Vec<Vec<Scalar>>> {
    let n = a.len();
    let mut inv: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { field.one() } else { field.zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let s = a[col][col].inv().ok()?;
        for j in 0..n {
            a[col][j] = &a[col][j] * &s;
            inv[col][j] = &inv[col][j] * &s;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                a[r][j] = &a[r][j] - &(&f * &a[col][j]);
                inv[r][j] = &inv[r][j] - &(&f * &inv[col][j]);
            }
        }
    }
    Some(inv)
}

/// Integer inverse of a unimodular matrix.
fn invert_integer_matrix(m: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let field = Field::rationals();
    let a = m
        .iter()
        .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
        .collect();
    let inv = invert_scalar_matrix(a, field)?;
    inv.iter()
        .map(|r| {
            r.iter()
                .map(|s| match s {
                    Scalar::Rational(q) if q.is_integer() => q.to_integer().to_i64(),
                    _ => None,
                })
                .collect()
        })
        .collect()
}

fn permute_poly(p: &Polynomial, targets: &[usize], coeffs: Option<&[Scalar]>) -> Polynomial {
    let n = targets.len();
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut e = vec![0u32; n];
            let mut c = c.clone();
            for (i, &k) in m.exponents().iter().enumerate() {
                if k > 0 {
                    e[targets[i]] = k;
                    if let Some(cs) = coeffs {
                        c = &c * &cs[i].pow(i64::from(k)).expect("nonzero twist");
                    }
                }
            }
            (Monomial::from_exponents(e), c)
        })
        .collect();
    Polynomial::from_distinct_terms(p.space(), p.field(), terms)
}

/// Image of `p` under a nondegenerate monomial map, as `(q, α)` with
/// `p ↦ q · x^α` and `q` free of monomial factors.
fn monomial_image(p: &Polynomial, exps: &[Vec<i64>], coeffs: &[Scalar]) -> (Polynomial, Vec<i64>) {
    let n = exps.len();
    let raw: Vec<(Vec<i64>, Scalar)> = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut e = vec![0i64; n];
            let mut c = c.clone();
            for (i, &k) in m.exponents().iter().enumerate() {
                if k > 0 {
                    for (ej, &mij) in e.iter_mut().zip(&exps[i]) {
                        *ej += mij * i64::from(k);
                    }
                    c = &c * &coeffs[i].pow(i64::from(k)).expect("nonzero coefficient");
                }
            }
            (e, c)
        })
        .collect();
    let alpha: Vec<i64> = (0..n)
        .map(|j| raw.iter().map(|(e, _)| e[j]).min().unwrap_or(0))
        .collect();
    let terms = raw
        .into_iter()
        .map(|(e, c)| {
            let m = e.iter().zip(&alpha).map(|(x, a)| (x - a) as u32).collect();
            (Monomial::from_exponents(m), c)
        })
        .collect();
    (
        Polynomial::from_distinct_terms(p.space(), p.field(), terms),
        alpha,
    )
}

/// Powers of image numerators and denominators, built on demand.
struct PowerCache<'a> {
    map: &'a SubstitutionMap,
    with_denominators: bool,
    num: Vec<Vec<Polynomial>>,
    den: Vec<Vec<Polynomial>>,
}

impl<'a> PowerCache<'a> {
    fn new(map: &'a SubstitutionMap, with_denominators: bool) -> Self {
        let n = map.space.len();
        PowerCache {
            map,
            with_denominators,
            num: vec![Vec::new(); n],
            den: vec![Vec::new(); n],
        }
    }

    fn power(table: &mut [Vec<Polynomial>], base: &Polynomial, i: usize, k: usize) -> Polynomial {
        let t = &mut table[i];
        if t.is_empty() {
            t.push(Polynomial::one(base.space(), base.field()));
        }
        while t.len() <= k {
            let next = &t[t.len() - 1] * base;
            t.push(next);
        }
        t[k].clone()
    }

    /// `(N_P, B_P)` with `P(a_i/b_i) = N_P / B_P` and `B_P = ∏ b_i^{deg_i P}`.
    fn eval(&mut self, p: &Polynomial) -> (Polynomial, Polynomial) {
        let n = self.map.space.len();
        let degs: Vec<u32> = (0..n).map(|i| p.degree_in(i)).collect();
        let mut acc = Polynomial::zero(p.space(), p.field());
        for (m, c) in p.terms() {
            let mut t = Polynomial::constant(p.space(), c.clone());
            for (i, &deg) in degs.iter().enumerate() {
                let e = m.exponent(i);
                let img = &self.map.images[i];
                if e > 0 {
                    let a = Self::power(&mut self.num, img.numerator(), i, e as usize);
                    t = &t * &a;
                }
                if self.with_denominators && deg > e && !img.denominator().is_one() {
                    let b = Self::power(&mut self.den, img.denominator(), i, (deg - e) as usize);
                    t = &t * &b;
                }
            }
            acc = &acc + &t;
        }
        let mut denom = Polynomial::one(p.space(), p.field());
        if self.with_denominators {
            for (i, &d) in degs.iter().enumerate() {
                if d > 0 && !self.map.images[i].denominator().is_one() {
                    denom = &denom
                        * &Self::power(
                            &mut self.den,
                            self.map.images[i].denominator(),
                            i,
                            d as usize,
                        );
                }
            }
        }
        (acc, denom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(p: i64, n: usize) -> (VariableSpace, Field, Vec<RationalFunction>) {
        let s = VariableSpace::indexed("x", 0, n);
        let f = Field::new(p).unwrap();
        let x = (0..n).map(|i| RationalFunction::var(&s, f, i)).collect();
        (s, f, x)
    }

    #[test]
    fn cyclic_shift() {
        let (s, f, x) = setup(0, 7);
        let sigma = SubstitutionMap::permutation(&s, f, &[1, 2, 3, 4, 5, 6, 0]).unwrap();
        assert_eq!(sigma.kind(), MapKind::Permutation);
        assert_eq!(sigma.apply(&x[0]).unwrap(), x[1]);
        let sum = x.iter().skip(1).fold(x[0].clone(), |a, b| &a + b);
        assert!(sigma.is_fixed(&sum).unwrap().fixed);
        assert!(sigma
            .compose(&sigma.inverse().unwrap())
            .unwrap()
            .is_identity());
        assert!(sigma.pow(7).unwrap().is_identity());
    }

    #[test]
    fn translation_invariant() {
        // y1 -> y2, y2 -> 1 - y1 - y2 over GF(3)
        let (s, f, y) = setup(3, 2);
        let one = RationalFunction::one(&s, f);
        let sigma =
            SubstitutionMap::new(&s, f, vec![y[1].clone(), &(&one - &y[0]) - &y[1]]).unwrap();
        assert_eq!(sigma.kind(), MapKind::Affine);
        let u = &y[0].scale(&f.from_i64(2)) + &y[1];
        let check = sigma.is_fixed(&u).unwrap();
        assert!(!check.fixed);
        assert_eq!(check.witness, -&one);
        let inv = sigma.inverse().unwrap();
        assert!(sigma.compose(&inv).unwrap().is_identity());
    }

    #[test]
    fn monomial_fast_path_matches_generic() {
        // x0 -> x1, x1 -> 1/(x0 x1)
        let (s, f, x) = setup(0, 2);
        let one = RationalFunction::one(&s, f);
        let sigma =
            SubstitutionMap::new(&s, f, vec![x[1].clone(), &one / &(&x[0] * &x[1])]).unwrap();
        assert_eq!(sigma.kind(), MapKind::Monomial);
        let g = &(&(&x[0] + &one) * &x[1]) / &(&x[0] - &(&x[1] * &x[1]));
        assert_eq!(sigma.apply(&g).unwrap(), sigma.apply_generic(&g).unwrap());
        assert!(sigma.pow(3).unwrap().is_identity());
        assert!(sigma
            .pow(-1)
            .unwrap()
            .compose(&sigma)
            .unwrap()
            .is_identity());
    }

    #[test]
    fn twisted_and_eigen() {
        let (s, f, x) = setup(7, 2);
        let m = SubstitutionMap::twisted(&s, &[0, 1], &[f.from_i64(3), f.one()]).unwrap();
        assert_eq!(m.kind(), MapKind::TwistedPermutation);
        let g = &x[0] * &x[0];
        assert_eq!(m.eigen_factor(&g).unwrap(), Some(f.from_i64(2)));
        assert_eq!(m.eigen_factor(&(&x[0] + &x[1])).unwrap(), None);
        let id = SubstitutionMap::identity(&s, f);
        assert_eq!(id.eigen_factor(&g).unwrap(), Some(f.one()));
    }

    #[test]
    fn pole_is_reported() {
        // x0 -> x1, x1 -> x1 sends x0 - x1 to 0
        let (s, f, x) = setup(0, 2);
        let m = SubstitutionMap::new(&s, f, vec![x[1].clone(), x[1].clone()]).unwrap();
        assert_eq!(m.kind(), MapKind::General);
        let err = m.apply(&(&x[0] / &(&x[0] - &x[1]))).unwrap_err();
        assert!(matches!(err, Error::Pole(ref msg) if msg.contains("x0")));
    }
}
