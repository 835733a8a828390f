//! Reduction of a twisted monomial action on `k(t, s, x_1, …, x_{n−1})` with
//! `x_0 = t^d / (x_1⋯x_{n−1})` to a trivial character.

use num_integer::Integer;
use serde_json::{json, Value};

use crate::catalog::greek_name;
use crate::error::{Error, Result};
use crate::scalars::{Field, Scalar};
use crate::symfield::{
    format_rational, Character, RationalFunction, SubstitutionMap, VariableSpace,
};

use super::{product, var, Outcome};

/// A group acting on `k(t, s, x_1, …, x_{n−1})` through named generators,
/// with `g·t = χ(g)t`, `g·s = s` and `g` permuting `x_0, …, x_{n−1}`.
#[derive(Clone, Debug)]
pub struct Thm15Instance {
    pub n: usize,
    pub d: u32,
    pub field: Field,
    pub space: VariableSpace,
    pub chi: Character,
    pub generators: Vec<(String, SubstitutionMap)>,
}

impl Thm15Instance {
    /// The space `t, s, x1, …, x_{n−1}`.
    pub fn space_for(n: usize) -> VariableSpace {
        VariableSpace::new(
            ["t".to_string(), "s".to_string()]
                .into_iter()
                .chain((1..n).map(|i| format!("x{i}"))),
        )
        .expect("distinct names")
    }

    /// `x_0 = t^d / (x_1⋯x_{n−1})`.
    pub fn x0(&self) -> RationalFunction {
        let (space, field) = (&self.space, self.field);
        let t = var(space, field, "t");
        let rest = product(
            space,
            field,
            (1..self.n).map(|i| var(space, field, &format!("x{i}"))),
        );
        &t.pow(i64::from(self.d)).expect("positive power") / &rest
    }

    /// `x_0, …, x_{n−1}`.
    pub fn xs(&self) -> Vec<RationalFunction> {
        let mut xs = vec![self.x0()];
        xs.extend((1..self.n).map(|i| var(&self.space, self.field, &format!("x{i}"))));
        xs
    }
}

/// The instance answering the question for `D7` with the sign character:
/// `σ: x_i ↦ x_{i+1}`, `τ: t ↦ −t, x_i ↦ x_{3i}`, indices mod 7, `d = 2`.
pub fn question14_instance(field: Field) -> Result<Thm15Instance> {
    if field.characteristic() == 2 {
        return Err(Error::Precondition(
            "the sign character is trivial in characteristic 2".into(),
        ));
    }
    let n = 7;
    let space = Thm15Instance::space_for(n);
    let mut inst = Thm15Instance {
        n,
        d: 2,
        field,
        chi: Character::new(&["sigma", "tau"], vec![field.one(), field.from_i64(-1)], 2)?,
        generators: Vec::new(),
        space: space.clone(),
    };
    let xs = inst.xs();
    let t = var(&space, field, "t");
    let s = var(&space, field, "s");
    let mut sigma = vec![t.clone(), s.clone()];
    sigma.extend((1..n).map(|i| xs[(i + 1) % n].clone()));
    let mut tau = vec![-&t, s];
    tau.extend((1..n).map(|i| xs[3 * i % n].clone()));
    inst.generators = vec![
        ("sigma".into(), SubstitutionMap::new(&space, field, sigma)?),
        ("tau".into(), SubstitutionMap::new(&space, field, tau)?),
    ];
    Ok(inst)
}

/// `a·n + b·d = 1`, `m` the order of `χ^a`, and `u = (t^a s^b)^m` fixed by
/// every generator.
#[derive(Clone, Debug)]
pub struct ReductionCertificate {
    pub n: usize,
    pub d: u32,
    pub a: i64,
    pub b: i64,
    pub m: u64,
    pub t_a_s_b: RationalFunction,
    pub u: RationalFunction,
    pub checks: Vec<Outcome>,
}

impl ReductionCertificate {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "d": self.d,
            "a": self.a,
            "b": self.b,
            "m": self.m,
            "t^a s^b": format_rational(&self.t_a_s_b),
            "u": format_rational(&self.u),
            "checks": self.checks.iter().map(|c| json!({
                "label": c.label,
                "holds": c.holds,
                "witness": c.witness,
                "anchor": c.anchor,
            })).collect::<Vec<_>>(),
        })
    }
}

fn outcome(label: impl Into<String>, holds: bool, witness: impl Into<String>) -> Outcome {
    Outcome {
        label: label.into(),
        holds,
        witness: witness.into(),
        anchor: "thm1.5",
    }
}

/// Validates the hypotheses and produces the certificate.
pub fn thm15_reduce(inst: &Thm15Instance) -> Result<ReductionCertificate> {
    let (n, d, field) = (inst.n, inst.d, inst.field);
    if n < 2 || d == 0 {
        return Err(Error::InvalidParameter(format!(
            "need n ≥ 2 and d ≥ 1, got n = {n}, d = {d}"
        )));
    }
    let egcd = (n as i64).extended_gcd(&i64::from(d));
    if egcd.gcd != 1 {
        return Err(Error::Precondition(format!(
            "gcd(n, d) = gcd({n}, {d}) = {} ≠ 1",
            egcd.gcd
        )));
    }
    for name in ["t", "s"] {
        inst.space.require(name)?;
    }
    for i in 1..n {
        inst.space.require(&format!("x{i}"))?;
    }
    for (name, _) in &inst.generators {
        inst.chi.value(name)?;
    }
    for (name, v) in inst
        .chi
        .names()
        .iter()
        .zip(inst.chi.names().iter().map(|g| inst.chi.value(g)))
    {
        if !v?.pow(i64::from(d))?.is_one() {
            return Err(Error::Precondition(format!("χ({name})^{d} ≠ 1")));
        }
    }

    let t = var(&inst.space, field, "t");
    let s = var(&inst.space, field, "s");
    let xs = inst.xs();
    for (name, g) in &inst.generators {
        let chi = inst.chi.value(name)?;
        if g.apply(&t)? != t.scale(chi) {
            return Err(Error::Precondition(format!("{name}·t ≠ χ({name})·t")));
        }
        if g.apply(&s)? != s {
            return Err(Error::Precondition(format!("{name}·s ≠ s")));
        }
        let mut hit = vec![false; n];
        for x in &xs {
            let image = g.apply(x)?;
            match xs.iter().position(|y| *y == image) {
                Some(j) if !hit[j] => hit[j] = true,
                _ => {
                    return Err(Error::Precondition(format!(
                        "{name} does not permute x0, …, x{}: {} ↦ {}",
                        n - 1,
                        format_rational(x),
                        format_rational(&image)
                    )))
                }
            }
        }
    }

    // smallest a ≥ 0 with a·n ≡ 1 mod d
    let d64 = i64::from(d);
    let a = egcd.x.rem_euclid(d64);
    let b = (1 - a * n as i64) / d64;
    let chi_a = inst.chi.power(a)?;
    let m = chi_a
        .names()
        .iter()
        .map(|g| {
            chi_a
                .value(g)
                .map(|v| v.multiplicative_order().unwrap_or(0))
        })
        .collect::<Result<Vec<u64>>>()?
        .into_iter()
        .fold(1u64, |acc, o| acc.lcm(&o.max(1)));
    let ts = &t.pow(a)? * &s.pow(b)?;
    let u = ts.pow(m as i64)?;

    let mut checks = vec![outcome(
        format!("a·n + b·d = 1 with a = {a}, b = {b}"),
        a * n as i64 + b * d64 == 1,
        format!("{a}·{n} + ({b})·{d} = {}", a * n as i64 + b * d64),
    )];
    let lhs = &t.pow(d64)? / &s.pow(n as i64)?;
    let rhs = product(&inst.space, field, xs.iter().map(|x| x / &s));
    let diff = &lhs - &rhs;
    checks.push(outcome(
        "t^d/s^n = ∏(x_i/s)",
        diff.is_zero(),
        if diff.is_zero() {
            format_rational(&lhs)
        } else {
            format!("difference {}", format_rational(&diff))
        },
    ));
    for (name, g) in &inst.generators {
        let factor: Scalar = chi_a.value(name)?.clone();
        let image = g.apply(&ts)?;
        let expected = ts.scale(&factor);
        checks.push(outcome(
            format!(
                "{}·(t^a s^b) = χ^a({})·t^a s^b",
                greek_name(name),
                greek_name(name)
            ),
            image == expected,
            format!("factor {factor}"),
        ));
    }
    for (name, g) in &inst.generators {
        let fixed = g.is_fixed(&u)?;
        checks.push(outcome(
            format!("u fixed by {}", greek_name(name)),
            fixed.fixed,
            if fixed.fixed {
                format!("u = {}", format_rational(&u))
            } else {
                format!("u − g·u = {}", format_rational(&fixed.witness))
            },
        ));
    }
    Ok(ReductionCertificate {
        n,
        d,
        a,
        b,
        m,
        t_a_s_b: ts,
        u,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn question_instance() {
        let cert = thm15_reduce(&question14_instance(Field::rationals()).unwrap()).unwrap();
        assert_eq!((cert.a, cert.b, cert.m), (1, -3, 2));
        assert_eq!(cert.u.to_string(), "(t^2)/(s^6)");
        assert!(cert.holds(), "{:?}", cert.checks);
        let labels: Vec<&str> = cert.checks.iter().map(|c| c.label.as_str()).collect();
        assert!(labels.contains(&"u fixed by σ") && labels.contains(&"u fixed by τ"));
        assert!(question14_instance(Field::new(2).unwrap()).is_err());
    }

    #[test]
    fn rejects_bad_hypotheses() {
        let q = Field::rationals();
        let mut inst = question14_instance(q).unwrap();
        inst.d = 7;
        assert!(matches!(thm15_reduce(&inst), Err(Error::Precondition(_))));

        let mut inst = question14_instance(q).unwrap();
        inst.chi = Character::new(&["sigma", "tau"], vec![q.one(), q.from_i64(2)], 2).unwrap();
        assert!(matches!(thm15_reduce(&inst), Err(Error::Precondition(_))));

        let mut inst = question14_instance(q).unwrap();
        inst.chi = Character::new(&["sigma", "tau"], vec![q.one(), q.one()], 2).unwrap();
        assert!(matches!(thm15_reduce(&inst), Err(Error::Precondition(_))));
    }
}
