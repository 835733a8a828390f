//! The one-generator constructions: the Hajja change of variables, the
//! `u`/`z_i`/`v_i` elements for the affine cyclic action, Artin–Schreier
//! products and the fixed generators of scaling and translation.

use crate::error::{Error, Result};
use crate::scalars::{is_prime, Field, Scalar};
use crate::symfield::{Polynomial, RationalFunction, SubstitutionMap, VariableSpace};

use super::{linear_combination, product, ConstructionOutput};

/// `w = 1 + x1 + x1x2 + … + x1⋯x_{n−1}`, `y_1 = 1/w`, `y_i = x1⋯x_{i−1}/w`,
/// for `σ: x1 ↦ x2 ↦ … ↦ x_{n−1} ↦ 1/∏x_i`.
pub fn hajja_transform(n: usize, field: Field) -> Result<ConstructionOutput> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n}, need n ≥ 2")));
    }
    let space = VariableSpace::indexed("x", 1, n - 1);
    let mut out = ConstructionOutput::new(format!("hajja-n{n}"), field, &space);
    let x: Vec<RationalFunction> = (0..n - 1)
        .map(|i| RationalFunction::var(&space, field, i))
        .collect();
    let all = product(&space, field, x.iter().cloned());

    let mut images: Vec<RationalFunction> = x[1..].to_vec();
    images.push(all.inv()?);
    out.add_map("sigma", SubstitutionMap::new(&space, field, images)?);

    // prefix[k] = x1⋯x_k
    let mut prefix = vec![RationalFunction::one(&space, field)];
    for xi in &x {
        let next = prefix.last().expect("nonempty") * xi;
        prefix.push(next);
    }
    let w = prefix
        .iter()
        .fold(RationalFunction::zero(&space, field), |acc, p| &acc + p);
    out.add_element("w", w.clone());
    let ys: Vec<RationalFunction> = (1..=n)
        .map(|i| out.add_element(format!("y{i}"), (&prefix[i - 1] / &w).clone()))
        .collect();
    for i in 1..=n {
        let next = i % n + 1;
        out.claim(
            "sigma",
            &format!("y{i}"),
            ys[next - 1].clone(),
            format!("y{next}"),
            "lemma2.8",
        );
    }
    let total = ys
        .iter()
        .fold(RationalFunction::zero(&space, field), |acc, y| &acc + y);
    out.relation(
        format!("y1 + … + y{n} = 1"),
        total,
        RationalFunction::one(&space, field),
        "lemma2.8",
    );
    out.map_relation(format!("sigma^{n}"), "1", "lemma2.8");
    Ok(out)
}

/// For `σ: y1 ↦ y2 ↦ … ↦ y_{p−1} ↦ 1 − Σy_i`.
///
/// In characteristic `p`: `u = Σ(p−i)y_i` with `σ·u = u + 1`. Otherwise:
/// `z_i = y_i − 1/p` cycling to `−Σz_i`, and on separate variables
/// `x0..x_{p−1}` permuted cyclically, `v = Σx_i`, `v_i = x_i − v/p` with
/// `Σv_i = 0`.
pub fn lemma29_invariants(p: usize, field: Field) -> Result<ConstructionOutput> {
    if p < 3 || !is_prime(p as u64) {
        return Err(Error::InvalidParameter(format!(
            "p = {p} is not an odd prime"
        )));
    }
    let modular = field.characteristic() as usize == p;
    let mut names: Vec<String> = (1..p).map(|i| format!("y{i}")).collect();
    if !modular {
        names.extend((0..p).map(|i| format!("x{i}")));
    }
    let space = VariableSpace::new(names)?;
    let part = if modular { "i" } else { "ii" };
    let mut out = ConstructionOutput::new(format!("lemma2.9-{part}-p{p}"), field, &space);
    let y: Vec<RationalFunction> = (0..p - 1)
        .map(|i| RationalFunction::var(&space, field, i))
        .collect();
    let one = RationalFunction::one(&space, field);
    let sum_y = y
        .iter()
        .fold(RationalFunction::zero(&space, field), |acc, v| &acc + v);

    let mut images: Vec<RationalFunction> = y[1..].to_vec();
    images.push(&one - &sum_y);
    if !modular {
        images.extend((0..p).map(|i| RationalFunction::var(&space, field, p - 1 + (i + 1) % p)));
    }
    out.add_map("sigma", SubstitutionMap::new(&space, field, images)?);

    if modular {
        let terms: Vec<(Scalar, &RationalFunction)> = (1..p)
            .map(|i| (field.from_i64((p - i) as i64), &y[i - 1]))
            .collect();
        let u = out.add_element("u", linear_combination(&space, field, &terms));
        out.claim("sigma", "u", &u + &one, "u + 1", "lemma2.9(i)");
        return Ok(out);
    }

    let inv_p = RationalFunction::constant(&space, field.from_ratio(1, p as i64)?);
    let z: Vec<RationalFunction> = (1..p)
        .map(|i| out.add_element(format!("z{i}"), &y[i - 1] - &inv_p))
        .collect();
    for (i, next) in z.iter().enumerate().take(p - 1).skip(1) {
        out.claim(
            "sigma",
            &format!("z{i}"),
            next.clone(),
            format!("z{}", i + 1),
            "lemma2.9(ii)",
        );
    }
    let sum_z = z
        .iter()
        .fold(RationalFunction::zero(&space, field), |acc, v| &acc + v);
    out.claim(
        "sigma",
        &format!("z{}", p - 1),
        -&sum_z,
        "−(z1 + … + z_{p−1})",
        "lemma2.9(ii)",
    );

    let x: Vec<RationalFunction> = (0..p)
        .map(|i| RationalFunction::var(&space, field, p - 1 + i))
        .collect();
    let v = out.add_element(
        "v",
        x.iter()
            .fold(RationalFunction::zero(&space, field), |acc, t| &acc + t),
    );
    let v_over_p = &v * &inv_p;
    let vs: Vec<RationalFunction> = (0..p)
        .map(|i| out.add_element(format!("v{i}"), &x[i] - &v_over_p))
        .collect();
    out.claim("sigma", "v", v.clone(), "v", "lemma2.9(ii)");
    for i in 0..p {
        let j = (i + 1) % p;
        out.claim(
            "sigma",
            &format!("v{i}"),
            vs[j].clone(),
            format!("v{j}"),
            "lemma2.9(ii)",
        );
    }
    let sum_v = vs
        .iter()
        .fold(RationalFunction::zero(&space, field), |acc, t| &acc + t);
    out.relation(
        "v0 + … + v_{p−1} = 0",
        sum_v,
        RationalFunction::zero(&space, field),
        "lemma2.9(ii)",
    );
    Ok(out)
}

/// `∏_{i=0}^{p−1}(X + i) = X^p − X` over GF(p), expanded.
pub fn artin_schreier_identity(p: usize) -> Result<ConstructionOutput> {
    let field = Field::new(p as i64)?;
    let space = VariableSpace::new(["X"])?;
    let x = Polynomial::var(&space, field, 0);
    let lhs = (0..p).fold(Polynomial::one(&space, field), |acc, i| {
        &acc * &(&x + &Polynomial::constant(&space, field.from_i64(i as i64)))
    });
    let rhs = &x.pow(p as u32) - &x;
    let mut out = ConstructionOutput::new(format!("artin-schreier-p{p}"), field, &space);
    out.relation(
        format!("∏_{{i<{p}}}(X + i) = X^{p} − X"),
        RationalFunction::from_poly(lhs),
        RationalFunction::from_poly(rhs),
        "thm1.7",
    );
    Ok(out)
}

/// Action on one variable `x` whose fixed field has an explicit generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineAction {
    /// `x ↦ c·x` with `c` of multiplicative order `m`.
    Scaling { c: Scalar, m: u64 },
    /// `x ↦ x + 1` in characteristic `p > 0`.
    Translation { p: u32 },
}

/// `x^m` for scaling, `x^p − x` for translation.
pub fn affine_fixed_generator(action: &AffineAction, field: Field) -> Result<Polynomial> {
    let out = affine_fixed_construction(action, field)?;
    Ok(out
        .element("f")?
        .as_polynomial()
        .expect("a polynomial")
        .clone())
}

/// The generator of [`affine_fixed_generator`] with its fixedness claim.
pub fn affine_fixed_construction(
    action: &AffineAction,
    field: Field,
) -> Result<ConstructionOutput> {
    let space = VariableSpace::new(["x"])?;
    let x = RationalFunction::var(&space, field, 0);
    let (name, image, f) = match action {
        AffineAction::Scaling { c, m } => {
            if c.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.characteristic(),
                    right: c.field().characteristic(),
                });
            }
            if c.multiplicative_order() != Some(*m) {
                return Err(Error::Precondition(format!(
                    "{c} does not have multiplicative order {m}"
                )));
            }
            ("scaling", x.scale(c), x.pow(*m as i64)?)
        }
        AffineAction::Translation { p } => {
            let p = *p;
            if p == 0 || field.characteristic() != p {
                return Err(Error::Precondition(format!(
                    "translation of order {p} needs characteristic {p}, got {}",
                    field.characteristic()
                )));
            }
            let shifted = &x + &RationalFunction::one(&space, field);
            ("translation", shifted, &x.pow(i64::from(p))? - &x)
        }
    };
    let mut out = ConstructionOutput::new(format!("affine-{name}"), field, &space);
    out.add_map("g", SubstitutionMap::new(&space, field, vec![image])?);
    let f = out.add_element("f", f);
    out.claim("g", "f", f, "f", "thm2.2");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_hold(out: &ConstructionOutput) {
        for o in out.check() {
            assert!(o.holds, "{}: {}", o.label, o.witness);
        }
    }

    #[test]
    fn hajja_small() {
        let q = Field::rationals();
        let out = hajja_transform(2, q).unwrap();
        assert_eq!(out.element("y1").unwrap().to_string(), "(1)/(x1 + 1)");
        all_hold(&out);
        all_hold(&hajja_transform(5, Field::new(7).unwrap()).unwrap());
        assert!(hajja_transform(1, q).is_err());
    }

    #[test]
    fn cyclic_invariant_parts() {
        all_hold(&lemma29_invariants(3, Field::new(3).unwrap()).unwrap());
        all_hold(&lemma29_invariants(5, Field::rationals()).unwrap());
        all_hold(&lemma29_invariants(3, Field::new(7).unwrap()).unwrap());
        assert!(lemma29_invariants(4, Field::rationals()).is_err());
    }

    #[test]
    fn affine_generators() {
        let f7 = Field::new(7).unwrap();
        let t7 = AffineAction::Translation { p: 7 };
        assert_eq!(
            affine_fixed_generator(&t7, f7).unwrap().to_string(),
            "x^7 + 6*x"
        );
        all_hold(&affine_fixed_construction(&t7, f7).unwrap());
        assert!(affine_fixed_generator(&t7, Field::new(5).unwrap()).is_err());
        let s = AffineAction::Scaling {
            c: f7.from_i64(3),
            m: 6,
        };
        assert_eq!(affine_fixed_generator(&s, f7).unwrap().to_string(), "x^6");
        let bad = AffineAction::Scaling {
            c: f7.from_i64(2),
            m: 6,
        };
        assert!(affine_fixed_generator(&bad, f7).is_err());
        let q = Field::rationals();
        let neg = AffineAction::Scaling {
            c: q.from_i64(-1),
            m: 2,
        };
        assert_eq!(affine_fixed_generator(&neg, q).unwrap().to_string(), "x^2");
        all_hold(&affine_fixed_construction(&neg, q).unwrap());
        assert!(affine_fixed_generator(&AffineAction::Translation { p: 7 }, q).is_err());
    }

    #[test]
    fn artin_schreier() {
        for p in [2, 3, 5, 7, 11] {
            all_hold(&artin_schreier_identity(p).unwrap());
        }
    }
}
