//! Kuniyoshi-type elements in characteristic `p`: an eigenvector `u` of
//! `τ^e`, its orbit sum `y` and the weighted sum `z` with `σ·z = z − y`.

use crate::catalog::{gpd_action, Catalog, GpdSpec};
use crate::error::Result;
use crate::scalars::{Field, Scalar};
use crate::symfield::{RationalFunction, SubstitutionMap, VariableSpace};

use super::{linear_combination, require_prime_field, ConstructionOutput};

const ANCHOR: &str = "sec5.5";

/// `Σ_i c^i g^i·f` for `i < count`.
fn twisted_sum(
    g: &SubstitutionMap,
    f: &RationalFunction,
    c: &Scalar,
    count: usize,
) -> Result<RationalFunction> {
    let mut acc = RationalFunction::zero(f.space(), f.field());
    let mut term = f.clone();
    let mut weight = f.field().one();
    for _ in 0..count {
        acc = &acc + &term.scale(&weight);
        term = g.apply(&term)?;
        weight = &weight * c;
    }
    Ok(acc)
}

/// `y = Σ_i σ^i·u`, `z = Σ_i i·σ^i·u` over `i < p`.
fn orbit_sums(
    sigma: &SubstitutionMap,
    u: &RationalFunction,
    p: usize,
) -> Result<(RationalFunction, RationalFunction)> {
    let (space, field) = (u.space(), u.field());
    let mut orbit = Vec::with_capacity(p);
    let mut cur = u.clone();
    for _ in 0..p {
        let next = sigma.apply(&cur)?;
        orbit.push(cur);
        cur = next;
    }
    let ones: Vec<(Scalar, &RationalFunction)> = orbit.iter().map(|f| (field.one(), f)).collect();
    let weights: Vec<(Scalar, &RationalFunction)> = orbit
        .iter()
        .enumerate()
        .map(|(i, f)| (field.from_i64(i as i64), f))
        .collect();
    Ok((
        linear_combination(space, field, &ones),
        linear_combination(space, field, &weights),
    ))
}

fn zero_notes(out: &mut ConstructionOutput, names: &[&str]) {
    for name in names {
        if out.elements[*name].is_zero() {
            out.notes
                .push(format!("{name} = 0, so its claims hold trivially"));
        }
    }
}

/// The construction for `G_pd = ⟨σ, τ^e⟩` acting on `x_0..x_{p−1}` over
/// GF(p), starting from `x_1`.
pub fn sec55_kuniyoshi(spec: &GpdSpec, field: Field) -> Result<ConstructionOutput> {
    let p = spec.p();
    require_prime_field(field, p, "this construction")?;
    let act = gpd_action(spec, field)?;
    let e = spec.e();
    let tau_e = act.tau.pow(e as i64)?;
    let ae = field.from_i64(spec.a_pow(e) as i64);
    let ae_inv = ae.inv()?;
    let tname = format!("tau^{e}");
    let mut out = ConstructionOutput::new(
        format!("sec5.5-p{p}-d{}-a{}", spec.d(), spec.a()),
        field,
        &act.space,
    );
    out.add_map("sigma", act.sigma.clone());
    out.add_map("tau", act.tau.clone());
    out.add_map(tname.as_str(), tau_e.clone());

    let x = |i| RationalFunction::var(&act.space, field, i);
    let from_x0 = out.add_element("u from x0", twisted_sum(&tau_e, &x(0), &ae, spec.d())?);
    let u = out.add_element("u", twisted_sum(&tau_e, &x(1), &ae, spec.d())?);
    let (y, z) = orbit_sums(&act.sigma, &u, p)?;
    let y = out.add_element("y", y);
    let z = out.add_element("z", z);

    let scaled =
        |f: &RationalFunction, k: i64| -> Result<RationalFunction> { Ok(f.scale(&ae_inv.pow(k)?)) };
    out.claim(
        &tname,
        "u from x0",
        scaled(&from_x0, 1)?,
        format!("{ae_inv}·u"),
        ANCHOR,
    );
    out.claim(&tname, "u", scaled(&u, 1)?, format!("{ae_inv}·u"), ANCHOR);
    out.claim("sigma", "y", y.clone(), "y", ANCHOR);
    out.claim("sigma", "z", &z - &y, "z − y", ANCHOR);
    out.claim(&tname, "y", scaled(&y, 1)?, format!("{ae_inv}·y"), ANCHOR);
    out.claim(
        &tname,
        "z",
        scaled(&z, 2)?,
        format!("{}·z", ae_inv.pow(2)?),
        ANCHOR,
    );
    zero_notes(&mut out, &["u from x0", "u", "y", "z"]);
    Ok(out)
}

/// The same recipe for `G(2)` and `G(4)` on `x1..x14` over GF(7), with
/// `σ = σ1σ2` and `τ = τ1`.
pub fn sec55_g2_g4(catalog: &Catalog, field: Field) -> Result<ConstructionOutput> {
    require_prime_field(field, 7, "the G(2)/G(4) construction")?;
    let space = VariableSpace::indexed("x", 1, 14);
    let mut out = ConstructionOutput::new("sec5.5-g2-g4", field, &space);
    let sigma = out.add_map(
        "sigma",
        SubstitutionMap::from_permutation(&space, field, &catalog.evaluate("sigma1*sigma2")?)?,
    );
    let tau = out.add_map(
        "tau",
        SubstitutionMap::from_permutation(&space, field, &catalog.element("tau1")?.clone())?,
    );
    let tau3 = out.add_map("tau^3", tau.pow(3)?);
    let x1 = RationalFunction::var(&space, field, 0);

    let u2 = out.add_element("u[G2]", &x1 - &tau3.apply(&x1)?);
    let (y2, z2) = orbit_sums(&sigma, &u2, 7)?;
    let y2 = out.add_element("y[G2]", y2);
    let z2 = out.add_element("z[G2]", z2);
    out.claim("sigma", "y[G2]", y2.clone(), "y", ANCHOR);
    out.claim("sigma", "z[G2]", &z2 - &y2, "z − y", ANCHOR);
    out.claim("tau^3", "y[G2]", -&y2, "−y", ANCHOR);
    out.claim("tau^3", "z[G2]", z2.clone(), "z", ANCHOR);

    let u4 = out.add_element("u[G4]", twisted_sum(&tau, &x1, &field.from_i64(5), 6)?);
    let (y4, z4) = orbit_sums(&sigma, &u4, 7)?;
    let y4 = out.add_element("y[G4]", y4);
    let z4 = out.add_element("z[G4]", z4);
    out.claim("sigma", "y[G4]", y4.clone(), "y", ANCHOR);
    out.claim("sigma", "z[G4]", &z4 - &y4, "z − y", ANCHOR);
    out.claim("tau", "y[G4]", y4.scale(&field.from_i64(3)), "3·y", ANCHOR);
    out.claim("tau", "z[G4]", z4.clone(), "z", ANCHOR);
    zero_notes(
        &mut out,
        &["u[G2]", "y[G2]", "z[G2]", "u[G4]", "y[G4]", "z[G4]"],
    );
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
    fn family_members() {
        for (p, d, a) in [
            (5, 1, 2),
            (5, 2, 2),
            (5, 4, 2),
            (7, 1, 3),
            (7, 2, 3),
            (7, 3, 3),
            (7, 6, 3),
        ] {
            let spec = GpdSpec::new(p, d, a).unwrap();
            let out = sec55_kuniyoshi(&spec, Field::new(p as i64).unwrap()).unwrap();
            all_hold(&out);
            assert!(!out.element("u").unwrap().is_zero());
        }
        let spec = GpdSpec::new(7, 1, 3).unwrap();
        let out = sec55_kuniyoshi(&spec, Field::new(7).unwrap()).unwrap();
        assert!(out.notes.is_empty());
        assert!(sec55_kuniyoshi(&spec, Field::rationals()).is_err());
    }

    #[test]
    fn eigenfactors() {
        let spec = GpdSpec::new(7, 3, 3).unwrap();
        let out = sec55_kuniyoshi(&spec, Field::new(7).unwrap()).unwrap();
        let factor = out
            .map("tau^2")
            .unwrap()
            .eigen_factor(out.element("u").unwrap())
            .unwrap();
        assert_eq!(factor, Some(Field::new(7).unwrap().from_i64(4)));

        let spec = GpdSpec::new(3, 2, 2).unwrap();
        let out = sec55_kuniyoshi(&spec, Field::new(3).unwrap()).unwrap();
        all_hold(&out);
        assert!(out.element("y").unwrap().is_zero());
        assert!(out.notes.iter().any(|n| n.starts_with("y = 0")));
    }

    #[test]
    fn g2_g4() {
        let out = sec55_g2_g4(Catalog::standard(), Field::new(7).unwrap()).unwrap();
        all_hold(&out);
        assert_eq!(out.element("u[G2]").unwrap().to_string(), "x1 + 6*x2");
        assert!(out.element("u[G4]").unwrap().is_zero());
        assert!(sec55_g2_g4(Catalog::standard(), Field::new(5).unwrap()).is_err());
    }
}
