//! The linear change of variables `u_i = Σ_j j^i x_j`, `v_i = Σ_j j^i y_j`
//! over GF(p) and the Artin–Schreier elements built from it.

use num_bigint::BigInt;

use crate::catalog::{def16, residue, Def16Family};
use crate::error::Result;
use crate::lattice::{det_exact, ExponentMatrix};
use crate::scalars::{Field, Scalar};
use crate::symfield::{invert_scalar_matrix, RationalFunction, VariableSpace};

use super::{linear_combination, product, ConstructionOutput};

const ANCHOR: &str = "thm1.7";

/// `j^i` with `0^0 = 1`.
fn power(field: Field, j: usize, i: usize) -> Scalar {
    field
        .from_i64(j as i64)
        .pow(i as i64)
        .expect("nonnegative exponent")
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn setup(p: usize, a: i64, name: String) -> Result<(Field, Def16Family, ConstructionOutput)> {
    let field = Field::new(p as i64)?;
    let fam = def16(p, a, field)?;
    let mut out = ConstructionOutput::new(name, field, &fam.space);
    for (n, m) in fam.maps() {
        out.add_map(n, m.clone());
    }
    Ok((field, fam, out))
}

/// `Σ_j c_j · vars[j]` for the `x` or `y` block.
fn weighted(
    fam: &Def16Family,
    field: Field,
    ys: bool,
    weight: impl Fn(usize) -> Scalar,
) -> RationalFunction {
    let vars: Vec<RationalFunction> = (0..fam.p as i64)
        .map(|j| RationalFunction::var(&fam.space, field, if ys { fam.y(j) } else { fam.x(j) }))
        .collect();
    let terms: Vec<(Scalar, &RationalFunction)> = vars
        .iter()
        .enumerate()
        .map(|(j, v)| (weight(j), v))
        .collect();
    linear_combination(&fam.space, field, &terms)
}

/// `u_0..u_{p−1}`, `v_0..v_{p−1}` with the action of the six maps, the
/// defining relations and the inverse change of variables.
pub fn thm17_linear_change(p: usize, a: i64) -> Result<ConstructionOutput> {
    let (field, fam, mut out) = setup(p, a, format!("thm1.7-linear-change-p{p}-a{a}"))?;
    let space: VariableSpace = fam.space.clone();
    let us: Vec<RationalFunction> = (0..p)
        .map(|i| {
            out.add_element(
                format!("u{i}"),
                weighted(&fam, field, false, |j| power(field, j, i)),
            )
        })
        .collect();
    let vs: Vec<RationalFunction> = (0..p)
        .map(|i| {
            out.add_element(
                format!("v{i}"),
                weighted(&fam, field, true, |j| power(field, j, i)),
            )
        })
        .collect();
    let a_inv = field.from_i64(a).inv()?;

    for i in 0..p {
        let (u, v) = (format!("u{i}"), format!("v{i}"));
        let shifted = |ys| {
            weighted(&fam, field, ys, |j| {
                power(field, residue(j as i64 - 1, p), i)
            })
        };
        out.claim(
            "sigma1",
            &u,
            shifted(false),
            format!("Σ_j (j−1)^{i} x_j"),
            ANCHOR,
        );
        out.claim(
            "sigma2",
            &v,
            shifted(true),
            format!("Σ_j (j−1)^{i} y_j"),
            ANCHOR,
        );
        let coeffs: Vec<Scalar> = (0..=i)
            .map(|k| field.from_i64(binomial(i, k) * if (i - k) % 2 == 0 { 1 } else { -1 }))
            .collect();
        let expand = |basis: &[RationalFunction], letter: char| {
            let terms: Vec<(Scalar, &RationalFunction)> =
                coeffs.iter().cloned().zip(basis).collect();
            let text: Vec<String> = coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("{c}·{letter}{k}"))
                .collect();
            (linear_combination(&space, field, &terms), text.join(" + "))
        };
        let (img, text) = expand(&us, 'u');
        out.claim("sigma1", &u, img, text, ANCHOR);
        let (img, text) = expand(&vs, 'v');
        out.claim("sigma2", &v, img, text, ANCHOR);
        out.claim("sigma1", &v, vs[i].clone(), v.clone(), ANCHOR);
        out.claim("sigma2", &u, us[i].clone(), u.clone(), ANCHOR);
        let sign = if i % 2 == 0 {
            field.one()
        } else {
            field.from_i64(-1)
        };
        out.claim(
            "lambda1",
            &u,
            vs[i].scale(&sign),
            format!("{sign}·{v}"),
            ANCHOR,
        );
        out.claim("lambda1", &v, us[i].clone(), u.clone(), ANCHOR);
        out.claim("lambda2", &u, vs[i].clone(), v.clone(), ANCHOR);
        out.claim("lambda2", &v, us[i].clone(), u.clone(), ANCHOR);
        let factor = a_inv.pow(i as i64)?;
        out.claim_eigen("rho1", &u, factor.clone(), ANCHOR);
        out.claim_eigen("rho2", &v, factor, ANCHOR);
        out.claim("rho1", &v, vs[i].clone(), v.clone(), ANCHOR);
        out.claim("rho2", &u, us[i].clone(), u.clone(), ANCHOR);
    }

    add_map_relations(&mut out, a, p);

    let vandermonde: Vec<Vec<i64>> = (0..p)
        .map(|i| {
            (0..p)
                .map(|j| if i == 0 { 1 } else { (j as i64).pow(i as u32) })
                .collect()
        })
        .collect();
    let det = det_exact(&ExponentMatrix::new(vandermonde)?)?;
    let det_mod = det.clone() % BigInt::from(p);
    out.fact(
        "det(j^i) is a unit mod p",
        det_mod != BigInt::from(0),
        format!("det = {det} ≡ {det_mod} mod {p}"),
        ANCHOR,
    );
    let v_mod: Vec<Vec<Scalar>> = (0..p)
        .map(|i| (0..p).map(|j| power(field, j, i)).collect())
        .collect();
    match invert_scalar_matrix(v_mod, field) {
        None => out.fact("Vandermonde inverse", false, "singular over GF(p)", ANCHOR),
        Some(w) => {
            for (j, row) in w.iter().enumerate() {
                let xs: Vec<(Scalar, &RationalFunction)> = row.iter().cloned().zip(&us).collect();
                let ys: Vec<(Scalar, &RationalFunction)> = row.iter().cloned().zip(&vs).collect();
                let xj = RationalFunction::var(&space, field, fam.x(j as i64));
                let yj = RationalFunction::var(&space, field, fam.y(j as i64));
                out.relation(
                    format!("x{j} = Σ_i W[{j}][i] u_i"),
                    linear_combination(&space, field, &xs),
                    xj,
                    ANCHOR,
                );
                out.relation(
                    format!("y{j} = Σ_i W[{j}][i] v_i"),
                    linear_combination(&space, field, &ys),
                    yj,
                    ANCHOR,
                );
            }
        }
    }
    Ok(out)
}

/// The ten defining relations among `σ1, σ2, λ1, λ2, ρ1, ρ2`.
fn add_map_relations(out: &mut ConstructionOutput, a: i64, p: usize) {
    let ar = residue(a, p);
    for (lhs, rhs) in [
        (
            "lambda1*sigma1*lambda1^-1".to_string(),
            "sigma2^-1".to_string(),
        ),
        ("lambda1*sigma2*lambda1^-1".into(), "sigma1".into()),
        ("lambda2*sigma1*lambda2^-1".into(), "sigma2".into()),
        ("lambda2*sigma2*lambda2^-1".into(), "sigma1".into()),
        ("rho1*sigma1*rho1^-1".into(), format!("sigma1^{ar}")),
        ("rho1*sigma2*rho1^-1".into(), "sigma2".into()),
        ("rho2*sigma1*rho2^-1".into(), "sigma1".into()),
        ("rho2*sigma2*rho2^-1".into(), format!("sigma2^{ar}")),
        ("lambda1^4".into(), "1".into()),
        ("lambda2^2".into(), "1".into()),
    ] {
        out.map_relation(lhs, rhs, ANCHOR);
    }
}

/// Only the ten relations among the six maps.
pub fn thm17_relations(p: usize, a: i64) -> Result<ConstructionOutput> {
    let (_, _, mut out) = setup(p, a, format!("thm1.7-relations-p{p}-a{a}"))?;
    add_map_relations(&mut out, a, p);
    Ok(out)
}

/// `u1' = ∏_{i<p}(u1/u0 + i)` and `v1'` likewise, with their transformation
/// rules.
pub fn thm17_artin_schreier(p: usize, a: i64) -> Result<ConstructionOutput> {
    let (field, fam, mut out) = setup(p, a, format!("thm1.7-artin-schreier-p{p}-a{a}"))?;
    let space = fam.space.clone();
    let sum = |ys| weighted(&fam, field, ys, |_| field.one());
    let first = |ys| weighted(&fam, field, ys, |j| field.from_i64(j as i64));
    let u0 = out.add_element("u0", sum(false));
    let v0 = out.add_element("v0", sum(true));
    let x = out.add_element("u1/u0", &first(false) / &u0);
    let y = out.add_element("v1/v0", &first(true) / &v0);
    let one = RationalFunction::one(&space, field);
    let artin = |t: &RationalFunction| {
        product(
            &space,
            field,
            (0..p).map(|i| t + &RationalFunction::constant(&space, field.from_i64(i as i64))),
        )
    };
    let u1 = out.add_element("u1'", artin(&x));
    let v1 = out.add_element("v1'", artin(&y));

    out.relation(
        "u1' = (u1/u0)^p − u1/u0",
        u1.clone(),
        &x.pow(p as i64)? - &x,
        ANCHOR,
    );
    out.relation(
        "v1' = (v1/v0)^p − v1/v0",
        v1.clone(),
        &y.pow(p as i64)? - &y,
        ANCHOR,
    );
    out.claim("sigma1", "u1/u0", &x - &one, "u1/u0 − 1", ANCHOR);
    out.claim("sigma1", "v1/v0", y.clone(), "v1/v0", ANCHOR);
    out.claim("sigma2", "u1/u0", x.clone(), "u1/u0", ANCHOR);
    out.claim("sigma2", "v1/v0", &y - &one, "v1/v0 − 1", ANCHOR);
    for m in ["sigma1", "sigma2"] {
        out.claim(m, "u1'", u1.clone(), "u1'", ANCHOR);
        out.claim(m, "v1'", v1.clone(), "v1'", ANCHOR);
        out.claim(m, "u0", u0.clone(), "u0", ANCHOR);
        out.claim(m, "v0", v0.clone(), "v0", ANCHOR);
    }
    out.claim("lambda1", "u0", v0.clone(), "v0", ANCHOR);
    out.claim("lambda1", "v0", u0.clone(), "u0", ANCHOR);
    out.claim("lambda1", "u1'", -&v1, "−v1'", ANCHOR);
    out.claim("lambda1", "v1'", u1.clone(), "u1'", ANCHOR);
    out.claim("lambda2", "u0", v0.clone(), "v0", ANCHOR);
    out.claim("lambda2", "v0", u0.clone(), "u0", ANCHOR);
    out.claim("lambda2", "u1'", v1.clone(), "v1'", ANCHOR);
    out.claim("lambda2", "v1'", u1.clone(), "u1'", ANCHOR);
    let a_inv = field.from_i64(a).inv()?;
    out.claim_eigen("rho1", "u1'", a_inv.clone(), ANCHOR);
    out.claim_eigen("rho2", "v1'", a_inv, ANCHOR);
    out.claim("rho1", "v1'", v1.clone(), "v1'", ANCHOR);
    out.claim("rho2", "u1'", u1, "u1'", ANCHOR);
    Ok(out)
}
