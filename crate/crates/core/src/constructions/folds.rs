//! Folding `x1..x14` into seven variables `y_i = x_{2i+1} ± x_{2i+2}` and the
//! Laurent-monomial invariants of the normal 2-subgroups.

use crate::catalog::{residue, Catalog};
use crate::error::{Error, Result};
use crate::lattice::{det_exact, monomial_subfield_index, snf, ExponentMatrix, LatticeIndex};
use crate::perms::{PermGroup, Permutation};
use crate::scalars::Field;
use crate::symfield::{RationalFunction, SubstitutionMap, VariableSpace};

use super::{product, ConstructionOutput};

fn x_space() -> VariableSpace {
    VariableSpace::indexed("x", 1, 14)
}

fn catalog_map(
    catalog: &Catalog,
    space: &VariableSpace,
    field: Field,
    word: &str,
) -> Result<SubstitutionMap> {
    SubstitutionMap::from_permutation(space, field, &catalog.evaluate(word)?)
}

/// `y_i = x_{2i+1} + sign·x_{2i+2}` for `i = 0..6`.
fn fold(out: &mut ConstructionOutput, sign: i64) -> Vec<RationalFunction> {
    let (space, field) = (out.space.clone(), out.field);
    (0..7)
        .map(|i| {
            let a = RationalFunction::var(&space, field, 2 * i);
            let b = RationalFunction::var(&space, field, 2 * i + 1).scale(&field.from_i64(sign));
            out.add_element(format!("y{i}"), &a + &b)
        })
        .collect()
}

/// The permutation of `{y_i}` (or of `{±y_i}` on points `i` and `i+7`)
/// induced by a map, if it is one.
fn induced(
    map: &SubstitutionMap,
    ys: &[RationalFunction],
    signed: bool,
) -> Result<Option<Permutation>> {
    let n = ys.len();
    let mut images = vec![0; if signed { 2 * n } else { n }];
    for (i, y) in ys.iter().enumerate() {
        let image = map.apply(y)?;
        let neg = -&image;
        let target = match ys.iter().position(|z| *z == image) {
            Some(j) => j,
            None => match ys.iter().position(|z| *z == neg) {
                Some(j) if signed => j + n,
                _ => return Ok(None),
            },
        };
        images[i] = target;
        if signed {
            images[i + n] = (target + n) % (2 * n);
        }
    }
    Permutation::from_images0(images).map(Some)
}

/// Whether the group induced on the `y`'s has the same order as `G(id)`.
fn faithfulness(
    out: &mut ConstructionOutput,
    catalog: &Catalog,
    id: usize,
    ys: &[RationalFunction],
    signed: bool,
    anchor: &'static str,
) -> Result<()> {
    let entry = catalog.group(id)?;
    let group = entry
        .group
        .as_ref()
        .ok_or_else(|| Error::Precondition(format!("G({id}) has no generators")))?;
    let what = if signed {
        "signed permutations of ±y_i"
    } else {
        "permutations of y_i"
    };
    let label = format!("G({id}) acts faithfully as {what}");
    let mut gens = Vec::new();
    for g in group.generators() {
        let map = SubstitutionMap::from_permutation(&out.space, out.field, g)?;
        match induced(&map, ys, signed)? {
            Some(p) => gens.push(p),
            None => {
                out.fact(
                    label,
                    false,
                    format!("{} does not permute the y_i", g.to_cycle_string()),
                    anchor,
                );
                return Ok(());
            }
        }
    }
    let order = PermGroup::new(gens)?.order();
    out.fact(
        label,
        order == group.order(),
        format!("induced order {order}, |G({id})| = {}", group.order()),
        anchor,
    );
    Ok(())
}

fn rank_fact(
    out: &mut ConstructionOutput,
    ys: &[RationalFunction],
    anchor: &'static str,
) -> Result<()> {
    // coefficients are ±1 on single variables
    let rows: Vec<Vec<i64>> = ys
        .iter()
        .map(|y| {
            let mut row = vec![0; out.space.len()];
            for (m, c) in y.numerator().terms() {
                if let Some(v) = m.exponents().iter().position(|&e| e == 1) {
                    row[v] = if c.is_one() { 1 } else { -1 };
                }
            }
            row
        })
        .collect();
    let r = snf(&ExponentMatrix::new(rows)?).rank;
    out.fact(
        "y0, …, y6 are linearly independent",
        r == ys.len(),
        format!("rank {r}"),
        anchor,
    );
    Ok(())
}

/// `y_i = x_{2i+1} + x_{2i+2}` for `G(2)`, `G(4)` or `G(10)`, with the action
/// of `σ = σ1σ2`, `τ1` and `ν3` on the `y_i`.
pub fn sec52_fold(catalog: &Catalog, id: usize, field: Field) -> Result<ConstructionOutput> {
    if ![2, 4, 10].contains(&id) {
        return Err(Error::InvalidParameter(format!(
            "fold is defined for G(2), G(4), G(10), not G({id})"
        )));
    }
    let anchor = "sec5.2";
    let space = x_space();
    let mut out = ConstructionOutput::new(format!("sec5.2-fold-G{id}"), field, &space);
    for (name, word) in [("sigma", "sigma1*sigma2"), ("tau1", "tau1"), ("nu3", "nu3")] {
        out.add_map(name, catalog_map(catalog, &space, field, word)?);
    }
    let ys = fold(&mut out, 1);
    for i in 0..7 {
        let y = format!("y{i}");
        let j = (i + 1) % 7;
        out.claim("sigma", &y, ys[j].clone(), format!("y{j}"), anchor);
        if id != 10 {
            let j = 3 * i % 7;
            out.claim("tau1", &y, ys[j].clone(), format!("y{j}"), anchor);
        } else {
            let j = match i {
                0 => 2,
                2 => 0,
                1 => 5,
                5 => 1,
                k => k,
            };
            out.claim("nu3", &y, ys[j].clone(), format!("y{j}"), anchor);
        }
    }
    rank_fact(&mut out, &ys, anchor)?;
    faithfulness(&mut out, catalog, id, &ys, false, anchor)?;
    Ok(out)
}

/// The classes whose normal subgroup is `N8`, `N16` or `N64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sec54Class {
    Four,
    Five,
    SixNine,
}

impl Sec54Class {
    pub const ALL: [Sec54Class; 3] = [Sec54Class::Four, Sec54Class::Five, Sec54Class::SixNine];

    pub fn label(self) -> &'static str {
        match self {
            Sec54Class::Four => "class4",
            Sec54Class::Five => "class5",
            Sec54Class::SixNine => "class6and9",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text.trim().trim_start_matches("class") {
            "4" => Ok(Sec54Class::Four),
            "5" => Ok(Sec54Class::Five),
            "6and9" | "6&9" | "6" | "9" => Ok(Sec54Class::SixNine),
            other => Err(Error::InvalidParameter(format!(
                "unknown class `{other}`; use 4, 5 or 6and9"
            ))),
        }
    }

    pub fn normal_subgroup(self) -> &'static str {
        match self {
            Sec54Class::Four => "N8",
            Sec54Class::Five => "N16",
            Sec54Class::SixNine => "N64",
        }
    }

    /// Catalog groups of the class that contain the normal subgroup.
    pub fn group_ids(self) -> &'static [usize] {
        match self {
            Sec54Class::Four => &[6, 11],
            Sec54Class::Five => &[9, 18],
            Sec54Class::SixNine => &[21, 27, 28, 35, 40, 41, 54, 55],
        }
    }

    /// The transcribed exponent matrix and its determinant.
    pub fn matrix(self) -> &'static ([[i64; 7]; 7], i64) {
        match self {
            Sec54Class::Four => &SEC54_MATRICES[0],
            Sec54Class::Five => &SEC54_MATRICES[1],
            Sec54Class::SixNine => &SEC54_MATRICES[2],
        }
    }
}

/// Exponents of `t, z_1, …, z_6` in `y_0, …, y_6`, with the determinant.
pub const SEC54_MATRICES: [([[i64; 7]; 7], i64); 3] = [
    (
        [
            [1, 1, 1, 1, 1, 1, 1],
            [1, 1, 0, 0, 1, 0, 1],
            [1, 1, 1, 0, 0, 1, 0],
            [0, 1, 1, 1, 0, 0, 1],
            [1, 0, 1, 1, 1, 0, 0],
            [0, 1, 0, 1, 1, 1, 0],
            [0, 0, 1, 0, 1, 1, 1],
        ],
        8,
    ),
    (
        [
            [2, 2, 2, 2, 2, 2, 2],
            [1, 1, 0, 0, 1, 0, 1],
            [1, 1, 1, 0, 0, 1, 0],
            [0, 1, 1, 1, 0, 0, 1],
            [1, 0, 1, 1, 1, 0, 0],
            [0, 1, 0, 1, 1, 1, 0],
            [0, 0, 1, 0, 1, 1, 1],
        ],
        16,
    ),
    (
        [
            [1, 1, 1, 1, 1, 1, 1],
            [0, 2, 0, 0, 0, 0, 0],
            [0, 0, 2, 0, 0, 0, 0],
            [0, 0, 0, 2, 0, 0, 0],
            [0, 0, 0, 0, 2, 0, 0],
            [0, 0, 0, 0, 0, 2, 0],
            [0, 0, 0, 0, 0, 0, 2],
        ],
        64,
    ),
];

/// `t` and `z_i` as functions of the seven given variables.
fn invariants(
    class: Sec54Class,
    ys: &[RationalFunction],
    space: &VariableSpace,
    field: Field,
) -> (RationalFunction, Vec<RationalFunction>) {
    let all = product(space, field, ys.iter().cloned());
    match class {
        Sec54Class::Four | Sec54Class::Five => {
            let t = if class == Sec54Class::Four {
                all
            } else {
                &all * &all
            };
            let z = (0..7)
                .map(|i| {
                    product(
                        space,
                        field,
                        [0, 3, 5, 6].iter().map(|k| ys[(i + k) % 7].clone()),
                    )
                })
                .collect();
            (t, z)
        }
        Sec54Class::SixNine => (all, ys.iter().map(|y| y * y).collect()),
    }
}

/// `y_i = x_{2i+1} − x_{2i+2}`, the invariants `t, z_i` of the normal
/// subgroup and the induced action of the remaining generators.
pub fn sec54_invariants(
    catalog: &Catalog,
    class: Sec54Class,
    field: Field,
) -> Result<ConstructionOutput> {
    if field.characteristic() == 2 {
        return Err(Error::Precondition(
            "y_i = x_{2i+1} − x_{2i+2} needs characteristic ≠ 2".into(),
        ));
    }
    let anchor = "sec5.4";
    let space = x_space();
    let mut out = ConstructionOutput::new(format!("sec5.4-{}", class.label()), field, &space);
    let mut words: Vec<(String, String)> = (0..7)
        .map(|i| (format!("mu{i}"), format!("mu{i}")))
        .collect();
    for w in ["tau1", "tau2", "nu1", "nu2", "tau2^2"] {
        words.push((w.into(), w.into()));
    }
    words.push(("sigma".into(), "sigma1*sigma2".into()));
    for (name, word) in &words {
        out.add_map(name.as_str(), catalog_map(catalog, &space, field, word)?);
    }
    let ys = fold(&mut out, -1);
    let minus = field.from_i64(-1);
    for i in 0..7 {
        let y = format!("y{i}");
        out.claim(&format!("mu{i}"), &y, -&ys[i], format!("−{y}"), anchor);
        let j = (i + 1) % 7;
        out.claim("sigma", &y, ys[j].clone(), format!("y{j}"), anchor);
        let j = 3 * i % 7;
        out.claim("tau1", &y, -&ys[j], format!("−y{j}"), anchor);
        out.claim("tau2", &y, ys[j].clone(), format!("y{j}"), anchor);
        let j = [1, 0, 2, 3, 4, 5, 6][i];
        out.claim("nu1", &y, ys[j].scale(&minus), format!("−y{j}"), anchor);
        out.claim("nu2", &y, ys[j].clone(), format!("y{j}"), anchor);
    }

    let (t, zs) = invariants(class, &ys, &space, field);
    let t = out.add_element("t", t);
    let zs: Vec<RationalFunction> = zs
        .into_iter()
        .enumerate()
        .map(|(i, z)| out.add_element(format!("z{i}"), z))
        .collect();

    let n_name = class.normal_subgroup();
    let normal = catalog.named_group(n_name)?;
    for (k, g) in normal.generators().iter().enumerate() {
        let name = format!("{n_name}[{}]", k + 1);
        out.add_map(
            name.as_str(),
            SubstitutionMap::from_permutation(&space, field, g)?,
        );
        out.claim(&name, "t", t.clone(), "t", anchor);
        for (i, z) in zs.iter().enumerate().skip(1) {
            out.claim(&name, &format!("z{i}"), z.clone(), format!("z{i}"), anchor);
        }
    }

    let mut induced_claims = |map: &str, t_sign: i64, index: &dyn Fn(usize) -> usize| {
        let t_image = if t_sign < 0 { -&t } else { t.clone() };
        out.claim(
            map,
            "t",
            t_image,
            if t_sign < 0 { "−t" } else { "t" },
            anchor,
        );
        for i in 0..7 {
            let j = index(i);
            out.claim(
                map,
                &format!("z{i}"),
                zs[j].clone(),
                format!("z{j}"),
                anchor,
            );
        }
    };
    induced_claims("sigma", 1, &|i| (i + 1) % 7);
    let swap01 = |i: usize| [1, 0, 2, 3, 4, 5, 6][i];
    match class {
        Sec54Class::Four | Sec54Class::Five => {
            induced_claims("tau2^2", 1, &|i| residue(2 * i as i64, 7))
        }
        Sec54Class::SixNine => {
            induced_claims("tau1", -1, &|i| 3 * i % 7);
            induced_claims("tau2", 1, &|i| 3 * i % 7);
            induced_claims("nu1", -1, &swap01);
            induced_claims("nu2", 1, &swap01);
        }
    }

    // the relation and the exponent matrix live on seven independent variables
    let y_space = VariableSpace::indexed("y", 0, 7);
    let yv: Vec<RationalFunction> = (0..7)
        .map(|i| RationalFunction::var(&y_space, field, i))
        .collect();
    let (ty, zy) = invariants(class, &yv, &y_space, field);
    let power = if class == Sec54Class::Four { 4 } else { 2 };
    out.relation(
        format!("t^{power} = z0⋯z6 (in y0, …, y6)"),
        ty.pow(power)?,
        product(&y_space, field, zy.iter().cloned()),
        anchor,
    );
    let mut rows = vec![ty];
    rows.extend(zy[1..].iter().cloned());
    let derived = ExponentMatrix::from_monomials(&rows)?;
    let (transcribed, det) = class.matrix();
    let transcribed = ExponentMatrix::new(transcribed.iter().map(|r| r.to_vec()).collect())?;
    out.fact(
        "exponent matrix of t, z1, …, z6 matches the table",
        derived == transcribed,
        format!("{:?}", derived.rows()),
        anchor,
    );
    let computed = det_exact(&derived)?;
    out.fact(
        format!("det = {det}"),
        computed == (*det).into(),
        format!("det = {computed}"),
        anchor,
    );
    let index = monomial_subfield_index(&derived);
    let n_order = normal.order();
    out.fact(
        format!("lattice index = |{n_name}|"),
        index == LatticeIndex::Finite(n_order.into()),
        format!("index {index}, |{n_name}| = {n_order}"),
        anchor,
    );
    rank_fact(&mut out, &ys, anchor)?;
    for &id in class.group_ids() {
        faithfulness(&mut out, catalog, id, &ys, true, anchor)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn failures(out: &ConstructionOutput) -> Vec<String> {
        out.check()
            .into_iter()
            .filter(|o| !o.holds)
            .map(|o| format!("{}: {}", o.label, o.witness))
            .collect()
    }

    #[test]
    fn folds_hold() {
        let c = Catalog::standard();
        for id in [2, 4, 10] {
            let out = sec52_fold(c, id, Field::rationals()).unwrap();
            assert_eq!(failures(&out), Vec::<String>::new(), "G({id})");
        }
        assert!(sec52_fold(c, 3, Field::rationals()).is_err());
    }

    #[test]
    fn classes_hold() {
        let c = Catalog::standard();
        for class in Sec54Class::ALL {
            let out = sec54_invariants(c, class, Field::new(5).unwrap()).unwrap();
            assert_eq!(failures(&out), Vec::<String>::new(), "{class:?}");
        }
        assert!(sec54_invariants(c, Sec54Class::Four, Field::new(2).unwrap()).is_err());
    }

    #[test]
    fn transcribed_determinants() {
        for (m, det) in &SEC54_MATRICES {
            let m = ExponentMatrix::new(m.iter().map(|r| r.to_vec()).collect()).unwrap();
            assert_eq!(det_exact(&m).unwrap(), (*det).into());
        }
        assert_eq!(Sec54Class::parse("6&9").unwrap(), Sec54Class::SixNine);
        assert!(Sec54Class::parse("7").is_err());
    }
}
