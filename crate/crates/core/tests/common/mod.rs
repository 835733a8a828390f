#![allow(dead_code)]

use std::collections::HashSet;

use noetherlab::catalog::{def16, ELEMENT_NAMES};
use noetherlab::constructions::{
    hajja_transform, lemma29_invariants, sec52_fold, sec54_invariants, sec55_kuniyoshi,
    thm17_linear_change, Sec54Class,
};
use noetherlab::symfield::Monomial;
use noetherlab::{
    Catalog, Field, GpdSpec, PermGroup, Polynomial, RationalFunction, Scalar, SubstitutionMap,
    VariableSpace,
};
use rand::Rng;

pub fn random_scalar(rng: &mut impl Rng, field: Field) -> Scalar {
    field.from_i64(rng.gen_range(-9..=9))
}

pub fn random_poly(
    rng: &mut impl Rng,
    space: &VariableSpace,
    field: Field,
    terms: usize,
    degree: u32,
) -> Polynomial {
    let n = space.len();
    let ts = (0..terms).map(|_| {
        let mut exps = vec![0u32; n];
        for _ in 0..rng.gen_range(0..=degree) {
            exps[rng.gen_range(0..n)] += 1;
        }
        (Monomial::from_exponents(exps), random_scalar(rng, field))
    });
    Polynomial::from_terms(space, field, ts)
}

/// A random rational function with a nonzero denominator.
pub fn random_ratfunc(rng: &mut impl Rng, space: &VariableSpace, field: Field) -> RationalFunction {
    let num = random_poly(rng, space, field, 3, 2);
    loop {
        let den = random_poly(rng, space, field, 2, 1);
        if !den.is_zero() {
            return RationalFunction::new(num, den).expect("nonzero denominator");
        }
    }
}

/// Closure of the generators by breadth-first multiplication, giving up
/// once more than `limit` elements are found.
pub fn enumerate(g: &PermGroup, limit: usize) -> Option<usize> {
    let gens: Vec<Vec<usize>> = g
        .generators()
        .iter()
        .map(|p| p.images0().to_vec())
        .collect();
    let identity: Vec<usize> = (0..g.degree()).collect();
    let mut seen = HashSet::from([identity.clone()]);
    let mut frontier = vec![identity];
    while let Some(x) = frontier.pop() {
        for s in &gens {
            let y: Vec<usize> = x.iter().map(|&i| s[i]).collect();
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return None;
                }
                frontier.push(y);
            }
        }
    }
    Some(seen.len())
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j)
                        .map(|(_, v)| *v)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] as i128 * cofactor_det(&minor)
        })
        .sum()
}

pub fn catalog_maps() -> Vec<(String, SubstitutionMap)> {
    let c = Catalog::standard();
    let f7 = Field::new(7).unwrap();
    let q = Field::rationals();
    let space = VariableSpace::indexed("x", 1, 14);
    let mut maps: Vec<(String, SubstitutionMap)> = ELEMENT_NAMES
        .iter()
        .map(|n| {
            let m = SubstitutionMap::from_permutation(&space, f7, c.element(n).unwrap()).unwrap();
            (n.to_string(), m)
        })
        .collect();
    for a in [-1, 2] {
        let fam = def16(7, a, f7).unwrap();
        maps.extend(
            fam.maps()
                .iter()
                .map(|(n, m)| (format!("{n} (a = {a})"), (*m).clone())),
        );
    }
    let outputs = [
        sec54_invariants(c, Sec54Class::Four, q).unwrap(),
        sec52_fold(c, 10, f7).unwrap(),
        hajja_transform(4, q).unwrap(),
        lemma29_invariants(5, Field::new(5).unwrap()).unwrap(),
        lemma29_invariants(5, q).unwrap(),
        sec55_kuniyoshi(&GpdSpec::new(7, 3, 3).unwrap(), f7).unwrap(),
        thm17_linear_change(5, 2).unwrap(),
    ];
    for out in outputs {
        maps.extend(
            out.maps
                .iter()
                .map(|(n, m)| (format!("{}: {n}", out.name), m.clone())),
        );
    }
    maps
}

/// Checks `m(f ∘ g) = m(f) ∘ m(g)` for `+`, `×`, `÷` on `samples` random pairs.
pub fn homomorphism_samples(
    m: &SubstitutionMap,
    rng: &mut impl Rng,
    samples: usize,
) -> Result<(), String> {
    for _ in 0..samples {
        let f = random_ratfunc(rng, m.space(), m.field());
        let g = random_ratfunc(rng, m.space(), m.field());
        let apply = |h: &RationalFunction| m.apply(h).map_err(|e| e.to_string());
        let (mf, mg) = (apply(&f)?, apply(&g)?);
        if apply(&(&f + &g))? != &mf + &mg {
            return Err(format!("sum fails on {f} and {g}"));
        }
        if apply(&(&f * &g))? != &mf * &mg {
            return Err(format!("product fails on {f} and {g}"));
        }
        if !g.is_zero() && apply(&(&f / &g))? != &mf / &mg {
            return Err(format!("quotient fails on {f} and {g}"));
        }
    }
    Ok(())
}
