//! Named elements of S14, its explicitly generated transitive subgroups, the
//! `G_pd` family and the six automorphisms `σ1, σ2, λ1, λ2, ρ1, ρ2` on `2p`
//! variables.

use std::sync::OnceLock;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::perms::{
    direct_product, parse_definitions, wreath_product, Definitions, PermGroup, Permutation,
};
use crate::scalars::{is_prime, Field};
use crate::symfield::{SubstitutionMap, VariableSpace};

const S14_DEFINITIONS: &str = include_str!("../data/s14.txt");

/// The twenty named elements, in table order.
pub const ELEMENT_NAMES: [&str; 20] = [
    "sigma1", "sigma2", "tau1", "tau2", "lambda1", "lambda2", "lambda3", "lambda4", "lambda5",
    "lambda6", "mu0", "mu1", "mu2", "mu3", "mu4", "mu5", "mu6", "nu1", "nu2", "nu3",
];

/// Reduces an index modulo `p` into `0..p`.
pub fn residue(i: i64, p: usize) -> usize {
    i.rem_euclid(p as i64) as usize
}

/// Spells Greek-letter names (`σ1`, `λ5`, `μ₃`) the way the definitions do.
pub fn ascii_name(name: &str) -> String {
    let mut out = String::with_capacity(name.len() + 6);
    for c in name.chars() {
        match c {
            'σ' => out.push_str("sigma"),
            'τ' => out.push_str("tau"),
            'λ' => out.push_str("lambda"),
            'μ' => out.push_str("mu"),
            'ν' => out.push_str("nu"),
            'ρ' => out.push_str("rho"),
            '₀'..='₉' => out.push(char::from(b'0' + (c as u32 - '₀' as u32) as u8)),
            _ => out.push(c),
        }
    }
    out
}

/// Inverse of [`ascii_name`] for display: `lambda5` becomes `λ5`.
pub fn greek_name(name: &str) -> String {
    let mut out = name.to_string();
    for (ascii, greek) in [
        ("sigma", "σ"),
        ("lambda", "λ"),
        ("tau", "τ"),
        ("rho", "ρ"),
        ("mu", "μ"),
        ("nu", "ν"),
    ] {
        out = out.replace(ascii, greek);
    }
    out
}

/// Small transitive groups used as product factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Factor {
    C2,
    C7,
    D7,
    G21,
    G42,
    S7,
    A7,
    #[serde(rename = "PSL2(7)")]
    Psl27,
}

impl Factor {
    pub fn name(self) -> &'static str {
        match self {
            Factor::C2 => "C2",
            Factor::C7 => "C7",
            Factor::D7 => "D7",
            Factor::G21 => "G21",
            Factor::G42 => "G42",
            Factor::S7 => "S7",
            Factor::A7 => "A7",
            Factor::Psl27 => "PSL2(7)",
        }
    }

    pub fn group(self) -> PermGroup {
        let gpd7 = |d| gpd(&GpdSpec::new(7, d, 3).expect("3 is a primitive root mod 7"));
        match self {
            Factor::C2 => PermGroup::cyclic(2),
            Factor::C7 => gpd7(1),
            Factor::D7 => gpd7(2),
            Factor::G21 => gpd7(3),
            Factor::G42 => gpd7(6),
            Factor::S7 => PermGroup::symmetric(7),
            Factor::A7 => PermGroup::alternating(7),
            // the action of G(10) on its seven blocks of imprimitivity
            Factor::Psl27 => PermGroup::new(vec![
                Permutation::from_cycles(7, &[&[1, 2, 3, 4, 5, 6, 7]]).expect("valid"),
                Permutation::from_cycles(7, &[&[1, 3], &[2, 6]]).expect("valid"),
            ])
            .expect("nonempty"),
        }
    }
}

/// How a catalog group is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Recipe {
    /// Generators listed in the definitions under `G<id>`.
    Generators,
    /// `left × right` on `X × Y`.
    Direct(Factor, Factor),
    /// `inner ≀ outer`.
    Wreath(Factor, Factor),
    Symmetric,
    /// Described only up to isomorphism; no generators available.
    Unavailable,
}

#[derive(Clone, Debug)]
pub struct CatalogGroup {
    pub id: usize,
    pub class: u8,
    /// Structure as listed in the classification, e.g. `N49 ⋊ ⟨λ1⟩`.
    pub structure: &'static str,
    pub recipe: Recipe,
    pub group: Option<PermGroup>,
    /// Name of the class-specific normal subgroup, where there is one.
    pub normal_subgroup: Option<&'static str>,
}

impl CatalogGroup {
    /// Classes 1–6 are solvable, 7–13 are not.
    pub fn expected_solvable(&self) -> bool {
        self.class <= 6
    }

    pub fn absence_reason(&self) -> Option<&'static str> {
        self.group
            .is_none()
            .then_some("described only up to isomorphism; no generators are given")
    }
}

use Factor::*;
use Recipe::*;

const TABLE: [(usize, u8, Recipe, &str); 63] = [
    (1, 1, Direct(C7, C2), "C7 × C2"),
    (2, 2, Generators, "N7 ⋊ ⟨τ1³⟩ ≅ D7"),
    (3, 1, Direct(D7, C2), "D7 × C2"),
    (4, 2, Generators, "N7 ⋊ ⟨τ1⟩ ≅ G42"),
    (5, 1, Direct(G21, C2), "G21 × C2"),
    (6, 4, Generators, "N8 ⋊ ⟨σ1σ2⟩ ≅ C2³ ⋊ C7"),
    (7, 1, Direct(G42, C2), "G42 × C2"),
    (8, 1, Wreath(C7, C2), "C7 ≀ C2"),
    (9, 5, Generators, "N16 ⋊ ⟨σ1σ2⟩ ≅ C2⁴ ⋊ C7"),
    (10, 10, Generators, "⟨σ1σ2, ν3⟩ ≅ PSL2(F7)"),
    (11, 4, Generators, "N8 ⋊ ⟨σ1σ2, τ2²⟩ ≅ C2³ ⋊ G21"),
    (12, 3, Generators, "N49 ⋊ ⟨λ1⟩"),
    (13, 3, Generators, "N49 ⋊ ⟨λ2, λ3λ4⟩"),
    (14, 3, Generators, "N49 ⋊ ⟨λ2, λ5λ6⟩"),
    (15, 3, Generators, "N49 ⋊ ⟨λ2, λ5⁻¹λ6⟩"),
    (16, 13, Unavailable, "≅ PGL2(F7)"),
    (17, 12, Unavailable, "≅ C2 × PSL2(F7)"),
    (18, 5, Generators, "N16 ⋊ ⟨σ1σ2, τ2²⟩ ≅ C2⁴ ⋊ G21"),
    (19, 11, Direct(Psl27, C2), "PSL2(F7) × C2"),
    (20, 1, Wreath(D7, C2), "D7 ≀ C2"),
    (21, 6, Generators, "N64 ⋊ ⟨σ1σ2⟩ ≅ C2⁶ ⋊ C7"),
    (22, 3, Generators, "N49 ⋊ ⟨λ1, λ5⁻¹λ6⟩"),
    (23, 3, Generators, "N49 ⋊ ⟨λ1, λ5λ6⟩"),
    (24, 3, Generators, "N49 ⋊ ⟨λ2, λ3λ4, λ5λ6⟩"),
    (25, 3, Generators, "N49 ⋊ ⟨λ2, λ3λ4, λ5⁻¹λ6⟩"),
    (26, 1, Wreath(G21, C2), "G21 ≀ C2"),
    (27, 6, Generators, "N64 ⋊ ⟨σ1σ2, τ1³⟩ ≅ C2⁶ ⋊ D7"),
    (28, 6, Generators, "N64 ⋊ ⟨σ1σ2, τ2³⟩ ≅ C2⁶ ⋊ D7"),
    (29, 1, Wreath(C2, C7), "C2 ≀ C7"),
    (30, 13, Unavailable, "≅ PSL2(F13)"),
    (31, 3, Generators, "N49 ⋊ ⟨λ2, λ3, λ4, λ5⁻¹λ6⟩"),
    (32, 3, Generators, "N49 ⋊ ⟨λ2, λ3, λ4, λ5λ6⟩"),
    (33, 12, Unavailable, "extension of PSL2(F7) by C2³"),
    (34, 12, Unavailable, "≅ C2³ ⋊ PSL2(F7)"),
    (35, 6, Generators, "N64 ⋊ ⟨σ1σ2, τ2²⟩ ≅ C2⁶ ⋊ G21"),
    (36, 3, Generators, "N49 ⋊ ⟨λ1, λ5, λ6⟩"),
    (37, 3, Generators, "N49 ⋊ ⟨λ2, λ3λ4, λ5, λ6⟩"),
    (38, 1, Wreath(C2, D7), "C2 ≀ D7"),
    (39, 13, Unavailable, "≅ PGL2(F13)"),
    (40, 6, Generators, "N64 ⋊ ⟨σ1σ2, τ1⟩ ≅ C2⁶ ⋊ G42"),
    (41, 6, Generators, "N64 ⋊ ⟨σ1σ2, τ2⟩ ≅ C2⁶ ⋊ G42"),
    (42, 12, Unavailable, "extension of PSL2(F7) by C2⁴"),
    (43, 12, Unavailable, "≅ C2⁴ ⋊ PSL2(F7)"),
    (44, 1, Wreath(C2, G21), "C2 ≀ G21"),
    (45, 1, Wreath(G42, C2), "G42 ≀ C2"),
    (46, 13, Unavailable, "≅ S7"),
    (47, 11, Direct(A7, C2), "A7 × C2"),
    (48, 1, Wreath(C2, G42), "C2 ≀ G42"),
    (49, 8, Direct(S7, C2), "S7 × C2"),
    (50, 12, Unavailable, "≅ C2⁶ ⋊ PSL2(F7)"),
    (51, 11, Wreath(C2, Psl27), "C2 ≀ PSL2(F7)"),
    (52, 11, Wreath(Psl27, C2), "PSL2(F7) ≀ C2"),
    (53, 12, Unavailable, "≅ C2⁶ ⋊ A7"),
    (54, 9, Generators, "N64 ⋊ ⟨σ1σ2, ν1⟩ ≅ C2⁶ ⋊ S7"),
    (55, 9, Generators, "N64 ⋊ ⟨σ1σ2, ν2⟩ ≅ C2⁶ ⋊ S7"),
    (56, 11, Wreath(C2, A7), "C2 ≀ A7"),
    (57, 8, Wreath(C2, S7), "C2 ≀ S7"),
    (58, 11, Wreath(A7, C2), "A7 ≀ C2"),
    (59, 13, Unavailable, "≅ A7² ⋊ C4"),
    (60, 13, Unavailable, "≅ A7² ⋊ C2²"),
    (61, 8, Wreath(S7, C2), "S7 ≀ C2"),
    (62, 13, Unavailable, "= A14"),
    (63, 7, Symmetric, "S14"),
];

fn normal_subgroup_of(class: u8) -> Option<&'static str> {
    match class {
        2 => Some("N7"),
        3 => Some("N49"),
        4 => Some("N8"),
        5 => Some("N16"),
        6 | 9 => Some("N64"),
        _ => None,
    }
}

/// Named elements and the 63 catalog entries, built from a definitions text.
#[derive(Clone, Debug)]
pub struct Catalog {
    defs: Definitions,
    groups: Vec<CatalogGroup>,
}

impl Catalog {
    /// The catalog built from the bundled definitions.
    pub fn standard() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(|| {
            Catalog::from_definitions(S14_DEFINITIONS).expect("bundled definitions are valid")
        })
    }

    pub fn standard_definitions() -> &'static str {
        S14_DEFINITIONS
    }

    /// Builds a catalog from an alternative definitions text, which must
    /// define every generated group `G<id>` and the normal subgroups.
    pub fn from_definitions(text: &str) -> Result<Catalog> {
        let defs = parse_definitions(text)?;
        if defs.degree != 14 {
            return Err(Error::InvalidParameter(format!(
                "catalog degree must be 14, got {}",
                defs.degree
            )));
        }
        let mut groups = Vec::with_capacity(TABLE.len());
        for &(id, class, recipe, structure) in &TABLE {
            let group = match recipe {
                Generators => Some(defs.group(&format!("G{id}"))?),
                Direct(a, b) => Some(direct_product(&a.group(), &b.group())),
                Wreath(h, g) => Some(wreath_product(&h.group(), &g.group())),
                Symmetric => Some(PermGroup::symmetric(14)),
                Unavailable => None,
            };
            groups.push(CatalogGroup {
                id,
                class,
                structure,
                recipe,
                group,
                normal_subgroup: normal_subgroup_of(class),
            });
        }
        for name in ["N7", "N49", "N8", "N16", "N64"] {
            defs.group(name)?;
        }
        Ok(Catalog { defs, groups })
    }

    pub fn definitions(&self) -> &Definitions {
        &self.defs
    }

    /// A named element; Greek spellings such as `λ1` are accepted.
    pub fn element(&self, name: &str) -> Result<&Permutation> {
        self.defs.element(&ascii_name(name))
    }

    /// A word over the named elements, e.g. `lambda5^-1*lambda6`.
    pub fn evaluate(&self, word: &str) -> Result<Permutation> {
        self.defs.evaluate(&ascii_name(word))
    }

    pub fn group(&self, id: usize) -> Result<&CatalogGroup> {
        if !(1..=63).contains(&id) {
            return Err(Error::InvalidParameter(format!(
                "group id {id} outside 1..63"
            )));
        }
        Ok(&self.groups[id - 1])
    }

    pub fn groups(&self) -> &[CatalogGroup] {
        &self.groups
    }

    /// A group defined by name in the definitions (e.g. `N49`).
    pub fn named_group(&self, name: &str) -> Result<PermGroup> {
        self.defs.group(name)
    }

    /// The `catalog dump` table.
    pub fn dump(&self) -> Value {
        let rows: Vec<Value> = self
            .groups
            .iter()
            .map(|g| {
                let (order, transitive, generators) = match &g.group {
                    Some(pg) => (
                        json!(pg.order().to_string()),
                        json!(pg.is_transitive()),
                        json!(pg
                            .generators()
                            .iter()
                            .map(Permutation::to_cycle_string)
                            .collect::<Vec<_>>()),
                    ),
                    None => (json!("unknown"), Value::Null, json!([])),
                };
                json!({
                    "id": g.id,
                    "class": g.class,
                    "structure": g.structure,
                    "order": order,
                    "solvable": g.expected_solvable(),
                    "transitive": transitive,
                    "generators": generators,
                })
            })
            .collect();
        Value::Array(rows)
    }
}

/// Parameters `(p, d, a)` of `G_pd = ⟨σ, τ^e⟩ ≤ S_p`, `p − 1 = de`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GpdSpec {
    p: usize,
    d: usize,
    a: i64,
}

impl GpdSpec {
    pub fn new(p: usize, d: usize, a: i64) -> Result<Self> {
        if p < 3 || !is_prime(p as u64) {
            return Err(Error::InvalidParameter(format!(
                "p = {p} is not an odd prime"
            )));
        }
        if d == 0 || !(p - 1).is_multiple_of(d) {
            return Err(Error::InvalidParameter(format!(
                "d = {d} does not divide p − 1 = {}",
                p - 1
            )));
        }
        let field = Field::new(p as i64)?;
        if field.from_i64(a).multiplicative_order() != Some(p as u64 - 1) {
            return Err(Error::InvalidParameter(format!(
                "a = {a} is not a primitive root mod {p}"
            )));
        }
        Ok(GpdSpec { p, d, a })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn e(&self) -> usize {
        (self.p - 1) / self.d
    }

    /// `a^k mod p`.
    pub fn a_pow(&self, k: usize) -> usize {
        (0..k).fold(1, |acc, _| residue(acc as i64 * self.a, self.p))
    }
}

fn index_map(p: usize, f: impl Fn(usize) -> usize) -> Permutation {
    Permutation::from_images0((0..p).map(f).collect()).expect("index map is a bijection")
}

/// `⟨σ, τ^e⟩` on points `1..p`, point `i+1` standing for `x_i`.
pub fn gpd(spec: &GpdSpec) -> PermGroup {
    let p = spec.p;
    let sigma = index_map(p, |i| residue(i as i64 + 1, p));
    let ae = spec.a_pow(spec.e()) as i64;
    let tau_e = index_map(p, |i| residue(i as i64 * ae, p));
    PermGroup::new(vec![sigma, tau_e]).expect("nonempty")
}

/// `σ: x_i ↦ x_{i+1}` and `τ: x_i ↦ x_{ai}` on `x0..x_{p−1}`.
#[derive(Clone, Debug)]
pub struct GpdAction {
    pub space: VariableSpace,
    pub sigma: SubstitutionMap,
    pub tau: SubstitutionMap,
}

pub fn gpd_action(spec: &GpdSpec, field: Field) -> Result<GpdAction> {
    let p = spec.p;
    let space = VariableSpace::indexed("x", 0, p);
    let shift: Vec<usize> = (0..p).map(|i| residue(i as i64 + 1, p)).collect();
    let scale: Vec<usize> = (0..p).map(|i| residue(i as i64 * spec.a, p)).collect();
    Ok(GpdAction {
        sigma: SubstitutionMap::permutation(&space, field, &shift)?,
        tau: SubstitutionMap::permutation(&space, field, &scale)?,
        space,
    })
}

/// Variables `x0, y0, x1, y1, …`: point `2i+1` is `x_i`, point `2i+2` is `y_i`.
pub fn interleaved_space(p: usize) -> VariableSpace {
    VariableSpace::new((0..p).flat_map(|i| [format!("x{i}"), format!("y{i}")]))
        .expect("distinct names")
}

/// The six maps on `k(x_i, y_i : 0 ≤ i < p)`, over [`interleaved_space`].
#[derive(Clone, Debug)]
pub struct Def16Family {
    pub p: usize,
    pub a: i64,
    pub space: VariableSpace,
    pub sigma1: SubstitutionMap,
    pub sigma2: SubstitutionMap,
    pub lambda1: SubstitutionMap,
    pub lambda2: SubstitutionMap,
    pub rho1: SubstitutionMap,
    pub rho2: SubstitutionMap,
}

impl Def16Family {
    pub fn maps(&self) -> [(&'static str, &SubstitutionMap); 6] {
        [
            ("sigma1", &self.sigma1),
            ("sigma2", &self.sigma2),
            ("lambda1", &self.lambda1),
            ("lambda2", &self.lambda2),
            ("rho1", &self.rho1),
            ("rho2", &self.rho2),
        ]
    }

    pub fn map(&self, name: &str) -> Result<&SubstitutionMap> {
        let name = ascii_name(name);
        self.maps()
            .into_iter()
            .find(|(n, _)| *n == name)
            .map(|(_, m)| m)
            .ok_or(Error::UnknownName(name))
    }

    pub fn x(&self, i: i64) -> usize {
        2 * residue(i, self.p)
    }

    pub fn y(&self, i: i64) -> usize {
        2 * residue(i, self.p) + 1
    }
}

pub fn def16(p: usize, a: i64, field: Field) -> Result<Def16Family> {
    if p < 3 || !is_prime(p as u64) {
        return Err(Error::InvalidParameter(format!(
            "p = {p} is not an odd prime"
        )));
    }
    if residue(a, p) == 0 {
        return Err(Error::InvalidParameter(format!(
            "a = {a} is not prime to {p}"
        )));
    }
    let space = interleaved_space(p);
    let x = |i: i64| 2 * residue(i, p);
    let y = |i: i64| 2 * residue(i, p) + 1;
    // targets[v] is the variable that v is sent to
    let build = |fx: &dyn Fn(i64) -> usize, fy: &dyn Fn(i64) -> usize| {
        let mut targets = vec![0; 2 * p];
        for i in 0..p as i64 {
            targets[x(i)] = fx(i);
            targets[y(i)] = fy(i);
        }
        SubstitutionMap::permutation(&space, field, &targets)
    };
    Ok(Def16Family {
        p,
        a,
        sigma1: build(&|i| x(i + 1), &y)?,
        sigma2: build(&x, &|i| y(i + 1))?,
        lambda1: build(&|i| y(-i), &x)?,
        lambda2: build(&y, &x)?,
        rho1: build(&|i| x(a * i), &y)?,
        rho2: build(&x, &|i| y(a * i))?,
        space,
    })
}

/// The point permutation `v ↦ target(v)` of a permutation-kind map.
pub fn map_to_permutation(m: &SubstitutionMap) -> Result<Permutation> {
    match (m.kind(), m.targets()) {
        (crate::symfield::MapKind::Permutation, Some(t)) => Permutation::from_images0(t.to_vec()),
        _ => Err(Error::Precondition(format!(
            "{m:?} is not a variable permutation"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elements_match_the_table() {
        let c = Catalog::standard();
        assert_eq!(
            c.element("σ1").unwrap().to_cycle_string(),
            "(1,3,5,7,9,11,13)"
        );
        assert_eq!(c.element("mu3").unwrap().to_cycle_string(), "(7,8)");
        assert_eq!(
            c.element("λ3").unwrap().to_cycle_string(),
            "(3,13)(5,11)(7,9)"
        );
        assert!(matches!(c.element("kappa"), Err(Error::UnknownName(_))));
        for name in ELEMENT_NAMES {
            assert_eq!(c.element(name).unwrap().degree(), 14);
        }
    }

    #[test]
    fn entries() {
        let c = Catalog::standard();
        assert_eq!(c.groups().len(), 63);
        assert_eq!(c.group(12).unwrap().group.as_ref().unwrap().order(), 196);
        assert_eq!(
            c.group(63).unwrap().group.as_ref().unwrap().order(),
            87_178_291_200
        );
        assert!(c.group(33).unwrap().group.is_none());
        assert!(c.group(0).is_err() && c.group(64).is_err());
        assert_eq!(
            c.groups().iter().filter(|g| g.expected_solvable()).count(),
            36
        );
    }

    #[test]
    fn gpd_orders() {
        for (d, n) in [(1, 7), (2, 14), (3, 21), (6, 42)] {
            assert_eq!(gpd(&GpdSpec::new(7, d, 3).unwrap()).order(), n);
        }
        assert!(GpdSpec::new(7, 4, 3).is_err());
        assert!(GpdSpec::new(7, 2, 2).is_err());
        assert!(GpdSpec::new(9, 2, 2).is_err());
        assert_eq!(Factor::Psl27.group().order(), 168);
    }

    #[test]
    fn def16_maps() {
        let f = def16(3, 2, Field::new(3).unwrap()).unwrap();
        assert!(f.lambda2.pow(2).unwrap().is_identity());
        assert!(f.lambda1.pow(4).unwrap().is_identity());
        assert!(!f.lambda1.pow(2).unwrap().is_identity());
        assert!(def16(7, 14, Field::rationals()).is_err());
    }

    #[test]
    fn greek_names() {
        assert_eq!(ascii_name("λ5^-1*λ6"), "lambda5^-1*lambda6");
        assert_eq!(ascii_name("μ₃"), "mu3");
        assert_eq!(greek_name("lambda5^-1*lambda6"), "λ5^-1*λ6");
    }
}
