//! Executable versions of the constructive steps: each recipe returns named
//! rational functions together with the action formulas claimed for them.

mod folds;
mod kuniyoshi;
mod lemmas;
mod reduction;
mod registry;
mod thm17;

use indexmap::IndexMap;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalars::{Field, Scalar};
use crate::symfield::{format_rational, RationalFunction, SubstitutionMap, VariableSpace};
use crate::word::parse_word;

pub use folds::{sec52_fold, sec54_invariants, Sec54Class, SEC54_MATRICES};
pub use kuniyoshi::{sec55_g2_g4, sec55_kuniyoshi};
pub use lemmas::{
    affine_fixed_construction, affine_fixed_generator, artin_schreier_identity, hajja_transform,
    lemma29_invariants, AffineAction,
};
pub use reduction::{question14_instance, thm15_reduce, ReductionCertificate, Thm15Instance};
pub use registry::{construct, CONSTRUCTION_NAMES};
pub use thm17::{thm17_artin_schreier, thm17_linear_change, thm17_relations};

/// Longest witness text kept for passing checks.
const WITNESS_LIMIT: usize = 160;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expected {
    Image(RationalFunction),
    /// `m·f = c·f`.
    Eigen(Scalar),
}

/// `map · element = expected`.
#[derive(Clone, Debug)]
pub struct ActionClaim {
    pub map: String,
    pub element: String,
    pub expected: Expected,
    /// Readable form of the expected image, e.g. `u1 - u0`.
    pub display: String,
    pub anchor: &'static str,
}

/// An identity `lhs = rhs` between rational functions.
#[derive(Clone, Debug)]
pub struct Relation {
    pub label: String,
    pub lhs: RationalFunction,
    pub rhs: RationalFunction,
    pub anchor: &'static str,
}

/// An equality of maps given as words over the output's maps.
#[derive(Clone, Debug)]
pub struct MapRelation {
    pub lhs: String,
    pub rhs: String,
    pub anchor: &'static str,
}

/// A finite fact settled while building the output (a determinant, a
/// group order, a rank).
#[derive(Clone, Debug)]
pub struct Fact {
    pub label: String,
    pub holds: bool,
    pub witness: String,
    pub anchor: &'static str,
}

/// Result of checking one claim, relation or fact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub label: String,
    pub holds: bool,
    pub witness: String,
    pub anchor: &'static str,
}

#[derive(Clone, Debug)]
pub struct ConstructionOutput {
    pub name: String,
    pub field: Field,
    pub space: VariableSpace,
    pub elements: IndexMap<String, RationalFunction>,
    pub maps: IndexMap<String, SubstitutionMap>,
    pub claims: Vec<ActionClaim>,
    pub relations: Vec<Relation>,
    pub map_relations: Vec<MapRelation>,
    pub facts: Vec<Fact>,
    pub notes: Vec<String>,
}

fn shorten(text: String) -> String {
    if text.chars().count() <= WITNESS_LIMIT {
        return text;
    }
    let cut: String = text.chars().take(WITNESS_LIMIT).collect();
    format!("{cut} …")
}

impl ConstructionOutput {
    pub(crate) fn new(name: impl Into<String>, field: Field, space: &VariableSpace) -> Self {
        ConstructionOutput {
            name: name.into(),
            field,
            space: space.clone(),
            elements: IndexMap::new(),
            maps: IndexMap::new(),
            claims: Vec::new(),
            relations: Vec::new(),
            map_relations: Vec::new(),
            facts: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub(crate) fn add_element(
        &mut self,
        name: impl Into<String>,
        value: RationalFunction,
    ) -> RationalFunction {
        let name = name.into();
        assert!(
            !self.elements.contains_key(&name),
            "duplicate element {name}"
        );
        self.elements.insert(name, value.clone());
        value
    }

    pub(crate) fn add_map(
        &mut self,
        name: impl Into<String>,
        map: SubstitutionMap,
    ) -> SubstitutionMap {
        self.maps.insert(name.into(), map.clone());
        map
    }

    pub(crate) fn claim(
        &mut self,
        map: &str,
        element: &str,
        expected: RationalFunction,
        display: impl Into<String>,
        anchor: &'static str,
    ) {
        self.claims.push(ActionClaim {
            map: map.into(),
            element: element.into(),
            expected: Expected::Image(expected),
            display: display.into(),
            anchor,
        });
    }

    pub(crate) fn claim_eigen(
        &mut self,
        map: &str,
        element: &str,
        factor: Scalar,
        anchor: &'static str,
    ) {
        self.claims.push(ActionClaim {
            map: map.into(),
            element: element.into(),
            display: format!("{factor}·{element}"),
            expected: Expected::Eigen(factor),
            anchor,
        });
    }

    pub(crate) fn relation(
        &mut self,
        label: impl Into<String>,
        lhs: RationalFunction,
        rhs: RationalFunction,
        anchor: &'static str,
    ) {
        self.relations.push(Relation {
            label: label.into(),
            lhs,
            rhs,
            anchor,
        });
    }

    pub(crate) fn map_relation(
        &mut self,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
        anchor: &'static str,
    ) {
        self.map_relations.push(MapRelation {
            lhs: lhs.into(),
            rhs: rhs.into(),
            anchor,
        });
    }

    pub(crate) fn fact(
        &mut self,
        label: impl Into<String>,
        holds: bool,
        witness: impl Into<String>,
        anchor: &'static str,
    ) {
        self.facts.push(Fact {
            label: label.into(),
            holds,
            witness: witness.into(),
            anchor,
        });
    }

    pub fn element(&self, name: &str) -> Result<&RationalFunction> {
        self.elements
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.into()))
    }

    pub fn map(&self, name: &str) -> Result<&SubstitutionMap> {
        self.maps
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.into()))
    }

    /// A word over the output's maps; `a*b` acts as `b` first, then `a`.
    pub fn evaluate_word(&self, word: &str) -> Result<SubstitutionMap> {
        let mut acc = SubstitutionMap::identity(&self.space, self.field);
        for letter in parse_word(word)? {
            acc = acc.compose(&self.map(&letter.name)?.pow(letter.exponent)?)?;
        }
        Ok(acc)
    }

    pub fn check_claim(&self, c: &ActionClaim) -> Outcome {
        let label = format!("{}: {} ↦ {}", c.map, c.element, c.display);
        let result = (|| -> Result<(bool, String)> {
            let m = self.map(&c.map)?;
            let f = self.element(&c.element)?;
            let image = m.apply(f)?;
            Ok(match &c.expected {
                Expected::Image(e) => {
                    let diff = &image - e;
                    if diff.is_zero() {
                        (true, shorten(format_rational(&image)))
                    } else {
                        (
                            false,
                            format!("image − expected = {}", format_rational(&diff)),
                        )
                    }
                }
                Expected::Eigen(k) => {
                    let factor = if f.is_zero() {
                        None
                    } else {
                        (&image / f).constant_value()
                    };
                    match factor {
                        Some(x) if x == *k => (true, format!("factor {x}")),
                        Some(x) => (false, format!("factor {x}, expected {k}")),
                        None => (
                            false,
                            format!(
                                "not an eigenvector; image {}",
                                shorten(format_rational(&image))
                            ),
                        ),
                    }
                }
            })
        })();
        let (holds, witness) = result.unwrap_or_else(|e| (false, format!("error: {e}")));
        Outcome {
            label,
            holds,
            witness,
            anchor: c.anchor,
        }
    }

    pub fn check_relation(&self, r: &Relation) -> Outcome {
        let diff = &r.lhs - &r.rhs;
        let (holds, witness) = if diff.is_zero() {
            (true, shorten(format_rational(&r.lhs)))
        } else {
            (false, format!("lhs − rhs = {}", format_rational(&diff)))
        };
        Outcome {
            label: r.label.clone(),
            holds,
            witness,
            anchor: r.anchor,
        }
    }

    pub fn check_map_relation(&self, r: &MapRelation) -> Outcome {
        let label = format!(
            "{} = {}",
            r.lhs,
            if r.rhs.is_empty() { "1" } else { &r.rhs }
        );
        let result = (|| -> Result<(bool, String)> {
            let (a, b) = (self.evaluate_word(&r.lhs)?, self.evaluate_word(&r.rhs)?);
            let bad = (0..self.space.len()).find(|&i| a.image(i) != b.image(i));
            Ok(match bad {
                None => (true, "equal on every variable".into()),
                Some(i) => (
                    false,
                    format!(
                        "{} ↦ {} versus {}",
                        self.space.name(i),
                        format_rational(a.image(i)),
                        format_rational(b.image(i))
                    ),
                ),
            })
        })();
        let (holds, witness) = result.unwrap_or_else(|e| (false, format!("error: {e}")));
        Outcome {
            label,
            holds,
            witness,
            anchor: r.anchor,
        }
    }

    /// Every claim, relation, map relation and fact, in that order.
    pub fn check(&self) -> Vec<Outcome> {
        let mut out: Vec<Outcome> = self.claims.iter().map(|c| self.check_claim(c)).collect();
        out.extend(self.relations.iter().map(|r| self.check_relation(r)));
        out.extend(
            self.map_relations
                .iter()
                .map(|r| self.check_map_relation(r)),
        );
        out.extend(self.facts.iter().map(|f| Outcome {
            label: f.label.clone(),
            holds: f.holds,
            witness: f.witness.clone(),
            anchor: f.anchor,
        }));
        out
    }

    pub fn to_json(&self) -> Value {
        let elements: serde_json::Map<String, Value> = self
            .elements
            .iter()
            .map(|(k, v)| (k.clone(), json!(format_rational(v))))
            .collect();
        let claims: Vec<Value> = self
            .claims
            .iter()
            .map(|c| {
                let expected = match &c.expected {
                    Expected::Image(e) => format_rational(e),
                    Expected::Eigen(k) => format!("{k}·{}", c.element),
                };
                json!({"map": c.map, "element": c.element, "expected": expected, "anchor": c.anchor})
            })
            .collect();
        let mut relations: Vec<Value> = self
            .relations
            .iter()
            .map(|r| {
                json!({
                    "label": r.label,
                    "lhs": format_rational(&r.lhs),
                    "rhs": format_rational(&r.rhs),
                    "anchor": r.anchor,
                })
            })
            .collect();
        relations.extend(self.map_relations.iter().map(
            |r| json!({"label": "map equality", "lhs": r.lhs, "rhs": r.rhs, "anchor": r.anchor}),
        ));
        let facts: Vec<Value> = self
            .facts
            .iter()
            .map(|f| json!({"label": f.label, "holds": f.holds, "witness": f.witness, "anchor": f.anchor}))
            .collect();
        json!({
            "name": self.name,
            "characteristic": self.field.characteristic(),
            "variables": self.space.names(),
            "elements": elements,
            "claims": claims,
            "relations": relations,
            "facts": facts,
            "notes": self.notes,
        })
    }
}

/// `Σ_i coeffs[i] · fs[i]`.
pub(crate) fn linear_combination(
    space: &VariableSpace,
    field: Field,
    terms: &[(Scalar, &RationalFunction)],
) -> RationalFunction {
    terms
        .iter()
        .fold(RationalFunction::zero(space, field), |acc, (c, f)| {
            &acc + &f.scale(c)
        })
}

pub(crate) fn product(
    space: &VariableSpace,
    field: Field,
    fs: impl IntoIterator<Item = RationalFunction>,
) -> RationalFunction {
    fs.into_iter()
        .fold(RationalFunction::one(space, field), |acc, f| &acc * &f)
}

pub(crate) fn var(space: &VariableSpace, field: Field, name: &str) -> RationalFunction {
    RationalFunction::var_named(space, field, name).expect("variable exists")
}

pub(crate) fn require_prime_field(field: Field, p: usize, what: &str) -> Result<()> {
    if field.characteristic() as usize != p {
        return Err(Error::Precondition(format!(
            "{what} needs characteristic {p}, got {}",
            field.characteristic()
        )));
    }
    Ok(())
}
