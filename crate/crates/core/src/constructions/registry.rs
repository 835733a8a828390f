//! Construction lookup by name for the command line.

use std::collections::BTreeMap;

use serde_json::Value;

use crate::catalog::{Catalog, GpdSpec};
use crate::error::{Error, Result};
use crate::scalars::Field;

use super::{
    affine_fixed_construction, artin_schreier_identity, hajja_transform, lemma29_invariants,
    question14_instance, sec52_fold, sec54_invariants, sec55_g2_g4, sec55_kuniyoshi, thm15_reduce,
    thm17_artin_schreier, thm17_linear_change, AffineAction, Sec54Class,
};

/// Names accepted by [`construct`], each with its parameters and defaults.
pub const CONSTRUCTION_NAMES: [(&str, &str); 11] = [
    ("affine-fixed", "kind=scaling|translation, c=3, m=6, char=7"),
    ("artin-schreier", "p=7"),
    ("hajja", "n=4, char=0"),
    ("lemma2.9", "p=5, char=0"),
    ("question1.4", "char=0"),
    ("sec5.2-fold", "id=2|4|10, char=0"),
    ("sec5.4", "class=4|5|6and9, char=0"),
    ("sec5.5", "p=7, d=2, a=3"),
    ("sec5.5-g2-g4", "(none; characteristic 7)"),
    ("thm1.7-artin-schreier", "p=7, a=3"),
    ("thm1.7-linear-change", "p=5, a=2"),
];

struct Params<'a> {
    map: &'a BTreeMap<String, String>,
    allowed: &'static [&'static str],
}

impl Params<'_> {
    fn check(&self) -> Result<()> {
        match self
            .map
            .keys()
            .find(|k| !self.allowed.contains(&k.as_str()))
        {
            Some(k) => Err(Error::InvalidParameter(format!(
                "unknown parameter `{k}`; expected one of {}",
                self.allowed.join(", ")
            ))),
            None => Ok(()),
        }
    }

    fn text<'b>(&'b self, key: &str, default: &'b str) -> &'b str {
        self.map.get(key).map_or(default, String::as_str)
    }

    fn int(&self, key: &str, default: i64) -> Result<i64> {
        match self.map.get(key) {
            None => Ok(default),
            Some(v) => v
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("{key} = `{v}` is not an integer"))),
        }
    }

    fn usize(&self, key: &str, default: usize) -> Result<usize> {
        let v = self.int(key, default as i64)?;
        usize::try_from(v)
            .map_err(|_| Error::InvalidParameter(format!("{key} = {v} must be nonnegative")))
    }

    fn field(&self, default: i64) -> Result<Field> {
        Field::new(self.int("char", default)?)
    }
}

/// Builds the named construction and returns its JSON description, including
/// the outcome of every claim.
pub fn construct(name: &str, params: &BTreeMap<String, String>) -> Result<Value> {
    let allowed: &'static [&'static str] = match name {
        "affine-fixed" => &["kind", "c", "m", "char"],
        "artin-schreier" => &["p"],
        "hajja" => &["n", "char"],
        "lemma2.9" => &["p", "char"],
        "question1.4" => &["char"],
        "sec5.2-fold" => &["id", "char"],
        "sec5.4" => &["class", "char"],
        "sec5.5" => &["p", "d", "a"],
        "sec5.5-g2-g4" => &[],
        "thm1.7-artin-schreier" | "thm1.7-linear-change" => &["p", "a"],
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    let p = Params {
        map: params,
        allowed,
    };
    p.check()?;
    let catalog = Catalog::standard();
    let out = match name {
        "affine-fixed" => {
            let field = p.field(7)?;
            let action = match p.text("kind", "scaling") {
                "scaling" => AffineAction::Scaling {
                    c: field.from_i64(p.int("c", 3)?),
                    m: p.int("m", 6)? as u64,
                },
                "translation" => AffineAction::Translation {
                    p: field.characteristic(),
                },
                other => return Err(Error::InvalidParameter(format!("kind = `{other}`"))),
            };
            affine_fixed_construction(&action, field)?
        }
        "artin-schreier" => artin_schreier_identity(p.usize("p", 7)?)?,
        "hajja" => hajja_transform(p.usize("n", 4)?, p.field(0)?)?,
        "lemma2.9" => lemma29_invariants(p.usize("p", 5)?, p.field(0)?)?,
        "question1.4" => {
            let cert = thm15_reduce(&question14_instance(p.field(0)?)?)?;
            return Ok(cert.to_json());
        }
        "sec5.2-fold" => sec52_fold(catalog, p.usize("id", 2)?, p.field(0)?)?,
        "sec5.4" => sec54_invariants(
            catalog,
            Sec54Class::parse(p.text("class", "4"))?,
            p.field(0)?,
        )?,
        "sec5.5" => {
            let spec = GpdSpec::new(p.usize("p", 7)?, p.usize("d", 2)?, p.int("a", 3)?)?;
            sec55_kuniyoshi(&spec, Field::new(spec.p() as i64)?)?
        }
        "sec5.5-g2-g4" => sec55_g2_g4(catalog, Field::new(7)?)?,
        "thm1.7-artin-schreier" => thm17_artin_schreier(p.usize("p", 7)?, p.int("a", 3)?)?,
        _ => thm17_linear_change(p.usize("p", 5)?, p.int("a", 2)?)?,
    };
    let mut json = out.to_json();
    let outcomes: Vec<Value> = out
        .check()
        .into_iter()
        .map(|o| serde_json::json!({"label": o.label, "holds": o.holds, "witness": o.witness, "anchor": o.anchor}))
        .collect();
    json["outcomes"] = Value::Array(outcomes);
    Ok(json)
}
