use crate::error::{Error, Result};
use crate::scalars::{Field, Scalar};
use crate::word::parse_word;

/// A linear character given by its values on named generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    names: Vec<String>,
    values: Vec<Scalar>,
    order: u64,
}

impl Character {
    /// `order` is the declared `d` with `χ^d = 1`.
    pub fn new(names: &[&str], values: Vec<Scalar>, order: u64) -> Result<Self> {
        if names.len() != values.len() || names.is_empty() {
            return Err(Error::InvalidParameter(
                "one value per generator required".into(),
            ));
        }
        if order == 0 {
            return Err(Error::InvalidParameter(
                "character order must be positive".into(),
            ));
        }
        let field = values[0].field();
        for v in &values {
            if v.is_zero() {
                return Err(Error::InvalidParameter(
                    "character values must be nonzero".into(),
                ));
            }
            if v.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.characteristic(),
                    right: v.field().characteristic(),
                });
            }
        }
        Ok(Character {
            names: names.iter().map(|s| s.to_string()).collect(),
            values,
            order,
        })
    }

    pub fn trivial(names: &[&str], field: Field) -> Result<Self> {
        Self::new(names, vec![field.one(); names.len()], 1)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn field(&self) -> Field {
        self.values[0].field()
    }

    pub fn value(&self, name: &str) -> Result<&Scalar> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| &self.values[i])
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// Value on a word over the generator names.
    pub fn evaluate(&self, word: &str) -> Result<Scalar> {
        let mut acc = self.field().one();
        for letter in parse_word(word)? {
            acc = &acc * &self.value(&letter.name)?.pow(letter.exponent)?;
        }
        Ok(acc)
    }

    /// Whether every value satisfies `v^order = 1`.
    pub fn has_declared_order(&self) -> bool {
        self.values
            .iter()
            .all(|v| v.pow(self.order as i64).is_ok_and(|x| x.is_one()))
    }

    /// The character `χ^k`.
    pub fn power(&self, k: i64) -> Result<Character> {
        Ok(Character {
            names: self.names.clone(),
            values: self
                .values
                .iter()
                .map(|v| v.pow(k))
                .collect::<Result<_>>()?,
            order: self.order,
        })
    }
}

/// True iff `χ^d = 1` and `χ` is 1 on every relation word.
pub fn character_check(chi: &Character, relations: &[&str]) -> Result<bool> {
    let mut ok = chi.has_declared_order();
    for r in relations {
        ok &= chi.evaluate(r)?.is_one();
    }
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn question_instance() {
        let f = Field::new(7).unwrap();
        let chi = Character::new(&["sigma", "tau"], vec![f.one(), f.from_i64(-1)], 2).unwrap();
        assert!(character_check(&chi, &["tau^6", "sigma^7", "tau*sigma*tau^-1*sigma^-3"]).unwrap());
        assert!(!character_check(&chi, &["tau"]).unwrap());
        assert!(matches!(
            character_check(&chi, &["rho"]),
            Err(Error::UnknownName(_))
        ));
    }

    #[test]
    fn wrong_order() {
        let f = Field::new(7).unwrap();
        let chi = Character::new(&["tau"], vec![f.from_i64(3)], 2).unwrap();
        assert!(!character_check(&chi, &[]).unwrap());
        let t = Character::trivial(&["a", "b"], Field::rationals()).unwrap();
        assert!(character_check(&t, &["a*b^5"]).unwrap());
    }
}
