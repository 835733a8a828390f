//! Group words such as `tau*sigma*tau^-1*sigma^-3`.

use crate::error::{Error, Result};

/// One factor `name^exponent` of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Letter {
    pub name: String,
    pub exponent: i64,
}

/// Parses `name(^int)? (* name(^int)?)*`; `1` and the empty string are the identity.
pub fn parse_word(text: &str) -> Result<Vec<Letter>> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "1" {
        return Ok(Vec::new());
    }
    let mut letters = Vec::new();
    let mut offset = 0;
    for part in text.split('*') {
        let pos = offset + (part.len() - part.trim_start().len());
        offset += part.len() + 1;
        let part = part.trim();
        let (name, exp) = match part.split_once('^') {
            Some((n, e)) => {
                let e: i64 = e
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(pos, format!("bad exponent in `{part}`")))?;
                (n.trim(), e)
            }
            None => (part, 1),
        };
        let valid = !name.is_empty()
            && name
                .chars()
                .all(|c| c.is_alphanumeric() || c == '_' || c == '\'');
        if !valid {
            return Err(Error::parse(pos, format!("bad generator name `{name}`")));
        }
        letters.push(Letter {
            name: name.to_string(),
            exponent: exp,
        });
    }
    Ok(letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words() {
        let w = parse_word("tau*sigma*tau^-1*sigma^-3").unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(
            w[3],
            Letter {
                name: "sigma".into(),
                exponent: -3
            }
        );
        assert!(parse_word("1").unwrap().is_empty());
        assert!(matches!(
            parse_word("a**b"),
            Err(Error::Parse { pos: 2, .. })
        ));
    }
}
