//! Group definition files.
//!
//! ```text
//! # comment
//! degree 14
//! sigma1 = (1,3,5,7,9,11,13)
//! sigma  = sigma1*sigma2          # a word over earlier elements
//! group N7 = sigma
//! group G2 = N7, tau1^3           # earlier groups expand to their generators
//! ```
//! Without a `degree` line the degree is the largest point mentioned.

use indexmap::IndexMap;

use crate::error::{Error, Result};
use crate::word::parse_word;

use super::cycles::parse_cycles;
use super::group::PermGroup;
use super::perm::Permutation;

#[derive(Clone, Debug)]
pub struct Definitions {
    pub degree: usize,
    pub elements: IndexMap<String, Permutation>,
    pub groups: IndexMap<String, Vec<Permutation>>,
}

impl Definitions {
    pub fn element(&self, name: &str) -> Result<&Permutation> {
        self.elements
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn group(&self, name: &str) -> Result<PermGroup> {
        let gens = self
            .groups
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))?;
        PermGroup::with_degree(self.degree, gens.clone())
    }

    /// Evaluates a word over the defined elements.
    pub fn evaluate(&self, word: &str) -> Result<Permutation> {
        let mut acc = Permutation::identity(self.degree);
        for l in parse_word(word)? {
            acc = acc.compose(&self.element(&l.name)?.pow(l.exponent))?;
        }
        Ok(acc)
    }
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(a, _)| a).trim()
}

/// The argument of a `degree N` (or `degree = N`) line.
fn degree_directive(line: &str) -> Option<&str> {
    let rest = line.strip_prefix("degree")?;
    if !rest.starts_with(|c: char| c.is_whitespace() || c == '=') {
        return None;
    }
    Some(rest.trim().trim_start_matches('=').trim())
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

pub fn parse_definitions(text: &str) -> Result<Definitions> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.is_empty())
        .collect();

    let mut degree = None;
    for &(no, line) in &lines {
        if let Some(rest) = degree_directive(line) {
            let n: usize = rest.parse().map_err(|_| Error::Definition {
                line: no,
                msg: format!("bad degree `{rest}`"),
            })?;
            if n == 0 || degree.replace(n).is_some() {
                return Err(Error::Definition {
                    line: no,
                    msg: "degree must be positive and given once".into(),
                });
            }
        }
    }
    let degree = match degree {
        Some(d) => d,
        None => lines
            .iter()
            .filter(|(_, l)| !l.starts_with("group") && degree_directive(l).is_none())
            .flat_map(|(_, l)| l.split(|c: char| !c.is_ascii_digit()))
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(1),
    };

    let mut defs = Definitions {
        degree,
        elements: IndexMap::new(),
        groups: IndexMap::new(),
    };
    for &(no, line) in &lines {
        let err = |msg: String| Error::Definition { line: no, msg };
        if degree_directive(line).is_some() {
            continue;
        }
        let (lhs, rhs) = line
            .split_once('=')
            .ok_or_else(|| err("expected `name = cycles` or `group NAME = list`".into()))?;
        let (lhs, rhs) = (lhs.trim(), rhs.trim());
        if let Some(name) = lhs.strip_prefix("group ") {
            let name = name.trim();
            if !is_name(name) || defs.groups.contains_key(name) {
                return Err(err(format!("bad or duplicate group name `{name}`")));
            }
            let mut gens = Vec::new();
            for item in rhs.split(',').map(str::trim) {
                if let Some(g) = defs.groups.get(item) {
                    gens.extend(g.iter().cloned());
                } else {
                    gens.push(defs.evaluate(item).map_err(|e| err(e.to_string()))?);
                }
            }
            defs.groups.insert(name.to_string(), gens);
        } else {
            if !is_name(lhs) || defs.elements.contains_key(lhs) {
                return Err(err(format!("bad or duplicate element name `{lhs}`")));
            }
            let p = if rhs.is_empty() || rhs.starts_with('(') {
                parse_cycles(rhs, degree).map_err(|e| err(e.to_string()))?
            } else {
                defs.evaluate(rhs).map_err(|e| err(e.to_string()))?
            };
            defs.elements.insert(lhs.to_string(), p);
        }
    }
    Ok(defs)
}
