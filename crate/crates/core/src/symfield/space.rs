use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An ordered list of distinct variable names.
///
/// Cloning is cheap; two spaces compare equal when their name lists agree.
#[derive(Clone)]
pub struct VariableSpace(Arc<Inner>);

struct Inner {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VariableSpace {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || index.insert(n.clone(), i).is_some() {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        Ok(VariableSpace(Arc::new(Inner { names, index })))
    }

    /// `prefix0, prefix1, ...` with `n` variables starting at `start`.
    pub fn indexed(prefix: &str, start: usize, n: usize) -> Self {
        Self::new((start..start + n).map(|i| format!("{prefix}{i}")))
            .expect("distinct by construction")
    }

    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub(crate) fn check_same(&self, other: &VariableSpace) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }
}

impl PartialEq for VariableSpace {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.names == other.0.names
    }
}

impl Eq for VariableSpace {}

impl fmt::Debug for VariableSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0.names).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates() {
        assert!(VariableSpace::new(["x", "y", "x"]).is_err());
        let s = VariableSpace::indexed("x", 1, 3);
        assert_eq!(s.names(), ["x1", "x2", "x3"]);
        assert_eq!(s.index_of("x2"), Some(1));
        assert_eq!(s, VariableSpace::new(["x1", "x2", "x3"]).unwrap());
    }
}
