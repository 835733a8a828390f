use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A bijection of `{1, …, n}`, stored 0-based.
///
/// Composition follows the left action: `a.compose(&b)` applies `b` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

/// The operations exposed through [`perm_ops`].
#[derive(Clone, Debug)]
pub enum PermOp<'a> {
    Compose(&'a Permutation),
    Inverse,
    Power(i64),
}

pub fn perm_ops(a: &Permutation, op: PermOp<'_>) -> Result<Permutation> {
    match op {
        PermOp::Compose(b) => a.compose(b),
        PermOp::Inverse => Ok(a.inverse()),
        PermOp::Power(e) => Ok(a.pow(e)),
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// From 1-based images: point `i` goes to `images[i-1]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let zero: Vec<usize> = images
            .iter()
            .map(|&x| {
                x.checked_sub(1)
                    .ok_or_else(|| Error::InvalidParameter("points start at 1".into()))
            })
            .collect::<Result<_>>()?;
        Self::from_images0(zero)
    }

    pub fn from_images0(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidParameter("degree must be positive".into()));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidParameter(format!(
                    "not a bijection on 1..{n}"
                )));
            }
        }
        Ok(Permutation { images })
    }

    /// Product of the given cycles (1-based points); cycles need not be disjoint.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut p = Self::identity(degree);
        for c in cycles.iter().rev() {
            let mut images: Vec<usize> = (0..degree).collect();
            for (k, &x) in c.iter().enumerate() {
                let y = c[(k + 1) % c.len()];
                if x == 0 || x > degree || y == 0 || y > degree {
                    return Err(Error::InvalidParameter(format!(
                        "point out of range 1..{degree}"
                    )));
                }
                images[x - 1] = y - 1;
            }
            let cyc = Self::from_images0(images)?;
            p = cyc.compose_unchecked(&p);
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    pub fn image(&self, point: usize) -> usize {
        self.images[point - 1] + 1
    }

    pub fn images0(&self) -> &[usize] {
        &self.images
    }

    pub fn images1(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    #[inline]
    pub(crate) fn at(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.compose_unchecked(&base);
            }
        }
        acc
    }

    /// `self · other · self⁻¹`.
    pub fn conjugate(&self, other: &Permutation) -> Result<Permutation> {
        Ok(self.compose(other)?.compose_unchecked(&self.inverse()))
    }

    /// Nontrivial cycles, 1-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut c = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                c.push(x + 1);
                x = self.images[x];
            }
            out.push(c);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// Cycle notation; the identity prints as the empty string.
    pub fn to_cycle_string(&self) -> String {
        self.cycles()
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(usize::to_string).collect();
                format!("({})", inner.join(","))
            })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            f.write_str("()")
        } else {
            f.write_str(&self.to_cycle_string())
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_applies_right_first() {
        let a = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[2, 3]]).unwrap();
        let ab = a.compose(&b).unwrap();
        // 2 -> 3 under b, 3 fixed by a
        assert_eq!(ab.image(2), 3);
        assert_eq!(ab.image(3), 1);
        assert_eq!(ab.to_cycle_string(), "(1,2,3)");
        assert_eq!(ab.order(), 3);
        assert!(ab.pow(3).is_identity());
        assert!(ab.compose(&ab.inverse()).unwrap().is_identity());
        assert_eq!(ab.pow(-1), ab.inverse());
    }

    #[test]
    fn mismatch_and_validation() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(
            a.compose(&b),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        ));
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert_eq!(Permutation::from_images(&[2, 3, 1]).unwrap().image(3), 1);
    }
}
