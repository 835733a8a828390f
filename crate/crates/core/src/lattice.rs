//! Integer linear algebra on exponent vectors of Laurent monomials.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symfield::RationalFunction;

/// Rows are exponent vectors of monomials in a common set of variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentMatrix {
    rows: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// Nonzero invariant factors, each dividing the next.
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(BigInt),
    Infinite,
}

impl fmt::Display for LatticeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeIndex::Finite(n) => write!(f, "{n}"),
            LatticeIndex::Infinite => f.write_str("infinite"),
        }
    }
}

impl ExponentMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        if let Some(first) = rows.first() {
            if let Some(bad) = rows.iter().find(|r| r.len() != first.len()) {
                return Err(Error::InvalidParameter(format!(
                    "ragged matrix: row of length {} among rows of length {}",
                    bad.len(),
                    first.len()
                )));
            }
        }
        Ok(ExponentMatrix { rows })
    }

    /// Exponent vectors of `c * x^e` elements; anything else is rejected.
    pub fn from_monomials(elements: &[RationalFunction]) -> Result<Self> {
        let rows = elements
            .iter()
            .map(|f| {
                let (n, d) = (f.numerator(), f.denominator());
                if n.len() != 1 || d.len() != 1 {
                    return Err(Error::NotMonomial(crate::symfield::format_rational(f)));
                }
                let (a, b) = (&n.terms()[0].0, &d.terms()[0].0);
                Ok(a.exponents()
                    .iter()
                    .zip(b.exponents())
                    .map(|(&x, &y)| i64::from(x) - i64::from(y))
                    .collect())
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    fn big(&self) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }
}

/// Fraction-free Bareiss elimination.
pub fn det_exact(m: &ExponentMatrix) -> Result<BigInt> {
    let n = m.nrows();
    if n != m.ncols() && n != 0 {
        return Err(Error::NonSquare {
            rows: n,
            cols: m.ncols(),
        });
    }
    let mut a = m.big();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(if n == 0 {
        sign
    } else {
        sign * &a[n - 1][n - 1]
    })
}

/// Smith normal form by unimodular row and column operations.
#[allow(clippy::needless_range_loop)]
pub fn snf(m: &ExponentMatrix) -> SnfResult {
    let mut a = m.big();
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut factors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the remaining block
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()));
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            if a[i][t].is_zero() {
                continue;
            }
            let q = a[i][t].div_floor(&a[t][t]);
            for j in t..cols {
                let v = &a[t][j] * &q;
                a[i][j] -= v;
            }
            clean &= a[i][t].is_zero();
        }
        for j in t + 1..cols {
            if a[t][j].is_zero() {
                continue;
            }
            let q = a[t][j].div_floor(&a[t][t]);
            for i in t..rows {
                let v = &a[i][t] * &q;
                a[i][j] -= v;
            }
            clean &= a[t][j].is_zero();
        }
        if !clean {
            continue;
        }
        let p = a[t][t].clone();
        let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&p)));
        if let Some(i) = offender {
            for j in t..cols {
                let v = a[i][j].clone();
                a[t][j] += v;
            }
            continue;
        }
        factors.push(p.abs());
        t += 1;
    }
    SnfResult {
        rank: factors.len(),
        factors,
    }
}

/// Index of the row lattice in the full lattice of its column dimension.
pub fn monomial_subfield_index(generators: &ExponentMatrix) -> LatticeIndex {
    let r = snf(generators);
    if r.rank < generators.ncols() || generators.ncols() == 0 {
        LatticeIndex::Infinite
    } else {
        LatticeIndex::Finite(r.factors.iter().product())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> ExponentMatrix {
        ExponentMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn ones_then_twos() -> ExponentMatrix {
        let mut rows = vec![vec![1; 7]];
        for i in 1..7 {
            let mut r = vec![0; 7];
            r[i] = 2;
            rows.push(r);
        }
        ExponentMatrix::new(rows).unwrap()
    }

    #[test]
    fn determinants() {
        assert_eq!(
            det_exact(&mat(&[&[2, 1], &[1, 1]])).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            det_exact(&mat(&[&[0, 1], &[1, 0]])).unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(det_exact(&ones_then_twos()).unwrap(), BigInt::from(64));
        assert!(matches!(
            det_exact(&mat(&[&[1, 2, 3]])),
            Err(Error::NonSquare { rows: 1, cols: 3 })
        ));
    }

    #[test]
    fn smith_forms() {
        let r = snf(&ones_then_twos());
        assert_eq!(r.rank, 7);
        assert_eq!(r.factors.iter().product::<BigInt>(), BigInt::from(64));
        let id = snf(&mat(&[&[1, 0], &[0, 1]]));
        assert!(id.factors.iter().all(|f| f.is_one()));
        assert_eq!(snf(&mat(&[&[0, 0], &[0, 0]])).rank, 0);
        let r = snf(&mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(
            r.factors,
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
    }

    #[test]
    fn index() {
        assert_eq!(
            monomial_subfield_index(&mat(&[&[1, 0]])),
            LatticeIndex::Infinite
        );
        assert_eq!(
            monomial_subfield_index(&mat(&[&[2, 0], &[0, 3]])),
            LatticeIndex::Finite(BigInt::from(6))
        );
    }
}
