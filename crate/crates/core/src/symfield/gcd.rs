//! Multivariate gcd over a field by recursive primitive remainder sequences.
//!
//! A polynomial in several variables is viewed as univariate in one chosen
//! variable with coefficients in the remaining ones; contents are computed
//! recursively and the primitive parts are run through a primitive PRS.

use super::poly::Polynomial;

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.monic().0;
    }
    if b.is_zero() {
        return a.monic().0;
    }
    let one = Polynomial::one(a.space(), a.field());
    if a.is_constant() || b.is_constant() {
        return one;
    }
    let (ma, mb) = (a.monomial_content(), b.monomial_content());
    let shared = ma.gcd(&mb);
    let core = gcd_content_free(&a.div_monomial(&ma), &b.div_monomial(&mb));
    if shared.is_one() {
        core
    } else {
        core.mul_term(&shared, &a.field().one())
    }
}

/// Both inputs nonzero and free of monomial factors.
fn gcd_content_free(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let one = Polynomial::one(a.space(), a.field());
    if a.is_constant() || b.is_constant() {
        return one;
    }
    if a == b {
        return a.monic().0;
    }
    let (big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if big.div_exact(small).is_some() {
        return small.monic().0;
    }

    let (sa, sb) = (a.support(), b.support());
    // A variable present in only one operand can be eliminated through its content.
    if let Some(v) = (0..sa.len()).find(|&v| sa[v] != sb[v]) {
        return if sa[v] {
            gcd_content_free(&strip(content_in(a, v)), b)
        } else {
            gcd_content_free(a, &strip(content_in(b, v)))
        };
    }
    let v = (0..sa.len())
        .filter(|&v| sa[v])
        .min_by_key(|&v| (a.degree_in(v).max(b.degree_in(v)), v))
        .expect("nonconstant polynomials use some variable");

    let (ca, cb) = (content_in(a, v), content_in(b, v));
    let c = gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let g = primitive_prs(pa, pb, v);
    (&c * &g).monic().0
}

/// Removes any monomial factor (contents can acquire them).
fn strip(p: Polynomial) -> Polynomial {
    let m = p.monomial_content();
    if m.is_one() {
        p
    } else {
        p.div_monomial(&m)
    }
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `var`.
pub fn content_in(p: &Polynomial, var: usize) -> Polynomial {
    let mut coeffs: Vec<Polynomial> = p
        .coefficients_in(var)
        .into_iter()
        .filter(|c| !c.is_zero())
        .collect();
    coeffs.sort_by_key(|c| (c.len(), c.total_degree()));
    let mut acc = match coeffs.first() {
        Some(c) => c.monic().0,
        None => return Polynomial::zero(p.space(), p.field()),
    };
    for c in &coeffs[1..] {
        if acc.is_constant() {
            break;
        }
        acc = gcd(&acc, c);
    }
    acc
}

fn primitive_part(p: &Polynomial, var: usize) -> Polynomial {
    let c = content_in(p, var);
    if c.is_one() {
        p.clone()
    } else {
        p.div_exact(&c).expect("content divides")
    }
}

/// Gcd of two polynomials primitive in `var`, both of positive degree in it.
fn primitive_prs(a: Polynomial, b: Polynomial, var: usize) -> Polynomial {
    let (mut a, mut b) = if a.degree_in(var) >= b.degree_in(var) {
        (a, b)
    } else {
        (b, a)
    };
    loop {
        let r = pseudo_remainder(&a, &b, var);
        if r.is_zero() {
            return b.monic().0;
        }
        if r.degree_in(var) == 0 {
            return Polynomial::one(a.space(), a.field());
        }
        let r = primitive_part(&r, var);
        a = b;
        b = r;
    }
}

/// Sparse pseudo-remainder of `a` by `b` in `var` (up to a content factor).
fn pseudo_remainder(a: &Polynomial, b: &Polynomial, var: usize) -> Polynomial {
    let mut bc = b.coefficients_in(var);
    let db = bc.len() - 1;
    if let Some(c) = bc[db].constant_value() {
        let inv = c.inv().expect("nonzero leading coefficient");
        bc = bc.iter().map(|p| p.scale(&inv)).collect();
    }
    let lb = bc[db].clone();
    let lb_is_one = lb.is_one();
    let mut ac = a.coefficients_in(var);
    while ac.len() > db && !ac.is_empty() {
        let da = ac.len() - 1;
        let la = ac[da].clone();
        if !lb_is_one {
            for c in ac.iter_mut() {
                *c = &*c * &lb;
            }
        }
        let shift = da - db;
        for (k, bk) in bc.iter().enumerate() {
            ac[k + shift] = &ac[k + shift] - &(&la * bk);
        }
        while ac.last().is_some_and(|c| c.is_zero()) {
            ac.pop();
        }
    }
    Polynomial::from_coefficients_in(a.space(), a.field(), var, &ac)
}

/// Least common multiple, monic.
pub fn lcm(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() || b.is_zero() {
        return Polynomial::zero(a.space(), a.field());
    }
    let g = gcd(a, b);
    (&a.div_exact(&g).expect("gcd divides") * b).monic().0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Field;
    use crate::symfield::space::VariableSpace;

    fn vars(p: i64, n: usize) -> (Vec<Polynomial>, Polynomial) {
        let s = VariableSpace::indexed("x", 0, n);
        let f = Field::new(p).unwrap();
        (
            (0..n).map(|i| Polynomial::var(&s, f, i)).collect(),
            Polynomial::one(&s, f),
        )
    }

    #[test]
    fn recovers_planted_factor() {
        for p in [0, 7] {
            let (x, one) = vars(p, 3);
            let g = &(&(&x[0] * &x[1]) + &x[2]) + &one;
            let a = &g * &(&x[0] - &x[2]);
            let b = &g * &(&x[1].pow(2) + &one);
            assert_eq!(gcd(&a, &b), g.monic().0);
        }
    }

    #[test]
    fn coprime_and_monomial_cases() {
        let (x, one) = vars(0, 2);
        assert!(gcd(&(&x[0] + &one), &(&x[0] - &one)).is_one());
        let a = &x[0].pow(3) * &x[1];
        let b = &(&x[0].pow(2) * &x[1].pow(2)) + &(&x[0] * &x[1]);
        assert_eq!(gcd(&a, &b), &x[0] * &x[1]);
        assert_eq!(
            gcd(&x[0], &Polynomial::zero(x[0].space(), x[0].field())),
            x[0]
        );
    }

    #[test]
    fn content_is_factored() {
        let (x, one) = vars(3, 3);
        // (x2 + 1) * (x0 + x1) and (x2 + 1) * x0^2
        let c = &x[2] + &one;
        let a = &c * &(&x[0] + &x[1]);
        let b = &c * &x[0].pow(2);
        assert_eq!(gcd(&a, &b), c);
        assert_eq!(lcm(&x[0], &x[1]), &x[0] * &x[1]);
    }
}
