//! Direct and wreath products acting on product sets.

use super::group::PermGroup;
use super::perm::Permutation;

/// `G × H` on `X × Y`, point `(x, y)` encoded as `n(x−1)+y` where `n = |Y|`.
pub fn direct_product(g: &PermGroup, h: &PermGroup) -> PermGroup {
    let (m, n) = (g.degree(), h.degree());
    let encode = |x: usize, y: usize| x * n + y;
    let mut gens = Vec::new();
    for a in g.generators() {
        let mut img = vec![0; m * n];
        for x in 0..m {
            for y in 0..n {
                img[encode(x, y)] = encode(a.at(x), y);
            }
        }
        gens.push(Permutation::from_images0(img).expect("bijection"));
    }
    for b in h.generators() {
        let mut img = vec![0; m * n];
        for x in 0..m {
            for y in 0..n {
                img[encode(x, y)] = encode(x, b.at(y));
            }
        }
        gens.push(Permutation::from_images0(img).expect("bijection"));
    }
    PermGroup::with_degree(m * n, gens).expect("consistent degree")
}

/// `H ≀_X G` on `Y × X` with `(a, g)·(y, x) = (a_{g·x}·y, g·x)`; point
/// `(y, x)` is encoded as `n(x−1)+y`, so each copy of `Y` is a block of
/// consecutive points.
pub fn wreath_product(h: &PermGroup, g: &PermGroup) -> PermGroup {
    let (n, m) = (h.degree(), g.degree());
    let encode = |y: usize, x: usize| x * n + y;
    let mut gens = Vec::new();
    for block in 0..m {
        for a in h.generators() {
            let mut img: Vec<usize> = (0..m * n).collect();
            for y in 0..n {
                img[encode(y, block)] = encode(a.at(y), block);
            }
            gens.push(Permutation::from_images0(img).expect("bijection"));
        }
    }
    for b in g.generators() {
        let mut img = vec![0; m * n];
        for x in 0..m {
            for y in 0..n {
                img[encode(y, x)] = encode(y, b.at(x));
            }
        }
        gens.push(Permutation::from_images0(img).expect("bijection"));
    }
    PermGroup::with_degree(m * n, gens).expect("consistent degree")
}
