//! The registered scenarios.

use std::sync::OnceLock;

use crate::catalog::{def16, gpd, map_to_permutation, Catalog, GpdSpec, Recipe};
use crate::constructions::{
    affine_fixed_construction, artin_schreier_identity, hajja_transform, lemma29_invariants,
    question14_instance, sec52_fold, sec54_invariants, sec55_g2_g4, sec55_kuniyoshi, thm15_reduce,
    thm17_artin_schreier, thm17_linear_change, thm17_relations, AffineAction, Sec54Class,
    SEC54_MATRICES,
};
use crate::error::{Error, Result};
use crate::lattice::{det_exact, ExponentMatrix};
use crate::perms::{PermGroup, Permutation};
use crate::scalars::Field;
use crate::symfield::{
    parse_rational, Character, RationalFunction, SubstitutionMap, VariableSpace,
};

use super::{Recorder, Scenario};

fn field(c: i64) -> Field {
    Field::new(c).expect("valid characteristic")
}

/// Smallest primitive root used for each prime.
fn primitive_root(p: usize) -> i64 {
    (2..p as i64)
        .find(|&a| field(p as i64).from_i64(a).multiplicative_order() == Some(p as u64 - 1))
        .expect("primes have primitive roots")
}

pub fn registry() -> &'static [Scenario] {
    static REGISTRY: OnceLock<Vec<Scenario>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut v = vec![
            Scenario {
                name: "affine-fixed",
                anchor: "thm2.2",
                characteristics: &[0, 5, 7],
                summary: "x^m under scaling and x^p − x under translation are fixed",
                run: affine_fixed,
            },
            Scenario {
                name: "artin-schreier",
                anchor: "thm1.7",
                characteristics: &[2, 3, 5, 7, 11],
                summary: "∏(X + i) = X^p − X over GF(p)",
                run: artin_schreier,
            },
            Scenario {
                name: "catalog-elements",
                anchor: "sec4",
                characteristics: &[],
                summary: "orders and basic identities of the twenty named permutations",
                run: catalog_elements,
            },
            Scenario {
                name: "catalog-normal-subgroups",
                anchor: "sec4",
                characteristics: &[],
                summary: "N7, N49, N8, N16, N64 are normal in their classes",
                run: catalog_normal_subgroups,
            },
            Scenario {
                name: "catalog-orders",
                anchor: "sec4",
                characteristics: &[],
                summary: "stabilizer-chain orders against the orders forced by the structure column",
                run: catalog_orders,
            },
            Scenario {
                name: "catalog-products",
                anchor: "sec4",
                characteristics: &[],
                summary: "direct and wreath products against groups generated by named elements",
                run: catalog_products,
            },
            Scenario {
                name: "catalog-solvability",
                anchor: "sec4",
                characteristics: &[],
                summary: "solvable exactly for classes 1 to 6",
                run: catalog_solvability,
            },
            Scenario {
                name: "catalog-transitivity",
                anchor: "sec4",
                characteristics: &[],
                summary: "every constructed group is transitive on 14 points",
                run: catalog_transitivity,
            },
            Scenario {
                name: "convention",
                anchor: "thm1.7",
                characteristics: &[7],
                summary: "composition order: relations on the named permutations and map/permutation agreement",
                run: convention,
            },
            Scenario {
                name: "gpd-family",
                anchor: "def2.3",
                characteristics: &[],
                summary: "|G_pd| = pd, transitive and solvable",
                run: gpd_family,
            },
            Scenario {
                name: "lemma2.8-hajja",
                anchor: "lemma2.8",
                characteristics: &[0, 7],
                summary: "Σy_i = 1 and σ cycles the y_i",
                run: lemma28,
            },
            Scenario {
                name: "lemma2.9-invariants",
                anchor: "lemma2.9",
                characteristics: &[0, 3, 5, 7],
                summary: "σ·u = u + 1 in characteristic p; z_i cycling and Σv_i = 0 otherwise",
                run: lemma29,
            },
            Scenario {
                name: "question1.4-reduction",
                anchor: "question1.4",
                characteristics: &[0, 7],
                summary: "reduction certificate for n = 7, d = 2 with the sign character",
                run: question14,
            },
            Scenario {
                name: "sec5.2-fold",
                anchor: "sec5.2",
                characteristics: &[0, 7],
                summary: "y_i = x_{2i+1} + x_{2i+2} for G(2), G(4), G(10)",
                run: sec52,
            },
            Scenario {
                name: "sec5.3-dictionary",
                anchor: "sec5.3",
                characteristics: &[7],
                summary: "the six maps under the interleaved renaming against the named permutations",
                run: sec53_dictionary,
            },
            Scenario {
                name: "sec5.3-identifications",
                anchor: "sec5.3",
                characteristics: &[7],
                summary: "class 3 groups as groups generated by the six maps",
                run: sec53_identifications,
            },
            Scenario {
                name: "sec5.4-class4",
                anchor: "sec5.4",
                characteristics: &[0, 3, 5, 7],
                summary: "N8 invariants t, z_i",
                run: |c, r| sec54(c, r, Sec54Class::Four),
            },
            Scenario {
                name: "sec5.4-class5",
                anchor: "sec5.4",
                characteristics: &[0, 3, 5, 7],
                summary: "N16 invariants t, z_i",
                run: |c, r| sec54(c, r, Sec54Class::Five),
            },
            Scenario {
                name: "sec5.4-class6and9",
                anchor: "sec5.4",
                characteristics: &[0, 3, 5, 7],
                summary: "N64 invariants t, z_i",
                run: |c, r| sec54(c, r, Sec54Class::SixNine),
            },
            Scenario {
                name: "sec5.4-determinants",
                anchor: "sec5.4",
                characteristics: &[],
                summary: "determinants of the three transcribed exponent matrices",
                run: sec54_determinants,
            },
            Scenario {
                name: "sec5.5-g2-g4",
                anchor: "sec5.5",
                characteristics: &[7],
                summary: "y, z for G(2) and G(4) on 14 variables",
                run: |c, r| r.construction("GF(7)", || sec55_g2_g4(c, field(7))),
            },
            Scenario {
                name: "sec5.5-kuniyoshi",
                anchor: "sec5.5",
                characteristics: &[3, 5, 7],
                summary: "u, y, z for G_pd in characteristic p",
                run: sec55,
            },
            Scenario {
                name: "thm1.5-preconditions",
                anchor: "thm1.5",
                characteristics: &[0],
                summary: "the reduction rejects bad hypotheses and handles a trivial character",
                run: thm15_preconditions,
            },
            Scenario {
                name: "thm1.7-artin-schreier",
                anchor: "thm1.7",
                characteristics: &[3, 5, 7],
                summary: "u1', v1' and their transformation rules",
                run: thm17_as,
            },
            Scenario {
                name: "thm1.7-linear-change",
                anchor: "thm1.7",
                characteristics: &[3, 5, 7],
                summary: "u_i, v_i, their transformation rules and the inverse change of variables",
                run: thm17_lc,
            },
            Scenario {
                name: "thm1.7-relations-p3",
                anchor: "thm1.7",
                characteristics: &[3],
                summary: "the ten relations among the six maps, p = 3",
                run: |_, r| relations(r, 3),
            },
            Scenario {
                name: "thm1.7-relations-p5",
                anchor: "thm1.7",
                characteristics: &[5],
                summary: "the ten relations among the six maps, p = 5",
                run: |_, r| relations(r, 5),
            },
            Scenario {
                name: "thm1.7-relations-p7",
                anchor: "thm1.7",
                characteristics: &[7],
                summary: "the ten relations among the six maps, p = 7",
                run: |_, r| relations(r, 7),
            },
        ];
        v.sort_by_key(|s| s.name);
        v
    })
}

fn affine_fixed(_: &Catalog, r: &mut Recorder) {
    let q = field(0);
    let f7 = field(7);
    r.construction("Q, x ↦ −x", || {
        affine_fixed_construction(
            &AffineAction::Scaling {
                c: q.from_i64(-1),
                m: 2,
            },
            q,
        )
    });
    r.construction("GF(7), x ↦ 3x", || {
        affine_fixed_construction(
            &AffineAction::Scaling {
                c: f7.from_i64(3),
                m: 6,
            },
            f7,
        )
    });
    for p in [5, 7] {
        r.construction(&format!("GF({p}), x ↦ x + 1"), || {
            affine_fixed_construction(&AffineAction::Translation { p }, field(p.into()))
        });
    }
    r.expect_err("scaling by 2 in GF(7) does not have order 6", || {
        affine_fixed_construction(
            &AffineAction::Scaling {
                c: f7.from_i64(2),
                m: 6,
            },
            f7,
        )
    });
}

fn artin_schreier(_: &Catalog, r: &mut Recorder) {
    for p in [2, 3, 5, 7, 11] {
        r.construction(&format!("GF({p})"), || artin_schreier_identity(p));
    }
}

fn catalog_elements(c: &Catalog, r: &mut Recorder) {
    let orders: [(&str, u64); 20] = [
        ("sigma1", 7),
        ("sigma2", 7),
        ("tau1", 6),
        ("tau2", 6),
        ("lambda1", 4),
        ("lambda2", 2),
        ("lambda3", 2),
        ("lambda4", 2),
        ("lambda5", 3),
        ("lambda6", 3),
        ("mu0", 2),
        ("mu1", 2),
        ("mu2", 2),
        ("mu3", 2),
        ("mu4", 2),
        ("mu5", 2),
        ("mu6", 2),
        ("nu1", 2),
        ("nu2", 2),
        ("nu3", 2),
    ];
    for (name, order) in orders {
        r.expect_eq(format!("order of {name}"), order, || {
            Ok(c.element(name)?.order())
        });
    }
    for i in 0..7usize {
        r.check(format!("mu{i} = ({},{})", 2 * i + 1, 2 * i + 2), || {
            let expected = Permutation::from_cycles(14, &[&[2 * i + 1, 2 * i + 2]])?;
            let got = c.element(&format!("mu{i}"))?;
            Ok((*got == expected, got.to_cycle_string()))
        });
    }
    let same = |r: &mut Recorder, lhs: &str, rhs: &str| {
        r.check(format!("{lhs} = {rhs}"), || {
            let (a, b) = (c.evaluate(lhs)?, c.evaluate(rhs)?);
            Ok((a == b, format!("{a} versus {b}")))
        });
    };
    same(r, "lambda2", "mu0*mu1*mu2*mu3*mu4*mu5*mu6");
    same(r, "tau1*sigma1*sigma2*tau1^-1", "sigma1^3*sigma2^3");
    same(r, "tau2*sigma1*sigma2*tau2^-1", "sigma1^3*sigma2^3");
    same(r, "sigma1*sigma2", "sigma2*sigma1");
}

fn catalog_normal_subgroups(c: &Catalog, r: &mut Recorder) {
    for (name, order) in [
        ("N7", 7u128),
        ("N49", 49),
        ("N8", 8),
        ("N16", 16),
        ("N64", 64),
    ] {
        r.expect_eq(format!("|{name}| = {order}"), order, || {
            Ok(c.named_group(name)?.order())
        });
    }
    for (small, big) in [("N8", "N16"), ("N8", "N64"), ("N7", "N49")] {
        r.check(format!("{small} ≤ {big}"), || {
            let ok = c.named_group(small)?.is_subgroup_of(&c.named_group(big)?);
            Ok((
                ok,
                if ok {
                    "every generator is a member".into()
                } else {
                    "a generator lies outside".into()
                },
            ))
        });
    }
    for g in c.groups() {
        let (Some(n), Some(group)) = (g.normal_subgroup, g.group.as_ref()) else {
            continue;
        };
        r.check(format!("{n} ⊴ G({})", g.id), || {
            let ok = c.named_group(n)?.is_normal_in(group);
            Ok((
                ok,
                format!(
                    "|G({})| / |{n}| = {}",
                    g.id,
                    group.order() / c.named_group(n)?.order()
                ),
            ))
        });
    }
}

/// Orders forced by the structure column (semidirect and product descriptions).
const STRUCTURE_ORDERS: [(usize, u128); 49] = [
    (1, 14),
    (2, 14),
    (3, 28),
    (4, 42),
    (5, 42),
    (6, 56),
    (7, 84),
    (8, 98),
    (9, 112),
    (10, 168),
    (11, 168),
    (12, 196),
    (13, 196),
    (14, 294),
    (15, 294),
    (18, 336),
    (19, 336),
    (20, 392),
    (21, 448),
    (22, 588),
    (23, 588),
    (24, 588),
    (25, 588),
    (26, 882),
    (27, 896),
    (28, 896),
    (29, 896),
    (31, 1176),
    (32, 1176),
    (35, 1344),
    (36, 1764),
    (37, 1764),
    (38, 1792),
    (40, 2688),
    (41, 2688),
    (44, 2688),
    (45, 3528),
    (47, 5040),
    (48, 5376),
    (49, 10080),
    (51, 21504),
    (52, 56448),
    (54, 322560),
    (55, 322560),
    (56, 322560),
    (57, 645120),
    (58, 12700800),
    (61, 50803200),
    (63, 87178291200),
];

fn catalog_orders(c: &Catalog, r: &mut Recorder) {
    for (id, order) in STRUCTURE_ORDERS {
        r.check(format!("|G({id})| = {order}"), || {
            let g = c.group(id)?;
            let got = g
                .group
                .as_ref()
                .ok_or_else(|| Error::Precondition(format!("G({id}) has no generators")))?
                .order();
            Ok((got == order, got.to_string()))
        });
    }
    r.check("orders are nondecreasing in the id", || {
        let orders: Vec<(usize, u128)> = c
            .groups()
            .iter()
            .filter_map(|g| g.group.as_ref().map(|pg| (g.id, pg.order())))
            .collect();
        let bad = orders.windows(2).find(|w| w[0].1 > w[1].1);
        Ok(match bad {
            None => (true, format!("{} groups", orders.len())),
            Some(w) => (
                false,
                format!(
                    "|G({})| = {} > |G({})| = {}",
                    w[0].0, w[0].1, w[1].0, w[1].1
                ),
            ),
        })
    });
    r.check("entries without generators", || {
        let missing: Vec<usize> = c
            .groups()
            .iter()
            .filter(|g| g.group.is_none())
            .map(|g| g.id)
            .collect();
        let expected = [16, 17, 30, 33, 34, 39, 42, 43, 46, 50, 53, 59, 60, 62];
        Ok((missing == expected, format!("{missing:?}")))
    });
}

fn catalog_products(c: &Catalog, r: &mut Recorder) {
    for g in c.groups() {
        let (Some(group), formula) = (&g.group, g.recipe) else {
            continue;
        };
        let expected = match formula {
            Recipe::Direct(a, b) => a.group().order() * b.group().order(),
            Recipe::Wreath(h, k) => {
                let hk = h.group();
                hk.order().pow(k.group().degree() as u32) * k.group().order()
            }
            _ => continue,
        };
        r.expect_eq(
            format!("|G({})| from the product formula", g.id),
            expected,
            || Ok(group.order()),
        );
    }
    let named: [(usize, &[&str]); 10] = [
        (1, &["sigma1*sigma2", "lambda2"]),
        (3, &["sigma1*sigma2", "tau1^3", "lambda2"]),
        (5, &["sigma1*sigma2", "tau1^2", "lambda2"]),
        (7, &["sigma1*sigma2", "tau1", "lambda2"]),
        (29, &["mu0", "sigma1*sigma2"]),
        (38, &["mu0", "sigma1*sigma2", "tau1^3"]),
        (44, &["mu0", "sigma1*sigma2", "tau1^2"]),
        (48, &["mu0", "sigma1*sigma2", "tau1"]),
        (51, &["mu0", "sigma1*sigma2", "nu3"]),
        (57, &["mu0", "sigma1*sigma2", "nu2"]),
    ];
    for (id, words) in named {
        r.check(format!("G({id}) = ⟨{}⟩", words.join(", ")), || {
            let gens = words
                .iter()
                .map(|w| c.evaluate(w))
                .collect::<Result<Vec<_>>>()?;
            let h = PermGroup::new(gens)?;
            let g = c
                .group(id)?
                .group
                .as_ref()
                .ok_or_else(|| Error::Precondition("no generators".into()))?;
            Ok((
                g.equals(&h),
                format!("|⟨…⟩| = {}, |G({id})| = {}", h.order(), g.order()),
            ))
        });
    }
}

fn catalog_solvability(c: &Catalog, r: &mut Recorder) {
    for g in c.groups() {
        let Some(group) = &g.group else { continue };
        let expected = g.expected_solvable();
        r.check(
            format!("G({}) (class {}) solvable = {expected}", g.id, g.class),
            || {
                let got = group.is_solvable();
                let series: Vec<String> = group
                    .derived_series_orders()
                    .iter()
                    .map(u128::to_string)
                    .collect();
                Ok((
                    got == expected,
                    format!("derived series orders {}", series.join(" > ")),
                ))
            },
        );
    }
}

fn catalog_transitivity(c: &Catalog, r: &mut Recorder) {
    for g in c.groups() {
        let Some(group) = &g.group else { continue };
        r.check(format!("G({}) is transitive", g.id), || {
            let orbits = group.orbits();
            Ok((
                group.degree() == 14 && orbits.len() == 1,
                format!("{} orbit(s)", orbits.len()),
            ))
        });
    }
}

fn convention(c: &Catalog, r: &mut Recorder) {
    for (lhs, rhs) in [
        ("lambda1*sigma1*lambda1^-1", "sigma2^-1"),
        ("lambda1*sigma2*lambda1^-1", "sigma1"),
        ("lambda2*sigma1*lambda2^-1", "sigma2"),
        ("lambda2*sigma2*lambda2^-1", "sigma1"),
        ("lambda3*sigma1*lambda3^-1", "sigma1^-1"),
        ("lambda4*sigma2*lambda4^-1", "sigma2^-1"),
        ("lambda5*sigma1*lambda5^-1", "sigma1^2"),
        ("lambda6*sigma2*lambda6^-1", "sigma2^2"),
        ("lambda1^4", "1"),
        ("lambda2^2", "1"),
    ] {
        r.check(format!("{lhs} = {rhs}"), || {
            let (a, b) = (c.evaluate(lhs)?, c.evaluate(rhs)?);
            Ok((a == b, format!("{a} versus {b}")))
        });
    }
    let space = VariableSpace::indexed("x", 1, 14);
    let f7 = field(7);
    r.check(
        "maps compose like permutations for all pairs of named elements",
        || {
            let names = crate::catalog::ELEMENT_NAMES;
            for a in names {
                for b in names {
                    let (pa, pb) = (c.element(a)?, c.element(b)?);
                    let ma = SubstitutionMap::from_permutation(&space, f7, pa)?;
                    let mb = SubstitutionMap::from_permutation(&space, f7, pb)?;
                    let composed = map_to_permutation(&ma.compose(&mb)?)?;
                    if composed != pa.compose(pb)? {
                        return Ok((
                            false,
                            format!("{a}*{b}: {composed} versus {}", pa.compose(pb)?),
                        ));
                    }
                }
            }
            Ok((true, "400 pairs".into()))
        },
    );
    r.check("σ1 · x1 = x3", || {
        let m = SubstitutionMap::from_permutation(&space, f7, c.element("sigma1")?)?;
        let x1 = RationalFunction::var(&space, f7, 0);
        let img = m.apply(&x1)?;
        Ok((img == RationalFunction::var(&space, f7, 2), img.to_string()))
    });
}

fn gpd_family(_: &Catalog, r: &mut Recorder) {
    for p in [3usize, 5, 7, 11, 13] {
        let a = primitive_root(p);
        for d in (1..p).filter(|d| (p - 1) % d == 0) {
            r.check(
                format!(
                    "G_{{{p},{d}}} (a = {a}) has order {}, is transitive and solvable",
                    p * d
                ),
                || {
                    let g = gpd(&GpdSpec::new(p, d, a)?);
                    let ok = g.order() == (p * d) as u128 && g.is_transitive() && g.is_solvable();
                    Ok((ok, format!("order {}", g.order())))
                },
            );
        }
    }
    r.expect_err("G_{7,4} is rejected", || GpdSpec::new(7, 4, 3));
    r.expect_err("a = 2 is not a primitive root mod 7", || {
        GpdSpec::new(7, 2, 2)
    });
}

fn lemma28(_: &Catalog, r: &mut Recorder) {
    for n in 2..=8 {
        r.construction(&format!("Q, n = {n}"), || hajja_transform(n, field(0)));
    }
    r.construction("GF(7), n = 4", || hajja_transform(4, field(7)));
}

fn lemma29(_: &Catalog, r: &mut Recorder) {
    for p in [3usize, 5, 7] {
        r.construction(&format!("GF({p}), p = {p}"), || {
            lemma29_invariants(p, field(p as i64))
        });
        r.construction(&format!("Q, p = {p}"), || lemma29_invariants(p, field(0)));
    }
    r.construction("GF(7), p = 3", || lemma29_invariants(3, field(7)));
}

fn question14(_: &Catalog, r: &mut Recorder) {
    for ch in [7, 0] {
        let tag = if ch == 0 {
            "Q".to_string()
        } else {
            format!("GF({ch})")
        };
        let cert = question14_instance(field(ch)).and_then(|inst| thm15_reduce(&inst));
        match cert {
            Err(e) => r.check(format!("[{tag}] certificate"), || Err(e)),
            Ok(cert) => {
                r.check(format!("[{tag}] (a, b, m) = (1, −3, 2)"), || {
                    Ok((
                        (cert.a, cert.b, cert.m) == (1, -3, 2),
                        format!("({}, {}, {})", cert.a, cert.b, cert.m),
                    ))
                });
                r.check(format!("[{tag}] u = (t·s^−3)^2"), || {
                    let space = &cert.u.space().clone();
                    let expected = parse_rational(space, field(ch), "t^2/s^6")?;
                    Ok((cert.u == expected, cert.u.to_string()))
                });
                for o in &cert.checks {
                    r.check(format!("[{tag}] {}", o.label), || {
                        Ok((o.holds, o.witness.clone()))
                    });
                }
            }
        }
    }
}

fn thm15_preconditions(_: &Catalog, r: &mut Recorder) {
    let q = field(0);
    r.expect_err("gcd(n, d) ≠ 1 is rejected (n = d = 7)", || {
        let mut inst = question14_instance(q)?;
        inst.d = 7;
        thm15_reduce(&inst)
    });
    r.expect_err("χ^d ≠ 1 is rejected", || {
        let mut inst = question14_instance(q)?;
        inst.chi = Character::new(&["sigma", "tau"], vec![q.one(), q.from_i64(2)], 2)?;
        thm15_reduce(&inst)
    });
    r.expect_err("an action inconsistent with χ is rejected", || {
        let mut inst = question14_instance(q)?;
        inst.chi = Character::trivial(&["sigma", "tau"], q)?;
        thm15_reduce(&inst)
    });
    r.check("trivial character: m = 1 and u = t^a s^b", || {
        let mut inst = question14_instance(q)?;
        inst.chi = Character::trivial(&["sigma", "tau"], q)?;
        let t = RationalFunction::var_named(&inst.space, q, "t")?;
        let tau = SubstitutionMap::new(
            &inst.space,
            q,
            std::iter::once(t)
                .chain(inst.generators[1].1.images()[1..].iter().cloned())
                .collect(),
        )?;
        inst.generators[1].1 = tau;
        let cert = thm15_reduce(&inst)?;
        Ok((
            cert.m == 1 && cert.u == cert.t_a_s_b && cert.holds(),
            format!("m = {}, u = {}", cert.m, cert.u),
        ))
    });
}

fn sec52(c: &Catalog, r: &mut Recorder) {
    for id in [2, 4, 10] {
        for ch in [0, 7] {
            r.construction(&format!("G({id}), {}", field(ch)), || {
                sec52_fold(c, id, field(ch))
            });
        }
    }
}

fn def16_perm(a: i64, word: &str) -> Result<Permutation> {
    let fam = def16(7, a, field(7))?;
    let mut acc = Permutation::identity(14);
    for letter in crate::word::parse_word(word)? {
        acc = acc.compose(&map_to_permutation(fam.map(&letter.name)?)?.pow(letter.exponent))?;
    }
    Ok(acc)
}

fn sec53_dictionary(c: &Catalog, r: &mut Recorder) {
    for (named, a, word) in [
        ("sigma1", 2, "sigma1"),
        ("sigma2", 2, "sigma2"),
        ("lambda1", 2, "lambda1"),
        ("lambda2", 2, "lambda2"),
        ("lambda3", -1, "rho1"),
        ("lambda4", -1, "rho2"),
        ("lambda5", 2, "rho1"),
        ("lambda6", 2, "rho2"),
    ] {
        r.check(format!("{named} = {word} for a = {a}"), || {
            let (p, q) = (c.element(named)?, def16_perm(a, word)?);
            Ok((*p == q, format!("{q}")))
        });
    }
    for a in [-1, 2] {
        r.construction(&format!("GF(7), a = {a}"), || thm17_relations(7, a));
    }
}

fn sec53_identifications(c: &Catalog, r: &mut Recorder) {
    // (id, [(a, word)]) with σ1, σ2 always included
    let table: [(usize, &[(i64, &str)]); 14] = [
        (12, &[(-1, "lambda1"), (-1, "rho1*rho2")]),
        (12, &[(-1, "lambda1"), (-1, "rho1^-1*rho2")]),
        (13, &[(-1, "lambda2"), (-1, "rho1*rho2")]),
        (13, &[(-1, "lambda2"), (-1, "rho1^-1*rho2")]),
        (14, &[(2, "lambda2"), (2, "rho1*rho2")]),
        (15, &[(2, "lambda2"), (2, "rho1^-1*rho2")]),
        (22, &[(2, "lambda1"), (2, "rho1^-1*rho2")]),
        (23, &[(2, "lambda1"), (2, "rho1*rho2")]),
        (24, &[(2, "lambda2"), (-1, "rho1*rho2"), (2, "rho1*rho2")]),
        (
            25,
            &[(2, "lambda2"), (-1, "rho1*rho2"), (2, "rho1^-1*rho2")],
        ),
        (
            31,
            &[
                (2, "lambda2"),
                (-1, "rho1"),
                (-1, "rho2"),
                (2, "rho1^-1*rho2"),
            ],
        ),
        (
            32,
            &[(2, "lambda2"), (-1, "rho1"), (-1, "rho2"), (2, "rho1*rho2")],
        ),
        (36, &[(2, "lambda1"), (2, "rho1"), (2, "rho2")]),
        (
            37,
            &[(2, "lambda2"), (-1, "rho1*rho2"), (2, "rho1"), (2, "rho2")],
        ),
    ];
    for (id, gens) in table {
        let text: Vec<String> = gens.iter().map(|(a, w)| format!("{w} (a = {a})")).collect();
        r.check(
            format!("G({id}) = ⟨σ1, σ2, {}⟩", text.join(", ")),
            || {
                let mut perms = vec![def16_perm(2, "sigma1")?, def16_perm(2, "sigma2")?];
                for (a, w) in gens {
                    perms.push(def16_perm(*a, w)?);
                }
                let h = PermGroup::new(perms)?;
                let g = c
                    .group(id)?
                    .group
                    .as_ref()
                    .ok_or_else(|| Error::Precondition("no generators".into()))?;
                Ok((
                    g.equals(&h),
                    format!("|⟨…⟩| = {}, |G({id})| = {}", h.order(), g.order()),
                ))
            },
        );
    }
}

fn sec54(c: &Catalog, r: &mut Recorder, class: Sec54Class) {
    for ch in [3, 5, 7, 0] {
        let f = field(ch);
        r.construction(&f.to_string(), || sec54_invariants(c, class, f));
    }
}

fn sec54_determinants(_: &Catalog, r: &mut Recorder) {
    for (class, (m, det)) in ["class 4", "class 5", "classes 6 and 9"]
        .iter()
        .zip(&SEC54_MATRICES)
    {
        r.check(
            format!("{class} exponent matrix determinant = {det}"),
            || {
                let got = det_exact(&ExponentMatrix::new(
                    m.iter().map(|row| row.to_vec()).collect(),
                )?)?;
                Ok((got == (*det).into(), got.to_string()))
            },
        );
    }
}

fn sec55(_: &Catalog, r: &mut Recorder) {
    for (p, d, a) in [
        (7, 1, 3),
        (7, 2, 3),
        (7, 3, 3),
        (7, 6, 3),
        (3, 2, 2),
        (5, 4, 2),
    ] {
        r.construction(&format!("p = {p}, d = {d}, a = {a}"), || {
            sec55_kuniyoshi(&GpdSpec::new(p, d, a)?, field(p as i64))
        });
    }
}

fn thm17_as(_: &Catalog, r: &mut Recorder) {
    for p in [3, 5, 7] {
        let a = primitive_root(p);
        r.construction(&format!("p = {p}, a = {a}"), || thm17_artin_schreier(p, a));
    }
}

fn thm17_lc(_: &Catalog, r: &mut Recorder) {
    for p in [3, 5, 7] {
        let a = primitive_root(p);
        r.construction(&format!("p = {p}, a = {a}"), || thm17_linear_change(p, a));
    }
}

fn relations(r: &mut Recorder, p: usize) {
    let a = primitive_root(p);
    r.construction(&format!("GF({p}), a = {a}"), || thm17_relations(p, a));
}
