//! The acceptance criteria, each run against its time limit. Prints one
//! PASS/FAIL line per criterion and exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use noetherlab::catalog::{def16, interleaved_space};
use noetherlab::constructions::{
    artin_schreier_identity, hajja_transform, lemma29_invariants, question14_instance,
    sec54_invariants, sec55_g2_g4, sec55_kuniyoshi, thm15_reduce, thm17_artin_schreier,
    thm17_linear_change, Sec54Class, SEC54_MATRICES,
};
use noetherlab::symfield::parse_rational;
use noetherlab::verifier::run_scenario_with;
use noetherlab::{
    det_exact, Catalog, ConstructionOutput, ExponentMatrix, Field, GpdSpec, Status, SubstitutionMap,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// Name, time limit in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn field(c: i64) -> Field {
    Field::new(c).expect("valid characteristic")
}

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

/// Every claim, relation and fact of `out` holds; returns how many there were.
fn all_hold(out: &ConstructionOutput) -> Result<usize, String> {
    let outcomes = out.check();
    match outcomes.iter().find(|o| !o.holds) {
        Some(o) => Err(format!("{}: {} ({})", out.name, o.label, o.witness)),
        None => Ok(outcomes.len()),
    }
}

fn scenarios_pass(catalog: &Catalog, names: &[&str]) -> Result<usize, String> {
    let mut count = 0;
    for name in names {
        let report = run_scenario_with(catalog, name).map_err(|e| e.to_string())?;
        if let Some(c) = report.checks.iter().find(|c| c.status != Status::Pass) {
            return Err(format!("{name}: {} ({})", c.claim, c.witness));
        }
        count += report.checks.len();
    }
    Ok(count)
}

fn determinants() -> Outcome {
    let mut got = Vec::new();
    for (m, _) in &SEC54_MATRICES {
        let em = ExponentMatrix::new(m.iter().map(|r| r.to_vec()).collect())
            .map_err(|e| e.to_string())?;
        got.push(det_exact(&em).map_err(|e| e.to_string())?.to_string());
    }
    ensure(got == ["8", "16", "64"], || format!("determinants {got:?}"))?;
    Ok(format!("determinants {}", got.join(", ")))
}

const CLASSES: [(Sec54Class, usize, &str); 3] = [
    (Sec54Class::Four, 3, "N8"),
    (Sec54Class::Five, 4, "N16"),
    (Sec54Class::SixNine, 6, "N64"),
];

fn fixed_fields() -> Outcome {
    let c = Catalog::standard();
    let mut fixed = 0;
    for (class, gens, n) in CLASSES {
        for ch in [3, 5, 7, 0] {
            let out = sec54_invariants(c, class, field(ch)).map_err(|e| e.to_string())?;
            let prefix = format!("{n}[");
            let claims: Vec<_> = out
                .claims
                .iter()
                .filter(|cl| cl.map.starts_with(&prefix))
                .collect();
            ensure(claims.len() == gens * 7, || {
                format!("{n}: {} fixedness claims", claims.len())
            })?;
            for cl in claims {
                let o = out.check_claim(cl);
                ensure(o.holds, || {
                    format!("{n} over {}: {} ({})", field(ch), o.label, o.witness)
                })?;
                fixed += 1;
            }
            let index = out
                .check()
                .into_iter()
                .find(|o| o.label == format!("lattice index = |{n}|"));
            ensure(index.as_ref().is_some_and(|o| o.holds), || {
                format!("{n}: lattice index {index:?}")
            })?;
        }
    }
    Ok(format!(
        "{fixed} fixedness identities over GF(3), GF(5), GF(7), Q; indices 8, 16, 64"
    ))
}

fn relations() -> Outcome {
    let mut labels = Vec::new();
    for (class, _, _) in CLASSES {
        for ch in [0, 3, 5, 7] {
            let out = sec54_invariants(Catalog::standard(), class, field(ch))
                .map_err(|e| e.to_string())?;
            ensure(out.relations.len() == 1, || "expected one relation".into())?;
            let o = out.check_relation(&out.relations[0]);
            ensure(o.holds, || {
                format!("{} over {}: {}", o.label, field(ch), o.witness)
            })?;
            if ch == 0 {
                labels.push(o.label);
            }
        }
    }
    Ok(labels.join("; "))
}

fn thm17_ledger() -> Outcome {
    let mut total = 0;
    for (p, a) in [(3, 2), (5, 2), (7, 3)] {
        let lc = thm17_linear_change(p, a).map_err(|e| e.to_string())?;
        ensure(lc.map_relations.len() == 10, || {
            format!("p = {p}: {} map relations", lc.map_relations.len())
        })?;
        let rebuilt = lc
            .relations
            .iter()
            .filter(|r| r.label.contains("W["))
            .count();
        ensure(rebuilt == 2 * p, || {
            format!("p = {p}: {rebuilt} reconstruction identities")
        })?;
        for m in ["rho1", "rho2"] {
            ensure(lc.claims.iter().any(|c| c.map == m), || {
                format!("p = {p}: no {m} claims")
            })?;
        }
        total += all_hold(&lc)?;
        let asv = thm17_artin_schreier(p, a).map_err(|e| e.to_string())?;
        for e in ["u1'", "v1'"] {
            for m in ["rho1", "rho2"] {
                ensure(
                    asv.claims.iter().any(|c| c.element == e && c.map == m),
                    || format!("p = {p}: no {m} claim on {e}"),
                )?;
            }
        }
        total += all_hold(&asv)?;
    }
    Ok(format!("{total} identities for p = 3, 5, 7"))
}

fn artin_schreier() -> Outcome {
    for p in [2, 3, 5, 7, 11] {
        all_hold(&artin_schreier_identity(p).map_err(|e| e.to_string())?)?;
    }
    Ok("p = 2, 3, 5, 7, 11".into())
}

fn lemmas() -> Outcome {
    let mut total = 0;
    for n in 2..=8 {
        total += all_hold(&hajja_transform(n, field(0)).map_err(|e| e.to_string())?)?;
    }
    for p in [3, 5, 7] {
        total += all_hold(&lemma29_invariants(p, field(p as i64)).map_err(|e| e.to_string())?)?;
        total += all_hold(&lemma29_invariants(p, field(0)).map_err(|e| e.to_string())?)?;
    }
    Ok(format!("{total} identities"))
}

fn question() -> Outcome {
    let f = field(7);
    let inst = question14_instance(f).map_err(|e| e.to_string())?;
    let cert = thm15_reduce(&inst).map_err(|e| e.to_string())?;
    ensure((cert.a, cert.b) == (1, -3), || {
        format!("(a, b) = ({}, {})", cert.a, cert.b)
    })?;
    ensure(cert.a * 7 + cert.b * 2 == 1, || "an + bd ≠ 1".into())?;
    let expected = parse_rational(cert.u.space(), f, "t^2/s^6").map_err(|e| e.to_string())?;
    ensure(cert.u == expected, || format!("u = {}", cert.u))?;
    for label in ["u fixed by σ", "u fixed by τ", "t^d/s^n = ∏(x_i/s)"] {
        ensure(
            cert.checks.iter().any(|c| c.label == label && c.holds),
            || format!("{label} missing or false"),
        )?;
    }
    ensure(cert.holds(), || "certificate check failed".into())?;
    Ok(format!(
        "(a, b, m) = ({}, {}, {}), u = {}",
        cert.a, cert.b, cert.m, cert.u
    ))
}

fn kuniyoshi() -> Outcome {
    let mut total = 0;
    for (p, d, a) in [(7, 1, 3), (7, 2, 3), (7, 3, 3), (7, 6, 3)] {
        let spec = GpdSpec::new(p, d, a).map_err(|e| e.to_string())?;
        total += all_hold(&sec55_kuniyoshi(&spec, field(7)).map_err(|e| e.to_string())?)?;
    }
    total += all_hold(&sec55_g2_g4(Catalog::standard(), field(7)).map_err(|e| e.to_string())?)?;
    Ok(format!("{total} action formulas"))
}

fn catalog() -> Outcome {
    // a fresh catalog, so stabilizer chains (including S14) are built inside the limit
    let fresh =
        Catalog::from_definitions(Catalog::standard_definitions()).map_err(|e| e.to_string())?;
    let spot = [
        (2, 14u128),
        (4, 42),
        (6, 56),
        (9, 112),
        (10, 168),
        (12, 196),
        (21, 448),
        (29, 896),
    ];
    for (id, order) in spot {
        let g = fresh.group(id).map_err(|e| e.to_string())?;
        let got = g.group.as_ref().map(|pg| pg.order());
        ensure(got == Some(order), || format!("|G({id})| = {got:?}"))?;
    }
    let n = scenarios_pass(
        &fresh,
        &[
            "catalog-transitivity",
            "catalog-solvability",
            "catalog-normal-subgroups",
            "catalog-orders",
        ],
    )?;
    Ok(format!("{n} checks, spot orders match"))
}

fn dictionary() -> Outcome {
    let f = field(7);
    let space = interleaved_space(7);
    let c = Catalog::standard();
    for (named, a, map) in [
        ("lambda3", -1, "rho1"),
        ("lambda4", -1, "rho2"),
        ("lambda5", 2, "rho1"),
        ("lambda6", 2, "rho2"),
    ] {
        let fam = def16(7, a, f).map_err(|e| e.to_string())?;
        let from_catalog = SubstitutionMap::from_permutation(
            &space,
            f,
            c.element(named).map_err(|e| e.to_string())?,
        )
        .map_err(|e| e.to_string())?;
        ensure(
            &from_catalog == fam.map(map).map_err(|e| e.to_string())?,
            || format!("{named} ≠ {map} at a = {a}"),
        )?;
    }
    let n = scenarios_pass(c, &["sec5.3-dictionary", "sec5.3-identifications"])?;
    Ok(format!("four map identities, {n} scenario checks"))
}

fn oracles() -> Outcome {
    let c = Catalog::standard();
    let mut compared = 0;
    for g in c.groups() {
        let Some(group) = &g.group else { continue };
        match common::enumerate(group, 2000) {
            Some(n) => {
                ensure(group.order() == n as u128, || {
                    format!("G({}): chain {} vs {n}", g.id, group.order())
                })?;
                compared += 1;
            }
            None => ensure(group.order() > 2000, || {
                format!("G({}) enumerates past 2000", g.id)
            })?,
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=5);
        let m: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(-20..=20)).collect())
            .collect();
        let d = det_exact(&ExponentMatrix::new(m.clone()).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        ensure(d == common::cofactor_det(&m).into(), || {
            format!("det mismatch on {m:?}")
        })?;
    }
    let maps = common::catalog_maps();
    for (name, m) in &maps {
        common::homomorphism_samples(m, &mut rng, 500).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!(
        "{compared} group orders, 1000 determinants, {} maps × 500 samples",
        maps.len()
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("sec5.4 determinants", 1, determinants),
        ("sec5.4 fixed-field certificates", 10, fixed_fields),
        ("sec5.4 relations", 1, relations),
        ("thm1.7 proof ledger", 30, thm17_ledger),
        ("Artin–Schreier identity", 1, artin_schreier),
        ("lemma2.8 / lemma2.9", 5, lemmas),
        ("thm1.5 / question1.4 certificate", 5, question),
        ("sec5.5 action formulas", 10, kuniyoshi),
        ("catalog", 60, catalog),
        ("sec5.3 dictionary", 30, dictionary),
        ("brute-force oracles", 300, oracles),
    ];
    let suite = Instant::now();
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(*limit);
        let (status, detail) = match result {
            Ok(d) if elapsed <= limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("over the time limit; {d}")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "{status} {:>2} {name:<34} {:>9.1} ms (limit {:>3} s)  {detail}",
            i + 1,
            elapsed.as_secs_f64() * 1e3,
            limit.as_secs()
        );
    }
    let total = suite.elapsed();
    let whole = if total <= Duration::from_secs(300) {
        "PASS"
    } else {
        "FAIL"
    };
    if whole == "FAIL" {
        failed += 1;
    }
    println!(
        "{whole}    full acceptance run {:>26.1} ms (limit 300 s)",
        total.as_secs_f64() * 1e3
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
