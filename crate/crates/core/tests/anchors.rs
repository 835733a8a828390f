use std::collections::BTreeSet;
use std::path::Path;

use noetherlab::verifier::registry;

/// Anchors listed in the first column of `docs/anchors.md`.
fn documented() -> BTreeSet<String> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/anchors.md");
    let text = std::fs::read_to_string(path).expect("docs/anchors.md is present");
    text.lines()
        .filter_map(|l| {
            let cells: Vec<&str> = l.split('|').map(str::trim).collect();
            match cells.as_slice() {
                ["", anchor, _, _, ""] if anchor.starts_with('`') => {
                    Some(anchor.trim_matches('`').to_string())
                }
                _ => None,
            }
        })
        .collect()
}

#[test]
fn every_scenario_anchor_is_documented() {
    let anchors = documented();
    for s in registry() {
        assert!(
            anchors.contains(s.anchor),
            "{} has undocumented anchor {}",
            s.name,
            s.anchor
        );
    }
}

#[test]
fn every_claim_anchor_is_documented() {
    let anchors = documented();
    for (name, _) in noetherlab::constructions::CONSTRUCTION_NAMES {
        let v = noetherlab::construct(name, &Default::default()).unwrap();
        let list = v
            .get("outcomes")
            .or_else(|| v.get("checks"))
            .and_then(|o| o.as_array())
            .unwrap();
        for o in list {
            let a = o["anchor"].as_str().unwrap();
            assert!(anchors.contains(a), "{name}: undocumented anchor {a}");
        }
    }
}
