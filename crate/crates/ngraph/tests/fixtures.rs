//! The checked-in JSON under fixtures/ must match what the builders produce.
//! Regenerate with `weave ngraph fixtures --out crates/ngraph/fixtures`.

use std::path::PathBuf;

use ngraph::{build_initial, coxeter_padding, intersection_quiver, CatalogType, CycleSet, NGraph, PaddingLabel};

fn load(name: &str) -> serde_json::Value {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap()
}

fn value(g: &NGraph) -> serde_json::Value {
    serde_json::from_str(&g.to_json()).unwrap()
}

#[test]
fn catalog_graphs_match() {
    let mut types: Vec<(CatalogType, String)> = (4..=7).map(|n| (CatalogType::AffineD(n), format!("G-D{n}.json"))).collect();
    for (a, b, c) in [(3, 3, 3), (2, 4, 4), (2, 3, 6)] {
        types.push((CatalogType::Tripod(a, b, c), format!("G-{a}{b}{c}.json")));
    }
    for (t, name) in types {
        let (g, set) = build_initial(t).unwrap();
        let v = load(&name);
        assert_eq!(v["graph"], value(&g), "{name}");
        let cycles: CycleSet = CycleSet { cycles: serde_json::from_value(v["cycles"].clone()).unwrap() };
        assert_eq!(cycles, set, "{name}");
        let stored = NGraph::from_json(&v["graph"].to_string()).unwrap();
        assert!(stored.validate().is_empty());
        assert_eq!(intersection_quiver(&stored, &cycles).unwrap(), intersection_quiver(&g, &set).unwrap());
    }
}

#[test]
fn paddings_match() {
    let mut labels: Vec<PaddingLabel> =
        (4..=7).flat_map(|n| [PaddingLabel::CAffineD(n), PaddingLabel::CAffineDInv(n)]).collect();
    for (a, b, c) in [(3, 3, 3), (2, 4, 4), (2, 3, 6)] {
        labels.extend([
            PaddingLabel::C(a, b, c),
            PaddingLabel::CBar(a, b, c),
            PaddingLabel::CInv(a, b, c),
            PaddingLabel::CBarInv(a, b, c),
        ]);
    }
    for l in labels {
        let name: String = l.to_string().chars().filter(|c| c.is_alphanumeric()).collect();
        assert_eq!(load(&format!("pad-{name}.json")), value(&coxeter_padding(l).unwrap().graph), "{l}");
    }
}
