//! Graphviz output against checked-in files. `BLESS=1 cargo test --test golden` rewrites them.

use std::path::PathBuf;

use eqminors::minors::Subset;
use eqminors::plabic::{export_dot, honeycomb, plabic_from_collection, PlabicGraph};

fn check(name: &str, g: &PlabicGraph) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    let got = export_dot(g);
    if std::env::var_os("BLESS").is_some() {
        std::fs::write(&path, &got).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(got, want, "{name} changed; rerun with BLESS=1 if intended");
}

#[test]
fn honeycomb_2x2_dot() {
    check("honeycomb_2x2.dot", &honeycomb(2, 2).unwrap().graph);
}

#[test]
fn gr24_dot() {
    let c: Vec<Subset> = ["{1,2}", "{2,3}", "{3,4}", "{1,4}", "{1,3}"].iter().map(|s| Subset::parse(s, 4).unwrap()).collect();
    let g = plabic_from_collection(4, 2, &c).unwrap();
    check("gr24.dot", &g);
}

#[test]
fn dot_round_trips_through_json() {
    let g = honeycomb(2, 2).unwrap().graph;
    let back = PlabicGraph::from_json(&g.to_json()).unwrap();
    assert_eq!(export_dot(&back), export_dot(&g));
}
