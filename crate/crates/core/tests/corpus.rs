//! Replays the checked-in fuzz corpus through the parsers so seed inputs stay
//! covered by the ordinary test run.

use std::fs;
use std::path::PathBuf;

use rigidity_core::formats::{
    parse_deployment, parse_edge_list, parse_fraction, parse_machine, write_deployment,
    write_edge_list,
};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter_map(|p| {
            let text = String::from_utf8(fs::read(&p).ok()?).ok()?;
            Some((p.display().to_string(), text))
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds in {}", dir.display());
    out
}

#[test]
fn edge_list_seeds() {
    for (name, text) in seeds("edge_list") {
        if let Ok(g) = parse_edge_list(&text) {
            assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g, "{name}");
        }
    }
}

#[test]
fn deployment_seeds() {
    for (name, text) in seeds("deployment") {
        if let Ok(dep) = parse_deployment(&text) {
            assert_eq!(
                parse_deployment(&write_deployment(&dep)).unwrap(),
                dep,
                "{name}"
            );
        }
    }
}

#[test]
fn report_seeds() {
    for (_, text) in seeds("report") {
        let _ = parse_machine(&text);
        let _ = parse_fraction(&text);
    }
}
