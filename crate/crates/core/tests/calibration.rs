use std::collections::BTreeMap;
use std::path::Path;

use chordarc::enumerate::classes;
use chordarc::realize::{genus_min, parity_filter};

const GOLDEN: &str = "tests/golden/parity_genus.txt";

/// Class counts keyed by (m, parity filter, minimum genus).
fn table() -> String {
    let mut counts: BTreeMap<(usize, bool, usize), usize> = BTreeMap::new();
    for m in 1..=5 {
        for e in classes(m).unwrap() {
            let c = e.code.representative();
            let key = (m, parity_filter(&c), genus_min(&c).unwrap().genus);
            *counts.entry(key).or_insert(0) += 1;
        }
    }
    let mut s = String::from("# m parity genus classes\n");
    for ((m, p, g), n) in counts {
        s.push_str(&format!("{m} {} {g} {n}\n", if p { "even" } else { "odd" }));
    }
    s
}

#[test]
fn parity_genus_table_matches_golden() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join(GOLDEN);
    let got = table();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &got).unwrap();
    }
    let want = std::fs::read_to_string(&path).expect("golden file present");
    assert_eq!(got, want);
}

#[test]
fn planar_classes_pass_the_parity_filter() {
    for m in 1..=5 {
        for e in classes(m).unwrap() {
            let c = e.code.representative();
            if genus_min(&c).unwrap().genus == 0 {
                assert!(parity_filter(&c), "{c}");
            }
        }
    }
}
