//! Frozen fixture values shared by the workspace test suites.
//!
//! The JSON blob bundled with this crate records, once and for all, the
//! expected generator tables, arrow sets, basis vectors, morphism data and
//! numeric invariants that the library crates must reproduce.  Tests load
//! slices of it through [`goldens`] instead of duplicating literals.

use serde_json::Value;

/// Parse the bundled fixture blob.
pub fn goldens() -> Value {
    serde_json::from_str(include_str!("../goldens.json")).expect("bundled fixture JSON is valid")
}

/// Fetch a nested value by path, panicking with a readable message when a key
/// is missing (tests want loud failures, not `Option` plumbing).
pub fn at<'a>(root: &'a Value, path: &[&str]) -> &'a Value {
    let mut cur = root;
    for key in path {
        cur = cur
            .get(key)
            .unwrap_or_else(|| panic!("fixture path {:?} missing at {:?}", path, key));
    }
    cur
}

/// Parse a fraction rendered as `"a/b"` or `"a"` into a numerator/denominator
/// pair (denominator positive).
pub fn parse_fraction(text: &str) -> (i64, i64) {
    match text.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().expect("fraction numerator");
            let d: i64 = d.trim().parse().expect("fraction denominator");
            assert!(d > 0, "fraction denominators are stored positive");
            (n, d)
        }
        None => (text.trim().parse().expect("integer fraction"), 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blob_parses_and_has_top_level_sections() {
        let g = goldens();
        for key in [
            "c1xc2_basis",
            "c6xc6_basis",
            "fixtures",
            "hyperbox",
            "iota12",
            "lemma_sn",
            "repro_dhst",
            "surgery",
        ] {
            assert!(g.get(key).is_some(), "missing section {key}");
        }
    }

    #[test]
    fn fraction_parsing() {
        assert_eq!(parse_fraction("-1/2"), (-1, 2));
        assert_eq!(parse_fraction("3"), (3, 1));
        assert_eq!(parse_fraction("0"), (0, 1));
    }
}
