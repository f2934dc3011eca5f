mod common;

use common::oracles::{levenshtein_recursive, nw_exhaustive};
use idbench_core::strdist::{
    lexical_similarity, lexical_similarity_with, levenshtein, needleman_wunsch, AlignmentParams, LexicalKind,
};
use proptest::prelude::*;

fn word(max: usize) -> impl Strategy<Value = String> {
    proptest::string::string_regex(&format!("[abc]{{0,{max}}}")).unwrap()
}

fn chars(s: &str) -> Vec<char> {
    s.chars().collect()
}

proptest! {
    #[test]
    fn levenshtein_matches_recursion(a in word(7), b in word(7)) {
        prop_assert_eq!(levenshtein(&a, &b), levenshtein_recursive(&chars(&a), &chars(&b)));
    }

    #[test]
    fn levenshtein_is_a_metric(a in word(10), b in word(10), c in word(10)) {
        prop_assert_eq!(levenshtein(&a, &a), 0);
        prop_assert_eq!(levenshtein(&a, &b), levenshtein(&b, &a));
        prop_assert!(levenshtein(&a, &c) <= levenshtein(&a, &b) + levenshtein(&b, &c));
        if a != b {
            prop_assert!(levenshtein(&a, &b) > 0);
        }
        let (la, lb) = (a.chars().count(), b.chars().count());
        prop_assert!(levenshtein(&a, &b) >= la.abs_diff(lb));
        prop_assert!(levenshtein(&a, &b) <= la.max(lb));
    }

    #[test]
    fn nw_matches_enumeration(a in word(5), b in word(5)) {
        let p = AlignmentParams::default();
        prop_assert_eq!(needleman_wunsch(&a, &b, &p), nw_exhaustive(&a, &b, 1.0, -1.0, -1.0));
    }

    #[test]
    fn nw_matches_enumeration_other_scores(a in word(5), b in word(5)) {
        let p = AlignmentParams { match_score: 2.0, mismatch_penalty: -0.5, gap_penalty: -1.5 };
        prop_assert_eq!(needleman_wunsch(&a, &b, &p), nw_exhaustive(&a, &b, 2.0, -0.5, -1.5));
    }

    #[test]
    fn similarities_in_unit_interval_and_symmetric(a in "[a-zA-Z_$]{1,12}", b in "[a-zA-Z_$]{1,12}") {
        for kind in [LexicalKind::Lv, LexicalKind::Nw] {
            let s = lexical_similarity(&a, &b, kind).unwrap();
            prop_assert!((0.0..=1.0).contains(&s));
            prop_assert_eq!(s, lexical_similarity(&b, &a, kind).unwrap());
            prop_assert_eq!(lexical_similarity(&a, &a, kind).unwrap(), 1.0);
        }
    }
}

#[test]
fn similarity_examples() {
    assert_eq!(lexical_similarity("len", "length", LexicalKind::Lv).unwrap(), 0.5);
    assert!((lexical_similarity("len", "length", LexicalKind::Nw).unwrap() - 0.6).abs() < 1e-12);
    assert!(lexical_similarity("", "", LexicalKind::Lv).is_err());
    let bad = AlignmentParams { match_score: -1.0, ..AlignmentParams::default() };
    assert!(bad.validate().is_err());
    assert_eq!(lexical_similarity_with("x", "", LexicalKind::Lv, &AlignmentParams::default()).unwrap(), 0.0);
}
