use idbench_core::corpus::{lex_identifiers, IdentifierCounts, Role};
use proptest::prelude::*;

const CODE: &[&str] = &["alpha", "beta", "gamma", "delta", "node", "item"];
// Words that only ever appear inside comments, strings, templates or regexes.
const HIDDEN: &[&str] = &["secretA", "secretB", "hiddenWord"];

fn code_word() -> impl Strategy<Value = String> {
    prop::sample::select(CODE).prop_map(str::to_owned)
}

fn hidden_word() -> impl Strategy<Value = String> {
    prop::sample::select(HIDDEN).prop_map(str::to_owned)
}

/// One statement of code, possibly decorated with comments and literals.
fn statement() -> impl Strategy<Value = String> {
    (code_word(), code_word(), code_word(), hidden_word(), hidden_word(), 0u8..10).prop_map(|(a, b, c, h1, h2, k)| {
        match k {
            0 => format!("var {a} = {b}.{c};"),
            1 => format!("// {h1} {h2}\n{a}({b});"),
            2 => format!("/* {h1}\n {h2} */ let {a} = {b};"),
            3 => format!("const {a} = '{h1}' + \"{h2} \\\" {h1}\";"),
            4 => format!("{a} = `{h1} ${{{b}}} {h2}`;"),
            5 => format!("var {a} = /{h1}[/]{h2}/g.test({b});"),
            6 => format!("function {a}({b}) {{ return {c}; }}"),
            7 => format!("{a}.{b} = {{ {c}: '{h1}' }};"),
            8 => format!("if ({a} < {b}) {{ {c}++; }} // {h2}"),
            _ => format!("{a}[{b}] = {c} / 2 / {a};"),
        }
    })
}

fn source() -> impl Strategy<Value = String> {
    (prop::collection::vec(statement(), 0..12), prop::bool::ANY).prop_map(|(stmts, crlf)| {
        let sep = if crlf { "\r\n" } else { "\n" };
        let mut s = stmts.join(sep);
        s.push_str(sep);
        s
    })
}

fn stream(src: &str) -> Vec<(String, Role)> {
    lex_identifiers(src).into_iter().map(|o| (o.name, o.role)).collect()
}

proptest! {
    #[test]
    fn nothing_from_comments_or_literals(src in source()) {
        for occ in lex_identifiers(&src) {
            prop_assert!(!HIDDEN.contains(&occ.name.as_str()), "{} leaked from {:?}", occ.name, src);
            prop_assert!(CODE.contains(&occ.name.as_str()) || occ.name == "test", "unexpected {}", occ.name);
            prop_assert!(src[occ.offset..].starts_with(&occ.name));
        }
    }

    #[test]
    fn concatenation_keeps_per_file_streams(a in source(), b in source()) {
        let mut joined = stream(&a);
        joined.extend(stream(&b));
        prop_assert_eq!(stream(&format!("{a}{b}")), joined);
    }

    #[test]
    fn counts_sum_over_roles_and_merge(a in source(), b in source()) {
        let mut one = IdentifierCounts::default();
        one.add_source(&a);
        one.add_source(&b);
        let (mut left, mut right) = (IdentifierCounts::default(), IdentifierCounts::default());
        left.add_source(&a);
        right.add_source(&b);
        let mut merged = right.clone();
        merged.merge(&left);
        prop_assert_eq!(&merged, &one);
        let sum: u64 = one.by_identifier.values().map(|rc| rc.total()).sum();
        prop_assert_eq!(sum, one.total);
        for id in one.by_identifier.keys() {
            let s = one.stats(id);
            prop_assert_eq!(s.count, Role::ALL.iter().map(|r| s.role_counts.get(*r)).sum::<u64>());
        }
    }
}
