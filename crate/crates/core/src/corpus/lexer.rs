//! An error-tolerant JavaScript scanner that reports identifier
//! occurrences and their syntactic role.
//!
//! Comments, string literals, template literals and regular-expression
//! literals are skipped. Whether `/` starts a regex is decided by the
//! previous significant token.

use serde::{Deserialize, Serialize};

use crate::model::is_identifier;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Function,
    Variable,
    Property,
    Other,
}

impl Role {
    pub const ALL: [Role; 4] = [Role::Function, Role::Variable, Role::Property, Role::Other];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Occurrence {
    pub name: String,
    pub role: Role,
    /// Zero-based line.
    pub line: usize,
    /// Byte column within the line.
    pub col: usize,
    /// Byte offset within the source.
    pub offset: usize,
}

const RESERVED: &[&str] = &[
    "await", "break", "case", "catch", "class", "const", "continue", "debugger", "default",
    "delete", "do", "else", "enum", "export", "extends", "false", "finally", "for", "function",
    "if", "implements", "import", "in", "instanceof", "interface", "let", "new", "null",
    "package", "private", "protected", "public", "return", "static", "super", "switch", "this",
    "throw", "true", "try", "typeof", "var", "void", "while", "with", "yield",
];

/// Keywords after which a `/` begins a regular expression.
const REGEX_AFTER_KEYWORD: &[&str] = &[
    "return", "typeof", "instanceof", "in", "of", "new", "delete", "void", "throw", "case",
    "do", "else", "yield", "await",
];

/// Keywords whose following identifier is a declaration name or label that
/// is none of function, variable or property.
const OTHER_AFTER: &[&str] = &["class", "extends", "import", "export", "as", "from", "break", "continue"];

pub fn is_reserved(word: &str) -> bool {
    RESERVED.contains(&word)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Word(String),
    Number,
    Punct(char),
    /// String, template or regex literal.
    Literal,
}

struct Scanner<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
    line: usize,
    line_start: usize,
}

impl<'a> Scanner<'a> {
    fn peek(&self, ahead: usize) -> Option<u8> {
        self.src.get(self.pos + ahead).copied()
    }

    fn bump(&mut self) {
        if self.src[self.pos] == b'\n' {
            self.line += 1;
            self.line_start = self.pos + 1;
        }
        self.pos += 1;
    }

    fn skip_line(&mut self) {
        while let Some(c) = self.peek(0) {
            if c == b'\n' {
                break;
            }
            self.bump();
        }
    }

    fn skip_block_comment(&mut self) {
        self.pos += 2;
        while self.pos < self.src.len() {
            if self.peek(0) == Some(b'*') && self.peek(1) == Some(b'/') {
                self.pos += 2;
                return;
            }
            self.bump();
        }
    }

    /// Quoted string; an unterminated one ends at the end of the line.
    fn skip_string(&mut self, quote: u8) {
        self.pos += 1;
        while let Some(c) = self.peek(0) {
            match c {
                b'\\' => {
                    self.bump();
                    if self.pos < self.src.len() {
                        self.bump();
                    }
                }
                b'\n' => return,
                c if c == quote => {
                    self.pos += 1;
                    return;
                }
                _ => self.bump(),
            }
        }
    }

    /// Template literal including any `${...}` substitutions; runs to the end
    /// of input when unterminated.
    fn skip_template(&mut self) {
        self.pos += 1;
        while let Some(c) = self.peek(0) {
            match c {
                b'\\' => {
                    self.bump();
                    if self.pos < self.src.len() {
                        self.bump();
                    }
                }
                b'`' => {
                    self.pos += 1;
                    return;
                }
                _ => self.bump(),
            }
        }
    }

    fn skip_regex(&mut self) {
        self.pos += 1;
        let mut in_class = false;
        while let Some(c) = self.peek(0) {
            match c {
                b'\\' => {
                    self.pos += 1;
                    if matches!(self.peek(0), Some(c) if c != b'\n') {
                        self.pos += 1;
                    }
                }
                b'\n' => return,
                b'[' => {
                    in_class = true;
                    self.pos += 1;
                }
                b']' => {
                    in_class = false;
                    self.pos += 1;
                }
                b'/' if !in_class => {
                    self.pos += 1;
                    while matches!(self.peek(0), Some(c) if c.is_ascii_alphabetic()) {
                        self.pos += 1;
                    }
                    return;
                }
                _ => self.bump(),
            }
        }
    }

    /// Consumes a run of word characters (any alphanumeric, `_`, `$`).
    fn word(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len() {
            let ch = self.text[self.pos..].chars().next().expect("in bounds");
            if ch.is_alphanumeric() || ch == '_' || ch == '$' {
                self.pos += ch.len_utf8();
            } else {
                break;
            }
        }
        &self.text[start..self.pos]
    }
}

fn regex_allowed(prev: Option<&Tok>) -> bool {
    match prev {
        None => true,
        Some(Tok::Punct(c)) => !matches!(c, ')' | ']'),
        Some(Tok::Word(w)) => REGEX_AFTER_KEYWORD.contains(&w.as_str()),
        Some(Tok::Number) | Some(Tok::Literal) => false,
    }
}

struct Pending {
    occurrence: Occurrence,
    prev: Option<Tok>,
}

/// Lexes `source` and classifies every identifier occurrence.
pub fn lex_identifiers(source: &str) -> Vec<Occurrence> {
    let mut sc = Scanner {
        src: source.as_bytes(),
        text: source,
        pos: 0,
        line: 0,
        line_start: 0,
    };
    let mut out = Vec::new();
    let mut prev: Option<Tok> = None;
    // An identifier waits here until the next significant token decides
    // between function call, object key and plain reference.
    let mut pending: Option<Pending> = None;

    let settle = |pending: &mut Option<Pending>, next: Option<&Tok>, out: &mut Vec<Occurrence>| {
        if let Some(Pending { mut occurrence, prev }) = pending.take() {
            occurrence.role = classify(prev.as_ref(), next);
            out.push(occurrence);
        }
    };

    while let Some(c) = sc.peek(0) {
        let tok = match c {
            b'\n' | b' ' | b'\t' | b'\r' | 0x0b | 0x0c => {
                sc.bump();
                continue;
            }
            b'/' if sc.peek(1) == Some(b'/') => {
                sc.skip_line();
                continue;
            }
            b'/' if sc.peek(1) == Some(b'*') => {
                sc.skip_block_comment();
                continue;
            }
            b'/' if regex_allowed(prev.as_ref()) => {
                sc.skip_regex();
                Tok::Literal
            }
            b'"' | b'\'' => {
                sc.skip_string(c);
                Tok::Literal
            }
            b'`' => {
                sc.skip_template();
                Tok::Literal
            }
            b'0'..=b'9' => {
                sc.word();
                // Fraction part of a decimal literal.
                if sc.peek(0) == Some(b'.') && matches!(sc.peek(1), Some(d) if d.is_ascii_digit()) {
                    sc.pos += 1;
                    sc.word();
                }
                Tok::Number
            }
            b'.' if matches!(sc.peek(1), Some(d) if d.is_ascii_digit())
                && !matches!(prev, Some(Tok::Word(_)) | Some(Tok::Punct(')')) | Some(Tok::Punct(']'))) =>
            {
                sc.pos += 1;
                sc.word();
                Tok::Number
            }
            c if c.is_ascii() && !(c.is_ascii_alphabetic() || c == b'_' || c == b'$') => {
                sc.pos += 1;
                Tok::Punct(c as char)
            }
            _ => {
                let (line, col, offset) = (sc.line, sc.pos - sc.line_start, sc.pos);
                let ch = source[sc.pos..].chars().next().expect("in bounds");
                if !(ch.is_alphanumeric() || ch == '_' || ch == '$') {
                    sc.pos += ch.len_utf8();
                    continue;
                }
                let word = sc.word();
                if is_identifier(word) && !is_reserved(word) {
                    let tok = Tok::Word(word.to_owned());
                    settle(&mut pending, Some(&tok), &mut out);
                    pending = Some(Pending {
                        occurrence: Occurrence {
                            name: word.to_owned(),
                            role: Role::Other,
                            line,
                            col,
                            offset,
                        },
                        prev: prev.take(),
                    });
                    prev = Some(tok);
                    continue;
                }
                Tok::Word(word.to_owned())
            }
        };
        settle(&mut pending, Some(&tok), &mut out);
        prev = Some(tok);
    }
    settle(&mut pending, None, &mut out);
    out
}

fn classify(prev: Option<&Tok>, next: Option<&Tok>) -> Role {
    let prev_word = match prev {
        Some(Tok::Word(w)) => Some(w.as_str()),
        _ => None,
    };
    if prev_word == Some("function") || next == Some(&Tok::Punct('(')) {
        return Role::Function;
    }
    if prev == Some(&Tok::Punct('.')) {
        return Role::Property;
    }
    if next == Some(&Tok::Punct(':')) && matches!(prev, Some(Tok::Punct('{')) | Some(Tok::Punct(','))) {
        return Role::Property;
    }
    if matches!(prev_word, Some(w) if OTHER_AFTER.contains(&w)) || prev == Some(&Tok::Punct('#')) {
        return Role::Other;
    }
    Role::Variable
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roles(src: &str) -> Vec<(String, Role)> {
        lex_identifiers(src).into_iter().map(|o| (o.name, o.role)).collect()
    }

    fn r(name: &str, role: Role) -> (String, Role) {
        (name.to_owned(), role)
    }

    #[test]
    fn member_access() {
        assert_eq!(
            roles("var x = obj.len;"),
            vec![r("x", Role::Variable), r("obj", Role::Variable), r("len", Role::Property)]
        );
    }

    #[test]
    fn function_declaration() {
        assert_eq!(
            roles("function foo(a) { return a; }"),
            vec![r("foo", Role::Function), r("a", Role::Variable), r("a", Role::Variable)]
        );
    }

    #[test]
    fn comments_and_strings_are_skipped() {
        assert!(roles("// len\n\"len\"").is_empty());
        assert!(roles("/* len */ 'len' `len ${len}`").is_empty());
        assert_eq!(roles("'unterminated len\nlen"), vec![r("len", Role::Variable)]);
    }

    #[test]
    fn calls_keys_and_declarations() {
        assert_eq!(
            roles("foo(1); a.b(); let o = { key: 1, other: 2 }; c ? d : e;"),
            vec![
                r("foo", Role::Function),
                r("a", Role::Variable),
                r("b", Role::Function),
                r("o", Role::Variable),
                r("key", Role::Property),
                r("other", Role::Property),
                r("c", Role::Variable),
                r("d", Role::Variable),
                r("e", Role::Variable),
            ]
        );
        assert_eq!(
            roles("class Foo extends Bar {}"),
            vec![r("Foo", Role::Other), r("Bar", Role::Other)]
        );
    }

    #[test]
    fn regex_versus_division() {
        assert_eq!(
            roles("x = a / b / c;"),
            vec![r("x", Role::Variable), r("a", Role::Variable), r("b", Role::Variable), r("c", Role::Variable)]
        );
        assert_eq!(roles("x = /len[/]x/g.test(y);"), vec![
            r("x", Role::Variable),
            r("test", Role::Function),
            r("y", Role::Variable),
        ]);
        assert_eq!(roles("return /a b/;"), vec![]);
    }

    #[test]
    fn numbers_and_unicode() {
        assert_eq!(roles("x = 1.5e3 + .5 + 0xff;"), vec![r("x", Role::Variable)]);
        assert_eq!(roles("café = ok;"), vec![r("ok", Role::Variable)]);
    }

    #[test]
    fn positions() {
        let occ = lex_identifiers("a\n  bb = c;");
        assert_eq!((occ[1].line, occ[1].col, occ[1].offset), (1, 2, 4));
        assert_eq!((occ[2].line, occ[2].col), (1, 7));
    }
}
