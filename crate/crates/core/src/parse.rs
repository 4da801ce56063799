//! APX and TGF readers and canonical writers.
//!
//! APX is a sequence of `arg(name).` and `att(a,b).` facts; any amount of
//! whitespace may separate them and `%` starts a comment running to the end
//! of the line. TGF is one node id per line, a `#` line, then `a b` edge
//! lines; text after the first token of a node line or the second token of
//! an edge line is an ignored label.

use std::collections::HashMap;
use std::fmt::Write;

use crate::error::ParseError;
use crate::framework::ArgumentationFramework;

struct Interner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Interner {
    fn new() -> Self {
        Self {
            labels: Vec::new(),
            index: HashMap::new(),
        }
    }

    fn declare(&mut self, name: &str, line: usize) -> Result<(), ParseError> {
        if self.index.contains_key(name) {
            return Err(ParseError::DuplicateArgument {
                line,
                name: name.to_string(),
            });
        }
        self.index.insert(name.to_string(), self.labels.len());
        self.labels.push(name.to_string());
        Ok(())
    }

    fn resolve(&self, name: &str, line: usize) -> Result<usize, ParseError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| ParseError::UndeclaredArgument {
                line,
                name: name.to_string(),
            })
    }

    fn finish(self, attacks: Vec<(usize, usize)>) -> ArgumentationFramework {
        ArgumentationFramework::new(self.labels, attacks)
            .expect("parser only emits declared, non-empty, unique labels")
    }
}

struct Scanner<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Scanner<'a> {
    fn skip_trivia(&mut self) {
        let bytes = self.text.as_bytes();
        while self.pos < bytes.len() {
            match bytes[self.pos] {
                b'\n' => {
                    self.line += 1;
                    self.pos += 1;
                }
                b'%' => {
                    while self.pos < bytes.len() && bytes[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                c if c.is_ascii_whitespace() => self.pos += 1,
                _ => break,
            }
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn malformed(&self) -> ParseError {
        let text = self.rest().lines().next().unwrap_or("").trim().to_string();
        ParseError::Malformed {
            line: self.line,
            text,
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        self.skip_inline_space();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(self.malformed())
        }
    }

    fn skip_inline_space(&mut self) {
        let bytes = self.text.as_bytes();
        while self.pos < bytes.len() && matches!(bytes[self.pos], b' ' | b'\t' | b'\r') {
            self.pos += 1;
        }
    }

    fn name(&mut self) -> Result<&'a str, ParseError> {
        self.skip_inline_space();
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| c == '(' || c == ')' || c == ',' || c.is_whitespace())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.malformed());
        }
        self.pos += len;
        Ok(&self.text[start..start + len])
    }
}

pub fn parse_apx(text: &str) -> Result<ArgumentationFramework, ParseError> {
    let mut scanner = Scanner {
        text,
        pos: 0,
        line: 1,
    };
    let mut interner = Interner::new();
    let mut attacks = Vec::new();
    loop {
        scanner.skip_trivia();
        if scanner.at_end() {
            break;
        }
        let line = scanner.line;
        if scanner.rest().starts_with("arg") {
            scanner.pos += 3;
            scanner.expect("(")?;
            let name = scanner.name()?;
            scanner.expect(")")?;
            scanner.expect(".")?;
            interner.declare(name, line)?;
        } else if scanner.rest().starts_with("att") {
            scanner.pos += 3;
            scanner.expect("(")?;
            let a = scanner.name()?;
            scanner.expect(",")?;
            let b = scanner.name()?;
            scanner.expect(")")?;
            scanner.expect(".")?;
            attacks.push((interner.resolve(a, line)?, interner.resolve(b, line)?));
        } else {
            return Err(scanner.malformed());
        }
    }
    Ok(interner.finish(attacks))
}

pub fn parse_tgf(text: &str) -> Result<ArgumentationFramework, ParseError> {
    let mut interner = Interner::new();
    let mut attacks = Vec::new();
    let mut in_edges = false;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed == "#" {
            if in_edges {
                return Err(ParseError::Malformed {
                    line,
                    text: trimmed.to_string(),
                });
            }
            in_edges = true;
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        if in_edges {
            let (Some(a), Some(b)) = (tokens.next(), tokens.next()) else {
                return Err(ParseError::Malformed {
                    line,
                    text: trimmed.to_string(),
                });
            };
            attacks.push((interner.resolve(a, line)?, interner.resolve(b, line)?));
        } else {
            let id = tokens.next().expect("non-empty line has a token");
            interner.declare(id, line)?;
        }
    }
    if !in_edges {
        return Err(ParseError::MissingSeparator);
    }
    Ok(interner.finish(attacks))
}

/// Arguments in index order, then attacks in lexicographic order.
pub fn render_apx(f: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for label in f.labels() {
        writeln!(out, "arg({label}).").unwrap();
    }
    for (a, b) in f.attacks() {
        writeln!(out, "att({},{}).", f.label(a), f.label(b)).unwrap();
    }
    out
}

pub fn render_tgf(f: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for label in f.labels() {
        writeln!(out, "{label}").unwrap();
    }
    out.push_str("#\n");
    for (a, b) in f.attacks() {
        writeln!(out, "{} {}", f.label(a), f.label(b)).unwrap();
    }
    out
}
