//! Line-oriented poset text format.
//!
//! ```text
//! # a diamond
//! elements: a b c d
//! relations: a<b a<c b<d c<d
//! ```
//!
//! `elements:` and `relations:` lines may repeat; their contents accumulate.
//! A relation token may chain, e.g. `a<b<c`. Anything after `#` is ignored.

use std::collections::HashMap;

use super::Poset;
use crate::error::PosetError;

impl Poset {
    pub fn parse(input: &str) -> Result<Poset, PosetError> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        // (line, from, to)
        let mut relations: Vec<(usize, String, String)> = Vec::new();

        for (lineno, raw) in input.lines().enumerate() {
            let line_no = lineno + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| PosetError::Parse {
                line: line_no,
                message,
            };
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| parse_err(format!("expected `elements:` or `relations:`, found `{line}`")))?;
            match key.trim() {
                "elements" => {
                    for token in rest.split_whitespace() {
                        if token.contains('<') {
                            return Err(parse_err(format!("label `{token}` contains `<`")));
                        }
                        if index.insert(token.to_owned(), labels.len()).is_some() {
                            return Err(PosetError::DuplicateLabel(token.to_owned()));
                        }
                        labels.push(token.to_owned());
                    }
                }
                "relations" => {
                    for token in rest.split_whitespace() {
                        let parts: Vec<&str> = token.split('<').collect();
                        if parts.len() < 2 || parts.iter().any(|p| p.is_empty()) {
                            return Err(parse_err(format!("malformed relation `{token}`")));
                        }
                        for w in parts.windows(2) {
                            relations.push((line_no, w[0].to_owned(), w[1].to_owned()));
                        }
                    }
                }
                other => return Err(parse_err(format!("unknown section `{other}`"))),
            }
        }

        let mut edges = Vec::with_capacity(relations.len());
        for (line, a, b) in relations {
            let find = |l: &str| {
                index.get(l).copied().ok_or_else(|| PosetError::Parse {
                    line,
                    message: format!("unknown label `{l}`"),
                })
            };
            edges.push((find(&a)?, find(&b)?));
        }
        Poset::from_edges(labels, &edges)
    }

    /// Serializes with one relation token per cover, in index order.
    pub fn to_text(&self) -> String {
        let mut out = String::from("elements:");
        for l in self.labels() {
            out.push(' ');
            out.push_str(l);
        }
        out.push_str("\nrelations:");
        for p in self.covers() {
            out.push(' ');
            out.push_str(self.label(p.x));
            out.push('<');
            out.push_str(self.label(p.y));
        }
        out.push('\n');
        out
    }
}
