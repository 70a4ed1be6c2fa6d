//! Line-oriented parser for the `.pres` presentation format.
//!
//! ```text
//! presentation "<name>"
//! var <id> deg <weight>        # one per line, declaration order
//! order lex <id> > <id> > ...  # optional, defaults to declaration order
//! rel <label> deg <weight> = <polynomial>
//! ```
//!
//! Comments start with `#`; blank lines are ignored; CR is tolerated.

use crate::polyring::text::parse_terms;
use crate::polyring::{Polynomial, VariableContext};

use super::{PresentationDefect, Relation, RingPresentation};

/// A positioned parse failure (1-based line and column).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_presentation(src: &str) -> Result<RingPresentation, ParseError> {
    let mut name: Option<String> = None;
    let mut vars: Vec<(String, u32)> = Vec::new();
    let mut order_names: Option<Vec<String>> = None;
    let mut raw_rels: Vec<(String, u64, String, usize, usize)> = Vec::new(); // label, weight, poly text, line, col of poly

    for (idx, raw_line) in src.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim_end_matches('\r');
        let content = match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        };
        if content.trim().is_empty() {
            continue;
        }
        let mut words = Tokens::new(content, line_no);
        let keyword = words.word("a declaration keyword")?;
        match keyword.text.as_str() {
            "presentation" => {
                if name.is_some() {
                    return Err(ParseError::new(line_no, keyword.col, "duplicate `presentation` line"));
                }
                name = Some(words.quoted_name()?);
                words.end()?;
            }
            "var" => {
                let var = words.word("a variable name")?;
                if vars.iter().any(|(n, _)| *n == var.text) {
                    return Err(ParseError::new(line_no, var.col, format!("duplicate variable `{}`", var.text)));
                }
                words.keyword("deg")?;
                let weight = words.number("a positive weight")?;
                if weight.value == 0 {
                    return Err(ParseError::new(line_no, weight.col, "weight must be >= 1"));
                }
                words.end()?;
                vars.push((var.text, weight.value as u32));
            }
            "order" => {
                if order_names.is_some() {
                    return Err(ParseError::new(line_no, keyword.col, "duplicate `order` line"));
                }
                words.keyword("lex")?;
                let mut names = vec![words.word("a variable name")?.text];
                while !words.is_empty() {
                    words.keyword(">")?;
                    names.push(words.word("a variable name")?.text);
                }
                order_names = Some(names);
            }
            "rel" => {
                let label = words.word("a relation label")?;
                if raw_rels.iter().any(|(l, ..)| *l == label.text) {
                    return Err(ParseError::new(line_no, label.col, format!("duplicate relation label `{}`", label.text)));
                }
                words.keyword("deg")?;
                let weight = words.number("the relation weight")?;
                let eq_col = words.keyword("=")?;
                let poly_start = words.rest_offset();
                let poly_text = content[poly_start..].to_string();
                if poly_text.trim().is_empty() {
                    return Err(ParseError::new(line_no, eq_col + 1, "missing polynomial after `=`"));
                }
                raw_rels.push((label.text, weight.value, poly_text, line_no, poly_start));
            }
            other => {
                return Err(ParseError::new(
                    line_no,
                    keyword.col,
                    format!("unknown declaration `{other}`"),
                ));
            }
        }
    }

    let name = name.ok_or_else(|| ParseError::new(1, 1, "missing `presentation` line"))?;
    if vars.is_empty() {
        return Err(ParseError::new(1, 1, "no variables declared"));
    }

    let precedence = match order_names {
        None => (0..vars.len()).collect(),
        Some(names) => {
            let mut prec = Vec::with_capacity(names.len());
            for n in &names {
                match vars.iter().position(|(v, _)| v == n) {
                    Some(i) => prec.push(i),
                    None => {
                        return Err(ParseError::new(1, 1, format!("order names undeclared variable `{n}`")));
                    }
                }
            }
            prec
        }
    };

    let ctx = VariableContext::with_precedence(vars, precedence)
        .map_err(|e| ParseError::new(1, 1, e.to_string()))?;

    let mut relations = Vec::with_capacity(raw_rels.len());
    for (label, weight, text, line_no, col_base) in raw_rels {
        let terms = parse_terms(&text, ctx.len(), |n| ctx.index_of(n))
            .map_err(|e| ParseError::new(line_no, col_base + e.offset + 1, e.message))?;
        let poly = Polynomial::from_terms(ctx.clone(), terms);
        if !poly.weighted_degree().is_homogeneous_of(weight) {
            return Err(ParseError::new(
                line_no,
                col_base + 1,
                format!("relation `{label}` is not homogeneous of weight {weight}"),
            ));
        }
        relations.push(Relation { label, weight, poly });
    }

    RingPresentation::assemble(name, ctx, relations).map_err(|e| match e {
        PresentationDefect::NotHomogeneous { label, weight } => ParseError::new(
            1,
            1,
            format!("relation `{label}` is not homogeneous of weight {weight}"),
        ),
        other => ParseError::new(1, 1, other.to_string()),
    })
}

struct Word {
    text: String,
    col: usize, // 1-based
}

struct Num {
    value: u64,
    col: usize,
}

/// Whitespace-separated scanner over one line, tracking 1-based columns.
struct Tokens<'a> {
    content: &'a str,
    line: usize,
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn new(content: &'a str, line: usize) -> Self {
        Tokens { content, line, pos: 0 }
    }

    fn skip_ws(&mut self) {
        let bytes = self.content.as_bytes();
        while self.pos < bytes.len() && (bytes[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn is_empty(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.content.len()
    }

    fn word(&mut self, what: &str) -> Result<Word, ParseError> {
        self.skip_ws();
        if self.pos >= self.content.len() {
            return Err(ParseError::new(self.line, self.pos + 1, format!("expected {what}")));
        }
        let start = self.pos;
        let bytes = self.content.as_bytes();
        while self.pos < bytes.len() && !(bytes[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
        Ok(Word {
            text: self.content[start..self.pos].to_string(),
            col: start + 1,
        })
    }

    fn keyword(&mut self, expected: &str) -> Result<usize, ParseError> {
        let w = self.word(&format!("`{expected}`"))?;
        if w.text != expected {
            return Err(ParseError::new(
                self.line,
                w.col,
                format!("expected `{expected}`, found `{}`", w.text),
            ));
        }
        Ok(w.col)
    }

    fn number(&mut self, what: &str) -> Result<Num, ParseError> {
        let w = self.word(what)?;
        let value = w
            .text
            .parse::<u64>()
            .map_err(|_| ParseError::new(self.line, w.col, format!("expected {what}, found `{}`", w.text)))?;
        Ok(Num { value, col: w.col })
    }

    fn quoted_name(&mut self) -> Result<String, ParseError> {
        let w = self.word("a quoted name")?;
        let inner = w
            .text
            .strip_prefix('"')
            .and_then(|s| s.strip_suffix('"'))
            .filter(|s| !s.is_empty())
            .ok_or_else(|| ParseError::new(self.line, w.col, "expected a quoted name like \"F4_C3\""))?;
        Ok(inner.to_string())
    }

    fn end(&mut self) -> Result<(), ParseError> {
        if !self.is_empty() {
            return Err(ParseError::new(self.line, self.pos + 1, "unexpected trailing input"));
        }
        Ok(())
    }

    fn rest_offset(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{builtin, builtin_source};

    #[test]
    fn presets_parse_to_builtins() {
        let src = builtin_source("F4_C3").unwrap();
        let parsed = parse_presentation(src).unwrap();
        assert_eq!(&parsed, builtin("F4_C3").unwrap());
    }

    #[test]
    fn minimal_free_ring() {
        let pres = parse_presentation("presentation \"FREE\"\nvar y1 deg 1\n").unwrap();
        assert_eq!(pres.relations().len(), 0);
        assert_eq!(pres.kaehler_generator(), 0);
    }

    #[test]
    fn homogeneity_violation_is_an_error() {
        let src = "presentation \"BAD\"\nvar y1 deg 1\nvar y4 deg 4\nrel g8 deg 8 = y1 + y4\n";
        let err = parse_presentation(src).unwrap_err();
        assert_eq!(err.line, 4);
        assert!(err.message.contains("homogeneous"));
    }

    #[test]
    fn unknown_variable_is_positioned() {
        let src = "presentation \"BAD\"\nvar y1 deg 1\nrel g9 deg 9 = y1^9 + y9\n";
        let err = parse_presentation(src).unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("y9"));
        // column points inside the polynomial text
        assert!(err.col > "rel g9 deg 9 = ".len());
    }

    #[test]
    fn duplicate_declarations_rejected() {
        let dup_var = "presentation \"X\"\nvar y1 deg 1\nvar y1 deg 2\n";
        assert!(parse_presentation(dup_var).unwrap_err().message.contains("duplicate variable"));
        let dup_rel =
            "presentation \"X\"\nvar y1 deg 1\nrel g2 deg 2 = y1^2\nrel g2 deg 2 = 2*y1^2\n";
        assert!(parse_presentation(dup_rel).unwrap_err().message.contains("duplicate relation"));
    }

    #[test]
    fn order_line_sets_precedence() {
        let src = "presentation \"X\"\nvar y1 deg 1\nvar y4 deg 4\norder lex y4 > y1\n";
        let pres = parse_presentation(src).unwrap();
        assert_eq!(pres.ctx().precedence(), &[1, 0]);
    }

    #[test]
    fn crlf_is_tolerated() {
        let src = "presentation \"X\"\r\nvar y1 deg 1\r\n";
        assert!(parse_presentation(src).is_ok());
    }
}
