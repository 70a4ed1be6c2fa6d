//! Text form for coefficient families: one `symbol = <polynomial in k>`
//! assignment per line, e.g. `c[y4][2] = k^4`. The line `k = k` is implied
//! when absent. Comments start with `#`.

use crate::polyring::text::parse_terms;
use crate::polyring::ParamPoly;

use super::{CoefficientFamily, EndomorphismAnsatz};

/// A positioned family-file parse failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for FamilyParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for FamilyParseError {}

/// Parses user-supplied family text against an ansatz. Every unknown
/// coefficient must be assigned a polynomial in `k`.
pub fn parse_family(
    src: &str,
    ansatz: &EndomorphismAnsatz,
) -> Result<CoefficientFamily, FamilyParseError> {
    let pctx = ansatz.param_ctx().clone();
    let mut values: Vec<Option<ParamPoly>> = vec![None; ansatz.symbols().len()];

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
        let (lhs, rhs) = content.split_once('=').ok_or_else(|| FamilyParseError {
            line: line_no,
            message: "expected `symbol = polynomial`".to_string(),
        })?;
        let name = lhs.trim();
        let sym = ansatz.symbol_index(name).ok_or_else(|| FamilyParseError {
            line: line_no,
            message: format!("unknown symbol `{name}`"),
        })?;
        if values[sym].is_some() {
            return Err(FamilyParseError {
                line: line_no,
                message: format!("symbol `{name}` assigned twice"),
            });
        }
        let terms = parse_terms(rhs, pctx.len(), |n| pctx.index_of(n)).map_err(|e| {
            FamilyParseError {
                line: line_no,
                message: e.message,
            }
        })?;
        let value = ParamPoly::from_terms(
            pctx.clone(),
            terms.into_iter().map(|(c, e)| (c, e.exponents().to_vec())).collect(),
        );
        // Values may involve k only.
        if value
            .terms()
            .iter()
            .any(|(_, e)| e.exponents().iter().skip(1).any(|&x| x > 0))
        {
            return Err(FamilyParseError {
                line: line_no,
                message: format!("value for `{name}` must be a polynomial in k alone"),
            });
        }
        values[sym] = Some(value);
    }

    if values[0].is_none() {
        values[0] = Some(ParamPoly::symbol(pctx.clone(), 0));
    }
    let mut resolved = Vec::with_capacity(values.len());
    for (sym, value) in values.into_iter().enumerate() {
        match value {
            Some(v) => resolved.push(v),
            None => {
                return Err(FamilyParseError {
                    line: 0,
                    message: format!(
                        "no value assigned for symbol `{}`",
                        ansatz.symbols()[sym].name
                    ),
                });
            }
        }
    }
    Ok(CoefficientFamily {
        param_ctx: pctx,
        values: resolved,
    })
}

/// Canonical text form (one assignment per symbol, `k` first).
pub fn format_family(family: &CoefficientFamily, ansatz: &EndomorphismAnsatz) -> String {
    let mut out = String::new();
    for (sym, value) in ansatz.symbols().iter().zip(family.values()) {
        out.push_str(&format!("{} = {}\n", sym.name, value));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endomorph::{adams_family, build_ansatz, tau_family};
    use crate::presentations::builtin;

    #[test]
    fn family_text_round_trip() {
        let ansatz = build_ansatz(builtin("E6_A6").unwrap());
        for family in [adams_family(&ansatz), tau_family(&ansatz).unwrap()] {
            let text = format_family(&family, &ansatz);
            let reparsed = parse_family(&text, &ansatz).unwrap();
            assert_eq!(reparsed, family);
        }
    }

    #[test]
    fn k_line_is_optional() {
        let ansatz = build_ansatz(builtin("F4_C3").unwrap());
        let family = parse_family("c[y4][1] = 0\nc[y4][2] = k^4\n", &ansatz).unwrap();
        assert_eq!(family, adams_family(&ansatz));
    }

    #[test]
    fn missing_symbol_is_an_error() {
        let ansatz = build_ansatz(builtin("F4_C3").unwrap());
        let err = parse_family("c[y4][1] = 0\n", &ansatz).unwrap_err();
        assert!(err.message.contains("c[y4][2]"));
    }

    #[test]
    fn values_must_be_polynomials_in_k() {
        let ansatz = build_ansatz(builtin("F4_C3").unwrap());
        let err = parse_family("c[y4][1] = c[y4][2]\nc[y4][2] = k^4\n", &ansatz).unwrap_err();
        assert!(err.message.contains("polynomial in k"));
    }
}
