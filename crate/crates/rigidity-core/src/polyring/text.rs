//! Canonical polynomial text: parsing of expressions like
//! `y1^8 - 12*y1^4*y4 + 24*y4^2` (sums of monomials, integer or `num/den`
//! coefficients, explicit `*`, `^` for powers, no parentheses).

use num_bigint::BigInt;
use num_traits::One;

use super::coeff::{ParamContext, ParamPoly, Rat};
use super::context::Ctx;
use super::expvec::ExpVec;
use super::poly::Polynomial;

/// A parse failure with a byte offset into the parsed fragment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TextError {
    pub offset: usize,
    pub message: String,
}

impl TextError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        TextError {
            offset,
            message: message.into(),
        }
    }
}

impl std::fmt::Display for TextError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (at offset {})", self.message, self.offset)
    }
}

impl std::error::Error for TextError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Sym(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

#[derive(Debug)]
struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

fn lex(src: &str) -> Result<Lexer, TextError> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        match c {
            '+' => {
                toks.push((Tok::Plus, start));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, start));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, start));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, start));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, start));
                i += 1;
            }
            '0'..='9' => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let n: BigInt = src[i..j].parse().unwrap();
                toks.push((Tok::Int(n), start));
                i = j;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut j = i;
                while j < bytes.len()
                    && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_')
                {
                    j += 1;
                }
                // Bracketed suffixes allow symbol names like `c[y4][1]`.
                while j < bytes.len() && bytes[j] == b'[' {
                    let close = src[j..]
                        .find(']')
                        .ok_or_else(|| TextError::new(j, "unterminated `[` in symbol name"))?;
                    j += close + 1;
                }
                toks.push((Tok::Sym(src[i..j].to_string()), start));
                i = j;
            }
            other => {
                return Err(TextError::new(start, format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(Lexer {
        toks,
        pos: 0,
        end: src.len(),
    })
}

impl Lexer {
    fn peek(&self) -> Option<&(Tok, usize)> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> usize {
        self.peek().map(|(_, o)| *o).unwrap_or(self.end)
    }
}

/// Parses a polynomial expression into raw terms over a symbol table.
/// `resolve` maps a symbol name to its index; unknown names are positioned
/// errors.
pub fn parse_terms(
    src: &str,
    arity: usize,
    resolve: impl Fn(&str) -> Option<usize>,
) -> Result<Vec<(Rat, ExpVec)>, TextError> {
    let mut lx = lex(src)?;
    if lx.peek().is_none() {
        return Err(TextError::new(0, "empty polynomial"));
    }
    let mut terms = Vec::new();
    let mut negative = false;
    // Optional leading sign.
    match lx.peek() {
        Some((Tok::Minus, _)) => {
            negative = true;
            lx.next();
        }
        Some((Tok::Plus, _)) => {
            lx.next();
        }
        _ => {}
    }
    loop {
        let (coeff, exp) = parse_term(&mut lx, arity, &resolve)?;
        terms.push((if negative { -coeff } else { coeff }, exp));
        match lx.next() {
            None => break,
            Some((Tok::Plus, _)) => negative = false,
            Some((Tok::Minus, _)) => negative = true,
            Some((_, off)) => {
                return Err(TextError::new(off, "expected `+`, `-` or end of polynomial"));
            }
        }
    }
    Ok(terms)
}

fn parse_term(
    lx: &mut Lexer,
    arity: usize,
    resolve: &impl Fn(&str) -> Option<usize>,
) -> Result<(Rat, ExpVec), TextError> {
    let mut exps = vec![0u16; arity];
    let coeff = match lx.peek().cloned() {
        Some((Tok::Int(_), _)) => {
            let (tok, _) = lx.next().unwrap();
            let numer = match tok {
                Tok::Int(n) => n,
                _ => unreachable!(),
            };
            let coeff = if matches!(lx.peek(), Some((Tok::Slash, _))) {
                lx.next();
                match lx.next() {
                    Some((Tok::Int(d), off)) => {
                        if d == BigInt::from(0) {
                            return Err(TextError::new(off, "zero denominator"));
                        }
                        Rat::new(numer, d)
                    }
                    other => {
                        let off = other.map(|(_, o)| o).unwrap_or(lx.end);
                        return Err(TextError::new(off, "expected denominator after `/`"));
                    }
                }
            } else {
                Rat::from_integer(numer)
            };
            // A constant term ends here; variables require an explicit `*`.
            if matches!(lx.peek(), Some((Tok::Star, _))) {
                lx.next();
                parse_factors(lx, &mut exps, resolve)?;
            } else if matches!(lx.peek(), Some((Tok::Sym(_), _))) {
                let off = lx.here();
                return Err(TextError::new(
                    off,
                    "expected `*` between coefficient and variable",
                ));
            }
            coeff
        }
        Some((Tok::Sym(_), _)) => {
            parse_factors(lx, &mut exps, resolve)?;
            Rat::one()
        }
        other => {
            let off = other.map(|(_, o)| o).unwrap_or(lx.end);
            return Err(TextError::new(off, "expected a coefficient or a variable"));
        }
    };
    Ok((coeff, ExpVec::new(exps)))
}

fn parse_factors(
    lx: &mut Lexer,
    exps: &mut [u16],
    resolve: &impl Fn(&str) -> Option<usize>,
) -> Result<(), TextError> {
    loop {
        match lx.next() {
            Some((Tok::Sym(name), off)) => {
                let idx = resolve(&name)
                    .ok_or_else(|| TextError::new(off, format!("unknown variable `{name}`")))?;
                let power = if matches!(lx.peek(), Some((Tok::Caret, _))) {
                    lx.next();
                    match lx.next() {
                        Some((Tok::Int(n), off)) => u16::try_from(&n).map_err(|_| {
                            TextError::new(off, format!("exponent {n} out of range"))
                        })?,
                        other => {
                            let off = other.map(|(_, o)| o).unwrap_or(lx.end);
                            return Err(TextError::new(off, "expected integer exponent after `^`"));
                        }
                    }
                } else {
                    1
                };
                exps[idx] = exps[idx]
                    .checked_add(power)
                    .ok_or_else(|| TextError::new(off, "exponent overflow"))?;
            }
            other => {
                let off = other.map(|(_, o)| o).unwrap_or(lx.end);
                return Err(TextError::new(off, "expected a variable"));
            }
        }
        if matches!(lx.peek(), Some((Tok::Star, _))) {
            lx.next();
            continue;
        }
        return Ok(());
    }
}

/// Parses a scalar polynomial in the given variable context.
pub fn parse_polynomial(src: &str, ctx: &Ctx) -> Result<Polynomial<Rat>, TextError> {
    let terms = parse_terms(src, ctx.len(), |name| ctx.index_of(name))?;
    Ok(Polynomial::from_terms(ctx.clone(), terms))
}

/// Parses a polynomial in parameter symbols (used for family values and
/// expected-coefficient fixtures).
pub fn parse_param_poly(
    src: &str,
    pctx: &std::sync::Arc<ParamContext>,
) -> Result<ParamPoly, TextError> {
    let terms = parse_terms(src, pctx.len(), |name| pctx.index_of(name))?;
    let raw = terms
        .into_iter()
        .map(|(c, e)| (c, e.exponents().to_vec()))
        .collect();
    Ok(ParamPoly::from_terms(pctx.clone(), raw))
}
