//! Plain-text element syntax.
//!
//! Generators are written 1-based: `s(1,2;e)`, `t(1;e)`, `sg(1,2;e)` with `e`
//! an exponent of `zeta_m`; variables are `x1`, `y2`, optionally with `^k`;
//! scalar atoms are rationals (`3`, `-1/2`), `z^k` for `zeta_m^k` and `i` for
//! `zeta_4`. A full element is a `+`/`-` separated sum of `*`-separated
//! products, e.g. `x1*x2*sg(1,2;1)*y1 - 1/2*t(1;1)`.

use crate::group::MonomialMatrix;
use crate::scalar::{Ctx, CtxExt, CycloScalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Letter {
    X(usize),
    Y(usize),
    G(MonomialMatrix),
}

#[derive(Clone, Debug)]
pub struct ParsedTerm {
    pub coeff: CycloScalar,
    pub letters: Vec<Letter>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected character `{0}` at byte {1}")]
    Unexpected(char, usize),
    #[error("bad factor `{0}`")]
    BadFactor(String),
    #[error("index out of range in `{0}`")]
    IndexRange(String),
    #[error("scalar `i` needs a context with 4 | m")]
    NeedsI,
    #[error("negative power on a non-group factor")]
    NegativePower,
}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Scanner { src: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        match self.bump() {
            Some(got) if got == c => Ok(()),
            Some(got) => Err(ParseError::Unexpected(got as char, self.pos - 1)),
            None => Err(ParseError::UnexpectedEnd),
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        s.parse()
            .map_err(|_| ParseError::BadFactor(s.to_string()))
    }
}

/// Parses a sum of products into raw terms over the given scalar context.
/// `m_grp` is the root order of group-element letters, `n` the rank.
pub fn parse_element(
    input: &str,
    ctx: &Ctx,
    m_grp: u32,
    n: usize,
) -> Result<Vec<ParsedTerm>, ParseError> {
    let mut sc = Scanner::new(input);
    let mut terms = Vec::new();
    let mut sign_negative = false;
    match sc.peek() {
        Some(b'-') => {
            sc.bump();
            sign_negative = true;
        }
        Some(b'+') => {
            sc.bump();
        }
        _ => {}
    }
    loop {
        let term = parse_product(&mut sc, ctx, m_grp, n)?;
        let coeff = if sign_negative { term.coeff.neg() } else { term.coeff };
        terms.push(ParsedTerm { coeff, letters: term.letters });
        match sc.peek() {
            None => break,
            Some(b'+') => {
                sc.bump();
                sign_negative = false;
            }
            Some(b'-') => {
                sc.bump();
                sign_negative = true;
            }
            Some(c) => return Err(ParseError::Unexpected(c as char, sc.pos)),
        }
    }
    Ok(terms)
}

/// Parses a pure product of group generators into a single group element.
pub fn parse_group_element(
    input: &str,
    m_grp: u32,
    n: usize,
) -> Result<MonomialMatrix, ParseError> {
    // context is irrelevant for pure group words; use the group's own m
    let ctx = crate::scalar::CycloContext::new(m_grp.max(1));
    let terms = parse_element(input, &ctx, m_grp, n)?;
    if terms.len() != 1 {
        return Err(ParseError::BadFactor(input.to_string()));
    }
    let term = &terms[0];
    if !term.coeff.is_one() {
        return Err(ParseError::BadFactor(input.to_string()));
    }
    let mut acc = MonomialMatrix::identity(m_grp, n);
    for l in &term.letters {
        match l {
            Letter::G(g) => acc = acc.compose(g),
            _ => return Err(ParseError::BadFactor(input.to_string())),
        }
    }
    Ok(acc)
}

fn parse_product(
    sc: &mut Scanner,
    ctx: &Ctx,
    m_grp: u32,
    n: usize,
) -> Result<ParsedTerm, ParseError> {
    let mut coeff = ctx.one();
    let mut letters: Vec<Letter> = Vec::new();
    loop {
        parse_factor(sc, ctx, m_grp, n, &mut coeff, &mut letters)?;
        if sc.peek() == Some(b'*') {
            sc.bump();
        } else {
            break;
        }
    }
    Ok(ParsedTerm { coeff, letters })
}

fn parse_factor(
    sc: &mut Scanner,
    ctx: &Ctx,
    m_grp: u32,
    n: usize,
    coeff: &mut CycloScalar,
    letters: &mut Vec<Letter>,
) -> Result<(), ParseError> {
    let c = sc.peek().ok_or(ParseError::UnexpectedEnd)?;
    match c {
        b'0'..=b'9' | b'-' => {
            // rational: int [ / int ]
            let p = sc.integer()?;
            let q = if sc.peek() == Some(b'/') {
                sc.bump();
                sc.integer()?
            } else {
                1
            };
            if q == 0 {
                return Err(ParseError::BadFactor("division by zero".into()));
            }
            *coeff = coeff.mul(&ctx.from_rational(crate::scalar::ratio(p, q)));
            Ok(())
        }
        b'i' => {
            sc.bump();
            if ctx.m() % 4 != 0 {
                return Err(ParseError::NeedsI);
            }
            let mut val = ctx.root_of_order(4, 1);
            if let Some(e) = parse_power(sc)? {
                val = val.pow(e);
            }
            *coeff = coeff.mul(&val);
            Ok(())
        }
        b'z' => {
            sc.bump();
            let e = parse_power(sc)?.unwrap_or(1);
            *coeff = coeff.mul(&ctx.root_of_unity(e));
            Ok(())
        }
        b'x' | b'y' => {
            sc.bump();
            let idx = sc.integer()?;
            if idx < 1 || idx as usize > n {
                return Err(ParseError::IndexRange(format!("{}{}", c as char, idx)));
            }
            let e = parse_power(sc)?.unwrap_or(1);
            if e < 0 {
                return Err(ParseError::NegativePower);
            }
            let letter = if c == b'x' {
                Letter::X(idx as usize - 1)
            } else {
                Letter::Y(idx as usize - 1)
            };
            for _ in 0..e {
                letters.push(letter.clone());
            }
            Ok(())
        }
        b's' | b't' => {
            let g = parse_group_factor(sc, m_grp, n)?;
            let mut g = g;
            if let Some(e) = parse_power(sc)? {
                let base = if e < 0 { g.inverse() } else { g.clone() };
                g = MonomialMatrix::identity(m_grp, n);
                for _ in 0..e.abs() {
                    g = g.compose(&base);
                }
            }
            letters.push(Letter::G(g));
            Ok(())
        }
        other => Err(ParseError::Unexpected(other as char, sc.pos)),
    }
}

fn parse_power(sc: &mut Scanner) -> Result<Option<i64>, ParseError> {
    if sc.peek() == Some(b'^') {
        sc.bump();
        Ok(Some(sc.integer()?))
    } else {
        Ok(None)
    }
}

fn parse_group_factor(
    sc: &mut Scanner,
    m_grp: u32,
    n: usize,
) -> Result<MonomialMatrix, ParseError> {
    // at 's' (maybe "sg") or 't'
    let first = sc.bump().unwrap();
    let is_sigma = first == b's' && sc.peek() == Some(b'g');
    if is_sigma {
        sc.bump();
    }
    sc.expect(b'(')?;
    let i = sc.integer()?;
    if first == b't' {
        sc.expect(b';')?;
        let e = sc.integer()?;
        sc.expect(b')')?;
        if i < 1 || i as usize > n {
            return Err(ParseError::IndexRange(format!("t({i};{e})")));
        }
        return Ok(MonomialMatrix::diag_t(m_grp, n, i as usize - 1, e));
    }
    sc.expect(b',')?;
    let j = sc.integer()?;
    sc.expect(b';')?;
    let e = sc.integer()?;
    sc.expect(b')')?;
    if i < 1 || j < 1 || i as usize > n || j as usize > n || i == j {
        return Err(ParseError::IndexRange(format!("(i,j)=({i},{j})")));
    }
    if is_sigma {
        Ok(MonomialMatrix::mystic_sigma(m_grp, n, i as usize - 1, j as usize - 1, e))
    } else {
        Ok(MonomialMatrix::refl_s(m_grp, n, i as usize - 1, j as usize - 1, e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ratio, CycloContext};

    #[test]
    fn parses_group_words() {
        let g = parse_group_element("s(1,2;0)*t(1;1)", 2, 2).unwrap();
        assert_eq!(g.act_on_x(0), (1, 1));
        assert_eq!(g.act_on_x(1), (0, 0));
        let id = parse_group_element("1", 2, 2).unwrap();
        assert!(id.is_identity());
        assert!(parse_group_element("x1", 2, 2).is_err());
    }

    #[test]
    fn parses_sums_with_scalars() {
        let ctx = CycloContext::new(4);
        let terms = parse_element("x1*x2^2*sg(1,2;1)*y1 - 1/2*i*t(1;1)", &ctx, 4, 2).unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].letters.len(), 5);
        assert_eq!(terms[0].coeff, ctx.one());
        assert_eq!(terms[1].letters.len(), 1);
        assert_eq!(
            terms[1].coeff,
            ctx.root_of_unity(1).scale(&ratio(-1, 2))
        );
    }

    #[test]
    fn rejects_garbage() {
        let ctx = CycloContext::new(2);
        assert!(parse_element("x9", &ctx, 2, 2).is_err());
        assert!(parse_element("s(1,1;0)", &ctx, 2, 2).is_err());
        assert!(parse_element("q", &ctx, 2, 2).is_err());
        assert!(parse_element("i", &ctx, 2, 2).is_err()); // m=2 has no i
    }
}
