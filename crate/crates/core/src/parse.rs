//! Text forms of linear combinations of permutations.
//!
//! ```text
//! sum   := ["-"] term (("+" | "-") term)*  |  "0"
//! term  := [coeff "*"] perm
//! coeff := integer ["/" integer]
//! perm  := digits | "[" integer ("," integer)* "]" | "[]"
//! ```
//!
//! A JSON array of `{"coeff", "basis"}` objects is accepted as well.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::perm::Perm;
use crate::scalar::Rational;

/// Parses either the text grammar or the JSON form.
pub fn parse_lincomb(text: &str) -> Result<LinComb<Perm>> {
    if looks_like_json(text) {
        let v: Value = serde_json::from_str(text)?;
        return LinComb::from_json(&v);
    }
    Parser::new(text).sum()
}

pub fn parse_perm(text: &str) -> Result<Perm> {
    text.parse()
}

fn looks_like_json(text: &str) -> bool {
    let t = text.trim_start();
    let Some(rest) = t.strip_prefix('[') else {
        return false;
    };
    let rest = rest.trim_start();
    rest.starts_with('{') || (rest.starts_with(']') && t.len() > 2 && t.trim_end() != "[]")
}

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            text,
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, at: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            input: self.text.to_string(),
            position: at + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn sum(&mut self) -> Result<LinComb<Perm>> {
        self.skip_ws();
        if self.text.trim() == "0" {
            return Ok(LinComb::zero());
        }
        if self.peek().is_none() {
            return Err(self.err(0, "empty expression"));
        }
        let mut out = LinComb::zero();
        let mut first = true;
        loop {
            self.skip_ws();
            let mut sign = Rational::one();
            match self.peek() {
                Some(b'+') if !first => self.pos += 1,
                Some(b'-') => {
                    sign = -sign;
                    self.pos += 1;
                }
                None => return Err(self.err(self.pos, "expected a term")),
                Some(_) if !first => {
                    return Err(self.err(self.pos, "expected '+' or '-' between terms"))
                }
                _ => {}
            }
            self.skip_ws();
            let (c, p) = self.term()?;
            out.add_term(p, &sign * &c);
            first = false;
            self.skip_ws();
            if self.peek().is_none() {
                return Ok(out);
            }
        }
    }

    fn term(&mut self) -> Result<(Rational, Perm)> {
        let start = self.pos;
        if self.peek() == Some(b'[') {
            return Ok((Rational::one(), self.bracket_perm()?));
        }
        let head = self.digits();
        if head.is_empty() {
            return Err(self.err(self.pos, "expected a coefficient or a permutation"));
        }
        let after_head = self.pos;
        self.skip_ws();
        let coeff_text = match self.peek() {
            Some(b'/') => {
                self.pos += 1;
                self.skip_ws();
                let den = self.digits();
                if den.is_empty() {
                    return Err(self.err(self.pos, "expected a denominator"));
                }
                Some(format!("{head}/{den}"))
            }
            Some(b'*') => Some(head.to_string()),
            _ => None,
        };
        let Some(coeff_text) = coeff_text else {
            self.pos = after_head;
            return Ok((Rational::one(), self.perm_at(start, head)?));
        };
        let coeff: Rational = coeff_text
            .parse()
            .map_err(|_| self.err(start, format!("bad coefficient {coeff_text:?}")))?;
        self.skip_ws();
        if self.peek() != Some(b'*') {
            return Err(self.err(self.pos, "expected '*' after the coefficient"));
        }
        self.pos += 1;
        self.skip_ws();
        if self.peek() == Some(b'[') {
            return Ok((coeff, self.bracket_perm()?));
        }
        let at = self.pos;
        let word = self.digits();
        if word.is_empty() {
            return Err(self.err(self.pos, "expected a permutation"));
        }
        Ok((coeff, self.perm_at(at, word)?))
    }

    fn bracket_perm(&mut self) -> Result<Perm> {
        let start = self.pos;
        let Some(len) = self.text[start..].find(']') else {
            return Err(self.err(self.text.len(), "missing closing ']'"));
        };
        self.pos = start + len + 1;
        self.perm_at(start, &self.text[start..self.pos])
    }

    /// Parses a permutation token that starts at byte `at`, moving error
    /// positions into the coordinates of the whole expression.
    fn perm_at(&self, at: usize, token: &str) -> Result<Perm> {
        token.parse::<Perm>().map_err(|e| match e {
            Error::Parse {
                position, message, ..
            } => self.err(at + position.saturating_sub(1), message),
            other => other,
        })
    }
}
