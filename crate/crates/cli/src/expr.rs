//! Element expressions: JSON triple literals combined with `*`, `inv`,
//! parentheses, and an optional top-level `=` comparison.

use clonal_core::system::ElemCodec;
use clonal_core::thompson::{self, normal_form, triple_from_json, ThompsonElement};

pub enum Outcome<E> {
    Element(ThompsonElement<E>),
    Comparison(bool),
}

pub fn eval<S: ElemCodec>(sys: &S, input: &str) -> Result<Outcome<S::Elem>, String> {
    let tokens = tokenize(input)?;
    let mut parser = Parser { sys, tokens, pos: 0 };
    let left = parser.expression()?;
    if parser.eat(&Token::Equals) {
        let right = parser.expression()?;
        parser.end()?;
        return Ok(Outcome::Comparison(thompson::equals(sys, &left, &right)));
    }
    parser.end()?;
    Ok(Outcome::Element(left))
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Star,
    Equals,
    Inv,
    Open,
    Close,
    Literal(serde_json::Value),
}

fn tokenize(input: &str) -> Result<Vec<Token>, String> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        match bytes[pos] {
            b' ' | b'\t' | b'\n' | b'\r' => pos += 1,
            b'*' => {
                tokens.push(Token::Star);
                pos += 1;
            }
            b'=' => {
                tokens.push(Token::Equals);
                pos += 1;
            }
            b'(' => {
                tokens.push(Token::Open);
                pos += 1;
            }
            b')' => {
                tokens.push(Token::Close);
                pos += 1;
            }
            b'[' | b'{' => {
                let end = scan_json(bytes, pos)?;
                let value: serde_json::Value = serde_json::from_str(&input[pos..end])
                    .map_err(|e| format!("invalid JSON literal at byte {pos}: {e}"))?;
                tokens.push(Token::Literal(value));
                pos = end;
            }
            c if c.is_ascii_alphabetic() => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_alphabetic() {
                    pos += 1;
                }
                match &input[start..pos] {
                    "inv" => tokens.push(Token::Inv),
                    word => return Err(format!("unknown word {word:?} at byte {start}")),
                }
            }
            c => return Err(format!("unexpected character {:?} at byte {pos}", c as char)),
        }
    }
    Ok(tokens)
}

/// Finds the end of a balanced JSON array/object starting at `start`,
/// honoring strings and escapes.
fn scan_json(bytes: &[u8], start: usize) -> Result<usize, String> {
    let mut depth = 0usize;
    let mut in_string = false;
    let mut escaped = false;
    for (i, &b) in bytes.iter().enumerate().skip(start) {
        if in_string {
            if escaped {
                escaped = false;
            } else if b == b'\\' {
                escaped = true;
            } else if b == b'"' {
                in_string = false;
            }
            continue;
        }
        match b {
            b'"' => in_string = true,
            b'[' | b'{' => depth += 1,
            b']' | b'}' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| format!("unbalanced bracket at byte {i}"))?;
                if depth == 0 {
                    return Ok(i + 1);
                }
            }
            _ => {}
        }
    }
    Err(format!("unterminated JSON literal starting at byte {start}"))
}

struct Parser<'a, S: ElemCodec> {
    sys: &'a S,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a, S: ElemCodec> Parser<'a, S> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, token: &Token) -> bool {
        if self.peek() == Some(token) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn end(&self) -> Result<(), String> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(format!("unexpected trailing {t:?}")),
        }
    }

    fn expression(&mut self) -> Result<ThompsonElement<S::Elem>, String> {
        let mut acc = self.factor()?;
        while self.eat(&Token::Star) {
            let rhs = self.factor()?;
            acc = thompson::multiply(self.sys, &acc, &rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<ThompsonElement<S::Elem>, String> {
        if self.eat(&Token::Inv) {
            let inner = self.factor()?;
            return Ok(thompson::invert(self.sys, &inner));
        }
        if self.eat(&Token::Open) {
            let inner = self.expression()?;
            if !self.eat(&Token::Close) {
                return Err("expected ')'".into());
            }
            return Ok(inner);
        }
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Literal(value)) => {
                self.pos += 1;
                let triple = triple_from_json(self.sys, &value).map_err(|e| e.to_string())?;
                Ok(normal_form(self.sys, triple))
            }
            other => Err(format!("expected an element literal, found {other:?}")),
        }
    }
}
