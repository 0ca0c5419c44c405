//! Tokenizer for the expression grammar.

use super::{ParseError, Span};
use num::{BigInt, BigRational};

#[derive(Debug, Clone, PartialEq)]
pub enum Token {
    /// Integer or integer/integer rational literal.
    Number(BigRational),
    Ident(String),
    /// @name: a coordinate frame field.
    Frame(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

#[derive(Debug, Clone)]
pub struct SpannedToken {
    pub token: Token,
    pub span: Span,
}

pub fn tokenize(input: &str) -> Result<Vec<SpannedToken>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut pos = 0usize;
    let mut line = 1usize;
    let mut col = 1usize;

    let is_ident_start = |c: char| c.is_ascii_alphabetic();
    let is_ident_char = |c: char| c.is_ascii_alphanumeric() || c == '_';

    while pos < chars.len() {
        let c = chars[pos];
        let span = Span { line, col };
        match c {
            '\n' => {
                line += 1;
                col = 1;
                pos += 1;
                continue;
            }
            c if c.is_whitespace() => {}
            '+' => out.push(SpannedToken { token: Token::Plus, span }),
            '-' => out.push(SpannedToken { token: Token::Minus, span }),
            '*' => out.push(SpannedToken { token: Token::Star, span }),
            '^' => out.push(SpannedToken { token: Token::Caret, span }),
            '(' => out.push(SpannedToken { token: Token::LParen, span }),
            ')' => out.push(SpannedToken { token: Token::RParen, span }),
            '[' => out.push(SpannedToken { token: Token::LBracket, span }),
            ']' => out.push(SpannedToken { token: Token::RBracket, span }),
            ',' => out.push(SpannedToken { token: Token::Comma, span }),
            '@' => {
                let start = pos + 1;
                let mut end = start;
                while end < chars.len() && is_ident_char(chars[end]) {
                    end += 1;
                }
                if end == start {
                    return Err(ParseError::new("expected a name after `@`", span));
                }
                let name: String = chars[start..end].iter().collect();
                col += end - pos - 1;
                pos = end - 1;
                out.push(SpannedToken {
                    token: Token::Frame(name),
                    span,
                });
            }
            c if c.is_ascii_digit() => {
                let start = pos;
                let mut end = pos;
                while end < chars.len() && chars[end].is_ascii_digit() {
                    end += 1;
                }
                let numer: String = chars[start..end].iter().collect();
                let mut denom = String::new();
                if end < chars.len() && chars[end] == '/' {
                    let mut d_end = end + 1;
                    while d_end < chars.len() && chars[d_end].is_ascii_digit() {
                        d_end += 1;
                    }
                    if d_end == end + 1 {
                        return Err(ParseError::new("expected digits after `/`", span));
                    }
                    denom = chars[end + 1..d_end].iter().collect();
                    end = d_end;
                }
                let n: BigInt = numer.parse().expect("digits");
                let value = if denom.is_empty() {
                    BigRational::from_integer(n)
                } else {
                    let d: BigInt = denom.parse().expect("digits");
                    if d == BigInt::from(0) {
                        return Err(ParseError::new("zero denominator", span));
                    }
                    BigRational::new(n, d)
                };
                col += end - pos - 1;
                pos = end - 1;
                out.push(SpannedToken {
                    token: Token::Number(value),
                    span,
                });
            }
            c if is_ident_start(c) => {
                let start = pos;
                let mut end = pos;
                while end < chars.len() && is_ident_char(chars[end]) {
                    end += 1;
                }
                let name: String = chars[start..end].iter().collect();
                col += end - pos - 1;
                pos = end - 1;
                out.push(SpannedToken {
                    token: Token::Ident(name),
                    span,
                });
            }
            other => {
                return Err(ParseError::new(format!("unexpected character `{other}`"), span));
            }
        }
        pos += 1;
        col += 1;
    }
    Ok(out)
}
