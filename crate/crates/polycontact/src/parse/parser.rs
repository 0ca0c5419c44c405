//! Recursive-descent parser over the token stream.

use super::ast::{Ast, Node};
use super::lexer::{tokenize, SpannedToken, Token};
use super::{ParseError, Span};
use num::ToPrimitive;

pub fn parse(input: &str) -> Result<Ast, ParseError> {
    let tokens = tokenize(input)?;
    let mut p = Parser { tokens, pos: 0 };
    let ast = p.expr()?;
    if p.pos < p.tokens.len() {
        return Err(ParseError::new(
            format!("unexpected trailing token {:?}", p.tokens[p.pos].token),
            p.tokens[p.pos].span,
        ));
    }
    Ok(ast)
}

struct Parser {
    tokens: Vec<SpannedToken>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|t| &t.token)
    }

    fn span(&self) -> Span {
        self.tokens
            .get(self.pos)
            .or_else(|| self.tokens.last())
            .map(|t| t.span)
            .unwrap_or(Span { line: 1, col: 1 })
    }

    fn bump(&mut self) -> Option<SpannedToken> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Token, what: &str) -> Result<Span, ParseError> {
        let span = self.span();
        match self.bump() {
            Some(t) if &t.token == want => Ok(t.span),
            Some(t) => Err(ParseError::new(
                format!("expected {what}, found {:?}", t.token),
                t.span,
            )),
            None => Err(ParseError::new(format!("expected {what}, found end of input"), span)),
        }
    }

    // expr := neg (('+'|'-') neg)*
    fn expr(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.neg()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    let span = self.bump().unwrap().span;
                    let rhs = self.neg()?;
                    lhs = Ast::new(Node::Add(Box::new(lhs), Box::new(rhs)), span);
                }
                Some(Token::Minus) => {
                    let span = self.bump().unwrap().span;
                    let rhs = self.neg()?;
                    lhs = Ast::new(Node::Sub(Box::new(lhs), Box::new(rhs)), span);
                }
                _ => return Ok(lhs),
            }
        }
    }

    // neg := '-' neg | term
    fn neg(&mut self) -> Result<Ast, ParseError> {
        if matches!(self.peek(), Some(Token::Minus)) {
            let span = self.bump().unwrap().span;
            let inner = self.neg()?;
            return Ok(Ast::new(Node::Neg(Box::new(inner)), span));
        }
        self.term()
    }

    // term := power ('*' power)*
    fn term(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.power()?;
        while matches!(self.peek(), Some(Token::Star)) {
            let span = self.bump().unwrap().span;
            let rhs = self.power()?;
            lhs = Ast::new(Node::Mul(Box::new(lhs), Box::new(rhs)), span);
        }
        Ok(lhs)
    }

    // power := atom ('^' ['-'] integer)?
    fn power(&mut self) -> Result<Ast, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            let caret = self.bump().unwrap().span;
            let mut negative = false;
            if matches!(self.peek(), Some(Token::Minus)) {
                self.bump();
                negative = true;
            }
            let span = self.span();
            match self.bump() {
                Some(SpannedToken {
                    token: Token::Number(q),
                    ..
                }) if q.is_integer() => {
                    let k = q
                        .to_integer()
                        .to_i32()
                        .ok_or_else(|| ParseError::new("exponent out of range", span))?;
                    let k = if negative { -k } else { k };
                    return Ok(Ast::new(Node::Pow(Box::new(base), k), caret));
                }
                _ => return Err(ParseError::new("expected an integer exponent after `^`", span)),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ast, ParseError> {
        let span = self.span();
        match self.bump() {
            None => Err(ParseError::new("unexpected end of input", span)),
            Some(t) => match t.token {
                Token::Number(q) => Ok(Ast::new(Node::Rational(q), t.span)),
                Token::Frame(name) => Ok(Ast::new(Node::Frame(name), t.span)),
                Token::LParen => {
                    let inner = self.expr()?;
                    self.expect(&Token::RParen, "`)`")?;
                    Ok(inner)
                }
                Token::LBracket => {
                    let x = self.expr()?;
                    self.expect(&Token::Comma, "`,`")?;
                    let y = self.expr()?;
                    self.expect(&Token::RBracket, "`]`")?;
                    Ok(Ast::new(Node::Bracket(Box::new(x), Box::new(y)), t.span))
                }
                Token::Ident(name) => {
                    let calls_with_paren = matches!(self.peek(), Some(Token::LParen));
                    match (name.as_str(), calls_with_paren) {
                        ("I", _) => Ok(Ast::new(Node::ImaginaryUnit, t.span)),
                        ("d", true) => {
                            self.bump();
                            let inner = self.expr()?;
                            self.expect(&Token::RParen, "`)`")?;
                            Ok(Ast::new(Node::Differential(Box::new(inner)), t.span))
                        }
                        ("exp", true) => {
                            self.bump();
                            let inner = self.expr()?;
                            self.expect(&Token::RParen, "`)`")?;
                            Ok(Ast::new(Node::Exp(Box::new(inner)), t.span))
                        }
                        ("i_", true) => {
                            self.bump();
                            let x = self.expr()?;
                            self.expect(&Token::Comma, "`,`")?;
                            let w = self.expr()?;
                            self.expect(&Token::RParen, "`)`")?;
                            Ok(Ast::new(Node::Interior(Box::new(x), Box::new(w)), t.span))
                        }
                        ("L_", true) => {
                            self.bump();
                            let x = self.expr()?;
                            self.expect(&Token::Comma, "`,`")?;
                            let w = self.expr()?;
                            self.expect(&Token::RParen, "`)`")?;
                            Ok(Ast::new(Node::Lie(Box::new(x), Box::new(w)), t.span))
                        }
                        (op @ ("d" | "exp" | "i_" | "L_"), false) => Err(ParseError::new(
                            format!("operator `{op}` needs parenthesized arguments"),
                            t.span,
                        )),
                        _ => Ok(Ast::new(Node::Ident(name), t.span)),
                    }
                }
                other => Err(ParseError::new(
                    format!("unexpected token {other:?}"),
                    t.span,
                )),
            },
        }
    }
}
