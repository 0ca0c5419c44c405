//! Expression trees. Printing emits the canonical plain grammar, and
//! `parse(print(ast))` returns the same tree (spans aside).

use super::Span;
use num::{BigRational, One, Signed};
use std::fmt;

#[derive(Debug, Clone)]
pub struct Ast {
    pub node: Node,
    pub span: Span,
}

impl PartialEq for Ast {
    fn eq(&self, other: &Self) -> bool {
        // Structural equality; spans are bookkeeping.
        self.node == other.node
    }
}

impl Eq for Ast {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    Rational(BigRational),
    ImaginaryUnit,
    Ident(String),
    Frame(String),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, i32),
    Exp(Box<Ast>),
    Differential(Box<Ast>),
    Interior(Box<Ast>, Box<Ast>),
    Lie(Box<Ast>, Box<Ast>),
    Bracket(Box<Ast>, Box<Ast>),
}

impl Ast {
    pub fn new(node: Node, span: Span) -> Self {
        Ast { node, span }
    }
}

fn rational_str(q: &BigRational) -> String {
    if q.denom().is_one() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

// Binding strength for parenthesization: sums < unary minus < products
// < powers < atoms.
fn strength(node: &Node) -> u8 {
    match node {
        Node::Add(..) | Node::Sub(..) => 0,
        Node::Neg(..) => 1,
        Node::Mul(..) => 2,
        Node::Pow(..) => 3,
        _ => 4,
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, child: &Ast, min_strength: u8) -> fmt::Result {
    if strength(&child.node) < min_strength {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

impl fmt::Display for Ast {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.node {
            Node::Rational(q) => {
                if q.is_negative() {
                    // A negative literal re-lexes as unary minus; print it
                    // that way so printing stays inside the grammar.
                    write!(f, "-{}", rational_str(&-q))
                } else {
                    write!(f, "{}", rational_str(q))
                }
            }
            Node::ImaginaryUnit => write!(f, "I"),
            Node::Ident(n) => write!(f, "{n}"),
            Node::Frame(n) => write!(f, "@{n}"),
            Node::Neg(a) => {
                write!(f, "-")?;
                write_child(f, a, 1)
            }
            Node::Add(a, b) => {
                write_child(f, a, 0)?;
                write!(f, " + ")?;
                write_child(f, b, 1)
            }
            Node::Sub(a, b) => {
                write_child(f, a, 0)?;
                write!(f, " - ")?;
                write_child(f, b, 1)
            }
            Node::Mul(a, b) => {
                write_child(f, a, 2)?;
                write!(f, "*")?;
                write_child(f, b, 3)
            }
            Node::Pow(a, k) => {
                write_child(f, a, 4)?;
                write!(f, "^{k}")
            }
            Node::Exp(a) => write!(f, "exp({a})"),
            Node::Differential(a) => write!(f, "d({a})"),
            Node::Interior(x, w) => write!(f, "i_({x}, {w})"),
            Node::Lie(x, w) => write!(f, "L_({x}, {w})"),
            Node::Bracket(x, y) => write!(f, "[{x}, {y}]"),
        }
    }
}
