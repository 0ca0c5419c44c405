//! Evaluation of expression trees against the built-in charts.
//!
//! The active chart is inferred from the identifiers: `l`, `dl`, `omega`
//! select the cylinder, `r`, `dr`, `t`, `varpi` select the cone, anything
//! else the plain superspace. Mixing the two extensions in one expression
//! is an error.

use super::ast::{Ast, Node};
use super::parser::parse;
use super::{ParseError, Span};
use crate::algebra::SuperPoly;
use crate::calculus::{
    exterior_derivative, graded_commutator, interior_product, interior_scalar, lie_derivative,
    lie_scalar, Chart, VectorField, VectorValuedForm,
};
use crate::rational::GaussianRational;
use crate::susy::SusyFrame;
use crate::symplectization::{Cone, Symplectization};
use num::BigRational;
use std::fmt;

/// The three built-in charts, constructed once and shared by the CLI.
pub struct Workspace {
    base: SusyFrame,
    cylinder: Symplectization,
    cone: Cone,
}

impl Default for Workspace {
    fn default() -> Self {
        Self::new()
    }
}

impl Workspace {
    pub fn new() -> Self {
        Workspace {
            base: SusyFrame::new(),
            cylinder: Symplectization::new(),
            cone: Cone::new(),
        }
    }

    pub fn base(&self) -> &SusyFrame {
        &self.base
    }

    pub fn cylinder(&self) -> &Symplectization {
        &self.cylinder
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    /// Resolve a named catalogue object on its natural chart.
    pub fn named(&self, name: &str) -> Option<Value> {
        match name {
            "omega" => Some(Value::Tangent(self.cylinder.omega().clone())),
            "varpi" => Some(Value::Tangent(self.cone.varpi().clone())),
            _ => named_on_frame(&self.base, name),
        }
    }

    /// The shipped display corpus: every closed-form expression the
    /// catalogue checks against, as (label, value) pairs. Each value's
    /// canonical plain rendering parses and evaluates back to the value.
    pub fn display_corpus(&self) -> Vec<(String, Value)> {
        use crate::calculus::{graded_commutator, interior_product};

        let mut corpus: Vec<(String, Value)> = Vec::new();
        for name in [
            "alpha", "dalpha", "Q1", "Q2", "Qb1", "Qb2", "D1", "D2", "Db1", "Db2", "P0", "P1",
            "P2", "P3", "R", "omega", "varpi",
        ] {
            corpus.push((name.to_string(), self.named(name).expect("catalogue name")));
        }

        let frame = &self.base;
        for a in 0..2 {
            for b in 0..2 {
                let bracket =
                    graded_commutator(frame.supercharge(a), frame.supercharge_bar(b)).unwrap();
                corpus.push((
                    format!("[Q{}, Qb{}]", a + 1, b + 1),
                    Value::Tangent(VectorValuedForm::from_field(&bracket)),
                ));
            }
        }
        let d_alpha = exterior_derivative(frame.alpha());
        for (name, field) in [
            ("D1", frame.covariant(0)),
            ("D2", frame.covariant(1)),
            ("Db1", frame.covariant_bar(0)),
            ("Db2", frame.covariant_bar(1)),
        ] {
            let c = interior_product(field, &d_alpha).unwrap();
            corpus.push((format!("i_({name}, dalpha)"), Value::Tangent(c)));
        }

        // The symmetry images of the coordinates and differentials.
        let susy = crate::susy::susy_map(frame);
        let ch = frame.chart();
        for (mu, xid) in frame.x_ids().iter().enumerate() {
            corpus.push((
                format!("susy image of x{mu}"),
                Value::Scalar(susy.forward_image(*xid).clone()),
            ));
            let dx = ch.gen(ch.fiber_of(*xid).unwrap());
            corpus.push((
                format!("susy image of dx{mu}"),
                Value::Scalar(susy.pullback_scalar(&dx).unwrap()),
            ));
        }
        corpus.push((
            "susy image of th1".to_string(),
            Value::Scalar(susy.forward_image(frame.th_ids()[0]).clone()),
        ));

        // Decomposition remainders.
        for (label, field) in [
            ("Q1", frame.supercharge(0)),
            ("Qb1", frame.supercharge_bar(0)),
            ("R", frame.r_symmetry()),
        ] {
            let (x_d, x_p) = frame.decompose(field).unwrap();
            corpus.push((
                format!("covariant part of {label}"),
                Value::Tangent(VectorValuedForm::from_field(&x_d)),
            ));
            corpus.push((
                format!("translation part of {label}"),
                Value::Tangent(VectorValuedForm::from_field(&x_p)),
            ));
        }

        // Dilated cone form: the exact t^2 identity's right-hand side.
        let t_sq = self.cone.chart().gen_named("t").unwrap().pow(2).unwrap();
        corpus.push((
            "t^2 varpi".to_string(),
            Value::Tangent(self.cone.varpi().scale_form(&t_sq)),
        ));
        corpus
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum ChartKind {
    Base,
    Cylinder,
    Cone,
}

fn named_on_frame(frame: &SusyFrame, name: &str) -> Option<Value> {
    let field = |f: &VectorField| Some(Value::Tangent(VectorValuedForm::from_field(f)));
    match name {
        "alpha" => Some(Value::Tangent(frame.alpha().clone())),
        "dalpha" => Some(Value::Tangent(exterior_derivative(frame.alpha()))),
        "Q1" => field(frame.supercharge(0)),
        "Q2" => field(frame.supercharge(1)),
        "Qb1" => field(frame.supercharge_bar(0)),
        "Qb2" => field(frame.supercharge_bar(1)),
        "D1" => field(frame.covariant(0)),
        "D2" => field(frame.covariant(1)),
        "Db1" => field(frame.covariant_bar(0)),
        "Db2" => field(frame.covariant_bar(1)),
        "P0" => field(frame.translation(0)),
        "P1" => field(frame.translation(1)),
        "P2" => field(frame.translation(2)),
        "P3" => field(frame.translation(3)),
        "R" => field(frame.r_symmetry()),
        _ => None,
    }
}

/// An evaluated expression: a scalar pseudoform or a tangent-valued object
/// (vector field or vector-valued form; they share a representation).
#[derive(Clone, PartialEq)]
pub enum Value {
    Scalar(SuperPoly),
    Tangent(VectorValuedForm),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(p) => write!(f, "{p}"),
            Value::Tangent(t) => write!(f, "{t}"),
        }
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Value {
    pub fn is_zero(&self) -> bool {
        match self {
            Value::Scalar(p) => p.is_zero(),
            Value::Tangent(t) => t.is_zero(),
        }
    }
}

pub fn eval_str(ws: &Workspace, input: &str) -> Result<Value, ParseError> {
    let ast = parse(input)?;
    let kind = infer_chart(&ast)?;
    let evaluator = Evaluator {
        ws,
        kind,
        chart: match kind {
            ChartKind::Base => ws.base.chart().clone(),
            ChartKind::Cylinder => ws.cylinder.chart().clone(),
            ChartKind::Cone => ws.cone.chart().clone(),
        },
    };
    evaluator.eval(&ast)
}

fn infer_chart(ast: &Ast) -> Result<ChartKind, ParseError> {
    let mut cylinder: Option<Span> = None;
    let mut cone: Option<Span> = None;
    collect_triggers(ast, &mut cylinder, &mut cone);
    match (cylinder, cone) {
        (Some(_), Some(span)) => Err(ParseError::new(
            "expression mixes the cylinder (l/omega) and cone (r/t/varpi) charts",
            span,
        )),
        (Some(_), None) => Ok(ChartKind::Cylinder),
        (None, Some(_)) => Ok(ChartKind::Cone),
        (None, None) => Ok(ChartKind::Base),
    }
}

fn collect_triggers(ast: &Ast, cylinder: &mut Option<Span>, cone: &mut Option<Span>) {
    let mut note = |name: &str, span: Span| match name {
        "l" | "dl" | "omega" => {
            cylinder.get_or_insert(span);
        }
        "r" | "dr" | "t" | "varpi" => {
            cone.get_or_insert(span);
        }
        _ => {}
    };
    match &ast.node {
        Node::Ident(n) | Node::Frame(n) => note(n, ast.span),
        Node::Neg(a) | Node::Pow(a, _) | Node::Exp(a) | Node::Differential(a) => {
            collect_triggers(a, cylinder, cone)
        }
        Node::Add(a, b)
        | Node::Sub(a, b)
        | Node::Mul(a, b)
        | Node::Interior(a, b)
        | Node::Lie(a, b)
        | Node::Bracket(a, b) => {
            collect_triggers(a, cylinder, cone);
            collect_triggers(b, cylinder, cone);
        }
        Node::Rational(_) | Node::ImaginaryUnit => {}
    }
}

struct Evaluator<'a> {
    ws: &'a Workspace,
    kind: ChartKind,
    chart: Chart,
}

impl Evaluator<'_> {
    fn frame(&self) -> &SusyFrame {
        match self.kind {
            ChartKind::Base => &self.ws.base,
            ChartKind::Cylinder => self.ws.cylinder.frame(),
            ChartKind::Cone => self.ws.cone.frame(),
        }
    }

    fn fail<T>(&self, span: Span, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::new(message, span))
    }

    fn eval(&self, ast: &Ast) -> Result<Value, ParseError> {
        let span = ast.span;
        match &ast.node {
            Node::Rational(q) => Ok(Value::Scalar(self.chart.scalar(GaussianRational::new(
                q.clone(),
                BigRational::from_integer(0.into()),
            )))),
            Node::ImaginaryUnit => Ok(Value::Scalar(self.chart.scalar(GaussianRational::i()))),
            Node::Ident(name) => self.resolve(name, span),
            Node::Frame(name) => {
                let id = self.chart.lookup(name).ok_or_else(|| {
                    ParseError::new(format!("unknown coordinate `@{name}`"), span)
                })?;
                let field = VectorField::frame(&self.chart, id)
                    .map_err(|e| ParseError::new(e.to_string(), span))?;
                Ok(Value::Tangent(VectorValuedForm::from_field(&field)))
            }
            Node::Neg(a) => match self.eval(a)? {
                Value::Scalar(p) => Ok(Value::Scalar(-&p)),
                Value::Tangent(t) => Ok(Value::Tangent(t.scale_form(
                    &self.chart.scalar(GaussianRational::from_int(-1)),
                ))),
            },
            Node::Add(a, b) | Node::Sub(a, b) => {
                let subtract = matches!(ast.node, Node::Sub(..));
                let lhs = self.eval(a)?;
                let rhs = self.eval(b)?;
                match (lhs, rhs) {
                    (Value::Scalar(x), Value::Scalar(y)) => {
                        Ok(Value::Scalar(if subtract { &x - &y } else { &x + &y }))
                    }
                    (Value::Tangent(x), Value::Tangent(y)) => {
                        let r = if subtract { x.sub(&y) } else { x.add(&y) };
                        r.map(Value::Tangent)
                            .map_err(|e| ParseError::new(e.to_string(), span))
                    }
                    _ => self.fail(span, "cannot add a scalar and a tangent-valued expression"),
                }
            }
            Node::Mul(a, b) => {
                let lhs = self.eval(a)?;
                let rhs = self.eval(b)?;
                match (lhs, rhs) {
                    (Value::Scalar(x), Value::Scalar(y)) => x
                        .try_mul(&y)
                        .map(Value::Scalar)
                        .map_err(|e| ParseError::new(e.to_string(), span)),
                    (Value::Scalar(x), Value::Tangent(t)) => Ok(Value::Tangent(t.scale_form(&x))),
                    (Value::Tangent(t), Value::Scalar(x)) => {
                        // Right module action: components multiply from the
                        // right.
                        let comps = t
                            .components()
                            .iter()
                            .map(|(slot, c)| (*slot, c * &x))
                            .collect();
                        VectorValuedForm::from_components(&self.chart, comps)
                            .map(Value::Tangent)
                            .map_err(|e| ParseError::new(e.to_string(), span))
                    }
                    _ => self.fail(span, "cannot multiply two tangent-valued expressions"),
                }
            }
            Node::Pow(a, k) => match self.eval(a)? {
                Value::Scalar(p) => p
                    .pow(*k)
                    .map(Value::Scalar)
                    .map_err(|e| ParseError::new(e.to_string(), span)),
                Value::Tangent(_) => self.fail(span, "powers apply to scalars only"),
            },
            Node::Exp(a) => {
                let inner = self.eval(a)?;
                let Value::Scalar(p) = inner else {
                    return self.fail(span, "exp takes a scalar argument");
                };
                self.build_exp(&p, span)
            }
            Node::Differential(a) => match self.eval(a)? {
                Value::Scalar(p) => Ok(Value::Scalar(self.chart.d_scalar(&p))),
                Value::Tangent(t) => Ok(Value::Tangent(exterior_derivative(&t))),
            },
            Node::Interior(xe, we) => {
                let field = self.tangent_field(xe)?;
                match self.eval(we)? {
                    Value::Scalar(p) => interior_scalar(&field, &p)
                        .map(Value::Scalar)
                        .map_err(|e| ParseError::new(e.to_string(), span)),
                    Value::Tangent(t) => interior_product(&field, &t)
                        .map(Value::Tangent)
                        .map_err(|e| ParseError::new(e.to_string(), span)),
                }
            }
            Node::Lie(xe, we) => {
                let field = self.tangent_field(xe)?;
                match self.eval(we)? {
                    Value::Scalar(p) => lie_scalar(&field, &p)
                        .map(Value::Scalar)
                        .map_err(|e| ParseError::new(e.to_string(), span)),
                    Value::Tangent(t) => lie_derivative(&field, &t)
                        .map(Value::Tangent)
                        .map_err(|e| ParseError::new(e.to_string(), span)),
                }
            }
            Node::Bracket(xe, ye) => {
                let x = self.tangent_field(xe)?;
                let y = self.tangent_field(ye)?;
                graded_commutator(&x, &y)
                    .map(|f| Value::Tangent(VectorValuedForm::from_field(&f)))
                    .map_err(|e| ParseError::new(e.to_string(), span))
            }
        }
    }

    fn tangent_field(&self, ast: &Ast) -> Result<VectorField, ParseError> {
        match self.eval(ast)? {
            Value::Tangent(t) => Ok(t.as_field()),
            Value::Scalar(_) => Err(ParseError::new(
                "expected a vector field, found a scalar",
                ast.span,
            )),
        }
    }

    fn resolve(&self, name: &str, span: Span) -> Result<Value, ParseError> {
        match (self.kind, name) {
            (ChartKind::Cylinder, "omega") => {
                return Ok(Value::Tangent(self.ws.cylinder.omega().clone()))
            }
            (ChartKind::Cone, "varpi") => {
                return Ok(Value::Tangent(self.ws.cone.varpi().clone()))
            }
            _ => {}
        }
        if let Some(v) = named_on_frame(self.frame(), name) {
            return Ok(v);
        }
        if let Some(id) = self.chart.lookup(name) {
            return Ok(Value::Scalar(self.chart.gen(id)));
        }
        self.fail(span, format!("unknown identifier `{name}`"))
    }

    fn build_exp(&self, p: &SuperPoly, span: Span) -> Result<Value, ParseError> {
        let mut terms = p.terms();
        let only = terms.next();
        let (mono, coeff) = match (only, terms.next()) {
            (Some(t), None) => t,
            _ => {
                return self.fail(span, "exp argument must be c * (one even coordinate)");
            }
        };
        if !mono.odd.is_empty() || !mono.exp.is_empty() || mono.even.len() != 1 || mono.even[0].1 != 1
        {
            return self.fail(span, "exp argument must be c * (one even coordinate)");
        }
        SuperPoly::exp(self.chart.context(), mono.even[0].0, coeff.clone())
            .map(Value::Scalar)
            .map_err(|e| ParseError::new(e.to_string(), span))
    }
}
