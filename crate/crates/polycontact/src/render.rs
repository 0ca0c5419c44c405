//! Renderers. The plain format is the `Display` of each value and is
//! parseable back by the expression grammar; the LaTeX format writes the
//! conventional symbols (theta, theta-bar, sigma^mu, partials), with
//! index-notation templates for the four named forms.

use crate::algebra::{GeneratorContext, Monomial, SuperPoly};
use crate::calculus::VectorValuedForm;
use crate::parse::{Value, Workspace};
use crate::rational::GaussianRational;
use num::{One, Signed};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Plain,
    Latex,
}

/// Render any evaluated value.
pub fn render_value(ws: &Workspace, value: &Value, format: Format) -> String {
    match format {
        Format::Plain => value.to_string(),
        Format::Latex => match value {
            Value::Scalar(p) => latex_scalar(p),
            Value::Tangent(t) => latex_tangent_with_templates(ws, t),
        },
    }
}

/// The four distinguished forms print as their index-notation displays
/// when the value matches exactly; everything else expands componentwise.
fn latex_tangent_with_templates(ws: &Workspace, t: &VectorValuedForm) -> String {
    let base = ws.base();
    if t == base.alpha() {
        return ALPHA_TEMPLATE.to_string();
    }
    if t == &crate::calculus::exterior_derivative(base.alpha()) {
        return D_ALPHA_TEMPLATE.to_string();
    }
    if t.chart().same_chart(ws.cylinder().chart()) {
        if t == ws.cylinder().omega() {
            return OMEGA_TEMPLATE.to_string();
        }
        if t == ws.cylinder().frame().alpha() {
            return ALPHA_TEMPLATE.to_string();
        }
    }
    if t.chart().same_chart(ws.cone().chart()) {
        if t == ws.cone().varpi() {
            return VARPI_TEMPLATE.to_string();
        }
        if t == ws.cone().frame().alpha() {
            return ALPHA_TEMPLATE.to_string();
        }
    }
    latex_tangent(t)
}

pub const ALPHA_TEMPLATE: &str = r"\alpha = \left( dx^{\mu} + i\left( \theta^{a}(\sigma^{\mu})_{a}{}^{\dot{b}}\, d\bar{\theta}_{\dot{b}} + d\theta^{a}(\sigma^{\mu})_{a}{}^{\dot{b}}\, \bar{\theta}_{\dot{b}} \right) \right)\frac{\partial}{\partial x^{\mu}}";

pub const D_ALPHA_TEMPLATE: &str = r"d\alpha = 2i\left( d\theta^{a}(\sigma^{\mu})_{a}{}^{\dot{b}}\, d\bar{\theta}_{\dot{b}} \right)\frac{\partial}{\partial x^{\mu}}";

pub const OMEGA_TEMPLATE: &str = r"\omega = e^{\lambda}\left( d\lambda\, dx^{\mu} + i\, d\lambda \left( \theta^{a}(\sigma^{\mu})_{a}{}^{\dot{b}}\, d\bar{\theta}_{\dot{b}} + d\theta^{a}(\sigma^{\mu})_{a}{}^{\dot{b}}\, \bar{\theta}_{\dot{b}} \right) + 2i\, d\theta^{a}(\sigma^{\mu})_{a}{}^{\dot{b}}\, d\bar{\theta}_{\dot{b}} \right)\frac{\partial}{\partial x^{\mu}}";

pub const VARPI_TEMPLATE: &str = r"\varpi = d\left( r^{2} \alpha \right) = \left( 2r\, dr\, \alpha^{\mu} + r^{2}\, (d\alpha)^{\mu} \right)\frac{\partial}{\partial x^{\mu}}";

fn latex_generator_name(name: &str) -> String {
    // Differentials recurse on the underlying coordinate.
    if let Some(rest) = name.strip_prefix('d') {
        if !rest.is_empty() && matches_coordinate(rest) {
            return format!("d{}", latex_generator_name(rest));
        }
    }
    if let Some(idx) = name.strip_prefix("thb") {
        return format!(r"\bar{{\theta}}_{{\dot{{{idx}}}}}");
    }
    if let Some(idx) = name.strip_prefix("th") {
        return format!(r"\theta^{{{idx}}}");
    }
    if let Some(idx) = name.strip_prefix("epsb") {
        return format!(r"\bar{{\epsilon}}_{{\dot{{{idx}}}}}");
    }
    if let Some(idx) = name.strip_prefix("eps") {
        return format!(r"\epsilon^{{{idx}}}");
    }
    if let Some(idx) = name.strip_prefix('x') {
        if idx.chars().all(|c| c.is_ascii_digit()) {
            return format!("x^{{{idx}}}");
        }
    }
    if let Some(idx) = name.strip_prefix('a') {
        if idx.chars().all(|c| c.is_ascii_digit()) && !idx.is_empty() {
            return format!("a^{{{idx}}}");
        }
    }
    match name {
        "l" => r"\lambda".to_string(),
        other => other.to_string(),
    }
}

fn matches_coordinate(name: &str) -> bool {
    name.starts_with("th")
        || name.starts_with('x')
        || name == "l"
        || name == "r"
        || name.starts_with("eps")
}

fn latex_coefficient(c: &GaussianRational) -> (bool, Option<String>) {
    let rational = |q: &num::BigRational| {
        if q.denom().is_one() {
            format!("{}", q.numer())
        } else {
            format!(r"\tfrac{{{}}}{{{}}}", q.numer(), q.denom())
        }
    };
    if c.is_real() {
        let neg = c.re.is_negative();
        let mag = c.re.abs();
        if mag.is_one() {
            (neg, None)
        } else {
            (neg, Some(rational(&mag)))
        }
    } else if c.is_imaginary() {
        let neg = c.im.is_negative();
        let mag = c.im.abs();
        if mag.is_one() {
            (neg, Some("i".to_string()))
        } else {
            (neg, Some(format!("{}i", rational(&mag))))
        }
    } else {
        let re = rational(&c.re);
        let im = rational(&c.im.abs());
        let sign = if c.im.is_negative() { "-" } else { "+" };
        let im = if c.im.abs().is_one() {
            "i".to_string()
        } else {
            format!("{im}i")
        };
        (false, Some(format!(r"\left({re} {sign} {im}\right)")))
    }
}

fn latex_monomial(ctx: &GeneratorContext, m: &Monomial) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (g, e) in &m.even {
        let name = latex_generator_name(ctx.name(*g));
        if *e == 1 {
            parts.push(name);
        } else if name.len() == 1 {
            parts.push(format!("{name}^{{{e}}}"));
        } else {
            parts.push(format!(r"\left({name}\right)^{{{e}}}"));
        }
    }
    for atom in &m.exp {
        let base = latex_generator_name(ctx.name(atom.base));
        let (neg, mag) = latex_coefficient(&atom.multiplier);
        let mut arg = String::new();
        if neg {
            arg.push('-');
        }
        if let Some(s) = mag {
            arg.push_str(&s);
        }
        arg.push_str(&base);
        parts.push(format!("e^{{{arg}}}"));
    }
    for g in &m.odd {
        parts.push(latex_generator_name(ctx.name(*g)));
    }
    parts.join(r"\,")
}

pub fn latex_scalar(p: &SuperPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let ctx = p.context();
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().enumerate() {
        let (neg, coeff) = latex_coefficient(c);
        let mono = latex_monomial(ctx, m);
        let body = match (coeff, mono.is_empty()) {
            (Some(cs), true) => cs,
            (Some(cs), false) => format!(r"{cs}\,{mono}"),
            (None, true) => "1".to_string(),
            (None, false) => mono,
        };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&body);
    }
    out
}

pub fn latex_tangent(t: &VectorValuedForm) -> String {
    if t.is_zero() {
        return "0".to_string();
    }
    let chart = t.chart();
    let mut pieces = Vec::new();
    for (slot, comp) in t.components() {
        let leg = format!(
            r"\frac{{\partial}}{{\partial {}}}",
            latex_generator_name(chart.context().name(*slot))
        );
        let body = if comp.num_terms() == 1 {
            format!(r"{}\,{leg}", latex_scalar(comp))
        } else {
            format!(r"\left( {} \right){leg}", latex_scalar(comp))
        };
        pieces.push(body);
    }
    pieces.join(" + ")
}
