//! The expression front end: parse, evaluate, render — plain strings in,
//! canonical forms out.
//!
//!     cargo run --example expressions

use polycontact::parse::{eval_str, Workspace};
use polycontact::render::{render_value, Format};

fn main() {
    let ws = Workspace::new();
    let inputs = [
        "th2*th1 + th1*th2",
        "2*I*dth1",
        "i_(D1, alpha)",
        "i_(P0, alpha)",
        "[Q1, Qb1]",
        "[R, Q1]",
        "L_(Q1, alpha)",
        "d(alpha)",
        "exp(2*l)*exp(-2*l)",
        "d(exp(1*l)*alpha)",
        "r^2*alpha",
        "u^-1*u*th1",
        "17/8*x0 + 15/8*x3",
    ];
    for input in inputs {
        match eval_str(&ws, input) {
            Ok(v) => println!("{input:<24} => {v}"),
            Err(e) => println!("{input:<24} => error: {e}"),
        }
    }

    // LaTeX output, template-backed for the named forms.
    let alpha = ws.named("alpha").unwrap();
    println!("\nalpha in LaTeX:\n  {}", render_value(&ws, &alpha, Format::Latex));
    let bracket = eval_str(&ws, "[Q1, Qb1]").unwrap();
    println!("[Q1, Qb1] in LaTeX:\n  {}", render_value(&ws, &bracket, Format::Latex));
}
