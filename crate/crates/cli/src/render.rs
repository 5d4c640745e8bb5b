//! Deterministic renderers for closed forms and power expansions.
//!
//! Three formats are supported:
//!
//! * `text` — plain ASCII with explicit multiplications, e.g.
//!   `1*F(1*(n+1)) + 1*F(1*n) - 1`
//! * `latex` — compact math markup, e.g.
//!   `\frac{1}{5}F_{3n}-\frac{3}{5}(-1)^{n}F_{n}`
//! * `json` — one compact document per invocation; closed forms serialize
//!   as `{"atoms":[{"tag":...,"modulus":...,"coeff":...,"sign_exp":...}]}`
//!   and expansions as `{"sequence":...,"exponent":...,"form":...,"terms":[...]}`
//!
//! Rendering is a pure function of the input: equal inputs produce
//! identical bytes.

use fibsum_core::{AtomKind, ClosedForm, ExpansionForm, PowerExpansion, Rational, TermKind};
use num_traits::{One, Signed};
use serde::Serialize;

use crate::args::RenderFormat;

pub fn render_closed_form(cf: &ClosedForm, format: RenderFormat) -> String {
    match format {
        RenderFormat::Text => closed_text(cf),
        RenderFormat::Latex => closed_latex(cf),
        RenderFormat::Json => to_json(&closed_form_doc(cf)),
    }
}

pub fn render_expansion(e: &PowerExpansion, format: RenderFormat) -> String {
    match format {
        RenderFormat::Text => expansion_text(e),
        RenderFormat::Latex => expansion_latex(e),
        RenderFormat::Json => to_json(&expansion_doc(e)),
    }
}

/// Joins `(is_negative, body)` pairs into a signed sum; an empty list is `0`.
fn join(parts: Vec<(bool, String)>, spaced: bool) -> String {
    if parts.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (negative, body)) in parts.iter().enumerate() {
        if i == 0 {
            if *negative {
                out.push('-');
            }
        } else if spaced {
            out.push_str(if *negative { " - " } else { " + " });
        } else {
            out.push(if *negative { '-' } else { '+' });
        }
        out.push_str(body);
    }
    out
}

/// Absolute coefficient in plain notation: `p` or `p/q`.
fn coeff_plain(c: &Rational) -> String {
    c.abs().to_string()
}

/// Absolute coefficient in latex notation; unit coefficients vanish in
/// front of a symbol (`F_{3n}`, not `1F_{3n}`) but stay when the term is a
/// bare number.
fn coeff_latex(c: &Rational, has_symbol: bool) -> String {
    let a = c.abs();
    if a.is_one() && has_symbol {
        return String::new();
    }
    if a.is_integer() {
        a.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
    }
}

/// Latex subscripted sequence symbol: `F_{n}`, `F_{n+1}`, `F_{3n}`,
/// `F_{3(n+1)}`, and likewise for `L`.
fn symbol_latex(letter: char, stride: u64, offset_one: bool) -> String {
    match (stride, offset_one) {
        (1, false) => format!("{letter}_{{n}}"),
        (1, true) => format!("{letter}_{{n+1}}"),
        (t, false) => format!("{letter}_{{{t}n}}"),
        (t, true) => format!("{letter}_{{{t}(n+1)}}"),
    }
}

fn closed_text(cf: &ClosedForm) -> String {
    let parts = cf
        .atoms
        .iter()
        .map(|a| {
            let sig = if a.sigma == 1 { "(-1)^n*" } else { "" };
            let c = coeff_plain(&a.coeff);
            let body = match a.kind {
                AtomKind::FibN1 => format!("{c}*{sig}F({}*(n+1))", a.modulus.unwrap()),
                AtomKind::FibN => format!("{c}*{sig}F({}*n)", a.modulus.unwrap()),
                AtomKind::Linear => format!("{c}*(n+1)"),
                AtomKind::Const if a.sigma == 1 => format!("{c}*(-1)^n"),
                AtomKind::Const => c,
            };
            (a.coeff.is_negative(), body)
        })
        .collect();
    join(parts, true)
}

fn closed_latex(cf: &ClosedForm) -> String {
    let parts = cf
        .atoms
        .iter()
        .map(|a| {
            let symbol = match a.kind {
                AtomKind::FibN1 => symbol_latex('F', a.modulus.unwrap(), true),
                AtomKind::FibN => symbol_latex('F', a.modulus.unwrap(), false),
                AtomKind::Linear => "(n+1)".to_string(),
                AtomKind::Const => String::new(),
            };
            let mut body = coeff_latex(&a.coeff, !symbol.is_empty() || a.sigma == 1);
            if a.sigma == 1 {
                body.push_str("(-1)^{n}");
            }
            body.push_str(&symbol);
            (a.coeff.is_negative(), body)
        })
        .collect();
    join(parts, false)
}

fn expansion_text(e: &PowerExpansion) -> String {
    let parts = e
        .terms
        .iter()
        .map(|t| {
            let sig = if t.sigma == 1 { "(-1)^n*" } else { "" };
            let c = coeff_plain(&t.coeff);
            let body = match t.kind {
                TermKind::F | TermKind::L => {
                    let letter = if t.kind == TermKind::F { 'F' } else { 'L' };
                    let stride = t.stride.unwrap();
                    if t.offset_one {
                        format!("{c}*{sig}{letter}({stride}*(n+1))")
                    } else {
                        format!("{c}*{sig}{letter}({stride}*n)")
                    }
                }
                TermKind::Const if t.sigma == 1 => format!("{c}*(-1)^n"),
                TermKind::Const => c,
            };
            (t.coeff.is_negative(), body)
        })
        .collect();
    join(parts, true)
}

fn expansion_latex(e: &PowerExpansion) -> String {
    let parts = e
        .terms
        .iter()
        .map(|t| {
            let symbol = match t.kind {
                TermKind::F => symbol_latex('F', t.stride.unwrap(), t.offset_one),
                TermKind::L => symbol_latex('L', t.stride.unwrap(), t.offset_one),
                TermKind::Const => String::new(),
            };
            let mut body = coeff_latex(&t.coeff, !symbol.is_empty() || t.sigma == 1);
            if t.sigma == 1 {
                body.push_str("(-1)^{n}");
            }
            body.push_str(&symbol);
            (t.coeff.is_negative(), body)
        })
        .collect();
    join(parts, false)
}

#[derive(Debug, Serialize)]
pub struct ClosedFormDoc {
    pub atoms: Vec<AtomDoc>,
}

#[derive(Debug, Serialize)]
pub struct AtomDoc {
    pub tag: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u64>,
    pub coeff: String,
    pub sign_exp: u8,
}

#[derive(Debug, Serialize)]
pub struct ExpansionDoc {
    pub sequence: String,
    pub exponent: u64,
    pub form: &'static str,
    pub terms: Vec<TermDoc>,
}

#[derive(Debug, Serialize)]
pub struct TermDoc {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stride: Option<u64>,
    pub offset_one: bool,
    pub coeff: String,
    pub sign_exp: u8,
}

pub fn closed_form_doc(cf: &ClosedForm) -> ClosedFormDoc {
    ClosedFormDoc {
        atoms: cf
            .atoms
            .iter()
            .map(|a| AtomDoc {
                tag: match a.kind {
                    AtomKind::FibN1 => "F_n1",
                    AtomKind::FibN => "F_n",
                    AtomKind::Const => "const",
                    AtomKind::Linear => "linear",
                },
                modulus: a.modulus,
                coeff: a.coeff.to_string(),
                sign_exp: a.sigma,
            })
            .collect(),
    }
}

pub fn expansion_doc(e: &PowerExpansion) -> ExpansionDoc {
    ExpansionDoc {
        sequence: e.sequence.letter().to_string(),
        exponent: e.exponent,
        form: match e.form {
            ExpansionForm::Canonical => "canonical",
            ExpansionForm::Literal => "paper",
        },
        terms: e
            .terms
            .iter()
            .map(|t| TermDoc {
                kind: match t.kind {
                    TermKind::F => "F",
                    TermKind::L => "L",
                    TermKind::Const => "const",
                },
                stride: t.stride,
                offset_one: t.offset_one,
                coeff: t.coeff.to_string(),
                sign_exp: t.sigma,
            })
            .collect(),
    }
}

fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string(doc).expect("documents serialize without error")
}
