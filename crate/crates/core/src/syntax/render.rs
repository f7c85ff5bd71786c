//! Canonical rendering of terms and formulas back into the surface syntax.
//!
//! Rendering uses only the core connectives, so `parse(render(f)) == f`
//! structurally. Numerals print as successor runs up to a fixed budget and
//! as `Z[n]` beyond it; both spellings parse back to the same canonical
//! term.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::{Arg, Formula, Term};

/// Numerals whose sign count exceeds this render as `Z[n]`.
pub const NUMERAL_RENDER_BUDGET: u64 = 64;

pub fn render_term(t: &Term) -> String {
    let mut out = String::new();
    push_term(t, &mut out);
    out
}

pub fn render_formula(f: &Formula) -> String {
    let mut out = String::new();
    push_formula(f, &mut out);
    out
}

fn push_term(t: &Term, out: &mut String) {
    match t {
        Term::Zero => out.push('0'),
        Term::Succ(inner) => {
            out.push('f');
            push_term(inner, out);
        }
        Term::Var(v) => out.push_str(&v.name()),
        Term::Numeral(n) => push_numeral(n, out),
    }
}

fn push_numeral(n: &BigUint, out: &mut String) {
    match n.to_u64() {
        Some(count) if count + 1 <= NUMERAL_RENDER_BUDGET => {
            for _ in 0..count {
                out.push('f');
            }
            out.push('0');
        }
        _ => {
            out.push_str("Z[");
            out.push_str(&n.to_string());
            out.push(']');
        }
    }
}

fn push_formula(f: &Formula, out: &mut String) {
    match f {
        Formula::Apply(head, arg) => {
            out.push_str(&head.name());
            out.push('(');
            match arg {
                Arg::Term(t) => push_term(t, out),
                Arg::Var(v) => out.push_str(&v.name()),
            }
            out.push(')');
        }
        Formula::Not(inner) => {
            out.push('~');
            push_formula(inner, out);
        }
        Formula::Or(a, b) => {
            out.push('(');
            push_formula(a, out);
            out.push_str(" | ");
            push_formula(b, out);
            out.push(')');
        }
        Formula::ForAll(v, body) => {
            out.push_str("all ");
            out.push_str(&v.name());
            out.push(':');
            push_formula(body, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{parse_formula, parse_term, mk_implication, VarSym};
    use super::*;

    fn atom() -> Formula {
        parse_formula("X1(x3)").unwrap()
    }

    #[test]
    fn renders_core_shapes() {
        assert_eq!(render_formula(&Formula::or(Formula::not(atom()), atom())), "(~X1(x3) | X1(x3))");
        assert_eq!(render_term(&Term::numeral(3u32)), "fff0");
        assert_eq!(render_formula(&Formula::forall(VarSym::new(3, 1), atom())), "all x3:X1(x3)");
        assert_eq!(render_formula(&parse_formula("v2.4(v1.3)").unwrap()), "v2.4(v1.3)");
    }

    #[test]
    fn implication_renders_in_core_form() {
        let f = mk_implication(atom(), Formula::not(atom()));
        assert_eq!(render_formula(&f), "(~X1(x3) | ~X1(x3))");
        assert_eq!(parse_formula(&render_formula(&f)).unwrap(), f);
    }

    #[test]
    fn large_numerals_render_compactly() {
        let big = Term::numeral(BigUint::from(1u8) << 23);
        assert_eq!(render_term(&big), "Z[8388608]");
        assert_eq!(parse_term("Z[8388608]").unwrap(), big);
        // Below the budget the successor run is written out.
        assert_eq!(render_term(&Term::numeral(5u32)), "fffff0");
    }

    #[test]
    fn round_trip_examples() {
        for text in [
            "X1(x3)",
            "~~X2(ff0)",
            "(X1(x3) | all x1:X3(fx1))",
            "all X1:(~X1(0) | X1(f0))",
            "v1.3(v2.2)",
        ] {
            let f = parse_formula(text).unwrap();
            assert_eq!(parse_formula(&render_formula(&f)).unwrap(), f, "round trip for {text}");
        }
    }
}
