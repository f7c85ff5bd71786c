//! Object-level syntax of system P.
//!
//! Formulas are built from the ¬/∨/∀ core plus elementary applications
//! `v(a)` of a typed variable to an argument one type level below it. The
//! connectives → and ∧ exist only as input abbreviations and constructor
//! helpers; every stored formula is in core form, so axiom matching and
//! equality never have to look through abbreviations.
//!
//! Terms are kept canonical: a successor run over `0` is always stored as a
//! [`Term::Numeral`], so structural equality coincides with equality of sign
//! sequences. `Succ` survives only over variable bases, which have no
//! alternative spelling.

mod parse;
mod render;

pub use parse::{parse_formula, parse_term, parse_object, ParseError};
pub use render::NUMERAL_RENDER_BUDGET;

use num_bigint::BigUint;
use num_traits::{One, Zero as _};
use thiserror::Error;

/// A typed variable: the `index`-th variable of simple-type `level`.
///
/// `x1, x2, x3` name the first three type-1 variables and `X1, X2, X3` the
/// first three type-2 variables; everything else renders as `v{index}.{level}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarSym {
    index: u32,
    level: u32,
}

impl VarSym {
    /// Both fields are 1-based; panics if either is zero.
    pub fn new(index: u32, level: u32) -> VarSym {
        assert!(index >= 1 && level >= 1, "variable index and type level are 1-based");
        VarSym { index, level }
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn name(&self) -> String {
        match (self.index, self.level) {
            (k @ 1..=3, 1) => format!("x{k}"),
            (k @ 1..=3, 2) => format!("X{k}"),
            (k, n) => format!("v{k}.{n}"),
        }
    }
}

/// A type-1 term: `0`, successor applications, type-1 variables, and compact
/// numerals `f^n 0` with an arbitrary-precision repeat count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Zero,
    Succ(Box<Term>),
    Var(VarSym),
    Numeral(BigUint),
}

impl Term {
    /// The canonical numeral: `numeral(0)` is `Zero`.
    pub fn numeral(n: impl Into<BigUint>) -> Term {
        let n = n.into();
        if n.is_zero() {
            Term::Zero
        } else {
            Term::Numeral(n)
        }
    }

    /// A type-1 variable term. Panics on a higher-type variable.
    pub fn var(v: VarSym) -> Term {
        assert_eq!(v.level(), 1, "only type-1 variables occur in terms");
        Term::Var(v)
    }

    /// Successor, collapsing runs over `0` into numerals.
    pub fn succ(t: Term) -> Term {
        match t {
            Term::Zero => Term::Numeral(BigUint::one()),
            Term::Numeral(n) => Term::Numeral(n + 1u32),
            other => Term::Succ(Box::new(other)),
        }
    }

    /// Number of primitive signs: `Numeral(n)` contributes n+1.
    pub fn size(&self) -> BigUint {
        match self {
            Term::Zero => BigUint::one(),
            Term::Succ(t) => t.size() + 1u32,
            Term::Var(_) => BigUint::one(),
            Term::Numeral(n) => n + 1u32,
        }
    }

    pub fn is_closed(&self) -> bool {
        match self {
            Term::Zero | Term::Numeral(_) => true,
            Term::Var(_) => false,
            Term::Succ(t) => t.is_closed(),
        }
    }

    fn collect_vars(&self, out: &mut Vec<VarSym>) {
        match self {
            Term::Zero | Term::Numeral(_) => {}
            Term::Var(v) => push_new(out, *v),
            Term::Succ(t) => t.collect_vars(out),
        }
    }
}

/// The argument of an elementary application: a type-1 term, or a bare
/// variable of type 2 or higher.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Arg {
    Term(Term),
    Var(VarSym),
}

impl Arg {
    /// Wraps a variable, folding type-1 variables into the term form.
    pub fn from_var(v: VarSym) -> Arg {
        if v.level() == 1 {
            Arg::Term(Term::Var(v))
        } else {
            Arg::Var(v)
        }
    }

    /// The simple-type level of the argument.
    pub fn level(&self) -> u32 {
        match self {
            Arg::Term(_) => 1,
            Arg::Var(v) => v.level(),
        }
    }

    pub fn size(&self) -> BigUint {
        match self {
            Arg::Term(t) => t.size(),
            Arg::Var(_) => BigUint::one(),
        }
    }
}

/// Mark classification by the number of distinct free variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MarkKind {
    /// No free variables.
    Sentence,
    /// Exactly one free variable.
    Classmark,
    /// Two or more free variables.
    Relationmark,
}

impl std::fmt::Display for MarkKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MarkKind::Sentence => "sentence",
            MarkKind::Classmark => "classmark",
            MarkKind::Relationmark => "relationmark",
        })
    }
}

/// Violation of the simple-type discipline in an elementary application.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("type error: {msg}")]
pub struct TypeError {
    pub msg: String,
}

/// Errors from [`Formula::substitute`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubstError {
    #[error("substituted term `{term}` is open (free variables: {vars})")]
    OpenTerm { term: String, vars: String },
    #[error("cannot substitute a term for the free higher-type variable {var}")]
    TermForHigherType { var: String },
}

/// A formula of P over the ¬/∨/∀ core.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    /// `v(a)` with `v` one type level above `a`.
    Apply(VarSym, Arg),
    Not(Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    ForAll(VarSym, Box<Formula>),
}

impl Formula {
    /// Elementary application, checking the type discipline.
    pub fn apply(head: VarSym, arg: Arg) -> Result<Formula, TypeError> {
        let arg = match arg {
            Arg::Var(v) if v.level() == 1 => Arg::Term(Term::Var(v)),
            other => other,
        };
        if head.level() != arg.level() + 1 {
            return Err(TypeError {
                msg: format!(
                    "{} has type level {}, argument has level {} (need head level = argument level + 1)",
                    head.name(),
                    head.level(),
                    arg.level()
                ),
            });
        }
        Ok(Formula::Apply(head, arg))
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn forall(v: VarSym, f: Formula) -> Formula {
        Formula::ForAll(v, Box::new(f))
    }

    /// Number of primitive signs in the fully expanded sign sequence.
    ///
    /// `Not` wraps its subformula as `¬( _ )` (3 extra signs), a disjunction
    /// is `( _ ) ∨ ( _ )` (4 extra), a generalization `v ∀ ( _ )` (4 extra)
    /// and an application `v ( _ )` (3 extra).
    pub fn size(&self) -> BigUint {
        match self {
            Formula::Apply(_, arg) => arg.size() + 3u32,
            Formula::Not(f) => f.size() + 3u32,
            Formula::Or(a, b) => a.size() + b.size() + 4u32,
            Formula::ForAll(_, f) => f.size() + 4u32,
        }
    }

    /// Free variables in first-occurrence order, each listed once.
    pub fn free_variables(&self) -> Vec<VarSym> {
        let mut out = Vec::new();
        let mut bound = Vec::new();
        self.collect_free(&mut bound, &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<VarSym>, out: &mut Vec<VarSym>) {
        match self {
            Formula::Apply(head, arg) => {
                if !bound.contains(head) {
                    push_new(out, *head);
                }
                match arg {
                    Arg::Term(t) => {
                        let mut term_vars = Vec::new();
                        t.collect_vars(&mut term_vars);
                        for v in term_vars {
                            if !bound.contains(&v) {
                                push_new(out, v);
                            }
                        }
                    }
                    Arg::Var(v) => {
                        if !bound.contains(v) {
                            push_new(out, *v);
                        }
                    }
                }
            }
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::Or(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::ForAll(v, f) => {
                bound.push(*v);
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Sentence, classmark or relationmark, by free-variable count.
    pub fn classify(&self) -> MarkKind {
        match self.free_variables().len() {
            0 => MarkKind::Sentence,
            1 => MarkKind::Classmark,
            _ => MarkKind::Relationmark,
        }
    }

    /// Replaces every free occurrence of `v` by the closed term `t`.
    ///
    /// Since only closed terms are accepted, variable capture is impossible
    /// by construction. Substituting a term for a free occurrence of a
    /// higher-type variable has no well-typed result and is an error; if `v`
    /// does not occur free the formula comes back unchanged whatever its
    /// level.
    pub fn substitute(&self, v: VarSym, t: &Term) -> Result<Formula, SubstError> {
        if !t.is_closed() {
            let vars = t
                .free_vars_for_error()
                .iter()
                .map(|v| v.name())
                .collect::<Vec<_>>()
                .join(", ");
            return Err(SubstError::OpenTerm { term: render::render_term(t), vars });
        }
        self.subst_inner(v, t)
    }

    fn subst_inner(&self, v: VarSym, t: &Term) -> Result<Formula, SubstError> {
        match self {
            Formula::Apply(head, arg) => {
                if *head == v {
                    return Err(SubstError::TermForHigherType { var: v.name() });
                }
                let arg = match arg {
                    Arg::Term(t0) => Arg::Term(substitute_term(t0, v, t)),
                    Arg::Var(w) => {
                        if *w == v {
                            return Err(SubstError::TermForHigherType { var: v.name() });
                        }
                        Arg::Var(*w)
                    }
                };
                Ok(Formula::Apply(*head, arg))
            }
            Formula::Not(f) => Ok(Formula::not(f.subst_inner(v, t)?)),
            Formula::Or(a, b) => Ok(Formula::or(a.subst_inner(v, t)?, b.subst_inner(v, t)?)),
            Formula::ForAll(w, f) => {
                if *w == v {
                    Ok(self.clone())
                } else {
                    Ok(Formula::forall(*w, f.subst_inner(v, t)?))
                }
            }
        }
    }
}

impl Term {
    fn free_vars_for_error(&self) -> Vec<VarSym> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }
}

/// Replaces every occurrence of `v` in a term by `repl`.
pub fn substitute_term(t: &Term, v: VarSym, repl: &Term) -> Term {
    match t {
        Term::Zero | Term::Numeral(_) => t.clone(),
        Term::Var(w) => {
            if *w == v {
                repl.clone()
            } else {
                t.clone()
            }
        }
        Term::Succ(inner) => Term::succ(substitute_term(inner, v, repl)),
    }
}

/// `a → b`, expanded to `¬a ∨ b`.
pub fn mk_implication(a: Formula, b: Formula) -> Formula {
    Formula::or(Formula::not(a), b)
}

/// `a ∧ b`, expanded to `¬(¬a ∨ ¬b)`.
pub fn mk_conjunction(a: Formula, b: Formula) -> Formula {
    Formula::not(Formula::or(Formula::not(a), Formula::not(b)))
}

/// Inverse of [`mk_implication`]: `Some((antecedent, consequent))` iff the
/// formula has the shape `¬a ∨ b`.
pub fn match_implication_form(f: &Formula) -> Option<(&Formula, &Formula)> {
    match f {
        Formula::Or(l, r) => match l.as_ref() {
            Formula::Not(a) => Some((a.as_ref(), r.as_ref())),
            _ => None,
        },
        _ => None,
    }
}

fn push_new(out: &mut Vec<VarSym>, v: VarSym) {
    if !out.contains(&v) {
        out.push(v);
    }
}

impl std::fmt::Display for VarSym {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.name())
    }
}

impl std::fmt::Display for Term {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&render::render_term(self))
    }
}

impl std::fmt::Display for Formula {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&render::render_formula(self))
    }
}

impl std::fmt::Display for Arg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Arg::Term(t) => t.fmt(f),
            Arg::Var(v) => v.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(k: u32) -> VarSym {
        VarSym::new(k, 1)
    }

    fn cap_x(k: u32) -> VarSym {
        VarSym::new(k, 2)
    }

    fn atom() -> Formula {
        // X1(x3)
        Formula::apply(cap_x(1), Arg::Term(Term::var(x(3)))).unwrap()
    }

    #[test]
    fn numeral_canonical_form() {
        assert_eq!(Term::numeral(0u32), Term::Zero);
        assert_eq!(Term::succ(Term::Zero), Term::Numeral(BigUint::one()));
        assert_eq!(Term::succ(Term::succ(Term::Zero)), Term::numeral(2u32));
        // Successor over a variable stays a Succ chain.
        let fx = Term::succ(Term::var(x(1)));
        assert_eq!(fx, Term::Succ(Box::new(Term::Var(x(1)))));
    }

    #[test]
    fn apply_type_discipline() {
        assert!(Formula::apply(cap_x(1), Arg::Term(Term::Zero)).is_ok());
        assert!(Formula::apply(x(1), Arg::Term(Term::Zero)).is_err());
        assert!(Formula::apply(VarSym::new(1, 3), Arg::Var(cap_x(2))).is_ok());
        assert!(Formula::apply(VarSym::new(1, 3), Arg::Term(Term::Zero)).is_err());
        // A type-1 variable passed as Arg::Var folds into the term form.
        let f = Formula::apply(cap_x(1), Arg::Var(x(3))).unwrap();
        assert_eq!(f, atom());
    }

    #[test]
    fn sizes() {
        assert_eq!(Term::Zero.size(), BigUint::from(1u32));
        assert_eq!(Term::numeral(BigUint::one() << 23).size(), BigUint::from(8_388_609u32));
        assert_eq!(atom().size(), BigUint::from(4u32));
        // (~A | ~A) has size 2*|A| + 10.
        let f = Formula::or(Formula::not(atom()), Formula::not(atom()));
        assert_eq!(f.size(), BigUint::from(18u32));
        // all x3:(...) adds 4 signs.
        assert_eq!(Formula::forall(x(3), atom()).size(), BigUint::from(8u32));
    }

    #[test]
    fn free_variables_first_occurrence_order() {
        assert_eq!(atom().free_variables(), vec![cap_x(1), x(3)]);
        assert_eq!(Formula::forall(x(3), atom()).free_variables(), vec![cap_x(1)]);
        let sentence = Formula::forall(cap_x(1), Formula::forall(x(3), atom()));
        assert!(sentence.free_variables().is_empty());
    }

    #[test]
    fn classify_by_free_variable_count() {
        assert_eq!(atom().classify(), MarkKind::Relationmark);
        assert_eq!(Formula::forall(x(3), atom()).classify(), MarkKind::Classmark);
        assert_eq!(
            Formula::forall(cap_x(1), Formula::forall(x(3), atom())).classify(),
            MarkKind::Sentence
        );
    }

    #[test]
    fn substitute_free_occurrences() {
        let s = atom().substitute(x(3), &Term::numeral(2u32)).unwrap();
        assert_eq!(s, Formula::apply(cap_x(1), Arg::Term(Term::numeral(2u32))).unwrap());

        // Bound occurrence untouched.
        let g = Formula::forall(x(3), atom());
        assert_eq!(g.substitute(x(3), &Term::numeral(1u32)).unwrap(), g);

        // Absent variable: identity.
        assert_eq!(atom().substitute(x(1), &Term::numeral(5u32)).unwrap(), atom());

        // Open substitutend rejected.
        let open = Term::succ(Term::var(x(1)));
        assert!(matches!(atom().substitute(x(3), &open), Err(SubstError::OpenTerm { .. })));

        // Term for a free higher-type variable rejected.
        assert!(matches!(
            atom().substitute(cap_x(1), &Term::Zero),
            Err(SubstError::TermForHigherType { .. })
        ));
        // ... but fine if the higher-type variable is absent or bound.
        assert_eq!(atom().substitute(cap_x(2), &Term::Zero).unwrap(), atom());
    }

    #[test]
    fn substitution_collapses_numeral_runs() {
        // X1(f x3)[x3 := ff0] = X1(fff0)
        let f = Formula::apply(cap_x(1), Arg::Term(Term::succ(Term::var(x(3))))).unwrap();
        let s = f.substitute(x(3), &Term::numeral(2u32)).unwrap();
        assert_eq!(s, Formula::apply(cap_x(1), Arg::Term(Term::numeral(3u32))).unwrap());
    }

    #[test]
    fn implication_and_conjunction_abbreviations() {
        let a = atom();
        let imp = mk_implication(a.clone(), a.clone());
        assert_eq!(imp, Formula::or(Formula::not(a.clone()), a.clone()));
        let con = mk_conjunction(a.clone(), Formula::not(a.clone()));
        assert_eq!(
            con,
            Formula::not(Formula::or(
                Formula::not(a.clone()),
                Formula::not(Formula::not(a.clone()))
            ))
        );
    }

    #[test]
    fn match_implication_form_inverts_constructor() {
        let a = atom();
        let b = Formula::not(atom());
        let f = mk_implication(a.clone(), b.clone());
        assert_eq!(match_implication_form(&f), Some((&a, &b)));

        // (~A | ~A) is an implication with antecedent A and consequent ~A.
        let self_neg = Formula::or(Formula::not(a.clone()), Formula::not(a.clone()));
        assert_eq!(match_implication_form(&self_neg), Some((&a, &b)));

        // First disjunct not a negation: no match.
        assert_eq!(match_implication_form(&Formula::or(a.clone(), b.clone())), None);
        assert_eq!(match_implication_form(&a), None);
    }

    #[test]
    fn strict_growth_under_self_negation_implication() {
        let a = atom();
        let f = mk_implication(a.clone(), Formula::not(a.clone()));
        assert!(f.size() > a.size() * 2u32);
    }
}
