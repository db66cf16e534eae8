//! CTL abstract syntax, concrete syntax, positive normal form, and an
//! explicit-state model checker.

use std::collections::BTreeSet;
use std::fmt;

mod mc;
mod parse;

pub use mc::{model_check, satisfies, CheckError};
pub use parse::{parse, ParseError};

/// A CTL formula. Temporal operators pair a path quantifier (`A`/`E`) with
/// `X`, `U`, `R`, or the `F`/`G` abbreviations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CtlFormula {
    True,
    False,
    Atom(String),
    Not(Box<CtlFormula>),
    And(Box<CtlFormula>, Box<CtlFormula>),
    Or(Box<CtlFormula>, Box<CtlFormula>),
    Implies(Box<CtlFormula>, Box<CtlFormula>),
    Ex(Box<CtlFormula>),
    Ax(Box<CtlFormula>),
    Ef(Box<CtlFormula>),
    Af(Box<CtlFormula>),
    Eg(Box<CtlFormula>),
    Ag(Box<CtlFormula>),
    Eu(Box<CtlFormula>, Box<CtlFormula>),
    Au(Box<CtlFormula>, Box<CtlFormula>),
    Er(Box<CtlFormula>, Box<CtlFormula>),
    Ar(Box<CtlFormula>, Box<CtlFormula>),
}

impl CtlFormula {
    pub fn atom(name: &str) -> Self {
        CtlFormula::Atom(name.to_string())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: CtlFormula) -> Self {
        CtlFormula::Not(Box::new(a))
    }

    pub fn and(a: CtlFormula, b: CtlFormula) -> Self {
        CtlFormula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: CtlFormula, b: CtlFormula) -> Self {
        CtlFormula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: CtlFormula, b: CtlFormula) -> Self {
        CtlFormula::Implies(Box::new(a), Box::new(b))
    }

    pub fn ex(a: CtlFormula) -> Self {
        CtlFormula::Ex(Box::new(a))
    }

    pub fn ax(a: CtlFormula) -> Self {
        CtlFormula::Ax(Box::new(a))
    }

    pub fn ef(a: CtlFormula) -> Self {
        CtlFormula::Ef(Box::new(a))
    }

    pub fn af(a: CtlFormula) -> Self {
        CtlFormula::Af(Box::new(a))
    }

    pub fn eg(a: CtlFormula) -> Self {
        CtlFormula::Eg(Box::new(a))
    }

    pub fn ag(a: CtlFormula) -> Self {
        CtlFormula::Ag(Box::new(a))
    }

    pub fn eu(a: CtlFormula, b: CtlFormula) -> Self {
        CtlFormula::Eu(Box::new(a), Box::new(b))
    }

    pub fn au(a: CtlFormula, b: CtlFormula) -> Self {
        CtlFormula::Au(Box::new(a), Box::new(b))
    }

    pub fn er(a: CtlFormula, b: CtlFormula) -> Self {
        CtlFormula::Er(Box::new(a), Box::new(b))
    }

    pub fn ar(a: CtlFormula, b: CtlFormula) -> Self {
        CtlFormula::Ar(Box::new(a), Box::new(b))
    }

    /// Atomic propositions mentioned anywhere in the formula.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        use CtlFormula::*;
        match self {
            True | False => {}
            Atom(p) => {
                out.insert(p.clone());
            }
            Not(a) | Ex(a) | Ax(a) | Ef(a) | Af(a) | Eg(a) | Ag(a) => a.collect_atoms(out),
            And(a, b) | Or(a, b) | Implies(a, b) | Eu(a, b) | Au(a, b) | Er(a, b) | Ar(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    pub fn node_count(&self) -> usize {
        use CtlFormula::*;
        match self {
            True | False | Atom(_) => 1,
            Not(a) | Ex(a) | Ax(a) | Ef(a) | Af(a) | Eg(a) | Ag(a) => 1 + a.node_count(),
            And(a, b) | Or(a, b) | Implies(a, b) | Eu(a, b) | Au(a, b) | Er(a, b) | Ar(a, b) => {
                1 + a.node_count() + b.node_count()
            }
        }
    }

    /// True when negation is applied only to atoms and the connectives are
    /// restricted to and/or plus EX, AX, EU, AU, ER, AR.
    pub fn is_pnf(&self) -> bool {
        use CtlFormula::*;
        match self {
            True | False | Atom(_) => true,
            Not(a) => matches!(**a, Atom(_)),
            And(a, b) | Or(a, b) | Eu(a, b) | Au(a, b) | Er(a, b) | Ar(a, b) => {
                a.is_pnf() && b.is_pnf()
            }
            Ex(a) | Ax(a) => a.is_pnf(),
            Implies(..) | Ef(_) | Af(_) | Eg(_) | Ag(_) => false,
        }
    }
}

/// Converts to positive normal form: implications are expanded, `F`/`G`
/// become `U`/`R` of constants, and negation is pushed down to atoms through
/// the standard dualities. The result never has more than twice the nodes of
/// the input.
pub fn to_pnf(phi: &CtlFormula) -> CtlFormula {
    use CtlFormula::*;
    match phi {
        True => True,
        False => False,
        Atom(p) => Atom(p.clone()),
        Not(a) => pnf_negated(a),
        And(a, b) => CtlFormula::and(to_pnf(a), to_pnf(b)),
        Or(a, b) => CtlFormula::or(to_pnf(a), to_pnf(b)),
        Implies(a, b) => CtlFormula::or(pnf_negated(a), to_pnf(b)),
        Ex(a) => CtlFormula::ex(to_pnf(a)),
        Ax(a) => CtlFormula::ax(to_pnf(a)),
        Ef(a) => CtlFormula::eu(True, to_pnf(a)),
        Af(a) => CtlFormula::au(True, to_pnf(a)),
        Eg(a) => CtlFormula::er(False, to_pnf(a)),
        Ag(a) => CtlFormula::ar(False, to_pnf(a)),
        Eu(a, b) => CtlFormula::eu(to_pnf(a), to_pnf(b)),
        Au(a, b) => CtlFormula::au(to_pnf(a), to_pnf(b)),
        Er(a, b) => CtlFormula::er(to_pnf(a), to_pnf(b)),
        Ar(a, b) => CtlFormula::ar(to_pnf(a), to_pnf(b)),
    }
}

/// PNF of `¬phi`.
fn pnf_negated(phi: &CtlFormula) -> CtlFormula {
    use CtlFormula::*;
    match phi {
        True => False,
        False => True,
        Atom(p) => CtlFormula::not(Atom(p.clone())),
        Not(a) => to_pnf(a),
        And(a, b) => CtlFormula::or(pnf_negated(a), pnf_negated(b)),
        Or(a, b) => CtlFormula::and(pnf_negated(a), pnf_negated(b)),
        Implies(a, b) => CtlFormula::and(to_pnf(a), pnf_negated(b)),
        Ex(a) => CtlFormula::ax(pnf_negated(a)),
        Ax(a) => CtlFormula::ex(pnf_negated(a)),
        Ef(a) => CtlFormula::ar(False, pnf_negated(a)),
        Af(a) => CtlFormula::er(False, pnf_negated(a)),
        Eg(a) => CtlFormula::au(True, pnf_negated(a)),
        Ag(a) => CtlFormula::eu(True, pnf_negated(a)),
        Eu(a, b) => CtlFormula::ar(pnf_negated(a), pnf_negated(b)),
        Au(a, b) => CtlFormula::er(pnf_negated(a), pnf_negated(b)),
        Er(a, b) => CtlFormula::au(pnf_negated(a), pnf_negated(b)),
        Ar(a, b) => CtlFormula::eu(pnf_negated(a), pnf_negated(b)),
    }
}

// Precedence levels for printing: -> binds loosest, then |, then &, then the
// unary operators; bracketed U/R forms and atoms are self-delimiting.
const PREC_IMPLIES: u8 = 1;
const PREC_OR: u8 = 2;
const PREC_AND: u8 = 3;
const PREC_UNARY: u8 = 4;
const PREC_ATOM: u8 = 5;

impl CtlFormula {
    fn precedence(&self) -> u8 {
        use CtlFormula::*;
        match self {
            Implies(..) => PREC_IMPLIES,
            Or(..) => PREC_OR,
            And(..) => PREC_AND,
            Not(_) | Ex(_) | Ax(_) | Ef(_) | Af(_) | Eg(_) | Ag(_) => PREC_UNARY,
            True | False | Atom(_) | Eu(..) | Au(..) | Er(..) | Ar(..) => PREC_ATOM,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        use CtlFormula::*;
        let prec = self.precedence();
        let parens = prec < min;
        if parens {
            write!(f, "(")?;
        }
        match self {
            True => write!(f, "true")?,
            False => write!(f, "false")?,
            Atom(p) => write!(f, "{p}")?,
            Not(a) => {
                write!(f, "!")?;
                a.fmt_prec(f, PREC_UNARY)?;
            }
            And(a, b) => {
                a.fmt_prec(f, PREC_AND)?;
                write!(f, " & ")?;
                b.fmt_prec(f, PREC_AND + 1)?;
            }
            Or(a, b) => {
                a.fmt_prec(f, PREC_OR)?;
                write!(f, " | ")?;
                b.fmt_prec(f, PREC_OR + 1)?;
            }
            Implies(a, b) => {
                a.fmt_prec(f, PREC_IMPLIES + 1)?;
                write!(f, " -> ")?;
                b.fmt_prec(f, PREC_IMPLIES)?;
            }
            Ex(a) | Ax(a) | Ef(a) | Af(a) | Eg(a) | Ag(a) => {
                let op = match self {
                    Ex(_) => "EX",
                    Ax(_) => "AX",
                    Ef(_) => "EF",
                    Af(_) => "AF",
                    Eg(_) => "EG",
                    _ => "AG",
                };
                write!(f, "{op} ")?;
                a.fmt_prec(f, PREC_UNARY)?;
            }
            Eu(a, b) | Au(a, b) | Er(a, b) | Ar(a, b) => {
                let (q, op) = match self {
                    Eu(..) => ("E", "U"),
                    Au(..) => ("A", "U"),
                    Er(..) => ("E", "R"),
                    _ => ("A", "R"),
                };
                write!(f, "{q}[")?;
                a.fmt_prec(f, 0)?;
                write!(f, " {op} ")?;
                b.fmt_prec(f, 0)?;
                write!(f, "]")?;
            }
        }
        if parens {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for CtlFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}
