//! Tiny Boolean expression language for structural equations and causal
//! formulas: `!`, `&`, `|`, parentheses, names, and the constants `0`/`1`
//! (`true`/`false` are accepted as well). Causal formulas additionally use
//! primitive events `name=0` / `name=1`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("expression error at offset {position}: {message}")]
pub struct ExprError {
    pub position: usize,
    pub message: String,
}

/// A Boolean expression over named variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoolExpr {
    Var(String),
    Const(bool),
    Not(Box<BoolExpr>),
    And(Box<BoolExpr>, Box<BoolExpr>),
    Or(Box<BoolExpr>, Box<BoolExpr>),
}

impl BoolExpr {
    pub fn mentions(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut BTreeSet<String>) {
        match self {
            BoolExpr::Var(n) => {
                out.insert(n.clone());
            }
            BoolExpr::Const(_) => {}
            BoolExpr::Not(a) => a.collect(out),
            BoolExpr::And(a, b) | BoolExpr::Or(a, b) => {
                a.collect(out);
                b.collect(out);
            }
        }
    }

    /// Evaluates under `lookup`; every mentioned name must resolve.
    pub fn eval(&self, lookup: &impl Fn(&str) -> Option<bool>) -> Option<bool> {
        Some(match self {
            BoolExpr::Var(n) => lookup(n)?,
            BoolExpr::Const(v) => *v,
            BoolExpr::Not(a) => !a.eval(lookup)?,
            BoolExpr::And(a, b) => a.eval(lookup)? && b.eval(lookup)?,
            BoolExpr::Or(a, b) => a.eval(lookup)? || b.eval(lookup)?,
        })
    }
}

impl fmt::Display for BoolExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(e: &BoolExpr, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
            let prec = match e {
                BoolExpr::Or(..) => 1,
                BoolExpr::And(..) => 2,
                BoolExpr::Not(_) => 3,
                BoolExpr::Var(_) | BoolExpr::Const(_) => 4,
            };
            let parens = prec < min;
            if parens {
                write!(f, "(")?;
            }
            match e {
                BoolExpr::Var(n) => write!(f, "{n}")?,
                BoolExpr::Const(v) => write!(f, "{}", u8::from(*v))?,
                BoolExpr::Not(a) => {
                    write!(f, "!")?;
                    go(a, f, 3)?;
                }
                BoolExpr::And(a, b) => {
                    go(a, f, 2)?;
                    write!(f, " & ")?;
                    go(b, f, 3)?;
                }
                BoolExpr::Or(a, b) => {
                    go(a, f, 1)?;
                    write!(f, " | ")?;
                    go(b, f, 2)?;
                }
            }
            if parens {
                write!(f, ")")?;
            }
            Ok(())
        }
        go(self, f, 0)
    }
}

/// A Boolean combination of primitive events `variable = bit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EventFormula {
    Is(String, bool),
    Not(Box<EventFormula>),
    And(Box<EventFormula>, Box<EventFormula>),
    Or(Box<EventFormula>, Box<EventFormula>),
}

impl EventFormula {
    pub fn is(name: &str, value: bool) -> Self {
        EventFormula::Is(name.to_string(), value)
    }

    pub fn mentions(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut BTreeSet<String>) {
        match self {
            EventFormula::Is(n, _) => {
                out.insert(n.clone());
            }
            EventFormula::Not(a) => a.collect(out),
            EventFormula::And(a, b) | EventFormula::Or(a, b) => {
                a.collect(out);
                b.collect(out);
            }
        }
    }

    pub fn eval(&self, lookup: &impl Fn(&str) -> Option<bool>) -> Option<bool> {
        Some(match self {
            EventFormula::Is(n, v) => lookup(n)? == *v,
            EventFormula::Not(a) => !a.eval(lookup)?,
            EventFormula::And(a, b) => a.eval(lookup)? && b.eval(lookup)?,
            EventFormula::Or(a, b) => a.eval(lookup)? || b.eval(lookup)?,
        })
    }
}

impl fmt::Display for EventFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(e: &EventFormula, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
            let prec = match e {
                EventFormula::Or(..) => 1,
                EventFormula::And(..) => 2,
                EventFormula::Not(_) => 3,
                EventFormula::Is(..) => 4,
            };
            let parens = prec < min;
            if parens {
                write!(f, "(")?;
            }
            match e {
                EventFormula::Is(n, v) => write!(f, "{n}={}", u8::from(*v))?,
                EventFormula::Not(a) => {
                    write!(f, "!")?;
                    go(a, f, 3)?;
                }
                EventFormula::And(a, b) => {
                    go(a, f, 2)?;
                    write!(f, " & ")?;
                    go(b, f, 3)?;
                }
                EventFormula::Or(a, b) => {
                    go(a, f, 1)?;
                    write!(f, " | ")?;
                    go(b, f, 2)?;
                }
            }
            if parens {
                write!(f, ")")?;
            }
            Ok(())
        }
        go(self, f, 0)
    }
}

#[derive(Debug, PartialEq, Eq, Clone)]
enum Tok {
    Name(String),
    Bit(bool),
    Not,
    And,
    Or,
    Eq,
    LParen,
    RParen,
    Eof,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] as char {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '!' => {
                out.push((Tok::Not, i));
                i += 1;
            }
            '&' => {
                out.push((Tok::And, i));
                i += 1;
            }
            '|' => {
                out.push((Tok::Or, i));
                i += 1;
            }
            '=' => {
                out.push((Tok::Eq, i));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, i));
                i += 1;
            }
            '0' => {
                out.push((Tok::Bit(false), i));
                i += 1;
            }
            '1' => {
                out.push((Tok::Bit(true), i));
                i += 1;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() {
                    let c = bytes[i] as char;
                    if c.is_ascii_alphanumeric() || c == '_' || c == '\'' {
                        i += 1;
                    } else {
                        break;
                    }
                }
                let word = &text[start..i];
                let tok = match word {
                    "true" => Tok::Bit(true),
                    "false" => Tok::Bit(false),
                    _ => Tok::Name(word.to_string()),
                };
                out.push((tok, start));
            }
            other => {
                return Err(ExprError {
                    position: i,
                    message: format!("unexpected character `{other}`"),
                });
            }
        }
    }
    out.push((Tok::Eof, bytes.len()));
    Ok(out)
}

struct P {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl P {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn err(&self, message: String) -> ExprError {
        ExprError {
            position: self.toks[self.pos].1,
            message,
        }
    }

    fn or_expr<T>(
        &mut self,
        atom: &impl Fn(&mut P) -> Result<T, ExprError>,
        mk: &Mk<T>,
    ) -> Result<T, ExprError> {
        let mut lhs = self.and_expr(atom, mk)?;
        while *self.peek() == Tok::Or {
            self.pos += 1;
            let rhs = self.and_expr(atom, mk)?;
            lhs = (mk.or)(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and_expr<T>(
        &mut self,
        atom: &impl Fn(&mut P) -> Result<T, ExprError>,
        mk: &Mk<T>,
    ) -> Result<T, ExprError> {
        let mut lhs = self.unary(atom, mk)?;
        while *self.peek() == Tok::And {
            self.pos += 1;
            let rhs = self.unary(atom, mk)?;
            lhs = (mk.and)(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary<T>(
        &mut self,
        atom: &impl Fn(&mut P) -> Result<T, ExprError>,
        mk: &Mk<T>,
    ) -> Result<T, ExprError> {
        match self.peek() {
            Tok::Not => {
                self.pos += 1;
                let inner = self.unary(atom, mk)?;
                Ok((mk.not)(inner))
            }
            Tok::LParen => {
                self.pos += 1;
                let inner = self.or_expr(atom, mk)?;
                if *self.peek() != Tok::RParen {
                    return Err(self.err("expected `)`".to_string()));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => atom(self),
        }
    }
}

struct Mk<T> {
    not: fn(T) -> T,
    and: fn(T, T) -> T,
    or: fn(T, T) -> T,
}

/// Parses a plain Boolean expression (used by structural equations).
pub fn parse_expr(text: &str) -> Result<BoolExpr, ExprError> {
    let mut p = P {
        toks: lex(text)?,
        pos: 0,
    };
    let atom = |p: &mut P| -> Result<BoolExpr, ExprError> {
        match p.peek().clone() {
            Tok::Name(n) => {
                p.pos += 1;
                Ok(BoolExpr::Var(n))
            }
            Tok::Bit(b) => {
                p.pos += 1;
                Ok(BoolExpr::Const(b))
            }
            other => Err(p.err(format!("expected a variable or constant, found {other:?}"))),
        }
    };
    let mk = Mk {
        not: |a| BoolExpr::Not(Box::new(a)),
        and: |a, b| BoolExpr::And(Box::new(a), Box::new(b)),
        or: |a, b| BoolExpr::Or(Box::new(a), Box::new(b)),
    };
    let e = p.or_expr(&atom, &mk)?;
    if *p.peek() != Tok::Eof {
        return Err(p.err("unexpected trailing input".to_string()));
    }
    Ok(e)
}

/// Parses a causal formula built from primitive events `name=bit`.
pub fn parse_event_formula(text: &str) -> Result<EventFormula, ExprError> {
    let mut p = P {
        toks: lex(text)?,
        pos: 0,
    };
    let atom = |p: &mut P| -> Result<EventFormula, ExprError> {
        match p.peek().clone() {
            Tok::Name(n) => {
                p.pos += 1;
                if *p.peek() != Tok::Eq {
                    return Err(p.err(format!("expected `=` after `{n}` in a primitive event")));
                }
                p.pos += 1;
                match p.peek().clone() {
                    Tok::Bit(b) => {
                        p.pos += 1;
                        Ok(EventFormula::Is(n, b))
                    }
                    other => Err(p.err(format!("expected 0 or 1, found {other:?}"))),
                }
            }
            other => Err(p.err(format!("expected a primitive event, found {other:?}"))),
        }
    };
    let mk = Mk {
        not: |a| EventFormula::Not(Box::new(a)),
        and: |a, b| EventFormula::And(Box::new(a), Box::new(b)),
        or: |a, b| EventFormula::Or(Box::new(a), Box::new(b)),
    };
    let e = p.or_expr(&atom, &mk)?;
    if *p.peek() != Tok::Eof {
        return Err(p.err("unexpected trailing input".to_string()));
    }
    Ok(e)
}
