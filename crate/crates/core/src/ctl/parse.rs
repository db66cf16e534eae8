//! Concrete syntax for CTL formulas.
//!
//! Unary and temporal operators bind tightest, then `&`, then `|`, then the
//! right-associative `->`. Until and release are written `A[f U g]`,
//! `E[f R g]`; `AF`/`EF`/`AG`/`EG` are accepted as abbreviations. Atom names
//! are identifiers (primes allowed after the first character); `true`,
//! `false`, the operator names, and the bare quantifiers `A`/`E` are
//! reserved.

use std::fmt;

use thiserror::Error;

use super::CtlFormula;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("syntax error at offset {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    True,
    False,
    Not,
    And,
    Or,
    Implies,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Until,
    Release,
    Exists,
    Forall,
    Ex,
    Ax,
    Ef,
    Af,
    Eg,
    Ag,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Ident(n) => return write!(f, "identifier `{n}`"),
            Tok::True => "`true`",
            Tok::False => "`false`",
            Tok::Not => "`!`",
            Tok::And => "`&`",
            Tok::Or => "`|`",
            Tok::Implies => "`->`",
            Tok::LParen => "`(`",
            Tok::RParen => "`)`",
            Tok::LBracket => "`[`",
            Tok::RBracket => "`]`",
            Tok::Until => "`U`",
            Tok::Release => "`R`",
            Tok::Exists => "`E`",
            Tok::Forall => "`A`",
            Tok::Ex => "`EX`",
            Tok::Ax => "`AX`",
            Tok::Ef => "`EF`",
            Tok::Af => "`AF`",
            Tok::Eg => "`EG`",
            Tok::Ag => "`AG`",
            Tok::Eof => "end of input",
        };
        write!(f, "{s}")
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '!' => {
                toks.push((Tok::Not, i));
                i += 1;
            }
            '&' => {
                toks.push((Tok::And, i));
                i += 1;
            }
            '|' => {
                toks.push((Tok::Or, i));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            '[' => {
                toks.push((Tok::LBracket, i));
                i += 1;
            }
            ']' => {
                toks.push((Tok::RBracket, i));
                i += 1;
            }
            '-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    toks.push((Tok::Implies, i));
                    i += 2;
                } else {
                    return Err(ParseError {
                        position: i,
                        message: "expected `->`".to_string(),
                    });
                }
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
                    "true" => Tok::True,
                    "false" => Tok::False,
                    "U" => Tok::Until,
                    "R" => Tok::Release,
                    "E" => Tok::Exists,
                    "A" => Tok::Forall,
                    "EX" => Tok::Ex,
                    "AX" => Tok::Ax,
                    "EF" => Tok::Ef,
                    "AF" => Tok::Af,
                    "EG" => Tok::Eg,
                    "AG" => Tok::Ag,
                    _ => Tok::Ident(word.to_string()),
                };
                toks.push((tok, start));
            }
            other => {
                return Err(ParseError {
                    position: i,
                    message: format!("unexpected character `{other}`"),
                });
            }
        }
    }
    toks.push((Tok::Eof, bytes.len()));
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn here(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(ParseError {
                position: self.here(),
                message: format!("expected {want}, found {}", self.peek()),
            })
        }
    }

    fn formula(&mut self) -> Result<CtlFormula, ParseError> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Implies {
            self.bump();
            let rhs = self.formula()?; // right-associative
            Ok(CtlFormula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> Result<CtlFormula, ParseError> {
        let mut lhs = self.conjunction()?;
        while *self.peek() == Tok::Or {
            self.bump();
            lhs = CtlFormula::or(lhs, self.conjunction()?);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<CtlFormula, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            lhs = CtlFormula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<CtlFormula, ParseError> {
        match self.bump() {
            Tok::Not => Ok(CtlFormula::not(self.unary()?)),
            Tok::Ex => Ok(CtlFormula::ex(self.unary()?)),
            Tok::Ax => Ok(CtlFormula::ax(self.unary()?)),
            Tok::Ef => Ok(CtlFormula::ef(self.unary()?)),
            Tok::Af => Ok(CtlFormula::af(self.unary()?)),
            Tok::Eg => Ok(CtlFormula::eg(self.unary()?)),
            Tok::Ag => Ok(CtlFormula::ag(self.unary()?)),
            Tok::Exists => self.bracketed(true),
            Tok::Forall => self.bracketed(false),
            Tok::LParen => {
                let inner = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::True => Ok(CtlFormula::True),
            Tok::False => Ok(CtlFormula::False),
            Tok::Ident(name) => Ok(CtlFormula::Atom(name)),
            other => Err(ParseError {
                position: self.toks[self.pos - 1].1,
                message: format!("expected a formula, found {other}"),
            }),
        }
    }

    fn bracketed(&mut self, existential: bool) -> Result<CtlFormula, ParseError> {
        self.expect(Tok::LBracket)?;
        let lhs = self.formula()?;
        let until = match self.bump() {
            Tok::Until => true,
            Tok::Release => false,
            other => {
                return Err(ParseError {
                    position: self.toks[self.pos - 1].1,
                    message: format!("expected `U` or `R`, found {other}"),
                })
            }
        };
        let rhs = self.formula()?;
        self.expect(Tok::RBracket)?;
        Ok(match (existential, until) {
            (true, true) => CtlFormula::eu(lhs, rhs),
            (true, false) => CtlFormula::er(lhs, rhs),
            (false, true) => CtlFormula::au(lhs, rhs),
            (false, false) => CtlFormula::ar(lhs, rhs),
        })
    }
}

/// Parses a formula, requiring the whole input to be consumed.
pub fn parse(text: &str) -> Result<CtlFormula, ParseError> {
    let mut parser = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let phi = parser.formula()?;
    if *parser.peek() != Tok::Eof {
        return Err(ParseError {
            position: parser.here(),
            message: format!("unexpected {} after the formula", parser.peek()),
        });
    }
    Ok(phi)
}
