//! Module expressions such as `W(3)_1/2 (x) Pi X(2) (+) vee(Y(1))`.

use num_traits::Zero;
use std::fmt;

use crate::linalg::rational::{fmt_rational, parse_rational, Rational};
use crate::supermod::{
    contragredient, direct_sum_all, dual, make_indecomposable, parity_shift, tensor, IndecompId, IndecompKind,
    ModuleError, SuperModule,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleExpr {
    Atom(IndecompKind, Rational),
    Pi(Box<ModuleExpr>),
    Dual(Box<ModuleExpr>),
    Vee(Box<ModuleExpr>),
    Sum(Vec<ModuleExpr>),
    Tensor(Vec<ModuleExpr>),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Debug, thiserror::Error)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Plus,
    Times,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Underscore,
    Word(String),
    Number(String),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Plus => write!(f, "'(+)'"),
            Tok::Times => write!(f, "'(x)'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::LBrace => write!(f, "'{{'"),
            Tok::RBrace => write!(f, "'}}'"),
            Tok::Underscore => write!(f, "'_'"),
            Tok::Word(w) => write!(f, "'{w}'"),
            Tok::Number(n) => write!(f, "number {n}"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < input.len() {
        let rest = &input[i..];
        let c = rest.chars().next().expect("nonempty");
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        let fixed = [
            ("(+)", Tok::Plus),
            ("(x)", Tok::Times),
            ("\u{2295}", Tok::Plus),
            ("\u{2297}", Tok::Times),
            ("\u{3a0}", Tok::Word("Pi".into())),
            ("(", Tok::LParen),
            (")", Tok::RParen),
            ("{", Tok::LBrace),
            ("}", Tok::RBrace),
            ("_", Tok::Underscore),
        ];
        if let Some((s, t)) = fixed.iter().find(|(s, _)| rest.starts_with(s)) {
            out.push((i, t.clone()));
            i += s.len();
            continue;
        }
        if c.is_ascii_alphabetic() {
            let len = rest.find(|ch: char| !ch.is_ascii_alphabetic()).unwrap_or(rest.len());
            out.push((i, Tok::Word(rest[..len].to_string())));
            i += len;
            continue;
        }
        if c.is_ascii_digit() || c == '-' {
            let digits = |s: &str| s.find(|ch: char| !ch.is_ascii_digit()).unwrap_or(s.len());
            let mut len = usize::from(c == '-');
            let d = digits(&rest[len..]);
            if d == 0 {
                return Err(ParseError { offset: i, expected: vec!["digit".into()], found: format!("{:?}", &rest[..1]) });
            }
            len += d;
            if rest[len..].starts_with('/') && digits(&rest[len + 1..]) > 0 {
                len += 1 + digits(&rest[len + 1..]);
            }
            out.push((i, Tok::Number(rest[..len].to_string())));
            i += len;
            continue;
        }
        return Err(ParseError { offset: i, expected: vec!["a module expression".into()], found: format!("{c:?}") });
    }
    out.push((input.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().to_string(),
        })
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok) -> Result<(), ParseError> {
        if self.eat(&t) {
            Ok(())
        } else {
            self.fail(&[&t.to_string()])
        }
    }

    fn number(&mut self) -> Result<Rational, ParseError> {
        if let Tok::Number(n) = self.peek().clone() {
            let q = parse_rational(&n).or_else(|_| self.fail(&["rational"]))?;
            self.pos += 1;
            Ok(q)
        } else {
            self.fail(&["number"])
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let at = self.pos;
        let q = self.number()?;
        if !q.is_integer() {
            self.pos = at;
            return self.fail(&["integer"]);
        }
        q.to_integer().try_into().or_else(|_| {
            self.pos = at;
            self.fail(&["integer in range"])
        })
    }

    fn expr(&mut self) -> Result<ModuleExpr, ParseError> {
        let mut terms = vec![self.term()?];
        while self.eat(&Tok::Plus) {
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 { terms.pop().expect("one term") } else { ModuleExpr::Sum(terms) })
    }

    fn term(&mut self) -> Result<ModuleExpr, ParseError> {
        let mut factors = vec![self.factor()?];
        while self.eat(&Tok::Times) {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 { factors.pop().expect("one factor") } else { ModuleExpr::Tensor(factors) })
    }

    fn factor(&mut self) -> Result<ModuleExpr, ParseError> {
        const START: [&str; 9] = ["'P'", "'X'", "'Y'", "'W'", "'C'", "'Pi'", "'dual'", "'vee'", "'('"];
        match self.peek().clone() {
            Tok::LParen => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Word(w) => match w.as_str() {
                "Pi" => {
                    self.pos += 1;
                    Ok(ModuleExpr::Pi(Box::new(self.factor()?)))
                }
                "dual" | "vee" => {
                    self.pos += 1;
                    self.expect(Tok::LParen)?;
                    let e = Box::new(self.expr()?);
                    self.expect(Tok::RParen)?;
                    Ok(if w == "dual" { ModuleExpr::Dual(e) } else { ModuleExpr::Vee(e) })
                }
                _ => self.atom(),
            },
            _ => self.fail(&START),
        }
    }

    fn atom(&mut self) -> Result<ModuleExpr, ParseError> {
        let Tok::Word(w) = self.peek().clone() else { unreachable!("atom starts with a word") };
        let kind = match w.as_str() {
            "P" => {
                self.pos += 1;
                IndecompKind::P
            }
            "X" | "Y" | "W" | "C" => {
                self.pos += 1;
                self.expect(Tok::LParen)?;
                let kind = match w.as_str() {
                    "C" => IndecompKind::Charged(self.number()?),
                    "W" => IndecompKind::W(self.integer()?),
                    _ => {
                        let at = self.pos;
                        let n = self.integer()?;
                        let Ok(n) = u32::try_from(n).map_err(|_| ()).and_then(|n| if n > 0 { Ok(n) } else { Err(()) }) else {
                            self.pos = at;
                            return self.fail(&["positive integer"]);
                        };
                        if w == "X" { IndecompKind::X(n) } else { IndecompKind::Y(n) }
                    }
                };
                self.expect(Tok::RParen)?;
                kind
            }
            _ => return self.fail(&["'P'", "'X'", "'Y'", "'W'", "'C'", "'Pi'", "'dual'", "'vee'", "'('"]),
        };
        let mut r = Rational::zero();
        if self.eat(&Tok::Underscore) {
            if self.eat(&Tok::LBrace) {
                r = self.number()?;
                self.expect(Tok::RBrace)?;
            } else {
                r = self.number()?;
            }
        }
        Ok(ModuleExpr::Atom(kind, r))
    }
}

pub fn parse(input: &str) -> Result<ModuleExpr, ParseError> {
    let mut p = Parser { toks: lex(input)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail(&["'(+)'", "'(x)'", "end of input"]);
    }
    Ok(e)
}

impl ModuleExpr {
    pub fn eval(&self) -> Result<SuperModule, ModuleError> {
        Ok(match self {
            ModuleExpr::Atom(kind, r) => make_indecomposable(&IndecompId::new(kind.clone()).twisted(r.clone()))?,
            ModuleExpr::Pi(e) => parity_shift(&e.eval()?),
            ModuleExpr::Dual(e) => dual(&e.eval()?),
            ModuleExpr::Vee(e) => contragredient(&e.eval()?),
            ModuleExpr::Sum(es) => direct_sum_all(&es.iter().map(|e| e.eval()).collect::<Result<Vec<_>, _>>()?),
            ModuleExpr::Tensor(es) => {
                let mut acc = es[0].eval()?;
                for e in &es[1..] {
                    acc = tensor(&acc, &e.eval()?);
                }
                acc
            }
        })
    }

    fn fmt_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleExpr::Sum(_) | ModuleExpr::Tensor(_) => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }
}

impl fmt::Display for ModuleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleExpr::Atom(kind, r) => {
                write!(f, "{kind}")?;
                if !r.is_zero() {
                    write!(f, "_{{{}}}", fmt_rational(r))?;
                }
                Ok(())
            }
            ModuleExpr::Pi(e) => {
                write!(f, "Pi ")?;
                e.fmt_factor(f)
            }
            ModuleExpr::Dual(e) => write!(f, "dual({e})"),
            ModuleExpr::Vee(e) => write!(f, "vee({e})"),
            ModuleExpr::Sum(es) => {
                for (i, e) in es.iter().enumerate() {
                    if i > 0 {
                        write!(f, " (+) ")?;
                    }
                    write!(f, "{e}")?;
                }
                Ok(())
            }
            ModuleExpr::Tensor(es) => {
                for (i, e) in es.iter().enumerate() {
                    if i > 0 {
                        write!(f, " (x) ")?;
                    }
                    match e {
                        ModuleExpr::Sum(_) => e.fmt_factor(f)?,
                        _ => write!(f, "{e}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

/// Parses and evaluates in one step.
pub fn module(input: &str) -> Result<SuperModule, ExprError> {
    Ok(parse(input)?.eval()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::decompose;
    use crate::linalg::rational::half;
    use crate::supermod::Multiset;

    fn atom(kind: IndecompKind, r: Rational) -> ModuleExpr {
        ModuleExpr::Atom(kind, r)
    }

    #[test]
    fn atoms_and_precedence() {
        assert_eq!(parse("W(0)").unwrap(), atom(IndecompKind::W(0), Rational::zero()));
        assert_eq!(
            parse("W(3)_1/2 (x) Pi X(2)").unwrap(),
            ModuleExpr::Tensor(vec![
                atom(IndecompKind::W(3), half(1)),
                ModuleExpr::Pi(Box::new(atom(IndecompKind::X(2), Rational::zero()))),
            ])
        );
        let e = parse("P (+) W(1) (x) W(-1)").unwrap();
        assert!(matches!(&e, ModuleExpr::Sum(t) if matches!(t[1], ModuleExpr::Tensor(_))));
        assert_eq!(parse("Pi X(1)_{-3/2}").unwrap(), parse("\u{3a0}X(1)_-3/2").unwrap());
        assert_eq!(parse("W(1)\u{2297}W(1)\u{2295}P").unwrap(), parse("W(1)(x)W(1)(+)P").unwrap());
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse("W(2 (+)").unwrap_err().offset, 4);
        assert_eq!(parse("").unwrap_err().offset, 0);
        assert_eq!(parse("X(0)").unwrap_err().offset, 2);
        assert_eq!(parse("W(1) W(2)").unwrap_err().offset, 5);
        assert_eq!(parse("Q").unwrap_err().offset, 0);
        assert_eq!(parse("W(1/2)").unwrap_err().offset, 2);
        assert_eq!(parse("W(1) $").unwrap_err().offset, 5);
    }

    #[test]
    fn print_round_trip() {
        for s in [
            "W(3)_1/2 (x) Pi X(2)",
            "Pi (W(1) (+) Y(2)) (x) P",
            "dual(X(1) (x) W(-2)_{3/2}) (+) vee(C(2))",
            "(P (+) P) (x) (W(1) (x) W(1))",
        ] {
            let e = parse(s).unwrap();
            let printed = e.to_string();
            assert_eq!(parse(&printed).unwrap().to_string(), printed, "{s}");
            assert_eq!(parse(&printed).unwrap().eval().unwrap(), e.eval().unwrap(), "{s}");
        }
    }

    #[test]
    fn evaluation() {
        assert_eq!(module("X(2)").unwrap().sdims(), (2, 2));
        assert_eq!(module("W(1)(x)W(1)").unwrap().sdims(), (5, 4));
        let mut y2 = Multiset::new();
        y2.insert(IndecompId::new(IndecompKind::Y(2)), 1);
        assert_eq!(decompose(&module("vee(X(2))").unwrap()).unwrap().summands, y2);
    }
}
