use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

use crate::linalg::rational::{fmt_rational, parse_rational, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeightError {
    #[error("entry {0} is not a half-integer with odd numerator")]
    NotHalfInteger(String),
    #[error("entries must be strictly decreasing, got {0} before {1}")]
    NotDecreasing(String, String),
    #[error("could not parse {0:?}")]
    Parse(String),
}

/// A strictly decreasing list of half-integers `a_i / 2` with `a_i` odd, stored as
/// the numerators `a_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfIntWeight {
    numerators: Vec<i64>,
}

impl HalfIntWeight {
    pub fn from_numerators(numerators: Vec<i64>) -> Result<Self, WeightError> {
        for &a in &numerators {
            if a % 2 == 0 {
                return Err(WeightError::NotHalfInteger(format!("{a}/2")));
            }
        }
        for w in numerators.windows(2) {
            if w[0] <= w[1] {
                return Err(WeightError::NotDecreasing(format!("{}/2", w[0]), format!("{}/2", w[1])));
            }
        }
        Ok(HalfIntWeight { numerators })
    }

    pub fn from_rationals(entries: &[Rational]) -> Result<Self, WeightError> {
        let mut nums = Vec::with_capacity(entries.len());
        for e in entries {
            let twice = e * Rational::from_integer(2.into());
            if !twice.is_integer() {
                return Err(WeightError::NotHalfInteger(fmt_rational(e)));
            }
            let a: i64 = twice.to_integer().try_into().map_err(|_| WeightError::NotHalfInteger(fmt_rational(e)))?;
            nums.push(a);
        }
        Self::from_numerators(nums)
    }

    /// Comma-separated entries such as `15/2,13/2,-1/2`. The empty string is the
    /// weight of `q(0)`.
    pub fn parse(s: &str) -> Result<Self, WeightError> {
        let s = s.trim();
        if s.is_empty() {
            return Self::from_numerators(Vec::new());
        }
        let entries = s
            .split(',')
            .map(|t| parse_rational(t.trim()).map_err(|_| WeightError::Parse(t.trim().to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rationals(&entries)
    }

    pub fn numerators(&self) -> &[i64] {
        &self.numerators
    }

    pub fn len(&self) -> usize {
        self.numerators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numerators.is_empty()
    }

    pub fn entries(&self) -> Vec<Rational> {
        self.numerators.iter().map(|&a| Rational::new(a.into(), 2.into())).collect()
    }
}

impl fmt::Display for HalfIntWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries().iter().map(fmt_rational).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for HalfIntWeight {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.entries().iter().map(fmt_rational))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Empty,
    Right,
    Left,
    Cross,
}

impl Symbol {
    pub fn ascii(self) -> char {
        match self {
            Symbol::Empty => 'o',
            Symbol::Right => '>',
            Symbol::Left => '<',
            Symbol::Cross => 'x',
        }
    }

    pub fn from_ascii(c: char) -> Option<Symbol> {
        match c {
            'o' => Some(Symbol::Empty),
            '>' => Some(Symbol::Right),
            '<' => Some(Symbol::Left),
            'x' => Some(Symbol::Cross),
            _ => None,
        }
    }
}

impl Serialize for Symbol {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.ascii().to_string())
    }
}

/// Symbols on the positions `a / 2`, `a` positive odd; positions not stored are empty.
/// Keys are the numerators `a`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeightDiagram {
    symbols: BTreeMap<i64, Symbol>,
}

impl WeightDiagram {
    pub fn from_symbols(symbols: impl IntoIterator<Item = (i64, Symbol)>) -> Self {
        let symbols = symbols.into_iter().filter(|(_, s)| *s != Symbol::Empty).collect();
        WeightDiagram { symbols }
    }

    /// Diagram from a string of symbols at `1/2, 3/2, ...`, e.g. `"x<xooo>xo"`.
    pub fn from_ascii(s: &str) -> Option<Self> {
        let syms = s.chars().map(Symbol::from_ascii).collect::<Option<Vec<_>>>()?;
        Some(Self::from_symbols(syms.into_iter().enumerate().map(|(i, c)| (2 * i as i64 + 1, c))))
    }

    pub fn at(&self, a: i64) -> Symbol {
        self.symbols.get(&a).copied().unwrap_or(Symbol::Empty)
    }

    /// Largest numerator carrying a non-empty symbol, 0 if none.
    pub fn extent(&self) -> i64 {
        self.symbols.keys().next_back().copied().unwrap_or(0)
    }

    pub fn crosses(&self) -> Vec<i64> {
        self.symbols.iter().filter(|(_, s)| **s == Symbol::Cross).map(|(a, _)| *a).collect()
    }

    /// Symbols on `1/2 .. len/2` as ASCII.
    pub fn ascii(&self, len: i64) -> String {
        (0..len).map(|i| self.at(2 * i + 1).ascii()).collect()
    }

    pub fn with(&self, a: i64, s: Symbol) -> WeightDiagram {
        let mut d = self.clone();
        if s == Symbol::Empty {
            d.symbols.remove(&a);
        } else {
            d.symbols.insert(a, s);
        }
        d
    }
}

impl Serialize for WeightDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            position: String,
            symbol: Symbol,
        }
        s.collect_seq(self.symbols.iter().map(|(a, sym)| Entry {
            position: fmt_rational(&Rational::new((*a).into(), 2.into())),
            symbol: *sym,
        }))
    }
}

/// `f(b)` is `>` when `2b` is an entry, `<` when `-2b` is, `x` when both are, and
/// empty otherwise.
pub fn weight_diagram(lambda: &HalfIntWeight) -> WeightDiagram {
    let mut symbols: BTreeMap<i64, Symbol> = BTreeMap::new();
    for &a in lambda.numerators() {
        let pos = a.abs();
        let incoming = if a > 0 { Symbol::Right } else { Symbol::Left };
        let s = match symbols.get(&pos) {
            None => incoming,
            Some(_) => Symbol::Cross,
        };
        symbols.insert(pos, s);
    }
    WeightDiagram { symbols }
}

/// Inverse of [`weight_diagram`].
pub fn weight_of_diagram(d: &WeightDiagram) -> HalfIntWeight {
    let mut nums = Vec::new();
    for (&a, &s) in &d.symbols {
        match s {
            Symbol::Right => nums.push(a),
            Symbol::Left => nums.push(-a),
            Symbol::Cross => {
                nums.push(a);
                nums.push(-a);
            }
            Symbol::Empty => {}
        }
    }
    nums.sort_unstable_by(|a, b| b.cmp(a));
    HalfIntWeight::from_numerators(nums).expect("distinct odd numerators")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked() -> HalfIntWeight {
        HalfIntWeight::parse("15/2,13/2,5/2,1/2,-1/2,-3/2,-5/2,-15/2").unwrap()
    }

    #[test]
    fn worked_example_diagram() {
        assert_eq!(weight_diagram(&worked()).ascii(9), "x<xooo>xo");
    }

    #[test]
    fn small_diagrams() {
        assert_eq!(weight_diagram(&HalfIntWeight::parse("1/2").unwrap()).at(1), Symbol::Right);
        assert_eq!(weight_diagram(&HalfIntWeight::parse("1/2,-1/2").unwrap()).at(1), Symbol::Cross);
        assert_eq!(weight_diagram(&HalfIntWeight::parse("-3/2").unwrap()).ascii(2), "o<");
    }

    #[test]
    fn validation() {
        assert!(matches!(HalfIntWeight::parse("1/2,1/2"), Err(WeightError::NotDecreasing(..))));
        assert!(matches!(HalfIntWeight::parse("1"), Err(WeightError::NotHalfInteger(_))));
        assert!(matches!(HalfIntWeight::parse("a"), Err(WeightError::Parse(_))));
    }

    #[test]
    fn diagram_round_trip() {
        let w = worked();
        assert_eq!(weight_of_diagram(&weight_diagram(&w)), w);
    }
}
