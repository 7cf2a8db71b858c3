use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

use super::{dual, parity_shift, twist, BasisVector, DimTable, ModuleError, Parity, SuperModule};
use crate::linalg::rational::{fmt_rational, half, int, Rational};
use crate::linalg::Matrix;

/// The indecomposable shapes. `Charged(g)` is the (1|1)-dimensional simple
/// projective on which c acts by `g != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndecompKind {
    P,
    X(u32),
    Y(u32),
    W(i64),
    Charged(Rational),
}

impl IndecompKind {
    pub fn is_projective(&self) -> bool {
        matches!(self, IndecompKind::P | IndecompKind::Charged(_))
    }
}

impl fmt::Display for IndecompKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndecompKind::P => write!(f, "P"),
            IndecompKind::X(n) => write!(f, "X({n})"),
            IndecompKind::Y(n) => write!(f, "Y({n})"),
            IndecompKind::W(n) => write!(f, "W({n})"),
            IndecompKind::Charged(g) => write!(f, "C({})", fmt_rational(g)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndecompId {
    pub kind: IndecompKind,
    pub twist: Rational,
    pub parity_shift: bool,
}

impl IndecompId {
    pub fn new(kind: IndecompKind) -> Self {
        IndecompId { kind, twist: Rational::zero(), parity_shift: false }
    }

    pub fn twisted(mut self, r: Rational) -> Self {
        self.twist += r;
        self
    }

    pub fn shifted(mut self) -> Self {
        self.parity_shift = !self.parity_shift;
        self
    }

    pub fn with_parity_shift(mut self, on: bool) -> Self {
        self.parity_shift = on;
        self
    }

    pub fn is_projective(&self) -> bool {
        self.kind.is_projective()
    }

    pub fn validate(&self) -> Result<(), ModuleError> {
        match &self.kind {
            IndecompKind::X(0) | IndecompKind::Y(0) => {
                Err(ModuleError::InvalidIndecomposable(format!("{} needs a positive size", self.kind)))
            }
            IndecompKind::Charged(g) if g.is_zero() => Err(ModuleError::InvalidIndecomposable(
                "charged projective needs nonzero charge".into(),
            )),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for IndecompId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parity_shift {
            write!(f, "Pi ")?;
        }
        write!(f, "{}", self.kind)?;
        if !self.twist.is_zero() {
            write!(f, "_{{{}}}", fmt_rational(&self.twist))?;
        }
        Ok(())
    }
}

impl Serialize for IndecompId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A multiset of indecomposables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multiset(BTreeMap<IndecompId, usize>);

impl Multiset {
    pub fn new() -> Self {
        Multiset(BTreeMap::new())
    }

    pub fn insert(&mut self, id: IndecompId, n: usize) {
        if n > 0 {
            *self.0.entry(id).or_insert(0) += n;
        }
    }

    pub fn count(&self, id: &IndecompId) -> usize {
        self.0.get(id).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IndecompId, usize)> + '_ {
        self.0.iter().map(|(k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.values().sum()
    }

    pub fn union(&self, other: &Multiset) -> Multiset {
        let mut m = self.clone();
        for (k, v) in other.iter() {
            m.insert(k.clone(), v);
        }
        m
    }

    pub fn non_projective(&self) -> Multiset {
        let mut m = Multiset::new();
        for (k, v) in self.iter().filter(|(k, _)| !k.is_projective()) {
            m.insert(k.clone(), v);
        }
        m
    }

    /// Summands listed with repetition.
    pub fn expanded(&self) -> Vec<IndecompId> {
        self.iter().flat_map(|(k, v)| std::iter::repeat_n(k.clone(), v)).collect()
    }

    pub fn build(&self) -> Result<SuperModule, ModuleError> {
        let parts = self
            .expanded()
            .iter()
            .map(make_indecomposable)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(super::direct_sum_all(&parts))
    }

    pub fn dim_table(&self) -> Result<DimTable, ModuleError> {
        let mut t = DimTable::new();
        for (k, v) in self.iter() {
            let d = make_indecomposable(k)?.dim_table();
            for _ in 0..v {
                t.merge(&d);
            }
        }
        Ok(t)
    }
}

impl FromIterator<IndecompId> for Multiset {
    fn from_iter<I: IntoIterator<Item = IndecompId>>(iter: I) -> Self {
        let mut m = Multiset::new();
        for id in iter {
            m.insert(id, 1);
        }
        m
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.expanded().iter().map(|id| id.to_string()).collect();
        f.write_str(&parts.join(" (+) "))
    }
}

impl Serialize for Multiset {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.expanded().iter().map(|id| id.to_string()).collect();
        v.serialize(s)
    }
}

struct Builder {
    basis: Vec<BasisVector>,
    x: Vec<(usize, usize, Rational)>,
    y: Vec<(usize, usize, Rational)>,
}

impl Builder {
    fn new() -> Self {
        Builder { basis: Vec::new(), x: Vec::new(), y: Vec::new() }
    }

    fn vec(&mut self, weight: Rational, parity: Parity, charge: Rational) -> usize {
        self.basis.push(BasisVector { name: String::new(), weight, parity, charge });
        self.basis.len() - 1
    }

    /// x(from) = coef * to
    fn x(&mut self, from: usize, to: usize, coef: Rational) {
        self.x.push((to, from, coef));
    }

    fn y(&mut self, from: usize, to: usize, coef: Rational) {
        self.y.push((to, from, coef));
    }

    fn finish(self) -> SuperModule {
        let n = self.basis.len();
        let mut x = Matrix::zeros(n, n);
        let mut y = Matrix::zeros(n, n);
        for (i, j, v) in self.x {
            x.set(i, j, v);
        }
        for (i, j, v) in self.y {
            y.set(i, j, v);
        }
        SuperModule::new(self.basis, x, y).expect("indecomposable diagrams satisfy the relations")
    }
}

fn build_x(n: i64) -> SuperModule {
    // tops t_i even at -n+1/2+2i, bottoms b_i odd at -n+3/2+2i; x t_i = b_i, y t_i = b_{i-1}
    let mut b = Builder::new();
    let tops: Vec<usize> = (0..n).map(|i| b.vec(half(-2 * n + 1 + 4 * i), Parity::Even, int(0))).collect();
    let bots: Vec<usize> = (0..n).map(|i| b.vec(half(-2 * n + 3 + 4 * i), Parity::Odd, int(0))).collect();
    for i in 0..n as usize {
        b.x(tops[i], bots[i], Rational::one());
        if i > 0 {
            b.y(tops[i], bots[i - 1], Rational::one());
        }
    }
    b.finish()
}

fn build_y(n: i64) -> SuperModule {
    // socle s_i even at -n+1/2+2i, tops u_i odd at -n+3/2+2i; y u_i = s_i, x u_i = s_{i+1}
    let mut b = Builder::new();
    let soc: Vec<usize> = (0..n).map(|i| b.vec(half(-2 * n + 1 + 4 * i), Parity::Even, int(0))).collect();
    let tops: Vec<usize> = (0..n).map(|i| b.vec(half(-2 * n + 3 + 4 * i), Parity::Odd, int(0))).collect();
    for i in 0..n as usize {
        b.y(tops[i], soc[i], Rational::one());
        if i + 1 < n as usize {
            b.x(tops[i], soc[i + 1], Rational::one());
        }
    }
    b.finish()
}

fn build_w(n: i64) -> SuperModule {
    // tops t_0..t_n even at -n+2i, bottoms b_1..b_n odd at -n+2i-1;
    // x t_i = b_{i+1}, y t_i = b_i
    let mut b = Builder::new();
    let tops: Vec<usize> = (0..=n).map(|i| b.vec(int(-n + 2 * i), Parity::Even, int(0))).collect();
    let bots: Vec<usize> = (1..=n).map(|i| b.vec(int(-n + 2 * i - 1), Parity::Odd, int(0))).collect();
    for i in 0..=n as usize {
        if i < n as usize {
            b.x(tops[i], bots[i], Rational::one());
        }
        if i >= 1 {
            b.y(tops[i], bots[i - 1], Rational::one());
        }
    }
    b.finish()
}

fn build_p() -> SuperModule {
    let mut b = Builder::new();
    let top = b.vec(int(0), Parity::Even, int(0));
    let lo = b.vec(int(-1), Parity::Odd, int(0));
    let hi = b.vec(int(1), Parity::Odd, int(0));
    let bottom = b.vec(int(0), Parity::Even, int(0));
    b.y(top, lo, Rational::one());
    b.x(top, hi, Rational::one());
    b.x(lo, bottom, Rational::one());
    b.y(hi, bottom, -Rational::one());
    b.finish()
}

fn build_charged(g: &Rational) -> SuperModule {
    let mut b = Builder::new();
    let v = b.vec(int(0), Parity::Even, g.clone());
    let w = b.vec(int(1), Parity::Odd, g.clone());
    b.x(v, w, Rational::one());
    b.y(w, v, g.clone());
    b.finish()
}

/// Builds the indecomposable with the fixed sign conventions, basis sorted by
/// (weight, parity) and named `label@w=weight#k`.
pub fn make_indecomposable(id: &IndecompId) -> Result<SuperModule, ModuleError> {
    id.validate()?;
    let base = match &id.kind {
        IndecompKind::P => build_p(),
        IndecompKind::X(n) => build_x(*n as i64),
        IndecompKind::Y(n) => build_y(*n as i64),
        IndecompKind::W(n) if *n >= 0 => build_w(*n),
        IndecompKind::W(n) => dual(&build_w(-n)),
        IndecompKind::Charged(g) => build_charged(g),
    };
    let mut m = twist(&base, &id.twist);
    if id.parity_shift {
        m = parity_shift(&m);
    }
    let m = m.sorted();
    let label = id.to_string().replace(' ', "");
    let mut seen: BTreeMap<Rational, usize> = BTreeMap::new();
    let names: Vec<String> = m
        .basis()
        .iter()
        .map(|b| {
            let k = seen.entry(b.weight.clone()).or_insert(0);
            *k += 1;
            format!("{label}@w={}#{}", fmt_rational(&b.weight), *k - 1)
        })
        .collect();
    Ok(m.with_names(|i, _| names[i].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn make(kind: IndecompKind) -> SuperModule {
        make_indecomposable(&IndecompId::new(kind)).unwrap()
    }

    #[test]
    fn trivial_module() {
        let w0 = make(IndecompKind::W(0));
        assert_eq!(w0.sdims(), (1, 0));
        assert_eq!(w0.basis()[0].weight, int(0));
        assert_eq!(w0.basis()[0].name, "W(0)@w=0#0");
    }

    #[test]
    fn x2_weights() {
        let x2 = make(IndecompKind::X(2));
        let got: Vec<(Rational, Parity)> = x2.basis().iter().map(|b| (b.weight.clone(), b.parity)).collect();
        assert_eq!(
            got,
            vec![
                (half(-3), Parity::Even),
                (half(-1), Parity::Odd),
                (half(1), Parity::Even),
                (half(3), Parity::Odd)
            ]
        );
    }

    #[test]
    fn projective_diamond() {
        let p = make(IndecompKind::P);
        assert_eq!(p.sdims(), (2, 2));
        let t = p.dim_table();
        assert_eq!(t.get(&int(0), Parity::Even), 2);
        assert_eq!(t.get(&int(1), Parity::Odd), 1);
        assert_eq!(t.get(&int(-1), Parity::Odd), 1);
        assert!(!p.x().is_zero() && !p.y().is_zero());
    }

    #[test]
    fn dimensions_of_families() {
        for n in 1..=5u32 {
            assert_eq!(make(IndecompKind::X(n)).sdims(), (n as usize, n as usize));
            assert_eq!(make(IndecompKind::Y(n)).sdims(), (n as usize, n as usize));
        }
        for n in -5..=5i64 {
            let k = n.unsigned_abs() as usize;
            assert_eq!(make(IndecompKind::W(n)).sdims(), (k + 1, k));
        }
    }

    #[test]
    fn invalid_sizes() {
        assert!(make_indecomposable(&IndecompId::new(IndecompKind::X(0))).is_err());
        assert!(make_indecomposable(&IndecompId::new(IndecompKind::Charged(int(0)))).is_err());
    }

    #[test]
    fn display_forms() {
        let id = IndecompId::new(IndecompKind::X(2)).twisted(half(1)).shifted();
        assert_eq!(id.to_string(), "Pi X(2)_{1/2}");
        assert_eq!(IndecompId::new(IndecompKind::W(-1)).to_string(), "W(-1)");
    }
}
