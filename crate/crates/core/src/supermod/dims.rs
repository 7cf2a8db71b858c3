use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

use super::Parity;
use crate::linalg::rational::{fmt_rational, Rational};

/// Dimension per (weight, parity); zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimTable(BTreeMap<(Rational, Parity), usize>);

impl DimTable {
    pub fn new() -> Self {
        DimTable(BTreeMap::new())
    }

    pub fn add(&mut self, weight: Rational, parity: Parity, n: usize) {
        if n > 0 {
            *self.0.entry((weight, parity)).or_insert(0) += n;
        }
    }

    pub fn get(&self, weight: &Rational, parity: Parity) -> usize {
        self.0.get(&(weight.clone(), parity)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Rational, Parity, usize)> + '_ {
        self.0.iter().map(|((w, p), &n)| (w, *p, n))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    /// (even, odd) totals.
    pub fn sdims(&self) -> (usize, usize) {
        let mut out = (0, 0);
        for ((_, p), n) in &self.0 {
            match p {
                Parity::Even => out.0 += n,
                Parity::Odd => out.1 += n,
            }
        }
        out
    }

    pub fn superdim(&self) -> i64 {
        let (e, o) = self.sdims();
        e as i64 - o as i64
    }

    pub fn merge(&mut self, other: &DimTable) {
        for (w, p, n) in other.iter() {
            self.add(w.clone(), p, n);
        }
    }

    pub fn plus(&self, other: &DimTable) -> DimTable {
        let mut t = self.clone();
        t.merge(other);
        t
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &DimTable) -> bool {
        self.iter().all(|(w, p, n)| n <= other.get(w, p))
    }

    /// Pointwise difference, `None` if some entry would go negative.
    pub fn minus(&self, other: &DimTable) -> Option<DimTable> {
        if !other.le(self) {
            return None;
        }
        let mut t = DimTable::new();
        for (w, p, n) in self.iter() {
            t.add(w.clone(), p, n - other.get(w, p));
        }
        Some(t)
    }

    pub fn shifted(&self, r: &Rational) -> DimTable {
        let mut t = DimTable::new();
        for (w, p, n) in self.iter() {
            t.add(w + r, p, n);
        }
        t
    }

    pub fn parity_flipped(&self) -> DimTable {
        let mut t = DimTable::new();
        for (w, p, n) in self.iter() {
            t.add(w.clone(), p.flip(), n);
        }
        t
    }

    pub fn negated(&self) -> DimTable {
        let mut t = DimTable::new();
        for (w, p, n) in self.iter() {
            t.add(-w, p, n);
        }
        t
    }

    /// Convolution, the dimension table of a tensor product.
    pub fn convolve(&self, other: &DimTable) -> DimTable {
        let mut t = DimTable::new();
        for (w1, p1, n1) in self.iter() {
            for (w2, p2, n2) in other.iter() {
                t.add(w1 + w2, p1.add(p2), n1 * n2);
            }
        }
        t
    }

    /// Lowest (weight, parity) slot.
    pub fn first(&self) -> Option<(Rational, Parity)> {
        self.0.keys().next().cloned()
    }

    pub fn weights(&self) -> impl Iterator<Item = &Rational> + '_ {
        self.0.keys().map(|(w, _)| w)
    }
}

impl FromIterator<(Rational, Parity, usize)> for DimTable {
    fn from_iter<I: IntoIterator<Item = (Rational, Parity, usize)>>(iter: I) -> Self {
        let mut t = DimTable::new();
        for (w, p, n) in iter {
            t.add(w, p, n);
        }
        t
    }
}

impl fmt::Display for DimTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(w, p, n)| format!("{}{}^{}", fmt_rational(w), if p == Parity::Even { "e" } else { "o" }, n))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Serialize)]
struct Entry {
    #[serde(with = "crate::linalg::rational::serde_str")]
    weight: Rational,
    parity: Parity,
    dim: usize,
}

impl Serialize for DimTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (w, p, n) in self.iter() {
            seq.serialize_element(&Entry { weight: w.clone(), parity: p, dim: n })?;
        }
        seq.end()
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{half, int};

    #[test]
    fn arithmetic() {
        let a: DimTable = [(int(0), Parity::Even, 2), (int(1), Parity::Odd, 1)].into_iter().collect();
        let b: DimTable = [(int(0), Parity::Even, 1)].into_iter().collect();
        assert_eq!(a.minus(&b).unwrap().total(), 2);
        assert!(b.minus(&a).is_none());
        assert_eq!(a.shifted(&half(1)).get(&half(3), Parity::Odd), 1);
        assert_eq!(a.convolve(&a).sdims(), (5, 4));
        assert_eq!(a.superdim(), 1);
    }
}
