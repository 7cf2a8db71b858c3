use serde::Serialize;
use std::collections::BTreeSet;

use super::diagram::{weight_diagram, HalfIntWeight, Symbol, WeightDiagram};
use crate::linalg::rational::{fmt_rational, int, to_i64, Rational};

/// An arc from a cross at `from / 2` to an empty position at `to / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub from: i64,
    pub to: i64,
}

impl Arc {
    /// `other` lies strictly under `self`.
    pub fn covers(&self, other: &Arc) -> bool {
        self.from < other.from && other.to < self.to
    }
}

impl Serialize for Arc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let h = |a: i64| fmt_rational(&Rational::new(a.into(), 2.into()));
        (h(self.from), h(self.to)).serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcDiagram {
    pub diagram: WeightDiagram,
    pub arcs: Vec<Arc>,
}

impl ArcDiagram {
    pub fn is_maximal(&self, arc: &Arc) -> bool {
        !self.arcs.iter().any(|a| a.covers(arc))
    }

    pub fn maximal_arcs(&self) -> Vec<Arc> {
        self.arcs.iter().copied().filter(|a| self.is_maximal(a)).collect()
    }

    fn endpoints(&self) -> BTreeSet<i64> {
        self.arcs.iter().map(|a| a.to).collect()
    }

    /// Numerator one past the last position that matters for drawing.
    pub fn extent(&self) -> i64 {
        self.arcs.iter().map(|a| a.to).max().unwrap_or(0).max(self.diagram.extent())
    }

    /// Symbols on one line, arcs drawn above them with nested arcs lower.
    pub fn render(&self) -> String {
        let len = ((self.extent() + 1) / 2).max(1);
        let col = |a: i64| ((a - 1) / 2 * 4) as usize;
        let width = col(2 * len - 1) + 1;
        let mut height = vec![0usize; self.arcs.len()];
        let mut order: Vec<usize> = (0..self.arcs.len()).collect();
        order.sort_by_key(|&i| self.arcs[i].to - self.arcs[i].from);
        for &i in &order {
            let inner = (0..self.arcs.len()).filter(|&j| self.arcs[i].covers(&self.arcs[j])).map(|j| height[j]).max();
            height[i] = inner.unwrap_or(0) + 1;
        }
        let top = height.iter().copied().max().unwrap_or(0);
        let mut rows = vec![vec![' '; width]; top];
        for (i, arc) in self.arcs.iter().enumerate() {
            let (a, b) = (col(arc.from), col(arc.to));
            let h = height[i];
            let row = &mut rows[top - h];
            for c in row.iter_mut().take(b).skip(a + 1) {
                *c = '-';
            }
            row[a] = ',';
            row[b] = '.';
            for r in (top - h + 1)..top {
                rows[r][a] = '|';
                rows[r][b] = '|';
            }
        }
        let mut out: Vec<String> = rows.into_iter().map(|r| r.into_iter().collect::<String>().trim_end().to_string()).collect();
        let mut line = vec![' '; width];
        for i in 0..len {
            line[col(2 * i + 1)] = self.diagram.at(2 * i + 1).ascii();
        }
        out.push(line.into_iter().collect::<String>().trim_end().to_string());
        out.join("\n")
    }
}

/// Crosses from right to left, each joined to the nearest unused empty position on
/// its right. The result has no crossings and no free empty position under an arc.
pub fn arc_diagram(d: &WeightDiagram) -> ArcDiagram {
    let mut used = BTreeSet::new();
    let mut arcs = Vec::new();
    for x in d.crosses().into_iter().rev() {
        let mut to = x + 2;
        while d.at(to) != Symbol::Empty || used.contains(&to) {
            to += 2;
        }
        used.insert(to);
        arcs.push(Arc { from: x, to });
    }
    arcs.sort();
    ArcDiagram { diagram: d.clone(), arcs }
}

/// The arc conditions checked directly: arcs end on empty positions to the right,
/// do not cross, and every empty position under an arc is an endpoint.
pub fn satisfies_arc_rules(d: &WeightDiagram, arcs: &[Arc]) -> bool {
    let ends: BTreeSet<i64> = arcs.iter().map(|a| a.to).collect();
    if ends.len() != arcs.len() {
        return false;
    }
    for a in arcs {
        if d.at(a.from) != Symbol::Cross || d.at(a.to) != Symbol::Empty || a.to <= a.from {
            return false;
        }
        for b in arcs {
            if a.from < b.from && b.from < a.to && a.to < b.to {
                return false;
            }
        }
        let mut p = a.from + 2;
        while p < a.to {
            if d.at(p) == Symbol::Empty && !ends.contains(&p) {
                return false;
            }
            p += 2;
        }
    }
    true
}

/// Every arc set satisfying [`satisfies_arc_rules`], by exhaustive search over
/// assignments of crosses to empty positions up to `extent + 2 * crosses`.
pub fn all_arc_sets(d: &WeightDiagram) -> Vec<Vec<Arc>> {
    let crosses = d.crosses();
    let limit = d.extent() + 2 * crosses.len() as i64 + 2;
    let empties: Vec<i64> = (0..)
        .map(|i| 2 * i + 1)
        .take_while(|&a| a <= limit)
        .filter(|&a| d.at(a) == Symbol::Empty)
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(d: &WeightDiagram, crosses: &[i64], empties: &[i64], current: &mut Vec<Arc>, out: &mut Vec<Vec<Arc>>) {
        if current.len() == crosses.len() {
            if satisfies_arc_rules(d, current) {
                let mut s = current.clone();
                s.sort();
                out.push(s);
            }
            return;
        }
        let x = crosses[current.len()];
        for &e in empties.iter().filter(|&&e| e > x) {
            // crosses are placed left to right, so an earlier arc ending inside (x, e) crosses
            if current.iter().any(|a| a.to == e || (a.from < x && x < a.to && a.to < e)) {
                continue;
            }
            current.push(Arc { from: x, to: e });
            go(d, crosses, empties, current, out);
            current.pop();
        }
    }
    go(d, &crosses, &empties, &mut current, &mut out);
    out
}

/// Free (non-endpoint) empty positions strictly left of `pos / 2`.
pub fn ell_in(ad: &ArcDiagram, pos: i64) -> usize {
    let ends = ad.endpoints();
    (0..)
        .map(|i| 2 * i + 1)
        .take_while(|&a| a < pos)
        .filter(|&a| ad.diagram.at(a) == Symbol::Empty && !ends.contains(&a))
        .count()
}

pub fn ell(lambda: &HalfIntWeight, pos: &Rational) -> usize {
    let a = to_i64(&(pos * int(2))).expect("position is a half-integer");
    ell_in(&arc_diagram(&weight_diagram(lambda)), a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Multiplicity {
    Zero,
    OneOne,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum QmultError {
    #[error("mu has {got} entries, expected {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("pages are numbered from 1")]
    ZeroPage,
}

/// The maximal arc of `lambda` whose removal (with its cross) leaves the arc diagram
/// of `mu`, if there is one.
pub fn removed_arc(lambda: &HalfIntWeight, mu: &HalfIntWeight) -> Option<Arc> {
    let la = arc_diagram(&weight_diagram(lambda));
    let mu_d = weight_diagram(mu);
    let ma = arc_diagram(&mu_d);
    la.maximal_arcs().into_iter().find(|arc| {
        let rest: Vec<Arc> = la.arcs.iter().copied().filter(|a| a != arc).collect();
        la.diagram.with(arc.from, Symbol::Empty) == mu_d && rest == ma.arcs
    })
}

/// Multiplicity of `L(mu)` in the k-th page for `x, y`: (1|1) when `mu` comes from
/// removing a maximal arc with cross at `j / 2` and `k <= ell(lambda, j / 2) + 1`.
pub fn ds_multiplicity(lambda: &HalfIntWeight, mu: &HalfIntWeight, k: usize) -> Result<Multiplicity, QmultError> {
    if k == 0 {
        return Err(QmultError::ZeroPage);
    }
    if mu.len() + 2 != lambda.len() {
        return Err(QmultError::SizeMismatch { expected: lambda.len().saturating_sub(2), got: mu.len() });
    }
    let Some(arc) = removed_arc(lambda, mu) else {
        return Ok(Multiplicity::Zero);
    };
    let la = arc_diagram(&weight_diagram(lambda));
    Ok(if k <= ell_in(&la, arc.from) + 1 { Multiplicity::OneOne } else { Multiplicity::Zero })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::half;
    use crate::qn::diagram::weight_of_diagram;

    fn worked() -> HalfIntWeight {
        HalfIntWeight::parse("15/2,13/2,5/2,1/2,-1/2,-3/2,-5/2,-15/2").unwrap()
    }

    fn arc(a: i64, b: i64) -> Arc {
        Arc { from: a, to: b }
    }

    #[test]
    fn worked_example_arcs() {
        let ad = arc_diagram(&weight_diagram(&worked()));
        assert_eq!(ad.arcs, vec![arc(1, 9), arc(5, 7), arc(15, 17)]);
        assert_eq!(ad.maximal_arcs(), vec![arc(1, 9), arc(15, 17)]);
        assert_eq!(all_arc_sets(&ad.diagram), vec![ad.arcs.clone()]);
    }

    #[test]
    fn no_crosses_no_arcs() {
        let d = WeightDiagram::from_ascii("o>o<").unwrap();
        assert!(arc_diagram(&d).arcs.is_empty());
    }

    #[test]
    fn adjacent_crosses_nest() {
        let d = WeightDiagram::from_ascii("xxoo").unwrap();
        assert_eq!(arc_diagram(&d).arcs, vec![arc(1, 7), arc(3, 5)]);
        assert_eq!(all_arc_sets(&d).len(), 1);
    }

    #[test]
    fn ell_examples() {
        let w = worked();
        assert_eq!(ell(&w, &half(13)), 1);
        assert_eq!(ell(&w, &half(15)), 1);
        assert_eq!(ell(&w, &half(1)), 0);
        let plain = HalfIntWeight::parse("5/2").unwrap();
        assert_eq!(ell(&plain, &half(9)), 3);
    }

    #[test]
    fn multiplicity_threshold() {
        let w = worked();
        let d = weight_diagram(&w);
        let mu = weight_of_diagram(&d.with(15, Symbol::Empty));
        assert_eq!(ds_multiplicity(&w, &mu, 1), Ok(Multiplicity::OneOne));
        assert_eq!(ds_multiplicity(&w, &mu, 2), Ok(Multiplicity::OneOne));
        assert_eq!(ds_multiplicity(&w, &mu, 3), Ok(Multiplicity::Zero));
        // the arc 5/2 -> 7/2 sits under 1/2 -> 9/2
        let inner = weight_of_diagram(&d.with(5, Symbol::Empty));
        assert_eq!(ds_multiplicity(&w, &inner, 1), Ok(Multiplicity::Zero));
        assert!(ds_multiplicity(&w, &w, 1).is_err());
        assert_eq!(ds_multiplicity(&w, &mu, 0), Err(QmultError::ZeroPage));
    }

    #[test]
    fn render_worked_example() {
        let ad = arc_diagram(&weight_diagram(&worked()));
        let expected = [
            ",---------------.",
            "|       ,---.   |           ,---.",
            "x   <   x   o   o   o   >   x   o",
        ]
        .join("\n");
        assert_eq!(ad.render(), expected);
    }
}
