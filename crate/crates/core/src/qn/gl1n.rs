use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

use super::lr::{lr_coefficient, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GlKind {
    W,
    X,
    Y,
}

/// `W_{V(label)}(n1; n2)` and the like in the stable category of gl(1|n), with an
/// optional parity shift.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GlBlock {
    pub kind: GlKind,
    pub label: Partition,
    pub n1: i64,
    pub n2: i64,
    pub parity_shift: bool,
}

impl GlBlock {
    pub fn new(kind: GlKind, label: Partition, n1: i64, n2: i64) -> Self {
        GlBlock { kind, label, n1, n2, parity_shift: false }
    }

    pub fn shifted(mut self) -> Self {
        self.parity_shift = !self.parity_shift;
        self
    }
}

impl fmt::Display for GlBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pi = if self.parity_shift { "Pi " } else { "" };
        write!(f, "{pi}{:?}_{}({};{})", self.kind, self.label, self.n1, self.n2)
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Gl1nError {
    #[error("{0} needs n1 >= 1")]
    BadIndex(GlBlock),
    #[error("label {label} has more than {rows} rows")]
    TooManyRows { label: Partition, rows: usize },
}

/// The stable decomposition of `a (x) b` for gl(1|n), as multiplicities. Labels range
/// over partitions with at most `n - 1` rows. `X (x) Y` is projective, so the sum is empty.
pub fn stable_tensor_gl1n(a: &GlBlock, b: &GlBlock, n: usize) -> Result<BTreeMap<GlBlock, u64>, Gl1nError> {
    let rows = n.saturating_sub(1);
    for blk in [a, b] {
        if blk.kind != GlKind::W && blk.n1 < 1 {
            return Err(Gl1nError::BadIndex(blk.clone()));
        }
        if blk.label.rows() > rows {
            return Err(Gl1nError::TooManyRows { label: blk.label.clone(), rows });
        }
    }
    // put W first, and the smaller n1 first for X (x) X and Y (x) Y
    let (a, b) = if b.kind == GlKind::W && a.kind != GlKind::W || a.kind == b.kind && a.n1 > b.n1 { (b, a) } else { (a, b) };
    let shift = a.parity_shift ^ b.parity_shift;
    let (n1, n2, m1, m2) = (a.n1, a.n2, b.n1, b.n2);
    let shapes: Vec<(GlKind, i64, i64, bool)> = match (a.kind, b.kind) {
        (GlKind::W, GlKind::W) => vec![(GlKind::W, n1 + m1, n2 + m2, false)],
        (GlKind::W, GlKind::X) => vec![(GlKind::X, m1, m2 - n1 + n2, false)],
        (GlKind::W, GlKind::Y) => vec![(GlKind::Y, m1, m2 + n1 + n2, false)],
        (GlKind::X, GlKind::X) | (GlKind::Y, GlKind::Y) => {
            vec![(a.kind, n1, n2 + m2, false), (a.kind, n1, n2 + m2 + 2 * m1 - 1, true)]
        }
        _ => vec![],
    };
    let mut out = BTreeMap::new();
    if shapes.is_empty() {
        return Ok(out);
    }
    for gamma in Partition::all_of(a.label.size() + b.label.size(), rows) {
        let c = lr_coefficient(&a.label, &b.label, &gamma);
        if c == 0 {
            continue;
        }
        for &(kind, p1, p2, pi) in &shapes {
            let blk = GlBlock { kind, label: gamma.clone(), n1: p1, n2: p2, parity_shift: shift ^ pi };
            *out.entry(blk).or_insert(0) += c;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn w_times_w() {
        let a = GlBlock::new(GlKind::W, p(&[1]), 1, 0);
        let b = GlBlock::new(GlKind::W, p(&[1]), 2, 1);
        let out = stable_tensor_gl1n(&a, &b, 3).unwrap();
        let expected: BTreeMap<_, _> =
            [(GlBlock::new(GlKind::W, p(&[2]), 3, 1), 1), (GlBlock::new(GlKind::W, p(&[1, 1]), 3, 1), 1)].into();
        assert_eq!(out, expected);
        // gl(1) has no room for (1,1)
        let out = stable_tensor_gl1n(&a, &b, 2).unwrap();
        assert_eq!(out.len(), 1);
    }

    #[test]
    fn trivial_label_is_identity() {
        let one = GlBlock::new(GlKind::W, Partition::empty(), 0, 0);
        for kind in [GlKind::W, GlKind::X, GlKind::Y] {
            let b = GlBlock::new(kind, p(&[2, 1]), 2, -1).shifted();
            let expected: BTreeMap<_, _> = [(b.clone(), 1)].into();
            assert_eq!(stable_tensor_gl1n(&one, &b, 4).unwrap(), expected);
            assert_eq!(stable_tensor_gl1n(&b, &one, 4).unwrap(), expected);
        }
    }

    #[test]
    fn x_times_x_two_families() {
        let a = GlBlock::new(GlKind::X, Partition::empty(), 3, 1);
        let b = GlBlock::new(GlKind::X, Partition::empty(), 1, 2);
        let out = stable_tensor_gl1n(&a, &b, 2).unwrap();
        let expected: BTreeMap<_, _> = [
            (GlBlock::new(GlKind::X, Partition::empty(), 1, 3), 1),
            (GlBlock::new(GlKind::X, Partition::empty(), 1, 8).shifted(), 1),
        ]
        .into();
        assert_eq!(out, expected);
    }

    #[test]
    fn x_times_y_vanishes_and_errors() {
        let x = GlBlock::new(GlKind::X, Partition::empty(), 1, 0);
        let y = GlBlock::new(GlKind::Y, Partition::empty(), 1, 0);
        assert!(stable_tensor_gl1n(&x, &y, 2).unwrap().is_empty());
        let bad = GlBlock::new(GlKind::X, Partition::empty(), 0, 0);
        assert!(stable_tensor_gl1n(&bad, &y, 2).is_err());
        assert!(stable_tensor_gl1n(&GlBlock::new(GlKind::W, p(&[1, 1]), 0, 0), &y, 2).is_err());
    }
}
