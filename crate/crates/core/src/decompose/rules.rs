use serde::Serialize;

use super::{decompose, DecomposeError};
use crate::linalg::rational::{half, int};
use crate::supermod::{make_indecomposable, tensor, IndecompId, IndecompKind, Multiset};

/// One tensor product with its expected non-projective part.
#[derive(Clone, Debug, Serialize)]
pub struct TensorRuleCase {
    pub rule: u8,
    pub left: IndecompId,
    pub right: IndecompId,
    pub expected: Multiset,
    pub found: Multiset,
    pub certified: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TensorRuleReport {
    pub max_n: u32,
    pub cases: Vec<TensorRuleCase>,
}

impl TensorRuleReport {
    pub fn all_hold(&self) -> bool {
        self.cases.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &TensorRuleCase> + '_ {
        self.cases.iter().filter(|c| !c.holds)
    }
}

fn ind(kind: IndecompKind) -> IndecompId {
    IndecompId::new(kind)
}

/// The six rules as (rule, left, right, expected non-projective part).
fn rule_table(max_n: u32) -> Vec<(u8, IndecompId, IndecompId, Multiset)> {
    let n = max_n as i64;
    let mut out = Vec::new();
    for a in -n..=n {
        for b in -n..=n {
            out.push((1, ind(IndecompKind::W(a)), ind(IndecompKind::W(b)), [ind(IndecompKind::W(a + b))].into_iter().collect()));
        }
    }
    for a in -n..=n {
        for m in 1..=max_n {
            let x = [ind(IndecompKind::X(m)).twisted(int(-a))].into_iter().collect();
            out.push((2, ind(IndecompKind::W(a)), ind(IndecompKind::X(m)), x));
            let y = [ind(IndecompKind::Y(m)).twisted(int(a))].into_iter().collect();
            out.push((3, ind(IndecompKind::W(a)), ind(IndecompKind::Y(m)), y));
        }
    }
    for m in 1..=max_n {
        for k in m..=max_n {
            let k2 = 2 * k as i64;
            for (rule, kind) in [(4, IndecompKind::X as fn(u32) -> IndecompKind), (5, IndecompKind::Y)] {
                let expected = [
                    ind(kind(m)).twisted(half(1 - k2)),
                    ind(kind(m)).twisted(half(k2 - 1)).shifted(),
                ]
                .into_iter()
                .collect();
                out.push((rule, ind(kind(m)), ind(kind(k)), expected));
            }
        }
    }
    for a in 1..=max_n {
        for b in 1..=max_n {
            out.push((6, ind(IndecompKind::X(a)), ind(IndecompKind::Y(b)), Multiset::new()));
        }
    }
    out
}

/// Decomposes every product covered by the six rules with indices up to `max_n`
/// and compares non-projective parts.
pub fn check_tensor_rules(max_n: u32) -> Result<TensorRuleReport, DecomposeError> {
    let mut cases = Vec::new();
    for (rule, left, right, expected) in rule_table(max_n) {
        let v = tensor(&make_indecomposable(&left)?, &make_indecomposable(&right)?);
        let report = decompose(&v)?;
        let found = report.summands.non_projective();
        let holds = report.certified && found == expected;
        cases.push(TensorRuleCase { rule, left, right, expected, found, certified: report.certified, holds });
    }
    Ok(TensorRuleReport { max_n, cases })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(rule: u8, l: IndecompId, r: IndecompId) -> Multiset {
        let v = tensor(&make_indecomposable(&l).unwrap(), &make_indecomposable(&r).unwrap());
        let rep = decompose(&v).unwrap();
        assert!(rep.certified, "rule {rule}");
        rep.summands.non_projective()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(
            single(1, ind(IndecompKind::W(2)), ind(IndecompKind::W(3))),
            [ind(IndecompKind::W(5))].into_iter().collect()
        );
        assert_eq!(
            single(2, ind(IndecompKind::W(1)), ind(IndecompKind::X(2))),
            [ind(IndecompKind::X(2)).twisted(int(-1))].into_iter().collect()
        );
        assert_eq!(
            single(4, ind(IndecompKind::X(1)), ind(IndecompKind::X(2))),
            [ind(IndecompKind::X(1)).twisted(half(-3)), ind(IndecompKind::X(1)).twisted(half(3)).shifted()]
                .into_iter()
                .collect()
        );
    }

    #[test]
    fn small_window_holds() {
        let r = check_tensor_rules(2).unwrap();
        let bad: Vec<_> = r.failures().map(|c| format!("{} (x) {}: {}", c.left, c.right, c.found)).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }
}
