//! Krull-Schmidt decomposition into the indecomposables P, X(n), Y(n), W(n) (with
//! twists and parity shifts) plus the charged simple projectives.

mod rules;

pub use rules::{check_tensor_rules, TensorRuleCase, TensorRuleReport};

use num_traits::Zero;
use serde::Serialize;
use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use thiserror::Error;

use crate::homspace::{hom_dim, Equivariance, MapParity};
use crate::linalg::rational::{fmt_rational, int, is_integer, to_i64};
use crate::linalg::{solve, Matrix, Rational};
use crate::pages::{closed_form_page_dims, page_sequence, Order};
use crate::supermod::{
    c_invariants, make_indecomposable, DimTable, IndecompId, IndecompKind, ModuleError, Multiset, Parity, SuperModule,
};

#[derive(Debug, Error)]
pub enum DecomposeError {
    #[error("hom matrix has rank {rank} on {candidates} candidates in block {block}")]
    RankDeficient { block: String, candidates: usize, rank: usize },
    #[error("hom counts admit no solution in block {0}")]
    Inconsistent(String),
    #[error("multiplicity {value} of {id} is not a nonnegative integer")]
    NonInteger { id: String, value: String },
    #[error("charge {0} block is not a sum of (1|1) simple projectives")]
    Charged(String),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

/// Outcome of [`decompose`]. `certified` records that the multiplicities are
/// nonnegative integers and that both dimensions and page dimensions of the
/// summands add up to those of the input.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub summands: Multiset,
    pub certified: bool,
    pub dims_match: bool,
    pub pages_match: bool,
    /// Set when hom counts alone were dependent and dimension and page equations
    /// were added to pin down the multiplicities.
    pub page_equations: bool,
}

/// `(fractional part of the weight, (floor(weight) + parity) mod 2)`. x and y
/// preserve it, so a module splits along it.
fn block_key(weight: &Rational, parity: Parity) -> (Rational, i64) {
    let fl = weight.floor();
    let frac = weight - &fl;
    let k = (to_i64(&fl).expect("weights fit in i64") + parity.index() as i64).rem_euclid(2);
    (frac, k)
}

fn key_label(k: &(Rational, i64)) -> String {
    format!("{}+{}", fmt_rational(&k.0), k.1)
}

/// Splits the c-invariant part of `v` into the blocks given by [`block_key`].
fn pgl_blocks(v: &SuperModule) -> Vec<((Rational, i64), SuperModule)> {
    let mut groups: BTreeMap<(Rational, i64), Vec<usize>> = BTreeMap::new();
    for (i, b) in v.basis().iter().enumerate() {
        groups.entry(block_key(&b.weight, b.parity)).or_default().push(i);
    }
    groups.into_iter().map(|(k, idx)| (k, v.permuted(&idx))).collect()
}

/// The charged part by dimension count: the lowest slot of each charge must be the
/// bottom of a simple projective.
fn charged_summands(v: &SuperModule) -> Result<Multiset, DecomposeError> {
    let mut by_charge: BTreeMap<Rational, DimTable> = BTreeMap::new();
    for b in v.basis() {
        if !b.charge.is_zero() {
            by_charge.entry(b.charge.clone()).or_default().add(b.weight.clone(), b.parity, 1);
        }
    }
    let mut out = Multiset::new();
    for (g, mut dims) in by_charge {
        while let Some((w, p)) = dims.first() {
            let k = dims.get(&w, p);
            let id = IndecompId::new(IndecompKind::Charged(g.clone()))
                .twisted(w.clone())
                .with_parity_shift(p == Parity::Odd);
            let one = make_indecomposable(&id)?.dim_table();
            let mut many = DimTable::new();
            for (w, p, n) in one.iter() {
                many.add(w.clone(), p, n * k);
            }
            dims = dims.minus(&many).ok_or_else(|| DecomposeError::Charged(fmt_rational(&g)))?;
            out.insert(id, k);
        }
    }
    Ok(out)
}

/// Untwisted shapes whose weight spread fits inside `spread`.
fn shapes(spread: i64) -> Vec<IndecompKind> {
    let mut out = vec![IndecompKind::P];
    for n in 1..=(spread + 1) {
        out.push(IndecompKind::X(n as u32));
        out.push(IndecompKind::Y(n as u32));
    }
    for n in -(spread / 2)..=(spread / 2) {
        out.push(IndecompKind::W(n));
    }
    out
}

/// Page dimension tables of a module for `r = 0..=depth`, both orders.
struct PageTables {
    depth: usize,
    tables: [Vec<DimTable>; 2],
}

impl PageTables {
    fn new(v: &SuperModule, depth_hint: usize) -> Self {
        let mut tables: [Vec<DimTable>; 2] = Default::default();
        let mut depth = depth_hint;
        let seqs: Vec<_> = Order::BOTH.iter().map(|&o| page_sequence(v, o)).collect();
        for s in &seqs {
            depth = depth.max(s.stable_from);
        }
        for (k, s) in seqs.iter().enumerate() {
            tables[k] = (0..=depth).map(|r| s.dim_table(r)).collect();
        }
        PageTables { depth, tables }
    }

    fn of_multiset(m: &Multiset, depth: usize) -> Result<[Vec<DimTable>; 2], ModuleError> {
        let mut tables: [Vec<DimTable>; 2] = Default::default();
        for (k, &o) in Order::BOTH.iter().enumerate() {
            for r in 0..=depth {
                let mut t = DimTable::new();
                for (id, n) in m.iter() {
                    let one = closed_form_page_dims(id, r, o)?;
                    for (w, p, d) in one.iter() {
                        t.add(w.clone(), p, d * n);
                    }
                }
                tables[k].push(t);
            }
        }
        Ok(tables)
    }
}

/// Candidates for summands of a block: shapes twisted so that their lowest weight is
/// a weight of the block, fitting in its dimension table and in its page tables.
fn candidates(block: &SuperModule, pages: &PageTables) -> Result<Vec<IndecompId>, ModuleError> {
    let dims = block.dim_table();
    let spread = to_i64(&block.weight_spread().ceil()).expect("small spread");
    let mut out = BTreeSet::new();
    for kind in shapes(spread) {
        let base = make_indecomposable(&IndecompId::new(kind.clone()))?;
        let low = base.min_weight().expect("indecomposables are nonzero");
        for w in block.weights() {
            for shift in [false, true] {
                let id = IndecompId::new(kind.clone()).twisted(&w - &low).with_parity_shift(shift);
                let t = base.dim_table().shifted(&(&w - &low));
                let t = if shift { t.parity_flipped() } else { t };
                if !t.le(&dims) {
                    continue;
                }
                let fits = Order::BOTH.iter().enumerate().all(|(k, &o)| {
                    (1..=pages.depth).all(|r| {
                        closed_form_page_dims(&id, r, o).map(|c| c.le(&pages.tables[k][r])).unwrap_or(false)
                    })
                });
                if fits {
                    out.insert(id);
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

type HomKey = (IndecompKind, bool, IndecompKind, bool, Rational);

thread_local! {
    static HOM_CACHE: RefCell<HashMap<HomKey, usize>> = RefCell::new(HashMap::new());
}

/// `dim Hom_gl(a, b)` of even maps, cached on the relative twist.
fn indecomp_hom_dim(a: &IndecompId, b: &IndecompId) -> Result<usize, ModuleError> {
    let key: HomKey = (a.kind.clone(), false, b.kind.clone(), a.parity_shift != b.parity_shift, &b.twist - &a.twist);
    if let Some(d) = HOM_CACHE.with(|c| c.borrow().get(&key).copied()) {
        return Ok(d);
    }
    let ma = make_indecomposable(&IndecompId::new(a.kind.clone()))?;
    let mb = make_indecomposable(
        &IndecompId::new(b.kind.clone()).twisted(key.4.clone()).with_parity_shift(key.3),
    )?;
    let d = hom_dim(&ma, &mb, Equivariance::Gl, MapParity::Even);
    HOM_CACHE.with(|c| c.borrow_mut().insert(key, d));
    Ok(d)
}

/// Rows `sum_j coef(U_j)[slot] m_j = target[slot]`, one per slot of the tables.
fn table_rows(live: &[IndecompId], tables: &[DimTable], target: &DimTable, rows: &mut Vec<Vec<Rational>>, rhs: &mut Vec<Rational>) {
    let mut slots: BTreeSet<(Rational, Parity)> = target.iter().map(|(w, p, _)| (w.clone(), p)).collect();
    for t in tables {
        slots.extend(t.iter().map(|(w, p, _)| (w.clone(), p)));
    }
    for (w, p) in slots {
        rows.push(tables.iter().map(|t| int(t.get(&w, p) as i64)).collect());
        rhs.push(int(target.get(&w, p) as i64));
    }
    debug_assert!(rows.iter().all(|r| r.len() == live.len()));
}

/// Multiplicities in one block, and whether dimension and page equations had to be
/// added because the hom counts alone were not independent.
fn decompose_block(key: &(Rational, i64), block: &SuperModule) -> Result<(Multiset, bool), DecomposeError> {
    let pages = PageTables::new(block, 1);
    let cands = candidates(block, &pages)?;
    let mut live = Vec::new();
    let mut rhs = Vec::new();
    for id in &cands {
        let m = make_indecomposable(id)?;
        let d = hom_dim(&m, block, Equivariance::Gl, MapParity::Even);
        // a summand U forces dim Hom(U, block) > 0
        if d > 0 {
            live.push(id.clone());
            rhs.push(int(d as i64));
        }
    }
    let k = live.len();
    let mut rows = Vec::with_capacity(k);
    for a in &live {
        // row i counts maps U_i -> U_j
        rows.push(live.iter().map(|c| indecomp_hom_dim(a, c).map(|d| int(d as i64))).collect::<Result<Vec<_>, _>>()?);
    }
    let mut system = Matrix::from_rows(rows.clone(), k);
    let mut refined = false;
    if system.rank() < k {
        refined = true;
        let dims: Vec<DimTable> = live.iter().map(|id| make_indecomposable(id).map(|m| m.dim_table())).collect::<Result<_, _>>()?;
        table_rows(&live, &dims, &block.dim_table(), &mut rows, &mut rhs);
        for (t, &o) in Order::BOTH.iter().enumerate() {
            for r in 1..=pages.depth {
                let cf: Vec<DimTable> = live.iter().map(|id| closed_form_page_dims(id, r, o)).collect::<Result<_, _>>()?;
                table_rows(&live, &cf, &pages.tables[t][r], &mut rows, &mut rhs);
            }
        }
        system = Matrix::from_rows(rows, k);
        let rank = system.rank();
        if rank < k {
            return Err(DecomposeError::RankDeficient { block: key_label(key), candidates: k, rank });
        }
    }
    let sol = solve(&system, &rhs).ok_or_else(|| DecomposeError::Inconsistent(key_label(key)))?;
    let mut out = Multiset::new();
    for (id, x) in live.iter().zip(sol) {
        if !is_integer(&x) || x < Rational::zero() {
            return Err(DecomposeError::NonInteger { id: id.to_string(), value: fmt_rational(&x) });
        }
        let n = to_i64(&x).expect("small multiplicity") as usize;
        if n > 0 {
            out.insert(id.clone(), n);
        }
    }
    Ok((out, refined))
}

/// Page dimensions of `v` agree with the closed forms summed over `m`.
pub fn pages_agree(v: &SuperModule, m: &Multiset) -> Result<bool, ModuleError> {
    let depth = m
        .iter()
        .map(|(id, _)| match id.kind {
            IndecompKind::X(n) | IndecompKind::Y(n) => n as usize + 1,
            _ => 1,
        })
        .max()
        .unwrap_or(1);
    let pages = PageTables::new(v, depth);
    Ok(PageTables::of_multiset(m, pages.depth)? == pages.tables)
}

pub fn decompose(v: &SuperModule) -> Result<DecompositionReport, DecomposeError> {
    let mut summands = charged_summands(v)?;
    let mut page_equations = false;
    for (key, block) in pgl_blocks(&c_invariants(v)) {
        let (m, refined) = decompose_block(&key, &block)?;
        summands = summands.union(&m);
        page_equations |= refined;
    }
    let dims_match = summands.dim_table()? == v.dim_table();
    let pages_match = pages_agree(v, &summands)?;
    Ok(DecompositionReport { certified: dims_match && pages_match, dims_match, pages_match, page_equations, summands })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::half;
    use crate::supermod::{direct_sum, random_basis_change, tensor};

    fn id(kind: IndecompKind) -> IndecompId {
        IndecompId::new(kind)
    }

    fn make(id: &IndecompId) -> SuperModule {
        make_indecomposable(id).unwrap()
    }

    #[test]
    fn indecomposables_are_recognized() {
        let ids = [
            id(IndecompKind::W(0)),
            id(IndecompKind::W(-2)).twisted(half(1)),
            id(IndecompKind::X(3)).shifted(),
            id(IndecompKind::Y(1)).twisted(int(2)),
            id(IndecompKind::P).twisted(half(-1)),
            id(IndecompKind::Charged(int(2))).twisted(int(1)),
        ];
        for i in &ids {
            let r = decompose(&make(i)).unwrap();
            assert!(r.certified, "{i}");
            assert_eq!(r.summands, [i.clone()].into_iter().collect::<Multiset>(), "{i}");
        }
    }

    #[test]
    fn scrambled_sum_round_trips() {
        let m: Multiset = [
            id(IndecompKind::X(2)),
            id(IndecompKind::W(-1)).twisted(half(1)).shifted(),
            id(IndecompKind::P),
        ]
        .into_iter()
        .collect();
        let v = random_basis_change(&m.build().unwrap(), 7);
        let r = decompose(&v).unwrap();
        assert!(r.certified);
        assert_eq!(r.summands, m);
    }

    #[test]
    fn x_times_y_is_projective() {
        for (a, b) in [(1, 1), (2, 1), (1, 3)] {
            let v = tensor(&make(&id(IndecompKind::X(a))), &make(&id(IndecompKind::Y(b))));
            let r = decompose(&v).unwrap();
            assert!(r.certified);
            assert!(r.summands.non_projective().is_empty());
        }
    }

    #[test]
    fn additive() {
        let a = tensor(&make(&id(IndecompKind::W(1))), &make(&id(IndecompKind::X(1))));
        let b = make(&id(IndecompKind::Y(2)).twisted(half(1)));
        let ra = decompose(&a).unwrap().summands;
        let rb = decompose(&b).unwrap().summands;
        assert_eq!(decompose(&direct_sum(&a, &b)).unwrap().summands, ra.union(&rb));
    }

    #[test]
    fn block_keys_separate_cosets() {
        assert_eq!(block_key(&half(1), Parity::Even), block_key(&half(3), Parity::Odd));
        assert_ne!(block_key(&half(1), Parity::Even), block_key(&half(1), Parity::Odd));
        assert_ne!(block_key(&int(0), Parity::Even), block_key(&half(1), Parity::Even));
    }
}
