//! Brute-force recomputations used to cross-check the main algorithms. They favor
//! directness over speed and share only the dense linear algebra with the rest of
//! the crate.

use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use thiserror::Error;

use crate::linalg::rational::{ceil_i64, int};
use crate::linalg::{Matrix, Rational};
use crate::pages::Order;
use crate::supermod::{c_invariants, make_indecomposable, DimTable, IndecompId, IndecompKind, Multiset, Parity, SuperModule};

/// Largest module the oracles accept.
pub const ORACLE_MAX_DIM: usize = 60;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("module of dimension {0} is too large for the oracle")]
    TooLarge(usize),
    #[error("module has nonzero central charge")]
    Charged,
    #[error("no multiset of indecomposables matches the fingerprint")]
    NoMatch,
    #[error("fingerprint does not separate {0:?}")]
    Ambiguous(Vec<String>),
}

fn slot_dims(vecs: &[Vec<Rational>], m: &SuperModule) -> DimTable {
    let mut out = DimTable::new();
    for (w, p, _) in m.dim_table().iter() {
        let idx = m.indices_at(w, p);
        let rows: Vec<Vec<Rational>> = vecs.iter().map(|v| idx.iter().map(|&i| v[i].clone()).collect()).collect();
        let rank = Matrix::from_rows(rows, idx.len()).rank();
        out.add(w.clone(), p, rank);
    }
    out
}

/// All `r`-chains at once: unknowns `(v_1, ..., v_r)` in `M^r` with
/// `a v_i = b v_{i+1}` and `a v_r = 0`. Returns the solution basis split into entries.
fn all_chains(m: &SuperModule, r: usize, order: Order) -> Vec<Vec<Vec<Rational>>> {
    let n = m.dim();
    let (a, b) = match order {
        Order::Yx => (m.y(), m.x()),
        Order::Xy => (m.x(), m.y()),
    };
    let mut rows = Vec::new();
    for i in 0..r {
        for t in 0..n {
            let mut row = vec![Rational::zero(); r * n];
            for j in 0..n {
                row[i * n + j] = a.get(t, j).clone();
                if i + 1 < r {
                    row[(i + 1) * n + j] = -b.get(t, j).clone();
                }
            }
            rows.push(row);
        }
    }
    let sys = Matrix::from_rows(rows, r * n);
    sys.kernel()
        .basis()
        .iter()
        .map(|sol| (0..r).map(|i| sol[i * n..(i + 1) * n].to_vec()).collect())
        .collect()
}

/// Dimension table of `E_r = Z_r / B_r` from one dense system per page.
pub fn oracle_pages(m: &SuperModule, r: usize, order: Order) -> Result<DimTable, OracleError> {
    if m.dim() > ORACLE_MAX_DIM {
        return Err(OracleError::TooLarge(m.dim()));
    }
    let m = c_invariants(m);
    if r == 0 {
        return Ok(m.dim_table());
    }
    let n = m.dim();
    let (a, b) = match order {
        Order::Yx => (m.y(), m.x()),
        Order::Xy => (m.x(), m.y()),
    };
    let z: Vec<Vec<Rational>> = all_chains(&m, r, order).into_iter().map(|c| c[r - 1].clone()).collect();
    let mut bvecs: Vec<Vec<Rational>> = (0..n).map(|j| a.col(j)).collect();
    if r >= 2 {
        bvecs.extend(all_chains(&m, r - 1, order).into_iter().map(|c| b.mul_vec(&c[0])));
    }
    let zd = slot_dims(&z, &m);
    let bd = slot_dims(&bvecs, &m);
    Ok(zd.minus(&bd).expect("boundaries lie in cycles"))
}

/// Ranks of `x`, `y`, `yx`, `xy`, `xyx`, ... restricted to each (weight, parity)
/// slot, up to words of length `len`.
fn word_ranks(m: &SuperModule, len: usize) -> BTreeMap<(String, Rational, Parity), usize> {
    let mut out = BTreeMap::new();
    for start in ['x', 'y'] {
        let mut word = String::new();
        let mut mat = Matrix::identity(m.dim());
        for k in 0..len {
            let letter = if (k % 2 == 0) == (start == 'x') { 'x' } else { 'y' };
            let op = if letter == 'x' { m.x() } else { m.y() };
            mat = op.mul(&mat);
            word.insert(0, letter);
            for (w, p, _) in m.dim_table().iter() {
                let cols = m.indices_at(w, p);
                let all: Vec<usize> = (0..m.dim()).collect();
                let rank = mat.select(&all, &cols).rank();
                if rank > 0 {
                    out.insert((word.clone(), w.clone(), p), rank);
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Fingerprint {
    dims: DimTable,
    pages: BTreeMap<(Order, usize), DimTable>,
    ranks: BTreeMap<(String, Rational, Parity), usize>,
}

impl Fingerprint {
    fn of(m: &SuperModule, depth: usize, len: usize) -> Result<Self, OracleError> {
        let mut pages = BTreeMap::new();
        for order in Order::BOTH {
            for r in 1..=depth {
                pages.insert((order, r), oracle_pages(m, r, order)?);
            }
        }
        Ok(Fingerprint { dims: m.dim_table(), pages, ranks: word_ranks(m, len) })
    }

    /// Componentwise at most `other`.
    fn within(&self, other: &Fingerprint) -> bool {
        self.dims.le(&other.dims)
            && self.pages.iter().all(|(k, t)| t.le(other.pages.get(k).unwrap_or(&DimTable::new())))
            && self.ranks.iter().all(|(k, v)| v <= other.ranks.get(k).unwrap_or(&0))
    }

    fn same_as(&self, other: &Fingerprint) -> bool {
        self.within(other) && other.within(self)
    }

    fn add(&mut self, other: &Fingerprint) {
        self.dims.merge(&other.dims);
        for (k, t) in &other.pages {
            self.pages.entry(*k).or_default().merge(t);
        }
        for (k, v) in &other.ranks {
            *self.ranks.entry(k.clone()).or_insert(0) += v;
        }
    }
}

/// Every indecomposable whose lowest slot is `(w, p)` and whose dimension table
/// fits inside `room`.
fn covering(w: &Rational, p: Parity, room: &DimTable, max_n: i64) -> Vec<(IndecompId, SuperModule)> {
    let mut kinds = vec![IndecompKind::P];
    for k in 1..=max_n as u32 {
        kinds.push(IndecompKind::X(k));
        kinds.push(IndecompKind::Y(k));
    }
    for k in -max_n..=max_n {
        kinds.push(IndecompKind::W(k));
    }
    let mut out = Vec::new();
    for kind in kinds {
        let base = make_indecomposable(&IndecompId::new(kind.clone())).expect("valid shape");
        let low = base.min_weight().expect("nonzero module");
        for shift in [false, true] {
            let id = IndecompId::new(kind.clone()).twisted(w - &low).with_parity_shift(shift);
            let m = make_indecomposable(&id).expect("valid shape");
            let t = m.dim_table();
            if t.get(w, p) > 0 && t.le(room) {
                out.push((id, m));
            }
        }
    }
    out
}

/// Decomposition by exhaustive search: all multisets of indecomposables that tile
/// the dimension table, filtered by pages of both orders and by ranks of words in
/// x and y on each slot, then by hom counts if several remain. Every part of the fingerprint is additive and
/// nonnegative, so partial tilings exceeding the target are cut early. Fails unless
/// exactly one multiset survives.
pub fn oracle_decompose(v: &SuperModule) -> Result<Multiset, OracleError> {
    if v.dim() > ORACLE_MAX_DIM {
        return Err(OracleError::TooLarge(v.dim()));
    }
    if v.charges().iter().any(|c| !c.is_zero()) {
        return Err(OracleError::Charged);
    }
    if v.dim() == 0 {
        return Ok(Multiset::new());
    }
    let spread = v.weight_spread();
    let max_n = ceil_i64(&((&spread + int(1)) / int(2)));
    let depth = (ceil_i64(&((spread + int(1)) / int(2))) + 1) as usize;
    let len = 2 * max_n as usize + 2;
    let mut search = Search {
        target: Fingerprint::of(v, depth, len)?,
        depth,
        len,
        max_n,
        cache: HashMap::new(),
        found: BTreeSet::new(),
    };
    search.tile(&v.dim_table(), &Fingerprint::default(), &mut Vec::new())?;
    let mut found: Vec<Multiset> = search.found.into_iter().map(|t| t.into_iter().collect()).collect();
    if found.len() > 1 {
        found = separate_by_homs(v, found);
    }
    match found.len() {
        0 => Err(OracleError::NoMatch),
        1 => Ok(found.pop().expect("one match")),
        _ => Err(OracleError::Ambiguous(found.iter().map(|m| m.to_string()).collect())),
    }
}

/// Weight- and parity-preserving maps `u -> v` commuting with x and y, counted by
/// one dense system over the entries of the map.
fn hom_count(u: &SuperModule, v: &SuperModule) -> usize {
    let (bu, bv) = (u.basis(), v.basis());
    let mut var = HashMap::new();
    for (i, a) in bv.iter().enumerate() {
        for (j, b) in bu.iter().enumerate() {
            if a.weight == b.weight && a.parity == b.parity && a.charge == b.charge {
                let k = var.len();
                var.insert((i, j), k);
            }
        }
    }
    let nvars = var.len();
    let mut rows = Vec::new();
    for (ou, ov) in [(u.x(), v.x()), (u.y(), v.y())] {
        for i in 0..v.dim() {
            for jj in 0..u.dim() {
                // (F ou - ov F)[i][jj] = 0
                let mut row = vec![Rational::zero(); nvars];
                for j in 0..u.dim() {
                    if let Some(&k) = var.get(&(i, j)) {
                        row[k] += ou.get(j, jj);
                    }
                }
                for kk in 0..v.dim() {
                    if let Some(&k) = var.get(&(kk, jj)) {
                        row[k] -= ov.get(i, kk);
                    }
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    nvars - Matrix::from_rows(rows, nvars).rank()
}

/// Keeps the candidates whose hom counts from and to every summand of every
/// candidate agree with those of `v`.
fn separate_by_homs(v: &SuperModule, candidates: Vec<Multiset>) -> Vec<Multiset> {
    let probes: BTreeSet<IndecompId> = candidates.iter().flat_map(|m| m.expanded()).collect();
    let probes: Vec<SuperModule> = probes.iter().map(|id| make_indecomposable(id).expect("valid shape")).collect();
    let counts = |m: &SuperModule| -> Vec<usize> { probes.iter().flat_map(|u| [hom_count(u, m), hom_count(m, u)]).collect() };
    let target = counts(v);
    candidates
        .into_iter()
        .filter(|c| {
            let mut total = vec![0; target.len()];
            for id in c.expanded() {
                let m = make_indecomposable(&id).expect("valid shape");
                for (t, k) in total.iter_mut().zip(counts(&m)) {
                    *t += k;
                }
            }
            total == target
        })
        .collect()
}

struct Search {
    target: Fingerprint,
    depth: usize,
    len: usize,
    max_n: i64,
    cache: HashMap<IndecompId, Fingerprint>,
    found: BTreeSet<Vec<IndecompId>>,
}

impl Search {
    fn tile(&mut self, room: &DimTable, acc: &Fingerprint, current: &mut Vec<IndecompId>) -> Result<(), OracleError> {
        let Some((w, p)) = room.iter().find(|(_, _, n)| *n > 0).map(|(w, p, _)| (w.clone(), p)) else {
            if acc.same_as(&self.target) {
                let mut sorted = current.clone();
                sorted.sort();
                self.found.insert(sorted);
            }
            return Ok(());
        };
        for (id, m) in covering(&w, p, room, self.max_n) {
            if !self.cache.contains_key(&id) {
                let fp = Fingerprint::of(&m, self.depth, self.len)?;
                self.cache.insert(id.clone(), fp);
            }
            let mut next = acc.clone();
            next.add(&self.cache[&id]);
            if !next.within(&self.target) {
                continue;
            }
            let rest = room.minus(&m.dim_table()).expect("fits");
            current.push(id);
            self.tile(&rest, &next, current)?;
            current.pop();
        }
        Ok(())
    }
}
