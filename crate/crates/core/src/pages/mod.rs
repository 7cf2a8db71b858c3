//! The two spectral sequences of the double complex built from x and y.
//!
//! For order `yx` an r-chain is `(v_1, .., v_r)` with `y v_i = x v_{i+1}` and
//! `y v_r = 0`; `Z_r` collects the last entries, `B_r = im y + {x w_1}` over
//! (r-1)-chains `w`, `E_r = Z_r / B_r` and `d_r(v_r) = x v_1`. Order `xy` swaps
//! the roles of x and y.

mod closed_form;
mod ds;
mod monoidal;

pub use closed_form::{closed_form_d_rank, closed_form_page_dims};
pub use ds::{ds, Direction, DsSpace};
pub use monoidal::{page_duality, page_tensor_iso, DualityWitness, TensorIsoWitness};

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use crate::linalg::rational::{floor_i64, int};
use crate::linalg::subspace::{combine, unit};
use crate::linalg::{quotient_basis, solve, Matrix, QuotientFrame, Rational, SparseSystem, Subspace};
use crate::supermod::{c_invariants, DimTable, Parity, SuperModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    /// y-cohomology first; `d_r` raises weight by `2r - 1`.
    Yx,
    /// x-cohomology first; `d_r` lowers weight by `2r - 1`.
    Xy,
}

impl Order {
    pub const BOTH: [Order; 2] = [Order::Xy, Order::Yx];

    /// The operator whose cohomology is taken first.
    pub fn first<'a>(self, m: &'a SuperModule) -> &'a Matrix {
        match self {
            Order::Yx => m.y(),
            Order::Xy => m.x(),
        }
    }

    pub fn second<'a>(self, m: &'a SuperModule) -> &'a Matrix {
        match self {
            Order::Yx => m.x(),
            Order::Xy => m.y(),
        }
    }

    fn first_shift(self) -> i64 {
        match self {
            Order::Yx => -1,
            Order::Xy => 1,
        }
    }

    /// `wt(v_i) - wt(v_{i+1})` along a chain.
    fn chain_step(self) -> i64 {
        -2 * self.first_shift()
    }

    /// Weight shift of `d_r`.
    pub fn d_shift(self, r: usize) -> Rational {
        let s = 2 * r as i64 - 1;
        match self {
            Order::Yx => int(s),
            Order::Xy => int(-s),
        }
    }

    pub fn other(self) -> Order {
        match self {
            Order::Yx => Order::Xy,
            Order::Xy => Order::Yx,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Order::Yx => "yx",
            Order::Xy => "xy",
        })
    }
}

impl FromStr for Order {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "yx" => Ok(Order::Yx),
            "xy" => Ok(Order::Xy),
            _ => Err(format!("unknown order {s:?}, expected xy or yx")),
        }
    }
}

/// One page: cycles, boundaries, coset representatives and the differential.
#[derive(Clone, Debug)]
pub struct Page {
    pub r: usize,
    pub order: Order,
    pub z: Subspace,
    pub b: Subspace,
    pub reps: Vec<Vec<Rational>>,
    pub weights: Vec<Rational>,
    pub parities: Vec<Parity>,
    /// Matrix of `d_r` on the representatives.
    pub d: Matrix,
    frame: QuotientFrame,
}

impl Page {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn dim_table(&self) -> DimTable {
        self.weights.iter().zip(&self.parities).map(|(w, p)| (w.clone(), *p, 1)).collect()
    }

    /// Coordinates of a cycle on the representatives.
    pub fn coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        self.frame.coords(v)
    }

    pub fn d_rank(&self) -> usize {
        self.d.rank()
    }

    /// Indices of representatives grouped by (weight, parity).
    pub fn grades(&self) -> BTreeMap<(Rational, Parity), Vec<usize>> {
        let mut g: BTreeMap<(Rational, Parity), Vec<usize>> = BTreeMap::new();
        for (i, (w, p)) in self.weights.iter().zip(&self.parities).enumerate() {
            g.entry((w.clone(), *p)).or_default().push(i);
        }
        g
    }

    /// Rank of `d_r` from each grade.
    pub fn d_ranks(&self) -> BTreeMap<(Rational, Parity), usize> {
        let all: Vec<usize> = (0..self.dim()).collect();
        self.grades()
            .into_iter()
            .map(|(g, cols)| (g, self.d.select(&all, &cols).rank()))
            .collect()
    }

    /// Checks the stored page against its defining invariants.
    pub fn check_invariants(&self) -> Result<(), String> {
        if !self.b.is_subspace_of(&self.z) {
            return Err(format!("page {}: B not inside Z", self.r));
        }
        if !self.d.mul(&self.d).is_zero() {
            return Err(format!("page {}: d^2 != 0", self.r));
        }
        let shift = self.order.d_shift(self.r);
        for (i, j, _) in self.d.nonzeros() {
            if self.weights[i] != &self.weights[j] + &shift || self.parities[i] == self.parities[j] {
                return Err(format!("page {}: d entry ({i},{j}) has the wrong grading", self.r));
            }
        }
        Ok(())
    }
}

/// Basis of the solution space of one chain system, keeping first and last entries.
#[derive(Debug, Default)]
struct ChainSpace {
    firsts: Vec<Vec<Rational>>,
    lasts: Vec<Vec<Rational>>,
    /// Coordinates of the last block, for witness lookup.
    last_block: Vec<usize>,
}

/// Chain systems and pages for one module, with chain solutions cached by
/// (length, anchor weight, parity).
pub(crate) struct PageComputer {
    m: SuperModule,
    order: Order,
    weights: Vec<Rational>,
    cache: HashMap<(usize, Rational, Parity), Rc<ChainSpace>>,
}

impl PageComputer {
    pub(crate) fn new(m: &SuperModule, order: Order) -> Self {
        let m = c_invariants(m);
        let weights = m.weights().into_iter().collect();
        PageComputer { m, order, weights, cache: HashMap::new() }
    }

    fn n(&self) -> usize {
        self.m.dim()
    }

    /// Chains of the given length whose last entry has weight `anchor` and parity `p`.
    /// Entry `v_i` has weight `anchor + (len - i) * step` and the same parity.
    fn chains(&mut self, len: usize, anchor: &Rational, p: Parity) -> Rc<ChainSpace> {
        let key = (len, anchor.clone(), p);
        if let Some(c) = self.cache.get(&key) {
            return c.clone();
        }
        let space = Rc::new(self.solve_chains(len, anchor, p));
        self.cache.insert(key, space.clone());
        space
    }

    fn solve_chains(&self, len: usize, anchor: &Rational, p: Parity) -> ChainSpace {
        let n = self.n();
        let step = int(self.order.chain_step());
        // blocks[k] holds entry v_{k+1}
        let blocks: Vec<Vec<usize>> = (0..len)
            .map(|k| {
                let w = anchor + &step * int((len - 1 - k) as i64);
                self.m.indices_at(&w, p)
            })
            .collect();
        if blocks.iter().all(|b| b.is_empty()) {
            return ChainSpace::default();
        }
        let mut offsets = Vec::with_capacity(len);
        let mut total = 0;
        for b in &blocks {
            offsets.push(total);
            total += b.len();
        }
        let a = self.order.first(&self.m);
        let b = self.order.second(&self.m);
        let mut sys = SparseSystem::new(total);
        let a_shift = int(self.order.first_shift());
        // a v_len = 0, and a v_k - b v_{k+1} = 0 for k < len
        for k in 0..len {
            let w = anchor + &step * int((len - 1 - k) as i64) + &a_shift;
            for t in self.m.indices_at(&w, p.flip()) {
                let mut row = Vec::new();
                for (c, &j) in blocks[k].iter().enumerate() {
                    let v = a.get(t, j);
                    if !num_traits::Zero::is_zero(v) {
                        row.push((offsets[k] + c, v.clone()));
                    }
                }
                if k + 1 < len {
                    for (c, &j) in blocks[k + 1].iter().enumerate() {
                        let v = b.get(t, j);
                        if !num_traits::Zero::is_zero(v) {
                            row.push((offsets[k + 1] + c, -v.clone()));
                        }
                    }
                }
                sys.push_row(row);
            }
        }
        let expand = |sol: &[Rational], k: usize| {
            let mut v = vec![Rational::from_integer(0.into()); n];
            for (c, &j) in blocks[k].iter().enumerate() {
                v[j] = sol[offsets[k] + c].clone();
            }
            v
        };
        let mut space = ChainSpace { last_block: blocks[len - 1].clone(), ..Default::default() };
        for sol in sys.kernel_basis() {
            space.firsts.push(expand(&sol, 0));
            space.lasts.push(expand(&sol, len - 1));
        }
        space
    }

    /// Anchors of all `len`-chains that touch the module, including chains whose
    /// trailing entries sit below the lowest weight.
    fn all_anchors(&self, len: usize) -> Vec<(Rational, Parity)> {
        let step = int(self.order.chain_step());
        let mut anchors = BTreeSet::new();
        for w in &self.weights {
            for k in 0..len {
                let a = w - &step * int(k as i64);
                for p in Parity::BOTH {
                    anchors.insert((a.clone(), p));
                }
            }
        }
        anchors.into_iter().collect()
    }

    pub(crate) fn z(&mut self, r: usize) -> Subspace {
        let n = self.n();
        if r == 0 {
            return Subspace::full(n);
        }
        let mut vecs = Vec::new();
        for (w, p) in self.all_anchors(1) {
            vecs.extend(self.chains(r, &w, p).lasts.iter().cloned());
        }
        Subspace::from_vectors(n, vecs)
    }

    pub(crate) fn b(&mut self, r: usize) -> Subspace {
        let n = self.n();
        if r == 0 {
            return Subspace::zero(n);
        }
        let mut bsp = self.order.first(&self.m).image();
        if r >= 2 {
            let second = self.order.second(&self.m).clone();
            let mut vecs = Vec::new();
            for (w, p) in self.all_anchors(r - 1) {
                for f in &self.chains(r - 1, &w, p).firsts {
                    vecs.push(second.mul_vec(f));
                }
            }
            bsp = bsp.sum(&Subspace::from_vectors(n, vecs));
        }
        bsp
    }

    /// `v_1` of some r-chain ending in the homogeneous cycle `q`.
    fn witness_first(&mut self, r: usize, q: &[Rational], w: &Rational, p: Parity) -> Vec<Rational> {
        let space = self.chains(r, w, p);
        let rows = &space.last_block;
        let cols: Vec<Vec<Rational>> =
            space.lasts.iter().map(|l| rows.iter().map(|&i| l[i].clone()).collect()).collect();
        let target: Vec<Rational> = rows.iter().map(|&i| q[i].clone()).collect();
        let mat = Matrix::from_cols(&cols, rows.len());
        let coef = solve(&mat, &target).expect("representative of E_r is an r-cycle");
        combine(&space.firsts, &coef, self.n())
    }

    pub(crate) fn page(&mut self, r: usize) -> Page {
        let n = self.n();
        let order = self.order;
        if r == 0 {
            let reps: Vec<Vec<Rational>> = (0..n).map(|i| unit(n, i)).collect();
            let zero = Subspace::zero(n);
            return Page {
                r,
                order,
                z: Subspace::full(n),
                b: zero.clone(),
                frame: QuotientFrame::new(&reps, &zero),
                reps,
                weights: self.m.basis().iter().map(|b| b.weight.clone()).collect(),
                parities: self.m.basis().iter().map(|b| b.parity).collect(),
                d: order.first(&self.m).clone(),
            };
        }
        let z = self.z(r);
        let b = self.b(r);
        let reps = quotient_basis(&z, &b).expect("boundaries lie inside cycles");
        let mut weights = Vec::with_capacity(reps.len());
        let mut parities = Vec::with_capacity(reps.len());
        for v in &reps {
            let (w, p) = self.grade_of(v);
            weights.push(w);
            parities.push(p);
        }
        let frame = QuotientFrame::new(&reps, &b);
        let second = order.second(&self.m).clone();
        let mut d = Matrix::zeros(reps.len(), reps.len());
        for (j, q) in reps.iter().enumerate() {
            let v1 = self.witness_first(r, q, &weights[j], parities[j]);
            let image = second.mul_vec(&v1);
            let coords = frame.coords(&image).expect("d_r lands in Z_r");
            for (i, c) in coords.into_iter().enumerate() {
                d.set(i, j, c);
            }
        }
        Page { r, order, z, b, reps, weights, parities, d, frame }
    }

    /// Weight and parity of a homogeneous vector.
    fn grade_of(&self, v: &[Rational]) -> (Rational, Parity) {
        let support: Vec<usize> = (0..v.len()).filter(|&i| !num_traits::Zero::is_zero(&v[i])).collect();
        let first = &self.m.basis()[support[0]];
        debug_assert!(support
            .iter()
            .all(|&i| self.m.basis()[i].weight == first.weight && self.m.basis()[i].parity == first.parity));
        (first.weight.clone(), first.parity)
    }

    /// First page index from which every differential vanishes by the weight bound.
    fn certified_bound(&self) -> usize {
        let spread = self.m.weight_spread();
        (floor_i64(&((spread + int(1)) / int(2))) + 1).max(1) as usize
    }
}

/// `Z_r` inside `M^c`.
pub fn compute_z(m: &SuperModule, r: usize, order: Order) -> Subspace {
    PageComputer::new(m, order).z(r)
}

/// `B_r` inside `M^c`.
pub fn compute_b(m: &SuperModule, r: usize, order: Order) -> Subspace {
    PageComputer::new(m, order).b(r)
}

pub fn compute_page(m: &SuperModule, r: usize, order: Order) -> Page {
    PageComputer::new(m, order).page(r)
}

/// Pages from `r = 0` up to the first page after which all differentials vanish.
#[derive(Clone, Debug)]
pub struct PageSequence {
    pub order: Order,
    pub pages: Vec<Page>,
    /// Least `s >= 1` with `d_r = 0` for all `r >= s`.
    pub stable_from: usize,
    /// Differentials vanish for `r >= certified_bound` because their weight shift
    /// exceeds the weight spread of the module.
    pub certified_bound: usize,
}

impl PageSequence {
    /// The limit page `E_infinity`.
    pub fn limit(&self) -> &Page {
        &self.pages[self.stable_from]
    }

    /// Page `r`, which equals the limit for `r >= stable_from`.
    pub fn page(&self, r: usize) -> &Page {
        &self.pages[r.min(self.stable_from)]
    }

    pub fn dim_table(&self, r: usize) -> DimTable {
        self.page(r).dim_table()
    }
}

pub fn page_sequence(m: &SuperModule, order: Order) -> PageSequence {
    let mut pc = PageComputer::new(m, order);
    let bound = pc.certified_bound();
    let mut pages = Vec::new();
    for r in 0..=bound {
        let p = pc.page(r);
        let empty = p.dim() == 0;
        pages.push(p);
        if empty && r >= 1 {
            break;
        }
    }
    let last = pages.len() - 1;
    let mut stable_from = last.max(1);
    while stable_from > 1 && pages[stable_from - 1].d.is_zero() {
        stable_from -= 1;
    }
    pages.truncate(stable_from + 1);
    PageSequence { order, pages, stable_from, certified_bound: bound }
}

/// True iff the cohomology of `d_r` on `E_r` has the dimension table of `E_{r+1}`.
pub fn verify_cohomology_step(m: &SuperModule, r: usize, order: Order) -> bool {
    let mut pc = PageComputer::new(m, order);
    let page = pc.page(r);
    let next = pc.page(r + 1);
    cohomology_dims(&page) == next.dim_table()
}

/// Dimension table of `ker d / im d` on a page.
pub fn cohomology_dims(page: &Page) -> DimTable {
    let all: Vec<usize> = (0..page.dim()).collect();
    let mut out = DimTable::new();
    for ((w, p), idx) in page.grades() {
        let out_rank = page.d.select(&all, &idx).rank();
        let in_rank = page.d.select(&idx, &all).rank();
        out.add(w, p, idx.len() - out_rank - in_rank);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::half;
    use crate::supermod::{direct_sum, make_indecomposable, tensor, IndecompId, IndecompKind};

    fn make(kind: IndecompKind) -> SuperModule {
        make_indecomposable(&IndecompId::new(kind)).unwrap()
    }

    fn vec_at(m: &SuperModule, w: Rational, p: Parity) -> Vec<Rational> {
        let idx = m.indices_at(&w, p);
        assert_eq!(idx.len(), 1);
        unit(m.dim(), idx[0])
    }

    #[test]
    fn first_cycles_and_boundaries() {
        let m = make(IndecompKind::X(3));
        assert_eq!(compute_z(&m, 0, Order::Yx), Subspace::full(m.dim()));
        assert_eq!(compute_z(&m, 1, Order::Yx), m.y().kernel());
        assert_eq!(compute_b(&m, 0, Order::Yx).dim(), 0);
        assert_eq!(compute_b(&m, 1, Order::Yx), m.y().image());
    }

    #[test]
    fn x2_cycles_follow_the_closed_form() {
        let m = make(IndecompKind::X(2));
        let im_y = m.y().image();
        let lo = vec_at(&m, half(-3), Parity::Even);
        let hi = vec_at(&m, half(3), Parity::Odd);
        let z2 = im_y.sum(&Subspace::from_vectors(m.dim(), vec![lo.clone(), hi.clone()]));
        assert_eq!(compute_z(&m, 2, Order::Yx), z2);
        let z3 = im_y.sum(&Subspace::from_vectors(m.dim(), vec![hi.clone()]));
        assert_eq!(compute_z(&m, 3, Order::Yx), z3);
        for r in 1..=4 {
            assert_eq!(compute_b(&m, r, Order::Yx).contains(&hi), r > 2, "r = {r}");
        }
    }

    #[test]
    fn x2_page_two() {
        let m = make(IndecompKind::X(2));
        let p = compute_page(&m, 2, Order::Yx);
        assert_eq!(p.dim_table().sdims(), (1, 1));
        assert_eq!(p.d_rank(), 1);
        let lo = p.weights.iter().position(|w| *w == half(-3)).unwrap();
        let hi = p.weights.iter().position(|w| *w == half(3)).unwrap();
        assert!(!num_traits::Zero::is_zero(p.d.get(hi, lo)));
        p.check_invariants().unwrap();
    }

    #[test]
    fn projective_and_w_pages() {
        let pm = make(IndecompKind::P);
        for o in Order::BOTH {
            for r in 1..=3 {
                assert_eq!(compute_page(&pm, r, o).dim(), 0);
            }
        }
        let w3 = make(IndecompKind::W(3));
        for r in 1..=4 {
            let t = compute_page(&w3, r, Order::Xy).dim_table();
            assert_eq!(t, [(int(3), Parity::Even, 1)].into_iter().collect());
        }
    }

    #[test]
    fn sequences() {
        for n in 1..=4u32 {
            let s = page_sequence(&make(IndecompKind::X(n)), Order::Yx);
            assert_eq!(s.stable_from, n as usize + 1);
            assert_eq!(s.limit().dim(), 0);
            let t = page_sequence(&make(IndecompKind::Y(n)), Order::Yx);
            assert!((1..=5).all(|r| t.page(r).dim() == 0));
        }
        let wp = direct_sum(&make(IndecompKind::W(2)), &make(IndecompKind::P));
        let s = page_sequence(&wp, Order::Xy);
        assert_eq!(s.limit().dim_table(), [(int(2), Parity::Even, 1)].into_iter().collect());
    }

    #[test]
    fn cohomology_steps() {
        let xw = tensor(&make(IndecompKind::X(2)), &make(IndecompKind::W(1)));
        for o in Order::BOTH {
            for r in 0..=4 {
                assert!(verify_cohomology_step(&xw, r, o));
                compute_page(&xw, r, o).check_invariants().unwrap();
            }
        }
    }
}
