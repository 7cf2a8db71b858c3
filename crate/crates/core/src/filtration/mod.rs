//! Filtrations on the limit pages, their associated graded objects, and the
//! bifiltration on `DS_{x+y}`.

mod bifilt;

pub use bifilt::{bifiltered_ds_x_plus_y, gr_a, le as bi_le, BiFiltered, BiSummand, GridPoint};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::homspace::{hom_space, Equivariance, MapParity};
use crate::linalg::rational::{ceil_i64, fmt_rational, int, serde_str};
use crate::linalg::{Rational, Subspace};
use crate::pages::{ds, page_sequence, Direction, Order, PageSequence};
use crate::supermod::{contragredient, make_indecomposable, twist, DimTable, IndecompId, IndecompKind, Parity, SuperModule};

/// One basis line of a filtered h-module: it lies in `F_n` exactly for `n >= degree`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FilteredLine {
    pub degree: i64,
    #[serde(with = "serde_str")]
    pub weight: Rational,
    pub parity: Parity,
}

/// A filtered, h-graded super vector space, stored through an adapted basis.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FilteredHModule {
    lines: Vec<FilteredLine>,
}

impl FilteredHModule {
    pub fn new(mut lines: Vec<FilteredLine>) -> Self {
        lines.sort();
        FilteredHModule { lines }
    }

    pub fn lines(&self) -> &[FilteredLine] {
        &self.lines
    }

    pub fn dim(&self) -> usize {
        self.lines.len()
    }

    pub fn is_zero(&self) -> bool {
        self.lines.is_empty()
    }

    /// Dimensions of `F_n`.
    pub fn f_dims(&self, n: i64) -> DimTable {
        self.lines.iter().filter(|l| l.degree <= n).map(|l| (l.weight.clone(), l.parity, 1)).collect()
    }

    /// Degrees where the filtration jumps.
    pub fn jumps(&self) -> BTreeSet<i64> {
        self.lines.iter().map(|l| l.degree).collect()
    }

    pub fn total(&self) -> DimTable {
        self.lines.iter().map(|l| (l.weight.clone(), l.parity, 1)).collect()
    }

    pub fn graded(&self) -> GradedSS {
        let mut g = GradedSS::default();
        for l in &self.lines {
            g.add(l.degree, l.weight.clone(), l.parity, 1);
        }
        g
    }

    /// Tensor product filtration `F_n = sum F_a (x) F_b` over `a + b = n`.
    pub fn tensor(&self, other: &FilteredHModule) -> FilteredHModule {
        let mut lines = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.lines {
            for b in &other.lines {
                lines.push(FilteredLine {
                    degree: a.degree + b.degree,
                    weight: &a.weight + &b.weight,
                    parity: a.parity.add(b.parity),
                });
            }
        }
        FilteredHModule::new(lines)
    }
}

/// The associated graded `V = (+)_n V[n]`, each piece an h-graded super space.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedSS {
    pub pieces: BTreeMap<i64, DimTable>,
}

impl GradedSS {
    pub fn add(&mut self, degree: i64, weight: Rational, parity: Parity, n: usize) {
        if n > 0 {
            self.pieces.entry(degree).or_default().add(weight, parity, n);
        }
    }

    pub fn piece(&self, n: i64) -> DimTable {
        self.pieces.get(&n).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn total(&self) -> DimTable {
        let mut t = DimTable::new();
        for p in self.pieces.values() {
            t.merge(p);
        }
        t
    }

    pub fn tensor(&self, other: &GradedSS) -> GradedSS {
        let mut g = GradedSS::default();
        for (a, pa) in &self.pieces {
            for (b, pb) in &other.pieces {
                for (w, p, n) in pa.convolve(pb).iter() {
                    g.add(a + b, w.clone(), p, n);
                }
            }
        }
        g
    }

    pub fn direct_sum(&self, other: &GradedSS) -> GradedSS {
        let mut g = self.clone();
        for (d, piece) in &other.pieces {
            for (w, p, n) in piece.iter() {
                g.add(*d, w.clone(), p, n);
            }
        }
        g
    }
}

impl Serialize for GradedSS {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Row {
            degree: i64,
            weight: String,
            even_dim: usize,
            odd_dim: usize,
        }
        let mut rows = Vec::new();
        for (d, piece) in &self.pieces {
            let ws: BTreeSet<&Rational> = piece.weights().collect();
            for w in ws {
                rows.push(Row {
                    degree: *d,
                    weight: fmt_rational(w),
                    even_dim: piece.get(w, Parity::Even),
                    odd_dim: piece.get(w, Parity::Odd),
                });
            }
        }
        let mut seq = s.serialize_seq(Some(rows.len()))?;
        for r in &rows {
            seq.serialize_element(r)?;
        }
        seq.end()
    }
}

/// Every summand `W(k)_r` of `v` has `|k| <= ceil(spread / 2)`, so filtration
/// indices outside this window carry no jumps.
pub fn filtration_window(v: &SuperModule) -> i64 {
    ceil_i64(&(v.weight_spread() / int(2)))
}

/// `v` restricted to its c-invariant coordinates, the coordinates pages work in.
pub(crate) fn restrict_to_c_invariants(v: &SuperModule, vec: &[Rational]) -> Vec<Rational> {
    v.c_invariant_indices().into_iter().map(|i| vec[i].clone()).collect()
}

fn w_module(n: i64) -> SuperModule {
    make_indecomposable(&IndecompId::new(IndecompKind::W(n))).expect("W(n) exists for every n")
}

/// Subspaces `F_n` of the limit page of `v`, one per index in the certified window,
/// straight from the definition as images of maps out of `W(n)`.
pub fn filtration_subspaces(v: &SuperModule, order: Order) -> (PageSequence, Vec<(i64, Subspace)>) {
    let seq = page_sequence(v, order);
    let limit = seq.limit();
    let dim = limit.dim();
    let window = filtration_window(v);
    let mut out = Vec::new();
    for n in -window..=window {
        if dim == 0 {
            out.push((n, Subspace::zero(0)));
            continue;
        }
        let w = w_module(n);
        let wseq = page_sequence(&w, order);
        let wlim = wseq.limit();
        let homs = hom_space(&w, v, Equivariance::Sl, MapParity::Both);
        let mut vecs = Vec::new();
        for f in &homs.maps {
            for rep in &wlim.reps {
                let img = restrict_to_c_invariants(v, &f.mul_vec(rep));
                let c = limit.coords(&img).expect("equivariant maps send cycles to cycles");
                vecs.push(c);
            }
        }
        out.push((n, Subspace::from_vectors(dim, vecs)));
    }
    (seq, out)
}

/// Dimension per (weight, parity) of a graded subspace of a page with the given
/// coordinate grades.
pub(crate) fn graded_dims(s: &Subspace, grades: &[(Rational, Parity)]) -> DimTable {
    let mut by_grade: HashMap<&(Rational, Parity), Vec<usize>> = HashMap::new();
    for (i, g) in grades.iter().enumerate() {
        by_grade.entry(g).or_default().push(i);
    }
    let mut t = DimTable::new();
    for (g, idx) in by_grade {
        let d = s.intersect(&Subspace::coordinate(s.ambient(), &idx)).dim();
        t.add(g.0.clone(), g.1, d);
    }
    t
}

/// The limit page of `v` with the filtration by images of the `W(n)`.
pub fn filtered_ds_infty(v: &SuperModule, order: Order) -> FilteredHModule {
    let (seq, subspaces) = filtration_subspaces(v, order);
    let limit = seq.limit();
    let grades: Vec<(Rational, Parity)> =
        limit.weights.iter().cloned().zip(limit.parities.iter().copied()).collect();
    let mut lines = Vec::new();
    let mut prev = DimTable::new();
    let mut acc = Subspace::zero(limit.dim());
    for (n, s) in subspaces {
        acc = acc.sum(&s);
        let now = graded_dims(&acc, &grades);
        let fresh = now.minus(&prev).expect("filtration is increasing");
        for (w, p, k) in fresh.iter() {
            for _ in 0..k {
                lines.push(FilteredLine { degree: n, weight: w.clone(), parity: p });
            }
        }
        prev = now;
    }
    FilteredHModule::new(lines)
}

/// Dimension of the span of the images of `E_infinity(a)` under all weight-preserving
/// homs `a -> b`, inside `E_infinity(b)`.
pub fn limit_image_dim(a: &SuperModule, b: &SuperModule, order: Order) -> usize {
    let la = page_sequence(a, order);
    let lb = page_sequence(b, order);
    let (la, lb) = (la.limit(), lb.limit());
    let homs = hom_space(a, b, Equivariance::Gl, MapParity::Both);
    let mut vecs = Vec::new();
    for f in &homs.maps {
        for rep in &la.reps {
            let img = restrict_to_c_invariants(b, &f.mul_vec(&lift_from_c_invariants(a, rep)));
            vecs.push(lb.coords(&img).expect("equivariant maps send cycles to cycles"));
        }
    }
    Subspace::from_vectors(lb.dim(), vecs).dim()
}

/// The same for `DS_u`.
pub fn ds_image_dim(a: &SuperModule, b: &SuperModule, direction: Direction) -> usize {
    let da = ds(a, direction);
    let db = ds(b, direction);
    let homs = hom_space(a, b, Equivariance::Gl, MapParity::Both);
    let mut vecs = Vec::new();
    for f in &homs.maps {
        for rep in &da.reps {
            let full = if direction == Direction::XPlusY { lift_from_c_invariants(a, rep) } else { rep.clone() };
            let img = f.mul_vec(&full);
            let img = if direction == Direction::XPlusY { restrict_to_c_invariants(b, &img) } else { img };
            vecs.push(db.coords(&img).expect("equivariant maps preserve kernels"));
        }
    }
    Subspace::from_vectors(db.dim(), vecs).dim()
}

fn lift_from_c_invariants(v: &SuperModule, vec: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::from_integer(0.into()); v.dim()];
    for (k, i) in v.c_invariant_indices().into_iter().enumerate() {
        out[i] = vec[k].clone();
    }
    out
}

pub fn semisimplify(v: &SuperModule, order: Order) -> GradedSS {
    filtered_ds_infty(v, order).graded()
}

/// Piece `n` of the xy side equals piece `n` of the yx side with weights raised by `2n`.
pub fn check_phi_twist(v: &SuperModule) -> bool {
    let xy = semisimplify(v, Order::Xy);
    let yx = semisimplify(v, Order::Yx);
    let degrees: BTreeSet<i64> = xy.pieces.keys().chain(yx.pieces.keys()).copied().collect();
    degrees.into_iter().all(|n| xy.piece(n) == yx.piece(n).shifted(&int(2 * n)))
}

/// Piece `n` of the contragredient equals piece `-n` of `v` twisted by `2n`.
pub fn check_contragredient_filtration(v: &SuperModule) -> bool {
    let lhs = semisimplify(&contragredient(v), Order::Xy);
    let window = filtration_window(v);
    (-window..=window).all(|n| {
        let rhs = semisimplify(&twist(v, &int(2 * n)), Order::Xy);
        lhs.piece(n) == rhs.piece(-n)
    }) && lhs.pieces.keys().all(|n| n.abs() <= window)
}
