use num_traits::Signed;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

use super::{filtration_window, restrict_to_c_invariants, FilteredHModule, FilteredLine};
use crate::homspace::{hom_space, Equivariance, MapParity};
use crate::linalg::rational::{int, is_even_natural, is_integer, serde_str};
use crate::linalg::{Rational, Subspace};
use crate::pages::{ds, Direction, DsSpace};
use crate::supermod::{make_indecomposable, IndecompId, IndecompKind, Parity, SuperModule};

/// Index `(n, r)` in `Z x Q`.
pub type GridPoint = (i64, Rational);

/// `b1 <= b2` in the order generated by `a1 = (1, -1)` and `a2 = (1, 1)`.
pub fn le(b1: &GridPoint, b2: &GridPoint) -> bool {
    let dn = int(b2.0 - b1.0);
    let dr = &b2.1 - &b1.1;
    is_integer(&dr) && dn >= dr.abs() && is_even_natural(&(dn - dr))
}

/// `DS_{x+y}` of a module with one subspace per grid point. Values at other
/// indices come from monotonicity: `V^b` is the sum of `V^{b'}` over grid points
/// `b' <= b`.
#[derive(Clone, Debug)]
pub struct BiFiltered {
    pub parities: Vec<Parity>,
    pub grid: BTreeMap<GridPoint, Subspace>,
}

/// One indecomposable `C_v` with its parity and multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BiSummand {
    pub n: i64,
    #[serde(with = "serde_str")]
    pub r: Rational,
    pub parity: Parity,
    pub multiplicity: usize,
}

impl BiFiltered {
    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn at(&self, b: &GridPoint) -> Subspace {
        let parts: Vec<&Subspace> = self.grid.iter().filter(|(k, _)| le(k, b)).map(|(_, s)| s).collect();
        Subspace::sum_all(self.dim(), parts)
    }

    fn parity_dims(&self, s: &Subspace) -> [usize; 2] {
        let mut out = [0; 2];
        for p in Parity::BOTH {
            let idx: Vec<usize> = (0..self.dim()).filter(|&i| self.parities[i] == p).collect();
            out[p.index()] = s.intersect(&Subspace::coordinate(self.dim(), &idx)).dim();
        }
        out
    }

    /// Multiplicities of the `C_v` read off by Moebius inversion,
    /// `mu(v) = dim V^v - dim(V^{v - a1} + V^{v - a2})`. Fails if the subspace
    /// dimensions are not those of a direct sum of `C_v`.
    pub fn summands(&self) -> Result<Vec<BiSummand>, String> {
        let mut out = Vec::new();
        for b in self.grid.keys() {
            let here = self.parity_dims(&self.at(b));
            let below1 = self.at(&(b.0 - 1, &b.1 + int(1)));
            let below2 = self.at(&(b.0 - 1, &b.1 - int(1)));
            let below = self.parity_dims(&below1.sum(&below2));
            for p in Parity::BOTH {
                let (h, l) = (here[p.index()], below[p.index()]);
                if h < l {
                    return Err(format!("subspace at {b:?} is smaller than the ones below it"));
                }
                if h > l {
                    out.push(BiSummand { n: b.0, r: b.1.clone(), parity: p, multiplicity: h - l });
                }
            }
        }
        for b in self.grid.keys() {
            let dims = self.parity_dims(&self.at(b));
            for p in Parity::BOTH {
                let expected: usize = out
                    .iter()
                    .filter(|s| s.parity == p && le(&(s.n, s.r.clone()), b))
                    .map(|s| s.multiplicity)
                    .sum();
                if expected != dims[p.index()] {
                    return Err(format!("dimension at {b:?} is not a sum of indicator functions"));
                }
            }
        }
        let total: usize = out.iter().map(|s| s.multiplicity).sum();
        if total != self.dim() {
            return Err(format!("summands cover {total} of {} dimensions", self.dim()));
        }
        Ok(out)
    }
}

fn w_image(v: &SuperModule, dsv: &DsSpace, n: i64, r: &Rational) -> Subspace {
    let source = make_indecomposable(&IndecompId::new(IndecompKind::W(n)).twisted(r.clone()))
        .expect("W(n)_r exists for every n, r");
    let dsw = ds(&source, Direction::XPlusY);
    let homs = hom_space(&source, v, Equivariance::Gl, MapParity::Both);
    let mut vecs = Vec::new();
    for f in &homs.maps {
        for rep in &dsw.reps {
            let img = restrict_to_c_invariants(v, &f.mul_vec(rep));
            vecs.push(dsv.coords(&img).expect("equivariant maps preserve ker(x+y)"));
        }
    }
    Subspace::from_vectors(dsv.dim(), vecs)
}

pub fn bifiltered_ds_x_plus_y(v: &SuperModule) -> BiFiltered {
    let dsv = ds(v, Direction::XPlusY);
    let mut grid = BTreeMap::new();
    if dsv.dim() > 0 {
        let window = filtration_window(v);
        let weights = v.weights();
        for n in -window..=window {
            let mut rs = BTreeSet::new();
            for w in &weights {
                for j in -n.abs()..=n.abs() {
                    rs.insert(w + int(j));
                }
            }
            for r in rs {
                let s = w_image(v, &dsv, n, &r);
                if !s.is_zero() {
                    grid.insert((n, r), s);
                }
            }
        }
    }
    BiFiltered { parities: dsv.parities.clone(), grid }
}

/// Associated graded along `a1` (`i = 1`) or `a2` (`i = 2`): an h-graded space
/// filtered by `F_j`.
pub fn gr_a(v: &BiFiltered, i: u8) -> FilteredHModule {
    assert!(i == 1 || i == 2, "gr_a takes i = 1 or i = 2");
    // On the line h, V^{b'} enters the numerator when its key is reachable along a_i.
    let key = |b: &GridPoint| if i == 1 { int(b.0) + &b.1 } else { &b.1 - int(b.0) };
    let reach = |h: &Rational, k: &Rational| if i == 1 { is_even_natural(&(h - k)) } else { is_even_natural(&(k - h)) };
    let sum_where = |h: &Rational| {
        let parts: Vec<&Subspace> = v.grid.iter().filter(|(b, _)| reach(h, &key(b))).map(|(_, s)| s).collect();
        Subspace::sum_all(v.dim(), parts)
    };
    let lines_h: BTreeSet<Rational> = v.grid.keys().map(key).collect();
    let (jmin, jmax) = match (v.grid.keys().next(), v.grid.keys().last()) {
        (Some(a), Some(b)) => (a.0, b.0),
        _ => return FilteredHModule::default(),
    };
    let step = int(if i == 1 { 2 } else { -2 });
    let mut lines = Vec::new();
    for h in lines_h {
        let num = sum_where(&h);
        let den = sum_where(&(&h - &step));
        let total = v.parity_dims(&num);
        let base = v.parity_dims(&den);
        let mut prev = base;
        for j in jmin..=jmax {
            let r = if i == 1 { &h - int(j) } else { &h + int(j) };
            let fj = v.at(&(j, r)).sum(&den);
            let now = v.parity_dims(&fj);
            for p in Parity::BOTH {
                for _ in prev[p.index()]..now[p.index()] {
                    lines.push(FilteredLine { degree: j, weight: h.clone(), parity: p });
                }
            }
            prev = now;
        }
        debug_assert_eq!(prev, total, "F_j exhausts the line {h}");
    }
    FilteredHModule::new(lines)
}
