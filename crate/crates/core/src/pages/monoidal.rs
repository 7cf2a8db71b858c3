use serde::Serialize;
use std::collections::BTreeMap;

use crate::linalg::{Matrix, Rational};
use crate::supermod::{c_invariants, contragredient, tensor, Parity, SuperModule};

use super::{Order, Page, PageComputer};

/// The map `E_r(M) (x) E_r(N) -> E_r(M (x) N)` sending `[v] (x) [w]` to `[v (x) w]`,
/// with the checks that it is invertible and intertwines `d (x) 1 + s (x) d` with `d`.
/// Computed on the c-invariant parts.
#[derive(Clone, Debug, Serialize)]
pub struct TensorIsoWitness {
    pub r: usize,
    pub order: Order,
    pub source_dim: usize,
    pub target_dim: usize,
    pub well_defined: bool,
    pub invertible: bool,
    pub leibniz: bool,
    #[serde(skip)]
    pub phi: Option<Matrix>,
}

impl TensorIsoWitness {
    pub fn holds(&self) -> bool {
        self.well_defined && self.invertible && self.leibniz
    }
}

fn kron_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

fn sign_matrix(p: &Page) -> Matrix {
    let s: Vec<Rational> = p.parities.iter().map(|q| Rational::from_integer(q.sign().into())).collect();
    Matrix::diagonal(&s)
}

pub fn page_tensor_iso(m: &SuperModule, n: &SuperModule, r: usize, order: Order) -> TensorIsoWitness {
    let mc = c_invariants(m);
    let nc = c_invariants(n);
    let t = tensor(&mc, &nc);
    let pm = PageComputer::new(&mc, order).page(r);
    let pn = PageComputer::new(&nc, order).page(r);
    let pt = PageComputer::new(&t, order).page(r);
    let (dm, dn, dt) = (pm.dim(), pn.dim(), pt.dim());
    let mut w = TensorIsoWitness {
        r,
        order,
        source_dim: dm * dn,
        target_dim: dt,
        well_defined: true,
        invertible: false,
        leibniz: false,
        phi: None,
    };
    let mut phi = Matrix::zeros(dt, dm * dn);
    for i in 0..dm {
        for j in 0..dn {
            match pt.coords(&kron_vec(&pm.reps[i], &pn.reps[j])) {
                Some(c) => {
                    for (k, v) in c.into_iter().enumerate() {
                        phi.set(k, i * dn + j, v);
                    }
                }
                None => w.well_defined = false,
            }
        }
    }
    if !w.well_defined {
        return w;
    }
    w.invertible = dt == dm * dn && (dt == 0 || phi.inverse().is_some());
    let lhs = pt.d.mul(&phi);
    let leib = pm.d.kron(&Matrix::identity(dn)).add(&sign_matrix(&pm).kron(&pn.d));
    w.leibniz = lhs == phi.mul(&leib);
    w.phi = Some(phi);
    w
}

/// Comparison of `E_r(M^vee)` in the opposite order with `E_r(M)`: equal
/// dimensions per (weight, parity), and the rank of `d_r` out of each grade of
/// `E_r(M)` equals the rank into that grade on the contragredient side. These
/// invariants determine a graded complex up to isomorphism.
#[derive(Clone, Debug, Serialize)]
pub struct DualityWitness {
    pub r: usize,
    pub order: Order,
    pub dims_match: bool,
    pub ranks_match: bool,
}

impl DualityWitness {
    pub fn holds(&self) -> bool {
        self.dims_match && self.ranks_match
    }
}

fn ranks_into(p: &Page) -> BTreeMap<(Rational, Parity), usize> {
    let all: Vec<usize> = (0..p.dim()).collect();
    p.grades()
        .into_iter()
        .map(|(g, rows)| (g, p.d.select(&rows, &all).rank()))
        .collect()
}

pub fn page_duality(m: &SuperModule, r: usize, order: Order) -> DualityWitness {
    let mc = c_invariants(m);
    let orig = PageComputer::new(&mc, order).page(r);
    let dual = PageComputer::new(&contragredient(&mc), order.other()).page(r);
    let dims_match = orig.dim_table() == dual.dim_table();
    let out = orig.d_ranks();
    let inn = ranks_into(&dual);
    let ranks_match = dims_match && out == inn;
    DualityWitness { r, order, dims_match, ranks_match }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::supermod::{make_indecomposable, IndecompId, IndecompKind};

    fn make(kind: IndecompKind) -> SuperModule {
        make_indecomposable(&IndecompId::new(kind)).unwrap()
    }

    #[test]
    fn w1_squared() {
        let w1 = make(IndecompKind::W(1));
        for r in 1..=3 {
            for o in Order::BOTH {
                let wit = page_tensor_iso(&w1, &w1, r, o);
                assert!(wit.holds(), "{wit:?}");
                assert_eq!(wit.target_dim, 1);
            }
        }
    }

    #[test]
    fn x_times_y_vanishes() {
        let wit = page_tensor_iso(&make(IndecompKind::X(1)), &make(IndecompKind::Y(1)), 2, Order::Yx);
        assert!(wit.holds());
        assert_eq!((wit.source_dim, wit.target_dim), (0, 0));
    }

    #[test]
    fn x_pages_survive_tensoring() {
        let wit = page_tensor_iso(&make(IndecompKind::X(2)), &make(IndecompKind::X(3)), 2, Order::Yx);
        assert!(wit.holds(), "{wit:?}");
        assert_eq!(wit.target_dim, 4);
    }

    #[test]
    fn duality_on_families() {
        for kind in [IndecompKind::X(3), IndecompKind::Y(2), IndecompKind::W(2), IndecompKind::W(-1), IndecompKind::P] {
            for r in 0..=4 {
                for o in Order::BOTH {
                    assert!(page_duality(&make(kind.clone()), r, o).holds(), "{kind} r={r} {o}");
                }
            }
        }
    }
}
