//! Spaces of equivariant maps between modules, socles and radicals, and the
//! morphism constraints between the W, X, Y families.

use num_traits::Zero;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

use crate::linalg::{Matrix, Rational, SparseSystem, Subspace};
use crate::supermod::{make_indecomposable, IndecompId, IndecompKind, ModuleError, Parity, SuperModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Equivariance {
    /// Commutes with x, y, c; may shift h-weight uniformly.
    Sl,
    /// Also weight-preserving.
    Gl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MapParity {
    Even,
    Odd,
    Both,
}

impl MapParity {
    fn parities(self) -> Vec<Parity> {
        match self {
            MapParity::Even => vec![Parity::Even],
            MapParity::Odd => vec![Parity::Odd],
            MapParity::Both => vec![Parity::Even, Parity::Odd],
        }
    }
}

/// Basis of a space of equivariant maps `source -> target`. An odd map is an even
/// map into the parity-shifted target, so every map satisfies `F x = x F` and
/// `F y = y F` as plain matrices. Each map is homogeneous: a fixed weight shift and
/// a fixed parity.
#[derive(Clone, Debug)]
pub struct HomBasis {
    pub maps: Vec<Matrix>,
    pub parities: Vec<Parity>,
    pub shifts: Vec<Rational>,
    pub equivariance: Equivariance,
    pub parity: MapParity,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }
}

/// Weight shifts `s` for which homogeneous maps of shift `s` could be nonzero.
fn candidate_shifts(a: &SuperModule, b: &SuperModule, eq: Equivariance) -> Vec<Rational> {
    match eq {
        Equivariance::Gl => vec![Rational::zero()],
        Equivariance::Sl => {
            let mut s = BTreeSet::new();
            for va in a.weights() {
                for vb in b.weights() {
                    s.insert(&vb - &va);
                }
            }
            s.into_iter().collect()
        }
    }
}

/// Nonzero entries per row and per column of an operator.
struct OpIndex {
    by_row: Vec<Vec<(usize, Rational)>>,
    by_col: Vec<Vec<(usize, Rational)>>,
}

impl OpIndex {
    fn new(m: &Matrix) -> Self {
        let mut by_row = vec![Vec::new(); m.rows()];
        let mut by_col = vec![Vec::new(); m.cols()];
        for (i, j, v) in m.nonzeros() {
            by_row[i].push((j, v.clone()));
            by_col[j].push((i, v.clone()));
        }
        OpIndex { by_row, by_col }
    }
}

/// Homogeneous equivariant maps of the given weight shift and parity.
pub fn homogeneous_maps(a: &SuperModule, b: &SuperModule, shift: &Rational, parity: Parity) -> Vec<Matrix> {
    // unknown F[i][j] allowed when b_i has weight a_j + shift, matching parity and charge
    let mut unknowns: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (j, va) in a.basis().iter().enumerate() {
        let w = &va.weight + shift;
        for (i, vb) in b.basis().iter().enumerate() {
            if vb.weight == w && vb.parity == va.parity.add(parity) && vb.charge == va.charge {
                let k = unknowns.len();
                unknowns.insert((i, j), k);
            }
        }
    }
    if unknowns.is_empty() {
        return Vec::new();
    }
    let mut sys = SparseSystem::new(unknowns.len());
    for (op_a, op_b) in [(a.x(), b.x()), (a.y(), b.y())] {
        let ia = OpIndex::new(op_a);
        let ib = OpIndex::new(op_b);
        // equation (i, j): sum_l F[i][l] opA[l][j] - sum_l opB[i][l] F[l][j] = 0
        let mut rows: BTreeMap<(usize, usize), Vec<(usize, Rational)>> = BTreeMap::new();
        for (&(i, l), &u) in &unknowns {
            for (j, v) in &ia.by_row[l] {
                rows.entry((i, *j)).or_default().push((u, v.clone()));
            }
        }
        for (&(l, j), &u) in &unknowns {
            for (i, v) in &ib.by_col[l] {
                rows.entry((*i, j)).or_default().push((u, -v.clone()));
            }
        }
        for (_, r) in rows {
            sys.push_row(r);
        }
    }
    let mut keys = vec![(0, 0); unknowns.len()];
    for (&ij, &u) in &unknowns {
        keys[u] = ij;
    }
    sys.kernel_basis()
        .into_iter()
        .map(|sol| {
            let mut f = Matrix::zeros(b.dim(), a.dim());
            for (k, v) in sol.into_iter().enumerate() {
                if !v.is_zero() {
                    let (i, j) = keys[k];
                    f.set(i, j, v);
                }
            }
            f
        })
        .collect()
}

pub fn hom_space(a: &SuperModule, b: &SuperModule, eq: Equivariance, parity: MapParity) -> HomBasis {
    let mut out = HomBasis {
        maps: Vec::new(),
        parities: Vec::new(),
        shifts: Vec::new(),
        equivariance: eq,
        parity,
    };
    for s in candidate_shifts(a, b, eq) {
        for p in parity.parities() {
            for f in homogeneous_maps(a, b, &s, p) {
                out.maps.push(f);
                out.parities.push(p);
                out.shifts.push(s.clone());
            }
        }
    }
    out
}

pub fn hom_dim(a: &SuperModule, b: &SuperModule, eq: Equivariance, parity: MapParity) -> usize {
    hom_space(a, b, eq, parity).dim()
}

/// Checks `F x = x F`, `F y = y F`, and the grading of every map.
pub fn is_equivariant(a: &SuperModule, b: &SuperModule, f: &Matrix, shift: &Rational, parity: Parity) -> bool {
    if f.mul(a.x()) != b.x().mul(f) || f.mul(a.y()) != b.y().mul(f) {
        return false;
    }
    f.nonzeros().all(|(i, j, _)| {
        let (vb, va) = (&b.basis()[i], &a.basis()[j]);
        vb.weight == &va.weight + shift && vb.parity == va.parity.add(parity) && vb.charge == va.charge
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaCheck {
    pub part: u8,
    pub source: String,
    pub target: String,
    pub maps: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct MorphismLemmaReport {
    pub checks: Vec<LemmaCheck>,
}

impl MorphismLemmaReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

fn ind(kind: IndecompKind, twist: &Rational) -> Result<(IndecompId, SuperModule), ModuleError> {
    let id = IndecompId::new(kind).twisted(twist.clone());
    let m = make_indecomposable(&id)?;
    Ok((id, m))
}

fn kills(maps: &HomBasis, sub: &Subspace) -> bool {
    maps.maps.iter().all(|f| sub.basis().iter().all(|v| f.mul_vec(v).iter().all(Zero::is_zero)))
}

fn lands_in(maps: &HomBasis, sub: &Subspace) -> bool {
    maps.maps.iter().all(|f| (0..f.cols()).all(|j| sub.contains(&f.col(j))))
}

/// Runs every applicable part of the morphism constraints for the parameters
/// `(m, n, r, s)`:
/// 1. `m < n <= 0`: maps `W(m)_r -> W(n)_s` kill the socle of the source.
/// 2. `0 <= m < n`: maps `W(m)_r -> W(n)_s` land in the radical of the target.
/// 3. `m <= 0 < n`: maps `X(n)_r -> W(m)_s`, `Y(n)_r -> W(m)_s` kill the socle.
/// 4. `m >= 0, n > 0`: maps `W(m)_s -> X(n)_r`, `W(m)_s -> Y(n)_r` land in the radical.
pub fn check_morphism_lemma(m: i64, n: i64, r: &Rational, s: &Rational) -> Result<MorphismLemmaReport, ModuleError> {
    let mut report = MorphismLemmaReport::default();
    let mut push = |part: u8, src: &(IndecompId, SuperModule), tgt: &(IndecompId, SuperModule), socle_side: bool| -> Result<(), ModuleError> {
        let maps = hom_space(&src.1, &tgt.1, Equivariance::Gl, MapParity::Both);
        let holds = if socle_side {
            kills(&maps, &src.1.socle()?)
        } else {
            lands_in(&maps, &tgt.1.radical()?)
        };
        report.checks.push(LemmaCheck {
            part,
            source: src.0.to_string(),
            target: tgt.0.to_string(),
            maps: maps.dim(),
            holds,
        });
        Ok(())
    };
    if m < n && n <= 0 {
        push(1, &ind(IndecompKind::W(m), r)?, &ind(IndecompKind::W(n), s)?, true)?;
    }
    if 0 <= m && m < n {
        push(2, &ind(IndecompKind::W(m), r)?, &ind(IndecompKind::W(n), s)?, false)?;
    }
    if m <= 0 && n > 0 {
        let w = ind(IndecompKind::W(m), s)?;
        push(3, &ind(IndecompKind::X(n as u32), r)?, &w, true)?;
        push(3, &ind(IndecompKind::Y(n as u32), r)?, &w, true)?;
    }
    if m >= 0 && n > 0 {
        let w = ind(IndecompKind::W(m), s)?;
        push(4, &w, &ind(IndecompKind::X(n as u32), r)?, false)?;
        push(4, &w, &ind(IndecompKind::Y(n as u32), r)?, false)?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{half, int};
    use crate::supermod::contragredient;

    fn make(kind: IndecompKind, t: Rational) -> SuperModule {
        make_indecomposable(&IndecompId::new(kind).twisted(t)).unwrap()
    }

    #[test]
    fn identity_is_a_map() {
        for n in -3..=3 {
            let w = make(IndecompKind::W(n), int(0));
            let h = hom_space(&w, &w, Equivariance::Gl, MapParity::Even);
            assert!(h.dim() >= 1);
            let id = Matrix::identity(w.dim());
            let span = Subspace::from_vectors(
                w.dim() * w.dim(),
                h.maps.iter().map(|f| f.to_rows().concat()).collect(),
            );
            assert!(span.contains(&id.to_rows().concat()));
        }
    }

    #[test]
    fn socle_embedding_of_trivial() {
        // the socle of W(-m) is even with lowest weight -m, so W(-m)_m receives W(0)
        let w0 = make(IndecompKind::W(0), int(0));
        for m in 1..=4 {
            let wm = make(IndecompKind::W(-m), int(m));
            assert_eq!(hom_dim(&w0, &wm, Equivariance::Gl, MapParity::Even), 1);
            // for m > 0 the weight-0 vector of W(m)_{-m} is a top, so nothing maps in
            let top = make(IndecompKind::W(m), int(-m));
            assert_eq!(hom_dim(&w0, &top, Equivariance::Gl, MapParity::Both), 0);
        }
    }

    #[test]
    fn maps_are_equivariant() {
        let a = make(IndecompKind::X(2), half(1));
        let b = crate::supermod::tensor(&make(IndecompKind::W(1), int(0)), &make(IndecompKind::P, half(1)));
        let h = hom_space(&a, &b, Equivariance::Sl, MapParity::Both);
        assert!(h.dim() > 0);
        for k in 0..h.dim() {
            assert!(is_equivariant(&a, &b, &h.maps[k], &h.shifts[k], h.parities[k]));
        }
    }

    #[test]
    fn socle_and_radical_examples() {
        let w0 = make(IndecompKind::W(0), int(0));
        assert_eq!(w0.socle().unwrap().dim(), 1);
        let w1 = make(IndecompKind::W(1), int(0));
        let rad = w1.radical().unwrap();
        assert_eq!(rad.dim(), 1);
        let mid = w1.indices_at(&int(0), Parity::Odd);
        assert_eq!(rad, Subspace::coordinate(w1.dim(), &mid));
        let p = make(IndecompKind::P, int(0));
        // top is the first even weight-0 basis vector in sorted order, bottom the second
        let top = crate::linalg::subspace::unit(4, 1);
        let bottom = crate::linalg::subspace::unit(4, 2);
        assert!(p.socle().unwrap().contains(&bottom));
        assert!(!p.radical().unwrap().contains(&top));
    }

    #[test]
    fn duality_preserves_hom_dims() {
        let ids = [
            IndecompKind::X(1),
            IndecompKind::Y(2),
            IndecompKind::W(-1),
            IndecompKind::W(2),
            IndecompKind::P,
        ];
        for a in &ids {
            for b in &ids {
                for t in [int(-1), int(0), half(1)] {
                    let ma = make(a.clone(), int(0));
                    let mb = make(b.clone(), t.clone());
                    let d1 = hom_dim(&ma, &mb, Equivariance::Gl, MapParity::Both);
                    let d2 = hom_dim(&contragredient(&mb), &contragredient(&ma), Equivariance::Gl, MapParity::Both);
                    assert_eq!(d1, d2, "{a} -> {b}_{t}");
                }
            }
        }
    }

    #[test]
    fn morphism_lemma_cases() {
        for (m, n) in [(-2, -1), (-3, 0), (0, 1), (1, 3), (0, 2), (-1, 2), (2, 1)] {
            for s in -4..=4 {
                let rep = check_morphism_lemma(m, n, &int(0), &int(s)).unwrap();
                assert!(rep.all_hold(), "{m} {n} {s}: {rep:?}");
                assert!(!rep.checks.is_empty());
            }
        }
        let nontrivial = (-4..=4).any(|s| {
            check_morphism_lemma(-2, -1, &int(0), &int(s)).unwrap().checks.iter().any(|c| c.maps > 0)
        });
        assert!(nontrivial);
    }
}
