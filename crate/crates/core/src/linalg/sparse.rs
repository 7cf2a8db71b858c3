use num_traits::{One, Zero};
use std::collections::BTreeMap;

use super::rational::Rational;

type Row = Vec<(usize, Rational)>;

/// Homogeneous linear system with sparse rows, for the large block-structured
/// constraint systems (equivariance, chains). Same pivot rule as the dense kernel:
/// the lowest column index wins.
#[derive(Clone, Debug, Default)]
pub struct SparseSystem {
    ncols: usize,
    rows: Vec<Row>,
}

impl SparseSystem {
    pub fn new(ncols: usize) -> Self {
        SparseSystem { ncols, rows: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Adds a row; entries may repeat a column and are summed.
    pub fn push_row(&mut self, entries: impl IntoIterator<Item = (usize, Rational)>) {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (c, v) in entries {
            assert!(c < self.ncols, "column out of range");
            *acc.entry(c).or_insert_with(Rational::zero) += v;
        }
        let row: Row = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        if !row.is_empty() {
            self.rows.push(row);
        }
    }

    /// Basis of the solution space, one vector per free column in increasing order.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let mut pivots: BTreeMap<usize, Row> = BTreeMap::new();
        for row in &self.rows {
            let mut r = row.clone();
            while let Some(&(lead, ref coef)) = r.first() {
                match pivots.get(&lead) {
                    Some(p) => {
                        let f = coef.clone();
                        r = axpy(&r, p, &f);
                    }
                    None => break,
                }
            }
            if let Some((lead, coef)) = r.first().cloned() {
                let inv = coef.recip();
                let normed: Row = r.into_iter().map(|(c, v)| (c, v * &inv)).collect();
                pivots.insert(lead, normed);
            }
        }
        // back substitution to reduced form, highest pivot first
        let leads: Vec<usize> = pivots.keys().rev().cloned().collect();
        for &p in &leads {
            let prow = pivots[&p].clone();
            for (_, other) in pivots.range_mut(..p) {
                if let Ok(pos) = other.binary_search_by_key(&p, |e| e.0) {
                    let f = other[pos].1.clone();
                    *other = axpy(other, &prow, &f);
                }
            }
        }
        let mut free_rows: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
        for (&p, row) in &pivots {
            for (c, v) in row.iter().skip(1) {
                free_rows.entry(*c).or_default().push((p, -v.clone()));
            }
        }
        (0..self.ncols)
            .filter(|c| !pivots.contains_key(c))
            .map(|f| {
                let mut v = vec![Rational::zero(); self.ncols];
                v[f] = Rational::one();
                if let Some(es) = free_rows.get(&f) {
                    for (p, x) in es {
                        v[*p] = x.clone();
                    }
                }
                v
            })
            .collect()
    }
}

/// `a - f * b` for sorted sparse rows.
fn axpy(a: &Row, b: &Row, f: &Rational) -> Row {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(f * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - f * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::{kernel, Matrix};
    use crate::linalg::rational::int;
    use crate::linalg::subspace::Subspace;

    #[test]
    fn agrees_with_dense_kernel() {
        let dense = Matrix::from_i64(&[&[1, 2, 0, -1], &[0, 0, 1, 1], &[1, 2, 1, 0]]);
        let mut s = SparseSystem::new(4);
        for i in 0..3 {
            s.push_row(dense.row(i).iter().cloned().enumerate());
        }
        let sparse = Subspace::from_vectors(4, s.kernel_basis());
        assert_eq!(sparse, kernel(&dense));
        for v in s.kernel_basis() {
            assert!(dense.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn empty_system_has_full_kernel() {
        let s = SparseSystem::new(3);
        assert_eq!(s.kernel_basis().len(), 3);
        let mut t = SparseSystem::new(2);
        t.push_row(vec![(0, int(1)), (0, int(-1))]);
        assert_eq!(t.kernel_basis().len(), 2);
    }
}
