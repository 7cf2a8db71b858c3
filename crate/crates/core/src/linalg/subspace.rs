use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::rational::Rational;
use super::LinalgError;

/// A subspace of `Q^n`, stored by its reduced row-echelon basis. Equal subspaces
/// have identical stored bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| unit(ambient, i)).collect();
        Subspace { ambient, basis, pivots: (0..ambient).collect() }
    }

    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<Rational>>) -> Self {
        let vectors: Vec<_> = vectors.into_iter().filter(|v| !is_zero_vec(v)).collect();
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let (r, pivots) = Matrix::from_rows(vectors, ambient).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { ambient, basis, pivots }
    }

    /// Span of the coordinate vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        Self::from_vectors(ambient, indices.iter().map(|&i| unit(ambient, i)).collect())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Remainder of `v` after clearing pivot coordinates.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut w = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (wi, bi) in w.iter_mut().zip(b) {
                if !bi.is_zero() {
                    *wi -= &f * bi;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient);
        is_zero_vec(&self.reduce(v))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if other.is_subspace_of(self) {
            return self.clone();
        }
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Subspace::from_vectors(self.ambient, v)
    }

    pub fn sum_all<'a>(ambient: usize, parts: impl IntoIterator<Item = &'a Subspace>) -> Subspace {
        let mut v = Vec::new();
        for p in parts {
            v.extend(p.basis.iter().cloned());
        }
        Subspace::from_vectors(ambient, v)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.is_subspace_of(other) {
            return self.clone();
        }
        if other.is_subspace_of(self) {
            return other.clone();
        }
        // a in both iff a = sum alpha_i s_i = sum beta_j o_j
        let k = self.dim();
        let mut cols: Vec<Vec<Rational>> = self.basis.clone();
        cols.extend(other.basis.iter().map(|b| b.iter().map(|x| -x).collect()));
        let ker = Matrix::from_cols(&cols, self.ambient).kernel();
        let vecs = ker
            .basis()
            .iter()
            .map(|c| combine(&self.basis, &c[..k], self.ambient))
            .collect();
        Subspace::from_vectors(self.ambient, vecs)
    }

    /// Image under a linear map.
    pub fn map(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        Subspace::from_vectors(m.rows(), self.basis.iter().map(|b| m.mul_vec(b)).collect())
    }
}

/// Coset representatives of `big / small`, picked from the echelon basis of `big`
/// in order.
pub fn quotient_basis(big: &Subspace, small: &Subspace) -> Result<Vec<Vec<Rational>>, LinalgError> {
    if !small.is_subspace_of(big) {
        return Err(LinalgError::NotSubspace);
    }
    let mut acc = small.clone();
    let mut reps = Vec::new();
    for b in big.basis() {
        if acc.dim() == big.dim() {
            break;
        }
        if !acc.contains(b) {
            acc = acc.sum(&Subspace::from_vectors(big.ambient(), vec![b.clone()]));
            reps.push(b.clone());
        }
    }
    Ok(reps)
}

/// Coordinates in `span(reps) + small` modulo `small`, with `reps` independent mod `small`.
#[derive(Clone, Debug)]
pub struct QuotientFrame {
    ambient: usize,
    n_reps: usize,
    columns: Matrix,
    rows_sel: Vec<usize>,
    left_inv: Matrix,
}

impl QuotientFrame {
    pub fn new(reps: &[Vec<Rational>], small: &Subspace) -> Self {
        let ambient = small.ambient();
        let mut cols: Vec<Vec<Rational>> = reps.to_vec();
        cols.extend(small.basis().iter().cloned());
        let columns = Matrix::from_cols(&cols, ambient);
        let (_, rows_sel) = columns.transpose().rref();
        assert_eq!(rows_sel.len(), cols.len(), "quotient frame: reps not independent mod small");
        let all: Vec<usize> = (0..cols.len()).collect();
        let left_inv = columns
            .select(&rows_sel, &all)
            .inverse()
            .expect("selected rows are independent");
        QuotientFrame { ambient, n_reps: reps.len(), columns, rows_sel, left_inv }
    }

    pub fn dim(&self) -> usize {
        self.n_reps
    }

    /// Coordinates of `v` on the representatives, or `None` if `v` lies outside
    /// `span(reps) + small`.
    pub fn coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient);
        let sel: Vec<Rational> = self.rows_sel.iter().map(|&i| v[i].clone()).collect();
        let full = self.left_inv.mul_vec(&sel);
        if self.columns.mul_vec(&full) != v {
            return None;
        }
        Some(full[..self.n_reps].to_vec())
    }
}

pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `sum coeffs[i] * vecs[i]`.
pub fn combine(vecs: &[Vec<Rational>], coeffs: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (v, c) in vecs.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o += c * x;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn canonical_storage() {
        let a = Subspace::from_vectors(3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::from_vectors(3, vec![v(&[1, 2, 1]), v(&[1, 0, -1]), v(&[2, 2, 0])]);
        assert_eq!(a, b);
    }

    #[test]
    fn quotient_examples() {
        let full = Subspace::full(3);
        assert!(quotient_basis(&full, &full).unwrap().is_empty());
        assert_eq!(quotient_basis(&full, &Subspace::zero(3)).unwrap().len(), 3);
        let big = Subspace::from_vectors(2, vec![v(&[1, 0]), v(&[0, 1])]);
        let small = Subspace::from_vectors(2, vec![v(&[1, 1])]);
        assert_eq!(quotient_basis(&big, &small).unwrap(), vec![v(&[1, 0])]);
        assert!(matches!(quotient_basis(&small, &big), Err(LinalgError::NotSubspace)));
        let e2 = Subspace::from_vectors(4, vec![v(&[0, 1, 0, 0])]);
        let reps = quotient_basis(&Subspace::full(4), &e2).unwrap();
        assert_eq!(reps.len(), 3);
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::from_vectors(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::from_vectors(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(a.intersect(&b), Subspace::from_vectors(3, vec![v(&[0, 1, 0])]));
        assert_eq!(a.sum(&b).dim(), 3);
    }

    #[test]
    fn frame_coordinates() {
        let small = Subspace::from_vectors(3, vec![v(&[0, 0, 1])]);
        let frame = QuotientFrame::new(&[v(&[1, 0, 0]), v(&[1, 1, 0])], &small);
        assert_eq!(frame.coords(&v(&[3, 2, 7])), Some(v(&[1, 2])));
        let line = Subspace::zero(3);
        let f2 = QuotientFrame::new(&[v(&[1, 0, 0])], &line);
        assert_eq!(f2.coords(&v(&[0, 1, 0])), None);
    }
}
