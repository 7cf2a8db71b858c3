//! Finite-dimensional gl(1|1)-modules with semisimple h: weight-graded super
//! vector spaces with odd operators x (weight +1), y (weight -1) and a central
//! element c acting by a scalar on each basis vector.

mod dims;
mod indecomp;
mod json;
mod ops;
mod scramble;

pub use dims::DimTable;
pub use indecomp::{make_indecomposable, IndecompId, IndecompKind, Multiset};
pub use json::{ModuleJson, MODULE_SCHEMA};
pub use ops::{
    c_invariants, contragredient, direct_sum, direct_sum_all, dual, parity_shift, tensor, twist,
};
pub use scramble::random_basis_change;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

use crate::linalg::rational::{fmt_rational, Rational};
use crate::linalg::{Matrix, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn add(self, other: Parity) -> Parity {
        if other == Parity::Odd {
            self.flip()
        } else {
            self
        }
    }

    /// `(-1)^{|v|}`.
    pub fn sign(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub const BOTH: [Parity; 2] = [Parity::Even, Parity::Odd];
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisVector {
    pub name: String,
    pub weight: Rational,
    pub parity: Parity,
    /// Eigenvalue of c on this vector.
    pub charge: Rational,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ModuleError {
    #[error("invalid indecomposable: {0}")]
    InvalidIndecomposable(String),
    #[error("operator {op} has shape {rows}x{cols}, expected {dim}x{dim}")]
    Shape { op: &'static str, rows: usize, cols: usize, dim: usize },
    #[error("operator {op} entry ({row},{col}) violates the weight/parity/charge grading")]
    Grading { op: &'static str, row: usize, col: usize },
    #[error("relation {0} fails")]
    Relation(&'static str),
    #[error("operation needs central charge 0, found {0}")]
    NonzeroCharge(String),
    #[error("bad module JSON: {0}")]
    Json(String),
}

/// A finite-dimensional gl(1|1)-module with h acting semisimply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperModule {
    basis: Vec<BasisVector>,
    x: Matrix,
    y: Matrix,
}

impl SuperModule {
    /// Validates gradings and the relations x^2 = y^2 = 0, xy + yx = c.
    pub fn new(basis: Vec<BasisVector>, x: Matrix, y: Matrix) -> Result<Self, ModuleError> {
        let m = SuperModule { basis, x, y };
        m.check()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(basis: Vec<BasisVector>, x: Matrix, y: Matrix) -> Self {
        let m = SuperModule { basis, x, y };
        debug_assert_eq!(m.check(), Ok(()));
        m
    }

    pub fn zero() -> Self {
        SuperModule { basis: Vec::new(), x: Matrix::zeros(0, 0), y: Matrix::zeros(0, 0) }
    }

    fn check(&self) -> Result<(), ModuleError> {
        let n = self.dim();
        for (op, m, shift) in [("x", &self.x, 1), ("y", &self.y, -1)] {
            if m.rows() != n || m.cols() != n {
                return Err(ModuleError::Shape { op, rows: m.rows(), cols: m.cols(), dim: n });
            }
            let shift = Rational::from_integer(shift.into());
            for (i, j, _) in m.nonzeros() {
                let (a, b) = (&self.basis[i], &self.basis[j]);
                if a.weight != &b.weight + &shift || a.parity == b.parity || a.charge != b.charge {
                    return Err(ModuleError::Grading { op, row: i, col: j });
                }
            }
        }
        if !self.x.mul(&self.x).is_zero() {
            return Err(ModuleError::Relation("x^2 = 0"));
        }
        if !self.y.mul(&self.y).is_zero() {
            return Err(ModuleError::Relation("y^2 = 0"));
        }
        let anti = self.x.mul(&self.y).add(&self.y.mul(&self.x));
        if anti != self.charge_matrix() {
            return Err(ModuleError::Relation("xy + yx = c"));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn x(&self) -> &Matrix {
        &self.x
    }

    pub fn y(&self) -> &Matrix {
        &self.y
    }

    pub fn charge_matrix(&self) -> Matrix {
        let c: Vec<Rational> = self.basis.iter().map(|b| b.charge.clone()).collect();
        Matrix::diagonal(&c)
    }

    /// Diagonal matrix of `(-1)^{|v|}`.
    pub fn parity_matrix(&self) -> Matrix {
        let s: Vec<Rational> = self
            .basis
            .iter()
            .map(|b| Rational::from_integer(b.parity.sign().into()))
            .collect();
        Matrix::diagonal(&s)
    }

    pub fn weights(&self) -> BTreeSet<Rational> {
        self.basis.iter().map(|b| b.weight.clone()).collect()
    }

    /// Distinct central charges present.
    pub fn charges(&self) -> BTreeSet<Rational> {
        self.basis.iter().map(|b| b.charge.clone()).collect()
    }

    pub fn is_pgl(&self) -> bool {
        self.basis.iter().all(|b| b.charge.is_zero())
    }

    /// Basis indices with zero central charge, in order.
    pub fn c_invariant_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].charge.is_zero()).collect()
    }

    pub fn min_weight(&self) -> Option<Rational> {
        self.basis.iter().map(|b| b.weight.clone()).min()
    }

    pub fn max_weight(&self) -> Option<Rational> {
        self.basis.iter().map(|b| b.weight.clone()).max()
    }

    /// max weight - min weight, 0 for the zero module.
    pub fn weight_spread(&self) -> Rational {
        match (self.min_weight(), self.max_weight()) {
            (Some(a), Some(b)) => b - a,
            _ => Rational::zero(),
        }
    }

    pub fn dim_table(&self) -> DimTable {
        let mut t = DimTable::new();
        for b in &self.basis {
            t.add(b.weight.clone(), b.parity, 1);
        }
        t
    }

    /// (even, odd) dimensions.
    pub fn sdims(&self) -> (usize, usize) {
        let e = self.basis.iter().filter(|b| b.parity == Parity::Even).count();
        (e, self.dim() - e)
    }

    /// Basis indices of the given weight and parity.
    pub fn indices_at(&self, weight: &Rational, parity: Parity) -> Vec<usize> {
        self.basis
            .iter()
            .enumerate()
            .filter(|(_, b)| &b.weight == weight && b.parity == parity)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn socle(&self) -> Result<Subspace, ModuleError> {
        self.require_pgl()?;
        Ok(self.x.kernel().intersect(&self.y.kernel()))
    }

    pub fn radical(&self) -> Result<Subspace, ModuleError> {
        self.require_pgl()?;
        Ok(self.x.image().sum(&self.y.image()))
    }

    pub(crate) fn require_pgl(&self) -> Result<(), ModuleError> {
        match self.basis.iter().find(|b| !b.charge.is_zero()) {
            Some(b) => Err(ModuleError::NonzeroCharge(fmt_rational(&b.charge))),
            None => Ok(()),
        }
    }

    /// Reorders the basis by (weight, parity, old index) and conjugates the operators.
    pub fn sorted(&self) -> SuperModule {
        let mut order: Vec<usize> = (0..self.dim()).collect();
        order.sort_by(|&a, &b| {
            let (va, vb) = (&self.basis[a], &self.basis[b]);
            (&va.weight, va.parity, a).cmp(&(&vb.weight, vb.parity, b))
        });
        self.permuted(&order)
    }

    /// New basis vector `k` is old vector `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> SuperModule {
        let basis = order.iter().map(|&i| self.basis[i].clone()).collect();
        SuperModule {
            basis,
            x: self.x.select(order, order),
            y: self.y.select(order, order),
        }
    }

    pub fn with_names(mut self, f: impl Fn(usize, &BasisVector) -> String) -> SuperModule {
        let names: Vec<String> = self.basis.iter().enumerate().map(|(i, b)| f(i, b)).collect();
        for (b, n) in self.basis.iter_mut().zip(names) {
            b.name = n;
        }
        self
    }

    /// Largest |weight|, used to bound search windows.
    pub fn max_abs_weight(&self) -> Rational {
        self.basis.iter().map(|b| b.weight.abs()).max().unwrap_or_else(Rational::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    fn line(weight: i64, parity: Parity) -> BasisVector {
        BasisVector { name: "v".into(), weight: int(weight), parity, charge: int(0) }
    }

    #[test]
    fn rejects_bad_grading() {
        let basis = vec![line(0, Parity::Even), line(1, Parity::Even)];
        let x = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        let err = SuperModule::new(basis, x, Matrix::zeros(2, 2)).unwrap_err();
        assert!(matches!(err, ModuleError::Grading { op: "x", .. }));
    }

    #[test]
    fn rejects_bad_anticommutator() {
        let basis = vec![line(0, Parity::Even), line(1, Parity::Odd)];
        let x = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        let y = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let err = SuperModule::new(basis, x, y).unwrap_err();
        assert_eq!(err, ModuleError::Relation("xy + yx = c"));
    }

    #[test]
    fn accepts_charged_simple() {
        let mut basis = vec![line(0, Parity::Even), line(1, Parity::Odd)];
        for b in &mut basis {
            b.charge = int(3);
        }
        let x = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        let y = Matrix::from_i64(&[&[0, 3], &[0, 0]]);
        let m = SuperModule::new(basis, x, y).unwrap();
        assert!(!m.is_pgl());
        assert!(m.socle().is_err());
    }
}
