use num_traits::Zero;

use super::{BasisVector, SuperModule};
use crate::linalg::{Matrix, Rational};

/// Block-diagonal sum. Charges are per basis vector, so mixed charges are allowed.
pub fn direct_sum(a: &SuperModule, b: &SuperModule) -> SuperModule {
    direct_sum_all(&[a.clone(), b.clone()])
}

pub fn direct_sum_all(parts: &[SuperModule]) -> SuperModule {
    let nonzero: Vec<&SuperModule> = parts.iter().filter(|m| m.dim() > 0).collect();
    match nonzero.len() {
        0 => return SuperModule::zero(),
        1 => return nonzero[0].clone(),
        _ => {}
    }
    let mut basis = Vec::new();
    let mut x = Matrix::zeros(0, 0);
    let mut y = Matrix::zeros(0, 0);
    for (k, m) in nonzero.iter().enumerate() {
        basis.extend(m.basis().iter().map(|b| BasisVector {
            name: format!("[{k}]{}", b.name),
            ..b.clone()
        }));
        x = x.block_diag(m.x());
        y = y.block_diag(m.y());
    }
    SuperModule::new_unchecked(basis, x, y)
}

/// Tensor product with the Koszul sign rule. Basis vector `i * dim(b) + j` is `a_i (x) b_j`.
pub fn tensor(a: &SuperModule, b: &SuperModule) -> SuperModule {
    let mut basis = Vec::with_capacity(a.dim() * b.dim());
    for va in a.basis() {
        for vb in b.basis() {
            basis.push(BasisVector {
                name: format!("{}(x){}", va.name, vb.name),
                weight: &va.weight + &vb.weight,
                parity: va.parity.add(vb.parity),
                charge: &va.charge + &vb.charge,
            });
        }
    }
    let ib = Matrix::identity(b.dim());
    let sa = a.parity_matrix();
    let x = a.x().kron(&ib).add(&sa.kron(b.x()));
    let y = a.y().kron(&ib).add(&sa.kron(b.y()));
    SuperModule::new_unchecked(basis, x, y)
}

/// Flips every parity and keeps the operators.
pub fn parity_shift(v: &SuperModule) -> SuperModule {
    let basis = v
        .basis()
        .iter()
        .map(|b| BasisVector { parity: b.parity.flip(), ..b.clone() })
        .collect();
    SuperModule::new_unchecked(basis, v.x().clone(), v.y().clone())
}

/// Shifts every weight by `r`.
pub fn twist(v: &SuperModule, r: &Rational) -> SuperModule {
    if r.is_zero() {
        return v.clone();
    }
    let basis = v
        .basis()
        .iter()
        .map(|b| BasisVector { weight: &b.weight + r, ..b.clone() })
        .collect();
    SuperModule::new_unchecked(basis, v.x().clone(), v.y().clone())
}

/// Dual module: on the dual basis, an odd operator u acts by `-(u^T) S` where
/// `S = diag((-1)^{|v|})`; weights and charges negate.
pub fn dual(v: &SuperModule) -> SuperModule {
    let basis = v
        .basis()
        .iter()
        .map(|b| BasisVector {
            name: format!("{}*", b.name),
            weight: -&b.weight,
            parity: b.parity,
            charge: -&b.charge,
        })
        .collect();
    let s = v.parity_matrix();
    let x = v.x().transpose().mul(&s).neg();
    let y = v.y().transpose().mul(&s).neg();
    SuperModule::new_unchecked(basis, x, y)
}

/// `(V^*)^sigma` with `sigma(x) = -y`, `sigma(y) = x`, `sigma(h) = -h`, `sigma(c) = -c`.
/// Weights and charges come back to those of `v`.
pub fn contragredient(v: &SuperModule) -> SuperModule {
    let d = dual(v);
    let basis = d
        .basis()
        .iter()
        .zip(v.basis())
        .map(|(b, orig)| BasisVector {
            name: format!("{}^", orig.name),
            weight: -&b.weight,
            parity: b.parity,
            charge: -&b.charge,
        })
        .collect();
    SuperModule::new_unchecked(basis, d.y().neg(), d.x().clone())
}

/// The kernel of c, a direct summand spanned by the charge-0 basis vectors.
pub fn c_invariants(v: &SuperModule) -> SuperModule {
    if v.is_pgl() {
        return v.clone();
    }
    v.permuted(&v.c_invariant_indices())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{half, int};
    use crate::supermod::{make_indecomposable, IndecompId, IndecompKind, Parity};

    fn ind(kind: IndecompKind) -> SuperModule {
        make_indecomposable(&IndecompId::new(kind)).unwrap()
    }

    #[test]
    fn direct_sum_examples() {
        let w1 = ind(IndecompKind::W(1));
        assert_eq!(direct_sum(&w1, &SuperModule::zero()), w1);
        let dd = direct_sum(&w1, &w1);
        for (w, p, n) in w1.dim_table().iter() {
            assert_eq!(dd.dim_table().get(w, p), 2 * n);
        }
        let xy = direct_sum(&ind(IndecompKind::X(1)), &ind(IndecompKind::Y(1)));
        assert_eq!(xy.sdims(), (2, 2));
        assert_eq!(xy.weights().into_iter().collect::<Vec<_>>(), vec![half(-1), half(1)]);
    }

    #[test]
    fn tensor_examples() {
        let w0 = ind(IndecompKind::W(0));
        let x2 = ind(IndecompKind::X(2));
        assert_eq!(tensor(&w0, &x2).dim_table(), x2.dim_table());
        let w1 = ind(IndecompKind::W(1));
        assert_eq!(tensor(&w1, &w1).sdims(), (5, 4));
        let t = tensor(&ind(IndecompKind::X(1)), &ind(IndecompKind::Y(1)));
        assert!(SuperModule::new(t.basis().to_vec(), t.x().clone(), t.y().clone()).is_ok());
    }

    #[test]
    fn parity_twist_examples() {
        let w0 = ind(IndecompKind::W(0));
        assert_eq!(parity_shift(&w0).sdims(), (0, 1));
        let p = ind(IndecompKind::P);
        assert_eq!(parity_shift(&parity_shift(&p)), p);
        let w2 = twist(&ind(IndecompKind::W(2)), &half(1));
        let ws: Vec<_> = w2.weights().into_iter().collect();
        assert_eq!(ws, vec![half(-3), half(-1), half(1), half(3), half(5)]);
        assert_eq!(twist(&twist(&p, &half(3)), &half(-3)), p);
    }

    #[test]
    fn dual_examples() {
        let w1 = ind(IndecompKind::W(1));
        let d = dual(&w1);
        assert_eq!(d.dim_table(), ind(IndecompKind::W(-1)).dim_table());
        assert_eq!(dual(&dual(&w1)).dim_table(), w1.dim_table());
        let w0 = ind(IndecompKind::W(0));
        assert_eq!(dual(&w0).dim_table(), w0.dim_table());
    }

    #[test]
    fn contragredient_keeps_weights_and_charge() {
        let x2 = ind(IndecompKind::X(2));
        let c = contragredient(&x2);
        assert_eq!(c.dim_table(), x2.dim_table());
        let ch = ind(IndecompKind::Charged(int(2)));
        assert_eq!(contragredient(&ch).charges(), ch.charges());
    }

    #[test]
    fn c_invariant_examples() {
        let w1 = ind(IndecompKind::W(1));
        assert_eq!(c_invariants(&w1), w1);
        let ch = ind(IndecompKind::Charged(int(2)));
        assert_eq!(c_invariants(&ch).dim(), 0);
        let s = direct_sum(&w1, &ch);
        assert_eq!(c_invariants(&s).dim_table(), w1.dim_table());
        assert!(c_invariants(&s).basis().iter().all(|b| b.parity == Parity::Even || b.weight == int(0)));
    }
}
