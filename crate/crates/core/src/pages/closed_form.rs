use crate::linalg::rational::{half, int};
use crate::supermod::{make_indecomposable, DimTable, IndecompId, IndecompKind, ModuleError, Parity};

use super::Order;

/// Page dimensions of an indecomposable, read off from its shape instead of
/// computed: projectives die at `r >= 1`, `W(m)_s` leaves one even line at `s + m`
/// (order xy) or `s - m` (order yx), `X(n)` lives for `n` pages in order yx only,
/// `Y(n)` for `n` pages in order xy only.
pub fn closed_form_page_dims(id: &IndecompId, r: usize, order: Order) -> Result<DimTable, ModuleError> {
    let base = if id.parity_shift { Parity::Odd } else { Parity::Even };
    if r == 0 {
        let m = make_indecomposable(id)?;
        return Ok(crate::supermod::c_invariants(&m).dim_table());
    }
    let s = &id.twist;
    let mut t = DimTable::new();
    match (&id.kind, order) {
        (IndecompKind::P, _) | (IndecompKind::Charged(_), _) => {}
        (IndecompKind::W(m), Order::Xy) => t.add(s + int(*m), base, 1),
        (IndecompKind::W(m), Order::Yx) => t.add(s - int(*m), base, 1),
        (IndecompKind::X(n), Order::Yx) | (IndecompKind::Y(n), Order::Xy) => {
            let n = *n as i64;
            if r as i64 <= n {
                t.add(s + half(-2 * n + 1), base, 1);
                t.add(s + half(2 * n - 1), base.flip(), 1);
            }
        }
        (IndecompKind::X(_), Order::Xy) | (IndecompKind::Y(_), Order::Yx) => {}
    }
    Ok(t)
}

/// Rank of `d_r` on an indecomposable: 1 exactly on the last page of an X (yx) or Y (xy).
pub fn closed_form_d_rank(id: &IndecompId, r: usize, order: Order) -> usize {
    match (&id.kind, order) {
        (IndecompKind::X(n), Order::Yx) | (IndecompKind::Y(n), Order::Xy) if r == *n as usize => 1,
        _ => 0,
    }
}
