//! A fixed corpus of modules, seeded random modules, and the brute-force oracles.

pub mod oracle;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::expr::module;
use crate::linalg::rational::{half, int};
use crate::supermod::{make_indecomposable, random_basis_change, IndecompId, IndecompKind, Multiset, SuperModule};

pub use oracle::{oracle_decompose, oracle_pages, OracleError};

/// Expressions making up the fixed corpus.
pub const CORPUS_EXPRS: &[&str] = &[
    "P",
    "Pi P_1/2",
    "X(1)",
    "X(2)",
    "X(3)_1/2",
    "Y(1)",
    "Y(2)",
    "Pi Y(3)",
    "W(0)",
    "W(1)",
    "W(2)_-1",
    "W(-1)",
    "W(-3)_1/2",
    "W(3)",
    "X(1) (x) X(2)",
    "Y(1) (x) Y(2)",
    "X(1) (x) Y(1)",
    "W(1) (x) W(-2)",
    "W(1) (x) X(2)",
    "W(-1) (x) Y(2)",
    "W(1) (x) W(1)",
    "X(2) (+) Pi Y(2)_1",
    "W(2) (+) W(-2)_1/2 (+) P",
    "vee(X(2)) (+) dual(W(1))",
];

pub fn corpus() -> Vec<(String, SuperModule)> {
    CORPUS_EXPRS.iter().map(|s| (s.to_string(), module(s).expect("corpus expressions are valid"))).collect()
}

/// Every indecomposable P, X(k), Y(k), W(m) with `k <= n`, `|m| <= n`, untwisted.
pub fn indecomposables(n: u32) -> Vec<IndecompId> {
    let mut out = vec![IndecompId::new(IndecompKind::P)];
    for k in 1..=n {
        out.push(IndecompId::new(IndecompKind::X(k)));
        out.push(IndecompId::new(IndecompKind::Y(k)));
    }
    for m in -(n as i64)..=n as i64 {
        out.push(IndecompId::new(IndecompKind::W(m)));
    }
    out
}

/// A random indecomposable of size at most `n`, twisted by one of
/// `0, +-1/2, +-1` and parity shifted with probability 1/2.
pub fn random_indecomposable(rng: &mut impl Rng, n: u32) -> IndecompId {
    let kind = match rng.gen_range(0..4) {
        0 => IndecompKind::P,
        1 => IndecompKind::X(rng.gen_range(1..=n)),
        2 => IndecompKind::Y(rng.gen_range(1..=n)),
        _ => IndecompKind::W(rng.gen_range(-(n as i64)..=n as i64)),
    };
    let twists = [int(0), half(1), half(-1), int(1), int(-1)];
    let t = twists[rng.gen_range(0..twists.len())].clone();
    IndecompId::new(kind).twisted(t).with_parity_shift(rng.gen_bool(0.5))
}

pub fn random_multiset(rng: &mut impl Rng, n: u32, max_summands: usize) -> Multiset {
    let k = rng.gen_range(1..=max_summands);
    (0..k).map(|_| random_indecomposable(rng, n)).collect()
}

/// A seeded random direct sum with its basis scrambled, together with the summands.
pub fn random_module(seed: u64, n: u32, max_summands: usize) -> (Multiset, SuperModule) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ms = random_multiset(&mut rng, n, max_summands);
    let m = ms.build().expect("random shapes are valid");
    (ms, random_basis_change(&m, seed.wrapping_mul(0x9e37_79b9_7f4a_7c15)))
}

/// The gl(1|1) restriction of the q(2) simple with weight `((2n-1)/2, -(2n-1)/2)`.
pub fn q2_bridge_expr(n: i64) -> String {
    format!("X({n})_{{-{n}/2}} (+) Pi Y({n})_{{-{n}/2}}")
}

pub fn build(id: &IndecompId) -> SuperModule {
    make_indecomposable(id).expect("valid indecomposable")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_builds() {
        let c = corpus();
        assert_eq!(c.len(), CORPUS_EXPRS.len());
        assert!(c.iter().all(|(_, m)| m.dim() > 0));
    }

    #[test]
    fn random_modules_are_reproducible() {
        let (a, ma) = random_module(7, 4, 3);
        let (b, mb) = random_module(7, 4, 3);
        assert_eq!(a, b);
        assert_eq!(ma, mb);
        assert_eq!(ma.dim_table(), a.dim_table().unwrap());
    }
}
