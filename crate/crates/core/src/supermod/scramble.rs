use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

use super::{Parity, SuperModule};
use crate::linalg::rational::int;
use crate::linalg::{Matrix, Rational};

/// Conjugates x and y by a seeded invertible matrix that preserves weight, parity
/// and charge. The result is isomorphic to `v` with a scrambled basis.
pub fn random_basis_change(v: &SuperModule, seed: u64) -> SuperModule {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = v.dim();
    let mut blocks: BTreeMap<(Rational, Parity, Rational), Vec<usize>> = BTreeMap::new();
    for (i, b) in v.basis().iter().enumerate() {
        blocks
            .entry((b.weight.clone(), b.parity, b.charge.clone()))
            .or_default()
            .push(i);
    }
    let mut g = Matrix::zeros(n, n);
    for idx in blocks.values() {
        let k = idx.len();
        // lower unitriangular times upper triangular with nonzero diagonal
        let mut l = Matrix::identity(k);
        let mut u = Matrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                if i > j {
                    l.set(i, j, int(rng.gen_range(-2..=2)));
                }
                if i < j {
                    u.set(i, j, int(rng.gen_range(-2..=2)));
                }
            }
            let d = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
            u.set(i, i, int(d));
        }
        let blk = l.mul(&u);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                g.set(i, j, blk.get(a, b).clone());
            }
        }
    }
    let gi = g.inverse().expect("block triangular factors are invertible");
    let x = g.mul(v.x()).mul(&gi);
    let y = g.mul(v.y()).mul(&gi);
    SuperModule::new_unchecked(v.basis().to_vec(), x, y)
}
