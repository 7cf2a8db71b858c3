//! Littlewood-Richardson coefficients and the stable tensor product of gl(1|n) blocks.

use gl11::qn::{lr_coefficient, stable_tensor_gl1n, weyl_dim, GlBlock, GlKind, Partition};

fn main() {
    let p = |s: &str| Partition::parse(s).unwrap();
    let (l, m) = (p("2,1"), p("2,1"));
    let mut total = 0;
    for g in Partition::all_of(l.size() + m.size(), 3) {
        let c = lr_coefficient(&l, &m, &g);
        if c > 0 {
            println!("c^{g}_{{{l},{m}}} = {c}");
            total += c * weyl_dim(&g, 3).unwrap();
        }
    }
    let prod = weyl_dim(&l, 3).unwrap() * weyl_dim(&m, 3).unwrap();
    println!("gl(3): {total} = {prod}\n");

    let a = GlBlock::new(GlKind::W, p("1"), 1, 0);
    let b = GlBlock::new(GlKind::X, p("()"), 2, 0);
    for (blk, mult) in stable_tensor_gl1n(&a, &b, 3).unwrap() {
        println!("{a} (x) {b} contains {blk} x{mult}");
    }
}
