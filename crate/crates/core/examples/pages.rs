//! Page tables of a few modules in both orders.

use gl11::expr::module;
use gl11::pages::{page_sequence, Order};

fn main() {
    for expr in ["X(2)", "Y(2)_{1/2}", "W(1) (x) X(1)", "W(-2) (+) Pi P"] {
        let v = module(expr).unwrap();
        for o in Order::BOTH {
            let seq = page_sequence(&v, o);
            println!("{expr}, order {o}, stable from r = {}", seq.stable_from);
            for r in 0..=seq.stable_from {
                let p = seq.page(r);
                println!("  E_{r} = {}   rank d_{r} = {}", p.dim_table(), p.d_rank());
            }
        }
    }
}
