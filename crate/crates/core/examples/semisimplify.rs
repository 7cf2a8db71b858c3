//! Filtration on the limit page and its associated graded, for a tensor product of
//! zigzags.

use gl11::expr::module;
use gl11::filtration::{filtered_ds_infty, semisimplify};
use gl11::pages::Order;

fn main() {
    let expr = "W(1) (x) W(-2) (+) Pi W(2)_{1/2}";
    let v = module(expr).unwrap();
    for o in Order::BOTH {
        let f = filtered_ds_infty(&v, o);
        println!("{expr}, order {o}: jumps {:?}", f.jumps());
        for (n, piece) in &semisimplify(&v, o).pieces {
            println!("  piece {n}: {piece}");
        }
    }
}
