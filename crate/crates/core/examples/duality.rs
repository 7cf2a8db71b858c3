//! The contragredient swaps the two spectral sequences.

use gl11::expr::module;
use gl11::pages::{page_duality, page_sequence, Order};
use gl11::supermod::contragredient;

fn main() {
    let v = module("X(2) (+) W(1)_{1/2} (x) Y(1)").unwrap();
    let dual = contragredient(&v);
    for r in 1..=3 {
        println!("E_{r} xy of V:     {}", page_sequence(&v, Order::Xy).dim_table(r));
        println!("E_{r} yx of V^vee: {}", page_sequence(&dual, Order::Yx).dim_table(r));
        println!("  witness holds: {}", page_duality(&v, r, Order::Xy).holds());
    }
}
