//! The bifiltration on DS_(x+y) and its two associated gradeds.

use gl11::expr::module;
use gl11::filtration::{bifiltered_ds_x_plus_y, filtered_ds_infty, gr_a};
use gl11::linalg::rational::fmt_rational;
use gl11::pages::Order;

fn main() {
    let v = module("W(1) (x) W(1) (+) W(-1)_{1/2}").unwrap();
    let bf = bifiltered_ds_x_plus_y(&v);
    println!("dim DS_(x+y) = {}", bf.dim());
    for s in bf.summands().unwrap() {
        println!("  C_({}, {}) {} x{}", s.n, fmt_rational(&s.r), s.parity, s.multiplicity);
    }
    println!("gr along a1 matches order xy: {}", gr_a(&bf, 1) == filtered_ds_infty(&v, Order::Xy));
    println!("gr along a2 matches order yx: {}", gr_a(&bf, 2) == filtered_ds_infty(&v, Order::Yx));
}
