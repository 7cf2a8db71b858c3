//! Which maps between zigzags survive on the limit pages.

use gl11::corpus::build;
use gl11::filtration::limit_image_dim;
use gl11::homspace::{hom_dim, Equivariance, MapParity};
use gl11::linalg::rational::int;
use gl11::pages::Order;
use gl11::supermod::{IndecompId, IndecompKind};

fn main() {
    let (n, m) = (2, 1);
    let a = build(&IndecompId::new(IndecompKind::W(n)));
    println!("Hom(W({n}), W({m})_s), s = -4..4");
    for s in -4..=4 {
        let b = build(&IndecompId::new(IndecompKind::W(m)).twisted(int(s)));
        let d = hom_dim(&a, &b, Equivariance::Gl, MapParity::Both);
        let xy = limit_image_dim(&a, &b, Order::Xy);
        let yx = limit_image_dim(&a, &b, Order::Yx);
        println!("  s = {s:>2}: dim {d}, image on DS^inf xy {xy}, yx {yx}");
    }
}
