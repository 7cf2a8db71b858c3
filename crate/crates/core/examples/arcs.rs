//! Arc diagram of a q(n) weight and the page on which each arc stops contributing.

use gl11::qn::{arc_diagram, ds_multiplicity, weight_diagram, weight_of_diagram, HalfIntWeight, Multiplicity, Symbol};

fn main() {
    let lambda = HalfIntWeight::parse("15/2,13/2,5/2,1/2,-1/2,-3/2,-5/2,-15/2").unwrap();
    let d = weight_diagram(&lambda);
    let ad = arc_diagram(&d);
    println!("{lambda}\n{}\n", ad.render());
    for arc in &ad.arcs {
        let mu = weight_of_diagram(&d.with(arc.from, Symbol::Empty));
        let last = (1..=6).take_while(|&k| ds_multiplicity(&lambda, &mu, k) == Ok(Multiplicity::OneOne)).last();
        match last {
            Some(k) => println!("L{mu}: (1|1) on pages 1..={k}"),
            None => println!("L{mu}: never"),
        }
    }
}
