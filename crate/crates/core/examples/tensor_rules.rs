//! Non-projective parts of tensor products of indecomposables.

use gl11::decompose::check_tensor_rules;

fn main() {
    let rep = check_tensor_rules(3).unwrap();
    for c in &rep.cases {
        println!("rule {}: {} (x) {} = {} + projective  [{}]", c.rule, c.left, c.right, c.found.non_projective(), if c.holds { "ok" } else { "FAIL" });
    }
    println!("{} cases, all hold: {}", rep.cases.len(), rep.all_hold());
}
