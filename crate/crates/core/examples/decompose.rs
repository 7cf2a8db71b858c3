//! Scramble a known direct sum, recover it, and compare with the brute-force oracle.

use gl11::corpus::oracle::oracle_decompose;
use gl11::corpus::random_module;
use gl11::decompose::decompose;

fn main() {
    for seed in [1, 2, 3, 4] {
        let (planted, v) = random_module(seed, 3, 3);
        let rep = decompose(&v).unwrap();
        println!("seed {seed}: dim {}", v.dim());
        println!("  planted   {planted}");
        println!("  recovered {} (certified {})", rep.summands, rep.certified);
        match oracle_decompose(&v) {
            Ok(m) => println!("  oracle    {m}"),
            Err(e) => println!("  oracle    skipped: {e}"),
        }
    }
}
