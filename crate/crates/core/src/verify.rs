//! The acceptance suites, one per criterion, each reporting its seed and every
//! failed check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::time::Instant;

use crate::corpus::{self, build, corpus, indecomposables, oracle_decompose, random_module};
use crate::decompose::{check_tensor_rules, decompose};
use crate::filtration::{
    bifiltered_ds_x_plus_y, check_contragredient_filtration, check_phi_twist, ds_image_dim, filtered_ds_infty, gr_a,
    limit_image_dim,
};
use crate::linalg::rational::{half, int};
use crate::pages::{compute_page, page_duality, page_tensor_iso, verify_cohomology_step, Direction, Order};
use crate::qn::{
    all_arc_sets, arc_diagram, ds_multiplicity, lr_coefficient, weight_diagram, weight_of_diagram, weyl_dim, Arc,
    HalfIntWeight, Multiplicity, Partition, Symbol, WeightDiagram,
};
use crate::supermod::{DimTable, IndecompId, IndecompKind, Parity};

pub const DEFAULT_SEED: u64 = 1729;

/// Suite names in criterion order.
pub const SUITES: [&str; 9] =
    ["pages", "monoidal", "tensor-rules", "hom-images", "filtration", "gr", "decompose", "arcs", "lr"];

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub criterion: u8,
    pub suite: &'static str,
    pub seed: u64,
    pub checks: usize,
    pub failures: Vec<String>,
    pub millis: u128,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checks > 0
    }

    pub fn line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "criterion {} [{}] {status}: {} checks, {} failures, seed {}, {} ms",
            self.criterion,
            self.suite,
            self.checks,
            self.failures.len(),
            self.seed,
            self.millis
        );
        if let Some(f) = self.failures.first() {
            s.push_str(&format!(" (first: {f})"));
        }
        s
    }
}

struct Checks {
    n: usize,
    failures: Vec<String>,
}

impl Checks {
    fn new() -> Self {
        Checks { n: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.n += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn id(kind: IndecompKind) -> IndecompId {
    IndecompId::new(kind)
}

fn table(entries: &[(crate::linalg::Rational, Parity)]) -> DimTable {
    entries.iter().map(|(w, p)| (w.clone(), *p, 1)).collect()
}

fn criterion_pages(c: &mut Checks, _seed: u64) {
    for r in 1..=7 {
        for order in Order::BOTH {
            let p = compute_page(&build(&id(IndecompKind::P)), r, order);
            c.check(p.dim() == 0, || format!("E_{r} of P in order {order} is nonzero"));
        }
    }
    for m in -6..=6i64 {
        let w = build(&id(IndecompKind::W(m)));
        for r in 1..=7 {
            let xy = compute_page(&w, r, Order::Xy);
            c.check(xy.dim_table() == table(&[(int(m), Parity::Even)]) && xy.d_rank() == 0, || {
                format!("E_{r} of W({m}) in order xy is {}", xy.dim_table())
            });
            let yx = compute_page(&w, r, Order::Yx);
            c.check(yx.dim_table() == table(&[(int(-m), Parity::Even)]) && yx.d_rank() == 0, || {
                format!("E_{r} of W({m}) in order yx is {}", yx.dim_table())
            });
        }
    }
    for n in 1..=6u32 {
        let x = build(&id(IndecompKind::X(n)));
        let y = build(&id(IndecompKind::Y(n)));
        let k = n as i64;
        for r in 1..=(n as usize + 2) {
            let p = compute_page(&y, r, Order::Yx);
            c.check(p.dim() == 0, || format!("E_{r} of Y({n}) in order yx is nonzero"));
            let p = compute_page(&x, r, Order::Xy);
            c.check(p.dim() == 0, || format!("E_{r} of X({n}) in order xy is nonzero"));
            let p = compute_page(&x, r, Order::Yx);
            let t = p.dim_table();
            let want = if r <= n as usize {
                let lo = half(1 - 2 * k);
                let hi = half(2 * k - 1);
                let (pl, ph) = (t.get(&lo, Parity::Even) + t.get(&lo, Parity::Odd), t.get(&hi, Parity::Even) + t.get(&hi, Parity::Odd));
                t.sdims() == (1, 1) && pl == 1 && ph == 1
            } else {
                t.is_empty()
            };
            c.check(want, || format!("E_{r} of X({n}) in order yx is {t}"));
            let rank = usize::from(r == n as usize);
            c.check(p.d_rank() == rank, || format!("d_{r} of X({n}) in order yx has rank {}", p.d_rank()));
        }
    }
}

fn criterion_monoidal(c: &mut Checks, seed: u64) {
    for (name, m) in corpus() {
        for order in Order::BOTH {
            for r in 0..=6 {
                c.check(verify_cohomology_step(&m, r, order), || format!("cohomology step r={r} {order} on {name}"));
            }
            for r in 1..=3 {
                let w = page_duality(&m, r, order);
                c.check(w.holds(), || format!("duality r={r} {order} on {name}: {w:?}"));
            }
        }
    }
    let ids = indecomposables(3);
    for (i, a) in ids.iter().enumerate() {
        for b in &ids[i..] {
            let (ma, mb) = (build(a), build(b));
            for order in Order::BOTH {
                for r in 1..=2 {
                    let w = page_tensor_iso(&ma, &mb, r, order);
                    c.check(w.holds(), || format!("tensor iso r={r} {order} on {a} (x) {b}"));
                }
            }
        }
    }
    for k in 0..20u64 {
        let (sa, a) = random_module(seed.wrapping_add(2 * k), 2, 2);
        let (sb, b) = random_module(seed.wrapping_add(2 * k + 1), 2, 2);
        for order in Order::BOTH {
            for r in 1..=3 {
                let w = page_tensor_iso(&a, &b, r, order);
                c.check(w.holds(), || format!("tensor iso r={r} {order} on ({sa}) (x) ({sb})"));
            }
        }
    }
}

fn criterion_tensor_rules(c: &mut Checks, _seed: u64) {
    match check_tensor_rules(4) {
        Ok(rep) => {
            for case in &rep.cases {
                c.check(case.holds, || {
                    format!("rule {}: {} (x) {} gave {} expected {}", case.rule, case.left, case.right, case.found, case.expected)
                });
            }
        }
        Err(e) => c.check(false, || format!("decomposition failed: {e}")),
    }
}

fn criterion_hom_images(c: &mut Checks, _seed: u64) {
    for n in -3..=3i64 {
        for m in -3..=3i64 {
            for r in [int(0), half(1)] {
                for d in -6..=6i64 {
                    let a = build(&id(IndecompKind::W(n)).twisted(r.clone()));
                    let b = build(&id(IndecompKind::W(m)).twisted(&r + int(d)));
                    let xy = usize::from(d == n - m && d >= 0);
                    let yx = usize::from(d == m - n && d <= 0);
                    let xpy = usize::from(n >= m && d.abs() <= n - m && (d - (m - n)) % 2 == 0);
                    let got = limit_image_dim(&a, &b, Order::Xy);
                    c.check(got == xy, || format!("xy image of W({n})_r -> W({m})_(r+{d}) has dim {got}"));
                    let got = limit_image_dim(&a, &b, Order::Yx);
                    c.check(got == yx, || format!("yx image of W({n})_r -> W({m})_(r+{d}) has dim {got}"));
                    let got = ds_image_dim(&a, &b, Direction::XPlusY);
                    c.check(got == xpy, || format!("x+y image of W({n})_r -> W({m})_(r+{d}) has dim {got}"));
                }
            }
        }
    }
}

fn criterion_filtration(c: &mut Checks, _seed: u64) {
    for n in -4..=4i64 {
        for s in [int(0), half(1), int(-1)] {
            let v = build(&id(IndecompKind::W(n)).twisted(s.clone()));
            for order in Order::BOTH {
                let f = filtered_ds_infty(&v, order);
                c.check(f.jumps() == [n].into_iter().collect() && f.dim() == 1, || {
                    format!("W({n})_{s} in order {order} jumps at {:?}", f.jumps())
                });
            }
        }
    }
    for (name, m) in corpus() {
        c.check(check_phi_twist(&m), || format!("phi twist fails on {name}"));
        c.check(check_contragredient_filtration(&m), || format!("contragredient filtration fails on {name}"));
    }
}

fn criterion_gr(c: &mut Checks, seed: u64) {
    let mut mods = corpus();
    for k in 0..20u64 {
        let (ms, m) = random_module(seed.wrapping_add(k), 2, 2);
        mods.push((format!("random {ms}"), m));
    }
    for (name, m) in mods {
        let bf = bifiltered_ds_x_plus_y(&m);
        c.check(gr_a(&bf, 1) == filtered_ds_infty(&m, Order::Xy), || format!("Gr_a1 differs from xy on {name}"));
        c.check(gr_a(&bf, 2) == filtered_ds_infty(&m, Order::Yx), || format!("Gr_a2 differs from yx on {name}"));
    }
}

fn criterion_decompose(c: &mut Checks, seed: u64) {
    for k in 0..50u64 {
        let s = seed.wrapping_add(k);
        let (ms, m) = random_module(s, 4, 3);
        match decompose(&m) {
            Ok(rep) => c.check(rep.certified && rep.summands == ms, || format!("seed {s}: decompose gave {} for {ms}", rep.summands)),
            Err(e) => c.check(false, || format!("seed {s}: decompose failed on {ms}: {e}")),
        }
        match oracle_decompose(&m) {
            Ok(got) => c.check(got == ms, || format!("seed {s}: oracle gave {got} for {ms}")),
            Err(e) => c.check(false, || format!("seed {s}: oracle failed on {ms}: {e}")),
        }
    }
}

/// Free empty positions left of `pos` read off a brute-force arc set.
fn free_left(d: &WeightDiagram, arcs: &[Arc], pos: i64) -> usize {
    (0..)
        .map(|i| 2 * i + 1)
        .take_while(|&a| a < pos)
        .filter(|&a| d.at(a) == Symbol::Empty && !arcs.iter().any(|x| x.to == a))
        .count()
}

fn criterion_arcs(c: &mut Checks, seed: u64) {
    let worked = HalfIntWeight::parse("15/2,13/2,5/2,1/2,-1/2,-3/2,-5/2,-15/2").expect("valid weight");
    let d = weight_diagram(&worked);
    c.check(d.ascii(9) == "x<xooo>xo", || format!("worked diagram is {}", d.ascii(9)));
    let arcs = arc_diagram(&d).arcs;
    let want = vec![Arc { from: 1, to: 9 }, Arc { from: 5, to: 7 }, Arc { from: 15, to: 17 }];
    c.check(arcs == want, || format!("worked arcs are {arcs:?}"));

    // every diagram on 8 positions built from empty, cross and one core symbol
    let syms = [Symbol::Empty, Symbol::Cross, Symbol::Right];
    for code in 0..3usize.pow(8) {
        let mut k = code;
        let mut entries = Vec::new();
        for i in 0..8 {
            entries.push((2 * i as i64 + 1, syms[k % 3]));
            k /= 3;
        }
        let d = WeightDiagram::from_symbols(entries);
        if d.crosses().len() > 5 {
            continue;
        }
        let brute = all_arc_sets(&d);
        let greedy = arc_diagram(&d).arcs;
        c.check(brute == vec![greedy.clone()], || format!("{}: brute force {brute:?}, greedy {greedy:?}", d.ascii(8)));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = 0;
    while pairs < 20 {
        let mut nums: Vec<i64> = (1..=8).map(|i| 2 * i - 1).flat_map(|a| [a, -a]).filter(|_| rng.gen_bool(0.45)).collect();
        nums.sort_unstable_by(|a, b| b.cmp(a));
        let Ok(lambda) = HalfIntWeight::from_numerators(nums) else { continue };
        let d = weight_diagram(&lambda);
        let arcs = match all_arc_sets(&d).as_slice() {
            [a] => a.clone(),
            _ => continue,
        };
        for arc in &arcs {
            let maximal = !arcs.iter().any(|o| o.from < arc.from && arc.to < o.to);
            let mu = weight_of_diagram(&d.with(arc.from, Symbol::Empty));
            let ell = free_left(&d, &arcs, arc.from);
            let mut prev = Multiplicity::OneOne;
            for k in 1..=ell + 3 {
                let want = if maximal && k <= ell + 1 { Multiplicity::OneOne } else { Multiplicity::Zero };
                let got = ds_multiplicity(&lambda, &mu, k);
                c.check(got == Ok(want), || format!("lambda {lambda}, arc {arc:?}, k {k}: {got:?}"));
                if let Ok(g) = got {
                    c.check(!(prev == Multiplicity::Zero && g == Multiplicity::OneOne), || format!("{lambda}: not monotone in k"));
                    prev = g;
                }
            }
            if maximal {
                pairs += 1;
            }
        }
    }

    for n in 1..=4i64 {
        let lambda = HalfIntWeight::from_numerators(vec![2 * n - 1, 1 - 2 * n]).expect("valid weight");
        let empty = HalfIntWeight::from_numerators(vec![]).expect("empty weight");
        let m = crate::expr::module(&corpus::q2_bridge_expr(n)).expect("valid expression");
        for k in 1..=(n as usize + 2) {
            let page = compute_page(&m, k, Order::Xy);
            let one_one = match ds_multiplicity(&lambda, &empty, k) {
                Ok(Multiplicity::OneOne) => true,
                _ => false,
            };
            let pages_one_one = page.dim_table().sdims() == (1, 1);
            c.check(one_one == pages_one_one && (one_one || page.dim() == 0), || {
                format!("q(2) bridge n={n} k={k}: multiplicity {one_one}, page {}", page.dim_table())
            });
            c.check(one_one == (k <= n as usize), || format!("q(2) threshold n={n} k={k}"));
        }
    }
}

fn random_partition(rng: &mut impl Rng, max_size: u32, rows: usize) -> Partition {
    let size = rng.gen_range(0..=max_size);
    let all = Partition::all_of(size, rows);
    all[rng.gen_range(0..all.len())].clone()
}

fn criterion_lr(c: &mut Checks, seed: u64) {
    for a in 0..=3 {
        for b in 0..=3 {
            for l in Partition::all_of(a, 3) {
                for m in Partition::all_of(b, 3) {
                    let sum: u64 = Partition::all_of(a + b, 3)
                        .iter()
                        .map(|g| lr_coefficient(&l, &m, g) * weyl_dim(g, 3).expect("at most 3 rows"))
                        .sum();
                    let want = weyl_dim(&l, 3).expect("rows") * weyl_dim(&m, 3).expect("rows");
                    c.check(sum == want, || format!("dimension identity fails for {l} {m}: {sum} vs {want}"));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100 {
        let l = random_partition(&mut rng, 4, 3);
        let m = random_partition(&mut rng, 4, 3);
        let all = Partition::all_of(l.size() + m.size(), 4);
        let g = all[rng.gen_range(0..all.len())].clone();
        let (a, b) = (lr_coefficient(&l, &m, &g), lr_coefficient(&m, &l, &g));
        c.check(a == b, || format!("c^{g}_{l},{m} = {a} but swapped gives {b}"));
    }
}

/// Runs one criterion (1 to 9).
pub fn run_criterion(criterion: u8, seed: u64) -> CriterionReport {
    let start = Instant::now();
    let mut c = Checks::new();
    let suite_seed = seed.wrapping_mul(31).wrapping_add(criterion as u64);
    let f: fn(&mut Checks, u64) = match criterion {
        1 => criterion_pages,
        2 => criterion_monoidal,
        3 => criterion_tensor_rules,
        4 => criterion_hom_images,
        5 => criterion_filtration,
        6 => criterion_gr,
        7 => criterion_decompose,
        8 => criterion_arcs,
        9 => criterion_lr,
        _ => panic!("criteria are numbered 1 to 9"),
    };
    f(&mut c, suite_seed);
    CriterionReport {
        criterion,
        suite: SUITES[criterion as usize - 1],
        seed: suite_seed,
        checks: c.n,
        failures: c.failures,
        millis: start.elapsed().as_millis(),
    }
}

pub fn criterion_of(suite: &str) -> Option<u8> {
    SUITES.iter().position(|s| *s == suite).map(|i| i as u8 + 1)
}

/// Runs the given criteria in parallel, reports in criterion order.
pub fn run_criteria(criteria: &[u8], seed: u64) -> Vec<CriterionReport> {
    std::thread::scope(|s| {
        let handles: Vec<_> = criteria.iter().map(|&k| s.spawn(move || run_criterion(k, seed))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    })
}

pub fn run_all(seed: u64) -> Vec<CriterionReport> {
    run_criteria(&[1, 2, 3, 4, 5, 6, 7, 8, 9], seed)
}
