use proptest::prelude::*;

use gl11::corpus::oracle::oracle_pages;
use gl11::corpus::random_module;
use gl11::decompose::decompose;
use gl11::expr::{parse, ModuleExpr};
use gl11::linalg::rational::{half, int};
use gl11::linalg::Matrix;
use gl11::pages::{page_duality, page_sequence, Order};
use gl11::qn::{
    all_arc_sets, arc_diagram, ds_multiplicity, lr_coefficient, weight_diagram, weight_of_diagram, HalfIntWeight,
    Multiplicity, Partition, Symbol, WeightDiagram,
};
use gl11::supermod::{direct_sum, IndecompKind};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

fn atom() -> impl Strategy<Value = ModuleExpr> {
    let kind = prop_oneof![
        Just(IndecompKind::P),
        (1u32..=3).prop_map(IndecompKind::X),
        (1u32..=3).prop_map(IndecompKind::Y),
        (-3i64..=3).prop_map(IndecompKind::W),
    ];
    (kind, -4i64..=4).prop_map(|(k, t)| ModuleExpr::Atom(k, half(t)))
}

fn expr() -> impl Strategy<Value = ModuleExpr> {
    atom().prop_recursive(4, 16, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| ModuleExpr::Pi(Box::new(e))),
            inner.clone().prop_map(|e| ModuleExpr::Dual(Box::new(e))),
            inner.clone().prop_map(|e| ModuleExpr::Vee(Box::new(e))),
            prop::collection::vec(inner.clone(), 2..=3).prop_map(ModuleExpr::Sum),
            prop::collection::vec(inner, 2..=3).prop_map(ModuleExpr::Tensor),
        ]
    })
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..=3, 0..=3).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn diagram() -> impl Strategy<Value = WeightDiagram> {
    prop::collection::vec(prop::sample::select(vec!['o', 'x', '<', '>']), 1..=8)
        .prop_map(|cs| WeightDiagram::from_ascii(&cs.into_iter().collect::<String>()).unwrap())
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn print_parse_round_trip(e in expr()) {
        let once = parse(&e.to_string()).unwrap();
        let twice = parse(&once.to_string()).unwrap();
        prop_assert_eq!(twice, once);
    }

    #[test]
    fn lr_is_symmetric(l in partition(), m in partition(), g in partition()) {
        prop_assert_eq!(lr_coefficient(&l, &m, &g), lr_coefficient(&m, &l, &g));
        if g.size() != l.size() + m.size() {
            prop_assert_eq!(lr_coefficient(&l, &m, &g), 0);
        }
    }

    #[test]
    fn arcs_are_unique(d in diagram()) {
        let greedy = arc_diagram(&d).arcs;
        prop_assert_eq!(all_arc_sets(&d), vec![greedy]);
    }

    #[test]
    fn rank_nullity(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..=5)) {
        let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&a| int(a)).collect()).collect(), 4);
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.dim(), 4);
        for v in k.basis() {
            prop_assert!(m.mul_vec(v).iter().all(|c| *c == int(0)));
        }
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn ds_multiplicity_drops_once(nums in prop::collection::btree_set(-9i64..=9, 1..=8)) {
        let mut nums: Vec<i64> = nums.into_iter().filter(|a| a % 2 != 0).collect();
        nums.sort_unstable_by(|a, b| b.cmp(a));
        prop_assume!(!nums.is_empty());
        let lambda = HalfIntWeight::from_numerators(nums).unwrap();
        let d = weight_diagram(&lambda);
        for arc in arc_diagram(&d).arcs {
            let mu = weight_of_diagram(&d.with(arc.from, Symbol::Empty));
            let mut seen_zero = false;
            for k in 1..=8 {
                let m = ds_multiplicity(&lambda, &mu, k).unwrap();
                prop_assert!(!(seen_zero && m == Multiplicity::OneOne), "{} reappears at k = {}", lambda, k);
                seen_zero |= m == Multiplicity::Zero;
            }
        }
    }
}

proptest! {
    #![proptest_config(config(12))]

    #[test]
    fn pages_shrink_and_match_oracle(seed in any::<u64>()) {
        let (_, v) = random_module(seed, 2, 3);
        for o in Order::BOTH {
            let seq = page_sequence(&v, o);
            for r in 1..=seq.stable_from + 1 {
                prop_assert!(seq.dim_table(r + 1).le(&seq.dim_table(r)));
            }
            if v.dim() <= 60 {
                for r in 0..=3 {
                    prop_assert_eq!(oracle_pages(&v, r, o).unwrap(), seq.dim_table(r));
                }
            }
        }
    }

    #[test]
    fn pages_are_additive(a in any::<u64>(), b in any::<u64>()) {
        let (_, va) = random_module(a, 2, 2);
        let (_, vb) = random_module(b, 2, 2);
        let sum = direct_sum(&va, &vb);
        for o in Order::BOTH {
            let (sa, sb, ss) = (page_sequence(&va, o), page_sequence(&vb, o), page_sequence(&sum, o));
            for r in 0..=4 {
                prop_assert_eq!(ss.dim_table(r), sa.dim_table(r).plus(&sb.dim_table(r)));
            }
        }
    }

    #[test]
    fn decompose_round_trips(seed in any::<u64>()) {
        let (m, v) = random_module(seed, 3, 3);
        let rep = decompose(&v).unwrap();
        prop_assert!(rep.certified);
        prop_assert_eq!(rep.summands, m);
    }

    #[test]
    fn duality_swaps_orders(seed in any::<u64>()) {
        let (_, v) = random_module(seed, 2, 2);
        for o in Order::BOTH {
            for r in 1..=2 {
                prop_assert!(page_duality(&v, r, o).holds());
            }
        }
    }
}
