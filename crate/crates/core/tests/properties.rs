use std::sync::Arc;

use matex::matroid::{restrict, DEFAULT_ENUMERATION_CAP};
use matex::verify::{
    brute_force_cyclic_exchange, brute_force_partition, exhaustive_axiom_check, random_instance,
    random_matroid, InstanceGenSpec, MatroidClass,
};
use matex::{
    build_color_classes, check_rank_inequality, cyclic_exchange, disjoint_copies, enumerate_bases,
    matroid_partition, verify_partition, Arm, BasisMatroid, ElementSet, Matroid, MatroidRef,
    PartitionOutcome, PartitionProblem,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn class_strategy() -> impl Strategy<Value = MatroidClass> {
    prop_oneof![
        (1usize..=9)
            .prop_flat_map(|n| (Just(n), 1..=n))
            .prop_map(|(n, rank)| MatroidClass::Uniform { n, rank }),
        (2usize..=6, 1usize..=10)
            .prop_map(|(vertices, edges)| MatroidClass::Graphic { vertices, edges }),
        (
            prop::sample::select(vec![2u32, 3, 5]),
            1usize..=4,
            1usize..=9
        )
            .prop_map(|(prime, rows, n)| MatroidClass::Linear { prime, rows, n }),
        (prop::sample::select(vec![2u32, 3]), 1usize..=3, 1usize..=7)
            .prop_map(|(prime, rows, n)| MatroidClass::Bases { prime, rows, n }),
    ]
}

fn instance_strategy() -> impl Strategy<Value = InstanceGenSpec> {
    (class_strategy(), 1usize..=5, any::<u64>()).prop_map(|(matroid, k, seed)| InstanceGenSpec {
        matroid,
        k,
        seed,
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn cyclic_exchange_output_is_valid(spec in instance_strategy()) {
        let Ok(inst) = random_instance(&spec) else { return Ok(()) };
        let res = cyclic_exchange(&inst).unwrap();
        let m = inst.matroid();
        prop_assert_eq!(&res.parts[0], inst.seed());
        for (i, (a, b)) in res.parts.iter().zip(inst.bases()).enumerate() {
            prop_assert!(a.is_subset(b));
            prop_assert_eq!(a.len(), inst.seed().len());
            prop_assert!(m.is_basis(&res.shifted[i]).unwrap());
        }
        prop_assert_eq!(res.shifted, inst.shifted_sets(&res.parts));
        // same input, same output
        prop_assert_eq!(cyclic_exchange(&inst).unwrap().parts, res.parts);
    }

    #[test]
    fn constructive_answer_is_among_brute_force_answers(spec in instance_strategy()) {
        let Ok(inst) = random_instance(&spec) else { return Ok(()) };
        if inst.k() < 2 || inst.bases().iter().map(|b| b.len()).sum::<usize>() > 14 {
            return Ok(());
        }
        let all = brute_force_cyclic_exchange(&inst, 14).unwrap();
        prop_assert!(!all.is_empty());
        let res = cyclic_exchange(&inst).unwrap();
        prop_assert!(all.iter().any(|t| t[..] == res.parts[1..]));
    }

    #[test]
    fn rank_inequality_on_sampled_subsets(spec in instance_strategy(), masks in prop::collection::vec(any::<u64>(), 32)) {
        let Ok(inst) = random_instance(&spec) else { return Ok(()) };
        if inst.k() < 2 {
            return Ok(());
        }
        let cc = build_color_classes(&inst).unwrap();
        let s = cc.lift().ground_size();
        for mask in masks {
            let set: ElementSet = (0..s).filter(|i| mask >> (i % 64) & 1 == 1).collect();
            prop_assert!(check_rank_inequality(&cc, &set).holds());
        }
    }

    #[test]
    fn lift_preserves_rank(spec in instance_strategy()) {
        let Ok(inst) = random_instance(&spec) else { return Ok(()) };
        let lift = disjoint_copies(inst.matroid().clone(), inst.bases()).unwrap();
        let union = inst.bases().iter().fold(ElementSet::new(), |acc, b| acc.union(b));
        prop_assert_eq!(lift.full_rank(), inst.matroid().rank(&union).unwrap());
        for j in 0..inst.k() {
            let slots: ElementSet = lift.base_slots(j).collect();
            prop_assert!(lift.is_basis(&slots).unwrap());
        }
    }

    #[test]
    fn fixture_matroids_satisfy_axioms(class in class_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_matroid(&class, &mut rng).unwrap();
        prop_assert!(exhaustive_axiom_check(&m).unwrap().all_hold());
        let bases = enumerate_bases(&m, DEFAULT_ENUMERATION_CAP).unwrap();
        let rebuilt = BasisMatroid::new(m.ground_size(), bases.clone()).unwrap();
        prop_assert_eq!(enumerate_bases(&rebuilt, DEFAULT_ENUMERATION_CAP).unwrap(), bases);
    }

    #[test]
    fn restriction_inherits_independence(class in class_strategy(), seed in any::<u64>(), pick in any::<u16>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m: MatroidRef = Arc::new(random_matroid(&class, &mut rng).unwrap());
        let subset: ElementSet = (0..m.ground_size()).filter(|i| pick >> i & 1 == 1).collect();
        let r = restrict(m.clone(), &subset).unwrap();
        for mask in 0u32..(1 << r.ground_size()) {
            let local: Vec<usize> = (0..r.ground_size()).filter(|i| mask >> i & 1 == 1).collect();
            prop_assert_eq!(r.is_independent(&local), m.is_independent(&r.to_parent(&local)));
        }
    }

    #[test]
    fn partition_agrees_with_assignment_search(
        n in 0usize..=7,
        arms in prop::collection::vec((class_strategy(), any::<u8>()), 1..=3),
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let arms: Vec<Arm> = arms
            .into_iter()
            .map(|(class, mask)| {
                let allowed: ElementSet = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                let class = resize(class, allowed.len());
                let m: MatroidRef = Arc::new(random_matroid(&class, &mut rng).unwrap());
                Arm::new(allowed, m).unwrap()
            })
            .collect();
        let problem = PartitionProblem::new(n, arms).unwrap();
        let brute = brute_force_partition(&problem, 1 << 16).unwrap();
        match matroid_partition(&problem).unwrap() {
            PartitionOutcome::Complete(p) => {
                prop_assert!(verify_partition(&problem, &p));
                prop_assert!(brute.is_some());
            }
            PartitionOutcome::Deficient(cert) => {
                prop_assert!(cert.verify(&problem));
                prop_assert!(brute.is_none());
            }
        }
    }
}

/// Same class with the ground size forced to `n`.
fn resize(class: MatroidClass, n: usize) -> MatroidClass {
    match class {
        MatroidClass::Uniform { rank, .. } => MatroidClass::Uniform {
            n,
            rank: rank.min(n),
        },
        MatroidClass::Graphic { vertices, .. } => MatroidClass::Graphic { vertices, edges: n },
        MatroidClass::Linear { prime, rows, .. } => MatroidClass::Linear { prime, rows, n },
        MatroidClass::Bases { prime, rows, .. } => MatroidClass::Bases { prime, rows, n },
    }
}
