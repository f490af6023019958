//! Cross-module invariants: order axioms, product symmetries, dimension
//! identities, concentration and duality of the cohomology engine.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use grasstilt_core::{
    bott, kapranov_decomposition, lr_expand, partitions_of_size, schur_dim, serre_dual_weight,
    Dominance, GLWeight, GrassContext, Partition, PartitionBox, TwistedSchurBundle,
    VirtualSchurSum,
};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn small_pairs(max_size: u32) -> Vec<(Partition, Partition)> {
    let mut all = Vec::new();
    for n in 0..=max_size {
        all.extend(partitions_of_size(n));
    }
    let mut pairs = Vec::new();
    for a in &all {
        for b in &all {
            pairs.push((a.clone(), b.clone()));
        }
    }
    pairs
}

#[test]
fn lex_is_a_total_order_on_the_five_box() {
    let elements = PartitionBox::new(5, 5).enumerate();
    for a in &elements {
        for b in &elements {
            let ab = a.cmp(b);
            let ba = b.cmp(a);
            assert_eq!(ab, ba.reverse(), "antisymmetry at {a}, {b}");
            assert_eq!(ab == Ordering::Equal, a == b, "consistency with equality");
        }
    }
    // transitivity: comparing against the sorted position is equivalent
    let mut sorted = elements.clone();
    sorted.sort();
    for w in sorted.windows(3) {
        assert!(w[0] < w[1] && w[1] < w[2] && w[0] < w[2]);
    }
    // exhaustive triple check on a smaller box
    let small = PartitionBox::new(3, 3).enumerate();
    for a in &small {
        for b in &small {
            for c in &small {
                if a <= b && b <= c {
                    assert!(a <= c, "transitivity at {a} <= {b} <= {c}");
                }
            }
        }
    }
}

#[test]
fn lex_strictly_refines_dominance() {
    for n in 0..=8u32 {
        let layer = partitions_of_size(n);
        for a in &layer {
            for b in &layer {
                if a.dominance(b).unwrap() == Dominance::Greater {
                    assert!(a > b, "{a} dominates {b} but is not lex-greater");
                }
            }
        }
    }
}

#[test]
fn lr_product_is_symmetric_and_homogeneous() {
    for (a, b) in small_pairs(6) {
        if a > b {
            continue; // symmetry makes the other order redundant
        }
        let ab = lr_expand(&a, &b, None);
        let ba = lr_expand(&b, &a, None);
        assert_eq!(ab, ba, "symmetry at {a} x {b}");
        assert!(ab.is_nonnegative());
        for (g, _) in ab.terms() {
            assert_eq!(g.size(), a.size() + b.size(), "homogeneity at {a} x {b}");
            assert!(g.contains(&a), "{g} should contain {a}");
            assert!(g.contains(&b), "{g} should contain {b}");
        }
    }
}

#[test]
fn lr_product_is_associative() {
    let mut all = Vec::new();
    for n in 0..=4u32 {
        all.extend(partitions_of_size(n));
    }
    let assoc = |x: &VirtualSchurSum, c: &Partition| {
        let mut out = VirtualSchurSum::zero(None);
        for (q, m) in x.terms() {
            out.add_scaled(&lr_expand(q, c, None), m);
        }
        out
    };
    for a in &all {
        for b in &all {
            let ab = lr_expand(a, b, None);
            for c in &all {
                let left = assoc(&ab, c);
                let bc = lr_expand(b, c, None);
                let right = assoc(&bc, a);
                assert_eq!(left, right, "associativity at {a}, {b}, {c}");
            }
        }
    }
}

#[test]
fn exterior_dimension_is_a_binomial_product() {
    for n in 1..=4u32 {
        // all weakly decreasing sequences of length <= 3 with entries <= n
        let mut seqs: Vec<Vec<u32>> = vec![vec![]];
        for _ in 0..3 {
            let mut next = Vec::new();
            for s in &seqs {
                let hi = s.last().copied().unwrap_or(n);
                for u in 0..=hi {
                    let mut t = s.clone();
                    t.push(u);
                    next.push(t);
                }
            }
            seqs.extend(next);
        }
        for s in seqs {
            let character = grasstilt_core::exterior_product_character(&s, n).unwrap();
            let total = character.total_dimension(n);
            let expected: BigInt = s
                .iter()
                .map(|&u| num_integer::binomial(BigInt::from(n), BigInt::from(u)))
                .product();
            assert_eq!(total, expected, "sequence {s:?} at rank {n}");
        }
    }
}

/// All weights for the context with entries in `[-bound, bound]`.
fn weight_grid(ctx: &GrassContext, bound: i64) -> Vec<GLWeight> {
    fn blocks(len: usize, bound: i64) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = vec![vec![]];
        for _ in 0..len {
            let mut next = Vec::new();
            for b in &out {
                let hi = b.last().copied().unwrap_or(bound);
                for v in -bound..=hi {
                    let mut t = b.clone();
                    t.push(v);
                    next.push(t);
                }
            }
            out = next;
        }
        out
    }
    let mut weights = Vec::new();
    for q in blocks(ctx.l() as usize, bound) {
        for r in blocks(ctx.r_rank() as usize, bound) {
            let mut entries = q.clone();
            entries.extend_from_slice(&r);
            weights.push(GLWeight::new(ctx, entries).unwrap());
        }
    }
    weights
}

#[test]
fn bott_concentrates_in_one_degree_inside_the_dimension_range() {
    for (l, m) in [(1, 3), (2, 4), (2, 5)] {
        let ctx = GrassContext::new(l, m).unwrap();
        for w in weight_grid(&ctx, 3) {
            let table = bott(&ctx, &w);
            let degrees = table.nonzero_degrees();
            assert!(degrees.len() <= 1, "{w} on {ctx}");
            if let Some(&d) = degrees.first() {
                assert!(d <= ctx.dim(), "{w} lands in degree {d} on {ctx}");
            }
            // Kempf: dominant weights induce untouched in degree zero
            if w.is_dominant() {
                assert_eq!(degrees, vec![0], "dominant {w}");
                let row = table.weights_at(0).unwrap();
                assert_eq!(row.len(), 1);
                assert_eq!(row.keys().next().unwrap().entries(), w.entries());
                assert_eq!(*row.values().next().unwrap(), BigInt::one());
            }
        }
    }
}

#[test]
fn serre_duality_mirrors_dimensions_on_grass24() {
    let ctx = GrassContext::new(2, 4).unwrap();
    let dim = ctx.dim();
    for size in 0..=4u32 {
        for gamma in partitions_of_size(size) {
            if gamma.len() > 2 {
                continue;
            }
            for k in -3..=3i64 {
                let bundle = TwistedSchurBundle::new(gamma.clone(), k);
                let w = bundle.weight(&ctx).unwrap();
                let table = bott(&ctx, &w);
                let dual_table = bott(&ctx, &serre_dual_weight(&ctx, &w));
                for i in 0..=dim {
                    assert_eq!(
                        table.dimension(i),
                        dual_table.dimension(dim - i),
                        "gamma {gamma}, twist {k}, degree {i}"
                    );
                }
            }
        }
    }
}

#[test]
fn total_rank_matches_weighted_decomposition_across_contexts() {
    for (l, m) in [(1, 2), (1, 4), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)] {
        let ctx = GrassContext::new(l, m).unwrap();
        let report = kapranov_decomposition(&ctx);
        assert!(report.tables.rank_consistent, "{ctx}");
        assert!(report.verdict.is_verified(), "{ctx}");
    }
}

#[test]
fn dimension_bilinearity_spot_checks() {
    // the acceptance suite runs the full sweep; keep a quick slice here
    for (a, b) in [
        (p(&[2, 1]), p(&[2, 1])),
        (p(&[3]), p(&[1, 1])),
        (p(&[2, 2]), p(&[2])),
    ] {
        let product = lr_expand(&a, &b, None);
        for n in 1..=4u32 {
            let lhs = schur_dim(&a, n) * schur_dim(&b, n);
            let rhs: BigInt = product.terms().map(|(g, c)| c * schur_dim(g, n)).sum();
            assert_eq!(lhs, rhs, "{a} x {b} at rank {n}");
        }
    }
}

mod random {
    use super::*;
    use grasstilt_core::run_indexed_jobs;
    use proptest::prelude::*;

    fn partition_strategy(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
        proptest::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn conjugate_is_an_involution(a in partition_strategy(12, 12)) {
            prop_assert_eq!(a.conjugate().conjugate(), a);
        }

        #[test]
        fn conjugate_preserves_size(a in partition_strategy(12, 12)) {
            prop_assert_eq!(a.conjugate().size(), a.size());
        }

        #[test]
        fn partition_json_round_trips(a in partition_strategy(20, 10)) {
            let json = serde_json::to_string(&a).unwrap();
            let back: Partition = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn dominance_implies_lex(
            a in partition_strategy(8, 8).prop_filter("bounded size", |a| a.size() <= 8),
            pick in 0usize..64
        ) {
            let layer = partitions_of_size(a.size() as u32);
            let b = layer[pick % layer.len()].clone();
            match a.dominance(&b).unwrap() {
                Dominance::Greater => prop_assert!(a > b),
                Dominance::Less => prop_assert!(a < b),
                Dominance::Equal => prop_assert_eq!(&a, &b),
                Dominance::Incomparable => {}
            }
        }

        #[test]
        fn schur_sum_json_round_trips(
            a in partition_strategy(4, 3),
            b in partition_strategy(4, 3),
        ) {
            let sum = lr_expand(&a, &b, None);
            let json = serde_json::to_string(&sum).unwrap();
            let back: VirtualSchurSum = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(back.support(), sum.support());
            for (g, c) in sum.terms() {
                prop_assert_eq!(&back.coefficient(g), c);
            }
        }

        #[test]
        fn bott_concentration_on_random_weights(
            mut q in proptest::collection::vec(-6i64..=6, 2),
            mut r in proptest::collection::vec(-6i64..=6, 3),
        ) {
            q.sort_unstable_by(|x, y| y.cmp(x));
            r.sort_unstable_by(|x, y| y.cmp(x));
            let ctx = GrassContext::new(2, 5).unwrap();
            let mut entries = q;
            entries.extend(r);
            let w = GLWeight::new(&ctx, entries).unwrap();
            let table = bott(&ctx, &w);
            prop_assert!(table.nonzero_degrees().len() <= 1);
            for d in table.nonzero_degrees() {
                prop_assert!(d <= ctx.dim());
                prop_assert!(!table.dimension(d).is_zero());
            }
        }

        #[test]
        fn work_queue_is_deterministic(count in 0usize..40, parallelism in 1usize..9) {
            let serial: Vec<usize> = (0..count).map(|i| i * i).collect();
            let queued = run_indexed_jobs(count, parallelism, |i| i * i);
            prop_assert_eq!(queued, serial);
        }
    }
}
