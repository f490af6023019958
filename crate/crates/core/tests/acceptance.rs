//! Acceptance suite: the contract this library ships against.
//!
//! Each test runs one numbered criterion end to end at its stated scale
//! and prints a pass line (run with `--nocapture` to see them). Criterion
//! 10, byte-level determinism of the command-line report, lives in the
//! CLI crate's own acceptance target.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;

use grasstilt_core::{
    bott, example_grass24_analysis, kapranov_decomposition, lr_coefficient_oracle, lr_expand,
    partitions_of_size, projective_line_bundle_oracle, schur_dim, verify_generation_order,
    verify_prop3_sweep, verify_tilting_ext, GLWeight, GrassContext, Partition, PartitionBox,
    TwistedSchurBundle,
};

fn all_partitions_up_to(max_size: u32) -> Vec<Partition> {
    (0..=max_size).flat_map(partitions_of_size).collect()
}

#[test]
fn criterion_01_lr_expansion_agrees_with_the_tableau_oracle() {
    let start = Instant::now();
    let small = all_partitions_up_to(6);
    let mut pairs = 0usize;
    let mut coefficients = 0usize;
    for a in &small {
        for b in &small {
            let expansion = lr_expand(a, b, None);
            pairs += 1;
            // check against every candidate g, so missing terms are caught too
            for g in partitions_of_size((a.size() + b.size()) as u32) {
                let oracle = lr_coefficient_oracle(a, b, &g);
                assert_eq!(
                    expansion.coefficient(&g),
                    BigInt::from(oracle),
                    "c^{g}_{a},{b} disagrees with the tableau count"
                );
                coefficients += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 60,
        "oracle equivalence took {elapsed:?}, budget is 60s"
    );
    println!(
        "criterion 01 PASS: Jacobi-Trudi expansion matches the tableau oracle \
         on {pairs} pairs / {coefficients} coefficients in {elapsed:?}"
    );
}

#[test]
fn criterion_02_dimension_bilinearity() {
    let small = all_partitions_up_to(5);
    let mut checks = 0usize;
    for a in &small {
        for b in &small {
            let product = lr_expand(a, b, None);
            for n in 1..=4u32 {
                let lhs = schur_dim(a, n) * schur_dim(b, n);
                let rhs: BigInt = product.terms().map(|(g, c)| c * schur_dim(g, n)).sum();
                assert_eq!(lhs, rhs, "bilinearity fails at {a} x {b}, rank {n}");
                checks += 1;
            }
        }
    }
    println!("criterion 02 PASS: dimension bilinearity exact on {checks} checks");
}

#[test]
fn criterion_03_bott_matches_the_projective_closed_form() {
    let start = Instant::now();
    for n in 2..=8u32 {
        let ctx = GrassContext::new(1, n).unwrap();
        for d in -12..=12i64 {
            let mut entries = vec![0i64; n as usize];
            entries[0] = d;
            let w = GLWeight::new(&ctx, entries).unwrap();
            let computed = bott(&ctx, &w);
            let oracle = projective_line_bundle_oracle(n, d);
            assert_eq!(computed, oracle, "O({d}) on P^{}", n - 1);
            // the vanishing band the l = 1 reduction rests on
            if -(i64::from(n)) < d && d < 0 {
                assert!(computed.is_zero(), "O({d}) must vanish on P^{}", n - 1);
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 5, "took {elapsed:?}, budget is 5s");
    println!(
        "criterion 03 PASS: rho-shift equals the closed form for n in 2..=8, \
         d in -12..=12, including the vanishing band ({elapsed:?})"
    );
}

#[test]
fn criterion_04_global_sections_anchor() {
    let mut checks = 0usize;
    for (l, m) in [(1, 3), (2, 4), (2, 5), (3, 6)] {
        let ctx = GrassContext::new(l, m).unwrap();
        for gamma in PartitionBox::new(l, m - l).enumerate() {
            let w = TwistedSchurBundle::new(gamma.clone(), 0)
                .weight(&ctx)
                .unwrap();
            let table = bott(&ctx, &w);
            assert_eq!(table.nonzero_degrees(), vec![0], "L_{gamma}Q on {ctx}");
            assert_eq!(
                table.dimension(0),
                schur_dim(&gamma, m),
                "sections of L_{gamma}Q on {ctx}"
            );
            checks += 1;
        }
    }
    println!("criterion 04 PASS: global sections concentrated in degree 0 ({checks} bundles)");
}

#[test]
fn criterion_05_ext_vanishing_for_the_summand_pairs() {
    let start = Instant::now();
    let mut total_pairs = 0usize;
    for (l, m) in [(1, 2), (1, 4), (2, 3), (2, 4), (2, 5), (3, 5), (3, 6)] {
        let ctx = GrassContext::new(l, m).unwrap();
        let report = verify_tilting_ext(&ctx, None, 1);
        assert!(
            report.verdict.is_verified(),
            "Ext-vanishing failed on {ctx}: {:?}",
            report.witnesses
        );
        for (i, row) in report.tables.hom_matrix.iter().enumerate() {
            assert!(
                row[i] >= BigInt::one(),
                "summand {i} on {ctx} has no identity"
            );
        }
        total_pairs += report.tables.pairs_checked;
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "took {elapsed:?}, budget is 2min");
    println!(
        "criterion 05 PASS: higher Ext vanishes for all {total_pairs} ordered \
         summand pairs across seven contexts ({elapsed:?})"
    );
}

#[test]
fn criterion_06_dual_product_vanishing_sweep() {
    let mut total_checks = 0usize;
    for (l, m) in [(2, 4), (2, 5), (3, 5)] {
        let ctx = GrassContext::new(l, m).unwrap();
        let report = verify_prop3_sweep(&ctx, 2, 1);
        assert!(
            report.verdict.is_verified(),
            "vanishing sweep failed on {ctx}: {:?}",
            report.witnesses
        );
        assert_eq!(report.tables.gamma_box, PartitionBox::new(l, 2 * (m - l)));
        total_checks += report.tables.checks;
    }
    println!(
        "criterion 06 PASS: dualized exterior products times L_gamma(Q) have \
         no higher cohomology in {total_checks} swept cases"
    );
}

#[test]
fn criterion_07_generation_order() {
    let mut total_alphas = 0usize;
    for (l, m) in [(2, 4), (2, 5), (3, 5)] {
        let ctx = GrassContext::new(l, m).unwrap();
        let report = verify_generation_order(&ctx);
        assert!(
            report.verdict.is_verified(),
            "generation order failed on {ctx}: {:?}",
            report.witnesses
        );
        for entry in &report.tables.entries {
            assert_eq!(entry.coefficient, BigInt::one(), "{} on {ctx}", entry.alpha);
            assert!(entry.ok);
        }
        total_alphas += report.tables.entries.len();
    }
    println!(
        "criterion 07 PASS: every box partition has coefficient one in its \
         conjugate exterior product, rest lex-smaller ({total_alphas} cases)"
    );
}

#[test]
fn criterion_08_kapranov_support_recovery() {
    for (l, m, expected) in [(2u32, 4u32, 6usize), (2, 5, 10), (3, 6, 20)] {
        let ctx = GrassContext::new(l, m).unwrap();
        let report = kapranov_decomposition(&ctx);
        assert!(
            report.verdict.is_verified(),
            "support check failed on {ctx}"
        );
        assert!(report.tables.support_equals_box, "{ctx}");
        assert_eq!(report.tables.box_count, expected, "{ctx}");
        assert_eq!(report.tables.support_count, expected, "{ctx}");
    }
    // the line-bundle case, with both numbers reported explicitly
    let line = GrassContext::new(1, 4).unwrap();
    let report = kapranov_decomposition(&line);
    assert!(
        report.tables.note.is_some(),
        "l = 1 must carry its caveat note"
    );
    assert_eq!(report.tables.support_count, 4);
    assert_eq!(report.tables.box_count, 4);
    assert!(report.verdict.is_verified());
    println!(
        "criterion 08 PASS: characteristic-zero support equals the full box \
         (6, 10, 20 partitions; l = 1 case reported with both counts)"
    );
}

#[test]
fn criterion_09_grass24_example_inputs() {
    let start = Instant::now();
    let report = example_grass24_analysis();
    assert!(report.verdict.is_verified());
    assert!(report.tables.twisted_symmetric_square.is_zero());
    assert_eq!(report.tables.endomorphism_dimension, BigInt::one());
    assert!(report.tables.endomorphism_higher_vanishes);
    assert!(report.tables.rank_identity_holds);
    let elapsed = start.elapsed();
    assert!(elapsed.as_millis() < 1000, "took {elapsed:?}, budget is 1s");
    println!(
        "criterion 09 PASS: twisted symmetric square has no cohomology at all \
         and End(Q) is one-dimensional ({elapsed:?})"
    );
}
