//! Cross-validation sweeps tying the three independent engines together:
//! homological character prediction, brute-force linear-algebra kernels,
//! and Gröbner elimination.  Every value here was computed by at least two
//! of the engines.

use crl_core::covariants::{criterion_table, weight_profile_consistent};
use crl_core::encomplex::predicted_ideal_char;
use crl_core::ideal_la::{
    graded_piece_kernel, groebner_eliminate, hilbert_function, kernel_character, KernelConfig,
};
use crl_core::partitions::Partition;

fn p(parts: &[u32]) -> Partition {
    Partition::from_parts(parts).unwrap()
}

fn cfg() -> KernelConfig {
    KernelConfig::default()
}

/// The equivariant prediction agrees with the exact kernel everywhere the
/// prediction's vanishing hypotheses hold (it refuses with an error where
/// they fail, so every returned character must match brute force).  Loci
/// with repeated equal parts other than (3,3) and (3,2,2) have no known
/// correction character and are deliberately absent.
#[test]
fn prediction_matches_kernel_across_the_test_matrix() {
    let matrix: &[(&[u32], &[u32])] = &[
        (&[3, 2], &[3, 4, 5]),
        (&[3, 3], &[3, 4]),
        (&[4, 1], &[1, 2, 3, 4]),
        (&[2, 1], &[1, 2, 3, 4, 5]),
        (&[3, 1], &[2, 3]),
        (&[5, 1], &[2]),
        (&[5, 2], &[4]),
        (&[4, 2], &[3]),
        (&[4, 3], &[4]),
        (&[2], &[2]),
        (&[3], &[2, 3]),
        (&[4], &[2, 3]),
        (&[5], &[2]),
        (&[6], &[2]),
    ];
    for (parts, degrees) in matrix {
        let lambda = p(parts);
        for &m in *degrees {
            let predicted = predicted_ideal_char(&lambda, m)
                .unwrap_or_else(|e| panic!("prediction failed at {lambda}, m = {m}: {e}"));
            let computed = kernel_character(&lambda, m, &cfg()).unwrap();
            assert_eq!(predicted, computed, "lambda = {lambda}, m = {m}");
        }
    }
}

/// Exact Hilbert function values, including below the stable range where
/// the quadratic Hilbert polynomial does not yet apply.
#[test]
fn hilbert_function_catches_the_polynomial() {
    // (3,2): ideal starts in degree 4; the function equals binom(5+m, m)
    // until then and the polynomial 6m^2 + 2 from m = 3 on.
    let values_32 = [6, 21, 56, 98, 152];
    for (m, &expected) in (1u32..=5).zip(&values_32) {
        assert_eq!(hilbert_function(&p(&[3, 2]), m, &cfg()).unwrap(), expected);
    }
    for m in 3u32..=5 {
        assert_eq!(values_32[m as usize - 1], (6 * m * m + 2) as usize);
    }

    // (4,1): agreement with 4m^2 + 2 from m = 1 on.
    for m in 1u32..=4 {
        assert_eq!(
            hilbert_function(&p(&[4, 1]), m, &cfg()).unwrap(),
            (4 * m * m + 2) as usize,
            "lambda = (4,1), m = {m}"
        );
    }

    // (2,1): agreement with 2m^2 + 2 from m = 1 on.
    for m in 1u32..=5 {
        assert_eq!(
            hilbert_function(&p(&[2, 1]), m, &cfg()).unwrap(),
            (2 * m * m + 2) as usize,
            "lambda = (2,1), m = {m}"
        );
    }
}

/// Elimination edge cases: a locus that is the whole space has a zero
/// ideal, and the degree-4 rational normal curve's six quadrics agree
/// between the two engines.
#[test]
fn elimination_edge_cases() {
    // Every binary quadric factors into two linear forms.
    let full = groebner_eliminate(&p(&[1, 1]), &cfg()).unwrap();
    assert!(full.generators.is_empty());
    for m in 1..=2 {
        assert_eq!(
            graded_piece_kernel(&p(&[1, 1]), m, &cfg()).unwrap().report.dim_ideal,
            0
        );
    }

    let rnc4 = groebner_eliminate(&p(&[4]), &cfg()).unwrap();
    assert!(rnc4.generator_degrees().iter().all(|&d| d == 2));
    for m in 1..=3 {
        let kernel_dim = graded_piece_kernel(&p(&[4]), m, &cfg())
            .unwrap()
            .report
            .dim_ideal;
        assert_eq!(rnc4.ideal_dim_in_degree(m), kernel_dim, "m = {m}");
    }
    assert_eq!(rnc4.ideal_dim_in_degree(2), 6); // dim(s4 + s0)
}

/// Every covariant in the seven criterion tables has the weight profile of
/// an order-q irreducible: coefficient of x^k y^{q-k} weight-homogeneous of
/// weight 2k - q, all q + 1 coefficients nonzero.
#[test]
fn criterion_table_weight_profiles() {
    let pairs: [(u32, &[u32]); 7] = [
        (4, &[3, 1]),
        (4, &[2, 2]),
        (5, &[4, 1]),
        (5, &[3, 2]),
        (6, &[5, 1]),
        (6, &[4, 2]),
        (6, &[3, 3]),
    ];
    for (d, parts) in pairs {
        let lambda = p(parts);
        for (m, entries) in criterion_table(d, &lambda).unwrap() {
            for (label, c) in entries {
                assert!(
                    weight_profile_consistent(&c),
                    "d = {d}, lambda = {lambda}, degree {m}: {label}"
                );
            }
        }
    }
}
