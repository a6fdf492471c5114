//! Shared fixtures for the benchmark targets.

use crl_core::partitions::Partition;

/// The (3,2) locus of binary quintics — the standard medium-size workload.
pub fn quintic_32() -> Partition {
    Partition::from_parts(&[3, 2]).expect("valid partition")
}

/// The (3,3) locus of binary sextics.
pub fn sextic_33() -> Partition {
    Partition::from_parts(&[3, 3]).expect("valid partition")
}

/// The (3,2,2) locus of binary septimics — the heavyweight kernel workload.
pub fn septimic_322() -> Partition {
    Partition::from_parts(&[3, 2, 2]).expect("valid partition")
}
