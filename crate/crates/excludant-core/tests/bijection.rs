//! Staircase-bijection tests beyond the module's unit checks: weight
//! bookkeeping, staircase-parameter disjointness, cardinality, the color
//! parity law, and profile-split reconstruction on random diagrams.

mod common;

use excludant_core::bijection::{check_bijection, phi, staircase_split, BijectionInput};
use excludant_core::identities::ped_gf;
use excludant_core::partitions::{enumerate, FerrersDiagram, Partition, PartitionClass};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn check_bijection_to_weight_twenty() {
    for n in 0..=20u32 {
        let report = check_bijection(n);
        assert!(report.pass, "n = {n}: {:?}", report.failure);
    }
}

#[test]
fn weight_preservation_and_parity_law() {
    for n in 0..=16u32 {
        let mut k = 0u32;
        while (k * (k + 1)) <= n {
            let m = n - k * (k + 1);
            for lambda in enumerate(m, PartitionClass::DistinctOddParts) {
                let image =
                    phi(&BijectionInput { partition: lambda.clone(), staircase: k }, n).unwrap();
                assert_eq!(image.weight(), lambda.weight() + (k as u64) * (k as u64 + 1));
                let l0 = image.values_with_color(0).len();
                let l1 = image.values_with_color(1).len();
                if k.is_multiple_of(2) {
                    assert!(l0 >= l1, "k = {k} even: {image}");
                } else {
                    assert!(l1 > l0, "k = {k} odd: {image}");
                }
            }
            k += 1;
        }
    }
}

#[test]
fn staircase_slices_partition_the_domain() {
    // summing the domain sizes over k reproduces the distinct-even count
    let ped = ped_gf(40);
    for n in 0..=40u32 {
        let mut total = 0u64;
        let mut k = 0u32;
        while k * (k + 1) <= n {
            total += enumerate(n - k * (k + 1), PartitionClass::DistinctOddParts).len() as u64;
            k += 1;
        }
        assert_eq!(BigInt::from(total), ped.coeff(n as usize), "n = {n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    /// Reassembling the two split components along the profile reproduces
    /// the diagram: columns j..j+len-1 on the left, row tails on the right.
    #[test]
    fn split_reconstructs_random_diagrams(
        parts in proptest::collection::vec(1u32..=10, 0..=8)
    ) {
        let p = Partition::new(parts).unwrap();
        let split = staircase_split(&FerrersDiagram::of(&p));
        let nrows = p.len().max(
            split
                .left_columns
                .parts()
                .iter()
                .enumerate()
                .map(|(j0, &len)| j0 + len as usize)
                .max()
                .unwrap_or(0),
        );
        let mut rows = vec![0u32; nrows];
        for (j0, &len) in split.left_columns.parts().iter().enumerate() {
            for row in rows.iter_mut().skip(j0).take(len as usize) {
                *row += 1;
            }
        }
        for (i0, &r) in split.right_rows.parts().iter().enumerate() {
            rows[i0] += r;
        }
        rows.retain(|&r| r > 0);
        prop_assert_eq!(rows.as_slice(), p.parts());
    }
}
