//! The constructive staircase bijection between distinct-odd-part partitions
//! (shifted by a staircase weight) and two-colored distinct partitions.
//!
//! Forward direction: split off the odd parts, halve the even parts, stack a
//! rotated staircase with rows `1, 2, .., k` on top of the halved diagram,
//! and cut the result along the diagonal staircase profile. Columns on the
//! left of the profile and rows on its right form two distinct-part
//! partitions; doubled and colored (`columns -> k mod 2`,
//! `rows -> k+1 mod 2`) they join the untouched odd parts.
//!
//! The profile is the lattice path separating cells `(i, j)` with `j <= i`
//! from those with `j > i` (matrix coordinates, rows from 1), which
//! reproduces the worked split `[1-box on top of (3,2)] -> columns (3,2),
//! rows (1)` and passes exhaustive round trips.

use alloc::format;
use alloc::vec::Vec;

use crate::partitions::{
    enumerate, enumerate_colored, ColoredPart, ColoredPartition, FerrersDiagram, Partition,
    PartitionClass,
};
use crate::{Error, Result};

/// Input of the forward map: a distinct-odd-part partition together with the
/// staircase parameter `k`; its weight must be `n - k(k+1)` for the target
/// weight `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionInput {
    pub partition: Partition,
    pub staircase: u32,
}

/// The two distinct-part partitions a staircase profile cuts a diagram into.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircaseSplit {
    /// Column lengths left of the profile (cells with `j <= i`).
    pub left_columns: Partition,
    /// Row lengths right of the profile (cells with `j > i`).
    pub right_rows: Partition,
}

/// Cut a left-justified diagram along its staircase profile.
///
/// Column `j` collects the cells `(i, j)` with `i >= j`; row `i` keeps its
/// cells with `j > i`. Both reads produce strictly decreasing part lists.
pub fn staircase_split(diagram: &FerrersDiagram) -> StaircaseSplit {
    let rows = diagram.rows();
    let mut left = Vec::new();
    let mut j = 1u32;
    loop {
        let len = rows
            .iter()
            .enumerate()
            .skip(j as usize - 1)
            .filter(|&(_, &r)| r >= j)
            .count() as u32;
        if len == 0 {
            break;
        }
        left.push(len);
        j += 1;
    }
    let right: Vec<u32> = rows
        .iter()
        .enumerate()
        .filter_map(|(i0, &r)| {
            let i = i0 as u32 + 1;
            if r > i {
                Some(r - i)
            } else {
                None
            }
        })
        .collect();
    StaircaseSplit {
        left_columns: Partition::new(left).expect("column lengths are positive"),
        right_rows: Partition::new(right).expect("row lengths are positive"),
    }
}

/// Forward staircase map into the two-colored distinct partitions of
/// `target_weight`.
pub fn phi(input: &BijectionInput, target_weight: u32) -> Result<ColoredPartition> {
    let lambda = &input.partition;
    let k = input.staircase;
    if !lambda.is_in_class(PartitionClass::DistinctOddParts) {
        return Err(Error::ClassViolation(format!(
            "{lambda} has a repeated odd part"
        )));
    }
    let expected = lambda.weight() + (k as u64) * (k as u64 + 1);
    if expected != target_weight as u64 {
        return Err(Error::WeightMismatch { expected, got: target_weight as u64 });
    }

    let odd: Vec<u32> = lambda.parts().iter().copied().filter(|p| p % 2 == 1).collect();
    let halved: Vec<u32> =
        lambda.parts().iter().copied().filter(|p| p % 2 == 0).map(|p| p / 2).collect();
    let halved = Partition::new(halved).expect("positive parts");

    let split = staircase_split(&FerrersDiagram::augmented(&halved, k));
    let color_left = (k % 2) as u8;
    let color_right = ((k + 1) % 2) as u8;

    // the profile leaves between k and k+1 more columns than rows
    let diff = split.left_columns.len() as i64 - split.right_rows.len() as i64;
    debug_assert!(diff == k as i64 || diff == k as i64 + 1, "profile length law");

    let mut parts = Vec::new();
    for &v in split.left_columns.parts() {
        parts.push(ColoredPart::even(2 * v, color_left));
    }
    for &v in split.right_rows.parts() {
        parts.push(ColoredPart::even(2 * v, color_right));
    }
    for &v in &odd {
        parts.push(ColoredPart::odd(v));
    }
    ColoredPartition::new(parts)
}

/// Inverse staircase map: recover the staircase parameter from the color
/// class lengths, rebuild the augmented diagram, strip the staircase, and
/// double what remains.
pub fn phi_inverse(colored: &ColoredPartition) -> Result<BijectionInput> {
    let odd = colored.odd_values();
    let halved_0: Vec<u32> = colored.values_with_color(0).iter().map(|v| v / 2).collect();
    let halved_1: Vec<u32> = colored.values_with_color(1).iter().map(|v| v / 2).collect();

    // ties (equal lengths) land in the color-0-larger branch with k' = 0
    let (columns, rows, k) = if halved_0.len() >= halved_1.len() {
        let kp = (halved_0.len() - halved_1.len()) as u32;
        let k = if kp.is_multiple_of(2) { kp } else { kp - 1 };
        (halved_0, halved_1, k)
    } else {
        let kp = (halved_1.len() - halved_0.len()) as u32;
        let k = if kp % 2 == 1 { kp } else { kp - 1 };
        (halved_1, halved_0, k)
    };

    // rebuild the augmented diagram: column j spans rows j..j+len-1, and the
    // right-of-profile cells sit on the consecutive rows below the staircase
    let col_count = columns.len();
    let nrows = columns
        .iter()
        .enumerate()
        .map(|(j0, &len)| j0 + len as usize)
        .max()
        .unwrap_or(0)
        .max(k as usize + rows.len());
    let mut diagram = alloc::vec![0u32; nrows];
    for (j0, &len) in columns.iter().enumerate() {
        for cell in diagram.iter_mut().skip(j0).take(len as usize) {
            *cell += 1;
        }
    }
    for (t0, &r) in rows.iter().enumerate() {
        let i = k as usize + t0; // row index (0-based) carrying right cells
        if i >= diagram.len() {
            return Err(Error::MalformedColored(format!(
                "row {} of the rebuilt diagram is out of range",
                i + 1
            )));
        }
        // cells at columns i+2 ..= i+1+r must continue a left-justified row
        if diagram[i] != i as u32 + 1 {
            return Err(Error::MalformedColored(format!(
                "right cells of row {} do not touch the profile",
                i + 1
            )));
        }
        diagram[i] += r;
    }
    // left region never reaches right of the diagonal
    if col_count > nrows {
        return Err(Error::MalformedColored(alloc::string::String::from(
            "left columns overrun the diagonal",
        )));
    }

    // strip the staircase rows 1..k
    for (i, &len) in diagram.iter().enumerate().take(k as usize) {
        if len != i as u32 + 1 {
            return Err(Error::MalformedColored(format!(
                "staircase row {} has length {len}",
                i + 1
            )));
        }
    }
    let remainder = &diagram[k as usize..];
    for w in remainder.windows(2) {
        if w[0] < w[1] {
            return Err(Error::MalformedColored(alloc::string::String::from(
                "stripped diagram is not a partition",
            )));
        }
    }

    let mut parts: Vec<u32> = remainder.iter().filter(|&&r| r > 0).map(|&r| 2 * r).collect();
    parts.extend(odd);
    let partition = Partition::new(parts)?;
    if !partition.is_in_class(PartitionClass::DistinctOddParts) {
        return Err(Error::ClassViolation(format!(
            "{partition} has a repeated odd part"
        )));
    }
    Ok(BijectionInput { partition, staircase: k })
}

/// Full verification of the bijection at one target weight: totality,
/// injectivity, surjectivity, and both round trips.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionReport {
    pub n: u32,
    /// Total domain size over all staircase parameters.
    pub domain_size: usize,
    /// Number of two-colored distinct partitions of `n`.
    pub image_size: usize,
    pub pass: bool,
    /// First failure description, if any.
    pub failure: Option<alloc::string::String>,
}

pub fn check_bijection(n: u32) -> BijectionReport {
    let mut images: Vec<(ColoredPartition, u32)> = Vec::new();
    let mut domain_size = 0usize;
    let mut failure = None;

    let mut k = 0u32;
    while (k as u64) * (k as u64 + 1) <= n as u64 && failure.is_none() {
        let m = n - (k * (k + 1));
        for lambda in enumerate(m, PartitionClass::DistinctOddParts) {
            domain_size += 1;
            let input = BijectionInput { partition: lambda.clone(), staircase: k };
            let image = match phi(&input, n) {
                Ok(cp) => cp,
                Err(e) => {
                    failure = Some(format!("phi({lambda}, k={k}) failed: {e}"));
                    break;
                }
            };
            if image.weight() != n as u64 {
                failure = Some(format!("phi({lambda}, k={k}) lost weight"));
                break;
            }
            match phi_inverse(&image) {
                Ok(back) if back == input => {}
                Ok(back) => {
                    failure = Some(format!(
                        "round trip moved ({lambda}, k={k}) to ({}, k={})",
                        back.partition, back.staircase
                    ));
                    break;
                }
                Err(e) => {
                    failure = Some(format!("phi_inverse(phi({lambda}, k={k})) failed: {e}"));
                    break;
                }
            }
            images.push((image, k));
        }
        k += 1;
    }

    if failure.is_none() {
        let mut sorted: Vec<&(ColoredPartition, u32)> = images.iter().collect();
        sorted.sort_by(|a, b| format!("{}", a.0).cmp(&format!("{}", b.0)));
        for pair in sorted.windows(2) {
            if pair[0].0 == pair[1].0 {
                failure = Some(format!(
                    "collision: {} reached from staircase parameters {} and {}",
                    pair[0].0, pair[0].1, pair[1].1
                ));
                break;
            }
        }
    }

    let target = enumerate_colored(n);
    if failure.is_none() {
        if images.len() != target.len() {
            failure = Some(format!(
                "domain maps onto {} images but there are {} colored partitions",
                images.len(),
                target.len()
            ));
        } else {
            // surjectivity plus the opposite round trip
            for colored in &target {
                match phi_inverse(colored) {
                    Ok(input) => match phi(&input, n) {
                        Ok(again) if &again == colored => {}
                        _ => {
                            failure = Some(format!("phi(phi_inverse({colored})) != {colored}"));
                            break;
                        }
                    },
                    Err(e) => {
                        failure = Some(format!("phi_inverse({colored}) failed: {e}"));
                        break;
                    }
                }
            }
        }
    }

    BijectionReport {
        n,
        domain_size,
        image_size: target.len(),
        pass: failure.is_none(),
        failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn worked_example_forward() {
        let input = BijectionInput {
            partition: Partition::new(vec![6, 4, 3, 1]).unwrap(),
            staircase: 1,
        };
        let image = phi(&input, 16).unwrap();
        assert_eq!(format!("{image}"), "6_1 4_1 3 2_0 1");
    }

    #[test]
    fn worked_example_inverse() {
        let colored = ColoredPartition::new(vec![
            ColoredPart::even(6, 1),
            ColoredPart::even(4, 1),
            ColoredPart::odd(3),
            ColoredPart::even(2, 0),
            ColoredPart::odd(1),
        ])
        .unwrap();
        let back = phi_inverse(&colored).unwrap();
        assert_eq!(back.partition.parts(), &[6, 4, 3, 1]);
        assert_eq!(back.staircase, 1);
    }

    #[test]
    fn staircase_split_worked_example() {
        // diagram of (3,2) with one staircase row on top
        let diagram = FerrersDiagram::augmented(&Partition::new(vec![3, 2]).unwrap(), 1);
        let split = staircase_split(&diagram);
        assert_eq!(split.left_columns.parts(), &[3, 2]);
        assert_eq!(split.right_rows.parts(), &[1]);
    }

    #[test]
    fn empty_cases() {
        let split = staircase_split(&FerrersDiagram::of(&Partition::empty()));
        assert!(split.left_columns.is_empty());
        assert!(split.right_rows.is_empty());

        let image = phi(&BijectionInput { partition: Partition::empty(), staircase: 0 }, 0).unwrap();
        assert_eq!(image, ColoredPartition::empty());
        let back = phi_inverse(&ColoredPartition::empty()).unwrap();
        assert!(back.partition.is_empty());
        assert_eq!(back.staircase, 0);
    }

    #[test]
    fn phi_rejects_bad_input() {
        let repeated_odd = Partition::new(vec![3, 3, 1]).unwrap();
        assert!(matches!(
            phi(&BijectionInput { partition: repeated_odd, staircase: 0 }, 7),
            Err(Error::ClassViolation(_))
        ));
        let ok = Partition::new(vec![3, 1]).unwrap();
        assert!(matches!(
            phi(&BijectionInput { partition: ok, staircase: 1 }, 5),
            Err(Error::WeightMismatch { .. })
        ));
    }

    #[test]
    fn check_small_weights() {
        for n in 0..=12u32 {
            let report = check_bijection(n);
            assert!(report.pass, "n = {n}: {:?}", report.failure);
            assert_eq!(report.domain_size, report.image_size, "n = {n}");
        }
    }

    #[test]
    fn colored_cardinality_is_ped() {
        let report = check_bijection(5);
        assert!(report.pass);
        assert_eq!(report.image_size, 6);
    }
}
