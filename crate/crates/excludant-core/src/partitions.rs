//! Partitions, restricted partition classes, and Ferrers-diagram plumbing.
//!
//! A partition is stored with its parts expanded (repeats listed) in
//! non-increasing order; the empty sequence is the unique partition of 0.
//! Enumeration yields partitions in lexicographically decreasing order of the
//! part sequence, so golden tests are stable.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// A partition: non-increasing positive parts, counted with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Build from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ClassViolation(String::from("parts must be positive")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Largest part, if any.
    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn contains(&self, value: u32) -> bool {
        self.parts.binary_search_by(|p| value.cmp(p)).is_ok()
    }

    /// Run-length view: `(value, multiplicity)` pairs, values decreasing.
    pub fn run_lengths(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Column lengths of the Ferrers diagram; a weight-preserving involution.
    pub fn conjugate(&self) -> Self {
        match self.parts.first() {
            None => Self::empty(),
            Some(&first) => {
                let mut cols = vec![0u32; first as usize];
                for &p in &self.parts {
                    for c in cols.iter_mut().take(p as usize) {
                        *c += 1;
                    }
                }
                Self { parts: cols }
            }
        }
    }

    pub fn is_in_class(&self, class: PartitionClass) -> bool {
        let distinct = |parity: u32| {
            self.run_lengths().iter().all(|&(v, m)| v % 2 != parity || m == 1)
        };
        match class {
            PartitionClass::Unrestricted => true,
            PartitionClass::DistinctOddParts => distinct(1),
            PartitionClass::DistinctEvenParts => distinct(0),
            PartitionClass::TwoColoredEvenDistinct => self
                .run_lengths()
                .iter()
                .all(|&(v, m)| if v % 2 == 1 { m == 1 } else { m <= 2 }),
            PartitionClass::EvenPartsMultipleOf4 => {
                self.parts.iter().all(|&p| p % 2 == 1 || p % 4 == 0)
            }
        }
    }
}

impl core::fmt::Display for Partition {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, "+")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// Restricted classes the statistics are read over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionClass {
    Unrestricted,
    /// Odd parts at most once; even parts free.
    DistinctOddParts,
    /// Even parts at most once; odd parts free.
    DistinctEvenParts,
    /// Underlying supports of two-colored distinct partitions:
    /// odd parts at most once, even parts at most twice.
    TwoColoredEvenDistinct,
    /// Even parts divisible by 4 (any multiplicity); odd parts free.
    EvenPartsMultipleOf4,
}

/// All partitions of `n` in the class, lexicographically decreasing.
pub fn enumerate(n: u32, class: PartitionClass) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut acc: Vec<u32> = Vec::new();
    descend(n, n, class, &mut acc, &mut out);
    out
}

fn part_admissible(p: u32, class: PartitionClass) -> bool {
    match class {
        PartitionClass::EvenPartsMultipleOf4 => p % 2 == 1 || p.is_multiple_of(4),
        _ => true,
    }
}

fn max_multiplicity(p: u32, class: PartitionClass) -> u32 {
    match class {
        PartitionClass::Unrestricted | PartitionClass::EvenPartsMultipleOf4 => u32::MAX,
        PartitionClass::DistinctOddParts => {
            if p % 2 == 1 {
                1
            } else {
                u32::MAX
            }
        }
        PartitionClass::DistinctEvenParts => {
            if p.is_multiple_of(2) {
                1
            } else {
                u32::MAX
            }
        }
        PartitionClass::TwoColoredEvenDistinct => {
            if p % 2 == 1 {
                1
            } else {
                2
            }
        }
    }
}

fn descend(
    remaining: u32,
    max_part: u32,
    class: PartitionClass,
    acc: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition { parts: acc.clone() });
        return;
    }
    let mut p = core::cmp::min(remaining, max_part);
    while p >= 1 {
        if part_admissible(p, class) {
            let used = acc.iter().rev().take_while(|&&x| x == p).count() as u32;
            if used < max_multiplicity(p, class) {
                acc.push(p);
                descend(remaining - p, p, class, acc, out);
                acc.pop();
            }
        }
        p -= 1;
    }
}

/// One part of a two-colored partition; the color bit exists iff the value is
/// even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredPart {
    pub value: u32,
    pub color: Option<u8>,
}

impl ColoredPart {
    pub fn odd(value: u32) -> Self {
        Self { value, color: None }
    }

    pub fn even(value: u32, color: u8) -> Self {
        Self { value, color: Some(color) }
    }
}

/// Element of the two-colored distinct-part family: all `(value, color)`
/// pairs distinct, colors 0/1 on even values only, odd values at most once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredPartition {
    parts: Vec<ColoredPart>,
}

impl ColoredPartition {
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Validates the coloring rules and sorts parts by decreasing value
    /// (color 0 before color 1 at equal value).
    pub fn new(mut parts: Vec<ColoredPart>) -> Result<Self> {
        for p in &parts {
            if p.value == 0 {
                return Err(Error::MalformedColored(String::from("zero part")));
            }
            match (p.value % 2, p.color) {
                (1, None) | (0, Some(0)) | (0, Some(1)) => {}
                (1, Some(_)) => {
                    return Err(Error::MalformedColored(String::from("odd part carries a color")))
                }
                (0, None) => {
                    return Err(Error::MalformedColored(String::from("even part missing color")))
                }
                _ => return Err(Error::MalformedColored(String::from("color out of range"))),
            }
        }
        parts.sort_unstable_by(|a, b| (b.value, a.color).cmp(&(a.value, b.color)));
        for pair in parts.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::MalformedColored(format!(
                    "repeated part {}",
                    pair[0].value
                )));
            }
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[ColoredPart] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|p| p.value as u64).sum()
    }

    /// Values of a given color, decreasing (odd parts have no color).
    pub fn values_with_color(&self, color: u8) -> Vec<u32> {
        self.parts
            .iter()
            .filter(|p| p.color == Some(color))
            .map(|p| p.value)
            .collect()
    }

    pub fn odd_values(&self) -> Vec<u32> {
        self.parts.iter().filter(|p| p.color.is_none()).map(|p| p.value).collect()
    }
}

impl core::fmt::Display for ColoredPartition {
    /// Pretty form with color subscripts, e.g. `6_1 4_1 3 2_0 1`.
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, " ")?;
            }
            match p.color {
                Some(c) => write!(f, "{}_{}", p.value, c)?,
                None => write!(f, "{}", p.value)?,
            }
            first = false;
        }
        Ok(())
    }
}

/// All two-colored distinct partitions of `n`, in decreasing lexicographic
/// order of the sorted part list.
pub fn enumerate_colored(n: u32) -> Vec<ColoredPartition> {
    let mut out = Vec::new();
    let mut acc: Vec<ColoredPart> = Vec::new();
    colored_descend(n, n, &mut acc, &mut out);
    out.sort_unstable_by(|a, b| b.parts.cmp(&a.parts));
    out
}

fn colored_descend(remaining: u32, max_value: u32, acc: &mut Vec<ColoredPart>, out: &mut Vec<ColoredPartition>) {
    if remaining == 0 {
        out.push(ColoredPartition { parts: acc.clone() });
        return;
    }
    let mut v = core::cmp::min(remaining, max_value);
    while v >= 1 {
        if v % 2 == 1 {
            acc.push(ColoredPart::odd(v));
            colored_descend(remaining - v, v - 1, acc, out);
            acc.pop();
        } else {
            for colors in [&[0u8][..], &[1], &[0, 1]] {
                let total: u32 = v * colors.len() as u32;
                if total <= remaining {
                    for &c in colors {
                        acc.push(ColoredPart::even(v, c));
                    }
                    colored_descend(remaining - total, v - 1, acc, out);
                    for _ in colors {
                        acc.pop();
                    }
                }
            }
        }
        v -= 1;
    }
}

/// Row lengths plus per-row shift offsets (0 for ordinary diagrams,
/// `j - 1` for row `j` of a shifted diagram).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FerrersDiagram {
    rows: Vec<u32>,
    offsets: Vec<u32>,
}

impl FerrersDiagram {
    /// Ordinary left-justified diagram of a partition.
    pub fn of(p: &Partition) -> Self {
        let rows: Vec<u32> = p.parts().to_vec();
        let offsets = vec![0; rows.len()];
        Self { rows, offsets }
    }

    /// Shifted diagram of a distinct-part partition: row `j` moved `j - 1`
    /// cells right.
    pub fn shifted(p: &Partition) -> Self {
        let rows: Vec<u32> = p.parts().to_vec();
        let offsets = (0..rows.len() as u32).collect();
        Self { rows, offsets }
    }

    /// Diagram used by the staircase bijection: rows `1, 2, .., k` stacked on
    /// top of the partition's rows (all left-justified).
    pub fn augmented(p: &Partition, k: u32) -> Self {
        let mut rows: Vec<u32> = (1..=k).collect();
        rows.extend_from_slice(p.parts());
        let offsets = vec![0; rows.len()];
        Self { rows, offsets }
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn offsets(&self) -> &[u32] {
        &self.offsets
    }

    pub fn cell_count(&self) -> u64 {
        self.rows.iter().map(|&r| r as u64).sum()
    }

    /// ASCII rendering, one `#` per cell, honoring shifts.
    pub fn render_ascii(&self) -> String {
        let mut out = String::new();
        for (row, off) in self.rows.iter().zip(&self.offsets) {
            for _ in 0..*off {
                out.push(' ');
            }
            for _ in 0..*row {
                out.push('#');
            }
            out.push('\n');
        }
        out
    }
}
