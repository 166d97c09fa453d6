//! Per-partition excludant statistics and the twelve aggregate sequences.
//!
//! `mex` is the least positive integer missing from the parts; `moex`/`meex`
//! restrict to odd/even candidates. The maximal excludant `maxex` is the
//! largest integer below the largest part that is not a part (0 always
//! qualifies), and `moax`/`meax` are its parity restrictions — `moax` may not
//! exist, which the aggregates count as 0.
//!
//! Everything here is brute force over [`enumerate`]; the series engine in
//! [`crate::identities`] covers large `n`.


use crate::partitions::{enumerate, Partition, PartitionClass};
use crate::{Error, Result};

/// Parity selector for the restricted excludants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    fn bit(self) -> u32 {
        match self {
            Parity::Odd => 1,
            Parity::Even => 0,
        }
    }
}

/// Smallest positive integer that is not a part.
pub fn mex(p: &Partition) -> u32 {
    let mut candidate = 1;
    // parts are sorted decreasing; scan from the small end
    for &part in p.parts().iter().rev() {
        if part == candidate {
            candidate += 1;
        } else if part > candidate {
            break;
        }
    }
    candidate
}

/// Smallest positive integer of the given parity that is not a part.
pub fn parity_mex(p: &Partition, parity: Parity) -> u32 {
    let mut candidate = if parity == Parity::Odd { 1 } else { 2 };
    while p.contains(candidate) {
        candidate += 2;
    }
    candidate
}

/// Largest integer in `[0, largest_part)` that is not a part.
///
/// Always exists for a non-empty partition because 0 is never a part.
pub fn maxex(p: &Partition) -> Result<u32> {
    let largest = p.largest().ok_or(Error::EmptyPartition)?;
    let mut candidate = largest - 1;
    loop {
        if !p.contains(candidate) {
            return Ok(candidate);
        }
        if candidate == 0 {
            unreachable!("0 is never a part");
        }
        candidate -= 1;
    }
}

/// Largest integer of the given parity in `[0, largest_part)` that is not a
/// part; `None` when every such integer is a part (only possible for odd
/// parity, since 0 is never a part).
pub fn parity_max(p: &Partition, parity: Parity) -> Result<Option<u32>> {
    let largest = p.largest().ok_or(Error::EmptyPartition)?;
    let mut candidate = largest as i64 - 1;
    if candidate >= 0 && candidate as u32 % 2 != parity.bit() {
        candidate -= 1;
    }
    while candidate >= 0 {
        if !p.contains(candidate as u32) {
            return Ok(Some(candidate as u32));
        }
        candidate -= 2;
    }
    Ok(None)
}

/// The twelve aggregate sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StatisticId {
    /// Count of distinct-odd-part partitions with odd mex.
    AOodd,
    /// Count of distinct-odd-part partitions with even mex.
    AOeven,
    /// Sum of moex over distinct-odd-part partitions.
    SigmaOdMoex,
    /// Sum of meex over distinct-odd-part partitions.
    SigmaOdMeex,
    /// Count of distinct-odd-part partitions with odd maximal excludant.
    AbarOodd,
    /// Count of distinct-odd-part partitions with even maximal excludant.
    AbarOeven,
    /// Sum of moax (missing values count 0) over distinct-odd-part partitions.
    SigmaOdMoax,
    /// Sum of meax over distinct-odd-part partitions.
    SigmaOdMeax,
    /// Count of distinct-even-part partitions with odd mex.
    AEDodd,
    /// Count of distinct-even-part partitions with even mex.
    AEDeven,
    /// Sum of moex over distinct-even-part partitions.
    SigmaEdMoex,
    /// Sum of meex over distinct-even-part partitions.
    SigmaEdMeex,
}

impl StatisticId {
    pub const ALL: [StatisticId; 12] = [
        StatisticId::AOodd,
        StatisticId::AOeven,
        StatisticId::SigmaOdMoex,
        StatisticId::SigmaOdMeex,
        StatisticId::AbarOodd,
        StatisticId::AbarOeven,
        StatisticId::SigmaOdMoax,
        StatisticId::SigmaOdMeax,
        StatisticId::AEDodd,
        StatisticId::AEDeven,
        StatisticId::SigmaEdMoex,
        StatisticId::SigmaEdMeex,
    ];

    /// Stable kebab-case name used by the command line.
    pub fn name(self) -> &'static str {
        match self {
            StatisticId::AOodd => "a-o-od",
            StatisticId::AOeven => "a-e-od",
            StatisticId::SigmaOdMoex => "sigma-od-moex",
            StatisticId::SigmaOdMeex => "sigma-od-meex",
            StatisticId::AbarOodd => "abar-o-od",
            StatisticId::AbarOeven => "abar-e-od",
            StatisticId::SigmaOdMoax => "sigma-od-moax",
            StatisticId::SigmaOdMeax => "sigma-od-meax",
            StatisticId::AEDodd => "a-o-ed",
            StatisticId::AEDeven => "a-e-ed",
            StatisticId::SigmaEdMoex => "sigma-ed-moex",
            StatisticId::SigmaEdMeex => "sigma-ed-meex",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.name() == name)
    }

    /// One-line definition for `--list` output.
    pub fn description(self) -> &'static str {
        match self {
            StatisticId::AOodd => "distinct odd parts, least excludant odd (count)",
            StatisticId::AOeven => "distinct odd parts, least excludant even (count)",
            StatisticId::SigmaOdMoex => "distinct odd parts, sum of least odd excludants",
            StatisticId::SigmaOdMeex => "distinct odd parts, sum of least even excludants",
            StatisticId::AbarOodd => "distinct odd parts, maximal excludant odd (count)",
            StatisticId::AbarOeven => "distinct odd parts, maximal excludant even (count)",
            StatisticId::SigmaOdMoax => "distinct odd parts, sum of largest odd excludants",
            StatisticId::SigmaOdMeax => "distinct odd parts, sum of largest even excludants",
            StatisticId::AEDodd => "distinct even parts, least excludant odd (count)",
            StatisticId::AEDeven => "distinct even parts, least excludant even (count)",
            StatisticId::SigmaEdMoex => "distinct even parts, sum of least odd excludants",
            StatisticId::SigmaEdMeex => "distinct even parts, sum of least even excludants",
        }
    }

    /// The partition class the statistic aggregates over.
    pub fn class(self) -> PartitionClass {
        match self {
            StatisticId::AEDodd
            | StatisticId::AEDeven
            | StatisticId::SigmaEdMoex
            | StatisticId::SigmaEdMeex => PartitionClass::DistinctEvenParts,
            _ => PartitionClass::DistinctOddParts,
        }
    }

    fn contribution(self, p: &Partition) -> u64 {
        match self {
            StatisticId::AOodd | StatisticId::AEDodd => (mex(p) % 2 == 1) as u64,
            StatisticId::AOeven | StatisticId::AEDeven => mex(p).is_multiple_of(2) as u64,
            StatisticId::SigmaOdMoex | StatisticId::SigmaEdMoex => {
                parity_mex(p, Parity::Odd) as u64
            }
            StatisticId::SigmaOdMeex | StatisticId::SigmaEdMeex => {
                parity_mex(p, Parity::Even) as u64
            }
            // maximal-excludant statistics skip the empty partition: there is
            // no largest part to read below
            StatisticId::AbarOodd => match maxex(p) {
                Ok(v) => (v % 2 == 1) as u64,
                Err(_) => 0,
            },
            StatisticId::AbarOeven => match maxex(p) {
                Ok(v) => (v % 2 == 0) as u64,
                Err(_) => 0,
            },
            StatisticId::SigmaOdMoax => match parity_max(p, Parity::Odd) {
                Ok(Some(v)) => v as u64,
                _ => 0,
            },
            StatisticId::SigmaOdMeax => match parity_max(p, Parity::Even) {
                Ok(Some(v)) => v as u64,
                _ => 0,
            },
        }
    }
}

/// Default guard for exhaustive enumeration.
pub const DEFAULT_ENUMERATION_BUDGET: u32 = 45;

/// Aggregate value of a statistic at `n` by exhaustive enumeration.
pub fn sequence_value(stat: StatisticId, n: u32) -> Result<u64> {
    sequence_value_with_budget(stat, n, DEFAULT_ENUMERATION_BUDGET)
}

pub fn sequence_value_with_budget(stat: StatisticId, n: u32, budget: u32) -> Result<u64> {
    if n > budget {
        return Err(Error::BudgetExceeded { n, budget });
    }
    Ok(enumerate(n, stat.class()).iter().map(|p| stat.contribution(p)).sum())
}

/// Number of distinct-odd-part partitions of `n` whose even parts exceeding
/// their least even excludant number exactly `j` (with multiplicity).
pub fn bivariate_count_odm(n: u32, j: u32) -> Result<u64> {
    bivariate_count_odm_with_budget(n, j, DEFAULT_ENUMERATION_BUDGET)
}

pub fn bivariate_count_odm_with_budget(n: u32, j: u32, budget: u32) -> Result<u64> {
    if n > budget {
        return Err(Error::BudgetExceeded { n, budget });
    }
    let mut count = 0;
    for p in enumerate(n, PartitionClass::DistinctOddParts) {
        let me = parity_mex(&p, Parity::Even);
        let exceed = p.parts().iter().filter(|&&v| v % 2 == 0 && v > me).count() as u32;
        if exceed == j {
            count += 1;
        }
    }
    Ok(count)
}

/// Number of partitions of `n` whose even parts are multiples of 4, with
/// exactly `j` even parts (with multiplicity); odd parts are unrestricted.
pub fn bivariate_count_4e(n: u32, j: u32) -> Result<u64> {
    bivariate_count_4e_with_budget(n, j, DEFAULT_ENUMERATION_BUDGET)
}

pub fn bivariate_count_4e_with_budget(n: u32, j: u32, budget: u32) -> Result<u64> {
    if n > budget {
        return Err(Error::BudgetExceeded { n, budget });
    }
    let mut count = 0;
    for p in enumerate(n, PartitionClass::EvenPartsMultipleOf4) {
        let evens = p.parts().iter().filter(|&&v| v % 2 == 0).count() as u32;
        if evens == j {
            count += 1;
        }
    }
    Ok(count)
}
