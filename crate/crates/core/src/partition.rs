//! Ordinary integer partitions in multiplicity form, and the crank statistic.
//!
//! Partitions are stored sparsely as a map from part size to multiplicity,
//! because every construction downstream (designations, the splitting
//! bijection, the class definitions) is indexed by part size.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An ordinary integer partition, stored as part size -> multiplicity.
///
/// Stored multiplicities are always >= 1; absent sizes mean multiplicity 0.
/// The empty map is the empty partition of 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "PartitionJson", into = "PartitionJson")]
pub struct Partition {
    mult: BTreeMap<u32, u32>,
}

#[derive(Serialize, Deserialize)]
struct PartitionJson {
    mult: BTreeMap<u32, u32>,
}

impl From<Partition> for PartitionJson {
    fn from(p: Partition) -> Self {
        PartitionJson { mult: p.mult }
    }
}

impl TryFrom<PartitionJson> for Partition {
    type Error = InvalidPartition;
    fn try_from(j: PartitionJson) -> Result<Self, InvalidPartition> {
        Partition::from_mult(j.mult)
    }
}

/// Rejection reasons for malformed multiplicity maps and part lists.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvalidPartition {
    #[error("part size 0 is not allowed")]
    ZeroPart,
    #[error("stored multiplicity 0 for size {0}; absent sizes mean multiplicity 0")]
    ZeroMultiplicity(u32),
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition {
            mult: BTreeMap::new(),
        }
    }

    /// Builds a partition from a size -> multiplicity map.
    pub fn from_mult(mult: BTreeMap<u32, u32>) -> Result<Self, InvalidPartition> {
        for (&size, &count) in &mult {
            if size == 0 {
                return Err(InvalidPartition::ZeroPart);
            }
            if count == 0 {
                return Err(InvalidPartition::ZeroMultiplicity(size));
            }
        }
        Ok(Partition { mult })
    }

    /// Builds a partition from a list of parts in any order.
    pub fn from_parts(parts: &[u32]) -> Result<Self, InvalidPartition> {
        let mut mult = BTreeMap::new();
        for &p in parts {
            if p == 0 {
                return Err(InvalidPartition::ZeroPart);
            }
            *mult.entry(p).or_insert(0) += 1;
        }
        Ok(Partition { mult })
    }

    /// The size -> multiplicity map.
    pub fn mult(&self) -> &BTreeMap<u32, u32> {
        &self.mult
    }

    /// Multiplicity of `size` (0 when absent).
    pub fn multiplicity(&self, size: u32) -> u32 {
        self.mult.get(&size).copied().unwrap_or(0)
    }

    /// Sum of all parts.
    pub fn weight(&self) -> u64 {
        self.mult.iter().map(|(&s, &c)| s as u64 * c as u64).sum()
    }

    /// Number of parts, counted with multiplicity.
    pub fn len(&self) -> usize {
        self.mult.values().map(|&c| c as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    /// Number of distinct part sizes.
    pub fn distinct_sizes(&self) -> usize {
        self.mult.len()
    }

    /// Largest part, if any.
    pub fn largest_part(&self) -> Option<u32> {
        self.mult.keys().next_back().copied()
    }

    /// Parts in descending order, with repetition.
    pub fn parts(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len());
        for (&s, &c) in self.mult.iter().rev() {
            out.extend(std::iter::repeat_n(s, c as usize));
        }
        out
    }

    /// The crank: the largest part when no ones occur, otherwise the number
    /// of parts exceeding the count of ones, minus the count of ones.
    /// The empty partition has crank 0.
    pub fn crank(&self) -> i64 {
        let ones = self.multiplicity(1) as i64;
        if ones == 0 {
            return self.largest_part().map_or(0, i64::from);
        }
        let larger: i64 = self
            .mult
            .iter()
            .filter(|&(&s, _)| i64::from(s) > ones)
            .map(|(_, &c)| i64::from(c))
            .sum();
        larger - ones
    }
}

impl fmt::Display for Partition {
    /// Text form `a+b+c` with parts descending; `-` for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "-");
        }
        let mut first = true;
        for (&s, &c) in self.mult.iter().rev() {
            for _ in 0..c {
                if !first {
                    write!(f, "+")?;
                }
                write!(f, "{s}")?;
                first = false;
            }
        }
        Ok(())
    }
}

/// Parse error for the `a+b+c` partition text form.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParsePartitionError {
    #[error("empty input; the empty partition is written \"-\"")]
    Empty,
    #[error("invalid part {0:?}")]
    BadPart(String),
    #[error(transparent)]
    Invalid(#[from] InvalidPartition),
}

/// Parses the `a+b+c` text form produced by [`Partition`]'s `Display`.
/// `-` denotes the empty partition. Parts may appear in any order.
pub fn parse_partition(text: &str) -> Result<Partition, ParsePartitionError> {
    if text.is_empty() {
        return Err(ParsePartitionError::Empty);
    }
    if text == "-" {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for tok in text.split('+') {
        let p: u32 = tok
            .parse()
            .map_err(|_| ParsePartitionError::BadPart(tok.to_string()))?;
        parts.push(p);
    }
    Ok(Partition::from_parts(&parts)?)
}

/// Visits every partition of `n` exactly once as a descending parts slice,
/// in descending lexicographic order on the part lists: (4), (3,1), (2,2),
/// (2,1,1), (1,1,1,1). This order is part of the public contract.
pub fn for_each_partition<F: FnMut(&[u32])>(n: u32, mut visit: F) {
    fn rec<F: FnMut(&[u32])>(rem: u32, max_part: u32, acc: &mut Vec<u32>, visit: &mut F) {
        if rem == 0 {
            visit(acc);
            return;
        }
        for p in (1..=rem.min(max_part)).rev() {
            acc.push(p);
            rec(rem - p, p, acc, visit);
            acc.pop();
        }
    }
    let mut acc = Vec::new();
    rec(n, n, &mut acc, &mut visit);
}

/// All partitions of `n` in the documented deterministic order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition(n, |parts| {
        out.push(Partition::from_parts(parts).expect("enumerated parts are positive"));
    });
    out
}

/// Crank counts `M(m, n)` for one weight.
///
/// At n = 1 the table is the signed convention {-1: 1, 0: -1, 1: 1}; at every
/// other weight the entries are plain counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrankTable {
    n: u32,
    counts: BTreeMap<i64, i64>,
}

impl CrankTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Map m -> M(m, n); zero entries are absent.
    pub fn counts(&self) -> &BTreeMap<i64, i64> {
        &self.counts
    }

    pub fn count(&self, m: i64) -> i64 {
        self.counts.get(&m).copied().unwrap_or(0)
    }

    /// Sum of all entries; equals p(n), also at n = 1 where -1 + 1 + 1 = 1.
    pub fn total(&self) -> i64 {
        self.counts.values().sum()
    }
}

/// Crank counts of all partitions of `n`, with the n = 1 convention built in.
pub fn crank_distribution(n: u32) -> CrankTable {
    if n == 1 {
        let counts = BTreeMap::from([(-1, 1), (0, -1), (1, 1)]);
        return CrankTable { n, counts };
    }
    let mut counts: BTreeMap<i64, i64> = BTreeMap::new();
    for_each_partition(n, |parts| {
        let p = Partition::from_parts(parts).expect("enumerated parts are positive");
        *counts.entry(p.crank()).or_insert(0) += 1;
    });
    CrankTable { n, counts }
}
