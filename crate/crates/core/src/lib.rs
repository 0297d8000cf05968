//! Partitions with overline designated summands.
//!
//! A partition with designated summands marks exactly one copy of each part
//! size occurring in an ordinary partition; an *overline* designated summand
//! additionally tags one of the occurring sizes. This crate enumerates these
//! objects, applies the splitting bijection that sends each one to a pair of
//! ordinary partitions, computes the associated rank statistics (via the
//! Andrews–Garvan crank), and verifies the mod-3 congruences satisfied by the
//! counting functions `PD(n)` and `PD_t(n)` — both by exhaustive enumeration
//! and by exact integer arithmetic on truncated q-series.
//!
//! Everything is exact: counts are integers, series coefficients are
//! arbitrary-precision integers, and no floating point appears anywhere.
//!
//! Module map:
//! - [`partition`]: ordinary partitions in multiplicity form, the crank.
//! - [`designated`]: overline designated summands, the sets S1(n)/S2(n),
//!   `PD(n)`, `PD_t(n)`, and the canonical text notation.
//! - [`mod@delta`]: the bijection between S1(n) and S2(n), both directions.
//! - [`ranks`]: the pdt-rank, signed counts, the A/B classification, the
//!   class bijection, and the modified pdt-rank.
//! - [`series`]: truncated integer power series, eta-like products, the
//!   generating functions, and the 3-dissection identities.
//! - [`tables`]: rank-table rows and the golden table data.
//! - [`checks`]: the named verification registry backing `verify`.

pub mod checks;
pub mod delta;
pub mod designated;
pub mod partition;
pub mod ranks;
pub mod series;
pub mod tables;

pub use delta::{delta, delta_inv};
pub use designated::{
    enumerate_s1, enumerate_s2, parse_overline, pd_count, pdt_count, OverlinePartition, S2Triple,
};
pub use partition::{crank_distribution, enumerate_partitions, CrankTable, Partition};
pub use ranks::{
    classify, matching_classes, modified_rank, ndt_counts, ndt_residue, nmdt_counts, nmdt_residue,
    pdt_rank, phi, phi_inv, Class, RankValue, SignedCountTable,
};
pub use series::{LaurentPolySeries, Series, Sign};
