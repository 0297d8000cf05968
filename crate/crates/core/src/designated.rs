//! Partitions with overline designated summands.
//!
//! An element of S1(n) is a triple `(f, g, k)`: an ordinary partition of n in
//! multiplicity form `f`, a choice `g` of one designated copy per occurring
//! size (`1 <= g_i <= f_i`, counted left to right within the run of equal
//! parts), and a tagged size `k` with `f_k >= 1`. `PD_t(n) = |S1(n)|`.
//!
//! An element of S2(n) is a triple `(alpha, beta; t)` of ordinary partitions
//! with `x_t >= 1` and `x_i != 1` for every other size, where `x` is the
//! multiplicity map of `alpha`, and total weight n. The two sets are
//! exchanged by the bijection in [`mod@crate::delta`].

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{for_each_partition, Partition};

/// A partition of n >= 1 with overline designated summands.
///
/// Invariants: `f` and `g` have equal support, `1 <= g_i <= f_i` on it, and
/// the tagged size `k` occurs (`f_k >= 1`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "OverlineJson", into = "OverlineJson")]
pub struct OverlinePartition {
    f: BTreeMap<u32, u32>,
    g: BTreeMap<u32, u32>,
    k: u32,
}

#[derive(Serialize, Deserialize)]
struct OverlineJson {
    n: u64,
    f: BTreeMap<u32, u32>,
    g: BTreeMap<u32, u32>,
    k: u32,
}

impl From<OverlinePartition> for OverlineJson {
    fn from(p: OverlinePartition) -> Self {
        OverlineJson {
            n: p.weight(),
            f: p.f,
            g: p.g,
            k: p.k,
        }
    }
}

impl TryFrom<OverlineJson> for OverlinePartition {
    type Error = InvalidOverline;
    fn try_from(j: OverlineJson) -> Result<Self, InvalidOverline> {
        let p = OverlinePartition::new(j.f, j.g, j.k)?;
        if p.weight() != j.n {
            return Err(InvalidOverline::WeightMismatch {
                stated: j.n,
                actual: p.weight(),
            });
        }
        Ok(p)
    }
}

/// Rejection reasons for malformed `(f, g, k)` triples.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvalidOverline {
    #[error("the underlying partition must be nonempty (n >= 1)")]
    Empty,
    #[error("part size 0 is not allowed")]
    ZeroPart,
    #[error("multiplicity 0 stored for size {0}")]
    ZeroMultiplicity(u32),
    #[error("size {0} occurs but carries no designation")]
    MissingDesignation(u32),
    #[error("designation for absent size {0}")]
    DesignationWithoutParts(u32),
    #[error("designated position {position} out of range 1..={multiplicity} for size {size}")]
    DesignationOutOfRange {
        size: u32,
        position: u32,
        multiplicity: u32,
    },
    #[error("tagged size {0} does not occur")]
    TagAbsent(u32),
    #[error("stated weight {stated} differs from actual weight {actual}")]
    WeightMismatch { stated: u64, actual: u64 },
}

impl OverlinePartition {
    /// Validates and builds `(f, g, k)`.
    pub fn new(
        f: BTreeMap<u32, u32>,
        g: BTreeMap<u32, u32>,
        k: u32,
    ) -> Result<Self, InvalidOverline> {
        if f.is_empty() {
            return Err(InvalidOverline::Empty);
        }
        for (&size, &count) in &f {
            if size == 0 {
                return Err(InvalidOverline::ZeroPart);
            }
            if count == 0 {
                return Err(InvalidOverline::ZeroMultiplicity(size));
            }
            match g.get(&size) {
                None => return Err(InvalidOverline::MissingDesignation(size)),
                Some(&pos) if pos == 0 || pos > count => {
                    return Err(InvalidOverline::DesignationOutOfRange {
                        size,
                        position: pos,
                        multiplicity: count,
                    })
                }
                Some(_) => {}
            }
        }
        for &size in g.keys() {
            if !f.contains_key(&size) {
                return Err(InvalidOverline::DesignationWithoutParts(size));
            }
        }
        if !f.contains_key(&k) {
            return Err(InvalidOverline::TagAbsent(k));
        }
        Ok(OverlinePartition { f, g, k })
    }

    /// Size -> multiplicity map of the underlying partition.
    pub fn f(&self) -> &BTreeMap<u32, u32> {
        &self.f
    }

    /// Size -> designated position map (same support as `f`).
    pub fn g(&self) -> &BTreeMap<u32, u32> {
        &self.g
    }

    /// The tagged size.
    pub fn tag(&self) -> u32 {
        self.k
    }

    /// Multiplicity of `size` (0 when absent).
    pub fn multiplicity(&self, size: u32) -> u32 {
        self.f.get(&size).copied().unwrap_or(0)
    }

    /// Designated position at `size` (0 when absent).
    pub fn designated_position(&self, size: u32) -> u32 {
        self.g.get(&size).copied().unwrap_or(0)
    }

    /// Weight of the underlying partition.
    pub fn weight(&self) -> u64 {
        self.f.iter().map(|(&s, &c)| s as u64 * c as u64).sum()
    }

    /// The underlying partition, forgetting designations and the tag.
    pub fn shape(&self) -> Partition {
        Partition::from_mult(self.f.clone()).expect("validated multiplicities")
    }
}

impl fmt::Display for OverlinePartition {
    /// Canonical text form: parts descending, copies of equal size in
    /// positions 1..f_i left to right, the designated copy suffixed `'`,
    /// and that copy prefixed `~` at the tagged size. Example: `~2'+2+1'`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&size, &count) in self.f.iter().rev() {
            let designated = self.g[&size];
            for position in 1..=count {
                if !first {
                    write!(f, "+")?;
                }
                first = false;
                if position == designated {
                    if size == self.k {
                        write!(f, "~")?;
                    }
                    write!(f, "{size}'")?;
                } else {
                    write!(f, "{size}")?;
                }
            }
        }
        Ok(())
    }
}

/// Parse error for the overline text form.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseOverlineError {
    #[error("empty input")]
    Empty,
    #[error("invalid part token {0:?}")]
    BadToken(String),
    #[error("parts must be weakly decreasing by size: {0} after {1}")]
    NotDescending(u32, u32),
    #[error("two designated copies of size {0}")]
    DoublePrime(u32),
    #[error("`~` may only prefix a designated (primed) part")]
    TildeWithoutPrime,
    #[error("exactly one `~` is required, found {0}")]
    TildeCount(usize),
    #[error(transparent)]
    Invalid(#[from] InvalidOverline),
}

/// Parses the canonical text form produced by [`OverlinePartition`]'s
/// `Display`: `part ("+" part)*` with `part := "~"? digits "'"?`, parts
/// weakly decreasing, exactly one `~` (on a primed part), at most one `'`
/// per size, and every occurring size designated exactly once.
pub fn parse_overline(text: &str) -> Result<OverlinePartition, ParseOverlineError> {
    if text.is_empty() {
        return Err(ParseOverlineError::Empty);
    }
    let mut f: BTreeMap<u32, u32> = BTreeMap::new();
    let mut g: BTreeMap<u32, u32> = BTreeMap::new();
    let mut tag: Option<u32> = None;
    let mut tildes = 0usize;
    let mut prev: Option<u32> = None;
    for tok in text.split('+') {
        let mut rest = tok;
        let tilde = rest.starts_with('~');
        if tilde {
            rest = &rest[1..];
        }
        let prime = rest.ends_with('\'');
        if prime {
            rest = &rest[..rest.len() - 1];
        }
        if tilde && !prime {
            return Err(ParseOverlineError::TildeWithoutPrime);
        }
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseOverlineError::BadToken(tok.to_string()));
        }
        let size: u32 = rest
            .parse()
            .map_err(|_| ParseOverlineError::BadToken(tok.to_string()))?;
        if size == 0 {
            return Err(ParseOverlineError::BadToken(tok.to_string()));
        }
        if let Some(p) = prev {
            if size > p {
                return Err(ParseOverlineError::NotDescending(size, p));
            }
        }
        prev = Some(size);
        let count = f.entry(size).or_insert(0);
        *count += 1;
        if prime {
            if g.contains_key(&size) {
                return Err(ParseOverlineError::DoublePrime(size));
            }
            g.insert(size, *count);
        }
        if tilde {
            tildes += 1;
            tag = Some(size);
        }
    }
    if tildes != 1 {
        return Err(ParseOverlineError::TildeCount(tildes));
    }
    // missing designations surface via the invariant check
    let k = tag.expect("exactly one tilde");
    Ok(OverlinePartition::new(f, g, k)?)
}

/// Visits S1(n) in the deterministic enumeration order: underlying
/// partitions in [`for_each_partition`] order, then designation vectors in
/// lexicographic order (coordinates by ascending size), then the tag
/// ascending. For n = 0 nothing is visited.
pub fn for_each_s1<F: FnMut(&OverlinePartition)>(n: u32, mut visit: F) {
    for_each_partition(n, |parts| {
        if parts.is_empty() {
            return;
        }
        let mut f: BTreeMap<u32, u32> = BTreeMap::new();
        for &p in parts {
            *f.entry(p).or_insert(0) += 1;
        }
        let sizes: Vec<u32> = f.keys().copied().collect();
        let mults: Vec<u32> = sizes.iter().map(|s| f[s]).collect();
        let mut gvec: Vec<u32> = vec![1; sizes.len()];
        loop {
            for &k in &sizes {
                let g: BTreeMap<u32, u32> =
                    sizes.iter().copied().zip(gvec.iter().copied()).collect();
                let lam = OverlinePartition { f: f.clone(), g, k };
                visit(&lam);
            }
            // advance the designation odometer (rightmost coordinate fastest)
            let mut idx = sizes.len();
            loop {
                if idx == 0 {
                    return;
                }
                idx -= 1;
                if gvec[idx] < mults[idx] {
                    gvec[idx] += 1;
                    break;
                }
                gvec[idx] = 1;
            }
        }
    });
}

/// All of S1(n) in the documented deterministic order.
pub fn enumerate_s1(n: u32) -> Vec<OverlinePartition> {
    let mut out = Vec::new();
    for_each_s1(n, |lam| out.push(lam.clone()));
    out
}

/// An element of S2(n): ordinary partitions `alpha` and `beta` plus a tag
/// `t` such that `alpha` has multiplicity >= 1 at `t` and multiplicity != 1
/// at every other occurring size.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct S2Triple {
    alpha: Partition,
    beta: Partition,
    t: u32,
}

/// Rejection reasons for malformed `(alpha, beta; t)` triples.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvalidTriple {
    #[error("alpha must contain the tagged size {0}")]
    TagAbsent(u32),
    #[error("alpha has multiplicity 1 at untagged size {0}")]
    UnitMultiplicityOffTag(u32),
}

impl S2Triple {
    pub fn new(alpha: Partition, beta: Partition, t: u32) -> Result<Self, InvalidTriple> {
        if alpha.multiplicity(t) == 0 {
            return Err(InvalidTriple::TagAbsent(t));
        }
        for (&size, &count) in alpha.mult() {
            if size != t && count == 1 {
                return Err(InvalidTriple::UnitMultiplicityOffTag(size));
            }
        }
        Ok(S2Triple { alpha, beta, t })
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn tag(&self) -> u32 {
        self.t
    }

    pub fn weight(&self) -> u64 {
        self.alpha.weight() + self.beta.weight()
    }
}

impl fmt::Display for S2Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={}, beta={}, t={}", self.alpha, self.beta, self.t)
    }
}

/// Visits S2(n) in the deterministic enumeration order: weight of alpha
/// ascending, alpha in partition order, tag ascending, beta in partition
/// order.
pub fn for_each_s2<F: FnMut(&S2Triple)>(n: u32, mut visit: F) {
    for alpha_weight in 1..=n {
        for_each_partition(alpha_weight, |aparts| {
            let alpha = Partition::from_parts(aparts).expect("positive parts");
            let unit_sizes: Vec<u32> = alpha
                .mult()
                .iter()
                .filter(|&(_, &c)| c == 1)
                .map(|(&s, _)| s)
                .collect();
            let tags: Vec<u32> = match unit_sizes.len() {
                0 => alpha.mult().keys().copied().collect(),
                1 => unit_sizes,
                _ => return,
            };
            for &t in &tags {
                for_each_partition(n - alpha_weight, |bparts| {
                    let beta = Partition::from_parts(bparts).expect("positive parts");
                    let triple =
                        S2Triple::new(alpha.clone(), beta, t).expect("tags chosen to be valid");
                    visit(&triple);
                });
            }
        });
    }
}

/// All of S2(n) in the documented deterministic order.
pub fn enumerate_s2(n: u32) -> Vec<S2Triple> {
    let mut out = Vec::new();
    for_each_s2(n, |tr| out.push(tr.clone()));
    out
}

/// `PD(n)`: partitions of n with one designated copy per occurring size.
/// For each partition the designation choices multiply to `prod f_i`;
/// `PD(0) = 1` by the empty-partition convention. Panics if the count
/// exceeds u64 (far beyond enumerable weights).
pub fn pd_count(n: u32) -> u64 {
    let mut total = 0u64;
    for_each_partition(n, |parts| {
        let mut f: BTreeMap<u32, u32> = BTreeMap::new();
        for &p in parts {
            *f.entry(p).or_insert(0) += 1;
        }
        let choices = f
            .values()
            .try_fold(1u64, |acc, &c| acc.checked_mul(c as u64))
            .expect("designation count exceeds u64");
        total = total.checked_add(choices).expect("count exceeds u64");
    });
    total
}

/// `PD_t(n) = |S1(n)|`: designation choices times tag choices, summed over
/// partitions of n. `PD_t(0) = 0` (no tag can exist). Panics if the count
/// exceeds u64.
pub fn pdt_count(n: u32) -> u64 {
    let mut total = 0u64;
    for_each_partition(n, |parts| {
        if parts.is_empty() {
            return;
        }
        let mut f: BTreeMap<u32, u32> = BTreeMap::new();
        for &p in parts {
            *f.entry(p).or_insert(0) += 1;
        }
        let choices = f
            .values()
            .try_fold(1u64, |acc, &c| acc.checked_mul(c as u64))
            .and_then(|c| c.checked_mul(f.len() as u64))
            .expect("tagged count exceeds u64");
        total = total.checked_add(choices).expect("count exceeds u64");
    });
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ov(f: &[(u32, u32)], g: &[(u32, u32)], k: u32) -> OverlinePartition {
        OverlinePartition::new(f.iter().copied().collect(), g.iter().copied().collect(), k).unwrap()
    }

    #[test]
    fn s1_counts() {
        assert_eq!(enumerate_s1(5).len(), 24);
        assert_eq!(enumerate_s1(2).len(), 3);
        assert_eq!(enumerate_s1(0).len(), 0);
        let one = enumerate_s1(1);
        assert_eq!(one, vec![ov(&[(1, 1)], &[(1, 1)], 1)]);
    }

    #[test]
    fn s1_no_duplicates() {
        for n in 1..=10 {
            let all = enumerate_s1(n);
            let set: std::collections::BTreeSet<_> = all.iter().cloned().collect();
            assert_eq!(all.len(), set.len(), "duplicates at n={n}");
            for lam in &all {
                assert_eq!(lam.weight(), n as u64);
            }
        }
    }

    #[test]
    fn s2_counts() {
        assert_eq!(enumerate_s2(5).len(), 24);
        let one = enumerate_s2(1);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].alpha().parts(), vec![1]);
        assert!(one[0].beta().is_empty());
        assert_eq!(one[0].tag(), 1);
    }

    #[test]
    fn s2_contains_worked_example() {
        // ((2^1 3^2), (1 2 3 5 5); 2): alpha weighs 8, beta 16, the triple 24
        let alpha = Partition::from_parts(&[3, 3, 2]).unwrap();
        let beta = Partition::from_parts(&[5, 5, 3, 2, 1]).unwrap();
        let target = S2Triple::new(alpha, beta, 2).unwrap();
        assert!(enumerate_s2(24).contains(&target));
    }

    #[test]
    fn pd_examples() {
        assert_eq!(pd_count(0), 1);
        assert_eq!(pd_count(2), 3);
        assert_eq!(pd_count(5), 15);
    }

    #[test]
    fn pdt_examples() {
        assert_eq!(pdt_count(0), 0);
        assert_eq!(pdt_count(4), 13);
        assert_eq!(pdt_count(5), 24);
    }

    #[test]
    fn pdt_equals_enumeration_and_product_formula() {
        for n in 0..=14u32 {
            assert_eq!(pdt_count(n), enumerate_s1(n).len() as u64, "n={n}");
        }
    }

    #[test]
    fn format_examples() {
        assert_eq!(
            ov(&[(1, 1), (2, 2)], &[(1, 1), (2, 1)], 2).to_string(),
            "~2'+2+1'"
        );
        assert_eq!(ov(&[(5, 1)], &[(5, 1)], 5).to_string(), "~5'");
        assert_eq!(
            ov(&[(1, 2), (3, 1)], &[(1, 2), (3, 1)], 3).to_string(),
            "~3'+1+1'"
        );
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_overline("~1'").unwrap(), ov(&[(1, 1)], &[(1, 1)], 1));
        assert_eq!(
            parse_overline("~2'+2+1'").unwrap(),
            ov(&[(1, 1), (2, 2)], &[(1, 1), (2, 1)], 2)
        );
        // the encoding (1^2 3^1, 2, 0, 1; 3): designated 1-copy in position 2
        assert_eq!(
            parse_overline("~3'+1+1'").unwrap(),
            ov(&[(1, 2), (3, 1)], &[(1, 2), (3, 1)], 3)
        );
    }

    #[test]
    fn parse_rejections() {
        assert!(matches!(parse_overline(""), Err(ParseOverlineError::Empty)));
        assert!(matches!(
            parse_overline("2'+2'"),
            Err(ParseOverlineError::DoublePrime(2))
        ));
        assert!(matches!(
            parse_overline("1'+~2'"),
            Err(ParseOverlineError::NotDescending(2, 1))
        ));
        assert!(matches!(
            parse_overline("~2+1'"),
            Err(ParseOverlineError::TildeWithoutPrime)
        ));
        assert!(matches!(
            parse_overline("2'+1'"),
            Err(ParseOverlineError::TildeCount(0))
        ));
        assert!(matches!(
            parse_overline("~2'+~1'"),
            Err(ParseOverlineError::TildeCount(2))
        ));
        // size 2 occurs with no designated copy
        assert!(matches!(
            parse_overline("2+~1'"),
            Err(ParseOverlineError::Invalid(
                InvalidOverline::MissingDesignation(2)
            ))
        ));
        assert!(matches!(
            parse_overline("~0'"),
            Err(ParseOverlineError::BadToken(_))
        ));
        assert!(matches!(
            parse_overline("2'+ 1"),
            Err(ParseOverlineError::BadToken(_))
        ));
    }

    #[test]
    fn round_trip_small() {
        for n in 1..=9u32 {
            for lam in enumerate_s1(n) {
                let text = lam.to_string();
                assert_eq!(parse_overline(&text).unwrap(), lam, "text {text}");
            }
        }
    }

    #[test]
    fn invariants_rejected() {
        let err = OverlinePartition::new(BTreeMap::from([(2, 1)]), BTreeMap::from([(2, 2)]), 2);
        assert_eq!(
            err,
            Err(InvalidOverline::DesignationOutOfRange {
                size: 2,
                position: 2,
                multiplicity: 1
            })
        );
        let err = OverlinePartition::new(BTreeMap::from([(2, 1)]), BTreeMap::from([(2, 1)]), 3);
        assert_eq!(err, Err(InvalidOverline::TagAbsent(3)));
        let err = OverlinePartition::new(BTreeMap::new(), BTreeMap::new(), 1);
        assert_eq!(err, Err(InvalidOverline::Empty));
    }

    #[test]
    fn triple_invariants_rejected() {
        let alpha = Partition::from_parts(&[2, 1]).unwrap();
        let beta = Partition::empty();
        assert_eq!(
            S2Triple::new(alpha.clone(), beta.clone(), 2),
            Err(InvalidTriple::UnitMultiplicityOffTag(1))
        );
        assert_eq!(
            S2Triple::new(alpha, beta, 3),
            Err(InvalidTriple::TagAbsent(3))
        );
    }

    #[test]
    fn json_form() {
        let lam = ov(&[(1, 1), (2, 2)], &[(1, 1), (2, 1)], 2);
        let js = serde_json::to_string(&lam).unwrap();
        assert_eq!(js, r#"{"n":5,"f":{"1":1,"2":2},"g":{"1":1,"2":1},"k":2}"#);
        let back: OverlinePartition = serde_json::from_str(&js).unwrap();
        assert_eq!(back, lam);
        // stated weight must match
        assert!(serde_json::from_str::<OverlinePartition>(
            r#"{"n":4,"f":{"1":1,"2":2},"g":{"1":1,"2":1},"k":2}"#
        )
        .is_err());
    }
}
