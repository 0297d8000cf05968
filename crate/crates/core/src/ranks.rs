//! The pdt-rank, its signed counts, the A/B classification with its five
//! bijections, and the modified pdt-rank.
//!
//! The pdt-rank of an overline designated partition is the crank of the beta
//! component of its split. When beta = (1) the rank is *exceptional*: the
//! crank convention at weight 1 makes the object count -1 toward rank 0 and
//! +1 toward each of ranks 1 and -1, so no single integer applies. The
//! modified rank repairs this by pairing the exceptional objects (the set B)
//! with an equinumerous set A of rank-0 objects via a tag- and
//! designation-shifting bijection, then assigning +1 on A and -1 on B.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::delta::delta;
use crate::designated::{for_each_s1, OverlinePartition};

/// Value of the pdt-rank.
///
/// `Exceptional` arises exactly when the beta component of the split is the
/// single-part partition (1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RankValue {
    Regular(i64),
    Exceptional,
}

impl fmt::Display for RankValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankValue::Regular(m) => write!(f, "{m}"),
            RankValue::Exceptional => write!(f, "X"),
        }
    }
}

/// The pdt-rank: crank of the beta component of the split, or `Exceptional`
/// when beta = (1).
pub fn pdt_rank(lam: &OverlinePartition) -> RankValue {
    let tr = delta(lam);
    let beta = tr.beta();
    if beta.weight() == 1 {
        RankValue::Exceptional
    } else {
        RankValue::Regular(beta.crank())
    }
}

/// Signed counts N_dt(m, n) for one weight.
///
/// Each regular object adds +1 at its rank; each exceptional object adds -1
/// at 0 and +1 at each of 1 and -1. The entries sum to `PD_t(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedCountTable {
    n: u32,
    counts: BTreeMap<i64, i64>,
}

impl SignedCountTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Map m -> N_dt(m, n); zero entries are absent.
    pub fn counts(&self) -> &BTreeMap<i64, i64> {
        &self.counts
    }

    pub fn count(&self, m: i64) -> i64 {
        self.counts.get(&m).copied().unwrap_or(0)
    }

    pub fn total(&self) -> i64 {
        self.counts.values().sum()
    }
}

/// Signed rank counts over S1(n).
pub fn ndt_counts(n: u32) -> SignedCountTable {
    let mut counts: BTreeMap<i64, i64> = BTreeMap::new();
    for_each_s1(n, |lam| match pdt_rank(lam) {
        RankValue::Regular(m) => {
            *counts.entry(m).or_insert(0) += 1;
        }
        RankValue::Exceptional => {
            *counts.entry(0).or_insert(0) -= 1;
            *counts.entry(1).or_insert(0) += 1;
            *counts.entry(-1).or_insert(0) += 1;
        }
    });
    counts.retain(|_, v| *v != 0);
    SignedCountTable { n, counts }
}

/// Sums the signed counts by rank residue: residue i accumulates
/// `sum over m = i (mod modulus) of N_dt(m, n)`.
pub fn ndt_residue(n: u32, modulus: u32) -> BTreeMap<u32, i64> {
    assert!(modulus >= 2, "modulus must be >= 2");
    let mut out: BTreeMap<u32, i64> = (0..modulus).map(|r| (r, 0)).collect();
    for (&m, &c) in ndt_counts(n).counts() {
        *out.get_mut(&(m.rem_euclid(modulus as i64) as u32)).unwrap() += c;
    }
    out
}

/// Membership in the five A-classes, the five B-classes, or neither.
///
/// The B-classes partition the set of objects whose split has beta = (1);
/// the A-classes are rank-0 objects placed in bijection with them. At most
/// one class matches any object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Class {
    A1,
    A2,
    A3,
    A4,
    A5,
    B1,
    B2,
    B3,
    B4,
    B5,
    Neither,
}

impl Class {
    pub fn is_a(self) -> bool {
        matches!(
            self,
            Class::A1 | Class::A2 | Class::A3 | Class::A4 | Class::A5
        )
    }

    pub fn is_b(self) -> bool {
        matches!(
            self,
            Class::B1 | Class::B2 | Class::B3 | Class::B4 | Class::B5
        )
    }

    /// Table label: `A1`..`B5`, or `-` for `Neither`.
    pub fn label(self) -> &'static str {
        match self {
            Class::A1 => "A1",
            Class::A2 => "A2",
            Class::A3 => "A3",
            Class::A4 => "A4",
            Class::A5 => "A5",
            Class::B1 => "B1",
            Class::B2 => "B2",
            Class::B3 => "B3",
            Class::B4 => "B4",
            Class::B5 => "B5",
            Class::Neither => "-",
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Every class whose defining conditions hold for `lam`. Disjointness of the
/// classes means the result has at most one entry; the verification suite
/// asserts this exhaustively rather than assuming it.
///
/// Conventions built in (each required for the counting identities to hold
/// at every weight):
/// - per-size conditions quantify over occurring sizes, excluding the sizes
///   a class constrains separately (1 and/or the tag);
/// - in A4 the tag must be the smallest size of multiplicity >= 2, so that
///   retagging to the unique multiplicity-1 size other than 1 is invertible;
/// - A5 requires weight >= 3: at weight 2 its would-be partner class B5 is
///   empty, so the single tagged part of 2 stays unclassified.
pub fn matching_classes(lam: &OverlinePartition) -> Vec<Class> {
    let f = lam.f();
    let g = lam.g();
    let k = lam.tag();
    let f1 = lam.multiplicity(1);
    let g_eq_f = f.iter().all(|(&s, &c)| g[&s] == c);
    let support_single = |exclude: &[u32]| {
        // no occurring size outside `exclude` has multiplicity 1
        f.iter().all(|(&s, &c)| exclude.contains(&s) || c != 1)
    };
    let g_eq_f_on = |exclude: &[u32]| f.iter().all(|(&s, &c)| exclude.contains(&s) || g[&s] == c);

    let mut out = Vec::new();

    // A-classes (all have rank 0)
    if g_eq_f && k != 1 && f1 >= 3 && support_single(&[1, k]) {
        out.push(Class::A1);
    }
    if g_eq_f && k == 1 && f1 >= 2 && support_single(&[1]) {
        out.push(Class::A2);
    }
    if f1 == 1
        && lam.designated_position(1) == 1
        && k != 1
        && lam.multiplicity(k) >= 2
        && lam.designated_position(k) == lam.multiplicity(k) - 1
        && g_eq_f_on(&[k])
        && support_single(&[1, k])
    {
        out.push(Class::A3);
    }
    if g_eq_f && f1 == 1 && k != 1 && lam.multiplicity(k) >= 2 {
        let lights = f.iter().filter(|&(&s, &c)| s != 1 && c == 1).count();
        let min_heavy = f.iter().find(|&(_, &c)| c >= 2).map(|(&s, _)| s);
        if lights == 1 && min_heavy == Some(k) {
            out.push(Class::A4);
        }
    }
    if k != 1 && g_eq_f && f.len() == 1 && lam.multiplicity(k) == 1 && lam.weight() >= 3 {
        out.push(Class::A5);
    }

    // B-classes (all have beta = (1))
    if k != 1
        && f1 >= 3
        && lam.designated_position(1) == f1 - 1
        && g_eq_f_on(&[1])
        && support_single(&[1, k])
    {
        out.push(Class::B1);
    }
    if k == 1
        && f1 >= 2
        && lam.designated_position(1) == f1 - 1
        && g_eq_f_on(&[1])
        && support_single(&[1])
    {
        out.push(Class::B2);
    }
    if f1 == 1 && k != 1 && g_eq_f && support_single(&[1]) {
        // multiplicity != 1 at every occurring size != 1, including the tag
        out.push(Class::B3);
    }
    if f1 == 1
        && k != 1
        && lam.multiplicity(k) == 1
        && g_eq_f
        && support_single(&[1, k])
        && f.keys().any(|&s| s != 1 && s != k)
    {
        out.push(Class::B4);
    }
    if f1 == 1 && k != 1 && lam.multiplicity(k) == 1 && g_eq_f && f.len() == 2 {
        out.push(Class::B5);
    }

    out
}

/// Classifies an overline designated partition into its A- or B-class, or
/// `Neither`. See [`matching_classes`] for the adopted conventions.
pub fn classify(lam: &OverlinePartition) -> Class {
    let matches = matching_classes(lam);
    debug_assert!(matches.len() <= 1, "classes overlap on {lam}: {matches:?}");
    matches.first().copied().unwrap_or(Class::Neither)
}

/// Error for the class bijection applied outside its domain.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassMapError {
    #[error("phi requires an A-class element, found {0}")]
    NotInA(Class),
    #[error("phi inverse requires a B-class element, found {0}")]
    NotInB(Class),
}

/// The class bijection from A(n) onto B(n): shifts the designation at size 1
/// down (A1, A2), shifts the designation at the tag up (A3), retags to the
/// unique multiplicity-1 size other than 1 (A4), or splits the single tagged
/// part n into (n-1) + 1 with the tag on n-1 (A5).
pub fn phi(lam: &OverlinePartition) -> Result<OverlinePartition, ClassMapError> {
    let class = classify(lam);
    let f = lam.f().clone();
    let mut g = lam.g().clone();
    let rebuilt = match class {
        Class::A1 | Class::A2 => {
            *g.get_mut(&1).unwrap() -= 1;
            OverlinePartition::new(f, g, lam.tag())
        }
        Class::A3 => {
            *g.get_mut(&lam.tag()).unwrap() += 1;
            OverlinePartition::new(f, g, lam.tag())
        }
        Class::A4 => {
            let j = *f
                .iter()
                .find(|&(&s, &c)| s != 1 && c == 1)
                .map(|(s, _)| s)
                .expect("A4 has a unique multiplicity-1 size other than 1");
            OverlinePartition::new(f, g, j)
        }
        Class::A5 => {
            let n = lam.weight() as u32;
            OverlinePartition::new(
                BTreeMap::from([(n - 1, 1), (1, 1)]),
                BTreeMap::from([(n - 1, 1), (1, 1)]),
                n - 1,
            )
        }
        other => return Err(ClassMapError::NotInA(other)),
    };
    Ok(rebuilt.expect("class image is well formed"))
}

/// Inverse of [`phi`], defined on the B-classes.
pub fn phi_inv(mu: &OverlinePartition) -> Result<OverlinePartition, ClassMapError> {
    let class = classify(mu);
    let f = mu.f().clone();
    let mut g = mu.g().clone();
    let rebuilt = match class {
        Class::B1 | Class::B2 => {
            *g.get_mut(&1).unwrap() += 1;
            OverlinePartition::new(f, g, mu.tag())
        }
        Class::B3 => {
            *g.get_mut(&mu.tag()).unwrap() -= 1;
            OverlinePartition::new(f, g, mu.tag())
        }
        Class::B4 => {
            let k = *f
                .iter()
                .find(|&(_, &c)| c >= 2)
                .map(|(s, _)| s)
                .expect("B4 has a size of multiplicity >= 2");
            OverlinePartition::new(f, g, k)
        }
        Class::B5 => {
            let n = mu.weight() as u32;
            OverlinePartition::new(BTreeMap::from([(n, 1)]), BTreeMap::from([(n, 1)]), n)
        }
        other => return Err(ClassMapError::NotInB(other)),
    };
    Ok(rebuilt.expect("class preimage is well formed"))
}

/// The modified pdt-rank: +1 on A, -1 on B, otherwise the (regular)
/// pdt-rank. Total on all of S1(n): outside A and B the split's beta is
/// never (1), so the rank is regular.
pub fn modified_rank(lam: &OverlinePartition) -> i64 {
    let class = classify(lam);
    if class.is_a() {
        return 1;
    }
    if class.is_b() {
        return -1;
    }
    match pdt_rank(lam) {
        RankValue::Regular(m) => m,
        RankValue::Exceptional => {
            unreachable!("beta = (1) exactly on the B-classes; classify returned {class}")
        }
    }
}

/// Plain (unsigned) counts of the modified rank over S1(n).
pub fn nmdt_counts(n: u32) -> BTreeMap<i64, i64> {
    let mut counts: BTreeMap<i64, i64> = BTreeMap::new();
    for_each_s1(n, |lam| {
        *counts.entry(modified_rank(lam)).or_insert(0) += 1;
    });
    counts
}

/// Counts of S1(n) by modified-rank residue.
pub fn nmdt_residue(n: u32, modulus: u32) -> BTreeMap<u32, i64> {
    assert!(modulus >= 2, "modulus must be >= 2");
    let mut out: BTreeMap<u32, i64> = (0..modulus).map(|r| (r, 0)).collect();
    for (&m, &c) in &nmdt_counts(n) {
        *out.get_mut(&(m.rem_euclid(modulus as i64) as u32)).unwrap() += c;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designated::parse_overline;

    fn rank_of(text: &str) -> RankValue {
        pdt_rank(&parse_overline(text).unwrap())
    }

    fn class_of(text: &str) -> Class {
        classify(&parse_overline(text).unwrap())
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_of("4'+~1'"), RankValue::Regular(4));
        assert_eq!(rank_of("~4'+1'"), RankValue::Exceptional);
        assert_eq!(rank_of("~5'"), RankValue::Regular(0));
    }

    #[test]
    fn ndt_examples() {
        let t5 = ndt_counts(5);
        assert_eq!(t5.count(0), 4);
        assert_eq!(t5.count(1), 4);
        assert_eq!(t5.count(-1), 4);
        assert_eq!(t5.count(4), 1);
        assert_eq!(t5.total(), 24);

        let t2 = ndt_counts(2);
        assert_eq!(t2.counts(), &BTreeMap::from([(0, 1), (1, 1), (-1, 1)]));
    }

    #[test]
    fn residue_examples() {
        assert_eq!(ndt_residue(5, 3), BTreeMap::from([(0, 8), (1, 8), (2, 8)]));
        assert_eq!(ndt_residue(2, 3), BTreeMap::from([(0, 1), (1, 1), (2, 1)]));
        assert_eq!(ndt_residue(1, 3), BTreeMap::from([(0, 1), (1, 0), (2, 0)]));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(class_of("~2'+2+1'"), Class::A3);
        assert_eq!(class_of("2+~2'+1'"), Class::B3);
        assert_eq!(class_of("~5'"), Class::A5);
        assert_eq!(class_of("3'+~2'"), Class::Neither);
        assert_eq!(class_of("~2'+1+1+1'"), Class::A1);
        assert_eq!(class_of("~2'+1+1'+1"), Class::B1);
        assert_eq!(class_of("1+1+1+1+~1'"), Class::A2);
        assert_eq!(class_of("1+1+1+~1'+1"), Class::B2);
        assert_eq!(class_of("~4'+1'"), Class::B5);
        // weight-2 degeneracy: the tagged single 2 stays unclassified
        assert_eq!(class_of("~2'"), Class::Neither);
        assert_eq!(class_of("1+~1'"), Class::A2);
        assert_eq!(class_of("~1'+1"), Class::B2);
        assert_eq!(class_of("~1'"), Class::Neither);
    }

    #[test]
    fn classify_a4_b4() {
        // smallest A4/B4 weight: f = {1:1, 2:2, 3:1}, designations = multiplicities
        assert_eq!(class_of("3'+2+2'+~1'"), Class::Neither); // tag on 1
        assert_eq!(class_of("3'+2+~2'+1'"), Class::A4);
        assert_eq!(class_of("~3'+2+2'+1'"), Class::B4);
        // two heavy sizes: the A4 tag must sit on the smallest one
        assert_eq!(class_of("4'+3+3'+2+~2'+1'"), Class::A4);
        assert_eq!(class_of("4'+3+~3'+2+2'+1'"), Class::Neither);
        assert_eq!(class_of("~4'+3+3'+2+2'+1'"), Class::B4);
    }

    #[test]
    fn phi_examples() {
        let cases = [
            ("~5'", "~4'+1'"),
            ("~2'+2+1'", "2+~2'+1'"),
            ("1+~1'", "~1'+1"),
            ("~2'+1+1+1'", "~2'+1+1'+1"),
            ("3'+2+~2'+1'", "~3'+2+2'+1'"),
            ("4'+3+3'+2+~2'+1'", "~4'+3+3'+2+2'+1'"),
        ];
        for (a, b) in cases {
            let lam = parse_overline(a).unwrap();
            let mu = parse_overline(b).unwrap();
            assert_eq!(phi(&lam).unwrap(), mu, "phi({a})");
            assert_eq!(phi_inv(&mu).unwrap(), lam, "phi_inv({b})");
        }
        let err = phi(&parse_overline("3'+~2'").unwrap());
        assert_eq!(err, Err(ClassMapError::NotInA(Class::Neither)));
        let err = phi_inv(&parse_overline("~5'").unwrap());
        assert_eq!(err, Err(ClassMapError::NotInB(Class::A5)));
    }

    #[test]
    fn modified_rank_examples() {
        let m = |t: &str| modified_rank(&parse_overline(t).unwrap());
        assert_eq!(m("~3'+2'"), 2);
        assert_eq!(m("~4'+1'"), -1);
        assert_eq!(m("1+1+1+1+~1'"), 1);
        // documented deviation row: neither A nor B, so the plain rank -2
        assert_eq!(m("2'+~1'+1+1"), -2);
    }

    #[test]
    fn nmdt_examples() {
        assert_eq!(nmdt_residue(5, 3), BTreeMap::from([(0, 8), (1, 8), (2, 8)]));
        assert_eq!(nmdt_counts(1), BTreeMap::from([(0, 1)]));
        assert_eq!(nmdt_counts(2), BTreeMap::from([(0, 1), (1, 1), (-1, 1)]));
    }
}
