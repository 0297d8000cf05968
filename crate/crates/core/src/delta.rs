//! The splitting bijection between S1(n) and S2(n).
//!
//! Forward direction, per size i in the support of f:
//! - i = k, or g_i >= 2:      x_i = g_i, y_i = f_i - g_i;
//! - i != k and g_i = 1:      x_i = 0,   y_i = f_i.
//!
//! Inverse, per size i in the union of supports of x and y:
//! - i = t, or x_i >= 2:      f_i = x_i + y_i, g_i = x_i;
//! - x_i = 0 and y_i >= 1:    f_i = y_i,       g_i = 1.
//!
//! Both directions preserve weight size by size (`x_i + y_i = f_i`), and the
//! case dispatch is exhaustive and mutually exclusive on valid inputs.

use std::collections::BTreeMap;

use crate::designated::{OverlinePartition, S2Triple};
use crate::partition::Partition;

/// Splits an overline designated partition into `(alpha, beta; t)`.
pub fn delta(lam: &OverlinePartition) -> S2Triple {
    let k = lam.tag();
    let mut x: BTreeMap<u32, u32> = BTreeMap::new();
    let mut y: BTreeMap<u32, u32> = BTreeMap::new();
    for (&size, &count) in lam.f() {
        let pos = lam.designated_position(size);
        if size == k || pos >= 2 {
            x.insert(size, pos);
            if count > pos {
                y.insert(size, count - pos);
            }
        } else {
            debug_assert!(size != k && pos == 1);
            y.insert(size, count);
        }
    }
    let alpha = Partition::from_mult(x).expect("positive multiplicities");
    let beta = Partition::from_mult(y).expect("positive multiplicities");
    S2Triple::new(alpha, beta, k).expect("image satisfies the triple invariants")
}

/// Reassembles an overline designated partition from `(alpha, beta; t)`.
pub fn delta_inv(tr: &S2Triple) -> OverlinePartition {
    let t = tr.tag();
    let mut f: BTreeMap<u32, u32> = BTreeMap::new();
    let mut g: BTreeMap<u32, u32> = BTreeMap::new();
    let sizes: std::collections::BTreeSet<u32> = tr
        .alpha()
        .mult()
        .keys()
        .chain(tr.beta().mult().keys())
        .copied()
        .collect();
    for size in sizes {
        let xi = tr.alpha().multiplicity(size);
        let yi = tr.beta().multiplicity(size);
        if size == t || xi >= 2 {
            f.insert(size, xi + yi);
            g.insert(size, xi);
        } else {
            debug_assert!(xi == 0 && yi >= 1);
            f.insert(size, yi);
            g.insert(size, 1);
        }
    }
    OverlinePartition::new(f, g, t).expect("preimage satisfies the overline invariants")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designated::{enumerate_s1, enumerate_s2, parse_overline};
    use std::collections::BTreeMap;

    fn triple(alpha: &[u32], beta: &[u32], t: u32) -> S2Triple {
        S2Triple::new(
            Partition::from_parts(alpha).unwrap(),
            Partition::from_parts(beta).unwrap(),
            t,
        )
        .unwrap()
    }

    #[test]
    fn worked_example() {
        // (1^1 2^2 3^3 5^2, g = (1,1,2,-,1), k = 2), weight 24
        let lam = OverlinePartition::new(
            BTreeMap::from([(1, 1), (2, 2), (3, 3), (5, 2)]),
            BTreeMap::from([(1, 1), (2, 1), (3, 2), (5, 1)]),
            2,
        )
        .unwrap();
        let tr = delta(&lam);
        assert_eq!(tr, triple(&[3, 3, 2], &[5, 5, 3, 2, 1], 2));
        assert_eq!(delta_inv(&tr), lam);
    }

    #[test]
    fn table_examples() {
        let lam = parse_overline("~2'+2+1'").unwrap();
        assert_eq!(delta(&lam), triple(&[2], &[2, 1], 2));

        let lam = parse_overline("~1'").unwrap();
        let tr = delta(&lam);
        assert_eq!(tr.alpha().parts(), vec![1]);
        assert!(tr.beta().is_empty());
        assert_eq!(tr.tag(), 1);

        // inverse examples
        let back = delta_inv(&triple(&[1], &[], 1));
        assert_eq!(back.to_string(), "~1'");
        let back = delta_inv(&triple(&[2, 2], &[1], 2));
        assert_eq!(back.to_string(), "2+~2'+1'");
    }

    #[test]
    fn round_trip_and_image_totality() {
        for n in 1..=12u32 {
            let s1 = enumerate_s1(n);
            let s2 = enumerate_s2(n);
            assert_eq!(s1.len(), s2.len(), "cardinality at n={n}");
            let mut images: Vec<S2Triple> = Vec::with_capacity(s1.len());
            for lam in &s1 {
                let tr = delta(lam);
                assert_eq!(tr.weight(), lam.weight(), "weight at n={n}");
                for (&size, &fi) in lam.f() {
                    assert_eq!(
                        tr.alpha().multiplicity(size) + tr.beta().multiplicity(size),
                        fi,
                        "x+y=f at n={n}, size {size}"
                    );
                }
                assert_eq!(&delta_inv(&tr), lam, "roundtrip at n={n}");
                images.push(tr);
            }
            images.sort();
            let mut expected = s2.clone();
            expected.sort();
            assert_eq!(images, expected, "image totality at n={n}");
            for tr in &s2 {
                assert_eq!(&delta(&delta_inv(tr)), tr, "inverse roundtrip at n={n}");
            }
        }
    }
}
