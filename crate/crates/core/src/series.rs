//! Truncated formal power series in q with exact integer coefficients, and
//! the specific products, sums, and identities the verification suite needs.
//!
//! A [`Series`] stores coefficients for q^0..q^N where N is its precision.
//! Arithmetic is exact; binary operations truncate to the smaller precision
//! and never extend it. There is no floating point anywhere, and the halves
//! appearing in some source identities are cleared by verifying the doubled
//! form over the integers.
//!
//! The cube-root-of-unity evaluation behind the 3-dissection is never
//! materialized: `(zq;q)(z^{-1}q;q)` at a primitive cube root collapses to
//! `(q^3;q^3)/(q;q)` via `(1-x)(1-xz)(1-xz^2) = 1-x^3`, and the linear
//! independence of `{1, z}` becomes two integer-series statements — see
//! [`dissection_g`] and the bridge identity it feeds.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Sign of the shifted variable in a q-Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// A truncated formal power series with exact integer coefficients.
///
/// Coefficients are stored densely for exponents 0..=precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

/// `invert` requires constant term +1 or -1 so the inverse stays integral.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot invert a series whose constant term is {0}, need +1 or -1")]
pub struct NonUnitConstantTerm(pub BigInt);

impl Series {
    /// The zero series at the given precision.
    pub fn zero(precision: usize) -> Self {
        Series {
            coeffs: vec![BigInt::zero(); precision + 1],
        }
    }

    /// The constant series 1 at the given precision.
    pub fn one(precision: usize) -> Self {
        let mut s = Series::zero(precision);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Builds a series from coefficients for q^0..q^N (N = len - 1).
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series stores at least the constant term"
        );
        Series { coeffs }
    }

    /// Convenience constructor from small integer coefficients.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Series::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Largest exponent with a stored coefficient.
    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of q^n; panics beyond the precision.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    /// All coefficients, exponent 0 first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Copy truncated to a smaller (or equal) precision.
    pub fn truncate(&self, precision: usize) -> Series {
        assert!(
            precision <= self.precision(),
            "truncate cannot extend precision"
        );
        Series {
            coeffs: self.coeffs[..=precision].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn add_impl(&self, other: &Series, negate_other: bool) -> Series {
        let precision = self.precision().min(other.precision());
        let mut out = Series::zero(precision);
        for n in 0..=precision {
            out.coeffs[n] = if negate_other {
                &self.coeffs[n] - &other.coeffs[n]
            } else {
                &self.coeffs[n] + &other.coeffs[n]
            };
        }
        out
    }

    /// Product truncated to the smaller precision.
    pub fn mul(&self, other: &Series) -> Series {
        let precision = self.precision().min(other.precision());
        let mut out = Series::zero(precision);
        for (i, a) in self.coeffs.iter().enumerate().take(precision + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(precision + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// Multiplies in place by the sparse binomial `1 + c * q^exponent`.
    fn mul_binomial(&mut self, exponent: usize, c: &BigInt) {
        if exponent == 0 {
            panic!("binomial factor must have positive order");
        }
        let precision = self.precision();
        for i in (exponent..=precision).rev() {
            let add = &self.coeffs[i - exponent] * c;
            self.coeffs[i] += add;
        }
    }

    /// Multiplicative inverse to the same precision. The constant term must
    /// be +1 or -1; everything inverted here is a unital product.
    pub fn invert(&self) -> Result<Series, NonUnitConstantTerm> {
        let c0 = &self.coeffs[0];
        if !c0.is_one() && *c0 != BigInt::from(-1) {
            return Err(NonUnitConstantTerm(c0.clone()));
        }
        let precision = self.precision();
        let mut out = Series::zero(precision);
        out.coeffs[0] = c0.clone();
        for n in 1..=precision {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !out.coeffs[n - k].is_zero() {
                    acc += &self.coeffs[k] * &out.coeffs[n - k];
                }
            }
            out.coeffs[n] = -(c0 * acc);
        }
        Ok(out)
    }

    /// Substitutes q -> q^m, truncated to the original precision.
    pub fn substitute_pow(&self, m: usize) -> Series {
        assert!(m >= 1, "substitution exponent must be positive");
        let precision = self.precision();
        let mut out = Series::zero(precision);
        for (j, c) in self.coeffs.iter().enumerate() {
            match j.checked_mul(m) {
                Some(e) if e <= precision => out.coeffs[e] = c.clone(),
                _ => break,
            }
        }
        out
    }

    /// Nonnegative integer power by repeated squaring.
    pub fn pow(&self, exponent: u32) -> Series {
        let mut result = Series::one(self.precision());
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.add_impl(rhs, false)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.add_impl(rhs, true)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// `(q^m; q^m)_inf` truncated: the product of `1 - q^(m*j)` over all factors
/// of exponent <= precision.
pub fn eta_like(m: usize, precision: usize) -> Series {
    assert!(m >= 1);
    let mut out = Series::one(precision);
    let minus_one = BigInt::from(-1);
    let mut e = m;
    while e <= precision {
        out.mul_binomial(e, &minus_one);
        e += m;
    }
    out
}

/// `(sign * q^j; q^m)_inf` truncated: the product of
/// `1 - sign * q^(j + (n-1) m)` for n >= 1.
pub fn pochhammer(j: usize, m: usize, sign: Sign, precision: usize) -> Series {
    assert!(j >= 1 && m >= 1);
    let c = match sign {
        Sign::Plus => BigInt::from(-1),
        Sign::Minus => BigInt::one(),
    };
    let mut out = Series::one(precision);
    let mut e = j;
    while e <= precision {
        out.mul_binomial(e, &c);
        e += m;
    }
    out
}

/// The Lambert-type sum `sum over k >= 1 of (q^k + q^(2k)) / (1 + q^(3k))`,
/// expanded by the geometric series for each denominator.
pub fn lambert_pdt(precision: usize) -> Series {
    let mut out = Series::zero(precision);
    for k in 1..=precision {
        let mut j = 0usize;
        loop {
            let base = 3 * k * j + k;
            if base > precision {
                break;
            }
            let sign = if j.is_multiple_of(2) { 1 } else { -1 };
            out.coeffs[base] += sign;
            if base + k <= precision {
                out.coeffs[base + k] += sign;
            }
            j += 1;
        }
    }
    out
}

/// The alternating theta series `sum over all integers n of (-1)^n q^(n^2)`:
/// constant term 1, coefficient `2 * (-1)^n` at each positive square n^2.
pub fn theta_alt(precision: usize) -> Series {
    let mut out = Series::one(precision);
    let mut n = 1usize;
    while n * n <= precision {
        out.coeffs[n * n] = BigInt::from(if n.is_multiple_of(2) { 2 } else { -2 });
        n += 1;
    }
    out
}

/// The eta-quotient prefactor `(q^6;q^6) / ((q;q)(q^2;q^2)(q^3;q^3))`.
/// Its coefficients match `PD(n)` (verified against enumeration).
pub fn pd_prefactor(precision: usize) -> Series {
    let denominator = eta_like(1, precision)
        .mul(&eta_like(2, precision))
        .mul(&eta_like(3, precision));
    eta_like(6, precision).mul(&denominator.invert().expect("unital product"))
}

/// Generating function of `PD_t(n)`: the prefactor times the Lambert sum.
pub fn pdt_gf(precision: usize) -> Series {
    pd_prefactor(precision).mul(&lambert_pdt(precision))
}

/// Both sides of the doubled Lambert-sum identity:
/// `2 * lambert + 1` and `(q^3;q^3)^6 (q^2;q^2) / ((q^6;q^6)^3 (q;q)^2)`.
/// Doubling clears the source identity's half and keeps everything integral.
pub fn eq_3_2_sides(precision: usize) -> (Series, Series) {
    let mut lhs = lambert_pdt(precision);
    for c in &mut lhs.coeffs {
        *c *= 2;
    }
    lhs.coeffs[0] += 1;
    let numerator = eta_like(3, precision).pow(6).mul(&eta_like(2, precision));
    let denominator = eta_like(6, precision)
        .pow(3)
        .mul(&eta_like(1, precision).pow(2));
    let rhs = numerator.mul(&denominator.invert().expect("unital product"));
    (lhs, rhs)
}

/// Verifies the doubled Lambert-sum identity coefficient-wise.
pub fn check_eq_3_2(precision: usize) -> bool {
    let (lhs, rhs) = eq_3_2_sides(precision);
    lhs == rhs
}

/// The three sides of the theta identity
/// `(q;q)^2 / (q^2;q^2) == (q;q^2)^2 (q^2;q^2) == sum (-1)^n q^(n^2)`.
pub fn eq_3_5_sides(precision: usize) -> (Series, Series, Series) {
    let e1 = eta_like(1, precision);
    let e2 = eta_like(2, precision);
    let lhs = e1.pow(2).mul(&e2.invert().expect("unital product"));
    let mid = pochhammer(1, 2, Sign::Plus, precision).pow(2).mul(&e2);
    (lhs, mid, theta_alt(precision))
}

/// Verifies both equalities of the theta identity.
pub fn check_eq_3_5(precision: usize) -> bool {
    let (lhs, mid, theta) = eq_3_5_sides(precision);
    lhs == mid && mid == theta
}

/// The 3-dissection combination
/// `G = (q^3;q^3)^4 / (q^6;q^6)^2 - theta / ((q^3;q^6)^2 (q^6;q^6))`.
///
/// Writing c_i(n) for the signed count of rank-residue i (mod 3) at weight
/// n, crank symmetry gives c_1 = c_2 and the dissection gives
/// `G_n = 2 (c_0(n) - c_1(n))`; in particular G vanishes at every exponent
/// congruent to 2 mod 3, because squares are never 2 mod 3.
pub fn dissection_g(precision: usize) -> Series {
    let e3 = eta_like(3, precision);
    let e6 = eta_like(6, precision);
    let first = e3.pow(4).mul(&e6.pow(2).invert().expect("unital product"));
    let denom = pochhammer(3, 6, Sign::Plus, precision).pow(2).mul(&e6);
    let second = theta_alt(precision).mul(&denom.invert().expect("unital product"));
    &first - &second
}

/// A truncated series in q whose coefficients are integer Laurent
/// polynomials in a second variable z, stored as exponent -> coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPolySeries {
    coeffs: Vec<BTreeMap<i64, BigInt>>,
}

impl LaurentPolySeries {
    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The z-Laurent polynomial at q^n, zero entries absent.
    pub fn coeff(&self, n: usize) -> &BTreeMap<i64, BigInt> {
        &self.coeffs[n]
    }
}

fn laurent_mul_acc(
    acc: &mut BTreeMap<i64, BigInt>,
    a: &BTreeMap<i64, BigInt>,
    b: &BTreeMap<i64, BigInt>,
) {
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = ea + eb;
            let entry = acc.entry(e).or_insert_with(BigInt::zero);
            *entry += ca * cb;
        }
    }
}

fn laurent_prune(m: &mut BTreeMap<i64, BigInt>) {
    m.retain(|_, c| !c.is_zero());
}

/// The two-variable crank generating function
/// `(q;q)_inf / ((zq;q)_inf (z^{-1}q;q)_inf)` with Laurent-polynomial
/// coefficients in z. The q^n coefficient is the crank table of n with the
/// weight-1 convention built in: the series itself produces the -1 at z^0.
pub fn crank_gf(precision: usize) -> LaurentPolySeries {
    // denominator product D = prod over j of (1 - z q^j)(1 - z^{-1} q^j)
    let mut d: Vec<BTreeMap<i64, BigInt>> = vec![BTreeMap::new(); precision + 1];
    d[0].insert(0, BigInt::one());
    for j in 1..=precision {
        for z_exp in [1i64, -1] {
            // multiply by (1 - z^z_exp q^j) in place, high to low
            for i in (j..=precision).rev() {
                let (lower, upper) = d.split_at_mut(i);
                let src = &lower[i - j];
                let dst = &mut upper[0];
                for (e, c) in src {
                    let entry = dst.entry(e + z_exp).or_insert_with(BigInt::zero);
                    *entry -= c;
                }
                laurent_prune(dst);
            }
        }
    }
    // invert D as a q-series over the Laurent-polynomial coefficient ring
    let mut inv: Vec<BTreeMap<i64, BigInt>> = vec![BTreeMap::new(); precision + 1];
    inv[0].insert(0, BigInt::one());
    for n in 1..=precision {
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for k in 1..=n {
            laurent_mul_acc(&mut acc, &d[k], &inv[n - k]);
        }
        let negated: BTreeMap<i64, BigInt> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e, -c))
            .collect();
        inv[n] = negated;
    }
    // numerator (q;q)_inf has plain integer coefficients
    let e1 = eta_like(1, precision);
    let mut out: Vec<BTreeMap<i64, BigInt>> = vec![BTreeMap::new(); precision + 1];
    for n in 0..=precision {
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (i, c) in e1.coeffs().iter().enumerate().take(n + 1) {
            if c.is_zero() {
                continue;
            }
            for (e, ic) in &inv[n - i] {
                let entry = acc.entry(*e).or_insert_with(BigInt::zero);
                *entry += c * ic;
            }
        }
        laurent_prune(&mut acc);
        out[n] = acc;
    }
    LaurentPolySeries { coeffs: out }
}
