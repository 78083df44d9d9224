//! Exact arithmetic in `Z[ζ]`, `ζ = exp(iπ/k)`.
//!
//! Elements are stored in the quotient `Z[x]/(x^k + 1)`, which is not the
//! minimal representation unless `k` is a power of two. Equality and the zero
//! test therefore always go through the remainder modulo `Φ_{2k}`.

mod cyclotomic;
mod interval;

use std::fmt;
use std::ops::{Add, Neg, Sub};

pub use cyclotomic::cyclotomic_polynomial;
pub use interval::{ComplexInterval, Interval};

use crate::{Error, Result};

/// Starting precision of the interval ladder in [`CycNum::sign_real`].
pub const LADDER_START_BITS: u32 = 64;

/// Sign of a real ring element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative = -1,
    Zero = 0,
    Positive = 1,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        self as i32
    }
}

/// An element `Σ coeffs[j]·ζ^j` of the 2k-th cyclotomic integers.
///
/// Coefficients are `i64`. Cell centers of an n-cell polyomino have
/// coefficients bounded by n in absolute value, and the predicates multiply
/// them by constants of L1 norm at most 4, so overflow is out of reach for
/// any enumerable size; debug builds check it anyway.
#[derive(Clone)]
pub struct CycNum {
    k: u32,
    coeffs: Vec<i64>,
}

impl CycNum {
    pub fn zero(k: u32) -> Self {
        assert!(k >= 3, "k must be at least 3");
        CycNum { k, coeffs: vec![0; k as usize] }
    }

    pub fn one(k: u32) -> Self {
        Self::zeta_pow(k, 0)
    }

    pub fn from_int(k: u32, v: i64) -> Self {
        let mut z = Self::zero(k);
        z.coeffs[0] = v;
        z
    }

    /// `ζ^d` for any integer `d` (reduced with `ζ^k = -1`).
    pub fn zeta_pow(k: u32, d: i64) -> Self {
        let mut z = Self::zero(k);
        let (idx, neg) = reduce_exponent(k, d);
        z.coeffs[idx] = if neg { -1 } else { 1 };
        z
    }

    pub fn from_coeffs(k: u32, coeffs: Vec<i64>) -> Result<Self> {
        if k < 3 {
            return Err(Error::BadKValue(k));
        }
        if coeffs.len() != k as usize {
            return Err(Error::WrongSize { expected: k as usize, got: coeffs.len() });
        }
        Ok(CycNum { k, coeffs })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// `2cos(π/k) = ζ + ζ^{-1}`; the positive factor that turns circumradii
    /// into ring elements.
    pub fn two_cos_pi_over_k(k: u32) -> Self {
        let mut z = Self::zero(k);
        z.coeffs[1] += 1;
        z.coeffs[k as usize - 1] -= 1;
        z
    }

    /// Multiplication by `ζ^d`: a signed cyclic shift.
    pub fn mul_zeta_pow(&self, d: i64) -> Self {
        let k = self.k as usize;
        let mut out = vec![0i64; k];
        let (shift, neg) = reduce_exponent(self.k, d);
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let t = j + shift;
            let (idx, flip) = if t >= k { (t - k, !neg) } else { (t, neg) };
            out[idx] += if flip { -c } else { c };
        }
        CycNum { k: self.k, coeffs: out }
    }

    /// Complex conjugate: `ζ^j -> ζ^{-j} = -ζ^{k-j}`.
    pub fn conj(&self) -> Self {
        let k = self.k as usize;
        let mut out = vec![0i64; k];
        out[0] = self.coeffs[0];
        for j in 1..k {
            out[k - j] = -self.coeffs[j];
        }
        CycNum { k: self.k, coeffs: out }
    }

    /// Ring product (negacyclic convolution).
    pub fn mul(&self, other: &CycNum) -> Self {
        assert_eq!(self.k, other.k, "k mismatch in CycNum::mul");
        let k = self.k as usize;
        let mut out = vec![0i64; k];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let t = i + j;
                if t >= k {
                    out[t - k] -= a * b;
                } else {
                    out[t] += a * b;
                }
            }
        }
        CycNum { k: self.k, coeffs: out }
    }

    pub fn scale(&self, s: i64) -> Self {
        CycNum { k: self.k, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// Remainder modulo `Φ_{2k}`: the unique representative of degree
    /// below `φ(2k)`. Two elements are equal iff their remainders agree.
    pub fn reduced(&self) -> Vec<i64> {
        let tables = cyclotomic::ring_tables(self.k);
        let d = tables.phi_deg;
        let mut acc: Vec<i128> = self.coeffs[..d].iter().map(|&c| c as i128).collect();
        for (row, &c) in tables.reduce_rows.iter().zip(&self.coeffs[d..]) {
            if c == 0 {
                continue;
            }
            for (a, &r) in acc.iter_mut().zip(row) {
                *a += c as i128 * r as i128;
            }
        }
        acc.into_iter()
            .map(|a| i64::try_from(a).expect("reduced coefficient exceeds i64"))
            .collect()
    }

    /// Exact zero test via the `Φ_{2k}` remainder.
    pub fn is_zero(&self) -> bool {
        if self.coeffs.iter().all(|&c| c == 0) {
            return true;
        }
        self.reduced().iter().all(|&c| c == 0)
    }

    /// True iff the element equals its complex conjugate.
    pub fn is_real(&self) -> bool {
        (self - &self.conj()).is_zero()
    }

    /// Floating-point approximation `(re, im)`; not rigorous.
    pub fn approx(&self) -> (f64, f64) {
        let tables = cyclotomic::ring_tables(self.k);
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                re += c as f64 * tables.cos[j];
                im += c as f64 * tables.sin[j];
            }
        }
        (re, im)
    }

    fn l1(&self) -> u64 {
        self.coeffs.iter().map(|c| c.unsigned_abs()).sum()
    }

    /// Guaranteed enclosure of the value at `precision_bits` fractional bits
    /// (clamped below at 24).
    pub fn to_float(&self, precision_bits: u32) -> ComplexInterval {
        interval::enclose(self.k, &self.coeffs, precision_bits.max(24))
    }

    /// Exact sign of a real element.
    ///
    /// A double-precision evaluation with a rigorous error bound settles
    /// clear cases. Otherwise the symbolic zero test runs, and a nonzero
    /// element is evaluated on the interval ladder (64, 128, 256, ... bits)
    /// until its enclosure excludes zero.
    pub fn sign_real(&self) -> Result<Sign> {
        if !self.is_real() {
            return Err(Error::NotReal);
        }
        let (re, _) = self.approx();
        // libm cos/sin are within one ulp; summation adds k roundings
        let bound = self.l1() as f64 * (self.k as f64 + 8.0) * 1e-15;
        if re > bound {
            return Ok(Sign::Positive);
        }
        if re < -bound {
            return Ok(Sign::Negative);
        }
        Ok(self.sign_by_ladder())
    }

    /// Symbolic zero test followed by the precision ladder; skips the
    /// double-precision filter.
    pub(crate) fn sign_by_ladder(&self) -> Sign {
        if self.is_zero() {
            return Sign::Zero;
        }
        let mut bits = LADDER_START_BITS;
        loop {
            let iv = self.to_float(bits).re;
            if iv.is_positive() {
                return Sign::Positive;
            }
            if iv.is_negative() {
                return Sign::Negative;
            }
            bits *= 2;
        }
    }
}

/// `(cos, sin)` of the direction `π·d/k` in double precision.
pub fn slot_unit_f64(k: u32, d: u32) -> (f64, f64) {
    let tables = cyclotomic::ring_tables(k);
    let d = (d % (2 * k)) as usize;
    (tables.cos[d], tables.sin[d])
}

/// Maps an exponent to `(index in 0..k, negated)` using `ζ^k = -1`.
fn reduce_exponent(k: u32, d: i64) -> (usize, bool) {
    let two_k = 2 * k as i64;
    let e = d.rem_euclid(two_k);
    if e >= k as i64 {
        ((e - k as i64) as usize, true)
    } else {
        (e as usize, false)
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && (self - other).is_zero()
    }
}

impl Eq for CycNum {}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.approx();
        write!(f, "CycNum(k={}, {:?} ≈ {re:.6}{im:+.6}i)", self.k, self.coeffs)
    }
}

impl Add for &CycNum {
    type Output = CycNum;

    fn add(self, rhs: &CycNum) -> CycNum {
        assert_eq!(self.k, rhs.k, "k mismatch in CycNum addition");
        CycNum {
            k: self.k,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CycNum {
    type Output = CycNum;

    fn sub(self, rhs: &CycNum) -> CycNum {
        assert_eq!(self.k, rhs.k, "k mismatch in CycNum subtraction");
        CycNum {
            k: self.k,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CycNum {
    type Output = CycNum;

    fn neg(self) -> CycNum {
        CycNum { k: self.k, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);

impl Neg for CycNum {
    type Output = CycNum;

    fn neg(self) -> CycNum {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(k: u32, c: &[i64]) -> CycNum {
        let mut v = c.to_vec();
        v.resize(k as usize, 0);
        CycNum::from_coeffs(k, v).unwrap()
    }

    #[test]
    fn zero_test_examples() {
        assert!(CycNum::zero(4).is_zero());
        assert!(!CycNum::one(4).is_zero());
        // k=6: ζ² - ζ⁴ - 1 = 0 because ζ² = e^{iπ/3} is a root of x² - x + 1
        let z = num(6, &[-1, 0, 1, 0, -1]);
        let (re, im) = z.approx();
        assert!(re.abs() < 1e-12 && im.abs() < 1e-12);
        assert!(z.is_zero());
    }

    #[test]
    fn sign_examples() {
        assert_eq!(CycNum::zero(5).sign_real(), Ok(Sign::Zero));
        // k=6: ζ + ζ^11 = ζ - ζ^5 = √3
        let s3 = CycNum::zeta_pow(6, 1) + CycNum::zeta_pow(6, 11);
        assert_eq!(s3.coeffs(), &[0, 1, 0, 0, 0, -1]);
        assert_eq!(s3.sign_real(), Ok(Sign::Positive));
        // k=5: ζ² + ζ⁸ - 1 = 2cos(2π/5) - 1 ≈ -0.382
        let a = &(&CycNum::zeta_pow(5, 2) + &CycNum::zeta_pow(5, 8)) - &CycNum::one(5);
        assert!((a.approx().0 - (2.0 * (0.4 * std::f64::consts::PI).cos() - 1.0)).abs() < 1e-12);
        assert!(!a.is_zero());
        assert_eq!(a.sign_real(), Ok(Sign::Negative));
        assert_eq!(a.sign_by_ladder(), Sign::Negative);
    }

    #[test]
    fn non_real_is_rejected() {
        assert_eq!(CycNum::zeta_pow(7, 1).sign_real(), Err(Error::NotReal));
    }

    #[test]
    fn to_float_examples() {
        let z = CycNum::zero(4).to_float(64);
        assert!(z.re.contains_zero() && z.im.contains_zero());
        assert_eq!(z.re.width(), 0.0);
        let one = CycNum::one(4).to_float(64);
        assert!(one.re.contains(1.0) && one.im.contains_zero());
        let w = CycNum::zeta_pow(3, 1).to_float(96);
        assert!(w.re.contains(0.5));
        assert!((w.im.midpoint() - 0.866_025_403_784_438_6).abs() < 1e-15);
        assert!(w.im.width() < 1e-25);
    }

    #[test]
    fn widths_shrink_with_precision() {
        let a = num(7, &[3, -2, 1, 0, 5, -1, 2]);
        let mut last = f64::INFINITY;
        for bits in [24, 48, 96, 192] {
            let w = a.to_float(bits).re.width();
            assert!(w < last);
            last = w;
        }
    }

    #[test]
    fn full_turn_is_identity() {
        let a = num(9, &[1, -2, 0, 4, 0, 0, 1, 0, -3]);
        let mut b = a.clone();
        for _ in 0..18 {
            b = b.mul_zeta_pow(1);
        }
        assert_eq!(b.coeffs(), a.coeffs());
        assert_eq!(a.mul_zeta_pow(9), -&a);
        assert_eq!(a.mul_zeta_pow(-1).mul_zeta_pow(1).coeffs(), a.coeffs());
    }

    #[test]
    fn two_cos_matches_float() {
        for k in 3..30 {
            let c = CycNum::two_cos_pi_over_k(k);
            assert!(c.is_real());
            let want = 2.0 * (std::f64::consts::PI / k as f64).cos();
            assert!((c.approx().0 - want).abs() < 1e-12);
        }
    }

    #[test]
    fn ladder_resolves_tiny_values() {
        // √3 - 1.732 > 0 but tiny; needs exact machinery beyond naive float
        let s3 = CycNum::zeta_pow(6, 1) + CycNum::zeta_pow(6, 11);
        let s3_1000 = s3.scale(1_000_000_000);
        let v = &s3_1000 - &CycNum::from_int(6, 1_732_050_807);
        assert_eq!(v.sign_real(), Ok(Sign::Positive));
        let v = &s3_1000 - &CycNum::from_int(6, 1_732_050_808);
        assert_eq!(v.sign_real(), Ok(Sign::Negative));
    }
}
