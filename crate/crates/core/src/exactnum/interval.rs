//! Fixed-point interval evaluation of ring elements.
//!
//! Values are big integers scaled by `2^bits`; every table entry carries an
//! error bound in units of the last place (ulps), so sums of table entries
//! yield guaranteed enclosures.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Extra bits carried through the series evaluations.
const GUARD_BITS: u32 = 48;

/// A closed real interval `[lo, hi] / 2^scale`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigInt,
    pub hi: BigInt,
    pub scale: u32,
}

impl Interval {
    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn width(&self) -> f64 {
        scaled_to_f64(&(&self.hi - &self.lo), self.scale)
    }

    pub fn midpoint(&self) -> f64 {
        scaled_to_f64(&(&self.lo + &self.hi), self.scale + 1)
    }

    pub fn lo_f64(&self) -> f64 {
        scaled_to_f64(&self.lo, self.scale)
    }

    pub fn hi_f64(&self) -> f64 {
        scaled_to_f64(&self.hi, self.scale)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo_f64() <= x && x <= self.hi_f64()
    }
}

/// Enclosure of a complex value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexInterval {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexInterval {
    pub fn midpoint(&self) -> (f64, f64) {
        (self.re.midpoint(), self.im.midpoint())
    }
}

fn scaled_to_f64(v: &BigInt, scale: u32) -> f64 {
    // shift into f64 range before converting
    let bits = v.bits() as i64;
    let drop = (bits - 60).max(0) as u32;
    let m = (v >> drop).to_f64().unwrap_or(0.0);
    m * 2f64.powi(drop as i32 - scale as i32)
}

/// `atan(1/x) * 2^bits` with its error bound in ulps.
fn atan_inv(x: u32, bits: u32) -> (BigInt, u64) {
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut power: BigInt = (BigInt::one() << bits) / BigInt::from(x);
    let mut sum = power.clone();
    let mut i: u64 = 1;
    loop {
        power /= &x2;
        let term = &power / BigInt::from(2 * i + 1);
        if term.is_zero() {
            break;
        }
        if i % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        i += 1;
    }
    // each power carries < 1 ulp of inherited error plus truncation
    (sum, 2 * i + 2)
}

/// `π * 2^bits` with its error bound in ulps (Machin's formula).
fn pi_fixed(bits: u32) -> (BigInt, u64) {
    let (a5, e5) = atan_inv(5, bits);
    let (a239, e239) = atan_inv(239, bits);
    (a5 * 16 - a239 * 4, 16 * e5 + 4 * e239)
}

/// `(cos θ, sin θ) * 2^bits` for `θ = π·num/den` in `[0, π/2]`, error in ulps.
fn cos_sin_first_quadrant(pi: &BigInt, pi_err: u64, num: u64, den: u64, bits: u32) -> (BigInt, BigInt, u64) {
    debug_assert!(2 * num <= den);
    let theta = pi * BigInt::from(num) / BigInt::from(den);
    let theta_err = pi_err + 1;
    let one = BigInt::one() << bits;
    let x2 = (&theta * &theta) >> bits;

    let mut cos = one.clone();
    let mut term = one;
    let mut i: u64 = 1;
    loop {
        term = ((&term * &x2) >> bits) / BigInt::from((2 * i - 1) * (2 * i));
        if term.is_zero() {
            break;
        }
        if i % 2 == 1 {
            cos -= &term;
        } else {
            cos += &term;
        }
        i += 1;
    }
    let cos_terms = i;

    let mut sin = theta.clone();
    let mut term = theta;
    let mut i: u64 = 1;
    loop {
        term = ((&term * &x2) >> bits) / BigInt::from((2 * i) * (2 * i + 1));
        if term.is_zero() {
            break;
        }
        if i % 2 == 1 {
            sin -= &term;
        } else {
            sin += &term;
        }
        i += 1;
    }
    let terms = cos_terms.max(i);
    // |d/dθ| <= 1 for both functions; every step adds a few ulps of rounding,
    // the first multiplication can amplify by at most θ²/2 < 1.25.
    let err = (terms + 2) * (8 * theta_err + 16);
    (cos, sin, err)
}

/// `cos(πj/k)`, `sin(πj/k)` for `j in 0..k`, scaled by `2^bits`, plus a
/// uniform error bound (ulps at `bits`) valid for every entry.
#[derive(Debug)]
pub(crate) struct TrigTable {
    pub cos: Vec<BigInt>,
    pub sin: Vec<BigInt>,
    pub err: u64,
}

impl TrigTable {
    fn new(k: u32, bits: u32) -> Self {
        let work = bits + GUARD_BITS;
        let (pi, pi_err) = pi_fixed(work + 8);
        let pi = pi >> 8u32;
        let pi_err = pi_err / 256 + 1;
        let k64 = k as u64;
        let mut first: Vec<(BigInt, BigInt)> = Vec::new();
        let mut err_work = 0u64;
        for j in 0..=k64 / 2 {
            let (c, s, e) = cos_sin_first_quadrant(&pi, pi_err, j, k64, work);
            err_work = err_work.max(e);
            first.push((c, s));
        }
        let mut cos = Vec::with_capacity(k as usize);
        let mut sin = Vec::with_capacity(k as usize);
        for j in 0..k64 {
            let (c, s) = if 2 * j <= k64 {
                (first[j as usize].0.clone(), first[j as usize].1.clone())
            } else {
                let m = (k64 - j) as usize;
                (-first[m].0.clone(), first[m].1.clone())
            };
            cos.push(c >> GUARD_BITS);
            sin.push(s >> GUARD_BITS);
        }
        // floor shifts cost one more ulp
        let err = (err_work >> GUARD_BITS) + 2;
        TrigTable { cos, sin, err }
    }
}

thread_local! {
    static TRIG: RefCell<HashMap<(u32, u32), Rc<TrigTable>>> = RefCell::new(HashMap::new());
}

pub(crate) fn trig_table(k: u32, bits: u32) -> Rc<TrigTable> {
    TRIG.with(|t| {
        t.borrow_mut()
            .entry((k, bits))
            .or_insert_with(|| Rc::new(TrigTable::new(k, bits)))
            .clone()
    })
}

/// Enclose `Σ coeffs[j]·ζ^j` with `ζ = exp(iπ/k)` at `bits` fractional bits.
pub(crate) fn enclose(k: u32, coeffs: &[i64], bits: u32) -> ComplexInterval {
    let table = trig_table(k, bits);
    let mut re = BigInt::zero();
    let mut im = BigInt::zero();
    let mut l1: u64 = 0;
    for (j, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let c_big = BigInt::from(c);
        re += &c_big * &table.cos[j];
        im += &c_big * &table.sin[j];
        l1 += c.unsigned_abs();
    }
    let err = BigInt::from(l1) * BigInt::from(table.err);
    ComplexInterval {
        re: Interval { lo: &re - &err, hi: &re + &err, scale: bits },
        im: Interval { lo: &im - &err, hi: &im + &err, scale: bits },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_digits() {
        let (pi, err) = pi_fixed(200);
        let approx = scaled_to_f64(&pi, 200);
        assert!((approx - std::f64::consts::PI).abs() < 1e-15);
        assert!(err < 1 << 16);
    }

    #[test]
    fn table_matches_libm() {
        for k in [3u32, 4, 5, 7, 12, 50] {
            let t = TrigTable::new(k, 80);
            for j in 0..k as usize {
                let want = (std::f64::consts::PI * j as f64 / k as f64).cos();
                let got = scaled_to_f64(&t.cos[j], 80);
                assert!((want - got).abs() < 1e-14, "k={k} j={j}");
                let want = (std::f64::consts::PI * j as f64 / k as f64).sin();
                let got = scaled_to_f64(&t.sin[j], 80);
                assert!((want - got).abs() < 1e-14, "k={k} j={j}");
            }
            assert!(t.err <= 4, "error bound too loose: {}", t.err);
        }
    }

    #[test]
    fn enclosure_of_sqrt3_is_tight() {
        // ζ + ζ^{-1} for k=6 is √3; ζ^{-1} = -ζ^5
        let iv = enclose(6, &[0, 1, 0, 0, 0, -1], 128);
        let s3 = 3f64.sqrt();
        assert!(iv.re.contains(s3));
        assert!(iv.re.width() < 1e-30);
        assert!(iv.im.contains_zero());
    }
}
