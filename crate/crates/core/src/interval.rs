//! Fixed-point intervals with directed rounding.
//!
//! A [`RatioInterval`] at precision `p` encloses a real `x` as
//! `lo / 2^p <= x <= hi / 2^p` with integer `lo`, `hi`. Every operation
//! rounds `lo` down and `hi` up, so enclosures survive any chain of them.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Extra bits carried inside the logarithm evaluation.
const GUARD_BITS: u32 = 32;

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

fn shr_floor(a: &BigInt, bits: u32) -> BigInt {
    // arithmetic shift on BigInt rounds toward negative infinity
    a >> bits
}

fn shr_ceil(a: &BigInt, bits: u32) -> BigInt {
    -((-a) >> bits)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioInterval {
    lo: BigInt,
    hi: BigInt,
    precision_bits: u32,
}

impl RatioInterval {
    pub fn exact(value: &BigInt, precision_bits: u32) -> Self {
        let v = value << precision_bits;
        Self {
            lo: v.clone(),
            hi: v,
            precision_bits,
        }
    }

    pub fn from_uint(value: &BigUint, precision_bits: u32) -> Self {
        Self::exact(&BigInt::from(value.clone()), precision_bits)
    }

    pub fn zero(precision_bits: u32) -> Self {
        Self::exact(&BigInt::zero(), precision_bits)
    }

    /// Enclosure of `num / den`.
    pub fn from_ratio(num: &BigInt, den: &BigInt, precision_bits: u32) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        let (num, den) = if den.is_negative() {
            (-num, -den)
        } else {
            (num.clone(), den.clone())
        };
        let scaled = num << precision_bits;
        Ok(Self {
            lo: floor_div(&scaled, &den),
            hi: ceil_div(&scaled, &den),
            precision_bits,
        })
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    /// Scaled lower end: the enclosure is `[lo_scaled, hi_scaled] / 2^p`.
    pub fn lo_scaled(&self) -> &BigInt {
        &self.lo
    }

    pub fn hi_scaled(&self) -> &BigInt {
        &self.hi
    }

    fn same_precision(&self, other: &Self) {
        assert_eq!(
            self.precision_bits, other.precision_bits,
            "interval precisions differ"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_precision(other);
        Self {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
            precision_bits: self.precision_bits,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same_precision(other);
        Self {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
            precision_bits: self.precision_bits,
        }
    }

    /// Multiply by a nonnegative integer (exact).
    pub fn scale(&self, factor: &BigUint) -> Self {
        let f = BigInt::from(factor.clone());
        Self {
            lo: &self.lo * &f,
            hi: &self.hi * &f,
            precision_bits: self.precision_bits,
        }
    }

    /// Product of two intervals with nonnegative lower ends.
    pub fn mul_nonneg(&self, other: &Self) -> Self {
        self.same_precision(other);
        debug_assert!(!self.lo.is_negative() && !other.lo.is_negative());
        let p = self.precision_bits;
        Self {
            lo: shr_floor(&(&self.lo * &other.lo), p),
            hi: shr_ceil(&(&self.hi * &other.hi), p),
            precision_bits: p,
        }
    }

    /// Divide by a positive integer.
    pub fn div_uint(&self, divisor: &BigUint) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        let d = BigInt::from(divisor.clone());
        Ok(Self {
            lo: floor_div(&self.lo, &d),
            hi: ceil_div(&self.hi, &d),
            precision_bits: self.precision_bits,
        })
    }

    /// Strictly below `num / den` for every point of the enclosure.
    pub fn hi_below(&self, num: &BigInt, den: &BigInt) -> bool {
        debug_assert!(den.is_positive());
        &self.hi * den < (num << self.precision_bits)
    }

    /// At least `num / den` for every point of the enclosure.
    pub fn lo_at_least(&self, num: &BigInt, den: &BigInt) -> bool {
        debug_assert!(den.is_positive());
        &self.lo * den >= (num << self.precision_bits)
    }

    /// Compare the enclosure with an integer: `Less`/`Greater` when the whole
    /// enclosure lies strictly on one side, `None` when undecided.
    pub fn compare_int(&self, value: &BigInt) -> Option<Ordering> {
        let v = value << self.precision_bits;
        if self.hi < v {
            Some(Ordering::Less)
        } else if self.lo > v {
            Some(Ordering::Greater)
        } else if self.lo == v && self.hi == v {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn width_scaled(&self) -> BigInt {
        &self.hi - &self.lo
    }

    /// `other` (possibly at a different precision) lies inside `self`.
    pub fn contains(&self, other: &Self) -> bool {
        let (p, q) = (self.precision_bits, other.precision_bits);
        let s = p.max(q);
        (&self.lo << (s - p)) <= (&other.lo << (s - q))
            && (&other.hi << (s - q)) <= (&self.hi << (s - p))
    }

    pub fn lo_f64(&self) -> f64 {
        scaled_to_f64(&self.lo, self.precision_bits)
    }

    pub fn hi_f64(&self) -> f64 {
        scaled_to_f64(&self.hi, self.precision_bits)
    }

    /// Decimal string of the lower end rounded down.
    pub fn lo_decimal(&self, digits: u32) -> String {
        decimal(&self.lo, self.precision_bits, digits, false)
    }

    /// Decimal string of the upper end rounded up.
    pub fn hi_decimal(&self, digits: u32) -> String {
        decimal(&self.hi, self.precision_bits, digits, true)
    }
}

impl fmt::Display for RatioInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo_decimal(12), self.hi_decimal(12))
    }
}

impl Serialize for RatioInterval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RatioInterval", 3)?;
        st.serialize_field("lo", &self.lo_decimal(20))?;
        st.serialize_field("hi", &self.hi_decimal(20))?;
        st.serialize_field("precision_bits", &self.precision_bits)?;
        st.end()
    }
}

fn scaled_to_f64(v: &BigInt, p: u32) -> f64 {
    // keep 64 significant bits before converting
    let bits = v.bits() as i64;
    let drop = (bits - 64).max(0) as u32;
    let m = (v >> drop).to_f64().unwrap_or(f64::NAN);
    m * 2f64.powi(drop as i32 - p as i32)
}

/// `v / 2^p` as a decimal with `digits` fractional digits.
fn decimal(v: &BigInt, p: u32, digits: u32, round_up: bool) -> String {
    let ten = BigInt::from(10u32).pow(digits);
    let num = v * ten;
    let den = BigInt::one() << p;
    let q = if round_up {
        ceil_div(&num, &den)
    } else {
        floor_div(&num, &den)
    };
    let neg = q.sign() == Sign::Minus;
    let mut s = q.abs().to_string();
    if digits > 0 {
        let width = digits as usize + 1;
        if s.len() < width {
            s = format!("{}{}", "0".repeat(width - s.len()), s);
        }
        s.insert(s.len() - digits as usize, '.');
    }
    if neg {
        s.insert(0, '-');
    }
    s
}

/// Lower bound (in units of `2^-w`) and error count for `atanh(num/den)`,
/// `0 <= num/den <= 1/3`: the true value lies in `[s, s + err]` ulps.
fn atanh_lower(num: &BigUint, den: &BigUint, w: u32) -> (BigUint, BigUint) {
    let num2 = num * num;
    let den2 = den * den;
    let gap = &den2 - &num2;
    let mut pow_num = num.clone();
    let mut pow_den = den.clone();
    let mut sum = BigUint::zero();
    let mut terms = 0u64;
    loop {
        let odd = BigUint::from(2 * terms + 1);
        // tail from this term on is at most y^(2t+1) / ((2t+1)(1 - y^2))
        let tail_num = (&pow_num << w) * &den2;
        let tail_den = &pow_den * &odd * &gap;
        if tail_num < tail_den {
            break;
        }
        sum += (&pow_num << w) / (&pow_den * &odd);
        pow_num *= &num2;
        pow_den *= &den2;
        terms += 1;
    }
    (sum, BigUint::from(terms + 1))
}

/// `ln(1 + f)` style enclosure, in `2^-w` units, of `ln(num/den)` for
/// `1 <= num/den <= 2`.
fn ln_small(num: &BigUint, den: &BigUint, w: u32) -> (BigUint, BigUint) {
    // ln(x) = 2 atanh((x - 1) / (x + 1))
    let (s, err) = atanh_lower(&(num - den), &(num + den), w);
    (&s << 1u32, (&s + err) << 1u32)
}

type Ln2 = (BigUint, BigUint);

fn ln2_enclosure(w: u32) -> Ln2 {
    ln_small(&BigUint::from(2u32), &BigUint::one(), w)
}

fn log2_with(m: &BigUint, precision_bits: u32, ln2: &Ln2) -> RatioInterval {
    let e = m.bits() - 1;
    let pow = BigUint::one() << e;
    if *m == pow {
        return RatioInterval::exact(&BigInt::from(e), precision_bits);
    }
    let w = precision_bits + GUARD_BITS;
    let (ln2_lo, ln2_hi) = ln2;
    let (ln_lo, ln_hi) = ln_small(m, &pow, w);
    let frac_lo = BigInt::from((ln_lo << w) / ln2_hi);
    let frac_hi = BigInt::from(((ln_hi << w) + ln2_lo - 1u32) / ln2_lo);
    let int_part = BigInt::from(e) << w;
    RatioInterval {
        lo: shr_floor(&(&int_part + frac_lo), GUARD_BITS),
        hi: shr_ceil(&(&int_part + frac_hi), GUARD_BITS),
        precision_bits,
    }
}

/// Enclosure of `log2(m)` for a positive integer `m`.
pub fn log2_uint(m: &BigUint, precision_bits: u32) -> Result<RatioInterval> {
    if m.is_zero() {
        return Err(Error::Domain("log2(0)".into()));
    }
    let ln2 = ln2_enclosure(precision_bits + GUARD_BITS);
    Ok(log2_with(m, precision_bits, &ln2))
}

pub fn log2_u64(m: u64, precision_bits: u32) -> Result<RatioInterval> {
    log2_uint(&BigUint::from(m), precision_bits)
}

/// `log2(l)` for every `1 <= l <= max`, all at one precision.
#[derive(Debug, Clone)]
pub struct Log2Table {
    precision_bits: u32,
    entries: Vec<RatioInterval>,
}

impl Log2Table {
    pub fn new(max: u64, precision_bits: u32) -> Self {
        let ln2 = ln2_enclosure(precision_bits + GUARD_BITS);
        let mut entries = vec![RatioInterval::zero(precision_bits)];
        entries
            .extend((1..=max.max(1)).map(|m| log2_with(&BigUint::from(m), precision_bits, &ln2)));
        Self {
            precision_bits,
            entries,
        }
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    /// `log2(l)`; panics when `l` is zero or beyond the table.
    pub fn get(&self, l: u64) -> &RatioInterval {
        assert!(l >= 1, "log2(0)");
        &self.entries[l as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn powers_of_two_are_exact() {
        let l = log2_u64(1024, 128).unwrap();
        assert_eq!(l.compare_int(&BigInt::from(10)), Some(Ordering::Equal));
        assert_eq!(log2_u64(1, 64).unwrap(), RatioInterval::zero(64));
    }

    #[test]
    fn log2_three_encloses_reference() {
        // log2(3) = 1.584962500721156181453738943947816508759814407692481060455...
        let l = log2_u64(3, 200).unwrap();
        let reference = "1.58496250072115618145373894394781650875981440769248";
        assert!(l.lo_decimal(50).as_str() <= reference);
        assert!(l.hi_decimal(50).as_str() >= reference);
        assert!(l.width_scaled() <= BigInt::from(4));
    }

    #[test]
    fn ratio_rounding_is_directed() {
        let r = RatioInterval::from_ratio(&BigInt::from(1), &BigInt::from(3), 64).unwrap();
        assert_eq!(r.width_scaled(), BigInt::one());
        assert!(r.hi_below(&BigInt::from(1), &BigInt::from(2)));
        assert!(!r.hi_below(&BigInt::from(1), &BigInt::from(3)));
        assert!(r.lo_at_least(&BigInt::from(33), &BigInt::from(100)));
        let neg = RatioInterval::from_ratio(&BigInt::from(-1), &BigInt::from(3), 64).unwrap();
        assert_eq!(neg.lo_decimal(3), "-0.334");
        assert_eq!(neg.hi_decimal(3), "-0.333");
    }

    #[test]
    fn table_matches_direct() {
        let t = Log2Table::new(300, 96);
        for m in [2u64, 3, 5, 7, 100, 255, 256, 257, 299] {
            assert_eq!(t.get(m), &log2_u64(m, 96).unwrap());
        }
    }

    proptest! {
        #[test]
        fn log2_encloses_f64(m in 1u64..1_000_000) {
            let l = log2_u64(m, 80).unwrap();
            let approx = (m as f64).log2();
            prop_assert!(l.lo_f64() <= approx + 1e-12);
            prop_assert!(l.hi_f64() >= approx - 1e-12);
            prop_assert!(l.hi_f64() - l.lo_f64() < 1e-15);
        }

        #[test]
        fn higher_precision_nests(m in 2u64..5000, p in 64u32..300) {
            let coarse = log2_u64(m, p).unwrap();
            let fine = log2_u64(m, 2 * p).unwrap();
            prop_assert!(coarse.contains(&fine));
        }

        #[test]
        fn log_of_product_is_sum(a in 2u64..2000, b in 2u64..2000) {
            let p = 128;
            let lhs = log2_u64(a * b, p).unwrap();
            let rhs = log2_u64(a, p).unwrap().add(&log2_u64(b, p).unwrap());
            // the enclosures must overlap
            prop_assert!(lhs.lo_scaled() <= rhs.hi_scaled() && rhs.lo_scaled() <= lhs.hi_scaled());
        }
    }
}
