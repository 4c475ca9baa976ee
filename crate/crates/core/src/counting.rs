//! Certified evaluation of the decision-tree counting bound.
//!
//! The number of decision trees of height at most `n - t` on `binom([n], k)`
//! is bounded by
//!
//! ```text
//! g(n,k,t) = 2^{V(t)} * prod_{l=t+1}^{n} l^{V(l) - L(l)} * 2^{L(l)}
//! V(l) = sum_{i=max(0,k-l)}^{k} binom(n-l, i)
//! L(l) = binom(n-l-1, k-1) + binom(n-l-1, n-k+1)
//! ```
//!
//! Whenever `log2 g(n,k,t) < binom(n,k)` some function on the slice has no
//! tree of height `n - t`, so `E_k(n) <= t`. The numbers involved have
//! hundreds of bits in their exponents, so everything is kept in log space
//! with exact integer exponents and directed-rounding logarithms.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::{Log2Table, RatioInterval};
use crate::slice::binom_ext;

/// Starting precision for certified comparisons.
pub const START_PRECISION: u32 = 128;
/// Precision ceiling; comparisons still undecided here are indeterminate.
pub const MAX_PRECISION: u32 = 4096;
/// Largest `log2 g` (in bits) [`LogMass::expand`] will materialise.
pub const EXPAND_LIMIT_BITS: u64 = 1 << 24;

/// `2^pow2 * prod l^{e_l}` with exact exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogMass {
    pub pow2: BigUint,
    /// Base `l >= 3` to exponent; zero exponents are not stored.
    pub factors: BTreeMap<u64, BigUint>,
}

impl Serialize for LogMass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut factors = s.serialize_map(Some(self.factors.len() + 1))?;
        factors.serialize_entry("2", &self.pow2.to_string())?;
        for (base, exp) in &self.factors {
            factors.serialize_entry(&base.to_string(), &exp.to_string())?;
        }
        factors.end()
    }
}

impl LogMass {
    fn one() -> Self {
        Self {
            pow2: BigUint::zero(),
            factors: BTreeMap::new(),
        }
    }

    fn mul_power(&mut self, base: u64, exp: BigUint) {
        match base {
            0 | 1 => {}
            2 => self.pow2 += exp,
            _ if exp.is_zero() => {}
            _ => *self.factors.entry(base).or_insert_with(BigUint::zero) += exp,
        }
    }

    /// Enclosure of the base-2 logarithm.
    pub fn log2(&self, precision_bits: u32) -> RatioInterval {
        let max = self.factors.keys().next_back().copied().unwrap_or(1);
        let logs = Log2Table::new(max, precision_bits);
        self.factors.iter().fold(
            RatioInterval::from_uint(&self.pow2, precision_bits),
            |acc, (&base, exp)| acc.add(&logs.get(base).scale(exp)),
        )
    }

    /// The exact integer, when it has at most [`EXPAND_LIMIT_BITS`] bits.
    pub fn expand(&self) -> Result<BigUint> {
        let approx_bits = self.log2(64).hi_f64().ceil() as u64 + 1;
        if approx_bits > EXPAND_LIMIT_BITS {
            return Err(Error::resource(
                "expanding g to an integer (bits)",
                approx_bits as u128,
                EXPAND_LIMIT_BITS as u128,
            ));
        }
        let mut v = BigUint::one() << usize::try_from(&self.pow2).expect("bounded above");
        for (&base, exp) in &self.factors {
            let e = u32::try_from(exp).expect("bounded above");
            v *= BigUint::from(base).pow(e);
        }
        Ok(v)
    }
}

/// Pascal rows `binom(m, i)` for `0 <= m <= n`.
struct Pascal {
    rows: Vec<Vec<BigUint>>,
}

impl Pascal {
    fn new(n: u32) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n as usize + 1);
        for m in 0..=n as usize {
            let mut row = vec![BigUint::one(); m + 1];
            for i in 1..m {
                row[i] = &rows[m - 1][i - 1] + &rows[m - 1][i];
            }
            rows.push(row);
        }
        Self { rows }
    }

    /// `binom(a, b)`, zero out of range.
    fn get(&self, a: i64, b: i64) -> BigUint {
        if a < 0 || b < 0 || b > a {
            return BigUint::zero();
        }
        self.rows[a as usize][b as usize].clone()
    }

    fn central(&self, m: u32) -> &BigUint {
        &self.rows[m as usize][(m / 2) as usize]
    }
}

/// Per-level vertex and forced-leaf counts for one `(n, k)`.
struct LevelProfile {
    n: u32,
    k: u32,
    /// `V(l)` for `l = 0..=n`.
    vertices: Vec<BigUint>,
    /// `L(l)` for `l = 0..=n`.
    leaves: Vec<BigUint>,
}

impl LevelProfile {
    fn new(n: u32, k: u32) -> Self {
        let pascal = Pascal::new(n);
        Self::with_pascal(n, k, &pascal)
    }

    fn with_pascal(n: u32, k: u32, pascal: &Pascal) -> Self {
        let (ni, ki) = (n as i64, k as i64);
        let mut vertices = Vec::with_capacity(n as usize + 1);
        let mut leaves = Vec::with_capacity(n as usize + 1);
        for l in 0..=ni {
            let v =
                ((ki - l).max(0)..=ki).fold(BigUint::zero(), |acc, i| acc + pascal.get(ni - l, i));
            vertices.push(v);
            leaves.push(pascal.get(ni - l - 1, ki - 1) + pascal.get(ni - l - 1, ni - ki + 1));
        }
        Self {
            n,
            k,
            vertices,
            leaves,
        }
    }

    /// Exponent of `l` in the level-`l` factor.
    fn label_exponent(&self, l: u32) -> Result<BigUint> {
        let (v, leaves) = (&self.vertices[l as usize], &self.leaves[l as usize]);
        if leaves > v {
            return Err(Error::Domain(format!(
                "negative exponent at level {l} for (n, k) = ({}, {}): {v} vertices, {leaves} leaves; use k = {} instead",
                self.n,
                self.k,
                self.n - self.k
            )));
        }
        Ok(v - leaves)
    }

    fn g(&self, t: u32) -> Result<LogMass> {
        let mut mass = LogMass::one();
        mass.mul_power(2, self.vertices[t as usize].clone());
        for l in t + 1..=self.n {
            mass.mul_power(l as u64, self.label_exponent(l)?);
            mass.mul_power(2, self.leaves[l as usize].clone());
        }
        Ok(mass)
    }

    /// `log2 g(n,k,t)` for every `t = 0..=n` via suffix sums.
    fn log2_g_all(&self, precision_bits: u32) -> Result<Vec<RatioInterval>> {
        let logs = Log2Table::new(self.n as u64, precision_bits);
        let n = self.n as usize;
        let mut suffix = vec![RatioInterval::zero(precision_bits); n + 1];
        for l in (1..=n).rev() {
            let level = logs
                .get(l as u64)
                .scale(&self.label_exponent(l as u32)?)
                .add(&RatioInterval::from_uint(&self.leaves[l], precision_bits));
            suffix[l - 1] = suffix[l].add(&level);
        }
        Ok((0..=n)
            .map(|t| RatioInterval::from_uint(&self.vertices[t], precision_bits).add(&suffix[t]))
            .collect())
    }
}

fn check_nkt(n: u32, k: u32, t: u32) -> Result<()> {
    if k > n || t > n {
        return Err(Error::Domain(format!(
            "need 0 <= k <= n and 0 <= t <= n, got (n, k, t) = ({n}, {k}, {t})"
        )));
    }
    Ok(())
}

/// Exact `g(n, k, t)` as a [`LogMass`].
pub fn g_logmass(n: u32, k: u32, t: u32) -> Result<LogMass> {
    check_nkt(n, k, t)?;
    LevelProfile::new(n, k).g(t)
}

#[derive(Debug, Clone, Serialize)]
pub struct GReport {
    pub n: u32,
    pub k: u32,
    pub t: u32,
    pub exponents: LogMass,
    pub log2: RatioInterval,
    /// The integer itself, when small enough to write out.
    pub value: Option<String>,
}

pub fn g_report(n: u32, k: u32, t: u32, precision_bits: u32) -> Result<GReport> {
    check_precision(precision_bits)?;
    let exponents = g_logmass(n, k, t)?;
    let log2 = exponents.log2(precision_bits);
    let value = if log2.hi_f64() < 4096.0 {
        Some(exponents.expand()?.to_string())
    } else {
        None
    };
    Ok(GReport {
        n,
        k,
        t,
        exponents,
        log2,
        value,
    })
}

/// Three-way outcome of a certified comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Certified,
    Refuted,
    Indeterminate,
}

/// Run `attempt` at 128, 256, ... bits until it returns a decided verdict
/// or the ceiling is passed.
fn escalate<T>(mut attempt: impl FnMut(u32) -> Result<(Verdict, T)>) -> Result<(Verdict, T, u32)> {
    let mut p = START_PRECISION;
    loop {
        let (verdict, payload) = attempt(p)?;
        if verdict != Verdict::Indeterminate || p * 2 > MAX_PRECISION {
            return Ok((verdict, payload, p));
        }
        p *= 2;
    }
}

fn check_precision(precision_bits: u32) -> Result<()> {
    if precision_bits < 64 {
        return Err(Error::Domain(format!(
            "precision_bits = {precision_bits} is below 64"
        )));
    }
    Ok(())
}

/// Central binomial `C(m) = binom(m, floor(m/2))`.
pub fn central_binom(m: u32) -> BigUint {
    binom_ext(m as i64, (m / 2) as i64)
}

/// Enclosure of
/// `((t+1) C(n-t) + sum_{l=t+1}^{n} (l log2 l + 2) C(n-l)) / C(n)`.
pub fn kozep_ratio(n: u32, t: u32, precision_bits: u32) -> Result<RatioInterval> {
    check_precision(precision_bits)?;
    if t > n {
        return Err(Error::Domain(format!("t = {t} exceeds n = {n}")));
    }
    let pascal = Pascal::new(n);
    Ok(kozep_with(&pascal, n, t, precision_bits))
}

fn kozep_with(pascal: &Pascal, n: u32, t: u32, p: u32) -> RatioInterval {
    let logs = Log2Table::new(n as u64, p);
    let top = pascal.central(n - t) * BigUint::from(t + 1);
    let mut num = RatioInterval::from_uint(&top, p);
    for l in t + 1..=n {
        let weight = logs
            .get(l as u64)
            .scale(&BigUint::from(l))
            .add(&RatioInterval::exact(&BigInt::from(2), p));
        num = num.add(&weight.scale(pascal.central(n - l)));
    }
    num.div_uint(pascal.central(n))
        .expect("central binomials are positive")
}

#[derive(Debug, Clone, Serialize)]
pub struct KozepRow {
    pub n: u32,
    pub t: u32,
    pub verdict: Verdict,
    pub ratio: RatioInterval,
    pub precision_bits: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct KozepReport {
    pub t: u32,
    pub rows: Vec<KozepRow>,
    /// Largest upper end over the rows, rounded up.
    pub max_hi: String,
    /// Rows not separated from 1 at the precision ceiling.
    pub indeterminate: Vec<u32>,
    pub all_certified: bool,
}

/// Certify `kozep_ratio(n, t) < 1` for every `n` in `n_lo..=n_hi`.
pub fn verify_kozep_range(t: u32, n_lo: u32, n_hi: u32) -> Result<KozepReport> {
    if n_lo < t || n_lo > n_hi {
        return Err(Error::Domain(format!(
            "need t <= n_lo <= n_hi, got t = {t}, range [{n_lo}, {n_hi}]"
        )));
    }
    let pascal = Pascal::new(n_hi);
    let one = BigInt::one();
    let rows = (n_lo..=n_hi)
        .into_par_iter()
        .map(|n| {
            let (verdict, ratio, precision_bits) = escalate(|p| {
                let r = kozep_with(&pascal, n, t, p);
                let v = if r.hi_below(&one, &one) {
                    Verdict::Certified
                } else if r.lo_at_least(&one, &one) {
                    Verdict::Refuted
                } else {
                    Verdict::Indeterminate
                };
                Ok((v, r))
            })?;
            Ok(KozepRow {
                n,
                t,
                verdict,
                ratio,
                precision_bits,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let max_hi = rows
        .iter()
        .map(|r| &r.ratio)
        .max_by(|a, b| {
            // compare upper ends across precisions
            let s = a.precision_bits().max(b.precision_bits());
            (a.hi_scaled() << (s - a.precision_bits()))
                .cmp(&(b.hi_scaled() << (s - b.precision_bits())))
        })
        .map(|r| r.hi_decimal(20))
        .unwrap_or_default();
    let indeterminate: Vec<u32> = rows
        .iter()
        .filter(|r| r.verdict == Verdict::Indeterminate)
        .map(|r| r.n)
        .collect();
    let all_certified = rows.iter().all(|r| r.verdict == Verdict::Certified);
    Ok(KozepReport {
        t,
        rows,
        max_hi,
        indeterminate,
        all_certified,
    })
}

/// The three stages bounding the ratio at `t = 5` for `n >= 100`, evaluated
/// with the odd reference length 99.
#[derive(Debug, Clone, Serialize)]
pub struct KozepChain {
    /// `6 binom(94,47) / binom(99,49)`, claimed below 0.2.
    pub first: RatioInterval,
    /// `sum_{l=6}^{15} (l log2 l + 2) C(99-l) / binom(99,49)`, claimed below 0.71.
    pub middle: RatioInterval,
    /// `(16 log2 16 + 2) binom(83,41) / binom(99,49) * 3`, the geometric tail.
    pub tail: RatioInterval,
    /// `first + middle + tail`.
    pub stages_sum: RatioInterval,
    /// `0.2 + 0.71 + tail`, claimed below 0.92.
    pub rounded_total: RatioInterval,
    pub first_below_0_2: bool,
    pub middle_below_0_71: bool,
    pub total_below_0_92: bool,
}

pub fn kozep_chain(precision_bits: u32) -> Result<KozepChain> {
    check_precision(precision_bits)?;
    let p = precision_bits;
    let pascal = Pascal::new(99);
    let logs = Log2Table::new(16, p);
    let denom = pascal.get(99, 49);
    let first = RatioInterval::from_uint(&(pascal.get(94, 47) * 6u32), p).div_uint(&denom)?;
    let weight = |l: u32| {
        logs.get(l as u64)
            .scale(&BigUint::from(l))
            .add(&RatioInterval::exact(&BigInt::from(2), p))
    };
    let middle = (6..=15)
        .fold(RatioInterval::zero(p), |acc, l| {
            acc.add(&weight(l).scale(pascal.central(99 - l)))
        })
        .div_uint(&denom)?;
    let tail = weight(16)
        .scale(&(pascal.get(83, 41) * 3u32))
        .div_uint(&denom)?;
    let stages_sum = first.add(&middle).add(&tail);
    let rounded_total =
        RatioInterval::from_ratio(&BigInt::from(91), &BigInt::from(100), p)?.add(&tail);
    let hundred = BigInt::from(100);
    Ok(KozepChain {
        first_below_0_2: first.hi_below(&BigInt::from(20), &hundred),
        middle_below_0_71: middle.hi_below(&BigInt::from(71), &hundred),
        total_below_0_92: rounded_total.hi_below(&BigInt::from(92), &hundred)
            && stages_sum.hi_below(&BigInt::from(92), &hundred),
        first,
        middle,
        tail,
        stages_sum,
        rounded_total,
    })
}

/// For a concrete `n >= 100`, whether each part of the `t = 5` ratio
/// (top term, levels 6..=15, levels 16..=n) is at most the matching stage
/// of [`kozep_chain`]. Comparisons use the safe ends of both enclosures.
pub fn kozep_chain_dominates(n: u32, precision_bits: u32) -> Result<[bool; 3]> {
    if n < 100 {
        return Err(Error::Domain(format!("n = {n} is below 100")));
    }
    let chain = kozep_chain(precision_bits)?;
    let p = precision_bits;
    let pascal = Pascal::new(n);
    let logs = Log2Table::new(n as u64, p);
    let denom = pascal.central(n);
    let weight = |l: u32| {
        logs.get(l as u64)
            .scale(&BigUint::from(l))
            .add(&RatioInterval::exact(&BigInt::from(2), p))
    };
    let first = RatioInterval::from_uint(&(pascal.central(n - 5) * 6u32), p).div_uint(denom)?;
    let part = |range: std::ops::RangeInclusive<u32>| {
        range
            .fold(RatioInterval::zero(p), |acc, l| {
                acc.add(&weight(l).scale(pascal.central(n - l)))
            })
            .div_uint(denom)
    };
    let middle = part(6..=15)?;
    let tail = part(16..=n)?;
    let le = |a: &RatioInterval, b: &RatioInterval| a.hi_scaled() <= b.lo_scaled();
    Ok([
        le(&first, &chain.first),
        le(&middle, &chain.middle),
        le(&tail, &chain.tail),
    ])
}

/// `alpha = num / den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Alpha {
    pub num: u64,
    pub den: u64,
}

impl Alpha {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num == 0 || 2 * num >= den {
            return Err(Error::Domain(format!(
                "alpha = {num}/{den} must lie strictly between 0 and 1/2"
            )));
        }
        Ok(Self { num, den })
    }

    /// `floor(alpha * n)`.
    pub fn slice_size(&self, n: u32) -> u32 {
        ((n as u128 * self.num as u128) / self.den as u128) as u32
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AlfaReport {
    pub alpha: Alpha,
    pub c: u32,
    pub n: u32,
    pub k: u32,
    pub verdict: AlfaVerdict,
    pub lhs: RatioInterval,
    pub binom: String,
    pub precision_bits: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AlfaVerdict {
    Holds,
    Fails,
    Indeterminate,
}

/// Check `sum_{l=C}^{n} log2(l) sum_{i=k-l}^{k} binom(n-l, i) < binom(n, k)`
/// with `k = floor(alpha n)`. `precision_bits` is the starting precision;
/// undecided comparisons are retried at doubled precision up to the ceiling.
pub fn alfa_inequality(alpha: Alpha, c: u32, n: u32, precision_bits: u32) -> Result<AlfaReport> {
    check_precision(precision_bits)?;
    if c < 2 {
        return Err(Error::Domain(format!("C = {c} is below 2")));
    }
    let k = alpha.slice_size(n);
    let profile = LevelProfile::new(n, k);
    let rhs = binom_ext(n as i64, k as i64);
    let rhs_int = BigInt::from(rhs.clone());
    let mut p = precision_bits;
    loop {
        let logs = Log2Table::new(n as u64, p);
        let lhs = (c..=n).fold(RatioInterval::zero(p), |acc, l| {
            acc.add(&logs.get(l as u64).scale(&profile.vertices[l as usize]))
        });
        let verdict = match lhs.compare_int(&rhs_int) {
            Some(std::cmp::Ordering::Less) => AlfaVerdict::Holds,
            Some(_) => AlfaVerdict::Fails,
            None => AlfaVerdict::Indeterminate,
        };
        if verdict != AlfaVerdict::Indeterminate || p * 2 > MAX_PRECISION {
            return Ok(AlfaReport {
                alpha,
                c,
                n,
                k,
                verdict,
                lhs,
                binom: rhs.to_string(),
                precision_bits: p,
            });
        }
        p *= 2;
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundCertificate {
    pub n: u32,
    pub k: u32,
    /// Smallest certified `t`, if any.
    pub t: Option<u32>,
    pub verdict: CertificateVerdict,
    /// Upper end of `log2 g(n,k,t)` rounded up.
    pub log2_g_hi: String,
    /// `binom(n, k)`.
    pub binom: String,
    /// Enclosure of `log2 g(n,k,t) - binom(n,k)`.
    pub margin: RatioInterval,
    /// Every `t` in `0..=n` whose comparison certified.
    pub certified_t: Vec<u32>,
    /// No certified `t` is followed by an uncertified one.
    pub upward_closed: bool,
    pub precision_bits: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateVerdict {
    Certified,
    NotCertified,
}

/// Scan `t = 0..=n` for `log2 g(n,k,t) < binom(n,k)`; the smallest such `t`
/// proves `E_k(n) <= t`.
pub fn certify_e_upper(n: u32, k: u32) -> Result<BoundCertificate> {
    if n < 2 || k < 1 || k > n - 1 {
        return Err(Error::Domain(format!(
            "need 1 <= k <= n - 1, got n = {n}, k = {k}"
        )));
    }
    let profile = LevelProfile::new(n, k);
    let binom = binom_ext(n as i64, k as i64);
    let binom_int = BigInt::from(binom.clone());
    let (_, (margins, logs), precision_bits) = escalate(|p| {
        let logs = profile.log2_g_all(p)?;
        let margins: Vec<RatioInterval> = logs
            .iter()
            .map(|l| l.sub(&RatioInterval::exact(&binom_int, p)))
            .collect();
        let zero = BigInt::zero();
        let undecided = margins.iter().any(|m| m.compare_int(&zero).is_none());
        let v = if undecided {
            Verdict::Indeterminate
        } else {
            Verdict::Certified
        };
        Ok((v, (margins, logs)))
    })?;
    let zero = BigInt::zero();
    let certified_t: Vec<u32> = margins
        .iter()
        .enumerate()
        .filter(|(_, m)| m.compare_int(&zero) == Some(std::cmp::Ordering::Less))
        .map(|(t, _)| t as u32)
        .collect();
    let t = certified_t.first().copied();
    let upward_closed = match t {
        Some(t0) => certified_t.len() as u32 == n + 1 - t0,
        None => true,
    };
    let shown = t.unwrap_or(n) as usize;
    Ok(BoundCertificate {
        n,
        k,
        t,
        verdict: if t.is_some() {
            CertificateVerdict::Certified
        } else {
            CertificateVerdict::NotCertified
        },
        log2_g_hi: logs[shown].hi_decimal(6),
        binom: binom.to_string(),
        margin: margins[shown].clone(),
        certified_t,
        upward_closed,
        precision_bits,
    })
}

/// A level where the rewriting
/// `l^{V(l)-L(l)} 2^{L(l)} <= 2^{(l log2 l + 2) C(n-l)}` (or the top-level
/// `V(t) <= (t+1) C(n-t)`) fails or cannot be decided.
#[derive(Debug, Clone, Serialize)]
pub struct MajorizationIssue {
    pub n: u32,
    pub k: u32,
    /// `"level"` or `"top"`.
    pub kind: &'static str,
    pub index: u32,
    pub verdict: Verdict,
}

/// Check both exponent rewritings for every level `l` and every top level
/// `t` at one `(n, k)`. Returns the failures; empty means all certified.
pub fn majorization_check(n: u32, k: u32) -> Result<Vec<MajorizationIssue>> {
    check_nkt(n, k, 0)?;
    let pascal = Pascal::new(n);
    let profile = LevelProfile::with_pascal(n, k, &pascal);
    let mut issues = Vec::new();
    for t in 0..=n {
        let rhs = pascal.central(n - t) * BigUint::from(t + 1);
        if profile.vertices[t as usize] > rhs {
            issues.push(MajorizationIssue {
                n,
                k,
                kind: "top",
                index: t,
                verdict: Verdict::Refuted,
            });
        }
    }
    for l in 1..=n {
        let central = BigInt::from(pascal.central(n - l).clone());
        let exp = BigInt::from(profile.label_exponent(l)?);
        let leaves = BigInt::from(profile.leaves[l as usize].clone());
        // rhs - lhs = (l C - (V - L)) log2 l + (2 C - L)
        let log_coeff = BigInt::from(l) * &central - exp;
        let constant = BigInt::from(2) * &central - leaves;
        let (verdict, _, _) = escalate(|p| {
            let log = crate::interval::log2_u64(l as u64, p)?;
            let diff = scale_signed(&log, &log_coeff).add(&RatioInterval::exact(&constant, p));
            let v = match diff.compare_int(&BigInt::zero()) {
                Some(std::cmp::Ordering::Less) => Verdict::Refuted,
                Some(_) => Verdict::Certified,
                None if diff.lo_scaled() >= &BigInt::zero() => Verdict::Certified,
                None => Verdict::Indeterminate,
            };
            Ok((v, ()))
        })?;
        if verdict != Verdict::Certified {
            issues.push(MajorizationIssue {
                n,
                k,
                kind: "level",
                index: l,
                verdict,
            });
        }
    }
    Ok(issues)
}

fn scale_signed(x: &RatioInterval, factor: &BigInt) -> RatioInterval {
    let mag = factor.magnitude();
    let scaled = x.scale(mag);
    if factor.sign() == num_bigint::Sign::Minus {
        RatioInterval::zero(x.precision_bits()).sub(&scaled)
    } else {
        scaled
    }
}
