//! Slices of the Boolean cube and functions on them.
//!
//! Positions are 1-indexed: position `i` of `[n]` lives in bit `i - 1` of a
//! [`SubsetMask`]. Numeric order of `k`-bit masks is colex order, so the
//! truth table of a [`SliceFunction`] is indexed by colex rank.

use std::fmt;
use std::ops::ControlFlow;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest ground set usable with bitmask states.
pub const MAX_N: u32 = 63;

/// Largest truth table (in entries) a table-backed function may hold.
pub const TABLE_BUDGET: u64 = 1 << 32;

/// `binom(a, b)` with the convention that every out-of-range argument
/// (`b < 0`, `b > a`, `a < 0`) gives zero.
pub fn binom_ext(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= BigUint::from((a - i) as u64);
        acc /= BigUint::from((i + 1) as u64);
    }
    acc
}

fn pascal() -> &'static [[u64; 64]; 64] {
    static TABLE: OnceLock<Box<[[u64; 64]; 64]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Box::new([[0u64; 64]; 64]);
        for a in 0..64 {
            t[a][0] = 1;
            for b in 1..=a {
                t[a][b] = t[a - 1][b - 1].saturating_add(t[a - 1][b]);
            }
        }
        t
    })
}

/// Exact `binom(a, b)` for `a < 64` (zero outside `0 <= b <= a`).
pub fn small_binom(a: u32, b: u32) -> u64 {
    if b > a || a >= 64 {
        return 0;
    }
    pascal()[a as usize][b as usize]
}

/// The slice `binom([n], k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SliceDomain {
    n: u32,
    k: u32,
}

impl SliceDomain {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::Domain(format!("n = {n} must lie in 1..={MAX_N}")));
        }
        if k > n {
            return Err(Error::Domain(format!("k = {k} exceeds n = {n}")));
        }
        Ok(Self { n, k })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of slice elements, `binom(n, k)`.
    pub fn size(&self) -> u64 {
        small_binom(self.n, self.k)
    }

    pub fn full_mask(&self) -> u64 {
        low_bits(self.n)
    }

    /// All slice elements in colex order.
    pub fn elements(&self) -> impl Iterator<Item = SubsetMask> {
        combinations(self.n, self.k).map(SubsetMask)
    }
}

impl fmt::Display for SliceDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n, self.k)
    }
}

fn low_bits(m: u32) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

/// `r`-bit masks over `m` bits in increasing numeric order (Gosper's hack).
pub(crate) fn combinations(m: u32, r: u32) -> impl Iterator<Item = u64> {
    let limit = low_bits(m);
    let mut next = if r > m { None } else { Some(low_bits(r)) };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let s = cur.wrapping_add(c);
            if s == 0 {
                None
            } else {
                let nxt = (((s ^ cur) >> 2) / c) | s;
                (nxt <= limit && nxt.count_ones() == r).then_some(nxt)
            }
        };
        Some(cur)
    })
}

/// Scatter the low bits of `compact` onto the set bits of `positions`.
pub(crate) fn deposit(compact: u64, mut positions: u64) -> u64 {
    let mut out = 0;
    let mut bit = 0;
    while positions != 0 {
        let low = positions & positions.wrapping_neg();
        if compact >> bit & 1 == 1 {
            out |= low;
        }
        positions ^= low;
        bit += 1;
    }
    out
}

/// A subset of `[n]`; position `i` is bit `i - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubsetMask(pub u64);

impl SubsetMask {
    pub fn from_positions(positions: &[u32]) -> Result<Self> {
        let mut bits = 0u64;
        for &p in positions {
            if p == 0 || p > MAX_N {
                return Err(Error::Domain(format!("position {p} out of range")));
            }
            bits |= 1 << (p - 1);
        }
        Ok(Self(bits))
    }

    pub fn contains(&self, position: u32) -> bool {
        (1..=64).contains(&position) && self.0 >> (position - 1) & 1 == 1
    }

    pub fn count(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn positions(&self) -> Vec<u32> {
        (0..64)
            .filter(|b| self.0 >> b & 1 == 1)
            .map(|b| b + 1)
            .collect()
    }
}

/// Colex rank: `sum over j in S of binom(j - 1, order of j in S)`, with the
/// order counted from 1.
pub fn colex_rank(s: SubsetMask, d: &SliceDomain) -> Result<u64> {
    if s.count() != d.k || s.0 & !d.full_mask() != 0 {
        return Err(Error::Domain(format!(
            "mask {:#x} is not an element of the slice {d}",
            s.0
        )));
    }
    Ok(s.positions()
        .iter()
        .enumerate()
        .map(|(idx, &j)| small_binom(j - 1, idx as u32 + 1))
        .sum())
}

pub fn colex_unrank(mut rank: u64, d: &SliceDomain) -> Result<SubsetMask> {
    if rank >= d.size() {
        return Err(Error::Domain(format!(
            "rank {rank} out of range for slice {d} of size {}",
            d.size()
        )));
    }
    let mut bits = 0u64;
    let mut hi = d.n;
    for order in (1..=d.k).rev() {
        // largest j - 1 < hi with binom(j - 1, order) <= rank
        let mut j = hi;
        while small_binom(j - 1, order) > rank {
            j -= 1;
        }
        rank -= small_binom(j - 1, order);
        bits |= 1 << (j - 1);
        hi = j - 1;
    }
    Ok(SubsetMask(bits))
}

/// Positions asked so far and which of them were answered "in A".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct QueryState {
    pub queried: u64,
    pub ones: u64,
}

impl QueryState {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validated constructor.
    pub fn new(d: &SliceDomain, queried: u64, ones: u64) -> Result<Self> {
        let st = Self { queried, ones };
        if queried & !d.full_mask() != 0 {
            return Err(Error::Domain("queried positions outside [n]".into()));
        }
        if ones & !queried != 0 {
            return Err(Error::Domain("ones must be a subset of queried".into()));
        }
        if !st.is_consistent(d) {
            return Err(Error::Domain(format!(
                "no element of {d} agrees with {} ones and {} zeros",
                st.ones_count(),
                st.zeros_count()
            )));
        }
        Ok(st)
    }

    pub fn ones_count(&self) -> u32 {
        self.ones.count_ones()
    }

    pub fn zeros_count(&self) -> u32 {
        (self.queried & !self.ones).count_ones()
    }

    pub fn is_queried(&self, position: u32) -> bool {
        self.queried >> (position - 1) & 1 == 1
    }

    /// At least one slice element agrees with the answers.
    pub fn is_consistent(&self, d: &SliceDomain) -> bool {
        self.ones_count() <= d.k && self.zeros_count() <= d.n - d.k
    }

    /// The input is fully known: `k` ones or `n - k` zeros have been seen.
    pub fn is_determined(&self, d: &SliceDomain) -> bool {
        self.ones_count() == d.k || self.zeros_count() == d.n - d.k
    }

    pub fn free(&self, d: &SliceDomain) -> u64 {
        d.full_mask() & !self.queried
    }

    /// Number of consistent slice elements.
    pub fn completions(&self, d: &SliceDomain) -> u64 {
        if !self.is_consistent(d) {
            return 0;
        }
        small_binom(d.n - self.queried.count_ones(), d.k - self.ones_count())
    }

    /// The state after position `i` is answered. Not validated.
    pub fn with_answer(&self, position: u32, in_set: bool) -> Self {
        let bit = 1u64 << (position - 1);
        Self {
            queried: self.queried | bit,
            ones: if in_set { self.ones | bit } else { self.ones },
        }
    }

    /// Visit every consistent slice element.
    pub fn for_each_completion<B>(
        &self,
        d: &SliceDomain,
        mut visit: impl FnMut(SubsetMask) -> ControlFlow<B>,
    ) -> Option<B> {
        if !self.is_consistent(d) {
            return None;
        }
        let free = self.free(d);
        let need = d.k - self.ones_count();
        for c in combinations(free.count_ones(), need) {
            if let ControlFlow::Break(b) = visit(SubsetMask(self.ones | deposit(c, free))) {
                return Some(b);
            }
        }
        None
    }
}

/// Subset of `{0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ValueSet {
    pub zero: bool,
    pub one: bool,
}

impl ValueSet {
    pub const ZERO: ValueSet = ValueSet {
        zero: true,
        one: false,
    };
    pub const ONE: ValueSet = ValueSet {
        zero: false,
        one: true,
    };
    pub const BOTH: ValueSet = ValueSet {
        zero: true,
        one: true,
    };

    pub fn insert(&mut self, v: bool) {
        if v {
            self.one = true
        } else {
            self.zero = true
        }
    }

    pub fn contains(&self, v: bool) -> bool {
        if v {
            self.one
        } else {
            self.zero
        }
    }

    pub fn is_empty(&self) -> bool {
        !self.zero && !self.one
    }

    /// The single value when the set is a singleton.
    pub fn single(&self) -> Option<bool> {
        match (self.zero, self.one) {
            (true, false) => Some(false),
            (false, true) => Some(true),
            _ => None,
        }
    }

    pub fn to_vec(&self) -> Vec<u8> {
        let mut v = Vec::with_capacity(2);
        if self.zero {
            v.push(0);
        }
        if self.one {
            v.push(1);
        }
        v
    }
}

/// Evaluation procedure for slice functions too large to tabulate.
pub trait SliceOracle: Send + Sync {
    fn eval(&self, s: SubsetMask) -> bool;

    /// Optional shortcut for [`SliceFunction::consistent_values`]; `None`
    /// falls back to enumerating the completions.
    fn consistent_values(&self, _st: &QueryState) -> Option<ValueSet> {
        None
    }

    fn describe(&self) -> String;
}

#[derive(Clone)]
pub enum Backing {
    /// Bitset of length `binom(n, k)` in colex order.
    Table(Arc<Vec<u64>>),
    Oracle(Arc<dyn SliceOracle>),
}

impl fmt::Debug for Backing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backing::Table(t) => write!(f, "Table({} words)", t.len()),
            Backing::Oracle(o) => write!(f, "Oracle({})", o.describe()),
        }
    }
}

/// A Boolean function on `binom([n], k)`.
#[derive(Debug, Clone)]
pub struct SliceFunction {
    domain: SliceDomain,
    backing: Backing,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    n: u32,
    k: u32,
    table: String,
}

impl SliceFunction {
    fn check_table_budget(d: &SliceDomain) -> Result<()> {
        if d.size() > TABLE_BUDGET {
            return Err(Error::resource(
                format!("truth table for {d}"),
                d.size() as u128,
                TABLE_BUDGET as u128,
            ));
        }
        Ok(())
    }

    /// Table function from values listed in colex order.
    pub fn from_values(d: SliceDomain, values: &[bool]) -> Result<Self> {
        Self::check_table_budget(&d)?;
        if values.len() as u64 != d.size() {
            return Err(Error::Domain(format!(
                "table has {} entries, slice {d} has {}",
                values.len(),
                d.size()
            )));
        }
        let mut words = vec![0u64; values.len().div_ceil(64)];
        for (i, &v) in values.iter().enumerate() {
            if v {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        Ok(Self {
            domain: d,
            backing: Backing::Table(Arc::new(words)),
        })
    }

    /// Table function whose `i`-th colex entry is bit `i` of `bits`
    /// (slices with at most 64 elements).
    pub fn from_bits(d: SliceDomain, bits: u64) -> Result<Self> {
        if d.size() > 64 {
            return Err(Error::Domain(format!(
                "slice {d} has more than 64 elements"
            )));
        }
        let values: Vec<bool> = (0..d.size()).map(|i| bits >> i & 1 == 1).collect();
        Self::from_values(d, &values)
    }

    /// Tabulate `f` over the slice.
    pub fn from_fn(d: SliceDomain, f: impl Fn(SubsetMask) -> bool) -> Result<Self> {
        Self::check_table_budget(&d)?;
        let values: Vec<bool> = d.elements().map(f).collect();
        Self::from_values(d, &values)
    }

    pub fn constant(d: SliceDomain, value: bool) -> Result<Self> {
        Self::from_fn(d, |_| value)
    }

    pub fn oracle(d: SliceDomain, oracle: Arc<dyn SliceOracle>) -> Self {
        Self {
            domain: d,
            backing: Backing::Oracle(oracle),
        }
    }

    pub fn domain(&self) -> &SliceDomain {
        &self.domain
    }

    pub fn backing(&self) -> &Backing {
        &self.backing
    }

    pub fn is_table(&self) -> bool {
        matches!(self.backing, Backing::Table(_))
    }

    pub fn eval(&self, s: SubsetMask) -> Result<bool> {
        match &self.backing {
            Backing::Table(words) => {
                let r = colex_rank(s, &self.domain)? as usize;
                Ok(words[r / 64] >> (r % 64) & 1 == 1)
            }
            Backing::Oracle(o) => {
                if s.count() != self.domain.k || s.0 & !self.domain.full_mask() != 0 {
                    return Err(Error::Domain(format!("mask {:#x} not in slice", s.0)));
                }
                Ok(o.eval(s))
            }
        }
    }

    /// Entry at colex rank `r` of a table function (unchecked bound).
    pub(crate) fn table_entry(words: &[u64], r: u64) -> bool {
        words[(r / 64) as usize] >> (r % 64) & 1 == 1
    }

    /// Values in colex order.
    pub fn values(&self) -> Result<Vec<bool>> {
        match &self.backing {
            Backing::Table(words) => Ok((0..self.domain.size())
                .map(|r| Self::table_entry(words, r))
                .collect()),
            Backing::Oracle(o) => {
                Self::check_table_budget(&self.domain)?;
                Ok(self.domain.elements().map(|s| o.eval(s)).collect())
            }
        }
    }

    /// Tabulated copy of this function.
    pub fn to_table(&self) -> Result<Self> {
        Self::from_values(self.domain, &self.values()?)
    }

    /// `{ f(A) : A in the slice agrees with st }`.
    pub fn consistent_values(&self, st: &QueryState) -> Result<ValueSet> {
        let d = &self.domain;
        if st.ones & !st.queried != 0 || st.queried & !d.full_mask() != 0 || !st.is_consistent(d) {
            return Err(Error::Domain(format!(
                "query state {{queried: {:#x}, ones: {:#x}}} has no consistent element of {d}",
                st.queried, st.ones
            )));
        }
        if let Backing::Oracle(o) = &self.backing {
            if let Some(vs) = o.consistent_values(st) {
                return Ok(vs);
            }
        }
        let mut vs = ValueSet::default();
        match &self.backing {
            Backing::Table(words) => {
                st.for_each_completion(d, |s| {
                    // rank is valid: s is a slice element by construction
                    let r = colex_rank(s, d).expect("completion lies in the slice");
                    vs.insert(Self::table_entry(words, r));
                    if vs.zero && vs.one {
                        ControlFlow::Break(())
                    } else {
                        ControlFlow::Continue(())
                    }
                });
            }
            Backing::Oracle(o) => {
                st.for_each_completion(d, |s| {
                    vs.insert(o.eval(s));
                    if vs.zero && vs.one {
                        ControlFlow::Break(())
                    } else {
                        ControlFlow::Continue(())
                    }
                });
            }
        }
        Ok(vs)
    }

    fn table_string(&self) -> Result<String> {
        Ok(self
            .values()?
            .iter()
            .map(|&v| if v { '1' } else { '0' })
            .collect())
    }

    /// `slice n k` header line followed by the table in colex order.
    pub fn to_slice_text(&self) -> Result<String> {
        Ok(format!(
            "slice {} {}\n{}\n",
            self.domain.n,
            self.domain.k,
            self.table_string()?
        ))
    }

    pub fn to_json(&self) -> Result<String> {
        let doc = TableJson {
            n: self.domain.n,
            k: self.domain.k,
            table: self.table_string()?,
        };
        serde_json::to_string(&doc).map_err(|e| Error::Parse(e.to_string()))
    }

    fn from_table_string(n: u32, k: u32, table: &str) -> Result<Self> {
        let d = SliceDomain::new(n, k)?;
        let values = table
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!(
                    "unexpected table character {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_values(d, &values)
    }

    /// Parse either the `slice n k` text form or the JSON form.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            let doc: TableJson =
                serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
            return Self::from_table_string(doc.n, doc.k, &doc.table);
        }
        let (header, body) = trimmed.split_once('\n').unwrap_or((trimmed, ""));
        let mut parts = header.split_whitespace();
        if parts.next() != Some("slice") {
            return Err(Error::Parse("missing `slice n k` header".into()));
        }
        let mut num = |what: &str| -> Result<u32> {
            parts
                .next()
                .ok_or_else(|| Error::Parse(format!("header lacks {what}")))?
                .parse()
                .map_err(|e| Error::Parse(format!("bad {what}: {e}")))
        };
        let n = num("n")?;
        let k = num("k")?;
        Self::from_table_string(n, k, body)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dom(n: u32, k: u32) -> SliceDomain {
        SliceDomain::new(n, k).unwrap()
    }

    #[test]
    fn binom_ext_conventions() {
        assert_eq!(binom_ext(4, 2), BigUint::from(6u32));
        assert_eq!(binom_ext(0, 0), BigUint::one());
        assert_eq!(binom_ext(-1, 3), BigUint::zero());
        assert_eq!(binom_ext(-1, 0), BigUint::zero());
        assert_eq!(binom_ext(3, -1), BigUint::zero());
        assert_eq!(binom_ext(3, 4), BigUint::zero());
        assert_eq!(
            binom_ext(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn small_binom_matches_big() {
        for a in 0..64u32 {
            for b in 0..=a {
                assert_eq!(
                    BigUint::from(small_binom(a, b)),
                    binom_ext(a as i64, b as i64)
                );
            }
        }
    }

    #[test]
    fn colex_endpoints() {
        let d = dom(4, 2);
        let first = SubsetMask::from_positions(&[1, 2]).unwrap();
        let last = SubsetMask::from_positions(&[3, 4]).unwrap();
        assert_eq!(colex_rank(first, &d).unwrap(), 0);
        assert_eq!(colex_rank(last, &d).unwrap(), 5);
        assert!(colex_rank(SubsetMask::from_positions(&[1]).unwrap(), &d).is_err());
        assert!(colex_unrank(6, &d).is_err());
    }

    #[test]
    fn colex_bijection_exhaustive() {
        for n in 1..=12 {
            for k in 0..=n {
                let d = dom(n, k);
                for (r, s) in d.elements().enumerate() {
                    assert_eq!(colex_rank(s, &d).unwrap(), r as u64);
                    assert_eq!(colex_unrank(r as u64, &d).unwrap(), s);
                }
                assert_eq!(d.elements().count() as u64, d.size());
            }
        }
    }

    #[test]
    fn consistent_values_examples() {
        let d = dom(4, 2);
        let zero = SliceFunction::constant(d, false).unwrap();
        assert_eq!(
            zero.consistent_values(&QueryState::empty()).unwrap(),
            ValueSet::ZERO
        );

        let dictator = SliceFunction::from_fn(d, |s| s.contains(1)).unwrap();
        let st = QueryState::new(&d, 0b1, 0b1).unwrap();
        assert_eq!(dictator.consistent_values(&st).unwrap(), ValueSet::ONE);
        assert_eq!(
            dictator.consistent_values(&QueryState::empty()).unwrap(),
            ValueSet::BOTH
        );
    }

    #[test]
    fn inconsistent_state_rejected() {
        let d = dom(4, 2);
        assert!(QueryState::new(&d, 0b111, 0b111).is_err());
        assert!(QueryState::new(&d, 0b111, 0).is_err());
        assert!(QueryState::new(&d, 0b1, 0b10).is_err());
        let f = SliceFunction::constant(d, true).unwrap();
        let bad = QueryState {
            queried: 0b111,
            ones: 0b111,
        };
        assert!(matches!(f.consistent_values(&bad), Err(Error::Domain(_))));
    }

    #[test]
    fn consistent_values_against_naive() {
        // every function on (4,2) and (5,2) sampled, every consistent state
        for (n, k) in [(4u32, 2u32), (3, 1), (5, 2), (6, 3)] {
            let d = dom(n, k);
            let size = d.size();
            for bits in [0u64, 1, 0b1011, 0x2a5, 0xfff0f, 0x5a5a5a5a] {
                let bits = bits & ((1u64 << size) - 1);
                let f = SliceFunction::from_bits(d, bits).unwrap();
                for queried in 0..(1u64 << n) {
                    let mut ones = queried;
                    loop {
                        let st = QueryState { queried, ones };
                        if st.is_consistent(&d) {
                            let mut naive = ValueSet::default();
                            for (r, s) in d.elements().enumerate() {
                                if s.0 & queried == ones {
                                    naive.insert(bits >> r & 1 == 1);
                                }
                            }
                            assert_eq!(f.consistent_values(&st).unwrap(), naive);
                            assert!(st.completions(&d) > 0);
                        }
                        if ones == 0 {
                            break;
                        }
                        ones = (ones - 1) & queried;
                    }
                }
            }
        }
    }

    #[test]
    fn text_and_json_forms() {
        let d = dom(4, 2);
        let f = SliceFunction::from_fn(d, |s| s.contains(1) ^ s.contains(4)).unwrap();
        let text = f.to_slice_text().unwrap();
        assert!(text.starts_with("slice 4 2\n"));
        let back = SliceFunction::parse(&text).unwrap();
        assert_eq!(back.values().unwrap(), f.values().unwrap());
        let json = f.to_json().unwrap();
        assert!(json.starts_with("{\"n\":4,\"k\":2,\"table\":\""));
        let back = SliceFunction::parse(&json).unwrap();
        assert_eq!(back.values().unwrap(), f.values().unwrap());
        assert!(SliceFunction::parse("slice 4 2\n0101").is_err());
        assert!(SliceFunction::parse("slice 4 2\n01x101").is_err());
        assert!(SliceFunction::parse("slab 4 2\n010101").is_err());
    }

    proptest! {
        #[test]
        fn unrank_rank_roundtrip(n in 1u32..=40, k_frac in 0.0f64..=1.0, r_frac in 0.0f64..1.0) {
            let k = ((n as f64) * k_frac).floor() as u32;
            let d = dom(n, k);
            let r = ((d.size() as f64) * r_frac).floor() as u64;
            let r = r.min(d.size() - 1);
            let s = colex_unrank(r, &d).unwrap();
            prop_assert_eq!(s.count(), k);
            prop_assert_eq!(colex_rank(s, &d).unwrap(), r);
        }
    }
}
