//! The Disc-max-d slice function and its completion oracles.
//!
//! A board is a partial `±1` sequence; `+1` at position `i` means `i` is in
//! the set. On the slice `binom([n], n/2)` a completion is *balanced*: it
//! has exactly `n/2` plus signs. `Disc-max-d` is true iff every prefix sum
//! of the completed board has absolute value at most `d`.
//!
//! Half-integer thresholds are compared in doubled integers throughout.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::slice::{QueryState, SliceDomain, SliceFunction, SliceOracle, SubsetMask, ValueSet};
use crate::solver::{solve_depth, DepthResult};

/// Largest board the exhaustive sweeps walk (`3^n` boards).
pub const SWEEP_MAX_N: u32 = 14;

/// Boards kept verbatim in a sweep report; the rest are only counted.
pub const REPORTED_EXAMPLES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Board {
    cells: Vec<i8>,
}

impl Board {
    pub fn empty(n: usize) -> Self {
        Self { cells: vec![0; n] }
    }

    pub fn from_cells(cells: Vec<i8>) -> Result<Self> {
        if let Some(c) = cells.iter().find(|c| !(-1..=1).contains(*c)) {
            return Err(Error::Domain(format!("cell value {c} is not -1, 0 or +1")));
        }
        Ok(Self { cells })
    }

    /// Cells from a query state: queried ones are `+1`, queried zeros `-1`.
    pub fn from_state(st: &QueryState, n: u32) -> Self {
        let cells = (1..=n)
            .map(|p| match (st.is_queried(p), st.ones >> (p - 1) & 1 == 1) {
                (false, _) => 0,
                (true, true) => 1,
                (true, false) => -1,
            })
            .collect();
        Self { cells }
    }

    pub fn from_mask(s: SubsetMask, n: u32) -> Self {
        Self {
            cells: (1..=n)
                .map(|p| if s.contains(p) { 1 } else { -1 })
                .collect(),
        }
    }

    /// Accepts `"+-.+"` strings or JSON arrays such as `[1,-1,0,1]`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('[') {
            let raw: Vec<i64> = serde_json::from_str(text)
                .map_err(|e| Error::Parse(format!("board array: {e}")))?;
            return raw
                .into_iter()
                .map(|c| match c {
                    -1..=1 => Ok(c as i8),
                    _ => Err(Error::Parse(format!("cell value {c} is not -1, 0 or +1"))),
                })
                .collect::<Result<Vec<_>>>()
                .map(|cells| Self { cells });
        }
        text.chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                '.' | '0' => Ok(0),
                _ => Err(Error::Parse(format!("unexpected board character {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(|cells| Self { cells })
    }

    pub fn n(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[i8] {
        &self.cells
    }

    /// Cell at 1-indexed `position`.
    pub fn get(&self, position: usize) -> i8 {
        self.cells[position - 1]
    }

    pub fn set(&mut self, position: usize, sign: i8) {
        self.cells[position - 1] = sign;
    }

    pub fn plus_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c == 1).count()
    }

    pub fn minus_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c == -1).count()
    }

    pub fn unqueried(&self) -> usize {
        self.cells.iter().filter(|&&c| c == 0).count()
    }

    pub fn is_complete(&self) -> bool {
        self.unqueried() == 0
    }

    pub fn is_slice_consistent(&self) -> bool {
        let half = self.n() / 2;
        self.n().is_multiple_of(2) && self.plus_count() <= half && self.minus_count() <= half
    }

    pub fn is_balanced(&self) -> bool {
        self.is_complete() && self.plus_count() * 2 == self.n()
    }

    /// Prefix sums `disc(1, j)` for `j = 1..=n`.
    pub fn prefix_discs(&self) -> Vec<i64> {
        self.cells
            .iter()
            .scan(0i64, |acc, &c| {
                *acc += c as i64;
                Some(*acc)
            })
            .collect()
    }

    pub fn max_prefix_disc(&self) -> i64 {
        self.prefix_discs()
            .into_iter()
            .map(i64::abs)
            .max()
            .unwrap_or(0)
    }

    /// `max |disc(i, j)|` over all intervals.
    pub fn max_interval_disc(&self) -> i64 {
        let p = std::iter::once(0).chain(self.prefix_discs());
        let (lo, hi) = p.fold((0, 0), |(lo, hi), x| (lo.min(x), hi.max(x)));
        hi - lo
    }

    pub fn to_state(&self) -> Result<QueryState> {
        if self.n() > 63 {
            return Err(Error::Domain(format!(
                "board of length {} exceeds 63",
                self.n()
            )));
        }
        let (mut queried, mut ones) = (0u64, 0u64);
        for (i, &c) in self.cells.iter().enumerate() {
            if c != 0 {
                queried |= 1 << i;
            }
            if c == 1 {
                ones |= 1 << i;
            }
        }
        Ok(QueryState { queried, ones })
    }

    /// `3^n` boards indexed in base 3, digit `i` (0, 1, 2) for `0, +1, -1`.
    pub(crate) fn from_index(mut idx: u64, n: usize) -> Self {
        let cells = (0..n)
            .map(|_| {
                let c = [0, 1, -1][(idx % 3) as usize];
                idx /= 3;
                c
            })
            .collect();
        Self { cells }
    }

    pub(crate) fn index(&self) -> u64 {
        self.cells.iter().rev().fold(0u64, |acc, &c| {
            acc * 3
                + match c {
                    0 => 0,
                    1 => 1,
                    _ => 2,
                }
        })
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.cells {
            f.write_str(match c {
                1 => "+",
                -1 => "-",
                _ => ".",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Board {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl Serialize for Board {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Disc-max-d on a complete board.
pub fn eval_discmax(b: &Board, d: i64) -> Result<bool> {
    if !b.is_complete() {
        return Err(Error::Domain(format!("board {b} has unqueried cells")));
    }
    Ok(b.max_prefix_disc() <= d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntervalStats {
    pub disc: i64,
    pub unq: i64,
}

/// `disc(i, j)` and `unq(i, j)`, 1-indexed and inclusive.
pub fn interval_stats(b: &Board, i: usize, j: usize) -> Result<IntervalStats> {
    if i == 0 || i > j || j > b.n() {
        return Err(Error::Domain(format!(
            "interval [{i}, {j}] is not inside [1, {}]",
            b.n()
        )));
    }
    let cells = &b.cells[i - 1..j];
    Ok(IntervalStats {
        disc: cells.iter().map(|&c| c as i64).sum(),
        unq: cells.iter().filter(|&&c| c == 0).count() as i64,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    TrueValue,
    FalseValue,
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "true" | "true_value" | "1" => Ok(Target::TrueValue),
            "false" | "false_value" | "0" => Ok(Target::FalseValue),
            _ => Err(Error::Parse(format!("unknown target {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeasibilityVerdict {
    pub feasible: bool,
    pub witness: Option<Board>,
}

fn check_slice_board(b: &Board) -> Result<()> {
    if !b.is_slice_consistent() {
        return Err(Error::Domain(format!(
            "board {b} is not slice-consistent (odd length or more than n/2 of one sign)"
        )));
    }
    Ok(())
}

/// Whether some balanced completion of `b` makes Disc-max-d equal to the
/// target, with a witness.
///
/// Backward table over (position, running disc, exceeded); a balanced
/// completion is one ending at disc 0.
pub fn feasible_exact(b: &Board, d: i64, target: Target) -> Result<FeasibilityVerdict> {
    check_slice_board(b)?;
    let n = b.n();
    let off = n as i64;
    let width = 2 * n + 1;
    let idx = |pos: usize, disc: i64, flag: bool| {
        (pos * width + (disc + off) as usize) * 2 + flag as usize
    };
    let want_flag = target == Target::FalseValue;
    // ok[pos, disc, flag]: the suffix from pos can end balanced with the wanted flag
    let mut ok = vec![false; (n + 1) * width * 2];
    ok[idx(n, 0, want_flag)] = true;
    let step = |disc: i64, flag: bool, c: i8| {
        let nd = disc + c as i64;
        (nd, flag || nd.abs() > d)
    };
    for pos in (0..n).rev() {
        let choices: &[i8] = match b.cells[pos] {
            0 => &[1, -1],
            1 => &[1],
            _ => &[-1],
        };
        for disc in -(pos as i64)..=pos as i64 {
            for flag in [false, true] {
                ok[idx(pos, disc, flag)] = choices.iter().any(|&c| {
                    let (nd, nf) = step(disc, flag, c);
                    ok[idx(pos + 1, nd, nf)]
                });
            }
        }
    }
    if !ok[idx(0, 0, false)] {
        return Ok(FeasibilityVerdict {
            feasible: false,
            witness: None,
        });
    }
    let mut witness = b.clone();
    let (mut disc, mut flag) = (0i64, false);
    for pos in 0..n {
        let choices: &[i8] = match b.cells[pos] {
            0 => &[1, -1],
            1 => &[1],
            _ => &[-1],
        };
        let c = *choices
            .iter()
            .find(|&&c| {
                let (nd, nf) = step(disc, flag, c);
                ok[idx(pos + 1, nd, nf)]
            })
            .expect("table says a continuation exists");
        witness.cells[pos] = c;
        (disc, flag) = step(disc, flag, c);
    }
    Ok(FeasibilityVerdict {
        feasible: true,
        witness: Some(witness),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    Ii,
    #[serde(rename = "i_prime")]
    IPrime,
    #[serde(rename = "ii_prime")]
    IiPrime,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::I, Variant::Ii, Variant::IPrime, Variant::IiPrime];

    /// Outcome the hypothesis promises is still possible.
    pub fn target(self) -> Target {
        match self {
            Variant::I | Variant::IPrime => Target::TrueValue,
            Variant::Ii | Variant::IiPrime => Target::FalseValue,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::I => "i",
            Variant::Ii => "ii",
            Variant::IPrime => "i_prime",
            Variant::IiPrime => "ii_prime",
        }
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "i" => Ok(Variant::I),
            "ii" => Ok(Variant::Ii),
            "i_prime" | "i'" => Ok(Variant::IPrime),
            "ii_prime" | "ii'" => Ok(Variant::IiPrime),
            _ => Err(Error::Parse(format!("unknown claim variant {s:?}"))),
        }
    }
}

/// The hypothesis of one claim variant on the board.
///
/// * `i`: `2 |disc(1,j)| <= d` for all `j`
/// * `ii`: `|disc(1,j)| <= d` for all `j`, and at least `3d+1` unqueried
/// * `i_prime`: `|disc(i,j)| <= d + unq(i,j) - 3` for all `i <= j`
/// * `ii_prime`: `2 |disc(1,j)| <= 2d + unq(1,j)` for all `j`, and at least
///   `6d+1` unqueried
pub fn claim_condition(b: &Board, d: i64, variant: Variant) -> bool {
    let n = b.n();
    let unq_total = b.unqueried() as i64;
    let mut prefix = Vec::with_capacity(n + 1);
    let mut unq_prefix = Vec::with_capacity(n + 1);
    prefix.push(0i64);
    unq_prefix.push(0i64);
    for &c in &b.cells {
        prefix.push(prefix.last().unwrap() + c as i64);
        unq_prefix.push(unq_prefix.last().unwrap() + (c == 0) as i64);
    }
    let prefixes = || (1..=n).map(|j| (prefix[j].abs(), unq_prefix[j]));
    match variant {
        Variant::I => prefixes().all(|(disc, _)| 2 * disc <= d),
        Variant::Ii => prefixes().all(|(disc, _)| disc <= d) && unq_total > 3 * d,
        Variant::IPrime => (1..=n).all(|i| {
            (i..=n).all(|j| {
                let disc = (prefix[j] - prefix[i - 1]).abs();
                disc <= d + (unq_prefix[j] - unq_prefix[i - 1]) - 3
            })
        }),
        Variant::IiPrime => {
            prefixes().all(|(disc, unq)| 2 * disc <= 2 * d + unq) && unq_total > 6 * d
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Alternating,
    EvenInterval,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alternating" => Ok(Method::Alternating),
            "even_interval" => Ok(Method::EvenInterval),
            _ => Err(Error::Parse(format!("unknown completion method {s:?}"))),
        }
    }
}

/// Outcome of a constructive completion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Completion {
    pub method: Method,
    pub board: Board,
    /// Exactly `n/2` plus signs.
    pub balanced: bool,
    pub max_prefix_disc: i64,
    pub max_interval_disc: i64,
    /// Disc-max-d on the completed board.
    pub value: bool,
}

/// Complete `b` by the claim proofs.
///
/// `alternating` needs hypothesis `i`; it fills the unqueried cells left to
/// right alternating signs, starting with the sign that is still needed more
/// often, and puts the surplus of that sign at the end. The result is always
/// balanced. `order` is ignored.
///
/// `even_interval` needs hypothesis `i_prime`. It fills the unqueried cells
/// in `order` (queried positions in `order` are skipped) keeping every even
/// interval `(i odd, j even)` within `d' + unq`, where `d' = d - 2` for even
/// `d` and `d - 3` for odd `d`. When no strict interval constrains a cell
/// the sign that keeps the board balanced is chosen; balance is reported,
/// not guaranteed.
pub fn complete_constructive(
    b: &Board,
    d: i64,
    method: Method,
    order: &[usize],
) -> Result<Completion> {
    check_slice_board(b)?;
    let board = match method {
        Method::Alternating => {
            if !claim_condition(b, d, Variant::I) {
                return Err(Error::Precondition(format!(
                    "board {b} violates hypothesis i for d = {d}"
                )));
            }
            alternating(b)
        }
        Method::EvenInterval => {
            if !claim_condition(b, d, Variant::IPrime) {
                return Err(Error::Precondition(format!(
                    "board {b} violates hypothesis i_prime for d = {d}"
                )));
            }
            even_interval(b, d, order)?
        }
    };
    Ok(Completion {
        method,
        balanced: board.is_balanced(),
        max_prefix_disc: board.max_prefix_disc(),
        max_interval_disc: board.max_interval_disc(),
        value: eval_discmax(&board, d)?,
        board,
    })
}

fn alternating(b: &Board) -> Board {
    let half = b.n() / 2;
    let plus_needed = half - b.plus_count();
    let minus_needed = half - b.minus_count();
    let (major, pairs) = if plus_needed >= minus_needed {
        (1i8, minus_needed)
    } else {
        (-1i8, plus_needed)
    };
    let mut out = b.clone();
    for (placed, cell) in out.cells.iter_mut().filter(|c| **c == 0).enumerate() {
        *cell = if placed < 2 * pairs && placed % 2 == 1 {
            -major
        } else {
            major
        };
    }
    out
}

fn even_interval(b: &Board, d: i64, order: &[usize]) -> Result<Board> {
    let n = b.n();
    let inner = if d % 2 == 0 { d - 2 } else { d - 3 };
    let mut seen = vec![false; n + 1];
    for &p in order {
        if p == 0 || p > n {
            return Err(Error::Domain(format!(
                "order names position {p} outside [1, {n}]"
            )));
        }
        seen[p] = true;
    }
    if let Some(p) = (1..=n).find(|&p| b.get(p) == 0 && !seen[p]) {
        return Err(Error::Domain(format!("order omits unqueried position {p}")));
    }
    let mut out = b.clone();
    let mut filled = vec![false; n + 1];
    for &p in order {
        if out.get(p) != 0 || filled[p] {
            continue;
        }
        filled[p] = true;
        let (mut positive, mut negative) = (false, false);
        for i in (1..=p).step_by(2) {
            for j in (p.max(i + 1)..=n).filter(|j| (j - i) % 2 == 1) {
                let s = interval_stats(&out, i, j)?;
                if s.disc.abs() == inner + s.unq {
                    positive |= s.disc > 0;
                    negative |= s.disc < 0;
                }
            }
        }
        let sign = match (positive, negative) {
            (true, true) => {
                return Err(Error::Internal(format!(
                    "even-interval completion blocked at position {p} on board {out} (d = {d})"
                )))
            }
            (true, false) => -1,
            (false, true) => 1,
            (false, false) if out.plus_count() < n / 2 => 1,
            (false, false) => -1,
        };
        out.set(p, sign);
    }
    Ok(out)
}

/// The tightness board for `d`, padded to length `n`:
/// `-1` for `i <= floor(d/2)+1`, `0` up to `d+1`, `+1` up to `2d+2`, then
/// `(-1)^i`.
pub fn remark_board(d: i64, n: usize) -> Result<Board> {
    if d < 1 || (n as i64) < 2 * d + 2 || n % 2 == 1 {
        return Err(Error::Domain(format!(
            "remark board needs d >= 1 and even n >= 2d + 2, got d = {d}, n = {n}"
        )));
    }
    let half = d / 2;
    let cells = (1..=n as i64)
        .map(|i| {
            if i <= half + 1 {
                -1
            } else if i <= d + 1 {
                0
            } else if i <= 2 * d + 2 || i % 2 == 0 {
                1
            } else {
                -1
            }
        })
        .collect();
    Ok(Board { cells })
}

/// Disc-max-d on `binom([n], n/2)` with `consistent_values` answered by
/// [`feasible_exact`].
#[derive(Debug, Clone, Copy)]
pub struct DiscMaxOracle {
    pub n: u32,
    pub d: i64,
}

impl SliceOracle for DiscMaxOracle {
    fn eval(&self, s: SubsetMask) -> bool {
        Board::from_mask(s, self.n).max_prefix_disc() <= self.d
    }

    fn consistent_values(&self, st: &QueryState) -> Option<ValueSet> {
        let b = Board::from_state(st, self.n);
        let mut vs = ValueSet::default();
        for (target, value) in [(Target::FalseValue, false), (Target::TrueValue, true)] {
            if feasible_exact(&b, self.d, target).ok()?.feasible {
                vs.insert(value);
            }
        }
        Some(vs)
    }

    fn describe(&self) -> String {
        format!("disc-max-{} on n = {}", self.d, self.n)
    }
}

pub fn discmax_function(n: u32, d: i64) -> Result<SliceFunction> {
    if n % 2 == 1 {
        return Err(Error::Domain(format!("n = {n} must be even")));
    }
    let dom = SliceDomain::new(n, n / 2)?;
    Ok(SliceFunction::oracle(dom, Arc::new(DiscMaxOracle { n, d })))
}

/// Exact `D` and `E = n - D` of Disc-max-d on `binom([n], n/2)`.
pub fn e_discmax(n: u32, d: i64) -> Result<DepthResult> {
    solve_depth(&discmax_function(n, d)?, false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ETableRow {
    pub n: u32,
    pub d: i64,
    #[serde(rename = "D")]
    pub depth: u32,
    #[serde(rename = "E")]
    pub co_depth: u32,
}

/// `E_{n/2}(Disc-max-d)` for every pair, in the order given.
pub fn e_table(ns: &[u32], ds: &[i64]) -> Result<Vec<ETableRow>> {
    let pairs: Vec<(u32, i64)> = ns
        .iter()
        .flat_map(|&n| ds.iter().map(move |&d| (n, d)))
        .collect();
    pairs
        .into_par_iter()
        .map(|(n, d)| {
            let r = e_discmax(n, d)?;
            Ok(ETableRow {
                n,
                d,
                depth: r.depth,
                co_depth: r.co_depth,
            })
        })
        .collect()
}

fn check_sweep_n(n: u32) -> Result<()> {
    if n > SWEEP_MAX_N {
        return Err(Error::resource(
            "exhaustive board sweep (n)",
            n as u128,
            SWEEP_MAX_N as u128,
        ));
    }
    if n % 2 == 1 {
        return Err(Error::Domain(format!("n = {n} must be even")));
    }
    Ok(())
}

/// Every slice-consistent board of length `n`.
pub fn slice_boards(n: u32) -> Result<Vec<Board>> {
    check_sweep_n(n)?;
    Ok((0..3u64.pow(n))
        .into_par_iter()
        .map(|i| Board::from_index(i, n as usize))
        .filter(Board::is_slice_consistent)
        .collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimTally {
    pub n: u32,
    pub d: i64,
    pub variant: Variant,
    pub boards: u64,
    pub hypothesis_holds: u64,
    pub counterexample_count: u64,
    /// Up to [`REPORTED_EXAMPLES`] boards where the hypothesis holds but the
    /// promised outcome is impossible.
    pub counterexamples: Vec<Board>,
}

/// Check every claim variant against [`feasible_exact`] on every
/// slice-consistent board of length `n`.
pub fn claims_sweep(n: u32, d: i64) -> Result<Vec<ClaimTally>> {
    claims_on_boards(n, d, &slice_boards(n)?)
}

/// [`claims_sweep`] over a caller-chosen set of boards of length `n`.
pub fn claims_on_boards(n: u32, d: i64, boards: &[Board]) -> Result<Vec<ClaimTally>> {
    if let Some(b) = boards.iter().find(|b| b.n() != n as usize) {
        return Err(Error::Domain(format!("board {b} does not have length {n}")));
    }
    Variant::ALL
        .iter()
        .map(|&variant| {
            let hits: Vec<(bool, Option<Board>)> = boards
                .par_iter()
                .filter(|b| claim_condition(b, d, variant))
                .map(|b| {
                    let ok = feasible_exact(b, d, variant.target())?.feasible;
                    Ok((ok, (!ok).then(|| b.clone())))
                })
                .collect::<Result<_>>()?;
            let mut counterexamples: Vec<Board> = hits.iter().filter_map(|h| h.1.clone()).collect();
            let counterexample_count = counterexamples.len() as u64;
            counterexamples.truncate(REPORTED_EXAMPLES);
            Ok(ClaimTally {
                n,
                d,
                variant,
                boards: boards.len() as u64,
                hypothesis_holds: hits.len() as u64,
                counterexample_count,
                counterexamples,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct EvenIntervalTally {
    pub n: u32,
    pub d: i64,
    pub hypothesis_boards: u64,
    /// Completions that hit the blocked-sign internal error.
    pub blocked: u64,
    /// Completions ending with some interval above `d`.
    pub bound_violations: u64,
    /// Completions with the interval guarantee but not `n/2` plus signs.
    pub unbalanced: u64,
    /// Hypothesis boards with no balanced completion making Disc-max-d true.
    pub no_balanced_true: u64,
    pub examples: Vec<Board>,
}

/// Run the even-interval completion on every hypothesis board of length
/// `n`, with the order produced by `order_for` for each board.
pub fn even_interval_sweep(
    n: u32,
    d: i64,
    order_for: impl Fn(&Board) -> Vec<usize> + Sync,
) -> Result<EvenIntervalTally> {
    let boards: Vec<Board> = slice_boards(n)?
        .into_par_iter()
        .filter(|b| claim_condition(b, d, Variant::IPrime))
        .collect();
    // (blocked, violation, unbalanced, no balanced true)
    let flags: Vec<([bool; 4], &Board)> = boards
        .par_iter()
        .map(|b| {
            let no_true = !feasible_exact(b, d, Target::TrueValue)?.feasible;
            let f = match complete_constructive(b, d, Method::EvenInterval, &order_for(b)) {
                Ok(c) => [false, c.max_interval_disc > d, !c.balanced, no_true],
                Err(Error::Internal(_)) => [true, false, false, no_true],
                Err(e) => return Err(e),
            };
            Ok((f, b))
        })
        .collect::<Result<_>>()?;
    let count = |k: usize| flags.iter().filter(|f| f.0[k]).count() as u64;
    let examples = flags
        .iter()
        .filter(|f| f.0.iter().any(|&x| x))
        .take(REPORTED_EXAMPLES)
        .map(|f| f.1.clone())
        .collect();
    Ok(EvenIntervalTally {
        n,
        d,
        hypothesis_boards: boards.len() as u64,
        blocked: count(0),
        bound_violations: count(1),
        unbalanced: count(2),
        no_balanced_true: count(3),
        examples,
    })
}
