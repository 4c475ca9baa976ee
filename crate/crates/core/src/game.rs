//! The Positioner/Signgiver discrepancy games.
//!
//! Positioner names an unqueried position, Signgiver writes `+1` or `-1`
//! there. The score of a board is either the largest prefix discrepancy
//! (`prefix_max`) or the largest `|disc(i,j)| - unq(i,j)/2` over intervals
//! (`interval_minus_half_unq`). Positioner maximises the largest score seen
//! during the game, Signgiver minimises it. Scores are stored doubled so the
//! half-integers of the second game stay exact.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::discmax::{e_discmax, Board};
use crate::error::{Error, Result};

/// Largest `3^n` memo [`game_value`] and [`exploit`] will allocate.
pub const GAME_STATE_BUDGET: u64 = 14_348_907; // 3^15

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scoring {
    PrefixMax,
    IntervalMinusHalfUnq,
}

impl FromStr for Scoring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prefix" | "prefix_max" => Ok(Scoring::PrefixMax),
            "interval" | "interval_minus_half_unq" => Ok(Scoring::IntervalMinusHalfUnq),
            _ => Err(Error::Parse(format!("unknown scoring {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GameSpec {
    pub n: u32,
    pub scoring: Scoring,
}

impl GameSpec {
    pub fn new(n: u32, scoring: Scoring) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("the game needs n >= 1".into()));
        }
        Ok(Self { n, scoring })
    }
}

/// Twice the score of `b`.
pub fn score_doubled(b: &Board, scoring: Scoring) -> i64 {
    match scoring {
        Scoring::PrefixMax => 2 * b.max_prefix_disc(),
        Scoring::IntervalMinusHalfUnq => {
            let n = b.n();
            let mut best = i64::MIN;
            for i in 0..n {
                let (mut disc, mut unq) = (0i64, 0i64);
                for &c in &b.cells()[i..] {
                    disc += c as i64;
                    unq += (c == 0) as i64;
                    best = best.max(2 * disc.abs() - unq);
                }
            }
            best
        }
    }
}

/// A doubled score as a JSON number: an integer when whole, else `x.5`.
pub fn half_number(doubled: i64) -> serde_json::Number {
    if doubled % 2 == 0 {
        serde_json::Number::from(doubled / 2)
    } else {
        serde_json::Number::from_f64(doubled as f64 / 2.0).expect("finite")
    }
}

fn serialize_half<S: Serializer>(doubled: &i64, s: S) -> std::result::Result<S::Ok, S::Error> {
    half_number(*doubled).serialize(s)
}

/// One move of a match.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceStep {
    pub position: usize,
    pub sign: i8,
    /// Doubled running peak after the move.
    pub peak_doubled: i64,
}

/// A played or partially played game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveTrace {
    pub spec: GameSpec,
    pub steps: Vec<TraceStep>,
}

impl MoveTrace {
    pub fn new(spec: GameSpec) -> Self {
        Self {
            spec,
            steps: Vec::new(),
        }
    }

    pub fn peak_doubled(&self) -> Option<i64> {
        self.steps.last().map(|s| s.peak_doubled)
    }

    pub fn board(&self) -> Board {
        let mut b = Board::empty(self.spec.n as usize);
        for s in &self.steps {
            b.set(s.position, s.sign);
        }
        b
    }

    /// Record a legal move and return its step.
    pub fn apply(&mut self, position: usize, sign: i8) -> Result<TraceStep> {
        let mut b = self.board();
        check_position(&b, position)?;
        if sign != 1 && sign != -1 {
            return Err(Error::Domain(format!("sign {sign} is not +1 or -1")));
        }
        b.set(position, sign);
        let score = score_doubled(&b, self.spec.scoring);
        let step = TraceStep {
            position,
            sign,
            peak_doubled: self.peak_doubled().map_or(score, |p| p.max(score)),
        };
        self.steps.push(step);
        Ok(step)
    }

    /// One JSON object per move: `{"move","position","sign","peak"}`.
    pub fn json_lines(&self) -> String {
        self.steps
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let mut line = serde_json::to_string(&StepJson {
                    index: i + 1,
                    step: s,
                })
                .expect("plain JSON");
                line.push('\n');
                line
            })
            .collect()
    }
}

struct StepJson<'a> {
    index: usize,
    step: &'a TraceStep,
}

impl Serialize for StepJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(4))?;
        m.serialize_entry("move", &self.index)?;
        m.serialize_entry("position", &self.step.position)?;
        m.serialize_entry("sign", &self.step.sign)?;
        m.serialize_entry("peak", &half_number(self.step.peak_doubled))?;
        m.end()
    }
}

impl Serialize for MoveTrace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let steps: Vec<StepJson> = self
            .steps
            .iter()
            .enumerate()
            .map(|(i, step)| StepJson { index: i + 1, step })
            .collect();
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("spec", &self.spec)?;
        m.serialize_entry("moves", &steps)?;
        m.serialize_entry("peak", &self.peak_doubled().map(half_number))?;
        m.end()
    }
}

fn check_position(b: &Board, position: usize) -> Result<()> {
    if position == 0 || position > b.n() {
        return Err(Error::Domain(format!(
            "position {position} outside [1, {}]",
            b.n()
        )));
    }
    if b.get(position) != 0 {
        return Err(Error::Domain(format!(
            "position {position} was already queried"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StrategyId {
    Optimal,
    PositionerBisection,
    SigngiverSqrtBlocks,
}

impl FromStr for StrategyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "optimal" => Ok(StrategyId::Optimal),
            "bisection" | "positioner_bisection" => Ok(StrategyId::PositionerBisection),
            "sqrt_blocks" | "signgiver_sqrt_blocks" => Ok(StrategyId::SigngiverSqrtBlocks),
            _ => Err(Error::Parse(format!("unknown strategy {s:?}"))),
        }
    }
}

impl fmt::Display for StrategyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StrategyId::Optimal => "optimal",
            StrategyId::PositionerBisection => "positioner_bisection",
            StrategyId::SigngiverSqrtBlocks => "signgiver_sqrt_blocks",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Positioner,
    Signgiver,
}

impl FromStr for Role {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "positioner" => Ok(Role::Positioner),
            "signgiver" => Ok(Role::Signgiver),
            _ => Err(Error::Parse(format!("unknown role {s:?}"))),
        }
    }
}

/// Bisection: with virtual cells `x_0 = +1` and `x_{n+1} = -1`, take the
/// closest pair of consecutive queried cells with opposite signs and a gap,
/// and ask `floor((a+b)/2)`. Ties go to the leftmost pair; with no such pair
/// the lowest unqueried position is asked.
pub fn bisection_move(b: &Board) -> Result<usize> {
    let n = b.n();
    let Some(lowest) = (1..=n).find(|&p| b.get(p) == 0) else {
        return Err(Error::Domain(format!(
            "board {b} has no unqueried position"
        )));
    };
    let sign_at = |p: usize| match p {
        0 => 1,
        p if p == n + 1 => -1,
        p => b.get(p),
    };
    let queried: Vec<usize> = (0..=n + 1).filter(|&p| sign_at(p) != 0).collect();
    let best = queried
        .windows(2)
        .filter(|w| sign_at(w[0]) != sign_at(w[1]) && w[1] - w[0] >= 2)
        .min_by_key(|w| (w[1] - w[0], w[0]));
    Ok(best.map_or(lowest, |w| (w[0] + w[1]) / 2))
}

/// Block size `ceil(sqrt n)`; within the block of the pending position the
/// signs alternate starting with `+1`.
pub fn sqrt_blocks_sign(b: &Board, position: usize) -> Result<i8> {
    check_position(b, position)?;
    let size = sqrt_block_size(b.n());
    let block = (position - 1) / size;
    let lo = block * size + 1;
    let hi = (lo + size - 1).min(b.n());
    let assigned = (lo..=hi).filter(|&p| b.get(p) != 0).count();
    Ok(if assigned % 2 == 0 { 1 } else { -1 })
}

pub fn sqrt_block_size(n: usize) -> usize {
    if n <= 1 {
        1
    } else {
        (n - 1).isqrt() + 1
    }
}

/// A strategy's move: a position for Positioner strategies, a sign for
/// Signgiver strategies (which need `pending`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Move {
    Position(usize),
    Sign(i8),
}

pub fn strategy_move(id: StrategyId, b: &Board, pending: Option<usize>) -> Result<Move> {
    match id {
        StrategyId::PositionerBisection => Ok(Move::Position(bisection_move(b)?)),
        StrategyId::SigngiverSqrtBlocks => {
            let p = pending.ok_or_else(|| {
                Error::Domain("signgiver strategy needs a pending position".into())
            })?;
            Ok(Move::Sign(sqrt_blocks_sign(b, p)?))
        }
        StrategyId::Optimal => Err(Error::Domain(
            "the optimal strategy needs a solved game; use OptimalPositioner or OptimalSigngiver"
                .into(),
        )),
    }
}

#[derive(Clone, Copy)]
enum Mode {
    Optimal,
    FixedPositioner(fn(&Board) -> Result<usize>),
    FixedSigngiver(fn(&Board, usize) -> Result<i8>),
}

/// Memoized search over boards. `value(b)` is `max(score(b), W(b))`, the
/// largest score still reachable from `b` counting `b` itself.
///
/// The running peak of earlier boards is not part of the key: the game's
/// outcome from `b` with peak `m` so far is `max(m, value(b))`, and since
/// `x -> max(m, x)` is monotone both players' optimal choices from `b` are
/// the same for every `m`.
struct Search {
    n: usize,
    scoring: Scoring,
    mode: Mode,
    memo: Vec<i8>,
    pow3: Vec<u64>,
    expanded: u64,
}

const UNKNOWN: i8 = i8::MIN;

impl Search {
    fn new(spec: GameSpec, mode: Mode) -> Result<Self> {
        let n = spec.n as usize;
        let states = 3u128.pow(spec.n.min(80));
        if states > GAME_STATE_BUDGET as u128 {
            return Err(Error::resource(
                "game memo (3^n boards)",
                states,
                GAME_STATE_BUDGET as u128,
            ));
        }
        Ok(Self {
            n,
            scoring: spec.scoring,
            mode,
            memo: vec![UNKNOWN; states as usize],
            pow3: (0..n as u32).map(|i| 3u64.pow(i)).collect(),
            expanded: 0,
        })
    }

    fn child_index(&self, idx: u64, p: usize, sign: i8) -> u64 {
        idx + self.pow3[p - 1] * if sign == 1 { 1 } else { 2 }
    }

    fn child(&mut self, b: &mut Board, idx: u64, p: usize, sign: i8) -> Result<i8> {
        b.set(p, sign);
        let v = self.value(b, self.child_index(idx, p, sign));
        b.set(p, 0);
        v
    }

    /// Signgiver's reply at `p`: (value, sign), ties to `-1`.
    fn reply(&mut self, b: &mut Board, idx: u64, p: usize) -> Result<(i8, i8)> {
        if let Mode::FixedSigngiver(sign) = self.mode {
            let s = sign(b, p)?;
            return Ok((self.child(b, idx, p, s)?, s));
        }
        let minus = self.child(b, idx, p, -1)?;
        let plus = self.child(b, idx, p, 1)?;
        Ok(if plus < minus { (plus, 1) } else { (minus, -1) })
    }

    fn value(&mut self, b: &mut Board, idx: u64) -> Result<i8> {
        let cached = self.memo[idx as usize];
        if cached != UNKNOWN {
            return Ok(cached);
        }
        self.expanded += 1;
        let here = score_doubled(b, self.scoring) as i8;
        let rest = if b.is_complete() {
            here
        } else {
            match self.mode {
                Mode::FixedPositioner(pos) => {
                    let p = pos(b)?;
                    check_position(b, p)?;
                    self.reply(b, idx, p)?.0
                }
                _ => {
                    let mut best = i8::MIN;
                    for p in 1..=self.n {
                        if b.get(p) != 0 {
                            continue;
                        }
                        best = best.max(self.reply(b, idx, p)?.0);
                    }
                    best
                }
            }
        };
        let v = here.max(rest);
        self.memo[idx as usize] = v;
        Ok(v)
    }

    /// Positioner's move at `b`: the fixed strategy's, or the lowest
    /// position attaining the optimum.
    fn choose(&mut self, b: &mut Board, idx: u64) -> Result<usize> {
        if let Mode::FixedPositioner(pos) = self.mode {
            return pos(b);
        }
        let mut best: Option<(i8, usize)> = None;
        for p in 1..=self.n {
            if b.get(p) == 0 {
                let v = self.reply(b, idx, p)?.0;
                if best.is_none_or(|(bv, _)| v > bv) {
                    best = Some((v, p));
                }
            }
        }
        best.map(|(_, p)| p)
            .ok_or_else(|| Error::Domain(format!("board {b} has no unqueried position")))
    }

    fn root(&mut self) -> Result<i64> {
        let mut b = Board::empty(self.n);
        Ok(self.value(&mut b, 0)? as i64)
    }

    fn principal_line(&mut self, spec: GameSpec) -> Result<MoveTrace> {
        let mut b = Board::empty(self.n);
        let mut idx = 0u64;
        let mut trace = MoveTrace::new(spec);
        while !b.is_complete() {
            let p = self.choose(&mut b, idx)?;
            let (_, s) = self.reply(&mut b, idx, p)?;
            trace.apply(p, s)?;
            b.set(p, s);
            idx = self.child_index(idx, p, s);
        }
        Ok(trace)
    }
}

#[derive(Debug, Clone)]
pub struct GameResult {
    pub spec: GameSpec,
    pub value_doubled: i64,
    pub principal_line: MoveTrace,
    pub states_expanded: u64,
}

impl GameResult {
    pub fn value(&self) -> f64 {
        self.value_doubled as f64 / 2.0
    }
}

impl Serialize for GameResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(5))?;
        m.serialize_entry("n", &self.spec.n)?;
        m.serialize_entry("scoring", &self.spec.scoring)?;
        m.serialize_entry("value", &half_number(self.value_doubled))?;
        m.serialize_entry("states_expanded", &self.states_expanded)?;
        m.serialize_entry("principal_line", &self.principal_line)?;
        m.end()
    }
}

/// Exact value of the game: `d(n)` for prefix scoring, `d'(n)` for
/// interval scoring.
pub fn game_value(spec: GameSpec) -> Result<GameResult> {
    let mut search = Search::new(spec, Mode::Optimal)?;
    let value_doubled = search.root()?;
    let principal_line = search.principal_line(spec)?;
    Ok(GameResult {
        spec,
        value_doubled,
        principal_line,
        states_expanded: search.expanded,
    })
}

/// Doubled game value when the `role` side plays `id` and the other side
/// plays optimally against it.
pub fn exploit(id: StrategyId, role: Role, spec: GameSpec) -> Result<i64> {
    let mode = match (id, role) {
        (StrategyId::Optimal, _) => Mode::Optimal,
        (StrategyId::PositionerBisection, Role::Positioner) => {
            Mode::FixedPositioner(bisection_move)
        }
        (StrategyId::SigngiverSqrtBlocks, Role::Signgiver) => {
            Mode::FixedSigngiver(sqrt_blocks_sign)
        }
        _ => {
            return Err(Error::Domain(format!(
                "strategy {id} cannot play the {role:?} role"
            )))
        }
    };
    Search::new(spec, mode)?.root()
}

#[derive(Debug, Clone, Serialize)]
pub struct ExploitResult {
    pub strategy: StrategyId,
    pub role: Role,
    pub n: u32,
    pub scoring: Scoring,
    #[serde(serialize_with = "serialize_half")]
    pub value: i64,
    /// The exact game value for comparison.
    #[serde(serialize_with = "serialize_half")]
    pub game_value: i64,
}

pub fn exploit_report(id: StrategyId, role: Role, spec: GameSpec) -> Result<ExploitResult> {
    Ok(ExploitResult {
        strategy: id,
        role,
        n: spec.n,
        scoring: spec.scoring,
        value: exploit(id, role, spec)?,
        game_value: game_value(spec)?.value_doubled,
    })
}

/// `d(n)`, `d'(n)` and the two strategy exploits.
#[derive(Debug, Clone, Serialize)]
pub struct GameRow {
    pub n: u32,
    #[serde(serialize_with = "serialize_half")]
    pub d: i64,
    #[serde(serialize_with = "serialize_half")]
    pub d_prime: i64,
    #[serde(serialize_with = "serialize_half")]
    pub bisection: i64,
    #[serde(serialize_with = "serialize_half")]
    pub sqrt_blocks: i64,
}

pub fn game_table(n_max: u32) -> Result<Vec<GameRow>> {
    use rayon::prelude::*;
    (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let prefix = GameSpec::new(n, Scoring::PrefixMax)?;
            let interval = GameSpec::new(n, Scoring::IntervalMinusHalfUnq)?;
            Ok(GameRow {
                n,
                d: game_value(prefix)?.value_doubled,
                d_prime: game_value(interval)?.value_doubled,
                bisection: exploit(StrategyId::PositionerBisection, Role::Positioner, prefix)?,
                sqrt_blocks: exploit(StrategyId::SigngiverSqrtBlocks, Role::Signgiver, prefix)?,
            })
        })
        .collect()
}

pub trait Positioner {
    fn choose(&mut self, b: &Board) -> Result<usize>;
    fn name(&self) -> String;
}

pub trait Signgiver {
    fn sign(&mut self, b: &Board, position: usize) -> Result<i8>;
    fn name(&self) -> String;
}

pub struct Bisection;

impl Positioner for Bisection {
    fn choose(&mut self, b: &Board) -> Result<usize> {
        bisection_move(b)
    }

    fn name(&self) -> String {
        StrategyId::PositionerBisection.to_string()
    }
}

pub struct SqrtBlocks;

impl Signgiver for SqrtBlocks {
    fn sign(&mut self, b: &Board, position: usize) -> Result<i8> {
        sqrt_blocks_sign(b, position)
    }

    fn name(&self) -> String {
        StrategyId::SigngiverSqrtBlocks.to_string()
    }
}

/// Exact optimal play for either side, backed by a solved memo.
pub struct Optimal {
    search: Search,
}

impl Optimal {
    pub fn new(spec: GameSpec) -> Result<Self> {
        let mut search = Search::new(spec, Mode::Optimal)?;
        search.root()?;
        Ok(Self { search })
    }
}

impl Positioner for Optimal {
    fn choose(&mut self, b: &Board) -> Result<usize> {
        let idx = b.index();
        self.search.choose(&mut b.clone(), idx)
    }

    fn name(&self) -> String {
        StrategyId::Optimal.to_string()
    }
}

impl Signgiver for Optimal {
    fn sign(&mut self, b: &Board, position: usize) -> Result<i8> {
        check_position(b, position)?;
        let idx = b.index();
        Ok(self.search.reply(&mut b.clone(), idx, position)?.1)
    }

    fn name(&self) -> String {
        StrategyId::Optimal.to_string()
    }
}

pub fn positioner_for(id: StrategyId, spec: GameSpec) -> Result<Box<dyn Positioner>> {
    match id {
        StrategyId::PositionerBisection => Ok(Box::new(Bisection)),
        StrategyId::Optimal => Ok(Box::new(Optimal::new(spec)?)),
        StrategyId::SigngiverSqrtBlocks => {
            Err(Error::Domain(format!("{id} is not a positioner strategy")))
        }
    }
}

pub fn signgiver_for(id: StrategyId, spec: GameSpec) -> Result<Box<dyn Signgiver>> {
    match id {
        StrategyId::SigngiverSqrtBlocks => Ok(Box::new(SqrtBlocks)),
        StrategyId::Optimal => Ok(Box::new(Optimal::new(spec)?)),
        StrategyId::PositionerBisection => {
            Err(Error::Domain(format!("{id} is not a signgiver strategy")))
        }
    }
}

/// An illegal move that ended a match.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchError {
    pub move_number: usize,
    pub role: Role,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct MatchOutcome {
    pub trace: MoveTrace,
    pub complete: bool,
    pub error: Option<MatchError>,
}

/// Play to completion; an illegal move stops the match and is recorded.
pub fn play_match(
    pos: &mut dyn Positioner,
    sign: &mut dyn Signgiver,
    spec: GameSpec,
) -> MatchOutcome {
    let mut trace = MoveTrace::new(spec);
    let n = spec.n as usize;
    while trace.steps.len() < n {
        let move_number = trace.steps.len() + 1;
        let board = trace.board();
        let fail = |role, e: Error| MatchError {
            move_number,
            role,
            reason: e.to_string(),
        };
        let p = match pos
            .choose(&board)
            .and_then(|p| check_position(&board, p).map(|_| p))
        {
            Ok(p) => p,
            Err(e) => {
                return MatchOutcome {
                    trace,
                    complete: false,
                    error: Some(fail(Role::Positioner, e)),
                }
            }
        };
        let applied = sign.sign(&board, p).and_then(|s| trace.apply(p, s));
        if let Err(e) = applied {
            return MatchOutcome {
                trace,
                complete: false,
                error: Some(fail(Role::Signgiver, e)),
            };
        }
    }
    MatchOutcome {
        trace,
        complete: true,
        error: None,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CorollaryCheck {
    /// Disc-max parameter, as a doubled value (may be odd).
    #[serde(serialize_with = "serialize_half", rename = "d")]
    pub d_doubled: i64,
    /// Integer threshold actually used by Disc-max (`floor(d)`).
    pub discmax_d: i64,
    #[serde(rename = "D")]
    pub depth: u32,
    #[serde(rename = "E")]
    pub co_depth: u32,
    /// `3d` or `6d`, doubled.
    #[serde(serialize_with = "serialize_half", rename = "bound")]
    pub bound_doubled: i64,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorollaryReport {
    pub n: u32,
    #[serde(serialize_with = "serialize_half", rename = "d_n")]
    pub d_n_doubled: i64,
    #[serde(serialize_with = "serialize_half", rename = "d_prime_n")]
    pub d_prime_n_doubled: i64,
    /// `d = 2 d(n)`, check `E <= 3d`.
    pub first: CorollaryCheck,
    /// `d = d'(n) + 3`, check `E <= 6d`.
    pub second: CorollaryCheck,
}

/// Both corollaries at one even `n`, exactly.
pub fn corollary_pipeline(n: u32) -> Result<CorollaryReport> {
    if n % 2 == 1 || n == 0 {
        return Err(Error::Domain(format!("n = {n} must be even and positive")));
    }
    let d_n = game_value(GameSpec::new(n, Scoring::PrefixMax)?)?.value_doubled;
    let d_prime = game_value(GameSpec::new(n, Scoring::IntervalMinusHalfUnq)?)?.value_doubled;
    let check = |d_doubled: i64, factor: i64| -> Result<CorollaryCheck> {
        // prefix discs are integers, so Disc-max-d equals Disc-max-floor(d)
        let discmax_d = d_doubled.div_euclid(2);
        let r = e_discmax(n, discmax_d)?;
        let bound_doubled = factor * d_doubled;
        Ok(CorollaryCheck {
            d_doubled,
            discmax_d,
            depth: r.depth,
            co_depth: r.co_depth,
            bound_doubled,
            holds: 2 * r.co_depth as i64 <= bound_doubled,
        })
    };
    Ok(CorollaryReport {
        n,
        d_n_doubled: d_n,
        d_prime_n_doubled: d_prime,
        first: check(2 * d_n, 3)?,
        second: check(d_prime + 6, 6)?,
    })
}
