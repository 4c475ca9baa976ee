//! Terminal play of one side of a game against a built-in strategy.

use std::collections::VecDeque;
use std::io::{BufRead, Write};
use std::path::Path;

use slicelab::discmax::Board;
use slicelab::game::{
    half_number, positioner_for, signgiver_for, GameSpec, MoveTrace, Role, StrategyId,
};

use crate::render::CliResult;

/// Whitespace-separated tokens from a line reader.
struct Tokens<'a, R: BufRead> {
    input: &'a mut R,
    queue: VecDeque<String>,
}

impl<R: BufRead> Tokens<'_, R> {
    fn next(&mut self) -> std::io::Result<Option<String>> {
        while self.queue.is_empty() {
            let mut line = String::new();
            if self.input.read_line(&mut line)? == 0 {
                return Ok(None);
            }
            self.queue
                .extend(line.split_whitespace().map(str::to_string));
        }
        Ok(self.queue.pop_front())
    }
}

fn parse_position(token: &str, b: &Board) -> Result<usize, String> {
    let p: usize = token
        .parse()
        .map_err(|_| format!("{token:?} is not a position"))?;
    if p == 0 || p > b.n() {
        return Err(format!("position {p} is outside 1..={}", b.n()));
    }
    if b.get(p) != 0 {
        return Err(format!("position {p} is already set"));
    }
    Ok(p)
}

fn parse_sign(token: &str) -> Result<i8, String> {
    match token {
        "+" | "+1" | "1" => Ok(1),
        "-" | "-1" => Ok(-1),
        _ => Err(format!("{token:?} is not a sign (+ or -)")),
    }
}

/// Play until the board is full or input ends. Illegal input is rejected
/// and asked for again. Returns whether the game was completed.
pub fn run(
    spec: GameSpec,
    role: Role,
    opponent: StrategyId,
    input: &mut impl BufRead,
    out: &mut impl Write,
    trace_out: Option<&Path>,
) -> CliResult<bool> {
    let mut positioner = match role {
        Role::Signgiver => Some(positioner_for(opponent, spec)?),
        Role::Positioner => None,
    };
    let mut signgiver = match role {
        Role::Positioner => Some(signgiver_for(opponent, spec)?),
        Role::Signgiver => None,
    };
    let mut tokens = Tokens {
        input,
        queue: VecDeque::new(),
    };
    let mut trace = MoveTrace::new(spec);
    let side = match role {
        Role::Positioner => "positioner",
        Role::Signgiver => "signgiver",
    };
    writeln!(
        out,
        "board {}  you play {side} against {opponent}",
        Board::empty(spec.n as usize)
    )?;
    let mut complete = true;
    'game: while trace.steps.len() < spec.n as usize {
        let b = trace.board();
        let (position, sign) = match (&mut positioner, &mut signgiver) {
            (None, Some(sg)) => {
                let p = loop {
                    write!(out, "position> ")?;
                    out.flush()?;
                    let Some(tok) = tokens.next()? else {
                        complete = false;
                        break 'game;
                    };
                    match parse_position(&tok, &b) {
                        Ok(p) => break p,
                        Err(why) => writeln!(out, "illegal: {why}")?,
                    }
                };
                (p, sg.sign(&b, p)?)
            }
            (Some(pos), None) => {
                let p = pos.choose(&b)?;
                let s = loop {
                    write!(out, "sign for position {p}> ")?;
                    out.flush()?;
                    let Some(tok) = tokens.next()? else {
                        complete = false;
                        break 'game;
                    };
                    match parse_sign(&tok) {
                        Ok(s) => break s,
                        Err(why) => writeln!(out, "illegal: {why}")?,
                    }
                };
                (p, s)
            }
            _ => unreachable!("exactly one side is automated"),
        };
        let step = trace.apply(position, sign)?;
        writeln!(
            out,
            "move {}: x{} = {}  board {}  peak {}",
            trace.steps.len(),
            position,
            if sign == 1 { '+' } else { '-' },
            trace.board(),
            half_number(step.peak_doubled)
        )?;
    }
    if !complete {
        writeln!(
            out,
            "aborted: end of input after {} moves",
            trace.steps.len()
        )?;
    }
    let lines = trace.json_lines();
    match trace_out {
        Some(path) => std::fs::write(path, lines)?,
        None => out.write_all(lines.as_bytes())?,
    }
    Ok(complete)
}
