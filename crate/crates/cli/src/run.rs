use std::io::Write;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use slicelab::census::census_report;
use slicelab::counting::{
    alfa_inequality, certify_e_upper, g_report, kozep_chain, verify_kozep_range, AlfaVerdict, Alpha,
};
use slicelab::discmax::{
    claim_condition, claims_on_boards, claims_sweep, complete_constructive, e_discmax, e_table,
    eval_discmax, feasible_exact, remark_board, Board, ClaimTally, Method, Target, Variant,
};
use slicelab::game::{
    corollary_pipeline, exploit_report, game_table, game_value, half_number, play_match,
    positioner_for, signgiver_for, GameSpec,
};
use slicelab::slice::{SliceDomain, SliceFunction};
use slicelab::solver::{
    compose, max_depth_all, solve_depth, solve_depth_with_budget, DEFAULT_STATE_BUDGET,
};

use crate::args::{BoundsCmd, Cli, Command, DiscmaxCmd, Format, GameCmd, SolveArgs, SweepCmd};
use crate::interactive;
use crate::render::{CliError, CliResult, Rendered};

/// Run one command; `Ok(false)` means it ran but a check failed.
pub fn dispatch(cli: &Cli, out: &mut impl Write) -> CliResult<bool> {
    let rendered = match &cli.command {
        Command::Solve(a) => solve(a, cli.format)?,
        Command::Maxdepth { n, k } => {
            let r = max_depth_all(SliceDomain::new(*n, *k)?)?;
            Rendered::from_value(&r.to_json()?)
        }
        Command::Compose { f1, f2, check } => compose_cmd(f1, f2, *check)?,
        Command::Census {
            n,
            k,
            height,
            any_shape,
        } => {
            let r = census_report(SliceDomain::new(*n, *k)?, *height, *any_shape)?;
            let ok = r.within_g;
            Rendered::new(&r)?.ok(ok)
        }
        Command::Bounds(b) => bounds(b)?,
        Command::Discmax(d) => discmax(d)?,
        Command::Game(GameCmd::Interactive {
            n,
            scoring,
            role,
            opponent,
            trace_out,
        }) => {
            let spec = GameSpec::new(*n, *scoring)?;
            let stdin = std::io::stdin();
            return interactive::run(
                spec,
                *role,
                *opponent,
                &mut stdin.lock(),
                out,
                trace_out.as_deref(),
            );
        }
        Command::Game(g) => game(g)?,
        Command::Sweep(s) => sweep(s)?,
    };
    rendered.emit(cli.format, out)
}

fn read_function(path: &Path) -> CliResult<SliceFunction> {
    let text = std::fs::read_to_string(path)?;
    Ok(SliceFunction::parse(&text)?)
}

fn solve(a: &SolveArgs, format: Format) -> CliResult<Rendered> {
    let f = match (&a.table_file, a.random_n) {
        (Some(path), _) => read_function(path)?,
        (None, Some(n)) => {
            let d = SliceDomain::new(n, a.k.expect("clap requires k"))?;
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            let values: Vec<bool> = (0..d.size()).map(|_| rng.gen()).collect();
            SliceFunction::from_values(d, &values)?
        }
        (None, None) => unreachable!("clap requires a source"),
    };
    let want_tree = a.tree || format == Format::Dot;
    let r = solve_depth_with_budget(&f, want_tree, a.budget.unwrap_or(DEFAULT_STATE_BUDGET))?;
    let mut rendered = Rendered::from_value(&r.to_json()?);
    rendered.dot = r.optimal_tree.as_ref().map(|t| t.to_dot());
    Ok(rendered)
}

fn compose_cmd(p1: &Path, p2: &Path, check: bool) -> CliResult<Rendered> {
    let (f1, f2) = (read_function(p1)?, read_function(p2)?);
    let f = compose(&f1, &f2)?;
    if !check {
        return Ok(Rendered {
            json: f.to_json()?,
            rows: None,
            dot: None,
            ok: true,
        });
    }
    let (d1, d2, d) = (
        solve_depth(&f1, false)?.depth,
        solve_depth(&f2, false)?.depth,
        solve_depth(&f, false)?.depth,
    );
    let ok = d >= d1 + d2;
    Ok(Rendered::from_value(&json!({
        "D1": d1,
        "D2": d2,
        "D": d,
        "superadditive": ok,
    }))
    .ok(ok))
}

fn parse_alpha(s: &str) -> CliResult<Alpha> {
    let (num, den) = s
        .split_once('/')
        .ok_or_else(|| CliError::Usage(format!("alpha {s:?} is not of the form num/den")))?;
    let parse = |x: &str| {
        x.trim()
            .parse::<u64>()
            .map_err(|e| CliError::Usage(format!("alpha {s:?}: {e}")))
    };
    Ok(Alpha::new(parse(num)?, parse(den)?)?)
}

fn bounds(b: &BoundsCmd) -> CliResult<Rendered> {
    Ok(match b {
        BoundsCmd::G { n, k, t, precision } => Rendered::new(&g_report(*n, *k, *t, *precision)?)?,
        BoundsCmd::Kozep { t, from, to, chain } => {
            let r = verify_kozep_range(*t, *from, *to)?;
            let rows = r
                .rows
                .iter()
                .map(|row| {
                    vec![
                        row.n.to_string(),
                        row.t.to_string(),
                        row.ratio.hi_decimal(20),
                    ]
                })
                .collect();
            let mut ok = r.all_certified;
            let rendered = if *chain {
                let c = kozep_chain(256)?;
                ok &= c.first_below_0_2 && c.middle_below_0_71 && c.total_below_0_92;
                Rendered::from_value(&json!({ "range": r, "chain": c }))
            } else {
                Rendered::new(&r)?
            };
            rendered.rows(vec!["n", "t", "ratio_hi"], rows).ok(ok)
        }
        BoundsCmd::Alfa {
            alpha,
            c,
            n,
            precision,
        } => {
            let r = alfa_inequality(parse_alpha(alpha)?, *c, *n, *precision)?;
            let ok = r.verdict == AlfaVerdict::Holds;
            Rendered::new(&r)?.ok(ok)
        }
        BoundsCmd::Certify { n, k } => {
            let r = certify_e_upper(*n, k.unwrap_or(n / 2))?;
            let ok = r.t.is_some();
            Rendered::new(&r)?.ok(ok)
        }
    })
}

fn board(s: &str) -> CliResult<Board> {
    Ok(Board::parse(s)?)
}

fn tally_rows(tallies: &[ClaimTally]) -> Vec<Vec<String>> {
    tallies
        .iter()
        .map(|t| {
            vec![
                t.n.to_string(),
                t.d.to_string(),
                t.variant.name().to_string(),
                t.boards.to_string(),
                t.hypothesis_holds.to_string(),
                t.counterexample_count.to_string(),
            ]
        })
        .collect()
}

const TALLY_HEADERS: [&str; 6] = [
    "n",
    "d",
    "variant",
    "boards",
    "hypothesis_holds",
    "counterexamples",
];

/// Counterexamples to i, ii and ii' fail the run; i' ones are reported only.
fn tallies_ok(tallies: &[ClaimTally]) -> bool {
    tallies
        .iter()
        .all(|t| t.variant == Variant::IPrime || t.counterexample_count == 0)
}

fn sample_boards(n: u32, count: usize, seed: u64) -> CliResult<Vec<Board>> {
    if n % 2 == 1 || n > 63 {
        return Err(CliError::Usage(format!(
            "n = {n} must be even and at most 63"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let cells = (0..n).map(|_| rng.gen_range(-1i8..=1)).collect();
        let b = Board::from_cells(cells)?;
        if b.is_slice_consistent() {
            out.push(b);
        }
    }
    Ok(out)
}

fn discmax(cmd: &DiscmaxCmd) -> CliResult<Rendered> {
    Ok(match cmd {
        DiscmaxCmd::Eval { board: b, d } => {
            let b = board(b)?;
            let v = eval_discmax(&b, *d)?;
            Rendered::from_value(&json!({ "board": b.to_string(), "d": d, "value": v as u8 }))
        }
        DiscmaxCmd::Feasible {
            board: b,
            d,
            target,
        } => Rendered::new(&feasible_exact(&board(b)?, *d, *target)?)?,
        DiscmaxCmd::Claims {
            n,
            d,
            board: one,
            sample,
            seed,
        } => {
            if let Some(b) = one {
                let b = board(b)?;
                let mut ok = true;
                let rows: Vec<_> = Variant::ALL
                    .iter()
                    .map(|&v| {
                        let hypothesis = claim_condition(&b, *d, v);
                        let feasible = feasible_exact(&b, *d, v.target())?.feasible;
                        ok &= !hypothesis || feasible || v == Variant::IPrime;
                        Ok(json!({
                            "variant": v,
                            "hypothesis": hypothesis,
                            "target": v.target(),
                            "feasible": feasible,
                        }))
                    })
                    .collect::<CliResult<_>>()?;
                return Ok(Rendered::from_value(
                    &json!({ "board": b.to_string(), "d": d, "variants": rows }),
                )
                .ok(ok));
            }
            let tallies = match sample {
                Some(count) => claims_on_boards(*n, *d, &sample_boards(*n, *count, *seed)?)?,
                None => claims_sweep(*n, *d)?,
            };
            let ok = tallies_ok(&tallies);
            Rendered::new(&tallies)?
                .rows(TALLY_HEADERS.to_vec(), tally_rows(&tallies))
                .ok(ok)
        }
        DiscmaxCmd::Complete {
            board: b,
            d,
            method,
            order,
            seed,
        } => {
            let b = board(b)?;
            let mut positions: Vec<usize> = match order {
                Some(o) => o
                    .split(',')
                    .map(|p| {
                        p.trim()
                            .parse()
                            .map_err(|e| CliError::Usage(format!("order entry {p:?}: {e}")))
                    })
                    .collect::<CliResult<_>>()?,
                None => (1..=b.n()).collect(),
            };
            if let Some(s) = seed {
                positions.shuffle(&mut ChaCha8Rng::seed_from_u64(*s));
            }
            let c = complete_constructive(&b, *d, *method, &positions)?;
            let ok = match method {
                Method::Alternating => c.value,
                Method::EvenInterval => c.max_interval_disc <= *d,
            };
            Rendered::new(&c)?.ok(ok)
        }
        DiscmaxCmd::E { n, d } => {
            let r = e_discmax(*n, *d)?;
            let mut v = r.to_json()?;
            v["d"] = json!(d);
            Rendered::from_value(&v)
        }
        DiscmaxCmd::Remark { d, n } => {
            let b = remark_board(*d, n.unwrap_or(2 * *d as usize + 2))?;
            let verdict = feasible_exact(&b, *d, Target::TrueValue)?;
            Rendered::from_value(&json!({
                "d": d,
                "board": b.to_string(),
                "max_prefix_disc": b.max_prefix_disc(),
                "true_feasible": verdict.feasible,
            }))
            .ok(!verdict.feasible)
        }
    })
}

fn game(cmd: &GameCmd) -> CliResult<Rendered> {
    Ok(match cmd {
        GameCmd::Value { n, scoring } => Rendered::new(&game_value(GameSpec::new(*n, *scoring)?)?)?,
        GameCmd::Exploit {
            strategy,
            role,
            n,
            scoring,
        } => Rendered::new(&exploit_report(
            *strategy,
            *role,
            GameSpec::new(*n, *scoring)?,
        )?)?,
        GameCmd::Play {
            positioner,
            signgiver,
            n,
            scoring,
            trace_lines,
        } => {
            let spec = GameSpec::new(*n, *scoring)?;
            let mut pos = positioner_for(*positioner, spec)?;
            let mut sign = signgiver_for(*signgiver, spec)?;
            let outcome = play_match(pos.as_mut(), sign.as_mut(), spec);
            let rows = outcome
                .trace
                .steps
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    vec![
                        (i + 1).to_string(),
                        s.position.to_string(),
                        s.sign.to_string(),
                        half_number(s.peak_doubled).to_string(),
                    ]
                })
                .collect();
            let ok = outcome.complete;
            let mut r = Rendered::new(&outcome)?;
            if *trace_lines {
                r.json = outcome.trace.json_lines().trim_end().to_string();
            }
            r.rows(vec!["move", "position", "sign", "peak"], rows)
                .ok(ok)
        }
        GameCmd::Corollary { n } => {
            let r = corollary_pipeline(*n)?;
            let ok = r.first.holds && r.second.holds;
            Rendered::new(&r)?.ok(ok)
        }
        GameCmd::Interactive { .. } => unreachable!("handled in dispatch"),
    })
}

fn sweep(cmd: &SweepCmd) -> CliResult<Rendered> {
    Ok(match cmd {
        SweepCmd::Etable { n, d, seed } => {
            let rows = e_table(n, d)?;
            let cells = rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.d.to_string(),
                        r.depth.to_string(),
                        r.co_depth.to_string(),
                    ]
                })
                .collect();
            Rendered::from_value(&json!({ "seed": seed, "rows": rows }))
                .rows(vec!["n", "d", "D", "E"], cells)
        }
        SweepCmd::Certify { from, to, step } => {
            if *step == 0 {
                return Err(CliError::Usage("--step must be positive".into()));
            }
            let ns: Vec<u32> = (*from..=*to).step_by(*step as usize).collect();
            let certs = {
                use rayon::prelude::*;
                ns.par_iter()
                    .map(|&n| certify_e_upper(n, n / 2))
                    .collect::<Result<Vec<_>, _>>()?
            };
            let ok = certs.iter().all(|c| c.t.is_some());
            let cells = certs
                .iter()
                .map(|c| {
                    vec![
                        c.n.to_string(),
                        c.k.to_string(),
                        c.t.map_or("none".into(), |t| t.to_string()),
                        c.log2_g_hi.clone(),
                    ]
                })
                .collect();
            Rendered::new(&certs)?
                .rows(vec!["n", "k", "t", "log2_g_hi"], cells)
                .ok(ok)
        }
        SweepCmd::Games { to } => {
            let rows = game_table(*to)?;
            let cells = rows
                .iter()
                .map(|r| {
                    [r.d, r.d_prime, r.bisection, r.sqrt_blocks]
                        .iter()
                        .map(|&v| half_number(v).to_string())
                        .fold(vec![r.n.to_string()], |mut acc, x| {
                            acc.push(x);
                            acc
                        })
                })
                .collect();
            Rendered::new(&rows)?.rows(vec!["n", "d", "d_prime", "bisection", "sqrt_blocks"], cells)
        }
        SweepCmd::Claims { n, d } => {
            let mut tallies = Vec::new();
            for &ni in n {
                for &di in d {
                    tallies.extend(claims_sweep(ni, di)?);
                }
            }
            let ok = tallies_ok(&tallies);
            Rendered::new(&tallies)?
                .rows(TALLY_HEADERS.to_vec(), tally_rows(&tallies))
                .ok(ok)
        }
    })
}
