use slicelab::discmax::Board;
use slicelab::game::{
    bisection_move, corollary_pipeline, exploit, game_table, game_value, play_match,
    positioner_for, signgiver_for, sqrt_blocks_sign, GameSpec, Role, Scoring, StrategyId,
};

/// Twice the score, computed from the cells directly.
fn score2(cells: &[i8], scoring: Scoring) -> i64 {
    let n = cells.len();
    match scoring {
        Scoring::PrefixMax => (1..=n)
            .map(|j| 2 * cells[..j].iter().map(|&c| c as i64).sum::<i64>().abs())
            .max()
            .unwrap_or(0),
        Scoring::IntervalMinusHalfUnq => (0..n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .map(|(i, j)| {
                let disc: i64 = cells[i..j].iter().map(|&c| c as i64).sum();
                let unq = cells[i..j].iter().filter(|&&c| c == 0).count() as i64;
                2 * disc.abs() - unq
            })
            .max()
            .unwrap(),
    }
}

type Pos = Option<fn(&Board) -> slicelab::Result<usize>>;
type Sgn = Option<fn(&Board, usize) -> slicelab::Result<i8>>;

/// Plain game tree search carrying the running peak; no memo.
fn naive(cells: &mut Vec<i8>, peak: i64, scoring: Scoring, pos: Pos, sgn: Sgn) -> i64 {
    if cells.iter().all(|&c| c != 0) {
        return peak;
    }
    let board = Board::from_cells(cells.clone()).unwrap();
    let positions: Vec<usize> = match pos {
        Some(f) => vec![f(&board).unwrap()],
        None => (1..=cells.len()).filter(|&p| cells[p - 1] == 0).collect(),
    };
    let mut best = i64::MIN;
    for p in positions {
        let signs = match sgn {
            Some(f) => vec![f(&board, p).unwrap()],
            None => vec![1, -1],
        };
        let mut worst = i64::MAX;
        for s in signs {
            cells[p - 1] = s;
            let next = peak.max(score2(cells, scoring));
            worst = worst.min(naive(cells, next, scoring, pos, sgn));
            cells[p - 1] = 0;
        }
        best = best.max(worst);
    }
    best
}

fn naive_root(n: u32, scoring: Scoring, pos: Pos, sgn: Sgn) -> i64 {
    let mut cells = vec![0i8; n as usize];
    let start = score2(&cells, scoring);
    naive(&mut cells, start, scoring, pos, sgn)
}

fn spec(n: u32, scoring: Scoring) -> GameSpec {
    GameSpec::new(n, scoring).unwrap()
}

#[test]
fn values_match_naive_search() {
    for scoring in [Scoring::PrefixMax, Scoring::IntervalMinusHalfUnq] {
        for n in 1..=7 {
            assert_eq!(
                game_value(spec(n, scoring)).unwrap().value_doubled,
                naive_root(n, scoring, None, None),
                "n={n} {scoring:?}"
            );
        }
    }
}

#[test]
fn exploits_match_naive_search() {
    for n in 1..=7 {
        let s = spec(n, Scoring::PrefixMax);
        assert_eq!(
            exploit(StrategyId::PositionerBisection, Role::Positioner, s).unwrap(),
            naive_root(n, Scoring::PrefixMax, Some(bisection_move), None),
            "bisection n={n}"
        );
        assert_eq!(
            exploit(StrategyId::SigngiverSqrtBlocks, Role::Signgiver, s).unwrap(),
            naive_root(n, Scoring::PrefixMax, None, Some(sqrt_blocks_sign)),
            "sqrt_blocks n={n}"
        );
    }
}

#[test]
fn optimal_exploit_and_self_play_reach_the_value() {
    for scoring in [Scoring::PrefixMax, Scoring::IntervalMinusHalfUnq] {
        for n in 1..=10 {
            let s = spec(n, scoring);
            let v = game_value(s).unwrap();
            assert_eq!(
                exploit(StrategyId::Optimal, Role::Positioner, s).unwrap(),
                v.value_doubled
            );
            assert_eq!(v.principal_line.peak_doubled(), Some(v.value_doubled));
            let mut p = positioner_for(StrategyId::Optimal, s).unwrap();
            let mut g = signgiver_for(StrategyId::Optimal, s).unwrap();
            let out = play_match(p.as_mut(), g.as_mut(), s);
            assert!(out.complete);
            assert_eq!(
                out.trace.peak_doubled(),
                Some(v.value_doubled),
                "n={n} {scoring:?}"
            );
        }
    }
}

#[test]
fn strategies_bracket_the_value() {
    for n in 1..=10 {
        let s = spec(n, Scoring::PrefixMax);
        let v = game_value(s).unwrap().value_doubled;
        assert!(exploit(StrategyId::PositionerBisection, Role::Positioner, s).unwrap() <= v);
        assert!(exploit(StrategyId::SigngiverSqrtBlocks, Role::Signgiver, s).unwrap() >= v);
    }
}

#[test]
fn game_table_pinned() {
    let rows = game_table(12).unwrap();
    let got: Vec<[i64; 4]> = rows
        .iter()
        .map(|r| [r.d, r.d_prime, r.bisection, r.sqrt_blocks])
        .collect();
    // doubled values
    #[rustfmt::skip]
    let want: Vec<[i64; 4]> = vec![
        [2, 2, 2, 2], [2, 2, 2, 2], [2, 3, 2, 4], [4, 3, 2, 4],
        [4, 4, 2, 4], [4, 4, 2, 6], [4, 4, 4, 6], [4, 4, 4, 6],
        [4, 5, 4, 8], [4, 5, 4, 6], [6, 5, 4, 8], [6, 5, 4, 8],
    ];
    assert_eq!(got, want);
}

#[test]
fn bisection_against_sqrt_blocks_trace() {
    let s = spec(9, Scoring::PrefixMax);
    let mut p = positioner_for(StrategyId::PositionerBisection, s).unwrap();
    let mut g = signgiver_for(StrategyId::SigngiverSqrtBlocks, s).unwrap();
    let out = play_match(p.as_mut(), g.as_mut(), s);
    assert!(out.complete);
    let positions: Vec<usize> = out.trace.steps.iter().map(|t| t.position).collect();
    let signs: Vec<i8> = out.trace.steps.iter().map(|t| t.sign).collect();
    let peaks: Vec<i64> = out.trace.steps.iter().map(|t| t.peak_doubled / 2).collect();
    assert_eq!(positions, [5, 7, 8, 1, 2, 3, 4, 6, 9]);
    assert_eq!(signs, [1, 1, -1, 1, -1, 1, -1, 1, 1]);
    assert_eq!(peaks, [1, 2, 2, 3, 3, 3, 3, 3, 3]);
}

#[test]
fn corollaries_hold() {
    for n in [2u32, 4, 6, 8, 10, 12] {
        let r = corollary_pipeline(n).unwrap();
        assert!(r.first.holds && r.second.holds, "n={n}");
    }
}

#[test]
fn over_budget_is_a_resource_error() {
    assert!(matches!(
        game_value(spec(20, Scoring::PrefixMax)),
        Err(slicelab::Error::Resource { .. })
    ));
}
