//! Zero-sum solving: pure saddle points, the 2x2 closed-form mixed
//! solution, and per-player maximin security levels.

use crate::error::{Error, Result};
use crate::game::{approx_eq, approx_ge, BimatrixGame, Player, Solution, StrategyChoice, ZeroSum2x2, EPS};

/// All cells of a zero-sum game that are simultaneously a minimum of their
/// row and a maximum of their column in the row player's payoffs. Ties
/// within tolerance are included; cells come out in lexicographic order.
pub fn saddle_points(game: &BimatrixGame) -> Result<Vec<(usize, usize)>> {
    if !game.is_zero_sum() {
        return Err(Error::Contract(
            "saddle_points requires a zero-sum game".into(),
        ));
    }
    Ok(saddle_cells(game))
}

fn saddle_cells(game: &BimatrixGame) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for r in 0..game.rows() {
        let row_min = (0..game.cols())
            .map(|c| game.row_payoff(r, c))
            .fold(f64::INFINITY, f64::min);
        for c in 0..game.cols() {
            let v = game.row_payoff(r, c);
            if !approx_eq(v, row_min) {
                continue;
            }
            let col_max = (0..game.rows())
                .map(|i| game.row_payoff(i, c))
                .fold(f64::NEG_INFINITY, f64::max);
            if approx_eq(v, col_max) {
                cells.push((r, c));
            }
        }
    }
    cells
}

/// The pure strategy maximizing `player`'s own worst-case payoff, with that
/// worst-case (security) value. Lowest index wins ties.
pub fn maximin_security(game: &BimatrixGame, player: Player) -> (usize, f64) {
    let own = |index: usize| -> f64 {
        match player {
            Player::Row => (0..game.cols())
                .map(|c| game.row_payoff(index, c))
                .fold(f64::INFINITY, f64::min),
            Player::Col => (0..game.rows())
                .map(|r| game.col_payoff(r, index))
                .fold(f64::INFINITY, f64::min),
        }
    };
    let count = match player {
        Player::Row => game.rows(),
        Player::Col => game.cols(),
    };
    let securities: Vec<f64> = (0..count).map(own).collect();
    let best = securities.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let index = securities
        .iter()
        .position(|&s| approx_ge(s, best))
        .expect("non-empty strategy set");
    (index, securities[index])
}

/// Both players' maximin strategies and the outcome they induce.
#[derive(Debug, Clone, PartialEq)]
pub struct MaximinProfile {
    pub row_strategy: usize,
    pub col_strategy: usize,
    pub row_security: f64,
    pub col_security: f64,
    /// Payoff pair realized at the maximin cell.
    pub cell_payoffs: (f64, f64),
    /// True when the realized payoffs equal the security values, i.e. the
    /// maximin pair is a cell-consistent pure solution of the game.
    pub cell_consistent: bool,
}

/// Evaluates the maximin pair: where both players land when each plays its
/// own security strategy, and whether that cell actually delivers the
/// security values.
pub fn maximin_profile(game: &BimatrixGame) -> MaximinProfile {
    let (row_strategy, row_security) = maximin_security(game, Player::Row);
    let (col_strategy, col_security) = maximin_security(game, Player::Col);
    let cell_payoffs = game.payoffs(row_strategy, col_strategy);
    let cell_consistent =
        approx_eq(cell_payoffs.0, row_security) && approx_eq(cell_payoffs.1, col_security);
    MaximinProfile {
        row_strategy,
        col_strategy,
        row_security,
        col_security,
        cell_payoffs,
        cell_consistent,
    }
}

/// Closed-form mixed solution of a 2x2 zero-sum game without a saddle
/// point:
///
/// ```text
/// x = (d - c) / (a - b - c + d)      row player's weight on strategy 0
/// y = (d - b) / (a - b - c + d)      column player's weight on strategy 0
/// u = (a*d - b*c) / (a - b - c + d)  game value for the row player
/// ```
///
/// A game with a saddle point is rejected (solve it as a pure game), and a
/// vanishing denominator is reported as degeneracy rather than resolved.
pub fn solve_2x2_mixed(z: &ZeroSum2x2) -> Result<Solution> {
    let game = z.to_game();
    if let Some(&(r, c)) = saddle_cells(&game).first() {
        return Err(Error::SaddleExists {
            value: game.row_payoff(r, c),
        });
    }
    let denominator = z.a - z.b - z.c + z.d;
    if denominator.abs() <= EPS {
        return Err(Error::Degenerate(
            "indifference denominator a - b - c + d vanishes; eliminate dominated strategies first"
                .into(),
        ));
    }
    let x = (z.d - z.c) / denominator;
    let y = (z.d - z.b) / denominator;
    let value = (z.a * z.d - z.b * z.c) / denominator;
    debug_assert!((-EPS..=1.0 + EPS).contains(&x) && (-EPS..=1.0 + EPS).contains(&y));
    Ok(Solution {
        row: StrategyChoice::Mixed(vec![x, 1.0 - x]),
        col: StrategyChoice::Mixed(vec![y, 1.0 - y]),
        row_value: value,
        col_value: -value,
    })
}

/// Solves a zero-sum game: the lexicographically first saddle point when
/// one exists, otherwise the 2x2 closed-form mixed solution. Games larger
/// than 2x2 without a saddle are explicitly unsupported.
pub fn solve_zero_sum(game: &BimatrixGame) -> Result<Solution> {
    let saddles = saddle_points(game)?;
    if let Some(&(r, c)) = saddles.first() {
        let value = game.row_payoff(r, c);
        return Ok(Solution {
            row: StrategyChoice::Pure(r),
            col: StrategyChoice::Pure(c),
            row_value: value,
            col_value: -value,
        });
    }
    if game.rows() > 2 || game.cols() > 2 {
        return Err(Error::UnsupportedShape(format!(
            "no saddle point and the game is {}x{}; mixed solving is available for 2x2 only",
            game.rows(),
            game.cols()
        )));
    }
    // 1xN and Nx1 games always have a saddle, so reaching here means 2x2.
    solve_2x2_mixed(&ZeroSum2x2::from_game(game)?)
}
