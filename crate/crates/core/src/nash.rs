//! Pure Nash equilibrium enumeration by best-response marking, the 2x2
//! mixed equilibrium from the indifference principle, and a combined
//! report with an oddness sanity check.

use crate::error::{Error, Result};
use crate::game::{approx_ge, BimatrixGame, Solution, StrategyChoice, EPS};

/// All cells that are best responses for both players: the row payoff is a
/// maximum of its column and the column payoff a maximum of its row, ties
/// within tolerance counting as maxima. Lexicographic order.
pub fn pure_nash(game: &BimatrixGame) -> Vec<(usize, usize)> {
    let col_maxima: Vec<f64> = (0..game.cols())
        .map(|c| {
            (0..game.rows())
                .map(|r| game.row_payoff(r, c))
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .collect();
    let row_maxima: Vec<f64> = (0..game.rows())
        .map(|r| {
            (0..game.cols())
                .map(|c| game.col_payoff(r, c))
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .collect();
    let mut cells = Vec::new();
    for (r, &row_max) in row_maxima.iter().enumerate() {
        for (c, &col_max) in col_maxima.iter().enumerate() {
            if approx_ge(game.row_payoff(r, c), col_max)
                && approx_ge(game.col_payoff(r, c), row_max)
            {
                cells.push((r, c));
            }
        }
    }
    cells
}

/// Outcome of the 2x2 indifference computation.
#[derive(Debug, Clone, PartialEq)]
pub enum Mixed2x2 {
    /// An interior mixed equilibrium with both probabilities in (0, 1).
    Interior(Solution),
    /// No interior equilibrium. `degenerate` is set when an indifference
    /// denominator vanished (the opponent cannot be made indifferent).
    Absent { degenerate: bool },
}

impl Mixed2x2 {
    pub fn interior(&self) -> Option<&Solution> {
        match self {
            Mixed2x2::Interior(s) => Some(s),
            Mixed2x2::Absent { .. } => None,
        }
    }
}

/// Interior mixed equilibrium of a 2x2 bimatrix game, when one exists.
///
/// `x` (the row player's weight on its first strategy) is solved from the
/// *column* player's payoffs so that both of its pure replies earn the
/// same; `y` symmetrically makes the row player indifferent. Both must be
/// strictly inside (0, 1).
pub fn mixed_nash_2x2(game: &BimatrixGame) -> Result<Mixed2x2> {
    if game.rows() != 2 || game.cols() != 2 {
        return Err(Error::UnsupportedShape(format!(
            "mixed_nash_2x2 requires a 2x2 game, got {}x{}",
            game.rows(),
            game.cols()
        )));
    }
    let b = |r: usize, c: usize| game.col_payoff(r, c);
    let a = |r: usize, c: usize| game.row_payoff(r, c);
    let den_x = b(0, 0) - b(0, 1) - b(1, 0) + b(1, 1);
    let den_y = a(0, 0) - a(0, 1) - a(1, 0) + a(1, 1);
    if den_x.abs() <= EPS || den_y.abs() <= EPS {
        return Ok(Mixed2x2::Absent { degenerate: true });
    }
    let x = (b(1, 1) - b(1, 0)) / den_x;
    let y = (a(1, 1) - a(0, 1)) / den_y;
    if !(EPS..=1.0 - EPS).contains(&x) || !(EPS..=1.0 - EPS).contains(&y) {
        return Ok(Mixed2x2::Absent { degenerate: false });
    }
    let row_value = x * (y * a(0, 0) + (1.0 - y) * a(0, 1))
        + (1.0 - x) * (y * a(1, 0) + (1.0 - y) * a(1, 1));
    let col_value = x * (y * b(0, 0) + (1.0 - y) * b(0, 1))
        + (1.0 - x) * (y * b(1, 0) + (1.0 - y) * b(1, 1));
    Ok(Mixed2x2::Interior(Solution {
        row: StrategyChoice::Mixed(vec![x, 1.0 - x]),
        col: StrategyChoice::Mixed(vec![y, 1.0 - y]),
        row_value,
        col_value,
    }))
}

/// A pure equilibrium cell with its payoff pair.
#[derive(Debug, Clone, PartialEq)]
pub struct PureEquilibrium {
    pub cell: (usize, usize),
    pub payoffs: (f64, f64),
}

/// Combined equilibrium inventory of a game.
///
/// For non-degenerate games the total count should be odd; an even count is
/// flagged as a warning, not an error, since payoff ties legitimately
/// produce even counts.
#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumReport {
    pub pure_equilibria: Vec<PureEquilibrium>,
    pub mixed_equilibrium: Option<Solution>,
    /// The 2x2 indifference system was degenerate.
    pub mixed_degenerate: bool,
    /// False for shapes beyond 2x2, where mixed search is not attempted.
    pub mixed_supported: bool,
    pub total_count: usize,
    pub oddness_warning: bool,
}

/// Enumerates pure equilibria and, for 2x2 games, the interior mixed
/// equilibrium, then checks the count against the oddness rule.
pub fn equilibrium_report(game: &BimatrixGame) -> EquilibriumReport {
    let pure_equilibria: Vec<PureEquilibrium> = pure_nash(game)
        .into_iter()
        .map(|cell| PureEquilibrium {
            cell,
            payoffs: game.payoffs(cell.0, cell.1),
        })
        .collect();
    let mixed_supported = game.rows() == 2 && game.cols() == 2;
    let (mixed_equilibrium, mixed_degenerate) = if mixed_supported {
        match mixed_nash_2x2(game).expect("shape checked") {
            Mixed2x2::Interior(s) => (Some(s), false),
            Mixed2x2::Absent { degenerate } => (None, degenerate),
        }
    } else {
        (None, false)
    };
    let total_count = pure_equilibria.len() + usize::from(mixed_equilibrium.is_some());
    EquilibriumReport {
        oddness_warning: total_count.is_multiple_of(2),
        pure_equilibria,
        mixed_equilibrium,
        mixed_degenerate,
        mixed_supported,
        total_count,
    }
}
