//! Normal-form game representation, the game file format, and dominance
//! elimination. Every solver in the crate consumes [`BimatrixGame`].

use crate::error::{Error, Result};

/// Absolute tolerance used for every payoff comparison in the crate.
///
/// Payoffs are plain `f64`; the tolerance only guards values that went
/// through decimal parsing or a handful of arithmetic steps.
pub const EPS: f64 = 1e-9;

pub(crate) fn approx_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= EPS
}

pub(crate) fn approx_gt(a: f64, b: f64) -> bool {
    a > b + EPS
}

pub(crate) fn approx_ge(a: f64, b: f64) -> bool {
    a >= b - EPS
}

/// The two sides of a bimatrix game. The row player is "player 1".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Player {
    Row,
    Col,
}

impl std::fmt::Display for Player {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Player::Row => write!(f, "row"),
            Player::Col => write!(f, "col"),
        }
    }
}

/// Dominance flavor: `Strict` requires every component to be better,
/// `Weak` requires no component worse and at least one better.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominanceMode {
    Strict,
    Weak,
}

/// A two-player normal-form game with separate payoff matrices.
///
/// Both matrices are `rows x cols`, entry `(r, c)` holding the respective
/// player's payoff when the row player picks strategy `r` and the column
/// player picks strategy `c`.
#[derive(Debug, Clone, PartialEq)]
pub struct BimatrixGame {
    rows: usize,
    cols: usize,
    row_payoffs: Vec<f64>,
    col_payoffs: Vec<f64>,
    row_labels: Option<Vec<String>>,
    col_labels: Option<Vec<String>>,
}

impl BimatrixGame {
    /// Builds a game from per-player payoff matrices given as rows.
    pub fn new(row_payoffs: Vec<Vec<f64>>, col_payoffs: Vec<Vec<f64>>) -> Result<Self> {
        let rows = row_payoffs.len();
        if rows == 0 {
            return Err(Error::Contract("a game needs at least one row".into()));
        }
        let cols = row_payoffs[0].len();
        if cols == 0 {
            return Err(Error::Contract("a game needs at least one column".into()));
        }
        if col_payoffs.len() != rows {
            return Err(Error::Contract(format!(
                "payoff matrices disagree on row count: {} vs {}",
                rows,
                col_payoffs.len()
            )));
        }
        let mut flat_row = Vec::with_capacity(rows * cols);
        let mut flat_col = Vec::with_capacity(rows * cols);
        for (r, (rp, cp)) in row_payoffs.iter().zip(col_payoffs.iter()).enumerate() {
            if rp.len() != cols || cp.len() != cols {
                return Err(Error::Contract(format!(
                    "row {} does not have {} columns in both matrices",
                    r, cols
                )));
            }
            flat_row.extend_from_slice(rp);
            flat_col.extend_from_slice(cp);
        }
        if let Some(bad) = flat_row.iter().chain(flat_col.iter()).find(|v| !v.is_finite()) {
            return Err(Error::Contract(format!("payoffs must be finite, got {bad}")));
        }
        Ok(BimatrixGame {
            rows,
            cols,
            row_payoffs: flat_row,
            col_payoffs: flat_col,
            row_labels: None,
            col_labels: None,
        })
    }

    /// Builds a zero-sum game: the column player's payoffs are the negation
    /// of the row player's.
    pub fn zero_sum(row_payoffs: Vec<Vec<f64>>) -> Result<Self> {
        let col_payoffs = row_payoffs
            .iter()
            .map(|row| row.iter().map(|v| -v).collect())
            .collect();
        BimatrixGame::new(row_payoffs, col_payoffs)
    }

    /// Attaches strategy names; each list must match its dimension.
    pub fn with_labels(
        mut self,
        row_labels: Vec<String>,
        col_labels: Vec<String>,
    ) -> Result<Self> {
        if row_labels.len() != self.rows {
            return Err(Error::Contract(format!(
                "{} row labels for {} rows",
                row_labels.len(),
                self.rows
            )));
        }
        if col_labels.len() != self.cols {
            return Err(Error::Contract(format!(
                "{} col labels for {} cols",
                col_labels.len(),
                self.cols
            )));
        }
        self.row_labels = Some(row_labels);
        self.col_labels = Some(col_labels);
        Ok(self)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_payoff(&self, r: usize, c: usize) -> f64 {
        self.row_payoffs[r * self.cols + c]
    }

    pub fn col_payoff(&self, r: usize, c: usize) -> f64 {
        self.col_payoffs[r * self.cols + c]
    }

    /// Both players' payoffs at a cell.
    pub fn payoffs(&self, r: usize, c: usize) -> (f64, f64) {
        (self.row_payoff(r, c), self.col_payoff(r, c))
    }

    pub fn row_labels(&self) -> Option<&[String]> {
        self.row_labels.as_deref()
    }

    pub fn col_labels(&self) -> Option<&[String]> {
        self.col_labels.as_deref()
    }

    /// Display name of a strategy: its label when present, else its index.
    pub fn strategy_name(&self, player: Player, index: usize) -> String {
        let labels = match player {
            Player::Row => &self.row_labels,
            Player::Col => &self.col_labels,
        };
        match labels {
            Some(names) => names[index].clone(),
            None => index.to_string(),
        }
    }

    /// True iff the payoff matrices cancel elementwise.
    pub fn is_zero_sum(&self) -> bool {
        self.row_payoffs
            .iter()
            .zip(self.col_payoffs.iter())
            .all(|(a, b)| approx_eq(a + b, 0.0))
    }

    /// True iff the players can switch roles with payoffs exchanged:
    /// the game is square and `col_payoffs` is the transpose of
    /// `row_payoffs`. Non-square games are simply not symmetric.
    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        (0..self.rows).all(|r| {
            (0..self.cols).all(|c| approx_eq(self.col_payoff(r, c), self.row_payoff(c, r)))
        })
    }

    /// Exchanges the players' roles: both matrices are transposed and then
    /// swapped, as are the label lists. Applying it twice is the identity.
    pub fn swap_players(&self) -> BimatrixGame {
        let mut row = vec![0.0; self.rows * self.cols];
        let mut col = vec![0.0; self.rows * self.cols];
        for r in 0..self.cols {
            for c in 0..self.rows {
                row[r * self.rows + c] = self.col_payoff(c, r);
                col[r * self.rows + c] = self.row_payoff(c, r);
            }
        }
        BimatrixGame {
            rows: self.cols,
            cols: self.rows,
            row_payoffs: row,
            col_payoffs: col,
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
        }
    }

    /// The acting player's own payoff vector for one of its strategies:
    /// a row of `row_payoffs` for the row player, a column of `col_payoffs`
    /// for the column player.
    fn own_payoff_vector(&self, player: Player, index: usize) -> Vec<f64> {
        match player {
            Player::Row => (0..self.cols).map(|c| self.row_payoff(index, c)).collect(),
            Player::Col => (0..self.rows).map(|r| self.col_payoff(r, index)).collect(),
        }
    }

    fn strategy_count(&self, player: Player) -> usize {
        match player {
            Player::Row => self.rows,
            Player::Col => self.cols,
        }
    }

    /// Strategies of `player` dominated by some other pure strategy of the
    /// same player, in ascending index order. Domination is judged on the
    /// player's own payoffs only.
    pub fn dominated_strategies(&self, player: Player, mode: DominanceMode) -> Vec<usize> {
        let n = self.strategy_count(player);
        let vectors: Vec<Vec<f64>> = (0..n).map(|i| self.own_payoff_vector(player, i)).collect();
        (0..n)
            .filter(|&i| {
                (0..n).any(|j| j != i && dominates(&vectors[j], &vectors[i], mode))
            })
            .collect()
    }

    /// Removes dominated strategies until a fixpoint.
    ///
    /// Each pass scans the row player first and removes the lowest-index
    /// dominated strategy it finds (one removal per pass). Strict
    /// elimination is order-independent; this fixed order makes weak
    /// elimination deterministic.
    pub fn eliminate_dominated(&self, mode: DominanceMode) -> Reduction {
        let mut game = self.clone();
        let mut surviving_rows: Vec<usize> = (0..self.rows).collect();
        let mut surviving_cols: Vec<usize> = (0..self.cols).collect();
        let mut trace = Vec::new();
        let mut round = 1;
        loop {
            let removal = [Player::Row, Player::Col].into_iter().find_map(|player| {
                game.dominated_strategies(player, mode)
                    .first()
                    .copied()
                    .map(|idx| (player, idx))
            });
            let Some((player, idx)) = removal else { break };
            let original = match player {
                Player::Row => surviving_rows.remove(idx),
                Player::Col => surviving_cols.remove(idx),
            };
            game = game.without_strategy(player, idx);
            trace.push(Elimination {
                player,
                index: original,
                round,
            });
            round += 1;
        }
        Reduction {
            game,
            trace,
            surviving_rows,
            surviving_cols,
        }
    }

    fn without_strategy(&self, player: Player, index: usize) -> BimatrixGame {
        let keep_row = |r: usize| player != Player::Row || r != index;
        let keep_col = |c: usize| player != Player::Col || c != index;
        let rows: Vec<usize> = (0..self.rows).filter(|&r| keep_row(r)).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&c| keep_col(c)).collect();
        let pick = |flat: &dyn Fn(usize, usize) -> f64| -> Vec<f64> {
            rows.iter()
                .flat_map(|&r| cols.iter().map(move |&c| flat(r, c)))
                .collect()
        };
        BimatrixGame {
            rows: rows.len(),
            cols: cols.len(),
            row_payoffs: pick(&|r, c| self.row_payoff(r, c)),
            col_payoffs: pick(&|r, c| self.col_payoff(r, c)),
            row_labels: self
                .row_labels
                .as_ref()
                .map(|l| rows.iter().map(|&r| l[r].clone()).collect()),
            col_labels: self
                .col_labels
                .as_ref()
                .map(|l| cols.iter().map(|&c| l[c].clone()).collect()),
        }
    }
}

fn dominates(a: &[f64], b: &[f64], mode: DominanceMode) -> bool {
    match mode {
        DominanceMode::Strict => a.iter().zip(b).all(|(x, y)| approx_gt(*x, *y)),
        DominanceMode::Weak => {
            a.iter().zip(b).all(|(x, y)| approx_ge(*x, *y))
                && a.iter().zip(b).any(|(x, y)| approx_gt(*x, *y))
        }
    }
}

/// One removal performed by [`BimatrixGame::eliminate_dominated`].
/// `index` refers to the strategy's position in the *original* game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elimination {
    pub player: Player,
    pub index: usize,
    pub round: usize,
}

/// Result of iterated dominance elimination.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub game: BimatrixGame,
    pub trace: Vec<Elimination>,
    /// Original indices of the surviving row strategies, ascending.
    pub surviving_rows: Vec<usize>,
    /// Original indices of the surviving column strategies, ascending.
    pub surviving_cols: Vec<usize>,
}

/// A generic 2x2 zero-sum game, payoffs to the row ("max") player:
///
/// ```text
///          y      1-y
///   x      a       b
///   1-x    c       d
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroSum2x2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl ZeroSum2x2 {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        if ![a, b, c, d].iter().all(|v| v.is_finite()) {
            return Err(Error::Contract("payoffs must be finite".into()));
        }
        Ok(ZeroSum2x2 { a, b, c, d })
    }

    /// Extracts the row-player matrix of a zero-sum 2x2 bimatrix game.
    pub fn from_game(game: &BimatrixGame) -> Result<Self> {
        if game.rows() != 2 || game.cols() != 2 {
            return Err(Error::UnsupportedShape(format!(
                "expected a 2x2 game, got {}x{}",
                game.rows(),
                game.cols()
            )));
        }
        if !game.is_zero_sum() {
            return Err(Error::Contract(
                "expected a zero-sum game (row and column payoffs must cancel)".into(),
            ));
        }
        ZeroSum2x2::new(
            game.row_payoff(0, 0),
            game.row_payoff(0, 1),
            game.row_payoff(1, 0),
            game.row_payoff(1, 1),
        )
    }

    pub fn to_game(self) -> BimatrixGame {
        BimatrixGame::zero_sum(vec![vec![self.a, self.b], vec![self.c, self.d]])
            .expect("finite 2x2 payoffs")
    }
}

/// A player's side of a solution: either a pure strategy index or a
/// probability vector over its pure strategies.
#[derive(Debug, Clone, PartialEq)]
pub enum StrategyChoice {
    Pure(usize),
    Mixed(Vec<f64>),
}

impl StrategyChoice {
    pub fn is_pure(&self) -> bool {
        matches!(self, StrategyChoice::Pure(_))
    }

    /// Probability of the first strategy, for 2x2 mixed choices.
    pub fn first_probability(&self) -> Option<f64> {
        match self {
            StrategyChoice::Mixed(probs) => probs.first().copied(),
            StrategyChoice::Pure(_) => None,
        }
    }
}

/// A solved game: one strategy per player plus the per-player value.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub row: StrategyChoice,
    pub col: StrategyChoice,
    pub row_value: f64,
    pub col_value: f64,
}

impl Solution {
    pub fn is_pure(&self) -> bool {
        self.row.is_pure() && self.col.is_pure()
    }

    /// Row player's probability of its first strategy (mixed 2x2 solutions).
    pub fn x(&self) -> Option<f64> {
        self.row.first_probability()
    }

    /// Column player's probability of its first strategy.
    pub fn y(&self) -> Option<f64> {
        self.col.first_probability()
    }
}

// ---------------------------------------------------------------------------
// Game file format
// ---------------------------------------------------------------------------

struct Lines<'a> {
    lines: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            lines: text.lines().enumerate(),
        }
    }

    /// Next significant line: skips blanks and `#` comment lines.
    /// Returns (1-based line number, trimmed content).
    fn next_significant(&mut self) -> Option<(usize, &'a str)> {
        for (idx, raw) in self.lines.by_ref() {
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            return Some((idx + 1, trimmed));
        }
        None
    }
}

fn expect_key<'a>(line: &'a str, key: &str, line_no: usize) -> Result<&'a str> {
    line.strip_prefix(key)
        .map(str::trim)
        .ok_or_else(|| Error::parse(line_no, format!("expected `{key}`, got `{line}`")))
}

fn parse_payoff_row(line: &str, line_no: usize, cols: usize) -> Result<Vec<f64>> {
    let values: Vec<f64> = line
        .split_whitespace()
        .map(|tok| {
            tok.parse::<f64>()
                .map_err(|_| Error::parse(line_no, format!("non-numeric payoff `{tok}`")))
        })
        .collect::<Result<_>>()?;
    if values.len() != cols {
        return Err(Error::parse(
            line_no,
            format!("expected {} payoffs in this row, got {}", cols, values.len()),
        ));
    }
    if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::parse(line_no, format!("payoff `{bad}` is not finite")));
    }
    Ok(values)
}

fn parse_matrix(lines: &mut Lines, rows: usize, cols: usize) -> Result<Vec<Vec<f64>>> {
    let mut matrix = Vec::with_capacity(rows);
    for _ in 0..rows {
        let (no, line) = lines
            .next_significant()
            .ok_or_else(|| Error::parse(0, "unexpected end of file inside payoff matrix"))?;
        matrix.push(parse_payoff_row(line, no, cols)?);
    }
    Ok(matrix)
}

/// Parses the game file format:
///
/// ```text
/// game: normalform
/// zerosum: true|false
/// shape: R C
/// row_payoffs:
/// <R lines of C whitespace-separated decimals>
/// col_payoffs:            # only when zerosum is false
/// <R lines>
/// row_labels: <names>     # optional
/// col_labels: <names>     # optional
/// ```
///
/// `#` starts a comment line and blank lines are ignored. Zero-sum files
/// carry only the row player's payoffs; the column player's are their
/// negation.
pub fn parse_game(text: &str) -> Result<BimatrixGame> {
    let mut lines = Lines::new(text);

    let (no, line) = lines
        .next_significant()
        .ok_or_else(|| Error::parse(0, "empty game file"))?;
    let kind = expect_key(line, "game:", no)?;
    if kind != "normalform" {
        return Err(Error::parse(no, format!("unknown game kind `{kind}`")));
    }

    let (no, line) = lines
        .next_significant()
        .ok_or_else(|| Error::parse(no, "missing `zerosum:` line"))?;
    let zero_sum = match expect_key(line, "zerosum:", no)? {
        "true" => true,
        "false" => false,
        other => {
            return Err(Error::parse(no, format!("zerosum must be true or false, got `{other}`")))
        }
    };

    let (no, line) = lines
        .next_significant()
        .ok_or_else(|| Error::parse(no, "missing `shape:` line"))?;
    let shape = expect_key(line, "shape:", no)?;
    let dims: Vec<usize> = shape
        .split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::parse(no, format!("bad dimension `{tok}`")))
        })
        .collect::<Result<_>>()?;
    let [rows, cols] = dims[..] else {
        return Err(Error::parse(no, "shape needs exactly two dimensions: R C"));
    };
    if rows == 0 || cols == 0 {
        return Err(Error::parse(no, "shape dimensions must be at least 1"));
    }

    let (no, line) = lines
        .next_significant()
        .ok_or_else(|| Error::parse(no, "missing `row_payoffs:` section"))?;
    expect_key(line, "row_payoffs:", no)?;
    let row_payoffs = parse_matrix(&mut lines, rows, cols)?;

    let col_payoffs = if zero_sum {
        row_payoffs
            .iter()
            .map(|row| row.iter().map(|v| -v).collect())
            .collect()
    } else {
        let (no, line) = lines
            .next_significant()
            .ok_or_else(|| Error::parse(no, "missing `col_payoffs:` section (zerosum is false)"))?;
        expect_key(line, "col_payoffs:", no)?;
        parse_matrix(&mut lines, rows, cols)?
    };

    let mut row_labels: Option<Vec<String>> = None;
    let mut col_labels: Option<Vec<String>> = None;
    while let Some((no, line)) = lines.next_significant() {
        let (slot, expected, rest) = if let Some(rest) = line.strip_prefix("row_labels:") {
            (&mut row_labels, rows, rest)
        } else if let Some(rest) = line.strip_prefix("col_labels:") {
            (&mut col_labels, cols, rest)
        } else {
            return Err(Error::parse(no, format!("unexpected line `{line}`")));
        };
        if slot.is_some() {
            return Err(Error::parse(no, "duplicate label line"));
        }
        let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
        if names.len() != expected {
            return Err(Error::parse(
                no,
                format!("expected {} labels, got {}", expected, names.len()),
            ));
        }
        *slot = Some(names);
    }

    let game = BimatrixGame::new(row_payoffs, col_payoffs)?;
    match (row_labels, col_labels) {
        (Some(r), Some(c)) => game.with_labels(r, c),
        (None, None) => Ok(game),
        (r, c) => {
            // Only one side labeled: synthesize indices for the other.
            let row = r.unwrap_or_else(|| (0..rows).map(|i| i.to_string()).collect());
            let col = c.unwrap_or_else(|| (0..cols).map(|i| i.to_string()).collect());
            game.with_labels(row, col)
        }
    }
}

/// Serializes a game in the file format accepted by [`parse_game`].
///
/// Payoffs are written with the shortest decimal form that parses back to
/// the identical `f64`, so parse -> serialize -> parse is the identity.
/// The zero-sum header is emitted only when the column payoffs are the
/// exact negation of the row payoffs.
pub fn serialize_game(game: &BimatrixGame) -> String {
    let exact_zero_sum = (0..game.rows())
        .all(|r| (0..game.cols()).all(|c| game.col_payoff(r, c) == -game.row_payoff(r, c)));
    let mut out = String::new();
    out.push_str("game: normalform\n");
    out.push_str(&format!("zerosum: {}\n", exact_zero_sum));
    out.push_str(&format!("shape: {} {}\n", game.rows(), game.cols()));
    let matrix = |out: &mut String, payoff: &dyn Fn(usize, usize) -> f64| {
        for r in 0..game.rows() {
            let row: Vec<String> = (0..game.cols()).map(|c| payoff(r, c).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    };
    out.push_str("row_payoffs:\n");
    matrix(&mut out, &|r, c| game.row_payoff(r, c));
    if !exact_zero_sum {
        out.push_str("col_payoffs:\n");
        matrix(&mut out, &|r, c| game.col_payoff(r, c));
    }
    if let Some(labels) = game.row_labels() {
        out.push_str(&format!("row_labels: {}\n", labels.join(" ")));
    }
    if let Some(labels) = game.col_labels() {
        out.push_str(&format!("col_labels: {}\n", labels.join(" ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::taxonomy::{canonical, NamedGame};

    fn table2() -> BimatrixGame {
        BimatrixGame::zero_sum(vec![vec![0.0, -3.0], vec![4.0, 1.0]]).unwrap()
    }

    fn table4() -> BimatrixGame {
        BimatrixGame::new(
            vec![vec![3.0, 2.0], vec![4.0, 1.0]],
            vec![vec![3.0, 4.0], vec![1.0, 2.0]],
        )
        .unwrap()
    }

    #[test]
    fn zero_sum_file_negates_column_payoffs() {
        let text = "game: normalform\nzerosum: true\nshape: 2 2\nrow_payoffs:\n0 -3\n4 1\n";
        let game = parse_game(text).unwrap();
        assert_eq!(game.col_payoff(0, 0), 0.0);
        assert_eq!(game.col_payoff(0, 1), 3.0);
        assert_eq!(game.col_payoff(1, 0), -4.0);
        assert_eq!(game.col_payoff(1, 1), -1.0);
        assert!(game.is_zero_sum());
    }

    #[test]
    fn degenerate_1x1_game_is_valid() {
        let game = BimatrixGame::new(vec![vec![0.0]], vec![vec![0.0]]).unwrap();
        assert_eq!((game.rows(), game.cols()), (1, 1));
        assert!(game.is_zero_sum());
        assert!(game.is_symmetric());
    }

    #[test]
    fn short_payoff_row_errors_with_line_number() {
        let text = "game: normalform\nzerosum: true\nshape: 2 3\nrow_payoffs:\n1 2 3\n4 5\n";
        let err = parse_game(text).unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 6,
                message: "expected 3 payoffs in this row, got 2".into()
            }
        );
    }

    #[test]
    fn non_numeric_token_errors_with_line_number() {
        let text = "game: normalform\nzerosum: true\nshape: 1 2\nrow_payoffs:\n1 oops\n";
        match parse_game(text).unwrap_err() {
            Error::Parse { line, message } => {
                assert_eq!(line, 5);
                assert!(message.contains("oops"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn missing_section_is_a_parse_error() {
        let text = "game: normalform\nzerosum: false\nshape: 1 1\nrow_payoffs:\n1\n";
        assert!(matches!(parse_game(text), Err(Error::Parse { .. })));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# a game\n\ngame: normalform\n# header done\nzerosum: true\nshape: 1 1\nrow_payoffs:\n7\n";
        let game = parse_game(text).unwrap();
        assert_eq!(game.row_payoff(0, 0), 7.0);
    }

    #[test]
    fn zero_sum_predicate_on_paper_games() {
        assert!(table2().is_zero_sum());
        assert!(!table4().is_zero_sum());
        let zeros = BimatrixGame::new(
            vec![vec![0.0, 0.0], vec![0.0, 0.0]],
            vec![vec![0.0, 0.0], vec![0.0, 0.0]],
        )
        .unwrap();
        assert!(zeros.is_zero_sum());
    }

    #[test]
    fn symmetry_predicate_on_paper_games() {
        assert!(canonical(NamedGame::Chicken).is_symmetric());
        assert!(!canonical(NamedGame::Hostage).is_symmetric());
        let rect = BimatrixGame::new(
            vec![vec![1.0, 2.0, 3.0], vec![4.0, 5.0, 6.0]],
            vec![vec![1.0, 2.0, 3.0], vec![4.0, 5.0, 6.0]],
        )
        .unwrap();
        assert!(!rect.is_symmetric());
    }

    #[test]
    fn prisoners_dilemma_row_cooperate_is_strictly_dominated() {
        let pd = canonical(NamedGame::PrisonersDilemma);
        assert_eq!(pd.dominated_strategies(Player::Row, DominanceMode::Strict), vec![0]);
        assert_eq!(pd.dominated_strategies(Player::Col, DominanceMode::Strict), vec![0]);
    }

    #[test]
    fn chicken_has_no_dominated_strategies() {
        let chicken = canonical(NamedGame::Chicken);
        assert!(chicken.dominated_strategies(Player::Row, DominanceMode::Strict).is_empty());
        assert!(chicken.dominated_strategies(Player::Col, DominanceMode::Strict).is_empty());
    }

    #[test]
    fn identical_rows_do_not_dominate_each_other() {
        let game = BimatrixGame::new(
            vec![vec![1.0, 2.0], vec![1.0, 2.0]],
            vec![vec![0.0, 0.0], vec![0.0, 0.0]],
        )
        .unwrap();
        assert!(game.dominated_strategies(Player::Row, DominanceMode::Strict).is_empty());
        assert!(game.dominated_strategies(Player::Row, DominanceMode::Weak).is_empty());
    }

    #[test]
    fn weak_dominance_needs_one_strict_component() {
        let game = BimatrixGame::new(
            vec![vec![1.0, 2.0], vec![1.0, 3.0]],
            vec![vec![0.0, 0.0], vec![0.0, 0.0]],
        )
        .unwrap();
        assert!(game.dominated_strategies(Player::Row, DominanceMode::Strict).is_empty());
        assert_eq!(game.dominated_strategies(Player::Row, DominanceMode::Weak), vec![0]);
    }

    #[test]
    fn prisoners_dilemma_reduces_to_mutual_defection() {
        let pd = canonical(NamedGame::PrisonersDilemma);
        let reduction = pd.eliminate_dominated(DominanceMode::Strict);
        assert_eq!((reduction.game.rows(), reduction.game.cols()), (1, 1));
        assert_eq!(reduction.surviving_rows, vec![1]);
        assert_eq!(reduction.surviving_cols, vec![1]);
        assert_eq!(reduction.game.payoffs(0, 0), (2.0, 2.0));
    }

    #[test]
    fn leader_is_unchanged_by_elimination() {
        let leader = canonical(NamedGame::Leader);
        let reduction = leader.eliminate_dominated(DominanceMode::Strict);
        assert!(reduction.trace.is_empty());
        assert_eq!(reduction.game, leader);
    }

    #[test]
    fn hostage_elimination_removes_row_first_then_column() {
        let hostage = canonical(NamedGame::Hostage);
        let reduction = hostage.eliminate_dominated(DominanceMode::Strict);
        assert_eq!(
            reduction.trace,
            vec![
                Elimination { player: Player::Row, index: 0, round: 1 },
                Elimination { player: Player::Col, index: 1, round: 2 },
            ]
        );
        assert_eq!(reduction.game.payoffs(0, 0), (4.0, 2.0));
        assert_eq!(reduction.surviving_rows, vec![1]);
        assert_eq!(reduction.surviving_cols, vec![0]);
    }

    #[test]
    fn swap_players_is_an_involution() {
        let hostage = canonical(NamedGame::Hostage);
        assert_eq!(hostage.swap_players().swap_players(), hostage);
        let rect = BimatrixGame::new(
            vec![vec![1.0, 2.0, 3.0], vec![4.0, 5.0, 6.0]],
            vec![vec![-1.0, 0.5, 3.25], vec![2.0, 7.0, 9.0]],
        )
        .unwrap();
        assert_eq!(rect.swap_players().swap_players(), rect);
    }

    #[test]
    fn serialize_round_trips() {
        for game in [table2(), table4(), canonical(NamedGame::Kamikaze)] {
            let text = serialize_game(&game);
            let reparsed = parse_game(&text).unwrap();
            assert_eq!(serialize_game(&reparsed), text);
            assert_eq!(reparsed.rows(), game.rows());
            for r in 0..game.rows() {
                for c in 0..game.cols() {
                    assert_eq!(reparsed.payoffs(r, c), game.payoffs(r, c));
                }
            }
        }
    }

    #[test]
    fn labels_survive_the_file_format() {
        let game = table4()
            .with_labels(vec!["A".into(), "B".into()], vec!["A".into(), "B".into()])
            .unwrap();
        let reparsed = parse_game(&serialize_game(&game)).unwrap();
        assert_eq!(reparsed.row_labels(), game.row_labels());
        assert_eq!(reparsed.strategy_name(Player::Col, 1), "B");
    }
}
