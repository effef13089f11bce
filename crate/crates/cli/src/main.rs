//! Command-line interface over the gamekit solvers.
//!
//! Output is deterministic and line-oriented; `--json` mirrors the text
//! content as a JSON object. Exit codes: 0 success, 1 domain errors
//! (degenerate or unsupported inputs), 2 usage and parse errors.

mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use gamekit_core::error::Error as CoreError;
use gamekit_core::extensive::{
    best_first_search, enumerate_tictactoe, parse_tree, ChainPuzzle, GameTree, PuzzleSpace,
    SearchOutcome, XWinPuzzle,
};
use gamekit_core::game::{
    parse_game, serialize_game, BimatrixGame, DominanceMode, Player, StrategyChoice,
};
use gamekit_core::iterated::{tournament, Automaton};
use gamekit_core::nash::equilibrium_report;
use gamekit_core::taxonomy::{canonical, classify_game, NamedGame};
use gamekit_core::voting::{
    decimal_to_rational, jury_probability_exact, jury_probability_weighted,
    jury_probability_weighted_exact, log_odds_weights, parse_voting, wmr_decide, IndexMethod,
    Vote, VotingFile,
};
use gamekit_core::zerosum::{maximin_profile, maximin_security, saddle_points, solve_zero_sum};

use output::{cell_text, fmt_fraction, fmt_num, pair_text, rational_to_f64, render_table};

#[derive(Parser)]
#[command(name = "gamekit", version, about = "Solve, classify and simulate finite games")]
struct Cli {
    /// Emit a JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a game read from a game file.
    Solve {
        #[command(subcommand)]
        target: SolveTarget,
    },
    /// Classify a symmetric 2x2 game by its payoff ordering.
    Classify { file: PathBuf },
    /// Emit the canonical game file for a named game.
    Canonical { name: String },
    /// Power indices of a weighted voting game.
    Power {
        file: PathBuf,
        #[arg(long, value_enum)]
        index: IndexKind,
    },
    /// Winning test for one coalition of a weighted voting game.
    Coalition {
        file: PathBuf,
        /// Player indices (0-based); omit for the empty coalition.
        #[arg(long, value_delimiter = ',')]
        members: Vec<usize>,
    },
    /// Log-odds voting weights for the given competencies.
    Weights {
        #[arg(long, value_delimiter = ',', required = true)]
        competencies: Vec<f64>,
    },
    /// Jury accuracy: binomial (--n/--p) or weighted from a voting file.
    Jury {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        /// Weight the file's voters by the log-odds of their competencies.
        #[arg(long)]
        log_odds: bool,
    },
    /// Operations on extensive-form tree files.
    Tree {
        #[command(subcommand)]
        target: TreeTarget,
    },
    /// Exhaustive tic-tac-toe enumeration.
    Ttt,
    /// Round-robin iterated-game tournament (Prisoner's Dilemma payoffs).
    Ipd {
        #[arg(long)]
        rounds: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        strategies: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Play a different symmetric 2x2 game read from a game file.
        #[arg(long)]
        game: Option<PathBuf>,
        /// Emit the score table as CSV.
        #[arg(long)]
        csv: bool,
        /// Also print each match's move transcript.
        #[arg(long)]
        transcript: bool,
    },
    /// Predicates, security levels and dominance analysis of a game file.
    Info { file: PathBuf },
    /// Iterated elimination of dominated strategies.
    Reduce {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeKind::Strict)]
        mode: ModeKind,
    },
    /// Weighted majority decision over explicit votes.
    Wmr {
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<f64>,
        #[arg(long, value_delimiter = ',', required = true)]
        votes: Vec<String>,
    },
    /// Best-first search demos.
    Search {
        #[command(subcommand)]
        target: SearchTarget,
    },
}

#[derive(Subcommand)]
enum SolveTarget {
    /// Pure saddle point, or the 2x2 closed-form mixed solution.
    Zerosum { file: PathBuf },
    /// Pure Nash equilibria; --mixed adds the 2x2 mixed equilibrium.
    Nash {
        file: PathBuf,
        #[arg(long)]
        mixed: bool,
    },
}

#[derive(Subcommand)]
enum TreeTarget {
    /// Backward induction of a perfect-information tree.
    Solve { file: PathBuf },
    /// Convert a 2-player tree to a normal-form game file.
    Normalize { file: PathBuf },
    /// Structure summary: players, information sets, strategy counts.
    Info { file: PathBuf },
}

#[derive(Subcommand)]
enum SearchTarget {
    /// A linear chain; the heuristic is the distance to the goal.
    Chain {
        #[arg(long, default_value_t = 5)]
        length: usize,
        #[arg(long)]
        max_expansions: Option<usize>,
        /// Print the expansion log.
        #[arg(long)]
        log: bool,
    },
    /// Reach an X win from the empty board against fixed replies.
    TttWin {
        #[arg(long)]
        max_expansions: Option<usize>,
        #[arg(long)]
        log: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IndexKind {
    Banzhaf,
    Shapley,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeKind {
    Strict,
    Weak,
}

impl From<ModeKind> for DominanceMode {
    fn from(mode: ModeKind) -> Self {
        match mode {
            ModeKind::Strict => DominanceMode::Strict,
            ModeKind::Weak => DominanceMode::Weak,
        }
    }
}

#[derive(Debug)]
enum CliError {
    Core(CoreError),
    Io { path: PathBuf, message: String },
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, message } => {
                write!(f, "cannot read {}: {message}", path.display())
            }
            CliError::Usage(message) => write!(f, "{message}"),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(CoreError::Parse { .. }) => 2,
            CliError::Core(_) => 1,
            CliError::Io { .. } | CliError::Usage(_) => 2,
        }
    }
}

/// One command's rendered output: plain text plus its JSON mirror.
struct Rendered {
    text: String,
    json: Json,
}

fn lines(parts: Vec<String>) -> String {
    let mut text = parts.join("\n");
    text.push('\n');
    text
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn read_game(path: &Path) -> Result<BimatrixGame, CliError> {
    Ok(parse_game(&read_file(path)?)?)
}

fn read_tree(path: &Path) -> Result<GameTree, CliError> {
    Ok(parse_tree(&read_file(path)?)?)
}

fn read_voting(path: &Path) -> Result<VotingFile, CliError> {
    Ok(parse_voting(&read_file(path)?)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(rendered) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&rendered.json).expect("valid json")
                );
            } else {
                print!("{}", rendered.text);
            }
            ExitCode::SUCCESS
        }
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(error.exit_code())
        }
    }
}

fn run(command: &Command) -> Result<Rendered, CliError> {
    match command {
        Command::Solve { target } => match target {
            SolveTarget::Zerosum { file } => solve_zerosum_cmd(file),
            SolveTarget::Nash { file, mixed } => solve_nash_cmd(file, *mixed),
        },
        Command::Classify { file } => classify_cmd(file),
        Command::Canonical { name } => canonical_cmd(name),
        Command::Power { file, index } => power_cmd(file, *index),
        Command::Coalition { file, members } => coalition_cmd(file, members),
        Command::Weights { competencies } => weights_cmd(competencies),
        Command::Jury { n, p, file, log_odds } => jury_cmd(n, p, file, *log_odds),
        Command::Tree { target } => match target {
            TreeTarget::Solve { file } => tree_solve_cmd(file),
            TreeTarget::Normalize { file } => tree_normalize_cmd(file),
            TreeTarget::Info { file } => tree_info_cmd(file),
        },
        Command::Ttt => ttt_cmd(),
        Command::Ipd { rounds, strategies, seed, game, csv, transcript } => {
            ipd_cmd(*rounds, strategies, *seed, game.as_deref(), *csv, *transcript)
        }
        Command::Info { file } => info_cmd(file),
        Command::Reduce { file, mode } => reduce_cmd(file, (*mode).into()),
        Command::Wmr { weights, votes } => wmr_cmd(weights, votes),
        Command::Search { target } => match target {
            SearchTarget::Chain { length, max_expansions, log } => {
                if *length == 0 {
                    return Err(CliError::Usage("--length must be at least 1".into()));
                }
                search_cmd("chain", &ChainPuzzle { length: *length }, *max_expansions, *log)
            }
            SearchTarget::TttWin { max_expansions, log } => {
                search_cmd("ttt-win", &XWinPuzzle, *max_expansions, *log)
            }
        },
    }
}

fn solve_zerosum_cmd(path: &Path) -> Result<Rendered, CliError> {
    let game = read_game(path)?;
    let saddles = saddle_points(&game)?;
    let mut text = Vec::new();
    if saddles.is_empty() {
        text.push("saddles: none".to_string());
    } else {
        let cells: Vec<String> = saddles.iter().map(|&cell| cell_text(&game, cell)).collect();
        text.push(format!("saddles: {}", cells.join(" ")));
    }
    let solution = solve_zero_sum(&game)?;
    let json_solution;
    if let (StrategyChoice::Pure(r), StrategyChoice::Pure(c)) = (&solution.row, &solution.col) {
        text.push(format!(
            "solution: pure {} value {}",
            cell_text(&game, (*r, *c)),
            fmt_num(solution.row_value)
        ));
        json_solution = json!({
            "kind": "pure",
            "cell": [r, c],
            "value": solution.row_value,
        });
    } else {
        let x = solution.x().expect("mixed solution");
        let y = solution.y().expect("mixed solution");
        text.push(format!(
            "solution: mixed x={} y={} value {}",
            fmt_num(x),
            fmt_num(y),
            fmt_num(solution.row_value)
        ));
        json_solution = json!({
            "kind": "mixed",
            "x": x,
            "y": y,
            "value": solution.row_value,
        });
    }
    Ok(Rendered {
        text: lines(text),
        json: json!({
            "command": "solve zerosum",
            "saddles": saddles,
            "solution": json_solution,
        }),
    })
}

fn solve_nash_cmd(path: &Path, mixed: bool) -> Result<Rendered, CliError> {
    let game = read_game(path)?;
    let report = equilibrium_report(&game);
    let mut text = Vec::new();
    if report.pure_equilibria.is_empty() {
        text.push("pure NE: none".to_string());
    }
    for eq in &report.pure_equilibria {
        text.push(format!(
            "pure NE: {} payoffs {}",
            cell_text(&game, eq.cell),
            pair_text(eq.payoffs)
        ));
    }
    let mut json_mixed = Json::Null;
    if mixed {
        if !report.mixed_supported {
            text.push("mixed NE: not computed (2x2 games only)".to_string());
            json_mixed = json!({"supported": false});
        } else if let Some(solution) = &report.mixed_equilibrium {
            let (x, y) = (solution.x().unwrap(), solution.y().unwrap());
            text.push(format!(
                "mixed NE: x={} y={} payoffs {}",
                fmt_num(x),
                fmt_num(y),
                pair_text((solution.row_value, solution.col_value))
            ));
            json_mixed = json!({
                "supported": true,
                "x": x,
                "y": y,
                "payoffs": [solution.row_value, solution.col_value],
            });
        } else if report.mixed_degenerate {
            text.push("mixed NE: none (degenerate indifference system)".to_string());
            json_mixed = json!({"supported": true, "degenerate": true});
        } else {
            text.push("mixed NE: none".to_string());
            json_mixed = json!({"supported": true, "degenerate": false});
        }
    }
    if report.oddness_warning {
        text.push("warning: even equilibrium count (degenerate game)".to_string());
    }
    let pure: Vec<Json> = report
        .pure_equilibria
        .iter()
        .map(|eq| {
            json!({
                "cell": [eq.cell.0, eq.cell.1],
                "labels": [
                    game.strategy_name(Player::Row, eq.cell.0),
                    game.strategy_name(Player::Col, eq.cell.1),
                ],
                "payoffs": [eq.payoffs.0, eq.payoffs.1],
            })
        })
        .collect();
    let mut json = json!({
        "command": "solve nash",
        "pure": pure,
        "total_count": report.total_count,
        "oddness_warning": report.oddness_warning,
    });
    if mixed {
        json["mixed"] = json_mixed;
    }
    Ok(Rendered { text: lines(text), json })
}

fn classify_cmd(path: &Path) -> Result<Rendered, CliError> {
    let game = read_game(path)?;
    let classification = classify_game(&game)?;
    Ok(Rendered {
        text: lines(vec![format!("{} ({})", classification.class, classification.ordering)]),
        json: json!({
            "command": "classify",
            "class": classification.class.to_string(),
            "ordering": classification.ordering,
        }),
    })
}

fn game_file_json(game: &BimatrixGame, file: &str) -> Json {
    let matrix = |payoff: &dyn Fn(usize, usize) -> f64| -> Vec<Vec<f64>> {
        (0..game.rows())
            .map(|r| (0..game.cols()).map(|c| payoff(r, c)).collect())
            .collect()
    };
    json!({
        "rows": game.rows(),
        "cols": game.cols(),
        "row_payoffs": matrix(&|r, c| game.row_payoff(r, c)),
        "col_payoffs": matrix(&|r, c| game.col_payoff(r, c)),
        "row_labels": game.row_labels(),
        "col_labels": game.col_labels(),
        "file": file,
    })
}

fn canonical_cmd(name: &str) -> Result<Rendered, CliError> {
    let named: NamedGame = name
        .parse()
        .map_err(|e: CoreError| CliError::Usage(e.to_string()))?;
    let game = canonical(named);
    let file = serialize_game(&game);
    let mut json = game_file_json(&game, &file);
    json["command"] = json!("canonical");
    json["name"] = json!(format!("{named:?}"));
    Ok(Rendered { text: file, json })
}

fn power_cmd(path: &Path, index: IndexKind) -> Result<Rendered, CliError> {
    let voting = read_voting(path)?;
    let result = match index {
        IndexKind::Banzhaf => voting.game.banzhaf()?,
        IndexKind::Shapley => voting.game.shapley_shubik()?,
    };
    let label = match result.method {
        IndexMethod::Banzhaf => "banzhaf",
        IndexMethod::ShapleyShubik => "shapley-shubik",
    };
    let mut text = vec![format!(
        "{label} (n={}, quota {})",
        voting.game.player_count(),
        fmt_num(voting.game.quota())
    )];
    let mut fractions = Vec::new();
    for i in 0..voting.game.player_count() {
        let fraction = result.fraction(i);
        text.push(format!(
            "player {}: raw {} share {} ({})",
            i + 1,
            result.raw[i],
            fmt_num(result.normalized[i]),
            fmt_fraction(&fraction)
        ));
        fractions.push(fmt_fraction(&fraction));
    }
    let raw: Vec<u64> = result
        .raw
        .iter()
        .map(|&r| u64::try_from(r).expect("counts fit in u64"))
        .collect();
    Ok(Rendered {
        text: lines(text),
        json: json!({
            "command": "power",
            "index": label,
            "n": voting.game.player_count(),
            "quota": voting.game.quota(),
            "raw": raw,
            "denominator": u64::try_from(result.denominator).expect("denominator fits in u64"),
            "shares": result.normalized,
            "fractions": fractions,
            "exact": result.exact,
        }),
    })
}

fn coalition_cmd(path: &Path, members: &[usize]) -> Result<Rendered, CliError> {
    let voting = read_voting(path)?;
    let winning = voting.game.is_winning(members)?;
    let weight: f64 = members.iter().map(|&i| voting.game.weights()[i]).sum();
    Ok(Rendered {
        text: lines(vec![
            format!("coalition weight: {}", fmt_num(weight)),
            format!("quota: {}", fmt_num(voting.game.quota())),
            format!("winning: {winning}"),
        ]),
        json: json!({
            "command": "coalition",
            "members": members,
            "weight": weight,
            "quota": voting.game.quota(),
            "winning": winning,
        }),
    })
}

fn weights_cmd(competencies: &[f64]) -> Result<Rendered, CliError> {
    let profile = log_odds_weights(competencies)?;
    let text = profile
        .weights
        .iter()
        .enumerate()
        .map(|(i, w)| format!("player {}: w={}", i + 1, fmt_num(*w)))
        .collect();
    Ok(Rendered {
        text: lines(text),
        json: json!({
            "command": "weights",
            "competencies": profile.competencies,
            "weights": profile.weights,
        }),
    })
}

fn jury_cmd(
    n: &Option<usize>,
    p: &Option<String>,
    file: &Option<PathBuf>,
    log_odds: bool,
) -> Result<Rendered, CliError> {
    match (n, p, file) {
        (Some(n), Some(p_text), None) => {
            if log_odds {
                return Err(CliError::Usage("--log-odds only applies with --file".into()));
            }
            let p = decimal_to_rational(p_text).map_err(|_| {
                CliError::Usage(format!("--p must be a plain decimal, got `{p_text}`"))
            })?;
            let exact = jury_probability_exact(*n, &p)?;
            let probability = rational_to_f64(&exact);
            Ok(Rendered {
                text: lines(vec![format!(
                    "{} ({})",
                    fmt_num(probability),
                    fmt_fraction(&exact)
                )]),
                json: json!({
                    "command": "jury",
                    "n": n,
                    "p": rational_to_f64(&p),
                    "probability": probability,
                    "fraction": fmt_fraction(&exact),
                }),
            })
        }
        (None, None, Some(path)) => {
            let voting = read_voting(path)?;
            let competencies = voting.competencies.as_ref().ok_or_else(|| {
                CliError::Core(CoreError::Domain(
                    "the voting file has no `competencies:` line, required for jury accuracy"
                        .into(),
                ))
            })?;
            if log_odds {
                let profile = log_odds_weights(competencies)?;
                let probability = jury_probability_weighted(&profile.weights, competencies)?;
                Ok(Rendered {
                    text: lines(vec![fmt_num(probability)]),
                    json: json!({
                        "command": "jury",
                        "weights": "log-odds",
                        "probability": probability,
                    }),
                })
            } else {
                let exact = jury_probability_weighted_exact(
                    &voting.exact_weights,
                    voting.exact_competencies.as_ref().expect("parsed with competencies"),
                )?;
                let probability = rational_to_f64(&exact);
                Ok(Rendered {
                    text: lines(vec![format!(
                        "{} ({})",
                        fmt_num(probability),
                        fmt_fraction(&exact)
                    )]),
                    json: json!({
                        "command": "jury",
                        "weights": "file",
                        "probability": probability,
                        "fraction": fmt_fraction(&exact),
                    }),
                })
            }
        }
        _ => Err(CliError::Usage(
            "jury needs either --n and --p, or --file (optionally with --log-odds)".into(),
        )),
    }
}

fn tree_solve_cmd(path: &Path) -> Result<Rendered, CliError> {
    let tree = read_tree(path)?;
    let (value, path_moves) = tree.backward_induction()?;
    let rendered_value = format!(
        "({})",
        value.iter().map(|v| fmt_num(*v)).collect::<Vec<_>>().join(",")
    );
    let rendered_path = if path_moves.is_empty() {
        "-".to_string()
    } else {
        path_moves.join(" ")
    };
    Ok(Rendered {
        text: lines(vec![
            format!("value: {rendered_value}"),
            format!("path: {rendered_path}"),
        ]),
        json: json!({
            "command": "tree solve",
            "value": value,
            "path": path_moves,
        }),
    })
}

fn tree_normalize_cmd(path: &Path) -> Result<Rendered, CliError> {
    let tree = read_tree(path)?;
    let game = tree.to_normal_form()?;
    let file = serialize_game(&game);
    let mut json = game_file_json(&game, &file);
    json["command"] = json!("tree normalize");
    Ok(Rendered { text: file, json })
}

fn tree_info_cmd(path: &Path) -> Result<Rendered, CliError> {
    use gamekit_core::extensive::Node;
    let tree = read_tree(path)?;
    let strategy_count = |player: usize| -> usize {
        tree.info_sets()
            .iter()
            .filter_map(|set| match tree.node(set[0]) {
                Node::Decision { player: p, edges } if *p == player => Some(edges.len()),
                _ => None,
            })
            .product()
    };
    let mut text = vec![
        format!("nodes: {}", tree.node_count()),
        format!("players: {}", tree.player_count()),
        format!("information_sets: {}", tree.info_sets().len()),
        format!("perfect_information: {}", tree.is_perfect_information()),
    ];
    let mut strategies = Vec::new();
    for player in 1..=tree.player_count() {
        let count = strategy_count(player);
        text.push(format!("player {player} strategies: {count}"));
        strategies.push(count);
    }
    Ok(Rendered {
        text: lines(text),
        json: json!({
            "command": "tree info",
            "nodes": tree.node_count(),
            "players": tree.player_count(),
            "information_sets": tree.info_sets().len(),
            "perfect_information": tree.is_perfect_information(),
            "strategies": strategies,
        }),
    })
}

fn ttt_cmd() -> Result<Rendered, CliError> {
    let report = enumerate_tictactoe();
    let never_loses = gamekit_core::extensive::tictactoe::verify_never_loses();
    Ok(Rendered {
        text: lines(vec![
            format!("naive_fill_count: {}", report.naive_fill_count),
            format!("encoding_bound: {}", report.encoding_bound),
            format!("reachable_states: {}", report.reachable_states),
            format!("game_value: {}", report.game_value),
            format!("never_loses: {never_loses}"),
        ]),
        json: json!({
            "command": "ttt",
            "naive_fill_count": report.naive_fill_count,
            "encoding_bound": report.encoding_bound,
            "reachable_states": report.reachable_states,
            "game_value": report.game_value.to_string(),
            "never_loses": never_loses,
        }),
    })
}

fn ipd_cmd(
    rounds: usize,
    strategy_names: &[String],
    seed: u64,
    game_path: Option<&Path>,
    csv: bool,
    transcript: bool,
) -> Result<Rendered, CliError> {
    let strategies = strategy_names
        .iter()
        .map(|name| name.parse::<Automaton>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let game = match game_path {
        Some(path) => read_game(path)?,
        None => canonical(NamedGame::PrisonersDilemma),
    };
    let result = tournament(&strategies, &game, rounds, seed)?;

    let mut text = Vec::new();
    let mut transcripts_json = Vec::new();
    if transcript {
        for m in &result.matches {
            let moves: Vec<String> = m
                .transcript
                .moves
                .iter()
                .map(|(a, b)| format!("{}{}", a.to_char(), b.to_char()))
                .collect();
            text.push(format!(
                "match {}-{} {} vs {}: {}",
                m.pair.0,
                m.pair.1,
                result.names[m.pair.0],
                result.names[m.pair.1],
                moves.join(" ")
            ));
            transcripts_json.push(json!({
                "pair": [m.pair.0, m.pair.1],
                "moves": moves,
                "scores": [m.transcript.scores.0, m.transcript.scores.1],
            }));
        }
    }

    let mut header = vec!["strategy".to_string()];
    header.extend(result.names.iter().cloned());
    header.push("total".to_string());
    let rows: Vec<Vec<String>> = result
        .names
        .iter()
        .enumerate()
        .map(|(i, name)| {
            let mut row = vec![name.clone()];
            row.extend(result.grid[i].iter().map(|v| fmt_num(*v)));
            row.push(fmt_num(result.totals[i]));
            row
        })
        .collect();
    if csv {
        text.push(header.join(","));
        for row in &rows {
            text.push(row.join(","));
        }
    } else {
        text.push(render_table(&header, &rows).trim_end().to_string());
    }

    let mut json = json!({
        "command": "ipd",
        "rounds": rounds,
        "seed": seed,
        "names": result.names,
        "grid": result.grid,
        "totals": result.totals,
    });
    if transcript {
        json["transcripts"] = Json::Array(transcripts_json);
    }
    Ok(Rendered { text: lines(text), json })
}

fn info_cmd(path: &Path) -> Result<Rendered, CliError> {
    let game = read_game(path)?;
    let profile = maximin_profile(&game);
    let (row_idx, row_security) = maximin_security(&game, Player::Row);
    let (col_idx, col_security) = maximin_security(&game, Player::Col);
    let dominated = |player: Player, mode: DominanceMode| -> (String, Vec<usize>) {
        let indices = game.dominated_strategies(player, mode);
        if indices.is_empty() {
            ("none".to_string(), indices)
        } else {
            let names: Vec<String> = indices
                .iter()
                .map(|&i| game.strategy_name(player, i))
                .collect();
            (names.join(" "), indices)
        }
    };
    let (strict_row, strict_row_idx) = dominated(Player::Row, DominanceMode::Strict);
    let (strict_col, strict_col_idx) = dominated(Player::Col, DominanceMode::Strict);
    let (weak_row, weak_row_idx) = dominated(Player::Row, DominanceMode::Weak);
    let (weak_col, weak_col_idx) = dominated(Player::Col, DominanceMode::Weak);

    let text = vec![
        format!("shape: {} {}", game.rows(), game.cols()),
        format!("zerosum: {}", game.is_zero_sum()),
        format!("symmetric: {}", game.is_symmetric()),
        format!(
            "row security: strategy {} value {}",
            game.strategy_name(Player::Row, row_idx),
            fmt_num(row_security)
        ),
        format!(
            "col security: strategy {} value {}",
            game.strategy_name(Player::Col, col_idx),
            fmt_num(col_security)
        ),
        format!(
            "maximin pair: {} payoffs {} cell-consistent {}",
            cell_text(&game, (profile.row_strategy, profile.col_strategy)),
            pair_text(profile.cell_payoffs),
            profile.cell_consistent
        ),
        format!("dominated strict row: {strict_row}"),
        format!("dominated strict col: {strict_col}"),
        format!("dominated weak row: {weak_row}"),
        format!("dominated weak col: {weak_col}"),
    ];
    Ok(Rendered {
        text: lines(text),
        json: json!({
            "command": "info",
            "shape": [game.rows(), game.cols()],
            "zerosum": game.is_zero_sum(),
            "symmetric": game.is_symmetric(),
            "row_security": {"strategy": row_idx, "value": row_security},
            "col_security": {"strategy": col_idx, "value": col_security},
            "maximin_pair": {
                "cell": [profile.row_strategy, profile.col_strategy],
                "payoffs": [profile.cell_payoffs.0, profile.cell_payoffs.1],
                "cell_consistent": profile.cell_consistent,
            },
            "dominated": {
                "strict": {"row": strict_row_idx, "col": strict_col_idx},
                "weak": {"row": weak_row_idx, "col": weak_col_idx},
            },
        }),
    })
}

fn reduce_cmd(path: &Path, mode: DominanceMode) -> Result<Rendered, CliError> {
    let game = read_game(path)?;
    let reduction = game.eliminate_dominated(mode);
    let mut text = Vec::new();
    let mut trace_json = Vec::new();
    if reduction.trace.is_empty() {
        text.push("no dominated strategies".to_string());
    }
    for step in &reduction.trace {
        let label = game.strategy_name(step.player, step.index);
        text.push(format!(
            "round {}: removed {} {} ({})",
            step.round, step.player, step.index, label
        ));
        trace_json.push(json!({
            "round": step.round,
            "player": step.player.to_string(),
            "index": step.index,
            "label": label,
        }));
    }
    let file = serialize_game(&reduction.game);
    text.push(file.trim_end().to_string());
    Ok(Rendered {
        text: lines(text),
        json: json!({
            "command": "reduce",
            "mode": match mode { DominanceMode::Strict => "strict", DominanceMode::Weak => "weak" },
            "trace": trace_json,
            "surviving_rows": reduction.surviving_rows,
            "surviving_cols": reduction.surviving_cols,
            "file": file,
        }),
    })
}

fn wmr_cmd(weights: &[f64], votes: &[String]) -> Result<Rendered, CliError> {
    let votes = votes
        .iter()
        .map(|v| match v.trim() {
            "+1" | "1" => Ok(Vote::Plus),
            "-1" => Ok(Vote::Minus),
            other => Err(CliError::Usage(format!("votes must be +1 or -1, got `{other}`"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let decision = wmr_decide(weights, &votes)?;
    Ok(Rendered {
        text: lines(vec![format!("decision: {decision}")]),
        json: json!({
            "command": "wmr",
            "decision": decision.to_string(),
        }),
    })
}

fn search_cmd<P: PuzzleSpace>(
    demo: &str,
    space: &P,
    max_expansions: Option<usize>,
    log: bool,
) -> Result<Rendered, CliError> {
    let outcome = best_first_search(space, max_expansions);
    let mut text = Vec::new();
    let (expansions, records) = match &outcome {
        SearchOutcome::Found { expansions, log, .. } => (*expansions, log),
        SearchOutcome::Frontier { expansions, log, .. } => (*expansions, log),
        SearchOutcome::NotFound { expansions, log } => (*expansions, log),
    };
    if log {
        for record in records {
            text.push(format!(
                "expansion {}: depth {} rank {}",
                record.order,
                record.depth,
                fmt_num(record.rank)
            ));
        }
    }
    let mut json = json!({
        "command": "search",
        "demo": demo,
        "expansions": expansions,
    });
    if log {
        json["log"] = Json::Array(
            records
                .iter()
                .map(|r| json!({"order": r.order, "depth": r.depth, "rank": r.rank}))
                .collect(),
        );
    }
    match &outcome {
        SearchOutcome::Found { path, .. } => {
            text.push("outcome: found".to_string());
            text.push(format!(
                "path: {}",
                if path.is_empty() { "-".to_string() } else { path.join(" ") }
            ));
            text.push(format!("expansions: {expansions}"));
            json["outcome"] = json!("found");
            json["path"] = json!(path);
        }
        SearchOutcome::Frontier { entries, .. } => {
            text.push("outcome: frontier".to_string());
            text.push(format!("expansions: {expansions}"));
            for entry in entries {
                text.push(format!(
                    "frontier: rank {} depth {} path {}",
                    fmt_num(entry.rank),
                    entry.depth,
                    if entry.path.is_empty() { "-".to_string() } else { entry.path.join(" ") }
                ));
            }
            json["outcome"] = json!("frontier");
            json["frontier"] = Json::Array(
                entries
                    .iter()
                    .map(|e| json!({"rank": e.rank, "depth": e.depth, "path": e.path}))
                    .collect(),
            );
        }
        SearchOutcome::NotFound { .. } => {
            text.push("outcome: not-found".to_string());
            text.push(format!("expansions: {expansions}"));
            json["outcome"] = json!("not-found");
        }
    }
    Ok(Rendered { text: lines(text), json })
}
