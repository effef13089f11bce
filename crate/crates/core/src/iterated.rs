//! Iterated symmetric 2x2 games between strategy automata, with
//! round-robin tournaments.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::game::BimatrixGame;
use crate::parallel;

/// A move in a cooperate/defect game. Cooperate is strategy index 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    Cooperate,
    Defect,
}

impl Move {
    pub fn index(&self) -> usize {
        match self {
            Move::Cooperate => 0,
            Move::Defect => 1,
        }
    }

    pub fn to_char(&self) -> char {
        match self {
            Move::Cooperate => 'C',
            Move::Defect => 'D',
        }
    }
}

/// A strategy automaton. Decisions at round k read only rounds before k;
/// deterministic automata ignore the randomness stream.
#[derive(Debug, Clone, PartialEq)]
pub enum Automaton {
    AlwaysCooperate,
    AlwaysDefect,
    /// Cooperates first, then copies the opponent's previous move.
    TitForTat,
    /// Cooperates until the opponent's first defection, then defects forever.
    GrimTrigger,
    /// Cooperates with the given probability each round.
    Random(f64),
}

impl Automaton {
    pub fn name(&self) -> String {
        match self {
            Automaton::AlwaysCooperate => "AlwaysC".to_string(),
            Automaton::AlwaysDefect => "AlwaysD".to_string(),
            Automaton::TitForTat => "TitForTat".to_string(),
            Automaton::GrimTrigger => "GrimTrigger".to_string(),
            Automaton::Random(p) => format!("Random({p})"),
        }
    }

    pub fn is_deterministic(&self) -> bool {
        !matches!(self, Automaton::Random(_))
    }

    pub fn decide(&self, _own: &[Move], opponent: &[Move], rng: &mut ChaCha8Rng) -> Move {
        match self {
            Automaton::AlwaysCooperate => Move::Cooperate,
            Automaton::AlwaysDefect => Move::Defect,
            Automaton::TitForTat => opponent.last().copied().unwrap_or(Move::Cooperate),
            Automaton::GrimTrigger => {
                if opponent.contains(&Move::Defect) {
                    Move::Defect
                } else {
                    Move::Cooperate
                }
            }
            Automaton::Random(p) => {
                if rng.gen::<f64>() < *p {
                    Move::Cooperate
                } else {
                    Move::Defect
                }
            }
        }
    }
}

impl std::str::FromStr for Automaton {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        if let Some(p) = lower.strip_prefix("randomp:").or_else(|| lower.strip_prefix("random:")) {
            let p: f64 = p
                .parse()
                .map_err(|_| Error::Domain(format!("bad probability in `{s}`")))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::Domain(format!(
                    "cooperation probability must lie in [0,1], got {p}"
                )));
            }
            return Ok(Automaton::Random(p));
        }
        match lower.as_str() {
            "alwaysc" | "allc" => Ok(Automaton::AlwaysCooperate),
            "alwaysd" | "alld" => Ok(Automaton::AlwaysDefect),
            "titfortat" | "tft" => Ok(Automaton::TitForTat),
            "grimtrigger" | "grim" => Ok(Automaton::GrimTrigger),
            other => Err(Error::Domain(format!(
                "unknown strategy `{other}`; expected alwaysc, alwaysd, titfortat, grimtrigger or randomp:<p>"
            ))),
        }
    }
}

/// Round-by-round record of one match.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchTranscript {
    pub game: BimatrixGame,
    pub rounds: usize,
    pub moves: Vec<(Move, Move)>,
    pub scores: (f64, f64),
}

fn check_iterated_game(game: &BimatrixGame) -> Result<()> {
    if game.rows() != 2 || game.cols() != 2 {
        return Err(Error::Contract(format!(
            "iterated play needs a 2x2 game, got {}x{}",
            game.rows(),
            game.cols()
        )));
    }
    if !game.is_symmetric() {
        return Err(Error::Contract("iterated play needs a symmetric game".into()));
    }
    Ok(())
}

/// Plays `rounds` simultaneous rounds between two automata. Each player
/// draws from its own randomness stream, derived deterministically from
/// the seed, so transcripts are reproducible.
pub fn play_match(
    first: &Automaton,
    second: &Automaton,
    game: &BimatrixGame,
    rounds: usize,
    seed: u64,
) -> Result<MatchTranscript> {
    if rounds == 0 {
        return Err(Error::Contract("a match needs at least one round".into()));
    }
    check_iterated_game(game)?;
    let mut rng_first = ChaCha8Rng::seed_from_u64(seed);
    rng_first.set_stream(0);
    let mut rng_second = ChaCha8Rng::seed_from_u64(seed);
    rng_second.set_stream(1);

    let mut history_first: Vec<Move> = Vec::with_capacity(rounds);
    let mut history_second: Vec<Move> = Vec::with_capacity(rounds);
    let mut moves = Vec::with_capacity(rounds);
    let mut scores = (0.0, 0.0);
    for _ in 0..rounds {
        let move_first = first.decide(&history_first, &history_second, &mut rng_first);
        let move_second = second.decide(&history_second, &history_first, &mut rng_second);
        let (p1, p2) = game.payoffs(move_first.index(), move_second.index());
        scores.0 += p1;
        scores.1 += p2;
        moves.push((move_first, move_second));
        history_first.push(move_first);
        history_second.push(move_second);
    }
    Ok(MatchTranscript {
        game: game.clone(),
        rounds,
        moves,
        scores,
    })
}

/// One tournament pairing and its transcript.
#[derive(Debug, Clone, PartialEq)]
pub struct TournamentMatch {
    pub pair: (usize, usize),
    pub transcript: MatchTranscript,
}

/// Round-robin results. `grid[i][j]` holds everything entrant `i` earned
/// against entrant `j`; an entrant occupies both seats of its self-match,
/// so the diagonal collects both seats' earnings. Totals are row sums.
#[derive(Debug, Clone, PartialEq)]
pub struct Tournament {
    pub names: Vec<String>,
    pub grid: Vec<Vec<f64>>,
    pub totals: Vec<f64>,
    pub matches: Vec<TournamentMatch>,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

fn match_seed(seed: u64, i: usize, j: usize) -> u64 {
    splitmix64(seed ^ splitmix64((i as u64) << 32 | j as u64))
}

/// Plays every unordered pairing (self-pairings included) once, in a fixed
/// order. Matches are independent given their derived seeds; results are
/// identical whether they run sequentially or in parallel.
pub fn tournament(
    strategies: &[Automaton],
    game: &BimatrixGame,
    rounds: usize,
    seed: u64,
) -> Result<Tournament> {
    if strategies.len() < 2 {
        return Err(Error::Contract("a tournament needs at least two strategies".into()));
    }
    if rounds == 0 {
        return Err(Error::Contract("a tournament needs at least one round".into()));
    }
    check_iterated_game(game)?;
    let n = strategies.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .collect();
    let transcripts = parallel::map_indexed(pairs.len(), |k| {
        let (i, j) = pairs[k];
        play_match(&strategies[i], &strategies[j], game, rounds, match_seed(seed, i, j))
            .expect("inputs validated")
    });
    let mut grid = vec![vec![0.0; n]; n];
    let mut matches = Vec::with_capacity(pairs.len());
    for (&(i, j), transcript) in pairs.iter().zip(transcripts) {
        let (s1, s2) = transcript.scores;
        if i == j {
            grid[i][i] = s1 + s2;
        } else {
            grid[i][j] = s1;
            grid[j][i] = s2;
        }
        matches.push(TournamentMatch { pair: (i, j), transcript });
    }
    let totals = grid.iter().map(|row| row.iter().sum()).collect();
    Ok(Tournament {
        names: strategies.iter().map(|s| s.name()).collect(),
        grid,
        totals,
        matches,
    })
}
