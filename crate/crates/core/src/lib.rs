//! Solvers, classifiers and simulators for finite two-player games.
//!
//! The crate covers five areas:
//!
//! * normal-form (bimatrix) games: parsing, validation, dominance
//!   elimination, saddle points, the 2x2 zero-sum closed form and pure /
//!   mixed Nash equilibria ([`game`], [`zerosum`], [`nash`]);
//! * the ordinal taxonomy of symmetric 2x2 games (Leader, Battle of the
//!   Sexes, Chicken, Prisoner's Dilemma) together with canonical builders
//!   for the classic stand-off games ([`taxonomy`]);
//! * weighted majority games: coalition tests, Banzhaf and Shapley-Shubik
//!   power indices, log-odds weighting and jury accuracy ([`voting`]);
//! * extensive-form trees with information sets, backward induction,
//!   conversion to normal form, exhaustive tic-tac-toe enumeration and a
//!   generic best-first search ([`extensive`]);
//! * iterated symmetric 2x2 games between strategy automata, with
//!   round-robin tournaments ([`iterated`]).
//!
//! All operations are pure functions over immutable values. A few
//! enumerations may shard work across threads when `GAMEKIT_THREADS` is set;
//! results are bitwise identical to the sequential run.

pub mod error;
pub mod extensive;
pub mod game;
pub mod iterated;
pub mod nash;
pub mod taxonomy;
pub mod voting;
pub mod zerosum;

mod parallel;

pub use error::{Error, Result};
pub use game::{
    parse_game, serialize_game, BimatrixGame, DominanceMode, Elimination, Player, Reduction,
    Solution, StrategyChoice, ZeroSum2x2, EPS,
};
pub use nash::{pure_nash, EquilibriumReport, Mixed2x2, PureEquilibrium};
pub use taxonomy::{classify, classify_game, GameClass, NamedGame, SymmetricOrdering};
pub use voting::{parse_voting, PowerIndexResult, VotingFile, WeightedVotingGame};
pub use zerosum::{saddle_points, solve_zero_sum, MaximinProfile};
