//! Ordinal classification of symmetric 2x2 games.
//!
//! With the symmetric template
//!
//! ```text
//!         C        D
//!   C   (R,R)    (S,T)
//!   D   (T,S)    (P,P)
//! ```
//!
//! a game's strategic character depends only on the strict ordering of the
//! four payoffs. Four orderings have no pure-strategy resolution and carry
//! names; every other strict ordering is solvable in pure strategies and is
//! bucketed as [`GameClass::TrivialPure`]. Ties make the ordering — and so
//! the class — ill-defined and report [`GameClass::Degenerate`].

use crate::error::{Error, Result};
use crate::game::{approx_eq, BimatrixGame};

/// The four payoffs of the symmetric 2x2 template: `reward` at (C,C),
/// `punishment` at (D,D), `sucker` as the row payoff at (C,D) and
/// `temptation` as the row payoff at (D,C).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricOrdering {
    pub temptation: f64,
    pub reward: f64,
    pub sucker: f64,
    pub punishment: f64,
}

impl SymmetricOrdering {
    pub fn new(temptation: f64, reward: f64, sucker: f64, punishment: f64) -> Self {
        SymmetricOrdering {
            temptation,
            reward,
            sucker,
            punishment,
        }
    }

    /// Builds the symmetric bimatrix game this ordering describes, with
    /// strategies labeled C and D.
    pub fn instantiate(&self) -> BimatrixGame {
        let (t, r, s, p) = (self.temptation, self.reward, self.sucker, self.punishment);
        BimatrixGame::new(vec![vec![r, s], vec![t, p]], vec![vec![r, t], vec![s, p]])
            .expect("finite template payoffs")
            .with_labels(vec!["C".into(), "D".into()], vec!["C".into(), "D".into()])
            .expect("2x2 labels")
    }

    /// The ordering with both players' strategies relabeled (C and D
    /// swapped): R and P exchange, as do S and T.
    fn relabeled(&self) -> SymmetricOrdering {
        SymmetricOrdering {
            temptation: self.sucker,
            reward: self.punishment,
            sucker: self.temptation,
            punishment: self.reward,
        }
    }

    /// Human-readable ordering such as `"T>R>S>P"`, using `=` for ties.
    pub fn ordering_string(&self) -> String {
        let mut entries = [
            ('T', self.temptation),
            ('R', self.reward),
            ('S', self.sucker),
            ('P', self.punishment),
        ];
        entries.sort_by(|a, b| b.1.total_cmp(&a.1));
        let mut out = String::new();
        for (i, (letter, value)) in entries.iter().enumerate() {
            if i > 0 {
                out.push(if approx_eq(entries[i - 1].1, *value) { '=' } else { '>' });
            }
            out.push(*letter);
        }
        out
    }

    fn has_ties(&self) -> bool {
        let v = [self.temptation, self.reward, self.sucker, self.punishment];
        (0..4).any(|i| (i + 1..4).any(|j| approx_eq(v[i], v[j])))
    }
}

/// Strategic class of a symmetric 2x2 game.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GameClass {
    Leader,
    BattleOfSexes,
    Chicken,
    PrisonersDilemma,
    /// A strict ordering outside the four named ones: at least one pure
    /// Nash equilibrium is reachable by dominance or direct marking.
    TrivialPure,
    /// Tied payoffs; no strict ordering exists.
    Degenerate,
}

impl GameClass {
    pub fn is_named(&self) -> bool {
        matches!(
            self,
            GameClass::Leader
                | GameClass::BattleOfSexes
                | GameClass::Chicken
                | GameClass::PrisonersDilemma
        )
    }
}

impl std::fmt::Display for GameClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            GameClass::Leader => "Leader",
            GameClass::BattleOfSexes => "BattleOfSexes",
            GameClass::Chicken => "Chicken",
            GameClass::PrisonersDilemma => "PrisonersDilemma",
            GameClass::TrivialPure => "TrivialPure",
            GameClass::Degenerate => "Degenerate",
        };
        write!(f, "{name}")
    }
}

/// A classification result: the class plus the detected ordering string.
#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub class: GameClass,
    pub ordering: String,
}

/// Classifies a payoff ordering. Exactly four strict orderings map to named
/// classes:
///
/// * Leader: `T>S>R>P`
/// * Battle of the Sexes: `S>T>R>P`
/// * Chicken: `T>R>S>P`
/// * Prisoner's Dilemma: `T>R>P>S`
///
/// Any other strict ordering is `TrivialPure`; any tie is `Degenerate`.
pub fn classify(ordering: &SymmetricOrdering) -> Classification {
    let text = ordering.ordering_string();
    let class = if ordering.has_ties() {
        GameClass::Degenerate
    } else {
        match text.as_str() {
            "T>S>R>P" => GameClass::Leader,
            "S>T>R>P" => GameClass::BattleOfSexes,
            "T>R>S>P" => GameClass::Chicken,
            "T>R>P>S" => GameClass::PrisonersDilemma,
            _ => GameClass::TrivialPure,
        }
    };
    Classification { class, ordering: text }
}

/// Classifies a symmetric 2x2 game by extracting (T, R, S, P) from its row
/// payoffs.
///
/// The extraction is tried under both strategy labelings: a game whose
/// literal ordering is unnamed but whose C/D-swapped relabeling is one of
/// the four named classes *is* that game with renamed strategies, and is
/// reported as such.
pub fn classify_game(game: &BimatrixGame) -> Result<Classification> {
    if game.rows() != 2 || game.cols() != 2 {
        return Err(Error::NotClassifiable(format!(
            "classification needs a 2x2 game, got {}x{}",
            game.rows(),
            game.cols()
        )));
    }
    if !game.is_symmetric() {
        return Err(Error::NotClassifiable(
            "classification needs a symmetric game (col payoffs must transpose row payoffs)"
                .into(),
        ));
    }
    let ordering = SymmetricOrdering {
        reward: game.row_payoff(0, 0),
        sucker: game.row_payoff(0, 1),
        temptation: game.row_payoff(1, 0),
        punishment: game.row_payoff(1, 1),
    };
    let literal = classify(&ordering);
    if literal.class == GameClass::TrivialPure {
        let swapped = classify(&ordering.relabeled());
        if swapped.class.is_named() {
            return Ok(swapped);
        }
    }
    Ok(literal)
}

/// The games with canonical payoff tables, preference integers 1-4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGame {
    Leader,
    BattleOfSexes,
    Chicken,
    PrisonersDilemma,
    Hostage,
    Kamikaze,
}

impl std::str::FromStr for NamedGame {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "leader" => Ok(NamedGame::Leader),
            "battleofsexes" | "bos" => Ok(NamedGame::BattleOfSexes),
            "chicken" => Ok(NamedGame::Chicken),
            "prisonersdilemma" | "pd" => Ok(NamedGame::PrisonersDilemma),
            "hostage" => Ok(NamedGame::Hostage),
            "kamikaze" => Ok(NamedGame::Kamikaze),
            other => Err(Error::Domain(format!(
                "unknown game name `{other}`; expected one of leader, battleofsexes, chicken, prisonersdilemma, hostage, kamikaze"
            ))),
        }
    }
}

/// Builds the canonical payoff matrices of a named game, strategies
/// labeled C and D.
pub fn canonical(name: NamedGame) -> BimatrixGame {
    let (row, col) = match name {
        NamedGame::Leader => (
            vec![vec![2.0, 3.0], vec![4.0, 1.0]],
            vec![vec![2.0, 4.0], vec![3.0, 1.0]],
        ),
        NamedGame::BattleOfSexes => (
            vec![vec![1.0, 3.0], vec![4.0, 2.0]],
            vec![vec![1.0, 4.0], vec![3.0, 2.0]],
        ),
        NamedGame::Chicken => (
            vec![vec![3.0, 2.0], vec![4.0, 1.0]],
            vec![vec![3.0, 4.0], vec![2.0, 1.0]],
        ),
        NamedGame::PrisonersDilemma => (
            vec![vec![3.0, 1.0], vec![4.0, 2.0]],
            vec![vec![3.0, 4.0], vec![1.0, 2.0]],
        ),
        NamedGame::Hostage => (
            vec![vec![2.0, 1.0], vec![4.0, 3.0]],
            vec![vec![3.0, 4.0], vec![2.0, 1.0]],
        ),
        NamedGame::Kamikaze => (
            vec![vec![2.0, 1.0], vec![4.0, 3.0]],
            vec![vec![3.0, 4.0], vec![1.0, 2.0]],
        ),
    };
    BimatrixGame::new(row, col)
        .expect("canonical payoffs are valid")
        .with_labels(vec!["C".into(), "D".into()], vec!["C".into(), "D".into()])
        .expect("canonical labels")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{DominanceMode, Player};
    use crate::nash::pure_nash;
    use crate::zerosum::maximin_security;

    #[test]
    fn the_four_named_orderings_classify() {
        let cases = [
            (SymmetricOrdering::new(4.0, 2.0, 3.0, 1.0), GameClass::Leader, "T>S>R>P"),
            (SymmetricOrdering::new(3.0, 2.0, 4.0, 1.0), GameClass::BattleOfSexes, "S>T>R>P"),
            (SymmetricOrdering::new(4.0, 3.0, 2.0, 1.0), GameClass::Chicken, "T>R>S>P"),
            (SymmetricOrdering::new(4.0, 3.0, 1.0, 2.0), GameClass::PrisonersDilemma, "T>R>P>S"),
        ];
        for (ordering, class, text) in cases {
            let got = classify(&ordering);
            assert_eq!(got.class, class);
            assert_eq!(got.ordering, text);
        }
    }

    #[test]
    fn dominance_solvable_ordering_is_trivial() {
        // R > T > S > P: mutual cooperation is dominant-solvable.
        let ordering = SymmetricOrdering::new(3.0, 4.0, 2.0, 1.0);
        let got = classify(&ordering);
        assert_eq!(got.class, GameClass::TrivialPure);
        let game = ordering.instantiate();
        let reduced = game.eliminate_dominated(DominanceMode::Strict);
        assert_eq!(reduced.surviving_rows, vec![0]);
        assert_eq!(reduced.surviving_cols, vec![0]);
    }

    #[test]
    fn ties_are_degenerate() {
        let got = classify(&SymmetricOrdering::new(4.0, 4.0, 2.0, 1.0));
        assert_eq!(got.class, GameClass::Degenerate);
        assert_eq!(got.ordering, "T=R>S>P");
    }

    #[test]
    fn canonical_games_classify_by_name() {
        assert_eq!(classify_game(&canonical(NamedGame::Chicken)).unwrap().class, GameClass::Chicken);
        assert_eq!(classify_game(&canonical(NamedGame::Leader)).unwrap().class, GameClass::Leader);
        assert_eq!(
            classify_game(&canonical(NamedGame::PrisonersDilemma)).unwrap().class,
            GameClass::PrisonersDilemma
        );
        // The Battle of the Sexes table names "concede" C, which swaps the
        // roles of the off-diagonal payoffs; classification sees through
        // the relabeling.
        let got = classify_game(&canonical(NamedGame::BattleOfSexes)).unwrap();
        assert_eq!(got.class, GameClass::BattleOfSexes);
        assert_eq!(got.ordering, "S>T>R>P");
    }

    #[test]
    fn asymmetric_games_are_not_classifiable() {
        assert!(matches!(
            classify_game(&canonical(NamedGame::Hostage)),
            Err(Error::NotClassifiable(_))
        ));
    }

    #[test]
    fn prisoners_dilemma_equilibrium_is_the_security_pair() {
        let pd = canonical(NamedGame::PrisonersDilemma);
        assert_eq!(pure_nash(&pd), vec![(1, 1)]);
        assert_eq!(pd.payoffs(1, 1), (2.0, 2.0));
        assert_eq!(maximin_security(&pd, Player::Row).0, 1);
        assert_eq!(maximin_security(&pd, Player::Col).0, 1);
    }

    #[test]
    fn hostage_equilibrium_matches_the_table() {
        let hostage = canonical(NamedGame::Hostage);
        assert_eq!(pure_nash(&hostage), vec![(1, 0)]);
        assert_eq!(hostage.payoffs(1, 0), (4.0, 2.0));
    }

    #[test]
    fn kamikaze_swaps_the_defenders_low_payoffs() {
        let hostage = canonical(NamedGame::Hostage);
        let kamikaze = canonical(NamedGame::Kamikaze);
        for r in 0..2 {
            for c in 0..2 {
                assert_eq!(hostage.row_payoff(r, c), kamikaze.row_payoff(r, c));
            }
        }
        assert_eq!(hostage.col_payoff(1, 0), kamikaze.col_payoff(1, 1));
        assert_eq!(hostage.col_payoff(1, 1), kamikaze.col_payoff(1, 0));
        assert_eq!(hostage.col_payoff(0, 0), kamikaze.col_payoff(0, 0));
        assert_eq!(hostage.col_payoff(0, 1), kamikaze.col_payoff(0, 1));
        assert_eq!(pure_nash(&kamikaze), vec![(1, 1)]);
    }
}
