//! Invariants of equilibrium enumeration: the brute-force oracle, affine
//! invariance, dominance survivors, and the oddness rule.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gamekit_core::game::{BimatrixGame, DominanceMode, EPS};
use gamekit_core::nash::{equilibrium_report, mixed_nash_2x2, pure_nash, Mixed2x2};

/// Independent oracle: a cell is an equilibrium iff no unilateral deviation
/// gains more than the tolerance.
fn oracle_pure_nash(game: &BimatrixGame) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for r in 0..game.rows() {
        for c in 0..game.cols() {
            let row_gain = (0..game.rows())
                .map(|alt| game.row_payoff(alt, c) - game.row_payoff(r, c))
                .fold(f64::NEG_INFINITY, f64::max);
            let col_gain = (0..game.cols())
                .map(|alt| game.col_payoff(r, alt) - game.col_payoff(r, c))
                .fold(f64::NEG_INFINITY, f64::max);
            if row_gain <= EPS && col_gain <= EPS {
                cells.push((r, c));
            }
        }
    }
    cells
}

fn random_game(rng: &mut ChaCha8Rng, rows: usize, cols: usize, span: i32) -> BimatrixGame {
    let gen = |rng: &mut ChaCha8Rng| -> Vec<Vec<f64>> {
        (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(-span..=span) as f64).collect())
            .collect()
    };
    let row = gen(rng);
    let col = gen(rng);
    BimatrixGame::new(row, col).unwrap()
}

#[test]
fn enumeration_matches_the_deviation_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..800 {
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=4);
        let game = random_game(&mut rng, rows, cols, 5);
        assert_eq!(pure_nash(&game), oracle_pure_nash(&game));
    }
}

#[test]
fn equilibria_survive_affine_rescaling_of_one_player() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..300 {
        let game = random_game(&mut rng, 2, 2, 8);
        let alpha = rng.gen_range(0.25..4.0);
        let beta = rng.gen_range(-10.0..10.0);
        let rescaled_rows: Vec<Vec<f64>> = (0..2)
            .map(|r| (0..2).map(|c| alpha * game.row_payoff(r, c) + beta).collect())
            .collect();
        let col_rows: Vec<Vec<f64>> = (0..2)
            .map(|r| (0..2).map(|c| game.col_payoff(r, c)).collect())
            .collect();
        let rescaled = BimatrixGame::new(rescaled_rows, col_rows).unwrap();
        assert_eq!(pure_nash(&game), pure_nash(&rescaled));
        let base = mixed_nash_2x2(&game).unwrap();
        let scaled = mixed_nash_2x2(&rescaled).unwrap();
        match (base, scaled) {
            (Mixed2x2::Interior(a), Mixed2x2::Interior(b)) => {
                assert!((a.x().unwrap() - b.x().unwrap()).abs() <= 1e-7);
                assert!((a.y().unwrap() - b.y().unwrap()).abs() <= 1e-7);
            }
            (Mixed2x2::Absent { .. }, Mixed2x2::Absent { .. }) => {}
            (a, b) => panic!("rescaling changed the equilibrium structure: {a:?} vs {b:?}"),
        }
    }
}

#[test]
fn strict_dominance_survivor_is_an_equilibrium() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let mut solved = 0;
    for _ in 0..2000 {
        let game = random_game(&mut rng, 3, 3, 4);
        let reduction = game.eliminate_dominated(DominanceMode::Strict);
        if reduction.game.rows() == 1 && reduction.game.cols() == 1 {
            solved += 1;
            let cell = (reduction.surviving_rows[0], reduction.surviving_cols[0]);
            assert!(
                pure_nash(&game).contains(&cell),
                "dominance survivor {cell:?} is not an equilibrium"
            );
        }
    }
    assert!(solved > 20, "generator should produce some dominance-solvable games");
}

#[test]
fn tie_free_2x2_games_have_an_odd_equilibrium_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for _ in 0..2000 {
        let game = loop {
            let candidate = {
                let cont = |rng: &mut ChaCha8Rng| -> Vec<Vec<f64>> {
                    (0..2)
                        .map(|_| (0..2).map(|_| rng.gen_range(-10.0..10.0)).collect())
                        .collect()
                };
                let row = cont(&mut rng);
                let col = cont(&mut rng);
                BimatrixGame::new(row, col).unwrap()
            };
            // Tie-free: all four payoffs of each player pairwise distinct.
            let distinct = |values: Vec<f64>| {
                values
                    .iter()
                    .enumerate()
                    .all(|(i, a)| values[i + 1..].iter().all(|b| (a - b).abs() > 1e-6))
            };
            let rows: Vec<f64> = (0..2)
                .flat_map(|r| (0..2).map(move |c| (r, c)))
                .map(|(r, c)| candidate.row_payoff(r, c))
                .collect();
            let cols: Vec<f64> = (0..2)
                .flat_map(|r| (0..2).map(move |c| (r, c)))
                .map(|(r, c)| candidate.col_payoff(r, c))
                .collect();
            if distinct(rows) && distinct(cols) {
                break candidate;
            }
        };
        let report = equilibrium_report(&game);
        assert_eq!(report.total_count % 2, 1, "even count for {game:?}");
        assert!(!report.oddness_warning);
    }
}
