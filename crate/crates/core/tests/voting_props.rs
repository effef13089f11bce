//! Invariants of the voting module: index normalization, oracle
//! equivalence, jury monotonicity, and log-odds optimality.

use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gamekit_core::voting::{
    jury_probability, jury_probability_exact, jury_probability_weighted, log_odds_weights,
    WeightedVotingGame,
};

fn random_game(rng: &mut ChaCha8Rng, max_players: usize) -> WeightedVotingGame {
    let n = rng.gen_range(1..=max_players);
    let weights: Vec<f64> = (0..n).map(|_| rng.gen_range(0..8) as f64).collect();
    let total: f64 = weights.iter().sum();
    let quota = if total > 0.0 { rng.gen_range(1..=total as i64 + 1) as f64 } else { 1.0 };
    WeightedVotingGame::new(weights, quota).unwrap()
}

/// Independent Banzhaf oracle: per player, enumerate all subsets of the
/// *other* players directly, recomputing each sum from scratch.
fn oracle_banzhaf(game: &WeightedVotingGame) -> Vec<u128> {
    let n = game.player_count();
    let weights = game.weights();
    let quota = game.quota();
    let wins = |sum: f64| sum >= quota - 1e-9;
    (0..n)
        .map(|i| {
            let others: Vec<f64> = (0..n).filter(|&j| j != i).map(|j| weights[j]).collect();
            let mut swings = 0u128;
            for mask in 0..(1usize << others.len()) {
                let sum: f64 = others
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| mask >> k & 1 == 1)
                    .map(|(_, w)| w)
                    .sum();
                if !wins(sum) && wins(sum + weights[i]) {
                    swings += 1;
                }
            }
            swings
        })
        .collect()
}

/// Independent Shapley-Shubik oracle: iterate every permutation and count
/// actual pivots.
fn oracle_shapley(game: &WeightedVotingGame) -> Vec<u128> {
    let n = game.player_count();
    let weights = game.weights();
    let quota = game.quota();
    let mut counts = vec![0u128; n];
    let mut order: Vec<usize> = (0..n).collect();
    permute(&mut order, 0, &mut |perm| {
        let mut sum = 0.0;
        for &player in perm {
            sum += weights[player];
            if sum >= quota - 1e-9 {
                counts[player] += 1;
                break;
            }
        }
    });
    counts
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

#[test]
fn banzhaf_agrees_with_the_subset_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(66);
    for _ in 0..200 {
        let game = random_game(&mut rng, 10);
        assert_eq!(game.banzhaf().unwrap().raw, oracle_banzhaf(&game));
    }
}

#[test]
fn shapley_agrees_with_the_permutation_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..120 {
        let game = random_game(&mut rng, 7);
        assert_eq!(game.shapley_shubik().unwrap().raw, oracle_shapley(&game));
    }
}

#[test]
fn index_normalization_and_dummies() {
    let mut rng = ChaCha8Rng::seed_from_u64(88);
    for _ in 0..150 {
        let game = random_game(&mut rng, 9);
        for result in [game.banzhaf().unwrap(), game.shapley_shubik().unwrap()] {
            let total: f64 = result.normalized.iter().sum();
            if result.raw.iter().sum::<u128>() > 0 {
                assert!((total - 1.0).abs() <= 1e-9);
            } else {
                assert!(result.normalized.iter().all(|&v| v == 0.0));
            }
            // Identical weights receive identical shares.
            for i in 0..game.player_count() {
                for j in i + 1..game.player_count() {
                    if game.weights()[i] == game.weights()[j] {
                        assert_eq!(result.raw[i], result.raw[j]);
                    }
                }
            }
        }
    }
}

#[test]
fn shapley_raw_counts_sum_to_n_factorial() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..150 {
        let game = random_game(&mut rng, 9);
        let result = game.shapley_shubik().unwrap();
        let factorial: u128 = (1..=game.player_count() as u128).product();
        // Some ordering pivots iff the grand coalition wins; then every
        // ordering pivots exactly once.
        let expected = if game.winnable() { factorial } else { 0 };
        assert_eq!(result.raw.iter().sum::<u128>(), expected);
        assert_eq!(result.denominator, factorial);
    }
}

#[test]
fn indices_ignore_common_rescaling() {
    let mut rng = ChaCha8Rng::seed_from_u64(111);
    for _ in 0..100 {
        let game = random_game(&mut rng, 8);
        let factor = rng.gen_range(1..5) as f64;
        let scaled = WeightedVotingGame::new(
            game.weights().iter().map(|w| w * factor).collect(),
            game.quota() * factor,
        )
        .unwrap();
        assert_eq!(game.banzhaf().unwrap().raw, scaled.banzhaf().unwrap().raw);
        assert_eq!(
            game.shapley_shubik().unwrap().raw,
            scaled.shapley_shubik().unwrap().raw
        );
    }
}

#[test]
fn voting_power_is_not_voting_weight() {
    // Weights (3,2,1) with quota 4: weight shares are (1/2, 1/3, 1/6) but
    // the Banzhaf shares come out (3/5, 1/5, 1/5).
    let game = WeightedVotingGame::new(vec![3.0, 2.0, 1.0], 4.0).unwrap();
    let result = game.banzhaf().unwrap();
    let shares: Vec<BigRational> = (0..3).map(|i| result.fraction(i)).collect();
    assert_eq!(shares[0], BigRational::new(3.into(), 5.into()));
    assert_eq!(shares[1], BigRational::new(1.into(), 5.into()));
    assert_eq!(shares[2], BigRational::new(1.into(), 5.into()));
    let weight_share0 = BigRational::new(1.into(), 2.into());
    assert_ne!(shares[0], weight_share0);
}

#[test]
fn jury_probability_is_monotone_in_group_size() {
    for p10 in 51..100 {
        let p = p10 as f64 / 100.0;
        let mut last = 0.5;
        for n in (1..=19).step_by(2) {
            let current = jury_probability(n, p).unwrap();
            assert!(current > last - 1e-12, "p={p} n={n}");
            if n > 1 {
                assert!(current > jury_probability(n - 2, p).unwrap());
            }
            last = current;
        }
        // And decreasing below one half.
        let q = 1.0 - p;
        let mut last = 0.5;
        for n in (1..=19).step_by(2) {
            let current = jury_probability(n, q).unwrap();
            if n > 1 {
                assert!(current < jury_probability(n - 2, q).unwrap());
            }
            last = current.min(last);
        }
    }
}

#[test]
fn fifty_fifty_voters_stay_at_one_half() {
    let half = BigRational::new(1.into(), 2.into());
    for n in (1..=19).step_by(2) {
        assert_eq!(jury_probability_exact(n, &half).unwrap(), half);
        assert!((jury_probability(n, 0.5).unwrap() - 0.5).abs() <= 1e-12);
    }
}

#[test]
fn exact_and_float_jury_probabilities_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(123);
    for _ in 0..50 {
        let n = 2 * rng.gen_range(0..6) + 1;
        let numerator = rng.gen_range(1..100);
        let p = BigRational::new(numerator.into(), 100.into());
        let exact = jury_probability_exact(n, &p).unwrap().to_f64().unwrap();
        let float = jury_probability(n, numerator as f64 / 100.0).unwrap();
        assert!((exact - float).abs() <= 1e-11);
    }
}

#[test]
fn log_odds_weights_never_lose_to_random_probes() {
    let mut rng = ChaCha8Rng::seed_from_u64(321);
    for _ in 0..30 {
        let competencies: Vec<f64> = (0..5).map(|_| rng.gen_range(0.05..0.95)).collect();
        let profile = log_odds_weights(&competencies).unwrap();
        let optimal = jury_probability_weighted(&profile.weights, &competencies).unwrap();
        for _ in 0..60 {
            let probe: Vec<f64> = (0..5).map(|_| rng.gen_range(-2.0..4.0)).collect();
            let accuracy = jury_probability_weighted(&probe, &competencies).unwrap();
            assert!(
                optimal >= accuracy - 1e-12,
                "probe {probe:?} beat log-odds on {competencies:?}"
            );
        }
    }
}

#[test]
fn weighted_jury_homogeneous_reduction_is_exact() {
    let p = BigRational::new(7.into(), 10.into());
    let w = BigRational::one();
    let weighted = gamekit_core::voting::jury_probability_weighted_exact(
        &[w.clone(), w.clone(), w.clone()],
        &[p.clone(), p.clone(), p.clone()],
    )
    .unwrap();
    assert_eq!(weighted, jury_probability_exact(3, &p).unwrap());
}
