//! Criterion benchmarks for the enumeration-heavy solvers.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use gamekit_core::extensive::enumerate_tictactoe;
use gamekit_core::game::BimatrixGame;
use gamekit_core::iterated::{tournament, Automaton};
use gamekit_core::nash::equilibrium_report;
use gamekit_core::taxonomy::{canonical, NamedGame};
use gamekit_core::voting::{jury_probability_weighted, WeightedVotingGame};

/// Small deterministic generator so the benches need no RNG dependency.
fn lcg(state: &mut u64) -> f64 {
    *state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    (*state >> 11) as f64 / (1u64 << 53) as f64
}

fn bench_banzhaf(c: &mut Criterion) {
    let weights: Vec<f64> = (1..=18).map(|w| w as f64).collect();
    let quota = weights.iter().sum::<f64>() / 2.0;
    let game = WeightedVotingGame::new(weights, quota).unwrap();
    c.bench_function("banzhaf_n18", |b| b.iter(|| black_box(game.banzhaf().unwrap())));
}

fn bench_shapley(c: &mut Criterion) {
    let weights: Vec<f64> = (1..=14).map(|w| w as f64).collect();
    let quota = weights.iter().sum::<f64>() / 2.0;
    let game = WeightedVotingGame::new(weights, quota).unwrap();
    c.bench_function("shapley_n14", |b| {
        b.iter(|| black_box(game.shapley_shubik().unwrap()))
    });
}

fn bench_weighted_jury(c: &mut Criterion) {
    let mut state = 7u64;
    let competencies: Vec<f64> = (0..16).map(|_| 0.5 + 0.45 * lcg(&mut state)).collect();
    let weights: Vec<f64> = (0..16).map(|_| lcg(&mut state) * 3.0).collect();
    c.bench_function("weighted_jury_n16", |b| {
        b.iter(|| black_box(jury_probability_weighted(&weights, &competencies).unwrap()))
    });
}

fn bench_tictactoe(c: &mut Criterion) {
    c.bench_function("tictactoe_enumeration", |b| b.iter(|| black_box(enumerate_tictactoe())));
}

fn bench_equilibrium_report(c: &mut Criterion) {
    let mut state = 41u64;
    let games: Vec<BimatrixGame> = (0..64)
        .map(|_| {
            let mat = |state: &mut u64| -> Vec<Vec<f64>> {
                (0..4).map(|_| (0..4).map(|_| lcg(state) * 10.0).collect()).collect()
            };
            BimatrixGame::new(mat(&mut state), mat(&mut state)).unwrap()
        })
        .collect();
    c.bench_function("equilibrium_report_4x4_x64", |b| {
        b.iter(|| {
            for game in &games {
                black_box(equilibrium_report(game));
            }
        })
    });
}

fn bench_tournament(c: &mut Criterion) {
    let pd = canonical(NamedGame::PrisonersDilemma);
    let entrants = [
        Automaton::TitForTat,
        Automaton::GrimTrigger,
        Automaton::AlwaysDefect,
        Automaton::AlwaysCooperate,
        Automaton::Random(0.5),
        Automaton::Random(0.9),
    ];
    c.bench_function("tournament_6x200", |b| {
        b.iter(|| black_box(tournament(&entrants, &pd, 200, 1).unwrap()))
    });
}

criterion_group!(
    benches,
    bench_banzhaf,
    bench_shapley,
    bench_weighted_jury,
    bench_tictactoe,
    bench_equilibrium_report,
    bench_tournament
);
criterion_main!(benches);
