//! Weighted majority games: coalition winning tests, Banzhaf and
//! Shapley-Shubik power indices, log-odds voting weights, weighted
//! majority decisions and jury accuracy.
//!
//! Index computations are exact enumerations with integer counting, so
//! results can be reported as fractions. Size caps keep runtimes at desk
//! scale; there are no sampling estimators.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::game::EPS;
use crate::parallel;

/// Maximum player count for exact Banzhaf enumeration (2^n coalitions).
pub const MAX_BANZHAF_PLAYERS: usize = 24;
/// Maximum player count for exact Shapley-Shubik and weighted jury
/// computations.
pub const MAX_SHAPLEY_PLAYERS: usize = 20;

/// A weighted majority game: a coalition wins iff its weight sum meets the
/// quota.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedVotingGame {
    weights: Vec<f64>,
    quota: f64,
}

impl WeightedVotingGame {
    pub fn new(weights: Vec<f64>, quota: f64) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Contract("a voting game needs at least one player".into()));
        }
        if let Some(bad) = weights.iter().find(|w| !w.is_finite() || **w < 0.0) {
            return Err(Error::Contract(format!(
                "weights must be finite and nonnegative, got {bad}"
            )));
        }
        if !quota.is_finite() || quota <= 0.0 {
            return Err(Error::Contract(format!("quota must be positive, got {quota}")));
        }
        Ok(WeightedVotingGame { weights, quota })
    }

    pub fn player_count(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn quota(&self) -> f64 {
        self.quota
    }

    /// False when even the grand coalition misses the quota.
    pub fn winnable(&self) -> bool {
        self.weights.iter().sum::<f64>() >= self.quota - EPS
    }

    fn wins_weight(&self, sum: f64) -> bool {
        sum >= self.quota - EPS
    }

    /// True iff the coalition's weight sum meets the quota. The coalition
    /// is a set of player indices.
    pub fn is_winning(&self, coalition: &[usize]) -> Result<bool> {
        let mut seen = vec![false; self.player_count()];
        let mut sum = 0.0;
        for &i in coalition {
            if i >= self.player_count() {
                return Err(Error::Domain(format!(
                    "player index {i} out of range for {} players",
                    self.player_count()
                )));
            }
            if seen[i] {
                return Err(Error::Domain(format!("duplicate player index {i} in coalition")));
            }
            seen[i] = true;
            sum += self.weights[i];
        }
        Ok(self.wins_weight(sum))
    }

    /// One bit per coalition mask: set iff the coalition wins.
    ///
    /// Weight sums are assembled from a table over the low 16 bits plus a
    /// freshly summed high part, so every sum carries at most ~24 rounding
    /// steps regardless of enumeration order.
    fn winning_bitset(&self) -> Vec<u64> {
        let n = self.player_count();
        let total = 1usize << n;
        let lo_bits = n.min(16);
        let lo_size = 1usize << lo_bits;
        let mut lo_sums = vec![0.0f64; lo_size];
        for mask in 1..lo_size {
            let bit = mask.trailing_zeros() as usize;
            lo_sums[mask] = lo_sums[mask & (mask - 1)] + self.weights[bit];
        }
        let mut bits = vec![0u64; total.div_ceil(64)];
        for hi in 0..(total >> lo_bits) {
            let mut hi_sum = 0.0;
            for j in 0..(n - lo_bits) {
                if hi & (1 << j) != 0 {
                    hi_sum += self.weights[lo_bits + j];
                }
            }
            let base = hi << lo_bits;
            for (lo, lo_sum) in lo_sums.iter().enumerate() {
                if self.wins_weight(hi_sum + lo_sum) {
                    let mask = base + lo;
                    bits[mask / 64] |= 1 << (mask % 64);
                }
            }
        }
        bits
    }

    /// Banzhaf-Coleman power index by exact swing enumeration over all 2^n
    /// coalitions: `raw[i]` counts coalitions that win with player `i` and
    /// lose without it.
    pub fn banzhaf(&self) -> Result<PowerIndexResult> {
        let n = self.player_count();
        if n > MAX_BANZHAF_PLAYERS {
            return Err(Error::UnsupportedSize(format!(
                "exact Banzhaf enumeration is capped at {MAX_BANZHAF_PLAYERS} players, got {n}"
            )));
        }
        let wins = self.winning_bitset();
        let win = |mask: usize| wins[mask / 64] >> (mask % 64) & 1 == 1;
        let raw: Vec<u128> = parallel::map_indexed(n, |i| {
            let bit = 1usize << i;
            let mut swings: u128 = 0;
            for mask in 0..(1usize << n) {
                if mask & bit == 0 && win(mask | bit) && !win(mask) {
                    swings += 1;
                }
            }
            swings
        });
        let denominator: u128 = raw.iter().sum();
        Ok(PowerIndexResult::new(IndexMethod::Banzhaf, raw, denominator))
    }

    /// Shapley-Shubik power index: `raw[i]` counts the orderings of all n
    /// players in which `i` is pivotal (its arrival first meets the
    /// quota), via the subset formula `sum |S|! (n-|S|-1)!` over losing
    /// coalitions `S` not containing `i` that win with `i` added.
    pub fn shapley_shubik(&self) -> Result<PowerIndexResult> {
        let n = self.player_count();
        if n > MAX_SHAPLEY_PLAYERS {
            return Err(Error::UnsupportedSize(format!(
                "exact Shapley-Shubik enumeration is capped at {MAX_SHAPLEY_PLAYERS} players, got {n}"
            )));
        }
        let factorials = factorial_table(n);
        let raw: Vec<u128> = parallel::map_indexed(n, |i| {
            let others: Vec<f64> = self
                .weights
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, w)| *w)
                .collect();
            let m = others.len();
            let mut sums = vec![0.0f64; 1 << m];
            for mask in 1..(1usize << m) {
                let bit = mask.trailing_zeros() as usize;
                sums[mask] = sums[mask & (mask - 1)] + others[bit];
            }
            let mut by_size = vec![0u128; m + 1];
            for (mask, sum) in sums.iter().enumerate() {
                if !self.wins_weight(*sum) && self.wins_weight(sum + self.weights[i]) {
                    by_size[mask.count_ones() as usize] += 1;
                }
            }
            by_size
                .iter()
                .enumerate()
                .map(|(s, count)| count * factorials[s] * factorials[n - 1 - s])
                .sum()
        });
        Ok(PowerIndexResult::new(IndexMethod::ShapleyShubik, raw, factorials[n]))
    }
}

fn factorial_table(n: usize) -> Vec<u128> {
    let mut table = vec![1u128; n + 1];
    for k in 1..=n {
        table[k] = table[k - 1] * k as u128;
    }
    table
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexMethod {
    Banzhaf,
    ShapleyShubik,
}

/// Exact power-index counts with their normalization.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerIndexResult {
    pub method: IndexMethod,
    /// Unnormalized per-player counts: swings (Banzhaf) or weighted pivot
    /// counts (Shapley-Shubik).
    pub raw: Vec<u128>,
    /// Normalizer: total swings, or n! for Shapley-Shubik.
    pub denominator: u128,
    /// `raw / denominator` as floats; all zeros when the denominator is 0.
    pub normalized: Vec<f64>,
    /// Always true: these are exact enumerations, never sampled.
    pub exact: bool,
}

impl PowerIndexResult {
    fn new(method: IndexMethod, raw: Vec<u128>, denominator: u128) -> Self {
        let normalized = raw
            .iter()
            .map(|&r| {
                if denominator == 0 {
                    0.0
                } else {
                    r as f64 / denominator as f64
                }
            })
            .collect();
        PowerIndexResult {
            method,
            raw,
            denominator,
            normalized,
            exact: true,
        }
    }

    /// Player `i`'s share as an exact reduced fraction.
    pub fn fraction(&self, i: usize) -> BigRational {
        if self.denominator == 0 {
            return BigRational::zero();
        }
        BigRational::new(big(self.raw[i]), big(self.denominator))
    }
}

fn big(v: u128) -> BigInt {
    BigInt::from(v)
}

/// A vote for one of two options.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Vote {
    Plus,
    Minus,
}

impl Vote {
    pub fn value(&self) -> f64 {
        match self {
            Vote::Plus => 1.0,
            Vote::Minus => -1.0,
        }
    }
}

/// Outcome of a weighted majority vote.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Plus,
    Minus,
    Tie,
}

impl std::fmt::Display for Decision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Decision::Plus => write!(f, "+1"),
            Decision::Minus => write!(f, "-1"),
            Decision::Tie => write!(f, "tie"),
        }
    }
}

/// Sign of the weighted vote sum; sums within tolerance of zero are ties.
pub fn wmr_decide(weights: &[f64], votes: &[Vote]) -> Result<Decision> {
    if weights.len() != votes.len() {
        return Err(Error::Contract(format!(
            "{} weights for {} votes",
            weights.len(),
            votes.len()
        )));
    }
    let sum: f64 = weights.iter().zip(votes).map(|(w, v)| w * v.value()).sum();
    Ok(if sum.abs() < EPS {
        Decision::Tie
    } else if sum > 0.0 {
        Decision::Plus
    } else {
        Decision::Minus
    })
}

/// Per-voter competencies with their induced log-odds weights.
#[derive(Debug, Clone, PartialEq)]
pub struct CompetencyProfile {
    pub competencies: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Optimal weighted-majority weights for independent voters: the log-odds
/// `w = ln(p / (1 - p))` of each voter's competency. Natural logarithm;
/// any other base rescales all weights by a common positive factor and
/// leaves every decision unchanged.
pub fn log_odds_weights(competencies: &[f64]) -> Result<CompetencyProfile> {
    let weights = competencies
        .iter()
        .map(|&p| {
            if !(p > 0.0 && p < 1.0) {
                return Err(Error::Domain(format!(
                    "competency must lie strictly in (0,1), got {p}"
                )));
            }
            Ok((p / (1.0 - p)).ln())
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(CompetencyProfile {
        competencies: competencies.to_vec(),
        weights,
    })
}

fn check_odd_jury(n: usize) -> Result<()> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "jury size must be odd and at least 1 (majority is undefined otherwise), got {n}"
        )));
    }
    Ok(())
}

fn check_competency(p: f64) -> Result<()> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Domain(format!(
            "competency must lie strictly in (0,1), got {p}"
        )));
    }
    Ok(())
}

/// Probability that a simple majority of `n` independent voters, each
/// correct with probability `p`, is correct: the exact binomial tail from
/// ceil(n/2) to n.
pub fn jury_probability(n: usize, p: f64) -> Result<f64> {
    check_odd_jury(n)?;
    check_competency(p)?;
    let majority = n / 2 + 1;
    let q = 1.0 - p;
    // First term at k = majority computed in log space, the rest by term
    // ratios; stable for any jury size.
    let mut log_choose = 0.0f64;
    for j in 1..=(n - majority) {
        log_choose += ((majority + j) as f64).ln() - (j as f64).ln();
    }
    let mut term = (log_choose + majority as f64 * p.ln() + (n - majority) as f64 * q.ln()).exp();
    let mut total = term;
    for k in majority..n {
        term *= (n - k) as f64 / (k + 1) as f64 * (p / q);
        total += term;
    }
    Ok(total.min(1.0))
}

/// Exact-rational form of [`jury_probability`].
pub fn jury_probability_exact(n: usize, p: &BigRational) -> Result<BigRational> {
    check_odd_jury(n)?;
    if p <= &BigRational::zero() || p >= &BigRational::one() {
        return Err(Error::Domain(
            "competency must lie strictly in (0,1)".into(),
        ));
    }
    let q = BigRational::one() - p;
    let mut total = BigRational::zero();
    let mut choose = BigInt::one();
    // C(n, k) built multiplicatively; powers accumulated per term.
    for k in 0..=n {
        if k > 0 {
            choose = choose * BigInt::from(n - k + 1) / BigInt::from(k);
        }
        if k > n / 2 {
            let term = BigRational::from(choose.clone())
                * pow_rational(p, k)
                * pow_rational(&q, n - k);
            total += term;
        }
    }
    Ok(total)
}

fn pow_rational(base: &BigRational, exp: usize) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..exp {
        out *= base;
    }
    out
}

/// Probability that a weighted majority of independent voters is correct.
///
/// Enumerates all 2^n correctness patterns, weighting each by its product
/// of `p` / `(1 - p)` factors and deciding it with [`wmr_decide`] (correct
/// voters vote +1). Ties count half.
pub fn jury_probability_weighted(weights: &[f64], competencies: &[f64]) -> Result<f64> {
    let n = weights.len();
    if competencies.len() != n {
        return Err(Error::Contract(format!(
            "{} weights for {} competencies",
            n,
            competencies.len()
        )));
    }
    if n == 0 {
        return Err(Error::Contract("at least one voter is required".into()));
    }
    if n > MAX_SHAPLEY_PLAYERS {
        return Err(Error::UnsupportedSize(format!(
            "exact weighted jury enumeration is capped at {MAX_SHAPLEY_PLAYERS} voters, got {n}"
        )));
    }
    for &p in competencies {
        check_competency(p)?;
    }
    let mut correct = 0.0f64;
    for pattern in 0..(1usize << n) {
        let mut probability = 1.0f64;
        let mut sum = 0.0f64;
        for k in 0..n {
            if pattern >> k & 1 == 1 {
                probability *= competencies[k];
                sum += weights[k];
            } else {
                probability *= 1.0 - competencies[k];
                sum -= weights[k];
            }
        }
        if sum.abs() < EPS {
            correct += probability / 2.0;
        } else if sum > 0.0 {
            correct += probability;
        }
    }
    Ok(correct)
}

/// Exact-rational form of [`jury_probability_weighted`]; ties are exact
/// zero sums.
pub fn jury_probability_weighted_exact(
    weights: &[BigRational],
    competencies: &[BigRational],
) -> Result<BigRational> {
    let n = weights.len();
    if competencies.len() != n {
        return Err(Error::Contract(format!(
            "{} weights for {} competencies",
            n,
            competencies.len()
        )));
    }
    if n == 0 || n > MAX_SHAPLEY_PLAYERS {
        return Err(Error::UnsupportedSize(format!(
            "voter count must be between 1 and {MAX_SHAPLEY_PLAYERS}, got {n}"
        )));
    }
    for p in competencies {
        if p <= &BigRational::zero() || p >= &BigRational::one() {
            return Err(Error::Domain(
                "competency must lie strictly in (0,1)".into(),
            ));
        }
    }
    let one = BigRational::one();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut correct = BigRational::zero();
    for pattern in 0..(1usize << n) {
        let mut probability = one.clone();
        let mut sum = BigRational::zero();
        for k in 0..n {
            if pattern >> k & 1 == 1 {
                probability *= &competencies[k];
                sum += &weights[k];
            } else {
                probability *= &one - &competencies[k];
                sum -= &weights[k];
            }
        }
        if sum.is_zero() {
            correct += probability * &half;
        } else if sum.is_positive() {
            correct += probability;
        }
    }
    Ok(correct)
}

/// Exact value of a plain decimal literal such as `0.6` or `-12.25`.
///
/// This preserves the decimal the user wrote (`0.6` becomes 3/5), unlike
/// converting through `f64`.
pub fn decimal_to_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::Domain(format!("`{text}` is not a plain decimal number"));
    let (sign, digits) = match text.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, text.strip_prefix('+').unwrap_or(text)),
    };
    let (integer, fraction) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if integer.is_empty() && fraction.is_empty() {
        return Err(bad());
    }
    if !integer.chars().all(|c| c.is_ascii_digit()) || !fraction.chars().all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let mut numerator = BigInt::zero();
    for c in integer.chars().chain(fraction.chars()) {
        numerator = numerator * 10 + (c as u8 - b'0');
    }
    let denominator = BigInt::from(10u32).pow(fraction.len() as u32);
    Ok(BigRational::new(numerator * sign, denominator))
}

/// A parsed voting file: the weighted game plus optional per-player
/// competencies. Exact rational copies of the decimals are kept so
/// enumeration results can be reported as fractions.
#[derive(Debug, Clone, PartialEq)]
pub struct VotingFile {
    pub game: WeightedVotingGame,
    pub competencies: Option<Vec<f64>>,
    pub exact_weights: Vec<BigRational>,
    pub exact_competencies: Option<Vec<BigRational>>,
}

/// Parses the voting file format:
///
/// ```text
/// voting:
/// quota: 4
/// weights: 3 2 1
/// competencies: 0.9 0.6 0.6    # optional
/// ```
///
/// `#` starts a comment line; blank lines are ignored.
pub fn parse_voting(text: &str) -> Result<VotingFile> {
    let mut quota: Option<(usize, f64)> = None;
    let mut weights: Option<(Vec<f64>, Vec<BigRational>)> = None;
    let mut competencies: Option<(Vec<f64>, Vec<BigRational>)> = None;
    let mut saw_header = false;

    let parse_list = |rest: &str, line: usize| -> Result<(Vec<f64>, Vec<BigRational>)> {
        let mut floats = Vec::new();
        let mut exact = Vec::new();
        for token in rest.split_whitespace() {
            let value: f64 = token
                .parse()
                .map_err(|_| Error::parse(line, format!("non-numeric value `{token}`")))?;
            floats.push(value);
            exact.push(
                decimal_to_rational(token)
                    .map_err(|_| Error::parse(line, format!("`{token}` is not a plain decimal")))?,
            );
        }
        if floats.is_empty() {
            return Err(Error::parse(line, "expected at least one value"));
        }
        Ok((floats, exact))
    };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !saw_header {
            if line != "voting:" {
                return Err(Error::parse(line_no, "voting files start with `voting:`"));
            }
            saw_header = true;
            continue;
        }
        if let Some(rest) = line.strip_prefix("quota:") {
            if quota.is_some() {
                return Err(Error::parse(line_no, "duplicate quota line"));
            }
            let value: f64 = rest
                .trim()
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad quota `{}`", rest.trim())))?;
            quota = Some((line_no, value));
        } else if let Some(rest) = line.strip_prefix("weights:") {
            if weights.is_some() {
                return Err(Error::parse(line_no, "duplicate weights line"));
            }
            weights = Some(parse_list(rest, line_no)?);
        } else if let Some(rest) = line.strip_prefix("competencies:") {
            if competencies.is_some() {
                return Err(Error::parse(line_no, "duplicate competencies line"));
            }
            competencies = Some(parse_list(rest, line_no)?);
        } else {
            return Err(Error::parse(line_no, format!("unexpected line `{line}`")));
        }
    }

    if !saw_header {
        return Err(Error::parse(0, "empty voting file"));
    }
    let (_, quota) = quota.ok_or_else(|| Error::parse(0, "missing `quota:` line"))?;
    let (weights, exact_weights) =
        weights.ok_or_else(|| Error::parse(0, "missing `weights:` line"))?;
    if let Some((comp, _)) = &competencies {
        if comp.len() != weights.len() {
            return Err(Error::parse(
                0,
                format!("{} competencies for {} weights", comp.len(), weights.len()),
            ));
        }
    }
    let game = WeightedVotingGame::new(weights, quota)?;
    let (competencies, exact_competencies) = match competencies {
        Some((floats, exact)) => (Some(floats), Some(exact)),
        None => (None, None),
    };
    Ok(VotingFile {
        game,
        competencies,
        exact_weights,
        exact_competencies,
    })
}
