//! Generic best-first search over puzzle state spaces.
//!
//! The frontier is a priority queue keyed by the heuristic rank (lower is
//! better) with insertion order breaking ties, so the expansion sequence is
//! deterministic and observable.

use std::collections::{BinaryHeap, HashSet};

/// A single-player puzzle: a start state, a deterministic successor
/// function with labeled moves, a goal test and a heuristic rank.
pub trait PuzzleSpace {
    type State: Clone + Eq + std::hash::Hash;

    fn initial(&self) -> Self::State;
    fn successors(&self, state: &Self::State) -> Vec<(String, Self::State)>;
    fn is_goal(&self, state: &Self::State) -> bool;
    /// Heuristic rank of a state; lower ranks are expanded first.
    fn rank(&self, state: &Self::State) -> f64;
}

/// One entry of the expansion log: the `order`-th node expanded, at tree
/// depth `depth`, carrying heuristic `rank`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionRecord {
    pub order: usize,
    pub depth: usize,
    pub rank: f64,
}

/// A frontier node left unexpanded when the search was cut off.
#[derive(Debug, Clone, PartialEq)]
pub struct FrontierEntry {
    pub rank: f64,
    pub depth: usize,
    pub path: Vec<String>,
}

/// Search result: a goal path, the ranked frontier at the expansion cutoff,
/// or exhaustion without a goal.
#[derive(Debug, Clone, PartialEq)]
pub enum SearchOutcome {
    Found {
        path: Vec<String>,
        expansions: usize,
        log: Vec<ExpansionRecord>,
    },
    Frontier {
        entries: Vec<FrontierEntry>,
        expansions: usize,
        log: Vec<ExpansionRecord>,
    },
    NotFound {
        expansions: usize,
        log: Vec<ExpansionRecord>,
    },
}

struct SearchNode<S> {
    state: S,
    parent: Option<usize>,
    label: Option<String>,
    depth: usize,
}

struct HeapItem {
    rank: f64,
    seq: usize,
    node: usize,
}

impl PartialEq for HeapItem {
    fn eq(&self, other: &Self) -> bool {
        self.seq == other.seq
    }
}

impl Eq for HeapItem {}

impl Ord for HeapItem {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // BinaryHeap is a max-heap; reverse for lowest-rank-first, with
        // insertion order as the tie break.
        other
            .rank
            .total_cmp(&self.rank)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

impl PartialOrd for HeapItem {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn path_to<S>(arena: &[SearchNode<S>], mut index: usize) -> Vec<String> {
    let mut path = Vec::new();
    while let Some(parent) = arena[index].parent {
        path.push(arena[index].label.clone().expect("non-root has a label"));
        index = parent;
    }
    path.reverse();
    path
}

/// Expands the lowest-ranked frontier node until the goal fires, the space
/// is exhausted, or `max_expansions` nodes have been expanded. States
/// already generated are not enqueued again.
pub fn best_first_search<P: PuzzleSpace>(
    space: &P,
    max_expansions: Option<usize>,
) -> SearchOutcome {
    let mut arena: Vec<SearchNode<P::State>> = Vec::new();
    let mut heap: BinaryHeap<HeapItem> = BinaryHeap::new();
    let mut seen: HashSet<P::State> = HashSet::new();
    let mut log: Vec<ExpansionRecord> = Vec::new();
    let mut expansions = 0usize;
    let mut seq = 0usize;

    let initial = space.initial();
    seen.insert(initial.clone());
    arena.push(SearchNode { state: initial, parent: None, label: None, depth: 0 });
    heap.push(HeapItem { rank: space.rank(&arena[0].state), seq, node: 0 });

    while let Some(item) = heap.pop() {
        if space.is_goal(&arena[item.node].state) {
            return SearchOutcome::Found {
                path: path_to(&arena, item.node),
                expansions,
                log,
            };
        }
        if let Some(max) = max_expansions {
            if expansions >= max {
                let mut entries = vec![FrontierEntry {
                    rank: item.rank,
                    depth: arena[item.node].depth,
                    path: path_to(&arena, item.node),
                }];
                while let Some(rest) = heap.pop() {
                    entries.push(FrontierEntry {
                        rank: rest.rank,
                        depth: arena[rest.node].depth,
                        path: path_to(&arena, rest.node),
                    });
                }
                return SearchOutcome::Frontier { entries, expansions, log };
            }
        }
        expansions += 1;
        log.push(ExpansionRecord {
            order: expansions,
            depth: arena[item.node].depth,
            rank: item.rank,
        });
        for (label, state) in space.successors(&arena[item.node].state) {
            if !seen.insert(state.clone()) {
                continue;
            }
            let depth = arena[item.node].depth + 1;
            let rank = space.rank(&state);
            arena.push(SearchNode { state, parent: Some(item.node), label: Some(label), depth });
            seq += 1;
            heap.push(HeapItem { rank, seq, node: arena.len() - 1 });
        }
    }

    SearchOutcome::NotFound { expansions, log }
}

/// A linear chain of `length` states; the goal is the far end and the rank
/// is the remaining distance. Used as a search demo and in tests.
pub struct ChainPuzzle {
    pub length: usize,
}

impl PuzzleSpace for ChainPuzzle {
    type State = usize;

    fn initial(&self) -> usize {
        0
    }

    fn successors(&self, state: &usize) -> Vec<(String, usize)> {
        if state + 1 < self.length {
            vec![("next".to_string(), state + 1)]
        } else {
            Vec::new()
        }
    }

    fn is_goal(&self, state: &usize) -> bool {
        state + 1 == self.length
    }

    fn rank(&self, state: &usize) -> f64 {
        (self.length - 1 - state) as f64
    }
}
