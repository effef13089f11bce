//! Extensive-form game trees with information sets, backward induction for
//! perfect-information games, and conversion to normal form.

pub mod search;
pub mod tictactoe;

pub use search::{best_first_search, ChainPuzzle, ExpansionRecord, FrontierEntry, PuzzleSpace, SearchOutcome};
pub use tictactoe::{enumerate_tictactoe, GameValue, TicTacToeReport, XWinPuzzle};

use crate::error::{Error, Result};
use crate::game::{approx_gt, BimatrixGame};

/// A move out of a decision node.
#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub label: String,
    pub target: usize,
}

/// A tree node: either a decision point of one player or a terminal leaf
/// carrying one payoff per player.
#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    Decision { player: usize, edges: Vec<Edge> },
    Leaf { payoffs: Vec<f64> },
}

/// An extensive-form game tree.
///
/// Players are numbered from 1. Decision nodes are partitioned into
/// information sets; nodes that share a set belong to the same player and
/// offer the same move labels, and the player cannot tell them apart.
/// Nodes not covered by an explicit set form singleton sets.
#[derive(Debug, Clone, PartialEq)]
pub struct GameTree {
    nodes: Vec<Node>,
    root: usize,
    info_sets: Vec<Vec<usize>>,
    set_of_node: Vec<Option<usize>>,
    players: usize,
}

impl GameTree {
    pub fn new(nodes: Vec<Node>, root: usize, explicit_sets: Vec<Vec<usize>>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::Contract("a game tree needs at least one node".into()));
        }
        if root >= nodes.len() {
            return Err(Error::Contract(format!("root index {root} out of range")));
        }

        let mut players = 0usize;
        let mut parents = vec![0usize; nodes.len()];
        for (idx, node) in nodes.iter().enumerate() {
            match node {
                Node::Leaf { payoffs } => {
                    if payoffs.is_empty() || payoffs.iter().any(|p| !p.is_finite()) {
                        return Err(Error::Contract(format!(
                            "leaf {idx} needs a finite payoff per player"
                        )));
                    }
                    if players == 0 {
                        players = payoffs.len();
                    } else if payoffs.len() != players {
                        return Err(Error::Contract(format!(
                            "leaf {idx} has {} payoffs, expected {players}",
                            payoffs.len()
                        )));
                    }
                }
                Node::Decision { player, edges } => {
                    if *player == 0 {
                        return Err(Error::Contract(format!(
                            "decision node {idx}: players are numbered from 1"
                        )));
                    }
                    if edges.is_empty() {
                        return Err(Error::Contract(format!(
                            "decision node {idx} has no moves"
                        )));
                    }
                    let mut labels: Vec<&str> = edges.iter().map(|e| e.label.as_str()).collect();
                    labels.sort_unstable();
                    if labels.windows(2).any(|w| w[0] == w[1]) {
                        return Err(Error::Contract(format!(
                            "decision node {idx} repeats a move label"
                        )));
                    }
                    for edge in edges {
                        if edge.target >= nodes.len() {
                            return Err(Error::Contract(format!(
                                "edge from node {idx} targets unknown node {}",
                                edge.target
                            )));
                        }
                        parents[edge.target] += 1;
                    }
                }
            }
        }
        for (idx, node) in nodes.iter().enumerate() {
            if let Node::Decision { player, .. } = node {
                if *player > players {
                    return Err(Error::Contract(format!(
                        "decision node {idx} belongs to player {player}, but leaves carry {players} payoffs"
                    )));
                }
            }
        }
        if parents[root] != 0 {
            return Err(Error::Contract("the root must not have a parent".into()));
        }
        for (idx, &count) in parents.iter().enumerate() {
            if idx != root && count != 1 {
                return Err(Error::Contract(format!(
                    "node {idx} has {count} parents; a tree needs exactly one per non-root node"
                )));
            }
        }
        // One parent each plus a parentless root rules out cycles as long as
        // everything is reachable.
        let mut seen = vec![false; nodes.len()];
        let mut stack = vec![root];
        while let Some(idx) = stack.pop() {
            if std::mem::replace(&mut seen[idx], true) {
                continue;
            }
            if let Node::Decision { edges, .. } = &nodes[idx] {
                stack.extend(edges.iter().map(|e| e.target));
            }
        }
        if let Some(idx) = seen.iter().position(|&s| !s) {
            return Err(Error::Contract(format!("node {idx} is not reachable from the root")));
        }

        let mut set_of_node: Vec<Option<usize>> = vec![None; nodes.len()];
        let mut info_sets = Vec::new();
        for set in explicit_sets {
            if set.is_empty() {
                continue;
            }
            let mut signature: Option<(usize, Vec<String>)> = None;
            for &idx in &set {
                if idx >= nodes.len() {
                    return Err(Error::Contract(format!("information set names unknown node {idx}")));
                }
                let Node::Decision { player, edges } = &nodes[idx] else {
                    return Err(Error::Contract(format!(
                        "information set contains leaf {idx}; only decision nodes have information"
                    )));
                };
                if set_of_node[idx].is_some() {
                    return Err(Error::Contract(format!(
                        "node {idx} appears in two information sets"
                    )));
                }
                set_of_node[idx] = Some(info_sets.len());
                let mut labels: Vec<String> = edges.iter().map(|e| e.label.clone()).collect();
                labels.sort();
                match &signature {
                    None => signature = Some((*player, labels)),
                    Some((p, l)) => {
                        if p != player {
                            return Err(Error::Contract(
                                "an information set must contain a single player's nodes".into(),
                            ));
                        }
                        if l != &labels {
                            return Err(Error::Contract(
                                "all nodes of an information set must offer identical move labels"
                                    .into(),
                            ));
                        }
                    }
                }
            }
            info_sets.push(set);
        }
        for (idx, node) in nodes.iter().enumerate() {
            if matches!(node, Node::Decision { .. }) && set_of_node[idx].is_none() {
                set_of_node[idx] = Some(info_sets.len());
                info_sets.push(vec![idx]);
            }
        }

        Ok(GameTree {
            nodes,
            root,
            info_sets,
            set_of_node,
            players,
        })
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, index: usize) -> &Node {
        &self.nodes[index]
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn player_count(&self) -> usize {
        self.players
    }

    pub fn info_sets(&self) -> &[Vec<usize>] {
        &self.info_sets
    }

    /// True iff every information set is a singleton.
    pub fn is_perfect_information(&self) -> bool {
        self.info_sets.iter().all(|set| set.len() == 1)
    }

    /// Folds leaf payoffs upward, each decision node taking the move that
    /// maximizes the acting player's own payoff (ties go to the
    /// alphabetically lowest move label). Returns the root value vector and
    /// the induced move path.
    pub fn backward_induction(&self) -> Result<(Vec<f64>, Vec<String>)> {
        if !self.is_perfect_information() {
            return Err(Error::Contract(
                "backward induction needs perfect information; convert with to_normal_form instead"
                    .into(),
            ));
        }
        Ok(self.fold(self.root))
    }

    fn fold(&self, index: usize) -> (Vec<f64>, Vec<String>) {
        match &self.nodes[index] {
            Node::Leaf { payoffs } => (payoffs.clone(), Vec::new()),
            Node::Decision { player, edges } => {
                let mut order: Vec<&Edge> = edges.iter().collect();
                order.sort_by(|a, b| a.label.cmp(&b.label));
                let mut best: Option<(Vec<f64>, Vec<String>, &str)> = None;
                for edge in order {
                    let (value, path) = self.fold(edge.target);
                    let better = match &best {
                        None => true,
                        Some((current, _, _)) => {
                            approx_gt(value[player - 1], current[player - 1])
                        }
                    };
                    if better {
                        best = Some((value, path, &edge.label));
                    }
                }
                let (value, mut path, label) = best.expect("decision nodes have moves");
                path.insert(0, label.to_string());
                (value, path)
            }
        }
    }

    /// Information sets belonging to `player`, ordered by their smallest
    /// node index. This is the strategy-enumeration order.
    fn player_sets(&self, player: usize) -> Vec<usize> {
        let mut sets: Vec<usize> = (0..self.info_sets.len())
            .filter(|&s| {
                let node = self.info_sets[s][0];
                matches!(&self.nodes[node], Node::Decision { player: p, .. } if *p == player)
            })
            .collect();
        sets.sort_by_key(|&s| self.info_sets[s].iter().min().copied());
        sets
    }

    /// Sorted move labels available in an information set.
    fn set_moves(&self, set: usize) -> Vec<String> {
        let node = self.info_sets[set][0];
        let Node::Decision { edges, .. } = &self.nodes[node] else {
            unreachable!("info sets hold decision nodes")
        };
        let mut labels: Vec<String> = edges.iter().map(|e| e.label.clone()).collect();
        labels.sort();
        labels
    }

    /// Converts a two-player tree to its induced bimatrix game.
    ///
    /// A pure strategy assigns one move to each of the player's information
    /// sets; each strategy profile is played out to a leaf. Strategy labels
    /// join the chosen moves with `/` in set order. At most 12 strategies
    /// per player.
    pub fn to_normal_form(&self) -> Result<BimatrixGame> {
        if self.players != 2 {
            return Err(Error::Contract(format!(
                "to_normal_form needs a 2-player tree, got {} players",
                self.players
            )));
        }
        let mut strategies = Vec::new();
        for player in 1..=2 {
            let sets = self.player_sets(player);
            let mut assignments: Vec<Vec<(usize, String)>> = vec![Vec::new()];
            for &set in &sets {
                let mut extended = Vec::new();
                for assignment in &assignments {
                    for label in self.set_moves(set) {
                        let mut next = assignment.clone();
                        next.push((set, label));
                        extended.push(next);
                    }
                }
                assignments = extended;
                if assignments.len() > 12 {
                    return Err(Error::UnsupportedSize(format!(
                        "player {player} has more than 12 pure strategies"
                    )));
                }
            }
            strategies.push(assignments);
        }

        let strategy_label = |assignment: &[(usize, String)]| -> String {
            if assignment.is_empty() {
                "-".to_string()
            } else {
                assignment
                    .iter()
                    .map(|(_, label)| label.as_str())
                    .collect::<Vec<_>>()
                    .join("/")
            }
        };

        let mut row_payoffs = Vec::new();
        let mut col_payoffs = Vec::new();
        for row_strategy in &strategies[0] {
            let mut row_line = Vec::new();
            let mut col_line = Vec::new();
            for col_strategy in &strategies[1] {
                let payoffs = self.play_out(row_strategy, col_strategy);
                row_line.push(payoffs[0]);
                col_line.push(payoffs[1]);
            }
            row_payoffs.push(row_line);
            col_payoffs.push(col_line);
        }
        BimatrixGame::new(row_payoffs, col_payoffs)?.with_labels(
            strategies[0].iter().map(|a| strategy_label(a)).collect(),
            strategies[1].iter().map(|a| strategy_label(a)).collect(),
        )
    }

    fn play_out(&self, row: &[(usize, String)], col: &[(usize, String)]) -> Vec<f64> {
        let mut index = self.root;
        loop {
            match &self.nodes[index] {
                Node::Leaf { payoffs } => return payoffs.clone(),
                Node::Decision { player, edges } => {
                    let set = self.set_of_node[index].expect("decision node has a set");
                    let assignment = if *player == 1 { row } else { col };
                    let label = assignment
                        .iter()
                        .find(|(s, _)| *s == set)
                        .map(|(_, l)| l.as_str())
                        .expect("strategy covers every information set");
                    index = edges
                        .iter()
                        .find(|e| e.label == label)
                        .map(|e| e.target)
                        .expect("set members share move labels");
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Tree file format
// ---------------------------------------------------------------------------

/// Parses the line-based tree format:
///
/// ```text
/// node <id> player <p>
/// leaf <id> payoffs <v1> <v2> ...
/// edge <from> <to> <label>
/// infoset <id1> <id2> ...
/// root <id>
/// ```
///
/// Ids are arbitrary tokens, declared by `node`/`leaf` lines before use.
/// `#` starts a comment line; blank lines are ignored.
pub fn parse_tree(text: &str) -> Result<GameTree> {
    struct PendingNode {
        player: Option<usize>,
        payoffs: Option<Vec<f64>>,
        edges: Vec<Edge>,
    }

    fn resolve(
        lookup: &std::collections::HashMap<String, usize>,
        token: &str,
        line: usize,
    ) -> Result<usize> {
        lookup
            .get(token)
            .copied()
            .ok_or_else(|| Error::parse(line, format!("unknown node id `{token}`")))
    }

    let mut ids: Vec<String> = Vec::new();
    let mut lookup = std::collections::HashMap::new();
    let mut pending: Vec<PendingNode> = Vec::new();
    let mut sets: Vec<Vec<usize>> = Vec::new();
    let mut root: Option<usize> = None;

    for (line_idx, raw) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "node" | "leaf" => {
                let kind = tokens[0];
                let Some(&id) = tokens.get(1) else {
                    return Err(Error::parse(line_no, format!("`{kind}` needs an id")));
                };
                if lookup.contains_key(id) {
                    return Err(Error::parse(line_no, format!("duplicate node id `{id}`")));
                }
                let node = if kind == "node" {
                    if tokens.get(2) != Some(&"player") {
                        return Err(Error::parse(line_no, "expected `node <id> player <p>`"));
                    }
                    let player = tokens
                        .get(3)
                        .and_then(|t| t.parse::<usize>().ok())
                        .filter(|&p| p >= 1)
                        .ok_or_else(|| Error::parse(line_no, "bad player number"))?;
                    PendingNode { player: Some(player), payoffs: None, edges: Vec::new() }
                } else {
                    if tokens.get(2) != Some(&"payoffs") {
                        return Err(Error::parse(line_no, "expected `leaf <id> payoffs <v...>`"));
                    }
                    let payoffs = tokens[3..]
                        .iter()
                        .map(|t| {
                            t.parse::<f64>().map_err(|_| {
                                Error::parse(line_no, format!("non-numeric payoff `{t}`"))
                            })
                        })
                        .collect::<Result<Vec<f64>>>()?;
                    if payoffs.is_empty() {
                        return Err(Error::parse(line_no, "a leaf needs at least one payoff"));
                    }
                    PendingNode { player: None, payoffs: Some(payoffs), edges: Vec::new() }
                };
                lookup.insert(id.to_string(), pending.len());
                ids.push(id.to_string());
                pending.push(node);
            }
            "edge" => {
                let [_, from, to, label] = tokens[..] else {
                    return Err(Error::parse(line_no, "expected `edge <from> <to> <label>`"));
                };
                let from = resolve(&lookup, from, line_no)?;
                let to = resolve(&lookup, to, line_no)?;
                if pending[from].payoffs.is_some() {
                    return Err(Error::parse(line_no, "edges cannot leave a leaf"));
                }
                pending[from].edges.push(Edge { label: label.to_string(), target: to });
            }
            "infoset" => {
                let members = tokens[1..]
                    .iter()
                    .map(|t| resolve(&lookup, t, line_no))
                    .collect::<Result<Vec<usize>>>()?;
                if members.is_empty() {
                    return Err(Error::parse(line_no, "an infoset needs at least one node"));
                }
                sets.push(members);
            }
            "root" => {
                let Some(&id) = tokens.get(1) else {
                    return Err(Error::parse(line_no, "expected `root <id>`"));
                };
                if root.is_some() {
                    return Err(Error::parse(line_no, "duplicate root line"));
                }
                root = Some(resolve(&lookup, id, line_no)?);
            }
            other => {
                return Err(Error::parse(line_no, format!("unknown directive `{other}`")));
            }
        }
    }

    let root = root.ok_or_else(|| Error::parse(0, "missing `root <id>` line"))?;
    let nodes = pending
        .into_iter()
        .enumerate()
        .map(|(idx, p)| match (p.player, p.payoffs) {
            (Some(player), None) => Ok(Node::Decision { player, edges: p.edges }),
            (None, Some(payoffs)) => Ok(Node::Leaf { payoffs }),
            _ => Err(Error::parse(0, format!("node `{}` is malformed", ids[idx]))),
        })
        .collect::<Result<Vec<Node>>>()?;
    GameTree::new(nodes, root, sets)
}
