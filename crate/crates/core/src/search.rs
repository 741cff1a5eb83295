//! Bounded search for Andrews-Curtis trivializations.
//!
//! States are relator-symmetry classes of balanced presentations, i.e.
//! [`CanonicalKey`]s: relators are cyclic words taken up to inversion, and the
//! relator list up to order. Moves between classes are
//!
//! * `r_i ← ρ(r_i) · σ(r_j^±1)` for every pair of cyclic rotations `ρ, σ`,
//!   followed by cyclic reduction;
//! * optionally stabilization / destabilization;
//! * in the extended regime, the elementary Nielsen generator changes.
//!
//! These successor sets do not depend on which representative of a class is
//! used, so the reachable set within the bounds, and hence the visited-state
//! count, is a function of the start class and the configuration only.
//!
//! Every class-level edge is realised by atomic moves (single-letter
//! conjugations, one relator multiplication, relator inversions and swaps),
//! which is what certificates contain.

use std::collections::HashMap;
use std::collections::HashSet;

use indexmap::IndexSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::{verify, MoveCertificate};
use crate::moves::{Move, MoveError, Regime, Side, Sign};
use crate::presentation::{canonical_relator, BalancedPresentation, CanonicalKey};
use crate::word::{Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    #[default]
    BreadthFirst,
    IterativeDeepening,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Bound on the total relator length of every visited class.
    pub max_total_length: usize,
    /// Bound on the number of class-level moves.
    pub max_depth: usize,
    pub regime: Regime,
    pub strategy: Strategy,
    /// Maximum number of distinct classes stored.
    pub dedup_capacity: usize,
    /// Worker threads for frontier expansion; 0 uses the global pool.
    pub workers: usize,
    /// Allow stabilization and destabilization moves.
    pub stabilization: bool,
}

impl SearchConfig {
    pub const DEFAULT_CAPACITY: usize = 50_000_000;

    pub fn new(max_total_length: usize, max_depth: usize) -> Self {
        SearchConfig {
            max_total_length,
            max_depth,
            regime: Regime::Strict,
            strategy: Strategy::BreadthFirst,
            dedup_capacity: Self::DEFAULT_CAPACITY,
            workers: 1,
            stabilization: false,
        }
    }

    pub fn validate(&self, start: &BalancedPresentation) -> Result<(), SearchError> {
        let len = start.canonical_form().total_length();
        if self.max_total_length < len {
            return Err(SearchError::LengthBoundBelowStart { bound: self.max_total_length, start: len });
        }
        if self.dedup_capacity == 0 {
            return Err(SearchError::ZeroCapacity);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub visited: u64,
    pub expanded: u64,
    pub frontier_peak: u64,
    pub depth_reached: usize,
    pub max_total_length: usize,
    pub max_depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SearchOutcome {
    /// A verified trivializing certificate; `depth` counts class-level moves.
    Found { depth: usize, stats: SearchStats, certificate: MoveCertificate },
    /// No trivial class is reachable within the bounds.
    Exhausted { stats: SearchStats },
    /// The deduplication table filled up before the search finished.
    Inconclusive { stats: SearchStats },
}

impl SearchOutcome {
    pub fn stats(&self) -> &SearchStats {
        match self {
            SearchOutcome::Found { stats, .. }
            | SearchOutcome::Exhausted { stats }
            | SearchOutcome::Inconclusive { stats } => stats,
        }
    }

    pub fn certificate(&self) -> Option<&MoveCertificate> {
        match self {
            SearchOutcome::Found { certificate, .. } => Some(certificate),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found { .. })
    }

    pub fn status(&self) -> &'static str {
        match self {
            SearchOutcome::Found { .. } => "found",
            SearchOutcome::Exhausted { .. } => "exhausted",
            SearchOutcome::Inconclusive { .. } => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("length bound {bound} is below the start length {start}")]
    LengthBoundBelowStart { bound: usize, start: usize },
    #[error("deduplication capacity must be positive")]
    ZeroCapacity,
    #[error("prefix certificate starts from a different presentation")]
    PrefixStartMismatch,
    #[error("prefix move {step} is illegal: {source}")]
    IllegalPrefix { step: usize, source: MoveError },
    #[error("internal error: produced certificate fails verification at step {step}")]
    UnsoundCertificate { step: usize },
    #[error("failed to build worker pool: {0}")]
    WorkerPool(String),
}

/// Per-level progress, reported to an observer during long searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Progress {
    pub depth: usize,
    pub frontier: u64,
    pub visited: u64,
}

/// A class-level move from a canonical representative. Indices are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Edge {
    Multiply { target: u32, by: u32, sign: Sign, target_rot: u32, by_rot: u32 },
    Stabilize,
    Destabilize { relator: u32 },
    Nielsen { generator: u32, by: u32, sign: Sign },
    InvertGenerator { generator: u32 },
    SwapGenerators { first: u32, second: u32 },
}

struct Child {
    edge: Edge,
    key: CanonicalKey,
    trivial: bool,
}

const SIGNS: [Sign; 2] = [Sign::Plus, Sign::Minus];

fn canonical_child(rank: usize, mut relators: Vec<Word>) -> (CanonicalKey, bool) {
    relators.sort();
    let child = BalancedPresentation::from_parts(rank, relators);
    let trivial = child.is_canonical_trivial();
    (CanonicalKey::encode(&child), trivial)
}

/// All class-level successors of a canonical representative, in the fixed
/// move order (move type, then indices, then sign, then rotations).
fn successors(p: &BalancedPresentation, cfg: &SearchConfig, mut emit: impl FnMut(Child)) {
    let n = p.rank();
    let rels = p.relators();
    let total = p.total_length();
    let limit = cfg.max_total_length;

    for i in 0..n {
        for j in 0..n {
            if i == j || rels[j].is_empty() {
                continue;
            }
            for sign in SIGNS {
                let factor = sign.apply(&rels[j]);
                for a in 0..rels[i].len().max(1) {
                    let base = rels[i].rotate_left(a);
                    for b in 0..factor.len() {
                        let product = base.mul(&factor.rotate_left(b));
                        let core = canonical_relator(&product);
                        if total - rels[i].len() + core.len() > limit {
                            continue;
                        }
                        let mut next = rels.to_vec();
                        next[i] = core;
                        let (key, trivial) = canonical_child(n, next);
                        emit(Child {
                            edge: Edge::Multiply {
                                target: i as u32,
                                by: j as u32,
                                sign,
                                target_rot: a as u32,
                                by_rot: b as u32,
                            },
                            key,
                            trivial,
                        });
                    }
                }
            }
        }
    }

    if cfg.stabilization {
        if total < limit {
            let mut next = rels.to_vec();
            next.push(Word::letter(Letter::gen(n as u32 + 1)));
            let (key, trivial) = canonical_child(n + 1, next);
            emit(Child { edge: Edge::Stabilize, key, trivial });
        }
        if n > 1 {
            for i in 0..n {
                if let Ok(q) = (Move::Destabilize { relator: i + 1 }).apply(p) {
                    let canon = q.canonical_form();
                    let trivial = canon.is_canonical_trivial();
                    emit(Child {
                        edge: Edge::Destabilize { relator: i as u32 },
                        key: CanonicalKey::encode(&canon),
                        trivial,
                    });
                }
            }
        }
    }

    if cfg.regime == Regime::Extended {
        let generator_edge = |edge: Edge, m: Move, emit: &mut dyn FnMut(Child)| {
            let q = m.apply(p).expect("generator move indices are in range");
            let canon = q.canonical_form();
            if canon.total_length() <= limit {
                let trivial = canon.is_canonical_trivial();
                emit(Child { edge, key: CanonicalKey::encode(&canon), trivial });
            }
        };
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                for sign in SIGNS {
                    generator_edge(
                        Edge::Nielsen { generator: i as u32, by: j as u32, sign },
                        Move::NielsenGenerator { generator: i + 1, by: j + 1, sign },
                        &mut emit,
                    );
                }
            }
        }
        for i in 0..n {
            generator_edge(
                Edge::InvertGenerator { generator: i as u32 },
                Move::InvertGenerator { generator: i + 1 },
                &mut emit,
            );
        }
        for i in 0..n {
            for j in i + 1..n {
                generator_edge(
                    Edge::SwapGenerators { first: i as u32, second: j as u32 },
                    Move::SwapGenerators { first: i + 1, second: j + 1 },
                    &mut emit,
                );
            }
        }
    }
}

/// Moves rotating relator `relator` (1-based), currently equal to `w`, left by `k`.
fn rotation_moves(relator: usize, w: &Word, k: usize, out: &mut Vec<Move>) {
    let n = w.len();
    if n == 0 {
        return;
    }
    let k = k % n;
    let letters = w.letters();
    if k <= n - k {
        // c·s → s·c by conjugating with c⁻¹
        for &c in &letters[..k] {
            out.push(Move::ConjugateRelator { relator, letter: c.inverse() });
        }
    } else {
        // s·c → c·s by conjugating with c
        for &c in letters[k..].iter().rev() {
            out.push(Move::ConjugateRelator { relator, letter: c });
        }
    }
}

/// Atomic moves taking `p` literally to its canonical form.
pub fn normalization_moves(p: &BalancedPresentation) -> Vec<Move> {
    let mut out = Vec::new();
    let mut rels: Vec<Word> = Vec::with_capacity(p.rank());
    for (k, r) in p.relators().iter().enumerate() {
        let idx = k + 1;
        let (conj, core) = r.cyclic_reduce();
        for &c in conj.letters() {
            out.push(Move::ConjugateRelator { relator: idx, letter: c.inverse() });
        }
        let (form, inverted, rot) = core.cyclic_canonical();
        let src = if inverted {
            out.push(Move::InvertRelator { relator: idx });
            core.inverse()
        } else {
            core
        };
        rotation_moves(idx, &src, rot, &mut out);
        rels.push(form);
    }
    for pos in 0..rels.len() {
        let min = (pos..rels.len()).min_by(|&a, &b| rels[a].cmp(&rels[b]).then(a.cmp(&b))).unwrap();
        if min != pos {
            rels.swap(pos, min);
            out.push(Move::SwapRelators { first: pos + 1, second: min + 1 });
        }
    }
    out
}

/// Atomic moves realising `edge` from the canonical literal state `state`,
/// ending at the canonical form of the child.
fn edge_moves(state: &BalancedPresentation, edge: Edge) -> Vec<Move> {
    let mut out = Vec::new();
    match edge {
        Edge::Multiply { target, by, sign, target_rot, by_rot } => {
            let (i, j) = (target as usize, by as usize);
            let rj = state.relators()[j].clone();
            rotation_moves(i + 1, &state.relators()[i], target_rot as usize, &mut out);
            let rot_j = match sign {
                Sign::Plus => by_rot as usize,
                Sign::Minus => (rj.len() - by_rot as usize) % rj.len(),
            };
            rotation_moves(j + 1, &rj, rot_j, &mut out);
            out.push(Move::MultiplyRelator { target: i + 1, by: j + 1, side: Side::Right, sign });
        }
        Edge::Stabilize => out.push(Move::Stabilize),
        Edge::Destabilize { relator } => out.push(Move::Destabilize { relator: relator as usize + 1 }),
        Edge::Nielsen { generator, by, sign } => out.push(Move::NielsenGenerator {
            generator: generator as usize + 1,
            by: by as usize + 1,
            sign,
        }),
        Edge::InvertGenerator { generator } => {
            out.push(Move::InvertGenerator { generator: generator as usize + 1 })
        }
        Edge::SwapGenerators { first, second } => out.push(Move::SwapGenerators {
            first: first as usize + 1,
            second: second as usize + 1,
        }),
    }
    let mut literal = state.clone();
    for m in &out {
        literal = m.apply(&literal).expect("edge moves are legal on their source state");
    }
    out.extend(normalization_moves(&literal));
    out
}

/// Expands a class-level path into a replayable certificate from `start`.
fn build_certificate(start: &BalancedPresentation, path: &[Edge]) -> MoveCertificate {
    let mut moves = Vec::new();
    if !path.is_empty() {
        moves.extend(normalization_moves(start));
    }
    let mut state = start.canonical_form();
    for &edge in path {
        let step = edge_moves(&state, edge);
        for m in &step {
            state = m.apply(&state).expect("certificate moves replay");
        }
        moves.extend(step);
    }
    MoveCertificate::new(start.clone(), moves)
}

fn checked_found(
    start: &BalancedPresentation,
    path: &[Edge],
    stats: SearchStats,
) -> Result<SearchOutcome, SearchError> {
    let certificate = build_certificate(start, path);
    let report = verify(&certificate);
    if let Some(f) = report.failure {
        return Err(SearchError::UnsoundCertificate { step: f.step() });
    }
    Ok(SearchOutcome::Found { depth: path.len(), stats, certificate })
}

/// Bounded search from `start` under `cfg`.
pub fn search(start: &BalancedPresentation, cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    search_with_progress(start, cfg, |_| {})
}

pub fn search_with_progress(
    start: &BalancedPresentation,
    cfg: &SearchConfig,
    progress: impl FnMut(Progress),
) -> Result<SearchOutcome, SearchError> {
    cfg.validate(start)?;
    match cfg.strategy {
        Strategy::BreadthFirst => bfs(start, cfg, progress),
        Strategy::IterativeDeepening => iddfs(start, cfg, progress),
    }
}

fn base_stats(cfg: &SearchConfig) -> SearchStats {
    SearchStats { max_total_length: cfg.max_total_length, max_depth: cfg.max_depth, ..Default::default() }
}

fn expand_filtered(
    keys: &IndexSet<CanonicalKey>,
    id: u32,
    cfg: &SearchConfig,
) -> Vec<Child> {
    let p = keys[id as usize].decode();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    successors(&p, cfg, |c| {
        if !keys.contains(&c.key) && seen.insert(c.key.clone()) {
            out.push(c);
        }
    });
    out
}

fn bfs(
    start: &BalancedPresentation,
    cfg: &SearchConfig,
    mut progress: impl FnMut(Progress),
) -> Result<SearchOutcome, SearchError> {
    let pool = match cfg.workers {
        0 | 1 => None,
        w => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| SearchError::WorkerPool(e.to_string()))?,
        ),
    };
    let mut stats = base_stats(cfg);
    let root = start.canonical_form();
    let mut keys: IndexSet<CanonicalKey> = IndexSet::new();
    keys.insert(CanonicalKey::encode(&root));
    let mut parents: Vec<Option<(u32, Edge)>> = vec![None];
    stats.visited = 1;
    stats.frontier_peak = 1;
    if root.is_canonical_trivial() {
        return Ok(SearchOutcome::Found {
            depth: 0,
            stats,
            certificate: MoveCertificate::new(start.clone(), vec![]),
        });
    }

    let path_to = |parents: &[Option<(u32, Edge)>], mut id: u32| {
        let mut path = Vec::new();
        while let Some((parent, edge)) = parents[id as usize] {
            path.push(edge);
            id = parent;
        }
        path.reverse();
        path
    };

    let mut frontier: Vec<u32> = vec![0];
    for depth in 0..cfg.max_depth {
        if frontier.is_empty() {
            break;
        }
        stats.expanded += frontier.len() as u64;
        let batches: Vec<Vec<Child>> = match (&pool, cfg.workers) {
            (Some(pool), _) => {
                pool.install(|| frontier.par_iter().map(|&id| expand_filtered(&keys, id, cfg)).collect())
            }
            (None, 0) => frontier.par_iter().map(|&id| expand_filtered(&keys, id, cfg)).collect(),
            (None, _) => frontier.iter().map(|&id| expand_filtered(&keys, id, cfg)).collect(),
        };
        let mut next = Vec::new();
        for (&parent, batch) in frontier.iter().zip(batches) {
            for child in batch {
                if keys.contains(&child.key) {
                    continue;
                }
                if keys.len() >= cfg.dedup_capacity {
                    stats.visited = keys.len() as u64;
                    stats.depth_reached = depth;
                    return Ok(SearchOutcome::Inconclusive { stats });
                }
                let (id, _) = keys.insert_full(child.key);
                let id = id as u32;
                parents.push(Some((parent, child.edge)));
                next.push(id);
                if child.trivial {
                    stats.visited = keys.len() as u64;
                    stats.frontier_peak = stats.frontier_peak.max(next.len() as u64);
                    stats.depth_reached = depth + 1;
                    let path = path_to(&parents, id);
                    return checked_found(start, &path, stats);
                }
            }
        }
        stats.visited = keys.len() as u64;
        stats.frontier_peak = stats.frontier_peak.max(next.len() as u64);
        stats.depth_reached = depth + 1;
        progress(Progress { depth: depth + 1, frontier: next.len() as u64, visited: stats.visited });
        frontier = next;
    }
    Ok(SearchOutcome::Exhausted { stats })
}

enum DfsResult {
    Found(Vec<Edge>),
    Capacity,
    Done,
}

fn iddfs(
    start: &BalancedPresentation,
    cfg: &SearchConfig,
    mut progress: impl FnMut(Progress),
) -> Result<SearchOutcome, SearchError> {
    let mut stats = base_stats(cfg);
    let root = start.canonical_form();
    stats.visited = 1;
    stats.frontier_peak = 1;
    if root.is_canonical_trivial() {
        return Ok(SearchOutcome::Found {
            depth: 0,
            stats,
            certificate: MoveCertificate::new(start.clone(), vec![]),
        });
    }
    let root_key = CanonicalKey::encode(&root);
    let mut best: HashMap<CanonicalKey, usize> = HashMap::new();
    for limit in 1..=cfg.max_depth {
        best.clear();
        best.insert(root_key.clone(), 0);
        let mut path = Vec::new();
        let result = dfs(&root, 0, limit, cfg, &mut best, &mut path, &mut stats);
        stats.visited = best.len() as u64;
        stats.depth_reached = limit;
        progress(Progress { depth: limit, frontier: 0, visited: stats.visited });
        match result {
            DfsResult::Found(path) => return checked_found(start, &path, stats),
            DfsResult::Capacity => return Ok(SearchOutcome::Inconclusive { stats }),
            DfsResult::Done => {}
        }
    }
    Ok(SearchOutcome::Exhausted { stats })
}

fn dfs(
    p: &BalancedPresentation,
    depth: usize,
    limit: usize,
    cfg: &SearchConfig,
    best: &mut HashMap<CanonicalKey, usize>,
    path: &mut Vec<Edge>,
    stats: &mut SearchStats,
) -> DfsResult {
    stats.expanded += 1;
    let mut children = Vec::new();
    successors(p, cfg, |c| children.push(c));
    let child_depth = depth + 1;
    for child in children {
        if best.get(&child.key).is_some_and(|&d| d <= child_depth) {
            continue;
        }
        if !best.contains_key(&child.key) && best.len() >= cfg.dedup_capacity {
            return DfsResult::Capacity;
        }
        path.push(child.edge);
        if child.trivial {
            return DfsResult::Found(path.clone());
        }
        best.insert(child.key.clone(), child_depth);
        if child_depth < limit {
            let q = child.key.decode();
            match dfs(&q, child_depth, limit, cfg, best, path, stats) {
                DfsResult::Done => {}
                other => return other,
            }
        }
        path.pop();
    }
    DfsResult::Done
}

/// Replays `prefix`, then searches from its endpoint. A `Found` outcome
/// carries the concatenated certificate, verified end to end.
pub fn hybrid_trivialize(
    start: &BalancedPresentation,
    prefix: &MoveCertificate,
    cfg: &SearchConfig,
) -> Result<SearchOutcome, SearchError> {
    if &prefix.start != start {
        return Err(SearchError::PrefixStartMismatch);
    }
    let endpoint = prefix.replay().map_err(|(step, source)| SearchError::IllegalPrefix { step, source })?;
    let outcome = search(&endpoint, cfg)?;
    Ok(match outcome {
        SearchOutcome::Found { depth, stats, certificate } => {
            let full = prefix.clone().then(certificate.moves);
            let report = verify(&full);
            if let Some(f) = report.failure {
                return Err(SearchError::UnsoundCertificate { step: f.step() });
            }
            SearchOutcome::Found { depth, stats, certificate: full }
        }
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BalancedPresentation {
        BalancedPresentation::parse(s).unwrap()
    }

    #[test]
    fn trivial_start_found_with_empty_certificate() {
        let out = search(&p("2; x; y"), &SearchConfig::new(2, 0)).unwrap();
        match out {
            SearchOutcome::Found { depth, certificate, .. } => {
                assert_eq!(depth, 0);
                assert!(certificate.moves.is_empty());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn normalization_reaches_canonical_form() {
        for s in ["2; yxY; XY", "3; zzX; Yxyy; xyz", "2; ; yyX", "1; XXx"] {
            let pres = p(s);
            let mut q = pres.clone();
            for m in normalization_moves(&pres) {
                q = m.apply(&q).unwrap();
            }
            assert_eq!(q, pres.canonical_form(), "{s}");
        }
    }

    #[test]
    fn edge_moves_land_on_child_key() {
        let canon = p("2; YXYxyx; xxYY").canonical_form();
        let cfg = SearchConfig::new(14, 1);
        let mut count = 0;
        successors(&canon, &cfg, |c| {
            let mut q = canon.clone();
            for m in edge_moves(&canon, c.edge) {
                q = m.apply(&q).unwrap();
            }
            assert_eq!(q.canonical_key(), c.key);
            assert_eq!(q, c.key.decode());
            count += 1;
        });
        assert!(count > 0);
    }

    #[test]
    fn one_step_trivialization() {
        let out = search(&p("2; xy; y"), &SearchConfig::new(3, 3)).unwrap();
        assert!(out.is_found());
        assert_eq!(out.stats().depth_reached, 1);
        assert!(verify(out.certificate().unwrap()).valid);
    }

    #[test]
    fn bound_below_start_rejected() {
        assert_eq!(
            search(&p("2; xy; y"), &SearchConfig::new(2, 3)),
            Err(SearchError::LengthBoundBelowStart { bound: 2, start: 3 })
        );
    }

    #[test]
    fn capacity_overflow_is_inconclusive() {
        let mut cfg = SearchConfig::new(17, 8);
        cfg.dedup_capacity = 5;
        let out = search(&p("2; YXYxyx; xxxxYYY"), &cfg).unwrap();
        assert!(matches!(out, SearchOutcome::Inconclusive { .. }));
        assert_eq!(out.stats().visited, 5);
    }

    #[test]
    fn zero_depth_exhausts_immediately() {
        let out = search(&p("2; xy; y"), &SearchConfig::new(3, 0)).unwrap();
        assert!(matches!(out, SearchOutcome::Exhausted { .. }));
        assert_eq!(out.stats().visited, 1);
    }

    #[test]
    fn stabilization_edges() {
        let mut cfg = SearchConfig::new(3, 2);
        cfg.stabilization = true;
        let canon = p("1; xx").canonical_form();
        let mut edges = Vec::new();
        successors(&canon, &cfg, |c| edges.push(c.edge));
        assert_eq!(edges, vec![Edge::Stabilize]);
        let canon = p("2; x; yyx").canonical_form();
        let mut found = false;
        successors(&canon, &cfg, |c| found |= c.edge == Edge::Destabilize { relator: 0 });
        assert!(!found, "x occurs in the other relator");
    }

    #[test]
    fn iterative_deepening_agrees_on_small_instance() {
        let start = p("2; YXYxyx; xxxxYYY");
        let bfs = search(&start, &SearchConfig::new(13, 3)).unwrap();
        let mut cfg = SearchConfig::new(13, 3);
        cfg.strategy = Strategy::IterativeDeepening;
        let id = search(&start, &cfg).unwrap();
        assert_eq!(bfs.status(), id.status());
        assert_eq!(bfs.stats().visited, id.stats().visited);
    }
}
