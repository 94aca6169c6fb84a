//! Exact `ex(n, H)` by search over labeled graphs.
//!
//! Edges are decided in graph6 column order `(0,1),(0,2),(1,2),(0,3),..`.
//! A graph is identified with its edge mask, bit `i` set iff the `i`-th pair
//! is an edge. Among all maximizers the reported witness is the one whose
//! sorted edge-index list is lexicographically smallest.
//!
//! The decision tree is split at a fixed depth into independent tasks
//! ([`SearchPlan::run_task`]). Tasks share nothing, and [`TaskResult::merge`]
//! is associative and commutative, so the final report does not depend on how
//! tasks are scheduled.

use alloc::vec::Vec;
use core::fmt;

use crate::bounds::{check_bound, erdos_c4_bound, kst_bound, mantel_bound, turan_bound, BoundValue};
use crate::construct::{named_graph, NamedGraph};
use crate::detect::{DetectError, ForbiddenPattern};
use crate::graph::{Graph, GraphBuilder};

pub const EXHAUSTIVE_MAX_N: usize = 7;
pub const PRUNED_MAX_N: usize = 10;
/// Depth of the decision tree at which the search is split into tasks.
pub const SPLIT_DEPTH: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("{strategy} search supports n <= {max}, got {n}")]
    TooLarge { n: usize, max: usize, strategy: Strategy },
    #[error(transparent)]
    Pattern(#[from] DetectError),
    #[error("theorem {theorem} does not apply to pattern {pattern}")]
    Mismatch { theorem: Theorem, pattern: ForbiddenPattern },
    #[error("pattern {0} has no edges, so no graph on n vertices avoids it")]
    EdgelessPattern(ForbiddenPattern),
    #[error("witness failed re-verification")]
    WitnessRejected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Every edge subset is visited.
    Exhaustive,
    /// Depth-first over edge decisions, cutting subtrees that already contain
    /// the pattern or cannot beat the best edge count found.
    OrderlyPruned,
}

impl Strategy {
    pub fn max_n(self) -> usize {
        match self {
            Strategy::Exhaustive => EXHAUSTIVE_MAX_N,
            Strategy::OrderlyPruned => PRUNED_MAX_N,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Exhaustive => "exhaustive",
            Strategy::OrderlyPruned => "pruned",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `a` precedes `b`: at the lowest edge index where they differ, `a` has the edge.
#[inline]
fn precedes(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    diff != 0 && a & diff & diff.wrapping_neg() != 0
}

/// Best graph found by one or more tasks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TaskResult {
    /// `(edge count, edge mask)` of the best pattern-free graph.
    pub best: Option<(usize, u64)>,
    /// Leaves (complete edge assignments) visited.
    pub explored: u64,
}

impl TaskResult {
    fn offer(&mut self, count: usize, mask: u64) {
        let better = match self.best {
            None => true,
            Some((c, m)) => count > c || (count == c && precedes(mask, m)),
        };
        if better {
            self.best = Some((count, mask));
        }
    }

    /// Keeps the larger edge count, breaking ties by edge order.
    pub fn merge(mut self, other: TaskResult) -> TaskResult {
        if let Some((c, m)) = other.best {
            self.offer(c, m);
        }
        self.explored += other.explored;
        self
    }
}

/// A prepared search for `ex(n, pattern)`.
#[derive(Debug, Clone)]
pub struct SearchPlan {
    n: usize,
    pattern: ForbiddenPattern,
    strategy: Strategy,
    pairs: Vec<(usize, usize)>,
    split: usize,
}

impl SearchPlan {
    pub fn new(n: usize, pattern: ForbiddenPattern, strategy: Strategy) -> Result<Self, SearchError> {
        pattern.validate()?;
        if n > strategy.max_n() {
            return Err(SearchError::TooLarge { n, max: strategy.max_n(), strategy });
        }
        if pattern.order() <= n && pattern.to_graph().edge_count() == 0 {
            return Err(SearchError::EdgelessPattern(pattern));
        }
        let pairs: Vec<_> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        let split = SPLIT_DEPTH.min(pairs.len());
        Ok(SearchPlan { n, pattern, strategy, pairs, split })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pattern(&self) -> &ForbiddenPattern {
        &self.pattern
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    /// The pattern has more vertices than the host, so every graph is pattern-free.
    pub fn is_trivial(&self) -> bool {
        self.pattern.order() > self.n
    }

    /// Number of independent tasks; zero when the answer is trivial.
    pub fn task_count(&self) -> usize {
        if self.is_trivial() {
            0
        } else {
            1 << self.split
        }
    }

    fn graph_of(&self, mask: u64) -> Graph {
        let mut b = GraphBuilder::new(self.n).expect("n within cap");
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            let (u, v) = self.pairs[i];
            b.insert_unchecked(u, v);
            rest &= rest - 1;
        }
        b.build()
    }

    /// Runs the subtree whose first `split` edge decisions are the bits of `task`.
    pub fn run_task(&self, task: usize) -> TaskResult {
        assert!(task < self.task_count(), "task index out of range");
        let prefix = task as u64;
        match self.strategy {
            Strategy::Exhaustive => self.run_exhaustive(prefix),
            Strategy::OrderlyPruned => self.run_pruned(prefix),
        }
    }

    fn run_exhaustive(&self, prefix: u64) -> TaskResult {
        let free = self.pairs.len() - self.split;
        let mut out = TaskResult::default();
        // equal counts are still checked so that ties resolve by edge order
        for rest in (0..1u64 << free).rev() {
            out.explored += 1;
            let mask = prefix | rest << self.split;
            let count = mask.count_ones() as usize;
            if let Some((c, _)) = out.best {
                if count < c {
                    continue;
                }
            }
            if !self.pattern.is_contained_in(&self.graph_of(mask)) {
                out.offer(count, mask);
            }
        }
        out
    }

    fn run_pruned(&self, prefix: u64) -> TaskResult {
        let mut out = TaskResult::default();
        let mut b = GraphBuilder::new(self.n).expect("n within cap");
        // the prefix itself must be buildable without the pattern
        for i in 0..self.split {
            if prefix >> i & 1 == 1 {
                let (u, v) = self.pairs[i];
                if self.pattern.completes_with_edge(&b.build(), u, v) {
                    return out;
                }
                b.insert_unchecked(u, v);
            }
        }
        let mut search = Pruned { plan: self, builder: b, out: &mut out };
        let alive = search.alive_after(self.split, low_mask64(self.pairs.len()) & !low_mask64(self.split));
        search.descend(self.split, prefix, alive);
        out
    }

    /// Merges task results into the final report, re-verifying the witness.
    pub fn finish(&self, result: TaskResult) -> Result<ExtremalReport, SearchError> {
        if self.is_trivial() {
            let witness = named_graph(NamedGraph::Complete(self.n)).expect("n within cap");
            return Ok(ExtremalReport {
                n: self.n,
                pattern: self.pattern.clone(),
                strategy: self.strategy,
                ex_value: witness.edge_count(),
                witness,
                graphs_explored: 0,
                pattern_larger_than_n: true,
                bound_check: None,
            });
        }
        // patterns with an edge never occur in the empty graph, so some task found a graph
        let (count, mask) = result.best.unwrap_or((0, 0));
        let witness = self.graph_of(mask);
        if witness.edge_count() != count || self.pattern.is_contained_in(&witness) {
            return Err(SearchError::WitnessRejected);
        }
        Ok(ExtremalReport {
            n: self.n,
            pattern: self.pattern.clone(),
            strategy: self.strategy,
            ex_value: count,
            witness,
            graphs_explored: result.explored,
            pattern_larger_than_n: false,
            bound_check: None,
        })
    }
}

#[inline]
fn low_mask64(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1 << bits) - 1
    }
}

struct Pruned<'a> {
    plan: &'a SearchPlan,
    builder: GraphBuilder,
    out: &'a mut TaskResult,
}

impl Pruned<'_> {
    /// Undecided edges (from `from` on, restricted to `candidates`) that could
    /// still be added one at a time without creating the pattern. Adding edges
    /// only creates copies, so an edge that dies never comes back.
    fn alive_after(&self, from: usize, candidates: u64) -> u64 {
        let g = self.builder.build();
        let mut alive = 0;
        let mut rest = candidates & !low_mask64(from);
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (u, v) = self.plan.pairs[i];
            if !self.plan.pattern.completes_with_edge(&g, u, v) {
                alive |= 1 << i;
            }
        }
        alive
    }

    fn descend(&mut self, idx: usize, mask: u64, alive: u64) {
        let count = self.builder.edge_count();
        let alive = alive & !low_mask64(idx);
        if let Some((best, _)) = self.out.best {
            // later leaves in this task come after the current best in edge
            // order, so only a strictly larger count can replace it
            if count + alive.count_ones() as usize <= best {
                return;
            }
        }
        let Some(next) = (alive != 0).then(|| alive.trailing_zeros() as usize) else {
            self.out.explored += 1;
            self.out.offer(count, mask);
            return;
        };
        // include `next`
        let (u, v) = self.plan.pairs[next];
        self.builder.insert_unchecked(u, v);
        let still = self.alive_after(next + 1, alive);
        self.descend(next + 1, mask | 1 << next, still);
        self.builder.remove_unchecked(u, v);
        // exclude `next`
        self.descend(next + 1, mask, alive);
    }
}

/// Result of an exact search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport {
    pub n: usize,
    pub pattern: ForbiddenPattern,
    pub strategy: Strategy,
    pub ex_value: usize,
    pub witness: Graph,
    pub graphs_explored: u64,
    /// The pattern has more vertices than `n`: `ex = C(n,2)`, witnessed by `K_n`.
    pub pattern_larger_than_n: bool,
    pub bound_check: Option<BoundCheck>,
}

/// `ex(n, H)`, computed sequentially.
pub fn exact_ex(n: usize, pattern: ForbiddenPattern, strategy: Strategy) -> Result<ExtremalReport, SearchError> {
    let plan = SearchPlan::new(n, pattern, strategy)?;
    let merged = (0..plan.task_count())
        .map(|t| plan.run_task(t))
        .fold(TaskResult::default(), TaskResult::merge);
    plan.finish(merged)
}

/// Theorems whose bound can be checked against an exact value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    Mantel,
    Turan,
    Kst,
    ErdosC4,
}

impl Theorem {
    pub fn name(self) -> &'static str {
        match self {
            Theorem::Mantel => "mantel",
            Theorem::Turan => "turan",
            Theorem::Kst => "kst",
            Theorem::ErdosC4 => "c4",
        }
    }

    /// The canonical pattern for `suite` runs; `param` is `r` for Turán
    /// (forbidding `K_{r+1}`) and ignored otherwise.
    pub fn default_pattern(self, param: usize) -> ForbiddenPattern {
        match self {
            Theorem::Mantel => ForbiddenPattern::Clique(3),
            Theorem::Turan => ForbiddenPattern::Clique(param + 1),
            Theorem::Kst => ForbiddenPattern::CompleteBipartite(2, 2),
            Theorem::ErdosC4 => ForbiddenPattern::EvenCycle(4),
        }
    }

    /// The bound this theorem gives for `pattern` on `n` vertices.
    pub fn bound_for(self, n: usize, pattern: &ForbiddenPattern) -> Result<BoundValue, SearchError> {
        let mismatch = || SearchError::Mismatch { theorem: self, pattern: pattern.clone() };
        match (self, pattern) {
            (Theorem::Mantel, ForbiddenPattern::Clique(3)) => Ok(mantel_bound(n)),
            (Theorem::Turan, &ForbiddenPattern::Clique(k)) if k >= 2 => {
                Ok(turan_bound(n, k - 1).expect("r >= 1"))
            }
            (Theorem::Kst, &ForbiddenPattern::CompleteBipartite(r, t)) => kst_bound(n, r, t).map_err(|_| mismatch()),
            (Theorem::ErdosC4, ForbiddenPattern::EvenCycle(4)) if n >= 1 => {
                Ok(erdos_c4_bound(n).expect("n >= 1"))
            }
            _ => Err(mismatch()),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for Theorem {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s.to_ascii_lowercase().as_str() {
            "mantel" => Ok(Theorem::Mantel),
            "turan" => Ok(Theorem::Turan),
            "kst" => Ok(Theorem::Kst),
            "c4" | "erdos-c4" | "erdos" => Ok(Theorem::ErdosC4),
            _ => Err(()),
        }
    }
}

/// An exact value held against a theorem's bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub theorem: Theorem,
    pub bound: BoundValue,
    pub pass: bool,
}

impl BoundCheck {
    /// `bound - ex`, for display.
    pub fn slack(&self, ex_value: usize) -> f64 {
        self.bound.float_view() - ex_value as f64
    }
}

impl ExtremalReport {
    /// Attaches the exact comparison `ex_value <= bound`.
    pub fn check_against(mut self, theorem: Theorem) -> Result<Self, SearchError> {
        let bound = theorem.bound_for(self.n, &self.pattern)?;
        let pass = check_bound(self.ex_value as u128, &bound);
        self.bound_check = Some(BoundCheck { theorem, bound, pass });
        Ok(self)
    }
}

/// Computes `ex(n, pattern)` and checks it against `theorem`.
pub fn verify_theorem(
    n: usize,
    pattern: ForbiddenPattern,
    theorem: Theorem,
    strategy: Strategy,
) -> Result<ExtremalReport, SearchError> {
    theorem.bound_for(n, &pattern)?;
    exact_ex(n, pattern, strategy)?.check_against(theorem)
}
