//! Exact brute-force solvers, the greedy heuristic, and the polynomial
//! special cases under unanimity thresholds.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{format_vertex_list, Instance, SeedSet};
use crate::propagation::{Mode, Propagator};
use crate::record::Record;
use crate::subsets::{binomial, lex_rank, par_best, par_find_first, subsets_up_to};

/// Default bound on the number of seed sets an exhaustive search may visit.
pub const DEFAULT_SUBSET_LIMIT: u64 = 200_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Goal {
    Max,
    Min,
}

impl Goal {
    pub fn as_str(self) -> &'static str {
        match self {
            Goal::Max => "max",
            Goal::Min => "min",
        }
    }

    /// The cardinality convention of the textbook problem: maximisation
    /// over `|S| <= k`, minimisation over `|S| = k`.
    pub fn default_size_rule(self) -> SizeRule {
        match self {
            Goal::Max => SizeRule::AtMost,
            Goal::Min => SizeRule::Exactly,
        }
    }
}

impl FromStr for Goal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "max" => Ok(Goal::Max),
            "min" => Ok(Goal::Min),
            _ => Err(Error::Precondition(format!("unknown goal '{s}' (max|min)"))),
        }
    }
}

/// Which seed cardinalities a `k`-influence search ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeRule {
    AtMost,
    Exactly,
}

/// Which problem a [`SolveResult`] answers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Problem {
    TargetSet,
    GreedyTargetSet,
    UnanimityTargetSet,
    Influence { goal: Goal, mode: Mode, k: usize },
    UnanimityMinOpen { k: usize },
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Problem::TargetSet => f.write_str("tss"),
            Problem::GreedyTargetSet => f.write_str("tss-greedy"),
            Problem::UnanimityTargetSet => f.write_str("tss-unanimity-2approx"),
            Problem::Influence { goal, mode, .. } => {
                write!(f, "{}-{}-influence", goal.as_str(), mode.as_str())
            }
            Problem::UnanimityMinOpen { .. } => f.write_str("min-open-influence-unanimity"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub problem: Problem,
    /// `None` only when a capped search found nothing.
    pub seed: Option<SeedSet>,
    /// Target set size, or the influence value.
    pub value: usize,
    pub optimal: bool,
    /// Seed sets evaluated.
    pub explored: u64,
}

impl SolveResult {
    pub fn to_record(&self) -> Record {
        let mut rec = Record::new();
        rec.push("problem", self.problem);
        match self.problem {
            Problem::Influence { k, mode, .. } => {
                rec.push("k", k).push("mode", mode.as_str());
            }
            Problem::UnanimityMinOpen { k } => {
                rec.push("k", k).push("mode", Mode::Open.as_str());
            }
            _ => {}
        }
        match &self.seed {
            Some(s) => rec.push("seeds", format_vertex_list(s.vertices())),
            None => rec.push("seeds", "none"),
        };
        rec.push("value", self.value)
            .push("optimal", self.optimal)
            .push("explored", self.explored);
        rec
    }
}

/// Smallest target set with at most `size_cap` vertices, first in
/// cardinality-major lexicographic order.
pub fn optimal_target_set(inst: &Instance, size_cap: usize) -> SolveResult {
    optimal_target_set_over(inst, &(0..inst.vertex_count()).collect::<Vec<_>>(), size_cap)
}

/// [`optimal_target_set`] restricted to seeds drawn from `candidates`
/// (ascending).
pub fn optimal_target_set_over(inst: &Instance, candidates: &[usize], size_cap: usize) -> SolveResult {
    let n = inst.vertex_count();
    let m = candidates.len();
    let cap = size_cap.min(m);
    let mut explored = 0u64;
    for k in 0..=cap {
        let found = par_find_first(
            m,
            k,
            || (Propagator::new(inst), Vec::with_capacity(k)),
            |(p, buf), combo| is_target_set_with(p, buf, candidates, combo, n),
        );
        if let Some(combo) = found {
            explored += lex_rank(m, &combo) + 1;
            let seed = SeedSet::from_sorted(combo.iter().map(|&i| candidates[i]).collect());
            return SolveResult {
                problem: Problem::TargetSet,
                value: seed.len(),
                seed: Some(seed),
                optimal: true,
                explored,
            };
        }
        explored = explored.saturating_add(binomial(m as u64, k as u64));
    }
    SolveResult {
        problem: Problem::TargetSet,
        seed: None,
        value: 0,
        optimal: false,
        explored,
    }
}

fn is_target_set_with(
    p: &mut Propagator<'_>,
    buf: &mut Vec<usize>,
    candidates: &[usize],
    combo: &[usize],
    n: usize,
) -> bool {
    buf.clear();
    buf.extend(combo.iter().map(|&i| candidates[i]));
    p.run(buf).active == n
}

/// Repeatedly seeds the vertex with the largest marginal closed influence
/// (smallest id on ties) until everything is active.
pub fn greedy_target_set(inst: &Instance) -> SolveResult {
    let n = inst.vertex_count();
    let mut p = Propagator::new(inst);
    let mut seed: Vec<usize> = Vec::new();
    let mut explored = 0u64;
    let mut current = p.run(&seed).active;
    while current < n {
        let mut best: Option<(usize, usize)> = None;
        let mut trial = seed.clone();
        trial.push(0);
        for v in 0..n {
            if seed.contains(&v) {
                continue;
            }
            *trial.last_mut().expect("non-empty") = v;
            let active = p.run(&trial).active;
            explored += 1;
            if best.is_none_or(|(_, b)| active > b) {
                best = Some((v, active));
            }
        }
        let (v, active) = best.expect("an inactive vertex exists");
        seed.push(v);
        current = active;
    }
    seed.sort_unstable();
    SolveResult {
        problem: Problem::GreedyTargetSet,
        value: seed.len(),
        seed: Some(SeedSet::from_sorted(seed)),
        optimal: false,
        explored,
    }
}

/// Both endpoints of a greedy maximal matching (edges in lexicographic
/// order) plus every isolated vertex. Under unanimity thresholds target sets
/// are exactly vertex covers, so this is within a factor 2 of optimal.
pub fn unanimity_target_set_2approx(inst: &Instance) -> Result<SolveResult> {
    if !inst.is_unanimity() {
        return Err(Error::Precondition(
            "matching-based solver needs unanimity thresholds (thr = deg)".into(),
        ));
    }
    let g = inst.graph();
    let mut taken = vec![false; g.vertex_count()];
    for &(u, v) in g.edges() {
        if !taken[u] && !taken[v] {
            taken[u] = true;
            taken[v] = true;
        }
    }
    for v in 0..g.vertex_count() {
        if g.degree(v) == 0 {
            taken[v] = true;
        }
    }
    let seed: Vec<usize> = (0..g.vertex_count()).filter(|&v| taken[v]).collect();
    Ok(SolveResult {
        problem: Problem::UnanimityTargetSet,
        value: seed.len(),
        seed: Some(SeedSet::from_sorted(seed)),
        optimal: false,
        explored: 0,
    })
}

/// Exhaustive max/min `k`-influence over all vertices.
pub fn k_influence(inst: &Instance, k: usize, mode: Mode, goal: Goal, rule: SizeRule) -> Result<SolveResult> {
    let all: Vec<usize> = (0..inst.vertex_count()).collect();
    k_influence_over(inst, &all, k, mode, goal, rule, DEFAULT_SUBSET_LIMIT)
}

/// Exhaustive `k`-influence with seeds drawn from `candidates` (ascending).
/// Ties go to the first seed in cardinality-major lexicographic order.
/// Refuses searches that would visit more than `limit` seed sets.
pub fn k_influence_over(
    inst: &Instance,
    candidates: &[usize],
    k: usize,
    mode: Mode,
    goal: Goal,
    rule: SizeRule,
    limit: u64,
) -> Result<SolveResult> {
    let m = candidates.len();
    if k > m {
        return Err(Error::Precondition(format!(
            "k = {k} exceeds the {m} candidate vertices"
        )));
    }
    let sizes: Vec<usize> = match rule {
        SizeRule::AtMost => (0..=k).collect(),
        SizeRule::Exactly => vec![k],
    };
    let total = match rule {
        SizeRule::AtMost => subsets_up_to(m as u64, k as u64),
        SizeRule::Exactly => binomial(m as u64, k as u64),
    };
    if total > limit {
        return Err(Error::TooLarge(format!(
            "{total} seed sets to evaluate exceeds the limit of {limit}"
        )));
    }

    let better = |a: &usize, b: &usize| match goal {
        Goal::Max => a > b,
        Goal::Min => a < b,
    };
    let mut best: Option<(usize, Vec<usize>)> = None;
    for j in sizes {
        let found = par_best(
            m,
            j,
            || (Propagator::new(inst), Vec::with_capacity(j)),
            |(p, buf), combo, local: Option<&usize>| {
                buf.clear();
                buf.extend(combo.iter().map(|&i| candidates[i]));
                match goal {
                    Goal::Max => Some(mode.value(j, p.run(buf).active)),
                    Goal::Min => {
                        // Anything reaching the current best active count
                        // cannot strictly improve on it.
                        let limit = match local {
                            Some(&v) => match mode {
                                Mode::Closed => v.checked_sub(1)?,
                                Mode::Open => (v + j).checked_sub(1)?,
                            },
                            None => usize::MAX,
                        };
                        let run = p.run_bounded(buf, limit);
                        (!run.truncated).then(|| mode.value(j, run.active))
                    }
                }
            },
            better,
        );
        if let Some((v, combo)) = found {
            if best.as_ref().is_none_or(|(b, _)| better(&v, b)) {
                best = Some((v, combo.iter().map(|&i| candidates[i]).collect()));
            }
        }
    }
    let (value, seed) = best.expect("at least one cardinality is searched");
    Ok(SolveResult {
        problem: Problem::Influence { goal, mode, k },
        seed: Some(SeedSet::from_sorted(seed)),
        value,
        optimal: true,
        explored: total,
    })
}

/// Min Open `k`-Influence under unanimity thresholds in polynomial time.
///
/// With `thr = deg` nothing cascades: an unseeded vertex becomes active only
/// when all of its neighbours are seeded. The unseeded set `U` (`|U| = n-k`)
/// therefore costs one for every non-isolated vertex of `U` with no
/// neighbour in `U`. Taking `U` connected inside each component gives cost
/// zero unless some non-trivial component has to contribute exactly one
/// vertex, so the optimum is 0 or 1 and is found by a subset-sum over
/// component sizes. Each component's share of `U` is grown by peeling
/// smallest-id leaves off a BFS spanning tree rooted at its smallest vertex.
///
/// The closed value is the open value plus `k`.
pub fn min_open_influence_unanimity(inst: &Instance, k: usize) -> Result<SolveResult> {
    if !inst.is_unanimity() {
        return Err(Error::Precondition(
            "polynomial Min Open k-Influence needs unanimity thresholds (thr = deg)".into(),
        ));
    }
    let g = inst.graph();
    let n = g.vertex_count();
    if k > n {
        return Err(Error::Precondition(format!("k = {k} exceeds the vertex count {n}")));
    }
    let comps = g.components();
    let target = n - k;

    // dp[i][s]: least cost using the first i components with s unseeded.
    const INF: usize = usize::MAX;
    let mut dp = vec![vec![INF; target + 1]; comps.len() + 1];
    dp[0][0] = 0;
    for (i, comp) in comps.iter().enumerate() {
        let trivial = comp.len() == 1;
        for s in 0..=target {
            let base = dp[i][s];
            if base == INF {
                continue;
            }
            for take in 0..=comp.len().min(target - s) {
                let cost = base + usize::from(take == 1 && !trivial);
                let slot = &mut dp[i + 1][s + take];
                *slot = (*slot).min(cost);
            }
        }
    }
    let value = dp[comps.len()][target];
    debug_assert!(value <= 1);

    // Walk back, preferring the largest share for earlier components.
    let mut shares = vec![0usize; comps.len()];
    let mut s = target;
    let mut cost = value;
    for i in (0..comps.len()).rev() {
        let comp = &comps[i];
        let trivial = comp.len() == 1;
        let take = (0..=comp.len().min(s))
            .find(|&take| {
                let c = usize::from(take == 1 && !trivial);
                c <= cost && dp[i][s - take] == cost - c
            })
            .expect("dp table is consistent");
        shares[i] = take;
        cost -= usize::from(take == 1 && !trivial);
        s -= take;
    }

    let mut unseeded = vec![false; n];
    for (comp, &share) in comps.iter().zip(&shares) {
        for v in connected_subset(inst, comp, share) {
            unseeded[v] = true;
        }
    }
    let seed: Vec<usize> = (0..n).filter(|&v| !unseeded[v]).collect();
    debug_assert_eq!(seed.len(), k);
    Ok(SolveResult {
        problem: Problem::UnanimityMinOpen { k },
        seed: Some(SeedSet::from_sorted(seed)),
        value,
        optimal: true,
        explored: 1,
    })
}

/// A connected `size`-subset of a component: BFS spanning tree from the
/// smallest vertex, then smallest-id leaves removed until `size` remain.
fn connected_subset(inst: &Instance, comp: &[usize], size: usize) -> Vec<usize> {
    let g = inst.graph();
    let root = comp[0];
    let mut parent = vec![usize::MAX; g.vertex_count()];
    let mut children = vec![0usize; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                children[u] += 1;
                queue.push_back(w);
            }
        }
    }
    let mut alive: std::collections::BTreeSet<usize> = comp.iter().copied().collect();
    let mut leaves: std::collections::BTreeSet<usize> =
        comp.iter().copied().filter(|&v| children[v] == 0).collect();
    while alive.len() > size {
        // The root is a leaf only once it is the last vertex standing.
        let leaf = *leaves.iter().next().expect("a tree with 2+ vertices has a leaf");
        leaves.remove(&leaf);
        alive.remove(&leaf);
        let p = parent[leaf];
        if p != usize::MAX {
            children[p] -= 1;
            if children[p] == 0 {
                leaves.insert(p);
            }
        }
    }
    alive.into_iter().collect()
}

/// Runs `f` on a rayon pool with `threads` workers (0: rayon's default).
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    if threads == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::propagation::influence;

    fn triangle2() -> Instance {
        Instance::uniform(Graph::complete(3), 2).unwrap()
    }

    #[test]
    fn exact_target_sets() {
        let path = Instance::uniform(Graph::path(5), 1).unwrap();
        let r = optimal_target_set(&path, 5);
        assert_eq!((r.value, r.optimal), (1, true));
        assert_eq!(r.seed.unwrap().vertices(), &[0]);
        // the empty set, then [0]
        assert_eq!(r.explored, 2);

        assert_eq!(optimal_target_set(&triangle2(), 3).value, 2);
        assert_eq!(optimal_target_set(&Instance::unanimity(Graph::complete(4)), 4).value, 3);

        let capped = optimal_target_set(&Instance::unanimity(Graph::complete(4)), 2);
        assert!(!capped.optimal && capped.seed.is_none());
        assert_eq!(capped.explored, 1 + 4 + 6);
    }

    #[test]
    fn greedy_examples() {
        let star = Instance::uniform(Graph::star(5), 1).unwrap();
        let r = greedy_target_set(&star);
        assert_eq!(r.seed.unwrap().vertices(), &[0]);
        assert_eq!(greedy_target_set(&triangle2()).value, 2);
    }

    #[test]
    fn matching_solver() {
        let m = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        let r = unanimity_target_set_2approx(&Instance::unanimity(m)).unwrap();
        assert_eq!(r.value, 6);
        let r = unanimity_target_set_2approx(&Instance::unanimity(Graph::complete(3))).unwrap();
        assert_eq!(r.value, 2);
        let r = unanimity_target_set_2approx(&Instance::unanimity(Graph::empty(3))).unwrap();
        assert_eq!(r.value, 3);
        assert!(unanimity_target_set_2approx(&triangle2().clone()).is_ok());
        assert!(unanimity_target_set_2approx(&Instance::uniform(Graph::path(3), 1).unwrap()).is_err());
    }

    #[test]
    fn influence_examples() {
        let inst = Instance::uniform(Graph::path(4), 1).unwrap();
        let r = k_influence(&inst, 4, Mode::Closed, Goal::Max, SizeRule::AtMost).unwrap();
        assert_eq!(r.value, 4);
        // a single seed already activates everything
        assert_eq!(r.seed.unwrap().len(), 1);

        let c4 = Instance::uniform(Graph::cycle(4), 1).unwrap();
        let r = k_influence(&c4, 1, Mode::Open, Goal::Min, SizeRule::Exactly).unwrap();
        assert_eq!(r.value, 3);

        let r = k_influence(&triangle2(), 2, Mode::Open, Goal::Max, SizeRule::AtMost).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.seed.unwrap().vertices(), &[0, 1]);

        let big = Instance::uniform(Graph::empty(60), 1).unwrap();
        let all: Vec<usize> = (0..60).collect();
        assert!(matches!(
            k_influence_over(&big, &all, 10, Mode::Open, Goal::Min, SizeRule::Exactly, 1000),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn unanimity_min_open() {
        let tri = Instance::unanimity(Graph::complete(3));
        let r = min_open_influence_unanimity(&tri, 1).unwrap();
        assert_eq!(r.value, 0);
        let r = min_open_influence_unanimity(&tri, 2).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(min_open_influence_unanimity(&tri, 3).unwrap().value, 0);

        let two_edges = Instance::unanimity(Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap());
        let r = min_open_influence_unanimity(&two_edges, 2).unwrap();
        assert_eq!(r.value, 0);
        assert_eq!(r.seed.unwrap().vertices(), &[2, 3]);
        // one seed per edge or both in one edge: either way a partner dies
        let r = min_open_influence_unanimity(&two_edges, 1).unwrap();
        assert_eq!(r.value, 1);
        let s = r.seed.unwrap();
        assert_eq!(influence(&two_edges, &s, Mode::Open), 1);
    }

    #[test]
    fn records() {
        let r = k_influence(&triangle2(), 2, Mode::Open, Goal::Max, SizeRule::AtMost).unwrap();
        let rec = r.to_record();
        assert_eq!(rec.get("problem"), Some("max-open-influence"));
        assert_eq!(rec.get("seeds"), Some("1,2"));
        assert_eq!(rec.get("explored"), Some("7"));
    }
}
