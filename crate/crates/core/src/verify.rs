//! Property suites that check the solvers and reductions against
//! brute-force oracles on small random instances.
//!
//! Every suite is reproducible from [`SuiteConfig::seed`]. Failures carry
//! the offending instance in its text format.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuits::{enumerate_circuits, min_weight_satisfying, random_circuit, write_circuit};
use crate::error::{Error, Result};
use crate::gadgets::{map_back_seed, reduce_thresholds_to_two, GadgetRole, InstanceBuilder, Tag};
use crate::graph::{assign_thresholds, random_graph, write_instance, Graph, Instance, SeedSet, ThresholdMode};
use crate::propagation::{activate, Mode, Propagator};
use crate::reductions::{
    choose_gap_padding, clique_gap_value, clique_padded_value, clique_to_max_influence, is_to_influence_decision,
    is_to_min_closed_influence, map_target_set_to_assignment, mcs_to_tss, ratio_reaches, GapParameters, GapVariant,
    RhoPreset,
};
use crate::solvers::{
    k_influence, k_influence_over, min_open_influence_unanimity, optimal_target_set,
    unanimity_target_set_2approx, Goal, SizeRule, DEFAULT_SUBSET_LIMIT,
};
use crate::subsets::for_each_combination;

/// Brute-force reference implementations over bitmasks. Deliberately naive:
/// no shared code with the engine or the solvers.
pub mod oracle {
    use crate::graph::{Graph, Instance};

    /// Cumulative active sets, one per round, recounting every vertex from
    /// scratch each round. The last entry is the fixpoint.
    pub fn recount_rounds(inst: &Instance, seed: &[usize]) -> Vec<Vec<bool>> {
        let n = inst.vertex_count();
        let mut cur = vec![false; n];
        for &s in seed {
            cur[s] = true;
        }
        let mut out = vec![cur.clone()];
        loop {
            let mut next = cur.clone();
            for v in 0..n {
                let hits = inst.graph().neighbors(v).iter().filter(|&&w| cur[w]).count();
                if hits >= inst.threshold(v) as usize {
                    next[v] = true;
                }
            }
            if next == cur {
                return out;
            }
            out.push(next.clone());
            cur = next;
        }
    }

    pub fn closed_influence(inst: &Instance, seed: &[usize]) -> usize {
        recount_rounds(inst, seed).last().unwrap().iter().filter(|&&b| b).count()
    }

    fn members(mask: u64, n: usize) -> Vec<usize> {
        (0..n).filter(|&v| mask >> v & 1 == 1).collect()
    }

    /// Minimum target set size; `n <= 20`.
    pub fn min_target_set(inst: &Instance) -> usize {
        let n = inst.vertex_count();
        assert!(n <= 20);
        (0..1u64 << n)
            .filter(|&m| closed_influence(inst, &members(m, n)) == n)
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    /// All minimum target sets; `n <= 20`.
    pub fn optimal_target_sets(inst: &Instance) -> Vec<Vec<usize>> {
        let n = inst.vertex_count();
        let opt = min_target_set(inst);
        (0..1u64 << n)
            .filter(|m| m.count_ones() as usize == opt)
            .map(|m| members(m, n))
            .filter(|s| closed_influence(inst, s) == n)
            .collect()
    }

    fn masks(g: &Graph) -> Vec<u64> {
        (0..g.vertex_count())
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
            .collect()
    }

    pub fn min_vertex_cover(g: &Graph) -> usize {
        let n = g.vertex_count();
        (0..1u64 << n)
            .filter(|&m| g.edges().iter().all(|&(u, v)| m >> u & 1 == 1 || m >> v & 1 == 1))
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    pub fn has_independent_set(g: &Graph, k: usize) -> bool {
        let adj = masks(g);
        (0..1u64 << g.vertex_count())
            .filter(|m| m.count_ones() as usize == k)
            .any(|m| members(m, g.vertex_count()).iter().all(|&v| adj[v] & m == 0))
    }

    pub fn has_clique(g: &Graph, k: usize) -> bool {
        let adj = masks(g);
        (0..1u64 << g.vertex_count())
            .filter(|m| m.count_ones() as usize == k)
            .any(|m| members(m, g.vertex_count()).iter().all(|&v| (adj[v] | 1 << v) & m == m))
    }

    /// Min open influence over seeds of size exactly `k`.
    pub fn min_open_influence(inst: &Instance, k: usize) -> usize {
        let n = inst.vertex_count();
        (0..1u64 << n)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| closed_influence(inst, &members(m, n)) - k)
            .min()
            .unwrap()
    }
}

/// The named property suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Propagation,
    McsEquivalence,
    ThresholdsTwo,
    CliqueGap,
    IsDecision,
    MinClosedGap,
    UnanimityMin,
    VertexCover,
    GadgetDirection,
    Padding,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Propagation,
        Suite::McsEquivalence,
        Suite::ThresholdsTwo,
        Suite::CliqueGap,
        Suite::IsDecision,
        Suite::MinClosedGap,
        Suite::UnanimityMin,
        Suite::VertexCover,
        Suite::GadgetDirection,
        Suite::Padding,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Propagation => "propagation",
            Suite::McsEquivalence => "mcs-equivalence",
            Suite::ThresholdsTwo => "thresholds-two",
            Suite::CliqueGap => "clique-gap",
            Suite::IsDecision => "is-decision",
            Suite::MinClosedGap => "min-closed-gap",
            Suite::UnanimityMin => "unanimity-min",
            Suite::VertexCover => "vertex-cover",
            Suite::GadgetDirection => "gadget-direction",
            Suite::Padding => "padding",
        }
    }

    fn default_trials(self) -> usize {
        match self {
            Suite::Propagation => 1000,
            Suite::McsEquivalence => 50,
            Suite::ThresholdsTwo => 200,
            Suite::VertexCover => 300,
            Suite::CliqueGap => 100,
            Suite::IsDecision | Suite::MinClosedGap | Suite::UnanimityMin => 500,
            Suite::GadgetDirection | Suite::Padding => 1,
        }
    }

    fn default_n(self) -> usize {
        match self {
            Suite::Propagation => 30,
            Suite::ThresholdsTwo => 5,
            Suite::CliqueGap | Suite::IsDecision | Suite::MinClosedGap => 8,
            Suite::UnanimityMin => 10,
            Suite::VertexCover => 12,
            Suite::GadgetDirection => 5,
            Suite::McsEquivalence | Suite::Padding => 0,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
                Error::Precondition(format!("unknown suite '{s}' (one of {})", names.join(", ")))
            })
    }
}

/// Scale knobs; `None` means the suite's default.
#[derive(Debug, Clone, Default)]
pub struct SuiteConfig {
    pub trials: Option<usize>,
    /// Largest instance size (vertices, or chain length for gadgets).
    pub n: Option<usize>,
    pub max_inputs: Option<usize>,
    pub h: Option<u64>,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub message: String,
    /// Serialized reproduction case.
    pub case: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub property: &'static str,
    pub checked: u64,
    pub failure: Option<Failure>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub outcomes: Vec<PropertyOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(PropertyOutcome::passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite: {}", self.suite.name())?;
        for o in &self.outcomes {
            let status = if o.passed() { "pass" } else { "FAIL" };
            writeln!(f, "{status}: {} ({} checked)", o.property, o.checked)?;
            if let Some(fail) = &o.failure {
                writeln!(f, "  {}", fail.message)?;
                for line in fail.case.lines() {
                    writeln!(f, "  | {line}")?;
                }
            }
        }
        writeln!(f, "result: {}", if self.passed() { "pass" } else { "fail" })
    }
}

/// Collects checks for one property, keeping the first failure.
struct Check {
    property: &'static str,
    checked: u64,
    failure: Option<Failure>,
}

impl Check {
    fn new(property: &'static str) -> Self {
        Self {
            property,
            checked: 0,
            failure: None,
        }
    }

    fn assert(&mut self, ok: bool, message: impl FnOnce() -> String, case: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(Failure {
                message: message(),
                case: case(),
            });
        }
    }

    fn done(self) -> PropertyOutcome {
        PropertyOutcome {
            property: self.property,
            checked: self.checked,
            failure: self.failure,
        }
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> SuiteReport {
    let trials = cfg.trials.unwrap_or(suite.default_trials());
    let n = cfg.n.unwrap_or(suite.default_n());
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let outcomes = match suite {
        Suite::Propagation => propagation_suite(&mut rng, trials, n.max(1)),
        Suite::McsEquivalence => mcs_suite(&mut rng, trials, cfg.max_inputs.unwrap_or(3)),
        Suite::ThresholdsTwo => thresholds_two_suite(&mut rng, trials, n.clamp(1, 6), 100),
        Suite::CliqueGap => clique_suite(&mut rng, trials, n.clamp(4, 10), cfg.h.unwrap_or(1), 10_000),
        Suite::IsDecision => is_decision_suite(&mut rng, trials, n.clamp(1, 10)),
        Suite::MinClosedGap => min_closed_suite(&mut rng, trials, n.clamp(1, 10), cfg.h.unwrap_or(3)),
        Suite::UnanimityMin => unanimity_min_suite(&mut rng, trials, n.clamp(1, 14)),
        Suite::VertexCover => vertex_cover_suite(&mut rng, trials, n.clamp(1, 16)),
        Suite::GadgetDirection => gadget_suite(n.max(1)),
        Suite::Padding => padding_suite(),
    };
    SuiteReport { suite, outcomes }
}

/// Graph on `1..=max_n` vertices with a random edge density.
pub fn random_small_graph<R: Rng + ?Sized>(rng: &mut R, min_n: usize, max_n: usize) -> Graph {
    let n = rng.gen_range(min_n..=max_n);
    let p = rng.gen_range(0.15..0.85);
    random_graph(rng, n, p)
}

pub fn random_small_instance<R: Rng + ?Sized>(rng: &mut R, max_n: usize) -> Instance {
    let g = random_small_graph(rng, 1, max_n);
    let mode = match rng.gen_range(0..4) {
        0 => ThresholdMode::Majority,
        1 => ThresholdMode::Unanimity,
        2 => ThresholdMode::Constant(rng.gen_range(1..=3)),
        _ => ThresholdMode::UniformRandom,
    };
    assign_thresholds(rng, g, mode)
}

fn graph_case(g: &Graph) -> String {
    write_instance(&Instance::uniform(g.clone(), 1).expect("positive threshold"))
}

fn as_set(v: &[bool]) -> Vec<usize> {
    (0..v.len()).filter(|&i| v[i]).collect()
}

fn propagation_suite(rng: &mut ChaCha8Rng, trials: usize, max_n: usize) -> Vec<PropertyOutcome> {
    let mut chain = Check::new("rounds form an increasing chain");
    let mut fix = Check::new("fixpoint reached within n rounds");
    let mut agree = Check::new("engine agrees with recount oracle");
    for _ in 0..trials {
        let inst = random_small_instance(rng, max_n);
        let n = inst.vertex_count();
        let size = rng.gen_range(0..=n);
        let seed = SeedSet::new(n, (0..n).collect::<Vec<_>>().choose_multiple(rng, size).copied()).unwrap();
        let t = activate(&inst, &seed);
        let case = || format!("{}seed: {}", write_instance(&inst), crate::graph::format_vertex_list(seed.vertices()));
        let cum: Vec<Vec<usize>> = (0..t.rounds.len()).map(|i| t.cumulative(i)).collect();
        chain.assert(
            cum.windows(2).all(|w| w[0].len() < w[1].len() && w[0].iter().all(|v| w[1].binary_search(v).is_ok()))
                && t.rounds.iter().skip(1).all(|r| !r.is_empty()),
            || "cumulative rounds are not strictly increasing".into(),
            case,
        );
        fix.assert(
            t.round_count <= n && crate::propagation::activate_round(&inst, &t.final_active) == t.final_active,
            || format!("round_count {} for n = {n}", t.round_count),
            case,
        );
        let oracle = oracle::recount_rounds(&inst, seed.vertices());
        let ok = oracle.len() == cum.len() && oracle.iter().zip(&cum).all(|(o, c)| as_set(o) == *c);
        agree.assert(ok, || "round sets differ from the recount oracle".into(), case);
    }
    vec![chain.done(), fix.done(), agree.done()]
}

fn mcs_suite(rng: &mut ChaCha8Rng, trials: usize, max_inputs: usize) -> Vec<PropertyOutcome> {
    let mut circuits = enumerate_circuits(max_inputs, 3);
    for _ in 0..trials {
        let gates = rng.gen_range(1..=3);
        let inputs = rng.gen_range(2..=max_inputs.max(2));
        circuits.push(random_circuit(rng, inputs, gates).expect("valid parameters"));
    }
    let mut equal = Check::new("min target set size equals min satisfying weight");
    let mut back = Check::new("back-mapped assignment satisfies the circuit");
    for c in &circuits {
        let r = mcs_to_tss(c);
        let weight = min_weight_satisfying(c, max_inputs.max(3)).map(|a| a.weight());
        let res = optimal_target_set(&r.instance, c.input_count());
        let case = || write_circuit(c);
        equal.assert(
            matches!(weight, Ok(w) if res.optimal && res.value == w),
            || format!("tss optimum {:?} vs min weight {weight:?}", res.seed.as_ref().map(SeedSet::len)),
            case,
        );
        if let Some(s) = &res.seed {
            let a = map_target_set_to_assignment(&r, s);
            back.assert(
                matches!(&a, Ok(a) if c.evaluate(a) && a.weight() <= s.len()),
                || format!("assignment {a:?} for target set of size {}", s.len()),
                case,
            );
        }
    }
    vec![equal.done(), back.done()]
}

/// Removes vertices from a target set in `order` while it stays a target
/// set, yielding a minimal one.
pub fn peel_target_set(p: &mut Propagator<'_>, start: &[usize], order: &[usize]) -> Vec<usize> {
    let n = p.instance().vertex_count();
    let mut keep: Vec<usize> = start.to_vec();
    for &v in order {
        let Some(pos) = keep.iter().position(|&x| x == v) else {
            continue;
        };
        keep.remove(pos);
        if p.run(&keep).active != n {
            keep.insert(pos, v);
        }
    }
    keep.sort_unstable();
    keep
}

fn thresholds_two_suite(rng: &mut ChaCha8Rng, trials: usize, max_n: usize, peels: usize) -> Vec<PropertyOutcome> {
    let mut shape = Check::new("output bipartite with thresholds in {1, 2}");
    let mut opt = Check::new("optimum preserved");
    let mut dir1 = Check::new("optimal target sets of I are target sets of I'");
    let mut dir2 = Check::new("back-mapped minimal target sets of I' are target sets of I");
    for _ in 0..trials {
        let inst = random_small_instance(rng, max_n);
        let n = inst.vertex_count();
        let r = reduce_thresholds_to_two(&inst);
        let big = &r.instance;
        let case = || write_instance(&inst);
        shape.assert(
            big.graph().is_bipartite() && big.thresholds().iter().all(|&t| t == 1 || t == 2),
            || "output not bipartite or has a threshold outside {1, 2}".into(),
            case,
        );
        let optimal = oracle::optimal_target_sets(&inst);
        let o = optimal[0].len();
        let res = optimal_target_set(big, o);
        opt.assert(
            res.optimal && res.value == o,
            || format!("opt(I) = {o}, opt(I') = {:?}", res.seed.as_ref().map(SeedSet::len)),
            case,
        );
        let mut p = Propagator::new(big);
        for s in &optimal {
            dir1.assert(
                p.run(s).active == big.vertex_count(),
                || format!("seed {s:?} fails in I'"),
                case,
            );
        }
        let others: Vec<usize> = (n..big.vertex_count()).collect();
        for _ in 0..peels {
            let extra = rng.gen_range(0..=others.len().min(2 * n + 4));
            let mut start: Vec<usize> = (0..n).collect();
            start.extend(others.choose_multiple(rng, extra));
            let mut order = start.clone();
            order.shuffle(rng);
            let minimal = peel_target_set(&mut p, &start, &order);
            let s_prime = SeedSet::new(big.vertex_count(), minimal).unwrap();
            let back = map_back_seed(&r, &s_prime);
            dir2.assert(
                matches!(&back, Ok(s) if s.len() <= s_prime.len()
                    && oracle::closed_influence(&inst, s.vertices()) == n),
                || format!("minimal target set {:?} maps to {back:?}", s_prime.vertices()),
                case,
            );
        }
    }
    vec![shape.done(), opt.done(), dir1.done(), dir2.done()]
}

fn clique_suite(
    rng: &mut ChaCha8Rng,
    trials: usize,
    max_n: usize,
    h: u64,
    random_seeds: usize,
) -> Vec<PropertyOutcome> {
    const K: usize = 4;
    let params = GapParameters::clique_with_h(K, h).expect("k = 4, h >= 1");
    let high = clique_padded_value(K, h) as usize;
    let g_k = clique_gap_value(K) as usize;
    let mut yes = Check::new("a clique seed reaches the padded value");
    let mut no = Check::new("clique-free: every seed in V'' and E'' stays below g(k)");
    let mut spot = Check::new("clique-free: random seeds touching Z or gadgets stay below g(k)");
    for _ in 0..trials {
        let g = random_small_graph(rng, K, max_n);
        let r = clique_to_max_influence(&g, K, &params).expect("valid parameters");
        let inst = &r.instance;
        let total = inst.vertex_count();
        let case = || graph_case(&g);
        if let Some(clique) = first_clique(&g, K) {
            let got = oracle::closed_influence(inst, &clique);
            yes.assert(got >= high, || format!("clique {clique:?} reaches only {got}"), case);
            continue;
        }
        let base: Vec<usize> = (0..g.vertex_count() + g.edge_count()).collect();
        let best = k_influence_over(inst, &base, K, Mode::Closed, Goal::Max, SizeRule::Exactly, DEFAULT_SUBSET_LIMIT)
            .expect("search fits");
        no.assert(
            best.value < g_k,
            || format!("seed {:?} reaches {}", best.seed.as_ref().map(|s| s.vertices().to_vec()), best.value),
            case,
        );
        let outside: Vec<usize> = (base.len()..total).collect();
        let mut p = Propagator::new(inst);
        for _ in 0..random_seeds {
            let mut seed = vec![*outside.choose(rng).expect("Z is non-empty")];
            while seed.len() < K {
                let v = rng.gen_range(0..total);
                if !seed.contains(&v) {
                    seed.push(v);
                }
            }
            let got = p.run(&seed).active;
            spot.assert(got < g_k, || format!("seed {seed:?} reaches {got}"), case);
        }
    }
    vec![yes.done(), no.done(), spot.done()]
}

fn first_clique(g: &Graph, k: usize) -> Option<Vec<usize>> {
    for_each_combination(g.vertex_count(), k, |c| {
        let ok = c.iter().enumerate().all(|(i, &u)| c[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if ok {
            std::ops::ControlFlow::Break(c.to_vec())
        } else {
            std::ops::ControlFlow::Continue(())
        }
    })
}

fn is_decision_suite(rng: &mut ChaCha8Rng, trials: usize, max_n: usize) -> Vec<PropertyOutcome> {
    let mut closed = Check::new("closed: some k-seed has influence <= k iff an independent k-set exists");
    let mut open = Check::new("open: some k-seed has influence 0 iff an independent k-set exists");
    for _ in 0..trials {
        let g = random_small_graph(rng, 1, max_n);
        for k in 0..=g.vertex_count().min(4) {
            let expect = oracle::has_independent_set(&g, k);
            let case = || format!("k: {k}\n{}", graph_case(&g));
            for (mode, check) in [(Mode::Closed, &mut closed), (Mode::Open, &mut open)] {
                let r = is_to_influence_decision(&g, k, mode).expect("k <= n");
                let l = r.l_prime.expect("decision construction sets l'");
                let best = k_influence(&r.instance, k, mode, Goal::Min, SizeRule::Exactly).expect("search fits");
                check.assert(
                    (best.value <= l) == expect,
                    || format!("min influence {} vs l' = {l}, independent set exists: {expect}", best.value),
                    case,
                );
            }
        }
    }
    vec![closed.done(), open.done()]
}

fn min_closed_suite(rng: &mut ChaCha8Rng, trials: usize, max_n: usize, h: u64) -> Vec<PropertyOutcome> {
    let mut dich = Check::new("min closed k-influence is k or at least k + h + 1");
    for _ in 0..trials {
        let g = random_small_graph(rng, 1, max_n);
        for k in 0..=g.vertex_count().min(4) {
            let params = GapParameters::min_closed_with_h(k, h).expect("h >= 1");
            let r = is_to_min_closed_influence(&g, k, &params).expect("k <= n");
            let best = k_influence(&r.instance, k, Mode::Closed, Goal::Min, SizeRule::Exactly).expect("search fits");
            let ok = if oracle::has_independent_set(&g, k) {
                best.value == k
            } else {
                best.value as u64 >= params.g_k
            };
            dich.assert(
                ok,
                || format!("min closed influence {} with g = {}", best.value, params.g_k),
                || format!("k: {k}\nh: {h}\n{}", graph_case(&g)),
            );
        }
    }
    vec![dich.done()]
}

fn unanimity_min_suite(rng: &mut ChaCha8Rng, trials: usize, max_n: usize) -> Vec<PropertyOutcome> {
    let mut value = Check::new("polynomial value equals exhaustive optimum");
    let mut witness = Check::new("witness achieves the value");
    for _ in 0..trials {
        let inst = Instance::unanimity(random_small_graph(rng, 1, max_n));
        for k in 0..=inst.vertex_count() {
            let r = min_open_influence_unanimity(&inst, k).expect("unanimity instance");
            let opt = oracle::min_open_influence(&inst, k);
            let case = || format!("k: {k}\n{}", write_instance(&inst));
            value.assert(r.value == opt, || format!("value {} vs optimum {opt}", r.value), case);
            let seed = r.seed.as_ref().expect("always a witness");
            let got = oracle::closed_influence(&inst, seed.vertices()) - seed.len();
            witness.assert(
                seed.len() == k && got == r.value,
                || format!("witness {:?} has open influence {got}", seed.vertices()),
                case,
            );
        }
    }
    vec![value.done(), witness.done()]
}

fn vertex_cover_suite(rng: &mut ChaCha8Rng, trials: usize, max_n: usize) -> Vec<PropertyOutcome> {
    let mut exact = Check::new("unanimity optimum equals minimum vertex cover");
    let mut approx = Check::new("matching solver within twice the optimum");
    for _ in 0..trials {
        let g = random_small_graph(rng, 1, max_n);
        let inst = Instance::unanimity(g.clone());
        let isolated = (0..g.vertex_count()).filter(|&v| g.degree(v) == 0).count();
        // Isolated vertices have nothing to wait for and must be seeded.
        let vc = oracle::min_vertex_cover(&g) + isolated;
        let opt = optimal_target_set(&inst, inst.vertex_count());
        let case = || graph_case(&g);
        exact.assert(opt.value == vc, || format!("opt {} vs cover {vc}", opt.value), case);
        let r = unanimity_target_set_2approx(&inst).expect("unanimity instance");
        let feasible = oracle::closed_influence(&inst, r.seed.as_ref().unwrap().vertices()) == inst.vertex_count();
        approx.assert(
            feasible && r.value <= 2 * opt.value,
            || format!("matching value {} vs opt {}", r.value, opt.value),
            case,
        );
    }
    vec![exact.done(), approx.done()]
}

/// Chain `u_0 -> u_1 -> ... -> u_len` of directed edge gadgets.
pub fn gadget_chain(len: usize) -> (Instance, Vec<crate::gadgets::DirectedEdge>) {
    let mut b = InstanceBuilder::new();
    for i in 0..=len {
        b.add_vertex(1, Tag::Original(i));
    }
    for i in 0..len {
        b.add_directed_edge_gadget(i, i + 1).expect("distinct endpoints");
    }
    let (inst, prov) = b.finish().expect("simple construction");
    (inst, prov.gadgets)
}

fn gadget_suite(max_len: usize) -> Vec<PropertyOutcome> {
    let mut one_way = Check::new("head-side seeds never activate the a-vertex");
    let mut reach = Check::new("tail seeds reach every later head");
    let mut timing = Check::new("heads reached within 3 rounds per gadget");
    for len in 1..=max_len {
        let (inst, gadgets) = gadget_chain(len);
        let case = || write_instance(&inst);
        let mut p = Propagator::new(&inst);
        for (i, gd) in gadgets.iter().enumerate() {
            // the head alone, and the head with everything downstream of it
            for head_side in [vec![gd.head], (gd.head..=len).collect::<Vec<_>>()] {
                p.run(&head_side);
                one_way.assert(
                    !p.is_active(gd.vertex(GadgetRole::A)),
                    || format!("gadget {} a-vertex activated from {head_side:?}", i + 1),
                    case,
                );
            }
        }
        let t = activate(&inst, &SeedSet::new(inst.vertex_count(), [0]).unwrap());
        for i in 1..=len {
            let round = t.rounds.iter().position(|r| r.binary_search(&i).is_ok());
            reach.assert(round.is_some(), || format!("u_{i} never activates"), case);
            timing.assert(
                round.is_some_and(|r| r <= 3 * i),
                || format!("u_{i} activates in round {round:?}, bound {}", 3 * i),
                case,
            );
        }
    }
    vec![one_way.done(), reach.done(), timing.done()]
}

fn padding_suite() -> Vec<PropertyOutcome> {
    let mut ineq = Check::new("chosen parameters satisfy their inequalities");
    let mut minimal = Check::new("decrementing h or x breaks the inequality");
    let mut reject = Check::new("rho with bounded t/rho(t) is rejected for cliques");
    for preset in ["const:1", "const:2", "linear:1"] {
        let rho: RhoPreset = preset.parse().expect("known preset");
        for k in 4..=10usize {
            let case = || format!("rho: {preset}\nk: {k}");
            match choose_gap_padding(k, &rho, GapVariant::Clique) {
                Ok(p) => {
                    let x = p.x.expect("clique variant sets x");
                    ineq.assert(
                        p.g_k == clique_gap_value(k) && ratio_reaches(x, p.g_k, &rho) && clique_padded_value(k, p.h) >= x,
                        || format!("{p:?}"),
                        case,
                    );
                    minimal.assert(
                        !ratio_reaches(x - 1, p.g_k, &rho) && (p.h == 1 || clique_padded_value(k, p.h - 1) < x),
                        || format!("{p:?} not minimal"),
                        case,
                    );
                }
                Err(e) => reject.assert(
                    matches!(rho, RhoPreset::Linear(_)),
                    || format!("unexpected rejection: {e}"),
                    case,
                ),
            }
            match choose_gap_padding(k, &rho, GapVariant::MinClosed) {
                Ok(p) => {
                    let target = k as f64 * crate::reductions::GapFunction::eval(&rho, k as u64);
                    ineq.assert(
                        p.g_k == k as u64 + p.h + 1 && p.g_k as f64 >= target,
                        || format!("{p:?}"),
                        case,
                    );
                    minimal.assert(
                        p.h == 1 || ((p.g_k - 1) as f64) < target,
                        || format!("{p:?} not minimal"),
                        case,
                    );
                }
                Err(e) => ineq.assert(false, || format!("min-closed rejected: {e}"), case),
            }
        }
    }
    vec![ineq.done(), minimal.done(), reject.done()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_basics() {
        let tri = Instance::uniform(Graph::complete(3), 2).unwrap();
        assert_eq!(oracle::min_target_set(&tri), 2);
        assert_eq!(oracle::optimal_target_sets(&tri).len(), 3);
        assert_eq!(oracle::min_vertex_cover(&Graph::cycle(5)), 3);
        assert!(oracle::has_independent_set(&Graph::cycle(5), 2));
        assert!(!oracle::has_independent_set(&Graph::cycle(5), 3));
        assert!(oracle::has_clique(&Graph::complete(4), 4));
        assert!(!oracle::has_clique(&Graph::cycle(4), 3));
    }

    #[test]
    fn small_suites_pass() {
        let cfg = SuiteConfig {
            trials: Some(20),
            seed: 3,
            ..SuiteConfig::default()
        };
        for suite in [Suite::Propagation, Suite::UnanimityMin, Suite::VertexCover, Suite::Padding] {
            let report = run_suite(suite, &cfg);
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn unknown_suite() {
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!("thresholds-two".parse::<Suite>().unwrap(), Suite::ThresholdsTwo);
    }
}
