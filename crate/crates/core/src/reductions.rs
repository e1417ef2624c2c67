//! Instance compilers with parameter arithmetic, provenance and solution
//! back-mapping.
//!
//! * [`mcs_to_tss`]: monotone circuit → target set selection, with a
//!   one-to-one correspondence between assignment weight and target set size.
//! * [`clique_to_max_influence`]: clique → max closed `k`-influence with a
//!   padding stack that separates yes and no instances.
//! * [`is_to_influence_decision`]: independent set → `k`-influence at most `ℓ`.
//! * [`is_to_min_closed_influence`]: independent set → min closed
//!   `k`-influence with a fan set that blows up every non-independent seed.

use std::str::FromStr;

use crate::circuits::{min_weight_satisfying, Assignment, MonotoneCircuit, NodeKind};
use crate::error::{Error, Result};
use crate::gadgets::{InstanceBuilder, Provenance, Tag};
use crate::graph::{Graph, Instance, SeedSet};
use crate::propagation::{Mode, Propagator};
use crate::record::Record;
use crate::subsets::for_each_combination;

/// Which construction produced a [`ReducedInstance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    ThresholdReduction,
    CircuitToTss,
    CliqueToMaxInfluence,
    IndependentSetToDecision(Mode),
    IndependentSetToMinClosed,
}

impl Construction {
    pub fn name(self) -> &'static str {
        match self {
            Construction::ThresholdReduction => "thresholds",
            Construction::CircuitToTss => "mcs",
            Construction::CliqueToMaxInfluence => "clique",
            Construction::IndependentSetToDecision(Mode::Closed) => "is-closed",
            Construction::IndependentSetToDecision(Mode::Open) => "is-open",
            Construction::IndependentSetToMinClosed => "min-closed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Instance(Instance),
    Circuit(MonotoneCircuit),
    Graph { graph: Graph, k: usize },
}

/// A constructed instance with everything needed to interpret it.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedInstance {
    pub instance: Instance,
    pub provenance: Provenance,
    pub construction: Construction,
    pub source: Source,
    pub params: Option<GapParameters>,
    pub k_prime: Option<usize>,
    pub l_prime: Option<usize>,
}

impl ReducedInstance {
    /// Vertices carrying a given kind of tag, ascending.
    pub fn vertices_where(&self, pred: impl Fn(&Tag) -> bool) -> Vec<usize> {
        (0..self.instance.vertex_count())
            .filter(|&v| pred(&self.provenance.tags[v]))
            .collect()
    }

    pub fn params_record(&self) -> Record {
        let mut rec = Record::new();
        rec.push("reduction", self.construction.name())
            .push("vertices", self.instance.vertex_count())
            .push("edges", self.instance.graph().edge_count())
            .push("gadgets", self.provenance.gadgets.len());
        if let Some(k) = self.k_prime {
            rec.push("k_prime", k);
        }
        if let Some(l) = self.l_prime {
            rec.push("l_prime", l);
        }
        if let Some(p) = &self.params {
            rec.push("g_k", p.g_k).push("h", p.h);
            if let Some(x) = p.x {
                rec.push("x", x);
            }
        }
        rec
    }
}

// ---------------------------------------------------------------------------
// Gap parameters

/// The approximation-ratio function a gap reduction is tuned against.
pub trait GapFunction: Sync {
    fn eval(&self, t: u64) -> f64;
}

impl<F: Fn(u64) -> f64 + Sync> GapFunction for F {
    fn eval(&self, t: u64) -> f64 {
        self(t)
    }
}

/// CLI presets: `const:c` is `ρ(t) = c`, `linear:c` is `ρ(t) = c·t`,
/// `poly:c,d` is `ρ(t) = c·t^d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RhoPreset {
    Const(f64),
    Linear(f64),
    Poly(f64, f64),
}

impl GapFunction for RhoPreset {
    fn eval(&self, t: u64) -> f64 {
        let t = t as f64;
        match *self {
            RhoPreset::Const(c) => c,
            RhoPreset::Linear(c) => c * t,
            RhoPreset::Poly(c, d) => c * t.powf(d),
        }
    }
}

impl FromStr for RhoPreset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("bad rho preset '{s}' (const:c, linear:c, poly:c,d)"));
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        let nums = args
            .split(',')
            .map(|a| a.trim().parse::<f64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        if nums.iter().any(|x| !x.is_finite()) {
            return Err(bad());
        }
        match (kind, nums.as_slice()) {
            ("const", [c]) => Ok(RhoPreset::Const(*c)),
            ("linear", [c]) => Ok(RhoPreset::Linear(*c)),
            ("poly", [c, d]) => Ok(RhoPreset::Poly(*c, *d)),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapVariant {
    /// Clique → max closed influence.
    Clique,
    /// Independent set → min closed influence.
    MinClosed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GapParameters {
    pub variant: GapVariant,
    pub k: usize,
    /// The separating value `g(k)`.
    pub g_k: u64,
    pub h: u64,
    /// Smallest `x` with `x / ρ(x) >= g(k)`; clique variant with a `ρ` only.
    pub x: Option<u64>,
}

fn pairs(k: usize) -> u64 {
    let k = k as u64;
    k * k.saturating_sub(1) / 2
}

/// `k + C(k,2) + 4·C(k,2)²`: the influence ceiling of a clique-free source.
pub fn clique_gap_value(k: usize) -> u64 {
    let c = pairs(k);
    k as u64 + c + 4 * c * c
}

/// `k + (h+1)·C(k,2) + 4h·C(k,2)²`: what seeding a `k`-clique activates.
pub fn clique_padded_value(k: usize, h: u64) -> u64 {
    let c = pairs(k);
    k as u64 + (h + 1) * c + 4 * h * c * c
}

impl GapParameters {
    /// Clique variant with an explicit padding depth.
    pub fn clique_with_h(k: usize, h: u64) -> Result<Self> {
        if k < 4 {
            return Err(Error::Precondition(format!("clique reduction needs k >= 4, got {k}")));
        }
        if h < 1 {
            return Err(Error::Precondition("padding depth h must be at least 1".into()));
        }
        Ok(Self {
            variant: GapVariant::Clique,
            k,
            g_k: clique_gap_value(k),
            h,
            x: None,
        })
    }

    /// Min-closed variant with an explicit fan size.
    pub fn min_closed_with_h(k: usize, h: u64) -> Result<Self> {
        if h < 1 {
            return Err(Error::Precondition("fan size h must be at least 1".into()));
        }
        Ok(Self {
            variant: GapVariant::MinClosed,
            k,
            g_k: k as u64 + h + 1,
            h,
            x: None,
        })
    }

    pub fn to_record(&self) -> Record {
        let mut rec = Record::new()
            .with(
                "variant",
                match self.variant {
                    GapVariant::Clique => "clique",
                    GapVariant::MinClosed => "min-closed",
                },
            )
            .with("k", self.k)
            .with("g_k", self.g_k)
            .with("h", self.h);
        if let Some(x) = self.x {
            rec.push("x", x);
        }
        rec
    }
}

const RATIO_EPS: f64 = 1e-9;

fn checked_rho(rho: &dyn GapFunction, t: u64) -> Result<f64> {
    let r = rho.eval(t);
    if !r.is_finite() || r < 1.0 - RATIO_EPS {
        return Err(Error::Precondition(format!("rho({t}) = {r} is not >= 1")));
    }
    Ok(r)
}

/// Picks padding parameters for `k` against `rho`.
///
/// Clique: `g = k + C(k,2) + 4·C(k,2)²`, `x` the smallest integer with
/// `x/ρ(x) >= g`, and `h` the smallest integer with
/// `k + (h+1)·C(k,2) + 4h·C(k,2)² >= x`.
///
/// Min-closed: `h` the smallest integer `>= 1` with `k + h + 1 >= k·ρ(k)`,
/// and `g = k + h + 1`.
pub fn choose_gap_padding(k: usize, rho: &dyn GapFunction, variant: GapVariant) -> Result<GapParameters> {
    if k < 2 {
        return Err(Error::Precondition(format!("gap padding needs k >= 2, got {k}")));
    }
    match variant {
        GapVariant::Clique => {
            if k < 4 {
                return Err(Error::Precondition(format!(
                    "clique reduction needs k >= 4, got {k}"
                )));
            }
            let g = clique_gap_value(k);
            let x = smallest_x(g, rho)?;
            let c = pairs(k);
            let step = c + 4 * c * c;
            let need = x.saturating_sub(k as u64 + c);
            let h = need.div_ceil(step).max(1);
            debug_assert!(clique_padded_value(k, h) >= x);
            Ok(GapParameters {
                variant,
                k,
                g_k: g,
                h,
                x: Some(x),
            })
        }
        GapVariant::MinClosed => {
            let mut prev = 0.0f64;
            for t in 1..=k as u64 {
                let scaled = t as f64 * checked_rho(rho, t)?;
                if scaled + RATIO_EPS < prev {
                    return Err(Error::Precondition(format!(
                        "t*rho(t) decreases at t = {t}"
                    )));
                }
                prev = scaled;
            }
            let target = k as f64 * checked_rho(rho, k as u64)?;
            let base = k as f64 + 1.0;
            let mut h = ((target - base).ceil().max(1.0)) as u64;
            while (base + h as f64) + RATIO_EPS < target {
                h += 1;
            }
            while h > 1 && base + (h - 1) as f64 + RATIO_EPS >= target {
                h -= 1;
            }
            Ok(GapParameters {
                variant,
                k,
                g_k: k as u64 + h + 1,
                h,
                x: None,
            })
        }
    }
}

/// True when `x/ρ(x) >= g`.
pub fn ratio_reaches(x: u64, g: u64, rho: &dyn GapFunction) -> bool {
    x as f64 / rho.eval(x) + RATIO_EPS >= g as f64
}

/// Smallest `x >= g` with `x/ρ(x) >= g`. Since `ρ >= 1` nothing below `g`
/// qualifies. Gallops upward checking that the sampled ratios never
/// decrease, then bisects.
fn smallest_x(g: u64, rho: &dyn GapFunction) -> Result<u64> {
    let ratio = |t: u64| -> Result<f64> { Ok(t as f64 / checked_rho(rho, t)?) };
    let mut lo = g; // candidate whose predecessor is known to fail (or lo == g)
    let mut prev = ratio(lo)?;
    if prev + RATIO_EPS >= g as f64 {
        return Ok(lo);
    }
    let mut step = g.max(1);
    let hi = loop {
        let next = lo.checked_add(step).ok_or_else(|| {
            Error::Precondition(format!(
                "t/rho(t) never reaches g = {g}; rho must make t/rho(t) unbounded"
            ))
        })?;
        let r = ratio(next)?;
        if r + RATIO_EPS < prev {
            return Err(Error::Precondition(format!(
                "t/rho(t) decreases between t = {lo} and t = {next}"
            )));
        }
        if r + RATIO_EPS >= g as f64 {
            break next;
        }
        if step > u64::MAX / 4 || next > 1 << 52 {
            return Err(Error::Precondition(format!(
                "t/rho(t) never reaches g = {g}; rho must make t/rho(t) unbounded"
            )));
        }
        prev = r;
        lo = next;
        step *= 2;
    };
    // ratio(lo) < g <= ratio(hi)
    let (mut lo, mut hi) = (lo, hi);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ratio(mid)? + RATIO_EPS >= g as f64 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

// ---------------------------------------------------------------------------
// Circuit → target set selection

/// Compiles a monotone circuit into a TSS instance whose optimum equals the
/// circuit's minimum satisfying weight.
///
/// Layout: input vertices (id = input number), then the `n + 1` copies of
/// the gate nodes (copy-major), then directed edge gadgets: per copy every
/// wire, then per copy one gadget from its output vertex to every input.
pub fn mcs_to_tss(c: &MonotoneCircuit) -> ReducedInstance {
    let n = c.input_count();
    let copies = n + 1;
    let mut b = InstanceBuilder::new();
    for i in 0..n {
        b.add_vertex((n + 1) as u32, Tag::Input(i));
    }
    // vertex of node `v` in copy `copy`
    let mut slot = vec![vec![usize::MAX; copies]; c.node_count()];
    for i in 0..n {
        slot[c.input_node(i)].fill(i);
    }
    for copy in 0..copies {
        for (v, node) in c.nodes().iter().enumerate() {
            let thr = match node.kind {
                NodeKind::Input => continue,
                NodeKind::And => node.preds.len() as u32,
                NodeKind::Or => 1,
            };
            slot[v][copy] = b.add_vertex(thr, Tag::Gate { node: v, copy });
        }
    }
    for copy in 0..copies {
        for (from, to) in c.wires() {
            b.add_directed_edge_gadget(slot[from][copy], slot[to][copy])
                .expect("circuit wires join distinct nodes");
        }
    }
    // A gate-free circuit's output is an input; there is nothing to feed back.
    if c.input_number(c.output()).is_none() {
        for copy in 0..copies {
            for i in 0..n {
                b.add_directed_edge_gadget(slot[c.output()][copy], i)
                    .expect("output gate differs from inputs");
            }
        }
    }
    let (instance, provenance) = b.finish().expect("circuit construction is simple");
    ReducedInstance {
        instance,
        provenance,
        construction: Construction::CircuitToTss,
        source: Source::Circuit(c.clone()),
        params: None,
        k_prime: None,
        l_prime: None,
    }
}

/// Turns a target set of an [`mcs_to_tss`] instance into a satisfying
/// assignment of weight at most `|s|`.
///
/// Seeds on input vertices, or inside a wire gadget leaving an input, stand
/// for that input. If those inputs do not already satisfy the circuit the
/// assignment is completed with the lexicographically first superset of
/// weight at most `|s|`, and failing that with a minimum-weight assignment.
pub fn map_target_set_to_assignment(r: &ReducedInstance, s: &SeedSet) -> Result<Assignment> {
    let Source::Circuit(c) = &r.source else {
        return Err(Error::Precondition(
            "assignment back-mapping needs a circuit reduction".into(),
        ));
    };
    let mut p = Propagator::new(&r.instance);
    if p.run(s.vertices()).active != r.instance.vertex_count() {
        return Err(Error::NotTargetSet);
    }
    let n = c.input_count();
    if s.len() >= n {
        return Ok(Assignment::all(n));
    }

    let prov = &r.provenance;
    let mut base: Vec<usize> = Vec::new();
    for &v in s.vertices() {
        match prov.tag(v) {
            Tag::Input(i) => base.push(i),
            Tag::Gadget { id, .. } => {
                if let Tag::Input(i) = prov.tag(prov.gadget(id).tail) {
                    base.push(i);
                }
            }
            _ => {}
        }
    }
    base.sort_unstable();
    base.dedup();
    let base = Assignment::new(n, base)?;
    if c.evaluate(&base) {
        return Ok(base);
    }

    let rest: Vec<usize> = (0..n).filter(|i| !base.true_inputs().contains(i)).collect();
    for extra in 1..=s.len().saturating_sub(base.weight()) {
        let found = for_each_combination(rest.len(), extra, |combo| {
            let a = Assignment::new(
                n,
                base.true_inputs()
                    .iter()
                    .copied()
                    .chain(combo.iter().map(|&j| rest[j])),
            )
            .expect("inputs in range");
            if c.evaluate(&a) {
                std::ops::ControlFlow::Break(a)
            } else {
                std::ops::ControlFlow::Continue(())
            }
        });
        if let Some(a) = found {
            return Ok(a);
        }
    }
    let best = min_weight_satisfying(c, n)?;
    if best.weight() <= s.len() {
        Ok(best)
    } else {
        Err(Error::Precondition(format!(
            "no satisfying assignment of weight <= {} (minimum is {})",
            s.len(),
            best.weight()
        )))
    }
}

// ---------------------------------------------------------------------------
// Graph reductions built on the incidence graph

/// Adds the incidence graph of `g` with every edge vertex repeated `copies`
/// times: vertices `0..n` tagged [`Tag::GraphVertex`], then edge vertices
/// `n..n + copies·m`, edge-major, tagged [`Tag::GraphEdge`].
fn add_incidence(b: &mut InstanceBuilder, g: &Graph, vertex_thr: impl Fn(usize) -> u32, edge_thr: u32, copies: usize) {
    let n = g.vertex_count();
    for v in 0..n {
        b.add_vertex(vertex_thr(v), Tag::GraphVertex(v));
    }
    for (edge, &(u, v)) in g.edges().iter().enumerate() {
        for copy in 0..copies {
            let id = b.add_vertex(edge_thr, Tag::GraphEdge { edge, copy });
            b.add_edge(u, id);
            b.add_edge(v, id);
        }
    }
    debug_assert_eq!(b.vertex_count(), n + copies * g.edge_count());
}

/// Edge-vertex multiplicity used by the independent-set reductions:
/// `max(1, k - 1)`.
///
/// With a single edge vertex per edge a seed may contain both endpoints of
/// an edge together with its edge vertex and activate nothing else, so a
/// graph without an independent `k`-set can still admit a `k`-seed of
/// closed influence `k` (four vertices, one edge, `k = 4`). Likewise on a
/// sparse graph "everything" can be smaller than `k + h + 1`. With `k - 1`
/// copies a seed can never contain all copies of an edge together with its
/// endpoints, and touching an edge at all drags in at least `k - 1` copies.
/// For `k <= 2` this is the plain incidence graph.
pub fn edge_copies_for(k: usize) -> usize {
    k.saturating_sub(1).max(1)
}

/// Clique → max closed `k`-influence.
///
/// Incidence graph (vertex side threshold `deg(v)`, edge side 2) plus a
/// stack `Z` of `h` layers of `C(k,2)` vertices with threshold `C(k,2)`.
/// Every edge vertex has a directed edge gadget into every first-layer
/// vertex, and every layer vertex into every vertex of the next layer.
pub fn clique_to_max_influence(g: &Graph, k: usize, params: &GapParameters) -> Result<ReducedInstance> {
    if k < 4 {
        return Err(Error::Precondition(format!("clique reduction needs k >= 4, got {k}")));
    }
    if params.variant != GapVariant::Clique || params.k != k {
        return Err(Error::Precondition(
            "gap parameters were not chosen for this clique reduction".into(),
        ));
    }
    if params.h < 1 {
        return Err(Error::Precondition("padding depth h must be at least 1".into()));
    }
    let h = params.h as usize;
    let c = pairs(k) as usize;
    let n = g.vertex_count();
    let m = g.edge_count();

    let mut b = InstanceBuilder::new();
    // An isolated vertex keeps threshold 1; it is never incident to an edge
    // vertex anyway.
    add_incidence(&mut b, g, |v| g.degree(v).max(1) as u32, 2, 1);
    let layer_start = b.vertex_count();
    for layer in 0..h {
        for index in 0..c {
            b.add_vertex(c as u32, Tag::Layer { layer, index });
        }
    }
    let z = |layer: usize, index: usize| layer_start + layer * c + index;
    for e in 0..m {
        for j in 0..c {
            b.add_directed_edge_gadget(n + e, z(0, j))?;
        }
    }
    for layer in 0..h - 1 {
        for j in 0..c {
            for t in 0..c {
                b.add_directed_edge_gadget(z(layer, j), z(layer + 1, t))?;
            }
        }
    }
    let (instance, provenance) = b.finish()?;
    Ok(ReducedInstance {
        instance,
        provenance,
        construction: Construction::CliqueToMaxInfluence,
        source: Source::Graph { graph: g.clone(), k },
        params: Some(*params),
        k_prime: Some(k),
        l_prime: None,
    })
}

/// Independent set → `k`-influence at most `ℓ`: incidence graph (edge
/// vertices repeated [`edge_copies_for`]`(k)` times) with threshold 1 on the
/// vertex side and 2 on the edge side; `k' = k`, `ℓ' = k` for closed
/// influence and `0` for open.
pub fn is_to_influence_decision(g: &Graph, k: usize, mode: Mode) -> Result<ReducedInstance> {
    is_to_influence_decision_with(g, k, mode, edge_copies_for(k))
}

/// [`is_to_influence_decision`] with an explicit edge-vertex multiplicity;
/// `1` is the plain incidence graph.
pub fn is_to_influence_decision_with(g: &Graph, k: usize, mode: Mode, edge_copies: usize) -> Result<ReducedInstance> {
    check_k(g, k)?;
    if edge_copies < 1 {
        return Err(Error::Precondition("edge copies must be at least 1".into()));
    }
    let mut b = InstanceBuilder::new();
    add_incidence(&mut b, g, |_| 1, 2, edge_copies);
    let (instance, provenance) = b.finish()?;
    Ok(ReducedInstance {
        instance,
        provenance,
        construction: Construction::IndependentSetToDecision(mode),
        source: Source::Graph { graph: g.clone(), k },
        params: None,
        k_prime: Some(k),
        l_prime: Some(match mode {
            Mode::Closed => k,
            Mode::Open => 0,
        }),
    })
}

/// Independent set → min closed `k`-influence: the decision construction
/// plus a fan `F` of `h` threshold-1 vertices completely joined to the edge
/// side.
pub fn is_to_min_closed_influence(g: &Graph, k: usize, params: &GapParameters) -> Result<ReducedInstance> {
    is_to_min_closed_influence_with(g, k, params, edge_copies_for(k))
}

/// [`is_to_min_closed_influence`] with an explicit edge-vertex multiplicity.
pub fn is_to_min_closed_influence_with(
    g: &Graph,
    k: usize,
    params: &GapParameters,
    edge_copies: usize,
) -> Result<ReducedInstance> {
    check_k(g, k)?;
    if params.variant != GapVariant::MinClosed || params.k != k || params.h < 1 {
        return Err(Error::Precondition(
            "gap parameters were not chosen for this min-closed reduction".into(),
        ));
    }
    if edge_copies < 1 {
        return Err(Error::Precondition("edge copies must be at least 1".into()));
    }
    let n = g.vertex_count();
    let edge_vertices = edge_copies * g.edge_count();
    let mut b = InstanceBuilder::new();
    add_incidence(&mut b, g, |_| 1, 2, edge_copies);
    for i in 0..params.h as usize {
        let f = b.add_vertex(1, Tag::Fan(i));
        for e in n..n + edge_vertices {
            b.add_edge(e, f);
        }
    }
    let (instance, provenance) = b.finish()?;
    Ok(ReducedInstance {
        instance,
        provenance,
        construction: Construction::IndependentSetToMinClosed,
        source: Source::Graph { graph: g.clone(), k },
        params: Some(*params),
        k_prime: Some(k),
        l_prime: None,
    })
}

fn check_k(g: &Graph, k: usize) -> Result<()> {
    if k > g.vertex_count() {
        return Err(Error::Precondition(format!(
            "k = {k} exceeds the vertex count {}",
            g.vertex_count()
        )));
    }
    Ok(())
}
