//! Gadget constructions and the rewrite of an arbitrary instance into a
//! bipartite one whose thresholds are all at most two.
//!
//! A *directed edge gadget* from `u` to `v` is a 4-cycle `a-b-c-d` with `a`
//! adjacent to `u` and `c` adjacent to `v`, thresholds `1, 1, 2, 1`.
//! Activation flows from `u` to `v` through it, never back.
//!
//! An *activation gadget* for a vertex `v` with ordered neighbours
//! `u_1..u_d` and threshold `t` is a triangular grid of counting cells
//! `w[i][j]` (active iff at least `j` of `u_1..u_i` are), fed through helper
//! cells `w~[i][j]` of threshold 2, and wired only with directed edge
//! gadgets. The cell `w[d][t]` finally drives `v`, whose threshold drops
//! to 1.

use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Instance, SeedSet};
use crate::reductions::{Construction, ReducedInstance, Source};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetRole {
    A,
    B,
    C,
    D,
}

impl GadgetRole {
    pub const ALL: [GadgetRole; 4] = [GadgetRole::A, GadgetRole::B, GadgetRole::C, GadgetRole::D];

    fn as_char(self) -> char {
        match self {
            GadgetRole::A => 'a',
            GadgetRole::B => 'b',
            GadgetRole::C => 'c',
            GadgetRole::D => 'd',
        }
    }
}

/// Where a constructed vertex came from. Every index is 0-based here and
/// printed 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tag {
    /// Copy of a vertex of the source instance.
    Original(usize),
    /// Circuit input number.
    Input(usize),
    /// Gate node `node` of the circuit, in copy `copy`.
    Gate { node: usize, copy: usize },
    /// Vertex side of an incidence graph.
    GraphVertex(usize),
    /// Edge side of an incidence graph: copy `copy` of canonical edge `edge`.
    GraphEdge { edge: usize, copy: usize },
    /// Padding layer vertex `z[layer][index]`.
    Layer { layer: usize, index: usize },
    /// Vertex of the fan set joined to every edge vertex.
    Fan(usize),
    /// Counting cell `w[level][count]` of the activation gadget of `owner`.
    Cell { owner: usize, level: usize, count: usize },
    /// Helper cell `w~[level][count]` of the activation gadget of `owner`.
    TildeCell { owner: usize, level: usize, count: usize },
    /// Interior vertex of directed edge gadget `id`.
    Gadget { id: usize, role: GadgetRole },
}

/// Endpoints and first interior vertex of a directed edge gadget. Interior
/// vertices are `first..first + 4` in role order `a, b, c, d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DirectedEdge {
    pub tail: usize,
    pub head: usize,
    pub first: usize,
}

impl DirectedEdge {
    pub fn vertex(&self, role: GadgetRole) -> usize {
        self.first + role as usize
    }
}

/// Total vertex → tag map plus the gadget table.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Provenance {
    pub tags: Vec<Tag>,
    pub gadgets: Vec<DirectedEdge>,
}

impl Provenance {
    pub fn tag(&self, v: usize) -> Tag {
        self.tags[v]
    }

    pub fn gadget(&self, id: usize) -> &DirectedEdge {
        &self.gadgets[id]
    }

    /// Formats a tag as a whitespace-free token.
    pub fn display_tag(&self, v: usize) -> TagDisplay<'_> {
        TagDisplay { prov: self, v }
    }

    /// Sidecar text: one `<id> <tag>` line per vertex, ids 1-based.
    pub fn to_sidecar(&self) -> String {
        let mut s = String::new();
        for v in 0..self.tags.len() {
            let _ = writeln!(s, "{} {}", v + 1, self.display_tag(v));
        }
        s
    }
}

pub struct TagDisplay<'a> {
    prov: &'a Provenance,
    v: usize,
}

impl fmt::Display for TagDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.prov.tags[self.v] {
            Tag::Original(v) => write!(f, "orig:{}", v + 1),
            Tag::Input(i) => write!(f, "input:{}", i + 1),
            Tag::Gate { node, copy } => write!(f, "gate:{}:copy:{}", node + 1, copy + 1),
            Tag::GraphVertex(v) => write!(f, "vertex:{}", v + 1),
            Tag::GraphEdge { edge, copy } => write!(f, "edge:{}:{}", edge + 1, copy + 1),
            Tag::Layer { layer, index } => write!(f, "z:{}:{}", layer + 1, index + 1),
            Tag::Fan(i) => write!(f, "f:{}", i + 1),
            Tag::Cell { owner, level, count } => {
                write!(f, "w:{}:{}:{}", owner + 1, level + 1, count + 1)
            }
            Tag::TildeCell { owner, level, count } => {
                write!(f, "wt:{}:{}:{}", owner + 1, level + 1, count + 1)
            }
            Tag::Gadget { id, role } => {
                let g = &self.prov.gadgets[id];
                write!(
                    f,
                    "dg:{}:{}:{}:{}",
                    id + 1,
                    role.as_char(),
                    g.tail + 1,
                    g.head + 1
                )
            }
        }
    }
}

/// Incrementally assembles an instance whose every vertex carries a tag.
#[derive(Debug, Clone, Default)]
pub struct InstanceBuilder {
    thresholds: Vec<u32>,
    edges: Vec<(usize, usize)>,
    prov: Provenance,
}

impl InstanceBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, threshold: u32, tag: Tag) -> usize {
        self.thresholds.push(threshold);
        self.prov.tags.push(tag);
        self.thresholds.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    pub fn set_threshold(&mut self, v: usize, threshold: u32) {
        self.thresholds[v] = threshold;
    }

    pub fn threshold(&self, v: usize) -> u32 {
        self.thresholds[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.thresholds.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.prov
    }

    /// Adds a directed edge gadget from `u` to `v`; returns its id.
    pub fn add_directed_edge_gadget(&mut self, u: usize, v: usize) -> Result<usize> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::VertexOutOfRange { vertex: u.max(v) + 1, n });
        }
        if u == v {
            return Err(Error::Precondition(format!(
                "directed edge gadget needs distinct endpoints (got {} twice)",
                u + 1
            )));
        }
        let id = self.prov.gadgets.len();
        let first = n;
        for (role, thr) in GadgetRole::ALL.into_iter().zip([1, 1, 2, 1]) {
            self.add_vertex(thr, Tag::Gadget { id, role });
        }
        let [a, b, c, d] = [first, first + 1, first + 2, first + 3];
        self.edges
            .extend([(u, a), (a, b), (b, c), (c, d), (d, a), (c, v)]);
        self.prov.gadgets.push(DirectedEdge { tail: u, head: v, first });
        Ok(id)
    }

    /// Builds an activation gadget that activates `v` iff at least `t` of
    /// `inputs` are active, then sets `thr(v) = 1`. Requires `3 <= t <= d`.
    pub fn add_activation_gadget(&mut self, v: usize, inputs: &[usize], t: usize) -> Result<ActivationGadget> {
        let d = inputs.len();
        if t < 3 || t > d {
            return Err(Error::Precondition(format!(
                "activation gadget needs 3 <= t <= d, got t = {t}, d = {d}"
            )));
        }
        let mut cells: Vec<Vec<usize>> = Vec::with_capacity(d);
        let mut tilde: Vec<Vec<Option<usize>>> = Vec::with_capacity(d);
        let mut gadgets = Vec::new();

        // Level 1: w[1][1] <- u_1.
        let w11 = self.add_vertex(1, Tag::Cell { owner: v, level: 0, count: 0 });
        gadgets.push(self.add_directed_edge_gadget(inputs[0], w11)?);
        cells.push(vec![w11]);
        tilde.push(vec![None]);

        for i in 1..d {
            let ui = inputs[i];
            let mut row = Vec::with_capacity(i + 1);
            let mut trow = Vec::with_capacity(i + 1);

            // w[i][1] <- u_i, w[i-1][1]
            let wi1 = self.add_vertex(1, Tag::Cell { owner: v, level: i, count: 0 });
            gadgets.push(self.add_directed_edge_gadget(ui, wi1)?);
            gadgets.push(self.add_directed_edge_gadget(cells[i - 1][0], wi1)?);
            row.push(wi1);
            trow.push(None);

            for j in 1..=i {
                // w~[i][j] (thr 2) <- u_i, w[i-1][j-1]
                let wt = self.add_vertex(2, Tag::TildeCell { owner: v, level: i, count: j });
                gadgets.push(self.add_directed_edge_gadget(ui, wt)?);
                gadgets.push(self.add_directed_edge_gadget(cells[i - 1][j - 1], wt)?);
                // w[i][j] (thr 1) <- w~[i][j], and w[i-1][j] when j < i
                let w = self.add_vertex(1, Tag::Cell { owner: v, level: i, count: j });
                gadgets.push(self.add_directed_edge_gadget(wt, w)?);
                if j < i {
                    gadgets.push(self.add_directed_edge_gadget(cells[i - 1][j], w)?);
                }
                row.push(w);
                trow.push(Some(wt));
            }
            cells.push(row);
            tilde.push(trow);
        }

        let output_gadget = self.add_directed_edge_gadget(cells[d - 1][t - 1], v)?;
        gadgets.push(output_gadget);
        self.set_threshold(v, 1);
        Ok(ActivationGadget {
            owner: v,
            threshold: t,
            cells,
            tilde,
            gadgets,
            output_gadget,
        })
    }

    pub fn finish(self) -> Result<(Instance, Provenance)> {
        let graph = Graph::from_edges(self.thresholds.len(), self.edges)?;
        let inst = Instance::new(graph, self.thresholds)?;
        debug_assert_eq!(self.prov.tags.len(), inst.vertex_count());
        Ok((inst, self.prov))
    }
}

/// Ids of the pieces of one activation gadget (0-based levels and counts).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActivationGadget {
    pub owner: usize,
    pub threshold: usize,
    /// `cells[i][j]` is the cell counting `j + 1` actives among the first
    /// `i + 1` inputs.
    pub cells: Vec<Vec<usize>>,
    /// `tilde[i][j]` exists for `j >= 1`.
    pub tilde: Vec<Vec<Option<usize>>>,
    /// Every directed edge gadget of this activation gadget.
    pub gadgets: Vec<usize>,
    /// The gadget from `cells[d-1][t-1]` to the owner.
    pub output_gadget: usize,
}

impl ActivationGadget {
    pub fn cell_count(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn tilde_count(&self) -> usize {
        self.tilde.iter().flatten().filter(|c| c.is_some()).count()
    }
}

/// Rewrites `inst` into an instance with thresholds in `{1, 2}` on a
/// bipartite graph, preserving the target-set optimum.
///
/// Original vertices keep their ids. A vertex of threshold at most 2 gets a
/// directed edge gadget from each neighbour; a vertex of threshold `t` with
/// `3 <= t <= deg` gets an activation gadget over its neighbours in
/// ascending order. A vertex with `t > max(deg, 2)` gets no incoming
/// machinery and threshold 2.
pub fn reduce_thresholds_to_two(inst: &Instance) -> ReducedInstance {
    let g = inst.graph();
    let n = inst.vertex_count();
    let mut b = InstanceBuilder::new();
    for v in 0..n {
        b.add_vertex(inst.threshold(v), Tag::Original(v));
    }
    for v in 0..n {
        let t = inst.threshold(v) as usize;
        let nbrs = g.neighbors(v);
        if t <= 2 {
            for &u in nbrs {
                b.add_directed_edge_gadget(u, v)
                    .expect("neighbours are distinct existing vertices");
            }
        } else if t <= nbrs.len() {
            b.add_activation_gadget(v, nbrs, t)
                .expect("3 <= t <= deg was checked");
        } else {
            // Only a seed (or seeded gadget interiors, which map back to v)
            // can activate it.
            b.set_threshold(v, 2);
        }
    }
    let (instance, provenance) = b.finish().expect("gadget construction is simple");
    ReducedInstance {
        instance,
        provenance,
        construction: Construction::ThresholdReduction,
        source: Source::Instance(inst.clone()),
        params: None,
        k_prime: None,
        l_prime: None,
    }
}

/// The source vertex a constructed vertex stands for: originals map to
/// themselves, activation-gadget cells to their owner, and directed edge
/// gadget interiors to whatever their tail maps to.
pub fn project_to_source(prov: &Provenance, mut v: usize) -> Option<usize> {
    loop {
        match prov.tags[v] {
            Tag::Original(x) => return Some(x),
            Tag::Cell { owner, .. } | Tag::TildeCell { owner, .. } => v = owner,
            Tag::Gadget { id, .. } => v = prov.gadgets[id].tail,
            _ => return None,
        }
    }
}

/// Maps a target set of the reduced instance back to a target set of the
/// source instance of no larger size.
pub fn map_back_seed(r: &ReducedInstance, seed: &SeedSet) -> Result<SeedSet> {
    let Source::Instance(src) = &r.source else {
        return Err(Error::Precondition(
            "seed back-mapping needs a threshold-reduction instance".into(),
        ));
    };
    let mut out = Vec::with_capacity(seed.len());
    for &v in seed.vertices() {
        let x = project_to_source(&r.provenance, v).ok_or_else(|| {
            Error::Precondition(format!("vertex {} has no source projection", v + 1))
        })?;
        out.push(x);
    }
    SeedSet::new(src.vertex_count(), out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::propagation::{activate, Mode, Propagator};

    fn two_vertex_builder() -> InstanceBuilder {
        let mut b = InstanceBuilder::new();
        b.add_vertex(1, Tag::Original(0));
        b.add_vertex(1, Tag::Original(1));
        b
    }

    #[test]
    fn gadget_shape() {
        let mut b = two_vertex_builder();
        let id = b.add_directed_edge_gadget(0, 1).unwrap();
        assert_eq!((b.vertex_count(), b.edge_count()), (6, 6));
        let (inst, prov) = b.finish().unwrap();
        let g = prov.gadget(id);
        assert_eq!(inst.threshold(g.vertex(GadgetRole::C)), 2);
        assert_eq!(inst.threshold(g.vertex(GadgetRole::A)), 1);
        assert!(inst.graph().has_edge(0, g.vertex(GadgetRole::A)));
        assert!(inst.graph().has_edge(1, g.vertex(GadgetRole::C)));
        assert_eq!(prov.display_tag(g.vertex(GadgetRole::D)).to_string(), "dg:1:d:1:2");
    }

    #[test]
    fn gadget_rejects_loop() {
        let mut b = two_vertex_builder();
        assert!(matches!(b.add_directed_edge_gadget(1, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn activation_flows_one_way() {
        let mut b = two_vertex_builder();
        let id = b.add_directed_edge_gadget(0, 1).unwrap();
        let (inst, prov) = b.finish().unwrap();
        let g = *prov.gadget(id);
        let [a, bb, c, d] = GadgetRole::ALL.map(|r| g.vertex(r));

        let t = activate(&inst, &SeedSet::new(6, [0]).unwrap());
        assert_eq!(t.rounds, vec![vec![0], vec![a], vec![bb, d], vec![c], vec![1]]);

        let t = activate(&inst, &SeedSet::new(6, [1]).unwrap());
        assert_eq!(t.final_active, vec![1]);
    }

    #[test]
    fn stacked_gadgets_relay_in_six_rounds() {
        // u -> w -> v, thresholds 1
        let mut b = InstanceBuilder::new();
        for i in 0..3 {
            b.add_vertex(1, Tag::Original(i));
        }
        b.add_directed_edge_gadget(0, 1).unwrap();
        b.add_directed_edge_gadget(1, 2).unwrap();
        let (inst, _) = b.finish().unwrap();
        let t = activate(&inst, &SeedSet::new(inst.vertex_count(), [0]).unwrap());
        let reached = (0..t.rounds.len()).find(|&r| t.rounds[r].contains(&2)).unwrap();
        assert_eq!(reached, 8);
        assert_eq!(t.closed_influence(), 11);
        // Relay from w to v takes 4 rounds after w: u->w 4 + w->v 4.
        let t = activate(&inst, &SeedSet::new(inst.vertex_count(), [1]).unwrap());
        assert!(t.rounds[4].contains(&2));
        assert!(!t.final_active.contains(&0));
    }

    fn activation_fixture(d: usize, t: usize) -> (Instance, ActivationGadget, Vec<usize>, usize) {
        let mut b = InstanceBuilder::new();
        let inputs: Vec<usize> = (0..d).map(|i| b.add_vertex(1, Tag::Original(i))).collect();
        let v = b.add_vertex(t as u32, Tag::Original(d));
        let ag = b.add_activation_gadget(v, &inputs, t).unwrap();
        let (inst, _) = b.finish().unwrap();
        (inst, ag, inputs, v)
    }

    #[test]
    fn activation_gadget_cell_counts() {
        let (inst, ag, _, v) = activation_fixture(4, 3);
        assert_eq!(ag.cell_count(), 10);
        assert_eq!(ag.tilde_count(), 6);
        assert_eq!(inst.threshold(v), 1);
        assert!(inst.thresholds().iter().all(|&t| t <= 2));
    }

    #[test]
    fn activation_gadget_rejects_bad_threshold() {
        let mut b = InstanceBuilder::new();
        let inputs: Vec<usize> = (0..4).map(|i| b.add_vertex(1, Tag::Original(i))).collect();
        let v = b.add_vertex(2, Tag::Original(4));
        assert!(b.add_activation_gadget(v, &inputs, 2).is_err());
        assert!(b.add_activation_gadget(v, &inputs, 5).is_err());
    }

    #[test]
    fn every_cell_counts_its_prefix() {
        let d = 4;
        let (inst, ag, inputs, v) = activation_fixture(d, 3);
        let mut p = Propagator::new(&inst);
        for mask in 0u32..(1 << d) {
            let seed: Vec<usize> = (0..d).filter(|&i| mask >> i & 1 == 1).map(|i| inputs[i]).collect();
            p.run(&seed);
            for i in 0..d {
                let prefix = (0..=i).filter(|&x| mask >> x & 1 == 1).count();
                for j in 0..=i {
                    assert_eq!(
                        p.is_active(ag.cells[i][j]),
                        prefix > j,
                        "mask {mask:04b} cell w[{}][{}]",
                        i + 1,
                        j + 1
                    );
                }
            }
            assert_eq!(p.is_active(v), mask.count_ones() >= 3, "mask {mask:04b}");
        }
    }

    #[test]
    fn threshold_reduction_is_uniform_and_bipartite() {
        let inst = Instance::uniform(Graph::path(3), 1).unwrap();
        let r = reduce_thresholds_to_two(&inst);
        // 2 edges, each rewired in both directions: 4 gadgets.
        assert_eq!(r.provenance.gadgets.len(), 4);
        assert_eq!(r.instance.vertex_count(), 3 + 16);
        assert!(r.instance.graph().is_bipartite());
        for &(u, v) in inst.graph().edges() {
            assert!(!r.instance.graph().has_edge(u, v));
        }
    }

    #[test]
    fn projection_follows_gadget_tails() {
        let inst = Instance::uniform(Graph::complete(4), 3).unwrap();
        let r = reduce_thresholds_to_two(&inst);
        let prov = &r.provenance;
        for v in 0..r.instance.vertex_count() {
            let x = project_to_source(prov, v).unwrap();
            assert!(x < 4);
            if let Tag::Cell { owner, .. } = prov.tag(v) {
                assert_eq!(x, owner);
            }
        }
        let s = SeedSet::new(r.instance.vertex_count(), [0, 1, 40]).unwrap();
        let back = map_back_seed(&r, &s).unwrap();
        assert!(back.len() <= 3);
        let _ = Mode::Closed;
    }
}
