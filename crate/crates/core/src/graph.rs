//! Graphs, threshold instances and seed sets.
//!
//! Vertices are dense `usize` indices `0..n`. Every text format in the crate
//! writes them 1-based; conversion happens only at the parse/write boundary.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{parse_err, Error, Result};

/// A simple undirected graph stored in compressed adjacency form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Canonical edge list: `u < v`, sorted lexicographically.
    edges: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    neighbors: Vec<usize>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range
    /// endpoints. Edge orientation in the input is irrelevant.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut canon: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({}, {}) has an endpoint outside 1..={n}",
                    u + 1,
                    v + 1
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {}", u + 1)));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                w[0].0 + 1,
                w[0].1 + 1
            )));
        }

        let mut degree = vec![0usize; n];
        for &(u, v) in &canon {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut neighbors = vec![0usize; 2 * canon.len()];
        for &(u, v) in &canon {
            neighbors[fill[u]] = v;
            fill[u] += 1;
            neighbors[fill[v]] = u;
            fill[v] += 1;
        }
        // Lexicographic edge order puts every (u, x) with u < x before any
        // (x, v), so each neighbour list is already ascending.
        debug_assert!((0..n).all(|v| neighbors[offsets[v]..offsets[v + 1]]
            .windows(2)
            .all(|w| w[0] < w[1])));

        Ok(Self {
            n,
            edges: canon,
            offsets,
            neighbors,
        })
    }

    pub fn empty(n: usize) -> Self {
        Self::from_edges(n, std::iter::empty()).expect("edgeless graph is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Ascending neighbour list of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Connected components, each sorted ascending, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// A proper 2-colouring if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = Vec::new();
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.clear();
            queue.push(start);
            while let Some(v) = queue.pop() {
                for &w in self.neighbors(v) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("complete graph is simple")
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is simple")
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star is simple")
    }
}

/// A graph together with a positive integer threshold per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    graph: Graph,
    thresholds: Vec<u32>,
}

impl Instance {
    /// Thresholds above the degree are allowed; such a vertex can only become
    /// active by being seeded.
    pub fn new(graph: Graph, thresholds: Vec<u32>) -> Result<Self> {
        if thresholds.len() != graph.vertex_count() {
            return Err(Error::InvalidInstance(format!(
                "{} thresholds for {} vertices",
                thresholds.len(),
                graph.vertex_count()
            )));
        }
        if let Some(v) = thresholds.iter().position(|&t| t == 0) {
            return Err(Error::InvalidInstance(format!(
                "threshold below 1 at vertex {}",
                v + 1
            )));
        }
        Ok(Self { graph, thresholds })
    }

    /// Same threshold on every vertex.
    pub fn uniform(graph: Graph, threshold: u32) -> Result<Self> {
        let n = graph.vertex_count();
        Self::new(graph, vec![threshold; n])
    }

    /// `thr(v) = max(deg(v), 1)`.
    pub fn unanimity(graph: Graph) -> Self {
        let thr = (0..graph.vertex_count())
            .map(|v| graph.degree(v).max(1) as u32)
            .collect();
        Self::new(graph, thr).expect("unanimity thresholds are positive")
    }

    /// `thr(v) = max(ceil(deg(v) / 2), 1)`.
    pub fn majority(graph: Graph) -> Self {
        let thr = (0..graph.vertex_count())
            .map(|v| graph.degree(v).div_ceil(2).max(1) as u32)
            .collect();
        Self::new(graph, thr).expect("majority thresholds are positive")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn thresholds(&self) -> &[u32] {
        &self.thresholds
    }

    #[inline]
    pub fn threshold(&self, v: usize) -> u32 {
        self.thresholds[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// True when every non-isolated vertex has `thr(v) = deg(v)`.
    pub fn is_unanimity(&self) -> bool {
        (0..self.vertex_count()).all(|v| {
            let d = self.graph.degree(v);
            d == 0 || self.thresholds[v] as usize == d
        })
    }

    pub fn max_threshold(&self) -> u32 {
        self.thresholds.iter().copied().max().unwrap_or(0)
    }
}

/// A validated set of distinct vertices, stored ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SeedSet(Vec<usize>);

impl SeedSet {
    /// Sorts and deduplicates; rejects vertices `>= n`.
    pub fn new(n: usize, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        if let Some(&bad) = v.iter().find(|&&x| x >= n) {
            return Err(Error::VertexOutOfRange { vertex: bad + 1, n });
        }
        v.sort_unstable();
        v.dedup();
        Ok(Self(v))
    }

    /// Caller guarantees the slice is ascending, distinct and in range.
    pub(crate) fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Self(v)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Every vertex of an `n`-vertex instance.
    pub fn all(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// Parses a comma-separated list of 1-based ids (`"1,3"`); empty string is the empty set.
    pub fn parse_list(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::empty());
        }
        let mut out = Vec::new();
        for tok in text.split(',') {
            let tok = tok.trim();
            let id: usize = tok
                .parse()
                .map_err(|_| parse_err(1, format!("bad seed id '{tok}'")))?;
            if id == 0 || id > n {
                return Err(Error::VertexOutOfRange { vertex: id, n });
            }
            out.push(id - 1);
        }
        Self::new(n, out)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

/// Formats 0-based vertices as a 1-based comma list.
pub fn format_vertex_list(vertices: &[usize]) -> String {
    let mut s = String::new();
    for (i, v) in vertices.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{}", v + 1);
    }
    s
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Meaningful lines of a text file paired with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let toks: Vec<&str> = strip_comment(raw).split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

pub(crate) fn parse_num<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected {what}, found '{tok}'")))
}

/// Parses the line-oriented instance format:
///
/// ```text
/// tss <n> <m>
/// t <vertex> <threshold>     (n lines)
/// e <u> <v>                  (m lines)
/// ```
pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    if header.len() != 3 || header[0] != "tss" {
        return Err(parse_err(hline, "malformed header, expected 'tss <n> <m>'"));
    }
    let n: usize = parse_num(hline, header[1], "vertex count")?;
    let m: usize = parse_num(hline, header[2], "edge count")?;

    let mut thresholds: Vec<Option<u32>> = vec![None; n];
    let mut edges = Vec::with_capacity(m);
    let mut seen_edges = std::collections::HashSet::with_capacity(m);
    let mut last_line = hline;

    let vertex = |line: usize, tok: &str| -> Result<usize> {
        let id: usize = parse_num(line, tok, "vertex id")?;
        if id == 0 || id > n {
            return Err(parse_err(line, format!("vertex id {id} out of range 1..={n}")));
        }
        Ok(id - 1)
    };

    for (line, toks) in lines {
        last_line = line;
        match toks[0] {
            "t" => {
                if toks.len() != 3 {
                    return Err(parse_err(line, "expected 't <vertex> <threshold>'"));
                }
                let v = vertex(line, toks[1])?;
                let t: u32 = parse_num(line, toks[2], "threshold")?;
                if t < 1 {
                    return Err(parse_err(line, "threshold below 1"));
                }
                if thresholds[v].replace(t).is_some() {
                    return Err(parse_err(line, format!("duplicate threshold for vertex {}", v + 1)));
                }
            }
            "e" => {
                if toks.len() != 3 {
                    return Err(parse_err(line, "expected 'e <u> <v>'"));
                }
                let u = vertex(line, toks[1])?;
                let v = vertex(line, toks[2])?;
                if u == v {
                    return Err(parse_err(line, format!("self-loop at vertex {}", u + 1)));
                }
                let key = (u.min(v), u.max(v));
                if !seen_edges.insert(key) {
                    return Err(parse_err(
                        line,
                        format!("duplicate edge ({}, {})", key.0 + 1, key.1 + 1),
                    ));
                }
                edges.push(key);
            }
            other => return Err(parse_err(line, format!("unknown record '{other}'"))),
        }
    }

    if let Some(v) = thresholds.iter().position(Option::is_none) {
        return Err(parse_err(
            last_line,
            format!("missing threshold line for vertex {}", v + 1),
        ));
    }
    if edges.len() != m {
        return Err(parse_err(
            last_line,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    let graph = Graph::from_edges(n, edges).map_err(|e| parse_err(last_line, e.to_string()))?;
    Instance::new(graph, thresholds.into_iter().map(Option::unwrap).collect())
}

/// Canonical text form: vertices ascending, edges sorted with the smaller
/// endpoint first.
pub fn write_instance(inst: &Instance) -> String {
    let g = inst.graph();
    let mut s = String::with_capacity(16 * (g.vertex_count() + g.edge_count()) + 16);
    let _ = writeln!(s, "tss {} {}", g.vertex_count(), g.edge_count());
    for (v, t) in inst.thresholds().iter().enumerate() {
        let _ = writeln!(s, "t {} {}", v + 1, t);
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "e {} {}", u + 1, v + 1);
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdMode {
    /// `thr(v) = c`, clamped into `1..=max(deg(v), 1)`.
    Constant(u32),
    Majority,
    Unanimity,
    /// Uniform in `1..=max(deg(v), 1)`.
    UniformRandom,
}

impl std::str::FromStr for ThresholdMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "majority" => Ok(Self::Majority),
            "unanimity" => Ok(Self::Unanimity),
            "random" | "uniform" | "uniform-random" => Ok(Self::UniformRandom),
            _ => {
                let c = s
                    .strip_prefix("const:")
                    .and_then(|c| c.parse::<u32>().ok())
                    .filter(|&c| c >= 1)
                    .ok_or_else(|| {
                        Error::Precondition(format!(
                            "unknown threshold mode '{s}' (const:<c>, majority, unanimity, random)"
                        ))
                    })?;
                Ok(Self::Constant(c))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorConfig {
    pub n: usize,
    pub edge_probability: f64,
    pub threshold_mode: ThresholdMode,
    pub rng_seed: u64,
}

/// `G(n, p)` with thresholds assigned from the final degrees.
pub fn generate_random(cfg: &GeneratorConfig) -> Result<Instance> {
    if !(0.0..=1.0).contains(&cfg.edge_probability) {
        return Err(Error::Precondition(format!(
            "edge probability {} outside [0, 1]",
            cfg.edge_probability
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    let graph = random_graph(&mut rng, cfg.n, cfg.edge_probability);
    Ok(assign_thresholds(&mut rng, graph, cfg.threshold_mode))
}

/// Draws every pair independently with probability `p`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated graph is simple")
}

pub fn assign_thresholds<R: Rng + ?Sized>(rng: &mut R, graph: Graph, mode: ThresholdMode) -> Instance {
    let thr = (0..graph.vertex_count())
        .map(|v| {
            let d = graph.degree(v).max(1) as u32;
            match mode {
                ThresholdMode::Constant(c) => c.clamp(1, d),
                ThresholdMode::Majority => (graph.degree(v) as u32).div_ceil(2).max(1),
                ThresholdMode::Unanimity => d,
                ThresholdMode::UniformRandom => rng.gen_range(1..=d),
            }
        })
        .collect();
    Instance::new(graph, thr).expect("generated thresholds are positive")
}

/// What a vertex of an incidence graph stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IncidenceVertex {
    Vertex(usize),
    /// Index into the source graph's canonical edge list.
    Edge(usize),
}

/// Bipartite vertex/edge incidence graph. Vertex `v` keeps id `v`; the edge
/// with index `e` in `g.edges()` becomes vertex `n + e`.
pub fn incidence_graph(g: &Graph) -> (Graph, Vec<IncidenceVertex>) {
    let n = g.vertex_count();
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((u, n + e));
        edges.push((v, n + e));
    }
    let mapping = (0..n)
        .map(IncidenceVertex::Vertex)
        .chain((0..g.edge_count()).map(IncidenceVertex::Edge))
        .collect();
    let ig = Graph::from_edges(n + g.edge_count(), edges).expect("incidence graph is simple");
    (ig, mapping)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_instance_parses() {
        let inst = parse_instance("tss 2 1\nt 1 1\nt 2 1\ne 1 2\n").unwrap();
        assert_eq!(inst.vertex_count(), 2);
        assert_eq!(inst.graph().edges(), &[(0, 1)]);
        assert_eq!(inst.thresholds(), &[1, 1]);
    }

    #[test]
    fn writes_canonical_lines() {
        let inst = parse_instance("# a path\ntss 2 1\nt 2 1\nt 1 1\ne 2 1\n").unwrap();
        let text = write_instance(&inst);
        assert_eq!(text, "tss 2 1\nt 1 1\nt 2 1\ne 1 2\n");
        assert_eq!(text, write_instance(&inst));
        assert_eq!(parse_instance(&text).unwrap(), inst);
    }

    #[test]
    fn parse_errors_name_lines() {
        let cases = [
            ("tss 2 1\nt 1 0\nt 2 1\ne 1 2\n", 2, "threshold below 1"),
            ("tsx 2 1\n", 1, "malformed header"),
            ("tss 2 1\nt 1 1\nt 2 1\ne 1 3\n", 4, "out of range"),
            ("tss 2 1\nt 1 1\ne 1 2\n", 3, "missing threshold"),
            ("tss 3 2\nt 1 1\nt 2 1\nt 3 1\ne 1 2\ne 2 1\n", 6, "duplicate edge"),
            ("tss 2 0\nt 1 1\nt 2 1\ne 1 2\n", 4, "declares 0 edges"),
        ];
        for (text, line, needle) in cases {
            match parse_instance(text) {
                Err(Error::Parse { line: l, message }) => {
                    assert_eq!(l, line, "{text:?}: {message}");
                    assert!(message.contains(needle), "{message}");
                }
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = Graph::from_edges(5, [(3, 1), (0, 4), (1, 0), (2, 1)]).unwrap();
        for v in 0..5 {
            let nb = g.neighbors(v);
            assert!(nb.windows(2).all(|w| w[0] < w[1]));
            for &w in nb {
                assert!(g.neighbors(w).contains(&v));
            }
        }
        assert_eq!(g.degree(1), 3);
        assert_eq!(g.max_degree(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 4), (1, 2), (1, 3)]);
    }

    #[test]
    fn generator_edge_cases() {
        for mode in [
            ThresholdMode::Constant(3),
            ThresholdMode::Majority,
            ThresholdMode::Unanimity,
            ThresholdMode::UniformRandom,
        ] {
            let cfg = GeneratorConfig {
                n: 5,
                edge_probability: 0.0,
                threshold_mode: mode,
                rng_seed: 1,
            };
            let inst = generate_random(&cfg).unwrap();
            assert_eq!(inst.graph().edge_count(), 0);
            assert!(inst.thresholds().iter().all(|&t| t == 1));
        }
        let k4 = |mode| {
            generate_random(&GeneratorConfig {
                n: 4,
                edge_probability: 1.0,
                threshold_mode: mode,
                rng_seed: 9,
            })
            .unwrap()
        };
        let u = k4(ThresholdMode::Unanimity);
        assert_eq!(u.graph().edge_count(), 6);
        assert!(u.thresholds().iter().all(|&t| t == 3));
        assert!(k4(ThresholdMode::Majority).thresholds().iter().all(|&t| t == 2));
    }

    #[test]
    fn generator_is_reproducible() {
        let cfg = GeneratorConfig {
            n: 20,
            edge_probability: 0.3,
            threshold_mode: ThresholdMode::UniformRandom,
            rng_seed: 42,
        };
        assert_eq!(generate_random(&cfg).unwrap(), generate_random(&cfg).unwrap());
        let other = GeneratorConfig { rng_seed: 43, ..cfg };
        assert_ne!(generate_random(&cfg).unwrap(), generate_random(&other).unwrap());
    }

    #[test]
    fn incidence_of_triangle_and_c4() {
        let (ig, map) = incidence_graph(&Graph::complete(3));
        assert_eq!(ig.vertex_count(), 6);
        assert_eq!(ig.edge_count(), 6);
        assert!((0..6).all(|v| ig.degree(v) == 2));
        assert_eq!(map[3], IncidenceVertex::Edge(0));

        let (ig, _) = incidence_graph(&Graph::cycle(4));
        assert_eq!((ig.vertex_count(), ig.edge_count()), (8, 8));
        assert!((4..8).all(|e| ig.degree(e) == 2));
        assert!(ig.is_bipartite());

        let (ig, _) = incidence_graph(&Graph::empty(4));
        assert_eq!((ig.vertex_count(), ig.edge_count()), (4, 0));
    }

    #[test]
    fn seed_list_parsing() {
        assert_eq!(SeedSet::parse_list(4, "3,1,3").unwrap().vertices(), &[0, 2]);
        assert!(SeedSet::parse_list(4, "").unwrap().is_empty());
        assert!(matches!(
            SeedSet::parse_list(4, "5"),
            Err(Error::VertexOutOfRange { vertex: 5, n: 4 })
        ));
        assert_eq!(format_vertex_list(&[0, 2]), "1,3");
    }

    #[test]
    fn components_and_coloring() {
        let g = Graph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(g.is_bipartite());
        assert!(!Graph::complete(3).is_bipartite());
    }
}
