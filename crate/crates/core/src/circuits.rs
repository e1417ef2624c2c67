//! Monotone boolean circuits.
//!
//! A circuit is a DAG whose in-degree-0 nodes are inputs and whose other
//! nodes are `and`/`or` gates with at least two predecessors. Exactly one
//! node has no successors; it is the output. Inputs are numbered in node-id
//! order, and an [`Assignment`] lists the 0-based input numbers set to true.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{parse_err, Error, Result};
use crate::graph::{content_lines, parse_num};
use crate::subsets::par_find_first;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeKind {
    Input,
    And,
    Or,
}

impl NodeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            NodeKind::Input => "input",
            NodeKind::And => "and",
            NodeKind::Or => "or",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub kind: NodeKind,
    /// Predecessor node ids (ascending). Empty for inputs.
    pub preds: Vec<usize>,
}

impl Node {
    pub fn input() -> Self {
        Self {
            kind: NodeKind::Input,
            preds: Vec::new(),
        }
    }

    pub fn gate(kind: NodeKind, preds: impl IntoIterator<Item = usize>) -> Self {
        let mut preds: Vec<usize> = preds.into_iter().collect();
        preds.sort_unstable();
        Self { kind, preds }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneCircuit {
    nodes: Vec<Node>,
    output: usize,
    /// Node id of each input, in id order.
    inputs: Vec<usize>,
    /// `input_number[node]` for input nodes.
    input_number: Vec<Option<usize>>,
    topo: Vec<usize>,
    successors: Vec<Vec<usize>>,
}

/// Input numbers (0-based, ascending) assigned true.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Assignment {
    true_inputs: Vec<usize>,
}

impl Assignment {
    pub fn new(n: usize, true_inputs: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = true_inputs.into_iter().collect();
        if let Some(&bad) = v.iter().find(|&&i| i >= n) {
            return Err(Error::Precondition(format!(
                "input {} out of range 1..={n}",
                bad + 1
            )));
        }
        v.sort_unstable();
        v.dedup();
        Ok(Self { true_inputs: v })
    }

    pub fn all(n: usize) -> Self {
        Self {
            true_inputs: (0..n).collect(),
        }
    }

    pub fn true_inputs(&self) -> &[usize] {
        &self.true_inputs
    }

    pub fn weight(&self) -> usize {
        self.true_inputs.len()
    }
}

impl MonotoneCircuit {
    pub fn new(nodes: Vec<Node>, output: usize) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidCircuit(m));
        let count = nodes.len();
        if count == 0 {
            return bad("circuit has no nodes".into());
        }
        if output >= count {
            return bad(format!("output {} is not a node", output + 1));
        }
        let mut successors = vec![Vec::new(); count];
        for (id, node) in nodes.iter().enumerate() {
            match node.kind {
                NodeKind::Input if !node.preds.is_empty() => {
                    return bad(format!("input node {} has predecessors", id + 1))
                }
                NodeKind::And | NodeKind::Or if node.preds.len() < 2 => {
                    return bad(format!("gate {} has fewer than two inputs", id + 1))
                }
                _ => {}
            }
            for (i, &p) in node.preds.iter().enumerate() {
                if p >= count {
                    return bad(format!("node {} references missing node {}", id + 1, p + 1));
                }
                if i > 0 && node.preds[i - 1] >= p {
                    return bad(format!("node {} has duplicate or unsorted inputs", id + 1));
                }
                successors[p].push(id);
            }
        }

        // Kahn's algorithm; leftover nodes lie on a cycle.
        let mut indeg: Vec<usize> = nodes.iter().map(|n| n.preds.len()).collect();
        let mut topo: Vec<usize> = (0..count).filter(|&v| indeg[v] == 0).collect();
        let mut head = 0;
        while head < topo.len() {
            let v = topo[head];
            head += 1;
            for &s in &successors[v] {
                indeg[s] -= 1;
                if indeg[s] == 0 {
                    topo.push(s);
                }
            }
        }
        if topo.len() != count {
            return bad("cycle detected".into());
        }

        let sinks: Vec<usize> = (0..count).filter(|&v| successors[v].is_empty()).collect();
        if sinks.len() != 1 {
            return bad(format!(
                "expected exactly one node with no successors, found {}",
                sinks.len()
            ));
        }
        if sinks[0] != output {
            return bad(format!(
                "declared output {} is not the unique sink {}",
                output + 1,
                sinks[0] + 1
            ));
        }

        let inputs: Vec<usize> = (0..count)
            .filter(|&v| nodes[v].kind == NodeKind::Input)
            .collect();
        let mut input_number = vec![None; count];
        for (i, &v) in inputs.iter().enumerate() {
            input_number[v] = Some(i);
        }
        Ok(Self {
            nodes,
            output,
            inputs,
            input_number,
            topo,
            successors,
        })
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn output(&self) -> usize {
        self.output
    }

    pub fn input_count(&self) -> usize {
        self.inputs.len()
    }

    pub fn gate_count(&self) -> usize {
        self.nodes.len() - self.inputs.len()
    }

    /// Node id of input number `i`.
    pub fn input_node(&self, i: usize) -> usize {
        self.inputs[i]
    }

    pub fn input_number(&self, node: usize) -> Option<usize> {
        self.input_number[node]
    }

    pub fn successors(&self, node: usize) -> &[usize] {
        &self.successors[node]
    }

    /// Node ids in a topological order.
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    /// All wires `(from, to)`, grouped by target node in id order.
    pub fn wires(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.nodes
            .iter()
            .enumerate()
            .flat_map(|(to, n)| n.preds.iter().map(move |&from| (from, to)))
    }

    pub fn wire_count(&self) -> usize {
        self.nodes.iter().map(|n| n.preds.len()).sum()
    }

    /// Value of every node under the given input values.
    pub fn node_values(&self, input_values: &[bool]) -> Vec<bool> {
        let mut val = vec![false; self.nodes.len()];
        for &v in &self.topo {
            let node = &self.nodes[v];
            val[v] = match node.kind {
                NodeKind::Input => input_values[self.input_number[v].unwrap()],
                NodeKind::And => node.preds.iter().all(|&p| val[p]),
                NodeKind::Or => node.preds.iter().any(|&p| val[p]),
            };
        }
        val
    }

    pub fn evaluate_values(&self, input_values: &[bool]) -> bool {
        self.node_values(input_values)[self.output]
    }

    pub fn evaluate(&self, a: &Assignment) -> bool {
        let mut values = vec![false; self.input_count()];
        for &i in a.true_inputs() {
            values[i] = true;
        }
        self.evaluate_values(&values)
    }
}

pub fn evaluate(c: &MonotoneCircuit, a: &Assignment) -> bool {
    c.evaluate(a)
}

/// Default input-count bound for [`min_weight_satisfying`].
pub const DEFAULT_BRUTE_FORCE_INPUTS: usize = 20;

/// Minimum-weight satisfying assignment by exhaustive search, weight by
/// weight; ties go to the lexicographically smallest input set.
pub fn min_weight_satisfying(c: &MonotoneCircuit, max_inputs: usize) -> Result<Assignment> {
    let n = c.input_count();
    if n > max_inputs {
        return Err(Error::TooLarge(format!(
            "circuit has {n} inputs; brute-force bound is {max_inputs}"
        )));
    }
    for w in 0..=n {
        let found = par_find_first(
            n,
            w,
            || vec![false; n],
            |vals, combo| {
                vals.fill(false);
                for &i in combo {
                    vals[i] = true;
                }
                c.evaluate_values(vals)
            },
        );
        if let Some(true_inputs) = found {
            return Ok(Assignment { true_inputs });
        }
    }
    Err(Error::Unsatisfiable)
}

/// Parses the circuit text format:
///
/// ```text
/// circuit <num-nodes>
/// input <id>
/// gate <id> and|or <in1> <in2> [...]
/// output <id>
/// ```
pub fn parse_circuit(text: &str) -> Result<MonotoneCircuit> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    if header.len() != 2 || header[0] != "circuit" {
        return Err(parse_err(hline, "malformed header, expected 'circuit <num-nodes>'"));
    }
    let count: usize = parse_num(hline, header[1], "node count")?;
    let mut nodes: Vec<Option<Node>> = vec![None; count];
    let mut output = None;
    let mut last_line = hline;

    let id_of = |line: usize, tok: &str| -> Result<usize> {
        let id: usize = parse_num(line, tok, "node id")?;
        if id == 0 || id > count {
            return Err(parse_err(line, format!("dangling node reference {id}")));
        }
        Ok(id - 1)
    };

    for (line, toks) in lines {
        last_line = line;
        if output.is_some() {
            return Err(parse_err(line, "content after output line"));
        }
        match toks[0] {
            "input" => {
                if toks.len() != 2 {
                    return Err(parse_err(line, "expected 'input <id>'"));
                }
                let id = id_of(line, toks[1])?;
                if nodes[id].replace(Node::input()).is_some() {
                    return Err(parse_err(line, format!("node {} defined twice", id + 1)));
                }
            }
            "gate" => {
                if toks.len() < 3 {
                    return Err(parse_err(line, "expected 'gate <id> and|or <in>...'"));
                }
                let id = id_of(line, toks[1])?;
                let kind = match toks[2] {
                    "and" => NodeKind::And,
                    "or" => NodeKind::Or,
                    k => return Err(parse_err(line, format!("unknown gate kind '{k}'"))),
                };
                let preds = toks[3..]
                    .iter()
                    .map(|t| id_of(line, t))
                    .collect::<Result<Vec<_>>>()?;
                if preds.len() < 2 {
                    return Err(parse_err(line, "gate with fewer than two inputs"));
                }
                let node = Node::gate(kind, preds);
                if node.preds.windows(2).any(|w| w[0] == w[1]) {
                    return Err(parse_err(line, "gate lists the same input twice"));
                }
                if nodes[id].replace(node).is_some() {
                    return Err(parse_err(line, format!("node {} defined twice", id + 1)));
                }
            }
            "output" => {
                if toks.len() != 2 {
                    return Err(parse_err(line, "expected 'output <id>'"));
                }
                output = Some(id_of(line, toks[1])?);
            }
            other => return Err(parse_err(line, format!("unknown record '{other}'"))),
        }
    }
    let output = output.ok_or_else(|| parse_err(last_line, "missing output line"))?;
    let nodes = nodes
        .into_iter()
        .enumerate()
        .map(|(i, n)| n.ok_or_else(|| parse_err(last_line, format!("node {} never defined", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    MonotoneCircuit::new(nodes, output)
}

pub fn write_circuit(c: &MonotoneCircuit) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "circuit {}", c.node_count());
    for (id, node) in c.nodes().iter().enumerate() {
        match node.kind {
            NodeKind::Input => {
                let _ = writeln!(s, "input {}", id + 1);
            }
            kind => {
                let _ = write!(s, "gate {} {}", id + 1, kind.as_str());
                for p in &node.preds {
                    let _ = write!(s, " {}", p + 1);
                }
                s.push('\n');
            }
        }
    }
    let _ = writeln!(s, "output {}", c.output() + 1);
    s
}

/// Random valid circuit: `inputs` input nodes followed by `gates` gates in
/// topological order. Needs `inputs >= 2` whenever `gates >= 1`, and
/// `inputs == 1` when `gates == 0`.
pub fn random_circuit<R: Rng + ?Sized>(rng: &mut R, inputs: usize, gates: usize) -> Result<MonotoneCircuit> {
    if gates == 0 {
        if inputs != 1 {
            return Err(Error::Precondition(
                "a gate-free circuit must have exactly one input".into(),
            ));
        }
        return MonotoneCircuit::new(vec![Node::input()], 0);
    }
    if inputs < 2 {
        return Err(Error::Precondition("gates need at least two inputs".into()));
    }
    let mut preds: Vec<Vec<usize>> = Vec::with_capacity(gates);
    for g in 0..gates {
        let avail: Vec<usize> = (0..inputs + g).collect();
        let size = rng.gen_range(2..=avail.len().min(3));
        preds.push(avail.choose_multiple(rng, size).copied().collect());
    }
    // Every node except the final gate needs a successor.
    let mut used = vec![false; inputs + gates];
    for p in &preds {
        for &x in p {
            used[x] = true;
        }
    }
    for v in 0..inputs + gates - 1 {
        if !used[v] {
            let first_later = (v + 1).saturating_sub(inputs);
            let g = rng.gen_range(first_later..gates);
            if !preds[g].contains(&v) {
                preds[g].push(v);
            }
        }
    }
    let mut nodes: Vec<Node> = (0..inputs).map(|_| Node::input()).collect();
    for p in preds {
        let kind = if rng.gen_bool(0.5) { NodeKind::And } else { NodeKind::Or };
        nodes.push(Node::gate(kind, p));
    }
    MonotoneCircuit::new(nodes, inputs + gates - 1)
}

/// Canonical form under relabelling of inputs and gates.
fn canonical_key(c: &MonotoneCircuit) -> Vec<usize> {
    let n = c.input_count();
    let g = c.gate_count();
    let gates: Vec<usize> = (0..c.node_count()).filter(|&v| c.input_number(v).is_none()).collect();
    let mut best: Option<Vec<usize>> = None;
    let mut in_perm: Vec<usize> = (0..n).collect();
    loop {
        let mut gate_perm: Vec<usize> = (0..g).collect();
        loop {
            let mut label = vec![0usize; c.node_count()];
            for (i, &v) in c.inputs.iter().enumerate() {
                label[v] = in_perm[i];
            }
            for (j, &v) in gates.iter().enumerate() {
                label[v] = n + gate_perm[j];
            }
            let mut rows: Vec<Vec<usize>> = vec![Vec::new(); g];
            for &v in &gates {
                let node = &c.nodes[v];
                let mut row = vec![node.kind as usize];
                let mut p: Vec<usize> = node.preds.iter().map(|&x| label[x]).collect();
                p.sort_unstable();
                row.push(p.len());
                row.extend(p);
                rows[label[v] - n] = row;
            }
            let mut key = vec![n, g, label[c.output]];
            key.extend(rows.into_iter().flatten());
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
            if !next_permutation(&mut gate_perm) {
                break;
            }
        }
        if !next_permutation(&mut in_perm) {
            break;
        }
    }
    best.unwrap()
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every valid circuit with at most `max_inputs` inputs and `max_gates`
/// gates, one representative per isomorphism class.
pub fn enumerate_circuits(max_inputs: usize, max_gates: usize) -> Vec<MonotoneCircuit> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for n in 1..=max_inputs {
        for g in 0..=max_gates {
            let mut gates: Vec<Node> = Vec::with_capacity(g);
            extend_gates(n, g, &mut gates, &mut |gates| {
                let mut nodes: Vec<Node> = (0..n).map(|_| Node::input()).collect();
                nodes.extend(gates.iter().cloned());
                let output = nodes.len() - 1;
                if let Ok(c) = MonotoneCircuit::new(nodes, output) {
                    if seen.insert(canonical_key(&c)) {
                        out.push(c);
                    }
                }
            });
        }
    }
    out
}

fn extend_gates(n: usize, g: usize, gates: &mut Vec<Node>, emit: &mut impl FnMut(&[Node])) {
    if gates.len() == g {
        emit(gates);
        return;
    }
    let avail = n + gates.len();
    for mask in 0u32..(1u32 << avail) {
        if mask.count_ones() < 2 {
            continue;
        }
        let preds: Vec<usize> = (0..avail).filter(|&b| mask >> b & 1 == 1).collect();
        for kind in [NodeKind::And, NodeKind::Or] {
            gates.push(Node::gate(kind, preds.iter().copied()));
            extend_gates(n, g, gates, emit);
            gates.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    pub(crate) const SAMPLE_CIRCUIT: &str = "circuit 7\ninput 1\ninput 2\ninput 3\ninput 4\n\
        gate 5 or 1 2\ngate 6 or 3 4\ngate 7 and 5 6\noutput 7\n";

    fn assign(n: usize, ones: &[usize]) -> Assignment {
        Assignment::new(n, ones.iter().map(|i| i - 1)).unwrap()
    }

    #[test]
    fn parses_two_level_circuit() {
        let c = parse_circuit(SAMPLE_CIRCUIT).unwrap();
        assert_eq!((c.input_count(), c.gate_count(), c.wire_count()), (4, 3, 6));
        assert_eq!(c.output(), 6);
        assert_eq!(parse_circuit(&write_circuit(&c)).unwrap(), c);
    }

    #[test]
    fn evaluates_by_hand() {
        let c = parse_circuit(SAMPLE_CIRCUIT).unwrap();
        assert!(c.evaluate(&assign(4, &[1, 3])));
        assert!(!c.evaluate(&assign(4, &[1, 2])));
        assert!(c.evaluate(&Assignment::all(4)));
        assert!(!c.evaluate(&Assignment::default()));
    }

    #[test]
    fn min_weight_of_two_level_circuit() {
        let c = parse_circuit(SAMPLE_CIRCUIT).unwrap();
        let a = min_weight_satisfying(&c, DEFAULT_BRUTE_FORCE_INPUTS).unwrap();
        assert_eq!(a.true_inputs(), &[0, 2]);
        assert!(matches!(min_weight_satisfying(&c, 3), Err(Error::TooLarge(_))));
    }

    #[test]
    fn degenerate_single_input_circuit() {
        let c = parse_circuit("circuit 1\ninput 1\noutput 1\n").unwrap();
        assert_eq!(c.input_count(), 1);
        let a = min_weight_satisfying(&c, 20).unwrap();
        assert_eq!(a.weight(), 1);
    }

    #[test]
    fn rejects_invalid_circuits() {
        let cases = [
            ("circuit 3\ninput 1\ninput 2\ngate 3 or 1\noutput 3\n", "fewer than two"),
            ("circuit 3\ninput 1\ninput 2\ninput 3\noutput 3\n", "exactly one node"),
            ("circuit 3\ninput 1\ninput 2\ngate 3 and 1 4\noutput 3\n", "dangling"),
            (
                "circuit 4\ninput 1\ngate 2 or 1 3\ngate 3 or 1 2\ngate 4 and 2 3\noutput 4\n",
                "cycle",
            ),
            ("circuit 3\ninput 1\ninput 2\ngate 3 or 1 2\noutput 1\n", "not the unique sink"),
            ("circuit 2\ninput 1\ninput 2\n", "missing output"),
        ];
        for (text, needle) in cases {
            let err = parse_circuit(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{text:?} -> {err}");
        }
    }

    #[test]
    fn random_circuits_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(2..=5);
            let g = rng.gen_range(1..=5);
            let c = random_circuit(&mut rng, n, g).unwrap();
            assert_eq!((c.input_count(), c.gate_count()), (n, g));
        }
    }

    #[test]
    fn enumeration_dedups_isomorphic_circuits() {
        // One input, no gates; two inputs, one gate (and/or) - two classes.
        let small = enumerate_circuits(2, 1);
        assert_eq!(small.len(), 3);
        // or(x1, x2) and or(x2, x1) collapse; and(or(x1,x2), x3) has 3 input
        // relabellings which also collapse.
        let all = enumerate_circuits(3, 3);
        let keys: std::collections::HashSet<_> = all.iter().map(canonical_key).collect();
        assert_eq!(keys.len(), all.len());
        assert!(all.iter().all(|c| c.input_count() <= 3 && c.gate_count() <= 3));
    }
}
