//! Test-local oracles: bitmask brute force and a recount-from-scratch
//! propagation, sharing nothing with the library's engine or search code.
#![allow(dead_code)]

use rand::Rng;
use tsslab::circuits::{MonotoneCircuit, NodeKind};
use tsslab::graph::{Graph, Instance};

/// Fixpoint of the threshold process, recounting every vertex every round.
/// Returns the cumulative sets, the seed first.
pub fn rounds(inst: &Instance, seed: &[usize]) -> Vec<Vec<bool>> {
    let n = inst.vertex_count();
    let mut active = vec![false; n];
    for &s in seed {
        active[s] = true;
    }
    let mut all = vec![active.clone()];
    loop {
        let next: Vec<bool> = (0..n)
            .map(|v| {
                active[v]
                    || inst.graph().neighbors(v).iter().filter(|&&w| active[w]).count()
                        >= inst.threshold(v) as usize
            })
            .collect();
        if next == active {
            return all;
        }
        all.push(next.clone());
        active = next;
    }
}

pub fn closed(inst: &Instance, seed: &[usize]) -> usize {
    rounds(inst, seed).last().unwrap().iter().filter(|&&a| a).count()
}

pub fn is_target(inst: &Instance, seed: &[usize]) -> bool {
    closed(inst, seed) == inst.vertex_count()
}

pub fn bits(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask & (1 << i) != 0).collect()
}

pub fn min_target_set(inst: &Instance) -> usize {
    let n = inst.vertex_count();
    (0u32..1 << n)
        .filter(|&m| is_target(inst, &bits(m, n)))
        .map(|m| m.count_ones() as usize)
        .min()
        .expect("V is a target set")
}

pub fn all_optimal_target_sets(inst: &Instance) -> Vec<Vec<usize>> {
    let n = inst.vertex_count();
    let opt = min_target_set(inst);
    (0u32..1 << n)
        .filter(|&m| m.count_ones() as usize == opt && is_target(inst, &bits(m, n)))
        .map(|m| bits(m, n))
        .collect()
}

pub fn min_open_exact(inst: &Instance, k: usize) -> usize {
    let n = inst.vertex_count();
    (0u32..1 << n)
        .filter(|&m| m.count_ones() as usize == k)
        .map(|m| closed(inst, &bits(m, n)) - k)
        .min()
        .unwrap()
}

fn adjacent(g: &Graph, u: usize, v: usize) -> bool {
    g.edges().contains(&(u.min(v), u.max(v)))
}

pub fn has_independent_set(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    (0u32..1 << n).filter(|&m| m.count_ones() as usize == k).any(|m| {
        let s = bits(m, n);
        s.iter().all(|&u| s.iter().all(|&v| u == v || !adjacent(g, u, v)))
    })
}

pub fn find_clique(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|&m| m.count_ones() as usize == k)
        .map(|m| bits(m, n))
        .find(|s| s.iter().all(|&u| s.iter().all(|&v| u == v || adjacent(g, u, v))))
}

pub fn min_vertex_cover(g: &Graph) -> usize {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|&m| g.edges().iter().all(|&(u, v)| m & (1 << u) != 0 || m & (1 << v) != 0))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap()
}

/// Circuit value by repeated relaxation over node indices rather than the
/// circuit's own topological order.
pub fn circuit_value(c: &MonotoneCircuit, true_inputs: &[usize]) -> bool {
    let mut val: Vec<Option<bool>> = vec![None; c.node_count()];
    for i in 0..c.input_count() {
        val[c.input_node(i)] = Some(true_inputs.contains(&i));
    }
    while val[c.output()].is_none() {
        for (v, node) in c.nodes().iter().enumerate() {
            if val[v].is_some() {
                continue;
            }
            let ins: Option<Vec<bool>> = node.preds.iter().map(|&p| val[p]).collect();
            if let Some(ins) = ins {
                val[v] = Some(match node.kind {
                    NodeKind::And => ins.iter().all(|&b| b),
                    NodeKind::Or => ins.iter().any(|&b| b),
                    NodeKind::Input => unreachable!(),
                });
            }
        }
    }
    val[c.output()].unwrap()
}

pub fn min_satisfying_weight(c: &MonotoneCircuit) -> Option<usize> {
    let n = c.input_count();
    (0u32..1 << n)
        .filter(|&m| circuit_value(c, &bits(m, n)))
        .map(|m| m.count_ones() as usize)
        .min()
}

/// G(n, p) with an independent edge coin per pair.
pub fn gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_graph<R: Rng>(rng: &mut R, min_n: usize, max_n: usize) -> Graph {
    let n = rng.gen_range(min_n..=max_n);
    let p = rng.gen_range(0.1..0.9);
    gnp(rng, n, p)
}

/// Random thresholds in `1..=max(deg, 1) + 1`, so some vertices can only
/// be seeded.
pub fn random_instance<R: Rng>(rng: &mut R, min_n: usize, max_n: usize) -> Instance {
    let g = random_graph(rng, min_n, max_n);
    let thr = (0..g.vertex_count())
        .map(|v| {
            let top = g.degree(v).max(1) as u32 + u32::from(rng.gen_bool(0.1));
            rng.gen_range(1..=top)
        })
        .collect();
    Instance::new(g, thr).unwrap()
}
