//! Under unanimity thresholds: exact target sets are vertex covers, the
//! matching heuristic is within 2, and min open influence is polynomial.

use tsslab::solvers::{min_open_influence_unanimity, optimal_target_set, unanimity_target_set_2approx};
use tsslab::{Graph, Instance};

fn main() -> tsslab::Result<()> {
    let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (5, 6)])?;
    let inst = Instance::unanimity(g);
    let exact = optimal_target_set(&inst, inst.vertex_count());
    let approx = unanimity_target_set_2approx(&inst)?;
    println!("exact target set {} {:?}", exact.value, exact.seed.unwrap().vertices());
    println!("matching target set {} {:?}", approx.value, approx.seed.unwrap().vertices());
    for k in 0..=inst.vertex_count() {
        let r = min_open_influence_unanimity(&inst, k)?;
        println!("k = {k}: min open influence {} with {:?}", r.value, r.seed.unwrap().vertices());
    }
    Ok(())
}
