//! Replace arbitrary thresholds by thresholds 1 and 2 on a bipartite graph
//! without changing the optimum.

use tsslab::gadgets::{map_back_seed, reduce_thresholds_to_two};
use tsslab::solvers::optimal_target_set;
use tsslab::{Graph, Instance};

fn main() -> tsslab::Result<()> {
    let inst = Instance::new(Graph::complete(4), vec![3, 2, 1, 3])?;
    let opt = optimal_target_set(&inst, 4);
    println!("K4, thresholds 3 2 1 3: optimum {}", opt.value);

    let r = reduce_thresholds_to_two(&inst);
    let big = &r.instance;
    println!(
        "reduced: {} vertices, {} edges, bipartite {}, max threshold {}",
        big.vertex_count(),
        big.graph().edge_count(),
        big.graph().is_bipartite(),
        big.max_threshold()
    );
    let res = optimal_target_set(big, opt.value);
    let seed = res.seed.expect("optimum is preserved");
    let back = map_back_seed(&r, &seed)?;
    println!("reduced optimum {} -> original seed {:?}", res.value, back.vertices());
    Ok(())
}
