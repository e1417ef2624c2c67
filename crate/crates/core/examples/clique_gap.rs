//! A 4-clique separates the instance's max closed 4-influence from the
//! clique-free case by the chosen gap.

use tsslab::propagation::Mode;
use tsslab::reductions::{clique_to_max_influence, GapParameters};
use tsslab::solvers::{k_influence_over, Goal, SizeRule, DEFAULT_SUBSET_LIMIT};
use tsslab::{influence, Graph, SeedSet};

fn main() -> tsslab::Result<()> {
    let params = GapParameters::clique_with_h(4, 1)?;
    print!("{}", params.to_record());

    let yes = Graph::complete(4);
    let r = clique_to_max_influence(&yes, 4, &params)?;
    let seed = SeedSet::new(r.instance.vertex_count(), 0..4)?;
    println!("K4: seeding the clique reaches {}", influence(&r.instance, &seed, Mode::Closed));

    let no = Graph::cycle(5);
    let r = clique_to_max_influence(&no, 4, &params)?;
    let base: Vec<usize> = (0..no.vertex_count() + no.edge_count()).collect();
    let best = k_influence_over(&r.instance, &base, 4, Mode::Closed, Goal::Max, SizeRule::Exactly, DEFAULT_SUBSET_LIMIT)?;
    println!("C5: best 4-seed over vertex and edge nodes reaches {} (< {})", best.value, params.g_k);
    Ok(())
}
