//! Exhaustive solvers on a random majority instance, with threads pinned.

use tsslab::propagation::Mode;
use tsslab::solvers::{greedy_target_set, k_influence, optimal_target_set, with_threads, Goal, SizeRule};
use tsslab::{generate_random, GeneratorConfig, ThresholdMode};

fn main() -> tsslab::Result<()> {
    let inst = generate_random(&GeneratorConfig {
        n: 16,
        edge_probability: 0.25,
        threshold_mode: ThresholdMode::Majority,
        rng_seed: 3,
    })?;
    with_threads(2, || -> tsslab::Result<()> {
        let greedy = greedy_target_set(&inst);
        let exact = optimal_target_set(&inst, greedy.value);
        println!("greedy {} vs optimal {} ({} subsets explored)", greedy.value, exact.value, exact.explored);
        for k in 1..=3 {
            let max = k_influence(&inst, k, Mode::Closed, Goal::Max, SizeRule::AtMost)?;
            let min = k_influence(&inst, k, Mode::Open, Goal::Min, SizeRule::Exactly)?;
            println!("k = {k}: max closed {}, min open {}", max.value, min.value);
        }
        Ok(())
    })
}
