//! Compile a monotone circuit into a target set instance, solve it, and
//! read the satisfying assignment back off the seed.

use tsslab::reductions::{map_target_set_to_assignment, mcs_to_tss};
use tsslab::solvers::optimal_target_set;
use tsslab::{min_weight_satisfying, parse_circuit};

const CIRCUIT: &str = "\
circuit 6
input 1
input 2
input 3
gate 4 and 1 2
gate 5 or 4 3
gate 6 and 5 2
output 6
";

fn main() -> tsslab::Result<()> {
    let c = parse_circuit(CIRCUIT)?;
    let best = min_weight_satisfying(&c, c.input_count())?;
    println!("min satisfying weight: {} (inputs {:?})", best.weight(), best.true_inputs());

    let r = mcs_to_tss(&c);
    print!("{}", r.params_record());
    let res = optimal_target_set(&r.instance, c.input_count());
    let seed = res.seed.clone().expect("all inputs form a target set");
    println!("optimal target set size {}: {:?}", res.value, seed.vertices());
    let a = map_target_set_to_assignment(&r, &seed)?;
    println!("back-mapped assignment {:?}, satisfies: {}", a.true_inputs(), c.evaluate(&a));
    Ok(())
}
