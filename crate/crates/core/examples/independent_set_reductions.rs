use tsslab::propagation::Mode;
use tsslab::reductions::{is_to_influence_decision, is_to_min_closed_influence, GapParameters};
use tsslab::solvers::{k_influence, Goal, SizeRule};
use tsslab::Graph;

fn main() -> tsslab::Result<()> {
    let graphs = [("C5", Graph::cycle(5)), ("K4", Graph::complete(4)), ("star(3)", Graph::star(3))];
    for k in [2, 3] {
        for (name, g) in &graphs {
            for mode in [Mode::Closed, Mode::Open] {
                let r = is_to_influence_decision(g, k, mode)?;
                let l = r.l_prime.unwrap();
                let res = k_influence(&r.instance, k, mode, Goal::Min, SizeRule::Exactly)?;
                println!("{name}, k = {k}, {mode:?}: min influence {} vs l' = {l} -> independent set: {}", res.value, res.value <= l);
            }
            let params = GapParameters::min_closed_with_h(k, 3)?;
            let r = is_to_min_closed_influence(g, k, &params)?;
            let res = k_influence(&r.instance, k, Mode::Closed, Goal::Min, SizeRule::Exactly)?;
            println!("{name}, k = {k}, gap h = 3: min closed influence {} (k = {k}, g = {})", res.value, params.g_k);
        }
    }
    Ok(())
}
