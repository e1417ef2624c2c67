//! Round-by-round activation on a path with a stubborn endpoint.

use tsslab::{activate, parse_instance, SeedSet};

fn main() -> tsslab::Result<()> {
    // 1 - 2 - 3 - 4 - 5; vertex 5 needs two active neighbours but has one,
    // so it stays dark unless seeded.
    let inst = parse_instance("tss 5 4\nt 1 1\nt 2 1\nt 3 1\nt 4 1\nt 5 2\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n")?;
    for seed in ["1", "3", "1,5"] {
        let s = SeedSet::parse_list(inst.vertex_count(), seed)?;
        let t = activate(&inst, &s);
        println!("seed {{{seed}}}: {} rounds, closed influence {}", t.round_count, t.closed_influence());
        for (i, r) in t.rounds.iter().enumerate() {
            let ids: Vec<String> = r.iter().map(|v| (v + 1).to_string()).collect();
            println!("  round {i}: {}", ids.join(" "));
        }
    }
    Ok(())
}
