//! A 4-cycle gadget lets activation cross u -> v but never v -> u.

use tsslab::gadgets::{GadgetRole, InstanceBuilder, Tag};
use tsslab::{activate, SeedSet};

fn main() -> tsslab::Result<()> {
    let mut b = InstanceBuilder::new();
    let u = b.add_vertex(1, Tag::Original(0));
    let v = b.add_vertex(1, Tag::Original(1));
    let id = b.add_directed_edge_gadget(u, v)?;
    let (inst, prov) = b.finish()?;
    let gadget = prov.gadget(id);

    for (name, seed) in [("tail", u), ("head", v)] {
        let t = activate(&inst, &SeedSet::new(inst.vertex_count(), [seed])?);
        let a_on = t.final_active.contains(&gadget.vertex(GadgetRole::A));
        println!("seed {name}: active {:?}, a-vertex active: {a_on}", t.final_active);
        for (i, r) in t.rounds.iter().enumerate() {
            let tags: Vec<String> = r.iter().map(|&w| prov.display_tag(w).to_string()).collect();
            println!("  round {i}: {}", tags.join(", "));
        }
    }
    Ok(())
}
