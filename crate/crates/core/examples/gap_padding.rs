//! Pick the padding that turns a ratio function into a concrete gap.

use tsslab::reductions::{choose_gap_padding, GapVariant, RhoPreset};

fn main() {
    for preset in ["const:1", "const:2", "poly:1,0.5", "linear:1"] {
        let rho: RhoPreset = preset.parse().unwrap();
        for variant in [GapVariant::Clique, GapVariant::MinClosed] {
            match choose_gap_padding(5, &rho, variant) {
                Ok(p) => println!("{preset:>10} {variant:?}: g = {}, h = {}, x = {:?}", p.g_k, p.h, p.x),
                Err(e) => println!("{preset:>10} {variant:?}: rejected ({e})"),
            }
        }
    }
}
