//! Target Set Selection toolkit.
//!
//! A deterministic threshold-activation engine ([`propagation`]), exact and
//! heuristic solvers ([`solvers`]), gadget constructions ([`gadgets`]) and
//! instance compilers with solution back-mapping ([`reductions`]), checked
//! against brute-force oracles ([`verify`]).
//!
//! Vertices are 0-based everywhere in the API; all text formats are 1-based.
//!
//! ```
//! use tsslab::{activate, Graph, Instance, SeedSet};
//!
//! let inst = Instance::uniform(Graph::path(4), 1).unwrap();
//! let trace = activate(&inst, &SeedSet::new(4, [0]).unwrap());
//! assert_eq!(trace.round_count, 3);
//! assert_eq!(trace.closed_influence(), 4);
//! ```

pub mod circuits;
pub mod error;
pub mod gadgets;
pub mod graph;
pub mod propagation;
pub mod record;
pub mod reductions;
pub mod solvers;
pub mod subsets;
pub mod verify;

pub use circuits::{evaluate, min_weight_satisfying, parse_circuit, write_circuit, Assignment, MonotoneCircuit, NodeKind};
pub use error::{Error, Result};
pub use gadgets::{map_back_seed, reduce_thresholds_to_two, InstanceBuilder, Provenance, Tag};
pub use graph::{generate_random, parse_instance, write_instance, GeneratorConfig, Graph, Instance, SeedSet, ThresholdMode};
pub use propagation::{activate, activate_round, influence, is_target_set, Mode, PropagationTrace, Propagator};
pub use record::Record;
pub use reductions::{
    choose_gap_padding, clique_to_max_influence, is_to_influence_decision, is_to_min_closed_influence,
    map_target_set_to_assignment, mcs_to_tss, GapFunction, GapParameters, GapVariant, ReducedInstance, RhoPreset,
};
pub use solvers::{
    greedy_target_set, k_influence, min_open_influence_unanimity, optimal_target_set, unanimity_target_set_2approx,
    Goal, SizeRule, SolveResult,
};
