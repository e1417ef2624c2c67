//! Synchronous threshold activation.
//!
//! A vertex `v` becomes active in round `i + 1` when at least `thr(v)` of its
//! neighbours were active after round `i`; round 0 is the seed set. The
//! [`Propagator`] keeps a per-vertex counter of active neighbours and charges
//! every edge once per endpoint activation, so a run costs `O(n + m)` in the
//! worst case and only touches the activated region in practice.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{format_vertex_list, Instance, SeedSet};
use crate::record::Record;

/// Whether the seed itself counts toward influence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `|Active(S) \ S|`
    Open,
    /// `|Active(S)|`
    Closed,
}

impl Mode {
    pub fn value(self, seed_len: usize, active: usize) -> usize {
        match self {
            Mode::Open => active - seed_len,
            Mode::Closed => active,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Open => "open",
            Mode::Closed => "closed",
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "open" => Ok(Mode::Open),
            "closed" => Ok(Mode::Closed),
            _ => Err(Error::Precondition(format!("unknown mode '{s}' (open|closed)"))),
        }
    }
}

/// One round of the activation recurrence, computed literally from the input
/// set: `A ∪ {v : |N(v) ∩ A| >= thr(v)}`. Input need not be sorted; output is
/// ascending and deduplicated.
pub fn activate_round(inst: &Instance, active: &[usize]) -> Vec<usize> {
    let n = inst.vertex_count();
    let mut mask = vec![false; n];
    for &v in active {
        mask[v] = true;
    }
    let g = inst.graph();
    (0..n)
        .filter(|&v| {
            mask[v]
                || g.neighbors(v).iter().filter(|&&w| mask[w]).count() as u64
                    >= u64::from(inst.threshold(v))
        })
        .collect()
}

/// Outcome of a single [`Propagator`] run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunSummary {
    /// `|Active(S)|`, or the count reached when the run was cut off.
    pub active: usize,
    /// Number of rounds that activated at least one new vertex.
    pub rounds: usize,
    /// Set when a bounded run stopped because `active` exceeded its limit.
    pub truncated: bool,
}

/// Reusable activation engine over one instance.
///
/// Scratch arrays are tagged with a run epoch instead of being cleared, so
/// back-to-back runs from small seeds cost only what they activate.
pub struct Propagator<'a> {
    inst: &'a Instance,
    epoch: u32,
    count_epoch: Vec<u32>,
    counts: Vec<u32>,
    active_epoch: Vec<u32>,
    /// Active vertices in activation order.
    order: Vec<usize>,
    /// `order[bounds[r]..bounds[r + 1]]` is round `r`.
    bounds: Vec<usize>,
}

impl<'a> Propagator<'a> {
    pub fn new(inst: &'a Instance) -> Self {
        let n = inst.vertex_count();
        Self {
            inst,
            epoch: 0,
            count_epoch: vec![0; n],
            counts: vec![0; n],
            active_epoch: vec![0; n],
            order: Vec::with_capacity(n),
            bounds: Vec::new(),
        }
    }

    pub fn instance(&self) -> &'a Instance {
        self.inst
    }

    fn next_epoch(&mut self) {
        if self.epoch == u32::MAX {
            self.count_epoch.fill(0);
            self.active_epoch.fill(0);
            self.epoch = 0;
        }
        self.epoch += 1;
    }

    #[inline]
    pub fn is_active(&self, v: usize) -> bool {
        self.active_epoch[v] == self.epoch
    }

    /// Runs to the fixpoint.
    pub fn run(&mut self, seed: &[usize]) -> RunSummary {
        self.run_bounded(seed, usize::MAX)
    }

    /// Runs until the fixpoint or until more than `limit` vertices are
    /// active, whichever comes first.
    pub fn run_bounded(&mut self, seed: &[usize], limit: usize) -> RunSummary {
        self.next_epoch();
        let epoch = self.epoch;
        self.order.clear();
        self.bounds.clear();
        self.bounds.push(0);
        for &s in seed {
            if self.active_epoch[s] != epoch {
                self.active_epoch[s] = epoch;
                self.order.push(s);
            }
        }
        self.bounds.push(self.order.len());

        let g = self.inst.graph();
        let thr = self.inst.thresholds();
        let mut start = 0;
        let mut truncated = self.order.len() > limit;
        while !truncated {
            let end = self.order.len();
            for idx in start..end {
                let u = self.order[idx];
                for &w in g.neighbors(u) {
                    if self.active_epoch[w] == epoch {
                        continue;
                    }
                    let c = if self.count_epoch[w] == epoch {
                        self.counts[w] + 1
                    } else {
                        self.count_epoch[w] = epoch;
                        1
                    };
                    self.counts[w] = c;
                    if c >= thr[w] {
                        self.active_epoch[w] = epoch;
                        self.order.push(w);
                    }
                }
            }
            if self.order.len() == end {
                break;
            }
            self.bounds.push(self.order.len());
            start = end;
            truncated = self.order.len() > limit;
        }

        RunSummary {
            active: self.order.len(),
            rounds: self.bounds.len() - 2,
            truncated,
        }
    }

    /// Active vertices of the last run, in activation order.
    pub fn activation_order(&self) -> &[usize] {
        &self.order
    }

    /// Vertices activated in round `r` of the last run (round 0 is the seed).
    pub fn round(&self, r: usize) -> &[usize] {
        &self.order[self.bounds[r]..self.bounds[r + 1]]
    }

    /// Full trace of a run from `seed`.
    pub fn trace(&mut self, seed: &SeedSet) -> PropagationTrace {
        let summary = self.run(seed.vertices());
        let rounds = (0..=summary.rounds)
            .map(|r| {
                let mut v = self.round(r).to_vec();
                v.sort_unstable();
                v
            })
            .collect();
        let mut final_active = self.order.clone();
        final_active.sort_unstable();
        PropagationTrace {
            seed: seed.clone(),
            rounds,
            final_active,
            round_count: summary.rounds,
        }
    }
}

/// Round-by-round record of one activation process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropagationTrace {
    pub seed: SeedSet,
    /// `rounds[0]` is the seed; `rounds[i]` holds the vertices first active
    /// after round `i`. Each list is ascending.
    pub rounds: Vec<Vec<usize>>,
    /// Ascending.
    pub final_active: Vec<usize>,
    /// Number of rounds that activated something; 0 when the seed is already
    /// a fixpoint.
    pub round_count: usize,
}

impl PropagationTrace {
    pub fn closed_influence(&self) -> usize {
        self.final_active.len()
    }

    pub fn open_influence(&self) -> usize {
        self.final_active.len() - self.seed.len()
    }

    pub fn influence(&self, mode: Mode) -> usize {
        mode.value(self.seed.len(), self.final_active.len())
    }

    /// `Active^i(S)`, ascending.
    pub fn cumulative(&self, i: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.rounds[..=i.min(self.round_count)]
            .iter()
            .flatten()
            .copied()
            .collect();
        v.sort_unstable();
        v
    }

    pub fn to_record(&self) -> Record {
        let mut rec = Record::new();
        rec.push("seed", format_vertex_list(self.seed.vertices()));
        for (i, r) in self.rounds.iter().enumerate() {
            rec.push(format!("round.{i}"), format_vertex_list(r));
        }
        rec.push("round_count", self.round_count)
            .push("closed_influence", self.closed_influence())
            .push("open_influence", self.open_influence());
        rec
    }
}

/// Runs `seed` to the fixpoint and records every round.
pub fn activate(inst: &Instance, seed: &SeedSet) -> PropagationTrace {
    Propagator::new(inst).trace(seed)
}

pub fn is_target_set(inst: &Instance, seed: &SeedSet) -> bool {
    Propagator::new(inst).run(seed.vertices()).active == inst.vertex_count()
}

pub fn influence(inst: &Instance, seed: &SeedSet, mode: Mode) -> usize {
    let active = Propagator::new(inst).run(seed.vertices()).active;
    mode.value(seed.len(), active)
}
