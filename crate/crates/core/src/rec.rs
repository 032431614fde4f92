//! Internal step recorder shared by the solvers: applies each step to a
//! working configuration while appending it to the trace under construction.
//! Debug builds validate every step against the full legality rules.

use crate::config::Configuration;
use crate::moves::{apply_step_unchecked, ParallelStep};
#[cfg(debug_assertions)]
use crate::moves::validate_step;

pub(crate) struct Recorder {
    pub cfg: Configuration,
    pub steps: Vec<ParallelStep>,
}

impl Recorder {
    pub fn new(cfg: Configuration) -> Self {
        Recorder { cfg, steps: Vec::new() }
    }

    pub fn push(&mut self, step: ParallelStep) {
        if step.is_empty() {
            return;
        }
        #[cfg(debug_assertions)]
        if let Err(e) = validate_step(&self.cfg, &step) {
            panic!("solver emitted an illegal step: {e}");
        }
        apply_step_unchecked(&mut self.cfg, &step);
        self.steps.push(step);
    }

    pub fn extend(&mut self, steps: Vec<ParallelStep>) {
        for s in steps {
            self.push(s);
        }
    }

    /// Appends the reversal of `steps`, which must lead from some state S to
    /// the recorder's current state; afterwards the recorder is at S.
    pub fn extend_reversed(&mut self, steps: Vec<ParallelStep>) {
        for s in steps.into_iter().rev() {
            self.push(s.reversed());
        }
    }
}
