//! Reed's bound `χ ≤ ⌈(Δ + ω + 1) / 2⌉` and per-graph verdicts.

use serde::Serialize;

use crate::graph::Graph;
use crate::invariants::{BudgetExhausted, Solver};
use crate::patterns::{is_in_class, registry};

/// `⌈(delta + omega + 1) / 2⌉`, computed as `(delta + omega + 2) / 2`.
pub const fn reed_bound(delta: usize, omega: usize) -> usize {
    (delta + omega + 2) / 2
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReedReport {
    pub n: usize,
    pub graph6: String,
    pub delta: usize,
    pub omega: usize,
    pub chi: usize,
    pub bound: usize,
    pub holds: bool,
    pub tight: bool,
    pub classes: Vec<String>,
    /// Set only for the empty graph, where the bound says nothing.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub vacuous: bool,
}

/// Names of the registered classes containing `g`.
pub fn classify(g: &Graph) -> Vec<String> {
    registry().iter().filter(|c| is_in_class(g, c)).map(|c| c.name.clone()).collect()
}

pub fn check_reed(g: &Graph) -> Result<ReedReport, BudgetExhausted> {
    check_reed_with(g, &Solver::default())
}

pub fn check_reed_with(g: &Graph, solver: &Solver) -> Result<ReedReport, BudgetExhausted> {
    let delta = g.max_degree();
    let omega = solver.clique_number(g)?;
    let chi = solver.chromatic_number(g)?;
    let bound = reed_bound(delta, omega);
    Ok(ReedReport {
        n: g.order(),
        graph6: g.to_graph6(),
        delta,
        omega,
        chi,
        bound,
        holds: chi <= bound,
        tight: chi == bound,
        classes: classify(g),
        vacuous: g.order() == 0,
    })
}
