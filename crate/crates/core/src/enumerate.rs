//! Isomorph-free generation, seeded G(n, p) sampling and exhaustive
//! counterexample search over a hereditary class.
//!
//! Graphs of order `n` are grown from the representatives of order `n - 1`
//! by adding vertex `n - 1` with every possible neighbourhood. Each child is
//! replaced by its canonical relabelling and duplicates are merged by
//! canonical graph6 key. Every graph of order `n` arises this way because
//! deleting its last canonical vertex leaves some graph of order `n - 1`.
//! When a hereditary class is given, children outside the class are dropped
//! before canonicalisation; since every induced subgraph of a class member
//! is a member, nothing in the class is lost.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet, MAX_ORDER};
use crate::invariants::Solver;
use crate::iso::canonical_graph;
use crate::patterns::{contains_induced_through, ClassSpec};
use crate::reed::{check_reed_with, ReedReport};

/// Largest order accepted for exhaustive generation.
pub const MAX_ENUMERATION_ORDER: usize = 9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnumerateError {
    #[error("order {0} is beyond the exhaustive limit of {MAX_ENUMERATION_ORDER}")]
    OrderTooLarge(usize),
    #[error("order {0} exceeds the maximum graph order of {MAX_ORDER}")]
    SampleOrderTooLarge(usize),
    #[error("edge probability {0} is not in [0, 1]")]
    BadProbability(f64),
}

/// All isomorphism-class representatives of each order `0..=n_max`.
#[derive(Debug, Clone)]
pub struct Levels {
    levels: Vec<Vec<Graph>>,
}

impl Levels {
    pub fn build(n_max: usize, prune: Option<&ClassSpec>) -> Result<Self, EnumerateError> {
        if n_max > MAX_ENUMERATION_ORDER {
            return Err(EnumerateError::OrderTooLarge(n_max));
        }
        let mut levels = vec![vec![Graph::empty(0).expect("order 0")]];
        for _ in 1..=n_max {
            let next = grow(levels.last().expect("nonempty"), prune);
            levels.push(next);
        }
        Ok(Levels { levels })
    }

    /// Representatives of order `n`, sorted by canonical graph6 string.
    pub fn level(&self, n: usize) -> &[Graph] {
        &self.levels[n]
    }

    pub fn n_max(&self) -> usize {
        self.levels.len() - 1
    }
}

fn admits_child(child: &Graph, prune: Option<&ClassSpec>) -> bool {
    let v = child.order() - 1;
    prune.is_none_or(|c| c.forbidden.iter().all(|p| !contains_induced_through(child, p, v)))
}

fn grow(parents: &[Graph], prune: Option<&ClassSpec>) -> Vec<Graph> {
    let Some(first) = parents.first() else {
        return Vec::new();
    };
    let m = first.order();
    // Each parent is an independent work unit; results merge by key.
    let parts: Vec<BTreeMap<String, Graph>> = parents
        .par_iter()
        .map(|parent| {
            let mut local = BTreeMap::new();
            for bits in 0..1u64 << m {
                let child = parent
                    .with_vertex(VertexSet::from_bits(bits))
                    .expect("neighbourhood within range");
                if !admits_child(&child, prune) {
                    continue;
                }
                let canon = canonical_graph(&child);
                local.entry(canon.to_graph6()).or_insert(canon);
            }
            local
        })
        .collect();
    let mut merged = BTreeMap::new();
    for part in parts {
        merged.extend(part);
    }
    merged.into_values().collect()
}

/// One representative per isomorphism class of graphs of order `n` (in
/// `prune`'s class, when given), in canonical-string order.
pub fn enumerate_graphs(
    n: usize,
    prune: Option<&ClassSpec>,
) -> Result<impl Iterator<Item = Graph>, EnumerateError> {
    let mut levels = Levels::build(n, prune)?.levels;
    Ok(levels.pop().expect("level n").into_iter())
}

/// G(n, p) with a ChaCha8 stream seeded from `seed`. Pairs are visited in
/// graph6 order, so a given `(n, p, seed)` always yields the same graph.
pub fn sample_gnp(n: usize, p: f64, seed: u64) -> Result<Graph, EnumerateError> {
    if n > MAX_ORDER {
        return Err(EnumerateError::SampleOrderTooLarge(n));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(EnumerateError::BadProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, &edges).expect("pairs are in range"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub class_name: String,
    pub n_max: usize,
    pub graphs_checked: usize,
    /// Class members per order `1..=n_max`.
    pub per_order: Vec<usize>,
    /// Members with `χ` equal to the bound.
    pub tight: usize,
    /// A class member violating the bound; its report carries the graph6.
    pub counterexample: Option<ReedReport>,
    /// Graph6 of the graph whose exact solve ran out of budget; the search
    /// stops there because the claim cannot be certified past it.
    pub budget_exhausted: Option<String>,
}

impl SearchResult {
    pub fn is_clean(&self) -> bool {
        self.counterexample.is_none() && self.budget_exhausted.is_none()
    }
}

pub fn counterexample_search(c: &ClassSpec, n_max: usize) -> Result<SearchResult, EnumerateError> {
    counterexample_search_with(c, n_max, &Solver::default())
}

pub fn counterexample_search_with(
    c: &ClassSpec,
    n_max: usize,
    solver: &Solver,
) -> Result<SearchResult, EnumerateError> {
    let levels = Levels::build(n_max, Some(c))?;
    let mut result = SearchResult {
        class_name: c.name.clone(),
        n_max,
        graphs_checked: 0,
        per_order: Vec::with_capacity(n_max),
        tight: 0,
        counterexample: None,
        budget_exhausted: None,
    };
    for n in 1..=n_max {
        let graphs = levels.level(n);
        result.per_order.push(graphs.len());
        let reports: Vec<_> = graphs.par_iter().map(|g| check_reed_with(g, solver)).collect();
        for (g, report) in graphs.iter().zip(reports) {
            match report {
                Err(_) => {
                    result.budget_exhausted = Some(g.to_graph6());
                    return Ok(result);
                }
                Ok(r) => {
                    result.graphs_checked += 1;
                    result.tight += r.tight as usize;
                    if !r.holds {
                        result.counterexample = Some(r);
                        return Ok(result);
                    }
                }
            }
        }
    }
    Ok(result)
}
