//! Kempe-chain recolouring.
//!
//! An [`ExtensionProblem`] is a graph `g`, a vertex `u` and a proper
//! `k`-colouring of `g - u`. The set `R` of neighbours of `u` whose colour
//! occurs exactly once in `N(u)` drives the counting in [`audit_facts`]:
//! when all `k` colours appear in `N(u)`, the `k - r` colours that are not
//! unique each occupy at least two neighbours, so
//! `deg(u) >= r + 2(k - r)`.
//!
//! [`extend_coloring`] tries to colour `u` without growing the palette,
//! first with a free colour, then by swapping the two colours on
//! bi-colour components (Kempe chains) until some colour disappears from
//! `N(u)`.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Bits, Graph, VertexSet};
use crate::invariants::{check_coloring, clique_number, Coloring, ColoringError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KempeError {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("base coloring of G - u is invalid: {0}")]
    Base(#[from] ColoringError),
    #[error("colors of a Kempe chain must differ (got {0} twice)")]
    SameColors(usize),
    #[error("vertex {vertex} has color {color}, not {i} or {j}")]
    WrongColor { vertex: usize, color: usize, i: usize, j: usize },
    #[error("vertex set is not a maximal {i}/{j} bi-color component")]
    NotAComponent { i: usize, j: usize },
}

/// `g`, a vertex `u`, and a proper colouring of `g - u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionProblem {
    g: Graph,
    u: usize,
    /// Colours indexed by labels of `g`; `colors[u] == 0`.
    colors: Vec<usize>,
    k: usize,
}

impl ExtensionProblem {
    /// `base` colours `g - u`, labelled as [`Graph::remove_vertex`] does.
    pub fn new(g: Graph, u: usize, base: &Coloring) -> Result<Self, KempeError> {
        let n = g.order();
        if u >= n {
            return Err(KempeError::VertexOutOfRange { vertex: u, order: n });
        }
        let rest = g.remove_vertex(u).expect("u in range");
        check_coloring(&rest, base.palette_size(), base.colors())?;
        let mut colors = base.colors().to_vec();
        colors.insert(u, 0);
        Ok(ExtensionProblem { g, u, colors, k: base.palette_size() })
    }

    /// Builds a problem from a colouring of `g` itself, forgetting the
    /// colour of `u`.
    pub fn from_coloring_of_g(g: Graph, u: usize, coloring: &Coloring) -> Result<Self, KempeError> {
        let n = g.order();
        if u >= n {
            return Err(KempeError::VertexOutOfRange { vertex: u, order: n });
        }
        let mut colors = coloring.colors().to_vec();
        if colors.len() != n {
            return Err(ColoringError::WrongLength { got: colors.len(), order: n }.into());
        }
        colors[u] = 0;
        let k = coloring.palette_size();
        let base = Coloring::new(&g.remove_vertex(u).expect("u in range"), k, {
            let mut c = colors.clone();
            c.remove(u);
            c
        })?;
        ExtensionProblem::new(g, u, &base)
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn vertex(&self) -> usize {
        self.u
    }

    pub fn palette_size(&self) -> usize {
        self.k
    }

    /// Colour of `v` in the base colouring, `None` for `u`.
    pub fn base_color(&self, v: usize) -> Option<usize> {
        Some(self.colors[v]).filter(|&c| c != 0)
    }

    /// The base colouring of `g - u`.
    pub fn base(&self) -> Coloring {
        let mut c = self.colors.clone();
        c.remove(self.u);
        Coloring::new_unchecked(self.k, c)
    }
}

/// Per-colour neighbour masks of `u`, index 0 unused.
fn neighbor_classes(g: &Graph, colors: &[usize], u: usize, k: usize) -> Vec<u64> {
    let mut classes = vec![0u64; k + 1];
    for w in g.neighbors(u) {
        let c = colors[w];
        if c != 0 && c <= k {
            classes[c] |= 1 << w;
        }
    }
    classes
}

/// Neighbours of `u` whose colour occurs exactly once in `N(u)`.
pub fn unique_color_neighbors(p: &ExtensionProblem) -> VertexSet {
    neighbor_classes(&p.g, &p.colors, p.u, p.k)
        .into_iter()
        .filter(|m| m.count_ones() == 1)
        .fold(VertexSet::empty(), |s, m| s.union(VertexSet::from_bits(m)))
}

fn bicolor_mask(colors: &[usize], i: usize, j: usize) -> u64 {
    colors
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c == i || c == j)
        .fold(0, |m, (v, _)| m | 1 << v)
}

fn check_pair(i: usize, j: usize) -> Result<(), KempeError> {
    if i == j {
        Err(KempeError::SameColors(i))
    } else {
        Ok(())
    }
}

/// The connected component of `v` in the subgraph induced by colours `i`
/// and `j`.
pub fn bicolor_component(
    g: &Graph,
    col: &Coloring,
    v: usize,
    i: usize,
    j: usize,
) -> Result<VertexSet, KempeError> {
    check_pair(i, j)?;
    check_coloring(g, col.palette_size(), col.colors())?;
    if v >= g.order() {
        return Err(KempeError::VertexOutOfRange { vertex: v, order: g.order() });
    }
    let c = col.color(v);
    if c != i && c != j {
        return Err(KempeError::WrongColor { vertex: v, color: c, i, j });
    }
    let mask = VertexSet::from_bits(bicolor_mask(col.colors(), i, j));
    Ok(g.component_of(v, mask))
}

/// Exchanges colours `i` and `j` on `comp`, which must be a whole
/// `i`/`j` component of `col`.
pub fn kempe_swap(
    g: &Graph,
    col: &Coloring,
    comp: VertexSet,
    i: usize,
    j: usize,
) -> Result<Coloring, KempeError> {
    check_pair(i, j)?;
    check_coloring(g, col.palette_size(), col.colors())?;
    let mask = VertexSet::from_bits(bicolor_mask(col.colors(), i, j));
    let Some(first) = comp.iter().next() else {
        return Err(KempeError::NotAComponent { i, j });
    };
    if first >= g.order() || g.component_of(first, mask) != comp {
        return Err(KempeError::NotAComponent { i, j });
    }
    let mut colors = col.colors().to_vec();
    swap_in(&mut colors, comp.bits(), i, j);
    let out = Coloring::new_unchecked(col.palette_size(), colors);
    debug_assert!(out.is_proper_for(g));
    Ok(out)
}

fn swap_in(colors: &mut [usize], comp: u64, i: usize, j: usize) {
    for v in Bits(comp) {
        colors[v] = if colors[v] == i { j } else { i };
    }
}

/// Search limits for [`extend_coloring_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtendOptions {
    /// Longest chain of swaps tried; `None` searches every colouring
    /// reachable by Kempe swaps.
    pub max_depth: Option<usize>,
    /// When the bounded search fails on a graph of at most this many
    /// vertices, fall back to the unbounded search.
    pub exhaustive_up_to: usize,
}

impl Default for ExtendOptions {
    fn default() -> Self {
        ExtendOptions { max_depth: Some(2), exhaustive_up_to: 8 }
    }
}

impl ExtendOptions {
    pub fn unbounded() -> Self {
        ExtendOptions { max_depth: None, exhaustive_up_to: 0 }
    }

    pub fn bounded(depth: usize) -> Self {
        ExtendOptions { max_depth: Some(depth), exhaustive_up_to: 0 }
    }
}

pub fn extend_coloring(p: &ExtensionProblem) -> Option<Coloring> {
    extend_coloring_with(p, ExtendOptions::default())
}

/// A proper `k`-colouring of `g` obtained from the base by Kempe swaps
/// plus a colour for `u`. `None` does not mean `g` needs `k + 1` colours.
pub fn extend_coloring_with(p: &ExtensionProblem, opts: ExtendOptions) -> Option<Coloring> {
    let mut colors = p.colors.clone();
    if extend_in_place(&p.g, p.u, &mut colors, p.k, opts) {
        let out = Coloring::new_unchecked(p.k, colors);
        debug_assert!(out.is_proper_for(&p.g));
        Some(out)
    } else {
        None
    }
}

fn free_color(g: &Graph, colors: &[usize], u: usize, k: usize) -> Option<usize> {
    let mut used = 0u128;
    for w in g.neighbors(u) {
        used |= 1 << colors[w];
    }
    (1..=k).find(|&c| used >> c & 1 == 0)
}

/// Colours `u` in `colors` (where `0` marks uncoloured vertices, which are
/// treated as absent). On failure `colors` is left unchanged.
pub(crate) fn extend_in_place(
    g: &Graph,
    u: usize,
    colors: &mut [usize],
    k: usize,
    opts: ExtendOptions,
) -> bool {
    if let Some(c) = free_color(g, colors, u, k) {
        colors[u] = c;
        return true;
    }
    if k < 2 {
        return false;
    }
    let found = match opts.max_depth {
        Some(depth) => bounded_search(g, u, colors, k, depth)
            .or_else(|| {
                let size = colors.iter().filter(|&&c| c != 0).count() + 1;
                (size <= opts.exhaustive_up_to).then(|| exhaustive_search(g, u, colors, k)).flatten()
            }),
        None => exhaustive_search(g, u, colors, k),
    };
    match found {
        Some(mut recolored) => {
            let c = free_color(g, &recolored, u, k).expect("search ends with a free color");
            recolored[u] = c;
            colors.copy_from_slice(&recolored);
            true
        }
        None => false,
    }
}

/// Components of colours `i`/`j` that contain an `i`-coloured neighbour of
/// `u`, fewest `N(u)` vertices first.
fn chains_at(g: &Graph, colors: &[usize], u: usize, i: usize, j: usize) -> Vec<u64> {
    let mask = VertexSet::from_bits(bicolor_mask(colors, i, j));
    let nu = g.neighbors(u).bits();
    let mut chains: Vec<u64> = Vec::new();
    for v in Bits(nu) {
        if colors[v] == i && chains.iter().all(|&c| c >> v & 1 == 0) {
            chains.push(g.component_of(v, mask).bits());
        }
    }
    chains.sort_by_key(|&c| ((c & nu).count_ones(), c.trailing_zeros()));
    chains
}

fn bounded_search(
    g: &Graph,
    u: usize,
    colors: &[usize],
    k: usize,
    depth: usize,
) -> Option<Vec<usize>> {
    if depth == 0 {
        return None;
    }
    let mut work = colors.to_vec();
    for i in 1..=k {
        for j in (1..=k).filter(|&j| j != i) {
            for chain in chains_at(g, colors, u, i, j) {
                swap_in(&mut work, chain, i, j);
                if free_color(g, &work, u, k).is_some() {
                    return Some(work);
                }
                if let Some(done) = bounded_search(g, u, &work, k, depth - 1) {
                    return Some(done);
                }
                swap_in(&mut work, chain, i, j);
            }
        }
    }
    None
}

/// Relabels colours by first use in vertex order; colour permutations are
/// themselves products of Kempe swaps of whole colour classes.
fn normalize(colors: &mut [usize]) {
    let mut map = [0usize; 65];
    let mut next = 0;
    for c in colors.iter_mut() {
        if *c == 0 {
            continue;
        }
        if map[*c] == 0 {
            next += 1;
            map[*c] = next;
        }
        *c = map[*c];
    }
}

/// Breadth-first search over every colouring reachable from `colors` by
/// Kempe swaps, up to renaming of colours.
fn exhaustive_search(g: &Graph, u: usize, colors: &[usize], k: usize) -> Option<Vec<usize>> {
    let mut start = colors.to_vec();
    normalize(&mut start);
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(state) = queue.pop_front() {
        if free_color(g, &state, u, k).is_some() {
            return Some(state);
        }
        let colored: u64 = state.iter().enumerate().filter(|&(_, &c)| c != 0).fold(0, |m, (v, _)| m | 1 << v);
        for i in 1..=k {
            for j in i + 1..=k {
                let mask = VertexSet::from_bits(bicolor_mask(&state, i, j));
                let mut done = 0u64;
                for v in Bits(mask.bits() & colored) {
                    if done >> v & 1 == 1 {
                        continue;
                    }
                    let comp = g.component_of(v, mask).bits();
                    done |= comp;
                    let mut next = state.clone();
                    swap_in(&mut next, comp, i, j);
                    normalize(&mut next);
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    None
}

/// Counting facts about `N(u)` under the base colouring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AuditFacts {
    pub deg_u: usize,
    pub r: usize,
    pub colors_in_n: usize,
    pub k: usize,
    pub omega: usize,
    pub delta: usize,
    /// Every colour `1..=k` occurs in `N(u)`.
    pub saturated: bool,
    /// `deg_u >= r + 2 (k - r)`.
    pub ineq_degree: bool,
    /// `r >= omega + 1`.
    pub ineq_r: bool,
}

impl AuditFacts {
    /// Conditions of the minimal-counterexample configuration that fail
    /// on this input.
    pub fn failed_conditions(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.saturated {
            out.push("not saturated");
        }
        if !self.ineq_degree {
            out.push("deg_u < r + 2(k - r)");
        }
        if !self.ineq_r {
            out.push("r < omega + 1");
        }
        out
    }
}

pub fn audit_facts(p: &ExtensionProblem) -> AuditFacts {
    let classes = neighbor_classes(&p.g, &p.colors, p.u, p.k);
    let deg_u = p.g.degree(p.u);
    let r = classes.iter().filter(|m| m.count_ones() == 1).count();
    let colors_in_n = classes.iter().filter(|&&m| m != 0).count();
    let omega = clique_number(&p.g);
    AuditFacts {
        deg_u,
        r,
        colors_in_n,
        k: p.k,
        omega,
        delta: p.g.max_degree(),
        saturated: colors_in_n == p.k,
        ineq_degree: deg_u + r >= 2 * p.k,
        ineq_r: r > omega,
    }
}

/// Vertices in smallest-last order reversed: each vertex has at most
/// `degeneracy(g)` neighbours before it.
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut remaining = g.vertices().bits();
    let mut removal = Vec::with_capacity(n);
    while remaining != 0 {
        let v = Bits(remaining)
            .min_by_key(|&v| (g.rows()[v] & remaining).count_ones())
            .expect("nonempty");
        removal.push(v);
        remaining &= !(1 << v);
    }
    removal.reverse();
    removal
}

/// Colours `g` vertex by vertex in degeneracy order, recolouring by Kempe
/// swaps before opening a new colour. Returns the colouring and its palette
/// size, which never exceeds `Δ + 1`.
pub fn reed_color(g: &Graph) -> (Coloring, usize) {
    let mut colors = vec![0usize; g.order()];
    let mut k = 0;
    for v in degeneracy_order(g) {
        if !extend_in_place(g, v, &mut colors, k, ExtendOptions::default()) {
            k += 1;
            colors[v] = k;
        }
    }
    let c = Coloring::new_unchecked(k, colors);
    debug_assert!(c.is_proper_for(g));
    (c, k)
}
