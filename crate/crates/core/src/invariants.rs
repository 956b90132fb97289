//! Exact clique number, k-colourability and chromatic number.
//!
//! Both searches run on adjacency bitmasks. Maximum clique is a
//! branch-and-bound whose upper bound comes from a greedy colouring of the
//! candidate set. Colourability is a DSATUR-ordered backtracking search
//! where a vertex may only open the next unused colour, which removes
//! colour-permutation symmetry.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{low_mask, Bits, Graph};

/// Default node-expansion cap. Every instance of order at most 12
/// finishes far below it.
pub const DEFAULT_NODE_LIMIT: u64 = 200_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("solver budget exhausted after {0} node expansions")]
pub struct BudgetExhausted(pub u64);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {got} entries for a graph of order {order}")]
    WrongLength { got: usize, order: usize },
    #[error("vertex {vertex} has color {color}, outside 1..={palette}")]
    OutOfPalette { vertex: usize, color: usize, palette: usize },
    #[error("edge {0}-{1} is monochromatic")]
    Improper(usize, usize),
}

/// A proper colouring with colours `1..=palette_size`. Not every colour
/// needs to be used.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Coloring {
    palette_size: usize,
    colors: Vec<usize>,
}

impl Coloring {
    /// Validates `colors` as a proper colouring of `g`.
    pub fn new(g: &Graph, palette_size: usize, colors: Vec<usize>) -> Result<Self, ColoringError> {
        check_coloring(g, palette_size, &colors)?;
        Ok(Coloring { palette_size, colors })
    }

    pub(crate) fn new_unchecked(palette_size: usize, colors: Vec<usize>) -> Self {
        Coloring { palette_size, colors }
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colours actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen = 0u128;
        for &c in &self.colors {
            seen |= 1 << c;
        }
        seen.count_ones() as usize
    }

    pub fn is_proper_for(&self, g: &Graph) -> bool {
        check_coloring(g, self.palette_size, &self.colors).is_ok()
    }

    /// Vertices with colour `c`.
    pub fn class(&self, c: usize) -> crate::VertexSet {
        self.colors.iter().enumerate().filter(|&(_, &x)| x == c).map(|(v, _)| v).collect()
    }
}

pub fn check_coloring(g: &Graph, palette: usize, colors: &[usize]) -> Result<(), ColoringError> {
    if colors.len() != g.order() {
        return Err(ColoringError::WrongLength { got: colors.len(), order: g.order() });
    }
    for (v, &c) in colors.iter().enumerate() {
        if c == 0 || c > palette {
            return Err(ColoringError::OutOfPalette { vertex: v, color: c, palette });
        }
    }
    match g.edges().find(|&(u, v)| colors[u] == colors[v]) {
        Some((u, v)) => Err(ColoringError::Improper(u, v)),
        None => Ok(()),
    }
}

/// Exact solver with an optional cap on node expansions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Solver {
    pub node_limit: Option<u64>,
}

impl Default for Solver {
    fn default() -> Self {
        Solver { node_limit: Some(DEFAULT_NODE_LIMIT) }
    }
}

struct Counter {
    used: u64,
    limit: u64,
}

impl Counter {
    #[inline]
    fn tick(&mut self) -> Result<(), BudgetExhausted> {
        self.used += 1;
        if self.used > self.limit {
            Err(BudgetExhausted(self.limit))
        } else {
            Ok(())
        }
    }
}

impl Solver {
    pub fn unbounded() -> Self {
        Solver { node_limit: None }
    }

    pub fn with_limit(limit: u64) -> Self {
        Solver { node_limit: Some(limit) }
    }

    fn counter(&self) -> Counter {
        Counter { used: 0, limit: self.node_limit.unwrap_or(u64::MAX) }
    }

    /// A maximum clique, as a vertex bitmask.
    pub fn max_clique(&self, g: &Graph) -> Result<crate::VertexSet, BudgetExhausted> {
        let mut search = CliqueSearch {
            rows: g.rows(),
            best: 0,
            best_size: 0,
            counter: self.counter(),
        };
        search.expand(0, 0, low_mask(g.order()))?;
        Ok(crate::VertexSet::from_bits(search.best))
    }

    pub fn clique_number(&self, g: &Graph) -> Result<usize, BudgetExhausted> {
        Ok(self.max_clique(g)?.len())
    }

    /// A proper colouring with at most `k` colours, if one exists.
    pub fn k_coloring(&self, g: &Graph, k: usize) -> Result<Option<Coloring>, BudgetExhausted> {
        let n = g.order();
        if n == 0 {
            return Ok(Some(Coloring::new_unchecked(k, Vec::new())));
        }
        if k == 0 {
            return Ok(None);
        }
        if k >= n {
            let colors = (1..=n).collect();
            return Ok(Some(Coloring::new_unchecked(k, colors)));
        }
        let mut search = ColorSearch {
            rows: g.rows(),
            k,
            colors: vec![0; n],
            classes: vec![0; k + 1],
            uncolored: low_mask(n),
            counter: self.counter(),
        };
        if search.solve(0)? {
            let coloring = Coloring::new_unchecked(k, search.colors);
            debug_assert!(coloring.is_proper_for(g));
            Ok(Some(coloring))
        } else {
            Ok(None)
        }
    }

    /// An optimal colouring; its palette size is χ(g).
    pub fn optimal_coloring(&self, g: &Graph) -> Result<Coloring, BudgetExhausted> {
        let n = g.order();
        if n == 0 {
            return Ok(Coloring::new_unchecked(0, Vec::new()));
        }
        let upper = dsatur_greedy(g);
        let lower = self.clique_number(g)?.max(1);
        for k in lower..upper.palette_size() {
            if let Some(c) = self.k_coloring(g, k)? {
                return Ok(c);
            }
        }
        Ok(upper)
    }

    pub fn chromatic_number(&self, g: &Graph) -> Result<usize, BudgetExhausted> {
        Ok(self.optimal_coloring(g)?.palette_size())
    }
}

struct CliqueSearch<'a> {
    rows: &'a [u64],
    best: u64,
    best_size: usize,
    counter: Counter,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, current: u64, size: usize, mut cand: u64) -> Result<(), BudgetExhausted> {
        self.counter.tick()?;
        if cand == 0 {
            if size > self.best_size {
                self.best_size = size;
                self.best = current;
            }
            return Ok(());
        }
        // Greedy colouring of the candidates bounds the clique they can add.
        let mut order = Vec::with_capacity(cand.count_ones() as usize);
        let mut uncolored = cand;
        let mut color = 0;
        while uncolored != 0 {
            color += 1;
            let mut avail = uncolored;
            while avail != 0 {
                let v = avail.trailing_zeros() as usize;
                avail &= !(1 << v) & !self.rows[v];
                uncolored &= !(1 << v);
                order.push((v, color));
            }
        }
        while let Some((v, bound)) = order.pop() {
            if size + bound <= self.best_size {
                return Ok(());
            }
            self.expand(current | 1 << v, size + 1, cand & self.rows[v])?;
            cand &= !(1 << v);
        }
        Ok(())
    }
}

struct ColorSearch<'a> {
    rows: &'a [u64],
    k: usize,
    colors: Vec<usize>,
    classes: Vec<u64>,
    uncolored: u64,
    counter: Counter,
}

impl ColorSearch<'_> {
    fn saturation(&self, v: usize) -> usize {
        self.classes[1..].iter().filter(|&&c| c & self.rows[v] != 0).count()
    }

    fn solve(&mut self, max_used: usize) -> Result<bool, BudgetExhausted> {
        if self.uncolored == 0 {
            return Ok(true);
        }
        self.counter.tick()?;
        // DSATUR choice: most distinct neighbour colours, then most
        // uncoloured neighbours, then smallest label.
        let mut pick = usize::MAX;
        let mut pick_key = (0, 0);
        for v in Bits(self.uncolored) {
            let key = (self.saturation(v), (self.rows[v] & self.uncolored).count_ones());
            if pick == usize::MAX || key > pick_key {
                pick = v;
                pick_key = key;
            }
        }
        let v = pick;
        if pick_key.0 >= self.k {
            return Ok(false);
        }
        let top = (max_used + 1).min(self.k);
        for c in 1..=top {
            if self.classes[c] & self.rows[v] != 0 {
                continue;
            }
            self.colors[v] = c;
            self.classes[c] |= 1 << v;
            self.uncolored &= !(1 << v);
            if self.solve(max_used.max(c))? {
                return Ok(true);
            }
            self.uncolored |= 1 << v;
            self.classes[c] &= !(1 << v);
            self.colors[v] = 0;
        }
        Ok(false)
    }
}

/// Saturation-degree greedy colouring.
pub fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.order();
    let rows = g.rows();
    let mut colors = vec![0usize; n];
    let mut neighbor_colors = vec![0u128; n];
    let mut uncolored = low_mask(n);
    let mut palette = 0;
    while uncolored != 0 {
        let v = Bits(uncolored)
            .max_by_key(|&v| {
                (
                    neighbor_colors[v].count_ones(),
                    (rows[v] & uncolored).count_ones(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("nonempty");
        let c = (1..).find(|&c| neighbor_colors[v] >> c & 1 == 0).expect("a free color");
        colors[v] = c;
        palette = palette.max(c);
        uncolored &= !(1 << v);
        for w in Bits(rows[v]) {
            neighbor_colors[w] |= 1 << c;
        }
    }
    Coloring::new_unchecked(palette, colors)
}

/// Palette size of [`dsatur_greedy`]; lies between χ(g) and Δ(g) + 1.
pub fn greedy_bound(g: &Graph) -> usize {
    dsatur_greedy(g).palette_size()
}

pub fn clique_number(g: &Graph) -> usize {
    Solver::unbounded().clique_number(g).expect("unbounded")
}

pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    Solver::unbounded().k_coloring(g, k).expect("unbounded")
}

pub fn chromatic_number(g: &Graph) -> usize {
    Solver::unbounded().chromatic_number(g).expect("unbounded")
}
