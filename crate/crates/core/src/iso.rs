//! Isomorphism testing and canonical labelling for small graphs.
//!
//! [`find_isomorphism`] is a plain backtracking search over bijections with
//! a degree-sequence prefilter. [`canonical_graph`] uses
//! individualisation/refinement: the vertex set is split into an ordered
//! equitable partition, a vertex of the first non-singleton cell is
//! individualised, and the process repeats until every cell is a
//! singleton. Each leaf gives a relabelling; the canonical graph is the one
//! with the smallest graph6 bit string among all leaves. Because refinement
//! and cell selection depend only on structure, the set of leaf graphs is
//! the same for every labelling of an isomorphism class.

use crate::graph::{low_mask, Bits, Graph};

/// A bijection `map` with `g1.has_edge(u, v) == g2.has_edge(map[u], map[v])`,
/// if one exists.
pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    let n = g1.order();
    if n != g2.order() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    if g1.degree_sequence() != g2.degree_sequence() {
        return None;
    }
    // Map high-degree vertices first; they constrain the rest most.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g1.degree(v)));
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    if extend_map(g1, g2, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend_map(
    g1: &Graph,
    g2: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut u64,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let dv = g1.degree(v);
    for w in Bits(low_mask(g2.order()) & !*used) {
        if g2.degree(w) != dv {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&x| g1.has_edge(v, x) == g2.has_edge(w, map[x]));
        if !consistent {
            continue;
        }
        map[v] = w;
        *used |= 1 << w;
        if extend_map(g1, g2, order, depth + 1, map, used) {
            return true;
        }
        *used &= !(1 << w);
        map[v] = usize::MAX;
    }
    false
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    find_isomorphism(g1, g2).is_some()
}

/// Canonical graph6 string: equal for two graphs exactly when they are
/// isomorphic.
pub fn canonical_form(g: &Graph) -> String {
    canonical_graph(g).to_graph6()
}

/// The canonical relabelling of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let order = canonical_order(g);
    g.induced_by_order(&order)
}

/// `order[i]` is the vertex of `g` that receives label `i`.
pub fn canonical_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search { g, best: None };
    search.descend(vec![low_mask(n)]);
    search.best.expect("search visits at least one leaf").1
}

/// Graph6 bit order key: one word per column `j`, bit `63 - i` set when
/// `i < j` and `i ~ j`. Lexicographic order on keys equals lexicographic
/// order on graph6 strings of the same length.
type Key = Vec<u64>;

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Key, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Vec<u64>) {
        refine(self.g, &mut cells);

        let fixed = cells.iter().take_while(|c| c.count_ones() == 1).count();
        if let Some((best_key, _)) = &self.best {
            // Columns of the fixed prefix are already determined.
            let prefix: Vec<usize> =
                cells[..fixed].iter().map(|c| c.trailing_zeros() as usize).collect();
            let partial = column_key(self.g, &prefix);
            if partial.as_slice() > &best_key[..fixed] {
                return;
            }
        }

        if fixed == cells.len() {
            let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
            let key = column_key(self.g, &order);
            if self.best.as_ref().is_none_or(|(b, _)| key < *b) {
                self.best = Some((key, order));
            }
            return;
        }

        let target = fixed;
        let cell = cells[target];
        let rows = self.g.rows();
        let mut tried = 0u64;
        for v in Bits(cell) {
            // Twins inside one cell are swapped by an automorphism that
            // fixes the current partition, so their subtrees coincide.
            let twin = Bits(tried).any(|w| {
                rows[v] & !(1 << w) == rows[w] & !(1 << v)
            });
            if twin {
                continue;
            }
            tried |= 1 << v;
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(1 << v);
            next.push(cell & !(1 << v));
            next.extend_from_slice(&cells[target + 1..]);
            self.descend(next);
        }
    }
}

fn column_key(g: &Graph, order: &[usize]) -> Key {
    let rows = g.rows();
    order
        .iter()
        .enumerate()
        .map(|(j, &vj)| {
            order[..j]
                .iter()
                .enumerate()
                .filter(|&(_, &vi)| rows[vj] >> vi & 1 == 1)
                .fold(0u64, |acc, (i, _)| acc | 1 << (63 - i))
        })
        .collect()
}

/// Refines an ordered partition until it is equitable. Cells are split by
/// the number of neighbours in a splitter cell; the pieces keep ascending
/// count order.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let rows = g.rows();
    let mut splitter = 0;
    while splitter < cells.len() {
        let w = cells[splitter];
        let mut split_any = false;
        let mut next = Vec::with_capacity(cells.len() + 4);
        for &cell in cells.iter() {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut buckets: Vec<(u32, u64)> = Vec::new();
            for v in Bits(cell) {
                let c = (rows[v] & w).count_ones();
                match buckets.iter_mut().find(|(k, _)| *k == c) {
                    Some((_, m)) => *m |= 1 << v,
                    None => buckets.push((c, 1 << v)),
                }
            }
            if buckets.len() > 1 {
                split_any = true;
                buckets.sort_unstable_by_key(|&(k, _)| k);
            }
            next.extend(buckets.into_iter().map(|(_, m)| m));
        }
        *cells = next;
        splitter = if split_any { 0 } else { splitter + 1 };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::pattern;

    #[test]
    fn isomorphism_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(is_isomorphic(&c5, &c5.complement()));
        let p4 = Graph::path(4).unwrap();
        let claw = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!is_isomorphic(&p4, &claw));
        let chair = &pattern("Chair").unwrap().graph;
        let kite = &pattern("Kite").unwrap().graph;
        assert!(is_isomorphic(chair, &kite.complement()));
    }

    #[test]
    fn isomorphism_map_is_valid() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let h = g.relabel(&[3, 0, 4, 2, 1]).unwrap();
        let map = find_isomorphism(&g, &h).unwrap();
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(g.has_edge(u, v), h.has_edge(map[u], map[v]));
            }
        }
    }

    #[test]
    fn canonical_examples() {
        let p4 = Graph::path(4).unwrap();
        // 2 - 0 - 3 - 1
        let p4b = Graph::new(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_form(&p4), canonical_form(&p4b));
        assert_ne!(
            canonical_form(&Graph::complete(3).unwrap()),
            canonical_form(&Graph::path(3).unwrap())
        );
    }

    #[test]
    fn canonical_graph_is_fixed_point() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 3)]).unwrap();
        let c = canonical_graph(&g);
        assert!(is_isomorphic(&g, &c));
        assert_eq!(canonical_graph(&c), c);
    }

    #[test]
    fn symmetric_graphs_are_cheap() {
        // Twin pruning keeps these from visiting n! leaves.
        for n in [0, 1, 9, 12] {
            let e = Graph::empty(n).unwrap();
            assert_eq!(canonical_graph(&e), e);
            let k = Graph::complete(n).unwrap();
            assert_eq!(canonical_graph(&k), k);
        }
        let star = Graph::new(10, &(1..10).map(|v| (0, v)).collect::<Vec<_>>()).unwrap();
        assert!(is_isomorphic(&canonical_graph(&star), &star));
    }
}
