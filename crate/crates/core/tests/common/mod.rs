//! Brute-force oracles shared by the integration tests. None of these call
//! into the solver, canonical-labelling or pattern-search code they check.

#![allow(dead_code)]

use reed_core::Graph;

/// Every labelled graph on `n` vertices.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> =
        (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |bits| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|&(b, _)| bits >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).unwrap()
    })
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Upper-triangle bits in graph6 order after sending vertex `v` to `perm[v]`.
fn encoding(g: &Graph, inverse: &[usize]) -> Vec<bool> {
    let n = g.order();
    let mut bits = Vec::with_capacity(n * n / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(inverse[i], inverse[j]));
        }
    }
    bits
}

/// Minimum adjacency encoding over all `n!` relabellings.
pub fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> Vec<bool> {
    perms.iter().map(|p| encoding(g, p)).min().unwrap_or_default()
}

pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let n = a.order();
    permutations(n)
        .iter()
        .any(|p| (0..n).all(|u| (0..n).all(|v| a.has_edge(u, v) == b.has_edge(p[u], p[v]))))
}

/// Smallest `k` with a proper assignment among all `k^n`.
pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let edges: Vec<_> = g.edges().collect();
    for k in 1..=n {
        let mut assign = vec![0usize; n];
        loop {
            if edges.iter().all(|&(u, v)| assign[u] != assign[v]) {
                return k;
            }
            // next assignment in base k
            let mut i = 0;
            while i < n {
                assign[i] += 1;
                if assign[i] < k {
                    break;
                }
                assign[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    unreachable!("n colours always suffice")
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..1u64 << n).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

pub fn brute_clique(g: &Graph) -> usize {
    subsets(g.order())
        .filter(|s| s.iter().all(|&u| s.iter().all(|&v| u == v || g.has_edge(u, v))))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

pub fn brute_independence(g: &Graph) -> usize {
    subsets(g.order())
        .filter(|s| s.iter().all(|&u| s.iter().all(|&v| !g.has_edge(u, v))))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Induced containment with no prefilter: every subset of the right size,
/// every bijection onto it.
pub fn brute_contains(host: &Graph, pattern: &Graph) -> bool {
    let k = pattern.order();
    if k > host.order() {
        return false;
    }
    let perms = permutations(k);
    subsets(host.order()).filter(|s| s.len() == k).any(|s| {
        perms.iter().any(|p| {
            (0..k).all(|a| (0..k).all(|b| pattern.has_edge(a, b) == host.has_edge(s[p[a]], s[p[b]])))
        })
    })
}

/// Is `colors` (1-based, 0 = uncoloured) proper on the coloured vertices?
pub fn proper(g: &Graph, colors: &[usize]) -> bool {
    g.edges().all(|(u, v)| colors[u] == 0 || colors[u] != colors[v])
}

/// Every proper colouring of `g` with colours `1..=k` in which colours
/// first appear in increasing order (one per partition into `<= k` classes).
pub fn colorings_up_to_renaming(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    fn rec(g: &Graph, k: usize, v: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if v == g.order() {
            out.push(cur.clone());
            return;
        }
        for c in 1..=(max + 1).min(k) {
            if (0..v).all(|w| !g.has_edge(v, w) || cur[w] != c) {
                cur.push(c);
                rec(g, k, v + 1, max.max(c), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(g, k, 0, 0, &mut Vec::new(), &mut out);
    out
}
