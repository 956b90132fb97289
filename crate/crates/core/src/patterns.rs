//! Named forbidden patterns, induced-subgraph detection and the four
//! hereditary graph classes.

use std::sync::OnceLock;

use serde::Serialize;

use crate::graph::{low_mask, Bits, Graph, VertexSet};
use crate::iso::{find_isomorphism, is_isomorphic};

/// A small named graph used as a forbidden induced subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    pub name: String,
    pub graph: Graph,
}

impl Pattern {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        Pattern { name: name.into(), graph }
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

/// A hereditary class given by its forbidden induced subgraphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSpec {
    pub name: String,
    pub alias: Option<String>,
    pub forbidden: Vec<Pattern>,
}

impl ClassSpec {
    pub fn new(name: impl Into<String>, forbidden: Vec<Pattern>) -> Self {
        ClassSpec { name: name.into(), alias: None, forbidden }
    }

    /// The class of all graphs (no forbidden patterns).
    pub fn all_graphs() -> Self {
        ClassSpec::new("all", Vec::new())
    }

    /// Looks up a registered class by name or alias, ignoring ASCII case.
    pub fn by_name(name: &str) -> Option<&'static ClassSpec> {
        registry().iter().find(|c| {
            c.name.eq_ignore_ascii_case(name)
                || c.alias.as_deref().is_some_and(|a| a.eq_ignore_ascii_case(name))
        })
    }

    pub fn contains(&self, g: &Graph) -> bool {
        is_in_class(g, self)
    }
}

/// An injective map from pattern vertices to host vertices whose image
/// induces a copy of the pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn image(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }

    /// Replays the witness property against `host` and `pattern`.
    pub fn verify(&self, host: &Graph, pattern: &Graph) -> bool {
        let k = pattern.order();
        if self.map.len() != k || self.image().len() != k {
            return false;
        }
        if self.map.iter().any(|&h| h >= host.order()) {
            return false;
        }
        (0..k).all(|a| {
            (0..k).all(|b| pattern.has_edge(a, b) == host.has_edge(self.map[a], self.map[b]))
        })
    }
}

fn build(name: &str, n: usize, edges: &[(usize, usize)]) -> Pattern {
    Pattern::new(name, Graph::new(n, edges).expect("catalog edge lists are valid"))
}

/// The pattern catalog.
///
/// `H` is the 3-sun: a triangle `{1, 2, 5}` with one degree-2 vertex on
/// each of its edges. `M` is the house on `0..=4` with apex `5` joined to
/// every house vertex.
pub fn catalog() -> &'static [Pattern] {
    static CATALOG: OnceLock<Vec<Pattern>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let house = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)];
        let mut m_edges = house.to_vec();
        m_edges.extend((0..5).map(|v| (v, 5)));
        vec![
            build("P4", 4, &[(0, 1), (1, 2), (2, 3)]),
            build("P4uK1", 5, &[(0, 1), (1, 2), (2, 3)]),
            build("2K2", 4, &[(0, 1), (2, 3)]),
            build("K2uK2bar", 4, &[(0, 1)]),
            build("Chair", 5, &[(0, 1), (1, 2), (2, 3), (1, 4)]),
            build("Kite", 5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4)]),
            build("House", 5, &house),
            build(
                "H",
                6,
                &[(0, 1), (0, 2), (1, 2), (1, 4), (1, 5), (2, 3), (2, 5), (3, 5), (4, 5)],
            ),
            build("M", 6, &m_edges),
        ]
    })
}

pub fn pattern(name: &str) -> Option<&'static Pattern> {
    catalog().iter().find(|p| p.name == name)
}

/// The four registered classes, `class1` to `class4`.
pub fn registry() -> &'static [ClassSpec] {
    static REGISTRY: OnceLock<Vec<ClassSpec>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let pick = |names: &[&str]| -> Vec<Pattern> {
            names.iter().map(|n| pattern(n).expect("catalog pattern").clone()).collect()
        };
        [
            ("class1", "P4K1-Kite", &["P4uK1", "Kite"]),
            ("class2", "Chair-Kite", &["Chair", "Kite"]),
            ("class3", "K2K2bar-H", &["K2uK2bar", "H"]),
            ("class4", "2K2-M", &["2K2", "M"]),
        ]
        .into_iter()
        .map(|(name, alias, forbidden)| ClassSpec {
            name: name.to_owned(),
            alias: Some(alias.to_owned()),
            forbidden: pick(forbidden),
        })
        .collect()
    })
}

/// Calls `f` on every `k`-subset of `pool` (as a bitmask) in lexicographic order
/// until it returns `true`.
pub(crate) fn any_subset(pool: u64, k: usize, mut f: impl FnMut(u64) -> bool) -> bool {
    let items: Vec<usize> = Bits(pool).collect();
    if k > items.len() {
        return false;
    }
    if k == 0 {
        return f(0);
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | 1 << items[i]);
        if f(mask) {
            return true;
        }
        let m = items.len();
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + m - k {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let i = i - 1;
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

struct Profile {
    order: usize,
    edges: usize,
    degrees: Vec<usize>,
}

impl Profile {
    fn of(p: &Graph) -> Self {
        Profile { order: p.order(), edges: p.edge_count(), degrees: p.degree_sequence() }
    }

    /// Degree-multiset prefilter on the subgraph induced by `mask`.
    fn admits(&self, host: &Graph, mask: u64) -> bool {
        let rows = host.rows();
        let mut degrees: Vec<usize> =
            Bits(mask).map(|v| (rows[v] & mask).count_ones() as usize).collect();
        if degrees.iter().sum::<usize>() != 2 * self.edges {
            return false;
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees == self.degrees
    }
}

fn search_induced(host: &Graph, p: &Graph, pool: u64, required: u64) -> Option<Embedding> {
    let prof = Profile::of(p);
    let k = prof.order;
    if k > host.order() {
        return None;
    }
    let free = pool & !required;
    let need = k.checked_sub(required.count_ones() as usize)?;
    let mut found = None;
    any_subset(free, need, |extra| {
        let mask = extra | required;
        if !prof.admits(host, mask) {
            return false;
        }
        let members: Vec<usize> = Bits(mask).collect();
        let sub = host.induced_by_order(&members);
        match find_isomorphism(p, &sub) {
            Some(map) => {
                found = Some(Embedding { map: map.into_iter().map(|i| members[i]).collect() });
                true
            }
            None => false,
        }
    });
    found
}

/// Some embedding of `p` as an induced subgraph of `host`.
pub fn find_induced(host: &Graph, p: &Pattern) -> Option<Embedding> {
    search_induced(host, &p.graph, low_mask(host.order()), 0)
}

pub fn contains_induced(host: &Graph, p: &Pattern) -> bool {
    find_induced(host, p).is_some()
}

/// Induced copies of `p` that use vertex `v`. Used when growing a graph
/// that is known to be `p`-free without `v`.
pub fn contains_induced_through(host: &Graph, p: &Pattern, v: usize) -> bool {
    v < host.order() && search_induced(host, &p.graph, low_mask(host.order()), 1 << v).is_some()
}

pub fn is_in_class(g: &Graph, c: &ClassSpec) -> bool {
    c.forbidden.iter().all(|p| !contains_induced(g, p))
}

/// The first forbidden pattern of `c` found in `g`, with its witness.
pub fn class_violation<'a>(g: &Graph, c: &'a ClassSpec) -> Option<(&'a Pattern, Embedding)> {
    c.forbidden.iter().find_map(|p| find_induced(g, p).map(|e| (p, e)))
}

pub fn is_self_complementary(g: &Graph) -> bool {
    is_isomorphic(g, &g.complement())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(name: &str) -> &'static Pattern {
        pattern(name).unwrap()
    }

    #[test]
    fn catalog_shapes() {
        assert_eq!(pat("Chair").graph.degree_sequence(), vec![3, 2, 1, 1, 1]);
        assert_eq!(pat("Kite").graph.degree_sequence(), vec![3, 3, 3, 2, 1]);
        let h = &pat("H").graph;
        assert_eq!(h.edge_count(), 9);
        assert_eq!(h.degree_sequence(), vec![4, 4, 4, 2, 2, 2]);
        let m = &pat("M").graph;
        assert_eq!(m.edge_count(), 11);
        assert_eq!(m.degree_sequence(), vec![5, 4, 4, 3, 3, 3]);
        assert!(catalog().iter().all(|p| (2..=6).contains(&p.order())));
        let mut names: Vec<_> = catalog().iter().map(|p| p.name.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), catalog().len());
    }

    #[test]
    fn subsets_are_enumerated_once() {
        let mut seen = Vec::new();
        any_subset(0b10110, 2, |m| {
            seen.push(m);
            false
        });
        assert_eq!(seen, vec![0b00110, 0b10010, 0b10100]);
        assert!(!any_subset(0b11, 3, |_| true));
        assert!(any_subset(0, 0, |m| m == 0));
    }

    #[test]
    fn containment_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(contains_induced(&c5, pat("P4")));
        assert!(!contains_induced(&Graph::complete(6).unwrap(), pat("2K2")));
        assert!(contains_induced(&Graph::path(6).unwrap(), pat("P4uK1")));
        assert!(!contains_induced(&Graph::path(3).unwrap(), pat("P4")));
    }

    #[test]
    fn find_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let e = find_induced(&c5, pat("P4")).unwrap();
        assert!(e.verify(&c5, &pat("P4").graph));
        assert_eq!(e.image().len(), 4);
        assert!(find_induced(&Graph::complete(4).unwrap(), pat("2K2")).is_none());
        let m = &pat("M").graph;
        let e = find_induced(m, pat("House")).unwrap();
        assert_eq!(e.image(), VertexSet::from_iter(0..5));
    }

    #[test]
    fn class_examples() {
        for n in 1..=7 {
            let k = Graph::complete(n).unwrap();
            assert!(registry().iter().all(|c| is_in_class(&k, c)));
        }
        let class4 = ClassSpec::by_name("class4").unwrap();
        let c6 = Graph::cycle(6).unwrap();
        assert!(!is_in_class(&c6, class4));
        let (p, e) = class_violation(&c6, class4).unwrap();
        assert_eq!(p.name, "2K2");
        assert!(e.verify(&c6, &p.graph));
        let class2 = ClassSpec::by_name("chair-kite").unwrap();
        assert!(is_in_class(&Graph::cycle(5).unwrap(), class2));
        assert!(ClassSpec::by_name("class9").is_none());
        assert!(is_in_class(&c6, &ClassSpec::all_graphs()));
    }

    #[test]
    fn through_vertex() {
        // P4 0-1-2-3 plus isolated 4: every copy of P4uK1 uses vertex 4
        let g = &pat("P4uK1").graph;
        assert!(contains_induced_through(g, pat("P4uK1"), 4));
        assert!(contains_induced_through(g, pat("P4"), 0));
        assert!(!contains_induced_through(g, pat("P4"), 4));
    }

    #[test]
    fn self_complementary_examples() {
        assert!(is_self_complementary(&Graph::cycle(5).unwrap()));
        assert!(is_self_complementary(&Graph::path(4).unwrap()));
        assert!(!is_self_complementary(&Graph::complete(3).unwrap()));
    }
}
