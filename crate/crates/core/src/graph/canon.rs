//! Canonical labelling by individualization and refinement.
//!
//! The search starts from the degree partition (highest degree first),
//! refines it to an equitable ordered partition, then branches on the first
//! non-singleton cell. Every discrete leaf defines a relabelling; the
//! canonical form is the leaf whose adjacency matrix, read row by row, is
//! lexicographically smallest. Branches are skipped when a twin or a known
//! automorphism fixing the current prefix maps them onto an explored sibling.

use super::{bits, low_mask, Graph};

/// A canonical representative together with the relabelling that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub graph: Graph,
    /// `relabeling[v]` is the canonical label of input vertex `v`.
    pub relabeling: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> Canonical {
    let n = g.order();
    let mut cells = vec![low_mask(n)];
    refine(g, &mut cells);
    let mut search = Search {
        g,
        best_key: Vec::new(),
        best_labels: Vec::new(),
        autos: Vec::new(),
    };
    let mut prefix = Vec::with_capacity(n);
    search.descend(cells, &mut prefix);
    let relabeling = search.best_labels;
    Canonical {
        graph: g.permuted(&relabeling),
        relabeling,
    }
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_form(g).graph == canonical_form(h).graph
}

/// Splits cells until every vertex in a cell has the same number of
/// neighbours in every cell. Sub-cells are ordered by decreasing count.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut scratch: Vec<(u32, usize)> = Vec::with_capacity(64);
    let mut splitter = 0;
    while splitter < cells.len() {
        let w = cells[splitter];
        let mut split_any = false;
        let mut out = Vec::with_capacity(cells.len() + 4);
        for &cell in cells.iter() {
            if cell.count_ones() == 1 {
                out.push(cell);
                continue;
            }
            scratch.clear();
            scratch.extend(bits(cell).map(|v| ((g.neighbors(v) & w).count_ones(), v)));
            let first = scratch[0].0;
            if scratch.iter().all(|&(c, _)| c == first) {
                out.push(cell);
                continue;
            }
            split_any = true;
            scratch.sort_unstable_by_key(|e| std::cmp::Reverse(e.0));
            let mut current = 0u64;
            let mut current_count = scratch[0].0;
            for &(c, v) in &scratch {
                if c != current_count {
                    out.push(current);
                    current = 0;
                    current_count = c;
                }
                current |= 1 << v;
            }
            out.push(current);
        }
        *cells = out;
        splitter = if split_any { 0 } else { splitter + 1 };
    }
}

struct Search<'a> {
    g: &'a Graph,
    best_key: Vec<u64>,
    best_labels: Vec<usize>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) {
        let n = self.g.order();
        if cells.len() == n {
            self.leaf(&cells);
            return;
        }
        let target = cells
            .iter()
            .position(|c| c.count_ones() > 1)
            .expect("non-discrete partition has a non-singleton cell");
        let cell = cells[target];
        let mut explored: Vec<usize> = Vec::new();
        let mut orbits: Option<(usize, Vec<usize>)> = None;

        for v in bits(cell) {
            if explored.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            if !self.autos.is_empty() && !explored.is_empty() {
                let stale = orbits.as_ref().is_none_or(|(seen, _)| *seen != self.autos.len());
                if stale {
                    orbits = Some((self.autos.len(), self.stabilizer_orbits(prefix, n)));
                }
                let (_, roots) = orbits.as_ref().unwrap();
                if explored.iter().any(|&u| roots[u] == roots[v]) {
                    continue;
                }
            }
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(1 << v);
            next.push(cell & !(1 << v));
            next.extend_from_slice(&cells[target + 1..]);
            refine(self.g, &mut next);
            prefix.push(v);
            self.descend(next, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn leaf(&mut self, cells: &[u64]) {
        let n = self.g.order();
        let mut labels = vec![0usize; n];
        for (pos, &c) in cells.iter().enumerate() {
            labels[c.trailing_zeros() as usize] = pos;
        }
        let key = self.key(&labels);
        if self.best_key.is_empty() || key < self.best_key {
            self.best_key = key;
            self.best_labels = labels;
        } else if key == self.best_key {
            // best⁻¹ ∘ labels is an automorphism
            let mut inv_best = vec![0usize; n];
            for (v, &p) in self.best_labels.iter().enumerate() {
                inv_best[p] = v;
            }
            let gamma: Vec<usize> = labels.iter().map(|&p| inv_best[p]).collect();
            if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                self.autos.push(gamma);
            }
        }
    }

    /// Row-major adjacency of the relabelled graph, column 0 most significant.
    fn key(&self, labels: &[usize]) -> Vec<u64> {
        let n = self.g.order();
        let mut key = vec![0u64; n];
        for u in 0..n {
            let mut row = 0u64;
            for v in bits(self.g.neighbors(u)) {
                row |= 1 << labels[v];
            }
            key[labels[u]] = row.reverse_bits();
        }
        key
    }

    #[inline]
    fn twins(&self, u: usize, v: usize) -> bool {
        let diff = self.g.neighbors(u) ^ self.g.neighbors(v);
        diff & !((1 << u) | (1 << v)) == 0
    }

    /// Orbit representatives under the known automorphisms that fix `prefix` pointwise.
    fn stabilizer_orbits(&self, prefix: &[usize], n: usize) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gamma in &self.autos {
            if prefix.iter().any(|&v| gamma[v] != v) {
                continue;
            }
            for (v, &w) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, NamedGraph};
    use rand::seq::SliceRandom;
    use rand::{rngs::StdRng, SeedableRng};

    fn shuffled(g: &Graph, rng: &mut StdRng) -> Graph {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(rng);
        g.permuted(&perm)
    }

    #[test]
    fn petersen_is_label_invariant() {
        let p = build_named(&NamedGraph::Petersen).unwrap();
        let canon = canonical_form(&p).graph;
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..100 {
            assert_eq!(canonical_form(&shuffled(&p, &mut rng)).graph, canon);
        }
    }

    #[test]
    fn relabeling_reproduces_canonical_graph() {
        let p = build_named(&NamedGraph::Petersen).unwrap();
        let c = canonical_form(&Graph::multicone(2, &p).unwrap());
        let g = Graph::multicone(2, &p).unwrap();
        assert_eq!(g.permuted(&c.relabeling), c.graph);
    }

    #[test]
    fn cycle_and_star_differ() {
        let c4 = build_named(&NamedGraph::Cycle(4)).unwrap();
        let k13 = build_named(&NamedGraph::Star(3)).unwrap();
        assert_ne!(canonical_form(&c4).graph, canonical_form(&k13).graph);
        assert!(!is_isomorphic(&c4, &k13));
    }

    #[test]
    fn apex_of_cone_gets_label_zero() {
        let p = build_named(&NamedGraph::Petersen).unwrap();
        let cone = Graph::multicone(1, &p).unwrap();
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..10 {
            let mut perm: Vec<usize> = (0..11).collect();
            perm.shuffle(&mut rng);
            let g = cone.permuted(&perm);
            let c = canonical_form(&g);
            assert_eq!(c.relabeling[perm[0]], 0);
            assert_eq!(c.graph.degree(0), 10);
        }
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        for g in [
            Graph::complete(40).unwrap(),
            Graph::empty(64).unwrap(),
            build_named(&NamedGraph::CompleteBipartite(20, 20)).unwrap(),
            build_named(&NamedGraph::Cycle(30)).unwrap(),
        ] {
            let c = canonical_form(&g);
            assert_eq!(g.permuted(&c.relabeling), c.graph);
        }
        let k3 = Graph::complete(3).unwrap();
        let mut many = k3.clone();
        for _ in 0..9 {
            many = many.disjoint_union(&k3).unwrap();
        }
        let mut rng = StdRng::seed_from_u64(3);
        assert_eq!(
            canonical_form(&shuffled(&many, &mut rng)).graph,
            canonical_form(&many).graph
        );
    }

    #[test]
    fn petersen_complement_pair_is_distinguished_from_relatives() {
        // two non-isomorphic cubic graphs on 6 vertices
        let prism = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        let k33 = build_named(&NamedGraph::CompleteBipartite(3, 3)).unwrap();
        assert!(!is_isomorphic(&prism, &k33));
        let mut rng = StdRng::seed_from_u64(5);
        assert!(is_isomorphic(&prism, &shuffled(&prism, &mut rng)));
    }
}
