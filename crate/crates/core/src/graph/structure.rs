use serde::Serialize;

use super::{bits, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteComponent {
    /// Index into [`StructureReport::components`].
    pub component: usize,
    /// Equal colour classes. An isolated vertex is unbalanced.
    pub balanced: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    /// Vertex lists of the connected components, ordered by smallest vertex.
    pub components: Vec<Vec<usize>>,
    pub bipartite_components: Vec<BipartiteComponent>,
    pub regular: Option<usize>,
    /// `(low, high)` when exactly two distinct degrees occur.
    pub bidegreed: Option<(usize, usize)>,
    pub triangles: u64,
    pub min_degree: usize,
    pub max_degree: usize,
}

impl StructureReport {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn bipartite_count(&self) -> usize {
        self.bipartite_components.len()
    }

    pub fn balanced_count(&self) -> usize {
        self.bipartite_components.iter().filter(|c| c.balanced).count()
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartite_components.len() == self.components.len()
    }
}

pub fn structure_report(g: &Graph) -> StructureReport {
    let comps = g.components();
    let mut bipartite_components = Vec::new();
    for (idx, &comp) in comps.iter().enumerate() {
        if let Some((a, b)) = two_colour(g, comp) {
            bipartite_components.push(BipartiteComponent {
                component: idx,
                balanced: comp.count_ones() > 1 && a == b,
            });
        }
    }

    let degrees = g.degrees();
    let min_degree = *degrees.iter().min().unwrap_or(&0);
    let max_degree = *degrees.iter().max().unwrap_or(&0);
    let mut distinct = degrees.clone();
    distinct.sort_unstable();
    distinct.dedup();

    StructureReport {
        components: comps.iter().map(|&c| bits(c).collect()).collect(),
        bipartite_components,
        regular: (distinct.len() == 1).then_some(min_degree),
        bidegreed: (distinct.len() == 2).then(|| (distinct[0], distinct[1])),
        triangles: g.triangle_count(),
        min_degree,
        max_degree,
    }
}

/// Colour-class sizes of a connected vertex set, or `None` if it has an odd cycle.
fn two_colour(g: &Graph, comp: u64) -> Option<(u32, u32)> {
    let start = comp.trailing_zeros() as usize;
    let mut side = [0u64; 2];
    side[0] = 1 << start;
    let mut frontier = vec![(start, 0usize)];
    while let Some((v, c)) = frontier.pop() {
        let nbrs = g.neighbors(v);
        if nbrs & side[c] != 0 {
            return None;
        }
        let fresh = nbrs & !side[1 - c];
        side[1 - c] |= fresh;
        frontier.extend(bits(fresh).map(|u| (u, 1 - c)));
    }
    Some((side[0].count_ones(), side[1].count_ones()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, NamedGraph};

    #[test]
    fn petersen_report() {
        let r = structure_report(&build_named(&NamedGraph::Petersen).unwrap());
        assert!(r.is_connected());
        assert_eq!(r.regular, Some(3));
        assert_eq!(r.bipartite_count(), 0);
        assert_eq!(r.triangles, 0);
    }

    #[test]
    fn cone_over_petersen_is_bidegreed_with_fifteen_triangles() {
        let p = build_named(&NamedGraph::Petersen).unwrap();
        let r = structure_report(&Graph::multicone(1, &p).unwrap());
        assert!(r.is_connected());
        assert_eq!(r.bidegreed, Some((4, 10)));
        assert_eq!(r.triangles, 15);
    }

    #[test]
    fn isolated_vertex_is_unbalanced_bipartite() {
        let r = structure_report(&Graph::complete(1).unwrap());
        assert_eq!(r.component_count(), 1);
        assert_eq!(
            r.bipartite_components,
            vec![BipartiteComponent { component: 0, balanced: false }]
        );
    }

    #[test]
    fn c4_is_balanced() {
        let r = structure_report(&build_named(&NamedGraph::Cycle(4)).unwrap());
        assert_eq!(r.balanced_count(), 1);
        assert_eq!(r.regular, Some(2));
        let star = structure_report(&build_named(&NamedGraph::Star(3)).unwrap());
        assert_eq!((star.bipartite_count(), star.balanced_count()), (1, 0));
    }

    #[test]
    fn mixed_components() {
        // K2 + K3 + K1: one balanced, one non-bipartite, one unbalanced
        let g = Graph::complete(2)
            .unwrap()
            .disjoint_union(&Graph::complete(3).unwrap())
            .unwrap()
            .disjoint_union(&Graph::complete(1).unwrap())
            .unwrap();
        let r = structure_report(&g);
        assert_eq!(r.component_count(), 3);
        assert_eq!(r.bipartite_count(), 2);
        assert_eq!(r.balanced_count(), 1);
        assert_eq!(r.triangles, 1);
        assert_eq!(r.regular, None);
        assert_eq!(r.bidegreed, None);
    }
}
