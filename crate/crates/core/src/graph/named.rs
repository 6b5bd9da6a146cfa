use super::{Graph, GraphError, Result};

/// The standard graph families understood by [`build_named`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    /// `K_n`
    Complete(usize),
    /// `nK_1`
    Empty(usize),
    /// `C_n`, `n >= 3`
    Cycle(usize),
    /// `P_n` on `n` vertices
    Path(usize),
    /// `K_{1,k}`; the centre is vertex 0
    Star(usize),
    /// `K_{a,b}`; the first part is `0..a`
    CompleteBipartite(usize, usize),
    /// Kneser graph K(5,2)
    Petersen,
}

/// All 2-subsets of {0..4} in lexicographic order: vertex `i` of the
/// Petersen graph is `PETERSEN_PAIRS[i]`.
const PETERSEN_PAIRS: [(u8, u8); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
];

pub fn build_named(spec: &NamedGraph) -> Result<Graph> {
    match *spec {
        NamedGraph::Complete(n) => Graph::complete(n),
        NamedGraph::Empty(n) => Graph::empty(n),
        NamedGraph::Cycle(n) => {
            if n < 3 {
                return Err(GraphError::BadParameter(format!("cycle needs n >= 3, got {n}")));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        NamedGraph::Path(n) => {
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        NamedGraph::Star(k) => {
            let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
            Graph::from_edges(k + 1, &edges)
        }
        NamedGraph::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return Err(GraphError::BadParameter(format!(
                    "complete bipartite parts must be nonempty, got ({a}, {b})"
                )));
            }
            let edges: Vec<_> = (0..a)
                .flat_map(|u| (a..a + b).map(move |v| (u, v)))
                .collect();
            Graph::from_edges(a + b, &edges)
        }
        NamedGraph::Petersen => {
            let mut edges = Vec::with_capacity(15);
            for (i, &(a, b)) in PETERSEN_PAIRS.iter().enumerate() {
                for (j, &(c, d)) in PETERSEN_PAIRS.iter().enumerate().skip(i + 1) {
                    if a != c && a != d && b != c && b != d {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(10, &edges)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_is_cubic_on_ten() {
        let p = build_named(&NamedGraph::Petersen).unwrap();
        assert_eq!(p.order(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!(p.degrees().iter().all(|&d| d == 3));
        assert_eq!(p.triangle_count(), 0);
    }

    #[test]
    fn petersen_has_girth_five() {
        let p = build_named(&NamedGraph::Petersen).unwrap();
        // no 4-cycles: adjacent-free pairs share exactly one neighbour
        for u in 0..10 {
            for v in (u + 1)..10 {
                let common = (p.neighbors(u) & p.neighbors(v)).count_ones();
                if p.has_edge(u, v) {
                    assert_eq!(common, 0);
                } else {
                    assert_eq!(common, 1);
                }
            }
        }
    }

    #[test]
    fn small_families() {
        let k1 = build_named(&NamedGraph::Complete(1)).unwrap();
        assert_eq!((k1.order(), k1.edge_count()), (1, 0));
        let c4 = build_named(&NamedGraph::Cycle(4)).unwrap();
        assert_eq!(c4.degrees(), vec![2, 2, 2, 2]);
        let star = build_named(&NamedGraph::Star(4)).unwrap();
        assert_eq!(star.degree(0), 4);
        let k23 = build_named(&NamedGraph::CompleteBipartite(2, 3)).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert_eq!(build_named(&NamedGraph::Path(1)).unwrap().edge_count(), 0);
        assert_eq!(build_named(&NamedGraph::Empty(5)).unwrap().edge_count(), 0);
    }

    #[test]
    fn parameter_errors() {
        assert!(build_named(&NamedGraph::Cycle(2)).is_err());
        assert!(build_named(&NamedGraph::Complete(0)).is_err());
        assert!(build_named(&NamedGraph::Complete(65)).is_err());
        assert!(build_named(&NamedGraph::CompleteBipartite(0, 3)).is_err());
    }
}
