//! Dense labeled simple graphs on at most 64 vertices.
//!
//! Each adjacency row is a single `u64`, so neighbourhood intersections,
//! degree counts and complements are word operations.

mod canon;
mod named;
mod structure;

use std::fmt;

use thiserror::Error;

pub use canon::{canonical_form, is_isomorphic, Canonical};
pub use named::{build_named, NamedGraph};
pub use structure::{structure_report, BipartiteComponent, StructureReport};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("graph would have {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("parameter out of range: {0}")]
    BadParameter(String),
}

pub type Result<T> = std::result::Result<T, GraphError>;

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A simple undirected graph with vertices `0..n`.
///
/// Immutable once built; all operations return new graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { rows: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let all = low_mask(n);
        Ok(Graph {
            rows: (0..n).map(|v| all & !(1u64 << v)).collect(),
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut rows = vec![0u64; n];
        check_order(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(Graph { rows })
    }

    /// Builds a graph from adjacency rows, validating symmetry and the diagonal.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let mask = low_mask(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: 64 - (row & !mask).leading_zeros() as usize - 1,
                    n,
                });
            }
            if row >> u & 1 == 1 {
                return Err(GraphError::SelfLoop(u));
            }
            let mut rest = row;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if rows[v] >> u & 1 == 0 {
                    return Err(GraphError::BadParameter(format!(
                        "adjacency not symmetric at ({u}, {v})"
                    )));
                }
            }
        }
        Ok(Graph { rows })
    }

    /// Rows are trusted to be symmetric with an empty diagonal.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(!rows.is_empty() && rows.len() <= MAX_VERTICES);
        Graph { rows }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bit mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_unsorted(self.degrees())
    }

    pub fn min_degree(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(u, &row)| {
            let mut rest = row & !low_mask(u + 1);
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some((u, v))
            })
        })
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length mismatch");
        let mut rows = vec![0u64; self.order()];
        for (u, &row) in self.rows.iter().enumerate() {
            let mut out = 0u64;
            let mut rest = row;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out |= 1 << perm[v];
            }
            rows[perm[u]] = out;
        }
        Graph { rows }
    }

    pub fn complement(&self) -> Graph {
        let all = low_mask(self.order());
        Graph {
            rows: self
                .rows
                .iter()
                .enumerate()
                .map(|(v, &r)| !r & all & !(1u64 << v))
                .collect(),
        }
    }

    /// Disjoint copies of `self` and `other` plus every cross edge.
    /// Vertices of `self` keep their labels; `other` is shifted up.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let (n1, n2) = (self.order(), other.order());
        check_order(n1 + n2)?;
        let left = low_mask(n1);
        let right = low_mask(n1 + n2) & !left;
        let mut rows = Vec::with_capacity(n1 + n2);
        rows.extend(self.rows.iter().map(|&r| r | right));
        rows.extend(other.rows.iter().map(|&r| (r << n1) | left));
        Ok(Graph { rows })
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n1 = self.order();
        check_order(n1 + other.order())?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|&r| r << n1));
        Ok(Graph { rows })
    }

    /// `K_w ∇ g`; `w = 0` returns `g` unchanged.
    pub fn multicone(w: usize, g: &Graph) -> Result<Graph> {
        if w == 0 {
            return Ok(g.clone());
        }
        check_order(w + g.order())?;
        Graph::complete(w)?.join(g)
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<u64> {
        let n = self.order();
        let mut unseen = low_mask(n);
        let mut out = Vec::new();
        while unseen != 0 {
            let start = unseen.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.rows[v] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            unseen &= !comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let mut comp = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.rows[v] & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        comp == low_mask(self.order())
    }

    /// Subgraph induced by the vertices in `mask`, relabelled in increasing order.
    pub fn induced(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = bits(mask).collect();
        let rows = verts
            .iter()
            .map(|&u| {
                verts
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.has_edge(u, v))
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Graph { rows }
    }

    pub fn triangle_count(&self) -> u64 {
        let mut t = 0u64;
        for (u, v) in self.edges() {
            let above = !low_mask(v + 1);
            t += (self.rows[u] & self.rows[v] & above).count_ones() as u64;
        }
        t
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

fn check_order(n: usize) -> Result<()> {
    match n {
        0 => Err(GraphError::NoVertices),
        n if n > MAX_VERTICES => Err(GraphError::TooManyVertices(n)),
        _ => Ok(()),
    }
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let v = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(v)
    })
}

/// A degree sequence sorted in nonincreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(transparent)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Sorts the input; does not check graphicality.
    pub fn from_unsorted(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    /// Accepts a sequence only if it has even sum and every entry is below its length.
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        let n = degrees.len();
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if let Some(&d) = degrees.iter().find(|&&d| d >= n) {
            return Err(GraphError::BadParameter(format!(
                "degree {d} too large for {n} vertices"
            )));
        }
        if degrees.iter().sum::<usize>() % 2 == 1 {
            return Err(GraphError::BadParameter("degree sum is odd".into()));
        }
        Ok(Self::from_unsorted(degrees))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.0.iter().map(|&d| (d * d) as u64).sum()
    }

    pub fn sum_of_cubes(&self) -> u64 {
        self.0.iter().map(|&d| (d * d * d) as u64).sum()
    }

    /// Erdős–Gallai test.
    pub fn is_graphic(&self) -> bool {
        is_graphic(&self.0)
    }
}

impl fmt::Display for DegreeSequence {
    /// Run-length form, e.g. `(10, 4^10)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        let mut i = 0;
        let mut first = true;
        while i < self.0.len() {
            let d = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == d {
                j += 1;
            }
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            if j - i == 1 {
                write!(f, "{d}")?;
            } else {
                write!(f, "{d}^{}", j - i)?;
            }
            i = j;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for DegreeSequence {
    type Err = GraphError;

    /// Accepts the run-length form, with or without parentheses: `10, 4^10`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        let bad = |t: &str| GraphError::BadParameter(format!("bad degree entry `{t}`"));
        let mut degrees = Vec::new();
        for tok in s.split(',').map(str::trim) {
            let (d, k) = match tok.split_once('^') {
                Some((d, k)) => (d.trim(), k.trim().parse::<usize>().map_err(|_| bad(tok))?),
                None => (tok, 1),
            };
            let d: usize = d.parse().map_err(|_| bad(tok))?;
            if k > MAX_VERTICES {
                return Err(GraphError::TooManyVertices(k));
            }
            degrees.extend(std::iter::repeat_n(d, k));
            if degrees.len() > MAX_VERTICES {
                return Err(GraphError::TooManyVertices(degrees.len()));
            }
        }
        Self::new(degrees)
    }
}

/// Erdős–Gallai on an arbitrary (not necessarily sorted) slice.
pub fn is_graphic(degrees: &[usize]) -> bool {
    let mut d: Vec<usize> = degrees.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let n = d.len();
    if d.iter().sum::<usize>() % 2 == 1 {
        return false;
    }
    let mut prefix = 0usize;
    for k in 1..=n {
        prefix += d[k - 1];
        let tail: usize = d[k..].iter().map(|&x| x.min(k)).sum();
        if prefix > k * (k - 1) + tail {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        build_named(&NamedGraph::Petersen).unwrap()
    }

    #[test]
    fn join_of_single_vertices_is_an_edge() {
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(k1.join(&k1).unwrap(), Graph::complete(2).unwrap());
    }

    #[test]
    fn cone_over_petersen_counts() {
        let g = Graph::complete(1).unwrap().join(&petersen()).unwrap();
        assert_eq!(g.order(), 11);
        assert_eq!(g.edge_count(), 25);
        let mut expected = vec![4; 10];
        expected.insert(0, 10);
        assert_eq!(g.degree_sequence().as_slice(), expected.as_slice());

        let g2 = Graph::complete(2).unwrap().join(&petersen()).unwrap();
        assert_eq!((g2.order(), g2.edge_count()), (12, 36));
    }

    #[test]
    fn complement_is_an_involution_and_kills_cliques() {
        let p = petersen();
        assert_eq!(p.complement().complement(), p);
        assert_eq!(Graph::complete(4).unwrap().complement(), Graph::empty(4).unwrap());
    }

    #[test]
    fn complement_of_cone_isolates_the_apex() {
        let p = petersen();
        let cone = Graph::multicone(1, &p).unwrap();
        let direct = Graph::empty(1).unwrap().disjoint_union(&p.complement()).unwrap();
        assert_eq!(cone.complement(), direct);
        assert_eq!(cone.complement().degree(0), 0);
    }

    #[test]
    fn disjoint_union_counts() {
        let k3 = Graph::complete(3).unwrap();
        let two = k3.disjoint_union(&k3).unwrap();
        assert_eq!((two.order(), two.edge_count(), two.components().len()), (6, 6, 2));
        let c4 = build_named(&NamedGraph::Cycle(4)).unwrap();
        let u = Graph::complete(1).unwrap().disjoint_union(&c4).unwrap();
        assert_eq!((u.order(), u.edge_count()), (5, 4));
        assert_eq!(Graph::empty(0), Err(GraphError::NoVertices));
    }

    #[test]
    fn size_overflow_is_rejected() {
        let big = Graph::empty(40).unwrap();
        assert_eq!(big.join(&big), Err(GraphError::TooManyVertices(80)));
        assert_eq!(big.disjoint_union(&big), Err(GraphError::TooManyVertices(80)));
        assert_eq!(
            Graph::multicone(30, &big),
            Err(GraphError::TooManyVertices(70))
        );
    }

    #[test]
    fn multicone_edge_counts() {
        let p = petersen();
        assert_eq!(Graph::multicone(0, &p).unwrap(), p);
        for w in 1..=6usize {
            let g = Graph::multicone(w, &p).unwrap();
            assert_eq!(g.edge_count(), w * (w - 1) / 2 + 10 * w + 15);
        }
        assert_eq!(Graph::multicone(3, &p).unwrap().edge_count(), 48);
    }

    #[test]
    fn sixty_four_vertices_fit() {
        let k = Graph::complete(64).unwrap();
        assert_eq!(k.edge_count(), 64 * 63 / 2);
        assert!(k.complement().edges().next().is_none());
        assert_eq!(Graph::empty(65), Err(GraphError::TooManyVertices(65)));
    }

    #[test]
    fn from_rows_validates() {
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b01, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b100, 0b000]).is_err());
    }

    #[test]
    fn erdos_gallai_examples() {
        assert!(is_graphic(&[2, 2, 2]));
        assert!(is_graphic(&[3; 10]));
        assert!(!is_graphic(&[3, 3, 1, 1]));
        assert!(!is_graphic(&[1, 1, 1]));
        assert!(!is_graphic(&[4, 1, 1, 1]));
        assert!(is_graphic(&[0]));
    }

    #[test]
    fn degree_sequence_display() {
        let mut d = vec![4; 10];
        d.insert(0, 10);
        assert_eq!(DegreeSequence::new(d).unwrap().to_string(), "(10, 4^10)");
    }

    #[test]
    fn degree_sequence_parse_round_trip() {
        let d: DegreeSequence = "(10, 4^10)".parse().unwrap();
        assert_eq!(d.len(), 11);
        assert_eq!(d.to_string(), "(10, 4^10)");
        assert_eq!("3^10".parse::<DegreeSequence>().unwrap().as_slice(), &[3; 10]);
        assert!("3^3".parse::<DegreeSequence>().is_err());
        assert!("x".parse::<DegreeSequence>().is_err());
    }
}
