//! Isomorphism-free generation of graphs with a prescribed degree sequence,
//! and of all graphs on a small number of vertices.
//!
//! Vertices are processed one at a time; each one takes its remaining
//! neighbours from the later vertices. Later vertices that agree on target
//! degree, residual degree and adjacency to the processed part are
//! interchangeable, so only prefixes of each such class are tried. Residual
//! degrees must stay graphic (Erdős–Gallai), which makes every branch
//! completable. Leaves are reduced to canonical form and deduplicated.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::graph::{bits, canonical_form, is_graphic, low_mask, DegreeSequence, Graph};

/// Which end of the degree sequence is placed first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexOrder {
    HighDegreeFirst,
    LowDegreeFirst,
}

#[derive(Clone, Debug)]
pub struct EnumerationOptions {
    pub connected_only: bool,
    pub order: VertexOrder,
    /// Keep only graphs with exactly this many triangles (pruned during search).
    pub triangles: Option<u64>,
    /// Stop after this many search nodes; the result is then marked incomplete.
    pub node_budget: Option<u64>,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            connected_only: false,
            order: VertexOrder::HighDegreeFirst,
            triangles: None,
            node_budget: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    /// Canonical representatives, sorted.
    pub graphs: Vec<Graph>,
    /// Search nodes visited.
    pub nodes: u64,
    /// Leaves reached before deduplication.
    pub leaves: u64,
    /// False when the sequence fails the Erdős–Gallai test.
    pub feasible: bool,
    /// False when the node budget ran out.
    pub complete: bool,
}

#[derive(Clone)]
struct State {
    /// Vertex `i` is the next to receive its neighbours.
    next: usize,
    rows: Vec<u64>,
    residual: Vec<usize>,
    triangles: u64,
}

struct Search<'a> {
    targets: &'a [usize],
    opts: &'a EnumerationOptions,
}

#[derive(Default)]
struct Harvest {
    forms: HashSet<Vec<u64>>,
    nodes: u64,
    leaves: u64,
    exhausted: bool,
}

impl Harvest {
    fn merge(mut self, other: Harvest) -> Harvest {
        if self.forms.len() < other.forms.len() {
            return other.merge(self);
        }
        self.forms.extend(other.forms);
        self.nodes += other.nodes;
        self.leaves += other.leaves;
        self.exhausted |= other.exhausted;
        self
    }
}

impl Search<'_> {
    fn n(&self) -> usize {
        self.targets.len()
    }

    /// Children of a state: every class-prefix choice of neighbours for `next`.
    fn children(&self, s: &State, out: &mut Vec<State>) {
        let i = s.next;
        let n = self.n();
        let need = s.residual[i];
        let before = low_mask(i);
        // classes of later vertices with spare degree
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut keys: Vec<(usize, usize, u64)> = Vec::new();
        for j in i + 1..n {
            if s.residual[j] == 0 {
                continue;
            }
            let key = (self.targets[j], s.residual[j], s.rows[j] & before);
            match keys.iter().position(|k| *k == key) {
                Some(c) => classes[c].push(j),
                None => {
                    keys.push(key);
                    classes.push(vec![j]);
                }
            }
        }
        let available: usize = classes.iter().map(Vec::len).sum();
        if available < need {
            return;
        }
        let mut counts = vec![0usize; classes.len()];
        self.compose(s, &classes, &mut counts, 0, need, out);
    }

    fn compose(
        &self,
        s: &State,
        classes: &[Vec<usize>],
        counts: &mut [usize],
        k: usize,
        left: usize,
        out: &mut Vec<State>,
    ) {
        if k == classes.len() {
            if left == 0 {
                if let Some(child) = self.apply(s, classes, counts) {
                    out.push(child);
                }
            }
            return;
        }
        let rest: usize = classes[k + 1..].iter().map(Vec::len).sum();
        let lo = left.saturating_sub(rest);
        let hi = left.min(classes[k].len());
        // larger counts first keeps high-degree joins early
        for c in (lo..=hi).rev() {
            counts[k] = c;
            self.compose(s, classes, counts, k + 1, left - c, out);
        }
        counts[k] = 0;
    }

    fn apply(&self, s: &State, classes: &[Vec<usize>], counts: &[usize]) -> Option<State> {
        let i = s.next;
        let n = self.n();
        let before = low_mask(i);
        let mut rows = s.rows.clone();
        let mut residual = s.residual.clone();
        let mut triangles = s.triangles;
        for (class, &c) in classes.iter().zip(counts) {
            for &j in &class[..c] {
                if self.opts.triangles.is_some() {
                    triangles += (rows[i] & rows[j] & before).count_ones() as u64;
                }
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
                residual[j] -= 1;
            }
        }
        residual[i] = 0;
        if let Some(t) = self.opts.triangles {
            if triangles > t {
                return None;
            }
        }
        let rest = &residual[i + 1..];
        if !is_graphic(rest) {
            return None;
        }
        if self.opts.connected_only && !can_connect(&rows, &residual, i, n) {
            return None;
        }
        Some(State {
            next: i + 1,
            rows,
            residual,
            triangles,
        })
    }

    fn is_leaf(&self, s: &State) -> bool {
        s.next >= self.n() || s.residual[s.next..].iter().all(|&r| r == 0)
    }

    fn accept(&self, s: &State) -> bool {
        if let Some(t) = self.opts.triangles {
            if s.triangles != t {
                return false;
            }
        }
        !self.opts.connected_only || Graph::from_rows(s.rows.clone()).is_ok_and(|g| g.is_connected())
    }

    fn explore(&self, root: State, budget: Option<u64>) -> Harvest {
        let mut h = Harvest::default();
        let mut stack = vec![root];
        let mut kids = Vec::new();
        while let Some(s) = stack.pop() {
            h.nodes += 1;
            if budget.is_some_and(|b| h.nodes > b) {
                h.exhausted = true;
                break;
            }
            if self.is_leaf(&s) {
                h.leaves += 1;
                if self.accept(&s) {
                    let g = Graph::from_rows(s.rows).expect("search keeps rows symmetric");
                    h.forms.insert(canonical_form(&g).graph.rows().to_vec());
                }
                continue;
            }
            kids.clear();
            self.children(&s, &mut kids);
            stack.extend(kids.drain(..).rev());
        }
        h
    }
}

/// Whether the decided edges plus possible future edges among vertices with
/// spare degree can still connect everything.
fn can_connect(rows: &[u64], residual: &[usize], i: usize, n: usize) -> bool {
    let all = low_mask(n);
    let open: u64 = (i + 1..n)
        .filter(|&j| residual[j] > 0)
        .fold(0, |m, j| m | 1 << j);
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0u64;
        for v in bits(frontier) {
            next |= rows[v];
        }
        if next & open != 0 {
            next |= open;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == all
}

/// All graphs with the given degree sequence, one canonical representative
/// per isomorphism class.
pub fn enumerate_graphs(seq: &DegreeSequence, opts: &EnumerationOptions) -> Enumeration {
    let n = seq.len();
    let mut targets: Vec<usize> = seq.as_slice().to_vec();
    if opts.order == VertexOrder::LowDegreeFirst {
        targets.reverse();
    }
    if !seq.is_graphic() {
        return Enumeration {
            graphs: Vec::new(),
            nodes: 0,
            leaves: 0,
            feasible: false,
            complete: true,
        };
    }
    if opts.connected_only && n > 1 && targets.contains(&0) {
        return Enumeration {
            graphs: Vec::new(),
            nodes: 0,
            leaves: 0,
            feasible: true,
            complete: true,
        };
    }
    let search = Search {
        targets: &targets,
        opts,
    };
    let root = State {
        next: 0,
        rows: vec![0; n],
        residual: targets.clone(),
        triangles: 0,
    };

    // expand breadth-first until there is enough work to spread across threads
    let mut frontier = vec![root];
    let mut settled = Harvest::default();
    let want = rayon::current_num_threads() * 16;
    while !frontier.is_empty() && frontier.len() < want {
        let mut next = Vec::new();
        let mut kids = Vec::new();
        let mut progressed = false;
        for s in frontier {
            if search.is_leaf(&s) {
                settled = settled.merge(search.explore(s, None));
                continue;
            }
            settled.nodes += 1;
            kids.clear();
            search.children(&s, &mut kids);
            progressed = true;
            next.append(&mut kids);
        }
        frontier = next;
        if !progressed {
            break;
        }
    }

    let per_task = opts
        .node_budget
        .map(|b| b.saturating_sub(settled.nodes) / frontier.len().max(1) as u64 + 1);
    let harvest = frontier
        .into_par_iter()
        .map(|s| search.explore(s, per_task))
        .reduce(Harvest::default, Harvest::merge)
        .merge(settled);

    let mut graphs: Vec<Graph> = harvest
        .forms
        .into_iter()
        .map(|rows| Graph::from_rows(rows).expect("canonical rows are valid"))
        .collect();
    graphs.sort();
    Enumeration {
        graphs,
        nodes: harvest.nodes,
        leaves: harvest.leaves,
        feasible: true,
        complete: !harvest.exhausted,
    }
}

/// Every nonincreasing graphic sequence of length `n`.
pub fn graphic_sequences(n: usize) -> Vec<DegreeSequence> {
    fn rec(n: usize, prefix: &mut Vec<usize>, max: usize, out: &mut Vec<DegreeSequence>) {
        if prefix.len() == n {
            if is_graphic(prefix) {
                out.push(DegreeSequence::from_unsorted(prefix.clone()));
            }
            return;
        }
        for d in (0..=max).rev() {
            prefix.push(d);
            rec(n, prefix, d, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::with_capacity(n), n - 1, &mut out);
    }
    out
}

/// Largest order accepted by the unconstrained census.
pub const CENSUS_MAX_ORDER: usize = 8;

/// How a census was generated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CensusMethod {
    /// Union over all graphic degree sequences.
    DegreeSequences,
    /// Adding one vertex at a time to every smaller graph.
    VertexAugmentation,
}

/// All graphs on `n` vertices up to isomorphism, sorted.
///
/// # Panics
/// If `n` is zero or above [`CENSUS_MAX_ORDER`].
pub fn census(n: usize, method: CensusMethod) -> Vec<Graph> {
    assert!(
        (1..=CENSUS_MAX_ORDER).contains(&n),
        "census supports 1..={CENSUS_MAX_ORDER} vertices"
    );
    match method {
        CensusMethod::DegreeSequences => {
            let mut all: Vec<Graph> = graphic_sequences(n)
                .par_iter()
                .flat_map_iter(|seq| enumerate_graphs(seq, &EnumerationOptions::default()).graphs)
                .collect();
            all.sort();
            all
        }
        CensusMethod::VertexAugmentation => {
            let mut level = vec![Graph::empty(1).expect("one vertex")];
            for k in 2..=n {
                let forms: HashSet<Vec<u64>> = level
                    .par_iter()
                    .flat_map_iter(|g| {
                        (0..1u64 << (k - 1)).map(move |mask| {
                            let mut rows: Vec<u64> = g.rows().to_vec();
                            for v in bits(mask) {
                                rows[v] |= 1 << (k - 1);
                            }
                            rows.push(mask);
                            let h = Graph::from_rows(rows).expect("augmented rows are valid");
                            canonical_form(&h).graph.rows().to_vec()
                        })
                    })
                    .collect();
                level = forms
                    .into_iter()
                    .map(|r| Graph::from_rows(r).expect("canonical rows are valid"))
                    .collect();
                level.sort();
            }
            level
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(d: &[usize]) -> DegreeSequence {
        DegreeSequence::new(d.to_vec()).unwrap()
    }

    #[test]
    fn triangle_is_unique() {
        let e = enumerate_graphs(&seq(&[2, 2, 2]), &EnumerationOptions::default());
        assert_eq!(e.graphs.len(), 1);
        assert_eq!(e.graphs[0].edge_count(), 3);
    }

    #[test]
    fn two_regular_on_six() {
        // C6 and 2C3
        let all = enumerate_graphs(&seq(&[2; 6]), &EnumerationOptions::default());
        assert_eq!(all.graphs.len(), 2);
        let conn = enumerate_graphs(
            &seq(&[2; 6]),
            &EnumerationOptions {
                connected_only: true,
                ..Default::default()
            },
        );
        assert_eq!(conn.graphs.len(), 1);
    }

    #[test]
    fn non_graphic_is_flagged() {
        let e = enumerate_graphs(&seq(&[3, 3, 1, 1]), &EnumerationOptions::default());
        assert!(!e.feasible);
        assert!(e.graphs.is_empty());
    }

    #[test]
    fn cubic_on_eight_both_orders() {
        for order in [VertexOrder::HighDegreeFirst, VertexOrder::LowDegreeFirst] {
            let e = enumerate_graphs(
                &seq(&[3; 8]),
                &EnumerationOptions {
                    order,
                    ..Default::default()
                },
            );
            assert_eq!(e.graphs.len(), 6, "{order:?}");
        }
    }

    #[test]
    fn triangle_filter_matches_post_filter() {
        let s = seq(&[3, 3, 3, 3, 2, 2, 2]);
        let all = enumerate_graphs(&s, &EnumerationOptions::default());
        for t in 0..=4 {
            let filtered = enumerate_graphs(
                &s,
                &EnumerationOptions {
                    triangles: Some(t),
                    ..Default::default()
                },
            );
            let expect: Vec<Graph> = all
                .graphs
                .iter()
                .filter(|g| g.triangle_count() == t)
                .cloned()
                .collect();
            assert_eq!(filtered.graphs, expect, "t = {t}");
        }
    }

    #[test]
    fn small_census_counts() {
        let expect = [1, 2, 4, 11, 34, 156];
        for (n, &count) in (1..=6).zip(&expect) {
            assert_eq!(census(n, CensusMethod::DegreeSequences).len(), count);
            assert_eq!(census(n, CensusMethod::VertexAugmentation).len(), count);
        }
    }

    #[test]
    fn budget_marks_incomplete() {
        let e = enumerate_graphs(
            &seq(&[3; 10]),
            &EnumerationOptions {
                node_budget: Some(10),
                ..Default::default()
            },
        );
        assert!(!e.complete);
    }
}
