//! The verification pipeline: moments, then degree sequences, then
//! realizations, then exact comparison of characteristic polynomials.

use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{canonical_form, DegreeSequence, Graph};
use crate::io::cache::{charpoly_via, CharpolyCache};
use crate::poly::{factor_real_rooted, IntPolynomial};
use crate::spectra::MatrixKind;

use super::constraints::{moment_constraints, MomentConstraints};
use super::enumerate::{census, enumerate_graphs, CensusMethod, EnumerationOptions, VertexOrder};
use super::sequences::feasible_degree_sequences;
use super::{DsError, Result, CENSUS_MAX_ORDER};

/// Largest order searched in the degree-sequence scopes.
pub const DEGREE_SCOPE_MAX_ORDER: usize = 12;

/// Which graphs a verdict quantifies over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum Scope {
    /// Every graph realizing a degree sequence allowed by the moments of the
    /// target's polynomial.
    DegreeSequences,
    /// Every graph with one given degree sequence.
    Sequence { sequence: DegreeSequence },
    /// Every graph with the target's order.
    AllGraphs,
}

impl Scope {
    fn name(&self) -> &'static str {
        match self {
            Scope::DegreeSequences => "degree-sequences",
            Scope::Sequence { .. } => "sequence",
            Scope::AllGraphs => "all-graphs",
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions<'a> {
    /// Restrict the scope to connected graphs.
    pub connected_only: bool,
    /// Generate each degree sequence in both vertex orders and require equal
    /// counts.
    pub cross_check_orders: bool,
    pub cache: Option<&'a CharpolyCache>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceReport {
    pub sequence: DegreeSequence,
    /// Triangle count required by the third moment.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triangles: Option<u64>,
    /// Non-isomorphic realizations in scope.
    pub realizations: usize,
    /// Same count from the other vertex order, when cross-checked.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub realizations_low_first: Option<usize>,
    /// Realizations with the required triangle count.
    pub matching_triangles: usize,
    /// Realizations with the target's polynomial, the target included.
    pub cospectral: usize,
}

/// Search for disconnected graphs by splitting the polynomial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SplitReport {
    /// Candidate component polynomials examined.
    pub divisors: usize,
    /// Connected graphs found for some proper divisor.
    pub components: usize,
    /// Disconnected graphs with the target polynomial.
    pub disconnected: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyStats {
    /// Graphs whose polynomial was compared with the target's.
    pub candidates: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sequences: Vec<SequenceReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<SplitReport>,
    /// Wall time; not serialized so reports stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DSVerdict {
    /// Canonical form of the target.
    pub target: Graph,
    pub kind: MatrixKind,
    pub order: usize,
    pub scope: Scope,
    pub connected_only: bool,
    #[serde(serialize_with = "crate::io::json::polynomial")]
    pub polynomial: IntPolynomial,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constraints: Option<MomentConstraints>,
    /// Canonical non-isomorphic graphs with the same polynomial, sorted.
    pub mates: Vec<Graph>,
    pub determined: bool,
    pub stats: VerifyStats,
}

/// Finds every graph in `scope` that shares `target`'s `kind`-polynomial
/// without being isomorphic to it.
pub fn ds_verify(
    target: &Graph,
    kind: MatrixKind,
    scope: &Scope,
    opts: &VerifyOptions,
) -> Result<DSVerdict> {
    let start = Instant::now();
    let n = target.order();
    let limit = match scope {
        Scope::AllGraphs => CENSUS_MAX_ORDER,
        _ => DEGREE_SCOPE_MAX_ORDER,
    };
    if n > limit {
        return Err(DsError::ScopeTooLarge {
            scope: scope.name(),
            n,
            limit,
        });
    }
    let canon = canonical_form(target).graph;
    let p = charpoly_via(opts.cache, &canon, kind);
    let mut stats = VerifyStats::default();
    let mut constraints = None;
    let mut mates: BTreeSet<Graph> = BTreeSet::new();
    let consider = |g: Graph, stats: &mut VerifyStats| {
        stats.candidates += 1;
        g != canon && charpoly_via(opts.cache, &g, kind) == p
    };

    match scope {
        Scope::AllGraphs => {
            for g in census(n, CensusMethod::DegreeSequences) {
                if opts.connected_only && !g.is_connected() {
                    continue;
                }
                if consider(g.clone(), &mut stats) {
                    mates.insert(g);
                }
            }
        }
        Scope::Sequence { sequence } => {
            if sequence.len() != n {
                return Err(DsError::SequenceLength {
                    sequence: sequence.clone(),
                    expected: n,
                    found: sequence.len(),
                });
            }
            let (graphs, mut report) = realize(sequence, None, opts, opts.connected_only)?;
            for g in graphs {
                let same = g == canon;
                if consider(g.clone(), &mut stats) {
                    mates.insert(g);
                    report.cospectral += 1;
                } else if same {
                    report.cospectral += 1;
                }
            }
            report.matching_triangles = report.realizations;
            stats.sequences.push(report);
        }
        Scope::DegreeSequences => {
            let c = moment_constraints(&p, kind, true)?;
            for cand in feasible_degree_sequences(&c) {
                let (graphs, mut report) =
                    realize(&cand.sequence, Some(cand.triangles), opts, true)?;
                for g in graphs {
                    if g.triangle_count() != cand.triangles {
                        continue;
                    }
                    report.matching_triangles += 1;
                    let same = g == canon;
                    if consider(g.clone(), &mut stats) {
                        mates.insert(g);
                        report.cospectral += 1;
                    } else if same {
                        report.cospectral += 1;
                    }
                }
                stats.sequences.push(report);
            }
            constraints = Some(c);
            if !opts.connected_only && n > 1 {
                let mut split = Splitter::new(&p, kind, opts.cache)?;
                let found = split.disconnected(&split.full.clone());
                let mut report = split.report;
                report.disconnected = found.len();
                for g in found {
                    if consider(g.clone(), &mut stats) {
                        mates.insert(g);
                    }
                }
                stats.split = Some(report);
            }
        }
    }

    // every mate is rechecked without the cache
    for g in &mates {
        if crate::spectra::charpoly(g, kind) != p || *g == canon {
            return Err(DsError::NotCospectral(crate::io::graph6::emit(g)));
        }
    }
    stats.elapsed = start.elapsed();
    let mates: Vec<Graph> = mates.into_iter().collect();
    Ok(DSVerdict {
        target: canon,
        kind,
        order: n,
        scope: scope.clone(),
        connected_only: opts.connected_only,
        polynomial: p,
        constraints,
        determined: mates.is_empty(),
        mates,
        stats,
    })
}

/// All realizations of one sequence, optionally generated twice.
fn realize(
    seq: &DegreeSequence,
    triangles: Option<u64>,
    opts: &VerifyOptions,
    connected_only: bool,
) -> Result<(Vec<Graph>, SequenceReport)> {
    let base = EnumerationOptions {
        connected_only,
        ..Default::default()
    };
    let high = enumerate_graphs(seq, &base);
    let mut report = SequenceReport {
        sequence: seq.clone(),
        triangles,
        realizations: high.graphs.len(),
        realizations_low_first: None,
        matching_triangles: 0,
        cospectral: 0,
    };
    if opts.cross_check_orders {
        let low = enumerate_graphs(
            seq,
            &EnumerationOptions {
                order: VertexOrder::LowDegreeFirst,
                ..base
            },
        );
        report.realizations_low_first = Some(low.graphs.len());
        if low.graphs != high.graphs {
            return Err(DsError::OrderMismatch {
                sequence: seq.clone(),
                high_first: high.graphs.len(),
                low_first: low.graphs.len(),
            });
        }
    }
    Ok((high.graphs, report))
}

/// Exponent vector over the irreducible factors of the target polynomial.
type Exponents = Vec<usize>;

/// Disconnected graphs with a given polynomial, built as a smallest
/// connected component plus any graph on the remaining vertices. Component
/// polynomials range over the divisors of the target polynomial.
struct Splitter<'a> {
    kind: MatrixKind,
    cache: Option<&'a CharpolyCache>,
    factors: Vec<IntPolynomial>,
    full: Exponents,
    connected_memo: HashMap<Exponents, Vec<Graph>>,
    any_memo: HashMap<Exponents, Vec<Graph>>,
    report: SplitReport,
}

impl<'a> Splitter<'a> {
    fn new(p: &IntPolynomial, kind: MatrixKind, cache: Option<&'a CharpolyCache>) -> Result<Self> {
        let f = factor_real_rooted(p, None);
        if f.factors.iter().any(|x| !x.proven_irreducible) {
            return Err(DsError::Unfactored(p.to_string()));
        }
        Ok(Splitter {
            kind,
            cache,
            factors: f.factors.iter().map(|x| x.poly.clone()).collect(),
            full: f.factors.iter().map(|x| x.multiplicity).collect(),
            connected_memo: HashMap::new(),
            any_memo: HashMap::new(),
            report: SplitReport::default(),
        })
    }

    fn degree(&self, e: &Exponents) -> usize {
        e.iter()
            .zip(&self.factors)
            .map(|(&k, f)| k * f.degree())
            .sum()
    }

    fn poly(&self, e: &Exponents) -> IntPolynomial {
        e.iter()
            .zip(&self.factors)
            .fold(IntPolynomial::one(), |acc, (&k, f)| &acc * &f.pow(k))
    }

    /// Proper divisors of `e` of degree at most half of `e`'s.
    fn small_divisors(&self, e: &Exponents) -> Vec<Exponents> {
        let half = self.degree(e) / 2;
        let mut out = Vec::new();
        let mut cur = vec![0; e.len()];
        loop {
            let d = self.degree(&cur);
            if d >= 1 && d <= half {
                out.push(cur.clone());
            }
            // odometer over 0..=e[i]
            let mut i = 0;
            loop {
                if i == e.len() {
                    return out;
                }
                if cur[i] < e[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }

    fn connected(&mut self, e: &Exponents) -> Vec<Graph> {
        if let Some(v) = self.connected_memo.get(e) {
            return v.clone();
        }
        self.report.divisors += 1;
        let p = self.poly(e);
        let found = connected_with_polynomial(&p, self.kind, self.cache);
        self.report.components += found.len();
        self.connected_memo.insert(e.clone(), found.clone());
        found
    }

    fn any(&mut self, e: &Exponents) -> Vec<Graph> {
        if let Some(v) = self.any_memo.get(e) {
            return v.clone();
        }
        let mut all: BTreeSet<Graph> = self.connected(e).into_iter().collect();
        all.extend(self.disconnected(e));
        let all: Vec<Graph> = all.into_iter().collect();
        self.any_memo.insert(e.clone(), all.clone());
        all
    }

    fn disconnected(&mut self, e: &Exponents) -> Vec<Graph> {
        let mut out: BTreeSet<Graph> = BTreeSet::new();
        for d in self.small_divisors(e) {
            let comps = self.connected(&d);
            if comps.is_empty() {
                continue;
            }
            let rest_e: Exponents = e.iter().zip(&d).map(|(a, b)| a - b).collect();
            let rests = self.any(&rest_e);
            for c in &comps {
                for r in &rests {
                    let u = c.disjoint_union(r).expect("orders add up to the target's");
                    out.insert(canonical_form(&u).graph);
                }
            }
        }
        out.into_iter().collect()
    }
}

/// Connected graphs with exactly the polynomial `p`, canonical and sorted.
fn connected_with_polynomial(
    p: &IntPolynomial,
    kind: MatrixKind,
    cache: Option<&CharpolyCache>,
) -> Vec<Graph> {
    let n = p.degree();
    if n == 1 {
        let k1 = Graph::empty(1).expect("one vertex");
        return if crate::spectra::charpoly(&k1, kind) == *p {
            vec![k1]
        } else {
            Vec::new()
        };
    }
    // divisors whose moments fit no graph are simply unrealizable
    let Ok(c) = moment_constraints(p, kind, true) else {
        return Vec::new();
    };
    if kind == MatrixKind::L && !c.connected {
        return Vec::new();
    }
    let seqs = feasible_degree_sequences(&c);
    let mut found: Vec<Graph> = seqs
        .par_iter()
        .flat_map_iter(|cand| {
            enumerate_graphs(
                &cand.sequence,
                &EnumerationOptions {
                    connected_only: true,
                    triangles: Some(cand.triangles),
                    ..Default::default()
                },
            )
            .graphs
        })
        .filter(|g| charpoly_via(cache, g, kind) == *p)
        .collect();
    found.sort();
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, NamedGraph};

    #[test]
    fn star_and_square_plus_vertex() {
        let star = build_named(&NamedGraph::Star(4)).unwrap();
        let v = ds_verify(&star, MatrixKind::A, &Scope::AllGraphs, &VerifyOptions::default())
            .unwrap();
        assert_eq!(v.mates.len(), 1);
        let c4k1 = build_named(&NamedGraph::Cycle(4))
            .unwrap()
            .disjoint_union(&Graph::empty(1).unwrap())
            .unwrap();
        assert_eq!(v.mates[0], canonical_form(&c4k1).graph);
        assert!(!v.determined);
        assert_eq!(v.stats.candidates, 34);
    }

    #[test]
    fn degree_scope_finds_disconnected_mate() {
        // same pair under the moment-driven search
        let star = build_named(&NamedGraph::Star(4)).unwrap();
        let v = ds_verify(
            &star,
            MatrixKind::A,
            &Scope::DegreeSequences,
            &VerifyOptions::default(),
        )
        .unwrap();
        assert_eq!(v.mates.len(), 1);
        assert!(!v.mates[0].is_connected());
    }

    #[test]
    fn scope_limits_are_refused() {
        let g = build_named(&NamedGraph::Cycle(9)).unwrap();
        let err = ds_verify(&g, MatrixKind::Q, &Scope::AllGraphs, &VerifyOptions::default())
            .unwrap_err();
        assert!(err.is_scope_refusal());
        let g = build_named(&NamedGraph::Cycle(13)).unwrap();
        let err = ds_verify(&g, MatrixKind::Q, &Scope::DegreeSequences, &VerifyOptions::default())
            .unwrap_err();
        assert!(err.is_scope_refusal());
    }

    #[test]
    fn petersen_among_cubic_graphs() {
        let p = build_named(&NamedGraph::Petersen).unwrap();
        let v = ds_verify(
            &p,
            MatrixKind::Q,
            &Scope::Sequence {
                sequence: DegreeSequence::new(vec![3; 10]).unwrap(),
            },
            &VerifyOptions {
                cross_check_orders: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(v.determined);
        assert_eq!(v.stats.sequences[0].realizations, 21);
        assert_eq!(v.stats.sequences[0].realizations_low_first, Some(21));
    }

    #[test]
    fn small_divisors_cover_half() {
        let p = IntPolynomial::from_integer_roots(&[(0, 1), (2, 2)]);
        let s = Splitter::new(&p, MatrixKind::Q, None).unwrap();
        let ds = s.small_divisors(&s.full);
        assert!(ds.iter().all(|d| s.degree(d) == 1));
        assert_eq!(ds.len(), 2);
    }
}
