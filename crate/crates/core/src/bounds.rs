//! Eigenvalue and degree bounds with their equality characterisations.
//!
//! Comparisons between an eigenvalue and an integer are exact: the
//! characteristic polynomial is real-rooted, so counting roots on either side
//! of an integer reduces to sign variations of a shifted polynomial.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graph::{structure_report, Graph, StructureReport};
use crate::poly::IntPolynomial;
use crate::spectra::{charpoly, spectrum_with_polynomial, Eigenvalue, ExactForm, MatrixKind};

/// Tolerance for comparisons that fall back to floating point.
pub const NUMERIC_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundError {
    #[error("negative radicand 8m - 4nδ + (δ+1)² = {disc} for n={n}, m={m}, δ={delta}")]
    NegativeRadicand { n: usize, m: usize, delta: usize, disc: i64 },
}

pub type Result<T> = std::result::Result<T, BoundError>;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundValue {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    pub numeric: f64,
}

impl BoundValue {
    fn int(v: i64) -> Self {
        BoundValue {
            exact: Some(v.to_string()),
            numeric: v as f64,
        }
    }

    fn eigen(e: &Eigenvalue) -> Self {
        BoundValue {
            exact: Some(e.exact_string()),
            numeric: e.numeric,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EqualityClass {
    Regular,
    /// Two degrees, `δ` and `n - 1`.
    BidegreedMinAndFull,
    None,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub name: &'static str,
    /// False when the hypothesis fails; the remaining fields are then vacuous.
    pub applicable: bool,
    pub left: BoundValue,
    pub right: BoundValue,
    pub holds: bool,
    pub equality: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<EqualityClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl BoundReport {
    fn not_applicable(name: &'static str) -> Self {
        BoundReport {
            name,
            applicable: false,
            left: BoundValue { exact: None, numeric: f64::NAN },
            right: BoundValue { exact: None, numeric: f64::NAN },
            holds: true,
            equality: false,
            classification: None,
            note: None,
        }
    }
}

pub const Q_MIN_DEGREE: &str = "q_n < min degree";
pub const Q_ADJACENT_LOWER: &str = "q_1 >= min adjacent degree sum";
pub const Q_ADJACENT_UPPER: &str = "q_1 <= max adjacent degree sum";
pub const Q_SECOND_LOWER: &str = "q_2 >= d_2 - 1";
pub const Q_SECOND_UPPER: &str = "q_2 <= n - 2";
pub const RADIUS_BOUND: &str = "rho <= (δ-1)/2 + sqrt(2m - nδ + (δ+1)²/4)";

/// Signless Laplacian eigenvalue counts relative to integers, exact.
struct RootCounter<'a> {
    p: &'a IntPolynomial,
}

impl RootCounter<'_> {
    fn above(&self, c: i64) -> usize {
        self.p.real_roots_above(&BigInt::from(c))
    }
    fn below(&self, c: i64) -> usize {
        self.p.real_roots_below(&BigInt::from(c))
    }
    fn at(&self, c: i64) -> usize {
        self.p.root_multiplicity(&BigInt::from(c))
    }
    fn at_least(&self, c: i64) -> usize {
        self.above(c) + self.at(c)
    }
}

/// The signless Laplacian degree bounds, evaluated exactly on `g`.
pub fn check_q_degree_bounds(g: &Graph) -> Vec<BoundReport> {
    let n = g.order();
    let p = charpoly(g, MatrixKind::Q);
    let spec = spectrum_with_polynomial(g, MatrixKind::Q, &p);
    let q: Vec<&Eigenvalue> = spec
        .entries()
        .iter()
        .flat_map(|e| std::iter::repeat_n(&e.value, e.multiplicity))
        .collect();
    let counter = RootCounter { p: &p };
    let report = structure_report(g);
    let ds = g.degree_sequence();
    let d = ds.as_slice();
    let mut out = Vec::with_capacity(5);

    // q_n < δ for connected graphs on more than one vertex
    if report.is_connected() && n > 1 {
        let delta = report.min_degree as i64;
        out.push(BoundReport {
            name: Q_MIN_DEGREE,
            applicable: true,
            left: BoundValue::eigen(q[n - 1]),
            right: BoundValue::int(delta),
            holds: counter.below(delta) >= 1,
            equality: false,
            classification: None,
            note: None,
        });
    } else {
        out.push(BoundReport::not_applicable(Q_MIN_DEGREE));
    }

    // min / max of d_u + d_v over edges
    if g.edge_count() > 0 {
        let sums: Vec<i64> = g
            .edges()
            .map(|(u, v)| (g.degree(u) + g.degree(v)) as i64)
            .collect();
        let lo = *sums.iter().min().expect("edges exist");
        let hi = *sums.iter().max().expect("edges exist");
        out.push(BoundReport {
            name: Q_ADJACENT_LOWER,
            applicable: true,
            left: BoundValue::eigen(q[0]),
            right: BoundValue::int(lo),
            holds: counter.at_least(lo) >= 1,
            equality: counter.above(lo) == 0 && counter.at(lo) >= 1,
            classification: None,
            note: None,
        });
        out.push(BoundReport {
            name: Q_ADJACENT_UPPER,
            applicable: true,
            left: BoundValue::eigen(q[0]),
            right: BoundValue::int(hi),
            holds: counter.above(hi) == 0,
            equality: counter.above(hi) == 0 && counter.at(hi) >= 1,
            classification: None,
            note: None,
        });
    } else {
        out.push(BoundReport::not_applicable(Q_ADJACENT_LOWER));
        out.push(BoundReport::not_applicable(Q_ADJACENT_UPPER));
    }

    // q_2 >= d_2 - 1, and equality forces d_1 = d_2
    if n >= 2 {
        let c = d[1] as i64 - 1;
        let lower = counter.at_least(c) >= 2;
        let equality = lower && counter.above(c) <= 1;
        let rider = !equality || d[0] == d[1];
        out.push(BoundReport {
            name: Q_SECOND_LOWER,
            applicable: true,
            left: BoundValue::eigen(q[1]),
            right: BoundValue::int(c),
            holds: lower && rider,
            equality,
            classification: None,
            note: (!rider).then(|| format!("equality with d_1 = {} != d_2 = {}", d[0], d[1])),
        });
    } else {
        out.push(BoundReport::not_applicable(Q_SECOND_LOWER));
    }

    if n > 2 {
        out.push(second_upper_report(g, &counter, &q));
    } else {
        out.push(BoundReport::not_applicable(Q_SECOND_UPPER));
    }
    out
}

/// `q_2 <= n - 2`, with `q_{k+1} = n - 2` exactly when the complement has at
/// least `k` balanced bipartite components or at least `k + 1` bipartite
/// components, checked for every `k`.
fn second_upper_report(g: &Graph, counter: &RootCounter<'_>, q: &[&Eigenvalue]) -> BoundReport {
    let n = g.order();
    let c = n as i64 - 2;
    let bound_holds = counter.above(c) <= 1;
    let reaching = counter.at_least(c);
    let comp = structure_report(&g.complement());
    let (balanced, bipartite) = (comp.balanced_count(), comp.bipartite_count());
    let mut mismatch = None;
    for k in 1..n {
        let spectral = reaching > k;
        let structural = balanced >= k || bipartite > k;
        if spectral != structural {
            mismatch = Some(k);
            break;
        }
    }
    BoundReport {
        name: Q_SECOND_UPPER,
        applicable: true,
        left: BoundValue::eigen(q[1]),
        right: BoundValue::int(c),
        holds: bound_holds && mismatch.is_none(),
        equality: reaching >= 2,
        classification: None,
        note: Some(match mismatch {
            None => format!(
                "complement: {balanced} balanced of {bipartite} bipartite components; \
                 {} eigenvalues reach n-2",
                reaching
            ),
            Some(k) => format!("equality characterisation fails at k = {k}"),
        }),
    }
}

/// `(δ - 1 + sqrt(disc)) / 2` with `disc = 8m - 4nδ + (δ+1)²`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RadiusBound {
    pub delta: usize,
    pub disc: i64,
    pub exact: String,
    pub numeric: f64,
}

pub fn spectral_radius_bound(n: usize, m: usize, delta: usize) -> Result<RadiusBound> {
    let (ni, mi, di) = (n as i64, m as i64, delta as i64);
    let disc = 8 * mi - 4 * ni * di + (di + 1) * (di + 1);
    if disc < 0 {
        return Err(BoundError::NegativeRadicand { n, m, delta, disc });
    }
    let root = (disc as f64).sqrt();
    let int_root = root.round() as i64;
    let exact = if int_root * int_root == disc {
        let num = di - 1 + int_root;
        if num % 2 == 0 {
            (num / 2).to_string()
        } else {
            format!("{num}/2")
        }
    } else if di == 1 {
        format!("sqrt({disc})/2")
    } else {
        format!("({}+sqrt({disc}))/2", di - 1)
    };
    Ok(RadiusBound {
        delta,
        disc,
        exact,
        numeric: (di as f64 - 1.0 + root) / 2.0,
    })
}

/// Exact test of `rho == bound` when `rho` has degree at most two.
fn saturates_exactly(rho: &Eigenvalue, b: &RadiusBound) -> bool {
    let dm1 = b.delta as i64 - 1;
    // the bound is the larger root of 4x² - 4(δ-1)x + (δ-1)² - disc
    let g = IntPolynomial::from_i64(&[dm1 * dm1 - b.disc, -4 * dm1, 4]);
    match &rho.form {
        ExactForm::Integer(r) => {
            g.eval(r).is_zero() && 2 * r.to_i64().unwrap_or(i64::MIN) >= dm1
        }
        ExactForm::Quadratic(_) => {
            let scaled = &rho.factor * &IntPolynomial::constant(BigInt::from(4));
            scaled == g && rho.root_index == 1
        }
        ExactForm::Algebraic => false,
    }
}

/// Compares the spectral radius with the bound for `δ = δ(g)` on a connected graph.
pub fn radius_bound_report(g: &Graph) -> BoundReport {
    let report = structure_report(g);
    if !report.is_connected() {
        return BoundReport::not_applicable(RADIUS_BOUND);
    }
    let rho_spec = spectrum_with_polynomial(g, MatrixKind::A, &charpoly(g, MatrixKind::A));
    let rho = rho_spec.largest().expect("nonempty spectrum").clone();
    let b = spectral_radius_bound(g.order(), g.edge_count(), report.min_degree)
        .expect("graph data gives a nonnegative radicand");
    let equality = saturates_exactly(&rho, &b);
    BoundReport {
        name: RADIUS_BOUND,
        applicable: true,
        left: BoundValue::eigen(&rho),
        right: BoundValue {
            exact: Some(b.exact.clone()),
            numeric: b.numeric,
        },
        holds: rho.numeric <= b.numeric + NUMERIC_TOLERANCE,
        equality,
        classification: Some(equality_class(&report, g.order())),
        note: None,
    }
}

/// Regular, or bidegreed with degrees `δ` and `n - 1`.
pub fn equality_class(report: &StructureReport, n: usize) -> EqualityClass {
    if report.regular.is_some() {
        EqualityClass::Regular
    } else if matches!(report.bidegreed, Some((_, hi)) if hi == n - 1) {
        EqualityClass::BidegreedMinAndFull
    } else {
        EqualityClass::None
    }
}

/// All `δ` in `1..n` whose bound equals `rho` within [`NUMERIC_TOLERANCE`].
pub fn infer_min_degree(n: usize, m: usize, rho: f64) -> Vec<usize> {
    (1..n)
        .filter(|&d| {
            spectral_radius_bound(n, m, d)
                .is_ok_and(|b| (b.numeric - rho).abs() < NUMERIC_TOLERANCE)
        })
        .collect()
}

/// As [`infer_min_degree`], deciding equality exactly.
pub fn infer_min_degree_exact(n: usize, m: usize, rho: &Eigenvalue) -> Vec<usize> {
    (1..n)
        .filter(|&d| spectral_radius_bound(n, m, d).is_ok_and(|b| saturates_exactly(rho, &b)))
        .collect()
}

/// A named structural identity evaluated on one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub applicable: bool,
    pub holds: bool,
}

pub const ZERO_Q_IS_BIPARTITE_COMPONENTS: &str = "mult_Q(0) = bipartite components";
pub const ZERO_L_IS_COMPONENTS: &str = "mult_L(0) = components";
pub const BIPARTITE_Q_EQUALS_L: &str = "bipartite => Q and L polynomials agree";
pub const THREE_L_EIGENVALUES: &str =
    "connected bipartite with 3 distinct L-eigenvalues => K_{r,r} or star, integral";
pub const ORDER_IS_L_ROOT: &str = "n is an L-eigenvalue <=> complement disconnected";
pub const REGULAR_IFF_AVERAGE: &str = "regular <=> rho = 2m/n";

/// Structural identities tying spectra to components, bipartiteness,
/// regularity and joins.
pub fn check_spectral_identities(g: &Graph) -> Vec<IdentityCheck> {
    let n = g.order();
    let report = structure_report(g);
    let pq = charpoly(g, MatrixKind::Q);
    let pl = charpoly(g, MatrixKind::L);
    let zero = BigInt::zero();
    let mut out = vec![
        IdentityCheck {
            name: ZERO_Q_IS_BIPARTITE_COMPONENTS,
            applicable: true,
            holds: pq.root_multiplicity(&zero) == report.bipartite_count(),
        },
        IdentityCheck {
            name: ZERO_L_IS_COMPONENTS,
            applicable: true,
            holds: pl.root_multiplicity(&zero) == report.component_count(),
        },
        IdentityCheck {
            name: BIPARTITE_Q_EQUALS_L,
            applicable: report.is_bipartite(),
            holds: !report.is_bipartite() || pq == pl,
        },
    ];

    let three = if report.is_connected() && report.is_bipartite() {
        let lspec = spectrum_with_polynomial(g, MatrixKind::L, &pl);
        (lspec.entries().len() == 3).then(|| {
            let integral = lspec.entries().iter().all(|e| e.value.as_integer().is_some());
            integral && is_regular_complete_bipartite_or_star(g)
        })
    } else {
        None
    };
    out.push(IdentityCheck {
        name: THREE_L_EIGENVALUES,
        applicable: three.is_some(),
        holds: three.unwrap_or(true),
    });

    let n_root = pl.root_multiplicity(&BigInt::from(n)) > 0;
    out.push(IdentityCheck {
        name: ORDER_IS_L_ROOT,
        applicable: true,
        holds: n_root == !g.complement().is_connected(),
    });

    let rho = crate::spectra::numeric_eigenvalues(g, MatrixKind::A)
        .last()
        .copied()
        .unwrap_or(0.0);
    let avg = 2.0 * g.edge_count() as f64 / n as f64;
    out.push(IdentityCheck {
        name: REGULAR_IFF_AVERAGE,
        applicable: true,
        holds: report.regular.is_some() == ((rho - avg).abs() < NUMERIC_TOLERANCE),
    });
    out
}

fn is_regular_complete_bipartite_or_star(g: &Graph) -> bool {
    let n = g.order();
    let degs = g.degrees();
    let m = g.edge_count();
    // complete bipartite K_{a,b}: degrees take values a and b with a·b = m, a+b = n
    let mut distinct = degs.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let complete_bipartite = match distinct.as_slice() {
        [r] => 2 * r == n && r * r == m,
        [a, b] => a + b == n && a * b == m,
        _ => false,
    };
    let star = distinct.first() == Some(&1) && m == n - 1 && degs.contains(&(n - 1));
    complete_bipartite && (distinct.len() == 1 || star)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, NamedGraph};

    fn petersen() -> Graph {
        build_named(&NamedGraph::Petersen).unwrap()
    }

    fn by_name<'a>(r: &'a [BoundReport], name: &str) -> &'a BoundReport {
        r.iter().find(|b| b.name == name).unwrap()
    }

    #[test]
    fn cone_over_petersen_q_bounds() {
        let g = Graph::multicone(1, &petersen()).unwrap();
        let r = check_q_degree_bounds(&g);
        assert!(r.iter().all(|b| b.holds && b.applicable));
        let upper = by_name(&r, Q_ADJACENT_UPPER);
        assert_eq!(upper.right.exact.as_deref(), Some("14"));
        assert_eq!(upper.left.exact.as_deref(), Some("12"));
        assert_eq!(by_name(&r, Q_ADJACENT_LOWER).right.exact.as_deref(), Some("8"));
        let min = by_name(&r, Q_MIN_DEGREE);
        assert_eq!(min.left.exact.as_deref(), Some("2"));
        assert_eq!(min.right.exact.as_deref(), Some("4"));
        let second = by_name(&r, Q_SECOND_LOWER);
        assert_eq!(second.left.exact.as_deref(), Some("5"));
        assert_eq!(second.right.exact.as_deref(), Some("3"));
        assert_eq!(by_name(&r, Q_SECOND_UPPER).right.exact.as_deref(), Some("9"));
    }

    #[test]
    fn two_k2_reaches_n_minus_two() {
        let k2 = Graph::complete(2).unwrap();
        let g = k2.disjoint_union(&k2).unwrap();
        let r = check_q_degree_bounds(&g);
        let upper = by_name(&r, Q_SECOND_UPPER);
        assert!(upper.holds && upper.equality);
        assert_eq!(upper.left.exact.as_deref(), Some("2"));
        assert!(!by_name(&r, Q_MIN_DEGREE).applicable);
    }

    #[test]
    fn radius_bound_values() {
        let b = spectral_radius_bound(10, 15, 3).unwrap();
        assert_eq!(b.exact, "3");
        let b = spectral_radius_bound(11, 25, 4).unwrap();
        assert_eq!(b.exact, "5");
        let b = spectral_radius_bound(5, 5, 2).unwrap();
        assert_eq!(b.exact, "2");
        assert!(spectral_radius_bound(4, 0, 3).is_err());
    }

    #[test]
    fn radius_equality_classes() {
        let r = radius_bound_report(&petersen());
        assert!(r.equality && r.holds);
        assert_eq!(r.classification, Some(EqualityClass::Regular));
        let cone = radius_bound_report(&Graph::multicone(1, &petersen()).unwrap());
        assert!(cone.equality);
        assert_eq!(cone.classification, Some(EqualityClass::BidegreedMinAndFull));
        let path = radius_bound_report(&build_named(&NamedGraph::Path(4)).unwrap());
        assert!(path.holds && !path.equality);
    }

    #[test]
    fn min_degree_inference() {
        assert_eq!(infer_min_degree(11, 25, 5.0), vec![4]);
        assert_eq!(infer_min_degree(12, 36, (4.0 + 84f64.sqrt()) / 2.0), vec![5]);
        assert_eq!(infer_min_degree(10, 15, 3.0), vec![3]);
        let g = Graph::multicone(2, &petersen()).unwrap();
        let spec = crate::spectra::spectrum(&g, MatrixKind::A);
        assert_eq!(infer_min_degree_exact(12, 36, spec.largest().unwrap()), vec![5]);
    }

    #[test]
    fn identities_on_small_graphs() {
        for g in [
            petersen(),
            build_named(&NamedGraph::Star(4)).unwrap(),
            build_named(&NamedGraph::CompleteBipartite(3, 3)).unwrap(),
            build_named(&NamedGraph::Path(5)).unwrap(),
            Graph::multicone(1, &petersen()).unwrap(),
        ] {
            for c in check_spectral_identities(&g) {
                assert!(c.holds, "{}", c.name);
            }
        }
        let star = check_spectral_identities(&build_named(&NamedGraph::Star(4)).unwrap());
        assert!(star.iter().any(|c| c.name == THREE_L_EIGENVALUES && c.applicable));
    }
}
