//! Characteristic polynomials and spectra of the adjacency matrix `A`, the
//! Laplacian `L = D - A` and the signless Laplacian `Q = D + A`.

mod berkowitz;
mod value;

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::poly::IntPolynomial;

pub use berkowitz::charpoly_of_matrix;
pub use value::{
    integer_spectrum, spectrum_of_polynomial, Eigenvalue, ExactForm, QuadraticSurd,
    SpectrumEntry, SpectrumSummary,
};

#[derive(Debug, Error)]
pub enum SpectraError {
    #[error("polynomial is not monic: {0}")]
    NotMonic(String),

    #[error("polynomial of degree {degree} has only {real} real roots")]
    NotRealRooted { degree: usize, real: usize },

    #[error("{kind}-moment T_{k}: Newton gives {newton}, degree counts give {combinatorial}")]
    MomentMismatch {
        kind: MatrixKind,
        k: usize,
        newton: BigInt,
        combinatorial: BigInt,
    },

    #[error("moment order {0} exceeds the supported maximum of 16")]
    MomentOrderTooLarge(usize),

    #[error("edge count from {kind}-polynomial is not an integer ({twice_m}/2)")]
    NonIntegerEdgeCount { kind: MatrixKind, twice_m: BigInt },

    #[error("unknown matrix kind '{0}', expected A, L or Q")]
    UnknownKind(String),
}

pub type Result<T> = std::result::Result<T, SpectraError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MatrixKind {
    A,
    L,
    Q,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] = [MatrixKind::A, MatrixKind::L, MatrixKind::Q];
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MatrixKind::A => "A",
            MatrixKind::L => "L",
            MatrixKind::Q => "Q",
        };
        f.write_str(s)
    }
}

impl FromStr for MatrixKind {
    type Err = SpectraError;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(MatrixKind::A),
            "L" | "l" => Ok(MatrixKind::L),
            "Q" | "q" => Ok(MatrixKind::Q),
            other => Err(SpectraError::UnknownKind(other.to_string())),
        }
    }
}

/// Dense integer matrix of the given kind.
pub fn matrix(g: &Graph, kind: MatrixKind) -> Vec<Vec<i64>> {
    let n = g.order();
    let sign = if kind == MatrixKind::L { -1 } else { 1 };
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        if kind == MatrixKind::A {
                            0
                        } else {
                            g.degree(i) as i64
                        }
                    } else if g.has_edge(i, j) {
                        sign
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

pub fn charpoly(g: &Graph, kind: MatrixKind) -> IntPolynomial {
    charpoly_of_matrix(&matrix(g, kind))
}

/// Floating-point eigenvalues from a symmetric eigensolver, ascending.
pub fn numeric_eigenvalues(g: &Graph, kind: MatrixKind) -> Vec<f64> {
    let n = g.order();
    let m = matrix(g, kind);
    let dm = DMatrix::from_fn(n, n, |i, j| m[i][j] as f64);
    let mut vals: Vec<f64> = dm.symmetric_eigenvalues().iter().copied().collect();
    vals.sort_by(f64::total_cmp);
    vals
}

pub fn spectrum(g: &Graph, kind: MatrixKind) -> SpectrumSummary {
    spectrum_with_polynomial(g, kind, &charpoly(g, kind))
}

/// Spectrum of `g` when its characteristic polynomial is already known.
pub fn spectrum_with_polynomial(g: &Graph, kind: MatrixKind, p: &IntPolynomial) -> SpectrumSummary {
    let seeds = numeric_eigenvalues(g, kind);
    spectrum_of_polynomial(p, Some(&seeds)).expect("symmetric matrices have real spectra")
}

/// Exact equality of characteristic polynomials.
pub fn cospectral(g: &Graph, h: &Graph, kind: MatrixKind) -> bool {
    g.order() == h.order() && charpoly(g, kind) == charpoly(h, kind)
}

/// Power sums from Newton's identities, checked against degree and triangle
/// counts for `k <= 3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MomentReport {
    pub kind: MatrixKind,
    /// `T_0..=T_kmax`.
    #[serde(serialize_with = "crate::io::json::big_ints")]
    pub power_sums: Vec<BigInt>,
    /// Combinatorial side for `k = 0..=min(3, kmax)`.
    #[serde(serialize_with = "crate::io::json::big_ints")]
    pub combinatorial: Vec<BigInt>,
}

pub fn moments(g: &Graph, kind: MatrixKind, kmax: usize) -> Result<MomentReport> {
    if kmax > 16 {
        return Err(SpectraError::MomentOrderTooLarge(kmax));
    }
    let p = charpoly(g, kind);
    let power_sums = p.power_sums(kmax);
    let combinatorial: Vec<BigInt> = combinatorial_moments(g, kind)
        .into_iter()
        .take(kmax + 1)
        .collect();
    for (k, c) in combinatorial.iter().enumerate() {
        if &power_sums[k] != c {
            return Err(SpectraError::MomentMismatch {
                kind,
                k,
                newton: power_sums[k].clone(),
                combinatorial: c.clone(),
            });
        }
    }
    Ok(MomentReport {
        kind,
        power_sums,
        combinatorial,
    })
}

/// `T_0..T_3` from `n`, `m`, the degrees and the triangle count.
pub fn combinatorial_moments(g: &Graph, kind: MatrixKind) -> [BigInt; 4] {
    let n = g.order() as i64;
    let ds = g.degree_sequence();
    let two_m = ds.sum() as i64;
    let sq = ds.sum_of_squares() as i64;
    let cu = ds.sum_of_cubes() as i64;
    let t = g.triangle_count() as i64;
    let v = match kind {
        MatrixKind::A => [n, 0, two_m, 6 * t],
        MatrixKind::L => [n, two_m, two_m + sq, cu + 3 * sq - 6 * t],
        MatrixKind::Q => [n, two_m, two_m + sq, 6 * t + 3 * sq + cu],
    };
    v.map(BigInt::from)
}

/// What a characteristic polynomial of the given kind reveals about its graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralInvariants {
    pub kind: MatrixKind,
    pub n: usize,
    pub m: u64,
    /// A: closed walks of length 0..=4 (the power sums `T_k`).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_walks: Option<Vec<u64>>,
    /// A: triangles `T_3 / 6`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triangles: Option<u64>,
    /// A: spectrum symmetric about zero.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bipartite: Option<bool>,
    /// L: multiplicity of the root 0.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<usize>,
    /// L: spanning trees, zero when disconnected.
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "crate::io::json::opt_big_int"
    )]
    pub spanning_trees: Option<BigInt>,
    /// L and Q: `Σ d²` from `T_2 - T_1`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sum_of_squared_degrees: Option<u64>,
    /// Q: multiplicity of the root 0.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bipartite_components: Option<usize>,
}

pub fn spectral_invariants(p: &IntPolynomial, kind: MatrixKind) -> Result<SpectralInvariants> {
    if !p.is_monic() {
        return Err(SpectraError::NotMonic(p.to_string()));
    }
    let n = p.degree();
    let t = p.power_sums(4);
    let twice_m = match kind {
        MatrixKind::A => t[2].clone(),
        _ => t[1].clone(),
    };
    if twice_m.is_negative() || twice_m.is_odd() {
        return Err(SpectraError::NonIntegerEdgeCount { kind, twice_m });
    }
    let m = (&twice_m / BigInt::from(2)).to_u64().expect("edge count fits in u64");
    let to_u64 = |v: &BigInt| v.to_u64().unwrap_or(u64::MAX);
    let zero_mult = p.root_multiplicity(&BigInt::zero());
    let mut inv = SpectralInvariants {
        kind,
        n,
        m,
        closed_walks: None,
        triangles: None,
        bipartite: None,
        components: None,
        spanning_trees: None,
        sum_of_squared_degrees: None,
        bipartite_components: None,
    };
    match kind {
        MatrixKind::A => {
            inv.closed_walks = Some(t.iter().map(to_u64).collect());
            inv.triangles = Some(to_u64(&(&t[3] / 6)));
            inv.bipartite = Some(p.reflect() == *p);
        }
        MatrixKind::L => {
            inv.components = Some(zero_mult);
            inv.sum_of_squared_degrees = Some(to_u64(&(&t[2] - &t[1])));
            inv.spanning_trees = Some(if zero_mult == 1 && n > 0 {
                p.coeff(1).abs() / BigInt::from(n)
            } else {
                BigInt::zero()
            });
        }
        MatrixKind::Q => {
            inv.sum_of_squared_degrees = Some(to_u64(&(&t[2] - &t[1])));
            inv.bipartite_components = Some(zero_mult);
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, NamedGraph};

    fn petersen() -> Graph {
        build_named(&NamedGraph::Petersen).unwrap()
    }

    #[test]
    fn k2_adjacency() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(charpoly(&k2, MatrixKind::A), IntPolynomial::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn petersen_polynomials() {
        let p = petersen();
        assert_eq!(
            charpoly(&p, MatrixKind::A),
            IntPolynomial::from_integer_roots(&[(3, 1), (1, 5), (-2, 4)])
        );
        assert_eq!(
            spectrum(&p, MatrixKind::Q).display_compact(),
            "[6]^1, [4]^5, [1]^4"
        );
    }

    #[test]
    fn petersen_q_moments() {
        let r = moments(&petersen(), MatrixKind::Q, 3).unwrap();
        let expect: Vec<BigInt> = [10, 30, 120, 540].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(r.power_sums, expect);
    }

    #[test]
    fn empty_graph_moments_vanish() {
        let g = Graph::empty(5).unwrap();
        for kind in MatrixKind::ALL {
            let r = moments(&g, kind, 6).unwrap();
            assert!(r.power_sums[1..].iter().all(|t| t.is_zero()));
        }
    }

    #[test]
    fn moment_order_is_capped() {
        assert!(matches!(
            moments(&petersen(), MatrixKind::A, 17),
            Err(SpectraError::MomentOrderTooLarge(17))
        ));
    }

    #[test]
    fn star_and_c4_plus_k1_are_adjacency_mates_only() {
        let star = build_named(&NamedGraph::Star(4)).unwrap();
        let other = build_named(&NamedGraph::Cycle(4))
            .unwrap()
            .disjoint_union(&Graph::complete(1).unwrap())
            .unwrap();
        assert!(cospectral(&star, &other, MatrixKind::A));
        assert!(!cospectral(&star, &other, MatrixKind::L));
        assert_eq!(
            charpoly(&star, MatrixKind::A),
            IntPolynomial::from_i64(&[0, 0, 0, -4, 0, 1])
        );
    }

    #[test]
    fn invariants_of_c4_laplacian() {
        let c4 = build_named(&NamedGraph::Cycle(4)).unwrap();
        let inv = spectral_invariants(&charpoly(&c4, MatrixKind::L), MatrixKind::L).unwrap();
        assert_eq!((inv.n, inv.m), (4, 4));
        assert_eq!(inv.components, Some(1));
        assert_eq!(inv.spanning_trees, Some(BigInt::from(4)));
    }

    #[test]
    fn invariants_of_petersen_adjacency() {
        let inv = spectral_invariants(&charpoly(&petersen(), MatrixKind::A), MatrixKind::A).unwrap();
        assert_eq!((inv.n, inv.m), (10, 15));
        assert_eq!(inv.triangles, Some(0));
        assert_eq!(inv.bipartite, Some(false));
    }

    #[test]
    fn two_triangles_have_no_bipartite_component() {
        let k3 = Graph::complete(3).unwrap();
        let g = k3.disjoint_union(&k3).unwrap();
        let inv = spectral_invariants(&charpoly(&g, MatrixKind::Q), MatrixKind::Q).unwrap();
        assert_eq!(inv.bipartite_components, Some(0));
        assert_eq!(spectrum(&g, MatrixKind::Q).display_compact(), "[4]^2, [1]^4");
    }

    #[test]
    fn odd_edge_count_is_rejected() {
        // x^2 - 3x: T_1 = 3
        let p = IntPolynomial::from_i64(&[0, -3, 1]);
        assert!(matches!(
            spectral_invariants(&p, MatrixKind::Q),
            Err(SpectraError::NonIntegerEdgeCount { .. })
        ));
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("Q".parse::<MatrixKind>().unwrap(), MatrixKind::Q);
        assert!("X".parse::<MatrixKind>().is_err());
    }
}
