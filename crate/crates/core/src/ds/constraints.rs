//! What a characteristic polynomial forces on the degree sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::poly::{isolate_real_roots, refine_root, IntPolynomial};
use crate::spectra::{spectral_invariants, MatrixKind};

use super::{DsError, Result};

/// A degree bound together with the fact that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeBound {
    pub value: usize,
    pub source: &'static str,
}

impl DegreeBound {
    fn new(value: usize, source: &'static str) -> Self {
        DegreeBound { value, source }
    }
}

/// How the sum of squared degrees is pinned down.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SquareSum {
    /// `T_2 - T_1` for `L` and `Q`.
    Exact(u64),
    /// Adjacency: `Σd² = (T_4 + T_2)/2 - 4·(4-cycles)`.
    AtMostCongruent { max: u64 },
}

/// The third moment ties the triangle count to `Σd²` and `Σd³`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CubicRelation {
    /// `T_3 = 6t + 3Σd² + Σd³`.
    SignlessLaplacian {
        #[serde(serialize_with = "crate::io::json::big_int")]
        t3: BigInt,
    },
    /// `T_3 = Σd³ + 3Σd² - 6t`.
    Laplacian {
        #[serde(serialize_with = "crate::io::json::big_int")]
        t3: BigInt,
    },
    /// `T_3 = 6t`.
    Adjacency { triangles: u64 },
}

impl CubicRelation {
    /// Triangle count implied by a degree sequence, if it is a nonnegative integer.
    pub fn triangles(&self, sum_d2: u64, sum_d3: u64) -> Option<u64> {
        let (sq, cu) = (BigInt::from(sum_d2), BigInt::from(sum_d3));
        let six_t: BigInt = match self {
            CubicRelation::SignlessLaplacian { t3 } => t3 - 3 * sq - cu,
            CubicRelation::Laplacian { t3 } => cu + 3 * sq - t3,
            CubicRelation::Adjacency { triangles } => return Some(*triangles),
        };
        let (t, r) = six_t.div_rem(&BigInt::from(6));
        if r.is_zero() && !t.is_negative() {
            t.to_u64()
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MomentConstraints {
    pub kind: MatrixKind,
    pub n: usize,
    pub m: u64,
    /// `Σd = 2m`.
    pub sum_d: u64,
    pub sum_d2: SquareSum,
    pub cubic: CubicRelation,
    pub dmin: DegreeBound,
    pub dmax: DegreeBound,
    /// Some vertex has at least this degree.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d1_min: Option<DegreeBound>,
    /// The two largest degrees sum to at least this.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair_sum_min: Option<DegreeBound>,
    /// Cap on the second largest degree.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d2_max: Option<DegreeBound>,
    /// Adjacency spectral radius, for the min-degree radius test.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectral_radius: Option<f64>,
    /// Whether connectivity was assumed (or forced by the spectrum).
    pub connected: bool,
}

pub const HANDSHAKE: &str = "0 <= d <= n-1";
pub const Q_LARGEST_ABOVE_MAX_DEGREE: &str = "q_1 >= Δ + 1";
pub const Q_LARGEST_BELOW_PAIR: &str = "q_1 <= d_1 + d_2";
pub const Q_SECOND_CAP: &str = "q_2 >= d_2 - 1";
pub const Q_SMALLEST_BELOW_MIN: &str = "q_n < δ (connected)";
pub const Q_NO_ISOLATED: &str = "0 not a Q-root: no bipartite component";
pub const L_LARGEST_ABOVE_MAX_DEGREE: &str = "λ_1 >= Δ + 1";
pub const L_LARGEST_BELOW_PAIR: &str = "λ_1 <= d_1 + d_2";
pub const L_CONNECTIVITY_BELOW_MIN: &str = "λ_{n-1} <= δ (not complete)";
pub const L_CONNECTED: &str = "0 a simple L-root: connected";
pub const A_RADIUS_ABOVE_SQRT_MAX: &str = "ρ >= sqrt(Δ)";
pub const A_RADIUS_BELOW_MAX: &str = "ρ <= Δ";
pub const AVERAGE_DEGREE: &str = "Δ >= 2m/n";

/// Integer part of the `k`-th largest root (1-based) of a real-rooted polynomial.
fn floor_kth_largest(p: &IntPolynomial, k: usize) -> i64 {
    let n = p.degree();
    // roots at or above c
    let at_least = |c: i64| n - p.real_roots_below(&BigInt::from(c));
    let (mut lo, mut hi) = search_window(p);
    // invariant: at_least(lo) >= k, at_least(hi) < k
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if at_least(mid) >= k {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Smallest integer at or above the `k`-th largest root.
fn ceil_kth_largest(p: &IntPolynomial, k: usize) -> i64 {
    let above = |c: i64| p.real_roots_above(&BigInt::from(c));
    let (mut lo, mut hi) = search_window(p);
    // invariant: above(lo) >= k, above(hi) < k
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if above(mid) >= k {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}

/// Integers strictly outside the root range, from `Σ r² = T_2`.
fn search_window(p: &IntPolynomial) -> (i64, i64) {
    let t2 = p.power_sums(2)[2].clone().max(BigInt::zero());
    let b = (t2.sqrt() + 2u32).to_i64().expect("root bound fits in i64");
    (-b, b)
}

/// Polynomial whose roots are the squares of the roots of `p`.
fn squared_roots(p: &IntPolynomial) -> IntPolynomial {
    // p(x) p(-x) up to sign is even in x
    let h = p * &p.reflect();
    IntPolynomial::new(h.coeffs().iter().step_by(2).cloned().collect())
}

fn largest_root(p: &IntPolynomial) -> f64 {
    isolate_real_roots(p, None)
        .last()
        .map(|iv| refine_root(p, iv, 1e-12))
        .unwrap_or(f64::NAN)
}

/// Reads `n`, `m`, the moment relations and exact degree bounds off a
/// characteristic polynomial. `assume_connected` switches on the bounds that
/// need a connected graph; for `L` connectivity is read from the spectrum.
pub fn moment_constraints(
    p: &IntPolynomial,
    kind: MatrixKind,
    assume_connected: bool,
) -> Result<MomentConstraints> {
    let inv = spectral_invariants(p, kind)?;
    let n = inv.n;
    if n == 0 {
        return Err(DsError::EmptyPolynomial);
    }
    let m = inv.m;
    let t = p.power_sums(4);
    let to_u64 = |v: &BigInt| v.to_u64().ok_or(DsError::InconsistentMoments(kind));
    let sum_d = 2 * m;
    let top = (n - 1) as i64;
    let mut dmin = DegreeBound::new(0, HANDSHAKE);
    let mut dmax = DegreeBound::new(n - 1, HANDSHAKE);
    let mut d1_min = None;
    let mut pair_sum_min = None;
    let mut d2_max = None;
    let mut spectral_radius = None;
    let mut connected = assume_connected;

    let tighten_min = |b: &mut DegreeBound, v: i64, src: &'static str| {
        if v > b.value as i64 {
            *b = DegreeBound::new(v.min(top).max(0) as usize, src);
        }
    };
    let tighten_max = |b: &mut DegreeBound, v: i64, src: &'static str| {
        if v < b.value as i64 {
            *b = DegreeBound::new(v.max(0) as usize, src);
        }
    };

    let (sum_d2, cubic) = match kind {
        MatrixKind::Q | MatrixKind::L => {
            let sq = to_u64(&(&t[2] - &t[1]))?;
            let cubic = if kind == MatrixKind::Q {
                CubicRelation::SignlessLaplacian { t3: t[3].clone() }
            } else {
                CubicRelation::Laplacian { t3: t[3].clone() }
            };
            (SquareSum::Exact(sq), cubic)
        }
        MatrixKind::A => {
            let six_t = to_u64(&t[3])?;
            if six_t % 6 != 0 {
                return Err(DsError::InconsistentMoments(kind));
            }
            let twice = &t[4] + &t[2];
            if twice.is_odd() {
                return Err(DsError::InconsistentMoments(kind));
            }
            let max = to_u64(&(twice / 2))?;
            (
                SquareSum::AtMostCongruent { max },
                CubicRelation::Adjacency { triangles: six_t / 6 },
            )
        }
    };

    if m > 0 {
        // some degree is at least the average
        let avg_ceil = sum_d.div_ceil(n as u64) as i64;
        match kind {
            MatrixKind::Q | MatrixKind::L => {
                let (above_max, below_pair) = if kind == MatrixKind::Q {
                    (Q_LARGEST_ABOVE_MAX_DEGREE, Q_LARGEST_BELOW_PAIR)
                } else {
                    (L_LARGEST_ABOVE_MAX_DEGREE, L_LARGEST_BELOW_PAIR)
                };
                tighten_max(&mut dmax, floor_kth_largest(p, 1) - 1, above_max);
                let ceil1 = ceil_kth_largest(p, 1);
                let mut d1 = DegreeBound::new(avg_ceil as usize, AVERAGE_DEGREE);
                tighten_min(&mut d1, (ceil1 + 1).div_euclid(2), below_pair);
                d1_min = Some(d1);
                pair_sum_min = Some(DegreeBound::new(ceil1.max(0) as usize, below_pair));
            }
            MatrixKind::A => {
                let rho2 = floor_kth_largest(&squared_roots(p), 1);
                tighten_max(&mut dmax, rho2, A_RADIUS_ABOVE_SQRT_MAX);
                let mut d1 = DegreeBound::new(avg_ceil as usize, AVERAGE_DEGREE);
                tighten_min(&mut d1, ceil_kth_largest(p, 1), A_RADIUS_BELOW_MAX);
                d1_min = Some(d1);
                spectral_radius = Some(largest_root(p));
            }
        }
    }

    let zero_mult = p.root_multiplicity(&BigInt::zero());
    match kind {
        MatrixKind::Q => {
            if n > 1 {
                d2_max = Some(DegreeBound::new(
                    (floor_kth_largest(p, 2) + 1).clamp(0, top) as usize,
                    Q_SECOND_CAP,
                ));
            }
            if zero_mult == 0 {
                tighten_min(&mut dmin, 1, Q_NO_ISOLATED);
            }
            if connected && n > 1 {
                tighten_min(&mut dmin, floor_kth_largest(p, n) + 1, Q_SMALLEST_BELOW_MIN);
            }
        }
        MatrixKind::L => {
            connected = zero_mult == 1;
            if connected && n > 1 {
                tighten_min(&mut dmin, 1, L_CONNECTED);
            }
            let complete = m == (n * (n - 1) / 2) as u64;
            if n > 1 && !complete {
                tighten_min(&mut dmin, ceil_kth_largest(p, n - 1), L_CONNECTIVITY_BELOW_MIN);
            }
        }
        MatrixKind::A => {}
    }

    Ok(MomentConstraints {
        kind,
        n,
        m,
        sum_d,
        sum_d2,
        cubic,
        dmin,
        dmax,
        d1_min,
        pair_sum_min,
        d2_max,
        spectral_radius,
        connected,
    })
}
