//! Integer solutions of the moment equations: every nonincreasing degree
//! sequence compatible with a [`MomentConstraints`].

use serde::Serialize;

use crate::bounds::{spectral_radius_bound, NUMERIC_TOLERANCE};
use crate::graph::{is_graphic, DegreeSequence};

use super::constraints::{MomentConstraints, SquareSum};

pub const MATCHES_SUM: &str = "Σd = 2m";
pub const MATCHES_SQUARES: &str = "Σd² = T_2 - T_1";
pub const MATCHES_SQUARES_MOD_4: &str = "Σd² <= (T_4 + T_2)/2, same residue mod 4";
pub const WITHIN_BOUNDS: &str = "degree bounds";
pub const GRAPHIC: &str = "Erdős–Gallai";
pub const INTEGRAL_TRIANGLES: &str = "triangle count from T_3 is a nonnegative integer";
pub const WEDGE_ROOM: &str = "3t <= Σ C(d,2)";
pub const CONNECTED_ROOM: &str = "Σd >= 2(n-1)";
pub const RADIUS_FITS: &str = "ρ <= (δ-1)/2 + sqrt(2m - nδ + (δ+1)²/4)";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSequenceCandidate {
    pub sequence: DegreeSequence,
    /// Triangles forced by the third moment.
    pub triangles: u64,
    /// Constraints this sequence was checked against, in order.
    pub satisfied: Vec<&'static str>,
}

/// All degree sequences meeting the constraints, in lexicographically
/// decreasing order.
pub fn feasible_degree_sequences(c: &MomentConstraints) -> Vec<DegreeSequenceCandidate> {
    let n = c.n;
    if c.sum_d % 2 == 1 || c.dmin.value > c.dmax.value {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    walk(c, &mut prefix, 0, 0, &mut out);
    out
}

fn square_target(c: &MomentConstraints) -> (u64, bool) {
    match c.sum_d2 {
        SquareSum::Exact(s) => (s, true),
        SquareSum::AtMostCongruent { max } => (max, false),
    }
}

/// Smallest and largest `Σ d²` for `k` values in `[lo, hi]` summing to `r`.
fn square_range(k: u64, lo: u64, hi: u64, r: u64) -> Option<(u64, u64)> {
    if k == 0 {
        return (r == 0).then_some((0, 0));
    }
    if r < k * lo || r > k * hi {
        return None;
    }
    let (q, rem) = (r / k, r % k);
    let min = rem * (q + 1) * (q + 1) + (k - rem) * q * q;
    let max = if hi == lo {
        k * lo * lo
    } else {
        let excess = r - k * lo;
        let full = excess / (hi - lo);
        let part = excess % (hi - lo);
        let mut s = full * hi * hi;
        if full < k {
            s += (lo + part) * (lo + part) + (k - full - 1) * lo * lo;
        }
        s
    };
    Some((min, max))
}

fn walk(
    c: &MomentConstraints,
    prefix: &mut Vec<usize>,
    sum: u64,
    squares: u64,
    out: &mut Vec<DegreeSequenceCandidate>,
) {
    let n = c.n;
    let i = prefix.len();
    let (sq_target, exact) = square_target(c);
    if i == n {
        if sum == c.sum_d && (!exact || squares == sq_target) {
            if let Some(cand) = finish(c, prefix) {
                out.push(cand);
            }
        }
        return;
    }
    let mut hi = prefix.last().copied().unwrap_or(c.dmax.value).min(c.dmax.value);
    if i == 1 {
        if let Some(b) = &c.d2_max {
            hi = hi.min(b.value);
        }
    }
    let lo = c.dmin.value;
    for d in (lo..=hi).rev() {
        if i == 0 && c.d1_min.as_ref().is_some_and(|b| d < b.value) {
            break;
        }
        if i == 1 {
            if let Some(b) = &c.pair_sum_min {
                if prefix[0] + d < b.value {
                    break;
                }
            }
        }
        let s = sum + d as u64;
        let q = squares + (d * d) as u64;
        if s > c.sum_d || q > sq_target {
            continue;
        }
        let k = (n - i - 1) as u64;
        let Some((min_sq, max_sq)) = square_range(k, lo as u64, d as u64, c.sum_d - s) else {
            continue;
        };
        let left = sq_target - q;
        if min_sq > left || (exact && max_sq < left) {
            continue;
        }
        prefix.push(d);
        walk(c, prefix, s, q, out);
        prefix.pop();
    }
}

fn finish(c: &MomentConstraints, d: &[usize]) -> Option<DegreeSequenceCandidate> {
    let n = c.n;
    let mut satisfied = vec![MATCHES_SUM];
    let seq = DegreeSequence::from_unsorted(d.to_vec());
    let sq = seq.sum_of_squares();
    match c.sum_d2 {
        SquareSum::Exact(_) => satisfied.push(MATCHES_SQUARES),
        SquareSum::AtMostCongruent { max } => {
            if !(max - sq).is_multiple_of(4) {
                return None;
            }
            satisfied.push(MATCHES_SQUARES_MOD_4);
        }
    }
    satisfied.push(WITHIN_BOUNDS);
    if !is_graphic(d) {
        return None;
    }
    satisfied.push(GRAPHIC);
    let triangles = c.cubic.triangles(sq, seq.sum_of_cubes())?;
    satisfied.push(INTEGRAL_TRIANGLES);
    let wedges: u64 = d.iter().map(|&x| (x * x.saturating_sub(1) / 2) as u64).sum();
    if 3 * triangles > wedges {
        return None;
    }
    satisfied.push(WEDGE_ROOM);
    if c.connected && n > 1 {
        if c.sum_d < 2 * (n as u64 - 1) || d[n - 1] == 0 {
            return None;
        }
        satisfied.push(CONNECTED_ROOM);
        if let Some(rho) = c.spectral_radius {
            let b = spectral_radius_bound(n, c.m as usize, d[n - 1]).ok()?;
            if rho > b.numeric + NUMERIC_TOLERANCE {
                return None;
            }
            satisfied.push(RADIUS_FITS);
        }
    }
    Some(DegreeSequenceCandidate {
        sequence: seq,
        triangles,
        satisfied,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ds::constraints::{moment_constraints, CubicRelation, DegreeBound};
    use crate::poly::IntPolynomial;
    use crate::spectra::MatrixKind;

    fn plain(n: usize, sum_d: u64, sum_d2: u64) -> MomentConstraints {
        MomentConstraints {
            kind: MatrixKind::Q,
            n,
            m: sum_d / 2,
            sum_d,
            sum_d2: SquareSum::Exact(sum_d2),
            cubic: CubicRelation::Adjacency { triangles: 0 },
            dmin: DegreeBound { value: 0, source: "" },
            dmax: DegreeBound { value: n - 1, source: "" },
            d1_min: None,
            pair_sum_min: None,
            d2_max: None,
            spectral_radius: None,
            connected: false,
        }
    }

    #[test]
    fn square_range_extremes() {
        assert_eq!(square_range(3, 0, 4, 6), Some((12, 20)));
        assert_eq!(square_range(2, 3, 3, 6), Some((18, 18)));
        assert_eq!(square_range(2, 3, 3, 7), None);
        assert_eq!(square_range(0, 0, 5, 0), Some((0, 0)));
    }

    #[test]
    fn odd_sum_is_empty() {
        assert!(feasible_degree_sequences(&plain(4, 5, 9)).is_empty());
    }

    #[test]
    fn regular_forced_by_equal_moments() {
        let got = feasible_degree_sequences(&plain(10, 30, 90));
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].sequence.as_slice(), &[3; 10]);
    }

    #[test]
    fn output_is_lexicographically_decreasing() {
        let got = feasible_degree_sequences(&plain(6, 12, 30));
        assert!(got.len() > 1);
        for w in got.windows(2) {
            assert!(w[0].sequence.as_slice() > w[1].sequence.as_slice());
        }
    }

    #[test]
    fn k1_petersen_has_three_connected_sequences() {
        let p = IntPolynomial::from_integer_roots(&[(12, 1), (5, 6), (2, 4)]);
        let c = moment_constraints(&p, MatrixKind::Q, true).unwrap();
        let got: Vec<(Vec<usize>, u64)> = feasible_degree_sequences(&c)
            .into_iter()
            .map(|x| (x.sequence.as_slice().to_vec(), x.triangles))
            .collect();
        assert_eq!(
            got,
            vec![
                (vec![10, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4], 15),
                (vec![9, 6, 6, 4, 4, 4, 4, 4, 3, 3, 3], 28),
                (vec![9, 6, 5, 5, 5, 4, 4, 3, 3, 3, 3], 29),
            ]
        );
    }

    #[test]
    fn k2_petersen_includes_two_apexes() {
        let p = &IntPolynomial::from_integer_roots(&[(10, 1), (6, 5), (3, 4)])
            * &IntPolynomial::quadratic(20, 76);
        let c = moment_constraints(&p, MatrixKind::Q, true).unwrap();
        assert_eq!((c.n, c.sum_d, c.sum_d2.clone()), (12, 72, SquareSum::Exact(492)));
        let got = feasible_degree_sequences(&c);
        let mut own = vec![11, 11];
        own.extend([5; 10]);
        assert!(got.iter().any(|x| x.sequence.as_slice() == own.as_slice()));
    }
}
