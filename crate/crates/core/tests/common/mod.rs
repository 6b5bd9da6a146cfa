//! Independent reference computations shared by the integration tests.
//!
//! Nothing here calls the crate's polynomial, enumeration or canonical-form
//! code; each routine is the most direct method available.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use spectral_ds::graph::Graph;
use spectral_ds::poly::IntPolynomial;
use spectral_ds::spectra::MatrixKind;

/// Integer matrix of the given kind built straight from the edge list.
pub fn matrix_of(g: &Graph, kind: MatrixKind) -> Vec<Vec<i64>> {
    let n = g.order();
    let mut m = vec![vec![0i64; n]; n];
    for (u, v) in g.edges() {
        let off = if kind == MatrixKind::L { -1 } else { 1 };
        m[u][v] = off;
        m[v][u] = off;
        if kind != MatrixKind::A {
            m[u][u] += 1;
            m[v][v] += 1;
        }
    }
    m
}

/// Determinant by Bareiss fraction-free elimination with row pivoting.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `det(xI - M)` sampled at `x = 0..=n` and recovered by Lagrange interpolation.
pub fn charpoly_by_interpolation(m: &[Vec<i64>]) -> IntPolynomial {
    let n = m.len();
    let xs: Vec<i64> = (0..=n as i64).collect();
    let ys: Vec<BigInt> = xs
        .iter()
        .map(|&x| {
            let a: Vec<Vec<BigInt>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| BigInt::from(if i == j { x } else { 0 } - m[i][j]))
                        .collect()
                })
                .collect();
            bareiss_det(a)
        })
        .collect();
    // accumulate Σ y_i ∏_{j≠i} (x - x_j)/(x_i - x_j) in the monomial basis
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for (i, yi) in ys.iter().enumerate() {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigInt::one();
        for (j, &xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * BigRational::from_integer(BigInt::from(xj));
            }
            basis = next;
            denom *= BigInt::from(xs[i] - xj);
        }
        let scale = BigRational::new(yi.clone(), denom);
        for (k, c) in basis.iter().enumerate() {
            coeffs[k] += c * &scale;
        }
    }
    let ints: Vec<BigInt> = coeffs
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "interpolated coefficient is not an integer");
            c.to_integer()
        })
        .collect();
    IntPolynomial::new(ints)
}

/// All simple graphs on `n` labelled vertices, as edge bit masks over the
/// pairs `(i, j)`, `i < j`, in row-major order.
pub fn labelled_graph(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Whether two graphs are isomorphic, by trying every bijection.
pub fn isomorphic_by_permutations(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if g.edges().all(|(u, v)| h.has_edge(perm[u], perm[v])) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every nonincreasing sequence of `n` integers in `[lo, hi]` with the given
/// sum and sum of squares, by plain recursion without pruning.
pub fn brute_force_sequences(n: usize, lo: usize, hi: usize, sum: usize, squares: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, lo: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for d in (lo..=cap).rev() {
            cur.push(d);
            rec(n, lo, d, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    rec(n, lo, hi, &mut Vec::new(), &mut all);
    all.retain(|s| {
        s.iter().sum::<usize>() == sum && s.iter().map(|d| d * d).sum::<usize>() == squares
    });
    all
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// `G(n, p)` sample.
pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Havel–Hakimi: repeatedly connect the largest remaining degree to the next
/// largest ones.
pub fn havel_hakimi(degrees: &[usize]) -> bool {
    let mut d: Vec<usize> = degrees.to_vec();
    loop {
        d.sort_unstable_by(|a, b| b.cmp(a));
        while d.last() == Some(&0) {
            d.pop();
        }
        let Some((&first, rest)) = d.split_first() else {
            return true;
        };
        if first > rest.len() {
            return false;
        }
        let mut next = rest.to_vec();
        for x in next.iter_mut().take(first) {
            if *x == 0 {
                return false;
            }
            *x -= 1;
        }
        d = next;
    }
}

/// Lexicographically least edge mask over all relabellings: an isomorphism
/// invariant that separates classes, feasible for `n <= 5`.
pub fn min_mask_over_permutations(g: &Graph) -> u64 {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut mask = 0u64;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if g.has_edge(perm[i], perm[j]) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(mask);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}
