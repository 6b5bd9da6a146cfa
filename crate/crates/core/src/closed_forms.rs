//! Closed-form characteristic polynomials and spectra of joins, complements
//! and multicones `K_w ∇ P` over the Petersen graph.
//!
//! Everything is phrased on polynomials and spectra rather than graphs. Each
//! regularity hypothesis becomes an exact division that fails loudly.

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::poly::IntPolynomial;
use crate::spectra::{spectrum_of_polynomial, MatrixKind, SpectrumSummary};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error("{0} does not divide the given polynomial; is the graph regular as claimed?")]
    NotDivisible(String),

    #[error("Laplacian spectrum has no eigenvalue 0")]
    MissingZero,

    #[error("largest signless Laplacian eigenvalue should be 2r = {expected}, found {found}")]
    TopMismatch { expected: i64, found: String },

    #[error("multicone order w + 10 = {0} exceeds 64")]
    TooLarge(usize),
}

pub type Result<T> = std::result::Result<T, ClosedFormError>;

fn divide(p: &IntPolynomial, d: &IntPolynomial) -> Result<IntPolynomial> {
    p.div_exact(d)
        .ok_or_else(|| ClosedFormError::NotDivisible(format!("({d})")))
}

fn spectrum_of(p: &IntPolynomial) -> SpectrumSummary {
    spectrum_of_polynomial(p, None).expect("closed forms have real roots")
}

/// Adjacency polynomial of `G1 ∇ G2` for `r_i`-regular `G_i` on `n_i` vertices:
/// `p1 p2 / ((x-r1)(x-r2)) · ((x-r1)(x-r2) - n1 n2)`.
pub fn join_charpoly_adjacency(
    p1: &IntPolynomial,
    r1: i64,
    n1: i64,
    p2: &IntPolynomial,
    r2: i64,
    n2: i64,
) -> Result<IntPolynomial> {
    let l1 = IntPolynomial::linear(r1);
    let l2 = IntPolynomial::linear(r2);
    let rest = &divide(p1, &l1)? * &divide(p2, &l2)?;
    let f = &(&l1 * &l2) - &IntPolynomial::constant(BigInt::from(n1 * n2));
    Ok(&rest * &f)
}

/// The quadratic `x^2 - (2(r1+r2) + n1 + n2) x + 2(2 r1 r2 + r1 n1 + r2 n2)`
/// carrying the two non-inherited signless Laplacian eigenvalues of a regular join.
pub fn join_q_quadratic(r1: i64, n1: i64, r2: i64, n2: i64) -> IntPolynomial {
    IntPolynomial::quadratic(
        2 * (r1 + r2) + n1 + n2,
        2 * (2 * r1 * r2 + r1 * n1 + r2 * n2),
    )
}

/// Signless Laplacian polynomial of `G1 ∇ G2` for regular `G_i`:
/// `q1(x-n2) q2(x-n1) / ((x-2r1-n2)(x-2r2-n1)) · f(x)`.
pub fn join_charpoly_q_regular(
    q1: &IntPolynomial,
    r1: i64,
    n1: i64,
    q2: &IntPolynomial,
    r2: i64,
    n2: i64,
) -> Result<IntPolynomial> {
    let s1 = q1.shift(&BigInt::from(n2));
    let s2 = q2.shift(&BigInt::from(n1));
    let a = divide(&s1, &IntPolynomial::linear(2 * r1 + n2))?;
    let b = divide(&s2, &IntPolynomial::linear(2 * r2 + n1))?;
    Ok(&(&a * &b) * &join_q_quadratic(r1, n1, r2, n2))
}

/// Signless Laplacian spectrum of the complement of an `r`-regular graph on
/// `n` vertices: `{2(n-r-1)} ∪ {n - 2 - q_i : i >= 2}`.
pub fn complement_q_spectrum_regular(
    qspec: &SpectrumSummary,
    n: i64,
    r: i64,
) -> Result<SpectrumSummary> {
    let top = qspec.largest().map(|v| v.to_string()).unwrap_or_default();
    if top != (2 * r).to_string() {
        return Err(ClosedFormError::TopMismatch {
            expected: 2 * r,
            found: top,
        });
    }
    let rest = divide(&qspec.to_polynomial(), &IntPolynomial::linear(2 * r))?;
    let mapped = rest.reflect().shift(&BigInt::from(n - 2));
    Ok(spectrum_of(&(&mapped * &IntPolynomial::linear(2 * (n - r - 1)))))
}

/// `{n - λ_1, ..., n - λ_{n-1}, 0}` for a Laplacian spectrum of order `n`.
pub fn laplacian_complement(spec: &SpectrumSummary) -> Result<SpectrumSummary> {
    let n = spec.order() as i64;
    let rest = drop_zero(spec)?;
    let mapped = rest.reflect().shift(&BigInt::from(n));
    Ok(spectrum_of(&(&mapped * &IntPolynomial::linear(0))))
}

/// `{n+m} ∪ {m + λ_i} ∪ {n + μ_j} ∪ {0}` for Laplacian spectra of orders `n`, `m`.
pub fn laplacian_join(a: &SpectrumSummary, b: &SpectrumSummary) -> Result<SpectrumSummary> {
    let (n, m) = (a.order() as i64, b.order() as i64);
    let ra = drop_zero(a)?.shift(&BigInt::from(m));
    let rb = drop_zero(b)?.shift(&BigInt::from(n));
    let ends = &IntPolynomial::linear(n + m) * &IntPolynomial::linear(0);
    Ok(spectrum_of(&(&(&ra * &rb) * &ends)))
}

fn drop_zero(spec: &SpectrumSummary) -> Result<IntPolynomial> {
    if spec.multiplicity_of(0) == 0 {
        return Err(ClosedFormError::MissingZero);
    }
    divide(&spec.to_polynomial(), &IntPolynomial::linear(0))
}

/// A closed-form spectrum of `K_w ∇ P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MulticoneSpectrum {
    pub w: usize,
    pub kind: MatrixKind,
    /// Set when `w = 0`: the values are the Petersen graph's own spectrum.
    pub base_only: bool,
    #[serde(serialize_with = "crate::io::json::polynomial")]
    pub polynomial: IntPolynomial,
    pub spectrum: SpectrumSummary,
}

const PETERSEN_A: [(i64, usize); 3] = [(3, 1), (1, 5), (-2, 4)];
const PETERSEN_L: [(i64, usize); 3] = [(5, 4), (2, 5), (0, 1)];
const PETERSEN_Q: [(i64, usize); 3] = [(6, 1), (4, 5), (1, 4)];

/// Closed-form spectrum of the multicone `K_w ∇ P`:
/// - A: `{[-1]^(w-1), [1]^5, [-2]^4}` plus the roots `(w+2 ± sqrt(w²+32w+16))/2`;
/// - L: `{[w+10]^w, [w+5]^4, [w+2]^5, [0]^1}`;
/// - Q: the regular-join formula with `K_w` and `P`, i.e.
///   `{[w+8]^(w-1), [w+4]^5, [w+1]^4}` plus the roots of `x² - (3w+14)x + (2w²+10w+48)`.
pub fn multicone_petersen_spectrum(w: usize, kind: MatrixKind) -> Result<MulticoneSpectrum> {
    if w + 10 > 64 {
        return Err(ClosedFormError::TooLarge(w + 10));
    }
    let wi = w as i64;
    let polynomial = if w == 0 {
        let base = match kind {
            MatrixKind::A => &PETERSEN_A,
            MatrixKind::L => &PETERSEN_L,
            MatrixKind::Q => &PETERSEN_Q,
        };
        IntPolynomial::from_integer_roots(base)
    } else {
        match kind {
            MatrixKind::A => {
                // (w+2 ± sqrt(w²+32w+16))/2 are the roots of x² - (w+2)x - (7w+3)
                let quad = IntPolynomial::quadratic(wi + 2, -(7 * wi + 3));
                &IntPolynomial::from_integer_roots(&[(-1, w - 1), (1, 5), (-2, 4)]) * &quad
            }
            MatrixKind::L => IntPolynomial::from_integer_roots(&[
                (wi + 10, w),
                (wi + 5, 4),
                (wi + 2, 5),
                (0, 1),
            ]),
            MatrixKind::Q => {
                let clique = IntPolynomial::from_integer_roots(&[(2 * wi - 2, 1), (wi - 2, w - 1)]);
                let petersen = IntPolynomial::from_integer_roots(&PETERSEN_Q);
                join_charpoly_q_regular(&clique, wi - 1, wi, &petersen, 3, 10)?
            }
        }
    };
    Ok(MulticoneSpectrum {
        w,
        kind,
        base_only: w == 0,
        spectrum: spectrum_of(&polynomial),
        polynomial,
    })
}
