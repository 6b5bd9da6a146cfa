//! Factorisation of monic integer polynomials whose roots are all real.
//!
//! Square-free parts come from Yun's algorithm, integer roots are extracted
//! directly, and the rest is split by searching root subsets whose numeric
//! product polynomial rounds to integers, each candidate confirmed by exact
//! division.

use num_bigint::BigInt;
use num_traits::{FromPrimitive, ToPrimitive, Zero};

use super::{isolate_real_roots, refine_root, IntPolynomial};

/// Upper limit on root subsets tried while splitting one square-free part.
const SUBSET_BUDGET: usize = 2_000_000;
/// Coefficients beyond this magnitude cannot be rounded reliably from `f64`.
const ROUNDING_LIMIT: f64 = 1e13;

#[derive(Clone, Debug, PartialEq)]
pub struct IrreducibleFactor {
    pub poly: IntPolynomial,
    pub multiplicity: usize,
    /// Real roots of `poly`, ascending, to within `1e-12`.
    pub roots: Vec<f64>,
    /// False when the subset search was cut short, so `poly` may still split.
    pub proven_irreducible: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub factors: Vec<IrreducibleFactor>,
    /// Number of real roots found, with multiplicity. Equals the degree for
    /// characteristic polynomials of symmetric matrices.
    pub real_root_count: usize,
}

/// Factors a monic polynomial with real roots. `seeds` are optional
/// approximate roots used to speed up isolation.
pub fn factor_real_rooted(p: &IntPolynomial, seeds: Option<&[f64]>) -> Factorization {
    assert!(p.is_monic(), "factorisation expects a monic polynomial");
    let mut factors = Vec::new();
    let mut real_root_count = 0;
    for (part, mult) in p.squarefree_decomposition() {
        let (linear, rest) = split_integer_roots(&part);
        for r in linear {
            factors.push(IrreducibleFactor {
                poly: IntPolynomial::linear(r.clone()),
                multiplicity: mult,
                roots: vec![r.to_f64().unwrap_or(f64::NAN)],
                proven_irreducible: true,
            });
            real_root_count += mult;
        }
        if rest.degree() == 0 {
            continue;
        }
        let roots: Vec<f64> = isolate_real_roots(&rest, seeds)
            .iter()
            .map(|iv| refine_root(&rest, iv, 1e-12))
            .collect();
        real_root_count += roots.len() * mult;
        if roots.len() < rest.degree() {
            // complex roots present; keep the block whole
            factors.push(IrreducibleFactor {
                poly: rest,
                multiplicity: mult,
                roots,
                proven_irreducible: false,
            });
            continue;
        }
        for (poly, roots, proven) in split_by_subsets(rest, roots) {
            factors.push(IrreducibleFactor {
                poly,
                multiplicity: mult,
                roots,
                proven_irreducible: proven,
            });
        }
    }
    Factorization {
        factors,
        real_root_count,
    }
}

/// Pulls out the integer roots of a square-free monic polynomial with real roots.
fn split_integer_roots(f: &IntPolynomial) -> (Vec<BigInt>, IntPolynomial) {
    // all roots real: Σ r² = T2 bounds every |r|
    let t2 = f.power_sums(2)[2].clone().max(BigInt::zero());
    let bound = t2.sqrt() + 1u32;
    let bound = bound.to_u64().expect("root bound fits in u64");
    let mut rest = f.clone();
    let mut roots = Vec::new();
    if rest.coeff(0).is_zero() {
        roots.push(BigInt::zero());
        rest = rest.div_exact(&IntPolynomial::linear(0)).expect("x divides");
    }
    let c0 = rest.coeff(0);
    for r in 1..=bound {
        for cand in [BigInt::from(r), -BigInt::from(r)] {
            if rest.degree() == 0 {
                break;
            }
            if !(&c0 % &cand).is_zero() {
                continue;
            }
            if rest.eval(&cand).is_zero() {
                rest = rest
                    .div_exact(&IntPolynomial::linear(cand.clone()))
                    .expect("root divides");
                roots.push(cand);
            }
        }
    }
    roots.sort();
    (roots, rest)
}

/// Splits a square-free polynomial without rational roots into irreducible
/// pieces. `roots` are all its roots, ascending.
fn split_by_subsets(f: IntPolynomial, roots: Vec<f64>) -> Vec<(IntPolynomial, Vec<f64>, bool)> {
    // degrees 2 and 3 without rational roots are irreducible
    if f.degree() <= 3 {
        return vec![(f, roots, true)];
    }
    let mut out = Vec::new();
    let mut rest = f;
    let mut remaining = roots;
    let mut budget = SUBSET_BUDGET;
    let mut proven = true;
    let mut size = 2;
    'sizes: while 2 * size <= remaining.len() {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            if budget == 0 {
                proven = false;
                break 'sizes;
            }
            budget -= 1;
            let subset: Vec<f64> = combo.iter().map(|&i| remaining[i]).collect();
            match rounded_product(&subset) {
                Rounded::Candidate(g) => {
                    if let Some(q) = rest.div_exact(&g) {
                        out.push((g, subset, true));
                        rest = q;
                        for &i in combo.iter().rev() {
                            remaining.remove(i);
                        }
                        // restart at this size on the smaller polynomial
                        continue 'sizes;
                    }
                }
                Rounded::Imprecise => proven = false,
                Rounded::NotIntegral => {}
            }
            if !next_combination(&mut combo, remaining.len()) {
                break;
            }
        }
        size += 1;
    }
    if rest.degree() > 0 {
        out.push((rest, remaining, proven));
    }
    out
}

enum Rounded {
    Candidate(IntPolynomial),
    NotIntegral,
    Imprecise,
}

fn rounded_product(roots: &[f64]) -> Rounded {
    // coefficients ascending of ∏ (x - r)
    let mut c = vec![1.0f64];
    for &r in roots {
        let mut next = vec![0.0; c.len() + 1];
        for (i, &a) in c.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= a * r;
        }
        c = next;
    }
    let mut coeffs = Vec::with_capacity(c.len());
    for &a in &c {
        if a.abs() > ROUNDING_LIMIT {
            return Rounded::Imprecise;
        }
        let r = a.round();
        if (a - r).abs() > 1e-4 * a.abs().max(1.0) {
            return Rounded::NotIntegral;
        }
        coeffs.push(BigInt::from_f64(r).expect("finite"));
    }
    Rounded::Candidate(IntPolynomial::new(coeffs))
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
