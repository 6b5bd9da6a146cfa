//! Division-free characteristic polynomials (Berkowitz).
//!
//! Works over any commutative ring; runs in checked `i128` first and falls
//! back to big integers on overflow.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::IntPolynomial;

trait Ring: Clone + Sized {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
}

impl Ring for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

/// `det(xI - M)` for a square integer matrix, exactly.
pub fn charpoly_of_matrix(m: &[Vec<i64>]) -> IntPolynomial {
    let desc = match berkowitz::<i128>(m) {
        Some(c) => c.into_iter().map(BigInt::from).collect::<Vec<_>>(),
        None => berkowitz::<BigInt>(m).expect("big integers never overflow"),
    };
    IntPolynomial::new(desc.into_iter().rev().collect())
}

/// Coefficients in descending degree, or `None` on overflow.
fn berkowitz<T: Ring>(m: &[Vec<i64>]) -> Option<Vec<T>> {
    let n = m.len();
    let a = |i: usize, j: usize| T::from_i64(m[i][j]);
    // p holds det(xI - M_r) for the leading r×r block, descending
    let mut p: Vec<T> = vec![T::one()];
    for r in 0..n {
        // Toeplitz column t = [1, -a_rr, -R C, -R A C, ..., -R A^(r-1) C]
        let mut t = Vec::with_capacity(r + 2);
        t.push(T::one());
        t.push(a(r, r).neg()?);
        let mut u: Vec<T> = (0..r).map(|i| a(i, r)).collect();
        for k in 0..r {
            let mut dot = T::zero();
            for (j, uj) in u.iter().enumerate() {
                dot = dot.add(&a(r, j).mul(uj)?)?;
            }
            t.push(dot.neg()?);
            if k + 1 < r {
                let mut next = Vec::with_capacity(r);
                for i in 0..r {
                    let mut s = T::zero();
                    for (j, uj) in u.iter().enumerate() {
                        if m[i][j] != 0 {
                            s = s.add(&a(i, j).mul(uj)?)?;
                        }
                    }
                    next.push(s);
                }
                u = next;
            }
        }
        let mut q = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut s = T::zero();
            for (j, pj) in p.iter().enumerate().take(i + 1) {
                s = s.add(&t[i - j].mul(pj)?)?;
            }
            q.push(s);
        }
        p = q;
    }
    Some(p)
}
