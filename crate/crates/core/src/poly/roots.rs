//! Real root isolation with exact sign evaluation at rational points.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive};

use super::IntPolynomial;

/// An interval `[lo, hi]` holding exactly one root of the polynomial it came from.
/// `lo == hi` when the root is the rational endpoint itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn midpoint_f64(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        mid.to_f64().unwrap_or(f64::NAN)
    }
}

/// Isolates the real roots of a square-free polynomial, in ascending order.
///
/// `seeds` are approximate root locations (for example eigenvalues of a
/// matrix whose characteristic polynomial has `f` as a factor). They are
/// only trusted when they account for every root via exact sign changes;
/// otherwise a Sturm sequence decides.
pub fn isolate_real_roots(f: &IntPolynomial, seeds: Option<&[f64]>) -> Vec<RootInterval> {
    if f.degree() == 0 {
        return Vec::new();
    }
    if let Some(seeds) = seeds {
        if let Some(found) = isolate_from_seeds(f, seeds) {
            return found;
        }
    }
    isolate_sturm(f)
}

/// Bisects until the interval is narrower than `tol`, returning the midpoint.
pub fn refine_root(f: &IntPolynomial, iv: &RootInterval, tol: f64) -> f64 {
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    if lo == hi {
        return lo.to_f64().unwrap_or(f64::NAN);
    }
    let tol = BigRational::from_f64(tol).expect("finite tolerance");
    let two = BigRational::from_integer(2.into());
    let lo_sign = f.sign_at(&lo);
    while &hi - &lo > tol {
        let mid = (&lo + &hi) / &two;
        match f.sign_at(&mid) {
            Ordering::Equal => return mid.to_f64().unwrap_or(f64::NAN),
            s if s == lo_sign => lo = mid,
            _ => hi = mid,
        }
    }
    ((lo + hi) / two).to_f64().unwrap_or(f64::NAN)
}

fn isolate_from_seeds(f: &IntPolynomial, seeds: &[f64]) -> Option<Vec<RootInterval>> {
    let mut sorted: Vec<f64> = seeds.iter().copied().filter(|s| s.is_finite()).collect();
    sorted.sort_by(f64::total_cmp);
    let mut out: Vec<RootInterval> = Vec::new();
    let mut last_hi: Option<BigRational> = None;
    for s in sorted {
        let h = 1e-7 * s.abs().max(1.0);
        let lo = BigRational::from_f64(s - h)?;
        let hi = BigRational::from_f64(s + h)?;
        if last_hi.as_ref().is_some_and(|prev| &lo <= prev) {
            // overlaps the previous window: same cluster
            continue;
        }
        let (a, b) = (f.sign_at(&lo), f.sign_at(&hi));
        if a == Ordering::Equal || b == Ordering::Equal {
            return None;
        }
        if a != b {
            out.push(RootInterval {
                lo,
                hi: hi.clone(),
            });
            last_hi = Some(hi);
        }
    }
    // disjoint windows each hold an odd number of roots; d windows for a
    // degree-d polynomial means exactly one each
    (out.len() == f.degree()).then_some(out)
}

fn sturm_chain(f: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut chain = vec![f.clone(), f.derivative()];
    loop {
        let k = chain.len();
        let (a, b) = (&chain[k - 2], &chain[k - 1]);
        if b.degree() == 0 {
            break;
        }
        let mut r = a.pseudo_rem(b);
        // pseudo_rem scales by lc(b)^(da-db+1); undo a negative scale
        let steps = a.degree() - b.degree() + 1;
        if b.leading().is_negative() && steps % 2 == 1 {
            r = -&r;
        }
        if r.is_zero() {
            break;
        }
        let content = r.content();
        let next = IntPolynomial::new(r.coeffs().iter().map(|c| -(c / &content)).collect());
        chain.push(next);
    }
    chain
}

fn variations(chain: &[IntPolynomial], x: &BigRational) -> usize {
    let mut count = 0;
    let mut prev = Ordering::Equal;
    for p in chain {
        let s = p.sign_at(x);
        if s == Ordering::Equal {
            continue;
        }
        if prev != Ordering::Equal && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

fn isolate_sturm(f: &IntPolynomial) -> Vec<RootInterval> {
    let chain = sturm_chain(f);
    // Cauchy bound: every root satisfies |x| < 1 + max |c_i / c_d|
    let lead = f.leading().abs();
    let max_ratio = f.coeffs()[..f.degree()]
        .iter()
        .map(|c| (c.abs() + &lead - BigInt::one()) / &lead)
        .max()
        .unwrap_or_default();
    let bound = BigRational::from_integer(max_ratio + 1);
    let lo = -bound.clone();
    let vlo = variations(&chain, &lo);
    let vhi = variations(&chain, &bound);
    let mut out = Vec::new();
    split(f, &chain, lo, bound, vlo, vhi, &mut out);
    out
}

/// Roots in `(a, b]` number `va - vb`.
fn split(
    f: &IntPolynomial,
    chain: &[IntPolynomial],
    a: BigRational,
    b: BigRational,
    va: usize,
    vb: usize,
    out: &mut Vec<RootInterval>,
) {
    let count = va.saturating_sub(vb);
    if count == 0 {
        return;
    }
    if count == 1 {
        if f.sign_at(&b) == Ordering::Equal {
            out.push(RootInterval { lo: b.clone(), hi: b });
        } else {
            out.push(RootInterval { lo: a, hi: b });
        }
        return;
    }
    let width = &b - &a;
    let mut t = 1i64;
    let mid = loop {
        // midpoint first, then nearby fractions if it is a root
        let frac = BigRational::new(BigInt::from(t), BigInt::from(2 * t + 1 - (t == 1) as i64));
        let m = &a + &width * frac;
        if f.sign_at(&m) != Ordering::Equal {
            break m;
        }
        t += 1;
    };
    let vm = variations(chain, &mid);
    split(f, chain, a, mid.clone(), va, vm, out);
    split(f, chain, mid, b, vm, vb, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roots_of(f: &IntPolynomial, seeds: Option<&[f64]>) -> Vec<f64> {
        isolate_real_roots(f, seeds)
            .iter()
            .map(|iv| refine_root(f, iv, 1e-12))
            .collect()
    }

    #[test]
    fn sturm_isolates_surd_pair() {
        // x^2 - 20x + 76, roots 10 ± sqrt(24)
        let f = IntPolynomial::quadratic(20, 76);
        let r = roots_of(&f, None);
        let s = 24f64.sqrt();
        assert_eq!(r.len(), 2);
        assert!((r[0] - (10.0 - s)).abs() < 1e-11);
        assert!((r[1] - (10.0 + s)).abs() < 1e-11);
    }

    #[test]
    fn sturm_handles_close_and_integer_roots() {
        // (x-1)(x-2)(x-3)(x^2-2)
        let f = &IntPolynomial::from_integer_roots(&[(1, 1), (2, 1), (3, 1)])
            * &IntPolynomial::quadratic(0, -2);
        let r = roots_of(&f, None);
        let expect = [-(2f64.sqrt()), 1.0, 2f64.sqrt(), 2.0, 3.0];
        assert_eq!(r.len(), 5);
        for (a, b) in r.iter().zip(expect) {
            assert!((a - b).abs() < 1e-11, "{a} vs {b}");
        }
    }

    #[test]
    fn seeds_are_used_when_complete_and_ignored_when_not() {
        let f = IntPolynomial::from_i64(&[-1, -3, 0, 1]); // x^3 - 3x - 1
        let good = roots_of(&f, Some(&[-1.532088886237956, -0.347296355333861, 1.879385241571817]));
        let fallback = roots_of(&f, Some(&[5.0]));
        assert_eq!(good.len(), 3);
        for (a, b) in good.iter().zip(&fallback) {
            assert!((a - b).abs() < 1e-11);
        }
    }
}
