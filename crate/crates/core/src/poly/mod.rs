//! Univariate polynomials with arbitrary-precision integer coefficients.

mod factor;
mod roots;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use factor::{factor_real_rooted, Factorization, IrreducibleFactor};
pub use roots::{isolate_real_roots, refine_root, RootInterval};

/// Coefficients in ascending degree; no trailing zeros (the zero polynomial is empty).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x - r`
    pub fn linear(root: impl Into<BigInt>) -> Self {
        IntPolynomial {
            coeffs: vec![-root.into(), BigInt::one()],
        }
    }

    /// `x^2 - s x + p`
    pub fn quadratic(sum: impl Into<BigInt>, product: impl Into<BigInt>) -> Self {
        IntPolynomial {
            coeffs: vec![product.into(), -sum.into(), BigInt::one()],
        }
    }

    /// `∏ (x - r)^m` over integer roots.
    pub fn from_integer_roots(roots: &[(i64, usize)]) -> Self {
        roots.iter().fold(Self::one(), |acc, &(r, m)| {
            &acc * &Self::linear(r).pow(m)
        })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from(c.clone()))
    }

    /// Sign of `self(num / den)` for `den > 0`, computed exactly.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let (num, den) = (x.numer(), x.denom());
        debug_assert!(den.is_positive());
        // homogenised Horner: Σ c_i num^i den^(d-i)
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc.cmp(&BigInt::zero())
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// `self(x - c)`: every root moves up by `c`.
    pub fn shift(&self, c: &BigInt) -> Self {
        // Horner with the linear polynomial (x - c)
        let step = Self::linear(c.clone());
        self.coeffs.iter().rev().fold(Self::zero(), |acc, coef| {
            &(&acc * &step) + &Self::constant(coef.clone())
        })
    }

    /// `(-1)^deg self(-x)`: roots are negated, monic stays monic.
    pub fn reflect(&self) -> Self {
        let d = self.degree();
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if (d - i) % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides by the content, making the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Quotient and remainder when the divisor's leading coefficient divides
    /// every intermediate leading term; `None` otherwise.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dl = divisor.leading();
        let dd = divisor.degree();
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let lead = &rem[i + dd];
            if lead.is_zero() {
                continue;
            }
            let (q, r) = lead.div_rem(&dl);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient, or `None` if `divisor` does not divide `self` over the integers.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        match self.div_rem(divisor) {
            Some((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// `lc(b)^(deg a - deg b + 1) · a mod b`.
    fn pseudo_rem(&self, b: &Self) -> Self {
        let mut rem = self.clone();
        let bl = b.leading();
        let bd = b.degree();
        while !rem.is_zero() && rem.degree() >= bd {
            let shift = rem.degree() - bd;
            let rl = rem.leading();
            let scaled: Vec<BigInt> = rem.coeffs.iter().map(|c| c * &bl).collect();
            let mut next = scaled;
            for (j, c) in b.coeffs.iter().enumerate() {
                next[shift + j] -= &rl * c;
            }
            rem = Self::new(next);
        }
        rem
    }

    /// Greatest common divisor, primitive with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        let content = self.content().gcd(&other.content());
        &a.primitive_part() * &Self::constant(content.max(BigInt::one()))
    }

    /// Square-free decomposition of a monic polynomial (Yun):
    /// `self = ∏ fᵢ^i` with the `fᵢ` square-free and pairwise coprime.
    /// Trivial factors are omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree() == 0 {
            return out;
        }
        let f = self.primitive_part();
        let df = f.derivative();
        let mut a = f.gcd(&df).primitive_part();
        let mut b = f.div_exact(&a).expect("gcd divides");
        let mut c = df.div_exact(&a).expect("gcd divides derivative");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            a = b.gcd(&d).primitive_part();
            if a.degree() > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a).expect("gcd divides");
            if b.degree() == 0 {
                break;
            }
            c = d.div_exact(&a).expect("gcd divides");
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Number of times `x - r` divides `self`.
    pub fn root_multiplicity(&self, r: &BigInt) -> usize {
        if self.is_zero() {
            return 0;
        }
        let lin = Self::linear(r.clone());
        let mut p = self.clone();
        let mut m = 0;
        while let Some(q) = p.div_exact(&lin) {
            p = q;
            m += 1;
        }
        m
    }

    /// Power sums `T_0..=T_kmax` of the roots (with multiplicity) of a monic
    /// polynomial, by Newton's identities.
    pub fn power_sums(&self, kmax: usize) -> Vec<BigInt> {
        assert!(self.is_monic(), "power sums need a monic polynomial");
        let n = self.degree();
        // a(i) is the coefficient of x^(n-i)
        let a = |i: usize| -> BigInt {
            if i > n {
                BigInt::zero()
            } else {
                self.coeffs[n - i].clone()
            }
        };
        let mut t = Vec::with_capacity(kmax + 1);
        t.push(BigInt::from(n));
        for k in 1..=kmax {
            let mut s = a(k) * BigInt::from(k);
            for i in 1..k {
                s += a(i) * &t[k - i];
            }
            t.push(-s);
        }
        t
    }

    /// Number of roots strictly greater than `c`. Exact when every root is
    /// real, since Descartes' rule of signs is then sharp.
    pub fn real_roots_above(&self, c: &BigInt) -> usize {
        let shifted = self.shift(&-c);
        let mut prev: Option<bool> = None;
        let mut changes = 0;
        for coef in shifted.coeffs.iter().filter(|x| !x.is_zero()) {
            let pos = coef.is_positive();
            if prev.is_some_and(|p| p != pos) {
                changes += 1;
            }
            prev = Some(pos);
        }
        changes
    }

    /// Number of roots strictly less than `c`; same precondition as
    /// [`real_roots_above`](Self::real_roots_above).
    pub fn real_roots_below(&self, c: &BigInt) -> usize {
        self.reflect().real_roots_above(&-c)
    }

    /// Integer roots of a polynomial whose roots all lie in `[-bound, bound]`.
    pub fn integer_roots_within(&self, bound: u64) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let b = bound as i64;
        (-b..=b)
            .map(BigInt::from)
            .filter(|r| self.eval(r).is_zero())
            .collect()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new(
            (0..len)
                .map(|i| self.coeff(i) + rhs.coeff(i))
                .collect(),
        )
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new(
            (0..len)
                .map(|i| self.coeff(i) - rhs.coeff(i))
                .collect(),
        )
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}
