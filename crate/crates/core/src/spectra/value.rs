use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{Result, SpectraError};
use crate::poly::{factor_real_rooted, IntPolynomial};

/// A root `(s ± sqrt(disc)) / 2` of the irreducible quadratic `x^2 - s x + p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    pub sum: BigInt,
    pub disc: BigInt,
    pub positive: bool,
}

impl QuadraticSurd {
    /// `a + b·sqrt(d)` with `d` square-free.
    pub fn reduced(&self) -> (BigRational, BigRational, BigInt) {
        let (k, d) = square_free_split(&self.disc);
        let two = BigInt::from(2);
        let a = BigRational::new(self.sum.clone(), two.clone());
        let mut b = BigRational::new(k, two);
        if !self.positive {
            b = -b;
        }
        (a, b, d)
    }

    pub fn to_f64(&self) -> f64 {
        let s = self.sum.to_f64().unwrap_or(f64::NAN);
        let r = self.disc.to_f64().unwrap_or(f64::NAN).sqrt();
        if self.positive {
            (s + r) / 2.0
        } else {
            (s - r) / 2.0
        }
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.positive { '+' } else { '-' };
        if self.sum.is_zero() {
            let lead = if self.positive { "" } else { "-" };
            write!(f, "{lead}sqrt({})/2", self.disc)
        } else {
            write!(f, "({}{sign}sqrt({}))/2", self.sum, self.disc)
        }
    }
}

/// Writes `n = k^2 d` with `d` square-free, returning `(k, d)`.
fn square_free_split(n: &BigInt) -> (BigInt, BigInt) {
    let mut k = BigInt::one();
    let mut d = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= d {
        let sq = &p * &p;
        while (&d % &sq).is_zero() {
            d /= &sq;
            k *= &p;
        }
        p += 1;
    }
    (k, d)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExactForm {
    Integer(BigInt),
    Quadratic(QuadraticSurd),
    /// A root of a defining factor of degree at least three.
    Algebraic,
}

/// One eigenvalue: a root of an integer factor, exact when that factor has
/// degree at most two.
#[derive(Clone, Debug)]
pub struct Eigenvalue {
    /// Monic defining factor (irreducible unless the search was cut short).
    pub factor: IntPolynomial,
    /// Position among the factor's real roots, ascending from 0.
    pub root_index: usize,
    pub form: ExactForm,
    pub numeric: f64,
}

impl Eigenvalue {
    pub fn integer(v: impl Into<BigInt>) -> Self {
        let v = v.into();
        Eigenvalue {
            factor: IntPolynomial::linear(v.clone()),
            root_index: 0,
            numeric: v.to_f64().unwrap_or(f64::NAN),
            form: ExactForm::Integer(v),
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match &self.form {
            ExactForm::Integer(v) => Some(v),
            _ => None,
        }
    }

    pub fn exact_string(&self) -> String {
        match &self.form {
            ExactForm::Integer(v) => v.to_string(),
            ExactForm::Quadratic(q) => q.to_string(),
            ExactForm::Algebraic => {
                format!("root {} of {}", self.root_index + 1, self.factor)
            }
        }
    }
}

impl PartialEq for Eigenvalue {
    fn eq(&self, other: &Self) -> bool {
        self.factor == other.factor && self.root_index == other.root_index
    }
}

impl Eq for Eigenvalue {}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.exact_string())
    }
}

impl Serialize for Eigenvalue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Eigenvalue", 2)?;
        st.serialize_field("exact", &self.exact_string())?;
        st.serialize_field("numeric", &self.numeric)?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    pub value: Eigenvalue,
    pub multiplicity: usize,
}

/// Distinct eigenvalues with multiplicities, sorted by decreasing value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SpectrumSummary {
    entries: Vec<SpectrumEntry>,
}

impl SpectrumSummary {
    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    /// Sum of multiplicities.
    pub fn order(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn largest(&self) -> Option<&Eigenvalue> {
        self.entries.first().map(|e| &e.value)
    }

    pub fn smallest(&self) -> Option<&Eigenvalue> {
        self.entries.last().map(|e| &e.value)
    }

    /// Eigenvalues with multiplicity, largest first.
    pub fn numeric_values(&self) -> Vec<f64> {
        self.entries
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.value.numeric, e.multiplicity))
            .collect()
    }

    pub fn multiplicity_of(&self, v: i64) -> usize {
        let v = BigInt::from(v);
        self.entries
            .iter()
            .find(|e| e.value.as_integer() == Some(&v))
            .map_or(0, |e| e.multiplicity)
    }

    /// `∏ factor^multiplicity` over distinct defining factors.
    pub fn to_polynomial(&self) -> IntPolynomial {
        let mut seen: Vec<&IntPolynomial> = Vec::new();
        let mut out = IntPolynomial::one();
        for e in &self.entries {
            if seen.contains(&&e.value.factor) {
                continue;
            }
            seen.push(&e.value.factor);
            out = &out * &e.value.factor.pow(e.multiplicity);
        }
        out
    }

    /// Compact text such as `[12]^1, [5]^6, [2]^4`.
    pub fn display_compact(&self) -> String {
        self.entries
            .iter()
            .map(|e| format!("[{}]^{}", e.value, e.multiplicity))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for SpectrumSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.display_compact())
    }
}

/// Spectrum of a monic integer polynomial with only real roots.
/// `seeds` are optional approximate roots that speed up isolation.
pub fn spectrum_of_polynomial(p: &IntPolynomial, seeds: Option<&[f64]>) -> Result<SpectrumSummary> {
    if !p.is_monic() {
        return Err(SpectraError::NotMonic(p.to_string()));
    }
    let fact = factor_real_rooted(p, seeds);
    if fact.real_root_count != p.degree() {
        return Err(SpectraError::NotRealRooted {
            degree: p.degree(),
            real: fact.real_root_count,
        });
    }
    let mut entries = Vec::new();
    for f in fact.factors {
        for (idx, &root) in f.roots.iter().enumerate() {
            let form = match f.poly.degree() {
                1 => ExactForm::Integer(-f.poly.coeff(0)),
                2 => {
                    let sum = -f.poly.coeff(1);
                    let disc = &sum * &sum - BigInt::from(4) * f.poly.coeff(0);
                    ExactForm::Quadratic(QuadraticSurd {
                        sum,
                        disc,
                        positive: idx == 1,
                    })
                }
                _ => ExactForm::Algebraic,
            };
            let numeric = match &form {
                ExactForm::Integer(v) => v.to_f64().unwrap_or(root),
                _ => root,
            };
            entries.push(SpectrumEntry {
                value: Eigenvalue {
                    factor: f.poly.clone(),
                    root_index: idx,
                    form,
                    numeric,
                },
                multiplicity: f.multiplicity,
            });
        }
    }
    entries.sort_by(|a, b| {
        b.value
            .numeric
            .total_cmp(&a.value.numeric)
            .then_with(|| a.value.factor.to_string().cmp(&b.value.factor.to_string()))
    });
    Ok(SpectrumSummary { entries })
}

/// Builds a summary from integer eigenvalues with multiplicities.
pub fn integer_spectrum(values: &[(i64, usize)]) -> SpectrumSummary {
    let p = IntPolynomial::from_integer_roots(values);
    spectrum_of_polynomial(&p, None).expect("integer roots are real")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_display_keeps_unreduced_radicand() {
        let p = IntPolynomial::quadratic(20, 76);
        let s = spectrum_of_polynomial(&p, None).unwrap();
        let shown: Vec<String> = s.entries().iter().map(|e| e.value.to_string()).collect();
        assert_eq!(shown, vec!["(20+sqrt(96))/2", "(20-sqrt(96))/2"]);
        let ExactForm::Quadratic(q) = &s.entries()[0].value.form else {
            panic!("expected a surd");
        };
        let (a, b, d) = q.reduced();
        assert_eq!(a, BigRational::from_integer(10.into()));
        assert_eq!(b, BigRational::from_integer(2.into()));
        assert_eq!(d, BigInt::from(6));
    }

    #[test]
    fn summary_round_trips_to_polynomial() {
        let p = &IntPolynomial::from_integer_roots(&[(6, 1), (4, 5), (1, 4)])
            * &IntPolynomial::from_i64(&[-1, -3, 0, 1]);
        let s = spectrum_of_polynomial(&p, None).unwrap();
        assert_eq!(s.order(), 13);
        assert_eq!(s.to_polynomial(), p);
        assert_eq!(s.multiplicity_of(4), 5);
        let vals = s.numeric_values();
        assert!(vals.windows(2).all(|w| w[0] >= w[1]));
        assert!(s.entries().iter().any(|e| e.value.to_string() == "root 3 of x^3 - 3x - 1"));
    }

    #[test]
    fn rejects_complex_roots() {
        let p = IntPolynomial::from_i64(&[1, 0, 1]);
        assert!(matches!(
            spectrum_of_polynomial(&p, None),
            Err(SpectraError::NotRealRooted { .. })
        ));
    }

    #[test]
    fn json_shape() {
        let s = integer_spectrum(&[(3, 1), (-2, 4)]);
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(
            v,
            serde_json::json!([
                {"value": {"exact": "3", "numeric": 3.0}, "multiplicity": 1},
                {"value": {"exact": "-2", "numeric": -2.0}, "multiplicity": 4}
            ])
        );
    }
}
