//! Problem instances `f_1(x_1), ..., f_d(x_d)` and the derivation
//! `Δ = Σ f_i(x_i) ∂/∂y_i` on `K[X_d, Y_d]`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::ring::{AMonomial, APoly, Monomial, PMonomial, PPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InstanceError {
    #[error("instance needs at least one variable")]
    Empty,
    #[error("\"d\" is {d} but {len} polynomials were given")]
    LengthMismatch { d: usize, len: usize },
    #[error("f{i} is the zero polynomial")]
    ZeroPolynomial { i: usize },
    #[error("f{i} is constant; every f_i must have positive degree")]
    ConstantPolynomial { i: usize },
    #[error("bad coefficient {text:?} in f{i}")]
    BadCoefficient { i: usize, text: String },
    #[error("malformed instance JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DerivationError {
    #[error("polynomial has d={got}, instance has d={expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("index {i} out of range 1..={d}")]
    IndexOutOfRange { i: usize, d: usize },
    #[error("polynomial involves variables other than x{i}")]
    NotUnivariate { i: usize },
}

/// A coefficient in an instance file: an integer or a rational literal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coef {
    Int(i64),
    Text(String),
}

/// On-disk form: `{"d": 3, "f": [[0,1],[1,0,1],[0,0,0,2]]}`, coefficient
/// lists in ascending degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub d: usize,
    pub f: Vec<Vec<Coef>>,
}

/// A validated instance: `d` nonconstant univariate polynomials.
///
/// Coefficient vectors are stored in ascending degree with no trailing
/// zeros, so `f[i].len() - 1` is `m_i` and the last entry is `lc_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemInstance {
    f: Vec<Vec<Rational>>,
}

impl ProblemInstance {
    pub fn new(f: Vec<Vec<Rational>>) -> Result<Self, InstanceError> {
        if f.is_empty() {
            return Err(InstanceError::Empty);
        }
        let mut out = Vec::with_capacity(f.len());
        for (n, mut coeffs) in f.into_iter().enumerate() {
            while coeffs.last().is_some_and(Zero::is_zero) {
                coeffs.pop();
            }
            match coeffs.len() {
                0 => return Err(InstanceError::ZeroPolynomial { i: n + 1 }),
                1 => return Err(InstanceError::ConstantPolynomial { i: n + 1 }),
                _ => out.push(coeffs),
            }
        }
        Ok(ProblemInstance { f: out })
    }

    /// Convenience constructor from integer coefficient lists.
    pub fn from_ints(f: &[&[i64]]) -> Result<Self, InstanceError> {
        Self::new(f.iter().map(|c| c.iter().map(|&v| crate::ring::int(v)).collect()).collect())
    }

    /// `f_i = x_i^{m_i}` for each entry of `m`.
    pub fn monomial(m: &[usize]) -> Result<Self, InstanceError> {
        Self::new(
            m.iter()
                .map(|&deg| {
                    let mut c = vec![Rational::zero(); deg + 1];
                    c[deg] = Rational::one();
                    c
                })
                .collect(),
        )
    }

    pub fn from_file(file: &InstanceFile) -> Result<Self, InstanceError> {
        if file.d != file.f.len() {
            return Err(InstanceError::LengthMismatch { d: file.d, len: file.f.len() });
        }
        let f = file
            .f
            .iter()
            .enumerate()
            .map(|(n, coeffs)| {
                coeffs
                    .iter()
                    .map(|c| match c {
                        Coef::Int(v) => Ok(crate::ring::int(*v)),
                        Coef::Text(t) => Rational::from_str(t.trim()).map_err(|_| {
                            InstanceError::BadCoefficient { i: n + 1, text: t.clone() }
                        }),
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(f)
    }

    pub fn from_json(text: &str) -> Result<Self, InstanceError> {
        let file: InstanceFile =
            serde_json::from_str(text).map_err(|e| InstanceError::Json(e.to_string()))?;
        Self::from_file(&file)
    }

    /// Echo in file form; integral coefficients stay integers.
    pub fn to_file(&self) -> InstanceFile {
        let f = self
            .f
            .iter()
            .map(|coeffs| {
                coeffs
                    .iter()
                    .map(|c| match i64::try_from(c.to_integer()) {
                        Ok(v) if c.is_integer() => Coef::Int(v),
                        _ => Coef::Text(c.to_string()),
                    })
                    .collect()
            })
            .collect();
        InstanceFile { d: self.d(), f }
    }

    pub fn d(&self) -> usize {
        self.f.len()
    }

    /// `m_i = deg f_i`, 1-based.
    pub fn degree(&self, i: usize) -> u32 {
        (self.f[i - 1].len() - 1) as u32
    }

    pub fn degrees(&self) -> Vec<u32> {
        (1..=self.d()).map(|i| self.degree(i)).collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Leading coefficient `lc_i`, 1-based.
    pub fn leading_coeff(&self, i: usize) -> &Rational {
        self.f[i - 1].last().expect("validated nonempty")
    }

    /// Coefficients of `f_i` in ascending degree.
    pub fn coeffs(&self, i: usize) -> &[Rational] {
        &self.f[i - 1]
    }

    /// `f_i(x_i)` as an element of `K[X_d, Y_d]`.
    pub fn f_in_a(&self, i: usize) -> APoly {
        let d = self.d();
        APoly::from_terms(
            d,
            self.coeffs(i).iter().enumerate().map(|(e, c)| {
                let mut m = AMonomial::one(d);
                m.set_x(i, e as u32);
                (m, c.clone())
            }),
        )
    }

    /// `f_i(x_i)` as an element of `K[X_d, U_d]`.
    pub fn f_in_p(&self, i: usize) -> PPoly {
        let d = self.d();
        PPoly::from_terms(
            d,
            self.coeffs(i).iter().enumerate().map(|(e, c)| {
                let mut m = PMonomial::one(d);
                m.set_x(i, e as u32);
                (m, c.clone())
            }),
        )
    }

    pub fn derivation(&self) -> Derivation<'_> {
        Derivation::new(self)
    }
}

impl fmt::Display for ProblemInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            (1..=self.d()).map(|i| format!("f{i} = {}", self.f_in_a(i))).collect();
        write!(f, "d = {}; {}", self.d(), parts.join(", "))
    }
}

/// `Δ(x_i) = 0`, `Δ(y_i) = f_i(x_i)`, extended by the Leibniz rule.
#[derive(Debug, Clone)]
pub struct Derivation<'a> {
    instance: &'a ProblemInstance,
    images: Vec<APoly>,
}

impl<'a> Derivation<'a> {
    pub fn new(instance: &'a ProblemInstance) -> Self {
        let images = (1..=instance.d()).map(|i| instance.f_in_a(i)).collect();
        Derivation { instance, images }
    }

    pub fn instance(&self) -> &ProblemInstance {
        self.instance
    }

    /// For `c x^a y^b`: `Σ_i c b_i x^a y^{b - e_i} f_i(x_i)`.
    pub fn apply(&self, g: &APoly) -> Result<APoly, DerivationError> {
        let d = self.instance.d();
        if g.dim() != d {
            return Err(DerivationError::DimensionMismatch { expected: d, got: g.dim() });
        }
        let mut out = APoly::zero(d);
        for (m, c) in g.terms() {
            for i in 1..=d {
                let b = m.y(i);
                if b == 0 {
                    continue;
                }
                let mut rest = m.clone();
                rest.set_y(i, b - 1);
                out.add_scaled(&self.images[i - 1], &rest, &(c * crate::ring::int(b as i64)));
            }
        }
        Ok(out)
    }

    pub fn is_constant(&self, g: &APoly) -> Result<bool, DerivationError> {
        Ok(self.apply(g)?.is_zero())
    }
}

/// Writes `g(x_i) = Σ_n q_n(x_i) f_i(x_i)^n` with `deg q_n < m_i`.
///
/// `g` must involve `x_i` only. Returns `q_0, ..., q_N` as polynomials in
/// `x_i`; the list always has at least one entry.
pub fn f_adic_expand(
    instance: &ProblemInstance,
    i: usize,
    g: &APoly,
) -> Result<Vec<APoly>, DerivationError> {
    let d = instance.d();
    if i == 0 || i > d {
        return Err(DerivationError::IndexOutOfRange { i, d });
    }
    if g.dim() != d {
        return Err(DerivationError::DimensionMismatch { expected: d, got: g.dim() });
    }
    let mut dense: Vec<Rational> = Vec::new();
    for (m, c) in g.terms() {
        let mut probe = m.clone();
        probe.set_x(i, 0);
        if !probe.is_one() {
            return Err(DerivationError::NotUnivariate { i });
        }
        let e = m.x(i) as usize;
        if dense.len() <= e {
            dense.resize(e + 1, Rational::zero());
        }
        dense[e] = c.clone();
    }
    let digits = f_adic_digits(instance.coeffs(i), &dense);
    Ok(digits
        .into_iter()
        .map(|q| {
            APoly::from_terms(
                d,
                q.into_iter().enumerate().map(|(e, c)| {
                    let mut m = AMonomial::one(d);
                    m.set_x(i, e as u32);
                    (m, c)
                }),
            )
        })
        .collect())
}

/// Dense form of [`f_adic_expand`]: repeated Euclidean division by `f`.
///
/// Both inputs are ascending coefficient vectors; `f` must have degree >= 1.
pub fn f_adic_digits(f: &[Rational], g: &[Rational]) -> Vec<Vec<Rational>> {
    let mut rest = uni::trim(g.to_vec());
    let mut digits = Vec::new();
    loop {
        let (quot, rem) = uni::div_rem(&rest, f);
        digits.push(rem);
        if quot.is_empty() {
            return digits;
        }
        rest = quot;
    }
}

/// Dense univariate helpers; vectors are ascending and trimmed.
pub(crate) mod uni {
    use num_traits::Zero;

    use crate::ring::Rational;

    pub fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    }

    pub fn div_rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let b = trim(b.to_vec());
        assert!(!b.is_empty(), "division by the zero polynomial");
        let mut rem = trim(a.to_vec());
        let db = b.len() - 1;
        if rem.len() < b.len() {
            return (Vec::new(), rem);
        }
        let lc = b[db].clone();
        let mut quot = vec![Rational::zero(); rem.len() - db];
        while rem.len() > db && !rem.is_empty() {
            let shift = rem.len() - 1 - db;
            let c = rem.last().unwrap() / &lc;
            for (t, bt) in b.iter().enumerate() {
                rem[shift + t] -= &c * bt;
            }
            quot[shift] = c;
            rem.pop();
            rem = trim(rem);
        }
        (trim(quot), rem)
    }

    #[cfg(test)]
    pub fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }

    #[cfg(test)]
    pub fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = a.len().max(b.len());
        let get = |v: &[Rational], i: usize| v.get(i).cloned().unwrap_or_else(Rational::zero);
        trim((0..n).map(|i| get(a, i) + get(b, i)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, parse_poly};

    fn a(s: &str, d: usize) -> APoly {
        parse_poly(s, d).unwrap()
    }

    #[test]
    fn delta_of_y_is_f() {
        let inst = ProblemInstance::monomial(&[2, 1]).unwrap();
        assert_eq!(inst.derivation().apply(&a("y1", 2)).unwrap(), a("x1^2", 2));
    }

    #[test]
    fn delta_kills_x() {
        let inst = ProblemInstance::monomial(&[2, 1]).unwrap();
        assert!(inst.derivation().apply(&a("x1^3", 2)).unwrap().is_zero());
    }

    #[test]
    fn determinant_is_constant() {
        let inst = ProblemInstance::monomial(&[1, 2]).unwrap();
        let g = a("x1*y2 - x2^2*y1", 2);
        assert!(inst.derivation().is_constant(&g).unwrap());
        assert!(!inst.derivation().is_constant(&a("y1", 2)).unwrap());
        assert!(inst.derivation().is_constant(&a("x1^4*x2 + 7", 2)).unwrap());
    }

    #[test]
    fn delta_uses_full_f() {
        let inst = ProblemInstance::from_ints(&[&[1, 0, 3], &[0, 1]]).unwrap();
        assert_eq!(inst.derivation().apply(&a("y1^2", 2)).unwrap(), a("6*x1^2*y1 + 2*y1", 2));
    }

    #[test]
    fn dimension_mismatch() {
        let inst = ProblemInstance::monomial(&[1, 1]).unwrap();
        assert_eq!(
            inst.derivation().apply(&a("y1", 3)).unwrap_err(),
            DerivationError::DimensionMismatch { expected: 2, got: 3 }
        );
    }

    #[test]
    fn rejects_degenerate_instances() {
        assert_eq!(
            ProblemInstance::from_ints(&[&[0, 1], &[5]]).unwrap_err(),
            InstanceError::ConstantPolynomial { i: 2 }
        );
        assert_eq!(
            ProblemInstance::from_ints(&[&[0, 1], &[0, 0]]).unwrap_err(),
            InstanceError::ZeroPolynomial { i: 2 }
        );
        assert_eq!(
            ProblemInstance::from_ints(&[&[], &[0, 1]]).unwrap_err(),
            InstanceError::ZeroPolynomial { i: 1 }
        );
        // trailing zeros do not count towards the degree
        assert_eq!(
            ProblemInstance::from_ints(&[&[3, 0, 0]]).unwrap_err(),
            InstanceError::ConstantPolynomial { i: 1 }
        );
        assert_eq!(ProblemInstance::new(vec![]).unwrap_err(), InstanceError::Empty);
    }

    #[test]
    fn parses_instance_json() {
        let inst =
            ProblemInstance::from_json(r#"{"d": 3, "f": [[0,1],[1,0,1],[0,0,0,"2"]]}"#).unwrap();
        assert_eq!(inst.degrees(), vec![1, 2, 3]);
        assert_eq!(inst.leading_coeff(3), &int(2));
        assert_eq!(inst.f_in_a(2), a("x2^2 + 1", 3));
        let frac = ProblemInstance::from_json(r#"{"d": 1, "f": [["-3/2", "3/2"]]}"#).unwrap();
        assert_eq!(frac.leading_coeff(1), &Rational::new(3.into(), 2.into()));
        assert_eq!(ProblemInstance::from_file(&frac.to_file()).unwrap(), frac);
    }

    #[test]
    fn instance_json_errors() {
        assert!(matches!(
            ProblemInstance::from_json(r#"{"d": 2, "f": [[0,1]]}"#),
            Err(InstanceError::LengthMismatch { d: 2, len: 1 })
        ));
        assert!(matches!(
            ProblemInstance::from_json(r#"{"d": 1, "f": [[0,"a"]]}"#),
            Err(InstanceError::BadCoefficient { i: 1, .. })
        ));
        assert!(matches!(
            ProblemInstance::from_json(r#"{"d": 1, "f": [[0,"1/0"]]}"#),
            Err(InstanceError::BadCoefficient { .. })
        ));
        assert!(matches!(ProblemInstance::from_json("{"), Err(InstanceError::Json(_))));
        assert!(matches!(
            ProblemInstance::from_json(r#"{"d": 1, "f": [[0,1]], "g": 1}"#),
            Err(InstanceError::Json(_))
        ));
    }

    #[test]
    fn f_adic_examples() {
        // f = x^2 + 1, g = x^3 = x (x^2 + 1) - x
        let inst = ProblemInstance::from_ints(&[&[1, 0, 1]]).unwrap();
        let q = f_adic_expand(&inst, 1, &a("x1^3", 1)).unwrap();
        assert_eq!(q, vec![a("-x1", 1), a("x1", 1)]);
        let q = f_adic_expand(&inst, 1, &a("5", 1)).unwrap();
        assert_eq!(q, vec![a("5", 1)]);
        let q = f_adic_expand(&inst, 1, &inst.f_in_a(1)).unwrap();
        assert_eq!(q, vec![APoly::zero(1), APoly::one(1)]);
        assert_eq!(
            f_adic_expand(&inst, 1, &APoly::zero(1)).unwrap(),
            vec![APoly::zero(1)]
        );
    }

    #[test]
    fn f_adic_rejects_other_variables() {
        let inst = ProblemInstance::monomial(&[2, 2]).unwrap();
        assert_eq!(
            f_adic_expand(&inst, 1, &a("x1 + x2", 2)).unwrap_err(),
            DerivationError::NotUnivariate { i: 1 }
        );
        assert_eq!(
            f_adic_expand(&inst, 1, &a("y1", 2)).unwrap_err(),
            DerivationError::NotUnivariate { i: 1 }
        );
        assert!(matches!(
            f_adic_expand(&inst, 3, &a("x1", 2)),
            Err(DerivationError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn div_rem_reassembles() {
        let a_: Vec<Rational> = [3, -1, 4, 1, -5, 9].iter().map(|&v| int(v)).collect();
        let b_: Vec<Rational> = [2, 0, 7].iter().map(|&v| int(v)).collect();
        let (q, r) = uni::div_rem(&a_, &b_);
        assert!(r.len() < b_.len());
        assert_eq!(uni::add(&uni::mul(&q, &b_), &r), uni::trim(a_));
    }
}
