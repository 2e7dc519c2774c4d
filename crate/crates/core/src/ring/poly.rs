use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, Rational, RingError, Var};

/// Sparse polynomial: a map from monomials to nonzero rational coefficients.
///
/// The zero polynomial is the empty map. Values are immutable once built;
/// every operation returns a fresh, normalized polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<M: Monomial> {
    d: usize,
    terms: BTreeMap<M, Rational>,
}

impl<M: Monomial> Polynomial<M> {
    pub fn zero(d: usize) -> Self {
        Polynomial { d, terms: BTreeMap::new() }
    }

    pub fn one(d: usize) -> Self {
        Self::constant(d, Rational::one())
    }

    pub fn constant(d: usize, c: Rational) -> Self {
        Self::term(M::one(d), c)
    }

    pub fn term(m: M, c: Rational) -> Self {
        let mut p = Self::zero(m.dim());
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: M) -> Self {
        Self::term(m, Rational::one())
    }

    pub fn var(d: usize, var: Var) -> Result<Self, RingError> {
        Ok(Self::monomial(M::from_var(d, var, 1)?))
    }

    /// Collects `(monomial, coefficient)` pairs, merging duplicates.
    pub fn from_terms(d: usize, terms: impl IntoIterator<Item = (M, Rational)>) -> Self {
        let mut p = Self::zero(d);
        for (m, c) in terms {
            assert_eq!(m.dim(), d, "monomial dimension differs from polynomial dimension");
            p.add_term(m, c);
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending native order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&M, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &M> + '_ {
        self.terms.keys().rev()
    }

    pub fn coeff(&self, m: &M) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest internal total degree among the terms; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub(crate) fn add_term(&mut self, m: M, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn remove_term(&mut self, m: &M) -> Option<Rational> {
        self.terms.remove(m)
    }

    /// Leading monomial and coefficient under `order`.
    pub fn leading_term<O: MonomialOrder<M>>(&self, order: &O) -> Result<(&M, &Rational), RingError> {
        if order.is_native() {
            return self.terms.last_key_value().ok_or(RingError::ZeroPolynomial);
        }
        self.terms
            .iter()
            .max_by(|a, b| order.compare(a.0, b.0))
            .ok_or(RingError::ZeroPolynomial)
    }

    pub fn leading_monomial<O: MonomialOrder<M>>(&self, order: &O) -> Result<&M, RingError> {
        self.leading_term(order).map(|(m, _)| m)
    }

    fn check_dim(&self, other: &Self) -> Result<(), RingError> {
        if self.d != other.d {
            return Err(RingError::DimensionMismatch { left: self.d, right: other.d });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.d);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.d);
        }
        Polynomial {
            d: self.d,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &M, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.d);
        }
        // multiplication by a monomial is injective and order preserving,
        // so no collisions can occur
        Polynomial {
            d: self.d,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    /// `self += c * m * other`, in place.
    pub(crate) fn add_scaled(&mut self, other: &Self, m: &M, c: &Rational) {
        for (t, a) in &other.terms {
            self.add_term(t.mul(m), a * c);
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.d);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Divides through by the coefficient of the leading term under `order`.
    pub fn make_monic<O: MonomialOrder<M>>(&self, order: &O) -> Self {
        match self.leading_term(order) {
            Ok((_, c)) => self.scale(&c.recip()),
            Err(_) => self.clone(),
        }
    }
}

impl<M: Monomial> Add for &Polynomial<M> {
    type Output = Polynomial<M>;
    fn add(self, rhs: Self) -> Polynomial<M> {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl<M: Monomial> Sub for &Polynomial<M> {
    type Output = Polynomial<M>;
    fn sub(self, rhs: Self) -> Polynomial<M> {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl<M: Monomial> Mul for &Polynomial<M> {
    type Output = Polynomial<M>;
    fn mul(self, rhs: Self) -> Polynomial<M> {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl<M: Monomial> Add for Polynomial<M> {
    type Output = Polynomial<M>;
    fn add(self, rhs: Self) -> Polynomial<M> {
        &self + &rhs
    }
}

impl<M: Monomial> Sub for Polynomial<M> {
    type Output = Polynomial<M>;
    fn sub(self, rhs: Self) -> Polynomial<M> {
        &self - &rhs
    }
}

impl<M: Monomial> Mul for Polynomial<M> {
    type Output = Polynomial<M>;
    fn mul(self, rhs: Self) -> Polynomial<M> {
        &self * &rhs
    }
}

impl<M: Monomial> Neg for &Polynomial<M> {
    type Output = Polynomial<M>;
    fn neg(self) -> Polynomial<M> {
        Polynomial {
            d: self.d,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl<M: Monomial> Neg for Polynomial<M> {
    type Output = Polynomial<M>;
    fn neg(self) -> Polynomial<M> {
        -&self
    }
}

pub(crate) fn fmt_monomial<M: Monomial>(m: &M) -> String {
    m.factors()
        .into_iter()
        .map(|(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

/// Prints in the text grammar accepted by [`parse_poly`](super::parse_poly),
/// terms in descending native order.
impl<M: Monomial> fmt::Display for Polynomial<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (n, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                (_, s) => write!(f, " {s} ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&fmt_monomial(m))?;
            } else {
                write!(f, "{abs}*{}", fmt_monomial(m))?;
            }
        }
        Ok(())
    }
}
