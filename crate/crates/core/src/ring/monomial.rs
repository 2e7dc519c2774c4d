use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;

use super::RingError;

/// A ring variable with 1-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X(usize),
    Y(usize),
    U(usize, usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
            Var::U(j, k) => write!(f, "u{j}_{k}"),
        }
    }
}

/// Exponent data of a monomial in one of the two ring flavors.
///
/// `Ord` must be an admissible order; it is the storage and printing order
/// of [`Polynomial`](super::Polynomial).
pub trait Monomial: Clone + Eq + Ord + Hash + fmt::Debug + Send + Sync {
    fn one(d: usize) -> Self;
    /// The `d` of the ring this monomial lives in.
    fn dim(&self) -> usize;
    fn mul(&self, other: &Self) -> Self;
    fn try_div(&self, other: &Self) -> Option<Self>;
    fn lcm(&self, other: &Self) -> Self;
    fn gcd_is_one(&self, other: &Self) -> bool;
    fn total_degree(&self) -> u32;
    fn from_var(d: usize, var: Var, exp: u32) -> Result<Self, RingError>;
    /// Nonzero factors in printing order.
    fn factors(&self) -> Vec<(Var, u32)>;

    fn is_one(&self) -> bool {
        self.total_degree() == 0
    }

    fn divides(&self, other: &Self) -> bool {
        other.try_div(self).is_some()
    }
}

fn check_index(var: Var, i: usize, d: usize) -> Result<(), RingError> {
    if i == 0 || i > d {
        return Err(RingError::IndexOutOfRange { var: var.to_string(), d });
    }
    Ok(())
}

fn add_exps(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(s, t)| s + t).collect()
}

fn sub_exps(a: &[u32], b: &[u32]) -> Option<Vec<u32>> {
    a.iter().zip(b).map(|(s, t)| s.checked_sub(*t)).collect()
}

fn max_exps(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(s, t)| *s.max(t)).collect()
}

fn disjoint(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(s, t)| *s == 0 || *t == 0)
}

/// Monomial `x_1^{a_1} y_1^{b_1} ... x_d^{a_d} y_d^{b_d}` of `K[X_d, Y_d]`.
///
/// Exponents are stored interleaved as `(a_1, b_1, ..., a_d, b_d)`, so the
/// derived `Ord` is exactly the lexicographic order with precedence
/// `x_1 > y_1 > x_2 > ... > y_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AMonomial {
    exps: Vec<u32>,
}

impl AMonomial {
    pub fn new(x: &[u32], y: &[u32]) -> Self {
        assert_eq!(x.len(), y.len(), "x and y exponent vectors differ in length");
        let exps = x.iter().zip(y).flat_map(|(a, b)| [*a, *b]).collect();
        AMonomial { exps }
    }

    /// Exponent of `x_i` (1-based).
    pub fn x(&self, i: usize) -> u32 {
        self.exps[2 * (i - 1)]
    }

    /// Exponent of `y_i` (1-based).
    pub fn y(&self, i: usize) -> u32 {
        self.exps[2 * (i - 1) + 1]
    }

    pub fn set_x(&mut self, i: usize, e: u32) {
        self.exps[2 * (i - 1)] = e;
    }

    pub fn set_y(&mut self, i: usize, e: u32) {
        self.exps[2 * (i - 1) + 1] = e;
    }

    /// The interleaved tuple `(a_1, b_1, ..., a_d, b_d)`.
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn y_degree(&self) -> u32 {
        self.exps.iter().skip(1).step_by(2).sum()
    }
}

impl Monomial for AMonomial {
    fn one(d: usize) -> Self {
        AMonomial { exps: vec![0; 2 * d] }
    }

    fn dim(&self) -> usize {
        self.exps.len() / 2
    }

    fn mul(&self, other: &Self) -> Self {
        AMonomial { exps: add_exps(&self.exps, &other.exps) }
    }

    fn try_div(&self, other: &Self) -> Option<Self> {
        sub_exps(&self.exps, &other.exps).map(|exps| AMonomial { exps })
    }

    fn lcm(&self, other: &Self) -> Self {
        AMonomial { exps: max_exps(&self.exps, &other.exps) }
    }

    fn gcd_is_one(&self, other: &Self) -> bool {
        disjoint(&self.exps, &other.exps)
    }

    fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    fn from_var(d: usize, var: Var, exp: u32) -> Result<Self, RingError> {
        let mut m = Self::one(d);
        match var {
            Var::X(i) => {
                check_index(var, i, d)?;
                m.set_x(i, exp);
            }
            Var::Y(i) => {
                check_index(var, i, d)?;
                m.set_y(i, exp);
            }
            Var::U(..) => return Err(RingError::ForeignVariable { var: var.to_string() }),
        }
        Ok(m)
    }

    fn factors(&self) -> Vec<(Var, u32)> {
        let d = self.dim();
        let xs = (1..=d).filter(|&i| self.x(i) > 0).map(|i| (Var::X(i), self.x(i)));
        let ys = (1..=d).filter(|&i| self.y(i) > 0).map(|i| (Var::Y(i), self.y(i)));
        xs.chain(ys).collect()
    }
}

/// Number of pairs `(j, k)` with `1 <= j < k <= d`.
pub fn pair_count(d: usize) -> usize {
    d * d.saturating_sub(1) / 2
}

/// Position of `u_{jk}` in the ascending `(j, then k)` enumeration.
pub fn pair_index(d: usize, j: usize, k: usize) -> usize {
    debug_assert!(1 <= j && j < k && k <= d);
    // rows 1..j-1 contribute (d - t) pairs each
    (j - 1) * d - (j - 1) * j / 2 + (k - j - 1)
}

/// All pairs `(j, k)`, `1 <= j < k <= d`, in ascending order.
pub fn pairs(d: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=d).flat_map(move |j| (j + 1..=d).map(move |k| (j, k)))
}

/// Monomial `x_1^{a_1} ... x_d^{a_d} * prod u_{jk}^{e_{jk}}` of `K[X_d, U_d]`.
///
/// The `u` exponents are kept densely over all pairs in ascending
/// `(j, k)` order; zero means the variable is absent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PMonomial {
    d: usize,
    x: Vec<u32>,
    u: Vec<u32>,
}

impl PMonomial {
    pub fn new(x: Vec<u32>, u_exps: &[((usize, usize), u32)]) -> Result<Self, RingError> {
        let d = x.len();
        let mut m = PMonomial { d, x, u: vec![0; pair_count(d)] };
        for &((j, k), e) in u_exps {
            if j >= k {
                return Err(RingError::PairNotAscending { j, k });
            }
            check_index(Var::U(j, k), j, d)?;
            check_index(Var::U(j, k), k, d)?;
            m.u[pair_index(d, j, k)] += e;
        }
        Ok(m)
    }

    pub fn x(&self, i: usize) -> u32 {
        self.x[i - 1]
    }

    pub fn u(&self, j: usize, k: usize) -> u32 {
        self.u[pair_index(self.d, j, k)]
    }

    pub fn set_x(&mut self, i: usize, e: u32) {
        self.x[i - 1] = e;
    }

    pub fn x_exponents(&self) -> &[u32] {
        &self.x
    }

    /// Dense `u` exponents in ascending pair order.
    pub fn u_exponents(&self) -> &[u32] {
        &self.u
    }

    /// `(j, k, e)` for every `u_{jk}` present, ascending.
    pub fn u_factors(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        pairs(self.d).zip(&self.u).filter(|(_, e)| **e > 0).map(|((j, k), e)| (j, k, *e))
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().sum()
    }

    pub fn u_degree(&self) -> u32 {
        self.u.iter().sum()
    }

    /// Total interval length `sum e_{jk} (k - j)`.
    pub fn interval_length(&self) -> u32 {
        self.u_factors().map(|(j, k, e)| e * (k - j) as u32).sum()
    }

    /// Multiplies in `u_{jk}^e`.
    pub fn with_u(mut self, j: usize, k: usize, e: u32) -> Self {
        let idx = pair_index(self.d, j, k);
        self.u[idx] += e;
        self
    }
}

impl Ord for PMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        crate::dill_gb::compare_corrected(self, other)
    }
}

impl PartialOrd for PMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial for PMonomial {
    fn one(d: usize) -> Self {
        PMonomial { d, x: vec![0; d], u: vec![0; pair_count(d)] }
    }

    fn dim(&self) -> usize {
        self.d
    }

    fn mul(&self, other: &Self) -> Self {
        PMonomial { d: self.d, x: add_exps(&self.x, &other.x), u: add_exps(&self.u, &other.u) }
    }

    fn try_div(&self, other: &Self) -> Option<Self> {
        Some(PMonomial {
            d: self.d,
            x: sub_exps(&self.x, &other.x)?,
            u: sub_exps(&self.u, &other.u)?,
        })
    }

    fn lcm(&self, other: &Self) -> Self {
        PMonomial { d: self.d, x: max_exps(&self.x, &other.x), u: max_exps(&self.u, &other.u) }
    }

    fn gcd_is_one(&self, other: &Self) -> bool {
        disjoint(&self.x, &other.x) && disjoint(&self.u, &other.u)
    }

    fn total_degree(&self) -> u32 {
        self.x_degree() + self.u_degree()
    }

    fn from_var(d: usize, var: Var, exp: u32) -> Result<Self, RingError> {
        let mut m = Self::one(d);
        match var {
            Var::X(i) => {
                check_index(var, i, d)?;
                m.set_x(i, exp);
            }
            Var::U(j, k) => {
                check_index(var, j, d)?;
                check_index(var, k, d)?;
                if j >= k {
                    return Err(RingError::PairNotAscending { j, k });
                }
                m.u[pair_index(d, j, k)] = exp;
            }
            Var::Y(..) => return Err(RingError::ForeignVariable { var: var.to_string() }),
        }
        Ok(m)
    }

    fn factors(&self) -> Vec<(Var, u32)> {
        let xs = (1..=self.d).filter(|&i| self.x(i) > 0).map(|i| (Var::X(i), self.x(i)));
        let us = self.u_factors().map(|(j, k, e)| (Var::U(j, k), e));
        xs.chain(us).collect()
    }
}
