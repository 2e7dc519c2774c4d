use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ring::{Monomial, MonomialOrder, PMonomial, RingError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderVariant {
    #[default]
    Corrected,
    PaperLiteral,
}

impl fmt::Display for OrderVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderVariant::Corrected => "corrected",
            OrderVariant::PaperLiteral => "paper",
        })
    }
}

impl FromStr for OrderVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "corrected" => Ok(OrderVariant::Corrected),
            "paper" | "paper_literal" | "paper-literal" => Ok(OrderVariant::PaperLiteral),
            other => Err(format!("unknown order variant {other:?} (expected corrected|paper)")),
        }
    }
}

/// Comparison key of a `P`-monomial.
///
/// `tie` is variant dependent: for the corrected variant it is the exponent
/// vector `(e_{1,2}, ..., e_{d-1,d}, a_1, ..., a_d)`; for the literal variant
/// it is `ω = (i_1..i_p, j_1..j_q, k_1..k_q)` with every index repeated by
/// its multiplicity. In both cases the larger tuple wins.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DillKey {
    pub x_degree: u32,
    pub u_degree: u32,
    pub interval_length: u32,
    pub tie: Vec<u32>,
}

impl DillKey {
    pub fn of(m: &PMonomial, variant: OrderVariant) -> Self {
        let tie = match variant {
            OrderVariant::Corrected => {
                m.u_exponents().iter().chain(m.x_exponents()).copied().collect()
            }
            OrderVariant::PaperLiteral => omega(m),
        };
        DillKey {
            x_degree: m.x_degree(),
            u_degree: m.u_degree(),
            interval_length: m.interval_length(),
            tie,
        }
    }

    pub fn compare(&self, other: &Self, variant: OrderVariant) -> Ordering {
        let graded = match variant {
            OrderVariant::Corrected => (self.u_degree, self.interval_length, self.x_degree)
                .cmp(&(other.u_degree, other.interval_length, other.x_degree)),
            OrderVariant::PaperLiteral => (self.x_degree, self.u_degree, self.interval_length)
                .cmp(&(other.x_degree, other.u_degree, other.interval_length)),
        };
        graded.then_with(|| self.tie.cmp(&other.tie))
    }
}

fn omega(m: &PMonomial) -> Vec<u32> {
    let mut out = Vec::new();
    for i in 1..=m.dim() {
        out.extend(std::iter::repeat_n(i as u32, m.x(i) as usize));
    }
    // pairs come out ascending in (j, k), which is the required sort
    let factors: Vec<(usize, usize, u32)> = m.u_factors().collect();
    for &(j, _, e) in &factors {
        out.extend(std::iter::repeat_n(j as u32, e as usize));
    }
    for &(_, k, e) in &factors {
        out.extend(std::iter::repeat_n(k as u32, e as usize));
    }
    out
}

pub(crate) fn compare_corrected(a: &PMonomial, b: &PMonomial) -> Ordering {
    (a.u_degree(), a.interval_length(), a.x_degree())
        .cmp(&(b.u_degree(), b.interval_length(), b.x_degree()))
        .then_with(|| a.u_exponents().cmp(b.u_exponents()))
        .then_with(|| a.x_exponents().cmp(b.x_exponents()))
}

pub fn dill_compare(
    a: &PMonomial,
    b: &PMonomial,
    variant: OrderVariant,
) -> Result<Ordering, RingError> {
    if a.dim() != b.dim() {
        return Err(RingError::DimensionMismatch { left: a.dim(), right: b.dim() });
    }
    Ok(DillOrder::new(variant).compare(a, b))
}

/// DILL order as a [`MonomialOrder`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DillOrder {
    pub variant: OrderVariant,
}

impl DillOrder {
    pub fn new(variant: OrderVariant) -> Self {
        DillOrder { variant }
    }

    pub fn corrected() -> Self {
        Self::new(OrderVariant::Corrected)
    }
}

impl MonomialOrder<PMonomial> for DillOrder {
    fn compare(&self, a: &PMonomial, b: &PMonomial) -> Ordering {
        match self.variant {
            OrderVariant::Corrected => compare_corrected(a, b),
            OrderVariant::PaperLiteral => DillKey::of(a, self.variant)
                .compare(&DillKey::of(b, self.variant), self.variant),
        }
    }

    fn is_native(&self) -> bool {
        self.variant == OrderVariant::Corrected
    }
}
