use std::cmp::Ordering;

use num_traits::Zero;

use crate::ring::{Monomial, MonomialOrder, Polynomial, Rational};

/// Pair-queue bound for [`buchberger_complete`].
pub const DEFAULT_PAIR_BUDGET: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GbError {
    #[error("S-polynomial of a zero polynomial")]
    ZeroInput,
    #[error("empty generating set")]
    EmptyInput,
    #[error("pair queue exceeded the budget of {budget} pairs")]
    BudgetExceeded { budget: usize },
}

/// Result of a full reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction<M: Monomial> {
    pub remainder: Polynomial<M>,
    /// Number of single-step reductions performed.
    pub steps: usize,
}

fn max_term<M: Monomial, O: MonomialOrder<M>>(p: &Polynomial<M>, order: &O) -> Option<(M, Rational)> {
    p.leading_term(order).ok().map(|(m, c)| (m.clone(), c.clone()))
}

/// Full normal form of `p` modulo `basis`.
///
/// The order-maximal reducible monomial is always eliminated first, using
/// the first basis element (in list order) whose leading monomial divides
/// it. Zero elements of `basis` are ignored.
pub fn reduce_with_steps<M: Monomial, O: MonomialOrder<M>>(
    p: &Polynomial<M>,
    basis: &[Polynomial<M>],
    order: &O,
) -> Reduction<M> {
    let leads: Vec<(usize, M, Rational)> = basis
        .iter()
        .enumerate()
        .filter_map(|(n, g)| g.leading_term(order).ok().map(|(m, c)| (n, m.clone(), c.clone())))
        .collect();
    let mut work = p.clone();
    let mut remainder = Polynomial::zero(p.dim());
    let mut steps = 0;
    while let Some((m, c)) = max_term(&work, order) {
        let hit = leads.iter().find_map(|(n, lm, lc)| m.try_div(lm).map(|q| (*n, q, lc)));
        match hit {
            Some((n, q, lc)) => {
                let factor = -(&c / lc);
                work.add_scaled(&basis[n], &q, &factor);
                debug_assert!(work.coeff(&m).is_zero());
                steps += 1;
            }
            None => {
                work.remove_term(&m);
                remainder.add_term(m, c);
            }
        }
    }
    Reduction { remainder, steps }
}

pub fn reduce<M: Monomial, O: MonomialOrder<M>>(
    p: &Polynomial<M>,
    basis: &[Polynomial<M>],
    order: &O,
) -> Polynomial<M> {
    reduce_with_steps(p, basis, order).remainder
}

/// `lcm/lead(g) * g / lc(g) - lcm/lead(h) * h / lc(h)`.
pub fn s_polynomial<M: Monomial, O: MonomialOrder<M>>(
    g: &Polynomial<M>,
    h: &Polynomial<M>,
    order: &O,
) -> Result<Polynomial<M>, GbError> {
    let (lg, cg) = g.leading_term(order).map_err(|_| GbError::ZeroInput)?;
    let (lh, ch) = h.leading_term(order).map_err(|_| GbError::ZeroInput)?;
    let lcm = lg.lcm(lh);
    let left = g.mul_term(&lcm.try_div(lg).expect("lcm divisible"), &cg.recip());
    let right = h.mul_term(&lcm.try_div(lh).expect("lcm divisible"), &ch.recip());
    Ok(&left - &right)
}

/// Output of [`buchberger_complete`].
#[derive(Debug, Clone)]
pub struct Completion<M: Monomial> {
    /// Input generators (zeros dropped) followed by the added elements.
    pub basis: Vec<Polynomial<M>>,
    /// Monic remainders appended during completion.
    pub added: Vec<Polynomial<M>>,
    pub pairs_reduced: usize,
    pub pairs_skipped: usize,
}

/// Buchberger completion with the normal selection strategy (pair with the
/// order-minimal lcm first, ties by index) and the coprime-leads criterion.
pub fn buchberger_complete<M: Monomial, O: MonomialOrder<M>>(
    generators: &[Polynomial<M>],
    order: &O,
    budget: usize,
) -> Result<Completion<M>, GbError> {
    let mut basis: Vec<Polynomial<M>> = generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Err(GbError::EmptyInput);
    }
    let lead = |g: &Polynomial<M>| g.leading_monomial(order).expect("nonzero").clone();
    let mut leads: Vec<M> = basis.iter().map(lead).collect();
    let mut queue: Vec<(usize, usize, M)> = Vec::new();
    let push_pairs = |queue: &mut Vec<(usize, usize, M)>, leads: &[M], new: usize| {
        for i in 0..new {
            queue.push((i, new, leads[i].lcm(&leads[new])));
        }
    };
    for n in 1..basis.len() {
        push_pairs(&mut queue, &leads, n);
    }
    let mut added = Vec::new();
    let (mut reduced, mut skipped) = (0, 0);
    loop {
        if queue.len() > budget {
            return Err(GbError::BudgetExceeded { budget });
        }
        let Some(pos) = (0..queue.len()).min_by(|&a, &b| {
            let (ia, ja, la) = &queue[a];
            let (ib, jb, lb) = &queue[b];
            match order.compare(la, lb) {
                Ordering::Equal => (ja, ia).cmp(&(jb, ib)),
                other => other,
            }
        }) else {
            break;
        };
        let (i, j, _) = queue.swap_remove(pos);
        if leads[i].gcd_is_one(&leads[j]) {
            skipped += 1;
            continue;
        }
        reduced += 1;
        let s = s_polynomial(&basis[i], &basis[j], order)?;
        let r = reduce(&s, &basis, order);
        if !r.is_zero() {
            let r = r.make_monic(order);
            leads.push(lead(&r));
            basis.push(r.clone());
            added.push(r);
            push_pairs(&mut queue, &leads, basis.len() - 1);
        }
    }
    Ok(Completion { basis, added, pairs_reduced: reduced, pairs_skipped: skipped })
}

/// Reduced Gröbner basis from a Gröbner basis: monic, minimal, each element
/// in normal form modulo the others. Sorted by ascending leading monomial.
pub fn interreduce<M: Monomial, O: MonomialOrder<M>>(
    basis: &[Polynomial<M>],
    order: &O,
) -> Vec<Polynomial<M>> {
    let mut gs: Vec<Polynomial<M>> =
        basis.iter().filter(|g| !g.is_zero()).map(|g| g.make_monic(order)).collect();
    gs.sort_by(|a, b| {
        order.compare(a.leading_monomial(order).unwrap(), b.leading_monomial(order).unwrap())
    });
    // drop elements whose lead is divisible by an earlier (smaller or equal) lead
    let mut minimal: Vec<Polynomial<M>> = Vec::new();
    for g in gs {
        let lg = g.leading_monomial(order).unwrap().clone();
        if !minimal.iter().any(|h| h.leading_monomial(order).unwrap().divides(&lg)) {
            minimal.push(g);
        }
    }
    (0..minimal.len())
        .map(|n| {
            let others: Vec<Polynomial<M>> = minimal
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != n)
                .map(|(_, g)| g.clone())
                .collect();
            reduce(&minimal[n], &others, order)
        })
        .collect()
}
