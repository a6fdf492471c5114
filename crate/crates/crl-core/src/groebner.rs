//! A compact Buchberger engine over ℚ for desk-scale elimination.
//!
//! Supports degree-reverse-lexicographic order and a two-block product
//! order (eliminate the first block, grevlex within each block), which has
//! the elimination property: intersecting a Gröbner basis with the second
//! block's subring yields a Gröbner basis of the elimination ideal, and the
//! restricted order is again degree-compatible grevlex.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num::{One, Zero};
use thiserror::Error;

use crate::polyring::{MultiPoly, PolyRing, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("Gröbner computation exceeded its time budget of {budget_ms} ms")]
    Timeout { budget_ms: u128 },
}

/// Monomial order for the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GbOrder {
    /// Degree-reverse-lexicographic over all variables.
    GrevLex,
    /// Product order eliminating the first `block` variables: compare the
    /// first block by grevlex, break ties by grevlex on the rest.
    Elim { block: usize },
}

fn grevlex_cmp(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| u32::from(e)).sum();
    let db: u32 = b.iter().map(|&e| u32::from(e)).sum();
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            // The smaller exponent in the rightmost differing slot wins.
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl GbOrder {
    pub fn cmp(&self, a: &[u16], b: &[u16]) -> Ordering {
        match *self {
            GbOrder::GrevLex => grevlex_cmp(a, b),
            GbOrder::Elim { block } => grevlex_cmp(&a[..block], &b[..block])
                .then_with(|| grevlex_cmp(&a[block..], &b[block..])),
        }
    }
}

/// A monic polynomial with terms sorted descending in the chosen order
/// (leading term first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbPoly {
    terms: Vec<(Box<[u16]>, Rat)>,
}

impl GbPoly {
    /// Convert from a [`MultiPoly`], sorting by `order` and normalizing to a
    /// monic leading coefficient.  `None` for the zero polynomial.
    pub fn from_multipoly(poly: &MultiPoly, order: GbOrder) -> Option<GbPoly> {
        let mut terms: Vec<(Box<[u16]>, Rat)> = poly
            .terms()
            .map(|(e, c)| (e.to_vec().into_boxed_slice(), c.clone()))
            .collect();
        if terms.is_empty() {
            return None;
        }
        terms.sort_by(|x, y| order.cmp(&y.0, &x.0));
        Some(GbPoly { terms }.into_monic())
    }

    fn into_monic(mut self) -> GbPoly {
        let lead = self.terms[0].1.clone();
        if !lead.is_one() {
            for (_, c) in &mut self.terms {
                *c = &*c / &lead;
            }
        }
        self
    }

    pub fn leading_exponents(&self) -> &[u16] {
        &self.terms[0].0
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(e, _)| e.iter().map(|&x| u32::from(x)).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True when only variables with index ≥ `start` occur.
    pub fn supported_from(&self, start: usize) -> bool {
        self.terms.iter().all(|(e, _)| e[..start].iter().all(|&x| x == 0))
    }

    pub fn to_multipoly(&self, ring: &PolyRing) -> MultiPoly {
        ring.from_terms(self.terms.iter().map(|(e, c)| (e.to_vec(), c.clone())))
    }

    /// `self − coeff · x^shift · other`, merged in descending `order`.
    fn subtract_shifted(&self, coeff: &Rat, shift: &[u16], other: &GbPoly, order: GbOrder) -> Vec<(Box<[u16]>, Rat)> {
        let mut out: Vec<(Box<[u16]>, Rat)> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = if i == self.terms.len() {
                false
            } else if j == other.terms.len() {
                true
            } else {
                let shifted: Vec<u16> = other.terms[j]
                    .0
                    .iter()
                    .zip(shift.iter())
                    .map(|(&a, &b)| a + b)
                    .collect();
                match order.cmp(&self.terms[i].0, &shifted) {
                    Ordering::Greater => true,
                    Ordering::Less => false,
                    Ordering::Equal => {
                        let c = &self.terms[i].1 - &(coeff * &other.terms[j].1);
                        if !c.is_zero() {
                            out.push((self.terms[i].0.clone(), c));
                        }
                        i += 1;
                        j += 1;
                        continue;
                    }
                }
            };
            if take_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else {
                let shifted: Vec<u16> = other.terms[j]
                    .0
                    .iter()
                    .zip(shift.iter())
                    .map(|(&a, &b)| a + b)
                    .collect();
                out.push((shifted.into_boxed_slice(), -(coeff * &other.terms[j].1)));
                j += 1;
            }
        }
        out
    }
}

fn divides(lead: &[u16], mono: &[u16]) -> bool {
    lead.iter().zip(mono.iter()).all(|(&l, &m)| l <= m)
}

fn exponent_lcm(a: &[u16], b: &[u16]) -> Vec<u16> {
    a.iter().zip(b.iter()).map(|(&x, &y)| x.max(y)).collect()
}

fn coprime(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b.iter()).all(|(&x, &y)| x == 0 || y == 0)
}

/// Fully reduce `f` against `basis`; `None` when the remainder is zero.
/// The remainder is monic.
pub fn normal_form(f: &GbPoly, basis: &[GbPoly], order: GbOrder) -> Option<GbPoly> {
    let mut work = f.clone();
    let mut remainder: Vec<(Box<[u16]>, Rat)> = Vec::new();
    'outer: while !work.terms.is_empty() {
        let (mono, coeff) = work.terms[0].clone();
        for g in basis {
            let lead = g.leading_exponents();
            if divides(lead, &mono) {
                let shift: Vec<u16> = mono.iter().zip(lead.iter()).map(|(&m, &l)| m - l).collect();
                work.terms = work.subtract_shifted(&coeff, &shift, g, order);
                continue 'outer;
            }
        }
        remainder.push((mono, coeff));
        work.terms.remove(0);
    }
    if remainder.is_empty() {
        None
    } else {
        Some(GbPoly { terms: remainder }.into_monic())
    }
}

fn s_poly(f: &GbPoly, g: &GbPoly, order: GbOrder) -> GbPoly {
    let lf = f.leading_exponents();
    let lg = g.leading_exponents();
    let lcm = exponent_lcm(lf, lg);
    let shift_f: Vec<u16> = lcm.iter().zip(lf.iter()).map(|(&a, &b)| a - b).collect();
    let shift_g: Vec<u16> = lcm.iter().zip(lg.iter()).map(|(&a, &b)| a - b).collect();
    // x^shift_f · f  −  x^shift_g · g, both monic.
    let shifted_f = GbPoly {
        terms: f
            .terms
            .iter()
            .map(|(e, c)| {
                let exps: Vec<u16> = e.iter().zip(shift_f.iter()).map(|(&a, &b)| a + b).collect();
                (exps.into_boxed_slice(), c.clone())
            })
            .collect(),
    };
    GbPoly {
        terms: shifted_f.subtract_shifted(&Rat::one(), &shift_g, g, order),
    }
}

/// Buchberger's algorithm with the coprime-leading-term criterion and
/// lowest-lcm-degree pair selection; the result is fully interreduced.
/// `budget` bounds wall-clock time; exceeding it is a soft error.
pub fn buchberger(
    gens: &[MultiPoly],
    order: GbOrder,
    budget: Option<Duration>,
) -> Result<Vec<GbPoly>, GroebnerError> {
    let started = Instant::now();
    let deadline = budget.map(|b| (started + b, b));
    let mut basis: Vec<GbPoly> = gens
        .iter()
        .filter_map(|g| GbPoly::from_multipoly(g, order))
        .collect();
    // Pair queue keyed by (lcm degree, i, j) for deterministic selection.
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let enqueue = |queue: &mut BTreeSet<(u32, usize, usize)>, basis: &[GbPoly], i: usize, j: usize| {
        let lcm = exponent_lcm(basis[i].leading_exponents(), basis[j].leading_exponents());
        let deg: u32 = lcm.iter().map(|&e| u32::from(e)).sum();
        queue.insert((deg, i, j));
    };
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            enqueue(&mut queue, &basis, i, j);
        }
    }
    while let Some(&(deg, i, j)) = queue.iter().next() {
        queue.remove(&(deg, i, j));
        if let Some((at, b)) = deadline {
            if Instant::now() >= at {
                return Err(GroebnerError::Timeout { budget_ms: b.as_millis() });
            }
        }
        if coprime(basis[i].leading_exponents(), basis[j].leading_exponents()) {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j], order);
        if s.terms.is_empty() {
            continue;
        }
        if let Some(reduced) = normal_form(&s, &basis, order) {
            let new_idx = basis.len();
            basis.push(reduced);
            for k in 0..new_idx {
                enqueue(&mut queue, &basis, k, new_idx);
            }
        }
    }
    Ok(interreduce(basis, order))
}

/// Reduce every element against the others until stable; output sorted by
/// leading monomial for determinism.
fn interreduce(mut basis: Vec<GbPoly>, order: GbOrder) -> Vec<GbPoly> {
    loop {
        let mut changed = false;
        let mut next: Vec<GbPoly> = Vec::with_capacity(basis.len());
        for i in 0..basis.len() {
            let others: Vec<GbPoly> = next
                .iter()
                .chain(&basis[i + 1..])
                .cloned()
                .collect();
            match normal_form(&basis[i], &others, order) {
                Some(reduced) => {
                    if reduced != basis[i] {
                        changed = true;
                    }
                    next.push(reduced);
                }
                None => {
                    changed = true;
                }
            }
        }
        basis = next;
        if !changed {
            break;
        }
    }
    basis.sort_by(|a, b| order.cmp(a.leading_exponents(), b.leading_exponents()));
    basis
}
