//! Partitions of the degree of a binary form, stored in exponent form, with
//! the derived quantities used throughout the crate: part count, twist
//! cutoff, refinement order, two independent degree formulas for the
//! coincident-root locus, the singular-locus merge set, a regularity bound,
//! and the two-part Hilbert polynomial.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigUint;
use num::One;
use serde_json::{json, Value};
use thiserror::Error;

use crate::polyring::{rat, MultiPoly, PolyRing};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("a partition needs at least one part")]
    Empty,
    #[error("partition parts must be positive, got {0}")]
    NonPositivePart(u32),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
    #[error("partitions have different degrees: {left} vs {right}")]
    MixedDegrees { left: u32, right: u32 },
    #[error("operation needs a partition with exactly two parts, got {0}")]
    NotTwoParts(String),
    #[error("operation needs a partition with two distinct parts, got {0}")]
    NotTwoDistinctParts(String),
}

/// A partition of `d` in exponent form: `exps[r] = e_r` parts of size `r`,
/// with zero exponents absent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    d: u32,
    exps: BTreeMap<u32, u32>,
}

impl Partition {
    pub fn from_parts(parts: &[u32]) -> Result<Partition, PartitionError> {
        if parts.is_empty() {
            return Err(PartitionError::Empty);
        }
        let mut exps = BTreeMap::new();
        let mut d = 0u32;
        for &p in parts {
            if p == 0 {
                return Err(PartitionError::NonPositivePart(p));
            }
            *exps.entry(p).or_insert(0) += 1;
            d += p;
        }
        Ok(Partition { d, exps })
    }

    pub fn from_exps<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Result<Partition, PartitionError> {
        let mut exps = BTreeMap::new();
        let mut d = 0u32;
        for (r, e) in pairs {
            if e == 0 {
                continue;
            }
            if r == 0 {
                return Err(PartitionError::NonPositivePart(r));
            }
            *exps.entry(r).or_insert(0) += e;
            d += r * e;
        }
        if exps.is_empty() {
            return Err(PartitionError::Empty);
        }
        Ok(Partition { d, exps })
    }

    /// Parse a comma list such as `"3,2,2"`.
    pub fn from_comma_list(input: &str) -> Result<Partition, PartitionError> {
        let mut parts = Vec::new();
        for piece in input.split(',') {
            let piece = piece.trim();
            if piece.is_empty() {
                return Err(PartitionError::Parse(input.to_string()));
            }
            let value: u32 = piece
                .parse()
                .map_err(|_| PartitionError::Parse(input.to_string()))?;
            parts.push(value);
        }
        Partition::from_parts(&parts)
    }

    /// The degree `d = Σ r·e_r`.
    pub fn d(&self) -> u32 {
        self.d
    }

    /// Exponent map `r → e_r` (only positive entries).
    pub fn exps(&self) -> &BTreeMap<u32, u32> {
        &self.exps
    }

    pub fn exponent(&self, r: u32) -> u32 {
        self.exps.get(&r).copied().unwrap_or(0)
    }

    /// Parts in weakly decreasing order, with multiplicity.
    pub fn parts(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (&r, &e) in self.exps.iter().rev() {
            for _ in 0..e {
                out.push(r);
            }
        }
        out
    }

    /// Number of parts `n = Σ e_r`.
    pub fn part_count(&self) -> u32 {
        self.exps.values().sum()
    }

    /// The cutoff `M = ⌈max_r (e_r+1)/r⌉`, the max over stored part sizes.
    /// Since the ceiling is monotone, this equals `max_r ⌈(e_r+1)/r⌉`.
    pub fn twist_cutoff(&self) -> u32 {
        self.exps
            .iter()
            .map(|(&r, &e)| (e + r) / r)
            .max()
            .expect("partition is nonempty")
    }

    /// Whether every part of `coarse` splits as a sum of a disjoint group of
    /// parts of `self`, using all parts (refinement order on partitions).
    pub fn refines(&self, coarse: &Partition) -> Result<bool, PartitionError> {
        if self.d != coarse.d {
            return Err(PartitionError::MixedDegrees { left: self.d, right: coarse.d });
        }
        let items = self.parts();
        let mut bins = coarse.parts();
        Ok(place_items(&items, &mut bins))
    }

    /// Degree of the coincident-root locus: `n!/(Π e_r!) · Π r^{e_r}`.
    pub fn crl_degree(&self) -> BigUint {
        let mut acc = factorial(self.part_count());
        for (&r, &e) in &self.exps {
            acc /= factorial(e);
            acc *= BigUint::from(r).pow(e);
        }
        acc
    }

    /// The same degree via coefficient extraction: the coefficient of
    /// `Π t_r^{e_r}` in `(1 + Σ r·t_r)^n`, expanded with exponents truncated
    /// at `e_r`.  An independent arithmetic path from [`Self::crl_degree`].
    pub fn de_jonquieres_degree(&self) -> BigUint {
        let rs: Vec<u32> = self.exps.keys().copied().collect();
        let caps: Vec<u16> = rs.iter().map(|r| self.exps[r] as u16).collect();
        let ring = PolyRing::new(rs.iter().map(|r| format!("t{r}"))).expect("valid names");
        let mut linear = ring.one();
        for (i, &r) in rs.iter().enumerate() {
            linear = &linear + &ring.var_by_index(i).scale(&rat(i64::from(r)));
        }
        let mut acc = ring.one();
        for _ in 0..self.part_count() {
            acc = &acc * &linear;
            acc = acc.filter_terms(|exps, _| exps.iter().zip(&caps).all(|(e, cap)| e <= cap));
        }
        let coeff = acc.coefficient(&caps);
        coeff
            .numer()
            .to_biguint()
            .expect("coefficient is a positive integer")
    }

    /// The merge set describing the singular locus: every coarser partition
    /// reachable by one of the three merge moves, with witnesses.
    pub fn singular_merge_set(&self) -> MergeSet {
        let stored: Vec<(u32, u32)> = self.exps.iter().map(|(&r, &e)| (r, e)).collect();
        let mut case_a: BTreeMap<Partition, Vec<MergeWitness>> = BTreeMap::new();
        let mut case_b: BTreeMap<Partition, Vec<MergeWitness>> = BTreeMap::new();
        let mut case_c: BTreeMap<Partition, Vec<MergeWitness>> = BTreeMap::new();

        // Case (a): one part r1 and one part r2 (r1 < r2) merge into r1+r2.
        for (i, &(r1, _)) in stored.iter().enumerate() {
            for &(r2, _) in &stored[i + 1..] {
                let mu = self.with_adjusted(&[(r1, -1), (r2, -1), (r1 + r2, 1)]);
                case_a
                    .entry(mu)
                    .or_default()
                    .push(MergeWitness::PairJoin { r1, r2 });
            }
        }

        // Case (b): t parts of size r2 merge into one extra part of size
        // r1 = t·r2, where a part of size r1 is already present.
        for &(r1, _) in &stored {
            for &(r2, e2) in &stored {
                if r2 == r1 || r1 % r2 != 0 {
                    continue;
                }
                let t = r1 / r2;
                if t < 2 || e2 < t {
                    continue;
                }
                let mu = self.with_adjusted(&[(r2, -(t as i64)), (r1, 1)]);
                case_b
                    .entry(mu)
                    .or_default()
                    .push(MergeWitness::FoldInto { r1, r2, t });
            }
        }

        // Case (c): t1 parts of size r1 and t2 parts of size r2 merge into
        // two parts of size r3 = t1·r1 = t2·r2, all three sizes distinct.
        for (i, &(r1, e1)) in stored.iter().enumerate() {
            for &(r2, e2) in &stored[i + 1..] {
                for t1 in 2..=e1 {
                    let r3 = t1 * r1;
                    if r3 % r2 != 0 {
                        continue;
                    }
                    let t2 = r3 / r2;
                    if t2 < 2 || t2 > e2 || r3 == r1 || r3 == r2 {
                        continue;
                    }
                    let mu = self.with_adjusted(&[(r1, -(t1 as i64)), (r2, -(t2 as i64)), (r3, 2)]);
                    case_c
                        .entry(mu)
                        .or_default()
                        .push(MergeWitness::DoubleFold { r1, r2, r3, t1, t2 });
                }
            }
        }

        MergeSet {
            case_a: collect_elements(case_a),
            case_b: collect_elements(case_b),
            case_c: collect_elements(case_c),
        }
    }

    fn with_adjusted(&self, deltas: &[(u32, i64)]) -> Partition {
        let mut exps: BTreeMap<u32, i64> = self
            .exps
            .iter()
            .map(|(&r, &e)| (r, i64::from(e)))
            .collect();
        for &(r, delta) in deltas {
            *exps.entry(r).or_insert(0) += delta;
        }
        let cleaned: BTreeMap<u32, u32> = exps
            .into_iter()
            .filter(|&(_, e)| e != 0)
            .map(|(r, e)| {
                assert!(e > 0, "merge move produced a negative exponent");
                (r, e as u32)
            })
            .collect();
        let d = cleaned.iter().map(|(&r, &e)| r * e).sum();
        assert_eq!(d, self.d, "merge move changed the degree");
        Partition { d, exps: cleaned }
    }

    /// Castelnuovo–Mumford regularity bound for a two-part partition:
    /// `d²/4 − d + 3` when the parts are equal, else
    /// `λ₁λ₂(2λ₁λ₂ − d + 2)² + 2λ₁λ₂ − d + 5`.
    pub fn regularity_bound(&self) -> Result<i64, PartitionError> {
        if self.part_count() != 2 {
            return Err(PartitionError::NotTwoParts(self.to_string()));
        }
        let parts = self.parts();
        let (l1, l2) = (i64::from(parts[0]), i64::from(parts[1]));
        let d = i64::from(self.d);
        if l1 == l2 {
            Ok(d * d / 4 - d + 3)
        } else {
            let p = l1 * l2;
            Ok(p * (2 * p - d + 2).pow(2) + 2 * p - d + 5)
        }
    }

    /// The Hilbert polynomial `λ₁λ₂·m² + 2` for a partition with two
    /// distinct parts, as an exact polynomial in the variable `m`.
    pub fn hilbert_polynomial_two_part(&self) -> Result<MultiPoly, PartitionError> {
        if self.part_count() != 2 {
            return Err(PartitionError::NotTwoParts(self.to_string()));
        }
        let parts = self.parts();
        if parts[0] == parts[1] {
            return Err(PartitionError::NotTwoDistinctParts(self.to_string()));
        }
        let ring = PolyRing::new(["m"]).expect("valid name");
        let m = ring.var("m").expect("m exists");
        let lead = rat(i64::from(parts[0]) * i64::from(parts[1]));
        Ok(&m.pow(2).scale(&lead) + &ring.constant(rat(2)))
    }

    /// Exponent-form rendering, e.g. `(1 2^3 3^2 4)`.
    pub fn exponent_string(&self) -> String {
        let pieces: Vec<String> = self
            .exps
            .iter()
            .map(|(&r, &e)| if e == 1 { r.to_string() } else { format!("{r}^{e}") })
            .collect();
        format!("({})", pieces.join(" "))
    }

    /// JSON form: parts in weakly decreasing order, e.g. `[3,2,2]`.
    pub fn to_json(&self) -> Value {
        Value::Array(self.parts().into_iter().map(|p| json!(p)).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts().iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl std::str::FromStr for Partition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Partition, PartitionError> {
        Partition::from_comma_list(s)
    }
}

/// One merge move that produced a coarser partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MergeWitness {
    /// Parts `r1 ≠ r2` joined into a single part `r1 + r2`.
    PairJoin { r1: u32, r2: u32 },
    /// `t` parts of size `r2` folded into one extra part of size `r1 = t·r2`.
    FoldInto { r1: u32, r2: u32, t: u32 },
    /// `t1` parts of size `r1` and `t2` parts of size `r2` folded into two
    /// parts of size `r3 = t1·r1 = t2·r2`, all sizes distinct.
    DoubleFold { r1: u32, r2: u32, r3: u32, t1: u32, t2: u32 },
}

impl MergeWitness {
    pub fn to_json(&self) -> Value {
        match *self {
            MergeWitness::PairJoin { r1, r2 } => {
                json!({"kind": "pair_join", "r1": r1, "r2": r2})
            }
            MergeWitness::FoldInto { r1, r2, t } => {
                json!({"kind": "fold_into", "r1": r1, "r2": r2, "t": t})
            }
            MergeWitness::DoubleFold { r1, r2, r3, t1, t2 } => {
                json!({"kind": "double_fold", "r1": r1, "r2": r2, "r3": r3, "t1": t1, "t2": t2})
            }
        }
    }
}

/// A coarser partition together with every witness that reaches it within
/// one construction case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeElement {
    pub merged: Partition,
    pub witnesses: Vec<MergeWitness>,
}

/// The three-case merge set whose union describes the singular locus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeSet {
    pub case_a: Vec<MergeElement>,
    pub case_b: Vec<MergeElement>,
    pub case_c: Vec<MergeElement>,
}

impl MergeSet {
    pub fn is_empty(&self) -> bool {
        self.case_a.is_empty() && self.case_b.is_empty() && self.case_c.is_empty()
    }

    /// All distinct merged partitions across the three cases.
    pub fn all_partitions(&self) -> Vec<Partition> {
        let mut set: Vec<Partition> = self
            .case_a
            .iter()
            .chain(&self.case_b)
            .chain(&self.case_c)
            .map(|e| e.merged.clone())
            .collect();
        set.sort();
        set.dedup();
        set
    }

    pub fn to_json(&self) -> Value {
        let render = |elems: &[MergeElement]| -> Value {
            Value::Array(
                elems
                    .iter()
                    .map(|e| {
                        json!({
                            "partition": e.merged.to_json(),
                            "witnesses": e.witnesses.iter().map(MergeWitness::to_json).collect::<Vec<_>>(),
                        })
                    })
                    .collect(),
            )
        };
        json!({
            "case_a": render(&self.case_a),
            "case_b": render(&self.case_b),
            "case_c": render(&self.case_c),
        })
    }
}

fn collect_elements(map: BTreeMap<Partition, Vec<MergeWitness>>) -> Vec<MergeElement> {
    map.into_iter()
        .map(|(merged, mut witnesses)| {
            witnesses.sort();
            witnesses.dedup();
            MergeElement { merged, witnesses }
        })
        .collect()
}

/// Exact-fit bin packing: place every item into a bin, filling each bin
/// exactly (item totals equal bin totals by construction).
fn place_items(items: &[u32], bins: &mut Vec<u32>) -> bool {
    if items.is_empty() {
        return bins.iter().all(|&b| b == 0);
    }
    let item = items[0];
    let rest = &items[1..];
    let mut tried: Vec<u32> = Vec::new();
    for i in 0..bins.len() {
        let cap = bins[i];
        if cap < item || tried.contains(&cap) {
            continue;
        }
        tried.push(cap);
        bins[i] = cap - item;
        if place_items(rest, bins) {
            bins[i] = cap;
            return true;
        }
        bins[i] = cap;
    }
    false
}

fn factorial(n: u32) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=u64::from(n) {
        acc *= BigUint::from(k);
    }
    acc
}

/// All partitions of `d ≥ 1`, each part at most `d`.
pub fn partitions_of(d: u32) -> Vec<Partition> {
    fn recurse(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_parts(stack).expect("nonempty"));
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            stack.push(part);
            recurse(remaining - part, part, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    if d > 0 {
        recurse(d, d, &mut Vec::new(), &mut out);
    }
    out
}
