//! The virtual character ring of SL₂.
//!
//! A [`Character`] is an integer combination of the irreducible characters
//! `s_k` (the `(k+1)`-dimensional symmetric power of the standard
//! representation; `s_k` is self-dual, so duals never need tracking).
//! Products expand by the Clebsch–Gordan rule, symmetric powers of symmetric
//! powers by the Cayley–Sylvester partition-count formula, and exterior
//! powers by the classical identity `∧^k(Sym^n) = Sym^k(Sym^{n+1−k})`.
//!
//! The [`oracle`] submodule recomputes all three operations by brute-force
//! weight enumeration — an independent arithmetic path used by the tests.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde_json::{Map, Value};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharError {
    #[error("weight multiset is not symmetric: weight {weight} occurs {count} times, weight {negated} occurs {other} times")]
    AsymmetricWeights { weight: i64, count: usize, negated: i64, other: usize },
    #[error("weight multiset is not a sum of irreducibles: multiplicity of s{k} would be {mult}")]
    InconsistentWeights { k: u32, mult: i64 },
    #[error("cannot parse character from {0:?}")]
    Parse(String),
}

/// A virtual SL₂ character: finitely many integer multiplicities of `s_k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Character {
    mults: BTreeMap<u32, i64>,
}

impl Character {
    pub fn zero() -> Character {
        Character::default()
    }

    /// The irreducible character `s_k`.
    pub fn irreducible(k: u32) -> Character {
        let mut mults = BTreeMap::new();
        mults.insert(k, 1);
        Character { mults }
    }

    pub fn from_mults<I: IntoIterator<Item = (u32, i64)>>(pairs: I) -> Character {
        let mut out = Character::zero();
        for (k, m) in pairs {
            out.add_mult(k, m);
        }
        out
    }

    fn add_mult(&mut self, k: u32, m: i64) {
        if m == 0 {
            return;
        }
        let entry = self.mults.entry(k).or_insert(0);
        *entry += m;
        if *entry == 0 {
            self.mults.remove(&k);
        }
    }

    pub fn mult(&self, k: u32) -> i64 {
        self.mults.get(&k).copied().unwrap_or(0)
    }

    /// Pairs `(k, multiplicity)` in ascending `k`.
    pub fn iter(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.mults.iter().map(|(&k, &m)| (k, m))
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    /// All multiplicities nonnegative (a genuine representation).
    pub fn is_effective(&self) -> bool {
        self.mults.values().all(|&m| m >= 0)
    }

    /// Virtual dimension `Σ mult_k·(k+1)`.
    pub fn dim(&self) -> i64 {
        self.mults.iter().map(|(&k, &m)| m * (i64::from(k) + 1)).sum()
    }

    pub fn scaled(&self, c: i64) -> Character {
        if c == 0 {
            return Character::zero();
        }
        Character {
            mults: self.mults.iter().map(|(&k, &m)| (k, m * c)).collect(),
        }
    }

    /// Full weight multiset (each weight with multiplicity), for an
    /// effective character.
    pub fn weight_multiset(&self) -> Vec<i64> {
        assert!(self.is_effective(), "weight multiset needs an effective character");
        let mut out = Vec::new();
        for (&k, &m) in &self.mults {
            let k = i64::from(k);
            let mut w = k;
            while w >= -k {
                for _ in 0..m {
                    out.push(w);
                }
                w -= 2;
            }
        }
        out.sort_unstable();
        out
    }

    /// JSON object `{"k": mult, ...}` (keys serialized in the map's
    /// canonical order, so output is deterministic).
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (&k, &m) in &self.mults {
            map.insert(k.to_string(), Value::from(m));
        }
        Value::Object(map)
    }
}

impl Add for &Character {
    type Output = Character;
    fn add(self, rhs: &Character) -> Character {
        let mut out = self.clone();
        for (&k, &m) in &rhs.mults {
            out.add_mult(k, m);
        }
        out
    }
}

impl Sub for &Character {
    type Output = Character;
    fn sub(self, rhs: &Character) -> Character {
        let mut out = self.clone();
        for (&k, &m) in &rhs.mults {
            out.add_mult(k, -m);
        }
        out
    }
}

impl Neg for &Character {
    type Output = Character;
    fn neg(self) -> Character {
        self.scaled(-1)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, &m) in self.mults.iter().rev() {
            let negative = m < 0;
            let abs = m.unsigned_abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if abs == 1 {
                write!(f, "s{k}")?;
            } else {
                write!(f, "{abs}s{k}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Character {
    type Err = CharError;

    /// Parse the rendered form, e.g. `"s12 + s8 + s4 + s0"` or `"2s7 - s3"`.
    fn from_str(input: &str) -> Result<Character, CharError> {
        let bad = || CharError::Parse(input.to_string());
        let mut out = Character::zero();
        let mut rest = input.trim();
        if rest.is_empty() {
            return Err(bad());
        }
        if rest == "0" {
            return Ok(out);
        }
        let mut sign = 1i64;
        let mut expect_term = true;
        while !rest.is_empty() {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            if !expect_term {
                sign = match rest.as_bytes()[0] {
                    b'+' => 1,
                    b'-' => -1,
                    _ => return Err(bad()),
                };
                rest = &rest[1..];
                expect_term = true;
                continue;
            }
            if let Some(stripped) = rest.strip_prefix('-') {
                sign = -sign;
                rest = stripped;
                continue;
            }
            // Term: [coefficient][*]s<k>
            let digits_end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            let mut coeff = 1i64;
            if digits_end > 0 {
                coeff = rest[..digits_end].parse().map_err(|_| bad())?;
                rest = rest[digits_end..].trim_start();
                rest = rest.strip_prefix('*').unwrap_or(rest).trim_start();
            }
            let Some(after_s) = rest.strip_prefix('s') else {
                return Err(bad());
            };
            let k_end = after_s
                .find(|c: char| !c.is_ascii_digit())
                .unwrap_or(after_s.len());
            if k_end == 0 {
                return Err(bad());
            }
            let k: u32 = after_s[..k_end].parse().map_err(|_| bad())?;
            out.add_mult(k, sign * coeff);
            rest = &after_s[k_end..];
            sign = 1;
            expect_term = false;
        }
        if expect_term {
            return Err(bad());
        }
        Ok(out)
    }
}

/// Clebsch–Gordan product of two irreducibles:
/// `s_m ⊗ s_n = s_{m+n} + s_{m+n−2} + … + s_{|m−n|}`.
pub fn cg_tensor(m: u32, n: u32) -> Character {
    let top = m + n;
    Character::from_mults((0..=m.min(n)).map(|r| (top - 2 * r, 1)))
}

/// Bilinear extension of the Clebsch–Gordan product to virtual characters.
pub fn tensor(a: &Character, b: &Character) -> Character {
    let mut out = Character::zero();
    for (j, mj) in a.iter() {
        for (k, mk) in b.iter() {
            for (w, m) in cg_tensor(j, k).iter() {
                out.add_mult(w, mj * mk * m);
            }
        }
    }
    out
}

/// Table of `p(0..=max_r, m, n)` by the standard box-bounded partition DP,
/// where `p(r, m, n)` counts partitions of `r` into at most `m` parts, each
/// at most `n`.
fn box_partition_table(max_r: usize, m: u32, n: u32) -> Vec<i64> {
    let m = m as usize;
    // dp[j][r] = partitions of r into at most j parts, each ≤ current size s.
    let mut dp = vec![vec![0i64; max_r + 1]; m + 1];
    for row in dp.iter_mut() {
        row[0] = 1;
    }
    for s in 1..=(n as usize) {
        for j in 1..=m {
            for r in s..=max_r {
                let add = dp[j - 1][r - s];
                dp[j][r] += add;
            }
        }
    }
    dp[m].clone()
}

/// Character of `Sym^m(Sym^n V)` by the Cayley–Sylvester formula:
/// the multiplicity of `s_{mn−2r}` is `p(r,m,n) − p(r−1,m,n)` where `p`
/// counts partitions of `r` into at most `m` parts, each at most `n`.
pub fn plethysm_sym_sym(m: u32, n: u32) -> Character {
    let top = (m as usize) * (n as usize);
    let max_r = top / 2;
    let p = box_partition_table(max_r, m, n);
    let mut out = Character::zero();
    for r in 0..=max_r {
        let prev = if r == 0 { 0 } else { p[r - 1] };
        let mult = p[r] - prev;
        if mult != 0 {
            out.add_mult((top - 2 * r) as u32, mult);
        }
    }
    out
}

/// Character of `∧^k(Sym^n V)`, via `∧^k(Sym^n) = Sym^k(Sym^{n+1−k})`.
/// Zero when `k > n+1`; `s_0` when `k = 0` or `k = n+1`.
pub fn wedge_sym(k: u32, n: u32) -> Character {
    if k > n + 1 {
        return Character::zero();
    }
    plethysm_sym_sym(k, n + 1 - k)
}

/// Recover the unique character with the given weight multiset:
/// multiplicity of `s_k` is `count(k) − count(k+2)`.  Errors when the
/// multiset is not symmetric under negation or some multiplicity would be
/// negative (i.e. the multiset is not a character at all).
pub fn char_from_weights(weights: &[i64]) -> Result<Character, CharError> {
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &w in weights {
        *counts.entry(w).or_insert(0) += 1;
    }
    for (&w, &c) in &counts {
        let other = counts.get(&-w).copied().unwrap_or(0);
        if other != c {
            return Err(CharError::AsymmetricWeights {
                weight: w,
                count: c,
                negated: -w,
                other,
            });
        }
    }
    let mut out = Character::zero();
    let max = counts.keys().next_back().copied().unwrap_or(0);
    // Scan every weight from the top down to 0, including absent ones: an
    // absent weight below a present one signals an impossible multiset.
    for w in (0..=max).rev() {
        let c = counts.get(&w).copied().unwrap_or(0);
        let above = counts.get(&(w + 2)).copied().unwrap_or(0);
        let mult = c as i64 - above as i64;
        if mult < 0 {
            return Err(CharError::InconsistentWeights { k: w as u32, mult });
        }
        if mult > 0 {
            out.add_mult(w as u32, mult);
        }
    }
    Ok(out)
}

/// Brute-force weight-enumeration recomputations of the ring operations —
/// independent oracles for testing.
pub mod oracle {
    use super::{char_from_weights, CharError, Character};

    /// Weights of `Sym^n V`: `n, n−2, …, −n`.
    pub fn sym_weights(n: u32) -> Vec<i64> {
        let n = i64::from(n);
        (0..=n).map(|i| n - 2 * i).collect()
    }

    /// Tensor product: sums of one weight from each factor.
    pub fn cg_by_weights(m: u32, n: u32) -> Result<Character, CharError> {
        let mut weights = Vec::new();
        for a in sym_weights(m) {
            for b in sym_weights(n) {
                weights.push(a + b);
            }
        }
        char_from_weights(&weights)
    }

    /// Symmetric power: weight sums over all degree-`m` monomials in the
    /// `n+1` weighted variables of `Sym^n V`.
    pub fn plethysm_by_weights(m: u32, n: u32) -> Result<Character, CharError> {
        let vars = sym_weights(n);
        let mut weights = Vec::new();
        // Multisets of size m from vars, enumerated by nondecreasing index.
        fn recurse(vars: &[i64], start: usize, left: u32, acc: i64, out: &mut Vec<i64>) {
            if left == 0 {
                out.push(acc);
                return;
            }
            for i in start..vars.len() {
                recurse(vars, i, left - 1, acc + vars[i], out);
            }
        }
        recurse(&vars, 0, m, 0, &mut weights);
        char_from_weights(&weights)
    }

    /// Exterior power: weight sums over `k`-element subsets of the weights
    /// of `Sym^n V`.
    pub fn wedge_by_weights(k: u32, n: u32) -> Result<Character, CharError> {
        if k > n + 1 {
            return Ok(Character::zero());
        }
        let vars = sym_weights(n);
        let mut weights = Vec::new();
        fn recurse(vars: &[i64], start: usize, left: u32, acc: i64, out: &mut Vec<i64>) {
            if left == 0 {
                out.push(acc);
                return;
            }
            for i in start..vars.len() {
                recurse(vars, i + 1, left - 1, acc + vars[i], out);
            }
        }
        recurse(&vars, 0, k, 0, &mut weights);
        char_from_weights(&weights)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn chr(s: &str) -> Character {
        s.parse().unwrap()
    }

    #[test]
    fn clebsch_gordan_basics() {
        assert_eq!(cg_tensor(2, 3), chr("s5 + s3 + s1"));
        assert_eq!(cg_tensor(0, 7), chr("s7"));
        assert_eq!(cg_tensor(5, 5), chr("s10 + s8 + s6 + s4 + s2 + s0"));
        assert_eq!(cg_tensor(5, 5).dim(), 36);
    }

    #[test]
    fn tensor_extends_bilinearly() {
        assert_eq!(tensor(&chr("s2"), &chr("s0")), chr("s2"));
        assert_eq!(tensor(&chr("s1 + s0"), &chr("s1")), chr("s2 + s1 + s0"));
        assert_eq!(tensor(&chr("s3"), &chr("s4")).dim(), 20);
        assert_eq!(tensor(&chr("2s1"), &chr("s1")), chr("2s2 + 2s0"));
    }

    #[test]
    fn plethysm_basics() {
        assert_eq!(plethysm_sym_sym(1, 6), chr("s6"));
        assert_eq!(plethysm_sym_sym(2, 5), chr("s10 + s6 + s2"));
        assert_eq!(plethysm_sym_sym(4, 0), chr("s0"));
        assert_eq!(plethysm_sym_sym(0, 9), chr("s0"));
        assert_eq!(plethysm_sym_sym(2, 2), chr("s4 + s0"));
    }

    #[test]
    fn plethysm_dimension_is_binomial() {
        for m in 0..=6u32 {
            for n in 0..=6u32 {
                let expected = crate::polyring::binomial_int(n + m, m);
                assert_eq!(
                    plethysm_sym_sym(m, n).dim().to_string(),
                    expected.to_string(),
                    "dim Sym^{m}(Sym^{n})"
                );
            }
        }
    }

    #[test]
    fn wedge_basics() {
        assert_eq!(wedge_sym(2, 3), chr("s4 + s0"));
        assert_eq!(wedge_sym(0, 7), chr("s0"));
        for n in 0..=6u32 {
            assert_eq!(wedge_sym(n + 1, n), chr("s0"), "top exterior power, n={n}");
            assert!(wedge_sym(n + 2, n).is_zero());
        }
    }

    #[test]
    fn weight_reconstruction() {
        assert_eq!(char_from_weights(&[1, -1]).unwrap(), chr("s1"));
        assert_eq!(char_from_weights(&[2, 0, -2, 0]).unwrap(), chr("s2 + s0"));
        assert_eq!(char_from_weights(&[]).unwrap(), Character::zero());
        assert!(matches!(
            char_from_weights(&[1]),
            Err(CharError::AsymmetricWeights { .. })
        ));
        // Symmetric but not a character: weight 0 missing between ±2.
        assert!(matches!(
            char_from_weights(&[2, -2]),
            Err(CharError::InconsistentWeights { .. })
        ));
    }

    #[test]
    fn oracles_agree_on_moderate_range() {
        for m in 0..=8u32 {
            for n in 0..=8u32 {
                assert_eq!(
                    cg_tensor(m, n),
                    oracle::cg_by_weights(m, n).unwrap(),
                    "cg({m},{n})"
                );
            }
        }
        for m in 0..=6u32 {
            for n in 0..=6u32 {
                assert_eq!(
                    plethysm_sym_sym(m, n),
                    oracle::plethysm_by_weights(m, n).unwrap(),
                    "plethysm({m},{n})"
                );
            }
        }
        for n in 0..=8u32 {
            for k in 0..=n + 2 {
                assert_eq!(
                    wedge_sym(k, n),
                    oracle::wedge_by_weights(k, n).unwrap(),
                    "wedge({k},{n})"
                );
            }
        }
    }

    #[test]
    fn display_and_parse() {
        let c = chr("s12 + s8 + s4 + s0");
        assert_eq!(c.to_string(), "s12 + s8 + s4 + s0");
        let virt = &chr("s12") - &chr("s18");
        assert_eq!(virt.to_string(), "-s18 + s12");
        assert_eq!(virt, chr("-s18 + s12"));
        assert_eq!(chr("2s7").to_string(), "2s7");
        assert_eq!(Character::zero().to_string(), "0");
        assert_eq!(chr("0"), Character::zero());
        assert!("s".parse::<Character>().is_err());
        assert!("3 + s2".parse::<Character>().is_err());
    }

    #[test]
    fn json_rendering() {
        let c = chr("s4 + 2s0");
        assert_eq!(c.to_json().to_string(), r#"{"0":2,"4":1}"#);
    }

    #[test]
    fn weight_multiset_of_effective_characters() {
        assert_eq!(chr("s2 + s0").weight_multiset(), vec![-2, 0, 0, 2]);
        assert_eq!(chr("s1").weight_multiset(), vec![-1, 1]);
    }

    fn arb_char() -> impl Strategy<Value = Character> {
        proptest::collection::vec((0u32..7, -3i64..4), 0..4)
            .prop_map(Character::from_mults)
    }

    proptest! {
        #[test]
        fn tensor_commutative_and_associative(a in arb_char(), b in arb_char(), c in arb_char()) {
            prop_assert_eq!(tensor(&a, &b), tensor(&b, &a));
            prop_assert_eq!(tensor(&tensor(&a, &b), &c), tensor(&a, &tensor(&b, &c)));
        }

        #[test]
        fn tensor_dim_multiplicative(a in arb_char(), b in arb_char()) {
            prop_assert_eq!(tensor(&a, &b).dim(), a.dim() * b.dim());
        }

        #[test]
        fn display_parse_roundtrip(a in arb_char()) {
            let shown = a.to_string();
            prop_assert_eq!(shown.parse::<Character>().unwrap(), a);
        }
    }
}
