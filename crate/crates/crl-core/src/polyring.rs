//! Exact multivariate polynomial arithmetic over ℚ.
//!
//! Polynomials live in a [`PolyRing`] — an ordered set of named variables —
//! and store their terms in a dense-exponent map keyed by degree-lexicographic
//! monomial order with [`num::BigRational`] coefficients.  On top of the ring
//! operations the module provides binary forms in a symbolic variable pair
//! ([`BinaryForm`]), Sylvester resultants and discriminants, and a text
//! parser/printer round-tripping the canonical rendering.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::bigint::BigInt;
use num::{BigRational, One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Convenience constructor for an integer scalar.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Convenience constructor for a fraction.
pub fn ratio(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Exact binomial coefficient as a rational scalar.
pub fn binomial_rat(n: u32, k: u32) -> Rat {
    Rat::from_integer(binomial_int(n, k))
}

/// Exact binomial coefficient.
pub fn binomial_int(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("variable names must be distinct non-empty identifiers, got {0:?}")]
    BadVariableName(String),
    #[error("operands live in different polynomial rings")]
    MixedRings,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("division is only defined by a nonzero constant")]
    NonConstantDivisor,
    #[error("division by zero")]
    DivisionByZero,
    #[error("a binary form of degree {degree} needs {} coefficients, got {got}", degree + 1)]
    CoefficientCount { degree: u32, got: usize },
    #[error("operation needs a form of degree at least {need}, got {got}")]
    DegreeTooSmall { need: u32, got: u32 },
    #[error("image list has {got} entries for a ring with {need} variables")]
    ImageCount { need: usize, got: usize },
    #[error("polynomial uses variable {0:?} outside the target ring")]
    ProjectionLoss(String),
}

/// Exponent vector with degree-lexicographic ordering.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Mono(Box<[u16]>);

impl Mono {
    fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An ordered set of variable names; cheap to clone and compare.
#[derive(Debug, Clone)]
pub struct PolyRing {
    vars: Arc<Vec<String>>,
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }
}

impl Eq for PolyRing {}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<I, S>(names: I) -> Result<PolyRing, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(PolyError::BadVariableName(v.clone()));
            }
            if vars[..i].contains(v) {
                return Err(PolyError::BadVariableName(v.clone()));
            }
        }
        Ok(PolyRing { vars: Arc::new(vars) })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> MultiPoly {
        self.constant(Rat::one())
    }

    pub fn constant(&self, c: Rat) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono(vec![0u16; self.nvars()].into_boxed_slice()), c);
        }
        MultiPoly { ring: self.clone(), terms }
    }

    pub fn var(&self, name: &str) -> Result<MultiPoly, PolyError> {
        let idx = self
            .var_index(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(self.var_by_index(idx))
    }

    pub fn var_by_index(&self, idx: usize) -> MultiPoly {
        let mut exps = vec![0u16; self.nvars()];
        exps[idx] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Mono(exps.into_boxed_slice()), Rat::one());
        MultiPoly { ring: self.clone(), terms }
    }

    /// Build a polynomial from raw `(exponents, coefficient)` pairs.
    pub fn from_terms<I>(&self, terms: I) -> MultiPoly
    where
        I: IntoIterator<Item = (Vec<u16>, Rat)>,
    {
        let mut out = self.zero();
        for (exps, coeff) in terms {
            assert_eq!(exps.len(), self.nvars(), "exponent vector length mismatch");
            out.add_term(Mono(exps.into_boxed_slice()), coeff);
        }
        out
    }

    /// Parse the canonical text form, e.g. `3/2*x^2*y - a1*x*y^2`.
    pub fn parse(&self, input: &str) -> Result<MultiPoly, PolyError> {
        Parser::new(self, input).parse_all()
    }
}

/// A multivariate polynomial with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    ring: PolyRing,
    terms: BTreeMap<Mono, Rat>,
}

impl MultiPoly {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Mono::degree)
    }

    pub fn degree_in(&self, name: &str) -> Result<u16, PolyError> {
        let idx = self
            .ring
            .var_index(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0))
    }

    /// Iterate terms in ascending canonical (degree-lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &Rat)> {
        self.terms.iter().map(|(m, c)| (&*m.0, c))
    }

    /// Coefficient of an exact exponent vector.
    pub fn coefficient(&self, exps: &[u16]) -> Rat {
        assert_eq!(exps.len(), self.ring.nvars());
        self.terms
            .get(&Mono(exps.to_vec().into_boxed_slice()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// The coefficient polynomial of `var^power` (with that variable removed
    /// from the exponents, still in the same ring).
    pub fn coefficient_of(&self, name: &str, power: u16) -> Result<MultiPoly, PolyError> {
        let idx = self
            .ring
            .var_index(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            if m.0[idx] == power {
                let mut exps = m.0.to_vec();
                exps[idx] = 0;
                out.add_term(Mono(exps.into_boxed_slice()), c.clone());
            }
        }
        Ok(out)
    }

    /// Keep only the terms satisfying the predicate.
    pub fn filter_terms<F: FnMut(&[u16], &Rat) -> bool>(&self, mut keep: F) -> MultiPoly {
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            if keep(&m.0, c) {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    fn add_term(&mut self, mono: Mono, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return self.ring.zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, v)| (m.clone(), v * c))
            .collect();
        MultiPoly { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut acc = self.ring.one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Replace one variable by a polynomial of the same ring.
    pub fn substitute(&self, name: &str, value: &MultiPoly) -> Result<MultiPoly, PolyError> {
        if value.ring != self.ring {
            return Err(PolyError::MixedRings);
        }
        let idx = self
            .ring
            .var_index(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let images: Vec<MultiPoly> = (0..self.ring.nvars())
            .map(|i| if i == idx { value.clone() } else { self.ring.var_by_index(i) })
            .collect();
        self.hom_image(&self.ring, &images)
    }

    /// Apply the ring homomorphism sending variable `i` to `images[i]`.
    pub fn hom_image(&self, target: &PolyRing, images: &[MultiPoly]) -> Result<MultiPoly, PolyError> {
        if images.len() != self.ring.nvars() {
            return Err(PolyError::ImageCount { need: self.ring.nvars(), got: images.len() });
        }
        for img in images {
            if img.ring != *target {
                return Err(PolyError::MixedRings);
            }
        }
        // Cache powers of each image as they are needed.
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![target.one(), p.clone()]).collect();
        let power = |var: usize, exp: u16, powers: &mut Vec<Vec<MultiPoly>>| -> MultiPoly {
            let cache = &mut powers[var];
            while cache.len() <= usize::from(exp) {
                let next = &cache[cache.len() - 1] * &cache[1];
                cache.push(next);
            }
            cache[usize::from(exp)].clone()
        };
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut term = target.constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = &term * &power(i, e, &mut powers);
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Re-express the polynomial in another ring: source variable `i` maps to
    /// target variable `var_map[i]`; a `None` slot is only legal when the
    /// variable does not occur.
    pub fn embed(&self, target: &PolyRing, var_map: &[Option<usize>]) -> Result<MultiPoly, PolyError> {
        assert_eq!(var_map.len(), self.ring.nvars());
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut exps = vec![0u16; target.nvars()];
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match var_map[i] {
                    Some(t) => exps[t] += e,
                    None => {
                        return Err(PolyError::ProjectionLoss(self.ring.vars[i].clone()));
                    }
                }
            }
            out.add_term(Mono(exps.into_boxed_slice()), c.clone());
        }
        Ok(out)
    }

    pub fn partial_derivative(&self, name: &str) -> Result<MultiPoly, PolyError> {
        let idx = self
            .ring
            .var_index(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.to_vec();
            exps[idx] = e - 1;
            out.add_term(Mono(exps.into_boxed_slice()), c * rat(i64::from(e)));
        }
        Ok(out)
    }

    pub fn nth_partial(&self, name: &str, order: u32) -> Result<MultiPoly, PolyError> {
        let mut acc = self.clone();
        for _ in 0..order {
            acc = acc.partial_derivative(name)?;
        }
        Ok(acc)
    }

    /// Canonical JSON rendering: variables plus terms in descending order.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                json!({
                    "exps": m.0.iter().map(|&e| u32::from(e)).collect::<Vec<_>>(),
                    "coeff": c.to_string(),
                })
            })
            .collect();
        json!({
            "vars": self.ring.names(),
            "terms": terms,
        })
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.ring, rhs.ring, "polynomial rings differ");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.ring, rhs.ring, "polynomial rings differ");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        MultiPoly { ring: self.ring.clone(), terms }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.ring, rhs.ring, "polynomial rings differ");
        let mut out = self.ring.zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let exps: Vec<u16> = ma.0.iter().zip(mb.0.iter()).map(|(&a, &b)| a + b).collect();
                out.add_term(Mono(exps.into_boxed_slice()), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let negative = c.is_negative();
            let abs = c.abs();
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
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.degree() == 0 {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(self.ring.vars[i].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.ring.vars[i], e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Text parser
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Parser<'a> {
    ring: &'a PolyRing,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(ring: &'a PolyRing, input: &str) -> Parser<'a> {
        Parser { ring, tokens: tokenize(input), pos: 0 }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse_all(mut self) -> Result<MultiPoly, PolyError> {
        if self.tokens.iter().any(|t| matches!(t, Token::Ident(s) if s == "\u{0}bad")) {
            return Err(PolyError::Parse("bad character".into()));
        }
        let value = self.parse_expr()?;
        if self.pos != self.tokens.len() {
            return Err(PolyError::Parse(format!("unexpected trailing input at token {}", self.pos)));
        }
        Ok(value)
    }

    fn parse_expr(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = match self.peek() {
            Some(Token::Minus) => {
                self.next();
                -&self.parse_term()?
            }
            _ => self.parse_term()?,
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    let rhs = self.parse_term()?;
                    acc = &acc + &rhs;
                }
                Some(Token::Minus) => {
                    self.next();
                    let rhs = self.parse_term()?;
                    acc = &acc - &rhs;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.parse_power()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    let rhs = self.parse_power()?;
                    acc = &acc * &rhs;
                }
                Some(Token::Slash) => {
                    self.next();
                    let rhs = self.parse_power()?;
                    let c = constant_value(&rhs).ok_or(PolyError::NonConstantDivisor)?;
                    if c.is_zero() {
                        return Err(PolyError::DivisionByZero);
                    }
                    acc = acc.scale(&c.recip());
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_power(&mut self) -> Result<MultiPoly, PolyError> {
        let base = self.parse_atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.next();
            match self.next() {
                Some(Token::Int(n)) => {
                    let exp: u32 = n
                        .try_into()
                        .map_err(|_| PolyError::Parse("exponent out of range".into()))?;
                    Ok(base.pow(exp))
                }
                _ => Err(PolyError::Parse("expected integer exponent after ^".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn parse_atom(&mut self) -> Result<MultiPoly, PolyError> {
        match self.next() {
            Some(Token::Int(n)) => Ok(self.ring.constant(Rat::from_integer(n))),
            Some(Token::Ident(name)) => self.ring.var(&name),
            Some(Token::Minus) => Ok(-&self.parse_atom()?),
            Some(Token::LParen) => {
                let inner = self.parse_expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(PolyError::Parse("missing closing parenthesis".into())),
                }
            }
            other => Err(PolyError::Parse(format!("unexpected token {:?}", other))),
        }
    }
}

fn constant_value(p: &MultiPoly) -> Option<Rat> {
    if p.is_zero() {
        return Some(Rat::zero());
    }
    if p.terms.len() == 1 {
        let (m, c) = p.terms.iter().next().unwrap();
        if m.degree() == 0 {
            return Some(c.clone());
        }
    }
    None
}

fn tokenize(input: &str) -> Vec<Token> {
    let mut out = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                let n = BigInt::parse_bytes(&bytes[start..i], 10).expect("digits");
                out.push(Token::Int(n));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && {
                    let ch = bytes[i] as char;
                    ch.is_ascii_alphanumeric() || ch == '_'
                } {
                    i += 1;
                }
                out.push(Token::Ident(input[start..i].to_string()));
            }
            _ => {
                // Surface as an unknown identifier so parsing fails cleanly.
                out.push(Token::Ident("\u{0}bad".to_string()));
                i += 1;
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Binary forms, resultants, discriminants
// ---------------------------------------------------------------------------

/// How the stored coefficients relate to the monomial expansion of the form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffConvention {
    /// `F = Σ c_k x^k y^(q-k)`.
    Plain,
    /// `F = Σ binom(q,k) c_k x^k y^(q-k)` — the classical convention.
    Binomial,
}

/// A binary form of declared degree `q` whose coefficients are polynomials in
/// auxiliary parameters.  Slot `k` holds the coefficient attached to
/// `x^k y^(q-k)` under the stored convention.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryForm {
    degree: u32,
    coeffs: Vec<MultiPoly>,
    convention: CoeffConvention,
}

impl BinaryForm {
    pub fn new(
        degree: u32,
        coeffs: Vec<MultiPoly>,
        convention: CoeffConvention,
    ) -> Result<BinaryForm, PolyError> {
        if coeffs.len() != (degree as usize) + 1 {
            return Err(PolyError::CoefficientCount { degree, got: coeffs.len() });
        }
        let ring = coeffs[0].ring().clone();
        if coeffs.iter().any(|c| *c.ring() != ring) {
            return Err(PolyError::MixedRings);
        }
        Ok(BinaryForm { degree, coeffs, convention })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn convention(&self) -> CoeffConvention {
        self.convention
    }

    pub fn ring(&self) -> &PolyRing {
        self.coeffs[0].ring()
    }

    /// The actual monomial coefficient of `x^k y^(q-k)`.
    pub fn effective_coeff(&self, k: u32) -> MultiPoly {
        let c = &self.coeffs[k as usize];
        match self.convention {
            CoeffConvention::Plain => c.clone(),
            CoeffConvention::Binomial => c.scale(&binomial_rat(self.degree, k)),
        }
    }

    /// Derivative with respect to the first variable of the pair; the result
    /// uses the plain convention.
    pub fn derivative_x(&self) -> Result<BinaryForm, PolyError> {
        if self.degree == 0 {
            return Err(PolyError::DegreeTooSmall { need: 1, got: 0 });
        }
        let q = self.degree;
        let coeffs: Vec<MultiPoly> = (0..q)
            .map(|k| self.effective_coeff(k + 1).scale(&rat(i64::from(k) + 1)))
            .collect();
        BinaryForm::new(q - 1, coeffs, CoeffConvention::Plain)
    }

    /// Derivative with respect to the second variable of the pair.
    pub fn derivative_y(&self) -> Result<BinaryForm, PolyError> {
        if self.degree == 0 {
            return Err(PolyError::DegreeTooSmall { need: 1, got: 0 });
        }
        let q = self.degree;
        let coeffs: Vec<MultiPoly> = (0..q)
            .map(|k| self.effective_coeff(k).scale(&rat(i64::from(q - k))))
            .collect();
        BinaryForm::new(q - 1, coeffs, CoeffConvention::Plain)
    }
}

/// Sylvester resultant of two binary forms of their declared degrees.
///
/// The forms are dehomogenized consistently in the first variable of the
/// pair; the sign convention is fixed as the determinant of the standard
/// matrix with the rows of `a` listed first, coefficients from the highest
/// power down.  With that layout `res(x - a·y, x - b·y) = a - b`.
pub fn sylvester_resultant(a: &BinaryForm, b: &BinaryForm) -> Result<MultiPoly, PolyError> {
    if a.ring() != b.ring() {
        return Err(PolyError::MixedRings);
    }
    let (m, n) = (a.degree, b.degree);
    if m == 0 || n == 0 {
        return Err(PolyError::DegreeTooSmall { need: 1, got: m.min(n) });
    }
    let ring = a.ring().clone();
    let size = (m + n) as usize;
    let zero = ring.zero();
    let mut mat = vec![vec![zero; size]; size];
    for i in 0..n as usize {
        for j in 0..=m as usize {
            mat[i][i + j] = a.effective_coeff(m - j as u32);
        }
    }
    for i in 0..m as usize {
        for j in 0..=n as usize {
            mat[n as usize + i][i + j] = b.effective_coeff(n - j as u32);
        }
    }
    Ok(det_poly_matrix(&ring, mat))
}

/// Discriminant of a binary form: the Sylvester resultant of its two partial
/// derivatives.  Homogeneous of degree `2q - 2` in generic coefficients.
pub fn discriminant(f: &BinaryForm) -> Result<MultiPoly, PolyError> {
    if f.degree < 2 {
        return Err(PolyError::DegreeTooSmall { need: 2, got: f.degree });
    }
    sylvester_resultant(&f.derivative_x()?, &f.derivative_y()?)
}

/// Determinant by Laplace expansion over column subsets (memoized level by
/// level), which keeps the arithmetic division-free.
fn det_poly_matrix(ring: &PolyRing, mat: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let n = mat.len();
    if n == 0 {
        return ring.one();
    }
    assert!(n <= 64, "determinant size out of range");
    let mut level: BTreeMap<u64, MultiPoly> = BTreeMap::new();
    level.insert(0u64, ring.one());
    for (row_idx, row) in mat.iter().enumerate() {
        let mut next: BTreeMap<u64, MultiPoly> = BTreeMap::new();
        for (mask, minor) in &level {
            for (col, entry) in row.iter().enumerate() {
                if entry.is_zero() || mask & (1 << col) != 0 {
                    continue;
                }
                let below = (mask & ((1u64 << col) - 1)).count_ones() as usize;
                let signed = if (row_idx + below) % 2 == 0 {
                    entry * minor
                } else {
                    -&(entry * minor)
                };
                let new_mask = mask | (1 << col);
                match next.entry(new_mask) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(signed);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let sum = e.get() + &signed;
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        level = next;
        if level.is_empty() {
            return ring.zero();
        }
    }
    let full = (1u64 << n) - 1;
    level.remove(&full).unwrap_or_else(|| ring.zero())
}
