//! Covariants of binary forms: transvectants via the Omega process,
//! the classical named covariants (Hessian, fourth and sixth
//! transvectants), exact vanishing tests on coincident-root loci, and
//! calibration of integer combinations that vanish on a locus.
//!
//! A covariant of type `(p, q)` for forms of degree `d` is a polynomial in
//! the coefficient variables `a_0..a_d` and the point variables `x, y`,
//! bihomogeneous of degree `p` in the `a_j` and order `q` in `{x, y}`.
//! Everything here uses the binomial convention
//! `F = Σ_j binom(d,j) a_j x^j y^{d−j}`, under which the transvectant
//! normalization below reproduces the classical integer ratios such as
//! `25 H² − 6 i F²` on the (3,2) locus of quintics.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::{One, Zero};
use thiserror::Error;

use crate::ideal_la::{a_weight, build_parameterization};
use crate::linalg;
use crate::partitions::Partition;
use crate::polyring::{binomial_rat, MultiPoly, PolyRing, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CovariantError {
    #[error("covariants are over different base degrees {left} and {right}")]
    MixedBase { left: u32, right: u32 },
    #[error("transvectant index {r} out of range 1..=min({q1}, {q2})")]
    TransvectantRange { r: u32, q1: u32, q2: u32 },
    #[error("covariant types ({0}, {1}) and ({2}, {3}) differ")]
    TypeMismatch(u32, u32, u32, u32),
    #[error("body is not bihomogeneous: {0}")]
    NotBihomogeneous(String),
    #[error("covariant has base degree {base} but the locus lives on forms of degree {locus}")]
    WrongLocusDegree { base: u32, locus: u32 },
    #[error("calibration requires a nonempty basis")]
    EmptyBasis,
    #[error("no criterion table entry for d = {d}, lambda = {lambda}")]
    NoTableEntry { d: u32, lambda: Partition },
}

/// The polynomial ring `a0..ad, x, y` housing covariants of base degree `d`.
pub fn covariant_ring(d: u32) -> PolyRing {
    let mut names: Vec<String> = (0..=d).map(|j| format!("a{j}")).collect();
    names.push("x".into());
    names.push("y".into());
    PolyRing::new(names).expect("valid names")
}

/// A covariant of binary forms of degree `base_d`, of type
/// `(deg_coeffs, order)`, stored as its defining polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct Covariant {
    base_d: u32,
    deg_coeffs: u32,
    order: u32,
    body: MultiPoly,
}

impl Covariant {
    /// Wrap a nonzero bihomogeneous polynomial, inferring its type.
    pub fn new(base_d: u32, body: MultiPoly) -> Result<Covariant, CovariantError> {
        let nvars = base_d as usize + 3;
        if body.ring().nvars() != nvars {
            return Err(CovariantError::NotBihomogeneous(format!(
                "expected a ring with {nvars} variables (a0..a{base_d}, x, y)"
            )));
        }
        let mut seen: Option<(u32, u32)> = None;
        for (exps, _) in body.terms() {
            let p: u32 = exps[..=base_d as usize].iter().map(|&e| u32::from(e)).sum();
            let q: u32 = u32::from(exps[base_d as usize + 1]) + u32::from(exps[base_d as usize + 2]);
            match seen {
                None => seen = Some((p, q)),
                Some(t) if t == (p, q) => {}
                Some((p0, q0)) => {
                    return Err(CovariantError::NotBihomogeneous(format!(
                        "terms of bidegree ({p0}, {q0}) and ({p}, {q}) both occur"
                    )))
                }
            }
        }
        let (p, q) = seen.ok_or_else(|| {
            CovariantError::NotBihomogeneous("zero polynomial has no bidegree".into())
        })?;
        Ok(Covariant { base_d, deg_coeffs: p, order: q, body })
    }

    /// The zero covariant of a declared type.
    pub fn zero(base_d: u32, deg_coeffs: u32, order: u32) -> Covariant {
        Covariant { base_d, deg_coeffs, order, body: covariant_ring(base_d).zero() }
    }

    pub fn base_degree(&self) -> u32 {
        self.base_d
    }

    /// Degree in the coefficient variables `a_j`.
    pub fn deg_coeffs(&self) -> u32 {
        self.deg_coeffs
    }

    /// Order in `{x, y}`.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn body(&self) -> &MultiPoly {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn scaled(&self, c: &Rat) -> Covariant {
        Covariant { body: self.body.scale(c), ..self.clone() }
    }

    pub fn mul(&self, other: &Covariant) -> Result<Covariant, CovariantError> {
        self.check_base(other)?;
        Ok(Covariant {
            base_d: self.base_d,
            deg_coeffs: self.deg_coeffs + other.deg_coeffs,
            order: self.order + other.order,
            body: &self.body * &other.body,
        })
    }

    pub fn pow(&self, k: u32) -> Covariant {
        Covariant {
            base_d: self.base_d,
            deg_coeffs: self.deg_coeffs * k,
            order: self.order * k,
            body: self.body.pow(k),
        }
    }

    pub fn try_add(&self, other: &Covariant) -> Result<Covariant, CovariantError> {
        self.check_base(other)?;
        if (self.deg_coeffs, self.order) != (other.deg_coeffs, other.order) {
            return Err(CovariantError::TypeMismatch(
                self.deg_coeffs,
                self.order,
                other.deg_coeffs,
                other.order,
            ));
        }
        Ok(Covariant { body: &self.body + &other.body, ..self.clone() })
    }

    pub fn try_sub(&self, other: &Covariant) -> Result<Covariant, CovariantError> {
        self.try_add(&other.scaled(&-Rat::one()))
    }

    fn check_base(&self, other: &Covariant) -> Result<(), CovariantError> {
        if self.base_d != other.base_d {
            return Err(CovariantError::MixedBase { left: self.base_d, right: other.base_d });
        }
        Ok(())
    }
}

/// The generic form `F = Σ_j binom(d,j) a_j x^j y^{d−j}`, of type `(1, d)`.
pub fn generic_form(d: u32) -> Covariant {
    let ring = covariant_ring(d);
    let x = d as usize + 1;
    let y = d as usize + 2;
    let body = ring.from_terms((0..=d).map(|j| {
        let mut exps = vec![0u16; d as usize + 3];
        exps[j as usize] = 1;
        exps[x] = j as u16;
        exps[y] = (d - j) as u16;
        (exps, binomial_rat(d, j))
    }));
    Covariant { base_d: d, deg_coeffs: 1, order: d, body }
}

fn falling_factorial(n: u32, r: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 0..r {
        acc *= BigInt::from(n - k);
    }
    acc
}

/// The `r`-th transvectant `(Φ₁, Φ₂)^r` by the Omega differential process:
/// `((q₁−r)!(q₂−r)!)/(q₁!q₂!) · Σ_i (−1)^i binom(r,i)
///  (∂^rΦ₁/∂x^{r−i}∂y^i)(∂^rΦ₂/∂x^i∂y^{r−i})`.
pub fn transvectant(
    phi1: &Covariant,
    phi2: &Covariant,
    r: u32,
) -> Result<Covariant, CovariantError> {
    phi1.check_base(phi2)?;
    let (q1, q2) = (phi1.order, phi2.order);
    if r < 1 || r > q1.min(q2) {
        return Err(CovariantError::TransvectantRange { r, q1, q2 });
    }
    let ring = phi1.body.ring().clone();
    let mut sum = ring.zero();
    for i in 0..=r {
        let left = phi1.body.nth_partial("x", r - i).and_then(|p| p.nth_partial("y", i));
        let right = phi2.body.nth_partial("x", i).and_then(|p| p.nth_partial("y", r - i));
        let (left, right) = (left.expect("x,y in ring"), right.expect("x,y in ring"));
        if left.is_zero() || right.is_zero() {
            continue;
        }
        let sign = if i % 2 == 0 { Rat::one() } else { -Rat::one() };
        let coeff = binomial_rat(r, i) * sign;
        sum = &sum + &(&left * &right).scale(&coeff);
    }
    let prefactor = Rat::new(
        BigInt::one(),
        falling_factorial(q1, r) * falling_factorial(q2, r),
    );
    Ok(Covariant {
        base_d: phi1.base_d,
        deg_coeffs: phi1.deg_coeffs + phi2.deg_coeffs,
        order: q1 + q2 - 2 * r,
        body: sum.scale(&prefactor),
    })
}

/// The named covariants available in degree `d`: always `F`; `H = (F,F)²`
/// for d ≥ 2; `i = (F,F)⁴` for d ≥ 4; `A = (i,i)²` for d ≥ 5; and
/// `FF6 = (F,F)⁶` for d ≥ 6.
pub fn named_covariants(d: u32) -> BTreeMap<String, Covariant> {
    let mut map = BTreeMap::new();
    let f = generic_form(d);
    if d >= 2 {
        map.insert("H".to_string(), transvectant(&f, &f, 2).expect("order ok"));
    }
    if d >= 4 {
        let i = transvectant(&f, &f, 4).expect("order ok");
        if d >= 5 {
            // i has order 2d − 8 ≥ 2, so (i,i)² is defined.
            map.insert("A".to_string(), transvectant(&i, &i, 2).expect("order ok"));
        }
        map.insert("i".to_string(), i);
    }
    if d >= 6 {
        map.insert("FF6".to_string(), transvectant(&f, &f, 6).expect("order ok"));
    }
    map.insert("F".to_string(), f);
    map
}

/// Substitute the parameterization of X_λ into the covariant: the plain
/// coefficient images `q_j` convert to the binomial convention as
/// `a_j ↦ q_j / binom(d,j)`.  Returns the polynomial over the factor
/// coefficients and `x, y`; the covariant vanishes on the locus iff it is 0.
fn substitute_locus(c: &Covariant, lambda: &Partition) -> Result<MultiPoly, CovariantError> {
    let d = lambda.d();
    if c.base_d != d {
        return Err(CovariantError::WrongLocusDegree { base: c.base_d, locus: d });
    }
    let map = build_parameterization(lambda);
    let n_g = map.g_ring().nvars();
    let mut names: Vec<String> = map.g_ring().names().to_vec();
    names.push("x".into());
    names.push("y".into());
    let target = PolyRing::new(names).expect("valid names");
    let var_map: Vec<Option<usize>> = (0..n_g).map(Some).collect();
    let mut images: Vec<MultiPoly> = Vec::with_capacity(d as usize + 3);
    for j in 0..=d {
        let q = map
            .image(j as usize)
            .embed(&target, &var_map)
            .expect("g-ring embeds");
        images.push(q.scale(&binomial_rat(d, j).recip()));
    }
    images.push(target.var_by_index(n_g));
    images.push(target.var_by_index(n_g + 1));
    Ok(c.body.hom_image(&target, &images).expect("image count matches"))
}

/// Exact test: does the covariant vanish identically on X_λ?
pub fn vanishes_on_locus(c: &Covariant, lambda: &Partition) -> Result<bool, CovariantError> {
    Ok(substitute_locus(c, lambda)?.is_zero())
}

/// Basis of integer coefficient vectors `(c_1..c_k)` with
/// `Σ c_i · basis_i` vanishing identically on X_λ; vectors are primitive
/// with positive leading entry.
pub fn calibrate_combination(
    basis: &[Covariant],
    lambda: &Partition,
) -> Result<Vec<Vec<BigInt>>, CovariantError> {
    let first = basis.first().ok_or(CovariantError::EmptyBasis)?;
    for c in basis {
        first.check_base(c)?;
        if (c.deg_coeffs, c.order) != (first.deg_coeffs, first.order) {
            return Err(CovariantError::TypeMismatch(
                first.deg_coeffs,
                first.order,
                c.deg_coeffs,
                c.order,
            ));
        }
    }
    let substituted: Vec<MultiPoly> = basis
        .iter()
        .map(|c| substitute_locus(c, lambda))
        .collect::<Result<_, _>>()?;
    // One linear equation per monomial appearing in any substituted image.
    let mut row_index: BTreeMap<Vec<u16>, usize> = BTreeMap::new();
    for poly in &substituted {
        for (exps, _) in poly.terms() {
            let len = row_index.len();
            row_index.entry(exps.to_vec()).or_insert(len);
        }
    }
    let mut rows = vec![vec![Rat::zero(); basis.len()]; row_index.len()];
    for (col, poly) in substituted.iter().enumerate() {
        for (exps, coeff) in poly.terms() {
            rows[row_index[&exps.to_vec()]][col] = coeff.clone();
        }
    }
    Ok(linalg::kernel_basis(&rows, basis.len())
        .iter()
        .map(|v| linalg::primitive_integer(v))
        .collect())
}

/// Structural SL₂ check: writing the body as `Σ_k c_k(a) x^k y^{q−k}`,
/// every monomial of `c_k` must have coefficient weight `2k − q`
/// (`a_j` carries weight `2j − d`), and every `c_k`, `k = 0..q`, must be
/// nonzero — the weight multiset of an order-`q` covariant is that of `s_q`.
pub fn weight_profile_consistent(c: &Covariant) -> bool {
    if c.body.is_zero() {
        return false;
    }
    let d = c.base_d as usize;
    let q = c.order;
    let mut seen = vec![false; q as usize + 1];
    for (exps, _) in c.body.terms() {
        let k = u32::from(exps[d + 1]);
        let w: i64 = exps[..=d]
            .iter()
            .enumerate()
            .map(|(j, &e)| i64::from(e) * a_weight(j as u32, c.base_d))
            .sum();
        if w != 2 * i64::from(k) - i64::from(q) {
            return false;
        }
        seen[k as usize] = true;
    }
    seen.into_iter().all(|s| s)
}

/// The classical covariant criteria for the seven two-part loci with
/// 4 ≤ d ≤ 6: for each listed degree `m`, labeled covariants spanning the
/// new generators of `(I_X)_m`.  Labels use the expression grammar of the
/// command-line tool (`T(a,b,r)` for transvectants).
pub fn criterion_table(
    d: u32,
    lambda: &Partition,
) -> Result<Vec<(u32, Vec<(String, Covariant)>)>, CovariantError> {
    let parts = lambda.parts();
    let named = named_covariants(d);
    let f = &named["F"];
    let err = || CovariantError::NoTableEntry { d, lambda: lambda.clone() };
    let combo = |c1: i64, a: &Covariant, c2: i64, b: &Covariant| {
        a.scaled(&Rat::from_integer(c1.into()))
            .try_add(&b.scaled(&Rat::from_integer(c2.into())))
            .expect("matching types")
    };
    let t = |a: &Covariant, b: &Covariant, r: u32| transvectant(a, b, r).expect("order ok");

    let table = match (d, parts.as_slice()) {
        (4, [3, 1]) => {
            let h = &named["H"];
            let i = &named["i"];
            vec![
                (2, vec![("i".to_string(), i.clone())]),
                (3, vec![("T(F,H,4)".to_string(), t(f, h, 4))]),
            ]
        }
        (4, [2, 2]) => {
            let h = &named["H"];
            vec![(3, vec![("T(F,H,1)".to_string(), t(f, h, 1))])]
        }
        (5, [4, 1]) => {
            let i = &named["i"];
            vec![(2, vec![("i".to_string(), i.clone())])]
        }
        (5, [3, 2]) => {
            let h = &named["H"];
            let i = &named["i"];
            let a = &named["A"];
            vec![(
                4,
                vec![
                    (
                        "25*H^2 - 6*i*F^2".to_string(),
                        combo(25, &h.pow(2), -6, &i.mul(&f.pow(2)).unwrap()),
                    ),
                    (
                        "5*i*H + 6*F*T(i,F,2)".to_string(),
                        combo(5, &i.mul(h).unwrap(), 6, &f.mul(&t(i, f, 2)).unwrap()),
                    ),
                    (
                        "2*i^2 + 15*T(i,H,2)".to_string(),
                        combo(2, &i.pow(2), 15, &t(i, h, 2)),
                    ),
                    ("A".to_string(), a.clone()),
                ],
            )]
        }
        (6, [5, 1]) => {
            let i = &named["i"];
            let ff6 = &named["FF6"];
            vec![(
                2,
                vec![("i".to_string(), i.clone()), ("FF6".to_string(), ff6.clone())],
            )]
        }
        (6, [4, 2]) => {
            let h = &named["H"];
            let i = &named["i"];
            let ff6 = &named["FF6"];
            vec![
                (2, vec![("FF6".to_string(), ff6.clone())]),
                (3, vec![("T(F,i,4)".to_string(), t(f, i, 4))]),
                (
                    4,
                    vec![
                        (
                            "27*H^2 - 8*i*F^2".to_string(),
                            combo(27, &h.pow(2), -8, &i.mul(&f.pow(2)).unwrap()),
                        ),
                        (
                            "3*i*H + 4*F*T(F,i,2)".to_string(),
                            combo(3, &i.mul(h).unwrap(), 4, &f.mul(&t(f, i, 2)).unwrap()),
                        ),
                        ("T(i,i,4)".to_string(), t(i, i, 4)),
                    ],
                ),
            ]
        }
        (6, [3, 3]) => {
            let h = &named["H"];
            let i = &named["i"];
            let ff6 = &named["FF6"];
            vec![(
                3,
                vec![
                    ("T(F,H,1)".to_string(), t(f, h, 1)),
                    ("T(F,i,1)".to_string(), t(f, i, 1)),
                    (
                        "8*F*FF6 - 75*T(F,i,2)".to_string(),
                        combo(8, &f.mul(ff6).unwrap(), -75, &t(f, i, 2)),
                    ),
                ],
            )]
        }
        _ => return Err(err()),
    };
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_parts(parts).unwrap()
    }

    #[test]
    fn hessian_of_a_quadric() {
        let named = named_covariants(2);
        let h = &named["H"];
        assert_eq!((h.deg_coeffs(), h.order()), (2, 0));
        let ring = covariant_ring(2);
        assert_eq!(h.body(), &ring.parse("2*a0*a2 - 2*a1^2").unwrap());
    }

    #[test]
    fn transvectant_of_pure_powers() {
        let ring = covariant_ring(2);
        let x2 = Covariant::new(2, ring.parse("x^2").unwrap()).unwrap();
        let y2 = Covariant::new(2, ring.parse("y^2").unwrap()).unwrap();
        let one = transvectant(&x2, &y2, 2).unwrap();
        assert_eq!(one.body(), &ring.one());
        assert_eq!((one.deg_coeffs(), one.order()), (0, 0));
    }

    #[test]
    fn odd_self_transvectants_vanish() {
        let f = generic_form(3);
        for r in [1u32, 3] {
            let c = transvectant(&f, &f, r).unwrap();
            assert!(c.is_zero(), "(F,F)^{r} should vanish");
            assert_eq!((c.deg_coeffs(), c.order()), (2, 6 - 2 * r));
        }
    }

    #[test]
    fn antisymmetry_of_transvectants() {
        let named = named_covariants(4);
        let (f, h) = (&named["F"], &named["H"]);
        for r in 1..=4u32 {
            let fh = transvectant(f, h, r).unwrap();
            let hf = transvectant(h, f, r).unwrap();
            let sign = if r % 2 == 0 { Rat::one() } else { -Rat::one() };
            assert_eq!(fh.body(), &hf.body().scale(&sign), "r = {r}");
        }
    }

    #[test]
    fn hessian_vanishes_exactly_on_pure_powers() {
        let named = named_covariants(4);
        let h = &named["H"];
        assert!(!h.is_zero());
        assert!(vanishes_on_locus(h, &p(&[4])).unwrap());
        assert!(!vanishes_on_locus(h, &p(&[3, 1])).unwrap());
        assert!(!vanishes_on_locus(h, &p(&[2, 2])).unwrap());
    }

    #[test]
    fn named_covariant_types() {
        let named4 = named_covariants(4);
        assert_eq!(
            (named4["i"].deg_coeffs(), named4["i"].order()),
            (2, 0),
            "i is an invariant for quartics"
        );
        let named5 = named_covariants(5);
        assert_eq!((named5["A"].deg_coeffs(), named5["A"].order()), (4, 0));
        assert_eq!((named5["H"].deg_coeffs(), named5["H"].order()), (2, 6));
        assert_eq!((named5["i"].deg_coeffs(), named5["i"].order()), (2, 2));
        let named6 = named_covariants(6);
        assert_eq!((named6["FF6"].deg_coeffs(), named6["FF6"].order()), (2, 0));
        assert!(!named6.contains_key("FF6_missing"));
        assert!(!named_covariants(3).contains_key("i"));
    }

    #[test]
    fn type_arithmetic_and_errors() {
        let f4 = generic_form(4);
        let f5 = generic_form(5);
        assert_eq!(
            transvectant(&f4, &f5, 1),
            Err(CovariantError::MixedBase { left: 4, right: 5 })
        );
        assert_eq!(
            transvectant(&f4, &f4, 5).unwrap_err(),
            CovariantError::TransvectantRange { r: 5, q1: 4, q2: 4 }
        );
        let h = transvectant(&f4, &f4, 2).unwrap();
        assert_eq!((h.deg_coeffs(), h.order()), (2, 4));
        let prod = h.mul(&f4).unwrap();
        assert_eq!((prod.deg_coeffs(), prod.order()), (3, 8));
        assert!(matches!(
            h.try_add(&f4),
            Err(CovariantError::TypeMismatch(2, 4, 1, 4))
        ));
    }

    #[test]
    fn quintic_criterion_combination_vanishes() {
        let named = named_covariants(5);
        let (f, h, i) = (&named["F"], &named["H"], &named["i"]);
        let combo = h
            .pow(2)
            .scaled(&Rat::from_integer(25.into()))
            .try_sub(&i.mul(&f.pow(2)).unwrap().scaled(&Rat::from_integer(6.into())))
            .unwrap();
        assert!(vanishes_on_locus(&combo, &p(&[3, 2])).unwrap());
        // Neither summand vanishes by itself.
        assert!(!vanishes_on_locus(&h.pow(2), &p(&[3, 2])).unwrap());
        assert!(!vanishes_on_locus(&i.mul(&f.pow(2)).unwrap(), &p(&[3, 2])).unwrap());
    }

    #[test]
    fn calibration_recovers_integer_ratios() {
        let named = named_covariants(5);
        let (f, h, i) = (&named["F"], &named["H"], &named["i"]);
        let vectors =
            calibrate_combination(&[h.pow(2), i.mul(&f.pow(2)).unwrap()], &p(&[3, 2])).unwrap();
        assert_eq!(vectors, vec![vec![BigInt::from(25), BigInt::from(-6)]]);

        let vectors = calibrate_combination(
            &[
                i.mul(h).unwrap(),
                f.mul(&transvectant(i, f, 2).unwrap()).unwrap(),
            ],
            &p(&[3, 2]),
        )
        .unwrap();
        assert_eq!(vectors, vec![vec![BigInt::from(5), BigInt::from(6)]]);

        let vectors = calibrate_combination(
            &[i.pow(2), transvectant(i, h, 2).unwrap()],
            &p(&[3, 2]),
        )
        .unwrap();
        assert_eq!(vectors, vec![vec![BigInt::from(2), BigInt::from(15)]]);
    }

    #[test]
    fn sextic_calibration_ratios() {
        let named = named_covariants(6);
        let (f, h, i, ff6) = (&named["F"], &named["H"], &named["i"], &named["FF6"]);
        let vectors =
            calibrate_combination(&[h.pow(2), i.mul(&f.pow(2)).unwrap()], &p(&[4, 2])).unwrap();
        assert_eq!(vectors, vec![vec![BigInt::from(27), BigInt::from(-8)]]);

        let vectors = calibrate_combination(
            &[
                i.mul(h).unwrap(),
                f.mul(&transvectant(f, i, 2).unwrap()).unwrap(),
            ],
            &p(&[4, 2]),
        )
        .unwrap();
        assert_eq!(vectors, vec![vec![BigInt::from(3), BigInt::from(4)]]);

        let vectors = calibrate_combination(
            &[f.mul(ff6).unwrap(), transvectant(f, i, 2).unwrap()],
            &p(&[3, 3]),
        )
        .unwrap();
        assert_eq!(vectors, vec![vec![BigInt::from(8), BigInt::from(-75)]]);
    }

    #[test]
    fn quartic_criterion_table() {
        let table = criterion_table(4, &p(&[3, 1])).unwrap();
        assert_eq!(table.len(), 2);
        assert_eq!(table[0].0, 2);
        assert_eq!(table[1].0, 3);
        for (_, entries) in &table {
            for (label, c) in entries {
                assert!(!c.is_zero(), "{label} is identically zero");
                assert!(vanishes_on_locus(c, &p(&[3, 1])).unwrap(), "{label}");
                assert!(weight_profile_consistent(c), "{label}");
            }
        }
        let table = criterion_table(4, &p(&[2, 2])).unwrap();
        assert_eq!(table[0].1[0].0, "T(F,H,1)");
        assert!(vanishes_on_locus(&table[0].1[0].1, &p(&[2, 2])).unwrap());
        assert!(matches!(
            criterion_table(4, &p(&[2, 1, 1])),
            Err(CovariantError::NoTableEntry { .. })
        ));
    }

    #[test]
    fn weight_profiles_match_order() {
        let named = named_covariants(5);
        for (name, c) in &named {
            if c.order() > 0 {
                assert!(weight_profile_consistent(c), "{name}");
            }
        }
        // An invariant's profile is the single weight 0.
        assert!(weight_profile_consistent(&named["A"]));
    }
}
