//! Ground truth for the graded pieces of the ideal of a coincident-root
//! locus, by exact linear algebra.
//!
//! Points of the locus X_λ ⊂ ℙ^d are binary forms `F = Π_r G_r(x,y)^r`
//! with `deg G_r = e_r`.  Writing `a_j` for the coefficient of `x^j y^{d−j}`
//! of a generic form, the parameterization substitutes `a_j ↦ q_j(g)`,
//! where the `g` are the coefficients of the `G_r`.  A degree-`m` form
//! vanishes on X_λ exactly when its monomials' images cancel, so `(I_X)_m`
//! is the kernel of an explicit linear map — computed here blockwise per
//! torus weight (the map is weight-preserving), which also yields the SL₂
//! character for free and keeps the matrices small.
//!
//! Results are certified by re-substituting every kernel vector exactly and
//! by matching the exact rank against the rank over word-size prime fields.
//! A desk-scale Gröbner elimination over the same parameterization provides
//! an independent cross-check of the graded dimensions.

use std::collections::BTreeMap;
use std::time::Duration;

use num::bigint::BigInt;
use num::Zero;
use serde_json::{json, Value};
use thiserror::Error;

use crate::charring::Character;
use crate::groebner::{buchberger, GbOrder, GroebnerError};
use crate::linalg;
use crate::partitions::Partition;
use crate::polyring::{binomial_int, MultiPoly, PolyRing, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error(
        "degree-{m} ambient space has dimension {dim}, over the configured budget {max}; \
         raise the budget to proceed"
    )]
    Budget { m: u32, dim: usize, max: usize },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Resource limits and certification settings for the kernel engine.
#[derive(Debug, Clone)]
pub struct KernelConfig {
    /// Refuse degrees whose ambient monomial count exceeds this bound.
    pub max_ambient_dim: usize,
    /// Primes for the modular rank certificate (word-size, must be prime).
    pub modular_primes: Vec<u64>,
    /// Wall-clock budget for Gröbner elimination.
    pub groebner_budget: Option<Duration>,
}

impl Default for KernelConfig {
    fn default() -> KernelConfig {
        KernelConfig {
            max_ambient_dim: 5000,
            modular_primes: vec![2147483647, 2305843009213693951],
            groebner_budget: Some(Duration::from_secs(60)),
        }
    }
}

/// The coefficient substitution `a_j ↦ q_j(g)` for a partition λ, with the
/// torus weight tables that make the map weight-homogeneous.
#[derive(Debug, Clone)]
pub struct SubstitutionMap {
    lambda: Partition,
    g_ring: PolyRing,
    /// `q_0 … q_d` in `g_ring`.
    images: Vec<MultiPoly>,
    /// Weight of each `g_ring` variable: `g_{r,k}` has weight `2k − e_r`.
    g_weights: Vec<i64>,
}

impl SubstitutionMap {
    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn g_ring(&self) -> &PolyRing {
        &self.g_ring
    }

    pub fn images(&self) -> &[MultiPoly] {
        &self.images
    }

    pub fn image(&self, j: usize) -> &MultiPoly {
        &self.images[j]
    }

    pub fn g_weights(&self) -> &[i64] {
        &self.g_weights
    }
}

/// Weight of the coordinate `a_j` on forms of degree `d`.
pub fn a_weight(j: u32, d: u32) -> i64 {
    2 * i64::from(j) - i64::from(d)
}

/// Expand `F = Π_r G_r(x,y)^r` symbolically and read off the coefficient
/// images `q_j`; verifies that every `q_j` is multihomogeneous of degree `r`
/// in the `G_r` block and weight-homogeneous of weight `2j − d`.
pub fn build_parameterization(lambda: &Partition) -> SubstitutionMap {
    let d = lambda.d();
    // Variables g{r}_{k}, k = 0..e_r, for each stored part size r.
    let mut g_names: Vec<String> = Vec::new();
    let mut g_weights: Vec<i64> = Vec::new();
    let mut block_of_var: Vec<u32> = Vec::new();
    for (&r, &e) in lambda.exps() {
        for k in 0..=e {
            g_names.push(format!("g{r}_{k}"));
            g_weights.push(2 * i64::from(k) - i64::from(e));
            block_of_var.push(r);
        }
    }
    let n_g = g_names.len();
    let mut full_names = g_names.clone();
    full_names.push("x".into());
    full_names.push("y".into());
    let full = PolyRing::new(full_names).expect("valid variable names");
    let x_idx = n_g;
    let y_idx = n_g + 1;

    let mut form = full.one();
    let mut var_cursor = 0usize;
    for (&r, &e) in lambda.exps() {
        let mut g_r = full.zero();
        for k in 0..=e {
            let mut term = full.var_by_index(var_cursor + k as usize);
            for _ in 0..k {
                term = &term * &full.var_by_index(x_idx);
            }
            for _ in 0..(e - k) {
                term = &term * &full.var_by_index(y_idx);
            }
            g_r = &g_r + &term;
        }
        var_cursor += (e + 1) as usize;
        form = &form * &g_r.pow(r);
    }

    let g_ring = PolyRing::new(g_names).expect("valid variable names");
    let mut var_map: Vec<Option<usize>> = (0..n_g).map(Some).collect();
    var_map.push(None);
    var_map.push(None);

    let mut images = Vec::with_capacity(d as usize + 1);
    for j in 0..=d {
        let coeff = form
            .coefficient_of("x", j as u16)
            .expect("x exists")
            .coefficient_of("y", (d - j) as u16)
            .expect("y exists");
        let q_j = coeff.embed(&g_ring, &var_map).expect("x,y eliminated");
        // Invariant: degree r in each G_r block.
        for (exps, _) in q_j.terms() {
            let mut per_block: BTreeMap<u32, u32> = BTreeMap::new();
            for (v, &e) in exps.iter().enumerate() {
                *per_block.entry(block_of_var[v]).or_insert(0) += u32::from(e);
            }
            for (&r, _) in lambda.exps() {
                assert_eq!(
                    per_block.get(&r).copied().unwrap_or(0),
                    r,
                    "q_{j} is not homogeneous of degree {r} in the G_{r} block"
                );
            }
            // Invariant: weight 2j − d.
            let w: i64 = exps
                .iter()
                .zip(&g_weights)
                .map(|(&e, &gw)| i64::from(e) * gw)
                .sum();
            assert_eq!(w, a_weight(j, d), "q_{j} is not weight-homogeneous");
        }
        images.push(q_j);
    }

    SubstitutionMap { lambda: lambda.clone(), g_ring, images, g_weights }
}

/// Summary data for one graded piece `(I_X)_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPieceReport {
    pub lambda: Partition,
    pub m: u32,
    pub dim_ideal: usize,
    pub dim_ambient: usize,
    /// `dim_ambient − dim_ideal`, the Hilbert function value.
    pub hilbert_value: usize,
    pub character: Character,
    /// New-generator count in degree `m`, when a generator pass filled it.
    pub minimal_generators: Option<usize>,
    /// Exact recheck passed and a modular rank matched the exact rank.
    pub certified: bool,
}

impl GradedPieceReport {
    pub fn to_json(&self) -> Value {
        json!({
            "lambda": self.lambda.to_json(),
            "m": self.m,
            "dim_ideal": self.dim_ideal,
            "dim_ambient": self.dim_ambient,
            "hilbert_value": self.hilbert_value,
            "character": self.character.to_json(),
            "character_rendered": self.character.to_string(),
            "minimal_generators": self.minimal_generators,
            "certified": self.certified,
        })
    }
}

/// A graded piece with its full kernel basis over the ambient monomials.
#[derive(Debug, Clone)]
pub struct GradedPiece {
    /// Ambient degree-`m` exponent vectors over `a_0..a_d`, in the fixed
    /// enumeration order (first exponent slot varies fastest downward).
    pub monomials: Vec<Vec<u16>>,
    /// Kernel vectors over [`Self::monomials`], blockwise canonical.
    pub basis: Vec<Vec<Rat>>,
    /// Kernel dimension per torus weight.
    pub weight_dims: BTreeMap<i64, usize>,
    pub report: GradedPieceReport,
}

impl GradedPiece {
    /// Render basis vectors as polynomials in a ring `a0..ad`.
    pub fn basis_polynomials(&self, a_ring: &PolyRing) -> Vec<MultiPoly> {
        self.basis
            .iter()
            .map(|v| {
                a_ring.from_terms(
                    v.iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| (self.monomials[i].clone(), c.clone())),
                )
            })
            .collect()
    }
}

/// The standard coefficient ring `a0..ad` for forms of degree `d`.
pub fn form_coefficient_ring(d: u32) -> PolyRing {
    PolyRing::new((0..=d).map(|j| format!("a{j}"))).expect("valid names")
}

fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Vec<u16>> {
    fn recurse(nvars: usize, slot: usize, left: u32, acc: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if slot + 1 == nvars {
            acc.push(left as u16);
            out.push(acc.clone());
            acc.pop();
            return;
        }
        for e in (0..=left).rev() {
            acc.push(e as u16);
            recurse(nvars, slot + 1, left - e, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    recurse(nvars, 0, degree, &mut Vec::new(), &mut out);
    out
}

fn ambient_dimension(d: u32, m: u32) -> usize {
    let value = binomial_int(d + m, m);
    value.to_string().parse().unwrap_or(usize::MAX)
}

struct PowerCache<'a> {
    images: &'a [MultiPoly],
    powers: Vec<Vec<MultiPoly>>,
}

impl<'a> PowerCache<'a> {
    fn new(map: &'a SubstitutionMap) -> PowerCache<'a> {
        PowerCache {
            images: map.images(),
            powers: map
                .images()
                .iter()
                .map(|q| vec![map.g_ring().one(), q.clone()])
                .collect(),
        }
    }

    fn power(&mut self, j: usize, e: u16) -> &MultiPoly {
        let cache = &mut self.powers[j];
        while cache.len() <= usize::from(e) {
            let next = &cache[cache.len() - 1] * &self.images[j];
            cache.push(next);
        }
        &cache[usize::from(e)]
    }

    fn monomial_image(&mut self, exps: &[u16]) -> MultiPoly {
        let mut acc: Option<MultiPoly> = None;
        for (j, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let p = self.power(j, e).clone();
            acc = Some(match acc {
                None => p,
                Some(a) => &a * &p,
            });
        }
        acc.unwrap_or_else(|| self.powers[0][0].clone())
    }
}

/// Compute `(I_X)_m` as the kernel of the substitution map on degree-`m`
/// monomials, blockwise per weight, with character and certification.
pub fn graded_piece_kernel(
    lambda: &Partition,
    m: u32,
    config: &KernelConfig,
) -> Result<GradedPiece, IdealError> {
    let map = build_parameterization(lambda);
    graded_piece_kernel_with(&map, m, config)
}

/// As [`graded_piece_kernel`], reusing an existing parameterization.
pub fn graded_piece_kernel_with(
    map: &SubstitutionMap,
    m: u32,
    config: &KernelConfig,
) -> Result<GradedPiece, IdealError> {
    let lambda = map.lambda().clone();
    let d = lambda.d();
    let dim_ambient = ambient_dimension(d, m);
    if dim_ambient > config.max_ambient_dim {
        return Err(IdealError::Budget { m, dim: dim_ambient, max: config.max_ambient_dim });
    }
    let monomials = monomials_of_degree(d as usize + 1, m);
    debug_assert_eq!(monomials.len(), dim_ambient);

    // Group ambient monomials (columns) by weight.
    let mut blocks: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (idx, exps) in monomials.iter().enumerate() {
        let w: i64 = exps
            .iter()
            .enumerate()
            .map(|(j, &e)| i64::from(e) * a_weight(j as u32, d))
            .sum();
        blocks.entry(w).or_default().push(idx);
    }

    let mut cache = PowerCache::new(map);
    let mut basis: Vec<Vec<Rat>> = Vec::new();
    let mut weight_dims: BTreeMap<i64, usize> = BTreeMap::new();
    let mut certified = true;

    for (&w, cols) in &blocks {
        // Rows: every g-monomial occurring in any image in this block.
        let images: Vec<MultiPoly> = cols
            .iter()
            .map(|&c| cache.monomial_image(&monomials[c]))
            .collect();
        let mut row_index: BTreeMap<Vec<u16>, usize> = BTreeMap::new();
        for img in &images {
            for (exps, _) in img.terms() {
                let len = row_index.len();
                row_index.entry(exps.to_vec()).or_insert(len);
            }
        }
        let nrows = row_index.len();
        let ncols = cols.len();
        let mut rows: Vec<Vec<Rat>> = vec![vec![Rat::zero(); ncols]; nrows];
        for (c, img) in images.iter().enumerate() {
            for (exps, coeff) in img.terms() {
                let r = row_index[&exps.to_vec()];
                rows[r][c] = coeff.clone();
            }
        }

        let kernel = linalg::kernel_basis(&rows, ncols);
        let block_dim = kernel.len();
        if block_dim > 0 {
            weight_dims.insert(w, block_dim);
        }

        // Mandatory exact certification: every kernel vector maps to zero.
        for v in &kernel {
            if !linalg::verify_in_kernel(&rows, v) {
                return Err(IdealError::Internal(format!(
                    "kernel recheck failed in weight block {w} of degree {m}"
                )));
            }
        }

        // Modular certificate: some prime's rank equals the exact rank.
        let exact_rank = ncols - block_dim;
        if !config.modular_primes.is_empty() && nrows > 0 {
            let int_rows: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|row| linalg::primitive_integer(row))
                .collect();
            let best = config
                .modular_primes
                .iter()
                .map(|&p| linalg::rank_mod_p(&int_rows, ncols, p))
                .max()
                .unwrap_or(0);
            if best != exact_rank {
                certified = false;
            }
        }

        // Lift block kernel vectors to the global monomial index.
        for v in kernel {
            let mut global = vec![Rat::zero(); dim_ambient];
            for (local, value) in v.into_iter().enumerate() {
                global[cols[local]] = value;
            }
            basis.push(global);
        }
    }

    let dim_ideal = basis.len();
    let character = character_from_weight_dims(&weight_dims)
        .map_err(|msg| IdealError::Internal(format!("degree {m}: {msg}")))?;
    if character.dim() != dim_ideal as i64 {
        return Err(IdealError::Internal(format!(
            "character dimension {} disagrees with kernel dimension {dim_ideal}",
            character.dim()
        )));
    }

    Ok(GradedPiece {
        monomials,
        basis,
        weight_dims,
        report: GradedPieceReport {
            lambda,
            m,
            dim_ideal,
            dim_ambient,
            hilbert_value: dim_ambient - dim_ideal,
            character,
            minimal_generators: None,
            certified,
        },
    })
}

/// Recover a character from weight-block dimensions:
/// `mult(s_k) = dim_{w=k} − dim_{w=k+2}`.
fn character_from_weight_dims(dims: &BTreeMap<i64, usize>) -> Result<Character, String> {
    for (&w, &dim) in dims {
        let other = dims.get(&-w).copied().unwrap_or(0);
        if other != dim {
            return Err(format!(
                "weight blocks are not symmetric: dim({w}) = {dim} but dim({}) = {other}",
                -w
            ));
        }
    }
    let max = dims.keys().next_back().copied().unwrap_or(0);
    let mut mults = Vec::new();
    for k in (0..=max).rev() {
        let here = dims.get(&k).copied().unwrap_or(0) as i64;
        let above = dims.get(&(k + 2)).copied().unwrap_or(0) as i64;
        let mult = here - above;
        if mult < 0 {
            return Err(format!(
                "weight blocks do not telescope at weight {k}: multiplicity {mult}"
            ));
        }
        if mult > 0 {
            mults.push((k as u32, mult));
        }
    }
    Ok(Character::from_mults(mults))
}

/// SL₂ character of `(I_X)_m`.
pub fn kernel_character(
    lambda: &Partition,
    m: u32,
    config: &KernelConfig,
) -> Result<Character, IdealError> {
    Ok(graded_piece_kernel(lambda, m, config)?.report.character)
}

/// Hilbert function value `binom(d+m, m) − dim (I_X)_m`.
pub fn hilbert_function(
    lambda: &Partition,
    m: u32,
    config: &KernelConfig,
) -> Result<usize, IdealError> {
    Ok(graded_piece_kernel(lambda, m, config)?.report.hilbert_value)
}

/// New minimal generator counts per degree up to `m_max`: in degree `m`,
/// `dim (I_X)_m` minus the rank of `{a_j · v : v in the degree-(m−1) basis}`.
pub fn minimal_generators_by_degree(
    lambda: &Partition,
    m_max: u32,
    config: &KernelConfig,
) -> Result<BTreeMap<u32, usize>, IdealError> {
    let map = build_parameterization(lambda);
    let mut out = BTreeMap::new();
    let mut previous: Option<GradedPiece> = None;
    for m in 1..=m_max {
        let piece = graded_piece_kernel_with(&map, m, config)?;
        let old_rank = match &previous {
            None => 0,
            Some(prev) => {
                let index: BTreeMap<&[u16], usize> = piece
                    .monomials
                    .iter()
                    .map(|mono| (mono.as_slice(), 0))
                    .enumerate()
                    .map(|(i, (mono, _))| (mono, i))
                    .collect();
                let width = piece.monomials.len();
                let mut tracker = linalg::RankTracker::new(width);
                let nvars = lambda.d() as usize + 1;
                for v in &prev.basis {
                    for j in 0..nvars {
                        let mut row = vec![Rat::zero(); width];
                        for (i, c) in v.iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            let mut shifted = prev.monomials[i].clone();
                            shifted[j] += 1;
                            let col = *index.get(shifted.as_slice()).ok_or_else(|| {
                                IdealError::Internal("shifted monomial missing".into())
                            })?;
                            row[col] = c.clone();
                        }
                        tracker.insert(&row);
                    }
                }
                tracker.rank()
            }
        };
        out.insert(m, piece.report.dim_ideal - old_rank);
        previous = Some(piece);
    }
    Ok(out)
}

/// Result of implicitization by Gröbner elimination: a Gröbner basis of the
/// homogeneous ideal in `a0..ad`, with enough leading-term data to count
/// graded dimensions.
#[derive(Debug, Clone)]
pub struct EliminationResult {
    pub a_ring: PolyRing,
    /// Homogeneous generators (the homogenized eliminated Gröbner basis).
    pub generators: Vec<MultiPoly>,
    /// Leading exponents of the affine eliminated basis over `a_1..a_d`
    /// (degree-compatible order, so they count graded dimensions).
    affine_leads: Vec<Vec<u16>>,
    d: u32,
}

impl EliminationResult {
    pub fn generator_degrees(&self) -> Vec<u32> {
        self.generators
            .iter()
            .map(|g| g.total_degree().unwrap_or(0))
            .collect()
    }

    /// `dim (I_X)_m` from leading terms: homogeneous degree-`m` monomials in
    /// `a_0..a_d` whose `a_1..a_d` part is divisible by an affine leading
    /// term — equivalently monomials of degree ≤ `m` in `a_1..a_d` divisible
    /// by one (the `a_0` power fills the slack).
    pub fn ideal_dim_in_degree(&self, m: u32) -> usize {
        let mut count = 0usize;
        for deg in 0..=m {
            for mono in monomials_of_degree(self.d as usize, deg) {
                if self
                    .affine_leads
                    .iter()
                    .any(|lead| lead.iter().zip(&mono).all(|(&l, &e)| l <= e))
                {
                    count += 1;
                }
            }
        }
        count
    }
}

/// Implicitize X_λ in the monic affine chart `a_0 = 1`: eliminate the
/// coefficients of the monic factors from the graph ideal
/// `{a_j − q̂_j(u)}`, then homogenize with respect to `a_0`.
pub fn groebner_eliminate(
    lambda: &Partition,
    config: &KernelConfig,
) -> Result<EliminationResult, IdealError> {
    let d = lambda.d();
    // Monic factors: Ĝ_r(s) = s^{e_r} + u_{r,1} s^{e_r−1} + … + u_{r,e_r}.
    let mut u_names: Vec<String> = Vec::new();
    for (&r, &e) in lambda.exps() {
        for k in 1..=e {
            u_names.push(format!("u{r}_{k}"));
        }
    }
    let n_u = u_names.len();

    // Expand Π Ĝ_r(s)^r in the ring (u..., s).
    let mut expand_names = u_names.clone();
    expand_names.push("s".into());
    let expand_ring = PolyRing::new(expand_names).expect("valid names");
    let s_idx = n_u;
    let mut product = expand_ring.one();
    let mut cursor = 0usize;
    for (&r, &e) in lambda.exps() {
        let mut g_hat = expand_ring.var_by_index(s_idx).pow(e);
        for k in 1..=e {
            let term = &expand_ring.var_by_index(cursor + (k - 1) as usize)
                * &expand_ring.var_by_index(s_idx).pow(e - k);
            g_hat = &g_hat + &term;
        }
        cursor += e as usize;
        product = &product * &g_hat.pow(r);
    }

    // Graph ideal in the ring (u..., a1..ad): a_j − q̂_j(u).
    let mut graph_names = u_names.clone();
    for j in 1..=d {
        graph_names.push(format!("a{j}"));
    }
    let graph_ring = PolyRing::new(graph_names).expect("valid names");
    let mut var_map: Vec<Option<usize>> = (0..n_u).map(Some).collect();
    var_map.push(None); // s never survives coefficient extraction
    let mut gens = Vec::with_capacity(d as usize);
    for j in 1..=d {
        let q_hat = product
            .coefficient_of("s", (d - j) as u16)
            .expect("s exists")
            .embed(&graph_ring, &var_map)
            .expect("s eliminated");
        let a_j = graph_ring.var_by_index(n_u + (j - 1) as usize);
        gens.push(&a_j - &q_hat);
    }

    let order = GbOrder::Elim { block: n_u };
    let gb = buchberger(&gens, order, config.groebner_budget)?;

    // Keep the eliminated part and homogenize into a0..ad.
    let a_ring = form_coefficient_ring(d);
    let mut generators = Vec::new();
    let mut affine_leads = Vec::new();
    for poly in gb.iter().filter(|p| p.supported_from(n_u)) {
        let affine = poly.to_multipoly(&graph_ring);
        affine_leads.push(poly.leading_exponents()[n_u..].to_vec());
        let total = affine.total_degree().unwrap_or(0);
        let homogenized = a_ring.from_terms(affine.terms().map(|(exps, coeff)| {
            let term_deg: u32 = exps[n_u..].iter().map(|&e| u32::from(e)).sum();
            let mut new_exps = vec![0u16; d as usize + 1];
            new_exps[0] = (total - term_deg) as u16;
            new_exps[1..].copy_from_slice(&exps[n_u..]);
            (new_exps, coeff.clone())
        }));
        generators.push(homogenized);
    }
    Ok(EliminationResult { a_ring, generators, affine_leads, d })
}
