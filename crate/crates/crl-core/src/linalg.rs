//! Exact linear algebra over ℚ plus modular rank certificates.
//!
//! Matrices are plain `Vec<Vec<Rat>>` in row-major order.  The elimination
//! pipeline clears denominators row by row and keeps rows gcd-reduced, so all
//! intermediate arithmetic stays in ℤ; kernels come back as a canonical
//! reduced basis (one vector per free column, identity pattern on the free
//! columns).

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::polyring::Rat;

/// Echelon form bookkeeping: integer rows plus their pivot columns.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    ncols: usize,
}

fn clear_denominators(row: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for v in row {
        if !v.is_zero() {
            lcm = lcm.lcm(v.denom());
        }
    }
    row.iter()
        .map(|v| {
            if v.is_zero() {
                BigInt::zero()
            } else {
                v.numer() * (&lcm / v.denom())
            }
        })
        .collect()
}

fn reduce_by_content(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for v in row.iter() {
        if !v.is_zero() {
            g = g.gcd(v);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.iter_mut() {
        *v /= &g;
    }
}

impl Echelon {
    fn new(ncols: usize) -> Echelon {
        Echelon { rows: Vec::new(), pivots: Vec::new(), ncols }
    }

    /// Reduce a row against the current echelon rows and absorb it if nonzero.
    /// Returns `true` when the row added a new pivot.
    fn insert(&mut self, row: &[Rat]) -> bool {
        assert_eq!(row.len(), self.ncols);
        let mut work = clear_denominators(row);
        reduce_by_content(&mut work);
        for (r, &p) in self.rows.iter().zip(self.pivots.iter()) {
            if work[p].is_zero() {
                continue;
            }
            // work := work * r[p] - r * work[p], a fraction-free elimination.
            let a = r[p].clone();
            let b = work[p].clone();
            for (w, rv) in work.iter_mut().zip(r.iter()) {
                *w = &*w * &a - rv * &b;
            }
            reduce_by_content(&mut work);
        }
        if let Some(p) = work.iter().position(|v| !v.is_zero()) {
            if work[p].is_negative() {
                for v in work.iter_mut() {
                    *v = -std::mem::take(v);
                }
            }
            // Keep rows sorted by pivot column.
            let at = self.pivots.partition_point(|&q| q < p);
            self.rows.insert(at, work);
            self.pivots.insert(at, p);
            true
        } else {
            false
        }
    }
}

/// Rank of a rational matrix.
pub fn rank(rows: &[Vec<Rat>], ncols: usize) -> usize {
    let mut ech = Echelon::new(ncols);
    for row in rows {
        ech.insert(row);
    }
    ech.rows.len()
}

/// Incremental rank tracker: feed rows one at a time and observe whether each
/// one enlarged the row space.
pub struct RankTracker {
    ech: Echelon,
}

impl RankTracker {
    pub fn new(ncols: usize) -> RankTracker {
        RankTracker { ech: Echelon::new(ncols) }
    }

    pub fn insert(&mut self, row: &[Rat]) -> bool {
        self.ech.insert(row)
    }

    pub fn rank(&self) -> usize {
        self.ech.rows.len()
    }
}

/// Canonical kernel basis of the linear map given by `rows` (each row is one
/// linear equation in `ncols` unknowns).  One basis vector per free column:
/// entry 1 at its own free column, 0 at every other free column, pivot
/// entries solved by back-substitution.  Vectors are ordered by free column.
pub fn kernel_basis(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut ech = Echelon::new(ncols);
    for row in rows {
        ech.insert(row);
    }
    let pivot_set: Vec<usize> = ech.pivots.clone();
    let is_pivot = {
        let mut mask = vec![false; ncols];
        for &p in &pivot_set {
            mask[p] = true;
        }
        mask
    };
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        // Solve rows bottom-up: rows are sorted by pivot, so iterate in
        // reverse to have later pivots resolved before earlier rows.
        for (r, &p) in ech.rows.iter().zip(ech.pivots.iter()).rev() {
            let mut acc = Rat::zero();
            for (j, coef) in r.iter().enumerate() {
                if j != p && !coef.is_zero() && !v[j].is_zero() {
                    acc += Rat::from_integer(coef.clone()) * &v[j];
                }
            }
            if !acc.is_zero() {
                v[p] = -acc / Rat::from_integer(r[p].clone());
            }
        }
        basis.push(v);
    }
    basis
}

/// Scale a rational vector to a primitive integer vector whose first nonzero
/// entry is positive.
pub fn primitive_integer(v: &[Rat]) -> Vec<BigInt> {
    let mut ints = clear_denominators(v);
    reduce_by_content(&mut ints);
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in ints.iter_mut() {
                *x = -std::mem::take(x);
            }
        }
    }
    ints
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128) * (b as u128) % (p as u128)) as u64
}

fn reduce_mod(v: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = v.mod_floor(&m);
    let (_, digits) = r.to_u64_digits();
    match digits.len() {
        0 => 0,
        1 => digits[0],
        _ => unreachable!("residue exceeds modulus"),
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: p is prime.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Rank of an integer matrix modulo a prime `p`, by standard Gaussian
/// elimination in the prime field.
pub fn rank_mod_p(rows: &[Vec<BigInt>], ncols: usize, p: u64) -> usize {
    let mut mat: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols);
            r.iter().map(|v| reduce_mod(v, p)).collect()
        })
        .collect();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..mat.len()).find(|&i| mat[i][col] != 0) else {
            continue;
        };
        mat.swap(rank, pivot_row);
        let inv = inv_mod(mat[rank][col], p);
        for j in col..ncols {
            mat[rank][j] = mulmod(mat[rank][j], inv, p);
        }
        let pivot = std::mem::take(&mut mat[rank]);
        for row in mat.iter_mut().skip(rank + 1) {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for j in col..ncols {
                let sub = mulmod(factor, pivot[j], p);
                row[j] = (row[j] + p - sub) % p;
            }
        }
        mat[rank] = pivot;
        rank += 1;
        if rank == mat.len() {
            break;
        }
    }
    rank
}

/// Evaluate `rows · v` and confirm every entry vanishes.
pub fn verify_in_kernel(rows: &[Vec<Rat>], v: &[Rat]) -> bool {
    rows.iter().all(|row| {
        let mut acc = Rat::zero();
        for (a, b) in row.iter().zip(v.iter()) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc.is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{rat, ratio};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn rank_of_identity_and_singular() {
        assert_eq!(rank(&m(&[&[1, 0], &[0, 1]]), 2), 2);
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]]), 2), 1);
        assert_eq!(rank(&m(&[&[0, 0]]), 2), 0);
    }

    #[test]
    fn kernel_of_sum_map() {
        // x + y + z = 0 has a 2-dimensional kernel with free columns y, z.
        let basis = kernel_basis(&m(&[&[1, 1, 1]]), 3);
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0], vec![rat(-1), rat(1), rat(0)]);
        assert_eq!(basis[1], vec![rat(-1), rat(0), rat(1)]);
    }

    #[test]
    fn kernel_canonical_form_independent_of_row_order() {
        let a = kernel_basis(&m(&[&[1, 2, 3], &[0, 1, 1]]), 3);
        let b = kernel_basis(&m(&[&[0, 1, 1], &[1, 2, 3]]), 3);
        let c = kernel_basis(&m(&[&[0, 2, 2], &[1, 2, 3], &[1, 3, 4]]), 3);
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.len(), 1);
        assert_eq!(a[0], vec![rat(-1), rat(-1), rat(1)]);
    }

    #[test]
    fn kernel_with_rational_entries() {
        let rows = vec![vec![ratio(1, 2), ratio(1, 3)]];
        let basis = kernel_basis(&rows, 2);
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], vec![ratio(-2, 3), rat(1)]);
        assert!(verify_in_kernel(&rows, &basis[0]));
        // Sign flips so the first nonzero entry is positive.
        assert_eq!(primitive_integer(&basis[0]), vec![BigInt::from(2), BigInt::from(-3)]);
    }

    #[test]
    fn kernel_vectors_satisfy_equations() {
        let rows = m(&[&[2, -1, 0, 3], &[1, 1, 1, 1], &[3, 0, 1, 4]]);
        let basis = kernel_basis(&rows, 4);
        assert!(!basis.is_empty());
        for v in &basis {
            assert!(verify_in_kernel(&rows, v));
        }
        assert_eq!(rank(&rows, 4) + basis.len(), 4);
    }

    #[test]
    fn primitive_integer_normalizes_sign_and_content() {
        let v = vec![rat(-4), rat(6), rat(-2)];
        assert_eq!(
            primitive_integer(&v),
            vec![BigInt::from(2), BigInt::from(-3), BigInt::from(1)]
        );
        assert_eq!(primitive_integer(&[rat(0), rat(0)]), vec![BigInt::zero(), BigInt::zero()]);
    }

    #[test]
    fn modular_rank_agrees_with_exact_rank() {
        let rows = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let int_rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|x| x.numer().clone()).collect())
            .collect();
        assert_eq!(rank(&rows, 3), 2);
        for p in [2147483647u64, 2305843009213693951u64] {
            assert_eq!(rank_mod_p(&int_rows, 3, p), 2);
        }
    }

    #[test]
    fn modular_rank_with_big_entries() {
        let big = BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
        let rows = vec![
            vec![big.clone(), BigInt::from(1)],
            vec![&big * BigInt::from(2), BigInt::from(2)],
        ];
        assert_eq!(rank_mod_p(&rows, 2, 2305843009213693951), 1);
    }

    #[test]
    fn rank_tracker_reports_new_pivots() {
        let mut tr = RankTracker::new(3);
        assert!(tr.insert(&[rat(1), rat(0), rat(1)]));
        assert!(tr.insert(&[rat(0), rat(1), rat(1)]));
        assert!(!tr.insert(&[rat(1), rat(1), rat(2)]));
        assert_eq!(tr.rank(), 2);
    }
}
