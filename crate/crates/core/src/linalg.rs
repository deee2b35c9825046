//! Exact integer and rational linear algebra on small dense matrices.
//!
//! Ranks of the larger matrices are obtained modulo the Mersenne prime
//! 2⁶¹−1 and then certified over Q: the modular rank is a lower bound, and
//! the canonical kernel basis, lifted by rational reconstruction and checked
//! exactly, gives the matching upper bound.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("ragged matrix: row {row} has {len} entries, expected {expected}")]
    Ragged { row: usize, len: usize, expected: usize },
}

pub type IntMatrix = Vec<Vec<BigInt>>;

fn check_rect<T>(m: &[Vec<T>]) -> Result<usize, LinalgError> {
    let cols = m.first().map_or(0, Vec::len);
    for (row, r) in m.iter().enumerate() {
        if r.len() != cols {
            return Err(LinalgError::Ragged { row, len: r.len(), expected: cols });
        }
    }
    Ok(cols)
}

fn check_square<T>(m: &[Vec<T>]) -> Result<usize, LinalgError> {
    let cols = check_rect(m)?;
    if cols != m.len() {
        return Err(LinalgError::NotSquare { rows: m.len(), cols });
    }
    Ok(cols)
}

/// Converts a matrix of machine integers.
pub fn to_big<T: Into<BigInt> + Copy>(m: &[Vec<T>]) -> IntMatrix {
    m.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect()
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det_bareiss(m: &[Vec<BigInt>]) -> Result<BigInt, LinalgError> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[n - 1][n - 1])
}

/// `det(den·N − num·I)` for `λ = num/den`; zero exactly when λ is an
/// eigenvalue of N.
pub fn shifted_det(m: &[Vec<BigInt>], lam: &BigRational) -> Result<BigInt, LinalgError> {
    let n = check_square(m)?;
    let (num, den) = (lam.numer(), lam.denom());
    let shifted: IntMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = &m[i][j] * den;
                    if i == j {
                        v - num
                    } else {
                        v
                    }
                })
                .collect()
        })
        .collect();
    det_bareiss(&shifted)
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> IntMatrix {
    let n = a.len();
    let p = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![BigInt::zero(); p]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..p {
                if !b[k][j].is_zero() {
                    out[i][j] += aik * &b[k][j];
                }
            }
        }
    }
    out
}

/// Characteristic polynomial `det(xI − A)`, lowest degree first, by the
/// Faddeev–LeVerrier recursion (all divisions are exact over Z).
pub fn char_poly(a: &[Vec<BigInt>]) -> Result<Vec<BigInt>, LinalgError> {
    let n = check_square(a)?;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk: IntMatrix = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        for (i, row) in mk.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        let am = mat_mul(a, &mk);
        let trace: BigInt = (0..n).map(|i| &am[i][i]).sum();
        let (c, r) = (-trace).div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier division must be exact");
        coeffs[n - k] = c;
        mk = am;
    }
    Ok(coeffs)
}

/// Product `Π (x − r)^mult` over integer roots, lowest degree first.
pub fn poly_from_roots(roots: &[(BigInt, usize)]) -> Vec<BigInt> {
    let mut p = vec![BigInt::one()];
    for (r, mult) in roots {
        for _ in 0..*mult {
            let mut next = vec![BigInt::zero(); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r;
            }
            p = next;
        }
    }
    p
}

/// Divides by `(x − r)`; returns the quotient when the remainder is zero.
fn deflate(p: &[BigInt], r: &BigInt) -> Option<Vec<BigInt>> {
    let deg = p.len() - 1;
    if deg == 0 {
        return None;
    }
    let mut q = vec![BigInt::zero(); deg];
    let mut carry = BigInt::zero();
    for i in (1..=deg).rev() {
        carry = &p[i] + carry * r;
        q[i - 1] = carry.clone();
    }
    (&p[0] + carry * r).is_zero().then_some(q)
}

/// All integer roots in `[−bound, bound]` with multiplicities, ascending.
pub fn integer_roots(p: &[BigInt], bound: u64) -> Vec<(BigInt, usize)> {
    let mut poly = p.to_vec();
    while poly.len() > 1 && poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
    let mut out = Vec::new();
    let b = bound as i64;
    for x in -b..=b {
        if poly.len() <= 1 {
            break;
        }
        let x = BigInt::from(x);
        let mut mult = 0;
        while let Some(q) = deflate(&poly, &x) {
            poly = q;
            mult += 1;
        }
        if mult > 0 {
            out.push((x, mult));
        }
    }
    out
}

/// Rank over Q by fraction-free elimination. Intended for small matrices.
pub fn rank_exact(m: &[Vec<BigInt>]) -> Result<usize, LinalgError> {
    let cols = check_rect(m)?;
    let mut a = m.to_vec();
    let rows = a.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        for i in rank + 1..rows {
            for j in c + 1..cols {
                let v = &a[i][j] * &a[rank][c] - &a[i][c] * &a[rank][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Ok(rank)
}

/// The Mersenne prime 2⁶¹ − 1.
pub const MODULUS: u64 = (1 << 61) - 1;

#[inline]
fn mulmod(a: u64, b: u64) -> u64 {
    let t = a as u128 * b as u128;
    let lo = (t as u64) & MODULUS;
    let hi = (t >> 61) as u64;
    let s = lo + hi;
    if s >= MODULUS {
        s - MODULUS
    } else {
        s
    }
}

#[inline]
fn submod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + MODULUS - b
    }
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn invmod(a: u64) -> u64 {
    powmod(a, MODULUS - 2)
}

fn reduce(x: &BigInt) -> u64 {
    x.mod_floor(&BigInt::from(MODULUS)).to_u64().expect("residue fits")
}

/// Reduced row echelon form modulo [`MODULUS`]; returns the pivot columns.
fn rref_mod(a: &mut [Vec<u64>]) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = invmod(a[r][c]);
        for x in a[r][c..].iter_mut() {
            *x = mulmod(*x, inv);
        }
        let (top, rest) = a.split_at_mut(r);
        let (pivot_row, bottom) = rest.split_first_mut().expect("row r exists");
        for row in top.iter_mut().chain(bottom.iter_mut()) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for (x, &p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if p != 0 {
                    *x = submod(*x, mulmod(f, p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rational reconstruction of a residue modulo [`MODULUS`].
fn reconstruct(a: u64) -> Option<BigRational> {
    let m = MODULUS as i128;
    let bound = ((MODULUS / 2) as f64).sqrt() as i128;
    let (mut r0, mut r1) = (m, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() > bound {
        return None;
    }
    Some(BigRational::new(BigInt::from(r1), BigInt::from(t1)))
}

/// How a rank was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankMethod {
    /// Modular lower bound matched by an exactly verified kernel.
    ModularCertified,
    /// Fraction-free elimination over Z.
    Exact,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankCertificate {
    pub rank: usize,
    pub method: RankMethod,
}

/// Rank over Q of an integer matrix, certified as described in the module
/// docs, with exact elimination as the fallback.
pub fn certified_rank(m: &[Vec<BigInt>]) -> Result<RankCertificate, LinalgError> {
    let cols = check_rect(m)?;
    let mut a: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(reduce).collect()).collect();
    let pivots = rref_mod(&mut a);
    let rank = pivots.len();
    if kernel_verifies(m, &a, &pivots, cols) {
        return Ok(RankCertificate { rank, method: RankMethod::ModularCertified });
    }
    Ok(RankCertificate { rank: rank_exact(m)?, method: RankMethod::Exact })
}

/// Lifts the canonical right-kernel basis from the modular RREF and checks
/// `A x = 0` over Z for every basis vector.
fn kernel_verifies(m: &[Vec<BigInt>], rref: &[Vec<u64>], pivots: &[usize], cols: usize) -> bool {
    let mut is_pivot = vec![false; cols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    for f in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![BigRational::zero(); cols];
        x[f] = BigRational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            let v = rref[r][f];
            if v == 0 {
                continue;
            }
            match reconstruct(MODULUS - v) {
                Some(q) => x[pc] = q,
                None => return false,
            }
        }
        let lcm = x.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
        let xi: Vec<BigInt> = x.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
        let support: Vec<usize> = (0..cols).filter(|&j| !xi[j].is_zero()).collect();
        for row in m {
            let s: BigInt = support.iter().map(|&j| &row[j] * &xi[j]).sum();
            if !s.is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(m: &[&[i64]]) -> IntMatrix {
        m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        (0..n)
            .map(|j| {
                let minor: IntMatrix = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][j] * cofactor_det(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }

    #[test]
    fn det_examples() {
        assert_eq!(det_bareiss(&big(&[&[2, 0], &[0, 3]])).unwrap(), BigInt::from(6));
        assert_eq!(det_bareiss(&big(&[&[0, 1], &[1, 0]])).unwrap(), BigInt::from(-1));
        assert_eq!(det_bareiss(&big(&[&[1, 2], &[2, 4]])).unwrap(), BigInt::zero());
        assert!(det_bareiss(&big(&[&[1, 2]])).is_err());
    }

    #[test]
    fn char_poly_of_k9_adjacency() {
        let j: IntMatrix = (0..9)
            .map(|i| (0..9).map(|k| BigInt::from((i != k) as i64)).collect())
            .collect();
        let p = char_poly(&j).unwrap();
        let expected = poly_from_roots(&[(BigInt::from(8), 1), (BigInt::from(-1), 8)]);
        assert_eq!(p, expected);
        let roots = integer_roots(&p, 8);
        assert_eq!(roots, vec![(BigInt::from(-1), 8), (BigInt::from(8), 1)]);
        let lam = BigRational::from_integer(BigInt::from(8));
        assert!(shifted_det(&j, &lam).unwrap().is_zero());
    }

    #[test]
    fn rank_examples() {
        let m = big(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank_exact(&m).unwrap(), 2);
        let c = certified_rank(&m).unwrap();
        assert_eq!(c, RankCertificate { rank: 2, method: RankMethod::ModularCertified });
        // every entry is a multiple of the modulus, so the modular rank is 0
        let p = BigInt::from(MODULUS);
        let m = vec![vec![p.clone(), BigInt::zero()], vec![BigInt::zero(), p]];
        assert_eq!(certified_rank(&m).unwrap(), RankCertificate { rank: 2, method: RankMethod::Exact });
    }

    #[test]
    fn reconstruct_small_fractions() {
        let inv3 = invmod(3);
        assert_eq!(reconstruct(inv3), Some(BigRational::new(1.into(), 3.into())));
        assert_eq!(reconstruct(MODULUS - 5), Some(BigRational::from_integer((-5).into())));
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = IntMatrix> {
        proptest::collection::vec(proptest::collection::vec(-4i64..=4, n), n)
            .prop_map(|m| m.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect())
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor(m in (1usize..=5).prop_flat_map(small_matrix)) {
            prop_assert_eq!(det_bareiss(&m).unwrap(), cofactor_det(&m));
        }

        #[test]
        fn char_poly_constant_term_is_signed_det(m in (1usize..=5).prop_flat_map(small_matrix)) {
            let p = char_poly(&m).unwrap();
            let d = det_bareiss(&m).unwrap();
            let sign = if m.len() % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            prop_assert_eq!(&p[0], &(sign * d));
        }

        #[test]
        fn certified_rank_matches_exact(m in (1usize..=6).prop_flat_map(small_matrix)) {
            // duplicate a row so singular cases are common
            let mut m = m;
            let r = m[0].clone();
            m.push(r);
            prop_assert_eq!(certified_rank(&m).unwrap().rank, rank_exact(&m).unwrap());
        }
    }
}
