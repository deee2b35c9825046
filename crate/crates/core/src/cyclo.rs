//! Exact sums of n-th roots of unity.
//!
//! A [`CycInt`] is kept in the redundant power basis `Σ c_i ζ^i`, `0 ≤ i < n`,
//! and only reduced modulo the cyclotomic polynomial Φ_n when a value is
//! compared with an integer. Two power-basis vectors can name the same
//! complex number (e.g. `1 + ζ + ζ²` and `0` for n = 3).

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Largest root order accepted by [`cyclotomic_poly`].
pub const MAX_ROOT_ORDER: u32 = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("root order must be positive")]
    ZeroOrder,
    #[error("root order {0} exceeds {MAX_ROOT_ORDER}")]
    OrderTooLarge(u32),
}

/// The n-th cyclotomic polynomial, integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycPoly {
    n: u32,
    coeffs: Vec<i64>,
}

impl CycPoly {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// Φ_n, obtained by dividing xⁿ − 1 by Φ_d for every proper divisor d of n.
pub fn cyclotomic_poly(n: u32) -> Result<CycPoly, CycloError> {
    if n == 0 {
        return Err(CycloError::ZeroOrder);
    }
    if n > MAX_ROOT_ORDER {
        return Err(CycloError::OrderTooLarge(n));
    }
    let mut memo = BTreeMap::new();
    Ok(CycPoly { n, coeffs: phi(n, &mut memo) })
}

fn phi(n: u32, memo: &mut BTreeMap<u32, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        let divisor = phi(d, memo);
        num = exact_div(&num, &divisor);
    }
    memo.insert(n, num.clone());
    num
}

/// Quotient of two integer polynomials when the divisor is monic and divides
/// exactly.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut quot = vec![0i64; num.len() - dd];
    for top in (dd..num.len()).rev() {
        let c = rem[top];
        quot[top - dd] = c;
        for (k, &f) in den.iter().enumerate() {
            rem[top - dd + k] -= c * f;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

/// Integer polynomial product, lowest degree first.
pub fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// An element of Z[ζ_n] in the power basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycInt {
    n: u32,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    pub fn zero(n: u32) -> Self {
        assert!(n > 0, "root order must be positive");
        Self { n, coeffs: vec![BigInt::zero(); n as usize] }
    }

    pub fn from_int(n: u32, c: impl Into<BigInt>) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[0] = c.into();
        z
    }

    /// Builds `Σ counts[i] ζ^i`; `counts` is indexed by exponent mod n.
    pub fn from_exponent_counts(n: u32, counts: &[i64]) -> Self {
        assert_eq!(counts.len(), n as usize, "one count per exponent");
        Self { n, coeffs: counts.iter().map(|&c| BigInt::from(c)).collect() }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Remainder of the power-basis polynomial modulo Φ_n.
    pub fn reduced(&self) -> Vec<BigInt> {
        let phi = cyclotomic_poly(self.n).expect("root order within cap");
        let deg = phi.degree();
        let mut rem = self.coeffs.clone();
        for top in (deg..rem.len()).rev() {
            if rem[top].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut rem[top]);
            for (k, &f) in phi.coeffs()[..deg].iter().enumerate() {
                if f != 0 {
                    rem[top - deg + k] -= &c * f;
                }
            }
        }
        rem.truncate(deg);
        rem
    }

    /// The integer this element equals, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        let rem = self.reduced();
        if rem.iter().skip(1).all(Zero::is_zero) {
            Some(rem.into_iter().next().unwrap_or_default())
        } else {
            None
        }
    }

    pub fn eq_integer(&self, c: &BigInt) -> bool {
        self.to_integer().as_ref() == Some(c)
    }

    /// Equality as complex numbers.
    pub fn same_value(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).to_integer().is_some_and(|v| v.is_zero())
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.n, other.n, "mixed root orders");
    }
}

/// ζ_n^(k mod n).
pub fn root_power(n: u32, k: i64) -> CycInt {
    let mut z = CycInt::zero(n);
    z.coeffs[k.rem_euclid(n as i64) as usize] = BigInt::one();
    z
}

impl Add for CycInt {
    type Output = CycInt;
    fn add(mut self, rhs: CycInt) -> CycInt {
        self.check_order(&rhs);
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
        self
    }
}

impl Neg for CycInt {
    type Output = CycInt;
    fn neg(mut self) -> CycInt {
        for a in self.coeffs.iter_mut() {
            *a = -std::mem::take(a);
        }
        self
    }
}

impl Sub for CycInt {
    type Output = CycInt;
    fn sub(self, rhs: CycInt) -> CycInt {
        self + (-rhs)
    }
}

impl Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        self.check_order(rhs);
        let n = self.n as usize;
        let mut out = CycInt::zero(self.n);
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in rhs.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                out.coeffs[(i + j) % n] += a * b;
            }
        }
        out
    }
}

impl Mul for CycInt {
    type Output = CycInt;
    fn mul(self, rhs: CycInt) -> CycInt {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1).unwrap().coeffs(), &[-1, 1]);
        assert_eq!(cyclotomic_poly(4).unwrap().coeffs(), &[1, 0, 1]);
        assert_eq!(cyclotomic_poly(12).unwrap().coeffs(), &[1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(0), Err(CycloError::ZeroOrder));
    }

    #[test]
    fn divisor_product_is_x_pow_n_minus_one() {
        for n in 1..=64u32 {
            let prod = (1..=n)
                .filter(|d| n % d == 0)
                .map(|d| cyclotomic_poly(d).unwrap().coeffs().to_vec())
                .fold(vec![1i64], |acc, p| poly_mul(&acc, &p));
            let mut expected = vec![0i64; n as usize + 1];
            expected[0] = -1;
            expected[n as usize] = 1;
            assert_eq!(prod, expected, "n = {n}");
        }
    }

    #[test]
    fn root_power_reduces_exponent() {
        assert!(root_power(4, 0).eq_integer(&BigInt::one()));
        assert_eq!(root_power(4, 6), root_power(4, 2));
        assert_eq!(root_power(4, -1), root_power(4, 3));
        let s = root_power(3, 1) + root_power(3, 2);
        assert!(s.eq_integer(&BigInt::from(-1)));
    }

    #[test]
    fn full_sums_vanish() {
        let s = (1..=5).map(|i| root_power(5, i)).fold(CycInt::zero(5), |a, b| a + b);
        assert!(s.eq_integer(&BigInt::zero()));
        assert!(!root_power(4, 1).eq_integer(&BigInt::one()));
        // ζ8^(8i) over even i is just a count of ones
        let even = (1..=8)
            .filter(|i| i % 2 == 0)
            .map(|i| root_power(8, 8 * i))
            .fold(CycInt::zero(8), |a, b| a + b);
        assert!(even.eq_integer(&BigInt::from(4)));
        // the even powers ζ8^(2i) form a full set of 4th roots
        let even_pow = (1..=4)
            .map(|i| root_power(8, 2 * i))
            .fold(CycInt::zero(8), |a, b| a + b);
        assert!(even_pow.eq_integer(&BigInt::zero()));
    }

    #[test]
    fn non_integer_is_detected() {
        // i + 1 is not an integer
        let z = root_power(4, 1) + CycInt::from_int(4, 1);
        assert_eq!(z.to_integer(), None);
        // ζ6 + ζ6^5 = 1
        let z = root_power(6, 1) + root_power(6, 5);
        assert_eq!(z.to_integer(), Some(BigInt::one()));
    }

    mod float_agreement {
        use super::*;
        use astro_float::{BigFloat, Consts, RoundingMode};
        use rand::{Rng, SeedableRng};
        use rand_chacha::ChaCha8Rng;

        const PREC: usize = 256;
        const RM: RoundingMode = RoundingMode::ToEven;

        /// Re and Im of Σ c_k ζ^k at 256 bits.
        fn evaluate(z: &CycInt, cc: &mut Consts) -> (BigFloat, BigFloat) {
            let two_pi = cc.pi(PREC, RM).mul(&BigFloat::from_u64(2, PREC), PREC, RM);
            let step = two_pi.div(&BigFloat::from_u64(z.n() as u64, PREC), PREC, RM);
            let mut re = BigFloat::from_u64(0, PREC);
            let mut im = BigFloat::from_u64(0, PREC);
            for (k, c) in z.coeffs().iter().enumerate() {
                let c = BigFloat::from_i64(i64::try_from(c).unwrap(), PREC);
                let angle = step.mul(&BigFloat::from_u64(k as u64, PREC), PREC, RM);
                re = re.add(&c.mul(&angle.cos(PREC, RM, cc), PREC, RM), PREC, RM);
                im = im.add(&c.mul(&angle.sin(PREC, RM, cc), PREC, RM), PREC, RM);
            }
            (re, im)
        }

        fn small(x: &BigFloat, tol: &BigFloat) -> bool {
            x.abs() < *tol
        }

        /// Random element; about half are integers disguised by adding
        /// vanishing coset sums.
        fn sample(n: u32, rng: &mut ChaCha8Rng) -> CycInt {
            let mut z = CycInt::from_int(n, rng.gen_range(-20i64..=20));
            for d in (2..=n).filter(|d| n % d == 0) {
                let step = (n / d) as i64;
                let shift = rng.gen_range(0..n as i64);
                let mult = rng.gen_range(-5i64..=5);
                let coset = (0..d as i64).map(|j| root_power(n, shift + j * step)).fold(CycInt::zero(n), |a, b| a + b);
                z = z + CycInt::from_int(n, mult) * coset;
            }
            if rng.gen_bool(0.5) {
                let k = rng.gen_range(0..n as i64);
                z = z + CycInt::from_int(n, rng.gen_range(-3i64..=3)) * root_power(n, k);
            }
            z
        }

        #[test]
        fn exact_verdict_matches_high_precision_evaluation() {
            let mut cc = Consts::new().unwrap();
            let tol = BigFloat::from_u64(1, PREC).div(&BigFloat::from_u64(10, PREC).powi(30, PREC, RM), PREC, RM);
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for n in [3u32, 4, 6, 8, 12, 24] {
                let mut integers = 0;
                for _ in 0..1000 {
                    let z = sample(n, &mut rng);
                    let (re, im) = evaluate(&z, &mut cc);
                    match z.to_integer() {
                        Some(c) => {
                            integers += 1;
                            let c = BigFloat::from_i64(i64::try_from(&c).unwrap(), PREC);
                            assert!(small(&im, &tol) && small(&re.sub(&c, PREC, RM), &tol), "n = {n}: {z:?}");
                        }
                        None => {
                            let nearest = re.round(0, RM);
                            let off = !small(&im, &tol) || !small(&re.sub(&nearest, PREC, RM), &tol);
                            assert!(off, "n = {n}: float says integer for {z:?}");
                        }
                    }
                }
                assert!(integers > 100 && integers < 1000, "n = {n}: {integers} integer samples");
            }
        }
    }

    mod ring_laws {
        use super::*;
        use proptest::prelude::*;

        fn element(n: u32) -> impl Strategy<Value = CycInt> {
            proptest::collection::vec(-9i64..=9, n as usize).prop_map(move |c| CycInt::from_exponent_counts(n, &c))
        }

        fn triple() -> impl Strategy<Value = (CycInt, CycInt, CycInt)> {
            prop_oneof![Just(3u32), Just(5), Just(6), Just(8), Just(12)]
                .prop_flat_map(|n| (element(n), element(n), element(n)))
        }

        proptest! {
            #[test]
            fn associative((a, b, c) in triple()) {
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a + (b + c));
            }

            #[test]
            fn distributive((a, b, c) in triple()) {
                let lhs = &a * &(b.clone() + c.clone());
                prop_assert!(lhs.same_value(&(&a * &b + &a * &c)));
            }

            #[test]
            fn commutative_with_identity((a, b, _c) in triple()) {
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&a * &CycInt::from_int(a.n(), 1), a.clone());
                prop_assert!((a.clone() - a).to_integer() == Some(BigInt::zero()));
            }

            #[test]
            fn reduction_respects_ring_operations((a, b, _c) in triple()) {
                let n = a.n();
                let lift = |r: Vec<BigInt>| {
                    let mut z = CycInt::zero(n);
                    z.coeffs[..r.len()].clone_from_slice(&r);
                    z
                };
                let sum: Vec<BigInt> = a.reduced().into_iter().zip(b.reduced()).map(|(x, y)| x + y).collect();
                prop_assert_eq!((a.clone() + b.clone()).reduced(), sum);
                let prod = &lift(a.reduced()) * &lift(b.reduced());
                prop_assert_eq!((&a * &b).reduced(), prod.reduced());
            }
        }
    }
}
