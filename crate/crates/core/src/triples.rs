//! The triple set T indexing the split-torus classes and characters of
//! PSU(3,q), and the exact character sums over it.
//!
//! Every sum here is built as a histogram of exponents of a primitive
//! (q+1)-th (or 3rd) root of unity and turned into an integer through
//! [`CycInt::to_integer`]. A sum that fails to be an integer is reported as
//! [`TriplesError::NotAnInteger`]; it signals a broken enumeration.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::cyclo::{root_power, CycInt};
use crate::gf::prime_power;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriplesError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("claims stated for gcd(3, q+1) = 1 only (q = {0})")]
    NeedsGcdOne(u64),
    #[error("needs gcd(3, q+1) = 3 (q = {0})")]
    NeedsGcdThree(u64),
    #[error("parameter u = {u} outside {lo}..={hi}")]
    ParamOutOfRange { u: u64, lo: u64, hi: u64 },
    #[error("({0}, {1}, {2}) is not in T")]
    NotInT(u64, u64, u64),
    #[error("character sum did not reduce to an integer")]
    NotAnInteger,
}

/// Which of the two arithmetic regimes q falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GcdCase {
    /// gcd(3, q+1) = 1
    One,
    /// gcd(3, q+1) = 3
    Three,
}

impl GcdCase {
    pub fn of(q: u64) -> Self {
        if (q + 1) % 3 == 0 {
            GcdCase::Three
        } else {
            GcdCase::One
        }
    }

    pub fn gcd(self) -> u64 {
        match self {
            GcdCase::One => 1,
            GcdCase::Three => 3,
        }
    }
}

pub type Triple = (u64, u64, u64);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleSet {
    pub q: u64,
    pub case: GcdCase,
    pub triples: Vec<Triple>,
}

impl TripleSet {
    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn contains(&self, t: Triple) -> bool {
        self.triples.binary_search(&t).is_ok()
    }

    /// Closed-form |T|: (q²−q)/6, or (q²−q−2)/18 when 3 | q+1.
    pub fn expected_len(q: u64) -> u64 {
        match GcdCase::of(q) {
            GcdCase::One => (q * q - q) / 6,
            GcdCase::Three => (q * q - q - 2) / 18,
        }
    }
}

fn check_q(q: u64) -> Result<(), TriplesError> {
    prime_power(q).map(|_| ()).ok_or(TriplesError::NotPrimePower(q))
}

/// T in lexicographic order.
///
/// gcd 1: `1 ≤ k < ℓ < m ≤ q+1` with `k+ℓ+m ≡ 0 (mod q+1)`.
/// gcd 3: `1 ≤ k < ℓ ≤ (q+1)/3`, `ℓ < m ≤ q+1`, `k+ℓ+m = q+1`.
pub fn enumerate_t(q: u64) -> Result<TripleSet, TriplesError> {
    check_q(q)?;
    let r = q + 1;
    let case = GcdCase::of(q);
    let mut triples = Vec::new();
    match case {
        GcdCase::One => {
            for k in 1..=r {
                for l in k + 1..=r {
                    // the unique m in 1..=r with k + l + m ≡ 0
                    let m = r - (k + l) % r;
                    if m > l {
                        triples.push((k, l, m));
                    }
                }
            }
        }
        GcdCase::Three => {
            let third = r / 3;
            for k in 1..=third {
                for l in k + 1..=third {
                    let m = r - k - l;
                    if l < m {
                        triples.push((k, l, m));
                    }
                }
            }
        }
    }
    Ok(TripleSet { q, case, triples })
}

/// How many triples of T contain each x in 1..=q+1 (gcd 1 only).
pub fn occurrence_counts(q: u64) -> Result<BTreeMap<u64, u64>, TriplesError> {
    check_q(q)?;
    if GcdCase::of(q) != GcdCase::One {
        return Err(TriplesError::NeedsGcdOne(q));
    }
    let t = enumerate_t(q)?;
    let mut counts: BTreeMap<u64, u64> = (1..=q + 1).map(|x| (x, 0)).collect();
    for &(k, l, m) in &t.triples {
        for x in [k, l, m] {
            *counts.get_mut(&x).expect("entries lie in 1..=q+1") += 1;
        }
    }
    Ok(counts)
}

/// Occurrence count predicted for `x` by the parity argument on T.
pub fn occurrence_claim(q: u64, x: u64) -> u64 {
    if q % 2 == 1 {
        if x == q + 1 || x % 2 == 1 {
            (q - 1) / 2
        } else {
            (q - 3) / 2
        }
    } else if x == q + 1 {
        q / 2
    } else {
        (q - 2) / 2
    }
}

fn to_int(z: CycInt) -> Result<BigInt, TriplesError> {
    z.to_integer().ok_or(TriplesError::NotAnInteger)
}

fn exponent_sum<I>(n: u64, exponents: I) -> Result<BigInt, TriplesError>
where
    I: IntoIterator<Item = u64>,
{
    let mut counts = vec![0i64; n as usize];
    for e in exponents {
        counts[(e % n) as usize] += 1;
    }
    to_int(CycInt::from_exponent_counts(n as u32, &counts))
}

/// `Σ_{(k,ℓ,m)∈T} e^{3uk} + e^{3uℓ} + e^{3um}` with `e` a primitive (q+1)-th
/// root of unity, in the gcd-1 case.
///
/// `u` ranges over `1..=q+1`; the characters it indexes use `1..=q`.
pub fn chi3_sum(q: u64, u: u64) -> Result<BigInt, TriplesError> {
    check_q(q)?;
    if GcdCase::of(q) != GcdCase::One {
        return Err(TriplesError::NeedsGcdOne(q));
    }
    if !(1..=q + 1).contains(&u) {
        return Err(TriplesError::ParamOutOfRange { u, lo: 1, hi: q + 1 });
    }
    let t = enumerate_t(q)?;
    triple_power_sum(&t, u)
}

fn triple_power_sum(t: &TripleSet, u: u64) -> Result<BigInt, TriplesError> {
    let r = t.q + 1;
    exponent_sum(
        r,
        t.triples.iter().flat_map(|&(k, l, m)| [3 * u * k, 3 * u * l, 3 * u * m]),
    )
}

/// Value claimed for [`chi3_sum`]: −(q−1)/2 at u = (q+1)/2 for odd q, else 1.
pub fn chi3_claim(q: u64, u: u64) -> i64 {
    if q % 2 == 1 && 2 * u == q + 1 {
        -((q as i64 - 1) / 2)
    } else {
        1
    }
}

/// Number of `(x, y) ∈ (Z/m)²` with `ax + by ≡ c (mod m)`: `d·m` when
/// `d = gcd(a, b, m)` divides `c`, otherwise 0.
pub fn count_solutions(a: i64, b: i64, c: i64, m: u64) -> u64 {
    assert!(m >= 1, "modulus must be positive");
    let mi = m as i64;
    let d = a.rem_euclid(mi).gcd(&b.rem_euclid(mi)).gcd(&mi) as u64;
    if c.rem_euclid(mi) as u64 % d == 0 {
        d * m
    } else {
        0
    }
}

/// All orderings of every triple of T.
fn all_orderings(t: &TripleSet) -> impl Iterator<Item = Triple> + '_ {
    t.triples.iter().flat_map(|&(k, l, m)| {
        [(k, l, m), (k, m, l), (l, k, m), (l, m, k), (m, k, l), (m, l, k)]
    })
}

fn ordered_sum(t: &TripleSet, (u, v, w): Triple) -> Result<BigInt, TriplesError> {
    let r = t.q + 1;
    exponent_sum(r, all_orderings(t).map(|(k, l, m)| u * k + v * l + w * m))
}

/// `Σ_{(k,ℓ,m)∈S} e^{uk+vℓ+wm}` where S holds every ordering of every triple
/// of T (gcd 1).
pub fn chi5_sum(q: u64, triple: Triple) -> Result<BigInt, TriplesError> {
    check_q(q)?;
    if GcdCase::of(q) != GcdCase::One {
        return Err(TriplesError::NeedsGcdOne(q));
    }
    let t = enumerate_t(q)?;
    if !t.contains(triple) {
        return Err(TriplesError::NotInT(triple.0, triple.1, triple.2));
    }
    ordered_sum(&t, triple)
}

/// Value claimed for [`chi5_sum`]: −(q−1) when q+1 is in the triple, else 2.
pub fn chi5_claim(q: u64, (u, v, w): Triple) -> i64 {
    if [u, v, w].contains(&(q + 1)) {
        1 - q as i64
    } else {
        2
    }
}

/// The gcd-3 analogue of [`chi3_sum`], for `1 ≤ u ≤ (q+1)/3 − 1`.
pub fn chi3_sum_gcd3(q: u64, u: u64) -> Result<BigInt, TriplesError> {
    check_q(q)?;
    if GcdCase::of(q) != GcdCase::Three {
        return Err(TriplesError::NeedsGcdThree(q));
    }
    let hi = (q + 1) / 3 - 1;
    if !(1..=hi).contains(&u) {
        return Err(TriplesError::ParamOutOfRange { u, lo: 1, hi });
    }
    let t = enumerate_t(q)?;
    triple_power_sum(&t, u)
}

/// Closed form matching [`chi3_sum_gcd3`]: 0, except −(q+1)/6 at
/// u = (q+1)/6 for odd q, where e^{3u} = −1.
pub fn chi3_gcd3_closed_form(q: u64, u: u64) -> i64 {
    if q % 2 == 1 && 6 * u == q + 1 {
        -((q as i64 + 1) / 6)
    } else {
        0
    }
}

/// `Σ_{(k,ℓ,m)∈T} ω^{k−ℓ} + ω^{ℓ−k}` with ω a primitive cube root of unity
/// (gcd 3).
pub fn omega_pair_sum(q: u64) -> Result<BigInt, TriplesError> {
    check_q(q)?;
    if GcdCase::of(q) != GcdCase::Three {
        return Err(TriplesError::NeedsGcdThree(q));
    }
    let t = enumerate_t(q)?;
    let z = t
        .triples
        .iter()
        .map(|&(k, l, _)| {
            let d = k as i64 - l as i64;
            root_power(3, d) + root_power(3, -d)
        })
        .fold(CycInt::zero(3), |a, b| a + b);
    to_int(z)
}

/// The three-case formula stated alongside the ω pair sum, keyed on
/// (q+1) mod 9. Returns thrice the stated value to stay integral.
pub fn omega_pair_claim_times3(q: u64) -> i64 {
    let q = q as i64;
    match (q + 1) % 9 {
        0 => -(2 * q + 2),
        3 => -(2 * q - 4),
        _ => -(2 * q - 13),
    }
}

/// Closed form for [`omega_pair_sum`]: −(q+1)/3 when 9 | q+1, else −(q−2)/3.
///
/// With M = (q+1)/3 the sum is 3·#{k<ℓ ≤ M : 3 | ℓ−k} − C(M, 2).
pub fn omega_pair_closed_form(q: u64) -> i64 {
    let q = q as i64;
    if (q + 1) % 9 == 0 {
        -(q + 1) / 3
    } else {
        -(q - 2) / 3
    }
}

/// Branch key for a gcd-3 triple (u, v, w): whether 3 | v−u, and whether
/// some entry is a multiple of (q+1)/3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Chi6Key {
    pub diff_divisible: bool,
    pub has_multiple: bool,
}

impl Chi6Key {
    pub fn of(q: u64, (u, v, w): Triple) -> Self {
        let third = (q + 1) / 3;
        Chi6Key {
            diff_divisible: (v as i64 - u as i64).rem_euclid(3) == 0,
            has_multiple: [u, v, w].iter().any(|x| x % third == 0),
        }
    }

    /// All four keys in emission order.
    pub fn all() -> [Chi6Key; 4] {
        [
            Chi6Key { diff_divisible: true, has_multiple: true },
            Chi6Key { diff_divisible: true, has_multiple: false },
            Chi6Key { diff_divisible: false, has_multiple: true },
            Chi6Key { diff_divisible: false, has_multiple: false },
        ]
    }

    pub fn label(self) -> &'static str {
        match (self.diff_divisible, self.has_multiple) {
            (true, true) => "v-u=0 mod 3, multiple of (q+1)/3",
            (true, false) => "v-u=0 mod 3, no multiple of (q+1)/3",
            (false, true) => "v-u!=0 mod 3, multiple of (q+1)/3",
            (false, false) => "v-u!=0 mod 3, no multiple of (q+1)/3",
        }
    }

    /// Closed form for the ordered sum in this branch, times 3.
    ///
    /// The v−u ≢ 0 branch with a multiple of (q+1)/3 is (8−q)/3.
    pub fn closed_form_times3(self, q: u64) -> i64 {
        let q = q as i64;
        match (self.diff_divisible, self.has_multiple) {
            (true, true) => -(q + 1),
            (true, false) => 0,
            (false, true) => 8 - q,
            (false, false) => 9,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chi6Sum {
    pub value: BigInt,
    pub key: Chi6Key,
}

/// `Σ_{(k,ℓ,m)∈S} e^{uk+vℓ+wm}` over every ordering of every triple of T
/// (gcd 3), together with its branch key.
pub fn chi6_sum(q: u64, triple: Triple) -> Result<Chi6Sum, TriplesError> {
    check_q(q)?;
    if GcdCase::of(q) != GcdCase::Three {
        return Err(TriplesError::NeedsGcdThree(q));
    }
    let t = enumerate_t(q)?;
    if !t.contains(triple) {
        return Err(TriplesError::NotInT(triple.0, triple.1, triple.2));
    }
    Ok(Chi6Sum { value: ordered_sum(&t, triple)?, key: Chi6Key::of(q, triple) })
}

/// `−3(ω^{u−v} + ω^{v−u})`: −6 when u ≡ v (mod 3), else 3.
pub fn chi6_gamma3_value(u: i64, v: i64) -> BigInt {
    let z = -(CycInt::from_int(3, 3) * (root_power(3, u - v) + root_power(3, v - u)));
    z.to_integer().expect("sums of cube roots paired with conjugates are integers")
}
