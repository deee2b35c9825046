//! Finite fields GF(p^m) in a dense polynomial basis.
//!
//! Fields here are tiny (the unitary groups we enumerate live over GF(q²)
//! with q ≤ 7), so elements are plain coefficient vectors and every
//! operation reduces against the modulus directly.

use std::fmt;

use thiserror::Error;

/// Largest field order `field_build` accepts.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field too large: {p}^{m} exceeds {MAX_FIELD_ORDER}")]
    FieldTooLarge { p: u64, m: u32 },
    #[error("no quadratic subfield structure: degree {0} is odd")]
    NoQuadraticSubfield(u32),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^m` with `p` prime, or returns `None`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut m = 0;
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

/// An element of GF(p^m): coefficients of a polynomial of degree < m,
/// lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqElem {
    coeffs: Vec<u32>,
}

impl FqElem {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

/// Arithmetic context for GF(p^m).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCtx {
    p: u64,
    m: u32,
    /// Monic modulus, lowest degree first, length m + 1.
    modulus: Vec<u32>,
    order: u64,
}

impl FieldCtx {
    /// Builds GF(p^m) over the smallest monic irreducible modulus of degree
    /// `m`, comparing coefficient sequences from the highest non-leading
    /// coefficient down to the constant term.
    ///
    /// Degree 1 uses the modulus `x`, so prime fields share the same code
    /// path as proper extensions.
    pub fn build(p: u64, m: u32) -> Result<Self, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        if m == 0 {
            return Err(GfError::ZeroDegree);
        }
        let order = checked_pow(p, m)
            .filter(|&o| o <= MAX_FIELD_ORDER)
            .ok_or(GfError::FieldTooLarge { p, m })?;

        // Enumerate monic candidates by their base-p encoding; the constant
        // term is the least significant digit.
        let modulus = (0..order)
            .map(|code| {
                let mut f = digits(code, p, m as usize);
                f.push(1);
                f
            })
            .find(|f| is_irreducible(f, p))
            .expect("an irreducible polynomial of every degree exists");
        Ok(Self { p, m, modulus, order })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn zero(&self) -> FqElem {
        FqElem { coeffs: vec![0; self.m as usize] }
    }

    pub fn one(&self) -> FqElem {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> FqElem {
        let mut e = self.zero();
        e.coeffs[0] = n.rem_euclid(self.p as i64) as u32;
        e
    }

    /// Builds an element from coefficients, reducing each mod p.
    pub fn elem(&self, coeffs: &[u32]) -> FqElem {
        assert!(coeffs.len() <= self.m as usize, "too many coefficients");
        let mut e = self.zero();
        for (dst, &c) in e.coeffs.iter_mut().zip(coeffs) {
            *dst = c % self.p as u32;
        }
        e
    }

    /// Index of `x` in `0..order`, constant term least significant.
    pub fn encode(&self, x: &FqElem) -> usize {
        x.coeffs
            .iter()
            .rev()
            .fold(0usize, |acc, &c| acc * self.p as usize + c as usize)
    }

    pub fn decode(&self, index: usize) -> FqElem {
        FqElem { coeffs: digits(index as u64, self.p, self.m as usize) }
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        (0..self.order as usize).map(move |i| self.decode(i))
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let p = self.p as u32;
        FqElem {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| (x + y) % p).collect(),
        }
    }

    pub fn neg(&self, a: &FqElem) -> FqElem {
        let p = self.p as u32;
        FqElem { coeffs: a.coeffs.iter().map(|&x| (p - x) % p).collect() }
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let p = self.p;
        let m = self.m as usize;
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // reduce against the monic modulus from the top down
        for top in (m..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (k, &f) in self.modulus[..m].iter().enumerate() {
                let idx = top - m + k;
                prod[idx] = (prod[idx] + (p - c) * f as u64) % p;
            }
        }
        if m == 1 {
            // modulus x would kill constants; degree-0 products need no reduction
            return FqElem { coeffs: vec![prod[0] as u32] };
        }
        FqElem { coeffs: prod[..m].iter().map(|&c| c as u32).collect() }
    }

    pub fn pow(&self, a: &FqElem, mut e: u64) -> FqElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &FqElem) -> Option<FqElem> {
        if a.is_zero() {
            return None;
        }
        Some(self.pow(a, self.order - 2))
    }

    /// `q` such that this field is GF(q²).
    pub fn half_order(&self) -> Result<u64, GfError> {
        if self.m % 2 != 0 {
            return Err(GfError::NoQuadraticSubfield(self.m));
        }
        Ok(self.p.pow(self.m / 2))
    }

    /// The involution x ↦ x^q of GF(q²).
    pub fn frobenius_q(&self, x: &FqElem) -> Result<FqElem, GfError> {
        let q = self.half_order()?;
        Ok(self.pow(x, q))
    }

    /// The norm x^(q+1) from GF(q²) to GF(q).
    pub fn hermitian_norm(&self, x: &FqElem) -> Result<FqElem, GfError> {
        let q = self.half_order()?;
        Ok(self.pow(x, q + 1))
    }

    /// Cayley tables over encoded indices, for hot loops.
    pub fn tables(&self) -> FieldTables {
        let n = self.order as usize;
        assert!(n <= u16::MAX as usize + 1, "tables need order ≤ 65536");
        let elems: Vec<FqElem> = self.elements().collect();
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                add[i * n + j] = self.encode(&self.add(a, b)) as u16;
                mul[i * n + j] = self.encode(&self.mul(a, b)) as u16;
            }
        }
        let inv = elems
            .iter()
            .map(|a| self.inv(a).map_or(0, |b| self.encode(&b) as u16))
            .collect();
        let neg = elems.iter().map(|a| self.encode(&self.neg(a)) as u16).collect();
        let conj = match self.half_order() {
            Ok(q) => elems.iter().map(|a| self.encode(&self.pow(a, q)) as u16).collect(),
            Err(_) => (0..n as u16).collect(),
        };
        FieldTables { order: n, add, mul, inv, neg, conj }
    }
}

/// Precomputed operation tables over encoded field elements.
///
/// Index 0 is zero and index 1 is one (encoding is base-p digits with the
/// constant term least significant).
#[derive(Debug, Clone)]
pub struct FieldTables {
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    inv: Vec<u16>,
    neg: Vec<u16>,
    conj: Vec<u16>,
}

impl FieldTables {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    /// Inverse of a nonzero element (0 maps to 0).
    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        self.inv[a as usize]
    }

    /// x ↦ x^q, or the identity when the field has odd degree.
    #[inline]
    pub fn conj(&self, a: u16) -> u16 {
        self.conj[a as usize]
    }

    /// x·x^q.
    #[inline]
    pub fn norm(&self, a: u16) -> u16 {
        self.mul(a, self.conj(a))
    }
}

fn checked_pow(p: u64, m: u32) -> Option<u64> {
    (0..m).try_fold(1u64, |acc, _| acc.checked_mul(p))
}

fn digits(mut code: u64, p: u64, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((code % p) as u32);
        code /= p;
    }
    out
}

// Dense polynomials over Z/p, lowest degree first, no trailing zeros.

fn trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        for (k, &bk) in b.iter().enumerate() {
            let idx = dr - db + k;
            r[idx] = (r[idx] + (p - c) * bk) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem(&prod, f, p)
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Ben-Or: f of degree m is irreducible iff gcd(f, x^(p^k) − x) = 1 for
/// every k ≤ m/2.
fn is_irreducible(f: &[u32], p: u64) -> bool {
    let f: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let m = f.len() - 1;
    if m == 1 {
        return true;
    }
    let x = vec![0, 1];
    let mut power = x.clone(); // x^(p^k) mod f
    for _ in 1..=m / 2 {
        let mut next = vec![1];
        let mut base = power.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                next = poly_mulmod(&next, &base, &f, p);
            }
            base = poly_mulmod(&base, &base, &f, p);
            e >>= 1;
        }
        power = next;
        let mut diff = power.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        let g = poly_gcd(&f, &trim(diff), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}
